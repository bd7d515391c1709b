//! Plain-text tableau files.
//!
//! The first non-blank line holds `n s`. It is followed by `n` rows, either
//! `n` integers separated by single spaces, or (when `s <= 9`) `n` adjacent
//! digits. Rows are listed top to bottom. Lines starting with `#` are ignored.

use itertools::Itertools;

use super::tableau::Tableau;
use crate::error::{Error, Result};

pub fn parse_tableau(text: &str) -> Result<Tableau> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::input("empty tableau file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n_text, s_text] = fields[..] else {
        return Err(Error::input(format!(
            "line {header_no}: expected header `n s`, found `{header}`"
        )));
    };
    let n: usize = n_text
        .parse()
        .map_err(|_| Error::input(format!("line {header_no}, column 1: `{n_text}` is not a size")))?;
    let s: usize = s_text.parse().map_err(|_| {
        Error::input(format!(
            "line {header_no}, column {}: `{s_text}` is not an alphabet size",
            header.find(s_text).unwrap_or(0) + 1
        ))
    })?;
    if n == 0 || s == 0 || s > u8::MAX as usize {
        return Err(Error::input(format!(
            "line {header_no}: need n >= 1 and 1 <= s <= 255"
        )));
    }

    let mut rows = Vec::with_capacity(n);
    for (row_no, (line_no, line)) in lines.by_ref().take(n).enumerate() {
        rows.push(parse_row(line, line_no, row_no + 1, n, s)?);
    }
    if rows.len() != n {
        return Err(Error::input(format!(
            "expected {n} rows, found {}",
            rows.len()
        )));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::input(format!(
            "line {line_no}: unexpected content after row {n}"
        )));
    }
    Tableau::from_rows(&rows, s)
}

fn parse_row(line: &str, line_no: usize, row: usize, n: usize, s: usize) -> Result<Vec<u8>> {
    let trimmed = line.trim();
    let entries: Vec<(usize, &str)> = if n == 1 || trimmed.contains(char::is_whitespace) {
        let mut out = Vec::new();
        let mut col = 0;
        for piece in line.split(' ') {
            col += 1;
            if !piece.is_empty() {
                out.push((col, piece));
            }
            col += piece.len();
        }
        out
    } else {
        if s > 9 {
            return Err(Error::input(format!(
                "line {line_no}: row {row} uses compact digits but s = {s} > 9"
            )));
        }
        trimmed
            .char_indices()
            .map(|(k, _)| (k + 1, &trimmed[k..k + 1]))
            .collect()
    };
    if entries.len() != n {
        return Err(Error::input(format!(
            "line {line_no}: row {row} has {} entries, expected {n}",
            entries.len()
        )));
    }
    entries
        .into_iter()
        .map(|(col, piece)| {
            let value: usize = piece.parse().map_err(|_| {
                Error::input(format!(
                    "line {line_no}, column {col}: `{piece}` in row {row} is not a letter"
                ))
            })?;
            if value == 0 || value > s {
                return Err(Error::input(format!(
                    "line {line_no}, column {col}: letter {value} in row {row} outside 1..={s}"
                )));
            }
            Ok(value as u8)
        })
        .collect()
}

/// Writes the space-separated form.
pub fn write_tableau(t: &Tableau) -> String {
    let mut out = format!("{} {}\n", t.n(), t.alphabet_size());
    for r in t.rows() {
        out.push_str(&r.iter().join(" "));
        out.push('\n');
    }
    out
}

/// Writes the compact digit form; `None` when `s > 9`.
pub fn write_tableau_compact(t: &Tableau) -> Option<String> {
    if t.alphabet_size() > 9 {
        return None;
    }
    let mut out = format!("{} {}\n", t.n(), t.alphabet_size());
    for r in t.rows() {
        out.extend(r.iter().map(|a| char::from(b'0' + a)));
        out.push('\n');
    }
    Some(out)
}

/// Parses an inline tableau such as `11/22` or `1 2/2 1` with alphabet size `s`,
/// or the smallest alphabet (at least 2) holding every letter when `s` is `None`.
pub fn parse_inline(inline: &str, s: Option<usize>) -> Result<Tableau> {
    let raw_rows: Vec<&str> = inline.split('/').map(str::trim).collect();
    let n = raw_rows.len();
    let mut rows = Vec::with_capacity(n);
    for (k, r) in raw_rows.iter().enumerate() {
        let row: Vec<u8> = if r.contains(char::is_whitespace) || r.contains(',') {
            r.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|p| !p.is_empty())
                .map(|p| {
                    p.parse::<u8>()
                        .map_err(|_| Error::input(format!("row {}: `{p}` is not a letter", k + 1)))
                })
                .collect::<Result<_>>()?
        } else {
            r.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::input(format!("row {}: `{c}` is not a digit", k + 1)))
                })
                .collect::<Result<_>>()?
        };
        rows.push(row);
    }
    let s = s.unwrap_or_else(|| {
        rows.iter()
            .flatten()
            .copied()
            .max()
            .map_or(2, |m| (m as usize).max(2))
    });
    Tableau::from_rows(&rows, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spaced_and_compact() {
        let a = parse_tableau("3 3\n1 1 3\n1 1 2\n2 3 1\n").unwrap();
        let b = parse_tableau("# T1\n3 3\n113\n112\n231\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.get(2, 1), 3);
    }

    #[test]
    fn diagnostics_name_the_row() {
        let err = parse_tableau("2 2\n1 2\n1\n").unwrap_err().to_string();
        assert!(err.contains("row 2"), "{err}");
        assert!(err.contains("line 3"), "{err}");
        let err = parse_tableau("2 2\n1 3\n1 1\n").unwrap_err().to_string();
        assert!(err.contains("line 2, column 3"), "{err}");
        let err = parse_tableau("2\n11\n11\n").unwrap_err().to_string();
        assert!(err.contains("header"), "{err}");
        assert!(parse_tableau("2 2\n11\n11\n11\n").is_err());
        assert!(parse_tableau("2 2\n11\n").is_err());
    }

    #[test]
    fn writers_round_trip() {
        let t = parse_inline("113/112/231", Some(3)).unwrap();
        assert_eq!(parse_tableau(&write_tableau(&t)).unwrap(), t);
        assert_eq!(parse_tableau(&write_tableau_compact(&t).unwrap()).unwrap(), t);
        let wide = parse_inline("1 12/3 4", None).unwrap();
        assert_eq!(wide.alphabet_size(), 12);
        assert!(write_tableau_compact(&wide).is_none());
        assert_eq!(parse_tableau(&write_tableau(&wide)).unwrap(), wide);
    }

    #[test]
    fn inline_alphabet_defaults_to_two() {
        assert_eq!(parse_inline("11/11", None).unwrap().alphabet_size(), 2);
        assert!(parse_inline("11/1", None).is_err());
    }
}
