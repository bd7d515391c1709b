use std::fmt::Write;
use std::io::Read;
use std::path::Path;
use std::time::Duration;

use cantor_tableaux::enumeration::report::{bicensus_line, census_line, factor_bicantorian, CensusRecord, ClassRecord};
use cantor_tableaux::enumeration::{bicantorian_classes, census_at, count_bicantorian, CensusOptions};
use cantor_tableaux::equivalence::{class_cardinality, is_reduced, minimal_reduced};
use cantor_tableaux::hypergraph::{build_hypergraph, is_intersecting};
use cantor_tableaux::model::text::{parse_inline, parse_tableau, write_tableau, write_tableau_compact};
use cantor_tableaux::permanent::{enumerate_permanent, find_witness, permanent_witness, PermanentTester};
use cantor_tableaux::verify::{self, Status};
use cantor_tableaux::{Budget, Error, Result, Tableau, Word};
use serde_json::{json, Value};

use crate::{Cli, Command, Format, Level};

pub struct Output {
    pub text: String,
    pub code: u8,
}

const SCHEMA_VERSION: u32 = 1;

fn options(cli: &Cli) -> Result<CensusOptions> {
    let mut budget = Budget::from_env()?;
    if let Some(m) = cli.max_orbit {
        budget.max_orbit = m;
    }
    if let Some(m) = cli.max_cells {
        budget.max_cells = m;
    }
    if let Some(t) = cli.time_budget {
        budget.time_budget = Some(Duration::from_secs(t));
    }
    let mut o = CensusOptions::new(budget);
    if let Some(w) = cli.workers {
        o = o.with_workers(w as usize);
    }
    Ok(o)
}

fn load(input: &str, alphabet: Option<usize>) -> Result<Tableau> {
    let from_text = |text: &str| -> Result<Tableau> {
        let t = parse_tableau(text)?;
        match alphabet {
            Some(s) if s != t.alphabet_size() => t.with_alphabet(s),
            _ => Ok(t),
        }
    };
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
        return from_text(&text);
    }
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {input}: {e}")))?;
        return from_text(&text).map_err(|e| match e {
            Error::Input(m) => Error::Input(format!("{input}: {m}")),
            other => other,
        });
    }
    if input.contains('.') || input.contains(std::path::MAIN_SEPARATOR) && !input.contains('/') {
        return Err(Error::Input(format!("no such file: {input}")));
    }
    parse_inline(input, alphabet)
}

fn tableau_text(t: &Tableau) -> String {
    write_tableau_compact(t).unwrap_or_else(|| write_tableau(t))
}

fn rows_json(t: &Tableau) -> Value {
    json!({ "n": t.n(), "s": t.alphabet_size(), "rows": t.rows().map(<[u8]>::to_vec).collect::<Vec<_>>() })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn one_based(rows: &[usize]) -> String {
    rows.iter().map(|r| (r + 1).to_string()).collect::<Vec<_>>().join(" ")
}

struct Report {
    command: &'static str,
    inputs: Value,
    results: Value,
    plain: String,
    code: u8,
}

impl Report {
    fn render(self, format: Format) -> Output {
        let text = match format {
            Format::Plain => self.plain,
            Format::Structured => {
                let v = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "inputs": self.inputs,
                    "results": self.results,
                });
                serde_json::to_string_pretty(&v).expect("serializable") + "\n"
            }
        };
        Output { text, code: self.code }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let report = match &cli.command {
        Command::Check {
            input,
            alphabet,
            witness,
        } => check(load(input, *alphabet)?, *witness),
        Command::Permanent { input, alphabet, word } => permanent(load(input, *alphabet)?, word.as_deref(), cli)?,
        Command::Reduce { input, alphabet } => reduce(load(input, *alphabet)?, cli)?,
        Command::Classify { input, alphabet } => classify(load(input, *alphabet)?, cli)?,
        Command::Census {
            n,
            s,
            bicantorian,
            classes,
        } => census(*n, *s, *bicantorian, *classes, &options(cli)?)?,
        Command::Bicensus { n, s } => bicensus(*n, *s, &options(cli)?)?,
        Command::Bclasses { n, s } => bclasses(*n, *s, &options(cli)?)?,
        Command::Hypergraph { input, alphabet } => hypergraph(load(input, *alphabet)?, cli)?,
        Command::Verify { level } => verify_cmd(*level, &options(cli)?),
    };
    Ok(report.render(cli.format))
}

fn check(t: Tableau, witness: bool) -> Report {
    let mut tester = PermanentTester::new();
    let cantorian = tester.is_cantorian(&t);
    let bicantorian = cantorian && tester.is_bicantorian(&t);
    let mut plain = format!("cantorian: {}, bi-cantorian: {}\n", yes(cantorian), yes(bicantorian));
    let mut results = json!({ "cantorian": cantorian, "bicantorian": bicantorian });
    if witness {
        if let Some(w) = find_witness(&t, true) {
            let source = if w.from_column { "column" } else { "row" };
            let _ = writeln!(plain, "witness: {source} word w={} via rows π = {}", w.word, one_based(&w.rows));
            results["witness"] = json!({
                "word": w.word.letters(),
                "from": source,
                "rows": w.rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
            });
        }
    }
    Report {
        command: "check",
        inputs: json!({ "tableau": rows_json(&t) }),
        results,
        plain,
        code: 0,
    }
}

fn permanent(t: Tableau, word: Option<&str>, cli: &Cli) -> Result<Report> {
    let inputs = json!({ "tableau": rows_json(&t), "word": word });
    if let Some(w) = word {
        let w = Word::from_digits(w, t.alphabet_size())?;
        let rows = permanent_witness(&t, &w)?;
        let plain = match &rows {
            Some(r) => format!("{w}: in permanent via rows π = {}\n", one_based(r)),
            None => format!("{w}: not in permanent\n"),
        };
        return Ok(Report {
            command: "permanent",
            inputs,
            results: json!({
                "member": rows.is_some(),
                "rows": rows.map(|r| r.iter().map(|x| x + 1).collect::<Vec<_>>()),
            }),
            plain,
            code: 0,
        });
    }
    let words = enumerate_permanent(&t, &options(cli)?.budget)?;
    let plain = words.iter().map(|w| format!("{w}\n")).collect();
    Ok(Report {
        command: "permanent",
        inputs,
        results: json!({ "words": words.iter().map(Word::letters).collect::<Vec<_>>() }),
        plain,
        code: 0,
    })
}

fn reduce(t: Tableau, cli: &Cli) -> Result<Report> {
    let m = minimal_reduced(&t, &options(cli)?.budget)?;
    Ok(Report {
        command: "reduce",
        inputs: json!({ "tableau": rows_json(&t) }),
        results: json!({
            "minimal_reduced": rows_json(&m),
            "input_is_reduced": is_reduced(&t),
            "input_is_minimal": m == t,
        }),
        plain: tableau_text(&m),
        code: 0,
    })
}

fn classify(t: Tableau, cli: &Cli) -> Result<Report> {
    let r = class_cardinality(&t, &options(cli)?.budget)?;
    let mut plain = String::new();
    let _ = writeln!(plain, "invariant: {}", r.invariant);
    let _ = writeln!(plain, "f: {:?}", r.row_multiplicities);
    let _ = writeln!(plain, "g: {:?}", r.col_multiplicities);
    let _ = writeln!(plain, "eta: {}", r.eta);
    let _ = writeln!(plain, "theta: {}", r.theta);
    let _ = writeln!(plain, "row/column orbit: {}", r.orbit_phi_size);
    let _ = writeln!(plain, "bijection orbit: {}", r.orbit_psi_size);
    let _ = writeln!(plain, "cardinality: {}", r.cardinality);
    let _ = writeln!(plain, "minimal reduced: {}", r.representative);
    let mut record = serde_json::to_value(ClassRecord::from(&r)).expect("serializable");
    record["orbit_phi_size"] = json!(r.orbit_phi_size);
    record["orbit_psi_size"] = json!(r.orbit_psi_size.to_string());
    Ok(Report {
        command: "classify",
        inputs: json!({ "tableau": rows_json(&t) }),
        results: record,
        plain,
        code: 0,
    })
}

fn census(n: usize, s: usize, bicantorian: bool, list: bool, o: &CensusOptions) -> Result<Report> {
    let r = census_at(n, s, o)?;
    let mut plain = census_line(&r) + "\n";
    let mut results = serde_json::to_value(CensusRecord::from(&r)).expect("serializable");
    if list {
        for c in &r.per_class {
            let _ = writeln!(
                plain,
                "  {}  {}  eta={} theta={} size={}",
                c.representative, c.invariant, c.eta, c.theta, c.cardinality
            );
        }
    }
    if bicantorian {
        let b = count_bicantorian(n, s, o)?;
        let _ = writeln!(
            plain,
            "bi-cantorian: {} = {}",
            b.total_bicantorian,
            factor_bicantorian(&b.total_bicantorian, s)
        );
        results["bicantorian"] = json!(b.total_bicantorian.to_string());
    }
    Ok(Report {
        command: "census",
        inputs: json!({ "n": n, "s": s, "bicantorian": bicantorian }),
        results,
        plain,
        code: 0,
    })
}

fn bicensus(n: usize, s: usize, o: &CensusOptions) -> Result<Report> {
    let b = count_bicantorian(n, s, o)?;
    Ok(Report {
        command: "bicensus",
        inputs: json!({ "n": n, "s": s }),
        results: serde_json::to_value(&b).expect("serializable"),
        plain: bicensus_line(&b) + "\n",
        code: 0,
    })
}

fn bclasses(n: usize, s: usize, o: &CensusOptions) -> Result<Report> {
    let classes = bicantorian_classes(n, s, o)?;
    let mut plain = format!("({n},{s}): {} ~b classes\n", classes.len());
    for c in &classes {
        let _ = writeln!(plain, "  {}  size {}", c.representative, c.size);
    }
    Ok(Report {
        command: "bclasses",
        inputs: json!({ "n": n, "s": s }),
        results: json!({
            "count": classes.len(),
            "classes": classes.iter().map(|c| json!({
                "representative": c.representative.rows().map(<[u8]>::to_vec).collect::<Vec<_>>(),
                "size": c.size,
            })).collect::<Vec<_>>(),
        }),
        plain,
        code: 0,
    })
}

fn hypergraph(t: Tableau, cli: &Cli) -> Result<Report> {
    let h = build_hypergraph(&t, &options(cli)?.budget)?;
    let fmt_opt = |x: Option<usize>| x.map_or("no".to_string(), |d| d.to_string());
    let mut plain = String::new();
    let _ = writeln!(plain, "vertices: {}", t.n() * t.n());
    let _ = writeln!(plain, "row blocks: {}", h.row_blocks().len());
    let _ = writeln!(plain, "diagonal blocks: {}", h.diagonal_block_count());
    let _ = writeln!(plain, "uniform: {}", fmt_opt(h.uniformity()));
    let _ = writeln!(plain, "regular: {}", fmt_opt(h.regularity()));
    let _ = writeln!(plain, "|chi(L)|: {}", h.chi_l().len());
    let _ = writeln!(plain, "|chi(P)|: {}", h.chi_p().len());
    let _ = writeln!(plain, "|chi(L) ∩ chi(P)|: {}", h.intersection_size());
    let _ = writeln!(plain, "intersecting: {}", yes(is_intersecting(&h)));
    Ok(Report {
        command: "hypergraph",
        inputs: json!({ "tableau": rows_json(&t) }),
        results: serde_json::to_value(h.record()).expect("serializable"),
        plain,
        code: 0,
    })
}

fn verify_cmd(level: Level, o: &CensusOptions) -> Report {
    let lvl = match level {
        Level::Quick => verify::Level::Quick,
        Level::Full => verify::Level::Full,
    };
    let checks = verify::run(lvl, o);
    let ok = verify::all_passed(&checks);
    let mut plain: String = checks.iter().map(|c| format!("{c}\n")).collect();
    let failed: Vec<_> = checks.iter().filter(|c| c.status == Status::Fail).collect();
    if ok {
        let _ = writeln!(plain, "all checks passed");
    } else {
        let _ = writeln!(plain, "{} check(s) failed", failed.len());
    }
    Report {
        command: "verify",
        inputs: json!({ "level": lvl }),
        results: json!({ "passed": ok, "checks": checks }),
        plain,
        code: if ok { 0 } else { 4 },
    }
}
