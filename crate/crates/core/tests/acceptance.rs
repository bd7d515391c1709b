//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if any criterion fails in a way not documented in the README.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cantor_tableaux::enumeration::report::CensusRecord;
use cantor_tableaux::enumeration::{
    bicantorian_classes, census, census_at, closed_form_c, count_bicantorian, count_cantorian, ratio_b_over_c,
    CensusOptions,
};
use cantor_tableaux::equivalence::{apply, class_cardinality, GroupElement};
use cantor_tableaux::hypergraph::{
    build_hypergraph, coloring_isomorphic, converse_counterexample_check, count_k, is_intersecting,
    proper_cycle_colorings, psi, psi_inverse,
};
use cantor_tableaux::oracle::{oracle_all_tableaux, oracle_class_size, oracle_count_bicantorian, OracleTester};
use cantor_tableaux::permanent::{is_bicantorian, PermanentTester};
use cantor_tableaux::{Budget, Result, Tableau};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(PartialEq)]
enum Status {
    Pass,
    Fail,
    /// Red against the published value, with the computed value confirmed
    /// independently. Listed under "Known deviations" in the README.
    KnownFail,
    Declared,
}

struct Verdict {
    status: Status,
    detail: String,
}

fn verdict(problems: Vec<String>, ok_detail: String) -> Verdict {
    if problems.is_empty() {
        Verdict {
            status: Status::Pass,
            detail: ok_detail,
        }
    } else {
        Verdict {
            status: Status::Fail,
            detail: problems.join("; "),
        }
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn t(rows: &[&str], s: usize) -> Tableau {
    Tableau::from_digit_rows(rows, s).unwrap()
}

fn options() -> CensusOptions {
    CensusOptions::new(Budget::default())
}

fn random_tableau(rng: &mut ChaCha8Rng, n: usize, s: usize) -> Tableau {
    let cells = (0..n * n).map(|_| rng.gen_range(1..=s as u8)).collect();
    Tableau::new(n, s, cells).unwrap()
}

fn within(limit: Duration, start: Instant, problems: &mut Vec<String>) {
    if start.elapsed() > limit {
        problems.push(format!("took {:.1?}, limit {limit:?}", start.elapsed()));
    }
}

fn criterion_1() -> Result<Verdict> {
    let start = Instant::now();
    let budget = Budget::default();
    let mut problems = Vec::new();
    let mut seen = Vec::new();
    for (n, s) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let oracle = OracleTester::new(n);
        let mut tester = PermanentTester::new();
        let (mut total, mut bad) = (0u64, 0u64);
        for x in oracle_all_tableaux(n, s, &budget)? {
            total += 1;
            bad += (tester.is_cantorian(&x) != oracle.is_cantorian(&x)) as u64;
        }
        if bad > 0 {
            problems.push(format!("({n},{s}): {bad} of {total} disagree"));
        }
        seen.push(total.to_string());
    }
    within(Duration::from_secs(60), start, &mut problems);
    Ok(verdict(
        problems,
        format!("matching agrees with permutation enumeration on {} tableaux", seen.join(" + ")),
    ))
}

fn criterion_2() -> Result<Verdict> {
    let start = Instant::now();
    let o = options();
    let cells: [(usize, usize, u64); 8] = [
        (2, 2, 4),
        (3, 2, 24),
        (4, 2, 1744),
        (5, 2, 88480),
        (2, 3, 36),
        (3, 3, 47 * 4 * 27),
        (3, 4, 207 * 9 * 64),
        (4, 3, 25036 * 4 * 81),
    ];
    let mut problems = Vec::new();
    for (n, s, want) in cells {
        let got = count_cantorian(n, s, &o)?;
        if got != big(want) {
            problems.push(format!("C({n},{s}) = {got}, expected {want}"));
        }
    }
    within(Duration::from_secs(600), start, &mut problems);
    Ok(verdict(problems, "8 totals exact, largest C(4,3) = 8111664".into()))
}

/// Monte Carlo estimate of the Cantorian fraction at (5,3) using only the
/// permutation-enumeration tester.
fn monte_carlo_5_3(samples: u64) -> (f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let oracle = OracleTester::new(5);
    let hits = (0..samples)
        .filter(|_| oracle.is_cantorian(&random_tableau(&mut rng, 5, 3)))
        .count() as f64;
    let p = hits / samples as f64;
    (p, (p * (1.0 - p) / samples as f64).sqrt())
}

fn criterion_3() -> Result<Verdict> {
    let start = Instant::now();
    let o = options();
    // (n, s, classes, tested, total)
    let published: [(usize, usize, usize, u64, u64); 12] = [
        (2, 2, 1, 1, 4),
        (2, 3, 1, 1, 36),
        (2, 4, 1, 1, 144),
        (2, 5, 1, 1, 400),
        (2, 6, 1, 1, 900),
        (3, 2, 1, 3, 24),
        (3, 3, 5, 9, 5076),
        (4, 2, 6, 21, 1744),
        (4, 3, 56, 171, 8111664),
        (4, 4, 107, 275, 803613 * 9 * 256),
        (5, 2, 11, 165, 88480),
        (5, 3, 1873, 12574, 16304200 * 4 * 243),
    ];
    let mut problems = Vec::new();
    let mut tested_notes = Vec::new();
    let mut red = None;
    for (n, s, classes, tested, total) in published {
        let r = census(n, s, &o)?;
        let line = format!(
            "({n},{s}) {}/{} total {}",
            r.representative_count, r.tested_count, r.total_cantorian
        );
        if (n, s) == (5, 3) {
            red = Some((r, classes, tested, total));
            continue;
        }
        if r.representative_count != classes || r.total_cantorian != big(total) {
            problems.push(format!("{line}, published {classes}/{tested} total {total}"));
        } else if r.tested_count != tested {
            tested_notes.push(format!("({n},{s}) tested {} vs {tested}", r.tested_count));
        }
    }
    within(Duration::from_secs(1800), start, &mut problems);
    if !problems.is_empty() {
        return Ok(verdict(problems, String::new()));
    }

    let (r, classes, tested, total) = red.unwrap();
    let computed = (1875usize, 12691u64, 82368213120u64);
    if (r.representative_count, r.tested_count, r.total_cantorian.clone()) != (computed.0, computed.1, big(computed.2)) {
        return Ok(verdict(
            vec![format!(
                "(5,3) changed: {}/{} total {}",
                r.representative_count, r.tested_count, r.total_cantorian
            )],
            String::new(),
        ));
    }
    let samples = 200_000;
    let space = 3f64.powi(25);
    let (p, se) = monte_carlo_5_3(samples);
    let z_computed = (p - computed.2 as f64 / space) / se;
    let z_published = (p - total as f64 / space) / se;
    if z_computed.abs() > 4.0 || z_published.abs() < 20.0 {
        return Ok(verdict(
            vec![format!(
                "(5,3) brute-force sample fraction {p:.5} does not single out the computed total (z {z_computed:.1} vs {z_published:.1})"
            )],
            String::new(),
        ));
    }
    Ok(Verdict {
        status: Status::KnownFail,
        detail: format!(
            "(5,3) gives {}/{} total {}, published {classes}/{tested} total {total}; \
             brute-force sample of {samples} tableaux gives fraction {p:.5} ± {se:.5}, \
             {z_computed:.1} s.e. from the computed total and {:.0} s.e. from the published one. \
             All other cells exact in classes and totals; tested differs at {}",
            r.representative_count,
            r.tested_count,
            r.total_cantorian,
            z_published.abs(),
            tested_notes.join(", ")
        ),
    })
}

fn criterion_4() -> Result<Verdict> {
    let start = Instant::now();
    let o = options();
    let mut problems = Vec::new();
    for n in 2..=4 {
        for s in 2..=6 {
            let (closed, counted) = (closed_form_c(n, s)?, census_at(n, s, &o)?.total_cantorian);
            if closed != counted {
                problems.push(format!("C({n},{s}): polynomial {closed}, census {counted}"));
            }
        }
    }
    within(Duration::from_secs(1800), start, &mut problems);
    Ok(verdict(problems, "polynomials equal census for n = 2..4, s = 2..6".into()))
}

fn criterion_5() -> Result<Verdict> {
    let start = Instant::now();
    let budget = Budget::default();
    let mut problems = Vec::new();
    for s in 2..=6usize {
        let r = class_cardinality(&t(&["11", "22"], s), &budget)?;
        let want = s * s * (s - 1) * (s - 1);
        if r.cardinality != big(want as u64) || r.eta != 0 || r.theta != 2 {
            problems.push(format!(
                "R_2 at s={s}: size {} eta {} theta {}",
                r.cardinality, r.eta, r.theta
            ));
        }
    }
    let named = [
        ("R_1", t(&["111", "111", "222"], 3), 648u64),
        ("R_2", t(&["111", "112", "223"], 3), 1944),
        ("R_3", t(&["111", "122", "233"], 3), 1944),
        ("R_4", t(&["111", "122", "133"], 3), 324),
        ("R_5", t(&["111", "222", "333"], 3), 216),
        ("T_1", t(&["113", "112", "231"], 3), 1944),
    ];
    for (name, x, size) in &named {
        let r = class_cardinality(x, &budget)?;
        if r.cardinality != big(*size) {
            problems.push(format!("{name}: {} not {size}", r.cardinality));
        }
        if *name == "R_1" && r.eta != 0 {
            problems.push(format!("R_1 eta {}", r.eta));
        }
        if *name == "R_5" && r.theta != 6 {
            problems.push(format!("R_5 theta {}", r.theta));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let (n, s) = (rng.gen_range(2..=3), rng.gen_range(2..=3));
        let x = random_tableau(&mut rng, n, s);
        let (bfs, formula) = (oracle_class_size(&x, &budget)?, class_cardinality(&x, &budget)?.cardinality);
        if big(bfs) != formula {
            problems.push(format!("{x}: search {bfs}, formula {formula}"));
        }
    }
    within(Duration::from_secs(300), start, &mut problems);
    Ok(verdict(
        problems,
        "R_2 for s = 2..6, R_1..R_5, T_1, eta/theta spot values, 50 random classes by search".into(),
    ))
}

fn criterion_6() -> Result<Verdict> {
    let start = Instant::now();
    let o = options();
    let budget = Budget::default();
    let mut problems = Vec::new();
    let listed = [2, 18, 84, 260, 630];
    for (s, want) in (2..=6u64).zip(listed) {
        let formula = s * (s - 1) * (s * s + 3 - 3 * s);
        if formula != want {
            problems.push(format!("s(s-1)(s^2-3s+3) at s={s} is {formula}, listed {want}"));
        }
    }
    let mut check = |n: usize, s: usize, want: u64, oracle: bool| -> Result<()> {
        let got = count_bicantorian(n, s, &o)?.total_bicantorian;
        if got != big(want) {
            problems.push(format!("B({n},{s}) = {got}, expected {want}"));
        }
        if oracle && oracle_count_bicantorian(n, s, &budget)? != want {
            problems.push(format!("B({n},{s}) brute force disagrees"));
        }
        Ok(())
    };
    for (s, want) in (2..=6).zip(listed) {
        check(2, s, want, true)?;
    }
    check(3, 2, 6, true)?;
    check(3, 3, 2202, true)?;
    check(4, 2, 182, false)?;
    check(5, 2, 4010, false)?;
    let stretch_start = Instant::now();
    check(3, 4, 3 * 4 * 6179, false)?;
    let stretch = stretch_start.elapsed();
    for (n, want) in [(2, "0.5"), (3, "0.25"), (4, "0.104"), (5, "0.045")] {
        let d = ratio_b_over_c(n, 2, &o)?.decimal(3);
        let trimmed = d.trim_end_matches('0');
        if trimmed != want {
            problems.push(format!("B/C({n},2) renders {d}, expected {want}"));
        }
    }
    if start.elapsed() - stretch > Duration::from_secs(1800) {
        problems.push(format!("took {:.1?}", start.elapsed() - stretch));
    }
    Ok(verdict(
        problems,
        "B(2,2..6), B(3,2), B(3,3), B(4,2), B(5,2), stretch B(3,4) = 74148, ratios 0.5 0.25 0.104 0.045".into(),
    ))
}

fn criterion_7() -> Result<Verdict> {
    let o = options();
    let mut problems = Vec::new();
    let mut found = Vec::new();
    for (n, s, want) in [(2, 4, 3), (2, 5, 3), (2, 6, 3), (3, 2, 1), (3, 3, 32), (3, 4, 173)] {
        let got = bicantorian_classes(n, s, &o)?.len();
        found.push(format!("({n},{s})={got}"));
        if got != want {
            problems.push(format!("({n},{s}): {got} classes, published {want}"));
        }
    }
    Ok(verdict(problems, format!("~b classes {}", found.join(" "))))
}

fn criterion_8() -> Result<Verdict> {
    let start = Instant::now();
    let budget = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut problems = Vec::new();
    for n in 2..=5usize {
        for _ in 0..5 {
            let x = random_tableau(&mut rng, n, 3);
            let h = build_hypergraph(&x, &budget)?;
            let deg = (1..n).product::<usize>() + 1;
            if h.regularity() != Some(deg) || h.uniformity() != Some(n) {
                problems.push(format!("{x}: regularity {:?} uniformity {:?}", h.regularity(), h.uniformity()));
            }
        }
    }
    let oracle = OracleTester::new(3);
    for x in oracle_all_tableaux(3, 2, &budget)? {
        if is_intersecting(&build_hypergraph(&x, &budget)?) == oracle.is_cantorian(&x) {
            problems.push(format!("{x}: intersecting disagrees with Cantorian status"));
        }
    }
    for _ in 0..200 {
        let (n, s) = (rng.gen_range(2..=4usize), rng.gen_range(2..=4usize));
        let x = random_tableau(&mut rng, n, s);
        let shuffled = |rng: &mut ChaCha8Rng| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(rng);
            p
        };
        let g = GroupElement {
            row_perm: shuffled(&mut rng),
            col_perm: shuffled(&mut rng),
            col_bijections: (0..n)
                .map(|_| {
                    let mut b: Vec<u8> = (1..=s as u8).collect();
                    b.shuffle(&mut rng);
                    b
                })
                .collect(),
        };
        let y = apply(&x, &g)?;
        if !coloring_isomorphic(&build_hypergraph(&x, &budget)?, &build_hypergraph(&y, &budget)?) {
            problems.push(format!("{x} and {y}: hypergraphs not isomorphic"));
        }
    }
    if let Err(e) = converse_counterexample_check() {
        problems.push(e.to_string());
    }
    for s in 2..=6usize {
        let bs: Vec<Tableau> = oracle_all_tableaux(2, s, &budget)?.filter(is_bicantorian).collect();
        let mut images = bs.iter().map(psi).collect::<Result<Vec<_>>>()?;
        for (b, k) in bs.iter().zip(&images) {
            if &psi_inverse(k, s)? != b {
                problems.push(format!("psi inverse fails on {b}"));
            }
        }
        images.sort();
        if images != proper_cycle_colorings(s) || bs.len() as u64 != count_k(s as u64) {
            problems.push(format!("psi is not onto the proper colorings at s={s}"));
        }
    }
    within(Duration::from_secs(300), start, &mut problems);
    Ok(verdict(
        problems,
        "regular and uniform n = 2..5, intersecting iff non-Cantorian on all 512 (3,2), \
         200 equivalent pairs isomorphic, converse counterexample, psi bijective s = 2..6"
            .into(),
    ))
}

fn criterion_9() -> Result<Verdict> {
    let o = options();
    let start = Instant::now();
    let c62 = count_cantorian(6, 2, &o)?;
    let elapsed = start.elapsed();
    let c45 = count_cantorian(4, 5, &o)?;
    let mut problems = Vec::new();
    if c62 != big(324781 * 64) {
        problems.push(format!("stretch C(6,2) = {c62}, published {}", 324781 * 64));
    }
    if c45 != big(9419224 * 16 * 625) {
        problems.push(format!("C(4,5) = {c45}, published {}", 9419224u64 * 16 * 625));
    }
    if !problems.is_empty() {
        return Ok(verdict(problems, String::new()));
    }
    Ok(Verdict {
        status: Status::Declared,
        detail: format!(
            "n >= 7 at s = 2 not attempted; stretch C(6,2) = {c62} = 324781·2^6 reproduced in {elapsed:.1?}, \
             C(4,5) = {c45} reproduced"
        ),
    })
}

fn criterion_10() -> Result<Verdict> {
    let o = options();
    let render = |workers| -> Result<String> {
        let r = census(4, 3, &o.clone().with_workers(workers))?;
        Ok(serde_json::to_string_pretty(&CensusRecord::from(&r)).unwrap())
    };
    let (one, eight) = (render(1)?, render(8)?);
    let problems = if one == eight {
        vec![]
    } else {
        vec!["structured output differs between 1 and 8 workers".into()]
    };
    Ok(verdict(
        problems,
        format!("(4,3) structured census byte-identical with 1 and 8 workers ({} bytes)", one.len()),
    ))
}

fn main() -> ExitCode {
    let criteria: [(u8, fn() -> Result<Verdict>); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut unexpected = 0;
    for (k, f) in criteria {
        let start = Instant::now();
        let v = f().unwrap_or_else(|e| Verdict {
            status: Status::Fail,
            detail: e.to_string(),
        });
        let mark = match v.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::KnownFail => "FAIL (known deviation, see README)",
            Status::Declared => "DECLARED",
        };
        if v.status == Status::Fail {
            unexpected += 1;
        }
        println!("criterion {k:>2}: {mark} [{:.1?}] {}", start.elapsed(), v.detail);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criterion(s) failed unexpectedly");
        ExitCode::FAILURE
    }
}
