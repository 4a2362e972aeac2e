//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero unless the failing set is exactly the documented one.
//!
//! Run with `cargo test -p cliffsplit-cli --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::SeedableRng;

use cliffsplit::algebra::{Blade, Signature};
use cliffsplit::calculus::{dirac, SplittingField};
use cliffsplit::dirac::{quaternion_isomorphism_check, sigma_validate, AdaptedBasis, SigmaElement};
use cliffsplit::grading::{generate_tables, project_contraction_form, split_product_laws, Grading, TableKind};
use cliffsplit::hodge::{dual_alpha, dual_alpha_printed, dual_grading_rows, Orientation};
use cliffsplit::scalars::Rational;
use cliffsplit::verify::random::{self, Rng8};
use cliffsplit::verify::{self, Report, Status, Suite, SuiteConfig};

/// Criteria that cannot hold as stated, with the reason. Each one is still
/// evaluated literally and printed as FAIL.
const UNATTAINABLE: &[(u8, &str)] = &[(
    5,
    "the printed sign (-1)^(k(d-1)) of α_τ is wrong on odd grades; the identity holds with (-1)^(kd)",
)];

struct Verdict {
    pass: bool,
    detail: String,
    /// Extra condition for an unattainable criterion: the failure must be
    /// exactly the documented one.
    explained: bool,
}

impl Verdict {
    fn new(pass: bool, detail: String) -> Self {
        Verdict {
            pass,
            detail,
            explained: false,
        }
    }
}

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn run(suite: Suite, signature: Signature, trials: usize, seed: u64, degree: u32) -> Report {
    verify::run(&SuiteConfig::new(suite, signature, trials, seed, degree).unwrap())
}

/// Every listed record exists, passes and saw at least `min` trials.
fn records_pass(report: &Report, suite: &str, ids: &[&str], min: usize) -> Result<(), String> {
    let s = report.suite(suite).ok_or(format!("no {suite} suite"))?;
    for id in ids {
        let r = s.record(id).ok_or(format!("no record {id}"))?;
        if r.status != Status::Pass {
            return Err(format!("{id}: {} failures, residual {}", r.failures, r.residual));
        }
        if r.trials < min {
            return Err(format!("{id}: only {} trials", r.trials));
        }
    }
    Ok(())
}

fn c1_tables() -> Verdict {
    let t = generate_tables(&TableKind::ALL);
    let rows = t.rows.len();
    let matches = t.matches();
    let tetra = generate_tables(&[TableKind::Tetravectorial]);
    let pass = matches * 10 >= rows * 9 && t.self_consistent() && tetra.mismatches() == 0;
    Verdict::new(
        pass,
        format!(
            "{matches}/{rows} rows match, {} paper_mismatch, self-consistent: {}, tetravectorial mismatches: {}",
            t.mismatches(),
            t.self_consistent(),
            tetra.mismatches()
        ),
    )
}

fn c2_projectors() -> Verdict {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (p, qq) in [(1, 3), (3, 0), (2, 2), (0, 3)] {
        let s = sig(p, qq);
        let mut rng = Rng8::seed_from_u64(20 + p as u64 * 7 + qq as u64);
        for _ in 0..500 {
            let psi = random::multivector(s, &mut rng);
            for _ in 0..5 {
                let n = random::any_unit_vector(s, &mut rng);
                let g = Grading::vector(&n).unwrap();
                let split = g.project(&psi).unwrap();
                let (par, perp) = (&split.parallel, &split.orthogonal);
                let ok = g.parallel(par).unwrap() == *par
                    && g.orthogonal(perp).unwrap() == *perp
                    && g.parallel(perp).unwrap().is_zero()
                    && g.orthogonal(par).unwrap().is_zero()
                    && par + perp == psi
                    && project_contraction_form(&n, &psi).unwrap() == split;
                checked += 1;
                if !ok && bad.len() < 3 {
                    bad.push(format!("Cl({p},{qq}) n = {n}, psi = {psi}"));
                }
            }
        }
    }
    let suite_ok = [(1, 3), (3, 0), (2, 2), (0, 3)]
        .into_iter()
        .all(|(p, qq)| run(Suite::Projectors, sig(p, qq), 500, 7, 3).passed());
    Verdict::new(
        bad.is_empty() && suite_ok,
        format!(
            "{checked} (multivector, splitter) pairs over 4 signatures, {} failures; projectors suite 500 trials x 4: {}",
            bad.len(),
            if suite_ok { "all pass" } else { "failures" }
        ),
    )
}

fn c3_products() -> Verdict {
    let report = run(Suite::Products, Signature::spacetime(), 500, 3, 3);
    let ids = [
        "products.product_parallel",
        "products.product_orthogonal",
        "products.wedge_parallel",
    ];
    let mut result = records_pass(&report, "products", &ids, 500);
    let s = Signature::spacetime();
    let mut rng = Rng8::seed_from_u64(33);
    for _ in 0..100 {
        let n = random::any_unit_vector(s, &mut rng);
        let (phi, psi) = (random::multivector(s, &mut rng), random::multivector(s, &mut rng));
        let g = Grading::vector(&n).unwrap();
        if !split_product_laws(&g, &phi, &psi).unwrap().holds() && result.is_ok() {
            result = Err(format!("direct check failed: n = {n}, phi = {phi}, psi = {psi}"));
        }
    }
    match result {
        Ok(()) => Verdict::new(
            true,
            "500 suite pairs + 100 direct pairs in Cl(1,3), zero residual".into(),
        ),
        Err(e) => Verdict::new(false, e),
    }
}

fn c4_metric() -> Verdict {
    let report = run(Suite::Metric, Signature::spacetime(), 50, 4, 3);
    let ids = ["metric.h_annihilates_n", "metric.reconstructs", "metric.h_definition"];
    match records_pass(&report, "metric", &ids, 20) {
        Ok(()) => Verdict::new(true, "50 rational unit timelike n in Cl(1,3)".into()),
        Err(e) => Verdict::new(false, e),
    }
}

fn c5_dual_grading() -> Verdict {
    let s = Signature::spacetime();
    let mut rng = Rng8::seed_from_u64(55);
    let mut printed_failures = Vec::new();
    let mut corrected_ok = true;
    let mut odd_only = true;
    for _ in 0..8 {
        let n = random::unit_vector(s, 1, &mut rng).unwrap();
        let o = Orientation::new(&n).unwrap();
        let before = printed_failures.len();
        for row in dual_grading_rows(&o) {
            corrected_ok &= row.matches;
            if !row.printed_matches {
                let b: Blade = Blade::all(s).into_iter().find(|b| b.to_string() == row.blade).unwrap();
                odd_only &= b.grade() % 2 == 1;
                printed_failures.push(row.blade);
            }
        }
        // Every odd-grade blade must fail the printed form.
        let odd_blades = Blade::all(s).into_iter().filter(|b| b.grade() % 2 == 1).count();
        odd_only &= printed_failures.len() - before == odd_blades;
    }

    // Field level, constant and boosted n, literal printed sign.
    let boost = SplittingField::boost(s, 1).unwrap();
    let mut field_printed_bad = 0;
    let mut field_corrected_bad = 0;
    let fields = 120;
    for t in 0..fields {
        let n = if t % 2 == 0 {
            SplittingField::constant(&random::unit_vector(s, 1, &mut rng).unwrap()).unwrap()
        } else {
            boost.clone()
        };
        let k = t % 5;
        let psi = random::homogeneous_field(s, k, 2, &mut rng);
        let a_n = dirac(&n.grading().alpha(&psi));
        if a_n != dirac(&dual_alpha_printed(&psi, n.orientation())) {
            field_printed_bad += 1;
            odd_only &= k % 2 == 1;
        }
        if a_n != dirac(&dual_alpha(&psi, n.orientation())) {
            field_corrected_bad += 1;
        }
    }
    let report = run(Suite::Dual, s, 100, 1, 3);
    let suite_ok = records_pass(
        &report,
        "dual",
        &[
            "dual.blade_alpha_routes",
            "dual.alpha_routes",
            "dual.dirac_alpha_routes",
        ],
        100,
    );
    corrected_ok &= field_corrected_bad == 0 && suite_ok.is_ok();
    let pass = printed_failures.is_empty() && field_printed_bad == 0;
    let mut v = Verdict::new(
        pass,
        format!(
            "as printed: {} blade failures over 8 unit n (odd grades only: {odd_only}), {field_printed_bad}/{fields} fields disagree; \
             with (-1)^(kd): blades and {fields} fields all agree: {corrected_ok}",
            printed_failures.len()
        ),
    );
    v.explained = odd_only && corrected_ok;
    v
}

fn c6_calculus() -> Verdict {
    let s = Signature::spacetime();
    let report = run(Suite::Calculus, s, 400, 6, 3);
    let ids = [
        "calculus.d_squared",
        "calculus.delta_squared",
        "calculus.lie_d",
        "calculus.d_perp_perp",
        "calculus.omega_grade",
        "calculus.dn_commutator",
        "calculus.d_perp_par",
        "calculus.lie_d_parallel_commute_geodesic",
    ];
    if let Err(e) = records_pass(&report, "calculus", &ids, 400) {
        return Verdict::new(false, e);
    }
    if !report.passed() {
        return Verdict::new(false, "an asserted calculus check failed".into());
    }
    let families = &report.suite("calculus").unwrap().ledger;
    let geodesic = families
        .get("calculus.lie_d_parallel_commutes.constant_n")
        .and_then(|m| m.get("commutes"));

    let dual = run(Suite::Dual, s, 200, 6, 3);
    let ledger = &dual.suite("dual").unwrap().ledger;
    let mut constants: Vec<String> = ledger
        .iter()
        .filter(|(k, _)| k.starts_with("dual.dirac_alpha_compact.constant"))
        .flat_map(|(_, v)| v.keys().filter(|c| c.parse::<Rational>().is_ok()).cloned())
        .collect();
    constants.sort();
    constants.dedup();
    let formula_records = dual
        .suite("dual")
        .unwrap()
        .records
        .iter()
        .filter(|r| r.check.contains("_formula.") || r.check.contains("_compact."))
        .count();
    let confirmed = constants.iter().any(|c| c == "-2");
    Verdict::new(
        !constants.is_empty() && formula_records > 0 && dual.passed(),
        format!(
            "400 trials (200 constant n, 200 boosted n), 8 asserted identities pass; [£n, d∥] = 0 on {} geodesic fields; \
             sign ledger: {formula_records} formula records, fitted constants {{{}}}, -2 confirmed: {confirmed}",
            geodesic.copied().unwrap_or(0),
            constants.join(", ")
        ),
    )
}

/// Quaternion product on (1, i, j, k) written out by hand.
fn quaternion(a: usize, b: usize) -> (i8, usize) {
    match (a, b) {
        (0, x) | (x, 0) => (1, x),
        (x, y) if x == y => (-1, 0),
        (1, 2) => (1, 3),
        (2, 3) => (1, 1),
        (3, 1) => (1, 2),
        (2, 1) => (-1, 3),
        (3, 2) => (-1, 1),
        (1, 3) => (-1, 2),
        _ => unreachable!(),
    }
}

fn c7_dirac() -> Verdict {
    const LABELS: [&str; 8] = ["P+", "iP+", "jP+", "kP+", "P-", "iP-", "jP-", "kP-"];
    let basis = AdaptedBasis::standard();
    let table = quaternion_isomorphism_check(&basis);
    let mut table_ok = table.table.len() == 64 && table.holds();
    for e in &table.table {
        let a = LABELS.iter().position(|l| *l == e.left).unwrap();
        let b = LABELS.iter().position(|l| *l == e.right).unwrap();
        let expected = if a / 4 != b / 4 {
            "0".to_string()
        } else {
            let (s, idx) = quaternion(a % 4, b % 4);
            let label = LABELS[4 * (a / 4) + idx];
            if s < 0 {
                format!("-{label}")
            } else {
                label.to_string()
            }
        };
        table_ok &= e.expected == expected;
    }
    let accept = sigma_validate(&SigmaElement::new(q(3, 5), q(4, 5), q(0, 1)), &basis);
    let reject = !sigma_validate(&SigmaElement::new(q(1, 1), q(1, 1), q(0, 1)), &basis);
    let report = run(Suite::Dirac, Signature::spacetime(), 100, 7, 3);
    let suite = records_pass(
        &report,
        "dirac",
        &[
            "dirac.quaternion_table",
            "dirac.sigma_fixtures",
            "dirac.general_split_relation",
        ],
        100,
    );
    Verdict::new(
        table_ok && accept && reject && suite.is_ok(),
        format!(
            "64-product H⊕H table: {table_ok}; (3/5,4/5,0) accepted: {accept}; (1,1,0) rejected: {reject}; \
             two-route residuals on 100 spinor fields: {}",
            suite.map(|_| "agree".to_string()).unwrap_or_else(|e| e)
        ),
    )
}

fn c8_determinism() -> Verdict {
    let run_cli = || {
        Command::new(env!("CARGO_BIN_EXE_cliffsplit"))
            .args(["verify", "--suite", "all", "--seed", "8", "--trials", "4"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run_cli(), run_cli());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    let ok = a.status.success() && b.status.success();
    Verdict::new(
        same && ok,
        format!(
            "two runs, {} bytes each, identical: {same}, exit 0: {ok}",
            a.stdout.len()
        ),
    )
}

type Criterion = (u8, &'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "grading tables", c1_tables),
        (2, "projector algebra", c2_projectors),
        (3, "product splitting", c3_products),
        (4, "metric split", c4_metric),
        (5, "dual grading", c5_dual_grading),
        (6, "calculus identities", c6_calculus),
        (7, "Dirac sector", c7_dirac),
        (8, "determinism", c8_determinism),
    ];
    let mut unexpected = Vec::new();
    for (id, name, f) in criteria {
        let start = Instant::now();
        let v = f();
        let secs = start.elapsed().as_secs_f64();
        println!(
            "{} criterion {id} ({name}, {secs:.1}s): {}",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
        let documented = UNATTAINABLE.iter().find(|(u, _)| *u == id);
        match (v.pass, documented) {
            (true, None) => {}
            (false, Some((_, why))) if v.explained => println!("     known: {why}"),
            (false, Some(_)) => unexpected.push(format!("criterion {id} fails differently than documented")),
            (false, None) => unexpected.push(format!("criterion {id} failed")),
            (true, Some(_)) => unexpected.push(format!("criterion {id} now passes; update UNATTAINABLE")),
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria pass except the documented unattainable ones");
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("acceptance: {u}");
        }
        ExitCode::FAILURE
    }
}
