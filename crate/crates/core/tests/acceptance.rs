//! The eleven acceptance criteria, one PASS/FAIL line each.
//!
//! The lines appear in plain `cargo test` output.

use std::io::Write;
use std::time::{Duration, Instant};

use genbound::criteria::{self, Criterion};
use genbound::field::{parse_field_fixture, NumberField, CUBIC_FIXTURE};
use genbound::kernel::{self, CONSTANTS};
use genbound::quadratic::{class_group, enumerate_fundamental_discriminants, FundamentalDiscriminant};
use genbound::sieve::{window_sum_majorant, SieveTable, DEFAULT_SIEVE_LIMIT};
use genbound::verify;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn table_thresholds() -> Outcome {
    let start = Instant::now();
    let printed = [9.96, 10.65, 11.10, 11.34, 11.59, 11.61, 11.68];
    let mut got = Vec::new();
    for (n, want) in (2u32..=8).zip(printed) {
        let v = criteria::delta_alpha_threshold(n, 0.5 / f64::from(n)).map_err(|e| e.to_string())?;
        ensure((v - want).abs() <= 0.05, || format!("n = {n}: {v:.4} vs {want}"))?;
        got.push(format!("{v:.3}"));
    }
    within_time(start, Duration::from_secs(10))?;
    Ok(format!("{} in {:?}", got.join(" "), start.elapsed()))
}

fn truncate(x: f64, decimals: i32) -> f64 {
    let scale = 10f64.powi(decimals);
    (x * scale).trunc() / scale
}

fn printed_coefficients() -> Outcome {
    // direct evaluation of (1/sqrt c)[(1/sqrt c)(c - 2n(c - 1 - log c)) - 2/sqrt K]
    let direct = |n: f64| {
        let c = 1.0 + 0.25 / n;
        let k = 4.0 - 1.0 / (3.0 * n);
        ((c - 2.0 * n * (c - 1.0 - c.ln())) / c.sqrt() - 2.0 / k.sqrt()) / c.sqrt()
    };
    let c2 = criteria::coefficient_of_s(2, 1.125, 4.0 - 1.0 / 6.0).map_err(|e| e.to_string())?;
    let c3 = criteria::coefficient_of_s(3, 1.0 + 1.0 / 12.0, 4.0 - 1.0 / 9.0).map_err(|e| e.to_string())?;
    let l2 = kernel::log_square_coefficient(1.125);
    let l3 = kernel::log_square_coefficient(1.0 + 1.0 / 12.0);
    let rel = |a: f64, b: f64| (a - b).abs() / b.abs();
    ensure(rel(c2, direct(2.0)) < 1e-12 && rel(c3, direct(3.0)) < 1e-12, || "coefficient disagrees with direct evaluation".into())?;
    ensure(truncate(c2, 5) == 0.01125, || format!("n = 2 coefficient {c2}"))?;
    ensure(truncate(c3, 6) == 0.007377, || format!("n = 3 coefficient {c3}"))?;
    ensure(truncate(l2, 5) == 0.15005, || format!("n = 2 log^2 coefficient {l2}"))?;
    ensure(truncate(l3, 5) == 0.15291, || format!("n = 3 log^2 coefficient {l3}"))?;
    Ok(format!("{c2:.7} {c3:.7} {l2:.6} {l3:.6}"))
}

fn f_inequality() -> Outcome {
    if let Some(n) = (2u32..=1_000_000).find(|&n| kernel::f_inequality_gap(n) <= 0.0) {
        return Err(format!("fails at n = {n}"));
    }
    let f2 = kernel::f_objective(1.125, 2).map_err(|e| e.to_string())?.powi(2);
    ensure((f2 - 3.7456).abs() <= 5e-4, || format!("f(9/8, 2)^2 = {f2}"))?;
    Ok(format!("gap > 0 for n <= 10^6; f(9/8, 2)^2 = {f2:.5}"))
}

fn alpha_beta_anchors() -> Outcome {
    let a = kernel::alpha(1000.0).map_err(|e| e.to_string())?;
    let b = kernel::beta(1000.0).map_err(|e| e.to_string())?;
    ensure(a > 1.0 && b > 4.39, || format!("alpha = {a}, beta = {b}"))?;
    ensure((a - 1.1473).abs() <= 1e-3 && (b - 4.3966).abs() <= 1e-3, || format!("alpha = {a}, beta = {b}"))?;
    let mut prev = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut y: f64 = 2.0;
    while y <= 1e10 {
        let (a, b) = (kernel::alpha(y).unwrap(), kernel::beta(y).unwrap());
        ensure(a > prev.0 && b > prev.1, || format!("not increasing at y = {y}"))?;
        ensure(a < CONSTANTS.alpha_limit && b < CONSTANTS.beta_limit, || format!("limit exceeded at y = {y}"))?;
        prev = (a, b);
        y *= 1.05;
    }
    Ok(format!("alpha(1000) = {a:.4}, beta(1000) = {b:.4}"))
}

fn closed_forms() -> Outcome {
    let start = Instant::now();
    let errors = verify::closed_form_errors(20);
    for (name, err) in &errors {
        ensure(*err <= 1e-8, || format!("{name}: relative error {err:e}"))?;
    }
    within_time(start, Duration::from_secs(5))?;
    let worst = errors.iter().map(|(_, e)| *e).fold(0.0, f64::max);
    Ok(format!("worst relative error {worst:.2e} in {:?}", start.elapsed()))
}

fn small_ideal_bound() -> Outcome {
    let ln2 = 2f64.ln();
    let ln3 = 3f64.ln();
    let slope = -(4.0 * ln2 + 16.0 / 9.0 * ln3);
    let constant = 16.0 * 6f64.ln();
    ensure((slope + 4.7257).abs() < 1e-4 && (constant - 28.668).abs() < 1e-3, || format!("({slope}, {constant})"))?;
    for k in 0..1000 {
        let ct = 81.0 * (1e6f64 / 81.0).powf(f64::from(k) / 999.0);
        let exact = slope * ct.sqrt() + constant;
        let library = criteria::small_ideal_bound_exact(ct);
        ensure((exact - library).abs() <= 1e-9 * ct.sqrt(), || format!("library disagrees at cT = {ct}"))?;
        ensure(exact <= -4.72 * ct.sqrt() + 29.0, || format!("bound fails at cT = {ct}"))?;
    }
    Ok(format!("({slope:.4}, {constant:.3}) dominated on 1000 points"))
}

fn prime_window_majorant() -> Outcome {
    let fields: [&[i64]; 4] = [&[1, 0, 1], &[5, 0, 1], &[-1, -1, 0, 1], &[1, 0, 0, 0, 1]];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let samples: Vec<(f64, f64)> = (0..100).map(|_| (rng.gen_range(73.2..1e5), rng.gen_range(1.0..2.0))).collect();
    let mut worst = f64::INFINITY;
    for coeffs in fields {
        let k = NumberField::from_coefficients(coeffs).map_err(|e| e.to_string())?;
        let n = k.degree() as u32;
        let table = k.ideal_table(200_000).map_err(|e| e.to_string())?;
        for &(t, c) in &samples {
            let sum = if c > 1.0 { table.weighted_sum(t, c * t).map_err(|e| e.to_string())?.value } else { 0.0 };
            let bound = window_sum_majorant(t, c, n).map_err(|e| e.to_string())?;
            ensure(sum <= bound, || format!("{coeffs:?} at T = {t}, c = {c}: {sum} > {bound}"))?;
            worst = worst.min(bound - sum);
        }
    }
    Ok(format!("400 cases, smallest slack {worst:.3}"))
}

fn psi_bound() -> Outcome {
    let start = Instant::now();
    let table = SieveTable::new(DEFAULT_SIEVE_LIMIT);
    let report = table.schoenfeld_check(DEFAULT_SIEVE_LIMIT).map_err(|e| e.to_string())?;
    ensure(report.worst_margin >= 0.0, || format!("fails at u = {}", report.worst_at))?;
    within_time(start, Duration::from_secs(60))?;
    Ok(format!("{} points, worst margin {:.3} in {:?}", report.points_checked, report.worst_margin, start.elapsed()))
}

fn small_fields() -> Outcome {
    let discs = enumerate_fundamental_discriminants(80);
    ensure(discs.len() == 49, || format!("{} discriminants", discs.len()))?;
    for d in &discs {
        let bound = 23.0 / 6.0 * (d.value().abs() as f64).ln().powi(2);
        let report = class_group(*d).generated_by_primes_up_to(bound);
        ensure(report.generates, || format!("d = {} not generated below {bound}", d.value()))?;
    }
    let fixtures = parse_field_fixture(CUBIC_FIXTURE).map_err(|e| e.to_string())?;
    ensure(fixtures.len() == 6, || format!("{} cubic fixtures", fixtures.len()))?;
    for (poly, expected) in fixtures {
        let k = NumberField::new(poly).map_err(|e| e.to_string())?;
        let disc = k.field_disc().ok_or("field discriminant not certified")?.magnitude().to_string();
        ensure(disc == expected.to_string(), || format!("discriminant {disc}, expected {expected}"))?;
        let cert = k.class_number_one_certificate(4).map_err(|e| e.to_string())?;
        ensure(cert.is_complete(), || format!("Delta = {expected}: principality unresolved"))?;
    }
    Ok("49 quadratic fields generated, 6 cubic fields class number one".into())
}

fn large_degree_tail() -> Outcome {
    let records = verify::verify_theorem1_tail();
    let wanted = [
        "theorem1.sufficiency_at_262000",
        "theorem1.sufficiency_increasing",
        "theorem1.crossover_degree",
        "theorem1.large_degree_n9",
        "theorem1.large_degree_n10",
        "theorem1.coefficient_positivity",
    ];
    for id in wanted {
        let rec = records.iter().find(|r| r.claim_id == id).ok_or_else(|| format!("{id} missing"))?;
        ensure(rec.passed, || rec.text_line())?;
    }
    let n0 = verify::crossover_degree(262_000.0);
    let direct = (2.0 * 4e-3 * 262_000.0 / 4.39f64).cbrt();
    ensure((n0 - direct).abs() < 1e-12 && n0 <= 7.82, || format!("n0 = {n0}"))?;
    Ok(format!("n0 = {n0:.4}"))
}

fn exact_test_sanity() -> Outcome {
    let k = NumberField::from_coefficients(&[5, 0, 1]).map_err(|e| e.to_string())?;
    let cap = 3.75 * 20f64.ln().powi(2);
    let report = criteria::minimal_t_exact(&k, cap).map_err(|e| e.to_string())?;
    ensure(report.criterion == Criterion::Exact, || "wrong criterion".into())?;
    ensure((2.0..=cap).contains(&report.t_bound), || format!("T = {}", report.t_bound))?;
    let cfg = criteria::TestConfig::new(report.t_bound, report.c_used).map_err(|e| e.to_string())?;
    let again = criteria::eval_exact(&k, &cfg).map_err(|e| e.to_string())?;
    ensure(again.passed, || "re-evaluation does not pass".into())?;
    let group = class_group(FundamentalDiscriminant::new(-20).map_err(|e| e.to_string())?);
    let gen = group.generated_by_primes_up_to(report.t_bound);
    ensure(gen.generates, || format!("primes <= {} do not generate", report.t_bound))?;
    Ok(format!("T = {}, c = {:.4}, margin {:.4}", report.t_bound, report.c_used, report.margin))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("table thresholds", table_thresholds),
        ("printed coefficients", printed_coefficients),
        ("f-inequality", f_inequality),
        ("alpha/beta anchors", alpha_beta_anchors),
        ("closed forms vs quadrature", closed_forms),
        ("quadratic small-ideal bound", small_ideal_bound),
        ("prime-window majorant", prime_window_majorant),
        ("psi bound to 10^7", psi_bound),
        ("small fields", small_fields),
        ("large-degree tail", large_degree_tail),
        ("exact test sanity", exact_test_sanity),
    ];
    let mut out = std::io::stdout().lock();
    let mut failures = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let line = match check() {
            Ok(detail) => format!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failures.push(*name);
                format!("FAIL {:>2} {name}: {why}", i + 1)
            }
        };
        writeln!(out, "{line}").unwrap();
    }
    out.flush().unwrap();
    assert!(failures.is_empty(), "failed: {failures:?}");
}
