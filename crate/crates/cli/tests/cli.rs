use std::collections::HashMap;
use std::process::{Command, Output};

fn genbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genbound"))
        .args(args)
        .env_remove("GENBOUND_SIEVE_LIMIT")
        .env_remove("GENBOUND_PRIME_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn machine_pairs(out: &Output) -> HashMap<String, String> {
    stdout(out)
        .lines()
        .map(|line| {
            let (k, v) = line.split_once('\t').expect("key<TAB>value");
            (k.to_string(), v.to_string())
        })
        .collect()
}

#[test]
fn bound_generic_large_quadratic() {
    let out = genbound(&["bound-generic", "--degree", "2", "--r1", "0", "--log-disc", "100000", "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let kv = machine_pairs(&out);
    let ratio: f64 = kv["ratio"].parse().unwrap();
    assert!(ratio < 3.75, "ratio {ratio}");
    assert!(kv["margin"].parse::<f64>().unwrap() > 0.0);
}

#[test]
fn bound_generic_degree_nine() {
    let out = genbound(&["bound-generic", "--degree", "9", "--r1", "1", "--log-disc", "16", "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let ratio: f64 = machine_pairs(&out)["ratio"].parse().unwrap();
    assert!(ratio <= 4.0 - 1.0 / 18.0);
}

#[test]
fn bound_generic_floor_mode() {
    let out = genbound(&["bound-generic", "--degree", "3", "--r1", "1", "--log-disc", "1000", "--floor-mode", "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let kv = machine_pairs(&out);
    assert_eq!(kv["mode"], "floor");
    assert!(kv["T_bound"].parse::<f64>().unwrap() >= 1000.0);
}

#[test]
fn bound_generic_usage_errors() {
    assert_eq!(genbound(&["bound-generic", "--degree", "2", "--r1", "1"]).status.code(), Some(1));
    assert_eq!(genbound(&["bound-generic", "--degree", "2", "--r1", "1", "--log-disc", "10"]).status.code(), Some(1));
    assert_eq!(genbound(&["bound-generic", "--degree", "2", "--r1", "0", "--log-disc", "-1"]).status.code(), Some(1));
    assert_eq!(genbound(&["bound-generic", "--bogus"]).status.code(), Some(1));
    assert_eq!(genbound(&["nosuch"]).status.code(), Some(1));
}

#[test]
fn bound_generic_no_bound() {
    let out = genbound(&["bound-generic", "--degree", "2", "--r1", "0", "--log-disc", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_exact_quadratic() {
    let out = genbound(&["bound-exact", "--poly", "5,0,1", "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let kv = machine_pairs(&out);
    assert_eq!(kv["abs_disc"], "20");
    assert_eq!(kv["r2"], "1");
    let t: f64 = kv["T_bound"].parse().unwrap();
    assert!((2.0..=3.75 * 20f64.ln().powi(2)).contains(&t));
    for term in ["discriminant", "real-places", "degree", "ideal-sum", "prime-sum"] {
        assert!(kv.contains_key(&format!("term.{term}")), "missing {term}");
    }
}

#[test]
fn bound_exact_cubic() {
    let out = genbound(&["bound-exact", "--poly", "-1,-1,0,1", "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let kv = machine_pairs(&out);
    assert_eq!(kv["abs_disc"], "23");
    assert_eq!(kv["r1"], "1");
}

#[test]
fn bound_exact_rejects_reducible() {
    let out = genbound(&["bound-exact", "--poly", "1,2,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bound_exact_reports_uncertified_index_prime() {
    let out = genbound(&["bound-exact", "--poly", "-75,0,1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains('5'));
}

#[test]
fn split_gaussian() {
    let out = genbound(&["split", "--poly", "1,0,1", "--pmax", "7", "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2\t2,1\n3\t1,2\n5\t1,1 1,1\n7\t1,2\n");
    let text = stdout(&genbound(&["split", "--poly", "1,0,1", "--pmax", "7"]));
    assert!(text.contains("ramified") && text.contains("inert") && text.contains("split"));
}

#[test]
fn classgroup_reports() {
    let kv = machine_pairs(&genbound(&["classgroup", "--disc", "-20", "--bound", "34", "--format", "machine"]));
    assert_eq!(kv["h"], "2");
    assert_eq!(kv["generates"], "true");
    let kv = machine_pairs(&genbound(&["classgroup", "--disc", "-19", "--bound", "1", "--format", "machine"]));
    assert_eq!(kv["h"], "1");
    assert_eq!(kv["generates"], "true");
    let kv = machine_pairs(&genbound(&["classgroup", "--disc", "-260", "--bound", "2", "--format", "machine"]));
    assert_eq!(kv["invariant_factors"], "2,4");
    assert_eq!(kv["generates"], "false");
    assert_eq!(genbound(&["classgroup", "--disc", "-16", "--bound", "5"]).status.code(), Some(1));
}

#[test]
fn verify_table1_machine() {
    let out = genbound(&["verify", "--suite", "table1", "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    for line in lines {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 5);
        assert_eq!(cols[1], "PASS");
    }
}

#[test]
fn verify_props_passes() {
    let out = genbound(&["verify", "--suite", "props"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("claims passed"));
}

#[test]
fn verify_schoenfeld_respects_env_limit() {
    let out = Command::new(env!("CARGO_BIN_EXE_genbound"))
        .args(["verify", "--suite", "schoenfeld", "--format", "machine"])
        .env("GENBOUND_SIEVE_LIMIT", "200000")
        .env_remove("GENBOUND_PRIME_CACHE")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("schoenfeld.psi_bound\tPASS"));
}

#[test]
fn verify_uses_prime_cache() {
    let dir = std::env::temp_dir().join(format!("genbound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cache = dir.join("primes.bin");
    for _ in 0..2 {
        let out = Command::new(env!("CARGO_BIN_EXE_genbound"))
            .args(["verify", "--suite", "schoenfeld", "--sieve-limit", "100000"])
            .env("GENBOUND_PRIME_CACHE", &cache)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        assert!(cache.exists());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_unknown_suite() {
    assert_eq!(genbound(&["verify", "--suite", "nosuch"]).status.code(), Some(1));
}

#[test]
fn machine_output_is_stable() {
    let args = ["bound-generic", "--degree", "4", "--r1", "0", "--log-disc", "500", "--format", "machine"];
    assert_eq!(stdout(&genbound(&args)), stdout(&genbound(&args)));
}
