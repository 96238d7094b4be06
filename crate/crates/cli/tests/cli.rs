use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isocharsum"))
        .args(args)
        .env_remove("ISOCHARSUM_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = run(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn fiber_sum_divisible() {
    for (p, d) in [("7", "1"), ("13", "1"), ("13", "-1")] {
        let v = json(&["fiber-sum", "--p", p, "--d", d]);
        let s: i128 = v["s_tau"].as_str().unwrap().parse().unwrap();
        let p: i128 = p.parse().unwrap();
        assert_eq!(s % p, 0);
        assert_eq!(v["buckets"][1], v["buckets"][2]);
    }
}

#[test]
fn fiber_sum_rejects_non_square() {
    let o = run(&["fiber-sum", "--p", "7", "--d", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a nonzero square"));
    assert_eq!(run(&["fiber-sum", "--p", "15", "--d", "1"]).status.code(), Some(2));
}

#[test]
fn surface_sum_values() {
    for (p, s, q, h) in [("7", "-14", "-2", "1"), ("13", "-78", "-6", "0")] {
        let v = json(&["surface-sum", "--p", p]);
        for m in ["naive", "direct", "fast"] {
            assert_eq!(v["sums"][m], s);
        }
        assert_eq!(v["quotient"], q);
        assert_eq!(v["h_star"]["forms"], h);
        assert_eq!(v["main_theorem_pass"], true);
    }
    let v = json(&["surface-sum", "--p", "31", "--method", "fast"]);
    assert_eq!(v["sums"]["fast"], "-372");
    assert!(v["sums"].get("naive").is_none());
}

#[test]
fn surface_sum_rejects_bad_input() {
    assert_eq!(run(&["surface-sum", "--p", "11"]).status.code(), Some(2));
    assert_eq!(run(&["surface-sum", "--p", "7", "--method", "bogus"]).status.code(), Some(2));
}

#[test]
fn class_number_both() {
    let v = json(&["class-number", "--p", "131"]);
    assert_eq!(v["h_star"]["dirichlet"], "5");
    assert_eq!(v["h_star"]["forms"], "5");
    let v = json(&["class-number", "--p", "13", "--method", "forms"]);
    assert_eq!(v["h_star"]["forms"], "0");
    assert!(v["h_star"].get("dirichlet").is_none());
}

#[test]
fn two_isogeny_cases() {
    let v = json(&["two-isogeny", "--p", "131"]);
    assert_eq!(v["s_tau"], "-655");
    assert_eq!(v["quotient"], "5");
    assert_eq!(v["matches_h_star"], true);
    let v = json(&["two-isogeny", "--p", "7"]);
    assert_eq!(v["ordinary"], false);
    assert_eq!(v["skipped"], "supersingular");
}

#[test]
fn verify_outputs_and_exit_status() {
    let o = run(&["verify", "--from", "7", "--to", "100"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["complete"], true);
    assert_eq!(v["records"].as_array().unwrap().len(), 11);

    let o = run(&["verify", "--from", "7", "--to", "40", "--format", "csv", "--methods", "fast"]);
    let csv = stdout(&o);
    assert!(csv.starts_with("p,S_tau_naive,S_tau_direct,S_tau_fast,quotient,"));
    assert!(csv.contains("\n7,,,-14,-2,1,1,true,,\n"));

    // No p ≡ 1 (mod 3) in [8, 12].
    let o = run(&["verify", "--from", "8", "--to", "12"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["records"].as_array().unwrap().is_empty());

    assert_eq!(run(&["verify", "--from", "3", "--to", "10"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--from", "7", "--to", "30000"]).status.code(), Some(2));
}

#[test]
fn verify_is_worker_independent_and_writes_files() {
    let dir = std::env::temp_dir().join(format!("isocharsum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for (workers, path) in [("1", &a), ("4", &b)] {
        let o = run(&["verify", "--from", "7", "--to", "150", "--workers", workers, "--out", path.to_str().unwrap()]);
        assert!(o.status.success());
        assert!(o.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_config_file_and_flag_precedence() {
    let dir = std::env::temp_dir().join(format!("isocharsum-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("sweep.toml");
    std::fs::write(&cfg, "from = 7\nto = 20\nformat = \"csv\"\nmethods = [\"fast\"]\n").unwrap();
    let o = run(&["verify", "--config", cfg.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 3); // header, 7, 13, 19
    let o = run(&["verify", "--config", cfg.to_str().unwrap(), "--to", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 1);
    assert_eq!(v["methods"], serde_json::json!(["fast"]));

    std::fs::write(&cfg, "form = 7\n").unwrap();
    assert_eq!(run(&["verify", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn workers_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_isocharsum"))
        .args(["verify", "--from", "7", "--to", "20"])
        .env("ISOCHARSUM_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
