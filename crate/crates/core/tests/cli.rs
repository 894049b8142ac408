use std::process::Command;

use thermal_entanglement::EntanglementReport;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_thermal-entanglement"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn sweep_csv_to_stdout() {
    let (code, stdout, _) = run(&[
        "sweep", "--J", "-1", "--t-min", "0", "--t-max", "2", "--n", "201",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 202);
    assert_eq!(
        lines[0],
        "T,ppt_min_eigenvalue,negativity,entanglement_hs,T_E"
    );
    assert_eq!(stdout.matches("T,ppt_min_eigenvalue").count(), 1);
    let row: Vec<f64> = lines[1].split(',').map(|f| f.parse().unwrap()).collect();
    assert!((row[3] - 0.288675).abs() < 1e-6);
    assert!((row[4] - 1.082021).abs() < 1e-6);
}

#[test]
fn sweep_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let (code, stdout, _) = run(&[
            "sweep",
            "--J",
            "-1",
            "--t-min",
            "0.001",
            "--t-max",
            "5",
            "--n",
            "64",
            "--scale",
            "log",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        assert!(stdout.is_empty());
    }
    let a = std::fs::read(a).unwrap();
    assert_eq!(a, std::fs::read(b).unwrap());
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 65);
}

#[test]
fn sweep_json_round_trips() {
    let (code, stdout, _) = run(&[
        "sweep", "--J", "1", "--t-min", "0", "--t-max", "3", "--n", "7", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let reports: Vec<EntanglementReport> = serde_json::from_str(&stdout).unwrap();
    assert_eq!(reports.len(), 7);
    assert!(reports
        .iter()
        .all(|r| r.entanglement_hs == 0.0 && r.critical_temperature.is_none()));
    let again = serde_json::to_string_pretty(&reports).unwrap() + "\n";
    assert_eq!(again, stdout);
    let keys: Vec<&str> = [
        "\"T\"",
        "\"ppt_min_eigenvalue\"",
        "\"negativity\"",
        "\"entanglement_hs\"",
        "\"T_E\"",
    ]
    .to_vec();
    let first = stdout.split('}').next().unwrap();
    let positions: Vec<usize> = keys.iter().map(|k| first.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, stderr) = run(&["sweep", "--t-min", "2", "--t-max", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("t_min"));
    let (code, _, _) = run(&["sweep", "--n", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["sweep", "--t-min", "0", "--scale", "log"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["sweep", "--format", "xml"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn computation_errors_exit_1() {
    let (code, _, stderr) = run(&["point", "--T", "-1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("temperature"));
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.csv");
    let (code, _, _) = run(&["sweep", "--n", "3", "--out", missing.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn spectrum_subcommand() {
    let (code, stdout, _) = run(&["spectrum", "--J", "-1", "--s2", "1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["levels"][0]["energy"], -1.0);
    assert_eq!(v["levels"][0]["degeneracy"], 2);
    assert_eq!(v["levels"][1]["energy"], 0.5);
    assert_eq!(v["levels"][1]["degeneracy"], 4);

    let (code, stdout, _) = run(&["spectrum", "--J", "-1", "--s2", "3/2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("spin-3/2"));
    let (_, stdout, _) = run(&["spectrum", "--J", "0"]);
    assert!(stdout.contains("6"));
}

#[test]
fn point_and_critical_temp() {
    let (code, stdout, _) = run(&["point", "--J", "-1", "--T", "0.001", "--json"]);
    assert_eq!(code, 0);
    let r: EntanglementReport = serde_json::from_str(&stdout).unwrap();
    assert!((r.entanglement_hs - 0.288675).abs() < 1e-6);

    let (code, stdout, _) = run(&["point", "--J", "-1", "--T", "10"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("negativity          = 0.000000000e0"));

    let (code, stdout, _) = run(&["critical-temp", "--J", "-2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!((v["t_e"].as_f64().unwrap() - 2.164043).abs() < 1e-6);
    assert!((v["t_e_qubit_dimer"].as_f64().unwrap() - 1.820478).abs() < 1e-6);

    let (code, stdout, _) = run(&["critical-temp", "--J", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("T_E               = none"));
}

#[test]
fn kb_flag_rescales_temperatures() {
    let (code, stdout, _) = run(&["critical-temp", "--J", "-1", "--kB", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!((v["t_e"].as_f64().unwrap() - 1.082021 / 2.0).abs() < 1e-6);
}
