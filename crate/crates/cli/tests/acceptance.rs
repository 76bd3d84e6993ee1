//! Acceptance criterion for the CLI: sweep output is byte-identical across
//! repeated runs and worker counts, and every row agrees with the
//! single-weight classify output.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_boundary-weights"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> Vec<u8> {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn criterion_11_cli_determinism() {
    let args = ["sweep", "--d", "2", "--k-max", "3"];
    let first = stdout_of(&args);
    for _ in 0..2 {
        assert_eq!(
            stdout_of(&args),
            first,
            "repeated runs must be byte-identical"
        );
    }
    let one_worker = stdout_of(&["sweep", "--d", "2", "--k-max", "3", "--workers", "1"]);
    let eight_workers = stdout_of(&["sweep", "--d", "2", "--k-max", "3", "--workers", "8"]);
    assert_eq!(one_worker, first, "1 worker must match the default");
    assert_eq!(eight_workers, first, "8 workers must match the default");

    let text = String::from_utf8(first).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        vec![
            "k1",
            "k2",
            "corank",
            "completelyIrregular",
            "kostantParallel",
            "beta",
            "weights01Present"
        ]
    );
    let mut rows = 0usize;
    for record in reader.records() {
        let record = record.unwrap();
        let lambda = format!(r#"{{"k1":{},"k2":{}}}"#, &record[0], &record[1]);
        let classify = stdout_of(&["classify", "--lambda", &lambda]);
        let report: serde_json::Value = serde_json::from_slice(&classify).unwrap();

        assert_eq!(
            record[2].parse::<u64>().unwrap(),
            report["corank"].as_u64().unwrap()
        );
        assert_eq!(
            record[3].parse::<bool>().unwrap(),
            report["completelyIrregular"].as_bool().unwrap()
        );
        assert_eq!(
            record[4].parse::<bool>().unwrap(),
            !report["presentations"].as_array().unwrap().is_empty()
        );
        assert_eq!(
            record[6].parse::<bool>().unwrap(),
            report["weights01Present"].as_bool().unwrap()
        );
        let beta = &record[5];
        match &report["avoidedInterval"] {
            serde_json::Value::String(s) if s == "ALL" => assert_eq!(beta, "ZERO"),
            serde_json::Value::Null => assert_eq!(beta, "NONE"),
            serde_json::Value::Object(interval) => {
                assert_eq!(
                    beta.parse::<i64>().unwrap(),
                    interval["hi"].as_i64().unwrap()
                )
            }
            other => panic!("unexpected avoidedInterval {other:?}"),
        }
        rows += 1;
    }
    assert_eq!(rows, 100, "10 dominant pairs per embedding at k-max 3");
    println!("ACCEPTANCE 11 cli-determinism: PASS ({rows} rows, 3 runs, 1 vs 8 workers)");
}
