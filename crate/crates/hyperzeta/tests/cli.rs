use std::process::Command;

use hyperzeta::cli::run;
use hyperzeta::report::ReportRow;
use hyperzeta_core::rational::frac;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hyperzeta").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn avg_csv_header_is_exact() {
    let (code, out, _) = invoke(&["avg", "--q", "3", "--g", "1", "--family", "hg"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("family,q,g,n,avg_num,avg_den,avg_trace,main_term,rmt,deviation,branch"));
    // n runs up to the default n_max, one row each
    assert!(lines.all(|l| l.starts_with("hg,3,1,")));
}

#[test]
fn json_rows_carry_exact_averages() {
    let (code, out, _) = invoke(&["avg", "--q", "3", "--g", "2", "--family", "hg", "--n-max", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: Vec<ReportRow> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), 4);
    for row in &rows[..] {
        if row.n % 2 == 1 {
            assert_eq!(row.avg_scaled().unwrap(), frac(0, 1));
        }
    }
    assert_eq!(rows[3].avg_scaled().unwrap(), frac(-254, 27));
    assert_eq!(rows[3].branch, "n=2g");
}

#[test]
fn zeta_reports_the_l_polynomial() {
    let (code, out, _) = invoke(&["zeta", "--q", "3", "--poly", "0,2,0,1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("\nlcoeffs,1;0;3\n"), "{out}");
    assert!(out.contains("\npoints,4;16\n"), "{out}");
}

#[test]
fn bad_curves_exit_with_2() {
    let (code, _, err) = invoke(&["zeta", "--q", "3", "--poly", "0,0,0,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("x^3"), "{err}");
    assert_eq!(invoke(&["zeta", "--q", "3", "--poly", "0,0,1"]).0, 2);
}

#[test]
fn parse_and_config_errors_exit_with_1() {
    assert_eq!(invoke(&["avg", "--q", "4"]).0, 1);
    assert_eq!(invoke(&["zeta", "--q", "3", "--poly", "1,x,2"]).0, 1);
    assert_eq!(invoke(&["avg", "--family", "nope"]).0, 1);
    assert_eq!(invoke(&["frobnicate"]).0, 1);
    assert_eq!(invoke(&["--help"]).0, 0);
}

#[test]
fn budget_refusal_exits_with_3() {
    let (code, out, _) = invoke(&["avg", "--q", "3", "--g", "2", "--budget", "100"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
}

#[test]
fn charsum_grid_passes_its_checks() {
    let (code, out, _) = invoke(&["charsum", "--q", "3", "--n-max", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("q,n,beta,s,"));
    assert!(!out.contains("fail"));
}

#[test]
fn verify_passes_small_field() {
    let (code, out, err) = invoke(&["verify", "--q", "3", "--g", "1"]);
    assert_eq!(code, 0, "{out}{err}");
}

#[test]
fn binary_writes_to_out_and_reads_worker_env() {
    let dir = std::env::temp_dir().join(format!("hyperzeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("avg.csv");
    let status = Command::new(env!("CARGO_BIN_EXE_hyperzeta"))
        .args(["avg", "--q", "3", "--g", "1", "--out"])
        .arg(&path)
        .env("HYPERZETA_WORKERS", "2")
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("family,q,g,n,"));
    std::fs::remove_dir_all(&dir).unwrap();

    let status = Command::new(env!("CARGO_BIN_EXE_hyperzeta"))
        .args(["avg", "--q", "3", "--g", "2", "--budget", "10"])
        .stderr(std::process::Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(3));
}
