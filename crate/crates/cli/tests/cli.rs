use std::process::Command;

use vonkoch_cli::{run_cli, EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("vonkoch").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn seq_prints_prefixes() {
    assert_eq!(
        run(&["seq", "--morphism", "thue-morse", "--length", "16"]).1,
        "0110100110010110\n"
    );
    assert_eq!(
        run(&[
            "seq",
            "--morphism",
            "thue-morse",
            "--length",
            "8",
            "--coded"
        ])
        .1,
        "abbabaab\n"
    );
    assert_eq!(
        run(&["seq", "--morphism", "cantor", "--length", "9"]).1,
        "101000101\n"
    );
    assert_eq!(
        run(&["seq", "--morphism", "lambda", "--length", "8"]).1,
        "1 -j -j^2 1 -j j^2 1 -j\n"
    );
    assert_eq!(
        run(&["seq", "--morphism", "dekking8", "--length", "8", "--coded"]).1,
        "1 -j^2 -j 1 -j^2 j 1 -j^2\n"
    );
    assert_eq!(
        run(&["seq", "--morphism", "dekking6", "--length", "8", "--coded"]).1,
        run(&["seq", "--morphism", "dekking8", "--length", "8", "--coded"]).1
    );
}

#[test]
fn seq_errors() {
    let (code, out, err) = run(&["seq", "--morphism", "nope", "--length", "4"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(out.is_empty() && !err.is_empty());
    assert_eq!(
        run(&["seq", "--morphism", "cantor", "--length", "4", "--coded"]).0,
        EXIT_DOMAIN
    );
    assert_eq!(run(&["seq", "--length", "4"]).0, EXIT_USAGE);
}

#[test]
fn sum_methods_agree() {
    let fast = run(&["sum", "--p", "2", "--q", "3", "--N", "1048576", "--exact"]);
    let brute = run(&[
        "sum", "--p", "2", "--q", "3", "--N", "1048576", "--method", "brute", "--exact",
    ]);
    assert_eq!(fast.0, EXIT_OK);
    assert!(fast.1.starts_with("method: fast"), "{}", fast.1);
    assert!(brute.1.starts_with("method: brute"), "{}", brute.1);
    assert!(
        fast.1.contains("value: 59049.0000000 + 0.0000000i"),
        "{}",
        fast.1
    );
    let tail = |s: &str| s.lines().skip(1).collect::<Vec<_>>().join("\n");
    assert_eq!(tail(&fast.1), tail(&brute.1));
    assert!(fast.1.contains("exact: {\"p\":2,\"q\":3,\"coeffs\":"));
}

#[test]
fn sum_handles_huge_n() {
    let n = format!("{}", num_bigint::BigUint::from(4u32).pow(40));
    let (code, out, _) = run(&["sum", "--p", "2", "--q", "3", "--N", &n]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("method: fast"));
    assert_eq!(
        run(&["sum", "--p", "2", "--q", "3", "--N", &n, "--method", "brute"]).0,
        EXIT_RESOURCE
    );
    assert_eq!(
        run(&["sum", "--p", "1", "--q", "3", "--N", "5"]).0,
        EXIT_DOMAIN
    );
    assert_eq!(
        run(&["sum", "--p", "2", "--q", "3", "--N", "-5"]).0,
        EXIT_USAGE
    );
}

#[test]
fn coquet_values() {
    assert_eq!(run(&["coquet", "--N", "100"]).1.trim(), "58");
    assert_eq!(run(&["coquet", "--N", "1"]).1.trim(), "1");
}

#[test]
fn curve_outputs() {
    let (code, svg, _) = run(&["curve", "--q", "3", "--gen", "2"]);
    assert_eq!(code, EXIT_OK);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let points = doc
        .descendants()
        .find(|n| n.has_tag_name("polyline"))
        .unwrap()
        .attribute("points")
        .unwrap();
    assert_eq!(points.split(' ').count(), 17);
    let partial = run(&[
        "curve",
        "--q",
        "3",
        "--gen",
        "2",
        "--construction",
        "partial-sum",
    ])
    .1;
    assert_eq!(partial, svg);
    assert_eq!(
        run(&["curve", "--q", "3", "--gen", "2", "--scale", "paper"]).0,
        EXIT_OK
    );
    assert_eq!(
        run(&["curve", "--q", "5", "--gen", "2", "--scale", "paper"]).0,
        EXIT_DOMAIN
    );
    assert_eq!(run(&["curve", "--q", "5", "--gen", "9"]).0, EXIT_RESOURCE);
    assert_eq!(
        run(&["curve", "--q", "3", "--gen", "1", "--scale", "paper"]).0,
        EXIT_DOMAIN
    );
}

#[test]
fn files_by_extension() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("koch.csv");
    let json = dir.path().join("koch.json");
    assert_eq!(
        run(&[
            "curve",
            "--q",
            "3",
            "--gen",
            "1",
            "--out",
            csv.to_str().unwrap()
        ])
        .0,
        EXIT_OK
    );
    assert_eq!(
        run(&[
            "curve",
            "--q",
            "3",
            "--gen",
            "1",
            "--out",
            json.to_str().unwrap()
        ])
        .0,
        EXIT_OK
    );
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert_eq!(text.lines().last().unwrap(), "1.000000000,0.000000000");
    let json_text = std::fs::read_to_string(&json).unwrap();
    assert!(json_text.starts_with("[[0.000000000,0.000000000],"));
    let bad = dir.path().join("koch.png");
    assert_eq!(
        run(&[
            "curve",
            "--q",
            "3",
            "--gen",
            "1",
            "--out",
            bad.to_str().unwrap()
        ])
        .0,
        EXIT_USAGE
    );
    assert!(!bad.exists());
    let missing = dir.path().join("no/such/dir/koch.svg");
    assert_eq!(
        run(&[
            "curve",
            "--q",
            "3",
            "--gen",
            "1",
            "--out",
            missing.to_str().unwrap()
        ])
        .0,
        EXIT_IO
    );
}

#[test]
fn failures_leave_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 3] = [
        &["curve", "--q", "3", "--gen", "1", "--scale", "paper"],
        &["curve", "--q", "5", "--gen", "9"],
        &["turtle", "--k", "40"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let path = dir.path().join(format!("out{i}.svg"));
        let mut argv = args.to_vec();
        argv.extend(["--out", path.to_str().unwrap()]);
        let (code, _, _) = run(&argv);
        assert_ne!(code, EXIT_OK);
        assert!(!path.exists(), "{args:?}");
    }
}

#[test]
fn turtle_and_cantor() {
    let (code, svg, _) = run(&["turtle", "--k", "4"]);
    assert_eq!(code, EXIT_OK);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let points = doc
        .descendants()
        .find(|n| n.has_tag_name("polyline"))
        .unwrap()
        .attribute("points")
        .unwrap();
    assert_eq!(points.split(' ').count(), 9);
    let cw = run(&["turtle", "--k", "4", "--cw"]).1;
    assert_ne!(cw, svg);
    assert_eq!(run(&["turtle", "--k", "4", "--cw", "--ccw"]).0, EXIT_USAGE);
    let (code, svg, _) = run(&["cantor", "--gen", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        roxmltree::Document::parse(&svg)
            .unwrap()
            .descendants()
            .filter(|n| n.has_tag_name("rect"))
            .count(),
        15
    );
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(run(&["--help"]).0, EXIT_OK);
    assert_eq!(run(&["--version"]).0, EXIT_OK);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
}

#[test]
fn binary_is_idempotent() {
    let bin = env!("CARGO_BIN_EXE_vonkoch");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("koch.svg");
    let args = [
        "curve",
        "--q",
        "5",
        "--gen",
        "2",
        "--out",
        path.to_str().unwrap(),
    ];
    assert!(Command::new(bin).args(args).status().unwrap().success());
    let first = std::fs::read(&path).unwrap();
    assert!(Command::new(bin).args(args).status().unwrap().success());
    assert_eq!(first, std::fs::read(&path).unwrap());
    let status = Command::new(bin)
        .args(["curve", "--q", "3", "--gen", "1", "--scale", "paper"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_DOMAIN));
}
