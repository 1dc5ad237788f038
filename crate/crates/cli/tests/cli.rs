use std::path::Path;
use std::process::{Command, Output};

use cliffgate::clifford::BasisLabel;
use cliffgate::matrix::represent_hermitized;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffgate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// `key=value` lookup in the first record of the given kind.
fn field(text: &str, kind: &str, key: &str) -> String {
    let line = text
        .lines()
        .find(|l| l.split_whitespace().next() == Some(kind))
        .unwrap_or_else(|| panic!("no `{kind}` record in\n{text}"));
    line.split_whitespace()
        .find_map(|kv| kv.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no `{key}` in `{line}`"))
        .to_string()
}

#[test]
fn closure_examples() {
    let gens = ["e[0]", "e[1]", "e[2]", "e[3]"];
    let mut args = vec!["closure", "-m", "4"];
    args.extend(gens);
    assert!(ok(&args).starts_with("dim=10 universal=false\n"));
    args.push("i*e[0,1,2]");
    assert!(ok(&args).starts_with("dim=16 universal=true\n"));

    assert!(ok(&["closure", "-m", "8", "--preset", "triple"]).starts_with("dim=256 universal=true"));
    assert!(ok(&["closure", "-m", "5", "--preset", "triple"]).starts_with("dim=31 universal=false"));
}

#[test]
fn closure_input_errors() {
    assert_eq!(code(&["closure", "-m", "4"]), 2);
    let o = run(&["closure", "-m", "4", "e[0]", "e[1,"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(
        stderr(&o).contains("argument 2") && stderr(&o).contains("column"),
        "{}",
        stderr(&o)
    );
    assert_eq!(code(&["closure", "-m", "4", "e[0]", "e[4]"]), 3);
    assert_eq!(code(&["closure", "-m", "4", "e[0]", "2^1*e[0]"]), 4);
    assert_eq!(code(&["closure", "-m", "100", "--preset", "generators"]), 6);

    let dir = TempDir::new().unwrap();
    let file = dir.path().join("gens.txt");
    std::fs::write(&file, "# generators\ne[0]\n\ne[1]\ne[0 1]\n").unwrap();
    let o = run(&["closure", "-m", "4", "--from", path_str(&file)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 5"), "{}", stderr(&o));
}

#[test]
fn certify_examples() {
    let out = ok(&[
        "certify", "-m", "4", "e[0]", "e[1]", "-t", "e[0,1]", "--format", "records",
    ]);
    assert_eq!(field(&out, "replay", "steps"), "1");
    assert!(field(&out, "replay", "max_deviation").parse::<f64>().unwrap() < 1e-12);

    let out = ok(&[
        "certify",
        "-m",
        "4",
        "--preset",
        "twoqubit",
        "-t",
        "e[0,1,2,3]",
        "--format",
        "records",
    ]);
    assert!(field(&out, "replay", "steps").parse::<usize>().unwrap() > 1, "{out}");
    assert_eq!(field(&out, "replay", "pass"), "true");

    let o = run(&["certify", "-m", "4", "--preset", "generators", "-t", "e[0,1,2]"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("closure dimension 10"), "{}", stderr(&o));

    let out = ok(&["certify", "-m", "14", "--preset", "generators", "-t", "e[5,9]"]);
    assert!(out.contains("replay skipped"), "{out}");
}

#[test]
fn verify_rep_examples() {
    ok(&["verify-rep", "-n", "1"]);
    let out = ok(&["verify-rep", "-n", "3", "--format", "records"]);
    assert_eq!(out.lines().filter(|l| l.contains("pass=true")).count(), 8);
    assert_eq!(code(&["verify-rep", "-n", "20"]), 6);
    ok(&["verify-rep", "-n", "5", "--samples", "30", "--seed", "4"]);
}

#[test]
fn gateset_examples() {
    for (n, lines) in [("2", 5), ("3", 7)] {
        let out = ok(&["gateset", "-n", n, "--format", "records"]);
        let gates: Vec<_> = out.lines().filter(|l| l.starts_with("gate ")).collect();
        assert_eq!(gates.len(), lines);
        assert!(gates.iter().all(|l| l.contains("local=true")));
        assert!(out.lines().last().unwrap().contains("universal=true"));
    }
    assert_eq!(code(&["gateset", "-n", "1"]), 4);
}

#[test]
fn synth_examples() {
    let dir = TempDir::new().unwrap();
    let p = |name: &str| dir.path().join(name);

    let e012 = represent_hermitized(BasisLabel::from_indices([0, 1, 2]).unwrap(), 2).unwrap();
    std::fs::write(p("e012.txt"), e012.to_text()).unwrap();
    let out = ok(&[
        "synth",
        path_str(&p("e012.txt")),
        "-N",
        "8",
        "-o",
        path_str(&p("seq.txt")),
        "--format",
        "records",
    ]);
    assert_eq!(field(&out, "synth", "gates"), "1");
    assert!(field(&out, "synth", "error").parse::<f64>().unwrap() < 1e-12);
    let seq = std::fs::read_to_string(p("seq.txt")).unwrap();
    assert!(seq.starts_with("gate e[0,1,2] 1.0000000000000000e0\n"), "{seq}");

    std::fs::write(p("zero.txt"), "0,0 0,0\n0,0 0,0\n").unwrap();
    let out = ok(&["synth", path_str(&p("zero.txt")), "--format", "records"]);
    assert_eq!(field(&out, "synth", "gates"), "0");

    ok(&["random-h", "-n", "2", "--seed", "1", "-o", path_str(&p("h.txt"))]);
    let err = |steps: &str| {
        let out = ok(&[
            "synth",
            path_str(&p("h.txt")),
            "-N",
            steps,
            "-o",
            path_str(&p("s.txt")),
            "--format",
            "records",
        ]);
        field(&out, "synth", "error").parse::<f64>().unwrap()
    };
    assert!(err("32") < err("8"));

    std::fs::write(p("nh.txt"), "1,0 1,0\n0,0 1,0\n").unwrap();
    let o = run(&["synth", path_str(&p("nh.txt"))]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("deviation"));
    assert_eq!(code(&["synth", path_str(&p("h.txt")), "-n", "3"]), 4);
    assert_eq!(code(&["synth", path_str(&p("missing.txt"))]), 1);
}

#[test]
fn power_examples() {
    let out = ok(&["power", "--angle", "pi/2", "--tolerance", "0.1", "--format", "records"]);
    assert_eq!(field(&out, "power", "n"), "4");
    let out = ok(&[
        "power",
        "--angle",
        "atan(3/4)",
        "--tolerance",
        "0.01",
        "--format",
        "records",
    ]);
    assert!(field(&out, "power", "residual").parse::<f64>().unwrap() < 0.01);
    assert_eq!(code(&["power", "--angle", "1", "--tolerance", "0"]), 2);
    assert_eq!(code(&["power", "--angle", "1", "--tolerance", "-0.5"]), 2);
    assert_eq!(
        code(&["power", "--angle", "atan(3/4)", "--tolerance", "1e-9", "--cap", "50"]),
        6
    );
}

#[test]
fn records_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let h = dir.path().join("h.txt");
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "closure", "-m", "6", "--preset", "triple", "--labels", "--format", "records",
        ],
        vec![
            "verify-rep",
            "-n",
            "4",
            "--samples",
            "40",
            "--seed",
            "9",
            "--format",
            "records",
        ],
        vec!["random-h", "-n", "2", "--seed", "5", "--format", "records"],
        vec!["gateset", "-n", "3", "--format", "records"],
    ];
    for args in &cases {
        let a = ok(args);
        assert_eq!(a, ok(args), "{args:?}");
        let mut seq = args.clone();
        seq.extend(["--threads", "1"]);
        assert_eq!(a, ok(&seq), "{args:?} sequential");
    }
    ok(&["random-h", "-n", "2", "--seed", "5", "-o", path_str(&h)]);
    let synth = ["synth", path_str(&h), "-N", "16", "--format", "records"];
    assert_eq!(ok(&synth), ok(&synth));
}
