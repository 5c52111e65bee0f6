use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bccore::dynamic::{Payload, ResultFile, Status};
use bccore::oracle::TheoremBatteryReport;

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn data(name: &str) -> String {
    dir("data").join(name).to_str().unwrap().to_string()
}

fn bccore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bccore")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn golden(name: &str, o: &Output) {
    let want = std::fs::read_to_string(dir("golden").join(name)).unwrap();
    assert_eq!(String::from_utf8_lossy(&o.stdout), want, "{name}");
}

fn bc_core(a: &str, b: &str, c: &str) -> Output {
    bccore(&["compute", "--kind", "left-dual-bc-core", "--a", &data(a), "--b", &data(b), "--c", &data(c)])
}

#[test]
fn compute_worked_examples() {
    let o = bc_core("z6_1.json", "z6_2.json", "z6_2.json");
    assert_eq!(code(&o), 0);
    golden("compute_z6_1_2_2.json", &o);

    let o = bc_core("z6_5.json", "z6_4.json", "z6_3.json");
    assert_eq!(code(&o), 2);
    golden("compute_z6_5_4_3.json", &o);

    let o = bc_core("q2_swap.json", "q2_e11.json", "q2_e22.json");
    assert_eq!(code(&o), 0);
    golden("compute_swap.json", &o);
}

#[test]
fn compute_errors() {
    let o = bccore(&[
        "compute",
        "--kind",
        "left-dual-bc-core",
        "--a",
        &data("z6_1.json"),
        "--b",
        &data("z12_2.json"),
    ]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("mismatch"));
    let o = bccore(&["compute", "--kind", "no-such-kind", "--a", &data("z6_1.json")]);
    assert_eq!(code(&o), 1);
    let o = bccore(&["compute", "--kind", "inner", "--a", &data("missing.json")]);
    assert_eq!(code(&o), 1);
    let o = bccore(&["compute", "--kind", "dual-bc-core", "--a", &data("z6_1.json")]);
    assert_eq!(code(&o), 1);
    // [[1,1],[0,0]] over GF(2) has no {1,4}-inverse
    let o = bccore(&["compute", "--kind", "left-dual-core", "--a", &data("m2gf2_12.json")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_examples() {
    let z6 = |cand: &str| {
        bccore(&[
            "verify",
            "--kind",
            "left-dual-bc-core",
            "--a",
            &data("z6_1.json"),
            "--b",
            &data("z6_2.json"),
            "--c",
            &data("z6_2.json"),
            "--candidate",
            &data(cand),
        ])
    };
    let o = z6("z6_2.json");
    assert_eq!(code(&o), 0);
    golden("verify_z6_candidate_2.json", &o);
    let o = z6("z6_4.json");
    assert_eq!(code(&o), 2);
    golden("verify_z6_candidate_4.json", &o);

    let o = bccore(&[
        "verify",
        "--kind",
        "inner",
        "--a",
        &data("q2_bad_scalar.json"),
        "--candidate",
        &data("q2_e11.json"),
    ]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("zero denominator"));
}

#[test]
fn result_file_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    let cases: [(&str, &[&str]); 5] = [
        ("left-dual-bc-core", &["q2_swap.json", "q2_e11.json", "q2_e22.json"]),
        ("moore-penrose", &["q2_rank1.json"]),
        ("left-dual-core", &["m2gf2_8.json"]),
        ("left-dual-v-core", &["q2_row.json", "q2_row_star.json"]),
        ("left-dual-pseudo-core", &["q3_nilpotent.json"]),
    ];
    for (kind, files) in cases {
        let out = tmp.path().join(format!("{kind}.json"));
        let mut args: Vec<String> = vec!["compute".into(), "--kind".into(), kind.into()];
        let flags = if kind == "left-dual-v-core" { ["--a", "--v", ""] } else { ["--a", "--b", "--c"] };
        for (flag, f) in flags.iter().zip(files) {
            args.extend([flag.to_string(), data(f)]);
        }
        let base = args[3..].to_vec();
        args.extend(["--out".into(), out.to_str().unwrap().into()]);
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(code(&bccore(&argv)), 0, "{kind}");
        let res: ResultFile = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(res.status, Status::Found);
        res.check().unwrap();

        let mut verify: Vec<String> = vec!["verify".into(), "--kind".into(), kind.into()];
        verify.extend(base);
        verify.extend(["--candidate".into(), out.to_str().unwrap().into()]);
        if let Some(k) = res.index {
            verify.extend(["--k".into(), k.to_string()]);
        }
        let argv: Vec<&str> = verify.iter().map(String::as_str).collect();
        let o = bccore(&argv);
        assert_eq!(code(&o), 0, "{kind}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn pseudo_core_of_nilpotent_is_zero_with_its_index() {
    let o = bccore(&["compute", "--kind", "left-dual-pseudo-core", "--a", &data("q3_nilpotent.json")]);
    assert_eq!(code(&o), 0);
    let res: ResultFile = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(res.index, Some(3));
    let zero = Payload::Matrix(vec![vec![bccore::dynamic::Cell::Text("0".into()); 3]; 3]);
    assert_eq!(res.witness, Some(zero));
    let o = bccore(&[
        "compute",
        "--kind",
        "left-dual-pseudo-core",
        "--a",
        &data("q3_nilpotent.json"),
        "--kmax",
        "2",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn decompose_examples() {
    let dec = |a: &str, v: &str| bccore(&["decompose", "--a", &data(a), "--v", &data(v)]);
    let o = dec("q2_e11.json", "q2_one.json");
    assert_eq!(code(&o), 0);
    golden("decompose_projection.json", &o);
    let o = dec("q2_row.json", "q2_row_star.json");
    assert_eq!(code(&o), 0);
    golden("decompose_mp.json", &o);
    let o = dec("q2_e11.json", "q2_zero.json");
    assert_eq!(code(&o), 2);
    golden("decompose_v_zero.json", &o);
}

fn battery(args: &[&str]) -> (i32, Vec<TheoremBatteryReport>) {
    let mut argv = vec!["battery"];
    argv.extend_from_slice(args);
    let o = bccore(&argv);
    let text = String::from_utf8_lossy(&o.stdout);
    let reports = if code(&o) == 1 {
        Vec::new()
    } else if text.trim_start().starts_with('[') {
        serde_json::from_str(&text).unwrap()
    } else {
        vec![serde_json::from_str(&text).unwrap()]
    };
    (code(&o), reports)
}

#[test]
fn battery_all_on_z6() {
    let (c, reports) = battery(&["--theorem", "all", "--ring", "Zn:6"]);
    assert_eq!(c, 0);
    let tags: Vec<&str> = reports.iter().map(|r| r.theorem.as_str()).collect();
    for t in bccore::oracle::Theorem::ALL {
        assert!(tags.contains(&t.tag()), "{t} missing");
    }
}

#[test]
fn battery_single_theorem_and_budget() {
    let (c, reports) = battery(&["--theorem", "equivalence-14", "--ring", "MatZp:2x2:p2"]);
    assert_eq!(c, 0);
    assert_eq!(reports[0].tuples, 4096);
    assert_eq!(battery(&["--theorem", "all", "--ring", "Zn:100"]).0, 1);
    let (c, reports) = battery(&["--theorem", "coincidence", "--ring", "MatZp:2x2:p3", "--samples", "2000"]);
    assert_eq!((c, reports[0].tuples), (0, 2000));
}

#[test]
fn battery_reports_are_byte_stable() {
    let run = |workers: &str| {
        let o = bccore(&[
            "battery",
            "--theorem",
            "all",
            "--field",
            "GF3",
            "--dims",
            "1..3",
            "--count",
            "40",
            "--seed",
            "9",
            "--workers",
            workers,
        ]);
        assert_eq!(code(&o), 0);
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for r in v.as_array_mut().unwrap() {
            r["wall_ms"] = 0.into();
        }
        serde_json::to_string_pretty(&v).unwrap()
    };
    let first = run("1");
    assert_eq!(first, run("4"));
    assert_eq!(first, run("2"));
}
