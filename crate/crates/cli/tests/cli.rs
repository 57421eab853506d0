use std::path::PathBuf;
use std::process::{Command, Output};

fn bsgeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsgeo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn britton_reduction() {
    let o = bsgeo(&["--p", "1", "--q", "3", "britton", "7t14T-2tt9T2T23"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "157\n");
    let o = bsgeo(&["--p", "1", "--q", "3", "britton", ""]);
    assert_eq!(stdout(&o), "\n");
    let o = bsgeo(&["--p", "1", "--q", "3", "--raw", "britton", "t1T"]);
    assert_eq!(stdout(&o), "aaa\n");
}

#[test]
fn structure_commands() {
    let o = bsgeo(&["--p", "2", "--q", "4", "classify", "1T1t1"]);
    assert_eq!(stdout(&o), "difficult (valley)\n");
    let o = bsgeo(&["--p", "2", "--q", "4", "tseq", "1T1t1tT"]);
    assert_eq!(stdout(&o), "Tt\n");
    let o = bsgeo(&["--p", "1", "--q", "3", "canonical", "-1t"]);
    assert_eq!(stdout(&o), "2t-1\n");
}

#[test]
fn llnf_of_the_appendix_word() {
    let o = bsgeo(&["--p", "1", "--q", "3", "llnf", "7t14T-2tt9T2T23"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "t^4 2TTT-1T-2\nttttaaTTTATAA\n13\n");
    let o = bsgeo(&["--p", "1", "--q", "3", "--raw", "llnf", "7t14T-2tt9T2T23"]);
    assert_eq!(stdout(&o), "ttttaaTTTATAA\n13\n");
}

#[test]
fn geodesic_lengths() {
    let o = bsgeo(&["--p", "1", "--q", "3", "geolen", "tT"]);
    assert_eq!(stdout(&o), "0\n");
    let o = bsgeo(&["--p", "1", "--q", "3", "geolen", "aaaaaa"]);
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn json_goldens() {
    for (args, file) in [
        (
            vec![
                "--p",
                "1",
                "--q",
                "3",
                "--format",
                "json",
                "pnf",
                "7t14T-2tt9T2T23",
            ],
            "pnf_appendix.json",
        ),
        (
            vec![
                "--p",
                "1",
                "--q",
                "3",
                "--format",
                "json",
                "llnf",
                "7t14T-2tt9T2T23",
            ],
            "llnf_appendix.json",
        ),
        (
            vec!["--p", "2", "--q", "4", "--format", "json", "pnf", "1T1t1"],
            "pnf_valley.json",
        ),
        (
            vec![
                "--p",
                "2",
                "--q",
                "5",
                "--format",
                "json",
                "classify",
                "1t2t3T4t5T6T7",
            ],
            "classify_general.json",
        ),
    ] {
        let o = bsgeo(&args);
        assert!(o.status.success(), "{file}");
        assert_eq!(stdout(&o), golden(file), "{file}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        let mut expected = vec![
            "p",
            "q",
            "input",
            "britton",
            "t_sequence",
            "classification",
            "pnf",
            "llnf",
            "geodesic_length",
        ];
        expected.sort();
        let mut keys = keys;
        keys.sort();
        assert_eq!(keys, expected);
    }
}

#[test]
fn exit_codes() {
    let o = bsgeo(&["--p", "2", "--q", "3", "pnf", "1T1t1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("open problem"));
    let o = bsgeo(&["--p", "2", "--q", "3", "geolen", "1T1t1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bsgeo(&["--p", "1", "--q", "3", "britton", "7x"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 1"));
    let o = bsgeo(&["--p", "1", "--q", "3", "llnf", "t"]);
    assert_eq!(o.status.code(), Some(1));
    let o = bsgeo(&["--p", "3", "--q", "3", "geolen", "a"]);
    assert_eq!(o.status.code(), Some(1));
    let o = bsgeo(&["--p", "2", "--q", "3", "geolen", "1t1T1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn oracle_commands() {
    let o = bsgeo(&[
        "--p",
        "1",
        "--q",
        "2",
        "oracle",
        "check",
        "--wordlen",
        "5",
        "--radius",
        "8",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "OK (all 1365 words)\n");
    let o = bsgeo(&["--p", "1", "--q", "3", "oracle", "ball", "--radius", "0"]);
    assert_eq!(stdout(&o), "\t0\t\n");
    let dir = std::env::temp_dir().join(format!("bsgeo-ball-{}", std::process::id()));
    let path = dir.to_string_lossy().to_string();
    let o = bsgeo(&[
        "--p", "1", "--q", "3", "oracle", "ball", "--radius", "4", "--out", &path,
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&dir).unwrap();
    std::fs::remove_file(&dir).unwrap();
    assert!(text.lines().any(|l| l == "-4\t4\ttATA"));
    let params = bsgeo::GroupParams::new(1, 3).unwrap();
    let ball = bsgeo::BallIndex::import(&params, text.as_bytes()).unwrap();
    assert_eq!(ball.radius(), 4);
    assert_eq!(ball.geolen(&bsgeo::parse_alt("-4").unwrap()).unwrap(), 4);
}

#[test]
fn fuzz_is_deterministic() {
    let args = [
        "--p",
        "2",
        "--q",
        "4",
        "fuzz",
        "--iterations",
        "300",
        "--seed",
        "42",
        "--maxlen",
        "12",
    ];
    let a = bsgeo(&args);
    let b = bsgeo(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), "OK (300 words, seed 42)\n");
    assert_eq!(a.stdout, b.stdout);
}
