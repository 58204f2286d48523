use std::process::Command as Process;

use clap::Parser;
use pencilcount_cli::{run, Cli, Query, ResultRecord};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pencilcount").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> ResultRecord {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = invoke(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn genus1_default_prints_six() {
    let (code, out, _) = invoke(&["genus1", "--ram", "2,2,2,2"]);
    assert_eq!(code, 0);
    assert!(out.lines().next().unwrap().ends_with(" 6"), "{out}");
}

#[test]
fn genus1_all_methods_agree_on_96() {
    let r = json(&["genus1", "--ram", "4,4,4,2", "--method", "all"]);
    assert_eq!(r.result.as_deref(), Some("96"));
    assert_eq!(r.agreed, Some(true));
    assert_eq!(r.methods.len(), 4);
    assert!(r.methods.values().all(|v| v == "96"));
    assert_eq!(r.degree, Some(5));
}

#[test]
fn json_counts_are_strings() {
    let (_, out, _) = invoke(&["genus1", "--ram", "4,4,4,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], serde_json::json!("96"));
    for key in ["query", "results", "methods", "agreed", "factor"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn hyperelliptic_genusg() {
    let r = json(&[
        "genusg",
        "--genus",
        "2",
        "--degree",
        "2",
        "--moving",
        "2,2,2,2,2,2",
    ]);
    assert_eq!(r.result.as_deref(), Some("720"));
    assert_eq!(r.factor.as_deref(), Some("1"));
}

#[test]
fn genusg_pads_and_divides() {
    let r = json(&[
        "genusg", "--genus", "1", "--degree", "4", "--fixed", "4", "--moving", "4",
    ]);
    assert_eq!(r.result.as_deref(), Some("15"));
    assert_eq!(r.factor.as_deref(), Some("2"));
    assert_eq!(r.padded_result.as_deref(), Some("30"));
    let w = json(&[
        "genusg",
        "--genus",
        "1",
        "--degree",
        "3",
        "--fixed",
        "2,2",
        "--moving",
        "2,2,3",
        "--weighted",
    ]);
    assert!(w.result.is_some());
}

#[test]
fn genus0_and_weighted() {
    assert_eq!(
        json(&["genus0", "--degree", "3", "--ram", "2,2,2,2"])
            .result
            .as_deref(),
        Some("2")
    );
    assert_eq!(
        json(&["weighted", "--ram", "3,3,2,2"]).result.as_deref(),
        Some("16")
    );
    let ff = json(&["weighted", "--ram", "4,4,2,2", "--fixed-first"]);
    assert_eq!(ff.result.as_deref(), Some("30"));
}

#[test]
fn validation_errors_exit_one() {
    let (code, _, err) = invoke(&["genus1", "--ram", "2,2,2,1"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("off-shell:"), "{err}");
    let (code, _, err) = invoke(&["genus1", "--ram", "2,2,2,2", "--degree", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("contradicts"), "{err}");
    let (code, _, _) = invoke(&["genus1", "--ram", "2,2,2"]);
    assert_eq!(code, 1);
    let (code, _, _) = invoke(&[
        "genusg", "--genus", "1", "--degree", "3", "--fixed", "2,2", "--moving", "2,2,2",
    ]);
    assert_eq!(code, 1);
    let (code, _, _) = invoke(&["nonsense"]);
    assert_eq!(code, 1);
    let (code, _, _) = invoke(&["table", "--genus", "2", "--degree", "3"]);
    assert_eq!(code, 1);
    let (code, _, _) = invoke(&["verify", "--jobs", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("genusg"));
}

#[test]
fn table_csv_header_and_rows() {
    let (code, out, _) = invoke(&[
        "table",
        "--genus",
        "1",
        "--degree",
        "5",
        "--format",
        "csv",
        "--ordered",
    ]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("d1,d2,d3,d4,count"));
    let rows: Vec<Vec<i64>> = lines
        .map(|l| l.split(',').take(4).map(|x| x.parse().unwrap()).collect())
        .collect();
    let mut expected = Vec::new();
    for a in 1..=5 {
        for b in 1..=5 {
            for c in 1..=5 {
                for d in 1..=5 {
                    if a + b + c + d == 14 {
                        expected.push(vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    assert_eq!(rows, expected);
}

#[test]
fn table_dedup_keeps_sorted_representatives() {
    let r = json(&["table", "--genus", "1", "--degree", "5"]);
    assert!(r
        .results
        .iter()
        .all(|row| row.orders.windows(2).all(|w| w[0] >= w[1])));
    assert!(r.results.windows(2).all(|w| w[0].orders < w[1].orders));
    let row = r
        .results
        .iter()
        .find(|row| row.orders == [4, 4, 4, 2])
        .unwrap();
    assert_eq!(row.count, "96");
}

#[test]
fn query_round_trips_through_json_and_args() {
    let cases: &[&[&str]] = &[
        &["genus0", "--degree", "3", "--ram", "3,3"],
        &[
            "genus1", "--ram", "4,4,4,2", "--method", "series", "--degree", "5",
        ],
        &["weighted", "--ram", "3,3,2,2", "--fixed-first"],
        &[
            "genusg",
            "--genus",
            "2",
            "--degree",
            "2",
            "--moving",
            "2,2,2,2,2,2",
            "--weighted",
        ],
        &[
            "table",
            "--genus",
            "1",
            "--degree",
            "4",
            "--ordered",
            "--format",
            "csv",
        ],
        &["verify", "--suite", "duality", "--max-degree", "4"],
    ];
    for args in cases {
        let cli = Cli::try_parse_from(std::iter::once("pencilcount").chain(args.iter().copied()))
            .unwrap();
        let q = Query::from_command(&cli.command, cli.format);
        let back: Query = serde_json::from_str(&serde_json::to_string(&q).unwrap()).unwrap();
        assert_eq!(back, q);
        let reparsed =
            Cli::try_parse_from(std::iter::once("pencilcount".to_string()).chain(q.to_args()))
                .unwrap();
        assert_eq!(
            Query::from_command(&reparsed.command, reparsed.format),
            q,
            "{args:?}"
        );
    }
}

#[test]
fn emitted_json_query_is_parseable() {
    let r = json(&["genus1", "--ram", "3,3,2,2"]);
    let reparsed =
        Cli::try_parse_from(std::iter::once("pencilcount".to_string()).chain(r.query.to_args()))
            .unwrap();
    assert_eq!(
        Query::from_command(&reparsed.command, reparsed.format),
        r.query
    );
}

#[test]
fn verify_text_lines() {
    let (code, out, _) = invoke(&[
        "verify",
        "--suite",
        "recursion",
        "--max-degree",
        "4",
        "--jobs",
        "2",
    ]);
    assert_eq!(code, 0);
    let props: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert_eq!(props.len(), 2);
    assert!(props.iter().all(|l| l.starts_with("PASS ")));
    let (_, csv, _) = invoke(&[
        "verify",
        "--suite",
        "duality",
        "--max-degree",
        "3",
        "--format",
        "csv",
    ]);
    assert!(csv.starts_with("property,status,detail\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_pencilcount");
    let ok = Process::new(bin)
        .args(["genus1", "--ram", "2,2,2,2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Process::new(bin)
        .args(["genus1", "--ram", "2,2,2,1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
