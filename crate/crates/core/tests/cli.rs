use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn braidmod(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_braidmod"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = braidmod(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn golden_text() {
    let loop_file = std::env::temp_dir().join("braidmod_cli_loop.json");
    std::fs::write(
        &loop_file,
        braidmod::poly::PolyLoop::model(3, 1, 64).unwrap().to_json(),
    )
    .unwrap();
    let loop_path = loop_file.to_str().unwrap();
    let cases: &[(&[&str], &str)] = &[
        (
            &["classify", "B3: 1 -2"],
            "pseudo_anosov trace=3 entropy=0.9624236501192069 module=1.6321256513182483",
        ),
        (
            &["classify", "B3: 1 1 1"],
            "reducible_parabolic k=3 l=0 entropy=0 module=inf",
        ),
        (
            &["classify", "B3: 1 2"],
            "periodic circular=true power=1 order=6 entropy=0 module=inf",
        ),
        (
            &["search-min", "--max-len", "6"],
            "B3: 1 -2  entropy=0.9624236501192069",
        ),
        (&["search-min", "--max-len", "1"], "none"),
        (&["entropy", "B3: 1 -2 1 -2"], "1.9248473002384139"),
        (&["module", "B2: 1 1 1"], "inf"),
        (&["entropy", "B2: 1 1 1"], "0"),
        (&["theta", "B3: 1 -2"], "[[2, 1], [1, 1]]"),
        (&["conjugate", "B3: 1", "B3: 2"], "true"),
        (&["conjugate", "B3: 1", "B3: -1"], "false"),
        (&["trivial", "B3: 1 2 1 -2 -1 -2"], "true"),
        (&["link", "B3: 1 2 1 1 2 1", "1", "3"], "1"),
        (&["delete", "B3: 1 2 1 1 2 1", "--keep", "1,2"], "B2: 1 1"),
        (&["cable", &data("cable_tree.json")], "B4: 1 2 3 3 2 1 2 -3"),
        (
            &["reducible", &data("reducible_tree.json")],
            "entropy=1.9248473002384139 module=0.8160628256591241",
        ),
        (&["project", "[[2, 1], [1, 1]]"], "B3: 1 -2"),
        (&["project", "-1 0 0 -1"], "B3: 1 2 1 1 2 1"),
        (
            &["bundle", "[[1, 1], [0, 1]]"],
            "parabolic_twist sign=1 k=1 entropy=0 module=inf",
        ),
        (
            &["bundle", "0 -1 1 0"],
            "periodic order=4 entropy=0 module=inf",
        ),
        (&["disc-index", "--degree", "3", "--k", "2"], "4"),
        (&["disc-index", loop_path], "2"),
        (
            &["check-gl", "--n", "3", "--module", "30", "--index", "6"],
            "must_be_reducible",
        ),
        (
            &["check-gl", "--n", "3", "--module", "30", "--index", "2"],
            "inconclusive",
        ),
        (
            &["check-cor81", "B3: -2 1", "B3: 2 -1"],
            "hypothesis_fails which=h(b1) > 0",
        ),
        (
            &["check-cor81", "B3: 1", "B3: 1 2 1 1 2 1"],
            "commutator_trivial via=pure",
        ),
        (&["penner", "--n", "3"], "0.17328679513998632"),
        (
            &["penner", "--genus", "2", "--punctures", "0"],
            "0.057762265046662105",
        ),
    ];
    for (args, want) in cases {
        assert_eq!(stdout(args).trim_end(), *want, "{args:?}");
    }
    let out = stdout(&[
        "extract",
        "B4: 1 2 3 3 2 1 2 -3",
        "--orbit",
        "2,3,4",
        "--k",
        "1",
    ]);
    let got: braidmod::BraidWord = out.trim().parse().unwrap();
    assert!(braidmod::equal_3(&got, &"B3: 1 -2".parse().unwrap()).unwrap());
}

#[test]
fn json_for_every_subcommand() {
    let cases: &[&[&str]] = &[
        &["classify", "B3: 1 -2"],
        &["classify", "B3: 1 1 1"],
        &["entropy", "B3: 1 -2"],
        &["module", "B3: 1"],
        &["theta", "B3: 1"],
        &["conjugate", "B3: 1", "B3: 2"],
        &["trivial", "B3: 1 -1"],
        &["link", "B3: 1 1", "1", "2"],
        &["delete", "B3: 1 1", "--keep", "1,2"],
        &["extract", "B3: 1 1", "--orbit", "1,2"],
        &["project", "2 1 1 1"],
        &["bundle", "2 1 1 1"],
        &["disc-index", "--degree", "2", "--k", "1"],
        &["check-gl", "--n", "3", "--module", "30", "--index", "6"],
        &["check-cor81", "B3: 1", "B3: 2"],
        &["penner", "--n", "4"],
        &["search-min", "--max-len", "3"],
        &["selftest"],
    ];
    for args in cases {
        let mut with_json = args.to_vec();
        with_json.push("--json");
        let out = stdout(&with_json);
        let v: Value =
            serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}: {out}"));
        assert!(v.is_object(), "{args:?}");
    }
    let v: Value = serde_json::from_str(&stdout(&["classify", "--json", "B3: 1 -2"])).unwrap();
    assert_eq!(v["class"], "pseudo_anosov");
    assert_eq!(v["trace"], 3);
    assert_eq!(v["entropy"].as_f64().unwrap(), 0.9624236501192069);
    assert_eq!(v["module"].as_f64().unwrap(), 1.6321256513182483);
    assert!(v["dilatation"].as_f64().unwrap() > 2.618);
    let v: Value = serde_json::from_str(&stdout(&["classify", "--json", "B3: 1 1 1"])).unwrap();
    assert_eq!((v["k"].as_i64(), v["l"].as_i64()), (Some(3), Some(0)));
    assert_eq!(
        (v["entropy"].as_str(), v["module"].as_str()),
        (Some("0"), Some("inf"))
    );
    let v: Value =
        serde_json::from_str(&stdout(&["check-cor81", "--json", "B3: 1 -2", "B3: 1 1"])).unwrap();
    assert_eq!(v["verdict"], "hypothesis_fails");
}

#[test]
fn exit_codes() {
    assert_eq!(braidmod(&["unknown"]).0, 2);
    assert_eq!(braidmod(&["classify", "--bogus", "B3: 1"]).0, 2);
    assert_eq!(braidmod(&["link", "B3: 1 1", "one", "2"]).0, 2);
    assert_eq!(braidmod(&["--version"]).0, 0);
    for (args, kind) in [
        (&["classify", "B4: 1 2 3"][..], "not_three_strands"),
        (&["classify", "B3: 3"], "generator_out_of_range"),
        (&["link", "B3: 1", "1", "2"], "strands_not_fixed"),
        (&["project", "1 2 3 4"], "not_unimodular"),
        (
            &["check-gl", "--n", "4", "--module", "30", "--index", "8"],
            "not_prime",
        ),
        (&["penner", "--n", "2"], "bad_strand_count"),
        (&["search-min", "--max-len", "40"], "length_bound_exceeded"),
        (&["cable", "/nonexistent/tree.json"], "invalid_input"),
    ] {
        let (code, out, err) = braidmod(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(
            err.starts_with(&format!("error: {kind}: ")),
            "{args:?}: {err}"
        );
    }
}

#[test]
fn selftest_counts() {
    let out = stdout(&["selftest"]);
    assert!(out.trim_end().ends_with("passed, 0 failed"), "{out}");
}

#[test]
fn braid_text_round_trip() {
    for (text, all) in [
        ("B3: 1 -2", "1,2,3"),
        ("B5: 4 -3 2 -1", "1,2,3,4,5"),
        ("B2:", "1,2"),
    ] {
        assert_eq!(stdout(&["delete", text, "--keep", all]).trim_end(), text);
    }
}
