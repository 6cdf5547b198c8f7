use std::fs;
use std::path::Path;
use std::process::Command;

use sais_lcp::gen::GenKind;
use sais_lcp_cli::Format;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sais-lcp"))
}

fn run(args: &[&str], dir: &Path) -> (i32, String, String) {
    let out = bin().args(args).current_dir(dir).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn build_banana_text() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("banana.txt"), "banana").unwrap();
    let (code, _, err) = run(
        &[
            "build",
            "banana.txt",
            "--lcp",
            "out.lcp",
            "--format",
            "text",
        ],
        dir.path(),
    );
    assert_eq!(code, 0, "{err}");
    assert_eq!(
        fs::read_to_string(dir.path().join("out.lcp")).unwrap(),
        "0\n1\n3\n0\n0\n2\n"
    );
    assert_eq!(
        fs::read_to_string(dir.path().join("banana.txt.sa")).unwrap(),
        "5\n3\n1\n0\n4\n2\n"
    );
}

#[test]
fn build_empty_file() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("empty"), "").unwrap();
    let (code, _, _) = run(
        &["build", "empty", "--sa", "e.sa", "--lcp", "e.lcp"],
        dir.path(),
    );
    assert_eq!(code, 0);
    assert!(fs::read(dir.path().join("e.sa")).unwrap().is_empty());
    assert!(fs::read(dir.path().join("e.lcp")).unwrap().is_empty());
}

#[test]
fn build_bin32_rejects_oversized() {
    let dir = tempfile::tempdir().unwrap();
    let big = dir.path().join("big");
    // Sparse; the width guard runs before the file is read.
    fs::File::create(&big).unwrap().set_len(3 << 30).unwrap();
    let (code, _, err) = run(&["build", "big", "--format", "bin32"], dir.path());
    assert_eq!(code, 2);
    assert!(err.contains("bin32"), "{err}");
}

#[test]
fn build_round_trip_all_formats() {
    let dir = tempfile::tempdir().unwrap();
    for kind in GenKind::ALL {
        let input = format!("{kind}.txt");
        let (code, _, _) = run(
            &[
                "gen",
                "--kind",
                kind.label(),
                "--sigma",
                "5",
                "--length",
                "30000",
                "--seed",
                "3",
                "--out",
                &input,
            ],
            dir.path(),
        );
        assert_eq!(code, 0);
        let text = fs::read(dir.path().join(&input)).unwrap();
        let mut decoded = Vec::new();
        for format in Format::ALL {
            let (sa, lcp) = (
                format!("{kind}.{format}.sa"),
                format!("{kind}.{format}.lcp"),
            );
            let (code, _, err) = run(
                &[
                    "build",
                    &input,
                    "--sa",
                    &sa,
                    "--lcp",
                    &lcp,
                    "--format",
                    format.label(),
                ],
                dir.path(),
            );
            assert_eq!(code, 0, "{err}");
            let sa = format
                .decode(&fs::read(dir.path().join(sa)).unwrap())
                .unwrap();
            let lcp = format
                .decode(&fs::read(dir.path().join(lcp)).unwrap())
                .unwrap();
            let sa64: Vec<u64> = sa.iter().map(|&x| x as u64).collect();
            let lcp64: Vec<u64> = lcp.iter().map(|&x| x as u64).collect();
            assert!(sais_lcp::verify(&text, &sa64, &lcp64).ok, "{kind} {format}");
            decoded.push((sa, lcp));
        }
        assert!(decoded.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn verify_digests_agree_across_trackers() {
    let dir = tempfile::tempdir().unwrap();
    run(
        &[
            "gen", "--kind", "markov", "--sigma", "26", "--length", "50000", "--out", "m",
        ],
        dir.path(),
    );
    let mut digests = Vec::new();
    for algo in ["induce", "kasai", "phi", "naive"] {
        for rmq in ["scan", "marray", "stack"] {
            for sstar in ["sparse-phi", "recursive"] {
                let (code, out, _) = run(
                    &[
                        "verify", "m", "--algo", algo, "--rmq", rmq, "--sstar", sstar,
                    ],
                    dir.path(),
                );
                assert_eq!(code, 0, "{out}");
                digests.push(out.lines().last().unwrap().to_owned());
            }
        }
    }
    digests.dedup();
    assert_eq!(digests.len(), 1);
}

#[test]
fn verify_empty_and_missing() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("empty"), "").unwrap();
    assert_eq!(run(&["verify", "empty"], dir.path()).0, 0);
    assert_eq!(run(&["verify", "missing"], dir.path()).0, 2);
    assert_eq!(run(&["verify", "empty", "--rmq", "heap"], dir.path()).0, 2);
}

#[test]
fn gen_examples() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(
        &["gen", "--kind", "periodic", "--sigma", "2", "--length", "6"],
        dir.path(),
    );
    assert_eq!((code, out.as_str()), (0, "ababab"));
    for name in ["a", "b"] {
        run(
            &[
                "gen", "--kind", "random", "--seed", "42", "--length", "1000", "--out", name,
            ],
            dir.path(),
        );
    }
    assert_eq!(
        fs::read(dir.path().join("a")).unwrap(),
        fs::read(dir.path().join("b")).unwrap()
    );
    assert_eq!(
        run(&["gen", "--length", "0", "--out", "z"], dir.path()).0,
        0
    );
    assert!(fs::read(dir.path().join("z")).unwrap().is_empty());
    assert_eq!(
        run(&["gen", "--length", "5", "--sigma", "0"], dir.path()).0,
        2
    );
    assert_eq!(
        run(&["gen", "--length", "5", "--sigma", "256"], dir.path()).0,
        2
    );
}

#[test]
fn bench_csv_one_record_per_pair() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("file.txt"),
        "mississippi river banks ".repeat(200),
    )
    .unwrap();
    fs::write(dir.path().join("other.txt"), "abracadabra").unwrap();
    let (code, out, err) = run(
        &[
            "bench",
            "file.txt",
            "other.txt",
            "--algos",
            "induce,kasai",
            "--repeat",
            "3",
            "--csv",
            "out.csv",
            "--verify",
        ],
        dir.path(),
    );
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("induce") && out.contains("kasai"));
    let csv = fs::read_to_string(dir.path().join("out.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "input,size,algorithm,tracker,seconds,peak_bytes,verified"
    );
    assert_eq!(lines.len(), 1 + 2 * 2);
    let rows: Vec<Vec<&str>> = lines[1..].iter().map(|l| l.split(',').collect()).collect();
    assert_eq!(
        rows.iter()
            .map(|r| (r[0], r[2], r[3], r[6]))
            .collect::<Vec<_>>(),
        vec![
            ("file.txt", "induce", "marray", "ok"),
            ("file.txt", "kasai", "-", "ok"),
            ("other.txt", "induce", "marray", "ok"),
            ("other.txt", "kasai", "-", "ok"),
        ]
    );
    assert!(rows.iter().all(|r| r[4].parse::<f64>().unwrap() >= 0.0));
    assert_eq!(
        run(&["bench", "file.txt", "--repeat", "0"], dir.path()).0,
        2
    );
    assert_eq!(run(&["bench", "nope.txt"], dir.path()).0, 2);
}
