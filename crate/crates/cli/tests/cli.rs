use std::path::{Path, PathBuf};
use std::process::Command;

use preimage::format::parse_automaton;
use preimage_cli::report::{Answer, Method, WitnessReport};
use tempfile::TempDir;

const CERNY4: &str = "# a: 0→1→2→3→0, b: 3→0\n4 2\n1 0\n2 1\n3 2\n0 0\n";
const PERM3: &str = "3 2\n1 1\n2 0\n0 2\n";
const CHAIN2: &str = "2 1\n1\n1\n";

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn preimage(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_preimage"));
    cmd.args(args).env_remove("PREIMAGE_NODE_LIMIT");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn report(run: &Run) -> WitnessReport {
    serde_json::from_str(&run.stdout).expect("report matches the schema")
}

#[test]
fn reference_checks() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4", CERNY4);
    let r = preimage(
        &[
            "check",
            s(&c4),
            "--subset",
            "1,2",
            "--problem",
            "extend",
            "--json",
        ],
        &[],
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rep = report(&r);
    assert_eq!(rep.answer, Answer::Yes);
    assert_eq!(rep.witness.as_deref(), Some("ba"));
    assert_eq!(rep.witness_length, Some(2));
    assert_eq!(rep.preimage_size, Some(3));

    let p3 = file(&dir, "p3", PERM3);
    let r = preimage(
        &["check", s(&p3), "--subset", "0", "--problem", "resize"],
        &[],
    );
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("answer: no"));

    let ch = file(&dir, "ch", CHAIN2);
    let r = preimage(
        &[
            "check",
            s(&ch),
            "--subset",
            "0",
            "--problem",
            "avoid",
            "--witness",
        ],
        &[],
    );
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("witness: a\n"));
}

#[test]
fn routing_and_fast_paths() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4", CERNY4);
    let r = report(&preimage(
        &[
            "check",
            s(&c4),
            "--subset",
            "1,2",
            "--problem",
            "resize",
            "--json",
        ],
        &[],
    ));
    assert_eq!(
        (r.answer, r.method, r.witness),
        (Answer::Yes, Method::FastPath, None)
    );
    let r = report(&preimage(
        &[
            "check",
            s(&c4),
            "--subset",
            "1,2",
            "--problem",
            "resize",
            "--witness",
            "--json",
        ],
        &[],
    ));
    assert_eq!((r.method, r.witness_length), (Method::Poly, Some(2)));
    assert!(r.stats.basis_size.is_some());

    let r = report(&preimage(
        &[
            "check",
            s(&c4),
            "--subset",
            "2",
            "--problem",
            "extend-total",
            "--witness",
            "--json",
        ],
        &[],
    ));
    assert_eq!(
        (r.answer, r.method, r.preimage_size),
        (Answer::Yes, Method::FastPath, Some(4))
    );

    let r = report(&preimage(
        &[
            "oracle",
            s(&c4),
            "--subset",
            "2",
            "--goal",
            "extend-total",
            "--json",
        ],
        &[],
    ));
    assert_eq!((r.method, r.witness_length), (Method::Oracle, Some(11)));
}

#[test]
fn bounded_length() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4", CERNY4);
    let ext = |l: &str| {
        preimage(
            &[
                "check",
                s(&c4),
                "--subset",
                "1,2",
                "--problem",
                "extend",
                "--max-len",
                l,
            ],
            &[],
        )
    };
    assert_eq!(ext("2").code, 0);
    assert_eq!(ext("1").code, 1);

    // the avoiding search starts with a reset word, far longer than the shortest "ba"
    let avoid = |method: &str| {
        report(&preimage(
            &[
                "check",
                s(&c4),
                "--subset",
                "0",
                "--problem",
                "avoid",
                "--max-len",
                "2",
                "--method",
                method,
                "--json",
            ],
            &[],
        ))
    };
    let poly = avoid("poly");
    assert_eq!(poly.answer, Answer::Unknown);
    assert!(poly.witness_length.unwrap() > 2);
    let auto = avoid("auto");
    assert_eq!(
        (auto.answer, auto.method, auto.witness_length),
        (Answer::Yes, Method::Oracle, Some(2))
    );
}

#[test]
fn budget_exhaustion_is_reported() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4", CERNY4);
    let args = [
        "check",
        s(&c4),
        "--subset",
        "1,2",
        "--problem",
        "extend",
        "--method",
        "poly",
        "--json",
    ];
    let r = preimage(&args, &[("PREIMAGE_NODE_LIMIT", "1")]);
    assert_eq!(r.code, 2);
    let rep = report(&r);
    assert_eq!(rep.answer, Answer::UnknownBudget);
    assert!(rep.note.unwrap().contains("budget"));
    // auto falls back to the oracle, which is bound by the same limit
    let r = preimage(
        &[
            "check",
            s(&c4),
            "--subset",
            "1,2",
            "--problem",
            "extend",
            "--node-limit",
            "1",
        ],
        &[],
    );
    assert_eq!(r.code, 2);
    let r = preimage(
        &[
            "oracle",
            s(&c4),
            "--subset",
            "1",
            "--goal",
            "extend",
            "--max-states",
            "3",
        ],
        &[],
    );
    assert_eq!(r.code, 2);
    assert!(r.stdout.contains("unknown-budget"));
}

#[test]
fn json_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4", CERNY4);
    let args = [
        "check",
        s(&c4),
        "--subset",
        "0,3",
        "--problem",
        "avoid",
        "--witness",
        "--json",
    ];
    let a = preimage(&args, &[]);
    let b = preimage(&args, &[]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.contains("elapsed_us"));
    let mut timed = args.to_vec();
    timed.push("--timing");
    assert!(report(&preimage(&timed, &[])).stats.elapsed_us.is_some());
}

#[test]
fn structural_commands() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4", CERNY4);
    let p3 = file(&dir, "p3", PERM3);
    let r = preimage(&["classify", s(&c4)], &[]);
    assert!(r
        .stdout
        .contains("strongly-connected: yes\nsynchronizing: yes\n"));
    let r = preimage(&["rank", s(&p3)], &[]);
    assert!(r.stdout.starts_with("rank: 3\n"));
    let r = preimage(&["reset", s(&c4), "--method", "oracle"], &[]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("length: 9\n"));
    let r = preimage(&["reset", s(&p3)], &[]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("synchronizing: no"));
}

#[test]
fn generated_automata_reparse() {
    let a = preimage(
        &[
            "random",
            "--states",
            "6",
            "--letters",
            "2",
            "--seed",
            "9",
            "--constraint",
            "synchronizing",
        ],
        &[],
    );
    let b = preimage(
        &[
            "random",
            "--states",
            "6",
            "--letters",
            "2",
            "--seed",
            "9",
            "--constraint",
            "synchronizing",
        ],
        &[],
    );
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(parse_automaton(&a.stdout).unwrap().num_states(), 6);

    let dir = TempDir::new().unwrap();
    let ch = file(&dir, "ch", "2 2\n1 0\n1 1\n");
    let g = preimage(&["gadget", "sink", s(&ch), "--subset", "1"], &[]);
    assert_eq!(g.code, 0, "{}", g.stderr);
    assert!(g.stdout.contains("# subset: 1\n"));
    let a = parse_automaton(&g.stdout).unwrap();
    assert_eq!(a.num_states(), 7);
    assert_eq!(a.sink_state(), Some(6));

    let d1 = file(&dir, "d1", "2 2\n1 0\n0 1\ninitial 0\naccepting 1\n");
    let d2 = file(&dir, "d2", "2 2\n1 0\n0 1\ninitial 0\naccepting 0\n");
    let g = preimage(&["gadget", "intersection", s(&d1), s(&d2)], &[]);
    assert_eq!(g.code, 0, "{}", g.stderr);
    let gadget = file(&dir, "g", &g.stdout);
    let subset = g
        .stdout
        .lines()
        .nth(1)
        .unwrap()
        .trim_start_matches("# subset: ")
        .to_string();
    // odd and even counts of `a` never agree
    let r = preimage(
        &[
            "oracle",
            s(&gadget),
            "--subset",
            &subset,
            "--goal",
            "extend",
            "--max-states",
            "64",
        ],
        &[],
    );
    assert_eq!(r.code, 1, "{}{}", r.stdout, r.stderr);
}

#[test]
fn errors_exit_above_two() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad", "2 1\n2\n0\n");
    let r = preimage(&["classify", s(&bad)], &[]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("line 2"));
    let r = preimage(&["classify", "/nonexistent/file"], &[]);
    assert_eq!(r.code, 3);
    let c4 = file(&dir, "c4", CERNY4);
    let r = preimage(
        &["check", s(&c4), "--subset", "9", "--problem", "extend"],
        &[],
    );
    assert_eq!(r.code, 3);
    let r = preimage(
        &["check", s(&c4), "--problem", "nope", "--subset", "1"],
        &[],
    );
    assert_eq!(r.code, 3);
    assert_eq!(preimage(&["--help"], &[]).code, 0);
    let r = preimage(&["gadget", "sink", s(&c4), "--subset", "1"], &[]);
    assert_eq!(r.code, 0);
    let p3 = file(&dir, "p3", "3 3\n0 0 0\n1 1 1\n2 2 2\n");
    let r = preimage(&["gadget", "sink", s(&p3), "--subset", "1"], &[]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("binary"));
}
