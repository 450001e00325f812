use std::fs;
use std::path::PathBuf;

use tempfile::TempDir;
use trimatrix::cli::{run, EXIT_OK, EXIT_REFUTED, EXIT_USAGE};
use trimatrix::{catalog, IntersectionMatrix, Triangulation};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn trimatrix(args: &[&str], stdin: &str) -> Outcome {
    let mut input = stdin.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("trimatrix").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn gen_prints_parseable_tri() {
    for name in catalog::names() {
        let name = name.replace("(n)", "(6)");
        let o = trimatrix(&["gen", "--name", &name], "");
        assert_eq!(o.code, EXIT_OK, "{name}: {}", o.stderr);
        let k: Triangulation = o.stdout.parse().unwrap();
        assert_eq!(k, catalog::standard(&name).unwrap());
    }
}

#[test]
fn gen_unknown_name_is_a_usage_error() {
    let o = trimatrix(&["gen", "--name", "klein-bottle"], "");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("known:"));
}

#[test]
fn matrix_from_stdin_matches_library() {
    let tri = catalog::tp10().to_tri_string();
    let o = trimatrix(&["matrix", "-"], &tri);
    assert_eq!(o.code, EXIT_OK);
    let m = IntersectionMatrix::parse(&o.stdout).unwrap();
    assert_eq!(
        m,
        trimatrix::intersection::intersection_matrix(&catalog::tp10())
    );
}

#[test]
fn matrix_reconstruct_matrix_is_a_fixed_point() {
    for (name, k) in catalog::corpus() {
        let m1 = trimatrix(&["matrix", "-"], &k.to_tri_string()).stdout;
        let rebuilt = trimatrix(&["reconstruct", "-"], &m1);
        assert_eq!(rebuilt.code, EXIT_OK, "{name}");
        let m2 = trimatrix(&["matrix", "-"], &rebuilt.stdout).stdout;
        assert_eq!(m1, m2, "{name}");
    }
}

#[test]
fn reconstruct_reports_ambiguity() {
    let m = trimatrix(&["matrix", "-"], &catalog::tp12().to_tri_string()).stdout;
    let o = trimatrix(&["reconstruct", "-"], &m);
    assert!(o.stdout.contains("# ambiguity: TP12"), "{}", o.stdout);
    assert!(o.stdout.contains("all isomorphic: true"));

    let m = trimatrix(&["matrix", "-"], &catalog::octahedron().to_tri_string()).stdout;
    let o = trimatrix(&["reconstruct", "-"], &m);
    assert!(o.stdout.contains("# ambiguity: None"));
}

#[test]
fn reconstruct_budget_is_reported() {
    let m = trimatrix(&["matrix", "-"], &catalog::icosahedron().to_tri_string()).stdout;
    let o = trimatrix(&["reconstruct", "-", "--node-limit", "3"], &m);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("budget"), "{}", o.stderr);
}

#[test]
fn output_is_deterministic() {
    let tri = catalog::icosahedron().to_tri_string();
    let m = trimatrix(&["matrix", "-"], &tri).stdout;
    let a = trimatrix(&["reconstruct", "-"], &m).stdout;
    let b = trimatrix(&["reconstruct", "-"], &m).stdout;
    assert_eq!(a, b);
    let a = trimatrix(&["verify-lemma", "--max-n", "6"], "").stdout;
    let b = trimatrix(&["verify-lemma", "--max-n", "6"], "").stdout;
    assert_eq!(a, b);
}

#[test]
fn check_map_and_extend_on_tp10() {
    let dir = TempDir::new().unwrap();
    let tp10 = write(&dir, "tp10.tri", &catalog::tp10().to_tri_string());

    let id = "0 1 2 3 4 5 6 7 8 9";
    let o = trimatrix(&["check-map", &tp10, &tp10, id], "");
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, "yes\n"));
    let o = trimatrix(&["extend", &tp10, &tp10, id], "");
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("Extended\n"));
    assert!(o.stdout.contains("x -> x\n"));

    // s_i -> r_{2i mod 5}, r_i -> s_{3i mod 5}
    let swap = write(&dir, "swap.map", "5 7 9 6 8 0 2 4 1 3\n");
    let o = trimatrix(&["check-map", &tp10, &tp10, &swap], "");
    assert_eq!(o.code, EXIT_OK);
    let o = trimatrix(&["extend", &tp10, &tp10, "-"], "5,7,9,6,8,0,2,4,1,3");
    assert_eq!(
        (o.code, o.stdout.as_str()),
        (EXIT_REFUTED, "NonExtendable a0\n")
    );

    let o = trimatrix(&["check-map", &tp10, &tp10, "5 1 2 3 4 0 6 7 8 9"], "");
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_REFUTED, "no\n"));
}

#[test]
fn bad_bijection_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let tet = write(&dir, "tet.tri", &catalog::tetrahedron().to_tri_string());
    for bad in ["0 1 2", "0 0 1 2", "0 1 2 x"] {
        let o = trimatrix(&["check-map", &tet, &tet, bad], "");
        assert_eq!(o.code, EXIT_USAGE, "{bad}");
    }
}

#[test]
fn stdin_is_read_at_most_once() {
    let tri = catalog::tetrahedron().to_tri_string();
    let o = trimatrix(&["check-map", "-", "-", "0 1 2 3"], &tri);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("once"));
}

#[test]
fn classify_link_cases() {
    let tp10 = catalog::tp10().to_tri_string();
    let o = trimatrix(&["classify-link", "-", "--vertex", "x"], &tp10);
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, "Disk(5)\n"));

    let ico = catalog::icosahedron().to_tri_string();
    let o = trimatrix(&["classify-link", "-", "--vertex", "t"], &ico);
    assert_eq!(o.stdout, "Disk(5)\n");

    let o = trimatrix(&["classify-link", "-", "--vertex", "nowhere"], &ico);
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let o = trimatrix(&["matrix", "-"], "# header\na b c\na b\n");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("line 3"), "{}", o.stderr);

    let o = trimatrix(&["matrix", "-"], "a b c\n\nc b a\n");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("line 3"), "{}", o.stderr);

    let o = trimatrix(&["reconstruct", "-"], "2\n2 0\n0 3\n");
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = trimatrix(&["matrix", "/nonexistent/k.tri"], "");
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(trimatrix(&["frobnicate"], "").code, EXIT_USAGE);
    assert_eq!(trimatrix(&[], "").code, EXIT_USAGE);
    assert_eq!(
        trimatrix(&["verify-lemma", "--max-n", "2"], "").code,
        EXIT_USAGE
    );
    assert_eq!(
        trimatrix(&["verify-lemma", "--max-n", "9"], "").code,
        EXIT_USAGE
    );
    let help = trimatrix(&["--help"], "");
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("reconstruct"));
}

#[test]
fn verify_lemma_table_lists_each_n() {
    let o = trimatrix(&["verify-lemma", "--max-n", "6"], "");
    for n in 3..=6 {
        assert!(
            o.stdout.lines().any(|l| l.starts_with(&format!("{n}\t"))),
            "missing row {n}:\n{}",
            o.stdout
        );
    }
    // the three-triangle book at n = 3 falls outside the three types
    assert_eq!(o.code, EXIT_REFUTED);
}
