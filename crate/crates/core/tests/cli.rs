use semilab::cli::run_command;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("semilab").chain(args.iter().copied());
    let code = run_command(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn validate() {
    let (code, out, _) = run(&["validate", &data("z2.sg")]);
    assert_eq!(
        (code, out.as_str()),
        (0, "valid: order=2 commutative=true identity=0\n")
    );
    let (code, _, err) = run(&["validate", &data("nonassoc.sg")]);
    assert_eq!(code, 2);
    assert!(err.contains("not associative: (0*0)*0"), "{err}");
}

#[test]
fn parse_errors_cite_lines() {
    let (code, _, err) = run(&["validate", &data("ragged.sg")]);
    assert_eq!(code, 2);
    assert!(err.contains("line 4: row has 1 entries"), "{err}");
    let (code, _, err) = run(&["validate", &data("missing.sg")]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "), "{err}");
}

#[test]
fn separator_and_idealizer() {
    assert_eq!(run(&["sep", &data("z2.sg"), "{0}"]).1, "{0}\n");
    assert_eq!(run(&["sep", &data("min2.sg"), "{0}"]).1, "{1}\n");
    assert_eq!(run(&["sep", &data("lz2.sg"), "{0}"]).1, "{}\n");
    assert_eq!(run(&["idealizer", &data("min2.sg"), "{0}"]).1, "{0,1}\n");
    assert_eq!(run(&["sep", &data("z2.sg"), "{5}"]).0, 2);
}

#[test]
fn medial() {
    assert_eq!(run(&["medial", &data("lz2.sg"), "{0}"]).1, "medial\n");
    assert_eq!(
        run(&["medial", &data("lz2mon.sg"), "{1}"]).1,
        "not medial: witness (x=0,a=1,b=2,y=0)\n"
    );
}

#[test]
fn congruence_commands() {
    assert_eq!(run(&["pcong", &data("min2.sg"), "{0}"]).1, "{0};{1}\n");
    assert_eq!(run(&["pcong", &data("lz2.sg"), "{0}"]).1, "{0,1}\n");
    let (code, out, _) = run(&["quotient", &data("chain3.sg"), "{0,1};{2}"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "2\n0 0\n0 1\n# monoid=true commutative=true identity_class=1\n"
    );
    let (code, _, err) = run(&["quotient", &data("chain3.sg"), "{0,2};{1}"]);
    assert_eq!(code, 2);
    assert!(err.contains("witness (0,2,1)"), "{err}");
    let out = run(&["congruences", &data("chain3.sg")]).1;
    assert_eq!(out.lines().count(), 4);
    assert!(out.starts_with("{0,1,2} monoid=true commutative=true\n"));
}

#[test]
fn permutation_identity_and_lemma4() {
    assert_eq!(
        run(&["permid", &data("lz2.sg"), "--max-n", "3"]).1,
        "n=3 perm 1 3 2\n"
    );
    assert_eq!(
        run(&["permid", &data("lz2.sg"), "--max-n", "2"]).1,
        "none up to n=2\n"
    );
    assert_eq!(run(&["permid", &data("lz2.sg"), "--max-n", "1"]).0, 2);
    assert_eq!(run(&["lemma4", &data("null3.sg")]).1, "k=1\n");
    assert_eq!(
        run(&["lemma4", &data("lz2mon.sg")]).1,
        "none\nk=1 counterexample (u=0,x=1,y=2,v=0)\n"
    );
}

#[test]
fn enumerate() {
    let out = run(&["enumerate", "2"]).1;
    assert_eq!(out.lines().count(), 8);
    assert_eq!(out.lines().next(), Some("2 0 0 0 0"));
    assert_eq!(
        run(&["enumerate", "3", "--up-to-iso"]).1.lines().count(),
        24
    );
    assert_eq!(run(&["enumerate", "9"]).0, 2);
}

#[test]
fn verify_theorem1_order3() {
    let (code, out, _) = run(&["verify", "--order", "3", "--theorem", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().next(),
        Some("instances: 113, checks: pass only")
    );
    assert!(out.contains("theorem1-forward: pass"));
    assert!(!out.contains("theorem2"));
}

#[test]
fn verify_structured_records() {
    let (code, out, err) = run(&[
        "verify",
        "--order",
        "2",
        "--theorem",
        "cor2",
        "--output",
        "structured",
    ]);
    assert_eq!(code, 0);
    assert!(err.starts_with("instances: 8, checks: pass only"));
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("order=2 table="), "{first}");
    assert!(out
        .lines()
        .all(|l| l.contains(" check=") && l.contains(" status=")));
}

#[test]
fn usage_errors() {
    let (code, out, err) = run(&["frobnicate"]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert_eq!(err.lines().count(), 1);
    assert_eq!(run(&["verify"]).0, 2);
    assert_eq!(run(&["verify", "--order", "3", "--theorem", "7"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}
