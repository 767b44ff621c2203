use std::process::{Command, Output};

fn polystar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polystar")).args(args).output().unwrap()
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["kernel", "star(1,0)#star(0,1) - star(0,1) + 1"], 0),
        (&["nf", "w\"0\" #"], 2),
        (&["nf", "star(w\"01\")"], 3),
        (&["stuffle", "y[0]", "y[1]"], 3),
        (&["eval", "w\"1\"", "--z", "0.9999", "--eps", "1e-300"], 4),
        (&["eval", "w\"1\"", "--z", "-0.5"], 5),
        (&["bogus"], 2),
    ];
    for (args, code) in cases {
        let out = polystar(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        if *code != 0 {
            assert!(!out.stderr.is_empty());
        }
    }
}

#[test]
fn leading_minus_is_an_expression() {
    let out = polystar(&["nf", "-star(1,1)"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 - star(0,1)\n");
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [&["table", "lineg", "3", "--json"][..], &["nf", "star(3,2) # w\"10\"", "--seed", "5"]] {
        let a = polystar(args);
        let b = polystar(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}
