use std::process::{Command, Output};

fn samelson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_samelson"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn compute_prints_json_and_exits_zero() {
    let out = samelson(&["compute", "--m", "2", "--n", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\"m\":2,\"n\":3,\"order\":\"840\",\"closed_form\":\"840\",\"match\":true}\n"
    );
}

#[test]
fn invalid_parameters_exit_two() {
    let out = samelson(&["compute", "--m", "3", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("Usage"));

    assert_eq!(samelson(&["sweep"]).status.code(), Some(2));
    assert_eq!(samelson(&["chern", "--j", "3"]).status.code(), Some(2));
}

#[test]
fn chern_reports_agreement() {
    let out = samelson(&["chern", "--j", "3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1/1, 1/1, 1/1, agree\n"
    );
}

#[test]
fn text_sweep_lists_every_instance() {
    let out = samelson(&["sweep", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 10);
    assert!(text.lines().skip(1).all(|l| l.trim_end().ends_with("true")));
}
