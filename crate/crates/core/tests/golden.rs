mod common;

#[test]
fn displayed_terms_match_the_builders() {
    let built = common::built();
    let out = common::golden::run(&built.workspace);
    assert_eq!(out.total, 10);
    out.assert_ok("golden fixtures");
}
