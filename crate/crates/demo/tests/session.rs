use std::collections::HashSet;

use qsnake_demo::{DemoError, Session, GOLDEN_SURFACE};

#[test]
fn golden_session_reaches_every_matching_by_twists() {
    let mut s = Session::golden();
    assert_eq!(s.matching_count(), 13);
    assert_eq!(s.value(), 0);
    let mut seen = HashSet::new();
    let mut stack = vec![s.current().clone()];
    while let Some(m) = stack.pop() {
        if !seen.insert(m.clone()) {
            continue;
        }
        for i in 0..s.graph().n_tiles() {
            if let Ok(next) = s.graph().twist(&m, i) {
                stack.push(next);
            }
        }
    }
    assert_eq!(seen.len(), 13);
    let tile = s.twistable()[0];
    s.twist(tile).unwrap();
    s.twist(tile).unwrap();
    assert_eq!(s.current(), &s.graph().minimal_matching());
}

#[test]
fn twist_updates_status_and_svg() {
    let mut s = Session::golden();
    let before = (s.status(), s.svg());
    s.twist(s.twistable()[0]).unwrap();
    assert_ne!(s.status(), before.0);
    assert_ne!(s.svg(), before.1);
    s.reset();
    assert_eq!((s.status(), s.svg()), before);
}

#[test]
fn svg_marks_every_matched_edge() {
    let s = Session::golden();
    let svg = s.svg();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"class="edge matched""#).count(), s.current().len());
    assert_eq!(svg.matches("<rect").count(), 5);
    assert_eq!(svg.matches("tile twistable").count(), s.twistable().len());
}

#[test]
fn expansions_are_printed() {
    let s = Session::golden();
    let q = s.expansion(true).unwrap();
    assert!(q.starts_with("X^(1,-2,0,0) + (q^-1/2 + q^1/2)"));
    assert!(!s.expansion(false).unwrap().contains('q'));
}

#[test]
fn bad_input_is_reported() {
    assert!(matches!(Session::new("{", "{}", ""), Err(DemoError::Input(_))));
    let arc = r#"{"crossings":[0,0],"start_triangle":0,"end_triangle":1}"#;
    assert!(Session::new(GOLDEN_SURFACE, arc, "").is_err());
    let mut s = Session::golden();
    assert!(s.twist(0).is_err());
    let stuck = (1..=5).find(|t| !s.twistable().contains(t)).unwrap();
    assert_eq!(s.twist(stuck).unwrap_err().to_string(), format!("matching cannot twist on tile {stuck}"));
    assert_eq!(s.twist(99).unwrap_err().to_string(), "tile 99 out of range");
}
