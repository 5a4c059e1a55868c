use super::*;
use crate::biject::{BijectionPair, MapId};
use crate::model::ClassTag;

#[test]
fn roundtrip_examples() {
    let r = verify_roundtrip(BijectionPair::SplitCover, 5).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    let shift = verify_roundtrip(BijectionPair::XyShift, 4).unwrap();
    assert!(shift.passed(), "{}", shift.to_json());
    let trivial = verify_roundtrip(BijectionPair::SplitPoset, 0).unwrap();
    assert_eq!((trivial.checked, trivial.passed()), (2, true));
}

#[test]
fn balance_examples() {
    for pair in [
        BijectionPair::SplitCover,
        BijectionPair::XyPoset,
        BijectionPair::XyShift,
    ] {
        let r = verify_balance(pair, 5).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }
}

#[test]
fn compilation_examples() {
    let r = verify_compilation(ClassTag::Split, 5).unwrap();
    assert_eq!(r.checked, 17 + 17);
    assert!(r.passed(), "{}", r.to_json());
    let p = verify_compilation(ClassTag::Poset, 4).unwrap();
    assert_eq!(p.checked, 8 + 8);
    assert!(p.passed(), "{}", p.to_json());
    assert!(verify_compilation(ClassTag::Xy, 3).unwrap().passed());
}

#[test]
fn choice_examples() {
    for map in [
        MapId::CoverToSplit,
        MapId::CompileDown(ClassTag::Poset),
        MapId::SplitToXy,
    ] {
        let r = verify_choice_independence(map, 4).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }
}

#[test]
fn counts_and_report_shape() {
    let r = verify_counts(6).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["suite"], "counts");
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn triangle_is_informational() {
    let r = verify_triangle(1).unwrap();
    assert!(r.informational && !r.fails_run());
    assert_eq!(r.checked, 2);
}
