//! JSON-lines form of covers, XY-graphs and posets.
//!
//! Serializers emit the sorted normal form, so byte equality of two lines
//! is field identity of the labeled objects.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::graph6::serialize_graph6;
use super::{
    validate, BipartitePoset, BitMatrix, ClassTag, Object, SetCover, Violation, XYGraph, MAX_POINTS,
};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase", deny_unknown_fields)]
enum Wire {
    Cover {
        n: usize,
        sets: Vec<Vec<usize>>,
    },
    Xy {
        nx: usize,
        ny: usize,
        edges: Vec<(usize, usize)>,
    },
    Poset {
        n0: usize,
        n1: usize,
        below: Vec<(usize, usize)>,
    },
}

fn to_wire(obj: &Object) -> Option<Wire> {
    Some(match obj {
        Object::Split(_) => return None,
        Object::Cover(c) => Wire::Cover {
            n: c.ground_size(),
            sets: c.sets().to_vec(),
        },
        Object::Xy(g) => Wire::Xy {
            nx: g.nx(),
            ny: g.ny(),
            edges: g.edges().collect(),
        },
        Object::Poset(p) => Wire::Poset {
            n0: p.n0(),
            n1: p.n1(),
            below: p.pairs().collect(),
        },
    })
}

/// Compact one-line JSON. Split graphs are graph6-only and render as a bare
/// graph6 string.
pub fn to_json(obj: &Object) -> String {
    match to_wire(obj) {
        Some(w) => serde_json::to_string(&w).expect("wire types always serialize"),
        None => Value::from(graph6_of(obj)).to_string(),
    }
}

/// As [`to_json`], but as a value for embedding in larger records.
pub fn to_json_value(obj: &Object) -> Value {
    match to_wire(obj) {
        Some(w) => serde_json::to_value(&w).expect("wire types always serialize"),
        None => Value::from(graph6_of(obj)),
    }
}

fn graph6_of(obj: &Object) -> String {
    match obj {
        Object::Split(g) => serialize_graph6(g).expect("graph exceeds graph6 range"),
        _ => unreachable!(),
    }
}

/// Parses and validates one JSON object.
pub fn parse_json(text: &str) -> Result<Object> {
    let raw: Value = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    if raw.get("class").and_then(Value::as_str) == Some("split") {
        return Err(Error::Json(
            "split graphs are read as graph6, not JSON".into(),
        ));
    }
    let wire: Wire = serde_json::from_value(raw).map_err(|e| Error::Json(e.to_string()))?;
    let (class, built) = match wire {
        Wire::Cover { n, sets } => (
            ClassTag::Cover,
            Ok(Object::Cover(SetCover::from_raw(n, sets))),
        ),
        Wire::Xy { nx, ny, edges } => (
            ClassTag::Xy,
            incidence(nx, ny, &edges, Violation::EdgeOutOfRange)
                .map(|m| Object::Xy(XYGraph::from_matrix(m))),
        ),
        Wire::Poset { n0, n1, below } => (
            ClassTag::Poset,
            incidence(n0, n1, &below, Violation::PairOutOfRange)
                .map(|m| Object::Poset(BipartitePoset::from_raw(m))),
        ),
    };
    let violations = match built {
        Ok(obj) => {
            let v = validate(&obj);
            if v.is_empty() {
                return Ok(obj);
            }
            v
        }
        Err(v) => v,
    };
    Err(Error::Invalid {
        class,
        violations: violations.iter().map(ToString::to_string).collect(),
    })
}

fn incidence(
    rows: usize,
    cols: usize,
    pairs: &[(usize, usize)],
    out_of_range: fn(usize, usize) -> Violation,
) -> std::result::Result<BitMatrix, Vec<Violation>> {
    if rows + cols > MAX_POINTS {
        return Err(vec![Violation::TooManyPoints(rows + cols)]);
    }
    let bad: Vec<_> = pairs
        .iter()
        .filter(|&&(a, b)| a >= rows || b >= cols)
        .map(|&(a, b)| out_of_range(a, b))
        .collect();
    if !bad.is_empty() {
        return Err(bad);
    }
    let mut m = BitMatrix::zeros(rows, cols);
    for &(a, b) in pairs {
        m.set(a, b, true);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Graph;

    #[test]
    fn schema_examples() {
        let c = parse_json(r#"{"class":"cover","n":3,"sets":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(
            c,
            Object::Cover(SetCover::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap())
        );
        let x = parse_json(r#"{"class":"xy","nx":1,"ny":1,"edges":[[0,0]]}"#).unwrap();
        assert_eq!(x, Object::Xy(XYGraph::from_edges(1, 1, &[(0, 0)])));
        let p = parse_json(r#"{"class":"poset","n0":2,"n1":1,"below":[[0,0],[1,0]]}"#).unwrap();
        assert_eq!(p.as_poset().unwrap().down_set(0), 0b11);
    }

    #[test]
    fn emits_sorted_normal_form() {
        let c = parse_json(r#"{"sets":[[2,1],[1,0]],"n":3,"class":"cover"}"#).unwrap();
        assert_eq!(
            to_json(&c),
            r#"{"class":"cover","n":3,"sets":[[0,1],[1,2]]}"#
        );
        let x = parse_json(r#"{"class":"xy","nx":2,"ny":2,"edges":[[1,0],[0,1],[1,0]]}"#).unwrap();
        assert_eq!(
            to_json(&x),
            r#"{"class":"xy","nx":2,"ny":2,"edges":[[0,1],[1,0]]}"#
        );
    }

    #[test]
    fn invalid_structures_rejected() {
        let e = parse_json(r#"{"class":"cover","n":3,"sets":[[0,1]]}"#).unwrap_err();
        assert_eq!(
            e,
            Error::Invalid {
                class: ClassTag::Cover,
                violations: vec!["union ≠ ground set: element 2 uncovered".into()]
            }
        );
        let e = parse_json(r#"{"class":"xy","nx":1,"ny":1,"edges":[[0,1]]}"#).unwrap_err();
        assert!(e.to_string().contains("edge outside X×Y: (0,1)"), "{e}");
        let e = parse_json(r#"{"class":"poset","n0":1,"n1":1,"below":[]}"#).unwrap_err();
        assert!(e.to_string().contains("empty down-set"), "{e}");
        assert!(matches!(
            parse_json(r#"{"class":"xy","nx":1}"#),
            Err(Error::Json(_))
        ));
        assert!(matches!(
            parse_json(r#"{"class":"split"}"#),
            Err(Error::Json(_))
        ));
        assert!(matches!(
            parse_json(r#"{"class":"cover","n":0,"sets":[],"x":1}"#),
            Err(Error::Json(_))
        ));
    }

    #[test]
    fn split_renders_as_graph6_string() {
        assert_eq!(to_json(&Object::Split(Graph::complete(4))), r#""C~""#);
    }
}
