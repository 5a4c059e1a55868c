use rayon::prelude::*;
use serde_json::json;

use super::{Failure, SuiteResult};
use crate::biject::{
    cover_to_poset, for_each_choice, split_to_cover, split_to_poset, BijectionPair, LeastIndex,
    MapId,
};
use crate::canon::CanonicalKey;
use crate::classify::{
    balance, is_minimal, is_split, k_max_partition, loyal_elements, loyal_vertices_split,
    omega_alpha, poset_support, s_max_partition, trichotomy, xy_isolates_universals, Trichotomy,
};
use crate::enumerate::{count_table, enumerate, enumerate_split, enumerate_xy, Census};
use crate::error::Result;
use crate::model::{ClassTag, Object};

/// Unbalanced split graphs on `n = 1..=8` vertices.
pub const UNBALANCED_SPLIT_COUNTS: [usize; 8] = [1, 2, 4, 8, 17, 38, 94, 258];

fn failure(input: &Object, expected: impl Into<String>, observed: impl Into<String>) -> Failure {
    Failure {
        input: crate::canon::Canonize::canonical_key(input).hex(),
        object: input.serialize(),
        expected: expected.into(),
        observed: observed.into(),
    }
}

fn table_failure(what: String, expected: usize, observed: usize) -> Failure {
    Failure {
        input: what,
        object: String::new(),
        expected: expected.to_string(),
        observed: observed.to_string(),
    }
}

fn result(
    suite: &str,
    params: serde_json::Value,
    checked: usize,
    failures: Vec<Failure>,
) -> SuiteResult {
    SuiteResult {
        suite: suite.into(),
        params,
        checked,
        failures,
        informational: false,
        data: None,
    }
}

fn unbalanced(c: Census) -> Vec<Object> {
    c.filtered(Some(false)).map(|e| e.object.clone()).collect()
}

fn all(c: Census) -> Vec<Object> {
    c.entries.into_iter().map(|e| e.object).collect()
}

/// Inputs of `map` on `n` points, with the target size passed to `apply`.
fn domain(map: MapId, n: usize) -> Result<Vec<(Object, usize)>> {
    let objects = match map {
        MapId::XyToUnbalancedSplit => all(enumerate_xy(n, false)?),
        MapId::UnbalancedSplitToXy => unbalanced(enumerate_split(n)?),
        MapId::CompileDown(c) => unbalanced(enumerate(c, n)?),
        MapId::CompileUp(c) => {
            let mut v = Vec::new();
            for t in 0..n {
                v.extend(all(enumerate(c, t)?));
            }
            v
        }
        other => all(enumerate(other.input_class(), n)?),
    };
    Ok(objects.into_iter().map(|o| (o, n)).collect())
}

fn key_of(map: MapId, o: &Object, n: usize) -> Result<(CanonicalKey, Object)> {
    let m = map.apply(o, n, &mut LeastIndex)?;
    Ok((m.report.output_key, m.output))
}

/// `inverse(forward(o))` has the key of `o`, in both directions, and the
/// forward image of a census is exactly the census on the other side.
pub fn verify_roundtrip(pair: BijectionPair, max_n: usize) -> Result<SuiteResult> {
    let (fwd, inv) = (pair.forward(), pair.inverse());
    // The shift pairs XY-graphs on n points with split graphs on n + 1.
    let shift = usize::from(pair == BijectionPair::XyShift);
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let src = domain(fwd, n)?;
        let dst = domain(inv, n + shift)?;
        checked += src.len() + dst.len();
        for (there, back, inputs) in [(fwd, inv, &src), (inv, fwd, &dst)] {
            let found: Vec<Option<Failure>> = inputs
                .par_iter()
                .map(|(o, t)| {
                    let start = crate::canon::Canonize::canonical_key(o);
                    let out = key_of(there, o, *t).and_then(|(_, img)| key_of(back, &img, *t));
                    match out {
                        Ok((k, _)) if k == start => None,
                        Ok((k, _)) => Some(failure(o, start.hex(), k.hex())),
                        Err(e) => Some(failure(o, start.hex(), e.to_string())),
                    }
                })
                .collect();
            failures.extend(found.into_iter().flatten());
        }
        let mut image: Vec<CanonicalKey> = src
            .par_iter()
            .filter_map(|(o, t)| key_of(fwd, o, *t).ok())
            .map(|(k, _)| k)
            .collect();
        image.sort();
        image.dedup();
        let mut target: Vec<CanonicalKey> = dst
            .iter()
            .map(|(o, _)| crate::canon::Canonize::canonical_key(o))
            .collect();
        target.sort();
        if image != target {
            failures.push(table_failure(
                format!("image of n={n}"),
                target.len(),
                image.len(),
            ));
        }
    }
    Ok(result(
        "roundtrip",
        json!({"pair": pair.name(), "max_n": max_n}),
        checked,
        failures,
    ))
}

/// Checks that the native balance of `o` agrees with the structure that
/// defines it.
fn structure(o: &Object) -> Option<(String, String)> {
    let bal = match balance(o) {
        Ok(b) => b.is_balanced(),
        Err(e) => return Some(("balance".into(), e.to_string())),
    };
    let bad = |what: &str| {
        Some((
            format!("{what} consistent with balanced={bal}"),
            "mismatch".to_string(),
        ))
    };
    match o {
        Object::Split(g) => {
            if !is_split(g) {
                return Some(("a split graph".into(), "degree test rejects it".into()));
            }
            let (Ok(oa), Ok(sp), Ok(kp), Ok(loyal)) = (
                omega_alpha(g),
                s_max_partition(g),
                k_max_partition(g),
                loyal_vertices_split(g),
            ) else {
                return Some(("split analysis".into(), "error".into()));
            };
            if (oa.omega + oa.alpha == g.n()) != bal {
                return bad("omega + alpha = n");
            }
            let (Ok(ts), Ok(tk)) = (trichotomy(g, &sp), trichotomy(g, &kp)) else {
                return Some(("trichotomy".into(), "error".into()));
            };
            let ok_s = matches!(
                (ts.case, bal),
                (Some(Trichotomy::Balanced), true) | (Some(Trichotomy::SMax { .. }), false)
            );
            let ok_k = matches!(
                (tk.case, bal),
                (Some(Trichotomy::Balanced), true) | (Some(Trichotomy::KMax { .. }), false)
            );
            if !ok_s || !ok_k {
                return bad("trichotomy");
            }
            if sp.s & !loyal != 0 {
                return Some((
                    "S-max stable set loyal".into(),
                    format!("loyal mask {loyal:#b}"),
                ));
            }
            None
        }
        Object::Cover(c) => {
            if !is_minimal(c).unwrap_or(false) || loyal_elements(c).iter().any(Vec::is_empty) {
                return Some(("minimal".into(), "not minimal".into()));
            }
            let extremal = c
                .sets()
                .iter()
                .any(|s| s.len() + c.len() == c.ground_size() + 1);
            (extremal == bal).then(|| ("extremal set iff unbalanced".into(), "mismatch".into()))
        }
        Object::Xy(g) => {
            let (iso, uni) = xy_isolates_universals(g);
            let universal = (0..g.nx()).any(|x| g.x_neighbors(x).count_ones() as usize == g.ny());
            (iso != 0 || (uni != 0) != universal || universal == bal)
                .then(|| bad("universal vertex").unwrap())
        }
        Object::Poset(p) => {
            let (full, _) = poset_support(p);
            let below_all = (0..p.n0()).any(|a| p.up_set(a).count_ones() as usize == p.n1());
            ((full != 0) != below_all || below_all == bal)
                .then(|| bad("full support point").unwrap())
        }
    }
}

/// Maps preserve balance (the shift always lands on unbalanced graphs), and
/// every object's balance agrees with its defining structure.
pub fn verify_balance(pair: BijectionPair, max_n: usize) -> Result<SuiteResult> {
    let shift = pair == BijectionPair::XyShift;
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let mut runs = vec![(pair.forward(), domain(pair.forward(), n)?)];
        if !shift {
            runs.push((pair.inverse(), domain(pair.inverse(), n)?));
        }
        for (map, inputs) in runs {
            checked += inputs.len();
            let found: Vec<Option<Failure>> = inputs
                .par_iter()
                .map(|(o, t)| {
                    let after = key_of(map, o, *t)
                        .and_then(|(_, img)| balance(&img).map(|b| b.is_balanced()));
                    if shift {
                        // XY inputs may have Y-isolates; only the image has a balance.
                        return match after {
                            Ok(false) => None,
                            Ok(true) => Some(failure(o, "unbalanced image", "balanced")),
                            Err(e) => Some(failure(o, "unbalanced image", e.to_string())),
                        };
                    }
                    if let Some((e, obs)) = structure(o) {
                        return Some(failure(o, e, obs));
                    }
                    match (balance(o).map(|b| b.is_balanced()), after) {
                        (Ok(b), Ok(a)) if a == b => None,
                        (Ok(b), Ok(a)) => {
                            Some(failure(o, format!("balanced={b}"), format!("balanced={a}")))
                        }
                        (Err(e), _) | (_, Err(e)) => Some(failure(o, "a balance", e.to_string())),
                    }
                })
                .collect();
            failures.extend(found.into_iter().flatten());
        }
    }
    Ok(result(
        "balance",
        json!({"pair": pair.name(), "max_n": max_n}),
        checked,
        failures,
    ))
}

/// The down-map is a bijection from the unbalanced objects on `n` points onto
/// all objects on fewer points, with the up-map as its two-sided inverse.
pub fn verify_compilation(class: ClassTag, n: usize) -> Result<SuiteResult> {
    let (down, up) = (MapId::CompileDown(class), MapId::CompileUp(class));
    let unb = domain(down, n)?;
    let smaller = domain(up, n)?;
    let mut failures = Vec::new();
    if unb.len() != smaller.len() {
        failures.push(table_failure(
            format!("{class} unbalanced({n}) = sum of totals below"),
            smaller.len(),
            unb.len(),
        ));
    }
    let there: Vec<(Option<CanonicalKey>, Option<Failure>)> = unb
        .par_iter()
        .map(|(o, t)| {
            let start = crate::canon::Canonize::canonical_key(o);
            match key_of(down, o, *t) {
                Ok((k, img)) => match key_of(up, &img, n) {
                    Ok((back, _)) if back == start => (Some(k), None),
                    Ok((back, _)) => (Some(k), Some(failure(o, start.hex(), back.hex()))),
                    Err(e) => (Some(k), Some(failure(o, start.hex(), e.to_string()))),
                },
                Err(e) => (None, Some(failure(o, "compile down", e.to_string()))),
            }
        })
        .collect();
    let mut image: Vec<CanonicalKey> = Vec::new();
    for (k, f) in there {
        image.extend(k);
        failures.extend(f);
    }
    image.sort();
    let distinct = {
        let mut d = image.clone();
        d.dedup();
        d.len()
    };
    if distinct != image.len() {
        failures.push(table_failure(
            format!("{class} compile down injective at n={n}"),
            image.len(),
            distinct,
        ));
    }
    let mut target: Vec<CanonicalKey> = smaller
        .iter()
        .map(|(o, _)| crate::canon::Canonize::canonical_key(o))
        .collect();
    target.sort();
    if image != target {
        failures.push(table_failure(
            format!("{class} compile down onto smaller census at n={n}"),
            target.len(),
            image.len(),
        ));
    }
    let back: Vec<Option<Failure>> = smaller
        .par_iter()
        .map(|(q, t)| {
            let start = crate::canon::Canonize::canonical_key(q);
            let up_img = match key_of(up, q, *t) {
                Ok((_, img)) => img,
                Err(e) => return Some(failure(q, "compile up", e.to_string())),
            };
            if up_img.points() != n || balance(&up_img).map_or(true, |b| b.is_balanced()) {
                return Some(failure(
                    q,
                    format!("unbalanced on {n} points"),
                    up_img.serialize(),
                ));
            }
            match key_of(down, &up_img, n) {
                Ok((k, _)) if k == start => None,
                Ok((k, _)) => Some(failure(q, start.hex(), k.hex())),
                Err(e) => Some(failure(q, start.hex(), e.to_string())),
            }
        })
        .collect();
    failures.extend(back.into_iter().flatten());
    Ok(result(
        "compilation",
        json!({"class": class.as_str(), "n": n}),
        unb.len() + smaller.len(),
        failures,
    ))
}

/// Every admissible sequence of picks gives the same output key.
pub fn verify_choice_independence(map: MapId, max_n: usize) -> Result<SuiteResult> {
    let mut checked = 0;
    let mut sequences = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let inputs = domain(map, n)?;
        checked += inputs.len();
        let found: Vec<(usize, Option<Failure>)> = inputs
            .par_iter()
            .map(|(o, t)| {
                let keys = for_each_choice(|ch| map.apply(o, *t, ch).map(|m| m.report.output_key));
                let first = keys[0].clone();
                let bad = keys.iter().find(|k| **k != first).cloned();
                let f = match (first, bad) {
                    (Err(e), _) => Some(failure(o, "a mapped object", e.to_string())),
                    (Ok(_), None) => None,
                    (Ok(k), Some(other)) => Some(failure(
                        o,
                        k.hex(),
                        other.map_or_else(|e| e.to_string(), |k| k.hex()),
                    )),
                };
                (keys.len(), f)
            })
            .collect();
        for (count, f) in found {
            sequences += count;
            failures.extend(f);
        }
    }
    let mut r = result(
        "choice_independence",
        json!({"map": map.name(), "max_n": max_n}),
        checked,
        failures,
    );
    r.data = Some(json!({ "choice_sequences": sequences }));
    Ok(r)
}

/// The count table against the known unbalanced sequence, the totals it
/// implies, and the identities between columns.
pub fn verify_counts(max_n: usize) -> Result<SuiteResult> {
    let table = count_table(max_n)?;
    let seq = |n: usize| {
        if n == 0 {
            Some(0)
        } else {
            UNBALANCED_SPLIT_COUNTS.get(n - 1).copied()
        }
    };
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut check = |what: String, expected: usize, observed: usize| {
        checked += 1;
        if expected != observed {
            failures.push(table_failure(what, expected, observed));
        }
    };
    for r in &table {
        let n = r.n;
        if let Some(u) = seq(n) {
            check(format!("unbalanced split({n})"), u, r.split.unbalanced);
        }
        if let (Some(a), Some(b)) = (seq(n), seq(n + 1)) {
            check(format!("split({n})"), b - a, r.split.total);
        }
        for (name, c) in [("cover", r.cover), ("xy", r.xy), ("poset", r.poset)] {
            check(format!("{name}({n})"), r.split.total, c.total);
            check(
                format!("balanced {name}({n})"),
                r.split.balanced,
                c.balanced,
            );
            check(
                format!("unbalanced {name}({n})"),
                r.split.unbalanced,
                c.unbalanced,
            );
        }
        if n > 0 {
            check(format!("cumulative({n})"), r.split.unbalanced, r.cumulative);
        }
        if let Some(next) = table.get(n + 1) {
            check(
                format!("xy_all({n}) = unbalanced split({})", n + 1),
                next.split.unbalanced,
                r.xy_all,
            );
        }
    }
    let mut res = result("counts", json!({"max_n": max_n}), checked, failures);
    res.data = Some(serde_json::to_value(&table).expect("table serializes"));
    Ok(res)
}

/// Informational: does split → cover → poset agree with split → poset?
pub fn verify_triangle(max_n: usize) -> Result<SuiteResult> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let graphs = all(enumerate_split(n)?);
        checked += graphs.len();
        let found: Vec<Option<Failure>> = graphs
            .par_iter()
            .map(|o| {
                let g = o.as_split().ok()?;
                let direct = split_to_poset(g).map(|m| m.report.output_key);
                let via = split_to_cover(g)
                    .and_then(|m| cover_to_poset(&m.output))
                    .map(|m| m.report.output_key);
                match (direct, via) {
                    (Ok(a), Ok(b)) if a == b => None,
                    (Ok(a), Ok(b)) => Some(failure(o, a.hex(), b.hex())),
                    (Err(e), _) | (_, Err(e)) => {
                        Some(failure(o, "both paths defined", e.to_string()))
                    }
                }
            })
            .collect();
        failures.extend(found.into_iter().flatten());
    }
    let agree = checked - failures.len();
    let mut r = result("triangle", json!({"max_n": max_n}), checked, failures);
    r.informational = true;
    r.data = Some(json!({
        "agree": agree,
        "total": checked,
        "agreement": if checked == 0 { 1.0 } else { agree as f64 / checked as f64 },
    }));
    Ok(r)
}
