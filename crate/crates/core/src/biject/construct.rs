//! The constructions themselves, on labeled objects. Vertex order of every
//! output is fixed by the input labels and the picks made.

use super::choice::{ChoicePoint, Chooser};
use crate::classify::{
    balance_split, k_max_partitions, loyal_elements, poset_support, require_minimal,
    s_max_partitions, xy_isolates_universals,
};
use crate::error::{DomainError, Result};
use crate::model::{
    bit, iter_bits, low_ones, BipartitePoset, BitMatrix, Graph, KSPartition, SetCover, XYGraph,
};

fn pick<T: Clone>(ch: &mut dyn Chooser, point: ChoicePoint, options: &[T]) -> T {
    assert!(!options.is_empty(), "no admissible option at {point}");
    options[ch.choose(point, options.len())].clone()
}

fn s_max(g: &Graph, ch: &mut dyn Chooser) -> Result<KSPartition> {
    Ok(pick(ch, ChoicePoint::SMaxPartition, &s_max_partitions(g)?))
}

fn representatives(c: &SetCover, ch: &mut dyn Chooser) -> Vec<usize> {
    loyal_elements(c)
        .iter()
        .map(|l| pick(ch, ChoicePoint::LoyalRepresentative, l))
        .collect()
}

fn require_no_isolates(g: &XYGraph) -> Result<()> {
    match iter_bits(xy_isolates_universals(g).0).next() {
        Some(y) => Err(DomainError::YIsolate(y).into()),
        None => Ok(()),
    }
}

/// Rows: one per item of `rows`, columns: one per item of `cols`.
fn cross(rows: &[usize], cols: &[usize], related: impl Fn(usize, usize) -> bool) -> BitMatrix {
    let masks = rows
        .iter()
        .map(|&r| {
            cols.iter()
                .enumerate()
                .filter(|&(_, &c)| related(r, c))
                .fold(0, |m, (j, _)| m | bit(j))
        })
        .collect();
    BitMatrix::from_rows(cols.len(), masks)
}

/// Graph on `rows.len() + cols.len()` vertices, rows first, with the
/// incidence as edges and a clique on the column vertices.
fn graph_with_clique(inc: &BitMatrix, extra: usize) -> Graph {
    let (r, c) = (inc.rows(), inc.cols());
    let mut g = Graph::empty(r + c + extra);
    for x in 0..r {
        for y in iter_bits(inc.row(x)) {
            g.add_edge(x, r + y);
        }
    }
    g.complete_on(low_ones(r + c + extra) & !low_ones(r));
    g
}

pub(crate) fn split_to_cover(g: &Graph, ch: &mut dyn Chooser) -> Result<SetCover> {
    let p = s_max(g, ch)?;
    Ok(SetCover::from_masks(
        g.n(),
        iter_bits(p.s).map(|s| g.neighbors(s) | bit(s)),
    ))
}

pub(crate) fn cover_to_split(c: &SetCover, ch: &mut dyn Chooser) -> Result<Graph> {
    require_minimal(c)?;
    let reps = representatives(c, ch);
    let mut g = Graph::empty(c.ground_size());
    for (set, &r) in c.sets().iter().zip(&reps) {
        for &e in set {
            if e != r {
                g.add_edge(r, e);
            }
        }
    }
    g.complete_on(g.all_vertices() & !reps.iter().fold(0, |m, &r| m | bit(r)));
    Ok(g)
}

pub(crate) fn split_to_xy(g: &Graph, ch: &mut dyn Chooser) -> Result<XYGraph> {
    let p = s_max(g, ch)?;
    Ok(XYGraph::from_matrix(cross(
        &p.s_vertices(),
        &p.k_vertices(),
        |s, k| g.has_edge(s, k),
    )))
}

pub(crate) fn xy_to_split(h: &XYGraph) -> Result<Graph> {
    require_no_isolates(h)?;
    Ok(graph_with_clique(h.matrix(), 0))
}

pub(crate) fn split_to_poset(g: &Graph, ch: &mut dyn Chooser) -> Result<BipartitePoset> {
    let p = s_max(g, ch)?;
    Ok(BipartitePoset::from_raw(cross(
        &p.s_vertices(),
        &p.k_vertices(),
        |s, k| g.has_edge(s, k),
    )))
}

pub(crate) fn poset_to_split(p: &BipartitePoset) -> Graph {
    graph_with_clique(p.relation(), 0)
}

/// Adds a vertex `v` (the last one) adjacent to all of Y; K = Y ∪ {v}.
pub(crate) fn xy_to_unbalanced_split(h: &XYGraph) -> Graph {
    graph_with_clique(h.matrix(), 1)
}

pub(crate) fn unbalanced_split_to_xy(g: &Graph, ch: &mut dyn Chooser) -> Result<XYGraph> {
    if balance_split(g)?.is_balanced() {
        return Err(DomainError::Balanced("swing vertex").into());
    }
    let p = pick(ch, ChoicePoint::KMaxPartition, &k_max_partitions(g)?);
    let swings: Vec<usize> = iter_bits(p.k)
        .filter(|&k| g.neighbors(k) & p.s == 0)
        .collect();
    let v = pick(ch, ChoicePoint::SwingVertex, &swings);
    let ys: Vec<usize> = iter_bits(p.k & !bit(v)).collect();
    Ok(XYGraph::from_matrix(cross(&p.s_vertices(), &ys, |s, k| {
        g.has_edge(s, k)
    })))
}

/// Representatives become height 0 in set order, the other elements height 1.
pub(crate) fn cover_to_poset(c: &SetCover, ch: &mut dyn Chooser) -> Result<BipartitePoset> {
    require_minimal(c)?;
    Ok(BipartitePoset::from_raw(rep_incidence(
        c,
        &representatives(c, ch),
    )))
}

fn rep_incidence(c: &SetCover, reps: &[usize]) -> BitMatrix {
    let rep_mask = reps.iter().fold(0, |m, &r| m | bit(r));
    let rest: Vec<usize> = iter_bits(low_ones(c.ground_size()) & !rep_mask).collect();
    let masks = c.masks();
    let rows: Vec<usize> = (0..c.len()).collect();
    cross(&rows, &rest, |i, e| masks[i] & bit(e) != 0)
}

pub(crate) fn poset_to_cover(p: &BipartitePoset) -> SetCover {
    let n0 = p.n0();
    SetCover::from_masks(p.n(), (0..n0).map(|a| bit(a) | (p.up_set(a) << n0)))
}

pub(crate) fn xy_to_cover(h: &XYGraph) -> Result<SetCover> {
    require_no_isolates(h)?;
    let nx = h.nx();
    Ok(SetCover::from_masks(
        h.n(),
        (0..nx).map(|x| bit(x) | (h.x_neighbors(x) << nx)),
    ))
}

pub(crate) fn cover_to_xy(c: &SetCover, ch: &mut dyn Chooser) -> Result<XYGraph> {
    require_minimal(c)?;
    Ok(XYGraph::from_matrix(rep_incidence(
        c,
        &representatives(c, ch),
    )))
}

pub(crate) fn xy_to_poset(h: &XYGraph) -> Result<BipartitePoset> {
    require_no_isolates(h)?;
    Ok(BipartitePoset::from_raw(h.matrix().clone()))
}

pub(crate) fn poset_to_xy(p: &BipartitePoset) -> XYGraph {
    XYGraph::from_matrix(p.relation().clone())
}

fn too_large(size: usize, n: usize) -> Result<()> {
    if size >= n {
        Err(DomainError::TooLarge { size, n }.into())
    } else {
        Ok(())
    }
}

/// Removes a swing vertex `s` of an S-max partition and every K-vertex left
/// without a neighbour in `S - s`.
pub(crate) fn compile_split_down(g: &Graph, ch: &mut dyn Chooser) -> Result<Graph> {
    if balance_split(g)?.is_balanced() {
        return Err(DomainError::Balanced("swing vertex").into());
    }
    let p = s_max(g, ch)?;
    let swings: Vec<usize> = iter_bits(p.s)
        .filter(|&s| g.neighbors(s) & p.k == p.k)
        .collect();
    let s = pick(ch, ChoicePoint::SwingVertex, &swings);
    let rest_s = p.s & !bit(s);
    let rest_k = iter_bits(p.k)
        .filter(|&k| g.neighbors(k) & rest_s != 0)
        .fold(0, |m, k| m | bit(k));
    Ok(g.induced(rest_k | rest_s))
}

/// Adds a swing vertex `s` (id `t`) adjacent to all of K, then padding
/// vertices that join K, up to `n` vertices.
pub(crate) fn compile_split_up(h: &Graph, n: usize, ch: &mut dyn Chooser) -> Result<Graph> {
    let t = h.n();
    too_large(t, n)?;
    let p = s_max(h, ch)?;
    let mut g = h.clone();
    while g.n() < n {
        g.add_vertex();
    }
    let k = p.k | (low_ones(n) & !low_ones(t + 1));
    g.complete_on(k | bit(t));
    Ok(g)
}

fn extremal_sets(c: &SetCover) -> Vec<usize> {
    let threshold = c.ground_size() + 1 - c.len();
    (0..c.len())
        .filter(|&i| c.sets()[i].len() == threshold)
        .collect()
}

/// Deletes an extremal set Y and the elements only Y covers.
pub(crate) fn compile_cover_down(c: &SetCover, ch: &mut dyn Chooser) -> Result<SetCover> {
    require_minimal(c)?;
    let ext = extremal_sets(c);
    if ext.is_empty() {
        return Err(DomainError::Balanced("extremal set").into());
    }
    let y = pick(ch, ChoicePoint::ExtremalSet, &ext);
    let only_y = loyal_elements(c)[y].iter().fold(0, |m, &e| m | bit(e));
    let keep: Vec<usize> = iter_bits(low_ones(c.ground_size()) & !only_y).collect();
    let mut relabel = vec![usize::MAX; c.ground_size()];
    for (new, &old) in keep.iter().enumerate() {
        relabel[old] = new;
    }
    let sets = (0..c.len())
        .filter(|&i| i != y)
        .map(|i| c.sets()[i].iter().map(|&e| relabel[e]).collect())
        .collect();
    Ok(SetCover::from_raw(keep.len(), sets))
}

/// Adds `Y = {t, .., n-1} ∪ (V' - representatives)`.
pub(crate) fn compile_cover_up(c: &SetCover, n: usize, ch: &mut dyn Chooser) -> Result<SetCover> {
    require_minimal(c)?;
    let t = c.ground_size();
    too_large(t, n)?;
    let reps = representatives(c, ch);
    let rep_mask = reps.iter().fold(0, |m, &r| m | bit(r));
    let y = (low_ones(n) & !low_ones(t)) | (low_ones(t) & !rep_mask);
    Ok(SetCover::from_masks(n, c.masks().into_iter().chain([y])))
}

/// Deletes a universal X-vertex and the Y-vertices left isolated.
pub(crate) fn compile_xy_down(g: &XYGraph, ch: &mut dyn Chooser) -> Result<XYGraph> {
    require_no_isolates(g)?;
    let universals: Vec<usize> = iter_bits(xy_isolates_universals(g).1).collect();
    if universals.is_empty() {
        return Err(DomainError::Balanced("universal vertex").into());
    }
    let u = pick(ch, ChoicePoint::UniversalVertex, &universals);
    let xs = low_ones(g.nx()) & !bit(u);
    let ys = iter_bits(xs).fold(0, |m, x| m | g.x_neighbors(x));
    Ok(g.restrict(xs, ys))
}

/// Pads Y with fresh vertices to `n - 1` points, then adds a universal X-vertex.
pub(crate) fn compile_xy_up(h: &XYGraph, n: usize) -> Result<XYGraph> {
    require_no_isolates(h)?;
    let t = h.n();
    too_large(t, n)?;
    let ny = h.ny() + (n - 1 - t);
    let mut rows: Vec<u64> = h.matrix().row_masks().to_vec();
    rows.push(low_ones(ny));
    Ok(XYGraph::from_matrix(BitMatrix::from_rows(ny, rows)))
}

/// Removes the full support points; if some height-1 point sees no partial
/// support point, one such point is demoted below every other height-1 point.
pub(crate) fn compile_poset_down(
    p: &BipartitePoset,
    ch: &mut dyn Chooser,
) -> Result<BipartitePoset> {
    let (full, partial) = poset_support(p);
    if full == 0 {
        return Err(DomainError::Balanced("full support point").into());
    }
    let rows: Vec<usize> = iter_bits(partial).collect();
    let unsupported: Vec<usize> = (0..p.n1())
        .filter(|&b| p.down_set(b) & partial == 0)
        .collect();
    if unsupported.is_empty() {
        let cols: Vec<usize> = (0..p.n1()).collect();
        return Ok(BipartitePoset::from_raw(cross(&rows, &cols, |a, b| {
            p.is_below(a, b)
        })));
    }
    let u = pick(ch, ChoicePoint::DemotedPoint, &unsupported);
    let cols: Vec<usize> = (0..p.n1()).filter(|&b| b != u).collect();
    let mut m = cross(&rows, &cols, |a, b| p.is_below(a, b))
        .row_masks()
        .to_vec();
    m.push(low_ones(cols.len()));
    Ok(BipartitePoset::from_raw(BitMatrix::from_rows(
        cols.len(),
        m,
    )))
}

/// Adds `n - t` points below every height-1 point, first promoting one full
/// support point (if any) to height 1.
pub(crate) fn compile_poset_up(
    q: &BipartitePoset,
    n: usize,
    ch: &mut dyn Chooser,
) -> Result<BipartitePoset> {
    let t = q.n();
    too_large(t, n)?;
    let full: Vec<usize> = iter_bits(poset_support(q).0).collect();
    let all_cols: Vec<usize> = (0..q.n1()).collect();
    let (rows, n1) = if full.is_empty() {
        (
            cross(&(0..q.n0()).collect::<Vec<_>>(), &all_cols, |a, b| {
                q.is_below(a, b)
            })
            .row_masks()
            .to_vec(),
            q.n1(),
        )
    } else {
        let v = pick(ch, ChoicePoint::PromotedPoint, &full);
        let kept: Vec<usize> = (0..q.n0()).filter(|&a| a != v).collect();
        // v becomes the last height-1 point, above only the new points.
        (
            cross(&kept, &all_cols, |a, b| q.is_below(a, b))
                .row_masks()
                .to_vec(),
            q.n1() + 1,
        )
    };
    let mut rows = rows;
    rows.extend(std::iter::repeat_n(low_ones(n1), n - t));
    Ok(BipartitePoset::from_raw(BitMatrix::from_rows(n1, rows)))
}
