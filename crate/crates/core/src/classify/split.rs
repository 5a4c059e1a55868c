use super::{Balance, Witness};
use crate::coverage::{touch, Op};
use crate::error::{DomainError, Result};
use crate::model::{bit, iter_bits, validate_partition, Graph, KSPartition};

/// Which case of the Hammer–Simeone trichotomy a KS-partition falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trichotomy {
    /// `|K| = ω` and `|S| = α`.
    Balanced,
    /// `|K| = ω - 1`, `|S| = α`; `swing` is in S and adjacent to all of K.
    SMax { swing: usize },
    /// `|K| = ω`, `|S| = α - 1`; `swing` is in K with no neighbour in S.
    KMax { swing: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitAnalysis {
    pub omega: usize,
    pub alpha: usize,
    /// Present when a particular partition was analysed.
    pub case: Option<Trichotomy>,
}

/// Degree-sequence test. Returns `ω` and a K-max clique when `g` is split.
fn hammer_simeone(g: &Graph) -> Option<(usize, u64)> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    // 1-based: m = max{i : d_i >= i - 1}.
    let m = (1..=n).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    (head == m * m.saturating_sub(1) + tail)
        .then(|| (m, order[..m].iter().fold(0, |k, &v| k | bit(v))))
}

pub fn is_split(g: &Graph) -> bool {
    touch(Op::IsSplit);
    hammer_simeone(g).is_some()
}

fn k_max_base(g: &Graph) -> Result<KSPartition> {
    let (_, k) = hammer_simeone(g).ok_or(DomainError::NotSplit)?;
    Ok(KSPartition {
        k,
        s: g.all_vertices() & !k,
    })
}

fn isolated_from<'a>(g: &'a Graph, p: &KSPartition) -> impl Iterator<Item = usize> + 'a {
    let (k, s) = (p.k, p.s);
    iter_bits(k).filter(move |&v| g.neighbors(v) & s == 0)
}

pub fn omega_alpha(g: &Graph) -> Result<SplitAnalysis> {
    touch(Op::OmegaAlpha);
    let p = k_max_base(g)?;
    let extra = usize::from(isolated_from(g, &p).next().is_some());
    Ok(SplitAnalysis {
        omega: p.k_len(),
        alpha: p.s_len() + extra,
        case: None,
    })
}

/// All partitions reachable from `base` by exchanging one K-vertex with one
/// S-vertex. Two KS-partitions with equal part sizes differ by at most such
/// an exchange, since a clique and a stable set share at most one vertex.
fn with_swaps(g: &Graph, base: KSPartition) -> Vec<KSPartition> {
    let mut out = vec![base];
    for k in iter_bits(base.k) {
        for s in iter_bits(base.s) {
            let rest_k = base.k & !bit(k);
            let rest_s = base.s & !bit(s);
            if g.neighbors(s) & rest_k == rest_k && g.neighbors(k) & rest_s == 0 {
                out.push(KSPartition {
                    k: rest_k | bit(s),
                    s: rest_s | bit(k),
                });
            }
        }
    }
    out
}

fn s_max_base(g: &Graph) -> Result<KSPartition> {
    let mut p = k_max_base(g)?;
    if let Some(k) = isolated_from(g, &p).next() {
        p.k &= !bit(k);
        p.s |= bit(k);
    }
    Ok(p)
}

/// Every partition with `|S| = α`, ordered by the sorted vertex list of S.
pub fn s_max_partitions(g: &Graph) -> Result<Vec<KSPartition>> {
    let mut all = with_swaps(g, s_max_base(g)?);
    all.sort_by_key(|p| p.s_vertices());
    Ok(all)
}

/// Every partition with `|K| = ω`, ordered by the sorted vertex list of K.
pub fn k_max_partitions(g: &Graph) -> Result<Vec<KSPartition>> {
    let mut all = with_swaps(g, k_max_base(g)?);
    all.sort_by_key(|p| p.k_vertices());
    Ok(all)
}

/// The first of [`s_max_partitions`].
pub fn s_max_partition(g: &Graph) -> Result<KSPartition> {
    touch(Op::SMaxPartition);
    Ok(s_max_partitions(g)?[0])
}

/// The first of [`k_max_partitions`].
pub fn k_max_partition(g: &Graph) -> Result<KSPartition> {
    touch(Op::KMaxPartition);
    Ok(k_max_partitions(g)?[0])
}

fn check_partition(g: &Graph, p: &KSPartition) -> Result<()> {
    let v = validate_partition(g, p);
    if v.is_empty() {
        Ok(())
    } else {
        let text: Vec<String> = v.iter().map(ToString::to_string).collect();
        Err(DomainError::BadPartition(text.join("; ")).into())
    }
}

/// Classifies `p`; in the two unbalanced cases the least swing vertex is returned.
pub fn trichotomy(g: &Graph, p: &KSPartition) -> Result<SplitAnalysis> {
    touch(Op::Trichotomy);
    check_partition(g, p)?;
    let SplitAnalysis { omega, alpha, .. } = omega_alpha(g)?;
    let case = if p.k_len() == omega && p.s_len() == alpha {
        Trichotomy::Balanced
    } else if p.k_len() < omega {
        let swing = iter_bits(p.s)
            .find(|&s| g.neighbors(s) & p.k == p.k)
            .expect("case (ii) has a swing vertex");
        Trichotomy::SMax { swing }
    } else {
        let swing = isolated_from(g, p)
            .next()
            .expect("case (iii) has a swing vertex");
        Trichotomy::KMax { swing }
    };
    Ok(SplitAnalysis {
        omega,
        alpha,
        case: Some(case),
    })
}

/// S-vertices adjacent to all of K together with K-vertices that have no
/// neighbour in S. Empty exactly when `p` is balanced.
pub fn swing_vertices(g: &Graph, p: &KSPartition) -> Result<u64> {
    touch(Op::SwingVertices);
    check_partition(g, p)?;
    let s_side = iter_bits(p.s).filter(|&s| g.neighbors(s) & p.k == p.k);
    let k_side = isolated_from(g, p);
    Ok(s_side.chain(k_side).fold(0, |m, v| m | bit(v)))
}

/// Unbalanced iff the S-max partition has a swing vertex; the witness is
/// the least one.
pub fn balance_split(g: &Graph) -> Result<Balance> {
    touch(Op::BalanceSplit);
    let p = s_max_partition(g)?;
    let swings = swing_vertices(g, &p)?;
    Ok(match iter_bits(swings).next() {
        Some(s) => Balance::Unbalanced(Witness::SwingVertex(s)),
        None => Balance::Balanced,
    })
}

/// Vertices lying in exactly one maximal clique.
///
/// With a KS-partition in hand the maximal cliques are `{s} ∪ N(s)` for each
/// `s` in S, plus K itself when no S-vertex sees all of K.
pub fn loyal_vertices_split(g: &Graph) -> Result<u64> {
    touch(Op::LoyalVerticesSplit);
    let p = s_max_base(g)?;
    let mut cliques: Vec<u64> = iter_bits(p.s).map(|s| g.neighbors(s) | bit(s)).collect();
    if iter_bits(p.s).all(|s| g.neighbors(s) & p.k != p.k) {
        cliques.push(p.k);
    }
    Ok(iter_bits(g.all_vertices())
        .filter(|&v| cliques.iter().filter(|&&c| c & bit(v) != 0).count() == 1)
        .fold(0, |m, v| m | bit(v)))
}
