use super::{Balance, Witness};
use crate::coverage::{touch, Op};
use crate::error::{DomainError, Result};
use crate::model::{iter_bits, low_ones, XYGraph};

/// `(Y-isolates, X-universals)` as masks. With Y empty every X-vertex is
/// universal.
pub fn xy_isolates_universals(g: &XYGraph) -> (u64, u64) {
    touch(Op::XyIsolatesUniversals);
    let all_y = low_ones(g.ny());
    let isolates = all_y & !g.covered_y();
    let universals = (0..g.nx())
        .filter(|&x| g.x_neighbors(x) == all_y)
        .fold(0, |m, x| m | (1 << x));
    (isolates, universals)
}

/// Defined only without Y-isolates. Unbalanced iff X has a universal vertex.
pub fn balance_xy(g: &XYGraph) -> Result<Balance> {
    touch(Op::BalanceXy);
    let (isolates, universals) = xy_isolates_universals(g);
    if let Some(y) = iter_bits(isolates).next() {
        return Err(DomainError::YIsolate(y).into());
    }
    Ok(match iter_bits(universals).next() {
        Some(x) => Balance::Unbalanced(Witness::UniversalVertex(x)),
        None => Balance::Balanced,
    })
}
