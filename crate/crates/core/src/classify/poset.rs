use super::{Balance, Witness};
use crate::coverage::{touch, Op};
use crate::model::{iter_bits, low_ones, BipartitePoset};

/// `(full, partial)` support points as masks over the height-0 points. With
/// no height-1 points every height-0 point has full support.
pub fn poset_support(p: &BipartitePoset) -> (u64, u64) {
    touch(Op::PosetSupport);
    let all_up = low_ones(p.n1());
    let full = (0..p.n0())
        .filter(|&a| p.up_set(a) == all_up)
        .fold(0, |m, a| m | (1 << a));
    (full, low_ones(p.n0()) & !full)
}

/// Unbalanced iff a full support point exists.
pub fn balance_poset(p: &BipartitePoset) -> Balance {
    touch(Op::BalancePoset);
    match iter_bits(poset_support(p).0).next() {
        Some(a) => Balance::Unbalanced(Witness::FullSupportPoint(a)),
        None => Balance::Balanced,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_examples() {
        let v = BipartitePoset::from_pairs(2, 1, &[(0, 0), (1, 0)]).unwrap();
        assert_eq!(poset_support(&v), (0b11, 0));
        // N: a<x, b<x, b<y with a=0, b=1, x=0, y=1.
        let n = BipartitePoset::from_pairs(2, 2, &[(0, 0), (1, 0), (1, 1)]).unwrap();
        assert_eq!(poset_support(&n), (0b10, 0b01));
        assert_eq!(poset_support(&BipartitePoset::antichain(4)), (0b1111, 0));
    }

    #[test]
    fn balance_examples() {
        let chain = BipartitePoset::from_pairs(1, 1, &[(0, 0)]).unwrap();
        assert_eq!(
            balance_poset(&chain),
            Balance::Unbalanced(Witness::FullSupportPoint(0))
        );
        let two_chains = BipartitePoset::from_pairs(2, 2, &[(0, 0), (1, 1)]).unwrap();
        assert!(balance_poset(&two_chains).is_balanced());
        assert!(balance_poset(&BipartitePoset::antichain(0)).is_balanced());
    }
}
