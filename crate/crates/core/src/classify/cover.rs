use super::{Balance, Witness};
use crate::coverage::{touch, Op};
use crate::error::{DomainError, Error, Result};
use crate::model::{validate, Object, SetCover, Violation};

/// Rejects families that fail to cover the ground set. Repeated sets are let
/// through; they simply are not minimal.
fn check_cover(c: &SetCover) -> Result<()> {
    let violations = validate(&Object::Cover(c.clone()));
    if let Some(&Violation::Uncovered(e)) = violations
        .iter()
        .find(|v| matches!(v, Violation::Uncovered(_)))
    {
        return Err(DomainError::NotCover(e).into());
    }
    let hard: Vec<String> = violations
        .iter()
        .filter(|v| !matches!(v, Violation::DuplicateSet(..)))
        .map(ToString::to_string)
        .collect();
    if hard.is_empty() {
        Ok(())
    } else {
        Err(Error::Invalid {
            class: crate::model::ClassTag::Cover,
            violations: hard,
        })
    }
}

/// For each set, the elements that lie in no other set.
pub fn loyal_elements(c: &SetCover) -> Vec<Vec<usize>> {
    touch(Op::LoyalElements);
    let mut membership = std::collections::HashMap::<usize, usize>::new();
    for set in c.sets() {
        for &e in set {
            *membership.entry(e).or_default() += 1;
        }
    }
    c.sets()
        .iter()
        .map(|set| set.iter().copied().filter(|e| membership[e] == 1).collect())
        .collect()
}

/// Index of the first set without a loyal element.
pub(crate) fn first_disloyal_set(c: &SetCover) -> Option<usize> {
    loyal_elements(c).iter().position(Vec::is_empty)
}

/// Every set has a loyal element.
pub fn is_minimal(c: &SetCover) -> Result<bool> {
    touch(Op::IsMinimal);
    check_cover(c)?;
    Ok(first_disloyal_set(c).is_none())
}

pub(crate) fn require_minimal(c: &SetCover) -> Result<()> {
    check_cover(c)?;
    match first_disloyal_set(c) {
        Some(i) => Err(DomainError::NotMinimal(i).into()),
        None => Ok(()),
    }
}

/// Unbalanced iff some set has `|V| - |C| + 1` elements. Several sets may
/// qualify; the witness is the least index.
pub fn balance_cover(c: &SetCover) -> Result<Balance> {
    touch(Op::BalanceCover);
    require_minimal(c)?;
    // Minimal covers have at most |V| sets, so this cannot underflow.
    let threshold = c.ground_size() + 1 - c.len();
    Ok(match c.sets().iter().position(|s| s.len() == threshold) {
        Some(i) => Balance::Unbalanced(Witness::ExtremalSet(i)),
        None => Balance::Balanced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::iter_bits;

    fn cover(n: usize, sets: &[&[usize]]) -> SetCover {
        SetCover::from_raw(n, sets.iter().map(|s| s.to_vec()).collect())
    }

    #[test]
    fn loyal_examples() {
        assert_eq!(
            loyal_elements(&cover(3, &[&[0, 1], &[1, 2]])),
            vec![vec![0], vec![2]]
        );
        assert_eq!(
            loyal_elements(&cover(3, &[&[0, 1, 2]])),
            vec![vec![0, 1, 2]]
        );
        assert_eq!(
            loyal_elements(&cover(3, &[&[0, 1], &[0, 1, 2]])),
            vec![vec![], vec![2]]
        );
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal(&cover(3, &[&[0, 1], &[1, 2]])).unwrap());
        assert!(!is_minimal(&cover(3, &[&[0, 1], &[0, 1, 2]])).unwrap());
        assert!(!is_minimal(&cover(2, &[&[0, 1], &[0, 1]])).unwrap());
        assert!(is_minimal(&cover(0, &[])).unwrap());
        assert_eq!(
            is_minimal(&cover(3, &[&[0, 1]])),
            Err(DomainError::NotCover(2).into())
        );
    }

    #[test]
    fn balance_examples() {
        let b = balance_cover(&cover(3, &[&[0, 1], &[1, 2]])).unwrap();
        assert_eq!(b, Balance::Unbalanced(Witness::ExtremalSet(0)));
        let singletons = balance_cover(&cover(3, &[&[0], &[1], &[2]])).unwrap();
        assert!(!singletons.is_balanced());
        // {a,b},{c,d} on four elements: threshold 3.
        assert!(balance_cover(&cover(4, &[&[0, 1], &[2, 3]]))
            .unwrap()
            .is_balanced());
        assert_eq!(
            balance_cover(&cover(3, &[&[0, 1], &[0, 1, 2]])),
            Err(DomainError::NotMinimal(0).into())
        );
    }

    /// Every family of distinct nonempty subsets of `0..n` that covers it.
    fn all_covers(n: usize) -> Vec<SetCover> {
        let subsets = (1u64 << n) - 1;
        let full = (1u64 << n) - 1;
        (0u64..1 << subsets)
            .filter(|&fam| iter_bits(fam).fold(0, |u, s| u | (s as u64 + 1)) == full)
            .map(|fam| SetCover::from_masks(n, iter_bits(fam).map(|s| s as u64 + 1)))
            .collect()
    }

    #[test]
    fn loyal_criterion_equals_union_criterion() {
        for n in 0..=4 {
            for c in all_covers(n) {
                let masks = c.masks();
                let redundant = (0..masks.len()).any(|i| {
                    let rest = masks
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .fold(0, |u, (_, &m)| u | m);
                    masks[i] & !rest == 0
                });
                assert_eq!(is_minimal(&c).unwrap(), !redundant, "{c:?}");
            }
        }
    }

    #[test]
    fn no_set_exceeds_threshold() {
        let mut several = 0;
        for n in 0..=4 {
            for c in all_covers(n).into_iter().filter(|c| is_minimal(c).unwrap()) {
                let threshold = n + 1 - c.len();
                let sizes: Vec<usize> = c.sets().iter().map(Vec::len).collect();
                assert!(sizes.iter().all(|&s| s <= threshold), "{c:?}");
                if sizes.iter().filter(|&&s| s == threshold).count() > 1 {
                    several += 1;
                }
            }
        }
        // Extremal sets need not be unique: {{0},{1}} has two.
        assert!(several > 0);
    }
}
