//! Rectangles contained in a Young diagram.
//!
//! A rectangle is identified by its corner quadruple `(r1, r2, c1, c2)`. It is
//! thin when its height or width is 1 and thick otherwise. Counts come three ways:
//! a brute-force scan, coordinate sums, and sums of (partial) hook lengths.

use serde::Serialize;

use crate::count::{self, Count};
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RectCounts<T = u64> {
    pub total: T,
    pub thin: T,
    pub thick: T,
}

/// Scans every quadruple in the bounding box and tests each cell for membership.
pub fn count_rectangles_brute<T: Count>(shape: &Partition) -> Result<RectCounts<T>> {
    let rows = shape.parts().len();
    let cols = shape.parts().first().copied().unwrap_or(0);
    let member = |r: usize, c: usize| c <= shape.parts()[r - 1];
    let (mut thin, mut thick) = (T::zero(), T::zero());
    for r1 in 1..=rows {
        for r2 in r1..=rows {
            for c1 in 1..=cols {
                for c2 in c1..=cols {
                    let filled = (r1..=r2).all(|r| (c1..=c2).all(|c| member(r, c)));
                    if !filled {
                        continue;
                    }
                    let slot = if r1 == r2 || c1 == c2 { &mut thin } else { &mut thick };
                    *slot = slot.checked_add(&T::one()).ok_or(Error::Overflow)?;
                }
            }
        }
    }
    let total = thin.checked_add(&thick).ok_or(Error::Overflow)?;
    Ok(RectCounts { total, thin, thick })
}

/// `Σ_{(i,j) ∈ λ} i·j`.
pub fn count_total_formula<T: Count>(shape: &Partition) -> Result<T> {
    shape.cells().try_fold(T::zero(), |acc, u| {
        let term = count::mul(&count::lift::<T>(u.row)?, &count::lift::<T>(u.col)?)?;
        count::add(&acc, &term)
    })
}

/// `Σ_{(i,j) ∈ λ} (i-1)(j-1)`.
pub fn count_thick_direct<T: Count>(shape: &Partition) -> Result<T> {
    shape.cells().try_fold(T::zero(), |acc, u| {
        let term = count::mul(&count::lift::<T>(u.row - 1)?, &count::lift::<T>(u.col - 1)?)?;
        count::add(&acc, &term)
    })
}

/// `Σ h(u)`, the number of thin rectangles.
pub fn count_thin_hook<T: Count>(shape: &Partition) -> Result<T> {
    let hooks = shape
        .cells()
        .map(|u| shape.cell_stats(u).map(|s| s.hook_length))
        .collect::<Result<Vec<_>>>()?;
    count::power_sum(hooks, 1)
}

/// `½ Σ h̃(u)²`, the number of thick rectangles.
pub fn count_thick_partial<T: Count>(shape: &Partition) -> Result<T> {
    let partial = shape
        .cells()
        .map(|u| shape.cell_stats(u).map(|s| s.partial_hook))
        .collect::<Result<Vec<_>>>()?;
    let sum: T = count::power_sum(partial, 2)?;
    let (half, rem) = sum.div_rem(&count::lift(2)?);
    if !rem.is_zero() {
        return Err(Error::OddSum);
    }
    Ok(half)
}

/// Counts from the formulas: thin by hook lengths, thick by partial hook lengths.
pub fn count_rectangles_formula<T: Count>(shape: &Partition) -> Result<RectCounts<T>> {
    let thin: T = count_thin_hook(shape)?;
    let thick: T = count_thick_partial(shape)?;
    let total = count::add(&thin, &thick)?;
    Ok(RectCounts { total, thin, thick })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn shape(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.to_vec()).unwrap()
    }

    #[test]
    fn brute_small() {
        let r = count_rectangles_brute::<u64>(&shape(&[2, 2])).unwrap();
        assert_eq!(r, RectCounts { total: 9, thin: 8, thick: 1 });
        let r = count_rectangles_brute::<u64>(&shape(&[1])).unwrap();
        assert_eq!(r, RectCounts { total: 1, thin: 1, thick: 0 });
        let r = count_rectangles_brute::<u64>(&shape(&[2, 1])).unwrap();
        assert_eq!(r, RectCounts { total: 5, thin: 5, thick: 0 });
        let r = count_rectangles_brute::<u64>(&Partition::empty()).unwrap();
        assert!(r.total.is_zero());
    }

    #[test]
    fn formulas() {
        let sq = shape(&[2, 2]);
        assert_eq!(count_total_formula::<u64>(&sq), Ok(9));
        assert_eq!(count_thick_direct::<u64>(&sq), Ok(1));
        assert_eq!(count_thin_hook::<u64>(&sq), Ok(8));
        assert_eq!(count_thick_partial::<u64>(&sq), Ok(1));
        assert_eq!(count_total_formula::<u64>(&shape(&[1])), Ok(1));
        assert_eq!(count_thin_hook::<u64>(&shape(&[1])), Ok(1));
        assert_eq!(count_thick_direct::<u64>(&shape(&[7])), Ok(0));
        assert_eq!(count_thin_hook::<u64>(&shape(&[3, 1])), Ok(8));
        assert_eq!(count_thick_partial::<u64>(&shape(&[4, 1, 1, 1])), Ok(0));

        let p = shape(&[5, 5, 4, 2]);
        let brute = count_rectangles_brute::<u64>(&p).unwrap();
        assert_eq!(count_total_formula::<u64>(&p), Ok(brute.total));
        assert_eq!(count_thick_direct::<u64>(&p), Ok(brute.thick));
        assert_eq!(count_rectangles_formula::<u64>(&p), Ok(brute));
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(count_total_formula::<u8>(&shape(&[7, 7, 7, 7])), Err(Error::Overflow));
    }
}
