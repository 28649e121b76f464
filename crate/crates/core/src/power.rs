//! Other powers: the injection `H^k → N^k ∪ C^k` for `k ≥ 3`, and the reverse
//! injection `N^1 ∪ C^1 → H^1`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::count::Count;
use crate::error::{Error, Result};
use crate::labeled::{
    classify_h_unchecked, set_size, validate_h, ContentElement, Family, HClass, HookElement,
    TargetElement, TupleElement,
};
use crate::partition::{Cell, Partition};

fn invalid(err: Error) -> Error {
    Error::InvalidElement(err.to_string())
}

/// The combined map on `H^k(λ)` for any `k ≥ 2`. For `k = 2` it coincides with
/// [`crate::bijection::phi`].
pub fn phi_k(shape: &Partition, e: &HookElement) -> Result<TargetElement> {
    if e.k() < 2 {
        return Err(Error::InvalidElement(format!("phi_k needs k >= 2, found {}", e.k())));
    }
    validate_h(shape, e).map_err(invalid)?;
    let star = e.star;
    match classify_h_unchecked(e) {
        HClass::H1 => Ok(TargetElement::N(TupleElement { labels: e.labels.clone() })),
        HClass::H2 => {
            let in_row = e.labels.iter().all(|v| v.row == star.row);
            let mut labels = e.labels.clone();
            let first = labels[0];
            if labels.iter().all(|&v| v == first) {
                let corner = if in_row { star.col } else { star.row };
                let moved = if in_row { labels.len() - 1 } else { 0 };
                labels[moved] = Cell { row: corner, col: corner };
            } else {
                let key = |v: &Cell| if in_row { v.col } else { v.row };
                let last = labels.iter().map(key).max().expect("labels");
                let j0 = key(&star);
                for v in labels.iter_mut().filter(|v| key(v) != last) {
                    *v = if in_row {
                        Cell { row: j0, col: v.col }
                    } else {
                        Cell { row: v.row, col: j0 }
                    };
                }
            }
            if let Some(&v) = labels.iter().find(|&&v| !shape.contains(v)) {
                return Err(Error::TargetOutside(v));
            }
            Ok(TargetElement::N(TupleElement { labels }))
        }
        HClass::H3 => {
            let in_row = e.labels.iter().all(|v| v.row == star.row);
            let far = *e
                .labels
                .iter()
                .max_by_key(|v| if in_row { v.col } else { v.row })
                .expect("labels");
            let labels = e.labels.iter().map(|&v| if v == far { star } else { v }).collect();
            Ok(TargetElement::C(ContentElement { star: far, labels }))
        }
    }
}

fn require_one(k: usize) -> Result<()> {
    if k == 1 {
        Ok(())
    } else {
        Err(Error::WrongLabelCount { expected: 1, found: k })
    }
}

/// The injection `N^1 ∪ C^1 → H^1`: an N-element gains a star on its label,
/// a C-element has its star and label exchanged.
pub fn psi1(shape: &Partition, t: &TargetElement) -> Result<HookElement> {
    require_one(t.k())?;
    t.validate(shape).map_err(invalid)?;
    Ok(match t {
        TargetElement::N(e) => HookElement { star: e.labels[0], labels: e.labels.clone() },
        TargetElement::C(e) => HookElement { star: e.labels[0], labels: vec![e.star] },
    })
}

/// Whether `e ∈ H^1(λ)` is in the image of [`psi1`]: star and label share a diagonal hook.
pub fn psi1_in_image(shape: &Partition, e: &HookElement) -> Result<bool> {
    require_one(e.k())?;
    validate_h(shape, e).map_err(invalid)?;
    Ok(e.star.diagonal_index() == e.labels[0].diagonal_index())
}

/// Left inverse of [`psi1`] on its image.
pub fn psi1_inv(shape: &Partition, e: &HookElement) -> Result<TargetElement> {
    if !psi1_in_image(shape, e)? {
        return Err(Error::InvalidElement(format!(
            "star {} and label {} lie in different diagonal hooks",
            e.star, e.labels[0]
        )));
    }
    let v = e.labels[0];
    Ok(if v == e.star {
        TargetElement::N(TupleElement { labels: vec![v] })
    } else {
        TargetElement::C(ContentElement { star: v, labels: vec![e.star] })
    })
}

/// The N-element missed by `phi_k` on a non-hook shape: label 2 on `(1,1)`, every
/// other label on `(2,2)`.
pub fn witness_non_image(shape: &Partition, k: usize) -> Result<TupleElement> {
    if k < 3 {
        return Err(Error::InvalidElement(format!("witness needs k >= 3, found {k}")));
    }
    if shape.is_hook()? {
        return Err(Error::IsHook);
    }
    let mut labels = vec![Cell::new(2, 2); k];
    labels[1] = Cell::new(1, 1);
    Ok(TupleElement { labels })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Less,
    Equal,
    Greater,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Greater => ">",
        }
    }
}

impl From<Ordering> for Relation {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Relation::Less,
            Ordering::Equal => Relation::Equal,
            Ordering::Greater => Relation::Greater,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// `Σ h^k` against `n^k + Σ |c|^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport<T = u64> {
    pub k: u32,
    pub lhs: T,
    pub rhs: T,
    pub relation: Relation,
    pub is_hook: bool,
}

impl<T> InequalityReport<T> {
    /// `k = 2`: equality. `k ≥ 3`: `≤`, strict unless a hook. `k = 1`: `≥`, strict unless a hook.
    pub fn invariants_hold(&self) -> bool {
        let strict = !self.is_hook;
        match self.k {
            0 => false,
            1 => self.relation == if strict { Relation::Greater } else { Relation::Equal },
            2 => self.relation == Relation::Equal,
            _ => self.relation == if strict { Relation::Less } else { Relation::Equal },
        }
    }
}

pub fn inequality_check<T: Count>(shape: &Partition, k: u32) -> Result<InequalityReport<T>> {
    let is_hook = shape.is_hook()?;
    let lhs: T = set_size(shape, Family::H, k)?;
    let n: T = set_size(shape, Family::N, k)?;
    let c: T = set_size(shape, Family::C, k)?;
    let rhs = n.checked_add(&c).ok_or(Error::Overflow)?;
    let relation = lhs.cmp(&rhs).into();
    Ok(InequalityReport { k, lhs, rhs, relation, is_hook })
}
