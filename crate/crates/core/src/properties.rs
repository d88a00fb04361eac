//! Identity and structural predicates on loops.
//!
//! Universally quantified predicates return a [`Verdict`]. Scans run in
//! lexicographic order of the quantified variables and stop at the first
//! failure, so a witness is always the smallest failing tuple.
//!
//! The LC and RC identities are each checked in two printed forms:
//!
//! * LC: `(xx)(yz) = (x(xy))z` and `(x·xy)z = x(x·yz)`
//! * RC: `(zy)(xx) = z((yx)x)` and `(zy·x)x = z(yx·x)`
//!
//! Rewritings that only swap the two sides of one of these collapse onto the
//! same scan. The autotopism form `(L_x², I, L_x²)` lives in
//! [`crate::regular`]. If the two scans ever disagree on a table the check
//! returns [`Error::InternalInconsistency`] instead of a verdict. The same
//! applies to `C ⇔ LC ∧ RC`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// Outcome of a universally quantified predicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Vec<usize>) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }

    /// A plain boolean with no quantified witness.
    pub fn from_bool(holds: bool) -> Self {
        Verdict {
            holds,
            witness: if holds { None } else { Some(Vec::new()) },
        }
    }

    /// Conjunction keeping the first failing witness.
    pub fn and(self, other: Verdict) -> Verdict {
        if self.holds {
            other
        } else {
            self
        }
    }
}

pub(crate) fn scan1(n: usize, mut pred: impl FnMut(usize) -> bool) -> Verdict {
    match (0..n).find(|&x| !pred(x)) {
        Some(x) => Verdict::fail(vec![x]),
        None => Verdict::pass(),
    }
}

pub(crate) fn scan2(n: usize, mut pred: impl FnMut(usize, usize) -> bool) -> Verdict {
    for x in 0..n {
        for y in 0..n {
            if !pred(x, y) {
                return Verdict::fail(vec![x, y]);
            }
        }
    }
    Verdict::pass()
}

pub(crate) fn scan3(n: usize, mut pred: impl FnMut(usize, usize, usize) -> bool) -> Verdict {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !pred(x, y, z) {
                    return Verdict::fail(vec![x, y, z]);
                }
            }
        }
    }
    Verdict::pass()
}

fn cross_check(name: &str, a: &Verdict, b: &Verdict) -> Result<()> {
    if a.holds != b.holds {
        return Err(Error::InternalInconsistency(format!(
            "equivalent {name} forms disagree (witnesses {:?} vs {:?})",
            a.witness, b.witness
        )));
    }
    Ok(())
}

/// `(xx)(yz) = (x(xy))z`, witness `(x, y, z)`.
pub fn is_lc(t: &CayleyTable) -> Result<Verdict> {
    t.loop_identity()?;
    let m = |a, b| t.mul(a, b);
    let squares = scan3(t.order(), |x, y, z| {
        m(m(x, x), m(y, z)) == m(m(x, m(x, y)), z)
    });
    let nested = scan3(t.order(), |x, y, z| {
        m(m(x, m(x, y)), z) == m(x, m(x, m(y, z)))
    });
    cross_check("LC", &squares, &nested)?;
    Ok(squares)
}

/// `(zy)(xx) = z((yx)x)`, witness `(x, y, z)`.
pub fn is_rc(t: &CayleyTable) -> Result<Verdict> {
    t.loop_identity()?;
    let m = |a, b| t.mul(a, b);
    let squares = scan3(t.order(), |x, y, z| {
        m(m(z, y), m(x, x)) == m(z, m(m(y, x), x))
    });
    let nested = scan3(t.order(), |x, y, z| {
        m(m(m(z, y), x), x) == m(z, m(m(y, x), x))
    });
    cross_check("RC", &squares, &nested)?;
    Ok(squares)
}

/// `x(y(yz)) = ((xy)y)z`, witness `(x, y, z)`.
pub fn is_c(t: &CayleyTable) -> Result<Verdict> {
    t.loop_identity()?;
    let m = |a, b| t.mul(a, b);
    let c = scan3(t.order(), |x, y, z| {
        m(x, m(y, m(y, z))) == m(m(m(x, y), y), z)
    });
    let lc = is_lc(t)?;
    let rc = is_rc(t)?;
    if c.holds != (lc.holds && rc.holds) {
        return Err(Error::InternalInconsistency(format!(
            "C = {} but LC = {}, RC = {}",
            c.holds, lc.holds, rc.holds
        )));
    }
    Ok(c)
}

/// `x·xy = x²y`, witness `(x, y)`.
pub fn is_left_alternative(t: &CayleyTable) -> Result<Verdict> {
    t.loop_identity()?;
    Ok(scan2(t.order(), |x, y| {
        t.mul(x, t.mul(x, y)) == t.mul(t.mul(x, x), y)
    }))
}

/// `yx·x = yx²`, witness `(x, y)`.
pub fn is_right_alternative(t: &CayleyTable) -> Result<Verdict> {
    t.loop_identity()?;
    Ok(scan2(t.order(), |x, y| {
        t.mul(t.mul(y, x), x) == t.mul(y, t.mul(x, x))
    }))
}

pub fn is_alternative(t: &CayleyTable) -> Result<Verdict> {
    Ok(is_left_alternative(t)?.and(is_right_alternative(t)?))
}

/// Left inverse property: `x^λ(xy) = y` where `x^λ x = e`. Witness `(x, y)`.
pub fn has_lip(t: &CayleyTable) -> Result<Verdict> {
    let e = t.loop_identity()?;
    Ok(scan2(t.order(), |x, y| {
        let left_inv = t.rdiv(e, x);
        t.mul(left_inv, t.mul(x, y)) == y
    }))
}

/// Right inverse property: `(yx)x^ρ = y` where `x x^ρ = e`. Witness `(x, y)`.
pub fn has_rip(t: &CayleyTable) -> Result<Verdict> {
    let e = t.loop_identity()?;
    Ok(scan2(t.order(), |x, y| {
        let right_inv = t.ldiv(x, e);
        t.mul(t.mul(y, x), right_inv) == y
    }))
}

pub fn is_commutative(t: &CayleyTable) -> Result<Verdict> {
    t.loop_identity()?;
    Ok(scan2(t.order(), |x, y| t.mul(x, y) == t.mul(y, x)))
}

pub fn is_associative(t: &CayleyTable) -> Result<Verdict> {
    t.loop_identity()?;
    Ok(scan3(t.order(), |x, y, z| {
        t.mul(t.mul(x, y), z) == t.mul(x, t.mul(y, z))
    }))
}

/// Left Moufang identity `x(y(xz)) = ((xy)x)z`. Only used to validate
/// catalog fixtures.
pub fn is_moufang(t: &CayleyTable) -> Result<Verdict> {
    t.loop_identity()?;
    let m = |a, b| t.mul(a, b);
    Ok(scan3(t.order(), |x, y, z| {
        m(x, m(y, m(x, z))) == m(m(m(x, y), x), z)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Nuclei {
    pub left: Vec<usize>,
    pub middle: Vec<usize>,
    pub right: Vec<usize>,
}

pub fn nuclei(t: &CayleyTable) -> Result<Nuclei> {
    t.loop_identity()?;
    let n = t.order();
    let m = |a, b| t.mul(a, b);
    let all_pairs = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|x| (0..n).all(|y| f(x, y)));
    Ok(Nuclei {
        left: (0..n)
            .filter(|&a| all_pairs(&|x, y| m(a, m(x, y)) == m(m(a, x), y)))
            .collect(),
        middle: (0..n)
            .filter(|&a| all_pairs(&|x, y| m(x, m(a, y)) == m(m(x, a), y)))
            .collect(),
        right: (0..n)
            .filter(|&a| all_pairs(&|x, y| m(x, m(y, a)) == m(m(x, y), a)))
            .collect(),
    })
}

/// Elements that commute with everything and lie in all three nuclei.
pub fn center(t: &CayleyTable) -> Result<Vec<usize>> {
    let nuc = nuclei(t)?;
    Ok(center_from(t, &nuc))
}

fn center_from(t: &CayleyTable, nuc: &Nuclei) -> Vec<usize> {
    let n = t.order();
    nuc.left
        .iter()
        .copied()
        .filter(|a| nuc.middle.binary_search(a).is_ok() && nuc.right.binary_search(a).is_ok())
        .filter(|&a| (0..n).all(|x| t.mul(a, x) == t.mul(x, a)))
        .collect()
}

/// Every square `x·x` lies in the center. Witness `(x)`.
pub fn is_central_square(t: &CayleyTable) -> Result<Verdict> {
    let z = center(t)?;
    Ok(scan1(t.order(), |x| z.binary_search(&t.mul(x, x)).is_ok()))
}

/// Sorted set of squares `{x·x}`.
pub fn squares(t: &CayleyTable) -> Vec<usize> {
    let mut sq: Vec<usize> = (0..t.order()).map(|x| t.mul(x, x)).collect();
    sq.sort_unstable();
    sq.dedup();
    sq
}
