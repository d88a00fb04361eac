//! Left and right representation sets and their closure laws, plus
//! reconstruction of a loop from generators of its right representation.

use std::collections::HashSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{PermSet, Permutation};
use crate::properties::{self, Verdict};
use crate::table::CayleyTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Which closure products drive generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Law {
    /// `αβ²` only.
    Lcrc,
    /// `αβ²` and `α²β`.
    C,
}

impl FromStr for Law {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lcrc" => Ok(Law::Lcrc),
            "c" => Ok(Law::C),
            other => Err(format!("unknown law {other:?}; expected lcrc or c")),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::Lcrc => "lcrc",
            Law::C => "c",
        })
    }
}

fn translations(t: &CayleyTable, side: Side) -> Result<Vec<Permutation>> {
    if !t.is_quasigroup() {
        return Err(Error::NotAQuasigroup);
    }
    (0..t.order())
        .map(|x| match side {
            Side::Left => t.left_translation(x),
            Side::Right => t.right_translation(x),
        })
        .collect()
}

fn representation(t: &CayleyTable, side: Side) -> Result<PermSet> {
    let set = PermSet::from_perms(t.order(), translations(t, side)?)?;
    if !set.is_sharply_transitive() {
        return Err(Error::InternalInconsistency(format!(
            "{side} translations of a quasigroup are not sharply transitive"
        )));
    }
    Ok(set)
}

/// Π_λ: all left translations `L_x`.
pub fn left_representation(t: &CayleyTable) -> Result<PermSet> {
    representation(t, Side::Left)
}

/// Π_ρ: all right translations `R_x`.
pub fn right_representation(t: &CayleyTable) -> Result<PermSet> {
    representation(t, Side::Right)
}

pub fn representation_on(t: &CayleyTable, side: Side) -> Result<PermSet> {
    representation(t, side)
}

/// `αβ² ∈ Π` for all `α = T_a`, `β = T_b` on the chosen side; witness `(a, b)`.
pub fn closure_lcrc(t: &CayleyTable, side: Side) -> Result<Verdict> {
    closure_scan(t, side, false)
}

/// `αβ² ∈ Π` and `α²β ∈ Π` for all `α = T_a`, `β = T_b`; witness `(a, b)`.
pub fn closure_c(t: &CayleyTable, side: Side) -> Result<Verdict> {
    closure_scan(t, side, true)
}

fn closure_scan(t: &CayleyTable, side: Side, both: bool) -> Result<Verdict> {
    let members = translations(t, side)?;
    let set = PermSet::from_perms(t.order(), members.iter().cloned())?;
    let squares: Vec<Permutation> = members.iter().map(|p| p.then(p)).collect();
    Ok(properties::scan2(t.order(), |a, b| {
        set.contains(&members[a].then(&squares[b]))
            && (!both || set.contains(&squares[a].then(&members[b])))
    }))
}

fn agree(name: &str, identity: bool, closure: bool) -> Result<bool> {
    if identity == closure {
        Ok(true)
    } else {
        Err(Error::InternalInconsistency(format!(
            "{name}: identity = {identity}, closure = {closure}"
        )))
    }
}

/// LC (left) or RC (right) agrees with `αβ²`-closure of that side.
pub fn check_closure_lcrc(t: &CayleyTable, side: Side) -> Result<bool> {
    let identity = match side {
        Side::Left => properties::is_lc(t)?.holds,
        Side::Right => properties::is_rc(t)?.holds,
    };
    let name = match side {
        Side::Left => "LC vs left closure",
        Side::Right => "RC vs right closure",
    };
    agree(name, identity, closure_lcrc(t, side)?.holds)
}

/// C agrees with `αβ², α²β`-closure of the chosen side.
pub fn check_closure_c(t: &CayleyTable, side: Side) -> Result<bool> {
    let name = match side {
        Side::Left => "C vs left closure",
        Side::Right => "C vs right closure",
    };
    agree(name, properties::is_c(t)?.holds, closure_c(t, side)?.holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PowerClosure {
    Holds,
    /// `T_element^exponent` is not a translation.
    Fails {
        element: usize,
        exponent: i64,
    },
    /// The loop is not LC (left) / RC (right), so nothing is claimed.
    VacuouslyTrue,
}

/// Every power `β^k`, `k` in `exponents`, of a translation is a translation.
pub fn check_power_closure(
    t: &CayleyTable,
    side: Side,
    exponents: RangeInclusive<i64>,
) -> Result<PowerClosure> {
    let precondition = match side {
        Side::Left => properties::is_lc(t)?.holds,
        Side::Right => properties::is_rc(t)?.holds,
    };
    if !precondition {
        return Ok(PowerClosure::VacuouslyTrue);
    }
    power_closure_scan(t, side, exponents)
}

/// The power scan without the precondition.
pub fn power_closure_scan(
    t: &CayleyTable,
    side: Side,
    exponents: RangeInclusive<i64>,
) -> Result<PowerClosure> {
    let members = translations(t, side)?;
    let set = PermSet::from_perms(t.order(), members.iter().cloned())?;
    for (element, beta) in members.iter().enumerate() {
        for exponent in exponents.clone() {
            if !set.contains(&beta.power(exponent)) {
                return Ok(PowerClosure::Fails { element, exponent });
            }
        }
    }
    Ok(PowerClosure::Holds)
}

/// Closes `{I} ∪ gens` under `αβ²` (and `α²β` for [`Law::C`]) together with
/// powers `γ^k`, `|k| ≤ n`, then rebuilds the loop whose right
/// representation is the closure.
///
/// Products are formed pair by pair in index order; new members are appended
/// in discovery order. The identity of the result is point `0`: `R_x` is the
/// member sending `0` to `x`, and `y·x = y R_x`.
pub fn generate_from_generators(gens: &[Permutation], n: usize, law: Law) -> Result<CayleyTable> {
    let closure = close_generators(gens, n, law)?;
    table_from_right_representation(&closure, law)
}

/// The closure step of [`generate_from_generators`].
pub fn close_generators(gens: &[Permutation], n: usize, law: Law) -> Result<PermSet> {
    for g in gens {
        if g.order() != n {
            return Err(Error::OrderMismatch {
                expected: n,
                found: g.order(),
            });
        }
    }
    let mut members: Vec<Permutation> = Vec::new();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut push = |p: Permutation, members: &mut Vec<Permutation>| -> Result<()> {
        if seen.insert(p.clone()) {
            members.push(p);
            if members.len() > n {
                return Err(Error::ClosureOverflow { order: n });
            }
        }
        Ok(())
    };

    push(Permutation::identity(n), &mut members)?;
    for g in gens {
        push(g.clone(), &mut members)?;
    }

    let bound = n as i64;
    let mut done = 0;
    while done < members.len() {
        let end = members.len();
        for m in done..end {
            for k in -bound..=bound {
                let p = members[m].power(k);
                push(p, &mut members)?;
            }
        }
        for i in 0..end {
            for j in 0..end {
                if i < done && j < done {
                    continue;
                }
                let (a, b) = (&members[i], &members[j]);
                let p = a.then(b).then(b);
                let q = (law == Law::C).then(|| a.then(a).then(b));
                push(p, &mut members)?;
                if let Some(q) = q {
                    push(q, &mut members)?;
                }
            }
        }
        done = end;
    }
    PermSet::from_perms(n, members)
}

/// Rebuilds a loop with identity `0` from a sharply transitive set that
/// contains `I`, then checks the requested law: RC for [`Law::Lcrc`] (the
/// set is a right representation) and C for [`Law::C`].
pub fn table_from_right_representation(set: &PermSet, law: Law) -> Result<CayleyTable> {
    let n = set.order();
    if set.len() != n {
        return Err(Error::NotSharplyTransitive(format!(
            "closure has {} members, expected {n}",
            set.len()
        )));
    }
    if !set.is_sharply_transitive() {
        return Err(Error::NotSharplyTransitive(
            "some pair of points is joined by two members".into(),
        ));
    }
    let mut by_image: Vec<Option<&Permutation>> = vec![None; n];
    for p in set {
        by_image[p.apply(0)] = Some(p);
    }
    let columns: Vec<&Permutation> = by_image
        .into_iter()
        .map(|p| p.expect("sharply transitive"))
        .collect();
    let table = CayleyTable::from_fn(n, |y, x| columns[x].apply(y))?;
    if table.identity() != Some(0) || !table.is_quasigroup() {
        return Err(Error::InternalInconsistency(
            "rebuilt table is not a loop with identity 0".into(),
        ));
    }
    let holds = match law {
        Law::Lcrc => properties::is_rc(&table)?.holds,
        Law::C => properties::is_c(&table)?.holds,
    };
    if !holds {
        return Err(Error::LawViolation(law.to_string()));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> CayleyTable {
        CayleyTable::from_fn(n, |x, y| (x + y) % n).unwrap()
    }

    #[test]
    fn c2_right_representation() {
        let r = right_representation(&cyclic(2)).unwrap();
        let expected = PermSet::from_perms(
            2,
            [
                Permutation::identity(2),
                Permutation::parse_cycles("(0 1)", 2).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn groups_are_closed() {
        let t = cyclic(7);
        for side in Side::BOTH {
            assert!(check_closure_lcrc(&t, side).unwrap());
            assert!(check_closure_c(&t, side).unwrap());
            assert!(closure_c(&t, side).unwrap().holds);
            assert_eq!(
                check_power_closure(&t, side, -6..=6).unwrap(),
                PowerClosure::Holds
            );
        }
    }

    #[test]
    fn generate_c2() {
        let t =
            generate_from_generators(&[Permutation::parse_cycles("(0 1)", 2).unwrap()], 2, Law::C)
                .unwrap();
        assert_eq!(t, cyclic(2));
    }

    #[test]
    fn generate_overflow() {
        // S3 acting on 3 points cannot be a right representation of order 3
        let gens = [
            Permutation::parse_cycles("(0 1)", 3).unwrap(),
            Permutation::parse_cycles("(0 1 2)", 3).unwrap(),
        ];
        assert_eq!(
            generate_from_generators(&gens, 3, Law::C),
            Err(Error::ClosureOverflow { order: 3 })
        );
    }

    #[test]
    fn generate_too_small() {
        let gens = [Permutation::parse_cycles("(0 1)", 4).unwrap()];
        assert!(matches!(
            generate_from_generators(&gens, 4, Law::C),
            Err(Error::NotSharplyTransitive(_))
        ));
    }

    #[test]
    fn generate_order_mismatch() {
        let gens = [Permutation::parse_cycles("(0 1)", 4).unwrap()];
        assert_eq!(
            generate_from_generators(&gens, 3, Law::Lcrc),
            Err(Error::OrderMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn law_parsing() {
        assert_eq!("C".parse::<Law>(), Ok(Law::C));
        assert_eq!("lcrc".parse::<Law>(), Ok(Law::Lcrc));
        assert!("lc".parse::<Law>().is_err());
    }
}
