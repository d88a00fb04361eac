//! Autotopisms and the regular-bijection groups Λ, P and Φ of a loop.
//!
//! Substituting the identity `e` into the defining equations pins every
//! regular bijection to a translation:
//!
//! * `(U, I, U)` autotopism, `x = e`: `U = L_{eU}`
//! * `(I, V, V)` autotopism, `y = e`: `V = R_{eV}`
//! * `xU·y = x·yV`, `y = e` gives `U = R_{eV}`, `x = e` gives `V = L_{eU}`
//!
//! so Λ, P and Φ are found by scanning `n` candidates instead of `n!`.
//! For a general autotopism `(U, V, W)` with `a = eU`, `b = eV` the same
//! substitutions give `W = U R_b` and `V = W L_a⁻¹`, so a triple is fixed by
//! `U` and `b`; [`enumerate_autotopisms`] backtracks over `U` only.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{PermSet, Permutation, TopismTriple};
use crate::properties::{self, scan1, scan2, Verdict};
use crate::table::CayleyTable;

/// Default order cap for [`enumerate_autotopisms`].
pub const DEFAULT_AUTOTOPISM_CAP: usize = 10;

/// A μ-regular bijection together with its adjoint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MuPair {
    pub u: Permutation,
    pub adjoint: Permutation,
}

fn check_order(t: &CayleyTable, order: usize) -> Result<()> {
    if order != t.order() {
        return Err(Error::OrderMismatch {
            expected: t.order(),
            found: order,
        });
    }
    Ok(())
}

/// `xU·yV = (x·y)W` for all `x, y`; witness `(x, y)`.
pub fn is_autotopism(t: &CayleyTable, tr: &TopismTriple) -> Result<Verdict> {
    t.loop_identity()?;
    check_order(t, tr.order())?;
    Ok(scan2(t.order(), |x, y| {
        t.mul(tr.u.apply(x), tr.v.apply(y)) == tr.w.apply(t.mul(x, y))
    }))
}

/// `xU·y = x·yV` for all `x, y`; witness `(x, y)`.
pub fn is_mu_pair(t: &CayleyTable, u: &Permutation, v: &Permutation) -> Result<Verdict> {
    t.loop_identity()?;
    check_order(t, u.order())?;
    check_order(t, v.order())?;
    Ok(scan2(t.order(), |x, y| {
        t.mul(u.apply(x), y) == t.mul(x, v.apply(y))
    }))
}

/// Λ(L): all `U` with `(U, I, U)` an autotopism.
pub fn lambda_regular_set(t: &CayleyTable) -> Result<PermSet> {
    t.loop_identity()?;
    let n = t.order();
    let id = Permutation::identity(n);
    let mut set = PermSet::new(n);
    for a in 0..n {
        let la = t.left_translation(a)?;
        let tr = TopismTriple::new(la.clone(), id.clone(), la.clone())?;
        if is_autotopism(t, &tr)?.holds {
            set.insert(la)?;
        }
    }
    Ok(set)
}

/// P(L): all `V` with `(I, V, V)` an autotopism.
pub fn rho_regular_set(t: &CayleyTable) -> Result<PermSet> {
    t.loop_identity()?;
    let n = t.order();
    let id = Permutation::identity(n);
    let mut set = PermSet::new(n);
    for a in 0..n {
        let ra = t.right_translation(a)?;
        let tr = TopismTriple::new(id.clone(), ra.clone(), ra.clone())?;
        if is_autotopism(t, &tr)?.holds {
            set.insert(ra)?;
        }
    }
    Ok(set)
}

/// Φ(L) with adjoints: every `(U, U')` with `xU·y = x·yU'`, sorted.
pub fn mu_regular_set(t: &CayleyTable) -> Result<Vec<MuPair>> {
    t.loop_identity()?;
    let mut out = Vec::new();
    for b in 0..t.order() {
        let u = t.right_translation(b)?;
        let adjoint = t.left_translation(b)?;
        if is_mu_pair(t, &u, &adjoint)?.holds {
            out.push(MuPair { u, adjoint });
        }
    }
    out.sort();
    Ok(out)
}

/// First components of Φ(L).
pub fn phi(pairs: &[MuPair], order: usize) -> Result<PermSet> {
    PermSet::from_perms(order, pairs.iter().map(|p| p.u.clone()))
}

/// Φ*(L): the adjoint projection of Φ(L).
pub fn phi_star(pairs: &[MuPair], order: usize) -> Result<PermSet> {
    PermSet::from_perms(order, pairs.iter().map(|p| p.adjoint.clone()))
}

fn left_square(t: &CayleyTable, x: usize) -> Result<Permutation> {
    let l = t.left_translation(x)?;
    Ok(l.then(&l))
}

fn right_square(t: &CayleyTable, x: usize) -> Result<Permutation> {
    let r = t.right_translation(x)?;
    Ok(r.then(&r))
}

/// `(L_x², I, L_x²)` is an autotopism for every `x`; witness `(x)`.
pub fn left_square_autotopisms(t: &CayleyTable) -> Result<Verdict> {
    let id = Permutation::identity(t.order());
    let mut first_err = None;
    let v = scan1(t.order(), |x| {
        let run = || -> Result<bool> {
            let l2 = left_square(t, x)?;
            Ok(is_autotopism(t, &TopismTriple::new(l2.clone(), id.clone(), l2)?)?.holds)
        };
        run().unwrap_or_else(|e| {
            first_err.get_or_insert(e);
            false
        })
    });
    first_err.map_or(Ok(v), Err)
}

/// `(I, R_x², R_x²)` is an autotopism for every `x`; witness `(x)`.
pub fn right_square_autotopisms(t: &CayleyTable) -> Result<Verdict> {
    let id = Permutation::identity(t.order());
    let mut first_err = None;
    let v = scan1(t.order(), |x| {
        let run = || -> Result<bool> {
            let r2 = right_square(t, x)?;
            Ok(is_autotopism(t, &TopismTriple::new(id.clone(), r2.clone(), r2)?)?.holds)
        };
        run().unwrap_or_else(|e| {
            first_err.get_or_insert(e);
            false
        })
    });
    first_err.map_or(Ok(v), Err)
}

/// `L_x² ∈ Λ(L)` for every `x`; witness `(x)`.
pub fn left_squares_lambda_regular(t: &CayleyTable) -> Result<Verdict> {
    let lambda = lambda_regular_set(t)?;
    let squares = (0..t.order())
        .map(|x| left_square(t, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(scan1(t.order(), |x| lambda.contains(&squares[x])))
}

/// `R_x² ∈ P(L)` for every `x`; witness `(x)`.
pub fn right_squares_rho_regular(t: &CayleyTable) -> Result<Verdict> {
    let rho = rho_regular_set(t)?;
    let squares = (0..t.order())
        .map(|x| right_square(t, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(scan1(t.order(), |x| rho.contains(&squares[x])))
}

/// `(R_x², L_x²)` is a μ-regular pair for every `x`; witness `(x)`.
pub fn right_squares_mu_regular(t: &CayleyTable) -> Result<Verdict> {
    let pairs = mu_regular_set(t)?;
    let wanted = (0..t.order())
        .map(|x| {
            Ok(MuPair {
                u: right_square(t, x)?,
                adjoint: left_square(t, x)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(scan1(t.order(), |x| {
        pairs.binary_search(&wanted[x]).is_ok()
    }))
}

fn agreement(name: &str, sides: &[(&str, bool)]) -> Result<bool> {
    let first = sides[0].1;
    if sides.iter().all(|&(_, v)| v == first) {
        Ok(true)
    } else {
        let detail: Vec<String> = sides.iter().map(|(k, v)| format!("{k}={v}")).collect();
        Err(Error::InternalInconsistency(format!(
            "{name}: {}",
            detail.join(", ")
        )))
    }
}

/// LC identity, `(L_x², I, L_x²)` autotopisms and `L_x² ∈ Λ` all agree.
///
/// Returns `Ok(true)` on agreement; disagreement is reported as
/// [`Error::InternalInconsistency`] naming each side's value.
pub fn check_theorem_lc_auto(t: &CayleyTable) -> Result<bool> {
    agreement(
        "LC vs left-square autotopisms",
        &[
            ("LC", properties::is_lc(t)?.holds),
            ("autotopisms", left_square_autotopisms(t)?.holds),
            ("lambda-regular", left_squares_lambda_regular(t)?.holds),
        ],
    )
}

/// RC identity, `(I, R_x², R_x²)` autotopisms and `R_x² ∈ P` all agree.
pub fn check_theorem_rc_auto(t: &CayleyTable) -> Result<bool> {
    agreement(
        "RC vs right-square autotopisms",
        &[
            ("RC", properties::is_rc(t)?.holds),
            ("autotopisms", right_square_autotopisms(t)?.holds),
            ("rho-regular", right_squares_rho_regular(t)?.holds),
        ],
    )
}

/// C identity agrees with `(R_x², L_x²) ∈ Φ` for all `x`.
pub fn check_theorem_c_mu(t: &CayleyTable) -> Result<bool> {
    agreement(
        "C vs mu-regular squares",
        &[
            ("C", properties::is_c(t)?.holds),
            ("mu-regular", right_squares_mu_regular(t)?.holds),
        ],
    )
}

/// The autotopism group of a loop, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutotopismGroup {
    pub loop_digest: String,
    pub triples: Vec<TopismTriple>,
}

impl AutotopismGroup {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, tr: &TopismTriple) -> bool {
        self.triples.binary_search(tr).is_ok()
    }

    /// Identity present, closed under composition and inverse.
    pub fn is_group(&self) -> bool {
        let Some(first) = self.triples.first() else {
            return false;
        };
        if !self.contains(&TopismTriple::identity(first.order())) {
            return false;
        }
        self.triples.iter().all(|a| {
            self.contains(&a.inverse())
                && self
                    .triples
                    .iter()
                    .all(|b| a.compose(b).is_ok_and(|c| self.contains(&c)))
        })
    }
}

/// All autotopisms of a loop of order at most `cap`.
pub fn enumerate_autotopisms(t: &CayleyTable, cap: usize) -> Result<AutotopismGroup> {
    let e = t.loop_identity()?;
    let n = t.order();
    if n > cap {
        return Err(Error::OrderCapExceeded { order: n, max: cap });
    }
    let mut triples = Vec::new();
    for b in 0..n {
        for a in 0..n {
            let mut search = USearch {
                t,
                b,
                a,
                u: vec![None; n],
                used: vec![false; n],
            };
            search.u[e] = Some(a);
            search.used[a] = true;
            search.run(&mut triples)?;
        }
    }
    triples.sort();
    let group = AutotopismGroup {
        loop_digest: t.digest(),
        triples,
    };
    if !group.is_group() {
        return Err(Error::InternalInconsistency(
            "enumerated autotopisms do not form a group".into(),
        ));
    }
    Ok(group)
}

/// Backtracking over the images of `U` with `eU = a`, `eV = b` fixed.
///
/// `yV = a \ (yU·b)` and `xW = xU·b`, so every assigned pair `(x, y)` forces
/// `(xy)U = (xU·yV) / b`.
struct USearch<'a> {
    t: &'a CayleyTable,
    a: usize,
    b: usize,
    u: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl USearch<'_> {
    fn v_of(&self, yu: usize) -> usize {
        self.t.ldiv(self.a, self.t.mul(yu, self.b))
    }

    /// Extends forced images to a fixpoint; false on contradiction.
    fn propagate(&mut self, trail: &mut Vec<usize>) -> bool {
        let n = self.t.order();
        loop {
            let mut changed = false;
            for x in 0..n {
                let Some(xu) = self.u[x] else { continue };
                for y in 0..n {
                    let Some(yu) = self.u[y] else { continue };
                    let forced = self.t.rdiv(self.t.mul(xu, self.v_of(yu)), self.b);
                    let p = self.t.mul(x, y);
                    match self.u[p] {
                        Some(pu) if pu != forced => return false,
                        Some(_) => {}
                        None => {
                            if self.used[forced] {
                                return false;
                            }
                            self.u[p] = Some(forced);
                            self.used[forced] = true;
                            trail.push(p);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn undo(&mut self, trail: &[usize]) {
        for &p in trail {
            if let Some(img) = self.u[p].take() {
                self.used[img] = false;
            }
        }
    }

    fn run(&mut self, out: &mut Vec<TopismTriple>) -> Result<()> {
        let mut trail = Vec::new();
        if self.propagate(&mut trail) {
            self.branch(out)?;
        }
        self.undo(&trail);
        Ok(())
    }

    fn branch(&mut self, out: &mut Vec<TopismTriple>) -> Result<()> {
        let n = self.t.order();
        let Some(x) = (0..n).find(|&x| self.u[x].is_none()) else {
            return self.emit(out);
        };
        for img in 0..n {
            if self.used[img] {
                continue;
            }
            self.u[x] = Some(img);
            self.used[img] = true;
            let mut trail = vec![x];
            if self.propagate(&mut trail) {
                self.branch(out)?;
            }
            self.undo(&trail);
        }
        Ok(())
    }

    fn emit(&self, out: &mut Vec<TopismTriple>) -> Result<()> {
        let t = self.t;
        let u: Vec<usize> = self.u.iter().map(|x| x.expect("complete")).collect();
        let v: Vec<usize> = u.iter().map(|&yu| self.v_of(yu)).collect();
        let w: Vec<usize> = u.iter().map(|&xu| t.mul(xu, self.b)).collect();
        let tr = TopismTriple::new(
            Permutation::from_images(u)?,
            Permutation::from_images(v)?,
            Permutation::from_images(w)?,
        )?;
        if is_autotopism(t, &tr)?.holds {
            out.push(tr);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> CayleyTable {
        CayleyTable::from_fn(n, |x, y| (x + y) % n).unwrap()
    }

    #[test]
    fn identity_triple_is_autotopism() {
        let t = cyclic(5);
        assert!(is_autotopism(&t, &TopismTriple::identity(5)).unwrap().holds);
        assert_eq!(
            is_autotopism(&t, &TopismTriple::identity(4)),
            Err(Error::OrderMismatch {
                expected: 5,
                found: 4
            })
        );
    }

    #[test]
    fn groups_have_full_regular_sets() {
        let t = cyclic(6);
        assert_eq!(lambda_regular_set(&t).unwrap().len(), 6);
        assert_eq!(rho_regular_set(&t).unwrap().len(), 6);
        let mu = mu_regular_set(&t).unwrap();
        assert_eq!(mu.len(), 6);
        for b in 0..6 {
            let pair = MuPair {
                u: t.right_translation(b).unwrap(),
                adjoint: t.left_translation(b).unwrap(),
            };
            assert!(mu.contains(&pair));
        }
        assert!(check_theorem_lc_auto(&t).unwrap());
        assert!(check_theorem_rc_auto(&t).unwrap());
        assert!(check_theorem_c_mu(&t).unwrap());
    }

    #[test]
    fn cyclic_two_has_four_autotopisms() {
        // |Atp(G)| = |G|²·|Aut(G)| for a group
        let g = enumerate_autotopisms(&cyclic(2), DEFAULT_AUTOTOPISM_CAP).unwrap();
        assert_eq!(g.len(), 4);
        assert!(g.is_group());
        let g = enumerate_autotopisms(&cyclic(5), DEFAULT_AUTOTOPISM_CAP).unwrap();
        assert_eq!(g.len(), 25 * 4);
        let trivial = enumerate_autotopisms(&cyclic(1), DEFAULT_AUTOTOPISM_CAP).unwrap();
        assert_eq!(trivial.len(), 1);
    }

    #[test]
    fn autotopism_cap() {
        assert_eq!(
            enumerate_autotopisms(&cyclic(11), DEFAULT_AUTOTOPISM_CAP),
            Err(Error::OrderCapExceeded { order: 11, max: 10 })
        );
    }
}
