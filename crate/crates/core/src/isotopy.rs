//! Isotopes of loops under shaped triples `(A, B, B)` and `(A, B, A)`, and
//! sampled checks that central identities survive them.
//!
//! Two samplers feed the checks. [`sample_shaped_isotopisms`] draws `A` and
//! `B` uniformly and keeps the isotopes that happen to be loops; beyond very
//! small orders almost nothing survives. [`sample_loop_isotopes`] draws only
//! loop-producing triples. For `(A, B, B)` the isotope has an identity exactly
//! when `A = R_c B` for some `c`, and for `(A, B, A)` exactly when
//! `B = L_c A`, so the directed sampler draws `B` (resp. `A`) and `c`
//! uniformly.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{Permutation, TopismTriple};
use crate::properties::{self, Verdict};
use crate::table::CayleyTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    #[serde(rename = "ABB")]
    Abb,
    #[serde(rename = "ABA")]
    Aba,
}

impl Shape {
    pub const BOTH: [Shape; 2] = [Shape::Abb, Shape::Aba];

    pub fn triple(self, a: Permutation, b: Permutation) -> Result<TopismTriple> {
        match self {
            Shape::Abb => TopismTriple::new(a, b.clone(), b),
            Shape::Aba => TopismTriple::new(a.clone(), b, a),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Abb => "ABB",
            Shape::Aba => "ABA",
        })
    }
}

impl FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "ABB" => Ok(Shape::Abb),
            "ABA" => Ok(Shape::Aba),
            other => Err(format!("unknown shape {other:?}; expected ABB or ABA")),
        }
    }
}

/// `x∘y = ((xU⁻¹)·(yV⁻¹))W`, the image of `g` under `(U, V, W)`.
pub fn apply_isotopism(g: &CayleyTable, tr: &TopismTriple) -> Result<CayleyTable> {
    if tr.order() != g.order() {
        return Err(Error::OrderMismatch {
            expected: g.order(),
            found: tr.order(),
        });
    }
    if !g.is_quasigroup() {
        return Err(Error::NotAQuasigroup);
    }
    let (ui, vi) = (tr.u.inverse(), tr.v.inverse());
    let h = CayleyTable::from_fn(g.order(), |x, y| {
        tr.w.apply(g.mul(ui.apply(x), vi.apply(y)))
    })?;
    if !h.is_quasigroup() {
        return Err(Error::InternalInconsistency(
            "isotope of a quasigroup is not a quasigroup".into(),
        ));
    }
    Ok(h)
}

/// An isotope that turned out to be a loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Keeper {
    pub triple: TopismTriple,
    pub table: CayleyTable,
}

/// Seeded Fisher–Yates shuffle of `0..n`.
pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images_unchecked(images)
}

fn trivial_keeper(g: &CayleyTable) -> Keeper {
    Keeper {
        triple: TopismTriple::identity(g.order()),
        table: g.clone(),
    }
}

/// Draws `budget` uniform pairs `(A, B)`, applies the shaped triple and keeps
/// the isotopes with an identity. The trivial keeper `(I, I, I)` comes first.
pub fn sample_shaped_isotopisms(
    g: &CayleyTable,
    shape: Shape,
    budget: usize,
    seed: u64,
) -> Result<Vec<Keeper>> {
    g.loop_identity()?;
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![trivial_keeper(g)];
    for _ in 0..budget {
        let a = random_permutation(n, &mut rng);
        let b = random_permutation(n, &mut rng);
        let triple = shape.triple(a, b)?;
        let table = apply_isotopism(g, &triple)?;
        if table.identity().is_some() {
            out.push(Keeper { triple, table });
        }
    }
    Ok(out)
}

/// Draws `budget` loop-producing shaped triples: `(R_c B, B, B)` or
/// `(A, L_c A, A)` with the free permutation and `c` uniform.
pub fn sample_loop_isotopes(
    g: &CayleyTable,
    shape: Shape,
    budget: usize,
    seed: u64,
) -> Result<Vec<Keeper>> {
    g.loop_identity()?;
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let mut out = Vec::with_capacity(budget);
    for _ in 0..budget {
        let free = random_permutation(n, &mut rng);
        let c = rng.gen_range(0..n);
        let triple = match shape {
            Shape::Abb => shape.triple(g.right_translation(c)?.then(&free), free)?,
            Shape::Aba => {
                let b = g.left_translation(c)?.then(&free);
                shape.triple(free, b)?
            }
        };
        let table = apply_isotopism(g, &triple)?;
        if table.identity().is_none() {
            return Err(Error::InternalInconsistency(format!(
                "directed {shape} triple produced a non-loop isotope"
            )));
        }
        out.push(Keeper { triple, table });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub triple: TopismTriple,
    pub isotope: String,
    pub property: String,
    pub expected: bool,
    pub found: bool,
    pub witness: Option<Vec<usize>>,
}

/// Structured outcome of a sampled invariance check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Findings {
    pub theorem: String,
    pub source: String,
    pub shape: Shape,
    pub budget: usize,
    pub seed: u64,
    /// Loop isotopes examined: the trivial one, uniform survivors and
    /// directed samples.
    pub keepers: usize,
    pub uniform_keepers: usize,
    pub directed_keepers: usize,
    /// Keepers skipped because they fail the hypothesis on the isotope.
    pub hypothesis_filtered: usize,
    /// The source loop fails the hypothesis, so nothing was checked.
    pub vacuous: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl Findings {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn keepers(
    g: &CayleyTable,
    shape: Shape,
    budget: usize,
    seed: u64,
) -> Result<(Vec<Keeper>, usize)> {
    let mut all = sample_shaped_isotopisms(g, shape, budget, seed)?;
    let uniform = all.len() - 1;
    all.extend(sample_loop_isotopes(g, shape, budget, seed)?);
    Ok((all, uniform))
}

struct Run {
    findings: Findings,
}

impl Run {
    fn new(theorem: &str, g: &CayleyTable, shape: Shape, budget: usize, seed: u64) -> Self {
        Run {
            findings: Findings {
                theorem: theorem.to_string(),
                source: g.digest(),
                shape,
                budget,
                seed,
                keepers: 0,
                uniform_keepers: 0,
                directed_keepers: 0,
                hypothesis_filtered: 0,
                vacuous: false,
                counterexamples: Vec::new(),
            },
        }
    }

    fn vacuous(mut self) -> Findings {
        self.findings.vacuous = true;
        self.findings
    }

    /// `hypothesis` filters keepers; `check` returns `(expected, verdict)`.
    fn run(
        mut self,
        g: &CayleyTable,
        property: &str,
        hypothesis: impl Fn(&CayleyTable) -> Result<bool>,
        check: impl Fn(&CayleyTable) -> Result<(bool, Verdict)>,
    ) -> Result<Findings> {
        let f = &mut self.findings;
        let (all, uniform) = keepers(g, f.shape, f.budget, f.seed)?;
        f.keepers = all.len();
        f.uniform_keepers = uniform;
        f.directed_keepers = all.len() - 1 - uniform;
        for k in all {
            if !hypothesis(&k.table)? {
                f.hypothesis_filtered += 1;
                continue;
            }
            let (expected, verdict) = check(&k.table)?;
            if verdict.holds != expected {
                f.counterexamples.push(Counterexample {
                    triple: k.triple,
                    isotope: k.table.to_text(),
                    property: property.to_string(),
                    expected,
                    found: verdict.holds,
                    witness: verdict.witness,
                });
            }
        }
        Ok(self.findings)
    }
}

/// `(A, B, B)` keepers preserve LC; `(A, B, A)` keepers preserve RC.
pub fn verify_iso_invariance_lcrc(
    g: &CayleyTable,
    shape: Shape,
    budget: usize,
    seed: u64,
) -> Result<Findings> {
    let (property, predicate): (&str, fn(&CayleyTable) -> Result<Verdict>) = match shape {
        Shape::Abb => ("LC", properties::is_lc),
        Shape::Aba => ("RC", properties::is_rc),
    };
    let expected = predicate(g)?.holds;
    Run::new("iso-lcrc", g, shape, budget, seed).run(
        g,
        property,
        |_| Ok(true),
        |h| Ok((expected, predicate(h)?)),
    )
}

fn alternative_central_square(h: &CayleyTable) -> Result<bool> {
    Ok(properties::is_alternative(h)?.holds && properties::is_central_square(h)?.holds)
}

/// From a central-square C-loop, every alternative central-square keeper is a
/// C-loop.
pub fn verify_iso_c(g: &CayleyTable, shape: Shape, budget: usize, seed: u64) -> Result<Findings> {
    let run = Run::new("iso-c", g, shape, budget, seed);
    if !(properties::is_c(g)?.holds && properties::is_central_square(g)?.holds) {
        return Ok(run.vacuous());
    }
    run.run(g, "C", alternative_central_square, |h| {
        Ok((true, properties::is_c(h)?))
    })
}

/// From a commutative loop, every commutative keeper is a C-loop exactly when
/// the source is.
pub fn verify_iso_cc(g: &CayleyTable, shape: Shape, budget: usize, seed: u64) -> Result<Findings> {
    let run = Run::new("iso-cc", g, shape, budget, seed);
    if !properties::is_commutative(g)?.holds {
        return Ok(run.vacuous());
    }
    let expected = properties::is_c(g)?.holds;
    run.run(
        g,
        "C",
        |h| Ok(properties::is_commutative(h)?.holds),
        |h| Ok((expected, properties::is_c(h)?)),
    )
}

/// [`verify_iso_c`] over every central-square fixture of the catalog.
pub fn verify_central_square_fixtures(
    shape: Shape,
    budget: usize,
    seed: u64,
) -> Result<Vec<(&'static str, Findings)>> {
    crate::catalog::central_square_fixtures()
        .into_iter()
        .map(|(name, g)| {
            let mut f = verify_iso_c(&g, shape, budget, seed)?;
            f.theorem = format!("central-square:{name}");
            Ok((name, f))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identity_triple_is_noop() {
        let g = catalog::c12();
        assert_eq!(apply_isotopism(&g, &TopismTriple::identity(12)).unwrap(), g);
    }

    #[test]
    fn isomorphic_copy_relocates_identity() {
        let g = catalog::quaternion();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_permutation(8, &mut rng);
        let h = apply_isotopism(
            &g,
            &TopismTriple::new(a.clone(), a.clone(), a.clone()).unwrap(),
        )
        .unwrap();
        assert_eq!(h.identity(), Some(a.apply(0)));
    }

    #[test]
    fn zero_budget_keeps_only_trivial() {
        let g = catalog::c12();
        let k = sample_shaped_isotopisms(&g, Shape::Abb, 0, 1).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].triple, TopismTriple::identity(12));
        let f = verify_iso_invariance_lcrc(&g, Shape::Aba, 0, 1).unwrap();
        assert_eq!(f.keepers, 1);
        assert!(f.is_clean());
    }

    #[test]
    fn sampler_is_reproducible() {
        let g = catalog::cyclic(4).unwrap();
        let a = sample_shaped_isotopisms(&g, Shape::Abb, 200, 7).unwrap();
        let b = sample_shaped_isotopisms(&g, Shape::Abb, 200, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.len() > 1);
    }

    #[test]
    fn directed_samples_are_loops() {
        let g = catalog::c12();
        for shape in Shape::BOTH {
            for k in sample_loop_isotopes(&g, shape, 50, 11).unwrap() {
                assert!(k.table.is_loop());
            }
        }
    }

    #[test]
    fn shape_parsing() {
        assert_eq!("abb".parse::<Shape>(), Ok(Shape::Abb));
        assert_eq!("ABA".parse::<Shape>(), Ok(Shape::Aba));
        assert!("AAB".parse::<Shape>().is_err());
    }
}
