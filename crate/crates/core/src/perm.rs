//! Permutations of `{0..n-1}` acting on the right.
//!
//! A permutation is stored as its image array, `images[i] = i·σ`. Products
//! read left to right: `x(ab) = (xa)b`, so `a.compose(&b)` applies `a` first.
//! This is the convention under which identities such as
//! `L_{x·xy} = L_y L_x²` can be transcribed verbatim.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::MAX_ORDER;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(order: usize) -> Self {
        Permutation {
            images: (0..order).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_ORDER {
            return Err(Error::OrderCapExceeded {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::ElementOutOfRange {
                    element: img,
                    order: n,
                });
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::MalformedCycle(format!(
                    "image {img} appears twice; not a bijection"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// Internal constructor for image arrays already known to be bijective.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                expected: self.order(),
                found: other.order(),
            });
        }
        Ok(self.then(other))
    }

    /// Composition for operands whose orders are already known to agree.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.order(), other.order());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.order()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `k`-fold product; negative `k` uses the inverse, zero gives the identity.
    pub fn power(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = Permutation::identity(self.order());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            exp >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses cycle notation such as `(0 10 1 11 2 9)(3 7 4 8 5 6)`.
    ///
    /// Points may be separated by whitespace, commas or `~`. Omitted points
    /// are fixed; `()` or an empty string is the identity.
    pub fn parse_cycles(text: &str, order: usize) -> Result<Permutation> {
        if order > MAX_ORDER {
            return Err(Error::OrderCapExceeded {
                order,
                max: MAX_ORDER,
            });
        }
        let mut images: Vec<usize> = (0..order).collect();
        let mut touched = vec![false; order];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::MalformedCycle(format!("expected '(' at {rest:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::MalformedCycle("unterminated cycle".into()))?;
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',' || c == '~')
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::MalformedCycle(format!("bad point {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            for &p in &cycle {
                if p >= order {
                    return Err(Error::MalformedCycle(format!(
                        "point {p} out of range for order {order}"
                    )));
                }
                if std::mem::replace(&mut touched[p], true) {
                    return Err(Error::MalformedCycle(format!("point {p} repeated")));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            let pts: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
            out.push_str(&pts.join(" "));
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.order(), self.format_cycles())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.format_cycles())
    }
}

/// An ordered triple `(U, V, W)` of permutations of equal order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TopismTriple {
    pub u: Permutation,
    pub v: Permutation,
    pub w: Permutation,
}

impl TopismTriple {
    pub fn new(u: Permutation, v: Permutation, w: Permutation) -> Result<Self> {
        for p in [&v, &w] {
            if p.order() != u.order() {
                return Err(Error::OrderMismatch {
                    expected: u.order(),
                    found: p.order(),
                });
            }
        }
        Ok(TopismTriple { u, v, w })
    }

    pub fn identity(order: usize) -> Self {
        let i = Permutation::identity(order);
        TopismTriple {
            u: i.clone(),
            v: i.clone(),
            w: i,
        }
    }

    pub fn order(&self) -> usize {
        self.u.order()
    }

    /// Componentwise `self` then `other`.
    pub fn compose(&self, other: &TopismTriple) -> Result<TopismTriple> {
        Ok(TopismTriple {
            u: self.u.compose(&other.u)?,
            v: self.v.compose(&other.v)?,
            w: self.w.compose(&other.w)?,
        })
    }

    pub fn inverse(&self) -> TopismTriple {
        TopismTriple {
            u: self.u.inverse(),
            v: self.v.inverse(),
            w: self.w.inverse(),
        }
    }
}

/// A finite set of permutations of one common order, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermSet {
    order: usize,
    members: BTreeSet<Permutation>,
}

impl PermSet {
    pub fn new(order: usize) -> Self {
        PermSet {
            order,
            members: BTreeSet::new(),
        }
    }

    pub fn from_perms<I: IntoIterator<Item = Permutation>>(order: usize, perms: I) -> Result<Self> {
        let mut set = PermSet::new(order);
        for p in perms {
            set.insert(p)?;
        }
        Ok(set)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Returns whether the permutation was newly added.
    pub fn insert(&mut self, p: Permutation) -> Result<bool> {
        if p.order() != self.order {
            return Err(Error::OrderMismatch {
                expected: self.order,
                found: p.order(),
            });
        }
        Ok(self.members.insert(p))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.contains(p)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.members.iter()
    }

    /// Contains the identity and is closed under products and inverses.
    pub fn is_group(&self) -> bool {
        if !self.contains(&Permutation::identity(self.order)) {
            return false;
        }
        self.iter()
            .all(|a| self.contains(&a.inverse()) && self.iter().all(|b| self.contains(&a.then(b))))
    }

    /// For every pair of points `(a, b)` exactly one member maps `a` to `b`.
    pub fn is_sharply_transitive(&self) -> bool {
        let n = self.order;
        if self.len() != n {
            return false;
        }
        (0..n).all(|a| {
            let mut hit = vec![false; n];
            self.iter()
                .all(|p| !std::mem::replace(&mut hit[p.apply(a)], true))
        })
    }
}

impl<'a> IntoIterator for &'a PermSet {
    type Item = &'a Permutation;
    type IntoIter = std::collections::btree_set::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
