//! Brute-force oracles. These work on raw row vectors and enumerate whole
//! symmetric groups, sharing no code path with the library checks they are
//! compared against.

#![allow(dead_code)]

use centra::{CayleyTable, Permutation, TopismTriple};
use itertools::Itertools;

pub type Rows = Vec<Vec<usize>>;

pub fn rows(t: &CayleyTable) -> Rows {
    (0..t.order())
        .map(|x| (0..t.order()).map(|y| t.mul(x, y)).collect())
        .collect()
}

pub fn identity_of(r: &Rows) -> usize {
    let n = r.len();
    (0..n)
        .find(|&e| (0..n).all(|x| r[e][x] == x && r[x][e] == x))
        .expect("oracle called on a loop")
}

/// Naive `∀x,y,z` check of `lhs(x,y,z) == rhs(x,y,z)`.
pub fn forall3(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))))
}

pub fn oracle_lc(r: &Rows) -> bool {
    forall3(r.len(), |x, y, z| {
        r[r[x][x]][r[y][z]] == r[r[x][r[x][y]]][z]
    })
}

pub fn oracle_rc(r: &Rows) -> bool {
    forall3(r.len(), |x, y, z| {
        r[r[z][y]][r[x][x]] == r[z][r[r[y][x]][x]]
    })
}

pub fn oracle_c(r: &Rows) -> bool {
    forall3(r.len(), |x, y, z| {
        r[x][r[y][r[y][z]]] == r[r[r[x][y]][y]][z]
    })
}

pub fn oracle_associative(r: &Rows) -> bool {
    forall3(r.len(), |x, y, z| r[r[x][y]][z] == r[x][r[y][z]])
}

pub fn oracle_commutative(r: &Rows) -> bool {
    let n = r.len();
    (0..n).all(|x| (0..n).all(|y| r[x][y] == r[y][x]))
}

pub fn oracle_left_alternative(r: &Rows) -> bool {
    let n = r.len();
    (0..n).all(|x| (0..n).all(|y| r[x][r[x][y]] == r[r[x][x]][y]))
}

pub fn oracle_right_alternative(r: &Rows) -> bool {
    let n = r.len();
    (0..n).all(|x| (0..n).all(|y| r[r[y][x]][x] == r[y][r[x][x]]))
}

/// LIP by searching every candidate left inverse.
pub fn oracle_lip(r: &Rows) -> bool {
    let n = r.len();
    (0..n).all(|x| (0..n).any(|a| (0..n).all(|y| r[a][r[x][y]] == y)))
}

pub fn oracle_rip(r: &Rows) -> bool {
    let n = r.len();
    (0..n).all(|x| (0..n).any(|a| (0..n).all(|y| r[r[y][x]][a] == y)))
}

pub fn oracle_center(r: &Rows) -> Vec<usize> {
    let n = r.len();
    (0..n)
        .filter(|&a| {
            (0..n).all(|x| r[a][x] == r[x][a])
                && forall3(n, |x, y, _| {
                    r[a][r[x][y]] == r[r[a][x]][y]
                        && r[x][r[a][y]] == r[r[x][a]][y]
                        && r[x][r[y][a]] == r[r[x][y]][a]
                })
        })
        .collect()
}

pub fn oracle_central_square(r: &Rows) -> bool {
    let z = oracle_center(r);
    (0..r.len()).all(|x| z.contains(&r[x][x]))
}

/// Every permutation of `0..n` as an image array.
pub fn symmetric_group(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

pub fn perm(images: &[usize]) -> Permutation {
    Permutation::from_images(images.to_vec()).unwrap()
}

fn is_atp(r: &Rows, u: &[usize], v: &[usize], w: &[usize]) -> bool {
    let n = r.len();
    (0..n).all(|x| (0..n).all(|y| r[u[x]][v[y]] == w[r[x][y]]))
}

/// Filters all of S_n³ down to the autotopisms with a full pair check per
/// triple. Feasible up to order 4 (13,824 triples).
pub fn brute_autotopisms(t: &CayleyTable) -> Vec<TopismTriple> {
    let r = rows(t);
    let n = r.len();
    let sn = symmetric_group(n);
    let mut out = Vec::new();
    for u in &sn {
        for v in &sn {
            for w in &sn {
                if is_atp(&r, u, v, w) {
                    out.push(TopismTriple::new(perm(u), perm(v), perm(w)).unwrap());
                }
            }
        }
    }
    out.sort();
    out
}

/// Λ by definition: every `U ∈ S_n` with `(U, I, U)` an autotopism.
pub fn brute_lambda(t: &CayleyTable) -> Vec<Permutation> {
    let r = rows(t);
    let id: Vec<usize> = (0..r.len()).collect();
    symmetric_group(r.len())
        .into_iter()
        .filter(|u| is_atp(&r, u, &id, u))
        .map(|u| perm(&u))
        .collect()
}

/// P by definition: every `V ∈ S_n` with `(I, V, V)` an autotopism.
pub fn brute_rho(t: &CayleyTable) -> Vec<Permutation> {
    let r = rows(t);
    let id: Vec<usize> = (0..r.len()).collect();
    symmetric_group(r.len())
        .into_iter()
        .filter(|v| is_atp(&r, &id, v, v))
        .map(|v| perm(&v))
        .collect()
}

/// Φ by definition: every `(U, V) ∈ S_n²` with `xU·y = x·yV`.
pub fn brute_mu(t: &CayleyTable) -> Vec<(Permutation, Permutation)> {
    let r = rows(t);
    let n = r.len();
    let sn = symmetric_group(n);
    let mut out = Vec::new();
    for u in &sn {
        for v in &sn {
            if (0..n).all(|x| (0..n).all(|y| r[u[x]][y] == r[x][v[y]])) {
                out.push((perm(u), perm(v)));
            }
        }
    }
    out.sort();
    out
}

/// The lexicographically first non-LC loop of order 5 among normalized
/// loops, found by exhaustive enumeration.
pub fn non_lc_order5() -> CayleyTable {
    CayleyTable::from_rows(vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 3, 4, 0, 1],
        vec![3, 4, 1, 2, 0],
        vec![4, 2, 0, 1, 3],
    ])
    .unwrap()
}

/// A commutative loop of order 6 that is not a C-loop (no such loop exists
/// at order 5).
pub fn commutative_non_c_order6() -> CayleyTable {
    CayleyTable::from_rows(vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 0, 3, 2, 5, 4],
        vec![2, 3, 4, 5, 0, 1],
        vec![3, 2, 5, 4, 1, 0],
        vec![4, 5, 0, 1, 3, 2],
        vec![5, 4, 1, 0, 2, 3],
    ])
    .unwrap()
}

pub const ALPHA: &str = "(0 10 1 11 2 9)(3 7 4 8 5 6)";
pub const BETA: &str = "(0 3)(1 4)(2 5)(6 10)(7 11)(8 9)";
pub const GAMMA: &str = "(0 7 2 6 1 8)(3 10 5 9 4 11)";

pub fn construction_generators() -> Vec<Permutation> {
    [ALPHA, BETA, GAMMA]
        .iter()
        .map(|s| Permutation::parse_cycles(s, 12).unwrap())
        .collect()
}
