//! Named loops and loop corpora.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::table::CayleyTable;
use crate::MAX_ORDER;

/// Largest order accepted by [`random_loops`].
pub const RANDOM_LOOP_MAX_ORDER: usize = 9;
/// Largest order accepted by [`all_loops`]; there are 9408 normalized
/// loops of order 6.
pub const EXHAUSTIVE_MAX_ORDER: usize = 6;

const C12_ROWS: [[usize; 12]; 12] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
    [1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9],
    [2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10],
    [3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8],
    [4, 5, 3, 1, 2, 0, 10, 11, 9, 7, 8, 6],
    [5, 3, 4, 2, 0, 1, 11, 9, 10, 8, 6, 7],
    [6, 7, 8, 10, 11, 9, 0, 1, 2, 5, 3, 4],
    [7, 8, 6, 11, 9, 10, 1, 2, 0, 3, 4, 5],
    [8, 6, 7, 9, 10, 11, 2, 0, 1, 4, 5, 3],
    [9, 10, 11, 8, 6, 7, 3, 4, 5, 2, 0, 1],
    [10, 11, 9, 6, 7, 8, 4, 5, 3, 0, 1, 2],
    [11, 9, 10, 7, 8, 6, 5, 3, 4, 1, 2, 0],
];

/// The non-associative C-loop of order 12 generated by
/// `R_10 = (0 10 1 11 2 9)(3 7 4 8 5 6)`, `R_3` and `R_7`.
pub fn c12() -> CayleyTable {
    CayleyTable::from_fn(12, |x, y| C12_ROWS[x][y]).expect("embedded table is valid")
}

pub fn cyclic(n: usize) -> Result<CayleyTable> {
    CayleyTable::from_fn(n, |x, y| (x + y) % n)
}

/// Componentwise product; `(i, j)` is encoded as `i·|b| + j`.
pub fn direct_product(a: &CayleyTable, b: &CayleyTable) -> Result<CayleyTable> {
    let (na, nb) = (a.order(), b.order());
    if na * nb > MAX_ORDER {
        return Err(Error::OrderCapExceeded {
            order: na * nb,
            max: MAX_ORDER,
        });
    }
    CayleyTable::from_fn(na * nb, |x, y| {
        let (xa, xb) = (x / nb, x % nb);
        let (ya, yb) = (y / nb, y % nb);
        a.mul(xa, ya) * nb + b.mul(xb, yb)
    })
}

/// Dihedral group of order `2m`: `r^a s^b` is encoded as `a + m·b`.
pub fn dihedral(m: usize) -> Result<CayleyTable> {
    if m == 0 {
        return Err(Error::OrderMismatch {
            expected: 1,
            found: 0,
        });
    }
    CayleyTable::from_fn(2 * m, |x, y| {
        let (a, b) = (x % m, x / m);
        let (c, d) = (y % m, y / m);
        let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
        rot + m * ((b + d) % 2)
    })
}

/// A unit quaternion `±1, ±i, ±j, ±k`: basis index `0..4` and sign bit.
#[derive(Clone, Copy)]
struct Unit {
    basis: usize,
    neg: bool,
}

impl Unit {
    fn index(self) -> usize {
        2 * self.basis + self.neg as usize
    }

    fn from_index(i: usize) -> Self {
        Unit {
            basis: i / 2,
            neg: i % 2 == 1,
        }
    }

    fn negate(self) -> Self {
        Unit {
            neg: !self.neg,
            ..self
        }
    }

    fn conj(self) -> Self {
        if self.basis == 0 {
            self
        } else {
            self.negate()
        }
    }

    fn mul(self, other: Unit) -> Unit {
        // basis products: 1, i, j, k
        const TABLE: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let (basis, neg) = TABLE[self.basis][other.basis];
        Unit {
            basis,
            neg: neg ^ self.neg ^ other.neg,
        }
    }
}

/// Q₈ with elements `1, −1, i, −i, j, −j, k, −k` at indices `0..8`.
pub fn quaternion() -> CayleyTable {
    CayleyTable::from_fn(8, |x, y| {
        Unit::from_index(x).mul(Unit::from_index(y)).index()
    })
    .expect("Q8 table is valid")
}

/// The Cayley loop: the 16 unit octonions `(q, 0)` and `(0, q)`, `q ∈ Q₈`,
/// under Cayley–Dickson doubling `(a,b)(c,d) = (ac − d̄b, da + bc̄)`.
/// `(q, 0)` has index `2·q` and `(0, q)` has index `2·q + 1`.
pub fn cayley_loop() -> CayleyTable {
    CayleyTable::from_fn(16, |x, y| {
        let (p, s) = (Unit::from_index(x / 2), x % 2);
        let (q, t) = (Unit::from_index(y / 2), y % 2);
        let (unit, half) = match (s, t) {
            (0, 0) => (p.mul(q), 0),
            (0, 1) => (q.mul(p), 1),
            (1, 0) => (p.mul(q.conj()), 1),
            _ => (q.conj().mul(p).negate(), 0),
        };
        2 * unit.index() + half
    })
    .expect("Cayley loop table is valid")
}

/// Fixture names accepted by [`named`].
pub const FIXTURE_NAMES: &[&str] = &["c12", "d4", "q8", "o16", "klein", "c2^3", "q8xc2xc3"];

/// Resolves a fixture name: `c12`, `d4`, `q8`, `o16`, `klein`, `c2^3`,
/// `q8xc2xc3`, `cyclic:<n>`, `dihedral:<m>`, or `product:<a>*<b>*...`.
pub fn named(spec: &str) -> Result<CayleyTable> {
    let spec = spec.trim();
    let bad = || Error::malformed(1, format!("unknown fixture {spec:?}"));
    if let Some(factors) = spec.strip_prefix("product:") {
        let mut acc: Option<CayleyTable> = None;
        for f in factors.split('*') {
            let t = named(f)?;
            acc = Some(match acc {
                None => t,
                Some(a) => direct_product(&a, &t)?,
            });
        }
        return acc.ok_or_else(bad);
    }
    if let Some(n) = spec.strip_prefix("cyclic:") {
        let n: usize = n.parse().map_err(|_| bad())?;
        return cyclic(n);
    }
    if let Some(m) = spec.strip_prefix("dihedral:") {
        let m: usize = m.parse().map_err(|_| bad())?;
        return dihedral(m);
    }
    match spec {
        "c12" => Ok(c12()),
        "d4" => dihedral(4),
        "q8" => Ok(quaternion()),
        "o16" => Ok(cayley_loop()),
        "klein" => named("product:cyclic:2*cyclic:2"),
        "c2^3" => named("product:cyclic:2*cyclic:2*cyclic:2"),
        "q8xc2xc3" => named("product:q8*cyclic:2*cyclic:3"),
        _ => Err(bad()),
    }
}

/// Central-square fixtures: D₄, Q₈, the Cayley loop, C₂×C₂, C₂³ and
/// Q₈×C₂×C₃.
pub fn central_square_fixtures() -> Vec<(&'static str, CayleyTable)> {
    ["d4", "q8", "o16", "klein", "c2^3", "q8xc2xc3"]
        .into_iter()
        .map(|name| (name, named(name).expect("built-in fixture")))
        .collect()
}

/// Groups of the catalog, used as sanity fixtures.
pub fn catalog_groups() -> Vec<(String, CayleyTable)> {
    let mut out: Vec<(String, CayleyTable)> = (1..=8)
        .map(|n| (format!("cyclic:{n}"), cyclic(n).expect("cyclic")))
        .collect();
    for name in ["d4", "q8", "klein", "c2^3", "q8xc2xc3", "dihedral:3"] {
        out.push((name.to_string(), named(name).expect("built-in fixture")));
    }
    out
}

/// Normalized Latin-square completion: row 0 and column 0 are the identity
/// pattern, remaining cells are filled row-major.
struct Completion {
    n: usize,
    cells: Vec<usize>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
}

impl Completion {
    fn new(n: usize) -> Self {
        let mut c = Completion {
            n,
            cells: vec![usize::MAX; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
        };
        for i in 0..n {
            c.place(0, i, i);
            if i > 0 {
                c.place(i, 0, i);
            }
        }
        c
    }

    fn place(&mut self, r: usize, col: usize, v: usize) {
        self.cells[r * self.n + col] = v;
        self.row_used[r] |= 1 << v;
        self.col_used[col] |= 1 << v;
    }

    fn clear(&mut self, r: usize, col: usize, v: usize) {
        self.cells[r * self.n + col] = usize::MAX;
        self.row_used[r] &= !(1 << v);
        self.col_used[col] &= !(1 << v);
    }

    fn allowed(&self, r: usize, col: usize, v: usize) -> bool {
        (self.row_used[r] | self.col_used[col]) & (1 << v) == 0
    }

    /// Position `k` indexes the `(n-1)²` free cells row-major.
    fn pos(&self, k: usize) -> (usize, usize) {
        (1 + k / (self.n - 1), 1 + k % (self.n - 1))
    }

    fn enumerate(&mut self, k: usize, out: &mut Vec<CayleyTable>) {
        let free = (self.n - 1) * (self.n - 1);
        if k == free {
            out.push(CayleyTable::from_cells(self.n, self.cells.clone()).expect("latin"));
            return;
        }
        let (r, col) = self.pos(k);
        for v in 0..self.n {
            if self.allowed(r, col, v) {
                self.place(r, col, v);
                self.enumerate(k + 1, out);
                self.clear(r, col, v);
            }
        }
    }

    fn sample(&mut self, k: usize, rng: &mut ChaCha8Rng) -> bool {
        let free = (self.n - 1) * (self.n - 1);
        if k == free {
            return true;
        }
        let (r, col) = self.pos(k);
        let mut values: Vec<usize> = (0..self.n).filter(|&v| self.allowed(r, col, v)).collect();
        values.shuffle(rng);
        for v in values {
            self.place(r, col, v);
            if self.sample(k + 1, rng) {
                return true;
            }
            self.clear(r, col, v);
        }
        false
    }
}

/// Every normalized loop (reduced Latin square) of the given order, in
/// lexicographic order of their cells.
pub fn all_loops(order: usize) -> Result<Vec<CayleyTable>> {
    if order == 0 {
        return Ok(Vec::new());
    }
    if order > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::OrderCapExceeded {
            order,
            max: EXHAUSTIVE_MAX_ORDER,
        });
    }
    let mut out = Vec::new();
    if order == 1 {
        out.push(cyclic(1)?);
        return Ok(out);
    }
    Completion::new(order).enumerate(0, &mut out);
    Ok(out)
}

/// `count` seeded normalized loops of the given order, identity `0`.
pub fn random_loops(order: usize, count: usize, seed: u64) -> Result<Vec<CayleyTable>> {
    if order == 0 || order > RANDOM_LOOP_MAX_ORDER {
        return Err(Error::OrderCapExceeded {
            order,
            max: RANDOM_LOOP_MAX_ORDER,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            if order == 1 {
                return cyclic(1);
            }
            let mut c = Completion::new(order);
            let ok = c.sample(0, &mut rng);
            debug_assert!(ok, "a normalized partial square always completes");
            CayleyTable::from_cells(order, c.cells)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c12_cells() {
        let t = c12();
        assert_eq!(t.mul(6, 3), 10);
        assert_eq!(t.mul(3, 6), 9);
        assert_eq!(t.mul(11, 11), 0);
        assert!(t.is_quasigroup());
        assert_eq!(t.identity(), Some(0));
    }

    #[test]
    fn reduced_latin_square_counts() {
        // OEIS A000315
        let counts: Vec<usize> = (1..=5).map(|n| all_loops(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 4, 56]);
    }

    #[test]
    fn products_and_names() {
        let k = named("klein").unwrap();
        assert_eq!(k.order(), 4);
        assert_eq!(k.identity(), Some(0));
        assert_eq!(named("q8xc2xc3").unwrap().order(), 48);
        assert_eq!(named("cyclic:1").unwrap().order(), 1);
        assert!(named("nope").is_err());
        assert!(named("cyclic:x").is_err());
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion();
        let (one, minus_one, i, j, k) = (0, 1, 2, 4, 6);
        assert_eq!(q.mul(i, i), minus_one);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), k + 1);
        assert_eq!(q.mul(minus_one, minus_one), one);
        assert_eq!(q.identity(), Some(one));
    }

    #[test]
    fn random_loops_are_normalized_and_seeded() {
        let a = random_loops(7, 5, 42).unwrap();
        let b = random_loops(7, 5, 42).unwrap();
        assert_eq!(a, b);
        for t in &a {
            assert!(t.is_quasigroup());
            assert_eq!(t.identity(), Some(0));
        }
        assert!(random_loops(10, 1, 0).is_err());
        let twos = random_loops(2, 3, 9).unwrap();
        assert!(twos.iter().all(|t| *t == cyclic(2).unwrap()));
    }
}
