//! Cayley tables of finite binary operations on `{0..n-1}`.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::MAX_ORDER;

/// A binary operation on `{0..n-1}` stored row-major: `cells[x*n + y] = x·y`.
///
/// Quasigroup-ness and the two-sided identity are detected once, on
/// construction. When the table is a quasigroup the left and right division
/// tables are cached as well.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<usize>,
    quasigroup: bool,
    identity: Option<usize>,
    // ldiv[a*n + b] = a\b, rdiv[b*n + a] = b/a; empty unless quasigroup
    ldiv: Vec<usize>,
    rdiv: Vec<usize>,
}

impl CayleyTable {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::malformed(
                    i + 1,
                    format!("row {i} has {} entries, expected {n}", row.len()),
                ));
            }
        }
        Self::from_cells(n, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut cells = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                cells.push(f(x, y));
            }
        }
        Self::from_cells(order, cells)
    }

    pub fn from_cells(order: usize, cells: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::malformed(1, "order must be positive"));
        }
        if order > MAX_ORDER {
            return Err(Error::OrderCapExceeded {
                order,
                max: MAX_ORDER,
            });
        }
        if cells.len() != order * order {
            return Err(Error::OrderMismatch {
                expected: order * order,
                found: cells.len(),
            });
        }
        if let Some(&bad) = cells.iter().find(|&&c| c >= order) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order,
            });
        }
        let mut table = CayleyTable {
            order,
            cells,
            quasigroup: false,
            identity: None,
            ldiv: Vec::new(),
            rdiv: Vec::new(),
        };
        table.quasigroup = table.latin_check();
        if table.quasigroup {
            let n = order;
            let mut ldiv = vec![0; n * n];
            let mut rdiv = vec![0; n * n];
            for a in 0..n {
                for z in 0..n {
                    let b = table.mul(a, z);
                    ldiv[a * n + b] = z;
                    let b = table.mul(z, a);
                    rdiv[b * n + a] = z;
                }
            }
            table.ldiv = ldiv;
            table.rdiv = rdiv;
        }
        table.identity = table.detect_identity();
        Ok(table)
    }

    /// Parses the plain-text table format: optional `#` comment lines, the
    /// order on the first remaining line, then one whitespace-separated row
    /// per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (order_line, header) = lines
            .next()
            .ok_or_else(|| Error::malformed(1, "missing order line"))?;
        let n: usize = header.parse().map_err(|_| {
            Error::malformed(order_line, format!("expected order, found {header:?}"))
        })?;
        if n == 0 {
            return Err(Error::malformed(order_line, "order must be positive"));
        }
        if n > MAX_ORDER {
            return Err(Error::malformed(
                order_line,
                format!("order {n} exceeds the supported maximum of {MAX_ORDER}"),
            ));
        }

        let mut cells = Vec::with_capacity(n * n);
        let mut rows_read = 0;
        let mut last_line = order_line;
        for (line_no, line) in lines {
            last_line = line_no;
            if rows_read == n {
                return Err(Error::malformed(
                    line_no,
                    format!("extra row beyond order {n}"),
                ));
            }
            let mut count = 0;
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::malformed(line_no, format!("non-integer token {tok:?}")))?;
                if v >= n {
                    return Err(Error::malformed(
                        line_no,
                        format!("value {v} out of range for order {n}"),
                    ));
                }
                cells.push(v);
                count += 1;
            }
            if count != n {
                return Err(Error::malformed(
                    line_no,
                    format!("ragged row: {count} entries, expected {n}"),
                ));
            }
            rows_read += 1;
        }
        if rows_read != n {
            return Err(Error::malformed(
                last_line,
                format!("expected {n} rows, found {rows_read}"),
            ));
        }
        Self::from_cells(n, cells)
    }

    /// Inverse of [`CayleyTable::parse`]: order line then rows, single-space
    /// separated, trailing newline.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for x in 0..self.order {
            let row: Vec<String> = self.row(x).iter().map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Hex SHA-256 of the serialized table.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.to_text().as_bytes());
        let mut s = String::with_capacity(64);
        for b in hash {
            let _ = write!(s, "{b:02x}");
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y]
    }

    /// The unique `z` with `a·z = b`. Quasigroups only.
    #[inline]
    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv[a * self.order + b]
    }

    /// The unique `z` with `z·a = b`. Quasigroups only.
    #[inline]
    pub fn rdiv(&self, b: usize, a: usize) -> usize {
        self.rdiv[b * self.order + a]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.cells[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| self.row(x).to_vec()).collect()
    }

    pub fn is_quasigroup(&self) -> bool {
        self.quasigroup
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_loop(&self) -> bool {
        self.quasigroup && self.identity.is_some()
    }

    /// Identity of a loop, or `NotALoop`.
    pub fn loop_identity(&self) -> Result<usize> {
        match self.identity {
            Some(e) if self.quasigroup => Ok(e),
            _ => Err(Error::NotALoop),
        }
    }

    /// The transpose: `x ∘ y = y · x`.
    pub fn opposite(&self) -> CayleyTable {
        let n = self.order;
        Self::from_fn(n, |x, y| self.mul(y, x)).expect("transpose of a valid table")
    }

    /// `y ↦ x·y`.
    pub fn left_translation(&self, x: usize) -> Result<Permutation> {
        self.check_element(x)?;
        if !self.quasigroup {
            return Err(Error::NotAQuasigroup);
        }
        Ok(Permutation::from_images_unchecked(self.row(x).to_vec()))
    }

    /// `y ↦ y·x`.
    pub fn right_translation(&self, x: usize) -> Result<Permutation> {
        self.check_element(x)?;
        if !self.quasigroup {
            return Err(Error::NotAQuasigroup);
        }
        Ok(Permutation::from_images_unchecked(
            (0..self.order).map(|y| self.mul(y, x)).collect(),
        ))
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.order {
            Err(Error::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    fn latin_check(&self) -> bool {
        let n = self.order;
        let mut seen = vec![0usize; n];
        let mut stamp = 0;
        for x in 0..n {
            stamp += 1;
            for y in 0..n {
                let v = self.mul(x, y);
                if seen[v] == stamp {
                    return false;
                }
                seen[v] = stamp;
            }
            stamp += 1;
            for y in 0..n {
                let v = self.mul(y, x);
                if seen[v] == stamp {
                    return false;
                }
                seen[v] = stamp;
            }
        }
        true
    }

    fn detect_identity(&self) -> Option<usize> {
        let n = self.order;
        let mut found =
            (0..n).filter(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x));
        let e = found.next();
        // a two-sided identity of any magma is unique
        debug_assert!(found.next().is_none());
        e
    }
}

impl std::fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CayleyTable(order {})\n{}", self.order, self.to_text())
    }
}
