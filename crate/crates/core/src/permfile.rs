//! Permutation files: `n=<order>` on the first line, then one permutation
//! per line in cycle notation. Blank lines and `#` comments are skipped.

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermFile {
    pub order: usize,
    pub perms: Vec<Permutation>,
}

impl PermFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::malformed(1, "missing n=<order> line"))?;
        let order = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
            .ok_or_else(|| {
                Error::malformed(line_no, format!("expected n=<order>, found {header:?}"))
            })?;
        let perms = lines
            .map(|(line_no, l)| {
                Permutation::parse_cycles(l, order)
                    .map_err(|e| Error::malformed(line_no, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PermFile { order, perms })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.order);
        for p in &self.perms {
            out.push_str(&p.format_cycles());
            out.push('\n');
        }
        out
    }
}
