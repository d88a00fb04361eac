//! Corpus specifications for `verify`.

use std::path::Path;

use centra::{catalog, CayleyTable};

use crate::Failure;

pub struct Item {
    pub label: String,
    pub table: CayleyTable,
}

fn item(label: impl Into<String>, table: CayleyTable) -> Item {
    Item {
        label: label.into(),
        table,
    }
}

fn parse_orders(text: &str) -> Option<(usize, usize)> {
    match text.split_once('-') {
        Some((lo, hi)) => Some((lo.parse().ok()?, hi.parse().ok()?)),
        None => {
            let n = text.parse().ok()?;
            Some((n, n))
        }
    }
}

/// Builds the corpus in spec order. Random items draw order `n` with seed
/// `seed + n`.
pub fn build(spec: &str, input: Option<&Path>, seed: u64) -> Result<Vec<Item>, Failure> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let usage = |detail: String| Failure::usage(format!("corpus item {part:?}: {detail}"));
        if let Some(rest) = part.strip_prefix("exhaustive:") {
            let max: usize = rest
                .parse()
                .map_err(|_| usage("expected exhaustive:<n>".into()))?;
            for n in 1..=max {
                let loops = catalog::all_loops(n).map_err(|e| usage(e.to_string()))?;
                for (i, t) in loops.into_iter().enumerate() {
                    out.push(item(format!("exhaustive:{n}#{i}"), t));
                }
            }
        } else if let Some(rest) = part.strip_prefix("random:") {
            let parsed = rest.split_once(':').and_then(|(orders, count)| {
                Some((parse_orders(orders)?, count.parse::<usize>().ok()?))
            });
            let Some(((lo, hi), count)) = parsed else {
                return Err(usage("expected random:<lo>-<hi>:<count>".into()));
            };
            for n in lo..=hi {
                let loops = catalog::random_loops(n, count, seed.wrapping_add(n as u64))
                    .map_err(|e| usage(e.to_string()))?;
                for (i, t) in loops.into_iter().enumerate() {
                    out.push(item(format!("random:{n}#{i}"), t));
                }
            }
        } else if part == "catalog" {
            out.push(item("c12", catalog::c12()));
            out.push(item("o16", catalog::cayley_loop()));
            for (name, t) in catalog::catalog_groups() {
                out.push(item(name, t));
            }
        } else {
            let t = catalog::named(part).map_err(|e| usage(e.to_string()))?;
            out.push(item(part, t));
        }
    }
    if let Some(path) = input {
        out.push(item(path.display().to_string(), crate::load_table(path)?));
    }
    if out.is_empty() {
        return Err(Failure::usage("empty corpus"));
    }
    Ok(out)
}
