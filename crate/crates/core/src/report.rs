//! Property reports: the full predicate battery for one table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::properties::{self, Nuclei, Verdict};
use crate::regular;
use crate::representation::{self, Side};
use crate::table::CayleyTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularSizes {
    pub lambda: usize,
    pub rho: usize,
    pub mu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub order: usize,
    pub digest: String,
    pub quasigroup: bool,
    pub identity: Option<usize>,
    pub predicates: BTreeMap<String, Verdict>,
    pub center: Option<Vec<usize>>,
    pub nuclei: Option<Nuclei>,
    pub squares: Option<Vec<usize>>,
    pub regular: Option<RegularSizes>,
}

impl PropertyReport {
    /// Runs every predicate that applies. Non-loops get only the header.
    pub fn analyze(t: &CayleyTable) -> Result<Self> {
        let mut report = PropertyReport {
            order: t.order(),
            digest: t.digest(),
            quasigroup: t.is_quasigroup(),
            identity: t.identity(),
            predicates: BTreeMap::new(),
            center: None,
            nuclei: None,
            squares: None,
            regular: None,
        };
        if !t.is_loop() {
            return Ok(report);
        }

        let mut add = |name: &str, v: Verdict| {
            report.predicates.insert(name.to_string(), v);
        };
        add("LC", properties::is_lc(t)?);
        add("RC", properties::is_rc(t)?);
        add("C", properties::is_c(t)?);
        add("left_alternative", properties::is_left_alternative(t)?);
        add("right_alternative", properties::is_right_alternative(t)?);
        add("LIP", properties::has_lip(t)?);
        add("RIP", properties::has_rip(t)?);
        add("commutative", properties::is_commutative(t)?);
        add("associative", properties::is_associative(t)?);
        add("central_square", properties::is_central_square(t)?);
        add("moufang", properties::is_moufang(t)?);
        add(
            "left_square_autotopisms",
            regular::left_square_autotopisms(t)?,
        );
        add(
            "right_square_autotopisms",
            regular::right_square_autotopisms(t)?,
        );
        add(
            "left_squares_lambda_regular",
            regular::left_squares_lambda_regular(t)?,
        );
        add(
            "right_squares_rho_regular",
            regular::right_squares_rho_regular(t)?,
        );
        add(
            "right_squares_mu_regular",
            regular::right_squares_mu_regular(t)?,
        );
        for side in Side::BOTH {
            add(
                &format!("{side}_closure_lcrc"),
                representation::closure_lcrc(t, side)?,
            );
            add(
                &format!("{side}_closure_c"),
                representation::closure_c(t, side)?,
            );
        }

        let nuclei = properties::nuclei(t)?;
        report.center = Some(properties::center(t)?);
        report.nuclei = Some(nuclei);
        report.squares = Some(properties::squares(t));
        report.regular = Some(RegularSizes {
            lambda: regular::lambda_regular_set(t)?.len(),
            rho: regular::rho_regular_set(t)?.len(),
            mu: regular::mu_regular_set(t)?.len(),
        });
        Ok(report)
    }

    pub fn holds(&self, name: &str) -> Option<bool> {
        self.predicates.get(name).map(|v| v.holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering of the same content as [`Self::to_json`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "order       {}", self.order);
        let _ = writeln!(s, "digest      {}", self.digest);
        let _ = writeln!(s, "quasigroup  {}", self.quasigroup);
        match self.identity {
            Some(e) => {
                let _ = writeln!(s, "identity    {e}");
            }
            None => {
                let _ = writeln!(s, "identity    none");
            }
        }
        if !self.predicates.is_empty() {
            let _ = writeln!(s);
            let width = self.predicates.keys().map(|k| k.len()).max().unwrap_or(0);
            for (name, v) in &self.predicates {
                let mark = if v.holds { "yes" } else { "no " };
                let _ = write!(s, "{name:<width$}  {mark}");
                if let Some(w) = &v.witness {
                    if !w.is_empty() {
                        let _ = write!(s, "  witness {w:?}");
                    }
                }
                let _ = writeln!(s);
            }
        }
        let list = |v: &[usize]| format!("{v:?}");
        if let Some(c) = &self.center {
            let _ = writeln!(s, "\ncenter         {}", list(c));
        }
        if let Some(n) = &self.nuclei {
            let _ = writeln!(s, "left nucleus   {}", list(&n.left));
            let _ = writeln!(s, "middle nucleus {}", list(&n.middle));
            let _ = writeln!(s, "right nucleus  {}", list(&n.right));
        }
        if let Some(q) = &self.squares {
            let _ = writeln!(s, "squares        {}", list(q));
        }
        if let Some(r) = &self.regular {
            let _ = writeln!(s, "|Λ| = {}, |P| = {}, |Φ| = {}", r.lambda, r.rho, r.mu);
        }
        s
    }
}
