//! Exhaustive small-`n` search for extremal MIS counts, with witness
//! collection up to isomorphism and closed-form comparisons.

mod canon;
pub mod formulas;
mod scan;
mod verify;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

pub use canon::{canonical_form, canonical_order, CANON_MAX_N};
pub use scan::{Census, GRAPH_SCAN_MAX_N, HYPER_SCAN_MAX_N};
pub use verify::{
    monotonicity_violations, small_k_bound_table, verify, verify_theorem, BoundRow, TheoremId, VerifyRanges,
    VerifyRow, VerifyTable,
};

/// Default number of witness classes kept per report.
pub const DEFAULT_WITNESS_CAP: usize = 64;

/// Parameters of one exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub n: usize,
    /// Size of the counted sets; `None` counts all of them.
    pub k: Option<usize>,
    /// Forbidden clique size; `None` scans every structure.
    pub t: Option<usize>,
    /// Uniformity, 2 for graphs or 3 for 3-graphs.
    pub r: usize,
    pub collect_witnesses: bool,
    pub witness_cap: usize,
}

impl SearchSpec {
    pub fn graphs(n: usize) -> Self {
        SearchSpec { n, k: None, t: None, r: 2, collect_witnesses: false, witness_cap: DEFAULT_WITNESS_CAP }
    }

    pub fn hypergraphs(n: usize) -> Self {
        SearchSpec { r: 3, ..Self::graphs(n) }
    }

    pub fn size(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn forbid(mut self, t: usize) -> Self {
        self.t = Some(t);
        self
    }

    pub fn witnesses(mut self, on: bool) -> Self {
        self.collect_witnesses = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let cap = match self.r {
            2 => GRAPH_SCAN_MAX_N,
            3 => HYPER_SCAN_MAX_N,
            r => return input(format!("uniformity must be 2 or 3, got {r}")),
        };
        if self.n > cap {
            return Err(Error::Cap(format!("exhaustive search with r={} supports n <= {cap}, got {}", self.r, self.n)));
        }
        if self.n == 0 {
            return input("exhaustive search needs n >= 1");
        }
        if let Some(t) = self.t {
            if t <= self.r {
                return input(format!("forbidden clique size t={t} must exceed r={}", self.r));
            }
        }
        if let Some(k) = self.k {
            if k == 0 || k > self.n {
                return input(format!("set size k={k} must lie in 1..={}", self.n));
            }
        }
        if self.collect_witnesses && self.witness_cap == 0 {
            return input("witness cap must be positive");
        }
        Ok(())
    }

    /// Closed-form value for this parameter point, when one is known.
    pub fn formula_value(&self) -> Option<u64> {
        let n = self.n;
        match (self.r, self.k, self.t) {
            (2, None, None) => formulas::moon_moser(n),
            (2, None, Some(3)) => formulas::hujter_tuza(n),
            (2, Some(k), None) => formulas::nielsen(n, k),
            (2, Some(2), Some(3)) => Some(formulas::m3_n2(n)),
            (2, Some(1), Some(t)) => formulas::mt_n1(n, t),
            (3, Some(2), Some(4)) => formulas::hyper_m432(n),
            _ => None,
        }
    }
}

/// Result of [`exhaustive_m`]. `elapsed` is left out of the serialized
/// form so that repeated runs produce identical output.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub spec: SearchSpec,
    pub value: u64,
    /// Canonical graph6 strings, or canonical hypergraph JSON when `r = 3`,
    /// sorted and capped at `spec.witness_cap`.
    pub witnesses: Vec<String>,
    pub formula_value: Option<u64>,
    pub graphs_scanned: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn formula_matches(&self) -> Option<bool> {
        self.formula_value.map(|f| f == self.value)
    }
}

/// Census of one parameter point: maxima for every `k` at once.
pub fn census(r: usize, n: usize, t: Option<usize>) -> Result<Census> {
    let spec = SearchSpec { r, t, ..SearchSpec::graphs(n) };
    spec.validate()?;
    Ok(match r {
        2 => scan::graph_census(n, t),
        _ => scan::hyper_census(n, t),
    })
}

/// Exact maximum of the requested MIS count over all labeled structures on
/// `spec.n` vertices that avoid the forbidden clique.
pub fn exhaustive_m(spec: &SearchSpec) -> Result<SearchReport> {
    spec.validate()?;
    let start = Instant::now();
    let c = census(spec.r, spec.n, spec.t)?;
    let value = c.max_for(spec.k);
    let witnesses = if spec.collect_witnesses && value > 0 {
        match spec.r {
            2 => scan::graph_witnesses(spec.n, spec.t, spec.k, value, spec.witness_cap),
            _ => scan::hyper_witnesses(spec.n, spec.t, spec.k, value, spec.witness_cap),
        }
    } else {
        Vec::new()
    };
    Ok(SearchReport {
        spec: spec.clone(),
        value,
        witnesses,
        formula_value: spec.formula_value(),
        graphs_scanned: c.scanned,
        elapsed: start.elapsed(),
    })
}

/// Extremal witness classes for size-`k` sets in `K_t`-free graphs.
pub fn uniqueness_check(n: usize, k: usize, t: usize) -> Result<SearchReport> {
    exhaustive_m(&SearchSpec::graphs(n).size(k).forbid(t).witnesses(true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_and_domain() {
        assert!(matches!(SearchSpec::graphs(9).validate(), Err(Error::Cap(_))));
        assert!(matches!(SearchSpec::hypergraphs(7).validate(), Err(Error::Cap(_))));
        assert!(SearchSpec::graphs(5).forbid(2).validate().is_err());
        assert!(SearchSpec::graphs(5).size(6).validate().is_err());
        assert!(SearchSpec { r: 4, ..SearchSpec::graphs(4) }.validate().is_err());
    }

    #[test]
    fn six_vertices_all_sets() {
        let rep = exhaustive_m(&SearchSpec::graphs(6)).unwrap();
        assert_eq!(rep.value, 9);
        assert_eq!(rep.formula_matches(), Some(true));
        assert_eq!(rep.graphs_scanned, 1 << 15);
    }

    #[test]
    fn five_cycle_is_the_witness() {
        let rep = exhaustive_m(&SearchSpec::graphs(5).size(2).forbid(3).witnesses(true)).unwrap();
        assert_eq!(rep.value, 5);
        let c5 = crate::graph::Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(rep.witnesses, [canonical_form(&c5).unwrap()]);
    }

    #[test]
    fn report_json_omits_timing() {
        let rep = exhaustive_m(&SearchSpec::graphs(3)).unwrap();
        let s = serde_json::to_string(&rep).unwrap();
        assert!(!s.contains("elapsed"));
        assert!(s.contains("\"value\":3"));
    }
}
