//! Tables comparing exhaustive values with closed forms.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::Serialize;

use super::formulas;
use super::scan::{graph_census, hyper_census, Census, GRAPH_SCAN_MAX_N, HYPER_SCAN_MAX_N};
use crate::error::{input, Error, Result};

/// Closed forms available to [`verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// All maximal independent sets, no restriction.
    MoonMoser,
    /// All maximal independent sets, triangle-free graphs.
    HujterTuza,
    /// Size-`k` sets, no restriction.
    Nielsen,
    /// Size-2 sets, triangle-free graphs.
    M3n2,
    /// Size-1 sets, `K_t`-free graphs.
    MtN1,
    /// Size-2 sets, `K_4^3`-free 3-graphs.
    HyperM432,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::MoonMoser,
        TheoremId::HujterTuza,
        TheoremId::Nielsen,
        TheoremId::M3n2,
        TheoremId::MtN1,
        TheoremId::HyperM432,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::MoonMoser => "moon-moser",
            TheoremId::HujterTuza => "hujter-tuza",
            TheoremId::Nielsen => "nielsen",
            TheoremId::M3n2 => "m3n2",
            TheoremId::MtN1 => "mt-n1",
            TheoremId::HyperM432 => "hyper-m432",
        }
    }

    fn min_n(self) -> usize {
        match self {
            TheoremId::MoonMoser => 2,
            TheoremId::HujterTuza | TheoremId::HyperM432 => 4,
            _ => 1,
        }
    }

    fn max_n(self) -> usize {
        match self {
            TheoremId::HyperM432 => HYPER_SCAN_MAX_N,
            _ => GRAPH_SCAN_MAX_N,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL.into_iter().find(|id| id.as_str() == s).ok_or_else(|| {
            let ids: Vec<_> = TheoremId::ALL.iter().map(|id| id.as_str()).collect();
            Error::Input(format!("unknown theorem id {s:?}; expected one of {}", ids.join(", ")))
        })
    }
}

/// Parameter ranges for a verification run. `k` is read only by
/// `nielsen` (default `1..=n`), `t` only by `mt-n1` (default `3..=5`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRanges {
    pub n: RangeInclusive<usize>,
    pub k: Option<RangeInclusive<usize>>,
    pub t: Option<RangeInclusive<usize>>,
}

impl VerifyRanges {
    pub fn n(n: RangeInclusive<usize>) -> Self {
        VerifyRanges { n, k: None, t: None }
    }

    pub fn with_k(mut self, k: RangeInclusive<usize>) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_t(mut self, t: RangeInclusive<usize>) -> Self {
        self.t = Some(t);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub theorem: &'static str,
    pub n: usize,
    pub k: Option<usize>,
    pub t: Option<usize>,
    pub computed: u64,
    pub formula: u64,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyTable {
    pub theorem: &'static str,
    pub rows: Vec<VerifyRow>,
}

impl VerifyTable {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matched)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| !r.matched)
    }
}

/// Censuses shared between rows with the same `(r, n, t)`.
#[derive(Default)]
struct Cache(HashMap<(usize, usize, Option<usize>), Census>);

impl Cache {
    fn get(&mut self, r: usize, n: usize, t: Option<usize>) -> &Census {
        self.0.entry((r, n, t)).or_insert_with(|| match r {
            2 => graph_census(n, t),
            _ => hyper_census(n, t),
        })
    }
}

pub fn verify_theorem(id: &str, ranges: &VerifyRanges) -> Result<VerifyTable> {
    verify(id.parse()?, ranges)
}

/// One row per parameter point; `nielsen` rows with `k > n` are skipped.
pub fn verify(id: TheoremId, ranges: &VerifyRanges) -> Result<VerifyTable> {
    let (lo, hi) = (*ranges.n.start(), *ranges.n.end());
    if lo > hi {
        return input(format!("empty n range {lo}..{hi}"));
    }
    if lo < id.min_n() {
        return input(format!("{id} needs n >= {}", id.min_n()));
    }
    if hi > id.max_n() {
        return Err(Error::Cap(format!("{id} verification supports n <= {}, got {hi}", id.max_n())));
    }
    let mut cache = Cache::default();
    let mut rows = Vec::new();
    let mut push = |n: usize, k: Option<usize>, t: Option<usize>, computed: u64, formula: u64| {
        rows.push(VerifyRow { theorem: id.as_str(), n, k, t, computed, formula, matched: computed == formula })
    };
    for n in ranges.n.clone() {
        match id {
            TheoremId::MoonMoser => {
                let f = formulas::moon_moser(n).expect("n checked");
                push(n, None, None, cache.get(2, n, None).max_all, f);
            }
            TheoremId::HujterTuza => {
                let f = formulas::hujter_tuza(n).expect("n checked");
                push(n, None, Some(3), cache.get(2, n, Some(3)).max_all, f);
            }
            TheoremId::Nielsen => {
                let ks = ranges.k.clone().unwrap_or(1..=n);
                if *ks.start() == 0 {
                    return input("k must be positive");
                }
                for k in ks.filter(|&k| k <= n) {
                    let f = formulas::nielsen(n, k).expect("k checked");
                    push(n, Some(k), None, cache.get(2, n, None).max_by_size[k], f);
                }
            }
            TheoremId::M3n2 => {
                let c = cache.get(2, n, Some(3));
                let computed = c.max_by_size.get(2).copied().unwrap_or(0);
                push(n, Some(2), Some(3), computed, formulas::m3_n2(n));
            }
            TheoremId::MtN1 => {
                let ts = ranges.t.clone().unwrap_or(3..=5);
                if *ts.start() < 3 {
                    return input("t must be at least 3");
                }
                for t in ts {
                    let f = formulas::mt_n1(n, t).expect("t checked");
                    push(n, Some(1), Some(t), cache.get(2, n, Some(t)).max_by_size[1], f);
                }
            }
            TheoremId::HyperM432 => {
                let f = formulas::hyper_m432(n).expect("n checked");
                push(n, Some(2), Some(4), cache.get(3, n, Some(4)).max_by_size[2], f);
            }
        }
    }
    Ok(VerifyTable { theorem: id.as_str(), rows })
}

/// Comparison of an exhaustive `K_t`-free value against `t * C(n, k-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub value: u64,
    pub bound: u64,
    pub holds: bool,
}

/// Every `k < t` (with `k <= n`) for each `n` and `t` in range.
pub fn small_k_bound_table(ns: RangeInclusive<usize>, ts: RangeInclusive<usize>) -> Result<Vec<BoundRow>> {
    if *ns.end() > GRAPH_SCAN_MAX_N {
        return Err(Error::Cap(format!("bound table supports n <= {GRAPH_SCAN_MAX_N}")));
    }
    if *ns.start() == 0 || *ts.start() < 3 {
        return input("bound table needs n >= 1 and t >= 3");
    }
    let mut cache = Cache::default();
    let mut rows = Vec::new();
    for n in ns {
        for t in ts.clone() {
            let c = cache.get(2, n, Some(t));
            for k in 1..t.min(n + 1) {
                let value = c.max_by_size[k];
                let bound = formulas::small_k_bound(n, k, t).expect("k < t");
                rows.push(BoundRow { n, t, k, value, bound, holds: value <= bound });
            }
        }
    }
    Ok(rows)
}

/// Points `(n, previous, current)` where a sequence indexed by consecutive
/// `n` decreases.
pub fn monotonicity_violations(values: &[(usize, u64)]) -> Vec<(usize, u64, u64)> {
    values.windows(2).filter(|w| w[1].1 < w[0].1).map(|w| (w[1].0, w[0].1, w[1].1)).collect()
}
