//! Fractional matchings with exact rational weights.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::hypergraph::Hypergraph;

pub type Weight = Ratio<u64>;

/// Nonnegative rational weight per hyperedge index. Missing edges weigh zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FractionalMatching {
    weights: BTreeMap<usize, Weight>,
}

impl FractionalMatching {
    pub fn new(weights: impl IntoIterator<Item = (usize, Weight)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, w) in weights {
            if map.insert(e, w).is_some() {
                return input(format!("edge {e} weighted twice"));
            }
        }
        Ok(FractionalMatching { weights: map })
    }

    /// Weight `w` on each of the first `edges` edge indices.
    pub fn uniform(edges: usize, w: Weight) -> Self {
        FractionalMatching { weights: (0..edges).map(|e| (e, w)).collect() }
    }

    pub fn weight(&self, edge: usize) -> Weight {
        self.weights.get(&edge).copied().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Weight)> + '_ {
        self.weights.iter().map(|(&e, &w)| (e, w))
    }

    /// `|M|`, the sum of all weights.
    pub fn total_weight(&self) -> Weight {
        self.weights.values().fold(Weight::from_integer(0), |acc, &w| acc + w)
    }

    /// Load `Σ_{e ∋ x} M(e)` at vertex `x`.
    pub fn load(&self, h: &Hypergraph, x: usize) -> Weight {
        self.weights
            .iter()
            .filter(|(&e, _)| h.edges().get(e).is_some_and(|edge| edge.contains(x)))
            .fold(Weight::from_integer(0), |acc, (_, &w)| acc + w)
    }

    /// Whether every vertex of `h` carries load at most one.
    ///
    /// Errors if a weight refers to an edge index `h` does not have.
    pub fn validate(&self, h: &Hypergraph) -> Result<bool> {
        if let Some(&e) = self.weights.keys().find(|&&e| e >= h.edges().len()) {
            return input(format!("weight on unknown edge index {e}"));
        }
        let one = Weight::from_integer(1);
        Ok((0..h.n()).all(|x| self.load(h, x) <= one))
    }

    pub fn to_json(&self) -> MatchingJson {
        MatchingJson {
            weights: self
                .iter()
                .map(|(edge, w)| WeightJson { edge, num: *w.numer(), den: *w.denom() })
                .collect(),
        }
    }

    pub fn from_json(j: &MatchingJson) -> Result<Self> {
        let mut ws = Vec::with_capacity(j.weights.len());
        for w in &j.weights {
            if w.den == 0 {
                return Err(Error::Parse(format!("zero denominator on edge {}", w.edge)));
            }
            ws.push((w.edge, Weight::new(w.num, w.den)));
        }
        Self::new(ws)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let j: MatchingJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

/// JSON shape `{"weights": [{"edge": int, "num": int, "den": int}, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingJson {
    pub weights: Vec<WeightJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    pub edge: usize,
    pub num: u64,
    pub den: u64,
}
