//! Canonical labelling for small graphs.
//!
//! Vertices are first colored by iterated degree refinement; the color
//! classes, sorted by color, fix which block of positions each vertex may
//! take. Within that constraint a branch-and-bound search finds the
//! labelling whose graph6 bit string is lexicographically smallest.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_MAX_N: usize = 10;

/// Minimum graph6 encoding over all relabellings compatible with the
/// refined coloring. Equal outputs iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::Cap(format!("canonical form supports n <= {CANON_MAX_N}, got {n}")));
    }
    let order = canonical_order(g);
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    graph6::encode_string(&g.permute(&perm)?)
}

/// Vertices listed by canonical position.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let colors = refine(g);
    let mut slots: Vec<usize> = colors.clone();
    slots.sort_unstable();

    let mut s = Search { g, colors: &colors, slots: &slots, best: None, placed: Vec::with_capacity(n), used: 0 };
    s.run(0, 0, false);
    s.best.map(|(_, order)| order).unwrap_or_default()
}

/// Iterated refinement: `(own color, sorted neighbor colors)` renumbered in
/// sorted order until the number of classes stops growing.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        colors = sigs.iter().map(|s| sorted.binary_search(s).unwrap()).collect();
        let next = sorted.len();
        if next == classes {
            return colors;
        }
        classes = next;
    }
}

fn distinct(v: &[usize]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

struct Search<'a> {
    g: &'a Graph,
    colors: &'a [usize],
    slots: &'a [usize],
    best: Option<(u64, Vec<usize>)>,
    placed: Vec<usize>,
    used: u32,
}

impl Search<'_> {
    /// `key` holds `bits` bits of the graph6 string for the placed prefix.
    /// `ahead` means the prefix is already smaller than the best's prefix.
    fn run(&mut self, key: u64, bits: u32, ahead: bool) {
        let n = self.g.n();
        let pos = self.placed.len();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, self.placed.clone()));
            }
            return;
        }
        let total_bits = (n * (n - 1) / 2) as u32;
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.colors[v] != self.slots[pos] {
                continue;
            }
            let mut k = key;
            for &u in &self.placed {
                k = k << 1 | self.g.has_edge(u, v) as u64;
            }
            let nbits = bits + pos as u32;
            let mut now_ahead = ahead;
            if !ahead {
                if let Some((b, _)) = &self.best {
                    let prefix = if nbits == 0 { 0 } else { b >> (total_bits - nbits) };
                    if k > prefix {
                        continue;
                    }
                    now_ahead = k < prefix;
                }
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.run(k, nbits, now_ahead);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}
