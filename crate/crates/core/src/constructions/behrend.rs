//! Three-term-progression-free sets from lattice points on a sphere.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Digit counts scanned per coordinate.
const DIGITS: std::ops::RangeInclusive<usize> = 2..=10;
/// Dimensions scanned.
const DIMS: std::ops::RangeInclusive<usize> = 2..=6;

/// A subset of `0..m` with no `x < y < z` satisfying `x + z = 2y`.
///
/// Numbers are written in base `2d - 1` with `D` digits from `0..d`, so
/// adding two of them never carries and a progression forces the digit
/// vectors themselves into progression. Vectors on one sphere
/// `Σ a_i² = R` contain no such progression. The grid `d ∈ 2..=10`,
/// `D ∈ 2..=6` is scanned in that order; the largest sphere (restricted to
/// values below `m`) wins, ties going to the first grid point and then the
/// smallest radius. Any two-element set is progression-free, so for
/// `m >= 2` the result is never smaller than `{0, 1}`. Results are cached.
pub fn behrend_set(m: usize) -> Vec<usize> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<usize>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&m) {
        return v.clone();
    }
    let v = compute(m);
    cache.lock().expect("cache lock").insert(m, v.clone());
    v
}

fn compute(m: usize) -> Vec<usize> {
    let mut best: Vec<usize> = match m {
        0 => vec![],
        1 => vec![0],
        _ => vec![0, 1],
    };
    for d in DIGITS {
        let base = 2 * d - 1;
        for dim in DIMS {
            let mut spheres: HashMap<usize, Vec<usize>> = HashMap::new();
            let mut digits = vec![0usize; dim];
            loop {
                let value = digits.iter().rev().fold(0usize, |acc, &a| acc.saturating_mul(base).saturating_add(a));
                if value < m {
                    let radius = digits.iter().map(|a| a * a).sum();
                    spheres.entry(radius).or_default().push(value);
                }
                if !increment(&mut digits, d) {
                    break;
                }
            }
            let top = spheres
                .into_iter()
                .max_by(|(ra, a), (rb, b)| a.len().cmp(&b.len()).then(rb.cmp(ra)));
            if let Some((_, mut set)) = top {
                if set.len() > best.len() {
                    set.sort_unstable();
                    best = set;
                }
            }
        }
    }
    best
}

/// Odometer step over `0..d` digits, least significant first.
fn increment(digits: &mut [usize], d: usize) -> bool {
    for a in digits.iter_mut() {
        *a += 1;
        if *a < d {
            return true;
        }
        *a = 0;
    }
    false
}

/// Cubic scan for `x < y < z` in `set` with `x + z = 2y`.
pub fn has_three_term_ap(set: &[usize]) -> bool {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            for l in j + 1..s.len() {
                if s[i] + s[l] == 2 * s[j] {
                    return true;
                }
            }
        }
    }
    false
}
