//! Closed forms for the extremal values the exhaustive scan reproduces.

fn pow(b: u64, e: usize) -> u64 {
    b.pow(e as u32)
}

/// Maximum number of maximal independent sets on `n` vertices, `n >= 2`.
pub fn moon_moser(n: usize) -> Option<u64> {
    match (n, n % 3) {
        (0 | 1, _) => None,
        (_, 0) => Some(pow(3, n / 3)),
        (_, 1) => Some(4 * pow(3, (n - 4) / 3)),
        _ => Some(2 * pow(3, (n - 2) / 3)),
    }
}

/// Same maximum over triangle-free graphs, `n >= 4`.
pub fn hujter_tuza(n: usize) -> Option<u64> {
    if n < 4 {
        None
    } else if n % 2 == 0 {
        Some(pow(2, n / 2))
    } else {
        Some(5 * pow(2, (n - 5) / 2))
    }
}

/// Maximum number of size-`k` maximal independent sets, `1 <= k <= n`.
pub fn nielsen(n: usize, k: usize) -> Option<u64> {
    if k == 0 || k > n {
        return None;
    }
    let (q, s) = (n / k, n % k);
    Some(pow(q as u64, k - s) * pow(q as u64 + 1, s))
}

/// Triangle-free maximum for `k = 2`.
pub fn m3_n2(n: usize) -> u64 {
    match n {
        3 => 2,
        4 => 4,
        5 => 5,
        _ => n as u64 / 2,
    }
}

/// `K_t`-free maximum for `k = 1`, `t >= 3`.
pub fn mt_n1(n: usize, t: usize) -> Option<u64> {
    if t < 3 {
        None
    } else if n < t {
        Some(n as u64)
    } else {
        Some(t as u64 - 2)
    }
}

/// `K_4^3`-free 3-graphs, `k = 2`, `n >= 4`.
pub fn hyper_m432(n: usize) -> Option<u64> {
    (n >= 4).then(|| n as u64 - 1)
}

/// Upper bound `t * C(n, k-1)` valid whenever `k < t`.
pub fn small_k_bound(n: usize, k: usize, t: usize) -> Option<u64> {
    (k >= 1 && k < t).then(|| t as u64 * binomial(n, k - 1))
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}
