//! Small exact helpers shared by the other modules.

/// `binomial(n, 2)` as a polynomial in `n` (valid for negative `n`).
pub fn binom2(n: i128) -> i128 {
    n * (n - 1) / 2
}

/// `binomial(n, 3)` as a polynomial in `n` (valid for negative `n`).
pub fn binom3(n: i128) -> i128 {
    n * (n - 1) * (n - 2) / 6
}

/// Sign of `p + q·√n` for `n ≥ 0`, decided by squaring.
pub fn sign_with_root(p: i128, q: i128, n: i128) -> i8 {
    assert!(n >= 0, "square root of negative {n}");
    let sp = p.signum() as i8;
    let sq = if n == 0 { 0 } else { q.signum() as i8 };
    if sq == 0 {
        return sp;
    }
    if sp == 0 || sp == sq {
        return sq;
    }
    // opposite signs: compare p² with q²n
    match (p * p).cmp(&(q * q * n)) {
        std::cmp::Ordering::Greater => sp,
        std::cmp::Ordering::Less => sq,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Sign of `p + q1·√n1 + q2·√n2` for `n1, n2 ≥ 0`.
pub fn sign_with_two_roots(p: i128, q1: i128, n1: i128, q2: i128, n2: i128) -> i8 {
    let sx = sign_with_root(p, q1, n1);
    let sy = if n2 == 0 { 0 } else { q2.signum() as i8 };
    if sy == 0 {
        return sx;
    }
    if sx == 0 || sx == sy {
        return sy;
    }
    // X = p + q1√n1 and Y = q2√n2 have opposite signs; compare X² with Y².
    // X² − Y² = p² + q1²n1 − q2²n2 + 2pq1·√n1
    let diff = sign_with_root(p * p + q1 * q1 * n1 - q2 * q2 * n2, 2 * p * q1, n1);
    match diff {
        1 => sx,
        -1 => sy,
        _ => 0,
    }
}
