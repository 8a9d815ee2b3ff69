//! Cantor pairing and binomial coefficients, shared by the tuple coder and
//! the priority ordering of requirements.

/// Cantor pairing: `pair(a, b) = (a+b)(a+b+1)/2 + b`.
///
/// Panics on overflow; desk-scale inputs stay far below `u64::MAX`.
pub fn pair(a: u64, b: u64) -> u64 {
    let s = a.checked_add(b).expect("pair overflow");
    let tri = s
        .checked_mul(s + 1)
        .map(|v| v / 2)
        .expect("pair overflow");
    tri.checked_add(b).expect("pair overflow")
}

/// Inverse of [`pair`].
pub fn unpair(z: u64) -> (u64, u64) {
    // w = floor((sqrt(8z+1) - 1) / 2), computed exactly in u128.
    let d = 8u128 * z as u128 + 1;
    let mut w = (d as f64).sqrt() as u128;
    while w * w > d {
        w -= 1;
    }
    while (w + 1) * (w + 1) <= d {
        w += 1;
    }
    let w = ((w - 1) / 2) as u64;
    let t = w * (w + 1) / 2;
    let b = z - t;
    (w - b, b)
}

/// Binomial coefficient with saturation at `u64::MAX`.
///
/// Saturation keeps colex decoding total: any rank below a saturated
/// binomial compares correctly.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
