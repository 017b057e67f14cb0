//! Helpers for finite fields: primality and root extraction in cyclic groups.

use super::Field;

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn inv_mod_u128(a: u128, m: u128) -> u128 {
    // m is small relative to i128 range for every caller (group orders < 2^127).
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(m as i128) as u128
}

/// An `r`-th root of `x` in a field whose multiplicative group is cyclic of
/// order `n`, for `r` prime.
///
/// Write `n = r^e·t` with `r ∤ t`. The candidate `x^(r⁻¹ mod t)` is off by an
/// element of the `r`-Sylow subgroup; that error is written as a power of a
/// Sylow generator (digit by digit) and divided out. `candidates` must
/// contain an `r`-th power non-residue whenever `r | n`.
pub(crate) fn rth_root<T: Field>(
    x: &T,
    r: u128,
    n: u128,
    candidates: impl Iterator<Item = T>,
) -> Option<T> {
    if x.is_zero() {
        return Some(x.clone());
    }
    let mut t = n;
    let mut e = 0u32;
    while t.is_multiple_of(r) {
        t /= r;
        e += 1;
    }
    let u = if t == 1 { 0 } else { inv_mod_u128(r % t, t) };
    let y0 = x.pow(u);
    if e == 0 {
        return if y0.pow(r) == *x { Some(y0) } else { None };
    }
    if !x.pow(n / r).is_one() {
        return None;
    }
    let mut z = None;
    for g in candidates {
        if !g.is_zero() && !g.pow(n / r).is_one() {
            z = Some(g.pow(t));
            break;
        }
    }
    let z = z?;
    // h = x / y0^r lies in the Sylow subgroup <z> of order r^e.
    let h = x.clone() / y0.pow(r);
    let zeta = z.pow(r.pow(e - 1));
    let z_inv = z.inv().ok()?;
    let mut m: u128 = 0;
    let mut rpow: u128 = 1;
    for i in 0..e {
        let residual = h.clone() * z_inv.pow(m);
        let probe = residual.pow(r.pow(e - 1 - i));
        let mut digit = None;
        let mut acc = x.one_like();
        for d in 0..r {
            if acc == probe {
                digit = Some(d);
                break;
            }
            acc = acc * zeta.clone();
        }
        m += digit? * rpow;
        rpow *= r;
    }
    if !m.is_multiple_of(r) {
        return None;
    }
    let root = y0 * z.pow(m / r);
    debug_assert!(root.pow(r) == *x);
    Some(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007 * 3));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn pow_mod_matches_naive() {
        for b in 0..20u64 {
            let mut acc = 1u64;
            for e in 0..10u64 {
                assert_eq!(pow_mod(b, e, 13), acc);
                acc = acc * b % 13;
            }
        }
    }
}
