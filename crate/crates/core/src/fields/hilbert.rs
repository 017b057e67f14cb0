//! Integer number theory over `Q`: bounded factorization, square-free and
//! cube-free parts, rational roots of cubics and the Hilbert-symbol test for
//! membership in `k*_Δ = {a² + b²Δ}`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial-division bound used unless [`set_factor_bound`] changes it.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

static FACTOR_BOUND: AtomicU64 = AtomicU64::new(DEFAULT_FACTOR_BOUND);

/// Change the trial-division bound used for class computations over `Q`.
pub fn set_factor_bound(bound: u64) {
    FACTOR_BOUND.store(bound.max(2), Ordering::Relaxed);
}

pub fn factor_bound() -> u64 {
    FACTOR_BOUND.load(Ordering::Relaxed)
}

/// Prime factorization of `|n|` by trial division up to `bound`.
///
/// After removing every prime up to the bound the cofactor is prime when it is
/// below `bound²`; otherwise nothing can be said and the call fails.
pub fn factorize(n: &BigInt, bound: u64) -> Result<BTreeMap<BigInt, u32>> {
    let mut n = n.abs();
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut push = |p: BigInt, n: &mut BigInt| {
        let mut e = 0;
        while (&*n % &p).is_zero() {
            *n /= &p;
            e += 1;
        }
        if e > 0 {
            out.insert(p, e);
        }
    };
    push(BigInt::from(2), &mut n);
    let mut d: u64 = 3;
    loop {
        let dd = BigInt::from(d);
        if &dd * &dd > n {
            break;
        }
        if d > bound {
            return Err(Error::FactorizationBoundExceeded { bound });
        }
        push(dd, &mut n);
        d += 2;
    }
    if n > BigInt::one() {
        out.insert(n, 1);
    }
    Ok(out)
}

/// `(num, den)` of a rational, as integers.
fn parts(x: &BigRational) -> (BigInt, BigInt) {
    (x.numer().clone(), x.denom().clone())
}

/// `sign·s` with `s` square-free and `x / (sign·s)` a rational square.
pub fn square_class_int(x: &BigRational) -> Result<BigInt> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let (n, d) = parts(x);
    let bound = factor_bound();
    let mut exps = factorize(&n, bound)?;
    for (p, e) in factorize(&d, bound)? {
        *exps.entry(p).or_insert(0) += e;
    }
    let mut s = BigInt::one();
    for (p, e) in exps {
        if e % 2 == 1 {
            s *= p;
        }
    }
    Ok(if n.is_negative() { -s } else { s })
}

/// Positive integer with prime exponents in `{1, 2}` in the cube class of `x`.
pub fn cube_class_int(x: &BigRational) -> Result<BigInt> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let (n, d) = parts(x);
    let bound = factor_bound();
    let mut exps = factorize(&n, bound)?;
    // 1/d lies in the class of d².
    for (p, e) in factorize(&d, bound)? {
        *exps.entry(p).or_insert(0) += 2 * e;
    }
    let mut s = BigInt::one();
    for (p, e) in exps {
        for _ in 0..(e % 3) {
            s *= &p;
        }
    }
    Ok(s)
}

/// Square root of a rational square, if it is one.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = parts(x);
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &rn * &rn == n && &rd * &rd == d {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// Cube root of a rational cube, if it is one.
pub fn rational_cbrt(x: &BigRational) -> Option<BigRational> {
    let (n, d) = parts(x);
    let rn = n.cbrt();
    let rd = d.cbrt();
    if &rn * &rn * &rn == n && &rd * &rd * &rd == d {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// Remove square factors of primes below a small bound; the result has the
/// same square class as `n`.
pub fn strip_small_squares(n: &BigInt) -> BigInt {
    let mut n = n.clone();
    let mut p = 2u64;
    while p < 10_000 {
        let pp = BigInt::from(p * p);
        if pp > n.abs() {
            break;
        }
        while (&n % &pp).is_zero() {
            n /= &pp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    n
}

fn eval_int_cubic(c: &[BigInt; 3], s: &BigInt) -> BigInt {
    ((s + &c[0]) * s + &c[1]) * s + &c[2]
}

/// Integer roots of the monotone stretch `[lo, hi]` of `s³ + c0 s² + c1 s + c2`.
fn monotone_root(c: &[BigInt; 3], lo: &BigInt, hi: &BigInt) -> Option<BigInt> {
    if lo > hi {
        return None;
    }
    let flo = eval_int_cubic(c, lo);
    let fhi = eval_int_cubic(c, hi);
    if flo.is_zero() {
        return Some(lo.clone());
    }
    if fhi.is_zero() {
        return Some(hi.clone());
    }
    if flo.sign() == fhi.sign() {
        return None;
    }
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let rising = flo.is_negative();
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let fm = eval_int_cubic(c, &mid);
        if fm.is_zero() {
            return Some(mid);
        }
        if fm.is_negative() == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    None
}

/// All integer roots of the monic cubic `s³ + c0 s² + c1 s + c2`.
///
/// The cubic is monotone between its critical points, so each stretch holds
/// at most one root and bisection finds it; integers near the critical points
/// are checked directly.
pub fn integer_roots_monic_cubic(c: &[BigInt; 3]) -> Vec<BigInt> {
    let big = c.iter().map(|x| x.abs()).max().unwrap_or_default();
    let r = big + BigInt::one();
    let neg_r = -r.clone();
    let mut roots = Vec::new();
    let add = |x: BigInt, roots: &mut Vec<BigInt>| {
        if !roots.contains(&x) {
            roots.push(x);
        }
    };
    // Critical points: (-c0 ± √(c0² - 3c1)) / 3.
    let disc = &c[0] * &c[0] - BigInt::from(3) * &c[1];
    let three = BigInt::from(3);
    if disc.is_negative() {
        if let Some(x) = monotone_root(c, &neg_r, &r) {
            add(x, &mut roots);
        }
    } else {
        let sq = disc.sqrt();
        let one = BigInt::one();
        let lo_c: BigInt = -&c[0] - &sq;
        let hi_c: BigInt = -&c[0] + &sq;
        let k1: BigInt = (&lo_c - &one).div_floor(&three) - &one;
        let m1: BigInt = lo_c.div_floor(&three) + 2;
        let k2: BigInt = hi_c.div_floor(&three) - &one;
        let m2: BigInt = (&hi_c + &one).div_floor(&three) + 2;
        let clamp = |x: &BigInt| x.clone().max(neg_r.clone()).min(r.clone());
        for (lo, hi) in [
            (neg_r.clone(), clamp(&k1)),
            (clamp(&m1), clamp(&k2)),
            (clamp(&m2), r.clone()),
        ] {
            if let Some(x) = monotone_root(c, &lo, &hi) {
                add(x, &mut roots);
            }
        }
        for (lo, hi) in [(&k1, &m1), (&k2, &m2)] {
            let mut s = lo + BigInt::one();
            while &s < hi {
                if eval_int_cubic(c, &s).is_zero() {
                    add(s.clone(), &mut roots);
                }
                s += 1;
            }
        }
    }
    roots.sort();
    roots
}

/// All rational roots of `t³ + a2 t² + a1 t + a0`.
pub fn rational_roots_monic_cubic(
    a2: &BigRational,
    a1: &BigRational,
    a0: &BigRational,
) -> Vec<BigRational> {
    // t = s / L turns the cubic into a monic integer cubic in s.
    let l = a2.denom().lcm(a1.denom()).lcm(a0.denom());
    let lr = BigRational::from_integer(l.clone());
    let c0 = a2 * &lr;
    let c1 = a1 * &lr * &lr;
    let c2 = a0 * &lr * &lr * &lr;
    debug_assert!(c0.is_integer() && c1.is_integer() && c2.is_integer());
    let c = [c0.to_integer(), c1.to_integer(), c2.to_integer()];
    integer_roots_monic_cubic(&c)
        .into_iter()
        .map(|s| BigRational::new(s, l.clone()))
        .collect()
}

fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) / 2u32;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

fn split_p(x: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut x = x.clone();
    let mut e = 0;
    while (&x % p).is_zero() {
        x /= p;
        e += 1;
    }
    (e, x)
}

fn mod8(x: &BigInt) -> u32 {
    x.mod_floor(&BigInt::from(8)).to_u32().unwrap()
}

/// Hilbert symbol `(a, b)_p` for nonzero integers, `p` a prime or `None` for
/// the real place.
pub fn hilbert_symbol(a: &BigInt, b: &BigInt, p: Option<&BigInt>) -> i32 {
    let Some(p) = p else {
        return if a.is_negative() && b.is_negative() { -1 } else { 1 };
    };
    let (alpha, u) = split_p(a, p);
    let (beta, v) = split_p(b, p);
    if *p == BigInt::from(2) {
        let eps = |x: &BigInt| ((mod8(x) - 1) / 2) % 2;
        let omega = |x: &BigInt| {
            let m = mod8(x);
            ((m * m - 1) / 8) % 2
        };
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let eps_p = ((p - 1u32) / 2u32).is_odd() as u32;
        let mut s = if (alpha * beta * eps_p).is_multiple_of(2) { 1 } else { -1 };
        if beta % 2 == 1 {
            s *= legendre(&u, p);
        }
        if alpha % 2 == 1 {
            s *= legendre(&v, p);
        }
        s
    }
}

/// Whether the rational `x` can be written `a² + b²Δ` with `a, b ∈ Q`.
pub fn rational_membership(x: &BigRational, delta: &BigRational) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    if delta.is_zero() {
        return Ok(rational_sqrt(x).is_some());
    }
    let neg = -delta.clone();
    if rational_sqrt(&neg).is_some() {
        return Ok(true);
    }
    // x is a norm from Q(√-Δ) iff (x, -Δ)_v = 1 at every place.
    let a = square_class_int(x)?;
    let b = square_class_int(&neg)?;
    if hilbert_symbol(&a, &b, None) == -1 {
        return Ok(false);
    }
    let two = BigInt::from(2);
    if hilbert_symbol(&a, &b, Some(&two)) == -1 {
        return Ok(false);
    }
    let bound = factor_bound();
    let mut primes: Vec<BigInt> = factorize(&a, bound)?.into_keys().collect();
    primes.extend(factorize(&b, bound)?.into_keys());
    for p in primes {
        if p != two && hilbert_symbol(&a, &b, Some(&p)) == -1 {
            return Ok(false);
        }
    }
    Ok(true)
}
