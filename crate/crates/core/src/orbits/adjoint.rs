use crate::cubics::{BinaryCubic, LinearForm, Matrix2, TracelessMatrix};
use crate::error::{Error, Result};
use crate::fields::Field;

use super::triple_root_form;

/// A representative of `ν_Δ(X) ∈ k*/k*_Δ`, `Δ = det X`: the value
/// `Ω(v, X·v)` for the first of `x, y, x + y` that is not an eigenvector.
pub fn nu_delta<F: Field>(x: &TracelessMatrix<F>) -> Result<F> {
    if x.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let like = &x.alpha;
    let ex = LinearForm::x(like);
    let ey = LinearForm::y(like);
    for v in [ex.clone(), ey.clone(), ex.add(&ey)] {
        let w = v.omega(&x.act_linear(&v));
        if !w.is_zero() {
            return Ok(w);
        }
    }
    unreachable!("a nonzero traceless matrix has at most two eigenlines among x, y, x+y")
}

/// Whether `a` and `b` define the same class in `k*/k*_Δ`.
pub fn nu_equivalent<F: Field>(a: &F, b: &F, delta: &F) -> Result<bool> {
    (a.clone() / b.clone()).hilbert_membership(delta)
}

/// Whether `X` is a value of the moment map: `ν_{det X}(X) = [2]`, and
/// `X = 0 = μ(x³)`.
pub fn in_moment_image<F: Field>(x: &TracelessMatrix<F>) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    let nu = nu_delta(x)?;
    nu_equivalent(&nu, &nu.from_i64_like(2), &x.det())
}

/// `g ∈ Sl(2, k)` and `Y = gXg⁻¹` with zero diagonal and `β ≠ 0`.
pub fn to_off_diagonal<F: Field>(x: &TracelessMatrix<F>) -> Result<(Matrix2<F>, TracelessMatrix<F>)> {
    if x.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let like = x.alpha.clone();
    let (one, zero) = (like.one_like(), like.zero_like());
    let mut g = Matrix2::identity(&like);
    let mut y = x.clone();
    let mut apply = |h: Matrix2<F>, y: &mut TracelessMatrix<F>| -> Result<()> {
        *y = y.conjugate_by(&h)?;
        g = h.mul(&g);
        Ok(())
    };
    if !y.alpha.is_zero() && y.beta.is_zero() && y.gamma.is_zero() {
        apply(Matrix2::new(one.clone(), zero.clone(), one.clone(), one.clone()), &mut y)?;
    }
    if !y.alpha.is_zero() {
        if !y.gamma.is_zero() {
            let t = -(y.alpha.clone() / y.gamma.clone());
            apply(Matrix2::new(one.clone(), t, zero.clone(), one.clone()), &mut y)?;
        } else {
            let s = y.alpha.clone() / y.beta.clone();
            apply(Matrix2::new(one.clone(), zero.clone(), s, one.clone()), &mut y)?;
        }
    }
    if y.beta.is_zero() {
        apply(Matrix2::weyl(&like), &mut y)?;
    }
    debug_assert!(y.alpha.is_zero() && !y.beta.is_zero());
    Ok((g, y))
}

/// Search for `(p, q)` with `p² + q²Δ = t`. Exhaustive over prime fields;
/// over infinite fields `q` runs through fractions of bounded height.
fn norm_witness<F: Field>(t: &F, delta: &F) -> Option<(F, F)> {
    let try_q = |q: F| -> Option<(F, F)> {
        let p = (t.clone() - q.square() * delta.clone()).sqrt()?;
        Some((p, q))
    };
    match t.field_order() {
        Some(n) if n <= 1 << 20 => (0..n as i64).find_map(|i| try_q(t.from_i64_like(i))),
        _ => {
            const HEIGHT: i64 = 60;
            for den in 1..=HEIGHT {
                for num in 0..=HEIGHT {
                    if num_integer::gcd(num, den) != 1 && num != 0 {
                        continue;
                    }
                    for sgn in [1, -1] {
                        let q = t.from_i64_like(sgn * num) / t.from_i64_like(den);
                        if let Some(w) = try_q(q) {
                            return Some(w);
                        }
                    }
                }
            }
            None
        }
    }
}

/// A cubic `P` with `μ(P) = X`, or `None` if `X` is not in the image.
///
/// Fails with `Unsupported` if `X` is in the image but the bounded witness
/// search over an infinite field comes up empty.
pub fn moment_preimage<F: Field>(x: &TracelessMatrix<F>) -> Result<Option<BinaryCubic<F>>> {
    if !in_moment_image(x)? {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(BinaryCubic::cube_of(&LinearForm::x(&x.alpha))));
    }
    let (g, y) = to_off_diagonal(x)?;
    let (beta, gamma) = (y.beta.clone(), y.gamma.clone());
    let t = -(beta.clone() / beta.from_i64_like(2));
    let (p, q) = norm_witness(&t, &y.det())
        .ok_or_else(|| Error::Unsupported("no witness within the search height".into()))?;
    let p0 = BinaryCubic::new(
        gamma.clone() * p.clone() / beta.clone(),
        gamma * q.clone(),
        p,
        beta * q,
    );
    debug_assert_eq!(p0.moment(), y);
    let pre = p0.act_sl2(&g.inv()?)?;
    if pre.moment() != *x {
        return Err(Error::Internal("moment preimage check failed".into()));
    }
    Ok(Some(pre))
}

/// The unique `B` with `Ψ(B) = P`, if any.
///
/// For `Q_n(P) ≠ 0` this is `-Ψ(P)/λ²` with `λ³ = 9Q_n(P)`. For `Q_n(P) = 0`
/// a preimage exists only for `P = λφ³` with `[λ] = [6]`, and then `φ²ξ` with
/// `Ω(φ, ξ)³ = -9λ/2` is one.
pub fn psi_preimage<F: Field>(p: &BinaryCubic<F>) -> Result<Option<BinaryCubic<F>>> {
    if p.is_zero() {
        return Ok(Some(p.clone()));
    }
    let qn = p.qn();
    let b = if !qn.is_zero() {
        let Some(lambda) = (qn.from_i64_like(9) * qn).cbrt() else {
            return Ok(None);
        };
        p.psi().scale(&-lambda.square().inv()?)
    } else {
        if !p.moment().is_zero() {
            return Ok(None);
        }
        let (lambda, phi) = triple_root_form(p)?;
        let target = -(lambda.from_i64_like(9) * lambda) / p.a.from_i64_like(2);
        let Some(s) = target.cbrt() else {
            return Ok(None);
        };
        let xi = if phi.e.is_zero() {
            LinearForm::new(-(s / phi.f.clone()), p.a.zero_like())
        } else {
            LinearForm::new(p.a.zero_like(), s / phi.e.clone())
        };
        BinaryCubic::product(&phi, &phi, &xi)
    };
    if b.psi() != *p {
        return Err(Error::Internal("Ψ preimage check failed".into()));
    }
    Ok(Some(b))
}
