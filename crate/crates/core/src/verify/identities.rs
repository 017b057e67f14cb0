//! Exact checks of the covariant identities.

use crate::cubics::{sym_cube_matrix, BinaryCubic, LinearForm, Matrix2, TracelessMatrix};
use crate::error::{Error, Result};
use crate::fields::Field;

/// A replaceable implementation of `Ψ`, so the harness can be tested against
/// a deliberately broken covariant.
pub type PsiFn<F> = dyn Fn(&BinaryCubic<F>) -> BinaryCubic<F> + Send + Sync;

/// The two sides of the symplectic Eisenstein identity
/// `ω(Ψ(P),Q)² - 9Q_n(P)ω(P,Q)² = -(9/2)ω(μ(P)⊗³·Q, Q) - (9/2)Q_n(P)ω(μ(P)·Q, Q)`.
pub fn eisenstein_symplectic_sides<F: Field>(
    p: &BinaryCubic<F>,
    q: &BinaryCubic<F>,
    psi: &PsiFn<F>,
) -> Result<(F, F)> {
    p.check_same_field(q)?;
    let k = |n: i64| p.a.from_i64_like(n);
    let mu = p.moment();
    let qn = p.qn();
    let lhs = psi(p).omega(q).square() - k(9) * qn.clone() * p.omega(q).square();
    let nine_halves = k(9) / k(2);
    let rhs = -nine_halves.clone() * sym_cube_matrix(&mu).apply(q).omega(q)
        - nine_halves * qn * q.act_algebra(&mu).omega(q);
    Ok((lhs, rhs))
}

pub fn check_eisenstein_symplectic<F: Field>(p: &BinaryCubic<F>, q: &BinaryCubic<F>) -> Result<bool> {
    let (l, r) = eisenstein_symplectic_sides(p, q, &|c: &BinaryCubic<F>| c.psi())?;
    Ok(l == r)
}

/// The two sides of `Ψ(P)(v)² - 9Q_n(P)P(v)² = -(9/2)Ω_{k²}(μ(P)·v, v)³`.
///
/// `Ω_{k²}` is the area form on `k²` transported from the one on linear forms
/// through `v ↦ ṽ`, where `φ(v) = Ω(φ, ṽ)`; for `v = (v1, v2)` that is
/// `ṽ = -v2·x + v1·y`.
pub fn eisenstein_classical_sides<F: Field>(
    p: &BinaryCubic<F>,
    v1: &F,
    v2: &F,
    psi: &PsiFn<F>,
) -> (F, F) {
    let k = |n: i64| p.a.from_i64_like(n);
    let lhs = psi(p).evaluate(v1, v2).square() - k(9) * p.qn() * p.evaluate(v1, v2).square();
    let tilde = LinearForm::new(-v2.clone(), v1.clone());
    let area = p.moment().act_linear(&tilde).omega(&tilde);
    let rhs = -(k(9) / k(2)) * area.cube();
    (lhs, rhs)
}

pub fn check_eisenstein_classical<F: Field>(p: &BinaryCubic<F>, v1: &F, v2: &F) -> bool {
    let (l, r) = eisenstein_classical_sides(p, v1, v2, &|c: &BinaryCubic<F>| c.psi());
    l == r
}

/// `Tr(μ(P)ξ) = -⅓ω(ξ·P, P)` and its infinitesimal form
/// `2B_μ(P, ξ·P) = [ξ, μ(P)]`.
pub fn check_moment_identity<F: Field>(xi: &TracelessMatrix<F>, p: &BinaryCubic<F>) -> bool {
    let k = |n: i64| p.a.from_i64_like(n);
    let xp = p.act_algebra(xi);
    let mu = p.moment();
    let trace_ok = mu.trace_product(xi) == -xp.omega(p) / k(3);
    let bracket_ok = p.b_mu(&xp).scale(&k(2)) == xi.bracket(&mu);
    trace_ok && bracket_ok
}

/// [`check_moment_identity`] for a matrix not yet known to be traceless.
pub fn check_moment_identity_matrix<F: Field>(xi: &Matrix2<F>, p: &BinaryCubic<F>) -> Result<bool> {
    Ok(check_moment_identity(&TracelessMatrix::from_matrix(xi)?, p))
}

/// `μ(g·P) = gμ(P)g⁻¹`, `Ψ(g·P) = g·Ψ(P)` and `Q_n(g·P) = Q_n(P)` for `g`
/// in `Sl(2, k)`.
pub fn check_equivariance<F: Field>(g: &Matrix2<F>, p: &BinaryCubic<F>) -> Result<bool> {
    equivariance_with(g, p, &|c: &BinaryCubic<F>| c.psi())
}

pub(crate) fn equivariance_with<F: Field>(
    g: &Matrix2<F>,
    p: &BinaryCubic<F>,
    psi: &PsiFn<F>,
) -> Result<bool> {
    if !g.is_sl2() {
        return Err(Error::NotSl2);
    }
    let gp = p.act_sl2(g)?;
    Ok(gp.moment() == p.moment().conjugate_by(g)?
        && psi(&gp) == psi(p).act_sl2(g)?
        && gp.qn() == p.qn())
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::fields::{Fp, Rational};
    use crate::testutil::*;

    #[test]
    fn symplectic_vanishing_moment() {
        // μ(x³) = 0
        let p = raw_q([1, 0, 0, 0]);
        let qq = raw_q([3, -1, 4, 2]);
        let (l, r) = eisenstein_symplectic_sides(&p, &qq, &|c: &BinaryCubic<Rational>| c.psi()).unwrap();
        assert_eq!(l, q(0));
        assert_eq!(r, q(0));
    }

    #[test]
    fn symplectic_double_root_example() {
        // P = x²y against a general Q = px³ + 3rx²y + 3sxy² + ty³
        let p = raw_q([0, 1, 0, 0]);
        for (pp, r, s, t) in [(1, 2, 3, 4), (-5, 0, 7, 1), (0, 0, 0, -3)] {
            let qq = BinaryCubic::new(q(pp), q(r), q(s), q(t));
            let (l, rhs) =
                eisenstein_symplectic_sides(&p, &qq, &|c: &BinaryCubic<Rational>| c.psi()).unwrap();
            let expect = qf(2, 9).square() * q(t).square();
            assert_eq!(l, expect);
            assert_eq!(rhs, expect);
        }
    }

    #[test]
    fn symplectic_field_mismatch() {
        let p = BinaryCubic::new(f7(1), f7(0), f7(0), f7(1));
        let five = Fp::new(1, 5).unwrap();
        let qq = BinaryCubic::new(five, five, five, five);
        assert_eq!(check_eisenstein_symplectic(&p, &qq), Err(Error::FieldMismatch));
    }

    #[test]
    fn symplectic_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let p = rand_cubic_q(&mut rng);
            let qq = rand_cubic_q(&mut rng);
            assert!(check_eisenstein_symplectic(&p, &qq).unwrap());
            let p = rand_cubic_fp(&mut rng, 7);
            let qq = rand_cubic_fp(&mut rng, 7);
            assert!(check_eisenstein_symplectic(&p, &qq).unwrap());
        }
    }

    #[test]
    fn classical_examples() {
        let p = raw_q([2, -1, 3, 5]);
        assert!(check_eisenstein_classical(&p, &q(0), &q(0)));
        // P = ax³ + dy³ at v = (1, 0): both sides vanish
        let p = raw_q([3, 0, 0, -2]);
        let (l, r) = eisenstein_classical_sides(&p, &q(1), &q(0), &|c: &BinaryCubic<Rational>| c.psi());
        assert_eq!(l, q(0));
        assert_eq!(r, q(0));
    }

    #[test]
    fn classical_exhaustive_f5() {
        let z = Fp::zero(5).unwrap();
        let el = z.elements();
        for p in all_cubics(5) {
            for v1 in &el {
                for v2 in &el {
                    assert!(check_eisenstein_classical(&p, v1, v2), "{p:?} {v1} {v2}");
                }
            }
        }
    }

    #[test]
    fn moment_identity_examples() {
        let p = raw_q([1, -2, 0, 7]);
        assert!(check_moment_identity(&TracelessMatrix::zero_like(&q(0)), &p));
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let xi = TracelessMatrix::new(rand_q(&mut rng), rand_q(&mut rng), rand_q(&mut rng));
            assert!(check_moment_identity(&xi, &rand_cubic_q(&mut rng)));
        }
        let m = Matrix2::new(q(1), q(0), q(0), q(1));
        assert_eq!(check_moment_identity_matrix(&m, &p), Err(Error::NotTraceless));
    }

    #[test]
    fn equivariance_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let j = Matrix2::weyl(&q(0));
        for _ in 0..50 {
            let p = rand_cubic_q(&mut rng);
            assert!(check_equivariance(&j, &p).unwrap());
            let g = rand_sl_fp(&mut rng, 7);
            assert!(check_equivariance(&g, &rand_cubic_fp(&mut rng, 7)).unwrap());
        }
        let g = Matrix2::diag(q(2), q(1));
        assert_eq!(check_equivariance(&g, &raw_q([1, 0, 0, 1])), Err(Error::NotSl2));
    }
}
