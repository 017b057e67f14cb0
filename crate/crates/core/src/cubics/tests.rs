use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::fields::{Fp, Rational};
use crate::testutil::*;
#[test]
fn raw_round_trip() {
    let p = raw_q([1, 2, 3, 4]);
    assert_eq!(p.b, qf(2, 3));
    assert_eq!(p.raw(), [1, 2, 3, 4].map(q));
}

#[test]
fn parse_raw_coefficients() {
    let p = BinaryCubic::parse_raw(&q(0), "1, 0,6,-7/2").unwrap();
    assert_eq!(p.raw(), [q(1), q(0), q(6), qf(-7, 2)]);
    assert!(matches!(BinaryCubic::parse_raw(&q(0), "1,2,3"), Err(Error::Parse(_))));
    assert!(BinaryCubic::parse_raw(&q(0), "1,2,3,x").is_err());
    let p = BinaryCubic::parse_raw(&f7(0), "8,0,0,-1").unwrap();
    assert_eq!(p.raw(), [f7(1), f7(0), f7(0), f7(6)]);
}

#[test]
fn omega_examples() {
    let x3 = raw_q([1, 0, 0, 0]);
    let y3 = raw_q([0, 0, 0, 1]);
    assert_eq!(x3.omega(&y3), q(1));
    let p = raw_q([1, 0, 0, 1]);
    let p2 = raw_q([-3, 0, 0, 3]);
    assert_eq!(p.omega(&p2), q(6));
    let r = raw_q([2, -1, 5, 7]);
    assert_eq!(r.omega(&r), q(0));
}

#[test]
fn omega_is_nondegenerate() {
    // Gram matrix on x³, x²y, xy², y³ in (a,b,c,d) coordinates.
    let basis: Vec<BinaryCubic<Rational>> = (0..4)
        .map(|i| {
            let mut v = [q(0), q(0), q(0), q(0)];
            v[i] = q(1);
            BinaryCubic::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
        })
        .collect();
    let g: Vec<Vec<Rational>> = basis
        .iter()
        .map(|p| basis.iter().map(|r| p.omega(r)).collect())
        .collect();
    // Only the anti-diagonal pairs are nonzero: det = g03²·g12².
    let det = (g[0][3].clone() * g[1][2].clone()).square();
    assert_eq!(det, q(9));
    assert_eq!(g[0][1], q(0));
    assert_eq!(g[0][2], q(0));
    assert_eq!(g[1][3], q(0));
}

#[test]
fn evaluation_examples() {
    let x3 = raw_q([1, 0, 0, 0]);
    assert_eq!(x3.evaluate(&q(1), &q(0)), q(1));
    let p = raw_q([1, 0, 6, -7]);
    assert_eq!(p.evaluate(&q(1), &q(1)), q(0));
    assert_eq!(p.evaluate_by_pairing(&q(1), &q(1)), q(0));
    // (ex + fy) divides P iff ω(P, (ex+fy)³) = 0.
    let p = raw_q([0, 3, 0, 0]);
    let x = LinearForm::x(&q(0));
    assert_eq!(p.omega(&BinaryCubic::cube_of(&x)), q(0));
    let x_plus_y = LinearForm::new(q(1), q(1));
    assert_ne!(p.omega(&BinaryCubic::cube_of(&x_plus_y)), q(0));
}

#[test]
fn evaluation_agrees_with_pairing_over_f7() {
    let z = f7(0);
    for p in all_cubics(7).iter().step_by(7) {
        for v1 in z.elements() {
            for v2 in z.elements() {
                assert_eq!(p.evaluate(&v1, &v2), p.evaluate_by_pairing(&v1, &v2));
            }
        }
    }
}

#[test]
fn moment_examples() {
    assert_eq!(raw_q([0, 3, 0, 0]).moment(), TracelessMatrix::new(q(0), q(0), q(2)));
    let (a, d) = (q(5), q(-3));
    let p = BinaryCubic::new(a.clone(), q(0), q(0), d.clone());
    assert_eq!(p.moment(), TracelessMatrix::new(a * d, q(0), q(0)));
    let (pp, qq) = (q(6), q(-7));
    let p = BinaryCubic::from_raw([q(1), q(0), pp.clone(), qq.clone()]);
    assert_eq!(
        p.moment(),
        TracelessMatrix::new(qq, -q(2) * pp.square() / q(9), -q(2) * pp / q(3))
    );
}

#[test]
fn b_mu_examples() {
    let p = raw_q([1, 0, 0, 1]);
    assert_eq!(p.b_mu(&p), TracelessMatrix::new(q(1), q(0), q(0)));
    let gen = BinaryCubic::new(q(2), q(3), q(5), q(7));
    let x3 = raw_q([1, 0, 0, 0]);
    assert_eq!(gen.b_mu(&x3), TracelessMatrix::new(qf(7, 2), q(0), q(-5)));
    let y3 = raw_q([0, 0, 0, 1]);
    assert_eq!(x3.b_mu(&y3), y3.b_mu(&x3));
}

#[test]
fn b_mu_is_polarization() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let p = rand_cubic_q(&mut rng);
        let r = rand_cubic_q(&mut rng);
        assert_eq!(p.b_mu(&p), p.moment());
        let lhs = p.add(&r).moment();
        let rhs = p.moment().add(&r.moment()).add(&p.b_mu(&r).scale(&q(2)));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn psi_examples() {
    assert_eq!(raw_q([0, 3, 0, 0]).psi(), raw_q([-6, 0, 0, 0]));
    let (a, d) = (q(2), q(5));
    let p = BinaryCubic::new(a.clone(), q(0), q(0), d.clone());
    let expect = BinaryCubic::new(-a.clone(), q(0), q(0), d.clone()).scale(&(q(3) * a * d));
    assert_eq!(p.psi(), expect);
    let p = raw_q([0, 1, 0, 0]);
    assert_eq!(p.psi(), BinaryCubic::from_raw([qf(-2, 9), q(0), q(0), q(0)]));
}

#[test]
fn qn_examples() {
    let p = BinaryCubic::new(q(3), q(0), q(0), q(4));
    assert_eq!(p.qn(), q(144));
    let (pp, qq) = (qf(2, 3), q(5));
    let p = BinaryCubic::from_raw([q(1), q(0), pp.clone(), qq.clone()]);
    assert_eq!(p.qn(), qq.square() + q(4) * pp.cube() / q(27));
    assert_eq!(raw_q([1, 0, 6, -7]).qn(), q(81));
}

#[test]
fn group_action_basics() {
    let p = raw_q([2, -1, 5, 7]);
    assert_eq!(p.act_group(&Matrix2::identity(&q(0))).unwrap(), p);
    let sing = Matrix2::new(q(1), q(1), q(1), q(1));
    assert_eq!(p.act_group(&sing), Err(Error::SingularMatrix));
    let g = Matrix2::new(q(2), q(0), q(0), q(1));
    assert_eq!(p.act_sl2(&g), Err(Error::NotSl2));
    assert_eq!(p.act_group(&Matrix2::weyl(&q(0))).unwrap(), p.j_involution());
}

#[test]
fn group_action_is_an_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let p = rand_cubic_fp(&mut rng, 7);
        let g = rand_gl_fp(&mut rng, 7);
        let h = rand_gl_fp(&mut rng, 7);
        let lhs = p.act_group(&g.mul(&h)).unwrap();
        let rhs = p.act_group(&h).unwrap().act_group(&g).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn equivariance_over_f7() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let p = rand_cubic_fp(&mut rng, 7);
        let r = rand_cubic_fp(&mut rng, 7);
        let g = rand_sl_fp(&mut rng, 7);
        let gp = p.act_group(&g).unwrap();
        assert_eq!(gp.moment(), p.moment().conjugate_by(&g).unwrap());
        assert_eq!(gp.psi(), p.psi().act_group(&g).unwrap());
        assert_eq!(gp.qn(), p.qn());
        assert_eq!(gp.omega(&r.act_group(&g).unwrap()), p.omega(&r));
    }
}

#[test]
fn gl_covariance_over_f7() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let p = rand_cubic_fp(&mut rng, 7);
        let g = rand_gl_fp(&mut rng, 7);
        let gp = p.act_group(&g).unwrap();
        let di = g.det().inv().unwrap();
        assert_eq!(gp.qn(), p.qn() * di.pow(6));
        assert_eq!(gp.moment(), p.moment().conjugate_by(&g).unwrap().scale(&di.pow(3)));
    }
}

#[test]
fn algebra_action_examples() {
    let h = TracelessMatrix::new(q(1), q(0), q(0));
    assert_eq!(raw_q([1, 0, 0, 0]).act_algebra(&h), raw_q([-3, 0, 0, 0]));
    assert_eq!(raw_q([0, 0, 0, 1]).act_algebra(&h), raw_q([0, 0, 0, 3]));
    let m = Matrix2::identity(&q(0));
    assert_eq!(raw_q([1, 0, 0, 0]).act_algebra_matrix(&m), Err(Error::NotTraceless));
    // x³ ↦ -3αx³ - 3βx²y; y³ ↦ -3γxy² + 3αy³.
    let xi = TracelessMatrix::new(q(2), q(5), q(7));
    assert_eq!(raw_q([1, 0, 0, 0]).act_algebra(&xi), raw_q([-6, -15, 0, 0]));
    assert_eq!(raw_q([0, 0, 0, 1]).act_algebra(&xi), raw_q([0, 0, -21, 6]));
}

#[test]
fn moment_characterization_and_infinitesimal_equivariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let p = rand_cubic_q(&mut rng);
        let xi = TracelessMatrix::new(rand_q(&mut rng), rand_q(&mut rng), rand_q(&mut rng));
        let xp = p.act_algebra(&xi);
        assert_eq!(p.moment().trace_product(&xi), -xp.omega(&p) / q(3));
        assert_eq!(p.b_mu(&xp).scale(&q(2)), xi.bracket(&p.moment()));
    }
}

#[test]
fn algebra_action_is_a_representation() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let p = rand_cubic_q(&mut rng);
        let x = TracelessMatrix::new(rand_q(&mut rng), rand_q(&mut rng), rand_q(&mut rng));
        let y = TracelessMatrix::new(rand_q(&mut rng), rand_q(&mut rng), rand_q(&mut rng));
        let lhs = p.act_algebra(&x.bracket(&y));
        let rhs = p.act_algebra(&y).act_algebra(&x).sub(&p.act_algebra(&x).act_algebra(&y));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn j_involution_examples() {
    assert_eq!(raw_q([1, 0, 0, 0]).j_involution(), raw_q([0, 0, 0, 1]));
    let p = raw_q([2, -1, 5, 7]);
    assert_eq!(p.j_involution().j_involution(), p.neg());
    let p = raw_q([0, 3, 0, 0]);
    assert_eq!(p.j_involution().moment(), p.moment().cofactor());
    assert_eq!(p.moment().cofactor(), TracelessMatrix::new(q(0), q(-2), q(0)));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let p = rand_cubic_q(&mut rng);
        assert_eq!(p.j_involution().moment(), p.moment().cofactor());
    }
}

#[test]
fn sym_cube_examples() {
    assert!(sym_cube_matrix(&TracelessMatrix::zero_like(&q(0))).is_zero());
    let m = TracelessMatrix::new(q(0), q(0), qf(2, 9));
    let qq = BinaryCubic::new(q(3), q(-2), q(5), q(11));
    let img = sym_cube_matrix(&m).apply(&qq);
    assert_eq!(img, BinaryCubic::new(-qf(2, 9).cube() * q(11), q(0), q(0), q(0)));
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let m = TracelessMatrix::new(rand_q(&mut rng), rand_q(&mut rng), rand_q(&mut rng));
        let phi = LinearForm::new(rand_q(&mut rng), rand_q(&mut rng));
        assert_eq!(
            sym_cube_matrix(&m).apply(&BinaryCubic::cube_of(&phi)),
            BinaryCubic::cube_of(&m.act_linear(&phi))
        );
    }
}

#[test]
fn psi_relations_exhaustive_over_f5() {
    let six = Fp::new(6, 5).unwrap();
    let nine = Fp::new(9, 5).unwrap();
    for p in all_cubics(5) {
        let psi = p.psi();
        let qn = p.qn();
        assert_eq!(p.omega(&psi), six * qn);
        assert_eq!(psi.psi(), p.scale(&-(nine * qn).square()));
        if p.moment().is_zero() {
            assert!(psi.is_zero());
        }
        if psi.is_zero() {
            assert!(qn.is_zero());
        }
    }
}

#[test]
fn psi_relations_random_over_q() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let p = rand_cubic_q(&mut rng);
        let qn = p.qn();
        assert_eq!(p.omega(&p.psi()), q(6) * qn.clone());
        assert_eq!(p.psi().psi(), p.scale(&-(q(9) * qn).square()));
    }
}
