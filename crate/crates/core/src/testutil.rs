//! Shared helpers for unit tests.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::cubics::{BinaryCubic, Matrix2};
use crate::fields::{Field, Fp, Rational};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn raw_q(p: [i64; 4]) -> BinaryCubic<Rational> {
    BinaryCubic::from_raw(p.map(q))
}

pub fn f7(v: u64) -> Fp {
    Fp::new(v, 7).unwrap()
}

pub fn all_cubics(p: u64) -> Vec<BinaryCubic<Fp>> {
    let z = Fp::zero(p).unwrap();
    let el = z.elements();
    let mut out = Vec::new();
    for a in &el {
        for b in &el {
            for c in &el {
                for d in &el {
                    out.push(BinaryCubic::new(*a, *b, *c, *d));
                }
            }
        }
    }
    out
}

pub fn rand_fp(rng: &mut ChaCha8Rng, p: u64) -> Fp {
    Fp::new(rng.gen_range(0..p), p).unwrap()
}

pub fn rand_cubic_fp(rng: &mut ChaCha8Rng, p: u64) -> BinaryCubic<Fp> {
    BinaryCubic::new(rand_fp(rng, p), rand_fp(rng, p), rand_fp(rng, p), rand_fp(rng, p))
}

pub fn rand_gl_fp(rng: &mut ChaCha8Rng, p: u64) -> Matrix2<Fp> {
    loop {
        let g = Matrix2::new(rand_fp(rng, p), rand_fp(rng, p), rand_fp(rng, p), rand_fp(rng, p));
        if !g.det().is_zero() {
            return g;
        }
    }
}

pub fn rand_sl_fp(rng: &mut ChaCha8Rng, p: u64) -> Matrix2<Fp> {
    let g = rand_gl_fp(rng, p);
    let di = g.det().inv().unwrap();
    Matrix2::new(g.a * di, g.b * di, g.c, g.d)
}

pub fn rand_q(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=9).into())
}

pub fn rand_cubic_q(rng: &mut ChaCha8Rng) -> BinaryCubic<Rational> {
    BinaryCubic::new(rand_q(rng), rand_q(rng), rand_q(rng), rand_q(rng))
}
