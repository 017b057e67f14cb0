use std::fmt;

use crate::error::{Error, Result};
use crate::fields::Field;

use super::Matrix2;

/// The linear form `ex + fy`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm<F> {
    pub e: F,
    pub f: F,
}

impl<F: Field> LinearForm<F> {
    pub fn new(e: F, f: F) -> Self {
        LinearForm { e, f }
    }

    pub fn x(like: &F) -> Self {
        LinearForm::new(like.one_like(), like.zero_like())
    }

    pub fn y(like: &F) -> Self {
        LinearForm::new(like.zero_like(), like.one_like())
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_zero() && self.f.is_zero()
    }

    /// `Ω(ex + fy, e'x + f'y) = ef' - fe'`.
    pub fn omega(&self, o: &Self) -> F {
        self.e.clone() * o.f.clone() - self.f.clone() * o.e.clone()
    }

    pub fn scale(&self, s: &F) -> Self {
        LinearForm::new(self.e.clone() * s.clone(), self.f.clone() * s.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        LinearForm::new(self.e.clone() + o.e.clone(), self.f.clone() + o.f.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        LinearForm::new(self.e.clone() - o.e.clone(), self.f.clone() - o.f.clone())
    }

    pub fn eval(&self, v1: &F, v2: &F) -> F {
        self.e.clone() * v1.clone() + self.f.clone() * v2.clone()
    }

    /// Raw coefficients of the product with another linear form.
    pub fn mul(&self, o: &Self) -> BinaryQuadratic<F> {
        BinaryQuadratic::new(
            self.e.clone() * o.e.clone(),
            self.e.clone() * o.f.clone() + self.f.clone() * o.e.clone(),
            self.f.clone() * o.f.clone(),
        )
    }

    pub fn act_group(&self, g: &Matrix2<F>) -> Result<Self> {
        let (sx, sy) = g.substitution()?;
        Ok(sx.scale(&self.e).add(&sy.scale(&self.f)))
    }

    /// Scale so that the leading nonzero coefficient is 1; returns the scalar
    /// removed, so that `self = scalar · monic`.
    pub fn monic(&self) -> Result<(F, Self)> {
        let lead = if self.e.is_zero() { self.f.clone() } else { self.e.clone() };
        let inv = lead.inv().map_err(|_| Error::ZeroCubic)?;
        Ok((lead, self.scale(&inv)))
    }
}

impl<F: Field> fmt::Display for LinearForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(&[self.e.clone(), self.f.clone()]))
    }
}

/// The quadratic form `a x² + b xy + c y²` in raw coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryQuadratic<F> {
    pub a: F,
    pub b: F,
    pub c: F,
}

impl<F: Field> BinaryQuadratic<F> {
    pub fn new(a: F, b: F, c: F) -> Self {
        BinaryQuadratic { a, b, c }
    }

    /// `b² - 4ac`.
    pub fn discriminant(&self) -> F {
        self.b.square() - self.a.from_i64_like(4) * self.a.clone() * self.c.clone()
    }

    pub fn coeffs(&self) -> Vec<F> {
        vec![self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn scale(&self, s: &F) -> Self {
        BinaryQuadratic::new(
            self.a.clone() * s.clone(),
            self.b.clone() * s.clone(),
            self.c.clone() * s.clone(),
        )
    }

    /// Raw coefficients `[x³, x²y, xy², y³]` of the product with a linear form.
    pub fn mul_linear(&self, l: &LinearForm<F>) -> [F; 4] {
        [
            self.a.clone() * l.e.clone(),
            self.a.clone() * l.f.clone() + self.b.clone() * l.e.clone(),
            self.b.clone() * l.f.clone() + self.c.clone() * l.e.clone(),
            self.c.clone() * l.f.clone(),
        ]
    }

    /// Split into two linear factors when the discriminant is a square.
    pub fn split(&self) -> Option<(F, LinearForm<F>, LinearForm<F>)> {
        let z = self.a.zero_like();
        if self.a.is_zero() {
            // y·(bx + cy)
            return Some((self.a.one_like(), LinearForm::y(&z), LinearForm::new(self.b.clone(), self.c.clone())));
        }
        let s = self.discriminant().sqrt()?;
        let two_a = self.a.from_i64_like(2) * self.a.clone();
        // a x² + b xy + c y² = a (x - r1 y)(x - r2 y), r = (-b ± s) / 2a.
        let r1 = (-self.b.clone() + s.clone()) / two_a.clone();
        let r2 = (-self.b.clone() - s) / two_a;
        let one = self.a.one_like();
        Some((
            self.a.clone(),
            LinearForm::new(one.clone(), -r1),
            LinearForm::new(one, -r2),
        ))
    }
}

impl<F: Field> fmt::Display for BinaryQuadratic<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(&self.coeffs()))
    }
}

/// Exact division of a homogeneous polynomial (raw coefficients from `x^n`
/// down to `y^n`) by a nonzero linear form; `None` if the remainder is nonzero.
pub fn divide_linear<F: Field>(p: &[F], l: &LinearForm<F>) -> Option<Vec<F>> {
    let n = p.len().checked_sub(1)?;
    if l.is_zero() {
        return None;
    }
    let mut q = Vec::with_capacity(n);
    if !l.e.is_zero() {
        let ei = l.e.inv().ok()?;
        let mut prev = p[0].zero_like();
        for pi in p.iter().take(n) {
            let qi = (pi.clone() - l.f.clone() * prev) * ei.clone();
            q.push(qi.clone());
            prev = qi;
        }
        if p[n] != l.f.clone() * prev {
            return None;
        }
    } else {
        if !p[0].is_zero() {
            return None;
        }
        let fi = l.f.inv().ok()?;
        for pi in p.iter().skip(1) {
            q.push(pi.clone() * fi.clone());
        }
    }
    Some(q)
}

fn monomial(deg: usize, i: usize) -> String {
    let xp = deg - i;
    let yp = i;
    let part = |v: &str, p: usize| match p {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{p}"),
    };
    let parts: Vec<String> = [part("x", xp), part("y", yp)]
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    parts.join("*")
}

/// Human-readable form of a homogeneous polynomial given by raw coefficients
/// from `x^n` down to `y^n`.
pub fn format_poly<F: Field>(coeffs: &[F]) -> String {
    let deg = coeffs.len() - 1;
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
            _ => (false, s.clone()),
        };
        let body = if body.contains(['+', '-', '/']) && deg > 0 {
            format!("({body})")
        } else {
            body
        };
        let mono = monomial(deg, i);
        let term = if body == "1" { mono } else { format!("{body}*{mono}") };
        if out.is_empty() {
            out = if neg { format!("-{term}") } else { term };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}
