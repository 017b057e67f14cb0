//! Exhaustive orbit decomposition of the nonzero cubics over a small prime
//! field.

use std::collections::BTreeMap;
use std::thread;

use serde::Serialize;

use crate::cubics::{BinaryCubic, Matrix2};
use crate::error::{Error, Result};
use crate::fields::{Field, FieldDescriptor, Fp};
use crate::orbits::{classify, gl_invariant, invariant, GlInvariant, OrbitInvariant};

pub const DEFAULT_CENSUS_BOUND: u64 = 13;

#[derive(Debug, Clone, Serialize)]
pub struct CensusOrbit {
    /// Lexicographically least raw coefficient vector in the orbit.
    pub representative: BinaryCubic<Fp>,
    pub size: u64,
    pub stabilizer: u64,
    pub stratum: String,
    pub invariant: String,
    /// Index of the `Gl(2, q)`-orbit containing this `Sl(2, q)`-orbit.
    pub gl_orbit: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StratumCount {
    pub cubics: u64,
    pub sl_orbits: usize,
    pub gl_orbits: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusTotals {
    pub sl_orbits: usize,
    pub gl_orbits: usize,
    pub sl_nonzero_disc: usize,
    pub gl_nonzero_disc: usize,
}

/// Results of the consistency checks run alongside the enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct CensusChecks {
    /// Every invariant computed on an orbit equals the representative's.
    pub invariants_constant: bool,
    /// Distinct orbits of the same stratum have distinct invariants.
    pub invariants_separate: bool,
    /// The `Gl` invariant is constant on `Gl`-orbits and separates them.
    pub gl_invariants_consistent: bool,
    /// Orbit sizes add up to `q⁴ - 1`.
    pub sizes_sum: bool,
}

impl CensusChecks {
    pub fn all(&self) -> bool {
        self.invariants_constant
            && self.invariants_separate
            && self.gl_invariants_consistent
            && self.sizes_sum
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitCensus {
    pub field: FieldDescriptor,
    pub p: u64,
    pub sl_order: u64,
    pub orbits: Vec<CensusOrbit>,
    pub strata: BTreeMap<String, StratumCount>,
    pub totals: CensusTotals,
    pub checks: CensusChecks,
    /// `Sl`-orbit index of every cubic, indexed by [`cubic_index`]; the zero
    /// cubic maps to `usize::MAX`.
    #[serde(skip)]
    pub orbit_of: Vec<usize>,
}

impl OrbitCensus {
    pub fn sl_orbit(&self, p: &BinaryCubic<Fp>) -> Option<usize> {
        let i = self.orbit_of[cubic_index(p)];
        (i != usize::MAX).then_some(i)
    }

    pub fn gl_orbit(&self, p: &BinaryCubic<Fp>) -> Option<usize> {
        self.sl_orbit(p).map(|i| self.orbits[i].gl_orbit)
    }

    /// All nonzero cubics in index order.
    pub fn cubics(&self) -> impl Iterator<Item = BinaryCubic<Fp>> + '_ {
        (1..self.orbit_of.len()).map(move |i| cubic_at(i, self.p))
    }
}

/// Position of a cubic in the raw-lexicographic enumeration of `F_p⁴`.
pub fn cubic_index(c: &BinaryCubic<Fp>) -> usize {
    let p = c.a.modulus();
    c.raw().iter().fold(0u64, |acc, x| acc * p + x.value()) as usize
}

pub fn cubic_at(i: usize, p: u64) -> BinaryCubic<Fp> {
    let mut i = i as u64;
    let mut raw = [0u64; 4];
    for slot in raw.iter_mut().rev() {
        *slot = i % p;
        i /= p;
    }
    BinaryCubic::from_raw(raw.map(|v| Fp::new(v, p).expect("validated modulus")))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller index as root, so roots are lex-least members.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

fn images(gens: &[Matrix2<Fp>], p: u64, n: usize) -> Vec<Vec<usize>> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let chunk = n.div_ceil(workers);
    thread::scope(|s| {
        let handles: Vec<_> = (0..n)
            .step_by(chunk.max(1))
            .map(|start| {
                s.spawn(move || {
                    (start..(start + chunk).min(n))
                        .map(|i| {
                            let c = cubic_at(i, p);
                            gens.iter()
                                .map(|g| cubic_index(&c.act_group(g).expect("invertible generator")))
                                .collect()
                        })
                        .collect::<Vec<Vec<usize>>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("census worker")).collect()
    })
}

pub fn census(field: &FieldDescriptor) -> Result<OrbitCensus> {
    census_with_bound(field, DEFAULT_CENSUS_BOUND)
}

pub fn census_with_bound(field: &FieldDescriptor, bound: u64) -> Result<OrbitCensus> {
    let p = match field {
        FieldDescriptor::PrimeField { p } => *p,
        _ => return Err(Error::NotPrimeField),
    };
    if p > bound {
        return Err(Error::FieldTooLarge { p, bound });
    }
    let zero = Fp::zero(p)?;
    let one = zero.one_like();
    let n = (p as usize).pow(4);
    let sl_order = p * (p * p - 1);

    let sl_gens = [
        Matrix2::new(one, one, zero, one),
        Matrix2::new(one, zero, one, one),
        Matrix2::weyl(&zero),
    ];
    let mut uf = UnionFind::new(n);
    for (i, imgs) in images(&sl_gens, p, n).into_iter().enumerate() {
        for j in imgs {
            uf.union(i, j);
        }
    }

    let mut root_to_orbit = BTreeMap::new();
    let mut orbit_of = vec![usize::MAX; n];
    let mut sizes: Vec<u64> = Vec::new();
    for (i, slot) in orbit_of.iter_mut().enumerate().skip(1) {
        let r = uf.find(i);
        let next = root_to_orbit.len();
        let k = *root_to_orbit.entry(r).or_insert(next);
        if k == sizes.len() {
            sizes.push(0);
        }
        sizes[k] += 1;
        *slot = k;
    }
    let roots: Vec<usize> = {
        let mut v: Vec<(usize, usize)> = root_to_orbit.iter().map(|(r, k)| (*k, *r)).collect();
        v.sort();
        v.into_iter().map(|(_, r)| r).collect()
    };

    // Gl-orbits: fuse Sl-orbits under diag(t, 1), one per class of k*/det Sl.
    let mut gl_uf = UnionFind::new(roots.len());
    for t in zero.elements().into_iter().skip(1) {
        let g = Matrix2::diag(t, one);
        for (k, r) in roots.iter().enumerate() {
            let img = cubic_at(*r, p).act_group(&g)?;
            gl_uf.union(k, orbit_of[cubic_index(&img)]);
        }
    }
    let mut gl_ids = BTreeMap::new();
    let gl_orbit: Vec<usize> = (0..roots.len())
        .map(|k| {
            let r = gl_uf.find(k);
            let next = gl_ids.len();
            *gl_ids.entry(r).or_insert(next)
        })
        .collect();

    let reps: Vec<BinaryCubic<Fp>> = roots.iter().map(|r| cubic_at(*r, p)).collect();
    let invs: Vec<Option<OrbitInvariant<Fp>>> = reps.iter().map(|c| invariant(c).ok()).collect();

    let mut invariants_constant = invs.iter().all(Option::is_some);
    for (i, &k) in orbit_of.iter().enumerate().skip(1) {
        if invariant(&cubic_at(i, p)).ok() != invs[k] {
            invariants_constant = false;
        }
    }

    let mut orbits = Vec::with_capacity(reps.len());
    let mut strata: BTreeMap<String, StratumCount> = BTreeMap::new();
    let mut gl_seen: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (k, rep) in reps.iter().enumerate() {
        let size = sizes[k];
        if sl_order % size != 0 {
            return Err(Error::Internal(format!("orbit size {size} does not divide {sl_order}")));
        }
        let stratum = classify(rep).name().to_string();
        let entry = strata.entry(stratum.clone()).or_default();
        entry.cubics += size;
        entry.sl_orbits += 1;
        let seen = gl_seen.entry(stratum.clone()).or_default();
        if !seen.contains(&gl_orbit[k]) {
            seen.push(gl_orbit[k]);
            entry.gl_orbits += 1;
        }
        orbits.push(CensusOrbit {
            representative: rep.clone(),
            size,
            stabilizer: sl_order / size,
            stratum,
            invariant: invs[k].as_ref().map_or_else(|| "?".to_string(), |i| i.to_string()),
            gl_orbit: gl_orbit[k],
        });
    }

    let mut invariants_separate = true;
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if orbits[i].stratum == orbits[j].stratum && invs[i].is_some() && invs[i] == invs[j] {
                invariants_separate = false;
            }
        }
    }

    let gl_invs: Vec<Option<GlInvariant<Fp>>> = reps.iter().map(|c| gl_invariant(c).ok()).collect();
    let mut gl_invariants_consistent = gl_invs.iter().all(Option::is_some);
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if (gl_invs[i] == gl_invs[j]) != (gl_orbit[i] == gl_orbit[j]) {
                gl_invariants_consistent = false;
            }
        }
    }

    let generic = ["GenericSquare", "GenericNonSquare"];
    let count = |f: fn(&StratumCount) -> usize| -> usize {
        generic.iter().filter_map(|s| strata.get(*s)).map(f).sum()
    };
    let totals = CensusTotals {
        sl_orbits: orbits.len(),
        gl_orbits: gl_ids.len(),
        sl_nonzero_disc: count(|c| c.sl_orbits),
        gl_nonzero_disc: count(|c| c.gl_orbits),
    };
    let checks = CensusChecks {
        invariants_constant,
        invariants_separate,
        gl_invariants_consistent,
        sizes_sum: sizes.iter().sum::<u64>() == (n as u64) - 1,
    };
    Ok(OrbitCensus {
        field: field.clone(),
        p,
        sl_order,
        orbits,
        strata,
        totals,
        checks,
        orbit_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldDescriptor {
        FieldDescriptor::PrimeField { p }
    }

    #[test]
    fn indexing_round_trip() {
        for i in [0, 1, 77, 2400] {
            assert_eq!(cubic_index(&cubic_at(i, 7)), i);
        }
    }

    #[test]
    fn counts_f5() {
        let c = census(&fp(5)).unwrap();
        assert!(c.checks.all(), "{:?}", c.checks);
        assert_eq!(c.strata["GenericSquare"].sl_orbits, 2);
        assert_eq!(c.strata["GenericNonSquare"].sl_orbits, 6);
        assert_eq!(c.strata["GenericSquare"].gl_orbits, 1);
        assert_eq!(c.strata["GenericNonSquare"].gl_orbits, 2);
        assert_eq!((c.totals.sl_nonzero_disc, c.totals.gl_nonzero_disc), (8, 3));
        for o in &c.orbits {
            assert_eq!(o.size * o.stabilizer, 120);
        }
    }

    #[test]
    fn counts_f7() {
        let c = census(&fp(7)).unwrap();
        assert!(c.checks.all(), "{:?}", c.checks);
        assert_eq!(c.strata["GenericSquare"].sl_orbits, 9);
        assert_eq!(c.strata["GenericNonSquare"].sl_orbits, 3);
        assert_eq!(c.strata["GenericSquare"].gl_orbits, 6);
        assert_eq!(c.strata["GenericNonSquare"].gl_orbits, 3);
        assert_eq!((c.totals.sl_nonzero_disc, c.totals.gl_nonzero_disc), (12, 9));
        let t = &c.strata["TripleRoot"];
        assert_eq!((t.cubics, t.sl_orbits), (48, 3));
        let d = &c.strata["DoubleRoot"];
        assert_eq!((d.cubics, d.sl_orbits), (336, 1));
        for o in &c.orbits {
            assert_eq!(o.size * o.stabilizer, 336);
            if o.stratum == "TripleRoot" {
                assert_eq!((o.size, o.stabilizer), (16, 21));
            }
        }
    }

    #[test]
    fn representatives_are_lex_least() {
        let c = census(&fp(5)).unwrap();
        for p in c.cubics() {
            let k = c.sl_orbit(&p).unwrap();
            assert!(cubic_index(&c.orbits[k].representative) <= cubic_index(&p));
        }
    }

    #[test]
    fn rejects_bad_fields() {
        assert_eq!(census(&fp(17)).unwrap_err(), Error::FieldTooLarge { p: 17, bound: 13 });
        assert_eq!(census(&FieldDescriptor::Rationals).unwrap_err(), Error::NotPrimeField);
        assert!(census(&fp(9)).is_err());
        assert!(census_with_bound(&fp(17), 17).is_ok());
    }
}
