//! Seeded, reproducible sampling of point sets and scalar sets.
//!
//! Every sample is a pure function of `(seed, trial index, field, stream)`.
//! The generator is ChaCha8 (`rand_chacha`) keyed with 32 bytes:
//!
//! ```text
//! seed: u64 LE | trial: u64 LE | p: u64 LE | k: u32 LE | stream tag: u32 LE
//! ```
//!
//! Bounded draws take `next_u64` and reject values at or above the largest
//! multiple of the bound, then reduce modulo the bound. Samples are
//! Fisher–Yates prefixes over the canonical enumeration of the population
//! (cells `x * q + y` for points, codes for scalars). The swap table is
//! sparse, so memory is proportional to the sample size, with the same output
//! as a dense shuffle.

use std::collections::HashMap;

use itertools::Itertools;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::ffield::{Elem, FieldSpec};
use crate::plane::{Point, PointSet};
use crate::sumsets::ScalarSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u32)]
pub enum Stream {
    Points = 0,
    Scalars = 1,
    Symmetric = 2,
}

pub fn rng_for(spec: &FieldSpec, seed: u64, trial: u64, stream: Stream) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&trial.to_le_bytes());
    key[16..24].copy_from_slice(&(spec.p() as u64).to_le_bytes());
    key[24..28].copy_from_slice(&spec.k().to_le_bytes());
    key[28..32].copy_from_slice(&(stream as u32).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Uniform draw from `0..n`, `n > 0`.
pub fn below(rng: &mut impl RngCore, n: u64) -> u64 {
    debug_assert!(n > 0);
    let limit = u64::MAX - u64::MAX % n;
    loop {
        let x = rng.next_u64();
        if x < limit {
            return x % n;
        }
    }
}

/// First `take` entries of a Fisher–Yates shuffle of `0..population`.
pub fn shuffled_prefix(rng: &mut impl RngCore, population: u64, take: u64) -> Vec<u64> {
    debug_assert!(take <= population);
    let mut swapped: HashMap<u64, u64> = HashMap::new();
    let mut out = Vec::with_capacity(take as usize);
    for i in 0..take {
        let j = i + below(rng, population - i);
        let at_j = *swapped.get(&j).unwrap_or(&j);
        let at_i = *swapped.get(&i).unwrap_or(&i);
        swapped.insert(j, at_i);
        out.push(at_j);
    }
    out
}

/// `n` distinct points drawn uniformly from `F_q^2`.
pub fn sample_point_set(spec: &FieldSpec, n: u64, seed: u64, trial: u64) -> Result<PointSet> {
    let q = spec.q() as u64;
    let cells = q * q;
    if n > cells {
        return Err(Error::SampleTooLarge { n, cells });
    }
    let mut rng = rng_for(spec, seed, trial, Stream::Points);
    let pts = shuffled_prefix(&mut rng, cells, n)
        .into_iter()
        .map(|c| Point::from_codes((c / q) as u32, (c % q) as u32));
    PointSet::new(spec, pts)
}

/// `n` distinct field elements drawn uniformly.
pub fn sample_scalar_set(spec: &FieldSpec, n: u64, seed: u64, trial: u64) -> Result<ScalarSet> {
    let q = spec.q() as u64;
    if n > q {
        return Err(Error::SampleTooLarge { n, cells: q });
    }
    let mut rng = rng_for(spec, seed, trial, Stream::Scalars);
    ScalarSet::new(
        spec,
        shuffled_prefix(&mut rng, q, n)
            .into_iter()
            .map(|c| Elem::from_code(c as u32)),
    )
}

/// How symmetric sets (`−A = A`) of a given size decompose into negation orbits.
///
/// In odd characteristic `{0}` is the only singleton orbit and the others are
/// pairs `{x, −x}`, so the parity of the size decides whether `0` is present.
/// In characteristic 2 every orbit is a singleton.
#[derive(Clone, Debug)]
pub struct SymmetricPlan {
    spec: FieldSpec,
    fixed: Vec<Elem>,
    pool: Vec<Vec<Elem>>,
    choose: usize,
}

impl SymmetricPlan {
    pub fn new(spec: &FieldSpec, size: usize) -> Result<Self> {
        let q = spec.q() as usize;
        let too_large = || Error::SampleTooLarge {
            n: size as u64,
            cells: q as u64,
        };
        if size > q {
            return Err(too_large());
        }
        if spec.p() == 2 {
            return Ok(SymmetricPlan {
                spec: spec.clone(),
                fixed: Vec::new(),
                pool: spec.elements().map(|x| vec![x]).collect(),
                choose: size,
            });
        }
        let pool: Vec<Vec<Elem>> = spec
            .elements()
            .skip(1)
            .filter(|&x| x < spec.neg(x))
            .map(|x| vec![x, spec.neg(x)])
            .collect();
        let fixed = if size % 2 == 1 { vec![Elem::ZERO] } else { Vec::new() };
        Ok(SymmetricPlan {
            spec: spec.clone(),
            choose: (size - fixed.len()) / 2,
            fixed,
            pool,
        })
    }

    /// Number of symmetric sets of the planned size, saturating.
    pub fn count(&self) -> u128 {
        let (n, k) = (self.pool.len() as u128, self.choose as u128);
        (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
    }

    fn assemble<'a>(&self, orbits: impl IntoIterator<Item = &'a Vec<Elem>>) -> ScalarSet {
        let elems = self.fixed.iter().copied().chain(orbits.into_iter().flatten().copied());
        ScalarSet::new(&self.spec, elems).expect("orbit members lie in the field")
    }

    /// Every symmetric set of the planned size, in lexicographic orbit order.
    pub fn enumerate(&self) -> impl Iterator<Item = ScalarSet> + '_ {
        self.pool
            .iter()
            .combinations(self.choose)
            .map(move |orbits| self.assemble(orbits))
    }

    pub fn sample(&self, seed: u64, trial: u64) -> ScalarSet {
        let mut rng = rng_for(&self.spec, seed, trial, Stream::Symmetric);
        let picks = shuffled_prefix(&mut rng, self.pool.len() as u64, self.choose as u64);
        self.assemble(picks.into_iter().map(|i| &self.pool[i as usize]))
    }
}

pub fn sample_symmetric_set(spec: &FieldSpec, size: usize, seed: u64, trial: u64) -> Result<ScalarSet> {
    Ok(SymmetricPlan::new(spec, size)?.sample(seed, trial))
}

/// Symmetric sets of `size` for an exhaustive-or-sampled sweep: all of them when
/// there are at most `limit`, otherwise `samples` seeded draws.
pub fn symmetric_corpus(spec: &FieldSpec, size: usize, limit: u128, samples: u64, seed: u64) -> Result<Vec<ScalarSet>> {
    let plan = SymmetricPlan::new(spec, size)?;
    if plan.count() <= limit {
        Ok(plan.enumerate().collect())
    } else {
        Ok((0..samples).map(|t| plan.sample(seed, t)).collect())
    }
}
