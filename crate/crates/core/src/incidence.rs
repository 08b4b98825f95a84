//! The incidence function `i(ℓ) = |ℓ ∩ E|` and its moments over all lines.
//!
//! Moments are exact integers. Per-direction sums are computed by bucketing
//! `E` on `u · v_θ`: bucket `t` holds exactly the points of `ℓ_{θ,t}`.

use std::collections::BTreeMap;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::Result;
use crate::plane::{self, direction_vector, directions, Direction, Line, PointSet};

/// `Σ_t i(ℓ_{θ,t})²` for each direction, plus their total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentProfile {
    pub per_direction: BTreeMap<Direction, u64>,
    pub total: u64,
}

impl Serialize for MomentProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            theta: &'a Direction,
            moment: u64,
        }
        let mut seq = s.serialize_seq(Some(self.per_direction.len()))?;
        for (theta, &moment) in &self.per_direction {
            seq.serialize_element(&Entry { theta, moment })?;
        }
        seq.end()
    }
}

pub fn incidence_count(e: &PointSet, line: Line) -> Result<usize> {
    let mut n = 0;
    for u in e.iter() {
        if plane::on_line(e.spec(), u, line)? {
            n += 1;
        }
    }
    Ok(n)
}

/// Sizes of the buckets `{u ∈ E : u · v = t}` indexed by `t`.
pub(crate) fn bucket_sizes(e: &PointSet, v: plane::Point) -> Vec<u64> {
    let spec = e.spec();
    let mut counts = vec![0u64; spec.q() as usize];
    for u in e.iter() {
        counts[plane::dot_unchecked(spec, u, v).code() as usize] += 1;
    }
    counts
}

pub fn directional_second_moment(e: &PointSet, theta: Direction) -> Result<u64> {
    if let Direction::Finite(t) = theta {
        e.spec().elem(t.code() as u64)?;
    }
    Ok(directional_second_moment_unchecked(e, theta))
}

pub(crate) fn directional_second_moment_unchecked(e: &PointSet, theta: Direction) -> u64 {
    bucket_sizes(e, direction_vector(theta))
        .into_iter()
        .map(|c| c * c)
        .sum()
}

pub fn moment_profile(e: &PointSet) -> MomentProfile {
    let per_direction: BTreeMap<_, _> = directions(e.spec())
        .map(|theta| (theta, directional_second_moment_unchecked(e, theta)))
        .collect();
    let total = per_direction.values().sum();
    MomentProfile { per_direction, total }
}

/// `Σ_ℓ i(ℓ)²` over all `q(q+1)` lines; equals `|E|² + q|E|`.
pub fn total_second_moment(e: &PointSet) -> u64 {
    moment_profile(e).total
}

/// `Σ_ℓ i(ℓ)` over all lines; equals `|E|(q+1)`.
pub fn first_moment(e: &PointSet) -> u64 {
    directions(e.spec())
        .map(|theta| bucket_sizes(e, direction_vector(theta)).into_iter().sum::<u64>())
        .sum()
}

/// Right-hand side of the second-moment identity.
pub fn expected_second_moment(size: u64, q: u64) -> u64 {
    size * size + q * size
}
