//! Constructive search for a pinned pair `x, y ∈ E` with `|E · (y − x)| > q/2`.
//!
//! For `|E| > q` the search has two steps:
//!
//! 1. Pick the direction `θ*` minimising `Σ_t i(ℓ_{θ,t})²`. The total over all
//!    `q + 1` directions is `|E|² + q|E| < 2|E|²`, so the minimum is below
//!    `2|E|²/q`, and Cauchy–Schwarz over the `|E · v_θ*|` nonempty buckets gives
//!    `|E · v_θ*| > q/2`.
//! 2. Find two points of `E` whose difference is parallel to `v_θ*`: bucket `E`
//!    on a normal vector `n_θ*`. There are `q` buckets and more than `q` points,
//!    so some bucket holds two. Since `y − x = λ v_θ*`, `|E · (y − x)| = |E · v_θ*|`.
//!
//! Ties are broken by canonical order everywhere so the witness is reproducible.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::incidence::directional_second_moment_unchecked;
use crate::plane::{
    self, direction_of_unchecked, directions, directions_determined, dot_set_unchecked, normal_vector, same_field,
    Direction, Point, PointSet,
};
use crate::sumsets::ScalarSet;

/// A pair `x ≠ y` of `E` together with the pinned dot set `E · (y − x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinnedWitness {
    pub x: Point,
    pub y: Point,
    #[serde(rename = "theta")]
    pub direction: Direction,
    pub moment: u64,
    pub dot_count: usize,
    pub dot_values: ScalarSet,
}

/// Smallest integer strictly above `q/2`.
pub fn threshold(q: u32) -> usize {
    q as usize / 2 + 1
}

fn require_above_q(e: &PointSet) -> Result<()> {
    let q = e.spec().q();
    if e.len() as u64 > q as u64 {
        Ok(())
    } else {
        Err(Error::BelowThreshold { size: e.len(), q })
    }
}

/// Direction with the least directional second moment, ties to the canonically first.
pub fn best_direction(e: &PointSet) -> Result<(Direction, u64)> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(argmin_moment(e, directions(e.spec())).expect("at least one direction"))
}

fn argmin_moment(e: &PointSet, candidates: impl Iterator<Item = Direction>) -> Option<(Direction, u64)> {
    let mut best: Option<(Direction, u64)> = None;
    for theta in candidates {
        let m = directional_second_moment_unchecked(e, theta);
        if best.is_none_or(|(_, b)| m < b) {
            best = Some((theta, m));
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodVector {
    pub v: Point,
    #[serde(rename = "theta")]
    pub direction: Direction,
    pub moment: u64,
    pub dot_values: ScalarSet,
}

/// A member `v ∈ F` with `|E · v| > q/2`, found among the directions `F` determines.
pub fn good_vector(e: &PointSet, f: &PointSet) -> Result<GoodVector> {
    same_field(e.spec(), f.spec())?;
    require_above_q(e)?;
    let determined = directions_determined(f);
    let (theta, moment) = argmin_moment(e, determined.into_iter()).ok_or(Error::NoQualifyingDirection)?;
    let n = e.len() as u64;
    if e.spec().q() as u64 * moment >= 2 * n * n {
        return Err(Error::NoQualifyingDirection);
    }
    let v = f
        .iter()
        .find(|&v| !v.is_origin() && direction_of_unchecked(f.spec(), v).ok() == Some(theta))
        .expect("direction came from F");
    Ok(GoodVector {
        v,
        direction: theta,
        moment,
        dot_values: dot_set_unchecked(e, v),
    })
}

/// Two points `u ≠ w` of `E` with `u − w` a nonzero multiple of `v_θ`.
///
/// Points are bucketed on `u · n_θ`; the first bucket (by value) with two
/// members yields its first two members in canonical order.
pub fn pair_with_direction(e: &PointSet, theta: Direction) -> Result<(Point, Point)> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let spec = e.spec();
    if let Direction::Finite(t) = theta {
        spec.elem(t.code() as u64)?;
    }
    let n = normal_vector(spec, theta);
    let mut first: Vec<Option<Point>> = vec![None; spec.q() as usize];
    let mut second: Vec<Option<Point>> = vec![None; spec.q() as usize];
    for u in e.iter() {
        let b = plane::dot_unchecked(spec, u, n).code() as usize;
        match (first[b], second[b]) {
            (None, _) => first[b] = Some(u),
            (Some(_), None) => second[b] = Some(u),
            _ => {}
        }
    }
    first
        .into_iter()
        .zip(second)
        .find_map(|(a, b)| Some((a?, b?)))
        .ok_or(Error::DirectionNotDetermined(theta))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImpCheck {
    pub all_determined: bool,
    pub missing: Vec<Direction>,
}

/// Checks whether `E − E` determines every direction.
pub fn verify_imp(e: &PointSet) -> ImpCheck {
    let determined = directions_determined(&plane::difference_set(e));
    let missing: Vec<Direction> = directions(e.spec()).filter(|d| !determined.contains(d)).collect();
    ImpCheck {
        all_determined: missing.is_empty(),
        missing,
    }
}

/// Finds `x, y ∈ E` with `|E · (y − x)| ≥ ⌊q/2⌋ + 1`. Requires `|E| > q`.
pub fn pinned_pair(e: &PointSet) -> Result<PinnedWitness> {
    require_above_q(e)?;
    let spec = e.spec();
    let (direction, moment) = best_direction(e)?;
    let (x, y) = pair_with_direction(e, direction)?;
    let d = plane::point_sub(spec, y, x);
    debug_assert_eq!(direction_of_unchecked(spec, d).ok(), Some(direction));
    let dot_values = dot_set_unchecked(e, d);
    if dot_values.len() < threshold(spec.q()) {
        return Err(Error::Violation(format!(
            "pinned dot set of size {} in {} is not above q/2",
            dot_values.len(),
            spec
        )));
    }
    Ok(PinnedWitness {
        x,
        y,
        direction,
        moment,
        dot_count: dot_values.len(),
        dot_values,
    })
}

/// Smallest and largest `|E · (y − x)|` over all ordered pairs `x ≠ y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinnedExtremes {
    pub pairs: u64,
    pub min: usize,
    pub max: usize,
    pub argmax: Option<(Point, Point)>,
}

/// Exhaustive over all pairs: quadratic in `|E|` pairs times `|E|` dots.
/// Meant for small sets and sub-threshold exploration, not as the production search.
pub fn pinned_extremes(e: &PointSet) -> PinnedExtremes {
    let spec = e.spec();
    let mut out = PinnedExtremes {
        pairs: 0,
        min: usize::MAX,
        max: 0,
        argmax: None,
    };
    for x in e.iter() {
        for y in e.iter().filter(|&y| y != x) {
            let size = dot_set_unchecked(e, plane::point_sub(spec, y, x)).len();
            out.pairs += 1;
            out.min = out.min.min(size);
            if size > out.max || out.argmax.is_none() {
                out.max = size;
                out.argmax = Some((x, y));
            }
        }
    }
    if out.pairs == 0 {
        out.min = 0;
    }
    out
}
