//! Points, directions and lines of the affine plane `F_q^2`.
//!
//! A direction is `θ ∈ F_q ∪ {∞}` with direction vector `v_θ = (1, θ)` or
//! `(0, 1)` for `∞`. Lines are labelled `ℓ_{θ,t} = {w : w · v_θ = t}`; every
//! one of the `q(q+1)` lines gets exactly one label.
//!
//! Points and directions do not carry their field. Functions that take a
//! [`FieldSpec`] alongside loose points range-check them and report
//! [`Error::ElementOutOfRange`]; sets carry their field and mixing two fields
//! is an [`Error::FieldMismatch`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{Elem, FieldSpec};
use crate::sumsets::ScalarSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Elem,
    pub y: Elem,
}

impl Point {
    pub const ORIGIN: Point = Point {
        x: Elem::ZERO,
        y: Elem::ZERO,
    };

    pub const fn new(x: Elem, y: Elem) -> Self {
        Point { x, y }
    }

    /// Shorthand for building a point from raw codes.
    pub const fn from_codes(x: u32, y: u32) -> Self {
        Point {
            x: Elem::from_code(x),
            y: Elem::from_code(y),
        }
    }

    pub fn is_origin(self) -> bool {
        self == Point::ORIGIN
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (x, y) = <(u32, u32)>::deserialize(d)?;
        Ok(Point::from_codes(x, y))
    }
}

/// `θ ∈ F_q ∪ {∞}`. The derived order is the canonical one: finite
/// directions by code, then infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Finite(Elem),
    Infinity,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Finite(t) => write!(f, "{t}"),
            Direction::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" => Ok(Direction::Infinity),
            other => other
                .parse::<u32>()
                .map(|c| Direction::Finite(Elem::from_code(c)))
                .map_err(|_| Error::Parse {
                    line: 1,
                    msg: format!("bad direction {other:?}"),
                }),
        }
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Direction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// The line `{w : w · v_θ = t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Line {
    pub theta: Direction,
    pub t: Elem,
}

impl Line {
    pub const fn new(theta: Direction, t: Elem) -> Self {
        Line { theta, t }
    }
}

/// A duplicate-free set of points of one plane, kept in canonical order
/// (by `x` code, then `y` code).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    spec: FieldSpec,
    members: Vec<Point>,
}

impl PointSet {
    /// Builds a set, rejecting out-of-range coordinates and repeated points.
    pub fn new(spec: &FieldSpec, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut members: Vec<Point> = points.into_iter().collect();
        for &pt in &members {
            check_point(spec, pt)?;
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint { point: w[0], line: 0 });
        }
        Ok(PointSet {
            spec: spec.clone(),
            members,
        })
    }

    /// Builds a set from points already known to lie in the plane, dropping repeats.
    pub(crate) fn collect_dedup(spec: &FieldSpec, points: impl IntoIterator<Item = Point>) -> Self {
        let mut members: Vec<Point> = points.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        PointSet {
            spec: spec.clone(),
            members,
        }
    }

    pub fn empty(spec: &FieldSpec) -> Self {
        PointSet {
            spec: spec.clone(),
            members: Vec::new(),
        }
    }

    /// Every point of `F_q^2`.
    pub fn full_plane(spec: &FieldSpec) -> Self {
        let members = spec
            .elements()
            .flat_map(|x| spec.elements().map(move |y| Point::new(x, y)))
            .collect();
        PointSet {
            spec: spec.clone(),
            members,
        }
    }

    /// The Cartesian product `A × B`.
    pub fn product(a: &ScalarSet, b: &ScalarSet) -> Result<Self> {
        same_field(a.spec(), b.spec())?;
        let members = a.iter().flat_map(|x| b.iter().map(move |y| Point::new(x, y))).collect();
        Ok(PointSet {
            spec: a.spec().clone(),
            members,
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.members
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Point> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, pt: Point) -> bool {
        self.members.binary_search(&pt).is_ok()
    }
}

pub(crate) fn same_field(a: &FieldSpec, b: &FieldSpec) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch {
            left: a.designation(),
            right: b.designation(),
        })
    }
}

pub(crate) fn check_point(spec: &FieldSpec, pt: Point) -> Result<Point> {
    spec.elem(pt.x.code() as u64)?;
    spec.elem(pt.y.code() as u64)?;
    Ok(pt)
}

/// All `q + 1` directions in canonical order.
pub fn directions(spec: &FieldSpec) -> impl Iterator<Item = Direction> + '_ {
    spec.elements()
        .map(Direction::Finite)
        .chain(std::iter::once(Direction::Infinity))
}

/// All `q(q+1)` lines, grouped by direction in canonical order.
pub fn lines(spec: &FieldSpec) -> impl Iterator<Item = Line> + '_ {
    directions(spec).flat_map(move |theta| spec.elements().map(move |t| Line::new(theta, t)))
}

pub(crate) fn dot_unchecked(spec: &FieldSpec, u: Point, v: Point) -> Elem {
    spec.add(spec.mul(u.x, v.x), spec.mul(u.y, v.y))
}

pub(crate) fn point_add(spec: &FieldSpec, u: Point, v: Point) -> Point {
    Point::new(spec.add(u.x, v.x), spec.add(u.y, v.y))
}

pub(crate) fn point_sub(spec: &FieldSpec, u: Point, v: Point) -> Point {
    Point::new(spec.sub(u.x, v.x), spec.sub(u.y, v.y))
}

#[cfg(test)]
pub(crate) fn scale(spec: &FieldSpec, lambda: Elem, v: Point) -> Point {
    Point::new(spec.mul(lambda, v.x), spec.mul(lambda, v.y))
}

/// `u₁v₁ + u₂v₂`.
pub fn dot(spec: &FieldSpec, u: Point, v: Point) -> Result<Elem> {
    check_point(spec, u)?;
    check_point(spec, v)?;
    Ok(dot_unchecked(spec, u, v))
}

pub fn direction_vector(theta: Direction) -> Point {
    match theta {
        Direction::Finite(t) => Point::new(Elem::ONE, t),
        Direction::Infinity => Point::new(Elem::ZERO, Elem::ONE),
    }
}

/// A vector orthogonal to `v_θ`: `(θ, -1)` for finite `θ`, `(1, 0)` for `∞`.
pub fn normal_vector(spec: &FieldSpec, theta: Direction) -> Point {
    match theta {
        Direction::Finite(t) => Point::new(t, spec.neg(Elem::ONE)),
        Direction::Infinity => Point::new(Elem::ONE, Elem::ZERO),
    }
}

/// The `θ` with `v = λ v_θ` for some nonzero `λ`.
pub fn direction_of(spec: &FieldSpec, v: Point) -> Result<Direction> {
    check_point(spec, v)?;
    direction_of_unchecked(spec, v)
}

pub(crate) fn direction_of_unchecked(spec: &FieldSpec, v: Point) -> Result<Direction> {
    if v.is_origin() {
        Err(Error::ZeroVector)
    } else if v.x.is_zero() {
        Ok(Direction::Infinity)
    } else {
        Ok(Direction::Finite(spec.div(v.y, v.x)?))
    }
}

pub fn on_line(spec: &FieldSpec, w: Point, line: Line) -> Result<bool> {
    check_point(spec, w)?;
    check_direction(spec, line.theta)?;
    spec.elem(line.t.code() as u64)?;
    Ok(dot_unchecked(spec, w, direction_vector(line.theta)) == line.t)
}

fn check_direction(spec: &FieldSpec, theta: Direction) -> Result<()> {
    if let Direction::Finite(t) = theta {
        spec.elem(t.code() as u64)?;
    }
    Ok(())
}

/// The unique line through two distinct points.
pub fn line_through(spec: &FieldSpec, u: Point, w: Point) -> Result<Line> {
    check_point(spec, u)?;
    check_point(spec, w)?;
    if u == w {
        return Err(Error::EqualPoints(u));
    }
    // v_θ must be orthogonal to d = w - u: with d = (a, b), a + bθ = 0.
    let d = point_sub(spec, w, u);
    let theta = if d.y.is_zero() {
        Direction::Infinity
    } else {
        Direction::Finite(spec.neg(spec.div(d.x, d.y)?))
    };
    let t = dot_unchecked(spec, u, direction_vector(theta));
    Ok(Line::new(theta, t))
}

/// The `q` points of a line, in canonical order.
pub fn line_points(spec: &FieldSpec, line: Line) -> Vec<Point> {
    let mut pts: Vec<Point> = match line.theta {
        // x + θy = t
        Direction::Finite(theta) => spec
            .elements()
            .map(|y| Point::new(spec.sub(line.t, spec.mul(theta, y)), y))
            .collect(),
        Direction::Infinity => spec.elements().map(|x| Point::new(x, line.t)).collect(),
    };
    pts.sort_unstable();
    pts
}

/// `E · v = {u · v : u ∈ E}`.
pub fn dot_set(e: &PointSet, v: Point) -> Result<ScalarSet> {
    let spec = e.spec();
    check_point(spec, v)?;
    Ok(dot_set_unchecked(e, v))
}

pub(crate) fn dot_set_unchecked(e: &PointSet, v: Point) -> ScalarSet {
    let spec = e.spec();
    let mut hit = vec![false; spec.q() as usize];
    for u in e.iter() {
        hit[dot_unchecked(spec, u, v).code() as usize] = true;
    }
    ScalarSet::from_indicator(spec, &hit)
}

/// `E − E = {u − w : u, w ∈ E}`.
pub fn difference_set(e: &PointSet) -> PointSet {
    let spec = e.spec();
    PointSet::collect_dedup(
        spec,
        e.iter().flat_map(|u| e.iter().map(move |w| point_sub(spec, u, w))),
    )
}

/// Directions `θ` with some nonzero multiple of `v_θ` in `F`.
pub fn directions_determined(f: &PointSet) -> BTreeSet<Direction> {
    f.iter()
        .filter(|v| !v.is_origin())
        .map(|v| direction_of_unchecked(f.spec(), v).expect("nonzero vector"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;
    use proptest::prelude::*;

    fn pt(x: u32, y: u32) -> Point {
        Point::from_codes(x, y)
    }

    fn fin(c: u32) -> Direction {
        Direction::Finite(Elem::from_code(c))
    }

    fn running_example() -> PointSet {
        let f3 = make_field(3, 1).unwrap();
        PointSet::new(&f3, [pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)]).unwrap()
    }

    fn codes(s: &ScalarSet) -> Vec<u32> {
        s.iter().map(Elem::code).collect()
    }

    #[test]
    fn dot_examples() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(dot(&f5, pt(1, 2), pt(3, 4)).unwrap().code(), 1);
        assert_eq!(dot(&f5, pt(4, 3), Point::ORIGIN).unwrap(), Elem::ZERO);
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(dot(&f4, pt(2, 1), pt(2, 3)).unwrap(), Elem::ZERO);
        assert!(matches!(
            dot(&f4, pt(4, 1), pt(0, 0)),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn direction_vectors() {
        assert_eq!(direction_vector(fin(0)), pt(1, 0));
        assert_eq!(direction_vector(Direction::Infinity), pt(0, 1));
        assert_eq!(direction_vector(fin(2)), pt(1, 2));
    }

    #[test]
    fn direction_of_examples() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(direction_of(&f7, pt(0, 5)).unwrap(), Direction::Infinity);
        assert_eq!(direction_of(&f7, pt(2, 6)).unwrap(), fin(3));
        assert!(matches!(direction_of(&f7, pt(0, 0)), Err(Error::ZeroVector)));
    }

    #[test]
    fn on_line_examples() {
        let f3 = make_field(3, 1).unwrap();
        for theta in directions(&f3) {
            assert!(on_line(&f3, Point::ORIGIN, Line::new(theta, Elem::ZERO)).unwrap());
        }
        assert!(on_line(&f3, pt(1, 1), Line::new(fin(1), Elem::from_code(2))).unwrap());
        assert!(!on_line(&f3, pt(1, 1), Line::new(fin(1), Elem::ZERO)).unwrap());
    }

    #[test]
    fn line_through_examples() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(
            line_through(&f3, pt(0, 0), pt(0, 1)).unwrap(),
            Line::new(fin(0), Elem::ZERO)
        );
        assert_eq!(
            line_through(&f3, pt(0, 0), pt(1, 0)).unwrap(),
            Line::new(Direction::Infinity, Elem::ZERO)
        );
        assert!(matches!(
            line_through(&f3, pt(1, 1), pt(1, 1)),
            Err(Error::EqualPoints(_))
        ));
    }

    #[test]
    fn dot_set_examples() {
        let e = running_example();
        assert_eq!(codes(&dot_set(&e, pt(1, 1)).unwrap()), vec![0, 1, 2]);
        assert_eq!(codes(&dot_set(&e, pt(1, 0)).unwrap()), vec![0, 1]);
        assert_eq!(codes(&dot_set(&e, Point::ORIGIN).unwrap()), vec![0]);
        let empty = PointSet::empty(e.spec());
        assert!(dot_set(&empty, pt(1, 1)).unwrap().is_empty());
    }

    #[test]
    fn difference_set_examples() {
        let f5 = make_field(5, 1).unwrap();
        let one = PointSet::new(&f5, [pt(1, 2)]).unwrap();
        assert_eq!(difference_set(&one).points(), &[Point::ORIGIN]);
        let two = PointSet::new(&f5, [pt(0, 0), pt(1, 2)]).unwrap();
        assert_eq!(difference_set(&two).points(), &[pt(0, 0), pt(1, 2), pt(4, 3)]);
    }

    #[test]
    fn directions_determined_examples() {
        let f5 = make_field(5, 1).unwrap();
        let f = PointSet::new(&f5, [pt(1, 0), pt(0, 2)]).unwrap();
        assert_eq!(
            directions_determined(&f).into_iter().collect::<Vec<_>>(),
            vec![fin(0), Direction::Infinity]
        );
        let origin = PointSet::new(&f5, [Point::ORIGIN]).unwrap();
        assert!(directions_determined(&origin).is_empty());
        let f2 = make_field(2, 1).unwrap();
        let nonzero = PointSet::new(&f2, [pt(0, 1), pt(1, 0), pt(1, 1)]).unwrap();
        assert_eq!(directions_determined(&nonzero).len(), 3);
    }

    #[test]
    fn duplicate_and_range_rejected() {
        let f3 = make_field(3, 1).unwrap();
        assert!(matches!(
            PointSet::new(&f3, [pt(1, 1), pt(1, 1)]),
            Err(Error::DuplicatePoint { .. })
        ));
        assert!(PointSet::new(&f3, [pt(3, 1)]).is_err());
    }

    #[test]
    fn canonical_order() {
        let f3 = make_field(3, 1).unwrap();
        let e = PointSet::new(&f3, [pt(2, 0), pt(0, 2), pt(1, 1), pt(0, 1)]).unwrap();
        assert_eq!(e.points(), &[pt(0, 1), pt(0, 2), pt(1, 1), pt(2, 0)]);
        assert!(fin(0) < fin(2) && fin(2) < Direction::Infinity);
    }

    #[test]
    fn plane_combinatorics_exhaustive() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = make_field(p, k).unwrap();
            let q = f.q() as usize;
            let all: Vec<Line> = lines(&f).collect();
            let point_sets: BTreeSet<Vec<Point>> = all.iter().map(|&l| line_points(&f, l)).collect();
            assert_eq!(point_sets.len(), q * (q + 1));
            for &l in &all {
                let pts = line_points(&f, l);
                assert_eq!(pts.len(), q);
                assert!(pts.iter().all(|&w| on_line(&f, w, l).unwrap()));
            }
            for w in PointSet::full_plane(&f).iter() {
                let n = all.iter().filter(|&&l| on_line(&f, w, l).unwrap()).count();
                assert_eq!(n, q + 1);
            }
        }
    }

    #[test]
    fn unique_line_through_pairs() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let f = make_field(p, k).unwrap();
            let plane = PointSet::full_plane(&f);
            let all: Vec<Line> = lines(&f).collect();
            for u in plane.iter() {
                for w in plane.iter().filter(|&w| w != u) {
                    let through: Vec<_> = all
                        .iter()
                        .filter(|&&l| on_line(&f, u, l).unwrap() && on_line(&f, w, l).unwrap())
                        .collect();
                    assert_eq!(through.len(), 1);
                    assert_eq!(*through[0], line_through(&f, u, w).unwrap());
                }
            }
        }
    }

    #[test]
    fn direction_round_trip() {
        for (p, k) in [(2, 2), (3, 2), (7, 1)] {
            let f = make_field(p, k).unwrap();
            for theta in directions(&f) {
                for lambda in f.elements().skip(1) {
                    let v = scale(&f, lambda, direction_vector(theta));
                    assert_eq!(direction_of(&f, v).unwrap(), theta);
                }
                assert_eq!(
                    dot_unchecked(&f, direction_vector(theta), normal_vector(&f, theta)),
                    Elem::ZERO
                );
            }
        }
    }

    proptest! {
        #[test]
        fn dot_set_size_is_scale_invariant(
            bits in prop::collection::vec(any::<bool>(), 49),
            vx in 0u32..7, vy in 0u32..7, lambda in 1u32..7,
        ) {
            let f = make_field(7, 1).unwrap();
            let e = PointSet::new(&f, (0..49u32).filter(|&i| bits[i as usize]).map(|i| pt(i / 7, i % 7))).unwrap();
            let v = pt(vx, vy);
            let sv = scale(&f, Elem::from_code(lambda), v);
            prop_assert_eq!(dot_set(&e, v).unwrap().len(), dot_set(&e, sv).unwrap().len());
        }

        #[test]
        fn dot_is_symmetric_and_bilinear(a in 0u32..9, b in 0u32..9, c in 0u32..9, d in 0u32..9, s in 0u32..9, t in 0u32..9) {
            let f = make_field(3, 2).unwrap();
            let (u, v, w) = (pt(a, b), pt(c, d), pt(s, t));
            prop_assert_eq!(dot(&f, u, v).unwrap(), dot(&f, v, u).unwrap());
            let lhs = dot(&f, point_add(&f, u, w), v).unwrap();
            let rhs = f.add(dot(&f, u, v).unwrap(), dot(&f, w, v).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn difference_set_closed_under_negation(bits in prop::collection::vec(any::<bool>(), 25)) {
            let f = make_field(5, 1).unwrap();
            let e = PointSet::new(&f, (0..25u32).filter(|&i| bits[i as usize]).map(|i| pt(i / 5, i % 5))).unwrap();
            let d = difference_set(&e);
            prop_assert!(d.len() <= e.len() * e.len());
            if !e.is_empty() {
                prop_assert!(d.contains(Point::ORIGIN));
            }
            for v in d.iter() {
                prop_assert!(d.contains(point_sub(&f, Point::ORIGIN, v)));
            }
        }
    }
}
