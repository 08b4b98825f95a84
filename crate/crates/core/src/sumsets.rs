//! Sets of field elements and their sum and product sets, plus the
//! consequences of the pinned-pair search for `(E + E) · (E − E)`.

use serde::ser::Serializer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffield::{make_field, Elem, FieldSpec, MAX_ORDER};
use crate::pinned::{pinned_pair, PinnedWitness};
use crate::plane::{self, same_field, PointSet};

/// A duplicate-free set of elements of one field, kept in increasing code order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarSet {
    spec: FieldSpec,
    members: Vec<Elem>,
}

impl Serialize for ScalarSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.members)
    }
}

impl ScalarSet {
    /// Range-checks every element; repeated elements collapse.
    pub fn new(spec: &FieldSpec, elems: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut hit = vec![false; spec.q() as usize];
        for e in elems {
            spec.elem(e.code() as u64)?;
            hit[e.code() as usize] = true;
        }
        Ok(Self::from_indicator(spec, &hit))
    }

    pub(crate) fn from_indicator(spec: &FieldSpec, hit: &[bool]) -> Self {
        let members = hit
            .iter()
            .enumerate()
            .filter(|(_, &h)| h)
            .map(|(i, _)| Elem::from_code(i as u32))
            .collect();
        ScalarSet {
            spec: spec.clone(),
            members,
        }
    }

    pub fn empty(spec: &FieldSpec) -> Self {
        ScalarSet {
            spec: spec.clone(),
            members: Vec::new(),
        }
    }

    pub fn full(spec: &FieldSpec) -> Self {
        ScalarSet {
            spec: spec.clone(),
            members: spec.elements().collect(),
        }
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

    pub fn is_full(&self) -> bool {
        self.members.len() == self.spec.q() as usize
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Elem> + Clone + '_ {
        self.members.iter().copied()
    }

    pub fn elems(&self) -> &[Elem] {
        &self.members
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn negation(&self) -> ScalarSet {
        let spec = &self.spec;
        let mut members: Vec<Elem> = self.iter().map(|a| spec.neg(a)).collect();
        members.sort_unstable();
        ScalarSet {
            spec: spec.clone(),
            members,
        }
    }

    /// `−A = A`.
    pub fn is_symmetric(&self) -> bool {
        self.negation() == *self
    }
}

fn combine(s: &ScalarSet, t: &ScalarSet, op: impl Fn(Elem, Elem) -> Elem) -> Result<ScalarSet> {
    same_field(s.spec(), t.spec())?;
    let q = s.spec().q() as usize;
    let mut hit = vec![false; q];
    let mut count = 0;
    'outer: for a in s.iter() {
        for b in t.iter() {
            let c = op(a, b).code() as usize;
            if !hit[c] {
                hit[c] = true;
                count += 1;
                if count == q {
                    break 'outer;
                }
            }
        }
    }
    Ok(ScalarSet::from_indicator(s.spec(), &hit))
}

/// `S + T = {s + t}`.
pub fn sumset(s: &ScalarSet, t: &ScalarSet) -> Result<ScalarSet> {
    let spec = s.spec().clone();
    combine(s, t, |a, b| spec.add(a, b))
}

/// `A · B = {a b}`.
pub fn productset(a: &ScalarSet, b: &ScalarSet) -> Result<ScalarSet> {
    let spec = a.spec().clone();
    combine(a, b, |x, y| spec.mul(x, y))
}

/// `S + S + ... + S` with `n` summands.
pub fn iterated_sumset(s: &ScalarSet, n: usize) -> Result<ScalarSet> {
    if n < 1 {
        return Err(Error::ZeroSummands);
    }
    let mut acc = s.clone();
    for _ in 1..n {
        if acc.is_full() || acc.is_empty() {
            break;
        }
        acc = sumset(&acc, s)?;
    }
    Ok(acc)
}

/// Whether `S + S` is the whole field.
pub fn complete_pair_check(s: &ScalarSet) -> bool {
    sumset(s, s).expect("same field").is_full()
}

/// Outcome of [`full_field_pinned_sum`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinnedSum {
    pub witness: PinnedWitness,
    /// `(E + E) · (y − x)`, computed directly; always the whole field.
    pub cover: ScalarSet,
}

impl PinnedSum {
    pub fn pair(&self) -> (plane::Point, plane::Point) {
        (self.witness.x, self.witness.y)
    }
}

/// Finds `x, y ∈ E` with `(E + E) · (y − x) = F_q`. Requires `|E| > q`.
pub fn full_field_pinned_sum(e: &PointSet) -> Result<PinnedSum> {
    let witness = pinned_pair(e)?;
    if !complete_pair_check(&witness.dot_values) {
        return Err(Error::Violation("pinned dot set S has S + S != F".into()));
    }
    let spec = e.spec();
    let d = plane::point_sub(spec, witness.y, witness.x);
    let q = spec.q() as usize;
    let mut hit = vec![false; q];
    let mut count = 0;
    'outer: for (i, u) in e.iter().enumerate() {
        for v in e.points()[i..].iter().copied() {
            let c = plane::dot_unchecked(spec, plane::point_add(spec, u, v), d).code() as usize;
            if !hit[c] {
                hit[c] = true;
                count += 1;
                if count == q {
                    break 'outer;
                }
            }
        }
    }
    if count != q {
        return Err(Error::Violation(format!(
            "(E+E)·(y-x) covers {count} of {q} field elements"
        )));
    }
    Ok(PinnedSum {
        witness,
        cover: ScalarSet::from_indicator(spec, &hit),
    })
}

/// `F_p × F_p` inside `F_{p²}`: `q` points whose pinned dot sets all have size `p = √q`.
pub fn subfield_example(p: u64) -> Result<PointSet> {
    if p.checked_mul(p).is_none_or(|q| q > MAX_ORDER) {
        return Err(Error::FieldTooLarge { p, k: 2 });
    }
    let spec = make_field(p, 2)?;
    let a = ScalarSet::new(&spec, spec.subfield_elements(1)?)?;
    PointSet::product(&a, &a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlibichukReport {
    pub size: usize,
    /// `(E + E) · (y − x) = F_q` for the pinned pair of `E = A × A`.
    pub pinned_cover: bool,
    /// Eight-fold sumset of `AA` is `F_q`.
    pub eightfold: bool,
}

impl GlibichukReport {
    pub fn passed(&self) -> bool {
        self.pinned_cover && self.eightfold
    }
}

/// Runs both routes to `AA + AA + ... + AA = F_q` (eight summands) for a
/// symmetric `A` with `|A| > √q`.
pub fn glibichuk_report(a: &ScalarSet) -> Result<GlibichukReport> {
    if !a.is_symmetric() {
        return Err(Error::AsymmetricSet);
    }
    let q = a.spec().q();
    let n = a.len() as u64;
    if n * n <= q as u64 {
        return Err(Error::SetTooSmall { size: a.len(), q });
    }
    let e = PointSet::product(a, a)?;
    let pinned_cover = match full_field_pinned_sum(&e) {
        Ok(sum) => sum.cover.is_full(),
        Err(Error::Violation(_)) => false,
        Err(other) => return Err(other),
    };
    let eightfold = iterated_sumset(&productset(a, a)?, 8)?.is_full();
    Ok(GlibichukReport {
        size: a.len(),
        pinned_cover,
        eightfold,
    })
}

pub fn glibichuk_check(a: &ScalarSet) -> Result<bool> {
    Ok(glibichuk_report(a)?.passed())
}

/// `{x ∈ F* : x^m = 1}` for `m | q − 1`.
pub fn mult_subgroup(spec: &FieldSpec, m: u64) -> Result<ScalarSet> {
    let order = spec.q() as u64 - 1;
    if m == 0 || !order.is_multiple_of(m) {
        return Err(Error::NotDivisor { d: m, n: order });
    }
    ScalarSet::new(spec, spec.elements().skip(1).filter(|&x| spec.pow(x, m) == Elem::ONE))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AaStats {
    pub size: usize,
    pub card_aa_aa: usize,
    /// `min(q, ⌊|A|³/q⌋)`, a reference curve only.
    pub hi_bound: u64,
    /// `AA = A`.
    pub subgroup: bool,
}

pub fn aa_plus_aa_stats(a: &ScalarSet) -> Result<AaStats> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let q = a.spec().q() as u64;
    let aa = productset(a, a)?;
    let n = a.len() as u64;
    Ok(AaStats {
        size: a.len(),
        card_aa_aa: sumset(&aa, &aa)?.len(),
        hi_bound: q.min(n * n * n / q),
        subgroup: aa == *a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pinned::pinned_extremes;
    use crate::plane::Point;
    use proptest::prelude::*;

    fn set(spec: &FieldSpec, codes: &[u32]) -> ScalarSet {
        ScalarSet::new(spec, codes.iter().map(|&c| Elem::from_code(c))).unwrap()
    }

    fn codes(s: &ScalarSet) -> Vec<u32> {
        s.iter().map(Elem::code).collect()
    }

    fn pt(x: u32, y: u32) -> Point {
        Point::from_codes(x, y)
    }

    #[test]
    fn sumset_examples() {
        let f5 = make_field(5, 1).unwrap();
        let s = set(&f5, &[0, 1, 2]);
        assert!(sumset(&s, &ScalarSet::empty(&f5)).unwrap().is_empty());
        assert_eq!(codes(&sumset(&s, &s).unwrap()), vec![0, 1, 2, 3, 4]);
        assert_eq!(sumset(&s, &set(&f5, &[0])).unwrap(), s);
        let f7 = make_field(7, 1).unwrap();
        assert!(matches!(sumset(&s, &set(&f7, &[0])), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn productset_examples() {
        let f7 = make_field(7, 1).unwrap();
        let a = set(&f7, &[1, 2, 4]);
        assert_eq!(productset(&a, &set(&f7, &[1])).unwrap(), a);
        assert_eq!(codes(&productset(&a, &set(&f7, &[0])).unwrap()), vec![0]);
        assert_eq!(productset(&a, &a).unwrap(), a);
    }

    #[test]
    fn iterated_sumset_examples() {
        let f5 = make_field(5, 1).unwrap();
        let s = set(&f5, &[0, 1]);
        assert_eq!(iterated_sumset(&s, 1).unwrap(), s);
        assert_eq!(codes(&iterated_sumset(&s, 4).unwrap()), vec![0, 1, 2, 3, 4]);
        assert_eq!(codes(&iterated_sumset(&s, 3).unwrap()), vec![0, 1, 2, 3]);
        assert!(matches!(iterated_sumset(&s, 0), Err(Error::ZeroSummands)));
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(
            codes(&iterated_sumset(&set(&f7, &[1, 2, 4]), 2).unwrap()),
            vec![1, 2, 3, 4, 5, 6]
        );
    }

    #[test]
    fn complete_pair_examples() {
        let f5 = make_field(5, 1).unwrap();
        assert!(complete_pair_check(&set(&f5, &[0, 1, 2])));
        assert!(!complete_pair_check(&set(&f5, &[0, 1])));
        assert!(complete_pair_check(&ScalarSet::full(&f5)));
    }

    #[test]
    fn complete_pair_exhaustive_small() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1)] {
            let f = make_field(p, k).unwrap();
            let q = f.q();
            for mask in 0u32..(1 << q) {
                let s = ScalarSet::new(&f, (0..q).filter(|&i| mask >> i & 1 == 1).map(Elem::from_code)).unwrap();
                if 2 * s.len() > q as usize {
                    assert!(complete_pair_check(&s), "{:?}", codes(&s));
                }
            }
        }
    }

    #[test]
    fn full_field_pinned_sum_examples() {
        let f2 = make_field(2, 1).unwrap();
        let sum = full_field_pinned_sum(&PointSet::full_plane(&f2)).unwrap();
        assert!(sum.cover.is_full());

        let f3 = make_field(3, 1).unwrap();
        let e = PointSet::new(&f3, [pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)]).unwrap();
        let sum = full_field_pinned_sum(&e).unwrap();
        assert_eq!(sum.pair(), (pt(0, 0), pt(1, 1)));
        assert!(sum.witness.dot_values.is_full());

        let f4 = make_field(2, 2).unwrap();
        let four = PointSet::new(&f4, (0..4).map(|i| pt(i, i))).unwrap();
        assert!(matches!(
            full_field_pinned_sum(&four),
            Err(Error::BelowThreshold { .. })
        ));
    }

    #[test]
    fn subfield_sharpness() {
        for p in [2u64, 3, 5] {
            let e = subfield_example(p).unwrap();
            let q = e.spec().q() as usize;
            assert_eq!(q, (p * p) as usize);
            assert_eq!(e.len(), q);
            let ext = pinned_extremes(&e);
            assert_eq!(ext.pairs, (q * (q - 1)) as u64);
            assert_eq!((ext.min, ext.max), (p as usize, p as usize));
        }
        let e = subfield_example(2).unwrap();
        assert_eq!(e.points(), &[pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1)]);
        assert!(subfield_example(4).is_err());
        assert!(matches!(subfield_example(1031), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn glibichuk_examples() {
        let f9 = make_field(3, 2).unwrap();
        // X is code 3, -X is code 6; -1 is code 2
        let a = set(&f9, &[1, 2, 3, 6]);
        assert!(a.is_symmetric());
        assert!(glibichuk_check(&a).unwrap());

        let f5 = make_field(5, 1).unwrap();
        assert!(matches!(
            glibichuk_check(&set(&f5, &[1, 4])),
            Err(Error::SetTooSmall { .. })
        ));
        assert!(matches!(
            glibichuk_check(&set(&f5, &[0, 1, 2])),
            Err(Error::AsymmetricSet)
        ));
    }

    #[test]
    fn mult_subgroup_examples() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(codes(&mult_subgroup(&f7, 3).unwrap()), vec![1, 2, 4]);
        assert_eq!(codes(&mult_subgroup(&f7, 1).unwrap()), vec![1]);
        assert!(matches!(mult_subgroup(&f7, 4), Err(Error::NotDivisor { d: 4, n: 6 })));
        for (p, k) in [(2, 4), (3, 2), (13, 1), (5, 2)] {
            let f = make_field(p, k).unwrap();
            let order = f.q() as u64 - 1;
            for m in (1..=order).filter(|m| order.is_multiple_of(*m)) {
                let h = mult_subgroup(&f, m).unwrap();
                assert_eq!(h.len() as u64, m);
                assert_eq!(productset(&h, &h).unwrap(), h);
            }
        }
    }

    #[test]
    fn aa_stats_examples() {
        let f7 = make_field(7, 1).unwrap();
        let st = aa_plus_aa_stats(&set(&f7, &[1, 2, 4])).unwrap();
        assert_eq!((st.card_aa_aa, st.subgroup, st.hi_bound), (6, true, 3));
        assert_eq!(aa_plus_aa_stats(&set(&f7, &[0])).unwrap().card_aa_aa, 1);
        assert_eq!(aa_plus_aa_stats(&ScalarSet::full(&f7)).unwrap().card_aa_aa, 7);
        assert!(matches!(aa_plus_aa_stats(&ScalarSet::empty(&f7)), Err(Error::EmptySet)));
    }

    proptest! {
        #[test]
        fn complete_pair_above_half(mask in any::<u32>(), pick in 0usize..3) {
            let (p, k) = [(3u64, 2u32), (11, 1), (13, 1)][pick];
            let f = make_field(p, k).unwrap();
            let q = f.q();
            let s = ScalarSet::new(&f, (0..q).filter(|&i| mask >> i & 1 == 1).map(Elem::from_code)).unwrap();
            if 2 * s.len() > q as usize {
                prop_assert!(complete_pair_check(&s));
            }
        }

        #[test]
        fn iterated_sumset_monotone_with_zero(mask in any::<u16>(), n in 1usize..6) {
            let f = make_field(13, 1).unwrap();
            let s = ScalarSet::new(&f, (0..13).filter(|&i| i == 0 || mask >> i & 1 == 1).map(Elem::from_code)).unwrap();
            let a = iterated_sumset(&s, n).unwrap();
            let b = iterated_sumset(&s, n + 1).unwrap();
            prop_assert!(a.iter().all(|x| b.contains(x)));
        }
    }
}
