//! Exact arithmetic in finite fields `F_q`, `q = p^k`.
//!
//! Elements are stored as canonical codes: the polynomial `c_0 + c_1 X + ... +
//! c_{k-1} X^{k-1}` over `F_p` is encoded as `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`,
//! so codes run over `0..q` and `0`, `1` are the additive and multiplicative
//! identities.
//!
//! The modulus for `F_{p^k}` is the monic irreducible polynomial of degree `k`
//! whose low coefficient tuple `(c_{k-1}, ..., c_0)` is lexicographically
//! smallest. Multiplication goes through log/antilog tables built once when the
//! field is constructed; [`FieldSpec::mul_by_reduction`] keeps the schoolbook
//! multiply-then-reduce route available for cross-checking.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field cardinality.
pub const MAX_ORDER: u64 = 1 << 20;

/// A field element in canonical integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps a raw code without range checking; see [`FieldSpec::elem`].
    pub const fn from_code(code: u32) -> Self {
        Elem(code)
    }

    pub const fn code(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Elem> for u32 {
    fn from(e: Elem) -> u32 {
        e.0
    }
}

struct Tables {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Elem,
    /// `exp[i] = g^i`, stored for `i < 2(q-1)` so products of logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A concrete finite field. Cheap to clone; two specs with the same `(p, k)`
/// describe the same field with the same encoding.
#[derive(Clone)]
pub struct FieldSpec(Arc<Tables>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.k == other.0.k
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.0.p, self.0.k).hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.0.p)
            .field("k", &self.0.k)
            .field("q", &self.0.q)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.0.p, self.0.k)
    }
}

/// Builds the canonical field with `p^k` elements.
pub fn make_field(p: u64, k: u32) -> Result<FieldSpec> {
    FieldSpec::new(p, k)
}

/// Parses a field designation of the form `"p,k"`.
pub fn parse_designation(s: &str) -> Result<(u64, u32)> {
    let bad = || Error::Parse {
        line: 1,
        msg: format!("expected field designation \"p,k\", got {s:?}"),
    };
    let (p, k) = s.trim().split_once(',').ok_or_else(bad)?;
    let p = p.trim().parse::<u64>().map_err(|_| bad())?;
    let k = k.trim().parse::<u32>().map_err(|_| bad())?;
    Ok((p, k))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Polynomials over `F_p` as little-endian coefficient vectors.
mod poly {
    /// Remainder of `a` modulo the monic polynomial `m`.
    pub(super) fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let p = p as u64;
        let dm = m.len() - 1;
        let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
        while r.len() > dm {
            let lead = r.pop().unwrap() % p;
            if lead == 0 {
                continue;
            }
            let shift = r.len() - dm;
            for (i, &mc) in m[..dm].iter().enumerate() {
                let sub = lead * mc as u64 % p;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.into_iter().map(|c| (c % p) as u32).collect()
    }

    /// Monic polynomial of degree `d` with low coefficients given by the base-`p` digits of `code`.
    pub(super) fn monic_from_code(code: u64, d: u32, p: u32) -> Vec<u32> {
        let mut v = super::digits(code, d, p);
        v.push(1);
        v
    }

    /// Exhaustive trial division by every monic polynomial of degree `1..=deg/2`.
    pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = (f.len() - 1) as u32;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d);
            for code in 0..count {
                let g = monic_from_code(code, d, p);
                if rem(f, &g, p).iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }
}

fn digits(mut code: u64, k: u32, p: u32) -> Vec<u32> {
    let p = p as u64;
    (0..k)
        .map(|_| {
            let c = code % p;
            code /= p;
            c as u32
        })
        .collect()
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0u64, |acc, &c| acc * p as u64 + c as u64) as u32
}

impl FieldSpec {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 1 {
            return Err(Error::InvalidDegree(k));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, k })?;
        let (p, q) = (p as u32, q as u32);

        let modulus = (0..q as u64)
            .map(|code| poly::monic_from_code(code, k, p))
            .find(|f| poly::is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");

        let mut tables = Tables {
            p,
            k,
            q,
            modulus,
            generator: Elem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
        };

        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (1..q)
            .map(Elem)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| pow_by_reduction(&tables, g, order / r) != Elem::ONE)
            })
            .expect("the multiplicative group of a finite field is cyclic");

        let n = (q - 1) as usize;
        let mut exp = Vec::with_capacity(2 * n);
        let mut log = vec![0u32; q as usize];
        let mut acc = Elem::ONE;
        for i in 0..n {
            exp.push(acc.0);
            log[acc.0 as usize] = i as u32;
            acc = mul_by_reduction(&tables, acc, generator);
        }
        exp.extend_from_within(..);
        tables.generator = generator;
        tables.exp = exp;
        tables.log = log;
        Ok(FieldSpec(Arc::new(tables)))
    }

    /// Parses `"p,k"` and builds the field.
    pub fn from_designation(s: &str) -> Result<Self> {
        let (p, k) = parse_designation(s)?;
        Self::new(p, k)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Coefficients `c_0..=c_k` of the monic modulus, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The smallest-code generator of the multiplicative group.
    pub fn generator(&self) -> Elem {
        self.0.generator
    }

    pub fn designation(&self) -> String {
        self.to_string()
    }

    /// Range-checked element constructor.
    pub fn elem(&self, code: u64) -> Result<Elem> {
        if code < self.0.q as u64 {
            Ok(Elem(code as u32))
        } else {
            Err(Error::ElementOutOfRange { code, q: self.0.q })
        }
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.0 < self.0.q
    }

    /// All elements in increasing code order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + Clone {
        (0..self.0.q).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.contains(a) && self.contains(b));
        let t = &*self.0;
        if t.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if t.k == 1 {
            return Elem((a.0 + b.0) % t.p);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % t.p + y % t.p) % t.p) * place;
            x /= t.p;
            y /= t.p;
            place = place.wrapping_mul(t.p);
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        debug_assert!(self.contains(a));
        let t = &*self.0;
        if t.p == 2 {
            return a;
        }
        if t.k == 1 {
            return Elem((t.p - a.0) % t.p);
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((t.p - x % t.p) % t.p) * place;
            x /= t.p;
            place = place.wrapping_mul(t.p);
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let t = &*self.0;
        Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    /// Multiplication by polynomial product and reduction modulo the modulus.
    pub fn mul_by_reduction(&self, a: Elem, b: Elem) -> Elem {
        mul_by_reduction(&self.0, a, b)
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        debug_assert!(self.contains(a));
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let t = &*self.0;
        let n = t.q - 1;
        Ok(Elem(t.exp[((n - t.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` by square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The `p^d` elements fixed by `x -> x^{p^d}`, i.e. the subfield of order `p^d`.
    pub fn subfield_elements(&self, d: u32) -> Result<Vec<Elem>> {
        if d == 0 || !self.0.k.is_multiple_of(d) {
            return Err(Error::NotDivisor {
                d: d as u64,
                n: self.0.k as u64,
            });
        }
        let e = (self.0.p as u64).pow(d);
        Ok(self.elements().filter(|&x| self.pow(x, e) == x).collect())
    }
}

fn mul_by_reduction(t: &Tables, a: Elem, b: Elem) -> Elem {
    let (p, k) = (t.p, t.k);
    let da = digits(a.0 as u64, k, p);
    let db = digits(b.0 as u64, k, p);
    let mut prod = vec![0u64; (2 * k - 1) as usize];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    let r = if k == 1 {
        vec![prod[0] % p]
    } else {
        poly::rem(&prod, &t.modulus, p)
    };
    Elem(encode(&r, p))
}

fn pow_by_reduction(t: &Tables, a: Elem, mut e: u64) -> Elem {
    let mut base = a;
    let mut acc = Elem::ONE;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_by_reduction(t, acc, base);
        }
        base = mul_by_reduction(t, base, base);
        e >>= 1;
    }
    acc
}
