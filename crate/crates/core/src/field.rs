//! Exact arithmetic over the supported coefficient fields: prime fields
//! F_p, extensions F_{p^k} presented by a monic irreducible modulus, and
//! arbitrary-precision rationals.
//!
//! A [`FieldSpec`] is an immutable, cheaply clonable description of a field;
//! a [`FieldElement`] carries its spec so that mixed-field operations are
//! caught immediately. All arithmetic is exact; no floating point anywhere.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Prime,
    Extension,
    Rationals,
}

#[derive(Debug, PartialEq, Eq)]
struct FieldSpecInner {
    kind: FieldKind,
    /// Characteristic; 0 for the rationals.
    p: u64,
    /// Extension degree; 1 for prime fields and rationals.
    k: u32,
    /// Monic irreducible modulus of degree k over F_p, low-to-high
    /// coefficients, length k+1. Empty unless kind = Extension.
    modulus: Vec<u64>,
}

/// Description of a coefficient field. Clones share the same backing data.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldSpecInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({self})")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime => write!(f, "F_{}", self.0.p),
            FieldKind::Extension => write!(f, "F_{}^{}", self.0.p, self.0.k),
        }
    }
}

const MAX_PRIME: u64 = 1 << 32;

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in [2u64, 3, 5] {
        if n == d {
            return true;
        }
        if n % d == 0 {
            return false;
        }
    }
    let mut d = 7u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// --- modular scalar arithmetic (residues always reduced below p) ---

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invm(a: u64, p: u64) -> u64 {
    // extended Euclid on signed words
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inverse of non-unit mod {p}");
    s0.rem_euclid(p as i128) as u64
}

// --- dense F_p[z] helpers used for modulus validation and extension
// arithmetic (low-to-high coefficient vectors, trailing zeros trimmed) ---

pub(crate) fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn fp_deg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = subm(x, y, p);
    }
    fp_trim(&mut out);
    out
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y, p), p);
        }
    }
    fp_trim(&mut out);
    out
}

/// Remainder of a by monic-or-not b (b nonzero).
pub(crate) fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = fp_deg(b).expect("division by zero polynomial");
    let lc_inv = invm(b[db], p);
    let mut r = a.to_vec();
    while let Some(dr) = fp_deg(&r) {
        if dr < db {
            break;
        }
        let c = mulm(r[dr], lc_inv, p);
        let shift = dr - db;
        for (j, &bc) in b.iter().enumerate() {
            r[shift + j] = subm(r[shift + j], mulm(c, bc, p), p);
        }
        fp_trim(&mut r);
    }
    r
}

pub(crate) fn fp_monic(v: &[u64], p: u64) -> Vec<u64> {
    match fp_deg(v) {
        None => Vec::new(),
        Some(d) => {
            let inv = invm(v[d], p);
            v.iter().map(|&c| mulm(c, inv, p)).collect()
        }
    }
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = fp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

/// Extended Euclid in F_p[z]: returns (monic gcd, s, t) with s·a + t·b = gcd.
fn fp_xgcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        // long division with quotient tracking
        let db = fp_deg(&r1).unwrap();
        let lc_inv = invm(r1[db], p);
        let mut q = Vec::new();
        let mut r = r0.clone();
        while let Some(dr) = fp_deg(&r) {
            if dr < db {
                break;
            }
            let c = mulm(r[dr], lc_inv, p);
            let shift = dr - db;
            if q.len() < shift + 1 {
                q.resize(shift + 1, 0);
            }
            q[shift] = addm(q[shift], c, p);
            for (j, &bc) in r1.iter().enumerate() {
                r[shift + j] = subm(r[shift + j], mulm(c, bc, p), p);
            }
            fp_trim(&mut r);
        }
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    let d = fp_deg(&r0).expect("xgcd of two zero polynomials");
    let inv = invm(r0[d], p);
    let scale = |v: &[u64]| v.iter().map(|&c| mulm(c, inv, p)).collect::<Vec<_>>();
    (scale(&r0), scale(&s0), scale(&t0))
}

/// base^e mod m in F_p[z].
fn fp_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = fp_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_rem(&fp_mul(&acc, &b, p), m, p);
        }
        b = fp_rem(&fp_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Rabin irreducibility test for a monic polynomial of degree ≥ 1 over F_p:
/// z^(p^k) ≡ z mod m, and gcd(z^(p^(k/r)) − z, m) = 1 for each prime r | k.
fn fp_is_irreducible(m: &[u64], p: u64) -> bool {
    let k = match fp_deg(m) {
        Some(k) if k >= 1 => k,
        _ => return false,
    };
    if k == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let frob_tower = |steps: usize| {
        let mut t = fp_rem(&x, m, p);
        for _ in 0..steps {
            t = fp_powmod(&t, p, m, p);
        }
        t
    };
    if frob_tower(k) != fp_rem(&x, m, p) {
        return false;
    }
    let mut rest = k;
    let mut r = 2usize;
    let mut prime_divs = Vec::new();
    while r * r <= rest {
        if rest % r == 0 {
            prime_divs.push(r);
            while rest % r == 0 {
                rest /= r;
            }
        }
        r += 1;
    }
    if rest > 1 {
        prime_divs.push(rest);
    }
    for r in prime_divs {
        let t = frob_tower(k / r);
        let diff = fp_sub(&t, &fp_rem(&x, m, p), p);
        if fp_deg(&fp_gcd(&diff, m, p)) != Some(0) {
            return false;
        }
    }
    true
}

impl FieldSpec {
    pub fn rationals() -> FieldSpec {
        FieldSpec(Arc::new(FieldSpecInner {
            kind: FieldKind::Rationals,
            p: 0,
            k: 1,
            modulus: Vec::new(),
        }))
    }

    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p >= MAX_PRIME {
            return Err(Error::Refused(format!("prime {p} exceeds the supported bound {MAX_PRIME}")));
        }
        if !is_prime_u64(p) {
            return Err(Error::NonPrime(p));
        }
        Ok(FieldSpec(Arc::new(FieldSpecInner {
            kind: FieldKind::Prime,
            p,
            k: 1,
            modulus: Vec::new(),
        })))
    }

    /// F_{p^k} with an explicit monic irreducible modulus (low-to-high
    /// coefficients over F_p, length k+1).
    pub fn extension(p: u64, k: u32, modulus: &[u64]) -> Result<FieldSpec> {
        if p >= MAX_PRIME {
            return Err(Error::Refused(format!("prime {p} exceeds the supported bound {MAX_PRIME}")));
        }
        if !is_prime_u64(p) {
            return Err(Error::NonPrime(p));
        }
        if k < 1 {
            return Err(Error::BadModulus("extension degree must be at least 1".into()));
        }
        let mut m: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        fp_trim(&mut m);
        if fp_deg(&m) != Some(k as usize) {
            return Err(Error::BadModulus(format!("modulus must have degree {k}")));
        }
        if m[k as usize] != 1 {
            return Err(Error::BadModulus("modulus must be monic".into()));
        }
        if !fp_is_irreducible(&m, p) {
            return Err(Error::BadModulus("modulus is reducible".into()));
        }
        Ok(FieldSpec(Arc::new(FieldSpecInner {
            kind: FieldKind::Extension,
            p,
            k,
            modulus: m,
        })))
    }

    /// F_{p^k} with the default modulus: the monic irreducible of degree k
    /// whose coefficient vector (c_0, …, c_{k−1}) is smallest when read as a
    /// base-p integer. Deterministic, so certificates reproduce across runs.
    pub fn extension_default(p: u64, k: u32) -> Result<FieldSpec> {
        if !is_prime_u64(p) {
            return Err(Error::NonPrime(p));
        }
        if k < 1 {
            return Err(Error::BadModulus("extension degree must be at least 1".into()));
        }
        let total = (p as u128).checked_pow(k).ok_or_else(|| {
            Error::Refused("default modulus search space exceeds u128".into())
        })?;
        for idx in 0..total {
            let mut m = vec![0u64; k as usize + 1];
            let mut v = idx;
            for c in m.iter_mut().take(k as usize) {
                *c = (v % p as u128) as u64;
                v /= p as u128;
            }
            m[k as usize] = 1;
            if fp_is_irreducible(&m, p) {
                return FieldSpec::extension(p, k, &m);
            }
        }
        Err(Error::Internal(format!("no irreducible of degree {k} over F_{p}")))
    }

    pub fn kind(&self) -> FieldKind {
        self.0.kind
    }

    /// Field characteristic: p for the finite kinds, 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn ext_degree(&self) -> u32 {
        self.0.k
    }

    /// Modulus coefficients (extension fields only), low-to-high.
    pub fn modulus(&self) -> Option<&[u64]> {
        match self.0.kind {
            FieldKind::Extension => Some(&self.0.modulus),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.0.kind != FieldKind::Rationals
    }

    /// Number of elements q = p^k for finite fields; None for the rationals.
    pub fn order(&self) -> Option<u128> {
        match self.0.kind {
            FieldKind::Rationals => None,
            _ => (self.0.p as u128).checked_pow(self.0.k),
        }
    }

    pub fn zero(&self) -> FieldElement {
        let value = match self.0.kind {
            FieldKind::Prime => Value::Prime(0),
            FieldKind::Extension => Value::Ext(vec![0; self.0.k as usize]),
            FieldKind::Rationals => Value::Rat(BigRational::zero()),
        };
        FieldElement { spec: self.clone(), value }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        let value = match self.0.kind {
            FieldKind::Prime => Value::Prime((n as i128).rem_euclid(self.0.p as i128) as u64),
            FieldKind::Extension => {
                let mut v = vec![0; self.0.k as usize];
                v[0] = (n as i128).rem_euclid(self.0.p as i128) as u64;
                Value::Ext(v)
            }
            FieldKind::Rationals => Value::Rat(BigRational::from_integer(BigInt::from(n))),
        };
        FieldElement { spec: self.clone(), value }
    }

    /// Exact rational embedding; defined for every field whose characteristic
    /// does not divide the denominator.
    pub fn from_rational(&self, r: &BigRational) -> Result<FieldElement> {
        match self.0.kind {
            FieldKind::Rationals => Ok(FieldElement {
                spec: self.clone(),
                value: Value::Rat(r.clone()),
            }),
            _ => {
                let p = BigInt::from(self.0.p);
                let num = r.numer().mod_floor(&p);
                let den = r.denom().mod_floor(&p);
                let num: u64 = num.try_into().unwrap();
                let den: u64 = den.try_into().unwrap();
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                let v = mulm(num, invm(den, self.0.p), self.0.p);
                Ok(self.from_i64(v as i64))
            }
        }
    }

    /// The generator z of an extension field.
    pub fn generator(&self) -> Result<FieldElement> {
        match self.0.kind {
            FieldKind::Extension => {
                let mut v = vec![0; self.0.k as usize];
                if self.0.k == 1 {
                    // degenerate degree-1 extension: z is a constant root
                    v[0] = subm(0, self.0.modulus[0], self.0.p);
                } else {
                    v[1] = 1;
                }
                Ok(FieldElement { spec: self.clone(), value: Value::Ext(v) })
            }
            _ => Err(Error::UnsupportedField("generator")),
        }
    }

    /// Element with the given enumeration index (finite fields only); the
    /// index is the coefficient vector read as a base-p integer.
    pub fn element_from_index(&self, idx: u128) -> Result<FieldElement> {
        let q = self.order().ok_or(Error::UnsupportedField("element_from_index"))?;
        if idx >= q {
            return Err(Error::Domain(format!("element index {idx} out of range for {self}")));
        }
        match self.0.kind {
            FieldKind::Prime => Ok(self.from_i64(idx as i64)),
            FieldKind::Extension => {
                let mut v = vec![0u64; self.0.k as usize];
                let mut n = idx;
                for c in v.iter_mut() {
                    *c = (n % self.0.p as u128) as u64;
                    n /= self.0.p as u128;
                }
                Ok(FieldElement { spec: self.clone(), value: Value::Ext(v) })
            }
            FieldKind::Rationals => unreachable!(),
        }
    }

    /// All elements of a finite field, in enumeration-index order.
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElement> + '_> {
        let q = self.order().ok_or(Error::UnsupportedField("elements"))?;
        Ok((0..q).map(move |i| self.element_from_index(i).unwrap()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    Prime(u64),
    Ext(Vec<u64>),
    Rat(BigRational),
}

/// An element of a specific field; carries its [`FieldSpec`].
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    value: Value,
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Prime(v) => *v == 0,
            Value::Ext(v) => v.iter().all(|&c| c == 0),
            Value::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Prime(v) => *v == 1,
            Value::Ext(v) => v[0] == 1 && v[1..].iter().all(|&c| c == 0),
            Value::Rat(r) => r.is_one(),
        }
    }

    /// The rational value (rationals only).
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// Residue value (prime fields only).
    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Prime(v) => Some(*v),
            _ => None,
        }
    }

    /// Coefficient vector over F_p (extension fields only).
    pub fn as_ext_coeffs(&self) -> Option<&[u64]> {
        match &self.value {
            Value::Ext(v) => Some(v),
            _ => None,
        }
    }

    /// Enumeration index of a finite-field element (inverse of
    /// [`FieldSpec::element_from_index`]).
    pub fn index(&self) -> Option<u128> {
        match &self.value {
            Value::Prime(v) => Some(*v as u128),
            Value::Ext(v) => {
                let p = self.spec.0.p as u128;
                Some(v.iter().rev().fold(0u128, |acc, &c| acc * p + c as u128))
            }
            Value::Rat(_) => None,
        }
    }

    fn check_same(&self, other: &FieldElement) {
        assert!(self.spec == other.spec, "field mismatch: {} vs {}", self.spec, other.spec);
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        let p = self.spec.0.p;
        let value = match (&self.value, &other.value) {
            (Value::Prime(a), Value::Prime(b)) => Value::Prime(addm(*a, *b, p)),
            (Value::Ext(a), Value::Ext(b)) => {
                Value::Ext(a.iter().zip(b).map(|(&x, &y)| addm(x, y, p)).collect())
            }
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            _ => unreachable!(),
        };
        FieldElement { spec: self.spec.clone(), value }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        let p = self.spec.0.p;
        let value = match (&self.value, &other.value) {
            (Value::Prime(a), Value::Prime(b)) => Value::Prime(subm(*a, *b, p)),
            (Value::Ext(a), Value::Ext(b)) => {
                Value::Ext(a.iter().zip(b).map(|(&x, &y)| subm(x, y, p)).collect())
            }
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a - b),
            _ => unreachable!(),
        };
        FieldElement { spec: self.spec.clone(), value }
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.spec.0.p;
        let value = match &self.value {
            Value::Prime(a) => Value::Prime(subm(0, *a, p)),
            Value::Ext(a) => Value::Ext(a.iter().map(|&x| subm(0, x, p)).collect()),
            Value::Rat(a) => Value::Rat(-a),
        };
        FieldElement { spec: self.spec.clone(), value }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        let p = self.spec.0.p;
        let value = match (&self.value, &other.value) {
            (Value::Prime(a), Value::Prime(b)) => Value::Prime(mulm(*a, *b, p)),
            (Value::Ext(a), Value::Ext(b)) => {
                let prod = fp_mul(a, b, p);
                let mut r = fp_rem(&prod, &self.spec.0.modulus, p);
                r.resize(self.spec.0.k as usize, 0);
                Value::Ext(r)
            }
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            _ => unreachable!(),
        };
        FieldElement { spec: self.spec.clone(), value }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.spec.0.p;
        let value = match &self.value {
            Value::Prime(a) => Value::Prime(invm(*a, p)),
            Value::Ext(a) => {
                let mut v = a.clone();
                fp_trim(&mut v);
                let (_, s, _) = fp_xgcd(&v, &self.spec.0.modulus, p);
                let mut r = fp_rem(&s, &self.spec.0.modulus, p);
                r.resize(self.spec.0.k as usize, 0);
                Value::Ext(r)
            }
            Value::Rat(a) => Value::Rat(a.recip()),
        };
        Ok(FieldElement { spec: self.spec.clone(), value })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        Ok(self.pow_u128(e as u128))
    }

    pub fn pow_u128(&self, mut e: u128) -> FieldElement {
        let mut acc = self.spec.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.spec)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Prime(v) => write!(f, "{v}"),
            Value::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Ext(v) => {
                let mut terms = Vec::new();
                for (i, &c) in v.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    let t = match (c, i) {
                        (_, 0) => format!("{c}"),
                        (1, 1) => "z".to_string(),
                        (1, _) => format!("z^{i}"),
                        (_, 1) => format!("{c}*z"),
                        (_, _) => format!("{c}*z^{i}"),
                    };
                    terms.push(t);
                }
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join("+"))
                }
            }
        }
    }
}

/// Exact multiplicative order of a nonzero element, given a full
/// factorization of the group order |F*|: the order starts at the group
/// order and is reduced prime by prime while a^(order/ℓ) stays 1.
pub fn element_order(a: &FieldElement, group_order_factorization: &[(u128, u32)]) -> Result<u128> {
    if a.is_zero() {
        return Err(Error::ZeroInput("element_order of 0"));
    }
    let q = a
        .spec()
        .order()
        .ok_or(Error::UnsupportedField("element_order over the rationals"))?;
    let group_order = q - 1;
    let mut prod: u128 = 1;
    for &(l, e) in group_order_factorization {
        for _ in 0..e {
            prod = prod
                .checked_mul(l)
                .ok_or_else(|| Error::Domain("factorization overflows".into()))?;
        }
    }
    if prod != group_order {
        return Err(Error::Domain(format!(
            "factorization product {prod} does not equal the group order {group_order}"
        )));
    }
    let mut order = group_order;
    for &(l, _) in group_order_factorization {
        while order % l == 0 && a.pow_u128(order / l).is_one() {
            order /= l;
        }
    }
    debug_assert!(a.pow_u128(order).is_one());
    Ok(order)
}

// --- element text format ---
// decimal integers for prime fields, `a/b` fractions for the rationals,
// polynomials in the generator z for extension fields.

impl FieldSpec {
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse(0, "empty element"));
        }
        match self.0.kind {
            FieldKind::Prime => {
                let n: i64 = s
                    .parse()
                    .map_err(|_| Error::parse(0, format!("expected an integer, got `{s}`")))?;
                Ok(self.from_i64(n))
            }
            FieldKind::Rationals => {
                if let Some((num, den)) = s.split_once('/') {
                    let n: BigInt = num
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(0, format!("bad numerator `{num}`")))?;
                    let d: BigInt = den
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(0, format!("bad denominator `{den}`")))?;
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    Ok(FieldElement {
                        spec: self.clone(),
                        value: Value::Rat(BigRational::new(n, d)),
                    })
                } else {
                    let n: BigInt = s
                        .parse()
                        .map_err(|_| Error::parse(0, format!("expected an integer, got `{s}`")))?;
                    Ok(FieldElement {
                        spec: self.clone(),
                        value: Value::Rat(BigRational::from_integer(n)),
                    })
                }
            }
            FieldKind::Extension => self.parse_z_poly(s),
        }
    }

    /// Parse a z-polynomial like `z^3+2*z+1` into an extension element.
    fn parse_z_poly(&self, s: &str) -> Result<FieldElement> {
        let p = self.0.p;
        let k = self.0.k as usize;
        let bytes = s.as_bytes();
        let mut coeffs = vec![0u64; k];
        let mut i = 0usize;
        let mut first = true;
        while i < bytes.len() {
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            if i >= bytes.len() {
                break;
            }
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if !first {
                return Err(Error::parse(i, "expected `+` or `-` between terms"));
            }
            first = false;
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            let mut coeff: Option<u64> = None;
            if i < bytes.len() && bytes[i].is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: u64 = s[start..i]
                    .parse()
                    .map_err(|_| Error::parse(start, "integer too large"))?;
                coeff = Some(n % p);
                if i < bytes.len() && bytes[i] == b'*' {
                    i += 1;
                }
            }
            let mut exp = 0usize;
            if i < bytes.len() && bytes[i] == b'z' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(Error::parse(i, "expected exponent digits after `^`"));
                    }
                    exp = s[start..i]
                        .parse()
                        .map_err(|_| Error::parse(start, "exponent too large"))?;
                }
            } else if coeff.is_none() {
                return Err(Error::parse(i, "expected coefficient or `z`"));
            }
            if exp >= k {
                return Err(Error::parse(
                    0,
                    format!("z^{exp} exceeds the extension degree {k}; reduce the representative"),
                ));
            }
            let c = coeff.unwrap_or(1);
            let signed = if sign < 0 { subm(0, c % p, p) } else { c % p };
            coeffs[exp] = addm(coeffs[exp], signed, p);
        }
        Ok(FieldElement { spec: self.clone(), value: Value::Ext(coeffs) })
    }
}
