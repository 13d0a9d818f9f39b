//! Dense univariate polynomials over a [`FieldSpec`]: ring arithmetic,
//! gcd and extended gcd, derivative, radical, resultant, valuation at 0,
//! and the shared text grammar
//! `poly := term (('+'|'-') term)*`, `term := coeff ['*'] X ['^' uint] | coeff | X ['^' uint]`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldKind, FieldSpec};

/// Products above this many coefficients go through Karatsuba.
const KARATSUBA_THRESHOLD: usize = 32;

/// A dense univariate polynomial. Coefficient index = exponent; the top
/// coefficient is nonzero. The zero polynomial has an empty coefficient
/// vector and `degree() == None`.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn zero(field: &FieldSpec) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldSpec) -> Polynomial {
        Polynomial::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Polynomial {
        let field = c.spec().clone();
        let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
        Polynomial { field, coeffs }
    }

    /// The monomial X.
    pub fn x(field: &FieldSpec) -> Polynomial {
        Polynomial::monomial(field.one(), 1)
    }

    pub fn monomial(c: FieldElement, exp: usize) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(c.spec());
        }
        let field = c.spec().clone();
        let mut coeffs = vec![field.zero(); exp + 1];
        coeffs[exp] = c;
        Polynomial { field, coeffs }
    }

    pub fn from_coeffs(field: &FieldSpec, coeffs: Vec<FieldElement>) -> Polynomial {
        let mut p = Polynomial { field: field.clone(), coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from small integers, low-to-high.
    pub fn from_int_coeffs(field: &FieldSpec, coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of X^i (zero when i exceeds the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert!(self.field == other.field, "field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Polynomial::from_coeffs(&self.field, out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert!(self.field == other.field, "field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            });
        }
        Polynomial::from_coeffs(&self.field, out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert!(self.field == other.field, "field mismatch");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let out = mul_slices(&self.field, &self.coeffs, &other.coeffs);
        Polynomial::from_coeffs(&self.field, out)
    }

    pub fn mul_scalar(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.field);
        }
        Polynomial {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiply by X^k.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { field: self.field.clone(), coeffs }
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut acc = Polynomial::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division: self = q·other + r with deg r < deg other.
    pub fn div_rem(&self, other: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        assert!(self.field == other.field, "field mismatch");
        let db = other.degree().ok_or(Error::DivisionByZero)?;
        let da = match self.degree() {
            Some(d) if d >= db => d,
            _ => return Ok((Polynomial::zero(&self.field), self.clone())),
        };
        let lc_inv = other.coeffs[db].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); da - db + 1];
        let mut top = rem.len();
        while top > db {
            let lead = rem[top - 1].clone();
            if !lead.is_zero() {
                let c = lead.mul(&lc_inv);
                let shift = top - 1 - db;
                for (j, bc) in other.coeffs.iter().enumerate() {
                    if j < db {
                        rem[shift + j] = rem[shift + j].sub(&c.mul(bc));
                    }
                }
                quot[shift] = c;
            }
            top -= 1;
            rem.truncate(top);
        }
        Ok((
            Polynomial::from_coeffs(&self.field, quot),
            Polynomial::from_coeffs(&self.field, rem),
        ))
    }

    pub fn rem(&self, other: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(other)?.1)
    }

    /// Exact division; errors if `other` does not divide `self`.
    pub fn exact_div(&self, other: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(other)?;
        if !r.is_zero() {
            return Err(Error::Domain("exact_div: division is not exact".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor; errors when both inputs are zero.
    /// Prime fields run the remainder sequence on raw residues, which
    /// matters for the quadratic gcd chains on large iterates.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroInput("gcd(0, 0)"));
        }
        if self.field.kind() == FieldKind::Prime {
            return Ok(self.gcd_prime_fast(other));
        }
        if self.field.kind() == FieldKind::Rationals {
            return Ok(self.gcd_rational_fast(other));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Primitive pseudo-remainder sequence over Z: coefficient heights stay
    /// controlled, unlike the plain Euclid over Q.
    fn gcd_rational_fast(&self, other: &Polynomial) -> Polynomial {
        let (mut a, _) = to_integer_coeffs(self);
        let (mut b, _) = to_integer_coeffs(other);
        int_primitive(&mut a);
        int_primitive(&mut b);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let mut r = int_pseudo_rem(&a, &b);
            int_primitive(&mut r);
            a = b;
            b = r;
        }
        let coeffs = a
            .into_iter()
            .map(|c| {
                self.field
                    .from_rational(&BigRational::from_integer(c))
                    .unwrap()
            })
            .collect();
        Polynomial::from_coeffs(&self.field, coeffs).monic()
    }

    fn gcd_prime_fast(&self, other: &Polynomial) -> Polynomial {
        use crate::field::{fp_monic, fp_rem, fp_trim};
        let p = self.field.characteristic();
        let to_raw = |poly: &Polynomial| -> Vec<u64> {
            let mut v: Vec<u64> = poly.coeffs.iter().map(|c| c.as_residue().unwrap()).collect();
            fp_trim(&mut v);
            v
        };
        let (mut a, mut b) = (to_raw(self), to_raw(other));
        while !b.is_empty() {
            let r = fp_rem(&a, &b, p);
            a = b;
            b = r;
        }
        let g = fp_monic(&a, p);
        Polynomial::from_coeffs(
            &self.field,
            g.into_iter().map(|c| self.field.from_i64(c as i64)).collect(),
        )
    }

    /// Extended Euclid: (monic gcd g, s, t) with s·self + t·other = g.
    pub fn extended_gcd(&self, other: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroInput("extended_gcd(0, 0)"));
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Polynomial::one(&self.field), Polynomial::zero(&self.field));
        let (mut t0, mut t1) = (Polynomial::zero(&self.field), Polynomial::one(&self.field));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        let unit = r0.leading_coeff().unwrap().clone();
        let inv = unit.inv()?;
        Ok((r0.mul_scalar(&inv), s0.mul_scalar(&inv), t0.mul_scalar(&inv)))
    }

    /// Monic rescaling (identity on the zero polynomial).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.mul_scalar(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero(&self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.field.from_i64(i as i64)))
            .collect();
        Polynomial::from_coeffs(&self.field, coeffs)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Exponent of the lowest-order nonzero term; errors on the zero
    /// polynomial.
    pub fn valuation_at_zero(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroInput("valuation_at_zero(0)"))
    }

    /// Monic product of the distinct irreducible factors. Characteristic 0
    /// uses f / gcd(f, f′); characteristic p additionally peels p-th powers
    /// by coefficient-wise p-th roots so inseparable parts are handled.
    pub fn radical(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroInput("radical(0)"));
        }
        let f = self.monic();
        if f.is_constant() {
            return Ok(Polynomial::one(&self.field));
        }
        let p = self.field.characteristic();
        let d = f.derivative();
        if p == 0 {
            let g = f.gcd(&d)?;
            return f.exact_div(&g).map(|r| r.monic());
        }
        if d.is_zero() {
            // f ∈ F[X^p]: take the p-th root and recurse
            return f.pth_root()?.radical();
        }
        let w = f.gcd(&d)?;
        let s = f.exact_div(&w)?.monic();
        if w.is_constant() {
            return Ok(s);
        }
        let rw = w.radical()?;
        // lcm(s, rad(w))
        let g = s.gcd(&rw)?;
        s.mul(&rw).exact_div(&g).map(|r| r.monic())
    }

    /// p-th root of a polynomial in F_q[X^p] (all exponents divisible by p).
    pub(crate) fn pth_root(&self) -> Result<Polynomial> {
        let p = self.field.characteristic();
        if p == 0 {
            return Err(Error::UnsupportedField("pth_root in characteristic 0"));
        }
        let p = p as usize;
        let k = self.field.ext_degree();
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                // c^(p^(k−1)) is the p-th root of c in F_{p^k}
                let root = if k == 1 {
                    c.clone()
                } else {
                    c.pow_u128((self.field.characteristic() as u128).pow(k - 1))
                };
                out.push(root);
            } else if !c.is_zero() {
                return Err(Error::Domain("pth_root: polynomial is not in F[X^p]".into()));
            }
        }
        Ok(Polynomial::from_coeffs(&self.field, out))
    }

    /// Sylvester-convention resultant: Res(a, b) = lc(a)^{deg b} ∏ b(α_i)
    /// over the roots of a with multiplicity. Finite fields run a remainder
    /// sequence; rationals clear denominators and run fraction-free Bareiss
    /// elimination on the Sylvester matrix.
    pub fn resultant(&self, other: &Polynomial) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroInput("resultant with a zero operand"));
        }
        match self.field.kind() {
            FieldKind::Rationals => resultant_rational(self, other),
            _ => resultant_prs(self, other),
        }
    }
}

/// base^e mod m, square-and-multiply.
pub fn powmod(base: &Polynomial, e: u128, m: &Polynomial) -> Result<Polynomial> {
    powmod_big(base, &num_bigint::BigUint::from(e), m)
}

/// base^e mod m with an arbitrary-precision exponent.
pub fn powmod_big(base: &Polynomial, e: &num_bigint::BigUint, m: &Polynomial) -> Result<Polynomial> {
    let field = base.field().clone();
    let mut acc = Polynomial::one(&field).rem(m)?;
    let mut b = base.rem(m)?;
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            acc = acc.mul(&b).rem(m)?;
        }
        if i + 1 < bits {
            b = b.mul(&b).rem(m)?;
        }
    }
    Ok(acc)
}

/// Sort key giving a total, field-independent order on polynomials:
/// degree first, then the coefficient enumeration indices from X^0 up.
pub(crate) fn poly_sort_key(p: &Polynomial) -> (usize, Vec<u128>) {
    let deg = p.degree().map_or(0, |d| d + 1);
    let key = p
        .coeffs()
        .iter()
        .map(|c| c.index().expect("finite-field sort key"))
        .collect();
    (deg, key)
}

/// Dense product of coefficient slices (no trailing-zero guarantees).
fn mul_slices(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
        let mut out = vec![field.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
        return out;
    }
    // Karatsuba split at half of the longer operand
    let m = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(m.min(a.len()));
    let (b0, b1) = b.split_at(m.min(b.len()));
    let z0 = mul_slices(field, a0, b0);
    let z2 = mul_slices(field, a1, b1);
    let asum = slice_add(field, a0, a1);
    let bsum = slice_add(field, b0, b1);
    let mut z1 = mul_slices(field, &asum, &bsum);
    for (i, v) in z0.iter().enumerate() {
        z1[i] = z1[i].sub(v);
    }
    for (i, v) in z2.iter().enumerate() {
        z1[i] = z1[i].sub(v);
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, v) in z0.into_iter().enumerate() {
        out[i] = out[i].add(&v);
    }
    for (i, v) in z1.into_iter().enumerate() {
        if i + m < out.len() {
            out[i + m] = out[i + m].add(&v);
        } else {
            debug_assert!(v.is_zero());
        }
    }
    for (i, v) in z2.into_iter().enumerate() {
        out[i + 2 * m] = out[i + 2 * m].add(&v);
    }
    out
}

fn slice_add(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => field.zero(),
        });
    }
    out
}

/// Resultant by Euclidean remainder sequence; exact over any field.
fn resultant_prs(a: &Polynomial, b: &Polynomial) -> Result<FieldElement> {
    let field = a.field().clone();
    let mut acc = field.one();
    let mut negate = false;
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if da == 0 {
            let v = a.leading_coeff().unwrap().pow_u128(db as u128);
            acc = acc.mul(&v);
            break;
        }
        if db == 0 {
            let v = b.leading_coeff().unwrap().pow_u128(da as u128);
            acc = acc.mul(&v);
            break;
        }
        if da < db {
            std::mem::swap(&mut a, &mut b);
            if da * db % 2 == 1 {
                negate = !negate;
            }
            continue;
        }
        let r = a.rem(&b)?;
        if r.is_zero() {
            return Ok(field.zero());
        }
        let dr = r.degree().unwrap();
        // Res(a,b) = (−1)^{da·db} lc(b)^{da − dr} Res(b, r)
        acc = acc.mul(&b.leading_coeff().unwrap().pow_u128((da - dr) as u128));
        if da * db % 2 == 1 {
            negate = !negate;
        }
        a = b;
        b = r;
    }
    Ok(if negate { acc.neg() } else { acc })
}

/// Resultant over Q: scale both polynomials to integer coefficients, run
/// Bareiss on the Sylvester matrix over Z, then undo the scaling.
fn resultant_rational(a: &Polynomial, b: &Polynomial) -> Result<FieldElement> {
    let field = a.field().clone();
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    let (ai, ascale) = to_integer_coeffs(a);
    let (bi, bscale) = to_integer_coeffs(b);
    let n = da + db;
    if n == 0 {
        return Ok(field.one());
    }
    // Sylvester matrix: db rows of a's coefficients, da rows of b's
    let mut mat = vec![vec![BigInt::zero(); n]; n];
    for r in 0..db {
        for (i, c) in ai.iter().enumerate() {
            mat[r][r + (da - i)] = c.clone();
        }
    }
    for r in 0..da {
        for (i, c) in bi.iter().enumerate() {
            mat[db + r][r + (db - i)] = c.clone();
        }
    }
    let det = bareiss_det(mat);
    // Res(a,b) = Res(A/ascale, B/bscale) = det / (ascale^db · bscale^da)
    let denom = ascale.pow(db as u32) * bscale.pow(da as u32);
    field.from_rational(&BigRational::new(det, denom))
}

/// Clear denominators: returns (integer coefficients low-to-high, scale)
/// with scale·poly having the returned integer coefficients.
fn to_integer_coeffs(p: &Polynomial) -> (Vec<BigInt>, BigInt) {
    let mut scale = BigInt::one();
    for c in p.coeffs() {
        let r = c.as_rational().expect("rational field");
        let d = r.denom();
        let g = num_integer::Integer::gcd(&scale, d);
        scale = &scale / g * d;
    }
    let ints = p
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&scale / r.denom())
        })
        .collect();
    (ints, scale)
}

fn int_trim(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Divide out the integer content in place (no-op on the zero polynomial).
fn int_primitive(v: &mut Vec<BigInt>) {
    int_trim(v);
    let mut g = BigInt::zero();
    for c in v.iter() {
        g = num_integer::Integer::gcd(&g, c);
    }
    if g > BigInt::one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// Pseudo-remainder prem(a, b) = (lc(b)^(da−db+1) · a) mod b, exact over Z.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r: Vec<BigInt> = a.to_vec();
    int_trim(&mut r);
    while r.len() > db {
        let top = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = &*c * lc;
        }
        for (j, bc) in b.iter().enumerate() {
            let v = &r[shift + j] - &top * bc;
            r[shift + j] = v;
        }
        int_trim(&mut r);
    }
    r
}

/// Fraction-free determinant (Bareiss); all divisions are exact over Z.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

// --- text format ---

/// Byte cursor shared by the polynomial, rational-function, and bivariate
/// parsers.
pub(crate) struct Cursor<'a> {
    pub s: &'a str,
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(s: &'a str) -> Cursor<'a> {
        Cursor { s, pos: 0 }
    }

    pub fn skip_ws(&mut self) {
        while self
            .s
            .as_bytes()
            .get(self.pos)
            .map_or(false, |b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    pub fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.as_bytes().get(self.pos).copied()
    }

    /// Next byte without skipping whitespace first.
    pub fn peek_raw(&self) -> Option<u8> {
        self.s.as_bytes().get(self.pos).copied()
    }

    pub fn bump(&mut self) {
        self.pos += 1;
    }

    pub fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn parse_uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self
            .s
            .as_bytes()
            .get(self.pos)
            .map_or(false, |b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected digits"));
        }
        self.s[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "integer literal too large"))
    }

    pub fn parse_bigint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self
            .s
            .as_bytes()
            .get(self.pos)
            .map_or(false, |b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected digits"));
        }
        self.s[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "bad integer literal"))
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.s.len()
    }
}

/// Parse one coefficient according to the field's element format. For
/// extension fields the coefficient is an integer, a bare z-power, or a
/// parenthesized z-polynomial.
fn parse_coeff(field: &FieldSpec, cur: &mut Cursor) -> Result<FieldElement> {
    cur.skip_ws();
    match cur.peek() {
        Some(b'(') if field.kind() == FieldKind::Extension => {
            cur.bump();
            let start = cur.pos;
            let mut depth = 1;
            while let Some(b) = cur.peek_raw() {
                match b {
                    b'(' => depth += 1,
                    b')' => {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    _ => {}
                }
                cur.bump();
            }
            if depth != 0 {
                return Err(Error::parse(cur.pos, "unclosed parenthesis in coefficient"));
            }
            let inner = &cur.s[start..cur.pos];
            cur.bump(); // closing paren
            field.parse_element(inner)
        }
        Some(b'z') if field.kind() == FieldKind::Extension => {
            cur.bump();
            let mut exp = 1u64;
            if cur.peek() == Some(b'^') {
                cur.bump();
                exp = cur.parse_uint()?;
            }
            let g = field.generator()?;
            Ok(g.pow_u128(exp as u128))
        }
        Some(b) if b.is_ascii_digit() => {
            let n = cur.parse_bigint()?;
            if field.kind() == FieldKind::Rationals {
                // a fraction only when `/` is immediately followed by digits;
                // otherwise the slash separates a rational function
                let save = cur.pos;
                if cur.peek() == Some(b'/') {
                    cur.bump();
                    if cur.peek().map_or(false, |b| b.is_ascii_digit()) {
                        let d = cur.parse_bigint()?;
                        if d.is_zero() {
                            return Err(Error::DivisionByZero);
                        }
                        return field.from_rational(&BigRational::new(n, d));
                    }
                    cur.pos = save;
                }
            }
            field.from_rational(&BigRational::from_integer(n))
        }
        _ => Err(Error::parse(cur.pos, "expected a coefficient")),
    }
}

/// Parse a polynomial in `var` starting at the cursor; stops at the first
/// token that cannot extend the polynomial (`/`, `)`, end of input, …).
pub(crate) fn parse_poly_at(field: &FieldSpec, cur: &mut Cursor, var: u8) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(field);
    let mut first = true;
    loop {
        cur.skip_ws();
        let negative = match cur.peek() {
            Some(b'+') => {
                cur.bump();
                false
            }
            Some(b'-') => {
                cur.bump();
                true
            }
            None if first => return Err(Error::parse(cur.pos, "empty polynomial")),
            _ if first => false,
            _ => break,
        };
        cur.skip_ws();
        let c = match cur.peek() {
            Some(b) if b == var => field.one(),
            _ => {
                let c = parse_coeff(field, cur)?;
                if cur.peek() == Some(b'*') {
                    cur.bump();
                }
                c
            }
        };
        let mut exp = 0u64;
        if cur.peek() == Some(var) {
            cur.bump();
            exp = 1;
            if cur.peek() == Some(b'^') {
                cur.bump();
                exp = cur.parse_uint()?;
            }
        }
        let c = if negative { c.neg() } else { c };
        acc = acc.add(&Polynomial::monomial(c, exp as usize));
        first = false;
    }
    Ok(acc)
}

/// Parse a complete polynomial in X; trailing garbage is an error.
pub fn parse_polynomial(field: &FieldSpec, s: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(s);
    let p = parse_poly_at(field, &mut cur, b'X')?;
    if !cur.at_end() {
        return Err(Error::parse(cur.pos, "unexpected trailing input"));
    }
    Ok(p)
}

/// Format one coefficient for use inside a polynomial term. Returns the
/// magnitude text, whether it needs parentheses, and whether it is negative
/// (rationals only; finite-field residues have no sign).
fn coeff_text(c: &FieldElement) -> (String, bool, bool) {
    match c.spec().kind() {
        FieldKind::Rationals => {
            let r = c.as_rational().unwrap();
            let neg = r.is_negative();
            let mag = if neg { -r } else { r.clone() };
            let s = if mag.denom().is_one() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            (s, false, neg)
        }
        _ => {
            let s = c.to_string();
            let multi = s.contains('+') || s.contains('-') || s.contains('*');
            (s, multi, false)
        }
    }
}

pub(crate) fn format_poly(p: &Polynomial, var: char) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let deg = p.degree().unwrap();
    for i in (0..=deg).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        let (mag, parens, neg) = coeff_text(&c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let unit = mag == "1" && !parens;
        if i == 0 {
            if parens {
                out.push('(');
                out.push_str(&mag);
                out.push(')');
            } else {
                out.push_str(&mag);
            }
        } else {
            if !unit {
                if parens {
                    out.push('(');
                    out.push_str(&mag);
                    out.push(')');
                } else {
                    out.push_str(&mag);
                }
                out.push('*');
            }
            out.push(var);
            if i > 1 {
                out.push('^');
                out.push_str(&i.to_string());
            }
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(self, 'X'))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", format_poly(self, 'X'), self.field)
    }
}
