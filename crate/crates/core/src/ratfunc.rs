//! Rational functions in lowest terms with a monic denominator, the
//! composition normal form with its trace (prefactor exponents and the
//! q/r accumulation polynomials), iteration, and projective evaluation.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{format_poly, parse_poly_at, Cursor, Polynomial};

/// g/h with gcd(g, h) = 1 and h monic; every constant multiple lives in
/// g's leading coefficient, so equality is coefficientwise.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numer: Polynomial,
    denom: Polynomial,
}

/// Bookkeeping from one composition u∘F = H^(m−l) G^(s−t) q/r: the degrees
/// and valuations (l, s) of u's numerator and (m, t) of its denominator,
/// D = max(l, m), the accumulated q and r polynomials, and the prefactor
/// exponents on H and G.
#[derive(Debug, Clone)]
pub struct CompositionTrace {
    pub l: usize,
    pub s: usize,
    pub m: usize,
    pub t: usize,
    pub cap_d: usize,
    pub qpart: Polynomial,
    pub rpart: Polynomial,
    pub h_exponent: i64,
    pub g_exponent: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectivePoint {
    Finite(FieldElement),
    Infinity,
}

impl ProjectivePoint {
    pub fn zero(field: &FieldSpec) -> ProjectivePoint {
        ProjectivePoint::Finite(field.zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ProjectivePoint::Finite(x) if x.is_zero())
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjectivePoint::Infinity)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite(x) => write!(f, "{x}"),
            ProjectivePoint::Infinity => write!(f, "inf"),
        }
    }
}

impl RationalFunction {
    /// Lowest-terms constructor: divides out the gcd, rescales the
    /// denominator monic, and folds the unit into the numerator.
    pub fn reduce(g: Polynomial, h: Polynomial) -> Result<RationalFunction> {
        if h.is_zero() {
            return Err(Error::ZeroInput("rational function with zero denominator"));
        }
        assert!(g.field() == h.field(), "field mismatch");
        let (mut g, mut h) = if g.is_zero() {
            (g, Polynomial::one(h.field()))
        } else {
            let d = g.gcd(&h)?;
            (g.exact_div(&d)?, h.exact_div(&d)?)
        };
        let lc = h.leading_coeff().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inv()?;
            h = h.mul_scalar(&inv);
            g = g.mul_scalar(&inv);
        }
        Ok(RationalFunction { numer: g, denom: h })
    }

    pub fn from_poly(p: Polynomial) -> RationalFunction {
        let one = Polynomial::one(p.field());
        RationalFunction { numer: p, denom: one }
    }

    pub fn identity(field: &FieldSpec) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::x(field))
    }

    pub fn constant(c: FieldElement) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::constant(c))
    }

    pub fn numer(&self) -> &Polynomial {
        &self.numer
    }

    pub fn denom(&self) -> &Polynomial {
        &self.denom
    }

    pub fn field(&self) -> &FieldSpec {
        self.denom.field()
    }

    /// max(deg g, deg h); constants (including 0) have degree 0.
    pub fn degree(&self) -> usize {
        self.numer.degree().unwrap_or(0).max(self.denom.degree().unwrap())
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn mul(&self, other: &RationalFunction) -> Result<RationalFunction> {
        // cross-cancel before multiplying to keep intermediates small
        let a = self.numer.gcd(&other.denom).unwrap_or_else(|_| Polynomial::one(self.field()));
        let b = other.numer.gcd(&self.denom).unwrap_or_else(|_| Polynomial::one(self.field()));
        let g = self.numer.exact_div(&a)?.mul(&other.numer.exact_div(&b)?);
        let h = self.denom.exact_div(&b)?.mul(&other.denom.exact_div(&a)?);
        RationalFunction::reduce(g, h)
    }

    pub fn inv(&self) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::reduce(self.denom.clone(), self.numer.clone())
    }

    pub fn pow(&self, e: i64) -> Result<RationalFunction> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = RationalFunction::constant(self.field().one());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b)?;
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b)?;
            }
        }
        Ok(acc)
    }

    /// Numerator of the derivative: g′h − gh′. Identically zero exactly when
    /// the function is inseparable (or constant).
    pub fn wronskian(&self) -> Polynomial {
        self.numer
            .derivative()
            .mul(&self.denom)
            .sub(&self.numer.mul(&self.denom.derivative()))
    }

    /// u∘F in lowest terms plus the composition trace. The trace is absent
    /// when u is constant; composing into a constant F is an error.
    pub fn compose(u: &RationalFunction, big_f: &RationalFunction) -> Result<(RationalFunction, Option<CompositionTrace>)> {
        assert!(u.field() == big_f.field(), "field mismatch");
        if big_f.is_constant() {
            return Err(Error::Domain(
                "composition with a constant inner function degenerates".into(),
            ));
        }
        if u.is_constant() {
            return Ok((u.clone(), None));
        }
        let big_g = &big_f.numer;
        let big_h = &big_f.denom;
        let l = u.numer.degree().unwrap();
        let s = u.numer.valuation_at_zero().unwrap();
        let m = u.denom.degree().unwrap();
        let t = u.denom.valuation_at_zero().unwrap();
        let qpart = graded_horner(&u.numer, s, l, big_g, big_h);
        let rpart = graded_horner(&u.denom, t, m, big_g, big_h);
        let mut num = qpart.clone();
        let mut den = rpart.clone();
        if m >= l {
            num = num.mul(&big_h.pow((m - l) as u64));
        } else {
            den = den.mul(&big_h.pow((l - m) as u64));
        }
        if s >= t {
            num = num.mul(&big_g.pow((s - t) as u64));
        } else {
            den = den.mul(&big_g.pow((t - s) as u64));
        }
        // lowest-terms composition of lowest-terms inputs: the safety-net
        // reduction must be trivial and is not recomputed afterwards:
        // one quadratic gcd at iterate degrees is expensive enough
        let d = num.gcd(&den)?;
        if !d.is_constant() {
            return Err(Error::Internal(format!(
                "composition produced a nontrivial common factor of degree {}",
                d.degree().unwrap()
            )));
        }
        let lc = den.leading_coeff().ok_or(Error::DivisionByZero)?.clone();
        let out = if lc.is_one() {
            RationalFunction { numer: num, denom: den }
        } else {
            let inv = lc.inv()?;
            RationalFunction {
                numer: num.mul_scalar(&inv),
                denom: den.mul_scalar(&inv),
            }
        };
        if out.degree() != u.degree() * big_f.degree() {
            return Err(Error::Internal(format!(
                "composition degree {} differs from (deg u)(deg F) = {}",
                out.degree(),
                u.degree() * big_f.degree()
            )));
        }
        let trace = CompositionTrace {
            l,
            s,
            m,
            t,
            cap_d: l.max(m),
            qpart,
            rpart,
            h_exponent: m as i64 - l as i64,
            g_exponent: s as i64 - t as i64,
        };
        Ok((out, Some(trace)))
    }

    /// f^(k): f^(0) = X and f^(k) = f ∘ f^(k−1).
    pub fn iterate(&self, k: usize) -> Result<RationalFunction> {
        if self.is_constant() {
            return Err(Error::Domain("cannot iterate a constant function".into()));
        }
        let mut acc = RationalFunction::identity(self.field());
        for _ in 0..k {
            acc = RationalFunction::compose(self, &acc)?.0;
        }
        Ok(acc)
    }

    /// Pointwise evaluation on P^1: poles map to ∞, and f(∞) is read off
    /// the degree comparison (leading ratio when degrees tie; the
    /// denominator is monic, so that ratio is g's leading coefficient).
    pub fn eval_projective(&self, p: &ProjectivePoint) -> ProjectivePoint {
        match p {
            ProjectivePoint::Finite(x) => {
                let hv = self.denom.eval(x);
                if hv.is_zero() {
                    ProjectivePoint::Infinity
                } else {
                    ProjectivePoint::Finite(self.numer.eval(x).div(&hv).unwrap())
                }
            }
            ProjectivePoint::Infinity => {
                let dh = self.denom.degree().unwrap();
                match self.numer.degree() {
                    None => ProjectivePoint::zero(self.field()),
                    Some(dg) if dg > dh => ProjectivePoint::Infinity,
                    Some(dg) if dg < dh => ProjectivePoint::zero(self.field()),
                    Some(_) => ProjectivePoint::Finite(self.numer.leading_coeff().unwrap().clone()),
                }
            }
        }
    }
}

/// Homogenized Horner evaluation of one side of Eq.-style composition:
/// Σ_{i=0}^{top−low} c_{top−i} G^{top−low−i} H^i for the coefficients of v
/// between X^low and X^top.
fn graded_horner(v: &Polynomial, low: usize, top: usize, big_g: &Polynomial, big_h: &Polynomial) -> Polynomial {
    let field = v.field();
    let mut acc = Polynomial::constant(v.coeff(top));
    let mut hpow = Polynomial::one(field);
    for j in (low..top).rev() {
        hpow = hpow.mul(big_h);
        acc = acc.mul(big_g).add(&Polynomial::constant(v.coeff(j)).mul(&hpow));
    }
    acc
}

// --- text format: `<poly> / <poly>` or a bare `<poly>`, either side
// optionally parenthesized ---

pub fn parse_rational_function(field: &FieldSpec, s: &str) -> Result<RationalFunction> {
    let mut cur = Cursor::new(s);
    let numer = parse_side(field, &mut cur)?;
    let denom = if cur.peek() == Some(b'/') {
        cur.bump();
        parse_side(field, &mut cur)?
    } else {
        Polynomial::one(field)
    };
    if !cur.at_end() {
        return Err(Error::parse(cur.pos, "unexpected trailing input"));
    }
    RationalFunction::reduce(numer, denom)
}

fn parse_side(field: &FieldSpec, cur: &mut Cursor) -> Result<Polynomial> {
    if cur.peek() == Some(b'(') {
        // a whole parenthesized polynomial, unless the parenthesis turns out
        // to be an extension-field coefficient like `(z+1)*X`
        let save = cur.pos;
        cur.bump();
        if let Ok(p) = parse_poly_at(field, cur, b'X') {
            if cur.peek() == Some(b')') {
                cur.bump();
                match cur.peek() {
                    Some(b'/') | None => return Ok(p),
                    _ => {}
                }
            }
        }
        cur.pos = save;
    }
    parse_poly_at(field, cur, b'X')
}

fn needs_parens(s: &str) -> bool {
    s[1..].contains('+') || s[1..].contains('-')
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_poly(&self.numer, 'X');
        if self.denom.is_one() {
            return write!(f, "{num}");
        }
        let den = format_poly(&self.denom, 'X');
        let num = if needs_parens(&num) { format!("({num})") } else { num };
        let den = if needs_parens(&den) { format!("({den})") } else { den };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn rf(field: &FieldSpec, s: &str) -> RationalFunction {
        parse_rational_function(field, s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        // common factor X−1 divides out
        let r = rf(&q(), "(X^2-1)/(X-1)");
        assert_eq!(r.numer(), &parse_polynomial(&q(), "X+1").unwrap());
        assert!(r.denom().is_one());
        // monic-denominator normalization folds constants into the numerator
        let r = rf(&q(), "2*X/4");
        assert_eq!(r.numer(), &parse_polynomial(&q(), "1/2*X").unwrap());
        assert!(r.denom().is_one());
        // already coprime over F_2: gcd((X+1)^2, X^2) = 1
        let r = rf(&f2(), "(X^2+1)/X^2");
        assert_eq!(r.numer(), &parse_polynomial(&f2(), "X^2+1").unwrap());
        assert_eq!(r.denom(), &parse_polynomial(&f2(), "X^2").unwrap());
        assert!(RationalFunction::reduce(
            Polynomial::one(&q()),
            Polynomial::zero(&q())
        )
        .is_err());
    }

    #[test]
    fn compose_worked_example_char2() {
        // f∘f for f = (X^2+1)/X^2 over F_2 collapses to 1/(X^4+1)
        let f = rf(&f2(), "(X^2+1)/X^2");
        let (ff, trace) = RationalFunction::compose(&f, &f).unwrap();
        assert_eq!(ff, rf(&f2(), "1/(X^4+1)"));
        let trace = trace.unwrap();
        assert_eq!((trace.l, trace.s, trace.m, trace.t), (2, 0, 2, 2));
        assert_eq!(ff.degree(), 4);
    }

    #[test]
    fn compose_identity_and_rational() {
        let id = RationalFunction::identity(&q());
        let f = rf(&q(), "(X^2+1)/X");
        assert_eq!(RationalFunction::compose(&id, &f).unwrap().0, f);
        // (X^2+1)/X into itself, reduced by hand
        let (ff, _) = RationalFunction::compose(&f, &f).unwrap();
        assert_eq!(ff, rf(&q(), "(X^4+3*X^2+1)/(X^3+X)"));
        let d = ff.numer().gcd(ff.denom()).unwrap();
        assert!(d.is_constant());
        // constant inner function is rejected
        let c = RationalFunction::constant(q().from_i64(3));
        assert!(RationalFunction::compose(&f, &c).is_err());
        // constant outer function passes through without a trace
        let (out, trace) = RationalFunction::compose(&c, &f).unwrap();
        assert_eq!(out, c);
        assert!(trace.is_none());
    }

    #[test]
    fn iterate_examples() {
        let f = rf(&f2(), "(X^2+1)/X^2");
        assert_eq!(f.iterate(0).unwrap(), RationalFunction::identity(&f2()));
        assert_eq!(f.iterate(2).unwrap(), rf(&f2(), "1/(X^4+1)"));
        assert_eq!(f.iterate(3).unwrap(), rf(&f2(), "X^8"));
        // polynomial growth: deg f^(3) = 2^3
        let g = rf(&q(), "X^2+1");
        let g3 = g.iterate(3).unwrap();
        assert_eq!(g3.degree(), 8);
        // ((X^2+1)^2+1)^2+1 by direct substitution
        let inner = parse_polynomial(&q(), "X^2+1").unwrap();
        let mut expanded = inner.clone();
        for _ in 0..2 {
            expanded = expanded.mul(&expanded).add(&Polynomial::one(&q()));
        }
        assert_eq!(g3, RationalFunction::from_poly(expanded));
    }

    #[test]
    fn eval_projective_examples() {
        let f = rf(&f2(), "(X^2+1)/X^2");
        assert_eq!(
            f.eval_projective(&ProjectivePoint::zero(&f2())),
            ProjectivePoint::Infinity
        );
        assert_eq!(
            f.eval_projective(&ProjectivePoint::Infinity),
            ProjectivePoint::Finite(f2().one())
        );
        let f3 = FieldSpec::prime(3).unwrap();
        let g = rf(&f3, "1/(X^2+1)");
        assert_eq!(
            g.eval_projective(&ProjectivePoint::Infinity),
            ProjectivePoint::zero(&f3)
        );
    }

    #[test]
    fn text_round_trip() {
        for s in ["(X^2+1)/X^2", "1/(X^4+1)", "X^8", "(X^4+3*X^2+1)/(X^3+X)", "1/2*X"] {
            let f = rf(&q(), s);
            assert_eq!(parse_rational_function(&q(), &f.to_string()).unwrap(), f);
        }
        let f16 = FieldSpec::extension_default(2, 4).unwrap();
        let f = rf(&f16, "(z+1)*X^2/(X+z)");
        assert_eq!(parse_rational_function(&f16, &f.to_string()).unwrap(), f);
    }

    #[test]
    fn product_and_inverse() {
        let f = rf(&q(), "(X+1)/X");
        let g = f.inv().unwrap();
        let p = f.mul(&g).unwrap();
        assert!(p.numer().is_one() && p.denom().is_one());
        assert_eq!(f.pow(2).unwrap(), rf(&q(), "(X^2+2*X+1)/X^2"));
        assert_eq!(f.pow(-1).unwrap(), rf(&q(), "X/(X+1)"));
        assert_eq!(f.pow(0).unwrap(), RationalFunction::constant(q().one()));
    }
}
