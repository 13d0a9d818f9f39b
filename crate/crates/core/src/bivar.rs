//! Characteristic-0 bivariate machinery: Res_Y by fraction-free Bareiss
//! elimination on the Sylvester matrix over Q\[X\], the degree/count bounds
//! on multiplicatively dependent shifts, the Mason–Stothers checker, and
//! the bounded search for dependent substitutions Y := u(X).

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::{FieldKind, FieldSpec};
use crate::highorder::binomial;
use crate::mdep::{is_mult_dependent, DependenceResult, DependenceWitness};
use crate::poly::{format_poly, parse_poly_at, Cursor, Polynomial};
use crate::ratfunc::RationalFunction;

/// Dense in Y with Q\[X\] coefficients; coefficient index = Y-exponent, top
/// entry nonzero. Characteristic 0 is enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    field: FieldSpec,
    coeffs: Vec<Polynomial>,
}

impl BivariatePolynomial {
    pub fn from_y_coeffs(field: &FieldSpec, coeffs: Vec<Polynomial>) -> Result<BivariatePolynomial> {
        if field.kind() != FieldKind::Rationals {
            return Err(Error::UnsupportedField("bivariate machinery requires characteristic 0"));
        }
        let mut b = BivariatePolynomial { field: field.clone(), coeffs };
        b.trim();
        Ok(b)
    }

    pub fn from_x_poly(p: Polynomial) -> Result<BivariatePolynomial> {
        let field = p.field().clone();
        BivariatePolynomial::from_y_coeffs(&field, vec![p])
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    pub fn y_coeff(&self, i: usize) -> Polynomial {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Polynomial::zero(&self.field))
    }

    pub fn y_coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_y_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_y_constant() && self.coeffs.first().map_or(true, |c| c.is_constant())
    }

    /// Substitute Y := u(X); Horner in Y.
    pub fn substitute_y(&self, u: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(u).add(c);
        }
        acc
    }

    /// gcd of the Y-coefficients, i.e. the content as a polynomial in X.
    pub fn content_x(&self) -> Result<Polynomial> {
        let mut g = Polynomial::zero(&self.field);
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            g = if g.is_zero() { c.monic() } else { g.gcd(c)? };
        }
        if g.is_zero() {
            return Err(Error::ZeroInput("content of the zero polynomial"));
        }
        Ok(g)
    }
}

/// Sylvester-in-Y resultant with entries in Q\[X\]; the public operation
/// rejects a pair of Y-constants.
pub fn res_y(a: &BivariatePolynomial, b: &BivariatePolynomial) -> Result<Polynomial> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput("resultant with a zero operand"));
    }
    if a.deg_y() == Some(0) && b.deg_y() == Some(0) {
        return Err(Error::Domain("res_y of two Y-constant polynomials".into()));
    }
    res_y_allow_const(a, b)
}

/// Same as [`res_y`] but with the empty-matrix convention Res(c, c′) = 1,
/// which the shift-bound products rely on.
fn res_y_allow_const(a: &BivariatePolynomial, b: &BivariatePolynomial) -> Result<Polynomial> {
    let field = a.field().clone();
    let da = a.deg_y().ok_or(Error::ZeroInput("res_y(0, ·)"))?;
    let db = b.deg_y().ok_or(Error::ZeroInput("res_y(·, 0)"))?;
    let n = da + db;
    if n == 0 {
        return Ok(Polynomial::one(&field));
    }
    if da == 0 {
        return Ok(a.y_coeff(0).pow(db as u64));
    }
    if db == 0 {
        return Ok(b.y_coeff(0).pow(da as u64));
    }
    let zero = Polynomial::zero(&field);
    let mut mat = vec![vec![zero; n]; n];
    for r in 0..db {
        for i in 0..=da {
            mat[r][r + (da - i)] = a.y_coeff(i);
        }
    }
    for r in 0..da {
        for i in 0..=db {
            mat[db + r][r + (db - i)] = b.y_coeff(i);
        }
    }
    let det = bareiss_det_poly(mat, &field)?;
    // X-degree of the resultant is at most (deg_Y a + deg_Y b)·max deg_X
    let cap = (da + db) * a.deg_x().unwrap_or(0).max(b.deg_x().unwrap_or(0));
    if det.degree().map_or(false, |d| d > cap) {
        return Err(Error::Internal(format!(
            "resultant degree {} exceeds the Sylvester bound {cap}",
            det.degree().unwrap()
        )));
    }
    Ok(det)
}

/// Fraction-free Bareiss determinant over Q[X]; every division is exact.
fn bareiss_det_poly(mut m: Vec<Vec<Polynomial>>, field: &FieldSpec) -> Result<Polynomial> {
    let n = m.len();
    let mut negate = false;
    let mut prev = Polynomial::one(field);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero(field)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = Polynomial::zero(field);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Theorem-level degree/count bounds for one family F_i = G_i/H_i.
#[derive(Debug, Clone)]
pub struct ShiftBoundReport {
    /// deg R_ij for 1 ≤ i < j ≤ n (1-based indices)
    pub r_degrees: Vec<((usize, usize), u64)>,
    /// E = Σ deg R_ij
    pub e_sum: u64,
    /// 1 when some F_i is a polynomial, else 2
    pub alpha: u32,
    pub d_n: u64,
    pub e_n: u64,
    /// E + 2·d_n − 1
    pub degree_bound: u64,
    /// binom(e_n(E+2d_n−1)+E+d_n, E)^α; withheld when any R_ij ≡ 0
    pub count_bound: Option<BigUint>,
    pub degenerate_pairs: Vec<(usize, usize)>,
}

/// Compute all four resultant products R_ij, E, α, and the bounds.
/// Degenerate pairs (R_ij ≡ 0) are flagged and the count bound withheld.
pub fn shift_bound_report(
    family: &[(BivariatePolynomial, BivariatePolynomial)],
) -> Result<ShiftBoundReport> {
    if family.len() < 2 {
        return Err(Error::Domain("shift bounds need at least two functions".into()));
    }
    let mut d_n = 0u64;
    let mut e_n = 0u64;
    let mut alpha = 2u32;
    for (idx, (g, h)) in family.iter().enumerate() {
        if g.is_zero() || h.is_zero() {
            return Err(Error::ZeroInput("zero numerator or denominator in the family"));
        }
        let ei = g.deg_y().unwrap().max(h.deg_y().unwrap()) as u64;
        if ei < 1 {
            return Err(Error::Domain(format!(
                "function {} has Y-degree 0; the theorem requires e_i >= 1",
                idx + 1
            )));
        }
        check_bivariate_coprime(g, h, idx)?;
        if h.is_constant() {
            alpha = 1;
        }
        let di = g.deg_x().unwrap_or(0).max(h.deg_x().unwrap_or(0)) as u64;
        d_n = d_n.max(di);
        e_n = e_n.max(ei);
    }
    let mut r_degrees = Vec::new();
    let mut degenerate = Vec::new();
    let mut e_sum = 0u64;
    for i in 0..family.len() {
        for j in (i + 1)..family.len() {
            let (gi, hi) = &family[i];
            let (gj, hj) = &family[j];
            let r = res_y_allow_const(gi, gj)?
                .mul(&res_y_allow_const(gi, hj)?)
                .mul(&res_y_allow_const(hi, gj)?)
                .mul(&res_y_allow_const(hi, hj)?);
            if r.is_zero() {
                degenerate.push((i + 1, j + 1));
            } else {
                let dr = r.degree().unwrap() as u64;
                r_degrees.push(((i + 1, j + 1), dr));
                e_sum += dr;
            }
        }
    }
    let degree_bound = e_sum + 2 * d_n - 1;
    let count_bound = if degenerate.is_empty() {
        let top = e_n * degree_bound + e_sum + d_n;
        Some(binomial(top, e_sum).pow(alpha))
    } else {
        None
    };
    Ok(ShiftBoundReport {
        r_degrees,
        e_sum,
        alpha,
        d_n,
        e_n,
        degree_bound,
        count_bound,
        degenerate_pairs: degenerate,
    })
}

/// Coprimality of (G, H) as bivariate polynomials: coprime contents plus a
/// nonzero resultant of the primitive parts.
fn check_bivariate_coprime(
    g: &BivariatePolynomial,
    h: &BivariatePolynomial,
    idx: usize,
) -> Result<()> {
    let reject = || {
        Err(Error::Domain(format!(
            "function {} has non-coprime numerator and denominator",
            idx + 1
        )))
    };
    let cg = g.content_x()?;
    let ch = h.content_x()?;
    if !cg.gcd(&ch)?.is_constant() {
        return reject();
    }
    if g.deg_y().unwrap() >= 1 && h.deg_y().unwrap() >= 1 {
        let pg = divide_content(g, &cg)?;
        let ph = divide_content(h, &ch)?;
        if res_y_allow_const(&pg, &ph)?.is_zero() {
            return reject();
        }
    }
    Ok(())
}

fn divide_content(b: &BivariatePolynomial, content: &Polynomial) -> Result<BivariatePolynomial> {
    let coeffs = b
        .y_coeffs()
        .iter()
        .map(|c| {
            if c.is_zero() {
                Ok(c.clone())
            } else {
                c.exact_div(content)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    BivariatePolynomial::from_y_coeffs(b.field(), coeffs)
}

#[derive(Debug, Clone)]
pub struct MasonReport {
    pub max_degree: u64,
    pub rad_degree: u64,
    pub holds: bool,
}

/// The polynomial abc inequality: for coprime A + B + C = 0, not all with
/// vanishing derivative, max deg ≤ deg rad(ABC) − 1. A `holds = false`
/// report under satisfied preconditions would falsify the lemma.
pub fn mason_check(a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Result<MasonReport> {
    if !a.add(b).add(c).is_zero() {
        return Err(Error::Domain("mason check needs A + B + C = 0".into()));
    }
    let coprime = |x: &Polynomial, y: &Polynomial| -> Result<bool> {
        if x.is_zero() || y.is_zero() {
            return Ok(true);
        }
        Ok(x.gcd(y)?.is_constant())
    };
    if !(coprime(a, b)? && coprime(a, c)? && coprime(b, c)?) {
        return Err(Error::Domain("mason check needs pairwise coprime inputs".into()));
    }
    if a.derivative().is_zero() && b.derivative().is_zero() && c.derivative().is_zero() {
        return Err(Error::Domain(
            "mason check needs a summand with nonvanishing derivative".into(),
        ));
    }
    let prod = a.mul(b).mul(c);
    let rad = prod.radical()?;
    let max_degree = [a, b, c]
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0) as u64;
    let rad_degree = rad.degree().unwrap_or(0) as u64;
    Ok(MasonReport {
        max_degree,
        rad_degree,
        holds: max_degree + 1 <= rad_degree,
    })
}

/// Substitute Y := u(X) into every member and test exact multiplicative
/// dependence of the resulting univariate rational functions.
pub fn verify_shift(
    family: &[(BivariatePolynomial, BivariatePolynomial)],
    u: &Polynomial,
) -> Result<DependenceResult> {
    if !u.is_monic() {
        return Err(Error::Domain("the substituted polynomial must be monic".into()));
    }
    let mut subs = Vec::with_capacity(family.len());
    for (idx, (g, h)) in family.iter().enumerate() {
        let hu = h.substitute_y(u);
        if hu.is_zero() {
            return Err(Error::Domain(format!(
                "u lies on the pole curve of function {}",
                idx + 1
            )));
        }
        let gu = g.substitute_y(u);
        if gu.is_zero() {
            return Err(Error::ZeroInput("substitution produced the zero function"));
        }
        subs.push(RationalFunction::reduce(gu, hu)?);
    }
    is_mult_dependent(&subs)
}

#[derive(Debug, Clone)]
pub struct ShiftSearchResult {
    pub report: ShiftBoundReport,
    pub found: Vec<(Polynomial, DependenceWitness)>,
    /// true when the requested degree exceeded the theorem's bound and was
    /// clipped (no solutions exist beyond it)
    pub clipped: bool,
    /// candidates skipped because the substitution hit a pole or zero curve
    pub skipped: u64,
}

/// Enumerate monic u over the coefficient box (degree-0 u = 1 included)
/// and return every multiplicatively dependent substitution. The found
/// count must respect the count bound; exceeding it would falsify the
/// theorem.
pub fn shift_search(
    family: &[(BivariatePolynomial, BivariatePolynomial)],
    max_deg: u64,
    coeff_set: &[BigRational],
) -> Result<ShiftSearchResult> {
    let report = shift_bound_report(family)?;
    if !report.degenerate_pairs.is_empty() {
        return Err(Error::Domain(format!(
            "degenerate pairs {:?}: the count bound is invalid, search refused",
            report.degenerate_pairs
        )));
    }
    let field = family[0].0.field().clone();
    let clipped = max_deg > report.degree_bound;
    let effective = max_deg.min(report.degree_bound);
    let mut found = Vec::new();
    let mut skipped = 0u64;
    for deg in 0..=effective {
        let mut indices = vec![0usize; deg as usize];
        loop {
            let mut coeffs: Vec<_> = indices
                .iter()
                .map(|&ix| field.from_rational(&coeff_set[ix]).unwrap())
                .collect();
            coeffs.push(field.one());
            let u = Polynomial::from_coeffs(&field, coeffs);
            match verify_shift(family, &u) {
                Ok(DependenceResult::Dependent(w)) => found.push((u, w)),
                Ok(DependenceResult::Independent { .. }) => {}
                Err(Error::Internal(msg)) => return Err(Error::Internal(msg)),
                Err(_) => skipped += 1,
            }
            // odometer over the coefficient box
            let mut i = 0;
            loop {
                if i == indices.len() {
                    break;
                }
                indices[i] += 1;
                if indices[i] < coeff_set.len() {
                    break;
                }
                indices[i] = 0;
                i += 1;
            }
            if i == indices.len() {
                break;
            }
        }
        if deg > 0 && coeff_set.is_empty() {
            break;
        }
    }
    if let Some(bound) = &report.count_bound {
        if BigUint::from(found.len()) > *bound {
            return Err(Error::Internal(format!(
                "found {} dependent shifts, exceeding the certified count bound {bound}",
                found.len()
            )));
        }
    }
    Ok(ShiftSearchResult { report, found, clipped, skipped })
}

/// Wrap univariate shifts f_i as the family (f_i(X) + Y) / 1.
pub fn shift_family(polys: &[Polynomial]) -> Result<Vec<(BivariatePolynomial, BivariatePolynomial)>> {
    polys
        .iter()
        .map(|p| {
            let field = p.field().clone();
            let g = BivariatePolynomial::from_y_coeffs(
                &field,
                vec![p.clone(), Polynomial::one(&field)],
            )?;
            let h = BivariatePolynomial::from_x_poly(Polynomial::one(&field))?;
            Ok((g, h))
        })
        .collect()
}

// --- text format: the polynomial grammar extended with Y ---

pub fn parse_bivariate(field: &FieldSpec, s: &str) -> Result<BivariatePolynomial> {
    let mut cur = Cursor::new(s);
    let b = parse_bivariate_at(field, &mut cur)?;
    if !cur.at_end() {
        return Err(Error::parse(cur.pos, "unexpected trailing input"));
    }
    Ok(b)
}

/// `G / H` or a bare bivariate polynomial, either side optionally
/// parenthesized.
pub fn parse_bivariate_pair(
    field: &FieldSpec,
    s: &str,
) -> Result<(BivariatePolynomial, BivariatePolynomial)> {
    let mut cur = Cursor::new(s);
    let g = parse_bivariate_side(field, &mut cur)?;
    let h = if cur.peek() == Some(b'/') {
        cur.bump();
        parse_bivariate_side(field, &mut cur)?
    } else {
        BivariatePolynomial::from_x_poly(Polynomial::one(field))?
    };
    if !cur.at_end() {
        return Err(Error::parse(cur.pos, "unexpected trailing input"));
    }
    if h.is_zero() {
        return Err(Error::ZeroInput("zero denominator"));
    }
    Ok((g, h))
}

fn parse_bivariate_side(field: &FieldSpec, cur: &mut Cursor) -> Result<BivariatePolynomial> {
    if cur.peek() == Some(b'(') {
        let save = cur.pos;
        cur.bump();
        if let Ok(p) = parse_bivariate_at(field, cur) {
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
    parse_bivariate_at(field, cur)
}

fn parse_bivariate_at(field: &FieldSpec, cur: &mut Cursor) -> Result<BivariatePolynomial> {
    if field.kind() != FieldKind::Rationals {
        return Err(Error::UnsupportedField("bivariate machinery requires characteristic 0"));
    }
    let mut acc: Vec<Polynomial> = Vec::new();
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
        // term: [coeff] ['*'] [X[^u]] ['*'] [Y[^u]]
        cur.skip_ws();
        let mut coeff = field.one();
        let mut have_any = false;
        match cur.peek() {
            Some(b'(') => {
                cur.bump();
                let inner = parse_poly_at(field, cur, b'X')?;
                if !cur.eat(b')') {
                    return Err(Error::parse(cur.pos, "unclosed parenthesis"));
                }
                if inner.is_constant() {
                    coeff = inner.coeff(0);
                } else {
                    // a parenthesized X-polynomial coefficient
                    let c = if negative { inner.neg() } else { inner };
                    let (xdeg_extra, ypow) = parse_xy_tail(cur)?;
                    add_term(&mut acc, &c.shift_up(xdeg_extra), ypow, field);
                    first = false;
                    continue;
                }
                have_any = true;
            }
            Some(b) if b.is_ascii_digit() => {
                let n = cur.parse_bigint()?;
                let save = cur.pos;
                let mut value = BigRational::from_integer(n);
                if cur.peek() == Some(b'/') {
                    cur.bump();
                    if cur.peek().map_or(false, |c| c.is_ascii_digit()) {
                        let d = cur.parse_bigint()?;
                        value = BigRational::new(value.numer().clone(), d);
                    } else {
                        cur.pos = save;
                    }
                }
                coeff = field.from_rational(&value)?;
                have_any = true;
            }
            _ => {}
        }
        if cur.peek() == Some(b'*') {
            cur.bump();
        }
        let mut xpow = 0u64;
        if cur.peek() == Some(b'X') {
            cur.bump();
            xpow = 1;
            if cur.peek() == Some(b'^') {
                cur.bump();
                xpow = cur.parse_uint()?;
            }
            have_any = true;
            if cur.peek() == Some(b'*') {
                cur.bump();
            }
        }
        let mut ypow = 0u64;
        if cur.peek() == Some(b'Y') {
            cur.bump();
            ypow = 1;
            if cur.peek() == Some(b'^') {
                cur.bump();
                ypow = cur.parse_uint()?;
            }
            have_any = true;
        }
        if !have_any {
            return Err(Error::parse(cur.pos, "expected a term"));
        }
        let coeff = if negative { coeff.neg() } else { coeff };
        add_term(&mut acc, &Polynomial::monomial(coeff, xpow as usize), ypow, field);
        first = false;
    }
    BivariatePolynomial::from_y_coeffs(field, acc)
}

fn parse_xy_tail(cur: &mut Cursor) -> Result<(usize, u64)> {
    if cur.peek() == Some(b'*') {
        cur.bump();
    }
    let mut xpow = 0usize;
    if cur.peek() == Some(b'X') {
        cur.bump();
        xpow = 1;
        if cur.peek() == Some(b'^') {
            cur.bump();
            xpow = cur.parse_uint()? as usize;
        }
        if cur.peek() == Some(b'*') {
            cur.bump();
        }
    }
    let mut ypow = 0u64;
    if cur.peek() == Some(b'Y') {
        cur.bump();
        ypow = 1;
        if cur.peek() == Some(b'^') {
            cur.bump();
            ypow = cur.parse_uint()?;
        }
    }
    Ok((xpow, ypow))
}

fn add_term(acc: &mut Vec<Polynomial>, xpart: &Polynomial, ypow: u64, field: &FieldSpec) {
    let ypow = ypow as usize;
    while acc.len() <= ypow {
        acc.push(Polynomial::zero(field));
    }
    acc[ypow] = acc[ypow].add(xpart);
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (y, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cx = format_poly(c, 'X');
            let needs_parens = cx[1..].contains('+') || cx[1..].contains('-');
            let body = if y == 0 {
                cx
            } else {
                let y_str = if y == 1 { "Y".to_string() } else { format!("Y^{y}") };
                if cx == "1" {
                    y_str
                } else if cx == "-1" {
                    format!("-{y_str}")
                } else if needs_parens {
                    format!("({cx})*{y_str}")
                } else {
                    format!("{cx}*{y_str}")
                }
            };
            parts.push(body);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i > 0 && !p.starts_with('-') {
                out.push('+');
            }
            out.push_str(p);
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn bp(s: &str) -> BivariatePolynomial {
        parse_bivariate(&q(), s).unwrap()
    }

    fn xp(s: &str) -> Polynomial {
        parse_polynomial(&q(), s).unwrap()
    }

    #[test]
    fn res_y_examples() {
        // shifted linears: Res_Y(Y + f_i, Y + f_j) = f_j − f_i
        let a = bp("Y+X^2+2*X");
        let b = bp("Y+X");
        assert_eq!(res_y(&a, &b).unwrap(), xp("-X^2-X"));
        // evaluate at the single root Y = 0
        assert_eq!(res_y(&bp("Y"), &bp("Y-X^3")).unwrap(), xp("-X^3"));
        // 3×3 Sylvester determinant by hand
        assert_eq!(res_y(&bp("Y^2-X"), &bp("Y-X")).unwrap(), xp("X^2-X"));
        // rejected degenerate call
        assert!(res_y(&bp("X"), &bp("X+1")).is_err());
    }

    #[test]
    fn res_y_detects_common_factors() {
        // (Y − X)(Y + X) and (Y − X)(Y + 1) share Y − X
        let a = bp("Y^2-X^2");
        let b = bp("Y^2+Y-X*Y-X");
        assert!(res_y(&a, &b).unwrap().is_zero());
        // coprime pair stays nonzero
        let c = bp("Y^2-X");
        let d = bp("Y+X^2");
        assert!(!res_y(&c, &d).unwrap().is_zero());
    }

    #[test]
    fn shift_bound_worked_example() {
        // f_1 = X^2+2X, f_2 = X: E = 2, α = 1, bounds 5 and binom(9,2) = 36
        let fam = shift_family(&[xp("X^2+2*X"), xp("X")]).unwrap();
        let r = shift_bound_report(&fam).unwrap();
        assert_eq!(r.e_sum, 2);
        assert_eq!(r.alpha, 1);
        assert_eq!((r.d_n, r.e_n), (2, 1));
        assert_eq!(r.degree_bound, 5);
        assert_eq!(r.count_bound, Some(BigUint::from(36u32)));
        assert!(r.degenerate_pairs.is_empty());
    }

    #[test]
    fn shift_bound_degenerate() {
        let fam = shift_family(&[xp("X"), xp("X")]).unwrap();
        let r = shift_bound_report(&fam).unwrap();
        assert_eq!(r.degenerate_pairs, vec![(1, 2)]);
        assert!(r.count_bound.is_none());
    }

    #[test]
    fn mason_examples() {
        // X^2 + (1−X^2) + (−1) = 0: equality case 2 ≤ 3−1
        let r = mason_check(&xp("X^2"), &xp("1-X^2"), &xp("-1")).unwrap();
        assert_eq!((r.max_degree, r.rad_degree), (2, 3));
        assert!(r.holds);
        // (X+1)^3 − X^3 − 3X^2 − 3X = 1
        let r = mason_check(&xp("X^3+3*X^2+3*X"), &xp("1"), &xp("-X^3-3*X^2-3*X-1")).unwrap();
        assert_eq!(r.max_degree, 3);
        assert_eq!(r.rad_degree, 4);
        assert!(r.holds);
        // all-constant triple rejected
        assert!(mason_check(&xp("1"), &xp("2"), &xp("-3")).is_err());
        // common factor rejected
        assert!(mason_check(&xp("X"), &xp("X"), &xp("-2*X")).is_err());
        // nonzero sum rejected
        assert!(mason_check(&xp("X"), &xp("1"), &xp("1")).is_err());
    }

    #[test]
    fn verify_shift_examples() {
        let fam = shift_family(&[xp("X^2+2*X"), xp("X")]).unwrap();
        // u = 1: (X+1)^2 and X+1 are dependent with witness (1, −2)
        let r = verify_shift(&fam, &xp("1")).unwrap();
        match r {
            DependenceResult::Dependent(w) => assert_eq!(w.k, vec![1, -2]),
            other => panic!("expected dependence, got {other:?}"),
        }
        // u = X: X(X+3) and 2X are blocked by the constant 2
        let r = verify_shift(&fam, &xp("X")).unwrap();
        assert!(!r.is_dependent());
        // non-monic u rejected
        assert!(verify_shift(&fam, &xp("2*X")).is_err());
    }

    #[test]
    fn shift_search_worked_example() {
        let fam = shift_family(&[xp("X^2+2*X"), xp("X")]).unwrap();
        let coeffs: Vec<BigRational> = (-2..=2)
            .map(|v| BigRational::from_integer(v.into()))
            .collect();
        let r = shift_search(&fam, 2, &coeffs).unwrap();
        assert_eq!(r.found.len(), 1);
        assert_eq!(r.found[0].0, xp("1"));
        assert_eq!(r.found[0].1.k, vec![1, -2]);
        assert!(!r.clipped);
        // identical functions: refused
        let fam = shift_family(&[xp("X"), xp("X")]).unwrap();
        assert!(shift_search(&fam, 2, &coeffs).is_err());
    }

    #[test]
    fn parse_print_round_trip() {
        for s in [
            "Y^2-X",
            "(X^2+2*X)*Y+1",
            "X^2*Y^3-1/2*X*Y+7",
            "Y",
            "-Y^2+X",
        ] {
            let b = bp(s);
            assert_eq!(parse_bivariate(&q(), &b.to_string()).unwrap(), b, "round trip of {s}");
        }
        let (g, h) = parse_bivariate_pair(&q(), "(Y^2-X)/(Y+1)").unwrap();
        assert_eq!(g, bp("Y^2-X"));
        assert_eq!(h, bp("Y+1"));
    }
}
