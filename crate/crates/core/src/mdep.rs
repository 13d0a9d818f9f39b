//! Exact multiplicative-(in)dependence testing. A gcd-free basis decomposes
//! the inputs over pairwise-coprime monic polynomials without ever factoring
//! into irreducibles; dependence is then an integer-kernel question on the
//! exponent matrix, intersected with the constant-part condition (prime
//! valuations and a sign parity over Q, a discrete-log congruence over F_q).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{element_order, FieldElement, FieldSpec};
use crate::iterinv::DEGREE_CAP;
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;

/// basis: pairwise-coprime monic nonconstant polynomials.
/// exponents\[i\]\[j\]: multiplicity of basis\[j\] in input i (negative when it
/// comes from the denominator). constants\[i\]: the unit with
/// input_i = constants_i · ∏_j basis_j ^ exponents\[i\]\[j\].
#[derive(Debug, Clone)]
pub struct GcdFreeBasis {
    pub basis: Vec<Polynomial>,
    pub exponents: Vec<Vec<i64>>,
    pub constants: Vec<FieldElement>,
}

/// A nonzero integer vector k with ∏ inputs_i^{k_i} certified equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependenceWitness {
    pub k: Vec<i64>,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DependenceResult {
    Dependent(DependenceWitness),
    /// Independent, with the rank of the combined constraint matrix
    /// (equal to the number of inputs) as the certificate.
    Independent { rank: usize },
}

impl DependenceResult {
    pub fn is_dependent(&self) -> bool {
        matches!(self, DependenceResult::Dependent(_))
    }
}

/// Refine the multiset of all numerators and denominators into a
/// pairwise-coprime basis by repeated gcd splitting, then read off the
/// exact exponent matrix by division.
pub fn gcdfree_basis(inputs: &[RationalFunction]) -> Result<GcdFreeBasis> {
    if inputs.is_empty() {
        return Err(Error::Domain("gcd-free basis of an empty family".into()));
    }
    let field = inputs[0].field().clone();
    for r in inputs {
        if r.is_zero() {
            return Err(Error::ZeroInput("gcd-free basis with a zero input"));
        }
        if r.field() != &field {
            return Err(Error::FieldMismatch);
        }
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for r in inputs {
        insert_coprime(&mut basis, r.numer().monic())?;
        insert_coprime(&mut basis, r.denom().clone())?;
    }
    basis.sort_by_cached_key(poly_order_key);
    let mut exponents = Vec::with_capacity(inputs.len());
    let mut constants = Vec::with_capacity(inputs.len());
    for r in inputs {
        let mut row = vec![0i64; basis.len()];
        decompose(&r.numer().monic(), &basis, 1, &mut row)?;
        decompose(r.denom(), &basis, -1, &mut row)?;
        exponents.push(row);
        constants.push(r.numer().leading_coeff().unwrap().clone());
    }
    Ok(GcdFreeBasis { basis, exponents, constants })
}

/// Field-independent deterministic order for basis elements. Rationals have
/// no element index, so the display string is the tiebreaker there.
fn poly_order_key(p: &Polynomial) -> (usize, String) {
    (p.degree().unwrap_or(0), p.to_string())
}

fn insert_coprime(basis: &mut Vec<Polynomial>, p: Polynomial) -> Result<()> {
    let mut queue = vec![p];
    'next: while let Some(p) = queue.pop() {
        if p.is_constant() {
            continue;
        }
        for i in 0..basis.len() {
            let g = p.gcd(&basis[i])?;
            if g.is_constant() {
                continue;
            }
            let b = basis.swap_remove(i);
            let pb = b.exact_div(&g)?.monic();
            let pp = p.exact_div(&g)?.monic();
            queue.push(g);
            if !pb.is_constant() {
                queue.push(pb);
            }
            if !pp.is_constant() {
                queue.push(pp);
            }
            continue 'next;
        }
        basis.push(p);
    }
    Ok(())
}

fn decompose(p: &Polynomial, basis: &[Polynomial], sign: i64, row: &mut [i64]) -> Result<()> {
    let mut rem = p.clone();
    for (j, b) in basis.iter().enumerate() {
        while b.divides(&rem) {
            rem = rem.exact_div(b)?;
            row[j] += sign;
        }
    }
    if !rem.is_constant() {
        return Err(Error::Internal(
            "gcd-free basis does not generate one of its inputs".into(),
        ));
    }
    Ok(())
}

/// Degree of ∏ inputs_i^{k_i} as a reduced rational function, from the
/// combined basis exponents alone.
pub fn product_degree(basis: &GcdFreeBasis, k: &[i64]) -> u64 {
    assert_eq!(k.len(), basis.exponents.len(), "exponent vector length mismatch");
    let mut pos = 0i64;
    let mut neg = 0i64;
    for (j, b) in basis.basis.iter().enumerate() {
        let c: i64 = k
            .iter()
            .zip(&basis.exponents)
            .map(|(ki, row)| ki * row[j])
            .sum();
        let d = b.degree().unwrap() as i64;
        if c > 0 {
            pos += c * d;
        } else {
            neg -= c * d;
        }
    }
    pos.max(neg) as u64
}

// --- integer kernel by unimodular column reduction ---

/// Basis of the saturated lattice {x ∈ Z^n : Σ_i x_i rows[i][j] = 0 ∀j}.
fn integer_kernel(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let n = rows.len();
    if n == 0 {
        return Vec::new();
    }
    let m = rows[0].len();
    // M = rowsᵀ (m × n); column operations tracked in U
    let mut mat: Vec<Vec<BigInt>> = (0..m)
        .map(|j| (0..n).map(|i| BigInt::from(rows[i][j])).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let col_op = |mat: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, q: &BigInt| {
        for row in mat.iter_mut() {
            let v = &row[dst] - q * &row[src];
            row[dst] = v;
        }
        for row in u.iter_mut() {
            let v = &row[dst] - q * &row[src];
            row[dst] = v;
        }
    };
    let mut pivot = 0usize;
    for r in 0..m {
        if pivot >= n {
            break;
        }
        loop {
            let nz: Vec<usize> = (pivot..n).filter(|&j| !mat[r][j].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&j) = nz.first() {
                    for row in mat.iter_mut() {
                        row.swap(pivot, j);
                    }
                    for row in u.iter_mut() {
                        row.swap(pivot, j);
                    }
                    pivot += 1;
                }
                break;
            }
            let &jmin = nz
                .iter()
                .min_by_key(|&&j| mat[r][j].magnitude().clone())
                .unwrap();
            for &j in &nz {
                if j == jmin {
                    continue;
                }
                let q = &mat[r][j] / &mat[r][jmin];
                if !q.is_zero() {
                    col_op(&mut mat, &mut u, j, jmin, &q);
                }
            }
            // if every other entry reduced to zero this loop ends next pass
        }
    }
    (pivot..n)
        .map(|j| (0..n).map(|i| u[i][j].clone()).collect())
        .collect()
}

fn primitive_i64(v: &[BigInt]) -> Result<Vec<i64>> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    v.iter()
        .map(|x| {
            (x / &g)
                .to_i64()
                .ok_or_else(|| Error::Refused("kernel vector entry exceeds i64".into()))
        })
        .collect()
}

// --- constant-part machinery ---

/// Pairwise-coprime integer atoms (> 1) multiplicatively generating the
/// given values: small primes come out by trial division, the leftovers are
/// refined by gcd splitting, so exactness never depends on a full
/// factorization.
fn integer_atoms(values: &[BigUint]) -> Vec<BigUint> {
    let mut pieces: Vec<BigUint> = Vec::new();
    for v in values {
        let mut rest = v.clone();
        if rest <= BigUint::one() {
            continue;
        }
        let mut d = 2u64;
        while d < 100_000 && BigUint::from(d).pow(2) <= rest {
            let dd = BigUint::from(d);
            while (&rest % &dd).is_zero() {
                pieces.push(dd.clone());
                rest /= &dd;
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if rest > BigUint::one() {
            pieces.push(rest);
        }
    }
    // gcd refinement of whatever trial division left behind
    let mut atoms: Vec<BigUint> = Vec::new();
    'next: while let Some(p) = pieces.pop() {
        if p <= BigUint::one() {
            continue;
        }
        for i in 0..atoms.len() {
            let g = p.gcd(&atoms[i]);
            if g.is_one() {
                continue;
            }
            let b = atoms.swap_remove(i);
            pieces.push(g.clone());
            let pb = &b / &g;
            let pp = &p / &g;
            if !pb.is_one() {
                pieces.push(pb);
            }
            if !pp.is_one() {
                pieces.push(pp);
            }
            continue 'next;
        }
        atoms.push(p);
    }
    atoms.sort();
    atoms.dedup();
    atoms
}

fn atom_valuation(v: &BigUint, atom: &BigUint) -> i64 {
    let mut rest = v.clone();
    let mut e = 0i64;
    while !rest.is_zero() && (&rest % atom).is_zero() {
        rest /= atom;
        e += 1;
    }
    e
}

/// Valuation rows over the atoms, plus the sign bits, for rational units.
fn rational_constant_rows(constants: &[FieldElement]) -> (Vec<Vec<i64>>, Vec<bool>) {
    let mut ints = Vec::new();
    let mut numden = Vec::new();
    let mut signs = Vec::new();
    for c in constants {
        let r = c.as_rational().unwrap();
        signs.push(r.is_negative());
        let num = r.numer().magnitude().clone();
        let den = r.denom().magnitude().clone();
        ints.push(num.clone());
        ints.push(den.clone());
        numden.push((num, den));
    }
    let atoms = integer_atoms(&ints);
    let rows = numden
        .iter()
        .map(|(num, den)| {
            atoms
                .iter()
                .map(|a| atom_valuation(num, a) - atom_valuation(den, a))
                .collect()
        })
        .collect();
    (rows, signs)
}

const DLOG_FIELD_CAP: u128 = 1 << 16;

/// Discrete logs of the constants with respect to the smallest generator.
fn finite_constant_dlogs(field: &FieldSpec, constants: &[FieldElement]) -> Result<(u128, Vec<u128>)> {
    let q = field.order().unwrap();
    if q > DLOG_FIELD_CAP {
        return Err(Error::Refused(format!(
            "discrete logs by enumeration need field order <= {DLOG_FIELD_CAP}, got {q}"
        )));
    }
    let group = q - 1;
    let fact = crate::intfactor::factor_u128(group)?;
    let mut generator = None;
    for idx in 1..q {
        let a = field.element_from_index(idx).unwrap();
        if element_order(&a, &fact)? == group {
            generator = Some(a);
            break;
        }
    }
    let g = generator.ok_or_else(|| Error::Internal("no generator found in F_q*".into()))?;
    let mut table = vec![0u128; q as usize];
    let mut acc = field.one();
    for e in 0..group {
        table[acc.index().unwrap() as usize] = e;
        acc = acc.mul(&g);
    }
    let dlogs = constants
        .iter()
        .map(|c| table[c.index().unwrap() as usize])
        .collect();
    Ok((group, dlogs))
}

/// Bound on the coefficients tried when combining kernel basis vectors into
/// a minimal-max-norm witness.
const WITNESS_COMBINATION_BOUND: i64 = 8;
const WITNESS_ENUM_CAP: u128 = 2_000_000;

/// Orient a witness so the first entry of minimal nonzero magnitude is
/// positive; the two directions of a relation are otherwise arbitrary.
fn canonicalize_witness(mut k: Vec<i64>) -> Vec<i64> {
    let min_abs = k.iter().filter(|&&x| x != 0).map(|x| x.unsigned_abs()).min();
    if let Some(m) = min_abs {
        let lead = k.iter().find(|&&x| x.unsigned_abs() == m).copied().unwrap();
        if lead < 0 {
            for x in k.iter_mut() {
                *x = -*x;
            }
        }
    }
    k
}

fn witness_rank(k: &[i64]) -> (u64, Vec<u64>, Vec<i64>) {
    let norm = k.iter().map(|x| x.unsigned_abs()).max().unwrap();
    (norm, k.iter().map(|x| x.unsigned_abs()).collect(), k.to_vec())
}

fn enumerate_witness<F: Fn(&[i64]) -> bool>(
    kernel: &[Vec<i64>],
    n: usize,
    accept: F,
) -> Option<Vec<i64>> {
    let r = kernel.len();
    let span = (2 * WITNESS_COMBINATION_BOUND + 1) as u128;
    let mut total: u128 = 1;
    for _ in 0..r {
        total = total.saturating_mul(span);
        if total > WITNESS_ENUM_CAP {
            return None;
        }
    }
    let mut best: Option<Vec<i64>> = None;
    let mut coeffs = vec![-WITNESS_COMBINATION_BOUND; r];
    loop {
        let mut k = vec![0i64; n];
        for (c, v) in coeffs.iter().zip(kernel) {
            for (ki, vi) in k.iter_mut().zip(v) {
                *ki += c * vi;
            }
        }
        if k.iter().any(|&x| x != 0) && accept(&k) {
            let k = canonicalize_witness(k);
            let better = match &best {
                None => true,
                Some(b) => witness_rank(&k) < witness_rank(b),
            };
            if better {
                best = Some(k);
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == r {
                return best;
            }
            coeffs[i] += 1;
            if coeffs[i] <= WITNESS_COMBINATION_BOUND {
                break;
            }
            coeffs[i] = -WITNESS_COMBINATION_BOUND;
            i += 1;
        }
    }
}

/// Decide exact multiplicative dependence: is there a nonzero integer k
/// with ∏ inputs_i^{k_i} = 1, constants included?
pub fn is_mult_dependent(inputs: &[RationalFunction]) -> Result<DependenceResult> {
    let basis = gcdfree_basis(inputs)?;
    let n = inputs.len();
    let field = inputs[0].field().clone();
    let finite = field.is_finite();

    let mut rows = basis.exponents.clone();
    let mut signs = Vec::new();
    if !finite {
        let (const_rows, s) = rational_constant_rows(&basis.constants);
        signs = s;
        for (row, extra) in rows.iter_mut().zip(const_rows) {
            row.extend(extra);
        }
    }
    let kernel_big = integer_kernel(&rows);
    if kernel_big.is_empty() {
        return Ok(DependenceResult::Independent { rank: n });
    }
    let kernel: Vec<Vec<i64>> = kernel_big
        .iter()
        .map(|v| primitive_i64(v))
        .collect::<Result<_>>()?;

    let k = if finite {
        let (group, dlogs) = finite_constant_dlogs(&field, &basis.constants)?;
        let phi = |k: &[i64]| -> u128 {
            let mut acc: i128 = 0;
            for (ki, d) in k.iter().zip(&dlogs) {
                acc += (*ki as i128) * (*d as i128);
            }
            acc.rem_euclid(group as i128) as u128
        };
        match enumerate_witness(&kernel, n, |k| phi(k) == 0) {
            Some(k) => k,
            None => {
                // scale the first kernel vector into the congruence
                let v = &kernel[0];
                let d0 = phi(v);
                let g = gcd_u128(d0, group);
                let t = (group / g) as i64;
                canonicalize_witness(v.iter().map(|x| x * t).collect())
            }
        }
    } else {
        let parity = |k: &[i64]| -> bool {
            k.iter()
                .zip(&signs)
                .filter(|(_, neg)| **neg)
                .map(|(ki, _)| *ki)
                .sum::<i64>()
                % 2
                == 0
        };
        match enumerate_witness(&kernel, n, |k| parity(k)) {
            Some(k) => k,
            // doubling any kernel vector makes every sign contribution even
            None => canonicalize_witness(kernel[0].iter().map(|x| x * 2).collect()),
        }
    };

    // replay the certification: the power product must collapse to 1
    let replay_degree: u64 = inputs
        .iter()
        .zip(&k)
        .map(|(r, ki)| r.degree() as u64 * ki.unsigned_abs())
        .sum();
    if replay_degree > DEGREE_CAP {
        return Err(Error::Refused(format!(
            "witness certification degree {replay_degree} exceeds the cap {DEGREE_CAP}"
        )));
    }
    let mut prod = RationalFunction::constant(field.one());
    for (r, ki) in inputs.iter().zip(&k) {
        prod = prod.mul(&r.pow(*ki)?)?;
    }
    if !(prod.numer().is_one() && prod.denom().is_one()) {
        return Err(Error::Internal(format!(
            "dependence witness {k:?} failed certification: product is {prod}"
        )));
    }
    Ok(DependenceResult::Dependent(DependenceWitness { k, certified: true }))
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact minimum of product_degree over |k_i| ≤ K with k_n ≠ 0: the
/// brute-force upper bound on Ψ(n), sharing one gcd-free basis across the
/// whole exponent grid.
pub fn psi_search(f: &RationalFunction, n: u64, k_bound: i64) -> Result<u64> {
    if f.degree() < 2 {
        return Err(Error::Domain("psi search requires degree at least 2".into()));
    }
    if k_bound < 1 {
        return Err(Error::Domain("psi search needs K >= 1".into()));
    }
    if (f.degree() as u64).checked_pow(n as u32).map_or(true, |b| b > DEGREE_CAP) {
        return Err(Error::Refused(format!(
            "iterate degree d^{n} exceeds the cap {DEGREE_CAP}"
        )));
    }
    let mut iterates = Vec::with_capacity(n as usize);
    let mut cur = RationalFunction::identity(f.field());
    for _ in 0..n {
        cur = RationalFunction::compose(f, &cur)?.0;
        iterates.push(cur.clone());
    }
    let basis = gcdfree_basis(&iterates)?;
    let n = n as usize;
    let mut k = vec![-k_bound; n];
    let mut best = u64::MAX;
    loop {
        if k[n - 1] != 0 {
            best = best.min(product_degree(&basis, &k));
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(best);
            }
            k[i] += 1;
            if k[i] <= k_bound {
                break;
            }
            k[i] = -k_bound;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::parse_rational_function;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn rf(field: &FieldSpec, s: &str) -> RationalFunction {
        parse_rational_function(field, s).unwrap()
    }

    #[test]
    fn basis_examples() {
        // {X^2−1, X^2−X} → {X−1, X, X+1} with rows (1,0,1), (1,1,0)
        let inputs = vec![rf(&q(), "X^2-1"), rf(&q(), "X^2-X")];
        let b = gcdfree_basis(&inputs).unwrap();
        let names: Vec<String> = b.basis.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["X", "X+1", "X-1"]);
        assert_eq!(b.exponents, vec![vec![0, 1, 1], vec![1, 0, 1]]);
        // single input
        let b = gcdfree_basis(&[rf(&q(), "X")]).unwrap();
        assert_eq!(b.basis.len(), 1);
        assert_eq!(b.exponents, vec![vec![1]]);
        // {(X+1)^2/X, X/(X+1)} → rows (−1, 2), (1, −1) over {X, X+1}
        let inputs = vec![rf(&q(), "(X^2+2*X+1)/X"), rf(&q(), "X/(X+1)")];
        let b = gcdfree_basis(&inputs).unwrap();
        let names: Vec<String> = b.basis.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["X", "X+1"]);
        assert_eq!(b.exponents, vec![vec![-1, 2], vec![1, -1]]);
    }

    #[test]
    fn basis_reassembles() {
        let f2 = FieldSpec::prime(2).unwrap();
        let inputs = vec![
            rf(&f2, "(X^3+X)/(X^2+X+1)"),
            rf(&f2, "X^2+1"),
            rf(&f2, "(X^2+X+1)/X"),
        ];
        let b = gcdfree_basis(&inputs).unwrap();
        for (i, r) in inputs.iter().enumerate() {
            let mut acc = RationalFunction::constant(b.constants[i].clone());
            for (j, bp) in b.basis.iter().enumerate() {
                let e = b.exponents[i][j];
                acc = acc
                    .mul(&RationalFunction::from_poly(bp.clone()).pow(e).unwrap())
                    .unwrap();
            }
            assert_eq!(&acc, r, "reassembly failed for input {i}");
        }
    }

    #[test]
    fn dependence_examples() {
        // X^2 · X^{−2} = 1
        let r = is_mult_dependent(&[rf(&q(), "X"), rf(&q(), "X^2")]).unwrap();
        match r {
            DependenceResult::Dependent(w) => assert_eq!(w.k, vec![-2, 1]),
            other => panic!("expected dependence, got {other:?}"),
        }
        // (X+1)^2 · (X+1)^{−2} = 1
        let r = is_mult_dependent(&[rf(&q(), "X^2+2*X+1"), rf(&q(), "X+1")]).unwrap();
        match r {
            DependenceResult::Dependent(w) => assert_eq!(w.k, vec![1, -2]),
            other => panic!("expected dependence, got {other:?}"),
        }
        // {X, X+1, 2X+1}: basis {X, X+1, X+1/2} but the unit 2 blocks the
        // only candidate relation
        let r = is_mult_dependent(&[rf(&q(), "X"), rf(&q(), "X+1"), rf(&q(), "2*X+1")]).unwrap();
        assert_eq!(r, DependenceResult::Independent { rank: 3 });
    }

    #[test]
    fn constants_participate_in_dependence() {
        // 2^{−2} · 4 = 1: pure-constant dependence over Q
        let r = is_mult_dependent(&[rf(&q(), "2"), rf(&q(), "4")]).unwrap();
        match r {
            DependenceResult::Dependent(w) => {
                assert!(w.certified);
                assert_eq!(w.k, vec![-2, 1]);
            }
            other => panic!("expected dependence, got {other:?}"),
        }
        // −2 and 2: (−2)^k 2^m = 1 needs k even and k+m = 0: witness (2, −2)
        let r = is_mult_dependent(&[rf(&q(), "-2"), rf(&q(), "2")]).unwrap();
        match r {
            DependenceResult::Dependent(w) => {
                let sum: i64 = w.k.iter().sum();
                assert_eq!(sum, 0);
                assert_eq!(w.k[0] % 2, 0);
            }
            other => panic!("expected dependence, got {other:?}"),
        }
        // −1 alone: (−1)^2 = 1
        let r = is_mult_dependent(&[rf(&q(), "-1")]).unwrap();
        match r {
            DependenceResult::Dependent(w) => assert_eq!(w.k[0] % 2, 0),
            other => panic!("expected dependence, got {other:?}"),
        }
        // 2X and X over Q: (2X)(X)^{−1} = 2 ≠ 1, and no powers fix it
        let r = is_mult_dependent(&[rf(&q(), "2*X"), rf(&q(), "X")]).unwrap();
        assert_eq!(r, DependenceResult::Independent { rank: 2 });
    }

    #[test]
    fn finite_field_constants_via_dlog() {
        let f5 = FieldSpec::prime(5).unwrap();
        // 2X and X over F_5: (2X)^k X^m = 2^k X^{k+m}: need k+m = 0 and
        // 2^k = 1, i.e. 4 | k: witness (4, −4)
        let r = is_mult_dependent(&[rf(&f5, "2*X"), rf(&f5, "X")]).unwrap();
        match r {
            DependenceResult::Dependent(w) => {
                assert!(w.certified);
                let sum: i64 = w.k.iter().sum();
                assert_eq!(sum, 0);
                assert_eq!(w.k[0].rem_euclid(4), 0);
            }
            other => panic!("expected dependence, got {other:?}"),
        }
    }

    #[test]
    fn product_degree_examples() {
        let inputs = vec![rf(&q(), "X"), rf(&q(), "X+1")];
        let b = gcdfree_basis(&inputs).unwrap();
        assert_eq!(product_degree(&b, &[0, 0]), 0);
        assert_eq!(product_degree(&b, &[1, -1]), 1);
        // X^2(X+1) and X(X+1)^2 with k = (1, −1): product is X/(X+1)
        let inputs = vec![rf(&q(), "X^3+X^2"), rf(&q(), "X^3+2*X^2+X")];
        let b = gcdfree_basis(&inputs).unwrap();
        assert_eq!(product_degree(&b, &[1, -1]), 1);
    }

    #[test]
    fn psi_search_examples() {
        // X^2 is excluded from the theorem but Ψ is still defined:
        // (X^2)^{−2}(X^4)^1 = 1
        assert_eq!(psi_search(&rf(&q(), "X^2"), 2, 2).unwrap(), 0);
        // mixing with k_3 ≠ 0 only raises the degree for X^2+1
        assert_eq!(psi_search(&rf(&q(), "X^2+1"), 3, 1).unwrap(), 8);
        // degree guard
        assert!(psi_search(&rf(&q(), "X^2+1"), 63, 1).is_err());
    }

    #[test]
    fn kernel_is_saturated() {
        // rows (2, 4): kernel must contain the primitive (2, −1), not just
        // a proper multiple
        let k = integer_kernel(&[vec![2], vec![4]]);
        assert_eq!(k.len(), 1);
        let v = primitive_i64(&k[0]).unwrap();
        assert!(v == vec![2, -1] || v == vec![-2, 1]);
    }
}
