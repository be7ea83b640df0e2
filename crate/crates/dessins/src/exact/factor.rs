//! Polynomial factorization over the rationals.
//!
//! Classical pipeline: squarefree decomposition, reduction to a primitive
//! integer polynomial, factorization modulo the smallest prime that keeps
//! the polynomial squarefree, linear Hensel lifting past a coefficient
//! bound, and subset recombination. Trial division during recombination is
//! exact over the integers, so an emitted factor is always a true factor
//! regardless of the bound; the bound only guarantees completeness.
//!
//! Finite-field polynomial arithmetic lives here and stays private.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

use super::poly::RationalPolynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Factors `p` as `content * product(factor_i ^ multiplicity_i)` with each
/// factor monic and irreducible over the rationals. The content is the
/// leading coefficient of `p`. Factors are sorted by degree, then by the
/// ascending coefficient list. Errors on the zero polynomial.
pub fn factor_over_q(p: &RationalPolynomial) -> Result<(Rational, Vec<(RationalPolynomial, u32)>)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let content = p.leading().cloned().expect("nonzero polynomial");
    if p.degree() == Some(0) {
        return Ok((content, Vec::new()));
    }
    let monic = p.make_monic();
    let mut factors: Vec<(RationalPolynomial, u32)> = Vec::new();
    for (part, multiplicity) in squarefree_parts(&monic) {
        for factor in factor_squarefree(&part)? {
            factors.push((factor, multiplicity));
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok((content, factors))
}

/// Yun decomposition of a monic nonconstant polynomial: returns pairwise
/// coprime monic squarefree `(part, multiplicity)` with
/// `input = product(part ^ multiplicity)`.
fn squarefree_parts(f: &RationalPolynomial) -> Vec<(RationalPolynomial, u32)> {
    debug_assert!(f.is_monic() && f.degree() > Some(0));
    let derivative = f.derivative();
    let repeated = f.gcd(&derivative);
    let mut b = f.divrem(&repeated).expect("nonzero gcd").0;
    let c = derivative.divrem(&repeated).expect("nonzero gcd").0;
    let mut d = c.sub(&b.derivative());
    let mut multiplicity = 1;
    let mut out = Vec::new();
    while b.degree() != Some(0) {
        let part = b.gcd(&d);
        if part.degree() > Some(0) {
            out.push((part.clone(), multiplicity));
        }
        b = b.divrem(&part).expect("nonzero gcd").0;
        let c = d.divrem(&part).expect("nonzero gcd").0;
        d = c.sub(&b.derivative());
        multiplicity += 1;
    }
    out
}

/// Factors a monic squarefree nonconstant polynomial into monic
/// irreducible polynomials over the rationals.
fn factor_squarefree(f: &RationalPolynomial) -> Result<Vec<RationalPolynomial>> {
    if f.degree() == Some(1) {
        return Ok(vec![f.clone()]);
    }
    let (_, primitive) = f.content_and_primitive();
    let integer_factors = zassenhaus(&primitive)?;
    Ok(integer_factors
        .iter()
        .map(|coeffs| RationalPolynomial::from_bigint_coeffs(coeffs).make_monic())
        .collect())
}

/// Factors a primitive squarefree integer polynomial of degree >= 2 with
/// positive leading coefficient into primitive irreducible integer
/// polynomials with positive leading coefficients.
fn zassenhaus(f: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let n = f.len() - 1;
    let lead = f.last().expect("nonconstant input").clone();
    debug_assert!(lead.is_positive());

    let p = choose_prime(f, &lead);
    let modular = berlekamp(&monic_reduction(f, &lead, p), p);
    if modular.len() == 1 {
        return Ok(vec![f.to_vec()]);
    }

    // Coefficient bound for lead * (any integer factor); deliberately
    // generous since operands here are tiny.
    let norm1: BigInt = f.iter().map(Signed::abs).sum();
    let bound = BigInt::from(4).pow(n as u32) * (norm1 + 1) * (&lead + 1);
    let mut modulus = BigInt::from(p);
    let mut lift_steps = 0usize;
    while modulus <= &bound * 2 {
        modulus *= p;
        lift_steps += 1;
    }

    let lifted = hensel_lift(f, &lead, &modular, p, lift_steps);
    Ok(recombine(f, lifted, &modulus))
}

/// Smallest prime not dividing the leading coefficient for which the
/// reduction stays squarefree. Such a prime exists because only finitely
/// many primes divide the discriminant of a squarefree polynomial.
fn choose_prime(f: &[BigInt], lead: &BigInt) -> u64 {
    let mut p = 2u64;
    loop {
        if is_prime(p) && !(lead % p).is_zero() {
            let fp = monic_reduction(f, lead, p);
            let g = pgcd(&fp, &pderiv(&fp, p), p);
            if pdeg(&g) == Some(0) {
                return p;
            }
        }
        p += 1;
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn to_mod_p(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits u64")
}

/// `f * lead^-1 mod p` as a monic mod-p polynomial of the same degree.
fn monic_reduction(f: &[BigInt], lead: &BigInt, p: u64) -> Vec<u64> {
    let inv = pinv_scalar(to_mod_p(lead, p), p);
    ptrim(f.iter().map(|c| to_mod_p(c, p) * inv % p).collect())
}

/// Multifactor linear Hensel lifting: from `f = lead * prod(h_i) mod p`
/// with the `h_i` monic and pairwise coprime mod p, produces monic integer
/// polynomials congruent to the `h_i` mod p with
/// `f = lead * prod(h_i) mod p^(steps+1)`.
fn hensel_lift(
    f: &[BigInt],
    lead: &BigInt,
    modular: &[Vec<u64>],
    p: u64,
    steps: usize,
) -> Vec<Vec<BigInt>> {
    // Correction multipliers: u_i = (lead * prod_{j != i} h_j)^-1 mod (h_i, p).
    // Fixed for the whole lift because h_i mod p never changes.
    let multipliers: Vec<Vec<u64>> = (0..modular.len())
        .map(|i| {
            let hi = &modular[i];
            let mut w = vec![to_mod_p(lead, p)];
            for (j, hj) in modular.iter().enumerate() {
                if j != i {
                    w = pdivrem(&pmul(&w, hj, p), hi, p).1;
                }
            }
            pinv_poly(&w, hi, p)
        })
        .collect();

    let mut lifted: Vec<Vec<BigInt>> = modular
        .iter()
        .map(|h| h.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let mut pj = BigInt::from(p);
    for _ in 0..steps {
        // E = (f - lead * prod h_i) / p^j, reduced mod p.
        let mut product = vec![lead.clone()];
        for h in &lifted {
            product = zmul(&product, h);
        }
        let difference = zsub(f, &product);
        let error: Vec<u64> = ptrim(
            difference
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(&pj);
                    debug_assert!(r.is_zero(), "lift invariant broken");
                    to_mod_p(&q, p)
                })
                .collect(),
        );
        for (i, h) in lifted.iter_mut().enumerate() {
            let reduced = pdivrem(&error, &modular[i], p).1;
            let delta = pdivrem(&pmul(&reduced, &multipliers[i], p), &modular[i], p).1;
            for (t, &coefficient) in delta.iter().enumerate() {
                h[t] += &pj * coefficient;
            }
        }
        pj *= p;
    }
    lifted
}

/// Finds the true integer factors among products of lifted modular
/// factors, smallest subsets first. Division is exact, so only genuine
/// factors survive; minimality makes each one irreducible.
fn recombine(f: &[BigInt], lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let half = modulus / 2;
    let symmetric = |c: &BigInt| -> BigInt {
        if c > &half {
            c - modulus
        } else {
            c.clone()
        }
    };
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut current = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    'sizes: while 2 * size <= remaining.len() {
        for combo in Combinations::new(remaining.len(), size) {
            let lead = current.last().expect("nonconstant remainder");
            let mut product = vec![lead.mod_floor(modulus)];
            for &slot in &combo {
                product = zmul_mod(&product, &lifted[remaining[slot]], modulus);
            }
            let candidate = primitive_part(&ztrim(product.iter().map(symmetric).collect()));
            if let Some(quotient) = zdivide_exact(&current, &candidate) {
                out.push(candidate);
                current = quotient;
                for &slot in combo.iter().rev() {
                    remaining.remove(slot);
                }
                continue 'sizes;
            }
        }
        size += 1;
    }
    if current.len() > 1 {
        out.push(primitive_part(&current));
    }
    out
}

/// Ascending-index size-`k` subsets of `0..m`.
struct Combinations {
    m: usize,
    k: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(m: usize, k: usize) -> Self {
        Combinations {
            m,
            k,
            current: (0..k).collect(),
            done: k > m,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut i = self.k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] + 1 <= self.m - (self.k - i) {
                self.current[i] += 1;
                for j in i + 1..self.k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

// ---- integer polynomial helpers (ascending coefficients, trimmed) ----

fn ztrim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zmul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zmul(a, b).iter().map(|c| c.mod_floor(m)).collect()
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    ztrim(out)
}

/// Divides out the content and flips signs so the leading coefficient is
/// positive. Nonzero input.
fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in v {
        content = content.gcd(c);
    }
    if v.last().expect("nonzero polynomial").is_negative() {
        content = -content;
    }
    v.iter().map(|c| c / &content).collect()
}

/// Exact quotient `f / g` over the integers, or `None` when `g` does not
/// divide `f`.
fn zdivide_exact(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    if g.is_empty() {
        return None;
    }
    if f.is_empty() {
        return Some(Vec::new());
    }
    if f.len() < g.len() {
        return None;
    }
    let lead = g.last().unwrap();
    let mut remainder = f.to_vec();
    let mut quotient = vec![BigInt::zero(); f.len() - g.len() + 1];
    while remainder.len() >= g.len() {
        let (step, residue) = remainder.last().unwrap().div_rem(lead);
        if !residue.is_zero() {
            return None;
        }
        let shift = remainder.len() - g.len();
        for (i, c) in g.iter().enumerate() {
            let delta = &step * c;
            remainder[shift + i] -= delta;
        }
        quotient[shift] = step;
        debug_assert!(remainder.last().unwrap().is_zero());
        remainder = ztrim(remainder);
        if remainder.is_empty() {
            return Some(quotient);
        }
    }
    None
}

// ---- mod-p polynomial arithmetic (coefficients in [0, p), trimmed) ----

fn ptrim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pdeg(v: &[u64]) -> Option<usize> {
    v.len().checked_sub(1)
}

fn pinv_scalar(x: u64, p: u64) -> u64 {
    debug_assert!(x % p != 0);
    // Fermat: x^(p-2) mod p.
    let mut result = 1u64;
    let mut base = x % p;
    let mut exponent = p - 2;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exponent >>= 1;
    }
    result
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    ptrim(out)
}

fn pscale(a: &[u64], s: u64, p: u64) -> Vec<u64> {
    ptrim(a.iter().map(|&c| c * s % p).collect())
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = (out[i] + p - c) % p;
    }
    ptrim(out)
}

fn pdivrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    debug_assert!(!b.is_empty());
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let inv = pinv_scalar(*b.last().unwrap(), p);
    let mut remainder = a.to_vec();
    let mut quotient = vec![0u64; a.len() - b.len() + 1];
    while remainder.len() >= b.len() {
        let factor = remainder.last().unwrap() * inv % p;
        let shift = remainder.len() - b.len();
        for (i, &c) in b.iter().enumerate() {
            remainder[shift + i] = (remainder[shift + i] + p - factor * c % p) % p;
        }
        quotient[shift] = factor;
        debug_assert_eq!(remainder.last(), Some(&0));
        remainder.pop();
        remainder = ptrim(remainder);
        if remainder.is_empty() {
            break;
        }
    }
    (ptrim(quotient), remainder)
}

fn pmonic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => pscale(a, pinv_scalar(lead, p), p),
    }
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = pdivrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    pmonic(&a, p)
}

fn pderiv(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return Vec::new();
    }
    ptrim((1..a.len()).map(|i| a[i] * (i as u64 % p) % p).collect())
}

/// Inverse of `a` modulo `(h, p)` by the extended Euclidean algorithm;
/// requires gcd(a, h) = 1.
fn pinv_poly(a: &[u64], h: &[u64], p: u64) -> Vec<u64> {
    // Invariants: old_r = old_s*a + old_t*h, r = s*a + t*h.
    let mut old_r = a.to_vec();
    let mut r = h.to_vec();
    let mut old_s: Vec<u64> = vec![1];
    let mut s: Vec<u64> = Vec::new();
    while !r.is_empty() {
        let (q, rem) = pdivrem(&old_r, &r, p);
        let next_s = psub(&old_s, &pmul(&q, &s, p), p);
        old_r = std::mem::replace(&mut r, rem);
        old_s = std::mem::replace(&mut s, next_s);
    }
    debug_assert_eq!(pdeg(&old_r), Some(0), "operands not coprime");
    let scale = pinv_scalar(old_r[0], p);
    pdivrem(&pscale(&old_s, scale, p), h, p).1
}

/// `x^exponent mod (h, p)` by square-and-multiply.
fn ppow_x(exponent: u64, h: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = pdivrem(&[0, 1], h, p).1;
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            result = pdivrem(&pmul(&result, &base, p), h, p).1;
        }
        base = pdivrem(&pmul(&base, &base, p), h, p).1;
        e >>= 1;
    }
    result
}

/// Berlekamp factorization of a monic squarefree polynomial mod p into
/// monic irreducible polynomials. Deterministic: the splitting scan walks
/// the residues of p in order.
fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = pdeg(f).expect("nonzero polynomial");
    if n == 1 {
        return vec![f.to_vec()];
    }
    // Frobenius matrix: column i holds x^(i*p) mod f, so the fixed
    // vectors v (v^p = v mod f) form the nullspace of M - I.
    let x_to_p = ppow_x(p, f, p);
    let mut power: Vec<u64> = vec![1];
    let mut matrix = vec![vec![0u64; n]; n];
    for i in 0..n {
        for (j, &c) in power.iter().enumerate() {
            matrix[j][i] = c;
        }
        if i + 1 < n {
            power = pdivrem(&pmul(&power, &x_to_p, p), f, p).1;
        }
    }
    for (i, row) in matrix.iter_mut().enumerate() {
        row[i] = (row[i] + p - 1) % p;
    }
    let basis = nullspace(matrix, p);
    let target = basis.len();
    let mut factors: Vec<Vec<u64>> = vec![f.to_vec()];
    if target == 1 {
        return factors;
    }
    for v in &basis {
        if factors.len() == target {
            break;
        }
        let v = ptrim(v.clone());
        if pdeg(&v).unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for g in &factors {
            if pdeg(g) == Some(1) {
                next.push(g.clone());
                continue;
            }
            // g splits as the product over s of gcd(g, v - s): v reduces
            // to a scalar modulo every irreducible factor of f.
            let mut rest = g.clone();
            for s in 0..p {
                if pdeg(&rest) == Some(0) {
                    break;
                }
                let mut shifted = v.clone();
                if shifted.is_empty() {
                    shifted = vec![0];
                }
                shifted[0] = (shifted[0] + p - s) % p;
                let d = pgcd(&rest, &ptrim(shifted), p);
                if pdeg(&d) >= Some(1) {
                    rest = pdivrem(&rest, &d, p).0;
                    next.push(d);
                }
            }
            debug_assert_eq!(pdeg(&rest), Some(0));
        }
        factors = next;
    }
    factors.sort();
    factors
}

/// Basis of the right nullspace of a square matrix over F_p.
fn nullspace(mut matrix: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = matrix.len();
    let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; n];
    let mut next_row = 0;
    for col in 0..n {
        let Some(pivot) = (next_row..n).find(|&r| matrix[r][col] % p != 0) else {
            continue;
        };
        matrix.swap(next_row, pivot);
        let inv = pinv_scalar(matrix[next_row][col], p);
        for c in 0..n {
            matrix[next_row][c] = matrix[next_row][c] * inv % p;
        }
        for r in 0..n {
            if r != next_row && matrix[r][col] != 0 {
                let factor = matrix[r][col];
                for c in 0..n {
                    matrix[r][c] = (matrix[r][c] + p - factor * matrix[next_row][c] % p) % p;
                }
            }
        }
        pivot_row_of_col[col] = Some(next_row);
        next_row += 1;
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_row_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for col in 0..n {
            if let Some(row) = pivot_row_of_col[col] {
                v[col] = (p - matrix[row][free]) % p;
            }
        }
        basis.push(v);
    }
    basis
}
