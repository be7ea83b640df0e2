//! The ring of rational formal sums of irreducible dessins.
//!
//! Basis elements are canonical irreducible dessins; a reducible dessin
//! enters as the sum of its components. The product is bilinear over the
//! Cartesian product followed by decomposition, and the one-edge dessin
//! is the multiplicative unit. Constants act as multiples of the unit, so
//! minimal polynomials are defined unitally (the unit's minimal
//! polynomial is x - 1, not undefined).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::dessin::{Dessin, IrreducibleDessin, S3Element};
use crate::error::{Error, Result};
use crate::exact::linalg::first_dependency;
use crate::exact::poly::RationalPolynomial;
use crate::exact::rational::{format_rational, parse_rational, Rational};

pub const DEFAULT_MINPOLY_DEGREE_CAP: usize = 64;
pub const DEFAULT_MINPOLY_BASIS_CAP: usize = 100_000;

/// A finite rational combination of irreducible dessins. Zero
/// coefficients are never stored; the zero element has no terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FormalSum {
    terms: BTreeMap<IrreducibleDessin, Rational>,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    /// The multiplicative unit: one copy of the one-edge dessin.
    pub fn unit() -> Self {
        FormalSum::from_irreducible(IrreducibleDessin::one())
    }

    pub fn from_irreducible(d: IrreducibleDessin) -> Self {
        FormalSum::term(d, Rational::one())
    }

    pub fn term(d: IrreducibleDessin, coefficient: Rational) -> Self {
        let mut sum = FormalSum::zero();
        sum.add_term(&d, &coefficient);
        sum
    }

    /// Identifies a dessin with the sum of its irreducible components
    /// (with multiplicity).
    pub fn from_dessin(d: &Dessin) -> Self {
        let mut sum = FormalSum::zero();
        let one = Rational::one();
        for component in d.decompose() {
            sum.add_term(&component, &one);
        }
        sum
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Basis dessins with nonzero coefficient, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = &IrreducibleDessin> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IrreducibleDessin, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, d: &IrreducibleDessin) -> Rational {
        self.terms.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, d: &IrreducibleDessin, coefficient: &Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.get_mut(d) {
            None => {
                self.terms.insert(d.clone(), coefficient.clone());
            }
            Some(existing) => {
                *existing += coefficient;
                if existing.is_zero() {
                    self.terms.remove(d);
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &FormalSum, factor: &Rational) {
        for (d, c) in &other.terms {
            self.add_term(d, &(c * factor));
        }
    }

    pub fn add(&self, other: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn neg(&self) -> FormalSum {
        FormalSum {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> FormalSum {
        if factor.is_zero() {
            return FormalSum::zero();
        }
        FormalSum {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.clone(), c * factor))
                .collect(),
        }
    }

    /// Bilinear product with a fresh memo table; use `mul_with_cache` to
    /// share basis-pair products across a longer computation.
    pub fn mul(&self, other: &FormalSum) -> FormalSum {
        self.mul_with_cache(other, &mut ProductCache::new())
    }

    pub fn mul_with_cache(&self, other: &FormalSum, cache: &mut ProductCache) -> FormalSum {
        let mut out = FormalSum::zero();
        for (d, cd) in &self.terms {
            for (e, ce) in &other.terms {
                let product = cache.basis_product(d, e);
                out.add_scaled(product, &(cd * ce));
            }
        }
        out
    }

    /// The edge-count homomorphism: sends each basis dessin to its edge
    /// count; multiplicative because components of a product have edge
    /// counts summing to the product of the factors' counts.
    pub fn edge_weight(&self) -> Rational {
        let mut total = Rational::zero();
        for (d, c) in &self.terms {
            total += c * Rational::from_integer(d.edge_count().into());
        }
        total
    }
}

/// Memo table for basis-pair products, keyed on unordered pairs since the
/// dessin product is commutative up to relabelling. Scoped to a single
/// computation; nothing persists globally.
#[derive(Default)]
pub struct ProductCache {
    products: HashMap<(IrreducibleDessin, IrreducibleDessin), FormalSum>,
}

impl ProductCache {
    pub fn new() -> Self {
        ProductCache::default()
    }

    fn basis_product(&mut self, d: &IrreducibleDessin, e: &IrreducibleDessin) -> &FormalSum {
        let key = if d <= e {
            (d.clone(), e.clone())
        } else {
            (e.clone(), d.clone())
        };
        self.products
            .entry(key)
            .or_insert_with_key(|(d, e)| FormalSum::from_dessin(&d.dessin().product(e.dessin())))
    }
}

/// Linear extension of averaging over the six branch-point symmetries:
/// each basis dessin maps to one sixth of the sum of its six images.
/// A projection: applying it twice equals applying it once, and its fixed
/// points are exactly the sums with constant coefficients on each orbit.
pub fn pi_s3(a: &FormalSum) -> FormalSum {
    let sixth = Rational::new(1.into(), 6.into());
    let mut out = FormalSum::zero();
    for (d, c) in a.terms() {
        let weight = c * &sixth;
        for &rho in &S3Element::ALL {
            let image = d.dessin().s3_apply(rho);
            // Symmetry images of irreducible dessins stay irreducible:
            // the image pair generates the same permutation group.
            out.add_term(&IrreducibleDessin::from_canonical(image), &weight);
        }
    }
    out
}

/// `[unit, a, a^2, ..., a^k]`.
pub fn power_sequence(a: &FormalSum, k: usize) -> Vec<FormalSum> {
    let mut cache = ProductCache::new();
    let mut powers = Vec::with_capacity(k + 1);
    powers.push(FormalSum::unit());
    for _ in 0..k {
        let next = powers
            .last()
            .expect("nonempty")
            .mul_with_cache(a, &mut cache);
        powers.push(next);
    }
    powers
}

/// Degree and support-size limits for minimal-polynomial computations.
/// Termination is guaranteed in principle (generated subalgebras are
/// finite-dimensional), but support can grow fast before the dependency
/// appears; the caps turn a hang into a loud error.
#[derive(Clone, Copy, Debug)]
pub struct MinPolyCaps {
    pub degree: usize,
    pub basis: usize,
}

impl Default for MinPolyCaps {
    fn default() -> Self {
        MinPolyCaps {
            degree: DEFAULT_MINPOLY_DEGREE_CAP,
            basis: DEFAULT_MINPOLY_BASIS_CAP,
        }
    }
}

/// The monic least-degree polynomial annihilating `a`, with constants
/// acting as multiples of the unit.
///
/// Powers of `a` are coordinatized over the union of their supports and
/// fed to the exact first-dependency search; the first dependency found
/// is the minimal polynomial (its leading coefficient is normalized to
/// one, and minimality is certified by the independence of the earlier
/// power vectors). Panics if a cap is zero.
pub fn minimal_polynomial(a: &FormalSum, caps: MinPolyCaps) -> Result<RationalPolynomial> {
    assert!(caps.degree > 0 && caps.basis > 0, "caps must be positive");
    let mut cache = ProductCache::new();
    let mut column: BTreeMap<IrreducibleDessin, usize> = BTreeMap::new();
    let mut powers: Vec<FormalSum> = vec![FormalSum::unit()];
    assign_columns(&mut column, powers.last().expect("unit"));
    loop {
        let dimension = column.len();
        let dense: Vec<Vec<Rational>> = powers
            .iter()
            .map(|p| densify(p, &column, dimension))
            .collect();
        if let Some(coefficients) = first_dependency(&dense)? {
            return Ok(RationalPolynomial::from_coeffs(coefficients));
        }
        let next_power = powers.len();
        if next_power > caps.degree {
            return Err(Error::CapExceeded {
                what: "minimal-polynomial degree",
                cap: caps.degree,
            });
        }
        let next = powers
            .last()
            .expect("nonempty")
            .mul_with_cache(a, &mut cache);
        assign_columns(&mut column, &next);
        if column.len() > caps.basis {
            return Err(Error::CapExceeded {
                what: "minimal-polynomial support basis",
                cap: caps.basis,
            });
        }
        powers.push(next);
    }
}

/// Columns are assigned in order of first appearance, so an existing
/// dessin's column never moves as the support grows.
pub(crate) fn assign_columns(column: &mut BTreeMap<IrreducibleDessin, usize>, sum: &FormalSum) {
    for d in sum.support() {
        if !column.contains_key(d) {
            column.insert(d.clone(), column.len());
        }
    }
}

pub(crate) fn densify(
    sum: &FormalSum,
    column: &BTreeMap<IrreducibleDessin, usize>,
    dimension: usize,
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dimension];
    for (d, c) in sum.terms() {
        out[column[d]] = c.clone();
    }
    out
}

/// Horner evaluation in the formal-sum ring; the constant term becomes a
/// multiple of the unit.
pub fn evaluate(p: &RationalPolynomial, a: &FormalSum) -> FormalSum {
    let mut cache = ProductCache::new();
    let one = IrreducibleDessin::one();
    let mut result = FormalSum::zero();
    for c in p.coeffs().iter().rev() {
        result = result.mul_with_cache(a, &mut cache);
        result.add_term(&one, c);
    }
    result
}

/// Outcome of checking that a minimal polynomial splits into linear
/// factors over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplittingReport {
    pub dessin: IrreducibleDessin,
    pub minimal_polynomial: RationalPolynomial,
    /// Rational roots with multiplicity, ascending.
    pub roots: Vec<Rational>,
    /// True when the roots account for the full degree.
    pub split: bool,
}

impl fmt::Display for SplittingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let roots = if self.roots.is_empty() {
            "-".to_string()
        } else {
            self.roots
                .iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{} | minpoly {} | roots {} | split {}",
            self.dessin, self.minimal_polynomial, roots, self.split
        )
    }
}

/// Computes the minimal polynomial of `1 * [d]` and deflates rational
/// roots; reports whether deflation reaches a constant.
pub fn verify_linear_splitting(
    d: &IrreducibleDessin,
    caps: MinPolyCaps,
) -> Result<SplittingReport> {
    let p = minimal_polynomial(&FormalSum::from_irreducible(d.clone()), caps)?;
    let roots = p.rational_roots()?;
    let split = roots.len() == p.degree().unwrap_or(0);
    Ok(SplittingReport {
        dessin: d.clone(),
        minimal_polynomial: p,
        roots,
        split,
    })
}

impl fmt::Display for FormalSum {
    /// One term per line: `<rational> * <dessin>`; zero prints nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} * {}", format_rational(c), d)?;
        }
        Ok(())
    }
}

impl FromStr for FormalSum {
    type Err = Error;

    /// One term per line, `<rational> * <dessin>`; blank lines and
    /// `#` comments are ignored; empty input is zero. Reducible dessin
    /// lines contribute their component sums; repeated dessins
    /// accumulate.
    fn from_str(s: &str) -> Result<Self> {
        let mut sum = FormalSum::zero();
        for (index, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (coefficient, dessin) = parse_term(line, index + 1)?;
            sum.add_scaled(&FormalSum::from_dessin(&dessin), &coefficient);
        }
        Ok(sum)
    }
}

fn parse_term(line: &str, number: usize) -> Result<(Rational, Dessin)> {
    let (coefficient, dessin) = line.split_once('*').ok_or_else(|| Error::Parse {
        line: number,
        message: format!("expected `<rational> * <dessin>`, got {line:?}"),
    })?;
    let coefficient = parse_rational(coefficient).map_err(|e| e.at_line(number))?;
    let dessin: Dessin = dessin
        .trim()
        .parse()
        .map_err(|e: Error| e.at_line(number))?;
    Ok((coefficient, dessin))
}

/// Parses a file of formal sums separated by blank lines; `#` lines are
/// comments. Runs of blank lines produce no empty sums, but a block
/// whose terms cancel is kept as an explicit zero.
pub fn parse_sums(text: &str) -> Result<Vec<FormalSum>> {
    let mut sums = Vec::new();
    let mut current: Option<FormalSum> = None;
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if let Some(sum) = current.take() {
                sums.push(sum);
            }
            continue;
        }
        let (coefficient, dessin) = parse_term(line, index + 1)?;
        let sum = current.get_or_insert_with(FormalSum::zero);
        sum.add_scaled(&FormalSum::from_dessin(&dessin), &coefficient);
    }
    if let Some(sum) = current.take() {
        sums.push(sum);
    }
    Ok(sums)
}
