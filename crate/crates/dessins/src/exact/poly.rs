//! Univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored ascending (index = degree) with no trailing
//! zeros; the zero polynomial is the empty list. Text forms: the emitted
//! grammar is the bare coefficient list `c0,c1,...,ck`; parsing also
//! accepts the spelled-out form `c0 + c1*x + c2*x^2 + ...` with exact
//! rational coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPolynomial::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        RationalPolynomial::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(value: Rational) -> Self {
        RationalPolynomial::from_coeffs(vec![value])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn from_integer_coeffs(coeffs: &[i64]) -> Self {
        RationalPolynomial::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub(crate) fn from_bigint_coeffs(coeffs: &[BigInt]) -> Self {
        RationalPolynomial::from_coeffs(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// `c * x^degree`.
    pub fn monomial(degree: usize, coefficient: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = coefficient;
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].clone() + c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].clone() + c;
        }
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a * b;
            }
        }
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return RationalPolynomial::zero();
        }
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut out = RationalPolynomial::one();
        for _ in 0..exponent {
            out = out.mul(self);
        }
        out
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and
    /// `deg remainder < deg divisor`. Errors on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let divisor_degree = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        let mut remainder = self.coeffs.clone();
        let mut quotient = vec![Rational::zero(); self.coeffs.len().saturating_sub(divisor_degree)];
        while remainder.len() > divisor_degree {
            let shift = remainder.len() - 1 - divisor_degree;
            let factor = remainder.last().unwrap() / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = &factor * c;
                remainder[shift + i] = remainder[shift + i].clone() - delta;
            }
            debug_assert!(remainder.last().unwrap().is_zero());
            remainder.pop();
            while remainder.last().is_some_and(Zero::is_zero) {
                remainder.pop();
            }
            quotient[shift] = factor;
        }
        Ok((
            RationalPolynomial::from_coeffs(quotient),
            RationalPolynomial::from_coeffs(remainder),
        ))
    }

    /// Monic greatest common divisor by the Euclidean algorithm;
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Divides by the leading coefficient; the zero polynomial is returned
    /// unchanged.
    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => RationalPolynomial::zero(),
            Some(lead) => {
                let inverse = Rational::one() / lead;
                self.scale(&inverse)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RationalPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        RationalPolynomial::from_coeffs(coeffs)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, at: &Rational) -> Rational {
        let mut value = Rational::zero();
        for c in self.coeffs.iter().rev() {
            value = value * at + c;
        }
        value
    }

    /// Writes `self = content * primitive` with `content` rational and
    /// `primitive` an integer-coefficient polynomial that is primitive with
    /// positive leading coefficient. The zero polynomial yields
    /// `(0, [])`.
    pub fn content_and_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let mut denominator_lcm = BigInt::one();
        for c in &self.coeffs {
            denominator_lcm = denominator_lcm.lcm(c.denom());
        }
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denominator_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &scaled {
            content = content.gcd(c);
        }
        if scaled.last().unwrap().is_negative() {
            content = -content;
        }
        let primitive: Vec<BigInt> = scaled.iter().map(|c| c / &content).collect();
        (Rational::new(content, denominator_lcm), primitive)
    }

    /// All rational roots with multiplicity, sorted ascending.
    ///
    /// Candidates `p/q` come from divisor trials on the trailing and
    /// leading coefficients of the primitive integer form; each candidate
    /// is confirmed by exact evaluation and removed by exact deflation, so
    /// multiplicities fall out of repeated deflation. Errors on the zero
    /// polynomial.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots = Vec::new();
        let mut current = self.clone();

        // Roots at zero: strip powers of x.
        while current.coeffs.len() > 1 && current.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            current = RationalPolynomial::from_coeffs(current.coeffs[1..].to_vec());
        }

        'deflate: while current.degree().unwrap_or(0) >= 1 {
            let (_, primitive) = current.content_and_primitive();
            let trailing = primitive.first().unwrap().abs();
            let leading = primitive.last().unwrap().abs();
            let mut candidates = Vec::new();
            for p in divisors(&trailing) {
                for q in divisors(&leading) {
                    let positive = Rational::new(p.clone(), q.clone());
                    candidates.push(-positive.clone());
                    candidates.push(positive);
                }
            }
            candidates.sort();
            candidates.dedup();
            for candidate in candidates {
                if current.eval(&candidate).is_zero() {
                    let root_factor =
                        RationalPolynomial::from_coeffs(vec![-candidate.clone(), Rational::one()]);
                    let (quotient, remainder) = current.divrem(&root_factor)?;
                    debug_assert!(remainder.is_zero());
                    roots.push(candidate);
                    current = quotient;
                    continue 'deflate;
                }
            }
            break;
        }
        roots.sort();
        Ok(roots)
    }

    /// Human-readable form `c0 + c1*x + c2*x^2 + ...`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coefficient = format_rational(&magnitude);
            match i {
                0 => out.push_str(&coefficient),
                _ => {
                    if magnitude.is_one() {
                        out.push('x');
                    } else {
                        out.push_str(&coefficient);
                        out.push_str("*x");
                    }
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

/// Positive divisors of `|n|` in ascending order; `n` must be nonzero.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    debug_assert!(!n.is_zero());
    // Factor by trial division, fast path in u128 when possible.
    let mut prime_powers: Vec<(BigInt, u32)> = Vec::new();
    if let Ok(mut small) = u128::try_from(&n) {
        let mut push = |p: u128, e: u32| prime_powers.push((BigInt::from(p), e));
        let mut p: u128 = 2;
        while p.checked_mul(p).is_some_and(|sq| sq <= small) {
            if small % p == 0 {
                let mut e = 0;
                while small % p == 0 {
                    small /= p;
                    e += 1;
                }
                push(p, e);
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if small > 1 {
            push(small, 1);
        }
    } else {
        let mut rest = n.clone();
        let two = BigInt::from(2);
        let mut p = two.clone();
        while &p * &p <= rest {
            if (&rest % &p).is_zero() {
                let mut e = 0;
                while (&rest % &p).is_zero() {
                    rest = &rest / &p;
                    e += 1;
                }
                prime_powers.push((p.clone(), e));
            }
            p += if p == two { BigInt::one() } else { two.clone() };
        }
        if rest > BigInt::one() {
            prime_powers.push((rest, 1));
        }
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in prime_powers {
        let mut extended = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut power = BigInt::one();
            for _ in 0..=e {
                extended.push(d * &power);
                power = &power * &p;
            }
        }
        out = extended;
    }
    out.sort();
    out
}

impl fmt::Display for RationalPolynomial {
    /// The emitted text form: the coefficient list `c0,c1,...,ck`
    /// ascending; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        Ok(())
    }
}

impl FromStr for RationalPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                line: 1,
                message: "empty polynomial".into(),
            });
        }
        if text.contains('x') {
            parse_term_form(text)
        } else {
            let coeffs = text
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            Ok(RationalPolynomial::from_coeffs(coeffs))
        }
    }
}

/// Parses `c0 + c1*x + c2*x^2 + ...`; terms may appear in any order and
/// repeated powers accumulate.
fn parse_term_form(text: &str) -> Result<RationalPolynomial> {
    let bad = |message: String| Error::Parse { line: 1, message };
    // Split into signed terms at top-level + and -.
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms: Vec<String> = Vec::new();
    let mut current = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-')
            && i > 0
            && !matches!(compact.as_bytes()[i - 1], b'+' | b'-' | b'/' | b'*' | b'^')
        {
            terms.push(std::mem::take(&mut current));
            if ch == '-' {
                current.push('-');
            }
        } else {
            current.push(ch);
        }
    }
    terms.push(current);

    let mut coeffs: Vec<Rational> = Vec::new();
    for term in terms {
        if term.is_empty() || term == "-" {
            return Err(bad("empty term".into()));
        }
        let (coefficient_text, power) = match term.find('x') {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let before = &term[..pos];
                let after = &term[pos + 1..];
                let power = if after.is_empty() {
                    1
                } else if let Some(exponent) = after.strip_prefix('^') {
                    exponent
                        .parse::<usize>()
                        .map_err(|_| bad(format!("bad exponent {after:?}")))?
                } else {
                    return Err(bad(format!("unexpected text after x: {after:?}")));
                };
                let coefficient = match before {
                    "" => "1",
                    "-" => "-1",
                    other => other.strip_suffix('*').unwrap_or(other),
                };
                (coefficient, power)
            }
        };
        let coefficient = parse_rational(coefficient_text)?;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::zero());
        }
        coeffs[power] = coeffs[power].clone() + coefficient;
    }
    Ok(RationalPolynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{integer, rational};

    fn poly(coeffs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_integer_coeffs(coeffs)
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        let p = RationalPolynomial::from_coeffs(vec![integer(1), integer(0), integer(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(RationalPolynomial::from_coeffs(vec![integer(0)]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic_basics() {
        let a = poly(&[1, 1]); // 1 + x
        let b = poly(&[-1, 1]); // -1 + x
        assert_eq!(a.mul(&b), poly(&[-1, 0, 1]));
        assert_eq!(a.add(&b), poly(&[0, 2]));
        assert_eq!(a.sub(&a), RationalPolynomial::zero());
        assert_eq!(a.pow(2), poly(&[1, 2, 1]));
    }

    #[test]
    fn divrem_recovers_quotient_and_remainder() {
        let dividend = poly(&[2, 0, 1, 1]); // 2 + x^2 + x^3
        let divisor = poly(&[1, 1]); // 1 + x
        let (q, r) = dividend.divrem(&divisor).unwrap();
        assert_eq!(q.mul(&divisor).add(&r), dividend);
        assert!(r.degree() < divisor.degree());
        assert!(matches!(
            dividend.divrem(&RationalPolynomial::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn gcd_is_monic() {
        // gcd(x^2 - 1, x - 1) = x - 1
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[-1, 1]);
        assert_eq!(a.gcd(&b), poly(&[-1, 1]));
        // scaling does not change the monic gcd
        assert_eq!(
            a.scale(&integer(3)).gcd(&b.scale(&integer(-2))),
            poly(&[-1, 1])
        );
        assert_eq!(a.gcd(&RationalPolynomial::zero()), a.make_monic());
        assert!(RationalPolynomial::zero()
            .gcd(&RationalPolynomial::zero())
            .is_zero());
    }

    #[test]
    fn derivative_and_eval() {
        let p = poly(&[1, -2, 3]); // 1 - 2x + 3x^2
        assert_eq!(p.derivative(), poly(&[-2, 6]));
        assert_eq!(p.eval(&integer(2)), integer(9));
        assert_eq!(RationalPolynomial::zero().eval(&integer(5)), integer(0));
    }

    #[test]
    fn content_and_primitive_normalizes_sign() {
        let p = poly(&[2, 0, -2]).scale(&rational(1, 3)); // (2 - 2x^2)/3
        let (content, primitive) = p.content_and_primitive();
        assert_eq!(content, rational(-2, 3));
        assert_eq!(
            primitive,
            vec![BigInt::from(-1), BigInt::from(0), BigInt::from(1)]
        );
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // x^2 - 2x = x(x - 2)
        let p = poly(&[0, -2, 1]);
        assert_eq!(p.rational_roots().unwrap(), vec![integer(0), integer(2)]);
        // x^2 - 2 has no rational roots
        assert_eq!(poly(&[-2, 0, 1]).rational_roots().unwrap(), vec![]);
        // (x - 1)^2
        assert_eq!(
            poly(&[1, -2, 1]).rational_roots().unwrap(),
            vec![integer(1), integer(1)]
        );
        // (2x - 1)(x + 3) has roots 1/2 and -3
        let p = poly(&[-3, 5, 2]);
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![integer(-3), rational(1, 2)]
        );
        assert!(matches!(
            RationalPolynomial::zero().rational_roots(),
            Err(Error::ZeroPolynomial)
        ));
        // constants have no roots
        assert_eq!(poly(&[5]).rational_roots().unwrap(), vec![]);
    }

    #[test]
    fn display_is_the_coefficient_list() {
        let p = poly(&[0, -2, 1]);
        assert_eq!(p.to_string(), "0,-2,1");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
        let half = RationalPolynomial::from_coeffs(vec![rational(1, 2), integer(1)]);
        assert_eq!(half.to_string(), "1/2,1");
    }

    #[test]
    fn parses_both_text_forms() {
        let expected = poly(&[0, -2, 1]);
        assert_eq!("0,-2,1".parse::<RationalPolynomial>().unwrap(), expected);
        assert_eq!("x^2 - 2*x".parse::<RationalPolynomial>().unwrap(), expected);
        assert_eq!(
            "-2*x + x^2".parse::<RationalPolynomial>().unwrap(),
            expected
        );
        assert_eq!(
            "1/2 + x".parse::<RationalPolynomial>().unwrap(),
            RationalPolynomial::from_coeffs(vec![rational(1, 2), integer(1)])
        );
        assert_eq!(
            "0".parse::<RationalPolynomial>().unwrap(),
            RationalPolynomial::zero()
        );
        assert_eq!(
            "x + x".parse::<RationalPolynomial>().unwrap(),
            poly(&[0, 2])
        );
        assert!("".parse::<RationalPolynomial>().is_err());
        assert!("x^".parse::<RationalPolynomial>().is_err());
        assert!("2**x".parse::<RationalPolynomial>().is_err());
    }

    #[test]
    fn pretty_form_reads_naturally() {
        assert_eq!(poly(&[0, -2, 1]).pretty(), "-2*x + x^2");
        assert_eq!(poly(&[1]).pretty(), "1");
        assert_eq!(poly(&[-1, 1]).pretty(), "-1 + x");
        assert_eq!(RationalPolynomial::zero().pretty(), "0");
    }

    #[test]
    fn display_round_trips_through_parse() {
        let polys = vec![
            RationalPolynomial::zero(),
            poly(&[5]),
            poly(&[0, -2, 1]),
            RationalPolynomial::from_coeffs(vec![rational(-7, 3), integer(0), rational(1, 2)]),
        ];
        for p in polys {
            assert_eq!(p.to_string().parse::<RationalPolynomial>().unwrap(), p);
        }
    }

    #[test]
    fn divisors_of_small_numbers() {
        let divs = divisors(&BigInt::from(12));
        let expected: Vec<BigInt> = [1, 2, 3, 4, 6, 12]
            .iter()
            .map(|&d| BigInt::from(d))
            .collect();
        assert_eq!(divs, expected);
        assert_eq!(divisors(&BigInt::from(-7)).len(), 2);
        assert_eq!(divisors(&BigInt::from(1)), vec![BigInt::one()]);
    }
}
