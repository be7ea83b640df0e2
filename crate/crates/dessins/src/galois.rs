//! Orbit tables, invariant partitions, and balanced dessins.
//!
//! The arithmetic action on dessins is never computed here: callers
//! supply orbit tables (from files or from the invariant-based upper
//! bound), and everything downstream is exact algebra. Treating an
//! unknown dessin as fixed would fabricate mathematics, so averaging
//! over an uncovered dessin is an error rather than a pass-through.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::algebra::{
    assign_columns, densify, minimal_polynomial, pi_s3, FormalSum, MinPolyCaps, ProductCache,
};
use crate::dessin::{Dessin, IrreducibleDessin, Passport, S3Element};
use crate::error::{Error, Result};
use crate::exact::factor::factor_over_q;
use crate::exact::linalg::first_dependency;
use crate::exact::poly::RationalPolynomial;
use crate::exact::rational::Rational;

pub const DEFAULT_SUBALGEBRA_DEGREE_CAP: usize = 16;
pub const DEFAULT_SUBALGEBRA_SIZE_CAP: usize = 512;

/// Cheap invariants of an irreducible dessin. Orbits of the arithmetic
/// action never mix distinct keys, so grouping by key is an upper bound
/// on the true orbit partition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct InvariantKey {
    pub edge_count: usize,
    pub passport: Passport,
}

impl InvariantKey {
    pub fn of(d: &IrreducibleDessin) -> Self {
        InvariantKey {
            edge_count: d.edge_count(),
            passport: d.passport(),
        }
    }
}

/// A named block of an orbit table; always non-empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orbit {
    name: String,
    members: BTreeSet<IrreducibleDessin>,
}

impl Orbit {
    pub fn new(name: impl Into<String>, members: BTreeSet<IrreducibleDessin>) -> Result<Self> {
        let name = name.into();
        if members.is_empty() {
            return Err(Error::EmptyOrbit { name });
        }
        Ok(Orbit { name, members })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> impl Iterator<Item = &IrreducibleDessin> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false: emptiness is rejected at construction.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, d: &IrreducibleDessin) -> bool {
        self.members.contains(d)
    }
}

/// An alleged partition of a finite dessin set into orbits of the
/// arithmetic action.
///
/// Construction is permissive: overlapping orbits are representable so
/// that `validate` can report them as data. When orbits overlap, a
/// dessin belongs to the first orbit that lists it.
#[derive(Clone, Debug)]
pub struct OrbitTable {
    orbits: Vec<Orbit>,
    provenance: String,
    index: HashMap<IrreducibleDessin, usize>,
}

impl OrbitTable {
    pub fn new(orbits: Vec<Orbit>, provenance: impl Into<String>) -> Self {
        let mut index = HashMap::new();
        for (position, orbit) in orbits.iter().enumerate() {
            for d in orbit.members() {
                index.entry(d.clone()).or_insert(position);
            }
        }
        OrbitTable {
            orbits,
            provenance: provenance.into(),
            index,
        }
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn covers(&self, d: &IrreducibleDessin) -> bool {
        self.index.contains_key(d)
    }

    pub fn orbit_of(&self, d: &IrreducibleDessin) -> Option<&Orbit> {
        self.index.get(d).map(|&position| &self.orbits[position])
    }

    fn orbit_index(&self, d: &IrreducibleDessin) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// Covered dessins in table order, each reported once even if orbits
    /// overlap.
    pub fn covered(&self) -> impl Iterator<Item = &IrreducibleDessin> {
        self.orbits
            .iter()
            .enumerate()
            .flat_map(move |(position, orbit)| {
                orbit.members().filter(move |d| self.index[*d] == position)
            })
    }

    /// Checks the table invariants and returns every failure found:
    /// disjointness, per-orbit edge-count constancy, per-orbit passport
    /// constancy (skipped when `strict` is false, so adversarial tables
    /// can exercise downstream behaviour), and closure of the covered
    /// set under the six branch-point symmetries. Closure demands both
    /// that every image is covered and that each orbit's image under a
    /// fixed symmetry lands inside a single orbit; the latter is what
    /// makes the two projections commute.
    pub fn validate(&self, strict: bool) -> Vec<Violation> {
        let mut violations = Vec::new();

        let mut first_home: BTreeMap<&IrreducibleDessin, usize> = BTreeMap::new();
        for (position, orbit) in self.orbits.iter().enumerate() {
            for d in orbit.members() {
                match first_home.get(d) {
                    None => {
                        first_home.insert(d, position);
                    }
                    Some(&first) => violations.push(Violation::Overlap {
                        dessin: d.clone(),
                        first: self.orbits[first].name().to_string(),
                        second: orbit.name().to_string(),
                    }),
                }
            }
        }

        for orbit in &self.orbits {
            let mut members = orbit.members();
            let expected = members.next().expect("orbits are non-empty").edge_count();
            for d in members {
                if d.edge_count() != expected {
                    violations.push(Violation::EdgeCount {
                        orbit: orbit.name().to_string(),
                        expected,
                        dessin: d.clone(),
                    });
                }
            }
        }

        if strict {
            for orbit in &self.orbits {
                let mut members = orbit.members();
                let expected = members.next().expect("orbits are non-empty").passport();
                for d in members {
                    if d.passport() != expected {
                        violations.push(Violation::Passport {
                            orbit: orbit.name().to_string(),
                            dessin: d.clone(),
                        });
                    }
                }
            }
        }

        // Missing images are deduplicated: each reported once with one
        // witness, not once per (dessin, symmetry) pair.
        let mut missing: BTreeMap<IrreducibleDessin, IrreducibleDessin> = BTreeMap::new();
        for orbit in &self.orbits {
            for d in orbit.members() {
                for image in d.dessin().s3_orbit() {
                    let image = IrreducibleDessin::from_canonical(image);
                    if !self.covers(&image) {
                        missing.entry(image).or_insert_with(|| d.clone());
                    }
                }
            }
        }
        for (image, witness) in missing {
            violations.push(Violation::UncoveredImage {
                dessin: witness,
                image,
            });
        }

        for (position, orbit) in self.orbits.iter().enumerate() {
            for &rho in &S3Element::ALL {
                let mut target: Option<usize> = None;
                for d in orbit.members() {
                    let image = IrreducibleDessin::from_canonical(d.dessin().s3_apply(rho));
                    // Uncovered images were already reported above.
                    let Some(home) = self.orbit_index(&image) else {
                        continue;
                    };
                    match target {
                        None => target = Some(home),
                        Some(first) if first != home => {
                            violations.push(Violation::SplitImage {
                                orbit: self.orbits[position].name().to_string(),
                                symmetry: rho,
                                first: self.orbits[first].name().to_string(),
                                second: self.orbits[home].name().to_string(),
                            });
                            break;
                        }
                        Some(_) => {}
                    }
                }
            }
        }

        violations
    }
}

impl fmt::Display for OrbitTable {
    /// File form: one `orbit <name>` header per orbit followed by its
    /// member dessin lines, with a blank line between orbits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, orbit) in self.orbits.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            writeln!(f, "orbit {}", orbit.name())?;
            for d in orbit.members() {
                writeln!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for OrbitTable {
    type Err = Error;

    /// Parses the file form. `#` lines are comments; members are
    /// re-canonicalized, must be irreducible, and a header immediately
    /// following another orbit's members is accepted without a blank
    /// line. The resulting provenance is `file`.
    fn from_str(s: &str) -> Result<Self> {
        struct Open {
            name: String,
            header_line: usize,
            members: BTreeSet<IrreducibleDessin>,
        }
        fn flush(open: &mut Option<Open>, orbits: &mut Vec<Orbit>) -> Result<()> {
            if let Some(open) = open.take() {
                if open.members.is_empty() {
                    return Err(Error::Parse {
                        line: open.header_line,
                        message: format!("orbit {} has no members", open.name),
                    });
                }
                orbits.push(Orbit::new(open.name, open.members)?);
            }
            Ok(())
        }

        let mut orbits = Vec::new();
        let mut open: Option<Open> = None;
        for (i, raw) in s.lines().enumerate() {
            let line = raw.trim();
            let number = i + 1;
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                flush(&mut open, &mut orbits)?;
                continue;
            }
            if line == "orbit" || line.starts_with("orbit ") {
                flush(&mut open, &mut orbits)?;
                let name = line["orbit".len()..].trim();
                if name.is_empty() {
                    return Err(Error::Parse {
                        line: number,
                        message: "orbit header needs a name".into(),
                    });
                }
                open = Some(Open {
                    name: name.to_string(),
                    header_line: number,
                    members: BTreeSet::new(),
                });
                continue;
            }
            let Some(open) = open.as_mut() else {
                return Err(Error::Parse {
                    line: number,
                    message: "dessin line before any `orbit <name>` header".into(),
                });
            };
            let dessin: Dessin = line.parse().map_err(|e: Error| e.at_line(number))?;
            let member = IrreducibleDessin::new(&dessin).map_err(|e| e.at_line(number))?;
            open.members.insert(member);
        }
        flush(&mut open, &mut orbits)?;
        Ok(OrbitTable::new(orbits, "file"))
    }
}

/// A single failed table invariant; validation returns these as data
/// rather than erroring, so diagnostics can be listed in full.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    Overlap {
        dessin: IrreducibleDessin,
        first: String,
        second: String,
    },
    EdgeCount {
        orbit: String,
        expected: usize,
        dessin: IrreducibleDessin,
    },
    Passport {
        orbit: String,
        dessin: IrreducibleDessin,
    },
    UncoveredImage {
        dessin: IrreducibleDessin,
        image: IrreducibleDessin,
    },
    SplitImage {
        orbit: String,
        symmetry: S3Element,
        first: String,
        second: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Overlap {
                dessin,
                first,
                second,
            } => write!(
                f,
                "overlap: {dessin} appears in orbits {first} and {second}"
            ),
            Violation::EdgeCount {
                orbit,
                expected,
                dessin,
            } => write!(
                f,
                "edge-count: orbit {orbit} mixes {expected} edges with {} ({dessin})",
                dessin.edge_count()
            ),
            Violation::Passport { orbit, dessin } => write!(
                f,
                "passport: orbit {orbit} member {dessin} has a different passport"
            ),
            Violation::UncoveredImage { dessin, image } => write!(
                f,
                "s3-closure: image {image} of covered dessin {dessin} is not covered"
            ),
            Violation::SplitImage {
                orbit,
                symmetry,
                first,
                second,
            } => write!(
                f,
                "s3-split: orbit {orbit} maps into both {first} and {second} under {symmetry}"
            ),
        }
    }
}

/// Groups dessins by `InvariantKey`. Singleton blocks certify fixed
/// dessins; larger blocks are upper bounds on true orbits, not
/// confirmed orbits. Provenance is `invariant-refinement` and blocks
/// are named `inv-0`, `inv-1`, ... in key order.
pub fn invariant_partition<I>(dessins: I) -> OrbitTable
where
    I: IntoIterator<Item = IrreducibleDessin>,
{
    let mut groups: BTreeMap<InvariantKey, BTreeSet<IrreducibleDessin>> = BTreeMap::new();
    for d in dessins {
        groups.entry(InvariantKey::of(&d)).or_default().insert(d);
    }
    let orbits = groups
        .into_values()
        .enumerate()
        .map(|(i, members)| Orbit::new(format!("inv-{i}"), members).expect("groups are non-empty"))
        .collect();
    OrbitTable::new(orbits, "invariant-refinement")
}

/// Linear extension of averaging each basis dessin over its table
/// orbit. Errors if any support dessin is uncovered.
pub fn pi_g(a: &FormalSum, table: &OrbitTable) -> Result<FormalSum> {
    let mut out = FormalSum::zero();
    for (d, c) in a.terms() {
        let orbit = table.orbit_of(d).ok_or_else(|| Error::Uncovered {
            dessin: d.to_string(),
        })?;
        let average = c / Rational::from_integer(orbit.len().into());
        for e in orbit.members() {
            out = out.add(&FormalSum::term(e.clone(), average.clone()));
        }
    }
    Ok(out)
}

fn require_s3_orbit_covered(d: &IrreducibleDessin, table: &OrbitTable) -> Result<()> {
    for image in d.dessin().s3_orbit() {
        let image = IrreducibleDessin::from_canonical(image);
        if !table.covers(&image) {
            return Err(Error::Uncovered {
                dessin: image.to_string(),
            });
        }
    }
    Ok(())
}

/// The symmetry average of `d` minus the symmetry average of its table
/// orbit's mean: fixed by `pi_s3` by construction, and with zero table
/// average on tables whose orbits respect the symmetries. Requires the
/// whole symmetry orbit of `d` to be covered.
pub fn balanced(d: &IrreducibleDessin, table: &OrbitTable) -> Result<FormalSum> {
    require_s3_orbit_covered(d, table)?;
    let sum = FormalSum::from_irreducible(d.clone());
    let averaged = pi_g(&sum, table)?;
    Ok(pi_s3(&sum).sub(&pi_s3(&averaged)))
}

/// Number of distinct values `pi_s3([E]) - pi_s3(pi_g([d]))` as `E`
/// ranges over the table orbit of `d`.
///
/// The arithmetic action commutes with the symmetry average, so the
/// images of the balanced sum under the action range exactly over the
/// symmetry averages of the orbit members, shifted by the common fixed
/// correction term; counting distinct shifted values counts the orbit
/// of the balanced sum without element-level orbit maps.
pub fn balanced_orbit_size(d: &IrreducibleDessin, table: &OrbitTable) -> Result<usize> {
    require_s3_orbit_covered(d, table)?;
    let orbit = table.orbit_of(d).ok_or_else(|| Error::Uncovered {
        dessin: d.to_string(),
    })?;
    let correction = pi_s3(&pi_g(&FormalSum::from_irreducible(d.clone()), table)?);
    let distinct: BTreeSet<FormalSum> = orbit
        .members()
        .map(|e| pi_s3(&FormalSum::from_irreducible(e.clone())).sub(&correction))
        .collect();
    Ok(distinct.len())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// Exactly one prime factor has degree equal to the orbit size.
    Holds,
    /// No prime factor, or several, have that degree.
    Fails,
    /// The balanced sum is zero (fixed dessin): the claim holds
    /// trivially with polynomial x and orbit size 1. Kept separate so
    /// batch statistics stay honest.
    Degenerate,
}

impl Verdict {
    pub fn holds(self) -> bool {
        matches!(self, Verdict::Holds | Verdict::Degenerate)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "HOLDS"),
            Verdict::Fails => write!(f, "FAILS"),
            Verdict::Degenerate => write!(f, "HOLDS(DEGENERATE)"),
        }
    }
}

/// One checked dessin: the balanced sum's minimal polynomial, its prime
/// factorization, the predicted factor degree, and whether exactly one
/// prime factor matches it. The verdict is reported data, not an
/// assertion; the underlying claim is open.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjectureReport {
    pub dessin: IrreducibleDessin,
    /// Distinct symmetry-averaged images over the table orbit.
    pub orbit_size: usize,
    pub minimal_polynomial: RationalPolynomial,
    /// Monic prime factors with multiplicity, sorted by degree then
    /// coefficients.
    pub factors: Vec<(RationalPolynomial, u32)>,
    pub verdict: Verdict,
}

impl ConjectureReport {
    /// Prime factor degrees listed with multiplicity; they sum to the
    /// degree of the minimal polynomial.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut degrees = Vec::new();
        for (factor, multiplicity) in &self.factors {
            let degree = factor.degree().expect("prime factors are nonzero");
            degrees.extend(std::iter::repeat(degree).take(*multiplicity as usize));
        }
        degrees
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degrees = self
            .factor_degrees()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(
            f,
            "{} | orbit-size {} | minpoly degree {} | factor degrees {} | {}",
            self.dessin,
            self.orbit_size,
            self.minimal_polynomial
                .degree()
                .expect("minimal polynomials are nonzero"),
            degrees,
            self.verdict
        )
    }
}

/// Checks whether the balanced sum of `d` has exactly one prime factor
/// of its minimal polynomial whose degree equals the balanced orbit
/// size. Requires coverage of the symmetry orbit of `d`; meaningful on
/// validated tables.
pub fn conjecture1_check(
    d: &IrreducibleDessin,
    table: &OrbitTable,
    caps: MinPolyCaps,
) -> Result<ConjectureReport> {
    let psi = balanced(d, table)?;
    let p = minimal_polynomial(&psi, caps)?;
    let (_, factors) = factor_over_q(&p)?;
    let orbit_size = balanced_orbit_size(d, table)?;
    let verdict = if psi.is_zero() {
        Verdict::Degenerate
    } else {
        let matching = factors
            .iter()
            .filter(|(factor, _)| factor.degree() == Some(orbit_size))
            .count();
        if matching == 1 {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    };
    Ok(ConjectureReport {
        dessin: d.clone(),
        orbit_size,
        minimal_polynomial: p,
        factors,
        verdict,
    })
}

/// Limits for subalgebra basis construction. The degree cap bounds the
/// length of generator products explored; the size cap bounds the basis
/// and trips as an error.
#[derive(Clone, Copy, Debug)]
pub struct SubalgebraCaps {
    pub degree: usize,
    pub size: usize,
}

impl Default for SubalgebraCaps {
    fn default() -> Self {
        SubalgebraCaps {
            degree: DEFAULT_SUBALGEBRA_DEGREE_CAP,
            size: DEFAULT_SUBALGEBRA_SIZE_CAP,
        }
    }
}

/// A linearly independent spanning set for the unital subalgebra
/// generated by the given sums.
///
/// Starts from the unit and the generators and keeps adjoining products
/// of basis elements with generators, discarding candidates that are
/// already in the span (checked by exact dependency search on support
/// coordinates). Draining the worklist proves closure, because every
/// product of a spanning element with a generator then lies in the
/// span. If the degree cap halts expansion first, the result spans the
/// generator products up to that length only. Panics if a cap is zero.
pub fn balanced_subalgebra_basis(
    generators: &[FormalSum],
    caps: SubalgebraCaps,
) -> Result<Vec<FormalSum>> {
    assert!(caps.degree > 0 && caps.size > 0, "caps must be positive");
    let mut cache = ProductCache::new();
    let mut column: BTreeMap<IrreducibleDessin, usize> = BTreeMap::new();
    let mut basis: Vec<FormalSum> = Vec::new();
    let mut degrees: Vec<usize> = Vec::new();
    let mut worklist: VecDeque<usize> = VecDeque::new();

    let adjoin = |candidate: FormalSum,
                  degree: usize,
                  column: &mut BTreeMap<IrreducibleDessin, usize>,
                  basis: &mut Vec<FormalSum>,
                  degrees: &mut Vec<usize>|
     -> Result<bool> {
        if candidate.is_zero() {
            return Ok(false);
        }
        assign_columns(column, &candidate);
        let dimension = column.len();
        let mut dense: Vec<Vec<Rational>> = basis
            .iter()
            .map(|b| densify(b, column, dimension))
            .collect();
        dense.push(densify(&candidate, column, dimension));
        if first_dependency(&dense)?.is_some() {
            return Ok(false);
        }
        if basis.len() == caps.size {
            return Err(Error::CapExceeded {
                what: "subalgebra basis size",
                cap: caps.size,
            });
        }
        basis.push(candidate);
        degrees.push(degree);
        Ok(true)
    };

    adjoin(FormalSum::unit(), 0, &mut column, &mut basis, &mut degrees)?;
    worklist.push_back(0);
    for g in generators {
        if adjoin(g.clone(), 1, &mut column, &mut basis, &mut degrees)? {
            worklist.push_back(basis.len() - 1);
        }
    }

    while let Some(i) = worklist.pop_front() {
        if degrees[i] >= caps.degree {
            continue;
        }
        for g in generators {
            let candidate = basis[i].mul_with_cache(g, &mut cache);
            let degree = degrees[i] + 1;
            if adjoin(candidate, degree, &mut column, &mut basis, &mut degrees)? {
                worklist.push_back(basis.len() - 1);
            }
        }
    }
    Ok(basis)
}
