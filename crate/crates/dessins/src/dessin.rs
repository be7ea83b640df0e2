//! Dessins: pairs of permutations of an edge set, considered up to
//! simultaneous relabelling. Canonical forms, decomposition into
//! irreducible components, the Cartesian product, passports, and the
//! symmetry action that permutes the three branch points.
//!
//! Branch-point convention, fixed crate-wide: position 0 carries alpha,
//! position 1 carries beta, and position infinity carries (alpha beta)^-1
//! so that the triple multiplies to the identity.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{group_order, orbits, CycleType, GroupOrder, Permutation};

/// Cap for passport monodromy-order closures; larger groups are recorded
/// as overflow so invariant keys stay total.
pub const DEFAULT_GROUP_ORDER_CAP: usize = 1_000_000;

/// An ordered pair of same-degree permutations of the edge set {0..n-1}.
/// Two dessins are "the same up to relabelling" when some permutation
/// conjugates both coordinates of one onto the other; `canonicalize`
/// picks the distinguished representative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dessin {
    n: usize,
    alpha: Permutation,
    beta: Permutation,
}

impl Dessin {
    pub fn new(alpha: Permutation, beta: Permutation) -> Result<Self> {
        if alpha.degree() != beta.degree() {
            return Err(Error::DegreeMismatch {
                left: alpha.degree(),
                right: beta.degree(),
            });
        }
        Ok(Dessin {
            n: alpha.degree(),
            alpha,
            beta,
        })
    }

    /// The unique dessin with one edge.
    pub fn one_edge() -> Self {
        Dessin::new(Permutation::identity(1), Permutation::identity(1)).expect("equal degrees")
    }

    pub fn edge_count(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn beta(&self) -> &Permutation {
        &self.beta
    }

    /// True when alpha and beta together move every edge to every other,
    /// i.e. the dessin has a single component.
    pub fn is_irreducible(&self) -> bool {
        self.orbit_blocks().len() == 1
    }

    fn orbit_blocks(&self) -> Vec<Vec<usize>> {
        orbits(&[self.alpha.clone(), self.beta.clone()], self.n)
    }

    /// Splits into irreducible components: each orbit block of
    /// {alpha, beta} is relabelled densely and canonicalized. The result
    /// is sorted; repeated components appear repeatedly (a multiset).
    /// Total edge count is preserved.
    pub fn decompose(&self) -> Vec<IrreducibleDessin> {
        let mut components: Vec<IrreducibleDessin> = self
            .orbit_blocks()
            .iter()
            .map(|block| {
                let position = |edge: usize| {
                    block
                        .binary_search(&edge)
                        .expect("orbit block is closed under both permutations")
                };
                let alpha = block.iter().map(|&e| position(self.alpha.image(e)));
                let beta = block.iter().map(|&e| position(self.beta.image(e)));
                let restricted = Dessin {
                    n: block.len(),
                    alpha: Permutation::from_images_unchecked(alpha.collect()),
                    beta: Permutation::from_images_unchecked(beta.collect()),
                };
                IrreducibleDessin::from_canonical(canonical_irreducible(&restricted))
            })
            .collect();
        components.sort();
        components
    }

    /// The distinguished representative of the relabelling class: equal
    /// classes canonicalize identically, distinct classes differently.
    /// Irreducible dessins take the lexicographically least traversal
    /// relabelling over all start edges; reducible dessins are rebuilt
    /// from their sorted canonical components on consecutive label
    /// ranges.
    pub fn canonicalize(&self) -> Dessin {
        let components = self.decompose();
        if components.len() == 1 {
            return components
                .into_iter()
                .next()
                .expect("one component")
                .into_dessin();
        }
        let mut alpha = Vec::with_capacity(self.n);
        let mut beta = Vec::with_capacity(self.n);
        for component in &components {
            let offset = alpha.len();
            let d = component.dessin();
            alpha.extend(d.alpha.images().iter().map(|&i| i + offset));
            beta.extend(d.beta.images().iter().map(|&i| i + offset));
        }
        Dessin {
            n: self.n,
            alpha: Permutation::from_images_unchecked(alpha),
            beta: Permutation::from_images_unchecked(beta),
        }
    }

    /// Relabels edges by `q`: edge i becomes q(i). The result is in the
    /// same class as `self` by construction.
    pub fn conjugate(&self, q: &Permutation) -> Result<Dessin> {
        let inverse = q.inverse();
        let alpha = q.compose(&self.alpha.compose(&inverse)?)?;
        let beta = q.compose(&self.beta.compose(&inverse)?)?;
        Dessin::new(alpha, beta)
    }

    /// Cartesian product: edges are pairs (i, j) encoded as i*n2 + j,
    /// with both permutations acting coordinatewise.
    pub fn product(&self, other: &Dessin) -> Dessin {
        let n2 = other.n;
        let n = self.n * n2;
        let mut alpha = Vec::with_capacity(n);
        let mut beta = Vec::with_capacity(n);
        for i in 0..self.n {
            for j in 0..n2 {
                alpha.push(self.alpha.image(i) * n2 + other.alpha.image(j));
                beta.push(self.beta.image(i) * n2 + other.beta.image(j));
            }
        }
        Dessin {
            n,
            alpha: Permutation::from_images_unchecked(alpha),
            beta: Permutation::from_images_unchecked(beta),
        }
    }

    /// The monodromy triple (sigma0, sigma1, sigmaInf) =
    /// (alpha, beta, (alpha beta)^-1); always multiplies to the identity.
    pub fn to_triple(&self) -> BranchTriple {
        let sigma_inf = self
            .alpha
            .compose(&self.beta)
            .expect("equal degrees")
            .inverse();
        BranchTriple {
            sigma0: self.alpha.clone(),
            sigma1: self.beta.clone(),
            sigma_inf,
        }
    }

    /// Rebuilds the dessin from a triple, dropping the redundant
    /// infinity coordinate.
    pub fn from_triple(t: &BranchTriple) -> Result<Dessin> {
        Dessin::new(t.sigma0.clone(), t.sigma1.clone())
    }

    /// Image of this dessin under one of the six branch-point
    /// symmetries, returned canonicalized (the action is well defined on
    /// relabelling classes only).
    pub fn s3_apply(&self, rho: S3Element) -> Dessin {
        let mut triple = self.to_triple();
        for generator in rho.generator_word() {
            triple = generator.apply(&triple);
        }
        Dessin::from_triple(&triple)
            .expect("generators preserve degrees")
            .canonicalize()
    }

    /// Canonical forms of all six symmetry images; the size divides 6.
    pub fn s3_orbit(&self) -> BTreeSet<Dessin> {
        S3Element::ALL
            .iter()
            .map(|&rho| self.s3_apply(rho))
            .collect()
    }
}

impl fmt::Display for Dessin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} a={} b={}", self.n, self.alpha, self.beta)
    }
}

impl FromStr for Dessin {
    type Err = Error;

    /// One line: `n=<N> a=<images> b=<images>`, e.g. `n=2 a=1,0 b=0,1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: String| Error::Parse { line: 1, message };
        let mut n: Option<usize> = None;
        let mut alpha: Option<Permutation> = None;
        let mut beta: Option<Permutation> = None;
        for token in s.split_whitespace() {
            if let Some(value) = token.strip_prefix("n=") {
                n = Some(
                    value
                        .parse()
                        .map_err(|_| bad(format!("bad edge count {value:?}")))?,
                );
            } else if let Some(value) = token.strip_prefix("a=") {
                alpha = Some(value.parse()?);
            } else if let Some(value) = token.strip_prefix("b=") {
                beta = Some(value.parse()?);
            } else {
                return Err(bad(format!("unexpected token {token:?}")));
            }
        }
        let n = n.ok_or_else(|| bad("missing n=".into()))?;
        let alpha = alpha.ok_or_else(|| bad("missing a=".into()))?;
        let beta = beta.ok_or_else(|| bad("missing b=".into()))?;
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        if alpha.degree() != n || beta.degree() != n {
            return Err(bad(format!(
                "permutation degrees {} and {} do not match n={}",
                alpha.degree(),
                beta.degree(),
                n
            )));
        }
        Dessin::new(alpha, beta)
    }
}

/// Relabels an irreducible dessin by breadth-first discovery from one
/// start edge: labels are handed out in the order edges are first reached
/// by applying alpha, then beta, to already-discovered edges. Forward
/// application suffices because both permutations have finite order.
fn traversal_relabelling(d: &Dessin, start: usize) -> (Vec<usize>, Vec<usize>) {
    let n = d.n;
    const UNDISCOVERED: usize = usize::MAX;
    let mut label = vec![UNDISCOVERED; n];
    let mut discovered = Vec::with_capacity(n);
    label[start] = 0;
    discovered.push(start);
    let mut head = 0;
    while head < discovered.len() {
        let edge = discovered[head];
        head += 1;
        for next in [d.alpha.image(edge), d.beta.image(edge)] {
            if label[next] == UNDISCOVERED {
                label[next] = discovered.len();
                discovered.push(next);
            }
        }
    }
    debug_assert_eq!(discovered.len(), n, "input must be irreducible");
    let mut alpha = vec![0; n];
    let mut beta = vec![0; n];
    for (new_edge, &old_edge) in discovered.iter().enumerate() {
        alpha[new_edge] = label[d.alpha.image(old_edge)];
        beta[new_edge] = label[d.beta.image(old_edge)];
    }
    (alpha, beta)
}

/// Least traversal relabelling over all start edges, compared as the
/// concatenated (alpha images, beta images) encoding.
fn canonical_irreducible(d: &Dessin) -> Dessin {
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for start in 0..d.n {
        let candidate = traversal_relabelling(d, start);
        if best.as_ref().is_none_or(|current| candidate < *current) {
            best = Some(candidate);
        }
    }
    let (alpha, beta) = best.expect("nonempty edge set");
    Dessin {
        n: d.n,
        alpha: Permutation::from_images_unchecked(alpha),
        beta: Permutation::from_images_unchecked(beta),
    }
}

/// A canonical-form dessin whose two permutations act transitively.
/// These are the basis elements of the formal-sum ring; the cached
/// encoding makes ordering and hashing cheap.
#[derive(Clone, Debug)]
pub struct IrreducibleDessin {
    dessin: Dessin,
    encoding: Vec<usize>,
}

impl IrreducibleDessin {
    /// Canonicalizes and verifies transitivity.
    pub fn new(d: &Dessin) -> Result<Self> {
        if !d.is_irreducible() {
            return Err(Error::NotIrreducible(d.to_string()));
        }
        Ok(IrreducibleDessin::from_canonical(canonical_irreducible(d)))
    }

    /// Wraps a dessin already known to be canonical and irreducible.
    pub(crate) fn from_canonical(d: Dessin) -> Self {
        debug_assert!(d.is_irreducible());
        let mut encoding = Vec::with_capacity(1 + 2 * d.n);
        encoding.push(d.n);
        encoding.extend_from_slice(d.alpha.images());
        encoding.extend_from_slice(d.beta.images());
        IrreducibleDessin {
            dessin: d,
            encoding,
        }
    }

    /// The one-edge dessin, the unit of the formal-sum ring.
    pub fn one() -> Self {
        IrreducibleDessin::from_canonical(Dessin::one_edge())
    }

    pub fn dessin(&self) -> &Dessin {
        &self.dessin
    }

    pub fn into_dessin(self) -> Dessin {
        self.dessin
    }

    pub fn edge_count(&self) -> usize {
        self.dessin.n
    }

    /// Edge count followed by both image lists; orders first by size,
    /// then lexicographically within a size.
    pub fn encoding(&self) -> &[usize] {
        &self.encoding
    }

    /// Galois-invariant key with the default monodromy-order cap.
    pub fn passport(&self) -> Passport {
        self.passport_with_cap(DEFAULT_GROUP_ORDER_CAP)
    }

    /// Cycle types at the three branch points, the genus from the Euler
    /// formula, and the monodromy group order (overflow past `cap`).
    pub fn passport_with_cap(&self, cap: usize) -> Passport {
        let triple = self.dessin.to_triple();
        let type0 = triple.sigma0.cycle_type();
        let type1 = triple.sigma1.cycle_type();
        let type_inf = triple.sigma_inf.cycle_type();
        let cycles = type0.cycle_count() + type1.cycle_count() + type_inf.cycle_count();
        // 2 - 2g = c0 + c1 + cInf - n, nonnegative and even for a
        // transitive pair.
        let doubled = 2 + self.dessin.n - cycles;
        debug_assert!(doubled % 2 == 0, "Euler formula parity");
        let monodromy_order = group_order(
            &[self.dessin.alpha.clone(), self.dessin.beta.clone()],
            self.dessin.n,
            cap,
        );
        Passport {
            type0,
            type1,
            type_inf,
            genus: doubled / 2,
            monodromy_order,
        }
    }
}

impl PartialEq for IrreducibleDessin {
    fn eq(&self, other: &Self) -> bool {
        self.encoding == other.encoding
    }
}

impl Eq for IrreducibleDessin {}

impl PartialOrd for IrreducibleDessin {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IrreducibleDessin {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.encoding.cmp(&other.encoding)
    }
}

impl std::hash::Hash for IrreducibleDessin {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.encoding.hash(state);
    }
}

impl fmt::Display for IrreducibleDessin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.dessin.fmt(f)
    }
}

impl FromStr for IrreducibleDessin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IrreducibleDessin::new(&s.parse::<Dessin>()?)
    }
}

/// Monodromy at the three branch points: positions 0, 1, infinity. The
/// constructor enforces the product-one condition
/// sigma0(sigma1(sigmaInf(i))) = i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BranchTriple {
    sigma0: Permutation,
    sigma1: Permutation,
    sigma_inf: Permutation,
}

impl BranchTriple {
    pub fn new(sigma0: Permutation, sigma1: Permutation, sigma_inf: Permutation) -> Result<Self> {
        let product = sigma0.compose(&sigma1.compose(&sigma_inf)?)?;
        if !product.is_identity() {
            return Err(Error::ProductNotIdentity);
        }
        Ok(BranchTriple {
            sigma0,
            sigma1,
            sigma_inf,
        })
    }

    pub fn sigma0(&self) -> &Permutation {
        &self.sigma0
    }

    pub fn sigma1(&self) -> &Permutation {
        &self.sigma1
    }

    pub fn sigma_inf(&self) -> &Permutation {
        &self.sigma_inf
    }
}

/// Galois-invariant key of an irreducible dessin: branch cycle types,
/// genus, and (capped) monodromy group order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Passport {
    pub type0: CycleType,
    pub type1: CycleType,
    pub type_inf: CycleType,
    pub genus: usize,
    pub monodromy_order: GroupOrder,
}

impl Passport {
    /// Cycle type at a branch position (0, 1, or 2 for infinity).
    pub fn type_at(&self, position: usize) -> &CycleType {
        match position {
            0 => &self.type0,
            1 => &self.type1,
            2 => &self.type_inf,
            _ => panic!("branch positions are 0, 1, 2"),
        }
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "type0={} type1={} typeInf={} genus={} order={}",
            self.type0, self.type1, self.type_inf, self.genus, self.monodromy_order
        )
    }
}

/// The six symmetries permuting the branch positions {0, 1, infinity}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum S3Element {
    /// Fixes every position.
    Identity,
    /// Swaps positions 0 and 1.
    Swap01,
    /// Swaps positions 1 and infinity.
    Swap1Inf,
    /// Swaps positions 0 and infinity.
    Swap0Inf,
    /// Cycles 0 -> 1 -> infinity -> 0.
    Rotate,
    /// Cycles 0 -> infinity -> 1 -> 0.
    RotateInverse,
}

/// The two generating transpositions acting on product-one triples:
/// swapping 0,1 sends (x, y, z) to (y, y^-1 x y, z); swapping 1,infinity
/// sends it to (x, y z y^-1, y). Both keep the product equal to the
/// identity.
#[derive(Clone, Copy, Debug)]
enum TripleGenerator {
    Swap01,
    Swap1Inf,
}

impl TripleGenerator {
    fn apply(self, t: &BranchTriple) -> BranchTriple {
        let compose3 = |a: &Permutation, b: &Permutation, c: &Permutation| {
            a.compose(&b.compose(c).expect("equal degrees"))
                .expect("equal degrees")
        };
        let (sigma0, sigma1, sigma_inf) = match self {
            TripleGenerator::Swap01 => {
                let conjugated = compose3(&t.sigma1.inverse(), &t.sigma0, &t.sigma1);
                (t.sigma1.clone(), conjugated, t.sigma_inf.clone())
            }
            TripleGenerator::Swap1Inf => {
                let conjugated = compose3(&t.sigma1, &t.sigma_inf, &t.sigma1.inverse());
                (t.sigma0.clone(), conjugated, t.sigma1.clone())
            }
        };
        BranchTriple::new(sigma0, sigma1, sigma_inf).expect("generators preserve product-one")
    }
}

impl S3Element {
    pub const ALL: [S3Element; 6] = [
        S3Element::Identity,
        S3Element::Swap01,
        S3Element::Swap1Inf,
        S3Element::Swap0Inf,
        S3Element::Rotate,
        S3Element::RotateInverse,
    ];

    /// Where each branch position goes: entry p is the image of position
    /// p (0, 1, 2 for infinity).
    pub fn position_map(self) -> [usize; 3] {
        match self {
            S3Element::Identity => [0, 1, 2],
            S3Element::Swap01 => [1, 0, 2],
            S3Element::Swap1Inf => [0, 2, 1],
            S3Element::Swap0Inf => [2, 1, 0],
            S3Element::Rotate => [1, 2, 0],
            S3Element::RotateInverse => [2, 0, 1],
        }
    }

    fn from_position_map(map: [usize; 3]) -> S3Element {
        *S3Element::ALL
            .iter()
            .find(|rho| rho.position_map() == map)
            .expect("every bijection of three positions is listed")
    }

    /// `compose(r, s)` applies s first: its position map sends p to
    /// r(s(p)), matching the crate-wide composition convention.
    pub fn compose(self, other: S3Element) -> S3Element {
        let outer = self.position_map();
        let inner = other.position_map();
        S3Element::from_position_map([outer[inner[0]], outer[inner[1]], outer[inner[2]]])
    }

    pub fn inverse(self) -> S3Element {
        let map = self.position_map();
        let mut inverse = [0; 3];
        for (p, &image) in map.iter().enumerate() {
            inverse[image] = p;
        }
        S3Element::from_position_map(inverse)
    }

    /// Generator factorization, listed in application order (first
    /// element acts first). Composing the position maps right-to-left
    /// reproduces `position_map`.
    fn generator_word(self) -> &'static [TripleGenerator] {
        use TripleGenerator::{Swap01 as T01, Swap1Inf as T1I};
        match self {
            S3Element::Identity => &[],
            S3Element::Swap01 => &[T01],
            S3Element::Swap1Inf => &[T1I],
            S3Element::Swap0Inf => &[T01, T1I, T01],
            S3Element::Rotate => &[T1I, T01],
            S3Element::RotateInverse => &[T01, T1I],
        }
    }
}

impl fmt::Display for S3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            S3Element::Identity => "id",
            S3Element::Swap01 => "swap01",
            S3Element::Swap1Inf => "swap1inf",
            S3Element::Swap0Inf => "swap0inf",
            S3Element::Rotate => "rot",
            S3Element::RotateInverse => "rotinv",
        };
        write!(f, "{name}")
    }
}

impl FromStr for S3Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id" => Ok(S3Element::Identity),
            "swap01" => Ok(S3Element::Swap01),
            "swap1inf" => Ok(S3Element::Swap1Inf),
            "swap0inf" => Ok(S3Element::Swap0Inf),
            "rot" => Ok(S3Element::Rotate),
            "rotinv" => Ok(S3Element::RotateInverse),
            other => Err(Error::Parse {
                line: 1,
                message: format!(
                    "unknown symmetry {other:?}; expected id, swap01, swap1inf, swap0inf, rot, or rotinv"
                ),
            }),
        }
    }
}
