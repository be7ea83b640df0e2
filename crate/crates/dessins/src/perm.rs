//! Permutations of a finite edge set `{0, ..., n-1}` and the orbit
//! machinery built on them.
//!
//! The composition convention is fixed crate-wide: `compose(p, q)` is the
//! permutation `i -> p(q(i))`, i.e. the right operand acts first. Every
//! other module inherits this convention.
//!
//! Text form: a permutation is written as its comma-separated image list,
//! so `1,0,2` swaps the first two points of a 3-point set.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{0, ..., n-1}` with `n >= 1`, stored as its image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `n` points.
    ///
    /// # Panics
    /// Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations act on at least one point");
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting anything that is
    /// not a bijection of `{0, ..., n-1}` with `n >= 1`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::EmptyDomain);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} out of range for degree {n}"
                )));
            }
            if seen[img] {
                return Err(Error::InvalidPermutation(format!("image {img} repeated")));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Internal constructor for images already known to be a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of `{0, ..., n-1}` from disjoint cycles; points
    /// not mentioned are fixed. The cycle `[a, b, c]` sends `a -> b -> c -> a`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from >= n || to >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point out of range for degree {n}"
                    )));
                }
                if moved[from] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {from} appears in two cycles"
                    )));
                }
                moved[from] = true;
                images[from] = to;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `self` after `other`: the result sends `i` to `self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = other.images.iter().map(|&i| self.images[i]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Cycles of the permutation. Each cycle starts at its smallest point
    /// and cycles are listed by increasing starting point; fixed points
    /// appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut point = self.images[start];
            while point != start {
                seen[point] = true;
                cycle.push(point);
                point = self.images[point];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{img}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut images = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let value: usize = piece.parse().map_err(|_| Error::Parse {
                line: 1,
                message: format!("expected a non-negative integer, found {piece:?}"),
            })?;
            images.push(value);
        }
        Permutation::from_images(images)
    }
}

/// The multiset of cycle lengths of a permutation: non-increasing positive
/// parts summing to the degree. Fixed points contribute parts equal to 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Builds a cycle type from parts in any order; parts are sorted
    /// non-increasingly. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPermutation(
                "cycle type parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, i.e. the number of cycles.
    pub fn cycle_count(&self) -> usize {
        self.parts.len()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

/// Partition of `{0, ..., n-1}` into orbits of the group generated by
/// `generators`, computed by forward closure. Blocks are sorted internally
/// and listed by their smallest element.
///
/// # Panics
/// Panics if any generator has degree other than `n` or if `n == 0`.
pub fn orbits(generators: &[Permutation], n: usize) -> Vec<Vec<usize>> {
    assert!(n >= 1, "orbits of an empty set are not defined");
    for g in generators {
        assert_eq!(g.degree(), n, "generator degree must equal n");
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut block = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < block.len() {
            let point = block[head];
            head += 1;
            for g in generators {
                let img = g.image(point);
                if !seen[img] {
                    seen[img] = true;
                    block.push(img);
                }
            }
        }
        block.sort_unstable();
        out.push(block);
    }
    out
}

/// Order of a permutation group, or a marker that the closure passed `cap`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupOrder {
    Finite(u64),
    Overflow,
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(k) => write!(f, "{k}"),
            GroupOrder::Overflow => write!(f, "overflow"),
        }
    }
}

/// Order of the group generated by `generators` on `n` points, by
/// breadth-first closure starting from the identity. Returns
/// [`GroupOrder::Overflow`] as soon as more than `cap` elements are found;
/// overflow is a value, not an error.
///
/// # Panics
/// Panics if `cap == 0`, `n == 0`, or a generator degree differs from `n`.
pub fn group_order(generators: &[Permutation], n: usize, cap: usize) -> GroupOrder {
    assert!(cap >= 1, "cap must be positive");
    assert!(n >= 1);
    for g in generators {
        assert_eq!(g.degree(), n, "generator degree must equal n");
    }
    let identity: Vec<usize> = (0..n).collect();
    let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
    elements.insert(identity.clone());
    let mut queue = vec![identity];
    while let Some(element) = queue.pop() {
        for g in generators {
            // compose(element, g): g acts first.
            let product: Vec<usize> = g.images().iter().map(|&i| element[i]).collect();
            if !elements.contains(&product) {
                if elements.len() >= cap {
                    return GroupOrder::Overflow;
                }
                elements.insert(product.clone());
                queue.push(product);
            }
        }
    }
    GroupOrder::Finite(elements.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_applies_right_operand_first() {
        let three_cycle = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let swap = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let product = three_cycle.compose(&swap).unwrap();
        assert_eq!(product.images(), &[2, 1, 0]);
    }

    #[test]
    fn compose_with_identity_is_identity_on_either_side() {
        let p = perm(&[2, 0, 3, 1]);
        let id = Permutation::identity(4);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert_eq!(id.compose(&p).unwrap(), p);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let p = Permutation::identity(2);
        let q = Permutation::identity(3);
        assert!(matches!(
            p.compose(&q),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn inverse_of_three_cycle() {
        let p = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let q = Permutation::from_cycles(3, &[&[0, 2, 1]]).unwrap();
        assert_eq!(p.inverse(), q);
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(matches!(
            Permutation::from_images(vec![0, 0]),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            Permutation::from_images(vec![0, 2]),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            Permutation::from_images(vec![]),
            Err(Error::EmptyDomain)
        ));
    }

    #[test]
    fn cycle_type_counts_fixed_points() {
        let p = perm(&[1, 0, 2, 3, 5, 4]);
        assert_eq!(p.cycle_type().parts(), &[2, 2, 1, 1]);
        assert_eq!(p.cycle_type().degree(), 6);
        assert_eq!(p.cycle_type().cycle_count(), 4);
    }

    #[test]
    fn identity_cycle_type_is_all_ones() {
        let p = Permutation::identity(4);
        assert_eq!(p.cycle_type().parts(), &[1, 1, 1, 1]);
    }

    #[test]
    fn orbits_partition_the_points() {
        let a = Permutation::from_cycles(5, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(5, &[&[3, 4]]).unwrap();
        let blocks = orbits(&[a, b], 5);
        assert_eq!(blocks, vec![vec![0, 1], vec![2], vec![3, 4]]);
    }

    #[test]
    fn orbits_of_no_generators_are_singletons() {
        let blocks = orbits(&[], 3);
        assert_eq!(blocks, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn group_order_of_s3_generators() {
        let swap = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let cycle = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert_eq!(group_order(&[swap, cycle], 3, 100), GroupOrder::Finite(6));
    }

    #[test]
    fn group_order_of_empty_generating_set_is_one() {
        assert_eq!(group_order(&[], 4, 10), GroupOrder::Finite(1));
    }

    #[test]
    fn group_order_overflows_past_cap() {
        let swap = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let cycle = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let generators = [swap, cycle];
        assert_eq!(group_order(&generators, 4, 10), GroupOrder::Overflow);
        assert_eq!(group_order(&generators, 4, 24), GroupOrder::Finite(24));
    }

    #[test]
    fn text_round_trip() {
        let p = perm(&[1, 0, 2]);
        assert_eq!(p.to_string(), "1,0,2");
        assert_eq!("1,0,2".parse::<Permutation>().unwrap(), p);
        assert!("1,0,3".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn any_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_n).prop_flat_map(perm_strategy)
    }

    fn perm_pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
        (1..=max_n).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n)))
    }

    fn perm_triple(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (1..=max_n).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n), perm_strategy(n)))
    }

    proptest! {
        #[test]
        fn inverse_round_trips(p in any_perm(8)) {
            let id = Permutation::identity(p.degree());
            prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id.clone());
            prop_assert_eq!(p.inverse().compose(&p).unwrap(), id);
        }

        #[test]
        fn cycle_type_is_conjugation_invariant((p, q) in perm_pair(8)) {
            let conj = q.compose(&p).unwrap().compose(&q.inverse()).unwrap();
            prop_assert_eq!(conj.cycle_type(), p.cycle_type());
        }

        #[test]
        fn composition_is_associative((p, q, r) in perm_triple(6)) {
            let left = p.compose(&q).unwrap().compose(&r).unwrap();
            let right = p.compose(&q.compose(&r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn group_order_divides_factorial((a, b) in perm_pair(5)) {
            let n = a.degree();
            let factorial: u64 = (1..=n as u64).product();
            match group_order(&[a, b], n, 1_000) {
                GroupOrder::Finite(k) => prop_assert_eq!(factorial % k, 0),
                GroupOrder::Overflow => prop_assert!(false, "closure cannot overflow at n <= 5"),
            }
        }
    }
}
