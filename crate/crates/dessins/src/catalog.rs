//! Exhaustive enumeration of dessins at small edge counts, with a
//! brute-force counting oracle and plain-text persistence.
//!
//! Enumeration conjugates the first permutation to a cycle-type
//! representative, which cuts the search from n!^2 pairs to p(n)*n!
//! before canonical-form deduplication. The Burnside count is computed
//! by direct summation over the symmetric group, sharing no code with
//! canonicalization, so the two totals cross-check each other.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::dessin::{Dessin, IrreducibleDessin};
use crate::error::{Error, Result};
use crate::galois::InvariantKey;
use crate::perm::Permutation;

/// Enumeration guard: p(7)*7! canonicalizations is minutes of work;
/// larger n should be a deliberate configuration choice.
pub const DEFAULT_MAX_EDGES: usize = 7;

/// The counting oracle sums over all n! group elements and is meant as
/// an independent check at tiny sizes, not a fast counter.
pub const BURNSIDE_MAX_EDGES: usize = 6;

/// All dessins with a fixed edge count, canonical and strictly sorted,
/// with an invariant index over the irreducible entries.
#[derive(Clone, Debug)]
pub struct Catalog {
    n: usize,
    irreducible_only: bool,
    entries: Vec<Dessin>,
    index: BTreeMap<InvariantKey, Vec<usize>>,
}

impl Catalog {
    fn build(n: usize, irreducible_only: bool, set: BTreeSet<Dessin>) -> Self {
        let entries: Vec<Dessin> = set.into_iter().collect();
        let mut index: BTreeMap<InvariantKey, Vec<usize>> = BTreeMap::new();
        for (position, d) in entries.iter().enumerate() {
            if d.is_irreducible() {
                let key = InvariantKey::of(&IrreducibleDessin::from_canonical(d.clone()));
                index.entry(key).or_default().push(position);
            }
        }
        Catalog {
            n,
            irreducible_only,
            entries,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn irreducible_only(&self) -> bool {
        self.irreducible_only
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Dessin] {
        &self.entries
    }

    /// The irreducible entries in catalog order. Equals all entries
    /// when the catalog was enumerated with the irreducible filter.
    pub fn irreducible_entries(&self) -> impl Iterator<Item = IrreducibleDessin> + '_ {
        self.entries
            .iter()
            .filter(|d| d.is_irreducible())
            .map(|d| IrreducibleDessin::from_canonical(d.clone()))
    }

    /// Irreducible entries with the given invariant key, in catalog
    /// order. Reducible entries are never indexed (their branch data is
    /// per component).
    pub fn query(&self, key: &InvariantKey) -> Vec<IrreducibleDessin> {
        self.index
            .get(key)
            .map(|positions| {
                positions
                    .iter()
                    .map(|&p| IrreducibleDessin::from_canonical(self.entries[p].clone()))
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_string())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Catalog> {
        fs::read_to_string(path)?.parse()
    }
}

impl PartialEq for Catalog {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.irreducible_only == other.irreducible_only
            && self.entries == other.entries
    }
}

impl Eq for Catalog {}

impl fmt::Display for Catalog {
    /// File form: a `catalog n=<N> irreducible=<bool> count=<K>` header
    /// followed by K sorted dessin lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "catalog n={} irreducible={} count={}",
            self.n,
            self.irreducible_only,
            self.entries.len()
        )?;
        for d in &self.entries {
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for Catalog {
    type Err = Error;

    /// Parses the file form. Body lines are re-canonicalized, so a
    /// hand-edited non-canonical line is accepted; but if that collapses
    /// two lines into one entry the set has changed and parsing fails.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().enumerate();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse {
                line: 1,
                message: "empty catalog file".into(),
            })?
            .1;
        let (n, irreducible_only, count) = parse_header(header)?;

        let mut set = BTreeSet::new();
        let mut body = 0usize;
        for (i, raw) in lines {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let number = i + 1;
            body += 1;
            let d: Dessin = line.parse().map_err(|e: Error| e.at_line(number))?;
            if d.edge_count() != n {
                return Err(Error::Parse {
                    line: number,
                    message: format!("entry has {} edges, header says {n}", d.edge_count()),
                });
            }
            if irreducible_only && !d.is_irreducible() {
                return Err(Error::Parse {
                    line: number,
                    message: "reducible entry in an irreducible catalog".into(),
                });
            }
            if !set.insert(d.canonicalize()) {
                return Err(Error::Parse {
                    line: number,
                    message: "duplicate entry after canonicalization".into(),
                });
            }
        }
        if body != count {
            return Err(Error::CountMismatch {
                header: count,
                body,
            });
        }
        Ok(Catalog::build(n, irreducible_only, set))
    }
}

fn parse_header(header: &str) -> Result<(usize, bool, usize)> {
    let bad = |message: String| Error::Parse { line: 1, message };
    let mut pieces = header.split_whitespace();
    if pieces.next() != Some("catalog") {
        return Err(bad(format!(
            "expected `catalog n=<N> irreducible=<bool> count=<K>`, got {header:?}"
        )));
    }
    let mut field = |name: &str| -> Result<String> {
        let piece = pieces
            .next()
            .ok_or_else(|| bad(format!("missing {name}= in catalog header")))?;
        piece
            .strip_prefix(name)
            .and_then(|rest| rest.strip_prefix('='))
            .map(str::to_string)
            .ok_or_else(|| bad(format!("expected {name}=..., got {piece:?}")))
    };
    let n = field("n")?
        .parse::<usize>()
        .map_err(|_| bad("n must be a positive integer".into()))?;
    let irreducible = match field("irreducible")?.as_str() {
        "true" => true,
        "false" => false,
        other => {
            return Err(bad(format!(
                "irreducible must be true or false, got {other:?}"
            )))
        }
    };
    let count = field("count")?
        .parse::<usize>()
        .map_err(|_| bad("count must be a non-negative integer".into()))?;
    if n == 0 {
        return Err(bad("n must be at least 1".into()));
    }
    Ok((n, irreducible, count))
}

/// Every dessin with `n` edges up to relabelling (or only the
/// irreducible ones), under the default edge-count guard.
pub fn enumerate(n: usize, irreducible_only: bool) -> Result<Catalog> {
    enumerate_with_limit(n, irreducible_only, DEFAULT_MAX_EDGES)
}

/// `enumerate` with an explicit guard, for configurations that
/// deliberately push past the default.
pub fn enumerate_with_limit(n: usize, irreducible_only: bool, max_edges: usize) -> Result<Catalog> {
    if n < 1 || n > max_edges {
        return Err(Error::EdgeCountOutOfRange { n, max: max_edges });
    }
    let betas = all_permutations(n);
    let representatives: Vec<Permutation> =
        partitions(n).iter().map(|p| representative(p)).collect();
    // Every class contains a pair whose first coordinate is the chosen
    // representative of its cycle type, so this sweep is exhaustive.
    let set: BTreeSet<Dessin> = representatives
        .par_iter()
        .map(|alpha| {
            let mut local = BTreeSet::new();
            for beta in &betas {
                let d = Dessin::new(alpha.clone(), beta.clone()).expect("equal degrees");
                if irreducible_only && !d.is_irreducible() {
                    continue;
                }
                local.insert(d.canonicalize());
            }
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(Catalog::build(n, irreducible_only, set))
}

/// Number of permutation pairs up to simultaneous conjugation, by
/// summing the squared centralizer sizes over the whole group and
/// dividing by its order. Centralizer sizes are counted by brute
/// force so the oracle shares nothing with the enumerator.
pub fn burnside_count(n: usize) -> Result<usize> {
    if n < 1 || n > BURNSIDE_MAX_EDGES {
        return Err(Error::EdgeCountOutOfRange {
            n,
            max: BURNSIDE_MAX_EDGES,
        });
    }
    let all = all_permutations(n);
    let mut total = 0usize;
    for g in &all {
        let commuting = all
            .iter()
            .filter(|h| {
                g.compose(h).expect("equal degrees") == h.compose(g).expect("equal degrees")
            })
            .count();
        total += commuting * commuting;
    }
    let order = all.len();
    debug_assert_eq!(total % order, 0, "class count must be an integer");
    Ok(total / order)
}

/// Integer partitions of `n` in descending part order, largest-first.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The permutation with the given cycle type whose cycles occupy
/// consecutive points: `[3, 2]` becomes `(0 1 2)(3 4)`.
fn representative(partition: &[usize]) -> Permutation {
    let n: usize = partition.iter().sum();
    let mut images = vec![0usize; n];
    let mut start = 0;
    for &part in partition {
        for offset in 0..part {
            images[start + offset] = start + (offset + 1) % part;
        }
        start += part;
    }
    Permutation::from_images_unchecked(images)
}

/// All permutations of `{0, ..., n-1}` by Heap's algorithm.
fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation::from_images_unchecked(items.clone())];
    let mut counters = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            out.push(Permutation::from_images_unchecked(items.clone()));
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}
