//! Enumerating all dessins with a given edge count.
//!
//! Run with `cargo run --example enumerate_catalog`.

use dessins::{burnside_count, enumerate, InvariantKey};

fn main() -> Result<(), dessins::Error> {
    for n in 1..=4 {
        let all = enumerate(n, false)?;
        let irreducible = enumerate(n, true)?;
        // independent count over the symmetric group
        let expected = burnside_count(n)?;
        assert_eq!(all.len(), expected);
        println!(
            "{n} edges: {} classes ({} irreducible), counting formula {expected}",
            all.len(),
            irreducible.len()
        );
    }
    println!();

    let catalog = enumerate(3, true)?;
    println!("{catalog}");

    // catalogs are indexed by edge count and passport
    let torus = catalog
        .irreducible_entries()
        .find(|d| d.to_string() == "n=3 a=1,2,0 b=1,2,0")
        .expect("present in the three-edge catalog");
    let key = InvariantKey::of(&torus);
    println!("entries sharing the invariants of {torus}:");
    for entry in catalog.query(&key) {
        println!("  {entry}");
    }
    Ok(())
}
