//! Canonical forms of dessins.
//!
//! A dessin is a pair of permutations of its edge set, considered up to
//! simultaneous relabelling of the edges. This example shows how two
//! differently labelled pairs collapse to the same canonical form, and
//! how the canonical form separates genuinely different dessins.
//!
//! Run with `cargo run --example canonical_forms`.

use dessins::{Dessin, IrreducibleDessin, Permutation};

fn main() -> Result<(), dessins::Error> {
    // the same three-edge dessin written with two different labellings
    let first: Dessin = "n=3 a=1,2,0 b=0,2,1".parse()?;
    let relabelled = first.conjugate(&Permutation::from_images(vec![2, 0, 1])?)?;

    println!("first:       {first}");
    println!("relabelled:  {relabelled}");
    println!("canonical:   {}", first.canonicalize());
    println!();

    assert_eq!(first.canonicalize(), relabelled.canonicalize());
    println!("both labellings canonicalize to the same form");
    println!();

    // passports do not separate classes: these two five-edge dessins
    // agree on every cycle type, the genus, and the group order, yet
    // they are not relabellings of each other
    let twin_a: Dessin = "n=5 a=1,2,3,4,0 b=1,2,3,4,0".parse()?;
    let twin_b: Dessin = "n=5 a=1,2,3,4,0 b=2,3,4,0,1".parse()?;
    println!("twin a:      {twin_a}");
    println!(
        "  passport   {}",
        IrreducibleDessin::new(&twin_a)?.passport()
    );
    println!("twin b:      {twin_b}");
    println!(
        "  passport   {}",
        IrreducibleDessin::new(&twin_b)?.passport()
    );
    assert_eq!(
        IrreducibleDessin::new(&twin_a)?.passport(),
        IrreducibleDessin::new(&twin_b)?.passport()
    );
    assert_ne!(twin_a.canonicalize(), twin_b.canonicalize());
    println!("same passport, different canonical forms");
    println!();

    // canonicalization is idempotent, so forms are safe as map keys
    let canonical = first.canonicalize();
    assert_eq!(canonical.canonicalize(), canonical);
    println!("canonicalizing twice changes nothing");
    Ok(())
}
