//! Orbit tables, the two averaging projections, and balanced sums.
//!
//! An orbit table partitions some set of irreducible dessins into
//! orbits; averaging over the table orbit and averaging over the six
//! symmetries are both projections, and on a symmetry-closed table they
//! commute. The balanced sum of a dessin is the difference between its
//! symmetry average and the symmetry average of its orbit mean; it
//! measures how far the table orbit is from a single symmetry orbit.
//!
//! Run with `cargo run --example balanced_dessins`.

use std::collections::BTreeSet;

use dessins::{balanced, enumerate, pi_g, pi_s3, FormalSum, IrreducibleDessin, Orbit, OrbitTable};

fn main() -> Result<(), dessins::Error> {
    // group the seven irreducible three-edge dessins by symmetry orbit
    let catalog = enumerate(3, true)?;
    let mut orbits: Vec<BTreeSet<IrreducibleDessin>> = Vec::new();
    for d in catalog.irreducible_entries() {
        if orbits.iter().any(|orbit| orbit.contains(&d)) {
            continue;
        }
        let members = d
            .dessin()
            .s3_orbit()
            .into_iter()
            .map(|m| IrreducibleDessin::new(&m))
            .collect::<Result<_, _>>()?;
        orbits.push(members);
    }

    // merge the two three-element orbits into one synthetic table orbit
    let fused: BTreeSet<IrreducibleDessin> = orbits[0].union(&orbits[1]).cloned().collect();
    let table = OrbitTable::new(
        vec![
            Orbit::new("fused", fused)?,
            Orbit::new("torus", orbits[2].clone())?,
        ],
        "example",
    );

    println!("{table}");
    // symmetry-closure holds, so the lenient check is clean; the strict
    // check reports that the fused orbit mixes passports
    assert!(table.validate(false).is_empty());
    for violation in table.validate(true) {
        println!("strict validation: {violation}");
    }
    println!();

    let d = IrreducibleDessin::new(&"n=3 a=0,1,2 b=1,2,0".parse()?)?;
    let sum = FormalSum::from_irreducible(d.clone());

    let symmetry_average = pi_s3(&sum);
    println!("symmetry average of {d}:");
    println!("{symmetry_average}");
    println!();

    let orbit_average = pi_g(&sum, &table)?;
    println!("table-orbit average of {d}:");
    println!("{orbit_average}");
    println!();

    // the projections commute on this table
    assert_eq!(pi_s3(&pi_g(&sum, &table)?), pi_g(&pi_s3(&sum), &table)?);

    let psi = balanced(&d, &table)?;
    println!("balanced sum of {d}:");
    println!("{psi}");
    // symmetry-invariant, and its orbit average cancels to zero
    assert_eq!(pi_s3(&psi), psi);
    assert!(pi_g(&psi, &table)?.is_zero());
    println!();
    println!("the balanced sum is symmetry-invariant and averages to zero");
    Ok(())
}
