//! Verdict reports for the orbit-size conjecture, and the balanced
//! subalgebra.
//!
//! For a dessin D with balanced sum psi, the check asks whether exactly
//! one prime factor of psi's minimal polynomial has degree equal to the
//! number of distinct symmetry averages over D's table orbit. The
//! verdict is HOLDS, FAILS, or HOLDS(DEGENERATE) when psi vanishes.
//! Verdicts are observations about a given table, not theorems.
//!
//! Run with `cargo run --example conjecture_reports`.

use std::collections::BTreeSet;

use dessins::{
    balanced_subalgebra_basis, conjecture1_check, enumerate, parse_sums, Catalog,
    IrreducibleDessin, MinPolyCaps, Orbit, OrbitTable, SubalgebraCaps,
};

fn singleton_table(catalog: &Catalog) -> Result<OrbitTable, dessins::Error> {
    let orbits = catalog
        .irreducible_entries()
        .enumerate()
        .map(|(i, d)| Orbit::new(format!("single-{i}"), BTreeSet::from([d])))
        .collect::<Result<_, _>>()?;
    Ok(OrbitTable::new(orbits, "example"))
}

fn main() -> Result<(), dessins::Error> {
    let caps = MinPolyCaps::default();
    let catalog = enumerate(3, true)?;

    // with every dessin alone in its orbit the balanced sum vanishes,
    // so every verdict is the degenerate one
    let table = singleton_table(&catalog)?;
    println!("singleton table:");
    for d in catalog.irreducible_entries() {
        let report = conjecture1_check(&d, &table, caps)?;
        println!("  {report}");
    }
    println!();

    // a fused table, two genuine symmetry orbits in one table orbit,
    // exercises the nonzero case; the reports stay self-consistent
    let mut orbits: Vec<BTreeSet<IrreducibleDessin>> = Vec::new();
    for d in catalog.irreducible_entries() {
        if orbits.iter().any(|orbit| orbit.contains(&d)) {
            continue;
        }
        orbits.push(
            d.dessin()
                .s3_orbit()
                .into_iter()
                .map(|m| IrreducibleDessin::new(&m))
                .collect::<Result<_, _>>()?,
        );
    }
    let fused: BTreeSet<IrreducibleDessin> = orbits[0].union(&orbits[1]).cloned().collect();
    let table = OrbitTable::new(
        vec![
            Orbit::new("fused", fused)?,
            Orbit::new("torus", orbits[2].clone())?,
        ],
        "example",
    );
    println!("fused table:");
    for d in table.covered() {
        let report = conjecture1_check(d, &table, caps)?;
        println!("  {report}");
    }
    println!();

    // the subalgebra generated by a balanced element, with the basis
    // discovered by multiplying generators until nothing new appears
    let generators = parse_sums("1 * n=2 a=1,0 b=0,1\n1 * n=3 a=1,2,0 b=1,2,0")?;
    let basis = balanced_subalgebra_basis(&generators, SubalgebraCaps::default())?;
    println!("subalgebra basis ({} elements):", basis.len());
    for (i, element) in basis.iter().enumerate() {
        println!("basis element {i}:");
        println!("{element}");
    }
    Ok(())
}
