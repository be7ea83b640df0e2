//! The six branch-point symmetries.
//!
//! A dessin has three branch cycle types, at positions 0, 1, and
//! infinity, and the symmetric group on those positions acts on
//! dessins. The action permutes the passport entries and sends
//! irreducible dessins to irreducible dessins.
//!
//! Run with `cargo run --example s3_symmetries`.

use dessins::{Dessin, IrreducibleDessin, S3Element};

fn main() -> Result<(), dessins::Error> {
    let d: Dessin = "n=3 a=0,2,1 b=1,2,0".parse()?;
    let irreducible = IrreducibleDessin::new(&d)?;
    println!("dessin:   {d}");
    println!("passport: {}", irreducible.passport());
    println!();

    for rho in S3Element::ALL {
        let image = d.s3_apply(rho);
        let passport = IrreducibleDessin::new(&image)?.passport();
        println!("{rho:?}");
        println!("  image    {image}");
        println!("  passport {passport}");
    }
    println!();

    let orbit = d.s3_orbit();
    println!("orbit size {} (always divides 6):", orbit.len());
    for member in &orbit {
        println!("  {member}");
    }
    println!();

    // the action composes like the group it comes from
    let swap = S3Element::Swap01;
    let rotate = S3Element::Rotate;
    assert_eq!(
        d.s3_apply(swap).s3_apply(rotate),
        d.s3_apply(rotate.compose(swap))
    );
    println!(
        "applying {swap:?} then {rotate:?} equals applying {:?}",
        rotate.compose(swap)
    );

    // the fully symmetric torus is fixed by everything
    let torus: Dessin = "n=3 a=1,2,0 b=1,2,0".parse()?;
    assert_eq!(torus.s3_orbit().len(), 1);
    println!("{torus} is fixed by all six symmetries");
    Ok(())
}
