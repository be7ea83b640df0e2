//! Minimal polynomials of formal sums.
//!
//! Every element of the ring satisfies a unique monic polynomial with
//! rational coefficients whose constant part is a multiple of the unit.
//! This example computes a few, verifies them by evaluation, and prints
//! their factorizations.
//!
//! Run with `cargo run --example minimal_polynomials`.

use dessins::exact::factor::factor_over_q;
use dessins::{evaluate, minimal_polynomial, parse_sums, FormalSum, MinPolyCaps};

fn main() -> Result<(), dessins::Error> {
    let caps = MinPolyCaps::default();

    let sums = parse_sums(
        "# the two-edge path
         1 * n=2 a=1,0 b=0,1

         # path plus torus
         1 * n=2 a=1,0 b=0,1
         1 * n=3 a=1,2,0 b=1,2,0

         # a rational combination
         1/2 * n=2 a=1,0 b=0,1
         -1/3 * n=2 a=1,0 b=1,0",
    )?;

    for a in &sums {
        println!("element:");
        println!("{a}");
        let p = minimal_polynomial(a, caps)?;
        println!("minimal polynomial (ascending coefficients): {p}");
        println!("  as a formula: {}", p.pretty());

        // the defining property, checked exactly
        assert!(evaluate(&p, a).is_zero());

        let (_, factors) = factor_over_q(&p)?;
        for (prime, multiplicity) in factors {
            println!(
                "  prime factor {} with multiplicity {multiplicity}",
                prime.pretty()
            );
        }
        println!();
    }

    // the unit is annihilated by x - 1, the smallest possible case
    let unit = FormalSum::unit();
    let p = minimal_polynomial(&unit, caps)?;
    println!("unit: minimal polynomial {p} ({})", p.pretty());
    Ok(())
}
