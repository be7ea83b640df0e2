//! Products of dessins and decomposition into irreducible components.
//!
//! The product acts componentwise on the two edge sets; the result is
//! usually reducible and splits into irreducible dessins, which is what
//! makes the formal-sum ring work.
//!
//! Run with `cargo run --example product_decompose`.

use dessins::{Dessin, FormalSum};

fn main() -> Result<(), dessins::Error> {
    let path: Dessin = "n=2 a=1,0 b=0,1".parse()?;
    let torus: Dessin = "n=3 a=1,2,0 b=1,2,0".parse()?;

    let product = path.product(&torus);
    println!("{path}  *  {torus}");
    println!("  = {}", product.canonicalize());
    println!("  irreducible: {}", product.is_irreducible());
    println!();

    // squaring the two-edge path gives a reducible four-edge dessin
    let square = path.product(&path);
    println!("{path} squared = {}", square.canonicalize());
    for (i, component) in square.decompose().iter().enumerate() {
        println!("  component {i}: {component}");
    }
    println!();

    // in the ring, a dessin stands for the sum of its components, so
    // the square becomes twice the original
    let as_sum = FormalSum::from_dessin(&path);
    let squared = as_sum.mul(&as_sum);
    println!("as formal sums: ({as_sum}) * ({as_sum}) =");
    println!("{squared}");
    assert_eq!(squared, as_sum.scale(&dessins::exact::rational::integer(2)));

    // edge weight is multiplicative, one quick cross-check
    assert_eq!(
        squared.edge_weight(),
        as_sum.edge_weight() * as_sum.edge_weight()
    );
    println!();
    println!("edge weight of the square: {}", squared.edge_weight());
    Ok(())
}
