//! Builds the double of an admissible bialgebra, checks the Manin triple
//! and runs the three-way equivalence.

use tripoisson::duality::Coalgebra;
use tripoisson::manin::{
    check_manin_triple, double_construct, solve_invariant_forms, verify_equivalence,
};
use tripoisson::{Algebra, Family};

fn main() -> tripoisson::Result<()> {
    let b4 = Algebra::builder(4)
        .product(2, 2, 1, 1)
        .bracket(2, 3, 4, 1, 1)
        .build()?;
    let co = Coalgebra::builder(4)
        .cop2(2, 1, 1, 1)
        .cop3(2, 1, 3, 4, 1)
        .build()?;

    let d = double_construct(&b4, &co)?;
    println!("double has dimension {}", d.algebra.dim());
    print!("{}", check_manin_triple(&d));
    print!("{}", verify_equivalence(&b4, &co, Family::Admissible)?);

    let t3 = Algebra::builder(3)
        .product(2, 2, 1, 1)
        .product(3, 3, 1, -3)
        .bracket(1, 2, 3, 1, 1)
        .build()?;
    let forms = solve_invariant_forms(&t3);
    println!(
        "T3 invariant forms: {} dimensional, det = {}",
        forms.basis.len(),
        forms.determinant
    );
    Ok(())
}
