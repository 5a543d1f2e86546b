//! Adjoint and coadjoint representations and their semidirect products.

use tripoisson::algebras::validate;
use tripoisson::reps::{
    adjoint_representation, dual_representation, semidirect_product, validate_representation,
};
use tripoisson::{Algebra, Family};

fn main() -> tripoisson::Result<()> {
    let t3 = Algebra::builder(3)
        .product(2, 2, 1, 1)
        .product(3, 3, 1, -3)
        .bracket(1, 2, 3, 1, 1)
        .build()?;
    let ad = adjoint_representation(&t3);
    let report = validate_representation(&ad, Family::Transposed)?;
    println!(
        "adjoint is a transposed representation: {}",
        report.passed()
    );

    let coad = dual_representation(&ad, Family::Transposed);
    println!(
        "coadjoint is a representation: {}",
        coad.is_representation()
    );
    if let Some(c) = &coad.criterion {
        print!("{c}");
    }

    let sd = semidirect_product(&coad.rep, Family::Transposed);
    println!(
        "semidirect product dim {}: transposed {}",
        sd.dim(),
        validate(&sd, &[Family::Transposed]).passed()
    );
    Ok(())
}
