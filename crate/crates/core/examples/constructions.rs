//! Direct sum, tensor product with a commutative algebra and the h-twist.

use tripoisson::algebras::{direct_sum, h_twist, tensor_with_commutative, validate};
use tripoisson::{Algebra, Family};

fn main() -> tripoisson::Result<()> {
    let a4 = Algebra::builder(4)
        .product(2, 3, 1, 1)
        .bracket(2, 3, 4, 1, 1)
        .build()?;
    let t3 = Algebra::builder(3)
        .product(2, 2, 1, 1)
        .product(3, 3, 1, -3)
        .bracket(1, 2, 3, 1, 1)
        .build()?;
    let dual_numbers = Algebra::builder(2)
        .product(1, 1, 1, 1)
        .product(1, 2, 2, 1)
        .build()?;

    let sum = direct_sum(&a4, &a4);
    println!(
        "A4 + A4: dim {}, admissible {}",
        sum.dim(),
        validate(&sum, &[Family::Admissible]).passed()
    );

    let tensor = tensor_with_commutative(&t3, &dual_numbers)?;
    println!(
        "T3 x C: dim {}, transposed {}",
        tensor.dim(),
        validate(&tensor, &[Family::Transposed]).passed()
    );

    let twisted = h_twist(&t3, &t3.unit(1))?;
    print!("T3 twisted by e2:\n{twisted}");
    Ok(())
}
