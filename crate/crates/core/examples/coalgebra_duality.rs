//! Dualizes a coalgebra to an algebra on the dual space and back.

use tripoisson::duality::{dualize_algebra, dualize_coalgebra, validate_coalgebra, Coalgebra};
use tripoisson::Family;

fn main() -> tripoisson::Result<()> {
    let co = Coalgebra::builder(4)
        .cop2(2, 1, 1, 1)
        .cop3(2, 1, 3, 4, 1)
        .build()?;
    print!("{}", validate_coalgebra(&co, &[Family::Admissible]));
    let dual =
        dualize_coalgebra(&co).with_labels(Some((1..=4).map(|i| format!("e{i}*")).collect()));
    print!("{dual}");
    println!("round trip exact: {}", dualize_algebra(&dual) == co);
    Ok(())
}
