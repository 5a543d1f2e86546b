//! Checks a transposed algebra against every family and prints the
//! first witness of each failure.

use tripoisson::algebras::validate;
use tripoisson::{Algebra, Family};

fn main() -> tripoisson::Result<()> {
    let t3 = Algebra::builder(3)
        .product(2, 2, 1, 1)
        .product(3, 3, 1, -3)
        .bracket(1, 2, 3, 1, 1)
        .build()?;
    print!("{t3}");
    for f in Family::ALL {
        let r = validate(&t3, &[f]);
        match r.first_failure() {
            None => println!("{f}: PASS"),
            Some(bad) => println!("{f}: FAIL {} {}", bad.law, bad.witness.as_ref().unwrap()),
        }
    }
    Ok(())
}
