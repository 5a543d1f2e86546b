//! Splits an algebra into a matched pair and checks the pair conditions
//! against validity of the sum.

use tripoisson::algebras::direct_sum;
use tripoisson::pairs::{split_sum, verify_matched_pair_theorem};
use tripoisson::{Algebra, Family};

fn main() -> tripoisson::Result<()> {
    let a4 = Algebra::builder(4)
        .product(2, 3, 1, 1)
        .bracket(2, 3, 4, 1, 1)
        .build()?;
    let b2 = Algebra::builder(2).product(1, 1, 2, 1).build()?;
    let mp = split_sum(&direct_sum(&a4, &b2), 4)?;
    for f in Family::ALL {
        let eq = verify_matched_pair_theorem(&mp, f);
        println!("{f}: verdicts {:?}, agree {}", eq.verdicts(), eq.agree);
    }
    Ok(())
}
