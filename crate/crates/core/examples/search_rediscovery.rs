//! Enumerates products over {0, 1, -3} next to a fixed bracket and keeps
//! the transposed ones.

use tripoisson::search::{enumerate_structures, SearchTemplate, Slot};
use tripoisson::{Family, Scalar};

fn main() -> tripoisson::Result<()> {
    let coeffs = vec![Scalar::zero(), Scalar::one(), Scalar::from_int(-3)];
    let mut t = SearchTemplate::new(3, coeffs, vec![Family::Transposed])
        .fix(Slot::Bracket([1, 2, 3, 1]), 1);
    for (i, l) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)] {
        t = t.free(Slot::Product([i, i, l]));
    }
    println!("{} candidates", t.candidate_count());
    for (assignment, _) in enumerate_structures(t)? {
        let shown: Vec<String> = assignment.iter().map(Scalar::to_string).collect();
        println!("[{}]", shown.join(", "));
    }
    Ok(())
}
