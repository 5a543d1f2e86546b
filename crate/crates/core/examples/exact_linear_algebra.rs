//! Exact rational determinant, rank and nullspace.

use tripoisson::{Matrix, Scalar};

fn main() {
    let m = Matrix::from_ints(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
    println!("det = {}", m.det().unwrap());

    let singular = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("rank = {}", singular.rank());
    for v in singular.nullspace() {
        let shown: Vec<String> = v.iter().map(Scalar::to_string).collect();
        println!("kernel vector [{}]", shown.join(", "));
    }
    println!("1/3 + 1/6 = {}", Scalar::ratio(1, 3) + Scalar::ratio(1, 6));
}
