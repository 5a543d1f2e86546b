//! Dense coordinate vectors over [`Scalar`].

use super::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zeros(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += a * x`, skipping the work when `a` is zero.
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    debug_assert_eq!(y.len(), x.len());
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

pub fn add(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale(a: &Scalar, x: &[Scalar]) -> Vector {
    x.iter().map(|v| a * v).collect()
}

pub fn neg(x: &[Scalar]) -> Vector {
    x.iter().map(|v| -v).collect()
}

pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    x.iter()
        .zip(y)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .map(|(a, b)| a * b)
        .sum()
}

/// Concatenation `x ⊕ y`.
pub fn concat(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().chain(y).cloned().collect()
}

/// Indices of nonzero coordinates.
pub fn support(x: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    x.iter().enumerate().filter(|(_, v)| !v.is_zero())
}
