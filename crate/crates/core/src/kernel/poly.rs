//! Sparse multivariate polynomials with rational coefficients, used to
//! expand determinants of generic linear combinations of matrices.

use std::collections::BTreeMap;
use std::fmt;

use super::{Matrix, Scalar};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(e, Scalar::one());
        p
    }

    /// `Σ c_i t_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut acc: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Scalar::zero) += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Poly {
            nvars: self.nvars.max(other.nvars),
            terms: acc,
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| &acc * &x.pow(k))
            })
            .sum()
    }

    /// Determinant of a square matrix of polynomials, by Laplace expansion
    /// memoized over column subsets (`2^n` minors).
    pub fn det(m: &[Vec<Poly>], nvars: usize) -> Poly {
        let n = m.len();
        assert!(n <= 20, "determinant expansion limited to 20x20");
        let mut minors: Vec<Option<Poly>> = vec![None; 1 << n];
        minors[0] = Some(Poly::constant(nvars, Scalar::one()));
        let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for s in 1usize..(1 << n) {
            by_size[s.count_ones() as usize].push(s);
        }
        for k in 1..=n {
            let row = k - 1;
            for &s in &by_size[k] {
                let mut acc = Poly::zero(nvars);
                let mut pos = 0;
                for j in 0..n {
                    if s & (1 << j) == 0 {
                        continue;
                    }
                    let entry = &m[row][j];
                    if !entry.is_zero() {
                        if let Some(sub) = &minors[s & !(1 << j)] {
                            if !sub.is_zero() {
                                let t = entry.mul(sub);
                                acc = if (pos + row) % 2 == 0 {
                                    acc.add(&t)
                                } else {
                                    acc.add(&t.neg())
                                };
                            }
                        }
                    }
                    pos += 1;
                }
                minors[s] = Some(acc);
            }
            for &s in &by_size[k - 1] {
                minors[s] = None;
            }
        }
        minors[(1 << n) - 1]
            .take()
            .unwrap_or_else(|| Poly::constant(nvars, Scalar::one()))
    }

    /// Determinant of `Σ_k t_k · basis[k]` as a polynomial in the `t_k`.
    pub fn generic_det(basis: &[Matrix]) -> Poly {
        let k = basis.len();
        let Some(first) = basis.first() else {
            return Poly::zero(0);
        };
        let n = first.rows();
        let m: Vec<Vec<Poly>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let coeffs: Vec<Scalar> =
                            basis.iter().map(|b| b.get(r, c).clone()).collect();
                        Poly::linear(&coeffs)
                    })
                    .collect()
            })
            .collect();
        Poly::det(&m, k)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*t{}", i + 1)?,
                    _ => write!(f, "*t{}^{k}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_of_constant_matrix_matches_bareiss() {
        let m = Matrix::from_ints(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let p = Poly::generic_det(std::slice::from_ref(&m));
        // det(t·M) = t^3 det(M)
        assert_eq!(p.term_count(), 1);
        assert_eq!(p.eval(&[Scalar::one()]), m.det().unwrap());
    }

    #[test]
    fn symmetric_2x2_generic() {
        // t1 E11 + t2 (E12 + E21) + t3 E22 -> t1 t3 - t2^2
        let b = vec![
            Matrix::from_ints(&[&[1, 0], &[0, 0]]),
            Matrix::from_ints(&[&[0, 1], &[1, 0]]),
            Matrix::from_ints(&[&[0, 0], &[0, 1]]),
        ];
        let p = Poly::generic_det(&b);
        assert_eq!(p.term_count(), 2);
        assert_eq!(p.total_degree(), 2);
        let v = p.eval(&[2.into(), 3.into(), 5.into()]);
        assert_eq!(v, Scalar::from_int(1));
    }

    #[test]
    fn singular_family_gives_zero() {
        let b = vec![
            Matrix::from_ints(&[&[1, 1], &[1, 1]]),
            Matrix::from_ints(&[&[1, 0], &[0, 0]]),
        ];
        // first row/col structure: det(t1 J + t2 E11) = t1(t1+t2) - t1^2 = t1 t2, not zero
        assert!(!Poly::generic_det(&b).is_zero());
        let z = vec![
            Matrix::from_ints(&[&[1, 0], &[0, 0]]),
            Matrix::from_ints(&[&[0, 1], &[0, 0]]),
        ];
        assert!(Poly::generic_det(&z).is_zero());
    }
}
