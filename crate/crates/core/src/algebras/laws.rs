use serde::{Deserialize, Serialize};

use super::{Algebra, Family};
use crate::kernel::{vector, Scalar, Vector};
use crate::report::{check_identity, LawReport, LawResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Law {
    /// `x·y = y·x`
    Commutativity,
    /// `(x·y)·z = x·(y·z)`
    Associativity,
    /// `[y,x,z] = -[x,y,z]` and `[x,z,y] = -[x,y,z]`
    BracketAntisymmetry,
    /// `[x1,x2,[x3,x4,x5]] = [[x1,x2,x3],x4,x5] + [x3,[x1,x2,x4],x5] + [x3,x4,[x1,x2,x5]]`
    FilippovJacobi,
    /// `[w·x,y,z] = w·[x,y,z] + x·[w,y,z]`
    PoissonLeibniz,
    /// `3 w·[x,y,z] = [w·x,y,z] + [x,w·y,z] + [x,y,w·z]`
    TransposedLeibniz,
    /// `u·[x,y,z] = 0`
    AdmissibleOuter,
    /// `[u·x,y,z] = 0`
    AdmissibleInner,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::Commutativity => "commutativity",
            Law::Associativity => "associativity",
            Law::BracketAntisymmetry => "bracket-antisymmetry",
            Law::FilippovJacobi => "filippov-jacobi",
            Law::PoissonLeibniz => "poisson-leibniz",
            Law::TransposedLeibniz => "transposed-leibniz",
            Law::AdmissibleOuter => "admissible-outer",
            Law::AdmissibleInner => "admissible-inner",
        }
    }

    pub fn check(self, alg: &Algebra) -> LawResult {
        let n = alg.dim();
        let units: Vec<Vector> = (0..n).map(|i| alg.unit(i)).collect();
        let e = |i: usize| -> &[Scalar] { &units[i] };
        match self {
            Law::Commutativity => check_identity(self.name(), &[("x", n), ("y", n)], |t| {
                (
                    alg.mul_basis(t[0], t[1]).to_vec(),
                    alg.mul_basis(t[1], t[0]).to_vec(),
                )
            }),
            Law::Associativity => {
                check_identity(self.name(), &[("x", n), ("y", n), ("z", n)], |t| {
                    let xy = alg.mul_basis(t[0], t[1]);
                    let yz = alg.mul_basis(t[1], t[2]);
                    (alg.mul(xy, e(t[2])), alg.mul(e(t[0]), yz))
                })
            }
            Law::BracketAntisymmetry => {
                check_identity(self.name(), &[("x", n), ("y", n), ("z", n)], |t| {
                    let (x, y, z) = (t[0], t[1], t[2]);
                    let minus = vector::neg(alg.bracket_basis(x, y, z));
                    (
                        vector::concat(alg.bracket_basis(y, x, z), alg.bracket_basis(x, z, y)),
                        vector::concat(&minus, &minus),
                    )
                })
            }
            Law::FilippovJacobi => {
                // Both sides vanish whenever [x1,x2,-] is zero, so those
                // tuples cannot be the first failure.
                let inert: Vec<bool> = (0..n * n)
                    .map(|ij| (0..n).all(|k| vector::is_zero(alg.bracket_basis(ij / n, ij % n, k))))
                    .collect();
                check_identity(
                    self.name(),
                    &[("x1", n), ("x2", n), ("x3", n), ("x4", n), ("x5", n)],
                    |t| {
                        if inert[t[0] * n + t[1]] {
                            (Vec::new(), Vec::new())
                        } else {
                            filippov_jacobi_sides(alg, t)
                        }
                    },
                )
            }
            Law::PoissonLeibniz => check_identity(
                self.name(),
                &[("w", n), ("x", n), ("y", n), ("z", n)],
                |t| {
                    let (w, x, y, z) = (e(t[0]), e(t[1]), e(t[2]), e(t[3]));
                    let lhs = alg.br(alg.mul_basis(t[0], t[1]), y, z);
                    let rhs = vector::add(
                        &alg.mul(w, alg.bracket_basis(t[1], t[2], t[3])),
                        &alg.mul(x, alg.bracket_basis(t[0], t[2], t[3])),
                    );
                    (lhs, rhs)
                },
            ),
            Law::TransposedLeibniz => check_identity(
                self.name(),
                &[("w", n), ("x", n), ("y", n), ("z", n)],
                |t| {
                    let (w, x, y, z) = (e(t[0]), e(t[1]), e(t[2]), e(t[3]));
                    let lhs = vector::scale(
                        &Scalar::from_int(3),
                        &alg.mul(w, alg.bracket_basis(t[1], t[2], t[3])),
                    );
                    let mut rhs = alg.br(&alg.mul(w, x), y, z);
                    rhs = vector::add(&rhs, &alg.br(x, &alg.mul(w, y), z));
                    rhs = vector::add(&rhs, &alg.br(x, y, &alg.mul(w, z)));
                    (lhs, rhs)
                },
            ),
            Law::AdmissibleOuter => check_identity(
                self.name(),
                &[("u", n), ("x", n), ("y", n), ("z", n)],
                |t| {
                    let lhs = alg.mul(e(t[0]), alg.bracket_basis(t[1], t[2], t[3]));
                    (lhs, vector::zeros(n))
                },
            ),
            Law::AdmissibleInner => check_identity(
                self.name(),
                &[("u", n), ("x", n), ("y", n), ("z", n)],
                |t| {
                    let lhs = alg.br(alg.mul_basis(t[0], t[1]), e(t[2]), e(t[3]));
                    (lhs, vector::zeros(n))
                },
            ),
        }
    }
}

/// Both sides of the Filippov-Jacobi identity at a basis 5-tuple.
pub(crate) fn filippov_jacobi_sides(alg: &Algebra, t: &[usize]) -> (Vector, Vector) {
    let n = alg.dim();
    // Brackets with one slot filled by a vector and the others by basis elements.
    let slot = |out: &mut Vector, v: &[Scalar], at: usize, a: usize, b: usize| {
        for (l, c) in vector::support(v) {
            let f = match at {
                0 => alg.bracket_basis(l, a, b),
                1 => alg.bracket_basis(a, l, b),
                _ => alg.bracket_basis(a, b, l),
            };
            vector::axpy(out, c, f);
        }
    };
    let mut lhs = vector::zeros(n);
    slot(&mut lhs, alg.bracket_basis(t[2], t[3], t[4]), 2, t[0], t[1]);
    let mut rhs = vector::zeros(n);
    slot(&mut rhs, alg.bracket_basis(t[0], t[1], t[2]), 0, t[3], t[4]);
    slot(&mut rhs, alg.bracket_basis(t[0], t[1], t[3]), 1, t[2], t[4]);
    slot(&mut rhs, alg.bracket_basis(t[0], t[1], t[4]), 2, t[2], t[3]);
    (lhs, rhs)
}

/// Evaluates every law required by any of `families`, each law once, in a
/// fixed order.
pub fn validate(alg: &Algebra, families: &[Family]) -> LawReport {
    let mut laws: Vec<Law> = families
        .iter()
        .flat_map(|f| f.laws().iter().copied())
        .collect();
    laws.sort();
    laws.dedup();
    let mut report = LawReport::new();
    for law in laws {
        report.push(law.check(alg));
    }
    report
}

/// Whether `alg` satisfies every law of `family`.
pub fn is_valid(alg: &Algebra, family: Family) -> bool {
    family.laws().iter().all(|l| l.check(alg).pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3() -> Algebra {
        Algebra::builder(3)
            .product(2, 2, 1, 1)
            .product(3, 3, 1, -3)
            .bracket(1, 2, 3, 1, 1)
            .build()
            .unwrap()
    }

    fn a4() -> Algebra {
        Algebra::builder(4)
            .product(2, 3, 1, 1)
            .bracket(2, 3, 4, 1, 1)
            .build()
            .unwrap()
    }

    #[test]
    fn t3_transposed_not_poisson() {
        let a = t3();
        assert!(validate(&a, &[Family::Transposed]).passed());
        let r = validate(&a, &[Family::Poisson]);
        assert!(!r.passed());
        let w = r.get("poisson-leibniz").unwrap().witness.clone().unwrap();
        assert_eq!(w.tuple, vec![2, 2, 2, 3]);
        assert_eq!(w.lhs, vec![Scalar::one(), Scalar::zero(), Scalar::zero()]);
    }

    #[test]
    fn a4_all_families() {
        assert!(validate(&a4(), &Family::ALL).passed());
    }

    #[test]
    fn abelian_and_tiny_dims() {
        for n in 0..4 {
            assert!(validate(&Algebra::zero(n), &Family::ALL).passed());
        }
    }

    #[test]
    fn report_order_is_law_order() {
        let r = validate(&a4(), &[Family::Admissible, Family::CommAssoc]);
        let names: Vec<_> = r.laws().collect();
        assert_eq!(names[0], "commutativity");
        assert_eq!(names.len(), 6);
    }

    #[test]
    fn planted_asymmetry_detected() {
        let mut a = a4();
        a.product_mut().set(&[3, 2, 0], Scalar::one());
        let r = validate(&a, &[Family::CommAssoc]);
        assert_eq!(
            r.get("commutativity")
                .unwrap()
                .witness
                .as_ref()
                .unwrap()
                .tuple,
            vec![3, 4]
        );
    }
}
