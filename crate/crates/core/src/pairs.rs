//! Matched pairs `(A, B, ρ_A, μ_A, ρ_B, μ_B)`: `A` acts on `B` through
//! `μ_A`, `ρ_A` and `B` acts on `A` through `μ_B`, `ρ_B`.

use crate::algebras::{validate, Algebra, Family};
use crate::error::{Error, Result};
use crate::kernel::{vector, Matrix, Scalar, Vector};
use crate::report::{check_identity, EquivalenceReport, LawReport, LawResult};
use crate::reps::{representation_conditions, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    a: Algebra,
    b: Algebra,
    mu_a: Vec<Matrix>,
    rho_a: Vec<Vec<Matrix>>,
    mu_b: Vec<Matrix>,
    rho_b: Vec<Vec<Matrix>>,
}

impl MatchedPair {
    /// `mu_a[i]`, `rho_a[i][j]` are `dim B × dim B`; `mu_b[k]`,
    /// `rho_b[k][l]` are `dim A × dim A`.
    pub fn new(
        a: Algebra,
        b: Algebra,
        mu_a: Vec<Matrix>,
        rho_a: Vec<Vec<Matrix>>,
        mu_b: Vec<Matrix>,
        rho_b: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let (n, p) = (a.dim(), b.dim());
        let ok = |ms: &[Matrix], count: usize, size: usize| {
            ms.len() == count && ms.iter().all(|m| m.rows() == size && m.cols() == size)
        };
        let ok2 = |ms: &[Vec<Matrix>], count: usize, size: usize| {
            ms.len() == count && ms.iter().all(|row| ok(row, count, size))
        };
        if !ok(&mu_a, n, p) || !ok2(&rho_a, n, p) {
            return Err(Error::input(format!(
                "actions of A need {n} (and {n}x{n}) matrices of size {p}x{p}"
            )));
        }
        if !ok(&mu_b, p, n) || !ok2(&rho_b, p, n) {
            return Err(Error::input(format!(
                "actions of B need {p} (and {p}x{p}) matrices of size {n}x{n}"
            )));
        }
        Ok(MatchedPair {
            a,
            b,
            mu_a,
            rho_a,
            mu_b,
            rho_b,
        })
    }

    /// All four actions zero.
    pub fn trivial(a: Algebra, b: Algebra) -> Self {
        let (n, p) = (a.dim(), b.dim());
        MatchedPair {
            mu_a: vec![Matrix::zeros(p, p); n],
            rho_a: vec![vec![Matrix::zeros(p, p); n]; n],
            mu_b: vec![Matrix::zeros(n, n); p],
            rho_b: vec![vec![Matrix::zeros(n, n); p]; p],
            a,
            b,
        }
    }

    /// Pair built from two representations: `rep_a` of `A` on `B`'s space
    /// and `rep_b` of `B` on `A`'s space.
    pub fn from_representations(rep_a: &Representation, rep_b: &Representation) -> Result<Self> {
        MatchedPair::new(
            rep_a.base().clone(),
            rep_b.base().clone(),
            rep_a.mu_all().to_vec(),
            rep_a.rho_all().to_vec(),
            rep_b.mu_all().to_vec(),
            rep_b.rho_all().to_vec(),
        )
    }

    pub fn algebra_a(&self) -> &Algebra {
        &self.a
    }

    pub fn algebra_b(&self) -> &Algebra {
        &self.b
    }

    pub fn mu_a(&self) -> &[Matrix] {
        &self.mu_a
    }

    pub fn rho_a(&self) -> &[Vec<Matrix>] {
        &self.rho_a
    }

    pub fn mu_b(&self) -> &[Matrix] {
        &self.mu_b
    }

    pub fn rho_b(&self) -> &[Vec<Matrix>] {
        &self.rho_b
    }

    pub fn mu_a_mut(&mut self) -> &mut [Matrix] {
        &mut self.mu_a
    }

    pub fn rho_a_mut(&mut self) -> &mut [Vec<Matrix>] {
        &mut self.rho_a
    }

    pub fn mu_b_mut(&mut self) -> &mut [Matrix] {
        &mut self.mu_b
    }

    pub fn rho_b_mut(&mut self) -> &mut [Vec<Matrix>] {
        &mut self.rho_b
    }

    /// `(B, ρ_A, μ_A)` as a representation of `A`.
    pub fn representation_of_a(&self) -> Representation {
        Representation::new(
            self.a.clone(),
            self.b.dim(),
            self.mu_a.clone(),
            self.rho_a.clone(),
        )
        .expect("extents checked on construction")
    }

    /// `(A, ρ_B, μ_B)` as a representation of `B`.
    pub fn representation_of_b(&self) -> Representation {
        Representation::new(
            self.b.clone(),
            self.a.dim(),
            self.mu_b.clone(),
            self.rho_b.clone(),
        )
        .expect("extents checked on construction")
    }

    /// The same data with the roles of `A` and `B` exchanged.
    pub fn swapped(&self) -> MatchedPair {
        MatchedPair {
            a: self.b.clone(),
            b: self.a.clone(),
            mu_a: self.mu_b.clone(),
            rho_a: self.rho_b.clone(),
            mu_b: self.mu_a.clone(),
            rho_b: self.rho_a.clone(),
        }
    }
}

/// `A ⊕ B` (A first) with
/// `(x+a)·(y+b) = x·y + μ_B(a)y + μ_B(b)x + a·b + μ_A(x)b + μ_A(y)a` and
/// `[x1+y1, x2+y2, x3+y3] = [x1,x2,x3] + ρ_A(x1,x2)y3 + ρ_A(x3,x1)y2 + ρ_A(x2,x3)y1
///  + [y1,y2,y3] + ρ_B(y1,y2)x3 + ρ_B(y3,y1)x2 + ρ_B(y2,y3)x1`.
pub fn matched_pair_sum(mp: &MatchedPair) -> Algebra {
    let (n, p) = (mp.a.dim(), mp.b.dim());
    let mut out = Algebra::zero(n + p);
    for (i, j, l, v) in mp.a.product_entries() {
        out.product_mut().set(&[i, j, l], v);
    }
    for (i, j, k, l, v) in mp.a.bracket_entries() {
        out.bracket_mut().set(&[i, j, k, l], v);
    }
    for (i, j, l, v) in mp.b.product_entries() {
        out.product_mut().set(&[n + i, n + j, n + l], v);
    }
    for (i, j, k, l, v) in mp.b.bracket_entries() {
        out.bracket_mut().set(&[n + i, n + j, n + k, n + l], v);
    }
    let pr = out.product_mut();
    // e_i · f_r = μ_A(e_i) f_r + μ_B(f_r) e_i, and symmetrically.
    for i in 0..n {
        for r in 0..p {
            for s in 0..p {
                let v = mp.mu_a[i].get(s, r);
                if !v.is_zero() {
                    *pr.get_mut(&[i, n + r, n + s]) += v;
                    *pr.get_mut(&[n + r, i, n + s]) += v;
                }
            }
            for l in 0..n {
                let v = mp.mu_b[r].get(l, i);
                if !v.is_zero() {
                    *pr.get_mut(&[i, n + r, l]) += v;
                    *pr.get_mut(&[n + r, i, l]) += v;
                }
            }
        }
    }
    let br = out.bracket_mut();
    for i in 0..n {
        for j in 0..n {
            for r in 0..p {
                for s in 0..p {
                    let v = mp.rho_a[i][j].get(s, r);
                    if v.is_zero() {
                        continue;
                    }
                    // ρ_A(x1,x2)y3, ρ_A(x3,x1)y2, ρ_A(x2,x3)y1
                    *br.get_mut(&[i, j, n + r, n + s]) += v;
                    *br.get_mut(&[j, n + r, i, n + s]) += v;
                    *br.get_mut(&[n + r, i, j, n + s]) += v;
                }
            }
        }
    }
    for r in 0..p {
        for s in 0..p {
            for k in 0..n {
                for l in 0..n {
                    let v = mp.rho_b[r][s].get(l, k);
                    if v.is_zero() {
                        continue;
                    }
                    // ρ_B(y1,y2)x3, ρ_B(y3,y1)x2, ρ_B(y2,y3)x1
                    *br.get_mut(&[n + r, n + s, k, l]) += v;
                    *br.get_mut(&[n + s, k, n + r, l]) += v;
                    *br.get_mut(&[k, n + r, n + s, l]) += v;
                }
            }
        }
    }
    out
}

/// Reads a pair back from an algebra on `A ⊕ B` with `A` spanned by the
/// first `n` basis vectors. Fails unless the algebra is exactly the sum of
/// the extracted pair, i.e. `A` and `B` are closed under both operations,
/// `[A,A,B] ⊂ B` and `[A,B,B] ⊂ A`.
pub fn split_sum(alg: &Algebra, n: usize) -> Result<MatchedPair> {
    let total = alg.dim();
    if n > total {
        return Err(Error::input(format!("split {n} exceeds dimension {total}")));
    }
    let p = total - n;
    let sub = |offset: usize, dim: usize| {
        let mut out = Algebra::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for l in 0..dim {
                    let v = alg
                        .product()
                        .get(&[offset + i, offset + j, offset + l])
                        .clone();
                    out.product_mut().set(&[i, j, l], v);
                    for k in 0..dim {
                        let v = alg
                            .bracket()
                            .get(&[offset + i, offset + j, offset + k, offset + l])
                            .clone();
                        out.bracket_mut().set(&[i, j, k, l], v);
                    }
                }
            }
        }
        out
    };
    let mut mp = MatchedPair::trivial(sub(0, n), sub(n, p));
    for i in 0..n {
        for r in 0..p {
            for s in 0..p {
                mp.mu_a[i].set(s, r, alg.product().get(&[i, n + r, n + s]).clone());
            }
            for l in 0..n {
                mp.mu_b[r].set(l, i, alg.product().get(&[i, n + r, l]).clone());
            }
        }
        for j in 0..n {
            for r in 0..p {
                for s in 0..p {
                    mp.rho_a[i][j].set(s, r, alg.bracket().get(&[i, j, n + r, n + s]).clone());
                }
            }
        }
    }
    for r in 0..p {
        for s in 0..p {
            for k in 0..n {
                for l in 0..n {
                    mp.rho_b[r][s].set(l, k, alg.bracket().get(&[n + r, n + s, k, l]).clone());
                }
            }
        }
    }
    if !matched_pair_sum(&mp).same_constants(alg) {
        return Err(Error::input(format!(
            "algebra is not a matched-pair sum for the split {n} + {p}"
        )));
    }
    Ok(mp)
}

/// Evaluation context on a pair, possibly with the roles of `A` and `B`
/// exchanged. "L" is the side whose elements are called `x` in a
/// condition, "R" the side called `y`.
struct View<'a> {
    l: &'a Algebra,
    r: &'a Algebra,
    mu_l: &'a [Matrix],
    rho_l: &'a [Vec<Matrix>],
    mu_r: &'a [Matrix],
    rho_r: &'a [Vec<Matrix>],
    swapped: bool,
    units_l: Vec<Vector>,
    units_r: Vec<Vector>,
}

impl<'a> View<'a> {
    fn new(mp: &'a MatchedPair, swapped: bool) -> Self {
        let (l, r, mu_l, rho_l, mu_r, rho_r) = if swapped {
            (&mp.b, &mp.a, &mp.mu_b, &mp.rho_b, &mp.mu_a, &mp.rho_a)
        } else {
            (&mp.a, &mp.b, &mp.mu_a, &mp.rho_a, &mp.mu_b, &mp.rho_b)
        };
        View {
            l,
            r,
            mu_l,
            rho_l,
            mu_r,
            rho_r,
            swapped,
            units_l: (0..l.dim()).map(|i| l.unit(i)).collect(),
            units_r: (0..r.dim()).map(|i| r.unit(i)).collect(),
        }
    }

    fn n(&self) -> usize {
        self.l.dim()
    }

    fn p(&self) -> usize {
        self.r.dim()
    }

    /// Variable names: `x`-role variables belong to L.
    fn var(&self, role: char, idx: usize) -> (String, usize) {
        let name = match (role, self.swapped) {
            ('x', false) | ('y', true) => 'x',
            _ => 'y',
        };
        let ext = if role == 'x' { self.n() } else { self.p() };
        (format!("{name}{idx}"), ext)
    }

    fn x(&self, i: usize) -> &[Scalar] {
        &self.units_l[i]
    }

    fn y(&self, i: usize) -> &[Scalar] {
        &self.units_r[i]
    }

    /// μ_L(x) y
    fn mu_l(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.p());
        for (i, xi) in vector::support(x) {
            vector::axpy(&mut out, xi, &self.mu_l[i].apply(y));
        }
        out
    }

    /// ρ_L(x1, x2) y
    fn rho_l(&self, x1: &[Scalar], x2: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.p());
        for (i, a) in vector::support(x1) {
            for (j, b) in vector::support(x2) {
                vector::axpy(&mut out, &(a * b), &self.rho_l[i][j].apply(y));
            }
        }
        out
    }

    /// μ_R(y) x
    fn mu_r(&self, y: &[Scalar], x: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.n());
        for (i, yi) in vector::support(y) {
            vector::axpy(&mut out, yi, &self.mu_r[i].apply(x));
        }
        out
    }

    /// ρ_R(y1, y2) x
    fn rho_r(&self, y1: &[Scalar], y2: &[Scalar], x: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.n());
        for (i, a) in vector::support(y1) {
            for (j, b) in vector::support(y2) {
                vector::axpy(&mut out, &(a * b), &self.rho_r[i][j].apply(x));
            }
        }
        out
    }

    /// An element of `A ⊕ B` from its L and R parts, in `A ⊕ B` order.
    fn mixed(&self, l_part: &[Scalar], r_part: &[Scalar]) -> Vector {
        if self.swapped {
            vector::concat(r_part, l_part)
        } else {
            vector::concat(l_part, r_part)
        }
    }

    fn zero_mixed(&self) -> Vector {
        vector::zeros(self.n() + self.p())
    }
}

fn three() -> Scalar {
    Scalar::from_int(3)
}

fn sum3(a: Vector, b: Vector, c: Vector) -> Vector {
    vector::add(&vector::add(&a, &b), &c)
}

// Conditions are written once for the L/R view; the mirrored condition is
// the same function on the swapped view.

fn ca_pair(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 0), v.var('y', 1), v.var('y', 2)];
    check_identity(law, &vars, |t| {
        let (x, a, b) = (v.x(t[0]), v.y(t[1]), v.y(t[2]));
        // μ_A(x)(a·b) = (μ_A(x)a)·b + μ_A(μ_B(a)x)b
        let lhs = v.mu_l(x, &v.r.mul(a, b));
        let rhs = vector::add(&v.r.mul(&v.mu_l(x, a), b), &v.mu_l(&v.mu_r(a, x), b));
        (lhs, rhs)
    })
}

fn lie_pair_derivation(v: &View, law: &str) -> LawResult {
    let vars = [
        v.var('x', 1),
        v.var('x', 2),
        v.var('x', 3),
        v.var('y', 4),
        v.var('y', 5),
    ];
    check_identity(law, &vars, |t| {
        let (x1, x2, x3, y4, y5) = (v.x(t[0]), v.x(t[1]), v.x(t[2]), v.y(t[3]), v.y(t[4]));
        // ρ_B(y4,y5)[x1,x2,x3] = [ρ_B(y4,y5)x1,x2,x3] + [x1,ρ_B(y4,y5)x2,x3] + [x1,x2,ρ_B(y4,y5)x3]
        let lhs = v.rho_r(y4, y5, &v.l.br(x1, x2, x3));
        let rhs = sum3(
            v.l.br(&v.rho_r(y4, y5, x1), x2, x3),
            v.l.br(x1, &v.rho_r(y4, y5, x2), x3),
            v.l.br(x1, x2, &v.rho_r(y4, y5, x3)),
        );
        (lhs, rhs)
    })
}

fn lie_pair_cross(v: &View, law: &str) -> LawResult {
    let vars = [
        v.var('x', 1),
        v.var('x', 2),
        v.var('y', 3),
        v.var('x', 4),
        v.var('y', 5),
    ];
    check_identity(law, &vars, |t| {
        let (x1, x2, y3, x4, y5) = (v.x(t[0]), v.x(t[1]), v.y(t[2]), v.x(t[3]), v.y(t[4]));
        // -ρ_B(ρ_A(x1,x2)y3, y5)x4 = -ρ_B(ρ_A(x1,x4)y5, y3)x2 + ρ_B(ρ_A(x2,x4)y5, y3)x1 - [x1,x2,ρ_B(y3,y5)x4]
        let lhs = vector::neg(&v.rho_r(&v.rho_l(x1, x2, y3), y5, x4));
        let rhs = sum3(
            vector::neg(&v.rho_r(&v.rho_l(x1, x4, y5), y3, x2)),
            v.rho_r(&v.rho_l(x2, x4, y5), y3, x1),
            vector::neg(&v.l.br(x1, x2, &v.rho_r(y3, y5, x4))),
        );
        (lhs, rhs)
    })
}

fn lie_pair_bracket(v: &View, law: &str) -> LawResult {
    let vars = [
        v.var('x', 1),
        v.var('y', 2),
        v.var('y', 3),
        v.var('x', 4),
        v.var('x', 5),
    ];
    check_identity(law, &vars, |t| {
        let (x1, y2, y3, x4, x5) = (v.x(t[0]), v.y(t[1]), v.y(t[2]), v.x(t[3]), v.x(t[4]));
        // [ρ_B(y2,y3)x1, x4, x5] = ρ_B(y2,y3)[x1,x4,x5] + ρ_B(ρ_A(x4,x5)y2, y3)x1 + ρ_B(y2, ρ_A(x4,x5)y3)x1
        let lhs = v.l.br(&v.rho_r(y2, y3, x1), x4, x5);
        let rhs = sum3(
            v.rho_r(y2, y3, &v.l.br(x1, x4, x5)),
            v.rho_r(&v.rho_l(x4, x5, y2), y3, x1),
            v.rho_r(y2, &v.rho_l(x4, x5, y3), x1),
        );
        (lhs, rhs)
    })
}

fn poisson_pair_1(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 1), v.var('x', 2), v.var('x', 3), v.var('y', 1)];
    check_identity(law, &vars, |t| {
        let (x1, x2, x3, y1) = (v.x(t[0]), v.x(t[1]), v.x(t[2]), v.y(t[3]));
        // [μ_B(y1)x1, x2, x3] = μ_B(ρ_A(x2,x3)y1)x1 + μ_B(y1)[x1,x2,x3]
        let lhs = v.l.br(&v.mu_r(y1, x1), x2, x3);
        let rhs = vector::add(
            &v.mu_r(&v.rho_l(x2, x3, y1), x1),
            &v.mu_r(y1, &v.l.br(x1, x2, x3)),
        );
        (lhs, rhs)
    })
}

fn poisson_pair_3(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 1), v.var('x', 2), v.var('y', 1), v.var('y', 2)];
    check_identity(law, &vars, |t| {
        let (x1, x2, y1, y2) = (v.x(t[0]), v.x(t[1]), v.y(t[2]), v.y(t[3]));
        // ρ_B(μ_A(x1)y1, y2)x2 = x1·(ρ_B(y1,y2)x2)
        let lhs = v.rho_r(&v.mu_l(x1, y1), y2, x2);
        let rhs = v.l.mul(x1, &v.rho_r(y1, y2, x2));
        (lhs, rhs)
    })
}

fn poisson_pair_5(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 1), v.var('x', 2), v.var('x', 3), v.var('y', 1)];
    check_identity(law, &vars, |t| {
        let (x1, x2, x3, y1) = (v.x(t[0]), v.x(t[1]), v.x(t[2]), v.y(t[3]));
        // μ_B(ρ_A(x1,x2)y1)x3 + μ_B(ρ_A(x3,x2)y1)x1 = 0
        let lhs = vector::add(
            &v.mu_r(&v.rho_l(x1, x2, y1), x3),
            &v.mu_r(&v.rho_l(x3, x2, y1), x1),
        );
        (lhs, vector::zeros(v.n()))
    })
}

fn poisson_pair_7(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 1), v.var('x', 2), v.var('y', 3), v.var('y', 4)];
    check_identity(law, &vars, |t| {
        let (x1, x2, y3, y4) = (v.x(t[0]), v.x(t[1]), v.y(t[2]), v.y(t[3]));
        // ρ_B(y3,y4)(x1·x2) = x1·(ρ_B(y3,y4)x2) + x2·(ρ_B(y3,y4)x1)
        let lhs = v.rho_r(y3, y4, &v.l.mul(x1, x2));
        let rhs = vector::add(
            &v.l.mul(x1, &v.rho_r(y3, y4, x2)),
            &v.l.mul(x2, &v.rho_r(y3, y4, x1)),
        );
        (lhs, rhs)
    })
}

fn transposed_pair_1(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 1), v.var('x', 2), v.var('x', 3), v.var('y', 4)];
    check_identity(law, &vars, |t| {
        let (x1, x2, x3, y4) = (v.x(t[0]), v.x(t[1]), v.x(t[2]), v.y(t[3]));
        // 3μ_B(y4)[x1,x2,x3] = [μ_B(y4)x1,x2,x3] + [x1,μ_B(y4)x2,x3] + [x1,x2,μ_B(y4)x3]
        let lhs = vector::scale(&three(), &v.mu_r(y4, &v.l.br(x1, x2, x3)));
        let rhs = sum3(
            v.l.br(&v.mu_r(y4, x1), x2, x3),
            v.l.br(x1, &v.mu_r(y4, x2), x3),
            v.l.br(x1, x2, &v.mu_r(y4, x3)),
        );
        (lhs, rhs)
    })
}

fn transposed_pair_3(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 2), v.var('x', 3), v.var('x', 4), v.var('y', 1)];
    check_identity(law, &vars, |t| {
        let (x2, x3, x4, y1) = (v.x(t[0]), v.x(t[1]), v.x(t[2]), v.y(t[3]));
        // [μ_B(y1)x4, x2, x3] = 3μ_B(ρ_A(x2,x3)y1)x4
        let lhs = v.l.br(&v.mu_r(y1, x4), x2, x3);
        let rhs = vector::scale(&three(), &v.mu_r(&v.rho_l(x2, x3, y1), x4));
        (lhs, rhs)
    })
}

/// The cross condition with one `A`-variable in the product slot and two
/// `B`-variables in the bracket, as an identity in `A ⊕ B`:
/// `3 x4·(ρ_B(y1,y2)x3) = ρ_B(y1,y2)(x4·x3) + ρ_B(μ_A(x4)y1,y2)x3 + ρ_B(y1,μ_A(x4)y2)x3`
/// and `ρ_A(μ_B(y2)x4,x3)y1 + ρ_A(x3,μ_B(y1)x4)y2 = 0`.
fn transposed_pair_5(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 3), v.var('x', 4), v.var('y', 1), v.var('y', 2)];
    check_identity(law, &vars, |t| {
        let (x3, x4, y1, y2) = (v.x(t[0]), v.x(t[1]), v.y(t[2]), v.y(t[3]));
        let l_lhs = vector::scale(&three(), &v.l.mul(x4, &v.rho_r(y1, y2, x3)));
        let l_rhs = sum3(
            v.rho_r(y1, y2, &v.l.mul(x4, x3)),
            v.rho_r(&v.mu_l(x4, y1), y2, x3),
            v.rho_r(y1, &v.mu_l(x4, y2), x3),
        );
        let r_part = vector::add(
            &v.rho_l(&v.mu_r(y2, x4), x3, y1),
            &v.rho_l(x3, &v.mu_r(y1, x4), y2),
        );
        (
            v.mixed(&l_lhs, &vector::zeros(v.p())),
            v.mixed(&l_rhs, &vector::neg(&r_part)),
        )
    })
}

/// The cross condition exactly as it is usually printed, without the
/// `3 x4·(ρ_B(y1,y2)x3)` term:
/// `ρ_B(y1,y2)(x4·x3) + ρ_B(μ_A(x4)y1,y2)x3 + ρ_B(y1,μ_A(x4)y2)x3
///  + ρ_A(μ_B(y2)x4,x3)y1 + ρ_A(x3,μ_B(y1)x4)y2 = 0`.
fn transposed_pair_5_printed(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 3), v.var('x', 4), v.var('y', 1), v.var('y', 2)];
    check_identity(law, &vars, |t| {
        let (x3, x4, y1, y2) = (v.x(t[0]), v.x(t[1]), v.y(t[2]), v.y(t[3]));
        let l_part = sum3(
            v.rho_r(y1, y2, &v.l.mul(x4, x3)),
            v.rho_r(&v.mu_l(x4, y1), y2, x3),
            v.rho_r(y1, &v.mu_l(x4, y2), x3),
        );
        let r_part = vector::add(
            &v.rho_l(&v.mu_r(y2, x4), x3, y1),
            &v.rho_l(x3, &v.mu_r(y1, x4), y2),
        );
        (v.mixed(&l_part, &r_part), v.zero_mixed())
    })
}

fn admissible_pair_1(v: &View, law: &str) -> LawResult {
    let vars = [
        v.var('x', 1),
        v.var('x', 2),
        v.var('x', 3),
        v.var('y', 3),
        v.var('y', 4),
    ];
    check_identity(law, &vars, |t| {
        let (x1, x2, x3, y3, y4) = (v.x(t[0]), v.x(t[1]), v.x(t[2]), v.y(t[3]), v.y(t[4]));
        // μ_B(y4)[x1,x2,x3] = ρ_A(x1,x2)(y4·y3) = 0
        let l_part = v.mu_r(y4, &v.l.br(x1, x2, x3));
        let r_part = v.rho_l(x1, x2, &v.r.mul(y4, y3));
        (v.mixed(&l_part, &r_part), v.zero_mixed())
    })
}

fn admissible_pair_3(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 2), v.var('x', 3), v.var('x', 4), v.var('y', 1)];
    check_identity(law, &vars, |t| {
        let (x2, x3, x4, y1) = (v.x(t[0]), v.x(t[1]), v.x(t[2]), v.y(t[3]));
        // μ_B(ρ_A(x2,x3)y1)x4 = 0
        (v.mu_r(&v.rho_l(x2, x3, y1), x4), vector::zeros(v.n()))
    })
}

fn admissible_pair_5(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 2), v.var('x', 3), v.var('x', 4), v.var('y', 1)];
    check_identity(law, &vars, |t| {
        let (x2, x3, x4, y1) = (v.x(t[0]), v.x(t[1]), v.x(t[2]), v.y(t[3]));
        // [μ_B(y1)x4, x2, x3] = 0
        (v.l.br(&v.mu_r(y1, x4), x2, x3), vector::zeros(v.n()))
    })
}

fn admissible_pair_7(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 1), v.var('x', 2), v.var('y', 3), v.var('y', 4)];
    check_identity(law, &vars, |t| {
        let (x1, x2, y3, y4) = (v.x(t[0]), v.x(t[1]), v.y(t[2]), v.y(t[3]));
        // ρ_A(μ_B(y4)x1, x2)y3 + ρ_B(y3, μ_A(x1)y4)x2 = 0
        let r_part = v.rho_l(&v.mu_r(y4, x1), x2, y3);
        let l_part = v.rho_r(y3, &v.mu_l(x1, y4), x2);
        (v.mixed(&l_part, &r_part), v.zero_mixed())
    })
}

/// `x1·(ρ_B(y1,y2)x2) = 0`.
fn admissible_pair_product_of_action(v: &View, law: &str) -> LawResult {
    let vars = [v.var('x', 1), v.var('x', 2), v.var('y', 1), v.var('y', 2)];
    check_identity(law, &vars, |t| {
        let (x1, x2, y1, y2) = (v.x(t[0]), v.x(t[1]), v.y(t[2]), v.y(t[3]));
        (v.l.mul(x1, &v.rho_r(y1, y2, x2)), vector::zeros(v.n()))
    })
}

type Cond = fn(&View, &str) -> LawResult;

/// `(name, condition, mirrored)`: a mirrored condition is the same function
/// evaluated with the roles of `A` and `B` exchanged.
fn numbered(family: Family) -> Vec<(&'static str, Cond, bool)> {
    match family {
        Family::CommAssoc => vec![("ca-pair-1", ca_pair, false), ("ca-pair-2", ca_pair, true)],
        Family::ThreeLie => vec![
            ("3lie-pair-1", lie_pair_derivation, false),
            ("3lie-pair-2", lie_pair_cross, false),
            ("3lie-pair-3", lie_pair_bracket, false),
            ("3lie-pair-4", lie_pair_derivation, true),
            ("3lie-pair-5", lie_pair_cross, true),
            ("3lie-pair-6", lie_pair_bracket, true),
        ],
        Family::Poisson => vec![
            ("poisson-pair-1", poisson_pair_1, false),
            ("poisson-pair-2", poisson_pair_1, true),
            ("poisson-pair-3", poisson_pair_3, false),
            ("poisson-pair-4", poisson_pair_3, true),
            ("poisson-pair-5", poisson_pair_5, false),
            ("poisson-pair-6", poisson_pair_5, true),
            ("poisson-pair-7", poisson_pair_7, false),
            ("poisson-pair-8", poisson_pair_7, true),
        ],
        Family::Transposed => vec![
            ("transposed-pair-1", transposed_pair_1, false),
            ("transposed-pair-2", transposed_pair_1, true),
            ("transposed-pair-3", transposed_pair_3, false),
            ("transposed-pair-4", transposed_pair_3, true),
            ("transposed-pair-5", transposed_pair_5, false),
            ("transposed-pair-6", transposed_pair_5, true),
        ],
        Family::Admissible => vec![
            ("admissible-pair-1", admissible_pair_1, false),
            ("admissible-pair-2", admissible_pair_1, true),
            ("admissible-pair-3", admissible_pair_3, false),
            ("admissible-pair-4", admissible_pair_3, true),
            ("admissible-pair-5", admissible_pair_5, false),
            ("admissible-pair-6", admissible_pair_5, true),
            ("admissible-pair-7", admissible_pair_7, false),
            (
                "admissible-pair-8",
                admissible_pair_product_of_action,
                false,
            ),
            ("admissible-pair-9", admissible_pair_product_of_action, true),
        ],
    }
}

fn run(mp: &MatchedPair, conds: Vec<(&'static str, Cond, bool)>, report: &mut LawReport) {
    let direct = View::new(mp, false);
    let mirror = View::new(mp, true);
    for (name, f, mirrored) in conds {
        report.push(f(if mirrored { &mirror } else { &direct }, name));
    }
}

/// Matched-pair conditions of `family`: both summands in the family, the
/// two actions as representations, the sub-family matched pairs, and the
/// family's own cross conditions.
pub fn check_matched_pair(mp: &MatchedPair, family: Family) -> LawReport {
    let mut report = LawReport::new();
    report.extend_prefixed("A:", validate(&mp.a, &[family]));
    report.extend_prefixed("B:", validate(&mp.b, &[family]));
    report.extend_prefixed(
        "A-on-B:",
        representation_conditions(&mp.representation_of_a(), family),
    );
    report.extend_prefixed(
        "B-on-A:",
        representation_conditions(&mp.representation_of_b(), family),
    );
    if family.has_product() {
        run(mp, numbered(Family::CommAssoc), &mut report);
    }
    if family.has_bracket() {
        run(mp, numbered(Family::ThreeLie), &mut report);
    }
    if !matches!(family, Family::CommAssoc | Family::ThreeLie) {
        run(mp, numbered(family), &mut report);
    }
    report
}

/// The transposed cross conditions in their commonly printed form, for
/// comparison with [`check_matched_pair`]; see `transposed-pair-5`.
pub fn printed_transposed_cross_conditions(mp: &MatchedPair) -> LawReport {
    let mut report = LawReport::new();
    report.push(transposed_pair_5_printed(
        &View::new(mp, false),
        "transposed-pair-5-printed",
    ));
    report.push(transposed_pair_5_printed(
        &View::new(mp, true),
        "transposed-pair-6-printed",
    ));
    report
}

/// Conditions verdict against the validity of the sum; the two must agree.
pub fn verify_matched_pair_theorem(mp: &MatchedPair, family: Family) -> EquivalenceReport {
    EquivalenceReport::new(vec![
        (
            "matched-pair conditions".to_string(),
            check_matched_pair(mp, family),
        ),
        (
            "sum algebra".to_string(),
            validate(&matched_pair_sum(mp), &[family]),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::direct_sum;

    fn a4() -> Algebra {
        Algebra::builder(4)
            .product(2, 3, 1, 1)
            .bracket(2, 3, 4, 1, 1)
            .build()
            .unwrap()
    }

    #[test]
    fn trivial_pair_is_direct_sum() {
        let t3 = Algebra::builder(3)
            .product(2, 2, 1, 1)
            .product(3, 3, 1, -3)
            .bracket(1, 2, 3, 1, 1)
            .build()
            .unwrap();
        let mp = MatchedPair::trivial(a4(), t3.clone());
        assert!(matched_pair_sum(&mp).same_constants(&direct_sum(&a4(), &t3)));
        let r = verify_matched_pair_theorem(&mp, Family::Transposed);
        assert!(r.agree && r.all_pass(), "{r}");
    }

    #[test]
    fn one_sided_pairs() {
        let mp = MatchedPair::trivial(a4(), Algebra::zero(0));
        for f in Family::ALL {
            assert!(check_matched_pair(&mp, f).passed());
        }
    }

    #[test]
    fn swapping_twice_is_identity() {
        let mp = MatchedPair::trivial(a4(), Algebra::zero(2));
        assert_eq!(mp.swapped().swapped(), mp);
    }
}
