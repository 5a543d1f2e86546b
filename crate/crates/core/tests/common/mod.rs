//! Independent oracles: dense evaluators written directly from the
//! defining formulas, sharing nothing with the library beyond reading
//! structure constants out of its types.

#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use tripoisson::duality::Coalgebra;
use tripoisson::pairs::MatchedPair;
use tripoisson::reps::Representation;
use tripoisson::{Algebra, Family, Scalar};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub type V = Vec<Scalar>;

fn zero(n: usize) -> V {
    vec![Scalar::zero(); n]
}

fn e(n: usize, i: usize) -> V {
    let mut v = zero(n);
    v[i] = Scalar::one();
    v
}

fn add(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(c: i64, a: &V) -> V {
    a.iter().map(|x| x * &Scalar::from_int(c)).collect()
}

/// Sparse constants in hash maps; 0-based.
#[derive(Clone, Debug, Default)]
pub struct Naive {
    pub n: usize,
    pub prod: HashMap<(usize, usize), Vec<(usize, Scalar)>>,
    pub br: HashMap<(usize, usize, usize), Vec<(usize, Scalar)>>,
}

impl Naive {
    pub fn new(n: usize) -> Self {
        Naive {
            n,
            ..Default::default()
        }
    }

    pub fn of(alg: &Algebra) -> Self {
        let mut o = Naive::new(alg.dim());
        for (i, j, l, v) in alg.product_entries() {
            o.add_prod(i, j, l, v);
        }
        for (i, j, k, l, v) in alg.bracket_entries() {
            o.add_br(i, j, k, l, v);
        }
        o
    }

    pub fn add_prod(&mut self, i: usize, j: usize, l: usize, v: Scalar) {
        if !v.is_zero() {
            self.prod.entry((i, j)).or_default().push((l, v));
        }
    }

    pub fn add_br(&mut self, i: usize, j: usize, k: usize, l: usize, v: Scalar) {
        if !v.is_zero() {
            self.br.entry((i, j, k)).or_default().push((l, v));
        }
    }

    pub fn mul(&self, x: &V, y: &V) -> V {
        let mut out = zero(self.n);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let Some(terms) = self.prod.get(&(i, j)) else {
                    continue;
                };
                let c = a * b;
                for (l, v) in terms {
                    out[*l] = &out[*l] + &(&c * v);
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &V, y: &V, z: &V) -> V {
        let mut out = zero(self.n);
        let nz = |v: &V| -> Vec<(usize, Scalar)> {
            v.iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, a)| (i, a.clone()))
                .collect()
        };
        let (xs, ys, zs) = (nz(x), nz(y), nz(z));
        for (i, a) in &xs {
            for (j, b) in &ys {
                for (k, c) in &zs {
                    let Some(terms) = self.br.get(&(*i, *j, *k)) else {
                        continue;
                    };
                    let coef = &(a * b) * c;
                    for (l, v) in terms {
                        out[*l] = &out[*l] + &(&coef * v);
                    }
                }
            }
        }
        out
    }

    /// Same constants as `alg`, entry by entry.
    pub fn same_as(&self, alg: &Algebra) -> bool {
        let n = self.n;
        if alg.dim() != n {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                if self.mul(&e(n, i), &e(n, j)) != alg.mul_basis(i, j).to_vec() {
                    return false;
                }
                for k in 0..n {
                    if self.bracket(&e(n, i), &e(n, j), &e(n, k))
                        != alg.bracket_basis(i, j, k).to_vec()
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn tuples(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..self.n).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        out
    }

    fn holds(&self, k: usize, f: impl Fn(&[V]) -> (V, V)) -> bool {
        self.tuples(k).iter().all(|t| {
            let xs: Vec<V> = t.iter().map(|&i| e(self.n, i)).collect();
            let (l, r) = f(&xs);
            l == r
        })
    }

    pub fn commutative(&self) -> bool {
        self.holds(2, |x| (self.mul(&x[0], &x[1]), self.mul(&x[1], &x[0])))
    }

    pub fn associative(&self) -> bool {
        self.holds(3, |x| {
            (
                self.mul(&self.mul(&x[0], &x[1]), &x[2]),
                self.mul(&x[0], &self.mul(&x[1], &x[2])),
            )
        })
    }

    pub fn skew(&self) -> bool {
        let b = |x: &[V]| self.bracket(&x[0], &x[1], &x[2]);
        self.holds(3, |x| (b(x), scale(-1, &self.bracket(&x[1], &x[0], &x[2]))))
            && self.holds(3, |x| (b(x), scale(-1, &self.bracket(&x[0], &x[2], &x[1]))))
    }

    fn jac(&self, x: &[V]) -> (V, V) {
        let lhs = self.bracket(&x[0], &x[1], &self.bracket(&x[2], &x[3], &x[4]));
        let r1 = self.bracket(&self.bracket(&x[0], &x[1], &x[2]), &x[3], &x[4]);
        let r2 = self.bracket(&x[2], &self.bracket(&x[0], &x[1], &x[3]), &x[4]);
        let r3 = self.bracket(&x[2], &x[3], &self.bracket(&x[0], &x[1], &x[4]));
        (lhs, add(&add(&r1, &r2), &r3))
    }

    pub fn filippov_jacobi(&self) -> bool {
        self.holds(5, |x| self.jac(x))
    }

    /// Every failing basis 5-tuple of the Filippov-Jacobi identity,
    /// 1-based, in lexicographic order.
    pub fn fj_failures(&self) -> Vec<Vec<usize>> {
        self.tuples(5)
            .into_iter()
            .filter(|t| {
                let xs: Vec<V> = t.iter().map(|&i| e(self.n, i)).collect();
                let (l, r) = self.jac(&xs);
                l != r
            })
            .map(|t| t.iter().map(|i| i + 1).collect())
            .collect()
    }

    pub fn poisson_leibniz(&self) -> bool {
        self.holds(4, |x| {
            let lhs = self.bracket(&self.mul(&x[0], &x[1]), &x[2], &x[3]);
            let r1 = self.mul(&x[0], &self.bracket(&x[1], &x[2], &x[3]));
            let r2 = self.mul(&x[1], &self.bracket(&x[0], &x[2], &x[3]));
            (lhs, add(&r1, &r2))
        })
    }

    pub fn transposed_leibniz(&self) -> bool {
        self.holds(4, |x| {
            let lhs = scale(3, &self.mul(&x[0], &self.bracket(&x[1], &x[2], &x[3])));
            let r1 = self.bracket(&self.mul(&x[0], &x[1]), &x[2], &x[3]);
            let r2 = self.bracket(&x[1], &self.mul(&x[0], &x[2]), &x[3]);
            let r3 = self.bracket(&x[1], &x[2], &self.mul(&x[0], &x[3]));
            (lhs, add(&add(&r1, &r2), &r3))
        })
    }

    pub fn admissible_mixed(&self) -> bool {
        self.holds(4, |x| {
            (
                self.mul(&x[0], &self.bracket(&x[1], &x[2], &x[3])),
                zero(self.n),
            )
        }) && self.holds(4, |x| {
            (
                self.bracket(&self.mul(&x[0], &x[1]), &x[2], &x[3]),
                zero(self.n),
            )
        })
    }

    pub fn valid(&self, f: Family) -> bool {
        let ca = || self.commutative() && self.associative();
        let lie = || self.skew() && self.filippov_jacobi();
        match f {
            Family::CommAssoc => ca(),
            Family::ThreeLie => lie(),
            Family::Poisson => ca() && lie() && self.poisson_leibniz(),
            Family::Transposed => ca() && lie() && self.transposed_leibniz(),
            Family::Admissible => ca() && lie() && self.admissible_mixed(),
        }
    }
}

/// `B ⊕ V` from a representation, written out from the formulas
/// `(x+u)(y+v) = xy + μ(x)v + μ(y)u` and
/// `[x1+u1,x2+u2,x3+u3] = [x1,x2,x3] + ρ(x1,x2)u3 - ρ(x1,x3)u2 + ρ(x2,x3)u1`.
pub fn semidirect(rep: &Representation) -> Naive {
    let base = Naive::of(rep.base());
    let (n, m) = (rep.base().dim(), rep.carrier());
    let mut o = Naive::new(n + m);
    o.prod = base.prod.clone();
    o.br = base.br.clone();
    for i in 0..n {
        let mu = rep.mu(i);
        for s in 0..m {
            for r in 0..m {
                let v = mu.get(r, s).clone();
                o.add_prod(i, n + s, n + r, v.clone());
                o.add_prod(n + s, i, n + r, v);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let rho = rep.rho(i, j);
            for s in 0..m {
                for r in 0..m {
                    let v = rho.get(r, s).clone();
                    o.add_br(i, j, n + s, n + r, v.clone());
                    o.add_br(i, n + s, j, n + r, -v.clone());
                    o.add_br(n + s, i, j, n + r, v);
                }
            }
        }
    }
    o
}

/// Sum algebra of a matched pair, A first, from
/// `x·y = μ_A(x)y + μ_B(y)x` and the six action terms of the bracket.
pub fn pair_sum(mp: &MatchedPair) -> Naive {
    let (a, b) = (mp.algebra_a(), mp.algebra_b());
    let (n, p) = (a.dim(), b.dim());
    let mut o = Naive::new(n + p);
    for (i, j, l, v) in a.product_entries() {
        o.add_prod(i, j, l, v);
    }
    for (i, j, k, l, v) in a.bracket_entries() {
        o.add_br(i, j, k, l, v);
    }
    for (i, j, l, v) in b.product_entries() {
        o.add_prod(n + i, n + j, n + l, v);
    }
    for (i, j, k, l, v) in b.bracket_entries() {
        o.add_br(n + i, n + j, n + k, n + l, v);
    }
    // μ_A(e_i) f_s and μ_B(f_s) e_i, both orders of the product.
    for i in 0..n {
        for s in 0..p {
            for r in 0..p {
                let v = mp.mu_a()[i].get(r, s).clone();
                o.add_prod(i, n + s, n + r, v.clone());
                o.add_prod(n + s, i, n + r, v);
            }
        }
    }
    for s in 0..p {
        for i in 0..n {
            for r in 0..n {
                let v = mp.mu_b()[s].get(r, i).clone();
                o.add_prod(i, n + s, r, v.clone());
                o.add_prod(n + s, i, r, v);
            }
        }
    }
    // [x1+y1, x2+y2, x3+y3] picks ρ_A(x1,x2)y3, ρ_A(x3,x1)y2, ρ_A(x2,x3)y1
    // and the mirrored ρ_B terms; on basis triples with two A-slots and
    // one B-slot only the matching term survives.
    for i in 0..n {
        for j in 0..n {
            for s in 0..p {
                for r in 0..p {
                    let v = mp.rho_a()[i][j].get(r, s).clone();
                    o.add_br(i, j, n + s, n + r, v.clone());
                    o.add_br(j, n + s, i, n + r, v.clone());
                    o.add_br(n + s, i, j, n + r, v);
                }
            }
        }
    }
    for s in 0..p {
        for t in 0..p {
            for i in 0..n {
                for r in 0..n {
                    let v = mp.rho_b()[s][t].get(r, i).clone();
                    o.add_br(n + s, n + t, i, r, v.clone());
                    o.add_br(n + t, i, n + s, r, v.clone());
                    o.add_br(i, n + s, n + t, r, v);
                }
            }
        }
    }
    o
}

/// Dual algebra of a coalgebra: `e_i*·e_j* = Σ_k Δ(e_k)_{ij} e_k*` and
/// `[e_i*,e_j*,e_l*] = Σ_k δ(e_k)_{ijl} e_k*`.
pub fn dual_of(co: &Coalgebra) -> Naive {
    let n = co.dim();
    let mut o = Naive::new(n);
    for (ix, v) in co.cop2().nonzero() {
        o.add_prod(ix[1], ix[2], ix[0], v.clone());
    }
    for (ix, v) in co.cop3().nonzero() {
        o.add_br(ix[1], ix[2], ix[3], ix[0], v.clone());
    }
    o
}

/// Gaussian elimination rank over the rationals.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().unwrap();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for k in 0..cols {
                    let d = &f * &m[r][k];
                    m[i][k] = &m[i][k] - &d;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn det(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    if rank(rows) < n {
        return Scalar::zero();
    }
    let mut m = rows.to_vec();
    let mut d = Scalar::one();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero()).unwrap();
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d = &d * &m[c][c];
        let inv = m[c][c].recip().unwrap();
        for i in c + 1..n {
            let f = &m[i][c] * &inv;
            for k in c..n {
                let t = &f * &m[c][k];
                m[i][k] = &m[i][k] - &t;
            }
        }
    }
    d
}

/// Example algebras shared by several test files.
pub fn t3() -> Algebra {
    Algebra::builder(3)
        .product(2, 2, 1, 1)
        .product(3, 3, 1, -3)
        .bracket(1, 2, 3, 1, 1)
        .build()
        .unwrap()
}

pub fn a4() -> Algebra {
    Algebra::builder(4)
        .product(2, 3, 1, 1)
        .bracket(2, 3, 4, 1, 1)
        .build()
        .unwrap()
}

pub fn b4() -> Algebra {
    Algebra::builder(4)
        .product(2, 2, 1, 1)
        .bracket(2, 3, 4, 1, 1)
        .build()
        .unwrap()
}

pub fn ex_coalgebra() -> Coalgebra {
    Coalgebra::builder(4)
        .cop2(2, 1, 1, 1)
        .cop3(2, 1, 3, 4, 1)
        .build()
        .unwrap()
}
