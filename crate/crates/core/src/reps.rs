//! Representations `(V, ρ, μ)`: `μ(x)` acts through the product, `ρ(x,y)`
//! through the bracket. Matrices act on column vectors of the carrier.

use crate::algebras::{validate, Algebra, Family};
use crate::error::{Error, Result};
use crate::kernel::{vector, Matrix, Scalar, Vector};
use crate::report::{check_identity, LawReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    base: Algebra,
    carrier: usize,
    mu: Vec<Matrix>,
    rho: Vec<Vec<Matrix>>,
}

impl Representation {
    pub fn new(
        base: Algebra,
        carrier: usize,
        mu: Vec<Matrix>,
        rho: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let n = base.dim();
        let square = |m: &Matrix| m.rows() == carrier && m.cols() == carrier;
        if mu.len() != n || !mu.iter().all(square) {
            return Err(Error::input(format!(
                "μ needs {n} matrices of size {carrier}x{carrier}"
            )));
        }
        if rho.len() != n
            || !rho
                .iter()
                .all(|row| row.len() == n && row.iter().all(square))
        {
            return Err(Error::input(format!(
                "ρ needs {n}x{n} matrices of size {carrier}x{carrier}"
            )));
        }
        Ok(Representation {
            base,
            carrier,
            mu,
            rho,
        })
    }

    pub fn zero(base: Algebra, carrier: usize) -> Self {
        let n = base.dim();
        Representation {
            base,
            carrier,
            mu: vec![Matrix::zeros(carrier, carrier); n],
            rho: vec![vec![Matrix::zeros(carrier, carrier); n]; n],
        }
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn mu(&self, i: usize) -> &Matrix {
        &self.mu[i]
    }

    pub fn rho(&self, i: usize, j: usize) -> &Matrix {
        &self.rho[i][j]
    }

    pub fn mu_all(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn rho_all(&self) -> &[Vec<Matrix>] {
        &self.rho
    }

    pub fn mu_mut(&mut self, i: usize) -> &mut Matrix {
        &mut self.mu[i]
    }

    pub fn rho_mut(&mut self, i: usize, j: usize) -> &mut Matrix {
        &mut self.rho[i][j]
    }

    /// `μ(x)v` for an arbitrary element `x`.
    pub fn act_mu(&self, x: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.carrier);
        for (i, xi) in vector::support(x) {
            vector::axpy(&mut out, xi, &self.mu[i].apply(v));
        }
        out
    }

    /// `ρ(x,y)v` for arbitrary elements `x, y`.
    pub fn act_rho(&self, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.carrier);
        for (i, xi) in vector::support(x) {
            for (j, yj) in vector::support(y) {
                vector::axpy(&mut out, &(xi * yj), &self.rho[i][j].apply(v));
            }
        }
        out
    }
}

/// Identities required of a representation of `family`, named in report
/// order. Each is checked on basis tuples of the base and a carrier basis
/// vector `v`.
pub fn representation_conditions(rep: &Representation, family: Family) -> LawReport {
    let mut r = LawReport::new();
    if family.has_product() {
        r.push(cond_product(rep));
    }
    if family.has_bracket() {
        for c in cond_3lie(rep) {
            r.push(c);
        }
    }
    match family {
        Family::Poisson => cond_poisson(rep, &mut r),
        Family::Transposed => cond_transposed(rep, &mut r),
        Family::Admissible => cond_admissible(rep, &mut r),
        Family::CommAssoc | Family::ThreeLie => {}
    }
    r
}

/// Representation conditions, after checking that the base algebra itself
/// belongs to `family`.
pub fn validate_representation(rep: &Representation, family: Family) -> Result<LawReport> {
    let base = validate(&rep.base, &[family]);
    if !base.passed() {
        return Err(Error::precondition(
            format!("base algebra is not a {family} algebra"),
            base,
        ));
    }
    Ok(representation_conditions(rep, family))
}

struct Ctx<'a> {
    rep: &'a Representation,
    n: usize,
    m: usize,
}

impl<'a> Ctx<'a> {
    fn new(rep: &'a Representation) -> Self {
        Ctx {
            rep,
            n: rep.base.dim(),
            m: rep.carrier,
        }
    }
    fn e(&self, i: usize) -> Vector {
        self.rep.base.unit(i)
    }
    fn v(&self, r: usize) -> Vector {
        vector::unit(self.m, r)
    }
    fn mu(&self, i: usize, v: &[Scalar]) -> Vector {
        self.rep.mu[i].apply(v)
    }
    fn mu_x(&self, x: &[Scalar], v: &[Scalar]) -> Vector {
        self.rep.act_mu(x, v)
    }
    fn rho(&self, i: usize, j: usize, v: &[Scalar]) -> Vector {
        self.rep.rho[i][j].apply(v)
    }
    fn rho_x(&self, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vector {
        self.rep.act_rho(x, y, v)
    }
    fn mul(&self, i: usize, j: usize) -> &[Scalar] {
        self.rep.base.mul_basis(i, j)
    }
    fn br(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        self.rep.base.bracket_basis(i, j, k)
    }
    fn vars3(&self) -> [(&'static str, usize); 4] {
        [("x", self.n), ("y", self.n), ("z", self.n), ("v", self.m)]
    }
}

fn cond_product(rep: &Representation) -> crate::report::LawResult {
    let c = Ctx::new(rep);
    check_identity("rep-product", &[("x", c.n), ("y", c.n), ("v", c.m)], |t| {
        let v = c.v(t[2]);
        (c.mu_x(c.mul(t[0], t[1]), &v), c.mu(t[0], &c.mu(t[1], &v)))
    })
}

fn cond_3lie(rep: &Representation) -> Vec<crate::report::LawResult> {
    let c = Ctx::new(rep);
    let n = c.n;
    let skew = check_identity(
        "rep-rho-antisymmetry",
        &[("x", n), ("y", n), ("v", c.m)],
        |t| {
            let v = c.v(t[2]);
            (c.rho(t[0], t[1], &v), vector::neg(&c.rho(t[1], t[0], &v)))
        },
    );
    let vars4 = [("x1", n), ("x2", n), ("x3", n), ("x4", n), ("v", c.m)];
    let commutator = check_identity("rep-3lie-commutator", &vars4, |t| {
        let (x1, x2, x3, x4) = (t[0], t[1], t[2], t[3]);
        let v = c.v(t[4]);
        let lhs = vector::sub(
            &c.rho(x1, x2, &c.rho(x3, x4, &v)),
            &c.rho(x3, x4, &c.rho(x1, x2, &v)),
        );
        let rhs = vector::sub(
            &c.rho_x(c.br(x1, x2, x3), &c.e(x4), &v),
            &c.rho_x(c.br(x1, x2, x4), &c.e(x3), &v),
        );
        (lhs, rhs)
    });
    let bracket = check_identity("rep-3lie-bracket", &vars4, |t| {
        let (x1, x2, x3, x4) = (t[0], t[1], t[2], t[3]);
        let v = c.v(t[4]);
        let lhs = c.rho_x(c.br(x1, x2, x3), &c.e(x4), &v);
        let mut rhs = c.rho(x1, x2, &c.rho(x3, x4, &v));
        rhs = vector::add(&rhs, &c.rho(x2, x3, &c.rho(x1, x4, &v)));
        rhs = vector::add(&rhs, &c.rho(x3, x1, &c.rho(x2, x4, &v)));
        (lhs, rhs)
    });
    vec![skew, commutator, bracket]
}

fn cond_poisson(rep: &Representation, r: &mut LawReport) {
    let c = Ctx::new(rep);
    r.push(check_identity("rep-poisson-product", &c.vars3(), |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let v = c.v(t[3]);
        let lhs = c.rho_x(c.mul(x, y), &c.e(z), &v);
        let rhs = vector::add(&c.mu(x, &c.rho(y, z, &v)), &c.mu(y, &c.rho(x, z, &v)));
        (lhs, rhs)
    }));
    r.push(check_identity("rep-poisson-bracket", &c.vars3(), |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let v = c.v(t[3]);
        let lhs = c.rho(x, y, &c.mu(z, &v));
        let rhs = vector::add(&c.mu_x(c.br(x, y, z), &v), &c.mu(z, &c.rho(x, y, &v)));
        (lhs, rhs)
    }));
}

fn cond_transposed(rep: &Representation, r: &mut LawReport) {
    let c = Ctx::new(rep);
    let three = Scalar::from_int(3);
    r.push(check_identity("rep-transposed-product", &c.vars3(), |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let v = c.v(t[3]);
        let lhs = vector::scale(&three, &c.mu(x, &c.rho(y, z, &v)));
        let mut rhs = c.rho_x(c.mul(x, y), &c.e(z), &v);
        rhs = vector::add(&rhs, &c.rho_x(&c.e(y), c.mul(x, z), &v));
        rhs = vector::add(&rhs, &c.rho(y, z, &c.mu(x, &v)));
        (lhs, rhs)
    }));
    r.push(check_identity("rep-transposed-bracket", &c.vars3(), |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let v = c.v(t[3]);
        let lhs = vector::scale(&three, &c.mu_x(c.br(x, y, z), &v));
        let mut rhs = c.rho(y, z, &c.mu(x, &v));
        rhs = vector::sub(&rhs, &c.rho(x, z, &c.mu(y, &v)));
        rhs = vector::add(&rhs, &c.rho(x, y, &c.mu(z, &v)));
        (lhs, rhs)
    }));
}

fn cond_admissible(rep: &Representation, r: &mut LawReport) {
    let c = Ctx::new(rep);
    let zero = || vector::zeros(c.m);
    r.push(check_identity("rep-admissible-mu-rho", &c.vars3(), |t| {
        (c.mu(t[0], &c.rho(t[1], t[2], &c.v(t[3]))), zero())
    }));
    r.push(check_identity("rep-admissible-rho-mu", &c.vars3(), |t| {
        (c.rho(t[1], t[2], &c.mu(t[0], &c.v(t[3]))), zero())
    }));
    r.push(check_identity(
        "rep-admissible-rho-product",
        &c.vars3(),
        |t| (c.rho_x(c.mul(t[0], t[1]), &c.e(t[2]), &c.v(t[3])), zero()),
    ));
    r.push(check_identity(
        "rep-admissible-mu-bracket",
        &c.vars3(),
        |t| (c.mu_x(c.br(t[0], t[1], t[2]), &c.v(t[3])), zero()),
    ));
}

/// Carrier = the algebra itself; `μ(e_i)` is left multiplication and
/// `ρ(e_i,e_j) = ad_{e_i,e_j}`.
pub fn adjoint_representation(alg: &Algebra) -> Representation {
    let n = alg.dim();
    Representation {
        base: alg.clone(),
        carrier: n,
        mu: (0..n).map(|i| alg.left_mult(i)).collect(),
        rho: (0..n)
            .map(|i| (0..n).map(|j| alg.ad(i, j)).collect())
            .collect(),
    }
}

/// The dual representation `(V*, ρ*, -μ*)`, with `ρ*(x,y) = -ρ(x,y)ᵀ` and
/// `(-μ*)(x) = μ(x)ᵀ`, together with a verdict when the family does not
/// guarantee validity.
#[derive(Clone, Debug)]
pub struct DualRepresentation {
    pub rep: Representation,
    /// For the transposed family: the conditions
    /// `μ(x)ρ(y,z) = ρ(y,z)μ(x)` and `μ([x,y,z]) = 0` on the original
    /// representation, which hold exactly when the dual is a representation.
    pub criterion: Option<LawReport>,
}

impl DualRepresentation {
    /// `true` unless the criterion was evaluated and failed.
    pub fn is_representation(&self) -> bool {
        self.criterion.as_ref().is_none_or(LawReport::passed)
    }
}

pub fn dual_representation(rep: &Representation, family: Family) -> DualRepresentation {
    let dual = Representation {
        base: rep.base.clone(),
        carrier: rep.carrier,
        mu: rep.mu.iter().map(Matrix::transpose).collect(),
        rho: rep
            .rho
            .iter()
            .map(|row| row.iter().map(|m| m.transpose().neg()).collect())
            .collect(),
    };
    let criterion = (family == Family::Transposed).then(|| dual_criterion(rep));
    DualRepresentation {
        rep: dual,
        criterion,
    }
}

fn dual_criterion(rep: &Representation) -> LawReport {
    let c = Ctx::new(rep);
    let mut r = LawReport::new();
    r.push(check_identity("dual-mu-rho-commute", &c.vars3(), |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let v = c.v(t[3]);
        (c.mu(x, &c.rho(y, z, &v)), c.rho(y, z, &c.mu(x, &v)))
    }));
    r.push(check_identity("dual-mu-bracket", &c.vars3(), |t| {
        (
            c.mu_x(c.br(t[0], t[1], t[2]), &c.v(t[3])),
            vector::zeros(c.m),
        )
    }));
    r
}

/// `B ⊕ V` with `(x+u)·(y+v) = x·y + μ(x)v + μ(y)u` and
/// `[x1+u1, x2+u2, x3+u3] = [x1,x2,x3] + ρ(x1,x2)u3 - ρ(x1,x3)u2 + ρ(x2,x3)u1`.
/// Built whether or not `rep` is valid. The formulas are the same for every
/// family; `family` is accepted for symmetry with the other constructors.
pub fn semidirect_product(rep: &Representation, _family: Family) -> Algebra {
    let n = rep.base.dim();
    let m = rep.carrier;
    let mut out = Algebra::zero(n + m);
    let base = &rep.base;
    for (i, j, l, v) in base.product_entries() {
        out.product_mut().set(&[i, j, l], v);
    }
    for (i, j, k, l, v) in base.bracket_entries() {
        out.bracket_mut().set(&[i, j, k, l], v);
    }
    for i in 0..n {
        for r in 0..m {
            for s in 0..m {
                let v = rep.mu[i].get(s, r);
                if !v.is_zero() {
                    out.product_mut().set(&[i, n + r, n + s], v.clone());
                    out.product_mut().set(&[n + r, i, n + s], v.clone());
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for r in 0..m {
                for s in 0..m {
                    let v = rep.rho[i][j].get(s, r);
                    if v.is_zero() {
                        continue;
                    }
                    // [e_i, e_j, u], [e_i, u, e_j], [u, e_i, e_j]
                    *out.bracket_mut().get_mut(&[i, j, n + r, n + s]) += v;
                    *out.bracket_mut().get_mut(&[i, n + r, j, n + s]) -= v;
                    *out.bracket_mut().get_mut(&[n + r, i, j, n + s]) += v;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::validate;

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
    fn adjoint_matrices() {
        let ad = adjoint_representation(&a4());
        assert_eq!(ad.act_mu(&a4().unit(1), &a4().unit(2)), a4().unit(0));
        assert_eq!(
            ad.act_rho(&a4().unit(1), &a4().unit(2), &a4().unit(3)),
            a4().unit(0)
        );
        let t = adjoint_representation(&t3());
        assert_eq!(t.rho(0, 1).apply(&t3().unit(2)), t3().unit(0));
        assert_eq!(
            t.mu(2).apply(&t3().unit(2)),
            vector::scale(&Scalar::from_int(-3), &t3().unit(0))
        );
        assert!(adjoint_representation(&Algebra::zero(2)).mu(0).is_zero());
    }

    #[test]
    fn adjoint_of_a4_is_admissible() {
        let r =
            validate_representation(&adjoint_representation(&a4()), Family::Admissible).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn zero_rep_always_valid() {
        for f in Family::ALL {
            let rep = Representation::zero(a4(), 2);
            assert!(validate_representation(&rep, f).unwrap().passed());
        }
    }

    #[test]
    fn t3_adjoint_poisson() {
        let rep = adjoint_representation(&t3());
        assert!(matches!(
            validate_representation(&rep, Family::Poisson),
            Err(Error::Precondition { .. })
        ));
        assert!(!representation_conditions(&rep, Family::Poisson).passed());
    }

    #[test]
    fn coadjoint_of_a4() {
        let d = dual_representation(&adjoint_representation(&a4()), Family::Admissible);
        assert!(d.criterion.is_none());
        assert!(validate_representation(&d.rep, Family::Admissible)
            .unwrap()
            .passed());
        // (-μ*)(e2) e1* = e3*
        assert_eq!(d.rep.mu(1).apply(&a4().unit(0)), a4().unit(2));
    }

    #[test]
    fn double_dual_is_identity() {
        let rep = adjoint_representation(&t3());
        let dd = dual_representation(
            &dual_representation(&rep, Family::Poisson).rep,
            Family::Poisson,
        );
        assert_eq!(dd.rep, rep);
    }

    #[test]
    fn t3_coadjoint_not_transposed() {
        let d = dual_representation(&adjoint_representation(&t3()), Family::Transposed);
        assert!(!d.is_representation());
        assert!(!representation_conditions(&d.rep, Family::Transposed).passed());
        let semi = semidirect_product(&d.rep, Family::Transposed);
        assert!(!validate(&semi, &[Family::Transposed]).passed());
    }

    #[test]
    fn semidirect_of_adjoint() {
        let s = semidirect_product(&adjoint_representation(&a4()), Family::Admissible);
        assert_eq!(s.dim(), 8);
        assert!(validate(&s, &[Family::Admissible]).passed());
    }

    #[test]
    fn semidirect_with_zero_rep_is_direct_sum() {
        let s = semidirect_product(&Representation::zero(t3(), 2), Family::Transposed);
        assert!(s.same_constants(&crate::algebras::direct_sum(&t3(), &Algebra::zero(2))));
    }
}
