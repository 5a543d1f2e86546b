use super::{validate, Algebra, Family, LinearMap};
use crate::error::{Error, Result};
use crate::kernel::{vector, Scalar, Tensor};
use crate::report::{check_identity, LawReport};

/// Block-diagonal sum: `e_i` of `a1` first, then `a2`; no cross terms.
pub fn direct_sum(a1: &Algebra, a2: &Algebra) -> Algebra {
    let n1 = a1.dim();
    let mut out = Algebra::zero(n1 + a2.dim());
    for (off, a) in [(0, a1), (n1, a2)] {
        for (i, j, l, v) in a.product_entries() {
            out.product_mut().set(&[i + off, j + off, l + off], v);
        }
        for (i, j, k, l, v) in a.bracket_entries() {
            out.bracket_mut()
                .set(&[i + off, j + off, k + off, l + off], v);
        }
    }
    out
}

/// `A ⊗ C` with `(x⊗u)·(y⊗v) = (x·y)⊗(u·v)` and
/// `[x⊗u, y⊗v, z⊗w] = [x,y,z]⊗(u·v·w)`. Basis `e_i⊗f_u` sits at `i·dim(C) + u`.
pub fn tensor_with_commutative(a1: &Algebra, c2: &Algebra) -> Result<Algebra> {
    let ca = validate(c2, &[Family::CommAssoc]);
    if !ca.passed() {
        return Err(Error::precondition(
            "second factor must be commutative and associative",
            ca,
        ));
    }
    if !c2.bracket().is_zero() {
        return Err(Error::precondition(
            "second factor must have a zero bracket",
            LawReport::new(),
        ));
    }
    let (n1, n2) = (a1.dim(), c2.dim());
    let at = |i: usize, u: usize| i * n2 + u;
    let mut out = Algebra::zero(n1 * n2);
    for (i, j, l, v) in a1.product_entries() {
        for (u, w, t, s) in c2.product_entries() {
            out.product_mut()
                .set(&[at(i, u), at(j, w), at(l, t)], &v * &s);
        }
    }
    let brackets = a1.bracket_entries();
    if !brackets.is_empty() {
        for u in 0..n2 {
            for v in 0..n2 {
                let uv = c2.mul_basis(u, v);
                for w in 0..n2 {
                    let uvw = c2.mul(uv, &c2.unit(w));
                    for (t, s) in vector::support(&uvw) {
                        for (i, j, k, l, c) in &brackets {
                            out.bracket_mut()
                                .set(&[at(*i, u), at(*j, v), at(*k, w), at(*l, t)], c * s);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Same product, bracket `[x,y,z]_h = h·[x,y,z]`.
pub fn h_twist(alg: &Algebra, h: &[Scalar]) -> Result<Algebra> {
    let n = alg.dim();
    if h.len() != n {
        return Err(Error::input(format!(
            "twisting element has {} coordinates, algebra has dimension {n}",
            h.len()
        )));
    }
    let pre = validate(alg, &[Family::Transposed]);
    if !pre.passed() {
        return Err(Error::precondition(
            "h-twist needs a transposed algebra",
            pre,
        ));
    }
    let mut bracket = Tensor::cube(n, 4);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let b = alg.bracket_basis(i, j, k);
                if vector::is_zero(b) {
                    continue;
                }
                let hb = alg.mul(h, b);
                for (l, v) in vector::support(&hb) {
                    bracket.set(&[i, j, k, l], v.clone());
                }
            }
        }
    }
    let out = Algebra::from_tensors(alg.product().clone(), bracket)?
        .with_labels(alg.labels().map(<[String]>::to_vec));
    let post = validate(&out, &[Family::Transposed]);
    if !post.passed() {
        return Err(Error::precondition(
            "h-twist result is not transposed",
            post,
        ));
    }
    Ok(out)
}

/// Checks `φ([x,y,z]) = [φx,φy,φz]` and `φ(x·y) = φx·φy` on basis tuples.
pub fn is_homomorphism(f: &LinearMap, a1: &Algebra, a2: &Algebra) -> Result<LawReport> {
    if f.source() != a1.dim() || f.target() != a2.dim() {
        return Err(Error::input(format!(
            "map {}->{} does not match algebras of dimension {} and {}",
            f.source(),
            f.target(),
            a1.dim(),
            a2.dim()
        )));
    }
    let n = a1.dim();
    let img: Vec<_> = (0..n).map(|i| f.apply(&a1.unit(i))).collect();
    let mut r = LawReport::new();
    r.push(check_identity(
        "homomorphism-product",
        &[("x", n), ("y", n)],
        |t| {
            (
                f.apply(a1.mul_basis(t[0], t[1])),
                a2.mul(&img[t[0]], &img[t[1]]),
            )
        },
    ));
    r.push(check_identity(
        "homomorphism-bracket",
        &[("x", n), ("y", n), ("z", n)],
        |t| {
            (
                f.apply(a1.bracket_basis(t[0], t[1], t[2])),
                a2.br(&img[t[0]], &img[t[1]], &img[t[2]]),
            )
        },
    ));
    Ok(r)
}

/// Checks `D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz]` on basis triples.
pub fn is_derivation(d: &LinearMap, alg: &Algebra) -> Result<LawReport> {
    let n = alg.dim();
    if d.source() != n || d.target() != n {
        return Err(Error::input(format!(
            "map {}->{} is not an endomorphism of a dimension-{n} algebra",
            d.source(),
            d.target()
        )));
    }
    let img: Vec<_> = (0..n).map(|i| d.apply(&alg.unit(i))).collect();
    let mut r = LawReport::new();
    r.push(check_identity(
        "derivation-bracket",
        &[("x", n), ("y", n), ("z", n)],
        |t| {
            let (x, y, z) = (alg.unit(t[0]), alg.unit(t[1]), alg.unit(t[2]));
            let lhs = d.apply(alg.bracket_basis(t[0], t[1], t[2]));
            let mut rhs = alg.br(&img[t[0]], &y, &z);
            rhs = vector::add(&rhs, &alg.br(&x, &img[t[1]], &z));
            rhs = vector::add(&rhs, &alg.br(&x, &y, &img[t[2]]));
            (lhs, rhs)
        },
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Matrix;

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
    fn sums() {
        let s = direct_sum(&a4(), &a4());
        assert_eq!(s.dim(), 8);
        assert!(validate(&s, &Family::ALL).passed());
        assert!(validate(&direct_sum(&t3(), &t3()), &[Family::Transposed]).passed());
        assert!(direct_sum(&a4(), &Algebra::zero(0)).same_constants(&a4()));
    }

    #[test]
    fn tensors() {
        let unit = Algebra::builder(1).product(1, 1, 1, 1).build().unwrap();
        assert!(tensor_with_commutative(&a4(), &unit)
            .unwrap()
            .same_constants(&a4()));
        let null = Algebra::zero(1);
        assert!(tensor_with_commutative(&a4(), &null).unwrap().is_abelian());
        let f = Algebra::builder(2).product(1, 1, 1, 1).build().unwrap();
        let t = tensor_with_commutative(&t3(), &f).unwrap();
        assert!(validate(&t, &[Family::Transposed]).passed());
        let bad = Algebra::builder(3).bracket(1, 2, 3, 1, 1).build().unwrap();
        assert!(matches!(
            tensor_with_commutative(&a4(), &bad),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn twists_of_t3_vanish() {
        for i in 0..3 {
            let h = t3().unit(i);
            assert!(h_twist(&t3(), &h).unwrap().bracket().is_zero());
        }
        let poisson_only = Algebra::builder(3)
            .product(1, 1, 1, 1)
            .bracket(1, 2, 3, 1, 1)
            .build()
            .unwrap();
        if !validate(&poisson_only, &[Family::Transposed]).passed() {
            assert!(h_twist(&poisson_only, &poisson_only.unit(0)).is_err());
        }
    }

    #[test]
    fn homomorphisms() {
        assert!(is_homomorphism(&LinearMap::identity(4), &a4(), &a4())
            .unwrap()
            .passed());
        assert!(is_homomorphism(&LinearMap::zero(4, 3), &a4(), &t3())
            .unwrap()
            .passed());
        let two = LinearMap::new(3, 3, Matrix::identity(3).scale(&Scalar::from_int(2))).unwrap();
        let r = is_homomorphism(&two, &t3(), &t3()).unwrap();
        assert_eq!(r.verdict("homomorphism-bracket"), Some(false));
        assert!(is_homomorphism(&LinearMap::identity(3), &a4(), &a4()).is_err());
    }

    #[test]
    fn derivations() {
        let a = a4();
        let ad = LinearMap::new(4, 4, a.ad(1, 2)).unwrap();
        assert_eq!(ad.apply(&a.unit(3)), a.unit(0));
        assert!(is_derivation(&ad, &a).unwrap().passed());
        assert!(is_derivation(&LinearMap::zero(3, 3), &t3())
            .unwrap()
            .passed());
        let r = is_derivation(&LinearMap::identity(3), &t3()).unwrap();
        let w = r.first_failure().unwrap().witness.clone().unwrap();
        assert_eq!(w.lhs, t3().unit(0));
        assert_eq!(w.rhs, vector::scale(&Scalar::from_int(3), &t3().unit(0)));
    }
}
