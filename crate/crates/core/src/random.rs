//! Seeded generators of sparse random structures for property tests and
//! experiments. Generated instances are not guaranteed to satisfy any law
//! unless the function says so.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebras::{is_valid, Algebra, Family};
use crate::duality::Coalgebra;
use crate::kernel::{Matrix, Scalar};
use crate::pairs::{split_sum, MatchedPair};
use crate::reps::Representation;

/// Small nonzero coefficients used by every generator.
pub const COEFFS: [i64; 5] = [1, -1, 2, -2, 3];

fn coeff<R: Rng>(rng: &mut R) -> Scalar {
    if rng.gen_bool(0.1) {
        Scalar::ratio(*COEFFS.choose(rng).unwrap(), 2)
    } else {
        Scalar::from_int(*COEFFS.choose(rng).unwrap())
    }
}

/// Random algebra with about `product_terms` independent product entries
/// and `bracket_terms` bracket entries, completed by symmetric and
/// antisymmetric closure.
pub fn sparse_algebra<R: Rng>(
    rng: &mut R,
    dim: usize,
    product_terms: usize,
    bracket_terms: usize,
) -> Algebra {
    let mut b = Algebra::builder(dim);
    if dim == 0 {
        return b.build().unwrap();
    }
    for _ in 0..product_terms {
        let (i, j, l) = (
            rng.gen_range(1..=dim),
            rng.gen_range(1..=dim),
            rng.gen_range(1..=dim),
        );
        let (i, j) = (i.min(j), i.max(j));
        b = b.product(i, j, l, coeff(rng));
    }
    if dim >= 3 {
        for _ in 0..bracket_terms {
            let mut ix: Vec<usize> = (1..=dim).collect();
            ix.shuffle(rng);
            let mut t = [ix[0], ix[1], ix[2]];
            t.sort();
            b = b.bracket(t[0], t[1], t[2], rng.gen_range(1..=dim), coeff(rng));
        }
    }
    b.build().unwrap()
}

/// Rejection-samples a sparse algebra of `family`; falls back to the zero
/// algebra after `tries` attempts.
pub fn valid_algebra<R: Rng>(rng: &mut R, dim: usize, family: Family, tries: usize) -> Algebra {
    for _ in 0..tries {
        let p = rng.gen_range(0..=3);
        let b = rng.gen_range(0..=2);
        let a = sparse_algebra(rng, dim, p, b);
        if is_valid(&a, family) {
            return a;
        }
    }
    Algebra::zero(dim)
}

fn sparse_matrices<R: Rng>(rng: &mut R, count: usize, size: usize, terms: usize) -> Vec<Matrix> {
    let mut ms = vec![Matrix::zeros(size, size); count];
    if count == 0 || size == 0 {
        return ms;
    }
    for _ in 0..terms {
        let k = rng.gen_range(0..count);
        let (r, c) = (rng.gen_range(0..size), rng.gen_range(0..size));
        ms[k].set(r, c, coeff(rng));
    }
    ms
}

/// `ρ` given by `terms` random entries; when `skew` is set each entry is
/// mirrored with the opposite sign so `ρ(x,y) = -ρ(y,x)`.
fn sparse_rho<R: Rng>(
    rng: &mut R,
    n: usize,
    size: usize,
    terms: usize,
    skew: bool,
) -> Vec<Vec<Matrix>> {
    let mut rho = vec![vec![Matrix::zeros(size, size); n]; n];
    if n == 0 || size == 0 {
        return rho;
    }
    for _ in 0..terms {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (r, c) = (rng.gen_range(0..size), rng.gen_range(0..size));
        if skew && i == j {
            continue;
        }
        let v = coeff(rng);
        if skew {
            rho[j][i].set(r, c, -&v);
        }
        rho[i][j].set(r, c, v);
    }
    rho
}

/// Random sparse `(μ, ρ)` on a carrier of dimension `carrier`. `ρ` is
/// antisymmetric except with small probability.
pub fn sparse_representation<R: Rng>(
    rng: &mut R,
    base: &Algebra,
    carrier: usize,
    terms: usize,
) -> Representation {
    let n = base.dim();
    let mu_terms = rng.gen_range(0..=terms);
    let mu = sparse_matrices(rng, n, carrier, mu_terms);
    let skew = !rng.gen_bool(0.05);
    let rho = sparse_rho(rng, n, carrier, terms - mu_terms, skew);
    Representation::new(base.clone(), carrier, mu, rho).expect("generator extents")
}

/// Random sparse maps between two given algebras.
pub fn sparse_matched_pair<R: Rng>(
    rng: &mut R,
    a: &Algebra,
    b: &Algebra,
    terms: usize,
) -> MatchedPair {
    let (n, p) = (a.dim(), b.dim());
    let split: Vec<usize> = (0..4).map(|_| rng.gen_range(0..=terms)).collect();
    let skew = !rng.gen_bool(0.05);
    let mu_a = sparse_matrices(rng, n, p, split[0] / 2);
    let rho_a = sparse_rho(rng, n, p, split[1] / 2, skew);
    let mu_b = sparse_matrices(rng, p, n, split[2] / 2);
    let rho_b = sparse_rho(rng, p, n, split[3] / 2, skew);
    MatchedPair::new(a.clone(), b.clone(), mu_a, rho_a, mu_b, rho_b).expect("generator extents")
}

/// Random coproducts with about `terms` entries in each of `Δ` and `δ`.
/// With `closure` the entries are symmetrized / antisymmetrized.
pub fn sparse_coalgebra<R: Rng>(rng: &mut R, dim: usize, terms: usize, closure: bool) -> Coalgebra {
    let mut b = Coalgebra::builder(dim).closure(closure);
    if dim == 0 {
        return b.build().unwrap();
    }
    let r = |rng: &mut R| rng.gen_range(1..=dim);
    for _ in 0..rng.gen_range(0..=terms) {
        let (k, i, j) = (r(rng), r(rng), r(rng));
        b = b.cop2(k, i.min(j), i.max(j), coeff(rng));
    }
    if dim >= 3 {
        for _ in 0..rng.gen_range(0..=terms) {
            let mut ix: Vec<usize> = (1..=dim).collect();
            ix.shuffle(rng);
            let mut t = [ix[0], ix[1], ix[2]];
            t.sort();
            b = b.cop3(r(rng), t[0], t[1], t[2], coeff(rng));
        }
    }
    b.build().unwrap()
}

/// Random algebra on `A ⊕ B` (dimensions `n`, `p`) shaped like a
/// matched-pair sum, returned as its pair. Components that a sum cannot
/// have are dropped after closure, so the result is always a pair.
pub fn sparse_sum_pair<R: Rng>(
    rng: &mut R,
    n: usize,
    p: usize,
    product_terms: usize,
    bracket_terms: usize,
) -> MatchedPair {
    let mut alg = sparse_algebra(rng, n + p, product_terms, bracket_terms);
    let in_a = |i: usize| i < n;
    for (i, j, l, _) in alg.product_entries() {
        let (ai, aj, al) = (in_a(i), in_a(j), in_a(l));
        if (ai && aj && !al) || (!ai && !aj && al) {
            alg.product_mut().set(&[i, j, l], Scalar::zero());
        }
    }
    for (i, j, k, l, _) in alg.bracket_entries() {
        let count = [i, j, k].iter().filter(|&&x| in_a(x)).count();
        let keep = match count {
            3 => in_a(l),
            2 => !in_a(l),
            1 => in_a(l),
            _ => !in_a(l),
        };
        if !keep {
            alg.bracket_mut().set(&[i, j, k, l], Scalar::zero());
        }
    }
    split_sum(&alg, n).expect("block structure of a sum")
}

/// Rejection-samples a pair whose sum satisfies `family`; falls back to
/// the trivial pair of zero algebras.
pub fn valid_sum_pair<R: Rng>(
    rng: &mut R,
    n: usize,
    p: usize,
    family: Family,
    tries: usize,
) -> MatchedPair {
    for _ in 0..tries {
        let pt = rng.gen_range(0..=4);
        let bt = rng.gen_range(0..=3);
        let mp = sparse_sum_pair(rng, n, p, pt, bt);
        if is_valid(&crate::pairs::matched_pair_sum(&mp), family) {
            return mp;
        }
    }
    MatchedPair::trivial(Algebra::zero(n), Algebra::zero(p))
}
