//! Property tests against the hash-map oracles in `common`.

mod common;

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{dual_of, pair_sum, semidirect, Naive};
use tripoisson::algebras::validate;
use tripoisson::duality::{dualize_algebra, dualize_coalgebra, validate_coalgebra, Coalgebra};
use tripoisson::io::{
    algebra_json, coalgebra_json, matched_pair_json, parse_str, to_pretty, Document,
};
use tripoisson::manin::verify_equivalence;
use tripoisson::pairs::{matched_pair_sum, verify_matched_pair_theorem};
use tripoisson::random::{
    sparse_coalgebra, sparse_matched_pair, sparse_representation, valid_algebra, valid_sum_pair,
};
use tripoisson::reps::{semidirect_product, validate_representation};
use tripoisson::search::{enumerate_structures, SearchTemplate, Slot};
use tripoisson::{Algebra, Family, Scalar};

fn rat() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

fn big(p: (i64, i64)) -> BigRational {
    BigRational::new(BigInt::from(p.0), BigInt::from(p.1))
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

/// Raw constants, no closure: `(dim, product entries, bracket entries)`.
fn raw_algebra() -> impl Strategy<Value = Algebra> {
    (1usize..=3).prop_flat_map(|n| {
        let prod = prop::collection::vec((0..n, 0..n, 0..n, -2i64..=2), 0..4);
        let br = prop::collection::vec((0..n, 0..n, 0..n, 0..n, -2i64..=2), 0..4);
        (Just(n), prod, br).prop_map(|(n, prod, br)| {
            let mut b = Algebra::builder(n).closure(false);
            for (i, j, l, v) in prod {
                b = b.product(i + 1, j + 1, l + 1, v);
            }
            for (i, j, k, l, v) in br {
                b = b.bracket(i + 1, j + 1, k + 1, l + 1, v);
            }
            b.build().unwrap()
        })
    })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scalar_ops_match_bigrational(a in rat(), b in rat(), c in rat()) {
        let (x, y, z) = (Scalar::from(big(a)), Scalar::from(big(b)), Scalar::from(big(c)));
        prop_assert_eq!(&x + &y, Scalar::from(big(a) + big(b)));
        prop_assert_eq!(&x * &y, Scalar::from(big(a) * big(b)));
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        let mut acc = x.clone();
        acc += &y;
        prop_assert_eq!(acc, &x + &y);
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn validate_matches_oracle_on_raw_constants(alg in raw_algebra(), f in family()) {
        prop_assert_eq!(validate(&alg, &[f]).passed(), Naive::of(&alg).valid(f));
    }

    #[test]
    fn validate_matches_oracle_on_sampled_members(seed in any::<u64>(), n in 1usize..=4, f in family()) {
        let alg = valid_algebra(&mut rng(seed), n, f, 20);
        let o = Naive::of(&alg);
        for g in Family::ALL {
            prop_assert_eq!(validate(&alg, &[g]).passed(), o.valid(g), "{}", g);
        }
    }

    #[test]
    fn witness_is_a_genuine_failure(alg in raw_algebra(), f in family()) {
        let report = validate(&alg, &[f]);
        for r in report.failures() {
            let w = r.witness.as_ref().unwrap();
            prop_assert_ne!(&w.lhs, &w.rhs);
            prop_assert!(w.tuple.iter().all(|&i| (1..=alg.dim()).contains(&i)));
        }
    }

    #[test]
    fn algebra_json_round_trip(alg in raw_algebra()) {
        let text = to_pretty(&algebra_json(&alg));
        match parse_str(&text, Path::new(".")).unwrap() {
            Document::Algebra(back) => prop_assert!(back.same_constants(&alg)),
            other => prop_assert!(false, "parsed as {}", other.kind()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn semidirect_agrees_with_oracle(seed in any::<u64>(), n in 1usize..=3, m in 1usize..=2, f in family()) {
        let mut r = rng(seed);
        let base = valid_algebra(&mut r, n, f, 20);
        let rep = sparse_representation(&mut r, &base, m, 3);
        let sd = semidirect_product(&rep, f);
        prop_assert!(semidirect(&rep).same_as(&sd));
        if let Ok(report) = validate_representation(&rep, f) {
            prop_assert_eq!(report.passed(), validate(&sd, &[f]).passed());
        }
    }

    #[test]
    fn matched_pair_sum_agrees_with_oracle(seed in any::<u64>(), f in family(), planted in any::<bool>()) {
        let mut r = rng(seed);
        let mp = if planted {
            valid_sum_pair(&mut r, 2, 2, f, 20)
        } else {
            let a = valid_algebra(&mut r, 2, f, 20);
            let b = valid_algebra(&mut r, 1, f, 20);
            sparse_matched_pair(&mut r, &a, &b, 4)
        };
        prop_assert!(pair_sum(&mp).same_as(&matched_pair_sum(&mp)));
        let eq = verify_matched_pair_theorem(&mp, f);
        prop_assert!(eq.agree, "{}", eq);
    }

    #[test]
    fn matched_pair_json_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = valid_algebra(&mut r, 2, Family::Poisson, 20);
        let b = valid_algebra(&mut r, 2, Family::Poisson, 20);
        let mp = sparse_matched_pair(&mut r, &a, &b, 5);
        let text = to_pretty(&matched_pair_json(&mp));
        match parse_str(&text, Path::new(".")).unwrap() {
            Document::MatchedPair(back) => prop_assert!(matched_pair_sum(&back).same_constants(&matched_pair_sum(&mp))),
            other => prop_assert!(false, "parsed as {}", other.kind()),
        }
    }

    #[test]
    fn duality_is_sound_and_invertible(seed in any::<u64>(), n in 1usize..=4, terms in 0usize..=4, closure in any::<bool>()) {
        let co = sparse_coalgebra(&mut rng(seed), n, terms, closure);
        let dual = dualize_coalgebra(&co);
        prop_assert!(dual_of(&co).same_as(&dual));
        prop_assert_eq!(&dualize_algebra(&dual), &co);
        prop_assert!(dualize_coalgebra(&dualize_algebra(&dual)).same_constants(&dual));
        for f in Family::ALL {
            prop_assert_eq!(validate_coalgebra(&co, &[f]).passed(), validate(&dual, &[f]).passed(), "{}", f);
        }
        let text = to_pretty(&coalgebra_json(&co));
        match parse_str(&text, Path::new(".")).unwrap() {
            Document::Coalgebra(back) => prop_assert_eq!(back, co),
            other => prop_assert!(false, "parsed as {}", other.kind()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn equivalence_statements_agree_on_random_bundles(seed in any::<u64>(), f in prop::sample::select(vec![Family::CommAssoc, Family::Poisson, Family::Admissible])) {
        let mut r = rng(seed);
        let alg = valid_algebra(&mut r, 3, f, 20);
        // The zero coalgebra always pairs with a member of the family.
        let co = if seed % 3 == 0 { Coalgebra::zero(3) } else { sparse_coalgebra(&mut r, 3, 2, true) };
        let eq = verify_equivalence(&alg, &co, f).unwrap();
        prop_assert!(eq.agree, "{}", eq);
        if seed % 3 == 0 {
            prop_assert!(eq.all_pass(), "{}", eq);
        }
    }

    #[test]
    fn search_is_deterministic_and_finds_planted(seed in any::<u64>(), f in prop::sample::select(vec![Family::CommAssoc, Family::Poisson, Family::Transposed])) {
        let planted = valid_algebra(&mut rng(seed), 2, f, 30);
        prop_assume!(planted.product().nonzero().all(|(_, v)| v.is_integer() && v.abs() <= Scalar::from_int(2)));
        let coefficients: Vec<Scalar> = (-2..=2).map(Scalar::from_int).collect();
        let mut t = SearchTemplate::new(2, coefficients, vec![f]);
        t.closure = false;
        // Free the planted support plus two slots outside it.
        let mut extra = 0;
        for (ix, _) in planted.product().nonzero() {
            t = t.free(Slot::Product([ix[0] + 1, ix[1] + 1, ix[2] + 1]));
        }
        for (i, j, l) in [(1, 1, 1), (1, 2, 2), (2, 2, 1), (2, 1, 2), (1, 1, 2)] {
            let slot = Slot::Product([i, j, l]);
            if extra < 2 && !t.free.contains(&slot) {
                t = t.free(slot);
                extra += 1;
            }
        }
        let first: Vec<_> = enumerate_structures(t.clone()).unwrap().collect();
        let second: Vec<_> = enumerate_structures(t).unwrap().collect();
        prop_assert_eq!(&first, &second);
        prop_assert!(first.iter().any(|(_, a)| a.same_constants(&planted)));
        for (_, a) in &first {
            prop_assert!(Naive::of(a).valid(f));
        }
    }
}
