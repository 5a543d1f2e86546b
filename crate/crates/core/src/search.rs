//! Brute-force enumeration of structure constants over a finite
//! coefficient set.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::algebras::{is_valid, Algebra, AlgebraBuilder, Family};
use crate::error::{Error, Result};
use crate::kernel::Scalar;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A product slot `e_i·e_j → e_l` or a bracket slot `[e_i,e_j,e_k] → e_l`,
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    Product([usize; 3]),
    Bracket([usize; 4]),
}

impl Slot {
    fn indices(&self) -> &[usize] {
        match self {
            Slot::Product(ix) => ix,
            Slot::Bracket(ix) => ix,
        }
    }

    fn apply(&self, b: AlgebraBuilder, v: Scalar) -> AlgebraBuilder {
        match *self {
            Slot::Product([i, j, l]) => b.product(i, j, l, v),
            Slot::Bracket([i, j, k, l]) => b.bracket(i, j, k, l, v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchTemplate {
    pub dim: usize,
    pub fixed: Vec<(Slot, Scalar)>,
    pub free: Vec<Slot>,
    pub coefficients: Vec<Scalar>,
    pub families: Vec<Family>,
    pub closure: bool,
    pub budget: u64,
}

impl SearchTemplate {
    pub fn new(dim: usize, coefficients: Vec<Scalar>, families: Vec<Family>) -> Self {
        SearchTemplate {
            dim,
            fixed: Vec::new(),
            free: Vec::new(),
            coefficients,
            families,
            closure: true,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn fix(mut self, slot: Slot, v: impl Into<Scalar>) -> Self {
        self.fixed.push((slot, v.into()));
        self
    }

    pub fn free(mut self, slot: Slot) -> Self {
        self.free.push(slot);
        self
    }

    /// `|coefficients|^|free|`.
    pub fn candidate_count(&self) -> BigUint {
        BigUint::from(self.coefficients.len()).pow(self.free.len() as u32)
    }

    fn check(&self) -> Result<()> {
        let all = self.fixed.iter().map(|(s, _)| s).chain(&self.free);
        for s in all {
            if let Some(bad) = s.indices().iter().find(|&&i| i == 0 || i > self.dim) {
                return Err(Error::input(format!(
                    "slot {s:?} has index {bad} outside 1..={}",
                    self.dim
                )));
            }
        }
        let mut seen = HashSet::new();
        for s in self.fixed.iter().map(|(s, _)| s).chain(&self.free) {
            if !seen.insert(s) {
                return Err(Error::input(format!("slot {s:?} appears more than once")));
            }
        }
        if self.coefficients.is_empty() && !self.free.is_empty() {
            return Err(Error::input("free slots need a nonempty coefficient set"));
        }
        let required = self.candidate_count();
        if required > BigUint::from(self.budget) {
            return Err(Error::Budget {
                required: required.to_string(),
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// Lazily enumerates assignments in lexicographic order (first free slot
/// most significant, coefficients in the listed order) and yields those
/// whose completed algebra satisfies every target family. Algebras equal to
/// an earlier emission are skipped.
pub struct Enumeration {
    template: SearchTemplate,
    counter: Option<Vec<usize>>,
    seen: HashSet<Algebra>,
}

pub fn enumerate_structures(template: SearchTemplate) -> Result<Enumeration> {
    template.check()?;
    Ok(Enumeration {
        counter: Some(vec![0; template.free.len()]),
        template,
        seen: HashSet::new(),
    })
}

impl Enumeration {
    fn advance(&mut self) {
        let k = self.template.coefficients.len();
        if let Some(c) = &mut self.counter {
            for pos in (0..c.len()).rev() {
                c[pos] += 1;
                if c[pos] < k {
                    return;
                }
                c[pos] = 0;
            }
            self.counter = None;
        }
    }

    fn build(&self, assignment: &[Scalar]) -> Result<Algebra> {
        let t = &self.template;
        let mut b = Algebra::builder(t.dim).closure(t.closure);
        for (slot, v) in &t.fixed {
            b = slot.apply(b, v.clone());
        }
        for (slot, v) in t.free.iter().zip(assignment) {
            if !v.is_zero() {
                b = slot.apply(b, v.clone());
            }
        }
        b.build()
    }
}

impl Iterator for Enumeration {
    type Item = (Vec<Scalar>, Algebra);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let counter = self.counter.clone()?;
            self.advance();
            let assignment: Vec<Scalar> = counter
                .iter()
                .map(|&i| self.template.coefficients[i].clone())
                .collect();
            let alg = self
                .build(&assignment)
                .expect("slots checked on construction");
            if self.template.families.iter().all(|f| is_valid(&alg, *f))
                && self.seen.insert(alg.clone())
            {
                return Some((assignment, alg));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_give_zero_algebra() {
        let t = SearchTemplate::new(2, vec![Scalar::zero()], vec![Family::Poisson])
            .free(Slot::Product([1, 1, 1]))
            .free(Slot::Product([1, 2, 2]));
        let out: Vec<_> = enumerate_structures(t).unwrap().collect();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].1, Algebra::zero(2));
    }

    #[test]
    fn budget_refusal_reports_count() {
        let mut t = SearchTemplate::new(
            3,
            vec![Scalar::zero(), Scalar::one()],
            vec![Family::CommAssoc],
        );
        for l in 1..=3 {
            t = t.free(Slot::Product([1, 1, l]));
        }
        t.budget = 4;
        match enumerate_structures(t) {
            Err(Error::Budget { required, budget }) => {
                assert_eq!((required.as_str(), budget), ("8", 4))
            }
            other => panic!("expected budget error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn overlapping_slots_rejected() {
        let t = SearchTemplate::new(3, vec![Scalar::one()], vec![])
            .fix(Slot::Product([1, 1, 1]), 1)
            .free(Slot::Product([1, 1, 1]));
        assert!(matches!(enumerate_structures(t), Err(Error::Input(_))));
    }
}
