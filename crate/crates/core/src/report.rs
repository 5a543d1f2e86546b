//! Verdicts with witnesses, shared by every checker.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::kernel::{MultiIndex, Scalar, Vector};

/// A failing instance of an identity: the basis-index tuple (1-based, one
/// entry per named variable) and the two unequal sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vars: Vec<String>,
    pub tuple: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    /// 0-based tuple, ready to feed back into an evaluator.
    pub fn indices(&self) -> Vec<usize> {
        self.tuple.iter().map(|i| i - 1).collect()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vars
            .iter()
            .zip(&self.tuple)
            .map(|(v, i)| format!("{v}={i}"))
            .collect();
        write!(
            f,
            "at ({}): lhs = {} vs rhs = {}",
            parts.join(", "),
            fmt_vec(&self.lhs),
            fmt_vec(&self.rhs)
        )?;
        if let Some(n) = &self.note {
            write!(f, " [{n}]")?;
        }
        Ok(())
    }
}

pub fn fmt_vec(v: &[Scalar]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", s.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl LawResult {
    pub fn pass(law: impl Into<String>) -> Self {
        LawResult {
            law: law.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(law: impl Into<String>, witness: Witness) -> Self {
        LawResult {
            law: law.into(),
            pass: false,
            witness: Some(witness),
        }
    }
}

/// Ordered per-law verdicts. Law names are unique within a report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub results: Vec<LawResult>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Later results with an already-present name are dropped, so shared
    /// prerequisites are reported once.
    pub fn push(&mut self, r: LawResult) {
        if self.get(&r.law).is_none() {
            self.results.push(r);
        }
    }

    pub fn extend(&mut self, other: LawReport) {
        for r in other.results {
            self.push(r);
        }
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: LawReport) {
        for mut r in other.results {
            r.law = format!("{prefix}{}", r.law);
            self.push(r);
        }
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn get(&self, law: &str) -> Option<&LawResult> {
        self.results.iter().find(|r| r.law == law)
    }

    /// `None` when the law was not evaluated.
    pub fn verdict(&self, law: &str) -> Option<bool> {
        self.get(law).map(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    pub fn first_failure(&self) -> Option<&LawResult> {
        self.failures().next()
    }

    pub fn laws(&self) -> impl Iterator<Item = &str> {
        self.results.iter().map(|r| r.law.as_str())
    }

    pub fn len(&self) -> usize {
        self.results.len()
    }

    pub fn is_empty(&self) -> bool {
        self.results.is_empty()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            write!(f, "  {:<6} {}", if r.pass { "PASS" } else { "FAIL" }, r.law)?;
            if let Some(w) = &r.witness {
                write!(f, "  {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Checks `lhs(t) = rhs(t)` for every tuple `t` in the product of the
/// variable ranges, in lexicographic order, stopping at the first failure.
pub fn check_identity<S, F>(law: &str, vars: &[(S, usize)], mut eval: F) -> LawResult
where
    S: AsRef<str>,
    F: FnMut(&[usize]) -> (Vector, Vector),
{
    let dims: Vec<usize> = vars.iter().map(|v| v.1).collect();
    for t in MultiIndex::new(&dims) {
        let (lhs, rhs) = eval(&t);
        if lhs != rhs {
            return LawResult::fail(
                law,
                Witness {
                    vars: vars.iter().map(|v| v.0.as_ref().to_string()).collect(),
                    tuple: t.iter().map(|i| i + 1).collect(),
                    lhs,
                    rhs,
                    note: None,
                },
            );
        }
    }
    LawResult::pass(law)
}

/// One named statement of an equivalence and its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statement {
    pub name: String,
    pub pass: bool,
    pub report: LawReport,
}

/// Independent evaluations of statements that should all agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub statements: Vec<Statement>,
    pub agree: bool,
    /// When the verdicts disagree: the first failure of every failing
    /// statement, tagged with the statement name.
    pub disagreement: Vec<(String, LawResult)>,
}

impl EquivalenceReport {
    pub fn new(parts: Vec<(String, LawReport)>) -> Self {
        let statements: Vec<Statement> = parts
            .into_iter()
            .map(|(name, report)| Statement {
                name,
                pass: report.passed(),
                report,
            })
            .collect();
        let agree = statements.windows(2).all(|w| w[0].pass == w[1].pass);
        let disagreement = if agree {
            Vec::new()
        } else {
            statements
                .iter()
                .filter_map(|s| {
                    s.report
                        .first_failure()
                        .map(|f| (s.name.clone(), f.clone()))
                })
                .collect()
        };
        EquivalenceReport {
            statements,
            agree,
            disagreement,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.statements.iter().all(|s| s.pass)
    }

    pub fn all_fail(&self) -> bool {
        self.statements.iter().all(|s| !s.pass)
    }

    pub fn verdicts(&self) -> Vec<bool> {
        self.statements.iter().map(|s| s.pass).collect()
    }

    pub fn statement(&self, name: &str) -> Option<&Statement> {
        self.statements.iter().find(|s| s.name == name)
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{:<6} {}", if s.pass { "PASS" } else { "FAIL" }, s.name)?;
            if let Some(r) = s.report.first_failure() {
                write!(f, "         first failure: {}", r.law)?;
                if let Some(w) = &r.witness {
                    write!(f, " {w}")?;
                }
                writeln!(f)?;
            }
        }
        writeln!(f, "agree: {}", self.agree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_lexicographic_failure() {
        let r = check_identity("t", &[("a", 3), ("b", 3)], |t| {
            let bad = t[0] + t[1] >= 3;
            (vec![Scalar::from_int(bad as i64)], vec![Scalar::zero()])
        });
        assert!(!r.pass);
        assert_eq!(r.witness.unwrap().tuple, vec![2, 3]);
    }

    #[test]
    fn empty_range_passes() {
        let r = check_identity("t", &[("a", 0)], |_| (vec![Scalar::one()], vec![]));
        assert!(r.pass);
    }

    #[test]
    fn duplicate_laws_reported_once() {
        let mut rep = LawReport::new();
        rep.push(LawResult::pass("x"));
        rep.push(LawResult::pass("x"));
        assert_eq!(rep.len(), 1);
    }
}
