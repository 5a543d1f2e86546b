//! Command-line front end. Every run produces one [`RunReport`]; `--json`
//! prints it as a single JSON object, otherwise a readable summary.
//!
//! Exit codes: 0 all checks pass, 1 a law or condition failed, 2 input
//! error, 3 the equivalence harness disagreed with itself.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::algebras::{
    direct_sum, h_twist, is_valid, tensor_with_commutative, validate, Algebra, Family,
};
use crate::duality::{dualize_algebra, dualize_coalgebra, validate_coalgebra, Coalgebra};
use crate::error::Error;
use crate::io::{self, Document};
use crate::kernel::{Matrix, Scalar};
use crate::manin::{
    check_bialgebra, check_manin_triple, double_construct, solve_invariant_forms,
    verify_equivalence,
};
use crate::pairs::{check_matched_pair, matched_pair_sum};
use crate::report::{EquivalenceReport, LawReport};
use crate::reps::{semidirect_product, validate_representation};
use crate::search::enumerate_structures;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "tripoisson",
    version,
    about = "Check and build Poisson-type 3-Lie algebras from structure constants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print one JSON report object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Read only the listed entries; skip symmetric and antisymmetric completion.
    #[arg(long, global = true)]
    pub no_closure: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the laws of any object file against one or more families.
    Validate {
        path: PathBuf,
        #[arg(long = "family")]
        families: Vec<Family>,
    },
    /// Build a new object from input files and write it out.
    Construct {
        op: ConstructOp,
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<PathBuf>,
        /// Twisting element: a basis label such as `e1` or comma-separated coordinates.
        #[arg(long)]
        h: Option<String>,
        #[arg(long = "family")]
        families: Vec<Family>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run the bialgebra / matched pair / Manin triple equivalence on a bundle.
    Verify {
        bundle: PathBuf,
        #[arg(long = "family")]
        families: Vec<Family>,
    },
    /// Enumerate the structures described by a template file.
    Search {
        template: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Dualize an algebra into a coalgebra or a coalgebra into an algebra.
    Dualize {
        path: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Solve for invariant symmetric bilinear forms on an algebra.
    Forms { path: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructOp {
    DirectSum,
    Tensor,
    Twist,
    Semidirect,
    PairSum,
    Double,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(flatten)]
    pub payload: Payload,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Laws {
        report: LawReport,
    },
    Equivalence {
        report: EquivalenceReport,
    },
    Search {
        candidates: String,
        emitted: Vec<Emission>,
    },
    Forms {
        dimension: usize,
        determinant: String,
        witness: Option<Matrix>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Emission {
    pub assignment: Vec<Scalar>,
    pub algebra: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// SHA-256 over the top-level input files, in argument order.
    pub inputs_digest: String,
    pub checks: Vec<Check>,
    pub verdict: bool,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// The constructed object, when no output path was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    /// Kept out of the JSON so reruns are byte-identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl RunReport {
    fn new(command: Vec<String>, inputs: &[PathBuf]) -> Self {
        RunReport {
            command,
            inputs_digest: digest(inputs),
            checks: Vec::new(),
            verdict: true,
            exit_code: EXIT_PASS,
            error: None,
            output: None,
            wall_time: Duration::ZERO,
        }
    }

    fn push(&mut self, name: impl Into<String>, pass: bool, payload: Payload) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            payload,
        });
        self.verdict = self.checks.iter().all(|c| c.pass);
    }

    fn laws(&mut self, name: impl Into<String>, report: LawReport) {
        let pass = report.passed();
        self.push(name, pass, Payload::Laws { report });
    }

    fn finish(&mut self, input_error: bool) {
        self.exit_code = if input_error {
            EXIT_INPUT
        } else {
            self.outcome()
        };
    }

    fn outcome(&self) -> i32 {
        let disagree = self
            .checks
            .iter()
            .any(|c| matches!(&c.payload, Payload::Equivalence { report } if !report.agree));
        if disagree {
            EXIT_DISAGREE
        } else if self.verdict {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn to_json(&self) -> String {
        io::to_pretty(&serde_json::to_value(self).expect("reports serialize"))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("$ tripoisson {}\n", self.command.join(" "));
        for c in &self.checks {
            s += &format!("{} {}\n", if c.pass { "PASS" } else { "FAIL" }, c.name);
            match &c.payload {
                Payload::Laws { report } => {
                    for r in report.failures() {
                        s += &format!("  FAIL {}", r.law);
                        if let Some(w) = &r.witness {
                            s += &format!("  {w}");
                        }
                        s.push('\n');
                    }
                }
                Payload::Equivalence { report } => {
                    for line in report.to_string().lines() {
                        s += &format!("  {line}\n");
                    }
                }
                Payload::Search {
                    candidates,
                    emitted,
                } => {
                    s += &format!("  {candidates} candidates, {} emitted\n", emitted.len());
                    for e in emitted {
                        let a: Vec<String> = e.assignment.iter().map(Scalar::to_string).collect();
                        s += &format!("  [{}]\n", a.join(", "));
                    }
                }
                Payload::Forms {
                    dimension,
                    determinant,
                    witness,
                } => {
                    s += &format!("  solution space dimension {dimension}\n  generic determinant: {determinant}\n");
                    if let Some(w) = witness {
                        for r in 0..w.rows() {
                            let row: Vec<String> = w.row(r).iter().map(Scalar::to_string).collect();
                            s += &format!("    [{}]\n", row.join(", "));
                        }
                    }
                }
            }
        }
        if let Some(o) = &self.output {
            s += &io::to_pretty(o);
        }
        s += &format!("verdict: {}\n", if self.verdict { "PASS" } else { "FAIL" });
        s
    }
}

fn digest(paths: &[PathBuf]) -> String {
    let mut h = Sha256::new();
    for p in paths {
        let bytes = fs::read(p).unwrap_or_default();
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(&bytes);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Parses arguments, runs the command, prints the report and returns the
/// exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            return code;
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let report = run(&cli, echo);
    if cli.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
        if let Some(e) = &report.error {
            eprintln!("error: {e}");
        }
    }
    report.exit_code
}

pub fn run(cli: &Cli, command: Vec<String>) -> RunReport {
    let start = Instant::now();
    let inputs = match &cli.command {
        Command::Validate { path, .. }
        | Command::Verify { bundle: path, .. }
        | Command::Search { template: path, .. }
        | Command::Dualize { path, .. }
        | Command::Forms { path } => vec![path.clone()],
        Command::Construct { inputs, .. } => inputs.clone(),
    };
    let mut report = RunReport::new(command, &inputs);
    let ctx = Ctx {
        no_closure: cli.no_closure,
    };
    let result = match &cli.command {
        Command::Validate { path, families } => ctx.validate(&mut report, path, families),
        Command::Construct {
            op,
            inputs,
            h,
            families,
            out,
        } => ctx.construct(
            &mut report,
            *op,
            inputs,
            h.as_deref(),
            families,
            out.as_deref(),
        ),
        Command::Verify { bundle, families } => ctx.verify(&mut report, bundle, families),
        Command::Search {
            template,
            budget,
            out,
        } => ctx.search(&mut report, template, *budget, out.as_deref()),
        Command::Dualize { path, out } => ctx.dualize(&mut report, path, out.as_deref()),
        Command::Forms { path } => ctx.forms(&mut report, path),
    };
    let mut input_error = false;
    if let Err(e) = result {
        match &e {
            Error::Precondition { what, report: laws } => {
                report.laws(format!("precondition: {what}"), laws.clone())
            }
            _ => input_error = true,
        }
        report.verdict = false;
        report.error = Some(e.to_string());
    }
    report.finish(input_error);
    report.wall_time = start.elapsed();
    report
}

struct Ctx {
    no_closure: bool,
}

/// Families with a bialgebra theory.
const BIALGEBRA_FAMILIES: [Family; 4] = [
    Family::CommAssoc,
    Family::ThreeLie,
    Family::Poisson,
    Family::Admissible,
];

fn or_all(families: &[Family], default: &[Family]) -> Vec<Family> {
    if families.is_empty() {
        default.to_vec()
    } else {
        families.to_vec()
    }
}

fn passing(alg: &Algebra) -> Vec<Family> {
    Family::ALL
        .into_iter()
        .filter(|f| is_valid(alg, *f))
        .collect()
}

fn write_out(report: &mut RunReport, out: Option<&Path>, value: Value) -> crate::Result<()> {
    match out {
        Some(p) => fs::write(p, io::to_pretty(&value))
            .map_err(|e| Error::input(format!("{}: {e}", p.display()))),
        None => {
            report.output = Some(value);
            Ok(())
        }
    }
}

/// `e3` or `0,1,-1/2`.
fn parse_element(s: &str, alg: &Algebra) -> crate::Result<Vec<Scalar>> {
    let n = alg.dim();
    let labelled = (0..n).find(|&i| alg.label(i) == s || format!("e{}", i + 1) == s);
    if let Some(i) = labelled {
        return Ok(alg.unit(i).to_vec());
    }
    let coords = s
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<Scalar>()
                .map_err(|_| Error::input(format!("--h: cannot read {c:?}")))
        })
        .collect::<crate::Result<Vec<_>>>()?;
    if coords.len() != n {
        return Err(Error::input(format!(
            "--h: {} coordinates given, algebra has dimension {n}",
            coords.len()
        )));
    }
    Ok(coords)
}

impl Ctx {
    fn load(&self, path: &Path) -> crate::Result<Document> {
        io::load_with(path, self.no_closure)
    }

    fn algebra(&self, path: &Path) -> crate::Result<Algebra> {
        match self.load(path)? {
            Document::Algebra(a) => Ok(a),
            Document::Double(d) => Ok(d.algebra),
            other => Err(Error::input(format!(
                "{}: expected an algebra, found kind \"{}\"",
                path.display(),
                other.kind()
            ))),
        }
    }

    fn bundle(&self, paths: &[PathBuf]) -> crate::Result<(Algebra, Coalgebra)> {
        match paths {
            [one] => match self.load(one)? {
                Document::Bundle(a, c) => Ok((a, c)),
                other => Err(Error::input(format!(
                    "{}: expected a bundle, found kind \"{}\"",
                    one.display(),
                    other.kind()
                ))),
            },
            [a, c] => {
                let alg = self.algebra(a)?;
                let co = match self.load(c)? {
                    Document::Coalgebra(co) => co,
                    other => {
                        return Err(Error::input(format!(
                            "{}: expected a coalgebra, found kind \"{}\"",
                            c.display(),
                            other.kind()
                        )))
                    }
                };
                if alg.dim() != co.dim() {
                    return Err(Error::input(format!(
                        "algebra has dimension {} but coalgebra has dimension {}",
                        alg.dim(),
                        co.dim()
                    )));
                }
                Ok((alg, co))
            }
            _ => Err(Error::input(
                "expected a bundle or an algebra and a coalgebra",
            )),
        }
    }

    fn validate(&self, r: &mut RunReport, path: &Path, families: &[Family]) -> crate::Result<()> {
        match self.load(path)? {
            Document::Algebra(alg) => {
                for f in or_all(families, &Family::ALL) {
                    r.laws(format!("validate {f}"), validate(&alg, &[f]));
                }
            }
            Document::Double(d) => {
                for f in or_all(families, &Family::ALL) {
                    r.laws(format!("validate {f}"), validate(&d.algebra, &[f]));
                }
                r.laws("manin triple", check_manin_triple(&d));
            }
            Document::Coalgebra(co) => {
                for f in or_all(families, &Family::ALL) {
                    r.laws(
                        format!("validate coalgebra {f}"),
                        validate_coalgebra(&co, &[f]),
                    );
                }
            }
            Document::Representation(rep) => {
                for f in or_all(families, &Family::ALL) {
                    match validate_representation(&rep, f) {
                        Ok(rep_report) => r.laws(format!("representation {f}"), rep_report),
                        Err(Error::Precondition { report, .. }) => {
                            r.laws(format!("representation {f} (base algebra)"), report)
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
            Document::MatchedPair(mp) => {
                for f in or_all(families, &Family::ALL) {
                    r.laws(format!("matched pair {f}"), check_matched_pair(&mp, f));
                }
            }
            Document::Bundle(alg, co) => {
                for f in or_all(families, &BIALGEBRA_FAMILIES) {
                    r.laws(format!("bialgebra {f}"), check_bialgebra(&alg, &co, f)?);
                }
            }
            Document::Template(_) => {
                return Err(Error::input(format!(
                    "{}: templates are run with the search command",
                    path.display()
                )))
            }
        }
        Ok(())
    }

    fn construct(
        &self,
        r: &mut RunReport,
        op: ConstructOp,
        inputs: &[PathBuf],
        h: Option<&str>,
        families: &[Family],
        out: Option<&Path>,
    ) -> crate::Result<()> {
        let arity = |k: usize| -> crate::Result<()> {
            if inputs.len() == k {
                Ok(())
            } else {
                Err(Error::input(format!(
                    "{op:?} takes {k} input file(s), got {}",
                    inputs.len()
                )))
            }
        };
        // Families the result is expected to satisfy when none are requested.
        let (result, guaranteed, value): (Algebra, Vec<Family>, Option<Value>) = match op {
            ConstructOp::DirectSum => {
                arity(2)?;
                let (a, b) = (self.algebra(&inputs[0])?, self.algebra(&inputs[1])?);
                let pb = passing(&b);
                let g = passing(&a).into_iter().filter(|f| pb.contains(f)).collect();
                (direct_sum(&a, &b), g, None)
            }
            ConstructOp::Tensor => {
                arity(2)?;
                let (a, c) = (self.algebra(&inputs[0])?, self.algebra(&inputs[1])?);
                let g = passing(&a);
                (tensor_with_commutative(&a, &c)?, g, None)
            }
            ConstructOp::Twist => {
                arity(1)?;
                let a = self.algebra(&inputs[0])?;
                let h = h.ok_or_else(|| Error::input("twist needs --h"))?;
                let h = parse_element(h, &a)?;
                (h_twist(&a, &h)?, vec![Family::Transposed], None)
            }
            ConstructOp::Semidirect => {
                arity(1)?;
                let rep = match self.load(&inputs[0])? {
                    Document::Representation(rep) => rep,
                    other => {
                        return Err(Error::input(format!(
                            "expected a representation, found kind \"{}\"",
                            other.kind()
                        )))
                    }
                };
                let mut g = Vec::new();
                for f in Family::ALL {
                    let ok = validate_representation(&rep, f)
                        .map(|x| x.passed())
                        .unwrap_or(false);
                    if families.contains(&f) && !ok {
                        let laws = validate_representation(&rep, f).or_else(|e| match e {
                            Error::Precondition { report, .. } => Ok(report),
                            e => Err(e),
                        })?;
                        return Err(Error::precondition(
                            format!("not a {f} representation"),
                            laws,
                        ));
                    }
                    if ok {
                        g.push(f);
                    }
                }
                let f = families.first().copied().unwrap_or(Family::Poisson);
                (semidirect_product(&rep, f), g, None)
            }
            ConstructOp::PairSum => {
                arity(1)?;
                let mp = match self.load(&inputs[0])? {
                    Document::MatchedPair(mp) => mp,
                    other => {
                        return Err(Error::input(format!(
                            "expected a matched pair, found kind \"{}\"",
                            other.kind()
                        )))
                    }
                };
                let mut g = Vec::new();
                for f in Family::ALL {
                    let laws = check_matched_pair(&mp, f);
                    if families.contains(&f) && !laws.passed() {
                        return Err(Error::precondition(format!("not a {f} matched pair"), laws));
                    }
                    if laws.passed() {
                        g.push(f);
                    }
                }
                (matched_pair_sum(&mp), g, None)
            }
            ConstructOp::Double => {
                let (alg, co) = self.bundle(inputs)?;
                let mut g = Vec::new();
                for f in BIALGEBRA_FAMILIES {
                    let laws = check_bialgebra(&alg, &co, f)?;
                    if families.contains(&f) && !laws.passed() {
                        return Err(Error::precondition(format!("not a {f} bialgebra"), laws));
                    }
                    if laws.passed() {
                        g.push(f);
                    }
                }
                let d = double_construct(&alg, &co)?;
                let v = io::double_json(&d);
                (d.algebra, g, Some(v))
            }
        };
        for f in or_all(families, &guaranteed) {
            r.laws(format!("summary {f}"), validate(&result, &[f]));
        }
        let value = value.unwrap_or_else(|| io::algebra_json(&result));
        write_out(r, out, value)
    }

    fn verify(&self, r: &mut RunReport, path: &Path, families: &[Family]) -> crate::Result<()> {
        let (alg, co) = self.bundle(&[path.to_path_buf()])?;
        for f in or_all(families, &BIALGEBRA_FAMILIES) {
            let eq = verify_equivalence(&alg, &co, f)?;
            let pass = eq.agree && eq.all_pass();
            r.push(
                format!("equivalence {f}"),
                pass,
                Payload::Equivalence { report: eq },
            );
        }
        Ok(())
    }

    fn search(
        &self,
        r: &mut RunReport,
        path: &Path,
        budget: Option<u64>,
        out: Option<&Path>,
    ) -> crate::Result<()> {
        let mut t = match self.load(path)? {
            Document::Template(t) => t,
            other => {
                return Err(Error::input(format!(
                    "expected a template, found kind \"{}\"",
                    other.kind()
                )))
            }
        };
        if let Some(b) = budget {
            t.budget = b;
        }
        if self.no_closure {
            t.closure = false;
        }
        let candidates = t.candidate_count().to_string();
        let families = t.families.clone();
        let mut emitted = Vec::new();
        let mut sound = true;
        for (assignment, alg) in enumerate_structures(t)? {
            sound &= families.iter().all(|f| is_valid(&alg, *f));
            emitted.push(Emission {
                assignment,
                algebra: io::algebra_json(&alg),
            });
        }
        if let Some(p) = out {
            let list = Value::Array(emitted.iter().map(|e| e.algebra.clone()).collect());
            fs::write(p, io::to_pretty(&list))
                .map_err(|e| Error::input(format!("{}: {e}", p.display())))?;
        }
        r.push(
            "search",
            sound,
            Payload::Search {
                candidates,
                emitted,
            },
        );
        Ok(())
    }

    fn dualize(&self, r: &mut RunReport, path: &Path, out: Option<&Path>) -> crate::Result<()> {
        let value = match self.load(path)? {
            Document::Algebra(a) => io::coalgebra_json(&dualize_algebra(&a)),
            Document::Double(d) => io::coalgebra_json(&dualize_algebra(&d.algebra)),
            Document::Coalgebra(c) => io::algebra_json(&dualize_coalgebra(&c)),
            other => {
                return Err(Error::input(format!(
                    "cannot dualize kind \"{}\"",
                    other.kind()
                )))
            }
        };
        write_out(r, out, value)
    }

    fn forms(&self, r: &mut RunReport, path: &Path) -> crate::Result<()> {
        let alg = self.algebra(path)?;
        let f = solve_invariant_forms(&alg);
        r.push(
            "nondegenerate invariant form",
            f.nondegenerate,
            Payload::Forms {
                dimension: f.basis.len(),
                determinant: f.determinant.to_string(),
                witness: f.witness,
            },
        );
        Ok(())
    }
}
