//! The `opcheck` command line. The binary only forwards to [`run`].
//!
//! Exit codes: 0 all checks pass, 1 some check failed, 2 unreadable or
//! rejected input, 3 a size guard or search budget was exceeded.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ins::{
    brute_force_search, build_field_model, build_ins_presentation, triviality_certificate, InsCoalgebraData,
};
use crate::linalg::{random_map, LinearMap};
use crate::operad::{
    build_arity01, build_from_algebra, build_uassoc, build_unit_operad, check_operad_axioms, coend_operad, end_operad,
    free_algebra, Algebra, AlgebraMorphism, LeftModule, TruncatedOperad,
};
use crate::presentation::{check_relations, Presentation, StructureAssignment};
use crate::report::{CheckReport, Failure};
use crate::sanity::{
    check_coalgebra, cofree_arity1, cokernel_reduction, composed_counit_check, counit_split_check,
    couniversal_test_family, point_sum, propagation_check, round_trip_iso, terminal_coalgebra, terminality_check,
    verify_couniversal, CoalgebraOverOperad,
};

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_MAX_DIM_PRODUCT: u64 = 4096;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "opcheck", version, about = "Exact checks for truncated operads and their coalgebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "OPCHECK_JOBS", default_value_t = 0)]
    pub jobs: usize,
    /// Largest dimension product a construction may reach.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM_PRODUCT)]
    pub max_dim_product: u64,
    /// Largest brute-force search space.
    #[arg(long, global = true, default_value_t = crate::ins::SEARCH_BUDGET as u64)]
    pub max_search: u64,
    /// Include per-check wall-clock times (makes reports non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build truncated operads or verify their axioms.
    #[command(subcommand)]
    Operad(OperadCmd),
    /// Verify a coalgebra over a truncated operad.
    #[command(subcommand)]
    Coalgebra(CoalgebraCmd),
    /// Evaluate the relations of a presentation on a structure.
    #[command(subcommand)]
    Presentation(PresentationCmd),
    /// Coalgebras for the invertibility presentation Ins_m.
    #[command(subcommand)]
    Ins(InsCmd),
    /// Cofree, terminal and pointed coalgebra constructions.
    #[command(subcommand)]
    Sanity(SanityCmd),
    /// Dimensions of the free algebra P ⊲ X and injectivity of its unit.
    FreeAlgebra {
        #[arg(long)]
        operad: String,
        #[arg(long)]
        x: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OperadKind {
    Unit,
    Uassoc,
    Algebra,
    Coend,
    End,
}

#[derive(Debug, Subcommand)]
pub enum OperadCmd {
    /// Print a built operad as JSON.
    Build {
        #[arg(long)]
        kind: OperadKind,
        /// Truncation arity.
        #[arg(long = "N", default_value_t = 3)]
        n: usize,
        /// Dimension of V for coend and end.
        #[arg(long)]
        d: Option<usize>,
        /// Prime field characteristic; rationals when absent.
        #[arg(long)]
        p: Option<u32>,
        /// Algebra JSON for `--kind algebra`.
        #[arg(long)]
        algebra: Option<String>,
        /// Left module JSON `{"dim", "action"}` placed in arity 0.
        #[arg(long)]
        module: Option<String>,
    },
    /// Check the operad axioms on every basis element.
    Check { input: String },
}

#[derive(Debug, Subcommand)]
pub enum CoalgebraCmd {
    Check { input: String },
}

#[derive(Debug, Subcommand)]
pub enum PresentationCmd {
    /// Evaluate every relation on a structure assignment.
    Check {
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        structure: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum InsCmd {
    /// The field-extension model of Ins_m over F_p and its dual coalgebra.
    Model {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: usize,
    },
    /// Emit a triviality certificate for candidate Ins_m-coalgebra data.
    Certify {
        #[arg(long)]
        structure: String,
        /// Also certify this many random counit tuples on the same δ.
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Enumerate all Ins_m-coalgebras of dimension d over F_p.
    Search {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PropagationExample {
    Augmentation,
    UnitInclusion,
}

#[derive(Debug, Subcommand)]
pub enum SanityCmd {
    /// Cofree coalgebra Hom(A, X): split counit and couniversal lifts.
    Cofree {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        x: usize,
    },
    /// The terminal coalgebra P(0)^∨.
    Terminal {
        #[arg(long)]
        operad: String,
    },
    /// Pointed sum of a coalgebra over the reduced part, with round trips.
    Pointsum {
        #[arg(long)]
        operad: String,
        #[arg(long)]
        reduced: String,
    },
    /// G_P X ↠ G_P̄ X ↠ X for an operad in arities 0 and 1.
    Composed {
        #[arg(long)]
        operad: String,
        #[arg(long)]
        x: usize,
    },
    /// Counit triangle along an algebra morphism.
    Propagate {
        #[arg(long, conflicts_with = "example", required_unless_present = "example")]
        morphism: Option<String>,
        #[arg(long)]
        example: Option<PropagationExample>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 2)]
        x: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub checked: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
    pub outputs: BTreeMap<String, Value>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            tool: "opcheck",
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            inputs: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            outputs: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.tool, self.version, self.command);
        for i in &self.inputs {
            out += &format!("input {} sha256:{}\n", i.name, i.sha256);
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out += &format!("{tag} {} ({} checks, {} failures)", c.name, c.checked, c.failed);
            if let Some(r) = &c.reason {
                out += &format!(": {r}");
            }
            if let Some(t) = c.timing_ms {
                out += &format!(" [{t} ms]");
            }
            out.push('\n');
            for w in &c.witness {
                out += &format!("  witness: {} {}\n", w.identity, w.witness);
            }
        }
        for n in &self.notes {
            out += &format!("{n}\n");
        }
        out += if self.passed() { "result: pass\n" } else { "result: fail\n" };
        out
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing the report to `stdout`. Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut (dyn Read + Send), stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker pool: {e}");
            return EXIT_INPUT;
        }
    };
    let mut session = Session::new(&cli.global, stdin);
    match pool.install(|| dispatch(&cli.command, &mut session)) {
        Ok(Output::Artifact(v)) => {
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&v).expect("json"));
            EXIT_PASS
        }
        Ok(Output::Report) => {
            let report = session.report;
            let text = if cli.global.json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                report.render_text()
            };
            let _ = stdout.write_all(text.as_bytes());
            if report.passed() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main_with_args(args: impl IntoIterator<Item = OsString>) -> i32 {
    let (mut stdin, stdout, stderr) = (std::io::stdin(), std::io::stdout(), std::io::stderr());
    run(args, &mut stdin, &mut stdout.lock(), &mut stderr.lock())
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeGuard { .. } | Error::Budget { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

enum Output {
    /// A constructed object printed as JSON.
    Artifact(Value),
    Report,
}

struct Session<'a> {
    opts: &'a GlobalOpts,
    stdin: &'a mut (dyn Read + Send),
    stdin_used: bool,
    report: Report,
    clock: Instant,
}

impl<'a> Session<'a> {
    fn new(opts: &'a GlobalOpts, stdin: &'a mut (dyn Read + Send)) -> Self {
        Session {
            opts,
            stdin,
            stdin_used: false,
            report: Report::new(""),
            clock: Instant::now(),
        }
    }

    fn start(&mut self, command: &str) {
        self.report.command = command.into();
        self.clock = Instant::now();
    }

    /// Reads a JSON file (`-` is stdin) and records its digest.
    fn load(&mut self, path: &str) -> Result<Value> {
        let bytes = if path == "-" {
            if self.stdin_used {
                return Err(Error::Parse("stdin can only be read once".into()));
            }
            self.stdin_used = true;
            let mut buf = Vec::new();
            self.stdin.read_to_end(&mut buf)?;
            buf
        } else {
            std::fs::read(path)?
        };
        self.report.inputs.push(InputDigest {
            name: path.into(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
        serde_json::from_slice(&bytes).map_err(|e| Error::Parse(format!("{path}: {e}")))
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.opts.seed)
    }

    fn budget(&self, what: &str, needed: u128) -> Result<()> {
        let limit = u128::from(self.opts.max_dim_product);
        if needed > limit {
            return Err(Error::SizeGuard {
                what: what.into(),
                needed,
                limit,
            });
        }
        Ok(())
    }

    fn elapsed(&mut self) -> Option<u128> {
        let t = self.opts.timing.then(|| self.clock.elapsed().as_millis());
        self.clock = Instant::now();
        t
    }

    fn push(&mut self, name: impl Into<String>, r: CheckReport) {
        let timing_ms = self.elapsed();
        self.report.checks.push(CheckResult {
            name: name.into(),
            status: if r.passed() { Status::Pass } else { Status::Fail },
            checked: r.checked,
            failed: r.failed,
            witness: r.failures,
            reason: None,
            timing_ms,
        });
    }

    fn assert(&mut self, name: impl Into<String>, ok: bool, witness: Value) {
        let name = name.into();
        let mut r = CheckReport::new();
        r.record(ok, || name.clone(), || witness);
        self.push(name, r);
    }

    fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        let timing_ms = self.elapsed();
        self.report.checks.push(CheckResult {
            name: name.into(),
            status: Status::Skip,
            checked: 0,
            failed: 0,
            witness: Vec::new(),
            reason: Some(reason.into()),
            timing_ms,
        });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.report.notes.push(s.into());
    }

    fn output(&mut self, key: &str, v: Value) {
        self.report.outputs.insert(key.into(), v);
    }
}

fn field_arg(p: Option<u32>) -> Result<FieldSpec> {
    p.map_or(Ok(FieldSpec::Rationals), FieldSpec::prime)
}

fn pow(base: usize, exp: usize) -> u128 {
    (base as u128).saturating_pow(exp as u32)
}

fn load_operad(s: &mut Session<'_>, path: &str) -> Result<TruncatedOperad> {
    let v = s.load(path)?;
    TruncatedOperad::from_json(v)
}

fn load_module(s: &mut Session<'_>, path: &str, a: &Algebra) -> Result<LeftModule> {
    let v = s.load(path)?;
    let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("module needs \"dim\"".into()))?;
    let action: LinearMap =
        serde_json::from_value(v.get("action").cloned().ok_or_else(|| Error::Parse("module needs \"action\"".into()))?)?;
    LeftModule::new(a, dim as usize, action)
}

fn max_operad_dim(p: &TruncatedOperad) -> usize {
    p.dims().iter().copied().max().unwrap_or(0)
}

fn dispatch(cmd: &Command, s: &mut Session<'_>) -> Result<Output> {
    match cmd {
        Command::Operad(OperadCmd::Build {
            kind,
            n,
            d,
            p,
            algebra,
            module,
        }) => {
            s.start("operad build");
            let field = field_arg(*p)?;
            let need_d = || d.ok_or_else(|| Error::Parse("--d is required for coend and end".into()));
            let operad = match kind {
                OperadKind::Unit => build_unit_operad(field, *n)?,
                OperadKind::Uassoc => {
                    s.budget("(N)! for uassoc", (1..=*n).map(|k| k as u128).product())?;
                    build_uassoc(field, *n)?
                }
                OperadKind::Coend | OperadKind::End => {
                    let d = need_d()?;
                    s.budget("d^(N+1)", pow(d, n + 1))?;
                    if *kind == OperadKind::Coend {
                        coend_operad(d, *n, field)?
                    } else {
                        end_operad(d, *n, field)?
                    }
                }
                OperadKind::Algebra => {
                    let path = algebra.as_deref().ok_or_else(|| Error::Parse("--algebra is required".into()))?;
                    let a = Algebra::from_json(s.load(path)?)?;
                    s.budget("dim(A)^2", pow(a.dim(), 2))?;
                    match module {
                        Some(m) => {
                            let w = load_module(s, m, &a)?;
                            build_arity01(&a, Some(&w))?
                        }
                        None => build_from_algebra(&a)?,
                    }
                }
            };
            Ok(Output::Artifact(operad.to_json()))
        }
        Command::Operad(OperadCmd::Check { input }) => {
            s.start("operad check");
            let p = load_operad(s, input)?;
            s.budget("max dim P(n)^2", pow(max_operad_dim(&p), 2))?;
            let r = check_operad_axioms(&p)?;
            s.push("operad axioms", r);
            s.note(format!("N = {}, dims = {:?}", p.max_arity(), p.dims()));
            Ok(Output::Report)
        }
        Command::Coalgebra(CoalgebraCmd::Check { input }) => {
            s.start("coalgebra check");
            let v = s.load(input)?;
            let c = CoalgebraOverOperad::from_json(v)?;
            s.budget("dim(V)^N", pow(c.dim(), c.operad().max_arity()))?;
            s.push("coalgebra axioms", check_coalgebra(&c)?);
            Ok(Output::Report)
        }
        Command::Presentation(PresentationCmd::Check { presentation, structure }) => {
            s.start("presentation check");
            let pres = Presentation::from_json(s.load(presentation)?)?;
            let st: StructureAssignment = serde_json::from_value(s.load(structure)?)?;
            st.validate_against(&pres)?;
            let inputs = pres.relations.iter().map(|r| r.inputs()).collect::<Result<Vec<_>>>()?;
            s.budget("dim(V)^inputs", pow(st.dim, inputs.into_iter().max().unwrap_or(0)))?;
            let r = check_relations(&pres, &st)?;
            s.push(format!("{} relations", pres.relations.len()), r);
            Ok(Output::Report)
        }
        Command::Ins(cmd) => ins(cmd, s),
        Command::Sanity(cmd) => sanity(cmd, s),
        Command::FreeAlgebra { operad, x } => {
            s.start("free-algebra");
            let p = load_operad(s, operad)?;
            let worst = (0..=p.max_arity()).map(|n| p.dim(n) as u128 * pow(*x, n)).max().unwrap_or(0);
            s.budget("dim P(n) · x^n", worst)?;
            let r = free_algebra(&p, *x)?;
            s.assert("unit X → P ⊲ X injective", r.unit_injective, json!({"x": x}));
            s.note(format!("arity dimensions {:?}, total {}", r.dims, r.total));
            s.output("dims", json!(r.dims));
            s.output("total", json!(r.total));
            Ok(Output::Report)
        }
    }
}

fn ins(cmd: &InsCmd, s: &mut Session<'_>) -> Result<Output> {
    match cmd {
        InsCmd::Model { p, m } => {
            s.start("ins model");
            s.budget("p^(m+1)", pow(*p as usize, m + 1))?;
            let model = build_field_model(*p, *m)?;
            let lambdas = model.all_lambdas();
            let pres = build_ins_presentation(model.field(), *m, &lambdas)?;
            let dual = model.dual_coalgebra(&lambdas)?;
            let assignments = [model.assignment(&lambdas)?, dual.assignment()?];
            let reports = assignments
                .par_iter()
                .map(|a| check_relations(&pres.presentation, a))
                .collect::<Result<Vec<_>>>()?;
            let [alg, coalg]: [CheckReport; 2] = reports.try_into().expect("two reports");
            s.push(format!("F_{}^{} model relations ({} λ)", p, m + 1, lambdas.len()), alg);
            s.push("dual coalgebra relations", coalg);
            s.note(format!("modulus coefficients {:?} (constant term first)", model.modulus));
            s.output("model", model.to_json());
            s.output("dual", dual.to_json());
            Ok(Output::Report)
        }
        InsCmd::Certify { structure, samples } => {
            s.start("ins certify");
            let data = InsCoalgebraData::from_json(s.load(structure)?)?;
            s.budget("dim(V)^3", pow(data.dim, 3))?;
            if data.dim == 0 || data.dim > data.m() {
                s.skip("triviality certificate", format!("needs 1 ≤ dim V ≤ m, got dim {} and m {}", data.dim, data.m()));
            } else {
                let cert = triviality_certificate(&data)?;
                let ok = cert.replay(&data)?;
                s.assert("triviality certificate replays", ok, cert.to_json());
                s.output("certificate", cert.to_json());
                if *samples > 0 {
                    let mut rng = s.rng();
                    let mut r = CheckReport::new();
                    for k in 0..*samples {
                        let eps = random_map(data.field, data.m() + 1, data.dim, &mut rng).rows();
                        let sample = InsCoalgebraData::new(data.field, data.dim, data.delta.clone(), eps, None)?;
                        let cert = triviality_certificate(&sample)?;
                        let ok = cert.replay(&sample)?;
                        r.record(ok, || format!("sample {k}"), || cert.to_json());
                    }
                    s.push(format!("certificates on {samples} random counit tuples"), r);
                }
            }
            if let Some(inv) = &data.inv {
                let lambdas: Vec<_> = inv.iter().map(|(l, _)| l.clone()).collect();
                let pres = build_ins_presentation(data.field, data.m(), &lambdas)?;
                s.push("Ins relations on the given data", check_relations(&pres.presentation, &data.assignment()?)?);
            }
            Ok(Output::Report)
        }
        InsCmd::Search { p, d, m } => {
            s.start("ins search");
            let out = brute_force_search(*p, *d, *m, u128::from(s.opts.max_search))?;
            let mut r = CheckReport::new();
            for (k, st) in out.structures.iter().enumerate() {
                let pres = build_ins_presentation(st.field, st.m(), &st.lambdas())?;
                let rel = check_relations(&pres.presentation, &st.assignment()?)?;
                r.record(rel.passed(), || format!("structure {k} satisfies the Ins relations"), || st.to_json());
            }
            s.push("search results replay", r);
            s.note(format!(
                "searched {} candidates, {} coassociative coproducts",
                out.space, out.coassociative
            ));
            s.note(format!("{} valid structures", out.structures.len()));
            s.output("structures", Value::Array(out.structures.iter().map(InsCoalgebraData::to_json).collect()));
            Ok(Output::Report)
        }
    }
}

fn sanity(cmd: &SanityCmd, s: &mut Session<'_>) -> Result<Output> {
    match cmd {
        SanityCmd::Cofree { algebra, x } => {
            s.start("sanity cofree");
            let a = Algebra::from_json(s.load(algebra)?)?;
            s.budget("(dim A · x)^2", pow(a.dim() * x, 2))?;
            let cf = cofree_arity1(&a, *x)?;
            s.push("carrier is a coalgebra", check_coalgebra(&cf.carrier)?);
            let split = counit_split_check(&cf.counit)?;
            s.assert(
                "counit split epi",
                split.surjective && split.replayed,
                json!({"counit": cf.counit}),
            );
            if let Some(sec) = &split.section {
                let id = if sec.is_identity() { ", section = id" } else { "" };
                s.note(format!("counit split{id}"));
                s.output("section", json!(sec));
            }
            let tests = couniversal_test_family(&cf, &mut s.rng())?;
            let (r, _) = verify_couniversal(&cf, &tests)?;
            s.push(format!("couniversal lifts ({} tests)", tests.len()), r);
            s.output("counit", json!(cf.counit));
            Ok(Output::Report)
        }
        SanityCmd::Terminal { operad } => {
            s.start("sanity terminal");
            let p = load_operad(s, operad)?;
            s.budget("dim P(0)^N", pow(p.dim(0), p.max_arity()))?;
            let t = terminal_coalgebra(&p)?;
            let tests = vec![t.clone(), t.direct_sum(&t)?, CoalgebraOverOperad::zero(&p)];
            s.push("terminal coalgebra and uniqueness of morphisms into it", terminality_check(&p, &tests)?);
            s.output("terminal", t.to_json());
            Ok(Output::Report)
        }
        SanityCmd::Pointsum { operad, reduced } => {
            s.start("sanity pointsum");
            let p = load_operad(s, operad)?;
            let vbar = CoalgebraOverOperad::from_json(s.load(reduced)?)?;
            s.budget("(dim V̄ + dim P(0))^N", pow(vbar.dim() + p.dim(0), p.max_arity()))?;
            let vp = point_sum(&vbar, &p)?;
            s.push("pointed sum is a pointed coalgebra", vp.check()?);
            let back = cokernel_reduction(&vp)?;
            s.assert("cokernel of the pointed sum returns V̄", back == vbar, json!({"cokernel": back.to_json()}));
            let (_, _, iso) = round_trip_iso(&vp)?;
            s.push("pointed sum of the cokernel is isomorphic to the input", iso);
            s.output("pointed", json!({"base": vp.base.to_json(), "pointing": vp.pointing}));
            Ok(Output::Report)
        }
        SanityCmd::Composed { operad, x } => {
            s.start("sanity composed");
            let p = load_operad(s, operad)?;
            s.budget("(dim P(1) · x + dim P(0))^2", pow(p.dim(1) * x + p.dim(0), 2))?;
            let r = composed_counit_check(&p, *x)?;
            s.push("composed counit factorization", r.checks);
            s.note(format!(
                "G_P X has dimension {}, G_P̄ X dimension {}, X dimension {}",
                r.total.base.dim(),
                r.first.cod(),
                x
            ));
            s.output("composite", json!(r.composite));
            Ok(Output::Report)
        }
        SanityCmd::Propagate { morphism, example, p, x } => {
            s.start("sanity propagate");
            let phi = match (morphism, example) {
                (Some(path), _) => AlgebraMorphism::from_json(s.load(path)?)?,
                (None, Some(PropagationExample::Augmentation)) => AlgebraMorphism::augmentation_s2(field_arg(*p)?),
                (None, Some(PropagationExample::UnitInclusion)) => AlgebraMorphism::unit_inclusion_dual(field_arg(*p)?),
                (None, None) => return Err(Error::Parse("give --morphism or --example".into())),
            };
            s.budget("(dim A′ · x)^2", pow(phi.target.dim() * x, 2))?;
            let r = propagation_check(&phi, *x)?;
            s.push("propagation triangle", r.checks);
            s.note(format!("composite epi: {}, counit_A epi: {}", r.composite_epi, r.second_epi));
            s.output("restriction", json!(r.restriction));
            Ok(Output::Report)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("opcheck").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn search_reports_no_structures() {
        let (code, out, _) = call(&["ins", "search", "--p", "2", "--d", "1", "--m", "1"], "");
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("0 valid structures"), "{out}");
    }

    #[test]
    fn build_pipes_into_check() {
        let (code, built, _) = call(&["operad", "build", "--kind", "uassoc", "--N", "3"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["operad", "check", "-"], &built);
        assert_eq!(code, EXIT_PASS, "{out}");
        assert!(out.contains("PASS operad axioms"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["operad", "check", "-"], "{not json").0, EXIT_INPUT);
        assert_eq!(call(&["bogus"], "").0, EXIT_INPUT);
        let big = ["operad", "build", "--kind", "coend", "--d", "4", "--N", "6"];
        assert_eq!(call(&big, "").0, EXIT_BUDGET);
        assert_eq!(call(&["ins", "search", "--p", "3", "--d", "3", "--m", "1"], "").0, EXIT_BUDGET);
    }

    #[test]
    fn json_report_is_stable_across_jobs() {
        let args = ["--json", "sanity", "propagate", "--example", "augmentation", "--p", "2"];
        let (c1, a, _) = call(&args, "");
        let mut with_jobs = args.to_vec();
        with_jobs.extend(["--jobs", "3"]);
        let (c2, b, _) = call(&with_jobs, "");
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["tool"], "opcheck");
        assert_eq!(v["checks"][0]["status"], "pass");
    }
}
