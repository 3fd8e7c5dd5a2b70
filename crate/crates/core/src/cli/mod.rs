//! Command-line front end: structure files and demos in, reports out.
//!
//! Exit codes: 0 pass or constructed, 1 checked and failed (including a
//! failed hypothesis), 2 usage or parse error.

mod file;

pub use file::{parse_json, AlgebraSection, CoalgebraSection, MatrixSection, StructureFile, SubalgebraSection};

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{comodule_subalgebra_pipeline, demo, Bundle};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, LinMap, Shape, Subspace};
use crate::galois::{
    canonical_map, check_cointegral, coinvariants_ambient, coseparable_pipeline, entwined_module_report, find_cointegral,
    kreimer_takeuchi_check, projective_pipeline, GaloisContext, GaloisVerdict, PipelineReport,
};
use crate::report::{Report, Status};
use crate::structures::{check_algebra, check_coalgebra, check_comodule_algebra, check_module_coalgebra, FinAlgebra, FinCoalgebra};
use crate::weak_entwining::{
    build_coring_ll, build_coring_rr, check_invertible, check_ll, check_rr, ACoring, InvertibleWeakEntwining, WeakEntwiningLL,
    WeakEntwiningRR,
};
use crate::weak_hopf::{check_weak_bialgebra, check_weak_hopf, WeakHopf};

#[derive(Debug, Parser)]
#[command(name = "weak-galois", version, about = "Exact checks for weak entwinings, corings and Galois extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Dump counterexample witnesses.
    #[arg(long, global = true)]
    verbose: bool,
    /// Ground field for demo structures: Q or Fp:<p>.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the laws of one kind of structure.
    Check {
        #[arg(long, value_enum)]
        what: What,
        path: String,
    },
    /// Build the coring of a weak entwining.
    Coring {
        path: String,
        #[arg(long, value_enum, default_value = "rr")]
        side: SideArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether the canonical map is bijective, by the chosen route.
    Galois {
        path: String,
        #[arg(long, value_enum, default_value = "direct")]
        route: Route,
    },
    /// Search for a cointegral of the coalgebra.
    Cointegral { path: String },
    /// Print a built-in structure file.
    Demo { name: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    Algebra,
    Coalgebra,
    WeakEntwiningRr,
    WeakEntwiningLl,
    Invertible,
    WeakBialgebra,
    WeakHopf,
    ComoduleAlgebra,
    ModuleCoalgebra,
    EntwinedModule,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Rr,
    Ll,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    Direct,
    Coseparable,
    Projective,
    KreimerTakeuchi,
    Subalgebra,
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    if s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = s.strip_prefix("Fp:").ok_or_else(|| format!("expected Q or Fp:<p>, got {s:?}"))?;
    let p: u64 = p.parse().map_err(|_| format!("bad prime {p:?}"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

/// What a command prints.
#[derive(Debug, Serialize)]
struct Output {
    command: String,
    target: String,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<Report>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    facts: BTreeMap<String, Value>,
}

impl Output {
    fn new(command: &str, target: &str) -> Self {
        Output {
            command: command.into(),
            target: target.into(),
            status: String::new(),
            error: None,
            report: None,
            facts: BTreeMap::new(),
        }
    }

    fn with_report(mut self, r: Report) -> Self {
        self.report = Some(r);
        self
    }

    fn fact(mut self, k: &str, v: Value) -> Self {
        self.facts.insert(k.into(), v);
        self
    }

    fn finish(mut self) -> (Output, i32) {
        let code = match &self.report {
            Some(r) if r.status == Status::Pass && self.error.is_none() => 0,
            None if self.error.is_none() => 0,
            _ => 1,
        };
        if self.status.is_empty() {
            self.status = match self.report.as_ref().map(|r| r.status) {
                Some(Status::Fail) => "fail".into(),
                Some(Status::NotApplicable) => "not-applicable".into(),
                _ if code == 0 => "pass".into(),
                _ => "fail".into(),
            };
        }
        (self, code)
    }
}

fn verdict_facts(o: Output, v: &GaloisVerdict) -> Output {
    o.fact("tildeCanSurjective", json!(v.tilde_can_surjective))
        .fact("canWellDefined", json!(v.can_well_defined))
        .fact("canBijective", json!(v.can_bijective))
}

fn load(path: &str, field: Option<FieldSpec>) -> Result<Bundle> {
    if let Some(name) = path.strip_prefix("demo:") {
        return demo(name, field.unwrap_or(FieldSpec::Rationals));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    parse_json(&text)?.to_bundle()
}

fn missing(section: &str) -> Error {
    Error::Parse(format!("missing section {section}"))
}

fn algebra(b: &Bundle) -> Result<&FinAlgebra> {
    b.algebra.as_ref().ok_or_else(|| missing("algebra"))
}

fn coalgebra(b: &Bundle) -> Result<&FinCoalgebra> {
    b.coalgebra.as_ref().ok_or_else(|| missing("coalgebra"))
}

fn rr(b: &Bundle) -> Result<WeakEntwiningRR> {
    let psi = b.psi_r_or_default().ok_or_else(|| missing("psiR"))?;
    WeakEntwiningRR::unchecked(algebra(b)?.clone(), coalgebra(b)?.clone(), psi)
}

fn ll(b: &Bundle) -> Result<WeakEntwiningLL> {
    let psi = b.psi_l_or_default().ok_or_else(|| missing("psiL"))?;
    WeakEntwiningLL::unchecked(algebra(b)?.clone(), coalgebra(b)?.clone(), psi)
}

fn coaction(b: &Bundle) -> Result<LinMap> {
    b.coaction_or_default().ok_or_else(|| missing("coaction"))
}

fn invertible(b: &Bundle) -> Result<InvertibleWeakEntwining> {
    b.invertible_entwining()
}

fn weak_hopf(b: &Bundle) -> Result<WeakHopf> {
    let h = b.weak_hopf()?;
    check_weak_hopf(&h).into_invalid("weak Hopf algebra")?;
    Ok(h)
}

fn check(b: &Bundle, what: What) -> Result<Report> {
    Ok(match what {
        What::Algebra => check_algebra(algebra(b)?),
        What::Coalgebra => check_coalgebra(coalgebra(b)?),
        What::WeakEntwiningRr => {
            let w = rr(b)?;
            check_rr(&w.a, &w.c, &w.psi)
        }
        What::WeakEntwiningLl => {
            let w = ll(b)?;
            check_ll(&w.a, &w.c, &w.psi)
        }
        What::Invertible => check_invertible(&rr(b)?, &ll(b)?),
        What::WeakBialgebra => check_weak_bialgebra(&b.weak_bialgebra()?),
        What::WeakHopf => check_weak_hopf(&b.weak_hopf()?),
        What::ComoduleAlgebra => check_comodule_algebra(&b.weak_bialgebra()?, algebra(b)?, &coaction(b)?),
        What::ModuleCoalgebra => {
            let act = b.action_or_default().ok_or_else(|| missing("action"))?;
            check_module_coalgebra(&b.weak_bialgebra()?, coalgebra(b)?, &act)
        }
        What::EntwinedModule => entwined_module_report(&rr(b)?, &coaction(b)?),
    })
}

fn matrix_json(m: &LinMap) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect()).collect();
    json!({ "matrix": rows })
}

fn coring_json(x: &ACoring) -> Value {
    json!({
        "dim": x.dim(),
        "embed": matrix_json(x.embed()),
        "coproduct": matrix_json(x.coproduct()),
        "counit": matrix_json(x.counit()),
        "leftAction": matrix_json(x.left_action()),
        "rightAction": matrix_json(x.right_action()),
    })
}

fn coring(b: &Bundle, side: SideArg, out: Option<&PathBuf>, o: Output) -> Result<Output> {
    let x = match side {
        SideArg::Rr => {
            let w = rr(b)?;
            check_rr(&w.a, &w.c, &w.psi).into_invalid("right-right weak entwining")?;
            build_coring_rr(&w)?
        }
        SideArg::Ll => {
            let w = ll(b)?;
            check_ll(&w.a, &w.c, &w.psi).into_invalid("left-left weak entwining")?;
            build_coring_ll(&w)?
        }
    };
    if let Some(p) = out {
        let text = serde_json::to_string_pretty(&coring_json(&x)).expect("json values serialize");
        std::fs::write(p, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
    }
    Ok(o.fact("carrierDim", json!(x.dim())).with_report(x.report().clone()))
}

fn pipeline_output(o: Output, p: PipelineReport) -> Output {
    verdict_facts(o, &p.verdict).with_report(p.report)
}

fn galois(b: &Bundle, route: Route, o: Output) -> Result<Output> {
    match route {
        Route::Direct => {
            let w = rr(b)?;
            check_rr(&w.a, &w.c, &w.psi).into_invalid("right-right weak entwining")?;
            let rho = coaction(b)?;
            let ctx = GaloisContext::new(w, rho.clone())?;
            let v = canonical_map(&ctx);
            let mut r = v.report.clone();
            let amb = coinvariants_ambient(&ctx.we.a, &rho);
            r.flag("coinvariants.ambient=grouplike", amb.is_subspace_of(&ctx.b) && ctx.b.is_subspace_of(&amb));
            Ok(verdict_facts(o, &v).with_report(r))
        }
        Route::Coseparable => Ok(pipeline_output(o, coseparable_pipeline(&invertible(b)?, &coaction(b)?)?)),
        Route::Projective => Ok(pipeline_output(o, projective_pipeline(&invertible(b)?, &coaction(b)?)?)),
        Route::KreimerTakeuchi => {
            let h = weak_hopf(b)?;
            let r = kreimer_takeuchi_check(&h, h.alg(), &coaction(b)?)?;
            let o = o.fact("canBijective", json!(r.ok("can.bijective")));
            Ok(o.with_report(r))
        }
        Route::Subalgebra => {
            let h = weak_hopf(b)?;
            let basis = b.subalgebra.as_ref().ok_or_else(|| missing("subalgebra"))?;
            let a = Subspace::from_vectors(h.field(), Shape::flat(h.dim()), basis);
            Ok(pipeline_output(o, comodule_subalgebra_pipeline(&h, &a)?))
        }
    }
}

fn cointegral(b: &Bundle, o: Output) -> Result<Output> {
    let c = coalgebra(b)?;
    match find_cointegral(c)? {
        Some(d) => {
            let mut r = check_cointegral(c, &d.delta);
            r.dim("C", c.dim());
            Ok(o.fact("delta", matrix_json(&d.delta)).with_report(r))
        }
        None => {
            let mut r = Report::new();
            r.flag("cointegral.exists", false);
            r.dim("C", c.dim());
            Ok(o.with_report(r))
        }
    }
}

/// Turns an error into output and exit code; `None` for usage errors.
fn from_error(mut o: Output, e: Error) -> (Output, i32) {
    o.error = Some(e.to_string());
    match e {
        Error::Invalid { report, .. } | Error::TheoremViolation { report, .. } => {
            o.report = Some(*report);
            o.status = "fail".into();
            (o, 1)
        }
        Error::HypothesisFailed { report, .. } => {
            o.report = Some(*report);
            o.status = "hypothesis-failed".into();
            (o, 1)
        }
        Error::Parse(_) | Error::DimensionMismatch(_) | Error::Singular => {
            o.status = "error".into();
            (o, 2)
        }
    }
}

fn render_text(o: &Output, verbose: bool, w: &mut dyn Write) -> std::io::Result<()> {
    writeln!(w, "{} {}: {}", o.command, o.target, o.status)?;
    if let Some(e) = &o.error {
        writeln!(w, "  error: {e}")?;
    }
    for (k, v) in &o.facts {
        if !v.is_object() {
            writeln!(w, "  {k} = {v}")?;
        }
    }
    if let Some(r) = &o.report {
        for c in &r.checks {
            write!(w, "  [{}] {}", if c.ok { "ok" } else { "FAIL" }, c.name)?;
            if let Some(n) = &c.note {
                write!(w, " ({n})")?;
            }
            writeln!(w)?;
            if let (true, Some(wit)) = (verbose, &c.witness) {
                writeln!(w, "      at {:?}: lhs [{}] rhs [{}]", wit.index, wit.lhs.join(", "), wit.rhs.join(", "))?;
            }
        }
        for (k, v) in &r.dims {
            writeln!(w, "  dim {k} = {v}")?;
        }
    }
    Ok(())
}

/// Runs one invocation; `args` includes the program name. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    if let Command::Demo { name } = &cli.command {
        return match demo(name, cli.field.unwrap_or(FieldSpec::Rationals)) {
            Ok(b) => {
                let text = serde_json::to_string_pretty(&StructureFile::from_bundle(&b)).expect("structure files serialize");
                let _ = writeln!(out, "{text}");
                0
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        };
    }
    let (name, path) = match &cli.command {
        Command::Check { path, .. } => ("check", path),
        Command::Coring { path, .. } => ("coring", path),
        Command::Galois { path, .. } => ("galois", path),
        Command::Cointegral { path } => ("cointegral", path),
        Command::Demo { .. } => unreachable!("handled above"),
    };
    let o = Output::new(name, path);
    let result = load(path, cli.field).and_then(|b| match &cli.command {
        Command::Check { what, .. } => Ok(Output::new(name, path).with_report(check(&b, *what)?)),
        Command::Coring { side, out, .. } => coring(&b, *side, out.as_ref(), Output::new(name, path)),
        Command::Galois { route, .. } => galois(&b, *route, Output::new(name, path)),
        Command::Cointegral { .. } => cointegral(&b, Output::new(name, path)),
        Command::Demo { .. } => unreachable!("handled above"),
    });
    let (o, code) = match result {
        Ok(o) => o.finish(),
        Err(e) => from_error(o, e),
    };
    if code == 2 {
        if let Some(e) = &o.error {
            let _ = writeln!(err, "error: {e}");
        }
    }
    let written = if cli.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&o).expect("reports serialize"))
    } else if code == 2 {
        Ok(())
    } else {
        render_text(&o, cli.verbose, out)
    };
    if written.is_err() {
        return 2;
    }
    code
}
