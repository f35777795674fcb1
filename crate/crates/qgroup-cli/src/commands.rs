//! Argument parsing and command dispatch.

use std::collections::BTreeMap;
use std::fmt;

use clap::{Parser, Subcommand, ValueEnum};
use qgroup::action::{Coactions, PlaneAction};
use qgroup::diffops::DiffOps;
use qgroup::error::Error;
use qgroup::gauge::{check_curvature_is_multiplication, curvature, decompose_connection_space, hermitian_constraints, Connection};
use qgroup::invariant::{invariant_metric, Inertia, PlaneProduct};
use qgroup::repcat::{check_quotient_semisimple, check_radical_ideal, decompose_named, radical, radical_of_module, BlockModel, Catalog, DecompositionReport};
use qgroup::rmatrix::{explicit_n3, UniversalR};
use qgroup::hopf::BasisStar;
use qgroup::tensor::{BasisAlgebra, BasisHopf};
use qgroup::wz::WzCoaction;
use qgroup::PlaneElement;
use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, Context, Element};
use crate::expr::ParseError;
use crate::output::{CommandResult, Format, Status};

#[derive(Debug, Parser)]
#[command(name = "qgroup", about = "Exact computations with finite quantum groups at odd roots of unity")]
pub struct Cli {
    /// Order of the root of unity (odd, at least 3).
    #[arg(long = "N", global = true, default_value_t = 3)]
    pub n: u32,
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of two elements, in normal form.
    Mul {
        #[arg(value_parser = parse_algebra)]
        algebra: Algebra,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Normal form of an element.
    Normalize {
        #[arg(value_parser = parse_algebra)]
        algebra: Algebra,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run a family of identities.
    Check {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Indecomposable summands of a module.
    Decompose {
        #[command(subcommand)]
        target: DecomposeTarget,
    },
    /// Jacobson radical of H and the semisimple quotient.
    Radical,
    /// Quantum dimension of a catalog module.
    Qdim { label: String },
    /// Invariant scalar product on the plane and invariant metrics on the projective modules.
    ScalarProduct,
    /// Curvature of the connection given by a one-form.
    Curvature {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Cohomology of the differential complex.
    Cohomology,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hopf,
    ModuleAlgebra,
    Stars,
    Wz,
    Diffops,
    Rmatrix,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::ModuleAlgebra => "module-algebra",
            Suite::Stars => "stars",
            Suite::Wz => "wz",
            Suite::Diffops => "diffops",
            Suite::Rmatrix => "rmatrix",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum DecomposeTarget {
    /// The plane under the left action.
    #[command(name = "M")]
    M,
    /// One-forms under the induced action.
    #[command(name = "omega1")]
    Omega1,
    /// Tensor product of two catalog modules.
    #[command(name = "tensor")]
    Tensor { left: String, right: String },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse { input: String, error: ParseError },
    Library(Error),
}

impl CliError {
    /// 1 when a computation detected a failed identity, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(Error::CheckFailed(_)) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Parse { input, error } => write!(f, "{error} in '{input}'"),
            CliError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::InvalidInput(m) => CliError::Usage(m),
            e => CliError::Library(e),
        }
    }
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match run(&cli.command, cli.n) {
        Ok(r) => {
            let stderr = match r.status {
                Status::Pass => String::new(),
                Status::Fail => format!("{}: one or more checks failed\n", r.command),
            };
            Outcome { code: r.status.exit_code(), stdout: r.render(cli.format), stderr }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

pub fn run(cmd: &Command, n: u32) -> Result<CommandResult, CliError> {
    let ctx = Context::new(n)?;
    let mut params = Map::new();
    params.insert("N".into(), json!(n));
    match cmd {
        Command::Mul { algebra, left, right } => {
            params.insert("algebra".into(), json!(algebra.name()));
            params.insert("left".into(), json!(left));
            params.insert("right".into(), json!(right));
            let a = parse_in(&ctx, *algebra, left)?;
            let b = parse_in(&ctx, *algebra, right)?;
            let p = ctx.mul(&a, &b).expect("operands share an algebra");
            Ok(CommandResult::new("mul", params, json!({ "result": p.to_json() })))
        }
        Command::Normalize { algebra, expr } => {
            params.insert("algebra".into(), json!(algebra.name()));
            params.insert("expr".into(), json!(expr));
            let e = parse_in(&ctx, *algebra, expr)?;
            Ok(CommandResult::new("normalize", params, json!({ "result": e.to_json() })))
        }
        Command::Check { suite } => {
            params.insert("suite".into(), json!(suite.name()));
            let (checks, extra) = run_suite(&ctx, *suite)?;
            Ok(checks_result("check", params, checks, extra))
        }
        Command::Decompose { target } => decompose_command(&ctx, target, params),
        Command::Radical => radical_command(&ctx, params),
        Command::Qdim { label } => {
            params.insert("label".into(), json!(label));
            let cat = Catalog::new(&ctx.pair.h);
            let m = find_label(&cat, label)?;
            let payload = json!({
                "label": m.label().unwrap_or_default(),
                "dim": m.dim(),
                "qdim": m.qdim().to_string(),
            });
            Ok(CommandResult::new("qdim", params, payload))
        }
        Command::ScalarProduct => scalar_product_command(&ctx, params),
        Command::Curvature { expr } => {
            params.insert("expr".into(), json!(expr));
            let Element::Wz(phi) = parse_in(&ctx, Algebra::Wz, expr)? else { unreachable!("parsed as a form") };
            let conn = Connection::new(phi)?;
            let rho = curvature(&ctx.wz, &conn)?;
            let hermitian = hermitian_constraints(&ctx.wz);
            let coords = ctx.wz.to_vector(conn.phi());
            let d = ctx.plane.dim();
            let checks = vec![outcome("nabla^2 = rho", check_curvature_is_multiplication(&ctx.wz, &conn))];
            let mut extra = Map::new();
            extra.insert("connection".into(), Element::Wz(conn.phi().clone()).to_json());
            extra.insert("curvature".into(), Element::Wz(rho.rho().clone()).to_json());
            extra.insert("flat".into(), json!(rho.is_zero()));
            extra.insert("hermitian".into(), json!(hermitian.satisfied_by(&coords[d..3 * d])));
            Ok(checks_result("curvature", params, checks, extra))
        }
        Command::Cohomology => {
            let (h0, h1, h2) = ctx.wz.cohomology();
            let (n0, n1, n2) = ctx.wz.dims();
            let checks = vec![outcome("d^2 = 0", ctx.wz.check_d_squared())];
            let mut extra = Map::new();
            extra.insert("dims".into(), json!([n0, n1, n2]));
            extra.insert("betti".into(), json!([h0, h1, h2]));
            extra.insert("nontrivial".into(), json!(h0 > 1 || h1 > 0 || h2 > 0));
            Ok(checks_result("cohomology", params, checks, extra))
        }
    }
}

fn parse_in(ctx: &Context, algebra: Algebra, text: &str) -> Result<Element, CliError> {
    ctx.parse(algebra, text).map_err(|error| CliError::Parse { input: text.into(), error })
}

/// Catalog labels compared without underscores and case, so `3irr` names `3_irr`.
fn find_label<'a>(cat: &'a Catalog, label: &str) -> Result<&'a qgroup::repcat::Representation, CliError> {
    let key = |s: &str| s.replace('_', "").to_lowercase();
    let want = key(label);
    let found = cat.labels().into_iter().find(|l| key(l) == want);
    match found {
        Some(l) => Ok(cat.get(&l).expect("label from the catalog")),
        None => Err(CliError::Usage(format!("unknown module '{label}' (known: {})", cat.labels().join(", ")))),
    }
}

struct CheckOutcome {
    name: String,
    error: Option<String>,
}

fn outcome(name: &str, r: qgroup::error::Result<()>) -> CheckOutcome {
    CheckOutcome { name: name.into(), error: r.err().map(|e| e.to_string()) }
}

fn flag(name: &str, holds: bool, why: &str) -> CheckOutcome {
    CheckOutcome { name: name.into(), error: (!holds).then(|| why.to_string()) }
}

fn checks_result(command: &str, params: Map<String, Value>, checks: Vec<CheckOutcome>, mut extra: Map<String, Value>) -> CommandResult {
    let passed = checks.iter().filter(|c| c.error.is_none()).count();
    let total = checks.len();
    let list: Vec<Value> = checks
        .into_iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("name".into(), json!(c.name));
            m.insert("status".into(), json!(if c.error.is_none() { "pass" } else { "fail" }));
            if let Some(e) = c.error {
                m.insert("message".into(), json!(e));
            }
            Value::Object(m)
        })
        .collect();
    extra.insert("checks".into(), Value::Array(list));
    extra.insert("passed".into(), json!(passed));
    extra.insert("total".into(), json!(total));
    let r = CommandResult::new(command, params, Value::Object(extra));
    if passed == total {
        r
    } else {
        r.failed()
    }
}

fn counts(report: &DecompositionReport) -> Value {
    let mut m: BTreeMap<String, usize> = BTreeMap::new();
    for l in report.labels() {
        *m.entry(l).or_default() += 1;
    }
    json!(m)
}

fn inertia_json(i: &Inertia) -> Value {
    json!({ "positive": i.positive, "negative": i.negative, "zero": i.zero })
}

fn run_suite(ctx: &Context, suite: Suite) -> Result<(Vec<CheckOutcome>, Map<String, Value>), CliError> {
    let h = &ctx.pair.h;
    let f = &ctx.pair.f;
    let mut extra = Map::new();
    let checks = match suite {
        Suite::Hopf => {
            let mut v = vec![
                outcome("H relations", h.check_relations()),
                outcome("H Hopf axioms", h.check_hopf_axioms()),
                outcome("H antipode square", h.check_antipode_square()),
                outcome("F relations", f.check_relations()),
                outcome("F Hopf axioms", f.check_hopf_axioms()),
                outcome("pairing antipode", ctx.pair.check_antipode_duality()),
            ];
            let hg = [h.k(), h.xp(), h.xm()];
            let fg = [f.a(), f.b(), f.c(), f.d()];
            let mut dual = Ok(());
            'outer: for x in &hg {
                for y in &hg {
                    for u in &fg {
                        for w in &fg {
                            dual = ctx.pair.check_duality(x, y, u, w);
                            if dual.is_err() {
                                break 'outer;
                            }
                        }
                    }
                }
            }
            v.push(outcome("pairing on generators", dual));
            let rank = ctx.pair.pairing_rank();
            v.push(flag("pairing nondegenerate", rank == h.dim(), "pairing matrix is singular"));
            extra.insert("dim".into(), json!(h.dim()));
            v
        }
        Suite::ModuleAlgebra => {
            let coactions = Coactions::new(&ctx.pair);
            let action = PlaneAction::new(&ctx.pair);
            vec![
                outcome("plane generator matrices", ctx.plane.check_generator_matrices()),
                outcome("coaction counit", coactions.check_counit()),
                outcome("coaction coassociativity", coactions.check_coassociativity()),
                outcome("comodule algebra", coactions.check_comodule_algebra()),
                outcome("action relations", action.check_relations()),
                outcome("module algebra", action.check_module_algebra(&coactions)),
            ]
        }
        Suite::Stars => {
            let coactions = Coactions::new(&ctx.pair);
            let action = PlaneAction::new(&ctx.pair);
            let wzc = WzCoaction::new(&ctx.wz, &ctx.pair);
            let tw = h.check_twisted_star();
            vec![
                outcome("plane star", ctx.plane.check_star()),
                outcome("H star", h.check_star()),
                outcome("F star", f.check_star()),
                outcome("F star preserves relations", f.check_star_preserves_ideal()),
                outcome("pairing star", ctx.pair.check_star_duality()),
                flag("twisted star involutive", tw.involutive, "not an involution"),
                flag("twisted star antimultiplicative", tw.antimultiplicative, "not antimultiplicative"),
                flag("twisted star twisted law", tw.twisted_law, "Delta * != (* x *) Delta^op"),
                flag("twisted star fails untwisted law", !tw.untwisted_law, "untwisted law unexpectedly holds"),
                outcome("coaction star covariance", coactions.check_star_covariance()),
                outcome("action star covariance", action.check_star_covariance()),
                outcome("form star", ctx.wz.check_star()),
                outcome("d commutes with star", ctx.wz.check_d_star()),
                outcome("form coaction star covariance", wzc.check_star_covariance()),
            ]
        }
        Suite::Wz => {
            let action = PlaneAction::new(&ctx.pair);
            let wzc = WzCoaction::new(&ctx.wz, &ctx.pair);
            let (n0, n1, n2) = ctx.wz.dims();
            let (h0, h1, h2) = ctx.wz.cohomology();
            extra.insert("dims".into(), json!([n0, n1, n2]));
            extra.insert("betti".into(), json!([h0, h1, h2]));
            vec![
                outcome("relations", ctx.wz.check_relations()),
                outcome("associativity", ctx.wz.check_associativity()),
                outcome("d^2 = 0", ctx.wz.check_d_squared()),
                outcome("graded Leibniz", ctx.wz.check_leibniz()),
                outcome("d commutes with star", ctx.wz.check_d_star()),
                outcome("star", ctx.wz.check_star()),
                outcome("action commutes with d", ctx.wz.check_action_commutes_with_d(&ctx.wz.h_action(&action))),
                outcome("coaction preserves relations", wzc.check_relations_preserved()),
                outcome("coaction star covariance", wzc.check_star_covariance()),
            ]
        }
        Suite::Diffops => {
            let ops = DiffOps::new(&ctx.wz);
            let action = PlaneAction::new(&ctx.pair);
            let mut v = vec![
                outcome("sigma", ops.check_sigma(&ctx.wz)),
                outcome("roundtrip", ops.check_roundtrip(&ctx.wz)),
                outcome("twisted Leibniz", ops.check_twisted_leibniz()),
                outcome("derivative relations", ops.check_partial_relations()),
                outcome("nilpotency", ops.check_nilpotent()),
            ];
            for r in ops.compare_general_invariant_ops(&action) {
                v.push(flag(&format!("invariant {}", r.name), r.holds, "differs from the action matrix"));
            }
            let fixed = ops.compare_invariant_ops(&action);
            if ctx.n() == 3 {
                for r in fixed {
                    v.push(flag(&format!("N=3 form {}", r.name), r.holds, "differs from the action matrix"));
                }
            } else {
                let m: Map<String, Value> = fixed.into_iter().map(|r| (r.name, json!(r.holds))).collect();
                extra.insert("n3_forms".into(), Value::Object(m));
            }
            v
        }
        Suite::Rmatrix => {
            let r = UniversalR::new(h)?;
            let (l, rr) = r.counit_contractions(h);
            let mut v = vec![
                outcome("R R^-1 = 1", r.check_inverse(h)),
                flag("(eps x id) R = 1", l == h.one(), "contraction is not 1"),
                flag("(id x eps) R = 1", rr == h.one(), "contraction is not 1"),
                outcome("Delta^op = R Delta R^-1", r.check_almost_cocommutative(h)),
                outcome("coproduct identities", r.check_coproduct_identities(h)),
                outcome("Yang-Baxter", r.check_ybe(h)),
                flag("R21 != R^-1", r.triangularity_witness(h).is_some(), "R is triangular"),
            ];
            if ctx.n() == 3 {
                let (rk, rx) = explicit_n3(&ctx.field, h)?;
                v.push(flag("explicit coefficients", r.r_k == rk && r.r_x == rx, "coefficients differ from the closed form"));
            }
            v
        }
    };
    Ok((checks, extra))
}

fn decompose_command(ctx: &Context, target: &DecomposeTarget, mut params: Map<String, Value>) -> Result<CommandResult, CliError> {
    match target {
        DecomposeTarget::M => {
            params.insert("module".into(), json!("M"));
            let action = PlaneAction::new(&ctx.pair);
            let summands = action.decompose()?;
            let list: Vec<Value> = summands
                .iter()
                .map(|s| {
                    let monomials: Vec<String> = s.monomials.iter().map(|&(r, t)| Element::Plane(PlaneElement::monomial(&ctx.field, r, t)).to_string()).collect();
                    json!({
                        "label": s.label,
                        "degree": s.degree,
                        "dim": s.monomials.len(),
                        "irreducible": s.irreducible,
                        "submodule_dims": s.submodule_dims,
                        "monomials": monomials,
                    })
                })
                .collect();
            let checks = vec![outcome("direct sum of submodules", action.check_decomposition(&summands))];
            let mut extra = Map::new();
            extra.insert("summands".into(), Value::Array(list));
            Ok(checks_result("decompose", params, checks, extra))
        }
        DecomposeTarget::Omega1 => {
            params.insert("module".into(), json!("omega1"));
            let (rep, report) = decompose_connection_space(&ctx.wz, &ctx.pair)?;
            let payload = json!({ "dim": rep.dim(), "summands": counts(&report), "labels": report.labels() });
            Ok(CommandResult::new("decompose", params, payload))
        }
        DecomposeTarget::Tensor { left, right } => {
            params.insert("module".into(), json!("tensor"));
            params.insert("left".into(), json!(left));
            params.insert("right".into(), json!(right));
            let cat = Catalog::new(&ctx.pair.h);
            let a = find_label(&cat, left)?;
            let b = find_label(&cat, right)?;
            let v = a.tensor(b);
            let report = decompose_named(&v, &cat.modules())?;
            report.verify(&v)?;
            let payload = json!({
                "left": a.label().unwrap_or_default(),
                "right": b.label().unwrap_or_default(),
                "dim": v.dim(),
                "summands": counts(&report),
            });
            Ok(CommandResult::new("decompose", params, payload))
        }
    }
}

fn radical_command(ctx: &Context, params: Map<String, Value>) -> Result<CommandResult, CliError> {
    let h = &ctx.pair.h;
    let rad = radical(h)?;
    let model = BlockModel::new(ctx.n() as usize);
    let checks = vec![
        outcome("two-sided ideal", check_radical_ideal(h, &rad.radical)),
        outcome("semisimple quotient", check_quotient_semisimple(h, &rad.radical)),
        outcome("block model", model.check_against(h, &rad, &Catalog::new(h))),
    ];
    let mut extra = Map::new();
    extra.insert("dim".into(), json!(rad.dim()));
    extra.insert("block_dims".into(), json!(rad.block_dims));
    extra.insert("model_radical_dim".into(), json!(model.radical_dim()));
    extra.insert("model_block_dims".into(), json!(model.semisimple_dims()));
    Ok(checks_result("radical", params, checks, extra))
}

fn scalar_product_command(ctx: &Context, params: Map<String, Value>) -> Result<CommandResult, CliError> {
    let n = ctx.n() as usize;
    let pp = PlaneProduct::new(&ctx.pair)?;
    let inertia = pp.form.inertia()?;
    let top = pp.monomial_product((0, 0), (n - 1, n - 1));
    // y^(N-1) rather than y^2: the two agree at N = 3 and only this one lies in the support for larger N.
    let shifted = pp.monomial_product((1, 0), (n - 2, n - 1));
    let mut checks = vec![
        flag("unique up to scale", pp.solution_dim == 1, "solution space is not one-dimensional"),
        flag("(x, x^(N-2) y^(N-1)) = (1, x^(N-1) y^(N-1))", top == shifted, "values differ"),
        outcome("support", pp.check_support()),
        outcome("star representation", pp.check_star_rep()),
        outcome("H invariance", pp.check_hopf_invariance()),
        outcome("coaction invariance", pp.check_coaction_invariance()),
        outcome("dual star representation", pp.check_dual_star_rep()),
    ];
    let h = &ctx.pair.h;
    let cat = Catalog::new(h);
    let simples: Vec<_> = (1..n).map(|k| cat.simple(k).clone()).collect();
    let mut modules = Vec::new();
    for k in 1..n {
        let pim = cat.pim(k);
        let label = pim.label().unwrap_or_default().to_string();
        let m = invariant_metric(h, pim)?;
        let rad = radical_of_module(pim, &simples);
        let restricted = m.form.restrict(rad.basis());
        checks.push(flag(&format!("{label} metric nondegenerate"), m.rank == pim.dim(), "metric is degenerate"));
        checks.push(flag(&format!("{label} metric indefinite"), m.inertia.is_indefinite(), "metric is definite"));
        checks.push(flag(&format!("{label} radical degenerate"), restricted.is_degenerate(), "restriction is nondegenerate"));
        modules.push(json!({
            "label": label,
            "dim": pim.dim(),
            "solutions": m.solutions.len(),
            "rank": m.rank,
            "inertia": inertia_json(&m.inertia),
            "radical_dim": rad.dim(),
            "radical_rank": restricted.rank(),
        }));
    }
    let mut extra = Map::new();
    extra.insert("solution_dim".into(), json!(pp.solution_dim));
    extra.insert("h_solution_dim".into(), json!(pp.h_solution_dim));
    extra.insert("top_value".into(), json!(top.to_string()));
    extra.insert("inertia".into(), inertia_json(&inertia));
    extra.insert("pims".into(), Value::Array(modules));
    Ok(checks_result("scalar-product", params, checks, extra))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_line(line: &str) -> Outcome {
        run_args(std::iter::once("qgroup").chain(line.split_whitespace()))
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_line("qdim 2").code, 0);
        assert_eq!(run_line("qdim 7").code, 2);
        assert_eq!(run_line("normalize plane x^").code, 2);
        assert_eq!(run_line("normalize plane x --N 4").code, 2);
        assert_eq!(run_line("curvature x").code, 2);
        assert_eq!(run_line("frobnicate").code, 2);
    }

    #[test]
    fn failed_checks_exit_one() {
        let checks = vec![outcome("holds", Ok(())), flag("broken", false, "does not hold")];
        let r = checks_result("check", Map::new(), checks, Map::new());
        assert_eq!(r.status.exit_code(), 1);
        assert_eq!(r.payload["passed"], 1);
        assert_eq!(r.payload["checks"][1]["message"], "does not hold");
    }

    #[test]
    fn text_format() {
        let o = run_line("qdim 3irr --format text");
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("qdim: 0"), "{}", o.stdout);
    }
}
