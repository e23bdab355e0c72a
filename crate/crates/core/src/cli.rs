//! The `qchl` command line.
//!
//! Every invocation writes one JSON document to the output stream. Exit codes:
//!
//! * `0`: all checks passed, or the requested object was produced;
//! * `1`: a check failed; the report carries the witness;
//! * `2`: usage, I/O or parse error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{ColorHomAlgebra, GradedLinearMap, GradedSpace, Kind};
use crate::catalog::{self, CatalogError, Params};
use crate::checks::{verify, Report, VerifyOptions};
use crate::codec::{self, CochainFile, CodecError};
use crate::cohomology::{self, Cochain, CohomologyError};
use crate::constructions::{self as cons, CentroidBracket, ConstructionError, TwistOrder};
use crate::faulkner::{self, FaulknerError};
use crate::grading::GroupElement;
use crate::linalg::RatMatrix;
use crate::representations::{adjoint_rep, check_representation, coadjoint_rep, Representation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qchl", version, about = "Exact computations with color Hom-Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify the axioms of an algebra or representation file.
    Verify(VerifyArgs),
    /// Build a new algebra from existing ones.
    #[command(subcommand)]
    Construct(Construct),
    /// Second (and optionally first) cohomology in one degree.
    Cohomology(CohomologyArgs),
    /// Built-in example algebras.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    file: String,
    #[arg(long)]
    quadratic: bool,
    #[arg(long)]
    multiplicative: bool,
    /// Check against this kind instead of the one declared in the file.
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Lie,
    Associative,
    Leibniz,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Lie => Kind::Lie,
            KindArg::Associative => Kind::Associative,
            KindArg::Leibniz => Kind::Leibniz,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// Twist by a weak self-morphism (or, with --quadratic, a symmetric automorphism).
    Twist {
        algebra: String,
        /// JSON matrix (rows of rational strings) of the map.
        #[arg(long)]
        map: String,
        #[arg(long)]
        quadratic: bool,
    },
    /// `(αⁿ∘[·,·], α^{n+1})` of a multiplicative algebra.
    Power {
        algebra: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Bracket and twist built from a centroid element.
    Centroid {
        algebra: String,
        #[arg(long)]
        theta: String,
        #[arg(long, value_enum, default_value = "first")]
        bracket: BracketArg,
        #[arg(long, value_enum, default_value = "theta-alpha")]
        order: OrderArg,
        /// Build the quadratic variant with twist θ and form B(θ·,·).
        #[arg(long)]
        quadratic: bool,
    },
    /// Commutator algebra of a Hom-associative algebra.
    Commutator { algebra: String },
    /// `𝔤 ⊗ A` for a Lie-type `𝔤` and an associative `A`.
    Tensor { lie: String, associative: String },
    /// `𝔤 ⋉ M` for a representation file.
    Semidirect { representation: String },
    /// Central extension by a scalar 2-cocycle file.
    Central { algebra: String, cocycle: String },
    /// T*-extension by a 2-cochain with values in the coadjoint module.
    Tstar { algebra: String, cocycle: String },
    /// Leibniz algebra on `M⊗M*` from a representation file.
    Faulkner { algebra: String, representation: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BracketArg {
    Original,
    First,
    Second,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    ThetaAlpha,
    AlphaTheta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Coefficients {
    Trivial,
    Coadjoint,
}

#[derive(Debug, Args)]
struct CohomologyArgs {
    algebra: String,
    #[arg(long, value_enum, default_value = "trivial")]
    coefficients: Coefficients,
    /// Comma-separated group coordinates, e.g. `0` or `1,0`; zero by default.
    #[arg(long)]
    degree: Option<String>,
    #[arg(long)]
    h1: bool,
}

#[derive(Debug, Subcommand)]
enum CatalogCmd {
    List,
    Emit {
        id: String,
        /// `name=value`; repeatable.
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        /// Emit a representation file for this module instead of the algebra.
        #[arg(long, value_enum)]
        rep: Option<RepArg>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RepArg {
    Adjoint,
    Coadjoint,
}

enum Failure {
    Usage(String),
    Check { error: String, report: Option<Report> },
}

impl From<CodecError> for Failure {
    fn from(e: CodecError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn check_failure(error: impl ToString, report: &Report) -> Failure {
    Failure::Check {
        error: error.to_string(),
        report: Some(report.clone()),
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        use ConstructionError as E;
        match &e {
            E::NotWeakMorphism(r)
            | E::NotSymmetricAutomorphism(r)
            | E::NotQuadratic(r)
            | E::NotMultiplicative(r)
            | E::NotCentroid(r)
            | E::NotBSymmetric(r)
            | E::NotHomAssociative(r)
            | E::NotRepresentation(r)
            | E::Verification(r) => check_failure(&e, r),
            E::NotInvertible | E::Precondition(_) => Failure::Check {
                error: e.to_string(),
                report: None,
            },
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<CohomologyError> for Failure {
    fn from(e: CohomologyError) -> Self {
        use CohomologyError as E;
        match &e {
            E::Construction(c) => c.clone().into(),
            E::CocycleConditionFailed(r)
            | E::NotCocycle(r)
            | E::NotSkewDerivation(r)
            | E::NotQuadratic(r)
            | E::NotMultiplicative(r)
            | E::CoadjointUndefined(r) => check_failure(&e, r),
            E::NotEven => Failure::Check {
                error: e.to_string(),
                report: None,
            },
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<FaulknerError> for Failure {
    fn from(e: FaulknerError) -> Self {
        use FaulknerError as E;
        match &e {
            E::NotQuadratic(r) | E::NotMultiplicative(r) | E::NotRepresentation(r) => {
                check_failure(&e, r)
            }
            E::NotInvolutive(_) | E::NotFaithful | E::DNotBijective { .. } => Failure::Check {
                error: e.to_string(),
                report: None,
            },
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Verification(r) => Failure::Check {
                error: "catalog instance fails its advertised checks".into(),
                report: Some(r),
            },
            CatalogError::Construction(c) => c.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Output of a successful command and its exit code.
struct Outcome {
    value: Value,
    code: i32,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome {
            value,
            code: EXIT_OK,
        }
    }

    fn report(report: &Report) -> Self {
        Outcome {
            value: report_json(report),
            code: if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            },
        }
    }
}

fn report_json(report: &Report) -> Value {
    json!({ "passed": report.passed(), "checks": report.checks })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn read(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read `{path}`: {e}")))
}

fn load_algebra(path: &str) -> Result<ColorHomAlgebra, Failure> {
    codec::parse_algebra(&read(path)?).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn load_representation(path: &str) -> Result<Representation, Failure> {
    codec::parse_representation(&read(path)?).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn load_cochain(path: &str) -> Result<CochainFile, Failure> {
    codec::parse_cochain_file(&read(path)?).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn load_matrix(path: &str, n: usize) -> Result<RatMatrix, Failure> {
    let rows: Vec<Vec<String>> = serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::Usage(format!("{path}: {}", CodecError::from(e))))?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Failure::Usage(format!("{path}: expected a {n}x{n} matrix")));
    }
    let mut m = RatMatrix::zeros(n, n);
    for (i, r) in rows.iter().enumerate() {
        for (j, s) in r.iter().enumerate() {
            let v = crate::rational::parse_rational(s)
                .map_err(|e| Failure::Usage(format!("{path}: entry [{i}][{j}]: {e}")))?;
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// A homogeneous endomorphism of `space`; its degree is read off the first
/// nonzero entry.
fn endo_map(space: &GradedSpace, m: RatMatrix) -> Result<GradedLinearMap, Failure> {
    let n = space.dim();
    let mut degree = space.bc().group().zero();
    'outer: for j in 0..n {
        for i in 0..n {
            if !num_traits::Zero::is_zero(m.get(i, j)) {
                degree = space
                    .bc()
                    .group()
                    .sub(space.degree(i), space.degree(j))
                    .expect("same group");
                break 'outer;
            }
        }
    }
    GradedLinearMap::new(space.clone(), space.clone(), degree, m)
        .map_err(|e| Failure::Check {
            error: format!("map is not homogeneous: {e}"),
            report: None,
        })
}

fn parse_degree(a: &ColorHomAlgebra, raw: Option<&str>) -> Result<GroupElement, Failure> {
    let group = a.bc().group();
    let Some(raw) = raw else {
        return Ok(group.zero());
    };
    let coords = raw
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("bad degree `{raw}`: {e}")))?;
    group
        .element(coords)
        .map_err(|e| Failure::Usage(format!("bad degree `{raw}`: {e}")))
}

fn algebra_value(a: &ColorHomAlgebra) -> Value {
    to_value(&codec::algebra_file(a))
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, Failure> {
    let text = read(&args.file)?;
    let raw: Value = serde_json::from_str(&text).map_err(CodecError::from)?;
    if raw.get("rho").is_some() {
        let r = codec::parse_representation(&text)?;
        return Ok(Outcome::report(&check_representation(&r, args.multiplicative)));
    }
    let mut a = codec::parse_algebra(&text)?;
    if let Some(k) = args.kind {
        a = a.with_kind(k.into());
    }
    let opts = VerifyOptions {
        quadratic: args.quadratic,
        multiplicative: args.multiplicative,
        commutative: false,
    };
    let report = verify(&a, opts).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(Outcome::report(&report))
}

fn cmd_construct(c: &Construct) -> Result<Outcome, Failure> {
    let out = match c {
        Construct::Twist {
            algebra,
            map,
            quadratic,
        } => {
            let a = load_algebra(algebra)?;
            let beta = endo_map(a.space(), load_matrix(map, a.dim())?)?;
            if *quadratic {
                cons::twist_quadratic(&a, &beta)?
            } else {
                cons::twist_by_weak_morphism(&a, &beta)?
            }
        }
        Construct::Power { algebra, n } => cons::power_twist(&load_algebra(algebra)?, *n)?,
        Construct::Centroid {
            algebra,
            theta,
            bracket,
            order,
            quadratic,
        } => {
            let a = load_algebra(algebra)?;
            let map = endo_map(a.space(), load_matrix(theta, a.dim())?)?;
            let theta = cons::certify_centroid(&a, map)?;
            let bracket = match bracket {
                BracketArg::Original => CentroidBracket::Original,
                BracketArg::First => CentroidBracket::First,
                BracketArg::Second => CentroidBracket::Second,
            };
            if *quadratic {
                cons::centroid_quadratic(&a, &theta, bracket)?
            } else {
                let order = match order {
                    OrderArg::ThetaAlpha => TwistOrder::ThetaAfterAlpha,
                    OrderArg::AlphaTheta => TwistOrder::AlphaAfterTheta,
                };
                cons::centroid_twist(&a, &theta, bracket, order)?
            }
        }
        Construct::Commutator { algebra } => cons::commutator_algebra(&load_algebra(algebra)?)?,
        Construct::Tensor { lie, associative } => {
            let g = load_algebra(lie)?;
            let a = load_algebra(associative)?;
            let g = catalog::regrade_into(g, a.bc()).map_err(|e| Failure::Usage(e.to_string()))?;
            cons::tensor_product_algebra(&g, &a)?
        }
        Construct::Semidirect { representation } => {
            let r = load_representation(representation)?;
            cons::semidirect_product(r.algebra(), &r)?
        }
        Construct::Central { algebra, cocycle } => {
            let a = load_algebra(algebra)?;
            let file = load_cochain(cocycle)?;
            let module = match file.module_space(&a)? {
                Some(space) => {
                    let m = space.dim();
                    Representation::trivial(a.clone(), space, RatMatrix::identity(m))
                        .map_err(|e| Failure::Usage(e.to_string()))?
                }
                None => Representation::scalar(&a),
            };
            let psi = file.into_cochain(&module)?;
            cohomology::central_extension(&a, module.module(), &psi)?
        }
        Construct::Tstar { algebra, cocycle } => {
            let a = load_algebra(algebra)?;
            let (pi, pre) = coadjoint_rep(&a);
            if !pre.passed() {
                return Err(check_failure("coadjoint representation is not defined", &pre));
            }
            let omega = load_cochain(cocycle)?.into_cochain(&pi)?;
            let (t, report) = cohomology::tstar_extension(&a, &omega)?;
            return Ok(Outcome {
                value: json!({ "algebra": algebra_value(&t), "report": report_json(&report) }),
                code: if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_CHECK_FAILED
                },
            });
        }
        Construct::Faulkner {
            algebra,
            representation,
        } => {
            let a = load_algebra(algebra)?;
            let r = load_representation(representation)?;
            let r = r
                .with_algebra(a.clone())
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let fd = faulkner::faulkner_map(&a, &r)?;
            let mut report = fd.report.clone();
            report.extend(faulkner::check_dmap_morphism(&fd));
            let mut l = faulkner::faulkner_leibniz(&fd)?;
            if fd.surjective && fd.dmap.matrix.cols() == fd.dmap.matrix.rows() {
                let (form, qreport) = faulkner::faulkner_quadratic(&fd, &l)?;
                report.extend(qreport);
                l = l.with_form(Some(form)).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            return Ok(Outcome {
                value: json!({
                    "algebra": algebra_value(&l),
                    "faithful": fd.faithful,
                    "surjective": fd.surjective,
                    "report": report_json(&report),
                }),
                code: if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_CHECK_FAILED
                },
            });
        }
    };
    Ok(Outcome::ok(algebra_value(&out)))
}

fn cmd_cohomology(args: &CohomologyArgs) -> Result<Outcome, Failure> {
    let a = load_algebra(&args.algebra)?;
    let degree = parse_degree(&a, args.degree.as_deref())?;
    let module = match args.coefficients {
        Coefficients::Trivial => Representation::scalar(&a),
        Coefficients::Coadjoint => {
            let (pi, pre) = coadjoint_rep(&a);
            if !pre.passed() {
                return Err(check_failure("coadjoint representation is not defined", &pre));
            }
            pi
        }
    };
    let res = cohomology::cohomology(&a, &module, &degree, args.h1)?;
    let reps: Vec<Value> = res
        .representatives
        .iter()
        .map(|c: &Cochain| to_value(&codec::cochain_file(c, false)))
        .collect();
    let mut value = json!({
        "dimZ2": res.dim_z2,
        "dimB2": res.dim_b2,
        "dimH2": res.dim_h2,
        "representatives": reps,
    });
    if let Some(h1) = &res.h1 {
        value["dimZ1"] = json!(h1.dim_z1);
        value["dimB1"] = json!(h1.dim_b1);
        value["dimH1"] = json!(h1.dim_h1);
    }
    Ok(Outcome::ok(value))
}

fn cmd_catalog(c: &CatalogCmd) -> Result<Outcome, Failure> {
    match c {
        CatalogCmd::List => {
            let entries: Vec<Value> = catalog::ENTRIES
                .iter()
                .map(|e| {
                    let params: serde_json::Map<String, Value> = e
                        .params
                        .iter()
                        .map(|(k, v)| (k.to_string(), json!(v)))
                        .collect();
                    json!({ "id": e.id, "description": e.description, "params": params })
                })
                .collect();
            Ok(Outcome::ok(Value::Array(entries)))
        }
        CatalogCmd::Emit { id, params, rep } => {
            let mut p = Params::new();
            for raw in params {
                let (k, v) = raw
                    .split_once('=')
                    .ok_or_else(|| Failure::Usage(format!("parameter `{raw}` is not k=v")))?;
                p.insert(k.trim().to_string(), v.trim().to_string());
            }
            let a = catalog::build(id, &p)?;
            let r = match rep {
                None => return Ok(Outcome::ok(algebra_value(&a))),
                Some(RepArg::Adjoint) => adjoint_rep(&a),
                Some(RepArg::Coadjoint) => {
                    let (pi, pre) = coadjoint_rep(&a);
                    if !pre.passed() {
                        return Err(check_failure("coadjoint representation is not defined", &pre));
                    }
                    pi
                }
            };
            Ok(Outcome::ok(to_value(&codec::representation_file(&r))))
        }
    }
}

fn write_json(out: &mut dyn Write, v: &Value) {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    let _ = out.write_all(s.as_bytes());
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    if std::env::var("QCHL_NO_VERIFY").is_ok_and(|v| v == "1") {
        crate::set_eager_verification(false);
    }
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                write_json(out, &json!({ "error": { "kind": "usage", "message": e.to_string() } }));
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Construct(c) => cmd_construct(c),
        Command::Cohomology(a) => cmd_cohomology(a),
        Command::Catalog(c) => cmd_catalog(c),
    };
    match result {
        Ok(o) => {
            write_json(out, &o.value);
            o.code
        }
        Err(Failure::Usage(message)) => {
            write_json(out, &json!({ "error": { "kind": "usage", "message": message } }));
            EXIT_USAGE
        }
        Err(Failure::Check { error, report }) => {
            let mut v = json!({ "passed": false, "error": error });
            if let Some(r) = report {
                v["checks"] = to_value(&r.checks);
            }
            write_json(out, &v);
            EXIT_CHECK_FAILED
        }
    }
}
