//! Command-line front end: evaluation, integration, verification and table
//! generation over the Stieltjes-constant library.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain/singularity error,
//! 4 verification failure.

mod checks;
mod record;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use record::{emit, fmt17, OutputFormat, Record};
use stieltjes_core::hurwitz::{stieltjes_oracle, RationalArg, StieltjesValue};
use stieltjes_core::loglog::IntegralSpec;
use stieltjes_core::rational::{gamma1_rational, gamma2_rational};
use stieltjes_core::special::digamma_rational_gauss;
use stieltjes_core::{Error, PrecisionPolicy};

const EXIT_DOMAIN: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "stieltjes",
    version,
    about = "Stieltjes constants, Hurwitz zeta derivatives and log-log integrals",
    after_help = "Environment: STIELTJES_PRECISION_PROFILE selects a precision preset \
                  (default | strict)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate gamma_k(a) by oracle summation and/or closed form.
    Eval(EvalArgs),
    /// Evaluate a log-log integral in closed form and/or by quadrature.
    Integrate(IntegrateArgs),
    /// Run named identity checks and report per-check pass/fail.
    Verify(VerifyArgs),
    /// Emit a table of gamma_k(j/m) over 1 <= j < m <= m-max.
    Table(TableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Euler-Maclaurin summation of the defining limit.
    Oracle,
    /// Rational-argument closed form (k <= 2) or quadrature for integrals.
    Closed,
    /// Both, with their difference in a delta column.
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Stieltjes indices, comma separated (0..=5).
    #[arg(long, value_delimiter = ',', required = true)]
    k: Vec<u32>,
    /// Argument: "j/m" for a rational, or a decimal literal.
    #[arg(long)]
    a: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Oracle)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// With --method both: fail (exit 4) when |delta| exceeds this.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct IntegrateArgs {
    /// Family: i_pq | i_plus | i_minus | j | i_omega | pole | i2 | zx_log.
    #[arg(long)]
    family: String,
    /// Log power (1 or 2) where the family admits it.
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Numerator index for i_pq; real index for the j family.
    #[arg(long)]
    p: Option<f64>,
    /// Denominator index for i_pq.
    #[arg(long)]
    q: Option<u32>,
    /// Denominator degree for i_plus / i_minus.
    #[arg(long)]
    n: Option<u32>,
    /// Power of x multiplying the integrand.
    #[arg(long, default_value_t = 0.0)]
    qexp: f64,
    /// Angle for i_omega, in (-pi, pi].
    #[arg(long)]
    delta: Option<f64>,
    /// Pole location (real) for the pole family.
    #[arg(long)]
    a: Option<f64>,
    /// Pole multiplicity minus one for the pole family.
    #[arg(long, default_value_t = 0)]
    order: u32,
    /// Argument for zx_log, 0 < z < 1.
    #[arg(long)]
    z: Option<f64>,
    /// closed = closed form, oracle = quadrature, both = both plus delta.
    #[arg(long, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// With --method both: fail (exit 4) when |delta| exceeds this.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check name or "all". Known: prop1 cor1 cor2 prop2 prop3 prop4 prop5
    /// i2 iomega constants.
    #[arg(long, default_value = "all")]
    check: String,
    /// Largest denominator exercised by rational-argument checks.
    #[arg(long, default_value_t = 12)]
    m_max: u32,
    /// Largest modulus exercised by sum/root-of-unity checks.
    #[arg(long, default_value_t = 10)]
    q_max: u32,
    /// Override every check's tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct TableArgs {
    /// Stieltjes indices, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    k: Vec<u32>,
    #[arg(long)]
    m_max: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Oracle)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

/// Parsed --a value: "j/m" keeps its parts, a decimal literal stays real.
enum Argument {
    Rational(RationalArg),
    Real(f64),
}

impl Argument {
    fn parse(text: &str) -> Result<Self, String> {
        if let Some((num, den)) = text.split_once('/') {
            let num: u32 = num
                .trim()
                .parse()
                .map_err(|_| format!("bad numerator in `{text}`"))?;
            let den: u32 = den
                .trim()
                .parse()
                .map_err(|_| format!("bad denominator in `{text}`"))?;
            let arg = RationalArg::new(num, den).map_err(|e| e.to_string())?;
            Ok(Argument::Rational(arg))
        } else {
            let v: f64 = text
                .trim()
                .parse()
                .map_err(|_| format!("bad real literal `{text}`"))?;
            Ok(Argument::Real(v))
        }
    }

    fn value(&self) -> f64 {
        match self {
            Argument::Rational(r) => r.as_real(),
            Argument::Real(v) => *v,
        }
    }

    /// (a_num, a_den) echo fields: rational parts, or the real over 1.
    fn echo(&self) -> (String, String) {
        match self {
            Argument::Rational(r) => (r.num().to_string(), r.den().to_string()),
            Argument::Real(v) => (fmt17(*v), "1".to_string()),
        }
    }
}

fn closed_form_gamma(k: u32, arg: &Argument) -> stieltjes_core::Result<StieltjesValue> {
    let rational = match arg {
        Argument::Rational(r) => *r,
        Argument::Real(_) => {
            return Err(Error::Domain(
                "closed forms require a rational argument j/m with j < m".into(),
            ))
        }
    };
    match k {
        0 => {
            let v = -digamma_rational_gauss(rational.num(), rational.den())?;
            Ok(StieltjesValue {
                k: 0,
                a: rational.as_real(),
                value: v,
                method: stieltjes_core::Method::ClosedForm,
                err_estimate: 0.0,
            })
        }
        1 => gamma1_rational(rational),
        2 => gamma2_rational(rational),
        other => Err(Error::Range(format!(
            "closed forms cover k in {{0,1,2}}; use the oracle for k = {other}"
        ))),
    }
}

fn gamma_record(k: u32, arg: &Argument, value: &StieltjesValue, delta: Option<f64>) -> Record {
    let (a_num, a_den) = arg.echo();
    let mut r = Record::new()
        .int("k", u64::from(k))
        .text("a_num", &a_num)
        .text("a_den", &a_den)
        .text("method", &value.method.to_string())
        .real("value", value.value)
        .real("err_estimate", value.err_estimate);
    if let Some(d) = delta {
        r = r.real("delta", d);
    }
    r
}

/// Evaluate one (k, a) pair into records; Some(delta) when both methods ran.
fn eval_one(
    k: u32,
    arg: &Argument,
    method: MethodArg,
    records: &mut Vec<Record>,
) -> stieltjes_core::Result<Option<f64>> {
    match method {
        MethodArg::Oracle => {
            let v = stieltjes_oracle(k, arg.value())?;
            records.push(gamma_record(k, arg, &v, None));
            Ok(None)
        }
        MethodArg::Closed => {
            let v = closed_form_gamma(k, arg)?;
            records.push(gamma_record(k, arg, &v, None));
            Ok(None)
        }
        MethodArg::Both => {
            let closed = closed_form_gamma(k, arg)?;
            let oracle = stieltjes_oracle(k, arg.value())?;
            let delta = closed.value - oracle.value;
            records.push(gamma_record(k, arg, &closed, Some(delta)));
            records.push(gamma_record(k, arg, &oracle, Some(delta)));
            Ok(Some(delta))
        }
    }
}

fn run_eval(args: &EvalArgs) -> Result<(), (u8, String)> {
    let arg = Argument::parse(&args.a).map_err(|e| (2, e))?;
    let mut records = Vec::new();
    let mut worst: f64 = 0.0;
    for &k in &args.k {
        let delta = eval_one(k, &arg, args.method, &mut records)
            .map_err(|e| (EXIT_DOMAIN, e.to_string()))?;
        if let Some(d) = delta {
            worst = worst.max(d.abs());
        }
    }
    emit(&records, args.format.into());
    if let (Some(tol), MethodArg::Both) = (args.tol, args.method) {
        if worst > tol {
            return Err((
                EXIT_VERIFY,
                format!("method disagreement {worst:e} exceeds tol {tol:e}"),
            ));
        }
    }
    Ok(())
}

fn integral_spec(args: &IntegrateArgs) -> Result<IntegralSpec, (u8, String)> {
    let need = |opt: Option<f64>, what: &str| {
        opt.ok_or((2u8, format!("family `{}` requires --{what}", args.family)))
    };
    let family = args.family.to_ascii_lowercase();
    match family.as_str() {
        "i_pq" => {
            let p = need(args.p, "p")?;
            if p.fract() != 0.0 || p < 1.0 {
                return Err((2, "i_pq needs a positive integer --p".into()));
            }
            let q = args
                .q
                .ok_or((2u8, "family `i_pq` requires --q".to_string()))?;
            Ok(IntegralSpec::IPq {
                k: args.k,
                p: p as u32,
                q,
            })
        }
        "i_plus" => Ok(IntegralSpec::IPlus {
            n: args.n.unwrap_or(3),
            qexp: args.qexp,
        }),
        "i_minus" => Ok(IntegralSpec::IMinus {
            n: args.n.unwrap_or(3),
            qexp: args.qexp,
        }),
        "j" => {
            let p = need(args.p, "p")?;
            Ok(IntegralSpec::J {
                p,
                qexp: args.qexp,
                power: args.k,
            })
        }
        "i_omega" => {
            let delta = need(args.delta, "delta")?;
            Ok(IntegralSpec::IOmega { delta })
        }
        "pole" => {
            let a = need(args.a, "a")?;
            Ok(IntegralSpec::Pole {
                a,
                k: args.k,
                order: args.order,
            })
        }
        "i2" => Ok(IntegralSpec::I2),
        "zx_log" => {
            let z = need(args.z, "z")?;
            Ok(IntegralSpec::ZxLog { z })
        }
        other => Err((2, format!("unknown family `{other}`"))),
    }
}

fn integral_params(spec: &IntegralSpec) -> String {
    match *spec {
        IntegralSpec::IPq { p, q, .. } => format!("p={p} q={q}"),
        IntegralSpec::IPlus { n, qexp } | IntegralSpec::IMinus { n, qexp } => {
            format!("n={n} qexp={qexp}")
        }
        IntegralSpec::J { p, qexp, .. } => format!("p={p} qexp={qexp}"),
        IntegralSpec::IOmega { delta } => format!("delta={delta}"),
        IntegralSpec::Pole { a, order, .. } => format!("a={a} order={order}"),
        IntegralSpec::I2 => String::new(),
        IntegralSpec::ZxLog { z } => format!("z={z}"),
    }
}

fn integral_record(
    args: &IntegrateArgs,
    spec: &IntegralSpec,
    route: &str,
    value: f64,
    resid: f64,
    delta: Option<f64>,
) -> Record {
    let mut r = Record::new()
        .text("family", &args.family.to_ascii_lowercase())
        .int("k", u64::from(args.k))
        .text("params", &integral_params(spec))
        .text("route", route)
        .real("value", value)
        .real("imag_residual", resid);
    if let Some(d) = delta {
        r = r.real("delta", d);
    }
    r
}

fn run_integrate(args: &IntegrateArgs) -> Result<(), (u8, String)> {
    let spec = integral_spec(args)?;
    let mut records = Vec::new();
    let mut worst: Option<f64> = None;
    match args.method {
        MethodArg::Closed => {
            let c = spec
                .closed_form()
                .map_err(|e| (EXIT_DOMAIN, e.to_string()))?;
            records.push(integral_record(
                args,
                &spec,
                &c.route.to_string(),
                c.value,
                c.imag_residual,
                None,
            ));
        }
        MethodArg::Oracle => {
            let qv = spec
                .quadrature()
                .map_err(|e| (EXIT_DOMAIN, e.to_string()))?;
            records.push(integral_record(args, &spec, "quadrature", qv, 0.0, None));
        }
        MethodArg::Both => {
            let c = spec
                .closed_form()
                .map_err(|e| (EXIT_DOMAIN, e.to_string()))?;
            let qv = spec
                .quadrature()
                .map_err(|e| (EXIT_DOMAIN, e.to_string()))?;
            let delta = c.value - qv;
            records.push(integral_record(
                args,
                &spec,
                &c.route.to_string(),
                c.value,
                c.imag_residual,
                Some(delta),
            ));
            records.push(integral_record(
                args,
                &spec,
                "quadrature",
                qv,
                0.0,
                Some(delta),
            ));
            worst = Some(delta.abs());
        }
    }
    emit(&records, args.format.into());
    if let (Some(tol), Some(w)) = (args.tol, worst) {
        if w > tol {
            return Err((
                EXIT_VERIFY,
                format!("route disagreement {w:e} exceeds tol {tol:e}"),
            ));
        }
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<(), (u8, String)> {
    let scope = checks::CheckScope {
        m_max: args.m_max,
        q_max: args.q_max,
        tol_override: args.tol,
    };
    let names: Vec<&str> = if args.check == "all" {
        checks::CHECK_NAMES.to_vec()
    } else {
        if !checks::CHECK_NAMES.contains(&args.check.as_str()) {
            return Err((
                2,
                format!(
                    "unknown check `{}`; known: {} all",
                    args.check,
                    checks::CHECK_NAMES.join(" ")
                ),
            ));
        }
        vec![args.check.as_str()]
    };
    let mut all_pass = true;
    for name in names {
        let report = checks::run_check(name, &scope).map_err(|e| (EXIT_DOMAIN, e.to_string()))?;
        all_pass &= report.pass;
        println!(
            "check {:<10} {}  max_delta = {}  tol = {}  ({})",
            report.name,
            if report.pass { "PASS" } else { "FAIL" },
            fmt17(report.max_delta),
            fmt17(report.tol),
            report.detail
        );
    }
    if all_pass {
        println!("verify: all checks passed");
        Ok(())
    } else {
        Err((EXIT_VERIFY, "one or more checks failed".into()))
    }
}

fn run_table(args: &TableArgs) -> Result<(), (u8, String)> {
    if args.m_max < 2 {
        return Err((2, "--m-max must be at least 2".into()));
    }
    let mut records = Vec::new();
    // Row order fixed by (m, j, k).
    for m in 2..=args.m_max {
        for j in 1..m {
            for &k in &args.k {
                let arg = Argument::Rational(RationalArg::new(j, m).expect("j, m >= 1"));
                eval_one(k, &arg, args.method, &mut records)
                    .map_err(|e| (EXIT_DOMAIN, e.to_string()))?;
            }
        }
    }
    emit(&records, args.format.into());
    Ok(())
}

fn main() -> ExitCode {
    // Reject a bad precision profile up front with a usage error.
    if let Err(e) = PrecisionPolicy::from_env() {
        eprintln!("stieltjes: {e}");
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(args) => run_eval(args),
        Command::Integrate(args) => run_integrate(args),
        Command::Verify(args) => run_verify(args),
        Command::Table(args) => run_table(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("stieltjes: {msg}");
            ExitCode::from(code)
        }
    }
}
