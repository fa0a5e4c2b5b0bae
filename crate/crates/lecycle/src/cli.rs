//! Command-line front end: parsing, dispatch, deterministic JSON/text
//! output, exit codes.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cycles::{
    existence_check, le_numbers, polar_curve_report, LeAnalysis, MultiplicityCheck, ShearPolicy,
};
use crate::error::{Error, Result};
use crate::homology::HomologyProfile;
use crate::ideal::{Ideal, Limits};
use crate::oracle::{stabilized_local_multiplicity, StabilizedMultiplicity};
use crate::parse::parse_polynomial;
use crate::poly::{PolyRing, Polynomial, ShearMatrix};
use crate::topology::{
    le_iomdine_predict, milnor_fiber_report, milnor_number, restriction_predict,
    sebastiani_thom_milnor,
};

#[derive(Debug, Parser)]
#[command(
    name = "lecycle",
    version,
    about = "Le numbers, polar numbers, Milnor numbers, and Milnor-fiber topology of polynomial hypersurface singularities at the origin"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Options shared by every subcommand. The variable order on the command
/// line is the coordinate order: the first listed variable is z0, the
/// slicing variable.
#[derive(Debug, Args)]
pub struct Common {
    /// Comma-separated variable names, first = z0.
    #[arg(long, value_delimiter = ',', required = true)]
    pub vars: Vec<String>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for the coordinate-shear policy.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Recompute every local multiplicity through the truncation oracle and
    /// fail on any mismatch.
    #[arg(long)]
    pub verify: bool,

    /// Cap on basis-reduction steps per operation.
    #[arg(long = "max-steps")]
    pub max_steps: Option<u64>,

    /// Cap on the total degree of intermediate polynomials.
    #[arg(long = "max-degree")]
    pub max_degree: Option<u32>,
}

impl Common {
    fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(ms) = self.max_steps {
            limits.max_steps = ms;
        }
        if let Some(md) = self.max_degree {
            limits.max_degree = md;
        }
        limits
    }

    fn ring(&self) -> Result<PolyRing> {
        PolyRing::new(self.vars.clone())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Milnor number of an isolated singularity at the origin.
    Milnor {
        #[command(flatten)]
        common: Common,
        poly: String,
    },
    /// Le numbers and polar numbers at the origin.
    Le {
        #[command(flatten)]
        common: Common,
        poly: String,
    },
    /// Euler characteristic of the Milnor fiber via the Le chain complex.
    Euler {
        #[command(flatten)]
        common: Common,
        poly: String,
    },
    /// Betti bounds and connectivity of the Milnor fiber.
    Betti {
        #[command(flatten)]
        common: Common,
        poly: String,
    },
    /// Sebastiani-Thom join of two isolated singularities in disjoint
    /// variables.
    Join {
        #[command(flatten)]
        common: Common,
        /// Variables of the second polynomial.
        #[arg(long = "g-vars", value_delimiter = ',', required = true)]
        g_vars: Vec<String>,
        poly_f: String,
        poly_g: String,
    },
    /// Predicted Le numbers of f + z0^j.
    Iomdine {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        j: u64,
        poly: String,
    },
    /// Predicted Le numbers of the restriction to V(z0).
    Restrict {
        #[command(flatten)]
        common: Common,
        poly: String,
    },
    /// Existence and genericity diagnostics in the given coordinates.
    Check {
        #[command(flatten)]
        common: Common,
        poly: String,
    },
    /// Truncation-oracle local multiplicity of an ideal.
    OracleDim {
        #[command(flatten)]
        common: Common,
        /// Largest truncation degree scanned for stabilization.
        #[arg(long = "max-bound", default_value_t = 24)]
        max_bound: u32,
        /// Ideal generators.
        gens: Vec<String>,
    },
}

/// Runs an invocation. Returns (exit code, stdout, stderr); stdout is
/// byte-deterministic for a fixed invocation, timing goes to stderr.
pub fn execute<I, S>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version through the "error" path too.
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 { (0, rendered, String::new()) } else { (2, String::new(), rendered) };
        }
    };
    let start = std::time::Instant::now();
    match run(&cli.command) {
        Ok(doc) => {
            let timing = json!({ "timing_ms": start.elapsed().as_millis() as u64 });
            (0, doc, format!("{timing}\n"))
        }
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}

struct Rendered {
    command: &'static str,
    input: Value,
    variables: Vec<String>,
    shear: Option<(ShearMatrix, u64)>,
    result: Value,
    warnings: Vec<String>,
    text: String,
}

fn run(command: &Command) -> Result<String> {
    let (format, rendered) = match command {
        Command::Milnor { common, poly } => (common.format, run_milnor(common, poly)?),
        Command::Le { common, poly } => (common.format, run_le(common, poly)?),
        Command::Euler { common, poly } => (common.format, run_report(common, poly, "euler")?),
        Command::Betti { common, poly } => (common.format, run_report(common, poly, "betti")?),
        Command::Join { common, g_vars, poly_f, poly_g } => {
            (common.format, run_join(common, g_vars, poly_f, poly_g)?)
        }
        Command::Iomdine { common, j, poly } => (common.format, run_iomdine(common, *j, poly)?),
        Command::Restrict { common, poly } => (common.format, run_restrict(common, poly)?),
        Command::Check { common, poly } => (common.format, run_check(common, poly)?),
        Command::OracleDim { common, max_bound, gens } => {
            (common.format, run_oracle_dim(common, *max_bound, gens)?)
        }
    };
    Ok(match format {
        Format::Json => {
            let doc = json!({
                "command": rendered.command,
                "input": rendered.input,
                "variables": rendered.variables,
                "shear": rendered.shear.as_ref().map(shear_json),
                "result": rendered.result,
                "warnings": rendered.warnings,
                "version": env!("CARGO_PKG_VERSION"),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        Format::Text => rendered.text,
    })
}

fn shear_json((shear, seed): &(ShearMatrix, u64)) -> Value {
    json!({
        "matrix": shear.rows(),
        "seed": seed,
        "identity": shear.is_identity(),
    })
}

fn shear_text(shear: &ShearMatrix) -> String {
    if shear.is_identity() {
        "identity".to_string()
    } else {
        let rows: Vec<String> = shear
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("[{}] (seed state {})", rows.join(", "), shear.seed().unwrap_or(0))
    }
}

/// Re-runs every recorded multiplicity through the truncation oracle.
fn verify_checks(checks: &[MultiplicityCheck]) -> Result<()> {
    for check in checks {
        let bound = (check.value as u32).saturating_add(8).max(6);
        match stabilized_local_multiplicity(&check.ideal, bound) {
            StabilizedMultiplicity::Finite(v) if v == check.value => {}
            StabilizedMultiplicity::Finite(v) => {
                return Err(Error::InternalInconsistency(format!(
                    "oracle mismatch for {}: engine {} vs oracle {v}",
                    check.label, check.value
                )));
            }
            StabilizedMultiplicity::NotStabilized => {
                return Err(Error::InternalInconsistency(format!(
                    "oracle did not stabilize for {} by N = {bound}",
                    check.label
                )));
            }
        }
    }
    Ok(())
}

fn parse_input(common: &Common, poly: &str) -> Result<(PolyRing, Polynomial)> {
    let ring = common.ring()?;
    let f = parse_polynomial(poly, &ring)?;
    Ok((ring, f))
}

fn run_milnor(common: &Common, poly: &str) -> Result<Rendered> {
    let (_ring, f) = parse_input(common, poly)?;
    let limits = common.limits();
    let mu = milnor_number(&f, &limits)?;
    if common.verify {
        let cd = crate::cycles::critical_data(&f, &limits)?;
        verify_checks(&[MultiplicityCheck {
            label: "jacobian".into(),
            ideal: cd.jacobian().clone(),
            value: mu,
        }])?;
    }
    let text = format!("f = {f}\nmu = {mu}\n");
    Ok(Rendered {
        command: "milnor",
        input: json!(f.to_string()),
        variables: common.vars.clone(),
        shear: None,
        result: json!({ "milnor_number": mu }),
        warnings: Vec::new(),
        text,
    })
}

fn le_payload(analysis: &LeAnalysis) -> Value {
    let r = &analysis.result;
    json!({
        "s": r.s,
        "n": r.n,
        "lambda": r.lambda,
        "gamma": r.gamma,
        "existence": r.existence,
    })
}

fn le_text_table(analysis: &LeAnalysis) -> String {
    let r = &analysis.result;
    let mut out = String::new();
    out.push_str(&format!("s = dim_0 critical locus = {}\n", r.s));
    out.push_str(&format!("shear: {}\n", shear_text(&r.shear)));
    if r.s >= 0 {
        out.push_str("k    lambda^k    gamma^k\n");
        for k in (0..=r.s as usize).rev() {
            let gamma = if k == 0 { "-".to_string() } else { r.gamma[k - 1].to_string() };
            out.push_str(&format!("{:<4} {:<11} {}\n", k, r.lambda[k], gamma));
        }
    }
    for w in &r.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

fn run_le(common: &Common, poly: &str) -> Result<Rendered> {
    let (_ring, f) = parse_input(common, poly)?;
    let limits = common.limits();
    let analysis = le_numbers(&f, &ShearPolicy::seeded(common.seed), &limits)?;
    if common.verify {
        verify_checks(&analysis.checks)?;
    }
    let text = format!("f = {f}\n{}", le_text_table(&analysis));
    Ok(Rendered {
        command: "le",
        input: json!(f.to_string()),
        variables: common.vars.clone(),
        shear: Some((analysis.result.shear.clone(), analysis.result.seed)),
        result: le_payload(&analysis),
        warnings: analysis.result.warnings.clone(),
        text,
    })
}

fn run_report(common: &Common, poly: &str, which: &'static str) -> Result<Rendered> {
    let (ring, f) = parse_input(common, poly)?;
    let limits = common.limits();
    let analysis = le_numbers(&f, &ShearPolicy::seeded(common.seed), &limits)?;
    let mut warnings = analysis.result.warnings.clone();
    if common.verify {
        verify_checks(&analysis.checks)?;
    }
    if analysis.result.s < 0 {
        let text = format!(
            "f = {f}\nthe origin is not a critical point: the Milnor fiber is contractible (chi = 1)\n"
        );
        return Ok(Rendered {
            command: which,
            input: json!(f.to_string()),
            variables: common.vars.clone(),
            shear: Some((analysis.result.shear.clone(), analysis.result.seed)),
            result: json!({ "s": -1, "euler_characteristic": 1, "connectivity": Value::Null }),
            warnings,
            text,
        });
    }

    // Attaching bound (Γ^1 · V(f))_0 when z0 is a Thom slice in the chosen
    // coordinates.
    let attaching = match polar_curve_report(&analysis.critical, &limits) {
        Ok(report) => {
            if common.verify {
                verify_checks(&report.checks)?;
            }
            Some(report.with_f)
        }
        Err(Error::ImproperIntersection(msg)) => {
            warnings.push(format!("attaching bound unavailable: {msg}"));
            None
        }
        Err(other) => return Err(other),
    };
    let n = ring.nvars() - 1;
    let report = milnor_fiber_report(&analysis.result, n, attaching)?;

    let result = json!({
        "s": report.s,
        "n": report.n,
        "lambda": analysis.result.lambda,
        "gamma": analysis.result.gamma,
        "chain_ranks_top_down": report.chain_ranks,
        "euler_characteristic": report.euler_characteristic,
        "betti_bounds": report.betti_bounds.iter().map(|b| json!({
            "cohomology_degree": b.degree,
            "bound": b.bound,
        })).collect::<Vec<_>>(),
        "connectivity": report.connectivity,
        "attaching_bound": report.attaching_bound,
        "top_bound_note": report.top_bound_note,
    });

    let mut text = format!("f = {f}\n{}", le_text_table(&analysis));
    text.push_str(&format!("euler characteristic = {}\n", report.euler_characteristic));
    text.push_str(&format!("fiber is {}-connected\n", report.connectivity));
    if which == "betti" {
        for b in &report.betti_bounds {
            text.push_str(&format!("rank H~^{} <= {}\n", b.degree, b.bound));
        }
        if let Some(a) = report.attaching_bound {
            text.push_str(&format!("attaching bound: b_{n} <= {a}\n"));
        }
        text.push_str(&format!("note: {}\n", report.top_bound_note));
    }
    Ok(Rendered {
        command: which,
        input: json!(f.to_string()),
        variables: common.vars.clone(),
        shear: Some((analysis.result.shear.clone(), analysis.result.seed)),
        result,
        warnings,
        text,
    })
}

fn run_join(common: &Common, g_vars: &[String], poly_f: &str, poly_g: &str) -> Result<Rendered> {
    let limits = common.limits();
    let ring_f = common.ring()?;
    let ring_g = PolyRing::new(g_vars.to_vec())?;
    for v in ring_f.vars() {
        if ring_g.vars().contains(v) {
            return Err(Error::InvalidInput(format!(
                "variable `{v}` appears in both factors; the join needs disjoint variables"
            )));
        }
    }
    let f = parse_polynomial(poly_f, &ring_f)?;
    let g = parse_polynomial(poly_g, &ring_g)?;
    let mu_f = milnor_number(&f, &limits)?;
    let mu_g = milnor_number(&g, &limits)?;
    let n_f = ring_f.nvars() - 1;
    let n_g = ring_g.nvars() - 1;
    let (degree, rank) = sebastiani_thom_milnor(mu_f, n_f, mu_g, n_g);
    let profile = if rank == 0 {
        HomologyProfile::zero()
    } else {
        HomologyProfile::sphere_bouquet(degree as i64, rank)
    };
    let result = json!({
        "mu_f": mu_f,
        "mu_g": mu_g,
        "n_f": n_f,
        "n_g": n_g,
        "degree": degree,
        "rank": rank,
        "g_variables": g_vars,
        "profile": profile_json(&profile),
    });
    let text = format!(
        "f = {f}\ng = {g}\nmu(f) = {mu_f}, mu(g) = {mu_g}\nfiber of f + g: {} (rank {rank} in degree {degree})\n",
        profile
    );
    Ok(Rendered {
        command: "join",
        input: json!({ "f": f.to_string(), "g": g.to_string() }),
        variables: common.vars.clone(),
        shear: None,
        result,
        warnings: Vec::new(),
        text,
    })
}

fn profile_json(profile: &HomologyProfile) -> Value {
    Value::Array(
        profile
            .iter()
            .map(|(d, g)| {
                json!({
                    "degree": d,
                    "rank": g.rank(),
                    "torsion": g.torsion(),
                })
            })
            .collect(),
    )
}

fn run_iomdine(common: &Common, j: u64, poly: &str) -> Result<Rendered> {
    let (_ring, f) = parse_input(common, poly)?;
    let limits = common.limits();
    let analysis = le_numbers(&f, &ShearPolicy::seeded(common.seed), &limits)?;
    if common.verify {
        verify_checks(&analysis.checks)?;
    }
    let predicted = le_iomdine_predict(&analysis.result, j)?;
    let gamma1 = analysis.result.gamma_at(1);
    let bound = if gamma1 == 0 {
        Value::Null
    } else {
        // 1 + lambda0/gamma1, exact.
        let num = gamma1 + analysis.result.lambda[0];
        if num % gamma1 == 0 {
            json!((num / gamma1).to_string())
        } else {
            json!(format!("{num}/{gamma1}"))
        }
    };
    let result = json!({
        "j": j,
        "base": { "s": analysis.result.s, "lambda": analysis.result.lambda, "gamma": analysis.result.gamma },
        "hypothesis_bound": bound,
        "predicted": { "s": predicted.s, "lambda": predicted.lambda },
    });
    let text = format!(
        "f = {f}\nbase lambda = {:?}\npredicted for f + z0^{j}: s = {}, lambda = {:?}\n",
        analysis.result.lambda, predicted.s, predicted.lambda
    );
    Ok(Rendered {
        command: "iomdine",
        input: json!(f.to_string()),
        variables: common.vars.clone(),
        shear: Some((analysis.result.shear.clone(), analysis.result.seed)),
        result,
        warnings: analysis.result.warnings.clone(),
        text,
    })
}

fn run_restrict(common: &Common, poly: &str) -> Result<Rendered> {
    let (_ring, f) = parse_input(common, poly)?;
    let limits = common.limits();
    let analysis = le_numbers(&f, &ShearPolicy::seeded(common.seed), &limits)?;
    if common.verify {
        verify_checks(&analysis.checks)?;
    }
    let predicted = restriction_predict(&analysis.result)?;
    let result = json!({
        "base": { "s": analysis.result.s, "lambda": analysis.result.lambda, "gamma": analysis.result.gamma },
        "predicted": { "s": predicted.s, "lambda": predicted.lambda },
    });
    let text = format!(
        "f = {f}\nbase lambda = {:?}\npredicted for f|V(z0): s = {}, lambda = {:?}\n",
        analysis.result.lambda, predicted.s, predicted.lambda
    );
    Ok(Rendered {
        command: "restrict",
        input: json!(f.to_string()),
        variables: common.vars.clone(),
        shear: Some((analysis.result.shear.clone(), analysis.result.seed)),
        result,
        warnings: analysis.result.warnings.clone(),
        text,
    })
}

fn run_check(common: &Common, poly: &str) -> Result<Rendered> {
    let (_ring, f) = parse_input(common, poly)?;
    let limits = common.limits();
    let cd = crate::cycles::critical_data(&f, &limits)?;
    let report = existence_check(&cd, &limits)?;
    let mut warnings = report.warnings.clone();
    let teissier = match polar_curve_report(&cd, &limits) {
        Ok(t) => {
            if common.verify {
                verify_checks(&t.checks)?;
            }
            Some(t)
        }
        Err(Error::ImproperIntersection(msg)) => {
            warnings.push(format!("polar-curve slice identity unavailable: {msg}"));
            None
        }
        Err(other) => return Err(other),
    };
    let result = json!({
        "s": cd.s(),
        "levels": report.levels.iter().map(|l| json!({
            "level": l.level,
            "slice_ok": l.slice_ok,
            "total_ok": l.total_ok,
            "polar_dim": l.polar_dim,
            "polar_dim_ok": l.polar_dim_ok,
        })).collect::<Vec<_>>(),
        "all_ok": report.all_ok(),
        "teissier": teissier.as_ref().map(|t| json!({
            "with_f": t.with_f,
            "with_slice": t.with_slice,
            "with_partial": t.with_partial,
            "additive": t.additive,
            "strict": t.strict,
        })),
    });
    let mut text = format!("f = {f}\ns = {}\nexistence in these coordinates: {}\n", cd.s(), report.all_ok());
    for l in &report.levels {
        text.push_str(&format!(
            "level {}: slice_ok={} total_ok={} polar_dim={} (ok={})\n",
            l.level, l.slice_ok, l.total_ok, l.polar_dim, l.polar_dim_ok
        ));
    }
    if let Some(t) = &teissier {
        text.push_str(&format!(
            "polar curve: (G1.V(f))_0 = {}, (G1.V(z0))_0 = {}, (G1.V(df/dz0))_0 = {}, additive = {}\n",
            t.with_f, t.with_slice, t.with_partial, t.additive
        ));
    }
    for w in &warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    Ok(Rendered {
        command: "check",
        input: json!(f.to_string()),
        variables: common.vars.clone(),
        shear: None,
        result,
        warnings,
        text,
    })
}

fn run_oracle_dim(common: &Common, max_bound: u32, gens: &[String]) -> Result<Rendered> {
    if gens.is_empty() {
        return Err(Error::InvalidInput("oracle-dim needs at least one generator".into()));
    }
    let ring = common.ring()?;
    let polys: Vec<Polynomial> = gens
        .iter()
        .map(|g| parse_polynomial(g, &ring))
        .collect::<Result<_>>()?;
    let ideal = Ideal::new(ring, polys.clone())?;
    let outcome = stabilized_local_multiplicity(&ideal, max_bound.max(3));
    let echo: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
    let (result, text) = match outcome {
        StabilizedMultiplicity::Finite(v) => (
            json!({ "stabilized": v, "max_bound": max_bound }),
            format!("ideal = <{}>\nstabilized local multiplicity = {v}\n", echo.join(", ")),
        ),
        StabilizedMultiplicity::NotStabilized => (
            json!({ "stabilized": "NOT-STABILIZED", "max_bound": max_bound }),
            format!(
                "ideal = <{}>\nNOT-STABILIZED by N = {max_bound} (positive-dimensional or bound too small)\n",
                echo.join(", ")
            ),
        ),
    };
    Ok(Rendered {
        command: "oracle-dim",
        input: json!(echo),
        variables: common.vars.clone(),
        shear: None,
        result,
        warnings: Vec::new(),
        text,
    })
}
