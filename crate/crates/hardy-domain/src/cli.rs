//! Command-line surface. The binary is a thin wrapper around [`run`];
//! everything here returns a process exit code instead of calling `exit`
//! so the dispatch stays testable.

use clap::{Args, Parser, Subcommand};

use crate::construct;
use crate::error::Result;
use crate::funcrep::parse;
use crate::funcrep::piecewise::PiecewiseFn;
use crate::hardy;
use crate::lorentz::{self, ConcavePhi, ConditionReport};
use crate::numeric::format_g;
use crate::rearrange;
use crate::spaces::{self, SpaceDescriptor, Verdict};
use crate::vectmeasure::{self, BorelSet, SetGenerator};
use crate::verify::{self, Status, VerifyConfig};

#[derive(Parser)]
#[command(name = "hardy-domain", version, about = "Hardy operator, rearrangements and space norms on the half line", max_term_width = 100)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GlobalOpts {
    /// Tolerance for quadrature and verification (overrides config and
    /// the HARDY_DOMAIN_TOL environment variable).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Grid size for pointwise checks and plot data.
    #[arg(long, global = true)]
    grid: Option<usize>,
    /// TOML config file with optional `tol`, `grid` and `seed` keys.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a function expression at a point.
    Eval { r#fn: String, x: f64 },
    /// Print the Hardy transform Sf of a function expression.
    Transform { r#fn: String },
    /// Print the decreasing rearrangement of a function expression.
    Rearrange { r#fn: String },
    /// Norm of a function in a space ("L1", "Lp:2", "Lpq:2,1", "L1w",
    /// "Lambda:sqrt", "L1+Linf", "Linf").
    Norm { space: String, r#fn: String },
    /// Membership verdict for a function in a space, its optimal domain
    /// (--domain) or the largest rearrangement-invariant part (--gamma).
    Member {
        space: String,
        r#fn: String,
        #[arg(long, conflicts_with = "domain")]
        gamma: bool,
        #[arg(long)]
        domain: bool,
    },
    /// Tail integral theta_phi(y) = int_y^inf phi'(t)/t dt.
    Theta { phi: String, y: f64 },
    /// Weight-condition reports for a concave phi ("sqrt", "min1t",
    /// "pow:1/3", or an expression).
    Conditions { phi: String },
    /// Identify the optimal domain of Lambda_phi when the conditions hold.
    Domain { phi: String },
    /// Norm of the indicator measure of a set ("[1,2)+[3,4)") in a space.
    Measure { space: String, set: String },
    /// Strong-additivity probe along a disjoint block generator
    /// ("dyadic", "unit", "geometric") up to K blocks.
    Probe { space: String, generator: String, k: u32 },
    /// Build a counterexample function family.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Run the verification suite.
    Verify {
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        /// Restrict to one check id (a01..a12).
        #[arg(long)]
        filter: Option<String>,
    },
    /// Write a two-column CSV of one check's data.
    PlotData {
        check: String,
        #[arg(long)]
        out: std::path::PathBuf,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// (1-t)^alpha on (0,1), with its closed-form transform for
    /// alpha = -1/p.
    Falpha { alpha: f64 },
    /// The pair (g, f) with f a translate of g: equimeasurable, f in the
    /// optimal domain of L1+Linf but S f* outside the space.
    L1linf,
    /// Doubling construction: a function in the optimal domain of X that
    /// is not in L1+Linf.
    Noesri {
        #[arg(default_value = "Lp:2")]
        space: String,
        #[arg(default_value_t = 10)]
        k: usize,
    },
    /// t^(-1/p)(1+|log t|)^(-1): in L(p,q) but not in L(p,1).
    Lpqwitness { p: f64, q: f64 },
}

#[derive(Debug, Default, serde::Deserialize)]
struct FileConfig {
    tol: Option<f64>,
    grid: Option<usize>,
    seed: Option<u64>,
}

fn resolve_config(g: &GlobalOpts) -> Result<VerifyConfig> {
    let mut cfg = VerifyConfig::default();
    if let Ok(v) = std::env::var("HARDY_DOMAIN_TOL") {
        cfg.tol = v
            .parse()
            .map_err(|_| crate::error::Error::domain(format!("bad HARDY_DOMAIN_TOL: {v}")))?;
    }
    if let Some(path) = &g.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| crate::error::Error::domain(format!("config {}: {e}", path.display())))?;
        let file: FileConfig = toml::from_str(&text)
            .map_err(|e| crate::error::Error::domain(format!("config {}: {e}", path.display())))?;
        if let Some(t) = file.tol {
            cfg.tol = t;
        }
        if let Some(n) = file.grid {
            cfg.grid = n;
        }
        if let Some(s) = file.seed {
            cfg.seed = s;
        }
    }
    // Flags win over config file and environment.
    if let Some(t) = g.tol {
        cfg.tol = t;
    }
    if let Some(n) = g.grid {
        cfg.grid = n;
    }
    Ok(cfg)
}

/// Parse `argv` and run; returns the process exit code
/// (0 = all pass, 1 = some check failed, 2 = usage or runtime error,
/// 3 = inconclusive results only).
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version as "errors" with exit code 0.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match resolve_config(&cli.global) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match dispatch(cli.cmd, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn g12(x: f64) -> String {
    format_g(x, 12)
}

fn print_fn(f: &PiecewiseFn) {
    println!("{}", parse::pretty(f));
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::In { norm } => format!("In (norm = {})", g12(*norm)),
        Verdict::NotIn { evidence } => format!("NotIn ({evidence})"),
        Verdict::Inconclusive { evidence } => format!("Inconclusive ({evidence})"),
    }
}

fn condition_lines(tag: &str, r: &ConditionReport) {
    let mut line = format!(
        "{tag}: {:?}, best constant {} at t = {}",
        r.holds,
        g12(r.best_constant),
        g12(r.witness)
    );
    if let Some(p) = r.projected_bound {
        line.push_str(&format!(", projected bound {}", g12(p)));
    }
    println!("{line}");
    if !r.detail.is_empty() {
        println!("  {}", r.detail);
    }
}

fn dispatch(cmd: Cmd, cfg: &VerifyConfig) -> Result<i32> {
    match cmd {
        Cmd::Eval { r#fn, x } => {
            let f = parse::parse(&r#fn)?;
            println!("{}", g12(f.eval(x)));
        }
        Cmd::Transform { r#fn } => {
            let f = parse::parse(&r#fn)?;
            print_fn(&hardy::hardy(&f)?);
        }
        Cmd::Rearrange { r#fn } => {
            let f = parse::parse(&r#fn)?;
            print_fn(&rearrange::rearrangement(&f)?);
        }
        Cmd::Norm { space, r#fn } => {
            let x: SpaceDescriptor = space.parse()?;
            let f = parse::parse(&r#fn)?;
            println!("{}", g12(spaces::norm(&x, &f)?));
        }
        Cmd::Member {
            space,
            r#fn,
            gamma,
            domain,
        } => {
            let x: SpaceDescriptor = space.parse()?;
            let f = parse::parse(&r#fn)?;
            let v = if gamma {
                spaces::gamma_member(&x, &f)
            } else if domain {
                spaces::domain_member(&x, &f)
            } else {
                spaces::member(&x, &f)
            };
            println!("{}", verdict_line(&v));
        }
        Cmd::Theta { phi, y } => {
            let phi = ConcavePhi::parse(&phi)?;
            println!("{}", g12(phi.theta(y)));
        }
        Cmd::Conditions { phi } => {
            let phi = ConcavePhi::parse(&phi)?;
            condition_lines("t*theta(t) <= C*phi(t)", &lorentz::check_phi_constant(&phi));
            condition_lines("phi(t) <= C*t*theta(t)", &lorentz::check_theta_condition(&phi));
        }
        Cmd::Domain { phi } => {
            let phi = ConcavePhi::parse(&phi)?;
            let d = lorentz::identify_domain(&phi);
            condition_lines("t*theta(t) <= C*phi(t)", &d.thetax);
            condition_lines("phi(t) <= C*t*theta(t)", &d.theta_condition);
            match &d.identified_weight {
                Some(w) => println!("optimal domain of Lambda_phi = L1({w})"),
                None => println!("optimal domain not identified (a condition fails)"),
            }
        }
        Cmd::Measure { space, set } => {
            let x: SpaceDescriptor = space.parse()?;
            let a = BorelSet::parse(&set)?;
            let r = vectmeasure::nu_norm(&x, &a)?;
            println!("{}", g12(r.norm));
        }
        Cmd::Probe { space, generator, k } => {
            let x: SpaceDescriptor = space.parse()?;
            let gen = SetGenerator::parse(&generator)?;
            let probe = vectmeasure::strong_additivity_probe(&x, gen, k)?;
            for (i, t) in probe.tail_norms.iter().enumerate() {
                println!("{} {}", i + 1, g12(*t));
            }
            println!("trend: {:?}", probe.trend);
        }
        Cmd::Construct(c) => match c {
            ConstructCmd::Falpha { alpha } => {
                let f = construct::f_alpha(alpha)?;
                print_fn(&f);
                let p = -1.0 / alpha;
                if p > 1.0 {
                    print_fn(&construct::s_f_alpha(p)?);
                }
            }
            ConstructCmd::L1linf => {
                let (g, f) = construct::l1linf_pair();
                print_fn(&g);
                print_fn(&f);
            }
            ConstructCmd::Noesri { space, k } => {
                let x: SpaceDescriptor = space.parse()?;
                let art = construct::noesri_construct(&x, &construct::noesri_f1(), k)?;
                println!("log breakpoints: {:?}", art.log_breakpoints);
                println!("bridge width: {}", g12(art.t2 - 1.0));
                println!("per-window bridge integral: {}", g12(art.window_integral));
                println!("float prefix windows: {}", art.prefix_windows);
                println!(
                    "domain verdict: {}",
                    verdict_line(&spaces::domain_member(&x, &art.g_prefix))
                );
                println!("L1+Linf verdict: {}", verdict_line(&art.l1linf_verdict()));
            }
            ConstructCmd::Lpqwitness { p, q } => {
                let f = construct::lpq_witness(p, q)?;
                print_fn(&f);
            }
        },
        Cmd::Verify { json, csv, filter } => {
            let results = verify::run(cfg, filter.as_deref());
            if results.is_empty() {
                return Err(crate::error::Error::domain(format!(
                    "no check matches filter {:?}",
                    filter.unwrap_or_default()
                )));
            }
            if json {
                println!("{}", verify::to_json(&results));
            } else if csv {
                print!("{}", verify::to_csv(&results));
            } else {
                for r in &results {
                    println!(
                        "{} {} {} lhs={} rhs={} tol={}",
                        r.id,
                        r.anchor,
                        r.status.as_str(),
                        g12(r.lhs),
                        g12(r.rhs),
                        g12(r.tol)
                    );
                }
            }
            let failed = results.iter().any(|r| r.status == Status::Fail);
            let inconclusive = results.iter().any(|r| r.status == Status::Inconclusive);
            return Ok(if failed {
                1
            } else if inconclusive {
                3
            } else {
                0
            });
        }
        Cmd::PlotData { check, out } => {
            let data = verify::plot_data(&check, cfg)?;
            let mut text = String::new();
            for (x, y) in data {
                text.push_str(&format!("{},{}\n", g12(x), g12(y)));
            }
            std::fs::write(&out, text)
                .map_err(|e| crate::error::Error::domain(format!("{}: {e}", out.display())))?;
        }
    }
    Ok(0)
}
