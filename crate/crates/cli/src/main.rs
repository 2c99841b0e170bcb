//! `pauli`: run verification suites, enumerate cosets, and evaluate the
//! pseudo-fermion model from the command line.
//!
//! Exit status is 0 when no check fails, 1 when some check fails, and 2 on
//! malformed arguments or unreadable input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pauli_core::group::{
    central_product_quotient, direct_product, fiber_product, is_isomorphic, zoo, ConcreteGroup,
    GroupHom,
};
use pauli_core::presentation::{bundled, group_from_coset_table, todd_coxeter, Presentation};
use pauli_core::pseudo_fermion::{point_report, PfError, SweepPoint};
use pauli_core::report::{any_failed, to_json, Status, VerificationReport};
use pauli_core::suites::{run_suite, Suite, SuiteConfig};

/// Set when the JSON array goes to stdout; human-readable lines then go to stderr.
static JSON_ON_STDOUT: AtomicBool = AtomicBool::new(false);

macro_rules! say {
    ($($arg:tt)*) => {
        if JSON_ON_STDOUT.load(Ordering::Relaxed) {
            eprintln!($($arg)*)
        } else {
            println!($($arg)*)
        }
    };
}

#[derive(Parser)]
#[command(
    name = "pauli",
    version,
    about = "Verification toolkit for the Pauli group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Output {
    /// Write the JSON report array to this path (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite.
    Verify {
        /// pauli-matrix, presentations, products, svk, sphere, pseudofermion or all.
        suite: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Largest coset bound used by the order audits.
        #[arg(long, default_value_t = 100_000)]
        coset_bound: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exact sample points per sphere action.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate the cosets of the trivial subgroup of a presentation file.
    Tc {
        /// A `.pres` file, or the name of a bundled one such as `seifquo.pres`.
        file: String,
        #[arg(long, default_value_t = 100_000)]
        coset_bound: usize,
        /// Also print the Cayley table of the enumerated group.
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate the pseudo-fermion model at one parameter point or a sweep.
    Pf {
        /// |omega|.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        omega: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        delta: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// JSON array of {omega_abs, theta, delta, alpha}; overrides the point flags.
        #[arg(long, value_name = "PATH")]
        sweep: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Check the sphere actions (same as `verify sphere`).
    Act {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Build a product of two bundled groups and compare it with P.
    Product {
        kind: ProductKind,
        /// One of Z2, Z4, Z2xZ2, Q8, D8, P.
        a: String,
        b: String,
        #[command(flatten)]
        out: Output,
    },
    /// Write the bundled presentation files to a directory.
    DumpData { dir: PathBuf },
}

impl Command {
    fn output(&self) -> Option<&Output> {
        match self {
            Command::Verify { out, .. }
            | Command::Tc { out, .. }
            | Command::Pf { out, .. }
            | Command::Act { out, .. }
            | Command::Product { out, .. } => Some(out),
            Command::DumpData { .. } => None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Central,
    Fiber,
    Direct,
}

/// Usage or input error, reported with exit status 2.
struct UsageError(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let to_stdout = cli
        .command
        .output()
        .and_then(|o| o.json.as_deref())
        .is_some_and(|p| p.as_os_str() == "-");
    JSON_ON_STDOUT.store(to_stdout, Ordering::Relaxed);
    match run(cli.command) {
        Ok(reports) => {
            if any_failed(&reports) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(reports: &[VerificationReport], out: &Output) -> Result<(), UsageError> {
    for r in reports {
        say!("{}", r.summary_line());
    }
    match &out.json {
        Some(p) if p.as_os_str() == "-" => println!("{}", to_json(reports)),
        Some(p) => fs::write(p, to_json(reports) + "\n")
            .map_err(|e| UsageError(format!("cannot write {}: {e}", p.display())))?,
        None => {}
    }
    Ok(())
}

fn run(command: Command) -> Result<Vec<VerificationReport>, UsageError> {
    let (reports, out) = match command {
        Command::Verify {
            suite,
            tol,
            coset_bound,
            seed,
            samples,
            out,
        } => {
            let suite: Suite = suite.parse().map_err(UsageError)?;
            if !(tol.is_finite() && tol >= 0.0) || coset_bound == 0 {
                return Err(UsageError(
                    "tol must be non-negative and coset-bound positive".into(),
                ));
            }
            let cfg = SuiteConfig {
                tol,
                coset_bound,
                seed,
                sphere_samples: samples,
            };
            (run_suite(suite, &cfg), out)
        }
        Command::Tc {
            file,
            coset_bound,
            table,
            out,
        } => (vec![tc(&file, coset_bound, table)?], out),
        Command::Pf {
            omega,
            theta,
            delta,
            alpha,
            tol,
            sweep,
            out,
        } => {
            let points = match sweep {
                Some(path) => {
                    let text = read(&path)?;
                    serde_json::from_str::<Vec<SweepPoint>>(&text)
                        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?
                }
                None => vec![SweepPoint {
                    omega_abs: omega,
                    theta,
                    delta,
                    alpha,
                }],
            };
            (
                points
                    .iter()
                    .enumerate()
                    .map(|(k, p)| pf(k, p, tol))
                    .collect(),
                out,
            )
        }
        Command::Act { seed, samples, out } => {
            let cfg = SuiteConfig {
                seed,
                sphere_samples: samples,
                ..Default::default()
            };
            (run_suite(Suite::Sphere, &cfg), out)
        }
        Command::Product { kind, a, b, out } => (vec![product(kind, &a, &b)?], out),
        Command::DumpData { dir } => {
            fs::create_dir_all(&dir).map_err(|e| UsageError(format!("{}: {e}", dir.display())))?;
            for (name, text) in bundled::FILES {
                let path = dir.join(format!("{name}.pres"));
                fs::write(&path, text)
                    .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                say!("{}", path.display());
            }
            return Ok(Vec::new());
        }
    };
    emit(&reports, &out)?;
    Ok(reports)
}

fn read(path: &Path) -> Result<String, UsageError> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

/// Reads `file` from disk, falling back to the bundled file of that name.
fn load_presentation(file: &str) -> Result<Presentation, UsageError> {
    let path = Path::new(file);
    let text = if path.exists() {
        read(path)?
    } else {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(file);
        bundled::source(stem)
            .ok_or_else(|| UsageError(format!("{file}: no such file or bundled presentation")))?
            .to_string()
    };
    Presentation::parse(&text).map_err(|e| UsageError(format!("{file}: {e}")))
}

fn tc(file: &str, bound: usize, table: bool) -> Result<VerificationReport, UsageError> {
    let p = load_presentation(file)?;
    let t = todd_coxeter(&p, &[], bound).map_err(|e| UsageError(e.to_string()))?;
    let status = if t.is_complete() {
        Status::Pass
    } else {
        Status::BoundExceeded
    };
    let mut r = VerificationReport::new(format!("tc/{file}"), "plumbing", status)
        .metric("cosets", t.coset_count() as f64)
        .metric("defined_cosets", t.defined_total() as f64)
        .metric("bound", bound as f64);
    if t.is_complete() {
        say!("order {}", t.coset_count());
        if table {
            let g = group_from_coset_table(&t).map_err(|e| UsageError(e.to_string()))?;
            say!(
                "{}",
                serde_json::to_string_pretty(&g.to_json()).expect("serializes")
            );
            r = r.witness(json!({ "group": g.to_json() }));
        }
    } else {
        say!(
            "bound exceeded: {} live cosets at bound {bound}",
            t.coset_count()
        );
    }
    Ok(r)
}

fn pf(k: usize, point: &SweepPoint, tol: f64) -> VerificationReport {
    let id = format!("pf/{k:03}");
    let anchor = "pseudo-fermion realization of the Pauli group";
    match point_report(point, tol) {
        Ok(r) => {
            say!(
                "omega={} theta={} delta={}: Omega={} eigenvalues {:+} {:+}, group order {}",
                point.omega_abs,
                point.theta,
                point.delta,
                r.params.omega_cap,
                r.hamiltonian.eigenvalues[0][0],
                r.hamiltonian.eigenvalues[1][0],
                r.group_order
            );
            VerificationReport::check(id, anchor, r.passed)
                .metric("omega_cap", r.params.omega_cap)
                .metric("group_order", r.group_order as f64)
                .metric("eigenvalue_lower", r.hamiltonian.eigenvalues[0][0])
                .metric("eigenvalue_upper", r.hamiltonian.eigenvalues[1][0])
                .witness(serde_json::to_value(&r).expect("serializes"))
        }
        Err(e) => {
            let kind = match e {
                PfError::InvalidRegime(_) => "InvalidRegime",
                _ => "Error",
            };
            say!("{kind}: {e}");
            VerificationReport::new(id, anchor, Status::Fail)
                .witness(json!({ "error": kind, "message": e.to_string(), "point": point }))
        }
    }
}

fn zoo_group(name: &str) -> Result<ConcreteGroup, UsageError> {
    zoo::by_name(name).ok_or_else(|| {
        UsageError(format!(
            "unknown group {name:?}; expected Z2, Z4, Z2xZ2, Q8, D8 or P"
        ))
    })
}

/// Some epimorphism onto `Z2`, found by trying generator images in order.
fn onto_z2(g: &ConcreteGroup) -> Option<GroupHom> {
    let n = g.generators().len();
    (1..1u64 << n).find_map(|mask| {
        let images: Vec<usize> = (0..n).map(|k| ((mask >> k) & 1) as usize).collect();
        GroupHom::from_generator_images(g.clone(), zoo::cyclic(2), &images).ok()
    })
}

fn product(kind: ProductKind, a: &str, b: &str) -> Result<VerificationReport, UsageError> {
    let (ga, gb) = (zoo_group(a)?, zoo_group(b)?);
    let built = match kind {
        ProductKind::Direct => Ok(direct_product(&ga, &gb)),
        ProductKind::Central => {
            let za = zoo::central_involution(a, &ga)
                .ok_or_else(|| UsageError(format!("{a} has no designated central involution")))?;
            let zb = zoo::central_involution(b, &gb)
                .ok_or_else(|| UsageError(format!("{b} has no designated central involution")))?;
            central_product_quotient(&ga, za, &gb, zb).map(|c| c.group)
        }
        ProductKind::Fiber => {
            let e1 = onto_z2(&ga)
                .ok_or_else(|| UsageError(format!("{a} has no quotient of order 2")))?;
            let e2 = onto_z2(&gb)
                .ok_or_else(|| UsageError(format!("{b} has no quotient of order 2")))?;
            fiber_product(&e1, &e2).map(|f| f.group().clone())
        }
    };
    let kind_name = match kind {
        ProductKind::Central => "central",
        ProductKind::Fiber => "fiber",
        ProductKind::Direct => "direct",
    };
    let id = format!("product/{kind_name}-{a}-{b}");
    Ok(match built {
        Ok(g) => {
            let iso = is_isomorphic(&g, &zoo::pauli());
            say!(
                "{kind_name} product of {a} and {b}: order {}, isomorphic to P: {iso}",
                g.order()
            );
            VerificationReport::new(id, "plumbing", Status::Recorded)
                .metric("order", g.order() as f64)
                .metric("isomorphic_to_pauli", f64::from(u8::from(iso)))
                .witness(json!({ "group": g.to_json() }))
        }
        Err(e) => VerificationReport::new(id, "plumbing", Status::Fail)
            .witness(json!({ "error": e.to_string() })),
    })
}
