use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use k3lab::io::{self, FanFile, IoError, PolyFile};
use k3lab::suite::{self, SuiteConfig, SuiteFilter};
use k3lab::Registry;
use k3lab_core::galedisc::{discriminant_vanishes_on_horn, reduce_discriminant, sample_points};
use k3lab_core::monodromy::{
    build_numgroth, cusp_fan, degeneration_type, hyperbolic_splitting, hyperbolic_splitting_with,
    large_radius_monodromies, monodromy_log, nilpotency_index, tensor_action,
};
use k3lab_core::modular::{loop_monodromy_traces, published_monodromies};
use k3lab_core::periods::{eta1_coeffs, ifunction_fg, ifunction_rows};
use k3lab_core::polytope::{secondary_fan, secondary_fan_with_basis};
use k3lab_core::Case;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "k3lab", version, about = "Verify the data of two toric K3 mirror families")]
struct Cli {
    /// Registry file to use instead of the built-in one.
    #[arg(long, global = true)]
    registry: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        case: Option<Case>,
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = suite::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = suite::DEFAULT_ODE_TOL)]
        ode_tol: f64,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record per-check wall time; reports are then no longer reproducible.
        #[arg(long)]
        timings: bool,
        #[arg(long, default_value_t = 4)]
        workers: usize,
    },
    /// Reduced discriminant and its Horn–Kapranov vanishing test.
    Discriminant {
        case: Case,
        #[arg(long, default_value_t = suite::HORN_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Secondary fan of a registered case or of a point configuration file.
    Fan {
        #[arg(required_unless_present = "points")]
        case: Option<Case>,
        #[arg(long, conflicts_with = "case")]
        points: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Hypergeometric series coefficients.
    Periods {
        #[arg(long, default_value = "A1")]
        case: Case,
        /// Overrides K3LAB_MAX_DEG.
        #[arg(long)]
        max_deg: Option<u32>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Tensor monodromies, their logarithms and the orbit fan.
    Monodromy {
        case: Case,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Loop monodromies of the Gauss equation.
    Modular {
        /// Integrate the ODE around the three singular points.
        #[arg(long)]
        ode: bool,
        #[arg(long, default_value_t = suite::DEFAULT_ODE_TOL)]
        tol: f64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let text = io::to_json(value);
    if path == Path::new("-") {
        print!("{text}");
        Ok(())
    } else {
        io::write_text(path, &text).map_err(Failure::from)
    }
}

fn load_registry(path: &Option<PathBuf>) -> Result<Registry, Failure> {
    match path {
        Some(p) => Ok(Registry::load(p)?),
        None => Ok(Registry::builtin()),
    }
}

/// Summary lines go to stderr when the JSON report goes to stdout.
macro_rules! say {
    ($json:expr, $($t:tt)*) => {
        if $json.as_deref() == Some(Path::new("-")) {
            eprintln!($($t)*)
        } else {
            println!($($t)*)
        }
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let reg = load_registry(&cli.registry)?;
    match cli.command {
        Command::Verify { suite, case, seed, tol, ode_tol, json, timings, workers } => {
            let filter: SuiteFilter = suite.parse().map_err(usage)?;
            let max_deg = suite::max_deg_from_env().map_err(usage)?;
            if !(tol > 0.0 && ode_tol > 0.0) {
                return Err(usage("tolerances must be positive"));
            }
            let cfg = SuiteConfig { filter, case, seed, tol, ode_tol, max_deg, timings, workers };
            let report = suite::run_suite(&reg, &cfg);
            if let Some(p) = &json {
                emit(p, &report)?;
            }
            if json.as_deref() != Some(Path::new("-")) {
                print!("{}", report.to_text());
            }
            if report.any_failed() {
                return Err(Failure::Checks);
            }
        }
        Command::Discriminant { case, samples, seed, json } => {
            let c = reg.case(case).expect("validated");
            let reduced = reduce_discriminant(&c.discriminant()?, &c.gale()?).map_err(usage)?;
            let rep = discriminant_vanishes_on_horn(&c.divisor_rows_big(), &reduced, &sample_points(seed, samples, 2));
            say!(json, "{case} reduced discriminant: {}", reduced.display_with(&["lambda", "mu"]));
            say!(json, 
                "Horn-Kapranov points: {} evaluated, {} poles, {} nonzero",
                rep.evaluated(),
                rep.poles(),
                rep.nonzero()
            );
            #[derive(Serialize)]
            struct Out {
                reduced: PolyFile,
                evaluated: usize,
                poles: usize,
                nonzero: usize,
            }
            if let Some(p) = &json {
                let reduced = PolyFile::from_poly(case.name(), &["lambda", "mu"], &reduced);
                emit(p, &Out { reduced, evaluated: rep.evaluated(), poles: rep.poles(), nonzero: rep.nonzero() })?;
            }
            if !rep.all_zero() {
                return Err(Failure::Checks);
            }
        }
        Command::Fan { case, points, json } => {
            let fan = match (case, points) {
                (_, Some(p)) => secondary_fan(&io::parse_point_config(&p)?).map_err(usage)?,
                (Some(case), None) => {
                    let c = reg.case(case).expect("validated");
                    secondary_fan_with_basis(&c.point_config()?, &c.divisor_rows_big()).map_err(usage)?
                }
                (None, None) => unreachable!("clap requires one"),
            };
            let out = FanFile::from_fan(&fan);
            say!(json, "rays: {:?}", out.rays);
            for (i, c) in out.cones.iter().enumerate() {
                say!(json, "cone {i} between rays {:?}: {:?}", c.rays, c.triangulation);
            }
            if let Some(p) = &json {
                emit(p, &out)?;
            }
        }
        Command::Periods { case, max_deg, json } => {
            let max_deg = match max_deg {
                Some(d) => d,
                None => suite::max_deg_from_env().map_err(usage)?,
            };
            let i = ifunction_fg(&ifunction_rows(case), max_deg).map_err(usage)?;
            let mut out: BTreeMap<&str, BTreeMap<String, String>> = BTreeMap::new();
            out.insert("F", io::series_to_map(&i.f));
            out.insert("G1", io::series_to_map(&i.g[0]));
            out.insert("G2", io::series_to_map(&i.g[1]));
            out.insert("t1", io::series_to_map(&i.mirror[0]));
            out.insert("t2", io::series_to_map(&i.mirror[1]));
            if case == Case::A1 {
                out.insert("eta1", io::series_to_map(&eta1_coeffs(max_deg)));
            }
            for (name, s) in &out {
                say!(json, "{name}: {} nonzero coefficients up to total degree {max_deg}", s.len());
            }
            if let Some(p) = &json {
                emit(p, &out)?;
            }
        }
        Command::Monodromy { case, json } => {
            let c = reg.case(case).expect("validated");
            let ng = build_numgroth(&c.pic_gram()?).map_err(usage)?;
            let split = match &c.published_f {
                Some(f) => hyperbolic_splitting_with(&ng, f),
                None => hyperbolic_splitting(&ng, 5),
            }
            .map_err(usage)?;
            #[derive(Serialize)]
            struct Gen {
                divisor: [i64; 2],
                matrix: Vec<Vec<i64>>,
                in_u_perp_n: Vec<Vec<i64>>,
                nilpotency_index: Option<usize>,
                degeneration_type: Option<String>,
            }
            #[derive(Serialize)]
            struct Out {
                gram: Vec<Vec<i64>>,
                e: Vec<String>,
                f: Vec<String>,
                n_gram: Vec<Vec<i64>>,
                generators: Vec<Gen>,
                fan_rays: Vec<[String; 2]>,
            }
            let mut gens = Vec::new();
            for d in large_radius_monodromies(case) {
                let t = tensor_action(&ng, d).map_err(usage)?;
                let n = monodromy_log(t.matrix()).map_err(usage)?;
                gens.push(Gen {
                    divisor: [d.0, d.1],
                    matrix: t.matrix().to_i64_rows(),
                    in_u_perp_n: split.to_u_perp_n(&t).to_i64_rows(),
                    nilpotency_index: nilpotency_index(&n),
                    degeneration_type: degeneration_type(&n).map(|t| format!("{t:?}")),
                });
            }
            let fan = cusp_fan(case, 4);
            let out = Out {
                gram: ng.gram().to_i64_rows(),
                e: split.e.iter().map(|x| x.to_string()).collect(),
                f: split.f.iter().map(|x| x.to_string()).collect(),
                n_gram: split.n_gram(&ng).to_i64_rows(),
                generators: gens,
                fan_rays: fan.rays.iter().map(|r| [r[0].to_string(), r[1].to_string()]).collect(),
            };
            say!(json, "{case} Grothendieck Gram: {:?}", out.gram);
            say!(json, "hyperbolic pair e = {:?}, f = {:?}; N = {:?}", out.e, out.f, out.n_gram);
            for g in &out.generators {
                say!(json, 
                    "T{:?}: nilpotency index {:?}, type {}",
                    g.divisor,
                    g.nilpotency_index,
                    g.degeneration_type.as_deref().unwrap_or("?")
                );
            }
            say!(json, "orbit fan rays: {:?}", out.fan_rays);
            if let Some(p) = &json {
                emit(p, &out)?;
            }
        }
        Command::Modular { ode, tol, json } => {
            if !ode {
                for (m, name) in published_monodromies().iter().zip(["0", "1", "inf"]) {
                    say!(json, "M{name} = [[{}, {}], [{}, {}]]", m.x, m.y, m.z, m.w);
                }
                return Ok(());
            }
            if tol <= 0.0 {
                return Err(usage("tolerance must be positive"));
            }
            let r = loop_monodromy_traces(tol).map_err(usage)?;
            #[derive(Serialize)]
            struct Out {
                abs_traces: [f64; 3],
                expected: [f64; 3],
                product_defects: [f64; 2],
                tol: f64,
                passed: bool,
            }
            let out = Out {
                abs_traces: r.abs_traces,
                expected: r.expected,
                product_defects: r.product_defects,
                tol,
                passed: r.passed(),
            };
            say!(json, "|tr| around 0, 1, inf: {:?} (expected {:?})", out.abs_traces, out.expected);
            say!(json, "product defect: {:e}", out.product_defects[1]);
            if let Some(p) = &json {
                emit(p, &out)?;
            }
            if !out.passed {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}
