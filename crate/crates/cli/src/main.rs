use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use equilib::disk::{self, LabelMode, RenderOptions};
use equilib::equitable::Axis;
use equilib::isotropic;
use equilib::lattice::{self, LatticeVec};
use equilib::rep::{self, DistElem};
use equilib::scalar::int_json;
use equilib::verify;
use equilib::Report;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "equilib", version, about = "Exact computations with the equitable basis of sl2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification reports and print a JSON summary.
    Verify {
        /// Every module (the default).
        #[arg(long, conflicts_with = "module")]
        all: bool,
        /// A single module by name.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(verify::MODULES))]
        module: Option<String>,
        /// Include every check record, not only failures.
        #[arg(long)]
        full: bool,
    },
    /// Express a real root as the image of x and replay the word.
    #[command(allow_negative_numbers = true)]
    Descent { alpha: i64, beta: i64, gamma: i64 },
    /// Real roots as JSON lines, by height or inside a box.
    #[command(group(ArgGroup::new("range").required(true).args(["height", "bbox"])))]
    Roots {
        #[arg(long)]
        height: Option<u64>,
        #[arg(long = "box")]
        bbox: Option<i64>,
    },
    /// Isotropic vectors in a box with their decompositions, as JSON lines.
    Isotropic {
        #[arg(long = "box")]
        bbox: i64,
    },
    /// Triples with max(a, b, c) <= N and their Pythagorean images, as JSON lines.
    Pythagorean {
        #[arg(long)]
        max_c: u64,
    },
    /// Matrices on the irreducible module V(d).
    #[command(group(ArgGroup::new("what").required(true).args(["elem", "exp", "neg_exp", "map", "check"])))]
    Rep {
        #[arg(long)]
        dim: usize,
        /// Action of one of e f h x y z x* y* z*.
        #[arg(long)]
        elem: Option<String>,
        /// exp of the action of a nilpotent element.
        #[arg(long)]
        exp: Option<String>,
        /// exp of minus the action of a nilpotent element.
        #[arg(long)]
        neg_exp: Option<String>,
        #[arg(long, value_enum)]
        map: Option<RepMap>,
        /// Print the identity report for this dimension.
        #[arg(long)]
        check: bool,
    },
    /// Render the Poincare-disk tessellation as SVG.
    Disk {
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 800)]
        size: u32,
        #[arg(long, default_value = "all")]
        labels: String,
        /// Counterclockwise rotation in degrees.
        #[arg(long, default_value_t = -120.0, allow_negative_numbers = true)]
        rotation: f64,
        /// Only label vertices first reached within this many reflections.
        #[arg(long, default_value_t = 3)]
        label_depth: usize,
        /// Output file; the SVG goes to stdout when absent.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RepMap {
    P,
    Tx,
    Ty,
    Tz,
}

enum Failure {
    Usage(String),
    Verification,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<equilib::Error> for Failure {
    fn from(e: equilib::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn line(out: &mut impl Write, v: &Value) -> io::Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)
}

fn pretty(out: &mut impl Write, v: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)
}

fn module_summary(name: &str, report: &Report, full: bool) -> Value {
    let failed = report.failures().count();
    let shown: Vec<_> = if full {
        report.iter().collect()
    } else {
        report.failures().collect()
    };
    json!({
        "module": name,
        "checks": report.len(),
        "passed": report.len() - failed,
        "failed": failed,
        "records": shown,
    })
}

fn run(cmd: Command, out: &mut impl Write) -> Result<(), Failure> {
    match cmd {
        Command::Verify { all: _, module, full } => {
            let reports = match module {
                Some(m) => {
                    let r = verify::module_report(&m).ok_or_else(|| Failure::Usage(format!("unknown module `{m}`")))?;
                    vec![(m, r)]
                }
                None => verify::run_all().into_iter().map(|(m, r)| (m.to_string(), r)).collect(),
            };
            let ok = reports.iter().all(|(_, r)| r.all_passed());
            let modules: Vec<Value> = reports.iter().map(|(m, r)| module_summary(m, r, full)).collect();
            pretty(out, &json!({ "all_passed": ok, "modules": modules }))?;
            if !ok {
                return Err(Failure::Verification);
            }
        }
        Command::Descent { alpha, beta, gamma } => {
            let u = LatticeVec::from_ints(alpha, beta, gamma);
            let word = lattice::descent(&u)?;
            let steps = lattice::replay(&word);
            let image = steps.last().map(|s| s.image.clone()).unwrap_or_else(LatticeVec::x);
            let mut obj = lattice::root_json(&u);
            obj["replay"] = steps
                .iter()
                .map(|s| json!({ "token": s.token.text(), "image": s.image.to_json() }))
                .collect();
            obj["image_of_x"] = image.to_json();
            obj["verified"] = Value::Bool(image == u);
            pretty(out, &obj)?;
            if image != u {
                return Err(Failure::Verification);
            }
        }
        Command::Roots { height, bbox } => {
            let roots = match (height, bbox) {
                (Some(h), _) => lattice::enumerate_real(h),
                (None, Some(b)) => lattice::brute_force_real(b),
                (None, None) => unreachable!("clap requires one of the range flags"),
            };
            for u in &roots {
                line(out, &lattice::root_json(u))?;
            }
        }
        Command::Isotropic { bbox } => {
            for u in isotropic::enumerate_isotropic(bbox) {
                line(out, &isotropic::decompose_isotropic(&u)?.to_json())?;
            }
        }
        Command::Pythagorean { max_c } => {
            for (elem, t) in isotropic::omega(max_c) {
                let p = isotropic::pythagorean(&t);
                let abc: Vec<Value> = [&t.a, &t.b, &t.c].into_iter().map(int_json).collect();
                line(
                    out,
                    &json!({
                        "abc": abc,
                        "relation": t.relation,
                        "degenerate": t.degenerate,
                        "element": serde_json::to_value(&elem).expect("rationals serialize"),
                        "pythagorean": p.to_json(),
                        "hypotenuse": p.hypotenuse,
                    }),
                )?;
            }
        }
        Command::Rep { dim, elem, exp, neg_exp, map, check } => {
            let parse = |s: &str| s.parse::<DistElem>().map_err(Failure::from);
            let m = if let Some(e) = elem {
                rep::action(dim, parse(&e)?)
            } else if let Some(e) = exp {
                rep::exp_action(dim, parse(&e)?)?
            } else if let Some(e) = neg_exp {
                rep::exp_neg_action(dim, parse(&e)?)?
            } else if let Some(which) = map {
                match which {
                    RepMap::P => rep::p_map(dim),
                    RepMap::Tx => rep::t_map(dim, Axis::X),
                    RepMap::Ty => rep::t_map(dim, Axis::Y),
                    RepMap::Tz => rep::t_map(dim, Axis::Z),
                }
            } else {
                debug_assert!(check);
                let report = rep::identity_checks(dim);
                pretty(out, &serde_json::to_value(&report).expect("report serializes"))?;
                return if report.all_passed() { Ok(()) } else { Err(Failure::Verification) };
            };
            pretty(out, &m.to_json())?;
        }
        Command::Disk { depth, size, labels, rotation, label_depth, output } => {
            let labels: LabelMode = labels.parse()?;
            if size == 0 {
                return Err(Failure::Usage("size must be positive".into()));
            }
            let scene = disk::tessellate(depth);
            let opts = RenderOptions { size, labels, rotation_deg: rotation, label_depth };
            let svg = disk::render_svg(&scene, &opts);
            match output {
                Some(path) => {
                    fs::write(&path, svg)?;
                    pretty(out, &scene.summary_json())?;
                }
                None => out.write_all(svg.as_bytes())?,
            }
        }
    }
    Ok(())
}
