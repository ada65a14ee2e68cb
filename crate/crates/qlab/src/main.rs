use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use qlab::cex::{self, CexError, Options};
use qlab::corpus;
use qlab::formats::{self, QuantaleFile};
use qlab_core::locale::{check_generator_commutation, frame_coproduct, FiniteFrame, Poset};
use qlab_core::maxspec::{commutative_reflection, Algebra, Subspace};
use qlab_core::quantale::{is_spatial_by_primes, primes, spatialize, verify_axioms, FiniteQuantale};
use qlab_core::representation::enumerate_points;
use serde_json::json;

#[derive(Parser)]
#[command(name = "qlab", version, about = "Finite quantales, finite frames and Max A over ℚ[i]")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Quantale and poset arguments are file paths, or `corpus:<name>` for a
/// bundled one.
#[derive(Subcommand)]
enum Command {
    /// Check the quantale laws and classify.
    Check { quantale: String },
    /// Prime elements and spatiality by primes.
    Primes { quantale: String },
    /// Quotient by the kernel of the given points.
    Spatialize {
        quantale: String,
        #[arg(long, num_args = 0..)]
        points: Vec<PathBuf>,
    },
    /// Irreducible representations on lattices up to a size.
    Points {
        quantale: String,
        #[arg(long, default_value_t = 3)]
        carrier_cap: usize,
    },
    /// Finite frames given by posets.
    Frame {
        #[command(subcommand)]
        command: FrameCommand,
    },
    /// Subspaces of a direct sum of matrix algebras, e.g. "blocks=[2,1]".
    Max {
        algebra: String,
        #[command(subcommand)]
        command: MaxCommand,
    },
    /// Run bundled scenarios.
    Cex {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        all: bool,
        #[arg(long, conflicts_with_all = ["name", "all"])]
        list: bool,
        /// Dimension for spatialization-cn.
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum FrameCommand {
    Coproduct { first: String, second: String },
    Regular { poset: String },
}

#[derive(Subcommand)]
enum MaxCommand {
    Product { first: PathBuf, second: PathBuf },
    /// Two-sided closure ⊤ ⊙ M ⊙ ⊤.
    Closure { subspace: PathBuf },
    /// M ⊙ M* ⊙ M = M for a right ideal M.
    Gelfand { subspace: PathBuf },
    /// Commutative reflection and the frame of its ideals.
    Reflect,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_quantale(arg: &str) -> Result<Arc<FiniteQuantale>> {
    if let Some(name) = arg.strip_prefix("corpus:") {
        return corpus::quantale(name)
            .map(|q| q.quantale)
            .with_context(|| format!("no bundled quantale {name:?}"));
    }
    let q = formats::parse_quantale(&read(Path::new(arg))?).with_context(|| format!("in {arg}"))?;
    Ok(Arc::new(q))
}

fn load_poset(arg: &str) -> Result<Poset> {
    if let Some(name) = arg.strip_prefix("corpus:") {
        return corpus::posets()
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
            .with_context(|| format!("no bundled poset {name:?}"));
    }
    formats::parse_poset(&read(Path::new(arg))?).with_context(|| format!("in {arg}"))
}

fn load_subspace(path: &Path, algebra: &Algebra) -> Result<Subspace> {
    formats::parse_subspace(&read(path)?, algebra).with_context(|| format!("in {}", path.display()))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn maybe(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes)
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON value"));
}

fn check(q: &FiniteQuantale, format: Format) -> Result<ExitCode> {
    let r = verify_axioms(q);
    let f = r.flags;
    let name = |x: usize| q.lattice().name(x).to_string();
    let violation = r.violation.as_ref().map(|v| format!("{v:?}"));
    match format {
        Format::Json => print_json(&json!({
            "size": q.size(),
            "is_quantale": f.is_quantale,
            "unital": f.unital,
            "unit": r.unit.map(name),
            "strong": f.strong,
            "involutive": f.involutive,
            "gelfand": f.gelfand,
            "strictly_two_sided": f.strictly_two_sided,
            "locale": f.locale,
            "trivial": f.trivial,
            "violation": violation,
        })),
        Format::Text => {
            println!("elements: {}", q.lattice().names().join(" "));
            println!("quantale: {}", yes(f.is_quantale));
            match r.unit {
                Some(e) => println!("unital: yes (unit {})", name(e)),
                None => println!("unital: no"),
            }
            println!("strong: {}", yes(f.strong));
            println!("involutive: {}", maybe(f.involutive));
            println!("gelfand: {}", maybe(f.gelfand));
            println!("strictly two-sided: {}", yes(f.strictly_two_sided));
            println!("locale: {}", yes(f.locale));
            println!("trivial: {}", yes(f.trivial));
            if let Some(v) = violation {
                println!("violation: {v}");
            }
        }
    }
    Ok(if f.is_quantale { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn primes_cmd(q: &FiniteQuantale, format: Format) {
    let ps = primes(q);
    let spatial = is_spatial_by_primes(q);
    let name = |x: &usize| q.lattice().name(*x).to_string();
    let names: Vec<String> = ps.iter().map(name).collect();
    match format {
        Format::Json => print_json(&json!({
            "primes": names,
            "spatial": spatial.holds(),
            "witness": spatial.witness().map(name),
        })),
        Format::Text => {
            println!("primes: {}", names.join(" "));
            match spatial.witness() {
                None => println!("spatial by primes: yes"),
                Some(w) => println!("spatial by primes: no ({} is not a meet of primes)", name(w)),
            }
        }
    }
}

fn spatialize_cmd(q: &Arc<FiniteQuantale>, points: &[PathBuf], format: Format) -> Result<()> {
    let homs = points
        .iter()
        .map(|p| formats::parse_point(&read(p)?, q).with_context(|| format!("in {}", p.display())))
        .collect::<Result<Vec<_>>>()?;
    let s = spatialize(q, &homs)?;
    let name = |x: usize| q.lattice().name(x).to_string();
    let classes: Vec<Vec<String>> = s.classes.iter().map(|c| c.iter().map(|&x| name(x)).collect()).collect();
    match format {
        Format::Json => print_json(&json!({
            "classes": classes,
            "quotient": QuantaleFile::from_quantale(&s.quotient),
        })),
        Format::Text => {
            println!("classes: {}", s.classes.len());
            for c in &classes {
                println!("  {{{}}}", c.join(", "));
            }
            println!("quotient:");
            println!("{}", serde_json::to_string_pretty(&QuantaleFile::from_quantale(&s.quotient))?);
        }
    }
    Ok(())
}

fn points_cmd(q: &Arc<FiniteQuantale>, cap: usize, format: Format) -> Result<()> {
    let points = enumerate_points(q, cap)?;
    let rows: Vec<serde_json::Value> = points
        .iter()
        .map(|r| {
            let images: Vec<Vec<usize>> = (0..q.size()).map(|a| r.endo().map(r.hom().apply(a)).values().to_vec()).collect();
            json!({
                "carrier": r.carrier().names(),
                "images": images,
                "strong": r.is_strong(),
                "pre_unital": r.is_pre_unital().ok(),
                "zero": r.is_zero(),
            })
        })
        .collect();
    match format {
        Format::Json => print_json(&json!({ "carrier_cap": cap, "points": rows })),
        Format::Text => {
            println!("irreducible representations on carriers up to {cap}: {}", points.len());
            for r in &points {
                let images: Vec<String> = (0..q.size())
                    .map(|a| format!("{} ↦ {:?}", q.lattice().name(a), r.endo().map(r.hom().apply(a)).values()))
                    .collect();
                println!(
                    "  carrier {} elements; strong {}; {}",
                    r.carrier().size(),
                    yes(r.is_strong()),
                    images.join(", ")
                );
            }
        }
    }
    Ok(())
}

fn frame_cmd(command: FrameCommand, format: Format) -> Result<()> {
    match command {
        FrameCommand::Coproduct { first, second } => {
            let l1 = FiniteFrame::of_downsets(load_poset(&first)?)?;
            let l2 = FiniteFrame::of_downsets(load_poset(&second)?)?;
            let c = frame_coproduct(&l1, &l2)?;
            let commute = check_generator_commutation(&c).holds();
            match format {
                Format::Json => print_json(&json!({
                    "sizes": [l1.size(), l2.size()],
                    "coproduct_size": c.frame.size(),
                    "base_points": c.frame.base_poset().size(),
                    "boolean": c.frame.is_boolean(),
                    "inj1": c.inj1,
                    "inj2": c.inj2,
                    "generators_commute": commute,
                })),
                Format::Text => {
                    println!("{} ⊕ {} = frame of {} elements", l1.size(), l2.size(), c.frame.size());
                    println!("base poset: {} points", c.frame.base_poset().size());
                    println!("boolean: {}", yes(c.frame.is_boolean()));
                    println!("ι₁: {:?}", c.inj1);
                    println!("ι₂: {:?}", c.inj2);
                    println!("generators commute: {}", yes(commute));
                }
            }
        }
        FrameCommand::Regular { poset } => {
            let l = FiniteFrame::of_downsets(load_poset(&poset)?)?;
            let r = l.is_regular();
            let witness = r.witness().map(|&w| l.lattice().name(w).to_string());
            match format {
                Format::Json => print_json(&json!({ "size": l.size(), "regular": r.holds(), "witness": witness })),
                Format::Text => match witness {
                    None => println!("regular: yes ({} elements)", l.size()),
                    Some(w) => println!("regular: no ({w} is not the join of the elements well inside it)"),
                },
            }
        }
    }
    Ok(())
}

fn print_subspace(label: &str, m: &Subspace, format: Format) {
    match format {
        Format::Json => print_json(&json!({ label: formats::subspace_to_file(m), "rank": m.rank() })),
        Format::Text => println!("{label}: {m} (rank {})", m.rank()),
    }
}

fn max_cmd(algebra: &str, command: MaxCommand, format: Format) -> Result<ExitCode> {
    let a: Algebra = algebra.parse()?;
    match command {
        MaxCommand::Product { first, second } => {
            let m = load_subspace(&first, &a)?.product(&load_subspace(&second, &a)?)?;
            print_subspace("product", &m, format);
        }
        MaxCommand::Closure { subspace } => {
            let m = load_subspace(&subspace, &a)?.two_sided_closure();
            print_subspace("closure", &m, format);
        }
        MaxCommand::Gelfand { subspace } => {
            let m = load_subspace(&subspace, &a)?;
            let holds = m.gelfand_identity()?;
            match format {
                Format::Json => print_json(&json!({ "gelfand": holds })),
                Format::Text => println!("M ⊙ M* ⊙ M = M: {}", yes(holds)),
            }
            if !holds {
                return Ok(ExitCode::from(1));
            }
        }
        MaxCommand::Reflect => {
            let r = commutative_reflection(&a)?;
            match format {
                Format::Json => print_json(&json!({
                    "reflection": r.reflection.to_string(),
                    "frame_size": r.frame.size(),
                    "commutator_ideal_rank": r.commutator_ideal.rank(),
                    "consistent": r.consistent(),
                })),
                Format::Text => {
                    println!("reflection: {}", r.reflection);
                    println!("frame: {} elements", r.frame.size());
                    println!("commutator ideal: rank {}", r.commutator_ideal.rank());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cex_cmd(name: Option<String>, all: bool, list: bool, n: usize, format: Format) -> Result<ExitCode> {
    if list {
        let scenarios = cex::list();
        match format {
            Format::Json => print_json(&json!(scenarios
                .iter()
                .map(|s| json!({ "name": s.name, "location": s.location, "summary": s.summary }))
                .collect::<Vec<_>>())),
            Format::Text => {
                for s in scenarios {
                    println!("{:28} {}", s.name, s.location);
                }
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let options = Options { n };
    let reports = if all {
        cex::run_all(&options)
    } else {
        let Some(name) = name else {
            bail!("give a scenario name, --all or --list");
        };
        match cex::run(&name, &options) {
            Ok(r) => vec![r],
            Err(e @ CexError::UnknownScenario(_)) => {
                eprintln!("error: {e}");
                return Ok(ExitCode::from(2));
            }
            Err(e) => bail!(e),
        }
    };
    match format {
        Format::Json if reports.len() == 1 => println!("{}", serde_json::to_string_pretty(&reports[0])?),
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
        Format::Text => {
            let texts: Vec<String> = reports.iter().map(|r| r.render_text()).collect();
            print!("{}", texts.join("\n"));
        }
    }
    Ok(if reports.iter().all(|r| r.passed()) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let format = cli.format;
    match cli.command {
        Command::Check { quantale } => return check(&*load_quantale(&quantale)?, format),
        Command::Primes { quantale } => primes_cmd(&*load_quantale(&quantale)?, format),
        Command::Spatialize { quantale, points } => spatialize_cmd(&load_quantale(&quantale)?, &points, format)?,
        Command::Points { quantale, carrier_cap } => points_cmd(&load_quantale(&quantale)?, carrier_cap, format)?,
        Command::Frame { command } => frame_cmd(command, format)?,
        Command::Max { algebra, command } => return max_cmd(&algebra, command, format),
        Command::Cex { name, all, list, n } => return cex_cmd(name, all, list, n, format),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
