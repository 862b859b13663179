//! `wh`: command-line front end for the Whitehead-torsion calculus.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wh_core::cobordism::{CobordismDto, InvertibleCobordism, ManifoldFlags, ManifoldProfile};
use wh_core::whitehead::GeneratorRegistry;
use wh_core::{CyclicGroupSpec, Error as CoreError};

#[derive(Parser)]
#[command(
    name = "wh",
    version,
    about = "Exact Whitehead-torsion calculus over Z[Z/n]: classes, cobordisms, classification"
)]
struct Cli {
    /// Working precision for the character-log embedding, in decimal digits
    #[arg(long, global = true, default_value_t = wh_core::numeric::DEFAULT_PRECISION_DIGITS)]
    precision: u32,

    /// Generator registry JSON (overrides the WH_REGISTRY environment
    /// variable and the shipped default)
    #[arg(long, global = true)]
    registry: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Rank, generators and involution data of Wh(Z/n)
    Info {
        n: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i8,
    },
    /// Evaluate an element of Z[Z/n]: canonical form, unit status, class data
    Class {
        expr: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i8,
    },
    /// Operate on cobordism description files
    Cob {
        #[command(subcommand)]
        verb: CobVerb,
    },
    /// Classification verdicts with citations
    Classify {
        #[command(subcommand)]
        verb: ClassifyVerb,
    },
    /// Tables over group orders n = 1..max_n
    Table {
        kind: TableKind,
        max_n: usize,
        /// Largest allowed max_n
        #[arg(long, default_value_t = 24)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum CobVerb {
    /// W o W' (endpoints must match)
    Compose { w1: PathBuf, w2: PathBuf },
    /// The dual cobordism (ends swapped, duality-formula torsion)
    Dual { w: PathBuf },
    /// The two-sided inverse
    Invert { w: PathBuf },
    /// Torsion data of the cobordism
    Torsion { w: PathBuf },
    /// Is the cobordism an s-cobordism (zero torsion)?
    #[command(name = "is-s")]
    IsS { w: PathBuf },
}

#[derive(Subcommand)]
enum ClassifyVerb {
    /// Is the R-diffeomorphism represented by the cobordism decomposable?
    Decomposable { w: PathBuf },
    /// ... concordant to a product?
    #[command(name = "c-decomposable")]
    CDecomposable { w: PathBuf },
    /// Is the torsion realized by an inertial cobordism?
    Inertial { w: PathBuf },
    /// Structure of D(M) = Wh(pi_1 M) for dim >= 5
    D {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i8,
    },
    /// Structure of D_c(M) = Wh(M)/N(M) for dim >= 5
    Dc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i8,
    },
    /// Conclusions from "M and N are invertibly cobordant"
    #[command(name = "r-diffeo")]
    RDiffeo {
        /// Profile JSON for M (omit to build from --dim/--n)
        m: Option<PathBuf>,
        /// Profile JSON for N (defaults to the same data as M)
        n_file: Option<PathBuf>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Build the inline profiles as orientable (pass `--orientable false`
        /// for the non-orientable case)
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        orientable: bool,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i8,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Ranks,
    Dc,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            // internal cross-validation failures are distinguished from user error
            match e.downcast_ref::<CoreError>() {
                Some(CoreError::RankValidation { .. })
                | Some(CoreError::InconsistentBasis(_)) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    if cli.precision < 20 {
        anyhow::bail!(
            "--precision must be at least 20 digits, got {}",
            cli.precision
        );
    }
    let registry = load_registry(cli)?;
    let digits = cli.precision;
    let json = cli.format == Format::Json;

    match &cli.command {
        Cmd::Info { n, epsilon } => {
            let group = CyclicGroupSpec::new(*n, *epsilon)?;
            render::info(group, &registry, digits, json)
        }
        Cmd::Class { expr, n, epsilon } => {
            let group = CyclicGroupSpec::new(*n, *epsilon)?;
            render::class_eval(expr, group, &registry, digits, json)
        }
        Cmd::Cob { verb } => run_cob(verb, &registry, digits, json),
        Cmd::Classify { verb } => run_classify(verb, &registry, digits, json),
        Cmd::Table { kind, max_n, cap } => {
            if *max_n > *cap {
                anyhow::bail!("max_n = {max_n} exceeds the cap of {cap} (raise with --cap)");
            }
            if *max_n < 1 {
                anyhow::bail!("max_n must be at least 1");
            }
            match kind {
                TableKind::Ranks => render::rank_table(*max_n, digits, json),
                TableKind::Dc => render::dc_table(*max_n, &registry, digits, json),
            }
        }
    }
}

fn load_registry(cli: &Cli) -> anyhow::Result<GeneratorRegistry> {
    let path = cli
        .registry
        .clone()
        .or_else(|| std::env::var_os("WH_REGISTRY").map(PathBuf::from));
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| anyhow::anyhow!("cannot read registry {}: {e}", p.display()))?;
            Ok(GeneratorRegistry::from_json(&text)?)
        }
        None => Ok(GeneratorRegistry::shipped()),
    }
}

fn load_cobordism(path: &PathBuf) -> anyhow::Result<InvertibleCobordism> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read cobordism {}: {e}", path.display()))?;
    let dto: CobordismDto = serde_json::from_str(&text)
        .map_err(|e| anyhow::anyhow!("invalid cobordism JSON in {}: {e}", path.display()))?;
    Ok(dto.try_into()?)
}

fn load_profile(path: &PathBuf) -> anyhow::Result<ManifoldProfile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read profile {}: {e}", path.display()))?;
    let dto: wh_core::cobordism::ProfileDto = serde_json::from_str(&text)
        .map_err(|e| anyhow::anyhow!("invalid profile JSON in {}: {e}", path.display()))?;
    Ok(dto.try_into()?)
}

fn run_cob(
    verb: &CobVerb,
    registry: &GeneratorRegistry,
    digits: u32,
    json: bool,
) -> anyhow::Result<()> {
    match verb {
        CobVerb::Compose { w1, w2 } => {
            let a = load_cobordism(w1)?;
            let b = load_cobordism(w2)?;
            let out = a.compose(&b)?;
            render::cobordism(&out, "W o W'", json)
        }
        CobVerb::Dual { w } => {
            let out = load_cobordism(w)?.dual();
            render::cobordism(&out, "dual(W)", json)
        }
        CobVerb::Invert { w } => {
            let out = load_cobordism(w)?.inverse();
            render::cobordism(&out, "inverse(W)", json)
        }
        CobVerb::Torsion { w } => {
            let cob = load_cobordism(w)?;
            render::torsion_report(&cob, registry, digits, json)
        }
        CobVerb::IsS { w } => {
            let cob = load_cobordism(w)?;
            render::is_s_report(&cob, json)
        }
    }
}

fn run_classify(
    verb: &ClassifyVerb,
    registry: &GeneratorRegistry,
    digits: u32,
    json: bool,
) -> anyhow::Result<()> {
    match verb {
        ClassifyVerb::Decomposable { w } => {
            let cob = load_cobordism(w)?;
            let v = wh_core::classify::decide_decomposable(&cob);
            render::verdict("decomposable", &v, json)
        }
        ClassifyVerb::CDecomposable { w } => {
            let cob = load_cobordism(w)?;
            let gens = wh_core::whitehead::generators(cob.source().pi, registry, digits)?;
            let v = wh_core::classify::decide_c_decomposable(&cob, &gens, digits)?;
            render::verdict("c-decomposable", &v, json)
        }
        ClassifyVerb::Inertial { w } => {
            let cob = load_cobordism(w)?;
            let gens = wh_core::whitehead::generators(cob.source().pi, registry, digits)?;
            let v = wh_core::classify::inertial_status(cob.torsion(), cob.source(), &gens, digits)?;
            render::verdict("inertial", &v, json)
        }
        ClassifyVerb::D { n, dim, epsilon } => {
            let m = inline_profile(*dim, *n, *epsilon, *epsilon == 1)?;
            let s = wh_core::classify::d_structure(&m, registry, digits)?;
            render::structure("D(M)", &s, json)
        }
        ClassifyVerb::Dc { n, dim, epsilon } => {
            let m = inline_profile(*dim, *n, *epsilon, *epsilon == 1)?;
            let s = wh_core::classify::dc_structure(&m, registry, digits)?;
            render::structure("D_c(M)", &s, json)
        }
        ClassifyVerb::RDiffeo {
            m,
            n_file,
            dim,
            n,
            orientable,
            epsilon,
        } => {
            let (pm, pn) = match (m, n_file) {
                (Some(mp), Some(np)) => (load_profile(mp)?, load_profile(np)?),
                (Some(mp), None) => {
                    let p = load_profile(mp)?;
                    (p.clone(), p)
                }
                (None, _) => {
                    let (dim, n) = match (dim, n) {
                        (Some(d), Some(n)) => (*d, *n),
                        _ => anyhow::bail!("r-diffeo needs either profile files or --dim and --n"),
                    };
                    let p = inline_profile(dim, n, *epsilon, *orientable)?;
                    (p.clone(), p)
                }
            };
            let out = wh_core::classify::r_diffeo_conclusion(&pm, &pn)?;
            render::labeled_verdicts(&out, json)
        }
    }
}

fn inline_profile(
    dim: usize,
    n: usize,
    epsilon: i8,
    orientable: bool,
) -> anyhow::Result<ManifoldProfile> {
    let pi = CyclicGroupSpec::new(n, epsilon)?;
    Ok(ManifoldProfile::new(
        "M",
        dim,
        pi,
        orientable,
        ManifoldFlags::default(),
    )?)
}
