mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use isospec_core::isospectral_search::{golden_table, verify_table, TABLE_IDS};
use isospec_core::spectrum::{spectral_series, Exponent};
use isospec_core::theta_counting::ThetaLattice;
use isospec_core::weight_lattice::{canonical_form, enumerate_representatives, is_conjugate};
use isospec_core::{
    ehrhart_form, family_report, make_lattice, noncyclic_example_check, search, spectral_generating_function,
    spectrum_table, zeta_partial, CongruenceLattice, CyclicParams, Error, FamilyKind, Format, GroupFamily,
    IsospectralFamily, Member, SearchConfig, SpaceKind, UMode,
};

use render::Out;

#[derive(Parser)]
#[command(name = "isospec", version, about = "Spectra and isospectral searches for cyclic quotients of rank-one symmetric spaces")]
struct Cli {
    /// Output format: json, csv or md (plain text when omitted)
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<Format>,

    /// Worker threads for searches (0 = all cores)
    #[arg(long, global = true, env = "ISOSPEC_THREADS", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

fn parse_format(text: &str) -> Result<Format, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args, Clone)]
struct LatticeArgs {
    /// Group family: A, B, C2 or D
    #[arg(long)]
    family: String,
    /// Rank (defaults to 2 for C2)
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: i64,
    /// Comma-separated s (n entries, or n+1 summing to 0 mod q for A)
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    s: Vec<i64>,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    u: i64,
    /// Intersect with D₂ (C2 only)
    #[arg(long)]
    even: bool,
}

#[derive(Args, Clone)]
struct SpaceArgs {
    /// cp:<n>, s:<d> or hp1
    #[arg(long)]
    space: String,
    #[arg(long)]
    q: i64,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    s: Vec<i64>,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    u: i64,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Truncated theta series of a congruence lattice
    Theta {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Exact rational form of an untwisted theta series
    Rational {
        #[command(flatten)]
        lattice: LatticeArgs,
    },
    /// Eigenvalues and multiplicities of the twisted Laplacian
    Spectrum {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value_t = 10)]
        levels: usize,
        /// Also report Σ mult(λ_k) λ_k^(−e) over the listed levels (e.g. 3 or 5/2)
        #[arg(long)]
        zeta: Option<String>,
        /// Digits after the decimal point for --zeta
        #[arg(long, default_value_t = 20)]
        precision: usize,
    },
    /// Spectral generating function
    Genfun {
        #[command(flatten)]
        space: SpaceArgs,
        /// Number of series coefficients to print
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Decide conjugacy of two cyclic subgroups
    Conjugate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        q: i64,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        s: Vec<i64>,
        /// The second parameter vector
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        t: Vec<i64>,
    },
    /// Canonical representatives of all conjugacy classes of order q
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        q: i64,
    },
    /// Search for isospectral families
    Search {
        /// cp:<n>, s:<d> or hp1
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        qmin: Option<i64>,
        #[arg(long)]
        qmax: Option<i64>,
        /// untwisted or twisted
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        depth_factor: Option<usize>,
        /// TOML file with any of: space, qmin, qmax, mode, depth_factor
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Print the embedded reference tables
    Tables {
        /// Table number (all when omitted)
        #[arg(long)]
        table: Option<u8>,
    },
    /// Rerun the searches behind the reference tables and compare
    Verify {
        /// Table number (all when omitted)
        #[arg(long)]
        table: Option<u8>,
        /// Only check q up to this bound
        #[arg(long)]
        qmax: Option<i64>,
    },
    /// Checks for the two (ℤ/2)³ subgroups of SO(12)
    Noncyclic {
        #[arg(long, default_value_t = 60)]
        depth: usize,
        #[arg(long, default_value_t = 50)]
        max_sq_norm: u64,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SearchFile {
    space: Option<String>,
    qmin: Option<i64>,
    qmax: Option<i64>,
    mode: Option<String>,
    depth_factor: Option<usize>,
}

/// Failures reported on stderr with exit code 1.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn family(name: &str, n: Option<usize>) -> Result<GroupFamily, Failure> {
    let kind = match name.to_ascii_uppercase().as_str() {
        "A" => FamilyKind::A,
        "B" => FamilyKind::B,
        "C2" | "C" => FamilyKind::C2,
        "D" => FamilyKind::D,
        other => return Err(Failure(format!("unknown family '{other}'; expected A, B, C2 or D"))),
    };
    let n = match (kind, n) {
        (FamilyKind::C2, None) => 2,
        (_, Some(n)) => n,
        (_, None) => return Err(Failure("--n is required for this family".into())),
    };
    Ok(GroupFamily::new(kind, n)?)
}

fn lattice(args: &LatticeArgs) -> Result<CongruenceLattice, Failure> {
    let fam = family(&args.family, args.n)?;
    let params = CyclicParams::for_family(fam, args.q, args.s.clone(), args.u)?;
    Ok(make_lattice(fam, params, args.even)?)
}

fn space_lattice(args: &SpaceArgs) -> Result<(SpaceKind, CongruenceLattice), Failure> {
    let space: SpaceKind = args.space.parse()?;
    Ok((space, space.lattice(args.q, args.s.clone(), args.u)?))
}

fn search_config(
    space: Option<String>,
    qmin: Option<i64>,
    qmax: Option<i64>,
    mode: Option<String>,
    depth_factor: Option<usize>,
    config: Option<PathBuf>,
    threads: usize,
) -> Result<SearchConfig, Failure> {
    let file: SearchFile = match config {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
            toml::from_str(&text).map_err(|e| Failure(format!("invalid config {}: {e}", path.display())))?
        }
        None => SearchFile::default(),
    };
    let space: SpaceKind = space
        .or(file.space)
        .ok_or_else(|| Failure("--space is required".into()))?
        .parse()?;
    let qmax = qmax.or(file.qmax).ok_or_else(|| Failure("--qmax is required".into()))?;
    let mode: UMode = mode.or(file.mode).unwrap_or_else(|| "untwisted".into()).parse()?;
    let mut cfg = SearchConfig::new(space, qmin.or(file.qmin).unwrap_or(1), qmax, mode)?;
    cfg.depth_factor = depth_factor.or(file.depth_factor).unwrap_or(2);
    if cfg.depth_factor == 0 {
        return Err(Failure("--depth-factor must be positive".into()));
    }
    cfg.threads = threads;
    Ok(cfg)
}

fn table_ids(table: Option<u8>) -> Result<Vec<u8>, Failure> {
    match table {
        Some(id) if TABLE_IDS.contains(&id) => Ok(vec![id]),
        Some(id) => Err(Failure(format!("no table {id}; expected 1 to 6"))),
        None => Ok(TABLE_IDS.to_vec()),
    }
}

fn run(cli: Cli) -> Result<Out, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Theta { lattice: args, terms } => {
            if terms == 0 {
                return Err(Failure("--terms must be positive".into()));
            }
            let l = lattice(&args)?;
            Ok(render::theta(&l, &l.theta_counts(terms)?, format))
        }
        Command::Rational { lattice: args } => {
            let l = lattice(&args)?;
            Ok(render::rational(&ehrhart_form(&l)?, format))
        }
        Command::Spectrum { space, levels, zeta, precision } => {
            let (kind, l) = space_lattice(&space)?;
            let table = spectrum_table(&l, kind, levels)?;
            let zeta = match zeta {
                Some(text) => {
                    let e: Exponent = text.parse()?;
                    Some((text, zeta_partial(&l, kind, e, levels)?.to_decimal(precision)))
                }
                None => None,
            };
            Ok(render::spectrum(&space, &table, zeta, format))
        }
        Command::Genfun { space, terms } => {
            let (kind, l) = space_lattice(&space)?;
            let exact = if l.u() == 0 { Some(spectral_generating_function(&l, kind)?) } else { None };
            let series = spectral_series(&l, kind, terms)?;
            Ok(render::genfun(exact.as_ref(), &series, format))
        }
        Command::Conjugate { family: f, q, s, t } => {
            let fam = family(&f.family, f.n)?;
            let s = isospec_core::weight_lattice::normalize_s(fam, q, s)?;
            let t = isospec_core::weight_lattice::normalize_s(fam, q, t)?;
            let answer = is_conjugate(fam, q, &s, &t)?;
            let cs = canonical_form(fam, q, &s)?;
            let ct = canonical_form(fam, q, &t)?;
            Ok(render::conjugate(answer, &cs, &ct, format))
        }
        Command::Enumerate { family: f, q } => {
            let fam = family(&f.family, f.n)?;
            if q < 1 {
                return Err(Error::ZeroOrder(q).into());
            }
            Ok(render::representatives(fam, q, &enumerate_representatives(fam, q), format))
        }
        Command::Search { space, qmin, qmax, mode, depth_factor, config } => {
            let cfg = search_config(space, qmin, qmax, mode, depth_factor, config, cli.threads)?;
            let families = search(&cfg)?;
            Ok(Out::ok(family_report(&families, format.unwrap_or(Format::Markdown))?))
        }
        Command::Tables { table } => {
            let mut text = String::new();
            for id in table_ids(table)? {
                let t = golden_table(id)?;
                for sec in &t.sections {
                    let space = sec.spaces[0];
                    let families: Vec<IsospectralFamily> = sec
                        .families
                        .iter()
                        .map(|f| {
                            let members = f
                                .rows
                                .iter()
                                .map(|(s, u)| {
                                    let s = isospec_core::weight_lattice::normalize_s(space.family(), f.q, s.clone())?;
                                    Ok(Member { s, u: *u })
                                })
                                .collect::<Result<_, Error>>()?;
                            Ok(IsospectralFamily { q: f.q, members, space })
                        })
                        .collect::<Result<_, Error>>()?;
                    let fmt = format.unwrap_or(Format::Markdown);
                    if fmt == Format::Markdown {
                        let spaces: Vec<String> = sec.spaces.iter().map(|s| s.to_string()).collect();
                        text.push_str(&format!(
                            "Table {id}: {}, {:?}, q <= {}\n\n",
                            spaces.join(" and "),
                            sec.mode,
                            sec.q_max
                        ));
                    }
                    text.push_str(&family_report(&families, fmt)?);
                    text.push('\n');
                }
            }
            Ok(Out::ok(text))
        }
        Command::Verify { table, qmax } => {
            let mut reports = Vec::new();
            for id in table_ids(table)? {
                reports.push(verify_table(id, qmax, cli.threads)?);
            }
            Ok(render::verify(&reports, format))
        }
        Command::Noncyclic { depth, max_sq_norm } => {
            Ok(render::noncyclic(&noncyclic_example_check(depth, max_sq_norm), format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
