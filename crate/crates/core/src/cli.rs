//! The `ebrmap` command line.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::constructions::{construction1, construction2, construction3, construction4, regular_catalog};
use crate::ebr::EdgeBiregularMap;
use crate::enumerate::{classify_report, enumerate_ebr, load_group, EnumerateOptions, DEFAULT_CANDIDATE_BUDGET};
use crate::error::{Error, Result};
use crate::export::{corners_dot, underlying_dot};
use crate::families::FamilySpec;
use crate::flag_maps::FlagMap;
use crate::presentation::{coset_enumerate, evaluate_word, GroupPresentation, DEFAULT_MAX_COSETS};

#[derive(Parser, Debug)]
#[command(name = "ebrmap", version, about = "Edge-biregular maps from finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the invariants of a map as JSON.
    Analyze(MapSource),
    /// Enumerate maps over a group and report twin/dual classes.
    Enumerate(EnumerateArgs),
    /// Apply a construction to a catalogued regular map.
    Construct {
        #[arg(long)]
        catalog: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        construction: u8,
    },
    /// Decide whether a flag map has an alternate-edge-colouring.
    Colourable {
        #[arg(long)]
        flagmap: PathBuf,
    },
    /// Write a Graphviz description of a map.
    Export {
        #[arg(long, value_enum)]
        dot: DotKind,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        source: MapSource,
    },
}

#[derive(Args, Debug)]
struct MapSource {
    /// Presentation text, or a file containing it.
    #[arg(long, requires = "slots", conflicts_with_all = ["family", "catalog"])]
    presentation: Option<String>,
    /// Four comma-separated words for r0, r2, rho0, rho2; `-` marks an absent slot.
    #[arg(long)]
    slots: Option<String>,
    #[arg(long, conflicts_with = "catalog")]
    family: Option<String>,
    /// Family parameters such as `a=4,c=3`.
    #[arg(long, default_value = "")]
    params: String,
    #[arg(long, requires = "construction")]
    catalog: Option<String>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    construction: Option<u8>,
    #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    /// A catalog name such as `Dih(8)`, `Dih(6)xC2`, `C2^3`, or a presentation file.
    #[arg(long)]
    group: String,
    #[arg(long)]
    proper: bool,
    #[arg(long)]
    distinct: bool,
    #[arg(long, allow_negative_numbers = true)]
    chi_max: Option<i64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DotKind {
    Corners,
    Underlying,
}

fn read_text(spec: &str) -> Result<String> {
    if Path::new(spec).is_file() {
        std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))
    } else {
        Ok(spec.to_string())
    }
}

fn map_from_presentation(text: &str, slots: &str, max_cosets: usize) -> Result<EdgeBiregularMap> {
    let presentation = GroupPresentation::parse(&read_text(text)?)?;
    let words: Vec<&str> = slots.split(',').map(str::trim).collect();
    if words.len() != 4 {
        return Err(Error::InvalidParameter(format!("--slots needs four words, found {}", words.len())));
    }
    let group = coset_enumerate(&presentation, max_cosets)?;
    let images: Vec<usize> = presentation
        .generator_names()
        .iter()
        .map(|n| group.generator(n).expect("enumerated group keeps generator names"))
        .collect();
    let mut elements = [None; 4];
    for (slot, word) in elements.iter_mut().zip(&words) {
        if *word != "-" {
            *slot = Some(evaluate_word(&group, &images, &presentation.parse_word(word)?));
        }
    }
    EdgeBiregularMap::new(Arc::new(group), elements)
}

impl MapSource {
    fn build(&self) -> Result<EdgeBiregularMap> {
        if let (Some(text), Some(slots)) = (&self.presentation, &self.slots) {
            return map_from_presentation(text, slots, self.max_cosets);
        }
        if let Some(family) = &self.family {
            return FamilySpec::parse(family, &self.params)?.build();
        }
        if let (Some(name), Some(c)) = (&self.catalog, self.construction) {
            return construct(name, c);
        }
        Err(Error::InvalidParameter(
            "give --presentation with --slots, --family with --params, or --catalog with --construction".into(),
        ))
    }
}

fn construct(name: &str, construction: u8) -> Result<EdgeBiregularMap> {
    let r = regular_catalog(name)?;
    match construction {
        1 => construction1(&r),
        2 => construction2(&r),
        3 => construction3(&r),
        _ => construction4(&r),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

/// Invariants for closed maps, the boundary report otherwise.
fn describe(m: &EdgeBiregularMap) -> Result<String> {
    if m.is_closed() {
        Ok(to_json(&m.invariants()?))
    } else {
        Ok(to_json(&m.boundary_report()?))
    }
}

fn execute(command: Command) -> Result<String> {
    match command {
        Command::Analyze(source) => describe(&source.build()?),
        Command::Enumerate(args) => {
            let group = Arc::new(load_group(&args.group, args.max_cosets)?);
            let options = EnumerateOptions {
                require_proper: args.proper,
                require_distinct: args.distinct,
                chi_max: args.chi_max,
                budget: args.budget,
                threads: args.threads,
            };
            let maps = enumerate_ebr(group, &options)?;
            Ok(to_json(&classify_report(&maps)?))
        }
        Command::Construct { catalog, construction } => describe(&construct(&catalog, construction)?),
        Command::Colourable { flagmap } => {
            let text = std::fs::read_to_string(&flagmap).map_err(|e| Error::Io(format!("{}: {e}", flagmap.display())))?;
            let map: FlagMap =
                serde_json::from_str(&text).map_err(|e| Error::InvalidFlagMap(format!("{}: {e}", flagmap.display())))?;
            Ok(to_json(&match map.alternate_edge_colouring()? {
                Some(c) => json!({ "colourable": true, "witness": c.colours }),
                None => json!({ "colourable": false }),
            }))
        }
        Command::Export { dot, out, source } => {
            let m = source.build()?;
            let text = match dot {
                DotKind::Corners => corners_dot(&m),
                DotKind::Underlying => underlying_dot(&m)?,
            };
            std::fs::write(&out, text).map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
            Ok(to_json(&json!({ "written": out.display().to_string() })))
        }
    }
}

/// Runs the command line, writing results to `stdout` and messages to `stderr`.
///
/// Returns 0 on success, 1 on invalid input and 2 when a resource bound is hit.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = writeln!(stdout, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_resource_bound() {
                2
            } else {
                1
            }
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
