//! Command-line front end for profile documents.
//!
//! Exit codes: 0 success, 1 negative or failed semantic result (violations
//! found, not coverable, conversion impossible, cross-check disagreement),
//! 2 usage, I/O or parse errors and inputs that are not valid profiles where
//! one is required.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use riemann_profiles::{
    cross_check_theorem, enumerate_constellations, find_exact_covering, render_diagram,
    surface_report, CoveringOutcome, DiagramStyle, EnumFilter, ProfileDocument, ProfileGraph,
    SheetSet,
};

#[derive(Parser)]
#[command(
    name = "profiles",
    version,
    about = "Profile graphs of branched coverings: validation, realizability, surface invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetForm {
    Sigma,
    Explicit,
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    Dot,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a document is a graph of profile type.
    Validate { file: PathBuf },
    /// Decide realizability; print the exact covering or the failure trace.
    Cover { file: PathBuf },
    /// Print sheet count, branch data, Euler characteristic and genus.
    Invariants {
        file: PathBuf,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Re-serialize a document canonically in the requested form.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: TargetForm,
    },
    /// Count constellations at a given size, or run the covering cross-check.
    Enumerate {
        #[arg(long)]
        sheets: usize,
        #[arg(long)]
        columns: usize,
        /// Keep only constellations acting transitively on the sheets.
        #[arg(long)]
        transitive: bool,
        /// Keep only constellations whose monodromy product is the identity.
        #[arg(long = "identity-product")]
        identity_product: bool,
        /// Compare the forced-walk decision, the backtracking oracle and the
        /// identity-product test on every transitive instance.
        #[arg(long = "cross-check")]
        cross_check: bool,
        /// Print each surviving constellation, one per line.
        #[arg(long)]
        list: bool,
    },
    /// Draw the profile as a DOT or SVG diagram.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Output style; defaults to the extension of --out, else dot.
        #[arg(long, value_enum)]
        style: Option<StyleArg>,
        /// Color each covering path distinctly.
        #[arg(long = "overlay-covering")]
        overlay_covering: bool,
    },
}

fn load_document(path: &PathBuf) -> Result<ProfileDocument, ExitCode> {
    let bytes = fs::read(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(2)
    })?;
    riemann_profiles::parse_profile_bytes(&bytes).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn load_profile(path: &PathBuf) -> Result<ProfileGraph, ExitCode> {
    let doc = load_document(path)?;
    doc.to_profile().map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Cover { file } => cmd_cover(&file),
        Command::Invariants { file, json } => cmd_invariants(&file, json),
        Command::Convert { file, to } => cmd_convert(&file, to),
        Command::Enumerate {
            sheets,
            columns,
            transitive,
            identity_product,
            cross_check,
            list,
        } => cmd_enumerate(
            sheets,
            columns,
            transitive,
            identity_product,
            cross_check,
            list,
        ),
        Command::Render {
            file,
            out,
            style,
            overlay_covering,
        } => cmd_render(&file, &out, style, overlay_covering),
    }
}

fn cmd_validate(file: &PathBuf) -> ExitCode {
    let doc = match load_document(file) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let report = doc.validate();
    if report.ok {
        println!("ok");
        ExitCode::SUCCESS
    } else {
        for v in &report.violations {
            println!("{v}");
        }
        ExitCode::from(1)
    }
}

fn cmd_cover(file: &PathBuf) -> ExitCode {
    let profile = match load_profile(file) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let (family, families) = match profile.sheet_set() {
        SheetSet::Finite(_) => ("path", "paths"),
        SheetSet::PeriodicIntegers(_) => ("path family", "path families"),
    };
    match find_exact_covering(&profile) {
        CoveringOutcome::Covered(covering) => {
            println!("exact covering with {} {families}:", covering.paths().len());
            for p in covering.paths() {
                let seq: Vec<String> = p.line_sequence().iter().map(|l| l.to_string()).collect();
                println!("{family} {}: {}", p.start_line(), seq.join(" "));
            }
            ExitCode::SUCCESS
        }
        CoveringOutcome::NotCoverable(trace) => {
            println!(
                "not coverable: walk from line {} returns to column 1 at line {}",
                trace.start_line(),
                trace.end_line()
            );
            let seq: Vec<String> = trace.lines.iter().map(|l| l.to_string()).collect();
            println!("trace: {}", seq.join(" "));
            ExitCode::from(1)
        }
    }
}

fn cmd_invariants(file: &PathBuf, json: bool) -> ExitCode {
    let profile = match load_profile(file) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let report = surface_report(&profile);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::SUCCESS
}

fn cmd_convert(file: &PathBuf, to: TargetForm) -> ExitCode {
    let doc = match load_document(file) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let result = match to {
        TargetForm::Sigma => riemann_profiles::serialize_profile(&doc),
        TargetForm::Explicit => riemann_profiles::serialize_explicit(&doc),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn cmd_enumerate(
    sheets: usize,
    columns: usize,
    transitive: bool,
    identity_product: bool,
    cross_check: bool,
    list: bool,
) -> ExitCode {
    if sheets == 0 || columns == 0 {
        eprintln!("error: --sheets and --columns must be positive");
        return ExitCode::from(2);
    }
    if cross_check {
        return match cross_check_theorem(sheets, columns) {
            Ok(summary) => {
                println!("instances: {}", summary.instances);
                println!("coverable: {}", summary.coverable);
                println!("disagreements: {}", summary.disagreements.len());
                for d in &summary.disagreements {
                    println!("  {d}");
                }
                if summary.disagreements.is_empty() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        };
    }
    let filter = EnumFilter {
        require_transitive: transitive,
        require_identity_product: identity_product,
    };
    match enumerate_constellations(sheets, columns, filter) {
        Ok(stream) => {
            let mut count = 0usize;
            for c in stream {
                count += 1;
                if list {
                    let cols: Vec<String> = c
                        .sigmas()
                        .iter()
                        .map(riemann_profiles::format::cycles_string)
                        .collect();
                    println!("{}", cols.join(" "));
                }
            }
            println!("count: {count}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn cmd_render(
    file: &PathBuf,
    out: &PathBuf,
    style: Option<StyleArg>,
    overlay_covering: bool,
) -> ExitCode {
    let profile = match load_profile(file) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let style = match style {
        Some(StyleArg::Dot) => DiagramStyle::Dot,
        Some(StyleArg::Svg) => DiagramStyle::Svg,
        None => match out.extension().and_then(|e| e.to_str()) {
            Some("svg") => DiagramStyle::Svg,
            _ => DiagramStyle::Dot,
        },
    };
    let covering = if overlay_covering {
        match find_exact_covering(&profile) {
            CoveringOutcome::Covered(c) => Some(c),
            CoveringOutcome::NotCoverable(_) => {
                eprintln!("error: cannot overlay a covering, the profile is not realizable");
                return ExitCode::from(1);
            }
        }
    } else {
        None
    };
    let text = render_diagram(&profile, style, covering.as_ref());
    if let Err(e) = fs::write(out, text) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
