//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 on domain errors (validation failures,
//! non-convergence, unknown names), 2 on usage errors. All output is a
//! pure function of the arguments and the scenario file bytes.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::game::{
    backward_induction, build_sequential_normal_form, build_simultaneous_normal_form, pure_nash,
    TieBreak,
};
use crate::leslie::{NegativePolicy, DEFAULT_EIGEN_MAX_ITER, DEFAULT_EIGEN_TOL};
use crate::report::{describe_nash, describe_spe, render_bimatrix, render_trajectory, render_tree,
    Format, RenderOptions};
use crate::scenario::Scenario;

#[derive(Parser)]
#[command(
    name = "demogame",
    version,
    about = "Age-structured population projection and two-country policy games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Project a country's population under a fixed joint policy profile.
    Project {
        #[command(flatten)]
        source: Source,
        /// Country to project.
        #[arg(long)]
        country: String,
        /// Joint profile as comma-separated action labels, one per country.
        #[arg(long)]
        profile: String,
        /// Number of projection intervals (0 prints only the initial state).
        #[arg(long, default_value_t = 1)]
        steps: u32,
        /// Floor negative projected counts at zero instead of failing.
        #[arg(long)]
        clamp: bool,
    },
    /// Dominant growth rate and stable age distribution of a country's
    /// matrix under a profile.
    Eigen {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        country: String,
        #[arg(long)]
        profile: String,
        /// Convergence tolerance.
        #[arg(long, default_value_t = DEFAULT_EIGEN_TOL)]
        tol: f64,
        /// Iteration cap.
        #[arg(long = "max-iter", default_value_t = DEFAULT_EIGEN_MAX_ITER)]
        max_iter: usize,
    },
    /// Payoff table of the sequential game (leader's actions in rows,
    /// follower contingent strategies in columns).
    Table {
        #[command(flatten)]
        source: Source,
        /// Country that moves first.
        #[arg(long)]
        leader: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
    },
    /// Pure Nash equilibria of the sequential or simultaneous normal form.
    Nash {
        #[command(flatten)]
        source: Source,
        /// Country that moves first (sequential form).
        #[arg(long, conflicts_with = "simultaneous", required_unless_present = "simultaneous")]
        leader: Option<String>,
        /// Solve the one-shot simultaneous game instead.
        #[arg(long)]
        simultaneous: bool,
    },
    /// Backward-induction outcome of the sequential game.
    Spe {
        #[command(flatten)]
        source: Source,
        /// Country that decides first.
        #[arg(long)]
        first: String,
    },
    /// Game tree in DOT format.
    Tree {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        leader: String,
    },
    /// Print the built-in scenario as a scenario file, ready to edit.
    ShowPaper,
}

#[derive(Args)]
struct Source {
    /// Scenario file (JSON).
    #[arg(
        value_name = "SCENARIO",
        required_unless_present = "builtin_paper",
        conflicts_with = "builtin_paper"
    )]
    scenario: Option<PathBuf>,
    /// Use the built-in two-country example scenario.
    #[arg(long)]
    builtin_paper: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
}

impl Source {
    fn load(&self) -> Result<Scenario, String> {
        if self.builtin_paper {
            return Ok(Scenario::builtin_paper());
        }
        let path = self.scenario.as_ref().expect("clap enforces a source");
        let bytes = std::fs::read(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Scenario::parse(&bytes).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// Parses args, runs the command, and writes results to the given
/// sinks. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(output) => {
            let _ = write!(stdout, "{output}");
            0
        }
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<String, String> {
    match command {
        Command::Project {
            source,
            country,
            profile,
            steps,
            clamp,
        } => {
            let scenario = source.load()?;
            let index = country_index(&scenario, &country)?;
            let profile = parse_profile(&scenario, &profile)?;
            let entry = scenario
                .effect_for(&profile)
                .ok_or_else(|| format!("no effect entry for profile {}", scenario.profile_label(&profile)))?;
            let dynamics = entry.dynamics(index);
            let policy = if clamp {
                NegativePolicy::ClampToZero
            } else {
                NegativePolicy::Error
            };
            let trajectory = dynamics
                .matrix()
                .project_trajectory_with(
                    scenario.country(index).initial(),
                    Some(dynamics.immigration()),
                    steps,
                    policy,
                )
                .map_err(|e| e.to_string())?;
            render_trajectory(&trajectory, &RenderOptions::csv()).map_err(|e| e.to_string())
        }
        Command::Eigen {
            source,
            country,
            profile,
            tol,
            max_iter,
        } => {
            let scenario = source.load()?;
            let index = country_index(&scenario, &country)?;
            let profile = parse_profile(&scenario, &profile)?;
            let entry = scenario
                .effect_for(&profile)
                .ok_or_else(|| format!("no effect entry for profile {}", scenario.profile_label(&profile)))?;
            let eigen = entry
                .dynamics(index)
                .matrix()
                .dominant_eigen(tol, max_iter)
                .map_err(|e| e.to_string())?;
            let mut out = String::new();
            writeln!(out, "lambda: {}", eigen.lambda).unwrap();
            let shares: Vec<String> = eigen
                .stable_distribution
                .iter()
                .map(|v| v.to_string())
                .collect();
            writeln!(out, "stable_distribution: {}", shares.join(",")).unwrap();
            writeln!(out, "iterations: {}", eigen.iterations).unwrap();
            writeln!(out, "residual: {:e}", eigen.residual).unwrap();
            Ok(out)
        }
        Command::Table {
            source,
            leader,
            format,
        } => {
            let scenario = source.load()?;
            let leader = country_index(&scenario, &leader)?;
            let game =
                build_sequential_normal_form(&scenario, leader).map_err(|e| e.to_string())?;
            let opts = RenderOptions {
                format: match format {
                    TableFormat::Markdown => Format::MarkdownTable,
                    TableFormat::Csv => Format::Csv,
                },
                integer_snap: true,
            };
            render_bimatrix(&game, &opts).map_err(|e| e.to_string())
        }
        Command::Nash {
            source,
            leader,
            simultaneous,
        } => {
            let scenario = source.load()?;
            let game = if simultaneous {
                build_simultaneous_normal_form(&scenario).map_err(|e| e.to_string())?
            } else {
                let leader = country_index(&scenario, &leader.expect("clap enforces a form"))?;
                build_sequential_normal_form(&scenario, leader).map_err(|e| e.to_string())?
            };
            Ok(describe_nash(&game, &pure_nash(&game)))
        }
        Command::Spe { source, first } => {
            let scenario = source.load()?;
            let leader = country_index(&scenario, &first)?;
            let spe = backward_induction(&scenario, leader, TieBreak::LowestIndex)
                .map_err(|e| e.to_string())?;
            Ok(describe_spe(&scenario, &spe))
        }
        Command::Tree { source, leader } => {
            let scenario = source.load()?;
            let leader = country_index(&scenario, &leader)?;
            render_tree(&scenario, leader).map_err(|e| e.to_string())
        }
        Command::ShowPaper => Ok(Scenario::builtin_paper().to_canonical_json()),
    }
}

fn country_index(scenario: &Scenario, name: &str) -> Result<usize, String> {
    scenario
        .country_index(name)
        .ok_or_else(|| format!("no country named \"{name}\" in scenario"))
}

fn parse_profile(scenario: &Scenario, text: &str) -> Result<Vec<usize>, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != scenario.countries().len() {
        return Err(format!(
            "profile \"{text}\" must list one action per country ({} expected)",
            scenario.countries().len()
        ));
    }
    parts
        .iter()
        .zip(scenario.countries())
        .map(|(label, country)| {
            country
                .action_index(label)
                .ok_or_else(|| format!("country \"{}\" has no action \"{label}\"", country.name()))
        })
        .collect()
}
