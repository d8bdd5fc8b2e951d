//! Rendering of payoff tables, game trees, and trajectories.
//!
//! All renderers are pure: identical inputs give byte-identical output.
//! Numbers pass through integer snapping by default, so a payoff of
//! `188.0` prints as `188` (values within 1e-6 of an integer are
//! printed as that integer).

use std::borrow::Cow;
use std::fmt::Write;

use thiserror::Error;

use crate::game::{profile_payoffs, BimatrixGame, GameError, JointProfile, NashResult, SpeResult};
use crate::leslie::PopulationVector;
use crate::scenario::Scenario;

/// Output syntax selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    MarkdownTable,
    Csv,
    Dot,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::MarkdownTable => "markdown-table",
            Format::Csv => "csv",
            Format::Dot => "dot",
        }
    }
}

/// Rendering options shared by the table and trajectory emitters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    pub integer_snap: bool,
}

impl RenderOptions {
    pub fn csv() -> Self {
        Self {
            format: Format::Csv,
            integer_snap: true,
        }
    }

    pub fn markdown() -> Self {
        Self {
            format: Format::MarkdownTable,
            integer_snap: true,
        }
    }
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self::csv()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("{operation} cannot render {format}")]
    UnsupportedFormat {
        operation: &'static str,
        format: &'static str,
    },
}

fn unsupported(operation: &'static str, format: Format) -> ReportError {
    ReportError::UnsupportedFormat {
        operation,
        format: format.name(),
    }
}

/// Formats one numeric value, snapping near-integers when asked.
pub fn format_value(value: f64, integer_snap: bool) -> String {
    if integer_snap {
        let rounded = value.round();
        if (value - rounded).abs() <= 1e-6 {
            return if rounded == 0.0 {
                "0".to_string()
            } else {
                format!("{rounded:.0}")
            };
        }
    }
    format!("{value}")
}

/// Quotes a CSV field when it contains a separator, quote, or newline.
fn csv_field(text: &str) -> Cow<'_, str> {
    if text.contains([',', '"', '\n', '\r']) {
        Cow::Owned(format!("\"{}\"", text.replace('"', "\"\"")))
    } else {
        Cow::Borrowed(text)
    }
}

fn markdown_cell(text: &str) -> String {
    text.replace('|', "\\|")
}

/// Renders a bimatrix game as CSV or a Markdown pipe table.
///
/// Each cell prints as `u_row,u_col`. In CSV the two payoffs become
/// separate fields, so every column strategy heads two fields; in
/// Markdown the pair shares one cell, mirroring the usual payoff-table
/// typography.
pub fn render_bimatrix(game: &BimatrixGame, opts: &RenderOptions) -> Result<String, ReportError> {
    let fmt = |v: f64| format_value(v, opts.integer_snap);
    match opts.format {
        Format::Csv => {
            let mut out = String::new();
            for label in game.col_labels() {
                let field = csv_field(label);
                write!(out, ",{field},{field}").unwrap();
            }
            out.push('\n');
            for (r, label) in game.row_labels().iter().enumerate() {
                out.push_str(&csv_field(label));
                for c in 0..game.cols() {
                    let (u, v) = game.cell(r, c);
                    write!(out, ",{},{}", fmt(u), fmt(v)).unwrap();
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::MarkdownTable => {
            let mut out = String::from("|  |");
            for label in game.col_labels() {
                write!(out, " {} |", markdown_cell(label)).unwrap();
            }
            out.push('\n');
            out.push_str("| --- |");
            for _ in 0..game.cols() {
                out.push_str(" --- |");
            }
            out.push('\n');
            for (r, label) in game.row_labels().iter().enumerate() {
                write!(out, "| {} |", markdown_cell(label)).unwrap();
                for c in 0..game.cols() {
                    let (u, v) = game.cell(r, c);
                    write!(out, " {},{} |", fmt(u), fmt(v)).unwrap();
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::Dot => Err(unsupported("render_bimatrix", opts.format)),
    }
}

fn dot_escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the sequential game as a DOT digraph: a root decision node
/// for the leader, one decision node per leader action for the
/// follower, and one leaf per joint profile labelled
/// `(u_leader, u_follower)`. Node names are deterministic, so output is
/// byte-stable.
pub fn render_tree(scenario: &Scenario, leader: usize) -> Result<String, GameError> {
    if scenario.countries().len() != 2 {
        return Err(GameError::NotTwoCountries(scenario.countries().len()));
    }
    if leader > 1 {
        return Err(GameError::BadCountry(leader));
    }
    let follower = 1 - leader;
    let leader_name = scenario.country(leader).name();
    let follower_name = scenario.country(follower).name();
    let leader_actions = scenario.country(leader).actions();
    let follower_actions = scenario.country(follower).actions();

    let mut out = String::from("digraph game_tree {\n  rankdir=TB;\n");
    writeln!(
        out,
        "  root [shape=circle, label=\"{}\"];",
        dot_escape(leader_name)
    )
    .unwrap();
    for a in 0..leader_actions.len() {
        writeln!(
            out,
            "  d{a} [shape=circle, label=\"{}\"];",
            dot_escape(follower_name)
        )
        .unwrap();
    }
    for a in 0..leader_actions.len() {
        for r in 0..follower_actions.len() {
            let profile = if leader == 0 {
                JointProfile::new(a, r)
            } else {
                JointProfile::new(r, a)
            };
            let (u_a, u_b) = profile_payoffs(scenario, profile)?;
            let (u_leader, u_follower) = if leader == 0 { (u_a, u_b) } else { (u_b, u_a) };
            writeln!(
                out,
                "  l{a}_{r} [shape=box, label=\"({}, {})\"];",
                format_value(u_leader, true),
                format_value(u_follower, true)
            )
            .unwrap();
        }
    }
    for (a, action) in leader_actions.iter().enumerate() {
        writeln!(out, "  root -> d{a} [label=\"{}\"];", dot_escape(action)).unwrap();
    }
    for a in 0..leader_actions.len() {
        for (r, action) in follower_actions.iter().enumerate() {
            writeln!(out, "  d{a} -> l{a}_{r} [label=\"{}\"];", dot_escape(action)).unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// One line per equilibrium cell, `(row label, col label): u_row,u_col`,
/// in row-major order; `none` when the set is empty.
pub fn describe_nash(game: &BimatrixGame, nash: &NashResult) -> String {
    if nash.is_empty() {
        return "none\n".to_string();
    }
    let mut out = String::new();
    for &(r, c) in nash.cells() {
        let (u, v) = game.cell(r, c);
        writeln!(
            out,
            "({}, {}): {},{}",
            game.row_labels()[r],
            game.col_labels()[c],
            format_value(u, true),
            format_value(v, true)
        )
        .unwrap();
    }
    out
}

/// Plain-text summary of a backward-induction outcome. Tied optima are
/// listed only when they exist.
pub fn describe_spe(scenario: &Scenario, spe: &SpeResult) -> String {
    let leader_spec = scenario.country(spe.leader);
    let follower_spec = scenario.country(1 - spe.leader);
    let mut out = String::new();
    writeln!(out, "leader: {}", leader_spec.name()).unwrap();
    writeln!(
        out,
        "leader action: {}",
        leader_spec.actions()[spe.leader_action]
    )
    .unwrap();
    writeln!(
        out,
        "follower best responses: {}",
        spe.follower_responses.label()
    )
    .unwrap();
    writeln!(
        out,
        "realized profile: ({}, {})",
        scenario.country(0).actions()[spe.realized.action_a],
        scenario.country(1).actions()[spe.realized.action_b]
    )
    .unwrap();
    writeln!(
        out,
        "payoffs: ({}, {})",
        format_value(spe.leader_payoff, true),
        format_value(spe.follower_payoff, true)
    )
    .unwrap();
    if spe.optimal_leader_actions.len() > 1 {
        let tied: Vec<&str> = spe
            .optimal_leader_actions
            .iter()
            .map(|&a| leader_spec.actions()[a].as_str())
            .collect();
        writeln!(out, "tied leader actions: {}", tied.join(", ")).unwrap();
    }
    for (a, responses) in spe.optimal_responses.iter().enumerate() {
        if responses.len() > 1 {
            let tied: Vec<&str> = responses
                .iter()
                .map(|&r| follower_spec.actions()[r].as_str())
                .collect();
            writeln!(
                out,
                "tied responses to {}: {}",
                leader_spec.actions()[a],
                tied.join(", ")
            )
            .unwrap();
        }
    }
    out
}

/// Renders a projection trajectory as CSV: header
/// `t,class_1,…,class_k,total`, one row per step.
pub fn render_trajectory(
    trajectory: &[PopulationVector],
    opts: &RenderOptions,
) -> Result<String, ReportError> {
    if opts.format != Format::Csv {
        return Err(unsupported("render_trajectory", opts.format));
    }
    let mut out = String::from("t");
    if let Some(first) = trajectory.first() {
        for i in 1..=first.len() {
            write!(out, ",class_{i}").unwrap();
        }
    }
    out.push_str(",total\n");
    for (t, state) in trajectory.iter().enumerate() {
        write!(out, "{t}").unwrap();
        for &v in state.as_slice() {
            write!(out, ",{}", format_value(v, opts.integer_snap)).unwrap();
        }
        writeln!(out, ",{}", format_value(state.total(), opts.integer_snap)).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::build_sequential_normal_form;

    fn table(leader: usize) -> BimatrixGame {
        build_sequential_normal_form(&Scenario::builtin_paper(), leader).unwrap()
    }

    #[test]
    fn bimatrix_csv_rows() {
        let text = render_bimatrix(&table(0), &RenderOptions::csv()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], ",SS,SS,SI,SI,IS,IS,II,II");
        assert_eq!(lines[1], "S,188,343,188,343,158,375,158,375");
        assert_eq!(lines[2], "I,230,328,140,285,230,328,140,285");
    }

    #[test]
    fn bimatrix_csv_leader_b_row_i() {
        let text = render_bimatrix(&table(1), &RenderOptions::csv()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[2], "I,375,158,285,140,375,158,285,140");
    }

    #[test]
    fn bimatrix_csv_single_cell() {
        let g = BimatrixGame::new(
            vec!["A1".into()],
            vec!["B1".into()],
            vec![vec![(0.0, 0.0)]],
        )
        .unwrap();
        let text = render_bimatrix(&g, &RenderOptions::csv()).unwrap();
        assert_eq!(text, ",B1,B1\nA1,0,0\n");
    }

    #[test]
    fn bimatrix_markdown() {
        let text = render_bimatrix(&table(0), &RenderOptions::markdown()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "|  | SS | SI | IS | II |");
        assert_eq!(lines[1], "| --- | --- | --- | --- | --- |");
        assert_eq!(lines[2], "| S | 188,343 | 188,343 | 158,375 | 158,375 |");
    }

    #[test]
    fn bimatrix_rejects_dot() {
        let err = render_bimatrix(
            &table(0),
            &RenderOptions {
                format: Format::Dot,
                integer_snap: true,
            },
        )
        .unwrap_err();
        assert_eq!(err.to_string(), "render_bimatrix cannot render dot");
    }

    #[test]
    fn csv_quotes_labels_with_commas() {
        let g = BimatrixGame::new(
            vec!["a,b".into()],
            vec!["c\"d".into()],
            vec![vec![(1.0, 2.0)]],
        )
        .unwrap();
        let text = render_bimatrix(&g, &RenderOptions::csv()).unwrap();
        assert_eq!(text, ",\"c\"\"d\",\"c\"\"d\"\n\"a,b\",1,2\n");
    }

    #[test]
    fn value_formatting() {
        assert_eq!(format_value(188.0, true), "188");
        assert_eq!(format_value(188.0000004, true), "188");
        assert_eq!(format_value(188.5, true), "188.5");
        assert_eq!(format_value(-0.0, true), "0");
        assert_eq!(format_value(0.2, false), "0.2");
        assert_eq!(format_value(188.0, false), "188");
    }

    #[test]
    fn tree_has_one_leaf_per_profile() {
        let dot = render_tree(&Scenario::builtin_paper(), 0).unwrap();
        assert_eq!(dot.matches("shape=box").count(), 4);
        for label in ["(188, 343)", "(158, 375)", "(230, 328)", "(140, 285)"] {
            assert!(dot.contains(label), "missing {label} in\n{dot}");
        }
    }

    #[test]
    fn tree_leader_b_leaf_under_i_then_s() {
        let dot = render_tree(&Scenario::builtin_paper(), 1).unwrap();
        // Leader B's second action is I (decision node d1); the
        // follower's S edge leads to leaf l1_0.
        assert!(dot.contains("l1_0 [shape=box, label=\"(375, 158)\"];"));
        assert!(dot.contains("root -> d1 [label=\"I\"];"));
        assert!(dot.contains("d1 -> l1_0 [label=\"S\"];"));
    }

    #[test]
    fn tree_with_single_actions_is_a_path() {
        let text = r#"{
            "age_classes": 1,
            "countries": [
                { "name": "A", "actions": ["go"], "initial": [1] },
                { "name": "B", "actions": ["go"], "initial": [1] }
            ],
            "effects": [{
                "profile": { "A": "go", "B": "go" },
                "dynamics": {
                    "A": { "fertilities": [1], "survivals": [], "immigration": [0] },
                    "B": { "fertilities": [1], "survivals": [], "immigration": [0] }
                }
            }]
        }"#;
        let s = Scenario::parse(text.as_bytes()).unwrap();
        let dot = render_tree(&s, 0).unwrap();
        assert_eq!(dot.matches("shape=box").count(), 1);
        assert_eq!(dot.matches("->").count(), 2);
    }

    #[test]
    fn tree_is_deterministic() {
        let a = render_tree(&Scenario::builtin_paper(), 0).unwrap();
        let b = render_tree(&Scenario::builtin_paper(), 0).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn trajectory_csv() {
        let traj = vec![
            PopulationVector::new(vec![30.0, 35.0, 25.0]).unwrap(),
            PopulationVector::new(vec![95.0, 6.0, 14.0]).unwrap(),
        ];
        let text = render_trajectory(&traj, &RenderOptions::csv()).unwrap();
        assert_eq!(text, "t,class_1,class_2,class_3,total\n0,30,35,25,90\n1,95,6,14,115\n");
    }

    #[test]
    fn trajectory_csv_zero_row() {
        let traj = vec![PopulationVector::new(vec![0.0, 0.0, 0.0]).unwrap()];
        let text = render_trajectory(&traj, &RenderOptions::csv()).unwrap();
        assert_eq!(text, "t,class_1,class_2,class_3,total\n0,0,0,0,0\n");
    }

    #[test]
    fn trajectory_rejects_markdown() {
        let traj = vec![PopulationVector::new(vec![1.0]).unwrap()];
        assert!(render_trajectory(&traj, &RenderOptions::markdown()).is_err());
    }
}
