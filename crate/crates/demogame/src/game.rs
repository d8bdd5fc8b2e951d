//! The two-country policy game.
//!
//! Payoffs come from the projection engine: a country's payoff under a
//! joint action profile is its (weighted) total population after the
//! scenario horizon, using the Leslie matrix and immigration vector the
//! effect table assigns to that profile.
//!
//! When one country moves first, the other's pure strategies are
//! contingent plans — one response per leader action — so the sequential
//! game's normal form has `|follower actions| ^ |leader actions|`
//! columns. [`pure_nash`] enumerates equilibrium cells of any bimatrix
//! game, [`verify_equilibrium`] re-checks a single cell by exhaustive
//! deviation scan, and [`backward_induction`] computes the
//! subgame-perfect outcome directly from the tree.

use thiserror::Error;

use crate::leslie::{LeslieError, PopulationVector};
use crate::scenario::Scenario;

/// Errors from game construction and solving.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("game operations need exactly 2 countries, scenario has {0}")]
    NotTwoCountries(usize),
    #[error("country index {0} is out of range")]
    BadCountry(usize),
    #[error("action index {action} is out of range for country \"{country}\"")]
    BadAction { country: String, action: usize },
    #[error("no effect entry for profile {0}")]
    MissingEffect(String),
    #[error("cell ({row}, {col}) is out of range for a {rows}x{cols} game")]
    CellOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("payoff grid is {rows} rows x {cols} columns but labels give {label_rows} x {label_cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        label_rows: usize,
        label_cols: usize,
    },
    #[error("payoff at cell ({row}, {col}) is not finite")]
    NonFinitePayoff { row: usize, col: usize },
    #[error("projecting country \"{country}\": {source}")]
    Projection {
        country: String,
        source: LeslieError,
    },
}

/// One action per country, by index into each country's action list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JointProfile {
    pub action_a: usize,
    pub action_b: usize,
}

impl JointProfile {
    pub fn new(action_a: usize, action_b: usize) -> Self {
        Self { action_a, action_b }
    }
}

/// A follower's complete plan: one response for every leader action.
///
/// The label concatenates the response labels in leader-action order,
/// so with actions S and I on both sides the four plans read `SS`,
/// `SI`, `IS`, `II` — first letter the response to the leader's first
/// action, second letter the response to the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingentStrategy {
    responses: Vec<usize>,
    label: String,
}

impl ContingentStrategy {
    /// The follower action played when the leader picks `leader_action`.
    pub fn response_to(&self, leader_action: usize) -> usize {
        self.responses[leader_action]
    }

    pub fn responses(&self) -> &[usize] {
        &self.responses
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// All `|follower|^|leader|` contingent strategies, ordered
/// lexicographically by (response to leader action 1, response to
/// leader action 2, …) with follower actions in their declared order.
pub fn enumerate_follower_strategies(
    leader_actions: &[String],
    follower_actions: &[String],
) -> Vec<ContingentStrategy> {
    let l = leader_actions.len();
    let f = follower_actions.len();
    let count = f.pow(l as u32);
    let mut out = Vec::with_capacity(count);
    let mut responses = vec![0usize; l];
    for _ in 0..count {
        let label = responses
            .iter()
            .map(|&r| follower_actions[r].as_str())
            .collect::<String>();
        out.push(ContingentStrategy {
            responses: responses.clone(),
            label,
        });
        for i in (0..l).rev() {
            responses[i] += 1;
            if responses[i] < f {
                break;
            }
            responses[i] = 0;
        }
    }
    out
}

/// A two-player game in normal form. Each cell stores the payoff pair
/// `(u_row, u_col)` — row player first, column player second.
#[derive(Debug, Clone, PartialEq)]
pub struct BimatrixGame {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    cells: Vec<Vec<(f64, f64)>>,
}

impl BimatrixGame {
    /// Validates that the grid matches the labels and every payoff is
    /// finite.
    pub fn new(
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        cells: Vec<Vec<(f64, f64)>>,
    ) -> Result<Self, GameError> {
        let rows = cells.len();
        let cols = cells.first().map_or(0, Vec::len);
        if rows != row_labels.len()
            || cols != col_labels.len()
            || cells.iter().any(|r| r.len() != cols)
            || rows == 0
            || cols == 0
        {
            return Err(GameError::ShapeMismatch {
                rows,
                cols,
                label_rows: row_labels.len(),
                label_cols: col_labels.len(),
            });
        }
        for (i, row) in cells.iter().enumerate() {
            for (j, &(u, v)) in row.iter().enumerate() {
                if !u.is_finite() || !v.is_finite() {
                    return Err(GameError::NonFinitePayoff { row: i, col: j });
                }
            }
        }
        Ok(Self {
            row_labels,
            col_labels,
            cells,
        })
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells[0].len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    /// Payoff pair `(u_row, u_col)` at a cell; panics out of range.
    pub fn cell(&self, row: usize, col: usize) -> (f64, f64) {
        self.cells[row][col]
    }
}

/// The pure Nash equilibria of a bimatrix game, as (row, col) cells in
/// row-major order. The set is exhaustive: a cell is present exactly
/// when its row payoff is maximal in its column and its column payoff
/// is maximal in its row (ties count as maxima).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashResult {
    equilibria: Vec<(usize, usize)>,
}

impl NashResult {
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.equilibria
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.equilibria.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.equilibria.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equilibria.is_empty()
    }
}

/// Enumerates every pure Nash equilibrium cell of a bimatrix game.
///
/// Payoffs are compared exactly; equal payoffs tie and both count as
/// best responses.
pub fn pure_nash(game: &BimatrixGame) -> NashResult {
    let mut col_max = vec![f64::NEG_INFINITY; game.cols()];
    let mut row_max = vec![f64::NEG_INFINITY; game.rows()];
    for (r, best_for_row) in row_max.iter_mut().enumerate() {
        for (c, best_for_col) in col_max.iter_mut().enumerate() {
            let (u, v) = game.cell(r, c);
            if u > *best_for_col {
                *best_for_col = u;
            }
            if v > *best_for_row {
                *best_for_row = v;
            }
        }
    }
    let mut equilibria = Vec::new();
    for (r, &best_for_row) in row_max.iter().enumerate() {
        for (c, &best_for_col) in col_max.iter().enumerate() {
            let (u, v) = game.cell(r, c);
            if u == best_for_col && v == best_for_row {
                equilibria.push((r, c));
            }
        }
    }
    NashResult { equilibria }
}

/// Checks one cell by scanning every unilateral deviation: true iff no
/// row deviation strictly improves the row payoff and no column
/// deviation strictly improves the column payoff.
pub fn verify_equilibrium(game: &BimatrixGame, cell: (usize, usize)) -> Result<bool, GameError> {
    let (row, col) = cell;
    if row >= game.rows() || col >= game.cols() {
        return Err(GameError::CellOutOfRange {
            row,
            col,
            rows: game.rows(),
            cols: game.cols(),
        });
    }
    let (u, v) = game.cell(row, col);
    for r in 0..game.rows() {
        if game.cell(r, col).0 > u {
            return Ok(false);
        }
    }
    for c in 0..game.cols() {
        if game.cell(row, c).1 > v {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_two_countries(scenario: &Scenario) -> Result<(), GameError> {
    if scenario.countries().len() != 2 {
        return Err(GameError::NotTwoCountries(scenario.countries().len()));
    }
    Ok(())
}

fn weighted_total(weights: Option<&[f64]>, v: &PopulationVector) -> f64 {
    match weights {
        None => v.total(),
        Some(w) => w.iter().zip(v.as_slice()).map(|(a, b)| a * b).sum(),
    }
}

/// Both countries' payoffs under a joint profile: each country's
/// population is projected `horizon` steps under the profile's dynamics
/// (policies persist across intervals) and reduced to its weighted
/// total.
pub fn profile_payoffs(
    scenario: &Scenario,
    profile: JointProfile,
) -> Result<(f64, f64), GameError> {
    require_two_countries(scenario)?;
    for (country, action) in [(0, profile.action_a), (1, profile.action_b)] {
        if action >= scenario.country(country).actions().len() {
            return Err(GameError::BadAction {
                country: scenario.country(country).name().to_string(),
                action,
            });
        }
    }
    let key = [profile.action_a, profile.action_b];
    let entry = scenario
        .effect_for(&key)
        .ok_or_else(|| GameError::MissingEffect(scenario.profile_label(&key)))?;
    let mut totals = [0.0; 2];
    for (country, total) in totals.iter_mut().enumerate() {
        let spec = scenario.country(country);
        let dynamics = entry.dynamics(country);
        let mut state = spec.initial().clone();
        for _ in 0..scenario.horizon() {
            state = dynamics
                .matrix()
                .project_once(&state, Some(dynamics.immigration()))
                .map_err(|source| GameError::Projection {
                    country: spec.name().to_string(),
                    source,
                })?;
        }
        *total = weighted_total(scenario.payoff_weights(), &state);
    }
    Ok((totals[0], totals[1]))
}

/// Normal form of the sequential game where `leader` (country index)
/// moves first. Rows are the leader's actions; columns are the
/// follower's contingent strategies; a cell holds
/// `(u_leader, u_follower)` for the profile the pair realizes. Two
/// columns that respond identically to a row's action repeat that
/// row's cell.
pub fn build_sequential_normal_form(
    scenario: &Scenario,
    leader: usize,
) -> Result<BimatrixGame, GameError> {
    require_two_countries(scenario)?;
    if leader > 1 {
        return Err(GameError::BadCountry(leader));
    }
    let follower = 1 - leader;
    let leader_actions = scenario.country(leader).actions();
    let follower_actions = scenario.country(follower).actions();
    let strategies = enumerate_follower_strategies(leader_actions, follower_actions);

    let mut cells = Vec::with_capacity(leader_actions.len());
    for a in 0..leader_actions.len() {
        let mut row = Vec::with_capacity(strategies.len());
        for strategy in &strategies {
            let r = strategy.response_to(a);
            let profile = if leader == 0 {
                JointProfile::new(a, r)
            } else {
                JointProfile::new(r, a)
            };
            let (u_a, u_b) = profile_payoffs(scenario, profile)?;
            row.push(if leader == 0 { (u_a, u_b) } else { (u_b, u_a) });
        }
        cells.push(row);
    }
    BimatrixGame::new(
        leader_actions.to_vec(),
        strategies.into_iter().map(|s| s.label).collect(),
        cells,
    )
}

/// Normal form of the one-shot simultaneous game: rows are country A's
/// actions, columns country B's, and each cell holds the profile's
/// payoff pair.
pub fn build_simultaneous_normal_form(scenario: &Scenario) -> Result<BimatrixGame, GameError> {
    require_two_countries(scenario)?;
    let a_actions = scenario.country(0).actions();
    let b_actions = scenario.country(1).actions();
    let mut cells = Vec::with_capacity(a_actions.len());
    for a in 0..a_actions.len() {
        let mut row = Vec::with_capacity(b_actions.len());
        for b in 0..b_actions.len() {
            row.push(profile_payoffs(scenario, JointProfile::new(a, b))?);
        }
        cells.push(row);
    }
    BimatrixGame::new(a_actions.to_vec(), b_actions.to_vec(), cells)
}

/// Deterministic choice among tied optima in [`backward_induction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Pick the action that appears earliest in the country's list.
    #[default]
    LowestIndex,
    /// Pick the action that appears last in the country's list.
    HighestIndex,
}

impl TieBreak {
    fn pick(self, candidates: &[usize]) -> usize {
        match self {
            TieBreak::LowestIndex => candidates[0],
            TieBreak::HighestIndex => *candidates.last().expect("argmax set is non-empty"),
        }
    }
}

/// Subgame-perfect outcome of the sequential game.
///
/// `optimal_responses[a]` lists every follower action tied for best
/// against leader action `a`, and `optimal_leader_actions` every leader
/// action tied for best given the tie-broken responses; the chosen
/// `leader_action` and `follower_responses` follow the requested
/// [`TieBreak`]. Payoffs are ordered (leader, follower).
#[derive(Debug, Clone, PartialEq)]
pub struct SpeResult {
    pub leader: usize,
    pub leader_action: usize,
    pub follower_responses: ContingentStrategy,
    pub realized: JointProfile,
    pub leader_payoff: f64,
    pub follower_payoff: f64,
    pub optimal_leader_actions: Vec<usize>,
    pub optimal_responses: Vec<Vec<usize>>,
}

/// Solves the sequential game by backward induction: best follower
/// response at every node, then the leader's best action given those
/// responses.
pub fn backward_induction(
    scenario: &Scenario,
    leader: usize,
    tie_break: TieBreak,
) -> Result<SpeResult, GameError> {
    require_two_countries(scenario)?;
    if leader > 1 {
        return Err(GameError::BadCountry(leader));
    }
    let follower = 1 - leader;
    let leader_actions = scenario.country(leader).actions();
    let follower_actions = scenario.country(follower).actions();

    let payoff_pair = |a: usize, r: usize| -> Result<(f64, f64), GameError> {
        let profile = if leader == 0 {
            JointProfile::new(a, r)
        } else {
            JointProfile::new(r, a)
        };
        let (u_a, u_b) = profile_payoffs(scenario, profile)?;
        Ok(if leader == 0 { (u_a, u_b) } else { (u_b, u_a) })
    };

    let mut optimal_responses = Vec::with_capacity(leader_actions.len());
    let mut chosen_responses = Vec::with_capacity(leader_actions.len());
    for a in 0..leader_actions.len() {
        let mut best = f64::NEG_INFINITY;
        let mut argmax = Vec::new();
        for r in 0..follower_actions.len() {
            let (_, u_follower) = payoff_pair(a, r)?;
            if u_follower > best {
                best = u_follower;
                argmax.clear();
            }
            if u_follower == best {
                argmax.push(r);
            }
        }
        chosen_responses.push(tie_break.pick(&argmax));
        optimal_responses.push(argmax);
    }

    let mut best = f64::NEG_INFINITY;
    let mut optimal_leader_actions = Vec::new();
    for (a, &r) in chosen_responses.iter().enumerate() {
        let (u_leader, _) = payoff_pair(a, r)?;
        if u_leader > best {
            best = u_leader;
            optimal_leader_actions.clear();
        }
        if u_leader == best {
            optimal_leader_actions.push(a);
        }
    }
    let leader_action = tie_break.pick(&optimal_leader_actions);
    let response = chosen_responses[leader_action];
    let (leader_payoff, follower_payoff) = payoff_pair(leader_action, response)?;

    let label = chosen_responses
        .iter()
        .map(|&r| follower_actions[r].as_str())
        .collect::<String>();
    let realized = if leader == 0 {
        JointProfile::new(leader_action, response)
    } else {
        JointProfile::new(response, leader_action)
    };

    Ok(SpeResult {
        leader,
        leader_action,
        follower_responses: ContingentStrategy {
            responses: chosen_responses,
            label,
        },
        realized,
        leader_payoff,
        follower_payoff,
        optimal_leader_actions,
        optimal_responses,
    })
}
