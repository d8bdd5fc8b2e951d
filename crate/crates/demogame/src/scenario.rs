//! Scenario files: countries, their policy actions, and the per-policy
//! projection dynamics.
//!
//! A scenario names one or two countries, each with an initial
//! population and an ordered action list common to the whole game. For
//! every joint action profile the effect table supplies, per country,
//! the Leslie matrix and immigration vector in force while that profile
//! is played. Scenarios are read from and written to a JSON document;
//! serialization is canonical, so structurally equal scenarios produce
//! byte-identical output.

use std::collections::HashMap;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::leslie::{ImmigrationVector, LeslieError, LeslieMatrix, PopulationVector};

/// Errors from scenario construction, parsing, or validation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("age_classes must be at least 1")]
    NoAgeClasses,
    #[error("horizon must be at least 1")]
    BadHorizon,
    #[error("a scenario needs at least one country")]
    NoCountries,
    #[error("at most two countries are supported, got {0}")]
    TooManyCountries(usize),
    #[error("country name must be non-empty")]
    EmptyCountryName,
    #[error("duplicate country name \"{0}\"")]
    DuplicateCountry(String),
    #[error("country \"{country}\" declares no actions")]
    NoActions { country: String },
    #[error("country \"{country}\" has an empty action label")]
    EmptyActionLabel { country: String },
    #[error("country \"{country}\" declares action \"{label}\" more than once")]
    DuplicateAction { country: String, label: String },
    #[error("country \"{country}\": {field} has {found} entries, expected {expected}")]
    WrongLength {
        country: String,
        field: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("payoff_weights has {found} entries, expected {expected}")]
    WeightsLength { expected: usize, found: usize },
    #[error("payoff_weights entry {index} is not finite")]
    NonFiniteWeight { index: usize },
    #[error("country \"{country}\" initial population: {source}")]
    InvalidInitial {
        country: String,
        source: LeslieError,
    },
    #[error("effect entry {profile}, country \"{country}\": {source}")]
    InvalidDynamics {
        profile: String,
        country: String,
        source: LeslieError,
    },
    #[error("effect entry {entry} names unknown country \"{name}\"")]
    UnknownCountryInEffect { entry: usize, name: String },
    #[error("effect entry {entry} is missing country \"{name}\"")]
    MissingCountryInEffect { entry: usize, name: String },
    #[error("country \"{country}\" has no action \"{label}\"")]
    UnknownAction { country: String, label: String },
    #[error("effect table repeats profile {0}")]
    DuplicateProfile(String),
    #[error("effect table missing {}", format_missing(.0))]
    MissingProfiles(Vec<String>),
    #[error("effect entry has {found} profile entries, expected {expected}")]
    ProfileArity { expected: usize, found: usize },
    #[error("effect entry has {found} dynamics entries, expected {expected}")]
    DynamicsArity { expected: usize, found: usize },
    #[error("effect entry action index {index} is out of range for country \"{country}\"")]
    ActionIndexOutOfRange { country: String, index: usize },
}

fn format_missing(profiles: &[String]) -> String {
    let noun = if profiles.len() == 1 {
        "profile"
    } else {
        "profiles"
    };
    format!("{noun} {}", profiles.join(", "))
}

/// One country: display name, ordered action labels, initial population.
#[derive(Debug, Clone, PartialEq)]
pub struct CountrySpec {
    name: String,
    actions: Vec<String>,
    initial: PopulationVector,
}

impl CountrySpec {
    pub fn new(
        name: impl Into<String>,
        actions: Vec<String>,
        initial: PopulationVector,
    ) -> Result<Self, ScenarioError> {
        let name = name.into();
        if name.is_empty() {
            return Err(ScenarioError::EmptyCountryName);
        }
        if actions.is_empty() {
            return Err(ScenarioError::NoActions {
                country: name.clone(),
            });
        }
        for (i, label) in actions.iter().enumerate() {
            if label.is_empty() {
                return Err(ScenarioError::EmptyActionLabel {
                    country: name.clone(),
                });
            }
            if actions[..i].contains(label) {
                return Err(ScenarioError::DuplicateAction {
                    country: name.clone(),
                    label: label.clone(),
                });
            }
        }
        Ok(Self {
            name,
            actions,
            initial,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn actions(&self) -> &[String] {
        &self.actions
    }

    pub fn initial(&self) -> &PopulationVector {
        &self.initial
    }

    /// Index of an action label within this country's list.
    pub fn action_index(&self, label: &str) -> Option<usize> {
        self.actions.iter().position(|a| a == label)
    }
}

/// The dynamics one country experiences while a given joint profile is
/// in force: its effective Leslie matrix and net immigration.
#[derive(Debug, Clone, PartialEq)]
pub struct CountryDynamics {
    matrix: LeslieMatrix,
    immigration: ImmigrationVector,
}

impl CountryDynamics {
    pub fn new(matrix: LeslieMatrix, immigration: ImmigrationVector) -> Self {
        Self {
            matrix,
            immigration,
        }
    }

    pub fn matrix(&self) -> &LeslieMatrix {
        &self.matrix
    }

    pub fn immigration(&self) -> &ImmigrationVector {
        &self.immigration
    }
}

/// One row of the effect table: a joint action profile (one action
/// index per country, in country declaration order) and the dynamics it
/// induces for each country.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectEntry {
    profile: Vec<usize>,
    dynamics: Vec<CountryDynamics>,
}

impl EffectEntry {
    pub fn new(profile: Vec<usize>, dynamics: Vec<CountryDynamics>) -> Self {
        Self { profile, dynamics }
    }

    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    pub fn dynamics(&self, country: usize) -> &CountryDynamics {
        &self.dynamics[country]
    }
}

/// A full scenario: countries, horizon, optional payoff weights, and a
/// total effect table (every joint profile appears exactly once).
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    age_classes: usize,
    horizon: u32,
    payoff_weights: Option<Vec<f64>>,
    countries: Vec<CountrySpec>,
    effects: Vec<EffectEntry>,
}

impl Scenario {
    /// Validates and assembles a scenario. The effect table is checked
    /// for totality (a missing-profile error lists every absent
    /// profile) and stored sorted by profile, so equal scenarios
    /// compare and serialize identically regardless of input order.
    pub fn new(
        age_classes: usize,
        horizon: u32,
        payoff_weights: Option<Vec<f64>>,
        countries: Vec<CountrySpec>,
        mut effects: Vec<EffectEntry>,
    ) -> Result<Self, ScenarioError> {
        if age_classes == 0 {
            return Err(ScenarioError::NoAgeClasses);
        }
        if horizon == 0 {
            return Err(ScenarioError::BadHorizon);
        }
        if countries.is_empty() {
            return Err(ScenarioError::NoCountries);
        }
        if countries.len() > 2 {
            return Err(ScenarioError::TooManyCountries(countries.len()));
        }
        for (i, c) in countries.iter().enumerate() {
            if countries[..i].iter().any(|d| d.name == c.name) {
                return Err(ScenarioError::DuplicateCountry(c.name.clone()));
            }
            if c.initial.len() != age_classes {
                return Err(ScenarioError::WrongLength {
                    country: c.name.clone(),
                    field: "initial",
                    expected: age_classes,
                    found: c.initial.len(),
                });
            }
        }
        if let Some(w) = &payoff_weights {
            if w.len() != age_classes {
                return Err(ScenarioError::WeightsLength {
                    expected: age_classes,
                    found: w.len(),
                });
            }
            if let Some(i) = w.iter().position(|x| !x.is_finite()) {
                return Err(ScenarioError::NonFiniteWeight { index: i + 1 });
            }
        }

        let profile_label = |profile: &[usize]| -> String {
            let labels: Vec<&str> = profile
                .iter()
                .zip(&countries)
                .map(|(&a, c)| c.actions[a].as_str())
                .collect();
            format!("({})", labels.join(","))
        };

        for entry in &effects {
            if entry.profile.len() != countries.len() {
                return Err(ScenarioError::ProfileArity {
                    expected: countries.len(),
                    found: entry.profile.len(),
                });
            }
            if entry.dynamics.len() != countries.len() {
                return Err(ScenarioError::DynamicsArity {
                    expected: countries.len(),
                    found: entry.dynamics.len(),
                });
            }
            for (c, &action) in countries.iter().zip(&entry.profile) {
                if action >= c.actions.len() {
                    return Err(ScenarioError::ActionIndexOutOfRange {
                        country: c.name.clone(),
                        index: action,
                    });
                }
            }
            for (c, dyn_) in countries.iter().zip(&entry.dynamics) {
                if dyn_.matrix.classes() != age_classes {
                    return Err(ScenarioError::WrongLength {
                        country: c.name.clone(),
                        field: "fertilities",
                        expected: age_classes,
                        found: dyn_.matrix.classes(),
                    });
                }
                if dyn_.immigration.len() != age_classes {
                    return Err(ScenarioError::WrongLength {
                        country: c.name.clone(),
                        field: "immigration",
                        expected: age_classes,
                        found: dyn_.immigration.len(),
                    });
                }
            }
        }

        effects.sort_by(|a, b| a.profile.cmp(&b.profile));
        for pair in effects.windows(2) {
            if pair[0].profile == pair[1].profile {
                return Err(ScenarioError::DuplicateProfile(profile_label(
                    &pair[0].profile,
                )));
            }
        }

        // Totality: every point of the joint action space must appear.
        // Walk the cartesian product in lexicographic order (it matches
        // the sort order of the table) and note the gaps.
        let total: usize = countries.iter().map(|c| c.actions.len()).product();
        let mut missing = Vec::new();
        let mut have = effects.iter().peekable();
        let mut expected = vec![0usize; countries.len()];
        for _ in 0..total {
            match have.peek() {
                Some(e) if e.profile == expected => {
                    have.next();
                }
                _ => missing.push(profile_label(&expected)),
            }
            for i in (0..countries.len()).rev() {
                expected[i] += 1;
                if expected[i] < countries[i].actions.len() {
                    break;
                }
                expected[i] = 0;
            }
        }
        if !missing.is_empty() {
            return Err(ScenarioError::MissingProfiles(missing));
        }

        Ok(Self {
            age_classes,
            horizon,
            payoff_weights,
            countries,
            effects,
        })
    }

    /// Number of age classes shared by every vector and matrix.
    pub fn age_classes(&self) -> usize {
        self.age_classes
    }

    /// Number of projection intervals used when evaluating payoffs.
    pub fn horizon(&self) -> u32 {
        self.horizon
    }

    /// Per-class payoff weights, if any; `None` means plain totals.
    pub fn payoff_weights(&self) -> Option<&[f64]> {
        self.payoff_weights.as_deref()
    }

    pub fn countries(&self) -> &[CountrySpec] {
        &self.countries
    }

    pub fn country(&self, index: usize) -> &CountrySpec {
        &self.countries[index]
    }

    /// Index of a country by name.
    pub fn country_index(&self, name: &str) -> Option<usize> {
        self.countries.iter().position(|c| c.name == name)
    }

    /// Effect entries sorted by profile.
    pub fn effects(&self) -> &[EffectEntry] {
        &self.effects
    }

    /// The effect entry for a joint profile (action index per country).
    pub fn effect_for(&self, profile: &[usize]) -> Option<&EffectEntry> {
        self.effects
            .binary_search_by(|e| e.profile.as_slice().cmp(profile))
            .ok()
            .map(|i| &self.effects[i])
    }

    /// Renders a profile as `(label,label)` for messages.
    pub fn profile_label(&self, profile: &[usize]) -> String {
        let labels: Vec<&str> = profile
            .iter()
            .zip(&self.countries)
            .map(|(&a, c)| c.actions[a].as_str())
            .collect();
        format!("({})", labels.join(","))
    }

    /// Parses a scenario document (UTF-8 JSON) and validates every
    /// domain invariant, so a parsed scenario is always usable.
    pub fn parse(text: &[u8]) -> Result<Self, ScenarioError> {
        let raw: RawScenario = serde_json::from_slice(text).map_err(|e| {
            if e.classify() == serde_json::error::Category::Data {
                ScenarioError::Schema(e.to_string())
            } else {
                ScenarioError::Syntax {
                    line: e.line(),
                    column: e.column(),
                    message: e.to_string(),
                }
            }
        })?;
        raw.into_scenario()
    }

    /// Canonical serialization: fixed key order, countries in
    /// declaration order, effect entries sorted by profile. Structurally
    /// equal scenarios produce byte-identical documents.
    pub fn to_canonical_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&ScenarioDoc(self))
            .expect("scenario serialization cannot fail");
        out.push('\n');
        out
    }

    /// The built-in two-country example scenario: countries A and B
    /// with three age classes, actions S (invest in survival) and I
    /// (invest in immigration), and a one-interval horizon. Attracting
    /// immigrants diverts part of the inflow from the other country.
    pub fn builtin_paper() -> Self {
        let matrix = |f: &[f64], s: &[f64]| LeslieMatrix::new(f.to_vec(), s.to_vec()).unwrap();
        let la_0 = matrix(&[0.0, 2.0, 1.0], &[0.2, 0.4]);
        let la_s = matrix(&[0.0, 3.0, 1.0], &[0.4, 0.6]);
        let lb_0 = matrix(&[0.0, 5.0, 2.0], &[0.2, 0.4]);
        let lb_s = matrix(&[0.0, 6.0, 2.0], &[0.6, 0.8]);
        let flows = |v: &[f64]| ImmigrationVector::new(v.to_vec()).unwrap();
        let dyn_ = |m: &LeslieMatrix, v: &[f64]| CountryDynamics::new(m.clone(), flows(v));

        let countries = vec![
            CountrySpec::new(
                "A",
                vec!["S".into(), "I".into()],
                PopulationVector::new(vec![30.0, 35.0, 25.0]).unwrap(),
            )
            .unwrap(),
            CountrySpec::new(
                "B",
                vec!["S".into(), "I".into()],
                PopulationVector::new(vec![40.0, 30.0, 30.0]).unwrap(),
            )
            .unwrap(),
        ];

        let effects = vec![
            EffectEntry::new(
                vec![0, 0], // (S,S)
                vec![
                    dyn_(&la_s, &[5.0, 10.0, 10.0]),
                    dyn_(&lb_s, &[15.0, 20.0, 20.0]),
                ],
            ),
            EffectEntry::new(
                vec![0, 1], // (S,I)
                vec![
                    dyn_(&la_s, &[-5.0, 0.0, 0.0]),
                    dyn_(&lb_0, &[45.0, 50.0, 50.0]),
                ],
            ),
            EffectEntry::new(
                vec![1, 0], // (I,S)
                vec![
                    dyn_(&la_0, &[35.0, 40.0, 40.0]),
                    dyn_(&lb_s, &[10.0, 15.0, 15.0]),
                ],
            ),
            EffectEntry::new(
                vec![1, 1], // (I,I)
                vec![
                    dyn_(&la_0, &[5.0, 10.0, 10.0]),
                    dyn_(&lb_0, &[15.0, 20.0, 20.0]),
                ],
            ),
        ];

        Scenario::new(3, 1, None, countries, effects).expect("builtin scenario is valid")
    }
}

// ---------------------------------------------------------------------------
// JSON document mapping
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    age_classes: usize,
    #[serde(default)]
    horizon: Option<u32>,
    #[serde(default)]
    payoff_weights: Option<Vec<f64>>,
    countries: Vec<RawCountry>,
    effects: Vec<RawEffect>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCountry {
    name: String,
    actions: Vec<String>,
    initial: Vec<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEffect {
    profile: HashMap<String, String>,
    dynamics: HashMap<String, RawDynamics>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDynamics {
    fertilities: Vec<f64>,
    survivals: Vec<f64>,
    immigration: Vec<f64>,
}

impl RawScenario {
    fn into_scenario(self) -> Result<Scenario, ScenarioError> {
        let mut countries = Vec::with_capacity(self.countries.len());
        for raw in self.countries {
            let initial =
                PopulationVector::new(raw.initial).map_err(|source| ScenarioError::InvalidInitial {
                    country: raw.name.clone(),
                    source,
                })?;
            countries.push(CountrySpec::new(raw.name, raw.actions, initial)?);
        }

        let mut effects = Vec::with_capacity(self.effects.len());
        for (entry_no, raw) in self.effects.into_iter().enumerate() {
            let entry = entry_no + 1;
            for name in raw.profile.keys().chain(raw.dynamics.keys()) {
                if !countries.iter().any(|c| c.name() == name.as_str()) {
                    return Err(ScenarioError::UnknownCountryInEffect {
                        entry,
                        name: name.clone(),
                    });
                }
            }
            let mut profile = Vec::with_capacity(countries.len());
            for c in &countries {
                let label =
                    raw.profile
                        .get(c.name())
                        .ok_or_else(|| ScenarioError::MissingCountryInEffect {
                            entry,
                            name: c.name().to_string(),
                        })?;
                let action = c
                    .action_index(label)
                    .ok_or_else(|| ScenarioError::UnknownAction {
                        country: c.name().to_string(),
                        label: label.clone(),
                    })?;
                profile.push(action);
            }
            let profile_text = {
                let labels: Vec<&str> = profile
                    .iter()
                    .zip(&countries)
                    .map(|(&a, c)| c.actions()[a].as_str())
                    .collect();
                format!("({})", labels.join(","))
            };
            let mut dynamics = Vec::with_capacity(countries.len());
            for c in &countries {
                let raw_dyn =
                    raw.dynamics
                        .get(c.name())
                        .ok_or_else(|| ScenarioError::MissingCountryInEffect {
                            entry,
                            name: c.name().to_string(),
                        })?;
                let matrix = LeslieMatrix::new(
                    raw_dyn.fertilities.clone(),
                    raw_dyn.survivals.clone(),
                )
                .map_err(|source| ScenarioError::InvalidDynamics {
                    profile: profile_text.clone(),
                    country: c.name().to_string(),
                    source,
                })?;
                let immigration = ImmigrationVector::new(raw_dyn.immigration.clone()).map_err(
                    |source| ScenarioError::InvalidDynamics {
                        profile: profile_text.clone(),
                        country: c.name().to_string(),
                        source,
                    },
                )?;
                dynamics.push(CountryDynamics::new(matrix, immigration));
            }
            effects.push(EffectEntry::new(profile, dynamics));
        }

        Scenario::new(
            self.age_classes,
            self.horizon.unwrap_or(1),
            self.payoff_weights,
            countries,
            effects,
        )
    }
}

struct ScenarioDoc<'a>(&'a Scenario);

impl Serialize for ScenarioDoc<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let s = self.0;
        let entries = 4 + usize::from(s.payoff_weights.is_some());
        let mut map = serializer.serialize_map(Some(entries))?;
        map.serialize_entry("age_classes", &s.age_classes)?;
        map.serialize_entry("horizon", &s.horizon)?;
        if let Some(w) = &s.payoff_weights {
            map.serialize_entry("payoff_weights", w)?;
        }
        map.serialize_entry("countries", &CountriesDoc(s))?;
        map.serialize_entry("effects", &EffectsDoc(s))?;
        map.end()
    }
}

struct CountriesDoc<'a>(&'a Scenario);

impl Serialize for CountriesDoc<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.countries.len()))?;
        for c in &self.0.countries {
            seq.serialize_element(&CountryDoc(c))?;
        }
        seq.end()
    }
}

struct CountryDoc<'a>(&'a CountrySpec);

impl Serialize for CountryDoc<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("name", &self.0.name)?;
        map.serialize_entry("actions", &self.0.actions)?;
        map.serialize_entry("initial", self.0.initial.as_slice())?;
        map.end()
    }
}

struct EffectsDoc<'a>(&'a Scenario);

impl Serialize for EffectsDoc<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.effects.len()))?;
        for e in &self.0.effects {
            seq.serialize_element(&EffectDoc(self.0, e))?;
        }
        seq.end()
    }
}

struct EffectDoc<'a>(&'a Scenario, &'a EffectEntry);

impl Serialize for EffectDoc<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("profile", &ProfileDoc(self.0, self.1))?;
        map.serialize_entry("dynamics", &DynamicsDoc(self.0, self.1))?;
        map.end()
    }
}

struct ProfileDoc<'a>(&'a Scenario, &'a EffectEntry);

impl Serialize for ProfileDoc<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.countries.len()))?;
        for (c, &action) in self.0.countries.iter().zip(self.1.profile.iter()) {
            map.serialize_entry(c.name(), &c.actions()[action])?;
        }
        map.end()
    }
}

struct DynamicsDoc<'a>(&'a Scenario, &'a EffectEntry);

impl Serialize for DynamicsDoc<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.countries.len()))?;
        for (c, dyn_) in self.0.countries.iter().zip(self.1.dynamics.iter()) {
            map.serialize_entry(c.name(), &CountryDynamicsDoc(dyn_))?;
        }
        map.end()
    }
}

struct CountryDynamicsDoc<'a>(&'a CountryDynamics);

impl Serialize for CountryDynamicsDoc<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("fertilities", self.0.matrix.fertilities())?;
        map.serialize_entry("survivals", self.0.matrix.survivals())?;
        map.serialize_entry("immigration", self.0.immigration.as_slice())?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_scenario_shape() {
        let s = Scenario::builtin_paper();
        assert_eq!(s.age_classes(), 3);
        assert_eq!(s.horizon(), 1);
        assert_eq!(s.payoff_weights(), None);
        assert_eq!(s.countries().len(), 2);
        assert_eq!(s.country(0).name(), "A");
        assert_eq!(s.country(0).initial().as_slice(), &[30.0, 35.0, 25.0]);
        assert_eq!(s.country(1).initial().as_slice(), &[40.0, 30.0, 30.0]);
        assert_eq!(s.effects().len(), 4);
    }

    #[test]
    fn builtin_scenario_dynamics_under_mixed_profile() {
        let s = Scenario::builtin_paper();
        // A invests in survival, B in immigration: A keeps its survival
        // matrix but loses 5 thousand children to emigration.
        let e = s.effect_for(&[0, 1]).unwrap();
        let a = e.dynamics(0);
        assert_eq!(a.matrix().fertilities(), &[0.0, 3.0, 1.0]);
        assert_eq!(a.matrix().survivals(), &[0.4, 0.6]);
        assert_eq!(a.immigration().as_slice(), &[-5.0, 0.0, 0.0]);
        let b = e.dynamics(1);
        assert_eq!(b.matrix().fertilities(), &[0.0, 5.0, 2.0]);
        assert_eq!(b.immigration().as_slice(), &[45.0, 50.0, 50.0]);
    }

    #[test]
    fn round_trip_builtin() {
        let s = Scenario::builtin_paper();
        let text = s.to_canonical_json();
        let back = Scenario::parse(text.as_bytes()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn serialization_is_deterministic() {
        let a = Scenario::builtin_paper().to_canonical_json();
        let b = Scenario::builtin_paper().to_canonical_json();
        assert_eq!(a, b);
    }

    #[test]
    fn effect_order_does_not_matter() {
        let s = Scenario::builtin_paper();
        let mut shuffled: Vec<EffectEntry> = s.effects().to_vec();
        shuffled.reverse();
        let t = Scenario::new(3, 1, None, s.countries().to_vec(), shuffled).unwrap();
        assert_eq!(t, s);
        assert_eq!(t.to_canonical_json(), s.to_canonical_json());
    }

    #[test]
    fn missing_profile_is_reported() {
        let s = Scenario::builtin_paper();
        let mut effects: Vec<EffectEntry> = s.effects().to_vec();
        effects.retain(|e| e.profile() != [1, 1]);
        let err = Scenario::new(3, 1, None, s.countries().to_vec(), effects).unwrap_err();
        assert_eq!(err, ScenarioError::MissingProfiles(vec!["(I,I)".into()]));
        assert_eq!(err.to_string(), "effect table missing profile (I,I)");
    }

    #[test]
    fn several_missing_profiles_are_all_listed() {
        let s = Scenario::builtin_paper();
        let effects: Vec<EffectEntry> = s
            .effects()
            .iter()
            .filter(|e| e.profile()[0] == 0)
            .cloned()
            .collect();
        let err = Scenario::new(3, 1, None, s.countries().to_vec(), effects).unwrap_err();
        assert_eq!(
            err.to_string(),
            "effect table missing profiles (I,S), (I,I)"
        );
    }

    #[test]
    fn parse_rejects_survival_above_one() {
        let mut text = Scenario::builtin_paper().to_canonical_json();
        text = text.replace("0.4", "1.4");
        let err = Scenario::parse(text.as_bytes()).unwrap_err();
        match err {
            ScenarioError::InvalidDynamics { source, .. } => {
                assert!(matches!(source, LeslieError::SurvivalOutOfRange { .. }));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_reports_syntax_position() {
        let err = Scenario::parse(b"{ \"age_classes\": 3, ").unwrap_err();
        match err {
            ScenarioError::Syntax { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_names_unknown_fields() {
        let err = Scenario::parse(br#"{ "age_classes": 3, "bogus": 1 }"#).unwrap_err();
        match err {
            ScenarioError::Schema(msg) => assert!(msg.contains("bogus"), "{msg}"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_single_country_scenario() {
        let text = r#"{
            "age_classes": 2,
            "countries": [
                { "name": "X", "actions": ["grow"], "initial": [10, 5] }
            ],
            "effects": [
                {
                    "profile": { "X": "grow" },
                    "dynamics": {
                        "X": { "fertilities": [0, 2], "survivals": [0.5], "immigration": [1, 1] }
                    }
                }
            ]
        }"#;
        let s = Scenario::parse(text.as_bytes()).unwrap();
        assert_eq!(s.countries().len(), 1);
        assert_eq!(s.horizon(), 1);
        let back = Scenario::parse(s.to_canonical_json().as_bytes()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn unknown_action_in_profile_is_rejected() {
        let text = Scenario::builtin_paper()
            .to_canonical_json()
            .replacen(r#""A": "S""#, r#""A": "Z""#, 1);
        let err = Scenario::parse(text.as_bytes()).unwrap_err();
        assert_eq!(
            err,
            ScenarioError::UnknownAction {
                country: "A".into(),
                label: "Z".into()
            }
        );
    }

    #[test]
    fn weights_must_match_age_classes() {
        let s = Scenario::builtin_paper();
        let err = Scenario::new(
            3,
            1,
            Some(vec![1.0, 2.0]),
            s.countries().to_vec(),
            s.effects().to_vec(),
        )
        .unwrap_err();
        assert_eq!(
            err,
            ScenarioError::WeightsLength {
                expected: 3,
                found: 2
            }
        );
    }
}
