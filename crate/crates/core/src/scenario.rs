//! JSON scenario files and suite manifests.
//!
//! A scenario file describes one experiment:
//!
//! ```json
//! {
//!   "label": "gadget",
//!   "m": 3,
//!   "network": {
//!     "nodes": ["i", "j", "p", "q"],
//!     "edges": [{"from": "j", "to": "i", "weight": "9/10"}, {"from": "p", "to": "i", "weight": "1/10"}]
//!   },
//!   "persistent": {"camps": {"plus": ["p"], "minus": ["q"], "rho": "x>y>z"}},
//!   "initial": {"i": "x>y>z", "j": "z>y>x"},
//!   "variant": {"kind": "S"}
//! }
//! ```
//!
//! Weights are exact `p/q` strings. With `"normalize": true` the edges are
//! read as an undirected, unweighted graph and every row becomes the random
//! walk over its neighbors. Pinned nodes without inputs get a unit self-loop.
//! Camps pin `plus` to `rho` and `minus` to its antipode and must cover every
//! pinned node. Pinned nodes may be omitted from `initial`; every free node
//! must appear there.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::dynamics::{PersistentConfig, Profile, Schedule, FIXED_POINT_BUDGET};
use crate::error::{Error, Result};
use crate::influence::InfluenceNetwork;
use crate::move_graph::{MoveGraph, StepPolicy};
use crate::preference::{Alternative, Notation, OrderId, PreferenceSpace};
use crate::rational::{int, parse_rational, Rational};
use crate::theorems::{
    self, ForcedOptions, ScenarioConfig, Status, VerificationOutcome, DEFAULT_MAX_STEPS,
};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(default)]
    pub label: Option<String>,
    pub m: usize,
    #[serde(default)]
    pub alternatives: Option<Vec<char>>,
    pub network: NetworkSpec,
    #[serde(default)]
    pub persistent: PersistentSpec,
    #[serde(default)]
    pub initial: BTreeMap<String, String>,
    #[serde(default)]
    pub variant: VariantSpec,
    #[serde(default)]
    pub policy: PolicySpec,
    #[serde(default)]
    pub max_steps: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkSpec {
    pub nodes: Vec<String>,
    pub edges: Vec<EdgeSpec>,
    #[serde(default)]
    pub normalize: bool,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub from: String,
    pub to: String,
    #[serde(default)]
    pub weight: Option<String>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PersistentSpec {
    #[serde(default)]
    pub pins: Vec<PinSpec>,
    #[serde(default)]
    pub camps: Option<CampsSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PinSpec {
    pub node: String,
    pub order: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampsSpec {
    pub plus: Vec<String>,
    pub minus: Vec<String>,
    pub rho: String,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum VariantSpec {
    #[default]
    S,
    /// `seq:[i, j, ...]` (node names or indices) or `uniform:<seed>`.
    A { schedule: String },
}

#[derive(Clone, Copy, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicySpec {
    #[serde(default)]
    pub no_move_on_ambiguity: bool,
}

/// Move graphs shared between scenarios with the same alternatives.
#[derive(Default)]
pub struct GraphCache {
    graphs: HashMap<(usize, Option<Vec<char>>), Arc<MoveGraph>>,
}

impl GraphCache {
    pub fn get(&mut self, m: usize, names: Option<&[char]>) -> Result<Arc<MoveGraph>> {
        let key = (m, names.map(<[char]>::to_vec));
        if let Some(g) = self.graphs.get(&key) {
            return Ok(g.clone());
        }
        let mut space = PreferenceSpace::new(m)?;
        if let Some(names) = names {
            if names.len() != m {
                return Err(Error::parse(
                    "alternatives",
                    format!("{} names for m = {m}", names.len()),
                ));
            }
            space = space.with_notation(
                Notation::custom(names.to_vec())
                    .map_err(|e| Error::parse("alternatives", e.to_string()))?,
            )?;
        }
        let g = Arc::new(MoveGraph::from_space(space)?);
        self.graphs.insert(key, g.clone());
        Ok(g)
    }
}

fn deserialize<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::parse(
            if path.is_empty() { ".".into() } else { path },
            e.into_inner().to_string(),
        )
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn parse_scenario(
    text: &str,
    default_label: &str,
    cache: &mut GraphCache,
) -> Result<ScenarioConfig> {
    let file: ScenarioFile = deserialize(text)?;
    file.into_config(default_label, cache)
}

/// Reads a scenario file; the label defaults to the file stem.
pub fn load_scenario(path: &Path, cache: &mut GraphCache) -> Result<ScenarioConfig> {
    let text = read(path)?;
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("scenario");
    parse_scenario(&text, stem, cache).map_err(|e| match e {
        Error::Parse {
            path: field,
            message,
        } => Error::parse(format!("{}: {field}", path.display()), message),
        other => other,
    })
}

impl ScenarioFile {
    pub fn into_config(
        self,
        default_label: &str,
        cache: &mut GraphCache,
    ) -> Result<ScenarioConfig> {
        let graph = cache.get(self.m, self.alternatives.as_deref())?;
        let space = graph.space();
        let names = self.network.nodes.clone();
        let n = names.len();
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(Error::parse(
                    format!("network.nodes[{i}]"),
                    format!("duplicate node `{name}`"),
                ));
            }
        }
        let node = |field: String, name: &str| -> Result<usize> {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::parse(field, format!("unknown node `{name}`")))
        };
        let order = |field: String, text: &str| -> Result<OrderId> {
            space
                .parse(text)
                .map_err(|e| Error::parse(field, e.to_string()))
        };

        let mut pins: BTreeMap<usize, OrderId> = BTreeMap::new();
        for (k, pin) in self.persistent.pins.iter().enumerate() {
            let v = node(format!("persistent.pins[{k}].node"), &pin.node)?;
            pins.insert(v, order(format!("persistent.pins[{k}].order"), &pin.order)?);
        }
        let mut camps = None;
        if let Some(c) = &self.persistent.camps {
            let rho = order("persistent.camps.rho".into(), &c.rho)?;
            let anti = space.antipode(rho);
            let mut side = |list: &[String], field: &str, state: OrderId| -> Result<Vec<usize>> {
                let mut out = Vec::new();
                for (k, name) in list.iter().enumerate() {
                    let path = format!("persistent.camps.{field}[{k}]");
                    let v = node(path.clone(), name)?;
                    if pins.insert(v, state).is_some_and(|old| old != state) {
                        return Err(Error::parse(
                            path,
                            format!("`{name}` is pinned to another order"),
                        ));
                    }
                    out.push(v);
                }
                Ok(out)
            };
            let plus = side(&c.plus, "plus", rho)?;
            let minus = side(&c.minus, "minus", anti)?;
            camps = Some((plus, minus, rho));
        }

        let network = if self.network.normalize {
            let mut edges = Vec::new();
            for (k, e) in self.network.edges.iter().enumerate() {
                if e.weight.is_some() {
                    return Err(Error::parse(
                        format!("network.edges[{k}].weight"),
                        "weights are not allowed with normalize",
                    ));
                }
                edges.push((
                    node(format!("network.edges[{k}].from"), &e.from)?,
                    node(format!("network.edges[{k}].to"), &e.to)?,
                ));
            }
            InfluenceNetwork::normalize_random_walk(names.clone(), &edges)?
        } else {
            let mut arcs: Vec<(usize, usize, Rational)> = Vec::new();
            for (k, e) in self.network.edges.iter().enumerate() {
                let field = format!("network.edges[{k}].weight");
                let text = e
                    .weight
                    .as_deref()
                    .ok_or_else(|| Error::parse(field.clone(), "missing weight"))?;
                let w = parse_rational(text).map_err(|msg| Error::parse(field, msg))?;
                arcs.push((
                    node(format!("network.edges[{k}].from"), &e.from)?,
                    node(format!("network.edges[{k}].to"), &e.to)?,
                    w,
                ));
            }
            for &v in pins.keys() {
                if !arcs.iter().any(|&(_, to, _)| to == v) {
                    arcs.push((v, v, int(1)));
                }
            }
            InfluenceNetwork::from_arcs(names.clone(), &arcs)
                .map_err(|e| Error::parse("network.edges", e.to_string()))?
        };

        let persistent = match camps {
            Some((plus, minus, rho)) => {
                let pc = PersistentConfig::contrarian(space, plus, minus, rho)
                    .map_err(|e| Error::parse("persistent.camps", e.to_string()))?;
                if let Some(v) = pins.keys().find(|v| !pc.is_pinned(**v)) {
                    return Err(Error::parse(
                        "persistent.pins",
                        format!("`{}` is pinned outside the camps", names[*v]),
                    ));
                }
                pc
            }
            None => PersistentConfig::pinned(pins.clone()),
        };

        let mut states = vec![None; n];
        for (name, text) in &self.initial {
            let v = node(format!("initial.{name}"), name)?;
            let s = order(format!("initial.{name}"), text)?;
            if persistent.pin(v).is_some_and(|p| p != s) {
                return Err(Error::parse(
                    format!("initial.{name}"),
                    "initial state differs from the pin",
                ));
            }
            states[v] = Some(s);
        }
        let mut profile = Vec::with_capacity(n);
        for (v, s) in states.into_iter().enumerate() {
            match s.or(persistent.pin(v)) {
                Some(s) => profile.push(s),
                None => {
                    return Err(Error::parse(
                        format!("initial.{}", names[v]),
                        "missing initial state for a free node",
                    ))
                }
            }
        }

        let schedule = match &self.variant {
            VariantSpec::S => Schedule::Synchronous,
            VariantSpec::A { schedule } => parse_schedule(schedule, &index)?,
        };
        let label = self
            .label
            .clone()
            .unwrap_or_else(|| default_label.to_string());
        let policy = StepPolicy {
            allow_no_move_on_ambiguity: self.policy.no_move_on_ambiguity,
            ..StepPolicy::default()
        };
        Ok(
            ScenarioConfig::new(label, graph.clone(), network, persistent, Profile(profile))?
                .with_schedule(schedule)
                .with_policy(policy)
                .with_max_steps(self.max_steps.unwrap_or(DEFAULT_MAX_STEPS)),
        )
    }
}

fn parse_schedule(text: &str, index: &HashMap<&str, usize>) -> Result<Schedule> {
    let field = "variant.schedule";
    let text = text.trim();
    if let Some(seed) = text.strip_prefix("uniform:") {
        let seed = seed
            .trim()
            .parse::<u64>()
            .map_err(|e| Error::parse(field, format!("bad seed: {e}")))?;
        return Ok(Schedule::SeededUniform(seed));
    }
    let Some(list) = text.strip_prefix("seq:") else {
        return Err(Error::parse(
            field,
            "expected `seq:[...]` or `uniform:<seed>`",
        ));
    };
    let inner = list
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::parse(field, "sequence must be bracketed"))?;
    inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|tok| {
            index
                .get(tok)
                .copied()
                .or_else(|| tok.parse().ok())
                .ok_or_else(|| Error::parse(field, format!("unknown node `{tok}`")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Schedule::Sequence)
}

// Suites

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteManifest {
    pub name: String,
    pub entries: Vec<SuiteEntry>,
}

/// One verifier run. `scenario` is resolved relative to the manifest.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteEntry {
    pub label: String,
    pub scenario: String,
    pub check: Check,
    #[serde(default)]
    pub expect: Expectation,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "verifier", rename_all = "snake_case", deny_unknown_fields)]
pub enum Check {
    TravelingWave {
        expected_k: usize,
    },
    ForcedEvenPeriod {
        #[serde(default = "yes")]
        sweep: bool,
    },
    EvenPeriodLifting {
        #[serde(default)]
        sweep: bool,
    },
    Robustness {
        trials: usize,
        seed: u64,
        #[serde(default)]
        epsilon: Option<String>,
    },
    UnreachablePersistence {
        alt_pins: BTreeMap<String, String>,
    },
    SinglePeakedInvariance {
        /// Alternative names from left to right, e.g. `"xyz"`.
        axis: String,
    },
    VariantContrast {
        runs: usize,
        seed: u64,
    },
}

fn yes() -> bool {
    true
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    #[default]
    Pass,
    /// Any outcome other than a pass.
    Fail,
    HypothesisNotMet,
    NotCertifiable,
}

impl Expectation {
    pub fn matches(self, status: Status) -> bool {
        match self {
            Expectation::Pass => status == Status::Passed,
            Expectation::Fail => status != Status::Passed,
            Expectation::HypothesisNotMet => status == Status::HypothesisNotMet,
            Expectation::NotCertifiable => status == Status::NotCertifiable,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub entry: String,
    pub expect: Expectation,
    pub as_expected: bool,
    pub outcome: VerificationOutcome,
}

pub fn load_suite(path: &Path) -> Result<SuiteManifest> {
    let text = read(path)?;
    deserialize(&text).map_err(|e| match e {
        Error::Parse {
            path: field,
            message,
        } => Error::parse(format!("{}: {field}", path.display()), message),
        other => other,
    })
}

fn axis_of(space: &PreferenceSpace, text: &str) -> Result<Vec<usize>> {
    let notation = space.notation();
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| {
            (0..space.m())
                .find(|&a| notation.name(Alternative(a as u8)) == c)
                .ok_or_else(|| Error::parse("check.axis", format!("unknown alternative `{c}`")))
        })
        .collect()
}

pub fn run_check(sc: &ScenarioConfig, check: &Check) -> Result<VerificationOutcome> {
    match check {
        Check::TravelingWave { expected_k } => theorems::verify_traveling_wave(sc, *expected_k),
        Check::ForcedEvenPeriod { sweep } => theorems::verify_forced_even_period(
            sc,
            ForcedOptions {
                sweep: *sweep,
                budget: FIXED_POINT_BUDGET,
            },
        ),
        Check::EvenPeriodLifting { sweep } => {
            theorems::verify_even_period_lifting(sc, sweep.then_some(FIXED_POINT_BUDGET))
        }
        Check::Robustness {
            trials,
            seed,
            epsilon,
        } => {
            let eps = epsilon
                .as_deref()
                .map(|t| parse_rational(t).map_err(|msg| Error::parse("check.epsilon", msg)))
                .transpose()?;
            theorems::verify_robustness_at(sc, *trials, *seed, eps)
        }
        Check::UnreachablePersistence { alt_pins } => {
            let mut pins = BTreeMap::new();
            for (name, text) in alt_pins {
                let field = format!("check.alt_pins.{name}");
                let v = sc
                    .network
                    .names()
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| Error::parse(field.clone(), "unknown node"))?;
                pins.insert(
                    v,
                    sc.space()
                        .parse(text)
                        .map_err(|e| Error::parse(field, e.to_string()))?,
                );
            }
            theorems::verify_unreachable_persistence(sc, &pins)
        }
        Check::SinglePeakedInvariance { axis } => {
            theorems::verify_single_peaked_invariance(sc, &axis_of(sc.space(), axis)?)
        }
        Check::VariantContrast { runs, seed } => {
            theorems::verify_variant_contrast(sc, *runs, *seed)
        }
    }
}

/// Runs every entry of the manifest at `path`, in order.
pub fn run_suite(path: &Path) -> Result<Vec<SuiteResult>> {
    let manifest = load_suite(path)?;
    let base: PathBuf = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let mut cache = GraphCache::default();
    let mut seen = std::collections::HashSet::new();
    let mut results = Vec::with_capacity(manifest.entries.len());
    for (k, entry) in manifest.entries.iter().enumerate() {
        if !seen.insert(entry.label.as_str()) {
            return Err(Error::parse(
                format!("entries[{k}].label"),
                format!("duplicate label `{}`", entry.label),
            ));
        }
        let sc =
            load_scenario(&base.join(&entry.scenario), &mut cache)?.with_label(entry.label.clone());
        let outcome = run_check(&sc, &entry.check)?;
        results.push(SuiteResult {
            entry: entry.label.clone(),
            expect: entry.expect,
            as_expected: entry.expect.matches(outcome.status),
            outcome,
        });
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn parse(text: &str) -> Result<ScenarioConfig> {
        parse_scenario(text, "inline", &mut GraphCache::default())
    }

    const PAIR: &str = r#"{
        "m": 3,
        "network": {"nodes": ["a", "b"], "edges": [{"from": "b", "to": "a", "weight": "1/3"}, {"from": "a", "to": "a", "weight": "2/3"}]},
        "persistent": {"pins": [{"node": "b", "order": "z>y>x"}]},
        "initial": {"a": "x>y>z"}
    }"#;

    fn field(e: Error) -> String {
        match e {
            Error::Parse { path, .. } => path,
            other => panic!("expected a parse error, got {other}"),
        }
    }

    #[test]
    fn pins_get_self_loops_and_fill_initial() {
        let sc = parse(PAIR).unwrap();
        assert_eq!(sc.label, "inline");
        assert_eq!(sc.network.weight(0, 1), ratio(1, 3));
        assert_eq!(sc.network.weight(1, 1), ratio(1, 1));
        assert_eq!(sc.initial.to_text(sc.space()), ["x>y>z", "z>y>x"]);
        assert_eq!(sc.schedule, Schedule::Synchronous);
    }

    #[test]
    fn decimal_weights_are_rejected_with_their_field() {
        let text = PAIR.replace("\"1/3\"", "\"0.33\"");
        assert_eq!(field(parse(&text).unwrap_err()), "network.edges[0].weight");
    }

    #[test]
    fn structural_errors_name_the_field() {
        let text = PAIR.replace("\"from\": \"b\"", "\"source\": \"b\"");
        assert!(field(parse(&text).unwrap_err()).starts_with("network.edges[0]"));
        let text = PAIR.replace("\"m\": 3", "\"m\": \"three\"");
        assert_eq!(field(parse(&text).unwrap_err()), "m");
    }

    #[test]
    fn semantic_errors_name_the_field() {
        assert_eq!(
            field(parse(&PAIR.replace("\"a\": \"x>y>z\"", "\"a\": \"x>q\"")).unwrap_err()),
            "initial.a"
        );
        assert_eq!(
            field(
                parse(&PAIR.replace("\"initial\": {\"a\": \"x>y>z\"}", "\"initial\": {}"))
                    .unwrap_err()
            ),
            "initial.a"
        );
        assert_eq!(
            field(
                parse(&PAIR.replace(
                    "\"to\": \"a\", \"weight\": \"2/3\"",
                    "\"to\": \"c\", \"weight\": \"2/3\""
                ))
                .unwrap_err()
            ),
            "network.edges[1].to"
        );
        assert_eq!(
            field(
                parse(&PAIR.replace(
                    "\"initial\": {\"a\": \"x>y>z\"}",
                    "\"initial\": {\"a\": \"x>y>z\", \"b\": \"x>y>z\"}"
                ))
                .unwrap_err()
            ),
            "initial.b"
        );
    }

    #[test]
    fn rows_must_be_stochastic() {
        let err = parse(&PAIR.replace("\"2/3\"", "\"1/3\"")).unwrap_err();
        assert_eq!(field(err), "network.edges");
    }

    #[test]
    fn normalized_graphs_take_no_weights() {
        let text = r#"{"m": 2, "network": {"nodes": ["a", "b"], "edges": [{"from": "a", "to": "b"}], "normalize": true},
                       "initial": {"a": "x>y", "b": "(xy)"}}"#;
        let sc = parse(text).unwrap();
        assert_eq!(sc.network.weight(0, 1), ratio(1, 1));
        let weighted = text.replace("\"to\": \"b\"", "\"to\": \"b\", \"weight\": \"1\"");
        assert_eq!(
            field(parse(&weighted).unwrap_err()),
            "network.edges[0].weight"
        );
    }

    #[test]
    fn camps_must_cover_every_pin() {
        let text = r#"{"m": 3, "network": {"nodes": ["a", "p", "q", "r"], "edges": [
            {"from": "p", "to": "a", "weight": "1/2"}, {"from": "q", "to": "a", "weight": "1/2"},
            {"from": "r", "to": "r", "weight": "1"}]},
            "persistent": {"camps": {"plus": ["p"], "minus": ["q"], "rho": "x>y>z"}, "pins": [{"node": "r", "order": "x>y>z"}]},
            "initial": {"a": "(xyz)"}}"#;
        assert_eq!(field(parse(text).unwrap_err()), "persistent.pins");
        let ok = text
            .replace(", \"pins\": [{\"node\": \"r\", \"order\": \"x>y>z\"}]", "")
            .replace(
                "\"initial\": {\"a\": \"(xyz)\"}",
                "\"initial\": {\"a\": \"(xyz)\", \"r\": \"x>y>z\"}",
            );
        let sc = parse(&ok).unwrap();
        assert_eq!(
            sc.persistent.camps().unwrap().rho,
            sc.space().parse("x>y>z").unwrap()
        );
        assert_eq!(sc.initial[2], sc.space().parse("z>y>x").unwrap());
    }

    #[test]
    fn schedules() {
        let index: HashMap<&str, usize> = [("a", 0), ("b", 1)].into();
        assert_eq!(
            parse_schedule("seq:[a, b, 1]", &index).unwrap(),
            Schedule::Sequence(vec![0, 1, 1])
        );
        assert_eq!(
            parse_schedule("uniform:42", &index).unwrap(),
            Schedule::SeededUniform(42)
        );
        assert!(parse_schedule("seq:a,b", &index).is_err());
        assert!(parse_schedule("random", &index).is_err());
        assert!(parse_schedule("seq:[c]", &index).is_err());
    }

    #[test]
    fn custom_alternative_names() {
        let text = r#"{"m": 3, "alternatives": ["a", "b", "c"], "network": {"nodes": ["n"], "edges": [{"from": "n", "to": "n", "weight": "1"}]},
                       "initial": {"n": "c>(ab)"}}"#;
        let sc = parse(text).unwrap();
        assert_eq!(sc.space().format(sc.initial[0]), "c>(ab)");
        assert_eq!(axis_of(sc.space(), "bac").unwrap(), [1, 0, 2]);
        assert!(axis_of(sc.space(), "xyz").is_err());
    }

    #[test]
    fn expectations() {
        assert!(Expectation::Pass.matches(Status::Passed));
        assert!(!Expectation::Pass.matches(Status::Failed));
        assert!(Expectation::Fail.matches(Status::HypothesisNotMet));
        assert!(!Expectation::Fail.matches(Status::Passed));
        assert!(Expectation::NotCertifiable.matches(Status::NotCertifiable));
        assert!(!Expectation::HypothesisNotMet.matches(Status::Failed));
    }

    #[test]
    fn unknown_verifier_is_an_input_error() {
        let text = r#"{"name": "x", "entries": [{"label": "a", "scenario": "a.json", "check": {"verifier": "magic"}}]}"#;
        let err = deserialize::<SuiteManifest>(text).unwrap_err();
        assert!(field(err).starts_with("entries[0].check"));
    }
}
