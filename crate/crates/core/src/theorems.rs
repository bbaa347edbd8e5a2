//! Scenario builders and verifiers for the constructive results.
//!
//! Every verifier re-derives its hypotheses from the scenario it is handed,
//! runs the dynamics and returns a [`VerificationOutcome`]. Outcomes that do
//! not pass always carry a [`Counterexample`] naming the scenario, its
//! initial profile and the step at which the mismatch was observed.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::dynamics::{
    BordaSystem, OrbitReport, PersistentConfig, Profile, Schedule, FIXED_POINT_BUDGET,
};
use crate::error::{Error, Result};
use crate::influence::{default_names, InfluenceNetwork};
use crate::move_graph::{MoveGraph, StepPolicy};
use crate::preference::{OrderId, PreferenceSpace, WeakOrder};
use crate::rational::{format_rational, int, ratio, Margin, Rational};

pub const DEFAULT_MAX_STEPS: usize = 100_000;

/// One experiment: network, boundary conditions, initial profile and
/// update schedule over a shared move graph.
#[derive(Clone, Debug)]
pub struct ScenarioConfig {
    pub label: String,
    pub graph: Arc<MoveGraph>,
    pub network: InfluenceNetwork,
    pub persistent: PersistentConfig,
    pub initial: Profile,
    pub schedule: Schedule,
    pub policy: StepPolicy,
    pub max_steps: usize,
}

impl ScenarioConfig {
    /// Synchronous scenario with the default policy. Fails if the pins or
    /// the initial profile are inconsistent with the network.
    pub fn new(
        label: impl Into<String>,
        graph: Arc<MoveGraph>,
        network: InfluenceNetwork,
        persistent: PersistentConfig,
        initial: Profile,
    ) -> Result<Self> {
        let sc = Self {
            label: label.into(),
            graph,
            network,
            persistent,
            initial,
            schedule: Schedule::Synchronous,
            policy: StepPolicy::default(),
            max_steps: DEFAULT_MAX_STEPS,
        };
        sc.system()?.check_profile(&sc.initial)?;
        Ok(sc)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_schedule(mut self, schedule: Schedule) -> Self {
        self.schedule = schedule;
        self
    }

    pub fn with_policy(mut self, policy: StepPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn with_max_steps(mut self, max_steps: usize) -> Self {
        self.max_steps = max_steps;
        self
    }

    /// Same scenario started from another profile.
    pub fn with_initial(&self, initial: Profile) -> Result<Self> {
        self.system()?.check_profile(&initial)?;
        Ok(Self {
            initial,
            ..self.clone()
        })
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn n(&self) -> usize {
        self.network.n()
    }

    pub fn space(&self) -> &PreferenceSpace {
        self.graph.space()
    }

    pub fn system(&self) -> Result<BordaSystem<'_>> {
        BordaSystem::new(&self.network, &self.graph, self.policy, &self.persistent)
    }

    pub fn run(&self) -> Result<OrbitReport> {
        self.run_from(&self.initial)
    }

    pub fn run_from(&self, initial: &Profile) -> Result<OrbitReport> {
        self.system()?
            .run_until_cycle(initial, &self.schedule, self.max_steps)
    }

    fn texts(&self, profile: &Profile) -> Vec<String> {
        profile.to_text(self.space())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    HypothesisNotMet,
    NotCertifiable,
}

/// Replayable witness of a non-passing outcome: rerun `scenario` from
/// `initial` and inspect step `step`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub scenario: String,
    pub initial: Vec<String>,
    pub step: usize,
    pub state: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub label: String,
    pub verifier: String,
    pub claim: String,
    pub status: Status,
    pub passed: bool,
    pub evidence: Map<String, Value>,
    pub counterexample: Option<Counterexample>,
}

impl VerificationOutcome {
    fn open(verifier: &str, claim: &str, sc: &ScenarioConfig) -> Self {
        Self {
            label: sc.label.clone(),
            verifier: verifier.into(),
            claim: claim.into(),
            status: Status::Passed,
            passed: true,
            evidence: Map::new(),
            counterexample: None,
        }
    }

    fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.evidence.insert(key.into(), value.into());
    }

    fn close(mut self, status: Status, counterexample: Option<Counterexample>) -> Self {
        debug_assert!(status == Status::Passed || counterexample.is_some());
        self.passed = status == Status::Passed;
        self.status = status;
        self.counterexample = counterexample;
        self
    }

    fn pass(self) -> Self {
        self.close(Status::Passed, None)
    }

    fn reject(self, status: Status, cex: Counterexample) -> Self {
        self.close(status, Some(cex))
    }
}

fn counterexample(
    sc: &ScenarioConfig,
    initial: &Profile,
    step: usize,
    state: &Profile,
    detail: impl Into<String>,
) -> Counterexample {
    Counterexample {
        scenario: sc.label.clone(),
        initial: sc.texts(initial),
        step,
        state: sc.texts(state),
        detail: detail.into(),
    }
}

fn at_start(sc: &ScenarioConfig, detail: impl Into<String>) -> Counterexample {
    counterexample(sc, &sc.initial, 0, &sc.initial, detail)
}

fn margin_text(margin: &Margin) -> String {
    margin.to_text()
}

/// A margin certifies robustness only when it is strictly positive.
pub fn margin_certifies(margin: &Margin) -> bool {
    margin.is_positive()
}

// Traveling waves

/// Directed `length`-cycle where every node copies its predecessor, started
/// with node `i` at `cycle[i mod k]`.
pub fn build_traveling_wave(
    graph: Arc<MoveGraph>,
    length: usize,
    cycle: &[OrderId],
) -> Result<ScenarioConfig> {
    if length < 3 {
        return Err(Error::domain(format!("ring length {length} is below 3")));
    }
    if !graph.is_simple_cycle(cycle) {
        return Err(Error::domain(
            "orders do not form a simple cycle of the move graph",
        ));
    }
    let k = cycle.len();
    if !length.is_multiple_of(k) {
        return Err(Error::Initialization(format!(
            "cycle length {k} does not divide ring length {length}"
        )));
    }
    let network = InfluenceNetwork::directed_cycle(length)?;
    let initial = Profile((0..length).map(|i| cycle[i % k]).collect());
    ScenarioConfig::new(
        format!("wave-{length}-{k}"),
        graph,
        network,
        PersistentConfig::none(),
        initial,
    )
}

pub fn verify_traveling_wave(
    sc: &ScenarioConfig,
    expected_k: usize,
) -> Result<VerificationOutcome> {
    let mut out = VerificationOutcome::open(
        "traveling_wave",
        "a ring of copiers started on a move-graph cycle of length k is periodic with period k",
        sc,
    );
    let n = sc.n();
    out.note("expected_period", expected_k);
    if !sc.persistent.pins().is_empty() {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "ring has pinned nodes"),
        ));
    }
    if sc.schedule != Schedule::Synchronous {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "schedule is not synchronous"),
        ));
    }
    for i in 0..n {
        let pred = (i + n - 1) % n;
        if sc.network.in_arcs(i) != [(pred, int(1))] {
            let detail = format!(
                "node {} does not copy its predecessor {}",
                sc.network.name(i),
                sc.network.name(pred)
            );
            return Ok(out.reject(Status::HypothesisNotMet, at_start(sc, detail)));
        }
    }
    let report = sc.run()?;
    out.note("mu", report.transient);
    out.note("period", report.period);
    out.note("min_margin", margin_text(&report.min_margin));

    let mut violation = None;
    'log: for (t, (state, record)) in report.trajectory.iter().zip(&report.targets).enumerate() {
        for i in 0..n {
            if record[i] != Some(state[(i + n - 1) % n]) {
                violation = Some((t, i));
                break 'log;
            }
        }
    }
    out.note("copies_predecessor", violation.is_none());
    out.note("oscillating", report.period > 1);
    if let Some((t, i)) = violation {
        let detail = format!(
            "target of {} differs from its predecessor's state",
            sc.network.name(i)
        );
        let cex = counterexample(sc, &sc.initial, t, &report.trajectory[t], detail);
        return Ok(out.reject(Status::Failed, cex));
    }
    if report.period == expected_k && report.transient == 0 {
        return Ok(out.pass());
    }
    let detail = if report.period == 1 {
        "non-oscillating: the ring is at a fixed point".to_string()
    } else {
        format!(
            "measured mu={} period={}, expected mu=0 period={expected_k}",
            report.transient, report.period
        )
    };
    let cex = counterexample(
        sc,
        &sc.initial,
        report.transient,
        report.state_at(report.transient),
        detail,
    );
    Ok(out.reject(Status::Failed, cex))
}

// Contrarian gadget and forced even periods

/// Nodes `i, j, p, q`. `i` listens to `j` and to `p` (pinned to `rho`),
/// `j` listens to `i` and to `q` (pinned to the antipode), each pin with
/// weight `epsilon`. Pins carry a self-loop so every row is stochastic.
pub fn build_gadget(
    graph: Arc<MoveGraph>,
    rho: OrderId,
    epsilon: Rational,
    initial: Option<(OrderId, OrderId)>,
) -> Result<ScenarioConfig> {
    if epsilon <= Rational::zero() || epsilon >= Rational::one() {
        return Err(Error::domain(format!(
            "epsilon {} is outside (0, 1)",
            format_rational(&epsilon)
        )));
    }
    let space = graph.space();
    if rho.index() >= space.len() || !space.order(rho).is_strict() {
        return Err(Error::domain("rho must be a strict order"));
    }
    let anti = space.antipode(rho);
    let rest = Rational::one() - epsilon;
    let names = ["i", "j", "p", "q"].iter().map(|s| s.to_string()).collect();
    let arcs = [
        (1, 0, rest),
        (2, 0, epsilon),
        (0, 1, rest),
        (3, 1, epsilon),
        (2, 2, int(1)),
        (3, 3, int(1)),
    ];
    let network = InfluenceNetwork::from_arcs(names, &arcs)?;
    let persistent = PersistentConfig::contrarian(space, vec![2], vec![3], rho)?;
    let (a, b) = initial.unwrap_or((rho, anti));
    let label = format!("gadget-{}", format_rational(&epsilon).replace('/', "_"));
    ScenarioConfig::new(
        label,
        graph,
        network,
        persistent,
        Profile(vec![a, b, rho, anti]),
    )
}

/// Mixed-radix walk over all assignments of `nodes`, other coordinates
/// taken from `base`.
fn profiles_over<'a>(
    base: &'a Profile,
    nodes: &[usize],
    f: usize,
) -> impl Iterator<Item = Profile> + 'a {
    let total = (f as u128).pow(nodes.len() as u32);
    let nodes = nodes.to_vec();
    (0..total).map(move |mut code| {
        let mut p = base.clone();
        for &v in &nodes {
            p.0[v] = OrderId((code % f as u128) as u32);
            code /= f as u128;
        }
        p
    })
}

fn within_budget(f: usize, count: usize, budget: u128) -> bool {
    (f as u128)
        .checked_pow(count as u32)
        .is_some_and(|t| t <= budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForcedOptions {
    /// Sweep initial profiles of the forced class when the configured start
    /// does not oscillate.
    pub sweep: bool,
    pub budget: u128,
}

impl Default for ForcedOptions {
    fn default() -> Self {
        Self {
            sweep: true,
            budget: FIXED_POINT_BUDGET,
        }
    }
}

pub fn verify_forced_even_period(
    sc: &ScenarioConfig,
    options: ForcedOptions,
) -> Result<VerificationOutcome> {
    let mut out = VerificationOutcome::open(
        "forced_even_period",
        "contrarian camps feeding a closed class of period 2 force an even period p > 1",
        sc,
    );
    let Some(camps) = sc.persistent.camps() else {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "no contrarian camps: no oscillation is forced"),
        ));
    };
    if camps.plus.is_empty() || camps.minus.is_empty() {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "one contrarian camp is empty"),
        ));
    }
    if sc.schedule != Schedule::Synchronous {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "schedule is not synchronous"),
        ));
    }
    let space = sc.space();
    let free = sc.persistent.free_nodes(sc.n());
    let structure = sc.network.class_structure(&free);
    let periods: Vec<Value> = structure
        .closed_classes()
        .map(|c| json!({"nodes": c.nodes, "period": c.period}))
        .collect();
    out.note("closed_classes", periods);
    let Some(class) = structure.closed_classes().find(|c| c.period == Some(2)) else {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "no closed free class has period 2"),
        ));
    };
    let fed = |camp: &[usize]| -> Vec<usize> {
        class
            .nodes
            .iter()
            .copied()
            .filter(|&i| {
                camp.iter()
                    .any(|&c| sc.network.weight(i, c) > Rational::zero())
            })
            .collect()
    };
    let (fed_plus, fed_minus) = (fed(&camps.plus), fed(&camps.minus));
    out.note("class", class.nodes.clone());
    out.note("fed_by_plus", fed_plus.clone());
    out.note("fed_by_minus", fed_minus.clone());
    out.note(
        "node_fed_by_both",
        fed_plus.iter().any(|i| fed_minus.contains(i)),
    );
    if fed_plus.is_empty() || fed_minus.is_empty() {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "the class is not fed by both camps"),
        ));
    }
    let anti = space.antipode(camps.rho);
    out.note("rho_antipode_distance", sc.graph.distance(camps.rho, anti));
    out.note(
        "rho_geodesic_unique",
        sc.graph.geodesic_unique(camps.rho, anti),
    );

    let sys = sc.system()?;
    let f = space.len();
    if within_budget(f, free.len(), options.budget) {
        let fixed = sys.enumerate_fixed_points(options.budget)?;
        out.note("fixed_point_count", fixed.len());
        let shown: Vec<Value> = fixed.iter().take(8).map(|p| json!(sc.texts(p))).collect();
        out.note("fixed_points", shown);
    } else {
        out.note("fixed_point_count", Value::Null);
    }

    let oscillates = |r: &OrbitReport| r.period > 1 && r.period.is_multiple_of(2);
    let base = sc.run()?;
    let mut witness = (oscillates(&base) && margin_certifies(&base.min_margin))
        .then(|| (sc.initial.clone(), base.clone()));
    let mut uncertified = (oscillates(&base) && !margin_certifies(&base.min_margin))
        .then(|| (sc.initial.clone(), base.clone()));
    let mut swept = 0usize;
    if witness.is_none() && options.sweep && within_budget(f, class.nodes.len(), options.budget) {
        for start in profiles_over(&sc.initial, &class.nodes, f) {
            swept += 1;
            let r = sys.run_until_cycle(&start, &sc.schedule, sc.max_steps)?;
            if oscillates(&r) {
                if margin_certifies(&r.min_margin) {
                    witness = Some((start, r));
                    break;
                }
                uncertified.get_or_insert((start, r));
            }
        }
    }
    out.note("swept_profiles", swept);
    out.note("configured_period", base.period);
    if let Some((start, r)) = witness {
        out.note("witness", sc.texts(&start));
        out.note("mu", r.transient);
        out.note("period", r.period);
        out.note("min_margin", margin_text(&r.min_margin));
        return Ok(out.pass());
    }
    if let Some((start, r)) = uncertified {
        out.note("period", r.period);
        out.note("margin_failure", true);
        let cex = counterexample(
            sc,
            &start,
            r.transient,
            r.state_at(r.transient),
            "even oscillation with zero margin",
        );
        return Ok(out.reject(Status::NotCertifiable, cex));
    }
    out.note("period", base.period);
    let detail = format!(
        "no even period above 1: configured start settles with period {}",
        base.period
    );
    let cex = counterexample(
        sc,
        &sc.initial,
        base.transient,
        base.state_at(base.transient),
        detail,
    );
    Ok(out.reject(Status::Failed, cex))
}

// Bipartite lifting

/// New states of the nodes in `movers`, computed from their own states in
/// `own` and from the states of their in-neighbors in `inputs`. Used to
/// compose half-maps independently of [`BordaSystem::step_sync`].
pub fn half_step(
    sys: &BordaSystem<'_>,
    movers: &[usize],
    own: &Profile,
    inputs: &Profile,
) -> Vec<OrderId> {
    let space = sys.space();
    movers
        .iter()
        .map(|&i| {
            let mut scores = crate::preference::ScoreVector::zeros(space.m());
            for (j, w) in sys.net.in_arcs(i) {
                scores.add_scaled(w, space.scores(inputs[*j]));
            }
            sys.graph
                .step(sys.policy, own[i], space.project_id(&scores))
        })
        .collect()
}

fn with_part(base: &Profile, nodes: &[usize], states: &[OrderId]) -> Profile {
    let mut p = base.clone();
    for (&v, &s) in nodes.iter().zip(states) {
        p.0[v] = s;
    }
    p
}

fn part(profile: &Profile, nodes: &[usize]) -> Vec<OrderId> {
    nodes.iter().map(|&v| profile[v]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecouplingCheck {
    /// Two synchronous steps equal the independently composed half-steps.
    pub composed_matches: bool,
    /// A second profile agreeing with the first on `a` whose two-step image
    /// differs on `a`, showing that the `a` half after two steps is not a
    /// function of the `a` half alone. `None` if none exists within budget.
    pub context_dependence: Option<Profile>,
}

/// Compares two synchronous steps with the composition of half-steps across
/// the cut `(a, b)`, and searches the `b` half for context dependence.
pub fn check_bipartite_decoupling(
    sys: &BordaSystem<'_>,
    profile: &Profile,
    a: &[usize],
    b: &[usize],
    budget: u128,
) -> DecouplingCheck {
    let a1 = half_step(sys, a, profile, profile);
    let b1 = half_step(sys, b, profile, profile);
    let mid = with_part(&with_part(profile, a, &a1), b, &b1);
    let a2 = half_step(sys, a, &mid, &mid);
    let b2 = half_step(sys, b, &mid, &mid);
    let two = sys.step_sync(&sys.step_sync(profile));
    let composed_matches = part(&two, a) == a2 && part(&two, b) == b2;

    let mut context_dependence = None;
    let f = sys.space().len();
    if within_budget(f, b.len(), budget) {
        let reference = part(&two, a);
        context_dependence = profiles_over(profile, b, f)
            .find(|alt| part(&sys.step_sync(&sys.step_sync(alt)), a) != reference);
    }
    DecouplingCheck {
        composed_matches,
        context_dependence,
    }
}

/// Witness of the lifting check: a full orbit whose `a` half, sampled every
/// second step, has period `k`.
#[derive(Clone, Debug)]
struct LiftWitness {
    start: Profile,
    report: OrbitReport,
    k: usize,
}

fn even_subsequence_period(report: &OrbitReport, a: &[usize]) -> usize {
    let p = report.period;
    let len = if p.is_multiple_of(2) { p / 2 } else { p };
    let seq: Vec<Vec<OrderId>> = (0..len)
        .map(|t| part(report.state_at(report.transient + 2 * t), a))
        .collect();
    (1..=len)
        .find(|&d| len % d == 0 && (0..len).all(|t| seq[t] == seq[(t + d) % len]))
        .unwrap_or(len)
}

pub fn verify_even_period_lifting(
    sc: &ScenarioConfig,
    sweep_budget: Option<u128>,
) -> Result<VerificationOutcome> {
    let mut out = VerificationOutcome::open(
        "even_period_lifting",
        "a k-cycle of the two-step half-map on one side of a bipartite cut lifts to a 2k-cycle",
        sc,
    );
    if sc.schedule != Schedule::Synchronous {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "schedule is not synchronous"),
        ));
    }
    let free = sc.persistent.free_nodes(sc.n());
    let Some((a, b)) = sc.network.two_coloring(&free) else {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "influence among free nodes is not bipartite"),
        ));
    };
    out.note("side_a", a.clone());
    out.note("side_b", b.clone());
    let sys = sc.system()?;
    let f = sc.space().len();

    let lift = |start: &Profile| -> Result<LiftWitness> {
        let report = sys.run_until_cycle(start, &sc.schedule, sc.max_steps)?;
        let k = even_subsequence_period(&report, &a);
        Ok(LiftWitness {
            start: start.clone(),
            report,
            k,
        })
    };
    let mut best: Option<LiftWitness> = None;
    let mut first = None;
    let mut consider = |w: LiftWitness| {
        if w.report.period == 2 * w.k && best.as_ref().is_none_or(|b| w.k > b.k) {
            best = Some(w.clone());
        }
        first.get_or_insert(w);
    };
    consider(lift(&sc.initial)?);
    let mut swept = 0usize;
    if let Some(budget) = sweep_budget {
        if within_budget(f, free.len(), budget) {
            let nodes: Vec<usize> = free.iter().copied().collect();
            for start in profiles_over(&sc.initial, &nodes, f) {
                swept += 1;
                consider(lift(&start)?);
            }
        }
    }
    out.note("swept_profiles", swept);
    let Some(w) = best else {
        let w = first.expect("the configured start is always considered");
        let trivial = w.report.period == 1;
        out.note("k", w.k);
        out.note("period", w.report.period);
        out.note("trivial", trivial);
        let detail = if trivial {
            "trivial case: the lifted orbit is a fixed point".to_string()
        } else {
            format!(
                "half-map period {} but full period {}",
                w.k, w.report.period
            )
        };
        let at = w.report.transient;
        let cex = counterexample(sc, &w.start, at, w.report.state_at(at), detail);
        return Ok(out.reject(Status::Failed, cex));
    };
    let lifted = w.report.state_at(w.report.transient).clone();
    let check = check_bipartite_decoupling(&sys, &lifted, &a, &b, FIXED_POINT_BUDGET);
    out.note("k", w.k);
    out.note("period", w.report.period);
    out.note("mu", w.report.transient);
    out.note("witness", sc.texts(&w.start));
    out.note("lifted_state", sc.texts(&lifted));
    out.note("half_steps_compose", check.composed_matches);
    out.note(
        "half_map_depends_only_on_own_side",
        check.context_dependence.is_none(),
    );
    if let Some(alt) = &check.context_dependence {
        out.note("context_dependence_witness", sc.texts(alt));
    }
    if !check.composed_matches {
        let cex = counterexample(
            sc,
            &w.start,
            w.report.transient,
            &lifted,
            "half-steps do not compose to the two-step map",
        );
        return Ok(out.reject(Status::Failed, cex));
    }
    Ok(out.pass())
}

// Robustness under weight perturbation

/// Sufficient entrywise perturbation bound for an orbit margin `delta`.
/// An infinite margin falls back to the bound for a unit margin.
pub fn epsilon_star(margin: &Margin, m: usize, n: usize) -> Rational {
    let delta = margin.finite().copied().unwrap_or_else(|| int(1));
    delta / int(2 * (m as i128 - 1) * n as i128)
}

/// First stored step at which a tie in some free node's target can be broken
/// by reweighting its inputs: the tied alternatives are scored differently
/// by at least one in-neighbor.
fn fragile_tie(sc: &ScenarioConfig, report: &OrbitReport) -> Option<(usize, usize)> {
    let space = sc.space();
    for (t, (state, record)) in report.trajectory.iter().zip(&report.targets).enumerate() {
        for (i, target) in record.iter().enumerate() {
            let Some(target) = target else { continue };
            for class in space.order(*target).classes() {
                for pair in class.windows(2) {
                    let (x, y) = (pair[0].0 as usize, pair[1].0 as usize);
                    let split = sc.network.in_arcs(i).iter().any(|(j, _)| {
                        let s = space.scores(state[*j]).entries();
                        s[x] != s[y]
                    });
                    if split {
                        return Some((t, i));
                    }
                }
            }
        }
    }
    None
}

fn first_divergence(a: &OrbitReport, b: &OrbitReport) -> Option<usize> {
    let len = a.trajectory.len().max(b.trajectory.len());
    (0..len)
        .find(|&t| a.state_at(t) != b.state_at(t) || a.targets_at(t) != b.targets_at(t))
        .or_else(|| (a.transient != b.transient || a.period != b.period).then_some(len))
}

pub fn verify_robustness(
    sc: &ScenarioConfig,
    trials: usize,
    seed: u64,
) -> Result<VerificationOutcome> {
    verify_robustness_at(sc, trials, seed, None)
}

/// As [`verify_robustness`], with an explicit perturbation size in place of
/// nine tenths of the certified bound.
pub fn verify_robustness_at(
    sc: &ScenarioConfig,
    trials: usize,
    seed: u64,
    epsilon: Option<Rational>,
) -> Result<VerificationOutcome> {
    let mut out = VerificationOutcome::open(
        "robustness",
        "weight perturbations below the margin bound keep the symbolic orbit and period",
        sc,
    );
    if !sc.schedule.is_deterministic() {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "schedule is not deterministic"),
        ));
    }
    let base = sc.run()?;
    out.note("mu", base.transient);
    out.note("period", base.period);
    out.note("delta", margin_text(&base.min_margin));
    if !margin_certifies(&base.min_margin) {
        let cex = counterexample(
            sc,
            &sc.initial,
            base.transient,
            base.state_at(base.transient),
            "orbit margin is zero",
        );
        return Ok(out.reject(Status::NotCertifiable, cex));
    }
    if let Some((t, i)) = fragile_tie(sc, &base) {
        let detail = format!(
            "target of {} has a tie that reweighting can break",
            sc.network.name(i)
        );
        return Ok(out.reject(
            Status::NotCertifiable,
            counterexample(sc, &sc.initial, t, &base.trajectory[t], detail),
        ));
    }
    let bound = epsilon_star(&base.min_margin, sc.m(), sc.n());
    let eps = epsilon.unwrap_or(bound * ratio(9, 10));
    out.note("epsilon_star", format_rational(&bound));
    out.note("epsilon", format_rational(&eps));
    out.note("within_bound", eps < bound);
    out.note("trials", trials);
    let mut worst = Rational::zero();
    for trial in 0..trials {
        let trial_seed = seed.wrapping_add(trial as u64);
        let network = sc.network.perturb_weights(eps, trial_seed)?;
        worst = worst.max(network.max_abs_difference(&sc.network));
        let twin = ScenarioConfig {
            network,
            ..sc.clone()
        };
        let r = twin.run()?;
        if let Some(t) = first_divergence(&base, &r) {
            out.note("diverging_trial", trial);
            out.note("perturbation_seed", trial_seed);
            out.note("first_divergence", t);
            let detail = format!("perturbation seed {trial_seed} changes the symbolic orbit");
            let cex = counterexample(sc, &sc.initial, t, r.state_at(t), detail);
            return Ok(out.reject(Status::Failed, cex));
        }
    }
    out.note("max_weight_change", format_rational(&worst));
    Ok(out.pass())
}

// Unreachable persistence

pub fn verify_unreachable_persistence(
    sc: &ScenarioConfig,
    alt_pins: &BTreeMap<usize, OrderId>,
) -> Result<VerificationOutcome> {
    let mut out = VerificationOutcome::open(
        "unreachable_persistence",
        "pins have no effect on free nodes they cannot reach",
        sc,
    );
    if let Some(node) = alt_pins.keys().find(|v| !sc.persistent.is_pinned(**v)) {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, format!("node {node} is not pinned")),
        ));
    }
    let pinned = sc.persistent.pinned_nodes();
    let reached = sc.network.reach(&pinned);
    let free = sc.persistent.free_nodes(sc.n());
    let unreached: Vec<usize> = free.difference(&reached).copied().collect();
    out.note("reached", reached.iter().copied().collect::<Vec<_>>());
    out.note("unreached_free", unreached.clone());
    if unreached.is_empty() {
        return Ok(out.reject(
            Status::HypothesisNotMet,
            at_start(sc, "pins reach every free node"),
        ));
    }
    let persistent = sc.persistent.repinned(alt_pins)?;
    let mut initial = sc.initial.clone();
    for (&v, &s) in alt_pins {
        initial.0[v] = s;
    }
    let twin = ScenarioConfig {
        persistent,
        initial,
        ..sc.clone()
    };
    let (r1, r2) = (sc.run()?, twin.run()?);
    let horizon = r1.transient.max(r2.transient) + num_integer::lcm(r1.period, r2.period);
    out.note("compared_steps", horizon);
    out.note("periods", vec![r1.period, r2.period]);
    for t in 0..horizon {
        if let Some(&v) = unreached
            .iter()
            .find(|&&v| r1.state_at(t)[v] != r2.state_at(t)[v])
        {
            let detail = format!(
                "unreached node {} differs between the paired runs",
                sc.network.name(v)
            );
            return Ok(out.reject(
                Status::Failed,
                counterexample(sc, &sc.initial, t, r1.state_at(t), detail),
            ));
        }
    }
    Ok(out.pass())
}

// Single-peaked domain

fn axis_positions(m: usize, axis: &[usize]) -> Result<Vec<usize>> {
    let mut pos = vec![usize::MAX; m];
    if axis.len() != m {
        return Err(Error::domain(format!(
            "axis has {} entries for {m} alternatives",
            axis.len()
        )));
    }
    for (p, &a) in axis.iter().enumerate() {
        if a >= m || pos[a] != usize::MAX {
            return Err(Error::domain(
                "axis is not a permutation of the alternatives",
            ));
        }
        pos[a] = p;
    }
    Ok(pos)
}

/// Top class contiguous on the axis; on each side of it, rank strictly
/// worsens moving away from the top class.
pub fn is_single_peaked(order: &WeakOrder, axis: &[usize]) -> bool {
    let Ok(pos) = axis_positions(order.m(), axis) else {
        return false;
    };
    let rank = order.class_index();
    let top: Vec<usize> = order.classes()[0]
        .iter()
        .map(|a| pos[a.0 as usize])
        .collect();
    let (lo, hi) = (*top.iter().min().unwrap(), *top.iter().max().unwrap());
    if hi - lo + 1 != top.len() {
        return false;
    }
    let at = |p: usize| rank[axis[p]];
    (1..=lo).all(|p| at(p) < at(p - 1)) && (hi + 1..axis.len() - 1).all(|p| at(p) < at(p + 1))
}

pub fn enumerate_single_peaked(space: &PreferenceSpace, axis: &[usize]) -> Result<Vec<OrderId>> {
    axis_positions(space.m(), axis)?;
    Ok(space
        .ids()
        .filter(|&id| is_single_peaked(space.order(id), axis))
        .collect())
}

pub fn verify_single_peaked_invariance(
    sc: &ScenarioConfig,
    axis: &[usize],
) -> Result<VerificationOutcome> {
    let mut out = VerificationOutcome::open(
        "single_peaked_invariance",
        "while every target is single-peaked, every state stays single-peaked",
        sc,
    );
    let space = sc.space();
    axis_positions(sc.m(), axis)?;
    out.note("axis", axis.to_vec());
    out.note(
        "definition",
        "top class contiguous on the axis, rank strictly worsening away from it on both sides",
    );
    let sp = |id: OrderId| is_single_peaked(space.order(id), axis);
    if let Some(v) = (0..sc.n()).find(|&v| !sp(sc.initial[v])) {
        let detail = format!(
            "initial state of {} is not single-peaked",
            sc.network.name(v)
        );
        return Ok(out.reject(Status::HypothesisNotMet, at_start(sc, detail)));
    }
    let sys = sc.system()?;
    let report = sc.run()?;
    out.note("steps", report.trajectory.len());
    for (t, state) in report.trajectory.iter().enumerate() {
        if let Some(v) = (0..sc.n()).find(|&v| !sp(state[v])) {
            let detail = format!(
                "state of {} left the single-peaked domain",
                sc.network.name(v)
            );
            return Ok(out.reject(
                Status::Failed,
                counterexample(sc, &sc.initial, t, state, detail),
            ));
        }
        let (targets, _) = sys.targets_and_margin(state);
        if let Some(v) = (0..sc.n()).find(|&v| targets[v].is_some_and(|tv| !sp(tv))) {
            out.note("hypothesis_broken_at", t);
            let detail = format!("target of {} is not single-peaked", sc.network.name(v));
            return Ok(out.reject(
                Status::HypothesisNotMet,
                counterexample(sc, &sc.initial, t, state, detail),
            ));
        }
    }
    Ok(out.pass())
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SinglePeakedTally {
    pub passed: usize,
    pub hypothesis_broken: usize,
    pub violated: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// Random networks on `3..=5` nodes started from random single-peaked
/// profiles, one derived seed per case.
pub fn single_peaked_trials(
    graph: Arc<MoveGraph>,
    axis: &[usize],
    cases: usize,
    seed: u64,
) -> Result<SinglePeakedTally> {
    let domain = enumerate_single_peaked(graph.space(), axis)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = SinglePeakedTally::default();
    for case in 0..cases {
        let n = rng.random_range(3..=5);
        let network = InfluenceNetwork::random(n, &mut rng)?;
        let initial = Profile(
            (0..n)
                .map(|_| domain[rng.random_range(0..domain.len())])
                .collect(),
        );
        let sc = ScenarioConfig::new(
            format!("single-peaked-{case}"),
            graph.clone(),
            network,
            PersistentConfig::none(),
            initial,
        )?;
        let outcome = verify_single_peaked_invariance(&sc, axis)?;
        match outcome.status {
            Status::Passed => tally.passed += 1,
            Status::HypothesisNotMet => tally.hypothesis_broken += 1,
            _ => tally.violated += 1,
        }
        tally.counterexamples.extend(outcome.counterexample);
    }
    Ok(tally)
}

// Strict-order restriction

#[derive(Clone, Debug)]
pub enum StrictRestriction {
    /// The induced subgraph on strict orders is connected; `adjacency` is
    /// indexed like `vertices`.
    Connected {
        scenario: Box<ScenarioConfig>,
        vertices: Vec<OrderId>,
        adjacency: Vec<Vec<usize>>,
    },
    Infeasible {
        strict_orders: usize,
        induced_edges: usize,
        components: usize,
        reason: String,
    },
}

pub fn restrict_to_strict(sc: &ScenarioConfig) -> Result<StrictRestriction> {
    let space = sc.space();
    if let Some(v) = (0..sc.n()).find(|&v| !space.order(sc.initial[v]).is_strict()) {
        return Err(Error::domain(format!(
            "state of {} is not a strict order",
            sc.network.name(v)
        )));
    }
    let vertices: Vec<OrderId> = space
        .ids()
        .filter(|&id| space.order(id).is_strict())
        .collect();
    let local: HashMap<OrderId, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adjacency: Vec<Vec<usize>> = vertices
        .iter()
        .map(|&v| {
            sc.graph
                .neighbors(v)
                .iter()
                .filter_map(|u| local.get(u).copied())
                .collect()
        })
        .collect();
    let induced_edges = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
    let mut component = vec![usize::MAX; vertices.len()];
    let mut components = 0;
    for s in 0..vertices.len() {
        if component[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        component[s] = components;
        while let Some(v) = stack.pop() {
            for &u in &adjacency[v] {
                if component[u] == usize::MAX {
                    component[u] = components;
                    stack.push(u);
                }
            }
        }
        components += 1;
    }
    if components == 1 {
        return Ok(StrictRestriction::Connected {
            scenario: Box::new(sc.clone()),
            vertices,
            adjacency,
        });
    }
    let reason = if induced_edges == 0 {
        "strict orders are pairwise non-adjacent in the cover graph".to_string()
    } else {
        format!("strict orders split into {components} components")
    };
    Ok(StrictRestriction::Infeasible {
        strict_orders: vertices.len(),
        induced_edges,
        components,
        reason,
    })
}

// Orbit checks

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrozenTargets {
    /// First step from which the whole target log is constant.
    pub frozen_from: usize,
    /// Distances to the frozen targets never increase and reach zero within
    /// the distance at `frozen_from`.
    pub holds: bool,
    /// Steps after `frozen_from` until every free node sits on its target.
    pub settle_steps: usize,
}

/// `None` when the target log is not eventually constant.
pub fn check_frozen_targets(report: &OrbitReport, graph: &MoveGraph) -> Option<FrozenTargets> {
    let end = report.transient + report.period;
    let last = report.targets_at(end - 1);
    if (report.transient..end).any(|t| report.targets_at(t) != last) {
        return None;
    }
    let frozen_from = (0..end)
        .rev()
        .take_while(|&t| report.targets_at(t) == last)
        .last()
        .unwrap_or(end - 1);
    let mut holds = true;
    let mut settle_steps = 0;
    for (i, target) in last.iter().enumerate() {
        let Some(target) = *target else { continue };
        let start = graph.distance(report.state_at(frozen_from)[i], target);
        let mut prev = start;
        let mut reached = None;
        for s in 0..=start + 1 {
            let d = graph.distance(report.state_at(frozen_from + s)[i], target);
            holds &= d <= prev;
            prev = d;
            if d == 0 && reached.is_none() {
                reached = Some(s);
            }
        }
        match reached {
            Some(s) if s <= start => settle_steps = settle_steps.max(s),
            _ => holds = false,
        }
    }
    Some(FrozenTargets {
        frozen_from,
        holds,
        settle_steps,
    })
}

/// `None` when node `i`'s targets on the cycle do not alternate between two
/// orders joined by a unique geodesic; otherwise whether its state is
/// 2-periodic on the cycle.
pub fn check_alternating_targets(
    report: &OrbitReport,
    graph: &MoveGraph,
    i: usize,
) -> Option<bool> {
    let mu = report.transient;
    let p = report.period;
    let beta = report.targets_at(mu)[i]?;
    let gamma = report.targets_at(mu + 1)[i]?;
    let alternating = beta != gamma
        && (0..p).all(|t| report.targets_at(mu + t)[i] == report.targets_at(mu + t + 2)[i]);
    if !alternating || !graph.geodesic_unique(beta, gamma) {
        return None;
    }
    Some((0..p).all(|t| report.state_at(mu + t)[i] == report.state_at(mu + t + 2)[i]))
}

// Variant contrast

/// Synchronous run oscillates while every seeded uniform asynchronous run
/// reaches a stationary profile within the step budget. Empirical only.
pub fn verify_variant_contrast(
    sc: &ScenarioConfig,
    runs: usize,
    seed: u64,
) -> Result<VerificationOutcome> {
    let mut out = VerificationOutcome::open(
        "variant_contrast",
        "synchronous updates oscillate where seeded asynchronous updates settle",
        sc,
    );
    let sync = ScenarioConfig {
        schedule: Schedule::Synchronous,
        ..sc.clone()
    }
    .run()?;
    out.note("sync_period", sync.period);
    if sync.period == 1 {
        let cex = counterexample(
            sc,
            &sc.initial,
            sync.transient,
            sync.state_at(sync.transient),
            "synchronous run is stationary",
        );
        return Ok(out.reject(Status::Failed, cex));
    }
    let sys = sc.system()?;
    let mut steps = Vec::with_capacity(runs);
    for r in 0..runs {
        let run_seed = seed.wrapping_add(r as u64);
        match sys.run_until_cycle(
            &sc.initial,
            &Schedule::SeededUniform(run_seed),
            sc.max_steps,
        ) {
            Ok(report) => {
                let last = report
                    .trajectory
                    .last()
                    .expect("uniform runs store the final profile");
                debug_assert!(sys.is_stationary(last));
                steps.push(report.transient);
            }
            Err(Error::Budget(budget)) => {
                out.note("unsettled_seed", run_seed);
                let cex = counterexample(
                    sc,
                    &sc.initial,
                    budget,
                    &sc.initial,
                    format!("seed {run_seed} did not settle"),
                );
                return Ok(out.reject(Status::Failed, cex));
            }
            Err(e) => return Err(e),
        }
    }
    out.note("async_runs", runs);
    out.note("async_settle_steps", steps);
    Ok(out.pass())
}

// Random scenarios

/// Random network on `n` nodes with no pins and a uniformly random start.
pub fn random_scenario(graph: Arc<MoveGraph>, n: usize, seed: u64) -> Result<ScenarioConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let network = InfluenceNetwork::random(n, &mut rng)?;
    let f = graph.order_count() as u32;
    let initial = Profile((0..n).map(|_| OrderId(rng.random_range(0..f))).collect());
    ScenarioConfig::new(
        format!("random-{seed}"),
        graph,
        network,
        PersistentConfig::none(),
        initial,
    )
}

/// Network with two sides `0..half` and `half..2*half` where every arc
/// crosses, each node drawing one to three inputs from the other side.
pub fn random_bipartite(half: usize, seed: u64) -> Result<InfluenceNetwork> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * half;
    let mut arcs = Vec::new();
    for i in 0..n {
        let other: Vec<usize> = if i < half {
            (half..n).collect()
        } else {
            (0..half).collect()
        };
        let mut raw: BTreeMap<usize, i128> = BTreeMap::new();
        for _ in 0..rng.random_range(1..=3usize.min(half)) {
            *raw.entry(other[rng.random_range(0..other.len())])
                .or_default() += rng.random_range(1..=5);
        }
        let total: i128 = raw.values().sum();
        arcs.extend(raw.into_iter().map(|(j, w)| (j, i, ratio(w, total))));
    }
    InfluenceNetwork::from_arcs(default_names(n), &arcs)
}
