//! Synchronous and asynchronous bounded Borda dynamics with pinned nodes.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::influence::{InfluenceNetwork, NodeSet};
use crate::move_graph::{MoveGraph, StepPolicy};
use crate::preference::{margin_from_ties, OrderId, PreferenceSpace, ScoreVector};
use crate::rational::Margin;

/// Default cap on `F(m)^|U|` for exhaustive fixed-point searches.
pub const FIXED_POINT_BUDGET: u128 = 1_000_000;

/// Two antipodal camps of pinned nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Camps {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub rho: OrderId,
}

/// Pinned (persistent) nodes and their constant states.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PersistentConfig {
    pinned: BTreeMap<usize, OrderId>,
    camps: Option<Camps>,
}

impl PersistentConfig {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn pinned(pinned: BTreeMap<usize, OrderId>) -> Self {
        PersistentConfig {
            pinned,
            camps: None,
        }
    }

    /// Pins `plus` to `rho` and `minus` to its antipode.
    pub fn contrarian(
        space: &PreferenceSpace,
        plus: Vec<usize>,
        minus: Vec<usize>,
        rho: OrderId,
    ) -> Result<Self> {
        let anti = space.antipode(rho);
        let mut pinned = BTreeMap::new();
        for (&node, state) in plus
            .iter()
            .map(|p| (p, rho))
            .chain(minus.iter().map(|q| (q, anti)))
        {
            if pinned.insert(node, state).is_some() {
                return Err(Error::domain(format!("node {node} is in both camps")));
            }
        }
        Ok(PersistentConfig {
            pinned,
            camps: Some(Camps { plus, minus, rho }),
        })
    }

    pub fn camps(&self) -> Option<&Camps> {
        self.camps.as_ref()
    }

    pub fn pin(&self, node: usize) -> Option<OrderId> {
        self.pinned.get(&node).copied()
    }

    pub fn pins(&self) -> &BTreeMap<usize, OrderId> {
        &self.pinned
    }

    pub fn is_pinned(&self, node: usize) -> bool {
        self.pinned.contains_key(&node)
    }

    pub fn pinned_nodes(&self) -> NodeSet {
        self.pinned.keys().copied().collect()
    }

    pub fn free_nodes(&self, n: usize) -> NodeSet {
        (0..n).filter(|i| !self.is_pinned(*i)).collect()
    }

    /// Same pinned set with some states replaced. Camps are dropped because
    /// the replacement need not be contrarian.
    pub fn repinned(&self, changes: &BTreeMap<usize, OrderId>) -> Result<Self> {
        let mut pinned = self.pinned.clone();
        for (&node, &state) in changes {
            match pinned.get_mut(&node) {
                Some(slot) => *slot = state,
                None => return Err(Error::domain(format!("node {node} is not pinned"))),
            }
        }
        Ok(PersistentConfig {
            pinned,
            camps: None,
        })
    }

    pub fn validate(&self, space: &PreferenceSpace, n: usize) -> Result<()> {
        for (&node, state) in &self.pinned {
            if node >= n {
                return Err(Error::domain(format!("pinned node {node} out of range")));
            }
            if state.index() >= space.len() {
                return Err(Error::domain(format!("pinned state {state} out of range")));
            }
        }
        if let Some(camps) = &self.camps {
            let anti = space.antipode(camps.rho);
            let covered = camps.plus.len() + camps.minus.len();
            let consistent = camps.plus.iter().all(|p| self.pin(*p) == Some(camps.rho))
                && camps.minus.iter().all(|q| self.pin(*q) == Some(anti))
                && covered == self.pinned.len();
            if !consistent {
                return Err(Error::domain("camps do not match the pinned states"));
            }
        }
        Ok(())
    }
}

/// One weak order per node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile(pub Vec<OrderId>);

impl Profile {
    pub fn uniform(n: usize, state: OrderId) -> Self {
        Profile(vec![state; n])
    }

    pub fn parse(space: &PreferenceSpace, texts: &[&str]) -> Result<Self> {
        texts
            .iter()
            .map(|t| space.parse(t))
            .collect::<Result<Vec<_>>>()
            .map(Profile)
    }

    pub fn states(&self) -> &[OrderId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_text(&self, space: &PreferenceSpace) -> Vec<String> {
        self.0.iter().map(|&s| space.format(s)).collect()
    }
}

impl std::ops::Index<usize> for Profile {
    type Output = OrderId;

    fn index(&self, node: usize) -> &OrderId {
        &self.0[node]
    }
}

/// Update schedule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Schedule {
    /// Variant S: all free nodes update at once.
    Synchronous,
    /// Variant A with a fixed cyclic order of free nodes.
    Sequence(Vec<usize>),
    /// Variant A with a uniformly drawn free node per step.
    SeededUniform(u64),
}

impl Schedule {
    pub fn is_deterministic(&self) -> bool {
        !matches!(self, Schedule::SeededUniform(_))
    }
}

/// Targets of every node at one time step; `None` for pinned nodes.
pub type TargetRecord = Vec<Option<OrderId>>;

/// Result of running a trajectory until it revisits a state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    /// First time at which the orbit is entered (μ).
    pub transient: usize,
    /// Orbit length p, in single update steps.
    pub period: usize,
    /// States at times `0..transient + period`.
    pub trajectory: Vec<Profile>,
    /// Targets computed from each state of `trajectory`.
    pub targets: Vec<TargetRecord>,
    /// Smallest tie margin over free nodes at each state of `trajectory`.
    pub margins: Vec<Margin>,
    /// Smallest tie margin over the orbit.
    pub min_margin: Margin,
}

impl OrbitReport {
    pub fn orbit(&self) -> &[Profile] {
        &self.trajectory[self.transient..]
    }

    /// State at any time, extending the orbit periodically.
    pub fn state_at(&self, t: usize) -> &Profile {
        &self.trajectory[self.periodic_index(t)]
    }

    pub fn targets_at(&self, t: usize) -> &TargetRecord {
        &self.targets[self.periodic_index(t)]
    }

    fn periodic_index(&self, t: usize) -> usize {
        if t < self.trajectory.len() {
            t
        } else {
            self.transient + (t - self.transient) % self.period
        }
    }

    /// One row per stored time step: `time`, then each node's order.
    pub fn to_csv(&self, net: &InfluenceNetwork, space: &PreferenceSpace) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io {
            path: "<csv>".into(),
            source: e.into(),
        };
        let mut header = vec!["time".to_string()];
        header.extend(net.names().iter().cloned());
        writer.write_record(&header).map_err(io)?;
        for (t, profile) in self.trajectory.iter().enumerate() {
            let mut row = vec![t.to_string()];
            row.extend(profile.to_text(space));
            writer.write_record(&row).map_err(io)?;
        }
        let bytes = writer.into_inner().map_err(|e| Error::Io {
            path: "<csv>".into(),
            source: e.into_error(),
        })?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn document(
        &self,
        label: &str,
        net: &InfluenceNetwork,
        space: &PreferenceSpace,
    ) -> ReportDocument {
        ReportDocument {
            label: label.to_string(),
            mu: self.transient,
            period: self.period,
            min_margin: self.min_margin.to_text(),
            nodes: net.names().to_vec(),
            orbit: self.orbit().iter().map(|p| p.to_text(space)).collect(),
        }
    }
}

/// JSON shape of an orbit report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportDocument {
    pub label: String,
    pub mu: usize,
    pub period: usize,
    pub min_margin: String,
    pub nodes: Vec<String>,
    pub orbit: Vec<Vec<String>>,
}

/// A network, a move graph, a step policy and boundary data: everything the
/// update map needs.
#[derive(Clone, Copy, Debug)]
pub struct BordaSystem<'a> {
    pub net: &'a InfluenceNetwork,
    pub graph: &'a MoveGraph,
    pub policy: StepPolicy,
    pub persistent: &'a PersistentConfig,
}

impl<'a> BordaSystem<'a> {
    pub fn new(
        net: &'a InfluenceNetwork,
        graph: &'a MoveGraph,
        policy: StepPolicy,
        persistent: &'a PersistentConfig,
    ) -> Result<Self> {
        persistent.validate(graph.space(), net.n())?;
        Ok(BordaSystem {
            net,
            graph,
            policy,
            persistent,
        })
    }

    pub fn space(&self) -> &'a PreferenceSpace {
        self.graph.space()
    }

    pub fn n(&self) -> usize {
        self.net.n()
    }

    pub fn free_nodes(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|i| !self.persistent.is_pinned(*i))
            .collect()
    }

    /// Errors unless the profile has one valid state per node and every
    /// pinned node carries its pin.
    pub fn check_profile(&self, profile: &Profile) -> Result<()> {
        if profile.len() != self.n() {
            return Err(Error::Initialization(format!(
                "profile has {} states for {} nodes",
                profile.len(),
                self.n()
            )));
        }
        if let Some(bad) = profile.0.iter().find(|s| s.index() >= self.space().len()) {
            return Err(Error::Initialization(format!(
                "state id {bad} out of range"
            )));
        }
        for (&node, &pin) in self.persistent.pins() {
            if profile[node] != pin {
                return Err(Error::Initialization(format!(
                    "pinned node {} holds {} instead of {}",
                    self.net.name(node),
                    self.space().format(profile[node]),
                    self.space().format(pin)
                )));
            }
        }
        Ok(())
    }

    /// `s_i = sum_j w_ij b(sigma_j)`.
    pub fn aggregate_scores(&self, profile: &Profile, i: usize) -> ScoreVector {
        let space = self.space();
        let mut scores = ScoreVector::zeros(space.m());
        for (j, w) in self.net.in_arcs(i) {
            scores.add_scaled(w, space.scores(profile[*j]));
        }
        scores
    }

    pub fn target(&self, profile: &Profile, i: usize) -> OrderId {
        self.space().project_id(&self.aggregate_scores(profile, i))
    }

    /// Targets and the smallest tie margin over free nodes.
    pub fn targets_and_margin(&self, profile: &Profile) -> (TargetRecord, Margin) {
        let mut margin = Margin::Infinite;
        let targets = (0..self.n())
            .map(|i| {
                if self.persistent.is_pinned(i) {
                    return None;
                }
                let scores = self.aggregate_scores(profile, i);
                margin = margin.clone().min(margin_from_ties(&scores));
                Some(self.space().project_id(&scores))
            })
            .collect();
        (targets, margin)
    }

    fn apply(&self, profile: &Profile, targets: &TargetRecord, only: Option<usize>) -> Profile {
        let mut next = profile.clone();
        for (i, target) in targets.iter().enumerate() {
            if let Some(target) = target {
                if only.is_none_or(|o| o == i) {
                    next.0[i] = self.graph.step(self.policy, profile[i], *target);
                }
            }
        }
        next
    }

    /// Variant S: every free node steps toward its target, all targets
    /// computed from the pre-update profile.
    pub fn step_sync(&self, profile: &Profile) -> Profile {
        let (targets, _) = self.targets_and_margin(profile);
        self.apply(profile, &targets, None)
    }

    /// Variant A: only free node `i` steps.
    pub fn step_async(&self, profile: &Profile, i: usize) -> Result<Profile> {
        if i >= self.n() {
            return Err(Error::Schedule(format!("node {i} out of range")));
        }
        if self.persistent.is_pinned(i) {
            return Err(Error::Schedule(format!(
                "node {} is pinned",
                self.net.name(i)
            )));
        }
        let mut next = profile.clone();
        next.0[i] = self
            .graph
            .step(self.policy, profile[i], self.target(profile, i));
        Ok(next)
    }

    /// True when every free node already sits on its target. Such a profile
    /// is fixed by the synchronous map; the second check asserts it.
    pub fn is_fixed_point(&self, profile: &Profile) -> bool {
        let at_targets = self
            .free_nodes()
            .into_iter()
            .all(|i| self.target(profile, i) == profile[i]);
        if at_targets {
            assert_eq!(
                &self.step_sync(profile),
                profile,
                "a profile at its targets must be fixed"
            );
        }
        at_targets
    }

    /// True when the synchronous map leaves the profile unchanged. Differs
    /// from [`Self::is_fixed_point`] only under the no-move policy.
    pub fn is_stationary(&self, profile: &Profile) -> bool {
        &self.step_sync(profile) == profile
    }

    /// Every profile over the free nodes (pins fixed) that the synchronous
    /// map leaves unchanged, in mixed-radix order of free-node states.
    pub fn enumerate_fixed_points(&self, budget: u128) -> Result<Vec<Profile>> {
        let free = self.free_nodes();
        let radix = self.space().len();
        let total = (radix as u128)
            .checked_pow(free.len() as u32)
            .unwrap_or(u128::MAX);
        if total > budget {
            return Err(Error::Budget(budget.min(usize::MAX as u128) as usize));
        }
        let mut profile = Profile(vec![OrderId(0); self.n()]);
        for (&node, &pin) in self.persistent.pins() {
            profile.0[node] = pin;
        }
        let mut found = Vec::new();
        loop {
            if self.is_stationary(&profile) {
                found.push(profile.clone());
            }
            // odometer over free-node states, last free node fastest
            let mut pos = free.len();
            loop {
                if pos == 0 {
                    return Ok(found);
                }
                pos -= 1;
                let node = free[pos];
                let next = profile[node].0 + 1;
                if (next as usize) < radix {
                    profile.0[node] = OrderId(next);
                    break;
                }
                profile.0[node] = OrderId(0);
            }
        }
    }

    /// Iterates from `initial` until a state repeats.
    ///
    /// Deterministic schedules give the exact transient and period (for a
    /// sequence schedule the state includes the position in the sequence).
    /// Seeded-uniform schedules stop when the profile becomes stationary and
    /// report it with period 1; otherwise they exhaust `max_steps`.
    pub fn run_until_cycle(
        &self,
        initial: &Profile,
        schedule: &Schedule,
        max_steps: usize,
    ) -> Result<OrbitReport> {
        self.check_profile(initial)?;
        match schedule {
            Schedule::Synchronous => self.run_deterministic(initial, 1, |_| None, max_steps),
            Schedule::Sequence(order) => {
                if order.is_empty() {
                    return Err(Error::Schedule("empty update sequence".into()));
                }
                for &i in order {
                    if i >= self.n() || self.persistent.is_pinned(i) {
                        return Err(Error::Schedule(format!(
                            "sequence entry {i} is not a free node"
                        )));
                    }
                }
                self.run_deterministic(initial, order.len(), |phase| Some(order[phase]), max_steps)
            }
            Schedule::SeededUniform(seed) => self.run_uniform(initial, *seed, max_steps),
        }
    }

    fn run_deterministic(
        &self,
        initial: &Profile,
        phases: usize,
        pick: impl Fn(usize) -> Option<usize>,
        max_steps: usize,
    ) -> Result<OrbitReport> {
        let mut seen: HashMap<(Profile, usize), usize> = HashMap::new();
        let mut trajectory = Vec::new();
        let mut targets = Vec::new();
        let mut margins = Vec::new();
        let mut current = initial.clone();
        for t in 0.. {
            let phase = t % phases;
            if let Some(&first) = seen.get(&(current.clone(), phase)) {
                let min_margin = margins[first..]
                    .iter()
                    .min()
                    .cloned()
                    .unwrap_or(Margin::Infinite);
                return Ok(OrbitReport {
                    transient: first,
                    period: t - first,
                    trajectory,
                    targets,
                    margins,
                    min_margin,
                });
            }
            if t >= max_steps {
                return Err(Error::Budget(max_steps));
            }
            seen.insert((current.clone(), phase), t);
            let (record, margin) = self.targets_and_margin(&current);
            let next = self.apply(&current, &record, pick(phase));
            trajectory.push(std::mem::replace(&mut current, next));
            targets.push(record);
            margins.push(margin);
        }
        unreachable!("the loop only exits by returning")
    }

    fn run_uniform(&self, initial: &Profile, seed: u64, max_steps: usize) -> Result<OrbitReport> {
        let free = self.free_nodes();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut trajectory = Vec::new();
        let mut targets = Vec::new();
        let mut margins = Vec::new();
        let mut current = initial.clone();
        for t in 0..=max_steps {
            let (record, margin) = self.targets_and_margin(&current);
            let stationary = self.apply(&current, &record, None) == current;
            trajectory.push(current.clone());
            targets.push(record.clone());
            margins.push(margin.clone());
            if stationary {
                return Ok(OrbitReport {
                    transient: t,
                    period: 1,
                    trajectory,
                    targets,
                    margins,
                    min_margin: margin,
                });
            }
            let i = free[rng.random_range(0..free.len())];
            current = self.apply(&current, &record, Some(i));
        }
        Err(Error::Budget(max_steps))
    }
}

/// Renders a target log as text, `-` for pinned nodes. Used in evidence.
pub fn format_targets(space: &PreferenceSpace, record: &TargetRecord) -> String {
    let mut out = String::new();
    for (i, t) in record.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        match t {
            Some(t) => {
                let _ = write!(out, "{}", space.format(*t));
            }
            None => out.push('-'),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::influence::default_names;
    use crate::rational::{int, ratio};

    fn h3() -> MoveGraph {
        MoveGraph::build(3).unwrap()
    }

    fn pair(w: (i128, i128)) -> InfluenceNetwork {
        // node 0 listens to nodes 1 and 2; 1 and 2 self-weighted
        InfluenceNetwork::from_arcs(
            default_names(3),
            &[
                (1, 0, ratio(w.0, w.0 + w.1)),
                (2, 0, ratio(w.1, w.0 + w.1)),
                (1, 1, int(1)),
                (2, 2, int(1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn aggregate_score_examples() {
        let g = h3();
        let space = g.space();
        let none = PersistentConfig::none();
        let net = pair((1, 1));
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &none).unwrap();

        let unanimous = Profile::parse(space, &["z>y>x", "x>(yz)", "x>(yz)"]).unwrap();
        assert_eq!(
            &sys.aggregate_scores(&unanimous, 0),
            space.scores(space.parse("x>(yz)").unwrap())
        );
        assert_eq!(space.format(sys.target(&unanimous, 0)), "x>(yz)");

        let opposed = Profile::parse(space, &["x>y>z", "x>y>z", "z>y>x"]).unwrap();
        let s = sys.aggregate_scores(&opposed, 0);
        assert_eq!(s.entries(), &[int(1), int(1), int(1)]);
        assert_eq!(space.format(sys.target(&opposed, 0)), "(xyz)");

        let net = pair((3, 1));
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &none).unwrap();
        let s = sys.aggregate_scores(&opposed, 0);
        assert_eq!(s.entries(), &[ratio(3, 2), int(1), ratio(1, 2)]);
        assert_eq!(s.total(), int(3));
        assert_eq!(space.format(sys.target(&opposed, 0)), "x>y>z");
    }

    #[test]
    fn sync_step_moves_one_unit_and_respects_pins() {
        let g = h3();
        let space = g.space();
        let net = pair((1, 0));
        let pins = PersistentConfig::pinned(BTreeMap::from([(1, space.parse("z>y>x").unwrap())]));
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &pins).unwrap();
        let start = Profile::parse(space, &["x>y>z", "z>y>x", "(xy)>z"]).unwrap();
        let next = sys.step_sync(&start);
        assert_eq!(g.distance(next[0], start[1]), 3);
        assert_eq!(next[1], start[1]);
        assert_eq!(next[2], start[2], "node 2 copies itself");
    }

    #[test]
    fn async_step_changes_one_coordinate() {
        let g = h3();
        let space = g.space();
        let net = pair((1, 1));
        let pins = PersistentConfig::pinned(BTreeMap::from([(1, space.parse("x>y>z").unwrap())]));
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &pins).unwrap();
        let start = Profile::parse(space, &["z>y>x", "x>y>z", "z>y>x"]).unwrap();
        assert!(matches!(sys.step_async(&start, 1), Err(Error::Schedule(_))));
        let next = sys.step_async(&start, 0).unwrap();
        assert_ne!(next[0], start[0]);
        assert_eq!(&next.0[1..], &start.0[1..]);
        let settled = sys.step_async(&start, 2).unwrap();
        assert_eq!(settled, start, "node 2 already sits on its target");
    }

    #[test]
    fn consensus_is_fixed() {
        let g = h3();
        let none = PersistentConfig::none();
        let net = InfluenceNetwork::directed_cycle(4).unwrap();
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &none).unwrap();
        for id in g.space().ids() {
            let p = Profile::uniform(4, id);
            assert!(sys.is_fixed_point(&p));
            let report = sys
                .run_until_cycle(&p, &Schedule::Synchronous, 100)
                .unwrap();
            assert_eq!((report.transient, report.period), (0, 1));
        }
    }

    #[test]
    fn enumerates_consensus_fixed_points() {
        let g = h3();
        let none = PersistentConfig::none();
        let net = InfluenceNetwork::normalize_random_walk(default_names(2), &[(0, 1)]).unwrap();
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &none).unwrap();
        let fixed = sys.enumerate_fixed_points(FIXED_POINT_BUDGET).unwrap();
        assert!(fixed.len() >= 13);
        for id in g.space().ids() {
            assert!(fixed.contains(&Profile::uniform(2, id)));
        }
        assert!(matches!(
            sys.enumerate_fixed_points(100),
            Err(Error::Budget(100))
        ));
    }

    #[test]
    fn single_dominated_node_has_one_fixed_point() {
        let g = h3();
        let space = g.space();
        // node 0 listens only to pinned node 1
        let net = InfluenceNetwork::from_arcs(default_names(2), &[(1, 0, int(1)), (1, 1, int(1))])
            .unwrap();
        let target = space.parse("y>(xz)").unwrap();
        let pins = PersistentConfig::pinned(BTreeMap::from([(1, target)]));
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &pins).unwrap();
        assert_eq!(
            sys.enumerate_fixed_points(FIXED_POINT_BUDGET).unwrap(),
            vec![Profile(vec![target, target])]
        );
    }

    #[test]
    fn run_rejects_profiles_that_break_pins() {
        let g = h3();
        let space = g.space();
        let net = pair((1, 1));
        let pins = PersistentConfig::pinned(BTreeMap::from([(1, space.parse("x>y>z").unwrap())]));
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &pins).unwrap();
        let bad = Profile::parse(space, &["x>y>z", "z>y>x", "x>y>z"]).unwrap();
        assert!(matches!(
            sys.run_until_cycle(&bad, &Schedule::Synchronous, 10),
            Err(Error::Initialization(_))
        ));
        let sequence = Schedule::Sequence(vec![0, 1]);
        let good = Profile::parse(space, &["x>y>z", "x>y>z", "x>y>z"]).unwrap();
        assert!(matches!(
            sys.run_until_cycle(&good, &sequence, 10),
            Err(Error::Schedule(_))
        ));
    }

    #[test]
    fn frozen_target_run_reaches_target_within_diameter() {
        let g = h3();
        let space = g.space();
        let net = pair((1, 0));
        let target = space.parse("z>y>x").unwrap();
        let pins = PersistentConfig::pinned(BTreeMap::from([(1, target)]));
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &pins).unwrap();
        let start = Profile::parse(space, &["x>y>z", "z>y>x", "y>x>z"]).unwrap();
        let report = sys
            .run_until_cycle(&start, &Schedule::Synchronous, 100)
            .unwrap();
        assert_eq!(report.period, 1);
        assert_eq!(report.transient, g.distance(start[0], target));
        assert!(report.transient <= g.diameter());
        assert_eq!(report.orbit()[0][0], target);
    }

    #[test]
    fn uniform_schedule_reports_convergence_or_budget() {
        let g = h3();
        let space = g.space();
        let net = pair((1, 0));
        let pins = PersistentConfig::pinned(BTreeMap::from([(1, space.parse("z>y>x").unwrap())]));
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &pins).unwrap();
        let start = Profile::parse(space, &["x>y>z", "z>y>x", "y>x>z"]).unwrap();
        let report = sys
            .run_until_cycle(&start, &Schedule::SeededUniform(3), 1000)
            .unwrap();
        assert_eq!(report.period, 1);
        assert!(sys.is_stationary(report.state_at(report.transient)));
        assert!(matches!(
            sys.run_until_cycle(&start, &Schedule::SeededUniform(3), 1),
            Err(Error::Budget(1))
        ));
    }

    #[test]
    fn csv_and_json_outputs() {
        let g = h3();
        let none = PersistentConfig::none();
        let net = InfluenceNetwork::directed_cycle(2).unwrap();
        let sys = BordaSystem::new(&net, &g, StepPolicy::default(), &none).unwrap();
        let start = Profile::parse(g.space(), &["x>y>z", "x>(yz)"]).unwrap();
        let report = sys
            .run_until_cycle(&start, &Schedule::Synchronous, 100)
            .unwrap();
        assert_eq!(report.period, 2);
        let csv = report.to_csv(&net, g.space()).unwrap();
        assert_eq!(csv, "time,0,1\n0,x>y>z,x>(yz)\n1,x>(yz),x>y>z\n");
        let doc = serde_json::to_string(&report.document("pair", &net, g.space())).unwrap();
        assert_eq!(
            doc,
            r#"{"label":"pair","mu":0,"period":2,"min_margin":"1/1","nodes":["0","1"],"orbit":[["x>y>z","x>(yz)"],["x>(yz)","x>y>z"]]}"#
        );
    }
}
