//! Directed weighted influence networks with exact row-stochastic weights.
//!
//! `w[i][j]` is the weight node `i` places on node `j`. In the support
//! digraph that is an arc `j -> i`: influence flows from `j` into `i`, and
//! every reachability query follows that orientation.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, ratio, Rational};

/// Node index set with deterministic iteration order.
pub type NodeSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfluenceNetwork {
    names: Vec<String>,
    weights: Vec<Vec<Rational>>,
    // sparse views of the positive entries
    in_arcs: Vec<Vec<(usize, Rational)>>,
    out_arcs: Vec<Vec<usize>>,
}

impl InfluenceNetwork {
    /// Builds a network from a dense weight matrix, checking that it is
    /// square, nonnegative and row-stochastic.
    pub fn from_weights(names: Vec<String>, weights: Vec<Vec<Rational>>) -> Result<Self> {
        let n = weights.len();
        if names.len() != n {
            return Err(Error::domain(format!(
                "{} names for {n} nodes",
                names.len()
            )));
        }
        for (i, row) in weights.iter().enumerate() {
            if row.len() != n {
                return Err(Error::domain(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(Signed::is_negative) {
                return Err(Error::domain(format!("negative weight w[{i}][{j}]")));
            }
            let total = row.iter().fold(Rational::zero(), |acc, w| acc + w);
            if !total.is_one() {
                return Err(Error::domain(format!(
                    "row {i} ({}) sums to {}, not 1",
                    names[i],
                    format_rational(&total)
                )));
            }
        }
        let in_arcs: Vec<Vec<(usize, Rational)>> = weights
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, w)| w.is_positive())
                    .map(|(j, w)| (j, *w))
                    .collect()
            })
            .collect();
        let mut out_arcs = vec![Vec::new(); n];
        for (i, arcs) in in_arcs.iter().enumerate() {
            for &(j, _) in arcs {
                out_arcs[j].push(i);
            }
        }
        Ok(InfluenceNetwork {
            names,
            weights,
            in_arcs,
            out_arcs,
        })
    }

    /// Builds from `(from, to, weight)` arcs; `weight` lands in `w[to][from]`.
    pub fn from_arcs(names: Vec<String>, arcs: &[(usize, usize, Rational)]) -> Result<Self> {
        let n = names.len();
        let mut weights = vec![vec![Rational::zero(); n]; n];
        for &(from, to, weight) in arcs {
            if from >= n || to >= n {
                return Err(Error::domain(format!(
                    "arc {from}->{to} names a node outside 0..{n}"
                )));
            }
            weights[to][from] += weight;
        }
        Self::from_weights(names, weights)
    }

    /// Random-walk normalization `W = D^-1 A` of an undirected graph.
    pub fn normalize_random_walk(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut adjacency = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::domain(format!(
                    "edge {a}-{b} names a node outside 0..{n}"
                )));
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        let mut weights = vec![vec![Rational::zero(); n]; n];
        for (i, neighbors) in adjacency.iter().enumerate() {
            if neighbors.is_empty() {
                return Err(Error::Normalization(i));
            }
            let share = ratio(1, neighbors.len() as i128);
            for &j in neighbors {
                weights[i][j] = share;
            }
        }
        Self::from_weights(names, weights)
    }

    /// Directed cycle `0 -> 1 -> ... -> l-1 -> 0`, each node copying its
    /// predecessor with weight 1.
    pub fn directed_cycle(length: usize) -> Result<Self> {
        let arcs: Vec<_> = (0..length)
            .map(|i| ((i + length - 1) % length, i, int(1)))
            .collect();
        Self::from_arcs(default_names(length), &arcs)
    }

    /// Random row-stochastic network: every row draws one to three
    /// in-neighbors (other nodes when `n > 1`) with integer weights 1..=5,
    /// then normalizes.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Result<Self> {
        let mut weights = vec![vec![Rational::zero(); n]; n];
        for (i, row) in weights.iter_mut().enumerate() {
            let candidates: Vec<usize> = (0..n).filter(|&j| j != i || n == 1).collect();
            let count = rng.random_range(1..=candidates.len().min(3));
            let mut raw = vec![0i128; n];
            for _ in 0..count {
                let j = candidates[rng.random_range(0..candidates.len())];
                raw[j] += rng.random_range(1..=5);
            }
            let total: i128 = raw.iter().sum();
            for (j, r) in raw.into_iter().enumerate() {
                row[j] = ratio(r, total);
            }
        }
        Self::from_weights(default_names(n), weights)
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize, j: usize) -> Rational {
        self.weights[i][j]
    }

    pub fn weights(&self) -> &[Vec<Rational>] {
        &self.weights
    }

    /// Positive in-weights of node `i`, ascending by source.
    pub fn in_arcs(&self, i: usize) -> &[(usize, Rational)] {
        &self.in_arcs[i]
    }

    /// Nodes that `j` influences directly.
    pub fn out_neighbors(&self, j: usize) -> &[usize] {
        &self.out_arcs[j]
    }

    /// Support arcs `(from, to)` ordered by target then source.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.in_arcs
            .iter()
            .enumerate()
            .flat_map(|(i, arcs)| arcs.iter().map(move |&(j, _)| (j, i)))
    }

    /// Forward closure of `sources` along support arcs, sources included.
    pub fn reach(&self, sources: &NodeSet) -> NodeSet {
        let mut seen: NodeSet = sources.iter().copied().filter(|&s| s < self.n()).collect();
        let mut queue: VecDeque<usize> = seen.iter().copied().collect();
        while let Some(j) = queue.pop_front() {
            for &i in &self.out_arcs[j] {
                if seen.insert(i) {
                    queue.push_back(i);
                }
            }
        }
        seen
    }

    /// Strongly connected components of the free-to-free support, with
    /// closedness, period and (for period 2) the cyclic bipartition.
    pub fn class_structure(&self, free: &NodeSet) -> ClassStructure {
        let mut graph = DiGraph::<usize, ()>::new();
        let mut local = vec![None; self.n()];
        for &v in free {
            local[v] = Some(graph.add_node(v));
        }
        for (j, i) in self.arcs() {
            if let (Some(a), Some(b)) = (local[j], local[i]) {
                graph.add_edge(a, b, ());
            }
        }
        let mut sccs: Vec<Vec<usize>> = tarjan_scc(&graph)
            .into_iter()
            .map(|comp| {
                let mut nodes: Vec<usize> = comp.into_iter().map(|ix| graph[ix]).collect();
                nodes.sort_unstable();
                nodes
            })
            .collect();
        sccs.sort();

        let classes = sccs
            .iter()
            .map(|nodes| {
                let members: NodeSet = nodes.iter().copied().collect();
                let closed = nodes.iter().all(|&i| {
                    self.in_arcs[i]
                        .iter()
                        .all(|&(j, _)| !free.contains(&j) || members.contains(&j))
                });
                let (period, parity) = self.period_of(&members);
                let cyclic_parts = match (period, parity) {
                    (Some(2), Some(levels)) => {
                        let (a, b) = nodes.iter().partition(|&&v| levels[&v] % 2 == 0);
                        Some((a, b))
                    }
                    _ => None,
                };
                CommunicatingClass {
                    nodes: nodes.clone(),
                    closed,
                    period,
                    cyclic_parts,
                }
            })
            .collect();
        ClassStructure { sccs, classes }
    }

    /// gcd of `level(u) + 1 - level(v)` over internal arcs `u -> v`, where
    /// levels come from a BFS inside the class. `None` when the class has
    /// no internal arc (and hence no cycle).
    fn period_of(
        &self,
        members: &NodeSet,
    ) -> (Option<u32>, Option<std::collections::BTreeMap<usize, i64>>) {
        let root = match members.first() {
            Some(&r) => r,
            None => return (None, None),
        };
        let mut levels = std::collections::BTreeMap::new();
        levels.insert(root, 0i64);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.out_arcs[u] {
                if members.contains(&v) && !levels.contains_key(&v) {
                    levels.insert(v, levels[&u] + 1);
                    queue.push_back(v);
                }
            }
        }
        let mut g = 0i64;
        for &u in members {
            for &v in &self.out_arcs[u] {
                if members.contains(&v) {
                    g = g.gcd(&(levels[&u] + 1 - levels[&v]));
                }
            }
        }
        if g == 0 {
            (None, None)
        } else {
            (Some(g as u32), Some(levels))
        }
    }

    /// Two-coloring of the support restricted to `nodes`, ignoring arc
    /// direction. Each connected piece puts its smallest node in the first
    /// part. `None` when an odd cycle exists.
    pub fn two_coloring(&self, nodes: &NodeSet) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color: std::collections::BTreeMap<usize, bool> = Default::default();
        for &start in nodes {
            if color.contains_key(&start) {
                continue;
            }
            color.insert(start, false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let neighbors = self.out_arcs[u]
                    .iter()
                    .chain(self.in_arcs[u].iter().map(|(j, _)| j));
                for &v in neighbors {
                    if !nodes.contains(&v) {
                        continue;
                    }
                    match color.get(&v) {
                        Some(&c) if c == color[&u] => return None,
                        Some(_) => {}
                        None => {
                            color.insert(v, !color[&u]);
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
        let (a, b): (Vec<_>, Vec<_>) = color.into_iter().partition(|&(_, c)| !c);
        Some((
            a.into_iter().map(|(v, _)| v).collect(),
            b.into_iter().map(|(v, _)| v).collect(),
        ))
    }

    /// Checks `W f = -f` exactly on the subnetwork spanned by `a` and `b`,
    /// with `f = +1` on `a` and `-1` on `b`.
    ///
    /// Overlapping parts, or an arc with both ends in the same part, violate
    /// the precondition and are reported as a domain error.
    pub fn verify_minus_one_mode(&self, a: &[usize], b: &[usize]) -> Result<bool> {
        let mut sign = vec![None; self.n()];
        for (part, value) in [(a, int(1)), (b, int(-1))] {
            for &v in part {
                if v >= self.n() {
                    return Err(Error::domain(format!("node {v} out of range")));
                }
                if sign[v].is_some() {
                    return Err(Error::domain(format!("node {v} lies in both parts")));
                }
                sign[v] = Some(value);
            }
        }
        for (j, i) in self.arcs() {
            if let (Some(si), Some(sj)) = (sign[i], sign[j]) {
                if si == sj {
                    return Err(Error::domain(format!("arc {j}->{i} stays inside one part")));
                }
            }
        }
        let holds = (0..self.n())
            .filter_map(|i| sign[i].map(|s| (i, s)))
            .all(|(i, fi)| {
                let wf = self.in_arcs[i]
                    .iter()
                    .filter_map(|&(j, w)| sign[j].map(|fj| w * fj))
                    .fold(Rational::zero(), |acc, x| acc + x);
                wf == -fi
            });
        Ok(holds)
    }

    /// Seeded perturbation with identical support, entries within `epsilon`
    /// of the original and exact unit row sums.
    ///
    /// Each row with at least two support entries draws deltas in
    /// `[-epsilon/2, epsilon/2]` on a grid of 2000 steps, subtracts their mean
    /// so the row sum is kept, and then halves the deltas until every entry
    /// stays at or above half its original value.
    pub fn perturb_weights(&self, epsilon: Rational, seed: u64) -> Result<Self> {
        if epsilon.is_negative() {
            return Err(Error::Perturbation(format!(
                "epsilon {} is negative",
                format_rational(&epsilon)
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut weights = self.weights.clone();
        for (i, arcs) in self.in_arcs.iter().enumerate() {
            if arcs.is_empty() {
                return Err(Error::Perturbation(format!(
                    "row {i} has no positive entry"
                )));
            }
            if arcs.len() < 2 || epsilon.is_zero() {
                continue;
            }
            let half = epsilon / int(2);
            let raw: Vec<Rational> = arcs
                .iter()
                .map(|_| half * ratio(rng.random_range(-1000..=1000), 1000))
                .collect();
            let mean =
                raw.iter().fold(Rational::zero(), |acc, r| acc + r) / int(arcs.len() as i128);
            let deltas: Vec<Rational> = raw.iter().map(|r| r - mean).collect();
            let mut scale = Rational::one();
            while arcs
                .iter()
                .zip(&deltas)
                .any(|(&(_, w), d)| w + scale * d < w / int(2))
            {
                scale /= int(2);
            }
            for (&(j, w), d) in arcs.iter().zip(&deltas) {
                weights[i][j] = w + scale * d;
            }
        }
        Self::from_weights(self.names.clone(), weights)
    }

    /// Entrywise max-norm distance to another network of the same size.
    pub fn max_abs_difference(&self, other: &InfluenceNetwork) -> Rational {
        self.weights
            .iter()
            .zip(&other.weights)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Graphviz rendering of the support digraph, arcs labeled `p/q`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for name in &self.names {
            let _ = writeln!(out, "  \"{name}\";");
        }
        for (j, i) in self.arcs() {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.names[j],
                self.names[i],
                format_rational(&self.weights[i][j])
            );
        }
        out.push_str("}\n");
        out
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// A strongly connected component of the free-to-free support digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommunicatingClass {
    pub nodes: Vec<usize>,
    /// No weight from free nodes outside the class (pinned inputs allowed).
    pub closed: bool,
    /// gcd of internal cycle lengths; `None` without internal cycles.
    pub period: Option<u32>,
    /// `(A, B)` with every internal arc crossing, for period-2 classes.
    pub cyclic_parts: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassStructure {
    pub sccs: Vec<Vec<usize>>,
    pub classes: Vec<CommunicatingClass>,
}

impl ClassStructure {
    pub fn closed_classes(&self) -> impl Iterator<Item = &CommunicatingClass> {
        self.classes.iter().filter(|c| c.closed)
    }

    pub fn class_of(&self, node: usize) -> Option<&CommunicatingClass> {
        self.classes.iter().find(|c| c.nodes.contains(&node))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::{any, prop_assert, prop_assert_eq, prop_assert_ne, proptest};

    fn all(n: usize) -> NodeSet {
        (0..n).collect()
    }

    fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    fn undirected(n: usize, edges: &[(usize, usize)]) -> InfluenceNetwork {
        InfluenceNetwork::normalize_random_walk(default_names(n), edges).unwrap()
    }

    #[test]
    fn random_walk_examples() {
        let pair = undirected(2, &[(0, 1)]);
        assert_eq!(
            pair.weights(),
            &[vec![int(0), int(1)], vec![int(1), int(0)]]
        );
        for n in [3, 4] {
            let net = undirected(n, &cycle_edges(n));
            for i in 0..n {
                let halves = net.weights()[i]
                    .iter()
                    .filter(|w| **w == ratio(1, 2))
                    .count();
                assert_eq!(halves, 2);
            }
        }
        assert!(matches!(
            InfluenceNetwork::normalize_random_walk(default_names(3), &[(0, 1)]),
            Err(Error::Normalization(2))
        ));
    }

    #[test]
    fn rejects_non_stochastic_rows() {
        let bad = vec![vec![ratio(1, 2), ratio(1, 3)], vec![int(0), int(1)]];
        assert!(InfluenceNetwork::from_weights(default_names(2), bad).is_err());
        let negative = vec![vec![int(2), int(-1)], vec![int(0), int(1)]];
        assert!(InfluenceNetwork::from_weights(default_names(2), negative).is_err());
    }

    #[test]
    fn reach_examples() {
        // p=0 -> a=1 -> b=2, with p self-weighted; plus a separate pair 3 <-> 4
        let net = InfluenceNetwork::from_arcs(
            default_names(5),
            &[
                (0, 0, int(1)),
                (0, 1, int(1)),
                (1, 2, int(1)),
                (3, 4, int(1)),
                (4, 3, int(1)),
            ],
        )
        .unwrap();
        assert!(net.reach(&NodeSet::new()).is_empty());
        assert_eq!(net.reach(&NodeSet::from([0])), NodeSet::from([0, 1, 2]));
        assert_eq!(net.reach(&NodeSet::from([3])), NodeSet::from([3, 4]));
    }

    #[test]
    fn class_structure_examples() {
        let directed = InfluenceNetwork::directed_cycle(3).unwrap();
        let cs = directed.class_structure(&all(3));
        assert_eq!(cs.classes.len(), 1);
        assert!(cs.classes[0].closed);
        assert_eq!(cs.classes[0].period, Some(3));

        let square = undirected(4, &cycle_edges(4));
        let cs = square.class_structure(&all(4));
        assert_eq!(cs.classes[0].period, Some(2));
        assert_eq!(cs.classes[0].cyclic_parts, Some((vec![0, 2], vec![1, 3])));

        let triangle = undirected(3, &cycle_edges(3));
        assert_eq!(triangle.class_structure(&all(3)).classes[0].period, Some(1));
    }

    #[test]
    fn closedness_ignores_pinned_inputs() {
        // 0 and 1 feed each other; 2 is pinned and feeds 0; 3 listens to 0
        let net = InfluenceNetwork::from_arcs(
            default_names(4),
            &[
                (1, 0, ratio(9, 10)),
                (2, 0, ratio(1, 10)),
                (0, 1, int(1)),
                (2, 2, int(1)),
                (0, 3, int(1)),
            ],
        )
        .unwrap();
        let cs = net.class_structure(&NodeSet::from([0, 1, 3]));
        let pair = cs.class_of(0).unwrap();
        assert_eq!(pair.nodes, vec![0, 1]);
        assert!(pair.closed);
        assert_eq!(pair.period, Some(2));
        let listener = cs.class_of(3).unwrap();
        assert!(!listener.closed);
        assert_eq!(listener.period, None);
    }

    #[test]
    fn minus_one_mode_examples() {
        let square = undirected(4, &cycle_edges(4));
        assert!(square.verify_minus_one_mode(&[0, 2], &[1, 3]).unwrap());

        let star = undirected(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(star.verify_minus_one_mode(&[0], &[1, 2, 3, 4]).unwrap());

        let triangle = undirected(3, &cycle_edges(3));
        assert_eq!(triangle.two_coloring(&all(3)), None);
        assert!(triangle.verify_minus_one_mode(&[0], &[1, 2]).is_err());
        assert!(square.verify_minus_one_mode(&[0, 1], &[1, 3]).is_err());
    }

    #[test]
    fn perturbation_examples() {
        let square = undirected(4, &cycle_edges(4));
        assert_eq!(square.perturb_weights(int(0), 7).unwrap(), square);
        let eps = ratio(1, 10);
        let moved = square.perturb_weights(eps, 7).unwrap();
        for i in 0..4 {
            let row: Vec<_> = moved.in_arcs(i).iter().map(|&(_, w)| w).collect();
            assert_eq!(row.len(), 2);
            let delta = row[0] - ratio(1, 2);
            assert_eq!(row[1], ratio(1, 2) - delta);
            assert!(delta.abs() <= eps);
        }
        assert!(square.perturb_weights(ratio(-1, 10), 7).is_err());
        assert_eq!(square.perturb_weights(eps, 7).unwrap(), moved, "seeded");
    }

    #[test]
    fn dot_export_labels_weights() {
        let dot = undirected(2, &[(0, 1)]).to_dot();
        assert!(dot.contains("\"1\" -> \"0\" [label=\"1/1\"];"));
        assert!(dot.contains("\"0\" -> \"1\" [label=\"1/1\"];"));
    }

    /// gcd of all simple cycle lengths inside `members`, by exhaustive DFS.
    fn brute_force_period(net: &InfluenceNetwork, members: &[usize]) -> Option<u32> {
        fn dfs(
            net: &InfluenceNetwork,
            members: &[usize],
            start: usize,
            v: usize,
            len: u32,
            on_path: &mut Vec<bool>,
            g: &mut u32,
        ) {
            for &w in net.out_neighbors(v) {
                if !members.contains(&w) {
                    continue;
                }
                if w == start {
                    *g = g.gcd(&len);
                } else if w > start && !on_path[w] {
                    on_path[w] = true;
                    dfs(net, members, start, w, len + 1, on_path, g);
                    on_path[w] = false;
                }
            }
        }
        let mut g = 0;
        for &s in members {
            let mut on_path = vec![false; net.n()];
            on_path[s] = true;
            dfs(net, members, s, s, 1, &mut on_path, &mut g);
        }
        (g > 0).then_some(g)
    }

    proptest! {
        #[test]
        fn period_matches_cycle_enumeration(n in 1usize..=6, seed in any::<u64>()) {
            let net = InfluenceNetwork::random(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            for class in net.class_structure(&all(n)).classes {
                prop_assert_eq!(class.period, brute_force_period(&net, &class.nodes));
                if let Some((a, b)) = &class.cyclic_parts {
                    for (j, i) in net.arcs() {
                        if class.nodes.contains(&i) && class.nodes.contains(&j) {
                            prop_assert_ne!(a.contains(&i), a.contains(&j));
                            prop_assert_ne!(b.contains(&i), b.contains(&j));
                        }
                    }
                }
            }
        }

        #[test]
        fn reach_is_monotone(n in 1usize..=8, seed in any::<u64>(), small in any::<u8>(), extra in any::<u8>()) {
            let net = InfluenceNetwork::random(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            let s: NodeSet = (0..n).filter(|i| small >> i & 1 == 1).collect();
            let bigger: NodeSet = (0..n).filter(|i| (small | extra) >> i & 1 == 1).collect();
            let r = net.reach(&s);
            prop_assert!(s.is_subset(&r));
            prop_assert!(r.is_subset(&net.reach(&bigger)));
        }

        #[test]
        fn bipartite_graphs_carry_a_minus_one_mode(n in 2usize..=8, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let split = rng.random_range(1..n);
            // spanning connections plus random cross edges
            let mut edges: Vec<(usize, usize)> = (split..n).map(|b| (rng.random_range(0..split), b)).collect();
            edges.extend((0..split).map(|a| (a, rng.random_range(split..n))));
            for _ in 0..n {
                edges.push((rng.random_range(0..split), rng.random_range(split..n)));
            }
            let net = undirected(n, &edges);
            let (a, b) = net.two_coloring(&all(n)).unwrap();
            prop_assert!(net.verify_minus_one_mode(&a, &b).unwrap());
        }

        #[test]
        fn perturbation_keeps_support_and_bound(n in 1usize..=6, seed in any::<u64>(), k in 0i128..=20) {
            let net = InfluenceNetwork::random(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            let eps = ratio(k, 100);
            let moved = net.perturb_weights(eps, seed).unwrap();
            prop_assert!(net.max_abs_difference(&moved) <= eps);
            prop_assert_eq!(net.arcs().collect::<Vec<_>>(), moved.arcs().collect::<Vec<_>>());
        }
    }
}
