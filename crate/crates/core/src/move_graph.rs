//! Cover graph of the weak-order lattice and the bounded step rule.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::preference::{Alternative, OrderId, PreferenceSpace, WeakOrder, MAX_ALTERNATIVES};

/// Tie-breaking among several distance-decreasing neighbors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TieBreak {
    #[default]
    MinCanonicalId,
}

/// How [`MoveGraph::step`] picks a successor.
///
/// With `allow_no_move_on_ambiguity` set, a node whose geodesic first step is
/// not unique stays where it is instead of taking the tie-broken neighbor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct StepPolicy {
    pub mode: TieBreak,
    pub allow_no_move_on_ambiguity: bool,
}

/// The move graph H on Ω(m): vertices are canonical ids, edges are cover
/// relations (split one class into two consecutive classes, or the merge).
#[derive(Clone, Debug)]
pub struct MoveGraph {
    space: PreferenceSpace,
    adjacency: Vec<Vec<OrderId>>,
    distances: Vec<u8>,
}

fn split_neighbors(order: &WeakOrder) -> Vec<WeakOrder> {
    let m = order.m();
    let mut out = Vec::new();
    for (k, class) in order.classes().iter().enumerate() {
        let size = class.len();
        if size < 2 {
            continue;
        }
        for mask in 1..(1u32 << size) - 1 {
            let (upper, lower): (Vec<Alternative>, Vec<Alternative>) = {
                let mut upper = Vec::new();
                let mut lower = Vec::new();
                for (bit, &alt) in class.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        upper.push(alt);
                    } else {
                        lower.push(alt);
                    }
                }
                (upper, lower)
            };
            let mut classes = order.classes().to_vec();
            classes.splice(k..=k, [upper, lower]);
            out.push(
                WeakOrder::from_classes(m, classes).expect("a split of a valid order is valid"),
            );
        }
    }
    out
}

impl MoveGraph {
    pub const MIN_M: usize = 2;
    pub const MAX_M: usize = MAX_ALTERNATIVES;

    /// Builds H(m) with all-pairs BFS distances, for `m` in `2..=6`.
    pub fn build(m: usize) -> Result<Self> {
        if !(Self::MIN_M..=Self::MAX_M).contains(&m) {
            return Err(Error::UnsupportedSize {
                m,
                min: Self::MIN_M,
                max: Self::MAX_M,
            });
        }
        Self::from_space(PreferenceSpace::new(m)?)
    }

    pub fn from_space(space: PreferenceSpace) -> Result<Self> {
        let m = space.m();
        if !(Self::MIN_M..=Self::MAX_M).contains(&m) {
            return Err(Error::UnsupportedSize {
                m,
                min: Self::MIN_M,
                max: Self::MAX_M,
            });
        }
        let n = space.len();
        let mut adjacency = vec![Vec::new(); n];
        for id in space.ids() {
            for finer in split_neighbors(space.order(id)) {
                let other = space.id_of(&finer).expect("enumeration is complete");
                adjacency[id.index()].push(other);
                adjacency[other.index()].push(id);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }

        let mut distances = vec![u8::MAX; n * n];
        let mut queue = VecDeque::new();
        for source in 0..n {
            let row = &mut distances[source * n..(source + 1) * n];
            row[source] = 0;
            queue.push_back(source);
            while let Some(v) = queue.pop_front() {
                for w in &adjacency[v] {
                    if row[w.index()] == u8::MAX {
                        row[w.index()] = row[v] + 1;
                        queue.push_back(w.index());
                    }
                }
            }
            if row.contains(&u8::MAX) {
                return Err(Error::domain("move graph is disconnected"));
            }
        }
        Ok(MoveGraph {
            space,
            adjacency,
            distances,
        })
    }

    pub fn space(&self) -> &PreferenceSpace {
        &self.space
    }

    pub fn m(&self) -> usize {
        self.space.m()
    }

    pub fn order_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, id: OrderId) -> &[OrderId] {
        &self.adjacency[id.index()]
    }

    pub fn degree(&self, id: OrderId) -> usize {
        self.adjacency[id.index()].len()
    }

    pub fn are_adjacent(&self, a: OrderId, b: OrderId) -> bool {
        self.adjacency[a.index()].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (OrderId, OrderId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |v| v.index() > u)
                .map(move |&v| (OrderId(u as u32), v))
        })
    }

    pub fn distance(&self, a: OrderId, b: OrderId) -> usize {
        self.distances[a.index() * self.order_count() + b.index()] as usize
    }

    pub fn diameter(&self) -> usize {
        self.distances.iter().copied().max().unwrap_or(0) as usize
    }

    /// Neighbors of `from` that are one hop closer to `to`, ascending by id.
    pub fn descending_neighbors(&self, from: OrderId, to: OrderId) -> Vec<OrderId> {
        let d = self.distance(from, to);
        if d == 0 {
            return Vec::new();
        }
        self.neighbors(from)
            .iter()
            .copied()
            .filter(|&g| self.distance(g, to) == d - 1)
            .collect()
    }

    /// One bounded step from `from` toward `to`.
    pub fn step(&self, policy: StepPolicy, from: OrderId, to: OrderId) -> OrderId {
        if from == to {
            return from;
        }
        let candidates = self.descending_neighbors(from, to);
        if policy.allow_no_move_on_ambiguity && candidates.len() > 1 {
            return from;
        }
        match policy.mode {
            TieBreak::MinCanonicalId => candidates[0],
        }
    }

    /// Number of distinct shortest paths between `a` and `b`.
    pub fn geodesic_count(&self, a: OrderId, b: OrderId) -> u128 {
        let d = self.distance(a, b);
        // layer r holds vertices on some a-b geodesic at distance r from a
        let mut counts = vec![0u128; self.order_count()];
        counts[a.index()] = 1;
        let mut layer = vec![a];
        for r in 1..=d {
            let mut next: Vec<OrderId> = Vec::new();
            for &v in &layer {
                for &w in self.neighbors(v) {
                    if self.distance(a, w) == r && self.distance(w, b) == d - r {
                        if counts[w.index()] == 0 {
                            next.push(w);
                        }
                        counts[w.index()] += counts[v.index()];
                    }
                }
            }
            layer = next;
        }
        counts[b.index()]
    }

    pub fn geodesic_unique(&self, a: OrderId, b: OrderId) -> bool {
        self.geodesic_count(a, b) == 1
    }

    /// True when `cycle` lists distinct vertices with consecutive (and
    /// wrap-around) pairs adjacent, and has at least three vertices.
    pub fn is_simple_cycle(&self, cycle: &[OrderId]) -> bool {
        let k = cycle.len();
        if k < 3 {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        cycle
            .iter()
            .all(|v| v.index() < self.order_count() && seen.insert(*v))
            && (0..k).all(|r| self.are_adjacent(cycle[r], cycle[(r + 1) % k]))
    }

    /// First simple cycle of exactly `length` vertices found by depth-first
    /// search. The cycle starts at its smallest id; neighbors are explored
    /// finer orders first (more classes), then by id.
    pub fn find_cycle(&self, length: usize) -> Option<Vec<OrderId>> {
        if length < 3 || length > self.order_count() {
            return None;
        }
        let ordered: Vec<Vec<OrderId>> = self
            .adjacency
            .iter()
            .map(|list| {
                let mut list = list.clone();
                list.sort_by_key(|&v| (std::cmp::Reverse(self.space.order(v).class_count()), v));
                list
            })
            .collect();

        fn dfs(
            g: &MoveGraph,
            ordered: &[Vec<OrderId>],
            start: OrderId,
            length: usize,
            path: &mut Vec<OrderId>,
            on_path: &mut [bool],
        ) -> bool {
            let last = *path.last().expect("path starts nonempty");
            if path.len() == length {
                return g.are_adjacent(last, start);
            }
            for &next in &ordered[last.index()] {
                if next <= start || on_path[next.index()] {
                    continue;
                }
                // prune: the cycle must still be able to return to start
                let remaining = length - path.len();
                if g.distance(next, start) > remaining {
                    continue;
                }
                path.push(next);
                on_path[next.index()] = true;
                if dfs(g, ordered, start, length, path, on_path) {
                    return true;
                }
                on_path[next.index()] = false;
                path.pop();
            }
            false
        }

        let mut on_path = vec![false; self.order_count()];
        for start in self.space.ids() {
            let mut path = vec![start];
            on_path[start.index()] = true;
            if dfs(self, &ordered, start, length, &mut path, &mut on_path) {
                return Some(path);
            }
            on_path[start.index()] = false;
        }
        None
    }

    /// Graphviz rendering, vertices in canonical order labeled by text format.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph H {\n");
        for id in self.space.ids() {
            let _ = writeln!(out, "  {} [label=\"{}\"];", id, self.space.format(id));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}
