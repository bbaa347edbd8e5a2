//! The weak-order state space: enumeration, averaged Borda scores, the
//! score-to-order projection, antipodes, tie margins and the Kemeny metric.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{int, ratio, Margin, Rational};

/// Largest number of alternatives the enumerating structures accept.
pub const MAX_ALTERNATIVES: usize = 6;

/// An alternative, identified by its dense index in `0..m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alternative(pub u8);

impl Alternative {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Position of a weak order in the canonical enumeration of its space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderId(pub u32);

impl OrderId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for OrderId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered partition of the alternatives into indifference classes.
///
/// `classes[0]` is the most preferred class. Alternatives inside a class are
/// kept in increasing index order, so structural equality is order equality
/// and the derived `Ord` is the canonical lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakOrder {
    classes: Vec<Vec<Alternative>>,
}

impl WeakOrder {
    /// Validates and canonicalizes a class sequence over `m` alternatives.
    pub fn from_classes(m: usize, classes: Vec<Vec<Alternative>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyDomain);
        }
        let mut seen = vec![false; m];
        let mut classes = classes;
        for class in &mut classes {
            if class.is_empty() {
                return Err(Error::domain("indifference classes must be nonempty"));
            }
            for alt in class.iter() {
                let idx = alt.index();
                if idx >= m {
                    return Err(Error::domain(format!(
                        "alternative {idx} out of range for m = {m}"
                    )));
                }
                if seen[idx] {
                    return Err(Error::domain(format!("alternative {idx} appears twice")));
                }
                seen[idx] = true;
            }
            class.sort_unstable();
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::domain(format!(
                "alternative {missing} is not ranked"
            )));
        }
        Ok(WeakOrder { classes })
    }

    /// Strict ranking listing alternatives from best to worst.
    pub fn strict(ranking: &[usize]) -> Result<Self> {
        let classes = ranking
            .iter()
            .map(|&a| vec![Alternative(a as u8)])
            .collect();
        Self::from_classes(ranking.len(), classes)
    }

    /// The order with every alternative tied.
    pub fn all_tied(m: usize) -> Result<Self> {
        Self::from_classes(m, vec![(0..m as u8).map(Alternative).collect()])
    }

    pub fn m(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn classes(&self) -> &[Vec<Alternative>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_strict(&self) -> bool {
        self.classes.len() == self.m()
    }

    /// Index of the class holding each alternative (0 = top).
    pub fn class_index(&self) -> Vec<usize> {
        let mut out = vec![0; self.m()];
        for (k, class) in self.classes.iter().enumerate() {
            for alt in class {
                out[alt.index()] = k;
            }
        }
        out
    }

    /// Reverses the class sequence.
    pub fn antipode(&self) -> WeakOrder {
        WeakOrder {
            classes: self.classes.iter().rev().cloned().collect(),
        }
    }

    /// Averaged Borda scores: top strict rank is `m - 1`, and a class that
    /// spans several rank positions gives each member their average.
    pub fn borda_scores(&self) -> ScoreVector {
        let m = self.m() as i128;
        let mut scores = vec![Rational::zero(); self.m()];
        let mut position = 0i128;
        for class in &self.classes {
            let size = class.len() as i128;
            // ranks m-1-position down to m-position-size
            let average = ratio(2 * m - 2 * position - size - 1, 2);
            for alt in class {
                scores[alt.index()] = average;
            }
            position += size;
        }
        ScoreVector(scores)
    }

    /// Renders with the default notation for this `m`.
    pub fn to_text(&self) -> String {
        Notation::default_for(self.m()).format(self)
    }
}

impl fmt::Display for WeakOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// One exact score per alternative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScoreVector(pub Vec<Rational>);

impl ScoreVector {
    pub fn zeros(m: usize) -> Self {
        ScoreVector(vec![Rational::zero(); m])
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, s| acc + s)
    }

    /// `self += weight * other`
    pub fn add_scaled(&mut self, weight: &Rational, other: &ScoreVector) {
        for (acc, s) in self.0.iter_mut().zip(&other.0) {
            *acc += weight * s;
        }
    }
}

/// Sorts alternatives by decreasing score; exactly equal scores share a class.
pub fn project(scores: &ScoreVector) -> WeakOrder {
    let mut alts: Vec<usize> = (0..scores.len()).collect();
    alts.sort_by(|&a, &b| scores.0[b].cmp(&scores.0[a]).then(a.cmp(&b)));
    let mut classes: Vec<Vec<Alternative>> = Vec::new();
    let mut last: Option<&Rational> = None;
    for a in alts {
        let score = &scores.0[a];
        match (last, classes.last_mut()) {
            (Some(prev), Some(class)) if prev == score => class.push(Alternative(a as u8)),
            _ => classes.push(vec![Alternative(a as u8)]),
        }
        last = Some(score);
    }
    WeakOrder { classes }
}

/// Smallest gap between two alternatives that the projection separates.
///
/// Pairs already tied in the projection do not count: they sit on their
/// hyperplane. A fully tied projection yields [`Margin::Infinite`].
pub fn margin_from_ties(scores: &ScoreVector) -> Margin {
    let mut values: Vec<&Rational> = scores.0.iter().collect();
    values.sort_unstable();
    values.dedup();
    values
        .windows(2)
        .map(|pair| pair[1] - pair[0])
        .min()
        .map_or(Margin::Infinite, Margin::Finite)
}

/// Kemeny distance with penalties 0 (same relation), 1 (one side ties the
/// pair) and 2 (opposed strict relations), summed over unordered pairs.
pub fn kemeny_distance(a: &WeakOrder, b: &WeakOrder) -> Result<u32> {
    if a.m() != b.m() {
        return Err(Error::domain(format!(
            "orders over {} and {} alternatives are not comparable",
            a.m(),
            b.m()
        )));
    }
    let (ra, rb) = (a.class_index(), b.class_index());
    let mut total = 0;
    for x in 0..ra.len() {
        for y in x + 1..ra.len() {
            let ca = ra[x].cmp(&ra[y]);
            let cb = rb[x].cmp(&rb[y]);
            total += match (ca, cb) {
                _ if ca == cb => 0,
                (std::cmp::Ordering::Equal, _) | (_, std::cmp::Ordering::Equal) => 1,
                _ => 2,
            };
        }
    }
    Ok(total)
}

fn stirling2(m: usize, k: usize) -> u128 {
    // S(i, j) = j S(i-1, j) + S(i-1, j-1)
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=m {
        for j in (1..=k.min(i)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// Ordered Bell (Fubini) number: the count of weak orders on `m` items.
pub fn fubini(m: usize) -> u128 {
    let mut factorial = 1u128;
    let mut total = 0u128;
    for k in 1..=m {
        factorial *= k as u128;
        total += factorial * stirling2(m, k);
    }
    total
}

/// Every weak order on `m` alternatives, in canonical order.
pub fn enumerate_weak_orders(m: usize) -> Result<Vec<WeakOrder>> {
    if m == 0 {
        return Err(Error::EmptyDomain);
    }
    if m > MAX_ALTERNATIVES {
        return Err(Error::UnsupportedSize {
            m,
            min: 1,
            max: MAX_ALTERNATIVES,
        });
    }
    fn extend(remaining: u32, prefix: &mut Vec<Vec<Alternative>>, out: &mut Vec<WeakOrder>) {
        if remaining == 0 {
            out.push(WeakOrder {
                classes: prefix.clone(),
            });
            return;
        }
        // every nonempty submask of the remaining set is a candidate next class
        let mut sub = remaining;
        while sub != 0 {
            let class = (0..32u8)
                .filter(|b| sub >> b & 1 == 1)
                .map(Alternative)
                .collect();
            prefix.push(class);
            extend(remaining & !sub, prefix, out);
            prefix.pop();
            sub = (sub - 1) & remaining;
        }
    }
    let mut out = Vec::new();
    extend((1u32 << m) - 1, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Single-character alternative names used by the text format.
///
/// Classes are separated by `>`; tied alternatives are concatenated inside
/// parentheses, e.g. `x>y>z`, `(xy)>z`, `(xyz)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Notation {
    names: Vec<char>,
}

impl Notation {
    /// Letters `x y z u` for m up to 4, digits otherwise.
    pub fn default_for(m: usize) -> Self {
        const LETTERS: [char; 4] = ['x', 'y', 'z', 'u'];
        let names = if m <= LETTERS.len() {
            LETTERS[..m].to_vec()
        } else {
            (0..m)
                .map(|i| char::from_digit(i as u32, 36).unwrap_or('?'))
                .collect()
        };
        Notation { names }
    }

    pub fn custom(names: Vec<char>) -> Result<Self> {
        for (i, c) in names.iter().enumerate() {
            if !c.is_alphanumeric() {
                return Err(Error::domain(format!(
                    "alternative name `{c}` must be alphanumeric"
                )));
            }
            if names[..i].contains(c) {
                return Err(Error::domain(format!("alternative name `{c}` is repeated")));
            }
        }
        Ok(Notation { names })
    }

    pub fn m(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, alt: Alternative) -> char {
        self.names[alt.index()]
    }

    pub fn format(&self, order: &WeakOrder) -> String {
        let mut out = String::new();
        for (k, class) in order.classes.iter().enumerate() {
            if k > 0 {
                out.push('>');
            }
            if class.len() > 1 {
                out.push('(');
            }
            out.extend(class.iter().map(|&a| self.name(a)));
            if class.len() > 1 {
                out.push(')');
            }
        }
        out
    }

    fn lookup(&self, c: char) -> Option<Alternative> {
        if let Some(i) = self.names.iter().position(|&n| n == c) {
            return Some(Alternative(i as u8));
        }
        // indices are accepted in addition to names
        c.to_digit(10)
            .filter(|&d| (d as usize) < self.m())
            .map(|d| Alternative(d as u8))
    }

    pub fn parse(&self, text: &str) -> Result<WeakOrder> {
        let bad = |msg: String| Error::parse("order", format!("`{text}`: {msg}"));
        let mut classes = Vec::new();
        for part in text.split('>') {
            let part: String = part.chars().filter(|c| !c.is_whitespace()).collect();
            let inner = match part.strip_prefix('(') {
                Some(rest) => rest
                    .strip_suffix(')')
                    .ok_or_else(|| bad("unbalanced parenthesis".into()))?,
                None => part.as_str(),
            };
            if inner.is_empty() {
                return Err(bad("empty class".into()));
            }
            if !part.starts_with('(') && inner.chars().count() > 1 {
                return Err(bad(format!("tied alternatives `{inner}` need parentheses")));
            }
            let class = inner
                .chars()
                .map(|c| {
                    self.lookup(c)
                        .ok_or_else(|| bad(format!("unknown alternative `{c}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            classes.push(class);
        }
        WeakOrder::from_classes(self.m(), classes).map_err(|e| bad(e.to_string()))
    }
}

/// The enumerated space Ω(m) with cached scores, antipodes and an index.
#[derive(Clone, Debug)]
pub struct PreferenceSpace {
    m: usize,
    orders: Vec<WeakOrder>,
    scores: Vec<ScoreVector>,
    antipodes: Vec<OrderId>,
    index: HashMap<WeakOrder, OrderId>,
    notation: Notation,
}

impl PreferenceSpace {
    pub fn new(m: usize) -> Result<Self> {
        let orders = enumerate_weak_orders(m)?;
        let index: HashMap<WeakOrder, OrderId> = orders
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), OrderId(i as u32)))
            .collect();
        let scores = orders.iter().map(WeakOrder::borda_scores).collect();
        let antipodes = orders.iter().map(|o| index[&o.antipode()]).collect();
        Ok(PreferenceSpace {
            m,
            orders,
            scores,
            antipodes,
            index,
            notation: Notation::default_for(m),
        })
    }

    pub fn with_notation(mut self, notation: Notation) -> Result<Self> {
        if notation.m() != self.m {
            return Err(Error::domain(format!(
                "{} alternative names given for m = {}",
                notation.m(),
                self.m
            )));
        }
        self.notation = notation;
        Ok(self)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = OrderId> {
        (0..self.orders.len() as u32).map(OrderId)
    }

    pub fn orders(&self) -> &[WeakOrder] {
        &self.orders
    }

    pub fn order(&self, id: OrderId) -> &WeakOrder {
        &self.orders[id.index()]
    }

    pub fn scores(&self, id: OrderId) -> &ScoreVector {
        &self.scores[id.index()]
    }

    pub fn antipode(&self, id: OrderId) -> OrderId {
        self.antipodes[id.index()]
    }

    pub fn id_of(&self, order: &WeakOrder) -> Option<OrderId> {
        self.index.get(order).copied()
    }

    /// Canonical id of `project(scores)`.
    pub fn project_id(&self, scores: &ScoreVector) -> OrderId {
        self.index[&project(scores)]
    }

    pub fn notation(&self) -> &Notation {
        &self.notation
    }

    pub fn format(&self, id: OrderId) -> String {
        self.notation.format(self.order(id))
    }

    pub fn parse(&self, text: &str) -> Result<OrderId> {
        let order = self.notation.parse(text)?;
        Ok(self.index[&order])
    }

    /// Expected Borda total `m(m-1)/2` of any score vector in this space.
    pub fn borda_total(&self) -> Rational {
        let m = self.m as i128;
        int(m * (m - 1)) / int(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space3() -> PreferenceSpace {
        PreferenceSpace::new(3).unwrap()
    }

    fn sv(values: &[(i128, i128)]) -> ScoreVector {
        ScoreVector(values.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    /// Counts ordered set partitions by counting surjections onto k labels.
    fn brute_force_fubini(m: usize) -> u128 {
        let mut total = 0;
        for k in 1..=m {
            let mut labels = vec![0usize; m];
            loop {
                let mut hit = vec![false; k];
                labels.iter().for_each(|&l| hit[l] = true);
                if hit.iter().all(|&h| h) {
                    total += 1;
                }
                let mut pos = 0;
                while pos < m {
                    labels[pos] += 1;
                    if labels[pos] < k {
                        break;
                    }
                    labels[pos] = 0;
                    pos += 1;
                }
                if pos == m {
                    break;
                }
            }
        }
        total
    }

    #[test]
    fn fubini_values() {
        assert_eq!(fubini(1), 1);
        assert_eq!(fubini(3), 13);
        assert_eq!(fubini(4), 75);
        assert_eq!(brute_force_fubini(5), 541);
        assert_eq!(fubini(5), 541);
        for m in 1..=6 {
            assert_eq!(fubini(m), brute_force_fubini(m), "m = {m}");
        }
    }

    #[test]
    fn enumeration_lengths_and_order() {
        assert!(matches!(enumerate_weak_orders(0), Err(Error::EmptyDomain)));
        for m in 1..=5 {
            let orders = enumerate_weak_orders(m).unwrap();
            assert_eq!(orders.len() as u128, fubini(m));
            assert!(
                orders.windows(2).all(|w| w[0] < w[1]),
                "strictly increasing, so distinct"
            );
        }
        assert_eq!(enumerate_weak_orders(1).unwrap()[0].to_text(), "x");
    }

    #[test]
    fn canonical_ids_for_m3() {
        let space = space3();
        let texts: Vec<String> = space.ids().map(|id| space.format(id)).collect();
        assert_eq!(
            texts,
            [
                "x>y>z", "x>(yz)", "x>z>y", "(xy)>z", "(xyz)", "(xz)>y", "y>x>z", "y>(xz)",
                "y>z>x", "(yz)>x", "z>x>y", "z>(xy)", "z>y>x"
            ]
        );
    }

    #[test]
    fn borda_examples() {
        let space = space3();
        let scores = |t: &str| space.scores(space.parse(t).unwrap()).clone();
        assert_eq!(scores("x>y>z"), sv(&[(2, 1), (1, 1), (0, 1)]));
        assert_eq!(scores("(xyz)"), sv(&[(1, 1), (1, 1), (1, 1)]));
        assert_eq!(scores("(xy)>z"), sv(&[(3, 2), (3, 2), (0, 1)]));
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project(&sv(&[(2, 1), (1, 1), (0, 1)])).to_text(), "x>y>z");
        assert_eq!(project(&sv(&[(1, 1), (1, 1), (1, 1)])).to_text(), "(xyz)");
        assert_eq!(project(&sv(&[(0, 1), (5, 2), (0, 1)])).to_text(), "y>(xz)");
    }

    #[test]
    fn projection_inverts_scores_and_scores_are_injective() {
        for m in [3, 4] {
            let space = PreferenceSpace::new(m).unwrap();
            let mut seen = std::collections::HashSet::new();
            for id in space.ids() {
                let s = space.scores(id);
                assert_eq!(&project(s), space.order(id));
                assert_eq!(s.total(), space.borda_total());
                assert!(seen.insert(s.clone()));
            }
        }
    }

    #[test]
    fn antipode_examples_and_identity() {
        let space = space3();
        let p = |t: &str| space.parse(t).unwrap();
        assert_eq!(space.antipode(p("x>y>z")), p("z>y>x"));
        assert_eq!(space.antipode(p("(xyz)")), p("(xyz)"));
        let space4 = PreferenceSpace::new(4).unwrap();
        for id in space4.ids() {
            let anti = space4.antipode(id);
            assert_eq!(space4.antipode(anti), id);
            for (a, b) in space4
                .scores(id)
                .entries()
                .iter()
                .zip(space4.scores(anti).entries())
            {
                assert_eq!(a + b, int(3));
            }
        }
    }

    #[test]
    fn margin_examples() {
        assert_eq!(
            margin_from_ties(&sv(&[(2, 1), (1, 1), (0, 1)])),
            Margin::Finite(int(1))
        );
        assert_eq!(
            margin_from_ties(&sv(&[(3, 2), (3, 2), (0, 1)])),
            Margin::Finite(ratio(3, 2))
        );
        assert_eq!(
            margin_from_ties(&sv(&[(1, 1), (1, 1), (1, 1)])),
            Margin::Infinite
        );
    }

    #[test]
    fn kemeny_examples() {
        let n = Notation::default_for(3);
        let o = |t: &str| n.parse(t).unwrap();
        assert_eq!(kemeny_distance(&o("(xyz)"), &o("x>y>z")).unwrap(), 3);
        assert_eq!(kemeny_distance(&o("x>(yz)"), &o("x>(yz)")).unwrap(), 0);
        assert_eq!(kemeny_distance(&o("x>y>z"), &o("z>y>x")).unwrap(), 6);
        let four = WeakOrder::all_tied(4).unwrap();
        assert!(kemeny_distance(&o("x>y>z"), &four).is_err());
    }

    #[test]
    fn kemeny_is_a_metric_on_omega3() {
        let orders = enumerate_weak_orders(3).unwrap();
        let d = |a: &WeakOrder, b: &WeakOrder| kemeny_distance(a, b).unwrap();
        for a in &orders {
            for b in &orders {
                assert_eq!(d(a, b), d(b, a));
                assert_eq!(d(a, b) == 0, a == b);
                for c in &orders {
                    assert!(d(a, c) <= d(a, b) + d(b, c));
                }
            }
        }
    }

    #[test]
    fn text_format_round_trips() {
        for m in 1..=5 {
            let notation = Notation::default_for(m);
            for order in enumerate_weak_orders(m).unwrap() {
                assert_eq!(notation.parse(&notation.format(&order)).unwrap(), order);
            }
        }
    }

    #[test]
    fn text_format_accepts_indices_and_rejects_malformed() {
        let n = Notation::default_for(3);
        assert_eq!(n.parse("0>(12)").unwrap().to_text(), "x>(yz)");
        assert_eq!(n.parse(" ( x y ) > z ").unwrap().to_text(), "(xy)>z");
        for bad in ["x>y", "x>y>y", "xy>z", "(xy>z", "x>>y>z", "x>y>w"] {
            assert!(n.parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn custom_notation() {
        let space = PreferenceSpace::new(3)
            .unwrap()
            .with_notation(Notation::custom(vec!['a', 'b', 'c']).unwrap())
            .unwrap();
        let id = space.parse("(ab)>c").unwrap();
        assert_eq!(space.format(id), "(ab)>c");
        assert!(Notation::custom(vec!['a', 'a']).is_err());
    }
}
