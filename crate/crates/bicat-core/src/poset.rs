//! Finite posets with bitset-backed order relations.
//!
//! A [`Poset`] is built from arbitrary relation generators, closed
//! transitively (with cycle detection), and stores the full reachability
//! relation as 256-bit rows, so comparability, lattice operations, and
//! antichain enumeration are word-parallel. Antichain generating functions,
//! optionally constrained by forbidden elements and by label unions, are the
//! workhorse behind every count in the higher layers.

use crate::qpoly::QPoly;
use crate::{Error, Result, POSET_CAP};
use std::collections::HashSet;
use std::fmt::Write as _;

/// A set of up to 256 small indices, stored as four machine words.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct B256([u64; 4]);

impl B256 {
    pub const EMPTY: B256 = B256([0; 4]);

    /// The set `{0, 1, .., len-1}`.
    pub fn prefix(len: usize) -> B256 {
        let mut s = B256::EMPTY;
        for w in 0..4 {
            let lo = w * 64;
            if len >= lo + 64 {
                s.0[w] = u64::MAX;
            } else if len > lo {
                s.0[w] = (1u64 << (len - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(i: usize) -> B256 {
        let mut s = B256::EMPTY;
        s.insert(i);
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union(&self, o: &B256) -> B256 {
        B256(std::array::from_fn(|w| self.0[w] | o.0[w]))
    }

    pub fn inter(&self, o: &B256) -> B256 {
        B256(std::array::from_fn(|w| self.0[w] & o.0[w]))
    }

    /// Set difference `self \ o`.
    pub fn minus(&self, o: &B256) -> B256 {
        B256(std::array::from_fn(|w| self.0[w] & !o.0[w]))
    }

    pub fn is_subset(&self, o: &B256) -> bool {
        (0..4).all(|w| self.0[w] & !o.0[w] == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterates over the contained indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..4).flat_map(move |w| {
            let mut bits = self.0[w];
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }
}

impl FromIterator<usize> for B256 {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> B256 {
        let mut s = B256::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Constraints for [`Poset::antichain_poly`].
#[derive(Clone, Default)]
pub struct AntichainQuery<'a> {
    /// Elements that may not appear in the antichain.
    pub forbidden: B256,
    /// Optional label mask per element.
    pub labels: Option<&'a [u64]>,
    /// If labels are given, only antichains whose label union contains this
    /// mask are counted.
    pub required_union: u64,
}

/// A finite partially ordered set.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `up[a]` is `{b : a <= b}`, including `a` itself.
    up: Vec<B256>,
    /// `down[a]` is `{b : b <= a}`, including `a` itself.
    down: Vec<B256>,
    /// The transitive reduction, as sorted pairs `(a, b)` with `a` covered by `b`.
    covers: Vec<(u16, u16)>,
}

impl Poset {
    /// Builds the poset generated by the relations `a < b` for `(a, b)` in
    /// `edges`. The edges need not be covers; the reduction is recomputed.
    pub fn from_covers(n: usize, edges: &[(usize, usize)]) -> Result<Poset> {
        if n > POSET_CAP {
            return Err(Error::PosetTooLarge(n));
        }
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge ({a}, {b}) out of range for {n} elements");
            if a == b {
                return Err(Error::CycleDetected(a));
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        // Kahn's algorithm: a topological order exists iff there is no cycle.
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop() {
            topo.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(Error::CycleDetected(stuck));
        }
        let mut up = vec![B256::EMPTY; n];
        for &v in topo.iter().rev() {
            let mut s = B256::singleton(v);
            for &w in &succ[v] {
                s = s.union(&up[w]);
            }
            up[v] = s;
        }
        let mut down = vec![B256::EMPTY; n];
        for a in 0..n {
            for b in up[a].iter() {
                down[b].insert(a);
            }
        }
        let mut covers = Vec::new();
        for a in 0..n {
            for b in up[a].iter() {
                if b == a {
                    continue;
                }
                // `a` is covered by `b` iff nothing sits strictly between.
                let mut between = up[a].inter(&down[b]);
                between.remove(a);
                between.remove(b);
                if between.is_empty() {
                    covers.push((a as u16, b as u16));
                }
            }
        }
        covers.sort_unstable();
        Ok(Poset { n, up, down, covers })
    }

    /// Parses the textual format: comment lines start with `#`, the first
    /// data line is the number of elements, an optional line
    /// `simples i j ..` marks distinguished elements, and every other line
    /// `a b` is a relation `a < b` (0-indexed). Returns the poset together
    /// with the (sorted) marked elements.
    pub fn parse_text(text: &str) -> Result<(Poset, Vec<usize>)> {
        let mut n = None;
        let mut simples = Vec::new();
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let head = it.next().unwrap();
            let bad = |what: &str| {
                Error::ParseError(format!("line {}: {what}: `{line}`", lineno + 1))
            };
            if n.is_none() {
                n = Some(head.parse::<usize>().map_err(|_| bad("expected element count"))?);
                if it.next().is_some() {
                    return Err(bad("trailing tokens after element count"));
                }
                continue;
            }
            let n = n.unwrap();
            if head == "simples" {
                for tok in it {
                    let i: usize = tok.parse().map_err(|_| bad("bad index"))?;
                    if i >= n {
                        return Err(bad("index out of range"));
                    }
                    simples.push(i);
                }
                continue;
            }
            let a: usize = head.parse().map_err(|_| bad("expected relation `a b`"))?;
            let b: usize = it
                .next()
                .ok_or_else(|| bad("expected relation `a b`"))?
                .parse()
                .map_err(|_| bad("expected relation `a b`"))?;
            if it.next().is_some() {
                return Err(bad("trailing tokens after relation"));
            }
            if a >= n || b >= n {
                return Err(bad("index out of range"));
            }
            edges.push((a, b));
        }
        let n = n.ok_or_else(|| Error::ParseError("empty poset description".into()))?;
        simples.sort_unstable();
        simples.dedup();
        Ok((Poset::from_covers(n, &edges)?, simples))
    }

    /// Writes the poset (its cover relations) in the format read by
    /// [`Poset::parse_text`].
    pub fn to_text(&self, simples: &[usize]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        if !simples.is_empty() {
            out.push_str("simples");
            for &s in simples {
                let _ = write!(out, " {s}");
            }
            out.push('\n');
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// The cover relations `(a, b)` (meaning `a` is covered by `b`), sorted.
    pub fn covers(&self) -> &[(u16, u16)] {
        &self.covers
    }

    /// All `b` with `a <= b`, including `a`.
    pub fn up_set(&self, a: usize) -> B256 {
        self.up[a]
    }

    /// All `b` with `b <= a`, including `a`.
    pub fn down_set(&self, a: usize) -> B256 {
        self.down[a]
    }

    pub fn minimals(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.down[a].count() == 1).collect()
    }

    pub fn maximals(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.up[a].count() == 1).collect()
    }

    /// The order dual.
    pub fn dual(&self) -> Poset {
        let mut covers: Vec<(u16, u16)> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        covers.sort_unstable();
        Poset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            covers,
        }
    }

    /// The induced subposet on the given (distinct) elements, in order.
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let mut edges = Vec::new();
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if i != j && self.lt(a, b) {
                    edges.push((i, j));
                }
            }
        }
        Poset::from_covers(keep.len(), &edges).expect("induced subposet of a poset is a poset")
    }

    /// The antichain generating function, with `q` tracking antichain size.
    ///
    /// With the default query this counts every antichain (the empty one
    /// contributes the constant term). Forbidden elements are excluded, and
    /// when labels are supplied only antichains whose label union contains
    /// `required_union` count.
    pub fn antichain_poly(&self, query: &AntichainQuery) -> QPoly {
        if let Some(labels) = query.labels {
            assert_eq!(labels.len(), self.n, "one label per element required");
        }
        let comparable: Vec<B256> = (0..self.n)
            .map(|a| self.up[a].union(&self.down[a]))
            .collect();
        let mut counts = vec![0i64; self.n + 1];
        let avail = B256::prefix(self.n).minus(&query.forbidden);
        self.antichain_rec(query, &comparable, avail, 0, 0, &mut counts);
        QPoly::from_coeffs(counts)
    }

    fn antichain_rec(
        &self,
        query: &AntichainQuery,
        comparable: &[B256],
        avail: B256,
        labels_so_far: u64,
        size: usize,
        counts: &mut Vec<i64>,
    ) {
        if let Some(labels) = query.labels {
            if labels_so_far & query.required_union == query.required_union {
                counts[size] += 1;
            } else {
                // Prune branches that can never reach the required union.
                let reachable = avail
                    .iter()
                    .fold(labels_so_far, |acc, i| acc | labels[i]);
                if reachable & query.required_union != query.required_union {
                    return;
                }
            }
        } else {
            counts[size] += 1;
        }
        for i in avail.iter() {
            let next = avail
                .minus(&B256::prefix(i + 1))
                .minus(&comparable[i]);
            let next_labels = labels_so_far | query.labels.map_or(0, |l| l[i]);
            self.antichain_rec(query, comparable, next, next_labels, size + 1, counts);
        }
    }

    /// The number of antichains (equivalently, of order ideals).
    pub fn antichain_count(&self) -> i64 {
        self.antichain_poly(&AntichainQuery::default()).eval(1)
    }

    fn bound_table(&self, up: bool) -> Option<Vec<u16>> {
        let (cones, sides) = if up {
            (&self.up, &self.down)
        } else {
            (&self.down, &self.up)
        };
        let mut table = vec![0u16; self.n * self.n];
        for a in 0..self.n {
            for b in a..self.n {
                let common = cones[a].inter(&cones[b]);
                let mut best = None;
                for m in common.iter() {
                    let mut lower = sides[m].inter(&common);
                    lower.remove(m);
                    if lower.is_empty() {
                        if best.is_some() {
                            return None; // two incomparable extremal bounds
                        }
                        best = Some(m as u16);
                    }
                }
                let m = best?;
                table[a * self.n + b] = m;
                table[b * self.n + a] = m;
            }
        }
        Some(table)
    }

    /// The table of pairwise joins (least upper bounds), if every pair has one.
    pub fn join_table(&self) -> Option<Vec<u16>> {
        self.bound_table(true)
    }

    /// The table of pairwise meets (greatest lower bounds), if every pair has one.
    pub fn meet_table(&self) -> Option<Vec<u16>> {
        self.bound_table(false)
    }

    /// Whether the poset is a lattice (empty posets and singletons count).
    pub fn is_lattice(&self) -> bool {
        self.join_table().is_some() && self.meet_table().is_some()
    }

    /// Whether the poset is a distributive lattice.
    pub fn is_distributive(&self) -> bool {
        let (Some(join), Some(meet)) = (self.join_table(), self.meet_table()) else {
            return false;
        };
        let n = self.n;
        let j = |a: usize, b: usize| join[a * n + b] as usize;
        let m = |a: usize, b: usize| meet[a * n + b] as usize;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m(x, j(y, z)) != j(m(x, y), m(x, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Elements covering exactly one element (the join-irreducibles of a
    /// lattice).
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let mut lower = vec![0usize; self.n];
        for &(_, b) in &self.covers {
            lower[b as usize] += 1;
        }
        (0..self.n).filter(|&x| lower[x] == 1).collect()
    }

    /// Checks that the poset is isomorphic, via `x -> {join-irreducible j : j <= x}`,
    /// to the lattice of order ideals of its join-irreducible subposet.
    pub fn is_birkhoff(&self) -> bool {
        let ji = self.join_irreducibles();
        let ji_mask: B256 = ji.iter().copied().collect();
        let images: Vec<B256> = (0..self.n).map(|x| self.down[x].inter(&ji_mask)).collect();
        let distinct: HashSet<B256> = images.iter().copied().collect();
        if distinct.len() != self.n {
            return false;
        }
        // The map is automatically order-preserving; it must also reflect order.
        for x in 0..self.n {
            for y in 0..self.n {
                if images[x].is_subset(&images[y]) && !self.leq(x, y) {
                    return false;
                }
            }
        }
        // Surjectivity onto ideals: ideals of the subposet biject with its
        // antichains, so a count comparison suffices.
        self.induced(&ji).antichain_count() == self.n as i64
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force antichain generating function by subset filtering.
    fn naive_antichain_poly(poset: &Poset, query: &AntichainQuery) -> QPoly {
        let n = poset.len();
        assert!(n <= 20);
        let mut counts = vec![0i64; n + 1];
        'subset: for mask in 0u32..1 << n {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            for &i in &members {
                if query.forbidden.contains(i) {
                    continue 'subset;
                }
            }
            for (ai, &a) in members.iter().enumerate() {
                for &b in &members[ai + 1..] {
                    if poset.leq(a, b) || poset.leq(b, a) {
                        continue 'subset;
                    }
                }
            }
            if let Some(labels) = query.labels {
                let union = members.iter().fold(0u64, |acc, &i| acc | labels[i]);
                if union & query.required_union != query.required_union {
                    continue;
                }
            }
            counts[members.len()] += 1;
        }
        QPoly::from_coeffs(counts)
    }

    /// The poset of positive roots of A2: two minimal elements below one top.
    fn a2_roots() -> Poset {
        Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn bitset_basics() {
        let mut s = B256::EMPTY;
        s.insert(3);
        s.insert(200);
        assert!(s.contains(3) && s.contains(200) && !s.contains(4));
        assert_eq!(s.count(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 200]);
        assert_eq!(B256::prefix(70).count(), 70);
        assert!(B256::singleton(5).is_subset(&B256::prefix(6)));
        assert!(!B256::prefix(6).is_subset(&B256::singleton(5)));
        s.remove(200);
        assert_eq!(s, B256::singleton(3));
        assert_eq!(B256::prefix(0), B256::EMPTY);
        assert_eq!(B256::prefix(256).count(), 256);
    }

    #[test]
    fn closure_and_reduction() {
        // Feed the full relation of a 4-chain; only consecutive covers remain.
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let p = Poset::from_covers(4, &edges).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2), (2, 3)]);
        assert!(p.leq(0, 3) && !p.leq(3, 0));
        assert_eq!(p.minimals(), vec![0]);
        assert_eq!(p.maximals(), vec![3]);
    }

    #[test]
    fn cycles_are_rejected() {
        assert!(matches!(
            Poset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(Error::CycleDetected(_))
        ));
        assert!(matches!(
            Poset::from_covers(1, &[(0, 0)]),
            Err(Error::CycleDetected(0))
        ));
    }

    #[test]
    fn size_cap() {
        assert!(matches!(
            Poset::from_covers(POSET_CAP + 1, &[]),
            Err(Error::PosetTooLarge(_))
        ));
    }

    #[test]
    fn a2_antichain_counts() {
        let p = a2_roots();
        let all = p.antichain_poly(&AntichainQuery::default());
        assert_eq!(all.coeffs(), &[1, 3, 1]); // the rank-2 Narayana row
        assert_eq!(p.antichain_count(), 5);

        // Label the two minimal roots as distinct simples; the top gets both.
        let labels = vec![0b01, 0b10, 0b11];
        let full_support = p.antichain_poly(&AntichainQuery {
            labels: Some(&labels),
            required_union: 0b11,
            ..Default::default()
        });
        assert_eq!(full_support.coeffs(), &[0, 1, 1]);

        let mut forbidden = B256::EMPTY;
        forbidden.insert(0);
        forbidden.insert(1);
        let no_simples = p.antichain_poly(&AntichainQuery {
            forbidden,
            ..Default::default()
        });
        assert_eq!(no_simples.coeffs(), &[1, 1]);

        let both = p.antichain_poly(&AntichainQuery {
            forbidden,
            labels: Some(&labels),
            required_union: 0b11,
        });
        assert_eq!(both.coeffs(), &[0, 1]);
    }

    #[test]
    fn lattice_classification() {
        // Chain: distributive and a lattice of its own ideals.
        let chain = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(chain.is_lattice() && chain.is_distributive() && chain.is_birkhoff());

        // The 2x2 grid (diamond) is distributive.
        let diamond = Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(diamond.is_distributive() && diamond.is_birkhoff());
        assert_eq!(diamond.join_irreducibles(), vec![1, 2]);

        // M3: three incomparable atoms between bottom and top; modular but
        // not distributive.
        let m3 = Poset::from_covers(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        assert!(m3.is_lattice() && !m3.is_distributive() && !m3.is_birkhoff());

        // N5: the pentagon, not distributive.
        let n5 =
            Poset::from_covers(5, &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert!(n5.is_lattice() && !n5.is_distributive());

        // A two-element antichain has no joins at all.
        let pair = Poset::from_covers(2, &[]).unwrap();
        assert!(!pair.is_lattice() && !pair.is_distributive());

        // A2 root poset: no bottom element, so not a lattice.
        assert!(!a2_roots().is_lattice());
    }

    #[test]
    fn join_meet_tables() {
        let diamond = Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let join = diamond.join_table().unwrap();
        let meet = diamond.meet_table().unwrap();
        assert_eq!(join[1 * 4 + 2], 3);
        assert_eq!(meet[1 * 4 + 2], 0);
        assert_eq!(join[0 * 4 + 2], 2);
        assert_eq!(meet[3 * 4 + 1], 1);
    }

    #[test]
    fn dual_swaps_everything() {
        let p = a2_roots();
        let d = p.dual();
        assert!(d.leq(2, 0) && !d.leq(0, 2));
        assert_eq!(d.covers(), &[(2, 0), (2, 1)]);
        assert_eq!(d.dual(), p);
        assert_eq!(
            d.antichain_poly(&AntichainQuery::default()),
            p.antichain_poly(&AntichainQuery::default())
        );
    }

    #[test]
    fn induced_subposet() {
        let chain = Poset::from_covers(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let sub = chain.induced(&[0, 2, 3]);
        assert_eq!(sub.covers(), &[(0, 1), (1, 2)]);
        let anti = chain.induced(&[1]);
        assert_eq!(anti.len(), 1);
    }

    #[test]
    fn text_roundtrip() {
        let p = a2_roots();
        let text = p.to_text(&[0, 1]);
        let (q, simples) = Poset::parse_text(&text).unwrap();
        assert_eq!(q, p);
        assert_eq!(simples, vec![0, 1]);

        let commented = "# a poset\n3\n# simples next\nsimples 1 0\n0 2\n1 2\n";
        let (q2, s2) = Poset::parse_text(commented).unwrap();
        assert_eq!(q2, p);
        assert_eq!(s2, vec![0, 1]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Poset::parse_text(""), Err(Error::ParseError(_))));
        assert!(matches!(Poset::parse_text("x"), Err(Error::ParseError(_))));
        assert!(matches!(Poset::parse_text("2\n0"), Err(Error::ParseError(_))));
        assert!(matches!(Poset::parse_text("2\n0 5"), Err(Error::ParseError(_))));
        assert!(matches!(
            Poset::parse_text("2\nsimples 7"),
            Err(Error::ParseError(_))
        ));
        assert!(matches!(
            Poset::parse_text("2\n0 1 1"),
            Err(Error::ParseError(_))
        ));
    }

    #[test]
    fn birkhoff_for_boolean_lattice() {
        // Subsets of {0,1,2} ordered by inclusion.
        let mut edges = Vec::new();
        for a in 0u32..8 {
            for b in 0u32..8 {
                if a != b && a & b == a {
                    edges.push((a as usize, b as usize));
                }
            }
        }
        let boolean = Poset::from_covers(8, &edges).unwrap();
        assert!(boolean.is_distributive() && boolean.is_birkhoff());
        assert_eq!(boolean.join_irreducibles().len(), 3);
    }

    proptest! {
        #[test]
        fn antichain_poly_matches_naive(
            n in 1usize..9,
            raw_edges in prop::collection::vec((0usize..9, 0usize..9), 0..14),
            raw_labels in prop::collection::vec(0u64..16, 9),
            required in 0u64..16,
            forbidden_mask in 0u32..512,
        ) {
            // Orient edges upward to guarantee acyclicity.
            let edges: Vec<(usize, usize)> = raw_edges
                .into_iter()
                .filter(|&(a, b)| a < n && b < n && a != b)
                .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
                .collect();
            let poset = Poset::from_covers(n, &edges).unwrap();
            let labels = &raw_labels[..n];
            let mut forbidden = B256::EMPTY;
            for i in 0..n {
                if forbidden_mask >> i & 1 == 1 {
                    forbidden.insert(i);
                }
            }
            for query in [
                AntichainQuery::default(),
                AntichainQuery { forbidden, ..Default::default() },
                AntichainQuery { labels: Some(labels), required_union: required, ..Default::default() },
                AntichainQuery { forbidden, labels: Some(labels), required_union: required },
            ] {
                prop_assert_eq!(
                    poset.antichain_poly(&query),
                    naive_antichain_poly(&poset, &query)
                );
            }
        }
    }
}
