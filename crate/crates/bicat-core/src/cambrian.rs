//! Sortable elements, Cambrian congruences, and clusters.
//!
//! Everything here is parametrized by a Coxeter element, given as a word that
//! lists each simple generator exactly once.

use crate::coxeter::WeakOrder;
use crate::qpoly::QPoly;
use crate::roots::{GroupType, RootSystem};
use crate::{Error, Result};
use std::collections::{HashSet, VecDeque};

/// A word for the "bipartite" Coxeter element: the generators of one side of
/// the diagram's two-coloring followed by the other side.  The side *not*
/// containing the lowest vertex of each component goes first; in type A this
/// is the convention under which sortable permutations draw arcs that pass to
/// the right of even points (see the `arcs` module).
pub fn bipartite_word(group_type: GroupType) -> Vec<u8> {
    let colors = group_type
        .diagram()
        .two_coloring()
        .expect("Coxeter diagrams are forests");
    let mut word: Vec<u8> = Vec::with_capacity(colors.len());
    for want in [1u8, 0u8] {
        word.extend(
            colors
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c == want)
                .map(|(i, _)| i as u8),
        );
    }
    word
}

/// The word `s_0 s_1 .. s_{n-1}`.
pub fn linear_word(group_type: GroupType) -> Vec<u8> {
    (0..group_type.rank() as u8).collect()
}

/// Whether a Coxeter word orients every diagram edge away from a source or
/// into a sink — equivalently, whether the element is bipartite.
pub fn is_bipartite_word(group_type: GroupType, word: &[u8]) -> bool {
    let diagram = group_type.diagram();
    let mut pos = vec![0usize; word.len()];
    for (p, &i) in word.iter().enumerate() {
        pos[i as usize] = p;
    }
    (0..diagram.n).all(|i| {
        let nb = diagram.neighbors(i);
        nb.iter().all(|&j| pos[j] > pos[i]) || nb.iter().all(|&j| pos[j] < pos[i])
    })
}

fn validate_word(rank: usize, word: &[u8]) -> Result<()> {
    let mut seen = vec![false; rank];
    if word.len() != rank {
        return Err(Error::ParseError(format!(
            "Coxeter word must list all {rank} generators"
        )));
    }
    for &i in word {
        if i as usize >= rank || seen[i as usize] {
            return Err(Error::ParseError(format!(
                "Coxeter word must be a permutation of 0..{rank}"
            )));
        }
        seen[i as usize] = true;
    }
    Ok(())
}

/// One Cambrian congruence of the weak order: the sortable elements and the
/// downward projection onto them.
pub struct Cambrian<'a> {
    pub order: &'a WeakOrder,
    pub word: Vec<u8>,
    sortable: Vec<bool>,
    pidown: Vec<u32>,
}

impl<'a> Cambrian<'a> {
    pub fn new(order: &'a WeakOrder, word: &[u8]) -> Result<Cambrian<'a>> {
        validate_word(order.rank, word)?;
        let sortable: Vec<bool> = (0..order.size() as u32)
            .map(|e| sorting_blocks(order, word, e).windows(2).all(|w| w[1] & !w[0] == 0))
            .collect();

        // Downward projection, filled in length order (breadth-first index
        // order): a sortable element is its own image; anything else projects
        // to the unique maximal projection among its lower covers.
        let mut pidown = vec![0u32; order.size()];
        for e in 0..order.size() as u32 {
            if sortable[e as usize] {
                pidown[e as usize] = e;
                continue;
            }
            let best = order
                .lower_covers(e)
                .map(|(_, x)| pidown[x as usize])
                .max_by_key(|&p| order.len_of(p))
                .expect("non-sortable elements have descents");
            for (_, x) in order.lower_covers(e) {
                if !order.leq(pidown[x as usize], best) {
                    return Err(Error::NonUniqueMaximum(e as usize));
                }
            }
            pidown[e as usize] = best;
        }
        Ok(Cambrian {
            order,
            word: word.to_vec(),
            sortable,
            pidown,
        })
    }

    pub fn is_sortable(&self, e: u32) -> bool {
        self.sortable[e as usize]
    }

    /// The projection to the largest sortable element below `e`.
    pub fn project_down(&self, e: u32) -> u32 {
        self.pidown[e as usize]
    }

    pub fn sortable_elements(&self) -> Vec<u32> {
        (0..self.order.size() as u32)
            .filter(|&e| self.sortable[e as usize])
            .collect()
    }

    pub fn sortable_count(&self) -> u64 {
        self.sortable.iter().filter(|&&b| b).count() as u64
    }

    /// The sorting word of `e`: its lexicographically first reduced word as a
    /// subword of the infinite repetition of the Coxeter word.
    pub fn sorting_word(&self, e: u32) -> Vec<u8> {
        sorting_word(self.order, &self.word, e)
    }

    /// Descent generating polynomial of all sortable elements.
    pub fn sortable_descent_poly(&self) -> QPoly {
        self.descent_poly(|_, _| true)
    }

    /// Descent generating polynomial of the full-support sortable elements.
    pub fn positive_descent_poly(&self) -> QPoly {
        let full = (1u16 << self.order.rank) - 1;
        self.descent_poly(|o, e| o.support_mask(e) == full)
    }

    /// Descent generating polynomial of the full-support sortable elements
    /// none of whose cover roots is simple. Only supported for bipartite
    /// Coxeter words, where this statistic matches the doubly-positive counts.
    pub fn positive_no_simple_descent_poly(&self) -> Result<QPoly> {
        if !is_bipartite_word(self.order.group_type, &self.word) {
            return Err(Error::NotBipartite);
        }
        let full = (1u16 << self.order.rank) - 1;
        Ok(self.descent_poly(|o, e| {
            o.support_mask(e) == full && !o.has_simple_cover_root(e)
        }))
    }

    fn descent_poly(&self, keep: impl Fn(&WeakOrder, u32) -> bool) -> QPoly {
        let mut poly = QPoly::zero();
        for e in 0..self.order.size() as u32 {
            if self.sortable[e as usize] && keep(self.order, e) {
                poly.add_term(1, self.order.num_descents(e) as usize);
            }
        }
        poly
    }

}

/// Hasse-diagram degrees of the induced subposet of the weak order on the
/// given elements, one row per element: `(element, descents, down, up)`.
fn induced_degrees(order: &WeakOrder, bottoms: &[u32]) -> Vec<(u32, u32, u32, u32)> {
    let k = bottoms.len();
    let mut below = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            below[a][b] = a != b && order.leq(bottoms[a], bottoms[b]);
        }
    }
    let mut down = vec![0u32; k];
    let mut up = vec![0u32; k];
    for a in 0..k {
        for b in 0..k {
            if below[a][b] && !(0..k).any(|m| below[a][m] && below[m][b]) {
                up[a] += 1;
                down[b] += 1;
            }
        }
    }
    (0..k)
        .map(|a| (bottoms[a], order.num_descents(bottoms[a]), down[a], up[a]))
        .collect()
}

fn sorting_word(order: &WeakOrder, word: &[u8], e: u32) -> Vec<u8> {
    let mut out = Vec::new();
    let mut r = e;
    while r != order.identity() {
        for &i in word {
            if order.left_descent(r, i as usize) {
                out.push(i);
                r = order.left_mul(i as usize, r);
            }
        }
    }
    out
}

/// Letter sets of the sorting word, one mask per pass through the Coxeter
/// word. The element is sortable exactly when these weakly decrease.
pub fn sorting_blocks(order: &WeakOrder, word: &[u8], e: u32) -> Vec<u16> {
    let mut blocks = Vec::new();
    let mut r = e;
    while r != order.identity() {
        let mut mask = 0u16;
        for &i in word {
            if order.left_descent(r, i as usize) {
                mask |= 1 << i;
                r = order.left_mul(i as usize, r);
            }
        }
        blocks.push(mask);
    }
    blocks
}

/// The pair of Cambrian congruences for a Coxeter word and its reverse.
pub struct TwinPair<'a> {
    pub fwd: Cambrian<'a>,
    pub rev: Cambrian<'a>,
}

impl<'a> TwinPair<'a> {
    pub fn new(order: &'a WeakOrder, word: &[u8]) -> Result<TwinPair<'a>> {
        let rev_word: Vec<u8> = word.iter().rev().copied().collect();
        Ok(TwinPair {
            fwd: Cambrian::new(order, word)?,
            rev: Cambrian::new(order, &rev_word)?,
        })
    }

    /// An element is bisortable when it is the join of its two projections.
    pub fn is_bisortable(&self, e: u32) -> bool {
        let order = self.fwd.order;
        order.join(self.fwd.project_down(e), self.rev.project_down(e)) == e
    }

    pub fn bisortable_elements(&self) -> Vec<u32> {
        (0..self.fwd.order.size() as u32)
            .filter(|&e| self.is_bisortable(e))
            .collect()
    }

    pub fn bisortable_count(&self) -> u64 {
        self.bisortable_elements().len() as u64
    }

    /// Descent generating polynomial of the bisortable elements.
    pub fn bisortable_descent_poly(&self) -> QPoly {
        let mut poly = QPoly::zero();
        for e in self.bisortable_elements() {
            poly.add_term(1, self.fwd.order.num_descents(e) as usize);
        }
        poly
    }

    /// Number of distinct projection pairs over the whole group. Each pair is
    /// hit by exactly one bisortable element, so this equals
    /// [`TwinPair::bisortable_count`]; the two are computed independently.
    pub fn projection_pair_count(&self) -> u64 {
        let mut pairs = HashSet::new();
        for e in 0..self.fwd.order.size() as u32 {
            pairs.insert((self.fwd.project_down(e), self.rev.project_down(e)));
        }
        pairs.len() as u64
    }

    /// Degrees of the quotient lattice of the common refinement of the two
    /// congruences, one row per bisortable element:
    /// `(element, descents, down-degree, up-degree)`.
    pub fn quotient_degrees(&self) -> Vec<(u32, u32, u32, u32)> {
        induced_degrees(self.fwd.order, &self.bisortable_elements())
    }

    /// Whether every class of the quotient lattice has total degree `d`.
    /// Holds with `d = rank` for bipartite Coxeter words but not in general.
    pub fn quotient_is_regular(&self, d: u32) -> bool {
        self.quotient_degrees()
            .iter()
            .all(|&(_, _, dn, up)| dn + up == d)
    }
}

/// The number of permutations of `1..=m` avoiding both vincular patterns that
/// characterize twisted-pair sortability in the linear case.
pub fn baxter_number(m: u64) -> u64 {
    let binom = |n: u64, k: u64| -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
    };
    (1..=m)
        .map(|k| binom(m + 1, k - 1) * binom(m + 1, k) * binom(m + 1, k + 1))
        .sum::<u64>()
        / (binom(m + 1, 1) * binom(m + 1, 2))
}

/// Exchangeability of two almost-positive roots with respect to a Coxeter
/// word, decided by repeatedly rotating the word. Roots are encoded as signed
/// indices: `r+1` for the positive root `r`, `-(i+1)` for the negated simple
/// root of generator `i`.
fn roots_compatible(rs: &RootSystem, word: &[u8], a: i32, b: i32) -> Result<bool> {
    let coeff_zero = |beta: i32, i: usize| -> bool {
        if beta < 0 {
            (-beta - 1) as usize != i
        } else {
            rs.support[(beta - 1) as usize] >> i & 1 == 0
        }
    };
    let sigma = |i: usize, beta: i32| -> i32 {
        if beta == -(i as i32 + 1) {
            i as i32 + 1
        } else if beta < 0 {
            beta
        } else if (beta - 1) as usize == i {
            -(i as i32 + 1)
        } else {
            rs.refl[i][(beta - 1) as usize] as i32 + 1
        }
    };
    let mut word: VecDeque<u8> = word.iter().copied().collect();
    let (mut a, mut b) = (a, b);
    // A positive root must go negative within h full rotations (2|roots|
    // steps), and a negated simple resolves within one more rotation.
    let cap = 2 * rs.num_positive() + 2 * rs.n;
    for _ in 0..cap {
        let i = word[0] as usize;
        if a == -(i as i32 + 1) {
            return Ok(coeff_zero(b, i));
        }
        if b == -(i as i32 + 1) {
            return Ok(coeff_zero(a, i));
        }
        a = sigma(i, a);
        b = sigma(i, b);
        word.rotate_left(1);
    }
    Err(Error::NonTermination(cap))
}

/// Counts the maximal sets of pairwise-exchangeable almost-positive roots,
/// checking along the way that each has exactly `rank` members. Limited to
/// small ranks; this is an independent pipeline used for cross-validation.
pub fn cluster_count(group_type: GroupType, word: &[u8]) -> Result<u64> {
    if group_type.rank() > 5 {
        return Err(Error::WeakOrderTooLarge(group_type.group_order() as usize));
    }
    validate_word(group_type.rank(), word)?;
    let rs = RootSystem::new(group_type)?;
    let n = rs.n;
    let m = rs.num_positive();
    let total = m + n;
    assert!(total <= 64);

    // Vertices: 0..n are the negated simples, n..n+m the positive roots.
    let encode = |v: usize| -> i32 {
        if v < n {
            -(v as i32 + 1)
        } else {
            (v - n) as i32 + 1
        }
    };
    let mut adj = vec![0u64; total];
    for u in 0..total {
        for v in u + 1..total {
            if roots_compatible(&rs, word, encode(u), encode(v))? {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }

    fn max_cliques(adj: &[u64], r_size: u32, p: u64, x: u64, expect: u32, count: &mut u64) {
        if p == 0 && x == 0 {
            assert_eq!(r_size, expect, "maximal clique of unexpected size");
            *count += 1;
            return;
        }
        // Pivot on the candidate with the most neighbors in p.
        let pivot = {
            let mut best = (u32::MAX, 0usize);
            let mut pool = p | x;
            while pool != 0 {
                let v = pool.trailing_zeros() as usize;
                pool &= pool - 1;
                let deg = (adj[v] & p).count_ones();
                if best.0 == u32::MAX || deg > (adj[best.1] & p).count_ones() {
                    best = (deg, v);
                }
            }
            best.1
        };
        let mut candidates = p & !adj[pivot];
        let (mut p, mut x) = (p, x);
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            max_cliques(adj, r_size + 1, p & adj[v], x & adj[v], expect, count);
            p &= !(1u64 << v);
            x |= 1 << v;
        }
    }

    let mut count = 0u64;
    let all = if total == 64 { u64::MAX } else { (1u64 << total) - 1 };
    max_cliques(&adj, 0, all, 0, n as u32, &mut count);
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(t: GroupType) -> WeakOrder {
        WeakOrder::new(t).unwrap()
    }

    #[test]
    fn word_constructors_and_validation() {
        assert_eq!(bipartite_word(GroupType::A(3)), vec![1, 0, 2]);
        assert_eq!(bipartite_word(GroupType::D(4)), vec![1, 0, 2, 3]);
        assert_eq!(linear_word(GroupType::B(3)), vec![0, 1, 2]);
        assert!(is_bipartite_word(GroupType::A(3), &[0, 2, 1]));
        assert!(is_bipartite_word(GroupType::A(2), &[0, 1]));
        assert!(!is_bipartite_word(GroupType::A(3), &[0, 1, 2]));
        let w = order(GroupType::A(2));
        assert!(Cambrian::new(&w, &[0, 0]).is_err());
        assert!(Cambrian::new(&w, &[0]).is_err());
        assert!(Cambrian::new(&w, &[0, 2]).is_err());
    }

    #[test]
    fn a2_sorting_words_and_sortables() {
        let w = order(GroupType::A(2));
        let c = Cambrian::new(&w, &[0, 1]).unwrap();
        assert_eq!(c.sorting_word(w.longest()), vec![0, 1, 0]);
        assert_eq!(c.sortable_count(), 5);
        // s1*s0 is the unique non-sortable element; it projects to s1.
        let s1s0 = w.left_mul(1, w.left_mul(0, w.identity()));
        assert!(!c.is_sortable(s1s0));
        let s1 = w.left_mul(1, w.identity());
        assert_eq!(c.project_down(s1s0), s1);
        assert_eq!(
            sorting_blocks(&w, &[0, 1], s1s0),
            vec![0b10, 0b01],
            "blocks fail to nest"
        );
        assert_eq!(c.sortable_descent_poly(), QPoly::from_coeffs(&[1, 3, 1]));
    }

    #[test]
    fn narayana_rows_by_descents() {
        for (t, row) in [
            (GroupType::A(3), vec![1, 6, 6, 1]),
            (GroupType::B(3), vec![1, 9, 9, 1]),
            (GroupType::H(3), vec![1, 15, 15, 1]),
            (GroupType::D(4), vec![1, 12, 24, 12, 1]),
        ] {
            let w = order(t);
            for word in [bipartite_word(t), linear_word(t)] {
                let c = Cambrian::new(&w, &word).unwrap();
                assert_eq!(
                    c.sortable_descent_poly(),
                    QPoly::from_coeffs(&row[..]),
                    "{t} {word:?}"
                );
            }
        }
    }

    #[test]
    fn positive_and_doubly_positive_rows() {
        let w = order(GroupType::A(3));
        for word in [vec![0, 2, 1], vec![0, 1, 2], vec![2, 1, 0]] {
            let c = Cambrian::new(&w, &word).unwrap();
            // Full-support sortables: same row for every Coxeter element.
            assert_eq!(
                c.positive_descent_poly(),
                QPoly::from_coeffs(&[0, 1, 3, 1]),
                "{word:?}"
            );
        }
        let bip = Cambrian::new(&w, &[0, 2, 1]).unwrap();
        assert_eq!(
            bip.positive_no_simple_descent_poly().unwrap(),
            QPoly::from_coeffs(&[0, 1, 1])
        );
        let lin = Cambrian::new(&w, &[0, 1, 2]).unwrap();
        assert!(matches!(
            lin.positive_no_simple_descent_poly(),
            Err(Error::NotBipartite)
        ));
    }

    #[test]
    fn bisortable_counts_and_rows() {
        let a2 = order(GroupType::A(2));
        let t = TwinPair::new(&a2, &[0, 1]).unwrap();
        assert_eq!(t.bisortable_count(), 6);
        assert_eq!(t.bisortable_descent_poly(), QPoly::from_coeffs(&[1, 4, 1]));
        assert_eq!(t.projection_pair_count(), 6);

        let a3 = order(GroupType::A(3));
        let t = TwinPair::new(&a3, &[0, 2, 1]).unwrap();
        assert_eq!(t.bisortable_count(), 20);
        assert_eq!(
            t.bisortable_descent_poly(),
            QPoly::from_coeffs(&[1, 9, 9, 1])
        );
        assert_eq!(t.projection_pair_count(), 20);

        let b2 = order(GroupType::B(2));
        let t = TwinPair::new(&b2, &[0, 1]).unwrap();
        assert_eq!(t.bisortable_count(), 8);
        assert_eq!(t.bisortable_descent_poly(), QPoly::from_coeffs(&[1, 6, 1]));

        let g2 = order(GroupType::G2);
        let t = TwinPair::new(&g2, &[0, 1]).unwrap();
        assert_eq!(t.bisortable_count(), 12);
        assert_eq!(
            t.bisortable_descent_poly(),
            QPoly::from_coeffs(&[1, 10, 1])
        );
    }

    #[test]
    fn linear_twin_pairs_match_baxter_numbers() {
        assert_eq!(
            (1u64..=6).map(baxter_number).collect::<Vec<_>>(),
            vec![1, 2, 6, 22, 92, 422]
        );
        for n in 1..=4usize {
            let w = order(GroupType::A(n));
            let t = TwinPair::new(&w, &linear_word(GroupType::A(n))).unwrap();
            assert_eq!(t.bisortable_count(), baxter_number(n as u64 + 1), "A{n}");
            assert_eq!(t.projection_pair_count(), baxter_number(n as u64 + 1));
        }
    }

    #[test]
    fn quotient_degrees_and_regularity() {
        // Bipartite bisortable quotients are regular of degree rank; the
        // linear A3 one is not. Down-degrees always match descent counts.
        for t in [GroupType::A(3), GroupType::B(2), GroupType::G2] {
            let w = order(t);
            let p = TwinPair::new(&w, &bipartite_word(t)).unwrap();
            assert!(p.quotient_is_regular(t.rank() as u32), "{t}");
            for (e, des, down, _) in p.quotient_degrees() {
                assert_eq!(des, down, "{t} element {e}");
            }
        }
        let a3 = order(GroupType::A(3));
        let lin = TwinPair::new(&a3, &[0, 1, 2]).unwrap();
        assert!(!lin.quotient_is_regular(3));
        for (e, des, down, _) in lin.quotient_degrees() {
            assert_eq!(des, down, "element {e}");
        }
    }

    #[test]
    fn cluster_counts_are_catalan() {
        for (t, expect) in [
            (GroupType::A(2), 5),
            (GroupType::A(3), 14),
            (GroupType::B(2), 6),
            (GroupType::B(3), 20),
            (GroupType::G2, 8),
            (GroupType::H(3), 32),
        ] {
            for word in [bipartite_word(t), linear_word(t)] {
                assert_eq!(cluster_count(t, &word).unwrap(), expect, "{t} {word:?}");
            }
        }
        assert!(matches!(
            cluster_count(GroupType::E(6), &linear_word(GroupType::E(6))),
            Err(Error::WeakOrderTooLarge(_))
        ));
    }
}
