//! The weak order on a finite Coxeter group.
//!
//! Elements are encoded by their inversion sets — bitmasks over the positive
//! roots (every supported group has at most 64) — so order comparison is a
//! subset test, and joins and meets reduce to greedy walks along cover edges.
//! The whole group is materialized breadth-first up to [`crate::WEAK_ORDER_CAP`].

use crate::roots::{GroupType, RootSystem};
use crate::{Error, Result, WEAK_ORDER_CAP};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

/// The weak order on a finite Coxeter group.
pub struct WeakOrder {
    pub group_type: GroupType,
    pub rank: usize,
    pub num_roots: usize,
    pub rs: RootSystem,
    /// Inversion bitmask of each element, over positive-root indices.
    inv: Vec<u64>,
    len: Vec<u32>,
    /// `nbr[e * rank + i]` is the element `e * s_i`.
    nbr: Vec<u32>,
    /// Right-descent mask of each element.
    descents: Vec<u16>,
    /// Support mask of each element (letters occurring in reduced words).
    supp: Vec<u16>,
    /// One fixed reduced word, as a breadth-first spanning tree.
    parent: Vec<u32>,
    parent_letter: Vec<u8>,
    index_of: HashMap<u64, u32>,
    /// For the `A` family: `span_root[l * rank + r]` is the index of the
    /// positive root supported on letters `l..=r`.
    span_root: Vec<u8>,
}

impl WeakOrder {
    /// Materializes the weak order of a type.
    pub fn new(group_type: GroupType) -> Result<WeakOrder> {
        let order = group_type.group_order();
        if order > WEAK_ORDER_CAP as u64 {
            return Err(Error::WeakOrderTooLarge(order as usize));
        }
        let rs = RootSystem::new(group_type)?;
        Ok(Self::build(group_type, rs))
    }

    fn build(group_type: GroupType, rs: RootSystem) -> WeakOrder {
        let rank = rs.n;
        let m = rs.num_positive();
        assert!(m <= 64, "inversion sets must fit one machine word");
        let order = group_type.group_order() as usize;

        // Transient table of each element's action on the roots, as signed
        // indices (root r is stored as r+1, negated if the image is negative).
        let mut perm: Vec<Vec<i16>> = Vec::with_capacity(order);
        perm.push((1..=m as i16).collect());

        let mut inv = vec![0u64];
        let mut len = vec![0u32];
        let mut nbr = vec![u32::MAX; rank];
        let mut descents = vec![0u16];
        let mut supp = vec![0u16];
        let mut parent = vec![0u32];
        let mut parent_letter = vec![0u8];
        let mut index_of = HashMap::new();
        index_of.insert(0u64, 0u32);

        let mut e = 0usize;
        while e < perm.len() {
            for i in 0..rank {
                if nbr[e * rank + i] != u32::MAX {
                    continue;
                }
                let v = perm[e][i];
                if v < 0 {
                    // Descent: the neighbor is shorter and already known.
                    let beta = (-v - 1) as u64;
                    let other = index_of[&(inv[e] & !(1 << beta))];
                    nbr[e * rank + i] = other;
                    nbr[other as usize * rank + i] = e as u32;
                    continue;
                }
                // Ascent: discover or connect the longer element.
                let beta = (v - 1) as u64;
                let mask = inv[e] | 1 << beta;
                let other = *index_of.entry(mask).or_insert_with(|| {
                    let new_perm: Vec<i16> = (0..m)
                        .map(|b| {
                            if b == i {
                                -perm[e][i]
                            } else {
                                perm[e][rs.refl[i][b] as usize]
                            }
                        })
                        .collect();
                    let d = (0..rank)
                        .filter(|&j| new_perm[j] < 0)
                        .fold(0u16, |acc, j| acc | 1 << j);
                    let idx = perm.len() as u32;
                    perm.push(new_perm);
                    inv.push(mask);
                    len.push(len[e] + 1);
                    nbr.extend(std::iter::repeat(u32::MAX).take(rank));
                    descents.push(d);
                    supp.push(supp[e] | 1 << i);
                    parent.push(e as u32);
                    parent_letter.push(i as u8);
                    idx
                });
                nbr[e * rank + i] = other;
                nbr[other as usize * rank + i] = e as u32;
            }
            e += 1;
        }
        assert_eq!(perm.len(), order, "{group_type}: group order mismatch");

        let mut span_root = Vec::new();
        if matches!(group_type, GroupType::A(_)) {
            span_root = vec![u8::MAX; rank * rank];
            for (r, &s) in rs.support.iter().enumerate() {
                let l = s.trailing_zeros() as usize;
                let hi = 63 - s.leading_zeros() as usize;
                span_root[l * rank + hi] = r as u8;
            }
        }

        WeakOrder {
            group_type,
            rank,
            num_roots: m,
            rs,
            inv,
            len,
            nbr,
            descents,
            supp,
            parent,
            parent_letter,
            index_of,
            span_root,
        }
    }

    pub fn size(&self) -> usize {
        self.inv.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    /// The longest element.
    pub fn longest(&self) -> u32 {
        let last = self.size() - 1;
        debug_assert_eq!(self.len[last] as usize, self.num_roots);
        last as u32
    }

    pub fn len_of(&self, e: u32) -> u32 {
        self.len[e as usize]
    }

    pub fn inv_mask(&self, e: u32) -> u64 {
        self.inv[e as usize]
    }

    pub fn descent_mask(&self, e: u32) -> u16 {
        self.descents[e as usize]
    }

    pub fn num_descents(&self, e: u32) -> u32 {
        self.descents[e as usize].count_ones()
    }

    pub fn support_mask(&self, e: u32) -> u16 {
        self.supp[e as usize]
    }

    /// The element `e * s_i`.
    pub fn right_mul(&self, e: u32, i: usize) -> u32 {
        self.nbr[e as usize * self.rank + i]
    }

    /// Weak order comparison: containment of inversion sets.
    pub fn leq(&self, u: u32, v: u32) -> bool {
        self.inv[u as usize] & !self.inv[v as usize] == 0
    }

    pub fn element_by_inv(&self, mask: u64) -> Option<u32> {
        self.index_of.get(&mask).copied()
    }

    /// The positive root separating `e` from its lower cover `e * s_i`
    /// (requires `i` to be a descent of `e`).
    pub fn cover_root(&self, e: u32, i: usize) -> usize {
        debug_assert!(self.descents[e as usize] >> i & 1 == 1);
        let other = self.right_mul(e, i);
        (self.inv[e as usize] ^ self.inv[other as usize]).trailing_zeros() as usize
    }

    /// The lower covers of `e`, as `(letter, element)` pairs.
    pub fn lower_covers(&self, e: u32) -> impl Iterator<Item = (usize, u32)> + '_ {
        let d = self.descents[e as usize];
        (0..self.rank)
            .filter(move |&i| d >> i & 1 == 1)
            .map(move |i| (i, self.right_mul(e, i)))
    }

    /// Whether some lower cover of `e` is separated by a simple root.
    pub fn has_simple_cover_root(&self, e: u32) -> bool {
        (0..self.rank)
            .filter(|&i| self.descents[e as usize] >> i & 1 == 1)
            .any(|i| self.cover_root(e, i) < self.rank)
    }

    /// Whether `s_i` is a left descent of `e` (its simple root is inverted).
    pub fn left_descent(&self, e: u32, i: usize) -> bool {
        self.inv[e as usize] >> i & 1 == 1
    }

    /// The element `s_i * e`, by transforming the inversion mask.
    pub fn left_mul(&self, i: usize, e: u32) -> u32 {
        let mask = self.inv[e as usize];
        let had = mask >> i & 1 == 1;
        let mut rest = mask & !(1u64 << i);
        let mut image = 0u64;
        while rest != 0 {
            let r = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            image |= 1 << self.rs.refl[i][r];
        }
        if !had {
            image |= 1 << i;
        }
        self.index_of[&image]
    }

    /// Join (least upper bound) in the weak order, by walking down from the
    /// longest element while some cover root stays outside the target set.
    pub fn join(&self, u: u32, v: u32) -> u32 {
        let target = self.inv[u as usize] | self.inv[v as usize];
        let mut w = self.longest();
        'walk: loop {
            let d = self.descents[w as usize];
            for i in 0..self.rank {
                if d >> i & 1 == 1 {
                    let x = self.right_mul(w, i);
                    let removed = self.inv[w as usize] ^ self.inv[x as usize];
                    if removed & target == 0 {
                        w = x;
                        continue 'walk;
                    }
                }
            }
            break;
        }
        debug_assert!(target & !self.inv[w as usize] == 0);
        w
    }

    /// Meet (greatest lower bound), dually: walk up from the identity along
    /// cover roots inside the target set.
    pub fn meet(&self, u: u32, v: u32) -> u32 {
        let target = self.inv[u as usize] & self.inv[v as usize];
        let mut w = self.identity();
        'walk: loop {
            let d = self.descents[w as usize];
            for i in 0..self.rank {
                if d >> i & 1 == 0 {
                    let x = self.right_mul(w, i);
                    let added = self.inv[w as usize] ^ self.inv[x as usize];
                    if added & target == added {
                        w = x;
                        continue 'walk;
                    }
                }
            }
            break;
        }
        debug_assert!(self.inv[w as usize] & !target == 0);
        w
    }

    /// Joins an arbitrary set (the identity for an empty set).
    pub fn join_all(&self, elems: &[u32]) -> u32 {
        elems.iter().fold(self.identity(), |acc, &e| self.join(acc, e))
    }

    /// The canonical join representation of `e`: one joinand per descent,
    /// where the joinand for the cover separated by root `t` is the unique
    /// minimal element below `e` whose inversions contain `t`.
    pub fn canonical_joinands(&self, e: u32) -> Result<Vec<u32>> {
        let mut joinands = Vec::new();
        for i in 0..self.rank {
            if self.descents[e as usize] >> i & 1 == 0 {
                continue;
            }
            let t = self.cover_root(e, i);
            // Search the elements x <= e with t inverted, collecting the
            // minimal ones.
            let mut seen = vec![false; self.size()];
            let mut stack = vec![e];
            seen[e as usize] = true;
            let mut minimal = Vec::new();
            while let Some(x) = stack.pop() {
                let mut is_minimal = true;
                for (_, y) in self.lower_covers(x) {
                    if self.inv[y as usize] >> t & 1 == 1 {
                        is_minimal = false;
                        if !seen[y as usize] {
                            seen[y as usize] = true;
                            stack.push(y);
                        }
                    }
                }
                if is_minimal {
                    minimal.push(x);
                }
            }
            minimal.sort_unstable();
            minimal.dedup();
            if minimal.len() != 1 {
                return Err(Error::NonUniqueMinimum(minimal.len()));
            }
            joinands.push(minimal[0]);
        }
        joinands.sort_unstable();
        Ok(joinands)
    }

    /// Projects `e` to the standard parabolic subgroup on the letters of
    /// `j_mask`, by restricting the inversion set.
    pub fn parabolic_projection(&self, e: u32, j_mask: u16) -> u32 {
        let roots = self.rs.roots_in_parabolic(j_mask as u64);
        self.index_of[&(self.inv[e as usize] & roots)]
    }

    /// A reduced word for `e`, read left to right.
    pub fn reduced_word(&self, e: u32) -> Vec<u8> {
        let mut word = Vec::with_capacity(self.len[e as usize] as usize);
        let mut x = e;
        while x != 0 {
            word.push(self.parent_letter[x as usize]);
            x = self.parent[x as usize];
        }
        word.reverse();
        word
    }

    /// Conjugation by the longest element.
    pub fn conjugate_by_longest(&self, e: u32) -> u32 {
        let w0 = self.reduced_word(self.longest());
        // e * w0 by right multiplications, then w0 * that from the left.
        let mut x = e;
        for &i in &w0 {
            x = self.right_mul(x, i as usize);
        }
        for &i in w0.iter().rev() {
            x = self.left_mul(i as usize, x);
        }
        x
    }

    /// One-line form of an `A`-family element: the word `w(1), .., w(n+1)`.
    pub fn one_line(&self, e: u32) -> Vec<u8> {
        assert!(
            matches!(self.group_type, GroupType::A(_)),
            "one-line forms are specific to the A family"
        );
        let mut line: Vec<u8> = (1..=self.rank as u8 + 1).collect();
        for &i in &self.reduced_word(e) {
            line.swap(i as usize, i as usize + 1);
        }
        line
    }

    /// The `A`-family element with the given one-line form.
    pub fn element_from_one_line(&self, line: &[u8]) -> Result<u32> {
        assert!(matches!(self.group_type, GroupType::A(_)));
        let n = self.rank;
        if line.len() != n + 1 {
            return Err(Error::ParseError(format!(
                "one-line form must have {} entries",
                n + 1
            )));
        }
        let mut pos = vec![usize::MAX; n + 2];
        for (p, &v) in line.iter().enumerate() {
            if !(1..=n as u8 + 1).contains(&v) || pos[v as usize] != usize::MAX {
                return Err(Error::ParseError(format!(
                    "not a permutation of 1..={}",
                    n + 1
                )));
            }
            pos[v as usize] = p;
        }
        let mut mask = 0u64;
        for a in 1..=n {
            for b in a + 1..=n + 1 {
                if pos[b] < pos[a] {
                    let r = self.span_root[(a - 1) * n + (b - 2)];
                    mask |= 1 << r;
                }
            }
        }
        Ok(self.index_of[&mask])
    }

    /// Serializes the order for reuse; see [`WeakOrder::of_type_cached`].
    pub fn cache_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "bicat-lattice-v1 {} {} {} {}",
            self.group_type,
            self.rank,
            self.num_roots,
            self.size()
        );
        for e in 0..self.size() {
            let _ = write!(out, "{:x} {}", self.inv[e], self.len[e]);
            for i in 0..self.rank {
                let _ = write!(out, " {}", self.nbr[e * self.rank + i]);
            }
            out.push('\n');
        }
        out
    }

    /// Rebuilds a cached order; `None` on any inconsistency.
    pub fn from_cache_text(group_type: GroupType, text: &str) -> Option<WeakOrder> {
        let mut lines = text.lines();
        let header = lines.next()?;
        let mut h = header.split_whitespace();
        if h.next()? != "bicat-lattice-v1" || h.next()? != group_type.to_string() {
            return None;
        }
        let rank: usize = h.next()?.parse().ok()?;
        let num_roots: usize = h.next()?.parse().ok()?;
        let size: usize = h.next()?.parse().ok()?;
        let rs = RootSystem::new(group_type).ok()?;
        if rank != rs.n || num_roots != rs.num_positive() || size == 0 {
            return None;
        }
        let mut inv = Vec::with_capacity(size);
        let mut len = Vec::with_capacity(size);
        let mut nbr = Vec::with_capacity(size * rank);
        for line in lines.take(size) {
            let mut it = line.split_whitespace();
            inv.push(u64::from_str_radix(it.next()?, 16).ok()?);
            len.push(it.next()?.parse::<u32>().ok()?);
            for _ in 0..rank {
                let x: u32 = it.next()?.parse().ok()?;
                if x as usize >= size {
                    return None;
                }
                nbr.push(x);
            }
        }
        if inv.len() != size || inv[0] != 0 {
            return None;
        }
        let mut index_of = HashMap::with_capacity(size);
        for (e, &m) in inv.iter().enumerate() {
            if index_of.insert(m, e as u32).is_some() {
                return None; // duplicate inversion set
            }
            if m.count_ones() != len[e] {
                return None;
            }
        }
        // Derived per-element data.
        let mut descents = vec![0u16; size];
        let mut supp = vec![0u16; size];
        let mut parent = vec![0u32; size];
        let mut parent_letter = vec![0u8; size];
        for e in 0..size {
            for i in 0..rank {
                let o = nbr[e * rank + i] as usize;
                if len[o] >= len[e] && len[o] != len[e] + 1 {
                    return None;
                }
                if len[o] < len[e] {
                    descents[e] |= 1 << i;
                }
            }
        }
        // Elements must come in length order for parent derivation.
        for e in 1..size {
            if len[e] < len[e - 1] {
                return None;
            }
            let i = (0..rank).find(|&i| descents[e] >> i & 1 == 1)?;
            let p = nbr[e * rank + i];
            parent[e] = p;
            parent_letter[e] = i as u8;
            supp[e] = supp[p as usize] | 1 << i;
        }
        let mut span_root = Vec::new();
        if matches!(group_type, GroupType::A(_)) {
            span_root = vec![u8::MAX; rank * rank];
            for (r, &s) in rs.support.iter().enumerate() {
                let l = s.trailing_zeros() as usize;
                let hi = 63 - s.leading_zeros() as usize;
                span_root[l * rank + hi] = r as u8;
            }
        }
        Some(WeakOrder {
            group_type,
            rank,
            num_roots,
            rs,
            inv,
            len,
            nbr,
            descents,
            supp,
            parent,
            parent_letter,
            index_of,
            span_root,
        })
    }

    fn cache_file_name(group_type: GroupType) -> String {
        format!("{}.weak-order", group_type.to_string().replace(['(', ')'], "_"))
    }

    /// Builds the weak order, consulting and refreshing a cache directory.
    /// Unreadable or inconsistent cache files are silently rebuilt.
    pub fn of_type_cached(group_type: GroupType, cache_dir: Option<&Path>) -> Result<WeakOrder> {
        let path = cache_dir.map(|d| d.join(Self::cache_file_name(group_type)));
        if let Some(p) = &path {
            if let Ok(text) = std::fs::read_to_string(p) {
                if let Some(w) = Self::from_cache_text(group_type, &text) {
                    return Ok(w);
                }
            }
        }
        let w = Self::new(group_type)?;
        if let Some(p) = &path {
            let _ = std::fs::create_dir_all(p.parent().unwrap_or(Path::new(".")));
            let _ = std::fs::write(p, w.cache_text());
        }
        Ok(w)
    }
}

/// Counts the elements of the interval below a Coxeter element in absolute
/// order (ordered by reflection length), for small ranks.
///
/// This is an independent pipeline: it builds its own multiplication table
/// from the root-system action and never touches the weak order.
pub fn absolute_interval_count(group_type: GroupType, cox_word: &[u8]) -> Result<u64> {
    if group_type.rank() > 5 {
        return Err(Error::WeakOrderTooLarge(group_type.group_order() as usize));
    }
    let rs = RootSystem::new(group_type)?;
    let rank = rs.n;
    let m = rs.num_positive();

    // Signed action tables for every group element.
    let id: Vec<i16> = (1..=m as i16).collect();
    let simple = |i: usize| -> Vec<i16> {
        (0..m)
            .map(|b| if b == i { -id[i] } else { id[rs.refl[i][b] as usize] })
            .collect()
    };
    let apply = |p: &[i16], signed: i16| -> i16 {
        let v = p[signed.unsigned_abs() as usize - 1];
        if signed < 0 {
            -v
        } else {
            v
        }
    };
    let compose = |p: &[i16], q: &[i16]| -> Vec<i16> {
        // (p q)(root) = p(q(root))
        (0..m).map(|b| apply(p, q[b])).collect()
    };

    let mut elems: Vec<Vec<i16>> = vec![id.clone()];
    let mut index: HashMap<Vec<i16>, usize> = HashMap::new();
    index.insert(id.clone(), 0);
    let gens: Vec<Vec<i16>> = (0..rank).map(simple).collect();
    let mut cursor = 0;
    while cursor < elems.len() {
        for g in &gens {
            let next = compose(&elems[cursor], g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
        cursor += 1;
    }
    assert_eq!(elems.len() as u64, group_type.group_order());

    // Reflections correspond to the positive roots, generated by conjugation.
    let mut refl_of_root: Vec<Option<usize>> = vec![None; m];
    for i in 0..rank {
        refl_of_root[i] = Some(index[&gens[i]]);
    }
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..rank {
            for r in 0..m {
                if let Some(t) = refl_of_root[r] {
                    let image = rs.refl[i][r] as usize;
                    if refl_of_root[image].is_none() {
                        let conj = compose(&gens[i], &compose(&elems[t], &gens[i]));
                        refl_of_root[image] = Some(index[&conj]);
                        changed = true;
                    }
                }
            }
        }
    }
    let reflections: Vec<usize> = refl_of_root.into_iter().map(|t| t.unwrap()).collect();

    // Reflection length by breadth-first search in the Cayley graph.
    let mut lt = vec![u32::MAX; elems.len()];
    lt[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &t in &reflections {
            let y = index[&compose(&elems[x], &elems[t])];
            if lt[y] == u32::MAX {
                lt[y] = lt[x] + 1;
                queue.push_back(y);
            }
        }
    }

    let c = cox_word.iter().fold(id.clone(), |acc, &i| {
        compose(&acc, &gens[i as usize])
    });
    let c_idx = index[&c];
    assert_eq!(lt[c_idx] as usize, rank, "Coxeter elements have reflection length = rank");

    let inverse = |p: &[i16]| -> Vec<i16> {
        let mut out = vec![0i16; m];
        for (b, &v) in p.iter().enumerate() {
            let idx = v.unsigned_abs() as usize - 1;
            out[idx] = if v < 0 { -(b as i16 + 1) } else { b as i16 + 1 };
        }
        out
    };

    let count = (0..elems.len())
        .filter(|&w| {
            let rest = index[&compose(&inverse(&elems[w]), &c)];
            lt[w] + lt[rest] == rank as u32
        })
        .count();
    Ok(count as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_join(w: &WeakOrder, u: u32, v: u32) -> u32 {
        let target = w.inv_mask(u) | w.inv_mask(v);
        let mut best: Option<u32> = None;
        for e in 0..w.size() as u32 {
            if target & !w.inv_mask(e) == 0 {
                best = Some(match best {
                    None => e,
                    Some(b) => {
                        if w.len_of(e) < w.len_of(b) {
                            e
                        } else {
                            b
                        }
                    }
                });
            }
        }
        let b = best.unwrap();
        // Confirm it's comparable to every other upper bound.
        for e in 0..w.size() as u32 {
            if target & !w.inv_mask(e) == 0 {
                assert!(w.leq(b, e));
            }
        }
        b
    }

    fn brute_meet(w: &WeakOrder, u: u32, v: u32) -> u32 {
        let target = w.inv_mask(u) & w.inv_mask(v);
        let mut best: Option<u32> = None;
        for e in 0..w.size() as u32 {
            if w.inv_mask(e) & !target == 0 {
                best = Some(match best {
                    None => e,
                    Some(b) => {
                        if w.len_of(e) > w.len_of(b) {
                            e
                        } else {
                            b
                        }
                    }
                });
            }
        }
        let b = best.unwrap();
        for e in 0..w.size() as u32 {
            if w.inv_mask(e) & !target == 0 {
                assert!(w.leq(e, b));
            }
        }
        b
    }

    #[test]
    fn a2_structure() {
        let w = WeakOrder::new(GroupType::A(2)).unwrap();
        assert_eq!(w.size(), 6);
        let mut lens: Vec<u32> = (0..6).map(|e| w.len_of(e)).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3]);
        let s0 = w.right_mul(w.identity(), 0);
        let s1 = w.right_mul(w.identity(), 1);
        assert_eq!(w.join(s0, s1), w.longest());
        let s0s1 = w.right_mul(s0, 1);
        let s1s0 = w.right_mul(s1, 0);
        assert_eq!(w.meet(s0s1, s1s0), w.identity());
        // The cover root of s0*s1 at its unique descent is the non-simple root.
        assert_eq!(w.num_descents(s0s1), 1);
        assert!(!w.has_simple_cover_root(s0s1));
        assert!(w.has_simple_cover_root(s0));
        assert_eq!(w.support_mask(s0s1), 0b11);
    }

    #[test]
    fn joins_meets_match_brute_force() {
        for t in [GroupType::A(3), GroupType::B(3)] {
            let w = WeakOrder::new(t).unwrap();
            for u in 0..w.size() as u32 {
                for v in 0..w.size() as u32 {
                    assert_eq!(w.join(u, v), brute_join(&w, u, v), "{t} join {u} {v}");
                    assert_eq!(w.meet(u, v), brute_meet(&w, u, v), "{t} meet {u} {v}");
                }
            }
        }
    }

    #[test]
    fn one_line_roundtrip() {
        let w = WeakOrder::new(GroupType::A(3)).unwrap();
        let mut seen = std::collections::HashSet::new();
        for e in 0..w.size() as u32 {
            let line = w.one_line(e);
            assert_eq!(w.element_from_one_line(&line).unwrap(), e);
            assert_eq!(line.len() as u32, 4);
            seen.insert(line);
        }
        assert_eq!(seen.len(), 24);
        assert_eq!(w.one_line(w.identity()), vec![1, 2, 3, 4]);
        assert_eq!(w.one_line(w.longest()), vec![4, 3, 2, 1]);
        assert!(w.element_from_one_line(&[1, 1, 2, 3]).is_err());
        assert!(w.element_from_one_line(&[1, 2, 3]).is_err());
    }

    #[test]
    fn left_multiplication() {
        let w = WeakOrder::new(GroupType::A(3)).unwrap();
        for e in 0..w.size() as u32 {
            let line = w.one_line(e);
            for i in 0..3usize {
                // Left multiplication by s_i swaps the values i+1 and i+2.
                let mut expect = line.clone();
                for v in expect.iter_mut() {
                    if *v == i as u8 + 1 {
                        *v = i as u8 + 2;
                    } else if *v == i as u8 + 2 {
                        *v = i as u8 + 1;
                    }
                }
                assert_eq!(
                    w.left_mul(i, e),
                    w.element_from_one_line(&expect).unwrap()
                );
                // Left descent test matches the length drop.
                let product = w.left_mul(i, e);
                assert_eq!(w.left_descent(e, i), w.len_of(product) < w.len_of(e));
            }
        }
    }

    #[test]
    fn conjugation_by_longest() {
        let w = WeakOrder::new(GroupType::A(3)).unwrap();
        assert_eq!(w.conjugate_by_longest(w.identity()), w.identity());
        assert_eq!(w.conjugate_by_longest(w.longest()), w.longest());
        // Fixed points of one-line reversal+complement: 2^2 * 2! = 8 of them.
        let fixed = (0..w.size() as u32)
            .filter(|&e| w.conjugate_by_longest(e) == e)
            .count();
        assert_eq!(fixed, 8);
        // It is an involution and a lattice automorphism.
        for e in 0..w.size() as u32 {
            assert_eq!(w.conjugate_by_longest(w.conjugate_by_longest(e)), e);
        }
    }

    #[test]
    fn canonical_joinands_properties() {
        for t in [GroupType::A(3), GroupType::B(3)] {
            let w = WeakOrder::new(t).unwrap();
            for e in 0..w.size() as u32 {
                let can = w.canonical_joinands(e).unwrap();
                assert_eq!(can.len() as u32, w.num_descents(e), "{t}");
                assert_eq!(w.join_all(&can), e, "{t}: join of joinands");
                // Joinands form an antichain.
                for (ai, &a) in can.iter().enumerate() {
                    for &b in &can[ai + 1..] {
                        assert!(!w.leq(a, b) && !w.leq(b, a), "{t}: not an antichain");
                    }
                }
                // Irredundant: dropping any joinand loses the join.
                for drop in 0..can.len() {
                    let rest: Vec<u32> = can
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != drop)
                        .map(|(_, &x)| x)
                        .collect();
                    assert_ne!(w.join_all(&rest), e, "{t}: redundant joinand");
                }
            }
        }
    }

    #[test]
    fn parabolic_projection_properties() {
        let w = WeakOrder::new(GroupType::A(3)).unwrap();
        let j: u16 = 0b011;
        for e in 0..w.size() as u32 {
            let p = w.parabolic_projection(e, j);
            assert!(w.leq(p, e));
            assert!(w.support_mask(p) & !j == 0);
            // Projection is idempotent and dominates every parabolic element
            // below e.
            assert_eq!(w.parabolic_projection(p, j), p);
            for x in 0..w.size() as u32 {
                if w.support_mask(x) & !j == 0 && w.leq(x, e) {
                    assert!(w.leq(x, p));
                }
            }
        }
    }

    #[test]
    fn golden_types_build() {
        let h3 = WeakOrder::new(GroupType::H(3)).unwrap();
        assert_eq!(h3.size(), 120);
        assert_eq!(h3.num_roots, 15);
        assert_eq!(h3.len_of(h3.longest()), 15);
        let i25 = WeakOrder::new(GroupType::I2(5)).unwrap();
        assert_eq!(i25.size(), 10);
    }

    #[test]
    fn oversized_groups_are_rejected() {
        assert!(matches!(
            WeakOrder::new(GroupType::E(7)),
            Err(Error::WeakOrderTooLarge(_))
        ));
        assert!(matches!(
            WeakOrder::new(GroupType::A(8)),
            Err(Error::WeakOrderTooLarge(_))
        ));
    }

    #[test]
    fn cache_roundtrip() {
        let w = WeakOrder::new(GroupType::B(3)).unwrap();
        let text = w.cache_text();
        let r = WeakOrder::from_cache_text(GroupType::B(3), &text).unwrap();
        assert_eq!(r.size(), w.size());
        for e in 0..w.size() as u32 {
            assert_eq!(r.inv_mask(e), w.inv_mask(e));
            assert_eq!(r.descent_mask(e), w.descent_mask(e));
            assert_eq!(r.support_mask(e), w.support_mask(e));
            assert_eq!(r.len_of(e), w.len_of(e));
        }
        // Wrong type or tampered text is rejected.
        assert!(WeakOrder::from_cache_text(GroupType::A(3), &text).is_none());
        let corrupt = text.replace("bicat-lattice-v1", "bicat-lattice-v0");
        assert!(WeakOrder::from_cache_text(GroupType::B(3), &corrupt).is_none());
        let mut truncated = text.lines().take(10).collect::<Vec<_>>().join("\n");
        truncated.push('\n');
        assert!(WeakOrder::from_cache_text(GroupType::B(3), &truncated).is_none());
    }

    #[test]
    fn cached_build_writes_and_reuses() {
        let dir = tempfile::tempdir().unwrap();
        let w1 = WeakOrder::of_type_cached(GroupType::A(3), Some(dir.path())).unwrap();
        let file = dir.path().join("A3.weak-order");
        assert!(file.exists());
        // Corrupt the file; the rebuild must silently recover.
        std::fs::write(&file, "garbage").unwrap();
        let w2 = WeakOrder::of_type_cached(GroupType::A(3), Some(dir.path())).unwrap();
        assert_eq!(w1.size(), w2.size());
        let text = std::fs::read_to_string(&file).unwrap();
        assert!(text.starts_with("bicat-lattice-v1 A3"));
    }

    #[test]
    fn absolute_intervals_give_catalan_counts() {
        // Bipartite Coxeter words.
        assert_eq!(absolute_interval_count(GroupType::A(2), &[0, 1]).unwrap(), 5);
        assert_eq!(absolute_interval_count(GroupType::B(2), &[0, 1]).unwrap(), 6);
        // The count is independent of the Coxeter element.
        assert_eq!(
            absolute_interval_count(GroupType::A(3), &[0, 2, 1]).unwrap(),
            14
        );
        assert_eq!(
            absolute_interval_count(GroupType::A(3), &[0, 1, 2]).unwrap(),
            14
        );
        assert!(matches!(
            absolute_interval_count(GroupType::E(6), &[0, 1, 2, 3, 4, 5]),
            Err(Error::WeakOrderTooLarge(_))
        ));
    }
}
