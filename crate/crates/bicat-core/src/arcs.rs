//! Arc diagrams of permutations and their bijections.
//!
//! Points `1..=p` are drawn bottom to top; an arc joins a lower endpoint to an
//! upper endpoint and passes to the left or to the right of every point
//! strictly between them.  [`delta`] reads one arc off each descent of a
//! permutation and is a bijection onto noncrossing diagrams.  Diagrams whose
//! arcs alternate sides by parity are counted by pairs of equal-size endpoint
//! sets via [`pi_map`]/[`eta`], and centrally symmetric diagrams model signed
//! permutations.
//!
//! Sortability of a permutation relative to a Coxeter word is decided here by
//! descent moves over a [`Barring`]; `cambrian` decides the same property
//! lattice-theoretically, and the two routes are compared in tests.

use crate::{Error, Result};
use std::fmt;

/// Largest `n` accepted by the alternating-diagram enumerators (diagrams live
/// on `n+1` points).
pub const ALTERNATING_ENUM_CAP: usize = 9;

/// Largest supported one-line length (= point count).
pub const MAX_POINTS: usize = 30;

/// Bits 2, 4, 6, … — the even points.
const EVEN_POINTS: u32 = 0x5555_5554;
/// Bits 1, 3, 5, … — the odd points.
const ODD_POINTS: u32 = 0xAAAA_AAAA;

/// Bits `lo..=hi`, empty when `lo > hi`.
fn mask_range(lo: u8, hi: u8) -> u32 {
    if lo > hi {
        0
    } else {
        (((1u64 << (hi - lo + 1)) - 1) << lo) as u32
    }
}

/// One arc: `bottom < top`, with `left` holding the points strictly between
/// the endpoints that the arc passes to the left of (bit `j` ⇔ point `j`);
/// the rest of the interior is passed on the right.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Arc {
    pub bottom: u8,
    pub top: u8,
    pub left: u32,
}

impl Arc {
    pub fn new(bottom: u8, top: u8, left: u32) -> Arc {
        assert!(bottom < top, "arc endpoints must satisfy bottom < top");
        let arc = Arc { bottom, top, left };
        assert_eq!(
            left & !arc.interior(),
            0,
            "left set must lie strictly between the endpoints"
        );
        arc
    }

    /// Points strictly between the endpoints.
    pub fn interior(&self) -> u32 {
        mask_range(self.bottom + 1, self.top - 1)
    }

    /// Interior points passed on the right.
    pub fn right(&self) -> u32 {
        self.interior() & !self.left
    }

    pub fn passes_left_of(&self, p: u8) -> bool {
        self.left >> p & 1 == 1
    }

    pub fn passes_right_of(&self, p: u8) -> bool {
        self.right() >> p & 1 == 1
    }

    pub fn is_alternating(&self) -> bool {
        !matches!(classify_arc(self), ArcClass::Neither)
    }

    /// The image of the arc under the half-turn `j ↦ points+1−j` of the point
    /// line.  Endpoints exchange roles and every side flips.
    pub fn mirrored(&self, points: u8) -> Arc {
        let p1 = points + 1;
        let mut left = 0u32;
        let mut m = self.right();
        while m != 0 {
            let j = m.trailing_zeros();
            left |= 1 << (p1 as u32 - j);
            m &= m - 1;
        }
        Arc::new(p1 - self.top, p1 - self.bottom, left)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} L:", self.bottom, self.top)?;
        let mut m = self.left;
        let mut first = true;
        while m != 0 {
            let j = m.trailing_zeros();
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
            first = false;
            m &= m - 1;
        }
        Ok(())
    }
}

/// Side pattern of an arc with respect to the parity of its interior points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ArcClass {
    /// Right of every even interior point, left of every odd one.
    RightEven,
    /// Left of every even interior point, right of every odd one.
    LeftEven,
    /// Adjacent endpoints: no interior, so both patterns hold vacuously.
    Both,
    /// Passes on the same side of two consecutive points.
    Neither,
}

pub fn classify_arc(arc: &Arc) -> ArcClass {
    let interior = arc.interior();
    if interior == 0 {
        return ArcClass::Both;
    }
    let right_even = arc.left == interior & ODD_POINTS;
    let left_even = arc.left == interior & EVEN_POINTS;
    match (right_even, left_even) {
        (true, false) => ArcClass::RightEven,
        (false, true) => ArcClass::LeftEven,
        (false, false) => ArcClass::Neither,
        (true, true) => unreachable!("nonempty interior cannot satisfy both patterns"),
    }
}

/// Whether two arcs can be drawn together without crossing.
///
/// Arcs sharing a bottom endpoint or a top endpoint are incompatible.
/// Otherwise every point common to both closed spans may force the relative
/// left/right order of the two curves: at a point interior to both, the order
/// is forced only if their sides differ; at an endpoint of one arc that is
/// interior to the other, the interior arc's side at that point forces the
/// order.  The arcs are compatible exactly when no two forced orders disagree.
pub fn arcs_compatible(a: &Arc, b: &Arc) -> bool {
    if a.bottom == b.bottom || a.top == b.top {
        return false;
    }
    let (mut a_left, mut b_left) = (false, false);
    let lo = a.bottom.max(b.bottom);
    let hi = a.top.min(b.top);
    for p in lo..=hi {
        let a_int = a.interior() >> p & 1 == 1;
        let b_int = b.interior() >> p & 1 == 1;
        if a_int && b_int {
            match (a.passes_left_of(p), b.passes_left_of(p)) {
                (true, false) => a_left = true,
                (false, true) => b_left = true,
                _ => {}
            }
        } else if a_int {
            if a.passes_left_of(p) {
                a_left = true;
            } else {
                b_left = true;
            }
        } else if b_int {
            if b.passes_left_of(p) {
                b_left = true;
            } else {
                a_left = true;
            }
        }
    }
    !(a_left && b_left)
}

/// A set of arcs on a common point line, kept in sorted order so that
/// structural equality compares diagrams.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ArcDiagram {
    pub n_points: u8,
    arcs: Vec<Arc>,
}

impl ArcDiagram {
    pub fn new(n_points: u8, mut arcs: Vec<Arc>) -> ArcDiagram {
        assert!(n_points as usize <= MAX_POINTS, "too many points");
        for arc in &arcs {
            assert!(arc.top <= n_points, "arc endpoint beyond the point line");
        }
        arcs.sort();
        ArcDiagram { n_points, arcs }
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    /// Distinct bottoms, distinct tops, and pairwise compatible arcs.
    pub fn is_noncrossing(&self) -> bool {
        for (i, a) in self.arcs.iter().enumerate() {
            for b in &self.arcs[i + 1..] {
                if !arcs_compatible(a, b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_alternating(&self) -> bool {
        self.arcs.iter().all(Arc::is_alternating)
    }

    /// The image under the half-turn of the point line.
    pub fn central_symmetry(&self) -> ArcDiagram {
        let arcs = self.arcs.iter().map(|a| a.mirrored(self.n_points)).collect();
        ArcDiagram::new(self.n_points, arcs)
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        *self == self.central_symmetry()
    }

    /// Number of orbits of arcs under the half-turn: fixed arcs count once,
    /// exchanged pairs count once.
    pub fn symmetric_orbit_count(&self) -> Result<usize> {
        if !self.is_centrally_symmetric() {
            return Err(Error::NotCentrallySymmetric);
        }
        let fixed = self
            .arcs
            .iter()
            .filter(|a| a.mirrored(self.n_points) == **a)
            .count();
        debug_assert_eq!((self.arcs.len() - fixed) % 2, 0);
        Ok(fixed + (self.arcs.len() - fixed) / 2)
    }

    /// Groups arc indices whose half-open spans `[bottom, top)` overlap,
    /// transitively.
    pub fn overlap_components(&self) -> Vec<Vec<usize>> {
        let k = self.arcs.len();
        let mut comp: Vec<usize> = (0..k).collect();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            if comp[i] != i {
                let r = find(comp, comp[i]);
                comp[i] = r;
            }
            comp[i]
        }
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (&self.arcs[i], &self.arcs[j]);
                if a.bottom.max(b.bottom) < a.top.min(b.top) {
                    let (ri, rj) = (find(&mut comp, i), find(&mut comp, j));
                    comp[ri] = rj;
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; k];
        for i in 0..k {
            let r = find(&mut comp, i);
            match root_of[r] {
                Some(g) => groups[g].push(i),
                None => {
                    root_of[r] = Some(groups.len());
                    groups.push(vec![i]);
                }
            }
        }
        groups
    }

    /// Points that no arc passes on either side (arc endpoints qualify).
    pub fn split_points(&self) -> Vec<u8> {
        let mut interior = 0u32;
        for a in &self.arcs {
            interior |= a.interior();
        }
        (1..=self.n_points).filter(|&p| interior >> p & 1 == 0).collect()
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for arc in &self.arcs {
            writeln!(f, "{arc}")?;
        }
        Ok(())
    }
}

/// Checks that `line` is a permutation of `1..=line.len()` in one-line
/// notation, within the supported size.
pub fn validate_line(line: &[u8]) -> Result<()> {
    if line.is_empty() || line.len() > MAX_POINTS {
        return Err(Error::ParseError(format!(
            "one-line length {} outside 1..={MAX_POINTS}",
            line.len()
        )));
    }
    let mut seen = vec![false; line.len() + 1];
    for &v in line {
        if v == 0 || v as usize > line.len() || seen[v as usize] {
            return Err(Error::ParseError(
                "not a permutation in one-line notation".into(),
            ));
        }
        seen[v as usize] = true;
    }
    Ok(())
}

/// 0-indexed positions `i` with `line[i] > line[i+1]`.
pub fn descents(line: &[u8]) -> Vec<usize> {
    (0..line.len().saturating_sub(1))
        .filter(|&i| line[i] > line[i + 1])
        .collect()
}

/// Reads one arc off each descent: `x_i > x_{i+1}` becomes the arc from
/// `x_{i+1}` up to `x_i`, passing left of exactly the intermediate values
/// that occur before position `i`.
pub fn delta(line: &[u8]) -> ArcDiagram {
    debug_assert!(validate_line(line).is_ok());
    let mut pos = vec![0usize; line.len() + 1];
    for (i, &v) in line.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut arcs = Vec::new();
    for i in 0..line.len().saturating_sub(1) {
        let (t, b) = (line[i], line[i + 1]);
        if t > b {
            let mut left = 0u32;
            for v in b + 1..t {
                if pos[v as usize] < i {
                    left |= 1 << v;
                }
            }
            arcs.push(Arc::new(b, t, left));
        }
    }
    ArcDiagram::new(line.len() as u8, arcs)
}

/// The unique permutation whose diagram is `d`, if one exists.
///
/// Each arc forces its top value to sit immediately before its bottom value,
/// so the arcs chain the values into maximal descending runs; a preimage is an
/// ordering of the runs in which every side constraint from an arc interior is
/// honored and consecutive runs meet in an ascent.  Since the diagram map is
/// injective, at most one ordering survives.
pub fn delta_inverse(d: &ArcDiagram) -> Result<Vec<u8>> {
    let p = d.n_points as usize;
    let mut next_down = vec![0u8; p + 1];
    let mut is_bottom = vec![false; p + 1];
    for arc in d.arcs() {
        if next_down[arc.top as usize] != 0 || is_bottom[arc.bottom as usize] {
            return Err(Error::NoPreimage);
        }
        next_down[arc.top as usize] = arc.bottom;
        is_bottom[arc.bottom as usize] = true;
    }
    // Assemble runs, one per chain head (a value that is not a bottom).
    let mut run_of = vec![usize::MAX; p + 1];
    let mut runs: Vec<Vec<u8>> = Vec::new();
    for head in 1..=p as u8 {
        if is_bottom[head as usize] {
            continue;
        }
        let mut run = vec![head];
        let mut v = head;
        while next_down[v as usize] != 0 {
            v = next_down[v as usize];
            run.push(v);
        }
        for &v in &run {
            run_of[v as usize] = runs.len();
        }
        runs.push(run);
    }
    // Side constraints: run containing an interior point placed before (left)
    // or after (right) the run containing the arc.
    let m = runs.len();
    let mut pred = vec![0u32; m];
    for arc in d.arcs() {
        let r = run_of[arc.top as usize];
        for v in arc.bottom + 1..arc.top {
            let rv = run_of[v as usize];
            if rv == r {
                return Err(Error::NoPreimage);
            }
            if arc.passes_left_of(v) {
                pred[r] |= 1 << rv;
            } else {
                pred[rv] |= 1 << r;
            }
        }
    }
    fn search(
        runs: &[Vec<u8>],
        pred: &[u32],
        placed: u32,
        last: u8,
        order: &mut Vec<usize>,
    ) -> bool {
        if order.len() == runs.len() {
            return true;
        }
        for r in 0..runs.len() {
            if placed >> r & 1 == 1 || pred[r] & !placed != 0 || runs[r][0] <= last {
                continue;
            }
            order.push(r);
            if search(runs, pred, placed | 1 << r, *runs[r].last().unwrap(), order) {
                return true;
            }
            order.pop();
        }
        false
    }
    let mut order = Vec::with_capacity(m);
    if !search(&runs, &pred, 0, 0, &mut order) {
        return Err(Error::NoPreimage);
    }
    let line: Vec<u8> = order.into_iter().flat_map(|r| runs[r].clone()).collect();
    debug_assert_eq!(&delta(&line), d);
    Ok(line)
}

/// Over/under marks on the values `2..len` of a one-line notation, read off a
/// Coxeter word: the value `v` is overbarred when the letter `v−1` occurs
/// before the letter `v−2` in the word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Barring {
    len: usize,
    over: u64,
}

impl Barring {
    pub fn from_word(word: &[u8]) -> Result<Barring> {
        let n = word.len();
        let mut pos = vec![usize::MAX; n];
        for (p, &i) in word.iter().enumerate() {
            if i as usize >= n || pos[i as usize] != usize::MAX {
                return Err(Error::ParseError(
                    "Coxeter word must list each generator exactly once".into(),
                ));
            }
            pos[i as usize] = p;
        }
        let mut over = 0u64;
        for v in 2..=n {
            if pos[v - 1] < pos[v - 2] {
                over |= 1 << v;
            }
        }
        Ok(Barring { len: n + 1, over })
    }

    /// The barring of the standard bipartite word: even values overbarred.
    pub fn bipartite(len: usize) -> Barring {
        let mut over = 0u64;
        for v in 2..len {
            if v % 2 == 0 {
                over |= 1 << v;
            }
        }
        Barring { len, over }
    }

    /// The barring of the reversed word: every mark flips.
    pub fn swapped(&self) -> Barring {
        let mut over = self.over;
        for v in 2..self.len {
            over ^= 1 << v;
        }
        Barring {
            len: self.len,
            over,
        }
    }

    pub fn is_over(&self, v: u8) -> bool {
        self.over >> v & 1 == 1
    }

    pub fn line_len(&self) -> usize {
        self.len
    }
}

/// Whether the descent at position `i` can be swapped without leaving the
/// congruence class determined by the barring: some overbarred value between
/// the descent pair occurs earlier, or some underbarred one occurs later.
fn descent_is_move(line: &[u8], i: usize, barring: &Barring) -> bool {
    let (t, b) = (line[i], line[i + 1]);
    line[..i]
        .iter()
        .any(|&v| b < v && v < t && barring.is_over(v))
        || line[i + 2..]
            .iter()
            .any(|&v| b < v && v < t && !barring.is_over(v))
}

/// No descent of `line` admits a move for this barring.
pub fn is_sortable(line: &[u8], barring: &Barring) -> bool {
    debug_assert_eq!(line.len(), barring.line_len());
    (0..line.len() - 1)
        .all(|i| line[i] < line[i + 1] || !descent_is_move(line, i, barring))
}

/// No descent of `line` admits a move for both the barring and its swap.
pub fn is_bisortable(line: &[u8], barring: &Barring) -> bool {
    debug_assert_eq!(line.len(), barring.line_len());
    let swapped = barring.swapped();
    (0..line.len() - 1).all(|i| {
        line[i] < line[i + 1]
            || !(descent_is_move(line, i, barring) && descent_is_move(line, i, &swapped))
    })
}

/// Direct avoidance test equivalent to [`is_bisortable`] with the bipartite
/// barring: no descent `x_i > x_{i+1}` has consecutive values `k, k+1`
/// strictly between `x_{i+1}` and `x_i` on the same side of the descent.
pub fn avoids_bivincular(line: &[u8]) -> bool {
    let mut pos = vec![0usize; line.len() + 1];
    for (i, &v) in line.iter().enumerate() {
        pos[v as usize] = i;
    }
    for i in 0..line.len().saturating_sub(1) {
        let (t, b) = (line[i], line[i + 1]);
        if t <= b {
            continue;
        }
        for k in b + 1..t.saturating_sub(1) {
            if (pos[k as usize] < i) == (pos[k as usize + 1] < i) {
                return false;
            }
        }
    }
    true
}

/// A classical pattern of length four together with adjacency requirements:
/// bit `x` of `adjacent_positions` forces the `x`-th and `(x+1)`-th matched
/// positions to be consecutive, and bit `y` of `adjacent_values` forces the
/// `y`-th and `(y+1)`-th smallest matched values to be consecutive integers.
#[derive(Clone, Copy, Debug)]
pub struct BivincularPattern {
    pub pattern: [u8; 4],
    pub adjacent_positions: u8,
    pub adjacent_values: u8,
}

/// The four bivincular patterns whose joint avoidance class is counted by the
/// central binomial coefficients.
pub const TWIN_PATTERNS: [BivincularPattern; 4] = [
    BivincularPattern {
        pattern: [2, 3, 4, 1],
        adjacent_positions: 1 << 3,
        adjacent_values: 1 << 2,
    },
    BivincularPattern {
        pattern: [3, 2, 4, 1],
        adjacent_positions: 1 << 3,
        adjacent_values: 1 << 2,
    },
    BivincularPattern {
        pattern: [4, 1, 2, 3],
        adjacent_positions: 1 << 1,
        adjacent_values: 1 << 2,
    },
    BivincularPattern {
        pattern: [4, 1, 3, 2],
        adjacent_positions: 1 << 1,
        adjacent_values: 1 << 2,
    },
];

/// Literal occurrence check for one bivincular pattern.
pub fn contains_bivincular(line: &[u8], pat: &BivincularPattern) -> bool {
    let n = line.len();
    for i1 in 0..n {
        for i2 in i1 + 1..n {
            for i3 in i2 + 1..n {
                'tuple: for i4 in i3 + 1..n {
                    let idx = [i1, i2, i3, i4];
                    let vals = [line[i1], line[i2], line[i3], line[i4]];
                    for j in 0..4 {
                        let rank = 1 + vals.iter().filter(|&&v| v < vals[j]).count() as u8;
                        if rank != pat.pattern[j] {
                            continue 'tuple;
                        }
                    }
                    for x in 1..4 {
                        if pat.adjacent_positions >> x & 1 == 1 && idx[x] != idx[x - 1] + 1 {
                            continue 'tuple;
                        }
                    }
                    let mut sorted = vals;
                    sorted.sort();
                    for y in 1..4 {
                        if pat.adjacent_values >> y & 1 == 1 && sorted[y] != sorted[y - 1] + 1 {
                            continue 'tuple;
                        }
                    }
                    return true;
                }
            }
        }
    }
    false
}

pub fn avoids_twin_patterns(line: &[u8]) -> bool {
    TWIN_PATTERNS
        .iter()
        .all(|p| !contains_bivincular(line, p))
}

/// Endpoint sets of an alternating diagram: a right-even arc `(i, j)` sends
/// `i` to the first set and `j−1` to the second; a left-even arc does the
/// opposite; an adjacent-points arc sends `(i, i)`.
pub fn pi_map(d: &ArcDiagram) -> Result<(Vec<u8>, Vec<u8>)> {
    let mut s = Vec::with_capacity(d.num_arcs());
    let mut t = Vec::with_capacity(d.num_arcs());
    for arc in d.arcs() {
        match classify_arc(arc) {
            ArcClass::RightEven | ArcClass::Both => {
                s.push(arc.bottom);
                t.push(arc.top - 1);
            }
            ArcClass::LeftEven => {
                s.push(arc.top - 1);
                t.push(arc.bottom);
            }
            ArcClass::Neither => return Err(Error::NotAlternating),
        }
    }
    s.sort();
    t.sort();
    Ok((s, t))
}

/// The points `q ∈ [n+1]` separated from every aligned pair: writing both
/// sets in increasing order, `q` qualifies when neither `s_j < q ≤ t_j` nor
/// `t_j < q ≤ s_j` for any `j`.
pub fn q_set(s: &[u8], t: &[u8], n: usize) -> Vec<u8> {
    let mut ss = s.to_vec();
    let mut tt = t.to_vec();
    ss.sort();
    tt.sort();
    (1..=(n + 1) as u8)
        .filter(|&q| {
            ss.iter()
                .zip(&tt)
                .all(|(&sj, &tj)| !(sj < q && q <= tj) && !(tj < q && q <= sj))
        })
        .collect()
}

fn greedy_pairs(mut bottoms: Vec<u8>, mut tops: Vec<u8>) -> Result<Vec<(u8, u8)>> {
    let mut pairs = Vec::with_capacity(bottoms.len());
    while let Some(s) = bottoms.pop() {
        let idx = tops
            .iter()
            .position(|&t| t >= s && (t + s) % 2 == 1)
            .unwrap_or(tops.len() - 1);
        let t = tops.remove(idx);
        if t < s {
            return Err(Error::ConsistencyError(
                "endpoint pairing produced an inverted arc".into(),
            ));
        }
        pairs.push((s, t));
    }
    Ok(pairs)
}

/// Builds the unique alternating diagram with endpoint sets `(S, T)`,
/// inverting [`pi_map`].
///
/// The point line splits at [`q_set`] into blocks; within a block the
/// orientation is forced by whether the block's lowest point lies in `S`
/// (right-even) or in `T` (left-even), and bottoms pair with tops greedily:
/// the largest unpaired bottom `s` takes the smallest partner `t ≥ s` of
/// opposite parity, or the largest unpaired partner if none exists.
pub fn eta(s: &[u8], t: &[u8], n: usize) -> Result<ArcDiagram> {
    if s.len() != t.len() {
        return Err(Error::SizeMismatch(s.len(), t.len()));
    }
    if n + 1 > MAX_POINTS {
        return Err(Error::ParseError(format!("{n} points exceed the supported size")));
    }
    let mut ss = s.to_vec();
    let mut tt = t.to_vec();
    ss.sort();
    tt.sort();
    for set in [&ss, &tt] {
        if set.windows(2).any(|w| w[0] == w[1])
            || set.iter().any(|&v| v == 0 || v as usize > n)
        {
            return Err(Error::ParseError(
                "endpoint sets must be subsets of 1..=n".into(),
            ));
        }
    }
    let q = q_set(&ss, &tt, n);
    assert_eq!(q.first(), Some(&1));
    assert_eq!(q.last(), Some(&((n + 1) as u8)));
    let mut arcs = Vec::with_capacity(ss.len());
    for w in q.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let sb: Vec<u8> = ss.iter().copied().filter(|&v| lo <= v && v < hi).collect();
        let tb: Vec<u8> = tt.iter().copied().filter(|&v| lo <= v && v < hi).collect();
        if sb.len() != tb.len() {
            return Err(Error::ConsistencyError(
                "aligned blocks of S and T differ in size".into(),
            ));
        }
        if sb.is_empty() {
            continue;
        }
        if hi - lo == 1 {
            if sb != [lo] || tb != [lo] {
                return Err(Error::ConsistencyError(
                    "width-one block must contribute an adjacent arc".into(),
                ));
            }
            arcs.push(Arc::new(lo, lo + 1, 0));
            continue;
        }
        let in_s = sb[0] == lo;
        let in_t = tb[0] == lo;
        if in_s == in_t {
            return Err(Error::ConsistencyError(
                "block orientation is not determined".into(),
            ));
        }
        let (bottoms, raw_tops, side) = if in_s {
            (sb, tb, ODD_POINTS)
        } else {
            (tb, sb, EVEN_POINTS)
        };
        for (bot, raw_top) in greedy_pairs(bottoms, raw_tops)? {
            let top = raw_top + 1;
            arcs.push(Arc::new(bot, top, mask_range(bot + 1, top - 1) & side));
        }
    }
    let d = ArcDiagram::new((n + 1) as u8, arcs);
    debug_assert!(d.is_noncrossing());
    let (ps, pt) = pi_map(&d)?;
    if ps != ss || pt != tt {
        return Err(Error::ConsistencyError(
            "diagram construction does not invert the endpoint map".into(),
        ));
    }
    Ok(d)
}

/// Every noncrossing diagram on `n+1` points all of whose arcs alternate,
/// enumerated by backtracking over the candidate arcs.
pub fn alternating_diagrams(n: usize) -> Result<Vec<ArcDiagram>> {
    if n > ALTERNATING_ENUM_CAP {
        return Err(Error::CapExceeded(n, ALTERNATING_ENUM_CAP));
    }
    let points = (n + 1) as u8;
    let mut candidates = Vec::new();
    for bottom in 1..points {
        for top in bottom + 1..=points {
            let interior = mask_range(bottom + 1, top - 1);
            if interior == 0 {
                candidates.push(Arc::new(bottom, top, 0));
            } else {
                candidates.push(Arc::new(bottom, top, interior & ODD_POINTS));
                candidates.push(Arc::new(bottom, top, interior & EVEN_POINTS));
            }
        }
    }
    fn extend(
        candidates: &[Arc],
        start: usize,
        chosen: &mut Vec<Arc>,
        points: u8,
        out: &mut Vec<ArcDiagram>,
    ) {
        out.push(ArcDiagram::new(points, chosen.clone()));
        for i in start..candidates.len() {
            if chosen.iter().all(|a| arcs_compatible(a, &candidates[i])) {
                chosen.push(candidates[i]);
                extend(candidates, i + 1, chosen, points, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&candidates, 0, &mut Vec::new(), points, &mut out);
    Ok(out)
}

/// Counts from [`alternating_diagrams`], indexed by number of arcs.
pub fn enumerate_alternating(n: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; n + 1];
    for d in alternating_diagrams(n)? {
        counts[d.num_arcs()] += 1;
    }
    Ok(counts)
}

/// Expands the abbreviated one-line notation `x_1..x_n` of a signed
/// permutation (values `±1..±n`, each absolute value once) into the full
/// one-line notation on `2n` relabeled points `1..2n`, where the signed value
/// `v` becomes `v+n` for `v > 0` and `v+n+1` for `v < 0`.
pub fn signed_embed(abbrev: &[i8]) -> Result<Vec<u8>> {
    let n = abbrev.len();
    if n == 0 || 2 * n > MAX_POINTS {
        return Err(Error::NotSigned);
    }
    let mut seen = vec![false; n + 1];
    for &v in abbrev {
        let a = v.unsigned_abs() as usize;
        if v == 0 || a > n || seen[a] {
            return Err(Error::NotSigned);
        }
        seen[a] = true;
    }
    let enc = |v: i8| -> u8 {
        if v > 0 {
            (v as i32 + n as i32) as u8
        } else {
            (v as i32 + n as i32 + 1) as u8
        }
    };
    let mut full = Vec::with_capacity(2 * n);
    for &v in abbrev.iter().rev() {
        full.push(enc(-v));
    }
    for &v in abbrev {
        full.push(enc(v));
    }
    Ok(full)
}

/// Inverse of [`signed_embed`]: checks the symmetry `x_i = −x_{−i}` and
/// returns the abbreviated notation.
pub fn signed_extract(full: &[u8]) -> Result<Vec<i8>> {
    validate_line(full)?;
    if full.len() % 2 != 0 {
        return Err(Error::NotSigned);
    }
    let n = full.len() / 2;
    let dec = |w: u8| -> i8 {
        if w as usize <= n {
            w as i8 - n as i8 - 1
        } else {
            w as i8 - n as i8
        }
    };
    for i in 0..full.len() {
        if dec(full[full.len() - 1 - i]) != -dec(full[i]) {
            return Err(Error::NotSigned);
        }
    }
    Ok(full[n..].iter().map(|&w| dec(w)).collect())
}

/// Descents of a signed permutation in abbreviated notation: positions with
/// `x_i > x_{i+1}`, plus one when `x_1 < 0`.
pub fn signed_descent_count(abbrev: &[i8]) -> usize {
    let inner = (0..abbrev.len().saturating_sub(1))
        .filter(|&i| abbrev[i] > abbrev[i + 1])
        .count();
    inner + usize::from(*abbrev.first().unwrap_or(&1) < 0)
}

/// First endpoint set of a centrally symmetric alternating diagram on `2n`
/// points.  The second set is determined by the symmetry (`T` is the mirror
/// `{2n − s}` of `S`), so this single subset of `1..2n−1` classifies the
/// diagram.
pub fn pi_b(d: &ArcDiagram) -> Result<Vec<u8>> {
    if !d.is_centrally_symmetric() || d.n_points % 2 != 0 {
        return Err(Error::NotCentrallySymmetric);
    }
    let (s, t) = pi_map(d)?;
    let mirrored: Vec<u8> = s.iter().rev().map(|&v| d.n_points - v).collect();
    if t != mirrored {
        return Err(Error::ConsistencyError(
            "symmetric diagram produced non-mirrored endpoint sets".into(),
        ));
    }
    Ok(s)
}
