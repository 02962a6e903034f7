//! Finite root systems, root posets, and doubled root posets.
//!
//! Root coordinates live in the golden integers `Z[phi]`, which covers both
//! the crystallographic families (where the `phi`-part is always zero) and
//! the `H`-family and pentagonal dihedral groups. All sign tests are exact;
//! there is no floating point anywhere.

use crate::poset::{AntichainQuery, Poset, B256};
use crate::qpoly::QPoly;
use crate::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A golden integer `a + b*phi`, where `phi^2 = phi + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Golden {
    pub a: i64,
    pub b: i64,
}

impl Golden {
    pub const ZERO: Golden = Golden { a: 0, b: 0 };
    pub const ONE: Golden = Golden { a: 1, b: 0 };
    pub const PHI: Golden = Golden { a: 0, b: 1 };

    pub fn int(a: i64) -> Golden {
        Golden { a, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Exact sign of the real number `a + b*phi`.
    pub fn sign(&self) -> i8 {
        let (a, b) = (self.a, self.b);
        if a == 0 && b == 0 {
            return 0;
        }
        if a >= 0 && b >= 0 {
            return 1;
        }
        if a <= 0 && b <= 0 {
            return -1;
        }
        // Mixed signs: a + b*phi > 0  <=>  a^2 - a*m - m^2 > 0 for b = -m < 0
        // (using that x > phi iff x^2 > x + 1 for rational x > 0), and the
        // quantity a^2 - a*m - m^2 is never zero for integers not both zero.
        if a > 0 {
            let m = -b;
            if a * a - a * m - m * m > 0 {
                1
            } else {
                -1
            }
        } else {
            -(-*self).sign()
        }
    }

    pub fn is_nonneg(&self) -> bool {
        self.sign() >= 0
    }
}

impl Add for Golden {
    type Output = Golden;
    fn add(self, o: Golden) -> Golden {
        Golden { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Golden {
    type Output = Golden;
    fn sub(self, o: Golden) -> Golden {
        Golden { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden { a: -self.a, b: -self.b }
    }
}

impl Mul for Golden {
    type Output = Golden;
    fn mul(self, o: Golden) -> Golden {
        // (a + b phi)(c + d phi) = ac + (ad + bc) phi + bd (phi + 1)
        Golden {
            a: self.a * o.a + self.b * o.b,
            b: self.a * o.b + self.b * o.a + self.b * o.b,
        }
    }
}

impl fmt::Debug for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}phi"),
            (a, b) => write!(f, "{a}+{b}phi"),
        }
    }
}

/// A finite Coxeter group type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H(usize),
    I2(usize),
}

impl GroupType {
    /// Builds a type from a family letter plus a rank or dihedral order.
    pub fn from_parts(family: &str, rank: Option<usize>, m: Option<usize>) -> Result<GroupType> {
        let bad = |msg: String| Error::ParseError(msg);
        let need_rank =
            || rank.ok_or_else(|| bad(format!("family {family} requires a rank")));
        let t = match family {
            "A" | "a" => GroupType::A(need_rank()?),
            "B" | "b" => GroupType::B(need_rank()?),
            "D" | "d" => {
                let r = need_rank()?;
                if r < 2 {
                    return Err(bad("family D requires rank >= 2".into()));
                }
                GroupType::D(r)
            }
            "E" | "e" => {
                let r = need_rank()?;
                if !(6..=8).contains(&r) {
                    return Err(bad("family E requires rank 6, 7, or 8".into()));
                }
                GroupType::E(r)
            }
            "F" | "f" => match rank {
                None | Some(4) => GroupType::F4,
                Some(r) => return Err(bad(format!("family F has rank 4, not {r}"))),
            },
            "G" | "g" => match rank {
                None | Some(2) => GroupType::G2,
                Some(r) => return Err(bad(format!("family G has rank 2, not {r}"))),
            },
            "H" | "h" => {
                let r = need_rank()?;
                if !(3..=4).contains(&r) {
                    return Err(bad("family H requires rank 3 or 4".into()));
                }
                GroupType::H(r)
            }
            "I" | "i" | "I2" | "i2" => {
                let m = m
                    .or(rank)
                    .ok_or_else(|| bad("family I2 requires an order m".into()))?;
                if m < 2 {
                    return Err(bad("family I2 requires m >= 2".into()));
                }
                GroupType::I2(m)
            }
            other => return Err(bad(format!("unknown family `{other}`"))),
        };
        Ok(t)
    }

    /// Parses names like `A3`, `E8`, `I2(7)`.
    pub fn parse(name: &str) -> Result<GroupType> {
        let name = name.trim();
        if let Some(rest) = name.strip_prefix("I2(").or_else(|| name.strip_prefix("i2(")) {
            let m: usize = rest
                .strip_suffix(')')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::ParseError(format!("bad type name `{name}`")))?;
            return GroupType::from_parts("I2", None, Some(m));
        }
        let (family, digits) = name.split_at(1);
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::ParseError(format!("bad type name `{name}`")))?;
        GroupType::from_parts(family, Some(rank), None)
    }

    pub fn rank(&self) -> usize {
        match *self {
            GroupType::A(n) | GroupType::B(n) | GroupType::D(n) | GroupType::E(n) => n,
            GroupType::F4 => 4,
            GroupType::G2 | GroupType::I2(_) => 2,
            GroupType::H(n) => n,
        }
    }

    /// The Coxeter number of an irreducible type.
    pub fn coxeter_number(&self) -> usize {
        match *self {
            GroupType::A(n) => n + 1,
            GroupType::B(n) => 2 * n,
            GroupType::D(n) => 2 * n - 2,
            GroupType::E(6) => 12,
            GroupType::E(7) => 18,
            GroupType::E(_) => 30,
            GroupType::F4 => 12,
            GroupType::G2 => 6,
            GroupType::H(3) => 10,
            GroupType::H(_) => 30,
            GroupType::I2(m) => m,
        }
    }

    /// The number of positive roots, `rank * coxeter_number / 2`.
    pub fn num_positive_roots(&self) -> usize {
        match *self {
            GroupType::A(n) => n * (n + 1) / 2,
            GroupType::B(n) => n * n,
            GroupType::D(n) => n * (n - 1),
            GroupType::E(6) => 36,
            GroupType::E(7) => 63,
            GroupType::E(_) => 120,
            GroupType::F4 => 24,
            GroupType::G2 => 6,
            GroupType::H(3) => 15,
            GroupType::H(_) => 60,
            GroupType::I2(m) => m,
        }
    }

    /// The group order.
    pub fn group_order(&self) -> u64 {
        fn fact(n: usize) -> u64 {
            (1..=n as u64).product()
        }
        match *self {
            GroupType::A(n) => fact(n + 1),
            GroupType::B(n) => (1u64 << n) * fact(n),
            GroupType::D(n) => (1u64 << (n - 1)) * fact(n),
            GroupType::E(6) => 51_840,
            GroupType::E(7) => 2_903_040,
            GroupType::E(_) => 696_729_600,
            GroupType::F4 => 1_152,
            GroupType::G2 => 12,
            GroupType::H(3) => 120,
            GroupType::H(_) => 14_400,
            GroupType::I2(m) => 2 * m as u64,
        }
    }

    pub fn is_crystallographic(&self) -> bool {
        match *self {
            GroupType::H(_) => false,
            GroupType::I2(m) => matches!(m, 2 | 3 | 4 | 6),
            _ => true,
        }
    }

    /// The Coxeter diagram.
    pub fn diagram(&self) -> Diagram {
        let n = self.rank();
        let mut edges = Vec::new();
        match *self {
            GroupType::A(_) => {
                for i in 1..n {
                    edges.push((i - 1, i, 3));
                }
            }
            GroupType::B(_) => {
                for i in 1..n {
                    let label = if i == n - 1 { 4 } else { 3 };
                    edges.push((i - 1, i, label));
                }
            }
            GroupType::D(_) => {
                if n >= 3 {
                    for i in 1..n - 1 {
                        edges.push((i - 1, i, 3));
                    }
                    edges.push((n - 3, n - 1, 3));
                }
            }
            GroupType::E(_) => {
                for i in 1..n - 1 {
                    edges.push((i - 1, i, 3));
                }
                edges.push((2, n - 1, 3));
            }
            GroupType::F4 => {
                edges = vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)];
            }
            GroupType::G2 => edges.push((0, 1, 6)),
            GroupType::H(_) => {
                edges.push((0, 1, 5));
                for i in 2..n {
                    edges.push((i - 1, i, 3));
                }
            }
            GroupType::I2(m) => {
                if m >= 3 {
                    edges.push((0, 1, m as u32));
                }
            }
        }
        Diagram { n, edges }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupType::A(n) => write!(f, "A{n}"),
            GroupType::B(n) => write!(f, "B{n}"),
            GroupType::D(n) => write!(f, "D{n}"),
            GroupType::E(n) => write!(f, "E{n}"),
            GroupType::F4 => write!(f, "F4"),
            GroupType::G2 => write!(f, "G2"),
            GroupType::H(n) => write!(f, "H{n}"),
            GroupType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A Coxeter diagram: vertices `0..n` with labeled edges (`label >= 3`;
/// non-edges mean label 2).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Diagram {
    pub n: usize,
    /// `(i, j, m)` with `i < j` after normalization.
    pub edges: Vec<(usize, usize, u32)>,
}

impl Diagram {
    pub fn new(n: usize, edges: Vec<(usize, usize, u32)>) -> Diagram {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(i, j, m)| if i < j { (i, j, m) } else { (j, i, m) })
            .collect();
        edges.sort_unstable();
        Diagram { n, edges }
    }

    /// The edge label between two vertices (2 if not adjacent).
    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.edges
            .iter()
            .find(|&&(a, b, _)| (a, b) == (i.min(j), i.max(j)) )
            .map_or(2, |&(_, _, m)| m)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b, _) in &self.edges {
            if a == i {
                out.push(b);
            } else if b == i {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    /// The induced subdiagram on `keep` (reindexed in the given order).
    pub fn induced(&self, keep: &[usize]) -> Diagram {
        let pos = |v: usize| keep.iter().position(|&k| k == v);
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b, m)| Some((pos(a)?, pos(b)?, m)))
            .collect();
        Diagram::new(keep.len(), edges)
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// A proper 2-coloring, if one exists: `colors[v]` in `{0, 1}`, with the
    /// smallest vertex of each component colored 0.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut colors = vec![u8::MAX; self.n];
        for comp in self.components() {
            let root = comp[0];
            colors[root] = 0;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if colors[w] == u8::MAX {
                        colors[w] = 1 - colors[v];
                        stack.push(w);
                    } else if colors[w] == colors[v] {
                        return None;
                    }
                }
            }
        }
        Some(colors)
    }
}

/// A finite root system with exact golden-integer coordinates.
pub struct RootSystem {
    pub group_type: GroupType,
    pub n: usize,
    /// Positive roots in simple-root coordinates; entries `0..n` are the
    /// simple roots themselves.
    pub roots: Vec<Vec<Golden>>,
    /// `refl[i][r]` is the index of `s_i(roots[r])` among the positive
    /// roots; for `r == i` (where the image is `-alpha_i`) it is `i` itself,
    /// with the sign flip handled by callers.
    pub refl: Vec<Vec<u32>>,
    /// Support mask (over simple indices) of each positive root.
    pub support: Vec<u64>,
}

impl RootSystem {
    /// Builds the root system; `H` types and `I2(5)` use golden coordinates,
    /// other dihedral orders beyond `{2, 3, 4, 6}` have no realization here.
    pub fn new(group_type: GroupType) -> Result<RootSystem> {
        if let GroupType::I2(m) = group_type {
            match m {
                2 | 3 | 4 | 6 => {}
                5 => {}
                _ => {
                    return Err(Error::MissingTable(format!(
                        "root coordinates for I2({m})"
                    )))
                }
            }
        }
        let n = group_type.rank();
        let cartan = cartan_matrix(group_type);
        let mut roots: Vec<Vec<Golden>> = (0..n)
            .map(|i| {
                let mut v = vec![Golden::ZERO; n];
                v[i] = Golden::ONE;
                v
            })
            .collect();
        // Close the simples under all reflections, keeping positive images.
        let mut frontier: Vec<usize> = (0..n).collect();
        while let Some(r) = frontier.pop() {
            for i in 0..n {
                let image = reflect(&cartan, i, &roots[r]);
                if image.iter().all(|c| c.is_nonneg()) && !roots.contains(&image) {
                    roots.push(image);
                    frontier.push(roots.len() - 1);
                }
            }
        }
        let expected = group_type.num_positive_roots();
        assert_eq!(
            roots.len(),
            expected,
            "{group_type}: closure found {} positive roots, expected {expected}",
            roots.len()
        );
        let refl = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .enumerate()
                    .map(|(r, root)| {
                        if r == i {
                            return i as u32;
                        }
                        let image = reflect(&cartan, i, root);
                        roots
                            .iter()
                            .position(|x| *x == image)
                            .expect("reflection permutes the other positive roots")
                            as u32
                    })
                    .collect()
            })
            .collect();
        let support = roots
            .iter()
            .map(|root| {
                root.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(RootSystem { group_type, n, roots, refl, support })
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    /// The positive roots supported inside the vertex set `j_mask`.
    pub fn roots_in_parabolic(&self, j_mask: u64) -> u64 {
        assert!(self.roots.len() <= 64);
        self.support
            .iter()
            .enumerate()
            .filter(|&(_, s)| s & !j_mask == 0)
            .fold(0u64, |acc, (r, _)| acc | 1 << r)
    }
}

fn cartan_matrix(t: GroupType) -> Vec<Vec<Golden>> {
    let n = t.rank();
    let d = t.diagram();
    let mut a = vec![vec![Golden::ZERO; n]; n];
    for i in 0..n {
        a[i][i] = Golden::int(2);
    }
    for &(i, j, m) in &d.edges {
        let (lo, hi) = match m {
            3 => (Golden::int(-1), Golden::int(-1)),
            4 | 6 => (Golden::int(-1), Golden::int(-1)), // overwritten below
            5 => (-Golden::PHI, -Golden::PHI),
            other => panic!("unsupported edge label {other}"),
        };
        a[i][j] = lo;
        a[j][i] = hi;
    }
    // Asymmetric entries for the crystallographic multiple bonds.
    match t {
        GroupType::B(n) if n >= 2 => {
            // alpha_{n-1} is short: <alpha_{n-2}, alpha_{n-1} dual> = -2.
            a[n - 1][n - 2] = Golden::int(-2);
            a[n - 2][n - 1] = Golden::int(-1);
        }
        GroupType::F4 => {
            a[2][1] = Golden::int(-2);
            a[1][2] = Golden::int(-1);
        }
        GroupType::G2 => {
            // Vertex 0 is short: <alpha_1, alpha_0 dual> = -3.
            a[0][1] = Golden::int(-3);
            a[1][0] = Golden::int(-1);
        }
        GroupType::I2(4) => {
            a[1][0] = Golden::int(-2);
            a[0][1] = Golden::int(-1);
        }
        GroupType::I2(6) => {
            a[0][1] = Golden::int(-3);
            a[1][0] = Golden::int(-1);
        }
        _ => {}
    }
    a
}

/// Applies `s_i` to a root in simple coordinates: only coordinate `i` moves,
/// by `v_i -> v_i - sum_j A[i][j] v_j`.
fn reflect(cartan: &[Vec<Golden>], i: usize, v: &[Golden]) -> Vec<Golden> {
    let mut out = v.to_vec();
    let pairing = v
        .iter()
        .zip(&cartan[i])
        .fold(Golden::ZERO, |acc, (&c, &a)| acc + a * c);
    out[i] = out[i] - pairing;
    out
}

/// A root poset: the positive roots of a finite type under a partial order
/// whose minimal elements are the simple roots.
pub struct RootPoset {
    pub group_type: GroupType,
    pub poset: Poset,
    /// Poset indices of the simple roots.
    pub simples: Vec<usize>,
    /// Support mask of each element over `0..rank`.
    pub support: Vec<u64>,
}

/// Text of the stored degree-15 pentagonal poset (rank 3).
const H3_POSET_TEXT: &str = include_str!("../../../data/h3_root_poset.txt");

impl RootPoset {
    /// The root poset of a type, if one is available: dominance order for
    /// crystallographic types, the two-minimal chain poset for dihedral
    /// types, and a stored table for `H3`. There is none for `H4`.
    pub fn of_type(t: GroupType) -> Result<RootPoset> {
        match t {
            GroupType::I2(m) => Ok(RootPoset::dihedral(m)),
            GroupType::H(3) => RootPoset::from_text(GroupType::H(3), H3_POSET_TEXT),
            GroupType::H(_) => Err(Error::MissingTable("the H4 root poset".into())),
            _ => Ok(RootPoset::dominance(&RootSystem::new(t)?)),
        }
    }

    /// Dominance order: `beta <= gamma` iff `gamma - beta` is nonnegative in
    /// every simple coordinate.
    pub fn dominance(rs: &RootSystem) -> RootPoset {
        let m = rs.num_positive();
        let mut edges = Vec::new();
        for x in 0..m {
            for y in 0..m {
                if x != y
                    && rs.roots[y]
                        .iter()
                        .zip(&rs.roots[x])
                        .all(|(&cy, &cx)| (cy - cx).is_nonneg())
                {
                    edges.push((x, y));
                }
            }
        }
        let poset = Poset::from_covers(m, &edges).expect("dominance order is acyclic");
        RootPoset {
            group_type: rs.group_type,
            poset,
            simples: (0..rs.n).collect(),
            support: rs.support.clone(),
        }
    }

    /// The dihedral root poset: two minimal simple roots with a chain of
    /// `m - 2` full-support elements above both.
    pub fn dihedral(m: usize) -> RootPoset {
        let mut edges = Vec::new();
        if m >= 3 {
            edges.push((0, 2));
            edges.push((1, 2));
            for i in 2..m - 1 {
                edges.push((i, i + 1));
            }
        }
        let poset = Poset::from_covers(m, &edges).expect("chain poset is acyclic");
        let mut support = vec![1u64, 2];
        support.extend(std::iter::repeat(3).take(m - 2));
        RootPoset {
            group_type: GroupType::I2(m),
            poset,
            simples: vec![0, 1],
            support,
        }
    }

    /// Reads a stored poset; supports are derived as the simple roots lying
    /// weakly below each element.
    pub fn from_text(group_type: GroupType, text: &str) -> Result<RootPoset> {
        let (poset, simples) = Poset::parse_text(text)?;
        if simples.is_empty() {
            return Err(Error::ParseError(
                "stored root poset must mark its simples".into(),
            ));
        }
        for &s in &simples {
            if poset.down_set(s).count() != 1 {
                return Err(Error::ParseError(format!(
                    "marked simple {s} is not minimal"
                )));
            }
        }
        let support = (0..poset.len())
            .map(|x| {
                simples
                    .iter()
                    .enumerate()
                    .filter(|&(_, &s)| poset.leq(s, x))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(RootPoset { group_type, poset, simples, support })
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    fn simples_mask(&self) -> B256 {
        self.simples.iter().copied().collect()
    }

    fn all_supports(&self) -> u64 {
        (1u64 << self.rank()) - 1
    }

    /// The antichain generating function, `q` tracking antichain size.
    pub fn cat_poly(&self) -> QPoly {
        self.poset.antichain_poly(&AntichainQuery::default())
    }

    /// Antichains whose union of supports is all of the simples.
    pub fn full_support_poly(&self) -> QPoly {
        self.poset.antichain_poly(&AntichainQuery {
            labels: Some(&self.support),
            required_union: self.all_supports(),
            ..Default::default()
        })
    }

    /// Antichains avoiding every simple root.
    pub fn no_simple_poly(&self) -> QPoly {
        self.poset.antichain_poly(&AntichainQuery {
            forbidden: self.simples_mask(),
            ..Default::default()
        })
    }

    /// Antichains with full support avoiding every simple root.
    pub fn full_support_no_simple_poly(&self) -> QPoly {
        self.poset.antichain_poly(&AntichainQuery {
            forbidden: self.simples_mask(),
            labels: Some(&self.support),
            required_union: self.all_supports(),
        })
    }

    /// The doubled poset: a reversed copy of the non-simple part below the
    /// simples, and an upright copy above them.
    pub fn doubled(&self) -> Result<DoubledPoset> {
        let total = self.poset.len();
        let n = self.rank();
        let m = total - n;
        let is_simple: B256 = self.simples_mask();
        // Non-simple elements in poset order.
        let nonsimple: Vec<usize> = (0..total).filter(|&x| !is_simple.contains(x)).collect();
        let bot = |idx: usize| idx; // index into `nonsimple`
        let mid = |j: usize| m + j; // index into `simples`
        let top = |idx: usize| m + n + idx;
        let ns_pos = |x: usize| nonsimple.iter().position(|&y| y == x);
        let s_pos = |x: usize| self.simples.iter().position(|&y| y == x);
        let mut edges = Vec::new();
        for &(a, b) in self.poset.covers() {
            let (a, b) = (a as usize, b as usize);
            match (s_pos(a), s_pos(b)) {
                (None, None) => {
                    let (x, y) = (ns_pos(a).unwrap(), ns_pos(b).unwrap());
                    edges.push((top(x), top(y)));
                    edges.push((bot(y), bot(x)));
                }
                (Some(s), None) => {
                    let y = ns_pos(b).unwrap();
                    edges.push((mid(s), top(y)));
                    edges.push((bot(y), mid(s)));
                }
                _ => unreachable!("simple roots are minimal in a root poset"),
            }
        }
        let poset = Poset::from_covers(2 * m + n, &edges)?;
        let mut support = Vec::with_capacity(2 * m + n);
        for &x in &nonsimple {
            support.push(self.support[x]);
        }
        for j in 0..n {
            support.push(1u64 << j);
        }
        for &x in &nonsimple {
            support.push(self.support[x]);
        }
        Ok(DoubledPoset {
            group_type: self.group_type,
            poset,
            support,
            simple_indices: (m..m + n).collect(),
        })
    }
}

/// The doubled root poset of a finite type.
pub struct DoubledPoset {
    pub group_type: GroupType,
    pub poset: Poset,
    pub support: Vec<u64>,
    /// Indices of the (single) copies of the simple roots.
    pub simple_indices: Vec<usize>,
}

impl DoubledPoset {
    /// The antichain generating function, `q` tracking antichain size.
    pub fn bicat_poly(&self) -> QPoly {
        self.poset.antichain_poly(&AntichainQuery::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_sign_is_exact() {
        let phi = Golden::PHI;
        let int = Golden::int;
        assert_eq!((phi - int(1)).sign(), 1); // phi - 1 > 0
        assert_eq!((int(2) - phi).sign(), 1);
        assert_eq!((int(1) - phi).sign(), -1);
        // Fibonacci convergents make tight cases: 8 - 5 phi < 0 < 13 - 8 phi.
        assert_eq!((int(8) - phi * int(5)).sign(), -1);
        assert_eq!((int(13) - phi * int(8)).sign(), 1);
        assert_eq!(Golden::ZERO.sign(), 0);
        assert_eq!((phi * phi - phi - int(1)).sign(), 0); // phi^2 = phi + 1
    }

    #[test]
    fn type_parsing_and_invariants() {
        assert_eq!(GroupType::parse("A3").unwrap(), GroupType::A(3));
        assert_eq!(GroupType::parse("I2(7)").unwrap(), GroupType::I2(7));
        assert_eq!(GroupType::parse("h4").unwrap(), GroupType::H(4));
        assert!(GroupType::parse("Q5").is_err());
        assert!(GroupType::parse("E9").is_err());
        assert!(GroupType::from_parts("D", Some(1), None).is_err());

        for t in [
            GroupType::A(4),
            GroupType::B(3),
            GroupType::D(5),
            GroupType::E(6),
            GroupType::F4,
            GroupType::G2,
            GroupType::H(3),
            GroupType::H(4),
            GroupType::I2(9),
        ] {
            assert_eq!(
                t.rank() * t.coxeter_number(),
                2 * t.num_positive_roots(),
                "{t}"
            );
        }
        assert_eq!(GroupType::E(8).group_order(), 696_729_600);
        assert_eq!(GroupType::B(4).group_order(), 384);
    }

    #[test]
    fn diagrams() {
        let d4 = GroupType::D(4).diagram();
        assert_eq!(d4.edges, vec![(0, 1, 3), (1, 2, 3), (1, 3, 3)]);
        assert_eq!(d4.neighbors(1), vec![0, 2, 3]);
        let d2 = GroupType::D(2).diagram();
        assert!(d2.edges.is_empty());
        assert_eq!(d2.components().len(), 2);
        let e7 = GroupType::E(7).diagram();
        assert_eq!(e7.neighbors(2), vec![1, 3, 6]);
        let f4 = GroupType::F4.diagram();
        assert_eq!(f4.label(1, 2), 4);
        assert_eq!(f4.label(0, 2), 2);
        let sub = f4.induced(&[1, 2]);
        assert_eq!(sub.edges, vec![(0, 1, 4)]);
        let colors = GroupType::A(4).diagram().two_coloring().unwrap();
        assert_eq!(colors, vec![0, 1, 0, 1]);
    }

    #[test]
    fn small_root_systems_are_exact() {
        let b2 = RootSystem::new(GroupType::B(2)).unwrap();
        let coords: Vec<Vec<i64>> = b2.roots.iter().map(|r| r.iter().map(|c| c.a).collect()).collect();
        assert!(coords.contains(&vec![1, 0]));
        assert!(coords.contains(&vec![0, 1]));
        assert!(coords.contains(&vec![1, 1]));
        assert!(coords.contains(&vec![1, 2]));
        assert_eq!(coords.len(), 4);

        let g2 = RootSystem::new(GroupType::G2).unwrap();
        let coords: Vec<Vec<i64>> = g2.roots.iter().map(|r| r.iter().map(|c| c.a).collect()).collect();
        for want in [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]] {
            assert!(coords.contains(&want.to_vec()), "missing {want:?}");
        }
    }

    #[test]
    fn root_counts_match_closed_forms() {
        for t in [
            GroupType::A(5),
            GroupType::B(4),
            GroupType::D(4),
            GroupType::D(5),
            GroupType::E(6),
            GroupType::F4,
            GroupType::G2,
            GroupType::H(3),
            GroupType::H(4),
            GroupType::I2(5),
        ] {
            // `RootSystem::new` asserts the count internally.
            let rs = RootSystem::new(t).unwrap();
            assert_eq!(rs.num_positive(), t.num_positive_roots(), "{t}");
        }
        assert!(matches!(
            RootSystem::new(GroupType::I2(7)),
            Err(Error::MissingTable(_))
        ));
    }

    #[test]
    fn supports_and_parabolic_roots() {
        let a3 = RootSystem::new(GroupType::A(3)).unwrap();
        let full: Vec<_> = (0..a3.num_positive())
            .filter(|&r| a3.support[r] == 0b111)
            .collect();
        assert_eq!(full.len(), 1); // only the highest root
        let inside = a3.roots_in_parabolic(0b011);
        assert_eq!(inside.count_ones(), 3); // the A2 parabolic
    }

    #[test]
    fn dominance_poset_narayana_rows() {
        let a2 = RootPoset::of_type(GroupType::A(2)).unwrap();
        assert_eq!(a2.cat_poly().coeffs(), &[1, 3, 1]);
        let a3 = RootPoset::of_type(GroupType::A(3)).unwrap();
        assert_eq!(a3.cat_poly().coeffs(), &[1, 6, 6, 1]);
        let b2 = RootPoset::of_type(GroupType::B(2)).unwrap();
        assert_eq!(b2.cat_poly().coeffs(), &[1, 4, 1]);
        let b3 = RootPoset::of_type(GroupType::B(3)).unwrap();
        assert_eq!(b3.cat_poly().coeffs(), &[1, 9, 9, 1]);
        let d4 = RootPoset::of_type(GroupType::D(4)).unwrap();
        assert_eq!(d4.cat_poly().coeffs(), &[1, 12, 24, 12, 1]);
        let g2 = RootPoset::of_type(GroupType::G2).unwrap();
        assert_eq!(g2.cat_poly().coeffs(), &[1, 6, 1]);
    }

    #[test]
    fn constrained_antichain_polys() {
        let a2 = RootPoset::of_type(GroupType::A(2)).unwrap();
        assert_eq!(a2.full_support_poly().coeffs(), &[0, 1, 1]);
        assert_eq!(a2.no_simple_poly().coeffs(), &[1, 1]);
        assert_eq!(a2.full_support_no_simple_poly().coeffs(), &[0, 1]);
        let b2 = RootPoset::of_type(GroupType::B(2)).unwrap();
        assert_eq!(b2.full_support_no_simple_poly().coeffs(), &[0, 2]);
    }

    #[test]
    fn dihedral_poset_matches_crystallographic_dominance() {
        // For m = 3, 4, 6 the synthetic dihedral poset must be isomorphic to
        // the dominance order of A2, B2, G2. Isomorphism is checked brutally.
        fn isomorphic(p: &Poset, q: &Poset) -> bool {
            if p.len() != q.len() {
                return false;
            }
            let n = p.len();
            let mut perm: Vec<usize> = (0..n).collect();
            // Heap's algorithm over all bijections.
            fn heaps(perm: &mut Vec<usize>, k: usize, p: &Poset, q: &Poset, found: &mut bool) {
                if *found {
                    return;
                }
                if k == 1 {
                    let ok = (0..p.len()).all(|a| {
                        (0..p.len()).all(|b| p.leq(a, b) == q.leq(perm[a], perm[b]))
                    });
                    if ok {
                        *found = true;
                    }
                    return;
                }
                for i in 0..k {
                    heaps(perm, k - 1, p, q, found);
                    if k % 2 == 0 {
                        perm.swap(i, k - 1);
                    } else {
                        perm.swap(0, k - 1);
                    }
                }
            }
            let mut found = false;
            heaps(&mut perm, n, p, q, &mut found);
            found
        }
        for (m, t) in [(3, GroupType::A(2)), (4, GroupType::B(2)), (6, GroupType::G2)] {
            let synthetic = RootPoset::dihedral(m);
            let dom = RootPoset::of_type(t).unwrap();
            assert!(isomorphic(&synthetic.poset, &dom.poset), "I2({m}) vs {t}");
        }
        // I2(2) is a two-element antichain.
        let i22 = RootPoset::dihedral(2);
        assert!(i22.poset.covers().is_empty());
        assert_eq!(i22.cat_poly().coeffs(), &[1, 2, 1]);
    }

    #[test]
    fn doubled_posets() {
        let a2 = RootPoset::of_type(GroupType::A(2)).unwrap().doubled().unwrap();
        assert_eq!(a2.poset.len(), 4);
        assert_eq!(a2.bicat_poly().coeffs(), &[1, 4, 1]); // C(2,k)^2
        assert!(a2.poset.is_distributive());

        for m in [2usize, 3, 5, 8, 12] {
            let d = RootPoset::dihedral(m).doubled().unwrap();
            let want = [1, 2 * m as i64 - 2, 1];
            assert_eq!(d.bicat_poly().coeffs(), &want, "I2({m})");
        }

        let b2 = RootPoset::of_type(GroupType::B(2)).unwrap().doubled().unwrap();
        assert_eq!(b2.bicat_poly().eval(1), 8); // 2^(2n-1)
        assert_eq!(b2.bicat_poly().coeffs(), &[1, 6, 1]); // C(4, 2k)

        let a3 = RootPoset::of_type(GroupType::A(3)).unwrap().doubled().unwrap();
        assert_eq!(a3.bicat_poly().coeffs(), &[1, 9, 9, 1]); // C(3,k)^2
        assert_eq!(a3.bicat_poly().eval(1), 20); // C(6,3)
    }

    #[test]
    fn h4_has_no_stored_poset() {
        assert!(matches!(
            RootPoset::of_type(GroupType::H(4)),
            Err(Error::MissingTable(_))
        ));
    }
}
