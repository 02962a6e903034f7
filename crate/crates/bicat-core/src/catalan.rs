//! Catalan-family counting polynomials for finite Coxeter groups.
//!
//! Everything here is an exact integer polynomial in `q`:
//!
//! * [`cat_q`] — the antichain-by-size generating polynomial of the root
//!   poset (coefficients are the Narayana numbers of the type);
//! * [`cat_plus_q`] — the same restricted to antichains whose support hits
//!   every simple index;
//! * [`cat_plusplus_q`] — full support *and* no simple roots;
//! * [`bicat_q`] — the two-sided analogue, assembled from `cat_plusplus_q`
//!   of parabolic factors over pairs of disjoint vertex subsets.
//!
//! The refined polynomials are each computed by two independent routes — a
//! signed inclusion–exclusion over parabolic subdiagrams and a direct
//! constrained antichain count — and a [`Error::ConsistencyError`] is raised
//! if the routes ever disagree, so every cached value is cross-checked at
//! construction time.
//!
//! All functions take an irreducible [`GroupType`]; `_product` variants
//! handle reducible cases by multiplying factor polynomials, which is valid
//! for every polynomial in this module.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::qpoly::QPoly;
use crate::roots::{Diagram, GroupType, RootPoset};
use crate::{Error, Result};

/// Which polynomial a cache entry stores.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Cat,
    CatPlus,
    CatPlusPlus,
    BiCat,
}

fn cache() -> &'static Mutex<HashMap<(Kind, GroupType), QPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<(Kind, GroupType), QPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Runs `compute` outside the cache lock (the computation recurses into
/// smaller types, which would otherwise deadlock) and stores the result.
fn memoized(kind: Kind, t: GroupType, compute: impl FnOnce() -> Result<QPoly>) -> Result<QPoly> {
    if let Some(p) = cache().lock().unwrap().get(&(kind, t)) {
        return Ok(p.clone());
    }
    let p = compute()?;
    cache().lock().unwrap().insert((kind, t), p.clone());
    Ok(p)
}

fn sort_key(t: GroupType) -> (u8, usize) {
    match t {
        GroupType::A(n) => (0, n),
        GroupType::B(n) => (1, n),
        GroupType::D(n) => (2, n),
        GroupType::E(n) => (3, n),
        GroupType::F4 => (4, 4),
        GroupType::G2 => (5, 2),
        GroupType::H(n) => (6, n),
        GroupType::I2(m) => (7, m),
    }
}

/// Classifies a connected Coxeter diagram as an irreducible finite type.
///
/// Rank-2 types are canonicalized: edge labels 3, 4, and 6 give `A2`, `B2`,
/// and `G2`; any other label `m` gives `I2(m)`.
pub fn classify_connected(d: &Diagram) -> Result<GroupType> {
    let n = d.n;
    let fail = || Error::UnrecognizedDiagram;
    match n {
        0 => return Err(fail()),
        1 => return Ok(GroupType::A(1)),
        2 => {
            return match d.label(0, 1) {
                2 => Err(fail()),
                3 => Ok(GroupType::A(2)),
                4 => Ok(GroupType::B(2)),
                6 => Ok(GroupType::G2),
                m => Ok(GroupType::I2(m as usize)),
            };
        }
        _ => {}
    }
    // A connected diagram on >= 3 vertices must be a tree with maximum
    // degree 3 and at most one branch vertex to stand a chance.
    if d.edges.len() != n - 1 {
        return Err(fail());
    }
    let degrees: Vec<usize> = (0..n).map(|v| d.neighbors(v).len()).collect();
    if degrees.iter().any(|&deg| deg > 3) {
        return Err(fail());
    }
    let forks: Vec<usize> = (0..n).filter(|&v| degrees[v] == 3).collect();
    match forks.as_slice() {
        [] => classify_path(d, &degrees),
        [fork] => classify_fork(d, *fork),
        _ => Err(fail()),
    }
}

/// Classifies a path-shaped diagram on at least 3 vertices.
fn classify_path(d: &Diagram, degrees: &[usize]) -> Result<GroupType> {
    let n = d.n;
    let fail = || Error::UnrecognizedDiagram;
    let start = (0..n).find(|&v| degrees[v] == 1).ok_or_else(fail)?;
    let mut labels = Vec::with_capacity(n - 1);
    let (mut prev, mut cur) = (usize::MAX, start);
    for _ in 0..n - 1 {
        let next = d
            .neighbors(cur)
            .into_iter()
            .find(|&w| w != prev)
            .ok_or_else(fail)?;
        labels.push(d.label(cur, next));
        prev = cur;
        cur = next;
    }
    let unusual: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] != 3).collect();
    match unusual.as_slice() {
        [] => Ok(GroupType::A(n)),
        [i] => {
            let terminal = *i == 0 || *i == labels.len() - 1;
            match labels[*i] {
                4 if terminal => Ok(GroupType::B(n)),
                4 if n == 4 => Ok(GroupType::F4),
                5 if terminal && n == 3 => Ok(GroupType::H(3)),
                5 if terminal && n == 4 => Ok(GroupType::H(4)),
                _ => Err(fail()),
            }
        }
        _ => Err(fail()),
    }
}

/// Classifies a tree with exactly one degree-3 vertex.
fn classify_fork(d: &Diagram, fork: usize) -> Result<GroupType> {
    if d.edges.iter().any(|&(_, _, m)| m != 3) {
        return Err(Error::UnrecognizedDiagram);
    }
    let mut arms: Vec<usize> = d
        .neighbors(fork)
        .into_iter()
        .map(|first| {
            let mut len = 1;
            let (mut prev, mut cur) = (fork, first);
            while let Some(next) = d.neighbors(cur).into_iter().find(|&w| w != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, c] => Ok(GroupType::D(c + 3)),
        [1, 2, 2] => Ok(GroupType::E(6)),
        [1, 2, 3] => Ok(GroupType::E(7)),
        [1, 2, 4] => Ok(GroupType::E(8)),
        _ => Err(Error::UnrecognizedDiagram),
    }
}

/// Splits the subdiagram induced on `keep` into connected components and
/// classifies each one. The factors come back in a fixed canonical order so
/// equal multisets compare equal as vectors.
pub fn decompose_parabolic(d: &Diagram, keep: &[usize]) -> Result<Vec<GroupType>> {
    let sub = d.induced(keep);
    let mut parts = sub
        .components()
        .into_iter()
        .map(|comp| classify_connected(&sub.induced(&comp)))
        .collect::<Result<Vec<_>>>()?;
    parts.sort_unstable_by_key(|&t| sort_key(t));
    Ok(parts)
}

/// The irreducible factor types of the parabolic of `t` selected by a
/// bitmask over simple indices.
pub fn parabolic_types(t: GroupType, mask: u64) -> Result<Vec<GroupType>> {
    decompose_masked(&t.diagram(), mask)
}

fn decompose_masked(d: &Diagram, mask: u64) -> Result<Vec<GroupType>> {
    let keep: Vec<usize> = (0..d.n).filter(|&i| mask >> i & 1 == 1).collect();
    decompose_parabolic(d, &keep)
}

fn product_of(parts: &[GroupType], f: impl Fn(GroupType) -> Result<QPoly>) -> Result<QPoly> {
    let mut acc = QPoly::one();
    for &t in parts {
        acc = &acc * &f(t)?;
    }
    Ok(acc)
}

fn one_plus_q() -> QPoly {
    QPoly::from_coeffs([1, 1])
}

/// The antichain-by-size generating polynomial of the root poset of `t`.
///
/// The coefficient of `q^k` counts the k-element antichains; the value at
/// `q = 1` is the Catalan number of the type.
pub fn cat_q(t: GroupType) -> Result<QPoly> {
    if t.rank() == 0 {
        return Ok(QPoly::one());
    }
    memoized(Kind::Cat, t, || Ok(RootPoset::of_type(t)?.cat_poly()))
}

/// [`cat_q`] over a product of irreducible factors.
pub fn cat_q_product(parts: &[GroupType]) -> Result<QPoly> {
    product_of(parts, cat_q)
}

/// The full-support refinement: the coefficient of `q^k` counts k-element
/// antichains whose members jointly use every simple index.
///
/// Computed both by signed inclusion–exclusion over parabolic subdiagrams,
/// `Σ_J (-1)^{n-|J|} Cat(W_J;q)`, and directly as a constrained antichain
/// count; the two must agree.
pub fn cat_plus_q(t: GroupType) -> Result<QPoly> {
    if t.rank() == 0 {
        return Ok(QPoly::one());
    }
    memoized(Kind::CatPlus, t, || {
        let n = t.rank();
        let diagram = t.diagram();
        let mut by_formula = QPoly::zero();
        for mask in 0u64..1 << n {
            let term = cat_q_product(&decompose_masked(&diagram, mask)?)?;
            let sign = if (n - mask.count_ones() as usize) % 2 == 0 {
                1
            } else {
                -1
            };
            by_formula = &by_formula + &term.scaled(sign);
        }
        let by_counting = RootPoset::of_type(t)?.full_support_poly();
        if by_formula != by_counting {
            return Err(Error::ConsistencyError(format!(
                "full-support antichain polynomial of {t}: inclusion-exclusion gives {by_formula}, direct counting gives {by_counting}"
            )));
        }
        Ok(by_formula)
    })
}

/// The double-positive refinement: full support and no simple roots.
///
/// Computed both as `Σ_J (-q)^{n-|J|} Cat⁺(W_J;q)` and directly as a
/// constrained antichain count; the two must agree.
pub fn cat_plusplus_q(t: GroupType) -> Result<QPoly> {
    if t.rank() == 0 {
        return Ok(QPoly::one());
    }
    memoized(Kind::CatPlusPlus, t, || {
        let n = t.rank();
        let diagram = t.diagram();
        let mut by_formula = QPoly::zero();
        for mask in 0u64..1 << n {
            let term = product_of(&decompose_masked(&diagram, mask)?, cat_plus_q)?;
            let k = n - mask.count_ones() as usize;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            by_formula = &by_formula + &(&term * &QPoly::monomial(sign, k));
        }
        let by_counting = RootPoset::of_type(t)?.full_support_no_simple_poly();
        if by_formula != by_counting {
            return Err(Error::ConsistencyError(format!(
                "full-support no-simples antichain polynomial of {t}: inclusion-exclusion gives {by_formula}, direct counting gives {by_counting}"
            )));
        }
        Ok(by_formula)
    })
}

/// [`cat_plusplus_q`] over a product of irreducible factors.
pub fn cat_plusplus_q_product(parts: &[GroupType]) -> Result<QPoly> {
    product_of(parts, cat_plusplus_q)
}

fn cat_plusplus_q_masked(d: &Diagram, mask: u64) -> Result<QPoly> {
    product_of(&decompose_masked(d, mask)?, cat_plusplus_q)
}

/// The two-sided Catalan polynomial:
///
/// ```text
/// biCat(W;q) = Σ_{I ∩ J = ∅} Cat⁺⁺(W_I;q) · Cat⁺⁺(W_J;q) · (1+q)^{n-|I|-|J|}
/// ```
///
/// summed over ordered pairs of disjoint subsets of the simple indices; each
/// vertex outside `I ∪ J` is free to carry a marked simple root or not,
/// which is where its `(1+q)` factor comes from. Coefficients of the result
/// are the two-sided Narayana numbers.
///
/// Errors with [`Error::MissingTable`] for `H4`, whose root poset is not
/// available; the `cambrian` pipeline covers that group instead.
pub fn bicat_q(t: GroupType) -> Result<QPoly> {
    if t.rank() == 0 {
        return Ok(QPoly::one());
    }
    memoized(Kind::BiCat, t, || {
        let n = t.rank();
        let diagram = t.diagram();
        let full: u64 = (1 << n) - 1;
        let mut cpp = Vec::with_capacity(1 << n);
        for mask in 0..=full {
            cpp.push(cat_plusplus_q_masked(&diagram, mask)?);
        }
        let base = one_plus_q();
        let mut total = QPoly::zero();
        for i_mask in 0..=full {
            if cpp[i_mask as usize].is_zero() {
                continue;
            }
            let rest = full & !i_mask;
            let mut j_mask = rest;
            loop {
                if !cpp[j_mask as usize].is_zero() {
                    let free = n - (i_mask | j_mask).count_ones() as usize;
                    let pair = &cpp[i_mask as usize] * &cpp[j_mask as usize];
                    total = &total + &(&pair * &base.pow(free as u32));
                }
                if j_mask == 0 {
                    break;
                }
                j_mask = (j_mask - 1) & rest;
            }
        }
        Ok(total)
    })
}

/// [`bicat_q`] over a product of irreducible factors.
pub fn bicat_q_product(parts: &[GroupType]) -> Result<QPoly> {
    product_of(parts, bicat_q)
}

/// The coefficient row of [`bicat_q`], lowest degree first.
pub fn binar_row(t: GroupType) -> Result<Vec<i64>> {
    Ok(bicat_q(t)?.coeffs().to_vec())
}

/// Checks the one-sided analogue of the [`bicat_q`] expansion:
/// `Cat(W;q) = Σ_I Cat⁺⁺(W_I;q) (1+q)^{n-|I|}` over all subsets `I`.
///
/// Returns `Ok(false)` on a mismatch rather than an error; `Err` only when a
/// required table is unavailable.
pub fn cat_gf_dp_check(t: GroupType) -> Result<bool> {
    let n = t.rank();
    let diagram = t.diagram();
    let base = one_plus_q();
    let mut total = QPoly::zero();
    for mask in 0u64..1 << n {
        let term = cat_plusplus_q_masked(&diagram, mask)?;
        let free = n - mask.count_ones() as usize;
        total = &total + &(&term * &base.pow(free as u32));
    }
    Ok(total == cat_q(t)?)
}

fn shifted_reversal(p: &QPoly, rank: usize) -> QPoly {
    let base = one_plus_q();
    let mut shifted = QPoly::zero();
    for (k, &c) in p.coeffs().iter().enumerate() {
        shifted = &shifted + &base.pow(k as u32).scaled(c);
    }
    shifted.reversed(rank)
}

/// The face-count transform of [`cat_q`]: substitute `q + 1`, then reverse
/// the coefficients across degree `rank`.
///
/// For `A2` this turns `1 + 3q + q²` into `1 + 5q + 5q²`.
pub fn f_polynomial(t: GroupType) -> Result<QPoly> {
    Ok(shifted_reversal(&cat_q(t)?, t.rank()))
}

/// [`f_polynomial`] over a product of irreducible factors; multiplicative
/// because the substitution is and the reversal degrees add.
pub fn f_polynomial_product(parts: &[GroupType]) -> Result<QPoly> {
    let rank = parts.iter().map(|t| t.rank()).sum();
    Ok(shifted_reversal(&cat_q_product(parts)?, rank))
}

/// The binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (n as u128 - k as u128 + i) / i;
    }
    acc as u64
}

/// The closed-form value of [`bicat_q`] at `q = 1`, where one is known:
/// central binomials for `A`, powers of two for `B`, the
/// `6·4^{n-2} - 2·C(2n-4, n-2)` expression for `D`, and fixed constants for
/// the exceptional types. `H4` has a closed value even though the polynomial
/// routes are unavailable for it.
pub fn bicat_closed(t: GroupType) -> Option<u64> {
    Some(match t {
        GroupType::A(n) => binomial(2 * n as u64, n as u64),
        GroupType::B(n) if n >= 1 => 1 << (2 * n - 1),
        GroupType::D(n) if n >= 2 => {
            6 * 4u64.pow(n as u32 - 2) - 2 * binomial(2 * n as u64 - 4, n as u64 - 2)
        }
        GroupType::E(6) => 1700,
        GroupType::E(7) => 8872,
        GroupType::E(8) => 54066,
        GroupType::F4 => 196,
        GroupType::G2 => 12,
        GroupType::H(3) => 56,
        GroupType::H(4) => 550,
        GroupType::I2(m) => 2 * m as u64,
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::GroupType::*;

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs)
    }

    fn full_mask(t: GroupType) -> u64 {
        (1 << t.rank()) - 1
    }

    #[test]
    fn classification_recovers_whole_diagrams_and_subdiagrams() {
        for t in [
            A(1),
            A(5),
            B(2),
            B(6),
            D(4),
            D(7),
            E(6),
            E(7),
            E(8),
            F4,
            G2,
            H(3),
            H(4),
            I2(7),
        ] {
            assert_eq!(parabolic_types(t, full_mask(t)).unwrap(), vec![t], "{t}");
        }
        // Low-rank D diagrams decompose into their simply-laced synonyms.
        assert_eq!(parabolic_types(D(2), 0b11).unwrap(), vec![A(1), A(1)]);
        assert_eq!(parabolic_types(D(3), 0b111).unwrap(), vec![A(3)]);

        // E8 is a path 0..=6 with vertex 7 hanging off vertex 2.
        assert_eq!(parabolic_types(E(8), 0b1011_1111).unwrap(), vec![E(7)]);
        assert_eq!(
            parabolic_types(E(8), 0b1111_1011).unwrap(),
            vec![A(1), A(2), A(4)]
        );
        // B4 keeps its 4-label on the last edge; dropping vertex 2 isolates it.
        assert_eq!(parabolic_types(B(4), 0b1011).unwrap(), vec![A(1), A(2)]);
        assert_eq!(parabolic_types(B(4), 0b1110).unwrap(), vec![B(3)]);
        // H4 truncations walk down the H chain.
        assert_eq!(parabolic_types(H(4), 0b0111).unwrap(), vec![H(3)]);
        assert_eq!(parabolic_types(H(4), 0b0011).unwrap(), vec![I2(5)]);
        assert_eq!(parabolic_types(H(4), 0b1110).unwrap(), vec![A(3)]);
        // Both 3-vertex truncations of F4 contain the 4-edge terminally.
        assert_eq!(parabolic_types(F4, 0b0111).unwrap(), vec![B(3)]);
        assert_eq!(parabolic_types(F4, 0b1110).unwrap(), vec![B(3)]);
        assert_eq!(parabolic_types(F4, 0b0110).unwrap(), vec![B(2)]);
        // Removing the D6 fork vertex leaves a path and two isolated points.
        assert_eq!(
            parabolic_types(D(6), 0b110111).unwrap(),
            vec![A(1), A(1), A(3)]
        );
        assert_eq!(parabolic_types(I2(9), 0b01).unwrap(), vec![A(1)]);
        assert_eq!(parabolic_types(G2, 0b00).unwrap(), vec![]);
    }

    #[test]
    fn classification_rejects_non_finite_shapes() {
        // Degree-4 star and a triangle are not finite Coxeter diagrams.
        let star = Diagram::new(5, vec![(0, 1, 3), (0, 2, 3), (0, 3, 3), (0, 4, 3)]);
        assert!(matches!(
            classify_connected(&star),
            Err(Error::UnrecognizedDiagram)
        ));
        let cycle = Diagram::new(3, vec![(0, 1, 3), (1, 2, 3), (0, 2, 3)]);
        assert!(matches!(
            classify_connected(&cycle),
            Err(Error::UnrecognizedDiagram)
        ));
        // Two forks (a "plus" of paths) are also out.
        let two_forks = Diagram::new(
            8,
            vec![
                (0, 1, 3),
                (1, 2, 3),
                (2, 3, 3),
                (3, 4, 3),
                (1, 5, 3),
                (1, 6, 3),
                (3, 7, 3),
            ],
        );
        assert!(classify_connected(&two_forks).is_err());
    }

    #[test]
    fn antichain_polynomials_match_known_narayana_rows() {
        let cases: &[(GroupType, &[i64])] = &[
            (A(1), &[1, 1]),
            (A(2), &[1, 3, 1]),
            (A(3), &[1, 6, 6, 1]),
            (B(2), &[1, 4, 1]),
            (B(3), &[1, 9, 9, 1]),
            (D(4), &[1, 12, 24, 12, 1]),
            (G2, &[1, 6, 1]),
            (H(3), &[1, 15, 15, 1]),
            (I2(7), &[1, 7, 1]),
        ];
        for &(t, row) in cases {
            assert_eq!(cat_q(t).unwrap(), qp(row), "{t}");
        }
        // Symmetric coefficient rows, as expected of self-dual counts.
        for t in [A(4), B(4), D(5), F4, E(6)] {
            let p = cat_q(t).unwrap();
            assert_eq!(p.reversed(t.rank()), p, "{t}");
        }
    }

    #[test]
    fn refined_polynomials_match_pinned_values() {
        let a_values = [1, 0, 1, 2, 6, 18, 57];
        for (n, &v) in a_values.iter().enumerate() {
            assert_eq!(cat_plusplus_q(A(n)).unwrap().eval(1), v, "A{n}");
        }
        let b_values = [2, 6, 22, 80, 296];
        for (i, &v) in b_values.iter().enumerate() {
            assert_eq!(cat_plusplus_q(B(i + 2)).unwrap().eval(1), v, "B{}", i + 2);
        }
        let d_values = [10, 42, 168, 660];
        for (i, &v) in d_values.iter().enumerate() {
            assert_eq!(cat_plusplus_q(D(i + 4)).unwrap().eval(1), v, "D{}", i + 4);
        }
        assert_eq!(cat_plus_q(H(3)).unwrap(), qp(&[0, 8, 12, 1]));
        assert_eq!(cat_plusplus_q(H(3)).unwrap(), qp(&[0, 8, 8]));
        assert_eq!(cat_plus_q(I2(9)).unwrap(), qp(&[0, 7, 1]));
        assert_eq!(cat_plusplus_q(I2(9)).unwrap(), qp(&[0, 7]));
        assert_eq!(cat_plus_q(A(1)).unwrap(), qp(&[0, 1]));
        assert!(cat_plusplus_q(A(1)).unwrap().is_zero());
        assert_eq!(cat_plusplus_q(A(3)).unwrap(), qp(&[0, 1, 1]));
    }

    #[test]
    fn bicat_matches_doubled_posets_and_closed_forms() {
        for t in [
            A(1),
            A(2),
            A(3),
            A(4),
            B(2),
            B(3),
            D(4),
            G2,
            F4,
            I2(5),
            I2(8),
            H(3),
        ] {
            let p = bicat_q(t).unwrap();
            let doubled = RootPoset::of_type(t).unwrap().doubled().unwrap();
            assert_eq!(p, doubled.bicat_poly(), "{t} vs doubled poset");
            assert_eq!(p.eval(1) as u64, bicat_closed(t).unwrap(), "{t} closed");
            assert_eq!(p.reversed(t.rank()), p, "{t} symmetry");
        }
        assert_eq!(
            binar_row(E(6)).unwrap(),
            vec![1, 66, 415, 736, 415, 66, 1]
        );
        assert_eq!(bicat_q(E(7)).unwrap().eval(1), 8872);
        assert_eq!(bicat_q(E(8)).unwrap().eval(1), 54066);
        assert_eq!(binar_row(B(3)).unwrap(), vec![1, 15, 15, 1]);
        assert_eq!(binar_row(A(4)).unwrap(), vec![1, 16, 36, 16, 1]);
        // Low-rank D synonyms work directly.
        assert_eq!(bicat_q(D(2)).unwrap(), qp(&[1, 2, 1]));
        assert_eq!(bicat_q(D(3)).unwrap(), bicat_q(A(3)).unwrap());
        // Products multiply.
        assert_eq!(
            bicat_q_product(&[A(1), B(2)]).unwrap(),
            &bicat_q(A(1)).unwrap() * &bicat_q(B(2)).unwrap()
        );
    }

    #[test]
    fn generating_function_check_and_f_transform() {
        for t in [A(3), B(3), D(4), F4, G2, H(3), I2(7)] {
            assert!(cat_gf_dp_check(t).unwrap(), "{t}");
        }
        assert_eq!(f_polynomial(A(2)).unwrap(), qp(&[1, 5, 5]));
        assert_eq!(f_polynomial(A(1)).unwrap(), qp(&[1, 2]));
        assert_eq!(f_polynomial_product(&[]).unwrap(), QPoly::one());
        assert_eq!(
            f_polynomial_product(&[A(2), B(2)]).unwrap(),
            &f_polynomial(A(2)).unwrap() * &f_polynomial(B(2)).unwrap()
        );
    }

    #[test]
    fn h4_polynomial_routes_are_reported_missing() {
        assert!(matches!(cat_q(H(4)), Err(Error::MissingTable(_))));
        assert!(matches!(cat_plus_q(H(4)), Err(Error::MissingTable(_))));
        assert!(matches!(bicat_q(H(4)), Err(Error::MissingTable(_))));
        assert_eq!(bicat_closed(H(4)), Some(550));
    }

    #[test]
    fn binomial_coefficients() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(16, 8), 12870);
        assert_eq!(binomial(6, 7), 0);
        assert_eq!(binomial(20, 10), 184_756);
    }
}
