//! Edge-subset families of the stacked-diamonds and 2 x n grid posets.
//!
//! Restricting the Stanley-Reisner complex of a chain ideal to an edge
//! subset either hits one of a few structured families with known
//! one-dimensional homology or collapses to nothing. This module builds
//! those families, classifies arbitrary subsets against them, and
//! states the expected profiles; the verification suites compare all of
//! it against the homology engine.

use crate::homology::HomologyProfile;
use crate::invariants::binom;
use crate::poset::bits;
use itertools::Itertools;
use std::collections::HashMap;

/// Selector for the two saturated routes through one diamond.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RouteChoice {
    First,
    Second,
    Both,
}

/// Edge-label set picking one or both routes in every diamond. Each
/// diamond occupies four consecutive edge labels: the first route is
/// the lower pair, the second the upper pair.
pub fn diamond_edge_subset(n: usize, choices: &[RouteChoice]) -> u64 {
    assert_eq!(choices.len(), n, "one route choice per diamond");
    choices.iter().enumerate().fold(0u64, |mask, (d, choice)| {
        let block = match choice {
            RouteChoice::First => 0b0011,
            RouteChoice::Second => 0b1100,
            RouteChoice::Both => 0b1111,
        };
        mask | block << (4 * d)
    })
}

/// How an edge subset of the n-diamond poset restricts the complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiamondClass {
    /// Exactly one complete route per diamond: the edge set of a single
    /// maximal chain, restricting to the boundary of a simplex.
    MaximalChain,
    /// At least one complete route per diamond, `doubled` diamonds with
    /// both: a union of maximal chains.
    ChainUnion { doubled: usize },
    /// Some diamond carries neither route in full; the restriction is a
    /// cone and its homology vanishes.
    Degenerate,
}

pub fn classify_diamond_subset(n: usize, mask: u64) -> DiamondClass {
    debug_assert_eq!(mask >> (4 * n), 0, "mask exceeds the edge range");
    let mut doubled = 0;
    for d in 0..n {
        match mask >> (4 * d) & 0xF {
            0b0011 | 0b1100 => {}
            0b1111 => doubled += 1,
            _ => return DiamondClass::Degenerate,
        }
    }
    if doubled == 0 {
        DiamondClass::MaximalChain
    } else {
        DiamondClass::ChainUnion { doubled }
    }
}

/// Homology profile the restriction to `mask` must produce: a single
/// class in degree `2n - 2` for one maximal chain, `2n + s - 2` for a
/// union doubled in `s` diamonds, nothing otherwise. The empty subset
/// restricts to the empty complex, concentrated in degree -1.
pub fn expected_diamond_profile(n: usize, mask: u64) -> HomologyProfile {
    if mask == 0 {
        return HomologyProfile::singleton(-1);
    }
    let n = n as i64;
    match classify_diamond_subset(n as usize, mask) {
        DiamondClass::MaximalChain => HomologyProfile::singleton(2 * n - 2),
        DiamondClass::ChainUnion { doubled } => {
            HomologyProfile::singleton(2 * n + doubled as i64 - 2)
        }
        DiamondClass::Degenerate => HomologyProfile::zero(),
    }
}

/// Label of bottom-strand edge `k` in the 2 x n grid's edge order.
pub fn grid_bottom_edge(n: usize, k: usize) -> usize {
    debug_assert!(k < n - 1);
    k
}

/// Label of top-strand edge `k`.
pub fn grid_top_edge(n: usize, k: usize) -> usize {
    debug_assert!(k < n - 1);
    n - 1 + k
}

/// Label of the connector edge at column `col`.
pub fn grid_connector_edge(n: usize, col: usize) -> usize {
    debug_assert!(col < n);
    2 * (n - 1) + col
}

/// Edge set keeping both full strands and exactly the connectors at
/// `cols`, which must include the first and last columns. Such subsets
/// restrict the grid's chain complex to homology concentrated in degree
/// `2n - 3`.
pub fn grid_composition_subset(n: usize, cols: &[usize]) -> u64 {
    assert!(
        cols.contains(&0) && cols.contains(&(n - 1)),
        "outer connectors are mandatory"
    );
    let mut mask = 0u64;
    for k in 0..(n - 1) {
        mask |= 1 << grid_bottom_edge(n, k);
        mask |= 1 << grid_top_edge(n, k);
    }
    for &c in cols {
        mask |= 1 << grid_connector_edge(n, c);
    }
    mask
}

/// The member of the grid family with first and last connectors at the
/// given columns, without the inner connectors: all bottom-strand edges
/// before the last connector plus all top-strand edges from the first
/// connector on.
fn window_mask(n: usize, first: usize, last: usize) -> u64 {
    let mut mask = 0u64;
    for k in 0..last {
        mask |= 1 << grid_bottom_edge(n, k);
    }
    for k in first..(n - 1) {
        mask |= 1 << grid_top_edge(n, k);
    }
    mask |= 1 << grid_connector_edge(n, first);
    mask | 1 << grid_connector_edge(n, last)
}

/// All members of the grid edge-subset family with `s` connectors and
/// `t` edges in total, in increasing set order. Every member is a union
/// of maximal-chain edge sets, and these families exhaust the subsets
/// whose restrictions carry homology: a member produces exactly one
/// class, in degree `t - s - 1`.
pub fn grid_family(s: usize, t: usize, n: usize) -> Vec<u64> {
    assert!(n >= 2);
    let mut out = Vec::new();
    if s == 1 {
        if t == n {
            out.extend((0..n).map(|c| window_mask(n, c, c)));
        }
    } else if s >= 2 && t >= n + s {
        let span = t - n - s + 1;
        if span < n {
            for first in 0..(n - span) {
                let last = first + span;
                for inner in (first + 1..last).combinations(s - 2) {
                    let mut mask = window_mask(n, first, last);
                    for c in inner {
                        mask |= 1 << grid_connector_edge(n, c);
                    }
                    out.push(mask);
                }
            }
        }
    }
    out.sort_by(|a, b| crate::ideal::set_cmp(*a, *b));
    out
}

/// Number of family members found by explicit enumeration.
pub fn count_family(s: usize, t: usize, n: usize) -> u64 {
    grid_family(s, t, n).len() as u64
}

/// The closed-form count the enumeration is checked against:
/// `(2n - t + s - 1) * C(t - n - s, s - 2)` for `s >= 2`, and `n`
/// members at `t = n` for a single connector.
pub fn count_family_closed_form(s: usize, t: usize, n: usize) -> u64 {
    if s == 0 {
        return 0;
    }
    if s == 1 {
        return if t == n { n as u64 } else { 0 };
    }
    let (s, t, n) = (s as i64, t as i64, n as i64);
    let positions = 2 * n - t + s - 1;
    if positions <= 0 {
        return 0;
    }
    positions as u64 * binom(t - n - s, s - 2)
}

/// Every family member inside the 2 x n grid, keyed by edge set with
/// its `(s, t)` parameters. Subsets outside this index restrict to
/// complexes with no homology at all.
pub fn grid_family_index(n: usize) -> HashMap<u64, (usize, usize)> {
    let mut out = HashMap::new();
    for s in 1..=n {
        for t in n..=(2 * n + s - 2) {
            for member in grid_family(s, t, n) {
                let previous = out.insert(member, (s, t));
                debug_assert!(previous.is_none(), "families overlap");
            }
        }
    }
    out
}

/// Expected restriction profile for an arbitrary edge subset of the
/// 2 x n grid: `{t - s - 1: 1}` for a family member, zero otherwise.
/// The empty subset restricts to the empty complex, concentrated in
/// degree -1.
pub fn expected_grid_profile(mask: u64, index: &HashMap<u64, (usize, usize)>) -> HomologyProfile {
    if mask == 0 {
        return HomologyProfile::singleton(-1);
    }
    match index.get(&mask) {
        Some(&(s, t)) => HomologyProfile::singleton(t as i64 - s as i64 - 1),
        None => HomologyProfile::zero(),
    }
}

/// Connector columns used by a grid edge subset.
pub fn grid_connector_cols(n: usize, mask: u64) -> Vec<usize> {
    bits(mask >> (2 * (n - 1))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ld_ideal;
    use crate::poset::LabeledPoset;

    fn mask(vs: &[usize]) -> u64 {
        vs.iter().fold(0, |m, &v| m | (1 << v))
    }

    #[test]
    fn diamond_subsets_by_route() {
        let single = diamond_edge_subset(2, &[RouteChoice::First, RouteChoice::First]);
        assert_eq!(single, mask(&[0, 1, 4, 5]));
        assert_eq!(
            classify_diamond_subset(2, single),
            DiamondClass::MaximalChain
        );
        assert_eq!(
            expected_diamond_profile(2, single),
            HomologyProfile::singleton(2)
        );

        let doubled = diamond_edge_subset(2, &[RouteChoice::Both, RouteChoice::First]);
        assert_eq!(doubled, mask(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(
            classify_diamond_subset(2, doubled),
            DiamondClass::ChainUnion { doubled: 1 }
        );
        assert_eq!(
            expected_diamond_profile(2, doubled),
            HomologyProfile::singleton(3)
        );

        let ragged = mask(&[0, 1, 2, 4, 5]);
        assert_eq!(classify_diamond_subset(2, ragged), DiamondClass::Degenerate);
        assert!(expected_diamond_profile(2, ragged).is_zero());
    }

    #[test]
    fn diamond_generators_are_the_single_chains() {
        for n in 1..=3 {
            let lp = LabeledPoset::diamond(n).unwrap();
            let ideal = ld_ideal(&lp).unwrap();
            for &g in ideal.generators() {
                assert_eq!(classify_diamond_subset(n, g), DiamondClass::MaximalChain);
            }
            let gens = ideal.generators();
            let union = gens[0] | gens[gens.len() - 1];
            // The first and last generators differ in every diamond.
            assert_eq!(
                classify_diamond_subset(n, union),
                DiamondClass::ChainUnion { doubled: n }
            );
        }
    }

    #[test]
    fn grid_single_connector_members_are_the_chains() {
        for n in 2..=5 {
            let lp = LabeledPoset::grid(n).unwrap();
            let mut chain_sets: Vec<u64> = lp
                .poset()
                .maximal_chains()
                .iter()
                .map(|c| lp.chain_edge_set(c))
                .collect();
            chain_sets.sort_by(|a, b| crate::ideal::set_cmp(*a, *b));
            assert_eq!(grid_family(1, n, n), chain_sets);
        }
    }

    #[test]
    fn grid_members_are_unions_of_crossing_chains() {
        let n = 4;
        let lp = LabeledPoset::grid(n).unwrap();
        let crossing: HashMap<usize, u64> = lp
            .poset()
            .maximal_chains()
            .iter()
            .map(|c| {
                let edges = lp.chain_edge_set(c);
                let col = grid_connector_cols(n, edges)[0];
                (col, edges)
            })
            .collect();
        for s in 1..=n {
            for t in n..=(2 * n + s - 2) {
                for member in grid_family(s, t, n) {
                    assert_eq!(member.count_ones() as usize, t);
                    let cols = grid_connector_cols(n, member);
                    assert_eq!(cols.len(), s);
                    let union = cols.iter().fold(0u64, |m, c| m | crossing[c]);
                    assert_eq!(union, member, "member is not the union of its chains");
                }
            }
        }
    }

    #[test]
    fn grid_counts_match_the_closed_form() {
        for n in 2..=6usize {
            for s in 0..=(n + 1) {
                for t in 0..=(2 * n + s) {
                    assert_eq!(
                        count_family(s, t, n),
                        count_family_closed_form(s, t, n),
                        "s = {s}, t = {t}, n = {n}"
                    );
                }
            }
            // Families with s connectors total one per connector choice.
            for s in 1..=n {
                let total: u64 = (n..=(2 * n + s - 2)).map(|t| count_family(s, t, n)).sum();
                assert_eq!(total, binom(n as i64, s as i64));
            }
        }
        assert_eq!(count_family_closed_form(2, 6, 4), 3);
    }

    #[test]
    fn composition_subsets_sit_in_the_widest_family() {
        let sub = grid_composition_subset(3, &[0, 2]);
        assert_eq!(sub, mask(&[0, 1, 2, 3, 4, 6]));
        assert!(grid_family(2, 6, 3).contains(&sub));
        // Keeping every connector gives the whole edge set.
        let full = grid_composition_subset(4, &[0, 1, 2, 3]);
        assert_eq!(full, (1 << 10) - 1);
        assert!(grid_family(4, 10, 4).contains(&full));
    }

    #[test]
    fn family_index_recovers_parameters() {
        let n = 5;
        let index = grid_family_index(n);
        assert_eq!(index.len() as u64, (1u64 << n) - 1);
        for (&member, &(s, t)) in &index {
            assert_eq!(member.count_ones() as usize, t);
            assert_eq!(grid_connector_cols(n, member).len(), s);
            assert_eq!(
                expected_grid_profile(member, &index),
                HomologyProfile::singleton(t as i64 - s as i64 - 1)
            );
        }
        assert!(expected_grid_profile(mask(&[0]), &index).is_zero());
    }
}
