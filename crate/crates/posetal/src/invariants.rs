//! Graded Betti numbers of squarefree monomial quotients via Hochster's
//! formula, and everything read off from them: projective dimension,
//! regularity, depth, Cohen-Macaulayness (plain and sequential),
//! simplicial forests, a packing lower bound for regularity, and the
//! closed-form tables the verification suites compare against.

use crate::complex::{stanley_reisner, SimplicialComplex};
use crate::homology::{reduced_homology, HomologyProfile};
use crate::ideal::{set_cmp, SquarefreeIdeal};
use crate::linalg::FieldSpec;
use crate::poset::{bits, ChainPath, Poset, PosetError};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("paths need at least two vertices, got t = {0}")]
    PathTooShort(usize),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Graded Betti numbers of a quotient ring, indexed by homological
/// degree `i` and internal degree `j`. Zero entries are not stored;
/// `(0, 0)` is always 1 for a proper ideal.
#[derive(Clone, Debug)]
pub struct BettiTable {
    n_vars: usize,
    field: FieldSpec,
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn new(n_vars: usize, field: FieldSpec) -> Self {
        BettiTable {
            n_vars,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, i: u32, j: u32, value: u64) {
        debug_assert!(j >= i, "entry ({i}, {j}) below the diagonal");
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn entries_vec(&self) -> Vec<(u32, u32, u64)> {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect()
    }

    /// Entrywise equality, ignoring the field annotation.
    pub fn entries_eq(&self, other: &BettiTable) -> bool {
        self.n_vars == other.n_vars && self.entries == other.entries
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: u32) -> u64 {
        self.entries
            .iter()
            .filter(|&(&(bi, _), _)| bi == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Projective dimension: the largest homological degree present.
    pub fn pd(&self) -> u32 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Castelnuovo-Mumford regularity: the largest `j - i` present.
    pub fn reg(&self) -> u32 {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Depth via Auslander-Buchsbaum: variables minus projective
    /// dimension.
    pub fn depth(&self) -> usize {
        self.n_vars - self.pd() as usize
    }

    /// True when no homological degree carries two internal degrees.
    pub fn is_pure(&self) -> bool {
        let mut seen = HashSet::new();
        self.entries.keys().all(|&(i, _)| seen.insert(i))
    }

    /// Structural sanity: `(0, 0)` is 1 and nothing sits below the
    /// diagonal.
    pub fn is_valid(&self) -> bool {
        self.get(0, 0) == 1 && self.entries.keys().all(|&(i, j)| j >= i)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,value\n");
        for (&(i, j), &v) in &self.entries {
            out.push_str(&format!("{i},{j},{v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> BettiTableJson {
        BettiTableJson {
            n_vars: self.n_vars,
            field: self.field.to_string(),
            entries: self.entries_vec(),
        }
    }
}

impl fmt::Display for BettiTable {
    /// Grid with homological degree across and `j - i` down, zeros as
    /// dots, followed by the derived invariants.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.pd();
        let reg = self.reg();
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(pd.to_string().len())
            + 1;
        write!(f, "{:>5}", "")?;
        for i in 0..=pd {
            write!(f, "{i:>width$}")?;
        }
        writeln!(f)?;
        for r in 0..=reg {
            write!(f, "{r:>4}:")?;
            for i in 0..=pd {
                let v = self.get(i, i + r);
                if v == 0 {
                    write!(f, "{:>width$}", ".")?;
                } else {
                    write!(f, "{v:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        write!(f, "pd = {}, reg = {}, depth = {}", pd, reg, self.depth())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BettiTableJson {
    pub n_vars: usize,
    pub field: String,
    pub entries: Vec<(u32, u32, u64)>,
}

/// Betti-number engine built on Hochster's formula. The homology
/// profiles of restricted Stanley-Reisner complexes are memoized up to
/// relabeling of variables, so one engine amortizes work across a whole
/// family of ideals over the same field.
pub struct HochsterEngine {
    field: FieldSpec,
    memo: HashMap<Vec<u64>, HomologyProfile>,
}

impl HochsterEngine {
    pub fn new(field: FieldSpec) -> Self {
        HochsterEngine {
            field,
            memo: HashMap::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Graded Betti numbers of `S/I` by Hochster's formula: the entry at
    /// `(i, j)` sums, over the vertex sets `W` of size `j`, the reduced
    /// homology of the restricted Stanley-Reisner complex in degree
    /// `j - i - 1`.
    ///
    /// Only `W` that are unions of generator supports can contribute:
    /// any other restriction is a cone over the vertices missed by every
    /// generator inside `W`. Those unions are enumerated directly, and
    /// each restriction factors as a join over the variable-connectivity
    /// components of the generators it contains, so its profile is the
    /// convolution of memoized component profiles. Runtime is governed
    /// by the number of distinct unions, which is small for structured
    /// ideals but can grow exponentially in the generator count.
    pub fn betti_table(&mut self, ideal: &SquarefreeIdeal) -> BettiTable {
        let mut table = BettiTable::new(ideal.n_vars(), self.field);
        table.add(0, 0, 1);
        if ideal.is_zero() {
            return table;
        }
        let gens = ideal.generators();
        let mut seen: HashSet<u64> = HashSet::new();
        seen.insert(0);
        let mut stack: Vec<u64> = vec![0];
        while let Some(w) = stack.pop() {
            for &g in gens {
                let u = w | g;
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        let mut candidates: Vec<u64> = seen.into_iter().filter(|&w| w != 0).collect();
        candidates.sort_by(|a, b| set_cmp(*a, *b));
        for w in candidates {
            let profile = self.union_profile(gens, w);
            let j = w.count_ones();
            for (d, v) in profile.entries() {
                let i = j as i64 - d - 1;
                debug_assert!(i >= 1, "homology at the top degree of a non-face");
                table.add(i as u32, j, v);
            }
        }
        table
    }

    /// CM test run both ways: Reisner's link criterion on the
    /// Stanley-Reisner complex, and projective dimension against height
    /// through Auslander-Buchsbaum. The two routes are independent, so
    /// they double-check each other.
    pub fn is_cohen_macaulay(&mut self, ideal: &SquarefreeIdeal) -> bool {
        let via_links = complex_is_cm(&stanley_reisner(ideal), self.field);
        let via_depth = self.betti_table(ideal).pd() as usize == ideal.height();
        assert_eq!(
            via_links, via_depth,
            "Reisner and Auslander-Buchsbaum disagree on {ideal}"
        );
        via_links
    }

    /// Profile of the Stanley-Reisner complex restricted to `w`, where
    /// `w` is a union of generator supports.
    fn union_profile(&mut self, gens: &[u64], w: u64) -> HomologyProfile {
        let inside: Vec<u64> = gens.iter().copied().filter(|&g| g & !w == 0).collect();
        debug_assert_eq!(inside.iter().fold(0, |m, &g| m | g), w);
        let mut components: Vec<(u64, Vec<u64>)> = Vec::new();
        for g in inside {
            let mut vars = g;
            let mut members = vec![g];
            let mut rest = Vec::new();
            for (m, gs) in components.drain(..) {
                if m & vars != 0 {
                    vars |= m;
                    members.extend(gs);
                } else {
                    rest.push((m, gs));
                }
            }
            components = rest;
            components.push((vars, members));
        }
        components.sort_by(|a, b| set_cmp(a.0, b.0));
        let mut profile = HomologyProfile::join_unit();
        for (vars, members) in components {
            let mut key: Vec<u64> = members.iter().map(|&g| compress(g, vars)).collect();
            key.sort_by(|a, b| set_cmp(*a, *b));
            let part = match self.memo.get(&key) {
                Some(p) => p.clone(),
                None => {
                    let p = self.component_profile(&key, vars.count_ones() as usize);
                    self.memo.insert(key, p.clone());
                    p
                }
            };
            profile = profile.convolve(&part);
            if profile.is_zero() {
                break;
            }
        }
        profile
    }

    fn component_profile(&self, gens: &[u64], n_vars: usize) -> HomologyProfile {
        let names = (1..=n_vars).map(|k| format!("x{k}")).collect();
        let ideal = SquarefreeIdeal::new(names, gens.to_vec())
            .expect("component generators are valid by construction");
        reduced_homology(&stanley_reisner(&ideal), self.field)
    }
}

/// One-shot Betti table; use [`HochsterEngine`] directly to share the
/// memo across a family.
pub fn betti_table_hochster(ideal: &SquarefreeIdeal, field: FieldSpec) -> BettiTable {
    HochsterEngine::new(field).betti_table(ideal)
}

/// One-shot CM test; see [`HochsterEngine::is_cohen_macaulay`].
pub fn is_cohen_macaulay(ideal: &SquarefreeIdeal, field: FieldSpec) -> bool {
    HochsterEngine::new(field).is_cohen_macaulay(ideal)
}

/// Renumbers the bits of `mask` to the positions of `vars`, lowest
/// first.
fn compress(mask: u64, vars: u64) -> u64 {
    let mut out = 0u64;
    for (pos, v) in bits(vars).enumerate() {
        if mask >> v & 1 == 1 {
            out |= 1 << pos;
        }
    }
    out
}

/// A maximum packing witnessing a regularity lower bound: pairwise
/// disjoint saturated paths whose union contains no further path.
#[derive(Clone, Debug)]
pub struct PackingCertificate {
    pub t: usize,
    pub paths: Vec<ChainPath>,
}

impl PackingCertificate {
    pub fn size(&self) -> usize {
        self.paths.len()
    }
}

impl fmt::Display for PackingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.paths.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Lower bound for the regularity of `S/I_t(P)`: the maximum number `a`
/// of pairwise vertex-disjoint saturated `t`-paths whose union supports
/// no other `t`-path gives `reg >= a * (t - 1)`. Returns the bound and
/// a maximum packing as certificate.
pub fn reg_lower_bound(
    poset: &Poset,
    t: usize,
) -> Result<(usize, PackingCertificate), InvariantError> {
    if t < 2 {
        return Err(InvariantError::PathTooShort(t));
    }
    let paths = poset.saturated_paths(t)?;
    let sets: Vec<u64> = paths.iter().map(|p| p.vertex_set()).collect();
    let mut best: Vec<usize> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    pack(&sets, 0, 0, &mut chosen, &mut best);
    let union = best.iter().fold(0u64, |m, &k| m | sets[k]);
    for (k, &s) in sets.iter().enumerate() {
        if best.contains(&k) {
            assert!(
                best.iter().all(|&o| o == k || sets[o] & s == 0),
                "packing is not disjoint"
            );
        } else {
            assert!(s & !union != 0, "union supports a path outside the packing");
        }
    }
    let cert = PackingCertificate {
        t,
        paths: best.iter().map(|&k| paths[k].clone()).collect(),
    };
    Ok((cert.size() * (t - 1), cert))
}

/// Depth-first packing search. A path that fits inside the current
/// union without being chosen can never be chosen later (it would have
/// to meet a chosen path), so such branches are pruned exactly.
fn pack(sets: &[u64], start: usize, union: u64, chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
    if chosen.len() > best.len() {
        *best = chosen.clone();
    }
    for k in start..sets.len() {
        let s = sets[k];
        if s & union != 0 {
            continue;
        }
        let next = union | s;
        let admissible = sets
            .iter()
            .enumerate()
            .all(|(o, &os)| os & !next != 0 || o == k || chosen.contains(&o));
        if !admissible {
            continue;
        }
        chosen.push(k);
        pack(sets, k + 1, next, chosen, best);
        chosen.pop();
    }
}

/// Whether facet `k` is a leaf of the family: it is alone, or some
/// other facet contains its intersection with every other member.
pub fn is_leaf(facets: &[u64], k: usize) -> bool {
    if facets.len() == 1 {
        return true;
    }
    let f = facets[k];
    let mut joint_needed = 0u64;
    for (h, &fh) in facets.iter().enumerate() {
        if h != k {
            joint_needed |= f & fh;
        }
    }
    facets
        .iter()
        .enumerate()
        .any(|(g, &fg)| g != k && joint_needed & !fg == 0)
}

/// Whether every nonempty subfamily of facets has a leaf. Checked by
/// exhaustive enumeration, so the cost is exponential in the facet
/// count; the void and empty complexes count as forests.
pub fn is_simplicial_forest(complex: &SimplicialComplex) -> bool {
    let facets = complex.facets();
    if facets.is_empty() {
        return true;
    }
    let q = facets.len();
    let mut members: Vec<u64> = Vec::with_capacity(q);
    for sub in 1u64..(1 << q) {
        if sub.count_ones() == 1 {
            continue;
        }
        members.clear();
        members.extend(bits(sub).map(|k| facets[k]));
        if !(0..members.len()).any(|k| is_leaf(&members, k)) {
            return false;
        }
    }
    true
}

/// A connected simplicial forest; the empty complex counts as a tree.
pub fn is_simplicial_tree(complex: &SimplicialComplex) -> bool {
    complex.is_connected() && is_simplicial_forest(complex)
}

/// Reisner's criterion over the given field: the link of every face,
/// the empty face included, has reduced homology concentrated in its
/// own top dimension.
pub fn complex_is_cm(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    if complex.is_void() {
        return true;
    }
    for face in complex.faces_by_dim().iter().flatten() {
        let link = complex.link(*face);
        let top = match link.dim() {
            None => continue,
            Some(d) => d,
        };
        let profile = reduced_homology(&link, field);
        if profile.entries().any(|(d, _)| d < top) {
            return false;
        }
    }
    true
}

/// Duval's criterion: CM for every pure skeleton up to the dimension.
pub fn complex_is_sequentially_cm(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    let dim = match complex.dim() {
        None => return true,
        Some(d) => d,
    };
    (0..=dim).all(|i| complex_is_cm(&complex.pure_skeleton(i), field))
}

/// Sequential CM test for a quotient by a squarefree monomial ideal.
pub fn is_sequentially_cm(ideal: &SquarefreeIdeal, field: FieldSpec) -> bool {
    complex_is_sequentially_cm(&stanley_reisner(ideal), field)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut out: u64 = 1;
    for step in 0..k {
        out = out * (n - step) / (step + 1);
    }
    out
}

/// Expected Betti table of the chain ideal of the stacked-diamonds
/// poset on `n` diamonds: beyond `(0, 0)`, the entry at
/// `(i, 2i + 2n - 2)` is `C(n, i-1) * 2^(n-i+1)` for `1 <= i <= n+1`.
pub fn closed_form_diamond(n: usize) -> BettiTable {
    let n = n as u32;
    let mut table = BettiTable::new(4 * n as usize, FieldSpec::default());
    table.add(0, 0, 1);
    for i in 1..=(n + 1) {
        let value = binom(n as i64, i as i64 - 1) << (n + 1 - i);
        table.add(i, 2 * i + 2 * n - 2, value);
    }
    table
}

/// Expected Betti table of the full-length path ideal of the
/// stacked-diamonds poset: the same coefficients as
/// [`closed_form_diamond`], placed at `(i, i + 2n)`.
pub fn closed_form_diamond_path(n: usize) -> BettiTable {
    let n = n as u32;
    let mut table = BettiTable::new(3 * n as usize + 1, FieldSpec::default());
    table.add(0, 0, 1);
    for i in 1..=(n + 1) {
        let value = binom(n as i64, i as i64 - 1) << (n + 1 - i);
        table.add(i, i + 2 * n, value);
    }
    table
}

/// Expected Betti table of the chain ideal of the 2 x n grid poset:
/// `(1, n)` holds `n`, and for `2 <= i <= n` the entry at `(i, j)` is
/// `(2n - j + i - 1) * C(j - n - i, i - 2)` over the window
/// `n + 2i - 2 <= j <= 2n + i - 2`.
pub fn closed_form_chains(n: usize) -> BettiTable {
    let n = n as u32;
    let mut table = BettiTable::new(3 * n as usize - 2, FieldSpec::default());
    table.add(0, 0, 1);
    table.add(1, n, n as u64);
    for i in 2..=n {
        for j in (n + 2 * i - 2)..=(2 * n + i - 2) {
            let factor = (2 * n + i - 1 - j) as u64;
            let value = factor * binom(j as i64 - n as i64 - i as i64, i as i64 - 2);
            table.add(i, j, value);
        }
    }
    table
}

/// Expected Betti table of the full-length path ideal of the 2 x n grid
/// poset: `{(0,0): 1, (1, n+1): n, (2, n+2): n-1}`.
pub fn closed_form_grid_path(n: usize) -> BettiTable {
    let n = n as u32;
    let mut table = BettiTable::new(2 * n as usize, FieldSpec::default());
    table.add(0, 0, 1);
    table.add(1, n + 1, n as u64);
    table.add(2, n + 2, n as u64 - 1);
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::facet_complex;
    use crate::ideal::{ld_ideal, path_ideal};
    use crate::poset::LabeledPoset;

    const FIELDS: [FieldSpec; 3] = [
        FieldSpec::Prime(2),
        FieldSpec::Prime(32003),
        FieldSpec::Rationals,
    ];

    fn mask(vs: &[usize]) -> u64 {
        vs.iter().fold(0, |m, &v| m | (1 << v))
    }

    fn line(n: usize) -> Poset {
        Poset::chain(n).unwrap()
    }

    #[test]
    fn edge_ideal_of_short_lines() {
        // Both tables are classical: linear quotients give the first,
        // and the second is the Koszulish resolution of the 4-vertex
        // path, pure in each degree.
        for field in FIELDS {
            let t3 = betti_table_hochster(&path_ideal(&line(3), 2).unwrap(), field);
            assert_eq!(t3.entries_vec(), vec![(0, 0, 1), (1, 2, 2), (2, 3, 1)]);
            let t4 = betti_table_hochster(&path_ideal(&line(4), 2).unwrap(), field);
            assert_eq!(t4.entries_vec(), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
            assert!(t4.is_valid());
            assert_eq!(t4.pd(), 2);
            assert_eq!(t4.reg(), 1);
            assert_eq!(t4.depth(), 2);
        }
    }

    #[test]
    fn zero_ideal_table_is_trivial() {
        let ideal = SquarefreeIdeal::zero(vec!["x1".into(), "x2".into()]).unwrap();
        let table = betti_table_hochster(&ideal, FieldSpec::default());
        assert_eq!(table.entries_vec(), vec![(0, 0, 1)]);
        assert_eq!(table.pd(), 0);
        assert_eq!(table.depth(), 2);
    }

    #[test]
    fn diamond_chain_ideal_tables() {
        for field in FIELDS {
            let mut engine = HochsterEngine::new(field);
            let d1 = engine.betti_table(&ld_ideal(&LabeledPoset::diamond(1).unwrap()).unwrap());
            assert_eq!(d1.entries_vec(), vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)]);
            assert!(d1.entries_eq(&closed_form_diamond(1)));

            let d2 = engine.betti_table(&ld_ideal(&LabeledPoset::diamond(2).unwrap()).unwrap());
            assert_eq!(d2.get(1, 4), 4);
            assert_eq!(d2.get(2, 6), 4);
            assert_eq!(d2.get(3, 8), 1);
            assert!(d2.entries_eq(&closed_form_diamond(2)));
            assert_eq!(d2.pd(), 3);
            assert_eq!(d2.reg(), 5);
            assert_eq!(d2.depth(), 5);
        }
    }

    #[test]
    fn grid_chain_ideal_table() {
        let ideal = ld_ideal(&LabeledPoset::grid(3).unwrap()).unwrap();
        for field in FIELDS {
            let table = betti_table_hochster(&ideal, field);
            assert_eq!(
                table.entries_vec(),
                vec![(0, 0, 1), (1, 3, 3), (2, 5, 2), (2, 6, 1), (3, 7, 1)]
            );
            assert!(table.entries_eq(&closed_form_chains(3)));
            for i in 0..=3 {
                assert_eq!(table.total(i), binom(3, i as i64));
            }
            assert_eq!(table.pd(), 3);
            assert_eq!(table.reg(), 4);
        }
    }

    #[test]
    fn line_path_ideal_pd() {
        let table = betti_table_hochster(&path_ideal(&line(7), 3).unwrap(), FieldSpec::default());
        assert_eq!(table.pd(), 3);
    }

    #[test]
    fn purity_detection() {
        assert!(closed_form_diamond(3).is_pure());
        assert!(closed_form_diamond_path(3).is_pure());
        assert!(!closed_form_chains(3).is_pure());
    }

    #[test]
    fn regularity_lower_bounds_on_lines() {
        let (b4, c4) = reg_lower_bound(&line(4), 2).unwrap();
        assert_eq!(b4, 1);
        assert_eq!(c4.size(), 1);

        let (b7, c7) = reg_lower_bound(&line(7), 3).unwrap();
        assert_eq!(b7, 4);
        let sets: Vec<u64> = c7.paths.iter().map(|p| p.vertex_set()).collect();
        assert_eq!(sets, vec![mask(&[0, 1, 2]), mask(&[4, 5, 6])]);

        for t in 2..=5 {
            let (b, c) = reg_lower_bound(&line(t), t).unwrap();
            assert_eq!(b, t - 1);
            assert_eq!(c.size(), 1);
        }

        assert!(reg_lower_bound(&line(3), 1).is_err());
    }

    #[test]
    fn bound_is_attained_on_lines() {
        // n = s(t+1) + t makes the packing bound sharp.
        for (t, s) in [(2usize, 1usize), (3, 1), (2, 2)] {
            let n = s * (t + 1) + t;
            let ideal = path_ideal(&line(n), t).unwrap();
            let table = betti_table_hochster(&ideal, FieldSpec::default());
            let (bound, _) = reg_lower_bound(&line(n), t).unwrap();
            assert_eq!(table.reg() as usize, bound, "t = {t}, n = {n}");
        }
    }

    #[test]
    fn leaves_of_small_families() {
        let path = [mask(&[0, 1]), mask(&[1, 2])];
        assert!(is_leaf(&path, 0));
        assert!(is_leaf(&path, 1));
        let square = [mask(&[0, 1]), mask(&[1, 2]), mask(&[2, 3]), mask(&[0, 3])];
        for k in 0..4 {
            assert!(!is_leaf(&square, k));
        }
    }

    #[test]
    fn forest_classification_examples() {
        let forest = facet_complex(&path_ideal(&line(5), 3).unwrap()).unwrap();
        assert!(is_simplicial_forest(&forest));
        assert!(is_simplicial_tree(&forest));

        let cycle33 = facet_complex(&path_ideal(&Poset::cycle(3, 3).unwrap(), 2).unwrap()).unwrap();
        assert!(!is_simplicial_forest(&cycle33));

        let cycle32 = facet_complex(&path_ideal(&Poset::cycle(3, 2).unwrap(), 3).unwrap()).unwrap();
        assert!(is_simplicial_forest(&cycle32));

        assert!(is_simplicial_forest(&SimplicialComplex::void(3)));
        assert!(is_simplicial_tree(&SimplicialComplex::empty(3)));
    }

    #[test]
    fn cohen_macaulay_examples() {
        for field in FIELDS {
            assert!(is_cohen_macaulay(&path_ideal(&line(4), 2).unwrap(), field));
            assert!(!is_cohen_macaulay(&path_ideal(&line(3), 2).unwrap(), field));
            assert!(is_cohen_macaulay(
                &ld_ideal(&LabeledPoset::diamond(1).unwrap()).unwrap(),
                field
            ));
            assert!(!is_cohen_macaulay(
                &ld_ideal(&LabeledPoset::diamond(2).unwrap()).unwrap(),
                field
            ));
        }
    }

    #[test]
    fn sequentially_cm_examples() {
        for field in FIELDS {
            assert!(is_sequentially_cm(&path_ideal(&line(5), 3).unwrap(), field));
            assert!(is_sequentially_cm(
                &path_ideal(&Poset::cycle(3, 2).unwrap(), 3).unwrap(),
                field
            ));
            // CM implies sequentially CM.
            assert!(is_sequentially_cm(&path_ideal(&line(4), 2).unwrap(), field));
        }
    }

    #[test]
    fn closed_form_tables() {
        let d3 = closed_form_diamond(3);
        assert_eq!(d3.get(1, 6), 8);
        assert_eq!(d3.get(2, 8), 12);
        assert_eq!(d3.get(3, 10), 6);
        assert_eq!(d3.get(4, 12), 1);
        assert_eq!(d3.pd(), 4);
        assert_eq!(d3.reg(), 8);

        let g4 = closed_form_grid_path(4);
        assert_eq!(g4.get(1, 5), 4);
        assert_eq!(g4.get(2, 6), 3);

        for n in 2..=6usize {
            let chains = closed_form_chains(n);
            for i in 0..=(n as u32) {
                assert_eq!(
                    chains.total(i),
                    binom(n as i64, i as i64),
                    "n = {n}, i = {i}"
                );
            }
            assert_eq!(chains.pd(), n as u32);
            assert_eq!(chains.reg(), 2 * n as u32 - 2);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(-2, 0), 0);
        assert_eq!(binom(40, 20), 137_846_528_820);
    }

    #[test]
    fn table_serialization() {
        let table = closed_form_grid_path(3);
        assert_eq!(table.to_csv(), "i,j,value\n0,0,1\n1,4,3\n2,5,2\n");
        let json = serde_json::to_string(&table.to_json()).unwrap();
        assert!(json.contains("\"entries\":[[0,0,1],[1,4,3],[2,5,2]]"));
        let shown = table.to_string();
        assert!(shown.contains("pd = 2, reg = 3, depth = 4"));
    }
}
