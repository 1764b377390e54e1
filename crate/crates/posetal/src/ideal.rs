//! Squarefree monomial ideals attached to posets.
//!
//! Generators are stored as vertex-set bitmasks over a named variable
//! list. Two constructions are provided: the path ideal of a poset,
//! generated by the vertex sets of its saturated `t`-chains in the
//! element variables, and the chain ideal of an arc-labeled poset (its
//! Luce-decomposable ideal), generated by the arc sets of its maximal
//! chains in the arc variables.

use crate::poset::{bits, LabeledPoset, Poset, PosetError};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("at most 64 variables are supported, got {0}")]
    TooManyVariables(usize),
    #[error("generator uses variable index {0}, but there are only {1} variables")]
    GeneratorOutOfRange(usize, usize),
    #[error("the empty monomial generates the unit ideal, which is not supported")]
    UnitGenerator,
    #[error("path ideals are defined for path length t >= 2, got {0}")]
    PathTooShort(usize),
    #[error("the zero ideal has no {0}")]
    ZeroIdeal(&'static str),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Order vertex sets by size, then lexicographically on the sorted
/// vertex lists.
pub fn set_cmp(a: u64, b: u64) -> Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then(b.reverse_bits().cmp(&a.reverse_bits()))
}

/// A squarefree monomial ideal, held by its unique minimal generating
/// set of vertex masks, sorted by [`set_cmp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    var_names: Vec<String>,
    gens: Vec<u64>,
}

impl SquarefreeIdeal {
    pub fn new(var_names: Vec<String>, gens: Vec<u64>) -> Result<Self, IdealError> {
        let n = var_names.len();
        if n > 64 {
            return Err(IdealError::TooManyVariables(n));
        }
        let mut gens = gens;
        for &g in &gens {
            if g == 0 {
                return Err(IdealError::UnitGenerator);
            }
            let top = 63 - g.leading_zeros() as usize;
            if top >= n {
                return Err(IdealError::GeneratorOutOfRange(top, n));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        // Keep only inclusion-minimal generators.
        let minimal: Vec<u64> = gens
            .iter()
            .copied()
            .filter(|&g| !gens.iter().any(|&h| h != g && h & g == h))
            .collect();
        let mut gens = minimal;
        gens.sort_unstable_by(|&a, &b| set_cmp(a, b));
        Ok(SquarefreeIdeal { var_names, gens })
    }

    pub fn zero(var_names: Vec<String>) -> Result<Self, IdealError> {
        SquarefreeIdeal::new(var_names, Vec::new())
    }

    pub fn n_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator_sets(&self) -> Vec<Vec<usize>> {
        self.gens.iter().map(|&g| bits(g).collect()).collect()
    }

    pub fn monomial_string(&self, mask: u64) -> String {
        if mask == 0 {
            return "1".to_string();
        }
        bits(mask)
            .map(|v| self.var_names[v].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Membership test for a squarefree monomial given by its support.
    pub fn contains_monomial(&self, support: u64) -> bool {
        self.gens.iter().any(|&g| g & !support == 0)
    }

    /// The minimal vertex covers of the generator family: inclusion
    /// minimal variable sets meeting every generator.
    pub fn minimal_vertex_covers(&self) -> Vec<u64> {
        minimal_transversals(&self.gens)
    }

    /// Minimal primary decomposition. Each component is the prime
    /// generated by the variables of one minimal vertex cover; the
    /// ideal is the intersection of its components.
    pub fn primary_decomposition(&self) -> Result<Vec<u64>, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal(
                "primary decomposition into monomial primes",
            ));
        }
        Ok(self.minimal_vertex_covers())
    }

    /// Smallest number of variables in a minimal prime; 0 for the zero
    /// ideal.
    pub fn height(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.minimal_vertex_covers()
            .iter()
            .map(|c| c.count_ones() as usize)
            .min()
            .expect("a nonzero ideal has a vertex cover")
    }

    /// Krull dimension of the quotient ring: variables minus height.
    pub fn krull_dim_quotient(&self) -> usize {
        self.n_vars() - self.height()
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            variables: self.var_names.clone(),
            generators: self
                .gens
                .iter()
                .map(|&g| bits(g).map(|v| v + 1).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &IdealJson) -> Result<Self, IdealError> {
        let n = json.variables.len();
        let mut gens = Vec::with_capacity(json.generators.len());
        for gen in &json.generators {
            let mut mask = 0u64;
            for &v in gen {
                if v == 0 || v > n {
                    return Err(IdealError::GeneratorOutOfRange(v.saturating_sub(1), n));
                }
                mask |= 1 << (v - 1);
            }
            gens.push(mask);
        }
        SquarefreeIdeal::new(json.variables.clone(), gens)
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self.gens.iter().map(|&g| self.monomial_string(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// JSON schema: named variables plus 1-based generator index lists.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<Vec<usize>>,
}

/// Path ideal: generated by the vertex sets of the saturated `t`-chains.
pub fn path_ideal(poset: &Poset, t: usize) -> Result<SquarefreeIdeal, IdealError> {
    if t < 2 {
        return Err(IdealError::PathTooShort(t));
    }
    let gens = poset
        .saturated_paths(t)?
        .iter()
        .map(|p| p.vertex_set())
        .collect();
    SquarefreeIdeal::new(poset.labels().to_vec(), gens)
}

/// Chain ideal in the arc variables: generated by the arc sets of the
/// maximal chains (the Luce-decomposable ideal of the poset).
pub fn ld_ideal(lp: &LabeledPoset) -> Result<SquarefreeIdeal, IdealError> {
    if lp.edge_count() > 64 {
        return Err(IdealError::TooManyVariables(lp.edge_count()));
    }
    let gens = lp
        .poset()
        .maximal_chains()
        .iter()
        .map(|c| lp.chain_edge_set(c))
        .collect();
    SquarefreeIdeal::new(lp.edge_names().to_vec(), gens)
}

/// All inclusion-minimal sets meeting every set of the family, sorted by
/// [`set_cmp`]. The empty family is met by the empty set.
pub fn minimal_transversals(sets: &[u64]) -> Vec<u64> {
    let mut found = Vec::new();
    branch(sets, 0, 0, &mut found);
    found.sort_unstable();
    found.dedup();
    let minimal: Vec<u64> = found
        .iter()
        .copied()
        .filter(|&t| !found.iter().any(|&s| s != t && s & t == s))
        .collect();
    let mut out = minimal;
    out.sort_unstable_by(|&a, &b| set_cmp(a, b));
    out
}

fn branch(sets: &[u64], chosen: u64, banned: u64, out: &mut Vec<u64>) {
    match sets.iter().find(|&&s| s & chosen == 0) {
        None => out.push(chosen),
        Some(&s) => {
            let mut skipped = 0u64;
            for v in bits(s & !banned) {
                branch(sets, chosen | (1 << v), banned | skipped, out);
                skipped |= 1 << v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::LabeledPoset;

    fn mask(vs: &[usize]) -> u64 {
        vs.iter().fold(0, |m, &v| m | (1 << v))
    }

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn construction_minimalizes_and_sorts() {
        let i =
            SquarefreeIdeal::new(names(4), vec![mask(&[0, 1]), mask(&[0]), mask(&[2, 3])]).unwrap();
        assert_eq!(i.generators(), &[mask(&[0]), mask(&[2, 3])]);
        assert_eq!(i.to_string(), "(x1, x3*x4)");
        assert_eq!(
            SquarefreeIdeal::new(names(2), vec![0]).unwrap_err(),
            IdealError::UnitGenerator
        );
        assert_eq!(
            SquarefreeIdeal::new(names(2), vec![mask(&[5])]).unwrap_err(),
            IdealError::GeneratorOutOfRange(5, 2)
        );
        let sorted =
            SquarefreeIdeal::new(names(4), vec![mask(&[1, 2]), mask(&[0, 3]), mask(&[0, 1])])
                .unwrap();
        assert_eq!(
            sorted.generators(),
            &[mask(&[0, 1]), mask(&[0, 3]), mask(&[1, 2])]
        );
    }

    #[test]
    fn membership() {
        let i = SquarefreeIdeal::new(names(4), vec![mask(&[0, 1]), mask(&[2, 3])]).unwrap();
        assert!(i.contains_monomial(mask(&[0, 1, 2])));
        assert!(!i.contains_monomial(mask(&[0, 2])));
        assert!(!SquarefreeIdeal::zero(names(3))
            .unwrap()
            .contains_monomial(mask(&[0])));
    }

    #[test]
    fn path_ideal_of_a_chain() {
        let l5 = Poset::chain(5).unwrap();
        let i = path_ideal(&l5, 3).unwrap();
        assert_eq!(i.to_string(), "(x1*x2*x3, x2*x3*x4, x3*x4*x5)");
        let l3 = Poset::chain(3).unwrap();
        assert!(path_ideal(&l3, 4).unwrap().is_zero());
        assert_eq!(path_ideal(&l3, 1).unwrap_err(), IdealError::PathTooShort(1));
    }

    #[test]
    fn path_ideal_of_one_diamond() {
        let d1 = LabeledPoset::diamond(1).unwrap();
        let i = path_ideal(d1.poset(), 3).unwrap();
        assert_eq!(i.to_string(), "(x1*x2*x4, x1*x3*x4)");
    }

    #[test]
    fn chain_ideal_examples() {
        let d1 = LabeledPoset::diamond(1).unwrap();
        let i = ld_ideal(&d1).unwrap();
        assert_eq!(i.to_string(), "(y1*y2, y3*y4)");

        let g3 = LabeledPoset::grid(3).unwrap();
        let i = ld_ideal(&g3).unwrap();
        assert_eq!(i.generators().len(), 3);
        assert!(i.generators().iter().all(|g| g.count_ones() == 3));
        let expected = vec![mask(&[0, 1, 6]), mask(&[0, 3, 5]), mask(&[2, 3, 4])];
        let mut got = i.generators().to_vec();
        got.sort_unstable();
        let mut want = expected;
        want.sort_unstable();
        assert_eq!(got, want);
    }

    #[test]
    fn chain_ideal_matches_path_ideal_of_the_edge_poset() {
        use crate::poset::EdgeOrder;
        // For a graded poset whose maximal chains all have q arcs, the
        // chain ideal equals the q-path ideal of the arc poset.
        for lp in [
            LabeledPoset::grid(3).unwrap(),
            LabeledPoset::grid(4).unwrap(),
            LabeledPoset::diamond(2).unwrap(),
            LabeledPoset::with_lex_labels(Poset::chain(5).unwrap()),
        ] {
            let q = lp.poset().maximal_chains()[0].len() - 1;
            let hat = lp.edge_poset(EdgeOrder::Weak).unwrap();
            let from_chains = ld_ideal(&lp).unwrap();
            let from_paths = path_ideal(&hat, q).unwrap();
            assert_eq!(from_chains, from_paths);
        }
    }

    #[test]
    fn minimal_vertex_covers_of_chain_path_ideal() {
        let i = path_ideal(&Poset::chain(5).unwrap(), 3).unwrap();
        let covers = i.minimal_vertex_covers();
        assert_eq!(
            covers,
            vec![mask(&[2]), mask(&[0, 3]), mask(&[1, 3]), mask(&[1, 4])]
        );
        assert_eq!(i.height(), 1);
        assert_eq!(i.krull_dim_quotient(), 4);
    }

    #[test]
    fn primary_decomposition_of_one_diamond_chain_ideal() {
        let i = ld_ideal(&LabeledPoset::diamond(1).unwrap()).unwrap();
        let comps = i.primary_decomposition().unwrap();
        assert_eq!(
            comps,
            vec![mask(&[0, 2]), mask(&[0, 3]), mask(&[1, 2]), mask(&[1, 3])]
        );
        assert_eq!(i.height(), 2);
        assert_eq!(
            SquarefreeIdeal::zero(names(2))
                .unwrap()
                .primary_decomposition()
                .unwrap_err(),
            IdealError::ZeroIdeal("primary decomposition into monomial primes")
        );
    }

    #[test]
    fn decomposition_is_an_intersection() {
        // Squarefree membership agrees with membership in every prime.
        for ideal in [
            path_ideal(&Poset::chain(6).unwrap(), 3).unwrap(),
            path_ideal(&Poset::cycle(4, 3).unwrap(), 2).unwrap(),
            ld_ideal(&LabeledPoset::grid(3).unwrap()).unwrap(),
        ] {
            let comps = ideal.primary_decomposition().unwrap();
            for m in 0u64..1 << ideal.n_vars() {
                let in_all = comps.iter().all(|&c| c & m != 0);
                assert_eq!(ideal.contains_monomial(m), in_all);
            }
        }
    }

    #[test]
    fn cycle_height_small_case() {
        let c32 = Poset::cycle(3, 2).unwrap();
        let i = path_ideal(&c32, 2).unwrap();
        assert_eq!(i.generators().len(), 3);
        assert_eq!(i.height(), 2);
    }

    #[test]
    fn zero_ideal_height_and_dimension() {
        let z = SquarefreeIdeal::zero(names(4)).unwrap();
        assert_eq!(z.height(), 0);
        assert_eq!(z.krull_dim_quotient(), 4);
        assert_eq!(z.minimal_vertex_covers(), vec![0]);
    }

    #[test]
    fn transversal_engine_on_a_small_family() {
        let family = [mask(&[0, 1]), mask(&[1, 2]), mask(&[2, 3])];
        let ts = minimal_transversals(&family);
        assert_eq!(ts, vec![mask(&[0, 2]), mask(&[1, 2]), mask(&[1, 3])]);
        assert_eq!(minimal_transversals(&[]), vec![0]);
    }

    #[test]
    fn json_round_trip() {
        let i = ld_ideal(&LabeledPoset::grid(3).unwrap()).unwrap();
        let text = serde_json::to_string(&i.to_json()).unwrap();
        let parsed: IdealJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SquarefreeIdeal::from_json(&parsed).unwrap(), i);
        let bad = IdealJson {
            variables: vec!["a".into()],
            generators: vec![vec![2]],
        };
        assert!(SquarefreeIdeal::from_json(&bad).is_err());
    }
}
