//! Verification suites: every closed-form statement the crate models is
//! recomputed by brute force over a fixed parameter grid and compared
//! exactly, integer for integer. Each suite produces a deterministic
//! report; wall time is the only field that varies between runs.

use crate::complex::{facet_complex, stanley_reisner};
use crate::families::{
    count_family, count_family_closed_form, diamond_edge_subset, expected_diamond_profile,
    expected_grid_profile, grid_composition_subset, grid_connector_edge, grid_family_index,
    RouteChoice,
};
use crate::homology::{homology_of_link, reduced_homology, HomologyProfile};
use crate::ideal::{ld_ideal, path_ideal};
use crate::invariants::{
    binom, closed_form_chains, closed_form_diamond, closed_form_diamond_path,
    closed_form_grid_path, is_sequentially_cm, is_simplicial_forest, is_simplicial_tree,
    reg_lower_bound, BettiTable, HochsterEngine,
};
use crate::linalg::FieldSpec;
use crate::poset::{bits, tree_posets, LabeledPoset, Poset};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;
use thiserror::Error;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    DiamondBetti,
    DiamondInvariants,
    ChainsBetti,
    ChainsInvariants,
    GridPathBetti,
    LineHeight,
    LineCm,
    LinePd,
    CycleHeight,
    CycleForest,
    CycleCm,
    ForestSeqcm,
    RegBound,
    PrimaryDecomp,
    HomologyOracles,
    FamilyCounts,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::DiamondBetti,
        TheoremId::DiamondInvariants,
        TheoremId::ChainsBetti,
        TheoremId::ChainsInvariants,
        TheoremId::GridPathBetti,
        TheoremId::LineHeight,
        TheoremId::LineCm,
        TheoremId::LinePd,
        TheoremId::CycleHeight,
        TheoremId::CycleForest,
        TheoremId::CycleCm,
        TheoremId::ForestSeqcm,
        TheoremId::RegBound,
        TheoremId::PrimaryDecomp,
        TheoremId::HomologyOracles,
        TheoremId::FamilyCounts,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::DiamondBetti => "diamond-betti",
            TheoremId::DiamondInvariants => "diamond-invariants",
            TheoremId::ChainsBetti => "chains-betti",
            TheoremId::ChainsInvariants => "chains-invariants",
            TheoremId::GridPathBetti => "grid-path-betti",
            TheoremId::LineHeight => "line-height",
            TheoremId::LineCm => "line-cm",
            TheoremId::LinePd => "line-pd",
            TheoremId::CycleHeight => "cycle-height",
            TheoremId::CycleForest => "cycle-forest",
            TheoremId::CycleCm => "cycle-cm",
            TheoremId::ForestSeqcm => "forest-seqcm",
            TheoremId::RegBound => "reg-bound",
            TheoremId::PrimaryDecomp => "primary-decomp",
            TheoremId::HomologyOracles => "homology-oracles",
            TheoremId::FamilyCounts => "family-counts",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Error)]
#[error("unknown theorem id: {0}")]
pub struct UnknownTheorem(String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyCase {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub passed: bool,
    pub wall_ms: u128,
    pub cases: Vec<VerifyCase>,
}

/// Versioned wrapper for serialized reports.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportSet {
    pub schema_version: u32,
    pub field: String,
    pub reports: Vec<VerifyReport>,
}

impl ReportSet {
    pub fn new(field: FieldSpec, reports: Vec<VerifyReport>) -> Self {
        ReportSet {
            schema_version: REPORT_SCHEMA_VERSION,
            field: field.to_string(),
            reports,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }
}

/// Runs one suite and wraps its cases in a report.
pub fn run(theorem: TheoremId, field: FieldSpec) -> VerifyReport {
    let start = Instant::now();
    let cases = match theorem {
        TheoremId::DiamondBetti => diamond_betti(field),
        TheoremId::DiamondInvariants => diamond_invariants(field),
        TheoremId::ChainsBetti => chains_betti(field),
        TheoremId::ChainsInvariants => chains_invariants(field),
        TheoremId::GridPathBetti => grid_path_betti(field),
        TheoremId::LineHeight => line_height(),
        TheoremId::LineCm => line_cm(field),
        TheoremId::LinePd => line_pd(field),
        TheoremId::CycleHeight => cycle_height(),
        TheoremId::CycleForest => cycle_forest(),
        TheoremId::CycleCm => cycle_cm(field),
        TheoremId::ForestSeqcm => forest_seqcm(),
        TheoremId::RegBound => reg_bound(field),
        TheoremId::PrimaryDecomp => primary_decomp(),
        TheoremId::HomologyOracles => homology_oracles(field),
        TheoremId::FamilyCounts => family_counts(),
    };
    VerifyReport {
        theorem: theorem.id().to_string(),
        passed: cases.iter().all(|c| c.pass),
        wall_ms: start.elapsed().as_millis(),
        cases,
    }
}

/// Runs every suite; reports come back in declaration order.
pub fn run_all(field: FieldSpec) -> Vec<VerifyReport> {
    TheoremId::ALL.par_iter().map(|&t| run(t, field)).collect()
}

fn case<T: PartialEq + fmt::Debug>(
    cases: &mut Vec<VerifyCase>,
    label: impl Into<String>,
    expected: T,
    computed: T,
) {
    cases.push(VerifyCase {
        label: label.into(),
        pass: expected == computed,
        expected: format!("{expected:?}"),
        computed: format!("{computed:?}"),
    });
}

fn table_case(
    cases: &mut Vec<VerifyCase>,
    label: impl Into<String>,
    expected: &BettiTable,
    computed: &BettiTable,
) {
    cases.push(VerifyCase {
        label: label.into(),
        pass: expected.entries_eq(computed),
        expected: format!("{:?}", expected.entries_vec()),
        computed: format!("{:?}", computed.entries_vec()),
    });
}

/// A bundled check over many inputs: pass when no input deviates, and
/// list the deviating inputs otherwise.
fn violations_case(
    cases: &mut Vec<VerifyCase>,
    label: impl Into<String>,
    checked: usize,
    violations: Vec<String>,
) {
    cases.push(VerifyCase {
        label: label.into(),
        pass: violations.is_empty(),
        expected: format!("0 of {checked} deviate"),
        computed: if violations.is_empty() {
            format!("0 of {checked} deviate")
        } else {
            format!("{} deviate: {}", violations.len(), violations.join("; "))
        },
    });
}

fn diamond_betti(field: FieldSpec) -> Vec<VerifyCase> {
    let mut engine = HochsterEngine::new(field);
    let mut cases = Vec::new();
    for n in 1..=3usize {
        let lp = LabeledPoset::diamond(n).unwrap();
        let chain_table = engine.betti_table(&ld_ideal(&lp).unwrap());
        table_case(
            &mut cases,
            format!("diamond chain ideal n={n}"),
            &closed_form_diamond(n),
            &chain_table,
        );
        let path_table = engine.betti_table(&path_ideal(lp.poset(), 2 * n + 1).unwrap());
        table_case(
            &mut cases,
            format!("diamond path ideal n={n}"),
            &closed_form_diamond_path(n),
            &path_table,
        );
        case(
            &mut cases,
            format!("diamond resolutions pure n={n}"),
            (true, true),
            (chain_table.is_pure(), path_table.is_pure()),
        );
    }
    cases
}

fn diamond_invariants(field: FieldSpec) -> Vec<VerifyCase> {
    let mut engine = HochsterEngine::new(field);
    let mut cases = Vec::new();
    for n in 1..=3usize {
        let lp = LabeledPoset::diamond(n).unwrap();

        let chain = ld_ideal(&lp).unwrap();
        let table = engine.betti_table(&chain);
        case(
            &mut cases,
            format!("diamond chain ideal n={n} (pd, reg, depth, height, dim, cm)"),
            (n + 1, 3 * n - 1, 3 * n - 1, 2, 4 * n - 2, n == 1),
            (
                table.pd() as usize,
                table.reg() as usize,
                table.depth(),
                chain.height(),
                chain.krull_dim_quotient(),
                engine.is_cohen_macaulay(&chain),
            ),
        );

        let path = path_ideal(lp.poset(), 2 * n + 1).unwrap();
        let table = engine.betti_table(&path);
        case(
            &mut cases,
            format!("diamond path ideal n={n} (pd, reg, depth, height, dim, cm)"),
            (n + 1, 2 * n, 2 * n, 1, 3 * n, false),
            (
                table.pd() as usize,
                table.reg() as usize,
                table.depth(),
                path.height(),
                path.krull_dim_quotient(),
                engine.is_cohen_macaulay(&path),
            ),
        );
    }
    cases
}

fn chains_betti(field: FieldSpec) -> Vec<VerifyCase> {
    let mut engine = HochsterEngine::new(field);
    let mut cases = Vec::new();
    for n in 2..=4usize {
        let table = engine.betti_table(&ld_ideal(&LabeledPoset::grid(n).unwrap()).unwrap());
        table_case(
            &mut cases,
            format!("grid chain ideal n={n}"),
            &closed_form_chains(n),
            &table,
        );
        let totals: Vec<u64> = (0..=n as u32).map(|i| table.total(i)).collect();
        let expected: Vec<u64> = (0..=n as i64).map(|i| binom(n as i64, i)).collect();
        case(
            &mut cases,
            format!("grid chain totals n={n}"),
            expected,
            totals,
        );
    }
    cases
}

fn chains_invariants(field: FieldSpec) -> Vec<VerifyCase> {
    let mut engine = HochsterEngine::new(field);
    let mut cases = Vec::new();
    for n in 2..=4usize {
        let ideal = ld_ideal(&LabeledPoset::grid(n).unwrap()).unwrap();
        let table = engine.betti_table(&ideal);
        case(
            &mut cases,
            format!("grid chain ideal n={n} (pd, reg, depth, height, dim)"),
            (n, 2 * n - 2, 2 * n - 2, 2, 3 * n - 4),
            (
                table.pd() as usize,
                table.reg() as usize,
                table.depth(),
                ideal.height(),
                ideal.krull_dim_quotient(),
            ),
        );
    }
    cases
}

fn grid_path_betti(field: FieldSpec) -> Vec<VerifyCase> {
    let mut engine = HochsterEngine::new(field);
    let mut cases = Vec::new();
    for n in 2..=5usize {
        let ideal = path_ideal(LabeledPoset::grid(n).unwrap().poset(), n + 1).unwrap();
        let table = engine.betti_table(&ideal);
        table_case(
            &mut cases,
            format!("grid path ideal n={n}"),
            &closed_form_grid_path(n),
            &table,
        );
        case(
            &mut cases,
            format!("grid path ideal n={n} (pd, reg, depth, height, dim)"),
            (2, n, 2 * n - 2, 1, 2 * n - 1),
            (
                table.pd() as usize,
                table.reg() as usize,
                table.depth(),
                ideal.height(),
                ideal.krull_dim_quotient(),
            ),
        );
    }
    cases
}

fn line_height() -> Vec<VerifyCase> {
    let mut cases = Vec::new();
    for n in 2..=10usize {
        let poset = Poset::chain(n).unwrap();
        let expected: Vec<(usize, usize)> = (2..=n).map(|t| (n / t, n - n / t)).collect();
        let computed: Vec<(usize, usize)> = (2..=n)
            .map(|t| {
                let ideal = path_ideal(&poset, t).unwrap();
                (ideal.height(), ideal.krull_dim_quotient())
            })
            .collect();
        case(
            &mut cases,
            format!("line n={n}, t=2..={n} (height, dim)"),
            expected,
            computed,
        );
    }
    cases
}

fn line_cm(field: FieldSpec) -> Vec<VerifyCase> {
    let mut engine = HochsterEngine::new(field);
    let mut cases = Vec::new();
    for n in 2..=8usize {
        let poset = Poset::chain(n).unwrap();
        let expected: Vec<bool> = (2..=n).map(|t| n == t || n == 2 * t).collect();
        let computed: Vec<bool> = (2..=n)
            .map(|t| engine.is_cohen_macaulay(&path_ideal(&poset, t).unwrap()))
            .collect();
        case(
            &mut cases,
            format!("line n={n}, t=2..={n}"),
            expected,
            computed,
        );
    }
    cases
}

/// Projective dimension of a line's path-ideal quotient: with
/// `n = k(t+1) + d`, it is `2k` for `d < t` and `2k + 1` for `d = t`.
fn line_pd_formula(n: usize, t: usize) -> u32 {
    let d = n % (t + 1);
    if d == t {
        ((2 * n - (t - 1)) / (t + 1)) as u32
    } else {
        (2 * (n - d) / (t + 1)) as u32
    }
}

fn line_pd(field: FieldSpec) -> Vec<VerifyCase> {
    let mut engine = HochsterEngine::new(field);
    let mut cases = Vec::new();
    for n in 2..=9usize {
        let poset = Poset::chain(n).unwrap();
        let expected: Vec<u32> = (2..=n).map(|t| line_pd_formula(n, t)).collect();
        let computed: Vec<u32> = (2..=n)
            .map(|t| engine.betti_table(&path_ideal(&poset, t).unwrap()).pd())
            .collect();
        case(
            &mut cases,
            format!("line n={n}, t=2..={n}"),
            expected,
            computed,
        );
    }
    cases
}

fn cycle_pairs(max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 2..=max {
        for r in 2..=m {
            if (m, r) != (2, 2) {
                out.push((m, r));
            }
        }
    }
    out
}

fn cycle_height() -> Vec<VerifyCase> {
    let mut cases = Vec::new();
    for (m, r) in cycle_pairs(7) {
        let poset = Poset::cycle(m, r).unwrap();
        let expected: Vec<usize> = (2..=8)
            .map(|t| {
                if m % t == 0 && r % t == 0 {
                    (m + r) / t - 1
                } else {
                    m / t + r / t
                }
            })
            .collect();
        let computed: Vec<usize> = (2..=8)
            .map(|t| path_ideal(&poset, t).unwrap().height())
            .collect();
        case(
            &mut cases,
            format!("cycle({m},{r}), t=2..=8"),
            expected,
            computed,
        );
    }
    cases
}

fn cycle_forest() -> Vec<VerifyCase> {
    let mut cases = Vec::new();
    for (m, r) in cycle_pairs(5) {
        let poset = Poset::cycle(m, r).unwrap();
        let graded = poset.is_graded();
        let ts: Vec<usize> = (2..=m.min(6)).collect();
        let expected: Vec<bool> = ts
            .iter()
            .map(|&t| (!graded && t > r) || (graded && t == m))
            .collect();
        let computed: Vec<bool> = ts
            .iter()
            .map(|&t| {
                let complex = facet_complex(&path_ideal(&poset, t).unwrap()).unwrap();
                is_simplicial_tree(&complex)
            })
            .collect();
        case(
            &mut cases,
            format!("cycle({m},{r}), t={:?}", ts),
            expected,
            computed,
        );
    }
    cases
}

fn cycle_cm(field: FieldSpec) -> Vec<VerifyCase> {
    let mut engine = HochsterEngine::new(field);
    let mut cases = Vec::new();
    for (m, r) in cycle_pairs(5) {
        let poset = Poset::cycle(m, r).unwrap();
        // The classification covers exactly the simplicial-tree cells:
        // t above the short side for unequal sides, t equal to the
        // common length otherwise.
        let ts: Vec<usize> = if m != r {
            ((r + 1)..=m.min(6)).collect()
        } else {
            vec![m]
        };
        let expected: Vec<(bool, bool)> = ts
            .iter()
            .map(|&t| {
                let cm = m != r && (t == m || 2 * t == m);
                (true, cm)
            })
            .collect();
        let computed: Vec<(bool, bool)> = ts
            .iter()
            .map(|&t| {
                let ideal = path_ideal(&poset, t).unwrap();
                (
                    is_sequentially_cm(&ideal, field),
                    engine.is_cohen_macaulay(&ideal),
                )
            })
            .collect();
        case(
            &mut cases,
            format!("cycle({m},{r}), t={:?} (seq cm, cm)", ts),
            expected,
            computed,
        );
    }
    cases
}

fn forest_seqcm() -> Vec<VerifyCase> {
    let mut cases = Vec::new();
    for n in 2..=7usize {
        let posets = tree_posets(n);
        for t in 2..=5usize {
            let mut checked = 0;
            let mut violations = Vec::new();
            for (k, poset) in posets.iter().enumerate() {
                let ideal = path_ideal(poset, t).unwrap();
                if ideal.is_zero() {
                    continue;
                }
                checked += 1;
                if !is_simplicial_forest(&facet_complex(&ideal).unwrap()) {
                    violations.push(format!("tree {k}: facet complex not a forest"));
                }
                for field in [FieldSpec::Prime(2), FieldSpec::Prime(32003)] {
                    if !is_sequentially_cm(&ideal, field) {
                        violations.push(format!("tree {k}: not sequentially CM over {field}"));
                    }
                }
            }
            violations_case(
                &mut cases,
                format!("trees on {n} elements, t={t} ({} trees)", posets.len()),
                checked,
                violations,
            );
        }
    }
    cases
}

fn reg_bound(field: FieldSpec) -> Vec<VerifyCase> {
    let mut engine = HochsterEngine::new(field);
    let mut cases = Vec::new();

    let mut corpus: Vec<(String, Poset, usize)> = Vec::new();
    for n in 2..=9usize {
        for t in 2..=n {
            corpus.push((format!("line n={n} t={t}"), Poset::chain(n).unwrap(), t));
        }
    }
    for (m, r) in cycle_pairs(4) {
        for t in 2..=m {
            corpus.push((
                format!("cycle({m},{r}) t={t}"),
                Poset::cycle(m, r).unwrap(),
                t,
            ));
        }
    }
    for n in 1..=2usize {
        let poset = LabeledPoset::diamond(n).unwrap().poset().clone();
        for t in 2..=(2 * n + 1) {
            corpus.push((format!("diamond n={n} t={t}"), poset.clone(), t));
        }
    }
    for n in 2..=4usize {
        let poset = LabeledPoset::grid(n).unwrap().poset().clone();
        corpus.push((format!("grid n={n} t={}", n + 1), poset, n + 1));
    }
    for (k, poset) in tree_posets(5).into_iter().enumerate() {
        for t in 2..=4usize {
            corpus.push((format!("tree {k} on 5 elements t={t}"), poset.clone(), t));
        }
    }

    let mut checked = 0;
    let mut violations = Vec::new();
    for (label, poset, t) in &corpus {
        let ideal = path_ideal(poset, *t).unwrap();
        let (bound, certificate) = reg_lower_bound(poset, *t).unwrap();
        let reg = engine.betti_table(&ideal).reg() as usize;
        checked += 1;
        if reg < bound {
            violations.push(format!(
                "{label}: reg {reg} below bound {bound} from {certificate}"
            ));
        }
    }
    violations_case(
        &mut cases,
        "packing bound over the corpus",
        checked,
        violations,
    );

    for t in 2..=4usize {
        for s in 0..=2usize {
            let n = s * (t + 1) + t;
            let poset = Poset::chain(n).unwrap();
            let (bound, _) = reg_lower_bound(&poset, t).unwrap();
            let reg = engine.betti_table(&path_ideal(&poset, t).unwrap()).reg() as usize;
            let target = (s + 1) * (t - 1);
            case(
                &mut cases,
                format!("equality at n={n} t={t} (bound, reg)"),
                (target, target),
                (bound, reg),
            );
        }
    }
    cases
}

fn primary_decomp() -> Vec<VerifyCase> {
    let mut cases = Vec::new();
    let mut corpus: Vec<(String, LabeledPoset)> = Vec::new();
    for n in 1..=3usize {
        corpus.push((format!("diamond n={n}"), LabeledPoset::diamond(n).unwrap()));
    }
    for n in 2..=5usize {
        corpus.push((format!("grid n={n}"), LabeledPoset::grid(n).unwrap()));
    }
    for (k, poset) in tree_posets(5).into_iter().enumerate().take(6) {
        corpus.push((
            format!("tree {k} on 5 elements"),
            LabeledPoset::with_lex_labels(poset),
        ));
    }

    for (label, lp) in corpus {
        let ideal = ld_ideal(&lp).unwrap();
        let components = ideal.primary_decomposition().unwrap();
        let n_vars = ideal.n_vars();
        let mut violations = Vec::new();

        // Intersection oracle: a monomial lies in the intersection of
        // the variable primes exactly when it lies in the ideal.
        for m in 0u64..(1 << n_vars) {
            let in_components = components.iter().all(|&c| c & m != 0);
            if in_components != ideal.contains_monomial(m) {
                violations.push(format!("monomial {m:#b} separates the intersection"));
            }
        }

        // Independent minimal cut-set enumeration on the poset side.
        let chain_sets: Vec<u64> = lp
            .poset()
            .maximal_chains()
            .iter()
            .map(|c| lp.chain_edge_set(c))
            .collect();
        let mut cuts: Vec<u64> = (1u64..(1 << n_vars))
            .filter(|&cut| chain_sets.iter().all(|&c| c & cut != 0))
            .collect();
        cuts = cuts
            .iter()
            .copied()
            .filter(|&c| !cuts.iter().any(|&o| o != c && o & !c == 0))
            .collect();
        cuts.sort_by(|a, b| crate::ideal::set_cmp(*a, *b));
        if cuts != components {
            violations.push(format!(
                "components {components:?} differ from minimal cut-sets {cuts:?}"
            ));
        }

        violations_case(
            &mut cases,
            format!("{label} ({} components)", components.len()),
            (1usize << n_vars) + 1,
            violations,
        );
    }
    cases
}

fn homology_oracles(field: FieldSpec) -> Vec<VerifyCase> {
    let mut cases = Vec::new();

    for n in 1..=3usize {
        let complex = stanley_reisner(&ld_ideal(&LabeledPoset::diamond(n).unwrap()).unwrap());
        case(
            &mut cases,
            format!("diamond chain complex n={n}"),
            HomologyProfile::singleton(3 * n as i64 - 2),
            reduced_homology(&complex, field),
        );
    }

    // Every edge subset of the 2-diamond poset, classified.
    {
        let n = 2;
        let complex = stanley_reisner(&ld_ideal(&LabeledPoset::diamond(n).unwrap()).unwrap());
        let mut violations = Vec::new();
        for mask in 0u64..(1 << (4 * n)) {
            let expected = expected_diamond_profile(n, mask);
            let computed = reduced_homology(&complex.restriction(mask), field);
            if expected != computed {
                violations.push(format!("mask {mask:#b}: {computed} instead of {expected}"));
            }
        }
        violations_case(
            &mut cases,
            "diamond n=2, all edge subsets",
            1 << (4 * n),
            violations,
        );
    }

    // A deterministic sample for three diamonds: every union of chains,
    // every such union off by one edge, and a stride through the rest.
    {
        let n = 3;
        let complex = stanley_reisner(&ld_ideal(&LabeledPoset::diamond(n).unwrap()).unwrap());
        let mut sample: HashSet<u64> = HashSet::new();
        let choices = [RouteChoice::First, RouteChoice::Second, RouteChoice::Both];
        for a in choices {
            for b in choices {
                for c in choices {
                    let member = diamond_edge_subset(n, &[a, b, c]);
                    sample.insert(member);
                    for e in 0..(4 * n) {
                        sample.insert(member ^ (1 << e));
                    }
                }
            }
        }
        for k in 0..40u64 {
            sample.insert((k * 97) % (1 << (4 * n)));
        }
        let mut sample: Vec<u64> = sample.into_iter().collect();
        sample.sort_unstable();
        let checked = sample.len();
        let mut violations = Vec::new();
        for mask in sample {
            let expected = expected_diamond_profile(n, mask);
            let computed = reduced_homology(&complex.restriction(mask), field);
            if expected != computed {
                violations.push(format!("mask {mask:#b}: {computed} instead of {expected}"));
            }
        }
        violations_case(
            &mut cases,
            "diamond n=3, sampled edge subsets",
            checked,
            violations,
        );
    }

    // Grid subsets keeping both strands: concentrated homology, and the
    // link of the first connector one degree down.
    for n in 2..=5usize {
        let complex = stanley_reisner(&ld_ideal(&LabeledPoset::grid(n).unwrap()).unwrap());
        let mut violations = Vec::new();
        let mut checked = 0;
        let inner: Vec<usize> = (1..n - 1).collect();
        for pick in 0u64..(1 << inner.len()) {
            let mut cols = vec![0, n - 1];
            cols.extend(bits(pick).map(|k| inner[k]));
            let sub = grid_composition_subset(n, &cols);
            let restricted = complex.restriction(sub);
            checked += 2;
            let profile = reduced_homology(&restricted, field);
            if profile != HomologyProfile::singleton(2 * n as i64 - 3) {
                violations.push(format!("cols {cols:?}: restriction gave {profile}"));
            }
            let link = homology_of_link(&restricted, 1 << grid_connector_edge(n, 0), field);
            if link != HomologyProfile::singleton(2 * n as i64 - 4) {
                violations.push(format!("cols {cols:?}: connector link gave {link}"));
            }
        }
        violations_case(
            &mut cases,
            format!("grid n={n}, both-strand subsets and connector links"),
            checked,
            violations,
        );
    }

    // Family members carry exactly one homology class; everything else
    // vanishes (exhaustively for small grids, sampled above that).
    for n in 2..=5usize {
        let complex = stanley_reisner(&ld_ideal(&LabeledPoset::grid(n).unwrap()).unwrap());
        let index = grid_family_index(n);
        let edges = 3 * n - 2;
        let mut sample: HashSet<u64> = HashSet::new();
        if n <= 3 {
            sample.extend(0..(1u64 << edges));
        } else {
            for &member in index.keys() {
                sample.insert(member);
                for e in 0..edges {
                    sample.insert(member ^ (1 << e));
                }
            }
            for k in 0..60u64 {
                sample.insert((k * 131) % (1 << edges));
            }
        }
        let mut sample: Vec<u64> = sample.into_iter().collect();
        sample.sort_unstable();
        let checked = sample.len();
        let mut violations = Vec::new();
        for mask in sample {
            let expected = expected_grid_profile(mask, &index);
            let computed = reduced_homology(&complex.restriction(mask), field);
            if expected != computed {
                violations.push(format!("mask {mask:#b}: {computed} instead of {expected}"));
            }
        }
        let scope = if n <= 3 {
            "all edge subsets"
        } else {
            "sampled edge subsets"
        };
        violations_case(
            &mut cases,
            format!("grid n={n}, {scope}"),
            checked,
            violations,
        );
    }

    cases
}

fn family_counts() -> Vec<VerifyCase> {
    let mut cases = Vec::new();
    for n in 2..=6usize {
        let mut violations = Vec::new();
        let mut checked = 0;
        for s in 0..=(n + 1) {
            for t in 0..=(2 * n + s) {
                checked += 1;
                let enumerated = count_family(s, t, n);
                let formula = count_family_closed_form(s, t, n);
                if enumerated != formula {
                    violations.push(format!("s={s} t={t}: {enumerated} vs {formula}"));
                }
            }
        }
        for s in 1..=n {
            checked += 1;
            let total: u64 = (n..=(2 * n + s - 2)).map(|t| count_family(s, t, n)).sum();
            if total != binom(n as i64, s as i64) {
                violations.push(format!("s={s}: total {total}"));
            }
        }
        checked += 1;
        if grid_family_index(n).len() as u64 != (1u64 << n) - 1 {
            violations.push("family index misses subsets".to_string());
        }
        violations_case(
            &mut cases,
            format!("grid n={n} family counts"),
            checked,
            violations,
        );
    }
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.id().parse::<TheoremId>().unwrap(), t);
        }
        assert!("nonsense".parse::<TheoremId>().is_err());
    }

    #[test]
    fn fast_suites_pass() {
        for theorem in [
            TheoremId::FamilyCounts,
            TheoremId::LineCm,
            TheoremId::ChainsBetti,
            TheoremId::CycleForest,
        ] {
            let report = run(theorem, FieldSpec::default());
            assert!(
                report.passed,
                "{}: {:?}",
                theorem,
                report.cases.iter().filter(|c| !c.pass).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn report_set_serializes_with_version() {
        let set = ReportSet::new(
            FieldSpec::default(),
            vec![run(TheoremId::FamilyCounts, FieldSpec::default())],
        );
        assert!(set.all_passed());
        let json = serde_json::to_string(&set).unwrap();
        assert!(json.contains("\"schema_version\":1"));
        assert!(json.contains("\"theorem\":\"family-counts\""));
    }
}
