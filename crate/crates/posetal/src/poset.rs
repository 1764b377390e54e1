//! Finite posets presented by their cover digraphs.
//!
//! A poset is stored as an acyclic digraph on `n` elements whose arcs are
//! the covering pairs, oriented from smaller to larger. Saturated chains,
//! gradedness, duality and the structural predicates used elsewhere in the
//! crate are all defined directly on this digraph.
//!
//! The cycle family deserves a note: its diagram for unequal branch
//! lengths contains an arc parallel to a longer saturated chain (for
//! example the 3-element cycle with branch lengths 3 and 2 has arcs
//! 1->2, 2->3 and 1->3). Such an arc is not a cover of the generated
//! order, but it is part of the family's diagram and its path data. The
//! strict constructor [`Poset::new`] therefore rejects transitively
//! implied arcs as modeling mistakes, while [`Poset::new_digraph`]
//! accepts any simple acyclic digraph and is what the cycle builder and
//! the JSON loader use.

use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;

pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("a poset needs at least one element")]
    Empty,
    #[error("at most {MAX_ELEMENTS} elements are supported, got {0}")]
    TooLarge(usize),
    #[error("cover ({0}, {1}) lies outside the element range")]
    CoverOutOfRange(usize, usize),
    #[error("cover ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("cover ({0}, {1}) is listed twice")]
    DuplicateCover(usize, usize),
    #[error("the cover relation contains a directed cycle")]
    CyclicCovers,
    #[error("cover ({0}, {1}) is implied transitively by the other covers")]
    TransitiveCover(usize, usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("label {0:?} is used twice")]
    DuplicateLabel(String),
    #[error("saturated paths need at least one vertex")]
    EmptyPath,
    #[error("cycle posets need branch lengths m, r >= 2 with (m, r) != (2, 2)")]
    BadCycleParameters,
    #[error("grid posets need at least two columns")]
    BadGridParameters,
    #[error("diamond posets need at least one diamond")]
    BadDiamondParameters,
    #[error("the edge poset is defined for graded posets only")]
    EdgePosetNeedsGraded,
    #[error("unknown element name {0:?}")]
    UnknownElement(String),
}

/// A saturated chain: consecutive vertices form covering pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainPath {
    vertices: Vec<usize>,
}

impl ChainPath {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Vertex set as a bitmask.
    pub fn vertex_set(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | (1 << v))
    }
}

impl fmt::Display for ChainPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, ")")
    }
}

/// Finite poset on elements `0..n`, presented by covering arcs.
///
/// Equality compares the diagram (element count and arc set); labels are
/// display data only.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    above: Vec<u64>,
    below: Vec<u64>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels.len() == other.labels.len() && self.covers == other.covers
    }
}

impl Eq for Poset {}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl Poset {
    /// Strict constructor: rejects arcs that are implied transitively by
    /// the rest of the diagram, a symptom of listing relations instead of
    /// covers.
    pub fn new(n: usize, covers: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        Self::build(n, covers, true)
    }

    /// Lenient constructor: any simple acyclic digraph. See the module
    /// notes on the cycle family.
    pub fn new_digraph(n: usize, covers: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        Self::build(n, covers, false)
    }

    fn build(n: usize, mut covers: Vec<(usize, usize)>, strict: bool) -> Result<Self, PosetError> {
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(n));
        }
        covers.sort_unstable();
        for (i, &(a, b)) in covers.iter().enumerate() {
            if a >= n || b >= n {
                return Err(PosetError::CoverOutOfRange(a, b));
            }
            if a == b {
                return Err(PosetError::SelfLoop(a));
            }
            if i > 0 && covers[i - 1] == (a, b) {
                return Err(PosetError::DuplicateCover(a, b));
            }
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in &covers {
            out_adj[a].push(b);
            indeg[b] += 1;
        }
        // Kahn topological order; a shortfall means a directed cycle.
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop() {
            topo.push(v);
            for &w in &out_adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if topo.len() != n {
            return Err(PosetError::CyclicCovers);
        }
        let mut above = vec![0u64; n];
        for &v in topo.iter().rev() {
            for &w in &out_adj[v] {
                above[v] |= (1 << w) | above[w];
            }
        }
        if strict {
            for &(a, b) in &covers {
                let implied = out_adj[a]
                    .iter()
                    .any(|&c| c != b && above[c] & (1 << b) != 0);
                if implied {
                    return Err(PosetError::TransitiveCover(a, b));
                }
            }
        }
        let mut below = vec![0u64; n];
        for (v, bel) in below.iter_mut().enumerate() {
            for (w, abv) in above.iter().enumerate() {
                if abv & (1 << v) != 0 {
                    *bel |= 1 << w;
                }
            }
        }
        Ok(Poset {
            labels: default_labels(n),
            covers,
            above,
            below,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, PosetError> {
        if labels.len() != self.n_elements() {
            return Err(PosetError::LabelCount {
                expected: self.n_elements(),
                got: labels.len(),
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n_elements(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Strict comparison in the generated order.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.above[a] & (1 << b) != 0
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    /// Bitmask of elements strictly above `v`.
    pub fn above_mask(&self, v: usize) -> u64 {
        self.above[v]
    }

    /// Bitmask of elements strictly below `v`.
    pub fn below_mask(&self, v: usize) -> u64 {
        self.below[v]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n_elements())
            .filter(|&v| self.below[v] == 0)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n_elements())
            .filter(|&v| self.above[v] == 0)
            .collect()
    }

    fn out_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_elements()];
        for &(a, b) in &self.covers {
            adj[a].push(b);
        }
        adj
    }

    /// All saturated chains on exactly `t` vertices, in lexicographic
    /// order of their vertex sequences.
    pub fn saturated_paths(&self, t: usize) -> Result<Vec<ChainPath>, PosetError> {
        if t == 0 {
            return Err(PosetError::EmptyPath);
        }
        let adj = self.out_neighbors();
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(t);
        for start in 0..self.n_elements() {
            stack.push(start);
            extend_paths(&adj, &mut stack, t, &mut out);
            stack.pop();
        }
        Ok(out)
    }

    /// All maximal chains (saturated chains from a minimal to a maximal
    /// element), in lexicographic order.
    pub fn maximal_chains(&self) -> Vec<ChainPath> {
        let adj = self.out_neighbors();
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in self.minimal_elements() {
            stack.push(start);
            extend_maximal(&adj, &mut stack, &mut out);
            stack.pop();
        }
        out
    }

    /// A poset is graded when all maximal chains have the same number of
    /// vertices.
    pub fn is_graded(&self) -> bool {
        let chains = self.maximal_chains();
        chains.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// A pencil sits inside a poset wherever some element has two
    /// incomparable elements strictly below it and two incomparable
    /// elements strictly above it.
    pub fn contains_pencil(&self) -> bool {
        (0..self.n_elements()).any(|z| {
            self.has_incomparable_pair(self.below[z]) && self.has_incomparable_pair(self.above[z])
        })
    }

    fn has_incomparable_pair(&self, mask: u64) -> bool {
        let verts: Vec<usize> = bits(mask).collect();
        verts.iter().enumerate().any(|(i, &u)| {
            verts[i + 1..]
                .iter()
                .any(|&w| !self.lt(u, w) && !self.lt(w, u))
        })
    }

    fn undirected_components(&self) -> Vec<u64> {
        let n = self.n_elements();
        let mut adj = vec![0u64; n];
        for &(a, b) in &self.covers {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for v in 0..n {
            if seen & (1 << v) != 0 {
                continue;
            }
            let mut comp = 1u64 << v;
            loop {
                let grown = bits(comp).fold(comp, |m, w| m | adj[w]);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    /// The diagram is a tree (connected, no undirected cycle) and the
    /// poset contains no pencil.
    pub fn is_tree_poset(&self) -> bool {
        self.undirected_components().len() == 1
            && self.covers.len() == self.n_elements() - 1
            && !self.contains_pencil()
    }

    /// Every connected component of the diagram is a tree and the poset
    /// contains no pencil.
    pub fn is_forest_poset(&self) -> bool {
        let comps = self.undirected_components().len();
        self.covers.len() + comps == self.n_elements() && !self.contains_pencil()
    }

    /// Order-reversing involution: same elements, reversed arcs.
    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::new_digraph(self.n_elements(), covers)
            .expect("reversing an acyclic digraph keeps it acyclic")
            .with_labels(self.labels.clone())
            .expect("label set unchanged")
    }

    /// Ordinal sum: everything in `self` below everything in `other`,
    /// realized by arcs from the maximal elements of `self` to the
    /// minimal elements of `other`. Elements are renumbered with the
    /// second summand shifted, and labels reset to defaults.
    pub fn ordinal_sum(&self, other: &Poset) -> Result<Poset, PosetError> {
        let n1 = self.n_elements();
        let mut covers = self.covers.clone();
        covers.extend(other.covers.iter().map(|&(a, b)| (a + n1, b + n1)));
        for m in self.maximal_elements() {
            for q in other.minimal_elements() {
                covers.push((m, q + n1));
            }
        }
        Poset::new_digraph(n1 + other.n_elements(), covers)
    }

    /// Disjoint union, with the second summand shifted.
    pub fn disjoint_union(&self, other: &Poset) -> Result<Poset, PosetError> {
        let n1 = self.n_elements();
        let mut covers = self.covers.clone();
        covers.extend(other.covers.iter().map(|&(a, b)| (a + n1, b + n1)));
        Poset::new_digraph(n1 + other.n_elements(), covers)
    }

    /// The chain 1 < 2 < ... < n.
    pub fn chain(n: usize) -> Result<Poset, PosetError> {
        Poset::new(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// n pairwise incomparable elements.
    pub fn antichain(n: usize) -> Result<Poset, PosetError> {
        Poset::new(n, Vec::new())
    }

    /// Cycle poset: two saturated chains on `m` and `r` vertices sharing
    /// exactly their common minimum and common maximum, `m + r - 2`
    /// elements in total. `(2, 2)` is rejected because it would need a
    /// doubled arc, which a simple digraph cannot hold.
    pub fn cycle(m: usize, r: usize) -> Result<Poset, PosetError> {
        if m < 2 || r < 2 || (m == 2 && r == 2) {
            return Err(PosetError::BadCycleParameters);
        }
        let n = m + r - 2;
        // First branch occupies 0..m (minimum 0, maximum m-1); the second
        // branch's interior vertices follow.
        let mut covers: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
        if r == 2 {
            covers.push((0, m - 1));
        } else {
            covers.push((0, m));
            for k in 0..r - 3 {
                covers.push((m + k, m + k + 1));
            }
            covers.push((m + r - 3, m - 1));
        }
        Poset::new_digraph(n, covers)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels.clone(),
            covers: self
                .covers
                .iter()
                .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                .collect(),
        }
    }

    pub fn from_json(json: &PosetJson) -> Result<Poset, PosetError> {
        let mut index = HashMap::new();
        for (i, name) in json.elements.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(name.clone()));
            }
        }
        let mut covers = Vec::with_capacity(json.covers.len());
        for (a, b) in &json.covers {
            let ia = *index
                .get(a)
                .ok_or_else(|| PosetError::UnknownElement(a.clone()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| PosetError::UnknownElement(b.clone()))?;
            covers.push((ia, ib));
        }
        Poset::new_digraph(json.elements.len(), covers)?.with_labels(json.elements.clone())
    }
}

/// Shared JSON schema: element names plus named cover pairs.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

fn extend_paths(adj: &[Vec<usize>], stack: &mut Vec<usize>, t: usize, out: &mut Vec<ChainPath>) {
    if stack.len() == t {
        out.push(ChainPath {
            vertices: stack.clone(),
        });
        return;
    }
    let v = *stack.last().unwrap();
    let mut next: Vec<usize> = adj[v].clone();
    next.sort_unstable();
    for w in next {
        stack.push(w);
        extend_paths(adj, stack, t, out);
        stack.pop();
    }
}

fn extend_maximal(adj: &[Vec<usize>], stack: &mut Vec<usize>, out: &mut Vec<ChainPath>) {
    let v = *stack.last().unwrap();
    if adj[v].is_empty() {
        out.push(ChainPath {
            vertices: stack.clone(),
        });
        return;
    }
    let mut next: Vec<usize> = adj[v].clone();
    next.sort_unstable();
    for w in next {
        stack.push(w);
        extend_maximal(adj, stack, out);
        stack.pop();
    }
}

/// Iterate the set bits of a mask.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// How edges of a graded poset are compared when forming its edge poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrder {
    /// (a,b) precedes (c,d) when b <= c. Consecutive edges of a chain are
    /// comparable, so saturated edge paths mirror saturated vertex paths.
    Weak,
    /// (a,b) precedes (c,d) when b < c strictly. Consecutive edges become
    /// incomparable; kept for comparison, see the edge-poset tests.
    Strict,
}

/// A poset together with an ordered labeling of its covering arcs; the
/// arc order fixes the variable order of chain ideals in arc variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    poset: Poset,
    edges: Vec<(usize, usize)>,
    edge_names: Vec<String>,
}

impl LabeledPoset {
    /// Label the arcs in lexicographic order as y1, y2, ...
    pub fn with_lex_labels(poset: Poset) -> LabeledPoset {
        let edges: Vec<(usize, usize)> = poset.covers().to_vec();
        let edge_names = (1..=edges.len()).map(|i| format!("y{i}")).collect();
        LabeledPoset {
            poset,
            edges,
            edge_names,
        }
    }

    /// Stacked diamonds: `n` diamonds joined top to bottom, `3n + 1`
    /// elements and `4n` arcs. Diamond `i` (1-based) has bottom
    /// a = x_{3i-2}, middle elements b = x_{3i-1} and c = x_{3i}, and top
    /// d = x_{3i+1}; its arcs are labeled y_{4i-3}: a->b, y_{4i-2}: b->d,
    /// y_{4i-1}: a->c, y_{4i}: c->d.
    pub fn diamond(n: usize) -> Result<LabeledPoset, PosetError> {
        if n == 0 {
            return Err(PosetError::BadDiamondParameters);
        }
        let mut covers = Vec::with_capacity(4 * n);
        let mut edges = Vec::with_capacity(4 * n);
        for i in 0..n {
            let (a, b, c, d) = (3 * i, 3 * i + 1, 3 * i + 2, 3 * i + 3);
            covers.extend([(a, b), (b, d), (a, c), (c, d)]);
            edges.extend([(a, b), (b, d), (a, c), (c, d)]);
        }
        let poset = Poset::new(3 * n + 1, covers)?;
        let edge_names = (1..=4 * n).map(|i| format!("y{i}")).collect();
        Ok(LabeledPoset {
            poset,
            edges,
            edge_names,
        })
    }

    /// Double chain L_{2,n}: two parallel chains on `n` vertices with a
    /// connecting arc at every column, `2n` elements and `3n - 2` arcs.
    /// Vertex (i, s) for strand i in {0, 1} and column s is element
    /// i*n + s. Arc labels come in three groups: strand arcs s^(0)
    /// (bottom) and s^(1) (top) for 0 <= s <= n-2, then connectors s^(c)
    /// for 0 <= s <= n-1; the numeric order is bottom strand, top
    /// strand, connectors, each by column.
    pub fn grid(n: usize) -> Result<LabeledPoset, PosetError> {
        if n < 2 {
            return Err(PosetError::BadGridParameters);
        }
        let mut covers = Vec::new();
        let mut edges = Vec::new();
        let mut edge_names = Vec::new();
        for s in 0..n - 1 {
            covers.push((s, s + 1));
            edges.push((s, s + 1));
            edge_names.push(format!("{s}^(0)"));
        }
        for s in 0..n - 1 {
            covers.push((n + s, n + s + 1));
            edges.push((n + s, n + s + 1));
            edge_names.push(format!("{s}^(1)"));
        }
        for s in 0..n {
            covers.push((s, n + s));
            edges.push((s, n + s));
            edge_names.push(format!("{s}^(c)"));
        }
        let labels = (0..2 * n)
            .map(|v| format!("({},{})", v / n, v % n))
            .collect();
        let poset = Poset::new(2 * n, covers)?.with_labels(labels)?;
        Ok(LabeledPoset {
            poset,
            edges,
            edge_names,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_name(&self, k: usize) -> &str {
        &self.edge_names[k]
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edge_names
    }

    pub fn edge_index(&self, arc: (usize, usize)) -> Option<usize> {
        self.edges.iter().position(|&e| e == arc)
    }

    /// Arcs traversed by a saturated chain, as a bitmask in label order.
    pub fn chain_edge_set(&self, chain: &ChainPath) -> u64 {
        chain
            .vertices()
            .windows(2)
            .map(|w| {
                self.edge_index((w[0], w[1]))
                    .expect("chain steps along covering arcs")
            })
            .fold(0, |m, k| m | (1 << k))
    }

    /// The poset of arcs of a graded poset: arc (a,b) lies below arc
    /// (c,d) when the head of the first is comparable to the tail of the
    /// second as prescribed by `order`. Elements appear in label order.
    pub fn edge_poset(&self, order: EdgeOrder) -> Result<Poset, PosetError> {
        if !self.poset.is_graded() {
            return Err(PosetError::EdgePosetNeedsGraded);
        }
        let q = self.edges.len();
        if q > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(q));
        }
        let lt = |e: usize, f: usize| {
            let (_, b) = self.edges[e];
            let (c, _) = self.edges[f];
            match order {
                EdgeOrder::Weak => self.poset.le(b, c),
                EdgeOrder::Strict => self.poset.lt(b, c),
            }
        };
        let mut covers = Vec::new();
        for e in 0..q {
            for f in 0..q {
                if e == f || !lt(e, f) {
                    continue;
                }
                let skipped = (0..q).any(|g| g != e && g != f && lt(e, g) && lt(g, f));
                if !skipped {
                    covers.push((e, f));
                }
            }
        }
        Poset::new(q, covers)?.with_labels(self.edge_names.clone())
    }
}

/// All posets on `n` elements whose diagram is a tree, up to isomorphism.
///
/// Underlying trees are enumerated from Pruefer sequences and
/// deduplicated by a canonical code; every arc orientation of each
/// representative is then deduplicated by the directed version of the
/// same code, rooted at the tree's center.
pub fn oriented_tree_posets(n: usize) -> Vec<Poset> {
    assert!(
        (1..=16).contains(&n),
        "corpus enumeration is for small trees"
    );
    let mut reps: HashMap<Vec<u8>, Vec<(usize, usize)>> = HashMap::new();
    for edges in labeled_trees(n) {
        let code = tree_code(n, &edges, None);
        reps.entry(code).or_insert(edges);
    }
    let mut trees: Vec<Vec<(usize, usize)>> = reps.into_values().collect();
    trees.sort();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for edges in trees {
        for mask in 0u32..1 << edges.len() {
            let covers: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| if mask >> k & 1 == 0 { (a, b) } else { (b, a) })
                .collect();
            let code = tree_code(n, &covers, Some(&covers));
            if seen.insert(code) {
                out.push(Poset::new(n, covers).expect("tree orientations are valid posets"));
            }
        }
    }
    out
}

/// The tree posets proper: oriented trees containing no pencil.
pub fn tree_posets(n: usize) -> Vec<Poset> {
    oriented_tree_posets(n)
        .into_iter()
        .filter(|p| !p.contains_pencil())
        .collect()
}

fn labeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    // Decode every Pruefer sequence of length n - 2.
    let mut seqs = vec![Vec::new()];
    for _ in 0..n - 2 {
        seqs = seqs
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                (0..n).map(move |v| {
                    let mut t = s.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    seqs.into_iter()
        .map(|seq| {
            let mut degree = vec![1usize; n];
            for &v in &seq {
                degree[v] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &v in &seq {
                let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
                edges.push((leaf.min(v), leaf.max(v)));
                degree[leaf] -= 1;
                degree[v] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
            edges.push((rest[0], rest[1]));
            edges
        })
        .collect()
}

/// Canonical code of a tree, rooted at its center. When `directions` is
/// given, each edge carries its orientation into the code, so two
/// orientations get equal codes exactly when they are isomorphic as
/// posets.
fn tree_code(n: usize, edges: &[(usize, usize)], directions: Option<&[(usize, usize)]>) -> Vec<u8> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let oriented: Option<HashSet<(usize, usize)>> = directions.map(|d| d.iter().copied().collect());
    tree_centers(n, &adj)
        .into_iter()
        .map(|c| subtree_code(c, usize::MAX, &adj, &oriented))
        .min()
        .unwrap()
}

fn tree_centers(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn subtree_code(
    v: usize,
    parent: usize,
    adj: &[Vec<usize>],
    oriented: &Option<HashSet<(usize, usize)>>,
) -> Vec<u8> {
    let mut child_codes: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| {
            let mark = match oriented {
                Some(set) if set.contains(&(v, w)) => b'u',
                Some(_) => b'd',
                None => b'e',
            };
            let mut code = vec![mark];
            code.extend(subtree_code(w, v, adj, oriented));
            code
        })
        .collect();
    child_codes.sort();
    let mut code = vec![b'('];
    for c in child_codes {
        code.extend(c);
    }
    code.push(b')');
    code
}
