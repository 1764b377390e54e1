//! Abstract simplicial complexes on vertex set `{0, ..., n-1}`.
//!
//! A complex is stored by its facets (inclusion-maximal faces) as
//! bitmasks. Two degenerate complexes are kept apart: the empty complex,
//! whose only face is the empty set, and the void complex with no faces
//! at all. The void complex shows up as the restriction of nothing and
//! as the link of a non-face; it has no Stanley-Reisner ideal.

use crate::ideal::{minimal_transversals, set_cmp, IdealError, SquarefreeIdeal};
use crate::linalg::IntMatrix;
use crate::poset::bits;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("at most 64 vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("facet uses vertex {0}, but there are only {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("the void complex has no {0}")]
    VoidComplex(&'static str),
    #[error("the facet complex of the zero ideal is undefined")]
    ZeroIdealFacets,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Simplicial complex given by its facet list, sorted by size then
/// lexicographically. The empty complex has facet list `[0]`; the void
/// complex has an empty facet list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Build from any family of faces; non-maximal ones are dropped. An
    /// empty family yields the void complex.
    pub fn from_facets(n_vertices: usize, faces: Vec<u64>) -> Result<Self, ComplexError> {
        if n_vertices > 64 {
            return Err(ComplexError::TooManyVertices(n_vertices));
        }
        for &f in &faces {
            if f != 0 {
                let top = 63 - f.leading_zeros() as usize;
                if top >= n_vertices {
                    return Err(ComplexError::VertexOutOfRange(top, n_vertices));
                }
            }
        }
        let mut faces = faces;
        faces.sort_unstable();
        faces.dedup();
        let mut facets: Vec<u64> = faces
            .iter()
            .copied()
            .filter(|&f| !faces.iter().any(|&g| g != f && g & f == f))
            .collect();
        facets.sort_unstable_by(|&a, &b| set_cmp(a, b));
        Ok(SimplicialComplex { n_vertices, facets })
    }

    /// The complex whose only face is the empty set.
    pub fn empty(n_vertices: usize) -> Self {
        SimplicialComplex {
            n_vertices,
            facets: vec![0],
        }
    }

    /// The complex with no faces at all.
    pub fn void(n_vertices: usize) -> Self {
        SimplicialComplex {
            n_vertices,
            facets: Vec::new(),
        }
    }

    /// The full simplex on all vertices.
    pub fn simplex(n_vertices: usize) -> Result<Self, ComplexError> {
        if n_vertices > 64 {
            return Err(ComplexError::TooManyVertices(n_vertices));
        }
        let all = if n_vertices == 64 {
            u64::MAX
        } else {
            (1 << n_vertices) - 1
        };
        Ok(SimplicialComplex {
            n_vertices,
            facets: vec![all],
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [0]
    }

    /// Dimension: largest face size minus one. The empty complex has
    /// dimension -1; the void complex has none.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.count_ones() as i64 - 1).max()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & f == face)
    }

    /// Union of all facets.
    pub fn support(&self) -> u64 {
        self.facets.iter().fold(0, |m, &f| m | f)
    }

    /// Some vertex lies in every facet (and there is at least one
    /// facet). Coning makes all reduced homology vanish.
    pub fn is_cone(&self) -> bool {
        !self.is_void()
            && bits(self.support()).any(|v| self.facets.iter().all(|&f| f >> v & 1 == 1))
    }

    /// Partition of the support into connected components, each returned
    /// as a vertex mask. Facets are simplices, so each lies in a single
    /// component.
    pub fn support_components(&self) -> Vec<u64> {
        let mut comps: Vec<u64> = Vec::new();
        for &f in &self.facets {
            if f == 0 {
                continue;
            }
            let (touching, rest): (Vec<u64>, Vec<u64>) =
                comps.into_iter().partition(|&c| c & f != 0);
            let merged = touching.into_iter().fold(f, |m, c| m | c);
            comps = rest;
            comps.push(merged);
        }
        comps.sort_unstable();
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.support_components().len() <= 1
    }

    /// Subcomplex of faces inside `w`.
    pub fn restriction(&self, w: u64) -> SimplicialComplex {
        let faces = self.facets.iter().map(|&f| f & w).collect();
        SimplicialComplex::from_facets(self.n_vertices, faces)
            .expect("restricting keeps vertices in range")
    }

    /// Link of a face: all faces disjoint from it whose union with it is
    /// again a face. The link of a non-face is void.
    pub fn link(&self, face: u64) -> SimplicialComplex {
        let faces = self
            .facets
            .iter()
            .filter(|&&f| face & f == face)
            .map(|&f| f & !face)
            .collect();
        SimplicialComplex::from_facets(self.n_vertices, faces)
            .expect("links keep vertices in range")
    }

    /// Join, with the other complex's vertices renumbered to follow this
    /// one's. The join with a void factor is void; the empty complex is
    /// the unit.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        let n = self.n_vertices + other.n_vertices;
        if n > 64 {
            return Err(ComplexError::TooManyVertices(n));
        }
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &f in &self.facets {
            for &g in &other.facets {
                faces.push(f | g << self.n_vertices);
            }
        }
        SimplicialComplex::from_facets(n, faces)
    }

    /// Subcomplex generated by the faces of dimension exactly `i`; void
    /// when there are none. `i = -1` gives the empty complex.
    pub fn pure_skeleton(&self, i: i64) -> SimplicialComplex {
        if self.is_void() || i < -1 {
            return SimplicialComplex::void(self.n_vertices);
        }
        if i == -1 {
            return SimplicialComplex::empty(self.n_vertices);
        }
        let size = (i + 1) as u32;
        let mut faces: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            if f.count_ones() < size {
                continue;
            }
            subsets_of_size(f, size, &mut faces);
        }
        SimplicialComplex::from_facets(self.n_vertices, faces.into_iter().collect())
            .expect("skeleton faces are in range")
    }

    /// All faces grouped by dimension: entry `d + 1` lists the faces of
    /// dimension `d` (so entry 0 is the empty face), each group in
    /// lexicographic order. The void complex has no groups.
    pub fn faces_by_dim(&self) -> Vec<Vec<u64>> {
        if self.is_void() {
            return Vec::new();
        }
        let mut all: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let top = self.dim().unwrap();
        let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); (top + 2) as usize];
        for face in all {
            by_dim[face.count_ones() as usize].push(face);
        }
        for group in &mut by_dim {
            group.sort_unstable_by(|&a, &b| set_cmp(a, b));
        }
        by_dim
    }

    /// Face counts by dimension, starting at the empty face.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    /// The Stanley-Reisner ideal: generated by the minimal non-faces.
    /// The full simplex gives the zero ideal; the void complex has none.
    pub fn sr_ideal(&self, var_names: Vec<String>) -> Result<SquarefreeIdeal, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::VoidComplex("Stanley-Reisner ideal"));
        }
        let all = if self.n_vertices == 64 {
            u64::MAX
        } else {
            (1u64 << self.n_vertices) - 1
        };
        let complements: Vec<u64> = self.facets.iter().map(|&f| all & !f).collect();
        let non_faces = minimal_transversals(&complements);
        Ok(SquarefreeIdeal::new(var_names, non_faces)?)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            n_vertices: self.n_vertices,
            facets: self
                .facets
                .iter()
                .map(|&f| bits(f).map(|v| v + 1).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self, ComplexError> {
        let mut faces = Vec::with_capacity(json.facets.len());
        for facet in &json.facets {
            let mut mask = 0u64;
            for &v in facet {
                if v == 0 || v > json.n_vertices {
                    return Err(ComplexError::VertexOutOfRange(
                        v.saturating_sub(1),
                        json.n_vertices,
                    ));
                }
                mask |= 1 << (v - 1);
            }
            faces.push(mask);
        }
        SimplicialComplex::from_facets(json.n_vertices, faces)
    }
}

/// JSON schema: 1-based facet vertex lists. `[]` is the void complex and
/// `[[]]` the empty one.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexJson {
    pub n_vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

fn subsets_of_size(mask: u64, size: u32, out: &mut HashSet<u64>) {
    let verts: Vec<usize> = bits(mask).collect();
    let k = size as usize;
    if verts.len() < k {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.insert(idx.iter().fold(0u64, |m, &i| m | 1 << verts[i]));
        let mut j = k;
        while j > 0 {
            j -= 1;
            if idx[j] != verts.len() - k + j {
                idx[j] += 1;
                for l in j + 1..k {
                    idx[l] = idx[l - 1] + 1;
                }
                break;
            }
            if j == 0 {
                return;
            }
        }
    }
}

/// The complex whose faces miss every generator of the ideal. Its
/// facets are the complements of the minimal vertex covers.
pub fn stanley_reisner(ideal: &SquarefreeIdeal) -> SimplicialComplex {
    let n = ideal.n_vars();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let facets = ideal
        .minimal_vertex_covers()
        .iter()
        .map(|&c| all & !c)
        .collect();
    SimplicialComplex::from_facets(n, facets).expect("covers stay in range")
}

/// The complex whose facets are the ideal's minimal generators.
pub fn facet_complex(ideal: &SquarefreeIdeal) -> Result<SimplicialComplex, ComplexError> {
    if ideal.is_zero() {
        return Err(ComplexError::ZeroIdealFacets);
    }
    SimplicialComplex::from_facets(ideal.n_vars(), ideal.generators().to_vec())
}

/// Boundary matrix from dimension-`d` faces to dimension-`d-1` faces,
/// with the usual alternating signs. Passing the empty face as the sole
/// row gives the augmentation map.
pub fn boundary_matrix(faces_d: &[u64], faces_dm1: &[u64]) -> IntMatrix {
    let row_of: HashMap<u64, usize> = faces_dm1.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = IntMatrix::zero(faces_dm1.len(), faces_d.len());
    for (col, &face) in faces_d.iter().enumerate() {
        let mut sign = 1i64;
        for v in bits(face) {
            let sub = face & !(1 << v);
            let row = row_of[&sub];
            m.set(row, col, sign);
            sign = -sign;
        }
    }
    m
}
