//! Reduced simplicial homology over a field, computed exactly.
//!
//! The result of a computation is a profile: the map from degree to the
//! dimension of reduced homology there, zero entries omitted. The empty
//! complex has profile `{-1: 1}`, the void complex the zero profile, and
//! cones the zero profile as well. Degree -1 is a real degree here, not
//! a convention: the augmented chain complex ends in the span of the
//! empty face.

use crate::complex::{boundary_matrix, SimplicialComplex};
use crate::linalg::{FieldSpec, IntMatrix};
use crate::poset::bits;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

/// Dimensions of reduced homology by degree, zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyProfile {
    dims: BTreeMap<i64, u64>,
}

impl HomologyProfile {
    pub fn zero() -> Self {
        HomologyProfile::default()
    }

    /// One-dimensional homology concentrated in a single degree.
    pub fn singleton(degree: i64) -> Self {
        let mut dims = BTreeMap::new();
        dims.insert(degree, 1);
        HomologyProfile { dims }
    }

    /// The profile of the empty complex, the unit for [`convolve`].
    ///
    /// [`convolve`]: HomologyProfile::convolve
    pub fn join_unit() -> Self {
        HomologyProfile::singleton(-1)
    }

    pub fn from_entries(entries: &[(i64, u64)]) -> Self {
        let mut dims = BTreeMap::new();
        for &(d, v) in entries {
            if v > 0 {
                *dims.entry(d).or_insert(0) += v;
            }
        }
        HomologyProfile { dims }
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim_in(&self, degree: i64) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn add(&mut self, degree: i64, dim: u64) {
        if dim > 0 {
            *self.dims.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.dims.iter().map(|(&d, &v)| (d, v))
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    /// Homology of a join over a field: degrees add plus one, dimensions
    /// multiply and accumulate.
    pub fn convolve(&self, other: &HomologyProfile) -> HomologyProfile {
        let mut out = HomologyProfile::zero();
        for (&i, &a) in &self.dims {
            for (&j, &b) in &other.dims {
                out.add(i + j + 1, a * b);
            }
        }
        out
    }

    pub fn to_json(&self) -> ProfileJson {
        ProfileJson {
            dims: self
                .dims
                .iter()
                .map(|(&d, &v)| (d.to_string(), v))
                .collect(),
        }
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .dims
            .iter()
            .map(|(d, v)| format!("H~{d}: {v}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// JSON schema: degree keys as strings so negative degrees survive.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProfileJson {
    pub dims: BTreeMap<String, u64>,
}

/// Reduced homology of a complex over the given field.
///
/// Cones are recognized directly, everything else is shrunk by free-face
/// collapses before any linear algebra runs. [`profile_from_faces`] is the
/// plain route without either shortcut.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    if complex.is_void() {
        return HomologyProfile::zero();
    }
    if complex.is_cone() {
        return HomologyProfile::zero();
    }
    let by_dim = complex.faces_by_dim();
    let core = collapse_core(&by_dim, complex.support());
    if core.is_empty() {
        return HomologyProfile::zero();
    }
    profile_from_faces(&core, field)
}

/// Repeatedly removes free pairs: a face whose only proper coface is a
/// maximal face one dimension up goes away together with that coface.
/// Each removal is an elementary collapse, so homology is preserved over
/// every field. The input is a downward-closed graded face list (entry
/// `k` holds the faces with `k` vertices); the output is the surviving
/// core in the same format, empty when the complex collapses away
/// entirely.
fn collapse_core(by_dim: &[Vec<u64>], support: u64) -> Vec<Vec<u64>> {
    let mut present: HashSet<u64> = by_dim.iter().flatten().copied().collect();
    let mut cofaces: HashMap<u64, u32> = HashMap::with_capacity(present.len());
    for face in by_dim.iter().flatten().copied() {
        let count = bits(support & !face)
            .filter(|&v| present.contains(&(face | 1 << v)))
            .count() as u32;
        cofaces.insert(face, count);
    }
    let mut queue: VecDeque<u64> = by_dim
        .iter()
        .flatten()
        .copied()
        .filter(|f| cofaces[f] == 1)
        .collect();
    while let Some(sigma) = queue.pop_front() {
        if !present.contains(&sigma) || cofaces[&sigma] != 1 {
            continue;
        }
        let tau = match bits(support & !sigma)
            .map(|v| sigma | 1 << v)
            .find(|t| present.contains(t))
        {
            Some(t) => t,
            None => continue,
        };
        if cofaces[&tau] != 0 {
            continue;
        }
        present.remove(&sigma);
        present.remove(&tau);
        for parent in [sigma, tau] {
            for v in bits(parent) {
                let rho = parent & !(1 << v);
                if rho == sigma || !present.contains(&rho) {
                    continue;
                }
                let c = cofaces.get_mut(&rho).unwrap();
                *c -= 1;
                if *c == 1 {
                    queue.push_back(rho);
                } else if *c == 0 {
                    // rho just became maximal; faces right below it may
                    // now form free pairs with it.
                    for u in bits(rho) {
                        let child = rho & !(1 << u);
                        if present.contains(&child) && cofaces[&child] == 1 {
                            queue.push_back(child);
                        }
                    }
                }
            }
        }
    }
    let mut out: Vec<Vec<u64>> = Vec::new();
    for &face in &present {
        let k = face.count_ones() as usize;
        if out.len() <= k {
            out.resize(k + 1, Vec::new());
        }
        out[k].push(face);
    }
    for level in &mut out {
        level.sort_unstable();
    }
    out
}

/// Reduced homology straight from a graded face list (entry `d + 1`
/// holds the dimension-`d` faces, entry 0 the empty face).
pub fn profile_from_faces(by_dim: &[Vec<u64>], field: FieldSpec) -> HomologyProfile {
    let levels = by_dim.len();
    // ranks[k] is the rank of the boundary map out of level k; the map
    // out of the empty face is zero.
    let mut ranks = vec![0usize; levels + 1];
    for k in 1..levels {
        let m: IntMatrix = boundary_matrix(&by_dim[k], &by_dim[k - 1]);
        ranks[k] = m.rank(field);
    }
    let mut profile = HomologyProfile::zero();
    for k in 0..levels {
        let f = by_dim[k].len();
        let h = f - ranks[k] - ranks[k + 1];
        profile.add(k as i64 - 1, h as u64);
    }
    profile
}

/// Reduced homology of the link of a face.
pub fn homology_of_link(
    complex: &SimplicialComplex,
    face: u64,
    field: FieldSpec,
) -> HomologyProfile {
    reduced_homology(&complex.link(face), field)
}
