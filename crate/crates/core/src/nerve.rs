//! The nerve of an Artin group: the simplicial complex whose simplices are
//! the generator subsets that span a finite Coxeter subgroup, each labeled
//! by its parabolic submatrix and classification.

use std::collections::BTreeMap;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::coxeter::{
    component_types, is_finite, parabolic_submatrix, CoxeterMatrix, CoxeterType,
};

/// The nerve: a simplicial complex over the generators `1..n` (vertex names
/// are the 1-based decimal indices) with the spherical parabolic data of
/// every simplex.
pub struct NerveLabeling {
    pub complex: SimplicialComplex,
    matrix: CoxeterMatrix,
    labels: BTreeMap<Simplex, CoxeterMatrix>,
    irr: BTreeMap<Simplex, bool>,
    /// Vertex id → 0-based generator index.
    gen_of_vertex: Vec<usize>,
}

impl NerveLabeling {
    /// The Coxeter matrix the nerve was built from.
    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    /// The parabolic submatrix labeling a simplex of the nerve.
    pub fn label(&self, s: &Simplex) -> &CoxeterMatrix {
        &self.labels[s]
    }

    /// True iff the simplex's parabolic diagram is connected.
    pub fn is_irreducible(&self, s: &Simplex) -> bool {
        self.irr[s]
    }

    /// 0-based generator indices spanning a simplex, ascending.
    pub fn generators_of(&self, s: &Simplex) -> Vec<usize> {
        let mut gens: Vec<usize> =
            s.vertices().iter().map(|&v| self.gen_of_vertex[v as usize]).collect();
        gens.sort_unstable();
        gens
    }

    /// The nerve vertex carrying a 0-based generator index.
    pub fn vertex_for_generator(&self, i: usize) -> VertexId {
        self.complex
            .id(&(i + 1).to_string())
            .expect("generator index within the nerve's rank")
    }

    /// All simplices, by dimension then lexicographic order.
    pub fn all_simplices(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        let dim = self.complex.dim_or_zero();
        for k in 0..=dim {
            out.extend(self.complex.simplices_of_dim(k).iter().cloned());
        }
        out
    }
}

/// Builds the nerve of the Coxeter matrix `m`: simplices are exactly the
/// nonempty generator subsets spanning a finite Coxeter subgroup.
///
/// Works up the cardinalities, testing a subset only once all its
/// codimension-1 faces are present (parabolic subgroups of finite Coxeter
/// groups are finite, so the pruning is exact).
pub fn build_nerve(m: &CoxeterMatrix) -> NerveLabeling {
    let n = m.rank();
    let mut all: Vec<Vec<usize>> = Vec::new();
    let mut prev: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut prev_set: std::collections::BTreeSet<Vec<usize>> = prev.iter().cloned().collect();
    all.extend(prev.iter().cloned());
    while !prev.is_empty() {
        let mut next: Vec<Vec<usize>> = Vec::new();
        for s in &prev {
            let last = *s.last().expect("nonempty subset");
            'candidates: for v in last + 1..n {
                let mut cand = s.clone();
                cand.push(v);
                // All facets must already be in the nerve (the one omitting
                // `v` is `s` itself).
                for skip in 0..cand.len() - 1 {
                    let mut facet = cand.clone();
                    facet.remove(skip);
                    if !prev_set.contains(&facet) {
                        continue 'candidates;
                    }
                }
                let sub = parabolic_submatrix(m, &cand).expect("nonempty subset");
                if is_finite(&sub) {
                    next.push(cand);
                }
            }
        }
        next.sort();
        next.dedup();
        all.extend(next.iter().cloned());
        prev_set = next.iter().cloned().collect();
        prev = next;
    }

    let named: Vec<Vec<String>> = all
        .iter()
        .map(|s| s.iter().map(|&i| (i + 1).to_string()).collect())
        .collect();
    let complex = SimplicialComplex::from_named_facets(named)
        .expect("generator names are valid vertex names");

    let gen_of_vertex: Vec<usize> = complex
        .vertex_names()
        .iter()
        .map(|name| {
            name.parse::<usize>().expect("nerve vertex names are decimal indices") - 1
        })
        .collect();

    let mut labels = BTreeMap::new();
    let mut irr = BTreeMap::new();
    for k in 0..=complex.dim_or_zero() {
        for s in complex.simplices_of_dim(k) {
            let mut gens: Vec<usize> =
                s.vertices().iter().map(|&v| gen_of_vertex[v as usize]).collect();
            gens.sort_unstable();
            let sub = parabolic_submatrix(m, &gens).expect("simplices are nonempty");
            irr.insert(s.clone(), sub.diagram().is_connected());
            labels.insert(s.clone(), sub);
        }
    }

    NerveLabeling { complex, matrix: m.clone(), labels, irr, gen_of_vertex }
}

/// One simplex of the nerve with its spherical type data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalFace {
    pub simplex: Simplex,
    /// Component types, ordered by smallest generator index.
    pub types: Vec<CoxeterType>,
    /// True iff the parabolic diagram is connected (one component).
    pub irreducible: bool,
}

/// Every simplex of the nerve with its component types, by dimension then
/// lexicographic order.
pub fn spherical_faces(nerve: &NerveLabeling) -> Vec<SphericalFace> {
    nerve
        .all_simplices()
        .into_iter()
        .map(|s| {
            let types: Vec<CoxeterType> =
                component_types(nerve.label(&s)).into_iter().map(|(_, t)| t).collect();
            let irreducible = types.len() == 1;
            SphericalFace { simplex: s, types, irreducible }
        })
        .collect()
}

/// Human-readable product label, e.g. `A(1)×A(1)`.
pub fn type_label(types: &[CoxeterType]) -> String {
    types.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("×")
}
