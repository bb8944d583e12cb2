//! Embedding a complex into a contractible complex of the same dimension.
//!
//! The driving question: given a finite complex `L`, does it sit inside a
//! *contractible* finite complex `C` with `dim C = dim L`? The decision is
//! cohomological away from dimension 2 — `L` embeds iff its reduced top
//! cohomology vanishes — while in dimension 2 the positive direction also
//! needs π₁ of `L` to be normally generated by `rank H₁(L)` elements,
//! which is only ever certified, never decided, here.
//!
//! [`embed_dim1`] and [`embed_general`] actually build `C`: components are
//! joined by edges, surviving fundamental-group generators are killed by
//! coning their loops with triangulated disks, and middle-degree homology
//! is killed by coning cycle supports drawn from Smith-normal-form kernel
//! bases. The output is re-verified from scratch (vanishing reduced
//! homology in every degree plus a π₁ triviality certificate), so a
//! successful run is certified, not assumed.

use thiserror::Error;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::fungroup::{
    bfs_spanning_tree, edge_path_presentation, normal_generation_certificate,
    tietze_simplify, triviality_certificate, Certificate3, DEFAULT_TIETZE_BUDGET,
};
use crate::homology::{
    boundary_matrices, h1_rank, homology, is_top_cohomology_trivial,
    reduced_cohomology, reduced_homology_vanishes, snf_with_transform,
};

/// Default number of attachment passes for [`embed_general`].
pub const DEFAULT_EMBED_BUDGET: usize = 50;

/// Errors from the embedding constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    /// A precondition of the routine does not hold for this input.
    #[error("embedding routine not applicable: {0}")]
    NotApplicable(String),
    /// The pass budget ran out before the output could be certified.
    #[error("attachment budget exhausted after {passes} passes")]
    BudgetExhausted { passes: usize, trace: Vec<String> },
}

/// Answer to "does `K` embed in a contractible complex of dimension
/// `dim K`?".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedStatus {
    Embeddable,
    NotEmbeddable,
    /// Dimension-2 case with vanishing `H²` but an unverified π₁
    /// condition: no conclusion either way.
    ConditionalUnknown,
}

impl std::fmt::Display for EmbedStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EmbedStatus::Embeddable => write!(f, "Embeddable"),
            EmbedStatus::NotEmbeddable => write!(f, "NotEmbeddable"),
            EmbedStatus::ConditionalUnknown => write!(f, "ConditionalUnknown"),
        }
    }
}

/// The embeddability decision with its justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbedDecision {
    pub status: EmbedStatus,
    /// Which criterion fired.
    pub reason: String,
    /// Present exactly in dimension 2, where the positive criterion rests
    /// on a group-theoretic condition that is certified, not decided.
    pub note: Option<String>,
}

/// Decides embeddability of a nonempty complex `K` into a contractible
/// complex of the same dimension `d`.
///
/// For `d ≠ 2` the answer is `Embeddable` iff the reduced top cohomology
/// of `K` vanishes. For `d = 2`: nonvanishing `H²` refutes; vanishing
/// `H²` plus a verified "π₁ normally generated by `rank H₁` elements"
/// certificate confirms; otherwise the result is `ConditionalUnknown`.
pub fn embeddable_in_contractible(k: &SimplicialComplex) -> EmbedDecision {
    assert!(!k.is_empty(), "embeddability requires a nonempty complex");
    let d = k.dimension().expect("nonempty");
    if d != 2 {
        return if is_top_cohomology_trivial(k) {
            EmbedDecision {
                status: EmbedStatus::Embeddable,
                reason: format!("reduced top cohomology H^{d}(K) vanishes"),
                note: None,
            }
        } else {
            EmbedDecision {
                status: EmbedStatus::NotEmbeddable,
                reason: format!("reduced top cohomology H^{d}(K) is nonzero"),
                note: None,
            }
        };
    }
    let note = Some(String::from(
        "dimension-2 case: the positive criterion additionally requires \
         pi1(K) to be normally generated by rank-of-H_1(K) elements, which \
         is certified rather than decided",
    ));
    let h2 = reduced_cohomology(k, 2).expect("degree in range");
    if !h2.is_trivial() {
        return EmbedDecision {
            status: EmbedStatus::NotEmbeddable,
            reason: "H^2(K) is nonzero".into(),
            note,
        };
    }
    let cert = normal_generation_certificate(k).unwrap_or_else(|e| {
        Certificate3::unknown(format!("presentation unavailable: {e}"))
    });
    if cert.is_verified() {
        EmbedDecision {
            status: EmbedStatus::Embeddable,
            reason: format!(
                "H^2(K) vanishes and normal generation is verified: {}",
                cert.witness
            ),
            note,
        }
    } else {
        EmbedDecision {
            status: EmbedStatus::ConditionalUnknown,
            reason: format!(
                "H^2(K) vanishes but normal generation is not settled: {}",
                cert.witness
            ),
            note,
        }
    }
}

/// A constructed embedding 'K ⊆ C' with its verification data.
#[derive(Debug, Clone)]
pub struct EmbedResult {
    /// The contractible host complex.
    pub complex: SimplicialComplex,
    /// Reduced homology of the host vanishes in every degree.
    pub homology_vanishes: bool,
    /// π₁ triviality certificate for the host.
    pub pi1_triviality: Certificate3,
    /// Human-readable log of every attachment made.
    pub trace: Vec<String>,
}

impl EmbedResult {
    /// Whether both verification legs succeeded.
    pub fn certified(&self) -> bool {
        self.homology_vanishes && self.pi1_triviality.is_verified()
    }
}

fn facet_names(k: &SimplicialComplex) -> Vec<Vec<String>> {
    k.facets()
        .iter()
        .map(|f| k.simplex_names(f).into_iter().map(str::to_owned).collect())
        .collect()
}

/// Names of one representative vertex per component (the smallest id in
/// each), in component order.
fn component_reps(k: &SimplicialComplex) -> Vec<String> {
    k.connected_components()
        .iter()
        .map(|comp| k.name(comp[0]).to_owned())
        .collect()
}

fn verify(
    c: &SimplicialComplex,
) -> (bool, Certificate3) {
    let hv = reduced_homology_vanishes(c).expect("host complex is nonempty");
    let cert = if c.is_connected() {
        triviality_certificate(c).expect("host complex is connected and nonempty")
    } else {
        Certificate3::unknown("host complex is not connected")
    };
    (hv, cert)
}

/// Embeds a nonempty complex of dimension ≤ 1 with `H₁ = 0` (a forest)
/// into a tree by adding `#components − 1` edges and no vertices. Already
/// connected inputs are returned unchanged (after verification).
pub fn embed_dim1(k: &SimplicialComplex) -> Result<EmbedResult, EmbedError> {
    if k.is_empty() {
        return Err(EmbedError::NotApplicable("the complex is empty".into()));
    }
    let d = k.dimension().expect("nonempty");
    if d > 1 {
        return Err(EmbedError::NotApplicable(format!(
            "dimension {d} exceeds 1; use the general routine"
        )));
    }
    if h1_rank(k) != 0 {
        return Err(EmbedError::NotApplicable(
            "H_1(K) is nonzero, so K is not a forest".into(),
        ));
    }
    let mut trace = Vec::new();
    let reps = component_reps(k);
    let mut facets = facet_names(k);
    for rep in reps.iter().skip(1) {
        facets.push(vec![reps[0].clone(), rep.clone()]);
        trace.push(format!(
            "connected component of vertex {rep} to component of vertex {} \
             by a new edge",
            reps[0]
        ));
    }
    let c = SimplicialComplex::from_named_facets(facets)
        .expect("names are reused from a valid complex");
    let (homology_vanishes, pi1_triviality) = verify(&c);
    Ok(EmbedResult { complex: c, homology_vanishes, pi1_triviality, trace })
}

/// Tree path from `u` to `v` through their lowest common ancestor, as a
/// vertex sequence starting at `u` and ending at `v`.
fn tree_path(parent: &[Option<VertexId>], u: VertexId, v: VertexId) -> Vec<VertexId> {
    let climb = |mut x: VertexId| {
        let mut path = vec![x];
        while let Some(p) = parent[x as usize] {
            path.push(p);
            x = p;
        }
        path
    };
    let up = climb(u);
    let vp = climb(v);
    let on_up: std::collections::BTreeSet<VertexId> = up.iter().copied().collect();
    let lca = *vp.iter().find(|x| on_up.contains(x)).expect("same component");
    let mut path: Vec<VertexId> =
        up.iter().copied().take_while(|&x| x != lca).collect();
    path.push(lca);
    let tail: Vec<VertexId> =
        vp.iter().copied().take_while(|&x| x != lca).collect();
    path.extend(tail.into_iter().rev());
    path
}

/// Whether the integer vector `v` lies in the column lattice of `bd`.
///
/// Two lattices of equal rank inside the same rational span are equal iff
/// their Smith invariants agree, so `v ∈ im(bd)` exactly when augmenting
/// `bd` by the column `v` changes neither the rank nor the invariant
/// factors. Entries of `v` beyond the i64 range are conservatively treated
/// as non-boundaries (the only cost is a possibly redundant cone, which
/// final verification would catch).
fn is_boundary(bd: &crate::homology::IntMatrix, v: &[num_bigint::BigInt]) -> bool {
    use num_traits::ToPrimitive;
    let mut small = Vec::with_capacity(v.len());
    for a in v {
        match a.to_i64() {
            Some(x) => small.push(x),
            None => return false,
        }
    }
    let mut aug = crate::homology::IntMatrix::zero(bd.rows, bd.cols + 1);
    for (i, &s) in small.iter().enumerate() {
        for j in 0..bd.cols {
            aug.set(i, j, bd.at(i, j));
        }
        aug.set(i, bd.cols, s);
    }
    let base = crate::homology::smith_normal_form(bd);
    let with_v = crate::homology::smith_normal_form(&aug);
    base.rank == with_v.rank && base.factors == with_v.factors
}

/// Next vertex name of the form `w{i}` that is unused in `c`, starting the
/// search at `*counter` (which is advanced past the returned name).
fn fresh_apex(c: &SimplicialComplex, counter: &mut usize) -> String {
    loop {
        let name = format!("w{counter}");
        *counter += 1;
        if c.id(&name).is_none() {
            return name;
        }
    }
}

/// Embeds a complex of dimension `d ≥ 2` that passes the
/// [`embeddable_in_contractible`] test into a contractible complex of the
/// same dimension.
///
/// Works in verification-first passes (at most `budget` of them). Each
/// pass re-checks the certificate and, if it fails, makes one kind of
/// repair:
///
/// 1. joins components with new edges;
/// 2. cones a triangulated disk onto the loop of every fundamental-group
///    generator that survives Tietze simplification of the edge-path
///    presentation (a 2-dimensional attachment);
/// 3. for `2 ≤ q ≤ d−1`, cones off the supports of the Smith-normal-form
///    kernel basis of `∂_q` while `H_q ≠ 0` (attachments of dimension
///    `q + 1 ≤ d`).
///
/// Already-contractible inputs are returned unchanged. All attachments
/// preserve the original complex as a subcomplex and never raise the
/// dimension.
pub fn embed_general(
    k: &SimplicialComplex,
    budget: usize,
) -> Result<EmbedResult, EmbedError> {
    if k.is_empty() {
        return Err(EmbedError::NotApplicable("the complex is empty".into()));
    }
    let d = k.dimension().expect("nonempty");
    if d < 2 {
        return Err(EmbedError::NotApplicable(format!(
            "dimension {d} is below 2; use the dimension-1 routine"
        )));
    }
    let decision = embeddable_in_contractible(k);
    match decision.status {
        EmbedStatus::Embeddable => {}
        EmbedStatus::NotEmbeddable => {
            return Err(EmbedError::NotApplicable(format!(
                "the complex is not embeddable: {}",
                decision.reason
            )));
        }
        EmbedStatus::ConditionalUnknown => {
            return Err(EmbedError::NotApplicable(format!(
                "embeddability is unresolved: {}",
                decision.reason
            )));
        }
    }

    let mut c = k.clone();
    let mut trace: Vec<String> = Vec::new();
    let mut apex_counter = 0usize;
    for pass in 1..=budget {
        let (hv, cert) = verify(&c);
        if hv && cert.is_verified() {
            return Ok(EmbedResult {
                complex: c,
                homology_vanishes: true,
                pi1_triviality: cert,
                trace,
            });
        }

        let mut did_something = false;
        if !c.is_connected() {
            let reps = component_reps(&c);
            let mut facets = facet_names(&c);
            for rep in reps.iter().skip(1) {
                facets.push(vec![reps[0].clone(), rep.clone()]);
                trace.push(format!(
                    "pass {pass}: connected component of vertex {rep} to \
                     component of vertex {} by a new edge",
                    reps[0]
                ));
            }
            c = SimplicialComplex::from_named_facets(facets)
                .expect("names are reused from a valid complex");
            did_something = true;
        } else {
            // Kill surviving π₁ generators by coning their loops.
            let p = edge_path_presentation(&c, 0)
                .expect("host complex is connected and nonempty");
            let q = tietze_simplify(&p, DEFAULT_TIETZE_BUDGET);
            if !q.generators.is_empty() {
                let label_of: std::collections::BTreeMap<String, Simplex> = c
                    .simplices_of_dim(1)
                    .iter()
                    .map(|e| (c.simplex_label(e), e.clone()))
                    .collect();
                let (_, parent) = bfs_spanning_tree(&c, 0);
                let mut facets = facet_names(&c);
                for g in &q.generators {
                    let edge = label_of
                        .get(g)
                        .expect("surviving generators are edge labels")
                        .clone();
                    let vs = edge.vertices();
                    // The generator's loop: the tree path between the
                    // endpoints, closed up by the non-tree edge itself.
                    let cycle = tree_path(&parent, vs[0], vs[1]);
                    let apex = fresh_apex(&c, &mut apex_counter);
                    for pair in cycle.windows(2) {
                        facets.push(vec![
                            apex.clone(),
                            c.name(pair[0]).to_owned(),
                            c.name(pair[1]).to_owned(),
                        ]);
                    }
                    facets.push(vec![
                        apex.clone(),
                        c.name(vs[1]).to_owned(),
                        c.name(vs[0]).to_owned(),
                    ]);
                    trace.push(format!(
                        "pass {pass}: coned a triangulated disk with apex \
                         {apex} onto the loop of generator {g} \
                         (cycle length {})",
                        cycle.len() + 1
                    ));
                    did_something = true;
                }
                c = SimplicialComplex::from_named_facets(facets)
                    .expect("apex names are fresh");
            } else {
                // Kill middle-degree cycles: find the lowest degree with
                // nontrivial homology and cone off one kernel cycle whose
                // class is nonzero. Coning an actual boundary would
                // manufacture a sphere one degree up, so boundaries are
                // filtered out; one repair per pass keeps the boundary
                // tests current.
                for deg in 2..d {
                    if homology(&c, deg).expect("degree in range").is_trivial() {
                        continue;
                    }
                    let ch = boundary_matrices(&c).expect("nonempty");
                    let snf = snf_with_transform(&ch.boundaries[deg], true);
                    let basis = snf.kernel_basis().expect("transform requested");
                    let sims: Vec<Simplex> =
                        c.simplices_of_dim(deg).iter().cloned().collect();
                    let vector = basis
                        .iter()
                        .find(|v| !is_boundary(&ch.boundaries[deg + 1], v));
                    let Some(vector) = vector else { break };
                    let support: Vec<&Simplex> = vector
                        .iter()
                        .enumerate()
                        .filter(|(_, a)| **a != num_bigint::BigInt::ZERO)
                        .map(|(i, _)| &sims[i])
                        .collect();
                    let apex = fresh_apex(&c, &mut apex_counter);
                    let mut facets = facet_names(&c);
                    for s in &support {
                        let mut names: Vec<String> = vec![apex.clone()];
                        names.extend(
                            c.simplex_names(s).into_iter().map(str::to_owned),
                        );
                        facets.push(names);
                    }
                    trace.push(format!(
                        "pass {pass}: coned the support of a degree-{deg} \
                         kernel cycle ({} simplices) with apex {apex}",
                        support.len()
                    ));
                    did_something = true;
                    c = SimplicialComplex::from_named_facets(facets)
                        .expect("apex names are fresh");
                    break;
                }
            }
        }

        if !did_something {
            trace.push(format!(
                "pass {pass}: no applicable attachment remains but \
                 verification still fails"
            ));
            return Err(EmbedError::BudgetExhausted { passes: pass, trace });
        }
    }
    trace.push(format!(
        "pass budget of {budget} exhausted before verification succeeded"
    ));
    Err(EmbedError::BudgetExhausted { passes: budget, trace })
}

/// Dimension-dispatching front end: [`embed_dim1`] for complexes of
/// dimension ≤ 1, [`embed_general`] otherwise.
pub fn embed(k: &SimplicialComplex, budget: usize) -> Result<EmbedResult, EmbedError> {
    if k.is_empty() {
        return Err(EmbedError::NotApplicable("the complex is empty".into()));
    }
    if k.dimension().expect("nonempty") <= 1 {
        embed_dim1(k)
    } else {
        embed_general(k, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::all_homology;

    fn complex(facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_named_facets(
            facets.iter().map(|f| f.iter().map(|s| s.to_string()).collect()).collect(),
        )
        .unwrap()
    }

    fn circle6() -> SimplicialComplex {
        complex(&[&["a", "b"], &["b", "c"], &["c", "d"], &["d", "e"], &["e", "f"], &["a", "f"]])
    }

    fn annulus() -> SimplicialComplex {
        // Triangulated S¹ × [0, 1]: outer cycle a1 a2 a3, inner b1 b2 b3.
        complex(&[
            &["a1", "a2", "b1"],
            &["a2", "b1", "b2"],
            &["a2", "a3", "b2"],
            &["a3", "b2", "b3"],
            &["a1", "a3", "b3"],
            &["a1", "b1", "b3"],
        ])
    }

    fn sphere2() -> SimplicialComplex {
        complex(&[&["1", "2", "3"], &["1", "2", "4"], &["1", "3", "4"], &["2", "3", "4"]])
    }

    fn contains_all_facets(host: &SimplicialComplex, sub: &SimplicialComplex) {
        for f in sub.facets() {
            let names: Vec<&str> = sub.simplex_names(f);
            assert!(
                host.simplex_from_names(&names).is_ok(),
                "facet {names:?} missing from the host"
            );
        }
    }

    #[test]
    fn decision_examples() {
        // A circle has nonzero top cohomology.
        let d = embeddable_in_contractible(&circle6());
        assert_eq!(d.status, EmbedStatus::NotEmbeddable);
        assert!(d.note.is_none());
        // A path is a tree.
        let d = embeddable_in_contractible(&complex(&[&["a", "b"], &["b", "c"]]));
        assert_eq!(d.status, EmbedStatus::Embeddable);
        // The 2-sphere obstructs in its top degree.
        let d = embeddable_in_contractible(&sphere2());
        assert_eq!(d.status, EmbedStatus::NotEmbeddable);
        assert!(d.note.is_some());
        // A solid tetrahedron is 3-dimensional with trivial top cohomology.
        let d = embeddable_in_contractible(&complex(&[&["1", "2", "3", "4"]]));
        assert_eq!(d.status, EmbedStatus::Embeddable);
        // The annulus passes the dimension-2 criterion with a certificate.
        let d = embeddable_in_contractible(&annulus());
        assert_eq!(d.status, EmbedStatus::Embeddable);
        assert!(d.note.is_some());
        assert!(d.reason.contains("normal generation"));
    }

    #[test]
    fn decision_disconnected_dim2_is_unknown() {
        // Triangle ⊔ point: H² = 0 but no π₁ certificate is available.
        let k = complex(&[&["1", "2", "3"], &["z"]]);
        let d = embeddable_in_contractible(&k);
        assert_eq!(d.status, EmbedStatus::ConditionalUnknown);
        // And the builder refuses it with the same explanation.
        let err = embed_general(&k, 10).unwrap_err();
        assert!(matches!(err, EmbedError::NotApplicable(_)));
    }

    #[test]
    fn dim1_forest_becomes_tree() {
        let forest = complex(&[&["a", "b"], &["b", "c"], &["p", "q"], &["z"]]);
        let r = embed_dim1(&forest).unwrap();
        assert!(r.certified());
        assert!(r.complex.is_connected());
        assert_eq!(r.complex.vertex_count(), forest.vertex_count());
        assert_eq!(r.complex.simplices_of_dim(1).len(), 3 + 2);
        assert_eq!(r.complex.euler_characteristic(), 1);
        assert_eq!(r.trace.len(), 2);
        contains_all_facets(&r.complex, &forest);
        // A point and an already-connected tree come back unchanged.
        let point = complex(&[&["p"]]);
        let r = embed_dim1(&point).unwrap();
        assert!(r.certified());
        assert_eq!(r.complex.facets(), point.facets());
        assert!(r.trace.is_empty());
    }

    #[test]
    fn dim1_errors() {
        assert!(matches!(
            embed_dim1(&circle6()),
            Err(EmbedError::NotApplicable(m)) if m.contains("H_1")
        ));
        assert!(matches!(
            embed_dim1(&sphere2()),
            Err(EmbedError::NotApplicable(m)) if m.contains("dimension")
        ));
        assert!(matches!(
            embed_dim1(&SimplicialComplex::empty()),
            Err(EmbedError::NotApplicable(m)) if m.contains("empty")
        ));
    }

    #[test]
    fn general_annulus_certified() {
        let a = annulus();
        let r = embed_general(&a, DEFAULT_EMBED_BUDGET).unwrap();
        assert!(r.certified());
        assert_eq!(r.complex.dimension().unwrap(), 2);
        assert_eq!(r.complex.euler_characteristic(), 1);
        contains_all_facets(&r.complex, &a);
        assert!(!r.trace.is_empty());
        for g in all_homology(&r.complex).unwrap().iter().skip(1) {
            assert!(g.is_trivial());
        }
    }

    #[test]
    fn general_rejects_obstruction_and_low_dimension() {
        assert!(matches!(
            embed_general(&sphere2(), 10),
            Err(EmbedError::NotApplicable(m)) if m.contains("not embeddable")
        ));
        assert!(matches!(
            embed_general(&circle6(), 10),
            Err(EmbedError::NotApplicable(m)) if m.contains("dimension-1")
        ));
    }

    #[test]
    fn general_contractible_returned_unchanged() {
        let disk = complex(&[&["1", "2", "3"], &["2", "3", "4"]]);
        let r = embed_general(&disk, 10).unwrap();
        assert!(r.certified());
        assert!(r.trace.is_empty());
        assert_eq!(r.complex.facets(), disk.facets());
    }

    #[test]
    fn general_budget_exhaustion() {
        // One pass is spent coning the surviving loop, so verification
        // never gets to run on the repaired complex.
        let err = embed_general(&annulus(), 1).unwrap_err();
        match err {
            EmbedError::BudgetExhausted { passes, trace } => {
                assert_eq!(passes, 1);
                assert!(!trace.is_empty());
            }
            other => panic!("expected BudgetExhausted, got {other:?}"),
        }
    }

    #[test]
    fn general_kills_middle_homology() {
        // A 2-sphere wedged (at vertex 1) onto a solid tetrahedron: the
        // complex is 3-dimensional, H₂ = ℤ from the sphere, H³ = 0.
        let k = complex(&[
            &["1", "2", "3"],
            &["1", "2", "4"],
            &["1", "3", "4"],
            &["2", "3", "4"],
            &["1", "5", "6", "7"],
        ]);
        assert_eq!(homology(&k, 2).unwrap().betti, 1);
        let r = embed_general(&k, DEFAULT_EMBED_BUDGET).unwrap();
        assert!(r.certified());
        assert_eq!(r.complex.dimension().unwrap(), 3);
        assert_eq!(r.complex.euler_characteristic(), 1);
        contains_all_facets(&r.complex, &k);
        assert!(r.trace.iter().any(|t| t.contains("degree-2 kernel cycle")));
    }

    #[test]
    fn apex_names_dodge_existing_vertices() {
        // The annulus renamed so its vertices occupy w0..w5: the fresh
        // apexes must skip every one of them.
        let a = complex(&[
            &["w0", "w1", "w3"],
            &["w1", "w3", "w4"],
            &["w1", "w2", "w4"],
            &["w2", "w4", "w5"],
            &["w0", "w2", "w5"],
            &["w0", "w3", "w5"],
        ]);
        let r = embed_general(&a, DEFAULT_EMBED_BUDGET).unwrap();
        assert!(r.certified());
        for i in 0..6 {
            assert!(r.complex.id(&format!("w{i}")).is_some());
        }
        // Each original vertex name still labels a distinct vertex: no
        // accidental identification took place.
        assert!(r.complex.vertex_count() > 6);
        contains_all_facets(&r.complex, &a);
    }

    #[test]
    fn random_embeddable_complexes_get_certified_hosts() {
        let mut rng = crate::testutil::rng(0xec);
        let mut built = 0;
        for _ in 0..40 {
            let k = crate::testutil::random_complex(&mut rng, 7, 8);
            if k.is_empty() || k.dimension().unwrap() < 2 {
                continue;
            }
            if embeddable_in_contractible(&k).status != EmbedStatus::Embeddable {
                continue;
            }
            let r = match embed_general(&k, DEFAULT_EMBED_BUDGET) {
                Ok(r) => r,
                Err(e) => panic!("seeded input failed to embed: {e:?}"),
            };
            assert!(r.certified());
            assert_eq!(
                r.complex.dimension().unwrap(),
                k.dimension().unwrap(),
                "dimension must be preserved"
            );
            assert_eq!(r.complex.euler_characteristic(), 1);
            contains_all_facets(&r.complex, &k);
            built += 1;
        }
        assert!(built >= 5, "only {built} random cases exercised the builder");
    }
}
