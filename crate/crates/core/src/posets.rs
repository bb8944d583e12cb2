//! Posets and order complexes, dual cones, posets of groups over a nerve
//! (and their extension over an ambient complex), colimit presentations,
//! and the basic construction U(W, Y) for finite Coxeter groups, together
//! with its verification report.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::complex::{ComplexError, Simplex, SimplicialComplex, VertexId};
use crate::coxeter::{enumerate_group, is_finite, CoxeterError, CoxeterMatrix, EnumeratedGroup};
use crate::fungroup::{triviality_certificate, Certificate3, Letter, Presentation};
use crate::homology::reduced_homology_vanishes;
use crate::nerve::NerveLabeling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("not a partial order: {0}")]
    InvalidOrder(String),
    #[error("subcomplex is not full in the ambient complex")]
    NotFullSubcomplex,
    #[error("complex error: {0}")]
    Complex(#[from] ComplexError),
    #[error("group error: {0}")]
    Coxeter(#[from] CoxeterError),
}

// ---------------------------------------------------------------------
// Posets and order complexes
// ---------------------------------------------------------------------

/// A finite poset with uniquely named elements. The relation is stored as
/// the full ≤ matrix; the covering relation is derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// Row-major ≤ matrix (reflexive, antisymmetric, transitive).
    leq: Vec<bool>,
}

impl Poset {
    /// Builds a poset from the ≤ matrix, validating the order axioms and
    /// name uniqueness.
    pub fn from_leq(names: Vec<String>, leq: Vec<bool>) -> Result<Self, PosetError> {
        let n = names.len();
        if leq.len() != n * n {
            return Err(PosetError::InvalidOrder("relation matrix size mismatch".into()));
        }
        let set: BTreeSet<&String> = names.iter().collect();
        if set.len() != n {
            return Err(PosetError::InvalidOrder("duplicate element names".into()));
        }
        let at = |i: usize, j: usize| leq[i * n + j];
        for i in 0..n {
            if !at(i, i) {
                return Err(PosetError::InvalidOrder(format!("not reflexive at {}", names[i])));
            }
            for j in 0..n {
                if i != j && at(i, j) && at(j, i) {
                    return Err(PosetError::InvalidOrder(format!(
                        "antisymmetry fails on {} and {}",
                        names[i], names[j]
                    )));
                }
                for k in 0..n {
                    if at(i, j) && at(j, k) && !at(i, k) {
                        return Err(PosetError::InvalidOrder(format!(
                            "transitivity fails through {}",
                            names[j]
                        )));
                    }
                }
            }
        }
        Ok(Poset { names, leq })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Covering pairs `(i, j)` with `j` covering `i`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// All maximal chains, each a strictly increasing element list. A
    /// maximal chain is saturated, so these are exactly the cover-DAG paths
    /// from a minimal to a maximal element. Deterministic order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut covered_by: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, j) in self.covers() {
            covered_by[i].push(j);
        }
        let minimal: Vec<usize> =
            (0..n).filter(|&i| (0..n).all(|j| !self.lt(j, i))).collect();
        let mut chains = Vec::new();
        let mut stack: Vec<Vec<usize>> = minimal.into_iter().rev().map(|m| vec![m]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("chains are nonempty");
            if covered_by[last].is_empty() {
                chains.push(chain);
                continue;
            }
            for &next in covered_by[last].iter().rev() {
                let mut ext = chain.clone();
                ext.push(next);
                stack.push(ext);
            }
        }
        chains
    }

    /// The order complex: vertices are the elements, simplices the chains;
    /// facets are the maximal chains.
    pub fn order_complex(&self) -> SimplicialComplex {
        let named: Vec<Vec<String>> = self
            .maximal_chains()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.names[i].clone()).collect())
            .collect();
        SimplicialComplex::from_named_facets(named).expect("poset names are valid vertex names")
    }
}

/// The face poset P(K): all simplices of `K` ordered by inclusion, named by
/// their dot-joined vertex labels. `K` must be nonempty.
pub fn face_poset(k: &SimplicialComplex) -> Poset {
    assert!(!k.is_empty(), "face poset of the empty complex");
    let simplices = all_simplices(k);
    let n = simplices.len();
    let names: Vec<String> = simplices.iter().map(|s| k.simplex_label(s)).collect();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = simplices[i].is_face_of(&simplices[j]);
        }
    }
    Poset::from_leq(names, leq).expect("face inclusion is a partial order")
}

fn all_simplices(k: &SimplicialComplex) -> Vec<Simplex> {
    let mut out = Vec::new();
    for d in 0..=k.dim_or_zero() {
        out.extend(k.simplices_of_dim(d).iter().cloned());
    }
    out
}

/// A fresh label for the adjoined bottom element: `-`, extended with more
/// dashes if a simplex label already uses it.
fn bottom_label(taken: &[String]) -> String {
    let mut label = "-".to_string();
    while taken.iter().any(|n| n == &label) {
        label.push('-');
    }
    label
}

/// The augmented poset S(K) = P(K) ∪ {∅}: the face poset with a unique
/// bottom element adjoined (element 0).
pub fn augmented_poset(k: &SimplicialComplex) -> Poset {
    let p = face_poset(k);
    let n = p.len() + 1;
    let mut names = vec![bottom_label(&p.names)];
    names.extend(p.names.iter().cloned());
    let mut leq = vec![false; n * n];
    leq[..n].fill(true); // bottom ≤ everything
    for i in 0..p.len() {
        leq[(i + 1) * n] = false;
        for j in 0..p.len() {
            leq[(i + 1) * n + (j + 1)] = p.leq(i, j);
        }
    }
    leq[0] = true;
    Poset::from_leq(names, leq).expect("augmentation preserves the order axioms")
}

/// The dual cone of a simplex `s ∈ K`: the subcomplex of the barycentric
/// subdivision spanned by the chains starting at or above `s`. Isomorphic
/// to the cone on the barycentric subdivision of the link of `s`.
pub fn dual_cone(k: &SimplicialComplex, s: &Simplex) -> Result<SimplicialComplex, ComplexError> {
    if !k.contains_simplex(s) {
        return Err(ComplexError::NotASimplex(k.simplex_label(s)));
    }
    let up: Vec<Simplex> =
        all_simplices(k).into_iter().filter(|t| s.is_face_of(t)).collect();
    let n = up.len();
    let names: Vec<String> = up.iter().map(|t| k.simplex_label(t)).collect();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = up[i].is_face_of(&up[j]);
        }
    }
    let poset = Poset::from_leq(names, leq).expect("restriction of a partial order");
    Ok(poset.order_complex())
}

// ---------------------------------------------------------------------
// Posets of groups
// ---------------------------------------------------------------------

/// A poset of groups: each element carries a generator subset (the local
/// group is the Artin/Coxeter group on that subset; the empty subset is the
/// trivial group), monotone along the order.
#[derive(Debug, Clone)]
pub struct PosetOfGroups {
    pub poset: Poset,
    /// Per element: sorted 0-based generator indices; empty = trivial group.
    labels: Vec<Vec<usize>>,
    /// Per element: the source simplex (`None` for an adjoined bottom).
    simplices: Vec<Option<Simplex>>,
}

impl PosetOfGroups {
    pub fn label(&self, i: usize) -> &[usize] {
        &self.labels[i]
    }

    pub fn is_trivial(&self, i: usize) -> bool {
        self.labels[i].is_empty()
    }

    pub fn simplex(&self, i: usize) -> Option<&Simplex> {
        self.simplices[i].as_ref()
    }

    /// The defining invariant: σ ≤ τ implies label(σ) ⊆ label(τ).
    pub fn check_monotone(&self) -> bool {
        let n = self.poset.len();
        for i in 0..n {
            for j in 0..n {
                if self.poset.leq(i, j)
                    && !self.labels[i].iter().all(|g| self.labels[j].contains(g))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// The Artin poset of groups over S(L): every nerve simplex is labeled by
/// its generator subset, the bottom ∅ by the trivial group.
pub fn artin_poset_of_groups(nerve: &NerveLabeling) -> PosetOfGroups {
    let poset = augmented_poset(&nerve.complex);
    let simplices = all_simplices(&nerve.complex);
    let mut labels = vec![Vec::new()];
    let mut simp = vec![None];
    for s in simplices {
        labels.push(nerve.generators_of(&s));
        simp.push(Some(s));
    }
    let g = PosetOfGroups { poset, labels, simplices: simp };
    debug_assert!(g.check_monotone());
    g
}

/// Extends a poset of groups over L to one over P(C), for a full subcomplex
/// L ⊆ C: each simplex σ of C is labeled by the label of σ ∩ L (the maximal
/// simplex of L below σ, unique by fullness), or trivially when disjoint
/// from L. The colimit presentation is unchanged by this extension.
pub fn extend_over_embedding(
    g: &PosetOfGroups,
    c: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<PosetOfGroups, PosetError> {
    if !c.is_full_subcomplex(l)? {
        return Err(PosetError::NotFullSubcomplex);
    }
    // Label lookup by vertex-name set.
    let mut by_names: BTreeMap<Vec<String>, &[usize]> = BTreeMap::new();
    for (i, s) in g.simplices.iter().enumerate() {
        if let Some(s) = s {
            let key: Vec<String> =
                l.simplex_names(s).iter().map(|n| n.to_string()).collect();
            by_names.insert(key, &g.labels[i]);
        }
    }
    let l_vertices: BTreeSet<&String> = l.vertex_names().iter().collect();

    let poset = face_poset(c);
    let simplices = all_simplices(c);
    let mut labels = Vec::with_capacity(simplices.len());
    for s in &simplices {
        let meet: Vec<String> = c
            .simplex_names(s)
            .iter()
            .filter(|n| l_vertices.contains(&n.to_string()))
            .map(|n| n.to_string())
            .collect();
        if meet.is_empty() {
            labels.push(Vec::new());
        } else {
            let label = by_names.get(&meet).unwrap_or_else(|| {
                panic!("σ ∩ L = {meet:?} is not labeled; the input poset of groups must cover L")
            });
            labels.push(label.to_vec());
        }
    }
    let out = PosetOfGroups {
        poset,
        labels,
        simplices: simplices.into_iter().map(Some).collect(),
    };
    debug_assert!(out.check_monotone());
    Ok(out)
}

/// The colimit (direct limit) presentation of a poset of groups over the
/// Coxeter matrix `m`: one generator per index appearing in a label, and
/// for every pair inside some label the braid relation of length m_ij —
/// the alternating words `a_i a_j a_i …` and `a_j a_i a_j …` identified.
pub fn colimit_presentation(g: &PosetOfGroups, m: &CoxeterMatrix) -> Presentation {
    let mut used: BTreeSet<usize> = BTreeSet::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for label in &g.labels {
        used.extend(label.iter().copied());
        for (a, &i) in label.iter().enumerate() {
            for &j in &label[a + 1..] {
                pairs.insert((i.min(j), i.max(j)));
            }
        }
    }
    let used: Vec<usize> = used.into_iter().collect();
    let local: BTreeMap<usize, usize> =
        used.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    let generators: Vec<String> = used.iter().map(|&i| format!("a{}", i + 1)).collect();

    let alternating = |first: usize, second: usize, len: u32| -> Vec<Letter> {
        (0..len)
            .map(|t| if t % 2 == 0 { (first, false) } else { (second, false) })
            .collect()
    };
    let mut relators = Vec::new();
    for (i, j) in pairs {
        let crate::coxeter::Mij::Fin(mij) = m.entry(i, j) else {
            unreachable!("pair inside a spherical label has a finite entry");
        };
        let (li, lj) = (local[&i], local[&j]);
        let mut word = alternating(li, lj, mij);
        let rhs = alternating(lj, li, mij);
        word.extend(rhs.into_iter().rev().map(|(g, inv)| (g, !inv)));
        relators.push(word);
    }
    Presentation::new(generators, relators)
}

// ---------------------------------------------------------------------
// The basic construction
// ---------------------------------------------------------------------

/// Printable label of a generator subset (1-based, dot-joined; `-` for ∅).
fn subset_label(s: &[usize]) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.iter().map(|&i| (i + 1).to_string()).collect::<Vec<_>>().join(".")
    }
}

/// The basic construction U(W, Y) for a finite Coxeter group W: Y is the
/// order complex of S(Δ) on the full generator simplex, and U glues one
/// copy of Y per group element, identified along parabolic cosets. Vertices
/// are pairs (coset, subset) named `c{rep}.{subset label}`, where `rep` is
/// the minimal element index of the coset in enumeration order; W acts by
/// left translation on the cosets. The identity-coset copy of Y is a
/// strict fundamental domain.
pub struct BasicConstructionComplex {
    pub complex: SimplicialComplex,
    pub group: EnumeratedGroup,
    /// All generator subsets, ordered by (size, lexicographic); stratum ids
    /// index this list.
    strata: Vec<Vec<usize>>,
    /// Per stratum: coset representative (minimal element index) of every
    /// group element.
    rep: Vec<Vec<usize>>,
    /// Vertex id → (coset representative, stratum id).
    vertex_data: Vec<(usize, usize)>,
    /// The identity-coset vertices, one per stratum.
    pub domain: Vec<VertexId>,
}

impl BasicConstructionComplex {
    pub fn strata(&self) -> &[Vec<usize>] {
        &self.strata
    }

    pub fn coset_rep(&self, v: VertexId) -> usize {
        self.vertex_data[v as usize].0
    }

    pub fn stratum_of(&self, v: VertexId) -> &[usize] {
        &self.strata[self.vertex_data[v as usize].1]
    }

    fn vertex_id(&self, rep: usize, stratum: usize) -> VertexId {
        let name = format!("c{rep}.{}", subset_label(&self.strata[stratum]));
        self.complex.id(&name).expect("basic-construction vertices are named canonically")
    }

    /// The vertex permutation induced by left translation by element `w`.
    pub fn element_action(&self, w: usize) -> Vec<VertexId> {
        (0..self.complex.vertex_count() as VertexId)
            .map(|v| {
                let (r, si) = self.vertex_data[v as usize];
                let moved = self.group.mul_indices(w, r);
                self.vertex_id(self.rep[si][moved], si)
            })
            .collect()
    }

    /// The vertex permutation of the i-th Coxeter generator.
    pub fn generator_action(&self, i: usize) -> Vec<VertexId> {
        let g = self
            .group
            .index_of(&self.group.model.generator(i))
            .expect("generators are enumerated");
        self.element_action(g)
    }

    /// The quotient by the action: every vertex collapses to its stratum.
    pub fn quotient(&self) -> SimplicialComplex {
        let named: Vec<Vec<String>> = self
            .complex
            .facets()
            .iter()
            .map(|f| {
                f.vertices()
                    .iter()
                    .map(|&v| subset_label(self.stratum_of(v)))
                    .collect()
            })
            .collect();
        SimplicialComplex::from_named_facets(named).expect("subset labels are valid names")
    }

    /// The fundamental domain Y as a complex (order complex of S(Δ)),
    /// with the identity-coset prefix stripped from the vertex names.
    pub fn domain_complex(&self) -> SimplicialComplex {
        let named: Vec<Vec<String>> = self
            .complex
            .facets()
            .iter()
            .filter(|f| f.vertices().iter().all(|&v| self.coset_rep(v) == 0))
            .map(|f| {
                f.vertices()
                    .iter()
                    .map(|&v| {
                        self.complex
                            .name(v)
                            .strip_prefix("c0.")
                            .expect("domain vertices are identity cosets")
                            .to_string()
                    })
                    .collect()
            })
            .collect();
        SimplicialComplex::from_named_facets(named).expect("domain names are valid")
    }
}

/// Builds the basic construction for a finite Coxeter matrix. Fails with
/// `NotFinite` or `CapExceeded` exactly as group enumeration does.
pub fn basic_construction(
    m: &CoxeterMatrix,
    cap: usize,
) -> Result<BasicConstructionComplex, CoxeterError> {
    if !is_finite(m) {
        return Err(CoxeterError::NotFinite);
    }
    let group = enumerate_group(m, cap)?;
    let n = m.rank();
    let order = group.len();

    // All generator subsets by (size, lex) — the augmented face poset of
    // the full simplex.
    let mut strata: Vec<Vec<usize>> = (0..1u64 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect();
    strata.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    // Minimal coset representatives per stratum, by ascending scan + BFS
    // over right multiplication by the stratum's generators.
    let gen_index: Vec<usize> = (0..n)
        .map(|i| group.index_of(&group.model.generator(i)).expect("generator enumerated"))
        .collect();
    let mut rep: Vec<Vec<usize>> = Vec::with_capacity(strata.len());
    for s in &strata {
        let mut r = vec![usize::MAX; order];
        for w in 0..order {
            if r[w] != usize::MAX {
                continue;
            }
            r[w] = w;
            let mut queue = VecDeque::from([w]);
            while let Some(x) = queue.pop_front() {
                for &g in s {
                    let y = group.mul_indices(x, gen_index[g]);
                    if r[y] == usize::MAX {
                        r[y] = w;
                        queue.push_back(y);
                    }
                }
            }
        }
        rep.push(r);
    }

    // Facets: one per (group element, maximal chain of subsets). Maximal
    // chains of the Boolean lattice are generator orderings.
    let mut named_facets: Vec<Vec<String>> = Vec::new();
    let stratum_id: BTreeMap<&Vec<usize>, usize> =
        strata.iter().enumerate().map(|(i, s)| (s, i)).collect();
    use itertools::Itertools;
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let chains: Vec<Vec<usize>> = if n == 0 {
        vec![vec![0]]
    } else {
        perms
            .iter()
            .map(|p| {
                let mut acc: Vec<usize> = Vec::new();
                let mut chain = vec![stratum_id[&acc]];
                for &g in p {
                    acc.push(g);
                    acc.sort_unstable();
                    chain.push(stratum_id[&acc.clone()]);
                }
                chain
            })
            .collect()
    };
    // `w` indexes per-stratum representative tables, so a range loop it is.
    #[allow(clippy::needless_range_loop)]
    for w in 0..order {
        for chain in &chains {
            named_facets.push(
                chain
                    .iter()
                    .map(|&si| format!("c{}.{}", rep[si][w], subset_label(&strata[si])))
                    .collect(),
            );
        }
    }
    let complex =
        SimplicialComplex::from_named_facets(named_facets).expect("canonical vertex names");

    // Vertex data and the identity-coset domain.
    let mut vertex_data = vec![(0usize, 0usize); complex.vertex_count()];
    let mut domain = Vec::new();
    for (si, s) in strata.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &r in &rep[si] {
            if seen.insert(r) {
                let name = format!("c{r}.{}", subset_label(s));
                let v = complex.id(&name).expect("vertex was emitted with a facet");
                vertex_data[v as usize] = (r, si);
                if r == 0 {
                    domain.push(v);
                }
            }
        }
    }
    domain.sort_unstable();

    Ok(BasicConstructionComplex { complex, group, strata, rep, vertex_data, domain })
}

/// The verification report for a basic construction.
#[derive(Debug, Clone)]
pub struct BasicConstructionReport {
    /// Every generator's vertex permutation maps facets to facets.
    pub action_simplicial: bool,
    /// Only the identity fixes the identity coset at the ∅ stratum.
    pub action_faithful: bool,
    /// Vertex orbits each meet the fundamental domain exactly once, and
    /// the stabilizer overlap at each domain vertex is exactly W_S.
    pub strict_fundamental_domain: bool,
    /// #vertices = Σ_S |W| / |W_S|.
    pub vertex_formula: bool,
    pub euler_characteristic_one: bool,
    pub reduced_homology_vanishes: bool,
    pub pi1_trivial: Certificate3,
    /// The quotient by the action equals Y, the order complex of S(Δ).
    pub quotient_matches: bool,
}

impl BasicConstructionReport {
    pub fn all_pass(&self) -> bool {
        self.action_simplicial
            && self.action_faithful
            && self.strict_fundamental_domain
            && self.vertex_formula
            && self.euler_characteristic_one
            && self.reduced_homology_vanishes
            && self.pi1_trivial.is_verified()
            && self.quotient_matches
    }

    pub fn lines(&self) -> Vec<String> {
        let yn = |b: bool| if b { "pass" } else { "FAIL" };
        vec![
            format!("action simplicial: {}", yn(self.action_simplicial)),
            format!("action faithful: {}", yn(self.action_faithful)),
            format!("strict fundamental domain: {}", yn(self.strict_fundamental_domain)),
            format!("vertex count formula: {}", yn(self.vertex_formula)),
            format!("euler characteristic 1: {}", yn(self.euler_characteristic_one)),
            format!("reduced homology vanishes: {}", yn(self.reduced_homology_vanishes)),
            format!("pi1 trivial: {} ({})", self.pi1_trivial.status, self.pi1_trivial.witness),
            format!("quotient matches Y: {}", yn(self.quotient_matches)),
        ]
    }
}

/// Runs every check on a basic construction.
pub fn verify_basic_construction(u: &BasicConstructionComplex) -> BasicConstructionReport {
    let order = u.group.len();
    let facet_set: BTreeSet<&Simplex> = u.complex.facets().iter().collect();

    // (a) simplicial: generators map facets to facets (composites follow).
    let mut action_simplicial = true;
    for i in 0..u.group.model.rank() {
        let act = u.generator_action(i);
        for f in u.complex.facets() {
            let image = Simplex::new(f.vertices().iter().map(|&v| act[v as usize]).collect());
            if !facet_set.contains(&image) {
                action_simplicial = false;
            }
        }
    }

    // (b) faithful: w fixing the identity ∅-vertex forces w = identity.
    let empty_stratum = u
        .strata
        .iter()
        .position(|s| s.is_empty())
        .expect("the empty stratum always exists");
    let id_vertex = u.vertex_id(0, empty_stratum);
    let mut action_faithful = true;
    for w in 1..order {
        let moved = u.group.mul_indices(w, 0);
        if u.vertex_id(u.rep[empty_stratum][moved], empty_stratum) == id_vertex {
            action_faithful = false;
        }
    }

    // (c) strict domain: per stratum, the orbit of the domain vertex is all
    // of the stratum, and the stabilizer is exactly W_S.
    let mut strict = u.domain.len() == u.strata.len();
    for (si, s) in u.strata.iter().enumerate() {
        let subgroup = u.group.subgroup_indices(s);
        let reps: BTreeSet<usize> = (0..order).map(|w| u.rep[si][w]).collect();
        // Orbit of the identity-coset vertex covers the stratum:
        let orbit: BTreeSet<usize> = (0..order).map(|w| u.rep[si][u.group.mul_indices(w, 0)]).collect();
        if orbit != reps {
            strict = false;
        }
        // Stabilizer of the domain vertex = W_S:
        let stab: Vec<usize> = (0..order).filter(|&w| u.rep[si][w] == 0).collect();
        if stab != subgroup {
            strict = false;
        }
    }

    // (d) vertex count formula Σ |W| / |W_S|.
    let mut expected = 0usize;
    for s in &u.strata {
        expected += order / u.group.subgroup_indices(s).len();
    }
    let vertex_formula = expected == u.complex.vertex_count();

    let euler_characteristic_one = u.complex.euler_characteristic() == 1;
    let reduced_homology = reduced_homology_vanishes(&u.complex)
        .expect("basic constructions are nonempty");
    let pi1 = triviality_certificate(&u.complex)
        .unwrap_or_else(|e| Certificate3::unknown(format!("π₁ check unavailable: {e}")));

    // (e) the quotient equals Y.
    let y = augmented_poset(&full_simplex(u.group.model.rank())).order_complex();
    let quotient_matches = u.quotient() == y && u.domain_complex() == y;

    BasicConstructionReport {
        action_simplicial,
        action_faithful,
        strict_fundamental_domain: strict,
        vertex_formula,
        euler_characteristic_one,
        reduced_homology_vanishes: reduced_homology,
        pi1_trivial: pi1,
        quotient_matches,
    }
}

/// The full simplex on generators 1..n (1-based decimal names).
fn full_simplex(n: usize) -> SimplicialComplex {
    let facet: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    SimplicialComplex::from_named_facets(vec![facet]).expect("decimal names are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{Mij, DEFAULT_ENUM_CAP};
    use crate::fungroup::Status3;
    use crate::nerve::build_nerve;

    fn cx(facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets).unwrap()
    }

    #[test]
    fn face_and_augmented_poset_counts() {
        let edge = cx(&[&["a", "b"]]);
        assert_eq!(face_poset(&edge).len(), 3);
        assert_eq!(augmented_poset(&edge).len(), 4);

        let triangle = cx(&[&["a", "b", "c"]]);
        assert_eq!(face_poset(&triangle).len(), 7);
        assert_eq!(augmented_poset(&triangle).len(), 8);

        let point = cx(&[&["a"]]);
        assert_eq!(face_poset(&point).len(), 1);
        assert_eq!(augmented_poset(&point).len(), 2);
    }

    #[test]
    fn order_complex_examples() {
        // P(edge): path of two edges a – a.b – b.
        let edge = cx(&[&["a", "b"]]);
        let oc = face_poset(&edge).order_complex();
        assert_eq!(oc, cx(&[&["a", "a.b"], &["b", "a.b"]]));

        // S(edge): the cone over that path.
        let soc = augmented_poset(&edge).order_complex();
        assert_eq!(soc, cx(&[&["-", "a", "a.b"], &["-", "b", "a.b"]]));

        // An antichain of two elements: two points.
        let p = Poset::from_leq(
            vec!["x".into(), "y".into()],
            vec![true, false, false, true],
        )
        .unwrap();
        assert_eq!(p.order_complex(), cx(&[&["x"], &["y"]]));
    }

    #[test]
    fn poset_validation() {
        assert!(matches!(
            Poset::from_leq(vec!["x".into(), "x".into()], vec![true; 4]),
            Err(PosetError::InvalidOrder(_))
        ));
        // Not antisymmetric.
        assert!(matches!(
            Poset::from_leq(vec!["x".into(), "y".into()], vec![true, true, true, true]),
            Err(PosetError::InvalidOrder(_))
        ));
        // Not transitive: x<y, y<z, but not x<z.
        let names = vec!["x".into(), "y".into(), "z".into()];
        let leq = vec![
            true, true, false, //
            false, true, true, //
            false, false, true,
        ];
        assert!(matches!(Poset::from_leq(names, leq), Err(PosetError::InvalidOrder(_))));
    }

    #[test]
    fn order_complex_of_face_poset_is_barycentric_subdivision() {
        let mut r = crate::testutil::rng(51);
        let mut tested = 0;
        while tested < 15 {
            let k = crate::testutil::random_complex(&mut r, 7, 6);
            if k.is_empty() {
                continue;
            }
            tested += 1;
            let oc = face_poset(&k).order_complex();
            let bary = k.barycentric_subdivision().unwrap();
            assert_eq!(oc, bary, "source {}", k.to_text());
        }
    }

    #[test]
    fn dual_cone_examples() {
        let triangle = cx(&[&["a", "b", "c"]]);
        // Top-dimensional simplex → a point.
        let top = triangle.simplex_from_names(&["a", "b", "c"]).unwrap();
        let d = dual_cone(&triangle, &top).unwrap();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.dimension().unwrap(), 0);

        // Codimension 1 → cone on a discrete set (here: one cofacet).
        let edge = triangle.simplex_from_names(&["a", "b"]).unwrap();
        let d = dual_cone(&triangle, &edge).unwrap();
        assert_eq!(d, cx(&[&["a.b", "a.b.c"]]));

        // Vertex of Δ² → cone over the subdivided opposite edge.
        let v = triangle.simplex_from_names(&["a"]).unwrap();
        let d = dual_cone(&triangle, &v).unwrap();
        assert_eq!(d, cx(&[&["a", "a.b", "a.b.c"], &["a", "a.c", "a.b.c"]]));

        // Missing simplex → error.
        let square = cx(&[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]]);
        let diag = square.simplex_from_names(&["a", "c"]).unwrap();
        assert!(matches!(dual_cone(&square, &diag), Err(ComplexError::NotASimplex(_))));
    }

    #[test]
    fn dual_cone_is_cone_on_subdivided_link() {
        let mut r = crate::testutil::rng(52);
        let mut tested = 0;
        while tested < 12 {
            let k = crate::testutil::random_complex(&mut r, 5, 5);
            if k.is_empty() {
                continue;
            }
            // Test every simplex of the complex.
            for d in 0..=k.dim_or_zero() {
                for s in k.simplices_of_dim(d) {
                    let dc = dual_cone(&k, s).unwrap();
                    let link = k.link(s).unwrap();
                    let expected = if link.is_empty() {
                        cx(&[&["apex"]])
                    } else {
                        link.barycentric_subdivision().unwrap().cone("apex").unwrap()
                    };
                    assert!(
                        dc.is_isomorphic(&expected).unwrap(),
                        "simplex {} of {}",
                        k.simplex_label(s),
                        k.to_text()
                    );
                }
            }
            tested += 1;
        }
    }

    #[test]
    fn artin_poset_examples() {
        // Nerve of a single generator: two elements, ∅ and {1}.
        let m = CoxeterMatrix::all_twos(1).unwrap();
        let g = artin_poset_of_groups(&build_nerve(&m));
        assert_eq!(g.poset.len(), 2);
        assert_eq!(g.label(0), &[] as &[usize]);
        assert_eq!(g.label(1), &[0]);
        assert!(g.check_monotone());

        // Nerve an edge {1,2}: labels ∅, {1}, {2}, {1,2}.
        let m = CoxeterMatrix::all_twos(2).unwrap();
        let g = artin_poset_of_groups(&build_nerve(&m));
        assert_eq!(g.poset.len(), 4);
        let mut labels: Vec<Vec<usize>> = (0..4).map(|i| g.label(i).to_vec()).collect();
        labels.sort();
        assert_eq!(labels, vec![vec![], vec![0], vec![0, 1], vec![1]]);

        // Monotonicity on the E₈ nerve.
        let mut entries: Vec<(usize, usize, Mij)> =
            (0..6).map(|i| (i, i + 1, Mij::Fin(3))).collect();
        entries.push((2, 7, Mij::Fin(3)));
        let m = CoxeterMatrix::from_entries(8, &entries).unwrap();
        let g = artin_poset_of_groups(&build_nerve(&m));
        assert_eq!(g.poset.len(), 256);
        assert!(g.check_monotone());
    }

    #[test]
    fn extend_over_embedding_examples() {
        // L = edge ab inside C = path a-b-c (full: induced on {a,b} = L).
        let l = cx(&[&["a", "b"]]);
        let c = cx(&[&["a", "b"], &["b", "c"]]);
        let m = CoxeterMatrix::all_twos(2).unwrap();
        // A poset of groups over P(L), with vertex a ↦ generator 0 and
        // vertex b ↦ generator 1.
        let poset = face_poset(&l);
        let simplices = super::all_simplices(&l);
        let labels: Vec<Vec<usize>> = simplices
            .iter()
            .map(|s| {
                l.simplex_names(s)
                    .iter()
                    .map(|n| if *n == "a" { 0usize } else { 1usize })
                    .collect()
            })
            .collect();
        let g = PosetOfGroups {
            poset,
            labels,
            simplices: simplices.into_iter().map(Some).collect(),
        };
        assert!(g.check_monotone());

        let ext = extend_over_embedding(&g, &c, &l).unwrap();
        assert!(ext.check_monotone());
        // Element for edge {b,c}: labeled by label({b}) = {1}.
        let idx = (0..ext.poset.len()).find(|&i| ext.poset.name(i) == "b.c").unwrap();
        assert_eq!(ext.label(idx), &[1]);
        // Vertex c is disjoint from L → trivial.
        let idx = (0..ext.poset.len()).find(|&i| ext.poset.name(i) == "c").unwrap();
        assert!(ext.is_trivial(idx));
        // Identity case: extending over L itself keeps the labels.
        let same = extend_over_embedding(&g, &l, &l).unwrap();
        for i in 0..same.poset.len() {
            let j = (0..g.poset.len())
                .find(|&j| g.poset.name(j) == same.poset.name(i))
                .unwrap();
            assert_eq!(same.label(i), g.label(j));
        }
        // Colimit presentations agree before and after extension.
        assert_eq!(
            colimit_presentation(&g, &m),
            colimit_presentation(&ext, &m)
        );

        // Non-full subcomplex → error.
        let c2 = cx(&[&["a", "b", "c"]]);
        let l2 = cx(&[&["a"], &["b"]]);
        assert!(matches!(
            extend_over_embedding(&g, &c2, &l2),
            Err(PosetError::NotFullSubcomplex)
        ));
    }

    #[test]
    fn colimit_presentation_examples() {
        // Rank 2, m = 3 → the braid relation.
        let m = CoxeterMatrix::path(&[3]).unwrap();
        let g = artin_poset_of_groups(&build_nerve(&m));
        let p = colimit_presentation(&g, &m);
        assert_eq!(p.generators, vec!["a1", "a2"]);
        assert_eq!(p.relators.len(), 1);
        assert_eq!(
            p.relators[0],
            vec![(0, false), (1, false), (0, false), (1, true), (0, true), (1, true)]
        );
        // Abelianization: the braid relation merges the two generators.
        assert_eq!(p.abelianization(), (1, vec![]));

        // Right-angled path 2–1–3: two commutator relations, none for 2,3.
        let m = CoxeterMatrix::from_entries(3, &[(1, 2, Mij::Inf)]).unwrap();
        let g = artin_poset_of_groups(&build_nerve(&m));
        let p = colimit_presentation(&g, &m);
        assert_eq!(p.generators.len(), 3);
        assert_eq!(p.relators.len(), 2);
        assert_eq!(p.abelianization(), (3, vec![]));

        // A single vertex → free of rank 1.
        let m = CoxeterMatrix::all_twos(1).unwrap();
        let g = artin_poset_of_groups(&build_nerve(&m));
        let p = colimit_presentation(&g, &m);
        assert_eq!(p.generators.len(), 1);
        assert!(p.relators.is_empty());

        // A(3): all three generators merge (odd braid labels chain them).
        let m = CoxeterMatrix::path(&[3, 3]).unwrap();
        let g = artin_poset_of_groups(&build_nerve(&m));
        let p = colimit_presentation(&g, &m);
        assert_eq!(p.abelianization(), (1, vec![]));
    }

    #[test]
    fn basic_construction_rank_one() {
        let m = CoxeterMatrix::all_twos(1).unwrap();
        let u = basic_construction(&m, DEFAULT_ENUM_CAP).unwrap();
        // A path of two edges: c0.- — c0.1 — c1.-.
        assert_eq!(u.complex, cx(&[&["c0.-", "c0.1"], &["c0.1", "c1.-"]]));
        assert_eq!(u.domain.len(), 2);
        let report = verify_basic_construction(&u);
        assert!(report.all_pass(), "{:?}", report.lines());
    }

    #[test]
    fn basic_construction_i23() {
        let m = CoxeterMatrix::path(&[3]).unwrap();
        let u = basic_construction(&m, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(u.complex.vertex_count(), 6 + 3 + 3 + 1);
        assert_eq!(u.complex.euler_characteristic(), 1);
        assert!(reduced_homology_vanishes(&u.complex).unwrap());
        let report = verify_basic_construction(&u);
        assert!(report.all_pass(), "{:?}", report.lines());
    }

    #[test]
    fn basic_construction_square() {
        // W = A₁ × A₁: the 4-chamber square.
        let m = CoxeterMatrix::all_twos(2).unwrap();
        let u = basic_construction(&m, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(u.complex.vertex_count(), 4 + 2 + 2 + 1);
        let report = verify_basic_construction(&u);
        assert!(report.all_pass(), "{:?}", report.lines());
        assert_eq!(report.pi1_trivial.status, Status3::Verified);
    }

    #[test]
    fn basic_construction_a3_vertex_formula() {
        let m = CoxeterMatrix::path(&[3, 3]).unwrap();
        let u = basic_construction(&m, DEFAULT_ENUM_CAP).unwrap();
        // Σ |W|/|W_S| = 24 + 3·12 + (4 + 6 + 4) + 1.
        assert_eq!(u.complex.vertex_count(), 24 + 36 + 14 + 1);
        let report = verify_basic_construction(&u);
        assert!(report.all_pass(), "{:?}", report.lines());
    }

    #[test]
    fn basic_construction_errors_and_determinism() {
        let inf = CoxeterMatrix::from_entries(2, &[(0, 1, Mij::Inf)]).unwrap();
        assert!(matches!(
            basic_construction(&inf, DEFAULT_ENUM_CAP),
            Err(CoxeterError::NotFinite)
        ));
        let h3 = CoxeterMatrix::path(&[5, 3]).unwrap();
        assert!(matches!(basic_construction(&h3, 10), Err(CoxeterError::CapExceeded { .. })));

        let m = CoxeterMatrix::path(&[3]).unwrap();
        let u1 = basic_construction(&m, DEFAULT_ENUM_CAP).unwrap();
        let u2 = basic_construction(&m, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(u1.complex.to_text(), u2.complex.to_text());
        assert_eq!(u1.domain, u2.domain);
        for i in 0..2 {
            assert_eq!(u1.generator_action(i), u2.generator_action(i));
        }
    }

    #[test]
    fn basic_construction_action_table() {
        let m = CoxeterMatrix::all_twos(1).unwrap();
        let u = basic_construction(&m, DEFAULT_ENUM_CAP).unwrap();
        let act = u.generator_action(0);
        // The generator swaps the two ∅-vertices and fixes the cone point.
        let v_id = u.complex.id("c0.-").unwrap() as usize;
        let v_s = u.complex.id("c1.-").unwrap() as usize;
        let v_cone = u.complex.id("c0.1").unwrap() as usize;
        assert_eq!(act[v_id] as usize, v_s);
        assert_eq!(act[v_s] as usize, v_id);
        assert_eq!(act[v_cone] as usize, v_cone);
    }
}
