//! Abstract simplicial complexes and the constructions applied to nerves:
//! links, barycentric subdivision, cones, joins, flagness, octahedralization,
//! full subcomplexes, and isomorphism testing.
//!
//! Vertices are opaque named identifiers with a total order (the lexicographic
//! order on their ASCII names); a complex stores its facets (maximal faces)
//! and materializes the face closure lazily. All values are immutable after
//! construction and every operation is a pure function.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{LazyLock, OnceLock};

use thiserror::Error;

use crate::ParseError;

/// Index of a vertex into its complex's sorted name table.
pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("operation requires a nonempty complex")]
    EmptyComplex,
    #[error("not a simplex of the complex: {{{0}}}")]
    NotASimplex(String),
    #[error("vertex name clash: {0}")]
    VertexClash(String),
    #[error("complex with {0} vertices exceeds the 24-vertex isomorphism-search bound")]
    TooLarge(usize),
    #[error("unknown vertex name: {0}")]
    UnknownVertex(String),
    #[error("invalid vertex name {0:?}: names are nonempty ASCII tokens without whitespace and may not start with '#'")]
    InvalidVertexName(String),
}

/// A simplex: a strictly increasing, nonempty list of vertex ids of one
/// particular complex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Builds a simplex from an arbitrary id list (sorted and deduplicated).
    ///
    /// Panics on an empty list: the empty simplex exists only at the poset
    /// level (augmented posets), never as a complex-level value.
    pub fn new(mut ids: Vec<VertexId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        assert!(!ids.is_empty(), "the empty simplex is not a complex-level value");
        Simplex(ids)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        is_subset(&self.0, &other.0)
    }

    /// The codimension-1 faces, empty for a vertex.
    pub fn boundary_faces(&self) -> Vec<Simplex> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|skip| {
                Simplex(
                    self.0
                        .iter()
                        .enumerate()
                        .filter(|(t, _)| *t != skip)
                        .map(|(_, v)| *v)
                        .collect(),
                )
            })
            .collect()
    }
}

/// `a ⊆ b` for strictly increasing id slices.
fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

static EMPTY_DIM: LazyLock<BTreeSet<Simplex>> = LazyLock::new(BTreeSet::new);

/// An abstract simplicial complex stored by its facets.
///
/// The vertex set is exactly the union of the facet vertex sets (an isolated
/// vertex is a singleton facet). Facets form an antichain under inclusion.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    /// Sorted, unique vertex names; `VertexId` indexes into this table.
    vertices: Vec<String>,
    /// Sorted antichain of maximal faces.
    facets: Vec<Simplex>,
    /// Lazily materialized face closure, one sorted set per dimension.
    closure: OnceLock<Vec<BTreeSet<Simplex>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}
impl Eq for SimplicialComplex {}

fn valid_vertex_name(name: &str) -> bool {
    !name.is_empty()
        && !name.starts_with('#')
        && name.bytes().all(|b| (0x21..=0x7e).contains(&b))
}

impl SimplicialComplex {
    /// The empty complex: no vertices, no facets.
    pub fn empty() -> Self {
        SimplicialComplex { vertices: Vec::new(), facets: Vec::new(), closure: OnceLock::new() }
    }

    /// Builds a complex from facets given as lists of vertex names.
    ///
    /// Names repeated inside one facet are collapsed (a facet is a set);
    /// non-maximal entries are absorbed into the facets that dominate them.
    pub fn from_named_facets(named: Vec<Vec<String>>) -> Result<Self, ComplexError> {
        let mut names: BTreeSet<String> = BTreeSet::new();
        for facet in &named {
            for v in facet {
                if !valid_vertex_name(v) {
                    return Err(ComplexError::InvalidVertexName(v.clone()));
                }
                names.insert(v.clone());
            }
        }
        let vertices: Vec<String> = names.into_iter().collect();
        let id_of: BTreeMap<&str, VertexId> =
            vertices.iter().enumerate().map(|(i, s)| (s.as_str(), i as VertexId)).collect();

        let mut raw: Vec<Simplex> = named
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| Simplex::new(f.iter().map(|v| id_of[v.as_str()]).collect()))
            .collect();
        // Keep only maximal faces: sort by descending size so dominators come first.
        raw.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.cmp(b)));
        let mut facets: Vec<Simplex> = Vec::new();
        for s in raw {
            if !facets.iter().any(|f| s.is_face_of(f)) {
                facets.push(s);
            }
        }
        facets.sort();
        Ok(SimplicialComplex { vertices, facets, closure: OnceLock::new() })
    }

    /// Convenience constructor from string slices.
    pub fn from_facets(facets: &[&[&str]]) -> Result<Self, ComplexError> {
        Self::from_named_facets(
            facets.iter().map(|f| f.iter().map(|s| s.to_string()).collect()).collect(),
        )
    }

    // ------------------------------------------------------------------
    // Accessors
    // ------------------------------------------------------------------

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.vertices[v as usize]
    }

    pub fn id(&self, name: &str) -> Option<VertexId> {
        self.vertices.binary_search_by(|s| s.as_str().cmp(name)).ok().map(|i| i as VertexId)
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Maximum facet dimension; the empty complex has no dimension.
    pub fn dimension(&self) -> Result<usize, ComplexError> {
        self.facets.iter().map(|f| f.dimension()).max().ok_or(ComplexError::EmptyComplex)
    }

    /// `dimension()` with the empty complex treated as dimension 0 consumers
    /// must not rely on; internal shorthand for loops over degrees.
    pub(crate) fn dim_or_zero(&self) -> usize {
        self.facets.iter().map(|f| f.dimension()).max().unwrap_or(0)
    }

    fn closure(&self) -> &Vec<BTreeSet<Simplex>> {
        self.closure.get_or_init(|| {
            let dim = self.facets.iter().map(|f| f.dimension()).max();
            let Some(dim) = dim else { return Vec::new() };
            let mut per_dim: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); dim + 1];
            // Downward closure by repeatedly peeling codimension-1 faces.
            let mut frontier: BTreeSet<Simplex> = self.facets.iter().cloned().collect();
            while let Some(s) = frontier.iter().next().cloned() {
                frontier.remove(&s);
                let d = s.dimension();
                if !per_dim[d].insert(s.clone()) {
                    continue;
                }
                for f in s.boundary_faces() {
                    if !per_dim[f.dimension()].contains(&f) {
                        frontier.insert(f);
                    }
                }
            }
            per_dim
        })
    }

    /// All simplices of dimension `k`, sorted.
    pub fn simplices_of_dim(&self, k: usize) -> &BTreeSet<Simplex> {
        self.closure().get(k).unwrap_or(&EMPTY_DIM)
    }

    /// Count of simplices per dimension (index = dimension).
    pub fn simplex_counts(&self) -> Vec<usize> {
        self.closure().iter().map(|s| s.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplex_counts()
            .iter()
            .enumerate()
            .map(|(k, n)| if k % 2 == 0 { *n as i64 } else { -(*n as i64) })
            .sum()
    }

    /// Membership test directly against the facet list (no closure needed).
    pub fn contains_simplex(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    pub(crate) fn contains_ids(&self, ids: &[VertexId]) -> bool {
        self.facets.iter().any(|f| is_subset(ids, &f.0))
    }

    /// Builds a simplex from vertex names (must all exist in this complex).
    pub fn simplex_from_names(&self, names: &[&str]) -> Result<Simplex, ComplexError> {
        let mut ids = Vec::with_capacity(names.len());
        for n in names {
            ids.push(self.id(n).ok_or_else(|| ComplexError::UnknownVertex((*n).to_string()))?);
        }
        Ok(Simplex::new(ids))
    }

    /// Vertex names of a simplex, in id order.
    pub fn simplex_names(&self, s: &Simplex) -> Vec<&str> {
        s.vertices().iter().map(|&v| self.name(v)).collect()
    }

    /// Canonical printable label of a simplex: dot-joined vertex names.
    pub fn simplex_label(&self, s: &Simplex) -> String {
        self.simplex_names(s).join(".")
    }

    // ------------------------------------------------------------------
    // Constructions
    // ------------------------------------------------------------------

    /// The link of `s`: all `t` disjoint from `s` with `t ∪ s` a simplex.
    pub fn link(&self, s: &Simplex) -> Result<SimplicialComplex, ComplexError> {
        if !self.contains_simplex(s) {
            return Err(ComplexError::NotASimplex(self.simplex_label(s)));
        }
        let mut named: Vec<Vec<String>> = Vec::new();
        for f in &self.facets {
            if s.is_face_of(f) {
                let rest: Vec<String> = f
                    .vertices()
                    .iter()
                    .filter(|v| !s.contains(**v))
                    .map(|&v| self.name(v).to_string())
                    .collect();
                if !rest.is_empty() {
                    named.push(rest);
                }
            }
        }
        SimplicialComplex::from_named_facets(named)
    }

    /// The cone with a fresh apex vertex.
    pub fn cone(&self, apex: &str) -> Result<SimplicialComplex, ComplexError> {
        if !valid_vertex_name(apex) {
            return Err(ComplexError::InvalidVertexName(apex.to_string()));
        }
        if self.id(apex).is_some() {
            return Err(ComplexError::VertexClash(apex.to_string()));
        }
        if self.is_empty() {
            // Degenerate cone: the apex alone.
            return SimplicialComplex::from_named_facets(vec![vec![apex.to_string()]]);
        }
        let named: Vec<Vec<String>> = self
            .facets
            .iter()
            .map(|f| {
                let mut names: Vec<String> =
                    f.vertices().iter().map(|&v| self.name(v).to_string()).collect();
                names.push(apex.to_string());
                names
            })
            .collect();
        SimplicialComplex::from_named_facets(named)
    }

    /// The join: simplices are unions `s₁ ∪ s₂` with `sᵢ` a (possibly empty)
    /// simplex of the respective factor, not both empty.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        if let Some(shared) =
            self.vertices.iter().find(|v| other.id(v.as_str()).is_some())
        {
            return Err(ComplexError::VertexClash(shared.clone()));
        }
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let mut named = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let mut names: Vec<String> =
                    f.vertices().iter().map(|&v| self.name(v).to_string()).collect();
                names.extend(g.vertices().iter().map(|&v| other.name(v).to_string()));
                named.push(names);
            }
        }
        SimplicialComplex::from_named_facets(named)
    }

    /// Barycentric subdivision: one vertex per simplex (labelled with the
    /// dot-joined vertex names), one facet per maximal inclusion chain.
    pub fn barycentric_subdivision(&self) -> Result<SimplicialComplex, ComplexError> {
        if self.is_empty() {
            return Err(ComplexError::EmptyComplex);
        }
        // Generated labels must stay distinct; a collision can only happen if
        // user-chosen names already contain the separator in a confusable way.
        let total: usize = self.simplex_counts().iter().sum();
        let mut labels: BTreeSet<String> = BTreeSet::new();
        for dim_set in self.closure() {
            for s in dim_set {
                labels.insert(self.simplex_label(s));
            }
        }
        if labels.len() != total {
            return Err(ComplexError::VertexClash(
                "dot-joined simplex labels collide; rename vertices".to_string(),
            ));
        }
        // Maximal chains = (facet, ordering of its vertices) pairs.
        let mut named: Vec<Vec<String>> = Vec::new();
        for f in &self.facets {
            let verts = f.vertices().to_vec();
            for perm in permutations(&verts) {
                let mut chain: Vec<String> = Vec::with_capacity(perm.len());
                let mut prefix: Vec<VertexId> = Vec::with_capacity(perm.len());
                for v in perm {
                    prefix.push(v);
                    chain.push(self.simplex_label(&Simplex::new(prefix.clone())));
                }
                named.push(chain);
            }
        }
        SimplicialComplex::from_named_facets(named)
    }

    /// True iff every clique of the 1-skeleton spans a simplex.
    pub fn is_flag(&self) -> bool {
        let n = self.vertex_count();
        let mut adj: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); n];
        for f in &self.facets {
            let vs = f.vertices();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    adj[u as usize].insert(v);
                    adj[v as usize].insert(u);
                }
            }
        }
        // Grow cliques one vertex at a time; every clique found must span.
        let mut current: Vec<Vec<VertexId>> = Vec::new();
        for u in 0..n as VertexId {
            for &v in adj[u as usize].iter().filter(|&&v| v > u) {
                current.push(vec![u, v]);
            }
        }
        while !current.is_empty() {
            let mut next = Vec::new();
            for clique in &current {
                let last = *clique.last().expect("cliques are nonempty");
                for v in (last + 1)..n as VertexId {
                    if clique.iter().all(|&u| adj[u as usize].contains(&v)) {
                        let mut bigger = clique.clone();
                        bigger.push(v);
                        if !self.contains_ids(&bigger) {
                            return false;
                        }
                        next.push(bigger);
                    }
                }
            }
            current = next;
        }
        true
    }

    /// Octahedralization: vertices are doubled into `name+` / `name-`; a set
    /// of signed vertices spans iff the underlying vertices are distinct and
    /// span in this complex.
    pub fn octahedralize(&self) -> Result<SimplicialComplex, ComplexError> {
        let mut generated: BTreeSet<String> = BTreeSet::new();
        for v in &self.vertices {
            generated.insert(format!("{v}+"));
            generated.insert(format!("{v}-"));
        }
        if generated.len() != 2 * self.vertices.len() {
            return Err(ComplexError::VertexClash(
                "signed vertex labels collide; rename vertices".to_string(),
            ));
        }
        let mut named: Vec<Vec<String>> = Vec::new();
        for f in &self.facets {
            let vs = f.vertices();
            let k = vs.len();
            for signs in 0u32..(1 << k) {
                named.push(
                    vs.iter()
                        .enumerate()
                        .map(|(t, &v)| {
                            let sign = if signs >> t & 1 == 0 { '+' } else { '-' };
                            format!("{}{}", self.name(v), sign)
                        })
                        .collect(),
                );
            }
        }
        SimplicialComplex::from_named_facets(named)
    }

    /// The subcomplex induced on a set of vertex names.
    pub fn induced(&self, names: &BTreeSet<String>) -> Result<SimplicialComplex, ComplexError> {
        let mut ids: BTreeSet<VertexId> = BTreeSet::new();
        for n in names {
            ids.insert(self.id(n).ok_or_else(|| ComplexError::UnknownVertex(n.clone()))?);
        }
        let mut named: Vec<Vec<String>> = Vec::new();
        for f in &self.facets {
            let kept: Vec<String> = f
                .vertices()
                .iter()
                .filter(|v| ids.contains(v))
                .map(|&v| self.name(v).to_string())
                .collect();
            if !kept.is_empty() {
                named.push(kept);
            }
        }
        SimplicialComplex::from_named_facets(named)
    }

    /// True iff `sub` is a full subcomplex of `self`: every simplex of `self`
    /// with all vertices in `sub`'s vertex set is a simplex of `sub`.
    ///
    /// Equivalently, `sub` equals the subcomplex induced on its vertex set.
    /// Errors if `sub` has a vertex `self` lacks or is not a subcomplex.
    pub fn is_full_subcomplex(&self, sub: &SimplicialComplex) -> Result<bool, ComplexError> {
        let names: BTreeSet<String> = sub.vertices.iter().cloned().collect();
        for f in sub.facets() {
            let ids = sub
                .simplex_names(f)
                .iter()
                .map(|n| self.id(n).ok_or_else(|| ComplexError::UnknownVertex((*n).to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            if !self.contains_ids(&{
                let mut ids = ids;
                ids.sort_unstable();
                ids
            }) {
                return Err(ComplexError::NotASimplex(sub.simplex_label(f)));
            }
        }
        Ok(self.induced(&names)? == *sub)
    }

    /// Connected components of the vertex set (via shared facets), each
    /// sorted; components ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for f in &self.facets {
            let vs = f.vertices();
            for w in vs.windows(2) {
                let (a, b) = (find(&mut parent, w[0] as usize), find(&mut parent, w[1] as usize));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for v in 0..n {
            groups.entry(find(&mut parent, v)).or_default().push(v as VertexId);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Isomorphism by backtracking over vertex bijections mapping facets to
    /// facets. Bounded at 24 vertices per side.
    pub fn is_isomorphic(&self, other: &SimplicialComplex) -> Result<bool, ComplexError> {
        for k in [self, other] {
            if k.vertex_count() > 24 {
                return Err(ComplexError::TooLarge(k.vertex_count()));
            }
        }
        if self.vertex_count() != other.vertex_count()
            || self.facets.len() != other.facets.len()
        {
            return Ok(false);
        }
        let per_dim = |k: &SimplicialComplex| {
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for f in &k.facets {
                *counts.entry(f.dimension()).or_default() += 1;
            }
            counts
        };
        if per_dim(self) != per_dim(other) {
            return Ok(false);
        }
        let n = self.vertex_count();
        if n == 0 {
            return Ok(true);
        }

        // Adjacency bitmasks (n ≤ 24 fits in u32) and refined vertex colors.
        let build = |k: &SimplicialComplex| {
            let mut adj = vec![0u32; k.vertex_count()];
            for f in &k.facets {
                let vs = f.vertices();
                for (i, &u) in vs.iter().enumerate() {
                    for &v in &vs[i + 1..] {
                        adj[u as usize] |= 1 << v;
                        adj[v as usize] |= 1 << u;
                    }
                }
            }
            // Color 0: multiset of containing-facet dimensions.
            let mut colors: Vec<Vec<usize>> = vec![Vec::new(); k.vertex_count()];
            for f in &k.facets {
                for &v in f.vertices() {
                    colors[v as usize].push(f.dimension());
                }
            }
            for c in &mut colors {
                c.sort_unstable();
            }
            // One refinement round: append sorted neighbor colors.
            let snapshot = colors.clone();
            for v in 0..k.vertex_count() {
                let mut neigh: Vec<Vec<usize>> = (0..k.vertex_count())
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| snapshot[u].clone())
                    .collect();
                neigh.sort();
                for nb in neigh {
                    colors[v].push(usize::MAX); // separator
                    colors[v].extend(nb);
                }
            }
            (adj, colors)
        };
        let (adj1, col1) = build(self);
        let (adj2, col2) = build(other);
        {
            let mut a = col1.clone();
            let mut b = col2.clone();
            a.sort();
            b.sort();
            if a != b {
                return Ok(false);
            }
        }

        // Most-constrained-first vertex order: rarest color, then id.
        let mut rarity: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
        for c in &col1 {
            *rarity.entry(c).or_default() += 1;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (rarity[&col1[v]], v));

        let facets2: BTreeSet<&Simplex> = other.facets.iter().collect();
        let mut mapping: Vec<Option<VertexId>> = vec![None; n];
        let mut used = vec![false; n];

        #[allow(clippy::too_many_arguments)]
        fn backtrack(
            pos: usize,
            order: &[usize],
            col1: &[Vec<usize>],
            col2: &[Vec<usize>],
            adj1: &[u32],
            adj2: &[u32],
            facets1: &[Simplex],
            facets2: &BTreeSet<&Simplex>,
            mapping: &mut Vec<Option<VertexId>>,
            used: &mut Vec<bool>,
        ) -> bool {
            if pos == order.len() {
                // Full assignment: facets must map onto facets.
                return facets1.iter().all(|f| {
                    let image = Simplex::new(
                        f.vertices().iter().map(|&v| mapping[v as usize].unwrap()).collect(),
                    );
                    facets2.contains(&image)
                });
            }
            let v = order[pos];
            for w in 0..col2.len() {
                if used[w] || col1[v] != col2[w] {
                    continue;
                }
                // Edge consistency with everything already assigned.
                let ok = order[..pos].iter().all(|&u| {
                    let wu = mapping[u].unwrap() as usize;
                    (adj1[v] >> u & 1) == (adj2[w] >> wu & 1)
                });
                if !ok {
                    continue;
                }
                mapping[v] = Some(w as VertexId);
                used[w] = true;
                if backtrack(
                    pos + 1,
                    order,
                    col1,
                    col2,
                    adj1,
                    adj2,
                    facets1,
                    facets2,
                    mapping,
                    used,
                ) {
                    return true;
                }
                mapping[v] = None;
                used[w] = false;
            }
            false
        }

        Ok(backtrack(
            0,
            &order,
            &col1,
            &col2,
            &adj1,
            &adj2,
            &self.facets,
            &facets2,
            &mut mapping,
            &mut used,
        ))
    }

    // ------------------------------------------------------------------
    // Text format
    // ------------------------------------------------------------------

    /// Parses the complex text format: one facet per line, whitespace-
    /// separated ASCII vertex names; blank lines and lines starting with `#`
    /// are ignored.
    pub fn parse(text: &str) -> Result<SimplicialComplex, ParseError> {
        let mut named: Vec<Vec<String>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<String> = line.split_whitespace().map(str::to_string).collect();
            for t in &tokens {
                if !valid_vertex_name(t) {
                    return Err(ParseError::new(i + 1, format!("invalid vertex name {t:?}")));
                }
            }
            named.push(tokens);
        }
        SimplicialComplex::from_named_facets(named)
            .map_err(|e| ParseError::new(0, e.to_string()))
    }

    /// Emits the complex text format: facets in canonical sorted order.
    /// Round-trips through `parse` to an equal complex.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            out.push_str(&self.simplex_names(f).join(" "));
            out.push('\n');
        }
        out
    }
}

/// All permutations of a slice, in lexicographic order of index sequences
/// (deterministic; used for maximal-chain enumeration).
fn permutations(items: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut result = Vec::new();
    let mut current = Vec::with_capacity(items.len());
    let mut used = vec![false; items.len()];
    fn rec(
        items: &[VertexId],
        used: &mut Vec<bool>,
        current: &mut Vec<VertexId>,
        result: &mut Vec<Vec<VertexId>>,
    ) {
        if current.len() == items.len() {
            result.push(current.clone());
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                current.push(items[i]);
                rec(items, used, current, result);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(items, &mut used, &mut current, &mut result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Test helper: build a complex from facet name lists.
    pub(crate) fn cx(facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets).expect("valid test complex")
    }

    /// Independent oracle: boundary-of-simplex facet list on `n` vertices.
    fn boundary_delta(n: usize) -> SimplicialComplex {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let mut facets = Vec::new();
        for skip in 0..n {
            facets.push(
                names
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, s)| s.clone())
                    .collect::<Vec<_>>(),
            );
        }
        SimplicialComplex::from_named_facets(facets).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(cx(&[&["a"]]).dimension().unwrap(), 0);
        assert_eq!(cx(&[&["a", "b", "c"]]).dimension().unwrap(), 2);
        // Enumerated facets of the boundary of a 3-simplex: four triangles.
        let bd = boundary_delta(4);
        assert_eq!(bd.facets().len(), 4);
        assert_eq!(bd.dimension().unwrap(), 2);
        assert_eq!(
            SimplicialComplex::empty().dimension(),
            Err(ComplexError::EmptyComplex)
        );
    }

    #[test]
    fn facets_form_antichain_and_absorb() {
        let k = cx(&[&["a", "b"], &["a", "b", "c"], &["c"]]);
        assert_eq!(k.facets().len(), 1);
        assert_eq!(k.vertex_count(), 3);
    }

    #[test]
    fn face_closure_counts() {
        let k = cx(&[&["a", "b", "c"]]);
        assert_eq!(k.simplex_counts(), vec![3, 3, 1]);
        assert_eq!(k.euler_characteristic(), 1);
        // Face closure: every face of every simplex is reported.
        for dim_set in [k.simplices_of_dim(1), k.simplices_of_dim(2)] {
            for s in dim_set {
                for f in s.boundary_faces() {
                    assert!(k.simplices_of_dim(f.dimension()).contains(&f));
                }
            }
        }
    }

    #[test]
    fn link_examples() {
        let bd = boundary_delta(4);
        let v = bd.simplex_from_names(&["v1"]).unwrap();
        let lk = bd.link(&v).unwrap();
        // Boundary of a triangle: a 3-cycle.
        let cycle = cx(&[&["x", "y"], &["y", "z"], &["x", "z"]]);
        assert!(lk.is_isomorphic(&cycle).unwrap());

        let tri = cx(&[&["a", "b", "c"]]);
        let top = tri.simplex_from_names(&["a", "b", "c"]).unwrap();
        assert!(tri.link(&top).unwrap().is_empty());

        let path = cx(&[&["a", "b"], &["b", "c"]]);
        let b = path.simplex_from_names(&["b"]).unwrap();
        let lk = path.link(&b).unwrap();
        assert_eq!(lk.facets().len(), 2);
        assert_eq!(lk.dimension().unwrap(), 0);
        assert_eq!(lk.vertex_names(), ["a".to_string(), "c".to_string()]);

        let missing = Simplex::new(vec![0, 1]);
        assert!(matches!(
            cx(&[&["a"], &["b"]]).link(&missing),
            Err(ComplexError::NotASimplex(_))
        ));
    }

    #[test]
    fn barycentric_subdivision_examples() {
        let edge = cx(&[&["a", "b"]]);
        let sd = edge.barycentric_subdivision().unwrap();
        assert_eq!(sd.vertex_count(), 3);
        assert_eq!(sd.facets().len(), 2);
        assert_eq!(sd.dimension().unwrap(), 1);

        // Chains of the face poset of a triangle: 7 vertices, 6 maximal chains.
        let tri = cx(&[&["a", "b", "c"]]);
        let sd = tri.barycentric_subdivision().unwrap();
        assert_eq!(sd.vertex_count(), 7);
        assert_eq!(sd.facets().len(), 6);
        assert_eq!(sd.dimension().unwrap(), 2);

        assert_eq!(
            SimplicialComplex::empty().barycentric_subdivision(),
            Err(ComplexError::EmptyComplex)
        );
    }

    #[test]
    fn subdivision_preserves_euler_characteristic() {
        // Deterministic pseudo-random sample over ≤ 7 vertices; independent
        // oracle computes χ from scratch by subset enumeration.
        let mut r = crate::testutil::rng(1);
        for _ in 0..60 {
            let k = crate::testutil::random_complex(&mut r, 7, 5);
            if k.is_empty() {
                continue;
            }
            // Oracle χ: enumerate all subsets of each facet, dedup.
            let mut all: BTreeSet<Vec<VertexId>> = BTreeSet::new();
            for f in k.facets() {
                let vs = f.vertices();
                for mask in 1u32..(1 << vs.len()) {
                    let sub: Vec<VertexId> = vs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, v)| *v)
                        .collect();
                    all.insert(sub);
                }
            }
            let chi_oracle: i64 = all
                .iter()
                .map(|s| if (s.len() - 1) % 2 == 0 { 1i64 } else { -1i64 })
                .sum();
            assert_eq!(k.euler_characteristic(), chi_oracle);
            let sd = k.barycentric_subdivision().unwrap();
            assert_eq!(sd.euler_characteristic(), chi_oracle, "χ preserved");
            assert!(sd.is_flag(), "order complexes are flag");
        }
    }

    #[test]
    fn cone_examples() {
        let two = cx(&[&["a"], &["b"]]);
        let path = two.cone("c").unwrap();
        assert!(path.is_isomorphic(&cx(&[&["a", "b"], &["b", "c"]])).unwrap());

        let cycle = cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let disk = cycle.cone("z").unwrap();
        assert_eq!(disk.euler_characteristic(), 1);

        let point = SimplicialComplex::empty().cone("z").unwrap();
        assert_eq!(point.vertex_count(), 1);
        assert_eq!(point.dimension().unwrap(), 0);

        assert!(matches!(two.cone("a"), Err(ComplexError::VertexClash(_))));
    }

    #[test]
    fn join_examples() {
        let p = cx(&[&["a"]]);
        let q = cx(&[&["b"]]);
        let edge = p.join(&q).unwrap();
        assert_eq!(edge.facets().len(), 1);
        assert_eq!(edge.dimension().unwrap(), 1);

        let s0a = cx(&[&["a"], &["b"]]);
        let s0b = cx(&[&["c"], &["d"]]);
        let square = s0a.join(&s0b).unwrap();
        let cycle4 = cx(&[&["w", "x"], &["x", "y"], &["y", "z"], &["w", "z"]]);
        assert!(square.is_isomorphic(&cycle4).unwrap());

        assert!(matches!(p.join(&p), Err(ComplexError::VertexClash(_))));
        assert_eq!(SimplicialComplex::empty().join(&s0a).unwrap(), s0a);
    }

    #[test]
    fn join_with_point_is_cone() {
        let mut r = crate::testutil::rng(2);
        for _ in 0..25 {
            let k = crate::testutil::random_complex(&mut r, 5, 4);
            if k.is_empty() {
                continue;
            }
            let apex = cx(&[&["zz"]]);
            let j = k.join(&apex).unwrap();
            let c = k.cone("zz").unwrap();
            assert!(j.is_isomorphic(&c).unwrap());
        }
    }

    #[test]
    fn flag_examples() {
        // The hollow triangle is the minimal non-flag complex: its three
        // vertices form a clique of the 1-skeleton spanning no 2-simplex.
        let cycle3 = cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        assert!(!cycle3.is_flag());

        // Hollow tetrahedron: all four triangles, no 3-simplex → 4-clique fails.
        let bd = boundary_delta(4);
        assert!(!bd.is_flag());

        // Full simplices are flag; so are trees and the 4-cycle.
        assert!(cx(&[&["a", "b", "c", "d"]]).is_flag());
        assert!(cx(&[&["a", "b"], &["b", "c"]]).is_flag());
        assert!(cx(&[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]]).is_flag());
        assert!(SimplicialComplex::empty().is_flag());
    }

    #[test]
    fn octahedralize_examples() {
        let point = cx(&[&["a"]]);
        let o = point.octahedralize().unwrap();
        assert_eq!(o.vertex_count(), 2);
        assert_eq!(o.dimension().unwrap(), 0);

        // Edge → the four mixed-sign edges of a 4-cycle.
        let edge = cx(&[&["a", "b"]]);
        let o = edge.octahedralize().unwrap();
        assert_eq!(o.facets().len(), 4);
        let cycle4 = cx(&[&["w", "x"], &["x", "y"], &["y", "z"], &["w", "z"]]);
        assert!(o.is_isomorphic(&cycle4).unwrap());

        assert!(SimplicialComplex::empty().octahedralize().unwrap().is_empty());
    }

    #[test]
    fn octahedralized_simplex_is_cross_polytope_boundary() {
        for k in 0..=3usize {
            let names: Vec<&str> = ["a", "b", "c", "d"][..=k].to_vec();
            let simplex = SimplicialComplex::from_facets(&[&names]).unwrap();
            let o = simplex.octahedralize().unwrap();
            // Independent construction: join of k+1 copies of S⁰.
            let mut cross = SimplicialComplex::empty();
            for i in 0..=k {
                let pair = SimplicialComplex::from_named_facets(vec![
                    vec![format!("p{i}")],
                    vec![format!("q{i}")],
                ])
                .unwrap();
                cross = cross.join(&pair).unwrap();
            }
            assert!(o.is_isomorphic(&cross).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn octahedralize_commutes_with_join() {
        use rand::Rng;
        let mut r = crate::testutil::rng(3);
        for round in 0..40 {
            let mut mk = |tag: char| {
                let n = r.random_range(1..=6usize);
                let fcount = r.random_range(1..=4usize);
                let mut facets = Vec::new();
                for _ in 0..fcount {
                    let size = r.random_range(1..=n.min(4));
                    facets.push(
                        (0..size)
                            .map(|_| format!("{tag}{}", r.random_range(0..n)))
                            .collect::<Vec<String>>(),
                    );
                }
                SimplicialComplex::from_named_facets(facets).unwrap()
            };
            let k1 = mk('a');
            let k2 = mk('b');
            let lhs = k1.join(&k2).unwrap().octahedralize().unwrap();
            let rhs = k1.octahedralize().unwrap().join(&k2.octahedralize().unwrap()).unwrap();
            assert!(lhs.is_isomorphic(&rhs).unwrap(), "round {round}");
        }
    }

    #[test]
    fn full_subcomplex_examples() {
        let tri = cx(&[&["a", "b", "c"]]);
        let cycle = cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        assert!(!tri.is_full_subcomplex(&cycle).unwrap());

        let vertex = cx(&[&["a"]]);
        assert!(tri.is_full_subcomplex(&vertex).unwrap());

        let edgeless = cx(&[&["a"], &["b"], &["c"]]);
        let pair = cx(&[&["a"], &["c"]]);
        assert!(edgeless.is_full_subcomplex(&pair).unwrap());

        // Full edge inside a path.
        let path = cx(&[&["a", "b"], &["b", "c"]]);
        let ab = cx(&[&["a", "b"]]);
        assert!(path.is_full_subcomplex(&ab).unwrap());
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = cx(&[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]]);
        let sq = cx(&[&["1", "2"], &["2", "3"], &["3", "4"], &["1", "4"]]);
        assert!(c4.is_isomorphic(&sq).unwrap());

        let path = cx(&[&["a", "b"], &["b", "c"]]);
        let c3 = cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        assert!(!path.is_isomorphic(&c3).unwrap());

        let big: Vec<Vec<String>> = (0..25).map(|i| vec![format!("v{i:02}")]).collect();
        let big = SimplicialComplex::from_named_facets(big).unwrap();
        assert!(matches!(big.is_isomorphic(&big), Err(ComplexError::TooLarge(25))));
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# a comment\n\na b c\nd\n  e f\n";
        let k = SimplicialComplex::parse(text).unwrap();
        assert_eq!(k.vertex_count(), 6);
        assert_eq!(k.facets().len(), 3);
        let emitted = k.to_text();
        let again = SimplicialComplex::parse(&emitted).unwrap();
        assert_eq!(k, again);
        assert_eq!(emitted, again.to_text());

        assert!(SimplicialComplex::parse("").unwrap().is_empty());

        let err = SimplicialComplex::parse("a b\nc d#\u{7f}x\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn connectivity() {
        let k = cx(&[&["a", "b"], &["c", "d"], &["e"]]);
        let comps = k.connected_components();
        assert_eq!(comps.len(), 3);
        assert!(!k.is_connected());
        assert!(cx(&[&["a", "b"], &["b", "c"]]).is_connected());
    }
}
