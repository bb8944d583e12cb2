//! The gluing ledger: bookkeeping for assembling a `(2d+1)`-manifold from
//! thickened pieces indexed by the simplices of a `d`-complex.
//!
//! Each simplex `σ` of dimension `i` contributes a piece
//! `M_σ × D^{2(d−i)}`, where the local factor `M_σ` has dimension `2i + 1`
//! and the disk factor restores the common total dimension `2d + 1`. Two
//! nested simplices `σ < τ` meet along an interface whose three factors
//! have dimensions `2i + 1`, `2(j−i) − 1`, and `2(d−j)` — one dimension
//! short of the pieces, as a gluing locus must be. [`build_ledger`] tabulates
//! the pieces, the pairwise interfaces, and the per-simplex demand (which
//! faces each simplex must be glued to), and [`verify_ledger`] re-derives
//! every dimension count and cardinality independently, reporting any
//! mismatch rather than erroring.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::complex::{Simplex, SimplicialComplex};

/// One thickened piece of the assembly, indexed by a simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumPiece {
    /// The indexing simplex (its dot-joined label).
    pub simplex: String,
    /// Dimension `i` of the indexing simplex.
    pub dim: usize,
    /// Dimension of the local factor: `2i + 1`.
    pub dim_local: usize,
    /// Dimension of the disk thickening: `2(d − i)`.
    pub dim_thickening: usize,
    /// Total dimension of the piece: always `2d + 1`.
    pub dim_total: usize,
    /// When an extension ledger is supplied: `(h, 2h + 1, 2i − 2h)` — the
    /// dimension of the assigned nerve face and the induced split of the
    /// local factor into a core and a disk.
    pub extended_split: Option<(usize, usize, usize)>,
}

/// The interface along which the pieces of `σ < τ` are glued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterfaceSpec {
    /// Label of the smaller simplex `σ`.
    pub small: String,
    /// Label of the larger simplex `τ`.
    pub large: String,
    /// `dim σ`.
    pub small_dim: usize,
    /// `dim τ`.
    pub large_dim: usize,
    /// The three factor dimensions `(2i+1, 2(j−i)−1, 2(d−j))`.
    pub factors: (usize, usize, usize),
    /// Total interface dimension: always `2d`.
    pub dim_total: usize,
}

/// The full ledger for one complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingLedger {
    /// Dimension `d` of the underlying complex.
    pub ambient_dim: usize,
    /// One piece per simplex, by dimension then lexicographic order.
    pub pieces: Vec<StratumPiece>,
    /// One interface per strictly nested pair `σ < τ`, ordered by the
    /// piece order of `τ` then of `σ`.
    pub interfaces: Vec<InterfaceSpec>,
    /// For each simplex `τ`, the labels of all proper faces it must be
    /// glued to, in the piece order of `τ`.
    pub demand: Vec<(String, Vec<String>)>,
    /// Informational multiplicity table: for each simplex `ρ` on
    /// `r = |ρ|` vertices, the count `2^r − 2` of proper sub-gluings it
    /// supports.
    pub multiplicity: Vec<(String, usize)>,
}

fn all_simplices(k: &SimplicialComplex) -> Vec<Simplex> {
    let mut out = Vec::new();
    for q in 0..=k.dim_or_zero() {
        out.extend(k.simplices_of_dim(q).iter().cloned());
    }
    out
}

/// Builds the gluing ledger of a nonempty complex.
///
/// `extended_dims`, when given, assigns to simplices the dimension `h` of
/// a nerve face governing the piece; the local factor keeps dimension
/// `2i + 1` but splits as a `(2h+1)`-core times a `(2i−2h)`-disk, recorded
/// in [`StratumPiece::extended_split`]. Simplices absent from the map get
/// no split.
pub fn build_ledger(
    k: &SimplicialComplex,
    extended_dims: Option<&BTreeMap<Simplex, usize>>,
) -> GluingLedger {
    assert!(!k.is_empty(), "the gluing ledger needs a nonempty complex");
    let d = k.dimension().expect("nonempty");
    let sims = all_simplices(k);

    let pieces: Vec<StratumPiece> = sims
        .iter()
        .map(|s| {
            let i = s.dimension();
            let extended_split = extended_dims.and_then(|m| {
                m.get(s).map(|&h| {
                    assert!(
                        h <= i,
                        "nerve-face dimension {h} exceeds simplex dimension {i}"
                    );
                    (h, 2 * h + 1, 2 * i - 2 * h)
                })
            });
            StratumPiece {
                simplex: k.simplex_label(s),
                dim: i,
                dim_local: 2 * i + 1,
                dim_thickening: 2 * (d - i),
                dim_total: 2 * d + 1,
                extended_split,
            }
        })
        .collect();

    let mut interfaces = Vec::new();
    let mut demand = Vec::new();
    for t in &sims {
        let j = t.dimension();
        let mut faces = Vec::new();
        for s in &sims {
            if s != t && s.is_face_of(t) {
                let i = s.dimension();
                interfaces.push(InterfaceSpec {
                    small: k.simplex_label(s),
                    large: k.simplex_label(t),
                    small_dim: i,
                    large_dim: j,
                    factors: (2 * i + 1, 2 * (j - i) - 1, 2 * (d - j)),
                    dim_total: 2 * d,
                });
                faces.push(k.simplex_label(s));
            }
        }
        demand.push((k.simplex_label(t), faces));
    }

    let multiplicity = sims
        .iter()
        .map(|s| {
            let r = s.dimension() + 1;
            (k.simplex_label(s), (1usize << r) - 2)
        })
        .collect();

    GluingLedger { ambient_dim: d, pieces, interfaces, demand, multiplicity }
}

/// Outcome of re-deriving the ledger arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingReport {
    /// Every piece totals `2d + 1` with the right factor split.
    pub pieces_ok: bool,
    /// Every interface totals `2d`.
    pub interfaces_ok: bool,
    /// Interface factors match the codimension splitting: with `k = d − i`
    /// and `l = d − j`, the middle and outer factors are `2(k−l) − 1` and
    /// `2l`.
    pub splitting_ok: bool,
    /// Each simplex demands exactly its proper faces, and the multiplicity
    /// table matches the face counts of the complex.
    pub demand_ok: bool,
    /// Human-readable descriptions of every failed check.
    pub failures: Vec<String>,
}

impl GluingReport {
    pub fn all_pass(&self) -> bool {
        self.pieces_ok && self.interfaces_ok && self.splitting_ok && self.demand_ok
    }
}

/// Re-derives every count in the ledger from the complex and from first
/// principles, reporting (never erroring on) mismatches.
pub fn verify_ledger(k: &SimplicialComplex, g: &GluingLedger) -> GluingReport {
    let mut failures = Vec::new();
    let d = g.ambient_dim;

    let mut pieces_ok = true;
    for p in &g.pieces {
        let want_local = 2 * p.dim + 1;
        let want_thick = 2 * (d - p.dim);
        if p.dim_local != want_local
            || p.dim_thickening != want_thick
            || p.dim_total != 2 * d + 1
            || p.dim_local + p.dim_thickening != p.dim_total
        {
            pieces_ok = false;
            failures.push(format!(
                "piece {}: dims ({}, {}, {}), expected ({}, {}, {})",
                p.simplex,
                p.dim_local,
                p.dim_thickening,
                p.dim_total,
                want_local,
                want_thick,
                2 * d + 1
            ));
        }
        if let Some((h, core, disk)) = p.extended_split {
            if core != 2 * h + 1 || disk != 2 * p.dim - 2 * h || core + disk != p.dim_local {
                pieces_ok = false;
                failures.push(format!(
                    "piece {}: extended split ({h}, {core}, {disk}) does not \
                     refine the local dimension {}",
                    p.simplex, p.dim_local
                ));
            }
        }
    }

    let mut interfaces_ok = true;
    let mut splitting_ok = true;
    for f in &g.interfaces {
        if f.dim_total != 2 * d
            || f.factors.0 + f.factors.1 + f.factors.2 != f.dim_total
        {
            interfaces_ok = false;
            failures.push(format!(
                "interface {} < {}: factors {:?} do not total {}",
                f.small,
                f.large,
                f.factors,
                2 * d
            ));
        }
        // Codimension form of the same split.
        let (cod_small, cod_large) = (d - f.small_dim, d - f.large_dim);
        let want = (
            2 * f.small_dim + 1,
            2 * (cod_small - cod_large) - 1,
            2 * cod_large,
        );
        if f.factors != want {
            splitting_ok = false;
            failures.push(format!(
                "interface {} < {}: factors {:?}, expected {:?} from the \
                 codimension splitting",
                f.small, f.large, f.factors, want
            ));
        }
    }

    let mut demand_ok = true;
    let sims = all_simplices(k);
    let labels: BTreeMap<String, &Simplex> =
        sims.iter().map(|s| (k.simplex_label(s), s)).collect();
    for (t_label, faces) in &g.demand {
        let Some(t) = labels.get(t_label) else {
            demand_ok = false;
            failures.push(format!("demand entry {t_label}: unknown simplex"));
            continue;
        };
        let expected = (1usize << (t.dimension() + 1)) - 2;
        if faces.len() != expected {
            demand_ok = false;
            failures.push(format!(
                "demand of {t_label}: {} faces listed, expected {expected}",
                faces.len()
            ));
        }
        for f_label in faces {
            match labels.get(f_label) {
                Some(s) if s.is_face_of(t) && *s != *t => {}
                _ => {
                    demand_ok = false;
                    failures.push(format!(
                        "demand of {t_label}: {f_label} is not a proper face"
                    ));
                }
            }
        }
    }
    for (r_label, mult) in &g.multiplicity {
        let Some(r) = labels.get(r_label) else {
            demand_ok = false;
            failures.push(format!("multiplicity entry {r_label}: unknown simplex"));
            continue;
        };
        // Count the proper faces directly in the complex.
        let count = sims.iter().filter(|s| s.is_face_of(r) && *s != *r).count();
        if *mult != count || *mult != (1usize << (r.dimension() + 1)) - 2 {
            demand_ok = false;
            failures.push(format!(
                "multiplicity of {r_label}: recorded {mult}, complex has {count}"
            ));
        }
    }

    GluingReport { pieces_ok, interfaces_ok, splitting_ok, demand_ok, failures }
}

impl GluingLedger {
    /// JSON rendering of the full ledger.
    pub fn to_json(&self) -> Value {
        json!({
            "ambient_dim": self.ambient_dim,
            "total_piece_dim": 2 * self.ambient_dim + 1,
            "total_interface_dim": 2 * self.ambient_dim,
            "pieces": self.pieces.iter().map(|p| {
                let mut o = json!({
                    "simplex": p.simplex,
                    "dim": p.dim,
                    "dim_local": p.dim_local,
                    "dim_thickening": p.dim_thickening,
                    "dim_total": p.dim_total,
                });
                if let Some((h, core, disk)) = p.extended_split {
                    o["extended_split"] = json!({
                        "nerve_face_dim": h,
                        "core": core,
                        "disk": disk,
                    });
                }
                o
            }).collect::<Vec<_>>(),
            "interfaces": self.interfaces.iter().map(|f| json!({
                "small": f.small,
                "large": f.large,
                "factors": [f.factors.0, f.factors.1, f.factors.2],
                "dim_total": f.dim_total,
            })).collect::<Vec<_>>(),
            "demand": self.demand.iter().map(|(t, faces)| json!({
                "simplex": t,
                "faces": faces,
            })).collect::<Vec<_>>(),
            "multiplicity": self.multiplicity.iter().map(|(r, m)| json!({
                "simplex": r,
                "count": m,
            })).collect::<Vec<_>>(),
        })
    }

    /// Plain-text summary: headline dimensions and per-piece lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "ambient dimension: {} (pieces total {}, interfaces total {})\n",
            self.ambient_dim,
            2 * self.ambient_dim + 1,
            2 * self.ambient_dim
        ));
        out.push_str(&format!(
            "pieces: {}\ninterfaces: {}\n",
            self.pieces.len(),
            self.interfaces.len()
        ));
        for p in &self.pieces {
            out.push_str(&format!(
                "piece {}: local {} x thickening {} = total {}\n",
                p.simplex, p.dim_local, p.dim_thickening, p.dim_total
            ));
        }
        for f in &self.interfaces {
            out.push_str(&format!(
                "interface {} < {}: ({}, {}, {}) total {}\n",
                f.small, f.large, f.factors.0, f.factors.1, f.factors.2, f.dim_total
            ));
        }
        for (t, faces) in &self.demand {
            out.push_str(&format!("demand {}: {} faces\n", t, faces.len()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_named_facets(
            facets.iter().map(|f| f.iter().map(|s| s.to_string()).collect()).collect(),
        )
        .unwrap()
    }

    fn piece<'a>(g: &'a GluingLedger, label: &str) -> &'a StratumPiece {
        g.pieces.iter().find(|p| p.simplex == label).expect("piece present")
    }

    #[test]
    fn single_edge_ledger() {
        let k = complex(&[&["a", "b"]]);
        let g = build_ledger(&k, None);
        assert_eq!(g.ambient_dim, 1);
        assert_eq!(g.pieces.len(), 3);
        let a = piece(&g, "a");
        assert_eq!(
            (a.dim_local, a.dim_thickening, a.dim_total),
            (1, 2, 3),
            "vertex piece"
        );
        let e = piece(&g, "a.b");
        assert_eq!((e.dim_local, e.dim_thickening, e.dim_total), (3, 0, 3));
        assert_eq!(g.interfaces.len(), 2);
        for f in &g.interfaces {
            assert_eq!(f.factors, (1, 1, 0));
            assert_eq!(f.dim_total, 2);
        }
        assert!(verify_ledger(&k, &g).all_pass());
    }

    #[test]
    fn single_point_ledger() {
        let k = complex(&[&["p"]]);
        let g = build_ledger(&k, None);
        assert_eq!(g.ambient_dim, 0);
        assert_eq!(g.pieces.len(), 1);
        let p = piece(&g, "p");
        assert_eq!((p.dim_local, p.dim_thickening, p.dim_total), (1, 0, 1));
        assert!(g.interfaces.is_empty());
        assert!(verify_ledger(&k, &g).all_pass());
    }

    #[test]
    fn triangle_ledger() {
        let k = complex(&[&["1", "2", "3"]]);
        let g = build_ledger(&k, None);
        assert_eq!(g.ambient_dim, 2);
        assert_eq!(g.pieces.len(), 7);
        for p in &g.pieces {
            assert_eq!(p.dim_total, 5);
        }
        // A vertex inside an edge: (1, 1, 2) totaling 4.
        let f = g
            .interfaces
            .iter()
            .find(|f| f.small == "1" && f.large == "1.2")
            .unwrap();
        assert_eq!(f.factors, (1, 1, 2));
        assert_eq!(f.dim_total, 4);
        // A vertex inside the triangle: (1, 3, 0).
        let f = g
            .interfaces
            .iter()
            .find(|f| f.small == "1" && f.large == "1.2.3")
            .unwrap();
        assert_eq!(f.factors, (1, 3, 0));
        // The triangle demands all six proper faces.
        let (_, faces) = g.demand.iter().find(|(t, _)| t == "1.2.3").unwrap();
        assert_eq!(faces.len(), 6);
        // Interfaces: one per nested pair: 3 vertex<edge pairs × 2 + 3
        // vertex<triangle + 3 edge<triangle = 12.
        assert_eq!(g.interfaces.len(), 12);
        assert!(verify_ledger(&k, &g).all_pass());
    }

    #[test]
    fn multiplicity_matches_face_poset() {
        let k = complex(&[&["1", "2", "3"], &["3", "4"]]);
        let g = build_ledger(&k, None);
        let table: BTreeMap<&str, usize> =
            g.multiplicity.iter().map(|(s, m)| (s.as_str(), *m)).collect();
        assert_eq!(table["1"], 0);
        assert_eq!(table["1.2"], 2);
        assert_eq!(table["1.2.3"], 6);
        assert_eq!(table["3.4"], 2);
        assert!(verify_ledger(&k, &g).all_pass());
    }

    #[test]
    fn extended_dims_split_local_factor() {
        let k = complex(&[&["1", "2", "3"]]);
        let mut ext = BTreeMap::new();
        // The edge 1.2 is governed by a 0-dimensional nerve face.
        let edge = k.simplex_from_names(&["1", "2"]).unwrap();
        ext.insert(edge, 0usize);
        let g = build_ledger(&k, Some(&ext));
        let p = piece(&g, "1.2");
        assert_eq!(p.extended_split, Some((0, 1, 2)));
        assert_eq!(p.dim_local, 3, "local dimension is unchanged");
        assert_eq!(piece(&g, "1.2.3").extended_split, None);
        assert!(verify_ledger(&k, &g).all_pass());
        let v = g.to_json();
        assert_eq!(v["pieces"][3]["extended_split"]["core"], 1);
    }

    #[test]
    fn verification_catches_tampering() {
        let k = complex(&[&["a", "b"]]);
        let mut g = build_ledger(&k, None);
        g.pieces[0].dim_thickening = 7;
        let r = verify_ledger(&k, &g);
        assert!(!r.pieces_ok);
        assert!(!r.all_pass());
        assert!(r.failures[0].contains("piece a"));

        let mut g = build_ledger(&k, None);
        g.interfaces[0].factors = (1, 2, 0);
        let r = verify_ledger(&k, &g);
        assert!(!r.interfaces_ok);
        assert!(!r.splitting_ok);

        let mut g = build_ledger(&k, None);
        g.demand[2].1.pop();
        let r = verify_ledger(&k, &g);
        assert!(!r.demand_ok);

        let mut g = build_ledger(&k, None);
        g.multiplicity[2].1 = 5;
        let r = verify_ledger(&k, &g);
        assert!(!r.demand_ok);
    }

    #[test]
    fn random_ledgers_verify() {
        let mut rng = crate::testutil::rng(0x91);
        let mut seen_dims = std::collections::BTreeSet::new();
        for _ in 0..200 {
            let k = crate::testutil::random_complex(&mut rng, 8, 10);
            if k.is_empty() {
                continue;
            }
            let d = k.dimension().unwrap();
            assert!(d <= 4, "random generator stays within facet size 5");
            seen_dims.insert(d);
            let g = build_ledger(&k, None);
            let r = verify_ledger(&k, &g);
            assert!(r.all_pass(), "failures: {:?}", r.failures);
            // Global piece/interface counts match the simplex counts.
            let total: usize =
                (0..=d).map(|q| k.simplices_of_dim(q).len()).sum();
            assert_eq!(g.pieces.len(), total);
            assert_eq!(g.demand.len(), total);
        }
        assert!(seen_dims.len() >= 3, "dimension coverage too thin");
    }

    #[test]
    fn json_shape() {
        let k = complex(&[&["a", "b"]]);
        let g = build_ledger(&k, None);
        let v = g.to_json();
        assert_eq!(v["ambient_dim"], 1);
        assert_eq!(v["total_piece_dim"], 3);
        assert_eq!(v["total_interface_dim"], 2);
        assert_eq!(v["pieces"].as_array().unwrap().len(), 3);
        assert_eq!(v["interfaces"][0]["factors"], json!([1, 1, 0]));
        let text = g.to_text();
        assert!(text.contains("pieces total 3"));
        assert!(text.contains("interface a < a.b"));
    }
}
