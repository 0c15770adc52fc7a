//! Acyclic orientations of a graph: single-source counts `φ̃`, the
//! source-count invariance under change of base vertex, additive
//! deletion–contraction, and the sign relation to the linear coefficient of
//! the chromatic polynomial.

use serde::Serialize;

use crate::graph::GraphBasis;
use crate::linear::Lin;
use crate::morphisms::phi_inf;
use crate::scalar::Scalar;

/// An orientation of every edge of a host graph, stored as directed arcs
/// `(tail, head)` aligned with the host's edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    host: GraphBasis,
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn host(&self) -> &GraphBasis {
        &self.host
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Vertices with no incoming arc.
    pub fn sources(&self) -> Vec<usize> {
        let n = self.host.vertex_count();
        let mut incoming = vec![false; n];
        for &(_, head) in &self.arcs {
            incoming[head] = true;
        }
        (0..n).filter(|&v| !incoming[v]).collect()
    }

    /// True when the arcs admit no directed cycle, by iterative Kahn
    /// topological sort.
    pub fn is_acyclic(&self) -> bool {
        let n = self.host.vertex_count();
        let mut indegree = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(tail, head) in &self.arcs {
            indegree[head] += 1;
            out[tail].push(head);
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for &w in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        seen == n
    }
}

/// All acyclic orientations of `g`: the `2^{|E|}` direction choices filtered
/// by acyclicity. The edgeless graph has exactly one (empty) orientation.
pub fn acyclic_orientations(g: &GraphBasis) -> Vec<Orientation> {
    let edges = g.edges().to_vec();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << edges.len()) {
        let arcs = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        let o = Orientation { host: g.clone(), arcs };
        if o.is_acyclic() {
            out.push(o);
        }
    }
    out
}

/// Number of acyclic orientations of `g` whose unique source is `x`.
pub fn count_with_unique_source(g: &GraphBasis, x: usize) -> usize {
    acyclic_orientations(g)
        .iter()
        .filter(|o| o.sources() == [x])
        .count()
}

/// `φ̃(g)`: acyclic orientations with unique source at the base vertex 0 of
/// the canonical labeling. Zero for the empty graph and for disconnected
/// graphs, where no orientation has a single source.
pub fn phi_tilde(g: &GraphBasis) -> usize {
    if g.is_empty_graph() || !g.is_connected() {
        return 0;
    }
    count_with_unique_source(g, 0)
}

/// True when the unique-source count is the same at every base vertex.
pub fn source_transfer_invariance(g: &GraphBasis) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let first = count_with_unique_source(g, 0);
    (1..n).all(|x| count_with_unique_source(g, x) == first)
}

/// Verifies `φ̃(g) = φ̃(g∖e) + φ̃(g/e)` by independent enumeration of all
/// three counts. Errors if `(u, v)` is not an edge.
pub fn dc_phi_tilde(g: &GraphBasis, u: usize, v: usize) -> Result<bool, crate::graph::GraphError> {
    let deleted = g.delete_edge(u, v)?;
    let contracted = g.contract_edge(u, v)?;
    Ok(phi_tilde(g) == phi_tilde(&deleted) + phi_tilde(&contracted))
}

/// Comparison of the chromatic linear coefficient with the signed
/// single-source count: `φ_chr(g) = (−1)^{n+1} φ̃(g)`.
#[derive(Clone, Debug, Serialize)]
pub struct GzReport {
    pub graph: String,
    pub phi_chr: String,
    pub phi_tilde: usize,
    pub sign: i64,
    pub ok: bool,
}

pub fn gz_verify(g: &GraphBasis) -> GzReport {
    let chr = phi_inf(crate::carrier::GraphAlgebra, &Lin::basis(g.clone()));
    let count = phi_tilde(g);
    let sign: i64 = if g.vertex_count() % 2 == 0 { -1 } else { 1 };
    let expected = Scalar::from_int(sign * count as i64);
    GzReport {
        graph: g.render(),
        phi_chr: chr.render(),
        phi_tilde: count,
        sign,
        ok: chr == expected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{Carrier, GraphAlgebra};
    use crate::graph::{complete, cycle, k2, path, triangle};

    #[test]
    fn orientation_counts() {
        assert_eq!(acyclic_orientations(&GraphBasis::vertex()).len(), 1);
        assert_eq!(acyclic_orientations(&GraphBasis::discrete(3)).len(), 1);
        assert_eq!(acyclic_orientations(&k2()).len(), 2);
        assert_eq!(acyclic_orientations(&triangle()).len(), 6);
        assert_eq!(acyclic_orientations(&cycle(4)).len(), 14);
    }

    #[test]
    fn sources_basic() {
        let k2 = k2();
        let (u, v) = k2.edges()[0];
        let o = Orientation { host: k2.clone(), arcs: vec![(u, v)] };
        assert_eq!(o.sources(), vec![u]);
    }

    #[test]
    fn nonempty_acyclic_has_source_disconnected_has_two() {
        for g in GraphAlgebra.basis_up_to(5) {
            for o in acyclic_orientations(&g) {
                let s = o.sources();
                if !g.is_empty_graph() {
                    assert!(!s.is_empty(), "sourceless orientation of {}", g);
                }
                if !g.is_empty_graph() && !g.is_connected() {
                    assert!(s.len() >= 2, "single source on disconnected {}", g);
                }
            }
        }
    }

    #[test]
    fn phi_tilde_golden() {
        assert_eq!(phi_tilde(&GraphBasis::vertex()), 1);
        assert_eq!(phi_tilde(&k2()), 1);
        assert_eq!(phi_tilde(&triangle()), 2);
        assert_eq!(phi_tilde(&path(3)), 1);
        assert_eq!(phi_tilde(&complete(4)), 6);
        assert_eq!(phi_tilde(&GraphBasis::discrete(2)), 0);
        assert_eq!(phi_tilde(&GraphBasis::empty()), 0);
    }

    #[test]
    fn source_transfer_up_to_five() {
        for g in GraphAlgebra.basis_up_to(5) {
            if g.is_connected() {
                assert!(source_transfer_invariance(&g), "on {}", g);
            }
        }
    }

    #[test]
    fn deletion_contraction_examples() {
        let t = triangle();
        let (u, v) = t.edges()[0];
        assert!(dc_phi_tilde(&t, u, v).unwrap());
        let k = k2();
        let (u, v) = k.edges()[0];
        assert!(dc_phi_tilde(&k, u, v).unwrap());
        let c = cycle(4);
        let (u, v) = c.edges()[0];
        assert!(dc_phi_tilde(&c, u, v).unwrap());
        assert!(k.delete_edge(0, 0).is_err() || dc_phi_tilde(&k, 0, 0).is_err());
    }

    #[test]
    fn deletion_contraction_exhaustive() {
        for g in GraphAlgebra.basis_up_to(5) {
            for &(u, v) in g.edges() {
                assert!(dc_phi_tilde(&g, u, v).unwrap(), "on {} edge {}-{}", g, u, v);
            }
        }
    }

    #[test]
    fn gz_identity_small() {
        for g in GraphAlgebra.basis_up_to(5) {
            if g.is_connected() && !g.is_empty_graph() {
                let r = gz_verify(&g);
                assert!(r.ok, "Greene–Zaslavsky failed on {}", g);
            }
        }
    }

    #[test]
    fn gz_report_shape() {
        let r = gz_verify(&k2());
        assert_eq!(r.phi_chr, "-1");
        assert_eq!(r.phi_tilde, 1);
        assert_eq!(r.sign, -1);
        assert!(r.ok);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["phi_tilde"], 1);
    }
}
