//! The double bialgebra of finite simple graphs: canonical isomorphism-class
//! representatives, disjoint union, the subset coproduct and the
//! contraction-restriction coproduct.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::linear::{Elem, Tensor2};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    LoopEdge(usize),
    VertexOutOfRange { vertex: usize, count: usize },
    NotAnEdge(usize, usize),
    Parse(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::LoopEdge(v) => write!(f, "loop edge at vertex {}", v),
            GraphError::VertexOutOfRange { vertex, count } => {
                write!(f, "vertex {} out of range for {} vertices", vertex, count)
            }
            GraphError::NotAnEdge(u, v) => write!(f, "{}-{} is not an edge", u, v),
            GraphError::Parse(msg) => write!(f, "malformed graph: {}", msg),
        }
    }
}

impl std::error::Error for GraphError {}

/// The canonical representative of an isomorphism class of finite simple
/// graphs. Two `GraphBasis` values are equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphBasis {
    n: usize,
    /// Sorted list of edges `(u, v)` with `u < v`, in the canonical labeling.
    edges: Vec<(usize, usize)>,
}

/// An element of the graph bialgebra: a rational combination of isoclasses.
pub type GraphElem = Elem<GraphBasis>;

thread_local! {
    static CANON_MEMO: RefCell<HashMap<(usize, Vec<(usize, usize)>), GraphBasis>> =
        RefCell::new(HashMap::new());
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (i, j) = if u < v { (u, v) } else { (v, u) };
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Packed upper-triangular adjacency bitmask under a given relabeling.
fn packed_key(n: usize, edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    let mut key = 0u64;
    for &(u, v) in edges {
        key |= 1 << pair_index(n, perm[u], perm[v]);
    }
    key
}

fn unpack_key(n: usize, key: u64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if key & (1 << pair_index(n, i, j)) != 0 {
                edges.push((i, j));
            }
        }
    }
    edges
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    // Heap's algorithm, iterative.
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

impl GraphBasis {
    /// The empty graph, the unit of the product.
    pub fn empty() -> Self {
        GraphBasis { n: 0, edges: Vec::new() }
    }

    /// A single vertex.
    pub fn vertex() -> Self {
        GraphBasis { n: 1, edges: Vec::new() }
    }

    /// `n` isolated vertices.
    pub fn discrete(n: usize) -> Self {
        GraphBasis { n, edges: Vec::new() }
    }

    /// Canonicalizes an arbitrary labeled simple graph. Isomorphic inputs
    /// yield identical outputs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        assert!(n <= 12, "graph too large for packed canonical form");
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, count: n });
                }
            }
            norm.push(if u < v { (u, v) } else { (v, u) });
        }
        norm.sort_unstable();
        norm.dedup();

        let memo_key = (n, norm.clone());
        if let Some(hit) = CANON_MEMO.with(|m| m.borrow().get(&memo_key).cloned()) {
            return Ok(hit);
        }

        let mut best = u64::MAX;
        for_each_permutation(n, |perm| {
            let key = packed_key(n, &norm, perm);
            if key < best {
                best = key;
            }
        });
        if n == 0 {
            best = 0;
        }
        let canon = GraphBasis { n, edges: unpack_key(n, best) };
        CANON_MEMO.with(|m| m.borrow_mut().insert(memo_key, canon.clone()));
        Ok(canon)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty_graph(&self) -> bool {
        self.n == 0
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&e).is_ok()
    }

    /// Disjoint union `G ⊔ H`, canonicalized; the product of the bialgebra.
    pub fn disjoint_union(&self, other: &GraphBasis) -> GraphBasis {
        let n = self.n + other.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        GraphBasis::new(n, &edges).expect("union of valid graphs is valid")
    }

    /// Induced subgraph on a vertex subset, relabeled and canonicalized.
    pub fn induced(&self, subset: &[usize]) -> GraphBasis {
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in subset.iter().enumerate() {
            relabel[old] = new;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| relabel[u] != usize::MAX && relabel[v] != usize::MAX)
            .map(|&(u, v)| (relabel[u], relabel[v]))
            .collect();
        GraphBasis::new(subset.len(), &edges).expect("induced subgraph is valid")
    }

    /// Subset coproduct: `Δ(G) = Σ_{I ⊆ V} G|_I ⊗ G|_{V∖I}`.
    pub fn coproduct_subsets(&self) -> Tensor2<GraphBasis> {
        let mut out = Tensor2::zero();
        for mask in 0u64..(1 << self.n) {
            let mut inside = Vec::new();
            let mut outside = Vec::new();
            for v in 0..self.n {
                if mask & (1 << v) != 0 {
                    inside.push(v);
                } else {
                    outside.push(v);
                }
            }
            out.add_term((self.induced(&inside), self.induced(&outside)), Scalar::one());
        }
        out
    }

    /// All set partitions of the vertex set whose blocks induce connected
    /// subgraphs. Each partition is a list of sorted blocks.
    pub fn connected_partitions(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        self.partition_rec(0, &mut blocks, &mut out);
        out
    }

    fn partition_rec(
        &self,
        next: usize,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if next == self.n {
            if blocks.iter().all(|b| self.block_connected(b)) {
                out.push(blocks.clone());
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(next);
            self.partition_rec(next + 1, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![next]);
        self.partition_rec(next + 1, blocks, out);
        blocks.pop();
    }

    fn block_connected(&self, block: &[usize]) -> bool {
        if block.is_empty() {
            return false;
        }
        let inset: BTreeSet<usize> = block.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut stack = vec![block[0]];
        seen.insert(block[0]);
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if inset.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == block.len()
    }

    /// Contraction by a partition: one vertex per block, images of
    /// cross-block edges deduplicated, loops dropped.
    pub fn contract_partition(&self, blocks: &[Vec<usize>]) -> GraphBasis {
        let mut block_of = vec![usize::MAX; self.n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                block_of[v] = i;
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| block_of[u] != block_of[v])
            .map(|&(u, v)| (block_of[u], block_of[v]))
            .collect();
        GraphBasis::new(blocks.len(), &edges).expect("contraction is valid")
    }

    /// Restriction by a partition: keep only intra-block edges.
    pub fn restrict_partition(&self, blocks: &[Vec<usize>]) -> GraphBasis {
        let mut block_of = vec![usize::MAX; self.n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                block_of[v] = i;
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| block_of[u] == block_of[v])
            .copied()
            .collect();
        GraphBasis::new(self.n, &edges).expect("restriction is valid")
    }

    /// Contraction-restriction coproduct:
    /// `δ(G) = Σ_{∼ ∈ E_c(G)} G/∼ ⊗ G|∼`.
    pub fn coproduct_contraction(&self) -> Tensor2<GraphBasis> {
        let mut out = Tensor2::zero();
        for blocks in self.connected_partitions() {
            out.add_term(
                (self.contract_partition(&blocks), self.restrict_partition(&blocks)),
                Scalar::one(),
            );
        }
        out
    }

    /// `G ∖ e`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<GraphBasis, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let e = if u < v { (u, v) } else { (v, u) };
        let edges: Vec<(usize, usize)> =
            self.edges.iter().filter(|&&f| f != e).copied().collect();
        GraphBasis::new(self.n, &edges)
    }

    /// `G / e`: merge the endpoints, deduplicate parallel images, drop loops.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<GraphBasis, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let remap = |w: usize| -> usize {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (remap(a), remap(b)))
            .filter(|&(a, b)| a != b)
            .collect();
        GraphBasis::new(self.n - 1, &edges)
    }

    pub fn connected_components(&self) -> Vec<GraphBasis> {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &(a, b) in &self.edges {
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| {
                let vs: Vec<usize> =
                    (0..self.n).filter(|&v| comp[v] == c).collect();
                self.induced(&vs)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_components().len() == 1
    }

    /// Parses the text format `n; u-v,u-v,...`; an empty edge list is allowed.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let (head, tail) = text
            .split_once(';')
            .ok_or_else(|| GraphError::Parse("expected `n; edges`".into()))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| GraphError::Parse(format!("bad vertex count {:?}", head.trim())))?;
        let mut edges = Vec::new();
        for part in tail.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| GraphError::Parse(format!("bad edge {:?}", part)))?;
            let u: usize = a
                .trim()
                .parse()
                .map_err(|_| GraphError::Parse(format!("bad vertex {:?}", a)))?;
            let v: usize = b
                .trim()
                .parse()
                .map_err(|_| GraphError::Parse(format!("bad vertex {:?}", b)))?;
            edges.push((u, v));
        }
        GraphBasis::new(n, &edges)
    }

    /// Canonical edge-list rendering, the inverse of `parse`.
    pub fn render(&self) -> String {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", u, v))
            .collect();
        format!("{}; {}", self.n, edges.join(","))
    }
}

impl fmt::Display for GraphBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.render())
    }
}

impl fmt::Debug for GraphBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G[{}]", self.render())
    }
}

/// Counit of the subset coproduct: the coefficient of the empty graph.
pub fn counit_subsets(x: &GraphElem) -> Scalar {
    x.coeff(&GraphBasis::empty())
}

/// Counit of the contraction coproduct: total coefficient of edgeless graphs.
pub fn counit_contraction(x: &GraphElem) -> Scalar {
    x.iter()
        .filter(|(g, _)| g.is_edgeless())
        .map(|(_, c)| c.clone())
        .sum()
}

/// All isoclasses of graphs with at most `max_vertices` vertices, sorted.
pub fn isoclasses_up_to(max_vertices: usize) -> Vec<GraphBasis> {
    let mut out = BTreeSet::new();
    for n in 0..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &e)| e)
                .collect();
            out.insert(GraphBasis::new(n, &edges).unwrap());
        }
    }
    out.into_iter().collect()
}

// Common small graphs, used all over the tests and reports.
pub fn k2() -> GraphBasis {
    GraphBasis::new(2, &[(0, 1)]).unwrap()
}

pub fn path(n: usize) -> GraphBasis {
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    GraphBasis::new(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> GraphBasis {
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    GraphBasis::new(n, &edges).unwrap()
}

pub fn complete(n: usize) -> GraphBasis {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    GraphBasis::new(n, &edges).unwrap()
}

pub fn triangle() -> GraphBasis {
    complete(3)
}
