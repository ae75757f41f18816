//! Graph representations and algorithms: partially directed graphs, DAGs,
//! essential graphs, chain components, chordality and clique sequences,
//! consistent extensions and CPDAG conversion.
//!
//! Edge encoding follows the ordered-pair convention: `(u,v) ∈ E` alone is
//! the directed edge `u→v`; both `(u,v)` and `(v,u)` present is the
//! undirected edge `u−v`.

mod chordal;
mod cpdag;
mod extension;

pub use chordal::{clique_separator_sequence, clique_separator_sequence_from, is_chordal};
pub use cpdag::{dag_to_cpdag, is_essential, ChainComponent, ChainDecomposition, EssentialGraph};
pub use extension::consistent_extension;

use std::fmt;

use thiserror::Error;

/// Maximum vertex count supported by the bitmask representation.
pub const MAX_VERTICES: usize = 128;

/// Errors from graph construction and graph algorithms.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph supports at most {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected edge between {0} and {1} is absent or of the wrong kind")]
    EdgeKindMismatch(usize, usize),
    #[error("induced subgraph contains the directed edge {0}→{1}")]
    DirectedEdgeInInduced(usize, usize),
    #[error("induced subgraph is not chordal")]
    NotChordal,
    #[error("no consistent extension exists")]
    NoConsistentExtension,
    #[error("graph is not an essential graph: {0}")]
    NotEssential(&'static str),
    #[error("graphs have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("directed part contains a cycle")]
    DirectedCycle,
    #[error("internal consistency failure: {0}")]
    Internal(&'static str),
    #[error("adjacency parse error: {0}")]
    Parse(String),
}

/// A set of vertices, stored as a 128-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    /// All vertices `0..q`.
    pub fn full(q: usize) -> Self {
        if q == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << q) - 1)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} exceeds the supported range");
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Partially directed graph over vertices `0..q` in the ordered-pair
/// encoding. Any combination of directed and undirected edges is
/// representable; chain-graph or essential-graph status is checked by the
/// dedicated predicates, not by this type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pdag {
    q: usize,
    /// `rows[u]` bit `v` set iff the ordered pair `(u,v)` is in the edge set.
    rows: Vec<u128>,
}

impl Pdag {
    /// Empty graph on `q` vertices.
    pub fn new(q: usize) -> Result<Self, GraphError> {
        if q > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(q));
        }
        Ok(Pdag {
            q,
            rows: vec![0; q],
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.q
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.q {
            return Err(GraphError::VertexOutOfRange(u, self.q));
        }
        if v >= self.q {
            return Err(GraphError::VertexOutOfRange(v, self.q));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    /// Whether the ordered pair `(u,v)` is in the edge set.
    #[inline]
    pub fn has_pair(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn is_directed(&self, u: usize, v: usize) -> bool {
        self.has_pair(u, v) && !self.has_pair(v, u)
    }

    #[inline]
    pub fn is_undirected(&self, u: usize, v: usize) -> bool {
        self.has_pair(u, v) && self.has_pair(v, u)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_pair(u, v) || self.has_pair(v, u)
    }

    pub fn add_undirected(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.rows[u] |= 1u128 << v;
        self.rows[v] |= 1u128 << u;
        Ok(())
    }

    pub fn add_directed(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.rows[u] |= 1u128 << v;
        self.rows[v] &= !(1u128 << u);
        Ok(())
    }

    /// Removes whatever edge joins `u` and `v`.
    pub fn remove_between(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.rows[u] &= !(1u128 << v);
        self.rows[v] &= !(1u128 << u);
        Ok(())
    }

    /// Turns the undirected edge `u−v` into `u→v`.
    pub fn orient(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if !self.is_undirected(u, v) {
            return Err(GraphError::EdgeKindMismatch(u, v));
        }
        self.rows[v] &= !(1u128 << u);
        Ok(())
    }

    /// Turns the directed edge `u→v` into `u−v`.
    pub fn unorient(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if !self.is_directed(u, v) {
            return Err(GraphError::EdgeKindMismatch(u, v));
        }
        self.rows[v] |= 1u128 << u;
        Ok(())
    }

    /// Mask of `v` with `(u,v)` in the edge set (children plus undirected).
    #[inline]
    pub fn out_mask(&self, u: usize) -> VertexSet {
        VertexSet(self.rows[u])
    }

    /// Mask of `v` with `(v,u)` in the edge set (parents plus undirected).
    #[inline]
    pub fn in_mask(&self, u: usize) -> VertexSet {
        let mut m = 0u128;
        for v in 0..self.q {
            m |= (self.rows[v] >> u & 1) << v;
        }
        VertexSet(m)
    }

    /// Undirected neighbors of `u`.
    #[inline]
    pub fn und_mask(&self, u: usize) -> VertexSet {
        self.out_mask(u).intersect(self.in_mask(u))
    }

    /// Parents of `u` (strictly directed in-edges).
    #[inline]
    pub fn parent_mask(&self, u: usize) -> VertexSet {
        self.in_mask(u).minus(self.out_mask(u))
    }

    /// Children of `u` (strictly directed out-edges).
    #[inline]
    pub fn child_mask(&self, u: usize) -> VertexSet {
        self.out_mask(u).minus(self.in_mask(u))
    }

    /// All vertices adjacent to `u` regardless of edge kind.
    #[inline]
    pub fn adj_mask(&self, u: usize) -> VertexSet {
        self.out_mask(u).union(self.in_mask(u))
    }

    /// Undirected adjacency of every vertex, one mask per vertex.
    pub(crate) fn und_masks(&self) -> Vec<u128> {
        let mut masks = vec![0u128; self.q];
        for u in 0..self.q {
            for v in self.out_mask(u).iter() {
                if self.has_pair(v, u) {
                    masks[u] |= 1u128 << v;
                }
            }
        }
        masks
    }

    /// Ordered pairs `(u,v)` with `u→v`.
    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.q {
            for v in self.out_mask(u).iter() {
                if !self.has_pair(v, u) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Unordered pairs `{u,v}` with `u−v`, reported as `u < v`.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.q {
            for v in self.out_mask(u).iter() {
                if v > u && self.has_pair(v, u) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Unordered adjacent pairs, reported as `u < v`.
    pub fn skeleton_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.q {
            for v in (u + 1)..self.q {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of skeleton edges (each undirected or directed edge counts once).
    pub fn skeleton_edge_count(&self) -> usize {
        let mut n = 0;
        for u in 0..self.q {
            for v in self.out_mask(u).iter() {
                if v > u || !self.has_pair(v, u) {
                    n += 1;
                }
            }
        }
        n
    }

    /// True when every edge is directed.
    pub fn is_fully_directed(&self) -> bool {
        (0..self.q).all(|u| self.und_mask(u).is_empty())
    }

    /// Compact row-major 0/1 rendering of the adjacency matrix.
    pub fn adjacency_string(&self) -> String {
        let mut s = String::with_capacity(self.q * self.q);
        for u in 0..self.q {
            for v in 0..self.q {
                s.push(if self.has_pair(u, v) { '1' } else { '0' });
            }
        }
        s
    }

    /// Inverse of [`adjacency_string`](Self::adjacency_string).
    pub fn from_adjacency_string(q: usize, s: &str) -> Result<Self, GraphError> {
        if s.len() != q * q {
            return Err(GraphError::Parse(format!(
                "adjacency string has {} characters, expected {}",
                s.len(),
                q * q
            )));
        }
        let mut g = Pdag::new(q)?;
        for (i, c) in s.bytes().enumerate() {
            let (u, v) = (i / q, i % q);
            match c {
                b'0' => {}
                b'1' => {
                    if u == v {
                        return Err(GraphError::SelfLoop(u));
                    }
                    g.rows[u] |= 1u128 << v;
                }
                _ => return Err(GraphError::Parse("expected only 0/1".into())),
            }
        }
        Ok(g)
    }

    /// Renders the comma-separated adjacency-matrix text format: `q` lines
    /// of `q` comma-separated 0/1 entries, `(u,v)=1` alone meaning `u→v`
    /// and both entries set meaning `u−v`.
    pub fn to_adjacency_text(&self) -> String {
        let mut s = String::new();
        for u in 0..self.q {
            for v in 0..self.q {
                if v > 0 {
                    s.push(',');
                }
                s.push(if self.has_pair(u, v) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    /// Parses the adjacency-matrix text format.
    pub fn parse_adjacency_text(text: &str) -> Result<Self, GraphError> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        let q = lines.len();
        if q > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(q));
        }
        let mut g = Pdag::new(q)?;
        for (u, line) in lines.iter().enumerate() {
            let cells: Vec<&str> = line.split(',').map(str::trim).collect();
            if cells.len() != q {
                return Err(GraphError::Parse(format!(
                    "row {u} has {} entries, expected {q}",
                    cells.len()
                )));
            }
            for (v, cell) in cells.iter().enumerate() {
                match *cell {
                    "0" => {}
                    "1" => {
                        if u == v {
                            return Err(GraphError::SelfLoop(u));
                        }
                        g.rows[u] |= 1u128 << v;
                    }
                    other => {
                        return Err(GraphError::Parse(format!(
                            "row {u}, column {v}: expected 0 or 1, got {other:?}"
                        )))
                    }
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Pdag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pdag(q={}", self.q)?;
        for (u, v) in self.undirected_edges() {
            write!(f, ", {u}−{v}")?;
        }
        for (u, v) in self.directed_edges() {
            write!(f, ", {u}→{v}")?;
        }
        write!(f, ")")
    }
}

/// Directed acyclic graph; a [`Pdag`] restricted to directed edges with no
/// directed cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dag(Pdag);

impl Dag {
    /// Validates that `g` is fully directed and acyclic.
    pub fn try_from_pdag(g: Pdag) -> Result<Self, GraphError> {
        if !g.is_fully_directed() {
            // find the offending pair for the message
            for u in 0..g.q {
                if let Some(v) = g.und_mask(u).min() {
                    return Err(GraphError::EdgeKindMismatch(u, v));
                }
            }
        }
        if topological_order(&g).is_none() {
            return Err(GraphError::DirectedCycle);
        }
        Ok(Dag(g))
    }

    pub fn as_pdag(&self) -> &Pdag {
        &self.0
    }

    pub fn into_pdag(self) -> Pdag {
        self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.q
    }

    pub fn parent_mask(&self, u: usize) -> VertexSet {
        self.0.parent_mask(u)
    }

    /// A topological order (parents before children).
    pub fn topological_order(&self) -> Vec<usize> {
        topological_order(&self.0).expect("Dag invariant guarantees acyclicity")
    }
}

/// Kahn's algorithm on the directed part; `None` if a directed cycle exists.
/// Ties are resolved lowest-index-first, so the order is deterministic.
pub(crate) fn topological_order(g: &Pdag) -> Option<Vec<usize>> {
    let q = g.q;
    let mut indeg = vec![0usize; q];
    for u in 0..q {
        for v in g.out_mask(u).iter() {
            if !g.has_pair(v, u) {
                indeg[v] += 1;
            }
        }
    }
    let mut ready: Vec<usize> = (0..q).filter(|&v| indeg[v] == 0).collect();
    ready.sort_unstable_by(|a, b| b.cmp(a)); // pop() takes the smallest
    let mut order = Vec::with_capacity(q);
    while let Some(v) = ready.pop() {
        order.push(v);
        let mut changed = false;
        for w in g.child_mask(v).iter() {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
                changed = true;
            }
        }
        if changed {
            ready.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    if order.len() == q {
        Some(order)
    } else {
        None
    }
}

/// Connected components of the undirected part, sorted by smallest member.
/// Two vertices land in the same set iff an undirected path joins them;
/// vertices without undirected edges become singletons.
pub fn chain_components(g: &Pdag) -> Vec<VertexSet> {
    let q = g.q;
    let und = g.und_masks();
    let mut seen = 0u128;
    let mut comps = Vec::new();
    for s in 0..q {
        if seen >> s & 1 == 1 {
            continue;
        }
        let mut comp = 1u128 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u128;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= und[v] & !comp;
            }
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push(VertexSet(comp));
    }
    comps
}

/// Skeleton (as `u < v` pairs) and v-structures `u→z←v` with `u,v`
/// non-adjacent, canonically ordered `u < v`.
pub fn skeleton_and_vstructures(g: &Pdag) -> (Vec<(usize, usize)>, Vec<(usize, usize, usize)>) {
    let skeleton = g.skeleton_edges();
    let mut vstructs = Vec::new();
    for z in 0..g.q {
        let parents = g.parent_mask(z).to_vec();
        for (i, &u) in parents.iter().enumerate() {
            for &v in &parents[i + 1..] {
                if !g.adjacent(u, v) {
                    vstructs.push((u, z, v));
                }
            }
        }
    }
    vstructs.sort_unstable_by_key(|&(u, z, v)| (z, u, v));
    (skeleton, vstructs)
}

/// True when `g` is a chain graph: no directed edge inside an undirected
/// component and no cycle among components.
pub fn is_chain_graph(g: &Pdag) -> bool {
    let comps = chain_components(g);
    let mut comp_of = vec![0usize; g.q];
    for (i, c) in comps.iter().enumerate() {
        for v in c.iter() {
            comp_of[v] = i;
        }
    }
    // directed edge within a component closes a partially directed cycle
    for (u, v) in g.directed_edges() {
        if comp_of[u] == comp_of[v] {
            return false;
        }
    }
    // component-level DAG must be acyclic
    let k = comps.len();
    let mut cg = Pdag::new(k.min(MAX_VERTICES)).expect("component count bounded by q");
    if k > MAX_VERTICES {
        unreachable!("components cannot exceed vertex count");
    }
    for (u, v) in g.directed_edges() {
        let (cu, cv) = (comp_of[u], comp_of[v]);
        if cu != cv {
            // ignore duplicate pairs; add_directed is idempotent here because
            // a chain-graph candidate never holds the reverse pair by this point
            if !cg.has_pair(cv, cu) {
                cg.rows[cu] |= 1u128 << cv;
            } else {
                return false; // opposite direction already present
            }
        }
    }
    topological_order(&cg).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pdag(q: usize, und: &[(usize, usize)], dir: &[(usize, usize)]) -> Pdag {
        let mut g = Pdag::new(q).unwrap();
        for &(u, v) in und {
            g.add_undirected(u, v).unwrap();
        }
        for &(u, v) in dir {
            g.add_directed(u, v).unwrap();
        }
        g
    }

    #[test]
    fn pair_convention_roundtrips() {
        let mut g = Pdag::new(3).unwrap();
        g.add_directed(0, 1).unwrap();
        g.add_undirected(1, 2).unwrap();
        assert!(g.is_directed(0, 1));
        assert!(!g.is_directed(1, 0));
        assert!(g.is_undirected(1, 2));
        assert!(g.adjacent(2, 1));
        assert_eq!(g.directed_edges(), vec![(0, 1)]);
        assert_eq!(g.undirected_edges(), vec![(1, 2)]);
        assert_eq!(g.skeleton_edge_count(), 2);
    }

    #[test]
    fn self_loops_rejected() {
        let mut g = Pdag::new(2).unwrap();
        assert_eq!(g.add_directed(1, 1), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Pdag::parse_adjacency_text("1,0\n0,0\n"),
            Err(GraphError::SelfLoop(0))
        );
    }

    #[test]
    fn chain_components_examples() {
        // no edges
        let g = Pdag::new(3).unwrap();
        let comps = chain_components(&g);
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], VertexSet::singleton(0));

        // 0−1, 1−2, 2→3
        let g = pdag(4, &[(0, 1), (1, 2)], &[(2, 3)]);
        let comps = chain_components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], [0, 1, 2].into_iter().collect());
        assert_eq!(comps[1], VertexSet::singleton(3));

        // complete undirected graph on 4 vertices
        let mut g = Pdag::new(4).unwrap();
        for u in 0..4 {
            for v in (u + 1)..4 {
                g.add_undirected(u, v).unwrap();
            }
        }
        assert_eq!(chain_components(&g), vec![VertexSet::full(4)]);
    }

    #[test]
    fn vstructure_detection() {
        // 0→2←1, non-adjacent 0,1
        let g = pdag(3, &[], &[(0, 2), (1, 2)]);
        let (skel, vs) = skeleton_and_vstructures(&g);
        assert_eq!(skel, vec![(0, 2), (1, 2)]);
        assert_eq!(vs, vec![(0, 2, 1)]);

        // shielded collider
        let g = pdag(3, &[(0, 1)], &[(0, 2), (1, 2)]);
        assert!(skeleton_and_vstructures(&g).1.is_empty());

        // chain 0→1→2
        let g = pdag(3, &[], &[(0, 1), (1, 2)]);
        assert!(skeleton_and_vstructures(&g).1.is_empty());
    }

    #[test]
    fn dag_validation() {
        let g = pdag(3, &[], &[(0, 1), (1, 2)]);
        let d = Dag::try_from_pdag(g).unwrap();
        assert_eq!(d.topological_order(), vec![0, 1, 2]);

        let cyc = pdag(3, &[], &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(Dag::try_from_pdag(cyc), Err(GraphError::DirectedCycle));

        let und = pdag(2, &[(0, 1)], &[]);
        assert!(Dag::try_from_pdag(und).is_err());
    }

    #[test]
    fn chain_graph_detection() {
        // directed edge inside an undirected component: 0−1−2 plus 0→2
        let g = pdag(3, &[(0, 1), (1, 2)], &[(0, 2)]);
        assert!(!is_chain_graph(&g));

        // component-level cycle
        let g = pdag(4, &[(0, 1), (2, 3)], &[(0, 2), (3, 1)]);
        assert!(!is_chain_graph(&g));

        // valid chain graph
        let g = pdag(4, &[(0, 1), (2, 3)], &[(0, 2), (1, 3)]);
        assert!(is_chain_graph(&g));
    }

    #[test]
    fn adjacency_text_roundtrip() {
        let g = pdag(3, &[(1, 2)], &[(0, 1)]);
        let text = g.to_adjacency_text();
        assert_eq!(text, "0,1,0\n0,0,1\n0,1,0\n");
        let h = Pdag::parse_adjacency_text(&text).unwrap();
        assert_eq!(g, h);
        let s = g.adjacency_string();
        assert_eq!(Pdag::from_adjacency_string(3, &s).unwrap(), g);
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [5, 1, 3].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.min(), Some(1));
        assert_eq!(format!("{s}"), "{1,3,5}");
        assert!(s.intersect(VertexSet::singleton(3)) == VertexSet::singleton(3));
        assert!(VertexSet::full(4).minus(s).to_vec() == vec![0, 2]);
    }
}
