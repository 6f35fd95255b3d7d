//! Immutable finite simple graphs with stable non-negative integer vertex ids.
//!
//! All derived graphs (unit spheres, induced subgraphs, distance spheres)
//! preserve the host's vertex ids so that subgraph and dual relationships
//! stay traceable across operations. Iteration order is sorted everywhere.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Errors raised by graph construction and vertex-addressed operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(u32),
    #[error("loop edge at vertex {0}")]
    LoopEdge(u32),
    #[error("edge endpoint {0} is not a declared vertex")]
    UnknownEndpoint(u32),
    #[error("vertex {0} is not in the graph")]
    VertexNotFound(u32),
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotFound(u32, u32),
}

/// An immutable finite simple graph.
///
/// Invariants: no self-loops, symmetric adjacency, every neighbor id is a
/// member of the vertex set. Vertex ids and adjacency lists are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    ids: Vec<u32>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Build a graph from a vertex list and an unordered edge list.
    ///
    /// The edge list is deduplicated; `(u, v)` and `(v, u)` denote the same
    /// edge. Errors on duplicate vertex ids, loop edges and undeclared
    /// endpoints.
    pub fn build(
        vertices: impl IntoIterator<Item = u32>,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, GraphError> {
        let mut ids: Vec<u32> = vertices.into_iter().collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0]));
        }
        let mut adj = vec![Vec::new(); ids.len()];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let ui = ids
                .binary_search(&u)
                .map_err(|_| GraphError::UnknownEndpoint(u))?;
            let vi = ids
                .binary_search(&v)
                .map_err(|_| GraphError::UnknownEndpoint(v))?;
            adj[ui].push(v);
            adj[vi].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { ids, adj })
    }

    /// The empty graph, carrier of the (-1)-sphere.
    pub fn empty() -> Self {
        Graph {
            ids: Vec::new(),
            adj: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Vertex ids in ascending order.
    pub fn vertices(&self) -> &[u32] {
        &self.ids
    }

    /// Largest vertex id, if any.
    pub fn max_vertex_id(&self) -> Option<u32> {
        self.ids.last().copied()
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, u: u32, v: u32) -> bool {
        match self.index_of(u) {
            Some(i) => self.adj[i].binary_search(&v).is_ok(),
            None => false,
        }
    }

    /// Position of vertex `v` in the sorted id list.
    pub(crate) fn index_of(&self, v: u32) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbors(&self, v: u32) -> Result<&[u32], GraphError> {
        let i = self.index_of(v).ok_or(GraphError::VertexNotFound(v))?;
        Ok(&self.adj[i])
    }

    pub fn degree(&self, v: u32) -> Result<usize, GraphError> {
        Ok(self.neighbors(v)?.len())
    }

    /// Neighbor ids by internal index; used by algorithms that already
    /// resolved indices.
    pub(crate) fn neighbors_by_index(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, &u) in self.ids.iter().enumerate() {
            for &v in &self.adj[i] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on the neighbors of `v`; ids preserved.
    pub fn unit_sphere(&self, v: u32) -> Result<Graph, GraphError> {
        let nbrs = self.neighbors(v)?.to_vec();
        Ok(self.induced_sorted(&nbrs))
    }

    /// Induced subgraph on the vertices at distance exactly `r` from `v`.
    pub fn sphere_of_radius(&self, v: u32, r: usize) -> Result<Graph, GraphError> {
        let dist = self.bfs_distances(v)?;
        let mut shell: Vec<u32> = self
            .ids
            .iter()
            .enumerate()
            .filter(|(i, _)| dist[*i] == Some(r))
            .map(|(_, &id)| id)
            .collect();
        shell.sort_unstable();
        Ok(self.induced_sorted(&shell))
    }

    /// BFS shortest-path length between `u` and `v`, `None` if disconnected.
    pub fn distance(&self, u: u32, v: u32) -> Result<Option<usize>, GraphError> {
        if !self.contains_vertex(v) {
            return Err(GraphError::VertexNotFound(v));
        }
        let dist = self.bfs_distances(u)?;
        Ok(dist[self.index_of(v).unwrap()])
    }

    /// Distances from `v` to every vertex, indexed like `vertices()`.
    pub fn bfs_distances(&self, v: u32) -> Result<Vec<Option<usize>>, GraphError> {
        let start = self.index_of(v).ok_or(GraphError::VertexNotFound(v))?;
        let mut dist = vec![None; self.ids.len()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let d = dist[i].unwrap();
            for &w in &self.adj[i] {
                let j = self.index_of(w).unwrap();
                if dist[j].is_none() {
                    dist[j] = Some(d + 1);
                    queue.push_back(j);
                }
            }
        }
        Ok(dist)
    }

    /// Induced subgraph keeping exactly the edges with both endpoints in `s`.
    pub fn induced(&self, s: &VertexSubset) -> Result<Graph, GraphError> {
        for &v in s.members() {
            if !self.contains_vertex(v) {
                return Err(GraphError::VertexNotFound(v));
            }
        }
        Ok(self.induced_sorted(s.members()))
    }

    /// Induced subgraph on a sorted, deduplicated id slice assumed to be a
    /// subset of the vertex set.
    pub(crate) fn induced_sorted(&self, members: &[u32]) -> Graph {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let adj = members
            .iter()
            .map(|&v| {
                let i = self.index_of(v).expect("member of host");
                self.adj[i]
                    .iter()
                    .copied()
                    .filter(|w| members.binary_search(w).is_ok())
                    .collect()
            })
            .collect();
        Graph {
            ids: members.to_vec(),
            adj,
        }
    }

    /// The graph with vertex `v` (and its edges) removed.
    pub fn remove_vertex(&self, v: u32) -> Result<Graph, GraphError> {
        if !self.contains_vertex(v) {
            return Err(GraphError::VertexNotFound(v));
        }
        let rest: Vec<u32> = self.ids.iter().copied().filter(|&w| w != v).collect();
        Ok(self.induced_sorted(&rest))
    }

    /// Connectivity, with the empty graph counted as connected.
    pub fn is_connected(&self) -> bool {
        if self.ids.is_empty() {
            return true;
        }
        let dist = self.bfs_distances(self.ids[0]).unwrap();
        dist.iter().all(Option::is_some)
    }

    /// True when the induced structure is a cyclic graph C_n with n >= 4,
    /// the 1-spheres of this library.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 4
            && self.is_connected()
            && self.adj.iter().all(|nbrs| nbrs.len() == 2)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({} vertices, {} edges; {:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges()
        )
    }
}

/// A sorted set of vertex ids belonging to some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    members: Vec<u32>,
}

impl VertexSubset {
    /// Sort and deduplicate `members`; membership in a host is checked by the
    /// operations that consume the subset.
    pub fn new(members: impl IntoIterator<Item = u32>) -> Self {
        let mut members: Vec<u32> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSubset { members }
    }

    /// Like `new`, but verifies every member belongs to `host`.
    pub fn in_host(host: &Graph, members: impl IntoIterator<Item = u32>) -> Result<Self, GraphError> {
        let s = Self::new(members);
        for &v in &s.members {
            if !host.contains_vertex(v) {
                return Err(GraphError::VertexNotFound(v));
            }
        }
        Ok(s)
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

impl FromIterator<u32> for VertexSubset {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        VertexSubset::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn build_empty_graph() {
        let g = Graph::build([], []).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn build_octahedron_counts() {
        let g = generators::octahedron();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn build_deduplicates_reversed_edge() {
        let g = Graph::build([0, 1], [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::build([0, 0], []),
            Err(GraphError::DuplicateVertex(0))
        );
        assert_eq!(Graph::build([0], [(0, 0)]), Err(GraphError::LoopEdge(0)));
        assert_eq!(
            Graph::build([0, 1], [(0, 2)]),
            Err(GraphError::UnknownEndpoint(2))
        );
    }

    #[test]
    fn unit_sphere_of_octahedron_is_c4() {
        let g = generators::octahedron();
        for &v in g.vertices() {
            let s = g.unit_sphere(v).unwrap();
            assert!(s.is_cycle());
            assert_eq!(s.vertex_count(), 4);
            assert!(!s.contains_vertex(v));
        }
    }

    #[test]
    fn unit_sphere_of_complete_graph() {
        let k5 = generators::complete(5);
        let s = k5.unit_sphere(0).unwrap();
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(s.edge_count(), 6);
    }

    #[test]
    fn unit_sphere_of_cycle_is_two_points() {
        let c6 = generators::cycle(6);
        let s = c6.unit_sphere(0).unwrap();
        assert_eq!(s.vertex_count(), 2);
        assert_eq!(s.edge_count(), 0);
    }

    #[test]
    fn second_sphere_of_octahedron_is_antipode() {
        let g = generators::octahedron();
        let s = g.sphere_of_radius(0, 2).unwrap();
        assert_eq!(s.vertex_count(), 1);
    }

    // Independent distance oracle: Floyd-Warshall on the adjacency matrix.
    fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
        let n = g.vertex_count();
        let ids = g.vertices();
        let mut d = vec![vec![None; n]; n];
        for i in 0..n {
            d[i][i] = Some(0);
            for &w in g.neighbors(ids[i]).unwrap() {
                let j = ids.binary_search(&w).unwrap();
                d[i][j] = Some(1);
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                        if d[i][j].map_or(true, |c| a + b < c) {
                            d[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        d
    }

    #[test]
    fn second_sphere_of_icosahedron_is_c5() {
        let g = generators::icosahedron();
        let fw = floyd_warshall(&g);
        let shell: Vec<u32> = g
            .vertices()
            .iter()
            .enumerate()
            .filter(|(j, _)| fw[0][*j] == Some(2))
            .map(|(_, &v)| v)
            .collect();
        assert_eq!(shell.len(), 5);
        let s = g.sphere_of_radius(0, 2).unwrap();
        assert_eq!(s.vertices(), shell.as_slice());
        assert!(s.is_cycle());
        assert_eq!(s.vertex_count(), 5);
    }

    #[test]
    fn radius_zero_sphere_is_the_vertex() {
        let g = generators::octahedron();
        let s = g.sphere_of_radius(3, 0).unwrap();
        assert_eq!(s.vertices(), &[3]);
    }

    #[test]
    fn distance_cases() {
        let g = generators::octahedron();
        // Antipodal pair (non-adjacent) in a diameter-2 graph.
        let v = 0;
        let anti = *g
            .vertices()
            .iter()
            .find(|&&w| w != v && !g.contains_edge(v, w))
            .unwrap();
        assert_eq!(g.distance(v, anti).unwrap(), Some(2));
        assert_eq!(g.distance(v, v).unwrap(), Some(0));

        let two = Graph::build([0, 1, 2, 3], [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distance(0, 3).unwrap(), None);
        assert_eq!(two.distance(0, 9), Err(GraphError::VertexNotFound(9)));
    }

    #[test]
    fn distance_matches_floyd_warshall_on_octahedron() {
        let g = generators::icosahedron();
        let fw = floyd_warshall(&g);
        let ids = g.vertices();
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate() {
                assert_eq!(g.distance(u, v).unwrap(), fw[i][j]);
            }
        }
    }

    #[test]
    fn induced_subgraphs() {
        let g = generators::octahedron();
        // One triangle's vertices induce K3.
        let tri = crate::complex::clique_complex(&g).layer(2)[0].clone();
        let t = g.induced(&VertexSubset::new(tri)).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (3, 3));

        let e = g.induced(&VertexSubset::new([])).unwrap();
        assert!(e.is_empty());

        let c6 = generators::cycle(6);
        let alt = c6.induced(&VertexSubset::new([0, 2, 4])).unwrap();
        assert_eq!((alt.vertex_count(), alt.edge_count()), (3, 0));

        assert!(g.induced(&VertexSubset::new([99])).is_err());
    }
}
