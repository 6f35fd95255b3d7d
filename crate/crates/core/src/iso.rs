//! Canonical labeling by iterated partition refinement with backtracking on
//! the residual cells, plus the isomorphism and automorphism primitives
//! derived from it.
//!
//! The canonical form of a graph is the lexicographically least packed
//! adjacency matrix over all labelings reachable by the refinement search.
//! Two graphs are isomorphic exactly when their canonical forms agree, and
//! every automorphism appears as a quotient of two minimal-leaf labelings,
//! so the enumeration below is complete.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Graph;

/// Search caps for the exhaustive primitives.
pub const DEFAULT_AUTOMORPHISM_CAP: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("automorphism search cap exceeded: graph has {vertices} vertices, cap is {cap}")]
    SearchCapExceeded { vertices: usize, cap: usize },
}

/// A bijection on vertex ids: an isomorphism certificate between two graphs,
/// an automorphism, or an involution on a unit sphere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMap {
    pairs: BTreeMap<u32, u32>,
}

/// Certificate produced by a successful isomorphism search.
pub type IsoCertificate = VertexMap;

impl VertexMap {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        VertexMap {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn identity(ids: &[u32]) -> Self {
        Self::from_pairs(ids.iter().map(|&v| (v, v)))
    }

    pub fn apply(&self, v: u32) -> Option<u32> {
        self.pairs.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.pairs.iter().map(|(&a, &b)| (a, b))
    }

    pub fn inverse(&self) -> Self {
        Self::from_pairs(self.pairs.iter().map(|(&a, &b)| (b, a)))
    }

    /// `other` after `self`: v -> other(self(v)).
    pub fn then(&self, other: &Self) -> Option<Self> {
        let mut pairs = BTreeMap::new();
        for (&a, &b) in &self.pairs {
            pairs.insert(a, other.apply(b)?);
        }
        Some(VertexMap { pairs })
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|(&a, &b)| a == b)
    }

    pub fn is_involution(&self) -> bool {
        self.pairs.iter().all(|(&a, &b)| self.apply(b) == Some(a))
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        self.pairs
            .iter()
            .filter(|(&a, &b)| a == b)
            .map(|(&a, _)| a)
            .collect()
    }

    pub fn has_fixed_point(&self) -> bool {
        self.pairs.iter().any(|(&a, &b)| a == b)
    }

    /// True when this map carries edges of `g` to edges of `h` and
    /// non-edges to non-edges, covering both vertex sets exactly.
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        if self.pairs.len() != g.vertex_count() || h.vertex_count() != g.vertex_count() {
            return false;
        }
        let mut seen: Vec<u32> = self.pairs.values().copied().collect();
        seen.sort_unstable();
        if seen != h.vertices() || !self.pairs.keys().copied().eq(g.vertices().iter().copied()) {
            return false;
        }
        for &u in g.vertices() {
            for &v in g.vertices() {
                if u < v {
                    let (iu, iv) = (self.apply(u).unwrap(), self.apply(v).unwrap());
                    if g.contains_edge(u, v) != h.contains_edge(iu, iv) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.is_isomorphism(g, g)
    }
}

/// Canonical form: vertex count plus the packed upper-triangular adjacency
/// matrix under the canonical labeling. Hashable memo key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

/// Bitset adjacency by vertex index, the workhorse of the search.
struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        let ids = g.vertices();
        for (i, &u) in ids.iter().enumerate() {
            for &v in g.neighbors(u).unwrap() {
                let j = ids.binary_search(&v).unwrap();
                rows[i * words + j / 64] |= 1 << (j % 64);
            }
        }
        BitGraph { n, words, rows }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    fn count_in(&self, i: usize, set: &[u64]) -> u32 {
        self.row(i)
            .iter()
            .zip(set)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }
}

/// Ordered partition of vertex indices into cells.
type Partition = Vec<Vec<usize>>;

/// Equitable refinement: split cells by neighbor counts into splitter cells
/// until stable. Cell order (and split order by ascending count) makes the
/// result deterministic.
fn refine(bg: &BitGraph, mut partition: Partition) -> Partition {
    let mut queue: Vec<Vec<usize>> = partition.clone();
    while let Some(splitter) = queue.pop() {
        let mut mask = vec![0u64; bg.words];
        for &v in &splitter {
            mask[v / 64] |= 1 << (v % 64);
        }
        let mut next = Vec::with_capacity(partition.len());
        let mut changed = false;
        for cell in partition {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
            for &v in &cell {
                groups.entry(bg.count_in(v, &mask)).or_default().push(v);
            }
            if groups.len() == 1 {
                next.push(cell);
            } else {
                changed = true;
                for (_, group) in groups {
                    queue.push(group.clone());
                    next.push(group);
                }
            }
        }
        partition = next;
        if !changed && queue.is_empty() {
            break;
        }
    }
    partition
}

fn encode(bg: &BitGraph, labeling: &[usize]) -> Vec<u64> {
    // labeling[v] = canonical index of vertex index v; pack the relabeled
    // upper triangle row-major.
    let n = bg.n;
    let mut inverse = vec![0usize; n];
    for (v, &l) in labeling.iter().enumerate() {
        inverse[l] = v;
    }
    let total = n * (n.saturating_sub(1)) / 2;
    let mut bits = vec![0u64; total.div_ceil(64).max(1)];
    let mut pos = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if bg.adjacent(inverse[i], inverse[j]) {
                bits[pos / 64] |= 1 << (pos % 64);
            }
            pos += 1;
        }
    }
    bits
}

struct CanonSearch<'a> {
    bg: &'a BitGraph,
    collect_all: bool,
    best: Option<Vec<u64>>,
    labelings: Vec<Vec<usize>>,
}

impl<'a> CanonSearch<'a> {
    fn descend(&mut self, partition: Partition) {
        if let Some(cell_pos) = partition.iter().position(|c| c.len() > 1) {
            let cell = partition[cell_pos].clone();
            for &v in &cell {
                let mut next = Vec::with_capacity(partition.len() + 1);
                next.extend_from_slice(&partition[..cell_pos]);
                next.push(vec![v]);
                next.push(cell.iter().copied().filter(|&w| w != v).collect());
                next.extend_from_slice(&partition[cell_pos + 1..]);
                self.descend(refine(self.bg, next));
            }
            return;
        }
        // Leaf: every cell is a singleton.
        let mut labeling = vec![0usize; self.bg.n];
        for (pos, cell) in partition.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let encoding = encode(self.bg, &labeling);
        match &self.best {
            Some(best) if *best < encoding => {}
            Some(best) if *best == encoding => {
                if self.collect_all {
                    self.labelings.push(labeling);
                }
            }
            _ => {
                self.best = Some(encoding);
                self.labelings.clear();
                self.labelings.push(labeling);
            }
        }
    }
}

fn canon_search(g: &Graph, collect_all: bool) -> (CanonicalForm, Vec<Vec<usize>>) {
    let bg = BitGraph::new(g);
    if bg.n == 0 {
        return (CanonicalForm { n: 0, bits: vec![] }, vec![vec![]]);
    }
    let mut search = CanonSearch {
        bg: &bg,
        collect_all,
        best: None,
        labelings: Vec::new(),
    };
    let initial = refine(&bg, vec![(0..bg.n).collect()]);
    search.descend(initial);
    (
        CanonicalForm {
            n: bg.n,
            bits: search.best.unwrap(),
        },
        search.labelings,
    )
}

/// Canonical form of `g`, an isomorphism-complete invariant.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canon_search(g, false).0
}

/// Canonical form together with the labeling (vertex id -> canonical index)
/// that realizes it.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, BTreeMap<u32, usize>) {
    let (form, labelings) = canon_search(g, false);
    let labeling = labelings.into_iter().next().unwrap();
    let map = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, labeling[i]))
        .collect();
    (form, map)
}

/// Deterministic isomorphism test with certificate: compose the canonical
/// labelings of the two graphs when their forms agree.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<IsoCertificate> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (fg, lg) = canonical_labeling(g);
    let (fh, lh) = canonical_labeling(h);
    if fg != fh {
        return None;
    }
    let mut by_index: Vec<u32> = vec![0; h.vertex_count()];
    for (&v, &idx) in &lh {
        by_index[idx] = v;
    }
    let cert = VertexMap::from_pairs(lg.iter().map(|(&v, &idx)| (v, by_index[idx])));
    debug_assert!(cert.is_isomorphism(g, h));
    Some(cert)
}

/// The complete automorphism group of `g` under the default vertex cap.
pub fn automorphisms(g: &Graph) -> Result<Vec<VertexMap>, IsoError> {
    automorphisms_with_cap(g, DEFAULT_AUTOMORPHISM_CAP)
}

/// The complete automorphism group, identity included, in a deterministic
/// order. Every minimal leaf of the canonical search yields one
/// automorphism, and all of them arise that way.
pub fn automorphisms_with_cap(g: &Graph, cap: usize) -> Result<Vec<VertexMap>, IsoError> {
    if g.vertex_count() > cap {
        return Err(IsoError::SearchCapExceeded {
            vertices: g.vertex_count(),
            cap,
        });
    }
    let (_, labelings) = canon_search(g, true);
    let ids = g.vertices();
    let base = &labelings[0];
    let mut base_inverse = vec![0usize; ids.len()];
    for (v, &l) in base.iter().enumerate() {
        base_inverse[l] = v;
    }
    let mut out: Vec<VertexMap> = labelings
        .iter()
        .map(|lab| {
            VertexMap::from_pairs(
                lab.iter()
                    .enumerate()
                    .map(|(v, &l)| (ids[v], ids[base_inverse[l]])),
            )
        })
        .collect();
    out.sort();
    out.dedup();
    debug_assert!(out.iter().all(|p| p.is_automorphism_of(g)));
    Ok(out)
}

/// Find one isomorphism from `g` to `h` extending the given vertex pins, by
/// plain backtracking over degree-compatible candidates. Used for seeded
/// orbit checks where enumerating the whole group is too large.
pub fn isomorphism_extending(g: &Graph, h: &Graph, pins: &[(u32, u32)]) -> Option<IsoCertificate> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let gv = g.vertices();
    let hv = h.vertices();
    let n = gv.len();
    let bg = BitGraph::new(g);
    let bh = BitGraph::new(h);
    let mut mapping: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    for &(a, b) in pins {
        let ai = gv.binary_search(&a).ok()?;
        let bi = hv.binary_search(&b).ok()?;
        if let Some(prev) = mapping[ai] {
            if prev != bi {
                return None;
            }
        }
        if used[bi] && mapping[ai] != Some(bi) {
            return None;
        }
        mapping[ai] = Some(bi);
        used[bi] = true;
    }
    // Order unmapped vertices by descending degree for early pruning.
    let mut order: Vec<usize> = (0..n).filter(|&i| mapping[i].is_none()).collect();
    order.sort_by_key(|&i| (usize::MAX - bg.row(i).iter().map(|w| w.count_ones() as usize).sum::<usize>(), i));

    fn consistent(bg: &BitGraph, bh: &BitGraph, mapping: &[Option<usize>], a: usize, b: usize) -> bool {
        for (w, m) in mapping.iter().enumerate() {
            if let Some(mw) = m {
                if bg.adjacent(a, w) != bh.adjacent(b, *mw) {
                    return false;
                }
            }
        }
        true
    }

    fn backtrack(
        bg: &BitGraph,
        bh: &BitGraph,
        order: &[usize],
        pos: usize,
        mapping: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let a = order[pos];
        let deg_a: u32 = bg.row(a).iter().map(|w| w.count_ones()).sum();
        for b in 0..bh.n {
            if used[b] {
                continue;
            }
            let deg_b: u32 = bh.row(b).iter().map(|w| w.count_ones()).sum();
            if deg_a != deg_b || !consistent(bg, bh, mapping, a, b) {
                continue;
            }
            mapping[a] = Some(b);
            used[b] = true;
            if backtrack(bg, bh, order, pos + 1, mapping, used) {
                return true;
            }
            mapping[a] = None;
            used[b] = false;
        }
        false
    }

    // Verify pins against each other before searching.
    for (a, m) in mapping.clone().iter().enumerate() {
        if let Some(b) = m {
            let mut partial = mapping.clone();
            partial[a] = None;
            if !consistent(&bg, &bh, &partial, a, *b) {
                return None;
            }
        }
    }
    if !backtrack(&bg, &bh, &order, 0, &mut mapping, &mut used) {
        return None;
    }
    let cert = VertexMap::from_pairs(
        mapping
            .iter()
            .enumerate()
            .map(|(a, b)| (gv[a], hv[b.unwrap()])),
    );
    debug_assert!(cert.is_isomorphism(g, h));
    Some(cert)
}
