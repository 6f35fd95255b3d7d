//! Clique complex of a graph: simplices by dimension, volumes, Euler
//! characteristic, signed incidence matrices and Betti numbers.
//!
//! Orientation convention, used everywhere: simplex vertices are listed in
//! ascending id order and the boundary face omitting position `i` carries
//! sign `(-1)^i`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::{Graph, GraphError};

/// All complete subgraphs of a host graph, grouped by dimension. Layer `k`
/// holds the sorted `(k+1)`-element vertex sets; the k = 0 layer equals the
/// vertex set.
#[derive(Debug, Clone)]
pub struct CliqueComplex {
    layers: Vec<Vec<Vec<u32>>>,
    maximal: Vec<Vec<u32>>,
}

impl CliqueComplex {
    /// Largest simplex dimension, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.layers.len().checked_sub(1)
    }

    /// Simplices of dimension `k` in lexicographic order.
    pub fn layer(&self, k: usize) -> &[Vec<u32>] {
        self.layers.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn layers(&self) -> &[Vec<Vec<u32>>] {
        &self.layers
    }

    /// Simplices not contained in any larger simplex, in lexicographic order
    /// within each dimension, lower dimensions first.
    pub fn maximal_simplices(&self) -> &[Vec<u32>] {
        &self.maximal
    }

    pub fn volumes(&self) -> VolumeVector {
        VolumeVector(self.layers.iter().map(Vec::len).collect())
    }
}

/// Layer counts `v_0..v_d` of a clique complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeVector(pub Vec<usize>);

impl VolumeVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &v)| if k % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

/// Enumerate every complete subgraph of `g`, layer by layer: a `(k+1)`-clique
/// is a `k`-clique extended by a common neighbor larger than its maximum.
pub fn clique_complex(g: &Graph) -> CliqueComplex {
    let ids = g.vertices();
    let n = ids.len();
    if n == 0 {
        return CliqueComplex {
            layers: vec![],
            maximal: vec![],
        };
    }
    let words = n.div_ceil(64);
    let mut adj_bits = vec![vec![0u64; words]; n];
    for (i, &u) in ids.iter().enumerate() {
        for &v in g.neighbors(u).unwrap() {
            let j = ids.binary_search(&v).unwrap();
            adj_bits[i][j / 64] |= 1 << (j % 64);
        }
    }

    // (member indices, common-neighbor bitset) per clique.
    let mut current: Vec<(Vec<usize>, Vec<u64>)> = (0..n)
        .map(|i| (vec![i], adj_bits[i].clone()))
        .collect();
    let mut layers = Vec::new();
    let mut maximal = Vec::new();
    while !current.is_empty() {
        layers.push(
            current
                .iter()
                .map(|(m, _)| m.iter().map(|&i| ids[i]).collect::<Vec<u32>>())
                .collect::<Vec<_>>(),
        );
        let mut next = Vec::new();
        for (members, commons) in &current {
            if commons.iter().all(|&w| w == 0) {
                maximal.push(members.iter().map(|&i| ids[i]).collect());
                continue;
            }
            let top = *members.last().unwrap();
            for j in (top + 1)..n {
                if commons[j / 64] >> (j % 64) & 1 == 1 {
                    let mut ext = members.clone();
                    ext.push(j);
                    let reduced: Vec<u64> = commons
                        .iter()
                        .zip(&adj_bits[j])
                        .map(|(a, b)| a & b)
                        .collect();
                    next.push((ext, reduced));
                }
            }
        }
        current = next;
    }
    // Lower dimensions first, lexicographic inside each dimension.
    maximal.sort_by(|a: &Vec<u32>, b: &Vec<u32>| a.len().cmp(&b.len()).then(a.cmp(b)));
    CliqueComplex { layers, maximal }
}

/// The k-volumes of `g`.
pub fn volumes(g: &Graph) -> VolumeVector {
    clique_complex(g).volumes()
}

/// Alternating sum of the volumes.
pub fn euler_characteristic(g: &Graph) -> i64 {
    volumes(g).euler_characteristic()
}

/// `V_k(x) = v_k(S(x))`, with `V_{-1}(x) = 1` by convention.
pub fn local_volume(g: &Graph, x: u32, k: i64) -> Result<usize, GraphError> {
    let sphere = g.unit_sphere(x)?;
    if k < 0 {
        return Ok(if k == -1 { 1 } else { 0 });
    }
    Ok(volumes(&sphere).0.get(k as usize).copied().unwrap_or(0))
}

/// Signed boundary matrices `d_k`, one for each `1 <= k <= dim`, with
/// `d_k . d_{k+1} = 0` asserted at construction.
#[derive(Debug, Clone)]
pub struct IncidenceMatrices {
    matrices: Vec<SignedMatrix>,
}

impl IncidenceMatrices {
    /// The boundary matrix `d_k` mapping k-chains to (k-1)-chains, if any.
    pub fn boundary(&self, k: usize) -> Option<&SignedMatrix> {
        if k == 0 {
            return None;
        }
        self.matrices.get(k - 1)
    }

    pub fn count(&self) -> usize {
        self.matrices.len()
    }
}

/// Dense integer matrix with entries in {-1, 0, 1}, row-major.
#[derive(Debug, Clone)]
pub struct SignedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl SignedMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.entries[r * self.cols + c]
    }

    fn sparse_columns(&self) -> Vec<Vec<(usize, i8)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for r in 0..self.rows {
            for (c, col) in cols.iter_mut().enumerate() {
                let e = self.get(r, c);
                if e != 0 {
                    col.push((r, e));
                }
            }
        }
        cols
    }
}

pub fn incidence_matrices(complex: &CliqueComplex) -> IncidenceMatrices {
    let dim = match complex.dimension() {
        Some(d) if d >= 1 => d,
        _ => return IncidenceMatrices { matrices: vec![] },
    };
    let mut index_by_layer: Vec<BTreeMap<&[u32], usize>> = Vec::new();
    for layer in complex.layers() {
        index_by_layer.push(
            layer
                .iter()
                .enumerate()
                .map(|(i, s)| (s.as_slice(), i))
                .collect(),
        );
    }
    let mut matrices = Vec::new();
    for k in 1..=dim {
        let rows = complex.layer(k - 1).len();
        let cols = complex.layer(k).len();
        let mut entries = vec![0i8; rows * cols];
        for (c, simplex) in complex.layer(k).iter().enumerate() {
            for omit in 0..simplex.len() {
                let mut face = simplex.clone();
                face.remove(omit);
                let r = index_by_layer[k - 1][face.as_slice()];
                entries[r * cols + c] = if omit % 2 == 0 { 1 } else { -1 };
            }
        }
        matrices.push(SignedMatrix {
            rows,
            cols,
            entries,
        });
    }
    // Boundary-of-boundary identity.
    for k in 1..matrices.len() {
        let (low, high) = (&matrices[k - 1], &matrices[k]);
        for (c, col) in high.sparse_columns().iter().enumerate() {
            for r in 0..low.rows {
                let dot: i32 = col
                    .iter()
                    .map(|&(mid, s)| s as i32 * low.get(r, mid) as i32)
                    .sum();
                assert_eq!(dot, 0, "d_{} . d_{} nonzero at ({r}, {c})", k, k + 1);
            }
        }
    }
    IncidenceMatrices { matrices }
}

/// Exact rank of a signed matrix over the rationals, by sparse
/// fraction-free elimination with a minimum-fill pivot rule.
fn rank_rational(m: &SignedMatrix) -> usize {
    let mut rows: Vec<BTreeMap<usize, BigRational>> = (0..m.rows)
        .map(|r| {
            (0..m.cols)
                .filter(|&c| m.get(r, c) != 0)
                .map(|c| (c, BigRational::from(BigInt::from(m.get(r, c)))))
                .collect()
        })
        .filter(|row: &BTreeMap<usize, BigRational>| !row.is_empty())
        .collect();
    let mut rank = 0;
    while !rows.is_empty() {
        // Shortest row; its first column as pivot.
        let pi = (0..rows.len())
            .min_by_key(|&i| (rows[i].len(), *rows[i].keys().next().unwrap()))
            .unwrap();
        let pivot_row = rows.swap_remove(pi);
        let (&pc, pv) = pivot_row.iter().next().unwrap();
        let pv = pv.clone();
        rank += 1;
        for row in &mut rows {
            if let Some(coeff) = row.remove(&pc) {
                let factor = coeff / pv.clone();
                for (&c, v) in &pivot_row {
                    if c == pc {
                        continue;
                    }
                    let entry = row.entry(c).or_insert_with(BigRational::zero);
                    *entry -= factor.clone() * v;
                    if entry.is_zero() {
                        row.remove(&c);
                    }
                }
            }
        }
        rows.retain(|row| !row.is_empty());
    }
    rank
}

/// Rank over GF(p), p = 2^61 - 1; the cross-check for `rank_rational`.
fn rank_mod_p(m: &SignedMatrix) -> usize {
    const P: u64 = (1 << 61) - 1;
    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }
    fn inv(a: u64) -> u64 {
        // Fermat: a^(p-2) mod p.
        let mut base = a;
        let mut exp = P - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    }
    let mut rows: Vec<BTreeMap<usize, u64>> = (0..m.rows)
        .map(|r| {
            (0..m.cols)
                .filter(|&c| m.get(r, c) != 0)
                .map(|c| (c, if m.get(r, c) == 1 { 1 } else { P - 1 }))
                .collect()
        })
        .filter(|row: &BTreeMap<usize, u64>| !row.is_empty())
        .collect();
    let mut rank = 0;
    while !rows.is_empty() {
        let pi = (0..rows.len())
            .min_by_key(|&i| (rows[i].len(), *rows[i].keys().next().unwrap()))
            .unwrap();
        let pivot_row = rows.swap_remove(pi);
        let (&pc, &pv) = pivot_row.iter().next().unwrap();
        let pv_inv = inv(pv);
        rank += 1;
        for row in &mut rows {
            if let Some(coeff) = row.remove(&pc) {
                let factor = mul(coeff, pv_inv);
                for (&c, &v) in &pivot_row {
                    if c == pc {
                        continue;
                    }
                    let sub = mul(factor, v);
                    let entry = row.entry(c).or_insert(0);
                    *entry = (*entry + P - sub) % P;
                    if *entry == 0 {
                        row.remove(&c);
                    }
                }
            }
        }
        rows.retain(|row| !row.is_empty());
    }
    rank
}

/// Betti numbers over the rationals: `b_k = v_k - rank d_k - rank d_{k+1}`.
///
/// Ranks are computed exactly over the rationals and cross-checked against
/// elimination modulo a large prime; a mismatch means a broken invariant and
/// panics with a diagnostic.
pub fn betti_numbers(g: &Graph) -> Vec<usize> {
    let complex = clique_complex(g);
    let volumes = complex.volumes();
    let dim = match complex.dimension() {
        Some(d) => d,
        None => return vec![],
    };
    let matrices = incidence_matrices(&complex);
    let mut ranks = vec![0usize; dim + 2];
    for k in 1..=dim {
        let m = matrices.boundary(k).unwrap();
        let exact = rank_rational(m);
        let modular = rank_mod_p(m);
        assert_eq!(
            exact, modular,
            "rank of d_{k} disagrees between exact rational and mod-p elimination"
        );
        ranks[k] = exact;
    }
    (0..=dim)
        .map(|k| volumes.0[k] - ranks[k] - ranks[k + 1])
        .collect()
}
