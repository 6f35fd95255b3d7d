//! Deterministic constructors for the named graphs used throughout the
//! library, plus subdivision-based refinement families and seeded random
//! refinement.

use thiserror::Error;

use crate::graph::Graph;
use crate::recognition::{self, GraphClass};
use crate::rng::Lcg64;
use crate::surgery::{self, SurgeryRecord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams {
        family: &'static str,
        reason: String,
    },
    #[error("input graph is not a 2-sphere")]
    NotATwoSphere,
}

/// The named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorName {
    Cycle,
    Path,
    Complete,
    Wheel,
    Octahedron,
    Icosahedron,
    CrossPolytope,
    SixHundredCell,
    StellatedCube,
}

impl GeneratorName {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "cycle" => Self::Cycle,
            "path" => Self::Path,
            "complete" => Self::Complete,
            "wheel" => Self::Wheel,
            "octahedron" => Self::Octahedron,
            "icosahedron" => Self::Icosahedron,
            "cross_polytope" => Self::CrossPolytope,
            "six_hundred_cell" => Self::SixHundredCell,
            "stellated_cube" => Self::StellatedCube,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Cycle => "cycle",
            Self::Path => "path",
            Self::Complete => "complete",
            Self::Wheel => "wheel",
            Self::Octahedron => "octahedron",
            Self::Icosahedron => "icosahedron",
            Self::CrossPolytope => "cross_polytope",
            Self::SixHundredCell => "six_hundred_cell",
            Self::StellatedCube => "stellated_cube",
        }
    }
}

/// A generator name with its integer argument (`n` or `d`), when the family
/// takes one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: GeneratorName,
    pub param: Option<u32>,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GeneratorError> {
    let param = spec.param;
    let family = spec.name.as_str();
    let need = |min: u32| -> Result<u32, GeneratorError> {
        match param {
            Some(p) if p >= min => Ok(p),
            Some(p) => Err(GeneratorError::InvalidParams {
                family,
                reason: format!("parameter {p} below minimum {min}"),
            }),
            None => Err(GeneratorError::InvalidParams {
                family,
                reason: "missing integer parameter".into(),
            }),
        }
    };
    Ok(match spec.name {
        GeneratorName::Cycle => cycle(need(3)? as usize),
        GeneratorName::Path => path(need(1)? as usize),
        GeneratorName::Complete => complete(param.unwrap_or(0) as usize),
        GeneratorName::Wheel => wheel(need(3)? as usize),
        GeneratorName::Octahedron => octahedron(),
        GeneratorName::Icosahedron => icosahedron(),
        GeneratorName::CrossPolytope => cross_polytope(need(0)? as usize),
        GeneratorName::SixHundredCell => six_hundred_cell(),
        GeneratorName::StellatedCube => stellated_cube(),
    })
}

/// C_n on vertices `0..n`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::build(
        0..n as u32,
        (0..n).map(|i| (i as u32, ((i + 1) % n) as u32)),
    )
    .unwrap()
}

/// Path on `n` vertices `0..n`.
pub fn path(n: usize) -> Graph {
    assert!(n >= 1, "path needs at least 1 vertex");
    Graph::build(0..n as u32, (1..n).map(|i| (i as u32 - 1, i as u32))).unwrap()
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::build(0..n as u32, edges).unwrap()
}

/// Wheel W_n: rim C_n on `0..n` plus hub `n` joined to every rim vertex.
pub fn wheel(n: usize) -> Graph {
    assert!(n >= 3, "wheel needs a rim of at least 3 vertices");
    let hub = n as u32;
    let mut edges: Vec<(u32, u32)> = (0..n).map(|i| (i as u32, ((i + 1) % n) as u32)).collect();
    edges.extend((0..n as u32).map(|v| (v, hub)));
    Graph::build(0..=hub, edges).unwrap()
}

/// The d-dimensional cross polytope: `2(d+1)` vertices on a ring, every pair
/// joined except the `d+1` antipodal pairs `i, i+d+1`. This is the d-fold
/// suspension of the 0-sphere; `cross_polytope(2)` is the octahedron and
/// `cross_polytope(3)` the 16-cell.
pub fn cross_polytope(d: usize) -> Graph {
    let n = 2 * (d + 1);
    let half = (d + 1) as u32;
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if v - u != half {
                edges.push((u, v));
            }
        }
    }
    Graph::build(0..n as u32, edges).unwrap()
}

pub fn octahedron() -> Graph {
    cross_polytope(2)
}

/// The icosahedron as a fixed 12-vertex adjacency table: apex 0, upper ring
/// 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        let u = 1 + i;
        let un = 1 + (i + 1) % 5;
        let l = 6 + i;
        let ln = 6 + (i + 1) % 5;
        let lp = 6 + (i + 4) % 5;
        edges.push((0, u));
        edges.push((11, l));
        edges.push((u, un));
        edges.push((l, ln));
        edges.push((u, l));
        edges.push((u, lp));
    }
    Graph::build(0..12, edges).unwrap()
}

/// The 600-cell from the 120 unit icosians, computed exactly over Q(sqrt 5).
///
/// Coordinates are stored as `(a + b sqrt5) / 4` per axis: 8 axis points
/// (permutations of (+-1,0,0,0)), 16 half-integer points
/// ((+-1/2,+-1/2,+-1/2,+-1/2)) and 96 even permutations of
/// (+-phi/2, +-1/2, +-1/(2 phi), 0). Two vertices are adjacent exactly when
/// their dot product is phi/2, the cosine of the edge angle, so no
/// floating-point tie-breaking is involved.
pub fn six_hundred_cell() -> Graph {
    type Coord = (i64, i64); // (a, b) meaning (a + b*sqrt5)/4

    const EVEN_PERMS: [[usize; 4]; 12] = [
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
        [1, 0, 3, 2],
        [1, 2, 0, 3],
        [1, 3, 2, 0],
        [2, 0, 1, 3],
        [2, 1, 3, 0],
        [2, 3, 0, 1],
        [3, 0, 2, 1],
        [3, 1, 0, 2],
        [3, 2, 1, 0],
    ];

    let mut points: Vec<[Coord; 4]> = Vec::with_capacity(120);
    // Axis points: (+-1, 0, 0, 0) and permutations.
    for axis in 0..4 {
        for sign in [4i64, -4] {
            let mut p = [(0, 0); 4];
            p[axis] = (sign, 0);
            points.push(p);
        }
    }
    // Half-integer points: all sign choices of (1/2, 1/2, 1/2, 1/2).
    for mask in 0..16u32 {
        let mut p = [(0, 0); 4];
        for (axis, slot) in p.iter_mut().enumerate() {
            *slot = (if mask >> axis & 1 == 1 { -2 } else { 2 }, 0);
        }
        points.push(p);
    }
    // Even permutations of (phi/2, 1/2, 1/(2 phi), 0) with free signs on the
    // three nonzero entries: phi/2 = (1+sqrt5)/4, 1/(2 phi) = (-1+sqrt5)/4.
    let values: [Coord; 4] = [(1, 1), (2, 0), (-1, 1), (0, 0)];
    for perm in EVEN_PERMS {
        for mask in 0..8u32 {
            let mut p = [(0, 0); 4];
            let mut nonzero = 0;
            for (axis, slot) in p.iter_mut().enumerate() {
                let (a, b) = values[perm[axis]];
                if (a, b) == (0, 0) {
                    *slot = (0, 0);
                } else {
                    let flip = mask >> nonzero & 1 == 1;
                    *slot = if flip { (-a, -b) } else { (a, b) };
                    nonzero += 1;
                }
            }
            points.push(p);
        }
    }
    debug_assert_eq!(points.len(), 120);
    points.sort_unstable();
    points.dedup();
    assert_eq!(points.len(), 120, "icosian coordinates must be distinct");

    // dot(u, v) * 16 = (sum a_i c_i + 5 b_i d_i) + sqrt5 (sum a_i d_i + b_i c_i);
    // adjacency is dot = phi/2 = (4 + 4 sqrt5)/16.
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let (mut rational, mut irrational) = (0i64, 0i64);
            for axis in 0..4 {
                let (a, b) = points[i][axis];
                let (c, d) = points[j][axis];
                rational += a * c + 5 * b * d;
                irrational += a * d + b * c;
            }
            if (rational, irrational) == (4, 4) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::build(0..120, edges).unwrap()
}

/// The stellated cube (tetrakis hexahedron): cube corners `0..8` coded by
/// coordinate bits, face centers `8..14` joined to the four corners of their
/// face.
pub fn stellated_cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8u32 {
        for v in (u + 1)..8 {
            if (u ^ v).count_ones() == 1 {
                edges.push((u, v));
            }
        }
    }
    for axis in 0..3u32 {
        for value in 0..2u32 {
            let center = 8 + 2 * axis + value;
            for corner in 0..8u32 {
                if corner >> axis & 1 == value {
                    edges.push((corner, center));
                }
            }
        }
    }
    Graph::build(0..14, edges).unwrap()
}

/// One round of loop subdivision of a 2-sphere: a new vertex on every edge,
/// each triangle replaced by four. Original vertices keep their degree, new
/// vertices get degree 6.
pub fn loop_subdivide(g: &Graph) -> Result<Graph, GeneratorError> {
    match recognition::classify(g, recognition::DEFAULT_BUDGET).class {
        Some(GraphClass::Sphere(2)) => {}
        _ => return Err(GeneratorError::NotATwoSphere),
    }
    Ok(loop_subdivide_unchecked(g))
}

pub(crate) fn loop_subdivide_unchecked(g: &Graph) -> Graph {
    let base = g.max_vertex_id().map_or(0, |m| m + 1);
    let old_edges = g.edges();
    let midpoint = |u: u32, v: u32| -> u32 {
        let key = if u < v { (u, v) } else { (v, u) };
        base + old_edges.binary_search(&key).unwrap() as u32
    };
    let mut vertices: Vec<u32> = g.vertices().to_vec();
    vertices.extend((0..old_edges.len() as u32).map(|i| base + i));
    let mut edges = Vec::new();
    for &(u, v) in &old_edges {
        let m = midpoint(u, v);
        edges.push((u, m));
        edges.push((v, m));
    }
    for tri in crate::complex::clique_complex(g).layer(2) {
        let (a, b, c) = (tri[0], tri[1], tri[2]);
        edges.push((midpoint(a, b), midpoint(a, c)));
        edges.push((midpoint(a, b), midpoint(b, c)));
        edges.push((midpoint(a, c), midpoint(b, c)));
    }
    Graph::build(vertices, edges).unwrap()
}

/// `steps` edge subdivisions at positions drawn from the library's seeded
/// generator; identical `(graph, steps, seed)` yield identical output. The
/// caller is responsible for starting from a sphere when sphere preservation
/// is wanted.
pub fn random_refine(g: &Graph, steps: usize, seed: u64) -> (Graph, Vec<SurgeryRecord>) {
    let mut rng = Lcg64::new(seed);
    let mut current = g.clone();
    let mut records = Vec::with_capacity(steps);
    for _ in 0..steps {
        let edges = current.edges();
        let pick = edges[rng.next_below(edges.len() as u64) as usize];
        let (next, record) = surgery::edge_subdivide(&current, pick).expect("edge from list");
        current = next;
        records.push(record);
    }
    (current, records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::volumes;
    use crate::iso;

    #[test]
    fn cross_polytope_volumes() {
        assert_eq!(volumes(&cross_polytope(2)).0, vec![6, 12, 8]);
        assert_eq!(volumes(&cross_polytope(4)).0, vec![10, 40, 80, 80, 32]);
    }

    #[test]
    fn cross_polytope_unit_spheres_descend() {
        for d in 1..=4 {
            let g = cross_polytope(d);
            let smaller = cross_polytope(d - 1);
            for &v in g.vertices() {
                let s = g.unit_sphere(v).unwrap();
                assert!(iso::are_isomorphic(&s, &smaller).is_some());
            }
        }
    }

    #[test]
    fn six_hundred_cell_volumes() {
        assert_eq!(
            volumes(&six_hundred_cell()).0,
            vec![120, 720, 1200, 600]
        );
    }

    #[test]
    fn six_hundred_cell_unit_spheres_are_icosahedra() {
        let g = six_hundred_cell();
        let ico = icosahedron();
        for &v in g.vertices() {
            let s = g.unit_sphere(v).unwrap();
            assert!(iso::are_isomorphic(&s, &ico).is_some());
        }
    }

    #[test]
    fn six_hundred_cell_is_vertex_transitive() {
        // Sampled-orbit check: one automorphism per target vertex gives
        // |Aut| >= 120 without enumerating the group.
        let g = six_hundred_cell();
        for &v in g.vertices() {
            let cert = iso::isomorphism_extending(&g, &g, &[(0, v)]);
            assert!(cert.is_some(), "no automorphism sends 0 to {v}");
        }
    }

    #[test]
    fn stellated_cube_counts_and_degrees() {
        let g = stellated_cube();
        assert_eq!(volumes(&g).0, vec![14, 36, 24]);
        let mut degs: Vec<usize> = g
            .vertices()
            .iter()
            .map(|&v| g.degree(v).unwrap())
            .collect();
        degs.sort_unstable();
        assert_eq!(&degs[..6], &[4; 6]);
        assert_eq!(&degs[6..], &[6; 8]);
    }

    #[test]
    fn loop_subdivide_octahedron_volumes() {
        let g = loop_subdivide(&octahedron()).unwrap();
        // v0 + v1 vertices, 2 v1 + 3 v2 edges, 4 v2 triangles.
        assert_eq!(volumes(&g).0, vec![18, 48, 32]);
        assert_eq!(crate::complex::euler_characteristic(&g), 2);
    }

    #[test]
    fn loop_subdivide_icosahedron_degree5_vertices_are_separated() {
        let g = loop_subdivide(&icosahedron()).unwrap();
        assert_eq!(volumes(&g).0, vec![42, 120, 80]);
        let degree5: Vec<u32> = g
            .vertices()
            .iter()
            .copied()
            .filter(|&v| g.degree(v).unwrap() == 5)
            .collect();
        assert_eq!(degree5.len(), 12);
        for &u in &degree5 {
            for &v in &degree5 {
                assert!(u == v || !g.contains_edge(u, v));
            }
        }
    }

    #[test]
    fn loop_subdivide_rejects_non_spheres() {
        assert_eq!(
            loop_subdivide(&complete(4)),
            Err(GeneratorError::NotATwoSphere)
        );
    }

    #[test]
    fn random_refine_is_reproducible() {
        let oct = octahedron();
        let (zero, records) = random_refine(&oct, 0, 7);
        assert_eq!(zero, oct);
        assert!(records.is_empty());

        let (a, ra) = random_refine(&oct, 5, 99);
        let (b, rb) = random_refine(&oct, 5, 99);
        assert_eq!(a, b);
        assert_eq!(ra, rb);
        assert_eq!(a.vertex_count(), 11);
    }

    #[test]
    fn generate_validates_params() {
        assert!(generate(&GeneratorSpec {
            name: GeneratorName::Cycle,
            param: Some(2)
        })
        .is_err());
        assert!(generate(&GeneratorSpec {
            name: GeneratorName::CrossPolytope,
            param: None
        })
        .is_err());
        let oct = generate(&GeneratorSpec {
            name: GeneratorName::CrossPolytope,
            param: Some(2),
        })
        .unwrap();
        assert_eq!(volumes(&oct).0, vec![6, 12, 8]);
    }
}
