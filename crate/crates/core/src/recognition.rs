//! Recursive classification of graphs into contractible / d-ball / d-sphere
//! / d-geometric, inductive dimension, and Platonic-sphere verification.
//!
//! The search is exact. Results are memoized on canonical forms so that
//! isomorphic subproblems are solved once; a node-count budget bounds the
//! worst-case exponential recursion and a timeout is reported as its own
//! verdict, never as a wrong yes/no. The sphere test follows the recursive
//! scheme: all unit spheres must be (d-1)-spheres and some single-vertex
//! deletion must be contractible. 1-spheres are the cyclic graphs C_n with
//! n >= 4.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSubset};
use crate::iso::{self, CanonicalForm};

/// Default node-count budget for the recursive searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Three-valued answer of a budgeted recursive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    BudgetExceeded,
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Vertex removal order certifying contractibility: at every step the
    /// removed vertex has a contractible unit sphere in the remaining graph.
    CollapseSequence(Vec<u32>),
    /// Deleting this vertex left a contractible graph (sphere certificate).
    RemovedVertex(u32),
    /// This vertex's unit sphere violates the required class.
    FailingVertex(u32),
    /// Unit spheres of these two vertices have different dimensions.
    MixedDimensions(u32, u32),
    /// Unit spheres of these two vertices are not isomorphic.
    NonIsomorphicSpheres(u32, u32),
    /// The empty graph is not contractible.
    Empty,
    Disconnected,
    /// Every vertex was tried and none admits the required reduction.
    Exhausted,
    /// The graph classified as something other than a sphere.
    NotASphere(GraphClass),
}

/// Outcome of a budgeted yes/no recognition question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVerdict {
    pub answer: Answer,
    pub witness: Option<Witness>,
    pub budget_spent: u64,
}

impl ClassVerdict {
    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

/// The geometric class of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    /// d-sphere; the empty graph is `Sphere(-1)`.
    Sphere(i64),
    /// d-ball: contractible geometric graph whose boundary is a (d-1)-sphere.
    Ball(i64),
    /// Geometric of the given dimension without being a sphere or ball.
    Geometric { dim: i64, has_boundary: bool },
    /// Not geometric at all.
    NotGeometric,
}

/// Result of `classify`: the class when the budget sufficed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyResult {
    /// `None` exactly when the verdict is budget-exceeded.
    pub class: Option<GraphClass>,
    pub verdict: ClassVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("graph is not geometric")]
    NotGeometric,
    #[error("search budget exhausted after {spent} nodes")]
    BudgetExceeded { spent: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Internal marker for running out of budget; carries nothing because the
/// caller tracks the spent count.
struct BudgetOut;

/// Memoized recursive recognizer. All entries are definite results, so the
/// cache behaves as a pure function of the canonical form and can be reused
/// across calls; clearing it never changes a verdict.
#[derive(Default)]
pub struct Recognizer {
    contractible: HashMap<CanonicalForm, (bool, MemoWitness)>,
    classes: HashMap<CanonicalForm, (GraphClass, MemoWitness)>,
    dimensions: HashMap<CanonicalForm, BigRational>,
}

/// Witnesses are stored in canonical-index space so that a memo hit from an
/// isomorphic graph with different vertex ids can translate them back.
#[derive(Debug, Clone, PartialEq, Eq)]
enum MemoWitness {
    None,
    Marker(Witness),
    CollapseSequence(Vec<usize>),
    RemovedVertex(usize),
    FailingVertex(usize),
    VertexPair(PairKind, usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairKind {
    MixedDimensions,
    NonIsomorphicSpheres,
}

fn to_memo(witness: Option<Witness>, labeling: &HashMap<u32, usize>) -> MemoWitness {
    match witness {
        None => MemoWitness::None,
        Some(Witness::CollapseSequence(seq)) => {
            MemoWitness::CollapseSequence(seq.iter().map(|v| labeling[v]).collect())
        }
        Some(Witness::RemovedVertex(v)) => MemoWitness::RemovedVertex(labeling[&v]),
        Some(Witness::FailingVertex(v)) => MemoWitness::FailingVertex(labeling[&v]),
        Some(Witness::MixedDimensions(a, b)) => {
            MemoWitness::VertexPair(PairKind::MixedDimensions, labeling[&a], labeling[&b])
        }
        Some(Witness::NonIsomorphicSpheres(a, b)) => {
            MemoWitness::VertexPair(PairKind::NonIsomorphicSpheres, labeling[&a], labeling[&b])
        }
        Some(marker) => MemoWitness::Marker(marker),
    }
}

fn from_memo(memo: &MemoWitness, labeling: &HashMap<u32, usize>) -> Option<Witness> {
    let unlabel: HashMap<usize, u32> = labeling.iter().map(|(&v, &i)| (i, v)).collect();
    match memo {
        MemoWitness::None => None,
        MemoWitness::Marker(w) => Some(w.clone()),
        MemoWitness::CollapseSequence(seq) => Some(Witness::CollapseSequence(
            seq.iter().map(|i| unlabel[i]).collect(),
        )),
        MemoWitness::RemovedVertex(i) => Some(Witness::RemovedVertex(unlabel[i])),
        MemoWitness::FailingVertex(i) => Some(Witness::FailingVertex(unlabel[i])),
        MemoWitness::VertexPair(kind, a, b) => Some(match kind {
            PairKind::MixedDimensions => Witness::MixedDimensions(unlabel[a], unlabel[b]),
            PairKind::NonIsomorphicSpheres => Witness::NonIsomorphicSpheres(unlabel[a], unlabel[b]),
        }),
    }
}

impl Recognizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Is the graph contractible in the recursive sense: some vertex has a
    /// contractible unit sphere and a contractible complement? The one-point
    /// graph is the base case; the empty graph is not contractible.
    pub fn is_contractible(&mut self, g: &Graph, budget: u64) -> ClassVerdict {
        let mut spent = 0;
        match self.contractible_inner(g, budget, &mut spent) {
            Ok((true, witness)) => ClassVerdict {
                answer: Answer::Yes,
                witness,
                budget_spent: spent,
            },
            Ok((false, witness)) => ClassVerdict {
                answer: Answer::No,
                witness,
                budget_spent: spent,
            },
            Err(BudgetOut) => ClassVerdict {
                answer: Answer::BudgetExceeded,
                witness: None,
                budget_spent: spent,
            },
        }
    }

    fn contractible_inner(
        &mut self,
        g: &Graph,
        limit: u64,
        spent: &mut u64,
    ) -> Result<(bool, Option<Witness>), BudgetOut> {
        *spent += 1;
        if *spent > limit {
            return Err(BudgetOut);
        }
        match g.vertex_count() {
            0 => return Ok((false, Some(Witness::Empty))),
            1 => {
                return Ok((
                    true,
                    Some(Witness::CollapseSequence(vec![g.vertices()[0]])),
                ))
            }
            _ => {}
        }
        if !g.is_connected() {
            return Ok((false, Some(Witness::Disconnected)));
        }
        let (form, labeling) = iso::canonical_labeling(g);
        if let Some((answer, memo)) = self.contractible.get(&form) {
            return Ok((*answer, from_memo(memo, &labeling)));
        }
        // Low-degree vertices first: their unit spheres are small and, on
        // punctured spheres, they sit on the exposed boundary.
        let mut order: Vec<u32> = g.vertices().to_vec();
        order.sort_by_key(|&v| (g.degree(v).unwrap(), v));
        for x in order {
            let sphere = g.unit_sphere(x).unwrap();
            let (sphere_ok, _) = self.contractible_inner(&sphere, limit, spent)?;
            if !sphere_ok {
                continue;
            }
            let rest = g.remove_vertex(x).unwrap();
            let (rest_ok, rest_witness) = self.contractible_inner(&rest, limit, spent)?;
            if rest_ok {
                let mut seq = vec![x];
                if let Some(Witness::CollapseSequence(tail)) = rest_witness {
                    seq.extend(tail);
                }
                let witness = Some(Witness::CollapseSequence(seq));
                self.contractible
                    .insert(form, (true, to_memo(witness.clone(), &labeling)));
                return Ok((true, witness));
            }
        }
        let witness = Some(Witness::Exhausted);
        self.contractible
            .insert(form, (false, to_memo(witness.clone(), &labeling)));
        Ok((false, witness))
    }

    /// Classify into sphere / ball / geometric / not geometric.
    pub fn classify(&mut self, g: &Graph, budget: u64) -> ClassifyResult {
        let mut spent = 0;
        match self.classify_inner(g, budget, &mut spent) {
            Ok((class, witness)) => ClassifyResult {
                class: Some(class),
                verdict: ClassVerdict {
                    answer: match class {
                        GraphClass::NotGeometric => Answer::No,
                        _ => Answer::Yes,
                    },
                    witness,
                    budget_spent: spent,
                },
            },
            Err(BudgetOut) => ClassifyResult {
                class: None,
                verdict: ClassVerdict {
                    answer: Answer::BudgetExceeded,
                    witness: None,
                    budget_spent: spent,
                },
            },
        }
    }

    fn classify_inner(
        &mut self,
        g: &Graph,
        limit: u64,
        spent: &mut u64,
    ) -> Result<(GraphClass, Option<Witness>), BudgetOut> {
        *spent += 1;
        if *spent > limit {
            return Err(BudgetOut);
        }
        if g.is_empty() {
            return Ok((GraphClass::Sphere(-1), None));
        }
        let (form, labeling) = iso::canonical_labeling(g);
        if let Some((class, memo)) = self.classes.get(&form) {
            return Ok((*class, from_memo(memo, &labeling)));
        }
        let result = self.classify_uncached(g, limit, spent)?;
        self.classes
            .insert(form, (result.0, to_memo(result.1.clone(), &labeling)));
        Ok(result)
    }

    fn classify_uncached(
        &mut self,
        g: &Graph,
        limit: u64,
        spent: &mut u64,
    ) -> Result<(GraphClass, Option<Witness>), BudgetOut> {
        // Classify every unit sphere; they determine dimension and boundary.
        let mut sphere_dim: Option<(i64, u32)> = None;
        let mut boundary: Vec<u32> = Vec::new();
        for &x in g.vertices() {
            let s = g.unit_sphere(x).unwrap();
            let (class, _) = self.classify_inner(&s, limit, spent)?;
            let (dim, is_ball) = match class {
                GraphClass::Sphere(k) => (k, false),
                GraphClass::Ball(k) => (k, true),
                _ => return Ok((GraphClass::NotGeometric, Some(Witness::FailingVertex(x)))),
            };
            match sphere_dim {
                None => sphere_dim = Some((dim, x)),
                Some((k, first)) if k != dim => {
                    return Ok((
                        GraphClass::NotGeometric,
                        Some(Witness::MixedDimensions(first, x)),
                    ))
                }
                _ => {}
            }
            if is_ball {
                boundary.push(x);
            }
        }
        let d = sphere_dim.unwrap().0 + 1;

        if boundary.is_empty() {
            // Closed geometric graph: a sphere when some deletion contracts.
            for &v in g.vertices() {
                let rest = g.remove_vertex(v).unwrap();
                if self.contractible_inner(&rest, limit, spent)?.0 {
                    return Ok((GraphClass::Sphere(d), Some(Witness::RemovedVertex(v))));
                }
            }
            // A point is the 0-ball: contractible with empty boundary, and
            // the empty boundary is the (-1)-sphere required when d = 0.
            if d == 0
                && self.contractible_inner(g, limit, spent)?.0
                && d - 1 == -1
            {
                return Ok((GraphClass::Ball(0), None));
            }
            return Ok((
                GraphClass::Geometric {
                    dim: d,
                    has_boundary: false,
                },
                None,
            ));
        }

        // Boundary vertices exist: ball or geometric-with-boundary. The
        // induced boundary must be a proper subgraph, otherwise it cannot be
        // a (d-1)-sphere and the recursion would not terminate.
        if boundary.len() < g.vertex_count() && self.contractible_inner(g, limit, spent)?.0 {
            let boundary_graph = g.induced_sorted(&boundary);
            let (bclass, _) = self.classify_inner(&boundary_graph, limit, spent)?;
            if bclass == GraphClass::Sphere(d - 1) {
                return Ok((GraphClass::Ball(d), None));
            }
        }
        Ok((
            GraphClass::Geometric {
                dim: d,
                has_boundary: true,
            },
            None,
        ))
    }

    /// The boundary of a geometric graph: vertices whose unit spheres are
    /// balls. Errors when the graph is not geometric or the budget runs out.
    pub fn boundary(&mut self, g: &Graph, budget: u64) -> Result<VertexSubset, RecognitionError> {
        let result = self.classify(g, budget);
        match result.class {
            Some(GraphClass::NotGeometric) => return Err(RecognitionError::NotGeometric),
            Some(_) => {}
            None => {
                return Err(RecognitionError::BudgetExceeded {
                    spent: result.verdict.budget_spent,
                })
            }
        }
        let mut boundary = Vec::new();
        for &x in g.vertices() {
            let s = g.unit_sphere(x)?;
            let sub = self.classify(&s, budget);
            match sub.class {
                Some(GraphClass::Ball(_)) => boundary.push(x),
                Some(_) => {}
                None => {
                    return Err(RecognitionError::BudgetExceeded {
                        spent: sub.verdict.budget_spent,
                    })
                }
            }
        }
        Ok(VertexSubset::new(boundary))
    }

    /// Exact inductive dimension: -1 for the empty graph, otherwise 1 plus
    /// the average dimension of the unit spheres.
    pub fn inductive_dimension(&mut self, g: &Graph) -> BigRational {
        if g.is_empty() {
            return -BigRational::one();
        }
        let (form, _) = iso::canonical_labeling(g);
        if let Some(d) = self.dimensions.get(&form) {
            return d.clone();
        }
        let sum: BigRational = g
            .vertices()
            .iter()
            .map(|&x| self.inductive_dimension(&g.unit_sphere(x).unwrap()))
            .sum();
        let n = BigRational::from_integer(g.vertex_count().into());
        let dim = BigRational::one() + sum / n;
        self.dimensions.insert(form, dim.clone());
        dim
    }

    /// Platonic sphere test: every sphere of dimension <= 1 is Platonic; in
    /// higher dimension all unit spheres must be mutually isomorphic and
    /// themselves Platonic. Verifies that `g` is a sphere first.
    pub fn is_platonic_sphere(&mut self, g: &Graph, budget: u64) -> ClassVerdict {
        let result = self.classify(g, budget);
        let mut spent = result.verdict.budget_spent;
        let dim = match result.class {
            None => {
                return ClassVerdict {
                    answer: Answer::BudgetExceeded,
                    witness: None,
                    budget_spent: spent,
                }
            }
            Some(GraphClass::Sphere(d)) => d,
            Some(other) => {
                return ClassVerdict {
                    answer: Answer::No,
                    witness: Some(Witness::NotASphere(other)),
                    budget_spent: spent,
                }
            }
        };
        let mut verdict = self.platonic_unit_spheres(g, dim, budget.saturating_sub(spent));
        verdict.budget_spent += spent;
        spent = verdict.budget_spent;
        let _ = spent;
        verdict
    }

    /// The precomputed-sphere shortcut: trust the caller that `g` is a
    /// d-sphere of the stated dimension and only verify the Platonic
    /// condition (mutually isomorphic unit spheres, recursively Platonic).
    /// The unit spheres themselves are still fully verified.
    pub fn is_platonic_sphere_assuming(
        &mut self,
        g: &Graph,
        dim: i64,
        budget: u64,
    ) -> ClassVerdict {
        self.platonic_unit_spheres(g, dim, budget)
    }

    fn platonic_unit_spheres(&mut self, g: &Graph, dim: i64, budget: u64) -> ClassVerdict {
        if dim <= 1 {
            return ClassVerdict {
                answer: Answer::Yes,
                witness: None,
                budget_spent: 0,
            };
        }
        let ids = g.vertices();
        let first = ids[0];
        let reference = g.unit_sphere(first).unwrap();
        for &x in &ids[1..] {
            let s = g.unit_sphere(x).unwrap();
            if iso::are_isomorphic(&reference, &s).is_none() {
                return ClassVerdict {
                    answer: Answer::No,
                    witness: Some(Witness::NonIsomorphicSpheres(first, x)),
                    budget_spent: 0,
                };
            }
        }
        self.is_platonic_sphere(&reference, budget)
    }
}

/// One-shot wrappers over a fresh `Recognizer`.
pub fn is_contractible(g: &Graph, budget: u64) -> ClassVerdict {
    Recognizer::new().is_contractible(g, budget)
}

pub fn classify(g: &Graph, budget: u64) -> ClassifyResult {
    Recognizer::new().classify(g, budget)
}

pub fn inductive_dimension(g: &Graph) -> BigRational {
    Recognizer::new().inductive_dimension(g)
}

pub fn boundary(g: &Graph, budget: u64) -> Result<VertexSubset, RecognitionError> {
    Recognizer::new().boundary(g, budget)
}

pub fn is_platonic_sphere(g: &Graph, budget: u64) -> ClassVerdict {
    Recognizer::new().is_platonic_sphere(g, budget)
}

/// Replay a collapse-sequence witness: every removed vertex must have a
/// contractible unit sphere in the remaining graph, down to a single vertex.
pub fn verify_collapse_sequence(g: &Graph, sequence: &[u32]) -> bool {
    if sequence.len() != g.vertex_count() || g.is_empty() {
        return false;
    }
    let mut rec = Recognizer::new();
    let mut current = g.clone();
    for (i, &x) in sequence.iter().enumerate() {
        if i + 1 == sequence.len() {
            return current.vertex_count() == 1 && current.contains_vertex(x);
        }
        let sphere = match current.unit_sphere(x) {
            Ok(s) => s,
            Err(_) => return false,
        };
        if !rec.is_contractible(&sphere, DEFAULT_BUDGET).is_yes() {
            return false;
        }
        current = current.remove_vertex(x).unwrap();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn complete_graphs_are_contractible() {
        let verdict = is_contractible(&generators::complete(7), DEFAULT_BUDGET);
        assert_eq!(verdict.answer, Answer::Yes);
        if let Some(Witness::CollapseSequence(seq)) = &verdict.witness {
            assert!(verify_collapse_sequence(&generators::complete(7), seq));
        } else {
            panic!("expected collapse sequence");
        }
    }

    #[test]
    fn c4_is_not_contractible() {
        let verdict = is_contractible(&generators::cycle(4), DEFAULT_BUDGET);
        assert_eq!(verdict.answer, Answer::No);
        assert!(verdict.witness.is_some());
    }

    #[test]
    fn wheel_is_contractible() {
        let verdict = is_contractible(&generators::wheel(6), DEFAULT_BUDGET);
        assert_eq!(verdict.answer, Answer::Yes);
        if let Some(Witness::CollapseSequence(seq)) = &verdict.witness {
            assert!(verify_collapse_sequence(&generators::wheel(6), seq));
        }
    }

    #[test]
    fn empty_graph_is_not_contractible() {
        let verdict = is_contractible(&Graph::empty(), DEFAULT_BUDGET);
        assert_eq!(verdict.answer, Answer::No);
        assert_eq!(verdict.witness, Some(Witness::Empty));
    }

    #[test]
    fn tiny_budget_reports_budget_exceeded() {
        let verdict = is_contractible(&generators::icosahedron(), 3);
        assert_eq!(verdict.answer, Answer::BudgetExceeded);
        assert!(verdict.budget_spent >= 3);
    }

    #[test]
    fn classify_named_spheres() {
        assert_eq!(
            classify(&generators::cycle(5), DEFAULT_BUDGET).class,
            Some(GraphClass::Sphere(1))
        );
        assert_eq!(
            classify(&generators::octahedron(), DEFAULT_BUDGET).class,
            Some(GraphClass::Sphere(2))
        );
        assert_eq!(
            classify(&Graph::empty(), DEFAULT_BUDGET).class,
            Some(GraphClass::Sphere(-1))
        );
        let two_points = Graph::build([0, 1], []).unwrap();
        assert_eq!(
            classify(&two_points, DEFAULT_BUDGET).class,
            Some(GraphClass::Sphere(0))
        );
    }

    #[test]
    fn classify_wheel_as_ball_with_rim_boundary() {
        let w6 = generators::wheel(6);
        assert_eq!(
            classify(&w6, DEFAULT_BUDGET).class,
            Some(GraphClass::Ball(2))
        );
        let b = boundary(&w6, DEFAULT_BUDGET).unwrap();
        assert_eq!(b.members(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn boundary_cases() {
        let oct = generators::octahedron();
        assert!(boundary(&oct, DEFAULT_BUDGET).unwrap().is_empty());

        let edge = Graph::build([0, 1], [(0, 1)]).unwrap();
        assert_eq!(boundary(&edge, DEFAULT_BUDGET).unwrap().members(), &[0, 1]);

        assert!(matches!(
            boundary(&generators::complete(3), DEFAULT_BUDGET),
            Err(RecognitionError::NotGeometric)
        ));
    }

    #[test]
    fn single_point_is_a_zero_ball() {
        let point = Graph::build([5], []).unwrap();
        assert_eq!(
            classify(&point, DEFAULT_BUDGET).class,
            Some(GraphClass::Ball(0))
        );
    }

    #[test]
    fn inductive_dimensions() {
        let five = BigRational::from_integer(4.into());
        assert_eq!(inductive_dimension(&generators::complete(5)), five);
        assert_eq!(
            inductive_dimension(&generators::cycle(6)),
            BigRational::one()
        );
        assert_eq!(
            inductive_dimension(&generators::wheel(6)),
            BigRational::from_integer(2.into())
        );
        assert_eq!(
            inductive_dimension(&Graph::empty()),
            -BigRational::one()
        );
    }

    #[test]
    fn platonic_verdicts() {
        assert!(is_platonic_sphere(&generators::icosahedron(), DEFAULT_BUDGET).is_yes());
        assert!(is_platonic_sphere(&generators::cross_polytope(4), DEFAULT_BUDGET).is_yes());
        let subdivided = generators::loop_subdivide(&generators::octahedron()).unwrap();
        let verdict = is_platonic_sphere(&subdivided, DEFAULT_BUDGET);
        assert_eq!(verdict.answer, Answer::No);
        assert!(matches!(
            verdict.witness,
            Some(Witness::NonIsomorphicSpheres(..))
        ));
    }

    #[test]
    fn memoization_is_sound() {
        // A shared recognizer and fresh recognizers agree on every verdict.
        let graphs = [
            generators::octahedron(),
            generators::icosahedron(),
            generators::wheel(5),
            generators::cycle(7),
            generators::complete(4),
        ];
        let mut shared = Recognizer::new();
        for g in &graphs {
            let a = shared.classify(g, DEFAULT_BUDGET);
            let b = Recognizer::new().classify(g, DEFAULT_BUDGET);
            let c = Recognizer::new().classify(g, DEFAULT_BUDGET);
            assert_eq!(a.class, b.class);
            assert_eq!(b.class, c.class);
            assert_eq!(b.verdict, c.verdict);
        }
    }

    #[test]
    fn sphere_deletion_is_always_contractible() {
        // For a verdict sphere(d), deleting any vertex leaves a contractible
        // graph; spot-check on all vertices of small spheres.
        let mut rec = Recognizer::new();
        for g in [
            generators::octahedron(),
            generators::icosahedron(),
            generators::cross_polytope(3),
        ] {
            assert!(matches!(
                rec.classify(&g, DEFAULT_BUDGET).class,
                Some(GraphClass::Sphere(_))
            ));
            for &v in g.vertices() {
                let rest = g.remove_vertex(v).unwrap();
                assert!(rec.is_contractible(&rest, DEFAULT_BUDGET).is_yes());
            }
        }
    }
}
