//! Weighted dual graphs of exceptional configurations.
//!
//! Vertex `j` is an exceptional curve `E_j` with weight `w_j = -E_j²` and
//! genus `g_j`; an edge of multiplicity `m` records `E_i·E_j = m`. We work
//! with the positive definite form `N = -(E_i·E_j)` throughout.

use std::collections::{HashMap, VecDeque};
use std::ops::{Deref, Index};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    pub weight: u64,
    #[serde(default)]
    pub genus: u64,
}

impl Vertex {
    pub fn rational(id: impl Into<String>, weight: u64) -> Self {
        Self {
            id: id.into(),
            weight,
            genus: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: String,
    pub b: String,
    pub multiplicity: u64,
}

impl Edge {
    pub fn simple(a: impl Into<String>, b: impl Into<String>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            multiplicity: 1,
        }
    }
}

/// Symmetric integer matrix of intersection numbers `E_i·E_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    entries: Vec<Vec<i64>>,
}

impl IntersectionMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `E_i·E_j`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// The positive form `N = -(E_i·E_j)` as big integers.
    pub fn form(&self) -> IntMatrix {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(-x)).collect())
            .collect()
    }
}

/// A structurally well-formed dual graph: unique ids, edges between
/// distinct known vertices, positive weights and multiplicities.
///
/// Parallel edge entries between the same pair are summed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    matrix: IntersectionMatrix,
}

impl DualGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(v.id.clone()));
            }
            if v.weight == 0 {
                return Err(Error::ZeroWeight(v.id.clone()));
            }
        }
        let n = vertices.len();
        let mut entries = vec![vec![0i64; n]; n];
        for (j, v) in vertices.iter().enumerate() {
            entries[j][j] = -(v.weight as i64);
        }
        for e in &edges {
            let i = *index
                .get(e.a.as_str())
                .ok_or_else(|| Error::UnknownVertex(e.a.clone()))?;
            let j = *index
                .get(e.b.as_str())
                .ok_or_else(|| Error::UnknownVertex(e.b.clone()))?;
            if i == j {
                return Err(Error::SelfLoop(e.a.clone()));
            }
            if e.multiplicity == 0 {
                return Err(Error::ZeroMultiplicity(e.a.clone(), e.b.clone()));
            }
            entries[i][j] += e.multiplicity as i64;
            entries[j][i] += e.multiplicity as i64;
        }
        Ok(Self {
            vertices,
            edges,
            matrix: IntersectionMatrix { entries },
        })
    }

    /// Chain `E_1 - E_2 - ... - E_n` with ids `E1..En`.
    pub fn chain(weights: &[u64]) -> Result<Self> {
        let vertices = weights
            .iter()
            .enumerate()
            .map(|(i, &w)| Vertex::rational(format!("E{}", i + 1), w))
            .collect();
        let edges = (1..weights.len())
            .map(|i| Edge::simple(format!("E{i}"), format!("E{}", i + 1)))
            .collect();
        Self::new(vertices, edges)
    }

    /// Star-shaped graph: the center first, then each arm listed from the
    /// vertex adjacent to the center outward.
    pub fn star(center: u64, arms: &[&[u64]]) -> Result<Self> {
        let mut vertices = vec![Vertex::rational("E1", center)];
        let mut edges = Vec::new();
        for arm in arms {
            let mut prev = "E1".to_string();
            for &w in arm.iter() {
                let id = format!("E{}", vertices.len() + 1);
                vertices.push(Vertex::rational(id.clone(), w));
                edges.push(Edge::simple(prev, id.clone()));
                prev = id;
            }
        }
        Self::new(vertices, edges)
    }

    /// The blow-up of a smooth point: one rational (-1)-curve.
    pub fn smooth() -> Self {
        Self::chain(&[1]).expect("single vertex is well formed")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn intersection_matrix(&self) -> &IntersectionMatrix {
        &self.matrix
    }

    /// Total edge multiplicity `E_i·E_j` for `i != j`.
    pub fn multiplicity(&self, i: usize, j: usize) -> u64 {
        if i == j {
            0
        } else {
            self.matrix.get(i, j) as u64
        }
    }

    /// Neighbors of `j` (each listed once regardless of multiplicity).
    pub fn neighbors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| i != j && self.matrix.get(i, j) != 0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(j) = queue.pop_front() {
            for i in self.neighbors(j) {
                if !seen[i] {
                    seen[i] = true;
                    count += 1;
                    queue.push_back(i);
                }
            }
        }
        count == n
    }

    /// Accepts iff connected, negative definite, and free of (-1)-curves
    /// unless the graph is the single smooth blow-up vertex.
    pub fn validate(self) -> Result<ValidGraph> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if let Some(minor) = linalg::first_nonpositive_minor(&self.matrix.form()) {
            return Err(Error::NotNegativeDefinite { minor });
        }
        let smooth = self.len() == 1 && self.vertices[0].genus == 0;
        if let Some(v) = self.vertices.iter().find(|v| v.weight == 1) {
            if !smooth {
                return Err(Error::IllegalWeight {
                    vertex: v.id.clone(),
                    weight: v.weight,
                });
            }
        }
        let form = self.matrix.form();
        Ok(ValidGraph { graph: self, form })
    }
}

/// A dual graph that passed [`DualGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidGraph {
    graph: DualGraph,
    form: IntMatrix,
}

impl Deref for ValidGraph {
    type Target = DualGraph;

    fn deref(&self) -> &DualGraph {
        &self.graph
    }
}

impl ValidGraph {
    pub fn into_inner(self) -> DualGraph {
        self.graph
    }

    /// The positive definite form `N`.
    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    /// Unique `x` with `N·x = rhs`. If `rhs ≥ 0` then `x ≥ 0`.
    pub fn solve_exceptional(&self, rhs: &[Rat]) -> Result<ExcDivisor> {
        check_dim(self.len(), rhs.len())?;
        let x = linalg::solve(&self.form, rhs).expect("positive definite form is invertible");
        Ok(ExcDivisor(x))
    }

    /// `K_X·E_j = w_j + 2g_j - 2` by adjunction.
    pub fn canonical_degree(&self, j: usize) -> Result<i64> {
        let v = self.vertices.get(j).ok_or(Error::IndexOutOfRange {
            index: j,
            len: self.len(),
        })?;
        Ok(v.weight as i64 + 2 * v.genus as i64 - 2)
    }

    pub fn canonical_degrees(&self) -> Vec<i64> {
        (0..self.len())
            .map(|j| self.canonical_degree(j).expect("in range"))
            .collect()
    }

    /// `D·E_j` for every `j`.
    pub fn dot_curves(&self, d: &ExcDivisor) -> Result<Vec<Rat>> {
        check_dim(self.len(), d.len())?;
        Ok(linalg::apply(&self.form, d.coefficients())
            .into_iter()
            .map(|x| -x)
            .collect())
    }

    /// `D·D'` under the intersection pairing.
    pub fn intersect(&self, d: &ExcDivisor, e: &ExcDivisor) -> Result<Rat> {
        check_dim(self.len(), e.len())?;
        Ok(self
            .dot_curves(d)?
            .iter()
            .zip(e.coefficients())
            .map(|(a, b)| a * b)
            .sum())
    }

    /// `-D² = Dᵀ N D`.
    pub fn quadratic_norm(&self, d: &ExcDivisor) -> Result<Rat> {
        check_dim(self.len(), d.len())?;
        Ok(linalg::quadratic(&self.form, d.coefficients()))
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// An exceptional Q-divisor `Σ x_j E_j`, indexed by vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExcDivisor(Vec<Rat>);

impl ExcDivisor {
    pub fn new(coefficients: Vec<Rat>) -> Self {
        Self(coefficients)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![Rat::zero(); n])
    }

    pub fn from_integers(xs: &[i64]) -> Self {
        Self(xs.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coefficients(self) -> Vec<Rat> {
        self.0
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, t: &Rat) -> Self {
        Self(self.0.iter().map(|a| a * t).collect())
    }
}

impl Index<usize> for ExcDivisor {
    type Output = Rat;

    fn index(&self, j: usize) -> &Rat {
        &self.0[j]
    }
}
