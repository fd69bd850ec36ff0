//! Log-terminal / log-canonical predicates and the shape of the dual graph.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::continuant::{continuant, WeightChain};
use crate::cycles::{BoundaryData, CycleSet};
use crate::graph::{ExcDivisor, ValidGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SingularityKind {
    Smooth,
    #[serde(rename = "RDP")]
    Rdp,
    Singular,
}

/// Shape of the exceptional configuration, for the `δ′` table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum Shape {
    /// A simple path; `ends` are the indices of its two end curves
    /// (equal when `n = 1`), lower index first.
    ChainA { n: usize, ends: (usize, usize) },
    ForkD,
    ForkE,
    Other,
    /// Some curve has positive genus or some pair meets with multiplicity > 1.
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub smooth: bool,
    pub rdp: bool,
    pub log_terminal: bool,
    pub log_canonical: bool,
    pub kind: SingularityKind,
    pub shape: Shape,
}

/// `⌊B⌋ = 0` and every `e_j < 1`.
pub fn is_log_terminal(boundary: &BoundaryData, e: &ExcDivisor) -> bool {
    let one = crate::Rat::one();
    boundary.components.iter().all(|c| c.coeff < one) && e.coefficients().iter().all(|x| *x < one)
}

/// `⌈B⌉` reduced (every `b_i ≤ 1`) and every `e_j ≤ 1`.
pub fn is_log_canonical(boundary: &BoundaryData, e: &ExcDivisor) -> bool {
    let one = crate::Rat::one();
    boundary.components.iter().all(|c| c.coeff <= one)
        && e.coefficients().iter().all(|x| *x <= one)
}

pub fn singularity_kind(graph: &ValidGraph) -> SingularityKind {
    let v = graph.vertices();
    if v.len() == 1 && v[0].weight == 1 && v[0].genus == 0 {
        SingularityKind::Smooth
    } else if v.iter().all(|x| x.genus == 0 && x.weight == 2) {
        // all (-2)-curves of genus 0 is exactly K_X·E_j = 0 for all j, i.e. Δ = 0
        SingularityKind::Rdp
    } else {
        SingularityKind::Singular
    }
}

pub fn graph_shape(graph: &ValidGraph) -> Shape {
    let n = graph.len();
    if graph.vertices().iter().any(|v| v.genus > 0) {
        return Shape::Unsupported;
    }
    if (0..n).any(|i| (0..n).any(|j| graph.multiplicity(i, j) > 1)) {
        return Shape::Unsupported;
    }
    let degree: Vec<usize> = (0..n).map(|j| graph.neighbors(j).count()).collect();
    let edge_count: usize = degree.iter().sum::<usize>() / 2;
    // validated graphs are connected, so a tree is exactly n - 1 edges
    if edge_count != n - 1 {
        return Shape::Other;
    }
    if degree.iter().all(|&d| d <= 2) {
        let mut ends = (0..n).filter(|&j| degree[j] <= 1);
        let a = ends.next().expect("a path has an end");
        let b = ends.next().unwrap_or(a);
        return Shape::ChainA { n, ends: (a, b) };
    }
    let forks: Vec<usize> = (0..n).filter(|&j| degree[j] >= 3).collect();
    if forks.len() != 1 || degree[forks[0]] != 3 {
        return Shape::Other;
    }
    let center = forks[0];
    let arms: Vec<Vec<u64>> = graph
        .neighbors(center)
        .map(|start| arm_weights(graph, center, start))
        .collect();
    let short_twos = arms.iter().filter(|a| a.as_slice() == [2]).count();
    if short_twos >= 2 {
        return Shape::ForkD;
    }
    let mut dets: Vec<BigInt> = arms
        .iter()
        .map(|a| WeightChain::new(a.clone()).map(|c| continuant(&c)))
        .collect::<Result<_, _>>()
        .unwrap_or_default();
    dets.sort();
    let platonic = [[2, 3, 3], [2, 3, 4], [2, 3, 5]];
    if platonic
        .iter()
        .any(|p| dets.iter().cloned().eq(p.iter().map(|&x| BigInt::from(x))))
    {
        Shape::ForkE
    } else {
        Shape::Other
    }
}

/// Weights along the arm leaving `center` through `start`, outward.
fn arm_weights(graph: &ValidGraph, center: usize, start: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let (mut prev, mut cur) = (center, start);
    loop {
        out.push(graph.vertices()[cur].weight);
        match graph.neighbors(cur).find(|&k| k != prev) {
            Some(next) => {
                prev = cur;
                cur = next;
            }
            None => return out,
        }
    }
}

pub fn classify(graph: &ValidGraph, boundary: &BoundaryData, cycles: &CycleSet) -> Classification {
    let kind = singularity_kind(graph);
    Classification {
        smooth: kind == SingularityKind::Smooth,
        rdp: kind == SingularityKind::Rdp,
        log_terminal: is_log_terminal(boundary, &cycles.delta_b),
        log_canonical: is_log_canonical(boundary, &cycles.delta_b),
        kind,
        shape: graph_shape(graph),
    }
}
