#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use surfsing::continuant::WeightChain;
use surfsing::rat::{frac, Rat};
use surfsing::{BoundaryComponent, BoundaryData, DualGraph, Edge, ValidGraph, Vertex};

/// Random connected graph on `1..=max_n` vertices: a tree from a parent
/// list, optionally closed into a cycle by one extra edge.
pub fn graph(max_n: usize, max_weight: u64) -> impl Strategy<Value = ValidGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            (
                prop::collection::vec(2..=max_weight, n),
                prop::collection::vec(any::<prop::sample::Index>(), n),
                prop::option::weighted(0.2, (any::<prop::sample::Index>(), any::<prop::sample::Index>())),
            )
        })
        .prop_filter_map("not negative definite", |(weights, parents, extra)| {
            let n = weights.len();
            let vertices: Vec<Vertex> = weights
                .iter()
                .enumerate()
                .map(|(i, &w)| Vertex::rational(format!("E{}", i + 1), w))
                .collect();
            let mut edges: Vec<Edge> = (1..n)
                .map(|i| Edge::simple(format!("E{}", parents[i].index(i) + 1), format!("E{}", i + 1)))
                .collect();
            if let Some((a, b)) = extra {
                let (a, b) = (a.index(n), b.index(n));
                if a != b {
                    edges.push(Edge::simple(format!("E{}", a + 1), format!("E{}", b + 1)));
                }
            }
            DualGraph::new(vertices, edges).ok()?.validate().ok()
        })
}

/// Tree with every weight 2 that passes validation, i.e. an ADE graph.
pub fn ade_tree(max_n: usize) -> impl Strategy<Value = ValidGraph> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(any::<prop::sample::Index>(), n))
        .prop_filter_map("not negative definite", |parents| {
            let n = parents.len();
            let vertices = (0..n).map(|i| Vertex::rational(format!("E{}", i + 1), 2)).collect();
            let edges = (1..n)
                .map(|i| Edge::simple(format!("E{}", parents[i].index(i) + 1), format!("E{}", i + 1)))
                .collect();
            DualGraph::new(vertices, edges).ok()?.validate().ok()
        })
}

pub fn chain(max_n: usize, max_weight: u64) -> impl Strategy<Value = WeightChain> {
    prop::collection::vec(2..=max_weight, 1..=max_n).prop_map(|w| WeightChain::new(w).unwrap())
}

/// Rational in `[0, 1]` with denominator at most 12.
pub fn unit_rat() -> impl Strategy<Value = Rat> {
    (1i64..=12).prop_flat_map(|d| (0..=d).prop_map(move |p| frac(p, d)))
}

pub fn nonneg_rat() -> impl Strategy<Value = Rat> {
    (0i64..=20, 1i64..=7).prop_map(|(p, d)| frac(p, d))
}

/// Up to three components with sparse meets vectors of length `n`.
pub fn boundary(n: usize) -> impl Strategy<Value = BoundaryData> {
    let component = (unit_rat(), prop::collection::vec(prop_oneof![3 => Just(0u64), 2 => 1u64..=2], n));
    prop::collection::vec(component, 0..=3).prop_map(|cs| {
        BoundaryData::new(
            cs.into_iter()
                .enumerate()
                .map(|(i, (coeff, meets))| BoundaryComponent {
                    name: format!("C{}", i + 1),
                    coeff,
                    meets,
                })
                .collect(),
        )
        .unwrap()
    })
}

pub fn graph_with_boundary(max_n: usize, max_weight: u64) -> impl Strategy<Value = (ValidGraph, BoundaryData)> {
    graph(max_n, max_weight).prop_flat_map(|g| {
        let n = g.len();
        (Just(g), boundary(n))
    })
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// `N` as small integers.
pub fn form_i64(g: &ValidGraph) -> Vec<Vec<i64>> {
    let m = g.intersection_matrix();
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| -m.get(i, j)).collect())
        .collect()
}
