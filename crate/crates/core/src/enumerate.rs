//! Enumeration harness: runs the invariant suite over families of graphs
//! and checks the value ranges of `δ_y` on each row.

use std::collections::HashSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::classify::{Shape, SingularityKind};
use crate::continuant::{chain_delta_y, WeightChain};
use crate::cycles::BoundaryData;
use crate::graph::DualGraph;
use crate::invariants::Invariants;
use crate::rat::{self, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub max_length: usize,
    pub max_weight: u64,
    /// Add the smooth point, the all-2 D/E forks and weighted D/E forks.
    pub forks: bool,
    pub row_limit: usize,
}

impl Default for FamilySpec {
    fn default() -> Self {
        Self {
            max_length: 6,
            max_weight: 6,
            forks: true,
            row_limit: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("family has {rows} graphs, above the row limit {limit}")]
    RowLimit { rows: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub index: usize,
    pub label: String,
    pub kind: SingularityKind,
    pub shape: Shape,
    pub log_terminal: bool,
    pub delta_y: String,
    pub delta_min: String,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub rows: Vec<Row>,
}

impl Table {
    pub fn failures(&self) -> usize {
        self.rows.iter().map(|r| r.failures.len()).sum()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let shape = match &r.shape {
                Shape::ChainA { n, .. } => format!("A{n}"),
                s => format!("{s:?}"),
            };
            out.push_str(&format!(
                "{:>6}  {:<28} {:<9} {:<8} lt={:<5} delta_y={:<12} delta_min={}{}\n",
                r.index,
                r.label,
                format!("{:?}", r.kind),
                shape,
                r.log_terminal,
                r.delta_y,
                r.delta_min,
                if r.failures.is_empty() {
                    String::new()
                } else {
                    format!("  FAIL: {}", r.failures.join("; "))
                }
            ));
        }
        out.push_str(&format!(
            "{} rows, {} assertion failures\n",
            self.rows.len(),
            self.failures()
        ));
        out
    }
}

/// A graph in the family, with the chain weights when it is a chain.
#[derive(Debug, Clone)]
pub struct Member {
    pub label: String,
    pub graph: DualGraph,
    pub chain: Option<WeightChain>,
}

fn label_chain(w: &[u64]) -> String {
    let parts: Vec<String> = w.iter().map(u64::to_string).collect();
    format!("chain({})", parts.join(","))
}

fn label_star(center: u64, arms: &[&[u64]]) -> String {
    let arms: Vec<String> = arms
        .iter()
        .map(|a| a.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
        .collect();
    format!("fork({center};{})", arms.join("|"))
}

/// All chains of length `1..=max_length` with weights in `[2, max_weight]`,
/// one per reversal class.
pub fn chains(max_length: usize, max_weight: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if max_weight < 2 {
        return out;
    }
    for len in 1..=max_length {
        let mut w = vec![2u64; len];
        loop {
            let rev: Vec<u64> = w.iter().rev().copied().collect();
            if w <= rev {
                out.push(w.clone());
            }
            // odometer increment
            let Some(i) = (0..len).rev().find(|&i| w[i] < max_weight) else {
                break;
            };
            w[i] += 1;
            for x in &mut w[i + 1..] {
                *x = 2;
            }
        }
    }
    out
}

/// The all-2 D_4..D_8 and E_6..E_8 forks.
pub fn ade_forks() -> Vec<(u64, Vec<Vec<u64>>)> {
    let mut out: Vec<(u64, Vec<Vec<u64>>)> = (1..=5)
        .map(|k| (2, vec![vec![2], vec![2], vec![2; k]]))
        .collect();
    for long in [2, 3, 4] {
        out.push((2, vec![vec![2], vec![2, 2], vec![2; long]]));
    }
    out
}

/// Forks of quotient type with weights in `[2, max_weight]`: D shapes with a
/// third arm of length at most 2, and E shapes from every arm with
/// continuant 2, 3, 4 or 5.
pub fn weighted_forks(max_weight: u64) -> Vec<(u64, Vec<Vec<u64>>)> {
    let mut out = Vec::new();
    let third: Vec<Vec<u64>> = chains(2, max_weight)
        .into_iter()
        .flat_map(|c| {
            let r: Vec<u64> = c.iter().rev().copied().collect();
            if r == c {
                vec![c]
            } else {
                vec![c, r]
            }
        })
        .collect();
    let by_det = |d: u64| -> Vec<Vec<u64>> {
        let all: &[&[u64]] = match d {
            2 => &[&[2]],
            3 => &[&[3], &[2, 2]],
            4 => &[&[4], &[2, 2, 2]],
            5 => &[&[5], &[2, 2, 2, 2], &[2, 3], &[3, 2]],
            _ => &[],
        };
        all.iter()
            .filter(|a| a.iter().all(|&w| w <= max_weight))
            .map(|a| a.to_vec())
            .collect()
    };
    for center in 2..=max_weight {
        for arm in &third {
            out.push((center, vec![vec![2], vec![2], arm.clone()]));
        }
        for (d2, d3) in [(3, 3), (3, 4), (3, 5)] {
            let threes = by_det(d2);
            for (i, a) in threes.iter().enumerate() {
                let others = by_det(d3);
                for (k, b) in others.iter().enumerate() {
                    if d2 == d3 && k < i {
                        continue;
                    }
                    out.push((center, vec![vec![2], a.clone(), b.clone()]));
                }
            }
        }
    }
    out
}

pub fn family(spec: &FamilySpec) -> Vec<Member> {
    let mut members = Vec::new();
    if spec.forks {
        members.push(Member {
            label: "smooth".into(),
            graph: DualGraph::smooth(),
            chain: None,
        });
    }
    for w in chains(spec.max_length, spec.max_weight) {
        members.push(Member {
            label: label_chain(&w),
            graph: DualGraph::chain(&w).expect("chain is well formed"),
            chain: Some(WeightChain::new(w).expect("weights >= 2")),
        });
    }
    if spec.forks {
        let mut seen = HashSet::new();
        for (center, arms) in ade_forks().into_iter().chain(weighted_forks(spec.max_weight)) {
            let refs: Vec<&[u64]> = arms.iter().map(Vec::as_slice).collect();
            let mut key = arms.clone();
            key.sort();
            if !seen.insert((center, key)) {
                continue;
            }
            members.push(Member {
                label: label_star(center, &refs),
                graph: DualGraph::star(center, &refs).expect("star is well formed"),
                chain: None,
            });
        }
    }
    members
}

/// Evaluates every member with empty boundary and checks:
/// `δ_y = 4` (smooth), `δ_y = 2` (RDP), `0 < δ_y < 2` (other log-terminal),
/// `0 ≤ δ_y ≤ 2` (log-canonical, not smooth), `δ_min ≤ δ_y ≤ 4`, and for
/// chains `δ_y = 2 - a_1 - a_n`.
pub fn enumerate(spec: &FamilySpec) -> Result<Table, EnumerateError> {
    let members = family(spec);
    if members.len() > spec.row_limit {
        return Err(EnumerateError::RowLimit {
            rows: members.len(),
            limit: spec.row_limit,
        });
    }
    let rows = members
        .into_iter()
        .enumerate()
        .map(|(index, m)| evaluate(index, m))
        .collect();
    Ok(Table { rows })
}

fn evaluate(index: usize, m: Member) -> Row {
    let mut failures = Vec::new();
    let graph = match m.graph.validate() {
        Ok(g) => g,
        Err(e) => {
            return Row {
                index,
                label: m.label,
                kind: SingularityKind::Singular,
                shape: Shape::Other,
                log_terminal: false,
                delta_y: String::new(),
                delta_min: String::new(),
                failures: vec![format!("validation: {e}")],
            }
        }
    };
    let inv = Invariants::compute(&graph, &BoundaryData::empty(), None)
        .expect("empty boundary on a valid graph");
    let dy = &inv.delta_y;
    let cl = &inv.classification;
    let two = rat::int(2);
    let four = rat::int(4);
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(format!("{what} (delta_y = {})", rat::to_string(dy)));
        }
    };
    if cl.smooth {
        check(*dy == four, "smooth but delta_y != 4");
    } else if cl.rdp {
        check(*dy == two, "RDP but delta_y != 2");
    } else if cl.log_terminal {
        check(dy.is_positive() && *dy < two, "log-terminal but delta_y not in (0, 2)");
    }
    if cl.log_canonical {
        if !cl.smooth {
            check(!dy.is_negative() && *dy <= two, "log-canonical but delta_y not in [0, 2]");
        }
        check(inv.delta_min.value <= *dy && *dy <= four, "delta_min <= delta_y <= 4 fails");
    }
    if let Some(chain) = &m.chain {
        let formula: Rat = chain_delta_y(chain).unwrap_or_else(|_| Rat::zero());
        check(formula == *dy, "chain end formula disagrees");
    }
    Row {
        index,
        label: m.label,
        kind: cl.kind,
        shape: cl.shape.clone(),
        log_terminal: cl.log_terminal,
        delta_y: rat::to_string(dy),
        delta_min: rat::to_string(&inv.delta_min.value),
        failures,
    }
}
