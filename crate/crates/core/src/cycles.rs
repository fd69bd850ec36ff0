//! Fundamental, canonical and boundary canonical cycles.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{check_dim, ExcDivisor, ValidGraph};
use crate::rat::{self, Rat};

/// One prime component `C_i` of the boundary `B = Σ b_i C_i`, seen through
/// the resolution by the intersection numbers `f⁻¹C_i · E_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryComponent {
    pub name: String,
    pub coeff: Rat,
    pub meets: Vec<u64>,
}

impl BoundaryComponent {
    pub fn misses_exceptional_locus(&self) -> bool {
        self.meets.iter().all(|&m| m == 0)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundaryData {
    pub components: Vec<BoundaryComponent>,
}

impl BoundaryData {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(components: Vec<BoundaryComponent>) -> Result<Self> {
        for c in &components {
            if c.coeff.is_negative() || c.coeff > Rat::one() {
                return Err(Error::CoefficientOutOfRange {
                    name: c.name.clone(),
                    coeff: rat::to_string(&c.coeff),
                });
            }
        }
        Ok(Self { components })
    }

    /// Single component with coefficient `coeff` meeting the curves per `meets`.
    pub fn single(coeff: Rat, meets: Vec<u64>) -> Result<Self> {
        Self::new(vec![BoundaryComponent {
            name: "C1".into(),
            coeff,
            meets,
        }])
    }

    /// `q_j = Σ_i b_i · (f⁻¹C_i · E_j)`.
    pub fn strict_transform_degrees(&self, n: usize) -> Result<Vec<Rat>> {
        let mut q = vec![Rat::zero(); n];
        for c in &self.components {
            check_dim(n, c.meets.len())?;
            for (qj, &m) in q.iter_mut().zip(&c.meets) {
                if m != 0 {
                    *qj += &c.coeff * BigInt::from(m);
                }
            }
        }
        Ok(q)
    }

    /// True iff no component with positive coefficient meets the exceptional locus.
    pub fn misses_point(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.coeff.is_zero() || c.misses_exceptional_locus())
    }
}

/// All cycles attached to a germ with boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSet {
    /// Fundamental cycle `Z` (integral).
    pub z: ExcDivisor,
    /// Canonical cycle `Δ = Σ a_j E_j`.
    pub delta: ExcDivisor,
    /// Exceptional part `b′` of `f*B`.
    pub bprime: ExcDivisor,
    /// `Δ_B = Δ + b′ = Σ e_j E_j`.
    pub delta_b: ExcDivisor,
    pub pa_z: Rat,
}

/// Artin's fundamental cycle by Laufer's sequence, always raising the
/// lowest-indexed curve with `Z·E_j > 0`.
pub fn fundamental_cycle(graph: &ValidGraph) -> ExcDivisor {
    fundamental_cycle_by(graph, |candidates| candidates[0])
}

/// Laufer's sequence with a caller-chosen increment among the curves
/// `E_j` with `Z·E_j > 0`. The result does not depend on the choice.
pub fn fundamental_cycle_by(
    graph: &ValidGraph,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> ExcDivisor {
    let n = graph.len();
    let form = graph.intersection_matrix();
    let mut z = vec![1i64; n];
    loop {
        // Z·E_j = Σ_i z_i (E_i·E_j)
        let positive: Vec<usize> = (0..n)
            .filter(|&j| (0..n).map(|i| z[i] * form.get(i, j)).sum::<i64>() > 0)
            .collect();
        if positive.is_empty() {
            return ExcDivisor::from_integers(&z);
        }
        let j = pick(&positive);
        debug_assert!(positive.contains(&j));
        z[j] += 1;
    }
}

/// `p_a(Z) = ½ Z·(K_X + Z) + 1`.
pub fn arithmetic_genus(graph: &ValidGraph, z: &ExcDivisor) -> Result<Rat> {
    check_dim(graph.len(), z.len())?;
    let zk: Rat = z
        .coefficients()
        .iter()
        .zip(graph.canonical_degrees())
        .map(|(zj, k)| zj * Rat::from_integer(k.into()))
        .sum();
    let zz = graph.intersect(z, z)?;
    Ok((zk + zz) / rat::int(2) + Rat::one())
}

/// `Δ` with `Δ·E_j = -K_X·E_j`, i.e. `N Δ = (K_X·E_j)_j`.
pub fn canonical_cycle(graph: &ValidGraph) -> ExcDivisor {
    let rhs: Vec<Rat> = graph
        .canonical_degrees()
        .into_iter()
        .map(|k| Rat::from_integer(k.into()))
        .collect();
    graph.solve_exceptional(&rhs).expect("dimension matches")
}

/// Exceptional part of the Mumford pullback of a divisor whose strict
/// transform meets `E_j` with degree `meets[j]`.
pub fn mumford_pullback_exc(graph: &ValidGraph, meets: &[Rat]) -> Result<ExcDivisor> {
    check_dim(graph.len(), meets.len())?;
    if let Some((index, value)) = meets.iter().enumerate().find(|(_, m)| m.is_negative()) {
        return Err(Error::NegativeEntry {
            index,
            value: rat::to_string(value),
        });
    }
    graph.solve_exceptional(meets)
}

pub fn boundary_cycle(graph: &ValidGraph, boundary: &BoundaryData) -> Result<CycleSet> {
    // Re-check: the fields are public, so the constructor may have been bypassed.
    let boundary = BoundaryData::new(boundary.components.clone())?;
    let q = boundary.strict_transform_degrees(graph.len())?;
    let bprime = mumford_pullback_exc(graph, &q)?;
    let delta = canonical_cycle(graph);
    let delta_b = delta.add(&bprime);
    let z = fundamental_cycle(graph);
    let pa_z = arithmetic_genus(graph, &z)?;
    Ok(CycleSet {
        z,
        delta,
        bprime,
        delta_b,
        pa_z,
    })
}
