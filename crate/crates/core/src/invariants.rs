//! The threshold invariants `δ_y`, `δ_{B,y}`, `δ_min`, `μ`, `δ`, `δ′` and the
//! numerical hypothesis check built on them.

use num_traits::{One, Signed, Zero};

use crate::classify::{self, Classification, Shape};
use crate::cycles::{boundary_cycle, BoundaryData, CycleSet};
use crate::error::{Error, Result};
use crate::graph::{ExcDivisor, ValidGraph};
use crate::linalg::{self, IntMatrix};
use crate::rat::{self, Rat};

/// Largest configuration the active-set search accepts.
pub const ACTIVE_SET_CAP: usize = 30;

/// Largest configuration the exhaustive `2ⁿ` cross-check accepts.
pub const EXHAUSTIVE_CAP: usize = 20;

/// Stand-in for the D-type `δ′`, which may be any positive number.
pub fn default_epsilon() -> Rat {
    rat::frac(1, 1000)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaMinResult {
    pub value: Rat,
    /// Effective minimizer `x0`.
    pub minimizer: ExcDivisor,
    /// Indices with `x0_j > 0`, ascending.
    pub active_set: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaPrime {
    /// Chain type: `1 - max{e_1, e_n}` over the chain ends.
    ValueA(Rat),
    /// D type: any positive number works; `epsilon` is the configured stand-in.
    PositiveRequired { epsilon: Rat },
    Zero,
}

impl DeltaPrime {
    /// The number used as the curve threshold.
    pub fn threshold(&self) -> Rat {
        match self {
            DeltaPrime::ValueA(v) => v.clone(),
            DeltaPrime::PositiveRequired { epsilon } => epsilon.clone(),
            DeltaPrime::Zero => Rat::zero(),
        }
    }

    /// Whether `min M·C = mc` meets the requirement.
    pub fn admits(&self, mc: &Rat) -> bool {
        match self {
            DeltaPrime::ValueA(v) => mc >= v,
            DeltaPrime::PositiveRequired { .. } => mc.is_positive(),
            DeltaPrime::Zero => !mc.is_negative(),
        }
    }
}

/// `vᵀ N v = -v²`.
pub fn quadratic_norm(graph: &ValidGraph, v: &ExcDivisor) -> Result<Rat> {
    graph.quadratic_norm(v)
}

/// `δ_y = -(Z - Δ)²`.
pub fn delta_y(graph: &ValidGraph) -> Rat {
    let c = boundary_cycle(graph, &BoundaryData::empty()).expect("empty boundary is valid");
    delta_y_of(graph, &c)
}

fn delta_y_of(graph: &ValidGraph, c: &CycleSet) -> Rat {
    graph.quadratic_norm(&c.z.sub(&c.delta)).expect("dimensions agree")
}

/// `δ_{B,y} = -(Z - Δ_B)²`.
pub fn delta_b_y(graph: &ValidGraph, boundary: &BoundaryData) -> Result<Rat> {
    let c = boundary_cycle(graph, boundary)?;
    Ok(delta_b_y_of(graph, &c))
}

fn delta_b_y_of(graph: &ValidGraph, c: &CycleSet) -> Rat {
    graph.quadratic_norm(&c.z.sub(&c.delta_b)).expect("dimensions agree")
}

/// `δ_min = min { -(Z - Δ_B + x)² : x ≥ 0 exceptional }`.
pub fn delta_min(graph: &ValidGraph, boundary: &BoundaryData) -> Result<DeltaMinResult> {
    let c = boundary_cycle(graph, boundary)?;
    minimize_on_cone(graph.form(), &c.z.sub(&c.delta_b))
}

/// Minimizes `(v + x)ᵀ N (v + x)` over `x ≥ 0` for positive definite `N`.
///
/// Candidate free sets `S` are tried in increasing size (lexicographic
/// within a size). For each, the restricted stationarity system
/// `(N(v + x))_S = 0`, `x = 0` off `S` is solved; the first candidate with
/// `x ≥ 0` and `(N(v + x))_j ≥ 0` off `S` is a KKT point and, by strict
/// convexity, the unique global minimizer.
pub fn minimize_on_cone(form: &IntMatrix, v: &ExcDivisor) -> Result<DeltaMinResult> {
    let n = form.len();
    crate::graph::check_dim(n, v.len())?;
    if n > ACTIVE_SET_CAP {
        return Err(Error::ActiveSetLimit {
            n,
            cap: ACTIVE_SET_CAP,
        });
    }
    let grad0 = linalg::apply(form, v.coefficients());
    for size in 0..=n {
        let mut found = None;
        for_each_combination(n, size, |set| {
            found = kkt_candidate(form, &grad0, set);
            found.is_some()
        });
        if let Some(x) = found {
            return Ok(finish(form, v, x));
        }
    }
    unreachable!("a strictly convex quadratic has a KKT point on the orthant")
}

/// Every distinct KKT point found by trying all `2ⁿ` free sets.
///
/// Independent cross-check for [`minimize_on_cone`]: strict convexity means
/// exactly one point should come back.
pub fn kkt_points_exhaustive(form: &IntMatrix, v: &ExcDivisor) -> Result<Vec<DeltaMinResult>> {
    let n = form.len();
    crate::graph::check_dim(n, v.len())?;
    if n > EXHAUSTIVE_CAP {
        return Err(Error::ActiveSetLimit {
            n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let grad0 = linalg::apply(form, v.coefficients());
    let mut points: Vec<ExcDivisor> = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let set: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
        if let Some(x) = kkt_candidate(form, &grad0, &set) {
            if !points.contains(&x) {
                points.push(x);
            }
        }
    }
    Ok(points.into_iter().map(|x| finish(form, v, x)).collect())
}

/// Exact KKT conditions for `x` at base point `v`: `x ≥ 0`, `g = N(v + x) ≥ 0`,
/// and `x_j g_j = 0` for every `j`.
pub fn is_kkt_point(form: &IntMatrix, v: &ExcDivisor, x: &ExcDivisor) -> bool {
    if !x.is_effective() || x.len() != v.len() {
        return false;
    }
    let g = linalg::apply(form, v.add(x).coefficients());
    g.iter()
        .zip(x.coefficients())
        .all(|(gj, xj)| !gj.is_negative() && (gj * xj).is_zero())
}

fn kkt_candidate(form: &IntMatrix, grad0: &[Rat], set: &[usize]) -> Option<ExcDivisor> {
    let n = form.len();
    let mut x = vec![Rat::zero(); n];
    if !set.is_empty() {
        let sub = linalg::principal(form, set);
        let rhs: Vec<Rat> = set.iter().map(|&j| -grad0[j].clone()).collect();
        let xs = linalg::solve(&sub, &rhs)?;
        if xs.iter().any(Signed::is_negative) {
            return None;
        }
        for (&j, xj) in set.iter().zip(xs) {
            x[j] = xj;
        }
    }
    let shift = linalg::apply(form, &x);
    let off_set_ok = (0..n)
        .filter(|j| !set.contains(j))
        .all(|j| !(&grad0[j] + &shift[j]).is_negative());
    off_set_ok.then(|| ExcDivisor::new(x))
}

fn finish(form: &IntMatrix, v: &ExcDivisor, x: ExcDivisor) -> DeltaMinResult {
    let value = linalg::quadratic(form, v.add(&x).coefficients());
    let active_set = (0..x.len()).filter(|&j| x[j].is_positive()).collect();
    DeltaMinResult {
        value,
        minimizer: x,
        active_set,
    }
}

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it returns true.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn require_log_terminal(boundary: &BoundaryData, c: &CycleSet) -> Result<()> {
    if classify::is_log_terminal(boundary, &c.delta_b) {
        Ok(())
    } else {
        Err(Error::NotLogTerminal)
    }
}

/// `μ = max{t ≥ 0 : t(Z - Δ) ≤ f*B} = min_j b′_j / (z_j - a_j)`.
///
/// Only defined when the pair is log-terminal, where `Z - Δ > 0`.
pub fn mu(graph: &ValidGraph, boundary: &BoundaryData) -> Result<Rat> {
    let c = boundary_cycle(graph, boundary)?;
    require_log_terminal(boundary, &c)?;
    Ok(mu_of(&c))
}

fn mu_of(c: &CycleSet) -> Rat {
    (0..c.z.len())
        .map(|j| &c.bprime[j] / (&c.z[j] - &c.delta[j]))
        .min()
        .expect("nonempty graph")
}

/// `δ_min` if log-terminal, else `0`.
pub fn delta(graph: &ValidGraph, boundary: &BoundaryData) -> Result<Rat> {
    let c = boundary_cycle(graph, boundary)?;
    if classify::is_log_terminal(boundary, &c.delta_b) {
        Ok(minimize_on_cone(graph.form(), &c.z.sub(&c.delta_b))?.value)
    } else {
        Ok(Rat::zero())
    }
}

pub fn delta_prime(
    graph: &ValidGraph,
    boundary: &BoundaryData,
    epsilon: Option<Rat>,
) -> Result<DeltaPrime> {
    let c = boundary_cycle(graph, boundary)?;
    let class = classify::classify(graph, boundary, &c);
    Ok(delta_prime_of(&class, &c, epsilon))
}

fn delta_prime_of(class: &Classification, c: &CycleSet, epsilon: Option<Rat>) -> DeltaPrime {
    if !class.log_terminal {
        return DeltaPrime::Zero;
    }
    match class.shape {
        Shape::ChainA { ends: (a, b), .. } => {
            let e = &c.delta_b;
            DeltaPrime::ValueA(Rat::one() - std::cmp::max(&e[a], &e[b]))
        }
        Shape::ForkD => DeltaPrime::PositiveRequired {
            epsilon: epsilon.unwrap_or_else(default_epsilon),
        },
        _ => DeltaPrime::Zero,
    }
}

/// Everything computed for one germ with boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub cycles: CycleSet,
    pub classification: Classification,
    pub delta_y: Rat,
    pub delta_b_y: Rat,
    pub delta_min: DeltaMinResult,
    /// Present iff the pair is log-terminal.
    pub mu: Option<Rat>,
    pub delta: Rat,
    pub delta_prime: DeltaPrime,
}

impl Invariants {
    pub fn compute(graph: &ValidGraph, boundary: &BoundaryData, epsilon: Option<Rat>) -> Result<Self> {
        let cycles = boundary_cycle(graph, boundary)?;
        let classification = classify::classify(graph, boundary, &cycles);
        // δ_y only involves Z and Δ, both independent of the boundary
        let delta_y = delta_y_of(graph, &cycles);
        let delta_b_y = delta_b_y_of(graph, &cycles);
        let delta_min = minimize_on_cone(graph.form(), &cycles.z.sub(&cycles.delta_b))?;
        let mu = classification.log_terminal.then(|| mu_of(&cycles));
        let delta = if classification.log_terminal {
            delta_min.value.clone()
        } else {
            Rat::zero()
        };
        let delta_prime = delta_prime_of(&classification, &cycles, epsilon);
        Ok(Self {
            cycles,
            classification,
            delta_y,
            delta_b_y,
            delta_min,
            mu,
            delta,
            delta_prime,
        })
    }
}

/// One sufficient pair of bounds: `M² > m2_bound` and `min M·C ≥ mc_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub m2_bound: Rat,
    pub mc_bound: Rat,
    pub m2_ok: bool,
    pub mc_ok: bool,
}

impl BoundCheck {
    fn new(m2: &Rat, mc: &Rat, m2_bound: Rat, mc_bound: Rat) -> Self {
        Self {
            m2_ok: *m2 > m2_bound,
            mc_ok: *mc >= mc_bound,
            m2_bound,
            mc_bound,
        }
    }

    pub fn satisfied(&self) -> bool {
        self.m2_ok && self.mc_ok
    }
}

/// The `μ`-scaled sufficient condition, with `δ` and with `δ_y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryCheck {
    pub mu: Option<Rat>,
    /// `M² > (1-μ)²δ`, `M·C ≥ (1-μ)δ/2`.
    pub via_delta: BoundCheck,
    /// `M² > (1-μ)²δ_y`, `M·C ≥ (1-μ)δ_y/2`; only for log-terminal pairs.
    pub via_delta_y: Option<BoundCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub m2: Rat,
    pub min_mc: Rat,
    pub delta: Rat,
    pub delta_prime: DeltaPrime,
    /// `M² > δ`, strictly.
    pub m2_exceeds_delta: bool,
    /// `min M·C` meets the `δ′` requirement.
    pub curve_condition: bool,
    /// For the D-type row: whether `min M·C ≥ ε` as well.
    pub meets_epsilon: Option<bool>,
    pub satisfied: bool,
    pub corollary: CorollaryCheck,
}

/// Evaluates the numerical hypotheses `M² > δ` and `M·C ≥ δ′` given `M²` and
/// the minimum of `M·C` over curves through the point.
pub fn check_theorem(
    graph: &ValidGraph,
    boundary: &BoundaryData,
    m2: &Rat,
    min_mc: &Rat,
    epsilon: Option<Rat>,
) -> Result<TheoremCheck> {
    let inv = Invariants::compute(graph, boundary, epsilon)?;
    check_with(&inv, m2, min_mc)
}

pub fn check_with(inv: &Invariants, m2: &Rat, min_mc: &Rat) -> Result<TheoremCheck> {
    if !m2.is_positive() {
        return Err(Error::InvalidNef(rat::to_string(m2)));
    }
    if min_mc.is_negative() {
        return Err(Error::NegativeIntersection(rat::to_string(min_mc)));
    }
    let m2_exceeds_delta = *m2 > inv.delta;
    let curve_condition = inv.delta_prime.admits(min_mc);
    let meets_epsilon = match &inv.delta_prime {
        DeltaPrime::PositiveRequired { epsilon } => Some(min_mc >= epsilon),
        _ => None,
    };
    let scale = Rat::one() - inv.mu.clone().unwrap_or_else(Rat::zero);
    let two = rat::int(2);
    let scaled = |d: &Rat| (&scale * &scale * d, &scale * d / &two);
    let (a, b) = scaled(&inv.delta);
    let via_delta = BoundCheck::new(m2, min_mc, a, b);
    let via_delta_y = inv.mu.as_ref().map(|_| {
        let (a, b) = scaled(&inv.delta_y);
        BoundCheck::new(m2, min_mc, a, b)
    });
    Ok(TheoremCheck {
        m2: m2.clone(),
        min_mc: min_mc.clone(),
        delta: inv.delta.clone(),
        delta_prime: inv.delta_prime.clone(),
        m2_exceeds_delta,
        curve_condition,
        meets_epsilon,
        satisfied: m2_exceeds_delta && curve_condition,
        corollary: CorollaryCheck {
            mu: inv.mu.clone(),
            via_delta,
            via_delta_y,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DualGraph;
    use crate::rat::{frac, int};

    fn valid(g: crate::Result<DualGraph>) -> ValidGraph {
        g.unwrap().validate().unwrap()
    }

    fn div(xs: &[(i64, i64)]) -> ExcDivisor {
        ExcDivisor::new(xs.iter().map(|&(n, d)| frac(n, d)).collect())
    }

    fn anchor() -> (ValidGraph, BoundaryData) {
        (
            valid(DualGraph::chain(&[2, 5, 2])),
            BoundaryData::single(frac(1, 2), vec![0, 1, 0]).unwrap(),
        )
    }

    #[test]
    fn norms() {
        let smooth = DualGraph::smooth().validate().unwrap();
        assert_eq!(quadratic_norm(&smooth, &ExcDivisor::zero(1)), Ok(int(0)));
        assert_eq!(quadratic_norm(&smooth, &div(&[(2, 1)])), Ok(int(4)));
        let g = valid(DualGraph::chain(&[2, 3]));
        assert_eq!(quadratic_norm(&g, &div(&[(4, 5), (3, 5)])), Ok(frac(7, 5)));
        assert!(matches!(
            quadratic_norm(&g, &ExcDivisor::zero(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn delta_y_values() {
        assert_eq!(delta_y(&DualGraph::smooth().validate().unwrap()), int(4));
        assert_eq!(delta_y(&valid(DualGraph::chain(&[2]))), int(2));
        assert_eq!(delta_y(&valid(DualGraph::chain(&[2, 3]))), frac(7, 5));
    }

    #[test]
    fn delta_b_y_values() {
        let g = valid(DualGraph::chain(&[2, 3]));
        assert_eq!(delta_b_y(&g, &BoundaryData::empty()), Ok(delta_y(&g)));
        let g = valid(DualGraph::chain(&[3]));
        let b = BoundaryData::single(frac(1, 2), vec![1]).unwrap();
        assert_eq!(delta_b_y(&g, &b), Ok(frac(3, 4)));
        let (g, b) = anchor();
        assert_eq!(delta_b_y(&g, &b), Ok(frac(17, 16)));
    }

    #[test]
    fn delta_min_values() {
        let g = valid(DualGraph::chain(&[2, 3]));
        let r = delta_min(&g, &BoundaryData::empty()).unwrap();
        assert_eq!(r.value, frac(7, 5));
        assert!(r.minimizer.is_zero() && r.active_set.is_empty());

        let (g, b) = anchor();
        let r = delta_min(&g, &b).unwrap();
        assert_eq!(r.value, frac(81, 80));
        assert_eq!(r.minimizer, div(&[(0, 1), (1, 10), (0, 1)]));
        assert_eq!(r.active_set, vec![1]);

        let smooth = DualGraph::smooth().validate().unwrap();
        let r = delta_min(&smooth, &BoundaryData::empty()).unwrap();
        assert_eq!(r.value, int(4));
        assert!(r.minimizer.is_zero());
    }

    #[test]
    fn exhaustive_agrees_on_anchor() {
        let (g, b) = anchor();
        let c = boundary_cycle(&g, &b).unwrap();
        let v = c.z.sub(&c.delta_b);
        let all = kkt_points_exhaustive(g.form(), &v).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], minimize_on_cone(g.form(), &v).unwrap());
        assert!(is_kkt_point(g.form(), &v, &all[0].minimizer));
        assert!(!is_kkt_point(g.form(), &v, &ExcDivisor::zero(3)));
    }

    #[test]
    fn combinations_in_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let mut count = 0;
        for_each_combination(3, 0, |s| {
            assert!(s.is_empty());
            count += 1;
            false
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn mu_values() {
        let g = valid(DualGraph::chain(&[2, 3]));
        assert_eq!(mu(&g, &BoundaryData::empty()), Ok(int(0)));
        let g = valid(DualGraph::chain(&[3]));
        assert_eq!(mu(&g, &BoundaryData::single(frac(1, 2), vec![1]).unwrap()), Ok(frac(1, 4)));
        let (g, b) = anchor();
        assert_eq!(mu(&g, &b), Ok(frac(1, 10)));
        let reduced = BoundaryData::single(int(1), vec![0, 1, 0]).unwrap();
        assert_eq!(mu(&g, &reduced), Err(Error::NotLogTerminal));
    }

    #[test]
    fn smooth_mu_is_half_multiplicity() {
        let smooth = DualGraph::smooth().validate().unwrap();
        let b = BoundaryData::single(frac(1, 3), vec![2]).unwrap();
        // mult_y B = 2/3
        assert_eq!(mu(&smooth, &b), Ok(frac(1, 3)));
    }

    #[test]
    fn delta_cases() {
        let g = valid(DualGraph::chain(&[2, 3]));
        assert_eq!(delta(&g, &BoundaryData::empty()), Ok(frac(7, 5)));
        let a1 = valid(DualGraph::chain(&[2]));
        let big = BoundaryData::single(frac(3, 4), vec![3]).unwrap();
        assert_eq!(delta(&a1, &big), Ok(int(0)));
        let reduced = BoundaryData::single(int(1), vec![0]).unwrap();
        assert_eq!(delta(&a1, &reduced), Ok(int(0)));
    }

    #[test]
    fn delta_prime_cases() {
        let g = valid(DualGraph::chain(&[2, 3]));
        assert_eq!(
            delta_prime(&g, &BoundaryData::empty(), None),
            Ok(DeltaPrime::ValueA(frac(3, 5)))
        );
        let a1 = valid(DualGraph::chain(&[2]));
        assert_eq!(
            delta_prime(&a1, &BoundaryData::empty(), None),
            Ok(DeltaPrime::ValueA(int(1)))
        );
        let e8 = valid(DualGraph::star(2, &[&[2], &[2, 2], &[2, 2, 2, 2]]));
        assert_eq!(delta_prime(&e8, &BoundaryData::empty(), None), Ok(DeltaPrime::Zero));
        let d5 = valid(DualGraph::star(2, &[&[2], &[2], &[2, 2]]));
        assert_eq!(
            delta_prime(&d5, &BoundaryData::empty(), Some(frac(1, 7))),
            Ok(DeltaPrime::PositiveRequired { epsilon: frac(1, 7) })
        );
        assert_eq!(
            delta_prime(&d5, &BoundaryData::empty(), None),
            Ok(DeltaPrime::PositiveRequired {
                epsilon: default_epsilon()
            })
        );
    }

    #[test]
    fn theorem_checks() {
        let g = valid(DualGraph::chain(&[2, 3]));
        let none = BoundaryData::empty();
        let t = check_theorem(&g, &none, &int(2), &int(1), None).unwrap();
        assert!(t.satisfied && t.m2_exceeds_delta && t.curve_condition);
        let t = check_theorem(&g, &none, &frac(7, 5), &int(1), None).unwrap();
        assert!(!t.satisfied && !t.m2_exceeds_delta && t.curve_condition);

        let a1 = valid(DualGraph::chain(&[2]));
        let reduced = BoundaryData::single(int(1), vec![1]).unwrap();
        let t = check_theorem(&a1, &reduced, &frac(1, 100), &int(0), None).unwrap();
        assert!(t.satisfied);
        assert_eq!(t.delta, int(0));
        assert_eq!(t.delta_prime, DeltaPrime::Zero);
        assert!(t.corollary.via_delta.satisfied() && t.corollary.via_delta_y.is_none());

        assert!(matches!(
            check_theorem(&g, &none, &int(0), &int(1), None),
            Err(Error::InvalidNef(_))
        ));
        assert!(matches!(
            check_theorem(&g, &none, &int(2), &int(-1), None),
            Err(Error::NegativeIntersection(_))
        ));
    }

    #[test]
    fn d_type_needs_positive_degree() {
        let d4 = valid(DualGraph::star(2, &[&[2], &[2], &[2]]));
        let none = BoundaryData::empty();
        let t = check_theorem(&d4, &none, &int(3), &int(0), None).unwrap();
        assert!(!t.curve_condition && !t.satisfied);
        let t = check_theorem(&d4, &none, &int(3), &frac(1, 2000), None).unwrap();
        assert!(t.satisfied);
        assert_eq!(t.meets_epsilon, Some(false));
    }

    #[test]
    fn corollary_bound_is_tight_on_anchor() {
        let (g, b) = anchor();
        let inv = Invariants::compute(&g, &b, None).unwrap();
        let mu = inv.mu.clone().unwrap();
        let bound = (int(1) - &mu) * (int(1) - &mu) * &inv.delta_y;
        assert_eq!(bound, frac(81, 80));
        assert_eq!(inv.delta_min.value, bound);
        let t = check_with(&inv, &frac(82, 80), &int(1)).unwrap();
        assert_eq!(t.corollary.via_delta_y.as_ref().unwrap().m2_bound, frac(81, 80));
        assert!(t.corollary.via_delta_y.unwrap().m2_ok);
    }
}
