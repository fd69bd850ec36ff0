//! The analysis report and its JSON / text renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::classify::{Classification, Shape};
use crate::error::Result;
use crate::graph::ExcDivisor;
use crate::input::Input;
use crate::invariants::{self, BoundCheck, DeltaPrime, Invariants, TheoremCheck};
use crate::rat::{self, Rat};

pub const FORMAT: &str = "surfsing-report/1";

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// D-type `δ′` stand-in; defaults to `1/1000`.
    pub epsilon: Option<Rat>,
    /// Re-derive `δ_min` by trying all `2ⁿ` free sets.
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularityReport {
    pub format: &'static str,
    pub input: Value,
    pub vertices: Vec<String>,
    #[serde(rename = "fundamental_cycle")]
    pub z: Vec<String>,
    #[serde(rename = "canonical_cycle")]
    pub delta: Vec<String>,
    #[serde(rename = "boundary_pullback")]
    pub bprime: Vec<String>,
    /// Coefficients `e_j` of `Δ_B`.
    #[serde(rename = "boundary_canonical_cycle")]
    pub delta_b: Vec<String>,
    pub pa_z: String,
    pub delta_y: String,
    pub delta_b_y: String,
    pub delta_min: DeltaMinReport,
    pub mu: Option<String>,
    pub classification: Classification,
    #[serde(rename = "delta")]
    pub delta_value: String,
    pub delta_prime: DeltaPrimeReport,
    pub oracle: Option<OracleReport>,
    pub theorem: Option<TheoremReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaMinReport {
    pub value: String,
    pub x0: Vec<String>,
    pub active_set: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaPrimeReport {
    pub kind: &'static str,
    pub value: Option<String>,
    pub epsilon: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub kkt_points: usize,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub m2_bound: String,
    pub mc_bound: String,
    pub m2_ok: bool,
    pub mc_ok: bool,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub m2: String,
    pub min_mc: String,
    pub m2_exceeds_delta: bool,
    pub curve_condition: bool,
    pub meets_epsilon: Option<bool>,
    pub satisfied: bool,
    pub corollary_via_delta: BoundReport,
    pub corollary_via_delta_y: Option<BoundReport>,
}

fn coeffs(d: &ExcDivisor) -> Vec<String> {
    d.coefficients().iter().map(rat::to_string).collect()
}

fn bound_report(b: &BoundCheck) -> BoundReport {
    BoundReport {
        m2_bound: rat::to_string(&b.m2_bound),
        mc_bound: rat::to_string(&b.mc_bound),
        m2_ok: b.m2_ok,
        mc_ok: b.mc_ok,
        satisfied: b.satisfied(),
    }
}

fn delta_prime_report(d: &DeltaPrime) -> DeltaPrimeReport {
    match d {
        DeltaPrime::ValueA(v) => DeltaPrimeReport {
            kind: "ValueA",
            value: Some(rat::to_string(v)),
            epsilon: None,
        },
        DeltaPrime::PositiveRequired { epsilon } => DeltaPrimeReport {
            kind: "PositiveRequired",
            value: None,
            epsilon: Some(rat::to_string(epsilon)),
        },
        DeltaPrime::Zero => DeltaPrimeReport {
            kind: "Zero",
            value: Some("0/1".into()),
            epsilon: None,
        },
    }
}

fn theorem_report(t: &TheoremCheck) -> TheoremReport {
    TheoremReport {
        m2: rat::to_string(&t.m2),
        min_mc: rat::to_string(&t.min_mc),
        m2_exceeds_delta: t.m2_exceeds_delta,
        curve_condition: t.curve_condition,
        meets_epsilon: t.meets_epsilon,
        satisfied: t.satisfied,
        corollary_via_delta: bound_report(&t.corollary.via_delta),
        corollary_via_delta_y: t.corollary.via_delta_y.as_ref().map(bound_report),
    }
}

/// Full report for one input. Includes the hypothesis check when nef data is present.
pub fn analyze(input: &Input, options: &AnalyzeOptions) -> Result<SingularityReport> {
    let graph = input.graph.clone().validate()?;
    let inv = Invariants::compute(&graph, &input.boundary, options.epsilon.clone())?;
    let oracle = if options.oracle {
        let v = inv.cycles.z.sub(&inv.cycles.delta_b);
        let points = invariants::kkt_points_exhaustive(graph.form(), &v)?;
        Some(OracleReport {
            kkt_points: points.len(),
            agrees: points.len() == 1 && points[0] == inv.delta_min,
        })
    } else {
        None
    };
    let theorem = match &input.nef {
        Some(n) => Some(theorem_report(&invariants::check_with(&inv, &n.m2, &n.min_mc)?)),
        None => None,
    };
    let c = &inv.cycles;
    Ok(SingularityReport {
        format: FORMAT,
        input: input.to_json(),
        vertices: graph.vertices().iter().map(|v| v.id.clone()).collect(),
        z: coeffs(&c.z),
        delta: coeffs(&c.delta),
        bprime: coeffs(&c.bprime),
        delta_b: coeffs(&c.delta_b),
        pa_z: rat::to_string(&c.pa_z),
        delta_y: rat::to_string(&inv.delta_y),
        delta_b_y: rat::to_string(&inv.delta_b_y),
        delta_min: DeltaMinReport {
            value: rat::to_string(&inv.delta_min.value),
            x0: coeffs(&inv.delta_min.minimizer),
            active_set: inv.delta_min.active_set.clone(),
        },
        mu: inv.mu.as_ref().map(rat::to_string),
        classification: inv.classification.clone(),
        delta_value: rat::to_string(&inv.delta),
        delta_prime: delta_prime_report(&inv.delta_prime),
        oracle,
        theorem,
    })
}

impl SingularityReport {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let row = |name: &str, xs: &[String]| -> String {
            let cells: Vec<String> = self
                .vertices
                .iter()
                .zip(xs)
                .map(|(id, x)| format!("{id}={x}"))
                .collect();
            format!("{name:<10} {}\n", cells.join("  "))
        };
        let shape = match &self.classification.shape {
            Shape::ChainA { n, ends } => format!(
                "chain A_{n} (ends {}, {})",
                self.vertices[ends.0], self.vertices[ends.1]
            ),
            Shape::ForkD => "fork, type D".into(),
            Shape::ForkE => "fork, type E".into(),
            Shape::Other => "other".into(),
            Shape::Unsupported => "unsupported (positive genus or multiple intersection)".into(),
        };
        let cl = &self.classification;
        let _ = writeln!(out, "kind       {:?}", cl.kind);
        let _ = writeln!(out, "shape      {shape}");
        let _ = writeln!(
            out,
            "pair       log-terminal: {}, log-canonical: {}",
            cl.log_terminal, cl.log_canonical
        );
        out.push_str(&row("Z", &self.z));
        out.push_str(&row("Delta", &self.delta));
        out.push_str(&row("b'", &self.bprime));
        out.push_str(&row("Delta_B", &self.delta_b));
        let _ = writeln!(out, "p_a(Z)     {}", self.pa_z);
        let _ = writeln!(out, "delta_y    {}", self.delta_y);
        let _ = writeln!(out, "delta_B,y  {}", self.delta_b_y);
        let _ = writeln!(
            out,
            "delta_min  {}  (x0: {}; active set: {:?})",
            self.delta_min.value,
            self.delta_min.x0.join(", "),
            self.delta_min.active_set
        );
        let _ = writeln!(out, "mu         {}", self.mu.as_deref().unwrap_or("undefined (not log-terminal)"));
        let _ = writeln!(out, "delta      {}", self.delta_value);
        let dp = &self.delta_prime;
        let _ = match dp.kind {
            "PositiveRequired" => writeln!(
                out,
                "delta'     any positive number (reporting epsilon {})",
                dp.epsilon.as_deref().unwrap_or("?")
            ),
            _ => writeln!(out, "delta'     {}", dp.value.as_deref().unwrap_or("?")),
        };
        if let Some(o) = &self.oracle {
            let _ = writeln!(
                out,
                "oracle     {} KKT point(s), {}",
                o.kkt_points,
                if o.agrees { "agrees" } else { "DISAGREES" }
            );
        }
        if let Some(t) = &self.theorem {
            out.push_str(&t.render_text(&self.delta_value, dp));
        }
        out
    }
}

impl TheoremReport {
    pub fn render_text(&self, delta: &str, dp: &DeltaPrimeReport) -> String {
        let mut out = String::new();
        let mark = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "M^2 > delta        {} > {}: {}", self.m2, delta, mark(self.m2_exceeds_delta));
        let requirement = match dp.kind {
            "ValueA" => format!(">= {}", dp.value.as_deref().unwrap_or("?")),
            "PositiveRequired" => "> 0".to_string(),
            _ => ">= 0".to_string(),
        };
        let _ = writeln!(
            out,
            "M.C {requirement:<14} min M.C = {}: {}",
            self.min_mc,
            mark(self.curve_condition)
        );
        if let Some(e) = self.meets_epsilon {
            let _ = writeln!(
                out,
                "M.C >= epsilon     {}",
                mark(e)
            );
        }
        let c = &self.corollary_via_delta;
        let _ = writeln!(
            out,
            "scaled (delta)     M^2 > {}: {}, M.C >= {}: {}",
            c.m2_bound,
            mark(c.m2_ok),
            c.mc_bound,
            mark(c.mc_ok)
        );
        if let Some(c) = &self.corollary_via_delta_y {
            let _ = writeln!(
                out,
                "scaled (delta_y)   M^2 > {}: {}, M.C >= {}: {}",
                c.m2_bound,
                mark(c.m2_ok),
                c.mc_bound,
                mark(c.mc_ok)
            );
        }
        let _ = writeln!(
            out,
            "verdict            {}",
            if self.satisfied {
                "numerical hypotheses hold"
            } else {
                "numerical hypotheses do not hold"
            }
        );
        out
    }
}
