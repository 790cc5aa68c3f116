//! Text and JSON renderings of results.

use std::fmt::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde_json::{json, Map, Value};

use monocount_core::boards::{FreeProfile, PhiTable};
use monocount_core::hilbert::{HilbertClosedForm, HilbertSeries};
use monocount_core::walks::{OracleRow, WalkCountReport};

/// A JSON number holding an integer of any size.
pub fn big(v: &impl std::fmt::Display) -> Value {
    serde_json::from_str(&v.to_string()).expect("integers are JSON numbers")
}

/// Ascending coefficients: integers as numbers, other rationals as `"p/q"`.
pub fn closed_form_json(c: &HilbertClosedForm) -> Value {
    let poly: Vec<Value> = c
        .polynomial()
        .iter()
        .map(|q| {
            if q.denom().is_one() {
                big(q.numer())
            } else {
                Value::String(format!("{}/{}", q.numer(), q.denom()))
            }
        })
        .collect();
    let exceptions: Map<String, Value> = c.exceptions().iter().map(|(d, v)| (d.to_string(), big(v))).collect();
    json!({
        "polynomial": poly,
        "display": c.display_polynomial().to_string(),
        "exceptions": exceptions,
        "stable_from": c.stable_from(),
        "dimension": c.dimension(),
    })
}

/// Univariate series as a numerator coefficient array over `(1-t)^D`.
pub fn series_json(s: &HilbertSeries) -> Value {
    match s.unit_denominator_exponent() {
        Some(d) => json!({
            "numerator": s.numerator().univariate_coeffs().iter().map(big).collect::<Vec<_>>(),
            "denominator_exponent": d,
            "display": s.to_string(),
        }),
        None => json!({ "display": s.to_string() }),
    }
}

/// Piecewise layout with a tall brace:
///
/// ```text
///        ⎧ 1              if d = 0
/// f(d) = ⎨ 8              if d = 1
///        ⎩ 7d^2 + 4d + 1  if d >= 2
/// ```
pub fn piecewise(name: &str, c: &HilbertClosedForm) -> String {
    let mut rows: Vec<(String, String)> = c
        .exceptions()
        .iter()
        .map(|(d, v)| (v.to_string(), format!("if d = {d}")))
        .collect();
    rows.push((
        c.display_polynomial().to_string(),
        format!("if d >= {}", c.stable_from()),
    ));
    let head = format!("{name} = ");
    let pad = " ".repeat(head.chars().count());
    let width = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    let mid = rows.len() / 2;
    let n = rows.len();
    let mut out = String::new();
    for (i, (value, cond)) in rows.iter().enumerate() {
        let brace = match (n, i) {
            (1, _) => "{",
            (_, 0) => "⎧",
            (_, i) if i == n - 1 => "⎩",
            (_, i) if i == mid => "⎨",
            _ => "⎪",
        };
        let lead = if i == mid { &head } else { &pad };
        let _ = writeln!(out, "{lead}{brace} {value:<width$}  {cond}");
    }
    out
}

pub fn walk_json(r: &WalkCountReport) -> Value {
    json!({
        "steps": { "dimension": r.steps.dimension(), "steps": r.steps.steps() },
        "orders": {
            "kernel": r.kernel.kernel.order().name(),
            "g": r.g_basis.order().name(),
            "homogenized": r.homogeneous.homogenized.order().name(),
        },
        "bases": {
            "presentation": r.kernel.presentation_basis.len(),
            "eliminated": r.kernel.eliminated.len(),
            "kernel": r.kernel.kernel.len(),
            "g_kernel": r.g_basis.len(),
            "homogeneous": r.homogeneous.basis.len(),
        },
        "f": { "series": series_json(&r.f_series), "closed_form": closed_form_json(&r.f_closed) },
        "g": { "series": series_json(&r.g_series), "closed_form": closed_form_json(&r.g_closed) },
        "oracle": oracle_json(&r.oracle_prefix),
        "macaulay": r.homogeneous_dims,
        "cross_check_limit": r.cross_check_limit,
    })
}

pub fn walk_pretty(r: &WalkCountReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "step set: {} steps in dimension {}",
        r.steps.len(),
        r.steps.dimension()
    );
    let _ = writeln!(
        out,
        "bases: kernel {} ({}), g-order kernel {} ({}), H {}",
        r.kernel.kernel.len(),
        r.kernel.kernel.order().name(),
        r.g_basis.len(),
        r.g_basis.order().name(),
        r.homogeneous.basis.len()
    );
    let _ = writeln!(out, "HS(S/in H)  = {}", r.f_series);
    let _ = writeln!(out, "HS(S/in κ)  = {}", r.g_series);
    let _ = writeln!(out);
    out.push_str(&piecewise("f(d)", &r.f_closed));
    let _ = writeln!(out);
    out.push_str(&piecewise("g(d)", &r.g_closed));
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "checked against the sumset oracle for d <= {}; dim (S/H)_d = dim (S/in H)_d for d <= {}",
        r.cross_check_limit, r.cross_check_limit
    );
    out
}

pub fn oracle_json(rows: &[OracleRow]) -> Value {
    Value::Array(rows.iter().map(|r| json!({ "d": r.d, "f": r.f, "g": r.g })).collect())
}

pub fn oracle_csv(rows: &[OracleRow]) -> String {
    let mut out = String::from("d,f,g\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{}", r.d, r.f, r.g);
    }
    out
}

pub fn oracle_pretty(rows: &[OracleRow]) -> String {
    let mut out = format!("{:>4}  {:>12}  {:>12}\n", "d", "f(d)", "g(d)");
    for r in rows {
        let _ = writeln!(out, "{:>4}  {:>12}  {:>12}", r.d, r.f, r.g);
    }
    out
}

pub fn profile_csv(profiles: &[FreeProfile]) -> String {
    let mut out = String::from("k,s,count\n");
    for p in profiles {
        for (s, c) in p.iter() {
            let _ = writeln!(out, "{},{s},{c}", p.k());
        }
    }
    out
}

pub fn profile_json(profiles: &[FreeProfile]) -> Value {
    Value::Array(
        profiles
            .iter()
            .map(|p| {
                let counts: Map<String, Value> = p.iter().map(|(s, c)| (s.to_string(), json!(c))).collect();
                json!({ "k": p.k(), "max_free": p.max_free(), "counts": counts })
            })
            .collect(),
    )
}

pub fn profile_pretty(profiles: &[FreeProfile]) -> String {
    let mut out = String::new();
    for p in profiles {
        let entries: Vec<String> = p.iter().rev().map(|(s, c)| format!("{s}: {c}")).collect();
        let _ = writeln!(out, "k = {}: {{{}}}", p.k(), entries.join(", "));
    }
    out
}

/// Table layouts for `Phi(k, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Matrix,
    Json,
    Pretty,
}

/// What the queens command reports beyond the table itself.
#[derive(Debug, Clone)]
pub struct TableContext {
    pub description: String,
    pub placements: usize,
    pub targets: usize,
    pub umax: usize,
    pub include_hf: bool,
}

fn done_rows(t: &PhiTable) -> impl Iterator<Item = usize> + '_ {
    let kmin = t.phi.kmin();
    kmin..kmin + t.rows_done
}

/// Columns shown for row `k`: every `u` up to `mu(k)`, capped by `umax`.
fn row_top(t: &PhiTable, k: usize, umax: usize) -> Option<usize> {
    t.mu(k).map(|m| m.min(umax))
}

pub fn phi_table(t: &PhiTable, ctx: &TableContext, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => phi_csv(t, ctx),
        TableFormat::Matrix => phi_matrix(t, ctx),
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(&phi_json(t, ctx)).expect("serializable");
            s.push('\n');
            s
        }
        TableFormat::Pretty => phi_pretty(t, ctx),
    }
}

fn phi_csv(t: &PhiTable, ctx: &TableContext) -> String {
    let mut out = String::from(if ctx.include_hf { "k,u,phi,hf\n" } else { "k,u,phi\n" });
    for k in done_rows(t) {
        let Some(top) = row_top(t, k, ctx.umax) else { continue };
        for u in 0..=top {
            let _ = write!(out, "{k},{u},{}", t.phi.get(k, u));
            if ctx.include_hf {
                let _ = write!(out, ",{}", t.hf.get(k, u));
            }
            out.push('\n');
        }
    }
    out
}

fn phi_matrix(t: &PhiTable, ctx: &TableContext) -> String {
    let top = done_rows(t).filter_map(|k| row_top(t, k, ctx.umax)).max().unwrap_or(0);
    let mut out = String::from("k\\u");
    for u in 0..=top {
        let _ = write!(out, " {u}");
    }
    out.push('\n');
    let zero = BigUint::default();
    for k in done_rows(t) {
        let _ = write!(out, "{k}");
        for u in 0..=top {
            let v = if u <= ctx.umax { t.phi.get(k, u) } else { &zero };
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

fn phi_json(t: &PhiTable, ctx: &TableContext) -> Value {
    let rows: Vec<Value> = done_rows(t)
        .map(|k| {
            let top = row_top(t, k, ctx.umax);
            let cells = |table: &monocount_core::boards::CountTable| -> Vec<Value> {
                top.map_or(Vec::new(), |top| (0..=top).map(|u| big(table.get(k, u))).collect())
            };
            let mut row = json!({ "k": k, "mu": t.mu(k), "phi": cells(&t.phi) });
            if ctx.include_hf {
                row["hf"] = Value::Array(cells(&t.hf));
            }
            row
        })
        .collect();
    json!({
        "description": ctx.description,
        "placements": ctx.placements,
        "targets": ctx.targets,
        "hf_source": t.hf_source.name(),
        "complete": t.is_complete(),
        "rows": rows,
    })
}

fn phi_pretty(t: &PhiTable, ctx: &TableContext) -> String {
    let check = if t.rows_checked > 0 {
        format!("inversion checked against {}", t.hf_source.name())
    } else {
        "inversion not run".to_string()
    };
    let mut out = format!(
        "{}: {} placements, {} targets; {check}\n",
        ctx.description, ctx.placements, ctx.targets
    );
    for k in done_rows(t) {
        out.push('\n');
        let Some(mu) = t.mu(k) else {
            let _ = writeln!(out, "k = {k}: no placements");
            continue;
        };
        let _ = writeln!(out, "mu({k}) = {mu}");
        let _ = writeln!(out, "Phi({k}, {mu}) = {}", t.phi.get(k, mu));
        let top = mu.min(ctx.umax);
        let width = (0..=top)
            .map(|u| t.phi.get(k, u).to_string().len())
            .max()
            .unwrap_or(1)
            .max(8);
        if ctx.include_hf {
            let _ = writeln!(out, "{:>5}  {:>width$}  HF(k,u)", "u", "Phi(k,u)");
        } else {
            let _ = writeln!(out, "{:>5}  {:>width$}", "u", "Phi(k,u)");
        }
        for u in 0..=top {
            let _ = write!(out, "{u:>5}  {:>width$}", t.phi.get(k, u).to_string());
            if ctx.include_hf {
                let _ = write!(out, "  {}", t.hf.get(k, u));
            }
            out.push('\n');
        }
    }
    if !t.is_complete() {
        let _ = writeln!(out, "\npartial: {} of {} rows finished", t.rows_done, t.mu.len());
    }
    out
}

/// Standard-graded Hilbert data for the `hilbert` command.
pub fn hilbert_pretty(series: &HilbertSeries, closed: Option<&HilbertClosedForm>, values: &[BigInt]) -> String {
    let mut out = format!("HS = {series}\n");
    if let Some(c) = closed {
        let _ = writeln!(out, "HP(d) = {} for d >= {}", c.display_polynomial(), c.stable_from());
        out.push('\n');
        out.push_str(&piecewise("HF(d)", c));
    }
    if !values.is_empty() {
        out.push('\n');
        let _ = writeln!(out, "{:>4}  HF(d)", "d");
        for (d, v) in values.iter().enumerate() {
            let _ = writeln!(out, "{d:>4}  {v}");
        }
    }
    out
}

pub fn hilbert_json(series: &HilbertSeries, closed: Option<&HilbertClosedForm>, values: &[BigInt]) -> Value {
    json!({
        "series": series_json(series),
        "closed_form": closed.map(closed_form_json),
        "values": values.iter().map(big).collect::<Vec<_>>(),
    })
}
