//! Report builders. Each returns a JSON value and a plain-text rendering of
//! the same content. Exact quantities are always written as `num/den`.

use std::fmt::Write as _;

use polymap_core::curvature::{curvature, gauss_bonnet_sum, ScanReport};
use polymap_core::discharging::{Discharge, Violation};
use polymap_core::rational::{int, to_fraction_string};
use polymap_core::transfer::{NVerdict, StuckWitness, TransferabilityResult};
use polymap_core::validity::ValidityReport;
use polymap_core::{MapTopology, Rational};
use serde_json::{json, Value};

pub struct Report {
    pub json: Value,
    pub text: String,
}

fn frac(r: &Rational) -> String {
    to_fraction_string(r)
}

fn label(top: &MapTopology, v: usize) -> String {
    top.rotation_system().label(v).to_string()
}

pub fn topology_section(top: &MapTopology, surface: Option<&str>) -> Report {
    let chi = int(top.euler_characteristic());
    let json = json!({
        "surface_hint": surface,
        "vertices": top.num_vertices(),
        "edges": top.num_edges(),
        "faces": top.num_faces(),
        "euler_characteristic": frac(&chi),
        "orientable": top.is_orientable(),
    });
    let mut text = String::from("topology\n");
    if let Some(s) = surface {
        writeln!(text, "  surface hint: {s}").unwrap();
    }
    writeln!(
        text,
        "  V = {}  E = {}  F = {}  chi = {}  orientable = {}",
        top.num_vertices(),
        top.num_edges(),
        top.num_faces(),
        frac(&chi),
        top.is_orientable()
    )
    .unwrap();
    Report { json, text }
}

pub fn validity_section(report: &ValidityReport) -> Report {
    let witnesses: Vec<String> = report.witnesses.iter().map(|w| w.to_string()).collect();
    let json = json!({
        "simple": report.is_simple,
        "min_degree_ok": report.min_degree_ok,
        "closed_2cell": report.closed_2cell,
        "wheel_neighborhood": report.wheel_neighborhood,
        "three_connected": report.three_connected,
        "polyhedral": report.polyhedral,
        "witnesses": witnesses,
    });
    let mut text = String::from("validity\n");
    for (name, ok) in [
        ("simple", report.is_simple),
        ("min degree >= 3", report.min_degree_ok),
        ("closed 2-cell", report.closed_2cell),
        ("wheel neighborhood", report.wheel_neighborhood),
        ("3-connected", report.three_connected),
        ("polyhedral", report.polyhedral),
    ] {
        writeln!(text, "  {name}: {ok}").unwrap();
    }
    for w in &witnesses {
        writeln!(text, "  witness: {w}").unwrap();
    }
    Report { json, text }
}

pub fn curvature_section(top: &MapTopology) -> Report {
    let mut per_vertex = Vec::new();
    let mut text = String::from("curvature\n");
    for v in 0..top.num_vertices() {
        let phi = curvature(top, v).expect("vertex in range");
        let vertex_type = top.vertex_type(v).expect("vertex in range");
        per_vertex.push(json!({
            "vertex": label(top, v),
            "type": vertex_type,
            "phi": frac(&phi),
        }));
        writeln!(
            text,
            "  {}  {:?}  {}",
            label(top, v),
            vertex_type,
            frac(&phi)
        )
        .unwrap();
    }
    let total = gauss_bonnet_sum(top);
    let chi = int(top.euler_characteristic());
    writeln!(text, "  sum = {}  (chi = {})", frac(&total), frac(&chi)).unwrap();
    let json = json!({
        "per_vertex": per_vertex,
        "sum": frac(&total),
        "sum_equals_chi": total == chi,
    });
    Report { json, text }
}

pub fn light_section(top: &MapTopology, scan: &ScanReport) -> Report {
    let light: Vec<Value> = scan
        .light
        .iter()
        .map(|l| {
            json!({
                "vertex": label(top, l.vertex),
                "type": l.vertex_type,
                "row": l.row + 1,
                "pattern": l.pattern.to_string(),
            })
        })
        .collect();
    let json = json!({
        "verdict": scan.verdict.to_string(),
        "simple_polyhedral": scan.simple_polyhedral,
        "chi_nonpositive": scan.chi_nonpositive,
        "enough_vertices": scan.enough_vertices,
        "count": scan.light.len(),
        "vertices": light,
    });
    let mut text = format!(
        "light vertices\n  verdict: {}\n  count: {}\n",
        scan.verdict,
        scan.light.len()
    );
    for l in &scan.light {
        writeln!(
            text,
            "  {}  {:?}  row {} {}",
            label(top, l.vertex),
            l.vertex_type,
            l.row + 1,
            l.pattern
        )
        .unwrap();
    }
    Report { json, text }
}

fn violations(top: &MapTopology, list: &[Violation]) -> Vec<Value> {
    list.iter()
        .map(|v| {
            let element = match v.element {
                polymap_core::Element::Vertex(x) => format!("v{}", label(top, x)),
                polymap_core::Element::Face(f) => format!("f{f}"),
            };
            json!({ "element": element, "charge": frac(&v.charge), "bound": frac(&v.bound) })
        })
        .collect()
}

pub fn discharge_section(top: &MapTopology, run: &Discharge, with_ledger: bool) -> Report {
    let audit = &run.audit;
    let vertex_charges: Vec<String> = run.after_b.vertex_charge.iter().map(frac).collect();
    let face_charges: Vec<String> = run.after_b.face_charge.iter().map(frac).collect();
    let after_a_faces: Vec<String> = run.after_a.face_charge.iter().map(frac).collect();
    let mut json = json!({
        "total": frac(&run.after_b.total()),
        "after_a": { "face_charges": after_a_faces },
        "final": { "vertex_charges": vertex_charges, "face_charges": face_charges },
        "audit": {
            "face_violations_after_a": violations(top, &audit.face_violations_after_a),
            "vertex_violations_after_a": violations(top, &audit.vertex_violations_after_a),
            "vertex_violations_after_b": violations(top, &audit.vertex_violations_after_b),
            "light_vertices": audit.light_vertices,
            "context": audit.context(),
            "hard_failure": audit.hard_failure(),
        },
        "ledger_entries": run.ledger.len(),
    });
    if with_ledger {
        json["ledger"] = run
            .ledger
            .entries
            .iter()
            .map(|e| {
                json!({
                    "rule": e.rule.name(),
                    "source": e.source.to_string(),
                    "target": e.target.to_string(),
                    "amount": frac(&e.amount),
                })
            })
            .collect();
    }

    let mut text = String::from("discharge\n");
    writeln!(text, "  total charge: {}", frac(&run.after_b.total())).unwrap();
    writeln!(text, "  ledger entries: {}", run.ledger.len()).unwrap();
    for (name, list) in [
        (
            "face charges below bound after A",
            &audit.face_violations_after_a,
        ),
        (
            "negative vertex charges after A",
            &audit.vertex_violations_after_a,
        ),
        (
            "vertex charges below 1/21 after B",
            &audit.vertex_violations_after_b,
        ),
    ] {
        writeln!(text, "  {name}: {}", list.len()).unwrap();
    }
    writeln!(text, "  context: {}", audit.context()).unwrap();
    writeln!(text, "  hard failure: {}", audit.hard_failure()).unwrap();
    text.push_str("  final vertex charges\n");
    for (v, c) in run.after_b.vertex_charge.iter().enumerate() {
        writeln!(text, "    {}  {}", label(top, v), frac(c)).unwrap();
    }
    text.push_str("  final face charges\n");
    for (f, c) in run.after_b.face_charge.iter().enumerate() {
        writeln!(text, "    f{f} (deg {})  {}", top.face_degree(f), frac(c)).unwrap();
    }
    if with_ledger {
        text.push_str("ledger\n");
        text.push_str(&run.ledger.to_text());
    }
    Report { json, text }
}

fn verdict_json(n: usize, v: &NVerdict) -> Value {
    match v {
        NVerdict::Transferable { states } => {
            json!({ "n": n, "verdict": "transferable", "states": states })
        }
        NVerdict::NoPaths => json!({ "n": n, "verdict": "no_paths", "states": 0 }),
        NVerdict::Disconnected {
            states,
            components,
            sinks,
            sources,
        } => json!({
            "n": n,
            "verdict": "not_transferable",
            "states": states,
            "components": components,
            "sink_components": sinks,
            "source_components": sources,
        }),
        NVerdict::BudgetExceeded { budget } => {
            json!({ "n": n, "verdict": "budget_exceeded", "budget": budget })
        }
    }
}

fn verdict_text(n: usize, v: &NVerdict) -> String {
    match v {
        NVerdict::Transferable { states } => format!("n = {n}: transferable ({states} states)"),
        NVerdict::NoPaths => format!("n = {n}: no paths"),
        NVerdict::Disconnected {
            states,
            components,
            sinks,
            sources,
        } => format!(
            "n = {n}: not transferable ({states} states, {components} components, {sinks} sinks, {sources} sources)"
        ),
        NVerdict::BudgetExceeded { budget } => {
            format!("n = {n}: state budget {budget} exceeded")
        }
    }
}

pub fn single_n(n: usize, v: &NVerdict) -> Report {
    Report {
        json: verdict_json(n, v),
        text: verdict_text(n, v) + "\n",
    }
}

pub fn sweep(result: &TransferabilityResult) -> Report {
    let per_n: Vec<Value> = result
        .per_n
        .iter()
        .map(|(n, v)| verdict_json(*n, v))
        .collect();
    let json = json!({
        "value": result.value,
        "search_bound": result.search_bound,
        "truncated": result.truncated,
        "per_n": per_n,
    });
    let mut text = String::new();
    for (n, v) in &result.per_n {
        text.push_str(&verdict_text(*n, v));
        text.push('\n');
    }
    writeln!(
        text,
        "transferability: {} (searched n <= {}{})",
        result.value,
        result.search_bound,
        if result.truncated { ", truncated" } else { "" }
    )
    .unwrap();
    Report { json, text }
}

pub fn stuck(top: &MapTopology, n: usize, witness: Option<&StuckWitness>) -> Report {
    let labels = top.rotation_system().labels();
    match witness {
        Some(w) => {
            let path: Vec<String> = w
                .path
                .vertices()
                .iter()
                .map(|&v| labels[v].clone())
                .collect();
            let json = json!({
                "n": n,
                "found": true,
                "anchor": w.anchor.map(|a| labels[a].clone()),
                "path": path,
                "head": labels[w.path.head()].clone(),
            });
            let text = format!(
                "stuck {n}-path: {}\nhead {} has every neighbor on the path\n",
                w.path.to_string_with(Some(labels)),
                labels[w.path.head()]
            );
            Report { json, text }
        }
        None => Report {
            json: json!({ "n": n, "found": false }),
            text: format!("no stuck {n}-path found\n"),
        },
    }
}
