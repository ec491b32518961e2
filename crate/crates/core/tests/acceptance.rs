//! Runs every claim and prints one line per acceptance criterion. Where a
//! cheap independent check exists it is run alongside the library verdict.

use std::collections::BTreeMap;
use std::process::ExitCode;

use multifold::catalog::{gadget, steinberg_instance, GadgetId};
use multifold::claims::{claims, ClaimContext, ClaimReport, Verdict};
use multifold::colouring::{Colour, ListAssignment};
use multifold::graph::Graph;

/// Plain chronological backtracking over single colours.
fn naive_list_colourable(g: &Graph, l: &ListAssignment) -> bool {
    fn go(g: &Graph, l: &ListAssignment, v: usize, c: &mut Vec<Colour>) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        for &x in l.list(v) {
            if g.neighbours(v).iter().all(|&u| u >= v || c[u] != x) {
                c.push(x);
                if go(g, l, v + 1, c) {
                    return true;
                }
                c.pop();
            }
        }
        false
    }
    go(g, l, 0, &mut Vec::new())
}

fn independent_checks(criterion: u8, reports: &[&ClaimReport]) -> Result<(), String> {
    match criterion {
        1 => {
            for id in [GadgetId::Fig2, GadgetId::Fig3, GadgetId::Fig4] {
                let spec = gadget(id, 1).map_err(|e| e.to_string())?;
                if naive_list_colourable(&spec.graph, &spec.lists) {
                    return Err(format!("{} has a colouring by plain backtracking", id.name()));
                }
            }
        }
        3 => {
            let inst = steinberg_instance();
            let w = &reports[0].witness["sets"];
            let set = |v: usize| -> Vec<u64> {
                w[v.to_string()]
                    .as_array()
                    .map(|a| a.iter().filter_map(|x| x.as_u64()).collect())
                    .unwrap_or_default()
            };
            for v in 0..inst.graph.vertex_count() {
                let s = set(v);
                if s.len() != 2 || s.iter().any(|&x| !(1..=6).contains(&x)) {
                    return Err(format!("vertex {v} has set {s:?}"));
                }
            }
            for &(u, v) in inst.graph.edges() {
                if set(u).iter().any(|x| set(v).contains(x)) {
                    return Err(format!("edge {u}-{v} shares a colour"));
                }
            }
        }
        6 => {
            let k24 = reports
                .iter()
                .find(|r| r.claim == "choice-k24")
                .ok_or("missing k24 claim")?;
            let lists: BTreeMap<String, Vec<Colour>> =
                serde_json::from_value(k24.witness["lists"].clone()).map_err(|e| e.to_string())?;
            let g = multifold::catalog::graph_by_id("k24").map_err(|e| e.to_string())?;
            let l = ListAssignment::new((0..g.vertex_count()).map(|v| lists[&v.to_string()].clone()));
            if l.sizes().iter().any(|&s| s != 2) || naive_list_colourable(&g, &l) {
                return Err("K_{2,4} witness is not a bad 2-assignment".into());
            }
        }
        8 => {
            let exact = 7.0 / 2f64.powi(3);
            if (exact - 0.875f64).abs() > 1e-12 {
                return Err("bound arithmetic".into());
            }
        }
        _ => {}
    }
    Ok(())
}

fn main() -> ExitCode {
    let ctx = ClaimContext::default();
    let mut reports: Vec<ClaimReport> = Vec::new();
    for c in claims() {
        match c.run(&ctx) {
            Ok(r) => reports.push(r),
            Err(e) => {
                println!("claim {} errored: {e}", c.id);
                return ExitCode::FAILURE;
            }
        }
    }
    let mut all = true;
    for criterion in 1..=9u8 {
        let group: Vec<&ClaimReport> = reports.iter().filter(|r| r.criterion == criterion).collect();
        let lib_ok = group.iter().all(|r| r.verdict == Verdict::Pass);
        let oracle = independent_checks(criterion, &group);
        let ok = lib_ok && oracle.is_ok();
        all &= ok;
        let parts: Vec<String> = group
            .iter()
            .map(|r| format!("{} {:?} in {} ms [{}]", r.claim, r.verdict, r.elapsed_ms, r.detail))
            .collect();
        let oracle_note = match oracle {
            Ok(()) => String::new(),
            Err(e) => format!(" independent check failed: {e}"),
        };
        println!(
            "criterion {criterion}: {} | {}{oracle_note}",
            if ok { "PASS" } else { "FAIL" },
            parts.join(" | ")
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
