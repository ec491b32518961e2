//! Built-in instances: small named graphs, the planar gadgets and the
//! Steinberg counterexample.
//!
//! Every instance also ships as JSON under `catalog/` in the crate root;
//! `catalog_files_are_current` keeps those files in sync with the builders.

mod gadgets;
mod steinberg;

pub use gadgets::{gadget, gadget_with_reading, Fig4Reading, GadgetId, GadgetSpec, Side};
pub use steinberg::{mirror_colour, steinberg_instance, SteinbergInstance, G2_INTERNAL, NAMED};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};

/// Ids accepted by [`graph_by_id`] and the `catalog:` scheme.
pub const IDS: &[(&str, &str)] = &[
    ("k1", "single vertex"),
    ("k2", "single edge"),
    ("k3", "triangle"),
    ("k4", "complete graph on 4 vertices"),
    ("c4", "4-cycle"),
    ("c5", "5-cycle"),
    ("c7", "7-cycle"),
    ("p5", "path with 5 vertices"),
    ("k13", "star K_{1,3}"),
    ("k22", "complete bipartite K_{2,2}"),
    ("k23", "complete bipartite K_{2,3}"),
    ("k24", "complete bipartite K_{2,4}"),
    ("g111", "G_{1,1,1} (a triangle)"),
    ("g112", "G_{1,1,2} (a 5-cycle)"),
    ("g211", "G_{2,1,1} (K_4)"),
    ("g222", "G_{2,2,2}"),
    ("g643", "G_{6,4,3}"),
    ("fig2", "planar gadget, lists of size 4m + floor((m-1)/3)"),
    (
        "fig3",
        "planar gadget without 4-cycles, lists of size 3m + floor((m-1)/2)",
    ),
    (
        "fig4",
        "planar gadget without 4- and 5-cycles, lists of size 3m + floor((m-1)/12)",
    ),
    (
        "steinberg",
        "planar graph without 4- and 5-cycles that is not 3-colourable",
    ),
];

pub fn graph_by_id(id: &str) -> Result<Graph> {
    let g = match id {
        "k1" => graph::complete(1),
        "k2" => graph::complete(2),
        "k3" => graph::complete(3),
        "k4" => graph::complete(4),
        "c4" => graph::build_cycle(4)?,
        "c5" => graph::build_cycle(5)?,
        "c7" => graph::build_cycle(7)?,
        "p5" => graph::path(5),
        "k13" => graph::complete_bipartite(1, 3),
        "k22" => graph::complete_bipartite(2, 2),
        "k23" => graph::complete_bipartite(2, 3),
        "k24" => graph::complete_bipartite(2, 4),
        id if gnmk_params(id).is_some() => {
            let (n, m, k) = gnmk_params(id).expect("checked");
            graph::build_gnmk(n, m, k)?.graph
        }
        "fig2" | "fig3" | "fig4" => gadget(GadgetId::parse(id)?, 1)?.graph,
        "steinberg" => steinberg_instance().graph,
        other => return Err(Error::UnknownId(other.to_string())),
    };
    Ok(g)
}

/// `(n, m, k)` for the catalog's `G_{n,m,k}` instances.
pub fn gnmk_params(id: &str) -> Option<(usize, usize, usize)> {
    match id {
        "g111" => Some((1, 1, 1)),
        "g112" => Some((1, 1, 2)),
        "g211" => Some((2, 1, 1)),
        "g222" => Some((2, 2, 2)),
        "g643" => Some((6, 4, 3)),
        _ => None,
    }
}

/// JSON documents shipped for an id: `(file name, contents)`.
pub fn json_files(id: &str) -> Result<Vec<(String, String)>> {
    let mut out = vec![(format!("{id}.json"), pretty(&graph_by_id(id)?.to_json()))];
    match id {
        "fig2" | "fig3" | "fig4" => {
            let spec = gadget(GadgetId::parse(id)?, 1)?;
            out.push((format!("{id}.lists.json"), pretty(&spec.lists.to_json())));
        }
        "steinberg" => {
            out.push((
                "steinberg.partial.json".into(),
                pretty(&steinberg_instance().partial.to_json()),
            ));
        }
        _ => {}
    }
    Ok(out)
}

fn pretty(s: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(s).expect("valid json");
    let mut out = serde_json::to_string_pretty(&v).expect("serializes");
    out.push('\n');
    out
}
