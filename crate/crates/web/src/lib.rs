//! JSON-returning entry points for the browser page in `www/`.

use arrgraph::actions::{
    conjecture_candidate_group, find_block_violation, induce_action, quotient_action, ActionOnSets,
    BlockSystem,
};
use arrgraph::arrangement::{
    build_arrangement_graph, build_cayley_graph, candidate_aut_generators, h_vertex_map,
};
use arrgraph::aut::{automorphism_group, DEFAULT_NODE_BUDGET};
use arrgraph::connection::{ConnectionKind, ConnectionSet};
use arrgraph::error::{Error, Result};
use arrgraph::graph::Graph;
use arrgraph::indsets::DeltaFamily;
use arrgraph::schreier::StabilizerChain;
use arrgraph::tuple::tuple_count;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest graph the page will build.
pub const VERTEX_LIMIT: usize = 720;

fn respond(result: Result<Value>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn build(family: &str, n: usize, k: usize, r: usize, set: &str) -> Result<Graph> {
    match family {
        "arrangement" => build_arrangement_graph(n, k, r, VERTEX_LIMIT),
        "cayley" => {
            let kind: ConnectionKind = set.parse()?;
            build_cayley_graph(&ConnectionSet::new(n, kind)?, VERTEX_LIMIT)
        }
        other => Err(Error::InvalidParameters(format!(
            "unknown family {other:?}"
        ))),
    }
}

/// Vertices, labels and edges of `A(n,k,r)` (`family = "arrangement"`) or
/// `Cay(S_n, set)` (`family = "cayley"`).
#[wasm_bindgen]
pub fn graph(family: &str, n: u32, k: u32, r: u32, set: &str) -> String {
    respond((|| {
        let g = build(family, n as usize, k as usize, r as usize, set)?;
        let labels: Vec<String> = (0..g.vertex_count())
            .map(|v| g.labels().render(v))
            .collect();
        Ok(json!({
            "vertex_count": g.vertex_count(),
            "edge_count": g.edge_count(),
            "degree": g.regular_degree(),
            "components": g.components().len(),
            "labels": labels,
            "edges": g.edges(),
        }))
    })())
}

fn expected_order(
    family: &str,
    n: usize,
    k: usize,
    r: usize,
    set: &str,
) -> Result<Option<(u128, &'static str)>> {
    let f = tuple_count(n, n)?;
    Ok(match family {
        "arrangement" if n > 2 && r == k && k < n => Some((f * tuple_count(k, k)?, "n!k!")),
        "arrangement" if n > 2 && k == n && (r == n || r == 2) => Some((2 * f * f, "2(n!)^2")),
        "cayley" if n > 2 => match set.parse::<ConnectionKind>()? {
            ConnectionKind::Transpositions | ConnectionKind::Derangements => {
                Some((2 * f * f, "2(n!)^2"))
            }
            ConnectionKind::Fixed(j) if j == 0 || j + 2 == n => Some((2 * f * f, "2(n!)^2")),
            _ => None,
        },
        _ => None,
    })
}

/// Automorphism group order next to the order of the known candidate
/// subgroup (`P`, `Q` and `h` maps for arrangement graphs; right
/// multiplication, conjugation and inversion for Cayley graphs).
#[wasm_bindgen]
pub fn symmetry(family: &str, n: u32, k: u32, r: u32, set: &str) -> String {
    let (n, k, r) = (n as usize, k as usize, r as usize);
    respond((|| {
        let g = build(family, n, k, r, set)?;
        let aut = automorphism_group(&g, DEFAULT_NODE_BUDGET)?;
        let candidate = match family {
            "arrangement" => Some(candidate_aut_generators(&g)?),
            _ if n >= 3 => Some(conjecture_candidate_group(n)?),
            _ => None,
        };
        let candidate = match candidate {
            Some(gens) => {
                let order = StabilizerChain::new(g.vertex_count(), &gens)?.order()?;
                json!({
                    "generators": gens.len(),
                    "order": order.to_string(),
                    "contained": gens.iter().all(|x| aut.chain.contains(x)),
                })
            }
            None => Value::Null,
        };
        let expected = expected_order(family, n, k, r, set)?
            .map(|(v, formula)| json!({ "order": v.to_string(), "formula": formula }));
        Ok(json!({
            "aut_order": aut.order.to_string(),
            "generators": aut.generators.len(),
            "search_nodes": aut.nodes,
            "candidate": candidate,
            "expected": expected,
        }))
    })())
}

fn system_json(action: &ActionOnSets, system: &BlockSystem, family: &DeltaFamily) -> Result<Value> {
    let label = |i: usize| family.label(i);
    let violation = find_block_violation(action, system)?.map(|v| {
        json!({
            "block": system.labeled(label)[v.block],
            "image": v.image.iter().map(|&i| label(i)).collect::<Vec<_>>(),
        })
    });
    Ok(json!({
        "blocks": system.labeled(label),
        "is_block_system": violation.is_none(),
        "violation": violation,
    }))
}

/// The sets `Delta_ij` of `A(n,k,k)` with the row and column partitions
/// checked against `Aut(A(n,k,k))`, plus the map `h` when `k = n`.
#[wasm_bindgen]
pub fn delta_blocks(n: u32, k: u32) -> String {
    let (n, k) = (n as usize, k as usize);
    respond((|| {
        let g = build_arrangement_graph(n, k, k, VERTEX_LIMIT)?;
        let aut = automorphism_group(&g, DEFAULT_NODE_BUDGET)?;
        let family = DeltaFamily::new(n, k)?;
        let action = induce_action(&aut.generators, family.sets())?;
        let rows = BlockSystem::new(family.rows());
        let columns = BlockSystem::new(family.columns());
        let quotient = match quotient_action(&action, &rows) {
            Ok(q) => {
                json!({ "order": q.order.to_string(), "kernel_order": q.kernel_order.to_string() })
            }
            Err(Error::NotBlockSystem(_)) => Value::Null,
            Err(e) => return Err(e),
        };
        let under_h = if k == n {
            let h = induce_action(&[h_vertex_map(n)?], family.sets())?;
            json!({
                "rows": system_json(&h, &rows, &family)?,
                "columns": system_json(&h, &columns, &family)?,
            })
        } else {
            Value::Null
        };
        let sets: Vec<Value> = (0..family.sets().len())
            .map(|i| json!({ "label": family.label(i), "vertices": family.sets()[i] }))
            .collect();
        Ok(json!({
            "sets": sets,
            "rows": system_json(&action, &rows, &family)?,
            "columns": system_json(&action, &columns, &family)?,
            "quotient_by_rows": quotient,
            "under_h": under_h,
        }))
    })())
}
