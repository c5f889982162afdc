//! Graph export and small formatting helpers.

use serde::Serialize;

use dsrg_core::verify;
use dsrg_core::DihedrantSpec;

/// Comma-joined residue list; empty list prints as "-" to keep TSV columns
/// visible.
pub(crate) fn join(v: &[usize]) -> String {
    if v.is_empty() {
        return "-".to_string();
    }
    v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

/// DOT digraph with the fixed vertex indexing `x^i ↦ i`, `x^i τ ↦ n+i`;
/// rotation vertices are labeled `x^i`, reflections `x^i.t`. One directed
/// edge per arc.
pub fn dot_graph(spec: &DihedrantSpec) -> String {
    let n = spec.n();
    let a = verify::adjacency_matrix(spec);
    let mut out = String::from("digraph dihedrant {\n");
    for i in 0..n {
        out.push_str(&format!("  v{i} [label=\"x^{i}\"];\n"));
    }
    for i in 0..n {
        out.push_str(&format!("  v{} [label=\"x^{i}.t\"];\n", n + i));
    }
    for g in 0..2 * n {
        for h in 0..2 * n {
            if a.entry(g, h) == 1 {
                out.push_str(&format!("  v{g} -> v{h};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct AdjacencyJson {
    n: usize,
    #[serde(rename = "X")]
    x: Vec<usize>,
    #[serde(rename = "Y")]
    y: Vec<usize>,
    vertices: usize,
    adjacency: Vec<Vec<usize>>,
}

/// JSON adjacency list: `adjacency[g]` holds the out-neighbors of vertex `g`
/// in the fixed indexing, ascending.
pub fn adjacency_json(spec: &DihedrantSpec) -> String {
    let a = verify::adjacency_matrix(spec);
    let dim = a.dim();
    let adjacency: Vec<Vec<usize>> =
        (0..dim).map(|g| (0..dim).filter(|&h| a.entry(g, h) == 1).collect()).collect();
    let doc = AdjacencyJson {
        n: spec.n(),
        x: spec.x().to_vec(),
        y: spec.y().to_vec(),
        vertices: dim,
        adjacency,
    };
    let mut body = serde_json::to_string(&doc).expect("serializable");
    body.push('\n');
    body
}
