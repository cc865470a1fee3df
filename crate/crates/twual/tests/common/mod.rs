//! Shared fixtures: the published stabilizer pairs and self-trial table,
//! plus brute-force helpers kept independent of the library's canonical
//! forms.

use twual::{LabeledRibbonGraph, Permutation};

/// Self-fixing bouquets: (vertex sequence, gamma, mu).
pub const SELF_FIXED_BOUQUETS: &[(&str, &str, &str)] = &[
    ("[1, 2, 3, 1, 2, 3]", "1,d,d", "(1 2 3)"),
    ("[1, 2, 3, 4, 2, 5, 4, 1, 5, 3]", "td,dt,td,1,dt", "(3 5 4)"),
    (
        "[1, 2, 3, 4, 5, 6, 2, 4, 1, 5, 3, 6]",
        "tdt,1,tdt,td,d,tdt",
        "(1 6 2)(3 4 5)",
    ),
    (
        "[1, 2, 3, 4, 5, 6, 2, 7, 3, 5, 1, 4, 6, 7]",
        "tdt,td,d,dt,td,td,dt",
        "(1 6 3)",
    ),
];

/// Published self-trial non-self-dual table: (n, graph, alpha, seed index
/// into SELF_FIXED_BOUQUETS, sigma).
pub const SELF_TRIAL_TABLE: &[(usize, &str, &str, usize, &str)] = &[
    (3, "[1, -3, 2, 1, 2, -3]", "tdt,td,d", 0, "(1 2 3)"),
    (5, "[1, 4, 2, 3, -5, 2, 1, -5, 4, 3]", "tdt,td,tdt,tdt,d", 1, "(3 5 4)"),
    (5, "[-1, 2, 5, -3, 2, -4, -1, 5, -4, -3]", "t,td,tdt,tdt,d", 1, "(3 5 4)"),
    (5, "[-1, 4, 2, 3, -5, 2] [-1, -5, 4, 3]", "d,td,tdt,tdt,d", 1, "(3 5 4)"),
    (5, "[1, 4, 2, 1, 5, 4, -3] [2, 5, -3]", "tdt,dt,tdt,tdt,d", 1, "(3 5 4)"),
    (
        6,
        "[1, -4, -5, 3, -2] [1, -5, 6, 3, -4, -2, 6]",
        "td,t,tdt,tdt,td,tdt",
        2,
        "(1 6 2)(3 4 5)",
    ),
    (
        6,
        "[-1, 4, -5, -3, -2, 4, -3, 6, -2, -1, -5, 6]",
        "dt,tdt,tdt,tdt,td,d",
        2,
        "(1 6 2)(3 4 5)",
    ),
    (
        7,
        "[1, -5, -6, 4, -3, 7, -6, -2, 1, 4, -5, -3, -2, 7]",
        "tdt,tdt,td,td,tdt,tdt,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[-1, -5, 6, -2, -1, -4, -5, 3, -4, 6, -7, 3, -2, -7]",
        "dt,tdt,tdt,td,tdt,1,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[-1, -5, 6, -7, -3, -2, -7, -1, -4, -5, -3, -4, 6, -2]",
        "d,tdt,dt,td,tdt,d,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[1, -5, -6, 4, -3, 7, -6, 2, 7] [1, 4, -5, -3, 2]",
        "tdt,t,td,td,tdt,tdt,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[1, -5, 6, 4, -3, 2] [1, 4, -5, -3, 7, 6, 2, 7]",
        "td,t,t,td,tdt,dt,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[1, -2, 3, 4, -6, -7, 3, 5, 4, 1, 5, -6, -2, -7]",
        "t,t,1,td,tdt,t,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[-1, 5, -6, -4, 3, 7, -6, 2, 3, 5, -4, -1, 2, 7]",
        "tdt,d,td,td,tdt,tdt,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[1, 5, -6, 2, 3, 7, -6, -4, 3, 5, -4, 1, 2, 7]",
        "dt,d,tdt,td,tdt,1,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[-1, -2, 7] [-1, 4, 5, 3, 7, -6, 4, 3, -2, -6, 5]",
        "t,d,1,td,tdt,t,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[-1, -5, 6, 4, -5, 3, -2, 6, -7, 3, 4, -1, -2, -7]",
        "tdt,d,td,dt,tdt,tdt,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[1, 5, -6, 2, 3, 7, -6, 4, 1, 2, 7] [3, 5, 4]",
        "dt,d,tdt,1,tdt,1,td",
        3,
        "(1 6 3)",
    ),
    (
        7,
        "[-1, 5, 4, -1, -2, -7] [-2, -6, -7, 3, 4, -6, 5, 3]",
        "tdt,d,td,td,d,tdt,td",
        3,
        "(1 6 3)",
    ),
];

pub fn graph(text: &str) -> LabeledRibbonGraph {
    LabeledRibbonGraph::parse(text).expect("fixture graph parses")
}

/// All-bijections isomorphism oracle; deliberately avoids the library's
/// canonical forms.
pub fn brute_iso(a: &LabeledRibbonGraph, b: &LabeledRibbonGraph) -> Option<Permutation> {
    if a.edge_count() != b.edge_count() || a.vertex_count() != b.vertex_count() {
        return None;
    }
    Permutation::all(a.edge_count())
        .into_iter()
        .find(|pi| a.relabel(pi).labeled_eq(b))
}
