//! 4-regular properly 4-edge-colored encoding of a ribbon graph.
//!
//! Every edge of the graph contributes four nodes (two per edge-end: the
//! corner met first and the corner met second when walking the vertex
//! boundary). Three perfect matchings — red, green, blue — live inside each
//! edge's 4-clique; the yellow matching joins consecutive edge-ends around
//! each vertex and never changes. Counting bicolored cycles recovers the
//! graph's topology:
//!
//! * red-yellow cycles  = vertices
//! * red-blue cycles    = edges
//! * yellow-blue cycles = faces
//!
//! Edge operations act by permuting the colors within one edge's clique:
//! the partial dual swaps red and blue, the twist swaps blue and green.

use std::fmt;

use crate::edgeop::EdgeOp;
use crate::graph::LabeledRibbonGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Red,
    Green,
    Blue,
    Yellow,
}

/// The three perfect matchings of a 4-node clique, on local node indices
/// {0: first corner of end a, 1: second of a, 2: first of b, 3: second of b}.
///
/// `ENDS` pairs the two corners of each end, `PARA` runs along an untwisted
/// ribbon's sides (second corner of one end to first corner of the other),
/// `CROSS` runs along a twisted ribbon's sides.
const MATCHING: [[usize; 4]; 3] = [
    [1, 0, 3, 2], // ENDS
    [3, 2, 1, 0], // PARA
    [2, 3, 0, 1], // CROSS
];
const ENDS: usize = 0;
const PARA: usize = 1;
const CROSS: usize = 2;

/// Which matching each local pair belongs to; indexed by the two local nodes.
const MATCH_OF: [[usize; 4]; 4] = [
    [usize::MAX, ENDS, CROSS, PARA],
    [ENDS, usize::MAX, PARA, CROSS],
    [CROSS, PARA, usize::MAX, ENDS],
    [PARA, CROSS, ENDS, usize::MAX],
];

/// Color permutation of {red, green, blue} realized by each op, as the map
/// applied to the color assignment (rightmost letter of the word first).
const COLOR_PERM: [[usize; 3]; 6] = [
    [0, 1, 2], // 1
    [0, 2, 1], // t: swap blue/green
    [2, 1, 0], // d: swap red/blue
    [2, 0, 1], // td
    [1, 2, 0], // dt
    [1, 0, 2], // tdt
];

/// Matchings assigned to (red, green, blue) for an edge whose accumulated op
/// is `g`, indexed by `[twisted][g]`.
pub(crate) const ASSIGN: [[[usize; 3]; 6]; 2] = build_assign();

const fn build_assign() -> [[[usize; 3]; 6]; 2] {
    // Untwisted start: red = ENDS, green = CROSS, blue = PARA.
    // Twisted start:   red = ENDS, green = PARA, blue = CROSS.
    let base = [[ENDS, CROSS, PARA], [ENDS, PARA, CROSS]];
    let mut out = [[[0usize; 3]; 6]; 2];
    let mut t = 0;
    while t < 2 {
        let mut g = 0;
        while g < 6 {
            let mut c = 0;
            while c < 3 {
                out[t][g][c] = base[t][COLOR_PERM[g][c]];
                c += 1;
            }
            g += 1;
        }
        t += 1;
    }
    out
}

/// Edge op whose assignment puts the given matchings on red and blue, for an
/// untwisted base edge; `usize::MAX` marks impossible (equal) pairs.
pub(crate) const OP_FROM_RED_BLUE: [[usize; 3]; 3] = build_op_from_red_blue();

const fn build_op_from_red_blue() -> [[usize; 3]; 3] {
    let mut out = [[usize::MAX; 3]; 3];
    let mut g = 0;
    while g < 6 {
        let a = ASSIGN[0][g];
        out[a[0]][a[2]] = g;
        g += 1;
    }
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct Jewel {
    n: usize,
    yellow: Vec<usize>,
    base_twist: Vec<bool>,
    op: Vec<EdgeOp>,
}

impl Jewel {
    pub fn from_graph(g: &LabeledRibbonGraph) -> Jewel {
        let n = g.edge_count();
        let mut yellow = vec![usize::MAX; 4 * n];
        let mut seen_once = vec![false; n];
        for seq in g.vertices() {
            if seq.is_empty() {
                continue;
            }
            // Corner ids for each dart in this vertex's cyclic order.
            let corners: Vec<(usize, usize)> = seq
                .iter()
                .map(|&t| {
                    let e = t.unsigned_abs() as usize - 1;
                    let base = 4 * e + if seen_once[e] { 2 } else { 0 };
                    seen_once[e] = true;
                    (base, base + 1) // (first corner, second corner)
                })
                .collect();
            let m = corners.len();
            for i in 0..m {
                let from = corners[i].1;
                let to = corners[(i + 1) % m].0;
                yellow[from] = to;
                yellow[to] = from;
            }
        }
        let base_twist = (1..=n).map(|e| g.twisted(e)).collect();
        Jewel { n, yellow, base_twist, op: vec![EdgeOp::Identity; n] }
    }

    pub fn node_count(&self) -> usize {
        4 * self.n
    }

    pub fn edge_count(&self) -> usize {
        self.n
    }

    /// Partner of `node` in the given color's matching.
    #[inline]
    pub fn partner(&self, color: Color, node: usize) -> usize {
        match color {
            Color::Yellow => self.yellow[node],
            _ => {
                let e = node / 4;
                let assign =
                    ASSIGN[usize::from(self.base_twist[e])][self.op[e] as usize];
                let m = match color {
                    Color::Red => assign[0],
                    Color::Green => assign[1],
                    Color::Blue => assign[2],
                    Color::Yellow => unreachable!(),
                };
                4 * e + MATCHING[m][node % 4]
            }
        }
    }

    /// Apply `op` to one edge's colors (1-based label), composing with any
    /// previously applied operations.
    pub fn recolor_edge(&mut self, e: usize, op: EdgeOp) {
        assert!(e >= 1 && e <= self.n, "edge label {e} out of range 1..={}", self.n);
        self.op[e - 1] = op.mul(self.op[e - 1]);
    }

    /// Number of cycles in the union of two color matchings.
    pub fn color_components(&self, c1: Color, c2: Color) -> usize {
        let total = self.node_count();
        let mut visited = vec![false; total];
        let mut cycles = 0;
        for start in 0..total {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut cur = start;
            let mut use_first = true;
            loop {
                visited[cur] = true;
                cur = self.partner(if use_first { c1 } else { c2 }, cur);
                use_first = !use_first;
                if cur == start && use_first {
                    break;
                }
            }
        }
        cycles
    }

    pub fn vertex_count(&self) -> usize {
        self.color_components(Color::Red, Color::Yellow)
    }

    pub fn face_count(&self) -> usize {
        self.color_components(Color::Yellow, Color::Blue)
    }

    /// Read a graph back out. Each red-yellow cycle becomes a vertex, walked
    /// from its least node; an edge is twisted when its blue matching joins
    /// the two exit corners of the walk. Output is determined only up to
    /// vertex flips and rotations.
    pub fn extract(&self) -> LabeledRibbonGraph {
        if self.n == 0 {
            return LabeledRibbonGraph::new(vec![Vec::new()]).expect("isolated vertex");
        }
        let total = self.node_count();
        let mut visited = vec![false; total];
        // Corner pair (entered, exited) per edge occurrence, in walk order.
        let mut edge_darts: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        let mut vertices: Vec<Vec<usize>> = Vec::new();
        for start in 0..total {
            if visited[start] {
                continue;
            }
            let mut seq = Vec::new();
            let mut cur = start;
            loop {
                let exit = self.partner(Color::Red, cur);
                visited[cur] = true;
                visited[exit] = true;
                let e = cur / 4;
                edge_darts[e].push((cur, exit));
                seq.push(e);
                let next = self.partner(Color::Yellow, exit);
                if next == start {
                    break;
                }
                cur = next;
            }
            vertices.push(seq);
        }
        let mut twisted = vec![false; self.n];
        for (e, darts) in edge_darts.iter().enumerate() {
            debug_assert_eq!(darts.len(), 2);
            let (_, exit1) = darts[0];
            let (enter2, exit2) = darts[1];
            let b = self.partner(Color::Blue, exit1);
            twisted[e] = if b == exit2 {
                true
            } else {
                debug_assert_eq!(b, enter2, "blue must join the two darts");
                false
            };
        }
        let tokens = vertices
            .into_iter()
            .map(|seq| {
                seq.into_iter()
                    .map(|e| {
                        let lab = (e + 1) as i32;
                        if twisted[e] {
                            -lab
                        } else {
                            lab
                        }
                    })
                    .collect()
            })
            .collect();
        LabeledRibbonGraph::new(tokens).expect("jewel extraction yields a valid graph")
    }

    /// One line per color listing matched node pairs; a debugging aid only.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (color, name) in [
            (Color::Red, "red"),
            (Color::Green, "green"),
            (Color::Blue, "blue"),
            (Color::Yellow, "yellow"),
        ] {
            out.push_str(name);
            out.push(':');
            for node in 0..self.node_count() {
                let p = self.partner(color, node);
                if node < p {
                    out.push_str(&format!(" {node}-{p}"));
                }
            }
            out.push('\n');
        }
        out
    }

    fn pair_in_match_of_table(a: usize, b: usize) -> usize {
        MATCH_OF[a % 4][b % 4]
    }
}

impl fmt::Debug for Jewel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jewel(n={})\n{}", self.n, self.dump())
    }
}

/// Matching id containing the local pair (a, b) of one edge's clique.
pub(crate) fn matching_of_pair(a: usize, b: usize) -> usize {
    Jewel::pair_in_match_of_table(a, b)
}

/// Partner of local node `local` under matching `m`.
pub(crate) fn local_partner(m: usize, local: usize) -> usize {
    MATCHING[m][local]
}
