//! Edge-labeled ribbon graphs in end-label form.
//!
//! A graph with `n` edges is a set of vertices, each a cyclic sequence of
//! signed integer tokens. `|token|` is an edge label in `1..=n`; every label
//! appears exactly twice across all vertices, and both occurrences carry the
//! same sign. A negative label means the edge (ribbon) has a half-twist.
//!
//! Graphs are equivalence classes under vertex flips: flipping a vertex
//! reverses its cyclic sequence and toggles the twist of every edge with
//! exactly one end at that vertex. Equality is therefore never raw text
//! equality; use [`LabeledRibbonGraph::labeled_eq`] (label-preserving) or
//! [`LabeledRibbonGraph::iso`] (any relabeling).

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledRibbonGraph {
    n: usize,
    vertices: Vec<Vec<i32>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphParseError {
    #[error("expected '[' at byte {0}")]
    ExpectedBracket(usize),
    #[error("malformed integer near byte {0}")]
    BadInteger(usize),
    #[error("zero is not a valid edge label")]
    ZeroLabel,
    #[error("label {0} appears {1} times, expected exactly 2")]
    BadMultiplicity(usize, usize),
    #[error("label {0} has inconsistent twist signs")]
    SignMismatch(usize),
    #[error("empty vertex is only allowed as a single isolated vertex")]
    EmptyVertex,
    #[error("input contains no vertices")]
    NoVertices,
}

/// Location of one edge end: (vertex index, position in that vertex).
pub type Dart = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub orientable: bool,
    /// Orientable genus, or the crosscap number when non-orientable.
    pub genus: i64,
}

/// Witness for an isomorphism from one graph onto another.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    /// 0-based map: edge `e` of the source corresponds to edge
    /// `edge_bijection.apply(e)` of the target.
    pub edge_bijection: Permutation,
    /// For a pair of bouquets, the circle symmetry realizing the match.
    pub dihedral: Option<crate::chord::Dihedral>,
}

impl LabeledRibbonGraph {
    pub fn new(vertices: Vec<Vec<i32>>) -> Result<Self, GraphParseError> {
        if vertices.is_empty() {
            return Err(GraphParseError::NoVertices);
        }
        let mut max_label = 0usize;
        for v in &vertices {
            for &t in v {
                if t == 0 {
                    return Err(GraphParseError::ZeroLabel);
                }
                max_label = max_label.max(t.unsigned_abs() as usize);
            }
        }
        if vertices.iter().any(|v| v.is_empty()) && !(max_label == 0 && vertices.len() == 1) {
            return Err(GraphParseError::EmptyVertex);
        }
        let n = max_label;
        let mut count = vec![0usize; n + 1];
        let mut sign: Vec<Option<bool>> = vec![None; n + 1];
        for v in &vertices {
            for &t in v {
                let e = t.unsigned_abs() as usize;
                count[e] += 1;
                let neg = t < 0;
                match sign[e] {
                    None => sign[e] = Some(neg),
                    Some(s) if s != neg => return Err(GraphParseError::SignMismatch(e)),
                    _ => {}
                }
            }
        }
        for e in 1..=n {
            if count[e] != 2 {
                return Err(GraphParseError::BadMultiplicity(e, count[e]));
            }
        }
        Ok(LabeledRibbonGraph { n, vertices })
    }

    /// Parse one or more bracketed tuples, e.g. `[1, -3, 2, 1, 2, -3]` or
    /// `[-1, -2, 7] [-1, 4, 5, 3, 7, -6, 4, 3, -2, -6, 5]`.
    pub fn parse(text: &str) -> Result<Self, GraphParseError> {
        let bytes = text.as_bytes();
        let mut i = 0usize;
        let mut vertices = Vec::new();
        loop {
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            if i >= bytes.len() {
                break;
            }
            if bytes[i] != b'[' {
                return Err(GraphParseError::ExpectedBracket(i));
            }
            i += 1;
            let mut tokens = Vec::new();
            loop {
                while i < bytes.len()
                    && (bytes[i].is_ascii_whitespace() || bytes[i] == b',')
                {
                    i += 1;
                }
                if i >= bytes.len() {
                    return Err(GraphParseError::ExpectedBracket(i));
                }
                if bytes[i] == b']' {
                    i += 1;
                    break;
                }
                let start = i;
                if bytes[i] == b'-' || bytes[i] == b'+' {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let tok: i32 = text[start..i]
                    .parse()
                    .map_err(|_| GraphParseError::BadInteger(start))?;
                tokens.push(tok);
            }
            vertices.push(tokens);
        }
        Self::new(vertices)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push('[');
            for (j, t) in v.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                out.push_str(&t.to_string());
            }
            out.push(']');
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vec<i32>] {
        &self.vertices
    }

    /// True when the edge with 1-based label `e` is twisted.
    pub fn twisted(&self, e: usize) -> bool {
        self.vertices
            .iter()
            .flatten()
            .find(|t| t.unsigned_abs() as usize == e)
            .map(|t| *t < 0)
            .unwrap_or(false)
    }

    /// The two ends of each edge in reading order; index is 0-based label.
    pub fn edge_ends(&self) -> Vec<[Dart; 2]> {
        let mut ends: Vec<Vec<Dart>> = vec![Vec::new(); self.n];
        for (v, seq) in self.vertices.iter().enumerate() {
            for (p, &t) in seq.iter().enumerate() {
                ends[t.unsigned_abs() as usize - 1].push((v, p));
            }
        }
        ends.into_iter()
            .map(|pair| [pair[0], pair[1]])
            .collect()
    }

    pub fn is_bouquet(&self) -> bool {
        self.vertices.len() == 1
    }

    /// Single vertex and no twisted edges. Twists of loops survive vertex
    /// flips, so this is representative-independent.
    pub fn is_oeb(&self) -> bool {
        self.is_bouquet() && self.vertices[0].iter().all(|&t| t > 0)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let ends = &self.edge_ends()[e - 1];
        ends[0].0 == ends[1].0
    }

    /// Rename every edge: label `e` becomes `pi(e)` (1-based via the 0-based
    /// permutation).
    pub fn relabel(&self, pi: &Permutation) -> LabeledRibbonGraph {
        assert_eq!(pi.degree(), self.n);
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|&t| {
                        let e = t.unsigned_abs() as usize - 1;
                        let new = (pi.apply(e) + 1) as i32;
                        if t < 0 {
                            -new
                        } else {
                            new
                        }
                    })
                    .collect()
            })
            .collect();
        LabeledRibbonGraph { n: self.n, vertices }
    }

    fn vertex_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for ends in self.edge_ends() {
            let (u, w) = (ends[0].0, ends[1].0);
            if u != w {
                adj[u].push(w);
                adj[w].push(u);
            }
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.len() <= 1 {
            return true;
        }
        let adj = self.vertex_adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.vertices.len()
    }

    /// Vertex index sets of the connected components.
    pub fn component_vertices(&self) -> Vec<Vec<usize>> {
        let adj = self.vertex_adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for s in 0..self.vertices.len() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Each component as a standalone graph with labels compacted to `1..=m`;
    /// the second item maps new labels (0-based) back to original ones.
    pub fn components(&self) -> Vec<(LabeledRibbonGraph, Vec<usize>)> {
        self.component_vertices()
            .into_iter()
            .map(|verts| {
                let mut old_labels = Vec::new();
                let mut new_of = vec![0i32; self.n + 1];
                for &v in &verts {
                    for &t in &self.vertices[v] {
                        let e = t.unsigned_abs() as usize;
                        if new_of[e] == 0 {
                            old_labels.push(e - 1);
                            new_of[e] = old_labels.len() as i32;
                        }
                    }
                }
                let vertices = verts
                    .iter()
                    .map(|&v| {
                        self.vertices[v]
                            .iter()
                            .map(|&t| {
                                let e = t.unsigned_abs() as usize;
                                if t < 0 {
                                    -new_of[e]
                                } else {
                                    new_of[e]
                                }
                            })
                            .collect()
                    })
                    .collect();
                (
                    LabeledRibbonGraph { n: old_labels.len(), vertices },
                    old_labels,
                )
            })
            .collect()
    }

    /// Representation after flipping the marked vertices: flipped sequences
    /// are reversed, and an edge's sign toggles once per flipped endpoint
    /// (so loops at a flipped vertex keep their twist).
    pub fn flipped(&self, flips: &[bool]) -> Vec<Vec<i32>> {
        assert_eq!(flips.len(), self.vertices.len());
        let ends = self.edge_ends();
        let mut toggles = vec![false; self.n];
        for (e, pair) in ends.iter().enumerate() {
            toggles[e] = flips[pair[0].0] ^ flips[pair[1].0];
        }
        self.vertices
            .iter()
            .enumerate()
            .map(|(v, seq)| {
                let mut tokens: Vec<i32> = seq
                    .iter()
                    .map(|&t| {
                        let e = t.unsigned_abs() as usize - 1;
                        if toggles[e] {
                            -t
                        } else {
                            t
                        }
                    })
                    .collect();
                if flips[v] {
                    tokens.reverse();
                }
                tokens
            })
            .collect()
    }

    /// Canonical key under vertex flips, cyclic rotation, and vertex
    /// reordering, with labels kept fixed. Two graphs are equal as labeled
    /// ribbon graphs exactly when their keys agree.
    pub fn labeled_key(&self) -> Vec<i32> {
        let nv = self.vertices.len();
        assert!(nv <= 20, "labeled comparison limited to 20 vertices");
        let mut best: Option<Vec<i32>> = None;
        for mask in 0u32..(1 << nv) {
            let flips: Vec<bool> = (0..nv).map(|v| mask >> v & 1 == 1).collect();
            let mut rep: Vec<Vec<i32>> = self
                .flipped(&flips)
                .into_iter()
                .map(|seq| min_rotation(&seq))
                .collect();
            rep.sort_unstable();
            let mut flat = Vec::with_capacity(2 * self.n + nv);
            for seq in rep {
                flat.push(0);
                flat.extend(seq);
            }
            if best.as_ref().is_none_or(|b| flat < *b) {
                best = Some(flat);
            }
        }
        best.unwrap()
    }

    /// Equality as labeled ribbon graphs (same labels, any vertex flips,
    /// rotations, and vertex order).
    pub fn labeled_eq(&self, other: &LabeledRibbonGraph) -> bool {
        self.n == other.n
            && self.vertices.len() == other.vertices.len()
            && self.labeled_key() == other.labeled_key()
    }

    /// Canonical code of the whole graph under arbitrary relabeling, plus the
    /// 1-based renumbering `edge_map[old_0based]` realizing it. Codes are
    /// equal exactly for isomorphic graphs.
    pub fn canonical_code(&self) -> (Vec<i32>, Vec<usize>) {
        let comps = self.component_vertices();
        let partner = self.edge_ends();

        let mut pieces: Vec<(Vec<i32>, Vec<(usize, usize)>)> = Vec::new();
        for comp in &comps {
            let mut best: Option<(Vec<i32>, Vec<(usize, usize)>)> = None;
            let mut edges_here = 0usize;
            for &v in comp {
                edges_here += self.vertices[v].len();
            }
            edges_here /= 2;
            if edges_here == 0 {
                pieces.push((vec![0], Vec::new()));
                continue;
            }
            for &v in comp {
                for p in 0..self.vertices[v].len() {
                    for flip in [false, true] {
                        let (code, assignment) = self.rooted_code((v, p), flip, &partner);
                        if best.as_ref().is_none_or(|b| code < b.0) {
                            best = Some((code, assignment));
                        }
                    }
                }
            }
            pieces.push(best.unwrap());
        }
        pieces.sort();
        let mut code = Vec::new();
        let mut edge_map = vec![0usize; self.n];
        let mut offset = 0usize;
        for (piece_code, assignment) in pieces {
            let m = assignment.len();
            for &c in &piece_code {
                if c == 0 {
                    code.push(0);
                } else if c > 0 {
                    code.push(c + offset as i32);
                } else {
                    code.push(c - offset as i32);
                }
            }
            for (old_e, num) in assignment {
                edge_map[old_e] = num + offset;
            }
            offset += m;
        }
        (code, edge_map)
    }

    /// Deterministic breadth-first code from one root dart and orientation.
    /// Vertex orientations are forced so every tree edge is effectively
    /// untwisted; remaining edges emit their residual twist as a sign.
    fn rooted_code(
        &self,
        root: Dart,
        flip0: bool,
        partner_of: &[[Dart; 2]],
    ) -> (Vec<i32>, Vec<(usize, usize)>) {
        let nv = self.vertices.len();
        let mut vflip: Vec<Option<bool>> = vec![None; nv];
        let mut vstart = vec![0usize; nv];
        let mut edge_new = vec![0usize; self.n];
        let mut assignment = Vec::new();
        let mut next = 1usize;
        let (rv, rp) = root;
        vflip[rv] = Some(flip0);
        vstart[rv] = rp;
        let mut queue = VecDeque::from([rv]);
        let mut code = Vec::new();
        while let Some(v) = queue.pop_front() {
            code.push(0);
            let m = self.vertices[v].len();
            let flip = vflip[v].unwrap();
            let start = vstart[v];
            for step in 0..m {
                let p = if flip {
                    (start + m - step) % m
                } else {
                    (start + step) % m
                };
                let t = self.vertices[v][p];
                let e = t.unsigned_abs() as usize - 1;
                let twist = t < 0;
                let pair = partner_of[e];
                let (w, q) = if pair[0] == (v, p) { pair[1] } else { pair[0] };
                if edge_new[e] == 0 {
                    edge_new[e] = next;
                    assignment.push((e, next));
                    next += 1;
                    if vflip[w].is_none() {
                        vflip[w] = Some(flip ^ twist);
                        vstart[w] = q;
                        queue.push_back(w);
                    }
                }
                let eff = twist ^ flip ^ vflip[w].unwrap();
                let num = edge_new[e] as i32;
                code.push(if eff { -num } else { num });
            }
        }
        (code, assignment)
    }

    /// Isomorphism test as unlabeled ribbon graphs; returns a witness mapping
    /// edges of `self` onto edges of `other`. For a pair of bouquets the
    /// witness's edge bijection is the one induced by its dihedral element.
    pub fn iso(&self, other: &LabeledRibbonGraph) -> Option<IsoWitness> {
        if self.n != other.n || self.vertices.len() != other.vertices.len() {
            return None;
        }
        if self.is_bouquet() && other.is_bouquet() && self.n > 0 {
            let sigma = crate::chord::bouquet_dihedral_witness(self, other)?;
            let da = crate::chord::bouquet_to_diagram(self).expect("bouquet");
            let db = crate::chord::bouquet_to_diagram(other).expect("bouquet");
            let edge_bijection = crate::chord::recover_label_map(&da, &db, &sigma)
                .expect("matching offset forms induce a label bijection");
            return Some(IsoWitness { edge_bijection, dihedral: Some(sigma) });
        }
        let (code_a, map_a) = self.canonical_code();
        let (code_b, map_b) = other.canonical_code();
        if code_a != code_b {
            return None;
        }
        let mut inv_b = vec![0usize; self.n];
        for (old, &num) in map_b.iter().enumerate() {
            inv_b[num - 1] = old;
        }
        let edge_bijection =
            Permutation::from_map(map_a.iter().map(|&num| inv_b[num - 1]).collect());
        Some(IsoWitness { edge_bijection, dihedral: None })
    }

    /// Every isomorphism from `self` onto `other`, as edge bijections.
    /// Complete: every unlabeled isomorphism induces exactly one entry.
    pub fn all_isos_onto(&self, other: &LabeledRibbonGraph) -> Vec<Permutation> {
        if self.n != other.n || self.vertices.len() != other.vertices.len() {
            return Vec::new();
        }
        if self.n == 0 {
            return vec![Permutation::identity(0)];
        }
        let comps_a = self.components();
        let comps_b = other.components();
        if comps_a.len() != comps_b.len() {
            return Vec::new();
        }
        let coded_a: Vec<(Vec<i32>, Vec<Vec<(usize, usize)>>)> = comps_a
            .iter()
            .map(|(g, _)| g.min_rootings_connected())
            .collect();
        let coded_b: Vec<(Vec<i32>, Vec<usize>)> = comps_b
            .iter()
            .map(|(g, _)| {
                let (code, map) = g.canonical_code();
                (code, map)
            })
            .collect();
        // Match components with equal codes in every possible way.
        let k = comps_a.len();
        let mut used = vec![false; k];
        let mut out = Vec::new();
        let mut global = vec![0usize; self.n];
        fn assemble(
            idx: usize,
            k: usize,
            used: &mut Vec<bool>,
            global: &mut Vec<usize>,
            out: &mut Vec<Permutation>,
            comps_a: &[(LabeledRibbonGraph, Vec<usize>)],
            comps_b: &[(LabeledRibbonGraph, Vec<usize>)],
            coded_a: &[(Vec<i32>, Vec<Vec<(usize, usize)>>)],
            coded_b: &[(Vec<i32>, Vec<usize>)],
        ) {
            if idx == k {
                out.push(Permutation::from_map(global.clone()));
                return;
            }
            for j in 0..k {
                if used[j] || coded_a[idx].0 != coded_b[j].0 {
                    continue;
                }
                used[j] = true;
                let m = comps_a[idx].0.edge_count();
                let mut inv_b = vec![0usize; m];
                for (old, &num) in coded_b[j].1.iter().enumerate() {
                    inv_b[num - 1] = old;
                }
                for rooting in &coded_a[idx].1 {
                    let mut map_a = vec![0usize; m];
                    for &(old, num) in rooting {
                        map_a[old] = num;
                    }
                    for local in 0..m {
                        let target_local = inv_b[map_a[local] - 1];
                        global[comps_a[idx].1[local]] = comps_b[j].1[target_local];
                    }
                    assemble(idx + 1, k, used, global, out, comps_a, comps_b, coded_a, coded_b);
                }
                used[j] = false;
            }
        }
        assemble(0, k, &mut used, &mut global, &mut out, &comps_a, &comps_b, &coded_a, &coded_b);
        out.sort();
        out.dedup();
        out
    }

    /// All edge bijections induced by self-isomorphisms.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        self.all_isos_onto(self)
    }

    /// Minimal rooted code of a connected graph together with every edge
    /// assignment achieving it (one per automorphism).
    fn min_rootings_connected(&self) -> (Vec<i32>, Vec<Vec<(usize, usize)>>) {
        let partner = self.edge_ends();
        let mut best_code: Option<Vec<i32>> = None;
        let mut rootings: Vec<Vec<(usize, usize)>> = Vec::new();
        for v in 0..self.vertices.len() {
            for p in 0..self.vertices[v].len() {
                for flip in [false, true] {
                    let (code, assignment) = self.rooted_code((v, p), flip, &partner);
                    match &best_code {
                        Some(b) if code > *b => {}
                        Some(b) if code == *b => rootings.push(assignment),
                        _ => {
                            best_code = Some(code);
                            rootings = vec![assignment];
                        }
                    }
                }
            }
        }
        (best_code.unwrap_or_else(|| vec![0]), rootings)
    }

    /// Topological invariants. Faces are counted on the 4-regular encoding;
    /// genus is reported for the connected case (crosscap number when
    /// non-orientable).
    pub fn invariants(&self) -> Invariants {
        let v = self.vertices.len();
        let e = self.n;
        let f = if self.n == 0 {
            self.vertices.len()
        } else {
            crate::jewel::Jewel::from_graph(self).face_count()
        };
        let euler = v as i64 - e as i64 + f as i64;
        let orientable = self.orientable();
        let genus = if orientable { (2 - euler) / 2 } else { 2 - euler };
        Invariants { vertices: v, edges: e, faces: f, euler, orientable, genus }
    }

    pub fn component_invariants(&self) -> Vec<Invariants> {
        self.components()
            .into_iter()
            .map(|(g, _)| g.invariants())
            .collect()
    }

    /// True when the graph is a one-point join: some vertex's cyclic
    /// sequence splits into two non-interleaved arcs whose sides share no
    /// edge and stay apart after the vertex is pulled into two.
    pub fn is_separable(&self) -> bool {
        let ends = self.edge_ends();
        for (v, seq) in self.vertices.iter().enumerate() {
            let m = seq.len();
            if m < 2 {
                continue;
            }
            for start in 0..m {
                for len in 1..m {
                    let in_a = |p: usize| (p + m - start) % m < len;
                    // Loops at v must not cross the split.
                    let crossing = ends.iter().any(|pair| {
                        pair[0].0 == v
                            && pair[1].0 == v
                            && in_a(pair[0].1) != in_a(pair[1].1)
                    });
                    if crossing {
                        continue;
                    }
                    if self.split_disconnects(v, &in_a) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Connectivity test of the graph with vertex `v` pulled apart into the
    /// `in_a` part and its complement.
    fn split_disconnects(&self, v: usize, in_a: &dyn Fn(usize) -> bool) -> bool {
        let ends = self.edge_ends();
        let nv = self.vertices.len();
        // Node ids: 0..nv regular (v = the A side), nv = the B side of v.
        let side = |d: Dart| -> usize {
            if d.0 == v && !in_a(d.1) {
                nv
            } else {
                d.0
            }
        };
        let mut adj = vec![Vec::new(); nv + 1];
        for pair in &ends {
            let (a, b) = (side(pair[0]), side(pair[1]));
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; nv + 1];
        let mut queue = VecDeque::from([v]);
        seen[v] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached < nv + 1
    }

    /// True when some assignment of vertex flips removes every twist.
    pub fn orientable(&self) -> bool {
        let ends = self.edge_ends();
        let nv = self.vertices.len();
        let mut flip: Vec<Option<bool>> = vec![None; nv];
        for (e, pair) in ends.iter().enumerate() {
            if pair[0].0 == pair[1].0 && self.twisted(e + 1) {
                return false;
            }
        }
        for start in 0..nv {
            if flip[start].is_some() {
                continue;
            }
            flip[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let fv = flip[v].unwrap();
                for &t in &self.vertices[v] {
                    let e = t.unsigned_abs() as usize - 1;
                    let pair = ends[e];
                    if pair[0].0 == pair[1].0 {
                        continue;
                    }
                    let w = if pair[0].0 == v { pair[1].0 } else { pair[0].0 };
                    let want = fv ^ (t < 0);
                    match flip[w] {
                        None => {
                            flip[w] = Some(want);
                            queue.push_back(w);
                        }
                        Some(fw) if fw != want => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for LabeledRibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LabeledRibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledRibbonGraph({})", self.to_text())
    }
}

fn min_rotation(seq: &[i32]) -> Vec<i32> {
    if seq.is_empty() {
        return Vec::new();
    }
    let m = seq.len();
    let mut best: Option<Vec<i32>> = None;
    for s in 0..m {
        let rot: Vec<i32> = (0..m).map(|i| seq[(s + i) % m]).collect();
        if best.as_ref().is_none_or(|b| rot < *b) {
            best = Some(rot);
        }
    }
    best.unwrap()
}
