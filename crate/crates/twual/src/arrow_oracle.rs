//! Test-only reference implementation of the edge operations on arrow
//! presentations, used as an independent oracle for the 4-colored encoding.
//!
//! An arrow presentation draws each vertex as a circle carrying one directed
//! arc per incident edge-end; an edge is untwisted exactly when its two
//! arrows point the same way around their circles. The twist reverses one
//! arrow. The partial dual removes the two arrows and their arcs and sews
//! the remaining paths back together along two new arrows, one from the head
//! of the first old arrow to the tail of the second and one the other way.

use crate::edgeop::EdgeOp;
use crate::graph::LabeledRibbonGraph;

#[derive(Clone, Debug)]
pub(crate) struct ArrowPresentation {
    // (edge 0-based, points forward along the circle's traversal)
    circles: Vec<Vec<(usize, bool)>>,
    n: usize,
}

impl ArrowPresentation {
    pub(crate) fn from_graph(g: &LabeledRibbonGraph) -> Self {
        let mut seen = vec![false; g.edge_count()];
        let circles = g
            .vertices()
            .iter()
            .map(|seq| {
                seq.iter()
                    .map(|&t| {
                        let e = t.unsigned_abs() as usize - 1;
                        let forward = t > 0 || !seen[e];
                        seen[e] = true;
                        (e, forward)
                    })
                    .collect()
            })
            .collect();
        ArrowPresentation { circles, n: g.edge_count() }
    }

    pub(crate) fn to_graph(&self) -> LabeledRibbonGraph {
        let mut dir: Vec<Option<bool>> = vec![None; self.n];
        let mut twisted = vec![false; self.n];
        for circle in &self.circles {
            for &(e, forward) in circle {
                match dir[e] {
                    None => dir[e] = Some(forward),
                    Some(first) => twisted[e] = first != forward,
                }
            }
        }
        let vertices = self
            .circles
            .iter()
            .map(|circle| {
                circle
                    .iter()
                    .map(|&(e, _)| {
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
        LabeledRibbonGraph::new(vertices).expect("arrow presentation is a valid graph")
    }

    fn positions_of(&self, e: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (c, circle) in self.circles.iter().enumerate() {
            for (i, &(lab, _)) in circle.iter().enumerate() {
                if lab == e {
                    out.push((c, i));
                }
            }
        }
        out
    }

    fn flip_circle(circle: &mut Vec<(usize, bool)>) {
        circle.reverse();
        for arc in circle.iter_mut() {
            arc.1 = !arc.1;
        }
    }

    /// Reverse one arrow of edge `e` (0-based).
    pub(crate) fn twist(&mut self, e: usize) {
        let (c, i) = self.positions_of(e)[0];
        self.circles[c][i].1 = !self.circles[c][i].1;
    }

    /// Partial dual with respect to edge `e` (0-based), by the arc surgery.
    pub(crate) fn partial_dual(&mut self, e: usize) {
        let pos = self.positions_of(e);
        if pos[0].0 == pos[1].0 {
            // Both arrows on one circle. Normalize so the circle starts with
            // a forward arrow of e (flipping the circle if needed).
            let c = pos[0].0;
            let mut circle = std::mem::take(&mut self.circles[c]);
            if !circle[pos[0].1].1 && !circle[pos[1].1].1 {
                Self::flip_circle(&mut circle);
            }
            let a = circle
                .iter()
                .position(|&(lab, fwd)| lab == e && fwd)
                .expect("a forward arrow of e exists");
            circle.rotate_left(a);
            let b = circle
                .iter()
                .skip(1)
                .position(|&(lab, _)| lab == e)
                .expect("second arrow of e")
                + 1;
            let b_forward = circle[b].1;
            let between: Vec<(usize, bool)> = circle[1..b].to_vec();
            let after: Vec<(usize, bool)> = circle[b + 1..].to_vec();
            if b_forward {
                // Two circles, each closed off by one new arrow of e.
                let mut c1 = between;
                c1.push((e, false));
                let mut c2 = after;
                c2.push((e, false));
                self.circles[c] = c1;
                self.circles.push(c2);
            } else {
                // One circle: new arrow, the trailing path, the other new
                // arrow backwards, then the middle path reversed.
                let mut c1 = vec![(e, true)];
                c1.extend(after);
                c1.push((e, false));
                let mut rev = between;
                Self::flip_circle(&mut rev);
                c1.extend(rev);
                self.circles[c] = c1;
            }
        } else {
            // Arrows on two circles; flip as needed so both point forward,
            // then the circles merge into one.
            let (c1, i1) = pos[0];
            let (c2, _) = pos[1];
            let mut first = std::mem::take(&mut self.circles[c1]);
            let mut second = std::mem::take(&mut self.circles[c2]);
            if !first[i1].1 {
                Self::flip_circle(&mut first);
            }
            let a = first
                .iter()
                .position(|&(lab, _)| lab == e)
                .expect("arrow in first circle");
            first.rotate_left(a);
            if !second.iter().find(|&&(lab, _)| lab == e).expect("arrow").1 {
                Self::flip_circle(&mut second);
            }
            let b = second
                .iter()
                .position(|&(lab, _)| lab == e)
                .expect("arrow in second circle");
            second.rotate_left(b);
            // first = (A+, x..), second = (B+, y..): one circle
            // (x.., e-, y.., e-).
            let mut merged: Vec<(usize, bool)> = first[1..].to_vec();
            merged.push((e, false));
            merged.extend_from_slice(&second[1..]);
            merged.push((e, false));
            let keep = c1.min(c2);
            let drop = c1.max(c2);
            self.circles[keep] = merged;
            self.circles.remove(drop);
        }
    }

    /// Apply a full edge operation to edge `e` (0-based), rightmost letter
    /// of the word first.
    pub(crate) fn apply_op(&mut self, e: usize, op: EdgeOp) {
        let word: &[u8] = match op {
            EdgeOp::Identity => b"",
            EdgeOp::Twist => b"t",
            EdgeOp::Dual => b"d",
            EdgeOp::TwistDual => b"td",
            EdgeOp::DualTwist => b"dt",
            EdgeOp::Wilson => b"tdt",
        };
        for &letter in word.iter().rev() {
            match letter {
                b't' => self.twist(e),
                b'd' => self.partial_dual(e),
                _ => unreachable!(),
            }
        }
    }
}

/// Oracle version of the canonical action: apply `ops[e]` to edge `e`.
pub(crate) fn oracle_apply(g: &LabeledRibbonGraph, ops: &[EdgeOp]) -> LabeledRibbonGraph {
    assert_eq!(ops.len(), g.edge_count());
    let mut pres = ArrowPresentation::from_graph(g);
    for (e, &op) in ops.iter().enumerate() {
        pres.apply_op(e, op);
    }
    pres.to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edgeop::ALL_OPS;

    fn graph(text: &str) -> LabeledRibbonGraph {
        LabeledRibbonGraph::parse(text).unwrap()
    }

    fn uniform(g: &LabeledRibbonGraph, op: EdgeOp) -> LabeledRibbonGraph {
        oracle_apply(g, &vec![op; g.edge_count()])
    }

    #[test]
    fn roundtrip_representation() {
        for text in ["[1, 1]", "[-1, -1]", "[1, 2, 1, 2]", "[1, 2] [1, 2]"] {
            let g = graph(text);
            let back = ArrowPresentation::from_graph(&g).to_graph();
            assert!(back.labeled_eq(&g), "{text}");
        }
    }

    #[test]
    fn dual_of_plane_loop_is_path() {
        let dual = uniform(&graph("[1, 1]"), EdgeOp::Dual);
        assert_eq!(dual.vertex_count(), 2);
        assert_eq!(dual.to_text(), "[1] [1]");
    }

    #[test]
    fn dual_of_path_is_plane_loop() {
        let dual = uniform(&graph("[1] [1]"), EdgeOp::Dual);
        assert!(dual.labeled_eq(&graph("[1, 1]")));
    }

    #[test]
    fn twisted_loop_is_self_dual() {
        let dual = uniform(&graph("[-1, -1]"), EdgeOp::Dual);
        assert!(dual.labeled_eq(&graph("[-1, -1]")));
    }

    #[test]
    fn group_relations_hold_on_samples() {
        for text in ["[1, 2, 1, 2]", "[1, -3, 2, 1, 2, -3]", "[1, 2] [1, 2]"] {
            let g = graph(text);
            let n = g.edge_count();
            for e in 0..n {
                // t^2 = d^2 = 1 and (td)^3 = 1 on a single edge.
                let mut p = ArrowPresentation::from_graph(&g);
                p.twist(e);
                p.twist(e);
                assert!(p.to_graph().labeled_eq(&g));
                let mut p = ArrowPresentation::from_graph(&g);
                p.partial_dual(e);
                p.partial_dual(e);
                assert!(p.to_graph().labeled_eq(&g), "{text} d^2 edge {e}");
                let mut p = ArrowPresentation::from_graph(&g);
                for _ in 0..3 {
                    p.apply_op(e, EdgeOp::TwistDual);
                }
                assert!(p.to_graph().labeled_eq(&g), "{text} (td)^3 edge {e}");
            }
        }
    }

    #[test]
    fn ops_on_distinct_edges_commute() {
        let g = graph("[1, -3, 2, 1, 2, -3]");
        for a in ALL_OPS {
            for b in ALL_OPS {
                let mut p1 = ArrowPresentation::from_graph(&g);
                p1.apply_op(0, a);
                p1.apply_op(2, b);
                let mut p2 = ArrowPresentation::from_graph(&g);
                p2.apply_op(2, b);
                p2.apply_op(0, a);
                assert!(p1.to_graph().labeled_eq(&p2.to_graph()), "{a} {b}");
            }
        }
    }
}
