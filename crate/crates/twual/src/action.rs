//! The group action on edge-labeled ribbon graphs.
//!
//! Applying `(gamma, pi)` recolors every edge's clique in the 4-colored
//! encoding — edge `e` receives the operation at position `pi(e)` — and then
//! renames edge `e` to `pi(e)`, so that position `i` of the result has
//! received `gamma(i)`. A graph is self-`(gamma, pi)` when the result equals
//! the original as a labeled graph.
//!
//! The `propagate*` functions transport a known self-twuality along an
//! orbit without touching any graph: they are pure identities in the acting
//! group, checked at the action level by the tests.

use crate::edgeop::EdgeOp;
use crate::graph::LabeledRibbonGraph;
use crate::jewel::Jewel;
use crate::perm::Permutation;
use crate::semidirect::{ElementError, GroupElement, RibbonElement};

/// Apply a group element to a graph. Vertex identities are not preserved —
/// partial duals on non-loop edges merge and split vertices — only edge
/// labels persist.
pub fn apply(x: &GroupElement, g: &LabeledRibbonGraph) -> Result<LabeledRibbonGraph, ElementError> {
    if x.degree() != g.edge_count() {
        return Err(ElementError::LengthMismatch(x.degree(), g.edge_count()));
    }
    let mut jewel = Jewel::from_graph(g);
    for e in 0..g.edge_count() {
        jewel.recolor_edge(e + 1, x.gamma.get(x.pi.apply(e)));
    }
    Ok(jewel.extract().relabel(&x.pi))
}

/// Apply edge operations with the identity permutation.
pub fn apply_gamma(
    gamma: &RibbonElement,
    g: &LabeledRibbonGraph,
) -> Result<LabeledRibbonGraph, ElementError> {
    let pi = Permutation::identity(gamma.len());
    apply(&GroupElement::new(gamma.clone(), pi)?, g)
}

/// Apply the same operation to every edge (full dual, Petrial, and so on).
pub fn apply_uniform(op: EdgeOp, g: &LabeledRibbonGraph) -> LabeledRibbonGraph {
    apply_gamma(&RibbonElement::uniform(op, g.edge_count()), g)
        .expect("uniform element always matches the degree")
}

/// True when `apply(x, g)` equals `g` as a labeled graph. The identity
/// element is vacuously accepted; search layers filter it out.
pub fn is_self_gamma(g: &LabeledRibbonGraph, x: &GroupElement) -> bool {
    match apply(x, g) {
        Ok(image) => image.labeled_eq(g),
        Err(_) => false,
    }
}

/// Transport along the identity-permutation orbit: if `h` is canonically
/// self-`gamma` and `apply_gamma(alpha, h) = g`, then `g` is canonically
/// self-`alpha . gamma . alpha^-1` (componentwise conjugation).
pub fn propagate_canonical(
    gamma: &RibbonElement,
    alpha: &RibbonElement,
) -> Result<RibbonElement, ElementError> {
    if gamma.len() != alpha.len() {
        return Err(ElementError::LengthMismatch(gamma.len(), alpha.len()));
    }
    Ok(RibbonElement::new(
        (0..gamma.len())
            .map(|i| alpha.get(i).conjugate(gamma.get(i)))
            .collect(),
    ))
}

/// General transport: if `h` is self-`(gamma, mu)` and `apply((alpha, pi), h)
/// = g`, then `g` is self-`(gamma', mu')` for the returned near-conjugate
/// `gamma' = alpha . (gamma o pi^-1) . (alpha^-1 o pi mu^-1 pi^-1)` and
/// `mu' = pi mu pi^-1`.
pub fn propagate(
    gamma: &RibbonElement,
    mu: &Permutation,
    alpha: &RibbonElement,
    pi: &Permutation,
) -> Result<(RibbonElement, Permutation), ElementError> {
    let pi_inv = pi.inverse();
    let mid = gamma.compose_perm(&pi_inv)?;
    let tail_perm = pi.compose(&mu.inverse()).compose(&pi_inv);
    let tail = alpha.inv().compose_perm(&tail_perm)?;
    let gamma_prime = alpha.mul(&mid)?.mul(&tail)?;
    let mu_prime = pi.compose(mu).compose(&pi_inv);
    Ok((gamma_prime, mu_prime))
}

/// Re-ordering: if `(h, l)` is self-`(gamma, mu)`, then the graph re-labeled
/// by `pi` is self-`(gamma o pi^-1, pi mu pi^-1)`.
pub fn lemma_reorder(
    gamma: &RibbonElement,
    mu: &Permutation,
    pi: &Permutation,
) -> Result<(RibbonElement, Permutation), ElementError> {
    let gamma_prime = gamma.compose_perm(&pi.inverse())?;
    let mu_prime = pi.compose(mu).compose(&pi.inverse());
    Ok((gamma_prime, mu_prime))
}

/// Transport through an automorphism: if `mu` is an automorphism of `h`
/// (i.e. `h` is self-`(1, mu)`), then `apply_gamma(alpha, h)` is
/// self-`(alpha . alpha^-1 o mu^-1, mu)`.
pub fn automorphism_transport(
    alpha: &RibbonElement,
    mu: &Permutation,
) -> Result<RibbonElement, ElementError> {
    alpha.mul(&alpha.inv().compose_perm(&mu.inverse())?)
}

/// For every cycle `(c_1 .. c_m)` of `mu`, the product
/// `gamma(c_m) * ... * gamma(c_1)` must have the same order as `g^m`.
/// This is the obstruction deciding whether a self-`(gamma, mu)` graph can
/// have a uniformly self-`g` graph in its orbit.
pub fn cycle_order_check(gamma: &RibbonElement, mu: &Permutation, g: EdgeOp) -> bool {
    if gamma.len() != mu.degree() {
        return false;
    }
    for cycle in mu.cycles_full() {
        let mut prod = EdgeOp::Identity;
        for &c in cycle.iter().rev() {
            prod = prod.mul(gamma.get(c));
        }
        if prod.order() != g.pow(cycle.len() as u64).order() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edgeop::ALL_OPS;

    fn graph(text: &str) -> LabeledRibbonGraph {
        LabeledRibbonGraph::parse(text).unwrap()
    }

    fn elem(gamma: &str, pi: &str, n: usize) -> GroupElement {
        GroupElement::new(
            RibbonElement::parse(gamma).unwrap(),
            Permutation::parse_cycles(pi, n).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        let g = graph("[1, -3, 2, 1, 2, -3]");
        let image = apply(&GroupElement::identity(3), &g).unwrap();
        assert!(image.labeled_eq(&g));
    }

    #[test]
    fn uniform_dual_of_plane_loop() {
        let g = graph("[1, 1]");
        let dual = apply_uniform(EdgeOp::Dual, &g);
        assert_eq!(dual.vertex_count(), 2);
        let inv = dual.invariants();
        assert_eq!((inv.vertices, inv.faces), (2, 1));
        // Duality is an involution.
        assert!(apply_uniform(EdgeOp::Dual, &dual).labeled_eq(&g));
    }

    #[test]
    fn uniform_twist_of_plane_loop() {
        let g = graph("[1, 1]");
        let twisted = apply_uniform(EdgeOp::Twist, &g);
        assert!(twisted.labeled_eq(&graph("[-1, -1]")));
    }

    #[test]
    fn trialities_are_mutually_inverse() {
        for text in ["[1, 2, 1, 2]", "[1, -3, 2, 1, 2, -3]", "[1, 2] [1, 2]"] {
            let g = graph(text);
            let a = apply_uniform(EdgeOp::TwistDual, &g);
            let back = apply_uniform(EdgeOp::DualTwist, &a);
            assert!(back.labeled_eq(&g), "{text}");
            let thrice = apply_uniform(
                EdgeOp::TwistDual,
                &apply_uniform(EdgeOp::TwistDual, &a),
            );
            assert!(thrice.labeled_eq(&g), "{text}");
        }
    }

    #[test]
    fn known_witness_maps_between_classes() {
        // (tdt, td, d) applied to [1,2,3,1,2,3] lands in the class of
        // [1,-3,2,1,2,-3].
        let h = graph("[1, 2, 3, 1, 2, 3]");
        let image = apply(&elem("tdt,td,d", "", 3), &h).unwrap();
        let target = graph("[1, -3, 2, 1, 2, -3]");
        assert!(image.iso(&target).is_some(), "got {image}");
    }

    #[test]
    fn known_stabilizer_of_three_edge_bouquet() {
        let h = graph("[1, 2, 3, 1, 2, 3]");
        assert!(is_self_gamma(&h, &elem("1,d,d", "(1 2 3)", 3)));
    }

    #[test]
    fn known_stabilizer_of_five_edge_bouquet() {
        let h = graph("[1, 2, 3, 4, 2, 5, 4, 1, 5, 3]");
        assert!(is_self_gamma(&h, &elem("td,dt,td,1,dt", "(3 5 4)", 5)));
    }

    #[test]
    fn action_law_on_samples() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let graphs = [
            graph("[1, 2, 3, 1, 2, 3]"),
            graph("[1, -3, 2, 1, 2, -3]"),
            graph("[1, 2, 3, 4, 2, 5, 4, 1, 5, 3]"),
        ];
        for g in &graphs {
            let n = g.edge_count();
            for _ in 0..20 {
                let x = random_element(&mut rng, n);
                let y = random_element(&mut rng, n);
                let combined = apply(&x.mul(&y).unwrap(), g).unwrap();
                let stepped = apply(&x, &apply(&y, g).unwrap()).unwrap();
                assert!(combined.labeled_eq(&stepped));
            }
        }

        fn random_element(rng: &mut impl rand::Rng, n: usize) -> GroupElement {
            let gamma = RibbonElement::new(
                (0..n).map(|_| ALL_OPS[rng.gen_range(0..6)]).collect(),
            );
            let mut map: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                map.swap(i, rng.gen_range(0..=i));
            }
            GroupElement::new(gamma, Permutation::from_map(map)).unwrap()
        }
    }

    #[test]
    fn agrees_with_arrow_presentation_oracle() {
        use crate::arrow_oracle::oracle_apply;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let graphs = [
            graph("[1, 1]"),
            graph("[-1, -1]"),
            graph("[1, 2, 1, 2]"),
            graph("[1, 2, 3, 1, 2, 3]"),
            graph("[1, -3, 2, 1, 2, -3]"),
            graph("[1, 2] [1, 2]"),
            graph("[1, 2, 3, 4, 2, 5, 4, 1, 5, 3]"),
            graph("[-1, 2, -1, 2, -3, -4, 5, -6, 5, -6] [-3, -4]"),
        ];
        for g in &graphs {
            let n = g.edge_count();
            // Single-op probes on every edge.
            for e in 0..n {
                for op in ALL_OPS {
                    let mut ops = vec![EdgeOp::Identity; n];
                    ops[e] = op;
                    let mine = apply_gamma(&RibbonElement::new(ops.clone()), g).unwrap();
                    let reference = oracle_apply(g, &ops);
                    assert!(
                        mine.labeled_eq(&reference),
                        "{g} edge {e} op {op}: got {mine}, oracle {reference}"
                    );
                }
            }
            // Random full vectors.
            for _ in 0..30 {
                let ops: Vec<EdgeOp> =
                    (0..n).map(|_| ALL_OPS[rng.gen_range(0..6)]).collect();
                let mine = apply_gamma(&RibbonElement::new(ops.clone()), g).unwrap();
                let reference = oracle_apply(g, &ops);
                assert!(
                    mine.labeled_eq(&reference),
                    "{g} ops {ops:?}: got {mine}, oracle {reference}"
                );
            }
        }
    }

    #[test]
    fn gamma_pi_decomposes() {
        // Applying (gamma, pi) equals applying (gamma o pi, id) then (1, pi).
        let g = graph("[1, 2, 3, 4, 2, 5, 4, 1, 5, 3]");
        let x = elem("t,d,td,1,tdt", "(1 4)(2 5 3)", 5);
        let direct = apply(&x, &g).unwrap();
        let gamma_pi = x.gamma.compose_perm(&x.pi).unwrap();
        let staged = apply(
            &GroupElement::new(RibbonElement::identity(5), x.pi.clone()).unwrap(),
            &apply_gamma(&gamma_pi, &g).unwrap(),
        )
        .unwrap();
        assert!(direct.labeled_eq(&staged));
    }

    #[test]
    fn propagate_reduces_to_conjugation() {
        let gamma = RibbonElement::parse("d,td,1").unwrap();
        let alpha = RibbonElement::parse("t,dt,tdt").unwrap();
        let id = Permutation::identity(3);
        let (gp, mp) = propagate(&gamma, &id, &alpha, &id).unwrap();
        assert_eq!(gp, propagate_canonical(&gamma, &alpha).unwrap());
        assert!(mp.is_identity());
        // Uniform d conjugated by uniform t is uniform tdt.
        let conj = propagate_canonical(
            &RibbonElement::uniform(EdgeOp::Dual, 4),
            &RibbonElement::uniform(EdgeOp::Twist, 4),
        )
        .unwrap();
        assert_eq!(conj, RibbonElement::uniform(EdgeOp::Wilson, 4));
    }

    #[test]
    fn propagate_commutes_with_action() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let h = graph("[1, 2, 3, 4, 2, 5, 4, 1, 5, 3]");
        let gamma = RibbonElement::parse("td,dt,td,1,dt").unwrap();
        let mu = Permutation::parse_cycles("(3 5 4)", 5).unwrap();
        assert!(is_self_gamma(&h, &GroupElement::new(gamma.clone(), mu.clone()).unwrap()));
        for _ in 0..10 {
            let alpha = RibbonElement::new(
                (0..5).map(|_| ALL_OPS[rng.gen_range(0..6)]).collect(),
            );
            let mut map: Vec<usize> = (0..5).collect();
            for i in (1..5).rev() {
                map.swap(i, rng.gen_range(0..=i));
            }
            let pi = Permutation::from_map(map);
            let g = apply(&GroupElement::new(alpha.clone(), pi.clone()).unwrap(), &h).unwrap();
            let (gp, mp) = propagate(&gamma, &mu, &alpha, &pi).unwrap();
            assert!(is_self_gamma(&g, &GroupElement::new(gp, mp).unwrap()));
        }
    }

    #[test]
    fn reorder_transports_stabilizers() {
        let h = graph("[1, 2, 3, 1, 2, 3]");
        let gamma = RibbonElement::parse("1,d,d").unwrap();
        let mu = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        for pi_text in ["(1 2)", "(1 3 2)", "(2 3)"] {
            let pi = Permutation::parse_cycles(pi_text, 3).unwrap();
            let (gp, mp) = lemma_reorder(&gamma, &mu, &pi).unwrap();
            let relabeled = h.relabel(&pi);
            assert!(
                is_self_gamma(&relabeled, &GroupElement::new(gp, mp).unwrap()),
                "pi = {pi_text}"
            );
        }
        // pi = id leaves the pair unchanged.
        let id = Permutation::identity(3);
        assert_eq!(
            lemma_reorder(&gamma, &mu, &id).unwrap(),
            (gamma.clone(), mu.clone())
        );
    }

    #[test]
    fn automorphism_transport_matches_definition() {
        let alpha = RibbonElement::parse("1,1,dt,dt,td,td").unwrap();
        let mu = Permutation::parse_cycles("(1 3 5)(2 4 6)", 6).unwrap();
        let gamma_prime = automorphism_transport(&alpha, &mu).unwrap();
        assert_eq!(gamma_prime, RibbonElement::uniform(EdgeOp::DualTwist, 6));
    }

    #[test]
    fn automorphism_transport_acts_as_claimed() {
        use rand::{Rng as _, SeedableRng};
        // (1 2 3) is an automorphism of the 3-edge bouquet; for any alpha,
        // the image graph is fixed by (transport(alpha, mu), mu).
        let h = graph("[1, 2, 3, 1, 2, 3]");
        let mu = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        assert!(is_self_gamma(
            &h,
            &GroupElement::new(RibbonElement::identity(3), mu.clone()).unwrap()
        ));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let alpha = RibbonElement::new(
                (0..3).map(|_| ALL_OPS[rng.gen_range(0..6)]).collect(),
            );
            let g = apply_gamma(&alpha, &h).unwrap();
            let gamma_prime = automorphism_transport(&alpha, &mu).unwrap();
            assert!(is_self_gamma(
                &g,
                &GroupElement::new(gamma_prime, mu.clone()).unwrap()
            ));
        }
    }

    #[test]
    fn cycle_order_check_cases() {
        // Uniform gamma always passes against its own entry.
        let mu = Permutation::parse_cycles("(1 2)(3 4 5)", 5).unwrap();
        for g in ALL_OPS {
            assert!(cycle_order_check(&RibbonElement::uniform(g, 5), &mu, g));
        }
        // (1, d, d) around a 3-cycle multiplies to the identity, matching
        // (dt)^3.
        let gamma = RibbonElement::parse("1,d,d").unwrap();
        let mu3 = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        assert!(cycle_order_check(&gamma, &mu3, EdgeOp::DualTwist));
        // (t, 1) around a 2-cycle multiplies to t, order 2, but d^2 = 1.
        let gamma2 = RibbonElement::parse("t,1").unwrap();
        let mu2 = Permutation::parse_cycles("(1 2)", 2).unwrap();
        assert!(!cycle_order_check(&gamma2, &mu2, EdgeOp::Dual));
    }
}
