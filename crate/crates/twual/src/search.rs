//! Stabilizers, the conjugating-element solver, reduction to orientable
//! bouquets, self-twuality classification, the self-trial census, and an
//! infinite self-trial family.

use std::collections::BTreeSet;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::{apply_gamma, apply_uniform, cycle_order_check, is_self_gamma};
use crate::chord::{
    bouquet_from_diagram, bouquet_to_diagram, recover_label_map, ChordDiagram, DiagramForm,
    Dihedral,
};
use crate::edgeop::{EdgeOp, ALL_OPS};
use crate::enumerate::oebs_up_to_iso;
use crate::graph::LabeledRibbonGraph;
use crate::jewel::{local_partner, matching_of_pair, Color, Jewel, OP_FROM_RED_BLUE};
use crate::perm::Permutation;
use crate::semidirect::{ElementError, GroupElement, RibbonElement};

/// The complete set of group elements fixing a labeled graph.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    pub elements: Vec<GroupElement>,
}

impl Stabilizer {
    pub fn contains(&self, x: &GroupElement) -> bool {
        self.elements.binary_search(x).is_ok()
    }
}

/// All `(gamma, pi)` with `apply((gamma, pi), g)` equal to `g` as a labeled
/// graph. Bouquets go through the chord-diagram match; everything else
/// falls back to isomorphism witnesses.
pub fn stabilizers(g: &LabeledRibbonGraph) -> Stabilizer {
    let n = g.edge_count();
    if n == 0 {
        return Stabilizer { elements: vec![GroupElement::identity(0)] };
    }
    let elements = if g.is_oeb() && n <= 8 {
        oeb_stabilizers_fast(g)
    } else if g.is_bouquet() {
        bouquet_stabilizers_generic(g)
    } else {
        general_stabilizers(g)
    };
    Stabilizer { elements }
}

/// Specialized scan for unsigned bouquets. The image of the bouquet under
/// an operation vector is single-vertex or not depending only on which
/// matching each edge's red color sits on, so the 6^n vector space collapses
/// to 3^n red assignments; the blue matching is then forced by the
/// requirement that the image carry no twists (the base diagram has none).
fn oeb_stabilizers_fast(g: &LabeledRibbonGraph) -> Vec<GroupElement> {
    let n = g.edge_count();
    let spots = 2 * n;
    let jewel = Jewel::from_graph(g);
    let yellow: Vec<usize> = (0..4 * n).map(|v| jewel.partner(Color::Yellow, v)).collect();
    let d_hat = bouquet_to_diagram(g).expect("bouquet");
    let d_off = d_hat.convert(DiagramForm::Offset);
    let mut orbit: Vec<u64> = Dihedral::all(spots)
        .iter()
        .map(|s| d_off.dihedral_act(s).pack_unsigned())
        .collect();
    orbit.sort_unstable();
    orbit.dedup();

    let mut out = BTreeSet::new();
    let mut red = vec![0u8; n];
    let mut darts: Vec<(usize, usize, usize)> = Vec::with_capacity(spots);
    let mut spot_of: Vec<[usize; 2]> = vec![[usize::MAX; 2]; n];
    loop {
        darts.clear();
        let mut cur = 0usize;
        let single = loop {
            let e = cur >> 2;
            let exit = (e << 2) | local_partner(red[e] as usize, cur & 3);
            darts.push((e, cur, exit));
            let next = yellow[exit];
            if next == 0 {
                break darts.len() == spots;
            }
            if darts.len() >= spots {
                break false;
            }
            cur = next;
        };
        if single {
            for s in spot_of.iter_mut() {
                *s = [usize::MAX; 2];
            }
            for (spot, &(e, _, _)) in darts.iter().enumerate() {
                let slot = usize::from(spot_of[e][0] != usize::MAX);
                spot_of[e][slot] = spot;
            }
            let mut key = 0u64;
            for (spot, &(e, _, _)) in darts.iter().enumerate() {
                let other = spot_of[e][usize::from(spot_of[e][0] == spot)];
                let off = (other + spots - spot) % spots;
                key = key << 4 | off as u64;
            }
            if orbit.binary_search(&key).is_ok() {
                collect_matches(g, &d_hat, &d_off, &darts, &red, &mut out);
            }
        }
        let mut j = 0;
        loop {
            if j == n {
                let mut elements: Vec<GroupElement> = out.into_iter().collect();
                elements.sort();
                return elements;
            }
            red[j] += 1;
            if red[j] < 3 {
                break;
            }
            red[j] = 0;
            j += 1;
        }
    }
}

/// Slow path of the fast scan: rebuild the image diagram and its operation
/// vector, then record one stabilizer element per matching circle symmetry.
fn collect_matches(
    g: &LabeledRibbonGraph,
    d_hat: &ChordDiagram,
    d_off: &ChordDiagram,
    darts: &[(usize, usize, usize)],
    red: &[u8],
    out: &mut BTreeSet<GroupElement>,
) {
    let n = g.edge_count();
    let spots = 2 * n;
    let entries: Vec<i32> = darts.iter().map(|&(e, _, _)| (e + 1) as i32).collect();
    let img_hat = ChordDiagram::new(DiagramForm::EndLabel, entries).expect("valid image diagram");
    let img_off = img_hat.convert(DiagramForm::Offset);

    let mut gamma_ops = vec![EdgeOp::Identity; n];
    let mut first: Vec<Option<(usize, usize)>> = vec![None; n];
    for &(e, enter, exit) in darts {
        match first[e] {
            None => first[e] = Some((enter, exit)),
            Some((_, exit1)) => {
                let m_b = matching_of_pair(exit1, enter);
                gamma_ops[e] = EdgeOp::from_index(OP_FROM_RED_BLUE[red[e] as usize][m_b]);
            }
        }
    }
    let gamma = RibbonElement::new(gamma_ops);

    for sigma in Dihedral::all(spots) {
        if img_off.dihedral_act(&sigma) == *d_off {
            let to_image = recover_label_map(d_hat, &img_hat, &sigma)
                .expect("matching offset forms induce a label bijection");
            let pi = to_image.inverse();
            let gamma_prime = gamma.permuted(&pi).expect("degrees agree");
            out.insert(GroupElement::new(gamma_prime, pi).expect("degrees agree"));
        }
    }
}

/// Chord-diagram stabilizer scan for arbitrary (possibly twisted) bouquets:
/// iterate every operation vector, keep those whose image is again a
/// bouquet, and match diagrams under the circle symmetries.
fn bouquet_stabilizers_generic(g: &LabeledRibbonGraph) -> Vec<GroupElement> {
    let n = g.edge_count();
    let spots = 2 * n;
    let d_hat = bouquet_to_diagram(g).expect("bouquet");
    let d_off = d_hat.convert(DiagramForm::Offset);
    let sigmas = Dihedral::all(spots);
    let mut out = BTreeSet::new();
    let mut digits = vec![0u8; n];
    loop {
        let gamma = RibbonElement::new(digits.iter().map(|&d| ALL_OPS[d as usize]).collect());
        let image = apply_gamma(&gamma, g).expect("degrees agree");
        if image.is_bouquet() {
            let img_hat = bouquet_to_diagram(&image).expect("bouquet");
            let img_off = img_hat.convert(DiagramForm::Offset);
            for sigma in &sigmas {
                if img_off.dihedral_act(sigma) == d_off {
                    if let Some(to_image) = recover_label_map(&d_hat, &img_hat, sigma) {
                        let pi = to_image.inverse();
                        let gamma_prime = gamma.permuted(&pi).expect("degrees agree");
                        out.insert(GroupElement::new(gamma_prime, pi).expect("degrees agree"));
                    }
                }
            }
        }
        let mut j = 0;
        loop {
            if j == n {
                let mut elements: Vec<GroupElement> = out.into_iter().collect();
                elements.sort();
                return elements;
            }
            digits[j] += 1;
            if digits[j] < 6 {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
    }
}

/// Fallback for graphs with several vertices: for each operation vector,
/// every isomorphism from the image back onto the graph yields one
/// stabilizer element. Complete because any stabilizing `(gamma', pi)`
/// factors as `(1, pi)(gamma, id)` with `gamma = gamma' o pi`.
fn general_stabilizers(g: &LabeledRibbonGraph) -> Vec<GroupElement> {
    let n = g.edge_count();
    let auts = g.automorphisms();
    let mut out = BTreeSet::new();
    let mut digits = vec![0u8; n];
    loop {
        let gamma = RibbonElement::new(digits.iter().map(|&d| ALL_OPS[d as usize]).collect());
        let image = apply_gamma(&gamma, g).expect("degrees agree");
        if let Some(witness) = image.iso(g) {
            for aut in &auts {
                let pi = aut.compose(&witness.edge_bijection);
                let gamma_prime = gamma.permuted(&pi).expect("degrees agree");
                out.insert(GroupElement::new(gamma_prime, pi).expect("degrees agree"));
            }
        }
        let mut j = 0;
        loop {
            if j == n {
                let mut elements: Vec<GroupElement> = out.into_iter().collect();
                elements.sort();
                return elements;
            }
            digits[j] += 1;
            if digits[j] < 6 {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
    }
}

/// All `alpha` with `alpha . gamma . phi_mu(alpha^-1) = gamma_prime`.
///
/// Per cycle of `mu`, seed the first coordinate with each group element and
/// iterate `alpha[mu^-1(i)] = gamma_prime[i]^-1 . alpha[i] . gamma[i]`
/// around the cycle; seeds that close consistently are options for that
/// cycle, and solutions are all cross-cycle combinations. An empty result
/// means the pair cannot produce the target twuality.
pub fn solve_alpha(
    gamma: &RibbonElement,
    mu: &Permutation,
    gamma_prime: &RibbonElement,
) -> Result<Vec<RibbonElement>, ElementError> {
    let n = gamma.len();
    if mu.degree() != n {
        return Err(ElementError::LengthMismatch(n, mu.degree()));
    }
    if gamma_prime.len() != n {
        return Err(ElementError::LengthMismatch(n, gamma_prime.len()));
    }
    let mu_inv = mu.inverse();
    let mut per_cycle: Vec<Vec<Vec<(usize, EdgeOp)>>> = Vec::new();
    for cycle in mu.cycles_full() {
        let len = cycle.len();
        let start = cycle[0];
        let mut options = Vec::new();
        for seed in ALL_OPS {
            let mut assignment = Vec::with_capacity(len);
            let mut cur = start;
            let mut val = seed;
            for _ in 0..len {
                assignment.push((cur, val));
                val = gamma_prime.get(cur).inv().mul(val).mul(gamma.get(cur));
                cur = mu_inv.apply(cur);
            }
            debug_assert_eq!(cur, start);
            if val == seed {
                options.push(assignment);
            }
        }
        if options.is_empty() {
            return Ok(Vec::new());
        }
        per_cycle.push(options);
    }
    let mut choice = vec![0usize; per_cycle.len()];
    let mut solutions = Vec::new();
    loop {
        let mut ops = vec![EdgeOp::Identity; n];
        for (c, opts) in per_cycle.iter().enumerate() {
            for &(i, op) in &opts[choice[c]] {
                ops[i] = op;
            }
        }
        solutions.push(RibbonElement::new(ops));
        let mut c = 0;
        loop {
            if c == per_cycle.len() {
                return Ok(solutions);
            }
            choice[c] += 1;
            if choice[c] < per_cycle[c].len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

#[derive(Debug, Error)]
pub enum ReduceError {
    #[error("graph is not connected")]
    Disconnected,
}

/// Find an orientable bouquet in the orbit of a connected graph: take the
/// partial dual on a non-loop edge until one vertex remains, then twist
/// away any remaining twisted loops. Returns the bouquet's diagram and the
/// accumulated operation vector `alpha` with `apply_gamma(alpha, g)` equal
/// to the bouquet.
pub fn reduce_to_oeb(
    g: &LabeledRibbonGraph,
) -> Result<(ChordDiagram, RibbonElement), ReduceError> {
    if !g.is_connected() {
        return Err(ReduceError::Disconnected);
    }
    let n = g.edge_count();
    let mut alpha = RibbonElement::identity(n);
    if n == 0 {
        return Ok((
            ChordDiagram::new(DiagramForm::EndLabel, Vec::new()).expect("empty diagram"),
            alpha,
        ));
    }
    let mut cur = g.clone();
    while cur.vertex_count() > 1 {
        let e = (1..=n)
            .find(|&e| !cur.is_loop(e))
            .expect("a connected graph with several vertices has a non-loop edge");
        let mut ops = vec![EdgeOp::Identity; n];
        ops[e - 1] = EdgeOp::Dual;
        let step = RibbonElement::new(ops);
        let next = apply_gamma(&step, &cur).expect("degrees agree");
        assert!(next.vertex_count() < cur.vertex_count());
        alpha = step.mul(&alpha).expect("degrees agree");
        cur = next;
    }
    let twisted: Vec<usize> = (1..=n).filter(|&e| cur.twisted(e)).collect();
    if !twisted.is_empty() {
        let mut ops = vec![EdgeOp::Identity; n];
        for e in twisted {
            ops[e - 1] = EdgeOp::Twist;
        }
        let step = RibbonElement::new(ops);
        cur = apply_gamma(&step, &cur).expect("degrees agree");
        alpha = step.mul(&alpha).expect("degrees agree");
    }
    debug_assert!(cur.is_oeb());
    let diagram = bouquet_to_diagram(&cur).expect("single-vertex result");
    Ok((diagram, alpha))
}

/// Natural self-twuality flags: each is true when the graph is isomorphic
/// (by any isomorphism) to its image under the corresponding full operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwualityFlags {
    pub self_dual: bool,
    pub self_petrial: bool,
    pub self_wilsonial: bool,
    pub self_trial: bool,
}

pub fn classify(g: &LabeledRibbonGraph) -> TwualityFlags {
    let check = |op: EdgeOp| apply_uniform(op, g).iso(g).is_some();
    TwualityFlags {
        self_dual: check(EdgeOp::Dual),
        self_petrial: check(EdgeOp::Twist),
        self_wilsonial: check(EdgeOp::Wilson),
        self_trial: check(EdgeOp::DualTwist),
    }
}

/// One discovered self-trial non-self-dual class.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub n: usize,
    pub graph: LabeledRibbonGraph,
    pub seed_oeb: ChordDiagram,
    pub alpha: RibbonElement,
    /// Lexicographically least permutation with
    /// `apply((uniform dt, sigma), graph)` equal to `graph` labeled.
    pub sigma: Permutation,
}

/// Flat, serializable census record (also the checkpoint format).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CensusRecord {
    pub n: usize,
    pub graph: String,
    pub seed_oeb: String,
    pub alpha: String,
    pub sigma: String,
}

impl CensusEntry {
    pub fn to_record(&self) -> CensusRecord {
        CensusRecord {
            n: self.n,
            graph: self.graph.to_text(),
            seed_oeb: bouquet_from_diagram(&self.seed_oeb).to_text(),
            alpha: format!("{}", self.alpha).trim_matches(['(', ')']).to_string(),
            sigma: self.sigma.to_cycle_string(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    /// Worker threads for the per-bouquet scans; 0 keeps the current thread.
    pub jobs: usize,
    /// Where to keep the resumable cursor; written after every chunk.
    pub checkpoint: Option<PathBuf>,
    /// Continue from an existing checkpoint instead of starting over.
    pub resume: bool,
    /// Print progress to stderr.
    pub progress: bool,
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    n: usize,
    next_oeb: usize,
    candidates: Vec<RawCandidate>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawCandidate {
    graph: String,
    seed: String,
    alpha: String,
    mu: String,
}

/// Every self-trial non-self-dual graph on `n` edges, up to isomorphism
/// and duality: such graphs come in dual pairs (the full dual of one is
/// again self-trial and never isomorphic to it), and one representative is
/// reported per pair.
///
/// For each orientable bouquet class, each stabilizer element whose cycle
/// structure passes the order obstruction seeds the conjugating-element
/// solver with the uniform order-3 target; all resulting orbit images are
/// deduplicated and filtered by classification. Only the `dt` target is
/// searched: a graph isomorphic to its `td` image is also isomorphic to its
/// `dt` image via the inverse isomorphism.
pub fn census(n: usize, opts: &CensusOptions) -> Vec<CensusEntry> {
    assert!(n >= 1, "census needs at least one edge");
    let oebs = oebs_up_to_iso(n);
    let target = RibbonElement::uniform(EdgeOp::DualTwist, n);

    let mut start = 0usize;
    let mut raw: Vec<RawCandidate> = Vec::new();
    if opts.resume {
        if let Some(path) = &opts.checkpoint {
            match std::fs::read_to_string(path)
                .map_err(|e| e.to_string())
                .and_then(|text| {
                    serde_json::from_str::<Checkpoint>(&text).map_err(|e| e.to_string())
                }) {
                Ok(cp) if cp.n == n && cp.next_oeb <= oebs.len() => {
                    start = cp.next_oeb;
                    raw = cp.candidates;
                    if opts.progress {
                        eprintln!("resuming census at bouquet {start}/{}", oebs.len());
                    }
                }
                Ok(_) => eprintln!("checkpoint does not match this run; starting over"),
                Err(err) => eprintln!("unreadable checkpoint ({err}); starting over"),
            }
        }
    }

    let chunk_size = 256usize;
    let run = |oebs: &[ChordDiagram], start: usize, raw: &mut Vec<RawCandidate>| {
        let mut index = start;
        while index < oebs.len() {
            let upper = (index + chunk_size).min(oebs.len());
            let mut chunk: Vec<Vec<RawCandidate>> = Vec::new();
            (index..upper)
                .into_par_iter()
                .map(|i| census_candidates(&oebs[i], &target))
                .collect_into_vec(&mut chunk);
            for batch in chunk {
                raw.extend(batch);
            }
            index = upper;
            if let Some(path) = &opts.checkpoint {
                let cp = Checkpoint { n, next_oeb: index, candidates: raw.clone() };
                if let Err(err) =
                    std::fs::write(path, serde_json::to_string(&cp).expect("serializable"))
                {
                    eprintln!("failed to write checkpoint: {err}");
                }
            }
            if opts.progress {
                eprintln!("scanned {index}/{} bouquet classes", oebs.len());
            }
        }
    };
    if opts.jobs > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| run(&oebs, start, &mut raw));
    } else {
        run(&oebs, start, &mut raw);
    }

    // Merge: dedup by canonical form — of the graph and of its full dual,
    // since Class III graphs come in dual pairs and only one member of each
    // pair is reported — then classify once per class.
    let mut decided: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut entries = Vec::new();
    for cand in raw {
        let graph = LabeledRibbonGraph::parse(&cand.graph).expect("stored graph parses");
        let key = graph.canonical_code().0;
        let dual_key = apply_uniform(EdgeOp::Dual, &graph).canonical_code().0;
        let fresh = decided.insert(key) & decided.insert(dual_key);
        if !fresh {
            continue;
        }
        // One-point joins are dropped: twuality acts independently on the
        // pieces of a join, so joins of smaller self-twual graphs are
        // self-trial automatically and are not counted as new discoveries.
        if graph.is_separable() {
            continue;
        }
        // Every candidate is self-trial via the stabilizer permutation it
        // was derived from; check that transport really happened.
        debug_assert!({
            let mu = Permutation::parse_cycles(&cand.mu, n).expect("stored mu parses");
            let el = GroupElement::new(RibbonElement::uniform(EdgeOp::DualTwist, n), mu)
                .expect("degrees agree");
            is_self_gamma(&graph, &el)
        });
        let flags = classify(&graph);
        debug_assert!(flags.self_trial);
        if flags.self_trial && !flags.self_dual {
            let sigma = least_self_trial_sigma(&graph)
                .expect("census candidates are self-trial via their stabilizer permutation");
            let seed = LabeledRibbonGraph::parse(&cand.seed).expect("stored seed parses");
            entries.push(CensusEntry {
                n,
                graph,
                seed_oeb: bouquet_to_diagram(&seed).expect("seed is a bouquet"),
                alpha: RibbonElement::parse(&cand.alpha).expect("stored alpha parses"),
                sigma,
            });
        }
    }
    entries
}

fn census_candidates(diagram: &ChordDiagram, target: &RibbonElement) -> Vec<RawCandidate> {
    let n = diagram.chords();
    let h = bouquet_from_diagram(diagram);
    let seed_text = h.to_text();
    let stab = stabilizers(&h);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for el in &stab.elements {
        if !cycle_order_check(&el.gamma, &el.pi, EdgeOp::DualTwist) {
            continue;
        }
        let alphas = solve_alpha(&el.gamma, &el.pi, target).expect("degrees agree");
        for alpha in alphas {
            let g = apply_gamma(&alpha, &h).expect("degrees agree");
            if !seen.insert(g.canonical_code().0) {
                continue;
            }
            out.push(RawCandidate {
                graph: g.to_text(),
                seed: seed_text.clone(),
                alpha: format!("{alpha}").trim_matches(['(', ')']).to_string(),
                mu: el.pi.to_cycle_string(),
            });
            let _ = n;
        }
    }
    out
}

/// Lexicographically least permutation realizing labeled self-triality.
pub fn least_self_trial_sigma(g: &LabeledRibbonGraph) -> Option<Permutation> {
    let n = g.edge_count();
    let uniform = RibbonElement::uniform(EdgeOp::DualTwist, n);
    Permutation::all(n).into_iter().find(|pi| {
        is_self_gamma(
            g,
            &GroupElement::new(uniform.clone(), pi.clone()).expect("degrees agree"),
        )
    })
}

/// The `3k`-edge orientable bouquet whose edges chain cyclically, the
/// three-block operation vector `(1,..,1, dt,..,dt, td,..,td)`, and the
/// image graph. The image is self-trial but neither self-dual nor
/// self-Petrial; the classification is verified by tests, not assumed.
pub fn family(k: usize) -> (LabeledRibbonGraph, RibbonElement, LabeledRibbonGraph) {
    assert!(k >= 1);
    let n = 3 * k;
    let mut seq = Vec::with_capacity(2 * n);
    for j in 2..=n {
        seq.push(j as i32);
        seq.push(j as i32 - 1);
    }
    seq.push(1);
    seq.push(n as i32);
    let h = LabeledRibbonGraph::new(vec![seq]).expect("valid bouquet");
    let mut ops = vec![EdgeOp::Identity; k];
    ops.extend(vec![EdgeOp::DualTwist; k]);
    ops.extend(vec![EdgeOp::TwistDual; k]);
    let alpha = RibbonElement::new(ops);
    let g = apply_gamma(&alpha, &h).expect("degrees agree");
    (h, alpha, g)
}

/// The cyclic relabeling `i -> i + k (mod 3k)`, an automorphism of the
/// family's bouquet.
pub fn family_automorphism(k: usize) -> Permutation {
    let n = 3 * k;
    Permutation::from_map((0..n).map(|i| (i + k) % n).collect())
}
