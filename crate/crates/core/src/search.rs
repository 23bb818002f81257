//! Exhaustive two-coloring search: does every red/blue coloring of the
//! complete r-uniform host on p vertices contain a red copy of a pattern or
//! a blue clique? Built on iterative backtracking over edge slots with
//! incremental detection through the last-colored edge, an optional
//! lex-leader symmetry cut, and a node budget that turns long runs into an
//! explicit verdict instead of a hang.

use serde::{Deserialize, Serialize};

use crate::combin::{colex_rank, colex_subsets, colex_unrank, small_permutations, MAX_ORDER};
use crate::coloring::{min_color_class, weak_chromatic_number};
use crate::witness::{burr_witness, verify_witness, BlueTarget, Color, TwoColoring};
use crate::{CoreError, Hypergraph, Result};

const UNSET: u8 = 0;
const RED: u8 = 1;
const BLUE: u8 = 2;

/// Order in which edge slots are assigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeOrder {
    /// Plain colex rank order.
    Colex,
    /// Greedy overlap order: each next slot shares as many vertices as
    /// possible with the slots already placed, so contradictions surface
    /// early.
    DegreeGuided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub symmetry: bool,
    pub edge_order: EdgeOrder,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: 100_000_000,
            symmetry: false,
            edge_order: EdgeOrder::Colex,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "coloring")]
pub enum ArrowingVerdict {
    /// Every coloring contains the red pattern or the blue clique.
    Arrows,
    /// A coloring avoiding both, as evidence.
    Counterexample(TwoColoring),
    /// The node budget ran out before the search space was exhausted.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrowingResult {
    pub verdict: ArrowingVerdict,
    pub nodes: u64,
}

/// Decides whether K_p (r-uniform, r taken from the pattern) arrows
/// (red_pattern, K_n). The search looks for a counterexample coloring;
/// exhausting the space proves arrowing.
pub fn arrows(
    p: usize,
    red_pattern: &Hypergraph,
    blue_clique: usize,
    cfg: &SearchConfig,
) -> Result<ArrowingResult> {
    let r = red_pattern.uniformity();
    if blue_clique < r {
        return Err(CoreError::InvalidParameter(format!(
            "blue clique must have at least r = {r} vertices, got {blue_clique}"
        )));
    }
    if p > MAX_ORDER {
        return Err(CoreError::OrderTooLarge {
            order: p,
            max: MAX_ORDER,
        });
    }
    // An edgeless pattern sits inside every coloring with enough vertices.
    if red_pattern.edge_count() == 0 {
        return Ok(if red_pattern.order() <= p {
            ArrowingResult {
                verdict: ArrowingVerdict::Arrows,
                nodes: 0,
            }
        } else {
            ArrowingResult {
                verdict: ArrowingVerdict::Counterexample(TwoColoring::all_red(p, r)?),
                nodes: 0,
            }
        });
    }
    let probe = TwoColoring::all_blue(p, r)?; // validates p and the slot count
    let slots = probe.edge_slots();
    let order = slot_order(p, r, slots, cfg.edge_order);
    let transpositions = if cfg.symmetry {
        transposition_tables(p, r, slots)
    } else {
        Vec::new()
    };

    let mut state = vec![UNSET; slots];
    let mut tried = vec![0u8; slots];
    let mut pos = 0usize;
    let mut nodes = 0u64;
    loop {
        if pos == slots {
            let mut coloring = TwoColoring::all_blue(p, r)?;
            for (rank, &s) in state.iter().enumerate() {
                if s == RED {
                    coloring.set_rank(rank as u64, Color::Red);
                }
            }
            return Ok(ArrowingResult {
                verdict: ArrowingVerdict::Counterexample(coloring),
                nodes,
            });
        }
        if tried[pos] == 2 {
            tried[pos] = 0;
            state[order[pos]] = UNSET;
            if pos == 0 {
                return Ok(ArrowingResult {
                    verdict: ArrowingVerdict::Arrows,
                    nodes,
                });
            }
            pos -= 1;
            continue;
        }
        let color = if tried[pos] == 0 { RED } else { BLUE };
        tried[pos] += 1;
        nodes += 1;
        if nodes > cfg.node_budget {
            return Ok(ArrowingResult {
                verdict: ArrowingVerdict::BudgetExhausted,
                nodes,
            });
        }
        let rank = order[pos];
        state[rank] = color;
        let anchor = colex_unrank(rank as u64, r);
        let forced = match color {
            RED => red_copy_through(p, red_pattern, &state, &anchor),
            _ => blue_clique_through(p, r, &state, &anchor, blue_clique),
        };
        let cut = forced
            || (!transpositions.is_empty() && lex_leader_violated(&state, &transpositions));
        if cut {
            state[rank] = UNSET;
            continue;
        }
        pos += 1;
    }
}

fn slot_order(p: usize, r: usize, slots: usize, order: EdgeOrder) -> Vec<usize> {
    match order {
        EdgeOrder::Colex => (0..slots).collect(),
        EdgeOrder::DegreeGuided => {
            let edges: Vec<Vec<usize>> = (0..slots).map(|q| colex_unrank(q as u64, r)).collect();
            let mut placed = vec![false; slots];
            let mut touched = vec![false; p];
            let mut out = Vec::with_capacity(slots);
            for _ in 0..slots {
                let mut best = usize::MAX;
                let mut best_overlap = 0usize;
                for q in 0..slots {
                    if placed[q] {
                        continue;
                    }
                    let overlap = edges[q].iter().filter(|&&v| touched[v]).count();
                    // maximize overlap, break ties toward low rank
                    if best == usize::MAX || overlap > best_overlap {
                        best = q;
                        best_overlap = overlap;
                    }
                }
                placed[best] = true;
                for &v in &edges[best] {
                    touched[v] = true;
                }
                out.push(best);
            }
            out
        }
    }
}

/// Rank tables of the adjacent vertex transpositions (i, i+1); used for the
/// lex-leader cut.
fn transposition_tables(p: usize, r: usize, slots: usize) -> Vec<Vec<usize>> {
    (0..p.saturating_sub(1))
        .map(|a| {
            (0..slots)
                .map(|q| {
                    let mut edge = colex_unrank(q as u64, r);
                    for v in edge.iter_mut() {
                        if *v == a {
                            *v = a + 1;
                        } else if *v == a + 1 {
                            *v = a;
                        }
                    }
                    edge.sort_unstable();
                    colex_rank(&edge) as usize
                })
                .collect()
        })
        .collect()
}

/// A partial coloring is cut when some adjacent transposition makes it
/// lexicographically smaller on the already-decided prefix: the lex-least
/// member of each orbit always survives, so no counterexample class is lost.
fn lex_leader_violated(state: &[u8], tables: &[Vec<usize>]) -> bool {
    for table in tables {
        for q in 0..state.len() {
            let a = state[q];
            let b = state[table[q]];
            if a == UNSET || b == UNSET || a < b {
                break;
            }
            if a > b {
                return true;
            }
        }
    }
    false
}

/// Does the red part of `state` contain a copy of `pat` using the anchor
/// edge as the image of some pattern edge? Copies not through the anchor
/// were already visible before the anchor was colored.
fn red_copy_through(p: usize, pat: &Hypergraph, state: &[u8], anchor: &[usize]) -> bool {
    let r = pat.uniformity();
    if pat.order() > p {
        return false;
    }
    let perms = small_permutations(r);
    for pedge in pat.edges() {
        for perm in &perms {
            let mut map = vec![usize::MAX; pat.order()];
            let mut used = vec![false; p];
            for (i, &pv) in pedge.vertices().iter().enumerate() {
                map[pv] = anchor[perm[i]];
                used[anchor[perm[i]]] = true;
            }
            if !seeded_edges_ok(pat, state, &map) {
                continue;
            }
            if extend_pattern(p, pat, state, &mut map, &mut used, 0) {
                return true;
            }
        }
    }
    false
}

/// Checks every fully mapped pattern edge against the red part of `state`.
fn seeded_edges_ok(pat: &Hypergraph, state: &[u8], map: &[usize]) -> bool {
    for e in pat.edges() {
        let mut img: Vec<usize> = Vec::with_capacity(e.vertices().len());
        let mut full = true;
        for &pv in e.vertices() {
            if map[pv] == usize::MAX {
                full = false;
                break;
            }
            img.push(map[pv]);
        }
        if !full {
            continue;
        }
        img.sort_unstable();
        if state[colex_rank(&img) as usize] != RED {
            return false;
        }
    }
    true
}

fn extend_pattern(
    p: usize,
    pat: &Hypergraph,
    state: &[u8],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    from: usize,
) -> bool {
    let next = match (from..pat.order()).find(|&pv| map[pv] == usize::MAX) {
        None => return true,
        Some(pv) => pv,
    };
    for hv in 0..p {
        if used[hv] {
            continue;
        }
        map[next] = hv;
        used[hv] = true;
        let ok = pat.edges().iter().all(|e| {
            if !e.contains(next) {
                return true;
            }
            let mut img: Vec<usize> = Vec::with_capacity(e.vertices().len());
            for &pv in e.vertices() {
                if map[pv] == usize::MAX {
                    return true; // not fully mapped yet
                }
                img.push(map[pv]);
            }
            img.sort_unstable();
            state[colex_rank(&img) as usize] == RED
        });
        if ok && extend_pattern(p, pat, state, map, used, next + 1) {
            return true;
        }
        map[next] = usize::MAX;
        used[hv] = false;
    }
    false
}

/// Is there a set of `n` vertices containing the anchor edge whose
/// r-subsets are all blue in `state`?
fn blue_clique_through(p: usize, r: usize, state: &[u8], anchor: &[usize], n: usize) -> bool {
    if n > p {
        return false;
    }
    let mut chosen = anchor.to_vec();
    extend_blue(p, r, state, &mut chosen, 0, n - anchor.len())
}

fn extend_blue(
    p: usize,
    r: usize,
    state: &[u8],
    chosen: &mut Vec<usize>,
    from: usize,
    need: usize,
) -> bool {
    if need == 0 {
        return true;
    }
    let mut v = from;
    while v < p {
        if !chosen.contains(&v) && blue_compatible(r, state, chosen, v) {
            chosen.push(v);
            if extend_blue(p, r, state, chosen, v + 1, need - 1) {
                return true;
            }
            chosen.pop();
        }
        v += 1;
    }
    false
}

fn blue_compatible(r: usize, state: &[u8], chosen: &[usize], v: usize) -> bool {
    for idx in colex_subsets(chosen.len(), r - 1) {
        let mut edge: Vec<usize> = idx.iter().map(|&i| chosen[i]).collect();
        edge.push(v);
        edge.sort_unstable();
        if state[colex_rank(&edge) as usize] != BLUE {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum RamseyOutcome {
    /// R(pattern, K_n; r) determined exactly, with the counterexample at
    /// value − 1 as the certificate.
    Exact {
        value: usize,
        certificate: TwoColoring,
        nodes: u64,
    },
    /// Budget ran out at some host order; the value is at least known_lower.
    Exhausted { known_lower: usize, nodes: u64 },
}

/// Computes R(pattern, K_n; r) by scanning host orders upward from the best
/// construction-backed lower bound. The starting witness is verified before
/// it is trusted; the node budget is shared across the whole scan.
pub fn ramsey_number(
    red_pattern: &Hypergraph,
    blue_clique: usize,
    cfg: &SearchConfig,
) -> Result<RamseyOutcome> {
    let r = red_pattern.uniformity();
    let n = blue_clique;
    if n < r {
        return Err(CoreError::InvalidParameter(format!(
            "blue clique must have at least r = {r} vertices, got {n}"
        )));
    }
    if red_pattern.edge_count() == 0 {
        return Err(CoreError::InvalidParameter(
            "red pattern needs at least one edge".into(),
        ));
    }
    let m = red_pattern.order();
    let c = red_pattern.largest_component_order();
    let (chi_host, _) = weak_chromatic_number(&Hypergraph::complete(n, r)?)?;
    let t_host = min_color_class(&Hypergraph::complete(n, r)?)?;
    let (chi_pat, _) = weak_chromatic_number(red_pattern)?;
    let t_pat = min_color_class(red_pattern)?;

    // Candidate witnesses; each shows R > its order.
    let mut seeds: Vec<TwoColoring> = vec![
        burr_witness(chi_host, t_host, c, r)?.flipped(),
        burr_witness(chi_pat, t_pat, n, r)?,
        TwoColoring::all_red(m - 1, r)?,
        TwoColoring::all_blue(n - 1, r)?,
    ];
    seeds.sort_by_key(|w| w.order());
    let mut certificate = None;
    for seed in seeds.into_iter().rev() {
        if verify_witness(&seed, red_pattern, BlueTarget::Clique(n))?.is_clean() {
            certificate = Some(seed);
            break;
        }
    }
    let mut certificate = certificate.ok_or_else(|| {
        CoreError::Internal("no construction-backed starting witness verified".into())
    })?;

    let mut nodes = 0u64;
    let mut p = certificate.order() + 1;
    loop {
        if p > MAX_ORDER {
            return Err(CoreError::OrderTooLarge {
                order: p,
                max: MAX_ORDER,
            });
        }
        let remaining = SearchConfig {
            node_budget: cfg.node_budget.saturating_sub(nodes),
            ..*cfg
        };
        let result = arrows(p, red_pattern, n, &remaining)?;
        nodes += result.nodes;
        match result.verdict {
            ArrowingVerdict::Arrows => {
                return Ok(RamseyOutcome::Exact {
                    value: p,
                    certificate,
                    nodes,
                });
            }
            ArrowingVerdict::Counterexample(w) => {
                certificate = w;
                p += 1;
            }
            ArrowingVerdict::BudgetExhausted => {
                return Ok(RamseyOutcome::Exhausted {
                    known_lower: p,
                    nodes,
                });
            }
        }
    }
}

/// Largest number of pairwise disjoint edges, by branching on the lowest
/// uncovered vertex.
pub fn max_disjoint_edges(h: &Hypergraph) -> usize {
    let mut used = vec![false; h.order()];
    let mut best = 0;
    matching_branch(h, 0, &mut used, 0, &mut best);
    best
}

fn matching_branch(
    h: &Hypergraph,
    v: usize,
    used: &mut Vec<bool>,
    current: usize,
    best: &mut usize,
) {
    if current > *best {
        *best = current;
    }
    if v >= h.order() {
        return;
    }
    if h.uniformity() > 0 && current + (h.order() - v) / h.uniformity() <= *best {
        return; // even covering everything left cannot beat the best
    }
    if used[v] {
        matching_branch(h, v + 1, used, current, best);
        return;
    }
    // v stays uncovered for good
    used[v] = true;
    matching_branch(h, v + 1, used, current, best);
    used[v] = false;
    // or v is covered by one of its edges
    for e in h.edges() {
        if !e.contains(v) || e.vertices().iter().any(|&u| used[u]) {
            continue;
        }
        for &u in e.vertices() {
            used[u] = true;
        }
        matching_branch(h, v + 1, used, current + 1, best);
        for &u in e.vertices() {
            used[u] = false;
        }
    }
}

/// Matching number of the red part of a coloring.
pub fn independence_check(coloring: &TwoColoring) -> usize {
    max_disjoint_edges(&coloring.red_subhypergraph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{loose_cycle_c4, loose_path};
    use crate::witness::cubic_residue_witness;

    #[test]
    fn single_edge_pattern_arrows_at_n() {
        let edge = loose_path(3, 3).unwrap();
        let cfg = SearchConfig::default();
        let res = arrows(5, &edge, 5, &cfg).unwrap();
        assert_eq!(res.verdict, ArrowingVerdict::Arrows);
        let res = arrows(4, &edge, 5, &cfg).unwrap();
        match res.verdict {
            ArrowingVerdict::Counterexample(w) => {
                assert!(verify_witness(&w, &edge, BlueTarget::Clique(5))
                    .unwrap()
                    .is_clean());
            }
            other => panic!("expected counterexample, got {other:?}"),
        }
    }

    #[test]
    fn path_vs_k4_threshold() {
        let p5 = loose_path(5, 3).unwrap();
        let cfg = SearchConfig::default();
        assert_eq!(
            arrows(6, &p5, 4, &cfg).unwrap().verdict,
            ArrowingVerdict::Arrows
        );
        match arrows(5, &p5, 4, &cfg).unwrap().verdict {
            ArrowingVerdict::Counterexample(w) => {
                assert!(verify_witness(&w, &p5, BlueTarget::Clique(4))
                    .unwrap()
                    .is_clean());
            }
            other => panic!("expected counterexample, got {other:?}"),
        }
    }

    #[test]
    fn ramsey_path_vs_k4() {
        let p5 = loose_path(5, 3).unwrap();
        match ramsey_number(&p5, 4, &SearchConfig::default()).unwrap() {
            RamseyOutcome::Exact {
                value, certificate, ..
            } => {
                assert_eq!(value, 6);
                assert_eq!(certificate.order(), 5);
                assert!(verify_witness(&certificate, &p5, BlueTarget::Clique(4))
                    .unwrap()
                    .is_clean());
            }
            other => panic!("expected exact value, got {other:?}"),
        }
    }

    #[test]
    fn ramsey_loose_cycle_vs_k4() {
        let c4 = loose_cycle_c4();
        match ramsey_number(&c4, 4, &SearchConfig::default()).unwrap() {
            RamseyOutcome::Exact { value, .. } => assert_eq!(value, 5),
            other => panic!("expected exact value, got {other:?}"),
        }
    }

    #[test]
    fn graph_anchor_case() {
        // Classical sanity anchor in uniformity 2: R(P_3, K_3) = 5.
        let p3 = loose_path(3, 2).unwrap();
        match ramsey_number(&p3, 3, &SearchConfig::default()).unwrap() {
            RamseyOutcome::Exact { value, .. } => assert_eq!(value, 5),
            other => panic!("expected exact value, got {other:?}"),
        }
    }

    #[test]
    fn budget_is_a_verdict_not_a_hang() {
        let p5 = loose_path(5, 3).unwrap();
        let cfg = SearchConfig {
            node_budget: 10,
            ..SearchConfig::default()
        };
        let res = arrows(6, &p5, 4, &cfg).unwrap();
        assert_eq!(res.verdict, ArrowingVerdict::BudgetExhausted);
        assert!(res.nodes >= 10);
        match ramsey_number(&p5, 4, &cfg).unwrap() {
            RamseyOutcome::Exhausted { known_lower, .. } => assert_eq!(known_lower, 6),
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn options_do_not_change_verdicts() {
        let p5 = loose_path(5, 3).unwrap();
        for p in [5usize, 6] {
            let mut kinds = Vec::new();
            for symmetry in [false, true] {
                for edge_order in [EdgeOrder::Colex, EdgeOrder::DegreeGuided] {
                    let cfg = SearchConfig {
                        symmetry,
                        edge_order,
                        ..SearchConfig::default()
                    };
                    let res = arrows(p, &p5, 4, &cfg).unwrap();
                    kinds.push(matches!(res.verdict, ArrowingVerdict::Arrows));
                    if let ArrowingVerdict::Counterexample(w) = res.verdict {
                        assert!(verify_witness(&w, &p5, BlueTarget::Clique(4))
                            .unwrap()
                            .is_clean());
                    }
                }
            }
            assert!(kinds.windows(2).all(|k| k[0] == k[1]));
        }
    }

    #[test]
    fn edgeless_pattern_short_circuit() {
        let edgeless = Hypergraph::empty(3, 3).unwrap();
        let cfg = SearchConfig::default();
        assert_eq!(
            arrows(3, &edgeless, 4, &cfg).unwrap().verdict,
            ArrowingVerdict::Arrows
        );
        match arrows(2, &edgeless, 4, &cfg).unwrap().verdict {
            ArrowingVerdict::Counterexample(w) => assert_eq!(w.order(), 2),
            other => panic!("expected counterexample, got {other:?}"),
        }
    }

    #[test]
    fn matching_numbers() {
        let all_red = TwoColoring::all_red(7, 3).unwrap();
        assert_eq!(independence_check(&all_red), 2);
        let all_blue = TwoColoring::all_blue(7, 3).unwrap();
        assert_eq!(independence_check(&all_blue), 0);
        let cubic = cubic_residue_witness(2).unwrap();
        assert_eq!(independence_check(&cubic), 2);
        assert_eq!(
            max_disjoint_edges(&Hypergraph::complete(9, 3).unwrap()),
            3
        );
        assert_eq!(max_disjoint_edges(&loose_path(9, 3).unwrap()), 2);
    }

    #[test]
    fn rejects_degenerate_blue_side() {
        let p5 = loose_path(5, 3).unwrap();
        assert!(arrows(5, &p5, 2, &SearchConfig::default()).is_err());
        assert!(ramsey_number(&p5, 2, &SearchConfig::default()).is_err());
    }
}
