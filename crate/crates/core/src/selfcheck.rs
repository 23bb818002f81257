//! Self-contained acceptance checks: the published table values embedded as
//! constants, plus eight machine-checkable criteria covering search, witness
//! constructions, table reproduction, closed forms, recognizer agreement,
//! degree-threshold embeddings, cross-bound consistency, and the honest
//! treatment of values beyond exhaustive search range.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{
    best_interval, c4_goodness, goodness_target, loh_upper, BoundSource, Direction,
    GoodnessStatus, TreeFamily,
};
use crate::coloring::{
    chi_w_complete, min_color_class_by_search, t_complete, weak_chromatic_number_by_search,
};
use crate::combin::{binomial, colex_subsets};
use crate::iso::{canonical_form, find_embedding, CanonicalForm};
use crate::search::{ramsey_number, RamseyOutcome, SearchConfig};
use crate::trees::{enumerate_trees, is_tree, loose_cycle_c4, loose_path, TreeMethod};
use crate::witness::{burr_witness, cubic_residue_witness, verify_witness, BlueTarget};
use crate::{Hypergraph, Result};

/// One table cell: both endpoints of the published interval (equal when the
/// value is exact).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    pub m: usize,
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
}

const fn cell(m: usize, n: usize, lower: usize, upper: usize) -> TableEntry {
    TableEntry { m, n, lower, upper }
}

/// Best known intervals for R(T, K_n; 3) over arbitrary 3-uniform trees of
/// order m, rows m = 5..15 odd, columns n = 4..10.
pub const TABLE_TREE: [TableEntry; 42] = [
    cell(5, 4, 6, 6),
    cell(5, 5, 9, 9),
    cell(5, 6, 10, 10),
    cell(5, 7, 13, 13),
    cell(5, 8, 14, 14),
    cell(5, 9, 17, 17),
    cell(5, 10, 18, 18),
    cell(7, 4, 8, 9),
    cell(7, 5, 13, 13),
    cell(7, 6, 14, 15),
    cell(7, 7, 19, 19),
    cell(7, 8, 20, 21),
    cell(7, 9, 25, 25),
    cell(7, 10, 26, 27),
    cell(9, 4, 10, 12),
    cell(9, 5, 17, 17),
    cell(9, 6, 18, 20),
    cell(9, 7, 25, 25),
    cell(9, 8, 26, 28),
    cell(9, 9, 33, 33),
    cell(9, 10, 34, 36),
    cell(11, 4, 12, 15),
    cell(11, 5, 21, 21),
    cell(11, 6, 22, 25),
    cell(11, 7, 31, 31),
    cell(11, 8, 32, 35),
    cell(11, 9, 41, 41),
    cell(11, 10, 42, 45),
    cell(13, 4, 14, 18),
    cell(13, 5, 25, 25),
    cell(13, 6, 26, 30),
    cell(13, 7, 37, 37),
    cell(13, 8, 38, 42),
    cell(13, 9, 49, 49),
    cell(13, 10, 50, 54),
    cell(15, 4, 16, 21),
    cell(15, 5, 29, 29),
    cell(15, 6, 30, 35),
    cell(15, 7, 43, 43),
    cell(15, 8, 44, 49),
    cell(15, 9, 57, 57),
    cell(15, 10, 58, 63),
];

/// Same grid for the loose path, where the path-specific exact values and
/// upper bounds sharpen several columns.
pub const TABLE_PATH: [TableEntry; 42] = [
    cell(5, 4, 6, 6),
    cell(5, 5, 9, 9),
    cell(5, 6, 10, 10),
    cell(5, 7, 13, 13),
    cell(5, 8, 14, 14),
    cell(5, 9, 17, 17),
    cell(5, 10, 18, 18),
    cell(7, 4, 8, 8),
    cell(7, 5, 13, 13),
    cell(7, 6, 14, 14),
    cell(7, 7, 19, 19),
    cell(7, 8, 20, 20),
    cell(7, 9, 25, 25),
    cell(7, 10, 26, 27),
    cell(9, 4, 10, 10),
    cell(9, 5, 17, 17),
    cell(9, 6, 18, 19),
    cell(9, 7, 25, 25),
    cell(9, 8, 26, 27),
    cell(9, 9, 33, 33),
    cell(9, 10, 34, 36),
    cell(11, 4, 12, 12),
    cell(11, 5, 21, 21),
    cell(11, 6, 22, 24),
    cell(11, 7, 31, 31),
    cell(11, 8, 32, 34),
    cell(11, 9, 41, 41),
    cell(11, 10, 42, 45),
    cell(13, 4, 14, 14),
    cell(13, 5, 25, 25),
    cell(13, 6, 26, 29),
    cell(13, 7, 37, 37),
    cell(13, 8, 38, 41),
    cell(13, 9, 49, 49),
    cell(13, 10, 50, 54),
    cell(15, 4, 16, 16),
    cell(15, 5, 29, 29),
    cell(15, 6, 30, 34),
    cell(15, 7, 43, 43),
    cell(15, 8, 44, 48),
    cell(15, 9, 57, 57),
    cell(15, 10, 58, 63),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionOutcome {
    Pass,
    Fail,
    BudgetExhausted,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub outcome: CriterionOutcome,
    pub detail: String,
}

fn report(
    id: usize,
    name: &'static str,
    body: impl FnOnce() -> Result<(CriterionOutcome, String)>,
) -> CriterionReport {
    let (outcome, detail) = match body() {
        Ok(pair) => pair,
        Err(e) => (CriterionOutcome::Fail, format!("error: {e}")),
    };
    CriterionReport {
        id,
        name,
        outcome,
        detail,
    }
}

/// Exact small values recomputed by exhaustive pruned search.
pub fn criterion_1(budget: u64) -> CriterionReport {
    report(1, "exact small values by search", || {
        let cfg = SearchConfig {
            node_budget: budget,
            ..SearchConfig::default()
        };
        let mut cases: Vec<(Hypergraph, usize, usize)> = vec![
            (loose_cycle_c4(), 4, 5),
            (loose_path(5, 3)?, 4, 6),
            (loose_path(3, 2)?, 3, 5),
        ];
        for n in 3..=6 {
            cases.push((loose_path(3, 3)?, n, n));
        }
        let mut total_nodes = 0u64;
        for (pattern, n, expected) in &cases {
            match ramsey_number(pattern, *n, &cfg)? {
                RamseyOutcome::Exact { value, nodes, .. } => {
                    total_nodes += nodes;
                    if value != *expected {
                        return Ok((
                            CriterionOutcome::Fail,
                            format!(
                                "pattern of order {} vs K_{n}: search found {value}, expected {expected}",
                                pattern.order()
                            ),
                        ));
                    }
                }
                RamseyOutcome::Exhausted { known_lower, .. } => {
                    return Ok((
                        CriterionOutcome::BudgetExhausted,
                        format!(
                            "budget ran out on pattern of order {} vs K_{n} at lower bound {known_lower}",
                            pattern.order()
                        ),
                    ));
                }
            }
        }
        Ok((
            CriterionOutcome::Pass,
            format!("{} exact values confirmed, {total_nodes} nodes total", cases.len()),
        ))
    })
}

/// Block witnesses for complete-vs-tree pairs and the residue witness.
pub fn criterion_2() -> CriterionReport {
    report(2, "witness validity", || {
        let mut verified = 0usize;
        let mut skipped = Vec::new();
        for host_n in [4usize, 5] {
            let host = Hypergraph::complete(host_n, 3)?;
            let chi = chi_w_complete(host_n, 3);
            let t = t_complete(host_n, 3);
            for m in [1usize, 3, 5, 7] {
                for tree in enumerate_trees(m, 3)? {
                    let c = tree.largest_component_order();
                    if c < t {
                        skipped.push(format!("K_{host_n} vs order-{m} tree (c = {c} < t = {t})"));
                        continue;
                    }
                    let w = burr_witness(chi, t, c, 3)?;
                    let verdict = verify_witness(&w, &host, BlueTarget::Pattern(&tree))?;
                    if !verdict.is_clean() {
                        return Ok((
                            CriterionOutcome::Fail,
                            format!(
                                "block witness of order {} dirty for K_{host_n} vs order-{m} tree: {verdict:?}",
                                w.order()
                            ),
                        ));
                    }
                    verified += 1;
                }
            }
        }
        let w = cubic_residue_witness(2)?;
        let verdict = verify_witness(&w, &loose_cycle_c4(), BlueTarget::Clique(5))?;
        if !verdict.is_clean() {
            return Ok((
                CriterionOutcome::Fail,
                format!("residue witness on 7 vertices is dirty: {verdict:?}"),
            ));
        }
        if w.order() != goodness_target(4, 5, 3).target
            || c4_goodness(5) != GoodnessStatus::NotGood
        {
            return Ok((
                CriterionOutcome::Fail,
                "residue witness does not beat the goodness value for n = 5".into(),
            ));
        }
        Ok((
            CriterionOutcome::Pass,
            format!(
                "{verified} block witnesses clean ({} inapplicable: {}), residue witness beats the goodness value at n = 5",
                skipped.len(),
                skipped.join("; ")
            ),
        ))
    })
}

fn family_formula(family: TreeFamily, j: usize, n: usize) -> (usize, usize) {
    let tree = match n {
        4 => (2 * j + 2, 3 * j),
        5 => (4 * j + 1, 4 * j + 1),
        6 => (4 * j + 2, 5 * j),
        7 => (6 * j + 1, 6 * j + 1),
        8 => (6 * j + 2, 7 * j),
        9 => (8 * j + 1, 8 * j + 1),
        10 => (8 * j + 2, 9 * j),
        _ => unreachable!("columns run 4..10"),
    };
    if family == TreeFamily::Tree {
        return tree;
    }
    match n {
        4 => (2 * j + 2, 2 * j + 2),
        6 if j >= 3 => (4 * j + 2, 5 * j - 1),
        6 => (10, 10),
        8 if j >= 3 => (6 * j + 2, 7 * j - 1),
        8 => (14, 14),
        _ => tree,
    }
}

/// Engine output equals the embedded tables cell by cell, and the symbolic
/// row formulas hold at every j in range.
pub fn criterion_3() -> CriterionReport {
    report(3, "table reproduction", || {
        for (family, entries) in [
            (TreeFamily::Tree, &TABLE_TREE),
            (TreeFamily::Path, &TABLE_PATH),
        ] {
            for e in entries.iter() {
                let got = best_interval(family, e.m, e.n, 3)?;
                if (got.interval.lower, got.interval.upper) != (e.lower, e.upper) {
                    return Ok((
                        CriterionOutcome::Fail,
                        format!(
                            "{family} m = {}, n = {}: engine [{}, {}], table [{}, {}]",
                            e.m, e.n, got.interval.lower, got.interval.upper, e.lower, e.upper
                        ),
                    ));
                }
                let j = (e.m - 1) / 2;
                let expected = family_formula(family, j, e.n);
                if (e.lower, e.upper) != expected {
                    return Ok((
                        CriterionOutcome::Fail,
                        format!(
                            "{family} symbolic row at j = {j}, n = {}: formula {expected:?}, table [{}, {}]",
                            e.n, e.lower, e.upper
                        ),
                    ));
                }
            }
        }
        Ok((
            CriterionOutcome::Pass,
            "84 cells match the embedded tables and the symbolic row formulas at j = 2..7".into(),
        ))
    })
}

/// Closed-form chromatic data of complete hosts versus plain search.
pub fn criterion_4() -> CriterionReport {
    report(4, "closed forms versus search", || {
        let mut checked = 0usize;
        for r in [2usize, 3, 4] {
            for n in 1..=8 {
                let host = Hypergraph::complete(n, r)?;
                let (chi, witness) = weak_chromatic_number_by_search(&host, 12)?;
                let t = min_color_class_by_search(&host, 12)?;
                if chi != chi_w_complete(n, r) || t != t_complete(n, r) {
                    return Ok((
                        CriterionOutcome::Fail,
                        format!(
                            "K_{n} uniformity {r}: search ({chi}, {t}), closed form ({}, {})",
                            chi_w_complete(n, r),
                            t_complete(n, r)
                        ),
                    ));
                }
                if !witness.is_valid_for(&host) {
                    return Ok((
                        CriterionOutcome::Fail,
                        format!("search witness invalid for K_{n} uniformity {r}"),
                    ));
                }
                checked += 1;
            }
        }
        Ok((
            CriterionOutcome::Pass,
            format!("{checked} complete hosts agree on both invariants"),
        ))
    })
}

/// The four tree recognizers agree on the exhaustive set of small sparse
/// hypergraphs.
pub fn criterion_5() -> CriterionReport {
    report(5, "tree recognizer agreement", || {
        let methods = [
            TreeMethod::Build,
            TreeMethod::Acyclic,
            TreeMethod::Components,
            TreeMethod::UniquePath,
        ];
        let mut classes: std::collections::BTreeSet<CanonicalForm> = Default::default();
        let mut instances = 0usize;
        let mut trees = 0usize;
        for p in 0..=7usize {
            let slots = binomial(p, 3) as usize;
            for k in 0..=3usize {
                for ranks in colex_subsets(slots, k) {
                    let ranks: Vec<u64> = ranks.iter().map(|&q| q as u64).collect();
                    let h = Hypergraph::from_edge_ranks(p, 3, &ranks)?;
                    if !classes.insert(canonical_form(&h)) {
                        continue;
                    }
                    instances += 1;
                    let verdicts: Vec<bool> = methods.iter().map(|&m| is_tree(&h, m)).collect();
                    if verdicts.iter().any(|&v| v != verdicts[0]) {
                        return Ok((
                            CriterionOutcome::Fail,
                            format!(
                                "recognizers disagree ({verdicts:?}) on order {p}, edges {:?}",
                                h.edges()
                            ),
                        ));
                    }
                    if verdicts[0] {
                        trees += 1;
                    }
                }
            }
        }
        Ok((
            CriterionOutcome::Pass,
            format!(
                "{instances} isomorphism classes (up to 3 edges on up to 7 vertices), all four recognizers agree; {trees} are trees"
            ),
        ))
    })
}

/// Seeded random hosts meeting the degree threshold all embed every tree of
/// the matching order.
pub fn criterion_6() -> CriterionReport {
    report(6, "degree threshold embeddings", || {
        let mut rng = ChaCha8Rng::seed_from_u64(20260816);
        let trees5 = enumerate_trees(5, 3)?;
        let trees7 = enumerate_trees(7, 3)?;
        let mut hosts = 0usize;
        let mut embeddings = 0usize;
        for i in 0..1000usize {
            let m = if i % 2 == 0 { 5 } else { 7 };
            let p = rng.gen_range(m..=8);
            let required = (binomial(p - 1, 2) - binomial(p - m, 2)) as usize;
            let complete = Hypergraph::complete(p, 3)?;
            let mut kept = vec![true; complete.edge_count()];
            let mut degrees = vec![binomial(p - 1, 2) as usize; p];
            let mut order: Vec<usize> = (0..complete.edge_count()).collect();
            order.shuffle(&mut rng);
            for q in order {
                let e = &complete.edges()[q];
                if e.vertices().iter().all(|&v| degrees[v] > required) {
                    kept[q] = false;
                    for &v in e.vertices() {
                        degrees[v] -= 1;
                    }
                }
            }
            let ranks: Vec<u64> = (0..complete.edge_count() as u64)
                .filter(|&q| kept[q as usize])
                .collect();
            let host = Hypergraph::from_edge_ranks(p, 3, &ranks)?;
            debug_assert!(host.min_degree() >= required);
            hosts += 1;
            let trees = if m == 5 { &trees5 } else { &trees7 };
            for tree in trees {
                if find_embedding(&host, tree).is_none() {
                    return Ok((
                        CriterionOutcome::Fail,
                        format!(
                            "host of order {p} with min degree {} misses an order-{m} tree",
                            host.min_degree()
                        ),
                    ));
                }
                embeddings += 1;
            }
        }
        Ok((
            CriterionOutcome::Pass,
            format!("{hosts} seeded hosts, {embeddings} embeddings, zero failures"),
        ))
    })
}

/// Cross-bound consistency over the grid, the odd-column collapse identity,
/// and downward monotonicity of proven goodness.
pub fn criterion_7() -> CriterionReport {
    report(7, "bound consistency", || {
        for family in [TreeFamily::Tree, TreeFamily::Path] {
            for m in (5..=15usize).step_by(2) {
                for n in 4..=10usize {
                    let cell = best_interval(family, m, n, 3)?;
                    for lo in cell
                        .considered
                        .iter()
                        .filter(|b| b.direction == Direction::Lower)
                    {
                        for up in cell
                            .considered
                            .iter()
                            .filter(|b| b.direction == Direction::Upper)
                        {
                            if lo.value > up.value {
                                return Ok((
                                    CriterionOutcome::Fail,
                                    format!(
                                        "{family} m = {m}, n = {n}: {} = {} exceeds {} = {}",
                                        lo.source, lo.value, up.source, up.value
                                    ),
                                ));
                            }
                        }
                    }
                    if cell.status == GoodnessStatus::ProvenGood && n >= 6 {
                        let below = best_interval(family, m, n - 2, 3)?;
                        if below.status != GoodnessStatus::ProvenGood {
                            return Ok((
                                CriterionOutcome::Fail,
                                format!(
                                    "{family} m = {m}: proven good at n = {n} but {} at n = {}",
                                    below.status,
                                    n - 2
                                ),
                            ));
                        }
                    }
                }
            }
        }
        for m in (3..=31usize).step_by(2) {
            for n in (3..=21usize).step_by(2) {
                let loh = loh_upper(m, n, 3)?;
                let target = goodness_target(m, n, 3).target;
                if loh.value != target {
                    return Ok((
                        CriterionOutcome::Fail,
                        format!(
                            "odd-column identity fails at m = {m}, n = {n}: upper {} vs target {target}",
                            loh.value
                        ),
                    ));
                }
            }
        }
        Ok((
            CriterionOutcome::Pass,
            "no crossed bound pairs on the grid; odd columns collapse to the goodness value; proven goodness persists two columns down"
                .into(),
        ))
    })
}

/// Values beyond search range are taken from the bounds engine, but the
/// matching lower-bound witness is machine-verified here.
pub fn criterion_8() -> CriterionReport {
    report(8, "beyond-search values carry verified witnesses", || {
        let w = burr_witness(4, 2, 7, 3)?;
        if w.order() != 19 {
            return Ok((
                CriterionOutcome::Fail,
                format!("expected an order-19 witness, got {}", w.order()),
            ));
        }
        let p7 = loose_path(7, 3)?;
        let verdict = verify_witness(&w, &Hypergraph::complete(8, 3)?, BlueTarget::Pattern(&p7))?;
        if !verdict.is_clean() {
            return Ok((
                CriterionOutcome::Fail,
                format!("order-19 witness is dirty: {verdict:?}"),
            ));
        }
        let cell = best_interval(TreeFamily::Path, 7, 8, 3)?;
        if (cell.interval.lower, cell.interval.upper) != (20, 20)
            || cell.interval.upper_src.source != BoundSource::PathK8Upper
        {
            return Ok((
                CriterionOutcome::Fail,
                format!(
                    "expected the upper bound to pin [20, 20], got [{}, {}] from {}",
                    cell.interval.lower, cell.interval.upper, cell.interval.upper_src.source
                ),
            ));
        }
        Ok((
            CriterionOutcome::Pass,
            "P_7 vs K_8 = 20 is beyond exhaustive search (host order 20, 1140 edge slots); accepted from the path upper bound, with the order-19 block witness verified clean"
                .into(),
        ))
    })
}

/// Runs all eight criteria; `budget` caps the search nodes of the first.
pub fn run_all(budget: u64) -> Vec<CriterionReport> {
    vec![
        criterion_1(budget),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ]
}
