//! Subhypergraph embedding, canonical forms, and isomorphism.
//!
//! Embeddings here are "not necessarily induced": an injection of pattern
//! vertices into host vertices such that every pattern edge maps onto a host
//! edge. The host may have extra edges among the image.

use crate::combin::{binomial, colex_rank};
use crate::hypergraph::Hypergraph;

/// Canonical edge-rank sequence: the lexicographically least sorted rank
/// vector over all relabelings. Two hypergraphs of equal order and
/// uniformity are isomorphic exactly when their canonical forms agree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub r: usize,
    pub ranks: Vec<u64>,
}

/// Orders pattern vertices so that each one after the first touches an
/// already-placed vertex whenever its component allows, which lets the
/// embedding search check edges as soon as they are fully placed.
fn pattern_order(pat: &Hypergraph) -> Vec<usize> {
    let p = pat.order();
    let deg = pat.degrees();
    let mut order: Vec<usize> = Vec::with_capacity(p);
    let mut placed = vec![false; p];
    while order.len() < p {
        // Prefer the vertex with most edges already fully inside the placed
        // set after adding it; break ties toward higher degree, then lower
        // index. Isolated and fresh-component vertices enter when nothing
        // touches the placed set.
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..p {
            if placed[v] {
                continue;
            }
            let gain = pat
                .edges()
                .iter()
                .filter(|e| {
                    e.contains(v) && e.vertices().iter().all(|&u| u == v || placed[u])
                })
                .count();
            let key = (gain, deg[v], p - v);
            if best.map_or(true, |(g, d, i)| key > (g, d, i)) {
                best = Some(key);
            }
        }
        let (_, _, inv_idx) = best.unwrap();
        let v = p - inv_idx;
        placed[v] = true;
        order.push(v);
    }
    order
}

/// Decides whether `pat` embeds into `host` (edge-preserving injection).
pub fn contains_sub(host: &Hypergraph, pat: &Hypergraph) -> bool {
    find_embedding(host, pat).is_some()
}

/// Finds one embedding of `pat` into `host`, as a map indexed by pattern
/// vertex, or `None` when no embedding exists.
pub fn find_embedding(host: &Hypergraph, pat: &Hypergraph) -> Option<Vec<usize>> {
    if pat.uniformity() != host.uniformity() || pat.order() > host.order() {
        return None;
    }
    if pat.edge_count() > host.edge_count() {
        return None;
    }
    let order = pattern_order(pat);
    let host_deg = host.degrees();
    let pat_deg = pat.degrees();

    // For each position, the pattern edges that become fully placed there.
    let mut pos_of = vec![0usize; pat.order()];
    for (i, &v) in order.iter().enumerate() {
        pos_of[v] = i;
    }
    let mut check_at: Vec<Vec<&crate::hypergraph::Hyperedge>> = vec![Vec::new(); pat.order()];
    for e in pat.edges() {
        let last = e.vertices().iter().map(|&v| pos_of[v]).max().unwrap();
        check_at[last].push(e);
    }

    let mut image = vec![usize::MAX; pat.order()];
    let mut used = vec![false; host.order()];
    let mut choice = vec![0usize; pat.order()];
    let mut depth = 0usize;
    loop {
        if depth == pat.order() {
            return Some(image);
        }
        let v = order[depth];
        let mut advanced = false;
        for cand in choice[depth]..host.order() {
            if used[cand] || host_deg[cand] < pat_deg[v] {
                continue;
            }
            image[v] = cand;
            let ok = check_at[depth].iter().all(|e| {
                let mut mapped: Vec<usize> =
                    e.vertices().iter().map(|&u| image[u]).collect();
                mapped.sort_unstable();
                host.has_edge(&mapped)
            });
            if ok {
                used[cand] = true;
                choice[depth] = cand + 1;
                depth += 1;
                if depth < pat.order() {
                    choice[depth] = 0;
                }
                advanced = true;
                break;
            }
        }
        if advanced {
            continue;
        }
        // Exhausted candidates at this depth; backtrack.
        if depth == 0 {
            return None;
        }
        depth -= 1;
        let prev = order[depth];
        used[image[prev]] = false;
        image[prev] = usize::MAX;
    }
}

/// Computes the canonical form by branch-and-bound over vertex relabelings.
///
/// The search assigns new labels one at a time. Once a prefix of labels is
/// fixed, every pattern edge lying inside the prefix has a determined rank,
/// and those ranks only grow as the prefix extends, so comparing the sorted
/// determined prefix against the best-so-far is a sound prune.
pub fn canonical_form(h: &Hypergraph) -> CanonicalForm {
    let p = h.order();
    let r = h.uniformity();
    let m = h.edge_count();
    if m == 0 || h.is_complete() {
        // Every relabeling fixes these, so the identity already canonical.
        return CanonicalForm {
            order: p,
            r,
            ranks: h.edge_ranks().to_vec(),
        };
    }

    let deg = h.degrees();
    // Candidate order: try high-degree vertices early; canonical labels
    // then tend to put dense structure on low labels, shrinking ranks fast.
    let mut by_degree: Vec<usize> = (0..p).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));

    let mut best: Option<Vec<u64>> = None;
    // chosen[i] = original vertex relabeled to i.
    let mut chosen: Vec<usize> = Vec::with_capacity(p);
    let mut used = vec![false; p];
    let mut choice_idx = vec![0usize; p];
    // determined[d] = sorted ranks of edges fully inside the first d labels.
    let mut determined: Vec<Vec<u64>> = vec![Vec::new(); p + 1];

    let mut depth = 0usize;
    loop {
        if depth == p {
            let full = &determined[p];
            debug_assert_eq!(full.len(), m);
            if best.as_ref().map_or(true, |b| full < b) {
                best = Some(full.clone());
            }
            depth -= 1;
            let v = chosen.pop().unwrap();
            used[v] = false;
            continue;
        }
        let mut advanced = false;
        while choice_idx[depth] < p {
            let cand = by_degree[choice_idx[depth]];
            choice_idx[depth] += 1;
            if used[cand] {
                continue;
            }
            // Tentatively relabel cand -> depth.
            chosen.push(cand);
            used[cand] = true;
            let mut det = determined[depth].clone();
            let mut new_label = vec![usize::MAX; p];
            for (lbl, &orig) in chosen.iter().enumerate() {
                new_label[orig] = lbl;
            }
            for e in h.edges() {
                if e.contains(cand)
                    && e.vertices().iter().all(|&u| new_label[u] != usize::MAX)
                {
                    let mut mapped: Vec<usize> =
                        e.vertices().iter().map(|&u| new_label[u]).collect();
                    mapped.sort_unstable();
                    det.push(colex_rank(&mapped));
                }
            }
            det.sort_unstable();
            // Every undetermined edge touches a label >= depth, so its rank
            // is at least C(depth+1, r) while determined ranks stay below
            // it. The sorted full vector therefore starts with `det`, and a
            // lexicographically larger prefix can never beat the best.
            let prune = best.as_ref().map_or(false, |b| {
                det.iter()
                    .zip(b.iter())
                    .find(|(a, bb)| a != bb)
                    .map_or(false, |(a, bb)| a > bb)
            });
            if prune {
                used[cand] = false;
                chosen.pop();
                continue;
            }
            determined[depth + 1] = det;
            depth += 1;
            if depth < p {
                choice_idx[depth] = 0;
            }
            advanced = true;
            break;
        }
        if advanced {
            continue;
        }
        if depth == 0 {
            break;
        }
        depth -= 1;
        let v = chosen.pop().unwrap();
        used[v] = false;
    }

    CanonicalForm {
        order: p,
        r,
        ranks: best.expect("at least one relabeling exists"),
    }
}

/// Isomorphism via cheap invariants, then canonical-form equality.
pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.order() != b.order()
        || a.uniformity() != b.uniformity()
        || a.edge_count() != b.edge_count()
    {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// Number of automorphisms, counted by embedding the hypergraph into itself
/// with an exact edge-count match. Exposed for census cross-checks.
pub fn automorphism_count(h: &Hypergraph) -> u64 {
    let p = h.order();
    if h.edge_count() == 0 || h.is_complete() {
        return factorial(p);
    }
    let deg = h.degrees();
    let mut count = 0u64;
    let mut image = vec![usize::MAX; p];
    let mut used = vec![false; p];
    count_automorphisms(h, &deg, 0, &mut image, &mut used, &mut count);
    count
}

fn count_automorphisms(
    h: &Hypergraph,
    deg: &[usize],
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    count: &mut u64,
) {
    let p = h.order();
    if v == p {
        *count += 1;
        return;
    }
    for cand in 0..p {
        if used[cand] || deg[cand] != deg[v] {
            continue;
        }
        image[v] = cand;
        let ok = h.edges().iter().all(|e| {
            if !e.contains(v) || e.vertices().iter().any(|&u| u > v) {
                return true;
            }
            let mut mapped: Vec<usize> = e.vertices().iter().map(|&u| image[u]).collect();
            mapped.sort_unstable();
            h.has_edge(&mapped)
        });
        if ok {
            used[cand] = true;
            count_automorphisms(h, deg, v + 1, image, used, count);
            used[cand] = false;
        }
        image[v] = usize::MAX;
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Sanity check used by tests: the canonical ranks must describe a
/// hypergraph isomorphic to the input.
pub fn canonical_rebuild(h: &Hypergraph) -> Hypergraph {
    let c = canonical_form(h);
    Hypergraph::from_edge_ranks(c.order, c.r, &c.ranks).expect("canonical ranks are valid")
}

/// Total r-subsets of the host not present as edges; handy for complements.
pub fn missing_edge_count(h: &Hypergraph) -> u64 {
    binomial(h.order(), h.uniformity()) - h.edge_count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h3(order: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(order, 3, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn path_embeds_in_complete() {
        let host = Hypergraph::complete(6, 3).unwrap();
        let pat = h3(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert!(contains_sub(&host, &pat));
        let found = find_embedding(&host, &pat).unwrap();
        let mut sorted = found.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 5);
    }

    #[test]
    fn no_embedding_when_host_too_sparse() {
        let host = h3(6, &[&[0, 1, 2], &[3, 4, 5]]);
        let pat = h3(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert!(!contains_sub(&host, &pat));
    }

    #[test]
    fn embedding_handles_isolated_pattern_vertices() {
        let host = h3(4, &[&[0, 1, 2]]);
        let pat = h3(4, &[&[0, 1, 2]]);
        assert!(contains_sub(&host, &pat));
        let bigger = Hypergraph::new(5, 3, vec![vec![0, 1, 2]]).unwrap();
        assert!(!contains_sub(&pat, &bigger));
    }

    #[test]
    fn relabeled_paths_share_canonical_form() {
        let a = h3(5, &[&[0, 1, 2], &[2, 3, 4]]);
        let b = h3(5, &[&[4, 3, 1], &[1, 0, 2]]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn star_and_path_differ() {
        // With two edges the star and the path coincide; three edges are the
        // first point where the shapes separate.
        let two_star = h3(5, &[&[0, 1, 2], &[0, 3, 4]]);
        let two_path = h3(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert!(is_isomorphic(&two_star, &two_path));
        let star = h3(7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        let path = h3(7, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 6]]);
        assert!(!is_isomorphic(&star, &path));
    }

    #[test]
    fn canonical_rebuild_is_isomorphic() {
        let g = h3(7, &[&[0, 1, 6], &[1, 2, 3], &[3, 4, 5]]);
        let rebuilt = canonical_rebuild(&g);
        assert!(is_isomorphic(&g, &rebuilt));
    }

    #[test]
    fn automorphism_counts() {
        // Single-edge 3-graph on exactly its own vertices: all 3! = 6 maps.
        let single = h3(3, &[&[0, 1, 2]]);
        assert_eq!(automorphism_count(&single), 6);
        // Loose path with two edges: swap the two end pairs independently,
        // plus the flip exchanging the edges: 2 * 2 * 2 = 8.
        let path = h3(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(automorphism_count(&path), 8);
        // Complete K_4^(3): all 24 permutations.
        let k4 = Hypergraph::complete(4, 3).unwrap();
        assert_eq!(automorphism_count(&k4), 24);
    }

    #[test]
    fn missing_edges_complement_count() {
        let g = h3(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(missing_edge_count(&g), 10 - 2);
    }
}
