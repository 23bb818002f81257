//! Weak proper vertex colorings.
//!
//! A weak proper coloring leaves no hyperedge monochromatic. This module
//! computes the weak chromatic number and the minimum color-class size over
//! all optimal colorings, by exhaustive canonical backtracking, with closed
//! forms for complete hypergraphs.

use crate::hypergraph::Hypergraph;
use crate::{CoreError, Result};

/// Default order cap for the exponential searches.
pub const DEFAULT_ORDER_CAP: usize = 12;

/// A vertex coloring together with its palette size. Color indices are
/// canonical: colors appear in first-use order along the vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakColoring {
    pub assignment: Vec<usize>,
    pub color_count: usize,
}

impl WeakColoring {
    /// Checks the coloring against a host: right length, palette respected
    /// and fully used, and no monochromatic hyperedge.
    pub fn is_valid_for(&self, h: &Hypergraph) -> bool {
        if self.assignment.len() != h.order() {
            return false;
        }
        if self.assignment.iter().any(|&c| c >= self.color_count) {
            return false;
        }
        let mut seen = vec![false; self.color_count];
        for &c in &self.assignment {
            seen[c] = true;
        }
        if seen.iter().any(|&s| !s) {
            return false;
        }
        h.edges().iter().all(|e| {
            let first = self.assignment[e.vertices()[0]];
            !e.vertices().iter().all(|&v| self.assignment[v] == first)
        })
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.color_count];
        for &c in &self.assignment {
            counts[c] += 1;
        }
        counts
    }
}

/// χ_w of the complete hypergraph: each color class holds at most r−1
/// vertices, so ⌈n/(r−1)⌉ colors are needed and block coloring suffices.
pub fn chi_w_complete(n: usize, r: usize) -> usize {
    debug_assert!(r >= 2);
    (n + r - 2) / (r - 1)
}

/// t of the complete hypergraph: writing n = q(r−1)+k with 0 ≤ k < r−1, the
/// minimum class size over optimal colorings is k when k ≠ 0 and r−1 when
/// the classes divide evenly.
pub fn t_complete(n: usize, r: usize) -> usize {
    debug_assert!(r >= 2 && n >= 1);
    let k = n % (r - 1);
    if k == 0 {
        r - 1
    } else {
        k
    }
}

/// Weak chromatic number with the default order cap, plus the
/// lexicographically least optimal coloring as a witness. Complete hosts
/// route to the closed form regardless of cap.
pub fn weak_chromatic_number(h: &Hypergraph) -> Result<(usize, WeakColoring)> {
    weak_chromatic_number_with_cap(h, DEFAULT_ORDER_CAP)
}

pub fn weak_chromatic_number_with_cap(
    h: &Hypergraph,
    cap: usize,
) -> Result<(usize, WeakColoring)> {
    if h.is_complete() {
        let chi = chi_w_complete(h.order(), h.uniformity());
        let r = h.uniformity();
        let assignment = (0..h.order()).map(|v| v / (r - 1)).collect();
        return Ok((
            chi,
            WeakColoring {
                assignment,
                color_count: chi,
            },
        ));
    }
    weak_chromatic_number_by_search(h, cap)
}

/// Pure search variant: no closed-form shortcut, used to cross-check the
/// closed forms against first principles.
pub fn weak_chromatic_number_by_search(
    h: &Hypergraph,
    cap: usize,
) -> Result<(usize, WeakColoring)> {
    if h.order() > cap {
        return Err(CoreError::CapExceeded {
            order: h.order(),
            cap,
        });
    }
    if h.order() == 0 {
        return Ok((
            0,
            WeakColoring {
                assignment: Vec::new(),
                color_count: 0,
            },
        ));
    }
    let edges_by_max = edges_by_max_vertex(h);
    // Block coloring with classes of size r−1 is always proper, so the loop
    // below terminates at or before the complete-host value.
    let ceiling = chi_w_complete(h.order(), h.uniformity());
    for c in 1..=ceiling {
        let mut assignment = vec![0usize; h.order()];
        let mut witness = None;
        enumerate_canonical(h, &edges_by_max, c, 0, 0, &mut assignment, &mut |a| {
            witness = Some(a.to_vec());
            true
        });
        if let Some(assignment) = witness {
            return Ok((
                c,
                WeakColoring {
                    assignment,
                    color_count: c,
                },
            ));
        }
    }
    unreachable!("block coloring guarantees a proper coloring at the ceiling")
}

/// Minimum color-class size over all colorings using exactly χ_w colors.
/// Complete hosts route to the closed form regardless of cap.
pub fn min_color_class(h: &Hypergraph) -> Result<usize> {
    min_color_class_with_cap(h, DEFAULT_ORDER_CAP)
}

pub fn min_color_class_with_cap(h: &Hypergraph, cap: usize) -> Result<usize> {
    if h.order() >= 1 && h.is_complete() {
        return Ok(t_complete(h.order(), h.uniformity()));
    }
    min_color_class_by_search(h, cap)
}

/// Pure search variant of [`min_color_class`]: enumerates every optimal
/// canonical coloring, keeping the smallest class seen. Enumerating
/// canonical representatives only is enough, because permuting colors
/// permutes the class sizes.
pub fn min_color_class_by_search(h: &Hypergraph, cap: usize) -> Result<usize> {
    if h.order() == 0 {
        return Ok(0);
    }
    let (chi, _) = weak_chromatic_number_by_search(h, cap)?;
    let edges_by_max = edges_by_max_vertex(h);
    let mut best = usize::MAX;
    let mut assignment = vec![0usize; h.order()];
    enumerate_canonical(h, &edges_by_max, chi, 0, 0, &mut assignment, &mut |a| {
        let mut counts = vec![0usize; chi];
        for &c in a {
            counts[c] += 1;
        }
        let smallest = counts.into_iter().min().unwrap_or(0);
        best = best.min(smallest);
        false
    });
    Ok(best)
}

/// For each vertex, the edges whose maximum vertex it is; such an edge can
/// be checked as soon as that vertex receives a color.
fn edges_by_max_vertex(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut by_max = vec![Vec::new(); h.order()];
    for (i, e) in h.edges().iter().enumerate() {
        let &max = e.vertices().last().expect("edges are nonempty");
        by_max[max].push(i);
    }
    by_max
}

/// Backtracks over canonical colorings with at most `c` colors: vertex v may
/// reuse any color seen so far or open the next fresh one. Calls `visit` at
/// every complete proper coloring; a `true` return stops the enumeration.
fn enumerate_canonical(
    h: &Hypergraph,
    edges_by_max: &[Vec<usize>],
    c: usize,
    v: usize,
    used: usize,
    assignment: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if v == h.order() {
        return visit(assignment);
    }
    let limit = (used + 1).min(c);
    for color in 0..limit {
        assignment[v] = color;
        let ok = edges_by_max[v].iter().all(|&ei| {
            let e = h.edges()[ei].vertices();
            let first = assignment[e[0]];
            !e.iter().all(|&u| assignment[u] == first)
        });
        if ok
            && enumerate_canonical(
                h,
                edges_by_max,
                c,
                v + 1,
                used.max(color + 1),
                assignment,
                visit,
            )
        {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::loose_path;

    #[test]
    fn complete_hosts_match_closed_forms() {
        for r in [2usize, 3, 4] {
            for n in 1..=8 {
                let k = Hypergraph::complete(n, r).unwrap();
                let (chi, w) = weak_chromatic_number_by_search(&k, 12).unwrap();
                assert_eq!(chi, chi_w_complete(n, r), "chi mismatch at n={n} r={r}");
                assert!(w.is_valid_for(&k));
                let t = min_color_class_by_search(&k, 12).unwrap();
                assert_eq!(t, t_complete(n, r), "t mismatch at n={n} r={r}");
            }
        }
    }

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(chi_w_complete(7, 3), 4);
        assert_eq!(t_complete(7, 3), 1);
        assert_eq!(chi_w_complete(8, 3), 4);
        assert_eq!(t_complete(8, 3), 2);
        assert_eq!(chi_w_complete(6, 2), 6);
        assert_eq!(t_complete(6, 2), 1);
        assert_eq!(chi_w_complete(4, 3), 2);
        assert_eq!(t_complete(4, 3), 2);
        assert_eq!(t_complete(5, 3), 1);
    }

    #[test]
    fn t_is_periodic_in_n() {
        for r in [2usize, 3, 4] {
            for n in r + 1..=8 {
                assert_eq!(t_complete(n, r), t_complete(n - r + 1, r));
            }
        }
    }

    #[test]
    fn sparse_hosts() {
        let p5 = loose_path(5, 3).unwrap();
        let (chi, w) = weak_chromatic_number(&p5).unwrap();
        assert_eq!(chi, 2);
        assert!(w.is_valid_for(&p5));
        // Lex-least optimal coloring: all zeros is improper, so vertex 2
        // (the max of the first edge) is the first forced deviation.
        assert_eq!(w.assignment, vec![0, 0, 1, 0, 0]);

        let edgeless = Hypergraph::empty(4, 3).unwrap();
        let (chi, w) = weak_chromatic_number(&edgeless).unwrap();
        assert_eq!(chi, 1);
        assert_eq!(w.class_sizes(), vec![4]);
        assert_eq!(min_color_class(&edgeless).unwrap(), 4);
    }

    #[test]
    fn min_class_scans_all_optimal_colorings() {
        // For the loose path, one optimal coloring isolates a single vertex.
        let p5 = loose_path(5, 3).unwrap();
        assert_eq!(min_color_class(&p5).unwrap(), 1);
    }

    #[test]
    fn cap_honored_except_for_complete() {
        let k13 = Hypergraph::complete(13, 3).unwrap();
        let (chi, _) = weak_chromatic_number(&k13).unwrap();
        assert_eq!(chi, 7);
        assert_eq!(min_color_class(&k13).unwrap(), 1);

        let mut edges: Vec<Vec<usize>> = k13
            .edges()
            .iter()
            .map(|e| e.vertices().to_vec())
            .collect();
        edges.pop();
        let near = Hypergraph::new(13, 3, edges).unwrap();
        assert!(matches!(
            weak_chromatic_number(&near),
            Err(CoreError::CapExceeded { order: 13, cap: 12 })
        ));
    }

    #[test]
    fn order_zero_is_degenerate() {
        let h = Hypergraph::empty(0, 3).unwrap();
        let (chi, w) = weak_chromatic_number(&h).unwrap();
        assert_eq!(chi, 0);
        assert!(w.assignment.is_empty());
        assert_eq!(min_color_class(&h).unwrap(), 0);
    }
}
