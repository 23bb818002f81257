//! r-uniform hypergraphs on vertex set `{0, .., order-1}`.
//!
//! Hyperedges are r-subsets, stored sorted and ordered by colex rank, so a
//! hypergraph has exactly one in-memory representation and serialization is
//! reproducible byte for byte.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combin::{binomial, colex_rank, colex_unrank, MAX_ORDER};
use crate::{CoreError, Result};

/// A single r-subset of the vertex range, kept strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge {
    vertices: Vec<usize>,
}

impl Hyperedge {
    pub fn new(mut vertices: Vec<usize>, r: usize, order: usize) -> Result<Self> {
        vertices.sort_unstable();
        let distinct = vertices.windows(2).all(|w| w[0] < w[1]);
        if vertices.len() != r || !distinct {
            return Err(CoreError::InvalidEdge {
                edge: vertices,
                r,
                order,
            });
        }
        if let Some(&max) = vertices.last() {
            if max >= order {
                return Err(CoreError::VertexOutOfRange {
                    vertex: max,
                    order,
                });
            }
        }
        Ok(Hyperedge { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn rank(&self) -> u64 {
        colex_rank(&self.vertices)
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An r-uniform hypergraph. Vertices without incident edges are legitimate;
/// the order is part of the object, not derived from the edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph {
    order: usize,
    r: usize,
    edges: Vec<Hyperedge>,
    ranks: Vec<u64>,
}

/// Wire format: `{"order": p, "r": r, "edges": [[v, ..], ..]}` with each edge
/// sorted and the edge list sorted.
#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    order: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = CoreError;

    fn try_from(j: HypergraphJson) -> Result<Self> {
        Hypergraph::new(j.order, j.r, j.edges)
    }
}

impl From<Hypergraph> for HypergraphJson {
    fn from(h: Hypergraph) -> Self {
        HypergraphJson {
            order: h.order,
            r: h.r,
            edges: h.edges.into_iter().map(|e| e.vertices).collect(),
        }
    }
}

impl Hypergraph {
    /// Builds a hypergraph from raw edge lists. Edges are sorted, validated,
    /// and deduplicated (set semantics).
    pub fn new<I>(order: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        if order > MAX_ORDER {
            return Err(CoreError::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        if r < 2 {
            return Err(CoreError::InvalidParameter(format!(
                "uniformity must be at least 2, got {r}"
            )));
        }
        let mut parsed: Vec<Hyperedge> = edges
            .into_iter()
            .map(|e| Hyperedge::new(e, r, order))
            .collect::<Result<_>>()?;
        parsed.sort_by_key(Hyperedge::rank);
        parsed.dedup();
        let ranks = parsed.iter().map(Hyperedge::rank).collect();
        Ok(Hypergraph {
            order,
            r,
            edges: parsed,
            ranks,
        })
    }

    pub fn empty(order: usize, r: usize) -> Result<Self> {
        Hypergraph::new(order, r, Vec::new())
    }

    /// `K_n^{(r)}`: every r-subset is an edge. For `n < r` this is edgeless.
    pub fn complete(order: usize, r: usize) -> Result<Self> {
        let mut h = Hypergraph::empty(order, r)?;
        let count = binomial(order, r);
        h.ranks = (0..count).collect();
        h.edges = h
            .ranks
            .iter()
            .map(|&rank| Hyperedge {
                vertices: colex_unrank(rank, r),
            })
            .collect();
        Ok(h)
    }

    /// Rebuilds a hypergraph from colex ranks (e.g. a canonical form).
    pub fn from_edge_ranks(order: usize, r: usize, ranks: &[u64]) -> Result<Self> {
        Hypergraph::new(order, r, ranks.iter().map(|&rk| colex_unrank(rk, r)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ranks(&self) -> &[u64] {
        &self.ranks
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() as u64 == binomial(self.order, self.r)
    }

    pub fn has_edge_rank(&self, rank: u64) -> bool {
        self.ranks.binary_search(&rank).is_ok()
    }

    /// Membership test for a sorted candidate edge.
    pub fn has_edge(&self, vertices: &[usize]) -> bool {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        vertices.len() == self.r && self.has_edge_rank(colex_rank(vertices))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.order {
            return Err(CoreError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.order];
        for e in &self.edges {
            for &v in e.vertices() {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Minimum degree; 0 for the order-0 hypergraph.
    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn with_edge(&self, vertices: Vec<usize>) -> Result<Self> {
        let mut edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .map(|e| e.vertices().to_vec())
            .collect();
        edges.push(vertices);
        Hypergraph::new(self.order, self.r, edges)
    }

    /// Removes the edge at `index`, keeping all vertices.
    pub fn without_edge_index(&self, index: usize) -> Self {
        let mut h = self.clone();
        h.edges.remove(index);
        h.ranks.remove(index);
        h
    }

    /// Connected components under Berge connectivity, which coincides with
    /// reachability through shared vertices of hyperedges.
    pub fn components(&self) -> ComponentPartition {
        let mut parent: Vec<usize> = (0..self.order).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for e in &self.edges {
            let first = e.vertices()[0];
            for &v in &e.vertices()[1..] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of_root: Vec<Option<usize>> = vec![None; self.order];
        for v in 0..self.order {
            let root = find(&mut parent, v);
            match block_of_root[root] {
                Some(b) => blocks[b].push(v),
                None => {
                    block_of_root[root] = Some(blocks.len());
                    blocks.push(vec![v]);
                }
            }
        }
        ComponentPartition { blocks }
    }

    /// Order of the largest connected component (the statistic `c(H)`).
    pub fn largest_component_order(&self) -> usize {
        self.components().largest_order()
    }

    pub fn is_connected(&self) -> bool {
        self.components().blocks.len() == 1
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s)
            .map_err(|e| CoreError::InvalidParameter(format!("bad hypergraph JSON: {e}")))
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(p={}, r={}; ", self.order, self.r)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Vertex blocks of the component decomposition, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn largest_order(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn block_containing(&self, v: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&v).is_ok())
            .map(Vec::as_slice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(order: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(order, 3, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn edges_are_sorted_and_deduped() {
        let g = Hypergraph::new(5, 3, vec![vec![4, 2, 3], vec![2, 0, 1], vec![1, 0, 2]]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges()[0].vertices(), &[0, 1, 2]);
        assert_eq!(g.edges()[1].vertices(), &[2, 3, 4]);
    }

    #[test]
    fn invalid_edges_are_rejected() {
        assert!(Hypergraph::new(4, 3, vec![vec![0, 1]]).is_err());
        assert!(Hypergraph::new(4, 3, vec![vec![0, 1, 1]]).is_err());
        assert!(Hypergraph::new(4, 3, vec![vec![0, 1, 4]]).is_err());
        assert!(Hypergraph::new(65, 3, Vec::new()).is_err());
        assert!(Hypergraph::new(4, 1, Vec::new()).is_err());
    }

    #[test]
    fn complete_hypergraph_counts() {
        let k7 = Hypergraph::complete(7, 3).unwrap();
        assert_eq!(k7.edge_count(), 35);
        assert!(k7.is_complete());
        let small = Hypergraph::complete(2, 3).unwrap();
        assert_eq!(small.edge_count(), 0);
        assert!(small.is_complete());
    }

    #[test]
    fn degrees_sum_to_r_times_edges() {
        let g = h(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(g.degrees(), vec![1, 1, 2, 1, 1]);
        assert_eq!(g.degree(2).unwrap(), 2);
        assert_eq!(g.degrees().iter().sum::<usize>(), 3 * g.edge_count());
        assert!(g.degree(5).is_err());
    }

    #[test]
    fn components_split_as_expected() {
        let path = h(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(path.components().len(), 1);
        assert_eq!(path.largest_component_order(), 5);

        let two = h(6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert_eq!(two.components().len(), 2);
        assert_eq!(two.largest_component_order(), 3);

        let edgeless = Hypergraph::empty(4, 3).unwrap();
        assert_eq!(edgeless.components().len(), 4);
        assert_eq!(edgeless.largest_component_order(), 1);
    }

    #[test]
    fn removing_an_edge_keeps_vertices() {
        let path = h(5, &[&[0, 1, 2], &[2, 3, 4]]);
        let cut = path.without_edge_index(0);
        assert_eq!(cut.order(), 5);
        assert_eq!(cut.edge_count(), 1);
        assert_eq!(cut.components().len(), 3);
    }

    #[test]
    fn json_round_trip() {
        let g = h(5, &[&[0, 1, 2], &[2, 3, 4]]);
        let s = g.to_json();
        assert_eq!(Hypergraph::from_json(&s).unwrap(), g);
        assert!(s.contains("\"order\":5"));
    }
}
