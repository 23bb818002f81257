//! Explicit two-colorings of complete hosts: the canonical lower-bound
//! constructions (block colorings, red-clique extension, the cubic-residue
//! coloring) and the verifier that checks a coloring against a red pattern
//! and a blue target.

use serde::{Deserialize, Serialize};

use crate::bounds::is_prime;
use crate::combin::{binomial, colex_rank, colex_subsets, colex_unrank, MAX_ORDER};
use crate::iso::find_embedding;
use crate::{CoreError, Hypergraph, Result};

/// Hard cap on explicitly stored edge slots; C(p, r) beyond this means the
/// host is too large to color edge by edge.
const MAX_EDGE_SLOTS: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flipped(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// A red/blue coloring of every r-subset of {0, …, order−1}, stored densely
/// in colex order. Serializes as the red edge list only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TwoColoringJson", into = "TwoColoringJson")]
pub struct TwoColoring {
    order: usize,
    r: usize,
    colors: Vec<Color>,
}

#[derive(Serialize, Deserialize)]
struct TwoColoringJson {
    order: usize,
    r: usize,
    red: Vec<Vec<usize>>,
}

impl TryFrom<TwoColoringJson> for TwoColoring {
    type Error = CoreError;

    fn try_from(json: TwoColoringJson) -> Result<Self> {
        TwoColoring::from_red_edges(json.order, json.r, &json.red)
    }
}

impl From<TwoColoring> for TwoColoringJson {
    fn from(c: TwoColoring) -> Self {
        TwoColoringJson {
            order: c.order,
            r: c.r,
            red: c.red_edges(),
        }
    }
}

impl TwoColoring {
    pub fn new_all(order: usize, r: usize, color: Color) -> Result<Self> {
        if r < 2 {
            return Err(CoreError::InvalidParameter(format!(
                "uniformity must be at least 2, got {r}"
            )));
        }
        if order > MAX_ORDER {
            return Err(CoreError::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let slots = binomial(order, r);
        if slots > MAX_EDGE_SLOTS {
            return Err(CoreError::InvalidParameter(format!(
                "host with {slots} edge slots is too large to color explicitly"
            )));
        }
        Ok(TwoColoring {
            order,
            r,
            colors: vec![color; slots as usize],
        })
    }

    pub fn all_blue(order: usize, r: usize) -> Result<Self> {
        Self::new_all(order, r, Color::Blue)
    }

    pub fn all_red(order: usize, r: usize) -> Result<Self> {
        Self::new_all(order, r, Color::Red)
    }

    pub fn from_red_edges(order: usize, r: usize, red: &[Vec<usize>]) -> Result<Self> {
        let mut coloring = Self::all_blue(order, r)?;
        for edge in red {
            let e = crate::Hyperedge::new(edge.clone(), r, order)?;
            coloring.colors[e.rank() as usize] = Color::Red;
        }
        Ok(coloring)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_slots(&self) -> usize {
        self.colors.len()
    }

    pub fn color_of_rank(&self, rank: u64) -> Color {
        self.colors[rank as usize]
    }

    /// Color of a sorted, duplicate-free vertex set of size r.
    pub fn color_of_edge(&self, edge: &[usize]) -> Color {
        debug_assert_eq!(edge.len(), self.r);
        debug_assert!(edge.windows(2).all(|w| w[0] < w[1]));
        self.color_of_rank(colex_rank(edge))
    }

    pub fn set_rank(&mut self, rank: u64, color: Color) {
        self.colors[rank as usize] = color;
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    pub fn red_edges(&self) -> Vec<Vec<usize>> {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == Color::Red)
            .map(|(rank, _)| colex_unrank(rank as u64, self.r))
            .collect()
    }

    fn subhypergraph(&self, color: Color) -> Hypergraph {
        let ranks: Vec<u64> = (0..self.colors.len() as u64)
            .filter(|&rank| self.color_of_rank(rank) == color)
            .collect();
        Hypergraph::from_edge_ranks(self.order, self.r, &ranks)
            .expect("ranks below C(order, r) are valid")
    }

    pub fn red_subhypergraph(&self) -> Hypergraph {
        self.subhypergraph(Color::Red)
    }

    pub fn blue_subhypergraph(&self) -> Hypergraph {
        self.subhypergraph(Color::Blue)
    }

    pub fn flipped(&self) -> TwoColoring {
        TwoColoring {
            order: self.order,
            r: self.r,
            colors: self.colors.iter().map(|c| c.flipped()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| CoreError::InvalidParameter(format!("bad coloring JSON: {e}")))
    }
}

/// Block coloring on (chi_w−1)(c−1) + t − 1 vertices: chi_w−1 blocks of
/// size c−1 followed by one of size t−1, edges blue inside a block and red
/// across. Largest blue component is c−1 and the largest red clique has
/// (chi_w−1)(r−1) + min(t, r) − 1 vertices, which is what makes it the
/// standard lower-bound witness.
pub fn burr_witness(chi_w: usize, t: usize, c: usize, r: usize) -> Result<TwoColoring> {
    if chi_w == 0 || t == 0 || c == 0 {
        return Err(CoreError::InvalidParameter(format!(
            "block coloring needs chi_w, t, c >= 1, got {chi_w}, {t}, {c}"
        )));
    }
    let order = (chi_w - 1) * (c - 1) + t - 1;
    let full_blocks = (chi_w - 1) * (c - 1);
    let block_of = |v: usize| {
        if c >= 2 && v < full_blocks {
            v / (c - 1)
        } else {
            chi_w - 1
        }
    };
    let mut coloring = TwoColoring::all_blue(order, r)?;
    for rank in 0..coloring.edge_slots() as u64 {
        let edge = colex_unrank(rank, r);
        let b = block_of(edge[0]);
        if edge.iter().any(|&v| block_of(v) != b) {
            coloring.set_rank(rank, Color::Red);
        }
    }
    Ok(coloring)
}

/// Appends m fresh vertices as a red-complete block, joined to the old host
/// entirely in blue. Old edges keep their colors.
pub fn extend_red_clique(base: &TwoColoring, m: usize) -> Result<TwoColoring> {
    let p = base.order();
    let mut coloring = TwoColoring::all_blue(p + m, base.uniformity())?;
    for rank in 0..coloring.edge_slots() as u64 {
        let edge = colex_unrank(rank, base.uniformity());
        let color = if edge.iter().all(|&v| v < p) {
            base.color_of_rank(colex_rank(&edge))
        } else if edge.iter().all(|&v| v >= p) {
            Color::Red
        } else {
            Color::Blue
        };
        coloring.set_rank(rank, color);
    }
    Ok(coloring)
}

/// The cubic-residue coloring on p = 3j+1 vertices (p prime): red triples
/// are the zero triples {0, x, p−x} together with the j multiplicative
/// cosets of the three cube roots of unity. No two red triples share two
/// vertices, so the red side has no copy of the four-vertex loose cycle.
pub fn cubic_residue_witness(j: usize) -> Result<TwoColoring> {
    if j == 0 {
        return Err(CoreError::InvalidParameter(
            "residue coloring needs j >= 1".into(),
        ));
    }
    let p = 3 * j + 1;
    if !is_prime(p) {
        return Err(CoreError::NotPrime(p));
    }
    let mut red: Vec<Vec<usize>> = Vec::new();
    for x in 1..=(p - 1) / 2 {
        red.push(vec![0, x, p - x]);
    }
    let cube = |x: usize| x * x % p * x % p;
    let kernel: Vec<usize> = (1..p).filter(|&x| cube(x) == 1).collect();
    debug_assert_eq!(kernel.len(), 3, "p = 1 mod 3 has three cube roots of unity");
    let mut seen = vec![false; p];
    for a in 1..p {
        if seen[a] {
            continue;
        }
        let mut coset: Vec<usize> = kernel.iter().map(|&k| a * k % p).collect();
        coset.sort_unstable();
        for &v in &coset {
            seen[v] = true;
        }
        red.push(coset);
    }
    TwoColoring::from_red_edges(p, 3, &red)
}

/// What the blue side of a verification is looking for.
#[derive(Debug, Clone, Copy)]
pub enum BlueTarget<'a> {
    Clique(usize),
    Pattern(&'a Hypergraph),
}

/// Outcome of checking a coloring: either it is a clean witness or we hand
/// back the vertices of the structure that spoils it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "vertices")]
pub enum WitnessVerdict {
    Clean,
    RedEmbedding(Vec<usize>),
    BlueClique(Vec<usize>),
    BlueEmbedding(Vec<usize>),
}

impl WitnessVerdict {
    pub fn is_clean(&self) -> bool {
        matches!(self, WitnessVerdict::Clean)
    }
}

/// Checks the red side first, then the blue side. Complete patterns go
/// through the clique search; a connected blue pattern is ruled out without
/// any search when every blue component is smaller than its order.
pub fn verify_witness(
    coloring: &TwoColoring,
    red_pattern: &Hypergraph,
    blue: BlueTarget<'_>,
) -> Result<WitnessVerdict> {
    if red_pattern.uniformity() != coloring.uniformity() {
        return Err(CoreError::UniformityMismatch {
            left: red_pattern.uniformity(),
            right: coloring.uniformity(),
        });
    }
    let red_hit = if red_pattern.is_complete() {
        find_mono_clique(coloring, Color::Red, red_pattern.order())
    } else {
        find_embedding(&coloring.red_subhypergraph(), red_pattern)
    };
    if let Some(vertices) = red_hit {
        return Ok(WitnessVerdict::RedEmbedding(vertices));
    }
    match blue {
        BlueTarget::Clique(n) => {
            if let Some(vertices) = find_mono_clique(coloring, Color::Blue, n) {
                return Ok(WitnessVerdict::BlueClique(vertices));
            }
        }
        BlueTarget::Pattern(h) => {
            if h.uniformity() != coloring.uniformity() {
                return Err(CoreError::UniformityMismatch {
                    left: h.uniformity(),
                    right: coloring.uniformity(),
                });
            }
            if h.is_complete() {
                if let Some(vertices) = find_mono_clique(coloring, Color::Blue, h.order()) {
                    return Ok(WitnessVerdict::BlueClique(vertices));
                }
            } else {
                let blue_sub = coloring.blue_subhypergraph();
                let ruled_out =
                    h.is_connected() && blue_sub.largest_component_order() < h.order();
                if !ruled_out {
                    if let Some(vertices) = find_embedding(&blue_sub, h) {
                        return Ok(WitnessVerdict::BlueEmbedding(vertices));
                    }
                }
            }
        }
    }
    Ok(WitnessVerdict::Clean)
}

/// Finds n vertices all of whose r-subsets carry the given color, if any.
pub fn find_mono_clique(coloring: &TwoColoring, color: Color, n: usize) -> Option<Vec<usize>> {
    if n > coloring.order() {
        return None;
    }
    let mut chosen = Vec::with_capacity(n);
    if extend_clique(coloring, color, &mut chosen, 0, n) {
        Some(chosen)
    } else {
        None
    }
}

fn extend_clique(
    c: &TwoColoring,
    color: Color,
    chosen: &mut Vec<usize>,
    start: usize,
    n: usize,
) -> bool {
    if chosen.len() == n {
        return true;
    }
    let need = n - chosen.len();
    let mut v = start;
    while v + need <= c.order() {
        if clique_compatible(c, color, chosen, v) {
            chosen.push(v);
            if extend_clique(c, color, chosen, v + 1, n) {
                return true;
            }
            chosen.pop();
        }
        v += 1;
    }
    false
}

fn clique_compatible(c: &TwoColoring, color: Color, chosen: &[usize], v: usize) -> bool {
    let r = c.uniformity();
    for idx in colex_subsets(chosen.len(), r - 1) {
        let mut edge: Vec<usize> = idx.iter().map(|&i| chosen[i]).collect();
        edge.push(v);
        edge.sort_unstable();
        if c.color_of_edge(&edge) != color {
            return false;
        }
    }
    true
}

/// Largest monochromatic clique in the given color. Sets of fewer than r
/// vertices are vacuously monochromatic, so the answer is at least
/// min(order, r−1).
pub fn max_mono_clique(coloring: &TwoColoring, color: Color) -> Vec<usize> {
    let mut best = Vec::new();
    for n in 1..=coloring.order() {
        match find_mono_clique(coloring, color, n) {
            Some(v) => best = v,
            None => break,
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{loose_cycle_c4, loose_path};

    #[test]
    fn block_witness_small() {
        let w = burr_witness(2, 2, 5, 3).unwrap();
        assert_eq!(w.order(), 5);
        assert_eq!(w.count(Color::Blue), 4); // triples inside {0,1,2,3}
        assert_eq!(w.count(Color::Red), 6);
        let verdict =
            verify_witness(&w, &Hypergraph::complete(4, 3).unwrap(), BlueTarget::Pattern(&loose_path(5, 3).unwrap()))
                .unwrap();
        assert!(verdict.is_clean());
    }

    #[test]
    fn block_witness_shapes() {
        assert_eq!(burr_witness(3, 1, 5, 3).unwrap().order(), 8);
        assert_eq!(burr_witness(1, 1, 5, 3).unwrap().order(), 0);
        assert_eq!(burr_witness(2, 1, 1, 3).unwrap().order(), 0);
        assert!(burr_witness(0, 1, 5, 3).is_err());
        let w = burr_witness(3, 1, 5, 3).unwrap();
        // two blue blocks of four vertices, red across
        assert_eq!(w.blue_subhypergraph().largest_component_order(), 4);
        assert_eq!(max_mono_clique(&w, Color::Red).len(), 4);
    }

    #[test]
    fn block_witness_k8_vs_p7() {
        let w = burr_witness(4, 2, 7, 3).unwrap();
        assert_eq!(w.order(), 19);
        let p7 = loose_path(7, 3).unwrap();
        let verdict = verify_witness(
            &w,
            &Hypergraph::complete(8, 3).unwrap(),
            BlueTarget::Pattern(&p7),
        )
        .unwrap();
        assert!(verdict.is_clean());
        assert_eq!(max_mono_clique(&w, Color::Red).len(), 7);
    }

    #[test]
    fn cubic_small_case_exact_edges() {
        let w = cubic_residue_witness(2).unwrap();
        assert_eq!(w.order(), 7);
        let mut red = w.red_edges();
        red.sort();
        let mut expected = vec![
            vec![0, 1, 6],
            vec![0, 2, 5],
            vec![0, 3, 4],
            vec![1, 2, 4],
            vec![3, 5, 6],
        ];
        expected.sort();
        assert_eq!(red, expected);
        assert_eq!(w.count(Color::Blue), 30);
        let verdict = verify_witness(&w, &loose_cycle_c4(), BlueTarget::Clique(5)).unwrap();
        assert!(verdict.is_clean());
    }

    #[test]
    fn cubic_larger_case() {
        let w = cubic_residue_witness(4).unwrap();
        assert_eq!(w.order(), 13);
        assert_eq!(w.count(Color::Red), 6 + 4);
        for (i, e) in w.red_edges().iter().enumerate() {
            for f in w.red_edges().iter().skip(i + 1) {
                let shared = e.iter().filter(|v| f.contains(v)).count();
                assert!(shared <= 1, "red triples {e:?} and {f:?} share {shared}");
            }
        }
        let verdict = verify_witness(&w, &loose_cycle_c4(), BlueTarget::Clique(9)).unwrap();
        assert!(verdict.is_clean());
        assert!(max_mono_clique(&w, Color::Blue).len() <= 8);
    }

    #[test]
    fn cubic_guards() {
        assert_eq!(cubic_residue_witness(3), Err(CoreError::NotPrime(10)));
        assert!(cubic_residue_witness(0).is_err());
    }

    #[test]
    fn red_clique_extension() {
        let base = TwoColoring::all_blue(4, 3).unwrap();
        let w = extend_red_clique(&base, 5).unwrap();
        assert_eq!(w.order(), 9);
        assert_eq!(w.count(Color::Red), 10); // C(5,3) inside the new block
        let red = w.red_subhypergraph();
        assert_eq!(red.largest_component_order(), 5);
        assert!(w
            .red_edges()
            .iter()
            .all(|e| e.iter().all(|&v| v >= 4)));
    }

    #[test]
    fn verdicts_carry_vertices() {
        let all_red = TwoColoring::all_red(5, 3).unwrap();
        let p5 = loose_path(5, 3).unwrap();
        match verify_witness(&all_red, &p5, BlueTarget::Clique(3)).unwrap() {
            WitnessVerdict::RedEmbedding(v) => assert_eq!(v.len(), 5),
            other => panic!("expected red embedding, got {other:?}"),
        }
        let all_blue = TwoColoring::all_blue(6, 3).unwrap();
        let edgeless = Hypergraph::empty(2, 3).unwrap();
        match verify_witness(&all_blue, &edgeless, BlueTarget::Clique(4)).unwrap() {
            WitnessVerdict::RedEmbedding(v) => assert_eq!(v, vec![0, 1]),
            other => panic!("edgeless red pattern embeds anywhere, got {other:?}"),
        }
        let one_red = {
            let mut c = TwoColoring::all_blue(6, 3).unwrap();
            c.set_rank(0, Color::Red);
            c
        };
        match verify_witness(&one_red, &p5, BlueTarget::Clique(4)).unwrap() {
            WitnessVerdict::BlueClique(v) => assert_eq!(v.len(), 4),
            other => panic!("expected blue clique, got {other:?}"),
        }
        let forest = Hypergraph::new(6, 3, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        match verify_witness(&one_red, &forest, BlueTarget::Pattern(&forest)).unwrap() {
            WitnessVerdict::BlueEmbedding(v) => assert_eq!(v.len(), 6),
            other => panic!("expected blue embedding, got {other:?}"),
        }
    }

    #[test]
    fn connected_blue_pattern_short_circuits() {
        let w = burr_witness(3, 1, 5, 3).unwrap();
        let p5 = loose_path(5, 3).unwrap();
        let verdict = verify_witness(
            &w,
            &Hypergraph::complete(9, 3).unwrap(),
            BlueTarget::Pattern(&p5),
        )
        .unwrap();
        assert!(verdict.is_clean());
    }

    #[test]
    fn mono_clique_vacuous_sizes() {
        let all_red = TwoColoring::all_red(7, 3).unwrap();
        assert_eq!(max_mono_clique(&all_red, Color::Red).len(), 7);
        assert_eq!(max_mono_clique(&all_red, Color::Blue).len(), 2);
        assert_eq!(find_mono_clique(&all_red, Color::Blue, 0), Some(vec![]));
    }

    #[test]
    fn flip_and_json_round_trip() {
        let w = burr_witness(2, 2, 5, 3).unwrap();
        let f = w.flipped();
        assert_eq!(f.count(Color::Red), w.count(Color::Blue));
        assert_eq!(f.flipped(), w);
        let back = TwoColoring::from_json(&w.to_json()).unwrap();
        assert_eq!(back, w);
        let parsed: TwoColoring =
            serde_json::from_str(r#"{"order":4,"r":3,"red":[[0,1,3]]}"#).unwrap();
        assert_eq!(parsed.count(Color::Red), 1);
        assert!(serde_json::from_str::<TwoColoring>(r#"{"order":4,"r":3,"red":[[0,1]]}"#).is_err());
    }

    #[test]
    fn coloring_size_guards() {
        assert!(matches!(
            TwoColoring::all_blue(65, 3),
            Err(CoreError::OrderTooLarge { order: 65, max: 64 })
        ));
        assert!(TwoColoring::all_blue(64, 32).is_err());
    }
}
