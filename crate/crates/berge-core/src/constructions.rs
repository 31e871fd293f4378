//! Generators for the extremal colorings and Turan-type hypergraphs used as
//! Ramsey lower bounds.
//!
//! Every generated layout records the defining sets A and B and its coloring
//! rule, so the coloring can be re-derived and validated rather than trusted.
//! Freeness claims (no monochromatic Berge member of the relevant family) are
//! asserted by tests through the detectors, never assumed.

use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::{Hypergraph, VertexSet};
use crate::shadow::ColoredHypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    TooFewParts { parts: usize },
    TooFewVertices { vertices: usize, parts: usize },
    CycleLengthTooSmall { n: usize },
    CliqueOrderTooSmall { m: usize },
    BoundsViolated { m: usize, n: usize },
    NotAPartition,
    RuleMismatch { edge_index: usize, expected: usize, got: usize },
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionError::*;
        match self {
            TooFewParts { parts } => write!(f, "need at least 3 parts, got {parts}"),
            TooFewVertices { vertices, parts } => {
                write!(f, "need at least {parts} vertices for {parts} parts, got {vertices}")
            }
            CycleLengthTooSmall { n } => write!(f, "cycle length {n} below the construction's range"),
            CliqueOrderTooSmall { m } => write!(f, "clique order {m} below the construction's range"),
            BoundsViolated { m, n } => write!(f, "construction requires m >= n >= 6, got m={m}, n={n}"),
            NotAPartition => write!(f, "A and B do not partition the vertex set"),
            RuleMismatch { edge_index, expected, got } => {
                write!(f, "edge {edge_index} colored {got}, rule derives {expected}")
            }
        }
    }
}

impl core::error::Error for ConstructionError {}

/// Near-equal part sizes: descending, differing by at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    sizes: Vec<usize>,
}

impl PartitionSpec {
    pub fn near_equal(total: usize, parts: usize) -> Result<PartitionSpec, ConstructionError> {
        if parts == 0 || total < parts {
            return Err(ConstructionError::TooFewVertices { vertices: total, parts });
        }
        let q = total / parts;
        let rem = total % parts;
        let mut sizes = Vec::with_capacity(parts);
        sizes.extend(core::iter::repeat_n(q + 1, rem));
        sizes.extend(core::iter::repeat_n(q, parts - rem));
        Ok(PartitionSpec { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Part index per vertex, parts laid out as contiguous blocks with the
    /// larger parts first.
    pub fn part_of(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &s) in self.sizes.iter().enumerate() {
            out.extend(core::iter::repeat_n(i, s));
        }
        out
    }
}

/// The complete 3-uniform k-partite hypergraph with near-equal parts: all
/// triples taking at most one vertex per part. Parts are contiguous index
/// blocks, larger parts first, so output is canonical.
pub fn turan_partite(n: usize, parts: usize) -> Result<Hypergraph, ConstructionError> {
    if parts < 3 {
        return Err(ConstructionError::TooFewParts { parts });
    }
    if n < parts {
        return Err(ConstructionError::TooFewVertices { vertices: n, parts });
    }
    let part_of = PartitionSpec::near_equal(n, parts)?.part_of();
    let complete = Hypergraph::complete(n, 3).expect("parts >= 3 implies n >= 3");
    let edges: Vec<Vec<usize>> = complete
        .edges()
        .iter()
        .filter(|e| {
            part_of[e[0]] != part_of[e[1]] && part_of[e[0]] != part_of[e[2]] && part_of[e[1]] != part_of[e[2]]
        })
        .cloned()
        .collect();
    Ok(Hypergraph::new(n, 3, edges).expect("filtered complete edges are valid"))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Closed-form edge count of [`turan_partite`]: with `rem` parts of size
/// `q+1` and the rest of size `q`, sum over how many of the three chosen
/// parts are large.
pub fn t3_count(n: usize, parts: usize) -> Result<usize, ConstructionError> {
    if parts < 3 {
        return Err(ConstructionError::TooFewParts { parts });
    }
    if n < parts {
        return Err(ConstructionError::TooFewVertices { vertices: n, parts });
    }
    let q = n / parts;
    let rem = n % parts;
    let small = parts - rem;
    let mut total = 0usize;
    for large_chosen in 0..=3usize {
        let small_chosen = 3 - large_chosen;
        total += binomial(rem, large_chosen)
            * binomial(small, small_chosen)
            * (q + 1).pow(large_chosen as u32)
            * q.pow(small_chosen as u32);
    }
    Ok(total)
}

/// Which fixed coloring rule a layout was generated under. Red is color 0,
/// blue 1, green 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringRule {
    /// Three colors: green for triples meeting A in exactly two points, red
    /// for triples containing the first A-vertex but not the second, blue
    /// for the rest.
    TwoCyclesAndTriangle,
    /// Two colors: red for triples meeting B in at least two points, blue
    /// for the rest.
    CliqueVersusCycle,
}

/// A generated lower-bound coloring together with its defining vertex split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionLayout {
    a_vertices: VertexSet,
    b_vertices: VertexSet,
    rule: ColoringRule,
    colored: ColoredHypergraph,
}

impl ConstructionLayout {
    pub fn a_vertices(&self) -> VertexSet {
        self.a_vertices
    }

    pub fn b_vertices(&self) -> VertexSet {
        self.b_vertices
    }

    pub fn rule(&self) -> ColoringRule {
        self.rule
    }

    pub fn colored(&self) -> &ColoredHypergraph {
        &self.colored
    }

    /// Recomputes every edge color from (A, B) and the rule; any mismatch is
    /// a generator defect.
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let n = self.colored.base().vertex_count();
        let all = VertexSet::full(n);
        if self.a_vertices.union(self.b_vertices) != all
            || !self.a_vertices.intersection(self.b_vertices).is_empty()
        {
            return Err(ConstructionError::NotAPartition);
        }
        for (i, _) in self.colored.base().edges().iter().enumerate() {
            let expected = derive_color(self.rule, self.a_vertices, self.colored.base().edge_vertex_mask(i));
            let got = self.colored.color_of(i);
            if expected != got {
                return Err(ConstructionError::RuleMismatch { edge_index: i, expected, got });
            }
        }
        Ok(())
    }
}

fn derive_color(rule: ColoringRule, a: VertexSet, edge_mask: u64) -> usize {
    let in_a = (edge_mask & a.mask()).count_ones();
    match rule {
        ColoringRule::TwoCyclesAndTriangle => {
            let a1_bit = 1u64 << a.iter().next().expect("A is nonempty");
            if in_a == 2 {
                2 // green
            } else if edge_mask & a1_bit != 0 {
                // contains a1 but (since in_a != 2) not a2
                0 // red
            } else {
                1 // blue
            }
        }
        ColoringRule::CliqueVersusCycle => {
            // |A intersection| <= 1 means at least two points in B.
            if in_a <= 1 {
                0 // red
            } else {
                1 // blue
            }
        }
    }
}

fn build_layout(
    n: usize,
    a_size: usize,
    rule: ColoringRule,
    color_count: usize,
) -> ConstructionLayout {
    let a: VertexSet = (0..a_size).collect();
    let b: VertexSet = (a_size..n).collect();
    let base = Hypergraph::complete(n, 3).expect("n >= 4 in all constructions");
    let colors: Vec<usize> = (0..base.edge_count())
        .map(|i| derive_color(rule, a, base.edge_vertex_mask(i)))
        .collect();
    let colored = ColoredHypergraph::new(base, color_count, colors).expect("total coloring by construction");
    let layout = ConstructionLayout { a_vertices: a, b_vertices: b, rule, colored };
    debug_assert!(layout.validate().is_ok());
    layout
}

/// The 3-color lower-bound coloring for two long cycles versus a triangle,
/// on `n` vertices with A = {0, 1}.
///
/// Green (2) is exactly the triples through both A-vertices, so the green
/// class has no Berge triangle. The remaining triples are split by which
/// A-vertex they contain: red (0) keeps vertex 0 and never vertex 1, blue
/// (1) takes the rest, so neither class can cover all `n` vertices with a
/// Berge cycle core. An arbitrary red/blue split would not be sound; see the
/// crate's regression tests.
pub fn lower_bound_ccc(n: usize) -> Result<ConstructionLayout, ConstructionError> {
    if n < 4 {
        return Err(ConstructionError::CycleLengthTooSmall { n });
    }
    Ok(build_layout(n, 2, ColoringRule::TwoCyclesAndTriangle, 3))
}

/// The 2-color lower-bound coloring for a Berge clique of order `m` versus a
/// short Berge cycle, on `m` vertices with |A| = 2: red (0) for triples
/// crossing B in at least two points, blue (1) for the rest.
pub fn lower_bound_ck_small(m: usize) -> Result<ConstructionLayout, ConstructionError> {
    if m < 4 {
        return Err(ConstructionError::CliqueOrderTooSmall { m });
    }
    Ok(build_layout(m, 2, ColoringRule::CliqueVersusCycle, 2))
}

/// The general clique-versus-cycle lower bound: |A| = floor((n-1)/2),
/// |B| = m-2, same red/blue rule as [`lower_bound_ck_small`].
pub fn lower_bound_ck_general(m: usize, n: usize) -> Result<ConstructionLayout, ConstructionError> {
    if n < 6 || m < n {
        return Err(ConstructionError::BoundsViolated { m, n });
    }
    let a_size = (n - 1) / 2;
    let vertices = m + a_size - 2;
    Ok(build_layout(vertices, a_size, ColoringRule::CliqueVersusCycle, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::{check_certificate, find_berge_clique, find_berge_cycle, FamilySpec};

    #[test]
    fn turan_partite_edge_counts() {
        assert_eq!(turan_partite(6, 4).unwrap().edge_count(), 12);
        assert_eq!(turan_partite(3, 3).unwrap().edge_count(), 1);
        // 5 vertices, parts 2+1+1+1: C(5,3) minus the 3 triples through the pair.
        assert_eq!(turan_partite(5, 4).unwrap().edge_count(), 7);
        assert!(turan_partite(5, 2).is_err());
        assert!(turan_partite(3, 4).is_err());
    }

    #[test]
    fn t3_count_matches_generator() {
        assert_eq!(t3_count(6, 4).unwrap(), 12);
        assert_eq!(t3_count(3, 3).unwrap(), 1);
        for n in 3..=11 {
            for parts in 3..=n {
                assert_eq!(
                    t3_count(n, parts).unwrap(),
                    turan_partite(n, parts).unwrap().edge_count(),
                    "n={n} parts={parts}"
                );
            }
        }
    }

    #[test]
    fn partition_spec_shapes() {
        let p = PartitionSpec::near_equal(6, 4).unwrap();
        assert_eq!(p.sizes(), &[2, 2, 1, 1]);
        assert_eq!(p.part_of(), vec![0, 0, 1, 1, 2, 3]);
        let p = PartitionSpec::near_equal(9, 3).unwrap();
        assert_eq!(p.sizes(), &[3, 3, 3]);
    }

    #[test]
    fn degree_in_turan_partite() {
        // Vertex 0 sits in a 2-element part of T_3(6,4); its degree counts
        // the cross-part pairs among the remaining parts {2,3},{4},{5}.
        let t = turan_partite(6, 4).unwrap();
        assert_eq!(t.degree(0).unwrap(), 5);
        // No edge contains both vertices of a part.
        let nb = t.neighborhood(0, t.vertex_set()).unwrap();
        assert_eq!(nb, [2, 3, 4, 5].into_iter().collect());
    }

    #[test]
    fn ccc_class_sizes() {
        let layout = lower_bound_ccc(4).unwrap();
        let ch = layout.colored();
        assert_eq!(ch.color_class(2).unwrap().edge_count(), 2);
        assert_eq!(ch.color_class(0).unwrap().edge_count(), 1);
        assert_eq!(ch.color_class(1).unwrap().edge_count(), 1);

        let layout = lower_bound_ccc(5).unwrap();
        let ch = layout.colored();
        let green = ch.color_class(2).unwrap();
        // Green is exactly the triples {a1, a2, b}.
        assert_eq!(green.edges(), &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]);
        assert_eq!(ch.color_class(0).unwrap().edge_count(), 3);
        assert_eq!(ch.color_class(1).unwrap().edge_count(), 4);

        for n in 4..=8 {
            let layout = lower_bound_ccc(n).unwrap();
            let total: usize = (0..3)
                .map(|c| layout.colored().color_class(c).unwrap().edge_count())
                .sum();
            assert_eq!(total, layout.colored().base().edge_count());
            layout.validate().unwrap();
        }
    }

    #[test]
    fn ccc_classes_are_free() {
        for n in 4..=6 {
            let layout = lower_bound_ccc(n).unwrap();
            let green = layout.colored().color_class(2).unwrap();
            assert!(find_berge_cycle(&green, 3).unwrap().is_none(), "green triangle at n={n}");
            for c in [0, 1] {
                let class = layout.colored().color_class(c).unwrap();
                assert!(find_berge_cycle(&class, n).unwrap().is_none(), "color {c} cycle at n={n}");
            }
        }
    }

    #[test]
    fn ck_small_layout_and_freeness() {
        let layout = lower_bound_ck_small(5).unwrap();
        let ch = layout.colored();
        assert_eq!(ch.color_class(0).unwrap().edge_count(), 7);
        assert_eq!(ch.color_class(1).unwrap().edge_count(), 3);
        let red = ch.color_class(0).unwrap();
        let blue = ch.color_class(1).unwrap();
        assert!(find_berge_clique(&red, 5).unwrap().is_none());
        assert!(find_berge_cycle(&blue, 4).unwrap().is_none());
        assert!(find_berge_cycle(&blue, 5).unwrap().is_none());

        for m in 4..=8 {
            let layout = lower_bound_ck_small(m).unwrap();
            layout.validate().unwrap();
            // One blue triple per B-vertex.
            assert_eq!(layout.colored().color_class(1).unwrap().edge_count(), m - 2);
        }

        // m = 8: both freeness claims again, at the larger size.
        let layout = lower_bound_ck_small(8).unwrap();
        let red = layout.colored().color_class(0).unwrap();
        let blue = layout.colored().color_class(1).unwrap();
        assert!(find_berge_clique(&red, 8).unwrap().is_none());
        assert!(find_berge_cycle(&blue, 4).unwrap().is_none());
        assert!(find_berge_cycle(&blue, 5).unwrap().is_none());
    }

    #[test]
    fn ck_general_red_size_formula() {
        for (m, n) in [(11, 6), (11, 7), (12, 8)] {
            let layout = lower_bound_ck_general(m, n).unwrap();
            layout.validate().unwrap();
            let a = layout.a_vertices().len();
            let b = layout.b_vertices().len();
            assert_eq!(a, (n - 1) / 2);
            assert_eq!(b, m - 2);
            assert_eq!(layout.colored().base().vertex_count(), m + (n - 1) / 2 - 2);
            let red = layout.colored().color_class(0).unwrap();
            assert_eq!(red.edge_count(), binomial(b, 2) * a + binomial(b, 3));
        }
        assert!(lower_bound_ck_general(5, 6).is_err());
        assert!(lower_bound_ck_general(11, 5).is_err());
    }

    #[test]
    fn arbitrary_red_blue_split_is_unsound() {
        // Coloring the non-green triples all red (instead of the fixed
        // red/blue split) admits a red Berge 5-cycle on n = 5: the split
        // cannot be arbitrary.
        let base = Hypergraph::complete(5, 3).unwrap();
        let colors: Vec<usize> = base
            .edges()
            .iter()
            .map(|e| if e.contains(&0) && e.contains(&1) { 2 } else { 0 })
            .collect();
        let all_red = ColoredHypergraph::new(base, 3, colors).unwrap();
        let red = all_red.color_class(0).unwrap();
        let cert = find_berge_cycle(&red, 5).unwrap().expect("all-red split admits a red 5-cycle");
        check_certificate(&red, &cert, &FamilySpec::Cycle(5), None).unwrap();

        // The fixed split generated by lower_bound_ccc is free.
        let fixed = lower_bound_ccc(5).unwrap();
        for c in [0, 1] {
            let class = fixed.colored().color_class(c).unwrap();
            assert!(find_berge_cycle(&class, 5).unwrap().is_none());
        }
    }
}
