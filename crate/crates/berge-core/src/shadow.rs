//! Edge colorings and shadow graphs.
//!
//! The shadow of a hypergraph joins every vertex pair that co-occurs in some
//! hyperedge. For a colored hypergraph the thresholded shadow additionally
//! annotates each pair with the colors appearing on at least `threshold` of
//! its containing hyperedges. Pairs whose color list comes out empty are kept:
//! the thresholded shadow has the same edge set as the plain one, only the
//! lists differ.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    WrongUniformity { r: usize },
    NoColors,
    ColorOutOfRange { color: usize, color_count: usize },
    WrongLength { expected: usize, got: usize },
    ThresholdZero,
    /// Text format problems, with 1-based line numbers where available.
    MalformedHeader { line: usize },
    MalformedLine { line: usize },
    EdgeIndexOutOfRange { index: usize, edge_count: usize },
    DuplicateAssignment { index: usize },
    MissingAssignment { index: usize },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ColoringError::*;
        match self {
            WrongUniformity { r } => write!(f, "operation requires 3-uniform input, got r={r}"),
            NoColors => write!(f, "a coloring needs at least one color"),
            ColorOutOfRange { color, color_count } => {
                write!(f, "color {color} out of range for {color_count} colors")
            }
            WrongLength { expected, got } => {
                write!(f, "coloring assigns {got} edges, hypergraph has {expected}")
            }
            ThresholdZero => write!(f, "shadow threshold must be at least 1"),
            MalformedHeader { line } => write!(f, "line {line}: malformed header, expected `col <t>`"),
            MalformedLine { line } => write!(f, "line {line}: malformed line, expected `c <edge> <color>`"),
            EdgeIndexOutOfRange { index, edge_count } => {
                write!(f, "edge index {index} out of range for {edge_count} edges")
            }
            DuplicateAssignment { index } => write!(f, "edge index {index} colored twice"),
            MissingAssignment { index } => write!(f, "edge index {index} has no color"),
        }
    }
}

impl core::error::Error for ColoringError {}

/// A hypergraph plus a total assignment of one of `t` colors to each edge.
///
/// Color indices follow the red/blue/green shorthand of the constructions
/// module: red = 0, blue = 1, green = 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredHypergraph {
    base: Hypergraph,
    color_count: usize,
    colors: Vec<usize>,
}

impl ColoredHypergraph {
    pub fn new(base: Hypergraph, color_count: usize, colors: Vec<usize>) -> Result<ColoredHypergraph, ColoringError> {
        if color_count == 0 {
            return Err(ColoringError::NoColors);
        }
        if colors.len() != base.edge_count() {
            return Err(ColoringError::WrongLength { expected: base.edge_count(), got: colors.len() });
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= color_count) {
            return Err(ColoringError::ColorOutOfRange { color: c, color_count });
        }
        Ok(ColoredHypergraph { base, color_count, colors })
    }

    /// Colors every edge of `base` the same color within a `color_count`-coloring.
    pub fn monochromatic(base: Hypergraph, color_count: usize, color: usize) -> Result<ColoredHypergraph, ColoringError> {
        let m = base.edge_count();
        ColoredHypergraph::new(base, color_count, vec![color; m])
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_of(&self, edge_index: usize) -> usize {
        self.colors[edge_index]
    }

    fn check_color(&self, c: usize) -> Result<(), ColoringError> {
        if c >= self.color_count {
            Err(ColoringError::ColorOutOfRange { color: c, color_count: self.color_count })
        } else {
            Ok(())
        }
    }

    /// The subhypergraph induced by the edges of color `c` (same vertex set).
    pub fn color_class(&self, c: usize) -> Result<Hypergraph, ColoringError> {
        Ok(self.color_class_with_indices(c)?.0)
    }

    /// As [`color_class`](Self::color_class), also returning the original
    /// edge index of each class edge (class order is a subsequence of the
    /// canonical order, so the map is ascending).
    pub fn color_class_with_indices(&self, c: usize) -> Result<(Hypergraph, Vec<usize>), ColoringError> {
        self.check_color(c)?;
        let mut edges = Vec::new();
        let mut indices = Vec::new();
        for (i, e) in self.base.edges().iter().enumerate() {
            if self.colors[i] == c {
                edges.push(e.clone());
                indices.push(i);
            }
        }
        let h = Hypergraph::new(self.base.vertex_count(), self.base.uniformity(), edges)
            .expect("class edges are valid edges of the base");
        Ok((h, indices))
    }

    /// Number of hyperedges of color `c` containing both `u` and `v`.
    pub fn pair_color_count(&self, u: usize, v: usize, c: usize) -> usize {
        let bits = (1u64 << u) | (1u64 << v);
        (0..self.base.edge_count())
            .filter(|&i| self.colors[i] == c && self.base.edge_vertex_mask(i) & bits == bits)
            .count()
    }

    /// Parses the `.col` text format against its base hypergraph.
    ///
    /// ```text
    /// col <t>
    /// c <edge-index> <color>     (one line per edge index, any order)
    /// ```
    pub fn parse(text: &str, base: Hypergraph) -> Result<ColoredHypergraph, ColoringError> {
        let mut color_count: Option<usize> = None;
        let mut colors: Vec<Option<usize>> = vec![None; base.edge_count()];
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let tag = tokens.next().unwrap();
            if color_count.is_none() {
                if tag != "col" {
                    return Err(ColoringError::MalformedHeader { line: lineno });
                }
                match tokens.next().and_then(|t| t.parse().ok()) {
                    Some(t) if tokens.next().is_none() => color_count = Some(t),
                    _ => return Err(ColoringError::MalformedHeader { line: lineno }),
                }
                continue;
            }
            if tag != "c" {
                return Err(ColoringError::MalformedLine { line: lineno });
            }
            let nums: Option<Vec<usize>> = tokens.map(|t| t.parse().ok()).collect();
            match nums.as_deref() {
                Some([index, color]) => {
                    if *index >= colors.len() {
                        return Err(ColoringError::EdgeIndexOutOfRange {
                            index: *index,
                            edge_count: colors.len(),
                        });
                    }
                    if colors[*index].is_some() {
                        return Err(ColoringError::DuplicateAssignment { index: *index });
                    }
                    colors[*index] = Some(*color);
                }
                _ => return Err(ColoringError::MalformedLine { line: lineno }),
            }
        }
        let color_count = color_count.ok_or(ColoringError::MalformedHeader { line: 1 })?;
        let mut total = Vec::with_capacity(colors.len());
        for (i, c) in colors.into_iter().enumerate() {
            total.push(c.ok_or(ColoringError::MissingAssignment { index: i })?);
        }
        ColoredHypergraph::new(base, color_count, total)
    }

    /// Serializes to the `.col` text format in ascending edge order.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "col {}", self.color_count);
        for (i, c) in self.colors.iter().enumerate() {
            let _ = writeln!(out, "c {i} {c}");
        }
        out
    }
}

fn require_3_uniform(h: &Hypergraph) -> Result<(), ColoringError> {
    if h.uniformity() != 3 {
        Err(ColoringError::WrongUniformity { r: h.uniformity() })
    } else {
        Ok(())
    }
}

/// The shadow graph: vertex pairs co-occurring in at least one hyperedge.
pub fn shadow(h: &Hypergraph) -> Result<BTreeSet<(usize, usize)>, ColoringError> {
    require_3_uniform(h)?;
    let mut pairs = BTreeSet::new();
    for e in h.edges() {
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                pairs.insert((e[i], e[j]));
            }
        }
    }
    Ok(pairs)
}

/// The thresholded shadow of a colored hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowGraph {
    n: usize,
    threshold: usize,
    color_count: usize,
    /// pair -> per-color multiplicities; every shadow pair is present even
    /// when its thresholded color list is empty.
    pair_counts: BTreeMap<(usize, usize), Vec<usize>>,
}

impl ShadowGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    /// All shadow pairs in ascending order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pair_counts.keys().copied()
    }

    pub fn is_pair(&self, u: usize, v: usize) -> bool {
        self.pair_counts.contains_key(&ordered(u, v))
    }

    /// Number of hyperedges of color `c` containing the pair, 0 if the pair
    /// is not in the shadow at all.
    pub fn pair_count(&self, u: usize, v: usize, c: usize) -> usize {
        self.pair_counts.get(&ordered(u, v)).map_or(0, |counts| counts[c])
    }

    /// Colors appearing on at least `threshold` hyperedges through the pair.
    pub fn list(&self, u: usize, v: usize) -> Vec<usize> {
        match self.pair_counts.get(&ordered(u, v)) {
            None => Vec::new(),
            Some(counts) => (0..self.color_count).filter(|&c| counts[c] >= self.threshold).collect(),
        }
    }

    pub fn list_contains(&self, u: usize, v: usize, c: usize) -> bool {
        self.pair_count(u, v, c) >= self.threshold
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Builds the thresholded shadow of `ch`.
pub fn shadow_with_threshold(ch: &ColoredHypergraph, threshold: usize) -> Result<ShadowGraph, ColoringError> {
    require_3_uniform(ch.base())?;
    if threshold == 0 {
        return Err(ColoringError::ThresholdZero);
    }
    let t = ch.color_count();
    let mut pair_counts: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, e) in ch.base().edges().iter().enumerate() {
        let c = ch.color_of(i);
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                pair_counts.entry((e[a], e[b])).or_insert_with(|| vec![0; t])[c] += 1;
            }
        }
    }
    Ok(ShadowGraph {
        n: ch.base().vertex_count(),
        threshold,
        color_count: t,
        pair_counts,
    })
}
