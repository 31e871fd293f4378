//! Value types for r-uniform hypergraphs on dense integer vertices.
//!
//! Edges are kept twice: as sorted tuples (the canonical, serializable form)
//! and as vertex bitmasks (the operational form; pair-containment queries
//! dominate everything downstream). Vertex counts are capped at 64 so a mask
//! is always a single `u64`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

/// Hard cap on vertex counts so edges fit in `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some host hypergraph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u64 << v);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    InvalidUniformity { r: usize, n: usize },
    TooManyVertices { n: usize },
    WrongArity { expected: usize, got: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    RepeatedVertex { vertex: usize },
    DuplicateEdge,
    /// Text format: header line is missing or does not match `hg <r> <n> <m>`.
    MalformedHeader { line: usize },
    /// Text format: a line is neither a comment, blank, nor a valid `e ...` line.
    MalformedLine { line: usize },
    /// Text format: edge vertices must be strictly increasing.
    UnsortedEdge { line: usize },
    /// Text format: declared edge count does not match the number of edge lines.
    EdgeCountMismatch { declared: usize, got: usize },
}

impl fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use HypergraphError::*;
        match self {
            InvalidUniformity { r, n } => write!(f, "invalid uniformity r={r} for n={n} vertices"),
            TooManyVertices { n } => write!(f, "vertex count {n} exceeds the bitmask limit {MAX_VERTICES}"),
            WrongArity { expected, got } => write!(f, "edge has {got} vertices, expected {expected}"),
            VertexOutOfRange { vertex, n } => write!(f, "vertex {vertex} out of range for n={n}"),
            RepeatedVertex { vertex } => write!(f, "vertex {vertex} repeated within an edge"),
            DuplicateEdge => write!(f, "duplicate edge"),
            MalformedHeader { line } => write!(f, "line {line}: malformed header, expected `hg <r> <n> <m>`"),
            MalformedLine { line } => write!(f, "line {line}: malformed line"),
            UnsortedEdge { line } => write!(f, "line {line}: edge vertices must be strictly increasing"),
            EdgeCountMismatch { declared, got } => {
                write!(f, "header declares {declared} edges but {got} were given")
            }
        }
    }
}

impl core::error::Error for HypergraphError {}

/// An r-uniform hypergraph on vertices `0..n`.
///
/// Edges are pairwise distinct, each stored as a strictly increasing tuple,
/// and the edge list is sorted lexicographically. All values are immutable
/// after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
    masks: Vec<u64>,
}

impl Hypergraph {
    /// Builds a hypergraph from an arbitrary edge list. Vertices within each
    /// edge may come in any order; edges are canonicalized and validated.
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph, HypergraphError> {
        if r < 1 || r > n {
            return Err(HypergraphError::InvalidUniformity { r, n });
        }
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices { n });
        }
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        for mut e in edges {
            if e.len() != r {
                return Err(HypergraphError::WrongArity { expected: r, got: e.len() });
            }
            e.sort_unstable();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    return Err(HypergraphError::RepeatedVertex { vertex: w[0] });
                }
            }
            if let Some(&v) = e.last() {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            canon.push(e);
        }
        canon.sort_unstable();
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(HypergraphError::DuplicateEdge);
            }
        }
        let masks = canon.iter().map(|e| edge_mask(e)).collect();
        Ok(Hypergraph { n, r, edges: canon, masks })
    }

    /// The hypergraph on `n` vertices with no edges.
    pub fn edgeless(n: usize, r: usize) -> Result<Hypergraph, HypergraphError> {
        Hypergraph::new(n, r, Vec::new())
    }

    /// The complete r-uniform hypergraph: all r-subsets of `0..n`, in
    /// lexicographic order.
    pub fn complete(n: usize, r: usize) -> Result<Hypergraph, HypergraphError> {
        if r < 1 || r > n {
            return Err(HypergraphError::InvalidUniformity { r, n });
        }
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices { n });
        }
        let mut edges = Vec::new();
        let mut combo: Vec<usize> = (0..r).collect();
        loop {
            edges.push(combo.clone());
            // next r-combination of 0..n in lexicographic order
            let mut i = r;
            loop {
                if i == 0 {
                    let masks = edges.iter().map(|e: &Vec<usize>| edge_mask(e)).collect();
                    return Ok(Hypergraph { n, r, edges, masks });
                }
                i -= 1;
                if combo[i] != i + n - r {
                    break;
                }
            }
            combo[i] += 1;
            for j in i + 1..r {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[usize] {
        &self.edges[index]
    }

    /// Bitmask of the vertices of edge `index`.
    pub fn edge_vertex_mask(&self, index: usize) -> u64 {
        self.masks[index]
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<(), HypergraphError> {
        if v >= self.n {
            Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<(), HypergraphError> {
        if !s.is_subset_of(self.vertex_set()) {
            let bad = s.iter().find(|&v| v >= self.n).unwrap_or(self.n);
            Err(HypergraphError::VertexOutOfRange { vertex: bad, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize, HypergraphError> {
        self.check_vertex(v)?;
        let bit = 1u64 << v;
        Ok(self.masks.iter().filter(|&&m| m & bit != 0).count())
    }

    /// Vertices of `s` sharing an edge with `v`; `v` itself is excluded.
    pub fn neighborhood(&self, v: usize, s: VertexSet) -> Result<VertexSet, HypergraphError> {
        self.check_vertex(v)?;
        self.check_set(s)?;
        let bit = 1u64 << v;
        let mut acc = 0u64;
        for &m in &self.masks {
            if m & bit != 0 {
                acc |= m;
            }
        }
        Ok(VertexSet::from_mask(acc & s.mask() & !bit))
    }

    /// Subhypergraph induced on `s`, relabeled to `0..|s|` preserving vertex
    /// order. The returned map sends new indices to original vertices.
    pub fn induced(&self, s: VertexSet) -> Result<(Hypergraph, Vec<usize>), HypergraphError> {
        self.check_set(s)?;
        let old_of_new: Vec<usize> = s.iter().collect();
        let mut new_of_old = vec![usize::MAX; self.n];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let smask = s.mask();
        let mut edges = Vec::new();
        for (e, &m) in self.edges.iter().zip(&self.masks) {
            if m & !smask == 0 {
                edges.push(e.iter().map(|&v| new_of_old[v]).collect());
            }
        }
        let n_new = old_of_new.len();
        if n_new >= self.r {
            // Relabeling is monotone, so canonical order is preserved.
            let h = Hypergraph::new(n_new, self.r, edges)?;
            Ok((h, old_of_new))
        } else {
            // Fewer vertices than r: no edge can survive. Built directly
            // because `new` rejects r > n.
            let h = Hypergraph { n: n_new, r: self.r, edges: Vec::new(), masks: Vec::new() };
            Ok((h, old_of_new))
        }
    }

    /// Removes `v` and every edge containing it; remaining vertices above `v`
    /// shift down by one. The returned map sends new indices to originals.
    pub fn remove_vertex(&self, v: usize) -> Result<(Hypergraph, Vec<usize>), HypergraphError> {
        self.check_vertex(v)?;
        let mut keep = self.vertex_set();
        keep.remove(v);
        self.induced(keep)
    }

    /// True if some edge contains both `u` and `v`.
    pub fn contains_pair(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || u == v {
            return false;
        }
        let bits = (1u64 << u) | (1u64 << v);
        self.masks.iter().any(|&m| m & bits == bits)
    }

    /// Indices of edges containing both `u` and `v`.
    pub fn edges_with_pair(&self, u: usize, v: usize) -> Vec<usize> {
        let bits = (1u64 << u) | (1u64 << v);
        self.masks
            .iter()
            .enumerate()
            .filter(|(_, &m)| m & bits == bits)
            .map(|(i, _)| i)
            .collect()
    }

    /// Parses the `.hg` text format.
    ///
    /// ```text
    /// hg <r> <n> <m>
    /// e v1 v2 ... vr      (m lines, v1 < v2 < ... < vr, 0-based)
    /// ```
    /// Lines starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Hypergraph, HypergraphError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut header_line = 0;
        let mut edges: Vec<Vec<usize>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let tag = tokens.next().unwrap();
            if header.is_none() {
                if tag != "hg" {
                    return Err(HypergraphError::MalformedHeader { line: lineno });
                }
                let nums: Option<Vec<usize>> = tokens.map(|t| t.parse().ok()).collect();
                match nums.as_deref() {
                    Some([r, n, m]) => {
                        header = Some((*r, *n, *m));
                        header_line = lineno;
                    }
                    _ => return Err(HypergraphError::MalformedHeader { line: lineno }),
                }
                continue;
            }
            if tag != "e" {
                return Err(HypergraphError::MalformedLine { line: lineno });
            }
            let verts: Option<Vec<usize>> = tokens.map(|t| t.parse().ok()).collect();
            let verts = verts.ok_or(HypergraphError::MalformedLine { line: lineno })?;
            let (r, n, _) = header.unwrap();
            if verts.len() != r {
                return Err(HypergraphError::WrongArity { expected: r, got: verts.len() });
            }
            for w in verts.windows(2) {
                if w[0] == w[1] {
                    return Err(HypergraphError::RepeatedVertex { vertex: w[0] });
                }
                if w[0] > w[1] {
                    return Err(HypergraphError::UnsortedEdge { line: lineno });
                }
            }
            if let Some(&v) = verts.last() {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            edges.push(verts);
        }
        let (r, n, m) = header.ok_or(HypergraphError::MalformedHeader { line: header_line.max(1) })?;
        if edges.len() != m {
            return Err(HypergraphError::EdgeCountMismatch { declared: m, got: edges.len() });
        }
        Hypergraph::new(n, r, edges)
    }

    /// Serializes to the `.hg` text format in canonical edge order.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "hg {} {} {}", self.r, self.n, self.edges.len());
        for e in &self.edges {
            out.push('e');
            for v in e {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, r={}, edges={:?})", self.n, self.r, self.edges)
    }
}

fn edge_mask(e: &[usize]) -> u64 {
    e.iter().fold(0u64, |m, &v| m | (1u64 << v))
}
