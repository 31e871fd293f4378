//! Finding and refuting Berge copies with matching-based certificates.
//!
//! A Berge copy of a pattern graph G in a host hypergraph is an injective
//! assignment of pattern edges to hyperedges such that each hyperedge
//! contains the images of its pattern edge's endpoints. Candidate cores are
//! enumerated combinatorially (pruned by shadow pairs); each candidate is
//! decided by a single SDR computation, which absorbs all assignment
//! combinatorics. Searches are exact: a `None` answer means no copy exists.
//!
//! Intended scale: hosts up to ~16 vertices, cliques up to ~12 vertices,
//! cycle lengths up to ~8 on dense hosts. The two `lift_shadow_*` operations
//! convert a cycle/clique in the thresholded shadow into a monochromatic
//! Berge copy; when their preconditions hold the lift cannot fail.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::hypergraph::{Hypergraph, VertexSet};
use crate::matching::{sdr, SdrOutcome, SetFamily};
use crate::shadow::ColoredHypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BergeError {
    WrongUniformity { r: usize },
    CycleTooShort { n: usize },
    CliqueTooSmall { m: usize },
    PatternLoop { vertex: usize },
    PatternDuplicateEdge { a: usize, b: usize },
    PatternVertexOutOfRange { vertex: usize, n: usize },
    CoreVertexOutOfRange { vertex: usize },
    CoreVertexRepeated { vertex: usize },
    MalformedCertificate { line: usize },
}

impl fmt::Display for BergeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use BergeError::*;
        match self {
            WrongUniformity { r } => write!(f, "detection requires a 3-uniform host, got r={r}"),
            CycleTooShort { n } => write!(f, "Berge cycles need length >= 3, got {n}"),
            CliqueTooSmall { m } => write!(f, "Berge cliques need order >= 2, got {m}"),
            PatternLoop { vertex } => write!(f, "pattern has a loop at vertex {vertex}"),
            PatternDuplicateEdge { a, b } => write!(f, "pattern edge {{{a},{b}}} repeated"),
            PatternVertexOutOfRange { vertex, n } => {
                write!(f, "pattern vertex {vertex} out of range for n={n}")
            }
            CoreVertexOutOfRange { vertex } => write!(f, "core vertex {vertex} out of range"),
            CoreVertexRepeated { vertex } => write!(f, "core vertex {vertex} repeated"),
            MalformedCertificate { line } => write!(f, "line {line}: malformed certificate"),
        }
    }
}

impl core::error::Error for BergeError {}

/// A simple graph used as a Berge pattern. Edge order is preserved exactly
/// as given; certificates index their assignments by it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl PatternGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<PatternGraph, BergeError> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            if a == b {
                return Err(BergeError::PatternLoop { vertex: a });
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(BergeError::PatternVertexOutOfRange {
                    vertex: a.max(b),
                    n: vertex_count,
                });
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(BergeError::PatternDuplicateEdge { a: a.min(b), b: a.max(b) });
            }
        }
        Ok(PatternGraph { vertex_count, edges })
    }

    /// The cycle on `n` vertices with edges (0,1), (1,2), ..., (n-1,0).
    pub fn cycle(n: usize) -> Result<PatternGraph, BergeError> {
        if n < 3 {
            return Err(BergeError::CycleTooShort { n });
        }
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        PatternGraph::new(n, edges)
    }

    /// The complete graph on `m` vertices with edges in lexicographic order.
    pub fn clique(m: usize) -> Result<PatternGraph, BergeError> {
        if m < 2 {
            return Err(BergeError::CliqueTooSmall { m });
        }
        let mut edges = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                edges.push((i, j));
            }
        }
        PatternGraph::new(m, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }
}

/// Which Berge family to look for, one per color in Ramsey instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// All 3-uniform Berge cycles of this length.
    Cycle(usize),
    /// All 3-uniform Berge copies of the complete graph of this order.
    Clique(usize),
    /// All 3-uniform Berge copies of an arbitrary simple pattern.
    Pattern(PatternGraph),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), BergeError> {
        match self {
            FamilySpec::Cycle(n) if *n < 3 => Err(BergeError::CycleTooShort { n: *n }),
            FamilySpec::Clique(m) if *m < 2 => Err(BergeError::CliqueTooSmall { m: *m }),
            _ => Ok(()),
        }
    }

    /// Number of core vertices of any member.
    pub fn core_size(&self) -> usize {
        match self {
            FamilySpec::Cycle(n) => *n,
            FamilySpec::Clique(m) => *m,
            FamilySpec::Pattern(g) => g.vertex_count(),
        }
    }

    /// Number of hyperedges of any member.
    pub fn edge_count(&self) -> usize {
        match self {
            FamilySpec::Cycle(n) => *n,
            FamilySpec::Clique(m) => m * (m - 1) / 2,
            FamilySpec::Pattern(g) => g.edges().len(),
        }
    }

    /// The host vertex pairs a certificate core must cover, in the
    /// documented assignment order: cycle edges follow the core cyclically,
    /// clique edges are in lexicographic position order, general patterns in
    /// input edge order.
    pub fn core_pairs(&self, core: &[usize]) -> Vec<(usize, usize)> {
        match self {
            FamilySpec::Cycle(n) => (0..*n).map(|i| (core[i], core[(i + 1) % n])).collect(),
            FamilySpec::Clique(m) => {
                let mut pairs = Vec::new();
                for i in 0..*m {
                    for j in i + 1..*m {
                        pairs.push((core[i], core[j]));
                    }
                }
                pairs
            }
            FamilySpec::Pattern(g) => g.edges().iter().map(|&(a, b)| (core[a], core[b])).collect(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "BC:{n}"),
            FamilySpec::Clique(m) => write!(f, "BK:{m}"),
            FamilySpec::Pattern(g) => write!(f, "BG:{}v{}e", g.vertex_count(), g.edges().len()),
        }
    }
}

/// A checkable witness that a host contains a Berge copy: the core vertices
/// plus an injective assignment of pattern edges to hyperedge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeCertificate {
    /// Core vertices. For cycles this is the cyclic order; for cliques it is
    /// ascending; for general patterns it follows the pattern's vertex order.
    pub core: Vec<usize>,
    /// Hyperedge index per pattern edge, in the order of
    /// [`FamilySpec::core_pairs`].
    pub assignment: Vec<usize>,
}

/// Everything wrong a certificate can be; `check_certificate` reports the
/// first failure in checking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateViolation {
    InvalidSpec,
    CoreSizeMismatch { expected: usize, got: usize },
    CoreVertexOutOfRange { vertex: usize },
    CoreVertexRepeated { vertex: usize },
    AssignmentSizeMismatch { expected: usize, got: usize },
    HyperedgeOutOfRange { index: usize },
    HyperedgeRepeated { index: usize },
    PairNotCovered { u: usize, v: usize, index: usize },
    ColoringBaseMismatch,
    WrongColor { index: usize, expected: usize, got: usize },
}

impl fmt::Display for CertificateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CertificateViolation::*;
        match self {
            InvalidSpec => write!(f, "family spec is itself invalid"),
            CoreSizeMismatch { expected, got } => write!(f, "core has {got} vertices, expected {expected}"),
            CoreVertexOutOfRange { vertex } => write!(f, "core vertex {vertex} out of range"),
            CoreVertexRepeated { vertex } => write!(f, "core vertex {vertex} repeated"),
            AssignmentSizeMismatch { expected, got } => {
                write!(f, "assignment has {got} hyperedges, expected {expected}")
            }
            HyperedgeOutOfRange { index } => write!(f, "hyperedge index {index} out of range"),
            HyperedgeRepeated { index } => write!(f, "hyperedge index {index} used twice"),
            PairNotCovered { u, v, index } => {
                write!(f, "hyperedge {index} does not contain the core pair {{{u},{v}}}")
            }
            ColoringBaseMismatch => write!(f, "coloring belongs to a different hypergraph"),
            WrongColor { index, expected, got } => {
                write!(f, "hyperedge {index} has color {got}, required {expected}")
            }
        }
    }
}

impl core::error::Error for CertificateViolation {}

/// Pure re-verification of a certificate against a host, independent of the
/// search code. With a color filter, every assigned hyperedge must also have
/// the stated color in the given coloring.
pub fn check_certificate(
    h: &Hypergraph,
    cert: &BergeCertificate,
    spec: &FamilySpec,
    color_filter: Option<(&ColoredHypergraph, usize)>,
) -> Result<(), CertificateViolation> {
    if spec.validate().is_err() {
        return Err(CertificateViolation::InvalidSpec);
    }
    let expected_core = spec.core_size();
    if cert.core.len() != expected_core {
        return Err(CertificateViolation::CoreSizeMismatch { expected: expected_core, got: cert.core.len() });
    }
    let mut seen = BTreeSet::new();
    for &v in &cert.core {
        if v >= h.vertex_count() {
            return Err(CertificateViolation::CoreVertexOutOfRange { vertex: v });
        }
        if !seen.insert(v) {
            return Err(CertificateViolation::CoreVertexRepeated { vertex: v });
        }
    }
    let pairs = spec.core_pairs(&cert.core);
    if cert.assignment.len() != pairs.len() {
        return Err(CertificateViolation::AssignmentSizeMismatch {
            expected: pairs.len(),
            got: cert.assignment.len(),
        });
    }
    let mut used = BTreeSet::new();
    for &index in &cert.assignment {
        if index >= h.edge_count() {
            return Err(CertificateViolation::HyperedgeOutOfRange { index });
        }
        if !used.insert(index) {
            return Err(CertificateViolation::HyperedgeRepeated { index });
        }
    }
    for (&index, &(u, v)) in cert.assignment.iter().zip(&pairs) {
        let bits = (1u64 << u) | (1u64 << v);
        if h.edge_vertex_mask(index) & bits != bits {
            return Err(CertificateViolation::PairNotCovered { u, v, index });
        }
    }
    if let Some((ch, color)) = color_filter {
        if ch.base() != h {
            return Err(CertificateViolation::ColoringBaseMismatch);
        }
        for &index in &cert.assignment {
            let got = ch.color_of(index);
            if got != color {
                return Err(CertificateViolation::WrongColor { index, expected: color, got });
            }
        }
    }
    Ok(())
}

fn require_3_uniform(h: &Hypergraph) -> Result<(), BergeError> {
    if h.uniformity() != 3 {
        Err(BergeError::WrongUniformity { r: h.uniformity() })
    } else {
        Ok(())
    }
}

/// Per-pair hyperedge index lists, the workhorse lookup for every search.
struct PairTable {
    n: usize,
    lists: Vec<Vec<usize>>,
}

impl PairTable {
    fn build(h: &Hypergraph) -> PairTable {
        let n = h.vertex_count();
        let mut lists = vec![Vec::new(); n * n];
        for (i, e) in h.edges().iter().enumerate() {
            for a in 0..e.len() {
                for b in a + 1..e.len() {
                    lists[e[a] * n + e[b]].push(i);
                }
            }
        }
        PairTable { n, lists }
    }

    fn edges_of(&self, u: usize, v: usize) -> &[usize] {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        &self.lists[a * self.n + b]
    }

    fn is_pair(&self, u: usize, v: usize) -> bool {
        !self.edges_of(u, v).is_empty()
    }
}

fn sdr_over_pairs(table: &PairTable, pairs: &[(usize, usize)]) -> Option<Vec<usize>> {
    let family = SetFamily::new(
        pairs
            .iter()
            .map(|&(u, v)| table.edges_of(u, v).iter().copied().collect())
            .collect(),
    );
    match sdr(&family) {
        SdrOutcome::Representatives(reps) => Some(reps),
        SdrOutcome::HallViolation(_) => None,
    }
}

/// Finds a Berge cycle of length exactly `n`, if one exists.
///
/// Candidate cores are enumerated as cyclic sequences canonical up to
/// rotation and reflection (minimum vertex first, second vertex smaller than
/// last), in lexicographic order; the first core admitting an SDR wins, so
/// results are deterministic.
pub fn find_berge_cycle(h: &Hypergraph, n: usize) -> Result<Option<BergeCertificate>, BergeError> {
    require_3_uniform(h)?;
    if n < 3 {
        return Err(BergeError::CycleTooShort { n });
    }
    if n > h.vertex_count() || h.edge_count() < n {
        return Ok(None);
    }
    let table = PairTable::build(h);
    let mut seq = Vec::with_capacity(n);
    for v0 in 0..h.vertex_count() {
        seq.clear();
        seq.push(v0);
        if let Some(cert) = extend_cycle(h, &table, n, &mut seq) {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

fn extend_cycle(h: &Hypergraph, table: &PairTable, n: usize, seq: &mut Vec<usize>) -> Option<BergeCertificate> {
    if seq.len() == n {
        let v0 = seq[0];
        if !table.is_pair(seq[n - 1], v0) {
            return None;
        }
        // Reflection canonicalization: the reversed traversal visits the
        // same pairs, so only one direction needs checking.
        if n > 3 && seq[1] > seq[n - 1] {
            return None;
        }
        let spec = FamilySpec::Cycle(n);
        let pairs = spec.core_pairs(seq);
        return sdr_over_pairs(table, &pairs).map(|assignment| BergeCertificate {
            core: seq.clone(),
            assignment,
        });
    }
    let v0 = seq[0];
    let prev = *seq.last().unwrap();
    for cand in v0 + 1..h.vertex_count() {
        if seq.contains(&cand) || !table.is_pair(prev, cand) {
            continue;
        }
        if n == 3 && seq.len() == 2 && seq[1] > cand {
            continue; // reflection dedup for triangles
        }
        seq.push(cand);
        if let Some(cert) = extend_cycle(h, table, n, seq) {
            return Some(cert);
        }
        seq.pop();
    }
    None
}

/// Like [`find_berge_cycle`] but with the cyclic core fixed by the caller.
pub fn find_berge_cycle_on_core(h: &Hypergraph, core: &[usize]) -> Result<Option<BergeCertificate>, BergeError> {
    require_3_uniform(h)?;
    if core.len() < 3 {
        return Err(BergeError::CycleTooShort { n: core.len() });
    }
    check_core(h, core)?;
    let table = PairTable::build(h);
    let spec = FamilySpec::Cycle(core.len());
    let pairs = spec.core_pairs(core);
    Ok(sdr_over_pairs(&table, &pairs).map(|assignment| BergeCertificate {
        core: core.to_vec(),
        assignment,
    }))
}

fn check_core(h: &Hypergraph, core: &[usize]) -> Result<(), BergeError> {
    let mut seen = BTreeSet::new();
    for &v in core {
        if v >= h.vertex_count() {
            return Err(BergeError::CoreVertexOutOfRange { vertex: v });
        }
        if !seen.insert(v) {
            return Err(BergeError::CoreVertexRepeated { vertex: v });
        }
    }
    Ok(())
}

/// Finds a Berge clique of order exactly `m`, if one exists.
///
/// Candidate cores are the m-subsets in lexicographic order, pruned by
/// shadow-pair completeness and the degree bound (each core vertex must lie
/// in at least m-1 hyperedges).
pub fn find_berge_clique(h: &Hypergraph, m: usize) -> Result<Option<BergeCertificate>, BergeError> {
    require_3_uniform(h)?;
    if m < 2 {
        return Err(BergeError::CliqueTooSmall { m });
    }
    if m > h.vertex_count() || h.edge_count() < m * (m - 1) / 2 {
        return Ok(None);
    }
    let table = PairTable::build(h);
    let eligible: Vec<bool> = (0..h.vertex_count())
        .map(|v| h.degree(v).unwrap_or(0) >= m - 1)
        .collect();
    let mut chosen = Vec::with_capacity(m);
    Ok(extend_clique(h, &table, &eligible, m, 0, &mut chosen))
}

fn extend_clique(
    h: &Hypergraph,
    table: &PairTable,
    eligible: &[bool],
    m: usize,
    from: usize,
    chosen: &mut Vec<usize>,
) -> Option<BergeCertificate> {
    if chosen.len() == m {
        let spec = FamilySpec::Clique(m);
        let pairs = spec.core_pairs(chosen);
        return sdr_over_pairs(table, &pairs).map(|assignment| BergeCertificate {
            core: chosen.clone(),
            assignment,
        });
    }
    let slots_left = m - chosen.len();
    for cand in from..h.vertex_count() {
        if h.vertex_count() - cand < slots_left {
            break;
        }
        if !eligible[cand] || !chosen.iter().all(|&u| table.is_pair(u, cand)) {
            continue;
        }
        chosen.push(cand);
        if let Some(cert) = extend_clique(h, table, eligible, m, cand + 1, chosen) {
            return Some(cert);
        }
        chosen.pop();
    }
    None
}

/// Finds a Berge copy of an arbitrary simple pattern graph.
///
/// Pattern vertices are embedded in descending-degree order by a backtracking
/// injective map pruned by shadow pairs; the completed map is decided by one
/// SDR over the pattern edges in input order.
pub fn find_berge_copy(h: &Hypergraph, pattern: &PatternGraph) -> Result<Option<BergeCertificate>, BergeError> {
    require_3_uniform(h)?;
    if pattern.vertex_count() > h.vertex_count() || pattern.edges().len() > h.edge_count() {
        return Ok(None);
    }
    let table = PairTable::build(h);
    let mut order: Vec<usize> = (0..pattern.vertex_count()).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(pattern.degree(v)), v));
    let mut map = vec![usize::MAX; pattern.vertex_count()];
    let mut used = vec![false; h.vertex_count()];
    Ok(embed_pattern(h, &table, pattern, &order, 0, &mut map, &mut used))
}

fn embed_pattern(
    h: &Hypergraph,
    table: &PairTable,
    pattern: &PatternGraph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<BergeCertificate> {
    if depth == order.len() {
        let spec = FamilySpec::Pattern(pattern.clone());
        let pairs = spec.core_pairs(map);
        return sdr_over_pairs(table, &pairs).map(|assignment| BergeCertificate {
            core: map.clone(),
            assignment,
        });
    }
    let pv = order[depth];
    'hosts: for host in 0..h.vertex_count() {
        if used[host] {
            continue;
        }
        for &(a, b) in pattern.edges() {
            let other = if a == pv { b } else if b == pv { a } else { continue };
            if map[other] != usize::MAX && !table.is_pair(host, map[other]) {
                continue 'hosts;
            }
        }
        map[pv] = host;
        used[host] = true;
        if let Some(cert) = embed_pattern(h, table, pattern, order, depth + 1, map, used) {
            return Some(cert);
        }
        used[host] = false;
        map[pv] = usize::MAX;
    }
    None
}

/// Finds a copy of any `FamilySpec` member, dispatching to the specialized
/// searches for cycles and cliques.
pub fn find_member(h: &Hypergraph, spec: &FamilySpec) -> Result<Option<BergeCertificate>, BergeError> {
    match spec {
        FamilySpec::Cycle(n) => find_berge_cycle(h, *n),
        FamilySpec::Clique(m) => find_berge_clique(h, *m),
        FamilySpec::Pattern(g) => find_berge_copy(h, g),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftError {
    WrongUniformity { r: usize },
    ColorOutOfRange { color: usize, color_count: usize },
    CoreTooSmall { size: usize, minimum: usize },
    CoreVertexOutOfRange { vertex: usize },
    CoreVertexRepeated { vertex: usize },
    /// The stated pair has fewer same-colored containers than the lemma
    /// requires; the lift is not applicable (this is not a search failure).
    PreconditionViolated { u: usize, v: usize, color: usize, count: usize, needed: usize },
}

impl fmt::Display for LiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LiftError::*;
        match self {
            WrongUniformity { r } => write!(f, "lifting requires a 3-uniform host, got r={r}"),
            ColorOutOfRange { color, color_count } => {
                write!(f, "color {color} out of range for {color_count} colors")
            }
            CoreTooSmall { size, minimum } => write!(f, "core has {size} vertices, need at least {minimum}"),
            CoreVertexOutOfRange { vertex } => write!(f, "core vertex {vertex} out of range"),
            CoreVertexRepeated { vertex } => write!(f, "core vertex {vertex} repeated"),
            PreconditionViolated { u, v, color, count, needed } => write!(
                f,
                "pair {{{u},{v}}} lies in only {count} hyperedges of color {color}, need {needed}"
            ),
        }
    }
}

impl core::error::Error for LiftError {}

fn lift_prepare(
    ch: &ColoredHypergraph,
    core: &[usize],
    color: usize,
    minimum: usize,
) -> Result<(), LiftError> {
    if ch.base().uniformity() != 3 {
        return Err(LiftError::WrongUniformity { r: ch.base().uniformity() });
    }
    if color >= ch.color_count() {
        return Err(LiftError::ColorOutOfRange { color, color_count: ch.color_count() });
    }
    if core.len() < minimum {
        return Err(LiftError::CoreTooSmall { size: core.len(), minimum });
    }
    let mut seen = BTreeSet::new();
    for &v in core {
        if v >= ch.base().vertex_count() {
            return Err(LiftError::CoreVertexOutOfRange { vertex: v });
        }
        if !seen.insert(v) {
            return Err(LiftError::CoreVertexRepeated { vertex: v });
        }
    }
    Ok(())
}

fn lift_over_pairs(
    ch: &ColoredHypergraph,
    core: &[usize],
    color: usize,
    pairs: &[(usize, usize)],
    needed: usize,
) -> Result<BergeCertificate, LiftError> {
    let mut sets: Vec<BTreeSet<usize>> = Vec::with_capacity(pairs.len());
    for &(u, v) in pairs {
        let bits = (1u64 << u) | (1u64 << v);
        let set: BTreeSet<usize> = (0..ch.base().edge_count())
            .filter(|&i| ch.color_of(i) == color && ch.base().edge_vertex_mask(i) & bits == bits)
            .collect();
        if set.len() < needed {
            return Err(LiftError::PreconditionViolated { u, v, color, count: set.len(), needed });
        }
        sets.push(set);
    }
    match sdr(&SetFamily::new(sets)) {
        SdrOutcome::Representatives(assignment) => Ok(BergeCertificate {
            core: core.to_vec(),
            assignment,
        }),
        // With every pair in >= `needed` same-colored hyperedges and each
        // hyperedge covering at most `needed` of the pattern pairs, Hall's
        // condition holds; reaching this branch is a defect, not an input error.
        SdrOutcome::HallViolation(w) => {
            panic!("lift precondition held but no SDR was found (witness {:?})", w.indices)
        }
    }
}

/// Lifts a cycle in the threshold-2 shadow to a monochromatic Berge cycle.
///
/// Precondition: every consecutive pair of `core` lies in at least two
/// hyperedges of the given color. Under that condition a certificate always
/// exists (each hyperedge covers at most two consecutive core pairs).
pub fn lift_shadow_cycle(
    ch: &ColoredHypergraph,
    core: &[usize],
    color: usize,
) -> Result<BergeCertificate, LiftError> {
    lift_prepare(ch, core, color, 3)?;
    let spec = FamilySpec::Cycle(core.len());
    let pairs = spec.core_pairs(core);
    lift_over_pairs(ch, core, color, &pairs, 2)
}

/// Lifts a clique in the threshold-3 shadow to a monochromatic Berge clique.
///
/// Precondition: every pair within `core` lies in at least three hyperedges
/// of the given color; the core is taken in ascending order.
pub fn lift_shadow_clique(
    ch: &ColoredHypergraph,
    core: VertexSet,
    color: usize,
) -> Result<BergeCertificate, LiftError> {
    let sorted: Vec<usize> = core.iter().collect();
    lift_prepare(ch, &sorted, color, 2)?;
    let spec = FamilySpec::Clique(sorted.len());
    let pairs = spec.core_pairs(&sorted);
    lift_over_pairs(ch, &sorted, color, &pairs, 3)
}

/// Kind tag of a serialized certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertKind {
    Cycle,
    Clique,
    Graph,
}

impl CertKind {
    fn as_str(self) -> &'static str {
        match self {
            CertKind::Cycle => "cycle",
            CertKind::Clique => "clique",
            CertKind::Graph => "graph",
        }
    }
}

/// A certificate plus the header data of the `.cert` text format:
///
/// ```text
/// cert <cycle|clique|graph> <n-or-m> [color <c>]
/// core v1 v2 ... vk
/// assign e1 e2 ... e|E(G)|
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateDocument {
    pub kind: CertKind,
    pub size: usize,
    pub color: Option<usize>,
    pub certificate: BergeCertificate,
}

impl CertificateDocument {
    /// The family spec this document claims membership of; `None` for the
    /// `graph` kind, whose pattern must be supplied out of band.
    pub fn family_spec(&self) -> Option<FamilySpec> {
        match self.kind {
            CertKind::Cycle => Some(FamilySpec::Cycle(self.size)),
            CertKind::Clique => Some(FamilySpec::Clique(self.size)),
            CertKind::Graph => None,
        }
    }

    pub fn parse(text: &str) -> Result<CertificateDocument, BergeError> {
        let mut kind = None;
        let mut size = 0;
        let mut color = None;
        let mut core: Option<Vec<usize>> = None;
        let mut assignment: Option<Vec<usize>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            match tokens.next().unwrap() {
                "cert" if kind.is_none() => {
                    kind = Some(match tokens.next() {
                        Some("cycle") => CertKind::Cycle,
                        Some("clique") => CertKind::Clique,
                        Some("graph") => CertKind::Graph,
                        _ => return Err(BergeError::MalformedCertificate { line: lineno }),
                    });
                    size = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(BergeError::MalformedCertificate { line: lineno })?;
                    match tokens.next() {
                        None => {}
                        Some("color") => {
                            color = Some(
                                tokens
                                    .next()
                                    .and_then(|t| t.parse().ok())
                                    .ok_or(BergeError::MalformedCertificate { line: lineno })?,
                            );
                        }
                        Some(_) => return Err(BergeError::MalformedCertificate { line: lineno }),
                    }
                }
                "core" if kind.is_some() && core.is_none() => {
                    let vs: Option<Vec<usize>> = tokens.map(|t| t.parse().ok()).collect();
                    core = Some(vs.ok_or(BergeError::MalformedCertificate { line: lineno })?);
                }
                "assign" if core.is_some() && assignment.is_none() => {
                    let es: Option<Vec<usize>> = tokens.map(|t| t.parse().ok()).collect();
                    assignment = Some(es.ok_or(BergeError::MalformedCertificate { line: lineno })?);
                }
                _ => return Err(BergeError::MalformedCertificate { line: lineno }),
            }
        }
        match (kind, core, assignment) {
            (Some(kind), Some(core), Some(assignment)) => Ok(CertificateDocument {
                kind,
                size,
                color,
                certificate: BergeCertificate { core, assignment },
            }),
            _ => Err(BergeError::MalformedCertificate { line: 1 }),
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "cert {} {}", self.kind.as_str(), self.size);
        if let Some(c) = self.color {
            let _ = write!(out, " color {c}");
        }
        out.push('\n');
        out.push_str("core");
        for v in &self.certificate.core {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
        out.push_str("assign");
        for e in &self.certificate.assignment {
            let _ = write!(out, " {e}");
        }
        out.push('\n');
        out
    }
}
