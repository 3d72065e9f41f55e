//! Cluster polynomials over marked fillings.
//!
//! A mark asserts that a window of consecutive body columns reduces to a
//! member of a pattern set. A scheme is a set of marks that covers a window
//! completely and, sorted by `(start, width)`, overlaps link to link: each
//! mark shares at least one column with the next. The cluster polynomial
//! weights schemes by their linear-extension counts; the generalized
//! variants decompose a diagram into single columns, scheme-covered blocks,
//! and optional prefix/suffix anchors, with the column relation failing
//! across every block boundary, signed by `(-1)^(blocks - 1)`.

use crate::combi::{ColumnRelation, DiagramShape, Filling, PatternSet};
use crate::egf::MultiPoly;
use crate::error::{invalid, Error, Result};
use crate::oracle;
use crate::poset::CellPoset;
use num_bigint::BigInt;

/// A marked match: `start` is the 1-based first column of the window
/// (relative to the enclosing block for schemes, absolute for fillings),
/// `set` the pattern-set slice position, `member` the pattern within it.
/// The derived order is the canonical `(start, width, set, member)` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mark {
    pub start: usize,
    pub width: usize,
    pub set: usize,
    pub member: usize,
}

impl Mark {
    pub fn end(&self) -> usize {
        self.start + self.width - 1
    }
}

/// A scheme: marks covering columns `1..=width` with chained overlaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkScheme {
    pub width: usize,
    pub marks: Vec<Mark>,
}

impl MarkScheme {
    /// Exponent vector: how many marks each pattern set contributes.
    pub fn exponents(&self, sets: usize) -> Vec<u32> {
        let mut e = vec![0u32; sets];
        for m in &self.marks {
            e[m.set] += 1;
        }
        e
    }
}

/// All schemes on a window of `width >= 2` columns.
pub fn enumerate_schemes(width: usize, gs: &[PatternSet]) -> Vec<MarkScheme> {
    let mut cands: Vec<Mark> = Vec::new();
    for (s, set) in gs.iter().enumerate() {
        for (m, p) in set.members().iter().enumerate() {
            if p.width() > width {
                continue;
            }
            for start in 1..=width - p.width() + 1 {
                cands.push(Mark { start, width: p.width(), set: s, member: m });
            }
        }
    }
    cands.sort_unstable();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_scheme(width, &cands, &mut current, &mut out);
    out
}

fn extend_scheme(
    width: usize,
    cands: &[Mark],
    current: &mut Vec<Mark>,
    out: &mut Vec<MarkScheme>,
) {
    let from = match current.last() {
        None => 0,
        Some(last) => {
            if current.iter().map(Mark::end).max().unwrap() == width {
                out.push(MarkScheme { width, marks: current.clone() });
            }
            cands.partition_point(|c| c <= last)
        }
    };
    for idx in from..cands.len() {
        let cand = cands[idx];
        match current.last() {
            // the first mark must start the window
            None if cand.start != 1 => break,
            // consecutive marks in canonical order must share a column
            Some(last) if cand.start > last.start && cand.start > last.end() => break,
            _ => {}
        }
        current.push(cand);
        extend_scheme(width, cands, current, out);
        current.pop();
    }
}

/// Cluster polynomial on `n` body columns of height `k`: the sum over
/// schemes of the window `1..=n` of the scheme's linear-extension count
/// times its mark monomial. A single column carries no marks and counts 1.
pub fn cluster_polynomial(
    k: usize,
    n: usize,
    gs: &[PatternSet],
    poset_cap: usize,
) -> Result<MultiPoly> {
    check_sets(k, gs)?;
    if n == 0 {
        return Err(invalid("cluster polynomial needs at least one column"));
    }
    if n == 1 {
        return Ok(MultiPoly::one(gs.len()));
    }
    let mut acc = MultiPoly::zero(gs.len());
    for scheme in enumerate_schemes(n, gs) {
        let mut edges = Vec::new();
        column_chains(&mut edges, &vec![k; n]);
        scheme_edges(&mut edges, 0, k, &scheme, gs);
        let le = CellPoset::new(k * n, &edges).linear_extension_count(poset_cap)?;
        acc.add_term(&scheme.exponents(gs.len()), &BigInt::from(le));
    }
    Ok(acc)
}

fn check_sets(k: usize, gs: &[PatternSet]) -> Result<()> {
    if gs.is_empty() {
        return Err(invalid("need at least one pattern set"));
    }
    if gs.iter().any(|g| g.k() != k) {
        return Err(invalid("pattern sets must match the body height"));
    }
    Ok(())
}

fn column_chains(edges: &mut Vec<(usize, usize)>, heights: &[usize]) {
    let mut cell = 0;
    for &h in heights {
        for r in 0..h.saturating_sub(1) {
            edges.push((cell + r, cell + r + 1));
        }
        cell += h;
    }
}

/// Adds the total orders imposed by a scheme's marks; `base` is the cell
/// index of the bottom of the scheme's first column, whose columns all have
/// height `k` and consecutive cell ranges.
fn scheme_edges(
    edges: &mut Vec<(usize, usize)>,
    base: usize,
    k: usize,
    scheme: &MarkScheme,
    gs: &[PatternSet],
) {
    for mark in &scheme.marks {
        let p = &gs[mark.set].members()[mark.member];
        let order = p.cell_order();
        for w in order.windows(2) {
            let a = base + (mark.start - 1 + w[0].0) * k + w[0].1;
            let b = base + (mark.start - 1 + w[1].0) * k + w[1].1;
            edges.push((a, b));
        }
    }
}

/// Which anchors a generalized cluster polynomial carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenClusterKind {
    /// Body blocks only.
    Free,
    /// A prefix column is the first block.
    PrefixAnchored,
    /// A suffix column is the last block.
    SuffixAnchored,
    /// Both anchors; at least two blocks even with no body columns.
    BothAnchored,
}

impl GenClusterKind {
    pub fn has_prefix(&self) -> bool {
        matches!(self, GenClusterKind::PrefixAnchored | GenClusterKind::BothAnchored)
    }

    pub fn has_suffix(&self) -> bool {
        matches!(self, GenClusterKind::SuffixAnchored | GenClusterKind::BothAnchored)
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "gc" => Ok(GenClusterKind::Free),
            "gsc" => Ok(GenClusterKind::PrefixAnchored),
            "gec" => Ok(GenClusterKind::SuffixAnchored),
            "gsec" => Ok(GenClusterKind::BothAnchored),
            _ => Err(invalid(format!("unknown generalized kind `{s}`"))),
        }
    }
}

/// One block of a decomposition over the body columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    /// An unmarked column.
    SingleColumn { start: usize },
    /// A window covered by a scheme; `start` is its first body column.
    ClusterBlock { start: usize, scheme: MarkScheme },
}

impl Block {
    fn span(&self) -> (usize, usize) {
        match self {
            Block::SingleColumn { start } => (*start, *start),
            Block::ClusterBlock { start, scheme } => (*start, start + scheme.width - 1),
        }
    }
}

/// A full decomposition: body blocks in column order plus anchor flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub has_prefix: bool,
    pub has_suffix: bool,
}

impl BlockDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len() + usize::from(self.has_prefix) + usize::from(self.has_suffix)
    }

    pub fn sign(&self) -> BigInt {
        if self.block_count() % 2 == 1 {
            BigInt::from(1)
        } else {
            BigInt::from(-1)
        }
    }

    pub fn exponents(&self, sets: usize) -> Vec<u32> {
        let mut e = vec![0u32; sets];
        for b in &self.blocks {
            if let Block::ClusterBlock { scheme, .. } = b {
                for m in &scheme.marks {
                    e[m.set] += 1;
                }
            }
        }
        e
    }
}

/// Groups absolutely-positioned marks into the unique block decomposition of
/// `n` body columns, or `None` when no valid decomposition exists (a mark
/// starts inside the previous block's span without chaining onto it).
pub fn decompose_marks(
    marks: &[Mark],
    n: usize,
    kind: GenClusterKind,
) -> Option<BlockDecomposition> {
    debug_assert!(marks.windows(2).all(|w| w[0] <= w[1]), "marks must be sorted");
    let mut clusters: Vec<(usize, usize, Vec<Mark>)> = Vec::new();
    for &m in marks {
        match clusters.last_mut() {
            Some((_, max_end, chain)) if m.start <= chain.last().unwrap().end() => {
                *max_end = (*max_end).max(m.end());
                chain.push(m);
            }
            Some((_, max_end, _)) if m.start <= *max_end => return None,
            _ => clusters.push((m.start, m.end(), vec![m])),
        }
    }
    let mut blocks = Vec::new();
    let mut col = 1;
    for (start, end, chain) in clusters {
        while col < start {
            blocks.push(Block::SingleColumn { start: col });
            col += 1;
        }
        let width = end - start + 1;
        let marks = chain
            .into_iter()
            .map(|m| Mark { start: m.start - start + 1, ..m })
            .collect();
        blocks.push(Block::ClusterBlock { start, scheme: MarkScheme { width, marks } });
        col = end + 1;
    }
    while col <= n {
        blocks.push(Block::SingleColumn { start: col });
        col += 1;
    }
    Some(BlockDecomposition {
        blocks,
        has_prefix: kind.has_prefix(),
        has_suffix: kind.has_suffix(),
    })
}

/// Generalized cluster polynomial via linear-extension counting. Requires a
/// relation whose negation is one cell comparison; `RowsIncreasing` must use
/// [`generalized_cluster_brute`].
#[allow(clippy::too_many_arguments)]
pub fn generalized_cluster_polynomial(
    kind: GenClusterKind,
    prefix: usize,
    suffix: usize,
    k: usize,
    n: usize,
    gs: &[PatternSet],
    rel: ColumnRelation,
    poset_cap: usize,
) -> Result<MultiPoly> {
    check_anchors(kind, prefix, suffix, n)?;
    check_sets(k, gs)?;
    if rel == ColumnRelation::Universal {
        // the relation never fails, so decompositions with two or more
        // blocks vanish
        return Ok(match kind {
            GenClusterKind::Free => cluster_polynomial(k, n, gs, poset_cap)?,
            GenClusterKind::BothAnchored => MultiPoly::zero(gs.len()),
            _ if n == 0 => MultiPoly::one(gs.len()),
            _ => MultiPoly::zero(gs.len()),
        });
    }
    if !rel.order_atomic() {
        return Err(Error::Unsupported(format!(
            "relation `{rel}` has a disjunctive negation; use the brute-force path"
        )));
    }
    let cells = anchor_height(kind, prefix, suffix).0
        + k * n
        + anchor_height(kind, prefix, suffix).1;
    if cells > poset_cap {
        return Err(Error::CapExceeded(format!("{cells} cells, poset cap {poset_cap}")));
    }

    let mut schemes_by_width: Vec<Vec<MarkScheme>> = vec![Vec::new(), Vec::new()];
    for w in 2..=n {
        schemes_by_width.push(enumerate_schemes(w, gs));
    }

    let mut acc = MultiPoly::zero(gs.len());
    let mut stack: Vec<Block> = Vec::new();
    segment(&mut SegmentCtx {
        kind,
        prefix,
        suffix,
        k,
        n,
        gs,
        rel,
        poset_cap,
        schemes_by_width: &schemes_by_width,
        acc: &mut acc,
    }, 1, &mut stack)?;
    Ok(acc)
}

fn anchor_height(kind: GenClusterKind, prefix: usize, suffix: usize) -> (usize, usize) {
    (
        if kind.has_prefix() { prefix } else { 0 },
        if kind.has_suffix() { suffix } else { 0 },
    )
}

fn check_anchors(kind: GenClusterKind, prefix: usize, suffix: usize, n: usize) -> Result<()> {
    if kind.has_prefix() && prefix == 0 {
        return Err(invalid("prefix-anchored kinds need a prefix height"));
    }
    if kind.has_suffix() && suffix == 0 {
        return Err(invalid("suffix-anchored kinds need a suffix height"));
    }
    if kind == GenClusterKind::Free && n == 0 {
        return Err(invalid("unanchored generalized clusters need body columns"));
    }
    Ok(())
}

struct SegmentCtx<'a> {
    kind: GenClusterKind,
    prefix: usize,
    suffix: usize,
    k: usize,
    n: usize,
    gs: &'a [PatternSet],
    rel: ColumnRelation,
    poset_cap: usize,
    schemes_by_width: &'a [Vec<MarkScheme>],
    acc: &'a mut MultiPoly,
}

fn segment(ctx: &mut SegmentCtx, col: usize, stack: &mut Vec<Block>) -> Result<()> {
    if col > ctx.n {
        let decomp = BlockDecomposition {
            blocks: stack.clone(),
            has_prefix: ctx.kind.has_prefix(),
            has_suffix: ctx.kind.has_suffix(),
        };
        let term = evaluate_decomposition(
            &decomp, ctx.prefix, ctx.suffix, ctx.k, ctx.n, ctx.gs, ctx.rel, ctx.poset_cap,
        )?;
        *ctx.acc = ctx.acc.add(&term);
        return Ok(());
    }
    stack.push(Block::SingleColumn { start: col });
    segment(ctx, col + 1, stack)?;
    stack.pop();
    for w in 2..=ctx.n - col + 1 {
        for scheme in &ctx.schemes_by_width[w] {
            stack.push(Block::ClusterBlock { start: col, scheme: scheme.clone() });
            segment(ctx, col + w, stack)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Signed, weighted linear-extension count of one decomposition's poset.
#[allow(clippy::too_many_arguments)]
fn evaluate_decomposition(
    decomp: &BlockDecomposition,
    prefix: usize,
    suffix: usize,
    k: usize,
    n: usize,
    gs: &[PatternSet],
    rel: ColumnRelation,
    poset_cap: usize,
) -> Result<MultiPoly> {
    let mut heights: Vec<usize> = Vec::new();
    if decomp.has_prefix {
        heights.push(prefix);
    }
    heights.extend(std::iter::repeat_n(k, n));
    if decomp.has_suffix {
        heights.push(suffix);
    }
    let cells: usize = heights.iter().sum();
    let mut col_base = Vec::with_capacity(heights.len());
    let mut acc_cells = 0;
    for &h in &heights {
        col_base.push(acc_cells);
        acc_cells += h;
    }
    let body_col = |a: usize| usize::from(decomp.has_prefix) + a - 1;

    let mut edges = Vec::new();
    column_chains(&mut edges, &heights);
    // spans of present-column indices, in block order, including anchors
    let mut spans: Vec<(usize, usize)> = Vec::new();
    if decomp.has_prefix {
        spans.push((0, 0));
    }
    for b in &decomp.blocks {
        let (s, e) = b.span();
        spans.push((body_col(s), body_col(e)));
        if let Block::ClusterBlock { start, scheme } = b {
            scheme_edges(&mut edges, col_base[body_col(*start)], k, scheme, gs);
        }
    }
    if decomp.has_suffix {
        let last = heights.len() - 1;
        spans.push((last, last));
    }
    for w in spans.windows(2) {
        let (left, right) = (w[0].1, w[1].0);
        let neg = rel
            .neg_edge(heights[left], heights[right])
            .expect("order-atomic relation");
        let a = col_base[left] + neg.left_row;
        let b = col_base[right] + neg.right_row;
        edges.push(if neg.left_below { (a, b) } else { (b, a) });
    }

    let le = CellPoset::new(cells, &edges).linear_extension_count(poset_cap)?;
    let coeff = decomp.sign() * BigInt::from(le);
    Ok(MultiPoly::monomial(gs.len(), &decomp.exponents(gs.len()), coeff))
}

/// Generalized cluster polynomial by direct classification of marked
/// fillings: enumerates every filling of the anchored shape, every subset of
/// its matches, keeps the pairs whose marks decompose into blocks with the
/// relation failing at all boundaries, and sums signed mark monomials.
/// Works for any relation, including `RowsIncreasing`.
#[allow(clippy::too_many_arguments)]
pub fn generalized_cluster_brute(
    kind: GenClusterKind,
    prefix: usize,
    suffix: usize,
    k: usize,
    n: usize,
    gs: &[PatternSet],
    rel: ColumnRelation,
    cell_cap: usize,
) -> Result<MultiPoly> {
    check_anchors(kind, prefix, suffix, n)?;
    check_sets(k, gs)?;
    let (ph, sh) = anchor_height(kind, prefix, suffix);
    let shape = DiagramShape::new(ph, k, n, sh)?;
    let mut acc = MultiPoly::zero(gs.len());
    for f in oracle::enumerate_fillings(shape, cell_cap)? {
        let marks = filling_marks(&f, gs);
        if marks.len() > 20 {
            return Err(Error::CapExceeded("more than 20 matches in one filling".into()));
        }
        for sel in 0u32..1 << marks.len() {
            let subset: Vec<Mark> = marks
                .iter()
                .enumerate()
                .filter(|(i, _)| sel >> i & 1 == 1)
                .map(|(_, &m)| m)
                .collect();
            let Some(decomp) = decompose_marks(&subset, n, kind) else {
                continue;
            };
            if !boundaries_all_fail(&decomp, &f, rel) {
                continue;
            }
            let exps = decomp.exponents(gs.len());
            acc.add_term(&exps, &decomp.sign());
        }
    }
    Ok(acc)
}

/// The relation fails between every pair of consecutive blocks of the
/// decomposition, evaluated on the filling's actual columns.
fn boundaries_all_fail(decomp: &BlockDecomposition, f: &Filling, rel: ColumnRelation) -> bool {
    let cols = f.columns();
    let off = usize::from(decomp.has_prefix);
    let mut spans: Vec<(usize, usize)> = Vec::new();
    if decomp.has_prefix {
        spans.push((0, 0));
    }
    for b in &decomp.blocks {
        let (s, e) = b.span();
        spans.push((off + s - 1, off + e - 1));
    }
    if decomp.has_suffix {
        let last = cols.len() - 1;
        spans.push((last, last));
    }
    spans
        .windows(2)
        .all(|w| !rel.holds(&cols[w[0].1], &cols[w[1].0]))
}

/// All `(filling, subset of matches)` pairs for small shapes; fillings are
/// restricted when a relation is given, unrestricted otherwise.
pub fn enumerate_marked_fillings(
    shape: DiagramShape,
    gs: &[PatternSet],
    rel: Option<ColumnRelation>,
    cell_cap: usize,
) -> Result<Vec<(Filling, Vec<Mark>)>> {
    let fillings = match rel {
        Some(r) => oracle::enumerate_restricted(shape, r, cell_cap)?,
        None => oracle::enumerate_fillings(shape, cell_cap)?,
    };
    let mut out = Vec::new();
    for f in fillings {
        let marks = filling_marks(&f, gs);
        if marks.len() > 20 {
            return Err(Error::CapExceeded("more than 20 matches in one filling".into()));
        }
        for sel in 0u32..1 << marks.len() {
            let subset: Vec<Mark> = marks
                .iter()
                .enumerate()
                .filter(|(i, _)| sel >> i & 1 == 1)
                .map(|(_, &m)| m)
                .collect();
            out.push((f.clone(), subset));
        }
    }
    Ok(out)
}

/// A filling's matches as absolutely-positioned marks in canonical order.
pub fn filling_marks(f: &Filling, gs: &[PatternSet]) -> Vec<Mark> {
    let mut marks = Vec::new();
    for (s, set) in gs.iter().enumerate() {
        for (start, member) in f.match_starts(set) {
            let width = set.members()[member].width();
            marks.push(Mark { start, width, set: s, member });
        }
    }
    marks.sort_unstable();
    marks
}
