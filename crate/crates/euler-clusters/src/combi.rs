//! Diagrams, fillings, patterns, and column relations.

use crate::error::{invalid, Error, Result};
use itertools::Itertools;
use std::fmt;

/// A diagram: an optional prefix column of height `prefix`, `body_count`
/// body columns of height `body_height`, and an optional suffix column of
/// height `suffix`. Heights of zero mean the column is absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagramShape {
    pub prefix: usize,
    pub body_height: usize,
    pub body_count: usize,
    pub suffix: usize,
}

impl DiagramShape {
    /// Builds a shape. `body_height >= 1` is required whenever there is at
    /// least one body column; prefix/suffix-only shapes may set it to zero.
    pub fn new(prefix: usize, body_height: usize, body_count: usize, suffix: usize) -> Result<Self> {
        if body_count > 0 && body_height == 0 {
            return Err(invalid("body height must be at least 1 when body columns exist"));
        }
        Ok(DiagramShape { prefix, body_height, body_count, suffix })
    }

    pub fn total_cells(&self) -> usize {
        self.prefix + self.body_height * self.body_count + self.suffix
    }

    /// Heights of the columns actually present, left to right.
    pub fn column_heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.body_count + 2);
        if self.prefix > 0 {
            h.push(self.prefix);
        }
        h.extend(std::iter::repeat_n(self.body_height, self.body_count));
        if self.suffix > 0 {
            h.push(self.suffix);
        }
        h
    }

    /// Index into `column_heights` of body column `a` (1-based).
    pub(crate) fn body_offset(&self) -> usize {
        usize::from(self.prefix > 0)
    }
}

/// A filling of a diagram with `1..=total_cells`, columns stored left to
/// right, each column bottom to top and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: DiagramShape,
    columns: Vec<Vec<u32>>,
}

impl Filling {
    pub fn new(shape: DiagramShape, columns: Vec<Vec<u32>>) -> Result<Self> {
        let heights = shape.column_heights();
        if columns.len() != heights.len() {
            return Err(invalid(format!(
                "expected {} columns, got {}",
                heights.len(),
                columns.len()
            )));
        }
        for (c, h) in columns.iter().zip(&heights) {
            if c.len() != *h {
                return Err(invalid("column height mismatch"));
            }
            if !c.windows(2).all(|w| w[0] < w[1]) {
                return Err(invalid("columns must strictly increase upward"));
            }
        }
        let mut vals: Vec<u32> = columns.iter().flatten().copied().collect();
        vals.sort_unstable();
        let n = shape.total_cells();
        if vals.len() != n || vals.iter().enumerate().any(|(i, &v)| v != i as u32 + 1) {
            return Err(invalid("filling must use 1..=total_cells exactly once"));
        }
        Ok(Filling { shape, columns })
    }

    pub fn shape(&self) -> DiagramShape {
        self.shape
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Body column `a` (1-based).
    pub fn body_column(&self, a: usize) -> &[u32] {
        &self.columns[self.shape.body_offset() + a - 1]
    }

    /// Reads columns left to right, each bottom to top.
    pub fn word(&self) -> Vec<u32> {
        self.columns.iter().flatten().copied().collect()
    }

    /// Rebuilds a filling from its word.
    pub fn from_word(shape: DiagramShape, word: &[u32]) -> Result<Self> {
        if word.len() != shape.total_cells() {
            return Err(invalid("word length must equal total cells"));
        }
        let mut columns = Vec::new();
        let mut pos = 0;
        for h in shape.column_heights() {
            columns.push(word[pos..pos + h].to_vec());
            pos += h;
        }
        Filling::new(shape, columns)
    }

    /// The body columns at the given 1-based indices; prefix and suffix are
    /// not addressable.
    pub fn select_columns(&self, indices: &[usize]) -> Result<Vec<Vec<u32>>> {
        indices
            .iter()
            .map(|&a| {
                if a == 0 || a > self.shape.body_count {
                    Err(invalid(format!(
                        "body column index {a} out of range 1..={}",
                        self.shape.body_count
                    )))
                } else {
                    Ok(self.body_column(a).to_vec())
                }
            })
            .collect()
    }

    /// Positions `p` (1-based) with `word[p] > word[p+1]`.
    pub fn descent_set(&self) -> Vec<usize> {
        descent_set(&self.word())
    }

    /// Positions `p` (1-based) with `word[p] < word[p+1]`.
    pub fn rise_set(&self) -> Vec<usize> {
        let w = self.word();
        (1..w.len()).filter(|&p| w[p - 1] < w[p]).collect()
    }

    /// Every adjacent pair of present columns satisfies the relation.
    pub fn is_restricted(&self, rel: ColumnRelation) -> bool {
        self.columns.windows(2).all(|w| rel.holds(&w[0], &w[1]))
    }

    /// `(start, member)` pairs over consecutive body columns whose reduction
    /// equals a member of the set.
    pub fn count_matches(&self, set: &PatternSet) -> usize {
        self.match_starts(set).len()
    }

    /// All matches of the set among consecutive body columns, as
    /// `(start, member index)` with 1-based starts.
    pub fn match_starts(&self, set: &PatternSet) -> Vec<(usize, usize)> {
        let n = self.shape.body_count;
        let mut out = Vec::new();
        for (m, p) in set.members.iter().enumerate() {
            if p.k != self.shape.body_height {
                continue;
            }
            for a in 1..=n.saturating_sub(p.width).wrapping_add(1) {
                if a + p.width - 1 > n {
                    break;
                }
                let cols: Vec<&[u32]> =
                    (a..a + p.width).map(|c| self.body_column(c)).collect();
                if reduce_columns_ref(&cols) == p.columns {
                    out.push((a, m));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the pattern occurs among any increasing sequence of body
    /// columns, consecutive or not.
    pub fn occurs(&self, p: &Pattern) -> bool {
        if p.k != self.shape.body_height || p.width > self.shape.body_count {
            return false;
        }
        (1..=self.shape.body_count)
            .combinations(p.width)
            .any(|ix| {
                let cols: Vec<&[u32]> = ix.iter().map(|&c| self.body_column(c)).collect();
                reduce_columns_ref(&cols) == p.columns
            })
    }

    /// Relabels to use `1..=cells` with the same relative order.
    pub fn reduce(&self) -> Filling {
        Filling { shape: self.shape, columns: reduce_columns(&self.columns) }
    }
}

/// Positions `p` (1-based) with `w[p] > w[p+1]`.
pub fn descent_set(w: &[u32]) -> Vec<usize> {
    (1..w.len()).filter(|&p| w[p - 1] > w[p]).collect()
}

/// Relabels arbitrary distinct entries to `1..=cells`, preserving order.
pub fn reduce_columns(columns: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let refs: Vec<&[u32]> = columns.iter().map(|c| c.as_slice()).collect();
    reduce_columns_ref(&refs)
}

fn reduce_columns_ref(columns: &[&[u32]]) -> Vec<Vec<u32>> {
    let mut vals: Vec<u32> = columns.iter().flat_map(|c| c.iter().copied()).collect();
    vals.sort_unstable();
    columns
        .iter()
        .map(|c| {
            c.iter()
                .map(|v| vals.binary_search(v).unwrap() as u32 + 1)
                .collect()
        })
        .collect()
}

/// A reduced filling of a `k x r` rectangle used as a consecutive block
/// pattern; `r >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    k: usize,
    width: usize,
    columns: Vec<Vec<u32>>,
}

impl Pattern {
    pub fn new(k: usize, columns: Vec<Vec<u32>>) -> Result<Self> {
        let width = columns.len();
        if k == 0 || width < 2 {
            return Err(invalid("patterns need height >= 1 and width >= 2"));
        }
        if columns.iter().any(|c| c.len() != k) {
            return Err(invalid("pattern columns must all have the same height"));
        }
        if columns.iter().any(|c| !c.windows(2).all(|w| w[0] < w[1])) {
            return Err(invalid("pattern columns must strictly increase upward"));
        }
        let mut vals: Vec<u32> = columns.iter().flatten().copied().collect();
        vals.sort_unstable();
        if vals.iter().enumerate().any(|(i, &v)| v != i as u32 + 1) {
            return Err(invalid("pattern must be reduced: entries exactly 1..=k*r"));
        }
        Ok(Pattern { k, width, columns })
    }

    /// Builds from the word that fills columns left to right, bottom to top.
    pub fn from_word(k: usize, word: &[u32]) -> Result<Self> {
        if k == 0 || !word.len().is_multiple_of(k) {
            return Err(invalid("word length must be a multiple of the height"));
        }
        Pattern::new(k, word.chunks(k).map(|c| c.to_vec()).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Cells `(column, row)` sorted by entry: the total order a marked match
    /// imposes on its window.
    pub fn cell_order(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<(u32, usize, usize)> = Vec::with_capacity(self.k * self.width);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                cells.push((v, c, r));
            }
        }
        cells.sort_unstable();
        cells.into_iter().map(|(_, c, r)| (c, r)).collect()
    }

    /// Parses the text format: a `k r` header line, then one line per column
    /// listing its entries bottom to top.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| invalid("empty pattern text"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| invalid("bad pattern header")))
            .collect::<Result<_>>()?;
        let [k, r] = dims[..] else {
            return Err(invalid("pattern header must be `k r`"));
        };
        let mut columns = Vec::with_capacity(r);
        for _ in 0..r {
            let line = lines.next().ok_or_else(|| invalid("pattern text ended early"))?;
            let col: Vec<u32> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| invalid("bad pattern entry")))
                .collect::<Result<_>>()?;
            columns.push(col);
        }
        if lines.next().is_some() {
            return Err(invalid("trailing lines after pattern"));
        }
        Pattern::new(k, columns)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.k, self.width)?;
        for (i, col) in self.columns.iter().enumerate() {
            write!(f, "{}", col.iter().join(" "))?;
            if i + 1 < self.columns.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// A set of patterns of a common height tracked by one variable. Joint
/// distributions pass a slice of sets; the slice position is the variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    k: usize,
    members: Vec<Pattern>,
}

impl PatternSet {
    pub fn new(members: Vec<Pattern>) -> Result<Self> {
        let k = members.first().ok_or_else(|| invalid("empty pattern set"))?.k;
        if members.iter().any(|p| p.k != k) {
            return Err(invalid("pattern set members must share one height"));
        }
        Ok(PatternSet { k, members })
    }

    pub fn single(p: Pattern) -> Self {
        PatternSet { k: p.k, members: vec![p] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[Pattern] {
        &self.members
    }

    pub fn min_width(&self) -> usize {
        self.members.iter().map(|p| p.width).min().unwrap()
    }
}

/// How two horizontally adjacent columns may be related. `C` is the left
/// column, `D` the right; unequal heights use the same cell rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColumnRelation {
    /// Always holds; restricted fillings are all fillings.
    Universal,
    /// Top of `C` exceeds bottom of `D`.
    EulerDescent,
    /// Every row present in both columns increases left to right.
    RowsIncreasing,
    /// Bottom of `C` is below bottom of `D`.
    BottomIncreasing,
}

/// A single order constraint between one cell of a left column and one cell
/// of a right column: the negation of an order-atomic relation.
#[derive(Debug, Clone, Copy)]
pub struct NegEdge {
    /// Row (0-based from the bottom) in the left column.
    pub left_row: usize,
    /// Row in the right column.
    pub right_row: usize,
    /// Constraint direction: left cell below right cell when true.
    pub left_below: bool,
}

impl ColumnRelation {
    pub fn holds(&self, c: &[u32], d: &[u32]) -> bool {
        match self {
            ColumnRelation::Universal => true,
            ColumnRelation::EulerDescent => c[c.len() - 1] > d[0],
            ColumnRelation::RowsIncreasing => {
                (0..c.len().min(d.len())).all(|r| c[r] < d[r])
            }
            ColumnRelation::BottomIncreasing => c[0] < d[0],
        }
    }

    /// Whether both the relation and its negation are single cell
    /// comparisons, so failure posets can be built directly.
    pub fn order_atomic(&self) -> bool {
        matches!(self, ColumnRelation::EulerDescent | ColumnRelation::BottomIncreasing)
    }

    /// The one constraint equivalent to the relation failing between columns
    /// of the given heights, when the relation is order-atomic.
    pub fn neg_edge(&self, left_height: usize, right_height: usize) -> Option<NegEdge> {
        let _ = right_height;
        match self {
            ColumnRelation::EulerDescent => Some(NegEdge {
                left_row: left_height - 1,
                right_row: 0,
                left_below: true,
            }),
            ColumnRelation::BottomIncreasing => {
                Some(NegEdge { left_row: 0, right_row: 0, left_below: false })
            }
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "euler" => Ok(ColumnRelation::EulerDescent),
            "universal" => Ok(ColumnRelation::Universal),
            "rows" => Ok(ColumnRelation::RowsIncreasing),
            "bottom" => Ok(ColumnRelation::BottomIncreasing),
            _ => Err(Error::Invalid(format!("unknown relation `{s}`"))),
        }
    }
}

impl fmt::Display for ColumnRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ColumnRelation::Universal => "universal",
            ColumnRelation::EulerDescent => "euler",
            ColumnRelation::RowsIncreasing => "rows",
            ColumnRelation::BottomIncreasing => "bottom",
        };
        f.write_str(s)
    }
}
