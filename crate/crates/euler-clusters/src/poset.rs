//! Cell posets and linear-extension counting.

use crate::error::{invalid, Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Default ceiling on poset size for the order-ideal DP.
pub const DEFAULT_POSET_CAP: usize = 24;

/// A finite poset on cells `0..n` given by strict-order edges `a < b`.
#[derive(Debug, Clone)]
pub struct CellPoset {
    n: usize,
    preds: Vec<u32>,
}

impl CellPoset {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut preds = vec![0u32; n];
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge out of range");
            preds[b] |= 1 << a;
        }
        CellPoset { n, preds }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Counts linear extensions by peeling minimal elements off the
    /// complement of an order ideal, memoized on the remaining set. States
    /// with no placeable element (the edge set has a cycle) contribute zero.
    pub fn linear_extension_count(&self, cap: usize) -> Result<BigUint> {
        if self.n > cap.min(u32::BITS as usize) {
            return Err(Error::CapExceeded(format!(
                "poset has {} cells, cap is {}",
                self.n,
                cap.min(u32::BITS as usize)
            )));
        }
        let full: u32 = if self.n == 32 { u32::MAX } else { (1 << self.n) - 1 };
        let mut memo: HashMap<u32, BigUint> = HashMap::new();
        memo.insert(0, BigUint::one());
        Ok(self.count_rec(full, &mut memo).clone())
    }

    fn count_rec<'a>(&self, set: u32, memo: &'a mut HashMap<u32, BigUint>) -> &'a BigUint {
        if !memo.contains_key(&set) {
            let mut total = BigUint::zero();
            let mut rest = set;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.preds[v] & set == 0 {
                    total += self.count_rec(set & !(1 << v), memo);
                }
            }
            memo.insert(set, total);
        }
        &memo[&set]
    }
}

fn binom(n: usize, k: usize) -> BigUint {
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// A chain of two-row blocks: block `b` is a total chain of `2b` cells
/// (its bottom row left to right, then its top row right to left), and each
/// block's cell just above its bottom row precedes the next block's lowest
/// cell. Used by the two-row pattern families.
pub fn gamma_poset(blocks: &[usize]) -> CellPoset {
    build_gamma(blocks, false, false)
}

/// `gamma_poset` with an extra single cell before the first block, below
/// that block's lowest cell.
pub fn gamma_start_poset(blocks: &[usize]) -> CellPoset {
    build_gamma(blocks, true, false)
}

/// `gamma_poset` with an extra single cell after the last block, above that
/// block's cell at chain position `b` (the top of its last column).
pub fn gamma_end_poset(blocks: &[usize]) -> CellPoset {
    build_gamma(blocks, false, true)
}

/// Both extra cells at once.
pub fn gamma_start_end_poset(blocks: &[usize]) -> CellPoset {
    build_gamma(blocks, true, true)
}

fn build_gamma(blocks: &[usize], start: bool, end: bool) -> CellPoset {
    let body: usize = blocks.iter().map(|b| 2 * b).sum();
    let n = body + usize::from(start) + usize::from(end);
    let mut edges = Vec::new();
    let mut base = usize::from(start);
    let mut link_from = if start { Some(0) } else { None };
    for &b in blocks {
        assert!(b >= 1, "block sizes must be positive");
        for c in 0..2 * b - 1 {
            edges.push((base + c, base + c + 1));
        }
        if let Some(src) = link_from {
            edges.push((src, base));
        }
        link_from = Some(base + b);
        base += 2 * b;
    }
    if end {
        let src = link_from.expect("end cell needs at least one block");
        edges.push((src, base));
    }
    CellPoset::new(n, &edges)
}

/// Closed form for `gamma_poset(blocks)` linear extensions.
pub fn le_chain_formula(blocks: &[usize]) -> Result<BigUint> {
    if blocks.contains(&0) {
        return Err(invalid("block sizes must be positive"));
    }
    let mut prod = BigUint::one();
    let mut suffix: usize = match blocks.last() {
        Some(&b) => b,
        None => return Ok(prod),
    };
    for &b in blocks[..blocks.len() - 1].iter().rev() {
        prod *= binom(b - 1 + 2 * suffix, b - 1);
        suffix += b;
    }
    Ok(prod)
}

/// Closed form for `gamma_end_poset(blocks)` linear extensions.
pub fn le_end_formula(blocks: &[usize]) -> Result<BigUint> {
    if blocks.contains(&0) {
        return Err(invalid("block sizes must be positive"));
    }
    let mut prod = BigUint::one();
    let mut suffix: usize = 0;
    for &b in blocks.iter().rev() {
        prod *= binom(b + 2 * suffix, b - 1);
        suffix += b;
    }
    Ok(prod)
}

/// All compositions of `n` with parts at least 1.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
