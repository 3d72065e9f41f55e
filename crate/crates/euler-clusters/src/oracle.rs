//! Exhaustive enumeration of fillings and distribution polynomials, the
//! ground truth the generating-function machinery is checked against. No
//! cluster code is used here.

use crate::combi::{ColumnRelation, DiagramShape, Filling, PatternSet};
use crate::egf::MultiPoly;
use crate::error::{Error, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

/// Default ceiling on total cells for exhaustive enumeration.
pub const DEFAULT_CELL_CAP: usize = 16;

fn check_cap(shape: DiagramShape, cap: usize) -> Result<()> {
    if shape.total_cells() > cap {
        return Err(Error::CapExceeded(format!(
            "shape has {} cells, cap is {cap}",
            shape.total_cells()
        )));
    }
    Ok(())
}

/// Calls `visit` for every filling, in lexicographic word order. When `rel`
/// is given, only fillings whose adjacent columns all satisfy it are built;
/// violating prefixes are pruned as columns are chosen, never enumerated.
fn walk(
    shape: DiagramShape,
    rel: Option<ColumnRelation>,
    visit: &mut impl FnMut(&Filling),
) {
    let heights = shape.column_heights();
    let pool: Vec<u32> = (1..=shape.total_cells() as u32).collect();
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(heights.len());
    walk_rec(shape, &heights, rel, pool, &mut cols, visit);
}

fn walk_rec(
    shape: DiagramShape,
    heights: &[usize],
    rel: Option<ColumnRelation>,
    pool: Vec<u32>,
    cols: &mut Vec<Vec<u32>>,
    visit: &mut impl FnMut(&Filling),
) {
    let idx = cols.len();
    if idx == heights.len() {
        let f = Filling::new(shape, cols.clone()).expect("constructed filling is valid");
        visit(&f);
        return;
    }
    for col in pool.iter().copied().combinations(heights[idx]) {
        if let (Some(r), Some(prev)) = (rel, cols.last()) {
            if !r.holds(prev, &col) {
                continue;
            }
        }
        let rest: Vec<u32> = pool.iter().copied().filter(|v| !col.contains(v)).collect();
        cols.push(col);
        walk_rec(shape, heights, rel, rest, cols, visit);
        cols.pop();
    }
}

/// Every filling of the shape, in lexicographic word order.
pub fn enumerate_fillings(shape: DiagramShape, cap: usize) -> Result<Vec<Filling>> {
    check_cap(shape, cap)?;
    let mut out = Vec::new();
    walk(shape, None, &mut |f| out.push(f.clone()));
    Ok(out)
}

/// Every filling whose adjacent columns all satisfy the relation, in
/// lexicographic word order.
pub fn enumerate_restricted(
    shape: DiagramShape,
    rel: ColumnRelation,
    cap: usize,
) -> Result<Vec<Filling>> {
    check_cap(shape, cap)?;
    let mut out = Vec::new();
    walk(shape, Some(rel), &mut |f| out.push(f.clone()));
    Ok(out)
}

/// Number of restricted fillings, streamed rather than collected.
pub fn count_restricted(shape: DiagramShape, rel: ColumnRelation, cap: usize) -> Result<u64> {
    check_cap(shape, cap)?;
    let mut n = 0u64;
    walk(shape, Some(rel), &mut |_| n += 1);
    Ok(n)
}

/// The joint distribution over restricted fillings of consecutive matches of
/// each pattern set: the sum of `prod_i x_i^{matches of gs[i]}`. Work is
/// split over first-column choices; the result is an exact integer sum, so
/// the partitioning cannot affect it.
pub fn distribution_polynomial(
    shape: DiagramShape,
    rel: ColumnRelation,
    gs: &[PatternSet],
    cap: usize,
) -> Result<MultiPoly> {
    check_cap(shape, cap)?;
    let vars = gs.len();
    let heights = shape.column_heights();
    if heights.is_empty() {
        return Ok(MultiPoly::one(vars));
    }
    let pool: Vec<u32> = (1..=shape.total_cells() as u32).collect();
    let firsts: Vec<Vec<u32>> = pool.iter().copied().combinations(heights[0]).collect();
    let tally = |first: &Vec<u32>| -> MultiPoly {
        let mut acc = MultiPoly::zero(vars);
        let rest: Vec<u32> = pool.iter().copied().filter(|v| !first.contains(v)).collect();
        let mut cols = vec![first.clone()];
        let one = BigInt::one();
        walk_rec(shape, &heights, Some(rel), rest, &mut cols, &mut |f| {
            let e: Vec<u32> = gs.iter().map(|g| f.count_matches(g) as u32).collect();
            acc.add_term(&e, &one);
        });
        acc
    };
    let poly = if shape.total_cells() >= 10 {
        firsts
            .par_iter()
            .map(tally)
            .reduce(|| MultiPoly::zero(vars), |a, b| a.add(&b))
    } else {
        firsts
            .iter()
            .map(tally)
            .fold(MultiPoly::zero(vars), |a, b| a.add(&b))
    };
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combi::Pattern;
    use crate::families;

    fn shape(i: usize, k: usize, n: usize, j: usize) -> DiagramShape {
        DiagramShape::new(i, k, n, j).unwrap()
    }

    fn set(k: usize, word: &[u32]) -> PatternSet {
        PatternSet::single(Pattern::from_word(k, word).unwrap())
    }

    #[test]
    fn two_columns_of_height_two() {
        let fs = enumerate_fillings(shape(0, 2, 2, 0), 16).unwrap();
        assert_eq!(fs.len(), 6);
        assert_eq!(fs[0].word(), vec![1, 2, 3, 4]);
        assert_eq!(fs[5].word(), vec![3, 4, 1, 2]);
        let words: Vec<Vec<u32>> = fs.iter().map(|f| f.word()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn prefix_only_shape_has_one_filling() {
        let fs = enumerate_fillings(shape(1, 0, 0, 0), 16).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].word(), vec![1]);
    }

    #[test]
    fn permutations_are_height_one_fillings() {
        assert_eq!(enumerate_fillings(shape(0, 1, 3, 0), 16).unwrap().len(), 6);
    }

    #[test]
    fn cell_cap_is_enforced() {
        assert!(enumerate_fillings(shape(0, 2, 9, 0), 16).is_err());
        assert!(enumerate_fillings(shape(0, 2, 3, 0), 5).is_err());
        assert!(enumerate_fillings(shape(0, 2, 3, 0), 6).is_ok());
    }

    #[test]
    fn descent_restriction_prunes() {
        let fs = enumerate_restricted(shape(0, 2, 2, 0), ColumnRelation::EulerDescent, 16).unwrap();
        assert_eq!(fs.len(), 5); // all but 1,2|3,4
        assert!(fs.iter().all(|f| f.is_restricted(ColumnRelation::EulerDescent)));
        let n3 = count_restricted(shape(0, 3, 3, 0), ColumnRelation::EulerDescent, 16).unwrap();
        assert_eq!(n3, 1513);
    }

    #[test]
    fn universal_restriction_is_no_restriction() {
        let a = enumerate_fillings(shape(1, 2, 2, 1), 16).unwrap();
        let b = enumerate_restricted(shape(1, 2, 2, 1), ColumnRelation::Universal, 16).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn alternating_counts_by_total_length() {
        // restricted 2-row counts depend only on total cells: 1,1,2,5,16,61,272
        let e = [1u64, 1, 2, 5, 16, 61, 272];
        for m in 1..=7usize {
            let c = if m % 2 == 0 {
                count_restricted(shape(0, 2, m / 2, 0), ColumnRelation::EulerDescent, 16).unwrap()
            } else {
                count_restricted(shape(0, 2, m / 2, 1), ColumnRelation::EulerDescent, 16).unwrap()
            };
            assert_eq!(c, e[m - 1], "length {m}");
        }
        // and the odd lengths again with the prefix variant
        assert_eq!(
            count_restricted(shape(1, 2, 2, 0), ColumnRelation::EulerDescent, 16).unwrap(),
            16
        );
    }

    #[test]
    fn distribution_examples() {
        let d = distribution_polynomial(
            shape(0, 3, 3, 0),
            ColumnRelation::EulerDescent,
            &[PatternSet::single(families::a_k3_pattern(3))],
            16,
        )
        .unwrap();
        assert_eq!(d.to_string(), "1512 + x");

        let d = distribution_polynomial(
            shape(0, 2, 4, 0),
            ColumnRelation::EulerDescent,
            &[PatternSet::single(families::a_k3_pattern(2))],
            16,
        )
        .unwrap();
        assert_eq!(d.to_string(), "1337 + 47*x + x^2");

        let d = distribution_polynomial(
            shape(0, 1, 3, 0),
            ColumnRelation::Universal,
            &[set(1, &[1, 3, 2])],
            16,
        )
        .unwrap();
        assert_eq!(d.to_string(), "5 + x");
    }

    #[test]
    fn distribution_at_one_counts_fillings() {
        for (sh, rel) in [
            (shape(0, 2, 3, 0), ColumnRelation::EulerDescent),
            (shape(1, 2, 2, 1), ColumnRelation::EulerDescent),
            (shape(0, 2, 3, 0), ColumnRelation::RowsIncreasing),
            (shape(0, 2, 3, 1), ColumnRelation::BottomIncreasing),
        ] {
            let gs = [set(2, &[1, 6, 2, 5, 3, 4])];
            let d = distribution_polynomial(sh, rel, &gs, 16).unwrap();
            let count = count_restricted(sh, rel, 16).unwrap();
            assert_eq!(d.eval_all_ones(), BigInt::from(count));
        }
    }

    #[test]
    fn empty_body_with_joint_variables() {
        let d = distribution_polynomial(
            shape(1, 0, 0, 1),
            ColumnRelation::EulerDescent,
            &[set(1, &[1, 2]), set(1, &[2, 1])],
            16,
        )
        .unwrap();
        // one filling (1 then 2), no body columns, so no matches
        assert_eq!(d.to_string(), "1");
    }
}
