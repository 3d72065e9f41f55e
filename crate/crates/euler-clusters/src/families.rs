//! Built-in pattern families whose cluster and generalized cluster
//! polynomials have closed recursions, used as fast independent sources for
//! the generating-function quotients.

use crate::clusters::GenClusterKind;
use crate::combi::{ColumnRelation, Pattern};
use crate::egf::MultiPoly;
use crate::error::{invalid, Error, Result};
use crate::poset::{compositions, le_chain_formula, le_end_formula};
use num_bigint::{BigInt, BigUint};

/// The built-in families, keyed by the pattern words they are made of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    /// The height-`k`, width-3 pattern that snakes row by row.
    Ak3 { k: usize },
    /// The width-3, height-2 pattern with word 162534.
    Du162534,
    /// The width-2, height-3 pattern with word 124356.
    Gt124356,
    /// The joint pair of identity rectangles of widths `m` and `m + 1`.
    Pkm { k: usize, m: usize },
    /// The joint pair 1423 and 162534 of height 2.
    JointUpDown,
}

/// Which polynomial of a family is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    /// Plain cluster polynomial.
    Cluster,
    /// Generalized, body blocks only.
    Free,
    /// Generalized with a prefix anchor.
    PrefixAnchored,
    /// Generalized with a suffix anchor.
    SuffixAnchored,
    /// Generalized with both anchors.
    BothAnchored,
}

impl PolyKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "c" => Ok(PolyKind::Cluster),
            "gc" => Ok(PolyKind::Free),
            "gsc" => Ok(PolyKind::PrefixAnchored),
            "gec" => Ok(PolyKind::SuffixAnchored),
            "gsec" => Ok(PolyKind::BothAnchored),
            _ => Err(invalid(format!("unknown polynomial kind `{s}`"))),
        }
    }

    pub fn generalized(self) -> Option<GenClusterKind> {
        match self {
            PolyKind::Cluster => None,
            PolyKind::Free => Some(GenClusterKind::Free),
            PolyKind::PrefixAnchored => Some(GenClusterKind::PrefixAnchored),
            PolyKind::SuffixAnchored => Some(GenClusterKind::SuffixAnchored),
            PolyKind::BothAnchored => Some(GenClusterKind::BothAnchored),
        }
    }
}

impl FamilyId {
    /// Parses CLI ids: `a_k3:K`, `du162534`, `gt124356`, `pkm:K,M`,
    /// `joint-ud`.
    pub fn parse(s: &str) -> Result<Self> {
        if let Some(k) = s.strip_prefix("a_k3:") {
            let k: usize = k.parse().map_err(|_| invalid("bad a_k3 height"))?;
            if k == 0 {
                return Err(invalid("a_k3 height must be positive"));
            }
            return Ok(FamilyId::Ak3 { k });
        }
        if let Some(km) = s.strip_prefix("pkm:") {
            let parts: Vec<&str> = km.split(',').collect();
            let [k, m] = parts[..] else {
                return Err(invalid("pkm takes `k,m`"));
            };
            let k: usize = k.parse().map_err(|_| invalid("bad pkm height"))?;
            let m: usize = m.parse().map_err(|_| invalid("bad pkm width"))?;
            if k == 0 || m < 2 {
                return Err(invalid("pkm needs height >= 1 and width >= 2"));
            }
            return Ok(FamilyId::Pkm { k, m });
        }
        match s {
            "du162534" => Ok(FamilyId::Du162534),
            "gt124356" => Ok(FamilyId::Gt124356),
            "joint-ud" => Ok(FamilyId::JointUpDown),
            _ => Err(invalid(format!("unknown family `{s}`"))),
        }
    }

    /// Height of the family's patterns.
    pub fn body_height(&self) -> usize {
        match self {
            FamilyId::Ak3 { k } | FamilyId::Pkm { k, .. } => *k,
            FamilyId::Du162534 | FamilyId::JointUpDown => 2,
            FamilyId::Gt124356 => 3,
        }
    }

    /// The column relation the family's closed forms are stated for.
    pub fn relation(&self) -> ColumnRelation {
        match self {
            FamilyId::Pkm { .. } => ColumnRelation::Universal,
            _ => ColumnRelation::EulerDescent,
        }
    }

    /// Number of tracked variables.
    pub fn vars(&self) -> usize {
        match self {
            FamilyId::Pkm { .. } | FamilyId::JointUpDown => 2,
            _ => 1,
        }
    }
}

/// The patterns a family tracks, in variable order.
pub fn family_patterns(id: FamilyId) -> Vec<Pattern> {
    match id {
        FamilyId::Ak3 { k } => vec![a_k3_pattern(k)],
        FamilyId::Du162534 => vec![du162534_pattern()],
        FamilyId::Gt124356 => vec![gt124356_pattern()],
        FamilyId::Pkm { k, m } => vec![pkm_pattern(k, m), pkm_pattern(k, m + 1)],
        FamilyId::JointUpDown => {
            vec![Pattern::from_word(2, &[1, 4, 2, 3]).unwrap(), du162534_pattern()]
        }
    }
}

/// The height-`k` width-3 pattern whose rows snake: row `r` (1-based) holds
/// `3(r-1)+1..=3r`, left to right when `r` is odd, right to left otherwise.
pub fn a_k3_pattern(k: usize) -> Pattern {
    let columns: Vec<Vec<u32>> = (1..=3u32)
        .map(|c| {
            (0..k as u32)
                .map(|r| if r % 2 == 0 { 3 * r + c } else { 3 * r + 4 - c })
                .collect()
        })
        .collect();
    Pattern::new(k, columns).expect("snake pattern is reduced")
}

pub fn du162534_pattern() -> Pattern {
    Pattern::from_word(2, &[1, 6, 2, 5, 3, 4]).unwrap()
}

pub fn gt124356_pattern() -> Pattern {
    Pattern::from_word(3, &[1, 2, 4, 3, 5, 6]).unwrap()
}

/// The identity rectangle: column `i` holds `k(i-1)+1 ..= ki`.
pub fn pkm_pattern(k: usize, m: usize) -> Pattern {
    let columns: Vec<Vec<u32>> = (0..m as u32)
        .map(|c| (1..=k as u32).map(|r| k as u32 * c + r).collect())
        .collect();
    Pattern::new(k, columns).expect("identity rectangle is reduced")
}

fn x() -> MultiPoly {
    MultiPoly::var(1, 0)
}

fn sign(blocks: usize) -> BigInt {
    if blocks % 2 == 1 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// Cluster polynomials of the snake patterns, independent of the height:
/// `1, 0, x, x^2`, then `C_n = x (C_{n-1} + C_{n-2})`.
pub fn a_k3_cluster_polys(upto: usize) -> Vec<MultiPoly> {
    let mut c: Vec<MultiPoly> = Vec::with_capacity(upto + 1);
    c.push(MultiPoly::zero(1)); // unused index 0
    for n in 1..=upto {
        let p = match n {
            1 => MultiPoly::one(1),
            2 => MultiPoly::zero(1),
            3 => x(),
            4 => x().pow(2),
            _ => x().mul(&c[n - 1].add(&c[n - 2])),
        };
        c.push(p);
    }
    c
}

pub fn a_k3_cluster_poly(k: usize, n: usize) -> Result<MultiPoly> {
    if k == 0 || n == 0 {
        return Err(invalid("need height >= 1 and at least one column"));
    }
    Ok(a_k3_cluster_polys(n).swap_remove(n))
}

/// Generalized (body-only) polynomials of the snake patterns. Odd heights
/// satisfy `GC_n = C_n - sum C_r GC_{n-r}`; even heights `k` carry an extra
/// binomial that counts interleavings:
/// `GC_n = C_n - GC_{n-1} - sum_s binom(kn - (k-1)s - 1, s-1) C_s GC_{n-s}`.
pub fn a_k3_gc_polys(k: usize, upto: usize) -> Result<Vec<MultiPoly>> {
    if k < 2 {
        return Err(invalid("generalized snake polynomials need height >= 2"));
    }
    let c = a_k3_cluster_polys(upto.max(1));
    let mut gc: Vec<MultiPoly> = vec![MultiPoly::zero(1)];
    for n in 1..=upto {
        let p = if n == 1 {
            MultiPoly::one(1)
        } else if k % 2 == 1 {
            let mut p = c[n].clone();
            for r in 1..n {
                p = p.sub(&c[r].mul(&gc[n - r]));
            }
            p
        } else {
            let mut p = c[n].sub(&gc[n - 1]);
            for s in 2..n {
                let b = num_integer::binomial(
                    BigUint::from(k * n - (k - 1) * s - 1),
                    BigUint::from(s - 1),
                );
                p = p.sub(&c[s].mul(&gc[n - s]).mul_scalar(&BigInt::from(b)));
            }
            p
        };
        gc.push(p);
    }
    Ok(gc)
}

pub fn a_k3_gc_poly(k: usize, n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Err(invalid("need at least one column"));
    }
    Ok(a_k3_gc_polys(k, n)?.swap_remove(n))
}

/// Down-up cluster polynomials by column count: `1, 0, x, x^2`, then
/// `C_n = x (C_{n-2} + C_{n-1})`.
fn du_cluster_polys(upto: usize) -> Vec<MultiPoly> {
    // same recursion as the snake patterns
    a_k3_cluster_polys(upto)
}

/// Sum over compositions of `n`: sign times block weights times the chain
/// linear-extension product. `weights[b]` is the cluster polynomial of a
/// `b`-column block; entries that are zero kill their compositions.
fn composition_chain_sum(n: usize, weights: &[MultiPoly], vars: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(vars);
    'comp: for comp in compositions(n) {
        let mut w = MultiPoly::one(vars);
        for &b in &comp {
            if weights[b].is_zero() {
                continue 'comp;
            }
            w = w.mul(&weights[b]);
        }
        let le = le_chain_formula(&comp).expect("positive parts");
        acc = acc.add(&w.mul_scalar(&(sign(comp.len()) * BigInt::from(le))));
    }
    acc
}

/// Same with the end anchor: the extra block flips the sign and the chain
/// product gains the anchor cell.
fn composition_end_sum(n: usize, weights: &[MultiPoly], vars: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(vars);
    'comp: for comp in compositions(n) {
        let mut w = MultiPoly::one(vars);
        for &b in &comp {
            if weights[b].is_zero() {
                continue 'comp;
            }
            w = w.mul(&weights[b]);
        }
        let le = le_end_formula(&comp).expect("positive parts");
        acc = acc.add(&w.mul_scalar(&(sign(comp.len() + 1) * BigInt::from(le))));
    }
    acc
}

/// Closed-form polynomials for the 162534 family, indexed by body columns:
/// plain clusters on `2n` cells, free on `2n`, prefix-anchored on `2n + 1`,
/// suffix-anchored on `2n + 1`, both on `2n + 2`.
pub fn downup_family_polys(kind: PolyKind, n: usize) -> Result<MultiPoly> {
    match kind {
        PolyKind::Cluster | PolyKind::Free if n == 0 => {
            Err(invalid("need at least one column"))
        }
        PolyKind::Cluster => Ok(du_cluster_polys(n).swap_remove(n)),
        PolyKind::Free => Ok(composition_chain_sum(n, &du_cluster_polys(n), 1)),
        PolyKind::PrefixAnchored => {
            // the anchor cell is forced below everything, so it only flips
            // the sign
            if n == 0 {
                Ok(MultiPoly::one(1))
            } else {
                Ok(composition_chain_sum(n, &du_cluster_polys(n), 1).neg())
            }
        }
        PolyKind::SuffixAnchored => {
            if n == 0 {
                Ok(MultiPoly::one(1))
            } else {
                Ok(composition_end_sum(n, &du_cluster_polys(n), 1))
            }
        }
        PolyKind::BothAnchored => Ok(downup_family_polys(PolyKind::SuffixAnchored, n)?.neg()),
    }
}

/// Closed-form polynomials for the 124356 family: plain clusters are
/// `x^(n-1)`, free is `(x-1)^(n-1)`, and the suffix-anchored values are
/// `-(x-1)^(n-1)` regardless of the suffix height (1 at `n = 0`).
pub fn gt124356_polys(kind: PolyKind, n: usize) -> Result<MultiPoly> {
    let xm1 = x().sub(&MultiPoly::one(1));
    match kind {
        PolyKind::Cluster | PolyKind::Free if n == 0 => {
            Err(invalid("need at least one column"))
        }
        PolyKind::Cluster => Ok(x().pow(n - 1)),
        PolyKind::Free => Ok(xm1.pow(n - 1)),
        PolyKind::SuffixAnchored => {
            if n == 0 {
                Ok(MultiPoly::one(1))
            } else {
                Ok(xm1.pow(n - 1).neg())
            }
        }
        _ => Err(Error::Unsupported("no closed form for this anchor".into())),
    }
}

/// Joint cluster polynomials by column count.
///
/// For the identity rectangles `x` marks width `m`, `y` width `m + 1`:
/// `C_1 = 1`, zeros through `m - 1`, `C_m = x`, then
/// `C_n = (xy + y) C_{n-m} + (xy + x + y) (C_{n-1} + ... + C_{n-m+1})`.
///
/// For the up-down pair `x` marks 1423, `y` marks 162534: `C_1 = 1`,
/// `C_2 = x`, then `C_n = (x + 1) y C_{n-2} + (xy + x + y) C_{n-1}`.
pub fn joint_cluster_polys(id: FamilyId, upto: usize) -> Result<Vec<MultiPoly>> {
    let x = MultiPoly::var(2, 0);
    let y = MultiPoly::var(2, 1);
    let xy = x.mul(&y);
    let mut c: Vec<MultiPoly> = vec![MultiPoly::zero(2)];
    match id {
        FamilyId::Pkm { m, .. } => {
            let a = xy.add(&y);
            let b = xy.add(&x).add(&y);
            for n in 1..=upto {
                let p = if n == 1 {
                    MultiPoly::one(2)
                } else if n < m {
                    MultiPoly::zero(2)
                } else if n == m {
                    x.clone()
                } else {
                    let mut p = a.mul(&c[n - m]);
                    for j in 1..m {
                        p = p.add(&b.mul(&c[n - j]));
                    }
                    p
                };
                c.push(p);
            }
        }
        FamilyId::JointUpDown => {
            let a = x.add(&MultiPoly::one(2)).mul(&y);
            let b = xy.add(&x).add(&y);
            for n in 1..=upto {
                let p = match n {
                    1 => MultiPoly::one(2),
                    2 => x.clone(),
                    _ => a.mul(&c[n - 2]).add(&b.mul(&c[n - 1])),
                };
                c.push(p);
            }
        }
        _ => return Err(invalid("not a joint family")),
    }
    Ok(c)
}

/// Closed-form joint polynomials. The identity-rectangle family lives over
/// unrestricted fillings, so only plain clusters (equal to the free kind)
/// exist; the up-down pair supports every kind via the composition sums.
pub fn joint_family_polys(id: FamilyId, kind: PolyKind, n: usize) -> Result<MultiPoly> {
    match id {
        FamilyId::Pkm { .. } => match kind {
            PolyKind::Cluster | PolyKind::Free => {
                if n == 0 {
                    return Err(invalid("need at least one column"));
                }
                Ok(joint_cluster_polys(id, n)?.swap_remove(n))
            }
            _ => Err(Error::Unsupported(
                "anchored kinds vanish for the unrestricted family".into(),
            )),
        },
        FamilyId::JointUpDown => {
            let weights = |upto: usize| joint_cluster_polys(id, upto.max(1));
            match kind {
                PolyKind::Cluster | PolyKind::Free if n == 0 => {
                    Err(invalid("need at least one column"))
                }
                PolyKind::Cluster => Ok(joint_cluster_polys(id, n)?.swap_remove(n)),
                PolyKind::Free => Ok(composition_chain_sum(n, &weights(n)?, 2)),
                PolyKind::PrefixAnchored => {
                    if n == 0 {
                        Ok(MultiPoly::one(2))
                    } else {
                        Ok(composition_chain_sum(n, &weights(n)?, 2).neg())
                    }
                }
                PolyKind::SuffixAnchored => {
                    if n == 0 {
                        Ok(MultiPoly::one(2))
                    } else {
                        Ok(composition_end_sum(n, &weights(n)?, 2))
                    }
                }
                PolyKind::BothAnchored => {
                    Ok(joint_family_polys(id, PolyKind::SuffixAnchored, n)?.neg())
                }
            }
        }
        _ => Err(invalid("not a joint family")),
    }
}

/// Unified dispatch: the family's polynomial of the given kind at `n` body
/// columns.
pub fn family_poly(id: FamilyId, kind: PolyKind, n: usize) -> Result<MultiPoly> {
    match id {
        FamilyId::Ak3 { k } => match kind {
            PolyKind::Cluster => a_k3_cluster_poly(k, n),
            PolyKind::Free => a_k3_gc_poly(k, n),
            _ => Err(Error::Unsupported("no closed form for this anchor".into())),
        },
        FamilyId::Du162534 => downup_family_polys(kind, n),
        FamilyId::Gt124356 => gt124356_polys(kind, n),
        FamilyId::Pkm { .. } | FamilyId::JointUpDown => joint_family_polys(id, kind, n),
    }
}

/// Whether a width-2 pattern can only form clusters one way: every
/// consecutive row pair must have consecutive entries in the left or the
/// right column. Errors on other widths.
pub fn unique_cluster_check(p: &Pattern) -> Result<bool> {
    if p.width() != 2 {
        return Err(invalid("uniqueness criterion applies to width-2 patterns"));
    }
    let left = &p.columns()[0];
    let right = &p.columns()[1];
    Ok((0..p.k() - 1)
        .all(|r| left[r + 1] == left[r] + 1 || right[r + 1] == right[r] + 1))
}
