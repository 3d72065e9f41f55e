//! Multivariate integer polynomials and exponential generating series.

use crate::clusters::{generalized_cluster_polynomial, GenClusterKind};
use crate::combi::{ColumnRelation, PatternSet};
use crate::error::{invalid, Error, Result};
use crate::families::{family_poly, FamilyId, PolyKind};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Default truncation order for generating series.
pub const DEFAULT_ORDER: usize = 12;

const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];

/// A polynomial in `vars` commuting variables with integer coefficients,
/// stored sparsely by exponent vector. Zero coefficients are never kept, so
/// structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: usize, c: i64) -> Self {
        Self::monomial(vars, &vec![0; vars], BigInt::from(c))
    }

    /// The variable with the given slice position.
    pub fn var(vars: usize, idx: usize) -> Self {
        assert!(idx < vars, "variable index out of range");
        let mut e = vec![0; vars];
        e[idx] = 1;
        Self::monomial(vars, &e, BigInt::one())
    }

    pub fn monomial(vars: usize, exponents: &[u32], coeff: BigInt) -> Self {
        assert_eq!(exponents.len(), vars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents.to_vec(), coeff);
        }
        MultiPoly { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exponents: &[u32], coeff: &BigInt) {
        assert_eq!(exponents.len(), self.vars);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents.to_vec()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(exponents);
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = MultiPoly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(&e, &(c1 * c2));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: usize) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(self.vars);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Sum of coefficients: the value at every variable set to 1.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `x_v - 1` for each listed variable.
    pub fn shift_minus_one_vars(&self, which: &[usize]) -> MultiPoly {
        let mut cur = self.clone();
        for &v in which {
            assert!(v < self.vars);
            let mut next = MultiPoly::zero(self.vars);
            for (e, c) in &cur.terms {
                let d = e[v];
                let mut base = e.clone();
                for s in 0..=d {
                    base[v] = s;
                    let mut k = BigInt::from(num_integer::binomial(u64::from(d), u64::from(s)));
                    if (d - s) % 2 == 1 {
                        k = -k;
                    }
                    next.add_term(&base, &(c * k));
                }
            }
            cur = next;
        }
        cur
    }

    /// Substitutes `x_v - 1` for every variable.
    pub fn shift_minus_one(&self) -> MultiPoly {
        self.shift_minus_one_vars(&(0..self.vars).collect::<Vec<_>>())
    }
}

/// Substitutes `x_v - 1` into `p` for the listed variables.
pub fn poly_shift_minus_one(p: &MultiPoly, which: &[usize]) -> MultiPoly {
    p.shift_minus_one_vars(which)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(v, &d)| {
                    let name = VAR_NAMES.get(v).copied().unwrap_or("?");
                    if d == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{d}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A truncated exponential generating series `sum a_m t^m / m!` whose
/// coefficients are polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries {
    vars: usize,
    coeffs: Vec<MultiPoly>,
}

impl EgfSeries {
    pub fn zero(vars: usize, order: usize) -> Self {
        EgfSeries { vars, coeffs: vec![MultiPoly::zero(vars); order + 1] }
    }

    pub fn one(vars: usize, order: usize) -> Self {
        let mut s = Self::zero(vars, order);
        s.coeffs[0] = MultiPoly::one(vars);
        s
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient_at(&self, m: usize) -> &MultiPoly {
        &self.coeffs[m]
    }

    pub fn set_coefficient(&mut self, m: usize, p: MultiPoly) {
        assert_eq!(p.vars(), self.vars);
        self.coeffs[m] = p;
    }

    pub fn add(&self, other: &EgfSeries) -> EgfSeries {
        assert_eq!(self.vars, other.vars);
        assert_eq!(self.order(), other.order());
        EgfSeries {
            vars: self.vars,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Product of series: `(fg)_m = sum C(m, r) f_r g_{m-r}`.
    #[allow(clippy::needless_range_loop)]
    pub fn mul(&self, other: &EgfSeries) -> EgfSeries {
        assert_eq!(self.vars, other.vars);
        assert_eq!(self.order(), other.order());
        let order = self.order();
        let binom = pascal(order);
        let mut out = EgfSeries::zero(self.vars, order);
        for m in 0..=order {
            let mut acc = MultiPoly::zero(self.vars);
            for r in 0..=m {
                if self.coeffs[r].is_zero() || other.coeffs[m - r].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[r].mul(&other.coeffs[m - r]).mul_scalar(&binom[m][r]));
            }
            out.coeffs[m] = acc;
        }
        out
    }

    /// `1 / (1 - g)` for a series with zero constant term.
    #[allow(clippy::needless_range_loop)]
    pub fn geom_inverse(&self) -> Result<EgfSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(invalid("geometric inverse needs zero constant term"));
        }
        let order = self.order();
        let binom = pascal(order);
        let mut inv = EgfSeries::zero(self.vars, order);
        inv.coeffs[0] = MultiPoly::one(self.vars);
        for m in 1..=order {
            let mut acc = MultiPoly::zero(self.vars);
            for r in 1..=m {
                if self.coeffs[r].is_zero() || inv.coeffs[m - r].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[r].mul(&inv.coeffs[m - r]).mul_scalar(&binom[m][r]));
            }
            inv.coeffs[m] = acc;
        }
        Ok(inv)
    }

    /// Coefficient sums at every variable set to 1, by order.
    pub fn all_ones_profile(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|p| p.eval_all_ones()).collect()
    }
}

/// Where the block polynomials feeding the series quotients come from.
#[derive(Debug, Clone, Copy)]
pub enum BlockSource<'a> {
    /// Direct enumeration of marked fillings.
    Engine {
        k: usize,
        gs: &'a [PatternSet],
        rel: ColumnRelation,
    },
    /// Closed-form family recursions.
    Family(FamilyId),
}

impl BlockSource<'_> {
    fn k(&self) -> usize {
        match self {
            BlockSource::Engine { k, .. } => *k,
            BlockSource::Family(id) => id.body_height(),
        }
    }

    fn vars(&self) -> usize {
        match self {
            BlockSource::Engine { gs, .. } => gs.len(),
            BlockSource::Family(id) => id.vars(),
        }
    }

    fn block(
        &self,
        kind: GenClusterKind,
        prefix: usize,
        suffix: usize,
        n: usize,
        poset_cap: usize,
    ) -> Result<MultiPoly> {
        match self {
            BlockSource::Engine { k, gs, rel } => {
                generalized_cluster_polynomial(kind, prefix, suffix, *k, n, gs, *rel, poset_cap)
            }
            BlockSource::Family(id) => {
                let pk = match kind {
                    GenClusterKind::Free => PolyKind::Free,
                    GenClusterKind::PrefixAnchored => PolyKind::PrefixAnchored,
                    GenClusterKind::SuffixAnchored => PolyKind::SuffixAnchored,
                    GenClusterKind::BothAnchored => PolyKind::BothAnchored,
                };
                let unit_anchors = match id {
                    FamilyId::Du162534 | FamilyId::JointUpDown => prefix <= 1 && suffix <= 1,
                    FamilyId::Gt124356 => prefix == 0 && suffix <= 2,
                    _ => prefix == 0 && suffix == 0,
                };
                if !unit_anchors {
                    return Err(Error::Unsupported(
                        "closed forms only cover this family's own anchor heights".into(),
                    ));
                }
                family_poly(*id, pk, n)
            }
        }
    }
}

/// Series of the anchored block polynomials (shifted by `x -> x - 1`) whose
/// term at `offset + k n` is the `n`-column polynomial, starting at `n0`.
#[allow(clippy::too_many_arguments)]
fn block_series(
    source: &BlockSource,
    kind: GenClusterKind,
    prefix: usize,
    suffix: usize,
    offset: usize,
    n0: usize,
    order: usize,
    poset_cap: usize,
) -> Result<EgfSeries> {
    let k = source.k();
    let mut s = EgfSeries::zero(source.vars(), order);
    let mut n = n0;
    while offset + k * n <= order {
        let p = source.block(kind, prefix, suffix, n, poset_cap)?;
        s.set_coefficient(offset + k * n, p.shift_minus_one());
        n += 1;
    }
    Ok(s)
}

/// Distribution series for fillings with `prefix`/`suffix` anchor columns
/// around height-`k` body columns, truncated at `order` cells. The
/// coefficient of `t^m / m!` is the polynomial recording pattern matches
/// over all restricted fillings of that size; sizes the shape cannot attain
/// get zero.
///
/// The series is assembled from the shifted block polynomials: the body
/// blocks are geometrically inverted, and anchored variants multiply in (or
/// add on, for the doubly anchored correction term).
pub fn gf_closed(
    prefix: usize,
    suffix: usize,
    order: usize,
    source: &BlockSource,
    poset_cap: usize,
) -> Result<EgfSeries> {
    let k = source.k();
    if k == 0 {
        return Err(invalid("body height must be positive"));
    }
    use GenClusterKind::*;
    let body = block_series(source, Free, 0, 0, 0, 1, order, poset_cap)?;
    let inv = body.geom_inverse()?;
    match (prefix > 0, suffix > 0) {
        (false, false) => Ok(inv),
        (false, true) => {
            let end = block_series(source, SuffixAnchored, 0, suffix, suffix, 0, order, poset_cap)?;
            Ok(end.mul(&inv))
        }
        (true, false) => {
            let start =
                block_series(source, PrefixAnchored, prefix, 0, prefix, 0, order, poset_cap)?;
            Ok(start.mul(&inv))
        }
        (true, true) => {
            let start =
                block_series(source, PrefixAnchored, prefix, 0, prefix, 0, order, poset_cap)?;
            let end = block_series(source, SuffixAnchored, 0, suffix, suffix, 0, order, poset_cap)?;
            let both = block_series(
                source,
                BothAnchored,
                prefix,
                suffix,
                prefix + suffix,
                0,
                order,
                poset_cap,
            )?;
            Ok(start.mul(&end).mul(&inv).add(&both))
        }
    }
}

fn pascal(order: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut row = vec![BigInt::one(); m + 1];
        for r in 1..m {
            row[r] = &rows[m - 1][r - 1] + &rows[m - 1][r];
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x() -> MultiPoly {
        MultiPoly::var(1, 0)
    }

    #[test]
    fn display_is_canonical() {
        let p = MultiPoly::constant(1, -1)
            .add(&x().mul_scalar(&BigInt::from(-7)))
            .add(&x().pow(2));
        assert_eq!(p.to_string(), "-1 - 7*x + x^2");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
        let q = MultiPoly::one(2)
            .add(&MultiPoly::var(2, 1))
            .add(&MultiPoly::var(2, 0).mul_scalar(&BigInt::from(-4)))
            .add(&MultiPoly::var(2, 0).mul(&MultiPoly::var(2, 1)).mul_scalar(&BigInt::from(2)))
            .add(&MultiPoly::var(2, 0).pow(2))
            .add(&MultiPoly::var(2, 0).pow(2).mul(&MultiPoly::var(2, 1)));
        assert_eq!(q.to_string(), "1 + y - 4*x + 2*x*y + x^2 + x^2*y");
    }

    #[test]
    fn shift_examples() {
        assert_eq!(x().pow(2).shift_minus_one().to_string(), "1 - 2*x + x^2");
        assert_eq!(MultiPoly::one(1).add(&x()).shift_minus_one().to_string(), "x");
        assert_eq!(MultiPoly::constant(1, 5).shift_minus_one(), MultiPoly::constant(1, 5));
        // shifting only one variable of x*y
        let xy = MultiPoly::var(2, 0).mul(&MultiPoly::var(2, 1));
        assert_eq!(xy.shift_minus_one_vars(&[1]).to_string(), "-x + x*y");
    }

    #[test]
    fn series_product_uses_binomials() {
        // (t)^2 has a_2 = 2 because 2!/1!1! = 2
        let mut t = EgfSeries::zero(1, 4);
        t.set_coefficient(1, MultiPoly::one(1));
        let sq = t.mul(&t);
        assert_eq!(sq.coefficient_at(2), &MultiPoly::constant(1, 2));
        assert!(sq.coefficient_at(3).is_zero());
    }

    #[test]
    fn geometric_inverse_of_t_is_factorials() {
        let mut t = EgfSeries::zero(1, 6);
        t.set_coefficient(1, MultiPoly::one(1));
        let h = t.geom_inverse().unwrap();
        let profile: Vec<String> = h.all_ones_profile().iter().map(|v| v.to_string()).collect();
        assert_eq!(profile, ["1", "1", "2", "6", "24", "120", "720"]);
    }

    #[test]
    fn geometric_inverse_requires_zero_head() {
        let s = EgfSeries::one(1, 3);
        assert!(s.geom_inverse().is_err());
    }

    #[test]
    fn quotient_profiles_count_alternating_fillings() {
        let gs = [PatternSet::single(crate::families::a_k3_pattern(2))];
        let source = BlockSource::Engine { k: 2, gs: &gs, rel: ColumnRelation::EulerDescent };
        let s = gf_closed(0, 0, 10, &source, crate::poset::DEFAULT_POSET_CAP).unwrap();
        let profile: Vec<String> = s.all_ones_profile().iter().map(|v| v.to_string()).collect();
        assert_eq!(profile, ["1", "0", "1", "0", "5", "0", "61", "0", "1385", "0", "50521"]);
        let s = gf_closed(0, 1, 9, &source, crate::poset::DEFAULT_POSET_CAP).unwrap();
        let profile: Vec<String> = s.all_ones_profile().iter().map(|v| v.to_string()).collect();
        assert_eq!(profile, ["0", "1", "0", "2", "0", "16", "0", "272", "0", "7936"]);
    }

    #[test]
    fn family_source_reproduces_known_distribution() {
        let source = BlockSource::Family(FamilyId::Ak3 { k: 2 });
        let s = gf_closed(0, 0, 8, &source, crate::poset::DEFAULT_POSET_CAP).unwrap();
        assert_eq!(s.coefficient_at(6).to_string(), "60 + x");
        assert_eq!(s.coefficient_at(8).to_string(), "1337 + 47*x + x^2");
    }

    #[test]
    fn quotient_matches_direct_enumeration_with_both_anchors() {
        let gs = [PatternSet::single(crate::families::a_k3_pattern(2))];
        let source = BlockSource::Engine { k: 2, gs: &gs, rel: ColumnRelation::EulerDescent };
        let s = gf_closed(1, 1, 8, &source, crate::poset::DEFAULT_POSET_CAP).unwrap();
        for n in 0..=3 {
            let shape = crate::combi::DiagramShape::new(1, 2, n, 1).unwrap();
            let direct = crate::oracle::distribution_polynomial(
                shape,
                ColumnRelation::EulerDescent,
                &gs,
                crate::oracle::DEFAULT_CELL_CAP,
            )
            .unwrap();
            assert_eq!(s.coefficient_at(2 * n + 2), &direct, "n {n}");
        }
    }

    #[test]
    fn joint_identity_patterns_over_unrestricted_fillings() {
        let gs = [
            PatternSet::single(crate::families::pkm_pattern(1, 2)),
            PatternSet::single(crate::families::pkm_pattern(1, 3)),
        ];
        let source = BlockSource::Engine { k: 1, gs: &gs, rel: ColumnRelation::Universal };
        let s = gf_closed(0, 0, 4, &source, crate::poset::DEFAULT_POSET_CAP).unwrap();
        assert_eq!(s.coefficient_at(3).to_string(), "1 + 4*x + x^2*y");
        assert_eq!(s.all_ones_profile()[4].to_string(), "24");
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(coeffs in proptest::collection::vec(-4i64..=4, 5)) {
            let mut g = EgfSeries::zero(1, 5);
            for (m, &c) in coeffs.iter().enumerate() {
                // g_m = c + c*x keeps it genuinely polynomial
                let p = MultiPoly::constant(1, c).add(&x().mul_scalar(&BigInt::from(c)));
                g.set_coefficient(m + 1, p);
            }
            let h = g.geom_inverse().unwrap();
            let one_minus_g = EgfSeries::one(1, 5).add(&g.clone().neg_series());
            let prod = one_minus_g.mul(&h);
            prop_assert_eq!(prod, EgfSeries::one(1, 5));
        }
    }

    impl EgfSeries {
        fn neg_series(self) -> EgfSeries {
            EgfSeries { vars: self.vars, coeffs: self.coeffs.iter().map(|p| p.neg()).collect() }
        }
    }
}
