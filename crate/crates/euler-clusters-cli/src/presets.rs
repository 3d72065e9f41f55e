//! The built-in tables: each name binds a computation to a committed
//! reference file so `table --preset <name> --check` guards against
//! regressions in any layer below.

use anyhow::{bail, Result};
use euler_clusters::egf::{gf_closed, BlockSource, EgfSeries};
use euler_clusters::families::{self, FamilyId, PolyKind};

pub const NAMES: &[&str] = &[
    "a33-c", "a33-gc", "a23-gc", "a33-dist", "a23-dist",
    "du-gc", "du-gsc", "du-gec", "du-gsec", "du-odd", "du-even", "du-all",
    "gt-all", "id12-all", "id22-all",
    "ud-gc", "ud-gec", "ud-odd", "ud-even", "ud-all",
];

macro_rules! golden_file {
    ($name:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/presets/", $name, ".txt"))
    };
}

pub fn golden(name: &str) -> Option<&'static str> {
    Some(match name {
        "a33-c" => golden_file!("a33-c"),
        "a33-gc" => golden_file!("a33-gc"),
        "a23-gc" => golden_file!("a23-gc"),
        "a33-dist" => golden_file!("a33-dist"),
        "a23-dist" => golden_file!("a23-dist"),
        "du-gc" => golden_file!("du-gc"),
        "du-gsc" => golden_file!("du-gsc"),
        "du-gec" => golden_file!("du-gec"),
        "du-gsec" => golden_file!("du-gsec"),
        "du-odd" => golden_file!("du-odd"),
        "du-even" => golden_file!("du-even"),
        "du-all" => golden_file!("du-all"),
        "gt-all" => golden_file!("gt-all"),
        "id12-all" => golden_file!("id12-all"),
        "id22-all" => golden_file!("id22-all"),
        "ud-gc" => golden_file!("ud-gc"),
        "ud-gec" => golden_file!("ud-gec"),
        "ud-odd" => golden_file!("ud-odd"),
        "ud-even" => golden_file!("ud-even"),
        "ud-all" => golden_file!("ud-all"),
        _ => return None,
    })
}

/// Rows as `(label, polynomial)`. Labels are the filling size the row counts
/// (series rows: the t-power), except the cluster tables, which are labeled
/// by body-column count like their usual presentation.
pub fn compute(name: &str, cap: usize) -> Result<Vec<(String, String)>> {
    let ak3 = |k| FamilyId::Ak3 { k };
    let du = FamilyId::Du162534;
    let gt = FamilyId::Gt124356;
    let ud = FamilyId::JointUpDown;
    match name {
        "a33-c" => family_rows(ak3(3), PolyKind::Cluster, 1..=10, |n| n),
        "a33-gc" => family_rows(ak3(3), PolyKind::Free, 1..=8, |n| n),
        "a23-gc" => family_rows(ak3(2), PolyKind::Free, 1..=8, |n| n),
        "a33-dist" => dist_rows(ak3(3), 3, 7, cap),
        "a23-dist" => dist_rows(ak3(2), 2, 7, cap),
        "du-gc" => family_rows(du, PolyKind::Free, 1..=8, |n| 2 * n),
        "du-gsc" => family_rows(du, PolyKind::PrefixAnchored, 0..=8, |n| 2 * n + 1),
        "du-gec" => family_rows(du, PolyKind::SuffixAnchored, 0..=8, |n| 2 * n + 1),
        "du-gsec" => family_rows(du, PolyKind::BothAnchored, 0..=8, |n| 2 * n + 2),
        "du-odd" => series_rows(&family_series(du, &[(1, 0)], 11, cap)?),
        "du-even" => series_rows(&family_series(du, &[(1, 1)], 12, cap)?),
        "du-all" => series_rows(&family_series(du, &[(1, 0), (1, 1)], 10, cap)?),
        "gt-all" => series_rows(&family_series(gt, &[(0, 0), (0, 1), (0, 2)], 11, cap)?),
        "id12-all" => series_rows(&family_series(FamilyId::Pkm { k: 1, m: 2 }, &[(0, 0)], 6, cap)?),
        "id22-all" => series_rows(&family_series(FamilyId::Pkm { k: 2, m: 2 }, &[(0, 0)], 10, cap)?),
        "ud-gc" => family_rows(ud, PolyKind::Free, 1..=6, |n| 2 * n),
        "ud-gec" => family_rows(ud, PolyKind::SuffixAnchored, 0..=6, |n| 2 * n + 1),
        "ud-odd" => series_rows(&family_series(ud, &[(0, 1)], 11, cap)?),
        "ud-even" => series_rows(&family_series(ud, &[(0, 0)], 10, cap)?),
        "ud-all" => series_rows(&family_series(ud, &[(0, 0), (0, 1)], 10, cap)?),
        other => bail!("unknown preset `{other}`; available: {}", NAMES.join(", ")),
    }
}

fn family_rows(
    id: FamilyId,
    kind: PolyKind,
    ns: std::ops::RangeInclusive<usize>,
    label: impl Fn(usize) -> usize,
) -> Result<Vec<(String, String)>> {
    ns.map(|n| Ok((label(n).to_string(), families::family_poly(id, kind, n)?.to_string())))
        .collect()
}

fn dist_rows(id: FamilyId, k: usize, upto: usize, cap: usize) -> Result<Vec<(String, String)>> {
    let s = family_series(id, &[(0, 0)], k * upto, cap)?;
    Ok((1..=upto)
        .map(|n| (n.to_string(), s.coefficient_at(k * n).to_string()))
        .collect())
}

fn family_series(
    id: FamilyId,
    anchors: &[(usize, usize)],
    order: usize,
    cap: usize,
) -> Result<EgfSeries> {
    let src = BlockSource::Family(id);
    let mut acc: Option<EgfSeries> = None;
    for &(i, j) in anchors {
        let s = gf_closed(i, j, order, &src, cap)?;
        acc = Some(match acc {
            Some(a) => a.add(&s),
            None => s,
        });
    }
    Ok(acc.expect("at least one anchor pair"))
}

fn series_rows(s: &EgfSeries) -> Result<Vec<(String, String)>> {
    Ok((0..=s.order())
        .map(|m| (m.to_string(), s.coefficient_at(m).to_string()))
        .collect())
}
