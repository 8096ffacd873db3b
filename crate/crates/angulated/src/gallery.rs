//! Ready-made skeletons with reference rank functions.
//!
//! Each entry bundles a skeleton, one or more named rank functions on its
//! indecomposables, and a note explaining the shape.  Entries serialize as
//! ordinary JSON so they can be piped back into the other tools.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::additive::EngineContext;
use crate::error::{Error, Result};
use crate::nakayama::{proj_label, NakayamaAlgebra, QuiverShape};
use crate::rank_objects::RankOnObjects;
use crate::ratio::Rat;
use crate::skeleton::{AngleTemplate, CategorySkeleton, IndecId, ObjectClass, Suspension};

/// A named rank function shipped with a gallery entry.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReferenceRank {
    pub name: String,
    pub rank: RankOnObjects,
}

/// A skeleton bundled with reference rank functions and a description.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GalleryEntry {
    pub name: String,
    pub skeleton: CategorySkeleton,
    pub reference_ranks: Vec<ReferenceRank>,
    pub notes: String,
}

impl GalleryEntry {
    pub fn from_json(text: &str) -> Result<Self> {
        crate::skeleton::parse_json(text, "gallery entry")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("gallery entry serializes")
    }
}

fn ar_line_base(d: u32) -> Vec<String> {
    let mut base = vec!["1".to_string()];
    base.extend((1..=d as usize).map(|k| format!("{}{}", k + 1, k)));
    base.push(format!("{}", d + 1));
    base
}

fn ar_line_blocks(window: usize) -> Vec<i64> {
    let first = -(((window - 1) / 2) as i64);
    (0..window as i64).map(|b| first + b).collect()
}

/// Block 0 keeps the bare segment labels; block `j` wraps them in the
/// ambient shift by `d * j`.
fn ar_line_label(d: u32, base: &str, block: i64) -> IndecId {
    if block == 0 {
        IndecId::from(base)
    } else {
        IndecId(format!("S{}({})", i64::from(d) * block, base))
    }
}

/// A cyclic strip of `window` suspension blocks over one segment of d + 2
/// indecomposables, with a single generating window whose rotations sweep
/// the whole strip.  Ships the interval-dimension rank (1, 2, ..., 2, 1).
pub fn build_ar_line(d: u32, window: usize) -> Result<GalleryEntry> {
    if d < 1 {
        return Err(Error::invalid("d must be at least 1"));
    }
    if window < 2 {
        return Err(Error::invalid(
            "window too small: at least two suspended blocks are needed for the strip to close",
        ));
    }
    let base = ar_line_base(d);
    let blocks = ar_line_blocks(window);

    let mut indecs = Vec::with_capacity(base.len() * window);
    for &j in &blocks {
        for b in &base {
            indecs.push(ar_line_label(d, b, j));
        }
    }
    let mut map = BTreeMap::new();
    for (bi, &j) in blocks.iter().enumerate() {
        let next = blocks[(bi + 1) % blocks.len()];
        for b in &base {
            map.insert(ar_line_label(d, b, j), ar_line_label(d, b, next));
        }
    }
    let window_angle = AngleTemplate::new(
        base.iter()
            .map(|b| ObjectClass::single(ar_line_label(d, b, 0)))
            .collect(),
    );

    let mut values = BTreeMap::new();
    for &j in &blocks {
        for (k, b) in base.iter().enumerate() {
            let dim = if k == 0 || k == base.len() - 1 { 1 } else { 2 };
            values.insert(ar_line_label(d, b, j), Rat::from_int(dim));
        }
    }
    Ok(GalleryEntry {
        name: format!("ar-line-d{d}"),
        skeleton: CategorySkeleton {
            d,
            indecs,
            suspension: Suspension::new(map),
            angles: vec![window_angle],
        },
        reference_ranks: vec![ReferenceRank {
            name: "dimension".into(),
            rank: RankOnObjects::new(values)?,
        }],
        notes: format!(
            "cyclic strip of {window} suspension blocks over a segment of {} objects; \
             one generating window, rotations sweep the strip",
            d + 2
        ),
    })
}

/// The d = 3 strip with a handpicked rank whose rotation defects run
/// (4, 0, 0, 2, 4) along one block, next to the dimension rank.
pub fn build_d3_custom() -> Result<GalleryEntry> {
    let mut entry = build_ar_line(3, 3)?;
    let custom_base: [(&str, i64); 5] = [("1", 2), ("21", 0), ("32", 1), ("43", 3), ("4", 4)];
    let mut values = BTreeMap::new();
    for j in ar_line_blocks(3) {
        for (base, v) in custom_base {
            values.insert(ar_line_label(3, base, j), Rat::from_int(v));
        }
    }
    entry.name = "d3-custom".into();
    entry.reference_ranks.insert(
        0,
        ReferenceRank {
            name: "custom".into(),
            rank: RankOnObjects::new(values)?,
        },
    );
    entry.notes = "the ar-line-d3 strip with a handpicked even-defect rank next to the \
                   dimension rank"
        .into();
    Ok(entry)
}

/// A cycle of 2d + 2 objects where every window of d + 2 consecutive
/// objects is an angle; the rank cone collapses to the ray of the constant
/// function.  Ships the all-ones rank.
pub fn build_cluster_cycle(d: u32) -> Result<GalleryEntry> {
    if d < 1 {
        return Err(Error::invalid("d must be at least 1"));
    }
    let count = (2 * d + 2) as usize;
    let step = (d + 2) as usize;
    let labels: Vec<IndecId> = (0..count).map(|i| IndecId(format!("c{i}"))).collect();
    let map = (0..count)
        .map(|i| (labels[i].clone(), labels[(i + step) % count].clone()))
        .collect();
    let angles = (0..count)
        .map(|start| {
            AngleTemplate::new(
                (0..step)
                    .map(|k| ObjectClass::single(labels[(start + k) % count].clone()))
                    .collect(),
            )
        })
        .collect();
    let values = labels.iter().map(|l| (l.clone(), Rat::one())).collect();
    Ok(GalleryEntry {
        name: format!("cluster-cycle-d{d}"),
        skeleton: CategorySkeleton {
            d,
            indecs: labels,
            suspension: Suspension::new(map),
            angles,
        },
        reference_ranks: vec![ReferenceRank {
            name: "ones".into(),
            rank: RankOnObjects::new(values)?,
        }],
        notes: format!(
            "cycle of {count} objects whose {count} consecutive windows are all angles; \
             the rank cone is the single ray of the constant function"
        ),
    })
}

/// The projectives of the cyclic self-injective algebra, with one
/// generated angle per simple module.  Ships the composition-length rank.
pub fn build_nakayama_proj(n: usize, ell: usize, d: u32) -> Result<GalleryEntry> {
    let algebra = NakayamaAlgebra::new(n, ell, QuiverShape::Cyclic)?;
    let ctx = EngineContext::new(algebra, d)?;
    let values = (1..=n)
        .map(|v| (proj_label(v), Rat::from_int(ell as i64)))
        .collect();
    Ok(GalleryEntry {
        name: format!("selfinj-n{n}-l{ell}-d{d}"),
        skeleton: ctx.skeleton,
        reference_ranks: vec![ReferenceRank {
            name: "length".into(),
            rank: RankOnObjects::new(values)?,
        }],
        notes: format!(
            "projectives of the cyclic self-injective algebra with {n} vertices and \
             radical length {ell}; one generated angle per simple"
        ),
    })
}

/// Every entry the `examples` tooling knows about.
pub fn builtin_entries() -> Result<Vec<GalleryEntry>> {
    Ok(vec![
        build_d3_custom()?,
        build_ar_line(3, 3)?,
        build_ar_line(5, 3)?,
        build_cluster_cycle(1)?,
        build_cluster_cycle(2)?,
        build_cluster_cycle(3)?,
        build_cluster_cycle(5)?,
        build_nakayama_proj(3, 2, 1)?,
        build_nakayama_proj(3, 2, 3)?,
    ])
}

/// Looks a built-in entry up by name.
pub fn find_entry(name: &str) -> Result<GalleryEntry> {
    builtin_entries()?
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::invalid(format!("unknown example '{name}'")))
}
