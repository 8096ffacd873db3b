//! Rank functions on objects and their axioms.
//!
//! A rank function assigns a nonnegative rational to every indecomposable.
//! It extends additively over direct sums (Krull-Schmidt), so a value on an
//! [`ObjectClass`] is the sum over its summands. The axioms checked here:
//!
//! * iso-invariance and additivity hold by construction of the multiset
//!   encoding (values are attached to isomorphism classes),
//! * every angle in the rotation closure has nonnegative alternating defect,
//! * the value is invariant under suspension.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratio::Rat;
use crate::skeleton::{angle_closure, AngleTemplate, CategorySkeleton, IndecId, ObjectClass};

/// Nonnegative rational values on indecomposable labels.
///
/// Nonnegativity is enforced at construction, so any held value is a valid
/// candidate rank function; the angle axioms still need [`check_rank_on_objects`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RankWire", into = "RankWire")]
pub struct RankOnObjects {
    values: BTreeMap<IndecId, Rat>,
}

/// Wire format: `{"values": {label: "p/q"}}`.
#[derive(Serialize, Deserialize)]
struct RankWire {
    values: BTreeMap<IndecId, Rat>,
}

impl TryFrom<RankWire> for RankOnObjects {
    type Error = Error;
    fn try_from(w: RankWire) -> Result<Self> {
        RankOnObjects::new(w.values)
    }
}

impl From<RankOnObjects> for RankWire {
    fn from(r: RankOnObjects) -> Self {
        RankWire { values: r.values }
    }
}

impl RankOnObjects {
    /// Rejects negative values; zero is allowed.
    pub fn new(values: BTreeMap<IndecId, Rat>) -> Result<Self> {
        for (label, value) in &values {
            if value.is_negative() {
                return Err(Error::NegativeValue {
                    label: label.0.clone(),
                    value: value.to_string(),
                });
            }
        }
        Ok(RankOnObjects { values })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        crate::skeleton::parse_json(text, "rank")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("rank serializes")
    }

    pub fn value(&self, id: &IndecId) -> Result<&Rat> {
        self.values
            .get(id)
            .ok_or_else(|| Error::UnknownIndec(id.0.clone()))
    }

    /// Additive extension over a multiset of summands. Zero objects get 0.
    pub fn eval(&self, x: &ObjectClass) -> Result<Rat> {
        let mut acc = Rat::zero();
        for s in x.summands() {
            acc += self.value(s)?;
        }
        Ok(acc)
    }

    pub fn labels(&self) -> impl Iterator<Item = &IndecId> {
        self.values.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndecId, &Rat)> {
        self.values.iter()
    }

    /// True when every label of the skeleton has a value.
    pub fn covers(&self, s: &CategorySkeleton) -> bool {
        s.indecs.iter().all(|i| self.values.contains_key(i))
    }
}

/// Additive evaluation of a rank function on an object class.
pub fn eval_object(r: &RankOnObjects, x: &ObjectClass) -> Result<Rat> {
    r.eval(x)
}

/// An angle together with its alternating defect
/// `sum_i (-1)^i r(X_i)` over the d+2 stored objects.
#[derive(Clone, Debug, Serialize)]
pub struct AngleDefect {
    pub angle: AngleTemplate,
    pub defect: Rat,
}

/// Computes the alternating defect of one angle.
pub fn angle_defect(r: &RankOnObjects, a: &AngleTemplate) -> Result<AngleDefect> {
    let mut defect = Rat::zero();
    for (i, obj) in a.objects().iter().enumerate() {
        let v = r.eval(obj)?;
        if i % 2 == 0 {
            defect += &v;
        } else {
            defect -= &v;
        }
    }
    Ok(AngleDefect {
        angle: a.clone(),
        defect,
    })
}

/// One suspension-invariance violation: `r(X) != r(Sigma X)`.
#[derive(Clone, Debug, Serialize)]
pub struct Ro3Violation {
    pub label: IndecId,
    pub value: Rat,
    pub suspended_label: IndecId,
    pub suspended_value: Rat,
}

/// Report of the object-side axioms over a rotation closure.
#[derive(Clone, Debug, Serialize)]
pub struct RoReport {
    /// Number of angles in the checked closure.
    pub closure_size: usize,
    /// Defect of every closure angle, in closure order.
    pub defects: Vec<AngleDefect>,
    /// Closure angles with negative defect.
    pub ro2_violations: Vec<AngleDefect>,
    /// Labels whose value changes under suspension.
    pub ro3_violations: Vec<Ro3Violation>,
    pub pass: bool,
}

/// Checks the rank axioms on the rotation closure of a skeleton's angles.
///
/// Iso-invariance and sum-additivity are structural in this encoding, so the
/// checked content is: nonnegative defect on every closure angle and
/// suspension invariance on every label. `depth` bounds the closure as in
/// [`angle_closure`]. The soundness boundary is the closure itself: angles
/// outside it are not inspected.
pub fn check_rank_on_objects(
    r: &RankOnObjects,
    s: &CategorySkeleton,
    depth: Option<u32>,
) -> Result<RoReport> {
    let closure = angle_closure(s, depth)?;
    let mut defects = Vec::with_capacity(closure.len());
    let mut ro2_violations = Vec::new();
    for angle in &closure {
        let d = angle_defect(r, angle)?;
        if d.defect.is_negative() {
            ro2_violations.push(d.clone());
        }
        defects.push(d);
    }
    let mut ro3_violations = Vec::new();
    for label in &s.indecs {
        let suspended = s.suspension.apply_label(label)?;
        let v = r.value(label)?;
        let sv = r.value(suspended)?;
        if v != sv {
            ro3_violations.push(Ro3Violation {
                label: label.clone(),
                value: v.clone(),
                suspended_label: suspended.clone(),
                suspended_value: sv.clone(),
            });
        }
    }
    let pass = ro2_violations.is_empty() && ro3_violations.is_empty();
    Ok(RoReport {
        closure_size: closure.len(),
        defects,
        ro2_violations,
        ro3_violations,
        pass,
    })
}

/// True when every value is an integer.
pub fn is_integral(r: &RankOnObjects) -> bool {
    r.values.values().all(Rat::is_integer)
}
