//! Combinatorial encoding of a (d+2)-angulated category.
//!
//! A [`CategorySkeleton`] records finitely many isomorphism classes of
//! indecomposable objects, the suspension as a permutation of those classes,
//! and a finite set of generating (d+2)-angles. Angles are stored as object
//! sequences only: an angle template lists the d+2 objects
//! `X_0, ..., X_{d+1}`; the final wrap object (the suspension of `X_0`) is
//! implied. Objects are Krull-Schmidt multisets of indecomposable labels, so
//! isomorphism of objects is multiset equality and direct sums are multiset
//! unions.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label of an isomorphism class of indecomposable objects.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndecId(pub String);

impl fmt::Display for IndecId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for IndecId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&str> for IndecId {
    fn from(s: &str) -> Self {
        IndecId(s.to_string())
    }
}

/// Isomorphism class of a (possibly zero) object: a multiset of
/// indecomposable labels, kept sorted so that equality is isomorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<IndecId>", into = "Vec<IndecId>")]
pub struct ObjectClass {
    summands: Vec<IndecId>,
}

impl ObjectClass {
    pub fn new(mut summands: Vec<IndecId>) -> Self {
        summands.sort();
        ObjectClass { summands }
    }

    pub fn zero() -> Self {
        ObjectClass { summands: Vec::new() }
    }

    pub fn single(id: IndecId) -> Self {
        ObjectClass { summands: vec![id] }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> &[IndecId] {
        &self.summands
    }

    /// Direct sum: multiset union.
    pub fn sum(&self, other: &ObjectClass) -> ObjectClass {
        let mut all = self.summands.clone();
        all.extend(other.summands.iter().cloned());
        ObjectClass::new(all)
    }
}

impl From<Vec<IndecId>> for ObjectClass {
    fn from(v: Vec<IndecId>) -> Self {
        ObjectClass::new(v)
    }
}

impl From<ObjectClass> for Vec<IndecId> {
    fn from(o: ObjectClass) -> Self {
        o.summands
    }
}

impl fmt::Debug for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let labels: Vec<&str> = self.summands.iter().map(|s| s.0.as_str()).collect();
        f.write_str(&labels.join("+"))
    }
}

/// The suspension, encoded as a permutation of the indecomposable labels.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Suspension {
    map: BTreeMap<IndecId, IndecId>,
}

impl Suspension {
    pub fn new(map: BTreeMap<IndecId, IndecId>) -> Self {
        Suspension { map }
    }

    pub fn apply_label(&self, id: &IndecId) -> Result<&IndecId> {
        self.map
            .get(id)
            .ok_or_else(|| Error::UnknownIndec(id.0.clone()))
    }

    pub fn apply(&self, obj: &ObjectClass) -> Result<ObjectClass> {
        let summands = obj
            .summands()
            .iter()
            .map(|s| self.apply_label(s).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(ObjectClass::new(summands))
    }

    /// Inverse permutation; fails if the map is not a bijection.
    pub fn inverse(&self) -> Result<Suspension> {
        let mut inv = BTreeMap::new();
        for (k, v) in &self.map {
            if inv.insert(v.clone(), k.clone()).is_some() {
                return Err(Error::InvalidSkeleton(format!(
                    "suspension is not injective: '{v}' has two preimages"
                )));
            }
        }
        Ok(Suspension { map: inv })
    }

    /// Multiplicative order of the permutation (lcm of cycle lengths),
    /// saturating at `u32::MAX`.
    pub fn order(&self) -> u32 {
        let mut order: u64 = 1;
        for orbit in self.orbits() {
            let len = orbit.len() as u64;
            order = num::integer::lcm(order, len);
            if order > u64::from(u32::MAX) {
                return u32::MAX;
            }
        }
        order as u32
    }

    /// Orbits of the permutation. Each orbit is sorted ascending and the
    /// orbits are ordered by their smallest label.
    pub fn orbits(&self) -> Vec<Vec<IndecId>> {
        let mut seen: HashSet<&IndecId> = HashSet::new();
        let mut orbits = Vec::new();
        for start in self.map.keys() {
            if seen.contains(start) {
                continue;
            }
            let mut orbit = Vec::new();
            let mut cur = start;
            loop {
                seen.insert(cur);
                orbit.push(cur.clone());
                match self.map.get(cur) {
                    Some(next) if !seen.contains(next) => cur = next,
                    _ => break,
                }
            }
            orbit.sort();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn domain(&self) -> impl Iterator<Item = &IndecId> {
        self.map.keys()
    }
}

impl fmt::Debug for Suspension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.map.iter()).finish()
    }
}

/// One (d+2)-angle recorded as its d+2 object classes `X_0, ..., X_{d+1}`.
/// The wrap object (suspension of `X_0`) is implied, not stored.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AngleTemplate {
    objects: Vec<ObjectClass>,
}

impl AngleTemplate {
    pub fn new(objects: Vec<ObjectClass>) -> Self {
        AngleTemplate { objects }
    }

    pub fn objects(&self) -> &[ObjectClass] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// The `d` for which this is a (d+2)-angle, if the length admits one.
    pub fn d(&self) -> Option<u32> {
        (self.objects.len() >= 3).then(|| (self.objects.len() - 2) as u32)
    }
}

impl fmt::Debug for AngleTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.objects.iter()).finish()
    }
}

/// Finite encoding of a (d+2)-angulated category: indecomposable labels,
/// suspension permutation, and generating angles.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CategorySkeleton {
    pub d: u32,
    pub indecs: Vec<IndecId>,
    pub suspension: Suspension,
    pub angles: Vec<AngleTemplate>,
}

impl CategorySkeleton {
    /// Parses the JSON wire format, reporting the parse location on failure.
    pub fn from_json(text: &str) -> Result<Self> {
        parse_json(text, "skeleton")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("skeleton serializes")
    }

    pub fn has_indec(&self, id: &IndecId) -> bool {
        self.indecs.contains(id)
    }
}

/// Parses JSON into any deserializable value, mapping failures to
/// [`Error::Parse`] with a line/column location.
pub(crate) fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("{what} JSON, line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}

/// One problem found by [`validate_skeleton`].
#[derive(Clone, Debug, Serialize)]
pub struct Problem {
    pub location: String,
    pub message: String,
}

/// Outcome of [`validate_skeleton`]; empty `problems` means valid.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub problems: Vec<Problem>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }

    fn push(&mut self, location: impl Into<String>, message: impl Into<String>) {
        self.problems.push(Problem {
            location: location.into(),
            message: message.into(),
        });
    }
}

/// Checks a skeleton for structural soundness: `d >= 1`, no duplicate
/// labels, the suspension a bijection of exactly the declared labels, and
/// every generating angle of length d+2 using only declared labels.
pub fn validate_skeleton(s: &CategorySkeleton) -> ValidationReport {
    let mut report = ValidationReport::default();
    if s.d < 1 {
        report.push("d", "d must be at least 1");
    }
    let mut seen: HashSet<&IndecId> = HashSet::new();
    for id in &s.indecs {
        if !seen.insert(id) {
            report.push("indecs", format!("duplicate label '{id}'"));
        }
        if id.0.is_empty() {
            report.push("indecs", "empty label");
        }
    }
    for id in &s.indecs {
        match s.suspension.apply_label(id) {
            Ok(image) => {
                if !seen.contains(image) {
                    report.push(
                        format!("suspension['{id}']"),
                        format!("image '{image}' is not a declared label"),
                    );
                }
            }
            Err(_) => report.push("suspension", format!("no image for label '{id}'")),
        }
    }
    for src in s.suspension.domain() {
        if !seen.contains(src) {
            report.push("suspension", format!("extra source label '{src}'"));
        }
    }
    let mut images: HashSet<&IndecId> = HashSet::new();
    for src in s.suspension.domain() {
        if let Ok(image) = s.suspension.apply_label(src) {
            if !images.insert(image) {
                report.push(
                    "suspension",
                    format!("not injective: '{image}' has two preimages"),
                );
            }
        }
    }
    let want = (s.d as usize) + 2;
    for (k, angle) in s.angles.iter().enumerate() {
        if angle.len() != want {
            report.push(
                format!("angles[{k}]"),
                format!("expected {want} objects, found {}", angle.len()),
            );
        }
        for (i, obj) in angle.objects().iter().enumerate() {
            for summand in obj.summands() {
                if !seen.contains(summand) {
                    report.push(
                        format!("angles[{k}][{i}]"),
                        format!("undeclared label '{summand}'"),
                    );
                }
            }
        }
    }
    report
}

/// Rotates an angle one step: `(X_0, ..., X_{d+1})` becomes
/// `(X_1, ..., X_{d+1}, Sigma X_0)`. Signs live on morphisms and are
/// invisible at the object level, so rotation is a pure shift.
pub fn rotate_angle(a: &AngleTemplate, s: &Suspension) -> Result<AngleTemplate> {
    if a.is_empty() {
        return Err(Error::invalid("cannot rotate an empty angle"));
    }
    let mut objects: Vec<ObjectClass> = a.objects()[1..].to_vec();
    objects.push(s.apply(&a.objects()[0])?);
    Ok(AngleTemplate::new(objects))
}

/// Componentwise direct sum of two angles of the same length.
pub fn direct_sum_angles(a: &AngleTemplate, b: &AngleTemplate) -> Result<AngleTemplate> {
    if a.len() != b.len() {
        return Err(Error::invalid(format!(
            "cannot sum angles of different lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let objects = a
        .objects()
        .iter()
        .zip(b.objects())
        .map(|(x, y)| x.sum(y))
        .collect();
    Ok(AngleTemplate::new(objects))
}

/// The trivial angle on an object: `(X, X, 0, ..., 0)` with d+2 entries.
pub fn trivial_angle(x: &ObjectClass, d: u32) -> AngleTemplate {
    let mut objects = vec![x.clone(), x.clone()];
    objects.extend(std::iter::repeat_with(ObjectClass::zero).take(d as usize));
    AngleTemplate::new(objects)
}

/// All rotations of the generating angles, in deterministic order.
///
/// For each generator the rotations `rot^0, rot^1, ...` are collected until
/// the sequence repeats or `(d+2) * (depth+1)` rotations have been taken,
/// whichever comes first. `depth` defaults to the order of the suspension
/// permutation, so by default the closure is rotation-complete: a full
/// suspension period of every generator. Duplicates across generators are
/// dropped, keeping first occurrences.
pub fn angle_closure(s: &CategorySkeleton, depth: Option<u32>) -> Result<Vec<AngleTemplate>> {
    let depth = depth.unwrap_or_else(|| s.suspension.order());
    let max_steps = (u64::from(s.d) + 2) * (u64::from(depth) + 1);
    let mut out: Vec<AngleTemplate> = Vec::new();
    let mut global: HashSet<AngleTemplate> = HashSet::new();
    for gen in &s.angles {
        let mut local: HashSet<AngleTemplate> = HashSet::new();
        let mut cur = gen.clone();
        let mut step: u64 = 0;
        while local.insert(cur.clone()) {
            if global.insert(cur.clone()) {
                out.push(cur.clone());
            }
            step += 1;
            if step >= max_steps {
                break;
            }
            cur = rotate_angle(&cur, &s.suspension)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> IndecId {
        IndecId::from(s)
    }

    fn obj(labels: &[&str]) -> ObjectClass {
        ObjectClass::new(labels.iter().map(|s| id(s)).collect())
    }

    /// Two-object skeleton with swap suspension and one 3-angle (d = 1).
    fn swap_skeleton() -> CategorySkeleton {
        let map: BTreeMap<IndecId, IndecId> =
            [(id("a"), id("b")), (id("b"), id("a"))].into_iter().collect();
        CategorySkeleton {
            d: 1,
            indecs: vec![id("a"), id("b")],
            suspension: Suspension::new(map),
            angles: vec![AngleTemplate::new(vec![obj(&["a"]), obj(&["b"]), obj(&["a"])])],
        }
    }

    #[test]
    fn multiset_equality_ignores_order() {
        assert_eq!(obj(&["b", "a", "a"]), obj(&["a", "b", "a"]));
        assert_ne!(obj(&["a"]), obj(&["a", "a"]));
    }

    #[test]
    fn validates_good_skeleton() {
        let report = validate_skeleton(&swap_skeleton());
        assert!(report.is_valid(), "{:?}", report.problems);
    }

    #[test]
    fn rejects_non_bijective_suspension() {
        let mut s = swap_skeleton();
        let map: BTreeMap<IndecId, IndecId> =
            [(id("a"), id("a")), (id("b"), id("a"))].into_iter().collect();
        s.suspension = Suspension::new(map);
        let report = validate_skeleton(&s);
        assert!(!report.is_valid());
        assert!(report
            .problems
            .iter()
            .any(|p| p.message.contains("two preimages")));
    }

    #[test]
    fn rejects_wrong_angle_length() {
        let mut s = swap_skeleton();
        s.angles = vec![AngleTemplate::new(vec![obj(&["a"]), obj(&["b"])])];
        assert!(!validate_skeleton(&s).is_valid());
    }

    #[test]
    fn rejects_undeclared_labels() {
        let mut s = swap_skeleton();
        s.angles = vec![AngleTemplate::new(vec![obj(&["a"]), obj(&["x"]), obj(&["a"])])];
        let report = validate_skeleton(&s);
        assert!(report
            .problems
            .iter()
            .any(|p| p.message.contains("undeclared label 'x'")));
    }

    #[test]
    fn rotation_shifts_and_suspends() {
        let s = swap_skeleton();
        let rotated = rotate_angle(&s.angles[0], &s.suspension).unwrap();
        assert_eq!(
            rotated,
            AngleTemplate::new(vec![obj(&["b"]), obj(&["a"]), obj(&["b"])])
        );
    }

    #[test]
    fn full_rotation_period_suspends_componentwise() {
        // After d+2 rotations every object has been suspended once.
        let s = swap_skeleton();
        let mut a = s.angles[0].clone();
        for _ in 0..(s.d + 2) {
            a = rotate_angle(&a, &s.suspension).unwrap();
        }
        let suspended: Vec<ObjectClass> = s.angles[0]
            .objects()
            .iter()
            .map(|o| s.suspension.apply(o).unwrap())
            .collect();
        assert_eq!(a, AngleTemplate::new(suspended));
    }

    #[test]
    fn trivial_angle_shape() {
        let t = trivial_angle(&obj(&["a"]), 3);
        assert_eq!(t.len(), 5);
        assert_eq!(t.objects()[0], obj(&["a"]));
        assert_eq!(t.objects()[1], obj(&["a"]));
        assert!(t.objects()[2..].iter().all(ObjectClass::is_zero));
    }

    #[test]
    fn direct_sum_is_componentwise_union() {
        let s = swap_skeleton();
        let sum = direct_sum_angles(&s.angles[0], &s.angles[0]).unwrap();
        assert_eq!(sum.objects()[0], obj(&["a", "a"]));
        let t = trivial_angle(&obj(&["b"]), 1);
        let mixed = direct_sum_angles(&s.angles[0], &t).unwrap();
        assert_eq!(mixed.objects()[0], obj(&["a", "b"]));
        assert_eq!(mixed.objects()[2], obj(&["a"]));
    }

    #[test]
    fn closure_stops_at_repeat_and_dedups() {
        let s = swap_skeleton();
        let closure = angle_closure(&s, None).unwrap();
        // Rotations of (a, b, a): (b, a, b), (a, b, a) repeats after 2 steps.
        assert_eq!(closure.len(), 2);
        assert_eq!(closure[0], s.angles[0]);
    }

    #[test]
    fn closure_respects_explicit_depth_zero() {
        let s = swap_skeleton();
        // depth 0 still allows (d+2) * 1 = 3 rotations of the generator.
        let closure = angle_closure(&s, Some(0)).unwrap();
        assert_eq!(closure.len(), 2);
    }

    #[test]
    fn json_round_trip() {
        let s = swap_skeleton();
        let text = s.to_json();
        let back = CategorySkeleton::from_json(&text).unwrap();
        assert_eq!(back.d, s.d);
        assert_eq!(back.indecs, s.indecs);
        assert_eq!(back.angles, s.angles);
        assert!(validate_skeleton(&back).is_valid());
    }

    #[test]
    fn parse_error_reports_location() {
        let err = CategorySkeleton::from_json("{\"d\": 1,").unwrap_err();
        match err {
            Error::Parse { location, .. } => assert!(location.contains("line")),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
