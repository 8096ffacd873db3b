//! The object/morphism correspondence for odd `d`.
//!
//! A marked angle is an angle regarded as a completion of its first arrow
//! `x_0: X_0 -> X_1`. For odd `d` the morphism-side value of the marked
//! arrow is determined by the objects alone, via the alternating half-sum
//!
//! ```text
//! psi(a) = (r(X_0) + r(X_1) - r(X_2) + ... - r(X_{d+1})) / 2
//! ```
//!
//! and conversely the object-side value of `X` is the value of the identity
//! on `X`, read off the trivial angle `(X, X, 0, ..., 0)`. The half-sum is
//! only well defined for odd `d` (for even `d` the telescoping that makes it
//! independent of the completion breaks down); [`psi_eval`] refuses even `d`,
//! while [`phi_eval`] works for every parity because on trivial angles the
//! half-sum collapses to `r(X)` regardless.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rank_objects::{check_rank_on_objects, RankOnObjects};
use crate::ratio::Rat;
use crate::skeleton::{
    angle_closure, direct_sum_angles, rotate_angle, trivial_angle, AngleTemplate,
    CategorySkeleton, ObjectClass,
};

/// An angle regarded as a completion of its first arrow `X_0 -> X_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MarkedAngle(pub AngleTemplate);

impl MarkedAngle {
    pub fn angle(&self) -> &AngleTemplate {
        &self.0
    }

    /// Source and target of the marked arrow.
    pub fn marked_source(&self) -> &ObjectClass {
        &self.0.objects()[0]
    }

    pub fn marked_target(&self) -> &ObjectClass {
        &self.0.objects()[1]
    }
}

/// Extracts an odd `d` from an angle length, refusing even `d`.
fn odd_d_of(a: &AngleTemplate) -> Result<u32> {
    let d = a
        .d()
        .ok_or_else(|| Error::invalid(format!("angle has {} objects, need at least 3", a.len())))?;
    if d % 2 == 0 {
        return Err(Error::EvenD(d));
    }
    Ok(d)
}

/// The alternating half-sum, with no parity gate and no sign check.
fn psi_raw(r: &RankOnObjects, a: &AngleTemplate) -> Result<Rat> {
    let mut acc = r.eval(&a.objects()[0])?;
    for (i, obj) in a.objects().iter().enumerate().skip(1) {
        let v = r.eval(obj)?;
        if i % 2 == 1 {
            acc += &v;
        } else {
            acc -= &v;
        }
    }
    Ok(acc.half())
}

/// Value of the marked arrow of `m` under the morphism rank induced by `r`.
///
/// Requires odd `d`. A negative result means `r` violates the
/// nonnegative-defect axiom on the rotation of `m` and is reported as an
/// error rather than returned.
pub fn psi_eval(r: &RankOnObjects, m: &MarkedAngle) -> Result<Rat> {
    odd_d_of(&m.0)?;
    let value = psi_raw(r, &m.0)?;
    if value.is_negative() {
        return Err(Error::NegativePsi {
            value: value.to_string(),
            angle: format!("{:?}", m.0),
        });
    }
    Ok(value)
}

/// View of an object rank function as a rank function on morphisms.
///
/// Construction checks that `base` covers the skeleton's labels and passes
/// the object-side axioms on the closure; the parity of `d` is deliberately
/// not checked here so that [`phi_eval`] stays available for every `d`.
#[derive(Debug)]
pub struct RankOnMorphismsView<'a> {
    base: &'a RankOnObjects,
    skeleton: &'a CategorySkeleton,
}

impl<'a> RankOnMorphismsView<'a> {
    pub fn new(
        base: &'a RankOnObjects,
        skeleton: &'a CategorySkeleton,
        depth: Option<u32>,
    ) -> Result<Self> {
        let report = check_rank_on_objects(base, skeleton, depth)?;
        if !report.pass {
            return Err(Error::AxiomsFail(format!(
                "object axioms fail on the closure: {} negative defects, {} suspension violations",
                report.ro2_violations.len(),
                report.ro3_violations.len()
            )));
        }
        Ok(RankOnMorphismsView { base, skeleton })
    }

    pub fn base(&self) -> &RankOnObjects {
        self.base
    }

    pub fn skeleton(&self) -> &CategorySkeleton {
        self.skeleton
    }

    pub fn psi(&self, m: &MarkedAngle) -> Result<Rat> {
        psi_eval(self.base, m)
    }

    pub fn phi(&self, x: &ObjectClass) -> Result<Rat> {
        phi_eval(self, x)
    }
}

/// Object-side value recovered from the morphism side: the value of the
/// identity on `x`, read off the trivial angle. Available for every `d`.
pub fn phi_eval(view: &RankOnMorphismsView<'_>, x: &ObjectClass) -> Result<Rat> {
    let t = trivial_angle(x, view.skeleton.d);
    // On (X, X, 0, ..., 0) the half-sum is (r(X) + r(X)) / 2 for any parity.
    psi_raw(view.base, &t)
}

/// One value mismatch found by [`roundtrip_check`] or [`rm_axiom_suite`].
#[derive(Clone, Debug, Serialize)]
pub struct ValueMismatch {
    pub location: String,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// Report of the two round-trip directions over a closure.
#[derive(Clone, Debug, Serialize)]
pub struct RoundtripReport {
    pub closure_size: usize,
    /// `phi(psi(r))(X) = r(X)` for every label, via the trivial angle.
    pub phi_after_psi: Vec<ValueMismatch>,
    /// Direct half-sum against the telescoped identity-value route
    /// `(sum_i (-1)^i r(X_{i+1})) / 2` with `X_{d+2} = Sigma X_0`, for every
    /// closure angle. The two routes agree exactly when the suspension
    /// invariance of `r` holds, which is what makes psi a two-sided inverse.
    pub telescoping: Vec<ValueMismatch>,
    pub pass: bool,
}

/// Verifies both round-trip directions of the correspondence on the
/// rotation closure. Requires odd `d`.
pub fn roundtrip_check(
    r: &RankOnObjects,
    s: &CategorySkeleton,
    depth: Option<u32>,
) -> Result<RoundtripReport> {
    if s.d % 2 == 0 {
        return Err(Error::EvenD(s.d));
    }
    let closure = angle_closure(s, depth)?;
    let mut phi_after_psi = Vec::new();
    for label in &s.indecs {
        let x = ObjectClass::single(label.clone());
        let direct = r.eval(&x)?;
        let via_trivial = psi_raw(r, &trivial_angle(&x, s.d))?;
        if direct != via_trivial {
            phi_after_psi.push(ValueMismatch {
                location: format!("label '{label}'"),
                lhs: via_trivial,
                rhs: direct,
            });
        }
    }
    let mut telescoping = Vec::new();
    for (k, a) in closure.iter().enumerate() {
        let direct = psi_raw(r, a)?;
        let telescoped = psi_via_identities(r, a, s)?;
        if direct != telescoped {
            telescoping.push(ValueMismatch {
                location: format!("closure[{k}]"),
                lhs: direct,
                rhs: telescoped,
            });
        }
    }
    let pass = phi_after_psi.is_empty() && telescoping.is_empty();
    Ok(RoundtripReport {
        closure_size: closure.len(),
        phi_after_psi,
        telescoping,
        pass,
    })
}

/// Second route to psi: the alternating sum of identity values
/// `(sum_{i=0}^{d+1} (-1)^i r(X_{i+1})) / 2`, where `X_{d+2} := Sigma X_0`.
/// Unlike the direct half-sum this touches the suspension.
fn psi_via_identities(r: &RankOnObjects, a: &AngleTemplate, s: &CategorySkeleton) -> Result<Rat> {
    let wrap = s.suspension.apply(&a.objects()[0])?;
    let mut acc = Rat::zero();
    for i in 0..a.len() {
        let obj = if i + 1 < a.len() {
            &a.objects()[i + 1]
        } else {
            &wrap
        };
        let v = r.eval(obj)?;
        if i % 2 == 0 {
            acc += &v;
        } else {
            acc -= &v;
        }
    }
    Ok(acc.half())
}

/// Report of the morphism-side axioms over a closure.
#[derive(Clone, Debug, Serialize)]
pub struct RmReport {
    pub closure_size: usize,
    /// Whether the underlying object rank passes its own axioms.
    pub base_ro_pass: bool,
    /// Negative psi values: `(closure index, value)`.
    pub negative_psi: Vec<ValueMismatch>,
    /// Additivity over direct sums of closure angles and trivial angles.
    pub rm1_violations: Vec<ValueMismatch>,
    /// Consecutive-arrow relation `psi_i - r(X_{i+1}) + psi_{i+1} = 0`.
    pub rm2_violations: Vec<ValueMismatch>,
    /// Invariance under componentwise suspension.
    pub rm3_violations: Vec<ValueMismatch>,
    /// The telescoped identity-sum identity per closure angle.
    pub telescoping_violations: Vec<ValueMismatch>,
    pub pass: bool,
}

/// Runs the morphism-side axiom suite on the rotation closure.
///
/// Iso-invariance of values is structural (values depend on object
/// multisets only). The suite checks, per closure angle: nonnegativity of
/// psi, additivity over direct sums (all closure pairs, plus sums with
/// trivial angles), the consecutive-arrow relation around all d+3 rotations,
/// invariance under componentwise suspension, and the telescoped identity
/// sum. Requires odd `d`; reports rather than errors on axiom failures.
pub fn rm_axiom_suite(
    r: &RankOnObjects,
    s: &CategorySkeleton,
    depth: Option<u32>,
) -> Result<RmReport> {
    if s.d % 2 == 0 {
        return Err(Error::EvenD(s.d));
    }
    let closure = angle_closure(s, depth)?;
    let ro = check_rank_on_objects(r, s, depth)?;
    let psis: Vec<Rat> = closure
        .iter()
        .map(|a| psi_raw(r, a))
        .collect::<Result<_>>()?;

    let mut negative_psi = Vec::new();
    for (k, v) in psis.iter().enumerate() {
        if v.is_negative() {
            negative_psi.push(ValueMismatch {
                location: format!("closure[{k}]"),
                lhs: v.clone(),
                rhs: Rat::zero(),
            });
        }
    }

    let mut rm1_violations = Vec::new();
    for (i, a) in closure.iter().enumerate() {
        for (j, b) in closure.iter().enumerate() {
            let sum = direct_sum_angles(a, b)?;
            let lhs = psi_raw(r, &sum)?;
            let rhs = &psis[i] + &psis[j];
            if lhs != rhs {
                rm1_violations.push(ValueMismatch {
                    location: format!("closure[{i}] + closure[{j}]"),
                    lhs,
                    rhs,
                });
            }
        }
        for label in &s.indecs {
            let t = trivial_angle(&ObjectClass::single(label.clone()), s.d);
            let sum = direct_sum_angles(a, &t)?;
            let lhs = psi_raw(r, &sum)?;
            let rhs = &psis[i] + &r.eval(&ObjectClass::single(label.clone()))?;
            if lhs != rhs {
                rm1_violations.push(ValueMismatch {
                    location: format!("closure[{i}] + trivial('{label}')"),
                    lhs,
                    rhs,
                });
            }
        }
    }

    let mut rm2_violations = Vec::new();
    let mut rm3_violations = Vec::new();
    for (k, a) in closure.iter().enumerate() {
        // rot^0 .. rot^{d+2}; the last is the componentwise suspension.
        let mut rots = vec![a.clone()];
        for _ in 0..(s.d + 2) {
            rots.push(rotate_angle(rots.last().unwrap(), &s.suspension)?);
        }
        for i in 0..=(s.d as usize + 1) {
            let target = &rots[i].objects()[1];
            let lhs = &(&psi_raw(r, &rots[i])? - &r.eval(target)?) + &psi_raw(r, &rots[i + 1])?;
            if !lhs.is_zero() {
                rm2_violations.push(ValueMismatch {
                    location: format!("closure[{k}], arrows {i} and {}", i + 1),
                    lhs,
                    rhs: Rat::zero(),
                });
            }
        }
        let suspended = psi_raw(r, &rots[s.d as usize + 2])?;
        if suspended != psis[k] {
            rm3_violations.push(ValueMismatch {
                location: format!("closure[{k}]"),
                lhs: suspended,
                rhs: psis[k].clone(),
            });
        }
    }

    let mut telescoping_violations = Vec::new();
    for (k, a) in closure.iter().enumerate() {
        let telescoped = psi_via_identities(r, a, s)?;
        if telescoped != psis[k] {
            telescoping_violations.push(ValueMismatch {
                location: format!("closure[{k}]"),
                lhs: psis[k].clone(),
                rhs: telescoped,
            });
        }
    }

    let pass = ro.pass
        && negative_psi.is_empty()
        && rm1_violations.is_empty()
        && rm2_violations.is_empty()
        && rm3_violations.is_empty()
        && telescoping_violations.is_empty();
    Ok(RmReport {
        closure_size: closure.len(),
        base_ro_pass: ro.pass,
        negative_psi,
        rm1_violations,
        rm2_violations,
        rm3_violations,
        telescoping_violations,
        pass,
    })
}
