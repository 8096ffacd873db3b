//! Additive functions on the module category and the dictionary to rank
//! functions on the projective skeleton.
//!
//! An additive function assigns a rational to every simple and extends over
//! composition factors. For a self-injective cyclic Nakayama algebra with
//! odd `d`, suspension-invariant additive functions correspond to rank
//! functions on the (d+2)-angulated category of projectives:
//!
//! * `varphi(alpha)` values a morphism of projectives at the additive value
//!   of its image,
//! * `psi_mod` goes back: a module is valued at the morphism rank of its
//!   canonical presenting morphism.
//!
//! [`correspondence_suite`] verifies both round trips, additivity, and
//! integrality transport on a concrete [`EngineContext`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nakayama::{
    composition_factors, generate_angle, image_of, proj_label, twist_data, NakayamaAlgebra,
    NakayamaModule, ProjMorphism, QuiverShape, TwistData,
};
use crate::rank_morphisms::{psi_eval, ValueMismatch};
use crate::rank_objects::RankOnObjects;
use crate::ratio::Rat;
use crate::skeleton::{CategorySkeleton, Suspension};

/// Rational values on simples, extended additively over composition
/// factors. Wire format: `{"simple_values": {"v": "p/q"}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AdditiveWire", into = "AdditiveWire")]
pub struct AdditiveFn {
    values: BTreeMap<usize, Rat>,
}

#[derive(Serialize, Deserialize)]
struct AdditiveWire {
    simple_values: BTreeMap<String, Rat>,
}

impl TryFrom<AdditiveWire> for AdditiveFn {
    type Error = Error;
    fn try_from(w: AdditiveWire) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (k, v) in w.simple_values {
            let vertex: usize = k.parse().map_err(|_| {
                Error::invalid(format!("simple_values key '{k}' is not a vertex number"))
            })?;
            values.insert(vertex, v);
        }
        Ok(AdditiveFn { values })
    }
}

impl From<AdditiveFn> for AdditiveWire {
    fn from(a: AdditiveFn) -> Self {
        AdditiveWire {
            simple_values: a
                .values
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        }
    }
}

impl AdditiveFn {
    pub fn new(values: BTreeMap<usize, Rat>) -> Self {
        AdditiveFn { values }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        crate::skeleton::parse_json(text, "additive function")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("additive fn serializes")
    }

    pub fn value(&self, vertex: usize) -> Result<&Rat> {
        self.values
            .get(&vertex)
            .ok_or_else(|| Error::invalid(format!("no value for simple at vertex {vertex}")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &Rat)> {
        self.values.iter()
    }

    /// Checks that every vertex of the algebra has a value.
    pub fn validate_for(&self, a: &NakayamaAlgebra) -> Result<()> {
        for v in 1..=a.n() {
            self.value(v)?;
        }
        Ok(())
    }

    pub fn is_integral(&self) -> bool {
        self.values.values().all(Rat::is_integer)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.values().all(|v| !v.is_negative())
    }
}

/// Additive evaluation: sum of simple values over composition factors.
pub fn eval_additive(alpha: &AdditiveFn, a: &NakayamaAlgebra, m: &NakayamaModule) -> Result<Rat> {
    alpha.validate_for(a)?;
    let counts = composition_factors(a, m)?;
    let mut acc = Rat::zero();
    for (idx, &count) in counts.iter().enumerate() {
        if count > 0 {
            acc += &(&Rat::from_int(count as i64) * alpha.value(idx + 1)?);
        }
    }
    Ok(acc)
}

/// True when the additive function is constant on twist orbits, i.e.
/// invariant under the suspension.
pub fn check_sigma_invariant(alpha: &AdditiveFn, twist: &TwistData) -> Result<bool> {
    alpha.validate_for(&twist.algebra)?;
    for v in 1..=twist.algebra.n() {
        if alpha.value(v)? != alpha.value(twist.simple_perm(v))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The morphism rank induced by an additive function: the additive value of
/// the image, computed by exact linear algebra.
pub fn varphi_eval(alpha: &AdditiveFn, f: &ProjMorphism) -> Result<Rat> {
    let image = image_of(f)?;
    eval_additive(alpha, f.algebra(), &image)
}

/// Canonical presenting morphism of a module over a cyclic algebra: per
/// interval `M(i,t)`, the single path of length `ell - t` out of the
/// projective cover `P(i)` (length 0, the identity, for projectives).
pub fn canonical_presenting_morphism(
    a: &NakayamaAlgebra,
    m: &NakayamaModule,
) -> Result<ProjMorphism> {
    if a.shape() != QuiverShape::Cyclic {
        return Err(Error::invalid(
            "canonical presenting morphisms are built over the cyclic shape",
        ));
    }
    m.validate(a)?;
    let blocks = m
        .summands()
        .iter()
        .map(|iv| {
            let len = a.ell() - iv.len;
            let target = a.step_up(iv.top, len).expect("cyclic quiver");
            ProjMorphism::single_path(*a, iv.top, target, len)
        })
        .collect::<Result<Vec<_>>>()?;
    ProjMorphism::block_diag(*a, &blocks)
}

/// An evaluation procedure for ranks of morphisms between projectives.
pub trait MorphismRankEval {
    fn eval(&self, f: &ProjMorphism) -> Result<Rat>;
}

/// Morphism rank obtained from an additive function via [`varphi_eval`].
pub struct PhiProc<'a> {
    pub alpha: &'a AdditiveFn,
}

impl MorphismRankEval for PhiProc<'_> {
    fn eval(&self, f: &ProjMorphism) -> Result<Rat> {
        varphi_eval(self.alpha, f)
    }
}

/// Morphism rank obtained from an object rank function on the projective
/// skeleton: the value of `f` is the alternating half-sum over a generated
/// angle whose marked arrow has the same image as `f` (the value depends
/// only on the image), plus identity values for projective image summands.
pub struct ObjectRankProc<'a> {
    pub ctx: &'a EngineContext,
    pub rank: &'a RankOnObjects,
}

impl MorphismRankEval for ObjectRankProc<'_> {
    fn eval(&self, f: &ProjMorphism) -> Result<Rat> {
        let image = image_of(f)?;
        let (non_proj, proj_tops) = image.split_projective(&self.ctx.algebra);
        let mut acc = Rat::zero();
        for v in proj_tops {
            acc += self.rank.value(&proj_label(v))?;
        }
        if !non_proj.is_zero() {
            let preimage = self.ctx.twist.untwist_module(&non_proj);
            let g = generate_angle(&self.ctx.algebra, self.ctx.d, &preimage)?;
            acc += &psi_eval(self.rank, &g.marked)?;
        }
        Ok(acc)
    }
}

/// Value of a module under the module-side inverse dictionary: the morphism
/// rank of its canonical presenting morphism.
pub fn psi_mod_eval(
    rm: &dyn MorphismRankEval,
    a: &NakayamaAlgebra,
    m: &NakayamaModule,
) -> Result<Rat> {
    let f = canonical_presenting_morphism(a, m)?;
    rm.eval(&f)
}

/// One orbit of the twist permutation on vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SigmaOrbit {
    pub vertices: Vec<usize>,
}

impl SigmaOrbit {
    /// The additive function that is 1 on this orbit and 0 elsewhere.
    pub fn indicator(&self, a: &NakayamaAlgebra) -> AdditiveFn {
        let values = (1..=a.n())
            .map(|v| {
                let val = if self.vertices.contains(&v) {
                    Rat::one()
                } else {
                    Rat::zero()
                };
                (v, val)
            })
            .collect();
        AdditiveFn::new(values)
    }
}

/// One term of an orbit-indicator decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitTerm {
    pub orbit: SigmaOrbit,
    pub multiplicity: u64,
}

/// Decomposes a nonnegative integral invariant additive function as a sum
/// of orbit indicators. The decomposition reads off the (necessarily
/// constant) value on each orbit; zero-multiplicity orbits are omitted.
pub fn decompose_invariant(alpha: &AdditiveFn, twist: &TwistData) -> Result<Vec<OrbitTerm>> {
    let a = &twist.algebra;
    alpha.validate_for(a)?;
    if !alpha.is_nonnegative() {
        return Err(Error::invalid("additive function has negative values"));
    }
    if !alpha.is_integral() {
        return Err(Error::invalid("additive function is not integral"));
    }
    if !check_sigma_invariant(alpha, twist)? {
        return Err(Error::invalid(
            "additive function is not invariant under the twist",
        ));
    }
    let mut terms = Vec::new();
    for vertices in twist.orbits() {
        let value = alpha.value(vertices[0])?;
        let multiplicity = value
            .to_bigint()
            .and_then(|b| u64::try_from(b).ok())
            .ok_or_else(|| Error::invalid("orbit value out of range"))?;
        if multiplicity > 0 {
            terms.push(OrbitTerm {
                orbit: SigmaOrbit { vertices },
                multiplicity,
            });
        }
    }
    Ok(terms)
}

/// A cyclic Nakayama algebra together with its twist, plus the angulated
/// skeleton of its projectives with one generated angle per non-projective
/// indecomposable.
pub struct EngineContext {
    pub algebra: NakayamaAlgebra,
    pub d: u32,
    pub twist: TwistData,
    pub skeleton: CategorySkeleton,
}

impl EngineContext {
    pub fn new(algebra: NakayamaAlgebra, d: u32) -> Result<Self> {
        let twist = twist_data(&algebra, d)?;
        let indecs: Vec<_> = (1..=algebra.n()).map(proj_label).collect();
        let suspension = Suspension::new(
            (1..=algebra.n())
                .map(|v| (proj_label(v), proj_label(twist.suspend_vertex(v))))
                .collect(),
        );
        let mut angles = Vec::new();
        for iv in algebra.non_projective_intervals() {
            let m = NakayamaModule::from_intervals(vec![iv]);
            let g = generate_angle(&algebra, d, &m)?;
            angles.push(g.marked.0.clone());
        }
        Ok(EngineContext {
            algebra,
            d,
            twist,
            skeleton: CategorySkeleton {
                d,
                indecs,
                suspension,
                angles,
            },
        })
    }

    /// The object rank function induced by an additive function:
    /// `r(P(v)) = alpha(P(v) as a module)`.
    pub fn induced_rank(&self, alpha: &AdditiveFn) -> Result<RankOnObjects> {
        let mut values = BTreeMap::new();
        for v in 1..=self.algebra.n() {
            let p = NakayamaModule::from_intervals(vec![self.algebra.projective(v)]);
            values.insert(proj_label(v), eval_additive(alpha, &self.algebra, &p)?);
        }
        RankOnObjects::new(values)
    }

    /// The additive function induced by an object rank function, with
    /// `alpha(S_v)` the half-sum over the generated angle of `S_v`'s
    /// suspension preimage; the inverse of [`EngineContext::induced_rank`].
    pub fn induced_additive(&self, rank: &RankOnObjects) -> Result<AdditiveFn> {
        let proc = ObjectRankProc { ctx: self, rank };
        let mut values = BTreeMap::new();
        for v in 1..=self.algebra.n() {
            values.insert(v, psi_mod_eval(&proc, &self.algebra, &NakayamaModule::simple(v))?);
        }
        Ok(AdditiveFn::new(values))
    }

    /// Deterministic sample of morphisms: all single surviving paths, all
    /// single-projective identities, and one two-block diagonal.
    pub fn sample_morphisms(&self) -> Result<Vec<ProjMorphism>> {
        let a = &self.algebra;
        let mut out = Vec::new();
        for i in 1..=a.n() {
            for j in 1..=a.n() {
                for len in crate::nakayama::hom_basis(a, i, j)? {
                    out.push(ProjMorphism::single_path(*a, i, j, len)?);
                }
            }
        }
        if out.len() >= 2 {
            let pair = ProjMorphism::block_diag(*a, &[out[0].clone(), out[1].clone()])?;
            out.push(pair);
        }
        out.push(ProjMorphism::zero(*a, vec![1], vec![1])?);
        Ok(out)
    }
}

/// Input to [`correspondence_suite`]: either side of the dictionary.
pub enum CorrespondenceInput {
    Additive(AdditiveFn),
    Rank(RankOnObjects),
}

/// Report of the dictionary checks; empty `mismatches` means pass.
#[derive(Debug, Serialize)]
pub struct CorrespondenceReport {
    pub checks_run: usize,
    pub mismatches: Vec<ValueMismatch>,
    pub pass: bool,
}

/// Verifies the dictionary on one input over a concrete engine context.
///
/// For an invariant additive function `alpha`: the induced rank is valued
/// back at `alpha` on every simple through both evaluation procedures (via
/// images and via generated-angle half-sums), additivity across block sums
/// holds on sampled morphisms, and integrality transports. For a rank
/// function: the induced additive function pushes forward to the same
/// morphism values on sampled morphisms and recovers the rank on every
/// projective.
pub fn correspondence_suite(
    input: &CorrespondenceInput,
    ctx: &EngineContext,
) -> Result<CorrespondenceReport> {
    let mut mismatches = Vec::new();
    let mut checks = 0usize;
    let a = &ctx.algebra;

    match input {
        CorrespondenceInput::Additive(alpha) => {
            alpha.validate_for(a)?;
            if !check_sigma_invariant(alpha, &ctx.twist)? {
                return Err(Error::invalid(
                    "correspondence needs an invariant additive function",
                ));
            }
            let rank = ctx.induced_rank(alpha)?;
            let phi_proc = PhiProc { alpha };
            let rank_proc = ObjectRankProc { ctx, rank: &rank };
            for v in 1..=a.n() {
                let s = NakayamaModule::simple(v);
                let expected = alpha.value(v)?.clone();
                let via_image = psi_mod_eval(&phi_proc, a, &s)?;
                checks += 1;
                if via_image != expected {
                    mismatches.push(ValueMismatch {
                        location: format!("psi(phi(alpha)) at S_{v} via images"),
                        lhs: via_image,
                        rhs: expected.clone(),
                    });
                }
                let via_angle = psi_mod_eval(&rank_proc, a, &s)?;
                checks += 1;
                if via_angle != expected {
                    mismatches.push(ValueMismatch {
                        location: format!("psi(phi(alpha)) at S_{v} via half-sums"),
                        lhs: via_angle,
                        rhs: expected,
                    });
                }
            }
            let samples = ctx.sample_morphisms()?;
            for (i, f) in samples.iter().enumerate() {
                for (j, g) in samples.iter().enumerate() {
                    let sum = ProjMorphism::block_diag(*a, &[f.clone(), g.clone()])?;
                    let lhs = varphi_eval(alpha, &sum)?;
                    let rhs = &varphi_eval(alpha, f)? + &varphi_eval(alpha, g)?;
                    checks += 1;
                    if lhs != rhs {
                        mismatches.push(ValueMismatch {
                            location: format!("additivity of varphi on samples {i}+{j}"),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
            // Integrality transport: integral alpha gives integral ranks
            // and integral half-sum values on every sampled morphism.
            if alpha.is_integral() {
                for (i, f) in ctx.sample_morphisms()?.iter().enumerate() {
                    let value = rank_proc.eval(f)?;
                    checks += 1;
                    if !value.is_integer() {
                        mismatches.push(ValueMismatch {
                            location: format!("integrality of half-sum on sample {i}"),
                            lhs: value,
                            rhs: Rat::zero(),
                        });
                    }
                }
            }
        }
        CorrespondenceInput::Rank(rank) => {
            let alpha = ctx.induced_additive(rank)?;
            for v in 1..=a.n() {
                let p = NakayamaModule::from_intervals(vec![a.projective(v)]);
                let lhs = eval_additive(&alpha, a, &p)?;
                let rhs = rank.value(&proj_label(v))?.clone();
                checks += 1;
                if lhs != rhs {
                    mismatches.push(ValueMismatch {
                        location: format!("phi(psi(rank)) at P{v}"),
                        lhs,
                        rhs,
                    });
                }
            }
            let rank_proc = ObjectRankProc { ctx, rank };
            for (i, f) in ctx.sample_morphisms()?.iter().enumerate() {
                let lhs = varphi_eval(&alpha, f)?;
                let rhs = rank_proc.eval(f)?;
                checks += 1;
                if lhs != rhs {
                    mismatches.push(ValueMismatch {
                        location: format!("phi(psi(rank)) on sample morphism {i}"),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }

    let pass = mismatches.is_empty();
    Ok(CorrespondenceReport {
        checks_run: checks,
        mismatches,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nakayama::Interval;

    fn algebra(n: usize, ell: usize) -> NakayamaAlgebra {
        NakayamaAlgebra::new(n, ell, QuiverShape::Cyclic).unwrap()
    }

    fn alpha_of(values: &[(usize, i64)]) -> AdditiveFn {
        AdditiveFn::new(
            values
                .iter()
                .map(|(v, x)| (*v, Rat::from_int(*x)))
                .collect(),
        )
    }

    #[test]
    fn additive_eval_sums_factors() {
        let a = algebra(3, 2);
        let alpha = alpha_of(&[(1, 1), (2, 10), (3, 100)]);
        // P(2) has factors S_2, S_1.
        let p2 = NakayamaModule::from_intervals(vec![a.projective(2)]);
        assert_eq!(eval_additive(&alpha, &a, &p2).unwrap(), Rat::from_int(11));
    }

    #[test]
    fn composition_length_is_all_ones() {
        // The all-ones additive function values every module at its length.
        let a = algebra(3, 2);
        let alpha = alpha_of(&[(1, 1), (2, 1), (3, 1)]);
        for iv in a.intervals() {
            let m = NakayamaModule::from_intervals(vec![iv]);
            assert_eq!(
                eval_additive(&alpha, &a, &m).unwrap(),
                Rat::from_int(m.dim() as i64)
            );
        }
    }

    #[test]
    fn invariance_check() {
        let a = algebra(3, 2);
        let twist = twist_data(&a, 3).unwrap();
        // Single orbit for n = 3, d = 3: only constants are invariant.
        assert!(check_sigma_invariant(&alpha_of(&[(1, 2), (2, 2), (3, 2)]), &twist).unwrap());
        assert!(!check_sigma_invariant(&alpha_of(&[(1, 2), (2, 1), (3, 2)]), &twist).unwrap());
    }

    #[test]
    fn varphi_values_image() {
        let a = algebra(3, 2);
        let alpha = alpha_of(&[(1, 5), (2, 7), (3, 9)]);
        // Image of the single arrow P(1) -> P(2) is S_1.
        let f = ProjMorphism::single_path(a, 1, 2, 1).unwrap();
        assert_eq!(varphi_eval(&alpha, &f).unwrap(), Rat::from_int(5));
        // Identity on P(2) has image P(2): 7 + 5.
        let id2 = ProjMorphism::identity(a, &[2]).unwrap();
        assert_eq!(varphi_eval(&alpha, &id2).unwrap(), Rat::from_int(12));
    }

    #[test]
    fn canonical_presenting_morphism_presents() {
        let a = algebra(4, 2);
        for iv in a.intervals() {
            let m = NakayamaModule::from_intervals(vec![iv]);
            let f = canonical_presenting_morphism(&a, &m).unwrap();
            assert_eq!(image_of(&f).unwrap(), m, "{iv:?}");
        }
    }

    #[test]
    fn presenting_morphism_of_sum_is_blockwise() {
        let a = algebra(3, 2);
        let m = NakayamaModule::simple(1)
            .sum(&NakayamaModule::from_intervals(vec![a.projective(2)]));
        let f = canonical_presenting_morphism(&a, &m).unwrap();
        assert_eq!(image_of(&f).unwrap(), m);
    }

    #[test]
    fn two_presenting_morphisms_same_value() {
        // A second presenting morphism for S_1 with a padded source column
        // has the same image, hence the same varphi value.
        let a = algebra(3, 2);
        let alpha = alpha_of(&[(1, 4), (2, 6), (3, 8)]);
        let canonical = canonical_presenting_morphism(&a, &NakayamaModule::simple(1)).unwrap();
        let padded = ProjMorphism::new(
            a,
            vec![2],
            vec![1, 3],
            vec![vec![
                crate::nakayama::PathCombo::single(1),
                crate::nakayama::PathCombo::zero(),
            ]],
        )
        .unwrap();
        assert_eq!(
            varphi_eval(&alpha, &canonical).unwrap(),
            varphi_eval(&alpha, &padded).unwrap()
        );
    }

    #[test]
    fn decompose_reads_orbit_values() {
        // n = 3, d = 1: the twist is the identity, three orbits.
        let a = algebra(3, 2);
        let twist = twist_data(&a, 1).unwrap();
        assert_eq!(twist.orbits().len(), 3);
        let alpha = alpha_of(&[(1, 3), (2, 0), (3, 5)]);
        let terms = decompose_invariant(&alpha, &twist).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].orbit.vertices, vec![1]);
        assert_eq!(terms[0].multiplicity, 3);
        assert_eq!(terms[1].orbit.vertices, vec![3]);
        assert_eq!(terms[1].multiplicity, 5);
    }

    #[test]
    fn decompose_rejects_bad_inputs() {
        let a = algebra(3, 2);
        let twist = twist_data(&a, 3).unwrap();
        // Single orbit: non-constant is non-invariant.
        assert!(decompose_invariant(&alpha_of(&[(1, 1), (2, 2), (3, 1)]), &twist).is_err());
        let half = AdditiveFn::new(
            [(1, Rat::new(1, 2)), (2, Rat::new(1, 2)), (3, Rat::new(1, 2))]
                .into_iter()
                .collect(),
        );
        assert!(decompose_invariant(&half, &twist).is_err());
    }

    #[test]
    fn engine_context_skeleton_is_valid() {
        let ctx = EngineContext::new(algebra(3, 2), 3).unwrap();
        let report = crate::skeleton::validate_skeleton(&ctx.skeleton);
        assert!(report.is_valid(), "{:?}", report.problems);
        assert_eq!(ctx.skeleton.angles.len(), 3);
    }

    #[test]
    fn suite_round_trips_invariant_additive() {
        let ctx = EngineContext::new(algebra(3, 2), 3).unwrap();
        let alpha = alpha_of(&[(1, 2), (2, 2), (3, 2)]);
        let report =
            correspondence_suite(&CorrespondenceInput::Additive(alpha), &ctx).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn suite_round_trips_rank() {
        let ctx = EngineContext::new(algebra(3, 2), 3).unwrap();
        let alpha = alpha_of(&[(1, 1), (2, 1), (3, 1)]);
        let rank = ctx.induced_rank(&alpha).unwrap();
        let report = correspondence_suite(&CorrespondenceInput::Rank(rank), &ctx).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn psi_of_length_rank_on_simples_is_one() {
        // The composition-length rank (all projectives at ell = 2) pushes
        // back to the all-ones additive function.
        let ctx = EngineContext::new(algebra(3, 2), 3).unwrap();
        let alpha = alpha_of(&[(1, 1), (2, 1), (3, 1)]);
        let rank = ctx.induced_rank(&alpha).unwrap();
        let back = ctx.induced_additive(&rank).unwrap();
        assert_eq!(back, alpha);
    }

    #[test]
    fn wire_format_round_trip() {
        let alpha = AdditiveFn::new(
            [(1, Rat::new(1, 2)), (2, Rat::from_int(3))].into_iter().collect(),
        );
        let text = alpha.to_json();
        assert!(text.contains("simple_values"));
        let back = AdditiveFn::from_json(&text).unwrap();
        assert_eq!(back, alpha);
    }

    #[test]
    fn interval_sum_example() {
        // Extension additivity: M(2,2) has the same factors as S_2 + S_1.
        let a = algebra(3, 2);
        let alpha = alpha_of(&[(1, 3), (2, 4), (3, 5)]);
        let b = NakayamaModule::from_intervals(vec![Interval { top: 2, len: 2 }]);
        let split = NakayamaModule::simple(2).sum(&NakayamaModule::simple(1));
        assert_eq!(
            eval_additive(&alpha, &a, &b).unwrap(),
            eval_additive(&alpha, &a, &split).unwrap()
        );
    }
}
