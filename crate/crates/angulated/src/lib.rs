//! Rank functions and additive invariants over (d+2)-angulated skeletons.
//!
//! The crate works with a combinatorial encoding of a (d+2)-angulated
//! category: finitely many isomorphism classes of indecomposables, a
//! suspension permutation, and a set of generating (d+2)-angles recorded as
//! object sequences. On top of that encoding it provides
//!
//! * rank functions on objects and their axiom checks ([`rank_objects`]),
//! * the object/morphism correspondence for odd `d` via the alternating
//!   half-sum ([`rank_morphisms`]),
//! * a computational engine for self-injective Nakayama algebras: interval
//!   modules, hom bases, images, syzygies, twisted periodicity, and generated
//!   angles ([`nakayama`]),
//! * additive functions on the module side and the dictionary between the
//!   two pictures ([`additive`]),
//! * exact rational cone tools: extreme rays, Hilbert bases, and integral
//!   decompositions ([`cone`]),
//! * ready-made example skeletons ([`gallery`]).
//!
//! All arithmetic is exact: values are arbitrary-precision rationals
//! serialized as `"p/q"` strings. Nothing in the crate uses floating point.

pub mod additive;
pub mod cone;
pub mod error;
pub mod gallery;
mod linalg;
pub mod nakayama;
pub mod rank_morphisms;
pub mod rank_objects;
pub mod ratio;
pub mod skeleton;

pub use error::{Error, ErrorKind, Result};
pub use ratio::Rat;
pub use skeleton::{
    angle_closure, direct_sum_angles, rotate_angle, trivial_angle, validate_skeleton,
    AngleTemplate, CategorySkeleton, IndecId, ObjectClass, Suspension, ValidationReport,
};

pub use rank_objects::{
    angle_defect, check_rank_on_objects, is_integral, AngleDefect, RankOnObjects, RoReport,
};

pub use rank_morphisms::{
    phi_eval, psi_eval, rm_axiom_suite, roundtrip_check, MarkedAngle, RankOnMorphismsView,
    RmReport, RoundtripReport,
};

pub use nakayama::{
    generate_angle, generate_angle_padded, hom_basis, image_of, proj_label, schanuel_check,
    syzygy, twist_data, GeneratedAngle, Interval, NakayamaAlgebra, NakayamaModule, Pad,
    PathCombo, ProjMorphism, QuiverShape, SchanuelOutcome, TwistData,
};

pub use additive::{
    check_sigma_invariant, correspondence_suite, decompose_invariant, eval_additive,
    psi_mod_eval, varphi_eval, AdditiveFn, CorrespondenceInput, CorrespondenceReport,
    EngineContext, MorphismRankEval, ObjectRankProc, OrbitTerm, PhiProc, SigmaOrbit,
};

pub use cone::{
    build_cone, decompose_integral, extreme_rays, hilbert_basis, DecompositionOutcome,
    DecompositionTerm, HilbertBasisResult, HilbertElement, IntegerLattice, RankCone,
};

pub use gallery::{
    build_ar_line, build_cluster_cycle, build_d3_custom, build_nakayama_proj, builtin_entries,
    find_entry, GalleryEntry, ReferenceRank,
};
