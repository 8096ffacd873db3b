//! The cone of rank functions attached to a skeleton.
//!
//! A rank function is a point of the polyhedral cone cut out by suspension
//! invariance, nonnegativity, and a nonnegative alternating sum over every
//! angle in the closure of the generators.  This module assembles that facet
//! description, computes the extreme rays by an exact double-description
//! pass over the suspension-orbit coordinates, enumerates Hilbert bases of
//! the integral points (for two different lattices), and decomposes a given
//! integral rank function over a Hilbert basis.
//!
//! All arithmetic is exact.  Two sizes are guarded by environment
//! variables: `ANGULATED_CONE_DIM_BOUND` caps the number of suspension
//! orbits the double description runs over (default 24), and
//! `ANGULATED_CONE_ENUM_BOUND` caps the number of lattice points a
//! Hilbert-basis enumeration may visit as well as the number of nodes a
//! decomposition search may expand (default 2000000).

use std::collections::{BTreeMap, BTreeSet};
use std::env;

use itertools::iproduct;
use num::{BigInt, Integer, One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rank_objects::RankOnObjects;
use crate::ratio::Rat;
use crate::skeleton::{angle_closure, validate_skeleton, CategorySkeleton, IndecId};

/// Caps the orbit count the double description runs over.
pub const DIM_BOUND_ENV: &str = "ANGULATED_CONE_DIM_BOUND";
/// Caps box enumerations and decomposition search nodes.
pub const ENUM_BOUND_ENV: &str = "ANGULATED_CONE_ENUM_BOUND";

const DEFAULT_DIM_BOUND: usize = 24;
const DEFAULT_ENUM_BOUND: u64 = 2_000_000;

fn dim_bound() -> usize {
    env::var(DIM_BOUND_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_DIM_BOUND)
}

fn enum_bound() -> u64 {
    env::var(ENUM_BOUND_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_BOUND)
}

/// Facet description of the rank cone of a skeleton.
///
/// Coordinates are the indecomposable labels in sorted order.  Membership
/// requires a constant value on every suspension orbit, nonnegative
/// coordinates, and a nonnegative alternating sum against every defect row.
#[derive(Debug, Clone)]
pub struct RankCone {
    labels: Vec<IndecId>,
    orbits: Vec<Vec<usize>>,
    defect_rows: Vec<Vec<Rat>>,
}

/// Builds the facet description from the angle closure of `s`.
///
/// `depth` bounds the closure as in [`angle_closure`]; `None` uses the
/// order of the suspension.  Zero defect rows and exact duplicates are
/// dropped.
pub fn build_cone(s: &CategorySkeleton, depth: Option<u32>) -> Result<RankCone> {
    let report = validate_skeleton(s);
    if let Some(problem) = report.problems.first() {
        return Err(Error::InvalidSkeleton(format!(
            "{}: {}",
            problem.location, problem.message
        )));
    }
    let mut labels = s.indecs.clone();
    labels.sort();
    let index: BTreeMap<&IndecId, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut orbits: Vec<Vec<usize>> = s
        .suspension
        .orbits()
        .iter()
        .map(|orbit| {
            let mut coords: Vec<usize> = orbit.iter().map(|l| index[l]).collect();
            coords.sort_unstable();
            coords
        })
        .collect();
    orbits.sort();

    let mut defect_rows = Vec::new();
    let mut seen = BTreeSet::new();
    for angle in angle_closure(s, depth)? {
        let mut row = vec![Rat::zero(); labels.len()];
        for (i, object) in angle.objects().iter().enumerate() {
            let sign = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
            for summand in object.summands() {
                row[index[summand]] += &sign;
            }
        }
        if row.iter().all(Rat::is_zero) {
            continue;
        }
        if seen.insert(row.clone()) {
            defect_rows.push(row);
        }
    }
    Ok(RankCone {
        labels,
        orbits,
        defect_rows,
    })
}

impl RankCone {
    pub fn labels(&self) -> &[IndecId] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Suspension orbits as sorted coordinate index sets.
    pub fn orbit_coords(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Alternating-sum rows over the closure angles, in full coordinates.
    pub fn defect_rows(&self) -> &[Vec<Rat>] {
        &self.defect_rows
    }

    /// Rows whose common kernel is suspension invariance: one difference
    /// per non-leading member of each orbit.
    pub fn equalities(&self) -> Vec<Vec<Rat>> {
        let mut rows = Vec::new();
        for orbit in &self.orbits {
            for &other in &orbit[1..] {
                let mut row = vec![Rat::zero(); self.dim()];
                row[orbit[0]] = Rat::one();
                row[other] = -Rat::one();
                rows.push(row);
            }
        }
        rows
    }

    /// Nonnegativity rows followed by the defect rows.
    pub fn inequalities(&self) -> Vec<Vec<Rat>> {
        let mut rows: Vec<Vec<Rat>> = (0..self.dim())
            .map(|i| {
                let mut row = vec![Rat::zero(); self.dim()];
                row[i] = Rat::one();
                row
            })
            .collect();
        rows.extend(self.defect_rows.iter().cloned());
        rows
    }

    /// Orders the values of `r` by this cone's coordinate order.
    pub fn vector_of(&self, r: &RankOnObjects) -> Result<Vec<Rat>> {
        self.labels.iter().map(|l| r.value(l).cloned()).collect()
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.membership_failure(x).is_none()
    }

    fn membership_failure(&self, x: &[Rat]) -> Option<String> {
        if x.len() != self.dim() {
            return Some(format!(
                "vector has {} coordinates, cone has {}",
                x.len(),
                self.dim()
            ));
        }
        for orbit in &self.orbits {
            if orbit[1..].iter().any(|&i| x[i] != x[orbit[0]]) {
                return Some(format!(
                    "values differ across the suspension orbit of '{}'",
                    self.labels[orbit[0]].0
                ));
            }
        }
        if let Some(i) = x.iter().position(Rat::is_negative) {
            return Some(format!("negative value at '{}'", self.labels[i].0));
        }
        for row in &self.defect_rows {
            let value = dot_rat(row, x);
            if value.is_negative() {
                return Some(format!(
                    "alternating sum {value} over a closure angle is negative"
                ));
            }
        }
        None
    }
}

/// The cone in suspension-orbit coordinates, where every invariant vector
/// lives.  Rows are the defect rows with coefficients summed per orbit.
struct ReducedCone<'a> {
    cone: &'a RankCone,
    rows: Vec<Vec<BigInt>>,
}

fn reduce_cone(cone: &RankCone) -> ReducedCone<'_> {
    let mut rows = Vec::new();
    let mut seen = BTreeSet::new();
    for row in &cone.defect_rows {
        let reduced: Vec<BigInt> = cone
            .orbits
            .iter()
            .map(|orbit| {
                orbit
                    .iter()
                    .map(|&i| row[i].to_bigint().expect("defect coefficients are integers"))
                    .fold(BigInt::zero(), |acc, v| acc + v)
            })
            .collect();
        if reduced.iter().all(Zero::is_zero) {
            continue;
        }
        if seen.insert(reduced.clone()) {
            rows.push(reduced);
        }
    }
    ReducedCone { cone, rows }
}

impl ReducedCone<'_> {
    fn m(&self) -> usize {
        self.cone.orbits.len()
    }

    fn in_cone(&self, y: &[BigInt]) -> bool {
        y.iter().all(|v| !v.is_negative())
            && self.rows.iter().all(|row| !dot_big(row, y).is_negative())
    }

    fn in_lattice(&self, y: &[BigInt], lattice: IntegerLattice) -> bool {
        match lattice {
            IntegerLattice::All => true,
            IntegerLattice::EvenDefects => {
                self.rows.iter().all(|row| dot_big(row, y).is_even())
            }
        }
    }

    fn expand(&self, y: &[BigInt]) -> Vec<Rat> {
        let mut full = vec![Rat::zero(); self.cone.dim()];
        for (orbit, v) in self.cone.orbits.iter().zip(y) {
            for &i in orbit {
                full[i] = Rat::from_bigint(v.clone());
            }
        }
        full
    }
}

fn dot_rat(row: &[Rat], x: &[Rat]) -> Rat {
    row.iter().zip(x).map(|(a, b)| a * b).sum()
}

fn dot_big(row: &[BigInt], y: &[BigInt]) -> BigInt {
    row.iter()
        .zip(y)
        .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
}

/// Divides out the content; `None` for the zero vector.
fn primitive(v: Vec<BigInt>) -> Option<Vec<BigInt>> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return None;
    }
    Some(v.into_iter().map(|x| x / &g).collect())
}

fn tight_set(ray: &[BigInt], processed: &[Vec<BigInt>]) -> BTreeSet<usize> {
    let m = ray.len();
    let mut tight: BTreeSet<usize> = (0..m).filter(|&i| ray[i].is_zero()).collect();
    for (k, row) in processed.iter().enumerate() {
        if dot_big(row, ray).is_zero() {
            tight.insert(m + k);
        }
    }
    tight
}

/// Incremental double description over the orthant.
///
/// Starts from the unit rays of the nonnegative orthant and inserts one
/// inequality row at a time; new rays come from adjacent pairs straddling
/// the row, combined so the row vanishes on them.  Adjacency is the
/// combinatorial test: two rays are adjacent when no third ray is tight on
/// every constraint both are tight on.
fn double_description(m: usize, rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut rays: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            let mut e = vec![BigInt::zero(); m];
            e[i] = BigInt::one();
            e
        })
        .collect();
    let mut processed: Vec<Vec<BigInt>> = Vec::new();
    for row in rows {
        if !rays.is_empty() {
            let dots: Vec<BigInt> = rays.iter().map(|r| dot_big(row, r)).collect();
            let plus: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_positive()).collect();
            let minus: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_negative()).collect();
            if !minus.is_empty() {
                let tight: Vec<BTreeSet<usize>> =
                    rays.iter().map(|r| tight_set(r, &processed)).collect();
                let mut next: Vec<Vec<BigInt>> = (0..rays.len())
                    .filter(|&i| !dots[i].is_negative())
                    .map(|i| rays[i].clone())
                    .collect();
                let mut seen: BTreeSet<Vec<BigInt>> = next.iter().cloned().collect();
                for (&p, &q) in iproduct!(&plus, &minus) {
                    let common: BTreeSet<usize> =
                        tight[p].intersection(&tight[q]).copied().collect();
                    let blocked = (0..rays.len())
                        .any(|k| k != p && k != q && common.is_subset(&tight[k]));
                    if blocked {
                        continue;
                    }
                    let combined: Vec<BigInt> = rays[p]
                        .iter()
                        .zip(&rays[q])
                        .map(|(rp, rq)| &dots[p] * rq - &dots[q] * rp)
                        .collect();
                    if let Some(ray) = primitive(combined) {
                        if seen.insert(ray.clone()) {
                            next.push(ray);
                        }
                    }
                }
                rays = next;
            }
        }
        processed.push(row.clone());
    }
    rays.sort();
    rays
}

fn reduced_rays(red: &ReducedCone) -> Result<Vec<Vec<BigInt>>> {
    let m = red.m();
    let bound = dim_bound();
    if m > bound {
        return Err(Error::DimensionBound {
            dim: m,
            bound,
            env: DIM_BOUND_ENV,
        });
    }
    Ok(double_description(m, &red.rows))
}

/// Extreme rays of the cone as primitive integer vectors in full
/// coordinates, sorted lexicographically.  Empty when the cone is the
/// origin alone.
pub fn extreme_rays(cone: &RankCone) -> Result<Vec<Vec<Rat>>> {
    let red = reduce_cone(cone);
    let mut rays: Vec<Vec<Rat>> = reduced_rays(&red)?.iter().map(|y| red.expand(y)).collect();
    rays.sort();
    Ok(rays)
}

/// Which integral points of the cone form the monoid under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegerLattice {
    /// Every vector with integer coordinates.
    All,
    /// Integer vectors whose alternating sum over every closure angle is
    /// even; values of the object assignment on honest morphism data land
    /// here when the angle dimension is odd.
    EvenDefects,
}

/// One irreducible element together with the size of the exhaustive split
/// search that certified irreducibility.
#[derive(Debug, Clone, Serialize)]
pub struct HilbertElement {
    pub vector: Vec<Rat>,
    pub splits_examined: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertBasisResult {
    pub lattice: IntegerLattice,
    pub elements: Vec<HilbertElement>,
    /// Componentwise bound of the enumeration box, in full coordinates.
    pub box_bound: Vec<Rat>,
    pub points_enumerated: u64,
}

/// Visits every integer point of `[0, bound]` componentwise.
fn enumerate_box(bound: &[BigInt], visit: &mut dyn FnMut(&[BigInt])) {
    let mut current = vec![BigInt::zero(); bound.len()];
    loop {
        visit(&current);
        let mut i = 0;
        loop {
            if i == bound.len() {
                return;
            }
            if current[i] < bound[i] {
                current[i] += BigInt::one();
                break;
            }
            current[i] = BigInt::zero();
            i += 1;
        }
    }
}

type ReducedBasis = Vec<(Vec<BigInt>, u64)>;

/// Hilbert basis in orbit coordinates: irreducible elements with their
/// split counts, the box bound, and the number of points visited.
///
/// Every irreducible element of the monoid lies inside the box spanned by
/// the lattice-scaled extreme rays, so enumerating that box and keeping the
/// elements no sum of two members reaches is exhaustive.
fn reduced_hilbert(
    red: &ReducedCone,
    lattice: IntegerLattice,
) -> Result<(ReducedBasis, Vec<BigInt>, u64)> {
    let rays = reduced_rays(red)?;
    let mut bound = vec![BigInt::zero(); red.m()];
    for ray in &rays {
        let scale = match lattice {
            IntegerLattice::All => BigInt::one(),
            IntegerLattice::EvenDefects => {
                if red.rows.iter().all(|row| dot_big(row, ray).is_even()) {
                    BigInt::one()
                } else {
                    BigInt::from(2)
                }
            }
        };
        for (b, r) in bound.iter_mut().zip(ray) {
            *b += &scale * r;
        }
    }

    let limit = enum_bound();
    let mut count = BigInt::one();
    for b in &bound {
        count *= b + BigInt::one();
        if count > BigInt::from(limit) {
            return Err(Error::EnumerationBound(format!(
                "the Hilbert basis box holds more than {limit} integer points \
                 (set {ENUM_BOUND_ENV} to raise the limit)"
            )));
        }
    }

    let mut members: Vec<Vec<BigInt>> = Vec::new();
    let mut visited: u64 = 0;
    enumerate_box(&bound, &mut |y| {
        visited += 1;
        if y.iter().all(Zero::is_zero) {
            return;
        }
        if red.in_cone(y) && red.in_lattice(y, lattice) {
            members.push(y.to_vec());
        }
    });
    members.sort_by_cached_key(|y| (y.iter().fold(BigInt::zero(), |s, v| s + v), y.clone()));
    let member_set: BTreeSet<&Vec<BigInt>> = members.iter().collect();

    let mut basis = Vec::new();
    for h in &members {
        let sum_h: BigInt = h.iter().fold(BigInt::zero(), |s, v| s + v);
        let mut splits: u64 = 0;
        let mut reducible = false;
        for u in &members {
            let sum_u: BigInt = u.iter().fold(BigInt::zero(), |s, v| s + v);
            if &sum_u * 2 > sum_h {
                break;
            }
            if u.iter().zip(h).any(|(a, b)| a > b) {
                continue;
            }
            splits += 1;
            let rest: Vec<BigInt> = h.iter().zip(u).map(|(a, b)| a - b).collect();
            if member_set.contains(&rest) {
                reducible = true;
                break;
            }
        }
        if !reducible {
            basis.push((h.clone(), splits));
        }
    }
    Ok((basis, bound, visited))
}

/// Hilbert basis of the integral points of the cone in the given lattice.
pub fn hilbert_basis(cone: &RankCone, lattice: IntegerLattice) -> Result<HilbertBasisResult> {
    let red = reduce_cone(cone);
    let (basis, bound, points_enumerated) = reduced_hilbert(&red, lattice)?;
    let elements = basis
        .into_iter()
        .map(|(vector, splits_examined)| HilbertElement {
            vector: red.expand(&vector),
            splits_examined,
        })
        .collect();
    Ok(HilbertBasisResult {
        lattice,
        elements,
        box_bound: red.expand(&bound),
        points_enumerated,
    })
}

/// One Hilbert-basis element with its multiplicity in a decomposition.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionTerm {
    pub vector: Vec<Rat>,
    pub multiplicity: u64,
}

/// Result of decomposing a rank function over the Hilbert basis.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DecompositionOutcome {
    NotInCone { reason: String },
    NotInLattice { reason: String },
    Unique { terms: Vec<DecompositionTerm> },
    Multiple { decompositions: Vec<Vec<DecompositionTerm>> },
}

/// Depth-first search for every multiset of basis elements summing to
/// `rem`.  Defect rows only decrease along a branch, so a negative row
/// prunes the whole multiplicity range.
fn search_decompositions(
    basis: &[Vec<BigInt>],
    red: &ReducedCone,
    rem: Vec<BigInt>,
    idx: usize,
    current: &mut Vec<(usize, u64)>,
    found: &mut Vec<Vec<(usize, u64)>>,
    nodes: &mut u64,
    limit: u64,
) -> Result<()> {
    *nodes += 1;
    if *nodes > limit {
        return Err(Error::EnumerationBound(format!(
            "decomposition search expanded more than {limit} nodes \
             (set {ENUM_BOUND_ENV} to raise the limit)"
        )));
    }
    if idx == basis.len() {
        if rem.iter().all(Zero::is_zero) {
            found.push(current.clone());
        }
        return Ok(());
    }
    let mut k: u64 = 0;
    let mut left = rem;
    loop {
        if k > 0 {
            current.push((idx, k));
        }
        search_decompositions(basis, red, left.clone(), idx + 1, current, found, nodes, limit)?;
        if k > 0 {
            current.pop();
        }
        let next: Vec<BigInt> = left.iter().zip(&basis[idx]).map(|(a, b)| a - b).collect();
        if !red.in_cone(&next) {
            return Ok(());
        }
        left = next;
        k += 1;
    }
}

/// Writes `r` as a nonnegative integer combination of Hilbert-basis
/// elements, reporting whether the combination is unique.
///
/// Membership failures are outcomes, not errors: a vector outside the cone
/// or outside the lattice cannot be decomposed and says why.
pub fn decompose_integral(
    r: &RankOnObjects,
    cone: &RankCone,
    lattice: IntegerLattice,
) -> Result<DecompositionOutcome> {
    let x = cone.vector_of(r)?;
    if let Some(reason) = cone.membership_failure(&x) {
        return Ok(DecompositionOutcome::NotInCone { reason });
    }
    let red = reduce_cone(cone);
    let mut y = Vec::with_capacity(red.m());
    for orbit in &cone.orbits {
        let value = &x[orbit[0]];
        match value.to_bigint() {
            Some(b) => y.push(b),
            None => {
                return Ok(DecompositionOutcome::NotInLattice {
                    reason: format!(
                        "value {value} at '{}' is not an integer",
                        cone.labels[orbit[0]].0
                    ),
                })
            }
        }
    }
    if !red.in_lattice(&y, lattice) {
        return Ok(DecompositionOutcome::NotInLattice {
            reason: "an alternating sum over a closure angle is odd".into(),
        });
    }

    let (basis, _, _) = reduced_hilbert(&red, lattice)?;
    let vectors: Vec<Vec<BigInt>> = basis.into_iter().map(|(v, _)| v).collect();
    let mut current = Vec::new();
    let mut found = Vec::new();
    let mut nodes = 0;
    search_decompositions(
        &vectors,
        &red,
        y,
        0,
        &mut current,
        &mut found,
        &mut nodes,
        enum_bound(),
    )?;

    let to_terms = |profile: &Vec<(usize, u64)>| -> Vec<DecompositionTerm> {
        profile
            .iter()
            .map(|&(idx, multiplicity)| DecompositionTerm {
                vector: red.expand(&vectors[idx]),
                multiplicity,
            })
            .collect()
    };
    match found.len() {
        0 => Err(Error::invalid(
            "no decomposition over the Hilbert basis; this contradicts completeness",
        )),
        1 => Ok(DecompositionOutcome::Unique {
            terms: to_terms(&found[0]),
        }),
        _ => Ok(DecompositionOutcome::Multiple {
            decompositions: found.iter().map(to_terms).collect(),
        }),
    }
}
