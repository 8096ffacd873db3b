//! Computational engine for self-injective Nakayama algebras.
//!
//! The algebra is the path algebra of a linear or cyclic quiver with
//! vertices `1..=n` and arrows `v -> v-1` (cyclically `1 -> n`), modulo all
//! paths of length `ell`. Every indecomposable module is an interval
//! `M(i,t)`: composition factors `S_i, S_{i-1}, ..., S_{i-t+1}` from top to
//! socle. The projective at `v` is the longest interval with top `v`.
//!
//! On top of interval arithmetic the module provides hom bases between
//! projectives (paths), images of morphisms between projectives by exact
//! linear algebra, syzygies, the twisted periodicity permutation
//! (`Omega^{d+2}` on simples), and generated (d+2)-angles: each non-zero
//! module without projective summands yields an angle of projectives whose
//! marked arrow has prescribed image, built from a projective resolution.
//! Non-minimal resolutions (trivial summands spliced into adjacent stages)
//! yield the homotopy-equivalent variants used by the Schanuel-style
//! object-count check.

pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::span_rank;
use crate::rank_morphisms::MarkedAngle;
use crate::ratio::Rat;
use crate::skeleton::{AngleTemplate, IndecId, ObjectClass};

/// Shape of the underlying quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuiverShape {
    Cyclic,
    Linear,
}

/// `k`-linear Nakayama algebra: quiver on vertices `1..=n` with arrows
/// `v -> v-1`, truncated by paths of length `ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AlgebraWire", into = "AlgebraWire")]
pub struct NakayamaAlgebra {
    n: usize,
    ell: usize,
    shape: QuiverShape,
}

#[derive(Serialize, Deserialize)]
struct AlgebraWire {
    n: usize,
    ell: usize,
    shape: QuiverShape,
}

impl TryFrom<AlgebraWire> for NakayamaAlgebra {
    type Error = Error;
    fn try_from(w: AlgebraWire) -> Result<Self> {
        NakayamaAlgebra::new(w.n, w.ell, w.shape)
    }
}

impl From<NakayamaAlgebra> for AlgebraWire {
    fn from(a: NakayamaAlgebra) -> Self {
        AlgebraWire {
            n: a.n,
            ell: a.ell,
            shape: a.shape,
        }
    }
}

impl NakayamaAlgebra {
    pub fn new(n: usize, ell: usize, shape: QuiverShape) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid("algebra needs at least one vertex"));
        }
        if ell < 2 {
            return Err(Error::invalid("path truncation length ell must be at least 2"));
        }
        Ok(NakayamaAlgebra { n, ell, shape })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        crate::skeleton::parse_json(text, "algebra")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn shape(&self) -> QuiverShape {
        self.shape
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::invalid(format!(
                "vertex {v} out of range 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    /// Walks `k` arrows down from `v`; `None` when a linear quiver runs out.
    pub fn step_down(&self, v: usize, k: usize) -> Option<usize> {
        match self.shape {
            QuiverShape::Cyclic => {
                let n = self.n as i64;
                Some(((v as i64 - 1 - k as i64).rem_euclid(n) + 1) as usize)
            }
            QuiverShape::Linear => (v > k).then(|| v - k),
        }
    }

    /// Walks `k` steps against the arrows; `None` when a linear quiver runs out.
    pub fn step_up(&self, v: usize, k: usize) -> Option<usize> {
        match self.shape {
            QuiverShape::Cyclic => {
                let n = self.n as i64;
                Some(((v as i64 - 1 + k as i64).rem_euclid(n) + 1) as usize)
            }
            QuiverShape::Linear => (v + k <= self.n).then(|| v + k),
        }
    }

    /// Loewy length of the projective at `v`.
    pub fn proj_len(&self, v: usize) -> usize {
        match self.shape {
            QuiverShape::Cyclic => self.ell,
            QuiverShape::Linear => v.min(self.ell),
        }
    }

    pub fn projective(&self, v: usize) -> Interval {
        Interval {
            top: v,
            len: self.proj_len(v),
        }
    }

    pub fn check_interval(&self, iv: &Interval) -> Result<()> {
        self.check_vertex(iv.top)?;
        if iv.len < 1 || iv.len > self.proj_len(iv.top) {
            return Err(Error::invalid(format!(
                "interval [{}, {}] exceeds the projective at vertex {}",
                iv.top, iv.len, iv.top
            )));
        }
        Ok(())
    }

    pub fn is_projective(&self, iv: &Interval) -> bool {
        iv.len == self.proj_len(iv.top)
    }

    /// All valid intervals, ordered by (top, len).
    pub fn intervals(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        for top in 1..=self.n {
            for len in 1..=self.proj_len(top) {
                out.push(Interval { top, len });
            }
        }
        out
    }

    pub fn non_projective_intervals(&self) -> Vec<Interval> {
        self.intervals()
            .into_iter()
            .filter(|iv| !self.is_projective(iv))
            .collect()
    }
}

/// Label used for the projective at `v` in skeletons and angles.
pub fn proj_label(v: usize) -> IndecId {
    IndecId(format!("P{v}"))
}

/// Interval module `M(i,t)`: top `S_i`, then `S_{i-1}, ...` for `t` factors.
/// Wire format `[i, t]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Interval {
    pub top: usize,
    pub len: usize,
}

impl From<(usize, usize)> for Interval {
    fn from((top, len): (usize, usize)) -> Self {
        Interval { top, len }
    }
}

impl From<Interval> for (usize, usize) {
    fn from(iv: Interval) -> Self {
        (iv.top, iv.len)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.top, self.len)
    }
}

/// Finite-dimensional module: a multiset of intervals, kept sorted so that
/// equality is isomorphism. Wire format `[[i, t], ...]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Interval>", into = "Vec<Interval>")]
pub struct NakayamaModule {
    summands: Vec<Interval>,
}

impl From<Vec<Interval>> for NakayamaModule {
    fn from(v: Vec<Interval>) -> Self {
        NakayamaModule::from_intervals(v)
    }
}

impl From<NakayamaModule> for Vec<Interval> {
    fn from(m: NakayamaModule) -> Self {
        m.summands
    }
}

impl NakayamaModule {
    pub fn zero() -> Self {
        NakayamaModule { summands: Vec::new() }
    }

    pub fn from_intervals(mut summands: Vec<Interval>) -> Self {
        summands.sort();
        NakayamaModule { summands }
    }

    pub fn simple(v: usize) -> Self {
        NakayamaModule::from_intervals(vec![Interval { top: v, len: 1 }])
    }

    /// Parses and validates the wire format against an algebra.
    pub fn from_json(a: &NakayamaAlgebra, text: &str) -> Result<Self> {
        let m: NakayamaModule = crate::skeleton::parse_json(text, "module")?;
        m.validate(a)?;
        Ok(m)
    }

    pub fn validate(&self, a: &NakayamaAlgebra) -> Result<()> {
        self.summands.iter().try_for_each(|iv| a.check_interval(iv))
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> &[Interval] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(|iv| iv.len).sum()
    }

    pub fn sum(&self, other: &NakayamaModule) -> NakayamaModule {
        let mut all = self.summands.clone();
        all.extend_from_slice(&other.summands);
        NakayamaModule::from_intervals(all)
    }

    /// Splits off projective summands: `(non-projective part, projective tops)`.
    pub fn split_projective(&self, a: &NakayamaAlgebra) -> (NakayamaModule, Vec<usize>) {
        let mut rest = Vec::new();
        let mut proj = Vec::new();
        for iv in &self.summands {
            if a.is_projective(iv) {
                proj.push(iv.top);
            } else {
                rest.push(*iv);
            }
        }
        (NakayamaModule::from_intervals(rest), proj)
    }
}

impl fmt::Debug for NakayamaModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.debug_list().entries(self.summands.iter()).finish()
    }
}

/// Composition factor multiplicities, indexed by vertex (`counts[v-1]` is
/// the multiplicity of `S_v`).
pub fn composition_factors(a: &NakayamaAlgebra, m: &NakayamaModule) -> Result<Vec<u64>> {
    m.validate(a)?;
    let mut counts = vec![0u64; a.n()];
    for iv in m.summands() {
        for v in factor_sequence(a, iv) {
            counts[v - 1] += 1;
        }
    }
    Ok(counts)
}

/// Ordered factor list of one interval, top to socle.
pub fn factor_sequence(a: &NakayamaAlgebra, iv: &Interval) -> Vec<usize> {
    (0..iv.len)
        .map(|k| a.step_down(iv.top, k).expect("interval fits the quiver"))
        .collect()
}

/// Basis of `Hom(P(i), P(j))`: the lengths of paths from `j` down to `i`
/// that survive the truncation, ascending. A path of length `L` sends the
/// generator of `P(i)` to the depth-`L` layer of `P(j)`.
pub fn hom_basis(a: &NakayamaAlgebra, i: usize, j: usize) -> Result<Vec<usize>> {
    a.check_vertex(i)?;
    a.check_vertex(j)?;
    let mut lens = Vec::new();
    for len in 0..a.proj_len(j) {
        if a.step_down(j, len) == Some(i) {
            lens.push(len);
        }
    }
    Ok(lens)
}

/// Formal rational combination of paths, one summand per `(path_len, coeff)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathCombo {
    pub terms: Vec<PathTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathTerm {
    pub path_len: usize,
    pub coeff: Rat,
}

impl PathCombo {
    pub fn zero() -> Self {
        PathCombo { terms: Vec::new() }
    }

    pub fn single(path_len: usize) -> Self {
        PathCombo {
            terms: vec![PathTerm {
                path_len,
                coeff: Rat::one(),
            }],
        }
    }
}

/// Morphism between finite direct sums of projectives, as a matrix of path
/// combinations. `entries[r][c]` maps `P(cols[c])` into `P(rows[r])`.
///
/// Wire format: `{"rows": [j, ...], "cols": [i, ...], "entries": [[combo, ...], ...]}`
/// (row-major), where a combo is `[{"path_len": k, "coeff": "p/q"}, ...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMorphism {
    algebra: NakayamaAlgebra,
    rows: Vec<usize>,
    cols: Vec<usize>,
    entries: Vec<Vec<PathCombo>>,
}

#[derive(Serialize, Deserialize)]
struct ProjMorphismWire {
    rows: Vec<usize>,
    cols: Vec<usize>,
    entries: Vec<Vec<PathCombo>>,
}

impl Serialize for ProjMorphism {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ProjMorphismWire {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.clone(),
        }
        .serialize(serializer)
    }
}

impl ProjMorphism {
    pub fn new(
        algebra: NakayamaAlgebra,
        rows: Vec<usize>,
        cols: Vec<usize>,
        entries: Vec<Vec<PathCombo>>,
    ) -> Result<Self> {
        for &v in rows.iter().chain(cols.iter()) {
            algebra.check_vertex(v)?;
        }
        if entries.len() != rows.len() {
            return Err(Error::invalid(format!(
                "expected {} entry rows, found {}",
                rows.len(),
                entries.len()
            )));
        }
        for (r, row) in entries.iter().enumerate() {
            if row.len() != cols.len() {
                return Err(Error::invalid(format!(
                    "entry row {r} has {} columns, expected {}",
                    row.len(),
                    cols.len()
                )));
            }
            for (c, combo) in row.iter().enumerate() {
                let valid = hom_basis(&algebra, cols[c], rows[r])?;
                for term in &combo.terms {
                    if !valid.contains(&term.path_len) {
                        return Err(Error::invalid(format!(
                            "entry ({r},{c}): no path of length {} from vertex {} to vertex {}",
                            term.path_len, rows[r], cols[c]
                        )));
                    }
                }
            }
        }
        Ok(ProjMorphism {
            algebra,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_json(a: &NakayamaAlgebra, text: &str) -> Result<Self> {
        let w: ProjMorphismWire = crate::skeleton::parse_json(text, "morphism")?;
        ProjMorphism::new(*a, w.rows, w.cols, w.entries)
    }

    /// The identity on `⊕ P(tops[k])`.
    pub fn identity(algebra: NakayamaAlgebra, tops: &[usize]) -> Result<Self> {
        let k = tops.len();
        let entries = (0..k)
            .map(|r| {
                (0..k)
                    .map(|c| if r == c { PathCombo::single(0) } else { PathCombo::zero() })
                    .collect()
            })
            .collect();
        ProjMorphism::new(algebra, tops.to_vec(), tops.to_vec(), entries)
    }

    /// The zero morphism `⊕ P(cols) -> ⊕ P(rows)`.
    pub fn zero(algebra: NakayamaAlgebra, rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        let entries = vec![vec![PathCombo::zero(); cols.len()]; rows.len()];
        ProjMorphism::new(algebra, rows, cols, entries)
    }

    /// Single path `P(i) -> P(j)` of length `len`.
    pub fn single_path(algebra: NakayamaAlgebra, i: usize, j: usize, len: usize) -> Result<Self> {
        ProjMorphism::new(
            algebra,
            vec![j],
            vec![i],
            vec![vec![PathCombo::single(len)]],
        )
    }

    /// Block-diagonal sum of morphisms over the same algebra.
    pub fn block_diag(algebra: NakayamaAlgebra, blocks: &[ProjMorphism]) -> Result<Self> {
        let mut rows = Vec::new();
        let mut cols = Vec::new();
        for b in blocks {
            if b.algebra != algebra {
                return Err(Error::invalid("block over a different algebra"));
            }
            rows.extend_from_slice(&b.rows);
            cols.extend_from_slice(&b.cols);
        }
        let mut entries = vec![vec![PathCombo::zero(); cols.len()]; rows.len()];
        let mut row_off = 0;
        let mut col_off = 0;
        for b in blocks {
            for (r, row) in b.entries.iter().enumerate() {
                for (c, combo) in row.iter().enumerate() {
                    entries[row_off + r][col_off + c] = combo.clone();
                }
            }
            row_off += b.rows.len();
            col_off += b.cols.len();
        }
        ProjMorphism::new(algebra, rows, cols, entries)
    }

    pub fn algebra(&self) -> &NakayamaAlgebra {
        &self.algebra
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<PathCombo>] {
        &self.entries
    }

    pub fn source_module(&self) -> NakayamaModule {
        NakayamaModule::from_intervals(self.cols.iter().map(|&v| self.algebra.projective(v)).collect())
    }

    pub fn target_module(&self) -> NakayamaModule {
        NakayamaModule::from_intervals(self.rows.iter().map(|&v| self.algebra.projective(v)).collect())
    }
}

/// Flat basis of a direct sum of projectives: one basis element per
/// `(slot, layer)`, the layer-`k` element of `P(tops[slot])` sitting at
/// vertex `step_down(top, k)`.
struct Based {
    algebra: NakayamaAlgebra,
    tops: Vec<usize>,
    offsets: Vec<usize>,
    dim: usize,
}

impl Based {
    fn new(algebra: NakayamaAlgebra, tops: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(tops.len());
        let mut dim = 0;
        for &t in &tops {
            offsets.push(dim);
            dim += algebra.proj_len(t);
        }
        Based {
            algebra,
            tops,
            offsets,
            dim,
        }
    }

    fn layers(&self, slot: usize) -> usize {
        self.algebra.proj_len(self.tops[slot])
    }

    fn flat(&self, slot: usize, layer: usize) -> usize {
        self.offsets[slot] + layer
    }

    /// Vertex of each flat basis element.
    fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim);
        for (slot, &top) in self.tops.iter().enumerate() {
            for k in 0..self.layers(slot) {
                out.push(self.algebra.step_down(top, k).expect("layer in range"));
            }
        }
        out
    }

    /// Applies the radical operator (shift every layer down by one).
    fn radical_shift(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for slot in 0..self.tops.len() {
            for k in 0..self.layers(slot) - 1 {
                out[self.flat(slot, k + 1)] = v[self.flat(slot, k)].clone();
            }
        }
        out
    }
}

/// Identifies the interval decomposition of a submodule of `⊕ P(tops)`
/// given a spanning set, by comparing radical-layer dimensions per vertex.
fn identify_intervals(target: &Based, spanning: &[Vec<Rat>]) -> Result<NakayamaModule> {
    let a = &target.algebra;
    let n = a.n();
    let lmax = a.ell();
    let vertices = target.vertices();
    let coords_at: Vec<Vec<usize>> = (1..=n)
        .map(|v| {
            (0..target.dim)
                .filter(|&idx| vertices[idx] == v)
                .collect()
        })
        .collect();

    // b[k][v-1] = dim of the vertex-v component of rad^k W.
    let mut b = vec![vec![0usize; n]; lmax + 2];
    let mut current: Vec<Vec<Rat>> = spanning.to_vec();
    for layer_dims in b.iter_mut().take(lmax + 1) {
        for v in 1..=n {
            let projected: Vec<Vec<Rat>> = current
                .iter()
                .map(|w| coords_at[v - 1].iter().map(|&idx| w[idx].clone()).collect())
                .collect();
            layer_dims[v - 1] = span_rank(&projected, coords_at[v - 1].len());
        }
        current = current.iter().map(|w| target.radical_shift(w)).collect();
    }

    let c = |k: usize, v: usize| -> i64 { b[k][v - 1] as i64 - b[k + 1][v - 1] as i64 };
    let mut intervals = Vec::new();
    let mut total = 0usize;
    for top in 1..=n {
        for len in 1..=a.proj_len(top).min(lmax) {
            let at_last = a.step_down(top, len - 1);
            let deeper = a.step_down(top, len);
            let Some(v_last) = at_last else { continue };
            let mut count = c(len - 1, v_last);
            if len < lmax {
                if let Some(v_deep) = deeper {
                    count -= c(len, v_deep);
                }
            }
            if count < 0 {
                return Err(Error::invalid(
                    "layer profile is not a valid interval decomposition",
                ));
            }
            for _ in 0..count {
                intervals.push(Interval { top, len });
                total += len;
            }
        }
    }
    let span_dim = span_rank(spanning, target.dim);
    if total != span_dim {
        return Err(Error::invalid(format!(
            "interval identification lost dimensions: {total} != {span_dim}"
        )));
    }
    Ok(NakayamaModule::from_intervals(intervals))
}

/// Image of a morphism of projectives, as a module, by exact linear
/// algebra: the entry paths act on radical layers and the resulting span is
/// identified through its radical-layer dimension profile.
pub fn image_of(f: &ProjMorphism) -> Result<NakayamaModule> {
    let source = Based::new(f.algebra, f.cols.clone());
    let target = Based::new(f.algebra, f.rows.clone());
    let mut columns = Vec::with_capacity(source.dim);
    for (c, _) in f.cols.iter().enumerate() {
        for k in 0..source.layers(c) {
            let mut col = vec![Rat::zero(); target.dim];
            for (r, _) in f.rows.iter().enumerate() {
                for term in &f.entries[r][c].terms {
                    let depth = k + term.path_len;
                    if depth < target.layers(r) {
                        col[target.flat(r, depth)] += &term.coeff;
                    }
                }
            }
            columns.push(col);
        }
    }
    identify_intervals(&target, &columns)
}

/// Syzygy (kernel of the projective cover) in closed form.
///
/// Cyclic shape: `Omega M(i,t) = M(i-t, ell-t)` for non-projective
/// intervals; projectives have syzygy zero. Linear shape: only projective
/// summands are supported (their syzygy is zero); other inputs error.
pub fn syzygy(a: &NakayamaAlgebra, m: &NakayamaModule) -> Result<NakayamaModule> {
    m.validate(a)?;
    let mut out = Vec::new();
    for iv in m.summands() {
        if a.is_projective(iv) {
            continue;
        }
        match a.shape() {
            QuiverShape::Cyclic => {
                let top = a.step_down(iv.top, iv.len).expect("cyclic never runs out");
                out.push(Interval {
                    top,
                    len: a.ell() - iv.len,
                });
            }
            QuiverShape::Linear => {
                return Err(Error::UnsupportedSyzygy(format!(
                    "linear shape supports syzygies of projectives only, got {iv:?}"
                )));
            }
        }
    }
    Ok(NakayamaModule::from_intervals(out))
}

/// The permutation induced by `Omega^{d+2}` on simples, with its inverse as
/// the suspension on projective labels.
///
/// Only meaningful when `Omega^{d+2}` sends simples to simples; for a
/// self-injective cyclic algebra this forces `ell = 2` (one extra syzygy
/// after the even-power top shift changes interval length otherwise).
#[derive(Clone, Debug, Serialize)]
pub struct TwistData {
    pub algebra: NakayamaAlgebra,
    pub d: u32,
    /// `simple_perm[v-1] = w` means `Omega^{d+2}(S_v) = S_w`.
    pub simple_perm: Vec<usize>,
}

impl TwistData {
    pub fn simple_perm(&self, v: usize) -> usize {
        self.simple_perm[v - 1]
    }

    /// Suspension on projective labels: the inverse of `simple_perm`,
    /// since `Omega^{d+2}` realizes the inverse suspension.
    pub fn suspend_vertex(&self, v: usize) -> usize {
        self.simple_perm
            .iter()
            .position(|&w| w == v)
            .map(|idx| idx + 1)
            .expect("permutation is surjective")
    }

    /// Applies `simple_perm` to every interval top (the inverse-suspension
    /// twist on modules whose summands it preserves).
    pub fn twist_module(&self, m: &NakayamaModule) -> NakayamaModule {
        NakayamaModule::from_intervals(
            m.summands()
                .iter()
                .map(|iv| Interval {
                    top: self.simple_perm(iv.top),
                    len: iv.len,
                })
                .collect(),
        )
    }

    /// Inverse of [`TwistData::twist_module`] (the suspension on modules).
    pub fn untwist_module(&self, m: &NakayamaModule) -> NakayamaModule {
        NakayamaModule::from_intervals(
            m.summands()
                .iter()
                .map(|iv| Interval {
                    top: self.suspend_vertex(iv.top),
                    len: iv.len,
                })
                .collect(),
        )
    }

    /// Orbits of `simple_perm` on vertices, each sorted, ordered by minimum.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.simple_perm.len();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut cur = start;
            while !seen[cur - 1] {
                seen[cur - 1] = true;
                orbit.push(cur);
                cur = self.simple_perm(cur);
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }
}

/// Computes the twisted-periodicity permutation `Omega^{d+2}` on simples.
///
/// Requires odd `d` (the period `d+2` pairs with the correspondence
/// hypothesis), cyclic shape, and that each `Omega^{d+2}(S_v)` is again
/// simple; otherwise the periodicity is unsupported.
pub fn twist_data(a: &NakayamaAlgebra, d: u32) -> Result<TwistData> {
    if d % 2 == 0 {
        return Err(Error::EvenD(d));
    }
    if a.shape() == QuiverShape::Linear {
        return Err(Error::UnsupportedPeriodicity(
            "linear shape has no twisted periodicity (syzygies vanish)".into(),
        ));
    }
    let mut simple_perm = Vec::with_capacity(a.n());
    for v in 1..=a.n() {
        let mut m = NakayamaModule::simple(v);
        for _ in 0..(d + 2) {
            m = syzygy(a, &m)?;
        }
        match m.summands() {
            [iv] if iv.len == 1 => simple_perm.push(iv.top),
            _ => {
                return Err(Error::UnsupportedPeriodicity(format!(
                    "Omega^{}(S_{v}) = {m:?} is not simple (ell = {}); \
                     generated angles need ell = 2",
                    d + 2,
                    a.ell()
                )))
            }
        }
    }
    Ok(TwistData {
        algebra: *a,
        d,
        simple_perm,
    })
}

/// A (d+2)-angle of projectives generated from a module, together with the
/// arrows needed to inspect it.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratedAngle {
    /// The angle `(X_0, ..., X_{d+1})` with `X_0` the desuspended last
    /// resolution term; the wrap object (suspension of `X_0`) equals the
    /// degree-0 resolution term exactly.
    pub marked: MarkedAngle,
    /// Resolution terms `Q_0, ..., Q_{d+1}` as vertex lists (`Q_k` covers
    /// the k-th syzygy; trailing pads included).
    pub resolution: Vec<Vec<usize>>,
    /// The marked arrow `X_0 -> X_1` itself.
    pub marked_arrow: ProjMorphism,
    /// Image of the marked arrow: the inverse-suspension twist of the input.
    pub marked_image: NakayamaModule,
    /// The arrow `X_{d+1} -> wrap`, i.e. `Q_1 -> Q_0`.
    pub final_arrow: ProjMorphism,
    /// Image of `final_arrow`: the module this angle presents. Two generated
    /// angles are homotopy equivalent exactly when these agree.
    pub presented: NakayamaModule,
    /// The wrap arrow out of `Q_0` into the suspension of `Q_{d+1}`; its
    /// image recovers the input module.
    pub wrap_arrow: ProjMorphism,
    /// All consecutive resolution arrows `Q_{k+1} -> Q_k`, k descending
    /// (`boundaries[0]` is `Q_{d+1} -> Q_d`, the last is `Q_1 -> Q_0`).
    pub boundaries: Vec<ProjMorphism>,
}

impl GeneratedAngle {
    pub fn angle(&self) -> &AngleTemplate {
        self.marked.angle()
    }
}

/// Where a non-minimal variant splices in a trivial two-term complex: the
/// projective `P(vertex)` is added to resolution terms `stage+1` and `stage`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pad {
    /// 0-based resolution stage, `0..=d`.
    pub stage: usize,
    pub vertex: usize,
}

/// Slot bookkeeping for padded resolution terms.
#[derive(Clone, Copy, PartialEq, Eq)]
enum SlotOrigin {
    Base(usize),
    Pad(usize),
}

/// Generates the angle of a minimal projective resolution; see
/// [`generate_angle_padded`] for the non-minimal variants.
pub fn generate_angle(a: &NakayamaAlgebra, d: u32, m: &NakayamaModule) -> Result<GeneratedAngle> {
    generate_angle_padded(a, d, m, &[])
}

/// Generates a (d+2)-angle of projectives from a non-zero module without
/// projective summands.
///
/// A projective resolution `Q_{d+1} -> ... -> Q_0` of the module is built
/// (minimal, then padded with trivial complexes per `pads`); twisted
/// periodicity closes it into an angle: the kernel at the start is the
/// inverse suspension twist of the input, so `X_0` is the desuspension of
/// `Q_0` and the wrap object is `Q_0` itself. Pads at stage 0 change the
/// presented module (by the padded projective); pads at stages `1..=d`
/// give homotopy-equivalent variants presenting the same module.
pub fn generate_angle_padded(
    a: &NakayamaAlgebra,
    d: u32,
    m: &NakayamaModule,
    pads: &[Pad],
) -> Result<GeneratedAngle> {
    m.validate(a)?;
    if m.is_zero() {
        return Err(Error::invalid("cannot generate an angle from the zero module"));
    }
    let (_, proj_tops) = m.split_projective(a);
    if !proj_tops.is_empty() {
        return Err(Error::invalid(format!(
            "module has projective summands at vertices {proj_tops:?}; \
             strip them before generating an angle"
        )));
    }
    let twist = twist_data(a, d)?;
    for pad in pads {
        a.check_vertex(pad.vertex)?;
        if pad.stage > d as usize {
            return Err(Error::invalid(format!(
                "pad stage {} out of range 0..={d}",
                pad.stage
            )));
        }
    }

    let stages = d as usize + 2;
    // chain[k] = k-th syzygy of each summand, tracked per summand.
    let mut chain: Vec<Vec<Interval>> = vec![m.summands().to_vec()];
    for _ in 0..stages {
        let prev = chain.last().unwrap();
        let next = prev
            .iter()
            .map(|iv| {
                let s = syzygy(a, &NakayamaModule::from_intervals(vec![*iv]))?;
                match s.summands() {
                    [single] => Ok(*single),
                    _ => Err(Error::UnsupportedPeriodicity(
                        "resolution stopped: interval became projective".into(),
                    )),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        chain.push(next);
    }
    // Twisted periodicity must close the resolution on the nose.
    for (iv, end) in m.summands().iter().zip(chain[stages].iter()) {
        let expected = Interval {
            top: twist.simple_perm(iv.top),
            len: iv.len,
        };
        if *end != expected {
            return Err(Error::UnsupportedPeriodicity(format!(
                "Omega^{stages} sent {iv:?} to {end:?}, expected {expected:?}"
            )));
        }
    }

    // Resolution term slots: base summand covers, then pads touching stage k.
    let term_slots = |k: usize| -> Vec<(usize, SlotOrigin)> {
        let mut slots: Vec<(usize, SlotOrigin)> = chain[k]
            .iter()
            .enumerate()
            .map(|(j, iv)| (iv.top, SlotOrigin::Base(j)))
            .collect();
        for (p, pad) in pads.iter().enumerate() {
            if pad.stage == k || pad.stage + 1 == k {
                slots.push((pad.vertex, SlotOrigin::Pad(p)));
            }
        }
        slots
    };
    let terms: Vec<Vec<(usize, SlotOrigin)>> = (0..stages).map(term_slots).collect();
    let resolution: Vec<Vec<usize>> = terms
        .iter()
        .map(|t| t.iter().map(|(v, _)| *v).collect())
        .collect();

    // boundary k: Q_{k+1} -> Q_k. Base blocks use the path of length
    // `len(chain[k][j])`; a pad contributes the identity inside its own
    // two-term complex and zero elsewhere.
    let boundary = |k: usize| -> Result<ProjMorphism> {
        let rows = &terms[k];
        let cols = &terms[k + 1];
        let entries = rows
            .iter()
            .map(|&(_, rorig)| {
                cols.iter()
                    .map(|&(_, corig)| match (rorig, corig) {
                        (SlotOrigin::Base(rj), SlotOrigin::Base(cj)) if rj == cj => {
                            PathCombo::single(chain[k][rj].len)
                        }
                        (SlotOrigin::Pad(rp), SlotOrigin::Pad(cp))
                            if rp == cp && pads[rp].stage == k =>
                        {
                            PathCombo::single(0)
                        }
                        _ => PathCombo::zero(),
                    })
                    .collect()
            })
            .collect();
        ProjMorphism::new(
            *a,
            rows.iter().map(|(v, _)| *v).collect(),
            cols.iter().map(|(v, _)| *v).collect(),
            entries,
        )
    };
    // boundaries[i] = Q_{d+1-i} -> Q_{d-i}, matching angle arrow order.
    let boundaries = (0..stages - 1)
        .rev()
        .map(boundary)
        .collect::<Result<Vec<_>>>()?;
    let final_arrow = boundaries.last().expect("d >= 1 gives at least 2 terms").clone();

    // Wrap arrow Q_0 -> Sigma Q_{d+1}: per base summand M(i,t) the single
    // path of length ell - t into P(i + (ell - t)); pads map to zero.
    let wrap_rows: Vec<usize> = terms[stages - 1]
        .iter()
        .map(|&(v, _)| twist.suspend_vertex(v))
        .collect();
    let wrap_entries: Vec<Vec<PathCombo>> = terms[stages - 1]
        .iter()
        .map(|&(_, rorig)| {
            terms[0]
                .iter()
                .map(|&(_, corig)| match (rorig, corig) {
                    (SlotOrigin::Base(rj), SlotOrigin::Base(cj)) if rj == cj => {
                        PathCombo::single(a.ell() - chain[0][rj].len)
                    }
                    _ => PathCombo::zero(),
                })
                .collect()
        })
        .collect();
    let wrap_arrow = ProjMorphism::new(
        *a,
        wrap_rows,
        terms[0].iter().map(|(v, _)| *v).collect(),
        wrap_entries,
    )?;

    // Marked arrow X_0 -> X_1 = desuspension of the wrap arrow.
    let marked_rows: Vec<usize> = terms[stages - 1].iter().map(|(v, _)| *v).collect();
    let marked_cols: Vec<usize> = terms[0]
        .iter()
        .map(|&(v, _)| twist.simple_perm(v))
        .collect();
    let marked_entries: Vec<Vec<PathCombo>> = terms[stages - 1]
        .iter()
        .map(|&(_, rorig)| {
            terms[0]
                .iter()
                .map(|&(_, corig)| match (rorig, corig) {
                    (SlotOrigin::Base(rj), SlotOrigin::Base(cj)) if rj == cj => {
                        PathCombo::single(a.ell() - chain[0][rj].len)
                    }
                    _ => PathCombo::zero(),
                })
                .collect()
        })
        .collect();
    let marked_arrow = ProjMorphism::new(*a, marked_rows, marked_cols.clone(), marked_entries)?;

    // Angle objects: X_0 = desuspended Q_0, then Q_{d+1}, Q_d, ..., Q_1.
    let mut objects = Vec::with_capacity(stages);
    objects.push(ObjectClass::new(marked_cols.iter().map(|&v| proj_label(v)).collect()));
    for k in (1..stages).rev() {
        objects.push(ObjectClass::new(
            resolution[k].iter().map(|&v| proj_label(v)).collect(),
        ));
    }
    let marked = MarkedAngle(AngleTemplate::new(objects));

    let marked_image = image_of(&marked_arrow)?;
    let expected_marked = twist.twist_module(m);
    if marked_image != expected_marked {
        return Err(Error::invalid(format!(
            "marked-arrow image {marked_image:?} does not match the twist {expected_marked:?}"
        )));
    }
    let presented = image_of(&final_arrow)?;

    Ok(GeneratedAngle {
        marked,
        resolution,
        marked_arrow,
        marked_image,
        final_arrow,
        presented,
        wrap_arrow,
        boundaries,
    })
}

/// Outcome of the object-count comparison of two generated angles.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SchanuelOutcome {
    /// The presented modules differ, so no identity is claimed.
    NotHomotopyEquivalent {
        x_presented: NakayamaModule,
        y_presented: NakayamaModule,
    },
    /// Alternating object sums were compared.
    Compared {
        /// Even-position objects of `x` plus odd-position objects of `y`.
        lhs: Vec<usize>,
        /// Odd-position objects of `x` plus even-position objects of `y`.
        rhs: Vec<usize>,
        identity_holds: bool,
    },
}

/// For two generated angles presenting the same module, the direct sum of
/// even-position objects of one and odd-position objects of the other is
/// independent of which angle contributes which parity. Requires the same
/// algebra and the same `d`; angles presenting different modules are
/// reported as not homotopy equivalent and the identity is not evaluated.
pub fn schanuel_check(x: &GeneratedAngle, y: &GeneratedAngle) -> Result<SchanuelOutcome> {
    if x.final_arrow.algebra() != y.final_arrow.algebra() {
        return Err(Error::invalid("angles over different algebras"));
    }
    if x.angle().len() != y.angle().len() {
        return Err(Error::invalid("angles of different lengths"));
    }
    if x.presented != y.presented {
        return Ok(SchanuelOutcome::NotHomotopyEquivalent {
            x_presented: x.presented.clone(),
            y_presented: y.presented.clone(),
        });
    }
    let vertices_of = |obj: &ObjectClass| -> Vec<usize> {
        obj.summands()
            .iter()
            .map(|id| {
                id.0
                    .strip_prefix('P')
                    .and_then(|s| s.parse().ok())
                    .expect("generated angles use P-labels")
            })
            .collect()
    };
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (k, (xo, yo)) in x
        .angle()
        .objects()
        .iter()
        .zip(y.angle().objects())
        .enumerate()
    {
        if k % 2 == 0 {
            lhs.extend(vertices_of(xo));
            rhs.extend(vertices_of(yo));
        } else {
            lhs.extend(vertices_of(yo));
            rhs.extend(vertices_of(xo));
        }
    }
    lhs.sort_unstable();
    rhs.sort_unstable();
    let identity_holds = lhs == rhs;
    Ok(SchanuelOutcome::Compared {
        lhs,
        rhs,
        identity_holds,
    })
}

/// Values of an additive-style function on vertices, used by gallery
/// builders to attach reference ranks; re-exported for convenience.
pub fn proj_rank_values(values: &[(usize, Rat)]) -> BTreeMap<IndecId, Rat> {
    values
        .iter()
        .map(|(v, r)| (proj_label(*v), r.clone()))
        .collect()
}
