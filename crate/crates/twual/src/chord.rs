//! Chord diagrams: linearized encodings of embedded bouquets.
//!
//! A diagram on `k` chords is a sequence over `2k` spots, stored in one of
//! three forms:
//!
//! * offset:    `|D(i)| = j` means the chord at spot `i` has its other end
//!   `j` spots further around the circle; cyclic shifts keep values intact.
//! * end-spot:  `|D(i)|` is the partner spot itself (a fixed-point-free
//!   involution); convenient for splicing.
//! * end-label: `|D(i)|` is the chord's label in `1..=k`; this is exactly a
//!   bouquet's vertex sequence.
//!
//! In every form a negative entry marks a twisted chord, on both ends.
//! Spots are 1-based in stored entries and 0-based in the code.

use std::fmt;

use thiserror::Error;

use crate::graph::LabeledRibbonGraph;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagramForm {
    Offset,
    EndSpot,
    EndLabel,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordDiagram {
    form: DiagramForm,
    entries: Vec<i32>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("diagram length must be even, got {0}")]
    OddLength(usize),
    #[error("entry at spot {0} is invalid for the declared form")]
    BadEntry(usize),
    #[error("spots {0} and {1} disagree about their pairing")]
    Inconsistent(usize, usize),
    #[error("signs disagree across a chord's two ends (label or spot {0})")]
    SignMismatch(usize),
    #[error("graph is not a bouquet")]
    NotABouquet,
}

/// An element of the symmetry group of the `2k`-spot circle: a rotation,
/// optionally preceded by the reflection `i -> -i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dihedral {
    size: usize,
    rot: usize,
    refl: bool,
}

impl Dihedral {
    pub fn identity(size: usize) -> Self {
        Dihedral { size, rot: 0, refl: false }
    }

    pub fn new(size: usize, rot: usize, refl: bool) -> Self {
        Dihedral { size, rot: rot % size, refl }
    }

    /// All `2 * size` elements, rotations first.
    pub fn all(size: usize) -> Vec<Dihedral> {
        let mut out = Vec::with_capacity(2 * size);
        for refl in [false, true] {
            for rot in 0..size {
                out.push(Dihedral { size, rot, refl });
            }
        }
        out
    }

    /// Image of 0-based spot `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        if self.refl {
            (self.rot + self.size - i) % self.size
        } else {
            (i + self.rot) % self.size
        }
    }

    /// Function composition: `self` after `other`.
    pub fn compose(&self, other: &Dihedral) -> Dihedral {
        assert_eq!(self.size, other.size);
        let rot = if self.refl {
            (self.rot + self.size - other.rot) % self.size
        } else {
            (self.rot + other.rot) % self.size
        };
        Dihedral { size: self.size, rot, refl: self.refl ^ other.refl }
    }

    pub fn inverse(&self) -> Dihedral {
        if self.refl {
            *self
        } else {
            Dihedral { size: self.size, rot: (self.size - self.rot) % self.size, refl: false }
        }
    }

    pub fn is_reflection(&self) -> bool {
        self.refl
    }
}

impl fmt::Display for Dihedral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.refl {
            write!(f, "r{}*flip", self.rot)
        } else {
            write!(f, "r{}", self.rot)
        }
    }
}

impl fmt::Debug for Dihedral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dihedral({self}, size {})", self.size)
    }
}

impl ChordDiagram {
    pub fn new(form: DiagramForm, entries: Vec<i32>) -> Result<Self, DiagramError> {
        let d = ChordDiagram { form, entries };
        d.validate()?;
        Ok(d)
    }

    pub fn form(&self) -> DiagramForm {
        self.form
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn chords(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn spots(&self) -> usize {
        self.entries.len()
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let m = self.entries.len();
        if m % 2 != 0 {
            return Err(DiagramError::OddLength(m));
        }
        if m == 0 {
            return Ok(());
        }
        match self.form {
            DiagramForm::Offset => {
                for (i, &t) in self.entries.iter().enumerate() {
                    let mag = t.unsigned_abs() as usize;
                    if mag == 0 || mag >= m {
                        return Err(DiagramError::BadEntry(i));
                    }
                    let j = (i + mag) % m;
                    let back = self.entries[j];
                    if back.unsigned_abs() as usize != m - mag {
                        return Err(DiagramError::Inconsistent(i, j));
                    }
                    if (back < 0) != (t < 0) {
                        return Err(DiagramError::SignMismatch(i));
                    }
                }
            }
            DiagramForm::EndSpot => {
                for (i, &t) in self.entries.iter().enumerate() {
                    let p = t.unsigned_abs() as usize;
                    if p == 0 || p > m || p == i + 1 {
                        return Err(DiagramError::BadEntry(i));
                    }
                    let back = self.entries[p - 1];
                    if back.unsigned_abs() as usize != i + 1 {
                        return Err(DiagramError::Inconsistent(i, p - 1));
                    }
                    if (back < 0) != (t < 0) {
                        return Err(DiagramError::SignMismatch(i));
                    }
                }
            }
            DiagramForm::EndLabel => {
                let k = m / 2;
                let mut seen: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
                for (i, &t) in self.entries.iter().enumerate() {
                    let l = t.unsigned_abs() as usize;
                    if l == 0 || l > k {
                        return Err(DiagramError::BadEntry(i));
                    }
                    seen[l].push(i);
                }
                for l in 1..=k {
                    if seen[l].len() != 2 {
                        return Err(DiagramError::BadEntry(seen[l].first().copied().unwrap_or(0)));
                    }
                    if (self.entries[seen[l][0]] < 0) != (self.entries[seen[l][1]] < 0) {
                        return Err(DiagramError::SignMismatch(l));
                    }
                }
            }
        }
        Ok(())
    }

    /// 0-based partner spot of 0-based spot `i`.
    pub fn partner(&self, i: usize) -> usize {
        let m = self.entries.len();
        let t = self.entries[i];
        match self.form {
            DiagramForm::Offset => (i + t.unsigned_abs() as usize) % m,
            DiagramForm::EndSpot => t.unsigned_abs() as usize - 1,
            DiagramForm::EndLabel => {
                for (j, &u) in self.entries.iter().enumerate() {
                    if j != i && u.unsigned_abs() == t.unsigned_abs() {
                        return j;
                    }
                }
                unreachable!("validated diagram has a partner for every spot")
            }
        }
    }

    pub fn convert(&self, target: DiagramForm) -> ChordDiagram {
        if self.form == target {
            return self.clone();
        }
        let m = self.entries.len();
        let entries = match target {
            DiagramForm::EndSpot => {
                let mut out = vec![0i32; m];
                for i in 0..m {
                    let p = self.partner(i) as i32 + 1;
                    out[i] = if self.entries[i] < 0 { -p } else { p };
                }
                out
            }
            DiagramForm::Offset => {
                let mut out = vec![0i32; m];
                for i in 0..m {
                    let p = self.partner(i);
                    let mag = ((p + m - i) % m) as i32;
                    out[i] = if self.entries[i] < 0 { -mag } else { mag };
                }
                out
            }
            DiagramForm::EndLabel => {
                // Labels are assigned in order of first appearance.
                let mut out = vec![0i32; m];
                let mut next = 1i32;
                for i in 0..m {
                    if out[i] != 0 {
                        continue;
                    }
                    let p = self.partner(i);
                    let lab = if self.entries[i] < 0 { -next } else { next };
                    out[i] = lab;
                    out[p] = lab;
                    next += 1;
                }
                out
            }
        };
        ChordDiagram { form: target, entries }
    }

    /// The right action of the circle symmetries on offset-form diagrams:
    /// rotations compose spots, reflections additionally complement each
    /// offset (`mag -> 2k - mag`) with the sign kept.
    pub fn dihedral_act(&self, sigma: &Dihedral) -> ChordDiagram {
        assert_eq!(self.form, DiagramForm::Offset, "dihedral action is on offset form");
        let m = self.entries.len();
        let entries = (0..m)
            .map(|i| {
                let t = self.entries[sigma.apply(i)];
                if sigma.refl {
                    let mag = m as i32 - t.abs();
                    if t < 0 {
                        -mag
                    } else {
                        mag
                    }
                } else {
                    t
                }
            })
            .collect();
        ChordDiagram { form: DiagramForm::Offset, entries }
    }

    /// Per-spot key realizing "magnitude first, untwisted before twisted".
    fn offset_key(&self) -> Vec<i32> {
        debug_assert_eq!(self.form, DiagramForm::Offset);
        self.entries
            .iter()
            .map(|&t| 2 * t.abs() + i32::from(t < 0))
            .collect()
    }

    /// Lexicographically least offset form over the whole symmetry orbit,
    /// with an element realizing it. Two bouquets are isomorphic as
    /// unlabeled ribbon graphs exactly when these agree.
    pub fn canonical_form(&self) -> (ChordDiagram, Dihedral) {
        let offset = self.convert(DiagramForm::Offset);
        let m = offset.entries.len();
        if m == 0 {
            return (offset, Dihedral::identity(1));
        }
        let mut best = offset.clone();
        let mut best_key = offset.offset_key();
        let mut best_sigma = Dihedral::identity(m);
        for sigma in Dihedral::all(m) {
            let image = offset.dihedral_act(&sigma);
            let key = image.offset_key();
            if key < best_key {
                best_key = key;
                best = image;
                best_sigma = sigma;
            }
        }
        (best, best_sigma)
    }

    /// Pack an unsigned offset form into an integer key (k <= 8).
    pub(crate) fn pack_unsigned(&self) -> u64 {
        debug_assert_eq!(self.form, DiagramForm::Offset);
        debug_assert!(self.entries.len() <= 16);
        let mut key = 0u64;
        for &t in &self.entries {
            debug_assert!(t > 0 && t < 16);
            key = key << 4 | t as u64;
        }
        key
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChordDiagram({:?} {})", self.form, self)
    }
}

/// The vertex sequence of a bouquet, read as an end-label diagram.
pub fn bouquet_to_diagram(g: &LabeledRibbonGraph) -> Result<ChordDiagram, DiagramError> {
    if !g.is_bouquet() || g.edge_count() == 0 {
        return Err(DiagramError::NotABouquet);
    }
    ChordDiagram::new(DiagramForm::EndLabel, g.vertices()[0].clone())
}

/// The bouquet whose single vertex is the diagram's end-label sequence.
pub fn bouquet_from_diagram(d: &ChordDiagram) -> LabeledRibbonGraph {
    let labels = d.convert(DiagramForm::EndLabel);
    LabeledRibbonGraph::new(vec![labels.entries]).expect("valid diagram yields a valid bouquet")
}

/// Given end-label diagrams of two bouquets and `sigma` matching their
/// offset forms (`other . sigma == base`), recover the label bijection
/// `base -> other` defined by matching spot `i` of `base` with spot
/// `sigma(i)` of `other`. Returns `None` when the pairing is inconsistent.
pub(crate) fn recover_label_map(
    base_hat: &ChordDiagram,
    other_hat: &ChordDiagram,
    sigma: &Dihedral,
) -> Option<Permutation> {
    let m = base_hat.spots();
    let k = m / 2;
    let mut map: Vec<Option<usize>> = vec![None; k];
    for i in 0..m {
        let from = base_hat.entries[i];
        let to = other_hat.entries[sigma.apply(i)];
        if (from < 0) != (to < 0) {
            return None;
        }
        let (fe, te) = (from.unsigned_abs() as usize - 1, to.unsigned_abs() as usize - 1);
        match map[fe] {
            None => map[fe] = Some(te),
            Some(prev) if prev != te => return None,
            _ => {}
        }
    }
    let raw: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
    let mut seen = vec![false; k];
    for &j in &raw {
        if seen[j] {
            return None;
        }
        seen[j] = true;
    }
    Some(Permutation::from_map(raw))
}

/// Dihedral element realizing an isomorphism between two bouquets, if any:
/// the returned `sigma` satisfies `offset(b) . sigma == offset(a)`.
pub fn bouquet_dihedral_witness(
    a: &LabeledRibbonGraph,
    b: &LabeledRibbonGraph,
) -> Option<Dihedral> {
    let da = bouquet_to_diagram(a).ok()?;
    let db = bouquet_to_diagram(b).ok()?;
    if da.spots() != db.spots() {
        return None;
    }
    let (ca, sa) = da.canonical_form();
    let (cb, sb) = db.canonical_form();
    if ca != cb {
        return None;
    }
    Some(sb.compose(&sa.inverse()))
}
