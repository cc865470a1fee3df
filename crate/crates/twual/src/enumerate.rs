//! Generation of all chord diagrams of a given size.
//!
//! Linear diagrams are built by inserting one chord at a time: the new
//! chord's late end sits at the last spot, and its early end can take any of
//! the `2j - 1` positions among the spots of a diagram on `j - 1` chords.
//! Each diagram therefore corresponds to a unique digit string in the odd
//! factorial mixed-radix system, which doubles as a resumable cursor. The
//! unsigned count is `(2k-1)!!`; with twist signs it is `2^k (2k-1)!!`.

use std::collections::BTreeSet;

use crate::chord::{ChordDiagram, DiagramForm};

/// Resumable generator of all linear diagrams on `k` chords, in end-spot
/// form. With `signed`, every chord additionally ranges over both twist
/// signs (labels in first-appearance order carry the sign bits).
#[derive(Clone, Debug)]
pub struct DiagramStream {
    k: usize,
    signed: bool,
    /// Insertion position per chord; digit `j` has radix `2j + 1`.
    digits: Vec<usize>,
    /// Sign pattern, one bit per chord (low bit = chord 1).
    sign_bits: u64,
    done: bool,
}

impl DiagramStream {
    pub fn new(k: usize, signed: bool) -> Self {
        DiagramStream { k, signed, digits: vec![0; k], sign_bits: 0, done: false }
    }

    /// Cursor for the next diagram to be yielded; feed back into
    /// [`DiagramStream::resume`] to continue a run.
    pub fn cursor(&self) -> (Vec<usize>, u64, bool) {
        (self.digits.clone(), self.sign_bits, self.done)
    }

    pub fn resume(k: usize, signed: bool, cursor: (Vec<usize>, u64, bool)) -> Self {
        DiagramStream { k, signed, digits: cursor.0, sign_bits: cursor.1, done: cursor.2 }
    }

    fn build(&self) -> ChordDiagram {
        // Grow the partner table by one chord per digit.
        let mut partner: Vec<usize> = Vec::with_capacity(2 * self.k);
        for (j, &p) in self.digits.iter().enumerate() {
            let old = 2 * j;
            let mut next = vec![0usize; old + 2];
            for (i, &q) in partner.iter().enumerate() {
                let ni = if i >= p { i + 1 } else { i };
                let nq = if q >= p { q + 1 } else { q };
                next[ni] = nq;
            }
            next[p] = old + 1;
            next[old + 1] = p;
            partner = next;
        }
        let mut entries: Vec<i32> = partner.iter().map(|&q| (q + 1) as i32).collect();
        if self.signed && self.sign_bits != 0 {
            // Assign sign bits by first-appearance chord labels.
            let mut label = 0usize;
            let mut seen = vec![false; 2 * self.k];
            for i in 0..2 * self.k {
                if seen[i] {
                    continue;
                }
                let q = partner[i];
                seen[i] = true;
                seen[q] = true;
                if self.sign_bits >> label & 1 == 1 {
                    entries[i] = -entries[i];
                    entries[q] = -entries[q];
                }
                label += 1;
            }
        }
        ChordDiagram::new(DiagramForm::EndSpot, entries).expect("constructed diagram is valid")
    }

    fn advance(&mut self) {
        if self.signed {
            self.sign_bits += 1;
            if self.k < 64 && self.sign_bits < 1u64 << self.k {
                return;
            }
            self.sign_bits = 0;
        }
        for j in 0..self.k {
            self.digits[j] += 1;
            if self.digits[j] < 2 * j + 1 {
                return;
            }
            self.digits[j] = 0;
        }
        self.done = true;
    }
}

impl Iterator for DiagramStream {
    type Item = ChordDiagram;

    fn next(&mut self) -> Option<ChordDiagram> {
        if self.done {
            return None;
        }
        let d = self.build();
        self.advance();
        Some(d)
    }
}

/// All linear diagrams on `k` chords in end-spot form.
pub fn linear_diagrams(k: usize, signed: bool) -> DiagramStream {
    DiagramStream::new(k, signed)
}

/// One canonical offset-form representative per equivalence class of
/// unsigned cyclic diagrams (equivalently, per orientable bouquet on `k`
/// edges up to isomorphism), sorted.
pub fn oebs_up_to_iso(k: usize) -> Vec<ChordDiagram> {
    let mut set = BTreeSet::new();
    for d in linear_diagrams(k, false) {
        set.insert(d.canonical_form().0);
    }
    set.into_iter().collect()
}

pub fn double_factorial(k: usize) -> u64 {
    (0..k).map(|j| (2 * j + 1) as u64).product()
}
