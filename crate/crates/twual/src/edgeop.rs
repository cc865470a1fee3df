//! The six operations that can act on a single edge of a ribbon graph.
//!
//! The twist `t` and partial dual `d` are involutions whose composite `td`
//! has order three, so together they generate a copy of the symmetric group
//! on three letters. Elements are stored as one of six canonical words; in a
//! product word the rightmost operation is the one applied to the graph
//! first, so `td` means "dual, then twist".

use std::fmt;
use std::sync::LazyLock;

use thiserror::Error;

/// One of the six edge operations, named by its canonical word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum EdgeOp {
    /// The identity, written `1`.
    Identity = 0,
    /// The twist (partial Petrial), written `t`.
    Twist = 1,
    /// The partial dual, written `d`.
    Dual = 2,
    /// `td`: dual then twist; one of the two order-3 operations.
    TwistDual = 3,
    /// `dt`: twist then dual; the inverse of `td`.
    DualTwist = 4,
    /// `tdt`: the order-2 "opposite" operation (Wilson dual on a full edge set).
    Wilson = 5,
}

pub const ALL_OPS: [EdgeOp; 6] = [
    EdgeOp::Identity,
    EdgeOp::Twist,
    EdgeOp::Dual,
    EdgeOp::TwistDual,
    EdgeOp::DualTwist,
    EdgeOp::Wilson,
];

/// Canonical reduced words, indexed by discriminant. `""` is the identity.
const WORDS: [&str; 6] = ["", "t", "d", "td", "dt", "tdt"];

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown edge operation `{0}`")]
pub struct OpParseError(pub String);

/// Reduce a word over {t, d} to one of the six canonical forms using the
/// relations tt = dd = 1 and dtd = tdt (the latter is (td)^3 = 1 rewritten
/// for involutions).
fn reduce_word(word: &[u8]) -> Vec<u8> {
    let mut w = word.to_vec();
    // Each pass either shortens the word or rewrites a leading `dtd`; the
    // rewrite enables a cancellation on the next pass, so this terminates.
    for _ in 0..4 * (word.len() + 3) {
        let mut changed = false;
        let mut i = 0;
        let mut out = Vec::with_capacity(w.len());
        while i < w.len() {
            if i + 1 < w.len() && w[i] == w[i + 1] {
                i += 2;
                changed = true;
            } else if i + 2 < w.len() && &w[i..i + 3] == b"dtd" {
                out.extend_from_slice(b"tdt");
                i += 3;
                changed = true;
            } else {
                out.push(w[i]);
                i += 1;
            }
        }
        w = out;
        if !changed {
            break;
        }
    }
    w
}

fn op_of_word(w: &[u8]) -> EdgeOp {
    for (i, cand) in WORDS.iter().enumerate() {
        if cand.as_bytes() == w {
            return ALL_OPS[i];
        }
    }
    panic!("word did not reduce to a canonical form: {:?}", w);
}

/// 6x6 multiplication table, built once by word rewriting and checked
/// against the defining relations.
static MUL: LazyLock<[[EdgeOp; 6]; 6]> = LazyLock::new(|| {
    let mut table = [[EdgeOp::Identity; 6]; 6];
    for a in ALL_OPS {
        for b in ALL_OPS {
            let mut w = WORDS[a as usize].as_bytes().to_vec();
            w.extend_from_slice(WORDS[b as usize].as_bytes());
            table[a as usize][b as usize] = op_of_word(&reduce_word(&w));
        }
    }
    let (t, d) = (EdgeOp::Twist as usize, EdgeOp::Dual as usize);
    assert_eq!(table[t][t], EdgeOp::Identity);
    assert_eq!(table[d][d], EdgeOp::Identity);
    let td = table[t][d];
    assert_eq!(table[td as usize][table[td as usize][td as usize] as usize], EdgeOp::Identity);
    table
});

impl EdgeOp {
    /// Group product `self * other`; `other` is the operation applied to the
    /// graph first.
    #[inline]
    pub fn mul(self, other: EdgeOp) -> EdgeOp {
        MUL[self as usize][other as usize]
    }

    #[inline]
    pub fn inv(self) -> EdgeOp {
        match self {
            EdgeOp::TwistDual => EdgeOp::DualTwist,
            EdgeOp::DualTwist => EdgeOp::TwistDual,
            other => other,
        }
    }

    /// `self * g * self^-1`.
    #[inline]
    pub fn conjugate(self, g: EdgeOp) -> EdgeOp {
        self.mul(g).mul(self.inv())
    }

    /// Order of the element (1, 2, or 3).
    pub fn order(self) -> u32 {
        let mut acc = self;
        let mut k = 1;
        while acc != EdgeOp::Identity {
            acc = acc.mul(self);
            k += 1;
        }
        k
    }

    pub fn pow(self, mut exp: u64) -> EdgeOp {
        let mut acc = EdgeOp::Identity;
        exp %= u64::from(self.order());
        while exp > 0 {
            acc = acc.mul(self);
            exp -= 1;
        }
        acc
    }

    pub fn is_identity(self) -> bool {
        self == EdgeOp::Identity
    }

    /// Text name: `1`, `t`, `d`, `td`, `dt`, or `tdt`.
    pub fn name(self) -> &'static str {
        match self {
            EdgeOp::Identity => "1",
            _ => WORDS[self as usize],
        }
    }

    /// Parse a text name; `tau` and `delta` are accepted for `t` and `d`.
    pub fn parse(text: &str) -> Result<EdgeOp, OpParseError> {
        match text.trim() {
            "1" => Ok(EdgeOp::Identity),
            "t" | "tau" => Ok(EdgeOp::Twist),
            "d" | "delta" => Ok(EdgeOp::Dual),
            "td" => Ok(EdgeOp::TwistDual),
            "dt" => Ok(EdgeOp::DualTwist),
            "tdt" => Ok(EdgeOp::Wilson),
            other => Err(OpParseError(other.to_string())),
        }
    }

    pub fn from_index(i: usize) -> EdgeOp {
        ALL_OPS[i]
    }
}

impl fmt::Display for EdgeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
