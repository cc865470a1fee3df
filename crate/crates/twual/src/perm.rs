//! Permutations of edge positions, stored in one-line notation.
//!
//! Positions are 0-based internally; all text I/O (cycle notation) is
//! 1-based, e.g. `(1 6 2)(3 4 5)`, where a cycle `(a b c)` maps a to b,
//! b to c, and c back to a.

use std::fmt;

use thiserror::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermParseError {
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("entry {0} out of range 1..={1}")]
    OutOfRange(usize, usize),
    #[error("entry {0} repeated")]
    Repeated(usize),
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// One-line notation: `map[i]` is the image of position `i` (0-based).
    pub fn from_map(map: Vec<usize>) -> Self {
        let mut seen = vec![false; map.len()];
        for &j in &map {
            assert!(j < map.len() && !seen[j], "not a bijection: {:?}", map);
            seen[j] = true;
        }
        Permutation { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { map: inv }
    }

    /// `self` after `other`: `(self.compose(other)).apply(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree());
        Permutation { map: other.map.iter().map(|&j| self.map[j]).collect() }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.map
    }

    /// Disjoint cycles covering every position, each starting at its least
    /// element, sorted by that element. Fixed points appear as 1-cycles.
    pub fn cycles_full(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.map[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.map[cur];
            }
            out.push(cyc);
        }
        out
    }

    /// Parse 1-based cycle notation over degree `n`. The empty string, `()`,
    /// and `id` all denote the identity. Entries may be separated by spaces
    /// or commas.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self, PermParseError> {
        let trimmed = text.trim();
        let mut map: Vec<usize> = (0..n).collect();
        if trimmed.is_empty() || trimmed == "()" || trimmed == "id" {
            return Ok(Permutation { map });
        }
        let mut moved = vec![false; n];
        let mut rest = trimmed;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| PermParseError::Malformed(text.to_string()))?;
            if !rest[..open].trim().is_empty() {
                return Err(PermParseError::Malformed(text.to_string()));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| PermParseError::Malformed(text.to_string()))?;
            if close < open {
                return Err(PermParseError::Malformed(text.to_string()));
            }
            let body = &rest[open + 1..close];
            rest = &rest[close + 1..];
            let entries: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| PermParseError::Malformed(text.to_string()))
                })
                .collect::<Result<_, _>>()?;
            if entries.is_empty() {
                continue;
            }
            for &e in &entries {
                if e == 0 || e > n {
                    return Err(PermParseError::OutOfRange(e, n));
                }
                if moved[e - 1] {
                    return Err(PermParseError::Repeated(e));
                }
                moved[e - 1] = true;
            }
            for w in 0..entries.len() {
                let from = entries[w] - 1;
                let to = entries[(w + 1) % entries.len()] - 1;
                map[from] = to;
            }
        }
        Ok(Permutation { map })
    }

    /// All permutations of degree `n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Permutation { map: prefix.clone() });
                return;
            }
            for j in 0..n {
                if !used[j] {
                    used[j] = true;
                    prefix.push(j);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[j] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// 1-based cycle notation, omitting fixed points; identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles: Vec<Vec<usize>> = self
            .cycles_full()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for cyc in cycles {
            out.push('(');
            for (i, v) in cyc.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&(v + 1).to_string());
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_roundtrip() {
        let p = Permutation::parse_cycles("(1 6 2)(3 4 5)", 6).unwrap();
        assert_eq!(p.apply(0), 5);
        assert_eq!(p.apply(5), 1);
        assert_eq!(p.apply(1), 0);
        assert_eq!(p.apply(2), 3);
        assert_eq!(p.to_cycle_string(), "(1 6 2)(3 4 5)");
        let q = Permutation::parse_cycles(&p.to_cycle_string(), 6).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn comma_separated_accepted() {
        let p = Permutation::parse_cycles("( 1, 2, 3 )", 3).unwrap();
        assert_eq!(p.one_line(), &[1, 2, 0]);
    }

    #[test]
    fn identity_forms() {
        for text in ["", "()", "id"] {
            assert!(Permutation::parse_cycles(text, 4).unwrap().is_identity());
        }
        assert_eq!(Permutation::identity(4).to_cycle_string(), "()");
    }

    #[test]
    fn parse_errors() {
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::parse_cycles("(1 2 3)", 5).unwrap();
        let q = Permutation::parse_cycles("(3 5)", 5).unwrap();
        let pq = p.compose(&q);
        // apply q first: 3 -> 5; then p fixes 5.
        assert_eq!(pq.apply(2), 4);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn cycles_full_covers_fixed_points() {
        let p = Permutation::parse_cycles("(2 4)", 5).unwrap();
        let cycles = p.cycles_full();
        assert_eq!(cycles, vec![vec![0], vec![1, 3], vec![2], vec![4]]);
    }
}
