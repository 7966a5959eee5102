//! The group Z2^3 behind the model: index labelling of the seven
//! nonzero elements, the star product, the Fano line structure, and the
//! precedence orientation.
//!
//! Indices live in {1..7} and satisfy g_i + g_{i+1} = g_{i+3} with index
//! arithmetic modulo 7 on representatives {1..7}. The bit-triple table
//! is the single source of truth; everything else is derived from it.

use std::fmt;

use crate::{Error, Result};

/// A nonzero group element, identified by its index in {1..7}.
pub type GroupIndex = usize;

/// Bit triples of g_1..g_7, in index order.
const TRIPLES: [[u8; 3]; 7] = [
    [1, 0, 0], // g1
    [0, 1, 0], // g2
    [0, 0, 1], // g3
    [1, 1, 0], // g4
    [0, 1, 1], // g5
    [1, 1, 1], // g6
    [1, 0, 1], // g7
];

/// Indices outside the quaternion line {1,2,4}; the "odd" part of the
/// Z2-grading that produces the split variant.
pub const SPLIT_ODD: [GroupIndex; 4] = [3, 5, 6, 7];

/// True for the indices whose homogeneous components change sign in the
/// split model.
pub fn is_split_odd(i: GroupIndex) -> bool {
    SPLIT_ODD.contains(&i)
}

/// Reduce index arithmetic like i+3 back to the representative set
/// {1..7} (mod 7 with 7 in place of 0). The argument must be >= 1.
pub fn wrap(i: usize) -> GroupIndex {
    let m = i % 7;
    if m == 0 {
        7
    } else {
        m
    }
}

pub fn check_index(i: GroupIndex) -> Result<()> {
    if (1..=7).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(i))
    }
}

/// The bit triple of g_i.
pub fn triple_of(i: GroupIndex) -> Result<[u8; 3]> {
    check_index(i)?;
    Ok(TRIPLES[i - 1])
}

/// The index of a nonzero bit triple; the zero triple is the excluded
/// neutral element.
pub fn index_of(t: [u8; 3]) -> Result<GroupIndex> {
    if t == [0, 0, 0] {
        return Err(Error::ZeroTriple);
    }
    for (k, u) in TRIPLES.iter().enumerate() {
        if *u == t {
            return Ok(k + 1);
        }
    }
    Err(Error::ZeroTriple) // unreachable for bits in {0,1}
}

/// The star product: g_i + g_j = g_{star(i,j)}. Errors when i = j,
/// because the sum would be the excluded neutral element.
pub fn star(i: GroupIndex, j: GroupIndex) -> Result<GroupIndex> {
    check_index(i)?;
    check_index(j)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    Ok(star_unchecked(i, j))
}

/// Star product for already-validated distinct indices.
pub(crate) fn star_unchecked(i: GroupIndex, j: GroupIndex) -> GroupIndex {
    debug_assert!(i != j && (1..=7).contains(&i) && (1..=7).contains(&j));
    let a = TRIPLES[i - 1];
    let b = TRIPLES[j - 1];
    let t = [a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2]];
    index_of(t).expect("distinct indices have a nonzero sum")
}

/// The precedence orientation: i precedes j iff (j - i) mod 7 is one of
/// 1, 2, 4. Exactly one of precedes(i,j), precedes(j,i) holds for each
/// pair of distinct indices.
pub fn precedes(i: GroupIndex, j: GroupIndex) -> Result<bool> {
    check_index(i)?;
    check_index(j)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    Ok(precedes_unchecked(i, j))
}

pub(crate) fn precedes_unchecked(i: GroupIndex, j: GroupIndex) -> bool {
    matches!((j + 7 - i) % 7, 1 | 2 | 4)
}

/// A Fano line: a 3-element set of indices closed under star.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Line {
    members: [GroupIndex; 3],
}

impl Line {
    /// The line {i, i+1, i+3}.
    pub fn through_consecutive(i: GroupIndex) -> Result<Line> {
        check_index(i)?;
        Ok(Line::sorted([i, wrap(i + 1), wrap(i + 3)]))
    }

    fn sorted(mut m: [GroupIndex; 3]) -> Line {
        m.sort_unstable();
        Line { members: m }
    }

    /// Members in ascending index order.
    pub fn members(&self) -> [GroupIndex; 3] {
        self.members
    }

    pub fn contains(&self, i: GroupIndex) -> bool {
        self.members.contains(&i)
    }

    /// The two members other than i; errors if i is not on the line.
    pub fn others(&self, i: GroupIndex) -> Result<[GroupIndex; 2]> {
        if !self.contains(i) {
            return Err(Error::LineMembership { index: i, k: 0, line: *self });
        }
        let mut out = [0; 2];
        let mut n = 0;
        for &m in &self.members {
            if m != i {
                out[n] = m;
                n += 1;
            }
        }
        Ok(out)
    }

    /// The four indices not on the line.
    pub fn complement(&self) -> [GroupIndex; 4] {
        let mut out = [0; 4];
        let mut n = 0;
        for i in 1..=7 {
            if !self.contains(i) {
                out[n] = i;
                n += 1;
            }
        }
        out
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.members[0], self.members[1], self.members[2])
    }
}

/// The unique line through two distinct indices: {i, j, star(i,j)}.
pub fn line_through(i: GroupIndex, j: GroupIndex) -> Result<Line> {
    let s = star(i, j)?;
    Ok(Line::sorted([i, j, s]))
}

/// All seven Fano lines, as the sets {i, i+1, i+3}.
pub fn all_lines() -> [Line; 7] {
    let mut out = [Line { members: [0; 3] }; 7];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = Line::through_consecutive(k + 1).unwrap();
    }
    out
}

/// The three lines containing a given index.
pub fn lines_through(i: GroupIndex) -> Result<Vec<Line>> {
    check_index(i)?;
    Ok(all_lines().into_iter().filter(|l| l.contains(i)).collect())
}
