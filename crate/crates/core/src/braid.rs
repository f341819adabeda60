//! Braid words over the Artin generators, free reduction, the quotient map
//! to finite permutations, and the faithful action on a free group that
//! serves as an independent word-problem oracle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A word in the Artin generators: letter `k > 0` is `σ_k`, `k < 0` is
/// `σ_{|k|}⁻¹`. The empty word is the identity. Every word carries the
/// implicit strand bound `1 + max |letter|`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct BraidWord {
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::MalformedWord("letter 0 is not a generator".into()));
        }
        Ok(BraidWord { letters })
    }

    pub fn identity() -> Self {
        BraidWord::default()
    }

    /// The generator `σ_i`, `i ≥ 1`.
    pub fn generator(i: u32) -> Result<Self> {
        if i == 0 {
            return Err(Error::IndexRange {
                index: 0,
                message: "generator index must be at least 1".into(),
            });
        }
        Ok(BraidWord {
            letters: vec![i as i32],
        })
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index appearing in the word; 0 for the identity.
    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0)
    }

    /// Smallest strand count the word fits in: `1 + max |letter|`.
    pub fn strand_bound(&self) -> u32 {
        1 + self.max_index()
    }

    /// Formal inverse: reversed order, negated letters.
    pub fn inverse(&self) -> Self {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Concatenation, the group operation.
    pub fn concat(&self, other: &BraidWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn pow(&self, exponent: i32) -> Self {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(self.letters.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { letters }
    }

    /// Removes adjacent cancelling pairs `k, -k` until none remain. The
    /// result equals the input in the braid group.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            if stack.last() == Some(&-letter) {
                stack.pop();
            } else {
                stack.push(letter);
            }
        }
        BraidWord { letters: stack }
    }

    /// Homomorphic image in the symmetric group: `σ_i` maps to the
    /// transposition of `i-1` and `i`, products taken left factor first.
    pub fn project_to_permutation(&self) -> Permutation {
        let n = self.strand_bound() as usize;
        let mut images: Vec<u32> = (0..n as u32).collect();
        // Right-composing by the transposition (i-1, i) swaps the two values
        // wherever they sit, i.e. swaps the preimages of i-1 and i.
        let mut positions: Vec<u32> = (0..n as u32).collect();
        for &letter in &self.letters {
            let i = letter.unsigned_abs() as usize;
            let (a, b) = (positions[i - 1] as usize, positions[i] as usize);
            images.swap(a, b);
            positions.swap(i - 1, i);
        }
        Permutation::from_images((0..n as u32).zip(images)).expect("images form a bijection")
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord[{self}]")
    }
}

impl fmt::Display for BraidWord {
    /// Whitespace-separated letters; the identity is the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in s.split_whitespace() {
            let position = s[offset..].find(token).map(|p| p + offset).unwrap_or(offset);
            offset = position + token.len();
            let letter: i32 = token.parse().map_err(|_| Error::Parse {
                token: token.into(),
                position,
                message: "not an integer braid letter".into(),
            })?;
            if letter == 0 {
                return Err(Error::Parse {
                    token: token.into(),
                    position,
                    message: "letter 0 is not a generator".into(),
                });
            }
            letters.push(letter);
        }
        Ok(BraidWord { letters })
    }
}

impl TryFrom<Vec<i32>> for BraidWord {
    type Error = Error;

    fn try_from(letters: Vec<i32>) -> Result<Self> {
        BraidWord::new(letters)
    }
}

impl From<BraidWord> for Vec<i32> {
    fn from(w: BraidWord) -> Vec<i32> {
        w.letters
    }
}

/// A freely reduced word over free generators `x_0, …, x_{n-1}`: letter
/// `k > 0` is `x_{k-1}`, `k < 0` is `x_{|k|-1}⁻¹`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeGroupWord {
    letters: Vec<i32>,
}

impl FreeGroupWord {
    pub fn identity() -> Self {
        FreeGroupWord::default()
    }

    /// The generator `x_j`, `j ≥ 0`.
    pub fn generator(j: u32) -> Self {
        FreeGroupWord {
            letters: vec![j as i32 + 1],
        }
    }

    pub fn from_letters(letters: Vec<i32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::MalformedWord("free letter 0".into()));
        }
        let mut word = FreeGroupWord::identity();
        for letter in letters {
            word.push(letter);
        }
        Ok(word)
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeGroupWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &FreeGroupWord) -> Self {
        let mut word = self.clone();
        for &letter in &other.letters {
            word.push(letter);
        }
        word
    }

    fn push(&mut self, letter: i32) {
        if self.letters.last() == Some(&-letter) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }
}

impl fmt::Debug for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeGroupWord[{self}]")
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, &letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            let j = letter.unsigned_abs() - 1;
            if letter > 0 {
                write!(f, "x{j}")?;
            } else {
                write!(f, "x{j}^-1")?;
            }
        }
        Ok(())
    }
}

/// Applies the Artin automorphism of the braid word to a free-group word,
/// letter by letter: `σ_i` sends `x_{i-1} ↦ x_{i-1} x_i x_{i-1}⁻¹` and
/// `x_i ↦ x_{i-1}`, fixing all other generators; inverse letters apply the
/// inverse automorphism. The action is faithful, so `w = e` in `B_n` exactly
/// when the action fixes every generator.
pub fn artin_action(w: &BraidWord, f: &FreeGroupWord, strands: u32) -> Result<FreeGroupWord> {
    if w.strand_bound() > strands {
        return Err(Error::StrandBound {
            required: w.strand_bound(),
            given: strands,
        });
    }
    for &letter in f.letters() {
        if letter.unsigned_abs() > strands {
            return Err(Error::IndexRange {
                index: letter as i64,
                message: format!("free generator outside x_0..x_{}", strands - 1),
            });
        }
    }
    let mut current = f.clone();
    for &letter in w.letters() {
        let i = letter.unsigned_abs() as i32;
        let mut next = FreeGroupWord::identity();
        for &g in current.letters() {
            let j = g.abs();
            let image: &[i32] = if letter > 0 {
                // σ_i: x_{i-1} ↦ x_{i-1} x_i x_{i-1}⁻¹, x_i ↦ x_{i-1}.
                if j == i {
                    &[i, i + 1, -i]
                } else if j == i + 1 {
                    &[i]
                } else {
                    &[j]
                }
            } else {
                // σ_i⁻¹: x_{i-1} ↦ x_i, x_i ↦ x_i⁻¹ x_{i-1} x_i.
                if j == i {
                    &[i + 1]
                } else if j == i + 1 {
                    &[-(i + 1), i, i + 1]
                } else {
                    &[j]
                }
            };
            if g > 0 {
                for &im in image {
                    next.push(im);
                }
            } else {
                for &im in image.iter().rev() {
                    next.push(-im);
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// True iff the Artin action of `w` fixes every free generator
/// `x_0, …, x_{strands-1}`.
pub fn artin_action_is_trivial(w: &BraidWord, strands: u32) -> Result<bool> {
    for j in 0..strands {
        let gen = FreeGroupWord::generator(j);
        if artin_action(w, &gen, strands)? != gen {
            return Ok(false);
        }
    }
    Ok(true)
}
