//! Square roots of free generators `γ_i` as braid words, the constructive
//! procedure (product rule + localization) against an arbitrary
//! representation hook, and partial-shift words.
//!
//! Index bridging: sequences `(x_n)` produced by the constructive procedure
//! are 0-based while the `γ_i` start at `i = 1`; under the shifted hook the
//! sequence element `x_n` is the represented `γ_{n+1}`.

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// `γ_i = (σ_i⁻¹ σ_{i-1}⁻¹ ⋯ σ_2⁻¹) σ_1 (σ_2 ⋯ σ_{i-1} σ_i)`; for `i = 1`
/// this is `σ_1`.
pub fn gamma_word(i: u32) -> Result<BraidWord> {
    check_gamma_index(i)?;
    let mut letters = Vec::with_capacity(2 * i as usize - 1);
    for k in (2..=i as i32).rev() {
        letters.push(-k);
    }
    letters.push(1);
    for k in 2..=i as i32 {
        letters.push(k);
    }
    BraidWord::new(letters)
}

/// The equivalent right-hand formula
/// `γ_i = (σ_1 σ_2 ⋯ σ_{i-1}) σ_i (σ_{i-1}⁻¹ ⋯ σ_2⁻¹ σ_1⁻¹)`.
pub fn gamma_word_alt(i: u32) -> Result<BraidWord> {
    check_gamma_index(i)?;
    let mut letters = Vec::with_capacity(2 * i as usize - 1);
    for k in 1..=i as i32 {
        letters.push(k);
    }
    for k in (1..i as i32).rev() {
        letters.push(-k);
    }
    BraidWord::new(letters)
}

fn check_gamma_index(i: u32) -> Result<()> {
    if i == 0 {
        return Err(Error::IndexRange {
            index: 0,
            message: "gamma index must be at least 1".into(),
        });
    }
    Ok(())
}

/// The partial-shift word `σ_{N+1} σ_{N+2} ⋯ σ_{N+k}`, `k ≥ 1`.
pub fn partial_shift_word(shift_from: u32, length: u32) -> Result<BraidWord> {
    if length == 0 {
        return Err(Error::InvalidArgument(
            "partial shift word needs at least one letter".into(),
        ));
    }
    let letters = (shift_from + 1..=shift_from + length)
        .map(|k| k as i32)
        .collect();
    BraidWord::new(letters)
}

/// A representation of the braid group on an opaque element domain, given
/// by the action of each Artin generator and its inverse.
///
/// A hook must respect the braid relations on its target and must satisfy
/// `apply(i, +) ∘ apply(i, -) = id`; both are testable by the consumer.
/// Hooks are required to be side-effect free.
pub trait RepresentationHook {
    type Elem: Clone;

    /// Applies `ρ(σ_i)` (or `ρ(σ_i⁻¹)` when `inverse` is set) to `x`.
    fn apply(&self, generator: u32, inverse: bool, x: &Self::Elem) -> Result<Self::Elem>;

    /// Applies `ρ(w)` to `x`. Under `ρ(vw) = ρ(v) ∘ ρ(w)` the rightmost
    /// letter acts first.
    fn apply_word(&self, w: &BraidWord, x: &Self::Elem) -> Result<Self::Elem> {
        let mut current = x.clone();
        for &letter in w.letters().iter().rev() {
            current = self.apply(letter.unsigned_abs(), letter < 0, &current)?;
        }
        Ok(current)
    }
}

/// The product rule: returns `[x_0, x_1, …, x_count]` with
/// `x_n = ρ(σ_n σ_{n-1} ⋯ σ_1) x_0`.
pub fn constructive_sequence<H: RepresentationHook>(
    hook: &H,
    x0: &H::Elem,
    count: u32,
) -> Result<Vec<H::Elem>> {
    if count == 0 {
        return Err(Error::InvalidArgument(
            "constructive sequence needs count >= 1".into(),
        ));
    }
    let mut sequence = Vec::with_capacity(count as usize + 1);
    sequence.push(x0.clone());
    for n in 1..=count {
        let previous = sequence.last().expect("nonempty");
        sequence.push(hook.apply(n, false, previous)?);
    }
    Ok(sequence)
}

/// Localization: true iff `ρ(σ_n) x_0 = x_0` for all `2 ≤ n ≤ max_n`,
/// under the injected element equality.
pub fn localization_check<H, F>(hook: &H, x0: &H::Elem, max_n: u32, equal: F) -> Result<bool>
where
    H: RepresentationHook,
    F: Fn(&H::Elem, &H::Elem) -> bool,
{
    if max_n < 2 {
        return Err(Error::InvalidArgument(
            "localization check needs max_n >= 2".into(),
        ));
    }
    for n in 2..=max_n {
        if !equal(&hook.apply(n, false, x0)?, x0) {
            return Ok(false);
        }
    }
    Ok(true)
}
