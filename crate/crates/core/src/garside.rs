//! Left-greedy (Garside) normal form for braid words, deciding the word
//! problem in `B_n`.
//!
//! Every braid word is rewritten as `Δ^p · F_1 ⋯ F_k` where `Δ` is the
//! half twist and each factor is a simple element (permutation braid),
//! stored here by its permutation of `{0, …, n-1}`. Negative letters are
//! eliminated through `σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹)`, pushing the `Δ⁻¹` to the
//! front with the index-flip automorphism. Adjacent factors are then made
//! left-weighted by sliding single crossings: a crossing `σ_i` moves from
//! the head of the right factor into the tail of the left factor whenever
//! `i` is a descent of the right factor but not a finishing index of the
//! left one. Two words are equal in `B_n` iff their normal forms coincide.
//!
//! Working over one-line permutation arrays, with the crate-wide left-first
//! composition convention:
//! - starting set `S(F) = { i : F[i-1] > F[i] }` (σ_i left-divides F),
//! - finishing set `F(F) = { i : F⁻¹[i-1] > F⁻¹[i] }` (σ_i right-divides F).

use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Left-greedy normal form `Δ^p · F_1 ⋯ F_k` of a braid word in `B_n`.
///
/// Invariants: every factor is a nontrivial simple element distinct from
/// `Δ`, and each consecutive pair of factors is left-weighted.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct GarsideNormalForm {
    strands: u32,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Reconstructs a braid word equal to the original in `B_n`.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands as usize;
        let delta = word_from_one_line(&half_twist(n));
        let mut word = delta.pow(i32::try_from(self.delta_power).expect("delta power fits i32"));
        for factor in &self.factors {
            word = word.concat(&word_from_one_line(&to_one_line(factor, n)));
        }
        word
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.delta_power)?;
        for factor in &self.factors {
            write!(f, " · {factor}")?;
        }
        Ok(())
    }
}

/// Computes the left-greedy normal form of `w` in `B_strands`.
pub fn garside_normal_form(w: &BraidWord, strands: u32) -> Result<GarsideNormalForm> {
    if strands == 0 {
        return Err(Error::InvalidArgument("strand count must be positive".into()));
    }
    if w.strand_bound() > strands {
        return Err(Error::StrandBound {
            required: w.strand_bound(),
            given: strands,
        });
    }
    let n = strands as usize;
    let mut delta_power: i64 = 0;
    let mut factors: Vec<Vec<u32>> = Vec::with_capacity(w.len());
    for &letter in w.letters() {
        let i = letter.unsigned_abs() as usize;
        if letter > 0 {
            factors.push(transposition_one_line(n, i));
        } else {
            // σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹); the Δ⁻¹ flips everything to its left.
            delta_power -= 1;
            for factor in factors.iter_mut() {
                flip_in_place(factor);
            }
            let mut tail = half_twist(n);
            let inv = invert_one_line(&tail);
            let (a, b) = (inv[i - 1] as usize, inv[i] as usize);
            tail.swap(a, b); // w0 · σ_i at the permutation level
            factors.push(tail);
        }
    }
    normalize_factors(n, &mut delta_power, &mut factors);
    Ok(GarsideNormalForm {
        strands,
        delta_power,
        factors: factors.iter().map(|f| from_one_line(f)).collect(),
    })
}

/// True iff `w1 = w2` in `B_strands`, decided by normal-form comparison.
pub fn braid_equal(w1: &BraidWord, w2: &BraidWord, strands: u32) -> Result<bool> {
    Ok(garside_normal_form(w1, strands)? == garside_normal_form(w2, strands)?)
}

/// True iff `w = e` in `B_strands`.
pub fn braid_is_identity(w: &BraidWord, strands: u32) -> Result<bool> {
    // A word with nontrivial permutation image cannot be trivial; the cheap
    // quotient test only short-circuits the negative answer.
    let reduced = w.free_reduce();
    if reduced.is_empty() {
        return require_bound(w, strands).map(|_| true);
    }
    if !reduced.project_to_permutation().is_identity() {
        return require_bound(w, strands).map(|_| false);
    }
    Ok(garside_normal_form(&reduced, strands)?.is_identity())
}

fn require_bound(w: &BraidWord, strands: u32) -> Result<()> {
    if strands == 0 {
        return Err(Error::InvalidArgument("strand count must be positive".into()));
    }
    if w.strand_bound() > strands {
        return Err(Error::StrandBound {
            required: w.strand_bound(),
            given: strands,
        });
    }
    Ok(())
}

// ---- one-line permutation helpers ----------------------------------------

fn identity_one_line(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

fn transposition_one_line(n: usize, i: usize) -> Vec<u32> {
    let mut p = identity_one_line(n);
    p.swap(i - 1, i);
    p
}

/// One-line form of the half twist: the order reversal.
fn half_twist(n: usize) -> Vec<u32> {
    (0..n as u32).rev().collect()
}

fn invert_one_line(p: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y as usize] = x as u32;
    }
    inv
}

/// Conjugation by the half twist, `Δ F Δ⁻¹`, the index-flip automorphism.
fn flip_in_place(p: &mut Vec<u32>) {
    let n = p.len();
    let flipped: Vec<u32> = (0..n)
        .map(|x| (n - 1) as u32 - p[n - 1 - x])
        .collect();
    *p = flipped;
}

fn is_identity_one_line(p: &[u32]) -> bool {
    p.iter().enumerate().all(|(x, &y)| x as u32 == y)
}

fn to_one_line(p: &Permutation, n: usize) -> Vec<u32> {
    (0..n as u32).map(|x| p.apply(x)).collect()
}

fn from_one_line(p: &[u32]) -> Permutation {
    Permutation::from_images(p.iter().enumerate().map(|(x, &y)| (x as u32, y)))
        .expect("one-line arrays are bijections")
}

/// Emits a reduced word for the permutation braid of `p`: repeatedly strip
/// the smallest left descent.
fn word_from_one_line(p: &[u32]) -> BraidWord {
    let mut q = p.to_vec();
    let mut letters = Vec::new();
    loop {
        let descent = (1..q.len()).find(|&i| q[i - 1] > q[i]);
        match descent {
            Some(i) => {
                letters.push(i as i32);
                q.swap(i - 1, i);
            }
            None => break,
        }
    }
    BraidWord::new(letters).expect("descent indices are nonzero")
}

// ---- left-weighting --------------------------------------------------------

/// Slides crossings from the head of `b` into the tail of `a` until the
/// pair is left-weighted (`S(b) ⊆ F(a)`). Returns true if anything moved.
fn make_left_weighted(a: &mut [u32], b: &mut [u32]) -> bool {
    let n = a.len();
    let mut a_inv = invert_one_line(a);
    let mut changed = false;
    loop {
        let movable = (1..n).find(|&i| {
            b[i - 1] > b[i] && !(a_inv[i - 1] > a_inv[i])
        });
        match movable {
            Some(i) => {
                // a ← a · σ_i : swap the values i-1, i of a.
                let (pa, pb) = (a_inv[i - 1] as usize, a_inv[i] as usize);
                a.swap(pa, pb);
                a_inv.swap(i - 1, i);
                // b ← σ_i⁻¹ · b : drop the leading crossing.
                b.swap(i - 1, i);
                changed = true;
            }
            None => return changed,
        }
    }
}

fn normalize_factors(n: usize, delta_power: &mut i64, factors: &mut Vec<Vec<u32>>) {
    let delta = half_twist(n);
    loop {
        let before = factors.len();
        factors.retain(|f| !is_identity_one_line(f));
        let mut changed = factors.len() != before;
        for j in 1..factors.len() {
            let (head, tail) = factors.split_at_mut(j);
            changed |= make_left_weighted(&mut head[j - 1], &mut tail[0]);
        }
        while factors.first().map(|f| f == &delta).unwrap_or(false) {
            factors.remove(0);
            *delta_power += 1;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    debug_assert!(factors.iter().all(|f| f != &delta && !is_identity_one_line(f)));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::artin_action_is_trivial;

    fn word(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn half_twist_in_b3() {
        // σ1σ2σ1 is Δ in B_3; the Artin-action oracle confirms that the
        // word reconstructed from the normal form equals the input.
        let nf = garside_normal_form(&word("1 2 1"), 3).unwrap();
        assert_eq!(nf.delta_power(), 1);
        assert!(nf.factors().is_empty());
        let recovered = nf.to_word();
        let cross_check = word("1 2 1").concat(&recovered.inverse());
        assert!(artin_action_is_trivial(&cross_check, 3).unwrap());
    }

    #[test]
    fn empty_word_is_trivial() {
        let nf = garside_normal_form(&BraidWord::identity(), 3).unwrap();
        assert_eq!(nf.delta_power(), 0);
        assert!(nf.factors().is_empty());
        assert!(nf.is_identity());
    }

    #[test]
    fn far_commutation_has_one_normal_form() {
        let nf1 = garside_normal_form(&word("1 3"), 4).unwrap();
        let nf2 = garside_normal_form(&word("3 1"), 4).unwrap();
        assert_eq!(nf1, nf2);
        assert_eq!(nf1.factors().len(), 1);
    }

    #[test]
    fn braid_equal_examples() {
        assert!(braid_equal(&word("1 2 1"), &word("2 1 2"), 3).unwrap());
        assert!(!braid_equal(&word("1"), &BraidWord::identity(), 2).unwrap());
        assert!(braid_equal(&word("1 2 1 -2 -1 -2"), &BraidWord::identity(), 3).unwrap());
        assert!(braid_is_identity(&word("1 2 1 -2 -1 -2"), 3).unwrap());
    }

    #[test]
    fn strand_bound_errors() {
        assert!(matches!(
            garside_normal_form(&word("3"), 3),
            Err(Error::StrandBound { required: 4, given: 3 })
        ));
        assert!(garside_normal_form(&word("3"), 4).is_ok());
        assert!(braid_equal(&word("1"), &word("3"), 2).is_err());
    }

    #[test]
    fn single_inverse_letter() {
        let nf = garside_normal_form(&word("-1"), 2).unwrap();
        assert_eq!(nf.delta_power(), -1);
        assert!(nf.factors().is_empty());
        let nf3 = garside_normal_form(&word("-1"), 3).unwrap();
        assert_eq!(nf3.delta_power(), -1);
        assert_eq!(nf3.factors().len(), 1);
        assert!(braid_equal(&nf3.to_word(), &word("-1"), 3).unwrap());
    }

    #[test]
    fn relation_soundness_up_to_index_six() {
        // Every instance of (B1) and (B2) with indices ≤ 6.
        for i in 1..=5u32 {
            let j = i + 1;
            let lhs = format!("{i} {j} {i}").parse::<BraidWord>().unwrap();
            let rhs = format!("{j} {i} {j}").parse::<BraidWord>().unwrap();
            assert!(braid_equal(&lhs, &rhs, j + 1).unwrap(), "(B1) failed at {i}");
        }
        for i in 1..=6u32 {
            for j in 1..=6u32 {
                if i.abs_diff(j) > 1 {
                    let lhs = format!("{i} {j}").parse::<BraidWord>().unwrap();
                    let rhs = format!("{j} {i}").parse::<BraidWord>().unwrap();
                    let n = i.max(j) + 1;
                    assert!(braid_equal(&lhs, &rhs, n).unwrap(), "(B2) failed at {i},{j}");
                }
            }
        }
    }

    #[test]
    fn factors_avoid_trivial_and_delta() {
        let nf = garside_normal_form(&word("1 1 2 1 -3 2 2 -1"), 4).unwrap();
        let delta: Permutation = "(0 3)(1 2)".parse().unwrap();
        for factor in nf.factors() {
            assert!(!factor.is_identity());
            assert_ne!(factor, &delta);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_word(maxlen: usize, maxidx: i32) -> impl Strategy<Value = BraidWord> {
            proptest::collection::vec(
                (1..=maxidx).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]),
                0..=maxlen,
            )
            .prop_map(|letters| BraidWord::new(letters).unwrap())
        }

        proptest! {
            #[test]
            fn normal_form_idempotent(w in arb_word(12, 5)) {
                let n = w.strand_bound().max(2);
                let nf = garside_normal_form(&w, n).unwrap();
                let again = garside_normal_form(&nf.to_word(), n).unwrap();
                prop_assert_eq!(nf, again);
            }

            #[test]
            fn equality_agrees_with_artin_oracle(w in arb_word(8, 3)) {
                let n = w.strand_bound().max(2);
                prop_assert_eq!(
                    braid_is_identity(&w, n).unwrap(),
                    artin_action_is_trivial(&w, n).unwrap()
                );
            }

            #[test]
            fn equality_independent_of_strand_slack(a in arb_word(8, 3), b in arb_word(8, 3)) {
                let n = a.strand_bound().max(b.strand_bound()).max(2);
                prop_assert_eq!(
                    braid_equal(&a, &b, n).unwrap(),
                    braid_equal(&a, &b, n + 2).unwrap()
                );
            }

            #[test]
            fn word_times_inverse_is_trivial(w in arb_word(10, 4)) {
                let n = w.strand_bound().max(2);
                prop_assert!(braid_is_identity(&w.concat(&w.inverse()), n).unwrap());
            }

            #[test]
            fn projection_matches_normal_form(w in arb_word(10, 4)) {
                // The permutation image of the reconstructed word agrees
                // with the image of the input.
                let n = w.strand_bound().max(2);
                let nf = garside_normal_form(&w, n).unwrap();
                prop_assert_eq!(
                    nf.to_word().project_to_permutation(),
                    w.project_to_permutation()
                );
            }
        }
    }
}
