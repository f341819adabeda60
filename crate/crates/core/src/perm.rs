//! Finite-support permutations of the nonnegative integers, canonical cycle
//! decomposition, cycle-type counts and star-generator factorizations.
//!
//! The composition convention is fixed crate-wide: in a product `p · q` the
//! left factor acts first on points, `(p · q)(x) = q(p(x))`. This is the
//! convention under which a cycle `(n_1, …, n_k)` factors letter-for-letter
//! into star transpositions as `(0,n_1)(0,n_2)⋯(0,n_k)(0,n_1)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite-support bijection of `{0, 1, 2, …}`.
///
/// Only moved points are stored; every point outside the map is fixed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "PermutationData", into = "PermutationData")]
pub struct Permutation {
    map: BTreeMap<u32, u32>,
}

/// Serde carrier for the `{"map": {"0": 1, "1": 0}}` wire format.
#[derive(Serialize, Deserialize)]
struct PermutationData {
    map: BTreeMap<u32, u32>,
}

impl From<Permutation> for PermutationData {
    fn from(p: Permutation) -> Self {
        PermutationData { map: p.map }
    }
}

impl TryFrom<PermutationData> for Permutation {
    type Error = Error;

    fn try_from(data: PermutationData) -> Result<Self> {
        Permutation::from_images(data.map)
    }
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation::default()
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(a: u32, b: u32) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidPermutation(format!(
                "transposition entries must differ, got ({a} {b})"
            )));
        }
        let mut map = BTreeMap::new();
        map.insert(a, b);
        map.insert(b, a);
        Ok(Permutation { map })
    }

    /// Builds a permutation from point ↦ image pairs, validating that they
    /// form a bijection with equal domain and range. Fixed points are
    /// stripped so the representation stays canonical.
    pub fn from_images<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut map = BTreeMap::new();
        let mut range = BTreeSet::new();
        for (x, y) in pairs {
            if map.insert(x, y).is_some() {
                return Err(Error::InvalidPermutation(format!("point {x} mapped twice")));
            }
            if !range.insert(y) {
                return Err(Error::InvalidPermutation(format!("image {y} hit twice")));
            }
        }
        let domain: BTreeSet<u32> = map.keys().copied().collect();
        if domain != range {
            return Err(Error::InvalidPermutation(
                "domain and range differ; not a finite-support bijection".into(),
            ));
        }
        map.retain(|x, y| x != y);
        Ok(Permutation { map })
    }

    /// Builds the product of the given cycles. Cycles must be individually
    /// duplicate-free and pairwise disjoint; length-1 cycles are allowed and
    /// denote fixed points.
    pub fn from_cycles(cycles: &[Vec<u32>]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut map = BTreeMap::new();
        for cycle in cycles {
            for &x in cycle {
                if !seen.insert(x) {
                    return Err(Error::InvalidCycle(format!("entry {x} repeated")));
                }
            }
            if cycle.len() < 2 {
                continue;
            }
            for (i, &x) in cycle.iter().enumerate() {
                map.insert(x, cycle[(i + 1) % cycle.len()]);
            }
        }
        Permutation::from_images(map)
    }

    pub fn apply(&self, x: u32) -> u32 {
        *self.map.get(&x).unwrap_or(&x)
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// The moved points, in increasing order.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.map.keys().copied()
    }

    pub fn support_size(&self) -> usize {
        self.map.len()
    }

    pub fn max_point(&self) -> Option<u32> {
        self.map.keys().next_back().copied()
    }

    /// Product under the crate convention: `self` acts first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut map = BTreeMap::new();
        for &x in self.map.keys().chain(other.map.keys()) {
            let y = other.apply(self.apply(x));
            if y != x {
                map.insert(x, y);
            }
        }
        Permutation { map }
    }

    pub fn inverse(&self) -> Permutation {
        let map = self.map.iter().map(|(&x, &y)| (y, x)).collect();
        Permutation { map }
    }

    /// `g⁻¹ · self · g` under the left-first convention.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose(self).compose(g)
    }

    /// Canonical disjoint cycles: each cycle starts at its smallest element
    /// (so cycles through 0 start at 0), cycles sorted by smallest element,
    /// fixed points omitted.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let mut cycles = Vec::new();
        let mut done = BTreeSet::new();
        for &start in self.map.keys() {
            if done.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            done.insert(start);
            let mut x = self.apply(start);
            while x != start {
                cycle.push(x);
                done.insert(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        // BTreeMap iteration gives increasing keys, so each cycle already
        // starts at its smallest element and cycles appear sorted.
        CycleDecomposition { cycles }
    }

    /// Cycle-type counts `k ↦ m_k` for `k ≥ 2`; zero counts are omitted.
    pub fn cycle_type_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for cycle in self.cycle_decomposition().cycles {
            *counts.entry(cycle.len()).or_insert(0) += 1;
        }
        counts
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        for cycle in self.cycle_decomposition().cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses cycle notation such as `"(0 1)(2 3 4)"`; `"()"` is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut current: Option<Vec<u32>> = None;
        let mut chars = s.char_indices().peekable();
        while let Some((pos, c)) = chars.next() {
            match c {
                '(' => {
                    if current.is_some() {
                        return Err(Error::Parse {
                            token: "(".into(),
                            position: pos,
                            message: "nested cycle".into(),
                        });
                    }
                    current = Some(Vec::new());
                }
                ')' => match current.take() {
                    Some(cycle) => cycles.push(cycle),
                    None => {
                        return Err(Error::Parse {
                            token: ")".into(),
                            position: pos,
                            message: "unmatched close".into(),
                        })
                    }
                },
                c if c.is_ascii_digit() => {
                    let start = pos;
                    let mut end = pos + c.len_utf8();
                    while let Some(&(p, d)) = chars.peek() {
                        if d.is_ascii_digit() {
                            end = p + d.len_utf8();
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let token = &s[start..end];
                    let value: u32 = token.parse().map_err(|_| Error::Parse {
                        token: token.into(),
                        position: start,
                        message: "not a nonnegative integer".into(),
                    })?;
                    match current.as_mut() {
                        Some(cycle) => cycle.push(value),
                        None => {
                            return Err(Error::Parse {
                                token: token.into(),
                                position: start,
                                message: "entry outside a cycle".into(),
                            })
                        }
                    }
                }
                c if c.is_whitespace() || c == ',' => {}
                other => {
                    return Err(Error::Parse {
                        token: other.to_string(),
                        position: pos,
                        message: "unexpected character in cycle notation".into(),
                    })
                }
            }
        }
        if current.is_some() {
            return Err(Error::Parse {
                token: "(".into(),
                position: s.len(),
                message: "unclosed cycle".into(),
            });
        }
        Permutation::from_cycles(&cycles)
    }
}

/// The canonical disjoint-cycle decomposition of a permutation.
///
/// Invariant: cycles are pairwise disjoint, each has length ≥ 2, is rotated
/// to start at its smallest element, and their left-first product recovers
/// the source permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<u32>>,
}

impl CycleDecomposition {
    /// Multiplies the cycles back out (left factor first).
    pub fn to_permutation(&self) -> Result<Permutation> {
        Permutation::from_cycles(&self.cycles)
    }
}

/// Star word `[n_1, n_2, …, n_k, n_1]` for a cycle `(n_1, …, n_k)`.
///
/// Index 0 stands for the unit element and is dropped on evaluation. A cycle
/// moving 0 is rotated so that `n_1 = 0`. Evaluating the word as a product
/// of transpositions `(0, n_i)`, left factor first, reproduces the cycle.
pub fn star_word_for_cycle(cycle: &[u32]) -> Result<Vec<u32>> {
    if cycle.is_empty() {
        return Err(Error::InvalidCycle("empty cycle".into()));
    }
    let mut seen = BTreeSet::new();
    for &x in cycle {
        if !seen.insert(x) {
            return Err(Error::InvalidCycle(format!("entry {x} repeated")));
        }
    }
    let mut rotated: Vec<u32> = cycle.to_vec();
    if let Some(pos) = cycle.iter().position(|&x| x == 0) {
        rotated.rotate_left(pos);
    }
    let mut word = rotated;
    word.push(word[0]);
    Ok(word)
}

/// One star word per cycle of the canonical decomposition. The nonzero index
/// sets of distinct cycles are disjoint, because disjoint cycles use disjoint
/// star generators.
pub fn star_word_for_permutation(p: &Permutation) -> Vec<Vec<u32>> {
    p.cycle_decomposition()
        .cycles
        .iter()
        .map(|cycle| star_word_for_cycle(cycle).expect("canonical cycles are valid"))
        .collect()
}

/// Evaluates a star word as the left-first product of the transpositions
/// `(0, i)`; entries equal to 0 denote the unit and are skipped.
pub fn eval_star_word(word: &[u32]) -> Permutation {
    let mut acc = Permutation::identity();
    for &i in word {
        if i == 0 {
            continue;
        }
        let t = Permutation::transposition(0, i).expect("0 != i");
        acc = acc.compose(&t);
    }
    acc
}

/// Evaluates a list of star words as one left-first product.
pub fn eval_star_words(words: &[Vec<u32>]) -> Permutation {
    let mut acc = Permutation::identity();
    for word in words {
        acc = acc.compose(&eval_star_word(word));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_follows_left_first_convention() {
        let t01 = Permutation::transposition(0, 1).unwrap();
        assert!(t01.compose(&t01).is_identity());
        let p = perm("(0 3 2)");
        assert_eq!(Permutation::identity().compose(&p), p);
        // (0 1) then (0 2) then (0 1), evaluated pointwise: 0→0, 1→2, 2→1.
        let t02 = Permutation::transposition(0, 2).unwrap();
        let product = t01.compose(&t02).compose(&t01);
        for (x, y) in [(0, 0), (1, 2), (2, 1)] {
            assert_eq!(product.apply(x), y);
        }
        assert_eq!(product, perm("(1 2)"));
    }

    #[test]
    fn cycle_decomposition_is_canonical() {
        assert!(Permutation::identity().cycle_decomposition().cycles.is_empty());
        let p = perm("(2 3 4)(0 1)");
        assert_eq!(
            p.cycle_decomposition().cycles,
            vec![vec![0, 1], vec![2, 3, 4]]
        );
        assert_eq!(perm("(0 1)").cycle_decomposition().cycles, vec![vec![0, 1]]);
    }

    #[test]
    fn cycle_type_counts_start_at_two() {
        assert!(Permutation::identity().cycle_type_counts().is_empty());
        let counts = perm("(0 1)(2 3 4)").cycle_type_counts();
        assert_eq!(counts, BTreeMap::from([(2, 1), (3, 1)]));
        assert_eq!(perm("(1 3)").cycle_type_counts(), BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn star_word_examples() {
        // Cycle (1,2): word [1,2,1]; (0 1)(0 2)(0 1) = (1 2) pointwise.
        assert_eq!(star_word_for_cycle(&[1, 2]).unwrap(), vec![1, 2, 1]);
        assert_eq!(eval_star_word(&[1, 2, 1]), perm("(1 2)"));
        // Cycle through 0 is rotated to start at 0; zeros evaluate to e.
        assert_eq!(star_word_for_cycle(&[5, 0]).unwrap(), vec![0, 5, 0]);
        assert_eq!(eval_star_word(&[0, 5, 0]), perm("(0 5)"));
        // Cycle (1,2,3): four transpositions multiply to (1 2 3).
        assert_eq!(star_word_for_cycle(&[1, 2, 3]).unwrap(), vec![1, 2, 3, 1]);
        assert_eq!(eval_star_word(&[1, 2, 3, 1]), perm("(1 2 3)"));
    }

    #[test]
    fn star_word_rejects_repeats() {
        assert!(matches!(
            star_word_for_cycle(&[1, 2, 1]),
            Err(Error::InvalidCycle(_))
        ));
    }

    #[test]
    fn star_words_for_permutation_disjoint() {
        assert!(star_word_for_permutation(&Permutation::identity()).is_empty());
        let words = star_word_for_permutation(&perm("(0 1)(2 3 4)"));
        assert_eq!(words, vec![vec![0, 1, 0], vec![2, 3, 4, 2]]);
        let sets: Vec<BTreeSet<u32>> = words
            .iter()
            .map(|w| w.iter().copied().filter(|&i| i != 0).collect())
            .collect();
        assert_eq!(sets[0], BTreeSet::from([1]));
        assert_eq!(sets[1], BTreeSet::from([2, 3, 4]));
        assert_eq!(
            star_word_for_permutation(&perm("(1 3)")),
            vec![vec![1, 3, 1]]
        );
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["()", "(0 1)", "(0 1)(2 3 4)", "(1 5)(2 9 4)"] {
            assert_eq!(perm(s).to_string(), s);
        }
        assert_eq!(perm("(1 0)").to_string(), "(0 1)");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "(0 1)(2 2)".parse::<Permutation>() {
            Err(Error::InvalidCycle(msg)) => assert!(msg.contains('2')),
            other => panic!("expected invalid cycle, got {other:?}"),
        }
        match "(0 x)".parse::<Permutation>() {
            Err(Error::Parse { token, position, .. }) => {
                assert_eq!(token, "x");
                assert_eq!(position, 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!("(0 1".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
    }

    #[test]
    fn from_images_validates_bijections() {
        assert!(Permutation::from_images([(0, 1), (1, 0), (2, 2)]).is_ok());
        assert!(Permutation::from_images([(0, 1)]).is_err());
        assert!(Permutation::from_images([(0, 1), (1, 1)]).is_err());
        let p = Permutation::from_images([(0, 1), (1, 0), (5, 5)]).unwrap();
        assert_eq!(p.support().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn serde_map_format() {
        let p = perm("(0 1)");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"map":{"0":1,"1":0}}"#);
        let back: Permutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>(r#"{"map":{"0":1}}"#).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_perm() -> impl Strategy<Value = Permutation> {
            // A shuffle of {0..8}, converted to images.
            Just(()).prop_perturb(|_, mut rng| {
                let mut points: Vec<u32> = (0..9).collect();
                for i in (1..points.len()).rev() {
                    let j = rng.gen_range(0..=i);
                    points.swap(i, j);
                }
                Permutation::from_images((0..9).map(|x| (x, points[x as usize]))).unwrap()
            })
        }

        proptest! {
            #[test]
            fn star_round_trip(p in arb_perm()) {
                let words = star_word_for_permutation(&p);
                prop_assert_eq!(eval_star_words(&words), p);
            }

            #[test]
            fn star_index_sets_disjoint(p in arb_perm()) {
                let words = star_word_for_permutation(&p);
                let mut seen = BTreeSet::new();
                for word in &words {
                    for &i in word.iter().filter(|&&i| i != 0).collect::<BTreeSet<_>>() {
                        prop_assert!(seen.insert(i));
                    }
                }
            }

            #[test]
            fn cycle_counts_weighted_sum_is_support(p in arb_perm()) {
                let weighted: usize = p.cycle_type_counts().iter().map(|(k, m)| k * m).sum();
                prop_assert_eq!(weighted, p.support_size());
            }

            #[test]
            fn cycle_counts_are_class_function(p in arb_perm(), g in arb_perm()) {
                prop_assert_eq!(p.cycle_type_counts(), p.conjugate_by(&g).cycle_type_counts());
            }

            #[test]
            fn compose_with_inverse_is_identity(p in arb_perm()) {
                prop_assert!(p.compose(&p.inverse()).is_identity());
            }

            #[test]
            fn decomposition_multiplies_back(p in arb_perm()) {
                prop_assert_eq!(p.cycle_decomposition().to_permutation().unwrap(), p);
            }
        }
    }
}
