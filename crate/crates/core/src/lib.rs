//! Exact computation in the infinite braid and symmetric groups: braid words
//! with a Garside normal-form engine, star-generator combinatorics, Thoma
//! character evaluation, finite tensor-power matrix models, and brute-force
//! verification of distributional symmetries of joint moment functionals.
//!
//! All values are immutable and all operations are pure functions, so every
//! type here can be shared freely across threads.

pub mod braid;
pub mod error;
pub mod gamma;
pub mod garside;
pub mod model;
pub mod perm;
pub mod symmetry;
pub mod thoma;

pub use braid::{artin_action, artin_action_is_trivial, BraidWord, FreeGroupWord};
pub use error::Error;
pub use gamma::{
    constructive_sequence, gamma_word, gamma_word_alt, localization_check, partial_shift_word,
    RepresentationHook,
};
pub use garside::{braid_equal, braid_is_identity, garside_normal_form, GarsideNormalForm};
pub use model::{MatrixModel, Operator};
pub use perm::{
    eval_star_word, eval_star_words, star_word_for_cycle, star_word_for_permutation,
    CycleDecomposition, Permutation,
};
pub use symmetry::{
    check_exchangeable, check_hierarchy, check_identically_distributed,
    check_scalar_independence, check_spreadable, check_stationary, ergodic_stationarity_probe,
    ConstantOracle, DeltaGammaOracle, ErgodicProbe, HierarchyReport, Letter, MomentOracle,
    MomentWord, StarMomentOracle, SymmetryProperty, SymmetryReport, Verdict, Witness,
};
pub use thoma::{
    delta_character, delta_trace, gram_psd_check, thoma_character, thoma_gram_character,
    GramPsdReport, GroupPolynomial, RationalComplex, ThomaParams, ThomaViolation,
};
