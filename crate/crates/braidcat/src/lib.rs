//! Braid words, the monoidal structure and braiding of the braid groupoid,
//! morphisms of its bracket category, families `ς_n: F_n → B_{n+1}`, and
//! braid-word equality by evaluation in faithful representations.
//!
//! Conventions:
//! * a word's letters are stored as written; `[a, b]` is `σ_a σ_b`, which as
//!   a composite of maps applies `σ_b` first (right to left);
//! * `u ♮ v` shifts the letters of `v` by the strand count of `u`;
//! * a bracket morphism `[n′−n, σ]: n → n′` embeds `n` onto the last `n`
//!   strands of `n′`.

mod equal;
mod error;
mod reps;
mod sigma;
mod ubeta;
mod word;

pub use equal::{
    braid_equal, burau_symbolic, eval_mod_p, seeded_mod_p_points, BraidEquality, BraidOracle, Witness, ZLaurent,
    MODULUS,
};
pub use error::BraidError;
pub use reps::{burau_generator, lk_dim, lk_generator, lk_image, lk_index};
pub use sigma::{sigma_eval, SigmaFamily};
pub use ubeta::{artin_word_action, ubeta_compose, ubeta_equal, ubeta_monoidal, MorphismWitness, UBetaMorphism};
pub use word::{braiding, half_twist, words_up_to, BraidWord};
