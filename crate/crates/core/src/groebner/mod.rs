//! The circular weight order and reduction modulo switch binomials.

mod contraction;
mod order;
mod reduce;

pub use contraction::{contract, recolor};
pub use order::{crosses, weight, Binomial, Intersection, Monomial, WeightOrder};
pub use reduce::{
    find_noncrossing_samecolor_pair, in_ideal, normal_form, NormalForm, PairWitness, Rewrite,
};
