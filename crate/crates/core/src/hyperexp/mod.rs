//! Hyperexponential terms: representation, validation, logarithmic
//! derivatives, derivative quotients, and the parameters that summarize
//! their numerator growth.

pub mod numerators;
pub mod params;
pub mod term;

pub use numerators::{
    derivative_quotient, derivative_quotients, lifted_numerators, numerators, TermData,
};
pub use params::{
    greek_params, greek_params_with, numerator_profile, GreekParams, NumeratorProfile,
};
pub use term::{validate, Factor, HyperexpTerm, TermError, TermWarning};
