//! Count tables for every Bell/Stirling variant, closed forms, generating
//! function checks, the numeric identities tying the variants together,
//! Dobinski-type sums with rigorous tail bounds, asymptotic trend reports,
//! the adjacent-pair colouring count, and OEIS prefix checks.

mod analytic;
mod colourings;
mod gfs;
mod identities;
mod oeis;
mod tables;

pub use analytic::{
    bell_prime_w_trend, dobinski, lambert_w, round_to_nearest, stir_b_prime_trend,
    stir_prime_trend, AsymptoticReport, DobinskiSum, DobinskiVariant,
};
pub use colourings::q_colourings;
pub use gfs::{egf_check, ogf_check, GfReport};
pub use identities::{all_identities, verify_identity, IdentityName, IdentityReport};
pub use oeis::{oeis_check, OeisCheck};
pub use tables::{closed_form, table, CountTable, Method, Variant};
