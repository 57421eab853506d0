//! Geodesics in Baumslag–Solitar groups `BS(p, q) = <a, t | t a^p t⁻¹ = a^q>`.
//!
//! Words are handled in alternating form `α₀ θ₁ α₁ ⋯ θₖ αₖ` with big-integer
//! coefficients. The crate computes Britton reductions, length-lexicographical
//! normal forms of horocyclic elements, and peak normal forms (geodesics) for
//! hills in every `BS(p, q)` and for all elements when `p | q`.
//!
//! ```
//! use bsgeo::{parse_alt, Group};
//!
//! let g = Group::new(1, 3).unwrap();
//! let w = parse_alt("7t14T-2tt9T2T23").unwrap();
//! assert_eq!(g.geodesic_length(&w).unwrap(), 13);
//! assert_eq!(g.llnf_horocyclic(&w).unwrap().notation_folded(), "t^4 2TTT-1T-2");
//! ```

pub mod britton;
pub mod canonical;
pub mod divides;
pub mod error;
pub mod group;
pub mod horocyclic;
pub mod oracle;
pub mod params;
pub mod pnf;
pub mod word;

pub use britton::{
    britton_reduce, classify, decompose, is_britton_reduced, t_sequence, Classification,
    Decomposition, Label,
};
pub use canonical::{canonical_form, equal, CanonicalForm};
pub use divides::{StandardValley, ValleyTree};
pub use error::{Error, Result};
pub use group::Group;
pub use horocyclic::{greedy_slope, BaseTable, DpMatrix, Slope};
pub use oracle::BallIndex;
pub use params::GroupParams;
pub use pnf::{BrittonPnf, FullPnf};
pub use word::{
    cmp_delta, cmp_delta_int, cmp_ll, parse_alt, parse_word, AltWord, Letter, RawWord, Theta,
};
