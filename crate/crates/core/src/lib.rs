//! Lattice-point antichains, their upsets and downsets, and the socle
//! operators that convert between generators of a monomial ideal and the
//! maximal standard monomials (its socle).
//!
//! ```
//! use monideal::lattice::{pt, Antichain};
//! use monideal::reconstruct::{zero_dim_ideal_from_socle, socle_of_generators};
//!
//! let socle = Antichain::new(vec![pt(&[2, 2, 3])]).unwrap();
//! let gens = zero_dim_ideal_from_socle(&socle).unwrap();
//! assert_eq!(gens.len(), 3);
//! assert_eq!(socle_of_generators(&gens).unwrap(), socle);
//! ```

pub mod augment;
pub mod corner;
pub mod error;
pub mod generic;
pub mod lattice;
pub mod oracle;
pub mod reconstruct;
pub mod sample;
pub mod updown;

pub use corner::{Orientation, Strategy};
pub use error::{Error, Result};
pub use lattice::{Antichain, LatticePoint};
pub use updown::{DownSet, UpSet};
