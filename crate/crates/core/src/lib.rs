//! Exact computational workbench for abelian ramified covers.
//!
//! The crate is organized around the combinatorial data of a `D(A)`-cover
//! for a finite abelian group `A`:
//!
//! * [`ring`] — arbitrary-precision exact arithmetic: integers, rationals,
//!   prime fields, sparse multivariate polynomials, number-ring quotients,
//!   single-element localizations, finite algebras, and Smith normal form.
//! * [`group`] — finite abelian groups as products of cyclic groups.
//! * [`fpmonoid`] — finitely presented commutative monoids with a decidable
//!   word problem via commutative rewriting completion.
//! * [`cocycle`] — symmetric normalized 2-cocycles valued in commutative
//!   monoids, free extensions, and ramification epsilon tables.
//! * [`universal`] — the universal monoids `P_A`, `Q_A` and the maps
//!   between them.
//! * [`cover`] — building data for covers: wedges, torsors, discriminants,
//!   branch orders, and standard cyclic covers.
//! * [`hopf`] — group algebras over finite local bases, Hopf ideals, and
//!   group-like elements of quotients.
//! * [`kahler`] — relative Kähler differentials of a cover algebra and
//!   annihilator computations.
//! * [`io`] — the JSON file formats shared with the command line tool.

pub mod cocycle;
pub mod cover;
pub mod fpmonoid;
pub mod group;
pub mod hopf;
pub mod io;
pub mod kahler;
pub mod ring;
pub mod universal;

pub use group::{AbelianGroup, GroupElem, GroupHom};
pub use ring::{RElem, Ring, RingError, Scalar};
