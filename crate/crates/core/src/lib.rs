//! Binomial edge ideals of finite simple graphs: minimal primes from cut
//! sets, Gröbner bases from admissible paths, depth and Cohen-Macaulayness
//! through the squarefree initial ideal, and executable checks of the gluing
//! and cone constructions.

pub mod catalog;
pub mod graph;
pub mod groebner;
pub mod homology;
pub mod io;
pub mod primes;
pub mod report;
pub mod verify;
