//! Exact ruler-and-compass geometry over constructible reals, a term language
//! for Skolemized constructions, bound certificates for the parallel axiom
//! and a non-Archimedean Dehn plane.

pub mod dehnfield;
pub mod exactnum;
pub mod field;
pub mod geoplane;
pub mod herbrand;
pub mod polyroots;
pub mod sampling;
pub mod termlang;
