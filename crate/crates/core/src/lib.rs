//! Exact classification engine for quiver types (M, P, s) of twisted graded
//! Calabi-Yau algebras on four vertices.

pub mod cycpoly;
pub mod classify;
pub mod realize;
pub mod typealg;
