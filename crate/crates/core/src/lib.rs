//! Kirillov-Reshetikhin crystals, affine Weyl group combinatorics and the
//! Demazure/energy machinery around them.

pub mod cartan;
pub mod cli;
pub mod crystal;
pub mod demazure;
pub mod dynkin;
pub mod error;
pub mod hwpaths;
pub mod kr;
pub mod kr_a;
pub mod rational;
pub mod report;
pub mod rmatrix;
pub mod suites;
pub mod tableau;
pub mod virtual_a2;
pub mod weyl;

pub use cartan::{AffineType, AffineWeight, CartanDatum, ClassicalWeight, Family, Node};
pub use error::{KrError, Result};
pub use rational::Q;
