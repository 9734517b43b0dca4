#![allow(clippy::needless_range_loop)]

pub mod combinatorics;
pub mod ct;
pub mod error;
pub mod hermite_laguerre;
pub mod jack;
pub mod kernels;
pub mod linalg;
pub mod numeric;
pub mod operators;
pub mod poly;
pub mod rational;
pub mod verify;
