//! Exact Kauffman bracket skein computations on punctured disks and annuli.

#![allow(clippy::result_large_err)]

pub mod annulus;
pub mod chebyshev;
pub mod diagram;
pub mod rings;
pub mod tl;
pub mod verify;
