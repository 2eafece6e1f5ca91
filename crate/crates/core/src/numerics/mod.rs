//! Numerical backends shared by the physics modules: adaptive quadrature and
//! the sine/cosine-integral special functions.

pub mod quadrature;
pub mod special;

pub use quadrature::{IntegralEstimate, integrate};
pub use special::{EULER_GAMMA, ci, cin, si};
