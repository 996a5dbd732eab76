pub mod cps;
pub mod focused;
pub mod fvect;
pub mod nl;
pub mod oracle;
pub mod pipeline;
pub mod scalar;
pub mod suites;
pub mod types;
