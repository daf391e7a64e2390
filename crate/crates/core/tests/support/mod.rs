pub mod naive_gb;
pub mod raw;
