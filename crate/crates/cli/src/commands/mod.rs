pub mod accuracy;
pub mod eval;
pub mod gp_demo;
pub mod psd;
pub mod table;
