pub mod actions;
pub mod arrangement;
pub mod aut;
pub mod config;
pub mod connection;
pub mod error;
pub mod graph;
pub mod indsets;
pub mod perm;
pub mod schreier;
pub mod suite;
pub mod tuple;
