pub mod arith;
pub mod cyclo;
pub mod field;
pub mod rootsys;
pub mod qgraph;
pub mod expr;
pub mod report;
pub mod cli;
