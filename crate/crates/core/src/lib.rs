pub mod chemo;
pub mod cli;
pub mod electrical;
pub mod field;
pub mod fluid;
pub mod lee;
pub mod maze;
pub mod render;
