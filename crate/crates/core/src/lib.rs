pub mod cli;
pub mod families;
pub mod gfparse;
pub mod hookcalc;
pub mod rational;
pub mod series;
pub mod treeoracle;
