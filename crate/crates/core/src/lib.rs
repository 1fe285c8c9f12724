//! Structural machinery around shortest odd holes: attachment
//! classification, constructive domination of major vertices, certified
//! neighborhood colorings within 21*tau (12*tau in improved mode), and a
//! peel-and-recurse whole-graph colorer, all cross-checked against
//! brute-force oracles at desk scale.

pub mod attach;
pub mod bound;
pub mod cert;
pub mod color;
pub mod dominate;
pub mod fuzz;
pub mod generate;
pub mod graph;
pub mod hole;
pub mod oracle;
