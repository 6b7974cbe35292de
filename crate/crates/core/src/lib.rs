//! Eulerian subgraph problems and the Hamiltonian index on graphs of
//! bounded treewidth.
//!
//! The solvers run a dynamic program over a nice tree decomposition whose
//! states are partitions of bag subsets, kept small with rank-based
//! representative-set reduction. On top of the four decision procedures
//! (Eulerian Steiner subgraph, spanning and dominating Eulerian subgraph,
//! Hamiltonian cycle) sits an exact computation of the Hamiltonian index
//! h(G), the least r such that the r-fold line graph of G is Hamiltonian.

pub mod dp;
pub mod graph;
pub mod hindex;
pub mod io;
pub mod oracle;
pub mod partition;
pub mod repset;
pub mod treedec;
