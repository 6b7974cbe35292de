//! C ABI for the hamindex solvers: opaque graph handles, integer error
//! codes, and flat array arguments. The header is generated by cbindgen at
//! build time (see include/hamindex.h).

use std::collections::HashSet;
use std::ptr;

use hamindex::dp::{self, SolveConfig, SolveError};
use hamindex::graph::{Graph, VertexId};
use hamindex::hindex::{hamiltonian_index, HindexError, HindexOutcome};
use hamindex::treedec::heuristic_decompose;

/// Status codes returned by every fallible function.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamindexStatus {
    Ok = 0,
    /// A required pointer was null or a length inconsistent.
    NullArgument = 1,
    /// The graph construction or input data was invalid.
    InvalidInput = 2,
    /// A resource cap (bag width, recursion fuel) was exceeded.
    ResourceLimit = 3,
    /// The Hamiltonian index is undefined for path graphs.
    PathInput = 4,
    /// The graph is disconnected where a connected one is required.
    Disconnected = 5,
}

/// Opaque graph handle.
pub struct HamindexGraph {
    g: Graph,
}

fn solve_status(e: &SolveError) -> HamindexStatus {
    if e.is_resource() {
        HamindexStatus::ResourceLimit
    } else {
        HamindexStatus::InvalidInput
    }
}

fn hindex_status(e: &HindexError) -> HamindexStatus {
    match e {
        HindexError::PathInput => HamindexStatus::PathInput,
        HindexError::Disconnected => HamindexStatus::Disconnected,
        HindexError::Stuck => HamindexStatus::ResourceLimit,
        HindexError::Solve(s) => solve_status(s),
        _ => HamindexStatus::InvalidInput,
    }
}

/// Build a graph on `num_vertices` vertices from `num_edges` pairs laid out
/// as [u0, v0, u1, v1, ...], 0-indexed. Repeated pairs are parallel edges.
/// On success writes a handle to `out`; free it with hamindex_graph_free.
///
/// # Safety
/// `edges` must point to 2 * num_edges readable u32 values (or be null when
/// num_edges is 0) and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hamindex_graph_new(
    num_vertices: u32,
    edges: *const u32,
    num_edges: usize,
    out: *mut *mut HamindexGraph,
) -> HamindexStatus {
    if out.is_null() || (edges.is_null() && num_edges > 0) {
        return HamindexStatus::NullArgument;
    }
    let raw = if num_edges == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(edges, num_edges * 2)
    };
    let pairs: Vec<(usize, usize)> = raw
        .chunks_exact(2)
        .map(|c| (c[0] as usize, c[1] as usize))
        .collect();
    match Graph::new(num_vertices as usize, &pairs) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(HamindexGraph { g }));
            HamindexStatus::Ok
        }
        Err(_) => {
            *out = ptr::null_mut();
            HamindexStatus::InvalidInput
        }
    }
}

/// Free a graph handle. Null is a no-op.
///
/// # Safety
/// `g` must be a handle from hamindex_graph_new, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn hamindex_graph_free(g: *mut HamindexGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

unsafe fn with_answer(
    g: *const HamindexGraph,
    answer: *mut i32,
    f: impl FnOnce(&Graph) -> Result<bool, SolveError>,
) -> HamindexStatus {
    if g.is_null() || answer.is_null() {
        return HamindexStatus::NullArgument;
    }
    match f(&(*g).g) {
        Ok(yes) => {
            *answer = yes as i32;
            HamindexStatus::Ok
        }
        Err(e) => solve_status(&e),
    }
}

/// Eulerian Steiner subgraph: is there an Eulerian subgraph containing all
/// `num_terminals` terminals? Writes 1/0 to `answer`.
///
/// # Safety
/// `g` must be a live handle; `terminals` must point to `num_terminals`
/// readable u32 values (or be null when that count is 0); `answer` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hamindex_solve_ess(
    g: *const HamindexGraph,
    terminals: *const u32,
    num_terminals: usize,
    answer: *mut i32,
) -> HamindexStatus {
    if terminals.is_null() && num_terminals > 0 {
        return HamindexStatus::NullArgument;
    }
    let k: Vec<VertexId> = if num_terminals == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(terminals, num_terminals)
            .iter()
            .map(|&t| VertexId(t as usize))
            .collect()
    };
    with_answer(g, answer, |graph| {
        let td = heuristic_decompose(graph);
        dp::solve_ess(graph, &k, &td, &SolveConfig::default()).map(|(a, _)| a)
    })
}

/// Spanning Eulerian subgraph (supereulerian test). Writes 1/0 to `answer`.
///
/// # Safety
/// `g` must be a live handle and `answer` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hamindex_solve_ses(
    g: *const HamindexGraph,
    answer: *mut i32,
) -> HamindexStatus {
    with_answer(g, answer, |graph| {
        let td = heuristic_decompose(graph);
        dp::solve_ses(graph, &td, &SolveConfig::default()).map(|(a, _)| a)
    })
}

/// Dominating Eulerian subgraph. Writes 1/0 to `answer`.
///
/// # Safety
/// `g` must be a live handle and `answer` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hamindex_solve_des(
    g: *const HamindexGraph,
    answer: *mut i32,
) -> HamindexStatus {
    with_answer(g, answer, |graph| {
        let td = heuristic_decompose(graph);
        dp::solve_des(graph, &td, &SolveConfig::default()).map(|(a, _)| a)
    })
}

/// Hamiltonian cycle. Writes 1/0 to `answer`.
///
/// # Safety
/// `g` must be a live handle and `answer` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hamindex_solve_hc(
    g: *const HamindexGraph,
    answer: *mut i32,
) -> HamindexStatus {
    with_answer(g, answer, |graph| {
        let td = heuristic_decompose(graph);
        dp::solve_hc(graph, &td, &SolveConfig::default()).map(|(a, _)| a)
    })
}

/// Exact Hamiltonian index h(G). Writes the value to `out_h`.
///
/// # Safety
/// `g` must be a live handle and `out_h` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hamindex_index(
    g: *const HamindexGraph,
    out_h: *mut u64,
) -> HamindexStatus {
    if g.is_null() || out_h.is_null() {
        return HamindexStatus::NullArgument;
    }
    match hamiltonian_index(&(*g).g, None, None, &SolveConfig::default()) {
        Ok((HindexOutcome::Exact(h), _)) => {
            *out_h = h as u64;
            HamindexStatus::Ok
        }
        Ok(_) => HamindexStatus::InvalidInput,
        Err(e) => hindex_status(&e),
    }
}

/// Decide h(G) <= r. Writes 1/0 to `answer`.
///
/// # Safety
/// `g` must be a live handle and `answer` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hamindex_index_at_most(
    g: *const HamindexGraph,
    r: u64,
    answer: *mut i32,
) -> HamindexStatus {
    if g.is_null() || answer.is_null() {
        return HamindexStatus::NullArgument;
    }
    match hamiltonian_index(&(*g).g, None, Some(r as usize), &SolveConfig::default()) {
        Ok((out, _)) => {
            *answer = matches!(out, HindexOutcome::Exact(_) | HindexOutcome::AtMostCap) as i32;
            HamindexStatus::Ok
        }
        Err(e) => hindex_status(&e),
    }
}

/// Extract a witness subgraph for the spanning-Eulerian problem as edge
/// indices into the input edge list. Writes at most `cap` indices to `buf`
/// and the full count to `count`; returns InvalidInput when no witness
/// exists.
///
/// # Safety
/// `g` must be a live handle, `buf` must hold `cap` writable u64 values
/// (or be null when cap is 0), and `count` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hamindex_ses_witness(
    g: *const HamindexGraph,
    buf: *mut u64,
    cap: usize,
    count: *mut usize,
) -> HamindexStatus {
    if g.is_null() || count.is_null() || (buf.is_null() && cap > 0) {
        return HamindexStatus::NullArgument;
    }
    let graph = &(*g).g;
    let td = heuristic_decompose(graph);
    match dp::extract_witness(graph, &dp::Problem::Ses, &td, &SolveConfig::default()) {
        Ok((Some(w), _)) => {
            let edges: HashSet<usize> = w.edges.iter().map(|e| e.0).collect();
            let mut sorted: Vec<usize> = edges.into_iter().collect();
            sorted.sort_unstable();
            *count = sorted.len();
            for (i, e) in sorted.iter().take(cap).enumerate() {
                *buf.add(i) = *e as u64;
            }
            HamindexStatus::Ok
        }
        Ok((None, _)) => HamindexStatus::InvalidInput,
        Err(e) => solve_status(&e),
    }
}
