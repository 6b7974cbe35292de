//! Text formats: PACE-style `.gr` graphs, PACE-2017 `.td` tree
//! decompositions, and a small `.t` terminal-list extension. Vertices are
//! 1-indexed on disk and 0-indexed in memory. Duplicate edge lines in `.gr`
//! encode parallel edges.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};
use crate::treedec::TreeDecomposition;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("missing header line")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse(line, msg.into())
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize, IoError> {
    tok.parse()
        .map_err(|_| bad(line, format!("bad {what} '{tok}'")))
}

fn vertex_1indexed(line: usize, tok: &str, n: usize) -> Result<usize, IoError> {
    let v = parse_usize(line, tok, "vertex")?;
    if v == 0 || v > n {
        return Err(bad(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

/// Parse a `.gr` graph: `c` comments, header `p tw <n> <m>`, then one
/// `u v` line per edge.
pub fn parse_gr(input: &str) -> Result<Graph, IoError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (ln, raw) in input.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if line.starts_with('p') {
            if header.is_some() {
                return Err(bad(ln, "duplicate header"));
            }
            if toks.len() != 4 || toks[1] != "tw" {
                return Err(bad(ln, "expected 'p tw <n> <m>'"));
            }
            let n = parse_usize(ln, toks[2], "vertex count")?;
            let m = parse_usize(ln, toks[3], "edge count")?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(bad(ln, "edge before header"));
        };
        if toks.len() != 2 {
            return Err(bad(ln, "expected 'u v'"));
        }
        let u = vertex_1indexed(ln, toks[0], n)?;
        let v = vertex_1indexed(ln, toks[1], n)?;
        edges.push((u, v));
    }
    let (n, m) = header.ok_or(IoError::MissingHeader)?;
    if edges.len() != m {
        return Err(bad(0, format!("header claims {m} edges, found {}", edges.len())));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_gr(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p tw {} {}", g.num_vertices(), g.num_edges()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", u.0 + 1, v.0 + 1).unwrap();
    }
    out
}

/// Parse a `.td` decomposition: header `s td <bags> <max-bag-size> <n>`,
/// bag lines `b <id> <v...>`, then tree-edge lines `<i> <j>` on bag ids.
pub fn parse_td(input: &str) -> Result<TreeDecomposition, IoError> {
    let mut header: Option<(usize, usize)> = None; // (bags, n)
    let mut bags: Vec<Option<Vec<VertexId>>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (ln, raw) in input.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if line.starts_with('s') {
            if header.is_some() {
                return Err(bad(ln, "duplicate header"));
            }
            if toks.len() != 5 || toks[1] != "td" {
                return Err(bad(ln, "expected 's td <bags> <max-bag-size> <n>'"));
            }
            let nb = parse_usize(ln, toks[2], "bag count")?;
            let n = parse_usize(ln, toks[4], "vertex count")?;
            bags = vec![None; nb];
            header = Some((nb, n));
            continue;
        }
        let Some((nb, n)) = header else {
            return Err(bad(ln, "content before header"));
        };
        if line.starts_with('b') {
            if toks.len() < 2 {
                return Err(bad(ln, "expected 'b <id> <v...>'"));
            }
            let id = parse_usize(ln, toks[1], "bag id")?;
            if id == 0 || id > nb {
                return Err(bad(ln, format!("bag id {id} out of range 1..={nb}")));
            }
            if bags[id - 1].is_some() {
                return Err(bad(ln, format!("duplicate bag {id}")));
            }
            let mut bag = Vec::new();
            for tok in &toks[2..] {
                bag.push(VertexId(vertex_1indexed(ln, tok, n)?));
            }
            bags[id - 1] = Some(bag);
            continue;
        }
        if toks.len() != 2 {
            return Err(bad(ln, "expected tree edge '<i> <j>'"));
        }
        let i = parse_usize(ln, toks[0], "bag id")?;
        let j = parse_usize(ln, toks[1], "bag id")?;
        for id in [i, j] {
            if id == 0 || id > nb {
                return Err(bad(ln, format!("bag id {id} out of range 1..={nb}")));
            }
        }
        edges.push((i - 1, j - 1));
    }
    if header.is_none() {
        return Err(IoError::MissingHeader);
    }
    let bags: Vec<Vec<VertexId>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| bad(0, format!("bag {} never defined", i + 1))))
        .collect::<Result<_, _>>()?;
    Ok(TreeDecomposition::new(bags, edges))
}

/// Serialize a decomposition; `n` is the vertex count of the underlying
/// graph, required by the header.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let max_bag = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    writeln!(out, "s td {} {} {}", td.bags.len(), max_bag, n).unwrap();
    for (i, bag) in td.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag {
            write!(out, " {}", v.0 + 1).unwrap();
        }
        out.push('\n');
    }
    for &(i, j) in &td.edges {
        writeln!(out, "{} {}", i + 1, j + 1).unwrap();
    }
    out
}

/// Parse a `.t` terminal file: comments, then one line `t <k> <v...>`.
pub fn parse_terminals(input: &str) -> Result<Vec<VertexId>, IoError> {
    for (ln, raw) in input.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] != "t" {
            return Err(bad(ln, "expected 't <k> <v...>'"));
        }
        if toks.len() < 2 {
            return Err(bad(ln, "expected 't <k> <v...>'"));
        }
        let k = parse_usize(ln, toks[1], "terminal count")?;
        if toks.len() != 2 + k {
            return Err(bad(ln, format!("expected {k} terminals, found {}", toks.len() - 2)));
        }
        let mut out = Vec::with_capacity(k);
        for tok in &toks[2..] {
            let v = parse_usize(ln, tok, "terminal")?;
            if v == 0 {
                return Err(bad(ln, "terminals are 1-indexed"));
            }
            out.push(VertexId(v - 1));
        }
        return Ok(out);
    }
    Err(IoError::MissingHeader)
}

pub fn write_terminals(k: &[VertexId]) -> String {
    let mut out = format!("t {}", k.len());
    for v in k {
        write!(out, " {}", v.0 + 1).unwrap();
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treedec::heuristic_decompose;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gr_parse_basics() {
        let g = parse_gr("c a triangle\np tw 3 3\n1 2\n2 3\n3 1\n").unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.num_edges(), 3);
        // Duplicate lines are parallel edges.
        let g = parse_gr("p tw 2 2\n1 2\n1 2\n").unwrap();
        assert_eq!(g.num_edges(), 2);
        assert!(parse_gr("p tw 2 1\n1 3\n").is_err());
        assert!(parse_gr("p tw 2 2\n1 2\n").is_err());
        assert!(parse_gr("1 2\np tw 2 1\n").is_err());
        assert!(parse_gr("").is_err());
    }

    #[test]
    fn td_parse_basics() {
        let td = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n").unwrap();
        assert_eq!(td.bags.len(), 2);
        assert_eq!(td.width(), 1);
        assert!(parse_td("s td 1 1 1\nb 1 2\n").is_err());
        assert!(parse_td("s td 2 1 1\nb 1 1\n").is_err());
    }

    #[test]
    fn terminals_parse() {
        assert_eq!(
            parse_terminals("c hi\nt 2 1 4\n").unwrap(),
            vec![VertexId(0), VertexId(3)]
        );
        assert!(parse_terminals("t 2 1\n").is_err());
        assert!(parse_terminals("").is_err());
    }

    #[test]
    fn round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(1..10);
            let m = rng.gen_range(0..15);
            let edges: Vec<(usize, usize)> = (0..m)
                .filter_map(|_| {
                    let u = rng.gen_range(0..n);
                    let v = rng.gen_range(0..n);
                    (u != v).then_some((u, v))
                })
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            let back = parse_gr(&write_gr(&g)).unwrap();
            assert_eq!(back.vertices(), g.vertices());
            assert_eq!(back.edges(), g.edges());

            let td = heuristic_decompose(&g);
            let back = parse_td(&write_td(&td, n)).unwrap();
            assert_eq!(back.bags, td.bags);
            assert_eq!(back.edges, td.edges);

            let k: Vec<VertexId> = g
                .vertices()
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            assert_eq!(parse_terminals(&write_terminals(&k)).unwrap(), k);
        }
    }
}
