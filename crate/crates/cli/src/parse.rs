//! Text formats for graphs, set families and sparse functions.
//!
//! Vertices and set elements are 1-indexed on input. Sets are written
//! `{1,3,4}`; `{}` is the empty set.

use num_bigint::BigInt;
use trimlat::{Graph, SetFamily, SparseTable, SubsetMask, Universe};

use crate::CliError;

/// An edge list before it is turned into a [`Graph`]; lets the caller apply
/// size guards first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    /// 0-based endpoints, as read; may contain duplicates.
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn into_graph(self) -> Result<Graph, CliError> {
        Ok(Graph::from_edges(self.n, self.edges)?)
    }
}

fn err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, message: message.into() }
}

fn number(token: &str, line: usize) -> Result<usize, CliError> {
    token.parse().map_err(|_| err(line, format!("expected a non-negative integer, found `{token}`")))
}

fn vertex(token: &str, n: Option<usize>, line: usize) -> Result<usize, CliError> {
    let v = number(token, line)?;
    if v == 0 {
        return Err(err(line, "vertices are numbered from 1"));
    }
    if let Some(n) = n {
        if v > n {
            return Err(err(line, format!("vertex {v} out of range 1..={n}")));
        }
    }
    Ok(v - 1)
}

/// Reads `p edge n m` / `e u v` lines, or bare `u v` lines. Lines starting
/// with `c` or `#` are comments.
pub fn parse_edge_list(input: &str) -> Result<EdgeList, CliError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_seen = 0;
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let pair = match tokens.as_slice() {
            [] => continue,
            [c, ..] if *c == "c" || c.starts_with('#') => continue,
            ["p", _format, count, _m] => {
                if n.is_some() || !edges.is_empty() {
                    return Err(err(line, "problem line must come first and appear once"));
                }
                n = Some(number(count, line)?);
                continue;
            }
            ["p", ..] => return Err(err(line, "expected `p edge <n> <m>`")),
            ["e", u, v] | [u, v] => (vertex(u, n, line)?, vertex(v, n, line)?),
            _ => return Err(err(line, format!("cannot read `{}`", raw.trim()))),
        };
        if pair.0 == pair.1 {
            return Err(err(line, format!("self-loop on vertex {}", pair.0 + 1)));
        }
        max_seen = max_seen.max(pair.0.max(pair.1) + 1);
        edges.push(pair);
    }
    let n = n.unwrap_or(max_seen);
    if n == 0 {
        return Err(err(0, "no vertices"));
    }
    Ok(EdgeList { n, edges })
}

/// [`parse_edge_list`] followed by graph construction.
pub fn parse_graph(input: &str) -> Result<Graph, CliError> {
    parse_edge_list(input)?.into_graph()
}

/// Parses `{1,3}` into 1-based elements.
pub fn parse_set(token: &str) -> Option<Vec<usize>> {
    let inner = token.strip_prefix('{')?.strip_suffix('}')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|t| t.trim().parse().ok()).collect()
}

fn mask_in(token: &str, universe: Universe, line: usize) -> Result<SubsetMask, CliError> {
    let elements = parse_set(token).ok_or_else(|| err(line, format!("expected a set like {{1,2}}, found `{token}`")))?;
    let n = universe.size();
    let mut mask = SubsetMask::EMPTY;
    for e in elements {
        if e == 0 || e > n {
            return Err(err(line, format!("element {e} out of range 1..={n}")));
        }
        mask = mask.with(e - 1);
    }
    Ok(mask)
}

/// Splits off the `universe <n>` header, returning the universe and the
/// remaining numbered, non-comment lines.
type NumberedLines<'a> = Vec<(usize, &'a str)>;

fn with_universe(input: &str) -> Result<(Universe, NumberedLines<'_>), CliError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or_else(|| err(0, "empty input"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["universe", n] => number(n, line)?,
        _ => return Err(err(line, "expected `universe <n>` header")),
    };
    let universe = Universe::new(n)?;
    Ok((universe, lines.collect()))
}

/// A `universe <n>` header followed by one set per line. Repeated sets are
/// rejected.
pub fn parse_family(input: &str) -> Result<SetFamily, CliError> {
    let (universe, lines) = with_universe(input)?;
    let mut members = Vec::with_capacity(lines.len());
    for (line, text) in lines {
        let mask = mask_in(text, universe, line)?;
        if members.contains(&mask) {
            return Err(err(line, format!("repeated member {mask}")));
        }
        members.push(mask);
    }
    Ok(SetFamily::new(universe, members)?)
}

/// A `universe <n>` header followed by `<set> <integer>` lines.
pub fn parse_function(input: &str) -> Result<SparseTable<BigInt>, CliError> {
    let (universe, lines) = with_universe(input)?;
    let mut table = SparseTable::new(universe);
    for (line, text) in lines {
        let (set, value) = text
            .rsplit_once(char::is_whitespace)
            .ok_or_else(|| err(line, "expected `<set> <value>`"))?;
        let mask = mask_in(set.trim(), universe, line)?;
        let value: BigInt = value.parse().map_err(|_| err(line, format!("bad integer `{value}`")))?;
        if table.insert(mask, value)?.is_some() {
            return Err(err(line, format!("repeated set {mask}")));
        }
    }
    Ok(table)
}
