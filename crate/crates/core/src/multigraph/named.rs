//! Small named graphs used throughout tests, the catalog and the CLI.

use super::Multigraph;

/// Two vertices joined by three parallel edges.
pub fn theta() -> Multigraph {
    Multigraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
}

/// Two vertices joined by `k` parallel edges.
pub fn dipole(k: usize) -> Multigraph {
    Multigraph::new(2, &vec![(0, 1); k]).unwrap()
}

/// One vertex carrying `k` loops.
pub fn bouquet(k: usize) -> Multigraph {
    Multigraph::new(1, &vec![(0, 0); k]).unwrap()
}

/// Path with `n` vertices.
pub fn path(n: usize) -> Multigraph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Multigraph::new(n, &pairs).unwrap()
}

/// Cycle on `n >= 1` vertices (a loop when `n == 1`).
pub fn cycle(n: usize) -> Multigraph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::new(n, &pairs).unwrap()
}

pub fn complete(n: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    Multigraph::new(n, &pairs).unwrap()
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram `5+i -- 5+(i+2)%5`.
pub fn petersen() -> Multigraph {
    let mut pairs: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    pairs.extend((0..5).map(|i| (i, i + 5)));
    pairs.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Multigraph::new(10, &pairs).unwrap()
}

/// Two loops joined by an edge: both loops sit at degree-3 vertices.
pub fn handcuff() -> Multigraph {
    Multigraph::new(2, &[(0, 0), (0, 1), (1, 1)]).unwrap()
}
