use alloc::vec::Vec;

use super::IncompatibilityGraph;

/// The symmetries of the square board that preserve the relation, as
/// permutations of square indices. Always contains the identity first.
/// Graphs without a board layout only get the identity.
pub fn board_automorphisms(graph: &IncompatibilityGraph) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..graph.placements()).collect();
    let Some(n) = graph.board_side() else {
        return alloc::vec![identity];
    };
    let m = n - 1;
    type Map = fn(usize, usize, usize) -> (usize, usize);
    let maps: [Map; 7] = [
        |r, c, m| (c, m - r),
        |r, c, m| (m - r, m - c),
        |r, c, m| (m - c, r),
        |r, c, m| (r, m - c),
        |r, c, m| (m - r, c),
        |r, c, _| (c, r),
        |r, c, m| (m - c, m - r),
    ];
    let mut out = alloc::vec![identity];
    for f in maps {
        let perm: Vec<usize> = (0..n * n)
            .map(|s| {
                let (r, c) = f(s / n, s % n, m);
                r * n + c
            })
            .collect();
        let preserves = graph.pairs().all(|(p, t)| graph.forbids(perm[p], perm[t]));
        if preserves {
            out.push(perm);
        }
    }
    out
}

/// Orbits of the group generated by `perms`, largest first, ties by
/// smallest member. Each orbit is sorted.
pub fn orbits(size: usize, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = alloc::vec![false; size];
    let mut out = Vec::new();
    for s in 0..size {
        if seen[s] {
            continue;
        }
        let mut orbit = alloc::vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for p in perms {
                if !seen[p[x]] {
                    seen[p[x]] = true;
                    orbit.push(p[x]);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    out
}
