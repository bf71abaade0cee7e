//! Exact maximum bipartite matching (Hopcroft-Karp).
//!
//! Used as the ground truth for `μ(G)` and for picking a largest
//! vertex-disjoint subset of augmenting paths. Vertices are scanned in index
//! order and adjacency lists keep input order, so the result is a pure
//! function of the input.

use std::collections::VecDeque;

use crate::graph::{BipartiteGraph, Edge, Matching};
use crate::stream::EdgeSource;

const NIL: u32 = u32::MAX;
const INF: u32 = u32::MAX;

/// A maximum matching of `g`.
pub fn maximum_matching(g: &BipartiteGraph) -> Matching {
    let pairs: Vec<(u32, u32)> = g.edges().iter().map(|e| (e.a, e.b)).collect();
    hopcroft_karp(g.n_a(), g.n_b(), &pairs)
        .into_iter()
        .map(|i| g.edges()[i])
        .collect()
}

/// `μ` of any edge source, by collecting its edges first.
pub fn matching_number<S: EdgeSource + ?Sized>(source: &S) -> usize {
    let pairs: Vec<(u32, u32)> = source.edges().map(|e| (e.a, e.b)).collect();
    hopcroft_karp(source.n_a(), source.n_b(), &pairs).len()
}

/// Maximum matching on an arbitrary (multi-)edge list between `0..n_left`
/// and `0..n_right`. Returns positions in `edges` of the chosen edges, sorted
/// by left endpoint.
pub fn hopcroft_karp(n_left: u32, n_right: u32, edges: &[(u32, u32)]) -> Vec<usize> {
    let nl = n_left as usize;
    let nr = n_right as usize;

    // CSR adjacency, input order preserved within each row.
    let mut start = vec![0u32; nl + 1];
    for &(l, _) in edges {
        start[l as usize + 1] += 1;
    }
    for i in 0..nl {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut adj = vec![0u32; edges.len()];
    for (pos, &(l, _)) in edges.iter().enumerate() {
        adj[fill[l as usize] as usize] = pos as u32;
        fill[l as usize] += 1;
    }

    let mut mate_l = vec![NIL; nl]; // edge position
    let mut mate_r = vec![NIL; nr]; // left vertex
    let mut dist = vec![INF; nl];
    let mut queue = VecDeque::new();
    let mut cursor = vec![0u32; nl];
    let mut stack: Vec<u32> = Vec::new();

    // Greedy warm start.
    for l in 0..nl {
        for &pos in &adj[start[l] as usize..start[l + 1] as usize] {
            let r = edges[pos as usize].1 as usize;
            if mate_r[r] == NIL {
                mate_r[r] = l as u32;
                mate_l[l] = pos;
                break;
            }
        }
    }

    loop {
        // BFS layering from free left vertices.
        queue.clear();
        for l in 0..nl {
            if mate_l[l] == NIL {
                dist[l] = 0;
                queue.push_back(l as u32);
            } else {
                dist[l] = INF;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            let l = l as usize;
            for &pos in &adj[start[l] as usize..start[l + 1] as usize] {
                let r = edges[pos as usize].1 as usize;
                let next = mate_r[r];
                if next == NIL {
                    found = true;
                } else if dist[next as usize] == INF {
                    dist[next as usize] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found {
            break;
        }

        // Iterative DFS along layered edges.
        cursor.copy_from_slice(&start[..nl]);
        for root in 0..nl {
            if mate_l[root] != NIL {
                continue;
            }
            stack.clear();
            stack.push(root as u32);
            while let Some(&l) = stack.last() {
                let l = l as usize;
                if cursor[l] == start[l + 1] {
                    dist[l] = INF;
                    stack.pop();
                    continue;
                }
                let pos = adj[cursor[l] as usize];
                let r = edges[pos as usize].1 as usize;
                let next = mate_r[r];
                if next == NIL {
                    // Augment along the stack.
                    for depth in (0..stack.len()).rev() {
                        let u = stack[depth] as usize;
                        let p = adj[cursor[u] as usize];
                        let v = edges[p as usize].1 as usize;
                        mate_l[u] = p;
                        mate_r[v] = u as u32;
                    }
                    stack.clear();
                    break;
                }
                if dist[next as usize] == dist[l].wrapping_add(1) {
                    stack.push(next);
                } else {
                    cursor[l] += 1;
                }
            }
        }
    }

    mate_l.into_iter().filter(|&p| p != NIL).map(|p| p as usize).collect()
}

/// Convenience for callers holding plain [`Edge`] lists.
pub fn maximum_matching_of_edges(n_a: u32, n_b: u32, edges: &[Edge]) -> Matching {
    let pairs: Vec<(u32, u32)> = edges.iter().map(|e| (e.a, e.b)).collect();
    hopcroft_karp(n_a, n_b, &pairs).into_iter().map(|i| edges[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_matching;

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn complete_k33() {
        let edges = (0..3).flat_map(|a| (0..3).map(move |b| e(a, b))).collect();
        let g = BipartiteGraph::new(3, 3, edges).unwrap();
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 3);
        assert!(validate_matching(&g, &m).is_valid());
    }

    #[test]
    fn star() {
        let g = BipartiteGraph::new(1, 5, (0..5).map(|b| e(0, b)).collect()).unwrap();
        assert_eq!(maximum_matching(&g).len(), 1);
    }

    #[test]
    fn needs_augmentation() {
        // Greedy warm start takes a0b0; the optimum needs a0b1, a1b0.
        let g = BipartiteGraph::new(2, 2, vec![e(0, 0), e(0, 1), e(1, 0)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 2);
    }

    #[test]
    fn long_augmenting_path() {
        // a_i ~ {b_i, b_{i+1}}, a_{n-1} ~ {b_0}. The warm start pairs a_i b_i and
        // strands a_{n-1}; the only fix is one path through every vertex.
        let n = 5000;
        let mut edges = Vec::new();
        for i in 0..n - 1 {
            edges.push(e(i, i));
            edges.push(e(i, i + 1));
        }
        edges.push(e(n - 1, 0));
        let g = BipartiteGraph::new(n, n, edges).unwrap();
        let m = maximum_matching(&g);
        assert_eq!(m.len(), n as usize);
        assert!(validate_matching(&g, &m).is_valid());
    }

    #[test]
    fn deterministic() {
        let edges = vec![e(0, 1), e(1, 0), e(0, 0), e(2, 1), e(1, 2)];
        let g = BipartiteGraph::new(3, 3, edges).unwrap();
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }

    #[test]
    fn multi_edges_allowed_in_raw_form() {
        let picked = hopcroft_karp(2, 1, &[(0, 0), (0, 0), (1, 0)]);
        assert_eq!(picked.len(), 1);
    }
}
