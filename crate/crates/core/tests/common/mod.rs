//! Slow, obviously-correct reference implementations used as oracles.
#![allow(dead_code)]

use hereditary::Graph;

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Upper-triangle bits in a fixed pair order.
pub fn pair_bits(g: &Graph) -> u64 {
    let n = g.order();
    let mut bits = 0u64;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

/// The labelled graph on `n` vertices whose upper triangle is `bits`.
pub fn from_pair_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// Smallest upper-triangle word over all relabellings.
pub fn brute_force_key(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| pair_bits(&g.relabel(p))).min().unwrap_or(0)
}

pub fn automorphism_count(g: &Graph, perms: &[Vec<usize>]) -> usize {
    perms.iter().filter(|p| &g.relabel(p) == g).count()
}

/// Number of unlabelled graphs on `n` vertices: the average over all
/// permutations of `2^(cycles on vertex pairs)`.
pub fn burnside_count(n: usize) -> u64 {
    let perms = permutations(n);
    let mut total: u128 = 0;
    for p in &perms {
        let mut seen = vec![vec![false; n]; n];
        let mut cycles = 0u32;
        for v in 1..n {
            for u in 0..v {
                if seen[u][v] {
                    continue;
                }
                cycles += 1;
                let (mut a, mut b) = (u, v);
                while !seen[a.min(b)][a.max(b)] {
                    seen[a.min(b)][a.max(b)] = true;
                    a = p[a];
                    b = p[b];
                }
            }
        }
        total += 1u128 << cycles;
    }
    (total / perms.len() as u128) as u64
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n)
        .filter(move |s| s.count_ones() as usize == k)
        .map(move |s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
}

fn induced(g: &Graph, vs: &[usize]) -> Graph {
    let set = vs.iter().copied().collect();
    g.induced(set).unwrap()
}

pub fn naive_is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.vertices().iter().all(|v| g.degree(v) == 2) && g.is_connected()
}

/// No induced cycle on four or more vertices.
pub fn naive_chordal(g: &Graph) -> bool {
    (4..=g.order()).all(|k| subsets_of_size(g.order(), k).all(|s| !naive_is_cycle(&induced(g, &s))))
}

/// Some vertex subset is a clique whose complement is independent.
pub fn naive_split(g: &Graph) -> bool {
    let n = g.order();
    (0u64..1 << n).any(|k| {
        let clique = (0..n).filter(|&i| k >> i & 1 == 1).collect::<Vec<_>>();
        let rest = (0..n).filter(|&i| k >> i & 1 == 0).collect::<Vec<_>>();
        clique
            .iter()
            .all(|&a| clique.iter().all(|&b| a == b || g.has_edge(a, b)))
            && rest.iter().all(|&a| rest.iter().all(|&b| !g.has_edge(a, b)))
    })
}

/// Induced 4-vertex subgraphs checked against each target by trying all
/// 24 bijections.
fn has_induced_four(g: &Graph, target: &Graph) -> bool {
    let perms = permutations(4);
    subsets_of_size(g.order(), 4).any(|s| {
        let h = induced(g, &s);
        perms.iter().any(|p| h.relabel(p) == *target)
    })
}

pub fn naive_cograph(g: &Graph) -> bool {
    !has_induced_four(g, &Graph::path(4))
}

pub fn naive_threshold(g: &Graph) -> bool {
    let two_k2 = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
    ![Graph::path(4), Graph::cycle(4), two_k2]
        .iter()
        .any(|t| has_induced_four(g, t))
}

/// Every labelled graph on `n` vertices.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |b| from_pair_bits(n, b))
}
