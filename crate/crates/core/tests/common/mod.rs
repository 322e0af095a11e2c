//! Random instance generators and brute-force oracles shared by the
//! integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use oneway_locc::domino::{Domino, DominoDiagram};
use oneway_locc::numerics::{orthonormalize, CMatrix, CVector, Tolerance};
use oneway_locc::{ProductStateSet, SimpleGraph, VertexSet};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Each new vertex joins a clique of earlier vertices, so the reverse
/// insertion order is a perfect elimination ordering.
pub fn random_chordal(rng: &mut StdRng, n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n).unwrap();
    for v in 1..n {
        if rng.random_bool(0.15) {
            continue;
        }
        let anchor = rng.random_range(0..v);
        let mut clique = vec![anchor];
        let mut others: Vec<usize> = g.neighbours(anchor).iter().filter(|&u| u < v).collect();
        others.shuffle(rng);
        for u in others {
            if rng.random_bool(0.6) && clique.iter().all(|&w| g.has_edge(u, w)) {
                clique.push(u);
            }
        }
        for u in clique {
            g.add_edge(u, v).unwrap();
        }
    }
    relabel(rng, &g)
}

/// A k-tree on `n ≥ k + 1` vertices, randomly labelled.
pub fn random_ktree(rng: &mut StdRng, n: usize, k: usize) -> SimpleGraph {
    let mut g = SimpleGraph::complete(k + 1).unwrap();
    let mut g_full = SimpleGraph::empty(n).unwrap();
    for (u, v) in g.edges() {
        g_full.add_edge(u, v).unwrap();
    }
    g = g_full;
    let mut kcliques: Vec<Vec<usize>> = (0..=k).map(|skip| (0..=k).filter(|&x| x != skip).collect()).collect();
    for v in k + 1..n {
        let base = kcliques[rng.random_range(0..kcliques.len())].clone();
        for &u in &base {
            g.add_edge(u, v).unwrap();
        }
        for skip in 0..k {
            let mut c: Vec<usize> = base.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &u)| u).collect();
            c.push(v);
            kcliques.push(c);
        }
    }
    relabel(rng, &g)
}

pub fn relabel(rng: &mut StdRng, g: &SimpleGraph) -> SimpleGraph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permuted(&perm).unwrap()
}

pub fn random_complex(rng: &mut StdRng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// Vectors in the smallest dimension (plus `extra`) for which each vertex
/// gets a generic vector orthogonal to the earlier vertices it must be
/// orthogonal to. `orthogonal(u, v)` says which pairs.
pub fn sequential_representation(
    rng: &mut StdRng,
    n: usize,
    extra: usize,
    orthogonal: impl Fn(usize, usize) -> bool,
) -> (usize, Vec<CVector>) {
    let need = (0..n).map(|v| (0..v).filter(|&u| orthogonal(u, v)).count()).max().unwrap_or(0) + 1;
    let dim = need + extra;
    let mut vs: Vec<CVector> = Vec::with_capacity(n);
    for v in 0..n {
        let avoid: Vec<CVector> = (0..v).filter(|&u| orthogonal(u, v)).map(|u| vs[u].clone()).collect();
        let free = orthonormalize(dim, &avoid, Tolerance::default()).unwrap().complement(Tolerance::default());
        let mut x = CVector::zeros(dim);
        for b in free.basis() {
            x += b * random_complex(rng);
        }
        vs.push(x);
    }
    (dim, vs)
}

/// States whose Alice graph is (generically) `h` and Bob graph its
/// complement: Alice is orthogonal on non-edges, Bob on edges.
pub fn states_for_graph(rng: &mut StdRng, h: &SimpleGraph, extra_a: usize, extra_b: usize) -> ProductStateSet {
    let n = h.n();
    let (da, a) = sequential_representation(rng, n, extra_a, |u, v| !h.has_edge(u, v));
    let (db, b) = sequential_representation(rng, n, extra_b, |u, v| h.has_edge(u, v));
    ProductStateSet::new(da, db, a.into_iter().zip(b).map(|(a, b)| (None, a, b)), Tolerance::default()).unwrap()
}

/// States built around a clique cover of `g`: Alice gets one orthonormal
/// direction per clique and each vector mixes the directions of its cliques,
/// so splitting along the cover separates her states. Bob is orthogonal on
/// the edges of `g`.
pub fn states_from_cover(rng: &mut StdRng, g: &SimpleGraph, extra_b: usize) -> ProductStateSet {
    let n = g.n();
    let cover = oneway_locc::graphs::min_clique_cover(g, 20).unwrap();
    let da = cover.len();
    let a: Vec<CVector> = (0..n)
        .map(|v| {
            let mut x = CVector::zeros(da);
            for (j, c) in cover.cliques.iter().enumerate() {
                if c.contains(v) {
                    x[j] = random_complex(rng);
                }
            }
            x
        })
        .collect();
    let (db, b) = sequential_representation(rng, n, extra_b, |u, v| g.has_edge(u, v));
    ProductStateSet::new(da, db, a.into_iter().zip(b).map(|(a, b)| (None, a, b)), Tolerance::default()).unwrap()
}

/// States with Alice graph (generically) `g` and Bob vectors a proper
/// colouring of `g` by standard basis vectors, so `g ≤ complement(G_B)`.
pub fn states_with_coloured_bob(rng: &mut StdRng, g: &SimpleGraph) -> ProductStateSet {
    let n = g.n();
    let (da, a) = sequential_representation(rng, n, 0, |u, v| !g.has_edge(u, v));
    let mut colour = vec![0usize; n];
    for v in 0..n {
        colour[v] = (0..).find(|&c| (0..v).all(|u| !g.has_edge(u, v) || colour[u] != c)).unwrap();
    }
    let db = colour.iter().max().map_or(1, |c| c + 1);
    let b = colour.iter().map(|&c| oneway_locc::numerics::ket(db, c));
    ProductStateSet::new(da, db, a.into_iter().zip(b).map(|(a, b)| (None, a, b)), Tolerance::default()).unwrap()
}

/// A Haar-ish random unitary from the QR factor of a random matrix.
pub fn random_unitary(rng: &mut StdRng, d: usize) -> CMatrix {
    let m = CMatrix::from_fn(d, d, |_, _| random_complex(rng));
    m.qr().q()
}

/// Tiles the m×n torus square by square with random strips.
pub fn random_diagram(rng: &mut StdRng, m: usize, n: usize) -> DominoDiagram {
    let mut covered = vec![false; m * n];
    let mut dominoes = Vec::new();
    for r in 0..m {
        for c in 0..n {
            if covered[r * n + c] {
                continue;
            }
            let run_h = (0..n).take_while(|&k| !covered[r * n + (c + k) % n]).count();
            let run_v = (0..m).take_while(|&k| !covered[((r + k) % m) * n + c]).count();
            let id = dominoes.len();
            let horizontal = if run_h > 1 && run_v > 1 { rng.random_bool(0.5) } else { run_h >= run_v };
            let d = if horizontal {
                let len = rng.random_range(1..=run_h);
                Domino::horizontal(id, r, (c + n - 1) % n, len)
            } else {
                let len = rng.random_range(1..=run_v);
                Domino::vertical(id, c, (r + m - 1) % m, len)
            };
            for (rr, cc) in d.squares(m, n) {
                covered[rr * n + cc] = true;
            }
            dominoes.push(d);
        }
    }
    DominoDiagram::new(m, n, dominoes)
}

/// Smallest number of cliques covering every vertex and edge, by trying
/// every assignment of edges and isolated vertices to `k` labelled cliques.
pub fn brute_force_cover_number(g: &SimpleGraph) -> usize {
    let mut elements: Vec<VertexSet> = g.edges().map(|(u, v)| [u, v].into_iter().collect()).collect();
    elements.extend((0..g.n()).filter(|&v| g.degree(v) == 0).map(VertexSet::singleton));
    if elements.is_empty() {
        return 0;
    }
    fn assign(g: &SimpleGraph, elements: &[VertexSet], i: usize, groups: &mut Vec<VertexSet>, k: usize) -> bool {
        if i == elements.len() {
            return true;
        }
        for j in 0..groups.len() {
            let merged = groups[j].union(elements[i]);
            if g.is_clique(merged) {
                let old = groups[j];
                groups[j] = merged;
                if assign(g, elements, i + 1, groups, k) {
                    return true;
                }
                groups[j] = old;
            }
        }
        if groups.len() < k {
            groups.push(elements[i]);
            if assign(g, elements, i + 1, groups, k) {
                return true;
            }
            groups.pop();
        }
        false
    }
    (1..=elements.len()).find(|&k| assign(g, &elements, 0, &mut Vec::new(), k)).unwrap()
}

/// True when some vertex subset of size ≥ 4 induces a cycle.
pub fn has_long_induced_cycle(g: &SimpleGraph) -> bool {
    let n = g.n();
    (0u64..1 << n).any(|mask| {
        let s = VertexSet(mask);
        s.len() >= 4 && {
            let h = g.induced(s);
            h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
        }
    })
}

pub fn is_tree(g: &SimpleGraph) -> bool {
    g.n() >= 2 && g.is_connected() && g.edge_count() == g.n() - 1
}
