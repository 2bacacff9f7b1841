//! Tree constructions: millipedes and caterpillars, path gluing, cuts,
//! and uniform random labeled trees.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Tree;
use crate::error::{Error, Result};

/// A millipede family: periodic pendant sequence `d` plus spine length `n`.
///
/// Spine vertex `v_j` (1-based) carries `d_i + 2` pendant leaves where
/// `i ≡ j (mod ℓ)` with residues taken in `1..=ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MillipedeSpec {
    pub d: Vec<u64>,
    pub n: usize,
}

impl MillipedeSpec {
    pub fn new(d: Vec<u64>, n: usize) -> Result<MillipedeSpec> {
        if d.is_empty() {
            return Err(Error::InvalidParameter("pendant sequence must be non-empty".into()));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("spine length must be at least 1".into()));
        }
        Ok(MillipedeSpec { d, n })
    }

    /// Total vertex count of the resulting tree.
    pub fn vertex_count(&self) -> u64 {
        let ell = self.d.len();
        let pendants: u64 = (0..self.n).map(|j| self.d[j % ell] + 2).sum();
        self.n as u64 + pendants
    }
}

/// Caterpillar with an explicit periodic pendant-count sequence: spine
/// vertices `0..n`, with `pendants[j mod ℓ]` pendant leaves at spine
/// vertex `j`. This is the raw construction underlying both millipedes
/// and the limit-profile families.
pub fn caterpillar(pendants: &[u64], n: usize) -> Tree {
    assert!(!pendants.is_empty() && n >= 1);
    let ell = pendants.len();
    let total: u64 = n as u64 + (0..n).map(|j| pendants[j % ell]).sum::<u64>();
    let mut edges = Vec::with_capacity(total as usize - 1);
    for j in 1..n as u32 {
        edges.push((j - 1, j));
    }
    let mut next = n as u32;
    for j in 0..n {
        for _ in 0..pendants[j % ell] {
            edges.push((j as u32, next));
            next += 1;
        }
    }
    Tree::from_edges_unchecked(total as usize, &edges)
}

/// The `D`-millipede of the given spec: pendant count at spine position
/// `j` is `d_i + 2` for `i ≡ j (mod ℓ)`.
pub fn millipede(spec: &MillipedeSpec) -> Tree {
    let pendants: Vec<u64> = spec.d.iter().map(|&d| d + 2).collect();
    caterpillar(&pendants, spec.n)
}

/// Glues two trees by a path of `k-1` new vertices between the chosen
/// leaves, so that the two leaves end up at distance exactly `k`.
pub fn glue(s: &Tree, t: &Tree, k: usize, leaf_s: usize, leaf_t: usize) -> Result<Tree> {
    if k < 2 {
        return Err(Error::InvalidParameter("gluing requires k >= 2".into()));
    }
    if leaf_s >= s.n() {
        return Err(Error::VertexOutOfRange { index: leaf_s, n: s.n() });
    }
    if leaf_t >= t.n() {
        return Err(Error::VertexOutOfRange { index: leaf_t, n: t.n() });
    }
    if !s.is_leaf(leaf_s) {
        return Err(Error::NotALeaf(leaf_s));
    }
    if !t.is_leaf(leaf_t) {
        return Err(Error::NotALeaf(leaf_t));
    }
    let ns = s.n();
    let nt = t.n();
    let n = ns + nt + k - 1;
    let mut edges = Vec::with_capacity(n - 1);
    edges.extend(s.edges());
    edges.extend(t.edges().iter().map(|&(u, v)| (u + ns as u32, v + ns as u32)));
    // connecting path: leaf_s - p_1 - … - p_{k-1} - leaf_t
    let base = (ns + nt) as u32;
    let mut prev = leaf_s as u32;
    for i in 0..(k - 1) as u32 {
        edges.push((prev, base + i));
        prev = base + i;
    }
    edges.push((prev, (ns + leaf_t) as u32));
    Ok(Tree::from_edges_unchecked(n, &edges))
}

/// The `(i, j)`-cut around the edge `{u, v}`: removes the edge, then
/// attaches a pendant path of `i` edges at `u` and one of `j` edges at
/// `v`. Returns `(T_1, T_2)` with `u ∈ T_1` and `v ∈ T_2`, each
/// relabeled compactly with the anchor vertex first.
pub fn cut(t: &Tree, u: usize, v: usize, i: usize, j: usize) -> Result<(Tree, Tree)> {
    if !t.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let side = |anchor: usize, other: usize, tail: usize| -> Tree {
        // collect the component of `anchor` avoiding the cut edge
        let mut label = vec![u32::MAX; t.n()];
        label[anchor] = 0;
        let mut order = vec![anchor];
        let mut head = 0;
        while head < order.len() {
            let w = order[head];
            head += 1;
            for &x in t.neighbors(w) {
                let x = x as usize;
                if label[x] == u32::MAX && !(w == anchor && x == other) {
                    label[x] = order.len() as u32;
                    order.push(x);
                }
            }
        }
        let m = order.len();
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m + tail - 1);
        for &w in &order {
            for &x in t.neighbors(w) {
                let x = x as usize;
                if label[x] != u32::MAX && label[w] < label[x] {
                    edges.push((label[w], label[x]));
                }
            }
        }
        // pendant path at the anchor
        let mut prev = 0u32;
        for p in 0..tail as u32 {
            edges.push((prev, m as u32 + p));
            prev = m as u32 + p;
        }
        Tree::from_edges_unchecked(m + tail, &edges)
    };
    Ok((side(u, v, i), side(v, u, j)))
}

/// Uniform random labeled tree on `n` vertices, by decoding a uniform
/// random Prüfer sequence. Deterministic for a fixed seed.
pub fn random_tree(n: usize, seed: u64) -> Tree {
    assert!(n >= 1);
    if n == 1 {
        return Tree::singleton();
    }
    if n == 2 {
        return Tree::path(2);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<u32> = (0..n - 2).map(|_| rng.gen_range(0..n as u32)).collect();
    let mut degree = vec![1u32; n];
    for &v in &prufer {
        degree[v as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // pointer/leaf scan decode, O(n)
    let mut ptr = 0usize;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in &prufer {
        edges.push((leaf as u32, v));
        degree[v as usize] -= 1;
        if degree[v as usize] == 1 && (v as usize) < ptr {
            leaf = v as usize;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf as u32, n as u32 - 1));
    Tree::from_edges_unchecked(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::canonicalize;

    #[test]
    fn millipede_smallest() {
        // D = (0), n = 1: one spine vertex with two pendants, i.e. K_{1,2}
        let spec = MillipedeSpec::new(vec![0], 1).unwrap();
        let t = millipede(&spec);
        assert_eq!(t.n(), 3);
        assert_eq!(canonicalize(&t), canonicalize(&Tree::star(2)));
    }

    #[test]
    fn millipede_figure_family() {
        let spec = MillipedeSpec::new(vec![0, 0, 3, 4, 4, 3], 6).unwrap();
        assert_eq!(spec.vertex_count(), 32);
        let t = millipede(&spec);
        assert_eq!(t.n(), 32);
    }

    #[test]
    fn millipede_spine_degrees() {
        let spec = MillipedeSpec::new(vec![1], 3).unwrap();
        let t = millipede(&spec);
        let degs: Vec<usize> = (0..3).map(|v| t.deg(v)).collect();
        assert_eq!(degs, vec![4, 5, 4]);
    }

    #[test]
    fn millipede_vertex_count_closed_form() {
        for (d, n) in [(vec![0u64], 5), (vec![2, 7], 9), (vec![0, 0, 3, 4, 4, 3], 13)] {
            let spec = MillipedeSpec::new(d, n).unwrap();
            assert_eq!(millipede(&spec).n() as u64, spec.vertex_count());
        }
    }

    #[test]
    fn millipede_max_degree() {
        // (3)-millipede of length 5: interior spine vertex has 2 spine
        // neighbors plus 3+2 pendants
        let t = millipede(&MillipedeSpec::new(vec![3], 5).unwrap());
        assert_eq!(t.max_degree(), 7);
    }

    #[test]
    fn glue_paths() {
        let p2 = Tree::path(2);
        let g = glue(&p2, &p2, 2, 1, 0).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(canonicalize(&g), canonicalize(&Tree::path(5)));
    }

    #[test]
    fn glue_stars() {
        let s = Tree::star(4);
        let g = glue(&s, &s, 5, 1, 1).unwrap();
        assert_eq!(g.n(), 14);
        // the second tree's vertices are offset by |s|
        assert_eq!(g.distance(1, 5 + 1).unwrap(), 5);
    }

    #[test]
    fn glue_distance_and_size_contract() {
        for seed in 0..30 {
            let s = random_tree(3 + (seed as usize % 9), seed);
            let t = random_tree(2 + (seed as usize % 7), seed + 100);
            let ls = s.leaves()[0];
            let lt = t.leaves()[0];
            let k = 2 + (seed as usize % 5);
            let g = glue(&s, &t, k, ls, lt).unwrap();
            assert_eq!(g.n(), s.n() + t.n() + k - 1);
            assert_eq!(g.distance(ls, s.n() + lt).unwrap(), k);
        }
    }

    #[test]
    fn glue_singleton_counts_as_leaf() {
        let one = Tree::singleton();
        let g = glue(&one, &one, 3, 0, 0).unwrap();
        assert_eq!(canonicalize(&g), canonicalize(&Tree::path(4)));
    }

    #[test]
    fn glue_rejects_non_leaf() {
        let p5 = Tree::path(5);
        assert!(matches!(glue(&p5, &p5, 3, 2, 0), Err(Error::NotALeaf(2))));
    }

    #[test]
    fn cut_path_middle() {
        let p5 = Tree::path(5);
        let (a, b) = cut(&p5, 1, 2, 0, 0).unwrap();
        assert_eq!(canonicalize(&a), canonicalize(&Tree::path(2)));
        assert_eq!(canonicalize(&b), canonicalize(&Tree::path(3)));
    }

    #[test]
    fn cut_p2_with_tails() {
        let p2 = Tree::path(2);
        let (a, b) = cut(&p2, 0, 1, 1, 1).unwrap();
        assert_eq!(canonicalize(&a), canonicalize(&Tree::path(2)));
        assert_eq!(canonicalize(&b), canonicalize(&Tree::path(2)));
    }

    #[test]
    fn cut_preserves_anchor_degree() {
        // a (2,1)-cut replaces the lost neighbor of u with the new path
        let t = random_tree(20, 77);
        let (u, v) = t.edges()[7];
        let (a, _) = cut(&t, u as usize, v as usize, 2, 1).unwrap();
        assert_eq!(a.deg(0), t.deg(u as usize));
    }

    #[test]
    fn cut_conserves_sizes() {
        let t = random_tree(25, 5);
        for &(u, v) in t.edges().iter().take(8) {
            for (i, j) in [(0, 0), (1, 0), (1, 1), (2, 1)] {
                let (a, b) = cut(&t, u as usize, v as usize, i, j).unwrap();
                assert_eq!(a.n() + b.n(), t.n() + i + j);
            }
        }
    }

    #[test]
    fn cut_rejects_non_edge() {
        let p5 = Tree::path(5);
        assert!(matches!(cut(&p5, 0, 2, 0, 0), Err(Error::NotAnEdge { u: 0, v: 2 })));
    }

    #[test]
    fn random_tree_small_cases() {
        assert_eq!(random_tree(1, 9).n(), 1);
        assert_eq!(canonicalize(&random_tree(2, 9)), canonicalize(&Tree::path(2)));
    }

    #[test]
    fn random_tree_deterministic() {
        assert_eq!(random_tree(30, 123).edges(), random_tree(30, 123).edges());
        assert_ne!(random_tree(30, 123).edges(), random_tree(30, 124).edges());
    }

    #[test]
    fn random_tree_is_a_valid_tree() {
        for seed in 0..50 {
            let t = random_tree(1 + (seed as usize * 7) % 50, seed);
            Tree::from_edges(t.n(), &t.edges()).unwrap();
        }
    }

    #[test]
    fn random_tree_star_fraction_at_n4() {
        // 4 labeled stars among 4^2 = 16 labeled trees on 4 vertices
        let star_code = canonicalize(&Tree::star(3));
        let samples = 10_000;
        let hits = (0..samples)
            .filter(|&s| canonicalize(&random_tree(4, s)) == star_code)
            .count();
        let fraction = hits as f64 / samples as f64;
        assert!((fraction - 0.25).abs() < 0.02, "fraction = {fraction}");
    }
}
