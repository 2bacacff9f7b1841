//! Canonical forms for unlabeled trees.
//!
//! The code is a vertex-count prefix followed by a nested-parenthesis
//! encoding rooted at the tree's center (for bicentral trees, at the
//! virtual midpoint of the center edge). Two trees get equal codes iff
//! they are isomorphic.

use num_bigint::BigUint;
use num_traits::One;

use super::Tree;

/// Canonical isomorphism-type code of an unlabeled tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Center vertex (or the two adjacent centers) found by leaf peeling.
pub(crate) fn centers(t: &Tree) -> (usize, Option<usize>) {
    let n = t.n();
    if n == 1 {
        return (0, None);
    }
    if n == 2 {
        return (0, Some(1));
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.deg(v)).collect();
    let mut frontier: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &frontier {
            removed[v] = true;
        }
        remaining -= frontier.len();
        for &v in &frontier {
            for &u in t.neighbors(v) {
                let u = u as usize;
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    rest.sort_unstable();
    match rest.as_slice() {
        [c] => (*c, None),
        [c1, c2] => (*c1, Some(*c2)),
        _ => unreachable!("leaf peeling leaves one or two centers"),
    }
}

/// A tree rooted for AHU processing: BFS order, children lists, and a
/// per-vertex rank such that two vertices share a rank iff their rooted
/// subtrees are isomorphic.
struct Rooted {
    root: usize,
    order: Vec<u32>,
    children: Vec<Vec<u32>>,
    rank: Vec<u32>,
    size: usize,
}

impl Rooted {
    /// Roots the component of `root`, never crossing the edge `blocked`.
    fn build(t: &Tree, root: usize, blocked: Option<(usize, usize)>) -> Rooted {
        let n = t.n();
        let mut children: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut depth = vec![0u32; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut order = vec![root as u32];
        let mut head = 0;
        while head < order.len() {
            let v = order[head] as usize;
            head += 1;
            for &u in t.neighbors(v) {
                let u = u as usize;
                if seen[u] {
                    continue;
                }
                if let Some((a, b)) = blocked {
                    if (v == a && u == b) || (v == b && u == a) {
                        continue;
                    }
                }
                seen[u] = true;
                depth[u] = depth[v] + 1;
                children[v].push(u as u32);
                order.push(u as u32);
            }
        }
        let size = order.len();

        // Assign AHU ranks level by level, deepest first. BFS order is
        // nondecreasing in depth, so levels are contiguous slices.
        let mut rank = vec![0u32; n];
        let mut hi = size;
        while hi > 0 {
            let d = depth[order[hi - 1] as usize];
            let mut lo = hi;
            while lo > 0 && depth[order[lo - 1] as usize] == d {
                lo -= 1;
            }
            let mut keyed: Vec<(Vec<u32>, u32)> = order[lo..hi]
                .iter()
                .map(|&v| {
                    let mut key: Vec<u32> =
                        children[v as usize].iter().map(|&c| rank[c as usize]).collect();
                    key.sort_unstable();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut current = 0u32;
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    current += 1;
                }
                rank[keyed[i].1 as usize] = current;
            }
            hi = lo;
        }

        // Order children canonically so emission is deterministic.
        for v in order.iter().map(|&v| v as usize) {
            children[v].sort_unstable_by_key(|&c| rank[c as usize]);
        }

        Rooted { root, order, children, rank, size }
    }

    /// Appends the nested-parenthesis code (2·size bytes), iteratively.
    fn emit(&self, out: &mut Vec<u8>) {
        out.reserve(2 * self.size);
        // stack entries: (vertex, next child index)
        let mut stack: Vec<(u32, usize)> = vec![(self.root as u32, 0)];
        out.push(b'(');
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            let kids = &self.children[v as usize];
            if *idx < kids.len() {
                let c = kids[*idx];
                *idx += 1;
                out.push(b'(');
                stack.push((c, 0));
            } else {
                out.push(b')');
                stack.pop();
            }
        }
    }

    /// Automorphism count of the rooted tree: per vertex, the product of
    /// factorials of multiplicities of isomorphic child subtrees.
    fn automorphisms(&self) -> BigUint {
        let mut total = BigUint::one();
        for &v in &self.order {
            let kids = &self.children[v as usize];
            let mut i = 0;
            while i < kids.len() {
                let mut j = i + 1;
                while j < kids.len()
                    && self.rank[kids[j] as usize] == self.rank[kids[i] as usize]
                {
                    j += 1;
                }
                for m in 2..=(j - i) {
                    total *= BigUint::from(m);
                }
                i = j;
            }
        }
        total
    }
}

/// Canonical code of an unlabeled tree; invariant under relabeling.
pub fn canonicalize(t: &Tree) -> CanonicalCode {
    let n = t.n();
    let mut out = Vec::with_capacity(4 + 2 * n + 2);
    out.extend_from_slice(&(n as u32).to_be_bytes());
    match centers(t) {
        (c, None) => Rooted::build(t, c, None).emit(&mut out),
        (c1, Some(c2)) => {
            let mut a = Vec::new();
            Rooted::build(t, c1, Some((c1, c2))).emit(&mut a);
            let mut b = Vec::new();
            Rooted::build(t, c2, Some((c1, c2))).emit(&mut b);
            if b < a {
                std::mem::swap(&mut a, &mut b);
            }
            out.push(b'(');
            out.extend_from_slice(&a);
            out.extend_from_slice(&b);
            out.push(b')');
        }
    }
    CanonicalCode(out)
}

/// Number of automorphisms of an unlabeled tree.
pub fn automorphism_count(t: &Tree) -> BigUint {
    match centers(t) {
        (c, None) => Rooted::build(t, c, None).automorphisms(),
        (c1, Some(c2)) => {
            let ra = Rooted::build(t, c1, Some((c1, c2)));
            let rb = Rooted::build(t, c2, Some((c1, c2)));
            let mut a = Vec::new();
            ra.emit(&mut a);
            let mut b = Vec::new();
            rb.emit(&mut b);
            let mut total = ra.automorphisms() * rb.automorphisms();
            if a == b {
                total *= BigUint::from(2u32);
            }
            total
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{random_tree, Tree};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn relabeling_invariance_p5() {
        let p5 = Tree::path(5);
        let shuffled = p5.relabel(&[3, 0, 4, 1, 2]);
        assert_eq!(canonicalize(&p5), canonicalize(&shuffled));
    }

    #[test]
    fn distinct_types_distinct_codes() {
        assert_ne!(canonicalize(&Tree::path(5)), canonicalize(&Tree::star(4)));
        // all three 5-vertex types pairwise distinct
        let wye = Tree::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let codes = [
            canonicalize(&Tree::path(5)),
            canonicalize(&Tree::star(4)),
            canonicalize(&wye),
        ];
        assert_ne!(codes[0], codes[1]);
        assert_ne!(codes[0], codes[2]);
        assert_ne!(codes[1], codes[2]);
    }

    #[test]
    fn codes_distinguish_vertex_counts() {
        // both encode as a chain of two equal halves around the middle
        assert_ne!(canonicalize(&Tree::path(4)), canonicalize(&Tree::path(5)));
    }

    #[test]
    fn relabeling_invariance_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for i in 0..1000 {
            let n = 1 + (i % 40);
            let t = random_tree(n, 1000 + i as u64);
            let mut perm: Vec<u32> = (0..n as u32).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonicalize(&t), canonicalize(&t.relabel(&perm)));
        }
    }

    #[test]
    fn centers_examples() {
        assert_eq!(centers(&Tree::path(5)), (2, None));
        assert_eq!(centers(&Tree::path(4)), (1, Some(2)));
        assert_eq!(centers(&Tree::singleton()), (0, None));
        assert_eq!(centers(&Tree::path(2)), (0, Some(1)));
        assert_eq!(centers(&Tree::star(6)), (0, None));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&Tree::singleton()), BigUint::from(1u32));
        assert_eq!(automorphism_count(&Tree::path(2)), BigUint::from(2u32));
        assert_eq!(automorphism_count(&Tree::path(5)), BigUint::from(2u32));
        assert_eq!(automorphism_count(&Tree::star(3)), BigUint::from(6u32));
        assert_eq!(automorphism_count(&Tree::star(4)), BigUint::from(24u32));
        // wye: swap the two short legs only
        let wye = Tree::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(automorphism_count(&wye), BigUint::from(2u32));
        // P4 is bicentral with a half swap
        assert_eq!(automorphism_count(&Tree::path(4)), BigUint::from(2u32));
    }

    #[test]
    fn large_path_does_not_overflow_stack() {
        let t = Tree::path(100_000);
        let code = canonicalize(&t);
        assert_eq!(code.as_bytes().len(), 4 + 2 * 100_000 + 2);
    }
}
