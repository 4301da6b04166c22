//! AHU-style canonical encoding of free trees, rooted at the center.

use super::{Tree, Vertex};

/// The one or two central vertices, found by peeling leaves layer by layer.
pub fn centers(t: &Tree) -> Vec<Vertex> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg = t.vertex_degrees();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &u in t.neighbors(leaf) {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical byte string of `t`: equal for two trees iff they are isomorphic.
///
/// Each rooted subtree is written as `(` + sorted child codes + `)`. A
/// bicentral tree is encoded from both centers and the smaller string wins.
pub fn canonical_code(t: &Tree) -> Vec<u8> {
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("a tree has at least one center")
}

fn rooted_code(t: &Tree, root: Vertex) -> Vec<u8> {
    let n = t.order();
    // Iterative DFS order so deep paths do not overflow the stack.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in t.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let mut codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    let mut done: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut codes[v]);
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend_from_slice(&c);
        }
        code.push(b')');
        if v == root {
            done[v] = code;
        } else {
            codes[parent[v]].push(code);
        }
    }
    std::mem::take(&mut done[root])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_path_has_same_code() {
        let p = Tree::path(4);
        // shape 2-0-3-1
        let q = Tree::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&p), canonical_code(&q));
    }

    #[test]
    fn star_and_path_differ() {
        assert_ne!(
            canonical_code(&Tree::star(4)),
            canonical_code(&Tree::path(4))
        );
    }

    #[test]
    fn centers_of_small_trees() {
        assert_eq!(centers(&Tree::path(1)), vec![0]);
        assert_eq!(centers(&Tree::path(2)), vec![0, 1]);
        assert_eq!(centers(&Tree::path(5)), vec![2]);
        assert_eq!(centers(&Tree::path(6)), vec![2, 3]);
        assert_eq!(centers(&Tree::star(6)), vec![0]);
    }

    #[test]
    fn code_length_is_twice_order() {
        let t = Tree::new(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(canonical_code(&t).len(), 12);
    }

    #[test]
    fn deep_path_does_not_overflow() {
        let t = Tree::path(20_000);
        assert_eq!(canonical_code(&t).len(), 40_000);
    }
}
