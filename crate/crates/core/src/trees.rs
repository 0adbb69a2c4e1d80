//! Planar binary rooted trees, their integer coordinates and the Tamari order.
//!
//! Trees are written as s-expressions over leaves: a leaf is `.` and an
//! internal node is `(` left right `)`. The right comb with two internal
//! vertices is `(.(..))`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Largest vertex count accepted by [`enumerate_trees`].
pub const MAX_ENUMERATION: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(left: Tree, right: Tree) -> Tree {
        Tree::Node(Box::new(left), Box::new(right))
    }

    /// Number of internal vertices.
    pub fn vertex_count(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(l, r) => 1 + l.vertex_count() + r.vertex_count(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    /// The coordinate vector `M(t)`: entry `i` is the product of the number of
    /// leaves on the left and on the right of internal vertex `i`, vertices
    /// numbered left to right.
    pub fn loday_point(&self) -> Result<Vec<u64>> {
        if self.is_leaf() {
            return Err(Error::domain("the bare leaf has no coordinates"));
        }
        let mut out = Vec::with_capacity(self.vertex_count());
        fn walk(t: &Tree, out: &mut Vec<u64>) -> u64 {
            match t {
                Tree::Leaf => 1,
                Tree::Node(l, r) => {
                    let a = walk(l, out);
                    let slot = out.len();
                    out.push(0);
                    let b = walk(r, out);
                    out[slot] = a * b;
                    a + b
                }
            }
        }
        walk(self, &mut out);
        Ok(out)
    }

    /// All trees reachable by a single rotation `((A B) C) -> (A (B C))`.
    ///
    /// Sites are visited in pre-order, so the result is deterministic.
    pub fn tamari_covers(&self) -> Vec<Tree> {
        let mut out = Vec::new();
        if let Tree::Node(l, r) = self {
            if let Tree::Node(a, b) = l.as_ref() {
                out.push(Tree::node(
                    (**a).clone(),
                    Tree::node((**b).clone(), (**r).clone()),
                ));
            }
            for c in l.tamari_covers() {
                out.push(Tree::node(c, (**r).clone()));
            }
            for c in r.tamari_covers() {
                out.push(Tree::node((**l).clone(), c));
            }
        }
        out
    }

    /// Substitutes `t` for the leaf with left-to-right index `leaf`.
    pub fn graft_at_leaf(&self, leaf: usize, t: &Tree) -> Result<Tree> {
        let leaves = self.leaf_count();
        if leaf >= leaves {
            return Err(Error::domain(format!(
                "leaf index {leaf} out of range for a tree with {leaves} leaves"
            )));
        }
        fn go(s: &Tree, leaf: usize, t: &Tree) -> Tree {
            match s {
                Tree::Leaf => t.clone(),
                Tree::Node(l, r) => {
                    let nl = l.leaf_count();
                    if leaf < nl {
                        Tree::node(go(l, leaf, t), (**r).clone())
                    } else {
                        Tree::node((**l).clone(), go(r, leaf - nl, t))
                    }
                }
            }
        }
        Ok(go(self, leaf, t))
    }
}

/// Grafts `t` onto the leaf of `s` with index `a`, leaves being counted from
/// right to left starting at 0. For `s` with `p + 1` internal vertices this
/// is the left-to-right leaf `p + 1 - a`.
pub fn graft(s: &Tree, a: usize, t: &Tree) -> Result<Tree> {
    let leaves = s.leaf_count();
    if a >= leaves {
        return Err(Error::domain(format!(
            "root edge index {a} out of range 0..={}",
            leaves - 1
        )));
    }
    s.graft_at_leaf(leaves - 1 - a, t)
}

/// Canonical order: identical to lexicographic order of the serialization,
/// where `(` sorts before `.`.
impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Tree::Leaf, Tree::Leaf) => Ordering::Equal,
            (Tree::Node(..), Tree::Leaf) => Ordering::Less,
            (Tree::Leaf, Tree::Node(..)) => Ordering::Greater,
            (Tree::Node(a, b), Tree::Node(c, d)) => a.cmp(c).then_with(|| b.cmp(d)),
        }
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("."),
            Tree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        let bytes = s.as_bytes();
        fn parse(bytes: &[u8], pos: &mut usize) -> Result<Tree> {
            match bytes.get(*pos) {
                Some(b'.') => {
                    *pos += 1;
                    Ok(Tree::Leaf)
                }
                Some(b'(') => {
                    *pos += 1;
                    let l = parse(bytes, pos)?;
                    let r = parse(bytes, pos)?;
                    if bytes.get(*pos) != Some(&b')') {
                        return Err(Error::Parse(format!("expected ')' at offset {}", *pos)));
                    }
                    *pos += 1;
                    Ok(Tree::node(l, r))
                }
                Some(c) => Err(Error::Parse(format!(
                    "unexpected '{}' at offset {}",
                    *c as char, *pos
                ))),
                None => Err(Error::Parse("unexpected end of input".into())),
            }
        }
        let mut pos = 0;
        let t = parse(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input at offset {pos}")));
        }
        Ok(t)
    }
}

impl serde::Serialize for Tree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Tree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Tree, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All trees with `n` internal vertices, in canonical order.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    if n > MAX_ENUMERATION {
        return Err(Error::capacity("tree enumeration", MAX_ENUMERATION, n));
    }
    let mut by_size: Vec<Vec<Tree>> = vec![vec![Tree::Leaf]];
    for m in 1..=n {
        let mut level = Vec::new();
        for i in 0..m {
            for l in &by_size[i] {
                for r in &by_size[m - 1 - i] {
                    level.push(Tree::node(l.clone(), r.clone()));
                }
            }
        }
        level.sort();
        by_size.push(level);
    }
    Ok(by_size.swap_remove(n))
}

/// Tree whose internal vertices all lie on the rightmost path; coordinates
/// `(n, n-1, ..., 1)`. Maximum of the Tamari order.
pub fn right_comb(n: usize) -> Tree {
    (0..n).fold(Tree::Leaf, |acc, _| Tree::node(Tree::Leaf, acc))
}

/// Tree whose internal vertices all lie on the leftmost path; coordinates
/// `(1, 2, ..., n)`. Minimum of the Tamari order.
pub fn left_comb(n: usize) -> Tree {
    (0..n).fold(Tree::Leaf, |acc, _| Tree::node(acc, Tree::Leaf))
}

/// `t ≤ u` in the Tamari order, by search along covering moves.
pub fn tamari_leq(t: &Tree, u: &Tree) -> Result<bool> {
    let (n, m) = (t.vertex_count(), u.vertex_count());
    if n != m {
        return Err(Error::domain(format!(
            "trees of different sizes ({n} and {m}) are not comparable"
        )));
    }
    if t == u {
        return Ok(true);
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([t.clone()]);
    seen.insert(t.clone());
    while let Some(x) = queue.pop_front() {
        for c in x.tamari_covers() {
            if &c == u {
                return Ok(true);
            }
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    Ok(false)
}

/// The Tamari poset on all trees with `n` internal vertices, with its
/// reachability relation precomputed.
#[derive(Clone, Debug)]
pub struct TamariPoset {
    n: usize,
    trees: Vec<Tree>,
    index: HashMap<Tree, usize>,
    covers: Vec<Vec<usize>>,
    // row-major reachability matrix, reach[i * len + j] iff trees[i] ≤ trees[j]
    reach: Vec<bool>,
}

impl TamariPoset {
    pub fn new(n: usize) -> Result<Self> {
        let trees = enumerate_trees(n)?;
        let index: HashMap<Tree, usize> = trees
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let covers: Vec<Vec<usize>> = trees
            .iter()
            .map(|t| t.tamari_covers().iter().map(|c| index[c]).collect())
            .collect();
        let len = trees.len();
        let mut reach = vec![false; len * len];
        for start in 0..len {
            let row = &mut reach[start * len..(start + 1) * len];
            row[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &c in &covers[x] {
                    if !row[c] {
                        row[c] = true;
                        stack.push(c);
                    }
                }
            }
        }
        Ok(TamariPoset {
            n,
            trees,
            index,
            covers,
            reach,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn index_of(&self, t: &Tree) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    pub fn cover_count(&self) -> usize {
        self.covers.iter().map(Vec::len).sum()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.reach[i * self.trees.len() + j]
    }

    pub fn leq_trees(&self, t: &Tree, u: &Tree) -> Result<bool> {
        match (self.index_of(t), self.index_of(u)) {
            (Some(i), Some(j)) => Ok(self.leq(i, j)),
            _ => Err(Error::domain(format!(
                "trees {t} / {u} are not in Y_{}",
                self.n
            ))),
        }
    }

    /// Elements with no element strictly below them.
    pub fn minimal_elements(&self) -> Vec<usize> {
        let len = self.len();
        (0..len)
            .filter(|&j| (0..len).all(|i| i == j || !self.leq(i, j)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.covers[i].is_empty())
            .collect()
    }

    /// Unordered pairs `{i, j}` with neither `i ≤ j` nor `j ≤ i`.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let len = self.len();
        let mut out = Vec::new();
        for i in 0..len {
            for j in i + 1..len {
                if !self.leq(i, j) && !self.leq(j, i) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}
