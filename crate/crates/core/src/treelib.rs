//! Trees on at most [`MAX_VERTICES`] labeled vertices: construction, validation,
//! canonical forms and free-tree enumeration.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest tree the library will build.
pub const MAX_VERTICES: usize = 16;

/// Largest `n` accepted by [`enumerate_free_trees`].
pub const CENSUS_MAX_VERTICES: usize = 12;

/// Largest `n` accepted by the labeled-tree oracle [`enumerate_free_trees_pruefer`].
pub const PRUEFER_ORACLE_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("vertex count {0} outside 1..={max}", max = MAX_VERTICES)]
    VertexCount(usize),
    #[error("vertex count {n} exceeds the enumeration limit {limit}")]
    OverBudget { n: usize, limit: usize },
    #[error("edge ({0}, {1}) names a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("edge ({0}, {1}) closes a cycle")]
    Cycle(usize, usize),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("Pruefer entry {entry} outside 0..{n}")]
    PrueferEntry { entry: usize, n: usize },
    #[error("invalid canonical code: {0}")]
    BadCode(String),
    #[error("invalid tree spec `{spec}`: {reason}")]
    Spec { spec: String, reason: String },
}

pub type Result<T> = std::result::Result<T, TreeError>;

/// A finite tree with vertices `0..n`.
///
/// Values are only produced through validating constructors, so every `Tree`
/// is connected, acyclic and carries symmetric, sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(TreeError::VertexCount(n))
    }
}

impl Tree {
    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Tree> {
        check_order(n)?;
        Ok(Tree::from_valid_edges(n, (1..n).map(|i| (i - 1, i))))
    }

    /// The star with center 0.
    pub fn star(n: usize) -> Result<Tree> {
        check_order(n)?;
        Ok(Tree::from_valid_edges(n, (1..n).map(|i| (0, i))))
    }

    /// Two adjacent centers 0 and 1; `s` pendant leaves on 0 and `t` on 1.
    pub fn double_star(s: usize, t: usize) -> Result<Tree> {
        let n = s + t + 2;
        check_order(n)?;
        let edges = std::iter::once((0, 1))
            .chain((0..s).map(|i| (0, 2 + i)))
            .chain((0..t).map(|i| (1, 2 + s + i)));
        Ok(Tree::from_valid_edges(n, edges))
    }

    /// Validates an arbitrary edge list.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        check_order(n)?;
        let mut seen = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(TreeError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(TreeError::SelfLoop(a));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(TreeError::DuplicateEdge(a, b));
            }
        }
        if edges.len() > n - 1 {
            return Err(TreeError::WrongEdgeCount {
                expected: n - 1,
                found: edges.len(),
            });
        }
        let mut dsu = DisjointSets::new(n);
        for &(a, b) in edges {
            if !dsu.union(a, b) {
                return Err(TreeError::Cycle(a, b));
            }
        }
        if edges.len() < n - 1 {
            return Err(TreeError::Disconnected {
                components: n - edges.len(),
            });
        }
        Ok(Tree::from_valid_edges(n, edges.iter().copied()))
    }

    /// Decodes a Prüfer sequence; the tree has `seq.len() + 2` vertices.
    pub fn from_pruefer(seq: &[usize]) -> Result<Tree> {
        let n = seq.len() + 2;
        check_order(n)?;
        if let Some(&entry) = seq.iter().find(|&&x| x >= n) {
            return Err(TreeError::PrueferEntry { entry, n });
        }
        let mut degree = [1u8; MAX_VERTICES];
        for &x in seq {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &x in seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
            edges.push((leaf, x));
            degree[leaf] = 0;
            degree[x] -= 1;
        }
        let mut rest = (0..n).filter(|&v| degree[v] == 1);
        let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
        edges.push((a, b));
        Ok(Tree::from_valid_edges(n, edges))
    }

    /// Rebuilds a representative tree from its canonical code.
    pub fn from_canonical_code(code: &CanonicalCode) -> Result<Tree> {
        let bytes = code.as_bytes();
        let Some((&n, packed)) = bytes.split_first() else {
            return Err(TreeError::BadCode("empty".into()));
        };
        let n = n as usize;
        check_order(n)?;
        if packed.len() != (2 * n).div_ceil(8) {
            return Err(TreeError::BadCode(format!("wrong length for n = {n}")));
        }
        let bit = |i: usize| packed[i / 8] >> (7 - i % 8) & 1 == 1;
        let mut stack: Vec<usize> = Vec::new();
        let mut edges = Vec::with_capacity(n - 1);
        let mut next = 0;
        for i in 0..2 * n {
            if bit(i) {
                if next == n || (i > 0 && stack.is_empty()) {
                    return Err(TreeError::BadCode("unbalanced".into()));
                }
                if let Some(&parent) = stack.last() {
                    edges.push((parent, next));
                }
                stack.push(next);
                next += 1;
            } else if stack.pop().is_none() {
                return Err(TreeError::BadCode("unbalanced".into()));
            }
        }
        if !stack.is_empty() || next != n {
            return Err(TreeError::BadCode("unbalanced".into()));
        }
        let tree = Tree::from_valid_edges(n, edges);
        if &canonical_code(&tree) != code {
            return Err(TreeError::BadCode("not in canonical form".into()));
        }
        Ok(tree)
    }

    fn from_valid_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Tree {
        let mut adjacency = vec![Vec::new(); n];
        let mut list = Vec::with_capacity(n.saturating_sub(1));
        for (a, b) in edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
            list.push((a.min(b), a.max(b)));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        list.sort_unstable();
        debug_assert_eq!(list.len(), n - 1);
        Tree { adjacency, edges: list }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as `(min, max)` pairs in sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Vertices in breadth-first order from `root`.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n());
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Returns the same tree with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree> {
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Tree::from_edge_list(self.n(), &edges)
    }

    /// Adds a new leaf hanging off `v`.
    pub fn with_leaf(&self, v: usize) -> Result<Tree> {
        let n = self.n() + 1;
        check_order(n)?;
        let edges = self.edges.iter().copied().chain(std::iter::once((v, n - 1)));
        Ok(Tree::from_valid_edges(n, edges))
    }

    /// Checks the structural invariants; constructors already guarantee them.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n();
        check_order(n)?;
        if self.edges.len() != n - 1 {
            return Err(TreeError::WrongEdgeCount {
                expected: n - 1,
                found: self.edges.len(),
            });
        }
        let degree_sum: usize = self.adjacency.iter().map(Vec::len).sum();
        if degree_sum != 2 * (n - 1) {
            return Err(TreeError::WrongEdgeCount {
                expected: n - 1,
                found: degree_sum / 2,
            });
        }
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            for &w in nbrs {
                if w == v {
                    return Err(TreeError::SelfLoop(v));
                }
                if self.adjacency[w].binary_search(&v).is_err() {
                    return Err(TreeError::BadCode(format!("asymmetric adjacency {v}-{w}")));
                }
            }
        }
        let reached = self.bfs_order(0).len();
        if reached != n {
            return Err(TreeError::Disconnected {
                components: n - reached + 1,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Tree {
    /// Formats in the `edges:N;a-b,...` grammar accepted by [`parse_tree_spec`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edges:{};", self.n())?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Label-invariant identifier of a free tree.
///
/// Layout: one byte holding `n`, followed by the AHU parenthesis string of
/// the tree rooted at its center (open = 1, close = 0), packed MSB-first and
/// zero-padded to a whole byte. For bicentral trees the smaller of the two
/// rootings is kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        hex::decode(s)
            .map(CanonicalCode)
            .map_err(|e| TreeError::BadCode(e.to_string()))
    }

    /// Vertex count encoded in the first byte.
    pub fn n(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl FromStr for CanonicalCode {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self> {
        CanonicalCode::from_hex(s)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        CanonicalCode::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// Fixed-capacity adjacency used by the canonical form, so that hot loops
/// (the labeled-tree oracle) run without allocating.
#[derive(Clone, Copy)]
struct Adjacency {
    n: usize,
    degree: [u8; MAX_VERTICES],
    neighbors: [[u8; MAX_VERTICES]; MAX_VERTICES],
}

impl Adjacency {
    fn empty(n: usize) -> Self {
        Adjacency {
            n,
            degree: [0; MAX_VERTICES],
            neighbors: [[0; MAX_VERTICES]; MAX_VERTICES],
        }
    }

    fn of(t: &Tree) -> Self {
        let mut adj = Adjacency::empty(t.n());
        for &(a, b) in t.edges() {
            adj.add_edge(a, b);
        }
        adj
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.neighbors[a][self.degree[a] as usize] = b as u8;
        self.degree[a] += 1;
        self.neighbors[b][self.degree[b] as usize] = a as u8;
        self.degree[b] += 1;
    }

    fn nbrs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors[v][..self.degree[v] as usize].iter().map(|&w| w as usize)
    }

    /// Linear-time Prüfer decoding; entries must be below `seq.len() + 2`.
    fn from_pruefer(seq: &[usize]) -> Self {
        let n = seq.len() + 2;
        let mut adj = Adjacency::empty(n);
        let mut remaining = [1u8; MAX_VERTICES];
        for &x in seq {
            remaining[x] += 1;
        }
        let mut ptr = (0..n).find(|&v| remaining[v] == 1).unwrap();
        let mut leaf = ptr;
        for &x in seq {
            adj.add_edge(leaf, x);
            remaining[leaf] = 0;
            remaining[x] -= 1;
            if remaining[x] == 1 && x < ptr {
                leaf = x;
            } else {
                ptr += 1;
                while remaining[ptr] != 1 {
                    ptr += 1;
                }
                leaf = ptr;
            }
        }
        let other = (0..n).rev().find(|&v| v != leaf && remaining[v] == 1).unwrap();
        adj.add_edge(leaf, other);
        adj
    }

    fn centers(&self) -> (usize, Option<usize>) {
        let n = self.n;
        if n <= 2 {
            return (0, (n == 2).then_some(1));
        }
        let mut degree = self.degree;
        let mut layer = [0usize; MAX_VERTICES];
        let mut len = 0;
        for (v, _) in degree[..n].iter().enumerate().filter(|(_, &d)| d == 1) {
            layer[len] = v;
            len += 1;
        }
        let mut remaining = n;
        while remaining > 2 {
            remaining -= len;
            let mut next = [0usize; MAX_VERTICES];
            let mut next_len = 0;
            for &leaf in &layer[..len] {
                degree[leaf] = 0;
                for w in self.nbrs(leaf) {
                    if degree[w] > 0 {
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next[next_len] = w;
                            next_len += 1;
                        }
                    }
                }
            }
            layer = next;
            len = next_len;
        }
        let (a, b) = (layer[0], layer[1]);
        match len {
            1 => (a, None),
            _ => (a.min(b), Some(a.max(b))),
        }
    }

    /// AHU bit string rooted at `root`: `2n` bits in the low end of a u32.
    #[cfg(test)]
    fn rooted_bits(&self, root: usize) -> u32 {
        let n = self.n;
        let order = {
            let mut order = Vec::with_capacity(n);
            let mut parent = [usize::MAX; MAX_VERTICES];
            parent[root] = root;
            order.push(root);
            let mut head = 0;
            while head < order.len() {
                let v = order[head];
                head += 1;
                for w in self.nbrs(v) {
                    if parent[w] == usize::MAX {
                        parent[w] = v;
                        order.push(w);
                    }
                }
            }
            (order, parent)
        };
        let (order, parent) = order;
        let mut code = [(0u64, 0u32); MAX_VERTICES];
        for &v in order.iter().rev() {
            let mut kids: Vec<_> = self
                .nbrs(v)
                .filter(|&w| parent[w] == v && w != root)
                .map(|w| code[w])
                .collect();
            code[v] = wrap(&mut kids);
        }
        (code[root].0 >> (64 - 2 * n)) as u32
    }

    /// Reference form: root at each center explicitly and keep the larger code.
    #[cfg(test)]
    fn canonical_bits_by_rooting(&self) -> u32 {
        match self.centers() {
            (c, None) => self.rooted_bits(c),
            (a, Some(b)) => self.rooted_bits(a).max(self.rooted_bits(b)),
        }
    }

    /// Canonical code in one pass: peel leaves layer by layer, finishing each
    /// peeled vertex's subtree code, until the center remains. Equal to
    /// rooting at each center and taking the larger code.
    fn canonical_bits(&self) -> u32 {
        let n = self.n;
        if n == 1 {
            return 0b10;
        }
        let mut degree = self.degree;
        let mut kids = [[(0u64, 0u32); MAX_VERTICES]; MAX_VERTICES];
        let mut kid_count = [0usize; MAX_VERTICES];
        let mut layer = [0usize; MAX_VERTICES];
        let mut len = 0;
        for (v, _) in degree[..n].iter().enumerate().filter(|(_, &d)| d == 1) {
            layer[len] = v;
            len += 1;
        }
        let mut remaining = n;
        while remaining > 2 {
            remaining -= len;
            let mut next = [0usize; MAX_VERTICES];
            let mut next_len = 0;
            for &leaf in &layer[..len] {
                let code = wrap(&mut kids[leaf][..kid_count[leaf]]);
                degree[leaf] = 0;
                for w in self.nbrs(leaf) {
                    if degree[w] > 0 {
                        kids[w][kid_count[w]] = code;
                        kid_count[w] += 1;
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next[next_len] = w;
                            next_len += 1;
                        }
                    }
                }
            }
            layer = next;
            len = next_len;
        }
        let root_code = if len == 1 {
            wrap(&mut kids[layer[0]][..kid_count[layer[0]]])
        } else {
            let (a, b) = (layer[0], layer[1]);
            let half_a = wrap(&mut kids[a][..kid_count[a]]);
            let half_b = wrap(&mut kids[b][..kid_count[b]]);
            kids[a][kid_count[a]] = half_b;
            kids[b][kid_count[b]] = half_a;
            let whole_a = wrap(&mut kids[a][..=kid_count[a]]);
            let whole_b = wrap(&mut kids[b][..=kid_count[b]]);
            whole_a.max(whole_b)
        };
        debug_assert_eq!(root_code.1 as usize, 2 * n);
        (root_code.0 >> (64 - 2 * n)) as u32
    }
}

/// `1 kids... 0` with the kids in decreasing order; codes are left-aligned
/// `(bits, width)` pairs.
fn wrap(kids: &mut [(u64, u32)]) -> (u64, u32) {
    kids.sort_unstable_by_key(|k| std::cmp::Reverse(k.0));
    let mut acc: u64 = 1 << 63;
    let mut used = 1u32;
    for &(c, w) in kids.iter() {
        acc |= c >> used;
        used += w;
    }
    (acc, used + 1)
}

/// The center of a tree: one vertex, or both ends of the central edge.
pub fn centers(t: &Tree) -> (usize, Option<usize>) {
    Adjacency::of(t).centers()
}

fn pack(n: usize, bits: u32) -> CanonicalCode {
    let nbytes = (2 * n).div_ceil(8);
    let aligned = (bits as u64) << (64 - 2 * n);
    let mut out = Vec::with_capacity(1 + nbytes);
    out.push(n as u8);
    out.extend_from_slice(&aligned.to_be_bytes()[..nbytes]);
    CanonicalCode(out)
}

/// Canonical code as the raw `2n`-bit integer; equal iff isomorphic (for equal `n`).
pub fn canonical_bits(t: &Tree) -> u32 {
    Adjacency::of(t).canonical_bits()
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    pack(t.n(), canonical_bits(t))
}

/// Degree statistics of a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    /// Sorted ascending.
    pub degrees: Vec<usize>,
    pub leaf_count: usize,
    pub even_degree_count: usize,
}

pub fn degree_profile(t: &Tree) -> DegreeProfile {
    let mut degrees: Vec<usize> = (0..t.n()).map(|v| t.degree(v)).collect();
    degrees.sort_unstable();
    DegreeProfile {
        leaf_count: degrees.iter().filter(|&&d| d == 1).count(),
        even_degree_count: degrees.iter().filter(|&&d| d % 2 == 0).count(),
        degrees,
    }
}

/// One representative per isomorphism class of `n`-vertex trees, sorted by
/// canonical code.
///
/// Grows the classes of `n - 1` by one leaf at every vertex and deduplicates;
/// each tree on `n >= 2` vertices arises this way by deleting any leaf.
/// Representatives are the trees decoded from their canonical codes, so the
/// output does not depend on the growth order.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(TreeError::VertexCount(0));
    }
    if n > CENSUS_MAX_VERTICES {
        return Err(TreeError::OverBudget {
            n,
            limit: CENSUS_MAX_VERTICES,
        });
    }
    let mut level: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    let single = Tree::path(1)?;
    level.insert(canonical_code(&single), single);
    for _ in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..t.n() {
                let grown = t.with_leaf(v)?;
                next.entry(canonical_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level.keys().map(Tree::from_canonical_code).collect::<Result<Vec<_>>>()
}

/// Canonical codes of all free trees on `n` vertices, found by decoding every
/// one of the `n^(n-2)` Prüfer sequences. Slow; kept as an independent oracle
/// for [`enumerate_free_trees`].
pub fn enumerate_free_trees_pruefer(n: usize) -> Result<BTreeSet<CanonicalCode>> {
    check_order(n)?;
    if n > PRUEFER_ORACLE_MAX_VERTICES {
        return Err(TreeError::OverBudget {
            n,
            limit: PRUEFER_ORACLE_MAX_VERTICES,
        });
    }
    if n == 1 {
        return Ok(BTreeSet::from([canonical_code(&Tree::path(1)?)]));
    }
    // Canonical bit strings have 2n bits, so a flat bitmap indexes them.
    let mut seen = vec![false; 1 << (2 * n)];
    for_each_pruefer_sequence(n, |seq| {
        seen[Adjacency::from_pruefer(seq).canonical_bits() as usize] = true;
    });
    Ok(seen
        .iter()
        .enumerate()
        .filter(|(_, &hit)| hit)
        .map(|(bits, _)| pack(n, bits as u32))
        .collect())
}

/// Calls `f` on every sequence of length `n - 2` over `0..n`, in lexicographic order.
pub fn for_each_pruefer_sequence(n: usize, mut f: impl FnMut(&[usize])) {
    let len = n.saturating_sub(2);
    let mut seq = vec![0usize; len];
    loop {
        f(&seq);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

/// Parses the tree-spec grammar: `path:N`, `star:N`, `dstar:S,T`,
/// `edges:N;a-b,c-d,...`, `pruefer:a,b,c`.
pub fn parse_tree_spec(spec: &str) -> Result<Tree> {
    let err = |reason: &str| TreeError::Spec {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    let num = |s: &str| -> Result<usize> {
        s.trim()
            .parse::<usize>()
            .map_err(|_| err(&format!("`{}` is not a nonnegative integer", s.trim())))
    };
    let (kind, body) = spec
        .trim()
        .split_once(':')
        .ok_or_else(|| err("expected `kind:arguments`"))?;
    match kind {
        "path" => Tree::path(num(body)?),
        "star" => Tree::star(num(body)?),
        "dstar" => {
            let (s, t) = body.split_once(',').ok_or_else(|| err("expected `S,T`"))?;
            Tree::double_star(num(s)?, num(t)?)
        }
        "edges" => {
            let (n, list) = body.split_once(';').unwrap_or((body, ""));
            let n = num(n)?;
            let edges = list
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| {
                    let (a, b) = p.split_once('-').ok_or_else(|| err("edges look like `a-b`"))?;
                    Ok((num(a)?, num(b)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Tree::from_edge_list(n, &edges)
        }
        "pruefer" => {
            let seq = body
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(num)
                .collect::<Result<Vec<_>>>()?;
            Tree::from_pruefer(&seq)
        }
        other => Err(err(&format!("unknown tree kind `{other}`"))),
    }
}
