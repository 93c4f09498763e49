//! Stallings folding as an independent check that a list of words is a free
//! basis of the subgroup described by a coset table.
//!
//! A bouquet of one loop per word is folded until no vertex has two equally
//! labelled edges leaving or entering it. Folding never raises the rank
//! `E - V + 1`, and it keeps the rank exactly when no step identifies two
//! edges that already share both endpoints. So the words form a basis of the
//! subgroup recognised by the folded graph iff the folded rank equals the
//! number of words.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::coset_table::CosetTable;
use crate::transversal::SubgroupBasis;
use crate::word::{FreeWord, Letter, Sign};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new() -> Self {
        UnionFind { parent: Vec::new() }
    }

    fn add(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
        }
    }
}

/// A folded graph: `edges` holds `(source, generator, target)` with
/// vertex ids `0..vertices`, the base is vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedGraph {
    pub vertices: usize,
    pub edges: BTreeSet<(usize, usize, usize)>,
}

impl FoldedGraph {
    pub fn rank(&self) -> isize {
        self.edges.len() as isize - self.vertices as isize + 1
    }
}

/// Folds the bouquet of `words` based at vertex 0.
pub fn fold_words(words: &[FreeWord]) -> FoldedGraph {
    let mut uf = UnionFind::new();
    let base = uf.add();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for w in words {
        let mut at = base;
        for (k, &l) in w.letters().iter().enumerate() {
            let next = if k + 1 == w.len() { base } else { uf.add() };
            match l.sign {
                Sign::Pos => edges.push((at, l.generator, next)),
                Sign::Neg => edges.push((next, l.generator, at)),
            }
            at = next;
        }
    }

    loop {
        let mut changed = false;
        let mut seen: HashMap<(usize, usize, Sign), usize> = HashMap::new();
        for &(u, g, v) in &edges {
            for (from, sign, to) in [(u, Sign::Pos, v), (v, Sign::Neg, u)] {
                let (from, to) = (uf.find(from), uf.find(to));
                match seen.get(&(from, g, sign)) {
                    Some(&other) => {
                        let other = uf.find(other);
                        if other != to {
                            uf.union(other, to);
                            changed = true;
                        }
                    }
                    None => {
                        seen.insert((from, g, sign), to);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut ids: HashMap<usize, usize> = HashMap::new();
    let mut id_of = |uf: &mut UnionFind, x: usize| {
        let r = uf.find(x);
        let next = ids.len();
        *ids.entry(r).or_insert(next)
    };
    id_of(&mut uf, base);
    let mut folded = BTreeSet::new();
    for &(u, g, v) in &edges {
        let (u, v) = (id_of(&mut uf, u), id_of(&mut uf, v));
        folded.insert((u, g, v));
    }
    FoldedGraph { vertices: ids.len(), edges: folded }
}

/// Based, label-preserving isomorphism between a folded graph and the coset
/// graph of `table`.
pub fn isomorphic_to_table(graph: &FoldedGraph, table: &CosetTable) -> bool {
    let n = table.index();
    let m = table.rank();
    if graph.vertices != n || graph.edges.len() != n * m {
        return false;
    }
    let mut out: HashMap<(usize, usize, Sign), usize> = HashMap::new();
    for &(u, g, v) in &graph.edges {
        if g >= m || out.insert((u, g, Sign::Pos), v).is_some() || out.insert((v, g, Sign::Neg), u).is_some() {
            return false;
        }
    }
    let mut to_coset = vec![usize::MAX; n];
    let mut to_vertex = vec![usize::MAX; n];
    to_coset[0] = CosetTable::BASE;
    to_vertex[CosetTable::BASE] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        let c = to_coset[v];
        for g in 0..m {
            for sign in [Sign::Pos, Sign::Neg] {
                let Some(&w) = out.get(&(v, g, sign)) else {
                    return false;
                };
                let d = table.act(c, Letter::new(g, sign));
                match (to_coset[w], to_vertex[d]) {
                    (usize::MAX, usize::MAX) => {
                        to_coset[w] = d;
                        to_vertex[d] = w;
                        queue.push_back(w);
                    }
                    (cd, vw) if cd == d && vw == w => {}
                    _ => return false,
                }
            }
        }
    }
    to_coset.iter().all(|&c| c != usize::MAX)
}

/// True iff `words` is a free basis of the subgroup of `table`.
pub fn fold_verify_words(table: &CosetTable, words: &[FreeWord]) -> bool {
    if words.iter().any(|w| w.is_empty()) || !words.iter().all(|w| table.alphabet().contains_word(w)) {
        return false;
    }
    let graph = fold_words(words);
    graph.rank() == words.len() as isize && isomorphic_to_table(&graph, table)
}

pub fn fold_verify(b: &SubgroupBasis) -> bool {
    fold_verify_words(&b.table, &b.elements)
}
