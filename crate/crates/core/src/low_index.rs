//! Enumeration of all subgroups of a given small index containing the
//! normal closure of a presentation's relators.
//!
//! Plain backtracking over partial coset tables. The first undefined entry in
//! (coset, generator, sign) order is filled either with an existing coset or
//! with the next fresh one, so every complete table is produced already in
//! canonical breadth-first numbering and each subgroup is produced once.
//! After every choice the relators are scanned from every coset and entries
//! forced by a single remaining gap are filled in.

use crate::coset_table::{CosetTable, Presentation};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::word::{FreeWord, Letter, Sign};

pub const DEFAULT_MAX_INDEX: usize = 8;

#[derive(Clone)]
struct Partial {
    rank: usize,
    cosets: usize,
    fwd: Vec<Vec<Option<usize>>>,
    bwd: Vec<Vec<Option<usize>>>,
}

impl Partial {
    fn new(rank: usize, index: usize) -> Self {
        Partial { rank, cosets: 1, fwd: vec![vec![None; rank]; index], bwd: vec![vec![None; rank]; index] }
    }

    fn get(&self, c: usize, l: Letter) -> Option<usize> {
        match l.sign {
            Sign::Pos => self.fwd[c][l.generator],
            Sign::Neg => self.bwd[c][l.generator],
        }
    }

    fn set(&mut self, c: usize, l: Letter, d: usize) {
        let (g, other) = (l.generator, l.inverse());
        match l.sign {
            Sign::Pos => self.fwd[c][g] = Some(d),
            Sign::Neg => self.bwd[c][g] = Some(d),
        }
        match other.sign {
            Sign::Pos => self.fwd[d][g] = Some(c),
            Sign::Neg => self.bwd[d][g] = Some(c),
        }
    }

    fn first_undefined(&self) -> Option<(usize, Letter)> {
        for c in 0..self.cosets {
            for g in 0..self.rank {
                for l in [Letter::pos(g), Letter::neg(g)] {
                    if self.get(c, l).is_none() {
                        return Some((c, l));
                    }
                }
            }
        }
        None
    }

    /// Scans every relator from every coset, deducing single-gap entries
    /// until a fixpoint. Returns false on a contradiction.
    fn close(&mut self, relators: &[FreeWord]) -> bool {
        loop {
            let mut changed = false;
            for c in 0..self.cosets {
                for r in relators {
                    match self.scan(c, r.letters()) {
                        Scan::Conflict => return false,
                        Scan::Deduce(f, l, b) => {
                            self.set(f, l, b);
                            changed = true;
                        }
                        Scan::Open => {}
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn scan(&self, c: usize, letters: &[Letter]) -> Scan {
        let k = letters.len();
        let (mut f, mut i) = (c, 0);
        while i < k {
            match self.get(f, letters[i]) {
                Some(d) => {
                    f = d;
                    i += 1;
                }
                None => break,
            }
        }
        if i == k {
            return if f == c { Scan::Open } else { Scan::Conflict };
        }
        let (mut b, mut j) = (c, k);
        while j > i {
            match self.get(b, letters[j - 1].inverse()) {
                Some(d) => {
                    b = d;
                    j -= 1;
                }
                None => break,
            }
        }
        if j == i {
            if f == b {
                Scan::Open
            } else {
                Scan::Conflict
            }
        } else if j == i + 1 {
            Scan::Deduce(f, letters[i], b)
        } else {
            Scan::Open
        }
    }

    fn into_table(self, p: &Presentation) -> CosetTable {
        let n = self.cosets;
        let action = (0..self.rank)
            .map(|g| {
                Perm::from_images((0..n).map(|c| self.fwd[c][g].expect("complete table")).collect())
                    .expect("complete partial table is a bijection")
            })
            .collect();
        CosetTable::new(p.alphabet().clone(), action).expect("tables built by definition are transitive")
    }
}

enum Scan {
    Open,
    Conflict,
    Deduce(usize, Letter, usize),
}

fn search(state: Partial, index: usize, p: &Presentation, out: &mut Vec<CosetTable>) {
    let mut state = state;
    if !state.close(p.relators()) {
        return;
    }
    match state.first_undefined() {
        None => {
            if state.cosets == index {
                out.push(state.into_table(p));
            }
        }
        Some((c, l)) => {
            for d in 0..state.cosets {
                if state.get(d, l.inverse()).is_none() {
                    let mut next = state.clone();
                    next.set(c, l, d);
                    search(next, index, p, out);
                }
            }
            if state.cosets < index {
                let mut next = state;
                let d = next.cosets;
                next.cosets += 1;
                next.set(c, l, d);
                search(next, index, p, out);
            }
        }
    }
}

/// All transitive coset tables with exactly `index` cosets in which every
/// relator of `p` is a closed loop at every coset, one per subgroup, sorted
/// by their text form.
pub fn low_index_tables(p: &Presentation, index: usize) -> Result<Vec<CosetTable>> {
    low_index_tables_bounded(p, index, DEFAULT_MAX_INDEX)
}

pub fn low_index_tables_bounded(p: &Presentation, index: usize, max_index: usize) -> Result<Vec<CosetTable>> {
    if index == 0 || index > max_index {
        return Err(Error::BadBound(format!("index {index} outside 1..={max_index}")));
    }
    let mut out = Vec::new();
    search(Partial::new(p.alphabet().size(), index), index, p, &mut out);
    out.sort_by_cached_key(|t| t.to_text());
    Ok(out)
}
