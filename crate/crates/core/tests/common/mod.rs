#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use relator_basis::{Alphabet, CosetTable, FreeWord, Letter, Perm, Sign};

/// Cancels one adjacent inverse pair per pass until none is left.
pub fn naive_reduce(raw: &[Letter]) -> Vec<Letter> {
    let mut v = raw.to_vec();
    loop {
        match v.windows(2).position(|p| p[0].is_inverse_of(p[1])) {
            Some(i) => {
                v.drain(i..i + 2);
            }
            None => return v,
        }
    }
}

pub fn random_letter<R: Rng>(rng: &mut R, m: usize) -> Letter {
    let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
    Letter::new(rng.gen_range(0..m), sign)
}

pub fn random_raw<R: Rng>(rng: &mut R, m: usize, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_letter(rng, m)).collect()
}

pub fn random_word<R: Rng>(rng: &mut R, m: usize, max_len: usize) -> FreeWord {
    FreeWord::reduce(random_raw(rng, m, max_len))
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Perm::from_images(images).unwrap()
}

/// A uniformly random n-cycle.
pub fn random_cycle<R: Rng>(rng: &mut R, n: usize) -> Perm {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut images = vec![0; n];
    for k in 0..n {
        images[order[k]] = order[(k + 1) % n];
    }
    Perm::from_images(images).unwrap()
}

/// Random transitive table: random permutations, rejected until transitive;
/// with one generator the only transitive actions are n-cycles.
pub fn random_table<R: Rng>(rng: &mut R, m: usize, n: usize) -> CosetTable {
    let al = Alphabet::standard(m).unwrap();
    if m == 1 {
        return CosetTable::new(al, vec![random_cycle(rng, n)]).unwrap();
    }
    loop {
        let action = (0..m).map(|_| random_perm(rng, n)).collect();
        if let Ok(t) = CosetTable::new(al.clone(), action) {
            return t;
        }
    }
}

/// A random element of the subgroup of `t`: a random word followed by a path
/// back to the base.
pub fn random_subgroup_element<R: Rng>(rng: &mut R, t: &CosetTable, max_len: usize) -> FreeWord {
    let w = random_word(rng, t.rank(), max_len);
    let back = path_to_base(t, t.coset_of(&w).unwrap());
    &w * &back
}

/// Shortest word from `c` to the base, by breadth-first search.
pub fn path_to_base(t: &CosetTable, c: usize) -> FreeWord {
    let n = t.index();
    let mut prev: Vec<Option<(usize, Letter)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[c] = true;
    let mut queue = std::collections::VecDeque::from([c]);
    while let Some(x) = queue.pop_front() {
        if x == CosetTable::BASE {
            break;
        }
        for g in 0..t.rank() {
            for l in [Letter::pos(g), Letter::neg(g)] {
                let y = t.act(x, l);
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, l));
                    queue.push_back(y);
                }
            }
        }
    }
    let mut letters = Vec::new();
    let mut at = CosetTable::BASE;
    while at != c {
        let (x, l) = prev[at].unwrap();
        letters.push(l);
        at = x;
    }
    letters.reverse();
    FreeWord::reduce(letters)
}

/// A reduced closed walk at the base visiting distinct cosets before
/// returning, so its initial segments are separated. None if the walk gets
/// stuck.
pub fn random_simple_loop<R: Rng>(rng: &mut R, t: &CosetTable) -> Option<FreeWord> {
    let mut visited = vec![false; t.index()];
    visited[CosetTable::BASE] = true;
    let mut at = CosetTable::BASE;
    let mut letters: Vec<Letter> = Vec::new();
    for _ in 0..4 * t.index() + 4 {
        let mut options: Vec<(Letter, bool)> = Vec::new();
        for g in 0..t.rank() {
            for l in [Letter::pos(g), Letter::neg(g)] {
                if letters.last().is_some_and(|p| p.is_inverse_of(l)) {
                    continue;
                }
                let d = t.act(at, l);
                if d == CosetTable::BASE {
                    options.push((l, true));
                } else if !visited[d] {
                    options.push((l, false));
                }
            }
        }
        let (l, closes) = *options.choose(rng)?;
        letters.push(l);
        if closes {
            return Some(FreeWord::reduce(letters));
        }
        at = t.act(at, l);
        visited[at] = true;
    }
    None
}
