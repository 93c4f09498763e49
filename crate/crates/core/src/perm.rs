//! Finite permutations and homomorphisms from a free group into a symmetric
//! group.
//!
//! Permutations act on the right: `i^(p q) = (i^p)^q`, so [`Perm::then`]
//! applies `self` first. A word is evaluated letter by letter from the left.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{Alphabet, FreeWord, Sign};

/// Default bound on the order of an enumerated image group.
pub const DEFAULT_IMAGE_CEILING: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::BadPerm(format!("{images:?} is not a bijection on 0..{n}")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from disjoint cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p >= degree || q >= degree {
                    return Err(Error::BadPerm(format!("cycle point out of range 0..{degree}")));
                }
                images[p] = q;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// All permutations of `degree` points in lexicographic order of their
    /// image lists.
    pub fn all_lexicographic(degree: usize) -> Vec<Perm> {
        let mut current: Vec<usize> = (0..degree).collect();
        let mut out = vec![Perm { images: current.clone() }];
        while next_permutation(&mut current) {
            out.push(Perm { images: current.clone() });
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::BadPerm(format!("expected [i0,i1,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Err(Error::BadPerm("empty permutation".into()));
        }
        let images = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::BadPerm(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(images)
    }
}

/// A homomorphism `F(alphabet) -> Sym(degree)` given by generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuotientHom {
    alphabet: Alphabet,
    degree: usize,
    gen_images: Vec<Perm>,
}

impl FiniteQuotientHom {
    pub fn new(alphabet: Alphabet, gen_images: Vec<Perm>) -> Result<Self> {
        if gen_images.len() != alphabet.size() {
            return Err(Error::BadPerm(format!(
                "{} generator images for an alphabet of {} generators",
                gen_images.len(),
                alphabet.size()
            )));
        }
        let degree = gen_images[0].degree();
        if degree == 0 {
            return Err(Error::BadPerm("degree must be positive".into()));
        }
        if gen_images.iter().any(|p| p.degree() != degree) {
            return Err(Error::BadPerm("generator images have different degrees".into()));
        }
        Ok(FiniteQuotientHom { alphabet, degree, gen_images })
    }

    /// Every generator maps to the identity of degree 1.
    pub fn trivial(alphabet: Alphabet) -> Self {
        let gen_images = vec![Perm::identity(1); alphabet.size()];
        FiniteQuotientHom { alphabet, degree: 1, gen_images }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gen_images(&self) -> &[Perm] {
        &self.gen_images
    }

    pub fn eval_word(&self, w: &FreeWord) -> Result<Perm> {
        self.alphabet.check_word(w)?;
        let inverses: Vec<Perm> = self.gen_images.iter().map(Perm::inverse).collect();
        let mut images: Vec<usize> = (0..self.degree).collect();
        for l in w.letters() {
            let p = match l.sign {
                Sign::Pos => &self.gen_images[l.generator],
                Sign::Neg => &inverses[l.generator],
            };
            for i in images.iter_mut() {
                *i = p.apply(*i);
            }
        }
        Ok(Perm { images })
    }

    pub fn kills_relators(&self, relators: &[FreeWord]) -> bool {
        relators.iter().all(|r| matches!(self.eval_word(r), Ok(p) if p.is_identity()))
    }

    pub fn image_closure(&self) -> Result<Vec<Perm>> {
        self.image_closure_with_ceiling(DEFAULT_IMAGE_CEILING)
    }

    /// Breadth-first enumeration of the image group from the identity,
    /// multiplying on the right by the generators in alphabet order and
    /// then by their inverses in alphabet order.
    pub fn image_closure_with_ceiling(&self, ceiling: usize) -> Result<Vec<Perm>> {
        let mut steps: Vec<Perm> = self.gen_images.clone();
        steps.extend(self.gen_images.iter().map(Perm::inverse));

        let identity = Perm::identity(self.degree);
        let mut index: HashMap<Perm, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for s in &steps {
                let next = elements[k].then(s);
                if !index.contains_key(&next) {
                    if elements.len() == ceiling {
                        return Err(Error::ImageTooLarge(ceiling));
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(elements)
    }
}
