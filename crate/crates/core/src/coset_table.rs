//! Finite-index subgroups of a free group as complete coset tables
//! (Schreier graphs), and finite presentations.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::{FiniteQuotientHom, Perm};
use crate::word::{Alphabet, FreeWord, Letter, Sign};

/// Transitive right action of the free generators on cosets `0..n`, with
/// the subgroup being the stabilizer of coset `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosetTable {
    alphabet: Alphabet,
    action: Vec<Perm>,
    inverse: Vec<Perm>,
}

impl CosetTable {
    pub const BASE: usize = 0;

    pub fn new(alphabet: Alphabet, action: Vec<Perm>) -> Result<Self> {
        if action.len() != alphabet.size() {
            return Err(Error::BadTable(format!("{} generator rows for {} generators", action.len(), alphabet.size())));
        }
        let n = action[0].degree();
        if n == 0 {
            return Err(Error::BadTable("a table needs at least one coset".into()));
        }
        if action.iter().any(|p| p.degree() != n) {
            return Err(Error::BadTable("generator rows have different lengths".into()));
        }
        let inverse = action.iter().map(Perm::inverse).collect();
        let table = CosetTable { alphabet, action, inverse };
        let reached = table.reachable_from_base();
        if reached < n {
            return Err(Error::BadTable(format!("not transitive: {reached} of {n} cosets reachable")));
        }
        Ok(table)
    }

    fn reachable_from_base(&self) -> usize {
        let n = self.index();
        let mut seen = vec![false; n];
        seen[Self::BASE] = true;
        let mut queue = VecDeque::from([Self::BASE]);
        let mut count = 1;
        while let Some(c) = queue.pop_front() {
            for p in self.action.iter().chain(self.inverse.iter()) {
                let d = p.apply(c);
                if !seen[d] {
                    seen[d] = true;
                    count += 1;
                    queue.push_back(d);
                }
            }
        }
        count
    }

    /// The table of the regular action on the image group: cosets are the
    /// image elements in closure order and `x` sends `q` to `q * h(x)`.
    pub fn regular(h: &FiniteQuotientHom) -> Result<Self> {
        let elements = h.image_closure()?;
        let position: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let action = h
            .gen_images()
            .iter()
            .map(|g| {
                let images = elements.iter().map(|q| position[&q.then(g)]).collect();
                Perm::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        CosetTable::new(h.alphabet().clone(), action)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn index(&self) -> usize {
        self.action[0].degree()
    }

    pub fn rank(&self) -> usize {
        self.alphabet.size()
    }

    pub fn action(&self) -> &[Perm] {
        &self.action
    }

    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        match letter.sign {
            Sign::Pos => self.action[letter.generator].apply(coset),
            Sign::Neg => self.inverse[letter.generator].apply(coset),
        }
    }

    pub fn trace(&self, start: usize, w: &FreeWord) -> Result<usize> {
        if start >= self.index() {
            return Err(Error::BadCoset { coset: start, index: self.index() });
        }
        self.alphabet.check_word(w)?;
        Ok(w.letters().iter().fold(start, |c, &l| self.act(c, l)))
    }

    /// The coset reached from the base.
    pub fn coset_of(&self, w: &FreeWord) -> Result<usize> {
        self.trace(Self::BASE, w)
    }

    pub fn contains(&self, w: &FreeWord) -> bool {
        matches!(self.coset_of(w), Ok(Self::BASE))
    }

    /// True iff the initial segments of `w` lie in pairwise distinct cosets.
    pub fn separates_prefixes(&self, w: &FreeWord) -> Result<bool> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        self.alphabet.check_word(w)?;
        if w.len() > self.index() {
            return Ok(false);
        }
        let mut seen = vec![false; self.index()];
        let mut c = Self::BASE;
        for (k, &l) in w.letters().iter().enumerate() {
            if seen[c] {
                return Ok(false);
            }
            seen[c] = true;
            if k + 1 < w.len() {
                c = self.act(c, l);
            }
        }
        Ok(true)
    }

    /// Whether the action is regular, i.e. the generated permutation group
    /// has order exactly `n` (the subgroup is normal with quotient of order n).
    pub fn is_regular(&self) -> Result<bool> {
        let h = FiniteQuotientHom::new(self.alphabet.clone(), self.action.clone())?;
        Ok(h.image_closure()?.len() == self.index())
    }

    pub fn kills(&self, relators: &[FreeWord]) -> bool {
        relators.iter().all(|r| (0..self.index()).all(|c| matches!(self.trace(c, r), Ok(d) if d == c)))
    }

    /// Renumbers cosets in breadth-first order from the base, scanning
    /// (coset, generator, sign) with `+1` before `-1`.
    pub fn canonical(&self) -> CosetTable {
        let n = self.index();
        let mut new_of = vec![usize::MAX; n];
        let mut order = vec![Self::BASE];
        new_of[Self::BASE] = 0;
        let mut k = 0;
        while k < order.len() {
            let c = order[k];
            for g in 0..self.rank() {
                for l in [Letter::pos(g), Letter::neg(g)] {
                    let d = self.act(c, l);
                    if new_of[d] == usize::MAX {
                        new_of[d] = order.len();
                        order.push(d);
                    }
                }
            }
            k += 1;
        }
        let action = self
            .action
            .iter()
            .map(|p| Perm::from_images(order.iter().map(|&old| new_of[p.apply(old)]).collect()))
            .collect::<Result<Vec<_>>>()
            .expect("renumbering a bijection is a bijection");
        CosetTable::new(self.alphabet.clone(), action).expect("renumbering preserves transitivity")
    }

    /// The same table over the alphabet in which every generator listed in
    /// `flipped` is replaced by its inverse.
    pub fn reoriented(&self, flipped: &[usize]) -> CosetTable {
        let action = (0..self.rank())
            .map(|g| if flipped.contains(&g) { self.inverse[g].clone() } else { self.action[g].clone() })
            .collect();
        CosetTable::new(self.alphabet.clone(), action).expect("inverting rows preserves transitivity")
    }

    /// Text form: `n=<int>` then `<name>: i0 i1 ...` per generator.
    pub fn to_text(&self) -> String {
        let mut s = format!("n={}\n", self.index());
        for (g, p) in self.action.iter().enumerate() {
            let row: Vec<String> = p.images().iter().map(|i| i.to_string()).collect();
            let _ = writeln!(s, "{}: {}", self.alphabet.name(g), row.join(" "));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::BadTable("empty table file".into()))?;
        let n: usize = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::BadTable(format!("expected n=<int>, got {header:?}")))?;
        let mut names = Vec::new();
        let mut rows = Vec::new();
        for line in lines {
            let (name, images) = line
                .split_once(':')
                .ok_or_else(|| Error::BadTable(format!("expected <name>: images, got {line:?}")))?;
            let mut chars = name.trim().chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => return Err(Error::BadTable(format!("bad generator name {name:?}"))),
            };
            let images = images
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|e| Error::BadTable(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            if images.len() != n {
                return Err(Error::BadTable(format!("row {c} has {} entries, expected {n}", images.len())));
            }
            names.push(c);
            rows.push(Perm::from_images(images).map_err(|e| Error::BadTable(e.to_string()))?);
        }
        let alphabet = Alphabet::new(names).map_err(|e| Error::BadTable(e.to_string()))?;
        CosetTable::new(alphabet, rows)
    }
}

/// A finite presentation `<alphabet | relators>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relators: Vec<FreeWord>) -> Result<Self> {
        for r in &relators {
            if r.is_empty() {
                return Err(Error::BadPresentation("relators must be nonempty".into()));
            }
            if !r.is_reduced() || !alphabet.contains_word(r) {
                return Err(Error::BadPresentation("relator outside the alphabet".into()));
            }
        }
        Ok(Presentation { alphabet, relators })
    }

    pub fn free(alphabet: Alphabet) -> Self {
        Presentation { alphabet, relators: Vec::new() }
    }

    /// Parses relators given in word syntax over a standard alphabet of `m` letters.
    pub fn parse(m: usize, relators: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::standard(m)?;
        let relators = relators.iter().map(|r| alphabet.parse_word(r)).collect::<Result<Vec<_>>>()?;
        Presentation::new(alphabet, relators)
    }

    /// Higman's four-generator group: `a_i a_{i+1} a_i^-1 a_{i+1}^-2` for
    /// `i` mod 4, on generators `a b c d`.
    pub fn higman() -> Self {
        Presentation::parse(4, &["abABB", "bcBCC", "cdCDD", "daDAA"]).expect("fixed presentation")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn to_text(&self) -> String {
        let names: Vec<String> = self.alphabet.names().iter().map(|c| c.to_string()).collect();
        let mut s = format!("gens: {}\n", names.join(" "));
        for r in &self.relators {
            let _ = writeln!(s, "rel: {}", self.alphabet.format_word(r));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut alphabet: Option<Alphabet> = None;
        let mut relators = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |m: String| Error::BadPresentation(format!("line {}: {m}", lineno + 1));
            if let Some(rest) = line.strip_prefix("gens:") {
                if alphabet.is_some() {
                    return Err(bad("repeated gens line".into()));
                }
                let names = rest
                    .split_whitespace()
                    .map(|t| {
                        let mut cs = t.chars();
                        match (cs.next(), cs.next()) {
                            (Some(c), None) => Ok(c),
                            _ => Err(bad(format!("bad generator name {t:?}"))),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                alphabet = Some(Alphabet::new(names).map_err(|e| bad(e.to_string()))?);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let al = alphabet.as_ref().ok_or_else(|| bad("rel before gens".into()))?;
                let r = al.parse_word(rest.trim()).map_err(|e| bad(e.to_string()))?;
                if r.is_empty() {
                    return Err(bad("relator reduces to the identity".into()));
                }
                relators.push(r);
            } else {
                return Err(bad(format!("unrecognised line {line:?}")));
            }
        }
        let alphabet = alphabet.ok_or_else(|| Error::BadPresentation("missing gens line".into()))?;
        Presentation::new(alphabet, relators)
    }
}
