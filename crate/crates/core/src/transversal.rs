//! Schreier transversals and Nielsen-Schreier bases of finite-index
//! subgroups, Schreier rewriting, and the basis that contains a prescribed
//! closed word whose initial segments lie in distinct cosets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::coset_table::CosetTable;
use crate::error::{Error, Result};
use crate::word::{FreeWord, Letter, Sign};

/// Prefix-closed coset representatives, indexed by coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierTransversal {
    pub table: CosetTable,
    pub reps: Vec<FreeWord>,
}

impl SchreierTransversal {
    /// Breadth-first transversal, optionally seeded with a prefix-closed set
    /// of words in distinct cosets. Letters are tried in generator order,
    /// `+1` before `-1`; the first arrival at a coset becomes its
    /// representative.
    pub fn new(table: &CosetTable, seed: Option<&[FreeWord]>) -> Result<Self> {
        let n = table.index();
        let al = table.alphabet();
        let seed = seed.unwrap_or(&[]);

        let seed_set: BTreeSet<&FreeWord> = seed.iter().collect();
        for w in seed {
            al.check_word(w)?;
            for k in 0..w.len() {
                let p = w.prefix(k);
                if !seed_set.contains(&p) {
                    return Err(Error::BadSeed(al.format_word(&p)));
                }
            }
        }

        let mut reps: Vec<Option<FreeWord>> = vec![None; n];
        let mut levels: Vec<Vec<usize>> = Vec::new();
        reps[CosetTable::BASE] = Some(FreeWord::identity());
        let mut ordered: Vec<&FreeWord> = seed.iter().collect();
        ordered.sort_by_key(|w| w.len());
        for w in ordered {
            let c = table.coset_of(w)?;
            match &reps[c] {
                Some(existing) if existing == w => continue,
                Some(existing) => {
                    return Err(Error::SeedCollision(al.format_word(existing), al.format_word(w)));
                }
                None => {}
            }
            reps[c] = Some(w.clone());
            if levels.len() <= w.len() {
                levels.resize(w.len() + 1, Vec::new());
            }
            levels[w.len()].push(c);
        }
        if levels.is_empty() {
            levels.push(Vec::new());
        }
        if !levels[0].contains(&CosetTable::BASE) {
            levels[0].insert(0, CosetTable::BASE);
        }

        let mut len = 0;
        while len < levels.len() {
            let mut k = 0;
            while k < levels[len].len() {
                let c = levels[len][k];
                for g in 0..table.rank() {
                    for l in [Letter::pos(g), Letter::neg(g)] {
                        let d = table.act(c, l);
                        if reps[d].is_none() {
                            let rep = reps[c].as_ref().expect("expanded cosets have reps").push(l);
                            if levels.len() <= len + 1 {
                                levels.push(Vec::new());
                            }
                            levels[len + 1].push(d);
                            reps[d] = Some(rep);
                        }
                    }
                }
                k += 1;
            }
            len += 1;
        }

        let reps = reps.into_iter().map(|r| r.expect("table is transitive")).collect();
        Ok(SchreierTransversal { table: table.clone(), reps })
    }

    pub fn rep(&self, coset: usize) -> &FreeWord {
        &self.reps[coset]
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.table.index();
        if self.reps.len() != n {
            return Err(Error::BadSeed(format!("{} representatives for {n} cosets", self.reps.len())));
        }
        if !self.reps[CosetTable::BASE].is_empty() {
            return Err(Error::BadSeed("base representative is not the empty word".into()));
        }
        for (c, w) in self.reps.iter().enumerate() {
            if !w.is_reduced() || self.table.coset_of(w)? != c {
                return Err(Error::BadSeed(format!("representative of coset {c} does not trace to it")));
            }
            if !w.is_empty() {
                let parent = w.prefix(w.len() - 1);
                if self.reps[self.table.coset_of(&parent)?] != parent {
                    return Err(Error::BadSeed(format!("representative of coset {c} is not prefix-closed")));
                }
            }
        }
        Ok(())
    }

    /// Spanning-tree edges `(source coset, generator)` read off the
    /// representatives: each nonempty rep `u l` contributes the edge that its
    /// last letter crosses.
    pub fn tree_edges(&self) -> BTreeSet<(usize, usize)> {
        let mut edges = BTreeSet::new();
        for (d, w) in self.reps.iter().enumerate() {
            if let Some(l) = w.last() {
                match l.sign {
                    Sign::Pos => {
                        let parent = self.table.act(d, l.inverse());
                        edges.insert((parent, l.generator));
                    }
                    Sign::Neg => {
                        edges.insert((d, l.generator));
                    }
                }
            }
        }
        edges
    }

    pub fn to_text(&self) -> String {
        let al = self.table.alphabet();
        self.reps.iter().map(|w| format!("{}\n", al.format_word(w))).collect()
    }
}

/// Generators whose basis letter has been replaced by its inverse.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlphabetOrientation {
    pub flipped: BTreeSet<usize>,
}

impl AlphabetOrientation {
    pub fn identity() -> Self {
        AlphabetOrientation::default()
    }

    pub fn flipping(generator: usize) -> Self {
        AlphabetOrientation { flipped: BTreeSet::from([generator]) }
    }

    /// Renames letters between the original and the reoriented alphabet.
    /// The renaming is an involution.
    pub fn respell(&self, w: &FreeWord) -> FreeWord {
        if self.flipped.is_empty() {
            return w.clone();
        }
        w.map_letters(|l| if self.flipped.contains(&l.generator) { l.inverse() } else { l })
    }

    fn as_vec(&self) -> Vec<usize> {
        self.flipped.iter().copied().collect()
    }
}

/// A Nielsen-Schreier basis. `elements` are spelled over the original
/// alphabet; `edge_index` maps each non-tree edge `(coset, generator)` of
/// the reoriented table to the position of its element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupBasis {
    pub table: CosetTable,
    pub transversal: SchreierTransversal,
    pub orientation: AlphabetOrientation,
    pub elements: Vec<FreeWord>,
    pub edge_index: BTreeMap<(usize, usize), usize>,
}

impl SubgroupBasis {
    /// `n (m - 1) + 1`.
    pub fn expected_size(&self) -> usize {
        self.table.index() * (self.table.rank() - 1) + 1
    }

    pub fn oriented_table(&self) -> CosetTable {
        self.table.reoriented(&self.orientation.as_vec())
    }

    /// Names of violated basis invariants; empty when all hold.
    pub fn invariant_failures(&self) -> Vec<&'static str> {
        let mut failed = Vec::new();
        if self.elements.len() != self.expected_size() {
            failed.push("basis_size");
        }
        if self.elements.iter().any(|u| u.is_empty() || !u.is_reduced()) {
            failed.push("basis_elements_reduced");
        }
        if !self.elements.iter().all(|u| self.table.contains(u)) {
            failed.push("basis_elements_in_subgroup");
        }
        let distinct: BTreeSet<&FreeWord> = self.elements.iter().collect();
        if distinct.len() != self.elements.len() {
            failed.push("basis_elements_distinct");
        }
        failed
    }

    pub fn position_of(&self, w: &FreeWord) -> Option<usize> {
        self.elements.iter().position(|u| u == w)
    }

    /// Product of basis elements, inverted where the sign is negative.
    pub fn evaluate(&self, word: &[(usize, Sign)]) -> FreeWord {
        word.iter().fold(FreeWord::identity(), |acc, &(i, s)| match s {
            Sign::Pos => &acc * &self.elements[i],
            Sign::Neg => &acc * &self.elements[i].inverse(),
        })
    }

    /// Header `index=<n> rank=<size>` followed by one element per line.
    pub fn to_text(&self) -> String {
        let al = self.table.alphabet();
        let mut s = format!("index={} rank={}\n", self.table.index(), self.expected_size());
        for u in &self.elements {
            let _ = writeln!(s, "{}", al.format_word(u));
        }
        s
    }
}

/// Schreier's method: one element `rep(c) y rep(c y)^-1` for every
/// non-tree edge `(c, y)` of the reoriented table, in (coset, generator)
/// order.
pub fn schreier_basis(tr: &SchreierTransversal, orientation: &AlphabetOrientation) -> Result<SubgroupBasis> {
    let m = tr.table.rank();
    if let Some(&g) = orientation.flipped.iter().find(|&&g| g >= m) {
        return Err(Error::InvalidLetter { generator: g, size: m });
    }
    let oriented = tr.table.reoriented(&orientation.as_vec());
    let respelled =
        SchreierTransversal { table: oriented.clone(), reps: tr.reps.iter().map(|w| orientation.respell(w)).collect() };
    respelled.validate().map_err(|e| Error::Internal(format!("reoriented transversal invalid: {e}")))?;

    let tree = respelled.tree_edges();
    let mut elements = Vec::new();
    let mut edge_index = BTreeMap::new();
    for c in 0..oriented.index() {
        for g in 0..m {
            if tree.contains(&(c, g)) {
                continue;
            }
            let y = Letter::pos(g);
            let d = oriented.act(c, y);
            let u = &respelled.reps[c].push(y) * &respelled.reps[d].inverse();
            edge_index.insert((c, g), elements.len());
            elements.push(orientation.respell(&u));
        }
    }
    Ok(SubgroupBasis {
        table: tr.table.clone(),
        transversal: tr.clone(),
        orientation: orientation.clone(),
        elements,
        edge_index,
    })
}

/// Schreier rewriting: trace `w` from the base and record every non-tree
/// edge crossed, with its direction.
pub fn rewrite_in_basis(b: &SubgroupBasis, w: &FreeWord) -> Result<Vec<(usize, Sign)>> {
    if !b.table.contains(w) {
        return Err(Error::NotInSubgroup);
    }
    let oriented = b.oriented_table();
    let w = b.orientation.respell(w);
    let mut c = CosetTable::BASE;
    let mut out = Vec::new();
    for &l in w.letters() {
        let d = oriented.act(c, l);
        let (source, sign) = match l.sign {
            Sign::Pos => (c, Sign::Pos),
            Sign::Neg => (d, Sign::Neg),
        };
        if let Some(&i) = b.edge_index.get(&(source, l.generator)) {
            out.push((i, sign));
        }
        c = d;
    }
    Ok(out)
}

/// A basis through a prescribed word, with the position of that word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisThroughWord {
    pub basis: SubgroupBasis,
    pub position: usize,
    /// The element on the final edge was `w^-1` and was replaced by `w`.
    pub matched_inverse: bool,
}

/// Seeds the transversal with the initial segments of `w`. If the last
/// letter of `w` is an inverse generator, that generator is flipped first so
/// that the last edge of the path of `w` is crossed forwards.
pub fn basis_through_word(t: &CosetTable, w: &FreeWord) -> Result<BasisThroughWord> {
    let last = w.last().ok_or(Error::EmptyWord)?;
    if !t.separates_prefixes(w)? {
        return Err(Error::PrefixesNotSeparated);
    }
    if !t.contains(w) {
        return Err(Error::NotInSubgroup);
    }
    let seed = w.prefixes()?;
    let tr = SchreierTransversal::new(t, Some(&seed))?;
    let orientation = match last.sign {
        Sign::Pos => AlphabetOrientation::identity(),
        Sign::Neg => AlphabetOrientation::flipping(last.generator),
    };
    let mut basis = schreier_basis(&tr, &orientation)?;

    let penultimate = t.coset_of(&w.prefix(w.len() - 1))?;
    let position = *basis
        .edge_index
        .get(&(penultimate, last.generator))
        .ok_or_else(|| Error::Internal("final edge of the word is a tree edge".into()))?;
    let raw = basis.elements[position].clone();
    let matched_inverse = if raw == *w {
        false
    } else if raw == w.inverse() {
        basis.elements[position] = w.clone();
        true
    } else {
        return Err(Error::Internal("final edge element is neither w nor its inverse".into()));
    };
    Ok(BasisThroughWord { basis, position, matched_inverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{FiniteQuotientHom, Perm};
    use crate::word::Alphabet;

    fn table(rows: &[&[usize]]) -> CosetTable {
        let al = Alphabet::standard(rows.len()).unwrap();
        CosetTable::new(al, rows.iter().map(|r| Perm::from_images(r.to_vec()).unwrap()).collect()).unwrap()
    }

    fn words(t: &CosetTable, ws: &[FreeWord]) -> Vec<String> {
        ws.iter().map(|w| t.alphabet().format_word(w)).collect()
    }

    #[test]
    fn transversal_examples() {
        let t1 = table(&[&[0], &[0]]);
        let tr = SchreierTransversal::new(&t1, None).unwrap();
        assert_eq!(words(&t1, &tr.reps), ["1"]);

        let t2 = table(&[&[1, 0], &[0, 1]]);
        let aa = t2.alphabet().parse_word("aa").unwrap();
        let tr = SchreierTransversal::new(&t2, Some(&aa.prefixes().unwrap())).unwrap();
        assert_eq!(words(&t2, &tr.reps), ["1", "a"]);

        let t3 = table(&[&[1, 2, 0], &[0, 1, 2]]);
        let tr = SchreierTransversal::new(&t3, None).unwrap();
        assert_eq!(words(&t3, &tr.reps), ["1", "a", "A"]);
        tr.validate().unwrap();
    }

    #[test]
    fn seeded_transversal_errors() {
        let t = table(&[&[1, 2, 0], &[0, 1, 2]]);
        let al = t.alphabet().clone();
        let w = |s: &str| al.parse_word(s).unwrap();
        assert!(matches!(SchreierTransversal::new(&t, Some(&[w("1"), w("aa")])), Err(Error::BadSeed(_))));
        assert!(matches!(
            SchreierTransversal::new(&t, Some(&[w("1"), w("a"), w("aa"), w("aaa")])),
            Err(Error::SeedCollision(_, _))
        ));
        let tr = SchreierTransversal::new(&t, Some(&[w("1"), w("a"), w("aa")])).unwrap();
        assert_eq!(words(&t, &tr.reps), ["1", "a", "aa"]);
    }

    #[test]
    fn basis_examples() {
        let t1 = table(&[&[0], &[0]]);
        let b =
            schreier_basis(&SchreierTransversal::new(&t1, None).unwrap(), &AlphabetOrientation::identity()).unwrap();
        assert_eq!(words(&t1, &b.elements), ["a", "b"]);

        let t2 = table(&[&[1, 0], &[0, 1]]);
        let b =
            schreier_basis(&SchreierTransversal::new(&t2, None).unwrap(), &AlphabetOrientation::identity()).unwrap();
        assert_eq!(words(&t2, &b.elements), ["b", "aa", "abA"]);
        assert_eq!(b.edge_index.get(&(1, 1)), Some(&2));
        assert!(b.invariant_failures().is_empty());
        assert_eq!(b.to_text(), "index=2 rank=3\nb\naa\nabA\n");

        let r1 = table(&[&[1, 0]]);
        let b =
            schreier_basis(&SchreierTransversal::new(&r1, None).unwrap(), &AlphabetOrientation::identity()).unwrap();
        assert_eq!(words(&r1, &b.elements), ["aa"]);
    }

    #[test]
    fn rewriting_examples() {
        let t2 = table(&[&[1, 0], &[0, 1]]);
        let al = t2.alphabet().clone();
        let b =
            schreier_basis(&SchreierTransversal::new(&t2, None).unwrap(), &AlphabetOrientation::identity()).unwrap();
        assert!(rewrite_in_basis(&b, &FreeWord::identity()).unwrap().is_empty());
        let aa = al.parse_word("aa").unwrap();
        assert_eq!(rewrite_in_basis(&b, &aa).unwrap(), [(1, Sign::Pos)]);
        let w = al.parse_word("aabAA").unwrap();
        assert_eq!(rewrite_in_basis(&b, &w).unwrap(), [(1, Sign::Pos), (0, Sign::Pos), (1, Sign::Neg)]);
        let w = al.parse_word("aaaBA").unwrap();
        let rw = rewrite_in_basis(&b, &w).unwrap();
        assert_eq!(rw, [(1, Sign::Pos), (2, Sign::Neg)]);
        assert_eq!(b.evaluate(&rw), w);
        assert_eq!(rewrite_in_basis(&b, &al.parse_word("a").unwrap()), Err(Error::NotInSubgroup));
    }

    #[test]
    fn through_word_case_one() {
        let t2 = CosetTable::regular(
            &FiniteQuotientHom::new(
                Alphabet::standard(2).unwrap(),
                vec![Perm::from_images(vec![1, 0]).unwrap(), Perm::identity(2)],
            )
            .unwrap(),
        )
        .unwrap();
        let aa = t2.alphabet().parse_word("aa").unwrap();
        let out = basis_through_word(&t2, &aa).unwrap();
        assert_eq!(words(&t2, &out.basis.elements), ["b", "aa", "abA"]);
        assert_eq!(out.position, 1);
        assert!(!out.matched_inverse);
    }

    #[test]
    fn through_word_case_two() {
        let t = table(&[&[1, 0], &[1, 0]]);
        let w = t.alphabet().parse_word("aB").unwrap();
        let out = basis_through_word(&t, &w).unwrap();
        assert_eq!(out.basis.orientation, AlphabetOrientation::flipping(1));
        assert_eq!(out.basis.elements.len(), 3);
        assert_eq!(out.basis.elements[out.position], w);
        assert_eq!(words(&t, &out.basis.elements), ["BA", "aa", "aB"]);
        assert!(out.basis.invariant_failures().is_empty());
        for (i, u) in out.basis.elements.iter().enumerate() {
            assert_eq!(rewrite_in_basis(&out.basis, u).unwrap(), [(i, Sign::Pos)]);
        }
    }

    #[test]
    fn through_word_errors() {
        let t = table(&[&[1, 0], &[0, 1]]);
        let al = t.alphabet().clone();
        assert_eq!(basis_through_word(&t, &FreeWord::identity()), Err(Error::EmptyWord));
        assert_eq!(basis_through_word(&t, &al.parse_word("aaaa").unwrap()), Err(Error::PrefixesNotSeparated));
        assert_eq!(basis_through_word(&t, &al.parse_word("ab").unwrap()), Err(Error::NotInSubgroup));
    }

    #[test]
    fn flipped_generator_out_of_range() {
        let t = table(&[&[0]]);
        let tr = SchreierTransversal::new(&t, None).unwrap();
        assert!(schreier_basis(&tr, &AlphabetOrientation::flipping(3)).is_err());
    }
}
