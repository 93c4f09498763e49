//! From a presentation and a relator to a basis of a finite-index subgroup
//! that contains every relator and has the chosen relator as a basis element.
//!
//! The search looks for a homomorphism to a symmetric group that kills the
//! relators and sends the initial segments of the relator to distinct
//! permutations. The subgroup is the full preimage of the identity under that
//! homomorphism, given by the regular action on the image group.

use std::collections::HashSet;

use crate::coset_table::{CosetTable, Presentation};
use crate::error::{Error, Result};
use crate::fold::fold_verify;
use crate::perm::{FiniteQuotientHom, Perm};
use crate::transversal::{basis_through_word, schreier_basis, AlphabetOrientation, SchreierTransversal, SubgroupBasis};
use crate::word::{FreeWord, Sign};

pub const DEFAULT_MAX_DEGREE: usize = 6;
/// Largest degree the search accepts; `8!` candidate images per generator.
pub const MAX_SEARCH_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCertificate {
    pub presentation: Presentation,
    pub relator: FreeWord,
    pub hom: FiniteQuotientHom,
    pub image_order: usize,
    pub table: CosetTable,
    pub transversal: SchreierTransversal,
    pub basis: SubgroupBasis,
    pub r_position: usize,
    pub matched_inverse: bool,
    pub generator_bound: usize,
}

fn eval_with(images: &[usize], perms: &[Perm], inverses: &[usize], w: &FreeWord, degree: usize) -> Perm {
    let mut points: Vec<usize> = (0..degree).collect();
    for l in w.letters() {
        let k = images[l.generator];
        let p = match l.sign {
            Sign::Pos => &perms[k],
            Sign::Neg => &perms[inverses[k]],
        };
        for x in points.iter_mut() {
            *x = p.apply(*x);
        }
    }
    Perm::from_images(points).expect("product of permutations")
}

fn separated(images: &[usize], perms: &[Perm], r: &FreeWord, degree: usize) -> bool {
    let mut current = Perm::identity(degree);
    let mut seen = HashSet::new();
    for l in &r.letters()[..r.len() - 1] {
        seen.insert(current.clone());
        let g = &perms[images[l.generator]];
        current = match l.sign {
            Sign::Pos => current.then(g),
            Sign::Neg => current.then(&g.inverse()),
        };
        if seen.contains(&current) {
            return false;
        }
    }
    true
}

/// Searches degrees `1..=max_degree` in order and, within a degree, generator
/// images in lexicographic order, for the first homomorphism killing the
/// relators of `p` and `r` that separates the initial segments of `r`. Each relator
/// is checked as soon as all of its generators have images.
pub fn find_separating_quotient(
    p: &Presentation,
    r: &FreeWord,
    max_degree: usize,
) -> Result<Option<FiniteQuotientHom>> {
    if !(1..=MAX_SEARCH_DEGREE).contains(&max_degree) {
        return Err(Error::BadBound(format!("max degree {max_degree} outside 1..={MAX_SEARCH_DEGREE}")));
    }
    if r.is_empty() {
        return Err(Error::EmptyWord);
    }
    p.alphabet().check_word(r)?;
    let m = p.alphabet().size();

    // relators grouped by the depth at which they become checkable; r itself
    // must die too, or it could not lie in the subgroup
    let mut due: Vec<Vec<&FreeWord>> = vec![Vec::new(); m];
    for rel in p.relators().iter().chain(std::iter::once(r)) {
        let top = rel.max_generator().expect("relators are nonempty");
        due[top].push(rel);
    }

    for degree in 1..=max_degree {
        let perms = Perm::all_lexicographic(degree);
        let inverses: Vec<usize> = {
            let index: std::collections::HashMap<&Perm, usize> =
                perms.iter().enumerate().map(|(i, q)| (q, i)).collect();
            perms.iter().map(|q| index[&q.inverse()]).collect()
        };
        let mut images = vec![0usize; m];
        if search_degree(0, &mut images, &perms, &inverses, &due, r, degree) {
            let gen_images = images.iter().map(|&k| perms[k].clone()).collect();
            return Ok(Some(FiniteQuotientHom::new(p.alphabet().clone(), gen_images)?));
        }
    }
    Ok(None)
}

fn search_degree(
    depth: usize,
    images: &mut [usize],
    perms: &[Perm],
    inverses: &[usize],
    due: &[Vec<&FreeWord>],
    r: &FreeWord,
    degree: usize,
) -> bool {
    if depth == images.len() {
        return separated(images, perms, r, degree);
    }
    for k in 0..perms.len() {
        images[depth] = k;
        let kills = due[depth].iter().all(|rel| eval_with(images, perms, inverses, rel, degree).is_identity());
        if kills && search_degree(depth + 1, images, perms, inverses, due, r, degree) {
            return true;
        }
    }
    false
}

/// Separating quotient, then regular table, then the basis through `r`.
/// The certificate is re-verified before it is returned.
pub fn run_lemma(p: &Presentation, r: &FreeWord, max_degree: usize) -> Result<Option<LemmaCertificate>> {
    let Some(hom) = find_separating_quotient(p, r, max_degree)? else {
        return Ok(None);
    };
    let table = CosetTable::regular(&hom)?;
    let through = basis_through_word(&table, r)?;
    let m = p.alphabet().size();
    let certificate = LemmaCertificate {
        presentation: p.clone(),
        relator: r.clone(),
        image_order: table.index(),
        hom,
        transversal: through.basis.transversal.clone(),
        generator_bound: (m - 1) * table.index(),
        table,
        r_position: through.position,
        matched_inverse: through.matched_inverse,
        basis: through.basis,
    };
    let report = verify_certificate(&certificate);
    if !report.is_ok() {
        return Err(Error::Internal(format!("fresh certificate fails {:?}", report.failed)));
    }
    Ok(Some(certificate))
}

/// Outcome of re-checking a certificate; `failed` names every violated check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verification {
    pub failed: Vec<&'static str>,
}

impl Verification {
    pub fn is_ok(&self) -> bool {
        self.failed.is_empty()
    }

    fn check(&mut self, name: &'static str, ok: bool) {
        if !ok {
            self.failed.push(name);
        }
    }
}

/// Re-derives every certificate invariant from the raw data.
pub fn verify_certificate(c: &LemmaCertificate) -> Verification {
    let mut v = Verification::default();
    let al = c.presentation.alphabet();
    let m = al.size();
    let r = &c.relator;
    let n = c.table.index();

    let alphabets = c.hom.alphabet() == al
        && c.table.alphabet() == al
        && c.transversal.table == c.table
        && c.basis.table == c.table
        && al.contains_word(r);
    v.check("alphabets_consistent", alphabets);
    if !alphabets {
        return v;
    }
    v.check("relator_nonempty", !r.is_empty());
    if r.is_empty() {
        return v;
    }

    v.check("hom_kills_relators", c.hom.kills_relators(c.presentation.relators()));
    let image = c.hom.image_closure().map(|e| e.len());
    v.check("image_order", image.as_ref().ok() == Some(&c.image_order));
    v.check("table_is_regular_table", CosetTable::regular(&c.hom).ok().as_ref() == Some(&c.table));
    v.check("index_matches_image_order", n == c.image_order);
    v.check("prefixes_separated", c.table.separates_prefixes(r).unwrap_or(false));
    v.check("relator_in_subgroup", c.table.contains(r));
    v.check("relators_in_subgroup", c.presentation.relators().iter().all(|rho| c.table.contains(rho)));

    let seeded = r
        .prefixes()
        .map(|ps| ps.iter().all(|p| c.table.coset_of(p).map(|k| c.transversal.reps.get(k) == Some(p)).unwrap_or(false)))
        .unwrap_or(false);
    let transversal_ok = c.transversal.validate().is_ok();
    v.check("transversal_valid", transversal_ok && seeded);
    v.check("basis_transversal", c.basis.transversal == c.transversal);

    let last = r.last().expect("nonempty");
    let expected_orientation = match last.sign {
        Sign::Pos => AlphabetOrientation::identity(),
        Sign::Neg => AlphabetOrientation::flipping(last.generator),
    };
    v.check("orientation", c.basis.orientation == expected_orientation);

    let recomputed = if transversal_ok { schreier_basis(&c.transversal, &c.basis.orientation).ok() } else { None };
    match recomputed {
        Some(fresh) => {
            let raw = fresh.elements.get(c.r_position).cloned();
            let expected_raw = if c.matched_inverse { r.inverse() } else { r.clone() };
            v.check("matched_inverse", raw.as_ref() == Some(&expected_raw));
            let mut normalized = fresh.elements.clone();
            if let Some(slot) = normalized.get_mut(c.r_position) {
                *slot = r.clone();
            }
            v.check("basis_recomputed", normalized == c.basis.elements && fresh.edge_index == c.basis.edge_index);
        }
        None => {
            v.check("matched_inverse", false);
            v.check("basis_recomputed", false);
        }
    }

    v.failed.extend(c.basis.invariant_failures());
    v.check("r_position", c.basis.elements.get(c.r_position) == Some(r));
    v.check("generator_bound", c.generator_bound + 1 == c.basis.elements.len() && c.generator_bound == (m - 1) * n);
    v.check("fold_verify", fold_verify(&c.basis));
    v
}
