//! Reidemeister-Schreier presentations of finite-index subgroups, and the
//! rank formula for finite-index subgroups of orientable surface groups
//! checked through Euler characteristics.

use serde::Serialize;

use crate::coset_table::{CosetTable, Presentation};
use crate::error::{Error, Result};
use crate::low_index::low_index_tables_bounded;
use crate::transversal::{rewrite_in_basis, schreier_basis, AlphabetOrientation, SchreierTransversal, SubgroupBasis};
use crate::word::{Alphabet, FreeWord, Letter, Sign};

pub const MAX_SURFACE_GENUS: usize = 12;

/// `<a1, b1, ..., ag, bg | [a1,b1] ... [ag,bg]>` on the letters `a b c d ...`.
pub fn surface_presentation(genus: usize) -> Result<Presentation> {
    if genus == 0 || genus > MAX_SURFACE_GENUS {
        return Err(Error::BadGenus(genus));
    }
    let alphabet = Alphabet::standard(2 * genus)?;
    let relator = FreeWord::reduce((0..genus).flat_map(|i| {
        let (a, b) = (2 * i, 2 * i + 1);
        [Letter::pos(a), Letter::pos(b), Letter::neg(a), Letter::neg(b)]
    }));
    Presentation::new(alphabet, vec![relator])
}

/// Words over the fresh basis symbols print as `x<i>` and `X<i>` (inverse).
pub fn format_symbol_word(w: &FreeWord) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.letters()
        .iter()
        .map(|l| match l.sign {
            Sign::Pos => format!("x{}", l.generator),
            Sign::Neg => format!("X{}", l.generator),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupPresentation {
    pub generator_count: usize,
    /// Over fresh symbols: symbol `i` stands for basis element `i`.
    pub relators: Vec<FreeWord>,
    /// `(coset, source relator index)` for each rewritten relator.
    pub origins: Vec<(usize, usize)>,
    pub source: (Presentation, CosetTable, SchreierTransversal),
    pub basis: SubgroupBasis,
}

impl SubgroupPresentation {
    /// One minus generators plus relators.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.generator_count as i64 + self.relators.len() as i64
    }

    /// Substitutes each fresh symbol by its basis word.
    pub fn expand(&self, w: &FreeWord) -> FreeWord {
        let signed: Vec<(usize, Sign)> = w.letters().iter().map(|l| (l.generator, l.sign)).collect();
        self.basis.evaluate(&signed)
    }

    /// The conjugate `rep(c) rho rep(c)^-1` that relator `i` was rewritten from.
    pub fn conjugate_of(&self, i: usize) -> FreeWord {
        let (c, k) = self.origins[i];
        let rep = &self.source.2.reps[c];
        &(rep * &self.source.0.relators()[k]) * &rep.inverse()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("generators={} relators={}\n", self.generator_count, self.relators.len());
        for r in &self.relators {
            s.push_str(&format_symbol_word(r));
            s.push('\n');
        }
        s
    }
}

/// Rewrites `rep(c) rho rep(c)^-1` for every coset `c` and relator `rho`,
/// cosets outermost, against the unseeded Schreier basis of `t`.
pub fn rewrite_presentation(p: &Presentation, t: &CosetTable) -> Result<SubgroupPresentation> {
    if p.alphabet() != t.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    for rho in p.relators() {
        for c in 0..t.index() {
            if t.trace(c, rho)? != c {
                return Err(Error::RelatorNotKilled { relator: p.alphabet().format_word(rho), coset: c });
            }
        }
    }
    let tr = SchreierTransversal::new(t, None)?;
    let basis = schreier_basis(&tr, &AlphabetOrientation::identity())?;
    let mut relators = Vec::new();
    let mut origins = Vec::new();
    for c in 0..t.index() {
        let rep = &tr.reps[c];
        for (k, rho) in p.relators().iter().enumerate() {
            let conj = &(rep * rho) * &rep.inverse();
            let rewritten = rewrite_in_basis(&basis, &conj)?;
            relators.push(FreeWord::reduce(rewritten.into_iter().map(|(i, s)| Letter::new(i, s))));
            origins.push((c, k));
        }
    }
    Ok(SubgroupPresentation {
        generator_count: basis.elements.len(),
        relators,
        origins,
        source: (p.clone(), t.clone(), tr),
        basis,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceBounds {
    pub max_genus: usize,
    pub max_index: usize,
}

impl Default for SurfaceBounds {
    fn default() -> Self {
        SurfaceBounds { max_genus: 4, max_index: 6 }
    }
}

/// Rank-minus-one data for one finite-index subgroup of a surface group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub genus: usize,
    pub index: usize,
    #[serde(rename = "rho_G")]
    pub rho_g: i64,
    #[serde(rename = "rho_G1_formula")]
    pub rho_g1_formula: i64,
    #[serde(rename = "rho_G1_counts")]
    pub rho_g1_counts: i64,
    #[serde(rename = "euler_G")]
    pub euler_g: i64,
    #[serde(rename = "euler_G1")]
    pub euler_g1: i64,
    #[serde(serialize_with = "table_text")]
    pub table: CosetTable,
}

fn table_text<S: serde::Serializer>(t: &CosetTable, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&t.to_text())
}

impl SurfaceReport {
    pub fn checks_pass(&self) -> bool {
        let n = self.index as i64;
        self.rho_g1_formula == n * self.rho_g + (1 - n)
            && self.euler_g1 == n * self.euler_g
            && self.rho_g1_counts == self.rho_g1_formula
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn surface_report(genus: usize, index: usize) -> Result<Vec<SurfaceReport>> {
    surface_report_bounded(genus, index, SurfaceBounds::default())
}

/// One report per index-`index` subgroup, in the order of the low-index
/// enumeration.
pub fn surface_report_bounded(genus: usize, index: usize, bounds: SurfaceBounds) -> Result<Vec<SurfaceReport>> {
    if genus == 0 || genus > bounds.max_genus {
        return Err(Error::BadBound(format!("genus {genus} outside 1..={}", bounds.max_genus)));
    }
    if index == 0 || index > bounds.max_index {
        return Err(Error::BadBound(format!("index {index} outside 1..={}", bounds.max_index)));
    }
    let p = surface_presentation(genus)?;
    let n = index as i64;
    let rho_g = 2 * genus as i64 - 1;
    let euler_g = 2 - 2 * genus as i64;
    low_index_tables_bounded(&p, index, bounds.max_index)?
        .into_iter()
        .map(|t| {
            let sub = rewrite_presentation(&p, &t)?;
            let euler_g1 = sub.euler_characteristic();
            Ok(SurfaceReport {
                genus,
                index,
                rho_g,
                rho_g1_formula: n * rho_g + (1 - n),
                rho_g1_counts: 1 - euler_g1,
                euler_g,
                euler_g1,
                table: t,
            })
        })
        .collect()
}
