//! JSON form of a [`LemmaCertificate`], schema `lemma-certificate/1`.
//!
//! Words are written in word syntax and permutations as image lists in
//! generator order. The basis edge index is not stored; it is recomputed
//! from the transversal when a certificate is read back.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::coset_table::{CosetTable, Presentation};
use crate::error::{Error, Result};
use crate::lemma::LemmaCertificate;
use crate::perm::{FiniteQuotientHom, Perm};
use crate::transversal::{schreier_basis, AlphabetOrientation, SchreierTransversal, SubgroupBasis};
use crate::word::{Alphabet, FreeWord};

pub const SCHEMA: &str = "lemma-certificate/1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    generators: Vec<String>,
    relators: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomDoc {
    degree: usize,
    images: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    index: usize,
    action: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisDoc {
    orientation: Vec<String>,
    elements: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    schema: String,
    presentation: PresentationDoc,
    relator: String,
    hom: HomDoc,
    image_order: usize,
    table: TableDoc,
    transversal: Vec<String>,
    basis: BasisDoc,
    r_position: usize,
    matched_inverse: bool,
    generator_bound: usize,
}

pub fn to_json(c: &LemmaCertificate) -> String {
    let al = c.presentation.alphabet();
    let word = |w: &FreeWord| al.format_word(w);
    let doc = CertificateDoc {
        schema: SCHEMA.to_string(),
        presentation: PresentationDoc {
            generators: al.names().iter().map(|n| n.to_string()).collect(),
            relators: c.presentation.relators().iter().map(word).collect(),
        },
        relator: word(&c.relator),
        hom: HomDoc {
            degree: c.hom.degree(),
            images: c.hom.gen_images().iter().map(|p| p.images().to_vec()).collect(),
        },
        image_order: c.image_order,
        table: TableDoc {
            index: c.table.index(),
            action: c.table.action().iter().map(|p| p.images().to_vec()).collect(),
        },
        transversal: c.transversal.reps.iter().map(word).collect(),
        basis: BasisDoc {
            orientation: c.basis.orientation.flipped.iter().map(|&g| al.name(g).to_string()).collect(),
            elements: c.basis.elements.iter().map(word).collect(),
        },
        r_position: c.r_position,
        matched_inverse: c.matched_inverse,
        generator_bound: c.generator_bound,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("certificate serializes");
    s.push('\n');
    s
}

fn schema_err<E: std::fmt::Display>(what: &str) -> impl FnOnce(E) -> Error + '_ {
    move |e| Error::Schema(format!("{what}: {e}"))
}

fn perms(rows: Vec<Vec<usize>>, degree: usize, what: &str) -> Result<Vec<Perm>> {
    rows.into_iter()
        .map(|row| {
            if row.len() != degree {
                return Err(Error::Schema(format!("{what}: image list of length {} for degree {degree}", row.len())));
            }
            Perm::from_images(row).map_err(schema_err(what))
        })
        .collect()
}

/// Reads a certificate. Structural problems (bad JSON, wrong schema,
/// unparsable words, non-bijections, intransitive tables) are errors;
/// semantic problems are left for [`crate::lemma::verify_certificate`].
pub fn from_json(text: &str) -> Result<LemmaCertificate> {
    let doc: CertificateDoc = serde_json::from_str(text).map_err(schema_err("json"))?;
    if doc.schema != SCHEMA {
        return Err(Error::Schema(format!("unsupported schema {:?}", doc.schema)));
    }
    let names = doc
        .presentation
        .generators
        .iter()
        .map(|g| {
            let mut cs = g.chars();
            match (cs.next(), cs.next()) {
                (Some(c), None) => Ok(c),
                _ => Err(Error::Schema(format!("generator name {g:?}"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let al = Alphabet::new(names).map_err(schema_err("generators"))?;
    let word = |s: &str| al.parse_word(s).map_err(schema_err("word"));

    let relators = doc.presentation.relators.iter().map(|s| word(s)).collect::<Result<Vec<_>>>()?;
    let presentation = Presentation::new(al.clone(), relators).map_err(schema_err("presentation"))?;
    let relator = word(&doc.relator)?;

    let hom =
        FiniteQuotientHom::new(al.clone(), perms(doc.hom.images, doc.hom.degree, "hom")?).map_err(schema_err("hom"))?;
    let table =
        CosetTable::new(al.clone(), perms(doc.table.action, doc.table.index, "table")?).map_err(schema_err("table"))?;

    let reps = doc.transversal.iter().map(|s| word(s)).collect::<Result<Vec<_>>>()?;
    let transversal = SchreierTransversal { table: table.clone(), reps };

    let flipped = doc
        .basis
        .orientation
        .iter()
        .map(|g| {
            let mut cs = g.chars();
            match (cs.next(), cs.next()) {
                (Some(c), None) => al.index_of(c).ok_or_else(|| Error::Schema(format!("orientation {g:?}"))),
                _ => Err(Error::Schema(format!("orientation {g:?}"))),
            }
        })
        .collect::<Result<BTreeSet<_>>>()?;
    let orientation = AlphabetOrientation { flipped };
    let elements = doc.basis.elements.iter().map(|s| word(s)).collect::<Result<Vec<_>>>()?;
    let edge_index = if transversal.validate().is_ok() {
        schreier_basis(&transversal, &orientation).map(|b| b.edge_index).unwrap_or_default()
    } else {
        BTreeMap::new()
    };
    let basis =
        SubgroupBasis { table: table.clone(), transversal: transversal.clone(), orientation, elements, edge_index };

    Ok(LemmaCertificate {
        presentation,
        relator,
        hom,
        image_order: doc.image_order,
        table,
        transversal,
        basis,
        r_position: doc.r_position,
        matched_inverse: doc.matched_inverse,
        generator_bound: doc.generator_bound,
    })
}
