//! Homomorphisms to symmetric groups: evaluating words and closing the image.

use relator_basis::{Alphabet, CosetTable, FiniteQuotientHom, Perm};

fn main() -> relator_basis::Result<()> {
    let al = Alphabet::standard(2)?;
    // a -> (0 1 2), b -> (0 1): onto S3
    let a = Perm::from_cycles(3, &[&[0, 1, 2]])?;
    let b = Perm::from_cycles(3, &[&[0, 1]])?;
    let h = FiniteQuotientHom::new(al.clone(), vec![a, b])?;

    for w in ["aaa", "bb", "abab", "ab"] {
        let p = h.eval_word(&al.parse_word(w)?)?;
        println!("{w:>5} -> {p}{}", if p.is_identity() { "  (killed)" } else { "" });
    }

    let image = h.image_closure()?;
    println!("image order {}", image.len());

    let regular = CosetTable::regular(&h)?;
    println!("regular table has index {}:\n{}", regular.index(), regular.to_text());
    Ok(())
}
