//! Deciding whether a set of words is a basis of a subgroup by folding the
//! wedge of loops and comparing with the coset graph.

use relator_basis::fold::fold_words;
use relator_basis::{fold_verify_words, Alphabet, CosetTable, Perm};

fn main() -> relator_basis::Result<()> {
    let al = Alphabet::standard(2)?;
    let t = CosetTable::new(al.clone(), vec![Perm::from_cycles(2, &[&[0, 1]])?, Perm::identity(2)])?;
    let candidates: [&[&str]; 4] = [&["b", "aa", "abA"], &["b", "aa"], &["b", "aa", "abA", "aba"], &["b", "aa", "aba"]];
    for words in candidates {
        let ws = words.iter().map(|w| al.parse_word(w)).collect::<Result<Vec<_>, _>>()?;
        let g = fold_words(&ws);
        println!(
            "{:<20} folded: {} vertices, rank {}, basis of the index-2 subgroup: {}",
            words.join(" "),
            g.vertices,
            g.rank(),
            fold_verify_words(&t, &ws)
        );
    }
    Ok(())
}
