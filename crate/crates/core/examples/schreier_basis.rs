//! A Schreier transversal and the free basis it induces, checked by folding.

use relator_basis::transversal::SchreierTransversal;
use relator_basis::{fold_verify, rewrite_in_basis, schreier_basis, AlphabetOrientation, CosetTable, Perm};
use relator_basis::{Alphabet, Sign};

fn main() -> relator_basis::Result<()> {
    let al = Alphabet::standard(2)?;
    let t = CosetTable::new(al.clone(), vec![Perm::from_cycles(3, &[&[0, 1, 2]])?, Perm::from_cycles(3, &[&[1, 2]])?])?;
    let tr = SchreierTransversal::new(&t, None)?;
    let basis = schreier_basis(&tr, &AlphabetOrientation::identity())?;

    println!("transversal:\n{}", tr.to_text());
    println!("{}", basis.to_text());
    println!("expected rank (n(m-1)+1) = {}", basis.expected_size());
    println!("folding agrees: {}", fold_verify(&basis));

    let w = al.parse_word("abaAbA")?;
    let coords = rewrite_in_basis(&basis, &w)?;
    let spelled: Vec<String> =
        coords.iter().map(|&(i, s)| if s == Sign::Pos { format!("x{i}") } else { format!("X{i}") }).collect();
    println!("{} = {}", al.format_word(&w), spelled.join(" "));
    Ok(())
}
