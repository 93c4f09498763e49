//! Reidemeister-Schreier: a presentation of a finite-index subgroup.

use relator_basis::rewrite::format_symbol_word;
use relator_basis::{low_index_tables, rewrite_presentation, Presentation};

fn main() -> relator_basis::Result<()> {
    let p = Presentation::parse(2, &["abAB"])?;
    let al = p.alphabet();
    for t in low_index_tables(&p, 2)? {
        let sub = rewrite_presentation(&p, &t)?;
        println!("{}", t.to_text());
        for (i, x) in sub.basis.elements.iter().enumerate() {
            println!("  x{i} = {}", al.format_word(x));
        }
        for (i, rel) in sub.relators.iter().enumerate() {
            println!("  {} expands to {}", format_symbol_word(rel), al.format_word(&sub.expand(rel)));
            assert_eq!(sub.expand(rel), sub.conjugate_of(i));
        }
        println!("  euler characteristic {}\n", sub.euler_characteristic());
    }
    Ok(())
}
