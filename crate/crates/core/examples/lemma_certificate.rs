//! Finding a finite-index subgroup in which a relator is a basis element,
//! then writing and re-checking the certificate.

use relator_basis::{certificate, run_lemma, verify_certificate, Presentation};

fn main() -> relator_basis::Result<()> {
    for (rels, r) in [(&["aa"][..], "aa"), (&["aB"][..], "aB"), (&["abAB", "aaa"][..], "aaa")] {
        let p = Presentation::parse(2, rels)?;
        let r = p.alphabet().parse_word(r)?;
        let Some(c) = run_lemma(&p, &r, 6)? else {
            println!("no separating quotient up to degree 6");
            continue;
        };
        let al = p.alphabet();
        let basis: Vec<String> = c.basis.elements.iter().map(|w| al.format_word(w)).collect();
        println!(
            "r = {}: index {}, basis [{}], r at {}, verified {}",
            al.format_word(&r),
            c.table.index(),
            basis.join(", "),
            c.r_position,
            verify_certificate(&c).is_ok()
        );
    }

    let p = Presentation::parse(2, &["aa"])?;
    let c = run_lemma(&p, &p.relators()[0], 4)?.expect("a quotient of order 2 exists");
    let json = certificate::to_json(&c);
    let back = certificate::from_json(&json)?;
    println!("\n{json}round trip equal: {}", back == c);

    let none = run_lemma(&Presentation::higman(), &Presentation::higman().relators()[0], 4)?;
    println!("Higman's group: {}", if none.is_none() { "NOTFOUND" } else { "found?" });
    Ok(())
}
