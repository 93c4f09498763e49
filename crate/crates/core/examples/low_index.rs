//! Enumerating the subgroups of small index of a finitely presented group.

use relator_basis::{low_index_tables, Presentation};

fn main() -> relator_basis::Result<()> {
    let groups = [
        ("free group of rank 2", Presentation::parse(2, &[])?),
        ("Z/6", Presentation::parse(1, &["aaaaaa"])?),
        ("torus group", Presentation::parse(2, &["abAB"])?),
        ("Higman's group", Presentation::higman()),
    ];
    for (name, p) in &groups {
        let counts: Vec<usize> =
            (1..=4).map(|n| low_index_tables(p, n).map(|ts| ts.len())).collect::<Result<_, _>>()?;
        println!("{name:<22} subgroups of index 1..4: {counts:?}");
    }

    let torus = &groups[2].1;
    println!("\nindex 2 subgroups of the torus group:");
    for t in low_index_tables(torus, 2)? {
        println!("{}", t.to_text());
    }
    Ok(())
}
