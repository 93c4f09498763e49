//! Reduced words in a free group: parsing, products, inverses and prefixes.

use relator_basis::Alphabet;

fn main() -> relator_basis::Result<()> {
    let al = Alphabet::standard(2)?;
    let u = al.parse_word("abBAab")?;
    let v = al.parse_word("BAb")?;
    println!("u = {}", al.format_word(&u));
    println!("v = {}", al.format_word(&v));
    println!("uv = {}", al.format_word(&(&u * &v)));
    println!("u^-1 = {}", al.format_word(&u.inverse()));
    println!("u u^-1 = {}", al.format_word(&(&u * &u.inverse())));

    let r = al.parse_word("abAB")?;
    let prefixes: Vec<String> = r.prefixes()?.iter().map(|p| al.format_word(p)).collect();
    println!("proper prefixes of {}: {}", al.format_word(&r), prefixes.join(" "));

    // names other than a..z work too
    let xy = Alphabet::new(vec!['x', 'y'])?;
    println!("{}", xy.format_word(&xy.parse_word("xyYxX")?));
    Ok(())
}
