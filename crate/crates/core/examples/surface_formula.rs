//! Rank of finite-index subgroups of surface groups, by formula and by count.

use relator_basis::surface_report;

fn main() -> relator_basis::Result<()> {
    for (genus, index) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let reports = surface_report(genus, index)?;
        let pass = reports.iter().all(|r| r.checks_pass());
        let first = &reports[0];
        println!(
            "genus {genus} index {index}: {:>3} subgroups, rho = {} (formula {}), euler {}, checks {}",
            reports.len(),
            first.rho_g1_counts,
            first.rho_g1_formula,
            first.euler_g1,
            if pass { "pass" } else { "FAIL" }
        );
    }
    println!("\n{}", surface_report(1, 2)?[0].to_json_line());
    Ok(())
}
