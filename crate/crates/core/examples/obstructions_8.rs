//! Necessary conditions for semi-free S3 actions on 8-manifolds.
//!
//! Run with `cargo run --example obstructions_8`.

use semifree::actions8::{
    check_obstructions, euler_class_generator_note, total_space_cohomology, Verdict,
};
use semifree::manifolds::{catalog_8manifold, EIGHT_CATALOG};

fn main() -> semifree::Result<()> {
    for name in EIGHT_CATALOG
        .iter()
        .copied()
        .map(|n| if n == "#m(S4xS4)" { "#3(S4xS4)" } else { n })
    {
        let m = catalog_8manifold(name)?;
        let report = check_obstructions(&m);
        let failed: Vec<_> = report.failed().map(|c| c.to_string()).collect();
        print!("{name:<14} {:<26}", report.verdict.to_string());
        match report.verdict {
            Verdict::Obstructed => println!("fails {}", failed.join(", ")),
            Verdict::AdmissibleAtThisLevel => {
                let f = report
                    .forced
                    .as_ref()
                    .expect("admissible reports carry the forced orbit");
                println!(
                    "n = {}, orbit H2 = {}, H3 = {}",
                    f.n,
                    f.orbit.h2(),
                    f.orbit.h3()
                );
                let noted = euler_class_generator_note(&report)?;
                for a in &noted.annotations {
                    println!("{:15}note: {}", "", a.text);
                }
            }
        }
    }

    let s8 = check_obstructions(&catalog_8manifold("S8")?);
    let forced = s8.forced.expect("S8 is admissible");
    let h = total_space_cohomology(&forced.orbit, forced.n)?;
    let groups: Vec<_> = h.groups.iter().map(ToString::to_string).collect();
    println!(
        "cohomology recovered for S8: {groups:?}, χ = {}",
        h.euler_char
    );
    Ok(())
}
