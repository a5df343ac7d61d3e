//! The cohomology chase from the orbit space to the total space, computed
//! both in closed form and by splitting the exact sequences.
//!
//! Run with `cargo run --example cohomology_chain`.

use semifree::actions5::{cohomology_chain, cohomology_chain_from_sequences};

fn main() -> semifree::Result<()> {
    println!(
        "{:>2} {:>2}  {:<8} {:<8} {:<8} {:<8}",
        "k", "n", "H2(M*\\F)", "H3(M*\\F)", "H3(M\\F)", "H3(M)"
    );
    for k in 0..=3 {
        for n in 1..=3 {
            let c = cohomology_chain(k, n)?;
            assert_eq!(c, cohomology_chain_from_sequences(k, n)?);
            println!(
                "{k:>2} {n:>2}  {:<8} {:<8} {:<8} {:<8}",
                c.h2_orbit_complement.to_string(),
                c.h3_orbit_complement.to_string(),
                c.h3_complement.to_string(),
                c.h3_total.to_string()
            );
        }
    }
    Ok(())
}
