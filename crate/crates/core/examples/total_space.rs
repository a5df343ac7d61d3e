//! Total spaces of semi-free circle actions and the possible numbers of fixed
//! circles.
//!
//! Run with `cargo run --example total_space`.

use semifree::actions5::{allowed_fixed_point_counts, total_space};
use semifree::manifolds::{classify_5manifold, FourManifoldDesc};

fn main() -> semifree::Result<()> {
    let pairs = [
        ("S4", 1),
        ("S4", 2),
        ("S4", 3),
        ("CP2", 1),
        ("CP2", 2),
        ("S2xS2", 1),
        ("S2xS2", 3),
        ("CP2#CP2bar", 1),
        ("CP2", 5),
    ];
    println!("{:<12} {:>2}  total space", "orbit", "n");
    for (name, n) in pairs {
        let orbit = FourManifoldDesc::from_catalog(name)?;
        println!("{name:<12} {n:>2}  {}", total_space(&orbit, n)?);
    }

    // A spin orbit space must have signature divisible by 16.
    let e8 = FourManifoldDesc::from_catalog("E8")?;
    println!("E8 orbit: {}", total_space(&e8, 1).unwrap_err());

    println!();
    for b2 in 0..=4 {
        for spin in [true, false] {
            if let Ok(m) = classify_5manifold(b2, spin) {
                let counts: Vec<_> = allowed_fixed_point_counts(&m).into_iter().collect();
                println!("{:<26} fixed circles {counts:?}", m.to_string());
            }
        }
    }
    Ok(())
}
