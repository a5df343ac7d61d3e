//! Equivariant connected sums, fibre sums and torus quotients.
//!
//! Run with `cargo run --example constructions`.

use semifree::actions5::{make_action, ActionDescriptor5};
use semifree::constructions::{
    connected_sum_8, equivariant_connected_sum, equivariant_fibre_sum, torus_quotient, Family,
    TorusCircleParams,
};
use semifree::forms::LatticeVector;
use semifree::manifolds::FourManifoldDesc;

fn main() -> semifree::Result<()> {
    let spin = make_action(
        FourManifoldDesc::from_catalog("S4")?,
        LatticeVector::zero(0),
        2,
    )?
    .descriptor;
    let nonspin = make_action(
        FourManifoldDesc::from_catalog("CP2")?,
        LatticeVector::new([1]),
        1,
    )?
    .descriptor;

    // m1 spin examples and m2 non-spin examples fix m1 + 1 circles.
    for (m1, m2) in [(1, 0), (2, 1), (3, 2)] {
        let parts: Vec<&ActionDescriptor5> = std::iter::repeat(&spin)
            .take(m1)
            .chain(std::iter::repeat(&nonspin).take(m2))
            .collect();
        let mut acc = parts[0].clone();
        let mut total = acc.total_space()?;
        for p in &parts[1..] {
            let r = equivariant_connected_sum(&acc, p)?;
            acc = r.descriptor;
            total = r.total_space;
        }
        println!("m1={m1} m2={m2}: n = {}, total space {total}", acc.n());
    }

    let base = FourManifoldDesc::from_catalog("S2xS2")?;
    let r = equivariant_fibre_sum(&base, &spin, None)?;
    println!(
        "fibre sum over S2xS2: orbit {}, n = {}, total space {}",
        r.descriptor.orbit().label(),
        r.descriptor.n(),
        r.total_space
    );

    for (family, a, b) in [
        (Family::SpinFamily, 0, 1),
        (Family::SpinFamily, -2, 1),
        (Family::NonspinFamily, 0, 1),
        (Family::NonspinFamily, 4, 1),
    ] {
        let q = torus_quotient(TorusCircleParams::new(family, a, b))?;
        println!(
            "{family} ({a:>2},{b}): exponents {:?}, sum {:>2}, w2 {} → {} with orbit space {}",
            q.exponents.exponents, q.exponent_sum, q.w2, q.quotient_label, q.orbit_label
        );
    }
    println!(
        "SPIN_FAMILY (1,0): {}",
        torus_quotient(TorusCircleParams::new(Family::SpinFamily, 1, 0)).unwrap_err()
    );

    let mut n = 4;
    for m in 2..=5 {
        n = connected_sum_8(n, 4)?;
        println!("#{m}(S4xS4): {n} fixed points");
    }
    Ok(())
}
