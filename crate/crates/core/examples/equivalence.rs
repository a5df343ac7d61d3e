//! Deciding equivariant equivalence of circle actions through the class ē.
//!
//! Run with `cargo run --example equivalence`.

use semifree::actions5::{
    actions_equivalent, euler_class_nonspin_family, ActionDescriptor5, EquivalenceStatus, Sign,
};
use semifree::forms::{LatticeVector, DEFAULT_DEPTH};
use semifree::manifolds::FourManifoldDesc;

fn action<I>(orbit: &str, n: u32, ebar: I) -> semifree::Result<ActionDescriptor5>
where
    I: IntoIterator,
    I::Item: Into<num_bigint::BigInt>,
{
    ActionDescriptor5::new(
        FourManifoldDesc::from_catalog(orbit)?,
        n,
        LatticeVector::new(ebar),
    )
}

fn show(a: &ActionDescriptor5, b: &ActionDescriptor5) -> semifree::Result<EquivalenceStatus> {
    let v = actions_equivalent(a, b, DEFAULT_DEPTH)?;
    print!(
        "{} vs {} on {}: {:?}",
        a.ebar(),
        b.ebar(),
        a.orbit().label(),
        v.status
    );
    if let Some(w) = &v.witness {
        print!(", witness {w}");
    }
    if let Some(r) = &v.reason {
        print!(", {r}");
    }
    println!();
    Ok(v.status)
}

fn main() -> semifree::Result<()> {
    show(&action("CP2", 1, [3])?, &action("CP2", 1, [-3])?)?;
    show(&action("CP2", 1, [3])?, &action("CP2", 1, [5])?)?;
    show(&action("S2xS2", 2, [1, 0])?, &action("S2xS2", 2, [0, 1])?)?;
    show(&action("S2xS2", 2, [2, 0])?, &action("S2xS2", 2, [1, 1])?)?;
    show(
        &action("CP2#CP2bar", 1, [1, 0])?,
        &action("CP2#CP2bar", 1, [2, 1])?,
    )?;

    // Euler classes (e_m, 1) of the torus-quotient family on the non-trivial
    // bundle; ē is the orbit-space coordinate e_m. Consecutive members have
    // e_m differing by one, so their squares differ.
    println!();
    for m in 0..5 {
        let e = |m| euler_class_nonspin_family(m, 1, Sign::Plus).coords()[0].clone();
        let a = action("CP2", 1, [e(m)])?;
        let b = action("CP2", 1, [e(m + 1)])?;
        print!("m = {m} vs m = {}: ", m + 1);
        assert_eq!(show(&a, &b)?, EquivalenceStatus::NotEquivalent);
    }
    Ok(())
}
