//! Smith normal form, cokernels and split short exact sequences.
//!
//! Run with `cargo run --example smith_normal_form`.

use semifree::abelian::{
    cokernel, smith_normal_form, split_extension, split_kernel, FgAbGroup, IntMatrix,
};

fn main() -> semifree::Result<()> {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]])?;
    let snf = smith_normal_form(&m);
    println!("M = {m}");
    println!(
        "invariant factors: {:?}",
        snf.invariants
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("U·M·V = {}", snf.left.mul(&m)?.mul(&snf.right)?);
    println!("coker M = {}", cokernel(&m));

    // 0 → Z^2 → ? → Z^3 → 0 splits because the quotient is free.
    let middle = split_extension(&FgAbGroup::free(2), &FgAbGroup::free(3))?;
    println!("extension of Z^3 by Z^2: {middle}");

    // 0 → ? → Z^4 ⊕ Z/6 → Z → 0
    let middle = FgAbGroup::free(4).direct_sum(&FgAbGroup::cyclic(6));
    println!(
        "kernel of {middle} → Z: {}",
        split_kernel(&middle, &FgAbGroup::free(1))?
    );

    println!("Z/4 ⊕ Z/6 = {}", FgAbGroup::from_cyclic_orders(0, [4, 6]));
    Ok(())
}
