//! Unimodular forms as intersection forms of simply connected 4-manifolds.
//!
//! Run with `cargo run --example intersection_forms`.

use semifree::forms::{
    is_standard_diagonal, named_form, rokhlin_admissible, vector_invariants, LatticeVector,
    UnimodularForm, FORM_CATALOG,
};
use semifree::manifolds::FourManifoldDesc;

fn describe(name: &str, f: &UnimodularForm) {
    println!(
        "{name:<14} rank {:>2}  signature {:>3}  {:<4}  Rokhlin-admissible: {}",
        f.rank(),
        f.signature(),
        f.parity().to_string(),
        rokhlin_admissible(f)
    );
}

fn main() -> semifree::Result<()> {
    for name in FORM_CATALOG.iter().copied().chain(["CP2#CP2bar", "E8#E8"]) {
        describe(name, &named_form(name)?);
    }

    // A Gram matrix that is not diagonal but is isometric to CP2 # CP2bar.
    let skew = FourManifoldDesc::new(UnimodularForm::from_rows(&[[1, 1], [1, 0]])?);
    println!("[[1,1],[1,0]] is homeomorphic to {}", skew.label());

    // Odd and indefinite, so diagonalizable: E8 ⊕ ⟨-1⟩ ≅ 8⟨1⟩ ⊕ ⟨-1⟩.
    println!(
        "E8#CP2bar is {}",
        FourManifoldDesc::from_catalog("E8#CP2bar")?.label()
    );

    let id3 = UnimodularForm::from_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]])?;
    println!(
        "I_3 is the standard diagonal form: {:?}",
        is_standard_diagonal(&id3)
    );
    println!(
        "E8 is diagonal: {:?}",
        is_standard_diagonal(&named_form("E8")?)
    );

    let h = named_form("S2xS2")?;
    let v = LatticeVector::new([2, 3]);
    let inv = vector_invariants(&h, &v)?;
    println!(
        "v = {v} in S2xS2: square {}, divisibility {}, characteristic {}",
        inv.square, inv.divisibility, inv.characteristic
    );
    Ok(())
}
