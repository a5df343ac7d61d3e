//! Result labels attached to every theorem-derived line of a report.

pub const TOTAL_SPACE: &str = "Theorem A";
pub const CLASSIFICATION_INVARIANT: &str = "Theorem B(1)";
pub const EQUIVALENCE: &str = "Theorem B(2)";
pub const EXISTENCE: &str = "Theorem B(3)";
pub const COHOMOLOGY_CHAIN: &str = "§3 Mayer-Vietoris chain";
pub const FIXED_POINT_COUNTS: &str = "§3 corollary (fixed-circle counts)";
pub const ROKHLIN: &str = "§3 corollary (Rokhlin)";
pub const ORBIT_COMPLEMENT: &str = "Lemma 5.1";
pub const EULER_GENERATOR: &str = "Lemma 5.2 / Theorem C(6)";
pub const TOTAL_COHOMOLOGY_8: &str = "Lemma 5.3";
pub const BETTI_8: &str = "Theorem C(1)";
pub const EULER_8: &str = "Theorem C(2)";
pub const PONTRJAGIN_8: &str = "Theorem C(3)";
pub const AHAT_SIGNATURE_8: &str = "Theorem C(4)";
pub const SPIN_8: &str = "Theorem C(5)";
pub const COROLLARY_4: &str = "Corollary 4";
pub const CONNECTED_SUM_5: &str = "Prop. 6.2";
pub const FIBRE_SUM_5: &str = "Prop. 6.3";
pub const TORUS_QUOTIENT: &str = "§6.1 torus quotients";
pub const CONNECTED_SUM_8: &str = "§6.4 equivariant connected sum";
pub const OPEN_CASE_8: &str = "§6.4 open case";
