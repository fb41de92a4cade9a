//! Green's 𝓛 and 𝓡 relations on singular maps, plus brute-force divisibility
//! searches that serve as an independent check on them.

use crate::transformation::{all_maps, Transformation};

/// `a 𝓡 b`: the two maps have the same kernel.
pub fn green_r(a: &Transformation, b: &Transformation) -> bool {
    a.n() == b.n() && a.kernel() == b.kernel()
}

/// `a 𝓛 b`: the two maps have the same image.
pub fn green_l(a: &Transformation, b: &Transformation) -> bool {
    a.n() == b.n() && a.image_points() == b.image_points()
}

/// Searches every self-map `ε` for one with `a ε = b`, i.e. `b ∈ a S¹`.
pub fn divides_left_oracle(a: &Transformation, b: &Transformation) -> Option<Transformation> {
    if a.n() != b.n() {
        return None;
    }
    all_maps(a.n()).find(|eps| &(a * eps) == b)
}

/// Searches every self-map `ε` for one with `ε a = b`, i.e. `b ∈ S¹ a`.
pub fn divides_right_oracle(a: &Transformation, b: &Transformation) -> Option<Transformation> {
    if a.n() != b.n() {
        return None;
    }
    all_maps(a.n()).find(|eps| &(eps * a) == b)
}
