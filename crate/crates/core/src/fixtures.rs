use crate::PermTuple;

/// `σ = ⟨[3,2,4,1], [4,2,1,3]⟩`.
pub fn fix_a() -> PermTuple {
    PermTuple::from_one_line(&[&[3, 2, 4, 1], &[4, 2, 1, 3]]).unwrap()
}

/// `π = σ⁻¹ = ⟨[4,2,1,3], [3,2,4,1]⟩`.
pub fn fix_b() -> PermTuple {
    PermTuple::from_one_line(&[&[4, 2, 1, 3], &[3, 2, 4, 1]]).unwrap()
}

/// `μ = ⟨[3,2,1,4], [3,2,4,1]⟩`, same lattice as `fix_b` up to isomorphism.
pub fn fix_c() -> PermTuple {
    PermTuple::from_one_line(&[&[3, 2, 1, 4], &[3, 2, 4, 1]]).unwrap()
}
