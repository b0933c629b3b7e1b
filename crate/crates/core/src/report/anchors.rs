//! Source phrases attached to each case so a reader can locate the claim.

pub const PLUMBING: &str = "invented: artifact plumbing";
pub const ORDINARY_PRODUCT: &str = "ordinary multiplication of functions";
pub const USEFUL_RELATIONS: &str = "leading to useful relations";
pub const CREATION_FUNCTIONS: &str = "giving rise to the creation and annihilation functions";
pub const COMMUTATION: &str = "with the commutation relation";
pub const STAR_BRACKETS: &str = "The star brackets (anticommutator and commutator)";
pub const VECTOR_FIELDS: &str = "in terms of vectors fields";
pub const AFFINE: &str = "infinitesimal affine transformation";
pub const LIE_ALGEBRA: &str = "conferring a Lie algebra structure";
pub const LEIBNIZ: &str = "Leibniz rule extends to the commuting fields";
pub const HAMILTONIAN: &str = "self-adjoint unbounded twisted ho Hamiltonian";
pub const FUNDAMENTAL: &str = "the ho ``right'' fundamental state";
pub const STATES: &str = "The right and left states";
pub const EIGENPROBLEM: &str = "solve the eigenvalue problem";
pub const MOYAL_LIMIT: &str = "usual Moyal ⋆-product spectrum";
pub const LAMBDA_STATES: &str = "single twisted (m-k+1) right particles states";
pub const LAMBDA_ONE: &str = "depending on the right and left Hamiltonian";
pub const APPENDIX_A: &str = "Right and left ⋆-actions of the creation";
pub const APPENDIX_B: &str = "Useful identities";
pub const MATRIX_ACTIONS: &str = "actions of the annihilation and creation";
pub const MATRIX_EIGEN: &str = "corresponding eigenvalue problems are given by";
pub const QUADRATURE: &str = "the adapted form for the proof";
pub const PLANE_WAVE: &str = "e^{ikx}⋆e^{iqx} = e^{i(k+q)x}e^{-(i/2)θe^{-1}kJq}";
pub const ASSOCIATOR: &str = "[ā⋆a + θe^{-1}/2]⋆(.)";
