//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use dialgebra::scalar::Scalar;
use dialgebra::{Matrix, Tensor3};
use rand::Rng;

/// Per-entry values computed independently with sympy from the parsed
/// classification tables. Identical for the `default`, `twos` and `mixed`
/// parameter profiles. Witnesses are 1-based and lexicographically first.
pub struct Expected {
    pub id: &'static str,
    pub commute: Option<&'static [usize]>,
    /// eq4 ..= eq8
    pub eq: [Option<&'static [usize]>; 5],
    pub multiplicative: bool,
    pub der00: usize,
    /// (dim Z², dim B², dim H²) with the one-dimensional identity-map module.
    pub coh: (usize, usize, usize),
}

pub const EXPECTED: [Expected; 26] = [
    Expected { id: "dim1/trivial", commute: None, eq: [None, None, None, None, None], multiplicative: true, der00: 1, coh: (2, 0, 2) },
    Expected { id: "dim2/Alg1", commute: None, eq: [None, None, None, None, None], multiplicative: true, der00: 0, coh: (6, 1, 5) },
    Expected { id: "dim2/Alg2", commute: None, eq: [None, None, None, None, None], multiplicative: true, der00: 0, coh: (6, 1, 5) },
    Expected { id: "dim2/Alg3", commute: None, eq: [None, None, None, None, None], multiplicative: true, der00: 0, coh: (6, 1, 5) },
    Expected { id: "dim2/Alg4", commute: None, eq: [None, None, None, None, None], multiplicative: true, der00: 0, coh: (6, 1, 5) },
    Expected { id: "dim3/Alg1", commute: None, eq: [None, None, None, None, None], multiplicative: true, der00: 0, coh: (14, 1, 13) },
    Expected { id: "dim3/Alg2", commute: None, eq: [None, None, None, None, None], multiplicative: true, der00: 0, coh: (14, 1, 13) },
    Expected { id: "dim3/Alg3", commute: None, eq: [None, None, None, None, None], multiplicative: true, der00: 0, coh: (14, 1, 13) },
    Expected { id: "dim3/Alg4", commute: None, eq: [None, None, None, None, None], multiplicative: true, der00: 0, coh: (14, 1, 13) },
    Expected { id: "dim3/Alg5", commute: None, eq: [None, None, None, None, None], multiplicative: true, der00: 0, coh: (14, 1, 13) },
    Expected { id: "dim4/Alg1", commute: Some(&[2]), eq: [None, Some(&[2, 3, 4]), Some(&[3, 4, 2]), None, Some(&[3, 4, 4])], multiplicative: false, der00: 0, coh: (16, 2, 14) },
    Expected { id: "dim4/Alg2", commute: Some(&[2]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (24, 1, 23) },
    Expected { id: "dim4/Alg3", commute: Some(&[2]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (22, 1, 21) },
    Expected { id: "dim4/Alg4", commute: Some(&[2]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (22, 1, 21) },
    Expected { id: "dim4/Alg5", commute: Some(&[2]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (22, 1, 21) },
    Expected { id: "dim4/Alg6", commute: Some(&[2]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (22, 1, 21) },
    Expected { id: "dim4/Alg7", commute: Some(&[3]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (22, 1, 21) },
    Expected { id: "dim4/Alg8", commute: Some(&[3]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (22, 1, 21) },
    Expected { id: "dim4/Alg9", commute: Some(&[3]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (16, 2, 14) },
    Expected { id: "dim4/Alg10", commute: Some(&[3]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (16, 2, 14) },
    Expected { id: "dim4/Alg11", commute: Some(&[3]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (16, 2, 14) },
    Expected { id: "dim4/Alg12", commute: Some(&[3]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (22, 1, 21) },
    Expected { id: "dim4/Alg13", commute: Some(&[2]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (20, 1, 19) },
    Expected { id: "dim4/Alg14", commute: Some(&[3]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (20, 1, 19) },
    Expected { id: "dim4/Alg15", commute: Some(&[2]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (22, 1, 21) },
    Expected { id: "dim4/Alg16", commute: Some(&[2]), eq: [None, None, None, None, None], multiplicative: false, der00: 0, coh: (22, 1, 21) },
];

pub fn expected(id: &str) -> &'static Expected {
    EXPECTED.iter().find(|e| e.id == id).expect("known id")
}

pub fn random_scalar<S: Scalar, R: Rng>(rng: &mut R) -> S {
    let el = S::elements().expect("finite field");
    el[rng.gen_range(0..el.len())].clone()
}

pub fn random_matrix<S: Scalar, R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<S> {
    Matrix::from_fn(rows, cols, |_, _| random_scalar(rng))
}

pub fn random_tensor<S: Scalar, R: Rng>(rng: &mut R, a: usize, b: usize, c: usize) -> Tensor3<S> {
    Tensor3::from_fn(a, b, c, |_, _, _| random_scalar(rng))
}

/// Random combination of `basis`, each coefficient uniform in the field.
pub fn random_combination<S: Scalar, R: Rng>(rng: &mut R, basis: &[Vec<S>], len: usize) -> Vec<S> {
    let mut out = vec![S::zero(); len];
    for b in basis {
        let c: S = random_scalar(rng);
        for (o, x) in out.iter_mut().zip(b) {
            *o = o.clone() + c.clone() * x.clone();
        }
    }
    out
}
