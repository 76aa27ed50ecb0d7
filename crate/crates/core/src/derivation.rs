//! `(α^k, β^l)`-derivations as exact nullspaces.

use crate::dialgebra::{check_morphism, Dialgebra, Product};
use crate::error::{Error, Result};
use crate::linalg::{invert, nullspace, rank, sub_vectors, Matrix, Vector};
use crate::scalar::Scalar;

/// A basis of `Der_(α^k, β^l)(D)`, each element as an `n×n` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct DerivationSpace<S> {
    pub label: String,
    pub k: i32,
    pub l: i32,
    pub basis: Vec<Matrix<S>>,
}

impl<S: Scalar> std::fmt::Debug for DerivationSpace<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DerivationSpace")
            .field("label", &self.label)
            .field("k", &self.k)
            .field("l", &self.l)
            .field("basis", &self.basis)
            .finish()
    }
}

impl<S: Scalar> DerivationSpace<S> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// All constraint values for `T`: commutation with `α` and `β`, then the two
/// Leibniz rules on every basis pair. Linear in `T`.
fn residuals<S: Scalar>(t: &Matrix<S>, g: &Matrix<S>, d: &Dialgebra<S>) -> Vector<S> {
    let n = d.dim();
    let mut out: Vector<S> = Vec::with_capacity(2 * n * n + 2 * n * n * n);
    out.extend(t.mul(d.alpha()).sub(&d.alpha().mul(t)).entries().iter().cloned());
    out.extend(t.mul(d.beta()).sub(&d.beta().mul(t)).entries().iter().cloned());
    let tc = t.columns();
    let gc = g.columns();
    for p in [Product::Left, Product::Right] {
        let prod = d.product(p);
        for x in 0..n {
            for y in 0..n {
                let lhs = t.apply(prod.row(x, y));
                let r1 = prod.contract(&gc[x], &tc[y]);
                let r2 = prod.contract(&tc[x], &gc[y]);
                out.extend(sub_vectors(&sub_vectors(&lhs, &r1), &r2));
            }
        }
    }
    out
}

pub fn is_derivation<S: Scalar>(t: &Matrix<S>, k: i32, l: i32, d: &Dialgebra<S>) -> Result<bool> {
    if t.rows() != d.dim() || !t.is_square() {
        return Err(Error::dims("derivation must be n×n"));
    }
    let g = d.map_power(k, l)?;
    Ok(residuals(t, &g, d).iter().all(Scalar::is_zero))
}

fn unit_matrix<S: Scalar>(n: usize, c: usize) -> Matrix<S> {
    Matrix::from_fn(n, n, |i, j| if i * n + j == c { S::one() } else { S::zero() })
}

fn stacked_system<S: Scalar>(d: &Dialgebra<S>, g: &Matrix<S>) -> Matrix<S> {
    let n = d.dim();
    let columns: Vec<Vector<S>> = (0..n * n).map(|c| residuals(&unit_matrix(n, c), g, d)).collect();
    Matrix::from_columns(2 * n * n + 2 * n * n * n, &columns)
}

/// Nullspace of the stacked system in the `n²` entries of `T` (row-major).
pub fn derivation_space<S: Scalar>(d: &Dialgebra<S>, k: i32, l: i32) -> Result<DerivationSpace<S>> {
    let n = d.dim();
    let g = d.map_power(k, l)?;
    let basis = nullspace(&stacked_system(d, &g))
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect();
    Ok(DerivationSpace {
        label: d.label().to_string(),
        k,
        l,
        basis,
    })
}

/// `n² − rank` of the stacked system, computed separately from the basis.
pub fn derivation_dim<S: Scalar>(d: &Dialgebra<S>, k: i32, l: i32) -> Result<usize> {
    let g = d.map_power(k, l)?;
    Ok(d.dim() * d.dim() - rank(&stacked_system(d, &g)))
}

/// `T1 T2 − T2 T1`, checked to lie in `Der_(k1+k2, l1+l2)`.
pub fn derivation_bracket<S: Scalar>(
    t1: &Matrix<S>,
    e1: (i32, i32),
    t2: &Matrix<S>,
    e2: (i32, i32),
    d: &Dialgebra<S>,
) -> Result<Matrix<S>> {
    if !is_derivation(t1, e1.0, e1.1, d)? || !is_derivation(t2, e2.0, e2.1, d)? {
        return Err(Error::NotADerivation);
    }
    let b = t1.commutator(t2);
    if !is_derivation(&b, e1.0 + e2.0, e1.1 + e2.1, d)? {
        return Err(Error::NotADerivation);
    }
    Ok(b)
}

/// `σ T σ⁻¹` for an isomorphism `σ: source → target`.
pub fn conjugate_derivation<S: Scalar>(
    sigma: &Matrix<S>,
    t: &Matrix<S>,
    k: i32,
    l: i32,
    source: &Dialgebra<S>,
    target: &Dialgebra<S>,
) -> Result<Matrix<S>> {
    let inv = invert(sigma).map_err(|_| Error::NotAnIsomorphism("σ is not invertible".into()))?;
    if let Some(f) = check_morphism(sigma, source, target)?.first_failure() {
        return Err(Error::NotAnIsomorphism(format!("σ fails {}", f.axiom)));
    }
    if !is_derivation(t, k, l, source)? {
        return Err(Error::NotADerivation);
    }
    let c = sigma.mul(t).mul(&inv);
    if !is_derivation(&c, k, l, target)? {
        return Err(Error::NotADerivation);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dialgebra::transport;
    use crate::linalg::Tensor3;
    use crate::scalar::{qi, Q};

    fn alg3() -> Dialgebra<Q> {
        let mut l = Tensor3::square(2);
        let mut r = Tensor3::square(2);
        l.set(0, 1, 0, qi(1));
        r.set(0, 1, 0, qi(1));
        r.set(1, 0, 0, qi(1));
        r.set(1, 1, 0, qi(1));
        let mut a = Matrix::zeros(2, 2);
        a.set(0, 1, qi(1));
        Dialgebra::new("alg3", l, r, a.clone(), a).unwrap()
    }

    #[test]
    fn zero_product_has_full_space() {
        for n in 1..=3 {
            let d = Dialgebra::<Q>::trivial(n);
            assert_eq!(derivation_space(&d, 0, 0).unwrap().dim(), n * n);
            assert_eq!(derivation_dim(&d, 1, 2).unwrap(), n * n);
        }
    }

    #[test]
    fn alg3_has_no_derivations() {
        let d = alg3();
        assert_eq!(derivation_space(&d, 0, 0).unwrap().dim(), 0);
        assert!(is_derivation(&Matrix::zeros(2, 2), 0, 0, &d).unwrap());
        let t = Matrix::from_rows(vec![vec![qi(1), qi(0)], vec![qi(0), qi(1)]]);
        assert!(!is_derivation(&t, 0, 0, &d).unwrap());
        assert_eq!(derivation_space(&d, -1, 0), Err(Error::NegativePowerOnSingularMap));
    }

    #[test]
    fn bracket_and_conjugation() {
        let d = Dialgebra::<Q>::trivial(2);
        let t1 = Matrix::from_rows(vec![vec![qi(1), qi(2)], vec![qi(0), qi(3)]]);
        let t2 = Matrix::from_rows(vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]]);
        let b = derivation_bracket(&t1, (0, 0), &t2, (1, 0), &d).unwrap();
        assert_eq!(b, t1.commutator(&t2));
        assert!(derivation_bracket(&t1, (0, 0), &t1, (0, 0), &d).unwrap().is_zero());
        let swap = Matrix::from_rows(vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]]);
        let target = transport(&d, &swap).unwrap();
        let c = conjugate_derivation(&swap, &t1, 0, 0, &d, &target).unwrap();
        assert_eq!(c, swap.mul(&t1).mul(&swap));
    }
}
