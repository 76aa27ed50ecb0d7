//! Small regular algebras and actions used as fixtures by the property
//! checks, the CLI and the benches.
//!
//! None of the classification entries has invertible structure maps, so the
//! regular fixtures are built from associative dialgebras twisted by
//! commuting automorphisms.

use crate::action::DialgebraAction;
use crate::dialgebra::{direct_sum, matrix_dialgebra, Dialgebra};
use crate::error::Result;
use crate::linalg::{Matrix, Tensor3};
use crate::operators::yau_twist;
use crate::scalar::{s, Scalar};

/// One-dimensional `e ⊣ e = e ⊢ e = e` with identity maps.
pub fn unit_algebra<S: Scalar>() -> Dialgebra<S> {
    let mut t = Tensor3::square(1);
    t.set(0, 0, 0, S::one());
    Dialgebra::from_single_product("k", t, Matrix::identity(1), Matrix::identity(1))
        .expect("unit algebra")
}

/// `M_k` with identity structure maps, dimension `k²`.
pub fn identity_matrix_algebra<S: Scalar>(k: usize) -> Result<Dialgebra<S>> {
    Ok(matrix_dialgebra(&unit_algebra::<S>(), k)?.with_label(format!("M{k}")))
}

/// Upper triangular `2×2` matrices on `E11, E12, E22` with
/// `x ⊣ y = x φ(y)`, `x ⊢ y = φ(x) y`, where `φ` kills `E12`.
pub fn triangular_perm_dialgebra<S: Scalar>() -> Dialgebra<S> {
    // plain matrix product on the basis
    let mut m = Tensor3::square(3);
    m.set(0, 0, 0, S::one());
    m.set(0, 1, 1, S::one());
    m.set(1, 2, 1, S::one());
    m.set(2, 2, 2, S::one());
    let keep = [true, false, true];
    let mut left = Tensor3::square(3);
    let mut right = Tensor3::square(3);
    for i in 0..3 {
        for j in 0..3 {
            if keep[j] {
                left.set_row(i, j, m.row(i, j).to_vec());
            }
            if keep[i] {
                right.set_row(i, j, m.row(i, j).to_vec());
            }
        }
    }
    Dialgebra::new("T2perm", left, right, Matrix::identity(3), Matrix::identity(3))
        .expect("identity maps commute")
}

/// Conjugation of `M_2` by an invertible `u`, on the basis `E11, E12, E21, E22`.
pub fn m2_conjugation<S: Scalar>(u: &Matrix<S>) -> Result<Matrix<S>> {
    let ui = crate::linalg::invert(u)?;
    let unit = |a: usize, b: usize| Matrix::from_fn(2, 2, |i, j| if i == a && j == b { S::one() } else { S::zero() });
    let cols: Vec<Vec<S>> = (0..4)
        .map(|c| {
            let img = u.mul(&unit(c / 2, c % 2)).mul(&ui);
            (0..4).map(|r| img.get(r / 2, r % 2).clone()).collect()
        })
        .collect();
    Ok(Matrix::from_columns(4, &cols))
}

fn diag<S: Scalar>(v: &[i64]) -> Matrix<S> {
    Matrix::diagonal(&v.iter().map(|&x| s::<S>(x)).collect::<Vec<_>>())
}

/// Regular BiHom dialgebras with identity and non-identity maps, plus the
/// identity-map matrix algebras `M_1 ..= M_max_k`.
///
/// Scaling constants are `2` and `−1`, so everything stays regular over
/// `Q` and every odd prime field.
pub fn regular_fleet<S: Scalar>(max_k: usize) -> Result<Vec<Dialgebra<S>>> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        out.push(identity_matrix_algebra::<S>(k)?);
    }
    let perm = triangular_perm_dialgebra::<S>();
    out.push(perm.clone());
    out.push(matrix_dialgebra(&perm, 2)?);
    let tw = yau_twist(&perm, &diag(&[1, 2, 1]), &diag(&[1, -1, 1]))?.with_label("T2perm[2,-1]");
    out.push(tw.clone());

    let m2 = identity_matrix_algebra::<S>(2)?;
    let two = Matrix::diagonal(&[S::one(), s(2)]);
    let shear = Matrix::from_rows(vec![vec![S::one(), S::one()], vec![S::zero(), S::one()]]);
    out.push(yau_twist(&m2, &m2_conjugation(&two)?, &m2_conjugation(&two.mul(&two))?)?.with_label("M2[diag]"));
    out.push(
        yau_twist(&m2, &m2_conjugation(&shear)?, &m2_conjugation(&shear.mul(&shear))?)?.with_label("M2[shear]"),
    );

    out.push(direct_sum(&tw, &unit_algebra()).with_label("T2perm[2,-1]+k"));
    Ok(out)
}

/// Morphism-induced actions between fleet members: the unit into `M_2` as
/// scalars, the diagonal of a twisted algebra into its square, a projection
/// off a direct sum, and the zero morphism.
pub fn morphism_actions<S: Scalar>() -> Result<Vec<DialgebraAction<S>>> {
    let mut out = Vec::new();
    let k = unit_algebra::<S>();
    let m2 = identity_matrix_algebra::<S>(2)?;
    let scalars = Matrix::from_columns(4, &[vec![S::one(), S::zero(), S::zero(), S::one()]]);
    out.push(DialgebraAction::from_morphism(&scalars, k.clone(), m2.clone())?);

    let perm = triangular_perm_dialgebra::<S>();
    let tw = yau_twist(&perm, &diag(&[1, 2, 1]), &diag(&[1, -1, 1]))?;
    let n = tw.dim();
    let diagonal = Matrix::from_fn(2 * n, n, |i, j| if i % n == j { S::one() } else { S::zero() });
    out.push(DialgebraAction::from_morphism(&diagonal, tw.clone(), direct_sum(&tw, &tw))?);

    let sum = direct_sum(&tw, &k);
    let projection = Matrix::from_fn(n, n + 1, |i, j| if i == j { S::one() } else { S::zero() });
    out.push(DialgebraAction::from_morphism(&projection, sum, tw.clone())?);

    out.push(DialgebraAction::from_morphism(&Matrix::zeros(4, n), tw, m2)?);
    Ok(out)
}
