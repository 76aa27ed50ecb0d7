//! Degree-two cohomology with trivial coefficients: cocycles, coboundaries,
//! central extensions `D_Θ` and their equivalence.

use crate::dialgebra::{center, check_axioms, check_morphism, Dialgebra, Product};
use crate::error::{Error, Result};
use crate::linalg::{concat, nullspace, rank, solve, sub_vectors, Matrix, Tensor3, Vector};
use crate::report::{check_indexed, CheckReport};
use crate::scalar::Scalar;

/// Coefficient space with structure maps; the action is trivial.
#[derive(Clone, PartialEq, Eq)]
pub struct BiHomModule<S> {
    alpha_m: Matrix<S>,
    beta_m: Matrix<S>,
}

impl<S: Scalar> std::fmt::Debug for BiHomModule<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BiHomModule")
            .field("alpha_m", &self.alpha_m)
            .field("beta_m", &self.beta_m)
            .finish()
    }
}

impl<S: Scalar> BiHomModule<S> {
    pub fn new(alpha_m: Matrix<S>, beta_m: Matrix<S>) -> Result<Self> {
        let m = alpha_m.rows();
        if !alpha_m.is_square() || beta_m.rows() != m || !beta_m.is_square() {
            return Err(Error::dims("module maps must be m×m"));
        }
        if !alpha_m.commutes_with(&beta_m) {
            return Err(Error::MapsDoNotCommute("α_M β_M ≠ β_M α_M".into()));
        }
        Ok(BiHomModule { alpha_m, beta_m })
    }

    /// Identity structure maps.
    pub fn trivial(m: usize) -> Self {
        BiHomModule {
            alpha_m: Matrix::identity(m),
            beta_m: Matrix::identity(m),
        }
    }

    pub fn dim(&self) -> usize {
        self.alpha_m.rows()
    }

    pub fn alpha_m(&self) -> &Matrix<S> {
        &self.alpha_m
    }

    pub fn beta_m(&self) -> &Matrix<S> {
        &self.beta_m
    }
}

/// `Θ = (θ1, θ2)`, each of shape `(n, n, m)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CochainPair<S> {
    pub theta1: Tensor3<S>,
    pub theta2: Tensor3<S>,
}

impl<S: Scalar> std::fmt::Debug for CochainPair<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CochainPair")
            .field("theta1", &self.theta1)
            .field("theta2", &self.theta2)
            .finish()
    }
}

impl<S: Scalar> CochainPair<S> {
    pub fn new(theta1: Tensor3<S>, theta2: Tensor3<S>) -> Result<Self> {
        let (n, n2, m) = theta1.dims();
        if n != n2 || theta2.dims() != (n, n, m) {
            return Err(Error::dims("cochains must both be n×n→m"));
        }
        Ok(CochainPair { theta1, theta2 })
    }

    pub fn zero(n: usize, m: usize) -> Self {
        CochainPair {
            theta1: Tensor3::zeros(n, n, m),
            theta2: Tensor3::zeros(n, n, m),
        }
    }

    /// `(n, m)`.
    pub fn shape(&self) -> (usize, usize) {
        let (n, _, m) = self.theta1.dims();
        (n, m)
    }

    /// `θ1` entries then `θ2` entries, each in `(i, j, k)` order.
    pub fn coordinates(&self) -> Vector<S> {
        concat(self.theta1.entries(), self.theta2.entries())
    }

    pub fn from_coordinates(n: usize, m: usize, v: &[S]) -> Result<Self> {
        let half = n * n * m;
        if v.len() != 2 * half {
            return Err(Error::dims(format!("expected {} coordinates", 2 * half)));
        }
        let t = |off: usize| Tensor3::from_fn(n, n, m, |i, j, k| v[off + (i * n + j) * m + k].clone());
        Ok(CochainPair {
            theta1: t(0),
            theta2: t(half),
        })
    }

    pub fn add(&self, other: &CochainPair<S>) -> CochainPair<S> {
        CochainPair {
            theta1: self.theta1.add(&other.theta1),
            theta2: self.theta2.add(&other.theta2),
        }
    }

    pub fn sub(&self, other: &CochainPair<S>) -> CochainPair<S> {
        CochainPair {
            theta1: self.theta1.sub(&other.theta1),
            theta2: self.theta2.sub(&other.theta2),
        }
    }

    fn theta(&self, which: u8) -> &Tensor3<S> {
        if which == 1 {
            &self.theta1
        } else {
            &self.theta2
        }
    }
}

/// `(id, θ on the left, product inside it, θ on the right, product inside it)`:
/// `θa(x pa y, βz) = θb(αx, y pb z)`.
const CC: [(&str, u8, Product, u8, Product); 5] = [
    ("cc1", 1, Product::Left, 1, Product::Left),
    ("cc2", 1, Product::Left, 1, Product::Right),
    ("cc3", 2, Product::Right, 2, Product::Right),
    ("cc4", 2, Product::Left, 2, Product::Right),
    ("cc5", 1, Product::Right, 2, Product::Left),
];

fn check_shapes<S: Scalar>(t: &CochainPair<S>, d: &Dialgebra<S>, m: &BiHomModule<S>) -> Result<()> {
    if t.shape() != (d.dim(), m.dim()) {
        return Err(Error::dims(format!(
            "cochain shape {:?} against algebra {} and module {}",
            t.shape(),
            d.dim(),
            m.dim()
        )));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cocycle_residual<S: Scalar>(
    t: &CochainPair<S>,
    d: &Dialgebra<S>,
    ac: &[Vector<S>],
    bc: &[Vector<S>],
    cc: &(&str, u8, Product, u8, Product),
    x: usize,
    y: usize,
    z: usize,
) -> Vector<S> {
    let &(_, ta, pa, tb, pb) = cc;
    let lhs = t.theta(ta).contract(d.product(pa).row(x, y), &bc[z]);
    let rhs = t.theta(tb).contract(&ac[x], d.product(pb).row(y, z));
    sub_vectors(&lhs, &rhs)
}

/// The five identities on every basis triple.
pub fn is_cocycle<S: Scalar>(t: &CochainPair<S>, d: &Dialgebra<S>, m: &BiHomModule<S>) -> Result<CheckReport<S>> {
    check_shapes(t, d, m)?;
    let n = d.dim();
    let ac = d.alpha().columns();
    let bc = d.beta().columns();
    let mut rep = CheckReport::new(format!("cocycle({})", d.label()));
    for cc in &CC {
        rep.push(check_indexed(cc.0, &[n, n, n], |w| {
            cocycle_residual(t, d, &ac, &bc, cc, w[0], w[1], w[2])
        }));
    }
    Ok(rep)
}

/// `φ1(x, y) = ν(x ⊣ y)`, `φ2(x, y) = ν(x ⊢ y)` for `ν: D → M` (`m×n`).
pub fn coboundary<S: Scalar>(nu: &Matrix<S>, d: &Dialgebra<S>) -> Result<CochainPair<S>> {
    let n = d.dim();
    if nu.cols() != n {
        return Err(Error::dims("ν must be m×n"));
    }
    let m = nu.rows();
    let img = |t: &Tensor3<S>| Tensor3::from_pairs(n, n, m, |i, j| nu.apply(t.row(i, j)));
    Ok(CochainPair {
        theta1: img(d.left()),
        theta2: img(d.right()),
    })
}

/// `D ⊕ M` with `(x+u) ◁ (y+v) = x ⊣ y + θ1(x, y)`, the same for `▷`, and
/// maps `α ⊕ α_M`, `β ⊕ β_M`. Not checked: its axiom report mirrors
/// [`is_cocycle`].
pub fn central_extension<S: Scalar>(d: &Dialgebra<S>, m: &BiHomModule<S>, t: &CochainPair<S>) -> Result<Dialgebra<S>> {
    check_shapes(t, d, m)?;
    let (n, k) = (d.dim(), m.dim());
    let size = n + k;
    let build = |p: &Tensor3<S>, th: &Tensor3<S>| {
        Tensor3::from_pairs(size, size, size, |i, j| {
            if i < n && j < n {
                concat(p.row(i, j), th.row(i, j))
            } else {
                vec![S::zero(); size]
            }
        })
    };
    Dialgebra::new_unchecked(
        format!("{}_Θ", d.label()),
        build(d.left(), &t.theta1),
        build(d.right(), &t.theta2),
        d.alpha().block_diag(&m.alpha_m),
        d.beta().block_diag(&m.beta_m),
    )
}

/// Every cocycle residual flattened, as a linear function of the cochain.
fn cocycle_system<S: Scalar>(d: &Dialgebra<S>, m: usize) -> Matrix<S> {
    let n = d.dim();
    let ac = d.alpha().columns();
    let bc = d.beta().columns();
    let unknowns = 2 * n * n * m;
    let columns: Vec<Vector<S>> = (0..unknowns)
        .map(|c| {
            let mut e = vec![S::zero(); unknowns];
            e[c] = S::one();
            let t = CochainPair::from_coordinates(n, m, &e).expect("shape");
            let mut out = Vec::with_capacity(5 * n * n * n * m);
            for cc in &CC {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            out.extend(cocycle_residual(&t, d, &ac, &bc, cc, x, y, z));
                        }
                    }
                }
            }
            out
        })
        .collect();
    Matrix::from_columns(5 * n * n * n * m, &columns)
}

/// Linear map `ν ↦ ∂ν` on the `m·n` entries of `ν` (row-major).
fn coboundary_map<S: Scalar>(d: &Dialgebra<S>, m: usize) -> Matrix<S> {
    let n = d.dim();
    let columns: Vec<Vector<S>> = (0..m * n)
        .map(|c| {
            let nu = Matrix::from_fn(m, n, |i, j| if i * n + j == c { S::one() } else { S::zero() });
            coboundary(&nu, d).expect("shape").coordinates()
        })
        .collect();
    Matrix::from_columns(2 * n * n * m, &columns)
}

/// `(dim Z², dim B², dim H²)`.
pub fn cohomology_dims<S: Scalar>(d: &Dialgebra<S>, m: &BiHomModule<S>) -> (usize, usize, usize) {
    let (n, k) = (d.dim(), m.dim());
    let unknowns = 2 * n * n * k;
    let z = unknowns - rank(&cocycle_system(d, k));
    let b = rank(&coboundary_map(d, k));
    (z, b, z - b)
}

/// A basis of `Z²`, as cochain pairs.
pub fn cocycle_basis<S: Scalar>(d: &Dialgebra<S>, m: &BiHomModule<S>) -> Vec<CochainPair<S>> {
    let (n, k) = (d.dim(), m.dim());
    nullspace(&cocycle_system(d, k))
        .into_iter()
        .map(|v| CochainPair::from_coordinates(n, k, &v).expect("shape"))
        .collect()
}

/// `x + v ↦ x + ν(x) + v` on `D ⊕ M`.
pub fn extension_isomorphism<S: Scalar>(nu: &Matrix<S>) -> Matrix<S> {
    let (k, n) = (nu.rows(), nu.cols());
    Matrix::from_fn(n + k, n + k, |i, j| {
        if i == j {
            S::one()
        } else if i >= n && j < n {
            nu.get(i - n, j).clone()
        } else {
            S::zero()
        }
    })
}

/// Decides whether `D_{T1}` and `D_{T2}` are equivalent. On success returns
/// `ν` with `T2 − T1 = ∂ν` and `ν` intertwining the structure maps, after
/// checking that `x + v ↦ x + ν(x) + v` is a morphism fixing `M` and
/// covering the identity of `D`.
pub fn equivalence_witness<S: Scalar>(
    t1: &CochainPair<S>,
    t2: &CochainPair<S>,
    d: &Dialgebra<S>,
    m: &BiHomModule<S>,
) -> Result<Option<Matrix<S>>> {
    for t in [t1, t2] {
        if !is_cocycle(t, d, m)?.passed() {
            return Err(Error::NotCocycles);
        }
    }
    let (n, k) = (d.dim(), m.dim());
    // Unknown ν (row-major m×n); equations: ∂ν = T2 − T1, να = α_M ν, νβ = β_M ν.
    let entry = |c: usize| Matrix::from_fn(k, n, |i, j| if i * n + j == c { S::one() } else { S::zero() });
    let columns: Vec<Vector<S>> = (0..k * n)
        .map(|c| {
            let nu = entry(c);
            let mut col = coboundary(&nu, d).expect("shape").coordinates();
            col.extend(nu.mul(d.alpha()).sub(&m.alpha_m.mul(&nu)).entries().iter().cloned());
            col.extend(nu.mul(d.beta()).sub(&m.beta_m.mul(&nu)).entries().iter().cloned());
            col
        })
        .collect();
    let rows = 2 * n * n * k + 2 * k * n;
    let system = Matrix::from_columns(rows, &columns);
    let mut rhs = t2.sub(t1).coordinates();
    rhs.extend(std::iter::repeat_n(S::zero(), 2 * k * n));
    let Some(sol) = solve(&system, &rhs)? else {
        return Ok(None);
    };
    let nu = Matrix::from_fn(k, n, |i, j| sol[i * n + j].clone());
    let f = extension_isomorphism(&nu);
    let e1 = central_extension(d, m, t1)?;
    let e2 = central_extension(d, m, t2)?;
    if !check_morphism(&f, &e1, &e2)?.passed() {
        return Err(Error::NotAnIsomorphism("witness fails the morphism check".into()));
    }
    let inclusion = Matrix::from_fn(n + k, k, |i, j| if i == n + j { S::one() } else { S::zero() });
    let projection = Matrix::from_fn(n, n + k, |i, j| if i == j { S::one() } else { S::zero() });
    if f.mul(&inclusion) != inclusion || projection.mul(&f) != projection {
        return Err(Error::NotAnIsomorphism("witness does not fix the sequence".into()));
    }
    Ok(Some(nu))
}

pub fn extensions_equivalent<S: Scalar>(
    t1: &CochainPair<S>,
    t2: &CochainPair<S>,
    d: &Dialgebra<S>,
    m: &BiHomModule<S>,
) -> Result<bool> {
    Ok(equivalence_witness(t1, t2, d, m)?.is_some())
}

/// `θ(αx, αy) = α_M θ(x, y)` and the same for `β`, for both cochains.
pub fn is_map_compatible<S: Scalar>(t: &CochainPair<S>, d: &Dialgebra<S>, m: &BiHomModule<S>) -> Result<bool> {
    check_shapes(t, d, m)?;
    let n = d.dim();
    let ok = [(d.alpha(), &m.alpha_m), (d.beta(), &m.beta_m)].iter().all(|(f, fm)| {
        let fc = f.columns();
        [&t.theta1, &t.theta2].iter().all(|th| {
            check_indexed("compat", &[n, n], |w| {
                sub_vectors(&th.contract(&fc[w[0]], &fc[w[1]]), &fm.apply(th.row(w[0], w[1])))
            })
            .pass
        })
    });
    Ok(ok)
}

/// `0 → D1 →φ D2 →ψ D3 → 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtensionTriple<S> {
    pub d1: Dialgebra<S>,
    pub d2: Dialgebra<S>,
    pub d3: Dialgebra<S>,
    pub phi: Matrix<S>,
    pub psi: Matrix<S>,
}

impl<S: Scalar> std::fmt::Debug for ExtensionTriple<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ExtensionTriple")
            .field("d1", &self.d1)
            .field("d2", &self.d2)
            .field("d3", &self.d3)
            .field("phi", &self.phi)
            .field("psi", &self.psi)
            .finish()
    }
}

impl<S: Scalar> ExtensionTriple<S> {
    /// Checks exactness by ranks: `φ` injective, `ψ` surjective,
    /// `ψφ = 0` and `dim D2 = dim D1 + dim D3`.
    pub fn new(d1: Dialgebra<S>, d2: Dialgebra<S>, d3: Dialgebra<S>, phi: Matrix<S>, psi: Matrix<S>) -> Result<Self> {
        let (a, b, c) = (d1.dim(), d2.dim(), d3.dim());
        if phi.rows() != b || phi.cols() != a || psi.rows() != c || psi.cols() != b {
            return Err(Error::dims("extension maps"));
        }
        let exact = phi.rank() == a && psi.rank() == c && psi.mul(&phi).is_zero() && b == a + c;
        if !exact {
            return Err(Error::InvalidArgument("sequence is not exact".into()));
        }
        Ok(ExtensionTriple { d1, d2, d3, phi, psi })
    }

    /// The sequence `0 → M → D_Θ → D → 0`.
    pub fn from_cochain(d: &Dialgebra<S>, m: &BiHomModule<S>, t: &CochainPair<S>) -> Result<Self> {
        let (n, k) = (d.dim(), m.dim());
        let d1 = Dialgebra::zero_with_maps(m.alpha_m.clone(), m.beta_m.clone())?;
        let d2 = central_extension(d, m, t)?;
        let phi = Matrix::from_fn(n + k, k, |i, j| if i == n + j { S::one() } else { S::zero() });
        let psi = Matrix::from_fn(n, n + k, |i, j| if i == j { S::one() } else { S::zero() });
        Self::new(d1, d2, d.clone(), phi, psi)
    }

    /// `0 → 0 → D → D → 0`.
    pub fn identity(d: &Dialgebra<S>) -> Result<Self> {
        let n = d.dim();
        Self::new(
            Dialgebra::trivial(0),
            d.clone(),
            d.clone(),
            Matrix::zeros(n, 0),
            Matrix::identity(n),
        )
    }
}

/// `Ker ψ = Im φ` lies in the two-sided annihilator of `D2`.
pub fn is_central<S: Scalar>(e: &ExtensionTriple<S>) -> bool {
    let z = center(&e.d2);
    e.phi.columns().iter().all(|c| z.contains(c))
}

/// Convenience: the axiom report of `D_Θ`.
pub fn extension_report<S: Scalar>(d: &Dialgebra<S>, m: &BiHomModule<S>, t: &CochainPair<S>) -> Result<CheckReport<S>> {
    Ok(check_axioms(&central_extension(d, m, t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
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
    fn zero_product_dims() {
        for n in 1..=3 {
            for k in 1..=2 {
                let d = Dialgebra::<Q>::trivial(n);
                assert_eq!(cohomology_dims(&d, &BiHomModule::trivial(k)), (2 * n * n * k, 0, 2 * n * n * k));
            }
        }
    }

    #[test]
    fn coboundary_of_projection() {
        let d = alg3();
        let nu = Matrix::from_rows(vec![vec![qi(1), qi(0)]]);
        let t = coboundary(&nu, &d).unwrap();
        assert_eq!(t.theta1.get(0, 1, 0), &qi(1));
        assert_eq!(t.theta2.get(1, 1, 0), &qi(1));
        let m = BiHomModule::trivial(1);
        assert!(is_cocycle(&t, &d, &m).unwrap().passed());
        assert!(check_axioms(&central_extension(&d, &m, &t).unwrap()).passed());
    }

    #[test]
    fn zero_cochain_extension_is_central() {
        let d = alg3();
        let m = BiHomModule::trivial(1);
        let e = ExtensionTriple::from_cochain(&d, &m, &CochainPair::zero(2, 1)).unwrap();
        assert!(is_central(&e));
        assert!(is_central(&ExtensionTriple::identity(&d).unwrap()));
    }

    #[test]
    fn equivalence_on_zero_product() {
        let d = Dialgebra::<Q>::trivial(1);
        let m = BiHomModule::trivial(1);
        let z = CochainPair::zero(1, 1);
        let mut t = CochainPair::zero(1, 1);
        t.theta1.set(0, 0, 0, qi(1));
        assert!(extensions_equivalent(&z, &z, &d, &m).unwrap());
        assert!(!extensions_equivalent(&z, &t, &d, &m).unwrap());
    }
}
