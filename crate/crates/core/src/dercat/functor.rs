//! The Serre functor and the orbit functor on morphism classes.
//!
//! For a chain map class `g: x -> y`, the termwise Nakayama image `nu(g)`
//! lives between injective complexes; composing with the comparison
//! quasi-isomorphisms `c_x, c_y` and solving `c_y . h ~ nu(g) . c_x` yields
//! the Serre image `h` on canonical projective resolutions. The solution is
//! unique up to homotopy, which makes the assignment strictly functorial.
//! `F = S^{-1} Sigma^2` is then a matrix inversion on hom-space coordinates.

use super::complex::{self, ChainMap, MapSpace};
use super::{DerCat, DerivedInd};
use crate::error::Error;
use crate::linalg::{self, Matrix, Scalar};

/// Matrix of the Serre functor `Hom(x@0, y@rel) -> Hom(Sx, Sy)` in the
/// canonical class bases (the target space is keyed by the Serre images).
pub(super) fn serre_matrix(cat: &DerCat, x_mod: usize, y_mod: usize, rel: i64) -> Matrix {
    let (res_x, _nu_x, sx, c_x) = cat.module_data(x_mod);
    let (res_y, nu_y, sy, c_y) = cat.module_data(y_mod);

    let source_space = cat.hom_space(x_mod, y_mod, rel);
    let rel_h = sy.degree + rel - sx.degree;
    let target_space = cat.hom_space(sx.module, sy.module, rel_h);

    let (res_sx, _, _, _) = cat.module_data(sx.module);
    let (res_sy, _, _, _) = cat.module_data(sy.module);

    // equation space: Hom_K(res(Sx), nu(y)) at rel - deg(Sx)
    let rel_eq = rel - sx.degree;
    let eq_space = complex::map_space(&cat.q, res_sx, nu_y, rel_eq);

    // columns of the solve system: c_y . (chain basis of Hom(res Sx, res Sy))
    let mut sys_cols: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..target_space.chain_dim() {
        let h = target_space.chain_rep(i);
        let comp = complex::compose(&cat.q, res_sx, res_sy, nu_y, &h, c_y);
        sys_cols.push(comp.flatten());
    }
    let n_chain = sys_cols.len();
    for c in 0..eq_space.homotopy_flat().cols() {
        sys_cols.push(eq_space.homotopy_flat().column(c));
    }
    let sys = Matrix::from_columns(eq_space.flat_len(), &sys_cols);

    let mut out = Matrix::zero(target_space.class_dim(), source_space.class_dim());
    for col in 0..source_space.class_dim() {
        let g = source_space.class_rep(col);
        let nu_g = complex::nakayama_chain_map(&cat.q, res_x, res_y, &g);
        let rhs = complex::compose_full_left(res_sx, nu_y, &nu_g, c_x);
        let sol = linalg::solve(&sys, &rhs.flatten())
            .expect("Serre transport equation must be solvable");
        // h = sum of chain basis elements with the solved coefficients
        let mut h = ChainMap::zero(res_sx, res_sy, rel_h);
        for (i, c) in sol[..n_chain].iter().enumerate() {
            h = h.add(&target_space.chain_rep(i).scale(c));
        }
        let coords = target_space.class_coords(&h);
        for (r, v) in coords.into_iter().enumerate() {
            out[(r, col)] = v;
        }
    }
    out
}

/// Apply `F = S^{-1} Sigma^2` to a morphism class given by coordinates in
/// the class basis of `Hom(x, y)`; returns coordinates in `Hom(Fx, Fy)`.
pub(super) fn f_on_class(
    cat: &DerCat,
    x: DerivedInd,
    y: DerivedInd,
    coords: &[Scalar],
) -> Result<Vec<Scalar>, Error> {
    let _rel = y.degree - x.degree;
    let fx = cat.apply_f(x);
    let fy = cat.apply_f(y);
    if cat.serre(fx) != x.shifted(2) || cat.serre(fy) != y.shifted(2) {
        return Err(Error::Internal("S(F X) must equal Sigma^2 X".into()));
    }
    let rel_f = fy.degree - fx.degree;
    let m = cat.serre_matrix(fx.module, fy.module, rel_f);
    // m maps Hom(Fx, Fy) -> Hom(S Fx, S Fy) = Hom(Sigma^2 x, Sigma^2 y),
    // whose class basis is the one the incoming coordinates live in.
    if m.rows() != coords.len() {
        return Err(Error::Internal(format!(
            "Serre matrix has {} rows but class has {} coordinates",
            m.rows(),
            coords.len()
        )));
    }
    linalg::solve(&m, coords)
        .ok_or_else(|| Error::Internal("Serre matrix must be invertible".into()))
}

#[allow(dead_code)]
pub(super) fn identity_coords(space: &MapSpace, cat: &DerCat, module: usize) -> Vec<Scalar> {
    space.class_coords(&cat.identity_map(module))
}
