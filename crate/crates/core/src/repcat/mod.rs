//! The abelian category of representations of the quiver (equivalently,
//! modules over the path algebra): explicit representations, Hom spaces via
//! intertwiner systems, Ext^1 through the Euler form, interval
//! indecomposables for type A, the AR translate, composition factors and
//! generation tests.

pub mod ar;
pub mod nakayama;
pub mod structure;

use crate::error::Error;
use crate::linalg::{self, Matrix, Scalar};
use crate::quiver::{DimensionVector, Path, Quiver};
use num_traits::Zero;

/// A finite-dimensional representation: a dimension per vertex and one exact
/// matrix per arrow (target-dim x source-dim).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    dims: DimensionVector,
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(q: &Quiver, dims: DimensionVector, maps: Vec<Matrix>) -> Result<Self, Error> {
        if dims.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch(
                "dimension vector length differs from vertex count".into(),
            ));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch(
                "one matrix per arrow is required".into(),
            ));
        }
        for (a, m) in q.arrows().iter().zip(maps.iter()) {
            if m.rows() != dims[a.target - 1] || m.cols() != dims[a.source - 1] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow '{}' map must be {}x{}, got {}x{}",
                    a.label,
                    dims[a.target - 1],
                    dims[a.source - 1],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { dims, maps })
    }

    pub fn zero(q: &Quiver) -> Self {
        let dims = vec![0; q.vertex_count()];
        let maps = q.arrows().iter().map(|_| Matrix::zero(0, 0)).collect();
        Representation { dims, maps }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, vertex: usize) -> usize {
        self.dims[vertex - 1]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow_idx: usize) -> &Matrix {
        &self.maps[arrow_idx]
    }

    /// Action of a path: the composite of the arrow matrices along it,
    /// a `dims[target] x dims[source]` matrix.
    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dims[p.source - 1]);
        for &aidx in &p.arrows {
            m = self.maps[aidx].mul(&m);
        }
        m
    }
}

/// A morphism of representations: one matrix per vertex, satisfying the
/// intertwiner equations `N_a f_s = f_t M_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMorphism {
    pub mats: Vec<Matrix>,
}

impl RepMorphism {
    pub fn zero(src: &Representation, dst: &Representation) -> Self {
        let mats = src
            .dims
            .iter()
            .zip(dst.dims.iter())
            .map(|(&s, &d)| Matrix::zero(d, s))
            .collect();
        RepMorphism { mats }
    }

    pub fn identity(rep: &Representation) -> Self {
        RepMorphism { mats: rep.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    pub fn at(&self, vertex: usize) -> &Matrix {
        &self.mats[vertex - 1]
    }

    /// `self` after `first`: vertexwise matrix product `self . first`.
    pub fn compose(&self, first: &RepMorphism) -> RepMorphism {
        let mats = self
            .mats
            .iter()
            .zip(first.mats.iter())
            .map(|(g, f)| g.mul(f))
            .collect();
        RepMorphism { mats }
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    /// All matrix entries in vertex order, for span computations.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for m in &self.mats {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    out.push(m[(r, c)].clone());
                }
            }
        }
        out
    }

    /// Check the intertwiner equations against explicit source and target.
    pub fn is_valid(&self, q: &Quiver, src: &Representation, dst: &Representation) -> bool {
        q.arrows().iter().enumerate().all(|(idx, a)| {
            let lhs = dst.map(idx).mul(self.at(a.source));
            let rhs = self.at(a.target).mul(src.map(idx));
            lhs == rhs
        })
    }
}

/// Basis of the space of homomorphisms `m -> n`, computed as the kernel of
/// the assembled intertwiner system.
pub fn hom_basis(q: &Quiver, m: &Representation, n: &Representation) -> Vec<RepMorphism> {
    let nv = q.vertex_count();
    // unknown layout: for each vertex v, the entries of f_v, row-major
    let block_sizes: Vec<usize> = (0..nv).map(|v| n.dims[v] * m.dims[v]).collect();
    let offsets: Vec<usize> = block_sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let total: usize = block_sizes.iter().sum();

    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (aidx, a) in q.arrows().iter().enumerate() {
        let s = a.source - 1;
        let t = a.target - 1;
        let na = n.map(aidx);
        let ma = m.map(aidx);
        // (N_a f_s - f_t M_a)[r, c] = 0
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![Scalar::zero(); total];
                for k in 0..n.dims[s] {
                    // coefficient of f_s[k, c]
                    row[offsets[s] + k * m.dims[s] + c] += na[(r, k)].clone();
                }
                for l in 0..m.dims[t] {
                    // coefficient of f_t[r, l]
                    row[offsets[t] + r * m.dims[t] + l] -= ma[(l, c)].clone();
                }
                rows.push(row);
            }
        }
    }

    let sys = if rows.is_empty() {
        Matrix::zero(0, total)
    } else {
        let mut mat = Matrix::zero(rows.len(), total);
        for (r, row) in rows.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                mat[(r, c)] = x.clone();
            }
        }
        mat
    };

    let kernel = linalg::kernel_basis(&sys);
    (0..kernel.cols())
        .map(|k| {
            let col = kernel.column(k);
            let mats = (0..nv)
                .map(|v| {
                    let mut f = Matrix::zero(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            f[(r, c)] = col[offsets[v] + r * m.dims[v] + c].clone();
                        }
                    }
                    f
                })
                .collect();
            RepMorphism { mats }
        })
        .collect()
}

pub fn hom_dim(q: &Quiver, m: &Representation, n: &Representation) -> usize {
    hom_basis(q, m, n).len()
}

/// `dim Ext^1(m, n)` through the hereditary identity
/// `dim Ext^1 = dim Hom - <dim m, dim n>`. A negative value signals misuse
/// on a non-hereditary input and is reported as an internal error.
pub fn ext1_dim(q: &Quiver, m: &Representation, n: &Representation) -> Result<usize, Error> {
    let hom = hom_dim(q, m, n) as i64;
    let euler = q.euler_form(&m.dims, &n.dims)?;
    let ext = hom - euler;
    if ext < 0 {
        return Err(Error::Internal(format!(
            "negative Ext^1 dimension {} from the Euler identity",
            ext
        )));
    }
    Ok(ext as usize)
}

/// An interval `[lo, hi]` of vertices; the label of a type-A indecomposable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "M[{},{}]", self.lo, self.hi)
    }
}

/// Intervals of a canonically numbered type-A quiver, ordered
/// lexicographically by `(lo, hi)`.
pub fn intervals(q: &Quiver) -> Result<Vec<Interval>, Error> {
    require_canonical_type_a(q)?;
    let n = q.vertex_count();
    let mut out = Vec::new();
    for lo in 1..=n {
        for hi in lo..=n {
            out.push(Interval { lo, hi });
        }
    }
    Ok(out)
}

pub fn require_canonical_type_a(q: &Quiver) -> Result<(), Error> {
    if !q.is_type_a() {
        return Err(Error::UnsupportedQuiver(
            "the underlying graph is not a simple path (type A required)".into(),
        ));
    }
    if !q.is_canonical_type_a() {
        return Err(Error::UnsupportedQuiver(
            "type A quiver must be numbered 1..n along the path (every arrow joins i and i+1)"
                .into(),
        ));
    }
    Ok(())
}

/// The interval representation: one-dimensional on `[lo, hi]`, identity maps
/// on the arrows inside the interval.
pub fn interval_rep(q: &Quiver, iv: Interval) -> Representation {
    let n = q.vertex_count();
    let dims: DimensionVector = (1..=n)
        .map(|v| usize::from(v >= iv.lo && v <= iv.hi))
        .collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let sd = dims[a.source - 1];
            let td = dims[a.target - 1];
            if sd == 1 && td == 1 {
                Matrix::identity(1)
            } else {
                Matrix::zero(td, sd)
            }
        })
        .collect();
    Representation::new(q, dims, maps).expect("interval representation is well formed")
}

/// The `n(n+1)/2` indecomposables of a type-A quiver, as interval
/// representations in canonical order.
pub fn enumerate_indecomposables(q: &Quiver) -> Result<Vec<Representation>, Error> {
    Ok(intervals(q)?.into_iter().map(|iv| interval_rep(q, iv)).collect())
}

/// Identify an interval module from its dimension vector. Dimension vectors
/// separate type-A indecomposables, so this is an isomorphism test. `None`
/// when the vector is not an interval indicator.
pub fn identify_interval(dims: &[usize]) -> Option<Interval> {
    let support: Vec<usize> = dims
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(i, _)| i + 1)
        .collect();
    if support.is_empty() || dims.iter().any(|&d| d > 1) {
        return None;
    }
    let lo = support[0];
    let hi = *support.last().unwrap();
    if support.len() != hi - lo + 1 {
        return None; // support not contiguous
    }
    Some(Interval { lo, hi })
}

/// Multiplicity of the simple at `vertex` in the composition series of `m`.
/// Equals `dim Hom(P_vertex, m)`, which for path algebras is `dims[vertex]`.
pub fn composition_multiplicity(m: &Representation, vertex: usize) -> usize {
    m.dim_at(vertex)
}

/// Is `y` generated by the family `sources`, i.e. does the sum of the images
/// of all homomorphisms from members of `sources` equal `y`?
pub fn generated_by(q: &Quiver, sources: &[&Representation], y: &Representation) -> bool {
    let nv = q.vertex_count();
    let mut columns: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); nv];
    for s in sources {
        for f in hom_basis(q, s, y) {
            for v in 0..nv {
                let m = &f.mats[v];
                for c in 0..m.cols() {
                    columns[v].push(m.column(c));
                }
            }
        }
    }
    (0..nv).all(|v| {
        if y.dims()[v] == 0 {
            true
        } else {
            linalg::span_dim(&columns[v]) == y.dims()[v]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::linear_a(2)
    }

    #[test]
    fn hom_from_projective_cover_to_simple() {
        let q = a2();
        let p1 = q.projective_rep(1).unwrap();
        let s1 = interval_rep(&q, Interval { lo: 1, hi: 1 });
        assert_eq!(hom_dim(&q, &p1, &s1), 1);
        assert_eq!(hom_dim(&q, &s1, &p1), 0);
    }

    #[test]
    fn endomorphisms_contain_identity() {
        let q = a2();
        for m in enumerate_indecomposables(&q).unwrap() {
            assert!(hom_dim(&q, &m, &m) >= 1);
        }
    }

    #[test]
    fn hom_basis_elements_are_valid_morphisms() {
        let q = Quiver::linear_a(3);
        let inds = enumerate_indecomposables(&q).unwrap();
        for m in &inds {
            for n in &inds {
                for f in hom_basis(&q, m, n) {
                    assert!(f.is_valid(&q, m, n));
                }
            }
        }
    }

    #[test]
    fn ext1_of_simples_on_a2() {
        let q = a2();
        let s1 = interval_rep(&q, Interval { lo: 1, hi: 1 });
        let s2 = interval_rep(&q, Interval { lo: 2, hi: 2 });
        // Hom(S1,S2) = 0 and <e1, e2> = -1, so Ext^1 = 1 (the extension is P_1)
        assert_eq!(ext1_dim(&q, &s1, &s2).unwrap(), 1);
        assert_eq!(ext1_dim(&q, &s2, &s1).unwrap(), 0);
    }

    #[test]
    fn ext1_vanishes_on_projective_sources_and_injective_targets() {
        let q = Quiver::linear_a(3);
        let inds = enumerate_indecomposables(&q).unwrap();
        for i in 1..=3 {
            let p = q.projective_rep(i).unwrap();
            let inj = q.injective_rep(i).unwrap();
            for n in &inds {
                assert_eq!(ext1_dim(&q, &p, n).unwrap(), 0);
                assert_eq!(ext1_dim(&q, n, &inj).unwrap(), 0);
            }
        }
    }

    #[test]
    fn indecomposable_counts() {
        assert_eq!(enumerate_indecomposables(&Quiver::linear_a(2)).unwrap().len(), 3);
        assert_eq!(enumerate_indecomposables(&Quiver::linear_a(3)).unwrap().len(), 6);
        assert_eq!(enumerate_indecomposables(&Quiver::linear_a(4)).unwrap().len(), 10);
    }

    #[test]
    fn interval_enumeration_rejects_non_canonical_numbering() {
        use crate::quiver::Arrow;
        let q = Quiver::new(
            3,
            vec![
                Arrow { label: "a".into(), source: 1, target: 3 },
                Arrow { label: "b".into(), source: 3, target: 2 },
            ],
        )
        .unwrap();
        assert!(enumerate_indecomposables(&q).is_err());
    }

    #[test]
    fn hom_dims_are_zero_or_one_for_type_a() {
        for n in 2..=4 {
            let q = Quiver::linear_a(n);
            let inds = enumerate_indecomposables(&q).unwrap();
            for m in &inds {
                for nn in &inds {
                    assert!(hom_dim(&q, m, nn) <= 1);
                }
            }
        }
    }

    #[test]
    fn composition_multiplicities() {
        let q = a2();
        let p1 = q.projective_rep(1).unwrap();
        let s2 = interval_rep(&q, Interval { lo: 2, hi: 2 });
        assert_eq!(composition_multiplicity(&p1, 1), 1);
        assert_eq!(composition_multiplicity(&s2, 1), 0);
        let total: usize = (1..=2).map(|i| composition_multiplicity(&p1, i)).sum();
        assert_eq!(total, p1.total_dim());
    }

    #[test]
    fn generation_tests() {
        let q = a2();
        let p1 = q.projective_rep(1).unwrap();
        let s1 = interval_rep(&q, Interval { lo: 1, hi: 1 });
        let s2 = interval_rep(&q, Interval { lo: 2, hi: 2 });
        assert!(generated_by(&q, &[&p1], &s1));
        assert!(!generated_by(&q, &[&s2], &s1));
        assert!(generated_by(&q, &[&s1], &s1));
    }

    #[test]
    fn identify_interval_from_dims() {
        assert_eq!(identify_interval(&[1, 1, 0]), Some(Interval { lo: 1, hi: 2 }));
        assert_eq!(identify_interval(&[0, 0, 0]), None);
        assert_eq!(identify_interval(&[1, 0, 1]), None);
        assert_eq!(identify_interval(&[2, 1, 0]), None);
    }
}
