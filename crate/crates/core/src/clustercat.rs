//! The cluster category as the orbit category of the derived category under
//! `F = tau^{-1} Sigma`: fundamental domain, Hom spaces as twisted sums with
//! a runtime vanishing certificate, composition, and the suspension and
//! 2-Calabi-Yau functors reduced to the domain.

use crate::dercat::{DerCat, DerivedInd};
use crate::error::Error;
use crate::linalg::Scalar;
use crate::quiver::Quiver;
use num_traits::Zero;
use std::collections::BTreeMap;

/// An indecomposable of the cluster category, identified by its canonical
/// representative in the fundamental domain (index into the domain list).
pub type ObjectId = usize;

/// Hom-space data for an ordered pair of domain objects: the dimensions of
/// the twist-0 and twist-1 components, plus the certificate that every other
/// twist in the scan window vanished.
#[derive(Debug, Clone)]
pub struct PairData {
    pub dim0: usize,
    pub dim1: usize,
    /// twists scanned with zero contribution outside {0, 1}
    pub window: (i64, i64),
}

impl PairData {
    pub fn total(&self) -> usize {
        self.dim0 + self.dim1
    }
}

/// A morphism of the cluster category between canonical domain objects,
/// stored as class coordinates of its twist-0 and twist-1 components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterHom {
    pub src: ObjectId,
    pub dst: ObjectId,
    pub comp0: Vec<Scalar>,
    pub comp1: Vec<Scalar>,
}

impl ClusterHom {
    pub fn coords(&self) -> Vec<Scalar> {
        let mut v = self.comp0.clone();
        v.extend(self.comp1.iter().cloned());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.comp0.iter().all(|c| c.is_zero()) && self.comp1.iter().all(|c| c.is_zero())
    }
}

/// The cluster category of a type-A quiver at desk scale.
pub struct ClusterCat {
    der: DerCat,
    domain: Vec<DerivedInd>,
    ids: Vec<String>,
    pairs: BTreeMap<(ObjectId, ObjectId), PairData>,
    sigma_table: Vec<ObjectId>,
    sigma_inv_table: Vec<ObjectId>,
    s_sigma_m2_table: Vec<ObjectId>,
    window: i64,
}

impl ClusterCat {
    pub fn new(q: &Quiver) -> Result<ClusterCat, Error> {
        Self::with_window(q, (q.vertex_count() as i64 + 1) + 2)
    }

    /// Build with an explicit scan-window radius (the default is the Coxeter
    /// number `n+1` plus 2).
    pub fn with_window(q: &Quiver, window: i64) -> Result<ClusterCat, Error> {
        let der = DerCat::new(q)?;
        let mut domain = Vec::new();
        let mut ids = Vec::new();
        for m in 0..der.module_count() {
            domain.push(DerivedInd { module: m, degree: 0 });
            ids.push(der.interval(m).to_string());
        }
        for i in 1..=q.vertex_count() {
            let m = (0..der.module_count())
                .find(|&m| {
                    der.is_projective(m) && {
                        let dims = der.module_rep(m).dims();
                        q.projective_rep(i).map(|p| p.dims() == dims).unwrap_or(false)
                    }
                })
                .ok_or_else(|| Error::Internal(format!("projective P_{} not enumerated", i)))?;
            domain.push(DerivedInd { module: m, degree: 1 });
            ids.push(format!("SP{}", i));
        }

        let mut cat = ClusterCat {
            der,
            domain,
            ids,
            pairs: BTreeMap::new(),
            sigma_table: Vec::new(),
            sigma_inv_table: Vec::new(),
            s_sigma_m2_table: Vec::new(),
            window,
        };

        // Hom tables with the vanishing certificate.
        let count = cat.domain.len();
        for x in 0..count {
            for y in 0..count {
                let data = cat.scan_pair(x, y)?;
                cat.pairs.insert((x, y), data);
            }
        }

        cat.sigma_table = (0..count)
            .map(|x| cat.reduce(cat.domain[x].shifted(1)).0)
            .collect();
        let mut inv = vec![usize::MAX; count];
        for x in 0..count {
            inv[cat.sigma_table[x]] = x;
        }
        if inv.iter().any(|&x| x == usize::MAX) {
            return Err(Error::Internal("suspension is not a bijection on the domain".into()));
        }
        cat.sigma_inv_table = inv;
        cat.s_sigma_m2_table = (0..count)
            .map(|x| {
                let s = cat.der.serre(cat.domain[x]).shifted(-2);
                cat.reduce(s).0
            })
            .collect();
        Ok(cat)
    }

    fn scan_pair(&self, x: ObjectId, y: ObjectId) -> Result<PairData, Error> {
        let xd = self.domain[x];
        let yd = self.domain[y];
        let mut dim0 = 0;
        let mut dim1 = 0;
        for i in -self.window..=self.window {
            let fy = self.der.apply_f_power(yd, i);
            let dim = self
                .der
                .hom_space(xd.module, fy.module, fy.degree - xd.degree)
                .class_dim();
            match i {
                0 => dim0 = dim,
                1 => dim1 = dim,
                _ => {
                    if dim != 0 {
                        return Err(Error::WindowViolation {
                            x: self.ids[x].clone(),
                            y: self.ids[y].clone(),
                            twist: i,
                        });
                    }
                }
            }
        }
        Ok(PairData { dim0, dim1, window: (-self.window, self.window) })
    }

    pub fn quiver(&self) -> &Quiver {
        self.der.quiver()
    }

    pub fn derived(&self) -> &DerCat {
        &self.der
    }

    /// The canonically ordered fundamental domain: modules in interval order,
    /// then once-shifted projectives `SP1..SPn`.
    pub fn objects(&self) -> impl Iterator<Item = ObjectId> {
        0..self.domain.len()
    }

    pub fn object_count(&self) -> usize {
        self.domain.len()
    }

    pub fn representative(&self, x: ObjectId) -> DerivedInd {
        self.domain[x]
    }

    pub fn id(&self, x: ObjectId) -> &str {
        &self.ids[x]
    }

    pub fn lookup(&self, id: &str) -> Result<ObjectId, Error> {
        self.ids
            .iter()
            .position(|i| i == id)
            .ok_or_else(|| Error::UnknownObject(id.to_string()))
    }

    /// Reduce a derived object into the fundamental domain, returning the
    /// canonical object and the F-power `k` with `F^k(canonical) = input`.
    pub fn reduce(&self, x: DerivedInd) -> (ObjectId, i64) {
        let mut cur = x;
        let mut power = 0i64;
        let mut guard = 0;
        loop {
            if let Some(idx) = self.domain.iter().position(|&d| d == cur) {
                return (idx, power);
            }
            if cur.degree < 0 {
                cur = self.der.apply_f(cur);
                power -= 1;
            } else {
                cur = self.der.apply_f_inverse(cur);
                power += 1;
            }
            guard += 1;
            assert!(guard < 1000, "fundamental domain reduction did not terminate");
        }
    }

    pub fn pair(&self, x: ObjectId, y: ObjectId) -> &PairData {
        self.pairs.get(&(x, y)).expect("pair data precomputed")
    }

    /// `dim Hom_C(x, y)`.
    pub fn hom_dim(&self, x: ObjectId, y: ObjectId) -> usize {
        self.pair(x, y).total()
    }

    /// `dim Ext^1_C(x, y) = dim Hom_C(x, Sigma y)`.
    pub fn ext1_dim(&self, x: ObjectId, y: ObjectId) -> usize {
        self.hom_dim(x, self.sigma(y))
    }

    /// Basis of `Hom_C(x, y)` as cluster morphisms.
    pub fn hom_basis(&self, x: ObjectId, y: ObjectId) -> Vec<ClusterHom> {
        let data = self.pair(x, y);
        let mut out = Vec::new();
        for i in 0..data.dim0 {
            let mut comp0 = vec![Scalar::zero(); data.dim0];
            comp0[i] = crate::linalg::scalar(1);
            out.push(ClusterHom { src: x, dst: y, comp0, comp1: vec![Scalar::zero(); data.dim1] });
        }
        for i in 0..data.dim1 {
            let mut comp1 = vec![Scalar::zero(); data.dim1];
            comp1[i] = crate::linalg::scalar(1);
            out.push(ClusterHom { src: x, dst: y, comp0: vec![Scalar::zero(); data.dim0], comp1 });
        }
        out
    }

    pub fn zero_hom(&self, x: ObjectId, y: ObjectId) -> ClusterHom {
        let data = self.pair(x, y);
        ClusterHom {
            src: x,
            dst: y,
            comp0: vec![Scalar::zero(); data.dim0],
            comp1: vec![Scalar::zero(); data.dim1],
        }
    }

    pub fn identity_hom(&self, x: ObjectId) -> ClusterHom {
        let xd = self.domain[x];
        let space = self.der.hom_space(xd.module, xd.module, 0);
        let comp0 = space.class_coords(&self.der.identity_map(xd.module));
        let data = self.pair(x, x);
        ClusterHom { src: x, dst: x, comp0, comp1: vec![Scalar::zero(); data.dim1] }
    }

    /// Composition `g . f` in the orbit category: twist-0 parts compose in
    /// the derived category, mixed products land in twist 1 after applying
    /// the orbit functor to the second factor's twist-0 component.
    pub fn compose(&self, f: &ClusterHom, g: &ClusterHom) -> Result<ClusterHom, Error> {
        if f.dst != g.src {
            return Err(Error::Internal("compose: endpoint mismatch".into()));
        }
        let (x, y, z) = (f.src, f.dst, g.dst);
        let xd = self.domain[x];
        let yd = self.domain[y];
        let zd = self.domain[z];
        let fy = self.der.apply_f(yd);
        let fz = self.der.apply_f(zd);

        let f0 = self.der.rep_from_coords(xd.module, yd.module, yd.degree - xd.degree, &f.comp0);
        let f1 = self.der.rep_from_coords(xd.module, fy.module, fy.degree - xd.degree, &f.comp1);
        let g0 = self.der.rep_from_coords(yd.module, zd.module, zd.degree - yd.degree, &g.comp0);
        let g1 = self.der.rep_from_coords(yd.module, fz.module, fz.degree - yd.degree, &g.comp1);

        // twist 0: g0 . f0
        let t0 = self.der.compose_chain(xd.module, yd.module, zd.module, &f0, &g0);
        let comp0 = self.der.coords_of(xd.module, zd.module, zd.degree - xd.degree, &t0);

        // twist 1: g1 . f0 + F(g0) . f1
        let t1a = self.der.compose_chain(xd.module, yd.module, fz.module, &f0, &g1);
        let fg0_coords = self.der.f_on_class(yd, zd, &g.comp0)?;
        let fg0 = self.der.rep_from_coords(fy.module, fz.module, fz.degree - fy.degree, &fg0_coords);
        let t1b = self.der.compose_chain(xd.module, fy.module, fz.module, &f1, &fg0);
        let t1 = t1a.add(&t1b);
        let comp1 = self.der.coords_of(xd.module, fz.module, fz.degree - xd.degree, &t1);

        // the twist-2 product g1 . F(f1)-style lands in Hom(x, F^2 z), which
        // the window certificate guarantees to be the zero space

        Ok(ClusterHom { src: x, dst: z, comp0, comp1 })
    }

    /// The suspension on objects, reduced to the domain.
    pub fn sigma(&self, x: ObjectId) -> ObjectId {
        self.sigma_table[x]
    }

    pub fn sigma_inverse(&self, x: ObjectId) -> ObjectId {
        self.sigma_inv_table[x]
    }

    /// `S Sigma^{-2}` on objects; 2-Calabi-Yau says this fixes everything.
    pub fn s_sigma_m2(&self, x: ObjectId) -> ObjectId {
        self.s_sigma_m2_table[x]
    }

    /// Transport a derived morphism class between arbitrary derived objects
    /// into cluster components between canonical objects. Returns the
    /// canonical endpoints, the twist, and the transported coordinates.
    pub fn transport(
        &self,
        a: DerivedInd,
        b: DerivedInd,
        coords: &[Scalar],
    ) -> Result<(ObjectId, ObjectId, i64, Vec<Scalar>), Error> {
        let (xa, ka) = self.reduce(a);
        let (xb, kb) = self.reduce(b);
        // move f: F^ka(x) -> F^kb(y) to x -> F^(kb-ka)(y)
        let mut cur_a = a;
        let mut cur_b = b;
        let mut cur = coords.to_vec();
        for _ in 0..ka.abs() {
            if ka > 0 {
                cur = self.der.f_inverse_on_class(cur_a, cur_b, &cur);
                cur_a = self.der.apply_f_inverse(cur_a);
                cur_b = self.der.apply_f_inverse(cur_b);
            } else {
                cur = self.der.f_on_class(cur_a, cur_b, &cur)?;
                cur_a = self.der.apply_f(cur_a);
                cur_b = self.der.apply_f(cur_b);
            }
        }
        debug_assert_eq!(cur_a, self.domain[xa]);
        Ok((xa, xb, kb - ka, cur))
    }

    /// The suspension applied to a morphism, with both endpoints reduced to
    /// canonical domain objects.
    pub fn sigma_hom(&self, f: &ClusterHom) -> Result<ClusterHom, Error> {
        let sx = self.sigma(f.src);
        let sy = self.sigma(f.dst);
        let mut out = self.zero_hom(sx, sy);
        let xd = self.domain[f.src];
        let yd = self.domain[f.dst];
        let fy = self.der.apply_f(yd);
        for (b, coords) in [(yd, &f.comp0), (fy, &f.comp1)] {
            if coords.iter().all(|c| c.is_zero()) {
                continue;
            }
            let (tx, ty, twist, moved) =
                self.transport(xd.shifted(1), b.shifted(1), coords)?;
            if tx != sx || ty != sy {
                return Err(Error::Internal("sigma_hom endpoints do not match".into()));
            }
            match twist {
                0 => add_into(&mut out.comp0, &moved),
                1 => add_into(&mut out.comp1, &moved),
                t => {
                    if !moved.iter().all(|c| c.is_zero()) {
                        return Err(Error::WindowViolation {
                            x: self.ids[sx].clone(),
                            y: self.ids[sy].clone(),
                            twist: t,
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}

fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    assert_eq!(acc.len(), v.len(), "component length mismatch");
    for (a, x) in acc.iter_mut().zip(v.iter()) {
        *a += x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::Interval;

    fn cat(n: usize) -> ClusterCat {
        ClusterCat::new(&Quiver::linear_a(n)).unwrap()
    }

    fn obj(c: &ClusterCat, id: &str) -> ObjectId {
        c.lookup(id).unwrap()
    }

    #[test]
    fn fundamental_domain_sizes() {
        assert_eq!(cat(2).object_count(), 5);
        assert_eq!(cat(3).object_count(), 9);
        assert_eq!(cat(4).object_count(), 14);
    }

    #[test]
    fn domain_ids_on_a2() {
        let c = cat(2);
        let ids: Vec<&str> = c.objects().map(|x| c.id(x)).collect();
        assert_eq!(ids, vec!["M[1,1]", "M[1,2]", "M[2,2]", "SP1", "SP2"]);
    }

    #[test]
    fn endomorphisms_are_one_dimensional() {
        let c = cat(2);
        for x in c.objects() {
            assert_eq!(c.hom_dim(x, x), 1, "End({})", c.id(x));
        }
    }

    #[test]
    fn ext_example_on_a2() {
        // dim Hom_C(S_1, Sigma P_2) = 1 and dim Hom_C(P_1, Sigma P_1) = 0
        let c = cat(2);
        let s1 = obj(&c, "M[1,1]");
        let p1 = obj(&c, "M[1,2]");
        let p2 = obj(&c, "M[2,2]");
        assert_eq!(c.hom_dim(s1, c.sigma(p2)), 1);
        assert_eq!(c.hom_dim(p1, c.sigma(p1)), 0);
    }

    #[test]
    fn sigma_is_a_bijection() {
        for n in 1..=3 {
            let c = cat(n);
            let mut image: Vec<ObjectId> = c.objects().map(|x| c.sigma(x)).collect();
            image.sort_unstable();
            image.dedup();
            assert_eq!(image.len(), c.object_count());
        }
    }

    #[test]
    fn two_calabi_yau_identity_on_objects() {
        for n in 1..=3 {
            let c = cat(n);
            for x in c.objects() {
                assert_eq!(c.s_sigma_m2(x), x, "S Sigma^-2 must fix {}", c.id(x));
            }
        }
    }

    #[test]
    fn two_calabi_yau_symmetry_of_ext() {
        let c = cat(3);
        for x in c.objects() {
            for y in c.objects() {
                assert_eq!(c.ext1_dim(x, y), c.ext1_dim(y, x));
            }
        }
    }

    #[test]
    fn hom_dim_invariant_under_f_on_one_argument() {
        let c = cat(3);
        for x in c.objects() {
            for y in c.objects() {
                let xd = c.representative(x);
                let yd = c.representative(y);
                let fyd = c.derived().apply_f(yd);
                // recompute the orbit sum with the second argument twisted
                let mut total = 0;
                for i in -c.window..=c.window {
                    let fy = c.derived().apply_f_power(fyd, i);
                    total += c
                        .derived()
                        .hom_space(xd.module, fy.module, fy.degree - xd.degree)
                        .class_dim();
                }
                assert_eq!(total, c.hom_dim(x, y));
            }
        }
    }

    #[test]
    fn composition_identity_laws() {
        let c = cat(2);
        for x in c.objects() {
            for y in c.objects() {
                let idx = c.identity_hom(x);
                let idy = c.identity_hom(y);
                for f in c.hom_basis(x, y) {
                    let left = c.compose(&idx, &f).unwrap();
                    let right = c.compose(&f, &idy).unwrap();
                    assert_eq!(left, f);
                    assert_eq!(right, f);
                }
            }
        }
    }

    #[test]
    fn composition_is_bilinear() {
        let c = cat(2);
        let s1 = obj(&c, "M[1,1]");
        let p1 = obj(&c, "M[1,2]");
        for f in c.hom_basis(s1, p1) {
            for g in c.hom_basis(p1, s1) {
                let two = crate::linalg::scalar(2);
                let f2 = ClusterHom {
                    src: f.src,
                    dst: f.dst,
                    comp0: f.comp0.iter().map(|v| v * &two).collect(),
                    comp1: f.comp1.iter().map(|v| v * &two).collect(),
                };
                let a = c.compose(&f2, &g).unwrap();
                let b = c.compose(&f, &g).unwrap();
                assert_eq!(a.comp0, b.comp0.iter().map(|v| v * &two).collect::<Vec<_>>());
                assert_eq!(a.comp1, b.comp1.iter().map(|v| v * &two).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn composition_is_associative_on_a3() {
        let c = cat(3);
        // exhaustive over composable basis triples through low-index objects
        let objs: Vec<ObjectId> = c.objects().collect();
        for &x in &objs {
            for &y in &objs {
                for &z in &objs {
                    for &w in &objs {
                        for f in c.hom_basis(x, y) {
                            for g in c.hom_basis(y, z) {
                                for h in c.hom_basis(z, w) {
                                    let gf = c.compose(&f, &g).unwrap();
                                    let hg = c.compose(&g, &h).unwrap();
                                    let l = c.compose(&gf, &h).unwrap();
                                    let r = c.compose(&f, &hg).unwrap();
                                    assert_eq!(l, r, "associativity through {} {} {} {}", c.id(x), c.id(y), c.id(z), c.id(w));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_of_s1_is_s2_on_a2() {
        let c = cat(2);
        let s1 = obj(&c, "M[1,1]");
        let s2 = obj(&c, "M[2,2]");
        assert_eq!(c.sigma(s1), s2);
    }

    #[test]
    fn sigma_hom_preserves_nonzeroness() {
        let c = cat(2);
        for x in c.objects() {
            for y in c.objects() {
                for f in c.hom_basis(x, y) {
                    let sf = c.sigma_hom(&f).unwrap();
                    assert!(!sf.is_zero(), "Sigma of a basis morphism must be nonzero");
                    assert_eq!(sf.src, c.sigma(x));
                    assert_eq!(sf.dst, c.sigma(y));
                }
            }
        }
    }

    #[test]
    fn interval_lookup_roundtrip() {
        let c = cat(3);
        let m = c.derived().module_by_interval(Interval { lo: 1, hi: 3 }).unwrap();
        let x = c.reduce(DerivedInd { module: m, degree: 0 }).0;
        assert_eq!(c.id(x), "M[1,3]");
    }
}
