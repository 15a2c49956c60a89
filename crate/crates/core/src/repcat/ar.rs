//! The Auslander-Reiten translate, computed by the transpose-dual recipe:
//! take a minimal projective presentation, apply the Nakayama functor, and
//! read off the kernel. Works for every orientation without case analysis.

use crate::error::Error;
use crate::quiver::Quiver;
use crate::repcat::nakayama::{nakayama_morphism, nakayama_object};
use crate::repcat::structure::{kernel_subrep, minimal_presentation};
use crate::repcat::{hom_dim, Representation};

/// Result of the AR translate on an indecomposable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TauResult {
    /// The input was projective; the translate is undefined in the module
    /// category.
    Projective,
    Module(Representation),
}

/// The AR translate of an indecomposable representation.
///
/// Decomposability is rejected through the endomorphism ring: for type-A
/// indecomposables `End = k`, so anything with a larger endomorphism space is
/// refused.
pub fn ar_translate(q: &Quiver, m: &Representation) -> Result<TauResult, Error> {
    if m.is_zero() || hom_dim(q, m, m) != 1 {
        return Err(Error::Internal(
            "ar_translate expects an indecomposable representation".into(),
        ));
    }
    let pres = minimal_presentation(q, m);
    if pres.p1.is_empty() {
        return Ok(TauResult::Projective);
    }
    let nu_d = nakayama_morphism(q, &pres.p1, &pres.p0, &pres.d);
    let nu_p1 = nakayama_object(q, &pres.p1);
    let tau = kernel_subrep(q, &nu_d, &nu_p1.rep);
    Ok(TauResult::Module(tau.rep))
}

/// The inverse translate, computed by inverting the bijection that
/// `ar_translate` induces between non-projective and non-injective
/// indecomposables of the type-A quiver.
pub fn ar_translate_inverse(q: &Quiver, m: &Representation) -> Result<Option<Representation>, Error> {
    use crate::repcat::{enumerate_indecomposables, identify_interval};
    let target = identify_interval(m.dims())
        .ok_or_else(|| Error::Internal("ar_translate_inverse expects an interval module".into()))?;
    for cand in enumerate_indecomposables(q)? {
        if let TauResult::Module(t) = ar_translate(q, &cand)? {
            if identify_interval(t.dims()) == Some(target) {
                return Ok(Some(cand));
            }
        }
    }
    // no preimage: m is injective
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::{ext1_dim, identify_interval, interval_rep, Interval};

    #[test]
    fn tau_of_s1_is_s2_on_linear_a2() {
        let q = Quiver::linear_a(2);
        let s1 = interval_rep(&q, Interval { lo: 1, hi: 1 });
        match ar_translate(&q, &s1).unwrap() {
            TauResult::Module(t) => {
                assert_eq!(identify_interval(t.dims()), Some(Interval { lo: 2, hi: 2 }))
            }
            TauResult::Projective => panic!("S_1 is not projective"),
        }
    }

    #[test]
    fn tau_of_projectives_is_marked() {
        let q = Quiver::linear_a(3);
        for i in 1..=3 {
            let p = q.projective_rep(i).unwrap();
            assert_eq!(ar_translate(&q, &p).unwrap(), TauResult::Projective);
        }
    }

    #[test]
    fn tau_inverse_roundtrip() {
        let q = Quiver::linear_a(3);
        for m in crate::repcat::enumerate_indecomposables(&q).unwrap() {
            if let TauResult::Module(t) = ar_translate(&q, &m).unwrap() {
                let back = ar_translate_inverse(&q, &t).unwrap().expect("tau m is not injective");
                assert_eq!(identify_interval(back.dims()), identify_interval(m.dims()));
            }
        }
    }

    #[test]
    fn ar_sequence_ext_is_nonzero() {
        // dim Ext^1(M, tau M) >= 1 for every non-projective indecomposable
        for n in 2..=4 {
            let q = Quiver::linear_a(n);
            for m in crate::repcat::enumerate_indecomposables(&q).unwrap() {
                if let TauResult::Module(t) = ar_translate(&q, &m).unwrap() {
                    assert!(
                        ext1_dim(&q, &m, &t).unwrap() >= 1,
                        "AR sequence must give a nonsplit extension"
                    );
                }
            }
        }
    }

    #[test]
    fn tau_works_on_every_orientation_of_a3() {
        for bits in 0..4u32 {
            let forward = [(bits & 1) != 0, (bits & 2) != 0];
            let q = Quiver::oriented_a(3, &forward);
            let inds = crate::repcat::enumerate_indecomposables(&q).unwrap();
            let mut nonproj = 0;
            for m in &inds {
                match ar_translate(&q, m).unwrap() {
                    TauResult::Module(t) => {
                        nonproj += 1;
                        assert!(identify_interval(t.dims()).is_some());
                    }
                    TauResult::Projective => {}
                }
            }
            // exactly n(n+1)/2 - n = 3 non-projective indecomposables
            assert_eq!(nonproj, 3);
        }
    }
}
