//! Links by complete intersections `2H ∩ S` and elementary biliaisons on `2H`.
//!
//! Containment `Z ⊂ Q − P` is modelled numerically as `q − p ≥ s`.

use serde::{Deserialize, Serialize};

use crate::profiles::CurveModel;
use crate::triples::Triple;
use crate::{Error, Result};

/// Quantities unchanged by liaison on `2H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LiaisonInvariants {
    pub z: i64,
    pub p_minus_y: i64,
}

/// Residual of `C` in `2H ∩ S`, where `S ∩ H = Q` has degree `q`:
/// triple `(z, q−p, q−y)` with the same `Z`.
pub fn link(model: &CurveModel, q: i64) -> Result<CurveModel> {
    let t = model.triple();
    let s = model.profile().s();
    if q < t.p() {
        return Err(Error::NotAdmissible(format!(
            "link degree q = {q} is below p = {}; Q must contain P",
            t.p()
        )));
    }
    if q - t.p() < s {
        return Err(Error::NotAdmissible(format!(
            "q - p = {} is below s = {s}; no curve of that degree contains Z",
            q - t.p()
        )));
    }
    let linked = Triple::new(t.z(), q - t.p(), q - t.y())?;
    CurveModel::new(linked, model.profile().clone())
}

/// Elementary biliaison to residual degree `y_new`; returns the model and
/// the height `y_new − y`.
pub fn bilink(model: &CurveModel, y_new: i64) -> Result<(CurveModel, i64)> {
    let t = model.triple();
    let s = model.profile().s();
    if y_new < s {
        return Err(Error::NotAdmissible(format!(
            "y' = {y_new} is below s = {s}; Y' must contain Z"
        )));
    }
    let moved = Triple::new(t.z(), y_new, y_new + t.p() - t.y())?;
    Ok((CurveModel::new(moved, model.profile().clone())?, y_new - t.y()))
}

pub fn liaison_invariants(model: &CurveModel) -> LiaisonInvariants {
    let t = model.triple();
    LiaisonInvariants {
        z: t.z(),
        p_minus_y: t.p() - t.y(),
    }
}

/// Minimal in its biliaison class iff `Y` has the least degree through `Z`.
/// Only meaningful for non-ACM curves.
pub fn is_minimal(model: &CurveModel) -> Result<bool> {
    if model.triple().z() == 0 {
        return Err(Error::Unsupported(
            "minimality criterion needs a non-empty Z (z >= 1)".into(),
        ));
    }
    Ok(model.triple().y() == model.profile().s())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::{h0_iz, ProfileKind};
    use crate::triples::curve_class;
    use proptest::prelude::*;

    fn m(z: i64, y: i64, p: i64, kind: ProfileKind) -> CurveModel {
        CurveModel::with_kind(Triple::new(z, y, p).unwrap(), kind).unwrap()
    }

    #[test]
    fn link_examples() {
        let a = m(1, 1, 1, ProfileKind::Collinear);
        assert_eq!(link(&a, 2).unwrap(), a);
        let b = m(4, 2, 4, ProfileKind::Generic);
        let lb = link(&b, 7).unwrap();
        assert_eq!(*lb.triple(), Triple::new(4, 3, 5).unwrap());
        assert_eq!(lb.profile(), b.profile());
        assert!(link(&m(1, 2, 3, ProfileKind::Collinear), 3).is_err());
        assert!(link(&b, 3).is_err());
    }

    #[test]
    fn bilink_examples() {
        let a = m(1, 1, 1, ProfileKind::Collinear);
        let (b, h) = bilink(&a, 2).unwrap();
        assert_eq!((*b.triple(), h), (Triple::new(1, 2, 2).unwrap(), 1));
        let (back, h) = bilink(&b, 1).unwrap();
        assert_eq!((back, h), (a, -1));
        assert!(bilink(&m(4, 2, 4, ProfileKind::Generic), 1).is_err());
    }

    #[test]
    fn invariant_examples() {
        let a = m(1, 1, 1, ProfileKind::Collinear);
        assert_eq!(liaison_invariants(&a), LiaisonInvariants { z: 1, p_minus_y: 0 });
        let b = m(4, 2, 4, ProfileKind::Generic);
        assert_eq!(
            liaison_invariants(&link(&b, 7).unwrap()),
            LiaisonInvariants { z: 4, p_minus_y: 2 }
        );
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal(&m(1, 1, 1, ProfileKind::Collinear)).unwrap());
        assert!(!is_minimal(&m(1, 2, 2, ProfileKind::Collinear)).unwrap());
        assert!(is_minimal(&m(3, 2, 4, ProfileKind::Generic)).unwrap());
        assert!(matches!(
            is_minimal(&m(0, 2, 2, ProfileKind::Collinear)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn link_of_acm_curve_to_plane_curve() {
        // q = p = y would leave nothing; q = p with y < p gives a plane curve.
        let a = m(0, 1, 3, ProfileKind::Collinear);
        assert_eq!(*link(&a, 3).unwrap().triple(), Triple::new(0, 0, 2).unwrap());
        assert!(link(&m(0, 2, 2, ProfileKind::Collinear), 2).is_err());
    }

    fn any_model() -> impl Strategy<Value = CurveModel> {
        (1i64..=10, 0i64..=5, 0i64..20, any::<bool>()).prop_filter_map("valid", |(d, y, z, g)| {
            let z = if y == 0 { 0 } else { z };
            let t = Triple::new(z, y, d - y).ok()?;
            let kind = if g { ProfileKind::Generic } else { ProfileKind::Collinear };
            CurveModel::with_kind(t, kind).ok()
        })
    }

    proptest! {
        #[test]
        fn link_is_an_involution(model in any_model(), extra in 0i64..8) {
            let q = model.triple().p() + model.profile().s() + extra;
            if let Ok(linked) = link(&model, q) {
                prop_assert_eq!(link(&linked, q).unwrap(), model.clone());
                prop_assert_eq!(liaison_invariants(&linked), liaison_invariants(&model));
                prop_assert_eq!(curve_class(linked.triple()).d, 2 * q - model.degree());
            }
        }

        #[test]
        fn bilink_inverts(model in any_model(), shift in 0i64..6) {
            let y = model.triple().y();
            let y_new = model.profile().s() + shift;
            if let Ok((moved, h)) = bilink(&model, y_new) {
                prop_assert_eq!(h, y_new - y);
                prop_assert_eq!(liaison_invariants(&moved), liaison_invariants(&model));
                let (back, h2) = bilink(&moved, y).unwrap();
                prop_assert_eq!(back, model.clone());
                prop_assert_eq!(h2, -h);
            }
        }

        #[test]
        fn minimal_iff_no_smaller_curve_through_z(model in any_model()) {
            if model.triple().z() >= 1 {
                let y = model.triple().y();
                let expect = h0_iz(model.profile(), y - 1) == 0;
                prop_assert_eq!(is_minimal(&model).unwrap(), expect);
                if y == 1 {
                    prop_assert!(is_minimal(&model).unwrap());
                }
            }
        }
    }
}
