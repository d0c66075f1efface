use dplane_core::catalog::{
    by_name, conic_fiber, extract, extract_triple, family_fiber, family_members, limit_ideal, limit_presentation,
};
use dplane_core::cohomology::h0_ic;
use dplane_core::polyoracle::{
    default_guard, graded_piece_dim, hf_quotient, GradedIdeal, Poly, PrimeField, Quotient, Rational,
};
use dplane_core::profiles::{CurveModel, ProfileKind};
use dplane_core::triples::curve_class;
use dplane_core::{Error, Triple};
use num_rational::BigRational;

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn saturated_dims(ideal: &GradedIdeal, top: u32) -> Vec<usize> {
    let mut q = Quotient::<Rational>::new(ideal);
    q.saturate(top, default_guard(ideal)).unwrap().dims
}

fn formula_dims(t: Triple, top: u32) -> Vec<usize> {
    let m = CurveModel::with_kind(t, ProfileKind::Collinear).unwrap();
    (0..=top as i64).map(|n| h0_ic(&m, n) as usize).collect()
}

#[test]
fn family_fibers_match_section_formula() {
    for (r, p) in [(0, 2), (1, 2), (2, 3)] {
        for t in [rat(1, 1), rat(2, 1), rat(-1, 1), rat(3, 2)] {
            let ideal = family_fiber(r, p, &t).unwrap();
            let expect = Triple::new(r, 2, p).unwrap();
            assert_eq!(saturated_dims(&ideal, 8), formula_dims(expect, 8), "r={r} p={p} t={t}");
        }
        let special = family_fiber(r, p, &rat(0, 1)).unwrap();
        let target = Triple::new(r + p - 2, 1, p + 1).unwrap();
        assert_eq!(saturated_dims(&special, 8), formula_dims(target, 8), "limit r={r} p={p}");
    }
}

#[test]
fn hilbert_polynomial_is_flat_in_t() {
    for (r, p) in [(0, 2), (1, 3)] {
        let window = 9..=12;
        let classes: Vec<_> = [0, 1, 2, -3]
            .iter()
            .map(|&a| {
                let ideal = family_fiber(r, p, &rat(a, 1)).unwrap();
                dplane_core::polyoracle::hp_fit(&ideal, window.clone()).unwrap()
            })
            .collect();
        assert!(classes.windows(2).all(|w| w[0] == w[1]), "{classes:?}");
        assert_eq!(classes[0], curve_class(&Triple::new(r, 2, p).unwrap()));
    }
}

#[test]
fn extraction_over_the_family() {
    for (r, p) in [(0, 2), (1, 2), (0, 3), (2, 2)] {
        for a in [1, 5, -2] {
            let ideal = family_fiber(r, p, &rat(a, 1)).unwrap();
            assert_eq!(extract_triple(&ideal, 10).unwrap(), Triple::new(r, 2, p).unwrap());
        }
        let limit = limit_ideal(r, p).unwrap();
        assert_eq!(extract_triple(&limit, 10).unwrap(), Triple::new(r + p - 2, 1, p + 1).unwrap());
    }
}

#[test]
fn saturation_contains_ideal() {
    for ideal in [limit_presentation(1, 2).unwrap(), family_fiber(1, 2, &rat(1, 1)).unwrap()] {
        let sat = saturated_dims(&ideal, 7);
        for n in 0..=7 {
            assert!(sat[n as usize] >= graded_piece_dim(&ideal, n), "degree {n}");
        }
    }
}

#[test]
fn presentation_saturates_to_limit() {
    let (r, p) = (1, 2);
    let j = limit_presentation(r, p).unwrap();
    let i = limit_ideal(r, p).unwrap();
    assert_eq!(saturated_dims(&j, 8), saturated_dims(&i, 8));
    assert!(hf_quotient(&j, 2) > hf_quotient(&i, 2));
}

#[test]
fn family_members_lie_in_fibre() {
    for a in [1, 4] {
        let t = rat(a, 1);
        let ideal = family_fiber(1, 2, &t).unwrap();
        for f in family_members(1, 2, &t).unwrap() {
            assert!(dplane_core::polyoracle::member(&f, &ideal), "{f}");
        }
    }
}

#[test]
fn conic_family() {
    let line = extract_triple(&conic_fiber(&rat(1, 1)), 8).unwrap();
    let conic = extract_triple(&conic_fiber(&rat(0, 1)), 8).unwrap();
    assert_eq!(line, Triple::new(0, 1, 1).unwrap());
    assert_eq!(conic, Triple::new(0, 0, 2).unwrap());
    assert_eq!(saturated_dims(&conic_fiber(&rat(2, 3)), 6), formula_dims(line, 6));
}

#[test]
fn prime_mode_agrees() {
    for name in ["extremal-like:2,3", "limit:1,3", "family:0,2,7/3"] {
        let entry = by_name(name).unwrap();
        let fit = entry.fit_degree();
        let exact = extract(&mut Quotient::<Rational>::new(&entry.ideal), fit).unwrap();
        let prime = extract(&mut Quotient::<PrimeField>::new(&entry.ideal), fit).unwrap();
        assert_eq!(exact.triple, entry.expected, "{name}");
        assert_eq!(exact.triple, prime.triple, "{name}");
    }
}

#[test]
fn twisted_cubic_is_rejected() {
    let cubic = GradedIdeal::parse_list(&["x*z - y^2", "x*w - y*z", "y*w - z^2"]).unwrap();
    let err = extract_triple(&cubic, 8).unwrap_err();
    assert!(matches!(err, Error::NotInDoublePlane(_)), "{err}");
}

#[test]
fn text_round_trip_preserves_extraction() {
    let entry = by_name("extremal-like:1,3").unwrap();
    let text = entry.ideal.to_string();
    let parsed: GradedIdeal = text.parse().unwrap();
    assert_eq!(parsed, entry.ideal);
    let p: Poly = Poly::parse("x^2").unwrap();
    assert!(parsed.generators().contains(&p));
    assert_eq!(extract_triple(&parsed, entry.fit_degree()).unwrap(), entry.expected);
}
