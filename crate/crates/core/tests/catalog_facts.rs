//! Every catalog entry against its expectation record.

use lck_lab::catalog::{build, expected_properties};
use lck_lab::classify::{classify4, lattice_verdict, LatticeVerdict};
use lck_lab::cochain::twisted_cohomology_dims;
use lck_lab::hermitian::{check_lck, is_integrable, is_killing, lie_derivative_j, metric_from};
use lck_lab::hermitian::{lee_field, reeb_data};
use lck_lab::{CatalogKey, ClassTag};

#[test]
fn computed_facts_match_expectations() {
    for key in CatalogKey::defaults() {
        let e = build(&key).unwrap();
        let want = expected_properties(&key);
        if let (Some(o), Some(t), Some(j)) = (&e.omega, &e.theta, &e.j) {
            let r = check_lck(&e.algebra, o, t, j.matrix()).unwrap();
            assert!(r.pass(), "{key}");
            assert_eq!(Some(true), want.lck, "{key}");
            assert_eq!(r.vaisman, want.vaisman, "{key}");
        }
        if e.algebra.dim() == 4 {
            let label = classify4(&e.algebra).unwrap();
            assert_eq!(Some(label.tag), want.label, "{key}");
            assert_eq!(Some(lattice_verdict(&label).verdict), want.lattice, "{key}");
        }
    }
}

#[test]
fn inoue_splus_deformed_structures_are_integrable_but_carry_no_listed_form() {
    for q in ["1", "2", "-1/2"] {
        let key: CatalogKey = format!("inoue_splus_Jq({q})").parse().unwrap();
        let e = build(&key).unwrap();
        assert!(
            is_integrable(&e.algebra, e.j.as_ref().unwrap()).unwrap(),
            "{key}"
        );
        assert!(e.omega.is_none());
        assert_eq!(expected_properties(&key).lck, Some(false));
    }
}

#[test]
fn u2_family_is_vaisman_for_every_delta() {
    for (c, d, s) in [
        ("1", "0", "+"),
        ("3", "-2", "+"),
        ("-1/2", "1", "-"),
        ("2", "5/3", "-"),
    ] {
        let key: CatalogKey = format!("u2_Jdelta({c},{d},{s})").parse().unwrap();
        let e = build(&key).unwrap();
        let (o, t, j) = (e.omega.unwrap(), e.theta.unwrap(), e.j.unwrap());
        let r = check_lck(&e.algebra, &o, &t, j.matrix()).unwrap();
        assert!(r.pass(), "{key}");
        assert_eq!(r.vaisman, Some(true), "{key}");
        let label = classify4(&e.algebra).unwrap();
        assert_eq!(label.tag, ClassTag::ReductiveCompact);
    }
}

#[test]
fn reeb_and_lee_fields_are_killing_automorphisms_on_vaisman_entries() {
    for key in [
        "surface(6)",
        "surface(5)",
        "hopf_Jd(1)",
        "elliptic_Jd(1)",
        "u2_Jdelta(2,1,+)",
    ] {
        let e = build(&key.parse().unwrap()).unwrap();
        let (o, t, j) = (e.omega.unwrap(), e.theta.unwrap(), e.j.unwrap());
        let h = metric_from(&o, &j).unwrap();
        let xi = lee_field(&o, &t, &j).unwrap().normalized;
        let eta = reeb_data(&e.algebra, &o, &t, &j).unwrap().eta;
        for u in [&xi, &eta] {
            assert!(is_killing(&e.algebra, &h, u).unwrap(), "{key}");
            assert!(
                lie_derivative_j(&e.algebra, &j, u).unwrap().is_zero(),
                "{key}"
            );
        }
    }
}

#[test]
fn lee_field_of_inoue_type_is_not_killing() {
    let e = build(&"surface(3)".parse().unwrap()).unwrap();
    let (o, t, j) = (e.omega.unwrap(), e.theta.unwrap(), e.j.unwrap());
    let h = metric_from(&o, &j).unwrap();
    let xi = lee_field(&o, &t, &j).unwrap().normalized;
    assert!(!is_killing(&e.algebra, &h, &xi).unwrap());
}

#[test]
fn surfaces_without_potential_have_second_twisted_cohomology() {
    // The Reeb decomposition needs Ω to be d_θ-exact; these classes are not.
    for key in ["surface(3)", "surface(4)", "inoue_s0(2)"] {
        let e = build(&key.parse().unwrap()).unwrap();
        let dims = twisted_cohomology_dims(&e.algebra, e.theta.as_ref().unwrap()).unwrap();
        assert!(dims[2] > 0, "{key}: {dims:?}");
        let (o, t, j) = (e.omega.unwrap(), e.theta.unwrap(), e.j.unwrap());
        assert!(reeb_data(&e.algebra, &o, &t, &j).is_err(), "{key}");
    }
}

#[test]
fn lattice_verdicts_of_the_surface_classes() {
    for k in 1..=6 {
        let key: CatalogKey = format!("surface({k})").parse().unwrap();
        let label = classify4(&build(&key).unwrap().algebra).unwrap();
        let verdict = lattice_verdict(&label);
        assert_ne!(
            verdict.verdict,
            LatticeVerdict::No,
            "{key}: {}",
            verdict.reason
        );
        assert!(!verdict.reason.is_empty());
    }
}
