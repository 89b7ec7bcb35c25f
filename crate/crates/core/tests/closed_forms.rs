use num_bigint::BigInt;
use tensorwalk_core::reference::{baxter_by_recurrence, S2_ROW, T3_ROW};
use tensorwalk_core::series::{closed_form_series, verify_closed_form, ClosedForm};

#[test]
fn every_form_matches_reference_to_order_20() {
    for form in ClosedForm::ALL {
        let report = verify_closed_form(form, 20).unwrap();
        assert!(report.is_success(), "{form}: {report:?}");
    }
}

#[test]
fn leading_coefficients_are_the_printed_rows() {
    for form in [ClosedForm::T3HypergeometricSimple, ClosedForm::T3Weierstrass] {
        let (gf, _) = closed_form_series(form, 9).unwrap();
        let terms = gf.to_integers().unwrap();
        assert_eq!(terms, T3_ROW.iter().map(|&t| BigInt::from(t)).collect::<Vec<_>>());
    }
    let (gf, _) = closed_form_series(ClosedForm::BaxterGf, 9).unwrap();
    let terms = gf.to_integers().unwrap();
    assert_eq!(terms[0], BigInt::from(0));
    assert_eq!(terms[1..], S2_ROW.iter().map(|&t| BigInt::from(t)).collect::<Vec<_>>()[..]);
}

#[test]
fn short_orders_are_rejected() {
    assert!(verify_closed_form(ClosedForm::BaxterGf, 9).is_err());
    assert_eq!(baxter_by_recurrence(3), [0, 1, 2, 6].map(BigInt::from).to_vec());
}
