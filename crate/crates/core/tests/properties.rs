use proptest::prelude::*;
use tableau_corners::serial::Object;
use tableau_corners::{BigPoly, FerrersDiagram, Poly, Shape, Step, WidePoly};

fn word() -> impl Strategy<Value = Vec<Step>> {
    prop::collection::vec(prop_oneof![Just(Step::S), Just(Step::W)], 0..16)
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-20i64..20, 0u32..4, 0u32..4), 0..6).prop_map(|terms| {
        let mut p = Poly::zero();
        for (c, da, db) in terms {
            p.add_term(&c, da, db).unwrap();
        }
        p
    })
}

proptest! {
    #[test]
    fn corners_are_sw_factors(steps in word()) {
        let d = FerrersDiagram::from_steps(steps.clone());
        let expected: Vec<_> = (1..steps.len())
            .filter(|&k| steps[k - 1] == Step::S && steps[k] == Step::W)
            .map(|k| tableau_corners::Cell::new(k as i32, k as i32 + 1))
            .collect();
        let mut got = d.corners();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn transpose_is_an_involution(steps in word()) {
        let d = FerrersDiagram::from_steps(steps);
        prop_assert_eq!(d.transpose().cells().len(), d.cells().len());
        prop_assert_eq!(d.transpose().transpose(), d);
    }

    #[test]
    fn ring_laws(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(p.checked_add(&q).unwrap(), q.checked_add(&p).unwrap());
        prop_assert_eq!(p.checked_mul(&q).unwrap(), q.checked_mul(&p).unwrap());
        let left = p.checked_mul(&q.checked_add(&r).unwrap()).unwrap();
        let right = p.checked_mul(&q).unwrap().checked_add(&p.checked_mul(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(p.checked_sub(&p).unwrap().is_zero());
    }

    #[test]
    fn coefficient_types_agree(p in small_poly(), q in small_poly()) {
        let narrow = p.checked_mul(&q).unwrap();
        let wide: WidePoly = p.convert().unwrap();
        let big: BigPoly = p.convert().unwrap();
        prop_assert_eq!(wide.checked_mul(&q.convert().unwrap()).unwrap(), narrow.convert().unwrap());
        prop_assert_eq!(big.checked_mul(&q.convert().unwrap()).unwrap(), narrow.convert().unwrap());
    }

    #[test]
    fn polynomial_json_round_trips(p in small_poly()) {
        prop_assert_eq!(Poly::from_json(&p.to_json()).unwrap(), p);
    }
}

#[test]
fn golden_files_round_trip() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let object = Object::from_json_str(&text).unwrap();
        assert_eq!(object.to_json_string(), text.trim_end(), "{}", path.display());
    }
}
