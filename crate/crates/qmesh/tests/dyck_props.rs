use proptest::prelude::*;

use qmesh::dyck::{self, DyckPath, Step};
use qmesh::perm;

/// Reads the bits as "go up when allowed", then closes the path.
fn path(max_semilength: usize) -> impl Strategy<Value = DyckPath> {
    (0..=max_semilength).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), 2 * n).prop_map(move |bits| {
            let (mut ups, mut height) = (0, 0);
            let mut steps = Vec::with_capacity(2 * n);
            for up in bits {
                if ups < n && (up || height == 0) {
                    steps.push(Step::D);
                    ups += 1;
                    height += 1;
                } else {
                    steps.push(Step::R);
                    height -= 1;
                }
            }
            DyckPath::new(steps).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn text_round_trips(p in path(20)) {
        let parsed: DyckPath = p.to_string().parse().unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn inverse_maps_land_in_their_classes(p in path(14)) {
        let sigma = dyck::phi_inv(&p);
        prop_assert!(sigma.avoids(&perm::p132()));
        prop_assert_eq!(dyck::phi(&sigma).unwrap(), p.clone());
        let tau = dyck::psi_inv(&p);
        prop_assert!(tau.avoids(&perm::p123()));
        prop_assert_eq!(dyck::psi(&tau).unwrap(), p.clone());
        prop_assert_eq!(sigma.len(), p.semilength());
        prop_assert_eq!(tau.len(), p.semilength());
    }

    #[test]
    fn lift_adds_one_level(p in path(14)) {
        let lifted = p.lift();
        prop_assert_eq!(lifted.semilength(), p.semilength() + 1);
        let stats = lifted.stats();
        prop_assert_eq!(stats.ret, 1);
        prop_assert_eq!(stats.hills, usize::from(p.semilength() == 0));
        prop_assert_eq!(stats.peaks.len(), p.stats().peaks.len().max(1));
    }

    #[test]
    fn first_return_splits(p in path(14)) {
        prop_assume!(p.semilength() > 0);
        let split = p.first_return_decompose().unwrap();
        prop_assert_eq!(split.column, split.inner.semilength() + 1);
        prop_assert_eq!(split.column, p.stats().returns[0]);
        let rebuilt = format!("{}{}", split.inner.lift(), split.rest);
        prop_assert_eq!(rebuilt, p.to_string());
    }

    #[test]
    fn peaks_are_left_to_right_minima(p in path(14)) {
        let peaks = p.stats().peaks.len();
        prop_assert_eq!(dyck::phi_inv(&p).left_to_right_minima().len(), peaks);
        prop_assert_eq!(dyck::psi_inv(&p).left_to_right_minima().len(), peaks);
    }
}

#[test]
fn enumeration_is_exhaustive_and_distinct() {
    let counts: Vec<usize> = (0..=8).map(|n| DyckPath::all(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    let mut seven: Vec<String> = DyckPath::all(7).iter().map(ToString::to_string).collect();
    seven.sort();
    seven.dedup();
    assert_eq!(seven.len(), 429);
}

#[test]
fn rejects_bad_paths() {
    for bad in ["R", "DDR", "DRR", "DXR"] {
        assert!(bad.parse::<DyckPath>().is_err(), "{bad}");
    }
    assert!(DyckPath::empty().first_return_decompose().is_err());
    assert!(dyck::phi(&"132".parse().unwrap()).is_err());
    assert!(dyck::psi(&"123".parse().unwrap()).is_err());
}

#[test]
fn shapes() {
    assert_eq!(DyckPath::sawtooth(3).to_string(), "DRDRDR");
    assert_eq!(DyckPath::pyramid(3).to_string(), "DDDRRR");
    assert_eq!(DyckPath::sawtooth(4).stats().hills, 4);
}

#[test]
fn lifting_a_123_avoider() {
    let sigma = "869743251".parse().unwrap();
    let lifted = dyck::lift_123(&sigma).unwrap();
    assert_eq!(lifted.to_string(), "8,6,10,9,4,3,2,7,1,5".parse::<qmesh::Permutation>().unwrap().to_string());
}
