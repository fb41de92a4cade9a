//! Randomized checks, mostly at sizes where the exhaustive suites give up.

use normcat::category::{
    cone_product, factorization_violations, FiniteCategory, NormalCategory, TieBreak,
};
use normcat::iso::{carrier_from_eta, eta_from_carrier};
use normcat::partition::SetPartition;
use normcat::partition_category::{
    compose_morphisms, normal_factorize, PartitionCategory, PartitionMorphism, PartitionObject,
};
use normcat::powerset::{h_object, HFunctor, PowersetCategory};
use normcat::right_ideal::{compose_lambda, LambdaMorphism, RightIdealCategory, RightIdealObject};
use normcat::subset::Subset;
use normcat::transformation::{min_idempotent, Transformation};
use proptest::prelude::*;

fn map(n: usize) -> impl Strategy<Value = Transformation> {
    prop::collection::vec(0..n as u8, n).prop_map(|v| Transformation::new(v).unwrap())
}

fn singular(n: usize) -> impl Strategy<Value = Transformation> {
    map(n).prop_filter("singular", |t| t.is_singular())
}

fn partition(n: usize) -> impl Strategy<Value = SetPartition> {
    prop::collection::vec(0..n as u8, n).prop_map(|v| SetPartition::from_labels(&v).unwrap())
}

fn object(n: usize) -> impl Strategy<Value = PartitionObject> {
    partition(n)
        .prop_filter("non-identity", |p| !p.is_identity())
        .prop_map(|p| PartitionObject::new(p).unwrap())
}

/// A block map between random objects: target blocks go to source blocks.
fn block_map(n: usize) -> impl Strategy<Value = PartitionMorphism> {
    (object(n), object(n)).prop_flat_map(|(a, b)| {
        let (k, m) = (a.num_blocks(), b.num_blocks());
        prop::collection::vec(0..k as u8, m)
            .prop_map(move |eta| PartitionMorphism::new(a.clone(), b.clone(), eta).unwrap())
    })
}

/// Three composable block maps.
fn chain(n: usize) -> impl Strategy<Value = [PartitionMorphism; 3]> {
    (object(n), object(n), object(n), object(n)).prop_flat_map(|(a, b, c, d)| {
        let eta = |src: &PartitionObject, dst: &PartitionObject| {
            prop::collection::vec(0..src.num_blocks() as u8, dst.num_blocks())
        };
        (eta(&a, &b), eta(&b, &c), eta(&c, &d)).prop_map(move |(f, g, h)| {
            [
                PartitionMorphism::new(a.clone(), b.clone(), f).unwrap(),
                PartitionMorphism::new(b.clone(), c.clone(), g).unwrap(),
                PartitionMorphism::new(c.clone(), d.clone(), h).unwrap(),
            ]
        })
    })
}

fn lambda(n: usize) -> impl Strategy<Value = LambdaMorphism> {
    (object(n), object(n)).prop_flat_map(move |(a, b)| {
        let e = min_idempotent(a.partition());
        let f = min_idempotent(b.partition());
        (map(n), Just((e, f))).prop_map(move |(s, (e, f))| {
            // f s e lies in f S e
            let v = &(&f * &s) * &e;
            LambdaMorphism::from_parts(&e, &v, &f).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn labels_become_canonical(labels in prop::collection::vec(0u8..6, 1..8)) {
        let p = SetPartition::from_labels(&labels).unwrap();
        let mut next = 0;
        for &l in p.labels() {
            prop_assert!(l <= next);
            if l == next {
                next += 1;
            }
        }
        for x in 0..labels.len() {
            for y in 0..labels.len() {
                prop_assert_eq!(p.related(x as u8, y as u8), labels[x] == labels[y]);
            }
        }
        prop_assert_eq!(p.canonicalize(), p);
    }

    #[test]
    fn maps_compose_associatively(s in map(6), t in map(6), u in map(6)) {
        prop_assert_eq!(&(&s * &t) * &u, &s * &(&t * &u));
        let st = &s * &t;
        prop_assert!(s.kernel().refines(&st.kernel()).unwrap());
        prop_assert!(st.image_points().iter().all(|y| t.image_points().contains(y)));
    }

    #[test]
    fn block_maps_compose_associatively(fs in chain(6)) {
        let [f, g, h] = fs;
        let left = compose_morphisms(&compose_morphisms(&f, &g).unwrap(), &h).unwrap();
        let right = compose_morphisms(&f, &compose_morphisms(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn block_map_factorization_at_six(f in block_map(6)) {
        let pi = PartitionCategory::new(6).unwrap();
        for tie in [TieBreak::Least, TieBreak::Greatest] {
            let fact = normal_factorize(&f, tie).factors;
            prop_assert!(factorization_violations(&pi, &f, &fact).is_empty());
        }
        prop_assert_eq!(
            normal_factorize(&f, TieBreak::Least).factors.epimorphic_part,
            normal_factorize(&f, TieBreak::Greatest).factors.epimorphic_part
        );
    }

    #[test]
    fn lambda_factorization_at_five(m in lambda(5)) {
        let ri = RightIdealCategory::new(5).unwrap();
        let least = ri.normal_factorization_with(&m, TieBreak::Least).unwrap();
        let greatest = ri.normal_factorization_with(&m, TieBreak::Greatest).unwrap();
        prop_assert!(factorization_violations(&ri, &m, &least).is_empty());
        prop_assert_eq!(&least.epimorphic_part, &greatest.epimorphic_part);
        prop_assert_eq!(&least.inclusion, &greatest.inclusion);
        prop_assert_eq!(compose_lambda(&least.epimorphic_part, &least.inclusion).unwrap(), m);
    }

    #[test]
    fn carrier_and_block_map_are_inverse(m in lambda(5)) {
        let (e, f) = (m.source().representative(), m.target().representative());
        let eta = eta_from_carrier(e, m.carrier(), f).unwrap();
        prop_assert_eq!(&carrier_from_eta(&eta, e, f).unwrap(), m.carrier());
    }

    #[test]
    fn principal_cones_multiply_like_maps(a in singular(5), b in singular(5)) {
        let ps = PowersetCategory::new(5).unwrap();
        let product = cone_product(&ps, &ps.principal_cone(&a).unwrap(), &ps.principal_cone(&b).unwrap()).unwrap();
        prop_assert_eq!(product, ps.principal_cone(&(&a * &b)).unwrap());
    }

    #[test]
    fn h_sets_match_their_definition(p in partition(5), members in prop::collection::btree_set(0u8..5, 1..5)) {
        prop_assume!(!p.is_identity());
        let h = HFunctor::new(p.clone()).unwrap();
        let a = Subset::new(5, members).unwrap();
        for x in h_object(&h, &a) {
            prop_assert!(p.refines(&x.kernel()).unwrap());
            prop_assert!(x.images().iter().all(|&y| a.contains(y)));
        }
    }

    #[test]
    fn ideal_order_is_kernel_refinement(a in object(5), b in object(5)) {
        let ri = RightIdealCategory::new(5).unwrap();
        let (ra, rb) = (
            RightIdealObject::new(a.partition().clone()).unwrap(),
            RightIdealObject::new(b.partition().clone()).unwrap(),
        );
        prop_assert_eq!(ri.leq(&ra, &rb), b.partition().refines(a.partition()).unwrap());
    }
}
