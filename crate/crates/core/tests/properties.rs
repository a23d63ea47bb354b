//! Randomized invariants over small exact instances.

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use opcheck::field::{FieldSpec, Scalar};
use opcheck::linalg::{random_invertible, random_map, solve_affine, LinearMap};
use opcheck::operad::{build_uassoc, end_operad, TruncatedOperad};
use opcheck::presentation::{check_relations, eval_tree, tree_composite, Combo, Mode, Presentation, Relation, StructureAssignment, Tree};
use opcheck::sanity::{check_coalgebra, check_morphism, uassoc_coalgebra, CoalgebraOverOperad};

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(3).unwrap()),
        Just(FieldSpec::prime(5).unwrap()),
    ]
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Low-rank maps are rare under uniform entries; mix in products through a
/// narrow middle dimension.
fn map(f: FieldSpec, cod: usize, dom: usize, r: &mut ChaCha8Rng, narrow: bool) -> LinearMap {
    if narrow {
        random_map(f, cod, 1, r).compose(&random_map(f, 1, dom, r)).unwrap()
    } else {
        random_map(f, cod, dom, r)
    }
}

/// A binary tree over `mu` with leaves labelled by `labels` in order.
fn shape(labels: &[usize], cuts: &mut impl Iterator<Item = usize>) -> Tree {
    if labels.len() == 1 {
        return Tree::leaf(labels[0]);
    }
    let k = 1 + cuts.next().unwrap_or(0) % (labels.len() - 1);
    Tree::node("mu", vec![shape(&labels[..k], cuts), shape(&labels[k..], cuts)])
}

fn tree() -> impl Strategy<Value = Tree> {
    (2usize..=4)
        .prop_flat_map(|n| (Just(n), Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(0usize..8, 4)))
        .prop_map(|(_, labels, cuts)| shape(&labels, &mut cuts.into_iter()))
}

/// Evaluates `t` on one basis tensor directly: leaf `k` reads input `k`.
fn eval_on_basis(t: &Tree, mu: &LinearMap, inputs: &[usize], d: usize) -> Vec<Scalar> {
    let f = mu.field();
    match t {
        Tree::Leaf(k) => (0..d).map(|i| if i == inputs[k - 1] { f.one() } else { f.zero() }).collect(),
        Tree::Node { children, .. } => {
            let a = eval_on_basis(&children[0], mu, inputs, d);
            let b = eval_on_basis(&children[1], mu, inputs, d);
            let ab: Vec<Scalar> = a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect();
            mu.apply(&ab).unwrap()
        }
    }
}

fn algebra_assignment(mu: &LinearMap) -> StructureAssignment {
    let d = mu.cod();
    let mut s = StructureAssignment::new(mu.field(), d, Mode::Algebra);
    s.assign("mu", 2, mu.clone()).unwrap();
    s
}

/// `𝕂^d` with the coordinatewise product, transported along `t`.
fn split_commutative(f: FieldSpec, t: &LinearMap) -> LinearMap {
    let d = t.cod();
    let mut mu = LinearMap::zero(f, d, d * d);
    for i in 0..d {
        mu.set(i, i * d + i, f.one());
    }
    let t_inv = t.inverse().unwrap();
    t.compose(&mu).unwrap().compose(&t_inv.tensor(&t_inv).unwrap()).unwrap()
}

fn grouplike(p: &TruncatedOperad, d: usize) -> CoalgebraOverOperad {
    let f = p.field();
    let mut delta = LinearMap::zero(f, d * d, d);
    for i in 0..d {
        delta.set(i * d + i, i, f.one());
    }
    let eps = LinearMap::row_vector(f, vec![f.one(); d]).unwrap();
    uassoc_coalgebra(p, &delta, Some(&eps)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_additive_and_multiplicative(f in field(), seed: u64, dims in (1usize..4, 1usize..4, 1usize..4, 1usize..4), narrow: (bool, bool)) {
        let r = &mut rng(seed);
        let a = map(f, dims.0, dims.1, r, narrow.0);
        let b = map(f, dims.2, dims.3, r, narrow.1);
        prop_assert_eq!(a.direct_sum(&b).unwrap().rank(), a.rank() + b.rank());
        prop_assert_eq!(a.tensor(&b).unwrap().rank(), a.rank() * b.rank());
        prop_assert_eq!(a.rank() + a.kernel().len(), a.dom());
        for v in a.kernel() {
            prop_assert!(a.apply(&v).unwrap().iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }

    #[test]
    fn tensor_interchange(f in field(), seed: u64, dims in prop::array::uniform6(1usize..4)) {
        let r = &mut rng(seed);
        let [a0, a1, a2, b0, b1, b2] = dims;
        let (a, c) = (random_map(f, a0, a1, r), random_map(f, a1, a2, r));
        let (b, e) = (random_map(f, b0, b1, r), random_map(f, b1, b2, r));
        let lhs = a.tensor(&b).unwrap().compose(&c.tensor(&e).unwrap()).unwrap();
        let rhs = a.compose(&c).unwrap().tensor(&b.compose(&e).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_affine_returns_the_full_solution_set(f in field(), seed: u64, cod in 1usize..5, dom in 1usize..5, narrow: bool, consistent: bool) {
        let r = &mut rng(seed);
        let a = map(f, cod, dom, r, narrow);
        let b = if consistent {
            a.apply(&random_map(f, dom, 1, r).column(0)).unwrap()
        } else {
            random_map(f, cod, 1, r).column(0)
        };
        match solve_affine(&a, &b) {
            Some((x, kernel)) => {
                prop_assert_eq!(a.apply(&x).unwrap(), b.clone());
                prop_assert_eq!(kernel.len(), dom - a.rank());
                for v in &kernel {
                    prop_assert!(a.apply(v).unwrap().iter().all(Scalar::is_zero));
                }
            }
            None => {
                prop_assert!(!consistent);
                let augmented = LinearMap::from_columns(f, cod, &[a.columns(), vec![b]].concat()).unwrap();
                prop_assert_eq!(augmented.rank(), a.rank() + 1);
            }
        }
    }

    #[test]
    fn tree_evaluation_matches_direct_wiring(f in field(), seed: u64, t in tree()) {
        let d = 2;
        let mu = random_map(f, d, d * d, &mut rng(seed));
        let n = t.validate().unwrap();
        let m = eval_tree(&t, &algebra_assignment(&mu)).unwrap();
        for idx in 0..d.pow(n as u32) {
            let inputs: Vec<usize> = (0..n).map(|k| idx / d.pow((n - 1 - k) as u32) % d).collect();
            prop_assert_eq!(m.column(idx), eval_on_basis(&t, &mu, &inputs, d));
        }
    }

    #[test]
    fn tree_composite_in_end_matches_evaluation(f in field(), seed: u64, t in tree()) {
        let d = 2;
        let mu = random_map(f, d, d * d, &mut rng(seed));
        let end = end_operad(d, 4, f).unwrap();
        let gens = BTreeMap::from([("mu".to_string(), mu.entries().to_vec())]);
        let composite = tree_composite(&end, &t, &gens).unwrap();
        prop_assert_eq!(composite, eval_tree(&t, &algebra_assignment(&mu)).unwrap().entries().to_vec());
    }

    #[test]
    fn json_round_trips(f in field(), seed: u64, d in 1usize..4) {
        let r = &mut rng(seed);
        let m = random_map(f, d, d * d, r);
        let back: LinearMap = serde_json::from_value(serde_json::to_value(&m).unwrap()).unwrap();
        prop_assert_eq!(&back, &m);

        let p = build_uassoc(f, 3).unwrap();
        let back = TruncatedOperad::from_json(p.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), p.to_json());

        let c = grouplike(&p, d).conjugate(&random_invertible(f, d, r)).unwrap();
        let back = CoalgebraOverOperad::from_json(c.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), c.to_json());

        let pres = Presentation::uassoc(f);
        let back = Presentation::from_json(pres.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), pres.to_json());
    }

    #[test]
    fn conjugation_preserves_coalgebras(f in field(), seed: u64, d in 1usize..4) {
        let p = build_uassoc(f, 3).unwrap();
        let v = grouplike(&p, d);
        let t = random_invertible(f, d, &mut rng(seed));
        let w = v.conjugate(&t).unwrap();
        prop_assert!(check_coalgebra(&w).unwrap().passed());
        prop_assert!(check_morphism(&t, &v, &w).unwrap().passed());
        prop_assert!(check_morphism(&t.inverse().unwrap(), &w, &v).unwrap().passed());
    }

    #[test]
    fn combinations_of_satisfied_relations_hold(f in field(), seed: u64, d in 1usize..4, a in -3i64..=3, b in -3i64..=3) {
        let r = &mut rng(seed);
        let mu = split_commutative(f, &random_invertible(f, d, r));
        let assoc = Relation::parse(f, "(mu (mu x1 x2) x3) = (mu x1 (mu x2 x3))").unwrap();
        let comm = Relation::parse(f, "(mu (mu x1 x2) x3) = (mu x3 (mu x1 x2))").unwrap();
        let scaled = |c: &Combo, s: i64| Combo(c.0.iter().map(|(k, t)| (&f.from_i64(s) * k, t.clone())).collect());
        let sum = |x: &Combo, y: &Combo| Combo([x.0.clone(), y.0.clone()].concat());
        let combined = Relation::new(
            sum(&scaled(&assoc.lhs, a), &scaled(&comm.lhs, b)),
            sum(&scaled(&assoc.rhs, a), &scaled(&comm.rhs, b)),
        )
        .unwrap();
        let mut pres = Presentation::from_text(f, &[("mu", 2)], &[]).unwrap();
        pres.relations = vec![assoc, comm, combined];
        let report = check_relations(&pres, &algebra_assignment(&mu)).unwrap();
        prop_assert!(report.passed(), "{:?}", report.failures);
        prop_assert_eq!(report.checked, 3);
    }
}
