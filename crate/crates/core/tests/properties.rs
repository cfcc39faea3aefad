use proptest::prelude::*;

use lrgen_core::tableau::parse;
use lrgen_core::{
    end_dim, fill, generic_extension, hom_dim, hom_leq, star_ext, star_lr1, AnyTableau, ExtTableau, H1Object,
    LrTableau, Partition, Picket,
};

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_multiset)
}

fn tableau() -> impl Strategy<Value = LrTableau> {
    (partition(6, 6), prop::collection::vec(any::<bool>(), 6)).prop_filter_map(
        "gamma not a partition",
        |(beta, bits)| {
            let gamma: Vec<u32> = beta
                .parts()
                .iter()
                .zip(&bits)
                .map(|(&b, &e)| b - u32::from(e))
                .collect();
            let gamma = Partition::new(gamma).ok()?;
            LrTableau::new(gamma, beta).ok()
        },
    )
}

fn ext_tableau() -> impl Strategy<Value = ExtTableau> {
    (tableau(), 0u64..4).prop_map(|(t, n)| ExtTableau::new(t, n))
}

fn object() -> impl Strategy<Value = H1Object> {
    (prop::collection::vec((0u8..2, 1u32..5), 0..4), 0usize..3).prop_map(|(ps, free)| {
        let pickets = ps.into_iter().map(|(e, m)| Picket::new(e, m).unwrap()).collect();
        H1Object::from_pickets(pickets).direct_sum(&H1Object::free(free))
    })
}

fn s1_object() -> impl Strategy<Value = H1Object> {
    object().prop_map(|o| o.s1_part())
}

proptest! {
    #[test]
    fn dual_is_an_involution(p in partition(8, 8)) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().weight(), p.weight());
        prop_assert_eq!(p.dual().len() as u32, p.largest());
    }

    #[test]
    fn dual_turns_union_into_sum(p in partition(8, 6), q in partition(8, 6)) {
        prop_assert_eq!(p.union(&q).dual(), p.dual().sum(&q.dual()));
        prop_assert_eq!(p.sum(&q).weight(), p.weight() + q.weight());
        prop_assert_eq!(p.union(&q).weight(), p.weight() + q.weight());
    }

    #[test]
    fn containment_is_a_partial_order(p in partition(5, 5), q in partition(5, 5), r in partition(5, 5)) {
        prop_assert!(p.contains(&p));
        prop_assert!(p.sum(&q).contains(&p));
        if p.contains(&q) && q.contains(&p) {
            prop_assert_eq!(&p, &q);
        }
        if p.contains(&q) && q.contains(&r) {
            prop_assert!(p.contains(&r));
        }
    }

    #[test]
    fn partition_text_round_trip(p in partition(20, 8)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn tableau_validity_is_exactly_the_strip_condition(beta in partition(5, 5), gamma in partition(5, 5)) {
        let strip = gamma.len() <= beta.len()
            && (0..beta.len()).all(|i| gamma.part(i) <= beta.part(i) && beta.part(i) <= gamma.part(i) + 1);
        prop_assert_eq!(LrTableau::new(gamma, beta).is_ok(), strip);
    }

    #[test]
    fn entry_and_empty_rows_partition_the_rows(t in tableau()) {
        let mut rows = t.entry_rows();
        rows.extend(t.empty_rows());
        rows.sort_unstable();
        prop_assert_eq!(rows, (1..=t.rows()).collect::<Vec<_>>());
        prop_assert_eq!(t.entry_count(), t.entry_rows().len());
        prop_assert_eq!(t.entry_count() as u64, t.beta().weight() - t.gamma().weight());
    }

    #[test]
    fn tableau_text_round_trip(t in tableau(), e in ext_tableau()) {
        prop_assert_eq!(parse(&t.to_string()).unwrap(), AnyTableau::Plain(t));
        prop_assert_eq!(parse(&e.to_string()).unwrap(), AnyTableau::Ext(e));
    }

    #[test]
    fn star_conserves_boxes_and_entries(x in tableau(), y in tableau()) {
        let z = star_lr1(&x, &y);
        prop_assert_eq!(z.beta().weight(), x.beta().weight() + y.beta().weight());
        prop_assert_eq!(z.gamma().weight(), x.gamma().weight() + y.gamma().weight());
        prop_assert_eq!(z.entry_count(), x.entry_count() + y.entry_count());
        prop_assert!(LrTableau::new(z.gamma().clone(), z.beta().clone()).is_ok());
    }

    #[test]
    fn empty_tableau_is_the_identity(x in tableau()) {
        prop_assert_eq!(star_lr1(&x, &LrTableau::empty()), x.clone());
        prop_assert_eq!(star_lr1(&LrTableau::empty(), &x), x);
    }

    #[test]
    fn star_is_associative(a in tableau(), b in tableau(), c in tableau()) {
        prop_assert_eq!(star_lr1(&star_lr1(&a, &b), &c), star_lr1(&a, &star_lr1(&b, &c)));
    }

    #[test]
    fn fill_spends_its_budget_on_empty_rows(x in tableau(), n in 0u64..10) {
        let (z, left) = fill(&x, n);
        prop_assert_eq!(z.beta(), x.beta());
        prop_assert!(LrTableau::new(z.gamma().clone(), z.beta().clone()).is_ok());
        prop_assert_eq!((z.entry_count() - x.entry_count()) as u64, n - left);
        if left > 0 {
            prop_assert!(z.empty_rows().is_empty());
        }
        let (again, zero) = fill(&x, n - left);
        prop_assert_eq!(again, z);
        prop_assert_eq!(zero, 0);
    }

    #[test]
    fn picket_tableau_bijection(e in ext_tableau(), o in object()) {
        prop_assert_eq!(H1Object::from_ext_tableau(&e).gamma_hat(), e);
        prop_assert_eq!(H1Object::from_ext_tableau(&o.gamma_hat()), o.clone());
        prop_assert_eq!(o.to_string().parse::<H1Object>().unwrap(), o);
    }

    #[test]
    fn generic_extension_adds_invariants(n in object(), m in object()) {
        let u = generic_extension(&n, &m);
        prop_assert_eq!(u.a(), n.a() + m.a());
        prop_assert_eq!(u.b(), n.b() + m.b());
    }

    #[test]
    fn free_summands_of_the_sub_object_split_off(n in object(), m in object(), k in 0usize..3) {
        let free = H1Object::free(k);
        prop_assert_eq!(
            generic_extension(&n, &m.direct_sum(&free)),
            generic_extension(&n, &m).direct_sum(&free)
        );
    }

    #[test]
    fn generic_extension_through_the_s1_part(n in object(), m in s1_object(), k in 0u64..3) {
        let u = generic_extension(&n, &m.direct_sum(&H1Object::free(k as usize)));
        let z = star_ext(&ExtTableau::new(m.gamma_hat().tab, 0), &n.gamma_hat());
        prop_assert_eq!(u.gamma_hat(), ExtTableau::new(z.tab, z.free + k));
    }

    #[test]
    fn hom_dim_is_additive(m in object(), n in object(), u in object()) {
        prop_assert_eq!(hom_dim(&m.direct_sum(&n), &u), hom_dim(&m, &u) + hom_dim(&n, &u));
        prop_assert_eq!(hom_dim(&u, &m.direct_sum(&n)), hom_dim(&u, &m) + hom_dim(&u, &n));
        prop_assert_eq!(end_dim(&m), hom_dim(&m, &m));
    }

    #[test]
    fn free_picket_maps_only_to_free_pickets(m in s1_object()) {
        prop_assert_eq!(hom_dim(&H1Object::free(1), &m), 0);
    }
}

/// All objects with `a <= max_a`, `b <= max_b`, grouped by `(a, b)`.
fn classes(max_a: usize, max_b: u32) -> Vec<Vec<H1Object>> {
    let mut out = Vec::new();
    for b in 0..=max_b {
        for a in 0..=max_a {
            let objs = H1Object::all_with_invariants(a, b);
            if !objs.is_empty() {
                out.push(objs);
            }
        }
    }
    out
}

#[test]
fn hom_order_is_a_partial_order_on_small_classes() {
    for class in classes(3, 5) {
        for u in &class {
            assert!(hom_leq(u, u).unwrap(), "{u} not <= itself");
            for v in &class {
                let uv = hom_leq(u, v).unwrap();
                if uv && hom_leq(v, u).unwrap() {
                    assert_eq!(u, v, "antisymmetry");
                }
                if !uv {
                    continue;
                }
                for w in &class {
                    if hom_leq(v, w).unwrap() {
                        assert!(hom_leq(u, w).unwrap(), "{u} <= {v} <= {w}");
                    }
                }
            }
        }
    }
}

#[test]
fn hom_order_keeps_free_summands() {
    let free = H1Object::free(1);
    for class in classes(3, 5) {
        for u in &class {
            for v in &class {
                if u.free_count() > 0 && hom_leq(u, v).unwrap() {
                    assert!(v.has_summand(&free), "{u} <= {v}");
                }
            }
        }
    }
}

#[test]
fn hom_order_rejects_mismatched_invariants() {
    let u: H1Object = "P1^2".parse().unwrap();
    let v: H1Object = "P0^2".parse().unwrap();
    assert!(hom_leq(&u, &v).is_err());
    assert!(hom_leq(&u, &"P0^1+P1^1".parse().unwrap()).is_ok());
}

#[test]
fn smaller_gamma_keeps_entry_pickets() {
    for b in 0..=6 {
        let tabs = LrTableau::all_of_weight(b);
        for tm in &tabs {
            for tn in &tabs {
                if tn.beta() != tm.beta() || !tm.gamma().contains(tn.gamma()) {
                    continue;
                }
                let m = H1Object::from_ext_tableau(&tm.clone().into());
                let n = H1Object::from_ext_tableau(&tn.clone().into());
                for &p in m.pickets() {
                    if p.eps() == 1 {
                        let single = H1Object::from_pickets(vec![p]);
                        assert!(n.has_summand(&single), "{p} in {m} but not in {n}");
                    }
                }
            }
        }
    }
}
