use proptest::prelude::*;

use qmonk::ffgeom::{in_schubert, random_flag, FlagPoint, Subspace};
use qmonk::parabolic::{
    bar_length_drop_bound, bar_perm, hat_length_drop_bound, hat_perm, in_descent_class,
    min_coset_rep,
};
use qmonk::qring::{
    gw_divisor, monk_multiply, multiply_divisor, x_operator, Multidegree, QuantumRing, RingElement,
    XPolynomial,
};
use qmonk::{DimSequence, Permutation};

fn perm_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(v).unwrap())
}

fn sized_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (2..=max_n).prop_flat_map(perm_of)
}

fn strict_dims(n: usize) -> impl Strategy<Value = DimSequence> {
    proptest::sample::select(DimSequence::all_strict(n))
}

const PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

proptest! {
    #[test]
    fn inverse_and_dual_lengths(w in sized_perm(7)) {
        let n = w.n();
        prop_assert_eq!(w.length(), w.inverse().length());
        prop_assert_eq!(w.length() + w.dual().length(), n * (n - 1) / 2);
        prop_assert!(w.compose(&w.inverse()).unwrap().is_identity());
    }

    #[test]
    fn monk_terms_are_graded_transpositions(w in sized_perm(6), r_seed in 0usize..100) {
        let n = w.n();
        let r = 1 + r_seed % (n - 1);
        let e = monk_multiply(r, &w).unwrap();
        for (key, c) in e.terms() {
            prop_assert_eq!(c, 1);
            prop_assert_eq!(key.degree(), w.length() + 1);
            let t = w.inverse().compose(&key.perm).unwrap();
            let moved: Vec<usize> = (1..=n).filter(|&i| t.get(i) != i).collect();
            prop_assert_eq!(moved.len(), 2);
            prop_assert!(moved[0] <= r && r < moved[1]);
        }
    }

    #[test]
    fn x_operators_commute(w in sized_perm(5), a in 1usize..5, b in 1usize..5) {
        let n = w.n();
        let (a, b) = (1 + (a - 1) % (n - 1), 1 + (b - 1) % (n - 1));
        let e = RingElement::schubert(&w);
        let ab = x_operator(a, &x_operator(b, &e).unwrap()).unwrap();
        let ba = x_operator(b, &x_operator(a, &e).unwrap()).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn divisor_product_agrees_with_general_product(w in perm_of(4), r in 1usize..4) {
        let ring = QuantumRing::new(4);
        let s = Permutation::simple_reflection(4, r).unwrap();
        prop_assert_eq!(ring.product(&s, &w).unwrap(), monk_multiply(r, &w).unwrap());
        let twice = multiply_divisor(r, &monk_multiply(r, &w).unwrap()).unwrap();
        let general = ring.multiply(&RingElement::schubert(&s), &ring.product(&s, &w).unwrap()).unwrap();
        prop_assert_eq!(twice, general);
    }

    #[test]
    fn gw_vanishes_off_dimension(u in perm_of(4), w in perm_of(4), r in 1usize..4, total in 0u32..4) {
        for d in Multidegree::all_up_to(4, total) {
            if d.total() != total {
                continue;
            }
            let v = gw_divisor(&u, &w, r, &d).unwrap();
            if u.length() + w.length() + 1 != 6 + 2 * total as usize {
                prop_assert_eq!(v, 0);
            }
            prop_assert_eq!(v, gw_divisor(&w, &u, r, &d).unwrap());
        }
    }

    #[test]
    fn divided_difference_of_symmetric_product(n in 2usize..5, i_seed in 0usize..10, exps in proptest::collection::vec(0u32..3, 4)) {
        // ∂_i(f g) = ∂_i(f) g when g is symmetric in x_i, x_{i+1}
        let i = 1 + i_seed % (n - 1);
        let f = XPolynomial::monomial(n, exps[..n].to_vec(), 1);
        let g = XPolynomial::var(n, i).mul(&XPolynomial::var(n, i + 1));
        prop_assert_eq!(f.mul(&g).divided_difference(i), f.divided_difference(i).mul(&g));
    }

    #[test]
    fn coset_and_block_sorting_bounds(w in perm_of(5), a in strict_dims(5)) {
        let rep = min_coset_rep(&w, &a).unwrap();
        prop_assert!(in_descent_class(&rep, &a).unwrap());
        prop_assert!(rep.length() <= w.length());
        if in_descent_class(&w, &a).unwrap() {
            for b in a.all_below() {
                let bar = bar_perm(&w, &a, &b).unwrap();
                prop_assert!(in_descent_class(&bar, &b).unwrap());
                prop_assert!(bar.length() + bar_length_drop_bound(&a, &b) >= w.length());
            }
            for c in a.all_above() {
                let hat = hat_perm(&w, &a, &c).unwrap();
                prop_assert!(in_descent_class(&hat, &c).unwrap());
                prop_assert!(hat.length() + hat_length_drop_bound(&a, &c) >= w.length());
            }
        }
    }

    #[test]
    fn subspace_dimension_formula(
        pi in 0usize..6,
        n in 1usize..6,
        xs in proptest::collection::vec(proptest::collection::vec(0u32..13, 5), 0..5),
        ys in proptest::collection::vec(proptest::collection::vec(0u32..13, 5), 0..5),
    ) {
        let p = PRIMES[pi];
        let cut = |vs: &Vec<Vec<u32>>| vs.iter().map(|v| v[..n].to_vec()).collect::<Vec<_>>();
        let a = Subspace::span(p, n, &cut(&xs)).unwrap();
        let b = Subspace::span(p, n, &cut(&ys)).unwrap();
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(sum.contains(&a).unwrap() && sum.contains(&b).unwrap());
        prop_assert!(a.contains(&meet).unwrap() && b.contains(&meet).unwrap());
        prop_assert_eq!(Subspace::parse(p, n, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn random_flags_are_valid(n in 2usize..6, pi in 0usize..6, seed in any::<u64>()) {
        let p = PRIMES[pi];
        let f = random_flag(n, p, seed);
        prop_assert!(FlagPoint::new(p, f.dims().clone(), f.spaces().to_vec()).is_ok());
        prop_assert!(in_schubert(&f, &Permutation::longest(n), &f).unwrap());
        prop_assert!(in_schubert(&FlagPoint::coordinate(n, p), &Permutation::identity(n), &f).unwrap());
    }
}
