use qmonk::ffgeom::{
    construct_unique_curve, count_curves_through, curve_kernel, curve_points, divisor_point,
    enumerate_curves, genericity_check, in_schubert, random_flag, Budget, FlagPoint,
};
use qmonk::qring::{gw_divisor, Multidegree};
use qmonk::Permutation;

fn generic_triple(n: usize, p: u32, mut seed: u64) -> [FlagPoint; 3] {
    loop {
        let [f, g, h] = [0, 1, 2].map(|k| random_flag(n, p, seed * 3 + k));
        if genericity_check(&f, &g).unwrap()
            && genericity_check(&f, &h).unwrap()
            && genericity_check(&g, &h).unwrap()
        {
            return [f, g, h];
        }
        seed += 1000;
    }
}

#[test]
fn constructed_curve_is_the_counted_curve() {
    let n = 3;
    let budget = Budget::default();
    let [f, g, h] = generic_triple(n, 7, 4);
    let mut constructed = 0;
    for i in 1..n {
        for j in i + 1..=n {
            let curves = enumerate_curves(i, j, n, 7, &budget).unwrap();
            let d = Multidegree::d_ij(n, i, j).unwrap();
            for u in Permutation::all(n) {
                for w in Permutation::all(n) {
                    for r in i..j {
                        if gw_divisor(&u, &w, r, &d).unwrap() != 1 {
                            continue;
                        }
                        let c = construct_unique_curve(&u, &w, r, i, j, &f, &g).unwrap();
                        assert_eq!(&curve_kernel(&c), c.kernel_flag());
                        let s_r = Permutation::simple_reflection(n, r).unwrap();
                        let v = divisor_point(&c, r, &h)
                            .unwrap()
                            .expect("the span meets H_{n-r}");
                        assert!(in_schubert(&v, &s_r, &h).unwrap());
                        let meets = |datum: &qmonk::ffgeom::CurveDatum| {
                            let pts = curve_points(datum);
                            pts.iter().any(|x| in_schubert(x, &u, &f).unwrap())
                                && pts.iter().any(|x| in_schubert(x, &w, &g).unwrap())
                                && pts.iter().any(|x| in_schubert(x, &s_r, &h).unwrap())
                        };
                        let hits: Vec<_> = curves.iter().filter(|c| meets(c)).collect();
                        assert_eq!(hits, vec![&c], "u={u} w={w} r={r} d_{i}{j}");
                        constructed += 1;
                    }
                }
            }
        }
    }
    assert_eq!(constructed, 8);
}

#[test]
fn single_counts_match_rule() {
    let budget = Budget::default();
    let [f, g, h] = generic_triple(3, 11, 9);
    let w0 = Permutation::longest(3);
    for r in 1..3 {
        assert_eq!(
            count_curves_through(&w0, &w0, r, 1, 3, &f, &g, &h, &budget).unwrap(),
            1
        );
    }
    let (u, w) = (
        Permutation::from_one_line(vec![3, 2, 1]).unwrap(),
        Permutation::from_one_line(vec![2, 1, 3]).unwrap(),
    );
    assert_eq!(
        count_curves_through(&u, &w, 1, 1, 2, &f, &g, &h, &budget).unwrap(),
        1
    );
    assert_eq!(
        count_curves_through(&u, &w, 2, 1, 2, &f, &g, &h, &budget).unwrap(),
        0
    );
}

#[test]
fn four_dimensional_curves_have_expected_shape() {
    let budget = Budget::default();
    for (i, j) in [(1, 4), (2, 4), (1, 3)] {
        for c in enumerate_curves(i, j, 4, 2, &budget)
            .unwrap()
            .iter()
            .step_by(37)
        {
            let pts = curve_points(c);
            assert_eq!(pts.len(), 3);
            assert_eq!(&curve_kernel(c), c.kernel_flag());
        }
    }
}
