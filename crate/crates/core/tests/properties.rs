//! Standalone property suites: order axioms, lattice identities, homology
//! sanity, and the structural invariants that tie the modules together.
//! Nothing in here depends on frozen pipeline numbers.

use proptest::prelude::*;
use std::cmp::Ordering;

use edgering::*;

const Q: FieldTag = FieldTag::RATIONALS;

fn char2() -> FieldTag {
    FieldTag::prime(2).unwrap()
}

fn mono_strategy(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn ideal_strategy(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(mono_strategy(n, 2), 0..4)
        .prop_map(move |gens| MonomialIdeal::new(n, gens.into_iter().filter(|m| !m.is_unit())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn order_axioms(
        a in mono_strategy(6, 4),
        b in mono_strategy(6, 4),
        c in mono_strategy(6, 4),
    ) {
        for order in [MonomialOrder::lex(), MonomialOrder::degrevlex()] {
            // Totality with antisymmetry.
            prop_assert_eq!(order.compare(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(order.compare(&a, &b), order.compare(&b, &a).reverse());
            // Transitivity.
            if order.compare(&a, &b) != Ordering::Greater
                && order.compare(&b, &c) != Ordering::Greater
            {
                prop_assert_ne!(order.compare(&a, &c), Ordering::Greater);
            }
            // Multiplicative and unit-minimal.
            prop_assert_eq!(order.compare(&a.mul(&c), &b.mul(&c)), order.compare(&a, &b));
            prop_assert_ne!(order.compare(&a, &Monomial::unit(6)), Ordering::Less);
        }
    }

    #[test]
    fn degrevlex_on_equal_degrees_is_the_ungraded_reverse_rule(
        a in mono_strategy(6, 4),
        seed in 0u64..10_000,
    ) {
        // For monomials of equal degree, the degrevlex comparison must agree
        // with the plain reverse-lexicographic tie rule: the smaller exponent
        // on the last differing variable wins. Homogeneous ideals only ever
        // compare equal degrees, which is what makes leading-term choices
        // reproducible without grading. A shuffle keeps the degree equal.
        let mut exps: Vec<u32> = a.exps().to_vec();
        let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
        for i in (1..exps.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            exps.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let b = Monomial::new(exps);
        let expected = a
            .exps()
            .iter()
            .zip(b.exps())
            .rev()
            .find(|(x, y)| x != y)
            .map_or(Ordering::Equal, |(x, y)| if x < y {
                Ordering::Greater
            } else {
                Ordering::Less
            });
        prop_assert_eq!(MonomialOrder::degrevlex().compare(&a, &b), expected);
    }

    #[test]
    fn monomial_lattice_identities(
        a in mono_strategy(5, 4),
        b in mono_strategy(5, 4),
    ) {
        let l = a.lcm(&b);
        prop_assert!(a.divides(&l) && b.divides(&l));
        prop_assert!(a.gcd(&b).divides(&a));
        if b.divides(&a) {
            prop_assert_eq!(a.quotient(&b).unwrap().mul(&b), a.clone());
        }
        prop_assert_eq!(a.lcm(&b).mul(&a.gcd(&b)), a.mul(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ideal_lattice_identities(
        a in ideal_strategy(4),
        b in ideal_strategy(4),
        c in ideal_strategy(4),
    ) {
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
        // Products distribute over sums exactly.
        prop_assert_eq!(
            c.product(&a.sum(&b).unwrap()).unwrap(),
            c.product(&a).unwrap().sum(&c.product(&b).unwrap()).unwrap()
        );
        // The colon satisfies (a : b) * b inside a.
        let q = a.colon(&b).unwrap();
        for g in q.product(&b).unwrap().gens() {
            prop_assert!(a.contains(g));
        }
    }

    #[test]
    fn radical_respects_membership_of_supports(a in ideal_strategy(4)) {
        let r = a.radical();
        prop_assert!(r.is_squarefree());
        for g in a.gens() {
            prop_assert!(r.contains(&g.squarefree_part()));
        }
    }

    #[test]
    fn koszul_faces_match_the_raw_definition(
        gens in proptest::collection::vec(mono_strategy(5, 2), 1..4),
        a in mono_strategy(5, 2),
    ) {
        let j = MonomialIdeal::new(5, gens.into_iter().filter(|m| !m.is_unit()));
        let cx = koszul_complex(&j, &a);
        for alpha in 0u64..(1 << 5) {
            let mut rem = Vec::new();
            let mut in_range = true;
            for v in 1..=5usize {
                let sub = u32::from(alpha & (1 << (v - 1)) != 0);
                if a.exp(v) < sub {
                    in_range = false;
                    break;
                }
                rem.push((v, a.exp(v) - sub));
            }
            let expected = in_range && j.contains(&Monomial::from_powers(5, &rem));
            prop_assert_eq!(cx.contains_face(alpha), expected);
        }
    }

    #[test]
    fn homology_is_invariant_under_relabeling(
        facets in proptest::collection::vec(
            proptest::collection::btree_set(1usize..=6, 1..4), 1..4),
        seed in 0u64..1000,
    ) {
        let facet_sets: Vec<Vec<usize>> =
            facets.iter().map(|f| f.iter().copied().collect()).collect();
        let cx = SimplicialComplex::from_facet_sets(6, &facet_sets);
        // A seeded permutation of the six vertices.
        let mut perm: Vec<usize> = (1..=6).collect();
        let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
        for i in (1..perm.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let relabeled: Vec<Vec<usize>> = facet_sets
            .iter()
            .map(|f| f.iter().map(|&v| perm[v - 1]).collect())
            .collect();
        let cx2 = SimplicialComplex::from_facet_sets(6, &relabeled);
        for field in [Q, char2()] {
            prop_assert_eq!(
                reduced_homology_dims(&cx, field),
                reduced_homology_dims(&cx2, field)
            );
        }
    }

    #[test]
    fn euler_characteristic_matches_homology(
        facets in proptest::collection::vec(
            proptest::collection::btree_set(1usize..=6, 1..5), 1..5),
    ) {
        let facet_sets: Vec<Vec<usize>> =
            facets.iter().map(|f| f.iter().copied().collect()).collect();
        let cx = SimplicialComplex::from_facet_sets(6, &facet_sets);
        let h = reduced_homology_dims(&cx, Q);
        prop_assert_eq!(h.euler_characteristic(), cx.reduced_euler_characteristic());
    }
}

/// Normal form of a monomial modulo an oriented binomial basis: rewrite by
/// the first applicable leading term until none divides.
fn monomial_normal_form(order: &MonomialOrder, m: &Monomial, basis: &[Binomial]) -> Monomial {
    let mut cur = m.clone();
    'outer: loop {
        for b in basis {
            let (lead, _) = b.leading(order);
            if lead.divides(&cur) {
                cur = cur.quotient(lead).unwrap().mul(b.trailing(order));
                continue 'outer;
            }
        }
        return cur;
    }
}

#[test]
fn monomial_congruence_classes_agree_between_orders() {
    // Every monomial of degree at most 6 rewrites to a class representative;
    // two monomials share a representative exactly when they have the same
    // incidence image, and the partition does not depend on the order.
    for k in 1..=2usize {
        let g = family_graph(k).unwrap();
        let n = g.edge_count();
        let walks = walk_binomials(k).unwrap();
        let gb_rev = buchberger(&MonomialOrder::degrevlex(), &walks);
        let gb_lex = buchberger(&MonomialOrder::lex(), &walks);

        let mut classes: std::collections::HashMap<Vec<u64>, (Monomial, Monomial)> =
            std::collections::HashMap::new();
        let mut stack = vec![vec![0u32; n]];
        let mut exps = vec![0u32; n];
        // Enumerate all exponent vectors of degree <= 6.
        fn walk_exps(pos: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if pos == exps.len() {
                out.push(exps.clone());
                return;
            }
            for e in 0..=remaining {
                exps[pos] = e;
                walk_exps(pos + 1, remaining - e, exps, out);
            }
            exps[pos] = 0;
        }
        stack.clear();
        walk_exps(0, 6, &mut exps, &mut stack);

        for exps in stack {
            let m = Monomial::new(exps.clone());
            let img = g.incidence_image(&exps).unwrap();
            let nf_rev = monomial_normal_form(&MonomialOrder::degrevlex(), &m, gb_rev.elements());
            let nf_lex = monomial_normal_form(&MonomialOrder::lex(), &m, gb_lex.elements());
            // Rewriting must preserve the incidence image.
            assert_eq!(g.incidence_image(nf_rev.exps()).unwrap(), img);
            assert_eq!(g.incidence_image(nf_lex.exps()).unwrap(), img);
            match classes.entry(img) {
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert((nf_rev, nf_lex));
                }
                std::collections::hash_map::Entry::Occupied(e) => {
                    let (rep_rev, rep_lex) = e.get();
                    assert_eq!(&nf_rev, rep_rev, "degrevlex split a class at {m}");
                    assert_eq!(&nf_lex, rep_lex, "lex split a class at {m}");
                }
            }
        }
    }
}

#[test]
fn squarefree_betti_numbers_agree_with_the_restriction_route() {
    // Independent route for squarefree ideals: the Betti number of S/J in a
    // squarefree multidegree a equals the reduced homology of the face
    // complex restricted to the support of a, in degree |a| - i - 1. The
    // two computations share no code path beyond the rank routine.
    let mut cases: Vec<MonomialIdeal> = (1..=3)
        .map(|k| buchberger(&MonomialOrder::lex(), &walk_binomials(k).unwrap()).initial_ideal())
        .collect();
    cases.push(MonomialIdeal::new(
        3,
        [
            Monomial::from_powers(3, &[(1, 1), (2, 1)]),
            Monomial::from_powers(3, &[(2, 1), (3, 1)]),
        ],
    ));
    for j in cases {
        let n = j.nvars();
        let full_complex = complex_from_squarefree_ideal(&j).unwrap();
        // All lcms of generator subsets (squarefree, so supports union).
        let mut lattice: std::collections::BTreeSet<Monomial> = j.gens().iter().cloned().collect();
        let mut frontier: Vec<Monomial> = j.gens().to_vec();
        while let Some(a) = frontier.pop() {
            for g in j.gens() {
                let l = a.lcm(g);
                if lattice.insert(l.clone()) {
                    frontier.push(l);
                }
            }
        }
        for a in lattice {
            let support = a.support_mask();
            let size = support.count_ones() as i64;
            let restricted = SimplicialComplex::from_faces(
                n,
                full_complex.facets().iter().map(|&f| f & support),
            );
            let h = reduced_homology_dims(&restricted, Q);
            for i in 1..=n {
                assert_eq!(
                    betti_at(&j, i, &a, Q).unwrap(),
                    h.dim(size - i as i64 - 1),
                    "i={i}, a={a}, n={n}"
                );
            }
        }
    }
}

#[test]
fn repro_pass_vector_is_field_stable() {
    let vector = |field: FieldTag| -> Vec<(String, bool)> {
        repro(2, field)
            .unwrap()
            .checks
            .into_iter()
            .map(|c| (c.check_id, c.pass))
            .collect()
    };
    assert_eq!(vector(Q), vector(char2()));
}

#[test]
fn both_orders_generate_the_same_ideal() {
    // Cross-membership of the two reduced bases, and agreement on every
    // degree-bounded kernel element.
    for k in 1..=3usize {
        let walks = walk_binomials(k).unwrap();
        let gb_rev = buchberger(&MonomialOrder::degrevlex(), &walks);
        let gb_lex = buchberger(&MonomialOrder::lex(), &walks);
        assert!(gb_rev.elements().iter().all(|b| gb_lex.contains(b)));
        assert!(gb_lex.elements().iter().all(|b| gb_rev.contains(b)));
    }
    for k in 1..=2usize {
        let oracle = toric_kernel_oracle(&family_graph(k).unwrap(), 6).unwrap();
        let walks = walk_binomials(k).unwrap();
        let gb_rev = buchberger(&MonomialOrder::degrevlex(), &walks);
        let gb_lex = buchberger(&MonomialOrder::lex(), &walks);
        for b in oracle.gens() {
            assert_eq!(gb_rev.contains(b), gb_lex.contains(b));
            assert!(gb_rev.contains(b));
        }
    }
}

#[test]
fn intersection_chain_of_pendant_primes() {
    // For 2 <= k' <= k the partial intersections of the pendant prime blocks
    // collapse to squares plus a variable tail.
    for k in [3usize, 4] {
        let n = 2 * k + 5;
        let block = |l: usize| {
            let vars: Vec<usize> = (2..=l - 1).chain(k + 2 + l..=2 * k + 1).collect();
            MonomialIdeal::variables(n, &vars)
        };
        for kp in 2..=k {
            let mut lhs = MonomialIdeal::unit(n);
            for l in 2..=kp {
                lhs = lhs.intersect(&block(l)).unwrap();
            }
            let mut rhs_gens = Vec::new();
            for i in 2..=kp {
                for j in i + 1..=kp {
                    rhs_gens.push(Monomial::from_powers(n, &[(i, 1), (k + 1 + j, 1)]));
                }
            }
            let squares = MonomialIdeal::new(n, rhs_gens);
            let tail_vars: Vec<usize> = (k + 2 + kp..=2 * k + 1).collect();
            let rhs = squares
                .sum(&MonomialIdeal::variables(n, &tail_vars))
                .unwrap();
            assert_eq!(lhs, rhs, "k={k}, k'={kp}");
        }
    }
}

/// The family corpus used by the bound checks below.
fn corpus(k: usize) -> Vec<MonomialIdeal> {
    let walks = walk_binomials(k).unwrap();
    let in_rev = buchberger(&MonomialOrder::degrevlex(), &walks).initial_ideal();
    let in_lex = buchberger(&MonomialOrder::lex(), &walks).initial_ideal();
    let blocks = family::revlex_blocks(k).unwrap();
    let mut out = vec![
        in_rev,
        in_lex,
        blocks.j1(),
        blocks.j2(),
        blocks.j3(),
        blocks.j3().intersect(&blocks.i2).unwrap(),
        blocks.i3.intersect(&blocks.i4).unwrap(),
    ];
    out.extend([blocks.i1, blocks.i2, blocks.i3, blocks.i4, blocks.i5]);
    out
}

#[test]
fn depth_is_bounded_by_dimension() {
    for k in 1..=3usize {
        for j in corpus(k) {
            let depth = depth_quotient(&j, Q).unwrap();
            let dim = krull_dim_quotient(&j).unwrap();
            assert!(depth <= dim, "depth {depth} > dim {dim} for {j} (k={k})");
        }
    }
}

#[test]
fn depth_is_at_least_the_count_of_untouched_variables() {
    // A quotient by an ideal touching m of the n variables has depth at
    // least n - m: the untouched variables form a regular sequence.
    for k in 1..=3usize {
        let n = 2 * k + 5;
        for j in corpus(k) {
            let mut used = vec![false; n];
            for g in j.gens() {
                for v in g.support() {
                    used[v - 1] = true;
                }
            }
            let m = used.iter().filter(|&&u| u).count();
            let depth = depth_quotient(&j, Q).unwrap();
            assert!(depth >= n - m, "depth {depth} < {} for {j}", n - m);
        }
    }
}

#[test]
fn scaling_by_fresh_variables_keeps_the_depth_bound() {
    // J' = x_{i_1}...x_{i_r} J with the x_{i_l} absent from J keeps
    // depth >= n - m, where m counts the variables J touches.
    let n = 9;
    let j = MonomialIdeal::new(
        n,
        [
            Monomial::from_powers(n, &[(2, 2)]),
            Monomial::from_powers(n, &[(2, 1), (3, 1)]),
            Monomial::from_powers(n, &[(3, 2)]),
        ],
    );
    let m = 2;
    for scaler in [
        Monomial::from_powers(n, &[(7, 1)]),
        Monomial::from_powers(n, &[(6, 1), (7, 1), (8, 1)]),
    ] {
        let scaled = j.scale(&scaler);
        let depth = depth_quotient(&scaled, Q).unwrap();
        assert!(depth >= n - m, "depth {depth} after scaling by {scaler}");
    }
}

#[test]
fn stepwise_depth_bounds_hold() {
    // The intermediate quotients behind the depth bound: all three partial
    // sums have depth at least 6 and the final intersection at least 7.
    for k in 2..=3usize {
        let blocks = family::revlex_blocks(k).unwrap();
        assert!(depth_quotient(&blocks.j1(), Q).unwrap() >= 6);
        assert!(depth_quotient(&blocks.j2(), Q).unwrap() >= 6);
        assert!(depth_quotient(&blocks.j3(), Q).unwrap() >= 6);
        let inter = blocks.j3().intersect(&blocks.i2).unwrap();
        assert!(depth_quotient(&inter, Q).unwrap() >= 7);
    }
}

#[test]
fn betti_tables_are_field_stable_on_the_family() {
    for k in 1..=3usize {
        let walks = walk_binomials(k).unwrap();
        for order in [MonomialOrder::degrevlex(), MonomialOrder::lex()] {
            let j = buchberger(&order, &walks).initial_ideal();
            let t0 = betti_table(&j, Q).unwrap();
            let t2 = betti_table(&j, char2()).unwrap();
            assert_eq!(t0.entries(), t2.entries(), "k={k}, order={}", order.name());
        }
    }
}

#[test]
fn shellable_complexes_have_cohen_macaulay_quotients() {
    for k in 2..=4usize {
        let in_lex = buchberger(&MonomialOrder::lex(), &walk_binomials(k).unwrap()).initial_ideal();
        let cx = complex_from_squarefree_ideal(&in_lex).unwrap();
        let order = family_shelling_order(k).unwrap();
        assert!(is_shellable_with_order(&cx, &order).unwrap());
        // Round trip back to the ideal, then the Cohen-Macaulay check in
        // both characteristics.
        let back = stanley_reisner_ideal(&cx);
        assert_eq!(back, in_lex);
        assert!(is_cohen_macaulay(&back, Q).unwrap());
        assert!(is_cohen_macaulay(&back, char2()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn shelling_search_agrees_with_exhaustive_permutation_check(
        facets in proptest::collection::btree_set(
            proptest::collection::btree_set(1usize..=5, 2..4), 1..5),
    ) {
        // Small pure complexes: the backtracking verdict must match brute
        // force over every facet permutation.
        let size = facets.iter().next().map(|f| f.len()).unwrap_or(0);
        let pure: Vec<Vec<usize>> = facets
            .iter()
            .filter(|f| f.len() == size)
            .map(|f| f.iter().copied().collect())
            .collect();
        let cx = SimplicialComplex::from_facet_sets(5, &pure);
        let verdict = find_shelling(&cx, 1_000_000).unwrap();
        let mut order: Vec<u64> = cx.facets().to_vec();
        let mut any = false;
        // Heap's algorithm over at most 4 facets.
        fn permutations(k: usize, order: &mut Vec<u64>, found: &mut bool, cx: &SimplicialComplex) {
            if k <= 1 {
                *found |= is_shellable_with_order(cx, order).unwrap();
                return;
            }
            for i in 0..k {
                permutations(k - 1, order, found, cx);
                if k % 2 == 0 {
                    order.swap(i, k - 1);
                } else {
                    order.swap(0, k - 1);
                }
            }
        }
        let len = order.len();
        permutations(len, &mut order, &mut any, &cx);
        match verdict {
            ShellingSearch::Found(o) => {
                prop_assert!(is_shellable_with_order(&cx, &o).unwrap());
                prop_assert!(any);
            }
            ShellingSearch::NotShellable => prop_assert!(!any),
            ShellingSearch::BudgetExhausted => prop_assert!(false, "budget too small"),
        }
    }
}

#[test]
fn koszul_faces_stay_inside_the_support() {
    let j = family::revlex_initial_generators(2).unwrap();
    let a = family::betti_witness_multidegree(2).unwrap();
    let cx = koszul_complex(&j, &a);
    let support = a.support_mask();
    for &f in cx.facets() {
        assert_eq!(f & !support, 0);
    }
}

#[test]
fn walk_closure_across_the_family() {
    for k in 1..=6usize {
        let g = family_graph(k).unwrap();
        for walk in family_walks(k).unwrap() {
            assert!(g.is_closed_walk(&walk));
            // Odd and even positions cover each vertex equally often.
            let b = walk_binomial(g.edge_count(), &walk).unwrap();
            assert_eq!(
                g.incidence_image(b.plus().exps()).unwrap(),
                g.incidence_image(b.minus().exps()).unwrap()
            );
        }
    }
}
