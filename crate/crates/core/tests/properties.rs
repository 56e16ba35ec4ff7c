use std::collections::BTreeSet;

use assprime::ass::{
    ass_module, irreducible_decomposition, irreducible_decomposition_splitting,
    is_irredundant_decomposition,
};
use assprime::gb::{buchberger_truncated, FieldSpec, Polynomial};
use assprime::parse::{parse_monomial_ideal, parse_polynomials};
use assprime::{ass_ring_quotient, hilbert_count, minimalize, Monomial, MonomialIdeal, Ring, Side};
use proptest::prelude::*;

fn ring(n: usize) -> Ring {
    let names: Vec<String> = (0..n).map(|i| format!("x{}", i + 1)).collect();
    Ring::new(&names).unwrap()
}

fn exps(nvars: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, nvars).prop_filter("nonconstant", |e| e.iter().any(|&x| x > 0))
}

fn gens(nvars: usize, max_deg: u32, max_gens: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(exps(nvars, max_deg), 1..=max_gens)
}

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|n| {
        gens(n, 4, 4).prop_map(move |g| MonomialIdeal::from_exponents(ring(n), &g).unwrap())
    })
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `m ∈ I^n` by searching for a factorization through generators, one at a time.
fn in_power_oracle(gens: &[Vec<u32>], m: &[u32], n: u32) -> bool {
    if n == 0 {
        return true;
    }
    gens.iter().any(|g| {
        divides(g, m) && {
            let rest: Vec<u32> = m.iter().zip(g).map(|(a, b)| a - b).collect();
            in_power_oracle(gens, &rest, n - 1)
        }
    })
}

fn in_ideal(gens: &[Vec<u32>], m: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

fn box_monomials(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

fn raw(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    ideal.gens().iter().map(|g| g.exps().to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn minimalize_is_idempotent_and_order_free(n in 1usize..=3, mut g in gens(3, 4, 6)) {
        let r = ring(n);
        for e in g.iter_mut() { e.truncate(n); if e.iter().all(|&x| x == 0) { e[0] = 1; } }
        let ms: Vec<Monomial> = g.iter().map(|e| Monomial::new(e.clone())).collect();
        let a = minimalize(&r, ms.clone()).unwrap();
        let b = minimalize(&r, a.gens().to_vec()).unwrap();
        prop_assert_eq!(&a, &b);
        let mut rev = ms.clone();
        rev.reverse();
        prop_assert_eq!(&a, &minimalize(&r, rev).unwrap());
        // same ideal: every input is divisible by an output and vice versa
        for m in &ms { prop_assert!(a.contains(m).unwrap()); }
        for m in a.gens() { prop_assert!(ms.contains(m)); }
    }

    #[test]
    fn power_membership_matches_factorization(i in ideal_strategy(), k in 1u32..=3) {
        let p = i.power(k).unwrap();
        let g = raw(&i);
        let bounds: Vec<u32> = i.max_exponents().iter().map(|e| e * k + 1).collect();
        for m in box_monomials(&bounds) {
            prop_assert_eq!(p.contains(&Monomial::new(m.clone())).unwrap(), in_power_oracle(&g, &m, k), "{:?}", m);
        }
    }

    #[test]
    fn intersection_and_colon_by_membership(i in ideal_strategy(), extra in gens(3, 4, 3)) {
        let n = i.ring().nvars();
        let jg: Vec<Vec<u32>> = extra.into_iter().map(|mut e| { e.truncate(n); if e.iter().all(|&x| x == 0) { e[0] = 1; } e }).collect();
        let j = MonomialIdeal::from_exponents(i.ring().clone(), &jg).unwrap();
        let meet = i.intersect(&j).unwrap();
        let bounds: Vec<u32> = i.max_exponents().iter().zip(j.max_exponents()).map(|(a, b)| a.max(&b) + 1).collect();
        let m0 = j.gens()[0].clone();
        let colon = i.colon(&m0).unwrap();
        for m in box_monomials(&bounds) {
            let mon = Monomial::new(m.clone());
            prop_assert_eq!(meet.contains(&mon).unwrap(), in_ideal(&raw(&i), &m) && in_ideal(&jg, &m));
            let shifted = mon.mul(&m0).unwrap();
            prop_assert_eq!(colon.contains(&mon).unwrap(), i.contains(&shifted).unwrap());
        }
        prop_assert!(i.is_subset_of(&colon).unwrap());
        let cij = i.colon_ideal(&j).unwrap();
        prop_assert!(cij.multiply(&j).unwrap().is_subset_of(&i).unwrap());
    }

    #[test]
    fn disjoint_intersection_is_product(a in ideal_strategy(), b in ideal_strategy()) {
        let rb = Ring::new(&(0..b.ring().nvars()).map(|i| format!("y{}", i + 1)).collect::<Vec<_>>()).unwrap();
        let b = MonomialIdeal::new(rb, b.gens().to_vec()).unwrap();
        let joined = a.ring().join(b.ring()).unwrap();
        let la = a.lift(&joined, Side::Left).unwrap();
        let lb = b.lift(&joined, Side::Right).unwrap();
        prop_assert_eq!(la.intersect(&lb).unwrap(), la.multiply(&lb).unwrap());
    }

    #[test]
    fn hilbert_counts_are_additive(i in ideal_strategy(), d in 0u64..9) {
        let p = i.powers_up_to(3).unwrap();
        let whole = hilbert_count(&p[1], &p[3], d).unwrap();
        let parts = hilbert_count(&p[1], &p[2], d).unwrap() + hilbert_count(&p[2], &p[3], d).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn decompositions_recover_the_ideal(i in ideal_strategy()) {
        let comps = irreducible_decomposition(&i).unwrap();
        prop_assert!(is_irredundant_decomposition(&i, &comps).unwrap());
        let mut meet = comps[0].to_ideal();
        for c in &comps[1..] { meet = meet.intersect(&c.to_ideal()).unwrap(); }
        prop_assert_eq!(&meet, &i);
        let other: BTreeSet<_> = irreducible_decomposition_splitting(&i).unwrap().into_iter().collect();
        let mine: BTreeSet<_> = comps.into_iter().collect();
        prop_assert_eq!(other, mine);
    }

    #[test]
    fn ass_routes_agree(i in ideal_strategy(), k in 1u32..=3) {
        let p = i.power(k).unwrap();
        let unit = MonomialIdeal::unit(i.ring().clone());
        prop_assert_eq!(ass_ring_quotient(&p).unwrap(), ass_module(&unit, &p).unwrap());
    }

    #[test]
    fn display_parses_back(i in ideal_strategy()) {
        let text = i.gens().iter().map(|g| g.display(i.ring()).to_string()).collect::<Vec<_>>().join(", ");
        prop_assert_eq!(parse_monomial_ideal(i.ring(), &text).unwrap(), i);
    }
}

fn random_form(r: &Ring, f: FieldSpec, deg: u64, coeffs: &[i64]) -> Polynomial {
    let monos: Vec<Monomial> = assprime::ideal::monomials_of_degree(r.nvars(), deg).collect();
    let terms = monos
        .into_iter()
        .zip(coeffs.iter().cycle())
        .map(|(m, c)| (m, *c))
        .collect();
    Polynomial::new(r.clone(), f, terms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn truncated_basis_is_complete_and_sound(coeffs in prop::collection::vec(-20i64..20, 1..12), d in 2u64..=4) {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let f = FieldSpec::new(7).unwrap();
        let g = parse_polynomials(&r, f, "x*y, x^2 + y*z").unwrap();
        let gb = buchberger_truncated(&g, 4).unwrap();
        // random combination h1*g1 + h2*g2 of degree d
        let h1 = random_form(&r, f, d - 2, &coeffs);
        let h2 = random_form(&r, f, d - 2, &coeffs[coeffs.len() / 2..]);
        let member = h1.mul(&g[0]).unwrap().add(&h2.mul(&g[1]).unwrap()).unwrap();
        if !member.is_zero() {
            prop_assert!(gb.contains(&member).unwrap());
        }
        let arbitrary = random_form(&r, f, d, &coeffs);
        let nf = gb.normal_form(&arbitrary).unwrap();
        if !nf.is_zero() {
            prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        }
        let div = gb.divide(&arbitrary).unwrap();
        let mut acc = div.remainder.clone();
        for (q, b) in div.quotients.iter().zip(gb.gens()) {
            acc = acc.add(&q.mul(b).unwrap()).unwrap();
        }
        prop_assert_eq!(acc, arbitrary);
        prop_assert_eq!(div.remainder, nf);
    }
}
