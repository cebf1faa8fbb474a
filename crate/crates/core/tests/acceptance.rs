//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines are always printed; exits non-zero when any criterion fails.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;

use common::*;
use ratgk::construct::general_linear;
use ratgk::facts::cases::{alpha, beta, case_b_a, case_b_b, gamma, mu_quotient, mu_u, mu_v};
use ratgk::facts::{build_case, find_witnesses, verify_all, CaseTag, FactReport};
use ratgk::fp::{FpMatrix, FpVector};
use ratgk::graph::{Figure, PrimeGraph};
use ratgk::group::FiniteGroup;
use ratgk::rationality::{
    check_orders_6_10_15, is_cut, is_rational, rationality_normalizer_criterion,
    sylow5_normal_elementary_abelian, sylow_pair_constraint,
};
use ratgk::search::{search_witness, SearchSpace};
use ratgk::twisted::{twisted_power_factor, TwistVariant};

fn facts() -> &'static FactReport {
    static REPORT: OnceLock<FactReport> = OnceLock::new();
    REPORT.get_or_init(|| verify_all().unwrap())
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn v4(e: [u32; 4]) -> FpVector {
    FpVector::new(5, e.to_vec())
}

fn gamma_inv() -> FpMatrix {
    gamma().pow(3)
}

fn case_gens(tag: CaseTag) -> Vec<FpMatrix> {
    match tag {
        CaseTag::D => vec![alpha(), beta(), gamma()],
        _ => vec![alpha(), beta(), gamma().mul(&gamma())],
    }
}

fn inverse_by_order(m: &FpMatrix) -> FpMatrix {
    m.pow(matrix_order(m) - 1)
}

fn stated_l2() -> Vec<FpMatrix> {
    let ac = gamma_inv().mul(&alpha()).mul(&gamma());
    vec![alpha().mul(&ac), ac.mul(&alpha())]
}

fn stated_c2(tag: CaseTag) -> Vec<FpMatrix> {
    let (a, b, c) = (alpha(), beta(), gamma());
    let ab = a.mul(&b);
    match tag {
        CaseTag::D => vec![a.mul(&c).mul(&b).mul(&a), a.mul(&b).mul(&c).mul(&ab).mul(&ab)],
        _ => vec![a.mul(&c).mul(&b).mul(&a).mul(&a).mul(&b).mul(&c).mul(&ab).mul(&ab)],
    }
}

fn mu_quotient_reproduced() -> Outcome {
    let q = mu_quotient();
    let computed = mu_u().inverse().unwrap().mul(&mu_v());
    let mut ok = computed == q && mu_u().mul(&q) == mu_v();
    let l2 = matrix_closure(&stated_l2());
    let mut detail = format!("μ_u⁻¹μ_v = {computed}");
    for tag in [CaseTag::D, CaseTag::E] {
        let c2 = matrix_closure(&stated_c2(tag));
        let products: HashSet<FpMatrix> = l2.iter().flat_map(|x| c2.iter().map(move |y| x.mul(y))).collect();
        ok &= !products.contains(&q);
        detail.push_str(&format!("; case {tag}: |L_2·C(α)_2| = {}, contains it: {}", products.len(), products.contains(&q)));
    }
    let report = facts();
    ok &= report.get("d.mu-quotient").unwrap().verdict && report.get("e.mu-quotient").unwrap().verdict;
    outcome(ok, detail)
}

fn orbits_separate() -> Outcome {
    let (u, v) = (v4([0, 1, 1, 1]), v4([0, 1, 1, 2]));
    let mut ok = true;
    let mut detail = Vec::new();
    for tag in [CaseTag::D, CaseTag::E] {
        let gens = case_gens(tag);
        let ou = vector_orbit(&u, &gens);
        let ov = vector_orbit(&v, &gens);
        let disjoint = ou.is_disjoint(&ov);
        ok &= disjoint;
        detail.push(format!("case {tag}: |O_u| = {}, |O_v| = {}, disjoint {disjoint}", ou.len(), ov.len()));
    }
    outcome(ok, detail.join("; "))
}

fn doubling_elements_unique() -> Outcome {
    let (u, v) = (v4([0, 1, 1, 1]), v4([0, 1, 1, 2]));
    let full = matrix_closure(&case_gens(CaseTag::D));
    let half: HashSet<FpMatrix> = matrix_closure(&case_gens(CaseTag::E)).into_iter().collect();
    let du: Vec<&FpMatrix> = full.iter().filter(|m| u.mul_mat(m) == u.scale(2)).collect();
    let dv: Vec<&FpMatrix> = full.iter().filter(|m| v.mul_mat(m) == v.scale(2)).collect();
    let ok = du == vec![&mu_u()] && dv == vec![&mu_v()] && half.contains(&mu_u()) && half.contains(&mu_v());
    outcome(
        ok,
        format!(
            "|<α,β,γ>| = {}, doubling u: {}, doubling v: {}, μ_u, μ_v in <α,β,γ²>: {}",
            full.len(),
            du.len(),
            dv.len(),
            half.contains(&mu_u()) && half.contains(&mu_v())
        ),
    )
}

fn centralizer_sylow2() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for tag in [CaseTag::D, CaseTag::E] {
        let gens = case_gens(tag);
        let group = matrix_closure(&gens);
        let cent: Vec<&FpMatrix> = group.iter().filter(|m| m.mul(&alpha()) == alpha().mul(m)).collect();
        let two_part = {
            let mut n = cent.len();
            let mut t = 1;
            while n % 2 == 0 {
                n /= 2;
                t *= 2;
            }
            t
        };
        let two_elements: HashSet<FpMatrix> = cent
            .iter()
            .filter(|m| matrix_order(m).is_power_of_two())
            .map(|m| (*m).clone())
            .collect();
        let stated: HashSet<FpMatrix> = matrix_closure(&stated_c2(tag)).into_iter().collect();
        let normal = gens.iter().all(|g| {
            let gi = inverse_by_order(g);
            stated.iter().all(|s| stated.contains(&gi.mul(s).mul(g)))
        });
        let good = stated == two_elements && stated.len() == two_part && normal;
        ok &= good;
        detail.push(format!(
            "case {tag}: |C(α)| = {}, |C(α)_2| = {}, stated words generate it: {}, normal: {normal}",
            cent.len(),
            stated.len(),
            stated == two_elements
        ));
    }
    outcome(ok, detail.join("; "))
}

fn punctured_lines(set: &BTreeSet<FpVector>) -> usize {
    let lines: BTreeSet<BTreeSet<FpVector>> = set
        .iter()
        .map(|w| (1..5).map(|c| w.scale(c)).collect::<BTreeSet<_>>())
        .collect();
    let covered = lines.iter().all(|l| l.is_subset(set));
    if covered {
        lines.len()
    } else {
        0
    }
}

fn sl23_census() -> Outcome {
    let case = build_case(CaseTag::C).unwrap();
    let gens: Vec<FpMatrix> = case
        .group()
        .generator_elements()
        .iter()
        .map(|e| e.as_matrix().unwrap().clone())
        .collect();
    let g = matrix_closure(&gens);
    let all_det_one = g.iter().all(|m| m.det() == 1);
    let center: Vec<&FpMatrix> = g.iter().filter(|m| g.iter().all(|x| x.mul(m) == m.mul(x))).collect();
    let fours: Vec<&FpMatrix> = g.iter().filter(|m| matrix_order(m) == 4).collect();
    let central_fours = fours.iter().filter(|m| center.contains(m)).count();
    let transitive = vector_orbit(&FpVector::new(5, vec![1, 0]), &gens).len() == 24;
    let sylow: Vec<&FpMatrix> = g.iter().filter(|m| matrix_order(m).is_power_of_two()).collect();
    let nonzero: Vec<FpVector> = FpVector::all(5, 2).into_iter().filter(|w| !w.is_zero()).collect();
    let mut orbits: Vec<BTreeSet<FpVector>> = Vec::new();
    for w in &nonzero {
        if !orbits.iter().any(|o| o.contains(w)) {
            orbits.push(sylow.iter().map(|m| w.mul_mat(m)).collect());
        }
    }
    let shapes_ok = orbits.len() == 3 && orbits.iter().all(|o| o.len() == 8 && punctured_lines(o) == 2);
    let cyclic = g.iter().filter(|m| matrix_order(m) == 3).any(|a| {
        let image = |o: &BTreeSet<FpVector>| -> BTreeSet<FpVector> { o.iter().map(|w| w.mul_mat(a)).collect() };
        let next: Vec<Option<usize>> = orbits.iter().map(|o| orbits.iter().position(|p| *p == image(o))).collect();
        orbits.len() == 3 && next.iter().enumerate().all(|(i, n)| n.is_some_and(|j| j != i))
    });
    let presentation = facts().get("c.presentation").unwrap().verdict;
    let ok = g.len() == 24
        && all_det_one
        && fours.len() == 6
        && central_fours == 0
        && transitive
        && shapes_ok
        && cyclic
        && presentation;
    outcome(
        ok,
        format!(
            "order {}, order-4 elements {} ({} central), transitive {transitive}, Sylow-2 orbit sizes {:?}, cyclic under order 3 {cyclic}, presentation {presentation}",
            g.len(),
            fours.len(),
            central_fours,
            orbits.iter().map(|o| o.len()).collect::<Vec<_>>()
        ),
    )
}

fn case_b_census() -> Outcome {
    let (a, b) = (case_b_a(), case_b_b());
    let u = FpVector::new(5, vec![1, 0]);
    let v = FpVector::new(5, vec![0, 1]);
    let relations = u.mul_mat(&a) == v
        && v.mul_mat(&a) == u.scale(4).add(&v.scale(4))
        && u.mul_mat(&b) == u.scale(2)
        && v.mul_mat(&b) == u.scale(3).add(&v.scale(3));
    let h = matrix_closure(&[a.clone(), b.clone()]);
    let orbit = vector_orbit(&u, &[a, b]);
    let expected: BTreeSet<FpVector> = (1..5).flat_map(|c| [u.scale(c), v.scale(c), u.add(&v).scale(c)]).collect();
    let fours = h.iter().filter(|m| matrix_order(m) == 4).count();
    let x_sizes: Vec<usize> = FpVector::all(5, 2)
        .into_iter()
        .filter(|w| !w.is_zero())
        .map(|w| h.iter().filter(|m| w.mul_mat(m) == w.scale(2)).count())
        .collect();
    let report = facts();
    let bijection = report.get("b.line-bijection").unwrap().verdict;
    let ok = relations
        && h.len() == 12
        && orbit == expected
        && fours == 6
        && x_sizes.len() == 24
        && x_sizes.iter().all(|&s| s == 1)
        && bijection;
    outcome(
        ok,
        format!(
            "|H/K| = {}, |O_u| = {}, order-4 elements {fours}, |X_w| values {:?} over {} vectors, line bijection {bijection}",
            h.len(),
            orbit.len(),
            x_sizes.iter().collect::<BTreeSet<_>>(),
            x_sizes.len()
        ),
    )
}

fn module_premises() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for tag in CaseTag::ALL {
        let case = build_case(tag).unwrap();
        let act = case.action();
        let image = matrix_closure(
            &case
                .group()
                .generators()
                .iter()
                .map(|&g| act.rep(g).clone())
                .collect::<Vec<_>>(),
        );
        let brauer_oracle = image.iter().all(|m| {
            let k = matrix_order(m);
            let cp = charpoly_faddeev(m);
            (1..k).filter(|&e| gcd(e, k) == 1).all(|e| charpoly_faddeev(&m.pow(e)) == cp)
        });
        let nonzero: Vec<FpVector> = FpVector::all(5, act.dim()).into_iter().filter(|w| !w.is_zero()).collect();
        let eig_oracle = nonzero.iter().all(|w| image.iter().any(|m| w.mul_mat(m) == w.scale(2)));
        let simple_oracle = nonzero.iter().all(|w| {
            let orbit: Vec<FpVector> = image.iter().map(|m| w.mul_mat(m)).collect();
            rank(&orbit) == act.dim()
        });
        let lib = act.brauer_character_is_rational().unwrap() && act.eigenvector_property().unwrap().holds && act.is_simple();
        let good = brauer_oracle && eig_oracle && simple_oracle && lib;
        ok &= good;
        detail.push(format!("{tag}: {}", if good { "yes" } else { "no" }));
    }
    outcome(ok, detail.join(", "))
}

fn six_witnesses() -> Outcome {
    let witnesses = find_witnesses().unwrap();
    let mut ok = witnesses.len() == 6;
    let mut figures = BTreeSet::new();
    let mut detail = Vec::new();
    for w in &witnesses {
        let graph = brute_graph(&w.group);
        let rational = brute_rational(&w.group);
        let solvable = w.group.is_solvable();
        let good = graph == w.figure.graph() && rational && solvable && w.classification.matches_classification;
        ok &= good;
        figures.insert(Figure::of_graph(&graph));
        detail.push(format!("{} → {graph}", w.description));
    }
    ok &= figures.len() == 6 && figures.iter().all(Option::is_some);
    outcome(ok, detail.join("; "))
}

fn orders_6_10_15() -> Outcome {
    let witnesses = find_witnesses().unwrap();
    let tri = witnesses.iter().find(|w| w.figure == Figure::Triangle).unwrap();
    let v = check_orders_6_10_15(&tri.group);
    let orders: Vec<Option<u64>> = v.witnesses.iter().map(|w| w.map(|x| brute_order(&tri.group, x))).collect();
    let ok = v.holds && orders == vec![Some(6), Some(10), Some(15)];
    let shown: Vec<String> = v.witness_display.iter().map(|w| w.clone().unwrap_or_else(|| "none".into())).collect();
    outcome(ok, format!("in {}: {}", tri.description, shown.join(", ")))
}

fn no_325_path() -> Outcome {
    let target: PrimeGraph = "2,3,5:2-3,2-5".parse().unwrap();
    let space = SearchSpace::default_semidirect();
    let negative = search_witness(&target, &space).unwrap();
    let control = search_witness(&"2,5".parse().unwrap(), &space).unwrap();
    let control_ok = control
        .hit
        .as_ref()
        .is_some_and(|h| brute_rational(&h.group) && brute_graph(&h.group) == Figure::TwoFive.graph());
    outcome(
        negative.hit.is_none() && negative.examined == negative.space_size && control_ok,
        format!(
            "examined {} of {} candidates, none found; control target {{2,5}} found: {control_ok}",
            negative.examined, negative.space_size
        ),
    )
}

fn corpus_properties() -> Outcome {
    let corpus = corpus();
    let mut failures: Vec<String> = Vec::new();
    let mut quotients = 0;
    for (name, g) in &corpus {
        let rational = is_rational(g);
        if rational != brute_rational(g) {
            failures.push(format!("{name}: rationality disagrees with brute force"));
        }
        if is_cut(g) != brute_cut(g) {
            failures.push(format!("{name}: cut disagrees with brute force"));
        }
        if rational && !is_cut(g) {
            failures.push(format!("{name}: rational but not cut"));
        }
        if rational != rationality_normalizer_criterion(g) {
            failures.push(format!("{name}: the two rationality criteria disagree"));
        }
        if is_cut(g) && sylow_pair_constraint(g).iter().any(|c| !c.ok) {
            failures.push(format!("{name}: Sylow pair constraint violated"));
        }
        if !rational {
            continue;
        }
        for n in some_normal_subgroups(g) {
            let q = g.quotient(&n).unwrap();
            quotients += 1;
            if !brute_rational(&q.group) {
                failures.push(format!("{name}: quotient by a normal subgroup of order {} is not rational", n.order()));
            }
        }
        if !g.is_solvable() {
            continue;
        }
        let graph = brute_graph(g);
        if !graph.vertices.iter().all(|p| [2, 3, 5].contains(p)) {
            failures.push(format!("{name}: prime outside 2, 3, 5"));
        }
        if g.order() % 5 == 0 {
            if !sylow5_normal_elementary_abelian(g) {
                failures.push(format!("{name}: Sylow 5-subgroup not normal elementary abelian"));
            }
            let v = g.sylow_subgroup(5).unwrap();
            let eig = v.elements().iter().all(|&x| {
                let sq = g.mul(x, x);
                (0..g.order()).any(|y| g.mul(g.mul(g.inv(y), x), y) == sq)
            });
            if !eig {
                failures.push(format!("{name}: eigenvector property fails on the Sylow 5-subgroup"));
            }
        }
    }
    outcome(
        failures.is_empty() && corpus.len() >= 20,
        if failures.is_empty() {
            format!("{} groups, {quotients} quotients of rational groups", corpus.len())
        } else {
            failures.join("; ")
        },
    )
}

/// `α_n(x)` or `β_n(x)` by the definition: the product of `x^{c^k}` for `k = n-1` down to 0.
fn twisted_by_definition(g: &FiniteGroup, c: usize, x: usize, n: u32) -> usize {
    let ci = g.inv(c);
    let mut factors = Vec::new();
    let (mut ck, mut cik) = (g.identity(), g.identity());
    for _ in 0..n {
        factors.push(g.mul(g.mul(cik, x), ck));
        ck = g.mul(ck, c);
        cik = g.mul(cik, ci);
    }
    factors.iter().rev().fold(g.identity(), |acc, &f| g.mul(acc, f))
}

fn power_by_repetition(g: &FiniteGroup, x: usize, n: u32) -> usize {
    (0..n).fold(g.identity(), |acc, _| g.mul(acc, x))
}

fn twisted_checks(g: &FiniteGroup, xs: &[usize], threes: &[usize]) -> (usize, bool) {
    let mut count = 0;
    let mut ok = true;
    for &a in threes {
        let a2 = g.mul(a, a);
        let bs: Vec<usize> = (0..g.order()).filter(|&b| g.mul(g.mul(g.inv(b), a), b) == a2).collect();
        ok &= !bs.is_empty();
        for &x in xs {
            for n in 1..=8 {
                let al = twisted_by_definition(g, a, x, n);
                let be = twisted_by_definition(g, a2, x, n);
                ok &= al == twisted_power_factor(g, a, x, n, TwistVariant::Alpha);
                ok &= be == twisted_power_factor(g, a, x, n, TwistVariant::Beta);
                ok &= power_by_repetition(g, g.mul(a, x), n) == g.mul(power_by_repetition(g, a, n), al);
                ok &= power_by_repetition(g, g.mul(a2, x), n) == g.mul(power_by_repetition(g, a, 2 * n), be);
                for &b in &bs {
                    let xb = g.mul(g.mul(g.inv(b), x), b);
                    ok &= g.mul(g.mul(g.inv(b), be), b) == twisted_by_definition(g, a, xb, n);
                    count += 1;
                }
                count += 1;
            }
        }
    }
    (count, ok)
}

fn twisted_identities() -> Outcome {
    let gl = general_linear(2, 5).unwrap();
    let c = build_case(CaseTag::C).unwrap();
    let sl: Vec<usize> = c.group().elements().iter().map(|e| gl.require(e).unwrap()).collect();
    let threes: Vec<usize> = sl.iter().copied().filter(|&x| brute_order(&gl, x) == 3).collect();
    let (n1, ok1) = twisted_checks(&gl, &sl, &threes);
    let d = build_case(CaseTag::D).unwrap();
    let g = d.group();
    let all: Vec<usize> = (0..g.order()).collect();
    let threes: Vec<usize> = all.iter().copied().filter(|&x| brute_order(g, x) == 3).collect();
    let (n2, ok2) = twisted_checks(g, &all, &threes);
    outcome(
        ok1 && ok2,
        format!("SL(2,3) with b in GL(2,5): {n1} checks; <α,β,γ>: {n2} checks; n ≤ 8"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("μ_u⁻¹μ_v equals the stated matrix and lies outside L_2·C(α)_2", mu_quotient_reproduced),
        ("u and v lie in different orbits of <α,β,γ> and <α,β,γ²>", orbits_separate),
        ("μ_u and μ_v are the unique doubling elements", doubling_elements_unique),
        ("C(α)_2 is generated by the stated words and is normal", centralizer_sylow2),
        ("SL(2,3) acting on GF(5)^2", sl23_census),
        ("C3 ⋊ C4 acting on GF(5)^2", case_b_census),
        ("Brauer rationality, eigenvector property and simplicity of the five modules", module_premises),
        ("six solvable rational witnesses realize the six prime graphs", six_witnesses),
        ("triangle witness has elements of orders 6, 10 and 15", orders_6_10_15),
        ("no solvable rational GF(5)^n ⋊ S (n ≤ 2) has prime graph 3-2-5", no_325_path),
        ("property checks on the group corpus", corpus_properties),
        ("twisted power identities for n ≤ 8", twisted_identities),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        if !result.ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {name} [{}]",
            k + 1,
            if result.ok { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
