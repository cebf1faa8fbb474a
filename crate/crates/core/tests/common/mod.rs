#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use ratgk::construct::{cyclic, direct_product, named_group, semidirect_product};
use ratgk::facts::{build_case, v_rtimes_q8, CaseTag};
use ratgk::fp::{FpMatrix, FpVector};
use ratgk::graph::PrimeGraph;
use ratgk::group::{FiniteGroup, Subgroup};
use ratgk::module::ModuleAction;

/// Small groups used by the property checks, all of order at most 400.
pub fn corpus() -> Vec<(String, FiniteGroup)> {
    let named = [
        "C1", "C2", "C3", "C4", "C5", "C6", "S3", "S4", "D8", "D10", "D12", "Q8", "A4", "C3:C4", "SL(2,3)",
        "GL(2,3)", "A5",
    ];
    let mut out: Vec<(String, FiniteGroup)> = named
        .iter()
        .map(|n| (n.to_string(), named_group(n).unwrap()))
        .collect();
    let g = |n: &str| named_group(n).unwrap();
    let dp = |a: &FiniteGroup, b: &FiniteGroup| direct_product(a, b).unwrap();
    out.push(("C2 x C2".into(), dp(&g("C2"), &g("C2"))));
    out.push(("C2 x C2 x C2".into(), dp(&dp(&g("C2"), &g("C2")), &g("C2"))));
    out.push(("S3 x C2".into(), dp(&g("S3"), &g("C2"))));
    out.push(("S3 x C3".into(), dp(&g("S3"), &g("C3"))));
    out.push(("S3 x S3".into(), dp(&g("S3"), &g("S3"))));
    out.push(("Q8 x C2".into(), dp(&g("Q8"), &g("C2"))));
    out.push(("S4 x C2".into(), dp(&g("S4"), &g("C2"))));
    out.push(("D10 x S3".into(), dp(&g("D10"), &g("S3"))));
    out.push(("GF(5) x| C4".into(), affine_line(4, 2)));
    out.push(("GF(5) x| C2".into(), affine_line(2, 4)));
    out.push(("GF(5)^2 x| Q8".into(), v_rtimes_q8().unwrap()));
    let b = build_case(CaseTag::B).unwrap();
    out.push(("GF(5)^2 x| C3:C4".into(), semidirect_product(b.action().clone()).unwrap()));
    out
}

/// `GF(5) ⋊ C_k` with the generator of `C_k` acting by multiplication by `unit`.
pub fn affine_line(k: usize, unit: u32) -> FiniteGroup {
    let c = Arc::new(cyclic(k).unwrap());
    let act = ModuleAction::from_generator_images(c, &[FpMatrix::from_array(5, [[unit]])]).unwrap();
    semidirect_product(Arc::new(act)).unwrap()
}

/// Normal subgroups found from the derived series, the center and normal closures of single elements.
pub fn some_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = Vec::new();
    let mut push = |h: Subgroup| {
        if !out.iter().any(|k| k.same_elements(&h)) {
            out.push(h);
        }
    };
    for h in g.derived_series() {
        push(h);
    }
    push(g.center());
    for &x in &g.conjugacy_classes().representatives {
        push(g.normal_closure(&[x]));
    }
    out
}

/// Element order by repeated multiplication.
pub fn brute_order(g: &FiniteGroup, x: usize) -> u64 {
    let mut k = 1;
    let mut y = x;
    while y != g.identity() {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Conjugates of `x`, by direct conjugation with every element.
fn conjugates(g: &FiniteGroup, x: usize) -> HashSet<usize> {
    (0..g.order())
        .map(|y| g.mul(g.mul(g.inv(y), x), y))
        .collect()
}

fn power(g: &FiniteGroup, x: usize, m: u64) -> usize {
    (0..m).fold(g.identity(), |acc, _| g.mul(acc, x))
}

/// Rational: every coprime power of `x` is conjugate to `x`.
pub fn brute_rational(g: &FiniteGroup) -> bool {
    let mut done = vec![false; g.order()];
    for x in 0..g.order() {
        if done[x] {
            continue;
        }
        let conj = conjugates(g, x);
        for &y in &conj {
            done[y] = true;
        }
        let k = brute_order(g, x);
        if !(1..=k).filter(|&m| gcd(m, k) == 1).all(|m| conj.contains(&power(g, x, m))) {
            return false;
        }
    }
    true
}

/// Cut: every coprime power of `x` is conjugate to `x` or to `x^{-1}`.
pub fn brute_cut(g: &FiniteGroup) -> bool {
    (0..g.order()).all(|x| {
        let conj = conjugates(g, x);
        let conj_inv = conjugates(g, g.inv(x));
        let k = brute_order(g, x);
        (1..=k).filter(|&m| gcd(m, k) == 1).all(|m| {
            let y = power(g, x, m);
            conj.contains(&y) || conj_inv.contains(&y)
        })
    })
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Prime graph from element orders computed by repeated multiplication.
pub fn brute_graph(g: &FiniteGroup) -> PrimeGraph {
    let orders: BTreeSet<u64> = (0..g.order()).map(|x| brute_order(g, x)).collect();
    let mut graph = PrimeGraph::new(prime_factors(g.order() as u64), []);
    for o in orders {
        let ps = prime_factors(o);
        for (i, &p) in ps.iter().enumerate() {
            for &q in &ps[i + 1..] {
                graph.add_edge(p, q);
            }
        }
    }
    graph
}

/// All products of the generators, closed under multiplication.
pub fn matrix_closure(gens: &[FpMatrix]) -> Vec<FpMatrix> {
    let one = FpMatrix::identity(gens[0].prime(), gens[0].dim());
    let mut seen: HashSet<FpMatrix> = HashSet::from([one.clone()]);
    let mut queue = VecDeque::from([one.clone()]);
    let mut out = vec![one];
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                queue.push_back(y.clone());
                out.push(y);
            }
        }
    }
    out
}

pub fn matrix_order(m: &FpMatrix) -> u64 {
    let mut k = 1;
    let mut x = m.clone();
    while !x.is_identity() {
        x = x.mul(m);
        k += 1;
    }
    k
}

pub fn vector_orbit(v: &FpVector, gens: &[FpMatrix]) -> BTreeSet<FpVector> {
    let mut seen = BTreeSet::from([v.clone()]);
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let x = w.mul_mat(g);
            if seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
    }
    seen
}

/// Rank of a list of vectors over GF(p) by plain row reduction.
pub fn rank(vectors: &[FpVector]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let p = first.prime() as u64;
    let mut rows: Vec<Vec<u64>> = vectors
        .iter()
        .map(|v| v.entries().iter().map(|&x| x as u64).collect())
        .collect();
    let cols = first.dim();
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pivot);
        let inv = (1..p).find(|&x| x * rows[r][c] % p == 1).unwrap();
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + p * p - f * rows[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence, valid when
/// the dimension is smaller than `p`. Coefficients from the constant term up.
pub fn charpoly_faddeev(m: &FpMatrix) -> Vec<u32> {
    let n = m.dim();
    let p = m.prime();
    assert!((n as u32) < p, "recurrence divides by 1..n");
    let inv = |k: u32| (1..p).find(|&x| x * k % p == 1).unwrap();
    let mut coeffs = vec![0u32; n + 1];
    coeffs[n] = 1;
    let mut mk = FpMatrix::identity(p, n);
    for k in 1..=n {
        let am = m.mul(&mk);
        // c_{n-k} = -tr(A M_k) / k
        let c = (p - am.trace() % p) % p * inv(k as u32 % p) % p;
        coeffs[n - k] = c;
        mk = am.add(&FpMatrix::scalar(p, n, c));
    }
    coeffs
}
