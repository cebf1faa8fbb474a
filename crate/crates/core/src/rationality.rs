//! Whole-group predicates: rational, cut, prime graph, and the solvable-rational classification.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{Figure, PrimeGraph};
use crate::group::{FiniteGroup, Subgroup};
use crate::numtheory::{euler_phi, is_prime_power_of};

/// One record per conjugacy class of cyclic subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicRecord {
    pub generator: usize,
    pub generator_display: String,
    pub order: u64,
    pub phi: u64,
    /// Number of conjugacy classes met by the generators of `<g>`.
    pub generator_classes: usize,
    /// `[N_G(<g>) : C_G(g)]`.
    pub normalizer_index: u64,
    pub cut_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalityReport {
    pub group_order: usize,
    pub records: Vec<CyclicRecord>,
    pub rational: bool,
    pub cut: bool,
    /// Verdict of the normalizer/centralizer index criterion.
    pub normalizer_criterion: bool,
}

fn class_checks(g: &FiniteGroup) -> Vec<(usize, usize, bool)> {
    let classes = g.conjugacy_classes();
    classes
        .representatives
        .par_iter()
        .map(|&x| {
            let gens = g.generators_of_cyclic(x);
            let own = classes.class_of[x];
            let inv = classes.class_of[g.inv(x)];
            let met: BTreeSet<usize> = gens.iter().map(|&y| classes.class_of[y]).collect();
            let cut_ok = met.iter().all(|&c| c == own || c == inv);
            (x, met.len(), cut_ok)
        })
        .collect()
}

/// All generators of every cyclic subgroup are conjugate.
pub fn is_rational(g: &FiniteGroup) -> bool {
    class_checks(g).iter().all(|&(_, met, _)| met == 1)
}

/// Every generator of `<x>` is conjugate to `x` or `x^{-1}`.
pub fn is_cut(g: &FiniteGroup) -> bool {
    class_checks(g).iter().all(|&(_, _, cut)| cut)
}

/// `[N_G(<x>) : C_G(x)]` by direct counting, without conjugacy classes.
pub fn normalizer_centralizer_index(g: &FiniteGroup, x: usize) -> u64 {
    let cyc: BTreeSet<usize> = g.cyclic(x).into_iter().collect();
    let (norm, cent) = (0..g.order())
        .into_par_iter()
        .map(|y| {
            let c = g.conj(x, y);
            (cyc.contains(&c) as u64, (c == x) as u64)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    norm / cent
}

/// `[N_G(<x>) : C_G(x)] = φ(|x|)` for every `x` (checked on one element per class).
pub fn rationality_normalizer_criterion(g: &FiniteGroup) -> bool {
    g.conjugacy_classes()
        .representatives
        .iter()
        .all(|&x| normalizer_centralizer_index(g, x) == euler_phi(g.element_order(x)))
}

pub fn rationality_report(g: &FiniteGroup) -> RationalityReport {
    let classes = g.conjugacy_classes();
    let checks = class_checks(g);
    let mut covered: BTreeSet<usize> = BTreeSet::new();
    let mut records = Vec::new();
    let mut normalizer_criterion = true;
    for &(x, met, cut_ok) in &checks {
        let k = g.element_order(x);
        let index = normalizer_centralizer_index(g, x);
        let phi = euler_phi(k);
        normalizer_criterion &= index == phi;
        if covered.contains(&classes.class_of[x]) {
            continue;
        }
        for y in g.generators_of_cyclic(x) {
            covered.insert(classes.class_of[y]);
        }
        records.push(CyclicRecord {
            generator: x,
            generator_display: g.element(x).to_string(),
            order: k,
            phi,
            generator_classes: met,
            normalizer_index: index,
            cut_ok,
        });
    }
    RationalityReport {
        group_order: g.order(),
        rational: checks.iter().all(|c| c.1 == 1),
        cut: checks.iter().all(|c| c.2),
        records,
        normalizer_criterion,
    }
}

pub fn gk_graph(g: &FiniteGroup) -> PrimeGraph {
    PrimeGraph::of_group(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub order: usize,
    pub graph: PrimeGraph,
    pub is_trivial: bool,
    pub is_solvable: bool,
    pub is_rational: bool,
    pub figure: Option<Figure>,
    pub matches_classification: bool,
    /// Why the group falls outside the classification, when it does.
    pub reason: Option<String>,
}

/// Non-trivial, solvable, rational, and with one of the six prime graphs.
pub fn classify_rational_solvable(g: &FiniteGroup) -> Classification {
    let graph = gk_graph(g);
    let is_trivial = g.order() == 1;
    let is_solvable = g.is_solvable();
    let is_rational = is_rational(g);
    let figure = Figure::of_graph(&graph);
    let reason = if is_trivial {
        Some("trivial group".to_string())
    } else if !is_solvable {
        Some("not solvable".to_string())
    } else if !is_rational {
        Some("not rational".to_string())
    } else if figure.is_none() {
        Some(format!("prime graph {graph} is not one of the six"))
    } else {
        None
    };
    Classification {
        order: g.order(),
        graph,
        is_trivial,
        is_solvable,
        is_rational,
        figure,
        matches_classification: reason.is_none(),
        reason,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedOrdersVerdict {
    /// Set when solvable, rational and `15 | |G|` do not all hold.
    pub unmet_precondition: Option<String>,
    /// First element (id order) of order 6, 10 and 15 respectively.
    pub witnesses: [Option<usize>; 3],
    pub witness_display: [Option<String>; 3],
    pub holds: bool,
}

/// Solvable rational groups of order divisible by 15 contain elements of orders 6, 10 and 15.
pub fn check_orders_6_10_15(g: &FiniteGroup) -> MixedOrdersVerdict {
    let unmet = if g.order() % 15 != 0 {
        Some("15 does not divide the group order".to_string())
    } else if !g.is_solvable() {
        Some("not solvable".to_string())
    } else if !is_rational(g) {
        Some("not rational".to_string())
    } else {
        None
    };
    let orders = g.orders();
    let find = |k: u64| (0..g.order()).find(|&x| orders[x] == k);
    let witnesses = [find(6), find(10), find(15)];
    let witness_display = witnesses.map(|w| w.map(|x| g.element(x).to_string()));
    MixedOrdersVerdict {
        holds: unmet.is_none() && witnesses.iter().all(Option::is_some),
        unmet_precondition: unmet,
        witnesses,
        witness_display,
    }
}

pub fn is_elementary_abelian(g: &FiniteGroup, h: &Subgroup, p: u64) -> bool {
    let gens = h.generators();
    let abelian = gens
        .iter()
        .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    abelian && h.elements().iter().all(|&x| x == g.identity() || g.element_order(x) == p)
}

/// The Sylow 5-subgroup is normal and elementary abelian.
pub fn sylow5_normal_elementary_abelian(g: &FiniteGroup) -> bool {
    let p5 = g.sylow_subgroup(5).expect("5 is prime");
    g.is_normal(&p5) && is_elementary_abelian(g, &p5, 5)
}

/// For every `v` in the normal subgroup `v_sub` some `g` has `v^g = v^2`.
pub fn conjugation_eigenvector_property(g: &FiniteGroup, v_sub: &Subgroup) -> bool {
    v_sub.elements().par_iter().all(|&v| {
        let sq = g.mul(v, v);
        (0..g.order()).any(|x| g.conj(v, x) == sq)
    })
}

/// Outcome of the Sylow-pair constraint for cut groups on one ordered pair of primes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowPairCheck {
    pub p: u64,
    pub q: u64,
    pub sylow_q_order: usize,
    pub ok: bool,
}

/// For a cut group: whenever `G_p` is normal and there is no element of
/// order `pq`, `G_q` is `Q8` or cyclic of order dividing 4 or `q`.
/// Returns one check per pair where the hypotheses hold.
pub fn sylow_pair_constraint(g: &FiniteGroup) -> Vec<SylowPairCheck> {
    let graph = gk_graph(g);
    let primes: Vec<u64> = graph.vertices.iter().copied().collect();
    let mut out = Vec::new();
    for &p in &primes {
        let gp = g.sylow_subgroup(p).expect("prime");
        if !g.is_normal(&gp) {
            continue;
        }
        for &q in &primes {
            if q == p || graph.has_edge(p, q) {
                continue;
            }
            let gq = g.sylow_subgroup(q).expect("prime");
            let n = gq.order() as u64;
            let orders: Vec<u64> = gq.elements().iter().map(|&x| g.element_order(x)).collect();
            let cyclic = orders.iter().any(|&o| o == n);
            let involutions = orders.iter().filter(|&&o| o == 2).count();
            let quaternion = n == 8 && involutions == 1 && !cyclic;
            let small_cyclic = cyclic && (4 % n == 0 || q % n == 0);
            out.push(SylowPairCheck {
                p,
                q,
                sylow_q_order: gq.order(),
                ok: quaternion || small_cyclic,
            });
        }
    }
    out
}

/// Every vertex of the prime graph lies in `{2, 3, 5}`.
pub fn vertices_within_235(g: &FiniteGroup) -> bool {
    gk_graph(g).vertices.iter().all(|p| [2, 3, 5].contains(p))
}

/// Whether `x` is a `p`-element.
pub fn is_p_element(g: &FiniteGroup, x: usize, p: u64) -> bool {
    is_prime_power_of(g.element_order(x), p)
}
