//! Prime graphs (Gruenberg–Kegel graphs) and the six solvable-rational shapes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;
use crate::numtheory::prime_divisors;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeGraph {
    pub vertices: BTreeSet<u64>,
    /// Unordered edges stored as `(smaller, larger)`.
    pub edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    pub fn new(vertices: impl IntoIterator<Item = u64>, edges: impl IntoIterator<Item = (u64, u64)>) -> PrimeGraph {
        let mut g = PrimeGraph {
            vertices: vertices.into_iter().collect(),
            edges: BTreeSet::new(),
        };
        for (p, q) in edges {
            g.add_edge(p, q);
        }
        g
    }

    pub fn add_edge(&mut self, p: u64, q: u64) {
        assert_ne!(p, q, "prime graph edges join distinct primes");
        self.vertices.insert(p);
        self.vertices.insert(q);
        self.edges.insert((p.min(q), p.max(q)));
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }

    /// Gruenberg–Kegel graph of `g`: an element whose order is divisible by
    /// `pq` has a power of order exactly `pq`, so each element order
    /// contributes all pairs of its prime divisors.
    pub fn of_group(g: &FiniteGroup) -> PrimeGraph {
        let mut graph = PrimeGraph::new(prime_divisors(g.order() as u64), []);
        let orders: BTreeSet<u64> = g.orders().iter().copied().collect();
        for o in orders {
            let ps = prime_divisors(o);
            for (i, &p) in ps.iter().enumerate() {
                for &q in &ps[i + 1..] {
                    graph.add_edge(p, q);
                }
            }
        }
        graph
    }

    /// Graphviz rendering: nodes in ascending prime order, undirected edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph GK {\n");
        for v in &self.vertices {
            out.push_str(&format!("  {v} [label=\"{v}\"];\n"));
        }
        for (p, q) in &self.edges {
            out.push_str(&format!("  {p} -- {q};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for PrimeGraph {
    /// `2,3,5:2-3,2-5`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        let es: Vec<String> = self.edges.iter().map(|(p, q)| format!("{p}-{q}")).collect();
        write!(f, "{}:{}", vs.join(","), es.join(","))
    }
}

impl FromStr for PrimeGraph {
    type Err = String;

    /// Parses `vertices:edges`, e.g. `2,3,5:2-3,2-5`; the edge part may be empty.
    fn from_str(s: &str) -> Result<PrimeGraph, String> {
        let (vs, es) = s.split_once(':').unwrap_or((s, ""));
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .ok()
                .filter(|&p| crate::numtheory::is_prime(p))
                .ok_or_else(|| format!("bad prime `{t}`"))
        };
        let mut g = PrimeGraph::default();
        for v in vs.split(',').filter(|t| !t.trim().is_empty()) {
            g.vertices.insert(parse(v)?);
        }
        for e in es.split(',').filter(|t| !t.trim().is_empty()) {
            let (p, q) = e.split_once('-').ok_or_else(|| format!("bad edge `{e}`"))?;
            let (p, q) = (parse(p)?, parse(q)?);
            if p == q {
                return Err(format!("loop edge `{e}`"));
            }
            if !g.vertices.contains(&p) || !g.vertices.contains(&q) {
                return Err(format!("edge `{e}` joins an unlisted vertex"));
            }
            g.add_edge(p, q);
        }
        Ok(g)
    }
}

/// The six prime graphs realized by non-trivial solvable rational groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Figure {
    Two,
    TwoThree,
    TwoThreeJoined,
    TwoFive,
    TwoFiveJoined,
    Triangle,
}

impl Figure {
    pub const ALL: [Figure; 6] = [
        Figure::Two,
        Figure::TwoThree,
        Figure::TwoThreeJoined,
        Figure::TwoFive,
        Figure::TwoFiveJoined,
        Figure::Triangle,
    ];

    pub fn graph(self) -> PrimeGraph {
        match self {
            Figure::Two => PrimeGraph::new([2], []),
            Figure::TwoThree => PrimeGraph::new([2, 3], []),
            Figure::TwoThreeJoined => PrimeGraph::new([2, 3], [(2, 3)]),
            Figure::TwoFive => PrimeGraph::new([2, 5], []),
            Figure::TwoFiveJoined => PrimeGraph::new([2, 5], [(2, 5)]),
            Figure::Triangle => PrimeGraph::new([2, 3, 5], [(2, 3), (2, 5), (3, 5)]),
        }
    }

    /// Matches on labelled primes, not abstract shape.
    pub fn of_graph(g: &PrimeGraph) -> Option<Figure> {
        Figure::ALL.into_iter().find(|f| f.graph() == *g)
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Figure::Two => "{2}",
            Figure::TwoThree => "{2,3} edgeless",
            Figure::TwoThreeJoined => "2-3",
            Figure::TwoFive => "{2,5} edgeless",
            Figure::TwoFiveJoined => "2-5",
            Figure::Triangle => "triangle 2-3-5",
        };
        write!(f, "{s}")
    }
}
