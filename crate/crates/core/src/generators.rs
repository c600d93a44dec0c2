//! Deterministic instance families and seeded random graphs.
//!
//! Random graphs use xoshiro256** seeded through SplitMix64
//! (`Xoshiro256StarStar::seed_from_u64`). For `random`, each pair `u < v`
//! in lexicographic order draws one `u64` `x` and becomes an edge iff
//! `x % p_den < p_num`. For `forest`, each vertex `v ≥ 1` draws `x`; if
//! `x % 4 != 0` it gets the edge `{v, (x >> 2) % v}`. `tree` always adds
//! `{v, x % v}`.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn cycle(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 3")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// K_{1,leaves}, center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edge_list(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// `h` joined to `p` disjoint copies of K2. Vertices of `h` keep their
/// labels; copy `i` is `{|h| + 2i, |h| + 2i + 1}`.
///
/// With `p ≥ |V(h)| + 1`, δ = |V(h)| + 1 and α = p, and every pseudo
/// 2-factor has at least `p − |V(h)|` non-cycle components.
pub fn gen_g1(h: &Graph, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::Generator {
            spec: format!("g1 p={p}"),
            msg: "p must be at least 1".into(),
        });
    }
    let base = h.n();
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    for i in 0..p {
        let (a, b) = (base + 2 * i, base + 2 * i + 1);
        edges.push((a, b));
        for v in 0..base {
            edges.push((v, a));
            edges.push((v, b));
        }
    }
    Graph::from_edge_list(base + 2 * p, edges)
}

/// Vertex layout of [`gen_g2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G2Layout {
    pub v1: usize,
    pub v2: usize,
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
    pub b: Vec<usize>,
}

impl G2Layout {
    pub fn new(k: usize, ell: usize) -> Self {
        G2Layout {
            v1: 0,
            v2: 1,
            a1: (2..2 + k).collect(),
            a2: (2 + k..2 + 2 * k).collect(),
            b: (2 + 2 * k..2 + 2 * k + ell).collect(),
        }
    }
}

/// Two independent k-sets A₁, A₂, a clique B on `ell ≥ 2k` vertices, and
/// vertices v₁, v₂; each Aᵢ is joined to B ∪ {vᵢ}. Numbering: v₁ = 0,
/// v₂ = 1, then A₁, A₂, B (see [`G2Layout`]).
pub fn gen_g2(k: usize, ell: usize) -> Result<Graph> {
    if k == 0 || ell < 2 * k {
        return Err(Error::Generator {
            spec: format!("g2:k={k},l={ell}"),
            msg: "need k >= 1 and l >= 2k".into(),
        });
    }
    let l = G2Layout::new(k, ell);
    let mut edges = Vec::new();
    for (i, &u) in l.b.iter().enumerate() {
        for &w in &l.b[i + 1..] {
            edges.push((u, w));
        }
    }
    for (side, v) in [(&l.a1, l.v1), (&l.a2, l.v2)] {
        for &a in side {
            edges.push((a, v));
            for &b in &l.b {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(2 + 2 * k + ell, edges)
}

/// The 22-vertex graph separating minimum non-cycle pseudo 2-factors from
/// maximum 2-regular subgraphs. Numbering: v₁..v₆ = 0..5, u₁..u₇ = 6..12,
/// w₁..w₉ = 13..21.
pub fn gen_fig3() -> Graph {
    let v = |i: usize| i - 1;
    let u = |i: usize| 5 + i;
    let w = |i: usize| 12 + i;
    let mut edges = Vec::new();
    for i in 1..6 {
        edges.push((v(i), v(i + 1)));
    }
    // v1 w1 .. w9 v6
    let wchain: Vec<usize> = std::iter::once(v(1))
        .chain((1..=9).map(w))
        .chain([v(6)])
        .collect();
    // v1 u1 .. u7 v6
    let uchain: Vec<usize> = std::iter::once(v(1))
        .chain((1..=7).map(u))
        .chain([v(6)])
        .collect();
    for chain in [&wchain, &uchain] {
        edges.extend(chain.windows(2).map(|p| (p[0], p[1])));
    }
    edges.extend([(w(2), w(4)), (w(6), w(8)), (u(3), u(5))]);
    Graph::from_edge_list(22, edges).unwrap()
}

pub fn gen_random(n: usize, p_num: u64, p_den: u64, seed: u64) -> Result<Graph> {
    if p_den == 0 || p_num > p_den {
        return Err(Error::Generator {
            spec: format!("random:n={n},p={p_num}/{p_den}"),
            msg: "need 0 <= p_num <= p_den and p_den > 0".into(),
        });
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.next_u64() % p_den < p_num {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(n, edges)
}

pub fn gen_random_forest(n: usize, seed: u64) -> Graph {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        let x = rng.next_u64();
        if x % 4 != 0 {
            edges.push((v, ((x >> 2) % v as u64) as usize));
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

pub fn gen_random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let edges: Vec<_> = (1..n)
        .map(|v| (v, (rng.next_u64() % v as u64) as usize))
        .collect();
    Graph::from_edge_list(n, edges).unwrap()
}

/// Small named graphs usable as the `h` of [`gen_g1`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Complete(usize),
    Path(usize),
    Cycle(usize),
}

impl Base {
    pub fn graph(&self) -> Graph {
        match *self {
            Base::Complete(n) => complete(n),
            Base::Path(n) => path(n),
            Base::Cycle(n) => cycle(n),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Complete(n) => write!(f, "k{n}"),
            Base::Path(n) => write!(f, "p{n}"),
            Base::Cycle(n) => write!(f, "c{n}"),
        }
    }
}

/// A generator invocation, written `family:key=value,...` on the command
/// line, e.g. `g2:k=2,l=4`, `g1:h=k1,p=3`, `random:n=10,p=1/2,seed=7`,
/// `cycle:5`, `fig3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    G1 {
        h: Base,
        p: usize,
    },
    G2 {
        k: usize,
        ell: usize,
    },
    Fig3,
    RandomGraph {
        n: usize,
        p_num: u64,
        p_den: u64,
        seed: u64,
    },
    RandomForest {
        n: usize,
        seed: u64,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
    Cycle(usize),
    Complete(usize),
    Path(usize),
    Star(usize),
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            GeneratorSpec::G1 { h, p } => gen_g1(&h.graph(), p),
            GeneratorSpec::G2 { k, ell } => gen_g2(k, ell),
            GeneratorSpec::Fig3 => Ok(gen_fig3()),
            GeneratorSpec::RandomGraph {
                n,
                p_num,
                p_den,
                seed,
            } => gen_random(n, p_num, p_den, seed),
            GeneratorSpec::RandomForest { n, seed } => Ok(gen_random_forest(n, seed)),
            GeneratorSpec::RandomTree { n, seed } => Ok(gen_random_tree(n, seed)),
            GeneratorSpec::Cycle(n) => Ok(cycle(n)),
            GeneratorSpec::Complete(n) => Ok(complete(n)),
            GeneratorSpec::Path(n) => Ok(path(n)),
            GeneratorSpec::Star(n) => Ok(star(n)),
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            GeneratorSpec::G1 { .. } => "g1",
            GeneratorSpec::G2 { .. } => "g2",
            GeneratorSpec::Fig3 => "fig3",
            GeneratorSpec::RandomGraph { .. } => "random",
            GeneratorSpec::RandomForest { .. } => "forest",
            GeneratorSpec::RandomTree { .. } => "tree",
            GeneratorSpec::Cycle(_) => "cycle",
            GeneratorSpec::Complete(_) => "complete",
            GeneratorSpec::Path(_) => "path",
            GeneratorSpec::Star(_) => "star",
        }
    }

    /// The part after `family:`.
    pub fn params(&self) -> String {
        match self {
            GeneratorSpec::G1 { h, p } => format!("h={h},p={p}"),
            GeneratorSpec::G2 { k, ell } => format!("k={k},l={ell}"),
            GeneratorSpec::Fig3 => String::new(),
            GeneratorSpec::RandomGraph {
                n,
                p_num,
                p_den,
                seed,
            } => format!("n={n},p={p_num}/{p_den},seed={seed}"),
            GeneratorSpec::RandomForest { n, seed } | GeneratorSpec::RandomTree { n, seed } => {
                format!("n={n},seed={seed}")
            }
            GeneratorSpec::Cycle(n)
            | GeneratorSpec::Complete(n)
            | GeneratorSpec::Path(n)
            | GeneratorSpec::Star(n) => n.to_string(),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            write!(f, "{}", self.family())
        } else {
            write!(f, "{}:{}", self.family(), params)
        }
    }
}

impl FromStr for Base {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (kind, n) = s.split_at(1.min(s.len()));
        let n: usize = n.parse().map_err(|_| format!("bad base graph `{s}`"))?;
        match kind {
            "k" if n >= 1 => Ok(Base::Complete(n)),
            "p" if n >= 1 => Ok(Base::Path(n)),
            "c" if n >= 3 => Ok(Base::Cycle(n)),
            _ => Err(format!("bad base graph `{s}` (use kN, pN or cN)")),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let err = |msg: String| Error::Generator {
            spec: spec.to_string(),
            msg,
        };
        let (family, rest) = spec.split_once(':').unwrap_or((spec, ""));
        let mut kv = std::collections::BTreeMap::new();
        let mut positional = None;
        for item in rest.split(',').filter(|s| !s.is_empty()) {
            match item.split_once('=') {
                Some((k, v)) => {
                    kv.insert(k.trim(), v.trim());
                }
                None => positional = Some(item.trim()),
            }
        }
        let num = |key: &str| -> Result<u64> {
            let raw = kv
                .get(key)
                .copied()
                .ok_or_else(|| err(format!("missing `{key}`")))?;
            raw.parse()
                .map_err(|_| err(format!("`{key}={raw}` is not an integer")))
        };
        let count = |key: &str| num(key).map(|v| v as usize);
        let size = || -> Result<usize> {
            let raw = positional
                .or_else(|| kv.get("n").copied())
                .ok_or_else(|| err("missing size".into()))?;
            raw.parse()
                .map_err(|_| err(format!("`{raw}` is not an integer")))
        };
        let seed = || -> Result<u64> {
            if kv.contains_key("seed") {
                num("seed")
            } else {
                Ok(0)
            }
        };
        let parsed = match family {
            "fig3" => GeneratorSpec::Fig3,
            "g1" => {
                let h = kv
                    .get("h")
                    .copied()
                    .ok_or_else(|| err("missing `h`".into()))?;
                let p = count("p")?;
                if p == 0 {
                    return Err(err("p must be at least 1".into()));
                }
                GeneratorSpec::G1 {
                    h: h.parse().map_err(err)?,
                    p,
                }
            }
            "g2" => {
                let k = count("k")?;
                let ell = if kv.contains_key("l") {
                    count("l")?
                } else {
                    2 * k
                };
                GeneratorSpec::G2 { k, ell }
            }
            "random" => {
                let (p_num, p_den) = match kv.get("p") {
                    None => (1, 2),
                    Some(p) => {
                        let (a, b) = p.split_once('/').unwrap_or((p, "1"));
                        match (a.parse(), b.parse()) {
                            (Ok(a), Ok(b)) => (a, b),
                            _ => return Err(err(format!("bad probability `{p}`"))),
                        }
                    }
                };
                GeneratorSpec::RandomGraph {
                    n: size()?,
                    p_num,
                    p_den,
                    seed: seed()?,
                }
            }
            "forest" => GeneratorSpec::RandomForest {
                n: size()?,
                seed: seed()?,
            },
            "tree" => GeneratorSpec::RandomTree {
                n: size()?,
                seed: seed()?,
            },
            "cycle" => {
                let n = size()?;
                if n < 3 {
                    return Err(err("a cycle needs at least 3 vertices".into()));
                }
                GeneratorSpec::Cycle(n)
            }
            "complete" => GeneratorSpec::Complete(size()?),
            "path" => GeneratorSpec::Path(size()?),
            "star" => GeneratorSpec::Star(size()?),
            other => return Err(err(format!("unknown family `{other}`"))),
        };
        if let GeneratorSpec::G2 { k, ell } = parsed {
            if k == 0 || ell < 2 * k {
                return Err(err("need k >= 1 and l >= 2k".into()));
            }
        }
        if let GeneratorSpec::RandomGraph { p_num, p_den, .. } = parsed {
            if p_den == 0 || p_num > p_den {
                return Err(err("need 0 <= p_num <= p_den and p_den > 0".into()));
            }
        }
        Ok(parsed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Budgets;
    use crate::deficiency::{classical_bound, compute_f, max_independent_set};
    use crate::vertex_set::VertexSet;

    #[test]
    fn g1_k1_p2() {
        let g = gen_g1(&complete(1), 2).unwrap();
        assert_eq!((g.n(), g.m()), (5, 6));
        assert_eq!(g.min_degree(), Some(2));
        assert_eq!(
            max_independent_set(&g, &Budgets::default()).unwrap().len(),
            2
        );
    }

    #[test]
    fn g1_k2_p3() {
        let g = gen_g1(&complete(2), 3).unwrap();
        assert_eq!(g.min_degree(), Some(3));
        assert_eq!(
            max_independent_set(&g, &Budgets::default()).unwrap().len(),
            3
        );
    }

    #[test]
    fn g2_values() {
        let b = Budgets::default();
        for (k, classical) in [(2, 3), (3, 4)] {
            let g = gen_g2(k, 2 * k).unwrap();
            assert_eq!(compute_f(&g, &b).unwrap().f_value, 2);
            assert_eq!(classical_bound(&g, &b).unwrap(), classical);
        }
        assert!(gen_g2(2, 3).is_err());
        assert!(gen_g2(0, 3).is_err());
    }

    #[test]
    fn g2_layout_min_degree_at_v1() {
        let g = gen_g2(2, 4).unwrap();
        let l = G2Layout::new(2, 4);
        assert_eq!(g.degree(l.v1), 2);
        let s = VertexSet::from_iter_in(g.n(), l.a2.iter().copied().chain([l.v1]));
        assert!(g.is_independent(&s));
        assert_eq!(g.min_degree_of_set(&s), Some(2));
    }

    #[test]
    fn g2_k1_maximal_independent_sets() {
        // k = 1, ell = 2: v1=0, v2=1, a1=2, a2=3, B={4,5}
        let g = gen_g2(1, 2).unwrap();
        let n = g.n();
        let mut maximal = Vec::new();
        for mask in 1u32..1 << n {
            let s = VertexSet::from_iter_in(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            if !g.is_independent(&s) {
                continue;
            }
            let extendable = (0..n).any(|v| {
                let mut t = s.clone();
                t.insert(v) && g.is_independent(&t)
            });
            if !extendable {
                maximal.push(s.to_vec());
            }
        }
        maximal.sort();
        // {v1,v2,b} for each b, {v1} ∪ A2, {v2} ∪ A1, A1 ∪ A2
        assert_eq!(
            maximal,
            vec![
                vec![0, 1, 4],
                vec![0, 1, 5],
                vec![0, 3],
                vec![1, 2],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn fig3_shape() {
        let g = gen_fig3();
        assert_eq!((g.n(), g.m()), (22, 26));
        let deg3: Vec<usize> = (0..22).filter(|&v| g.degree(v) == 3).collect();
        // v1, v6, u3, u5, w2, w4, w6, w8
        assert_eq!(deg3, vec![0, 5, 8, 10, 14, 16, 18, 20]);
        assert_eq!((0..22).filter(|&v| g.degree(v) == 2).count(), 14);
    }

    #[test]
    fn random_edge_cases() {
        assert_eq!(gen_random(0, 1, 2, 1).unwrap().n(), 0);
        assert_eq!(gen_random(7, 0, 3, 1).unwrap().m(), 0);
        assert_eq!(gen_random(7, 3, 3, 1).unwrap().m(), 21);
        assert!(gen_random(3, 4, 3, 1).is_err());
        assert_eq!(
            gen_random(10, 1, 2, 99).unwrap(),
            gen_random(10, 1, 2, 99).unwrap()
        );
    }

    #[test]
    fn forests_are_forests() {
        for seed in 0..50 {
            let f = gen_random_forest(12, seed);
            assert!(f.is_forest(&f.vertices()));
            let t = gen_random_tree(12, seed);
            assert_eq!(t.m(), 11);
            assert!(t.is_forest(&t.vertices()));
        }
    }

    #[test]
    fn spec_parsing() {
        let cases = [
            ("fig3", GeneratorSpec::Fig3),
            ("cycle:5", GeneratorSpec::Cycle(5)),
            ("g2:k=2,l=4", GeneratorSpec::G2 { k: 2, ell: 4 }),
            (
                "g1:h=k1,p=2",
                GeneratorSpec::G1 {
                    h: Base::Complete(1),
                    p: 2,
                },
            ),
            (
                "random:n=10,p=1/3,seed=7",
                GeneratorSpec::RandomGraph {
                    n: 10,
                    p_num: 1,
                    p_den: 3,
                    seed: 7,
                },
            ),
            (
                "forest:n=9,seed=2",
                GeneratorSpec::RandomForest { n: 9, seed: 2 },
            ),
        ];
        for (s, want) in cases {
            let got: GeneratorSpec = s.parse().unwrap();
            assert_eq!(got, want);
            assert_eq!(got.to_string().parse::<GeneratorSpec>().unwrap(), want);
        }
        for bad in [
            "nope",
            "cycle:2",
            "g2:k=2,l=3",
            "g1:p=2",
            "g1:h=x9,p=2",
            "random:n=3,p=5/4",
            "path:x",
        ] {
            assert!(bad.parse::<GeneratorSpec>().is_err(), "accepted {bad}");
        }
    }
}
