//! Wiener, Gutman, Harmonic, Randić and Sombor indices.
//!
//! Each index has a brute-force evaluator that works on any [`SimpleGraph`]
//! and a closed form in `(n, s)` for the generator graph of Z_n, where `s` is
//! the number of generators. Wiener and Gutman closed forms are evaluated in
//! exact rationals; the irrational-valued ones in `f64`.
//!
//! The Harmonic index has two closed forms. [`harmonic_formula_paper`] is the
//! published expression, which also counts the `C(n - s, 2)` non-adjacent
//! pairs of non-generators at weight `2 / 2s`. [`harmonic_formula_corrected`]
//! sums over edges only, as the index is defined, and is the one that agrees
//! with brute force. The two differ by exactly `(n - s)(n - s - 1) / 2s`.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::generator_graph::GeneratorGraph;
use crate::graph_core::{bfs_distances, DistanceMatrix, SimpleGraph};
use crate::numeric::{rel_close, CompensatedSum, REL_TOL};

pub type Rational = Ratio<i128>;

fn check_domain(n: u64, s: u64) -> Result<(i128, i128)> {
    if n < 2 || s < 1 || s > n - 1 {
        return Err(Error::Domain { n, s });
    }
    Ok((n as i128, s as i128))
}

fn connected_distances(g: &SimpleGraph) -> Result<DistanceMatrix> {
    let d = bfs_distances(g);
    if d.is_connected() {
        Ok(d)
    } else {
        Err(Error::Disconnected)
    }
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener_bruteforce(g: &SimpleGraph) -> Result<u64> {
    Ok(wiener_from_distances(&connected_distances(g)?))
}

fn wiener_from_distances(d: &DistanceMatrix) -> u64 {
    d.pairs()
        .map(|(_, _, x)| x.expect("connected") as u64)
        .sum()
}

/// `½s² − ½(2n − 1)s + n² − n`
pub fn wiener_formula(n: u64, s: u64) -> Result<Rational> {
    let (n, s) = check_domain(n, s)?;
    let half = Rational::new(1, 2);
    Ok(half * (s * s) - half * ((2 * n - 1) * s) + Rational::from(n * n - n))
}

/// Counts of unordered pairs at each distance; index `k` holds the pairs at
/// distance `k` (index 0 is always 0).
pub fn pair_distance_histogram(g: &SimpleGraph) -> Result<Vec<u64>> {
    let d = connected_distances(g)?;
    let mut hist = vec![0u64; d.max_finite() as usize + 1];
    for (_, _, x) in d.pairs() {
        hist[x.expect("connected") as usize] += 1;
    }
    Ok(hist)
}

/// Sum over unordered pairs of `deg(u)·deg(v)·d(u, v)`.
pub fn gutman_bruteforce(g: &SimpleGraph) -> Result<u64> {
    Ok(gutman_from_distances(g, &connected_distances(g)?))
}

fn gutman_from_distances(g: &SimpleGraph, d: &DistanceMatrix) -> u64 {
    let deg = g.degrees();
    d.pairs()
        .map(|(u, v, x)| (deg[u] * deg[v]) as u64 * x.expect("connected") as u64)
        .sum()
}

/// `½s(s − 1)(n − 1)² + s²(n − s)(2n − s − 2)`
pub fn gutman_formula(n: u64, s: u64) -> Result<Rational> {
    let (n, s) = check_domain(n, s)?;
    Ok(Rational::new(s * (s - 1) * (n - 1) * (n - 1), 2)
        + Rational::from(s * s * (n - s) * (2 * n - s - 2)))
}

fn edge_sum<F>(g: &SimpleGraph, term: F) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    let deg = g.degrees();
    g.edges()
        .map(|(u, v)| term(deg[u] as f64, deg[v] as f64))
        .collect::<CompensatedSum>()
        .value()
}

/// Sum over edges of `2 / (deg(u) + deg(v))`.
pub fn harmonic_bruteforce(g: &SimpleGraph) -> f64 {
    edge_sum(g, |a, b| 2.0 / (a + b))
}

/// The published closed form, exactly:
/// `s(s − 1) / 2(n − 1) + (n − s)·((n − 1)² + 3s²) / (2s(n + s − 1))`.
pub fn harmonic_formula_paper_exact(n: u64, s: u64) -> Result<Rational> {
    let (n, s) = check_domain(n, s)?;
    Ok(Rational::new(s * (s - 1), 2 * (n - 1))
        + Rational::new(
            (n - s) * ((n - 1) * (n - 1) + 3 * s * s),
            2 * s * (n + s - 1),
        ))
}

pub fn harmonic_formula_paper(n: u64, s: u64) -> Result<f64> {
    harmonic_formula_paper_exact(n, s).map(to_f64)
}

/// Edge-only closed form, exactly: `s(s − 1) / 2(n − 1) + 2s(n − s) / (n + s − 1)`.
pub fn harmonic_formula_corrected_exact(n: u64, s: u64) -> Result<Rational> {
    let (n, s) = check_domain(n, s)?;
    Ok(Rational::new(s * (s - 1), 2 * (n - 1)) + Rational::new(2 * s * (n - s), n + s - 1))
}

pub fn harmonic_formula_corrected(n: u64, s: u64) -> Result<f64> {
    harmonic_formula_corrected_exact(n, s).map(to_f64)
}

/// Excess of the published Harmonic closed form over the true index:
/// `(n − s)(n − s − 1) / 2s`, the weight of the non-adjacent non-generator pairs.
pub fn harmonic_paper_excess(n: u64, s: u64) -> Result<Rational> {
    let (n, s) = check_domain(n, s)?;
    Ok(Rational::new((n - s) * (n - s - 1), 2 * s))
}

/// Sum over edges of `1 / √(deg(u)·deg(v))`.
pub fn randic_bruteforce(g: &SimpleGraph) -> f64 {
    edge_sum(g, |a, b| 1.0 / (a * b).sqrt())
}

/// `(½s(s − 1) + (n − s)√((n − 1)s)) / (n − 1)`
pub fn randic_formula(n: u64, s: u64) -> Result<f64> {
    let (n, s) = check_domain(n, s)?;
    let (nf, sf) = (n as f64, s as f64);
    Ok((0.5 * (s * (s - 1)) as f64 + (nf - sf) * ((nf - 1.0) * sf).sqrt()) / (nf - 1.0))
}

/// Sum over edges of `√(deg(u)² + deg(v)²)`.
pub fn sombor_bruteforce(g: &SimpleGraph) -> f64 {
    edge_sum(g, |a, b| a.hypot(b))
}

/// `(√2/2)s(s − 1)(n − 1) + s(n − s)√((n − 1)² + s²)`
pub fn sombor_formula(n: u64, s: u64) -> Result<f64> {
    let (n, s) = check_domain(n, s)?;
    let (nf, sf) = (n as f64, s as f64);
    Ok(
        std::f64::consts::FRAC_1_SQRT_2 * (s * (s - 1) * (n - 1)) as f64
            + sf * (nf - sf) * (nf - 1.0).hypot(sf),
    )
}

pub(crate) fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn ratio_as_string<S: Serializer>(r: &Rational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&r.to_string())
}

/// Integer-valued index compared exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactIndex {
    pub brute_force: u64,
    #[serde(serialize_with = "ratio_as_string")]
    pub formula: Rational,
    #[serde(serialize_with = "ratio_as_string")]
    pub abs_difference: Rational,
    pub agrees: bool,
}

impl ExactIndex {
    fn new(brute_force: u64, formula: Rational) -> Self {
        let diff = formula - Rational::from(brute_force as i128);
        Self {
            brute_force,
            formula,
            abs_difference: if diff < Rational::from(0) {
                -diff
            } else {
                diff
            },
            agrees: diff == Rational::from(0),
        }
    }
}

/// Real-valued index compared under [`REL_TOL`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FloatIndex {
    pub brute_force: f64,
    pub formula: f64,
    pub abs_difference: f64,
    pub agrees: bool,
}

impl FloatIndex {
    fn new(brute_force: f64, formula: f64) -> Self {
        Self {
            brute_force,
            formula,
            abs_difference: (formula - brute_force).abs(),
            agrees: rel_close(brute_force, formula, REL_TOL),
        }
    }
}

/// Harmonic index against both closed forms. `agrees` refers to the
/// corrected form; the published form is tracked separately.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HarmonicIndex {
    pub brute_force: f64,
    pub formula: f64,
    pub abs_difference: f64,
    pub agrees: bool,
    pub paper_formula: f64,
    pub paper_difference: f64,
    pub paper_agrees: bool,
    /// `(n − s)(n − s − 1) / 2s`
    pub predicted_paper_excess: f64,
}

/// Brute force and closed form side by side for every index, for one `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexReport {
    pub n: u64,
    pub s: u64,
    pub wiener: ExactIndex,
    pub gutman: ExactIndex,
    pub harmonic: HarmonicIndex,
    pub randic: FloatIndex,
    pub sombor: FloatIndex,
}

impl IndexReport {
    /// True when every index agrees with its closed form (corrected Harmonic).
    pub fn all_agree(&self) -> bool {
        self.wiener.agrees
            && self.gutman.agrees
            && self.harmonic.agrees
            && self.randic.agrees
            && self.sombor.agrees
    }

    /// One row per index in the fixed order wiener, gutman, harmonic,
    /// harmonic_paper, randic, sombor.
    pub fn rows(&self) -> Vec<IndexRow> {
        let exact = |name: &'static str, x: &ExactIndex| IndexRow {
            name,
            brute_force: x.brute_force as f64,
            formula: to_f64(x.formula),
            abs_difference: to_f64(x.abs_difference),
            agrees: x.agrees,
        };
        let float = |name: &'static str, x: &FloatIndex| IndexRow {
            name,
            brute_force: x.brute_force,
            formula: x.formula,
            abs_difference: x.abs_difference,
            agrees: x.agrees,
        };
        let h = &self.harmonic;
        vec![
            exact("wiener", &self.wiener),
            exact("gutman", &self.gutman),
            IndexRow {
                name: "harmonic",
                brute_force: h.brute_force,
                formula: h.formula,
                abs_difference: h.abs_difference,
                agrees: h.agrees,
            },
            IndexRow {
                name: "harmonic_paper",
                brute_force: h.brute_force,
                formula: h.paper_formula,
                abs_difference: h.paper_difference.abs(),
                agrees: h.paper_agrees,
            },
            float("randic", &self.randic),
            float("sombor", &self.sombor),
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexRow {
    pub name: &'static str,
    pub brute_force: f64,
    pub formula: f64,
    pub abs_difference: f64,
    pub agrees: bool,
}

/// Builds Γ(Z_n) and evaluates every index both ways.
pub fn compute_index_report(n: u64) -> Result<IndexReport> {
    index_report_for(&GeneratorGraph::new(n)?)
}

pub fn index_report_for(gg: &GeneratorGraph) -> Result<IndexReport> {
    let (n, s) = (gg.order(), gg.generator_count());
    let g = gg.graph();
    let d = connected_distances(g)?;

    let h_brute = harmonic_bruteforce(g);
    let h_fixed = harmonic_formula_corrected(n, s)?;
    let h_paper = harmonic_formula_paper(n, s)?;
    let harmonic = HarmonicIndex {
        brute_force: h_brute,
        formula: h_fixed,
        abs_difference: (h_fixed - h_brute).abs(),
        agrees: rel_close(h_brute, h_fixed, REL_TOL),
        paper_formula: h_paper,
        paper_difference: h_paper - h_brute,
        paper_agrees: rel_close(h_brute, h_paper, REL_TOL),
        predicted_paper_excess: to_f64(harmonic_paper_excess(n, s)?),
    };

    Ok(IndexReport {
        n,
        s,
        wiener: ExactIndex::new(wiener_from_distances(&d), wiener_formula(n, s)?),
        gutman: ExactIndex::new(gutman_from_distances(g, &d), gutman_formula(n, s)?),
        harmonic,
        randic: FloatIndex::new(randic_bruteforce(g), randic_formula(n, s)?),
        sombor: FloatIndex::new(sombor_bruteforce(g), sombor_formula(n, s)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator_graph::build_generator_graph;
    use crate::graph_core::{complete_graph, cycle_graph, null_graph};

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn close(a: f64, b: f64) -> bool {
        rel_close(a, b, 1e-12)
    }

    fn gamma(n: u64) -> SimpleGraph {
        build_generator_graph(n).unwrap().graph().clone()
    }

    #[test]
    fn wiener() {
        assert_eq!(wiener_bruteforce(&complete_graph(2)).unwrap(), 1);
        assert_eq!(wiener_bruteforce(&gamma(4)).unwrap(), 7);
        assert_eq!(wiener_bruteforce(&cycle_graph(5)).unwrap(), 15);
        assert_eq!(wiener_bruteforce(&null_graph(2)), Err(Error::Disconnected));

        assert_eq!(wiener_formula(4, 2).unwrap(), Rational::from(7));
        assert_eq!(wiener_formula(5, 4).unwrap(), Rational::from(10));
        assert_eq!(wiener_formula(2, 1).unwrap(), Rational::from(1));
        assert_eq!(wiener_formula(4, 4), Err(Error::Domain { n: 4, s: 4 }));
        assert_eq!(wiener_formula(4, 0), Err(Error::Domain { n: 4, s: 0 }));
        assert_eq!(wiener_formula(1, 1), Err(Error::Domain { n: 1, s: 1 }));
    }

    #[test]
    fn gutman() {
        assert_eq!(gutman_bruteforce(&complete_graph(2)).unwrap(), 1);
        assert_eq!(gutman_bruteforce(&gamma(4)).unwrap(), 41);
        assert_eq!(gutman_bruteforce(&cycle_graph(4)).unwrap(), 32);
        assert!(gutman_bruteforce(&null_graph(3)).is_err());

        assert_eq!(gutman_formula(4, 2).unwrap(), Rational::from(41));
        assert_eq!(gutman_formula(3, 2).unwrap(), Rational::from(12));
        assert_eq!(gutman_formula(2, 1).unwrap(), Rational::from(1));
    }

    #[test]
    fn harmonic() {
        assert!(close(harmonic_bruteforce(&complete_graph(2)), 1.0));
        assert!(close(harmonic_bruteforce(&complete_graph(5)), 2.5));
        assert!(close(harmonic_bruteforce(&gamma(4)), 29.0 / 15.0));
        assert_eq!(harmonic_bruteforce(&null_graph(4)), 0.0);

        assert_eq!(
            harmonic_formula_paper_exact(4, 2).unwrap(),
            Rational::new(73, 30)
        );
        assert!(close(harmonic_formula_paper(5, 4).unwrap(), 2.5));
        assert!(close(harmonic_formula_paper(2, 1).unwrap(), 1.0));

        assert_eq!(
            harmonic_formula_corrected_exact(4, 2).unwrap(),
            Rational::new(29, 15)
        );
        assert!(close(harmonic_formula_corrected(5, 4).unwrap(), 2.5));
        assert!(close(
            harmonic_formula_corrected(6, 2).unwrap(),
            0.2 + 16.0 / 7.0
        ));

        assert_eq!(harmonic_paper_excess(4, 2).unwrap(), Rational::new(1, 2));
        assert_eq!(
            harmonic_formula_paper_exact(4, 2).unwrap()
                - harmonic_formula_corrected_exact(4, 2).unwrap(),
            Rational::new(1, 2)
        );
    }

    #[test]
    fn randic() {
        assert!(close(randic_bruteforce(&complete_graph(2)), 1.0));
        assert!(close(randic_bruteforce(&complete_graph(5)), 2.5));
        let expected = 1.0 / 3.0 + 4.0 / 6f64.sqrt();
        assert!(close(randic_bruteforce(&gamma(4)), expected));
        assert!((expected - 1.96633).abs() < 1e-5);

        assert!(close(
            randic_formula(4, 2).unwrap(),
            (1.0 + 2.0 * 6f64.sqrt()) / 3.0
        ));
        assert!(close(randic_formula(7, 6).unwrap(), 3.5));
        assert!(close(randic_formula(2, 1).unwrap(), 1.0));
    }

    #[test]
    fn sombor() {
        assert!(close(sombor_bruteforce(&complete_graph(2)), SQRT2));
        let expected = 3.0 * SQRT2 + 4.0 * 13f64.sqrt();
        assert!(close(sombor_bruteforce(&gamma(4)), expected));
        assert!((expected - 18.6648).abs() < 1e-4);
        assert!(close(sombor_bruteforce(&complete_graph(3)), 6.0 * SQRT2));

        assert!(close(sombor_formula(4, 2).unwrap(), expected));
        assert!(close(sombor_formula(5, 4).unwrap(), 40.0 * SQRT2));
        assert!(close(sombor_formula(2, 1).unwrap(), SQRT2));
    }

    #[test]
    fn reports() {
        let r = compute_index_report(5).unwrap();
        assert!(r.all_agree() && r.harmonic.paper_agrees);
        assert_eq!(r.wiener.brute_force, 10);
        assert_eq!(r.gutman.brute_force, 160);
        assert!(close(r.harmonic.brute_force, 2.5));
        assert!(close(r.randic.brute_force, 2.5));
        assert!(close(r.sombor.brute_force, 40.0 * SQRT2));

        let r = compute_index_report(4).unwrap();
        assert!(r.all_agree());
        assert!(!r.harmonic.paper_agrees);
        assert!((r.harmonic.paper_difference - 0.5).abs() < 1e-12);
        assert_eq!(r.harmonic.predicted_paper_excess, 0.5);

        let r = compute_index_report(2).unwrap();
        assert!(r.all_agree() && r.harmonic.paper_agrees);
        assert_eq!((r.wiener.brute_force, r.gutman.brute_force), (1, 1));
        assert!(close(r.sombor.brute_force, SQRT2));

        assert_eq!(compute_index_report(1), Err(Error::TrivialGroup(1)));
        assert_eq!(r.rows().len(), 6);
    }

    #[test]
    fn wiener_decomposition() {
        for n in 2..80 {
            let gg = build_generator_graph(n).unwrap();
            let hist = pair_distance_histogram(gg.graph()).unwrap();
            let d1 = hist[1];
            let d2 = hist.get(2).copied().unwrap_or(0);
            assert!(hist.len() <= 3);
            assert_eq!(d1 + d2, n * (n - 1) / 2);
            assert_eq!(d1, gg.graph().edge_count() as u64);
            assert_eq!(d1 + 2 * d2, wiener_bruteforce(gg.graph()).unwrap());
        }
    }

    #[test]
    fn report_serializes_ratios_as_strings() {
        let json = serde_json::to_value(compute_index_report(4).unwrap()).unwrap();
        assert_eq!(json["wiener"]["formula"], "7");
        assert_eq!(json["wiener"]["brute_force"], 7);
        assert_eq!(json["gutman"]["abs_difference"], "0");
    }
}
