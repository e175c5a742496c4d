//! The inequality catalog and campaign runner.
//!
//! Every displayed bound between radius quotients becomes a named check with
//! a two-valued verdict. Because outer-radius estimates over-estimate a
//! minimum while inner-radius estimates under-estimate a maximum, a quotient
//! of the form R-estimate / r-estimate over-estimates the true quotient, so a
//! Pass is a sound certificate that the true inequality holds on the body.
//! Ratios that mix two inner radii (or the reverse inequality) cannot
//! over-estimate; their checks are consistency probes and are tagged as such.
//! No check can ever report a violation: a ratio above the bound is
//! Inconclusive, never a counterexample.

use std::time::Instant;

use rayon::prelude::*;

use crate::bodies::{
    make_antiprism_p, make_canonical, make_remark_simplex, random_polytope, Body, CanonicalKind,
};
use crate::error::{Error, Result};
use crate::optimize::SearchConfig;
use crate::successive::{radii_profile, BoundSide, RadiiProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "Pass",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

/// Whether the numeric quotient provably over-estimates the true quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sidedness {
    /// Numerator is an upper bound of a min, denominator a lower bound of a
    /// max: Pass certifies the true inequality.
    RatioOverestimates,
    /// Both sides are same-sided estimates; Pass records consistency only.
    Consistency,
}

/// One catalog entry: a named bound on a radius quotient.
pub struct InequalityCheck {
    pub id: &'static str,
    pub sidedness: Sidedness,
    /// Pass tolerance added to the bound.
    pub tolerance: f64,
    /// Applicability over (n, symmetric, i).
    pub applicable: fn(usize, bool, usize) -> bool,
    /// Closed-form bound value at (n, i).
    pub bound: fn(usize, usize) -> f64,
    /// Quotient extracted from a profile at (n, i).
    pub ratio: fn(&RadiiProfile, usize, usize) -> Option<f64>,
}

fn outer(p: &RadiiProfile, j: usize) -> f64 {
    p.outer_at(j).value
}
fn inner(p: &RadiiProfile, i: usize) -> f64 {
    p.inner_section_at(i).value
}
fn inner_proj(p: &RadiiProfile, i: usize) -> f64 {
    p.inner_projection_at(i).value
}

/// The full catalog, in presentation order.
pub fn catalog() -> Vec<InequalityCheck> {
    vec![
        InequalityCheck {
            id: "PP",
            sidedness: Sidedness::RatioOverestimates,
            tolerance: 1e-6,
            applicable: |_, _, _| true,
            bound: |_, i| (i + 1) as f64,
            ratio: |p, n, i| Some(outer(p, n - i + 1) / inner(p, i)),
        },
        InequalityCheck {
            id: "JUNG",
            sidedness: Sidedness::RatioOverestimates,
            tolerance: 1e-6,
            applicable: |_, _, i| i == 1,
            bound: |n, _| (2.0 * n as f64 / (n as f64 + 1.0)).sqrt(),
            ratio: |p, n, _| Some(outer(p, n) / inner(p, 1)),
        },
        InequalityCheck {
            id: "STEIN",
            sidedness: Sidedness::RatioOverestimates,
            tolerance: 1e-6,
            applicable: |n, _, i| i == n,
            bound: |n, _| steinhagen_bound(n),
            ratio: |p, n, _| Some(outer(p, 1) / inner(p, n)),
        },
        InequalityCheck {
            id: "PP-SYM",
            sidedness: Sidedness::RatioOverestimates,
            tolerance: 1e-6,
            applicable: |_, sym, _| sym,
            bound: |n, i| {
                let e_sqrt = std::f64::consts::E.sqrt();
                e_sqrt * (i as f64).sqrt().min(((n - i + 1) as f64).sqrt())
            },
            ratio: |p, n, i| Some(outer(p, n - i + 1) / inner(p, i)),
        },
        InequalityCheck {
            id: "GO-TILDE",
            sidedness: Sidedness::RatioOverestimates,
            tolerance: 1e-6,
            applicable: |_, sym, _| sym,
            bound: |n, i| ((n - i + 1) as f64).sqrt(),
            ratio: |p, n, i| Some(outer(p, n - i + 1) / inner_proj(p, i)),
        },
        InequalityCheck {
            id: "T11",
            sidedness: Sidedness::RatioOverestimates,
            tolerance: 1e-6,
            applicable: |n, sym, i| sym && n == 3 && i == 2,
            bound: |_, _| 2.0 * 2.0f64.sqrt() / 3.0f64.sqrt(),
            ratio: |p, _, _| Some(outer(p, 2) / inner(p, 2)),
        },
        InequalityCheck {
            id: "T12",
            sidedness: Sidedness::RatioOverestimates,
            tolerance: 1e-6,
            applicable: |n, _, i| n >= 2 && i == 2,
            bound: |n, _| 2.0 * 2.0f64.sqrt() * ((n as f64 - 1.0) / n as f64).sqrt(),
            ratio: |p, n, _| Some(outer(p, n - 1) / inner(p, 2)),
        },
        InequalityCheck {
            id: "T13",
            sidedness: Sidedness::RatioOverestimates,
            tolerance: 1e-6,
            applicable: |n, _, i| n >= 2 && i == n - 1,
            bound: |n, _| 2.0 * 2.0f64.sqrt() * (n as f64).sqrt(),
            ratio: |p, n, _| Some(outer(p, 2) / inner(p, n - 1)),
        },
        InequalityCheck {
            id: "T22",
            sidedness: Sidedness::Consistency,
            tolerance: 1e-6,
            applicable: |n, sym, i| sym && n == 3 && i == 2,
            bound: |_, _| 2.0 / 3.0f64.sqrt(),
            ratio: |p, _, _| Some(inner_proj(p, 2) / inner(p, 2)),
        },
        InequalityCheck {
            id: "T24",
            sidedness: Sidedness::Consistency,
            tolerance: 1e-6,
            applicable: |n, _, i| n == 3 && i == 2,
            bound: |_, _| 2.0f64.sqrt(),
            ratio: |p, _, _| Some(inner_proj(p, 2) / inner(p, 2)),
        },
        InequalityCheck {
            id: "C44",
            sidedness: Sidedness::Consistency,
            tolerance: 2e-5,
            applicable: |_, _, _| true,
            bound: |_, i| i as f64,
            ratio: |p, _, i| Some(inner_proj(p, i) / inner(p, i)),
        },
        InequalityCheck {
            id: "P45",
            sidedness: Sidedness::RatioOverestimates,
            tolerance: 1e-6,
            applicable: |n, _, i| n == 3 && i == 2,
            bound: |_, _| 2.151,
            ratio: |p, _, _| Some(outer(p, 2) / inner(p, 2)),
        },
        InequalityCheck {
            id: "BH-REV",
            sidedness: Sidedness::Consistency,
            tolerance: 2e-5,
            applicable: |_, _, _| true,
            bound: |_, _| 1.0,
            ratio: |p, n, i| Some(inner(p, i) / outer(p, n - i + 1)),
        },
        InequalityCheck {
            id: "MONO",
            sidedness: Sidedness::Consistency,
            tolerance: 2e-6,
            applicable: |_, _, i| i == 1,
            bound: |_, _| 1.0,
            ratio: |p, n, _| {
                let mut worst: f64 = 0.0;
                for i in 1..n {
                    worst = worst.max(outer(p, i) / outer(p, i + 1));
                    worst = worst.max(inner(p, i + 1) / inner(p, i));
                    worst = worst.max(inner_proj(p, i + 1) / inner_proj(p, i));
                }
                for i in 1..=n {
                    worst = worst.max(inner(p, i) / inner_proj(p, i));
                }
                Some(worst)
            },
        },
        InequalityCheck {
            id: "MINK",
            sidedness: Sidedness::RatioOverestimates,
            tolerance: 1e-6,
            applicable: |_, _, _| true,
            bound: |n, _| (n as f64).sqrt(),
            ratio: |p, n, i| Some(outer(p, n - i + 1) / inner(p, i)),
        },
    ]
}

/// Bound of the width-to-inradius quotient: √n for odd n, (n+1)/√(n+2) for
/// even n.
pub fn steinhagen_bound(n: usize) -> f64 {
    if n % 2 == 1 {
        (n as f64).sqrt()
    } else {
        (n as f64 + 1.0) / (n as f64 + 2.0).sqrt()
    }
}

/// The MINK bound with a Euclidean gauge depends on body symmetry: √n when
/// symmetric, n otherwise.
fn mink_bound(n: usize, symmetric: bool) -> f64 {
    if symmetric {
        (n as f64).sqrt()
    } else {
        n as f64
    }
}

/// Result of one check on one body.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub check_id: &'static str,
    pub i: usize,
    pub numeric_ratio: f64,
    pub bound: f64,
    pub slack: f64,
    pub verdict: Verdict,
}

/// Per-body audit report.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub body_id: String,
    pub n: usize,
    pub symmetric: bool,
    pub checks: Vec<CheckResult>,
    pub starts: usize,
    pub seed: u64,
    pub seconds: f64,
}

impl AuditReport {
    pub fn check(&self, id: &str, i: usize) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_id == id && c.i == i)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Pass)
    }
}

/// Run every applicable catalog check on one body, computing the radii
/// profile once.
pub fn audit_body(body: &Body, body_id: &str, config: &SearchConfig) -> Result<AuditReport> {
    let start = Instant::now();
    let n = body.dim();
    if n > 4 && !matches!(body, Body::Ellipsoid(_)) {
        return Err(Error::UnsupportedDimension);
    }
    let symmetric = body.is_symmetric();
    let profile = radii_profile(body, config)?;
    // structural soundness: side tags must justify every over-estimating
    // quotient (numerator UpperBoundOfMin, denominator LowerBoundOfMax)
    debug_assert!(profile
        .outer
        .iter()
        .all(|e| e.side == BoundSide::UpperBoundOfMin));
    debug_assert!(profile
        .inner_section
        .iter()
        .chain(profile.inner_projection.iter())
        .all(|e| e.side == BoundSide::LowerBoundOfMax));
    let mut checks = Vec::new();
    for check in catalog() {
        for i in 1..=n {
            if !(check.applicable)(n, symmetric, i) {
                continue;
            }
            let Some(numeric_ratio) = (check.ratio)(&profile, n, i) else {
                continue;
            };
            let bound = if check.id == "MINK" {
                mink_bound(n, symmetric)
            } else {
                (check.bound)(n, i)
            };
            let verdict = if numeric_ratio <= bound + check.tolerance {
                Verdict::Pass
            } else {
                Verdict::Inconclusive
            };
            checks.push(CheckResult {
                check_id: check.id,
                i,
                numeric_ratio,
                bound,
                slack: bound - numeric_ratio,
                verdict,
            });
        }
    }
    Ok(AuditReport {
        body_id: body_id.to_string(),
        n,
        symmetric,
        checks,
        starts: config.starts,
        seed: config.seed,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Closed-form quotient R_{n−i+1}/r_i for the canonical extremal bodies.
pub fn known_ratio_oracles(kind: CanonicalKind, n: usize, i: usize) -> Result<f64> {
    if n == 0 || n > 5 || i == 0 || i > n {
        return Err(Error::UnsupportedDimension);
    }
    let (nf, fi) = (n as f64, i as f64);
    match kind {
        CanonicalKind::Cube | CanonicalKind::Crosspolytope => {
            Ok(((nf - fi + 1.0) * fi / nf).sqrt())
        }
        CanonicalKind::RegularSimplex => {
            if i == 1 {
                Ok((2.0 * nf / (nf + 1.0)).sqrt())
            } else if i == n {
                Ok(steinhagen_bound(n))
            } else if i == 2 && n % 2 == 0 {
                Ok((2.0 * nf - 1.0) * 3.0f64.sqrt() / (2.0 * nf * (nf + 1.0)).sqrt())
            } else {
                Ok((1.0 - fi / (nf + 1.0)).sqrt() * (fi * (fi + 1.0)).sqrt())
            }
        }
        CanonicalKind::Ball => Ok(1.0),
    }
}

/// Campaign configuration.
#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub dim: usize,
    pub symmetric_count: usize,
    pub general_count: usize,
    /// Random draws per body (a symmetric body gets 2·m vertices).
    pub vertices: usize,
    pub include_canonical: bool,
    pub seed: u64,
    pub search: SearchConfig,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            dim: 3,
            symmetric_count: 100,
            general_count: 100,
            vertices: 10,
            include_canonical: true,
            seed: 0,
            search: SearchConfig::default(),
        }
    }
}

/// Aggregate statistics for one check id across a campaign.
#[derive(Debug, Clone)]
pub struct CheckAggregate {
    pub check_id: &'static str,
    pub pass: usize,
    pub inconclusive: usize,
    pub max_ratio: f64,
    pub max_ratio_body: String,
    pub min_slack: f64,
}

/// Campaign output: per-body reports plus per-check aggregates.
#[derive(Debug, Clone)]
pub struct CampaignReport {
    pub reports: Vec<AuditReport>,
    pub failures: Vec<(String, String)>,
    pub aggregates: Vec<CheckAggregate>,
    pub seconds: f64,
}

/// Bodies of a campaign, in deterministic order.
pub fn campaign_bodies(config: &CampaignConfig) -> Result<Vec<(String, Body)>> {
    let mut bodies: Vec<(String, Body)> = Vec::new();
    let n = config.dim;
    if config.include_canonical {
        bodies.push((format!("cube{n}"), make_canonical(CanonicalKind::Cube, n)?));
        bodies.push((
            format!("crosspolytope{n}"),
            make_canonical(CanonicalKind::Crosspolytope, n)?,
        ));
        bodies.push((
            format!("simplex{n}"),
            make_canonical(CanonicalKind::RegularSimplex, n)?,
        ));
        bodies.push((format!("ball{n}"), make_canonical(CanonicalKind::Ball, n)?));
        if n == 3 {
            bodies.push(("antiprism_P_0.01".into(), make_antiprism_p(0.01)?));
            bodies.push(("remark_simplex_0.01".into(), make_remark_simplex(0.01)?));
        }
    }
    for k in 0..config.symmetric_count {
        let seed = config.seed.wrapping_mul(1_000_003).wrapping_add(k as u64);
        bodies.push((
            format!("sym{k:04}"),
            random_polytope(n, config.vertices, true, seed)?,
        ));
    }
    for k in 0..config.general_count {
        let seed = config
            .seed
            .wrapping_mul(1_000_003)
            .wrapping_add(500_000 + k as u64);
        bodies.push((
            format!("gen{k:04}"),
            random_polytope(n, config.vertices.max(4) + 2, false, seed)?,
        ));
    }
    Ok(bodies)
}

/// Audit a body list in parallel; the output is identical to sequential
/// execution because reports are keyed by body index and aggregation is a
/// max-reduction.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    let start = Instant::now();
    let bodies = campaign_bodies(config)?;
    let results: Vec<(String, std::result::Result<AuditReport, Error>)> = bodies
        .par_iter()
        .map(|(id, body)| (id.clone(), audit_body(body, id, &config.search)))
        .collect();
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for (id, res) in results {
        match res {
            Ok(rep) => reports.push(rep),
            Err(e) => failures.push((id, e.to_string())),
        }
    }
    let aggregates = aggregate(&reports);
    Ok(CampaignReport {
        reports,
        failures,
        aggregates,
        seconds: start.elapsed().as_secs_f64(),
    })
}

fn aggregate(reports: &[AuditReport]) -> Vec<CheckAggregate> {
    let mut aggs: Vec<CheckAggregate> = Vec::new();
    for check in catalog() {
        let mut agg = CheckAggregate {
            check_id: check.id,
            pass: 0,
            inconclusive: 0,
            max_ratio: f64::NEG_INFINITY,
            max_ratio_body: String::new(),
            min_slack: f64::INFINITY,
        };
        for rep in reports {
            for c in rep.checks.iter().filter(|c| c.check_id == check.id) {
                match c.verdict {
                    Verdict::Pass => agg.pass += 1,
                    Verdict::Inconclusive => agg.inconclusive += 1,
                }
                if c.numeric_ratio > agg.max_ratio {
                    agg.max_ratio = c.numeric_ratio;
                    agg.max_ratio_body = rep.body_id.clone();
                }
                agg.min_slack = agg.min_slack.min(c.slack);
            }
        }
        if agg.pass + agg.inconclusive > 0 {
            aggs.push(agg);
        }
    }
    aggs
}

/// CSV rows (body_id, check_id, n, i, numeric_ratio, bound, slack, verdict,
/// starts, seconds) for a campaign.
pub fn campaign_csv(report: &CampaignReport) -> String {
    let mut out =
        String::from("body_id,check_id,n,i,numeric_ratio,bound,slack,verdict,starts,seconds\n");
    for rep in &report.reports {
        for c in &rep.checks {
            out.push_str(&format!(
                "{},{},{},{},{:.17e},{:.17e},{:.17e},{},{},{:.6}\n",
                rep.body_id,
                c.check_id,
                rep.n,
                c.i,
                c.numeric_ratio,
                c.bound,
                c.slack,
                c.verdict.as_str(),
                rep.starts,
                rep.seconds
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn cfg(starts: usize) -> SearchConfig {
        SearchConfig {
            starts,
            ..Default::default()
        }
    }

    #[test]
    fn catalog_has_fifteen_entries() {
        assert_eq!(catalog().len(), 15);
    }

    #[test]
    fn catalog_bounds() {
        let cat = catalog();
        let jung = cat.iter().find(|c| c.id == "JUNG").unwrap();
        assert_abs_diff_eq!((jung.bound)(3, 1), 1.5f64.sqrt(), epsilon = 1e-12);
        let stein = cat.iter().find(|c| c.id == "STEIN").unwrap();
        assert_abs_diff_eq!((stein.bound)(4, 4), 5.0 / 6.0f64.sqrt(), epsilon = 1e-12);
        let pp_sym = cat.iter().find(|c| c.id == "PP-SYM").unwrap();
        assert_abs_diff_eq!(
            (pp_sym.bound)(3, 2),
            std::f64::consts::E.sqrt() * 2.0f64.sqrt(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn verdict_enum_is_two_valued() {
        match Verdict::Pass {
            Verdict::Pass | Verdict::Inconclusive => {}
        }
    }

    #[test]
    fn sidedness_tags_match_ratio_structure() {
        for check in catalog() {
            match check.id {
                "PP" | "JUNG" | "STEIN" | "PP-SYM" | "GO-TILDE" | "T11" | "T12" | "T13"
                | "P45" | "MINK" => assert_eq!(check.sidedness, Sidedness::RatioOverestimates),
                "T22" | "T24" | "C44" | "BH-REV" | "MONO" => {
                    assert_eq!(check.sidedness, Sidedness::Consistency)
                }
                other => panic!("unknown check {other}"),
            }
        }
    }

    #[test]
    fn ball_passes_everything() {
        let ball = make_canonical(CanonicalKind::Ball, 3).unwrap();
        let rep = audit_body(&ball, "ball3", &cfg(8)).unwrap();
        assert!(rep.all_pass());
        let pp = rep.check("PP", 2).unwrap();
        assert_abs_diff_eq!(pp.numeric_ratio, 1.0, epsilon = 1e-6);
    }

    #[test]
    fn antiprism_t22_is_tight() {
        let p = make_antiprism_p(0.01).unwrap();
        let rep = audit_body(&p, "P_eps", &cfg(64)).unwrap();
        let t22 = rep.check("T22", 2).unwrap();
        assert!(t22.slack.abs() < 1e-2, "T22 slack {}", t22.slack);
        assert_eq!(t22.verdict, Verdict::Pass);
    }

    #[test]
    fn simplex_attains_jung_and_steinhagen() {
        for n in [2usize, 3] {
            let s = make_canonical(CanonicalKind::RegularSimplex, n).unwrap();
            let rep = audit_body(&s, "simplex", &cfg(64)).unwrap();
            let jung = rep.check("JUNG", 1).unwrap();
            assert!(jung.slack.abs() < 1e-5, "JUNG slack {} at n={n}", jung.slack);
            let stein = rep.check("STEIN", n).unwrap();
            assert!(
                stein.slack.abs() < 1e-5,
                "STEIN slack {} at n={n}",
                stein.slack
            );
        }
    }

    #[test]
    fn oracle_values() {
        assert_abs_diff_eq!(
            known_ratio_oracles(CanonicalKind::Cube, 3, 2).unwrap(),
            (4.0f64 / 3.0).sqrt(),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            known_ratio_oracles(CanonicalKind::RegularSimplex, 3, 2).unwrap(),
            3.0f64.sqrt(),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            known_ratio_oracles(CanonicalKind::RegularSimplex, 4, 2).unwrap(),
            7.0 * 3.0f64.sqrt() / 40.0f64.sqrt(),
            epsilon = 1e-12
        );
        // i = n meets the even-dimensional width bound
        assert_abs_diff_eq!(
            known_ratio_oracles(CanonicalKind::RegularSimplex, 2, 2).unwrap(),
            1.5,
            epsilon = 1e-12
        );
    }

    #[test]
    fn budget_increase_never_flips_pass_to_inconclusive() {
        // nested start sets: the 16-start list is a prefix of the 64-start
        // list, so over-estimates shrink and under-estimates grow
        for k in 0..20u64 {
            let body = random_polytope(3, 8, k % 2 == 0, 100 + k).unwrap();
            let small = audit_body(&body, "b", &cfg(16)).unwrap();
            let large = audit_body(&body, "b", &cfg(64)).unwrap();
            for c16 in &small.checks {
                let sided = catalog()
                    .iter()
                    .find(|c| c.id == c16.check_id)
                    .unwrap()
                    .sidedness;
                if c16.verdict == Verdict::Pass && sided == Sidedness::RatioOverestimates {
                    let c64 = large.check(c16.check_id, c16.i).unwrap();
                    assert_eq!(
                        c64.verdict,
                        Verdict::Pass,
                        "{} flipped Pass→Inconclusive at seed {k}",
                        c16.check_id
                    );
                }
            }
        }
    }

    #[test]
    fn empty_campaign_is_empty() {
        let config = CampaignConfig {
            symmetric_count: 0,
            general_count: 0,
            include_canonical: false,
            ..Default::default()
        };
        let rep = run_campaign(&config).unwrap();
        assert!(rep.reports.is_empty());
        assert!(rep.aggregates.is_empty());
        let csv = campaign_csv(&rep);
        assert_eq!(csv.lines().count(), 1); // header only
    }

    #[test]
    fn small_campaign_has_no_failures() {
        let config = CampaignConfig {
            symmetric_count: 3,
            general_count: 3,
            include_canonical: true,
            search: cfg(16),
            ..Default::default()
        };
        let rep = run_campaign(&config).unwrap();
        assert!(rep.failures.is_empty(), "failures: {:?}", rep.failures);
        assert_eq!(rep.reports.len(), 12);
        let csv = campaign_csv(&rep);
        assert!(csv.lines().count() > 12);
        assert!(csv.starts_with("body_id,check_id,n,i,"));
    }

    /// CSV with the wall-clock column removed: timing is the one
    /// intentionally nondeterministic field.
    fn strip_seconds(csv: &str) -> String {
        csv.lines()
            .map(|l| l.rsplit_once(',').map(|(head, _)| head).unwrap_or(l))
            .collect::<Vec<_>>()
            .join("\n")
    }

    #[test]
    fn campaign_is_deterministic_across_thread_counts() {
        let config = CampaignConfig {
            symmetric_count: 2,
            general_count: 2,
            include_canonical: false,
            search: cfg(8),
            ..Default::default()
        };
        let pool1 = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let a = pool1.install(|| run_campaign(&config)).unwrap();
        let pool2 = rayon::ThreadPoolBuilder::new()
            .num_threads(2)
            .build()
            .unwrap();
        let b = pool2.install(|| run_campaign(&config)).unwrap();
        assert_eq!(strip_seconds(&campaign_csv(&a)), strip_seconds(&campaign_csv(&b)));
    }
}
