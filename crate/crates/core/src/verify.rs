//! Exhaustive verification campaigns over all partitions up to a size bound.
//!
//! Work is sharded by partition on a rayon pool; per-partition outcomes are
//! merged in partition order, so the report does not depend on the worker count.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{Maps, Mutant};
use crate::error::{Error, Result};
use crate::labeled::{
    classify_h_unchecked, classify_n2_unchecked, enumerate_c, enumerate_h, enumerate_n,
    enumerate_set, enumerate_targets, set_size, validate_h, Family, HClass, NClass,
    TargetElement,
};
use crate::partition::{partitions, Cell, Partition};
use crate::power::{inequality_check, phi_k, psi1, psi1_in_image, witness_non_image};
use crate::rect::{
    count_rectangles_brute, count_thick_direct, count_thick_partial, count_thin_hook,
    count_total_formula,
};

/// Failing elements recorded per (partition, check); the rest are only counted.
const EXAMPLES_PER_CHECK: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Bijection,
    Identity,
    Classes,
    Rects,
    Powers,
    Restriction,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Bijection,
        Check::Identity,
        Check::Classes,
        Check::Rects,
        Check::Powers,
        Check::Restriction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bijection => "bijection",
            Check::Identity => "identity",
            Check::Classes => "classes",
            Check::Rects => "rects",
            Check::Powers => "powers",
            Check::Restriction => "restriction",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub ks: Vec<u32>,
    pub checks: Vec<Check>,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    pub mutant: Option<Mutant>,
}

impl VerifyConfig {
    pub fn new(max_n: usize) -> Self {
        VerifyConfig { max_n, ks: vec![1, 2, 3], checks: Check::ALL.to_vec(), jobs: None, mutant: None }
    }

    fn runs(&self, check: Check) -> bool {
        self.checks.contains(&check)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub partition: Partition,
    pub check: Check,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub ks: Vec<u32>,
    pub checks: Vec<Check>,
    pub mutant: Option<String>,
    pub partitions_checked: u64,
    pub elements_checked: u64,
    /// Total number of failed assertions, including ones not listed in `failures`.
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub interrupted: bool,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    /// No failures. An interrupted run can succeed while covering fewer partitions.
    pub fn success(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the campaign. `cancel` is polled between partitions; `progress` is called
/// after each size `n` with the number of partitions of that size.
pub fn verify(
    config: &VerifyConfig,
    cancel: &AtomicBool,
    mut progress: impl FnMut(usize, usize),
) -> Result<VerifyReport> {
    let start = Instant::now();
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(jobs) = config.jobs {
            builder = builder.num_threads(jobs.max(1));
        }
        builder.build().map_err(|e| Error::Parse(format!("worker pool: {e}")))?
    };
    let maps = Maps::with_mutant(config.mutant);
    let mut report = VerifyReport {
        max_n: config.max_n,
        ks: config.ks.clone(),
        checks: config.checks.clone(),
        mutant: config.mutant.map(|m| m.name().to_owned()),
        partitions_checked: 0,
        elements_checked: 0,
        failure_count: 0,
        failures: Vec::new(),
        interrupted: false,
        elapsed_ms: 0,
    };
    for n in 1..=config.max_n {
        let shapes: Vec<Partition> = partitions(n).collect();
        let outcomes: Vec<Option<Result<Outcome>>> = pool.install(|| {
            shapes
                .par_iter()
                .map(|shape| {
                    if cancel.load(Ordering::Relaxed) {
                        None
                    } else {
                        Some(check_partition(shape, config, &maps))
                    }
                })
                .collect()
        });
        for outcome in outcomes {
            match outcome {
                None => report.interrupted = true,
                Some(outcome) => {
                    let outcome = outcome?;
                    report.partitions_checked += 1;
                    report.elements_checked += outcome.elements;
                    report.failure_count += outcome.failure_count;
                    report.failures.extend(outcome.failures);
                }
            }
        }
        progress(n, shapes.len());
        if report.interrupted {
            break;
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Failures and work done on one partition.
#[derive(Debug)]
struct Outcome {
    shape: Partition,
    elements: u64,
    failure_count: u64,
    failures: Vec<Failure>,
    recorded: HashMap<Check, usize>,
}

impl Outcome {
    fn fail(&mut self, check: Check, detail: impl FnOnce() -> String) {
        self.failure_count += 1;
        let seen = self.recorded.entry(check).or_insert(0);
        if *seen < EXAMPLES_PER_CHECK {
            *seen += 1;
            self.failures.push(Failure { partition: self.shape.clone(), check, detail: detail() });
        }
    }

    fn expect(&mut self, check: Check, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(check, detail);
        }
    }
}

fn check_partition(shape: &Partition, config: &VerifyConfig, maps: &Maps) -> Result<Outcome> {
    let mut out = Outcome {
        shape: shape.clone(),
        elements: 0,
        failure_count: 0,
        failures: Vec::new(),
        recorded: HashMap::new(),
    };
    if config.runs(Check::Identity) {
        check_identity(shape, &mut out)?;
    }
    if config.runs(Check::Bijection) {
        check_bijection(shape, maps, &mut out)?;
    }
    if config.runs(Check::Classes) {
        check_classes(shape, &config.ks, &mut out)?;
    }
    if config.runs(Check::Rects) {
        check_rects(shape, &mut out)?;
    }
    if config.runs(Check::Powers) {
        for &k in &config.ks {
            check_powers(shape, k, maps, &mut out)?;
        }
    }
    if config.runs(Check::Restriction) {
        check_restriction(shape, maps, &mut out)?;
    }
    Ok(out)
}

fn check_identity(shape: &Partition, out: &mut Outcome) -> Result<()> {
    let h: u64 = set_size(shape, Family::H, 2)?;
    let n: u64 = set_size(shape, Family::N, 2)?;
    let c: u64 = set_size(shape, Family::C, 2)?;
    let rhs = n.checked_add(c).ok_or(Error::Overflow)?;
    out.expect(Check::Identity, h == rhs, || format!("sum h^2 = {h}, n^2 + sum c^2 = {rhs}"));
    Ok(())
}

fn check_bijection(shape: &Partition, maps: &Maps, out: &mut Outcome) -> Result<()> {
    const CHECK: Check = Check::Bijection;
    let mut images = HashSet::new();
    let mut domain = 0usize;
    for e in enumerate_h(shape, 2) {
        domain += 1;
        out.elements += 1;
        let t = match maps.phi(shape, &e) {
            Ok(t) => t,
            Err(err) => {
                out.fail(CHECK, || format!("phi({e:?}) failed: {err}"));
                continue;
            }
        };
        if let Err(err) = t.validate(shape) {
            out.fail(CHECK, || format!("phi({e:?}) = {t:?} is invalid: {err}"));
            continue;
        }
        let class = classify_h_unchecked(&e);
        let landed = match &t {
            TargetElement::N(n) => classify_n2_unchecked(n.labels[0], n.labels[1]).name(),
            TargetElement::C(_) => "C",
        };
        let expected = match class {
            HClass::H1 => "N1",
            HClass::H2 => "N2",
            HClass::H3 => "C",
        };
        out.expect(CHECK, landed == expected, || {
            format!("{e:?} in {} mapped to {landed} element {t:?}", class.name())
        });
        if class == HClass::H2 {
            let far = e.labels.iter().max();
            let south_east = t_labels(&t).iter().max();
            out.expect(CHECK, far == south_east, || {
                format!("phi2({e:?}) = {t:?} moved the south-east corner")
            });
        }
        match maps.phi_inv(shape, &t) {
            Ok(back) if back == e => {}
            Ok(back) => out.fail(CHECK, || format!("phi_inv(phi({e:?})) = {back:?}")),
            Err(err) => out.fail(CHECK, || format!("phi_inv({t:?}) failed: {err}")),
        }
        if !images.insert(t.clone()) {
            out.fail(CHECK, || format!("image {t:?} hit twice"));
        }
    }
    let mut codomain = 0usize;
    for t in enumerate_targets(shape, 2) {
        codomain += 1;
        out.elements += 1;
        let e = match maps.phi_inv(shape, &t) {
            Ok(e) => e,
            Err(err) => {
                out.fail(CHECK, || format!("phi_inv({t:?}) failed: {err}"));
                continue;
            }
        };
        if let Err(err) = validate_h(shape, &e) {
            out.fail(CHECK, || format!("phi_inv({t:?}) = {e:?} is invalid: {err}"));
            continue;
        }
        match maps.phi(shape, &e) {
            Ok(again) if again == t => {}
            Ok(again) => out.fail(CHECK, || format!("phi(phi_inv({t:?})) = {again:?}")),
            Err(err) => out.fail(CHECK, || format!("phi({e:?}) failed: {err}")),
        }
    }
    out.expect(CHECK, domain == codomain && images.len() == codomain, || {
        format!("|H| = {domain}, |N|+|C| = {codomain}, distinct images = {}", images.len())
    });
    Ok(())
}

fn t_labels(t: &TargetElement) -> &[Cell] {
    match t {
        TargetElement::N(e) => &e.labels,
        TargetElement::C(e) => &e.labels,
    }
}

fn check_classes(shape: &Partition, ks: &[u32], out: &mut Outcome) -> Result<()> {
    const CHECK: Check = Check::Classes;
    for &k in ks {
        for family in [Family::H, Family::N, Family::C] {
            let expected: u64 = set_size(shape, family, k)?;
            let counted = enumerate_set(shape, family, k as usize).count() as u64;
            out.elements += counted;
            out.expect(CHECK, counted == expected, || {
                format!("|{family}^{k}| enumerated {counted}, formula {expected}")
            });
        }
        let mut per_star: HashMap<Cell, u64> = HashMap::new();
        for e in enumerate_c(shape, k as usize) {
            *per_star.entry(e.star).or_default() += 1;
        }
        for u in shape.cells() {
            let got = per_star.get(&u).copied().unwrap_or(0);
            let want: u64 = crate::count::pow(u.content().unsigned_abs() as usize, k)?;
            out.expect(CHECK, got == want, || format!("C^{k} with star {u}: {got}, |c|^k = {want}"));
        }
    }

    let mut h_counts = [0u64; 3];
    let mut h2_per_star: HashMap<Cell, u64> = HashMap::new();
    for e in enumerate_h(shape, 2) {
        let class = classify_h_unchecked(&e);
        h_counts[class as usize] += 1;
        if class == HClass::H2 {
            *h2_per_star.entry(e.star).or_default() += 1;
        }
    }
    let sum_h2: u64 = set_size(shape, Family::H, 2)?;
    out.expect(CHECK, h_counts.iter().sum::<u64>() == sum_h2, || {
        format!("|H1|+|H2|+|H3| = {h_counts:?}, sum h^2 = {sum_h2}")
    });
    for u in shape.cells() {
        let partial = shape.cell_stats(u)?.partial_hook as u64;
        let got = h2_per_star.get(&u).copied().unwrap_or(0);
        out.expect(CHECK, got == partial * partial, || {
            format!("H2 with star {u}: {got}, partial hook squared = {}", partial * partial)
        });
    }

    let mut n_counts = [0u64; 2];
    for e in enumerate_n(shape, 2) {
        n_counts[classify_n2_unchecked(e.labels[0], e.labels[1]) as usize] += 1;
    }
    let n_sq: u64 = set_size(shape, Family::N, 2)?;
    out.expect(CHECK, n_counts[0] + n_counts[1] == n_sq, || {
        format!("|N1|+|N2| = {n_counts:?}, n^2 = {n_sq}")
    });
    let thick: u64 = count_thick_direct(shape)?;
    out.expect(CHECK, n_counts[NClass::N2 as usize] == 2 * thick, || {
        format!("|N2| = {}, thick rectangles = {thick}", n_counts[1])
    });
    out.expect(CHECK, h_counts[HClass::H2 as usize] == n_counts[NClass::N2 as usize], || {
        format!("|H2| = {}, |N2| = {}", h_counts[1], n_counts[1])
    });
    Ok(())
}

fn check_rects(shape: &Partition, out: &mut Outcome) -> Result<()> {
    const CHECK: Check = Check::Rects;
    let brute = count_rectangles_brute::<u64>(shape)?;
    let total: u64 = count_total_formula(shape)?;
    let thin: u64 = count_thin_hook(shape)?;
    let thick_direct: u64 = count_thick_direct(shape)?;
    let thick_partial = match count_thick_partial::<u64>(shape) {
        Ok(v) => Some(v),
        Err(Error::OddSum) => {
            out.fail(CHECK, || "sum of squared partial hooks is odd".into());
            None
        }
        Err(e) => return Err(e),
    };
    out.expect(CHECK, brute.total == total, || format!("brute total {}, sum ij {total}", brute.total));
    out.expect(CHECK, brute.thin == thin, || format!("brute thin {}, sum h {thin}", brute.thin));
    out.expect(CHECK, brute.thick == thick_direct, || {
        format!("brute thick {}, sum (i-1)(j-1) {thick_direct}", brute.thick)
    });
    if let Some(tp) = thick_partial {
        out.expect(CHECK, brute.thick == tp, || format!("brute thick {}, half sum h~^2 {tp}", brute.thick));
    }
    out.expect(CHECK, brute.thin + brute.thick == brute.total, || {
        format!("thin {} + thick {} != total {}", brute.thin, brute.thick, brute.total)
    });
    out.expect(CHECK, (brute.thick == 0) == !shape.contains(Cell::new(2, 2)), || {
        format!("thick = {} but (2,2) containment is {}", brute.thick, shape.contains(Cell::new(2, 2)))
    });
    Ok(())
}

fn check_powers(shape: &Partition, k: u32, maps: &Maps, out: &mut Outcome) -> Result<()> {
    const CHECK: Check = Check::Powers;
    let report = inequality_check::<u64>(shape, k)?;
    out.expect(CHECK, report.invariants_hold(), || {
        format!("k={k}: {} {} {}, hook = {}", report.lhs, report.relation, report.rhs, report.is_hook)
    });
    let hook = shape.is_hook()?;
    match k {
        0 => {}
        1 => {
            let mut image = HashSet::new();
            for t in enumerate_targets(shape, 1) {
                out.elements += 1;
                match psi1(shape, &t) {
                    Ok(e) => {
                        let valid = validate_h(shape, &e).is_ok();
                        out.expect(CHECK, valid, || format!("psi1({t:?}) = {e:?} is invalid"));
                        out.expect(CHECK, valid && psi1_in_image(shape, &e) == Ok(true), || {
                            format!("psi1({t:?}) = {e:?} fails the diagonal-hook test")
                        });
                        if !image.insert(e.clone()) {
                            out.fail(CHECK, || format!("psi1 hits {e:?} twice"));
                        }
                    }
                    Err(err) => out.fail(CHECK, || format!("psi1({t:?}) failed: {err}")),
                }
            }
            let mut total = 0usize;
            for e in enumerate_h(shape, 1) {
                total += 1;
                out.elements += 1;
                let flagged = psi1_in_image(shape, &e)?;
                out.expect(CHECK, flagged == image.contains(&e), || {
                    format!("{e:?}: in-image test {flagged}, actual image membership {}", !flagged)
                });
            }
            out.expect(CHECK, (image.len() == total) == hook, || {
                format!("k=1 image {} of {total}, hook = {hook}", image.len())
            });
        }
        2 => {
            for e in enumerate_h(shape, 2) {
                out.elements += 1;
                let general = phi_k(shape, &e);
                let special = maps.phi(shape, &e);
                out.expect(CHECK, general.is_ok() && general == special, || {
                    format!("phi_k({e:?}) = {general:?}, phi = {special:?}")
                });
            }
        }
        _ => {
            let mut image = HashSet::new();
            let mut domain = 0u64;
            for e in enumerate_h(shape, k as usize) {
                domain += 1;
                out.elements += 1;
                match phi_k(shape, &e) {
                    Ok(t) => {
                        if let Err(err) = t.validate(shape) {
                            out.fail(CHECK, || format!("phi_k({e:?}) = {t:?} is invalid: {err}"));
                        }
                        if !image.insert(t) {
                            out.fail(CHECK, || format!("phi_k collision at {e:?}"));
                        }
                    }
                    Err(err) => out.fail(CHECK, || format!("phi_k({e:?}) failed: {err}")),
                }
            }
            let n: u64 = set_size(shape, Family::N, k)?;
            let c: u64 = set_size(shape, Family::C, k)?;
            let covers = image.len() as u64 == n + c;
            out.expect(CHECK, covers == hook, || {
                format!("k={k}: {domain} elements, {} images, |N|+|C| = {}, hook = {hook}", image.len(), n + c)
            });
            if !hook {
                let witness = TargetElement::N(witness_non_image(shape, k as usize)?);
                out.expect(CHECK, !image.contains(&witness), || {
                    format!("k={k}: witness {witness:?} is in the image")
                });
            }
        }
    }
    Ok(())
}

fn check_restriction(shape: &Partition, maps: &Maps, out: &mut Outcome) -> Result<()> {
    for cell in shape.outside_cells()? {
        let report = maps.restriction_check(shape, cell)?;
        out.elements += report.elementwise_total as u64 + report.removed_h as u64;
        out.expect(Check::Restriction, report.holds, || format!("restriction at outside cell {cell} fails"));
    }
    Ok(())
}

/// Convenience wrapper without cancellation or progress reporting.
pub fn verify_quiet(config: &VerifyConfig) -> Result<VerifyReport> {
    verify(config, &AtomicBool::new(false), |_, _| {})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_campaign_passes() {
        let report = verify_quiet(&VerifyConfig::new(1)).unwrap();
        assert_eq!(report.partitions_checked, 1);
        assert!(report.success(), "{:?}", report.failures);
    }

    #[test]
    fn mutant_is_caught() {
        // smallest shape with a split H2 row element is (3,3)
        let mut config = VerifyConfig::new(6);
        config.mutant = Some(Mutant::Phi2Row);
        let report = verify_quiet(&config).unwrap();
        assert!(!report.success());
        assert!(report.failure_count >= report.failures.len() as u64);
    }

    #[test]
    fn cancellation_yields_partial_report() {
        let cancel = AtomicBool::new(true);
        let report = verify(&VerifyConfig::new(4), &cancel, |_, _| {}).unwrap();
        assert!(report.interrupted);
        assert_eq!(report.partitions_checked, 0);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn check_names_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>(), Ok(c));
        }
        assert!("bogus".parse::<Check>().is_err());
    }
}
