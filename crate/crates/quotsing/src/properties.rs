//! Seeded property suites. Each suite returns one check record; the witness
//! carries the sample count and the first few counterexamples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quotsing_core::cohomology::{
    bott_forms, bott_line, declared_sequences, gluing_sequence, les_propagate, verify_vanishing, CohomologyVector,
    DerivationStep, ProjBundleData,
};
use quotsing_core::lattice_core::hilbert_basis;
use quotsing_core::model::build_model;
use quotsing_core::report::{CertificateReport, CheckRecord, Clock, Status, Witness};
use quotsing_core::toric::{product_fan, projbundle_fan, projective_space_fan, CechOracle, TDivisor};
use quotsing_core::{Cone, Error, Fan, Lattice, LatticePoint};

pub const SUITE_SERRE_LINE: &str = "serre-bott-line";
pub const SUITE_SERRE_FORMS: &str = "serre-bott-forms";
pub const SUITE_SERRE_TORIC: &str = "serre-toric";
pub const SUITE_EULER: &str = "euler-additivity";
pub const SUITE_BIDUALITY: &str = "biduality";
pub const SUITE_HILBERT: &str = "hilbert-minimality";

pub const SUITES: [&str; 6] =
    [SUITE_SERRE_LINE, SUITE_SERRE_FORMS, SUITE_SERRE_TORIC, SUITE_EULER, SUITE_BIDUALITY, SUITE_HILBERT];

/// Random divisors drawn for the toric Serre duality suite.
pub const TORIC_SAMPLES: usize = 50;

const KEEP: usize = 5;

#[derive(Default)]
struct Tally {
    samples: usize,
    failures: Vec<Witness>,
    errors: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> Witness) {
        self.samples += 1;
        if !ok {
            if self.failures.len() < KEEP {
                self.failures.push(what());
            }
            self.errors += 1;
        }
    }

    fn record(self, name: &str, citation: &str) -> CheckRecord {
        CheckRecord::new(
            name,
            citation,
            Status::from_bool(self.errors == 0 && self.samples > 0),
            Witness::record([
                ("samples", Witness::from(self.samples)),
                ("failures", Witness::from(self.errors)),
                ("examples", Witness::List(self.failures)),
            ]),
        )
    }
}

fn error_record(name: &str, citation: &str, e: Error) -> CheckRecord {
    CheckRecord::new(name, citation, Status::Fail, Witness::record([("error", Witness::text(e))]))
}

/// `h^i(P^m, O(d)) = h^{m-i}(P^m, O(-d-m-1))` for `|d| <= 20`.
pub fn serre_bott_line() -> CheckRecord {
    let mut t = Tally::default();
    for m in 1..=4usize {
        for d in -20..=20i64 {
            let a = bott_line(m, d);
            let b = bott_line(m, -d - m as i64 - 1);
            let ok = (0..=m).all(|i| a.get(i) == b.get(m - i));
            t.check(ok, || Witness::ints([m as i64, d]));
        }
    }
    t.record(SUITE_SERRE_LINE, "Serre duality for O(d) on P^m")
}

/// `h^q(Ω^p(d)) = h^{m-q}(Ω^{m-p}(-d))` for `|d| <= 10`.
pub fn serre_bott_forms() -> CheckRecord {
    let mut t = Tally::default();
    for m in 1..=4usize {
        for p in 0..=m {
            for d in -10..=10i64 {
                let pair = bott_forms(m, p, d).and_then(|a| Ok((a, bott_forms(m, m - p, -d)?)));
                let Ok((a, b)) = pair else {
                    return error_record(SUITE_SERRE_FORMS, "Serre duality for twisted forms", pair.unwrap_err());
                };
                let ok = (0..=m).all(|q| a.get(q) == b.get(m - q));
                t.check(ok, || Witness::ints([m as i64, p as i64, d]));
            }
        }
    }
    t.record(SUITE_SERRE_FORMS, "Serre duality for twisted forms on P^m")
}

fn toric_fans() -> Result<Vec<(&'static str, Fan)>, Error> {
    Ok(vec![
        ("P2", projective_space_fan(2)?),
        ("P1xP1", product_fan(&projective_space_fan(1)?, &projective_space_fan(1)?)?),
        ("P3", projective_space_fan(3)?),
        ("F_2(n=2)", projbundle_fan(2, 2)?),
        ("F_1(n=2)", projbundle_fan(1, 2)?),
    ])
}

/// `h^i(O(D)) = h^{dim-i}(O(K - D))` through the Čech oracle on random
/// divisors with coefficients in `[-3, 3]`.
pub fn serre_toric(seed: u64) -> CheckRecord {
    let citation = "Serre duality for the toric Čech oracle";
    let fans = match toric_fans() {
        Ok(f) => f,
        Err(e) => return error_record(SUITE_SERRE_TORIC, citation, e),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for k in 0..TORIC_SAMPLES {
        let (label, fan) = &fans[k % fans.len()];
        let coeffs: Vec<i64> = (0..fan.num_rays()).map(|_| rng.gen_range(-3..=3)).collect();
        let run = || -> Result<bool, Error> {
            let oracle = CechOracle::new(fan)?;
            let d = TDivisor::new(fan, coeffs.clone())?;
            let dual = &TDivisor::canonical(fan) - &d;
            let (a, b) = (oracle.cohomology(&d)?, oracle.cohomology(&dual)?);
            let r = fan.rank();
            Ok((0..=r).all(|i| a.get(i) == b.get(r - i)))
        };
        match run() {
            Ok(ok) => t.check(ok, || Witness::record([("fan", Witness::from(*label)), ("d", Witness::ints(coeffs.clone()))])),
            Err(e) => return error_record(SUITE_SERRE_TORIC, citation, e),
        }
    }
    t.record(SUITE_SERRE_TORIC, citation)
}

fn chi_additive(a: &CohomologyVector, b: &CohomologyVector, c: &CohomologyVector) -> Option<bool> {
    Some(b.euler_characteristic()? == a.euler_characteristic()? + c.euler_characteristic()?)
}

/// `χ(B) = χ(A) + χ(C)` on every declared sequence over a twist grid, and on
/// every twisted sequence met in the vanishing chains.
pub fn euler_additivity() -> CheckRecord {
    let citation = "Euler characteristic is additive on short exact sequences";
    let mut t = Tally::default();
    let mut run = || -> Result<(), Error> {
        for (n, a) in [(2usize, 2i64), (3, 2), (3, 0), (4, 2)] {
            let b = ProjBundleData::new(n, a)?;
            for seq in declared_sequences(&b) {
                let gluing = seq == gluing_sequence();
                for k in 0..=4i64 {
                    for l in -2..=4i64 {
                        if gluing && k != l {
                            continue;
                        }
                        let (x, y, z) = match les_propagate(&b, &seq, (k, l)) {
                            Ok(v) => v,
                            Err(Error::Refused(_) | Error::Capacity(_)) => continue,
                            Err(e) => return Err(e),
                        };
                        if let Some(ok) = chi_additive(&x, &y, &z) {
                            t.check(ok, || Witness::ints([n as i64, a, k, l]));
                        }
                    }
                }
            }
        }
        for n in 2..=4 {
            for g in verify_vanishing(n, 5)?.groups {
                for step in &g.chain {
                    if let DerivationStep::Sequence { sub, middle, quotient, twist, .. } = step {
                        if let Some(ok) = chi_additive(sub, middle, quotient) {
                            t.check(ok, || Witness::ints([n as i64, twist.0, twist.1]));
                        }
                    }
                }
            }
        }
        Ok(())
    };
    if let Err(e) = run() {
        return error_record(SUITE_EULER, citation, e);
    }
    t.record(SUITE_EULER, citation)
}

fn random_cone(rng: &mut ChaCha8Rng, simplicial: bool) -> Option<Cone> {
    let r = rng.gen_range(2..=3usize);
    let k = if simplicial { r } else { rng.gen_range(r..=r + 3) };
    let gens: Vec<LatticePoint> =
        (0..k).map(|_| LatticePoint::new((0..r).map(|_| rng.gen_range(-3..=3)).collect())).collect();
    let c = Cone::new(Lattice::standard(r), gens).ok()?;
    (c.is_full_dimensional() && c.is_pointed() && (!simplicial || c.is_simplicial())).then_some(c)
}

/// `(σ∨)∨ = σ` on random full-dimensional pointed cones.
pub fn biduality(seed: u64, samples: usize) -> CheckRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut t = Tally::default();
    while t.samples < samples {
        let Some(c) = random_cone(&mut rng, false) else { continue };
        let back = c.dual_cone().and_then(|d| d.dual_cone());
        let ok = back.as_ref().map_or(false, |b| b.normalized() == c.normalized());
        t.check(ok, || Witness::matrix(c.generators().iter().map(|g| g.0.clone())));
    }
    t.record(SUITE_BIDUALITY, "a cone is the dual of its dual")
}

/// Hilbert bases of the model monoids and of random simplicial cones are
/// minimal and generate every monoid point up to a grading bound.
pub fn hilbert_minimality(seed: u64, samples: usize) -> CheckRecord {
    let citation = "Hilbert basis is minimal and generates the monoid";
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4b1d);
    let mut cones = Vec::new();
    for n in 1..=2 {
        match build_model(n).and_then(|m| m.sigma.dual_cone()) {
            Ok(c) => cones.push(c),
            Err(e) => return error_record(SUITE_HILBERT, citation, e),
        }
    }
    while cones.len() < samples + 2 {
        if let Some(c) = random_cone(&mut rng, true) {
            cones.push(c);
        }
    }
    let mut t = Tally::default();
    for c in &cones {
        let run = || -> Result<bool, Error> {
            let hb = hilbert_basis(c)?;
            // a grading positive on the cone: the sum of the dual generators
            let dual = c.dual_cone()?;
            let r = c.lattice().rank();
            let grading: Vec<i64> = (0..r).map(|i| dual.generators().iter().map(|g| g[i]).sum()).collect();
            let top = hb.elements().iter().map(|h| quotsing_core::arith::dot(&grading, h)).max().unwrap_or(0);
            let points = hb.monoid_points_up_to(&grading, 2 * top)?;
            let mut ok = hb.is_minimal();
            for p in &points {
                ok &= hb.decomposes(p, &grading)?;
            }
            Ok(ok)
        };
        match run() {
            Ok(ok) => t.check(ok, || Witness::matrix(c.generators().iter().map(|g| g.0.clone()))),
            Err(e) => return error_record(SUITE_HILBERT, citation, e),
        }
    }
    t.record(SUITE_HILBERT, citation)
}

/// Runs the named suites (all of [`SUITES`] when `names` is empty).
pub fn run_properties(names: &[&str], seed: u64, clock: &dyn Clock) -> CertificateReport {
    let want = |s: &str| names.is_empty() || names.contains(&s);
    let mut report = CertificateReport::default();
    let suites: [(&str, Box<dyn Fn() -> CheckRecord>); 6] = [
        (SUITE_SERRE_LINE, Box::new(serre_bott_line)),
        (SUITE_SERRE_FORMS, Box::new(serre_bott_forms)),
        (SUITE_SERRE_TORIC, Box::new(move || serre_toric(seed))),
        (SUITE_EULER, Box::new(euler_additivity)),
        (SUITE_BIDUALITY, Box::new(move || biduality(seed, 50))),
        (SUITE_HILBERT, Box::new(move || hilbert_minimality(seed, 20))),
    ];
    for (name, f) in suites.iter() {
        if want(name) {
            report.push(quotsing_core::report::timed(clock, || f()));
        }
    }
    report
}
