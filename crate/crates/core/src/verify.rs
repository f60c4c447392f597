//! Seeded verification suites over the whole library, one per acceptance
//! criterion.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canonical::{CanonicalBasis, MinorSpec, ShiftCheck};
use crate::error::Error;
use crate::invariants::{
    borel_weil_module, check_highest_weight_monomial, generation_check, weyl_dimension, CoidealSpec, Invariants,
};
use crate::kashiwara::{Kashiwara, LeadingTerm};
use crate::qmatrix::identities::{
    commutation_coefficient, first_commutation_defect, minor_power, power_expansion, second_commutation_defect, Corners,
};
use crate::qmatrix::{compositions, matrices_of_degree, rewrite_measure, straighten_observed, Basis, Element, ExponentMatrix, Letter, Word};
use crate::uq::{check_action, check_natural_rep, check_representation, monomial_weight, Generator, Side, Translations, WeightVector};
use crate::LaurentPoly;

const MAX_RECORDED: usize = 5;

/// Outcome of one named check: the number of cases tried and the failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failure_count: usize,
    /// The first few failures.
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), cases: 0, failure_count: 0, failures: Vec::new() }
    }

    pub fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.cases > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub criterion: u8,
    pub seed: u64,
    pub checks: Vec<Check>,
    /// Measured values worth recording.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "[{status}] {} (criterion {}, seed {})", self.suite, self.criterion, self.seed)?;
        for c in &self.checks {
            let s = if c.passed() { "ok" } else { "FAILED" };
            writeln!(f, "  {s:6} {} ({} cases, {} failures)", c.name, c.cases, c.failure_count)?;
            for msg in &c.failures {
                writeln!(f, "         {msg}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note   {n}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Relations,
    Bar,
    Canonical,
    Minors,
    Power,
    Positivity,
    Actions,
    Kashiwara,
    BorelWeil,
    Invariants,
    Generation,
    DetqShift,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Relations,
        Suite::Bar,
        Suite::Canonical,
        Suite::Minors,
        Suite::Power,
        Suite::Positivity,
        Suite::Actions,
        Suite::Kashiwara,
        Suite::BorelWeil,
        Suite::Invariants,
        Suite::Generation,
        Suite::DetqShift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Bar => "bar",
            Suite::Canonical => "canonical",
            Suite::Minors => "minors",
            Suite::Power => "power",
            Suite::Positivity => "positivity",
            Suite::Actions => "actions",
            Suite::Kashiwara => "kashiwara",
            Suite::BorelWeil => "borel-weil",
            Suite::Invariants => "invariants",
            Suite::Generation => "generation",
            Suite::DetqShift => "detq-shift",
        }
    }

    pub fn criterion(self) -> u8 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u8 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Shared state for running suites: one canonical basis per `n`, and the seed.
pub struct Verifier {
    seed: u64,
    cache_dir: Option<PathBuf>,
    bases: [OnceLock<CanonicalBasis>; 5],
}

impl Verifier {
    pub fn new(seed: u64) -> Self {
        Verifier { seed, cache_dir: None, bases: Default::default() }
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The canonical basis for `n` (at most 4).
    pub fn basis(&self, n: usize) -> &CanonicalBasis {
        self.bases[n].get_or_init(|| {
            let cb = CanonicalBasis::new(n);
            match &self.cache_dir {
                Some(dir) => cb.with_cache_dir(dir.clone()),
                None => cb,
            }
        })
    }

    fn rng(&self, suite: Suite) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ ((suite.criterion() as u64) << 32))
    }

    pub fn run(&self, suite: Suite) -> Result<SuiteReport, Error> {
        let mut report = SuiteReport { suite, criterion: suite.criterion(), seed: self.seed, checks: Vec::new(), notes: Vec::new() };
        match suite {
            Suite::Relations => self.relations(&mut report)?,
            Suite::Bar => self.bar(&mut report)?,
            Suite::Canonical => self.canonical(&mut report)?,
            Suite::Minors => self.minors(&mut report)?,
            Suite::Power => self.power(&mut report)?,
            Suite::Positivity => self.positivity(&mut report)?,
            Suite::Actions => self.actions(&mut report)?,
            Suite::Kashiwara => self.kashiwara(&mut report)?,
            Suite::BorelWeil => self.borel_weil(&mut report)?,
            Suite::Invariants => self.invariants(&mut report)?,
            Suite::Generation => self.generation(&mut report)?,
            Suite::DetqShift => self.detq_shift(&mut report)?,
        }
        Ok(report)
    }

    pub fn run_all(&self) -> Result<Vec<SuiteReport>, Error> {
        Suite::ALL.into_iter().map(|s| self.run(s)).collect()
    }

    fn relations(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let mut rng = self.rng(Suite::Relations);
        let alg = self.basis(3).algebra();
        let mut assoc = Check::new("associativity on random monomial triples (n = 3, degree <= 4)");
        let mut routes = Check::new("leftmost rewriting agrees with insertion on shuffled words");
        let mut measure = Check::new("rewrite measure decreases on every step");
        for _ in 0..200 {
            let [a, b, c] = [0; 3].map(|_| random_monomial(&mut rng, 3, 4));
            let (ea, eb, ec) = (plain(&a), plain(&b), plain(&c));
            let left = alg.multiply(&alg.multiply(&ea, &eb)?, &ec)?;
            let right = alg.multiply(&ea, &alg.multiply(&eb, &ec)?)?;
            assoc.case(left == right, || format!("({a:?} {b:?}) {c:?}"));

            let mut letters: Vec<Letter> = a.letters().chain(b.letters()).collect();
            letters.shuffle(&mut rng);
            let w = Word::new(3, letters);
            let mut decreasing = true;
            let s = straighten_observed(&w, |before, after| decreasing &= after < before);
            routes.case(s == alg.word_product(&w), || format!("{:?}", w.letters));
            measure.case(decreasing, || format!("{:?} (measure {:?})", w.letters, rewrite_measure(&w.letters)));
        }
        report.checks.extend([assoc, routes, measure]);
        Ok(())
    }

    fn bar(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let mut leading = Check::new("leading coefficient of bar(x^A) is E(A) (n <= 3, degree <= 5)");
        let mut involution = Check::new("bar is an involution on x^A");
        let mut lower = Check::new("bar(x(A)) - x(A) is supported below A");
        for n in 2..=3 {
            let alg = self.basis(n).algebra();
            for d in 0..=5 {
                for a in matrices_of_degree(n, d) {
                    let x = plain(&a);
                    let bx = alg.bar(&x)?;
                    leading.case(bx.coeff(&a) == a.stat_e(), || format!("{a:?}: {} vs {}", bx.coeff(&a), a.stat_e()));
                    involution.case(alg.bar(&bx)? == x, || format!("{a:?}"));
                    let xm = Element::basis_vector(a.clone(), Basis::Modified);
                    let diff = alg.bar(&xm)?.sub(&xm)?;
                    lower.case(diff.support().all(|b| alg.less_than(b, &a)), || format!("{a:?}"));
                }
            }
        }
        let mut anti = Check::new("bar(fg) = bar(g) bar(f) on random pairs (n = 3)");
        let mut rng = self.rng(Suite::Bar);
        let alg = self.basis(3).algebra();
        for _ in 0..100 {
            let f = random_element(&mut rng, 3, 3, 3);
            let g = random_element(&mut rng, 3, 3, 3);
            let lhs = alg.bar(&alg.multiply(&f, &g)?)?;
            let rhs = alg.multiply(&alg.bar(&g)?, &alg.bar(&f)?)?;
            anti.case(lhs == rhs, || format!("{f:?} * {g:?}"));
        }
        report.checks.extend([leading, involution, lower, anti]);
        Ok(())
    }

    fn canonical(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let mut tri = Check::new("b(A) = x(A) + qZ[q] lower terms (n <= 3, degree <= 5)");
        let mut inv = Check::new("b(A) is bar-invariant");
        for n in 2..=3 {
            let cb = self.basis(n);
            for d in 0..=5 {
                for a in matrices_of_degree(n, d) {
                    let e = cb.canonical_element(&a)?;
                    tri.case(e.is_unitriangular() && e.top == a, || format!("{a:?}"));
                    let b = e.to_element();
                    inv.case(cb.algebra().bar(&b)? == b, || format!("{a:?}"));
                }
            }
        }
        let mut det = Check::new("top element of the n = 2 block ro = co = (1,1) is det_q");
        let cb = self.basis(2);
        let block = cb.block(&[1, 1], &[1, 1])?;
        let top = &block.matrices[0];
        det.case(
            *top == ExponentMatrix::identity(2) && cb.b(top)? == cb.to_modified(&cb.quantum_determinant())?,
            || format!("top {top:?}"),
        );
        report.checks.extend([tri, inv, det]);
        Ok(())
    }

    fn minors(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let cb = self.basis(3);
        let mut single = Check::new("every quantum minor of n = 3 is a single canonical term");
        for size in 1..=3 {
            for rows in subsets(3, size) {
                for cols in subsets(3, size) {
                    let spec = MinorSpec::new(rows.clone(), cols)?;
                    let canon = cb.expand_in_canonical(&cb.quantum_minor(&spec)?)?;
                    single.case(is_single_unit_term(&canon), || format!("{spec}"));
                }
            }
        }
        let mut sigma = Check::new("sigma(b(A)) = b(A^T) (n <= 3, degree <= 4)");
        for n in 2..=3 {
            let cb = self.basis(n);
            for d in 0..=4 {
                for a in matrices_of_degree(n, d) {
                    let image = cb.expand_in_canonical(&cb.algebra().sigma(&cb.b(&a)?)?)?;
                    let ok = is_single_unit_term(&image) && image.coeff(&a.transpose()).is_one();
                    sigma.case(ok, || format!("{a:?}"));
                }
            }
        }
        report.checks.extend([single, sigma]);
        Ok(())
    }

    fn power(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let alg = self.basis(3).algebra();
        let q2 = LaurentPoly::q_pow(2);
        let mut power = Check::new("(x_ij x_kl - q^2 x_il x_kj)^s expansion, s = 1..3, all corners of n = 3");
        let mut first = Check::new("x_kl x_ij^s = x_ij^s x_kl + (q^{2-4s} - q^2) x_ij^{s-1} x_il x_kj, s = 1..4");
        let mut second = Check::new("x_kl^s x_ij = x_ij x_kl^s + (q^{2-4s} - q^2) x_il x_kj x_kl^{s-1}, s = 1..4");
        let mut q_minor = Check::new("the minor with coefficient q instead of q^2 is not an identity, s = 1..3");
        let mut minus_q_inverse = Check::new("the first commutation identity with q^{2-4s} - q^-2 fails at s = 1");
        for p in Corners::all(3) {
            for s in 1..=3 {
                let rhs = power_expansion(alg, p, s)?;
                power.case(minor_power(alg, p, &q2, s)? == rhs, || format!("{p:?} s = {s}"));
                q_minor.case(minor_power(alg, p, &LaurentPoly::q_pow(1), s)? != rhs, || format!("{p:?} s = {s}"));
            }
            for s in 1..=4 {
                let c = commutation_coefficient(s);
                first.case(first_commutation_defect(alg, p, s, &c)?.is_zero(), || format!("{p:?} s = {s}"));
                second.case(second_commutation_defect(alg, p, s, &c)?.is_zero(), || format!("{p:?} s = {s}"));
            }
            let alternative = LaurentPoly::q_pow(-2) - LaurentPoly::q_pow(-2);
            minus_q_inverse.case(!first_commutation_defect(alg, p, 1, &alternative)?.is_zero(), || format!("{p:?}"));
        }
        report.checks.extend([power, first, second, q_minor, minus_q_inverse]);
        Ok(())
    }

    fn positivity(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let mut check = Check::new("structure constants of b(A) b(B) lie in Z+[q, q^-1] (n <= 3, degrees <= 3)");
        for n in 2..=3 {
            let cb = self.basis(n);
            let mats: Vec<ExponentMatrix> = (0..=3).flat_map(|d| matrices_of_degree(n, d)).collect();
            for a in &mats {
                for b in &mats {
                    let s = cb.structure_constants(a, b)?;
                    check.case(s.iter().all(|(_, c)| c.is_nonnegative()), || format!("b({a:?}) b({b:?})"));
                }
            }
        }
        report.checks.push(check);
        Ok(())
    }

    fn actions(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let mut natural = Check::new("defining relations on the natural representation (n = 2, 3, 4)");
        for n in 2..=4 {
            for r in check_natural_rep(n) {
                natural.case(r.holds, || format!("n = {n}: {}", r.name));
            }
        }
        let mut rng = self.rng(Suite::Actions);
        let alg = self.basis(3).algebra();
        let tr = Translations::new(alg);
        let gens: Vec<Generator> = Generator::all(3);
        let mut commute = Check::new("L and R actions commute on random elements (n = 3)");
        let mut left = Check::new("defining relations hold for the L action");
        let mut right = Check::new("defining relations hold for the R action");
        for t in 0..100 {
            let f = random_element(&mut rng, 3, 3, 3);
            for &g in &gens {
                for &h in &gens {
                    let lr = tr.act(Side::L, g, &tr.act(Side::R, h, &f)?)?;
                    let rl = tr.act(Side::R, h, &tr.act(Side::L, g, &f)?)?;
                    commute.case(lr == rl, || format!("L_{g} R_{h} on {f:?}"));
                }
            }
            if t < 20 {
                for r in check_action(alg, Side::L, &f)? {
                    left.case(r.holds, || format!("{} on {f:?}", r.name));
                }
                for r in check_action(alg, Side::R, &f)? {
                    right.case(r.holds, || format!("{} on {f:?}", r.name));
                }
            }
        }
        report.checks.extend([natural, commute, left, right]);
        Ok(())
    }

    fn kashiwara(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let mut tri = Check::new("x(A)_i = x(A) + qZ[q] lower terms");
        let mut kernel = Check::new("L_{theta(E_i)}, L_{theta(F_i)} and E~_i, F~_i have the same kernels on b(A) and x(A)_i");
        let mut vanish = Check::new("E~_i b(A) = 0 iff E~_i x(A)_i = 0 (and for F~_i)");
        let mut leading = Check::new("E~_i b(A) and F~_i b(A) are canonical elements mod qL*");
        let mut bar_i = Check::new("bar(x(A)_i) = x(A)_i + lower terms in basis i");
        let mut rederive = Check::new("the triangular solve in basis i reproduces b(A)");
        let mut right = Check::new("sigma E~_i sigma and sigma F~_i sigma have the kernels of R_{E_i} and R_{F_i}");
        let mut applicable = 0;
        for (n, dmax) in [(2, 5), (3, 4)] {
            let cb = self.basis(n);
            let alg = cb.algebra();
            let tr = Translations::new(alg);
            for i in 1..n {
                let k = Kashiwara::new(cb, i)?;
                for d in 0..=dmax {
                    for ro in compositions(d, n) {
                        for co in compositions(d, n) {
                            for (a, b_i) in k.canonical_from_basis_i(&ro, &co)? {
                                let b = cb.b(&a)?;
                                rederive.case(b_i == b, || format!("n = {n}, i = {i}, {a:?}"));
                                let el = k.basis_element(&a)?;
                                let ok = el.modified.iter().all(|(m, c)| if *m == a { c.is_one() } else { c.in_q_zq() && alg.less_than(m, &a) });
                                tri.case(ok, || format!("n = {n}, i = {i}, {a:?}"));
                                let expansion = k.expand_basis_i(&alg.bar(&el.modified)?)?;
                                let ok = expansion.iter().all(|(m, c)| if *m == a { c.is_one() } else { alg.less_than(m, &a) });
                                bar_i.case(ok, || format!("n = {n}, i = {i}, {a:?}"));
                                let kb = k.kernel_agreement(&b)?;
                                let kx = k.kernel_agreement(&el.modified)?;
                                kernel.case(kb.agrees() && kx.agrees(), || format!("n = {n}, i = {i}, {a:?}: {kb:?} {kx:?}"));
                                vanish.case(
                                    kb.tilde_e_zero == kx.tilde_e_zero && kb.tilde_f_zero == kx.tilde_f_zero,
                                    || format!("n = {n}, i = {i}, {a:?}"),
                                );
                                for raise in [true, false] {
                                    match k.leading_term_check(&a, raise)? {
                                        LeadingTerm::NotApplicable => {}
                                        LeadingTerm::Holds(_) => {
                                            applicable += 1;
                                            leading.case(true, String::new);
                                        }
                                        LeadingTerm::Fails(e) => leading.case(false, || format!("n = {n}, i = {i}, raise = {raise}, {a:?}: {e:?}")),
                                    }
                                }
                                let re = tr.act(Side::R, Generator::e(i), &b)?.is_zero();
                                let rf = tr.act(Side::R, Generator::f(i), &b)?.is_zero();
                                let te = k.tilde_e_right(&b)?.is_zero();
                                let tf = k.tilde_f_right(&b)?.is_zero();
                                right.case(re == te && rf == tf, || format!("n = {n}, i = {i}, {a:?}"));
                            }
                        }
                    }
                }
            }
        }
        report.notes.push(format!("leading-term property applicable to {applicable} images"));
        report.checks.extend([tri, kernel, vanish, leading, bar_i, rederive, right]);
        Ok(())
    }

    fn borel_weil(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let cases: [(usize, &[i64], u128); 5] =
            [(2, &[1], 2), (3, &[1, 0], 3), (3, &[0, 1], 3), (3, &[2, 0], 6), (3, &[1, 1], 8)];
        let mut dim = Check::new("dimension of the Borel-Weil block matches the expected and Weyl dimensions");
        let mut closed = Check::new("R-action preserves the block and satisfies the defining relations");
        let mut highest = Check::new("the block has one R-highest vector, of weight lambda");
        let mut monomial = Check::new("Delta_1^l1 ... is a single canonical term killed by all L_{E_i} and R_{E_i}");
        for (n, lambda, expected) in cases {
            let cb = self.basis(n);
            let m = borel_weil_module(cb, lambda)?;
            let weyl = weyl_dimension(&WeightVector::from_fundamental(lambda));
            dim.case(m.dimension() as u128 == expected && weyl == expected, || {
                format!("n = {n}, lambda = {lambda:?}: {} (Weyl {weyl}, expected {expected})", m.dimension())
            });
            let relations = check_representation(n, m.dimension(), |g| m.action(g).cloned().expect("all generators present"));
            let failed: Vec<&str> = relations.iter().filter(|r| !r.holds).map(|r| r.name.as_str()).collect();
            closed.case(m.closed && failed.is_empty(), || format!("n = {n}, lambda = {lambda:?}: closed {} {failed:?}", m.closed));
            let ok = match m.highest_weight.as_slice() {
                [a] => monomial_weight(a, Side::R).sl == lambda.to_vec(),
                _ => false,
            };
            highest.case(ok, || format!("n = {n}, lambda = {lambda:?}: {:?}", m.highest_weight));
            let hw = check_highest_weight_monomial(cb, lambda)?;
            monomial.case(hw.passes(), || format!("n = {n}, lambda = {lambda:?}: {hw:?}"));
            report.notes.push(format!("n = {n}, lambda = {lambda:?}: dimension {}, highest {:?}", m.dimension(), m.highest_weight));
        }
        let mut dominant = Check::new("U_q(n_-)-invariants have L-weight -lambda with lambda dominant (n = 3, degree <= 4)");
        let inv = Invariants::new(self.basis(3), CoidealSpec::lowering(3))?;
        for a in inv.invariant_basis(4, false)?.members() {
            let w = monomial_weight(a, Side::L).sl;
            dominant.case(w.iter().all(|&x| x <= 0), || format!("{a:?}: {w:?}"));
        }
        report.checks.extend([dim, closed, highest, monomial, dominant]);
        Ok(())
    }

    fn invariants(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let cb = self.basis(3);
        let tr = Translations::new(cb.algebra());
        let mut kernel = Check::new("invariant count per block equals the kernel dimension (n = 3, truncation 3)");
        let mut members = Check::new("reported invariants satisfy L_x b = eps(x) b, recomputed in the plain basis");
        let mut weights = Check::new("invariant elements are L- and R-weight vectors");
        let mut string = Check::new("string property: products and R_{E_i} images stay in the positive span");
        for spec in ["lowering", "theta:1", "F1,K2,K2inv"] {
            let spec = CoidealSpec::parse(3, spec)?;
            let inv = Invariants::new(cb, spec.clone())?;
            for d in 0..=3 {
                for ro in compositions(d, 3) {
                    for co in compositions(d, 3) {
                        let k = inv.kernel_cross_check(&ro, &co)?;
                        kernel.case(k.agrees(), || format!("{spec} {k:?}"));
                    }
                }
            }
            let basis = inv.invariant_basis(3, false)?;
            for a in basis.members() {
                let b = cb.b(a)?.to_basis(Basis::Plain)?;
                let mut ok = true;
                for &g in &spec.generators {
                    ok &= tr.act(Side::L, g, &b)? == b.scale(&g.counit());
                }
                members.case(ok, || format!("{spec} {a:?}"));
            }
            weights.case(basis.weight_failures.is_empty(), || format!("{spec}: {:?}", basis.weight_failures));
            let s = inv.string_property_check(4, 200, self.seed)?;
            for c in &s.counterexamples {
                string.case(false, || format!("{spec}: {c}"));
            }
            string.case(true, String::new);
            report.notes.push(format!(
                "{spec}: {} invariant b(A) up to degree 3 ({} with a zero diagonal entry); {} products and {} raising images checked",
                basis.members().count(),
                inv.invariant_basis(3, true)?.members().count(),
                s.pairs_checked,
                s.raising_checked
            ));
        }
        report.checks.extend([kernel, members, weights, string]);
        Ok(())
    }

    fn generation(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let cb = self.basis(3);
        let mut main = Check::new("Theta = {1}, n = 3: invariant span equals the span of minor products, degrees 0..3");
        let mut others = Check::new("Theta = {}, {2}, {1,2}, n = 3: spans agree, degrees 0..3");
        for g in generation_check(cb, &[1], 3)? {
            main.case(g.spans.equal(), || format!("{g:?}"));
            report.notes.push(format!("Theta = {{1}}, degree {}: {} invariants, rank {}", g.degree, g.invariant_count, g.spans.rank_joint));
        }
        for theta in [&[][..], &[2], &[1, 2]] {
            for g in generation_check(cb, theta, 3)? {
                others.case(g.spans.equal(), || format!("Theta = {theta:?}: {g:?}"));
            }
        }
        report.checks.extend([main, others]);
        Ok(())
    }

    fn detq_shift(&self, report: &mut SuiteReport) -> Result<(), Error> {
        let mut shift = Check::new("det_q b(A) is a unit multiple of b(A + Id) (n = 2 degree <= 5, n = 3 degree <= 3)");
        let mut scalars = BTreeSet::new();
        for (n, dmax) in [(2, 5), (3, 3)] {
            let cb = self.basis(n);
            for d in 0..=dmax {
                for a in matrices_of_degree(n, d) {
                    let c = cb.detq_shift_check(&a)?;
                    if let ShiftCheck::Single { scalar, .. } = &c {
                        scalars.insert(scalar.to_string());
                    }
                    shift.case(c.unit_scalar().is_some(), || format!("n = {n}, {a:?}: {c:?}"));
                }
            }
        }
        report.notes.push(format!("measured scalars: {}", scalars.into_iter().collect::<Vec<_>>().join(", ")));
        let mut reduce = Check::new("sl_reduce(det_q f) = sl_reduce(f) on random f");
        let mut rng = self.rng(Suite::DetqShift);
        for n in 2..=3 {
            let cb = self.basis(n);
            let det = cb.quantum_determinant();
            for _ in 0..50 {
                let f = random_element(&mut rng, n, 3, 3);
                let lhs = cb.sl_reduce(&cb.algebra().multiply(&det, &f)?)?;
                reduce.case(lhs == cb.sl_reduce(&f)?, || format!("n = {n}, {f:?}"));
            }
        }
        report.checks.extend([shift, reduce]);
        Ok(())
    }
}

fn plain(a: &ExponentMatrix) -> Element {
    Element::basis_vector(a.clone(), Basis::Plain)
}

fn is_single_unit_term(e: &Element) -> bool {
    e.len() == 1 && e.iter().all(|(_, c)| c.is_one())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// A monomial of uniformly random degree at most `max_degree`.
pub fn random_monomial(rng: &mut impl Rng, n: usize, max_degree: u32) -> ExponentMatrix {
    let d = rng.gen_range(0..=max_degree);
    let mut m = ExponentMatrix::zero(n);
    for _ in 0..d {
        m = m.add_letter(Letter::new(rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    m
}

/// A plain-basis element with up to `terms` monomials and coefficients `±q^k`, `|k| <= 2`.
pub fn random_element(rng: &mut impl Rng, n: usize, max_degree: u32, terms: usize) -> Element {
    let mut e = Element::zero(n, Basis::Plain);
    for _ in 0..rng.gen_range(1..=terms) {
        let c = LaurentPoly::q_pow(rng.gen_range(-2..=2));
        let c = if rng.gen_bool(0.5) { c } else { -c };
        e.add_term(random_monomial(rng, n, max_degree), &c);
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::DetqShift.criterion(), 12);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn seeded_sampling_is_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(3);
        let mut b = ChaCha8Rng::seed_from_u64(3);
        assert_eq!(random_element(&mut a, 3, 3, 3), random_element(&mut b, 3, 3, 3));
    }

    #[test]
    fn check_records_failures() {
        let mut c = Check::new("x");
        assert!(!c.passed());
        c.case(true, String::new);
        assert!(c.passed());
        for i in 0..10 {
            c.case(false, || i.to_string());
        }
        assert_eq!(c.failure_count, 10);
        assert_eq!(c.failures.len(), MAX_RECORDED);
    }
}
