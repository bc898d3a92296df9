//! The verification suite.
//!
//! Each finitely checkable claim is a [`Check`] registered by name in a
//! [`CheckRegistry`]. Checks never panic or short-circuit the suite; a failure is
//! recorded in the [`VerificationReport`] together with a witness.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cox::{
    enumerate_sections, multidegree, weight_intersections, CoxMonomial, IRRELEVANT_PAIRS, NUM_VARS, T,
    TAU, TAU_CYCLE, U, VAR_NAMES, WEIGHTS, X, Z,
};
use crate::cyclotomic::CycNum;
use crate::ncpoly::{parse, Alphabet, NcPoly};
use crate::ore::{commutes_with_generators, from_xy, normal_form, pbw_basis, pbw_coordinates};
use crate::picard::{
    chi, check_eigensystem, h0_closed, intersect, is_ample, lemma_van_conditions, DivisorClass, ThetaMatrix,
    K,
};
use crate::thcr::{parse_word, phi_word, words_of_degree, LOW_DEGREE_TABLE};

pub const DEFAULT_MAX_DEGREE: usize = 24;
pub const MIN_MAX_DEGREE: usize = 6;

/// Largest `m` checked for each row of the generation divisor table.
pub const GENERATION_TABLE_MAX_M: i64 = 6;

/// Number of random pairs in the isometry check.
pub const ISOMETRY_SAMPLES: usize = 1000;

/// Claims that have no finite certificate; listed in every report.
pub const NOT_MACHINE_CHECKABLE: [&str; 6] = [
    "equivalence of Qcoh(B3) with graded R-modules modulo torsion",
    "sigma-ampleness of L_1",
    "R is noetherian",
    "R has global dimension 3",
    "R is Auslander-Gorenstein and Cohen-Macaulay",
    "R is a finite module over its center",
];

/// Parameters shared by all checks.
#[derive(Debug, Clone)]
pub struct VerifyContext {
    pub max_degree: usize,
    pub theta: ThetaMatrix,
    pub seed: u64,
    pub record_timing: bool,
}

impl VerifyContext {
    pub fn new(max_degree: usize) -> Self {
        VerifyContext { max_degree, theta: ThetaMatrix::standard(), seed: 0x5eed, record_timing: false }
    }

    /// A context whose automorphism matrix is replaced, for fault injection.
    pub fn with_theta(mut self, theta: ThetaMatrix) -> Self {
        self.theta = theta;
        self
    }

    pub fn divisor(&self, n: usize) -> DivisorClass {
        self.theta.divisor_sequence(n)
    }
}

impl Default for VerifyContext {
    fn default() -> Self {
        VerifyContext::new(DEFAULT_MAX_DEGREE)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// What a check returns: evidence on success, evidence plus witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass { detail: String },
    Fail { detail: String, witness: String },
}

impl CheckOutcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        CheckOutcome::Pass { detail: detail.into() }
    }

    pub fn fail(detail: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckOutcome::Fail { detail: detail.into(), witness: witness.into() }
    }

    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass { .. })
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            CheckOutcome::Fail { witness, .. } => Some(witness),
            CheckOutcome::Pass { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// One named verification.
pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, ctx: &VerifyContext) -> CheckOutcome;
}

/// A check backed by a plain function.
pub struct FnCheck {
    name: &'static str,
    description: &'static str,
    f: fn(&VerifyContext) -> CheckOutcome,
}

impl FnCheck {
    pub const fn new(
        name: &'static str,
        description: &'static str,
        f: fn(&VerifyContext) -> CheckOutcome,
    ) -> Self {
        FnCheck { name, description, f }
    }
}

impl Check for FnCheck {
    fn name(&self) -> &'static str {
        self.name
    }
    fn description(&self) -> &'static str {
        self.description
    }
    fn run(&self, ctx: &VerifyContext) -> CheckOutcome {
        (self.f)(ctx)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub max_degree: usize,
    pub checks: Vec<CheckResult>,
    pub not_machine_checkable: Vec<String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            writeln!(f, "{} {:width$}  {}", c.status, c.name, c.detail)?;
            if let Some(w) = &c.witness {
                writeln!(f, "     {:width$}  witness: {w}", "")?;
            }
        }
        let passed = self.checks.len() - self.failures().count();
        writeln!(f, "{passed}/{} checks passed (max degree {})", self.checks.len(), self.max_degree)?;
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        writeln!(f, "not machine-checkable:")?;
        for claim in &self.not_machine_checkable {
            writeln!(f, "  - {claim}")?;
        }
        Ok(())
    }
}

/// Checks keyed by name, run in registration order.
pub struct CheckRegistry {
    checks: Vec<Box<dyn Check>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        CheckRegistry { checks: Vec::new() }
    }

    /// Replaces any check already registered under the same name, keeping its slot.
    pub fn register(&mut self, check: Box<dyn Check>) {
        match self.checks.iter().position(|c| c.name() == check.name()) {
            Some(i) => self.checks[i] = check,
            None => self.checks.push(check),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn Check> {
        self.checks.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Check> {
        self.checks.iter().map(|c| c.as_ref())
    }

    /// Runs the named checks (all when `only` is empty). Unknown names are an error.
    pub fn run(&self, ctx: &VerifyContext, only: &[String]) -> Result<VerificationReport, String> {
        if let Some(bad) = only.iter().find(|n| self.get(n).is_none()) {
            return Err(format!("unknown check `{bad}`; known: {}", self.names().join(", ")));
        }
        let checks = self
            .iter()
            .filter(|c| only.is_empty() || only.iter().any(|n| n == c.name()))
            .map(|c| run_one(c, ctx))
            .collect();
        Ok(VerificationReport {
            max_degree: ctx.max_degree,
            checks,
            not_machine_checkable: NOT_MACHINE_CHECKABLE.iter().map(|s| s.to_string()).collect(),
            notes: vec![
                format!(
                    "generation divisor table rows checked for m up to {GENERATION_TABLE_MAX_M}; \
                     larger m follow from adding ample classes"
                ),
                "B_2 * B_1 spans at most 2 of the 3 dimensions of B_3; degree 3 is reached through B_1".to_string(),
            ],
        })
    }
}

fn run_one(check: &dyn Check, ctx: &VerifyContext) -> CheckResult {
    let start = Instant::now();
    let outcome = check.run(ctx);
    let elapsed_ms = ctx.record_timing.then(|| start.elapsed().as_millis() as u64);
    let (status, detail, witness) = match outcome {
        CheckOutcome::Pass { detail } => (Status::Pass, detail, None),
        CheckOutcome::Fail { detail, witness } => (Status::Fail, detail, Some(witness)),
    };
    CheckResult { name: check.name().to_string(), status, detail, witness, elapsed_ms }
}

impl Default for CheckRegistry {
    fn default() -> Self {
        let mut r = CheckRegistry::empty();
        let builtin: [FnCheck; 22] = [
            FnCheck::new("hilbert-series", "PBW basis sizes match 1/((1-t)(1-t^2)(1-t^3))", check_hilbert_series),
            FnCheck::new("relations-in-r", "defining relations, x^6 = y^3 and centrality of x^6 in PBW form", check_relations_in_r),
            FnCheck::new("relations-in-b", "defining relations hold for the twisted product", verify_relations_in_b_ctx),
            FnCheck::new("divisor-table", "D_1..D_7 equal the tabulated classes", check_divisor_table),
            FnCheck::new("divisor-periodicity", "D_{6m+r} = D_r - mK", check_divisor_periodicity),
            FnCheck::new("divisor-intersections", "D_r^2 = r - 2 and D_r.K = -r for 1 <= r <= 5", check_divisor_intersections),
            FnCheck::new("chi-increment", "chi(D_{n+6}) - chi(D_n) = n + 6", check_chi_increment),
            FnCheck::new("dimension-identity", "dim R_n = #sections of D_n = closed form = chi(D_n)", check_dimension_identity),
            FnCheck::new("vanishing-ampleness", "D_n - K ample for n >= 2, not for n = 1", check_vanishing_ampleness),
            FnCheck::new("nakai-box", "explicit inequalities <=> D - K ample on [-5,9]^4", check_nakai_box),
            FnCheck::new("theta-order", "theta has order 6, fixes -K, and K^2 = 6", check_theta_order),
            FnCheck::new("theta-isometry", "theta preserves the intersection form", check_theta_isometry),
            FnCheck::new("theta-eigensystem", "the four eigenpairs hold over Q(zeta)", check_theta_eigensystem),
            FnCheck::new("tau-grading", "deg tau(v) = theta(deg v) for each variable", check_tau_grading),
            FnCheck::new("hexagon", "-1-curve intersections form a hexagon; irrelevant locus is tau-stable", verify_hexagon_ctx),
            FnCheck::new("disjoint-degree-two-sections", "zero loci of Xu and Zt are disjoint", check_disjoint_sections),
            FnCheck::new("low-degree-table", "tabulated word/monomial pairs reproduce", check_low_degree_table),
            FnCheck::new("isomorphism", "Phi maps words of degree n onto a basis of B_n", check_isomorphism),
            FnCheck::new("generation", "B is generated by B_1 and B_2; B_2 * B_n covers B_{n+2} for n >= 5", check_generation_range),
            FnCheck::new("generation-divisor-table", "tabulated divisors equal D_r - 2D_2 - (m+1)K and satisfy the inequalities", check_generation_table),
            FnCheck::new("veronese", "(x^3)^2 = (xy)^2 = (yx)^2 and the quadratic relation space is 2-dimensional", check_veronese),
            FnCheck::new("anticanonical", "dim R_6n = h0(-nK) = 3n^2 + 3n + 1", verify_anticanonical_ctx),
        ];
        for c in builtin {
            r.register(Box::new(c));
        }
        r
    }
}

/// Runs every registered check with the standard lattice data.
pub fn run_all(max_degree: usize) -> VerificationReport {
    run_all_with(&VerifyContext::new(max_degree))
}

pub fn run_all_with(ctx: &VerifyContext) -> VerificationReport {
    CheckRegistry::default().run(ctx, &[]).expect("no filter")
}

fn xy(s: &str) -> NcPoly {
    parse(s, Alphabet::Xy).expect("built-in expression")
}

fn vanishes(s: &str) -> Result<(), String> {
    match from_xy(&xy(s)) {
        Ok(p) if p.is_zero() => Ok(()),
        Ok(p) => Err(format!("{s} -> {p}")),
        Err(e) => Err(format!("{s}: {e}")),
    }
}

fn first_failure<I, T>(items: I, test: impl Fn(&T) -> Option<String>) -> Option<String>
where
    I: IntoIterator<Item = T>,
{
    items.into_iter().find_map(|t| test(&t))
}

fn check_hilbert_series(ctx: &VerifyContext) -> CheckOutcome {
    let n_max = ctx.max_degree;
    let mut series = vec![0usize; n_max + 1];
    series[0] = 1;
    for d in [1, 2, 3] {
        for n in d..=n_max {
            series[n] += series[n - d];
        }
    }
    let dims: Vec<usize> = (0..=n_max).map(|n| pbw_basis(n as u32).len()).collect();
    if let Some(n) = (0..=n_max).find(|&n| dims[n] != series[n]) {
        return CheckOutcome::fail(
            "PBW count differs from series coefficient",
            format!("n={n}: |basis|={} coefficient={}", dims[n], series[n]),
        );
    }
    let shown: Vec<String> = dims.iter().take(7).map(|d| d.to_string()).collect();
    CheckOutcome::pass(format!("n=0..{n_max}; first terms {}", shown.join(",")))
}

fn check_relations_in_r(_: &VerifyContext) -> CheckOutcome {
    for s in ["x^5 - y*x*y", "y^2 - x*y*x", "x^6 - y^3"] {
        if let Err(w) = vanishes(s) {
            return CheckOutcome::fail("relation does not vanish", w);
        }
    }
    let chain = "(w + x^2)*x*(w + x^2) - x^5";
    match normal_form(&parse(chain, Alphabet::Wzx).expect("built-in")) {
        Ok(p) if p.is_zero() => {}
        Ok(p) => return CheckOutcome::fail("YxY != x^5 in the PBW presentation", format!("{chain} -> {p}")),
        Err(e) => return CheckOutcome::fail("normal form failed", e.to_string()),
    }
    match commutes_with_generators(&xy("x^6")) {
        Ok(true) => {}
        Ok(false) => return CheckOutcome::fail("x^6 not central", "x^6"),
        Err(e) => return CheckOutcome::fail("centrality test failed", e.to_string()),
    }
    CheckOutcome::pass("x^5 = yxy, y^2 = xyx, x^6 = y^3, YxY = x^5 with Y = w + x^2, x^6 central")
}

/// Both defining relations hold in `R` (PBW form) and under `Phi`.
pub fn verify_relations_in_b() -> CheckOutcome {
    verify_relations_in_b_ctx(&VerifyContext::default())
}

fn verify_relations_in_b_ctx(_: &VerifyContext) -> CheckOutcome {
    for s in ["x^5 - y*x*y", "y^2 - x*y*x"] {
        if let Err(w) = vanishes(s) {
            return CheckOutcome::fail("relation does not vanish in R", w);
        }
    }
    let mut evidence = Vec::new();
    for (lhs, rhs) in [("x^5", "y*x*y"), ("y^2", "x*y*x"), ("x^6", "y^3")] {
        let a = phi_word(&parse_word(lhs).expect("word"));
        let b = phi_word(&parse_word(rhs).expect("word"));
        if a != b {
            return CheckOutcome::fail("relation fails in B", format!("{lhs} -> {a}, {rhs} -> {b}"));
        }
        evidence.push(format!("{lhs} = {rhs} = {a}"));
    }
    CheckOutcome::pass(evidence.join("; "))
}

const DIVISOR_TABLE: [(usize, [i64; 4]); 7] = [
    (1, [1, 1, 0, 1]),
    (2, [1, 1, 0, 0]),
    (3, [2, 1, 1, 1]),
    (4, [2, 1, 0, 1]),
    (5, [3, 2, 1, 1]),
    (6, [3, 1, 1, 1]),
    (7, [4, 2, 1, 2]),
];

fn check_divisor_table(ctx: &VerifyContext) -> CheckOutcome {
    let bad = first_failure(DIVISOR_TABLE, |(n, v)| {
        let d = ctx.divisor(*n);
        (d != DivisorClass::from_array(*v)).then(|| format!("D_{n} = {d}, expected {}", DivisorClass::from_array(*v)))
    });
    match bad {
        Some(w) => CheckOutcome::fail("divisor sequence differs from table", w),
        None => CheckOutcome::pass("D_1..D_7 match"),
    }
}

fn check_divisor_periodicity(ctx: &VerifyContext) -> CheckOutcome {
    let bad = first_failure(0..=ctx.max_degree, |&n| {
        let (m, r) = ((n / 6) as i64, n % 6);
        let lhs = ctx.divisor(n);
        let rhs = ctx.divisor(r) - m * K;
        (lhs != rhs).then(|| format!("n={n}: D_n = {lhs}, D_r - mK = {rhs}"))
    });
    match bad {
        Some(w) => CheckOutcome::fail("periodicity fails", w),
        None => CheckOutcome::pass(format!("n=0..{}", ctx.max_degree)),
    }
}

fn check_divisor_intersections(ctx: &VerifyContext) -> CheckOutcome {
    let bad = first_failure(1..=5usize, |&r| {
        let d = ctx.divisor(r);
        let (sq, dk) = (intersect(d, d), intersect(d, K));
        (sq != r as i64 - 2 || dk != -(r as i64)).then(|| format!("r={r}: D_r^2={sq}, D_r.K={dk}"))
    });
    match bad {
        Some(w) => CheckOutcome::fail("intersection numbers differ", w),
        None => CheckOutcome::pass("r=1..5"),
    }
}

fn check_chi_increment(ctx: &VerifyContext) -> CheckOutcome {
    let bad = first_failure(0..=ctx.max_degree, |&n| match (chi(ctx.divisor(n + 6)), chi(ctx.divisor(n))) {
        (Ok(a), Ok(b)) if a - b == n as i64 + 6 => None,
        (Ok(a), Ok(b)) => Some(format!("n={n}: chi difference {}", a - b)),
        (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
    });
    match bad {
        Some(w) => CheckOutcome::fail("chi increment fails", w),
        None => CheckOutcome::pass(format!("n=0..{}", ctx.max_degree)),
    }
}

fn check_dimension_identity(ctx: &VerifyContext) -> CheckOutcome {
    let mut dims = Vec::new();
    for n in 0..=ctx.max_degree {
        let pbw = pbw_basis(n as u32).len() as i64;
        let d = ctx.divisor(n);
        let count = enumerate_sections(d).dim() as i64;
        let closed = h0_closed(n);
        let euler = match chi(d) {
            Ok(c) => c,
            Err(e) => return CheckOutcome::fail("Riemann-Roch failed", e.to_string()),
        };
        if !(pbw == count && count == closed && closed == euler) {
            return CheckOutcome::fail(
                "dimensions disagree",
                format!("n={n}: dim R_n={pbw}, sections={count}, closed={closed}, chi={euler}"),
            );
        }
        dims.push(pbw);
    }
    let pick = |n: usize| dims.get(n).map_or("-".to_string(), |d| d.to_string());
    CheckOutcome::pass(format!(
        "n=0..{}; h0(D_6)={} h0(D_7)={} h0(D_12)={}",
        ctx.max_degree,
        pick(6),
        pick(7),
        pick(12)
    ))
}

fn check_vanishing_ampleness(ctx: &VerifyContext) -> CheckOutcome {
    if is_ample(ctx.divisor(1) - K) {
        return CheckOutcome::fail("D_1 - K unexpectedly ample", format!("D_1 - K = {}", ctx.divisor(1) - K));
    }
    if let Some(w) = first_failure([0usize, 2, 3, 4, 5, 6, 7], |&n| {
        (!lemma_van_conditions(ctx.divisor(n))).then(|| format!("D_{n} = {}", ctx.divisor(n)))
    }) {
        return CheckOutcome::fail("vanishing inequalities fail", w);
    }
    match first_failure(2..=ctx.max_degree.max(7), |&n| {
        (!is_ample(ctx.divisor(n) - K)).then(|| format!("D_{n} - K = {}", ctx.divisor(n) - K))
    }) {
        Some(w) => CheckOutcome::fail("D_n - K not ample", w),
        None => CheckOutcome::pass(format!("D_n - K ample for n=2..{}; D_1 - K not ample", ctx.max_degree.max(7))),
    }
}

fn check_nakai_box(_: &VerifyContext) -> CheckOutcome {
    let mut count = 0usize;
    for a in -5..=9 {
        for b in -5..=9 {
            for c in -5..=9 {
                for d in -5..=9 {
                    let dc = DivisorClass::new(a, b, c, d);
                    if lemma_van_conditions(dc) != is_ample(dc - K) {
                        return CheckOutcome::fail("criteria disagree", format!("D = {dc}"));
                    }
                    count += 1;
                }
            }
        }
    }
    CheckOutcome::pass(format!("{count} divisors agree"))
}

fn check_theta_order(ctx: &VerifyContext) -> CheckOutcome {
    let theta = &ctx.theta;
    if theta.pow(6) != ThetaMatrix::identity() {
        return CheckOutcome::fail("theta^6 != id", format!("theta^6 = {:?}", theta.pow(6).0));
    }
    if let Some(k) = (1..6).find(|&k| theta.pow(k) == ThetaMatrix::identity()) {
        return CheckOutcome::fail("theta has order < 6", format!("theta^{k} = id"));
    }
    if theta.apply(-K) != -K {
        return CheckOutcome::fail("theta moves -K", format!("theta(-K) = {}", theta.apply(-K)));
    }
    if intersect(K, K) != 6 {
        return CheckOutcome::fail("K^2 != 6", format!("K^2 = {}", intersect(K, K)));
    }
    CheckOutcome::pass("theta^6 = id, order exactly 6, theta(-K) = -K, K^2 = 6")
}

fn check_theta_isometry(ctx: &VerifyContext) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut random_class = || DivisorClass::from_array(std::array::from_fn(|_| rng.gen_range(-20..=20)));
    for _ in 0..ISOMETRY_SAMPLES {
        let (x, y) = (random_class(), random_class());
        let (before, after) = (intersect(x, y), intersect(ctx.theta.apply(x), ctx.theta.apply(y)));
        if before != after {
            return CheckOutcome::fail(
                "intersection form not preserved",
                format!("D={x} D'={y}: D.D'={before}, theta(D).theta(D')={after}"),
            );
        }
    }
    CheckOutcome::pass(format!("{ISOMETRY_SAMPLES} random pairs"))
}

fn check_theta_eigensystem(ctx: &VerifyContext) -> CheckOutcome {
    match check_eigensystem(&ctx.theta) {
        Ok(pairs) => {
            let values: Vec<String> = pairs.iter().map(|p| p.value.to_string()).collect();
            CheckOutcome::pass(format!("eigenvalues {}", values.join(", ")))
        }
        Err(e) => CheckOutcome::fail("eigenpair fails", e.to_string()),
    }
}

fn check_tau_grading(ctx: &VerifyContext) -> CheckOutcome {
    let bad = first_failure(0..NUM_VARS, |&v| {
        let lhs = WEIGHTS[TAU[v]];
        let rhs = ctx.theta.apply(WEIGHTS[v]);
        (lhs != rhs).then(|| format!("{}: deg tau = {lhs}, theta(deg) = {rhs}", VAR_NAMES[v]))
    });
    match bad {
        Some(w) => CheckOutcome::fail("tau does not cover theta", w),
        None => CheckOutcome::pass("all six variables"),
    }
}

/// Hexagon intersection pattern and tau-stability of the irrelevant locus.
pub fn verify_hexagon() -> CheckOutcome {
    verify_hexagon_ctx(&VerifyContext::default())
}

fn verify_hexagon_ctx(_: &VerifyContext) -> CheckOutcome {
    let m = weight_intersections(&TAU_CYCLE);
    for i in 0..NUM_VARS {
        for j in 0..NUM_VARS {
            let expected = match (i + NUM_VARS - j) % NUM_VARS {
                0 => -1,
                1 | 5 => 1,
                _ => 0,
            };
            if m[i][j] != expected {
                let (a, b) = (VAR_NAMES[TAU_CYCLE[i]], VAR_NAMES[TAU_CYCLE[j]]);
                return CheckOutcome::fail("not a hexagon", format!("{a}.{b} = {}, expected {expected}", m[i][j]));
            }
        }
    }
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    let pairs: BTreeSet<_> = IRRELEVANT_PAIRS.iter().map(|&p| norm(p)).collect();
    for &(a, b) in &IRRELEVANT_PAIRS {
        let image = norm((TAU[a], TAU[b]));
        if !pairs.contains(&image) {
            return CheckOutcome::fail(
                "irrelevant locus not tau-stable",
                format!("{{{},{}}} -> {{{},{}}}", VAR_NAMES[a], VAR_NAMES[b], VAR_NAMES[image.0], VAR_NAMES[image.1]),
            );
        }
    }
    CheckOutcome::pass("cyclic intersection matrix in order X,u,Y,t,Z,s; 9 pairs permuted")
}

fn check_disjoint_sections(_: &VerifyContext) -> CheckOutcome {
    for a in [X, U] {
        for b in [Z, T] {
            let i = intersect(WEIGHTS[a], WEIGHTS[b]);
            if i != 0 {
                return CheckOutcome::fail("curves meet", format!("{}.{} = {i}", VAR_NAMES[a], VAR_NAMES[b]));
            }
        }
    }
    CheckOutcome::pass("X.Z = X.t = u.Z = u.t = 0")
}

fn check_low_degree_table(_: &VerifyContext) -> CheckOutcome {
    let bad = first_failure(LOW_DEGREE_TABLE, |(w, m)| {
        let got = phi_word(&parse_word(w).expect("table word"));
        (got.to_string() != *m).then(|| format!("{w} -> {got}, table says {m}"))
    });
    match bad {
        Some(w) => CheckOutcome::fail("table entry differs", w),
        None => CheckOutcome::pass(format!("{} pairs", LOW_DEGREE_TABLE.len())),
    }
}

/// Dimension match and exact image of `Phi` in degree `n`.
pub fn verify_iso_degree(n: usize) -> CheckOutcome {
    iso_degree(&VerifyContext::default(), n)
}

fn iso_degree(ctx: &VerifyContext, n: usize) -> CheckOutcome {
    let dim_r = pbw_basis(n as u32).len();
    let basis = enumerate_sections(ctx.divisor(n));
    if dim_r != basis.dim() {
        return CheckOutcome::fail("dimensions differ", format!("n={n}: dim R_n={dim_r}, dim B_n={}", basis.dim()));
    }
    let words = words_of_degree(n);
    let image: BTreeSet<CoxMonomial> = words.iter().map(phi_word).collect();
    let target: BTreeSet<CoxMonomial> = basis.basis.iter().copied().collect();
    if let Some(m) = image.difference(&target).next() {
        return CheckOutcome::fail("image leaves B_n", format!("n={n}: {m} has degree {}", multidegree(m)));
    }
    if let Some(m) = target.difference(&image).next() {
        return CheckOutcome::fail("image misses a basis monomial", format!("n={n}: {m}"));
    }
    CheckOutcome::pass(format!("n={n}: dim {dim_r}, {} words", words.len()))
}

fn check_isomorphism(ctx: &VerifyContext) -> CheckOutcome {
    let (mut prev, mut cur) = (1usize, 1usize);
    for n in 0..=ctx.max_degree {
        let words = words_of_degree(n).len();
        let expected = if n == 0 { 1 } else { cur };
        if words != expected {
            return CheckOutcome::fail("word count breaks c(n) = c(n-1) + c(n-2)", format!("n={n}: {words}"));
        }
        if n > 0 {
            (prev, cur) = (cur, prev + cur);
        }
        if let fail @ CheckOutcome::Fail { .. } = iso_degree(ctx, n) {
            return fail;
        }
    }
    CheckOutcome::pass(format!("n=0..{}", ctx.max_degree))
}

fn twisted_products(ctx: &VerifyContext, left: usize, right: usize) -> BTreeSet<CoxMonomial> {
    let a = enumerate_sections(ctx.divisor(left)).basis;
    let b = enumerate_sections(ctx.divisor(right)).basis;
    a.iter().flat_map(|x| b.iter().map(move |y| x.mul(&y.tau_pow(left)))).collect()
}

/// `B_1` and `B_2` generate every `B_m`, and `B_2 * B_n = B_{n+2}` once `n >= 5`.
/// Also records the smaller `n` where `B_2 * B_n` alone already suffices.
fn check_generation_range(ctx: &VerifyContext) -> CheckOutcome {
    let top = ctx.max_degree;
    for m in 3..=top {
        let mut reached = twisted_products(ctx, 1, m - 1);
        reached.extend(twisted_products(ctx, 2, m - 2));
        let target = enumerate_sections(ctx.divisor(m)).basis;
        if let Some(g) = target.iter().find(|g| !reached.contains(g)) {
            return CheckOutcome::fail("B_1 and B_2 do not generate", format!("m={m}: {g} not in B_1*B_(m-1) + B_2*B_(m-2)"));
        }
    }
    let mut short = Vec::new();
    for n in 0..=top.saturating_sub(2) {
        let reached = twisted_products(ctx, 2, n);
        let target = enumerate_sections(ctx.divisor(n + 2)).basis;
        if let Some(g) = target.iter().find(|g| !reached.contains(g)) {
            if n >= 5 {
                return CheckOutcome::fail("B_2 * B_n does not cover B_{n+2}", format!("n={n}: {g}"));
            }
            short.push(format!("n={n} ({g} missing, dim B_2*B_n <= {})", 2 * enumerate_sections(ctx.divisor(n)).dim()));
        }
    }
    let mut detail = format!("B_1, B_2 generate B_m for m<={top}; B_2*B_n = B_(n+2) for 5<=n<={}", top.saturating_sub(2));
    if !short.is_empty() {
        detail.push_str(&format!("; B_2*B_n alone falls short at {}", short.join(", ")));
    }
    CheckOutcome::pass(detail)
}

/// Rows `(r, first m, vector as a function of m)`.
type TableRow = (usize, i64, fn(i64) -> [i64; 4]);

const GENERATION_TABLE: [TableRow; 6] = [
    (0, 2, |m| [3 * m + 1, m - 1, m + 1, m + 1]),
    (1, 1, |m| [3 * m + 2, m, m + 1, m + 2]),
    (2, 1, |m| [3 * m + 2, m, m + 1, m + 1]),
    (3, 1, |m| [3 * m + 3, m, m + 2, m + 2]),
    (4, 1, |m| [3 * m + 3, m, m + 1, m + 2]),
    (5, 1, |m| [3 * m + 4, m + 1, m + 2, m + 2]),
];

/// Each row of the generation divisor table, for `m` up to the truncation.
pub fn verify_prop46_table() -> CheckOutcome {
    check_generation_table(&VerifyContext::default())
}

fn check_generation_table(ctx: &VerifyContext) -> CheckOutcome {
    let mut rows = 0;
    for (r, m_start, row) in GENERATION_TABLE {
        for m in m_start..=GENERATION_TABLE_MAX_M {
            let listed = DivisorClass::from_array(row(m));
            let derived = ctx.divisor(r) - 2 * ctx.divisor(2) - (m + 1) * K;
            if listed != derived {
                return CheckOutcome::fail(
                    "table vector differs from D_r - 2D_2 - (m+1)K",
                    format!("r={r} m={m}: table {listed}, derived {derived}"),
                );
            }
            if !lemma_van_conditions(listed) {
                return CheckOutcome::fail("inequalities fail", format!("r={r} m={m}: {listed}"));
            }
            rows += 1;
        }
    }
    CheckOutcome::pass(format!("{rows} (r, m) instances, m <= {GENERATION_TABLE_MAX_M}"))
}

/// Rank of a matrix over `Q(zeta)` by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<CycNum>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        let pivot_row: Vec<CycNum> = rows[rank].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                *x -= &(&factor * p);
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Quadratic relations among `x^3, xy, yx` in degree 6.
pub fn verify_veronese() -> CheckOutcome {
    check_veronese(&VerifyContext::default())
}

fn check_veronese(_: &VerifyContext) -> CheckOutcome {
    for s in ["(x^3)^2 - (x*y)^2", "(x*y)^2 - (y*x)^2"] {
        if let Err(w) = vanishes(s) {
            return CheckOutcome::fail("quadratic relation does not hold", w);
        }
    }
    let dim3 = pbw_basis(3).len();
    let dim6 = pbw_basis(6).len();
    if dim6 != 7 || dim6 + 2 != dim3 * dim3 {
        return CheckOutcome::fail("dimension count", format!("dim R_3={dim3}, dim R_6={dim6}"));
    }
    let gens = ["x^3", "x*y", "y*x"];
    let mut columns = Vec::new();
    for a in gens {
        for b in gens {
            let product = format!("({a})*({b})");
            let nf = match from_xy(&xy(&product)) {
                Ok(p) => p,
                Err(e) => return CheckOutcome::fail("normal form failed", e.to_string()),
            };
            match pbw_coordinates(&nf, 6) {
                Some(c) => columns.push(c),
                None => return CheckOutcome::fail("product not in degree 6", format!("{product} -> {nf}")),
            }
        }
    }
    let matrix: Vec<Vec<CycNum>> = (0..dim6).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    let kernel = columns.len() - rank(matrix);
    if kernel != 2 {
        return CheckOutcome::fail("kernel dimension", format!("dim ker = {kernel}"));
    }
    CheckOutcome::pass(format!("dim R_3={dim3}, dim R_6={dim6} = {dim3}^2 - 2, kernel dimension {kernel}"))
}

/// `dim R_{6n} = h0(-nK) = 3n^2 + 3n + 1` for all `6n <= max_degree`.
pub fn verify_anticanonical(max_degree: usize) -> CheckOutcome {
    verify_anticanonical_ctx(&VerifyContext::new(max_degree))
}

fn verify_anticanonical_ctx(ctx: &VerifyContext) -> CheckOutcome {
    let mut values = Vec::new();
    for n in 0..=(ctx.max_degree / 6) as i64 {
        let pbw = pbw_basis(6 * n as u32).len() as i64;
        let count = enumerate_sections(-n * K).dim() as i64;
        let closed = 3 * n * n + 3 * n + 1;
        if pbw != count || count != closed {
            return CheckOutcome::fail(
                "anticanonical dimensions disagree",
                format!("n={n}: dim R_6n={pbw}, h0(-nK)={count}, 3n^2+3n+1={closed}"),
            );
        }
        values.push(pbw.to_string());
    }
    CheckOutcome::pass(format!("values {}", values.join(", ")))
}
