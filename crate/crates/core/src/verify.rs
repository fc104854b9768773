//! Property suites that mechanically verify the constructed elements: the
//! defining relations, the factor identities, regularity of the fusion
//! limit, the T_0 coefficient, φ-invariance, divisibility eigenvalues and
//! solves, the G basis, irreducibility and the q = 1 specialization.
//!
//! Each suite emits one [`CheckReport`] per checked instance. Independent
//! jobs fan out across worker threads; all arithmetic stays exact, so every
//! check is a zero-tolerance equality.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{rat, RatQ, RatQT, Scalar};
use crate::arith::{QPool, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::fusion::{
    check_a_complement, check_intertwining, check_single_factor_regularity,
    check_triple_regularity, evaluate_f, evaluate_f_at, evaluate_g, evaluate_g_at, fusion_factor,
    FusionSpec,
};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::perm::Permutation;
use crate::repr::{
    action_matrices, burnside_irreducibility, eigen_divisibility, element_coords,
    ideal_dimension, left_divisibility_solve, perm_index, right_divisibility_solve,
    specialize_q1, AdjacentKind, Matrix, RowSpace,
};
use crate::tableaux::{Partition, StandardTableau, Variant};

pub const RANDOM_PAIRS: usize = 50;
pub const RANDOM_SAMPLES: usize = 100;

/// Evaluation mode for the suites that can run either way.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Symbolic,
    Numeric,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(Mode::Symbolic),
            "numeric" => Ok(Mode::Numeric),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub mode: Mode,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 4,
            mode: Mode::Symbolic,
            seed: DEFAULT_SEED,
        }
    }
}

/// One verified instance, serialized into the report file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shape: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tableau: Option<Vec<Vec<usize>>>,
    pub pass: bool,
    pub detail: String,
}

impl CheckReport {
    fn plain(check: &str, pass: bool, detail: impl Into<String>) -> Self {
        CheckReport {
            check: check.to_string(),
            shape: None,
            tableau: None,
            pass,
            detail: detail.into(),
        }
    }

    fn shaped(check: &str, shape: &Partition, pass: bool, detail: impl Into<String>) -> Self {
        CheckReport {
            check: check.to_string(),
            shape: Some(shape.parts().to_vec()),
            tableau: None,
            pass,
            detail: detail.into(),
        }
    }

    fn tabled(
        check: &str,
        tableau: &StandardTableau,
        pass: bool,
        detail: impl Into<String>,
    ) -> Self {
        CheckReport {
            check: check.to_string(),
            shape: Some(tableau.shape().parts().to_vec()),
            tableau: Some(tableau.rows().to_vec()),
            pass,
            detail: detail.into(),
        }
    }
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

/// The named suites, in the order `all` runs them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Relations,
    FactorIdentities,
    Regularity,
    VariantAgreement,
    T0Coeff,
    PhiInvariance,
    EigenDivisibility,
    TripleRegularity,
    Intertwining,
    Divisibility,
    GBasis,
    Q1Specialization,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Relations,
        Suite::FactorIdentities,
        Suite::Regularity,
        Suite::VariantAgreement,
        Suite::T0Coeff,
        Suite::PhiInvariance,
        Suite::EigenDivisibility,
        Suite::TripleRegularity,
        Suite::Intertwining,
        Suite::Divisibility,
        Suite::GBasis,
        Suite::Q1Specialization,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::FactorIdentities => "factor-identities",
            Suite::Regularity => "regularity",
            Suite::VariantAgreement => "variant-agreement",
            Suite::T0Coeff => "t0coeff",
            Suite::PhiInvariance => "phi-invariance",
            Suite::EigenDivisibility => "eigen-divisibility",
            Suite::TripleRegularity => "triple-regularity",
            Suite::Intertwining => "intertwining",
            Suite::Divisibility => "divisibility",
            Suite::GBasis => "g-basis",
            Suite::Q1Specialization => "q1-specialization",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Symbolic or numeric table of F_Λ over all shapes, tableaux and variants
/// up to max_n; built in parallel and shared by the element-level suites.
pub enum FTable {
    Symbolic(Vec<FEntry<RatQ>>),
    Numeric(BigRational, Vec<FEntry<BigRational>>),
}

pub struct FEntry<K: Scalar> {
    pub tableau: StandardTableau,
    pub variant: Variant,
    pub element: HeckeElement<K>,
}

/// Every (standard tableau, variant) pair for 1 ≤ n ≤ max_n.
pub fn tableau_variant_jobs(max_n: usize) -> Vec<(StandardTableau, Variant)> {
    let mut jobs = Vec::new();
    for n in 1..=max_n {
        for shape in Partition::all(n) {
            for tableau in StandardTableau::standard_tableaux(&shape) {
                for variant in Variant::ALL {
                    jobs.push((tableau.clone(), variant));
                }
            }
        }
    }
    jobs
}

pub fn build_f_table(opts: &VerifyOptions) -> Result<FTable> {
    let jobs = tableau_variant_jobs(opts.max_n);
    match opts.mode {
        Mode::Symbolic => {
            let entries: Result<Vec<_>> = jobs
                .into_par_iter()
                .map(|(tableau, variant)| {
                    let spec = FusionSpec::with_default_direction(tableau.clone(), variant);
                    let element = evaluate_f(&spec)?.element;
                    Ok(FEntry {
                        tableau,
                        variant,
                        element,
                    })
                })
                .collect();
            Ok(FTable::Symbolic(entries?))
        }
        Mode::Numeric => {
            let q0 = QPool::seeded(opts.seed).first().clone();
            let entries: Result<Vec<_>> = jobs
                .into_par_iter()
                .map(|(tableau, variant)| {
                    let spec = FusionSpec::with_default_direction(tableau.clone(), variant);
                    let element = evaluate_f_at(&spec, &q0)?.element;
                    Ok(FEntry {
                        tableau,
                        variant,
                        element,
                    })
                })
                .collect();
            Ok(FTable::Numeric(q0, entries?))
        }
    }
}

pub fn run_suites(suites: &[Suite], opts: &VerifyOptions) -> Result<Vec<CheckReport>> {
    let needs_table = suites.iter().any(|s| {
        matches!(
            s,
            Suite::Regularity
                | Suite::VariantAgreement
                | Suite::T0Coeff
                | Suite::PhiInvariance
                | Suite::EigenDivisibility
                | Suite::Q1Specialization
        )
    });
    let table = if needs_table {
        Some(build_f_table(opts)?)
    } else {
        None
    };
    let mut reports = Vec::new();
    for suite in suites {
        reports.extend(run_suite(*suite, opts, table.as_ref())?);
    }
    Ok(reports)
}

pub fn run_suite(
    suite: Suite,
    opts: &VerifyOptions,
    table: Option<&FTable>,
) -> Result<Vec<CheckReport>> {
    let built;
    let table = match table {
        Some(t) => Some(t),
        None if suite_needs_table(suite) => {
            built = build_f_table(opts)?;
            Some(&built)
        }
        None => None,
    };
    match suite {
        Suite::Relations => suite_relations(opts),
        Suite::FactorIdentities => suite_factor_identities(opts),
        Suite::Regularity => Ok(suite_regularity(table.unwrap())),
        Suite::VariantAgreement => Ok(suite_variant_agreement(table.unwrap())),
        Suite::T0Coeff => Ok(suite_t0coeff(table.unwrap())),
        Suite::PhiInvariance => suite_phi_invariance(table.unwrap()),
        Suite::EigenDivisibility => suite_eigen_divisibility(table.unwrap()),
        Suite::TripleRegularity => Ok(suite_triple_regularity()),
        Suite::Intertwining => suite_intertwining(opts),
        Suite::Divisibility => suite_divisibility(opts),
        Suite::GBasis => suite_g_basis(opts),
        Suite::Q1Specialization => suite_q1(table.unwrap()),
    }
}

fn suite_needs_table(suite: Suite) -> bool {
    matches!(
        suite,
        Suite::Regularity
            | Suite::VariantAgreement
            | Suite::T0Coeff
            | Suite::PhiInvariance
            | Suite::EigenDivisibility
            | Suite::Q1Specialization
    )
}

// ---- relations ----

fn random_ratq(rng: &mut ChaCha8Rng) -> RatQ {
    loop {
        let coeffs: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..=3)).collect();
        let num = crate::arith::PolyQ::from_i64(&coeffs);
        if num.is_zero() {
            continue;
        }
        let shift = rng.gen_range(0..=2);
        return RatQ::new(num, crate::arith::Poly::monomial(rat(1, 1), shift))
            .expect("monomial denominator");
    }
}

fn random_element(alg: &HeckeAlgebra<RatQ>, rng: &mut ChaCha8Rng) -> HeckeElement<RatQ> {
    let n = alg.n();
    let perms = Permutation::all(n);
    let terms: Vec<(Permutation, RatQ)> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let p = perms[rng.gen_range(0..perms.len())].clone();
            (p, random_ratq(rng))
        })
        .collect();
    HeckeElement::from_terms(n, terms).expect("sizes agree")
}

fn suite_relations(opts: &VerifyOptions) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for n in 2..=opts.max_n.max(2) {
        let alg = HeckeAlgebra::symbolic(n);
        let mut ok_quad = true;
        let mut ok_braid = true;
        let mut ok_comm = true;
        let mut ok_inv = true;
        for i in 1..n {
            let ti = alg.t_gen(i)?;
            let lhs = alg.sub(&ti, &alg.scalar(alg.q().clone()))?;
            let rhs = alg.add(&ti, &alg.scalar(alg.q_inv().clone()))?;
            ok_quad &= alg.mul(&lhs, &rhs)?.is_zero();
            ok_inv &= alg.mul(&ti, &alg.gen_inverse(i)?)? == alg.one();
            if i + 1 < n {
                let tj = alg.t_gen(i + 1)?;
                let l = alg.mul(&alg.mul(&ti, &tj)?, &ti)?;
                let r = alg.mul(&alg.mul(&tj, &ti)?, &tj)?;
                ok_braid &= l == r;
            }
            for j in i + 2..n {
                let tj = alg.t_gen(j)?;
                ok_comm &= alg.mul(&ti, &tj)? == alg.mul(&tj, &ti)?;
            }
        }
        reports.push(CheckReport::plain(
            "quadratic-relation",
            ok_quad,
            format!("n = {n}"),
        ));
        reports.push(CheckReport::plain(
            "braid-relation",
            ok_braid,
            format!("n = {n}"),
        ));
        reports.push(CheckReport::plain(
            "commutation-relation",
            ok_comm,
            format!("n = {n}"),
        ));
        reports.push(CheckReport::plain(
            "generator-inverse",
            ok_inv,
            format!("n = {n}"),
        ));
    }
    // φ on random pairs in H_4, and associativity on random triples
    let alg = HeckeAlgebra::symbolic(4);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut ok_phi = true;
    let mut ok_assoc = true;
    for _ in 0..RANDOM_PAIRS {
        let x = random_element(&alg, &mut rng);
        let y = random_element(&alg, &mut rng);
        let z = random_element(&alg, &mut rng);
        ok_phi &= alg.phi(&alg.mul(&x, &y)?) == alg.mul(&alg.phi(&y), &alg.phi(&x))?;
        ok_phi &= alg.phi(&alg.phi(&x)) == x;
        ok_assoc &= alg.mul(&alg.mul(&x, &y)?, &z)? == alg.mul(&x, &alg.mul(&y, &z)?)?;
    }
    reports.push(CheckReport::plain(
        "phi-antiautomorphism",
        ok_phi,
        format!("{RANDOM_PAIRS} random pairs in H_4"),
    ));
    reports.push(CheckReport::plain(
        "mul-associativity",
        ok_assoc,
        format!("{RANDOM_PAIRS} random triples in H_4"),
    ));
    Ok(reports)
}

// ---- factor identities ----

fn random_point(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=9);
        if num != 0 {
            return rat(num, den);
        }
    }
}

fn distinct_points(rng: &mut ChaCha8Rng, count: usize) -> Vec<BigRational> {
    let mut pts: Vec<BigRational> = Vec::with_capacity(count);
    while pts.len() < count {
        let v = random_point(rng);
        if !pts.contains(&v) {
            pts.push(v);
        }
    }
    pts
}

fn nondegenerate_q(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let v = random_point(rng);
        if !crate::arith::scalar::is_degenerate_q0(&v) {
            return v;
        }
    }
}

fn suite_factor_identities(opts: &VerifyOptions) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
    let mut ok_yb = true;
    let mut ok_comm = true;
    let mut ok_inv = true;
    for _ in 0..RANDOM_SAMPLES {
        let q0 = nondegenerate_q(&mut rng);
        let pts = distinct_points(&mut rng, 4);
        let (a, b, c, d) = (&pts[0], &pts[1], &pts[2], &pts[3]);

        // Yang–Baxter in H_3
        let h3 = HeckeAlgebra::numeric(3, &q0)?;
        let lhs = h3.mul(
            &h3.mul(&fusion_factor(&h3, 1, a, b)?, &fusion_factor(&h3, 2, a, c)?)?,
            &fusion_factor(&h3, 1, b, c)?,
        )?;
        let rhs = h3.mul(
            &h3.mul(&fusion_factor(&h3, 2, b, c)?, &fusion_factor(&h3, 1, a, c)?)?,
            &fusion_factor(&h3, 2, a, b)?,
        )?;
        ok_yb &= lhs == rhs;

        // commutation in H_4 for |i − j| ≥ 2
        let h4 = HeckeAlgebra::numeric(4, &q0)?;
        let f1 = fusion_factor(&h4, 1, a, b)?;
        let f3 = fusion_factor(&h4, 3, c, d)?;
        ok_comm &= h4.mul(&f1, &f3)? == h4.mul(&f3, &f1)?;

        // inversion: F_i(a,b)F_i(b,a) = (1 − (q − q⁻¹)² a b/(a − b)²)·1
        let h2 = HeckeAlgebra::numeric(2, &q0)?;
        let prod = h2.mul(
            &fusion_factor(&h2, 1, a, b)?,
            &fusion_factor(&h2, 1, b, a)?,
        )?;
        let diff = a - b;
        let qd = h2.q_diff();
        let expected = BigRational::from_integer(1.into())
            - &(&(qd * qd) * &(a * b)) / &(&diff * &diff);
        ok_inv &= prod == h2.scalar(expected);
    }
    let mut reports = vec![
        CheckReport::plain(
            "yang-baxter",
            ok_yb,
            format!("{RANDOM_SAMPLES} seeded random exact samples"),
        ),
        CheckReport::plain(
            "factor-commutation",
            ok_comm,
            format!("{RANDOM_SAMPLES} seeded random exact samples"),
        ),
        CheckReport::plain(
            "factor-inversion",
            ok_inv,
            format!("{RANDOM_SAMPLES} seeded random exact samples"),
        ),
    ];

    // Yang–Baxter symbolically in t with (a, b, c) = (1 + t, 1 + 2t, 1 + 3t)
    let ht = HeckeAlgebra::symbolic_t(3);
    let line = |m: i64| {
        RatQT::from_poly(crate::arith::Poly::new(vec![
            RatQ::one(),
            RatQ::from_int(m),
        ]))
    };
    let (a, b, c) = (line(1), line(2), line(3));
    let lhs = ht.mul(
        &ht.mul(
            &fusion_factor(&ht, 1, &a, &b)?,
            &fusion_factor(&ht, 2, &a, &c)?,
        )?,
        &fusion_factor(&ht, 1, &b, &c)?,
    )?;
    let rhs = ht.mul(
        &ht.mul(
            &fusion_factor(&ht, 2, &b, &c)?,
            &fusion_factor(&ht, 1, &a, &c)?,
        )?,
        &fusion_factor(&ht, 2, &a, &b)?,
    )?;
    reports.push(CheckReport::plain(
        "yang-baxter-symbolic-t",
        lhs == rhs,
        "(a,b,c) = (1+t, 1+2t, 1+3t), symbolic q and t",
    ));
    Ok(reports)
}

// ---- element-level suites over the F table ----

fn suite_regularity(table: &FTable) -> Vec<CheckReport> {
    // the table was built by evaluate_f, so every entry is a verified limit
    let describe = |t: &StandardTableau, v: Variant, len: usize| {
        CheckReport::tabled(
            "regularity",
            t,
            true,
            format!("{} variant, {} terms", v.name(), len),
        )
    };
    match table {
        FTable::Symbolic(entries) => entries
            .iter()
            .map(|e| describe(&e.tableau, e.variant, e.element.len()))
            .collect(),
        FTable::Numeric(_, entries) => entries
            .iter()
            .map(|e| describe(&e.tableau, e.variant, e.element.len()))
            .collect(),
    }
}

fn variant_agreement_reports<K: Scalar>(entries: &[FEntry<K>]) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    let mut i = 0;
    while i < entries.len() {
        let same: Vec<&FEntry<K>> = entries
            .iter()
            .filter(|e| e.tableau == entries[i].tableau)
            .collect();
        let pass = same.windows(2).all(|w| w[0].element == w[1].element);
        reports.push(CheckReport::tabled(
            "variant-agreement",
            &entries[i].tableau,
            pass,
            "hook = row = column",
        ));
        i += Variant::ALL.len();
    }
    reports
}

fn suite_variant_agreement(table: &FTable) -> Vec<CheckReport> {
    match table {
        FTable::Symbolic(entries) => variant_agreement_reports(entries),
        FTable::Numeric(_, entries) => variant_agreement_reports(entries),
    }
}

fn t0_reports<K: Scalar>(entries: &[FEntry<K>]) -> Vec<CheckReport> {
    entries
        .iter()
        .filter(|e| e.variant == Variant::Hook)
        .map(|e| {
            let sigma0 = Permutation::longest(e.tableau.n()).expect("n ≥ 1");
            let pass = e.element.coeff_of(&sigma0).is_one();
            CheckReport::tabled("t0-coefficient", &e.tableau, pass, "coeff(T_0) = 1")
        })
        .collect()
}

fn suite_t0coeff(table: &FTable) -> Vec<CheckReport> {
    match table {
        FTable::Symbolic(entries) => t0_reports(entries),
        FTable::Numeric(_, entries) => t0_reports(entries),
    }
}

/// φ(F_Λ·T_0⁻¹) = F_Λ·T_0⁻¹.
pub fn phi_invariance_holds<K: Scalar>(
    alg: &HeckeAlgebra<K>,
    f: &HeckeElement<K>,
) -> Result<bool> {
    let sigma0 = Permutation::longest(alg.n())?;
    let x = alg.mul_t_sigma_inv_right(f, &sigma0)?;
    Ok(alg.phi(&x) == x)
}

fn phi_reports<K: Scalar>(
    entries: &[FEntry<K>],
    make_alg: impl Fn(usize) -> Result<HeckeAlgebra<K>> + Sync,
) -> Result<Vec<CheckReport>> {
    entries
        .par_iter()
        .filter(|e| e.variant == Variant::Hook)
        .map(|e| {
            let alg = make_alg(e.tableau.n())?;
            let pass = phi_invariance_holds(&alg, &e.element)?;
            Ok(CheckReport::tabled(
                "phi-invariance",
                &e.tableau,
                pass,
                "phi(F·T_0^{-1}) = F·T_0^{-1}",
            ))
        })
        .collect()
}

fn suite_phi_invariance(table: &FTable) -> Result<Vec<CheckReport>> {
    match table {
        FTable::Symbolic(entries) => phi_reports(entries, |n| Ok(HeckeAlgebra::symbolic(n))),
        FTable::Numeric(q0, entries) => {
            let q0 = q0.clone();
            phi_reports(entries, move |n| HeckeAlgebra::numeric(n, &q0))
        }
    }
}

/// Same-column pairs must have the −q⁻¹ eigenvalue, same-row pairs the q
/// eigenvalue, under left multiplication by T_k.
pub fn eigen_checks_for<K: Scalar>(
    alg: &HeckeAlgebra<K>,
    tableau: &StandardTableau,
    f: &HeckeElement<K>,
) -> Result<bool> {
    let boxes = tableau.entry_boxes();
    for k in 1..tableau.n() {
        let (i1, j1) = boxes[k - 1];
        let (i2, j2) = boxes[k];
        if j1 == j2 {
            if !eigen_divisibility(alg, f, k, AdjacentKind::Column)? {
                return Ok(false);
            }
        } else if i1 == i2 {
            if !eigen_divisibility(alg, f, k, AdjacentKind::Row)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn eigen_reports<K: Scalar>(
    entries: &[FEntry<K>],
    make_alg: impl Fn(usize) -> Result<HeckeAlgebra<K>> + Sync,
) -> Result<Vec<CheckReport>> {
    entries
        .par_iter()
        .filter(|e| e.variant == Variant::Hook)
        .map(|e| {
            let alg = make_alg(e.tableau.n())?;
            let pass = eigen_checks_for(&alg, &e.tableau, &e.element)?;
            Ok(CheckReport::tabled(
                "eigen-divisibility",
                &e.tableau,
                pass,
                "column pairs: −q⁻¹; row pairs: q",
            ))
        })
        .collect()
}

fn suite_eigen_divisibility(table: &FTable) -> Result<Vec<CheckReport>> {
    match table {
        FTable::Symbolic(entries) => eigen_reports(entries, |n| Ok(HeckeAlgebra::symbolic(n))),
        FTable::Numeric(q0, entries) => {
            let q0 = q0.clone();
            eigen_reports(entries, move |n| HeckeAlgebra::numeric(n, &q0))
        }
    }
}

fn suite_triple_regularity() -> Vec<CheckReport> {
    vec![
        CheckReport::plain(
            "triple-regularity",
            check_triple_regularity(true),
            "sign +",
        ),
        CheckReport::plain(
            "triple-regularity",
            check_triple_regularity(false),
            "sign −",
        ),
        CheckReport::plain(
            "single-factor-pole",
            !check_single_factor_regularity(),
            "bare factor keeps its pole (control)",
        ),
    ]
}

fn suite_intertwining(opts: &VerifyOptions) -> Result<Vec<CheckReport>> {
    let mut jobs = Vec::new();
    for n in 2..=opts.max_n.min(4) {
        for shape in Partition::all(n) {
            for tableau in StandardTableau::standard_tableaux(&shape) {
                for k in 1..n {
                    if tableau.adjacent_swap(k).is_ok() {
                        jobs.push((tableau.clone(), k));
                    }
                }
            }
        }
    }
    jobs.into_par_iter()
        .map(|(tableau, k)| {
            let pass = check_intertwining(&tableau, k)?;
            Ok(CheckReport::tabled(
                "intertwining",
                &tableau,
                pass,
                format!("swap k = {k}"),
            ))
        })
        .collect()
}

// ---- divisibility (stripping and the ordered-product divisors) ----

/// Left divisor of F_{Λ°} for entries u < v adjacent in a column (Prop-style
/// ordered product when v sits above the steps).
fn column_pair_divisor<K: Scalar>(
    alg: &HeckeAlgebra<K>,
    hook: &StandardTableau,
    u: usize,
    v: usize,
) -> Result<HeckeElement<K>> {
    let contents = hook.contents();
    let boxes = hook.entry_boxes();
    if contents[v - 1] < 0 {
        return fusion_factor(
            alg,
            u,
            &alg.q_pow(2 * contents[u - 1]),
            &alg.q_pow(2 * contents[v - 1]),
        );
    }
    let (row_u, _) = boxes[u - 1];
    let s = *hook.rows()[row_u - 1].last().expect("nonempty row");
    let mut p = alg.one();
    for i in (u..=s).rev() {
        for j in s + 1..=v {
            let f = fusion_factor(
                alg,
                i + j - s - 1,
                &alg.q_pow(2 * contents[i - 1]),
                &alg.q_pow(2 * contents[j - 1]),
            )?;
            p = alg.mul(&p, &f)?;
        }
    }
    Ok(p)
}

/// Left divisor of F_{Λ°} for entries u < v adjacent in a row.
fn row_pair_divisor<K: Scalar>(
    alg: &HeckeAlgebra<K>,
    hook: &StandardTableau,
    u: usize,
    v: usize,
) -> Result<HeckeElement<K>> {
    let contents = hook.contents();
    let boxes = hook.entry_boxes();
    if contents[u - 1] > 0 {
        return fusion_factor(
            alg,
            u,
            &alg.q_pow(2 * contents[u - 1]),
            &alg.q_pow(2 * contents[v - 1]),
        );
    }
    let (_, col_u) = boxes[u - 1];
    let col_height = hook
        .rows()
        .iter()
        .filter(|row| row.len() >= col_u)
        .count();
    let r = hook.rows()[col_height - 1][col_u - 1];
    let mut p = alg.one();
    for i in (u..=r).rev() {
        for j in r + 1..=v {
            let f = fusion_factor(
                alg,
                i + j - r - 1,
                &alg.q_pow(2 * contents[i - 1]),
                &alg.q_pow(2 * contents[j - 1]),
            )?;
            p = alg.mul(&p, &f)?;
        }
    }
    Ok(p)
}

fn suite_divisibility(opts: &VerifyOptions) -> Result<Vec<CheckReport>> {
    let q0 = QPool::seeded(opts.seed).first().clone();
    let mut jobs: Vec<(Partition, DivJob)> = Vec::new();
    for n in 2..=opts.max_n {
        for shape in Partition::all(n) {
            let hook = StandardTableau::hook_tableau(&shape);
            let boxes = hook.entry_boxes();
            for u in 1..=n {
                let (i, j) = boxes[u - 1];
                if shape.contains_box(i + 1, j) {
                    let v = hook.rows()[i][j - 1];
                    jobs.push((shape.clone(), DivJob::Column(u, v)));
                }
                if shape.contains_box(i, j + 1) {
                    let v = hook.rows()[i - 1][j];
                    jobs.push((shape.clone(), DivJob::Row(u, v)));
                }
            }
            for k in 1..shape.durfee() {
                jobs.push((shape.clone(), DivJob::Strip(k)));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(shape, job)| divisibility_check(&shape, &job, &q0))
        .collect()
}

enum DivJob {
    Column(usize, usize),
    Row(usize, usize),
    Strip(usize),
}

fn divisibility_check(shape: &Partition, job: &DivJob, q0: &BigRational) -> Result<CheckReport> {
    let n = shape.n();
    let alg = HeckeAlgebra::numeric(n, q0)?;
    let hook = StandardTableau::hook_tableau(shape);
    let spec = FusionSpec::with_default_direction(hook.clone(), Variant::Hook);
    let f = evaluate_f_at(&spec, q0)?.element;
    match job {
        DivJob::Column(u, v) => {
            let p = column_pair_divisor(&alg, &hook, *u, *v)?;
            let pass = left_divisibility_solve(&alg, &p, &f)?.is_some();
            Ok(CheckReport::shaped(
                "column-divisor",
                shape,
                pass,
                format!("pair (u, v) = ({u}, {v})"),
            ))
        }
        DivJob::Row(u, v) => {
            let p = row_pair_divisor(&alg, &hook, *u, *v)?;
            let pass = left_divisibility_solve(&alg, &p, &f)?.is_some();
            Ok(CheckReport::shaped(
                "row-divisor",
                shape,
                pass,
                format!("pair (u, v) = ({u}, {v})"),
            ))
        }
        DivJob::Strip(k) => {
            let stripped = shape
                .strip_hooks(*k)
                .ok_or_else(|| Error::InvariantViolated("stripping left nothing".into()))?;
            let removed: usize = shape.principal_hooks()[..*k].iter().sum();
            let inner_hook = StandardTableau::hook_tableau(&stripped);
            let inner_spec = FusionSpec::with_default_direction(inner_hook, Variant::Hook);
            let inner = evaluate_f_at(&inner_spec, q0)?.element;
            let shifted = inner.shift_embed(n, removed)?;
            let pass = right_divisibility_solve(&alg, &shifted, &f)?.is_some();
            Ok(CheckReport::shaped(
                "hook-stripping",
                shape,
                pass,
                format!("first {k} hook(s) removed, inner shape {stripped}"),
            ))
        }
    }
}

// ---- G basis, ideals, irreducibility ----

fn suite_g_basis(opts: &VerifyOptions) -> Result<Vec<CheckReport>> {
    let q0 = QPool::seeded(opts.seed).first().clone();
    let mut reports = Vec::new();

    // G_{Λ°} = F_{Λ°}, exact over ℚ(q)
    let shapes: Vec<Partition> = (1..=opts.max_n).flat_map(Partition::all).collect();
    let hook_eq: Result<Vec<CheckReport>> = shapes
        .par_iter()
        .map(|shape| {
            let hook = StandardTableau::hook_tableau(shape);
            let g = evaluate_g(&hook)?.element;
            let f = evaluate_f(&FusionSpec::with_default_direction(
                hook.clone(),
                Variant::Hook,
            ))?
            .element;
            Ok(CheckReport::shaped(
                "g-equals-f-hook",
                shape,
                g == f,
                "G_{Λ°} = F_{Λ°}",
            ))
        })
        .collect();
    reports.extend(hook_eq?);

    // A-complement identity, symbolic in t, n ≤ 4
    let mut complement_jobs = Vec::new();
    for n in 1..=opts.max_n.min(4) {
        for shape in Partition::all(n) {
            for tableau in StandardTableau::standard_tableaux(&shape) {
                complement_jobs.push(tableau);
            }
        }
    }
    let complements: Result<Vec<CheckReport>> = complement_jobs
        .into_par_iter()
        .map(|tableau| {
            let pass = check_a_complement(&tableau)?;
            Ok(CheckReport::tabled(
                "a-complement",
                &tableau,
                pass,
                "F = G × reversed-complement product",
            ))
        })
        .collect();
    reports.extend(complements?);

    // rank of the G family and the ideal dimension, at numeric q
    let per_shape: Result<Vec<Vec<CheckReport>>> = shapes
        .par_iter()
        .map(|shape| {
            let n = shape.n();
            let alg = HeckeAlgebra::numeric(n, &q0)?;
            let expected = shape.num_standard_tableaux();
            let tableaux = StandardTableau::standard_tableaux(shape);
            let gs: Result<Vec<HeckeElement<BigRational>>> = tableaux
                .iter()
                .map(|t| Ok(evaluate_g_at(t, &q0)?.element))
                .collect();
            let gs = gs?;
            let (_, index) = perm_index(n);
            let mut span = RowSpace::new(index.len());
            for g in &gs {
                span.insert(element_coords(g, &index));
            }
            let rank_ok = span.rank() as u128 == expected;
            let hook_spec = FusionSpec::with_default_direction(
                StandardTableau::hook_tableau(shape),
                Variant::Hook,
            );
            let f = evaluate_f_at(&hook_spec, &q0)?.element;
            let dim = ideal_dimension(&alg, &f)? as u128;
            let mut out = vec![
                CheckReport::shaped(
                    "g-family-rank",
                    shape,
                    rank_ok,
                    format!("rank = f^λ = {expected}"),
                ),
                CheckReport::shaped(
                    "ideal-dimension",
                    shape,
                    dim == expected,
                    format!("dim H_n·F = {dim}, f^λ = {expected}"),
                ),
            ];
            // action matrices + Burnside for small n
            if n <= opts.max_n.min(4) && n >= 2 {
                let mats = action_matrices(&alg, &gs)?;
                let rel_ok = action_relations_hold(&alg, &mats)?;
                out.push(CheckReport::shaped(
                    "action-relations",
                    shape,
                    rel_ok,
                    "matrices satisfy the defining relations",
                ));
                let irr = burnside_irreducibility(&mats)?;
                out.push(CheckReport::shaped(
                    "burnside-irreducibility",
                    shape,
                    irr,
                    format!("matrix algebra has dimension {}²", gs.len()),
                ));
            }
            Ok(out)
        })
        .collect();
    for batch in per_shape? {
        reports.extend(batch);
    }

    // Σ (f^λ)² = n!, the dimension-level non-equivalence consistency check
    for n in 1..=opts.max_n.max(6) {
        let sum: u128 = Partition::all(n)
            .iter()
            .map(|p| {
                let f = p.num_standard_tableaux();
                f * f
            })
            .sum();
        let factorial: u128 = (1..=n as u128).product();
        reports.push(CheckReport::plain(
            "dimension-sum",
            sum == factorial,
            format!("n = {n}: Σ (f^λ)² = {sum}, n! = {factorial}"),
        ));
    }
    Ok(reports)
}

fn action_relations_hold<K: Scalar>(
    alg: &HeckeAlgebra<K>,
    mats: &[Matrix<K>],
) -> Result<bool> {
    let f = mats[0].rows();
    let id = Matrix::identity(f);
    for (i, m) in mats.iter().enumerate() {
        // (M − q)(M + q⁻¹) = 0
        let a = m.sub(&id.scale(alg.q()));
        let b = m.sub(&id.scale(&alg.q_inv().neg()));
        if a.mul(&b)? != Matrix::zeros(f, f) {
            return Ok(false);
        }
        if i + 1 < mats.len() {
            let lhs = m.mul(&mats[i + 1])?.mul(m)?;
            let rhs = mats[i + 1].mul(m)?.mul(&mats[i + 1])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        for j in i + 2..mats.len() {
            if m.mul(&mats[j])? != mats[j].mul(m)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---- q = 1 specialization ----

fn suite_q1(table: &FTable) -> Result<Vec<CheckReport>> {
    let entries = match table {
        FTable::Symbolic(entries) => entries,
        FTable::Numeric(..) => {
            return Err(Error::Parse(
                "q1-specialization requires symbolic mode".into(),
            ))
        }
    };
    entries
        .par_iter()
        .filter(|e| e.variant == Variant::Hook)
        .map(|e| {
            let n = e.tableau.n();
            let s = specialize_q1(&e.element)?;
            let sigma0 = Permutation::longest(n)?;
            let mut pass = s.coeff_of(&sigma0) == rat(1, 1);
            let boxes = e.tableau.entry_boxes();
            for k in 1..n {
                let (i1, j1) = boxes[k - 1];
                let (i2, j2) = boxes[k];
                if j1 == j2 {
                    pass &= s.left_mul_transposition(k) == s.scale(&rat(-1, 1));
                } else if i1 == i2 {
                    pass &= s.left_mul_transposition(k) == s.scale(&rat(1, 1));
                }
            }
            Ok(CheckReport::tabled(
                "q1-specialization",
                &e.tableau,
                pass,
                "no pole; σ_0 coefficient 1; ±1 eigenvalues",
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(max_n: usize) -> VerifyOptions {
        VerifyOptions {
            max_n,
            mode: Mode::Symbolic,
            seed: DEFAULT_SEED,
        }
    }

    #[test]
    fn relations_suite_passes() {
        let reports = run_suites(&[Suite::Relations], &opts(4)).unwrap();
        assert!(all_pass(&reports), "{reports:?}");
    }

    #[test]
    fn factor_identities_suite_passes() {
        let reports = run_suites(&[Suite::FactorIdentities], &opts(3)).unwrap();
        assert!(all_pass(&reports));
        assert!(reports.iter().any(|r| r.check == "yang-baxter-symbolic-t"));
    }

    #[test]
    fn element_suites_pass_to_n3() {
        let o = opts(3);
        let table = build_f_table(&o).unwrap();
        for suite in [
            Suite::Regularity,
            Suite::VariantAgreement,
            Suite::T0Coeff,
            Suite::PhiInvariance,
            Suite::EigenDivisibility,
            Suite::Q1Specialization,
        ] {
            let reports = run_suite(suite, &o, Some(&table)).unwrap();
            assert!(all_pass(&reports), "{suite:?}: {reports:?}");
            assert!(!reports.is_empty());
        }
    }

    #[test]
    fn numeric_mode_element_suites_pass_to_n3() {
        let o = VerifyOptions {
            max_n: 3,
            mode: Mode::Numeric,
            seed: DEFAULT_SEED,
        };
        let table = build_f_table(&o).unwrap();
        for suite in [
            Suite::Regularity,
            Suite::VariantAgreement,
            Suite::T0Coeff,
            Suite::PhiInvariance,
            Suite::EigenDivisibility,
        ] {
            let reports = run_suite(suite, &o, Some(&table)).unwrap();
            assert!(all_pass(&reports), "{suite:?}: {reports:?}");
        }
    }

    #[test]
    fn remaining_suites_pass_small() {
        for suite in [
            Suite::TripleRegularity,
            Suite::Intertwining,
            Suite::Divisibility,
            Suite::GBasis,
        ] {
            let reports = run_suites(&[suite], &opts(3)).unwrap();
            assert!(all_pass(&reports), "{suite:?}: {reports:?}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            let parsed: Suite = suite.name().parse().unwrap();
            assert_eq!(parsed, suite);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
