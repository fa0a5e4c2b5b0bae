//! The central pipeline: critical ideal, polar ideals via saturation, Lê
//! numbers and polar numbers via local multiplicities, coordinate
//! genericity management, and existence checks.
//!
//! Coordinate order matters: the first ring variable is z0, the slicing
//! variable. The k-th polar ideal is the saturation of the ideal of the
//! last n+1-k partial derivatives by the full Jacobian ideal, which removes
//! exactly the components lying inside the critical locus. Intersection
//! numbers are taken as lengths of the localized quotient after adding
//! slice and partial generators, so no primary decomposition is ever
//! needed.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::{coordinate_slice, Ideal, Limits, LocalMultiplicity};
use crate::poly::{Polynomial, ShearMatrix};

/// The Jacobian data of f at the origin.
#[derive(Debug, Clone)]
pub struct CriticalData {
    f: Polynomial,
    partials: Vec<Polynomial>,
    jacobian: Ideal,
    /// dim_0 of the critical locus; -1 when the origin is not a critical
    /// point.
    s: i64,
    /// Ambient variable count minus one.
    n: usize,
}

impl CriticalData {
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn partials(&self) -> &[Polynomial] {
        &self.partials
    }

    pub fn jacobian(&self) -> &Ideal {
        &self.jacobian
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Assembles the Jacobian ideal of all n+1 partials and computes the local
/// dimension of the critical locus at the origin.
pub fn critical_data(f: &Polynomial, limits: &Limits) -> Result<CriticalData> {
    if f.is_zero() {
        return Err(Error::InvalidInput("f must not be the zero polynomial".into()));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidInput("f(0) must vanish".into()));
    }
    let ring = f.ring().clone();
    let nvars = ring.nvars();
    let partials: Vec<Polynomial> = (0..nvars)
        .map(|i| f.partial_derivative(i))
        .collect::<Result<_>>()?;
    let jacobian = Ideal::new(ring, partials.clone())?;
    let s = jacobian.local_dim(limits)?;
    Ok(CriticalData { f: f.clone(), partials, jacobian, s, n: nvars - 1 })
}

/// A polar ideal at one level, together with its dimension at the origin.
#[derive(Debug, Clone)]
pub struct PolarIdeal {
    pub level: usize,
    pub ideal: Ideal,
    pub local_dim: i64,
}

/// The k-th polar ideal: partials z_k..z_n, saturated by the Jacobian
/// ideal. Level 0 is the zero cycle (unit ideal); level n+1 is the whole
/// space (zero ideal).
pub fn polar_ideal(cd: &CriticalData, k: usize, limits: &Limits) -> Result<PolarIdeal> {
    let ring = cd.f.ring().clone();
    if k > cd.n + 1 {
        return Err(Error::InvalidInput(format!(
            "polar level {k} exceeds ambient dimension marker {}",
            cd.n + 1
        )));
    }
    if k == 0 {
        let unit = Ideal::new(ring.clone(), vec![ring.one()])?;
        return Ok(PolarIdeal { level: 0, ideal: unit, local_dim: -1 });
    }
    let ideal = if k == cd.n + 1 {
        Ideal::zero(ring)
    } else {
        let gens: Vec<Polynomial> = cd.partials[k..].to_vec();
        let raw = Ideal::new(ring.clone(), gens)?;
        // The Jacobian ideal splits as J = <∂_0..∂_{k-1}> + I, and
        // I : (A + I)^m = I : A^m exactly (mixed products absorb into I),
        // so saturating by the leading block of partials alone yields the
        // same ideal with far fewer quotients.
        let head: Vec<Polynomial> = cd.partials[..k].iter().filter(|p| !p.is_zero()).cloned().collect();
        if head.is_empty() {
            // f does not involve z_0..z_{k-1}: every component of V(I)
            // lies inside the critical locus and the polar cycle is empty.
            Ideal::new(ring.clone(), vec![ring.one()])?
        } else {
            raw.saturation(&Ideal::new(ring, head)?, limits)?
        }
    };
    let local_dim = ideal.local_dim(limits)?;
    Ok(PolarIdeal { level: k, ideal, local_dim })
}

/// One recorded local-multiplicity computation, kept so a verification pass
/// can replay it through the independent truncation oracle.
#[derive(Debug, Clone)]
pub struct MultiplicityCheck {
    pub label: String,
    pub ideal: Ideal,
    pub value: u64,
}

fn multiplicity_at_level(
    ideal: &Ideal,
    level: usize,
    what: &str,
    limits: &Limits,
) -> Result<u64> {
    match ideal.local_multiplicity(limits)? {
        LocalMultiplicity::Finite(v) => Ok(v),
        LocalMultiplicity::NotZeroDimensional => Err(Error::ExistenceFailure {
            level,
            detail: format!("{what} is not zero-dimensional at the origin"),
        }),
    }
}

/// γ^k(0): intersection number of the k-th polar ideal with the slice
/// `V(z_0, ..., z_{k-1})` at the origin.
pub fn gamma_number(cd: &CriticalData, k: usize, limits: &Limits) -> Result<u64> {
    if k == 0 {
        // Γ^0 = 0 by convention.
        return Ok(0);
    }
    let polar = polar_ideal(cd, k, limits)?;
    let slice = coordinate_slice(cd.f.ring(), k);
    let sliced = polar.ideal.with_extra_gens(&slice)?;
    multiplicity_at_level(&sliced, k, "polar slice", limits)
}

/// λ^k(0), computed as the total intersection number
/// `(Γ^{k+1} · V(∂f/∂z_k) · V(z_0,...,z_{k-1}))_0` minus γ^k(0).
pub fn lambda_number(cd: &CriticalData, k: usize, limits: &Limits) -> Result<u64> {
    let total = total_number(cd, k, limits)?;
    let gamma = gamma_number(cd, k, limits)?;
    if total < gamma {
        return Err(Error::InternalInconsistency(format!(
            "negative Lê number at level {k}: total {total} < gamma {gamma}"
        )));
    }
    Ok(total - gamma)
}

fn total_ideal(cd: &CriticalData, k: usize, limits: &Limits) -> Result<Ideal> {
    let polar = polar_ideal(cd, k + 1, limits)?;
    let mut extra = vec![cd.partials[k].clone()];
    extra.extend(coordinate_slice(cd.f.ring(), k));
    polar.ideal.with_extra_gens(&extra)
}

fn total_number(cd: &CriticalData, k: usize, limits: &Limits) -> Result<u64> {
    let ideal = total_ideal(cd, k, limits)?;
    multiplicity_at_level(&ideal, k, "polar times partial slice", limits)
}

/// Per-level existence diagnostics.
#[derive(Debug, Clone)]
pub struct LevelCheck {
    pub level: usize,
    /// dim_0 (Γ^k ∩ V(z_0..z_{k-1})) ≤ 0.
    pub slice_ok: bool,
    /// dim_0 (Γ^{k+1} ∩ V(∂f/∂z_k) ∩ V(z_0..z_{k-1})) ≤ 0; this bounds the
    /// Γ^k and Λ^k slices simultaneously since the total contains both.
    pub total_ok: bool,
    /// dim_0 of Γ^{k+1}; must be k+1, or -1 for an empty germ.
    pub polar_dim: i64,
    pub polar_dim_ok: bool,
}

impl LevelCheck {
    pub fn ok(&self) -> bool {
        self.slice_ok && self.total_ok && self.polar_dim_ok
    }
}

#[derive(Debug, Clone)]
pub struct ExistenceReport {
    pub levels: Vec<LevelCheck>,
    pub warnings: Vec<String>,
}

impl ExistenceReport {
    pub fn all_ok(&self) -> bool {
        self.levels.iter().all(LevelCheck::ok)
    }
}

pub const PURITY_WARNING: &str =
    "PURITY-UNVERIFIED: polar cycle dimensions are checked at the origin, but equidimensionality is not";

/// Checks, for 1 ≤ k ≤ s, the dimension conditions that make λ^k(0) and
/// γ^k(0) exist in the current coordinates. When s ≤ 0 there is nothing to
/// check and the report is trivially clean.
pub fn existence_check(cd: &CriticalData, limits: &Limits) -> Result<ExistenceReport> {
    let polars = all_polar_ideals(cd, limits)?;
    let mut levels_data = Vec::new();
    for k in 1..=cd.s.max(0) as usize {
        levels_data.push(level_ideals(cd, &polars, k)?);
    }
    existence_from(cd, &polars, &levels_data, limits)
}

/// Polar ideals at levels 1..=s+1; empty when s < 0.
fn all_polar_ideals(cd: &CriticalData, limits: &Limits) -> Result<Vec<PolarIdeal>> {
    let mut polars = Vec::new();
    if cd.s >= 0 {
        for k in 1..=(cd.s as usize + 1) {
            polars.push(polar_ideal(cd, k, limits)?);
        }
    }
    Ok(polars)
}

/// Cuts the first `k` coordinates out of every generator: the quotient by
/// the slice `V(z_0, ..., z_{k-1})` is the same ring with those variables
/// substituted by zero, and the local ring at the origin is unchanged by
/// the identification. Intersection numbers against the slice become plain
/// local multiplicities in the smaller ring, which keeps the standard-basis
/// work in as few variables as possible.
fn restrict_ideal(gens: &[Polynomial], k: usize) -> Result<Ideal> {
    assert!(!gens.is_empty());
    let restricted: Vec<Polynomial> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            for _ in 0..k {
                h = h.eliminate_variable(0)?;
            }
            Ok(h)
        })
        .collect::<Result<_>>()?;
    let ring = restricted[0].ring().clone();
    Ideal::new(ring, restricted)
}

/// Slice and total ideals for one level, in the ring with the sliced
/// coordinates removed.
struct LevelIdeals {
    /// Γ^k restricted to the slice; drives γ^k and existence (a).
    sliced: Ideal,
    /// Γ^{k+1} ∩ V(∂f/∂z_k) restricted to the slice; drives the total
    /// intersection number and existence (b).
    total: Ideal,
}

fn level_ideals(cd: &CriticalData, polars: &[PolarIdeal], k: usize) -> Result<LevelIdeals> {
    let sliced = restrict_ideal(polars[k - 1].ideal.generators(), k)?;
    let mut total_gens: Vec<Polynomial> = polars[k].ideal.generators().to_vec();
    total_gens.push(cd.partials[k].clone());
    let total = restrict_ideal(&total_gens, k)?;
    Ok(LevelIdeals { sliced, total })
}

fn existence_from(
    cd: &CriticalData,
    polars: &[PolarIdeal],
    levels_data: &[LevelIdeals],
    limits: &Limits,
) -> Result<ExistenceReport> {
    let mut levels = Vec::new();
    let mut warnings = Vec::new();
    if cd.s >= 1 {
        warnings.push(PURITY_WARNING.to_string());
        for k in 1..=(cd.s as usize) {
            let data = &levels_data[k - 1];
            let slice_ok = data.sliced.local_dim(limits)? <= 0;
            let total_ok = data.total.local_dim(limits)? <= 0;
            let polar_dim = polars[k].local_dim;
            let polar_dim_ok = polar_dim == (k as i64) + 1 || polar_dim == -1;
            levels.push(LevelCheck { level: k, slice_ok, total_ok, polar_dim, polar_dim_ok });
        }
    }
    Ok(ExistenceReport { levels, warnings })
}

/// How coordinates are chosen: the identity first (the worked examples all
/// use fixed coordinates), then seeded random upper-triangular unimodular
/// shears with entries in {-B..B}, B doubling every three failures.
#[derive(Debug, Clone, Copy)]
pub struct ShearPolicy {
    pub seed: u64,
    pub try_identity_first: bool,
    pub max_retries: u32,
    pub initial_bound: i64,
}

impl Default for ShearPolicy {
    fn default() -> Self {
        ShearPolicy { seed: 0, try_identity_first: true, max_retries: 12, initial_bound: 3 }
    }
}

impl ShearPolicy {
    pub fn seeded(seed: u64) -> Self {
        ShearPolicy { seed, ..Default::default() }
    }

    /// Skips the identity attempt; used to probe genuinely random shears.
    pub fn forced_random(seed: u64) -> Self {
        ShearPolicy { seed, try_identity_first: false, ..Default::default() }
    }
}

/// The numeric invariants at the origin, with the coordinates that produced
/// them.
#[derive(Debug, Clone)]
pub struct LeResult {
    pub s: i64,
    pub n: usize,
    /// lambda[k] = λ^k(0) for 0 ≤ k ≤ s; empty when s < 0.
    pub lambda: Vec<u64>,
    /// gamma[k-1] = γ^k(0) for 1 ≤ k ≤ s; γ^0 = 0 by convention.
    pub gamma: Vec<u64>,
    pub shear: ShearMatrix,
    pub seed: u64,
    pub existence: Vec<bool>,
    pub warnings: Vec<String>,
}

impl LeResult {
    pub fn gamma_at(&self, k: usize) -> u64 {
        if k == 0 {
            0
        } else {
            self.gamma[k - 1]
        }
    }
}

/// A complete run of the pipeline: the result plus every intermediate
/// object a verification or report pass needs.
#[derive(Debug)]
pub struct LeAnalysis {
    pub result: LeResult,
    pub critical: CriticalData,
    /// Polar ideals at levels 1..=s+1 (empty when s ≤ 0... level 1 is
    /// always present for s ≥ 0).
    pub polar: Vec<PolarIdeal>,
    pub checks: Vec<MultiplicityCheck>,
}

/// Runs the whole pipeline under the shear policy: attempts coordinates
/// until the existence checks pass or the retry budget is exhausted.
/// Deterministic for a fixed (f, policy, limits).
pub fn le_numbers(f: &Polynomial, policy: &ShearPolicy, limits: &Limits) -> Result<LeAnalysis> {
    let nvars = f.ring().nvars();
    let mut rng = SplitMix::new(policy.seed);
    let mut attempts: u32 = 0;

    loop {
        let shear = if attempts == 0 && policy.try_identity_first {
            ShearMatrix::identity(nvars)
        } else {
            let random_index = attempts - u32::from(policy.try_identity_first);
            if random_index >= policy.max_retries {
                return Err(Error::GenericityExhausted { tries: attempts });
            }
            let bound = policy.initial_bound << (random_index / 3);
            random_shear(nvars, &mut rng, bound)
        };
        attempts += 1;
        let g = f.apply_shear(&shear)?;
        match analyze(&g, shear, policy.seed, limits) {
            Ok(analysis) => return Ok(analysis),
            Err(Error::ExistenceFailure { .. }) => continue,
            Err(other) => return Err(other),
        }
    }
}

fn random_shear(nvars: usize, rng: &mut SplitMix, bound: i64) -> ShearMatrix {
    let mut rows: Vec<Vec<i64>> = (0..nvars)
        .map(|i| (0..nvars).map(|j| i64::from(i == j)).collect())
        .collect();
    for i in 0..nvars {
        for j in (i + 1)..nvars {
            rows[i][j] = rng.next_range(bound);
        }
    }
    ShearMatrix::from_rows(rows, Some(rng.state())).expect("unit upper-triangular by construction")
}

/// One attempt in fixed coordinates.
fn analyze(g: &Polynomial, shear: ShearMatrix, seed: u64, limits: &Limits) -> Result<LeAnalysis> {
    let cd = critical_data(g, limits)?;
    let mut warnings = Vec::new();

    if cd.s < 0 {
        let result = LeResult {
            s: -1,
            n: cd.n,
            lambda: Vec::new(),
            gamma: Vec::new(),
            shear,
            seed,
            existence: Vec::new(),
            warnings: vec![
                "the origin is not a critical point: the Milnor fiber is contractible and the Lê numbers are undefined".into(),
            ],
        };
        return Ok(LeAnalysis { result, critical: cd, polar: Vec::new(), checks: Vec::new() });
    }
    let s = cd.s as usize;
    if cd.s == cd.n as i64 {
        warnings.push(
            "critical locus has codimension at most one, so f is non-reduced; numbers are computed at face value".into(),
        );
    }

    let polar = all_polar_ideals(&cd, limits)?;
    let mut levels_data = Vec::new();
    for k in 1..=s {
        levels_data.push(level_ideals(&cd, &polar, k)?);
    }
    let existence = existence_from(&cd, &polar, &levels_data, limits)?;
    warnings.extend(existence.warnings.iter().cloned());
    if let Some(bad) = existence.levels.iter().find(|l| !l.ok()) {
        return Err(Error::ExistenceFailure {
            level: bad.level,
            detail: format!(
                "slice_ok={} total_ok={} polar_dim={} (expected {} or -1)",
                bad.slice_ok,
                bad.total_ok,
                bad.polar_dim,
                bad.level + 1
            ),
        });
    }

    let mut checks = Vec::new();
    let mut gamma = Vec::new();
    for k in 1..=s {
        let sliced = &levels_data[k - 1].sliced;
        let value = multiplicity_at_level(sliced, k, "polar slice", limits)?;
        checks.push(MultiplicityCheck { label: format!("gamma[{k}]"), ideal: sliced.clone(), value });
        gamma.push(value);
    }

    let mut lambda = Vec::new();
    for k in 0..=s {
        let total = if k == 0 {
            let mut gens = polar[0].ideal.generators().to_vec();
            gens.push(cd.partials[0].clone());
            Ideal::new(cd.f.ring().clone(), gens)?
        } else {
            levels_data[k - 1].total.clone()
        };
        let value = multiplicity_at_level(&total, k, "polar times partial slice", limits)?;
        checks.push(MultiplicityCheck { label: format!("total[{k}]"), ideal: total, value });
        let g_k = if k == 0 { 0 } else { gamma[k - 1] };
        if value < g_k {
            return Err(Error::InternalInconsistency(format!(
                "negative Lê number at level {k}: total {value} < gamma {g_k}"
            )));
        }
        lambda.push(value - g_k);
    }

    let result = LeResult {
        s: cd.s,
        n: cd.n,
        lambda,
        gamma,
        shear,
        seed,
        existence: existence.levels.iter().map(LevelCheck::ok).collect(),
        warnings,
    };
    Ok(LeAnalysis { result, critical: cd, polar, checks })
}

/// The three multiplicities of the polar-curve slice identity
/// `(Γ^1 · V(f))_0 = (Γ^1 · V(z_0))_0 + (Γ^1 · V(∂f/∂z_0))_0`.
#[derive(Debug, Clone)]
pub struct PolarCurveReport {
    /// (Γ^1 · V(f))_0
    pub with_f: u64,
    /// (Γ^1 · V(z_0))_0
    pub with_slice: u64,
    /// (Γ^1 · V(∂f/∂z_0))_0
    pub with_partial: u64,
    pub additive: bool,
    /// `with_f > with_partial`, reported when Γ^1 is non-empty at the
    /// origin.
    pub strict: Option<bool>,
    pub checks: Vec<MultiplicityCheck>,
}

pub fn polar_curve_report(cd: &CriticalData, limits: &Limits) -> Result<PolarCurveReport> {
    let polar = polar_ideal(cd, 1, limits)?;
    let with_f_ideal = polar.ideal.with_extra_gens(std::slice::from_ref(&cd.f))?;
    if with_f_ideal.local_dim(limits)? > 0 {
        return Err(Error::ImproperIntersection(
            "dim_0 (Γ^1 ∩ V(f)) > 0: z_0 is not a Thom slice in these coordinates".into(),
        ));
    }
    let slice_ideal = polar.ideal.with_extra_gens(&coordinate_slice(cd.f.ring(), 1))?;
    let partial_ideal = polar.ideal.with_extra_gens(std::slice::from_ref(&cd.partials[0]))?;

    let improper = |what: &str| Error::ImproperIntersection(format!("dim_0 (Γ^1 ∩ {what}) > 0"));
    let with_f = with_f_ideal
        .local_multiplicity(limits)?
        .finite()
        .ok_or_else(|| improper("V(f)"))?;
    let with_slice = slice_ideal
        .local_multiplicity(limits)?
        .finite()
        .ok_or_else(|| improper("V(z_0)"))?;
    let with_partial = partial_ideal
        .local_multiplicity(limits)?
        .finite()
        .ok_or_else(|| improper("V(∂f/∂z_0)"))?;

    let strict = if polar.local_dim >= 1 {
        Some(with_f > with_partial)
    } else {
        None
    };
    let checks = vec![
        MultiplicityCheck { label: "polar·V(f)".into(), ideal: with_f_ideal, value: with_f },
        MultiplicityCheck { label: "polar·V(z0)".into(), ideal: slice_ideal, value: with_slice },
        MultiplicityCheck { label: "polar·V(∂0 f)".into(), ideal: partial_ideal, value: with_partial },
    ];
    Ok(PolarCurveReport {
        with_f,
        with_slice,
        with_partial,
        additive: with_f == with_slice + with_partial,
        strict,
        checks,
    })
}

/// splitmix64; deterministic shear stream for a given seed.
struct SplitMix {
    state: u64,
}

impl SplitMix {
    fn new(seed: u64) -> SplitMix {
        SplitMix { state: seed }
    }

    fn state(&self) -> u64 {
        self.state
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish in {-bound..bound}.
    fn next_range(&mut self, bound: i64) -> i64 {
        let span = (2 * bound + 1) as u64;
        (self.next_u64() % span) as i64 - bound
    }
}
