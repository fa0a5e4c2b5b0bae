//! Independent brute-force verifiers built from linear algebra and
//! univariate arithmetic only. Nothing here touches the basis engine, so
//! agreement between the two routes is a genuine cross-check.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Dimension of (polynomials of degree < N) modulo the degree-< N part of
/// the ideal plus all monomials of degree >= N: the Hilbert function of
/// `R/(I + m^N)`. For an ideal that is zero-dimensional at the origin this
/// is non-decreasing in N and stabilizes at the local multiplicity.
///
/// Rows of the Macaulay matrix are the monomial multiples `g * m` of the
/// generators, truncated below degree N; the rank is taken by fraction-free
/// sparse elimination over the integers.
pub fn truncated_local_dimension(ideal: &Ideal, n_bound: u32) -> u64 {
    assert!(n_bound >= 1, "degree bound must be at least 1");
    let ring = ideal.ring();
    let nvars = ring.nvars();
    let columns = count_monomials_below(nvars, n_bound);

    let mut echelon = Echelon::new();
    for g in ideal.generators() {
        if g.is_zero() {
            continue;
        }
        let d_min = g.min_degree();
        if d_min >= n_bound {
            continue;
        }
        for mult in monomials_up_to(nvars, n_bound - 1 - d_min) {
            let mut row: BTreeMap<Monomial, BigInt> = BTreeMap::new();
            let mut denom_lcm = BigInt::one();
            for (m, c) in g.terms() {
                let shifted = m.mul(&mult);
                if shifted.degree() < n_bound {
                    denom_lcm = denom_lcm.lcm(c.denom());
                }
            }
            for (m, c) in g.terms() {
                let shifted = m.mul(&mult);
                if shifted.degree() < n_bound {
                    let scaled: BigRational = c * BigRational::from_integer(denom_lcm.clone());
                    debug_assert!(scaled.is_integer());
                    row.insert(shifted, scaled.to_integer());
                }
            }
            echelon.insert(row);
        }
    }
    columns - echelon.rank() as u64
}

/// Result of the stabilization scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilizedMultiplicity {
    Finite(u64),
    NotStabilized,
}

impl StabilizedMultiplicity {
    pub fn finite(&self) -> Option<u64> {
        match self {
            StabilizedMultiplicity::Finite(v) => Some(*v),
            StabilizedMultiplicity::NotStabilized => None,
        }
    }
}

/// Runs `truncated_local_dimension` for N = 2, 3, ... and returns the first
/// value seen twice on consecutive N. Two consecutive repeats certify the
/// plateau for the zero-dimensional ideals in scope; non-stabilization by
/// `n_max` signals positive dimension at the origin or too small a bound.
pub fn stabilized_local_multiplicity(ideal: &Ideal, n_max: u32) -> StabilizedMultiplicity {
    assert!(n_max >= 3, "stabilization scan needs n_max >= 3");
    let mut prev = truncated_local_dimension(ideal, 2);
    for n in 3..=n_max {
        let cur = truncated_local_dimension(ideal, n);
        if cur == prev {
            return StabilizedMultiplicity::Finite(cur);
        }
        prev = cur;
    }
    StabilizedMultiplicity::NotStabilized
}

/// Fraction-free sparse row echelon over the integers. Rows are kept
/// primitive (content stripped), so entries never leave ℤ and stay small.
struct Echelon {
    pivots: BTreeMap<Monomial, BTreeMap<Monomial, BigInt>>,
}

impl Echelon {
    fn new() -> Echelon {
        Echelon { pivots: BTreeMap::new() }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn insert(&mut self, mut row: BTreeMap<Monomial, BigInt>) {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some(lead) = row.keys().next().cloned() else {
                return;
            };
            let Some(pivot) = self.pivots.get(&lead) else {
                strip_content(&mut row);
                self.pivots.insert(lead, row);
                return;
            };
            // row <- p_lead * row - r_lead * pivot, cancelling `lead`.
            let p_lead = pivot[&lead].clone();
            let r_lead = row[&lead].clone();
            for (m, v) in row.iter_mut() {
                *v *= &p_lead;
                if let Some(pv) = pivot.get(m) {
                    *v -= pv * &r_lead;
                }
            }
            for (m, pv) in pivot {
                if !row.contains_key(m) {
                    row.insert(m.clone(), -(pv * &r_lead));
                }
            }
            row.retain(|_, v| !v.is_zero());
            strip_content(&mut row);
        }
    }
}

fn strip_content(row: &mut BTreeMap<Monomial, BigInt>) {
    let mut content = BigInt::zero();
    for v in row.values() {
        content = content.gcd(v);
        if content.is_one() {
            return;
        }
    }
    if content > BigInt::one() {
        for v in row.values_mut() {
            *v /= &content;
        }
    }
}

/// All monomials of total degree <= bound, in a deterministic order.
fn monomials_up_to(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill(&mut out, &mut exps, 0, bound);
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, var: usize, left: u32) {
    if var == exps.len() {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in 0..=left {
        exps[var] = e;
        fill(out, exps, var + 1, left - e);
    }
    exps[var] = 0;
}

/// Number of monomials of degree < n_bound in nvars variables:
/// C(n_bound - 1 + nvars, nvars).
fn count_monomials_below(nvars: usize, n_bound: u32) -> u64 {
    let n = (n_bound - 1) as u128 + nvars as u128;
    let k = nvars as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    (num / den) as u64
}

/// Outcome of composing a hypersurface equation with a curve
/// parametrization truncated at a fixed degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveMultiplicity {
    Finite(u64),
    /// Identically zero up to the truncation degree; either the curve lies
    /// in the hypersurface or the truncation is too small to certify.
    InfiniteUpToTruncation,
}

/// A parametrized curve germ `r(t)` with `r(0)` the stated base point,
/// reduced in the sense that the exponents of the non-constant part have
/// gcd 1.
#[derive(Debug, Clone)]
pub struct CurveParam {
    ring: PolyRing,
    base: Vec<BigRational>,
    /// coords[i] maps exponent -> coefficient, constant term excluded.
    coords: Vec<BTreeMap<u32, BigRational>>,
    truncation: u32,
}

pub const DEFAULT_CURVE_TRUNCATION: u32 = 64;

impl CurveParam {
    /// `coords[i]` lists the (exponent, coefficient) pairs of `r_i(t) - p_i`.
    pub fn new(
        ring: &PolyRing,
        base: Vec<BigRational>,
        coords: Vec<Vec<(u32, BigRational)>>,
        truncation: u32,
    ) -> Result<CurveParam> {
        if base.len() != ring.nvars() || coords.len() != ring.nvars() {
            return Err(Error::InvalidInput(
                "curve parametrization must cover every coordinate".into(),
            ));
        }
        let mut cleaned: Vec<BTreeMap<u32, BigRational>> = Vec::with_capacity(coords.len());
        let mut gcd_exp: u32 = 0;
        for entries in coords {
            let mut map = BTreeMap::new();
            for (e, c) in entries {
                if e == 0 {
                    return Err(Error::InvalidInput(
                        "constant terms belong in the base point".into(),
                    ));
                }
                if !c.is_zero() {
                    gcd_exp = gcd_exp.gcd(&e);
                    map.insert(e, c);
                }
            }
            cleaned.push(map);
        }
        if gcd_exp > 1 {
            return Err(Error::InvalidInput(format!(
                "parametrization is not reduced: exponent gcd is {gcd_exp}"
            )));
        }
        Ok(CurveParam { ring: ring.clone(), base, coords: cleaned, truncation })
    }

    /// A line `p + t*direction` through `p`.
    pub fn line(ring: &PolyRing, base: Vec<BigRational>, direction: Vec<BigRational>) -> Result<CurveParam> {
        let coords = direction.into_iter().map(|c| vec![(1u32, c)]).collect();
        CurveParam::new(ring, base, coords, DEFAULT_CURVE_TRUNCATION)
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn base(&self) -> &[BigRational] {
        &self.base
    }

    /// Full coordinate series `r_i(t)` including the base point.
    fn coordinate_series(&self, i: usize) -> BTreeMap<u32, BigRational> {
        let mut s = self.coords[i].clone();
        if !self.base[i].is_zero() {
            s.insert(0, self.base[i].clone());
        }
        s
    }
}

/// `mult_t g(r(t))`: the exponent of the lowest power of t appearing in the
/// composition, computed exactly below the truncation degree.
pub fn curve_intersection_multiplicity(r: &CurveParam, g: &Polynomial) -> Result<CurveMultiplicity> {
    if g.ring() != &r.ring {
        return Err(Error::RingMismatch);
    }
    let trunc = r.truncation;
    let mut composed: BTreeMap<u32, BigRational> = BTreeMap::new();
    for (mono, coeff) in g.terms() {
        let mut term: BTreeMap<u32, BigRational> = BTreeMap::from([(0u32, coeff.clone())]);
        for (i, &e) in mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let series = r.coordinate_series(i);
            for _ in 0..e {
                term = series_mul_truncated(&term, &series, trunc);
                if term.is_empty() {
                    break;
                }
            }
            if term.is_empty() {
                break;
            }
        }
        for (e, c) in term {
            let entry = composed.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
    }
    composed.retain(|_, c| !c.is_zero());
    match composed.keys().next() {
        Some(&e) => Ok(CurveMultiplicity::Finite(u64::from(e))),
        None => Ok(CurveMultiplicity::InfiniteUpToTruncation),
    }
}

fn series_mul_truncated(
    a: &BTreeMap<u32, BigRational>,
    b: &BTreeMap<u32, BigRational>,
    trunc: u32,
) -> BTreeMap<u32, BigRational> {
    let mut out: BTreeMap<u32, BigRational> = BTreeMap::new();
    for (&ea, ca) in a {
        for (&eb, cb) in b {
            let e = ea + eb;
            if e > trunc {
                continue;
            }
            let entry = out.entry(e).or_insert_with(BigRational::zero);
            *entry += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ideal(vars: &[&str], gens: &[&str]) -> Ideal {
        let ring = PolyRing::new(vars.to_vec()).unwrap();
        let gens = gens.iter().map(|s| parse_polynomial(s, &ring).unwrap()).collect();
        Ideal::new(ring, gens).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn truncated_dimension_examples() {
        assert_eq!(truncated_local_dimension(&ideal(&["x", "y"], &["x^2", "y"]), 5), 2);
        assert_eq!(truncated_local_dimension(&ideal(&["x", "y"], &["x^5", "y^3"]), 10), 15);
        // <y, y^2 - x^3> = <y, x^3>: standard monomials 1, x, x^2.
        assert_eq!(truncated_local_dimension(&ideal(&["x", "y"], &["y", "y^2 - x^3"]), 6), 3);
    }

    #[test]
    fn stabilization_examples() {
        assert_eq!(
            stabilized_local_multiplicity(&ideal(&["x", "y"], &["x^2", "y"]), 10),
            StabilizedMultiplicity::Finite(2)
        );
        assert_eq!(
            stabilized_local_multiplicity(&ideal(&["x", "y"], &["x"]), 12),
            StabilizedMultiplicity::NotStabilized
        );
        // Jacobian ideal of y^2 - x^5.
        assert_eq!(
            stabilized_local_multiplicity(&ideal(&["x", "y"], &["-5*x^4", "2*y"]), 12),
            StabilizedMultiplicity::Finite(4)
        );
    }

    #[test]
    fn hilbert_values_grow_to_the_multiplicity() {
        // R/(I + m^N) for I of multiplicity 15: strictly below until the
        // staircase fits.
        let i = ideal(&["x", "y"], &["x^5", "y^3"]);
        assert!(truncated_local_dimension(&i, 3) < 15);
        assert_eq!(truncated_local_dimension(&i, 8), 15);
        assert_eq!(truncated_local_dimension(&i, 9), 15);
    }

    #[test]
    fn curve_multiplicity_examples() {
        let ring = PolyRing::new(vec!["x", "y"]).unwrap();
        let cusp = parse_polynomial("y^2 - x^3", &ring).unwrap();

        // r(t) = (t, 0): g(r(t)) = -t^3.
        let r = CurveParam::new(
            &ring,
            vec![rat(0), rat(0)],
            vec![vec![(1, rat(1))], vec![]],
            16,
        )
        .unwrap();
        assert_eq!(curve_intersection_multiplicity(&r, &cusp).unwrap(), CurveMultiplicity::Finite(3));

        // r(t) = (t^2, t^3) lies inside V(g).
        let on_curve = CurveParam::new(
            &ring,
            vec![rat(0), rat(0)],
            vec![vec![(2, rat(1))], vec![(3, rat(1))]],
            16,
        )
        .unwrap();
        assert_eq!(
            curve_intersection_multiplicity(&on_curve, &cusp).unwrap(),
            CurveMultiplicity::InfiniteUpToTruncation
        );

        // r(t) = (t, t) against y - x^2: order 1, transverse.
        let diag = CurveParam::line(&ring, vec![rat(0), rat(0)], vec![rat(1), rat(1)]).unwrap();
        let parabola = parse_polynomial("y - x^2", &ring).unwrap();
        assert_eq!(
            curve_intersection_multiplicity(&diag, &parabola).unwrap(),
            CurveMultiplicity::Finite(1)
        );
    }

    #[test]
    fn rejects_unreduced_parametrization() {
        let ring = PolyRing::new(vec!["x", "y"]).unwrap();
        let bad = CurveParam::new(
            &ring,
            vec![rat(0), rat(0)],
            vec![vec![(2, rat(1))], vec![(4, rat(1))]],
            16,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn conservation_of_number_spot_check() {
        // E = V(y) against C_t = V(x^2 - t): multiplicity 2 at t = 0 splits
        // into 1 + 1 at the two nearby points for t = 1.
        let ring = PolyRing::new(vec!["x", "y"]).unwrap();
        let c0 = parse_polynomial("x^2", &ring).unwrap();
        let c1 = parse_polynomial("x^2 - 1", &ring).unwrap();

        let at_origin = CurveParam::line(&ring, vec![rat(0), rat(0)], vec![rat(1), rat(0)]).unwrap();
        let at_plus = CurveParam::line(&ring, vec![rat(1), rat(0)], vec![rat(1), rat(0)]).unwrap();
        let at_minus = CurveParam::line(&ring, vec![rat(-1), rat(0)], vec![rat(1), rat(0)]).unwrap();

        let m0 = curve_intersection_multiplicity(&at_origin, &c0).unwrap();
        let mp = curve_intersection_multiplicity(&at_plus, &c1).unwrap();
        let mm = curve_intersection_multiplicity(&at_minus, &c1).unwrap();
        assert_eq!(m0, CurveMultiplicity::Finite(2));
        assert_eq!(mp, CurveMultiplicity::Finite(1));
        assert_eq!(mm, CurveMultiplicity::Finite(1));
    }

    #[test]
    fn counting_matches_enumeration() {
        for nvars in 1..=4 {
            for n in 1..=6 {
                let listed = monomials_up_to(nvars, n - 1).len() as u64;
                assert_eq!(count_monomials_below(nvars, n), listed);
            }
        }
    }
}
