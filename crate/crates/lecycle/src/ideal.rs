//! Ideals with cached bases, quotient and saturation, dimension and local
//! multiplicity. Local multiplicities realize intersection numbers of
//! properly intersecting cycles as Artinian lengths of the localized
//! quotient at the origin.

use std::collections::BTreeSet;
use std::sync::{Arc, RwLock};


use crate::basis::{self, Budget};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

/// Resource caps for basis-style computations. Exceeding any cap aborts
/// with [`Error::ResourceLimit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_steps: u64,
    pub max_degree: u32,
    pub max_basis: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_steps: 50_000, max_degree: 200, max_basis: 2_000 }
    }
}

/// Length of the localized quotient at the origin, when finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalMultiplicity {
    Finite(u64),
    NotZeroDimensional,
}

impl LocalMultiplicity {
    pub fn finite(&self) -> Option<u64> {
        match self {
            LocalMultiplicity::Finite(v) => Some(*v),
            LocalMultiplicity::NotZeroDimensional => None,
        }
    }
}

/// A polynomial ideal given by generators, with write-once cached bases
/// keyed by the monomial order that produced them.
#[derive(Debug)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    cache: RwLock<Vec<(MonomialOrder, Arc<Vec<Polynomial>>)>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.read().expect("cache lock").clone();
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache: RwLock::new(cache) }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl Ideal {
    pub fn new(ring: PolyRing, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("ideal needs at least one generator".into()));
        }
        for g in &gens {
            if g.ring() != &ring {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal { ring, gens, cache: RwLock::new(Vec::new()) })
    }

    pub fn zero(ring: PolyRing) -> Ideal {
        let z = ring.zero();
        Ideal { ring, gens: vec![z], cache: RwLock::new(Vec::new()) }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    /// New ideal with extra generators appended; the cache does not carry
    /// over.
    pub fn with_extra_gens(&self, more: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        for g in more {
            if g.ring() != &self.ring {
                return Err(Error::RingMismatch);
            }
            gens.push(g.clone());
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// Basis under `ord`, computed once and cached.
    pub fn basis(&self, ord: &MonomialOrder, limits: &Limits) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(b) = self.cached_basis(ord) {
            return Ok(b);
        }
        let mut budget = Budget::new(limits);
        let computed = Arc::new(basis::compute_basis(&self.gens, ord, &mut budget)?);
        let mut cache = self.cache.write().expect("cache lock");
        if let Some((_, b)) = cache.iter().find(|(o, _)| o == ord) {
            return Ok(b.clone());
        }
        cache.push((ord.clone(), computed.clone()));
        Ok(computed)
    }

    pub fn cached_basis(&self, ord: &MonomialOrder) -> Option<Arc<Vec<Polynomial>>> {
        let cache = self.cache.read().expect("cache lock");
        cache.iter().find(|(o, _)| o == ord).map(|(_, b)| b.clone())
    }

    /// Reduced Groebner basis; requires a global order.
    pub fn groebner_basis(&self, ord: &MonomialOrder, limits: &Limits) -> Result<Arc<Vec<Polynomial>>> {
        if !ord.is_global() {
            return Err(Error::InvalidInput("groebner_basis requires a global order".into()));
        }
        self.basis(ord, limits)
    }

    /// Standard basis via Mora's weak normal form; requires the local order.
    pub fn standard_basis(&self, ord: &MonomialOrder, limits: &Limits) -> Result<Arc<Vec<Polynomial>>> {
        if !ord.is_local() {
            return Err(Error::InvalidInput("standard_basis requires the local order".into()));
        }
        self.basis(ord, limits)
    }

    /// Normal form of `p` against the basis cached under `ord`. The basis
    /// must already be cached.
    pub fn normal_form(&self, p: &Polynomial, ord: &MonomialOrder, limits: &Limits) -> Result<Polynomial> {
        let Some(b) = self.cached_basis(ord) else {
            return Err(Error::MissingBasis);
        };
        let mut budget = Budget::new(limits);
        basis::normal_form(p, &b, ord, &mut budget)
    }

    /// Membership of `p` in the ideal (global) or its localization at the
    /// origin (local), depending on the order kind.
    pub fn contains(&self, p: &Polynomial, ord: &MonomialOrder, limits: &Limits) -> Result<bool> {
        let b = self.basis(ord, limits)?;
        let mut budget = Budget::new(limits);
        Ok(basis::normal_form(p, &b, ord, &mut budget)?.is_zero())
    }

    /// Ideal quotient `I : g`, via the elimination construction
    /// `I ∩ <g> = (t·I + (1-t)·<g>) ∩ R` followed by exact division by `g`.
    pub fn quotient(&self, g: &Polynomial, limits: &Limits) -> Result<Ideal> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::InvalidInput("quotient by the zero polynomial".into()));
        }
        if self.is_zero_ideal() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let meet = self.intersect_principal(g, limits)?;
        let ord = MonomialOrder::degrevlex();
        let mut quotient_gens = Vec::new();
        for h in meet {
            match div_exact(&h, g, &ord) {
                Some(q) => quotient_gens.push(q),
                None => {
                    return Err(Error::InternalInconsistency(
                        "intersection element not divisible in ideal quotient".into(),
                    ))
                }
            }
        }
        if quotient_gens.is_empty() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        Ideal::new(self.ring.clone(), quotient_gens)
    }

    /// Generators of `I ∩ <g>`.
    fn intersect_principal(&self, g: &Polynomial, limits: &Limits) -> Result<Vec<Polynomial>> {
        let mut rhs_gens = self.gens.clone();
        rhs_gens.retain(|p| !p.is_zero());
        elimination_intersection(&self.ring, &rhs_gens, std::slice::from_ref(g), limits)
    }

    /// Ideal intersection via the same elimination construction.
    pub fn intersect(&self, other: &Ideal, limits: &Limits) -> Result<Ideal> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        let mut a = self.gens.clone();
        a.retain(|p| !p.is_zero());
        let mut b = other.gens.clone();
        b.retain(|p| !p.is_zero());
        if a.is_empty() || b.is_empty() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let gens = elimination_intersection(&self.ring, &a, &b, limits)?;
        if gens.is_empty() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// Quotient by a whole ideal: `I : J = ∩_i (I : g_i)`.
    pub fn quotient_ideal(&self, j: &Ideal, limits: &Limits) -> Result<Ideal> {
        let gens: Vec<&Polynomial> = j.gens.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::InvalidInput("quotient by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for g in gens {
            let q = self.quotient(g, limits)?;
            acc = Some(match acc {
                None => q,
                Some(prev) => prev.intersect(&q, limits)?,
            });
        }
        Ok(acc.expect("at least one generator"))
    }

    /// Saturation `I : J^∞`, computed by iterating `I : J, I : J^2, ...`
    /// until two consecutive results generate the same ideal. Removes the
    /// primary components whose support lies in `V(J)`.
    pub fn saturation(&self, j: &Ideal, limits: &Limits) -> Result<Ideal> {
        if j.is_zero_ideal() {
            return Err(Error::InvalidInput("saturation by the zero ideal".into()));
        }
        let ord = MonomialOrder::degrevlex();
        let mut current = self.clone();
        for _round in 0..64 {
            let next = current.quotient_ideal(j, limits)?;
            // Quotients only grow, so stabilization is next ⊆ current.
            if next.contained_in(&current, &ord, limits)? {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::ResourceLimit("saturation did not stabilize within 64 rounds".into()))
    }

    /// Every generator of `self` lies in `other`.
    pub fn contained_in(&self, other: &Ideal, ord: &MonomialOrder, limits: &Limits) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g, ord, limits)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mutual membership under `ord`.
    pub fn same_ideal(&self, other: &Ideal, ord: &MonomialOrder, limits: &Limits) -> Result<bool> {
        Ok(self.contained_in(other, ord, limits)? && other.contained_in(self, ord, limits)?)
    }

    /// Dimension of the quotient modulo the leading-term ideal, computed
    /// combinatorially: the largest size of a variable subset S such that no
    /// leading monomial is supported inside S. Returns -1 for the unit
    /// ideal. With the local order this is the dimension of the germ at the
    /// origin, since components missing the origin leave no trace in the
    /// local leading ideal.
    pub fn krull_dim(&self, ord: &MonomialOrder, limits: &Limits) -> Result<i64> {
        let basis = self.basis(ord, limits)?;
        let lms: Vec<Monomial> = basis
            .iter()
            .map(|g| g.leading_monomial(ord).expect("nonzero").clone())
            .collect();
        Ok(monomial_ideal_dimension(self.ring.nvars(), &lms))
    }

    /// `krull_dim` under the local order: the dimension at the origin.
    pub fn local_dim(&self, limits: &Limits) -> Result<i64> {
        self.krull_dim(&MonomialOrder::negdegrevlex(), limits)
    }

    /// Count of standard monomials of the local leading ideal when the germ
    /// at the origin is zero-dimensional.
    pub fn local_multiplicity(&self, limits: &Limits) -> Result<LocalMultiplicity> {
        let ord = MonomialOrder::negdegrevlex();
        let basis = self.standard_basis(&ord, limits)?;
        let lms: Vec<Monomial> = basis
            .iter()
            .map(|g| g.leading_monomial(&ord).expect("nonzero").clone())
            .collect();
        let n = self.ring.nvars();
        match monomial_ideal_dimension(n, &lms) {
            -1 => Ok(LocalMultiplicity::Finite(0)),
            0 => {
                let count = count_standard_monomials(n, &lms, limits)?;
                Ok(LocalMultiplicity::Finite(count))
            }
            _ => Ok(LocalMultiplicity::NotZeroDimensional),
        }
    }
}

/// Dimension of `R/<monomials>`: max |S| over variable subsets S meeting no
/// generator's support; -1 when some generator is 1 (unit ideal).
fn monomial_ideal_dimension(nvars: usize, lms: &[Monomial]) -> i64 {
    if lms.iter().any(|m| m.is_one()) {
        return -1;
    }
    assert!(nvars <= 24, "combinatorial dimension limited to 24 variables");
    let supports: Vec<u32> = lms
        .iter()
        .map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i)))
        .collect();
    let mut best: i64 = -1;
    for subset in 0u32..(1 << nvars) {
        if supports.iter().any(|s| s & !subset == 0) {
            continue;
        }
        best = best.max(i64::from(subset.count_ones()));
    }
    best
}

/// Enumerates monomials outside the staircase of `lms`; callers guarantee
/// the staircase is finite.
fn count_standard_monomials(nvars: usize, lms: &[Monomial], limits: &Limits) -> Result<u64> {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut queue: Vec<Monomial> = vec![Monomial::one(nvars)];
    while let Some(m) = queue.pop() {
        if seen.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
            continue;
        }
        if seen.len() as u64 >= limits.max_steps {
            return Err(Error::ResourceLimit("standard monomial count exceeds step budget".into()));
        }
        seen.insert(m.clone());
        for i in 0..nvars {
            let mut exps = m.exponents().to_vec();
            exps[i] += 1;
            queue.push(Monomial::new(exps));
        }
    }
    Ok(seen.len() as u64)
}

/// Exact multivariate division: returns `p / g` when `g` divides `p`.
pub(crate) fn div_exact(p: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Option<Polynomial> {
    let mut h = p.clone();
    let mut quotient = p.ring().zero();
    let (gm, gc) = g.leading_term(ord)?;
    while !h.is_zero() {
        let (hm, hc) = h.leading_term(ord).expect("nonzero");
        let shift = gm.div_into(hm)?;
        let coeff = hc / gc;
        quotient.add_term(shift.clone(), coeff.clone());
        h = h.add_scaled_shifted(&-coeff, &shift, g);
    }
    Some(quotient)
}

/// Generators of `<A> ∩ <B>` via `(t·A + (1-t)·B) ∩ R` with a fresh
/// elimination variable in front.
fn elimination_intersection(
    ring: &PolyRing,
    a: &[Polynomial],
    b: &[Polynomial],
    limits: &Limits,
) -> Result<Vec<Polynomial>> {
    let mut aux = "t_".to_string();
    while ring.vars().iter().any(|v| v == &aux) {
        aux.push('_');
    }
    let mut vars: Vec<String> = vec![aux];
    vars.extend(ring.vars().iter().cloned());
    let big = PolyRing::new(vars)?;
    let t = big.var(0);
    let one_minus_t = big.one().checked_sub(&t)?;

    let mut gens = Vec::new();
    for p in a {
        gens.push(t.checked_mul(&lift(&big, p))?);
    }
    for p in b {
        gens.push(one_minus_t.checked_mul(&lift(&big, p))?);
    }
    let ord = MonomialOrder::elim_first();
    let mut budget = Budget::new(limits);
    let basis = basis::compute_basis(&gens, &ord, &mut budget)?;
    let mut out = Vec::new();
    for g in basis {
        if g.terms().all(|(m, _)| m.exp(0) == 0) {
            out.push(project(ring, &g));
        }
    }
    Ok(out)
}

fn lift(big: &PolyRing, p: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        big,
        p.terms().map(|(m, c)| {
            let mut exps = vec![0u32];
            exps.extend_from_slice(m.exponents());
            (Monomial::new(exps), c.clone())
        }),
    )
}

fn project(ring: &PolyRing, p: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        ring,
        p.terms().map(|(m, c)| {
            debug_assert_eq!(m.exp(0), 0);
            (Monomial::new(m.exponents()[1..].to_vec()), c.clone())
        }),
    )
}

/// Convenience: the ideal generated by the first `k` coordinate functions,
/// the linear slice `V(z_0, ..., z_{k-1})`.
pub fn coordinate_slice(ring: &PolyRing, k: usize) -> Vec<Polynomial> {
    (0..k).map(|i| ring.var(i)).collect()
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

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn reduced_basis_examples() {
        let ord = MonomialOrder::degrevlex();
        let i = ideal(&["x", "y"], &["x", "y"]);
        let b = i.groebner_basis(&ord, &limits()).unwrap();
        assert_eq!(b.len(), 2);

        let j = ideal(&["x", "y"], &["x + y", "x - y"]);
        let bj = j.groebner_basis(&ord, &limits()).unwrap();
        let ring = j.ring().clone();
        assert_eq!(
            bj.as_slice(),
            &[
                parse_polynomial("y", &ring).unwrap(),
                parse_polynomial("x", &ring).unwrap()
            ]
        );
    }

    #[test]
    fn basis_is_cached_once() {
        let ord = MonomialOrder::degrevlex();
        let i = ideal(&["x", "y"], &["x^2 + y", "y^2"]);
        assert!(i.cached_basis(&ord).is_none());
        let b1 = i.basis(&ord, &limits()).unwrap();
        let b2 = i.basis(&ord, &limits()).unwrap();
        assert!(Arc::ptr_eq(&b1, &b2));
    }

    #[test]
    fn normal_form_requires_cached_basis() {
        let ord = MonomialOrder::degrevlex();
        let i = ideal(&["x", "y"], &["x"]);
        let p = parse_polynomial("x^2", i.ring()).unwrap();
        assert!(matches!(i.normal_form(&p, &ord, &limits()), Err(Error::MissingBasis)));
        i.basis(&ord, &limits()).unwrap();
        assert!(i.normal_form(&p, &ord, &limits()).unwrap().is_zero());
        let q = parse_polynomial("y", i.ring()).unwrap();
        assert_eq!(i.normal_form(&q, &ord, &limits()).unwrap(), q);
    }

    #[test]
    fn normal_form_of_generator_sum() {
        let ord = MonomialOrder::degrevlex();
        let i = ideal(&["x", "y"], &["x^2", "y"]);
        i.basis(&ord, &limits()).unwrap();
        let p = parse_polynomial("x^2 + y", i.ring()).unwrap();
        assert!(i.normal_form(&p, &ord, &limits()).unwrap().is_zero());
    }

    #[test]
    fn monomial_quotients() {
        let i = ideal(&["x", "y", "z"], &["x*y"]);
        let x = parse_polynomial("x", i.ring()).unwrap();
        let q = i.quotient(&x, &limits()).unwrap();
        let expected = ideal(&["x", "y", "z"], &["y"]);
        assert!(q.same_ideal(&expected, &MonomialOrder::degrevlex(), &limits()).unwrap());

        let i2 = ideal(&["x", "y"], &["x^2"]);
        let q2 = i2.quotient(&parse_polynomial("x", i2.ring()).unwrap(), &limits()).unwrap();
        let expected2 = ideal(&["x", "y"], &["x"]);
        assert!(q2.same_ideal(&expected2, &MonomialOrder::degrevlex(), &limits()).unwrap());

        let i3 = ideal(&["x", "y", "z"], &["x*y", "x*z"]);
        let q3 = i3.quotient(&parse_polynomial("x", i3.ring()).unwrap(), &limits()).unwrap();
        let expected3 = ideal(&["x", "y", "z"], &["y", "z"]);
        assert!(q3.same_ideal(&expected3, &MonomialOrder::degrevlex(), &limits()).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let ord = MonomialOrder::degrevlex();
        let i = ideal(&["x", "y", "z"], &["x*y", "x*z"]);
        let by = ideal(&["x", "y", "z"], &["x"]);
        let s = i.saturation(&by, &limits()).unwrap();
        assert!(s.same_ideal(&ideal(&["x", "y", "z"], &["y", "z"]), &ord, &limits()).unwrap());

        let i2 = ideal(&["x", "y"], &["x^2*y"]);
        let s2 = i2
            .saturation(&ideal(&["x", "y"], &["x"]), &limits())
            .unwrap();
        assert!(s2.same_ideal(&ideal(&["x", "y"], &["y"]), &ord, &limits()).unwrap());

        // The unit ideal is a fixed point: saturating it changes nothing,
        // and V(1) is empty so saturating by it removes no component.
        let unit = ideal(&["x", "y"], &["1"]);
        let s3 = unit.saturation(&ideal(&["x", "y"], &["x"]), &limits()).unwrap();
        assert!(s3.same_ideal(&unit, &ord, &limits()).unwrap());
        let cube = ideal(&["x", "y"], &["x^3"]);
        let s4 = cube.saturation(&unit, &limits()).unwrap();
        assert!(s4.same_ideal(&cube, &ord, &limits()).unwrap());
    }

    #[test]
    fn saturation_is_idempotent_and_monotone() {
        let ord = MonomialOrder::degrevlex();
        let i = ideal(&["x", "y"], &["x^3*y^2 - x^2*y^3", "x^4"]);
        let j = ideal(&["x", "y"], &["x", "y^2"]);
        let once = i.saturation(&j, &limits()).unwrap();
        assert!(i.contained_in(&once, &ord, &limits()).unwrap());
        let twice = once.saturation(&j, &limits()).unwrap();
        assert!(once.same_ideal(&twice, &ord, &limits()).unwrap());
    }

    #[test]
    fn krull_dim_examples() {
        let ord = MonomialOrder::negdegrevlex();
        let i = ideal(&["t", "x", "y"], &["x", "y"]);
        assert_eq!(i.krull_dim(&ord, &limits()).unwrap(), 1);

        let i5 = ideal(&["u", "v", "w", "x", "y"], &["x", "y"]);
        assert_eq!(i5.krull_dim(&ord, &limits()).unwrap(), 3);

        let unit = ideal(&["x", "y"], &["1"]);
        assert_eq!(unit.krull_dim(&ord, &limits()).unwrap(), -1);

        let zero = Ideal::zero(PolyRing::new(vec!["x", "y"]).unwrap());
        assert_eq!(zero.krull_dim(&ord, &limits()).unwrap(), 2);
    }

    #[test]
    fn local_dim_sees_only_the_origin() {
        // x^2 - x = x(x - 1): only the branch through the origin counts.
        let i = ideal(&["x", "y"], &["x^2 - x", "y"]);
        assert_eq!(i.local_dim(&limits()).unwrap(), 0);
        assert_eq!(i.local_multiplicity(&limits()).unwrap(), LocalMultiplicity::Finite(1));
    }

    #[test]
    fn local_multiplicity_examples() {
        let i = ideal(&["x", "y"], &["-3*x^2", "2*y"]);
        assert_eq!(i.local_multiplicity(&limits()).unwrap(), LocalMultiplicity::Finite(2));

        let box15 = ideal(&["x", "y"], &["x^5", "y^3"]);
        assert_eq!(box15.local_multiplicity(&limits()).unwrap(), LocalMultiplicity::Finite(15));

        let line = ideal(&["t", "x", "y"], &["x", "y"]);
        assert_eq!(
            line.local_multiplicity(&limits()).unwrap(),
            LocalMultiplicity::NotZeroDimensional
        );

        let unit = ideal(&["x", "y"], &["1 + x"]);
        assert_eq!(unit.local_multiplicity(&limits()).unwrap(), LocalMultiplicity::Finite(0));
    }

    #[test]
    fn cached_basis_generates_same_ideal() {
        let ord = MonomialOrder::degrevlex();
        let i = ideal(&["x", "y"], &["x^2 + y^3", "x*y - x"]);
        let b = i.groebner_basis(&ord, &limits()).unwrap();
        let as_ideal = Ideal::new(i.ring().clone(), b.as_ref().clone()).unwrap();
        assert!(i.same_ideal(&as_ideal, &ord, &limits()).unwrap());
    }

    #[test]
    fn exact_division() {
        let ring = PolyRing::new(vec!["x", "y"]).unwrap();
        let p = parse_polynomial("x^2*y - y^3", &ring).unwrap();
        let g = parse_polynomial("x - y", &ring).unwrap();
        let ord = MonomialOrder::degrevlex();
        let q = div_exact(&p, &g, &ord).unwrap();
        assert_eq!(q.checked_mul(&g).unwrap(), p);
        assert!(div_exact(&parse_polynomial("x^2 + 1", &ring).unwrap(), &g, &ord).is_none());
    }
}
