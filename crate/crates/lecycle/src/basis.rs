//! Reduction engines: Buchberger's algorithm for global orders and the
//! standard-basis variant using Mora's weak normal form for the local
//! order.
//!
//! Inside the basis loop every polynomial is kept integer-primitive
//! (integral coefficients, content 1, positive leading coefficient); the
//! public normal forms never rescale, so `p - normal_form(p)` stays in the
//! ideal.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::Limits;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// Per-call budget derived from [`Limits`]. Exhausting any cap is a hard
/// error, never a silent wrong answer.
pub(crate) struct Budget {
    steps_left: u64,
    max_degree: u32,
    max_basis: usize,
}

impl Budget {
    pub(crate) fn new(limits: &Limits) -> Budget {
        Budget {
            steps_left: limits.max_steps,
            max_degree: limits.max_degree,
            max_basis: limits.max_basis,
        }
    }

    pub(crate) fn step(&mut self) -> Result<()> {
        if self.steps_left == 0 {
            return Err(Error::ResourceLimit("reduction step budget exhausted".into()));
        }
        self.steps_left -= 1;
        Ok(())
    }

    pub(crate) fn check_degree(&self, p: &Polynomial) -> Result<()> {
        let d = p.total_degree();
        if d > self.max_degree {
            return Err(Error::ResourceLimit(format!(
                "intermediate total degree {d} exceeds cap {}",
                self.max_degree
            )));
        }
        Ok(())
    }

    fn check_basis(&self, len: usize) -> Result<()> {
        if len > self.max_basis {
            return Err(Error::ResourceLimit(format!(
                "basis size {len} exceeds cap {}",
                self.max_basis
            )));
        }
        Ok(())
    }
}

fn monic(p: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    match p.leading_term(ord) {
        Some((_, c)) => {
            let inv = BigRational::one() / c.clone();
            p.scale(&inv)
        }
        None => p.clone(),
    }
}

/// Rescales to integral coefficients with content 1 and positive leading
/// coefficient. A no-op on zero.
fn primitive(p: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let mut denom_lcm = BigInt::one();
    for (_, c) in p.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut content = BigInt::zero();
    for (_, c) in p.terms() {
        let scaled = c * BigRational::from_integer(denom_lcm.clone());
        content = content.gcd(&scaled.to_integer());
    }
    if content.is_zero() {
        content = BigInt::one();
    }
    let mut factor = BigRational::new(denom_lcm, content);
    if p.leading_term(ord).expect("nonzero").1.is_negative() {
        factor = -factor;
    }
    p.scale(&factor)
}

/// S-polynomial, integer-primitive when the inputs are.
fn s_poly(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let (lm_f, lc_f) = f.leading_term(ord).expect("nonzero");
    let (lm_g, lc_g) = g.leading_term(ord).expect("nonzero");
    let lcm = lm_f.lcm(lm_g);
    let uf = lm_f.div_into(&lcm).expect("lcm divisible");
    let ug = lm_g.div_into(&lcm).expect("lcm divisible");
    let zero = f.ring().zero();
    let a = zero.add_scaled_shifted(lc_g, &uf, f);
    a.add_scaled_shifted(&-lc_f.clone(), &ug, g)
}

/// Full reduction for global orders. Reducer choice is first match in
/// basis order, which keeps outputs deterministic. With `rescale` the
/// running pair (remainder, tail) is kept integer-primitive, which is only
/// valid where results matter up to a scalar.
fn reduce_global(
    p: &Polynomial,
    basis: &[Polynomial],
    ord: &MonomialOrder,
    budget: &mut Budget,
    rescale: bool,
) -> Result<Polynomial> {
    debug_assert!(ord.is_global());
    let mut remainder = p.ring().zero();
    let mut h = p.clone();
    'outer: while !h.is_zero() {
        let (lm, lc) = {
            let (m, c) = h.leading_term(ord).expect("nonzero");
            (m.clone(), c.clone())
        };
        for g in basis {
            if let Some((gm, gc)) = g.leading_term(ord) {
                if let Some(shift) = gm.div_into(&lm) {
                    budget.step()?;
                    if rescale {
                        // h <- gc*h - lc*shift*g, then strip joint content.
                        h = h.scale(gc).add_scaled_shifted(&-lc.clone(), &shift, g);
                        remainder = remainder.scale(gc);
                        let joint = remainder.checked_add(&h)?;
                        if !joint.is_zero() {
                            let prim = primitive(&joint, ord);
                            if let (Some((_, a)), Some((_, b))) =
                                (joint.leading_term(ord), prim.leading_term(ord))
                            {
                                let factor = b / a;
                                h = h.scale(&factor);
                                remainder = remainder.scale(&factor);
                            }
                        }
                    } else {
                        let coeff = -&lc / gc;
                        h = h.add_scaled_shifted(&coeff, &shift, g);
                    }
                    budget.check_degree(&h)?;
                    continue 'outer;
                }
            }
        }
        // Leading term irreducible: move it to the remainder.
        let (lm, lc) = {
            let (m, c) = h.leading_term(ord).expect("nonzero");
            (m.clone(), c.clone())
        };
        remainder.add_term(lm.clone(), lc.clone());
        h.add_term(lm, -lc);
    }
    Ok(remainder)
}

/// Mora's weak normal form for the local order. Only the leading term of
/// the result is guaranteed outside the leading ideal; full tail reduction
/// need not terminate locally. Intermediate results join the reducer pool,
/// and among applicable reducers one of minimal ecart is chosen (ties by
/// insertion order), which is what guarantees termination.
fn mora_weak_nf(
    p: &Polynomial,
    basis: &[Polynomial],
    ord: &MonomialOrder,
    budget: &mut Budget,
    rescale: bool,
) -> Result<Polynomial> {
    let ecart = |q: &Polynomial| -> u32 {
        let lead_deg = q.leading_monomial(ord).map(|m| m.degree()).unwrap_or(0);
        q.total_degree() - lead_deg
    };
    let mut pool: Vec<Polynomial> = basis.to_vec();
    let mut h = p.clone();
    loop {
        if h.is_zero() {
            return Ok(h);
        }
        let lm_h = h.leading_monomial(ord).expect("nonzero").clone();
        let mut best: Option<(u32, usize)> = None;
        for (i, g) in pool.iter().enumerate() {
            if let Some(gm) = g.leading_monomial(ord) {
                if gm.divides(&lm_h) {
                    let e = ecart(g);
                    if best.map_or(true, |(be, _)| e < be) {
                        best = Some((e, i));
                    }
                }
            }
        }
        let Some((e_g, idx)) = best else {
            return Ok(h);
        };
        budget.step()?;
        if e_g > ecart(&h) {
            pool.push(h.clone());
        }
        let g = &pool[idx];
        let (gm, gc) = g.leading_term(ord).expect("nonzero");
        let shift = gm.div_into(&lm_h).expect("divides");
        let lc_h = h.leading_term(ord).expect("nonzero").1.clone();
        if rescale {
            h = h.scale(gc).add_scaled_shifted(&-lc_h, &shift, g);
            h = primitive(&h, ord);
        } else {
            let coeff = -lc_h / gc.clone();
            h = h.add_scaled_shifted(&coeff, &shift, g);
        }
        budget.check_degree(&h)?;
    }
}

/// Normal form dispatched on the order kind; exact, never rescaled.
pub(crate) fn normal_form(
    p: &Polynomial,
    basis: &[Polynomial],
    ord: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Polynomial> {
    if ord.is_global() {
        reduce_global(p, basis, ord, budget, false)
    } else {
        mora_weak_nf(p, basis, ord, budget, false)
    }
}

fn reduce_for_basis(
    p: &Polynomial,
    basis: &[Polynomial],
    ord: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Polynomial> {
    if ord.is_global() {
        reduce_global(p, basis, ord, budget, true)
    } else {
        mora_weak_nf(p, basis, ord, budget, true)
    }
}

/// Buchberger loop shared by both basis kinds; the reduction routine is
/// the only difference. Returns a minimal basis, sorted by ascending
/// leading monomial. With `reduced` (global orders only) the tails are
/// inter-reduced and the result is monic: the unique reduced Groebner
/// basis of the ideal.
pub(crate) fn compute_basis_opts(
    gens: &[Polynomial],
    ord: &MonomialOrder,
    budget: &mut Budget,
    reduced: bool,
) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            budget.check_degree(g)?;
            basis.push(primitive(g, ord));
        }
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    // Pair queue keyed by lcm total degree for a deterministic normal
    // selection strategy; `handled` backs the chain criterion.
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut handled: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lm = |basis: &[Polynomial], i: usize| -> Monomial {
        basis[i].leading_monomial(ord).expect("nonzero").clone()
    };
    let enqueue = |pairs: &mut BTreeSet<(u32, usize, usize)>,
                   handled: &mut BTreeSet<(usize, usize)>,
                   basis: &[Polynomial],
                   j: usize| {
        let lm_j = basis[j].leading_monomial(ord).expect("nonzero").clone();
        for i in 0..j {
            let lm_i = basis[i].leading_monomial(ord).expect("nonzero");
            // Product criterion: coprime leading monomials reduce to zero.
            if lm_i.coprime(&lm_j) {
                handled.insert((i, j));
                continue;
            }
            pairs.insert((lm_i.lcm(&lm_j).degree(), i, j));
        }
    };
    for j in 0..basis.len() {
        enqueue(&mut pairs, &mut handled, &basis, j);
    }

    while let Some(&(deg, i, j)) = pairs.iter().next() {
        pairs.remove(&(deg, i, j));
        handled.insert((i, j));
        // Chain criterion: skip when some k divides the lcm and both
        // related pairs are already settled.
        let lcm_ij = lm(&basis, i).lcm(&lm(&basis, j));
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis, k).divides(&lcm_ij)
                && handled.contains(&(i.min(k), i.max(k)))
                && handled.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], ord);
        let reduced_s = reduce_for_basis(&s, &basis, ord, budget)?;
        if !reduced_s.is_zero() {
            basis.push(primitive(&reduced_s, ord));
            budget.check_basis(basis.len())?;
            enqueue(&mut pairs, &mut handled, &basis, basis.len() - 1);
        }
    }

    // Minimalize: drop members whose leading monomial is divisible by
    // another member's.
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(ord).expect("nonzero").clone())
        .collect();
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let dominated = lms
            .iter()
            .enumerate()
            .any(|(j, m)| j != i && m.divides(&lms[i]) && (m != &lms[i] || j < i));
        if !dominated {
            keep.push(g.clone());
        }
    }

    if reduced && ord.is_global() {
        // Tail-reduce each member against the others and normalize monic.
        let mut out: Vec<Polynomial> = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let others: Vec<Polynomial> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = reduce_global(&keep[i], &others, ord, budget, true)?;
            if !r.is_zero() {
                out.push(monic(&r, ord));
            }
        }
        keep = out;
    }

    keep.sort_by(|a, b| {
        ord.cmp(
            a.leading_monomial(ord).expect("nonzero"),
            b.leading_monomial(ord).expect("nonzero"),
        )
    });
    Ok(keep)
}

/// Canonical variant: reduced Groebner basis for global orders, minimal
/// standard basis for the local one.
pub(crate) fn compute_basis(
    gens: &[Polynomial],
    ord: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Vec<Polynomial>> {
    compute_basis_opts(gens, ord, budget, true)
}
