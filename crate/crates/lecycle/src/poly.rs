use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial ring over the rationals: an ordered list of variable names.
/// Cheap to clone; two rings are equal when their variable lists are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    vars: Arc<Vec<String>>,
}

impl PolyRing {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Result<PolyRing> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidInput("variable list must be non-empty".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidInput("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        Ok(PolyRing { vars: Arc::new(vars) })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(BigRational::one())
    }

    pub fn constant(&self, c: BigRational) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(self.nvars()), c);
        }
        Polynomial { ring: self.clone(), terms }
    }

    pub fn constant_i64(&self, c: i64) -> Polynomial {
        self.constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars(), "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(self.nvars(), i), BigRational::one());
        Polynomial { ring: self.clone(), terms }
    }

    pub fn monomial(&self, exps: &[u32], coeff: BigRational) -> Polynomial {
        assert_eq!(exps.len(), self.nvars());
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Monomial::new(exps.to_vec()), coeff);
        }
        Polynomial { ring: self.clone(), terms }
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
/// No stored coefficient is zero, so structural equality of the term maps
/// is equality of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn from_terms(
        ring: &PolyRing,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Polynomial {
        let mut p = ring.zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&Monomial::one(self.ring.nvars()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Maximum total degree over all terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Minimum total degree over all terms; 0 for the zero polynomial.
    pub fn min_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).min().unwrap_or(0)
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(mono.nvars(), self.ring.nvars());
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Leading term with respect to `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp(a, b))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        self.ring == other.ring
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.same_ring(other) {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.same_ring(other) {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.same_ring(other) {
            return Err(Error::RingMismatch);
        }
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `self + coeff * mono * other`, the workhorse of reduction loops.
    pub fn add_scaled_shifted(&self, coeff: &BigRational, mono: &Monomial, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.mul(mono), c * coeff);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = self.ring.one();
        for _ in 0..e {
            out = out.checked_mul(self).expect("same ring");
        }
        out
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, nvars: n });
        }
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                let mut exps = m.exponents().to_vec();
                exps[i] = e - 1;
                out.add_term(Monomial::new(exps), c * BigRational::from_integer(BigInt::from(e)));
            }
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ring.nvars() {
            return Err(Error::InvalidInput(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitutes `z_i -> sum_j M[i][j] z_j`.
    pub fn apply_shear(&self, shear: &ShearMatrix) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if shear.size() != n {
            return Err(Error::InvalidInput(format!(
                "shear matrix is {}x{}, ring has {} variables",
                shear.size(),
                shear.size(),
                n
            )));
        }
        // Images of the variables, then per-variable power tables up to the
        // largest exponent actually used.
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                let mut img = self.ring.zero();
                for j in 0..n {
                    let c = shear.entry(i, j);
                    if c != 0 {
                        img.add_term(Monomial::var(n, j), BigRational::from_integer(BigInt::from(c)));
                    }
                }
                img
            })
            .collect();
        let mut max_exp = vec![0u32; n];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut tbl = vec![self.ring.one()];
            for e in 1..=max_exp[i] {
                let next = tbl[(e - 1) as usize].checked_mul(&images[i])?;
                tbl.push(next);
            }
            powers.push(tbl);
        }
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let mut term = self.ring.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.checked_mul(&powers[i][e as usize])?;
                }
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Restriction to `V(z_i)`: drops every term divisible by `z_i` and
    /// removes the variable from the ring.
    pub fn eliminate_variable(&self, i: usize) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, nvars: n });
        }
        let mut vars: Vec<String> = self.ring.vars().to_vec();
        vars.remove(i);
        let small = PolyRing::new(vars)?;
        let mut out = small.zero();
        for (m, c) in &self.terms {
            if m.exp(i) == 0 {
                let mut exps = m.exponents().to_vec();
                exps.remove(i);
                out.add_term(Monomial::new(exps), c.clone());
            }
        }
        Ok(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

/// Canonical text form: terms sorted descending by degrevlex, explicit `*`
/// between factors, `^` for powers. Reparses to an equal polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let ord = MonomialOrder::degrevlex();
        let mut items: Vec<(&Monomial, &BigRational)> = self.terms.iter().collect();
        items.sort_by(|(a, _), (b, _)| ord.cmp(b, a));
        for (idx, (m, c)) in items.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.var_name(i).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_name(i), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Unimodular upper-triangular integer coordinate change with unit diagonal.
/// Applying it substitutes `z_i -> sum_j M[i][j] z_j`; the inverse is again
/// integral, so the change of coordinates is invertible over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShearMatrix {
    rows: Vec<Vec<i64>>,
    seed: Option<u64>,
}

impl ShearMatrix {
    pub fn identity(size: usize) -> ShearMatrix {
        let rows = (0..size)
            .map(|i| (0..size).map(|j| i64::from(i == j)).collect())
            .collect();
        ShearMatrix { rows, seed: None }
    }

    /// Builds from explicit rows; rejects anything that is not
    /// upper-triangular with 1s on the diagonal.
    pub fn from_rows(rows: Vec<Vec<i64>>, seed: Option<u64>) -> Result<ShearMatrix> {
        let size = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidInput("shear matrix must be square".into()));
            }
            if row[i] != 1 {
                return Err(Error::InvalidInput("shear diagonal entries must be 1".into()));
            }
            if row[..i].iter().any(|&e| e != 0) {
                return Err(Error::InvalidInput("shear matrix must be upper-triangular".into()));
            }
        }
        Ok(ShearMatrix { rows, seed })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &e)| e == i64::from(i == j)))
    }

    /// Exact integer inverse. M = I + N with N strictly upper-triangular,
    /// so the Neumann series I - N + N^2 - ... terminates.
    pub fn inverse(&self) -> ShearMatrix {
        let n = self.size();
        let mut inv = ShearMatrix::identity(n).rows;
        // Back-substitution, column by column.
        for col in 0..n {
            for row in (0..n).rev() {
                if row >= col {
                    continue;
                }
                let mut acc: i64 = 0;
                for k in (row + 1)..n {
                    acc += self.rows[row][k] * inv[k][col];
                }
                inv[row][col] = i64::from(row == col) - acc;
            }
        }
        for (i, row) in inv.iter().enumerate() {
            debug_assert_eq!(row[i], 1);
        }
        ShearMatrix { rows: inv, seed: None }
    }
}
