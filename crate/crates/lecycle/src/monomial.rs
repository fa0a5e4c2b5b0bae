use std::cmp::Ordering;

/// Exponent vector of a single monomial. One slot per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if divisible.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: other
                    .exps
                    .iter()
                    .zip(&self.exps)
                    .map(|(b, a)| b - a)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables appearing with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

/// The comparison rule backing every basis computation.
///
/// The two `*RevLex` kinds compare total degree first (ascending for the
/// global kind, descending for the local one) and break ties by reverse
/// lexicographic comparison on the variable sequence. `Lex` is plain
/// lexicographic. `ElimFirst` sorts on the exponent of variable 0 before
/// falling back to degrevlex on the remaining variables; it is the
/// elimination order used internally by ideal quotients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrderKind {
    /// Global: degree, then reverse lexicographic. 1 is smallest.
    DegRevLex,
    /// Local: smaller degree is larger, revlex tie-break. 1 is largest
    /// among the monomials of each ray, as standard bases at the origin
    /// require.
    NegDegRevLex,
    /// Global lexicographic.
    Lex,
    /// Global elimination order for the first variable.
    ElimFirst,
}

/// A monomial order: a kind plus an optional variable significance
/// permutation. `perm[0]` is the most significant variable index; `None`
/// means the ring's natural order `z0 > z1 > ... > zn`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub perm: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        MonomialOrder { kind: OrderKind::DegRevLex, perm: None }
    }

    pub fn negdegrevlex() -> Self {
        MonomialOrder { kind: OrderKind::NegDegRevLex, perm: None }
    }

    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: None }
    }

    pub fn lex_permuted(perm: Vec<usize>) -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: Some(perm) }
    }

    pub(crate) fn elim_first() -> Self {
        MonomialOrder { kind: OrderKind::ElimFirst, perm: None }
    }

    pub fn is_global(&self) -> bool {
        !matches!(self.kind, OrderKind::NegDegRevLex)
    }

    pub fn is_local(&self) -> bool {
        matches!(self.kind, OrderKind::NegDegRevLex)
    }

    /// Compares monomials; `Greater` means `a` comes before `b` (larger).
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self.kind {
            OrderKind::DegRevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => self.revlex_tie(a, b),
                ord => ord,
            },
            OrderKind::NegDegRevLex => match b.degree().cmp(&a.degree()) {
                Ordering::Equal => self.revlex_tie(a, b),
                ord => ord,
            },
            OrderKind::Lex => {
                for i in self.significance(a.nvars()) {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderKind::ElimFirst => match a.exp(0).cmp(&b.exp(0)) {
                Ordering::Equal => {
                    let da: u32 = a.exponents()[1..].iter().sum();
                    let db: u32 = b.exponents()[1..].iter().sum();
                    match da.cmp(&db) {
                        Ordering::Equal => self.revlex_tie(a, b),
                        ord => ord,
                    }
                }
                ord => ord,
            },
        }
    }

    /// Reverse lexicographic tie-break: scanning from the least significant
    /// variable, the first difference decides and the smaller exponent wins.
    fn revlex_tie(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let sig: Vec<usize> = self.significance(a.nvars()).collect();
        for &i in sig.iter().rev() {
            match a.exp(i).cmp(&b.exp(i)) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    fn significance(&self, nvars: usize) -> impl Iterator<Item = usize> + '_ {
        (0..nvars).map(move |i| match &self.perm {
            Some(p) => p[i],
            None => i,
        })
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_degree_three_chain() {
        // x > y > z; known chain: x^2*y > x*y^2 > x^2*z > x*y*z.
        let ord = MonomialOrder::degrevlex();
        let chain = [
            m(&[3, 0, 0]),
            m(&[2, 1, 0]),
            m(&[1, 2, 0]),
            m(&[0, 3, 0]),
            m(&[2, 0, 1]),
            m(&[1, 1, 1]),
            m(&[0, 2, 1]),
            m(&[1, 0, 2]),
            m(&[0, 1, 2]),
            m(&[0, 0, 3]),
        ];
        for w in chain.windows(2) {
            assert_eq!(ord.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn local_order_ranks_one_largest() {
        let ord = MonomialOrder::negdegrevlex();
        let one = m(&[0, 0]);
        assert_eq!(ord.cmp(&one, &m(&[1, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        // Same-degree tie-break agrees with the global kind.
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn lex_with_permutation() {
        // lex(z > y > x) on ring (x, y, z): permutation [2, 1, 0].
        let ord = MonomialOrder::lex_permuted(vec![2, 1, 0]);
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 1, 0]), &m(&[9, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn elim_order_isolates_first_variable() {
        let ord = MonomialOrder::elim_first();
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 7, 7])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lcm_and_divisibility() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert!(m(&[1, 1]).divides(&m(&[2, 1])));
        assert!(!m(&[1, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[1, 0]).div_into(&m(&[2, 1])), Some(m(&[1, 1])));
        assert!(m(&[0, 2]).div_into(&m(&[2, 1])).is_none());
        assert!(m(&[1, 0]).coprime(&m(&[0, 2])));
        assert!(!m(&[1, 1]).coprime(&m(&[0, 2])));
    }
}
