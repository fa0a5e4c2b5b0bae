//! Finitely generated abelian groups in invariant-factor form, reduced
//! homology profiles, and the join formula
//!
//! ```text
//! H~_{j+1}(X*Y) = ⊕_{k+l=j} H~_k(X) ⊗ H~_l(Y)  ⊕  ⊕_{k+l=j-1} Tor(H~_k(X), H~_l(Y))
//! ```
//!
//! with integer coefficients throughout.

use std::collections::BTreeMap;
use std::fmt;

/// `Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_m` with `d_1 | d_2 | ... | d_m`, each ≥ 2.
/// The invariant-factor chain is a unique canonical form, so derived
/// equality is group isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    rank: u64,
    torsion: Vec<u64>,
}

impl AbelianGroup {
    /// Canonicalizes an arbitrary list of cyclic orders into the invariant
    /// factor chain. Orders of 1 are dropped.
    pub fn new(rank: u64, torsion: impl IntoIterator<Item = u64>) -> AbelianGroup {
        // Split each order into prime powers, then rebuild: for each prime
        // align the powers from largest down; the j-th invariant factor is
        // the product of the j-th largest powers over all primes.
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for d in torsion {
            assert!(d >= 1, "cyclic order must be positive");
            for (p, e) in factorize(d) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        let mut slots: Vec<u64> = Vec::new();
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in exps.into_iter().enumerate() {
                if slots.len() <= i {
                    slots.push(1);
                }
                slots[i] *= p.pow(e);
            }
        }
        // slots[0] holds the largest factor; the chain wants ascending
        // divisibility.
        slots.reverse();
        AbelianGroup { rank, torsion: slots }
    }

    pub fn zero() -> AbelianGroup {
        AbelianGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: u64) -> AbelianGroup {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn cyclic(d: u64) -> AbelianGroup {
        AbelianGroup::new(0, [d])
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        AbelianGroup::new(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).copied(),
        )
    }

    /// `(Z^a ⊕ ⊕ Z/d_i) ⊗ (Z^b ⊕ ⊕ Z/e_j)`: free part of rank ab, plus
    /// each torsion factor copied by the other free rank, plus
    /// `Z/gcd(d_i, e_j)` for every pair.
    pub fn tensor(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut torsion: Vec<u64> = Vec::new();
        for &d in &self.torsion {
            for _ in 0..other.rank {
                torsion.push(d);
            }
        }
        for &e in &other.torsion {
            for _ in 0..self.rank {
                torsion.push(e);
            }
        }
        for &d in &self.torsion {
            for &e in &other.torsion {
                torsion.push(gcd(d, e));
            }
        }
        AbelianGroup::new(self.rank * other.rank, torsion)
    }

    /// `Tor(A, B)`: free parts contribute nothing; each torsion pair
    /// contributes `Z/gcd(d_i, e_j)`.
    pub fn tor(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut torsion: Vec<u64> = Vec::new();
        for &d in &self.torsion {
            for &e in &other.torsion {
                torsion.push(gcd(d, e));
            }
        }
        AbelianGroup::new(0, torsion)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        for &d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factorize(mut d: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            let mut e = 0;
            while d % p == 0 {
                d /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if d > 1 {
        out.push((d, 1));
    }
    out
}

/// Reduced homology as a finitely supported map degree -> group. Degrees
/// are absolute; every unlisted degree is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyProfile {
    groups: BTreeMap<i64, AbelianGroup>,
}

impl HomologyProfile {
    pub fn zero() -> HomologyProfile {
        HomologyProfile::default()
    }

    pub fn with_group(mut self, degree: i64, group: AbelianGroup) -> HomologyProfile {
        self.add(degree, group);
        self
    }

    /// The reduced homology of a bouquet of `count` `degree`-spheres.
    pub fn sphere_bouquet(degree: i64, count: u64) -> HomologyProfile {
        HomologyProfile::zero().with_group(degree, AbelianGroup::free(count))
    }

    pub fn add(&mut self, degree: i64, group: AbelianGroup) {
        if group.is_zero() {
            return;
        }
        let entry = self.groups.entry(degree).or_insert_with(AbelianGroup::zero);
        *entry = entry.direct_sum(&group);
    }

    pub fn group_at(&self, degree: i64) -> AbelianGroup {
        self.groups.get(&degree).cloned().unwrap_or_else(AbelianGroup::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &AbelianGroup)> {
        self.groups.iter().map(|(&d, g)| (d, g))
    }

    /// Degrees with non-zero groups.
    pub fn support(&self) -> Vec<i64> {
        self.groups.keys().copied().collect()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "trivial");
        }
        let mut first = true;
        for (d, g) in &self.groups {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "H~_{d} = {g}")?;
            first = false;
        }
        Ok(())
    }
}

/// Reduced homology of the join `X * Y` from the profiles of X and Y.
pub fn join_homology(a: &HomologyProfile, b: &HomologyProfile) -> HomologyProfile {
    let mut out = HomologyProfile::zero();
    for (k, ga) in a.iter() {
        for (l, gb) in b.iter() {
            // Tensor terms land in degree k+l+1, Tor terms one higher.
            out.add(k + l + 1, ga.tensor(gb));
            out.add(k + l + 2, ga.tor(gb));
        }
    }
    out
}
