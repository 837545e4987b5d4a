//! Number theory for cyclic groups `Z_n`.
//!
//! Elements of `Z_n` are the residues `0..n` under addition, with `0` as the
//! identity. There is exactly one subgroup per divisor of `n`, so subgroups
//! are identified with their orders throughout the crate.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest group order accepted anywhere in the crate.
pub const MAX_GROUP_ORDER: u64 = 1_000_000;

/// A prime power `p^e` in a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

/// The cyclic group `Z_n` together with the prime factorization of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicGroupSpec {
    order: u64,
    factorization: Vec<PrimePower>,
}

impl CyclicGroupSpec {
    /// Builds `Z_n`, factorizing `n`. Orders above [`MAX_GROUP_ORDER`] are rejected.
    pub fn new(order: u64) -> Result<Self> {
        if order > MAX_GROUP_ORDER {
            return Err(Error::OrderTooLarge { order, cap: MAX_GROUP_ORDER });
        }
        let factorization = factorize(order)?;
        Ok(Self { order, factorization })
    }

    /// Builds a spec from an explicit factorization, validating every invariant.
    pub fn from_factorization(factorization: Vec<PrimePower>) -> Result<Self> {
        let mut order: u64 = 1;
        let mut previous = 1;
        for pp in &factorization {
            if pp.exponent == 0 {
                return Err(Error::InvalidSpec(format!("zero exponent on prime {}", pp.prime)));
            }
            if !is_prime(pp.prime) {
                return Err(Error::InvalidSpec(format!("{} is not prime", pp.prime)));
            }
            if pp.prime <= previous {
                return Err(Error::InvalidSpec("primes must be strictly ascending".into()));
            }
            previous = pp.prime;
            let power = pp.prime.checked_pow(pp.exponent).ok_or(Error::Overflow("group order"))?;
            order = order.checked_mul(power).ok_or(Error::Overflow("group order"))?;
        }
        if order > MAX_GROUP_ORDER {
            return Err(Error::OrderTooLarge { order, cap: MAX_GROUP_ORDER });
        }
        Ok(Self { order, factorization })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn factorization(&self) -> &[PrimePower] {
        &self.factorization
    }

    /// Number of subgroups, i.e. the number of divisors of the order.
    pub fn subgroup_count(&self) -> usize {
        self.factorization.iter().map(|pp| pp.exponent as usize + 1).product()
    }
}

impl fmt::Display for CyclicGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.order)
    }
}

/// The unique subgroup of `Z_n` of a given order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SubgroupDescriptor {
    pub subgroup_order: u64,
    pub index: u64,
}

/// Ascending prime-power factorization by trial division.
pub fn factorize(n: u64) -> Result<Vec<PrimePower>> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut rest = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut exponent = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                exponent += 1;
            }
            out.push(PrimePower { prime: p, exponent });
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push(PrimePower { prime: rest, exponent: 1 });
    }
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// One descriptor per subgroup, ascending by subgroup order.
///
/// Divisors are generated from exponent vectors over the factorization and
/// then sorted.
pub fn divisors(spec: &CyclicGroupSpec) -> Vec<SubgroupDescriptor> {
    let mut orders = vec![1u64];
    for pp in spec.factorization() {
        let mut next = Vec::with_capacity(orders.len() * (pp.exponent as usize + 1));
        for &d in &orders {
            let mut power = 1;
            for _ in 0..=pp.exponent {
                next.push(d * power);
                power *= pp.prime;
            }
        }
        orders = next;
    }
    orders.sort_unstable();
    orders.into_iter().map(|m| SubgroupDescriptor { subgroup_order: m, index: spec.order() / m }).collect()
}

/// Möbius function.
pub fn mobius(m: u64) -> i8 {
    if m == 0 {
        return 0;
    }
    let mut rest = m;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    sign
}

/// Second Jordan totient `J_2(m) = sum over d | m of mu(d) (m/d)^2`: the
/// number of ordered pairs generating `Z_m`.
pub fn jordan_totient_2(m: u64) -> Result<u128> {
    if m == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut total: i128 = 0;
    let mut d = 1u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            total = add_term(total, d, m / d)?;
            if d != m / d {
                total = add_term(total, m / d, d)?;
            }
        }
        d += 1;
    }
    u128::try_from(total).map_err(|_| Error::Overflow("jordan_totient_2"))
}

fn add_term(total: i128, d: u64, quotient: u64) -> Result<i128> {
    let mu = mobius(d);
    if mu == 0 {
        return Ok(total);
    }
    let square = i128::from(quotient).checked_mul(i128::from(quotient)).ok_or(Error::Overflow("jordan_totient_2"))?;
    let term = if mu > 0 { square } else { -square };
    total.checked_add(term).ok_or(Error::Overflow("jordan_totient_2"))
}

pub use num_integer::gcd;

/// Order of `<a, b>` in `Z_n`, which is `n / gcd(a, b, n)`.
pub fn generated_subgroup_order(a: u64, b: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    for element in [a, b] {
        if element >= n {
            return Err(Error::ElementOutOfRange { element, order: n });
        }
    }
    Ok(n / gcd(gcd(a, b), n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(prime: u64, exponent: u32) -> PrimePower {
        PrimePower { prime, exponent }
    }

    /// Brute-force count of pairs generating `Z_m`.
    fn generating_pairs(m: u64) -> u128 {
        let mut count = 0;
        for a in 0..m {
            for b in 0..m {
                if gcd(gcd(a, b), m) == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Closure of `{a, b}` under addition mod `n`.
    fn closure_size(a: u64, b: u64, n: u64) -> u64 {
        let mut seen = vec![false; n as usize];
        let mut stack = vec![0u64];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for g in [a, b] {
                let y = (x + g) % n;
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().filter(|&&s| s).count() as u64
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(1).unwrap(), vec![]);
        assert_eq!(factorize(12).unwrap(), vec![pp(2, 2), pp(3, 1)]);
        assert_eq!(factorize(36).unwrap(), vec![pp(2, 2), pp(3, 2)]);
        assert_eq!(factorize(999_983).unwrap(), vec![pp(999_983, 1)]);
        assert_eq!(factorize(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn spec_validation() {
        assert!(CyclicGroupSpec::new(0).is_err());
        assert!(CyclicGroupSpec::new(MAX_GROUP_ORDER + 1).is_err());
        let spec = CyclicGroupSpec::from_factorization(vec![pp(2, 1), pp(3, 2)]).unwrap();
        assert_eq!(spec.order(), 18);
        assert!(CyclicGroupSpec::from_factorization(vec![pp(3, 1), pp(2, 1)]).is_err());
        assert!(CyclicGroupSpec::from_factorization(vec![pp(4, 1)]).is_err());
        assert!(CyclicGroupSpec::from_factorization(vec![pp(2, 0)]).is_err());
        assert_eq!(CyclicGroupSpec::from_factorization(vec![]).unwrap().order(), 1);
    }

    #[test]
    fn divisor_examples() {
        let orders =
            |n| -> Vec<u64> { divisors(&CyclicGroupSpec::new(n).unwrap()).iter().map(|d| d.subgroup_order).collect() };
        assert_eq!(orders(6), vec![1, 2, 3, 6]);
        assert_eq!(orders(1), vec![1]);
        assert_eq!(orders(12), vec![1, 2, 3, 4, 6, 12]);
        let d = divisors(&CyclicGroupSpec::new(12).unwrap());
        assert_eq!(d[1], SubgroupDescriptor { subgroup_order: 2, index: 6 });
        assert_eq!(CyclicGroupSpec::new(36).unwrap().subgroup_count(), 9);
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(7), -1);
    }

    #[test]
    fn jordan_totient_examples() {
        assert_eq!(jordan_totient_2(1).unwrap(), 1);
        assert_eq!(jordan_totient_2(2).unwrap(), 3);
        assert_eq!(generating_pairs(6), 24);
        assert_eq!(jordan_totient_2(6).unwrap(), 24);
        assert!(jordan_totient_2(0).is_err());
    }

    #[test]
    fn jordan_totient_matches_pair_count() {
        for m in 1..=120 {
            assert_eq!(jordan_totient_2(m).unwrap(), generating_pairs(m), "m = {m}");
        }
    }

    #[test]
    fn jordan_totient_sums_to_square() {
        for n in 1..=500u64 {
            let spec = CyclicGroupSpec::new(n).unwrap();
            let total: u128 = divisors(&spec).iter().map(|d| jordan_totient_2(d.subgroup_order).unwrap()).sum();
            assert_eq!(total, u128::from(n) * u128::from(n));
        }
    }

    #[test]
    fn generated_subgroup_examples() {
        assert_eq!(generated_subgroup_order(0, 0, 6).unwrap(), 1);
        assert_eq!(closure_size(2, 3, 6), 6);
        assert_eq!(generated_subgroup_order(2, 3, 6).unwrap(), 6);
        assert_eq!(closure_size(4, 2, 12), 6);
        assert_eq!(generated_subgroup_order(4, 2, 12).unwrap(), 6);
        assert_eq!(generated_subgroup_order(6, 1, 6), Err(Error::ElementOutOfRange { element: 6, order: 6 }));
    }

    #[test]
    fn generated_subgroup_matches_closure() {
        for n in 1..=40 {
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(generated_subgroup_order(a, b, n).unwrap(), closure_size(a, b, n));
                }
            }
        }
    }
}
