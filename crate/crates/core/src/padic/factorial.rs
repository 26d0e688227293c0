use super::modular::{inv_mod, mul_mod, pow_u128, split_valuation};
use super::PadicNum;

/// Factorials n! = p^{v_n} * unit_n for n ≤ max, units kept modulo p^N.
#[derive(Clone, Debug)]
pub struct FactorialTable {
    p: u64,
    n: u32,
    modulus: u128,
    units: Vec<u128>,
    inv_units: Vec<u128>,
    vals: Vec<u32>,
}

impl FactorialTable {
    pub fn new(p: u64, n: u32, max: usize) -> Self {
        let modulus = pow_u128(p, n);
        let mut units = Vec::with_capacity(max + 1);
        let mut vals = Vec::with_capacity(max + 1);
        let mut stripped = Vec::with_capacity(max + 1);
        units.push(1 % modulus);
        vals.push(0);
        stripped.push(1);
        for i in 1..=max {
            let (v, u) = split_valuation(i as u128, p);
            let u = u % modulus;
            stripped.push(u);
            units.push(mul_mod(units[i - 1], u, modulus));
            vals.push(vals[i - 1] + v);
        }
        let mut inv_units = vec![0; max + 1];
        inv_units[max] = inv_mod(units[max], modulus).expect("unit");
        for i in (1..=max).rev() {
            inv_units[i - 1] = mul_mod(inv_units[i], stripped[i], modulus);
        }
        FactorialTable { p, n, modulus, units, inv_units, vals }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.n
    }

    pub fn max(&self) -> usize {
        self.units.len() - 1
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    /// (valuation, unit) of C(n, k); `None` when k > n.
    #[inline]
    pub fn binom_parts(&self, n: usize, k: usize) -> Option<(u32, u128)> {
        if k > n {
            return None;
        }
        let v = self.vals[n] - self.vals[k] - self.vals[n - k];
        let u = mul_mod(
            self.units[n],
            mul_mod(self.inv_units[k], self.inv_units[n - k], self.modulus),
            self.modulus,
        );
        Some((v, u))
    }

    /// C(n, k) mod p^N as a plain residue.
    #[inline]
    pub fn binom_residue(&self, n: usize, k: usize) -> u128 {
        match self.binom_parts(n, k) {
            None => 0,
            Some((v, _)) if v >= self.n => 0,
            Some((v, u)) => mul_mod(u, pow_u128(self.p, v), self.modulus),
        }
    }

    pub fn binom(&self, n: usize, k: usize) -> PadicNum {
        match self.binom_parts(n, k) {
            None => PadicNum::zero(self.p, self.n),
            Some((v, u)) => PadicNum::from_parts(self.p, v as i64, u, self.n).unwrap(),
        }
    }

    pub fn factorial(&self, n: usize) -> PadicNum {
        PadicNum::from_parts(self.p, self.vals[n] as i64, self.units[n], self.n).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_match_exact() {
        let t = FactorialTable::new(5, 3, 40);
        // C(25, 5) = 53130 = 5 * 10626
        assert_eq!(t.binom_parts(25, 5).map(|x| x.0), Some(1));
        assert_eq!(t.binom_residue(25, 5), 53130 % 125);
        assert_eq!(t.binom_residue(10, 3), 120);
        assert_eq!(t.binom_residue(3, 10), 0);
        // 10! = 3628800 = 5^2 * 145152
        assert_eq!(t.factorial(10).valuation(), Some(2));
        assert_eq!(t.factorial(10).unit(), 145152 % 125);
    }
}
