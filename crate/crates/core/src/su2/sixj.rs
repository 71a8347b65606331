use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::Su2Error;

/// Six angular momenta `{j1 j2 j3; j4 j5 j6}` stored as twice their value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SixJInput {
    twice: [u32; 6],
}

impl SixJInput {
    pub fn from_twice(twice: [i64; 6]) -> Result<Self, Su2Error> {
        let mut out = [0u32; 6];
        for (o, &t) in out.iter_mut().zip(&twice) {
            *o = u32::try_from(t).map_err(|_| Su2Error::NegativeSpin(t))?;
        }
        Ok(Self { twice: out })
    }

    pub fn twice(&self) -> [u32; 6] {
        self.twice
    }
}

/// `sign · √square` with exact rational `square`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtRational {
    pub sign: i8,
    pub square: BigRational,
}

impl SqrtRational {
    pub fn zero() -> Self {
        Self { sign: 0, square: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self { sign: 1, square: BigRational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn to_f64(&self) -> f64 {
        if self.sign == 0 {
            return 0.0;
        }
        let num = self.square.numer().to_f64().expect("finite numerator");
        let den = self.square.denom().to_f64().expect("finite denominator");
        f64::from(self.sign) * (num / den).sqrt()
    }

    pub fn mul(&self, other: &SqrtRational) -> SqrtRational {
        if self.sign == 0 || other.sign == 0 {
            return Self::zero();
        }
        Self { sign: self.sign * other.sign, square: &self.square * &other.square }
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            s => write!(f, "{}sqrt({})", if s < 0 { "-" } else { "" }, self.square),
        }
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Twice-values form a triangle with an integer perimeter.
fn triangle(a: u32, b: u32, c: u32) -> bool {
    (a + b + c).is_multiple_of(2) && a <= b + c && b <= a + c && c <= a + b
}

/// `Δ(abc)²` for integer-valued arguments given as twice-values.
fn delta_squared(a: u32, b: u32, c: u32) -> BigRational {
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let f = |x: i64| factorial((x / 2) as u32);
    BigRational::new(f(a + b - c) * f(a - b + c) * f(-a + b + c), f(a + b + c + 2))
}

/// Wigner 6-j symbol by the Racah sum, exactly.
pub fn sixj_exact(input: &SixJInput) -> SqrtRational {
    let [j1, j2, j3, j4, j5, j6] = input.twice;
    let triads = [(j1, j2, j3), (j1, j5, j6), (j4, j2, j6), (j4, j5, j3)];
    if !triads.iter().all(|&(a, b, c)| triangle(a, b, c)) {
        return SqrtRational::zero();
    }
    let prefactor = triads.iter().fold(BigRational::one(), |acc, &(a, b, c)| acc * delta_squared(a, b, c));
    let alphas: Vec<u32> = triads.iter().map(|&(a, b, c)| (a + b + c) / 2).collect();
    let betas = [(j1 + j2 + j4 + j5) / 2, (j2 + j3 + j5 + j6) / 2, (j3 + j1 + j6 + j4) / 2];
    let lo = *alphas.iter().max().unwrap();
    let hi = *betas.iter().min().unwrap();
    let mut sum = BigRational::zero();
    for t in lo..=hi {
        let den = alphas.iter().map(|&a| factorial(t - a)).chain(betas.iter().map(|&b| factorial(b - t))).product::<BigInt>();
        let term = BigRational::new(factorial(t + 1), den);
        if t % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return SqrtRational::zero();
    }
    let sign = if sum.is_negative() { -1 } else { 1 };
    SqrtRational { sign, square: &sum * &sum * prefactor }
}

pub fn sixj(input: &SixJInput) -> f64 {
    sixj_exact(input).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn six(t: [i64; 6]) -> f64 {
        sixj(&SixJInput::from_twice(t).unwrap())
    }

    #[test]
    fn reference_values() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((six([0, 0, 0, 1, 1, 1]) + r).abs() < 1e-15);
        assert!((six([1, 1, 0, 1, 1, 2]) - 0.5).abs() < 1e-15);
        assert!((six([1, 0, 1, 1, 0, 1]) + 0.5).abs() < 1e-15);
        // {1 1 1; 1 1 1} = 1/6
        assert!((six([2, 2, 2, 2, 2, 2]) - 1.0 / 6.0).abs() < 1e-15);
        let exact = sixj_exact(&SixJInput::from_twice([0, 0, 0, 1, 1, 1]).unwrap());
        assert_eq!(exact.sign, -1);
        assert_eq!(exact.square, BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn selection_rule_gives_zero() {
        assert_eq!(six([1, 0, 2, 1, 1, 1]), 0.0);
        assert_eq!(six([1, 1, 1, 1, 1, 1]), 0.0);
    }

    #[test]
    fn negative_input_rejected() {
        assert!(matches!(SixJInput::from_twice([-1, 0, 0, 0, 0, 0]), Err(Su2Error::NegativeSpin(-1))));
    }

    fn permute(t: [i64; 6], cols: [usize; 3]) -> [i64; 6] {
        [t[cols[0]], t[cols[1]], t[cols[2]], t[3 + cols[0]], t[3 + cols[1]], t[3 + cols[2]]]
    }

    fn flip_two(t: [i64; 6], skip: usize) -> [i64; 6] {
        let mut out = t;
        for c in (0..3).filter(|&c| c != skip) {
            out.swap(c, 3 + c);
        }
        out
    }

    proptest! {
        #[test]
        fn tetrahedral_symmetry(t in prop::array::uniform6(0i64..=4), p in 0usize..6, skip in 0usize..3) {
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let base = six(t);
            prop_assert!((six(permute(t, perms[p])) - base).abs() < 1e-12);
            prop_assert!((six(flip_two(t, skip)) - base).abs() < 1e-12);
        }
    }
}
