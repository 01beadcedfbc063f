//! Truncated formal power series with exact rational coefficients — enough to
//! expand the column generating functions of the short-chord triangle and
//! check them coefficient by coefficient. No floating point anywhere.

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numbers::factorial;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficients c_0..c_N of a series truncated at order N. Every rational is
/// kept normalized (gcd 1, positive denominator). Arithmetic truncates to the
/// smaller order of the two operands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series has at least the constant term"
        );
        RationalSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Truncation degree N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^k; panics if k exceeds the order.
    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        let order = self.order().min(other.order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &RationalSeries) -> RationalSeries {
        let order = self.order().min(other.order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        RationalSeries { coeffs }
    }

    pub fn scale(&self, r: &BigRational) -> RationalSeries {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// s-th power by repeated multiplication.
    pub fn pow(&self, s: u32) -> RationalSeries {
        let mut acc = RationalSeries::one(self.order());
        for _ in 0..s {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal derivative, one order lower.
    pub fn derivative(&self) -> RationalSeries {
        if self.order() == 0 {
            return RationalSeries::zero(0);
        }
        RationalSeries {
            coeffs: (1..=self.order())
                .map(|k| &self.coeffs[k] * BigRational::from(BigInt::from(k)))
                .collect(),
        }
    }

    /// n! * c_n for every n, which must all be integers.
    pub fn egf_counts(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let v = c * BigRational::from(BigInt::from(factorial(n as u32)));
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::NonIntegerCoefficient { index: n })
                }
            })
            .collect()
    }

    /// JSON form: array of [numerator, denominator] decimal-string pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::json!([c.numer().to_string(), c.denom().to_string()]))
                .collect(),
        )
    }
}

impl std::fmt::Display for RationalSeries {
    /// `c0 + c1 t + c2 t^2 + ...` with each rational printed as `p/q`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} t")?,
                _ => write!(f, "{c} t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Binomial series of (1 - 2t)^(1/2). Squaring it gives back 1 - 2t up to
/// the truncation order.
pub fn sqrt_one_minus_2t(order: usize) -> RationalSeries {
    // c_0 = 1, c_k = c_{k-1} * (2k - 3) / k
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(BigRational::one());
    for k in 1..=order as i64 {
        let next = &coeffs[k as usize - 1] * rat(2 * k - 3, k);
        coeffs.push(next);
    }
    RationalSeries { coeffs }
}

/// Binomial series of (1 - 2t)^(-1/2); n! times the coefficient of t^n is
/// (2n-1)!!.
pub fn inv_sqrt_one_minus_2t(order: usize) -> RationalSeries {
    // c_0 = 1, c_k = c_{k-1} * (2k - 1) / k
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(BigRational::one());
    for k in 1..=order as i64 {
        let next = &coeffs[k as usize - 1] * rat(2 * k - 1, k);
        coeffs.push(next);
    }
    RationalSeries { coeffs }
}

/// exp of a series with zero constant term, truncated to
/// min(a.order(), order).
pub fn exp_series(a: &RationalSeries, order: usize) -> Result<RationalSeries> {
    if !a.coeff(0).is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let order = order.min(a.order());
    let a = RationalSeries {
        coeffs: a.coeffs[..=order].to_vec(),
    };
    let mut acc = RationalSeries::one(order);
    let mut term = RationalSeries::one(order);
    for k in 1..=order as i64 {
        term = term.mul(&a).scale(&rat(1, k));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Exponential generating function of column s of the short-chord triangle:
/// exp(-1 + sqrt(1-2t)) / sqrt(1-2t) * (1 - sqrt(1-2t))^s / s!.
/// n! times the coefficient of t^n equals the triangle entry (n, s).
pub fn egf_l_column(s: u32, order: usize) -> RationalSeries {
    let sqrt = sqrt_one_minus_2t(order);
    let drop = sqrt.sub(&RationalSeries::one(order)); // -1 + sqrt(1-2t)
    let g = exp_series(&drop, order)
        .expect("sqrt has constant term 1")
        .mul(&inv_sqrt_one_minus_2t(order));
    let f = RationalSeries::one(order).sub(&sqrt); // 1 - sqrt(1-2t)
    let s_fact = BigRational::from(BigInt::from(factorial(s)));
    g.mul(&f.pow(s)).scale(&s_fact.recip())
}

/// The column-weighted total of the short-chord triangle, computed as the
/// product g * f * exp(f) with g, f as in `egf_l_column`. The result equals
/// 1/sqrt(1-2t) - 1, whose EGF coefficients are the double factorials: the
/// total number of short chords over all diagrams of size n is (2n-1)!!.
pub fn riordan_short_chord_total(order: usize) -> RationalSeries {
    let sqrt = sqrt_one_minus_2t(order);
    let drop = sqrt.sub(&RationalSeries::one(order));
    let g = exp_series(&drop, order)
        .expect("sqrt has constant term 1")
        .mul(&inv_sqrt_one_minus_2t(order));
    let f = RationalSeries::one(order).sub(&sqrt);
    let exp_f = exp_series(&f, order).expect("f has constant term 0");
    g.mul(&f).mul(&exp_f)
}

/// The closed form 1/sqrt(1-2t) - 1 that the product above must match.
pub fn double_factorial_egf(order: usize) -> RationalSeries {
    inv_sqrt_one_minus_2t(order).sub(&RationalSeries::one(order))
}

/// Convenience: n! * [t^n] as a nonnegative integer.
pub fn egf_count(series: &RationalSeries, n: usize) -> Result<BigUint> {
    let v = series.coeff(n) * BigRational::from(BigInt::from(factorial(n as u32)));
    if !v.is_integer() || v.is_negative() {
        return Err(Error::NonIntegerCoefficient { index: n });
    }
    Ok(v.to_integer().to_biguint().expect("nonnegative"))
}
