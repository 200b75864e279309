use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// Real polynomial on `[0, 1]` in the monomial basis; `coefficients[j]`
/// multiplies `x^j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightPolynomial {
    pub coefficients: Vec<f64>,
}

impl WeightPolynomial {
    pub fn new(coefficients: Vec<f64>) -> Self {
        let mut p = WeightPolynomial { coefficients };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        WeightPolynomial::new(Vec::new())
    }

    pub fn one() -> Self {
        WeightPolynomial::new(vec![1.0])
    }

    pub fn constant(c: f64) -> Self {
        WeightPolynomial::new(vec![c])
    }

    /// `x^j`.
    pub fn monomial(j: usize) -> Self {
        let mut c = vec![0.0; j + 1];
        c[j] = 1.0;
        WeightPolynomial::new(c)
    }

    fn trim(&mut self) {
        while self.coefficients.last() == Some(&0.0) {
            self.coefficients.pop();
        }
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        WeightPolynomial::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, &c)| j as f64 * c)
                .collect(),
        )
    }

    /// The antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> Self {
        let mut c = Vec::with_capacity(self.coefficients.len() + 1);
        c.push(0.0);
        c.extend(
            self.coefficients
                .iter()
                .enumerate()
                .map(|(j, &a)| a / (j + 1) as f64),
        );
        WeightPolynomial::new(c)
    }

    /// `int_a^b p(x) dx`.
    pub fn integrate(&self, a: f64, b: f64) -> f64 {
        let q = self.antiderivative();
        q.eval(b) - q.eval(a)
    }

    /// `int_0^1 p(x) dx`, summed termwise.
    pub fn integral_unit(&self) -> f64 {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(j, &c)| c / (j + 1) as f64)
            .sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        WeightPolynomial::new(self.coefficients.iter().map(|c| c * s).collect())
    }

    /// `p(s x)`.
    pub fn dilate(&self, s: f64) -> Self {
        let mut pow = 1.0;
        WeightPolynomial::new(
            self.coefficients
                .iter()
                .map(|&c| {
                    let v = c * pow;
                    pow *= s;
                    v
                })
                .collect(),
        )
    }
}

impl Add for &WeightPolynomial {
    type Output = WeightPolynomial;

    fn add(self, rhs: &WeightPolynomial) -> WeightPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        let get = |p: &WeightPolynomial, j: usize| p.coefficients.get(j).copied().unwrap_or(0.0);
        WeightPolynomial::new((0..n).map(|j| get(self, j) + get(rhs, j)).collect())
    }
}

impl Mul for &WeightPolynomial {
    type Output = WeightPolynomial;

    fn mul(self, rhs: &WeightPolynomial) -> WeightPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return WeightPolynomial::zero();
        }
        let mut c = vec![0.0; self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in rhs.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        WeightPolynomial::new(c)
    }
}
