//! Discriminants of monic complex polynomials and their winding along loops.
//!
//! Polynomials are given by their non-leading coefficients in ascending
//! order, `[c_0, …, c_{n−1}]` for `ζⁿ + c_{n−1}ζ^{n−1} + … + c_0`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Π_{i<j} (ζ_i − ζ_j)²`, computed as `(−1)^{n(n−1)/2} · Res(p, p′)` with the
/// resultant taken as the Sylvester determinant.
pub fn discriminant(coeffs: &[Complex64]) -> Result<Complex64> {
    let n = coeffs.len();
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    // descending coefficients of p and p'
    let mut p = vec![Complex64::new(1.0, 0.0)];
    p.extend(coeffs.iter().rev());
    let dp: Vec<Complex64> = (0..n).map(|i| p[i] * (n - i) as f64).collect();

    let size = 2 * n - 1;
    let mut sylvester = vec![vec![Complex64::new(0.0, 0.0); size]; size];
    for r in 0..n - 1 {
        for (j, &c) in p.iter().enumerate() {
            sylvester[r][r + j] = c;
        }
    }
    for r in 0..n {
        for (j, &c) in dp.iter().enumerate() {
            sylvester[n - 1 + r][r + j] = c;
        }
    }
    let res = determinant(sylvester);
    let sign = if (n * (n - 1) / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    };
    Ok(res * sign)
}

fn determinant(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let size = a.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..size {
        let pivot = (col..size)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .expect("nonempty range");
        if a[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let head = a[col][col];
        det *= head;
        for row in col + 1..size {
            let factor = a[row][col] / head;
            if factor.norm() == 0.0 {
                continue;
            }
            let (top, bottom) = a.split_at_mut(row);
            for (x, &v) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= factor * v;
            }
        }
    }
    det
}

/// A closed loop of separable monic polynomials of fixed degree.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyLoop {
    degree: usize,
    samples: Vec<Vec<Complex64>>,
}

pub const MIN_LOOP_SAMPLES: usize = 8;

impl PolyLoop {
    pub fn new(degree: usize, samples: Vec<Vec<Complex64>>) -> Result<Self> {
        if degree < 2 {
            return Err(Error::DegreeTooSmall(degree));
        }
        if samples.len() < MIN_LOOP_SAMPLES {
            return Err(Error::InvalidLoop(format!(
                "{} samples, need at least {MIN_LOOP_SAMPLES}",
                samples.len()
            )));
        }
        if let Some(i) = samples.iter().position(|s| s.len() != degree) {
            return Err(Error::InvalidLoop(format!(
                "sample {i} has {} coefficients, expected {degree}",
                samples[i].len()
            )));
        }
        if samples.first() != samples.last() {
            return Err(Error::InvalidLoop("first and last samples differ".into()));
        }
        Ok(PolyLoop { degree, samples })
    }

    /// `ζⁿ − e^{2πi k t}` sampled at `t = j / (samples − 1)`; the closing
    /// sample is a copy of the first.
    pub fn model(degree: usize, k: i64, samples: usize) -> Result<Self> {
        let mut out = Vec::with_capacity(samples);
        for j in 0..samples.saturating_sub(1) {
            let t = j as f64 / (samples - 1) as f64;
            let mut coeffs = vec![Complex64::new(0.0, 0.0); degree];
            coeffs[0] = -Complex64::from_polar(1.0, TAU * k as f64 * t);
            out.push(coeffs);
        }
        if let Some(first) = out.first().cloned() {
            out.push(first);
        }
        PolyLoop::new(degree, out)
    }

    pub fn constant(coeffs: Vec<Complex64>, samples: usize) -> Result<Self> {
        PolyLoop::new(coeffs.len(), vec![coeffs; samples])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn samples(&self) -> &[Vec<Complex64>] {
        &self.samples
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: LoopJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let samples = j
            .samples
            .into_iter()
            .map(|s| {
                s.into_iter()
                    .map(|[re, im]| Complex64::new(re, im))
                    .collect()
            })
            .collect();
        PolyLoop::new(j.degree, samples)
    }

    pub fn to_json(&self) -> String {
        let j = LoopJson {
            degree: self.degree,
            samples: self
                .samples
                .iter()
                .map(|s| s.iter().map(|c| [c.re, c.im]).collect())
                .collect(),
        };
        serde_json::to_string(&j).expect("loop serializes")
    }
}

/// JSON form: `{"degree": n, "samples": [[[re, im], …], …]}`.
#[derive(Debug, Serialize, Deserialize)]
struct LoopJson {
    degree: usize,
    samples: Vec<Vec<[f64; 2]>>,
}

/// Winding number of the discriminant around the loop: the summed argument
/// increments between consecutive samples, divided by 2π. Every increment
/// must stay strictly below π in size.
pub fn winding_index(lp: &PolyLoop) -> Result<i64> {
    let discs: Vec<Complex64> = lp
        .samples
        .par_iter()
        .map(|s| discriminant(s))
        .collect::<Result<_>>()?;
    if let Some(i) = discs
        .iter()
        .position(|d| d.norm() == 0.0 || !d.norm().is_finite())
    {
        return Err(Error::DiscriminantVanishes(i));
    }
    let mut total = 0.0;
    for (i, pair) in discs.windows(2).enumerate() {
        let step = (pair[1] / pair[0]).arg();
        if step.abs() >= PI {
            return Err(Error::InsufficientSampling {
                index: i + 1,
                jump: step.abs(),
            });
        }
        total += step;
    }
    Ok((total / TAU).round() as i64)
}
