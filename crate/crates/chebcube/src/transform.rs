//! Cosine-sum transforms for the coefficient pipeline.
//!
//! The 1-D transform is the bare sum G_a = sum_{k=0..nu} g_k cos(k a pi/nu),
//! with no boundary halving (the boundary 1/2 factors already live in the
//! cubature weights). The fast path evaluates it through a length-2*nu real
//! FFT of the even extension; a direct O(nu^2) summation serves as oracle.

use std::f64::consts::PI;
use std::sync::Arc;

use ndarray::{Array3, Axis};
use rustfft::{num_complex::Complex, Fft, FftPlanner};

use crate::{Error, Result};

/// Real values on the full (nu+1)^3 tensor grid.
#[derive(Debug, Clone)]
pub struct GridArray {
    nu: usize,
    values: Array3<f64>,
}

impl GridArray {
    pub fn new(nu: usize, values: Array3<f64>) -> Result<GridArray> {
        if nu == 0 {
            return Err(Error::InvalidArgument("grid parameter must be positive".into()));
        }
        let expect = nu + 1;
        if values.shape() != [expect, expect, expect] {
            return Err(Error::InvalidArgument(format!(
                "grid array extents {:?} do not match nu+1 = {expect}",
                values.shape()
            )));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidArgument("grid array has non-finite entries".into()));
        }
        Ok(GridArray { nu, values })
    }

    pub fn zeros(nu: usize) -> Result<GridArray> {
        GridArray::new(nu, Array3::zeros((nu + 1, nu + 1, nu + 1)))
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn values(&self) -> &Array3<f64> {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut Array3<f64> {
        &mut self.values
    }
}

/// G_a = sum_k g_k cos(k a pi / nu) by direct summation. Reference path.
pub fn cosine_sum_1d_direct(g: &[f64], nu: usize) -> Result<Vec<f64>> {
    check_len(g, nu)?;
    let mut out = Vec::with_capacity(nu + 1);
    for a in 0..=nu {
        let mut acc = 0.0;
        for (k, &gk) in g.iter().enumerate() {
            acc += gk * ((k * a) as f64 * PI / nu as f64).cos();
        }
        out.push(acc);
    }
    Ok(out)
}

/// Fast cosine sum via a length-2*nu FFT of the even extension.
///
/// The extension halves the interior samples so that the real part of the
/// spectrum is exactly the plain sum: with h = (g_0, g_1/2, ..., g_{nu-1}/2,
/// g_nu, g_{nu-1}/2, ..., g_1/2), Re(FFT(h))_a = sum_k g_k cos(k a pi/nu).
pub fn cosine_sum_1d(g: &[f64], nu: usize) -> Result<Vec<f64>> {
    check_len(g, nu)?;
    let fft = FftPlanner::new().plan_fft_forward(2 * nu);
    let mut buf = vec![Complex::new(0.0, 0.0); 2 * nu];
    let mut out = vec![0.0; nu + 1];
    cosine_sum_line(g, nu, fft.as_ref(), &mut buf, &mut out);
    Ok(out)
}

fn check_len(g: &[f64], nu: usize) -> Result<()> {
    if nu == 0 {
        return Err(Error::InvalidArgument("cosine sum needs nu >= 1".into()));
    }
    if g.len() != nu + 1 {
        return Err(Error::InvalidArgument(format!(
            "cosine sum input length {} does not match nu+1 = {}",
            g.len(),
            nu + 1
        )));
    }
    Ok(())
}

/// One transformed line; `buf` must have length 2*nu, `out` length nu+1.
fn cosine_sum_line(g: &[f64], nu: usize, fft: &dyn Fft<f64>, buf: &mut [Complex<f64>], out: &mut [f64]) {
    buf[0] = Complex::new(g[0], 0.0);
    buf[nu] = Complex::new(g[nu], 0.0);
    for k in 1..nu {
        let half = Complex::new(0.5 * g[k], 0.0);
        buf[k] = half;
        buf[2 * nu - k] = half;
    }
    fft.process(buf);
    for (a, slot) in out.iter_mut().enumerate() {
        *slot = buf[a].re;
    }
}

/// Apply the 1-D cosine sum along each of the three axes in sequence.
///
/// Output index a_s pairs with array axis s: the result at (a1,a2,a3) is
/// sum_{ijk} F_{ijk} cos(i a1 pi/nu) cos(j a2 pi/nu) cos(k a3 pi/nu).
pub fn cosine_sum_3d(grid: &GridArray) -> Result<Array3<f64>> {
    let nu = grid.nu;
    let fft = FftPlanner::new().plan_fft_forward(2 * nu);
    let mut data = grid.values.clone();
    transform_axes(&mut data, nu, &fft);
    Ok(data)
}

fn transform_axes(data: &mut Array3<f64>, nu: usize, fft: &Arc<dyn Fft<f64>>) {
    let mut buf = vec![Complex::new(0.0, 0.0); 2 * nu];
    let mut line = vec![0.0; nu + 1];
    let mut out = vec![0.0; nu + 1];
    for axis in 0..3 {
        for mut lane in data.lanes_mut(Axis(axis)) {
            for (slot, &v) in line.iter_mut().zip(lane.iter()) {
                *slot = v;
            }
            cosine_sum_line(&line, nu, fft.as_ref(), &mut buf, &mut out);
            for (slot, &v) in lane.iter_mut().zip(out.iter()) {
                *slot = v;
            }
        }
    }
}

/// Triple-loop reference for the 3-D transform. O(nu^6); test sizes only.
pub fn cosine_sum_3d_direct(grid: &GridArray) -> Result<Array3<f64>> {
    let nu = grid.nu;
    let ext = nu + 1;
    let mut out = Array3::zeros((ext, ext, ext));
    for a1 in 0..ext {
        for a2 in 0..ext {
            for a3 in 0..ext {
                let mut acc = 0.0;
                for i in 0..ext {
                    let c1 = ((i * a1) as f64 * PI / nu as f64).cos();
                    for j in 0..ext {
                        let c2 = ((j * a2) as f64 * PI / nu as f64).cos();
                        for k in 0..ext {
                            let c3 = ((k * a3) as f64 * PI / nu as f64).cos();
                            acc += grid.values[[i, j, k]] * c1 * c2 * c3;
                        }
                    }
                }
                out[[a1, a2, a3]] = acc;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lcg_values(seed: u64, count: usize) -> Vec<f64> {
        // small deterministic generator, values in [-1, 1)
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        (0..count)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 11) as f64 / (1u64 << 52) as f64 - 1.0
            })
            .collect()
    }

    #[test]
    fn delta_input_gives_ones() {
        for nu in [1usize, 2, 5, 8] {
            let mut g = vec![0.0; nu + 1];
            g[0] = 1.0;
            let out = cosine_sum_1d(&g, nu).unwrap();
            for (a, &v) in out.iter().enumerate() {
                assert!((v - 1.0).abs() < 1e-14, "nu={nu} a={a}");
            }
        }
    }

    #[test]
    fn small_hand_case() {
        let out = cosine_sum_1d(&[1.0, 1.0, 1.0], 2).unwrap();
        assert!((out[0] - 3.0).abs() < 1e-14);
        assert!(out[1].abs() < 1e-14);
        assert!((out[2] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn length_mismatch_rejected() {
        assert!(cosine_sum_1d(&[1.0, 2.0], 2).is_err());
        assert!(cosine_sum_1d_direct(&[1.0, 2.0], 2).is_err());
        assert!(cosine_sum_1d(&[1.0], 0).is_err());
    }

    #[test]
    fn fast_matches_direct_1d() {
        for nu in 2..=64usize {
            let g = lcg_values(nu as u64, nu + 1);
            let norm1: f64 = g.iter().map(|v| v.abs()).sum();
            let fast = cosine_sum_1d(&g, nu).unwrap();
            let direct = cosine_sum_1d_direct(&g, nu).unwrap();
            for a in 0..=nu {
                assert!(
                    (fast[a] - direct[a]).abs() <= 1e-12 * norm1.max(1.0),
                    "nu={nu} a={a}"
                );
            }
        }
    }

    #[test]
    fn grid_array_validation() {
        assert!(GridArray::new(2, Array3::zeros((3, 3, 3))).is_ok());
        assert!(GridArray::new(2, Array3::zeros((3, 3, 4))).is_err());
        assert!(GridArray::new(0, Array3::zeros((1, 1, 1))).is_err());
        let mut bad = Array3::zeros((3, 3, 3));
        bad[[0, 0, 0]] = f64::NAN;
        assert!(GridArray::new(2, bad).is_err());
    }

    #[test]
    fn zero_and_delta_3d() {
        let grid = GridArray::zeros(4).unwrap();
        let out = cosine_sum_3d(&grid).unwrap();
        assert!(out.iter().all(|&v| v == 0.0));

        let mut grid = GridArray::zeros(4).unwrap();
        grid.values_mut()[[0, 0, 0]] = 1.0;
        let out = cosine_sum_3d(&grid).unwrap();
        assert!(out.iter().all(|&v| (v - 1.0).abs() < 1e-13));
    }

    #[test]
    fn fast_matches_direct_3d() {
        let nu = 8usize;
        let ext = nu + 1;
        let raw = lcg_values(7, ext * ext * ext);
        let values = Array3::from_shape_vec((ext, ext, ext), raw).unwrap();
        let norm1: f64 = values.iter().map(|v| v.abs()).sum();
        let grid = GridArray::new(nu, values).unwrap();
        let fast = cosine_sum_3d(&grid).unwrap();
        let direct = cosine_sum_3d_direct(&grid).unwrap();
        for (a, b) in fast.iter().zip(direct.iter()) {
            assert!((a - b).abs() <= 1e-12 * norm1);
        }
    }

    #[test]
    fn linearity() {
        let nu = 6usize;
        let ext = nu + 1;
        let fa = Array3::from_shape_vec((ext, ext, ext), lcg_values(11, ext.pow(3))).unwrap();
        let fb = Array3::from_shape_vec((ext, ext, ext), lcg_values(12, ext.pow(3))).unwrap();
        let (a, b) = (0.7, -1.3);
        let combo = GridArray::new(nu, a * &fa + b * &fb).unwrap();
        let lhs = cosine_sum_3d(&combo).unwrap();
        let ta = cosine_sum_3d(&GridArray::new(nu, fa).unwrap()).unwrap();
        let tb = cosine_sum_3d(&GridArray::new(nu, fb).unwrap()).unwrap();
        let rhs = a * &ta + b * &tb;
        for (x, y) in lhs.iter().zip(rhs.iter()) {
            assert!((x - y).abs() <= 1e-13 * (1.0 + y.abs()));
        }
    }

    #[test]
    fn axis_symmetry_under_transposition() {
        let nu = 5usize;
        let ext = nu + 1;
        let values = Array3::from_shape_vec((ext, ext, ext), lcg_values(21, ext.pow(3))).unwrap();
        let base = cosine_sum_3d(&GridArray::new(nu, values.clone()).unwrap()).unwrap();
        let perm = values.clone().permuted_axes([2, 0, 1]).as_standard_layout().to_owned();
        let transformed = cosine_sum_3d(&GridArray::new(nu, perm).unwrap()).unwrap();
        let expect = base.permuted_axes([2, 0, 1]);
        for (x, y) in transformed.iter().zip(expect.iter()) {
            assert!((x - y).abs() <= 1e-12 * (1.0 + y.abs()));
        }
    }
}
