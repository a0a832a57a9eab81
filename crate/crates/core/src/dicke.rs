//! Collective spin algebra on the fully symmetric (Dicke) manifold of N
//! two-level atoms: operators, coherent and cat states, Husimi Q-function,
//! Fisher information and fidelities.
//!
//! States are vectors over the Dicke basis |j, m> with j = N/2, stored with
//! m *descending* (index 0 holds m = +j, index N holds m = -j).

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The symmetric-subspace Hilbert space of `n_atoms` two-level atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DickeSpace {
    n_atoms: usize,
}

impl DickeSpace {
    pub fn new(n_atoms: usize) -> Result<Self> {
        if n_atoms == 0 {
            return Err(Error::EmptyEnsemble);
        }
        Ok(Self { n_atoms })
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    /// Hilbert-space dimension, N + 1.
    pub fn dim(&self) -> usize {
        self.n_atoms + 1
    }

    /// Total spin j = N/2.
    pub fn j(&self) -> f64 {
        self.n_atoms as f64 / 2.0
    }

    /// Magnetic quantum number at basis index `idx` (m descending from +j).
    pub fn m(&self, idx: usize) -> f64 {
        self.j() - idx as f64
    }

    /// All m values, descending.
    pub fn m_values(&self) -> Array1<f64> {
        let j = self.j();
        Array1::from_iter((0..self.dim()).map(|k| j - k as f64))
    }
}

/// Bloch-sphere direction, `theta` in [0, pi], `phi` folded into [0, 2pi).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphericalPoint {
    theta: f64,
    phi: f64,
}

impl SphericalPoint {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) || !theta.is_finite() {
            return Err(Error::PolarRange(theta));
        }
        Ok(Self {
            theta,
            phi: fold_azimuth(phi),
        })
    }

    /// Fold an arbitrary pair of angles onto the canonical ranges
    /// (theta may come out of an integrator slightly outside [0, pi]).
    pub fn fold(theta: f64, phi: f64) -> Self {
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut th = theta.rem_euclid(two_pi);
        let mut ph = phi;
        if th > std::f64::consts::PI {
            th = two_pi - th;
            ph += std::f64::consts::PI;
        }
        Self {
            theta: th,
            phi: fold_azimuth(ph),
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Cartesian unit vector (sin t cos p, sin t sin p, cos t).
    pub fn unit_vector(&self) -> [f64; 3] {
        [
            self.theta.sin() * self.phi.cos(),
            self.theta.sin() * self.phi.sin(),
            self.theta.cos(),
        ]
    }

    /// Great-circle angle to another point.
    pub fn angle_to(&self, other: &SphericalPoint) -> f64 {
        let a = self.unit_vector();
        let b = other.unit_vector();
        let dot: f64 = a.iter().zip(b.iter()).map(|(x, y)| x * y).sum();
        dot.clamp(-1.0, 1.0).acos()
    }
}

fn fold_azimuth(phi: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let p = phi.rem_euclid(two_pi);
    if p == two_pi {
        0.0
    } else {
        p
    }
}

/// Normalized state vector over the Dicke basis, m descending.
#[derive(Debug, Clone)]
pub struct SpinState {
    space: DickeSpace,
    amplitudes: Array1<C64>,
}

impl SpinState {
    /// Build from raw amplitudes; renormalizes.
    pub fn from_amplitudes(space: DickeSpace, amplitudes: Array1<C64>) -> Result<Self> {
        if amplitudes.len() != space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "state length {} vs space dimension {}",
                amplitudes.len(),
                space.dim()
            )));
        }
        let mut s = Self { space, amplitudes };
        s.renormalize();
        Ok(s)
    }

    /// Dicke state |j, m>.
    pub fn dicke(space: DickeSpace, m_index: usize) -> Result<Self> {
        let mut amp = Array1::zeros(space.dim());
        if m_index >= space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "m index {} outside dimension {}",
                m_index,
                space.dim()
            )));
        }
        amp[m_index] = C64::new(1.0, 0.0);
        Ok(Self {
            space,
            amplitudes: amp,
        })
    }

    pub fn space(&self) -> DickeSpace {
        self.space
    }

    pub fn amplitudes(&self) -> &Array1<C64> {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut Array1<C64> {
        &mut self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn renormalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            self.amplitudes.mapv_inplace(|c| c / n);
        }
    }

    /// <self|other>.
    pub fn overlap(&self, other: &SpinState) -> C64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// |<self|other>|^2.
    pub fn fidelity(&self, other: &SpinState) -> f64 {
        self.overlap(other).norm_sqr()
    }

    /// <Jz>, diagonal in this basis.
    pub fn exp_jz(&self) -> f64 {
        let j = self.space.j();
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(k, c)| (j - k as f64) * c.norm_sqr())
            .sum()
    }

    /// <Jz^2>.
    pub fn exp_jz2(&self) -> f64 {
        let j = self.space.j();
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let m = j - k as f64;
                m * m * c.norm_sqr()
            })
            .sum()
    }

    /// <J+> via the ladder coefficients; <Jx> = Re, <Jy> = Im.
    pub fn exp_jplus(&self) -> C64 {
        let j = self.space.j();
        let mut acc = C64::new(0.0, 0.0);
        // J+|j,m> = g(m) |j,m+1>, amplitudes stored m-descending
        for k in 1..self.space.dim() {
            let m = j - k as f64;
            let g = (j * (j + 1.0) - m * (m + 1.0)).sqrt();
            acc += self.amplitudes[k - 1].conj() * self.amplitudes[k] * g;
        }
        acc
    }

    pub fn exp_jx(&self) -> f64 {
        self.exp_jplus().re
    }

    pub fn exp_jy(&self) -> f64 {
        self.exp_jplus().im
    }

    /// Variance of Jz.
    pub fn var_jz(&self) -> f64 {
        let m = self.exp_jz();
        (self.exp_jz2() - m * m).max(0.0)
    }

    /// Probabilities |c_m|^2, m descending.
    pub fn populations(&self) -> Array1<f64> {
        self.amplitudes.mapv(|c| c.norm_sqr())
    }
}

/// Dense collective-spin operators. Jz is diagonal and Jx tridiagonal in the
/// Dicke basis; both are kept in compact real form with dense complex
/// matrices available on demand.
#[derive(Debug, Clone)]
pub struct SpinOperators {
    space: DickeSpace,
    jz_diag: Array1<f64>,
    /// g(m) = sqrt(j(j+1) - m(m+1)) for the transition m -> m+1, indexed by
    /// the *source* basis index k (so the entry couples index k to k-1).
    ladder: Array1<f64>,
}

/// Build the collective operators for a Dicke space.
pub fn build_operators(space: DickeSpace) -> SpinOperators {
    let j = space.j();
    let dim = space.dim();
    let jz_diag = space.m_values();
    let mut ladder = Array1::zeros(dim);
    for k in 1..dim {
        let m = j - k as f64;
        ladder[k] = (j * (j + 1.0) - m * (m + 1.0)).sqrt();
    }
    SpinOperators {
        space,
        jz_diag,
        ladder,
    }
}

impl SpinOperators {
    pub fn space(&self) -> DickeSpace {
        self.space
    }

    pub fn jz_diag(&self) -> &Array1<f64> {
        &self.jz_diag
    }

    /// Ladder coefficient g(m) coupling index k (m) to k-1 (m+1).
    pub fn ladder(&self) -> &Array1<f64> {
        &self.ladder
    }

    /// Dense real Jx = (J+ + J-)/2, symmetric tridiagonal.
    pub fn jx_real(&self) -> Array2<f64> {
        let dim = self.space.dim();
        let mut jx = Array2::zeros((dim, dim));
        for k in 1..dim {
            let v = self.ladder[k] / 2.0;
            jx[[k - 1, k]] = v;
            jx[[k, k - 1]] = v;
        }
        jx
    }

    pub fn jx_matrix(&self) -> Array2<C64> {
        self.jx_real().mapv(|x| C64::new(x, 0.0))
    }

    /// Dense Jy = (J+ - J-)/(2i), Hermitian with imaginary off-diagonals.
    pub fn jy_matrix(&self) -> Array2<C64> {
        let dim = self.space.dim();
        let mut jy = Array2::zeros((dim, dim));
        for k in 1..dim {
            let v = self.ladder[k] / 2.0;
            // <m+1| J+ |m> contributes +g/2i at [k-1, k]
            jy[[k - 1, k]] = C64::new(0.0, -v);
            jy[[k, k - 1]] = C64::new(0.0, v);
        }
        jy
    }

    pub fn jz_matrix(&self) -> Array2<C64> {
        Array2::from_diag(&self.jz_diag.mapv(|x| C64::new(x, 0.0)))
    }

    /// Apply J- to a state (used by the de-excitation collapse channel).
    pub fn apply_jminus(&self, state: &Array1<C64>) -> Array1<C64> {
        let dim = self.space.dim();
        let mut out = Array1::zeros(dim);
        // J-|j,m> = g(m-1->m) |j,m-1>; in index terms J-|k> = ladder[k+1] |k+1>
        for k in 0..dim - 1 {
            out[k + 1] = state[k] * self.ladder[k + 1];
        }
        out
    }

    /// Apply Jz to a state (dephasing collapse channel).
    pub fn apply_jz(&self, state: &Array1<C64>) -> Array1<C64> {
        let mut out = state.clone();
        for (k, c) in out.iter_mut().enumerate() {
            *c *= self.jz_diag[k];
        }
        out
    }

    /// Diagonal of J+J- = j(j+1) - Jz^2 + Jz.
    pub fn jplus_jminus_diag(&self) -> Array1<f64> {
        let j = self.space.j();
        self.jz_diag.mapv(|m| j * (j + 1.0) - m * m + m)
    }
}

/// Natural log of n!.
pub(crate) fn ln_factorial_table(n: usize) -> Vec<f64> {
    let mut t = vec![0.0; n + 1];
    let mut acc = 0.0;
    for (k, slot) in t.iter_mut().enumerate().skip(1) {
        acc += (k as f64).ln();
        *slot = acc;
    }
    t
}

/// Coherent spin state at Bloch angles (theta, phi): the product state with
/// every atom pointing along the (theta, phi) unit vector, so that
/// (<Jx>, <Jy>, <Jz>) = j (sin t cos p, sin t sin p, cos t).
///
/// Amplitudes are assembled in log space so arbitrary ensemble sizes stay
/// finite.
pub fn coherent_spin_state(space: DickeSpace, point: SphericalPoint) -> SpinState {
    let n = space.n_atoms();
    let j = space.j();
    let dim = space.dim();
    let half = point.theta() / 2.0;
    let (c, s) = (half.cos(), half.sin());
    let lnf = ln_factorial_table(n);
    let mut amp = Array1::zeros(dim);
    for k in 0..dim {
        let m = j - k as f64;
        let ke = k; // j - m = number of ground-state atoms
        let kg = n - k; // j + m
        // magnitude: sqrt(C(N, k)) cos^(j+m) sin^(j-m)
        let mut mag_ln = 0.5 * (lnf[n] - lnf[ke] - lnf[kg]);
        if kg > 0 {
            if c == 0.0 {
                continue;
            }
            mag_ln += kg as f64 * c.abs().ln();
        }
        if ke > 0 {
            if s == 0.0 {
                continue;
            }
            mag_ln += ke as f64 * s.abs().ln();
        }
        let phase = C64::from_polar(1.0, -m * point.phi());
        amp[k] = phase * mag_ln.exp();
    }
    SpinState::from_amplitudes(space, amp).expect("dimension fixed by construction")
}

/// Equal superposition of the two coherent states at polar angles
/// (pi -+ delta_theta)/2 and common azimuth phi_c, renormalized exactly
/// (the branches are not orthogonal for delta_theta < pi).
pub fn cat_state(space: DickeSpace, delta_theta: f64, phi_c: f64) -> Result<SpinState> {
    if !(0.0..=std::f64::consts::PI).contains(&delta_theta) {
        return Err(Error::PolarRange(delta_theta));
    }
    let north = SphericalPoint::new((std::f64::consts::PI - delta_theta) / 2.0, phi_c)?;
    let south = SphericalPoint::new((std::f64::consts::PI + delta_theta) / 2.0, phi_c)?;
    let a = coherent_spin_state(space, north);
    let b = coherent_spin_state(space, south);
    let sum = a.amplitudes() + b.amplitudes();
    SpinState::from_amplitudes(space, sum)
}

/// Husimi Q-function sampled on a list of Bloch-sphere points, normalized so
/// that the integral over the sphere is one:
/// Q(t, p) = (2j + 1)/(4 pi) |<t, p|psi>|^2.
pub fn husimi_q(state: &SpinState, grid: &[SphericalPoint]) -> Vec<f64> {
    let space = state.space();
    let prefactor = (2.0 * space.j() + 1.0) / (4.0 * std::f64::consts::PI);
    grid.iter()
        .map(|p| {
            let css = coherent_spin_state(space, *p);
            prefactor * css.overlap(state).norm_sqr()
        })
        .collect()
}

/// Uniform (theta, phi) product grid for Husimi maps.
pub fn sphere_grid(n_theta: usize, n_phi: usize) -> Vec<SphericalPoint> {
    let mut pts = Vec::with_capacity(n_theta * n_phi);
    for it in 0..n_theta {
        // cell-centred in theta so quadrature with sin(theta) weights is clean
        let theta = (it as f64 + 0.5) * std::f64::consts::PI / n_theta as f64;
        for ip in 0..n_phi {
            let phi = ip as f64 * 2.0 * std::f64::consts::PI / n_phi as f64;
            pts.push(SphericalPoint::fold(theta, phi));
        }
    }
    pts
}

/// Quadrature of a Husimi map produced on `sphere_grid(n_theta, n_phi)`.
pub fn sphere_integral(values: &[f64], grid: &[SphericalPoint], n_theta: usize, n_phi: usize) -> f64 {
    assert_eq!(values.len(), n_theta * n_phi);
    let dtheta = std::f64::consts::PI / n_theta as f64;
    let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
    values
        .iter()
        .zip(grid.iter())
        .map(|(q, p)| q * p.theta().sin() * dtheta * dphi)
        .sum()
}

/// Location of the Husimi maximum over a coarse grid followed by a local
/// quadratic refinement in theta and phi.
pub fn husimi_peak(state: &SpinState, n_theta: usize, n_phi: usize) -> SphericalPoint {
    let grid = sphere_grid(n_theta, n_phi);
    let q = husimi_q(state, &grid);
    let (mut best, mut best_q) = (0, f64::MIN);
    for (i, v) in q.iter().enumerate() {
        if *v > best_q {
            best_q = *v;
            best = i;
        }
    }
    let it = best / n_phi;
    let ip = best % n_phi;
    let theta0 = (it as f64 + 0.5) * std::f64::consts::PI / n_theta as f64;
    let phi0 = ip as f64 * 2.0 * std::f64::consts::PI / n_phi as f64;
    let dth = std::f64::consts::PI / n_theta as f64;
    let dph = 2.0 * std::f64::consts::PI / n_phi as f64;
    let eval = |theta: f64, phi: f64| {
        let p = SphericalPoint::fold(theta, phi);
        let css = coherent_spin_state(state.space(), p);
        css.overlap(state).norm_sqr()
    };
    let refine = |x0: f64, dx: f64, f: &dyn Fn(f64) -> f64| {
        let (fm, f0, fp) = (f(x0 - dx), f(x0), f(x0 + dx));
        let denom = fm - 2.0 * f0 + fp;
        if denom.abs() < 1e-300 {
            x0
        } else {
            x0 + 0.5 * dx * (fm - fp) / denom
        }
    };
    let theta1 = refine(theta0, dth, &|t| eval(t, phi0));
    let phi1 = refine(phi0, dph, &|p| eval(theta1, p));
    SphericalPoint::fold(theta1, phi1)
}

/// Quantum Fisher information of a pure state under Jz generation,
/// F = 4 Var(Jz), with the per-atom ratio and its decibel form.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct FisherInfo {
    pub value: f64,
    pub per_atom: f64,
    pub db: f64,
}

pub fn fisher_information(state: &SpinState) -> FisherInfo {
    let f = 4.0 * state.var_jz();
    let per_atom = f / state.space().n_atoms() as f64;
    FisherInfo {
        value: f,
        per_atom,
        db: 10.0 * per_atom.log10(),
    }
}

/// Fisher information from externally supplied first and second Jz moments
/// (used for ensemble averages where the state is mixed).
pub fn fisher_from_moments(n_atoms: usize, mean_jz: f64, mean_jz2: f64) -> FisherInfo {
    let f = 4.0 * (mean_jz2 - mean_jz * mean_jz).max(0.0);
    let per_atom = f / n_atoms as f64;
    FisherInfo {
        value: f,
        per_atom,
        db: 10.0 * per_atom.log10(),
    }
}

/// Overlap-squared of `state` with the cat state at (delta_theta, phi_c).
pub fn cat_fidelity(state: &SpinState, delta_theta: f64, phi_c: f64) -> Result<f64> {
    let cat = cat_state(state.space(), delta_theta, phi_c)?;
    Ok(cat.fidelity(state))
}

/// JSON-friendly serialized form: amplitudes as [re, im] pairs, m descending.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SerializedState {
    pub n_atoms: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl From<&SpinState> for SerializedState {
    fn from(s: &SpinState) -> Self {
        Self {
            n_atoms: s.space().n_atoms(),
            amplitudes: s.amplitudes().iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

impl TryFrom<&SerializedState> for SpinState {
    type Error = Error;

    fn try_from(s: &SerializedState) -> Result<Self> {
        let space = DickeSpace::new(s.n_atoms)?;
        let amp = Array1::from_iter(s.amplitudes.iter().map(|p| C64::new(p[0], p[1])));
        SpinState::from_amplitudes(space, amp)
    }
}
