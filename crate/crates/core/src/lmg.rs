//! Collective-spin bifurcation dynamics: the twisting-plus-transverse-field
//! Hamiltonian chi Jz^2 + delta Jz + Omega_c Jx, exact evolution through its
//! eigendecomposition, the semiclassical flow on the Bloch sphere, and the
//! cat-creation-time search behind the bifurcation sweeps.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::dicke::{
    cat_state, coherent_spin_state, fisher_information, DickeSpace, SphericalPoint, SpinState,
};
use crate::error::{Error, Result};
use crate::linalg::{expectation_real, Propagator};

/// Couplings of the twisting Hamiltonian, all angular frequencies in rad/s.
/// The dimensionless drive ratio Lambda = N chi / Omega_c and detuning
/// delta' = delta / Omega_c are derived, never stored.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LmgParams {
    pub chi: f64,
    pub delta: f64,
    pub omega_c: f64,
}

impl LmgParams {
    /// Fix (chi, delta) from the dimensionless (Lambda, delta') at a given
    /// ensemble size and transverse drive.
    pub fn from_dimensionless(lambda: f64, delta_prime: f64, n_atoms: usize, omega_c: f64) -> Self {
        Self {
            chi: lambda * omega_c / n_atoms as f64,
            delta: delta_prime * omega_c,
            omega_c,
        }
    }

    pub fn lambda(&self, n_atoms: usize) -> f64 {
        n_atoms as f64 * self.chi / self.omega_c
    }

    pub fn delta_prime(&self) -> f64 {
        self.delta / self.omega_c
    }
}

/// H = chi Jz^2 + delta Jz + Omega_c Jx, real symmetric tridiagonal.
pub fn build_hamiltonian(space: DickeSpace, params: &LmgParams) -> Array2<f64> {
    let dim = space.dim();
    let j = space.j();
    let mut h = Array2::zeros((dim, dim));
    for k in 0..dim {
        let m = j - k as f64;
        h[[k, k]] = params.chi * m * m + params.delta * m;
    }
    for k in 1..dim {
        let m = j - k as f64;
        let g = (j * (j + 1.0) - m * (m + 1.0)).sqrt();
        let v = params.omega_c * g / 2.0;
        h[[k - 1, k]] = v;
        h[[k, k - 1]] = v;
    }
    h
}

/// Same Hamiltonian with an extra cubic twist eps Jz^3 (the leading odd
/// distortion inherited from the dressing potential).
pub fn build_hamiltonian_with_cubic(
    space: DickeSpace,
    params: &LmgParams,
    cubic: f64,
) -> Array2<f64> {
    let mut h = build_hamiltonian(space, params);
    let j = space.j();
    for k in 0..space.dim() {
        let m = j - k as f64;
        h[[k, k]] += cubic * m * m * m;
    }
    h
}

/// Prepared evolution of a fixed initial state under a fixed Hamiltonian;
/// states at arbitrary times come from one eigendecomposition.
pub struct TimeEvolution {
    space: DickeSpace,
    propagator: Propagator,
    coeffs: Array1<C64>,
}

impl TimeEvolution {
    pub fn new(state0: &SpinState, hamiltonian: &Array2<f64>) -> Result<Self> {
        let propagator = Propagator::new(hamiltonian)?;
        let coeffs = propagator.to_eigenbasis(state0.amplitudes());
        Ok(Self {
            space: state0.space(),
            propagator,
            coeffs,
        })
    }

    pub fn state_at(&self, t: f64) -> SpinState {
        let amp = self.propagator.from_eigenbasis_at(&self.coeffs, t);
        SpinState::from_amplitudes(self.space, amp).expect("propagation preserves dimension")
    }

    pub fn propagator(&self) -> &Propagator {
        &self.propagator
    }
}

/// psi(t) = exp(-iHt) psi(0) by eigendecomposition of the real symmetric H.
pub fn evolve(state0: &SpinState, hamiltonian: &Array2<f64>, t: f64) -> Result<SpinState> {
    Ok(TimeEvolution::new(state0, hamiltonian)?.state_at(t))
}

const POLE_GUARD: f64 = 1e-4;

/// Right-hand side of the mean-field equations of motion in units of
/// Omega_c: (theta_dot, phi_dot) = (-sin phi, Lambda cos theta
/// - cos phi cot theta + delta').
pub fn semiclassical_flow(
    point: &SphericalPoint,
    lambda: f64,
    delta_prime: f64,
) -> Result<(f64, f64)> {
    let theta = point.theta();
    if theta < POLE_GUARD || theta > std::f64::consts::PI - POLE_GUARD {
        return Err(Error::PolarSingularity(theta));
    }
    let phi = point.phi();
    let theta_dot = -phi.sin();
    let phi_dot = lambda * theta.cos() - phi.cos() * theta.cos() / theta.sin() + delta_prime;
    Ok((theta_dot, phi_dot))
}

/// Conserved energy of the mean-field flow (per spin, in units of Omega_c):
/// e = Lambda/2 cos^2 theta + delta' cos theta + sin theta cos phi.
pub fn classical_energy(point: &SphericalPoint, lambda: f64, delta_prime: f64) -> f64 {
    let z = point.theta().cos();
    lambda / 2.0 * z * z + delta_prime * z + point.theta().sin() * point.phi().cos()
}

/// Mean-field trajectory on the Bloch sphere, times in units of 1/Omega_c.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlowTrajectory {
    pub samples: Vec<(f64, SphericalPoint)>,
}

/// Classical flow integrated with a fixed-step 4th-order Runge-Kutta scheme.
/// `dt` defaults to 1e-3 (units of 1/Omega_c) if not positive.
pub fn integrate_flow(
    start: &SphericalPoint,
    lambda: f64,
    delta_prime: f64,
    t_max: f64,
    dt: f64,
) -> Result<FlowTrajectory> {
    let dt = if dt > 0.0 { dt } else { 1e-3 };
    let guard = |theta: f64, t: f64| -> Result<()> {
        if theta < POLE_GUARD || theta > std::f64::consts::PI - POLE_GUARD {
            Err(Error::PoleApproach { t, theta })
        } else {
            Ok(())
        }
    };
    let rhs = |theta: f64, phi: f64| -> (f64, f64) {
        (
            -phi.sin(),
            lambda * theta.cos() - phi.cos() * theta.cos() / theta.sin() + delta_prime,
        )
    };
    let mut theta = start.theta();
    let mut phi = start.phi();
    guard(theta, 0.0)?;
    let n_steps = (t_max / dt).ceil() as usize;
    let mut samples = Vec::with_capacity(n_steps + 1);
    samples.push((0.0, SphericalPoint::fold(theta, phi)));
    for step in 0..n_steps {
        let t = step as f64 * dt;
        let (k1t, k1p) = rhs(theta, phi);
        let (k2t, k2p) = rhs(theta + 0.5 * dt * k1t, phi + 0.5 * dt * k1p);
        let (k3t, k3p) = rhs(theta + 0.5 * dt * k2t, phi + 0.5 * dt * k2p);
        let (k4t, k4p) = rhs(theta + dt * k3t, phi + dt * k3p);
        theta += dt / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
        phi += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        guard(theta, t + dt)?;
        samples.push((t + dt, SphericalPoint::fold(theta, phi)));
    }
    Ok(FlowTrajectory { samples })
}

/// Search configuration for the cat-creation time. The defaults cover the
/// bifurcation regime Lambda in [1, 4]; the time grid is in units of
/// 1/Omega_c and gets rescaled internally.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatSearch {
    /// Upper time bound, units of 1/Omega_c.
    pub t_max: f64,
    /// Time grid step, units of 1/Omega_c.
    pub dt: f64,
    /// Smallest branch separation considered a cat. Separations below this
    /// are indistinguishable from a single coherent state at small N and
    /// would pin the search to t = 0.
    pub delta_theta_min: f64,
    pub n_delta_theta: usize,
    pub n_phi: usize,
}

impl Default for CatSearch {
    fn default() -> Self {
        Self {
            t_max: 14.0,
            dt: 0.02,
            delta_theta_min: 0.25 * std::f64::consts::PI,
            n_delta_theta: 152,
            n_phi: 24,
        }
    }
}

/// Outcome of the cat-time search.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CatTime {
    /// Cat creation time in seconds (1/Omega_c units when Omega_c = 1).
    pub tau_c: f64,
    pub delta_theta: f64,
    pub phi_c: f64,
    pub fidelity: f64,
}

struct CatLibrary {
    cats: Vec<SpinState>,
    delta_thetas: Vec<f64>,
    phis: Vec<f64>,
}

impl CatLibrary {
    fn build(space: DickeSpace, search: &CatSearch) -> Self {
        let delta_thetas: Vec<f64> = (0..search.n_delta_theta)
            .map(|i| {
                search.delta_theta_min
                    + (std::f64::consts::PI - search.delta_theta_min) * i as f64
                        / (search.n_delta_theta - 1) as f64
            })
            .collect();
        let phis: Vec<f64> = (0..search.n_phi)
            .map(|i| 2.0 * std::f64::consts::PI * i as f64 / search.n_phi as f64)
            .collect();
        let mut cats = Vec::with_capacity(delta_thetas.len() * phis.len());
        for dt in &delta_thetas {
            for ph in &phis {
                cats.push(cat_state(space, *dt, *ph).expect("angles in range"));
            }
        }
        Self {
            cats,
            delta_thetas,
            phis,
        }
    }

    ///

    fn best_fidelity(&self, state: &SpinState) -> (f64, f64, f64) {
        let mut best = (f64::MIN, 0.0, 0.0);
        for (i, cat) in self.cats.iter().enumerate() {
            let f = cat.fidelity(state);
            if f > best.0 {
                let idt = i / self.phis.len();
                let iph = i % self.phis.len();
                best = (f, self.delta_thetas[idt], self.phis[iph]);
            }
        }
        best
    }
}

/// Locate the cat-creation time: evolve the equatorial coherent state,
/// track the best cat fidelity over the (delta_theta, phi_c) grid, and take
/// the *first local maximum after the squeezing dip* of that curve.
///
/// Rationale for the dip rule: the initial coherent state already overlaps
/// weakly separated cats, so a plain global argmax would return t = 0. The
/// fidelity first falls while the state squeezes, then recovers as the two
/// branches form; the first recovery peak is the creation time. Later
/// recurrences are ignored (earliest time wins).
pub fn cat_time(space: DickeSpace, params: &LmgParams) -> Result<CatTime> {
    cat_time_with(space, params, &CatSearch::default())
}

pub fn cat_time_with(space: DickeSpace, params: &LmgParams, search: &CatSearch) -> Result<CatTime> {
    let lambda = params.lambda(space.n_atoms());
    if lambda < 1.0 {
        return Err(Error::Config(format!(
            "cat time needs the bifurcated regime Lambda >= 1 (got {lambda})"
        )));
    }
    let h = build_hamiltonian(space, params);
    let psi0 = coherent_spin_state(
        space,
        SphericalPoint::new(std::f64::consts::PI / 2.0, 0.0)?,
    );
    let evolution = TimeEvolution::new(&psi0, &h)?;
    let library = CatLibrary::build(space, search);

    let t_scale = 1.0 / params.omega_c;
    let n_t = (search.t_max / search.dt).round() as usize;
    let mut fstar = Vec::with_capacity(n_t);
    let mut args = Vec::with_capacity(n_t);
    for i in 0..n_t {
        let t = i as f64 * search.dt * t_scale;
        let state = evolution.state_at(t);
        let (f, dth, ph) = library.best_fidelity(&state);
        fstar.push(f);
        args.push((dth, ph));
    }

    let t_max_phys = search.t_max * t_scale;
    let dip = (1..n_t - 1)
        .find(|&i| fstar[i] <= fstar[i - 1] && fstar[i] <= fstar[i + 1])
        .ok_or(Error::NoCatTime { t_max: t_max_phys })?;
    let peak = (dip + 1..n_t - 1)
        .find(|&i| fstar[i] >= fstar[i - 1] && fstar[i] >= fstar[i + 1])
        .ok_or(Error::NoCatTime { t_max: t_max_phys })?;

    // parabolic refinement of the peak time on the fidelity curve
    let (fm, f0, fp) = (fstar[peak - 1], fstar[peak], fstar[peak + 1]);
    let denom = fm - 2.0 * f0 + fp;
    let shift = if denom.abs() < 1e-300 {
        0.0
    } else {
        (0.5 * (fm - fp) / denom).clamp(-1.0, 1.0)
    };
    let tau_c = (peak as f64 + shift) * search.dt * t_scale;
    let state = evolution.state_at(tau_c);
    let (fidelity, delta_theta, phi_c) = library.best_fidelity(&state);
    let _ = args;
    Ok(CatTime {
        tau_c,
        delta_theta,
        phi_c,
        fidelity,
    })
}

/// Revival of the initial coherent state near twice the creation time.
/// Returns the peak overlap |<psi0|psi(t)>|^2 and its time over the window
/// [1.7, 2.6] tau_c; the revival sits slightly after 2 tau_c.
pub fn revival_near(space: DickeSpace, params: &LmgParams, tau_c: f64) -> Result<(f64, f64)> {
    let h = build_hamiltonian(space, params);
    let psi0 = coherent_spin_state(
        space,
        SphericalPoint::new(std::f64::consts::PI / 2.0, 0.0)?,
    );
    let evolution = TimeEvolution::new(&psi0, &h)?;
    let dt = 0.01 / params.omega_c;
    let (mut best_t, mut best_f) = (0.0, f64::MIN);
    let mut t = 1.7 * tau_c;
    while t <= 2.6 * tau_c {
        let f = evolution.state_at(t).fidelity(&psi0);
        if f > best_f {
            best_f = f;
            best_t = t;
        }
        t += dt;
    }
    Ok((best_t, best_f))
}

/// One row of the bifurcation sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRow {
    pub lambda: f64,
    pub metrics: Option<SweepMetrics>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SweepMetrics {
    pub tau_c: f64,
    pub delta_theta: f64,
    pub phi_c: f64,
    pub fidelity: f64,
    pub fisher_per_atom: f64,
    pub fisher_db: f64,
}

/// Sweep the drive ratio Lambda at fixed delta' and report the cat metrics
/// at each creation time. Rows that fail to bifurcate carry the error.
pub fn sweep_lambda(space: DickeSpace, lambdas: &[f64], delta_prime: f64) -> Result<Vec<SweepRow>> {
    if lambdas.is_empty() {
        return Err(Error::EmptySweep);
    }
    Ok(lambdas
        .iter()
        .map(|&lambda| {
            let params = LmgParams::from_dimensionless(lambda, delta_prime, space.n_atoms(), 1.0);
            match cat_time(space, &params) {
                Ok(ct) => {
                    let h = build_hamiltonian(space, &params);
                    let psi0 = coherent_spin_state(
                        space,
                        SphericalPoint::new(std::f64::consts::PI / 2.0, 0.0).unwrap(),
                    );
                    match evolve(&psi0, &h, ct.tau_c) {
                        Ok(state) => {
                            let fisher = fisher_information(&state);
                            SweepRow {
                                lambda,
                                metrics: Some(SweepMetrics {
                                    tau_c: ct.tau_c,
                                    delta_theta: ct.delta_theta,
                                    phi_c: ct.phi_c,
                                    fidelity: ct.fidelity,
                                    fisher_per_atom: fisher.per_atom,
                                    fisher_db: fisher.db,
                                }),
                                error: None,
                            }
                        }
                        Err(e) => SweepRow {
                            lambda,
                            metrics: None,
                            error: Some(e.to_string()),
                        },
                    }
                }
                Err(e) => SweepRow {
                    lambda,
                    metrics: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn hamiltonian_limits() {
        let space = DickeSpace::new(6).unwrap();
        // chi = delta = 0: eigenvalues Omega_c * m
        let params = LmgParams {
            chi: 0.0,
            delta: 0.0,
            omega_c: 0.7,
        };
        let h = build_hamiltonian(space, &params);
        let eig = crate::linalg::eigh_real(&h).unwrap();
        for (k, w) in eig.eigenvalues.iter().enumerate() {
            let m = -space.j() + k as f64; // ascending order from eigh
            assert_abs_diff_eq!(*w, 0.7 * m, epsilon = 1e-10);
        }
        // Omega_c = delta = 0: diagonal chi m^2
        let params = LmgParams {
            chi: 0.3,
            delta: 0.0,
            omega_c: 0.0,
        };
        let h = build_hamiltonian(space, &params);
        for k in 0..space.dim() {
            let m = space.m(k);
            assert_abs_diff_eq!(h[[k, k]], 0.3 * m * m, epsilon = 1e-15);
            for l in 0..space.dim() {
                if l != k {
                    assert_eq!(h[[k, l]], 0.0);
                }
            }
        }
    }

    #[test]
    fn two_atom_hamiltonian_matches_hand_computation() {
        // N=2 -> spin-1 matrices: Jz = diag(1,0,-1), Jx off-diagonals 1/sqrt2
        let space = DickeSpace::new(2).unwrap();
        let params = LmgParams {
            chi: 0.5,
            delta: 0.2,
            omega_c: 1.3,
        };
        let h = build_hamiltonian(space, &params);
        let s = 1.0 / 2.0_f64.sqrt();
        let expect = [
            [0.5 + 0.2, 1.3 * s, 0.0],
            [1.3 * s, 0.0, 1.3 * s],
            [0.0, 1.3 * s, 0.5 - 0.2],
        ];
        for i in 0..3 {
            for k in 0..3 {
                assert_abs_diff_eq!(h[[i, k]], expect[i][k], epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn evolve_identity_at_t0_and_unitarity() {
        let space = DickeSpace::new(12).unwrap();
        let params = LmgParams::from_dimensionless(2.0, 0.1, 12, 1.0);
        let h = build_hamiltonian(space, &params);
        let psi0 = coherent_spin_state(space, SphericalPoint::new(1.0, 0.4).unwrap());
        let same = evolve(&psi0, &h, 0.0).unwrap();
        assert!(psi0.fidelity(&same) > 1.0 - 1e-12);
        let later = evolve(&psi0, &h, 3.7).unwrap();
        assert_abs_diff_eq!(later.norm(), 1.0, epsilon = 1e-9);
        let e0 = expectation_real(&h, psi0.amplitudes());
        let e1 = expectation_real(&h, later.amplitudes());
        assert!((e0 - e1).abs() <= 1e-8 * e0.abs().max(1.0));
    }

    #[test]
    fn one_axis_twisting_revival() {
        // Omega_c = delta = 0: spectrum chi m^2, full revival at t = 2 pi/chi
        let space = DickeSpace::new(21).unwrap();
        let chi = 0.37;
        let params = LmgParams {
            chi,
            delta: 0.0,
            omega_c: 0.0,
        };
        let h = build_hamiltonian(space, &params);
        let psi0 = coherent_spin_state(space, SphericalPoint::new(PI / 2.0, 0.0).unwrap());
        let t = 2.0 * PI / chi;
        let back = evolve(&psi0, &h, t).unwrap();
        assert!(psi0.fidelity(&back) > 1.0 - 1e-8);
    }

    #[test]
    fn flow_fixed_points() {
        // unstable point at the +x pole of the flow
        let p = SphericalPoint::new(PI / 2.0, 0.0).unwrap();
        let (td, pd) = semiclassical_flow(&p, 2.0, 0.0).unwrap();
        assert_abs_diff_eq!(td, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(pd, 0.0, epsilon = 1e-15);
        // phi = pi/2: theta_dot = -1 (units of Omega_c)
        let p = SphericalPoint::new(1.0, PI / 2.0).unwrap();
        let (td, _) = semiclassical_flow(&p, 2.0, 0.0).unwrap();
        assert_abs_diff_eq!(td, -1.0, epsilon = 1e-15);
        // Lambda = 2 branch fixed points: 2 cos t = cot t  =>  sin t = 1/2
        for theta in [PI / 6.0, 5.0 * PI / 6.0] {
            let p = SphericalPoint::new(theta, 0.0).unwrap();
            let (td, pd) = semiclassical_flow(&p, 2.0, 0.0).unwrap();
            assert_abs_diff_eq!(td, 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(pd, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn flow_rejects_poles() {
        let p = SphericalPoint::new(1e-6, 0.0).unwrap();
        assert!(matches!(
            semiclassical_flow(&p, 2.0, 0.0),
            Err(Error::PolarSingularity(_))
        ));
    }

    #[test]
    fn stationary_trajectory_at_fixed_point() {
        let start = SphericalPoint::new(PI / 6.0, 0.0).unwrap();
        let traj = integrate_flow(&start, 2.0, 0.0, 2.0, 1e-3).unwrap();
        for (_, p) in &traj.samples {
            assert!(p.angle_to(&start) < 1e-9);
        }
    }

    #[test]
    fn lambda_zero_flow_is_circle_about_x() {
        let start = SphericalPoint::new(1.2, 0.8).unwrap();
        let traj = integrate_flow(&start, 0.0, 0.0, 6.0, 1e-3).unwrap();
        // x-component conserved on a circle about the x axis
        let x0 = start.unit_vector()[0];
        for (_, p) in &traj.samples {
            assert_abs_diff_eq!(p.unit_vector()[0], x0, epsilon = 1e-6);
        }
    }

    #[test]
    fn flow_energy_conserved() {
        let start = SphericalPoint::new(1.4, 0.3).unwrap();
        let (lambda, dp) = (2.0, 0.15);
        let e0 = classical_energy(&start, lambda, dp);
        let traj = integrate_flow(&start, lambda, dp, 10.0, 1e-3).unwrap();
        for (_, p) in &traj.samples {
            let e = classical_energy(p, lambda, dp);
            assert!((e - e0).abs() <= 1e-6 * e0.abs().max(1.0));
        }
    }

    #[test]
    fn jz_distribution_symmetric_without_linear_term() {
        let space = DickeSpace::new(14).unwrap();
        let params = LmgParams::from_dimensionless(2.0, 0.0, 14, 1.0);
        let h = build_hamiltonian(space, &params);
        let psi0 = coherent_spin_state(space, SphericalPoint::new(PI / 2.0, 0.0).unwrap());
        let evo = TimeEvolution::new(&psi0, &h).unwrap();
        for t in [0.5, 1.5, 3.0, 4.5] {
            let pops = evo.state_at(t).populations();
            let dim = space.dim();
            for k in 0..dim {
                assert_abs_diff_eq!(pops[k], pops[dim - 1 - k], epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn cat_time_requires_bifurcation() {
        let space = DickeSpace::new(10).unwrap();
        let params = LmgParams::from_dimensionless(0.5, 0.0, 10, 1.0);
        assert!(cat_time(space, &params).is_err());
    }

    #[test]
    fn empty_sweep_rejected() {
        let space = DickeSpace::new(10).unwrap();
        assert!(matches!(
            sweep_lambda(space, &[], 0.0),
            Err(Error::EmptySweep)
        ));
    }

    #[test]
    fn lambda_zero_keeps_css_character() {
        // linear dynamics preserve the coherent state: at all times the
        // best separated cat stays below the best single coherent state
        let space = DickeSpace::new(16).unwrap();
        let params = LmgParams::from_dimensionless(0.0, 0.0, 16, 1.0);
        let h = build_hamiltonian(space, &params);
        let psi0 = coherent_spin_state(space, SphericalPoint::new(PI / 2.0, 0.0).unwrap());
        let evo = TimeEvolution::new(&psi0, &h).unwrap();
        let search = CatSearch::default();
        let lib = CatLibrary::build(space, &search);
        for t in [0.7, 1.9, 3.3] {
            let state = evo.state_at(t);
            let (f_sep, _, _) = lib.best_fidelity(&state);
            let f_css = (0..24)
                .map(|i| {
                    let phi = i as f64 * PI / 12.0;
                    cat_state(space, 0.0, phi).unwrap().fidelity(&state)
                })
                .fold(f64::MIN, f64::max);
            assert!(f_sep < f_css, "t={t}: separated {f_sep} vs css {f_css}");
        }
    }
}
