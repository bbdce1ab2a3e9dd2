//! Centralized numerical tolerances.
//!
//! Every threshold used by validation, verdicts and guards lives here so
//! that a single record documents the numerical contract of the crate.

/// Tolerance record with the crate-wide defaults.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max |rho - rho^dagger| entry allowed at construction.
    pub hermiticity: f64,
    /// |Tr rho - 1| allowed at construction.
    pub trace_exact: f64,
    /// |Tr rho - 1| allowed after channel application.
    pub trace_channel: f64,
    /// Most negative eigenvalue tolerated by the PSD check.
    pub psd_floor: f64,
    /// QPD minima below this count as genuine nonclassicality.
    pub negativity_threshold: f64,
    /// PT eigenvalues below this count as NPT.
    pub pt_threshold: f64,
    /// Largest ordering parameter for which QPD evaluation is attempted.
    pub s_max: f64,
    /// Imaginary part tolerated before taking the real part of a QPD or
    /// witness value.
    pub imag_defect: f64,
    /// Quadrature integrands must decay below this at the grid boundary.
    pub boundary_decay: f64,
    /// Gram condition numbers above this are treated as degenerate.
    pub gram_condition_limit: f64,
    /// Coherent amplitudes are guarded by |alpha|^2 <= dim * this factor.
    pub coherent_guard_fraction: f64,
    /// Witness verdict slack around [0, g_tilde].
    pub witness_bound_slack: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermiticity: 1e-12,
            trace_exact: 1e-12,
            trace_channel: 1e-6,
            psd_floor: -1e-10,
            negativity_threshold: -1e-6,
            pt_threshold: -1e-8,
            s_max: 0.99,
            imag_defect: 1e-8,
            boundary_decay: 1e-8,
            gram_condition_limit: 1e12,
            coherent_guard_fraction: 0.25,
            witness_bound_slack: 1e-9,
        }
    }
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        hermiticity: 1e-12,
        trace_exact: 1e-12,
        trace_channel: 1e-6,
        psd_floor: -1e-10,
        negativity_threshold: -1e-6,
        pt_threshold: -1e-8,
        s_max: 0.99,
        imag_defect: 1e-8,
        boundary_decay: 1e-8,
        gram_condition_limit: 1e12,
        coherent_guard_fraction: 0.25,
        witness_bound_slack: 1e-9,
    };
}

/// Default single-mode Fock cutoff.
pub const DEFAULT_DIM: usize = 40;
/// Default per-mode cutoff for two-mode states.
pub const DEFAULT_DIM_TWO_MODE: usize = 25;
