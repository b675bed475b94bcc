#pragma once

// Independent ground-state energies by direct numerical integration of the
// complex Schrödinger equation -psi'' + (x^2/4 + i l x^3) psi = E psi on
// the real axis: decaying WKB data is imposed at +-L, both half-lines are
// integrated inward with an adaptive Runge-Kutta scheme, and a secant
// iteration drives the matching determinant at the match point to zero.

#include <complex>

namespace ptcubic {

struct ShootingConfig {
    double lambda = 0.0;           // coupling, >= 0
    double domain_radius = 0.0;    // endpoints +-L; 0 = choose adaptively
    double step_tolerance = 1e-12; // local error per step (abs and rel)
    double match_point = 0.0;
    std::complex<double> energy_guess{0.5, 0.0};
    int max_iterations = 60;
    double root_tolerance = 1e-10; // on the normalized matching determinant
    double energy_bound = 50.0;    // basin-escape guard on |E|
    bool renormalize = true;       // rescale psi when it exceeds the ceiling
    double renorm_ceiling = 1e100;
};

enum class Side { left, right };

struct HalfLineResult {
    std::complex<double> psi;
    std::complex<double> dpsi;
};

// Integrate one half-line inward from the decaying WKB boundary data
//   psi(+-L) = 1,  psi'(+-L) = -+ sqrt(Q(+-L)),  Q = x^2/4 + i l x^3 - E,
// (square-root branch with positive real part) to the match point, and
// return psi, psi' there normalized so |psi| = 1.  Throws SolverError on
// overflow past the renormalization ceiling when renormalization is off,
// and on a failed asymptotic-region precondition (Re sqrt(Q(+-L)) <= 0).
HalfLineResult integrate_halfline(double lambda, std::complex<double> E,
                                  Side side, const ShootingConfig& config);

// Normalized matching determinant D(E) = psi_L psi'_R - psi'_L psi_R with
// both sides scaled to |psi| = 1 at the match point.
std::complex<double> matching_determinant(double lambda, std::complex<double> E,
                                          const ShootingConfig& config);

struct EigenResult {
    std::complex<double> energy;
    double residual = 0.0; // |D(E)| at convergence
    int iterations = 0;
    ShootingConfig config_echo;
};

// Secant iteration on D(E) from config.energy_guess and the offset second
// point guess*(1 + 1e-3), until |D| <= root_tolerance.  Throws SolverError
// on non-convergence after max_iterations or when |E| escapes energy_bound.
EigenResult solve_ground_energy(double lambda, ShootingConfig config);

// The domain radius the solver would use for this configuration: the
// smallest L (on a 1/4 grid) with Re Int sqrt(Q) dx >= 40 between the
// turning region and both endpoints, falling back to 12 when the scan
// cannot establish the bound.
double choose_domain_radius(double lambda, std::complex<double> E);

} // namespace ptcubic
