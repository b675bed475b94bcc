#include "ptcubic/asymptotics.hpp"
#include "ptcubic/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <string>

namespace ptcubic {

namespace {

using boost::math::constants::pi;

Real two_pi_pow_3_2() {
    const Real tp = 2 * pi<Real>();
    return tp * sqrt(tp);
}

// Gamma(n + 1/2) = (2n-1)!! sqrt(pi) / 2^n, the double factorial exact.
Real gamma_half_integer(int n) {
    Int dfact(1);
    for (int k = 3; k <= 2 * n - 1; k += 2) dfact *= k;
    return to_real(dfact) * sqrt(pi<Real>()) / to_real(boost::multiprecision::pow(Int(2), static_cast<unsigned>(n)));
}

Real signed_leading(int n) {
    const Real magnitude = to_real(boost::multiprecision::pow(Int(60), static_cast<unsigned>(n))) *
                           sqrt(Real(60)) / two_pi_pow_3_2() * gamma_half_integer(n);
    return (n % 2 == 1) ? magnitude : -magnitude;
}

} // namespace

const std::array<Rat, 7>& WkbGrowthModel::correction_coefficients() {
    static const std::array<Rat, 7> coeffs = {
        Rat(Int("169"), Int("120")),
        Rat(Int("44507"), Int("28800")),
        Rat(Int("9563539"), Int("1920000")),
        Rat(Int("189244716209"), Int("8294400000")),
        Rat(Int("42943442679817"), Int("331776000000")),
        Rat(Int("342541916236654541"), Int("398131200000000")),
        Rat(Int("933142404651555165943"), Int("143327232000000000")),
    };
    return coeffs;
}

Real leading_growth_prediction(int n, int precision) {
    if (n < 1) throw InputError("growth prediction requires n >= 1");
    if (precision < 1) throw InputError("precision must be >= 1");
    return signed_leading(n);
}

Real wkb_growth_prediction(int n, int depth, int precision) {
    if (depth < 0 || depth > WkbGrowthModel::max_depth)
        throw InputError("depth must be between 0 and 7");
    if (n < depth + 1)
        throw InputError("corrected growth at depth " + std::to_string(depth) +
                         " requires n >= " + std::to_string(depth + 1) +
                         " so every denominator factor is positive");
    Real lead = leading_growth_prediction(n, precision);

    // Exact rational bracket 1 - sum_d r_d / prod_{i<=d} (n - (2i-1)/2).
    Rat bracket(1);
    Rat prod(1);
    const auto& r = WkbGrowthModel::correction_coefficients();
    for (int d = 1; d <= depth; ++d) {
        prod *= Rat(2 * n - (2 * d - 1), 2); // n - (2d-1)/2
        bracket -= r[static_cast<size_t>(d) - 1] / prod;
    }
    return lead * to_real(bracket);
}

GrowthReport growth_report(const PerturbationSeries& series, int depth, int precision) {
    if (series.max_order < 2)
        throw InputError("growth report requires a series of order >= 2");
    GrowthReport report;
    report.depth = depth;
    report.precision = precision;
    report.rows.reserve(static_cast<size_t>(series.max_order));
    for (int n = 1; n <= series.max_order; ++n) {
        GrowthRow row;
        row.n = n;
        row.b_n = series.b(n);
        row.wkb_depth = std::min(depth, n - 1);
        row.leading_prediction = leading_growth_prediction(n, precision);
        row.wkb_prediction = wkb_growth_prediction(n, row.wkb_depth, precision);
        const Real bn = to_real(row.b_n);
        row.leading_ratio = row.leading_prediction / bn;
        row.wkb_ratio = row.wkb_prediction / bn;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Real richardson_extrapolate(const std::vector<Real>& sequence, int r) {
    if (r < 0) throw InputError("Richardson order must be >= 0");
    const int N = static_cast<int>(sequence.size());
    if (N <= r)
        throw InputError("Richardson order " + std::to_string(r) + " needs more than " +
                         std::to_string(r) + " sequence entries, got " + std::to_string(N));
    // Tail entries correspond to n = N-r .. N; weights are exact rationals.
    Real acc(0);
    for (int k = 0; k <= r; ++k) {
        const int n = N - r + k; // sequence entry index n-1
        Int fact_k(1), fact_rk(1);
        for (int i = 2; i <= k; ++i) fact_k *= i;
        for (int i = 2; i <= r - k; ++i) fact_rk *= i;
        Rat weight = Rat(boost::multiprecision::pow(Int(n), static_cast<unsigned>(r)),
                         fact_k * fact_rk);
        if ((k + r) % 2 != 0) weight = -weight;
        acc += to_real(weight) * sequence[static_cast<size_t>(n) - 1];
    }
    return acc;
}

Real discontinuity(const Real& t, int precision) {
    if (!(t > 0)) throw InputError("discontinuity is defined for t > 0");
    if (precision < 1) throw InputError("precision must be >= 1");
    return -exp(Real(-1) / (60 * t)) / (2 * sqrt(2 * pi<Real>() * t));
}

DispersionMoment dispersion_moment(int n, const Integrand& D_of_minus_t,
                                   const QuadratureConfig& config) {
    if (n < 1) throw InputError("dispersion moment requires n >= 1");

    // Under u = 1/(60 t):  value = (60^n / pi) * Int_0^inf u^{n-1} D(-1/(60u)) du.
    // The integrand is assembled in log space so that the power factor and
    // the (typically exponentially small) D cannot overflow separately.
    Integrand integrand = [n, &D_of_minus_t](const Real& u) {
        const Real d = D_of_minus_t(Real(1) / (60 * u));
        if (d == 0) return Real(0);
        const Real magnitude = exp(Real(n - 1) * log(u) + log(abs(d)));
        return d < 0 ? Real(-magnitude) : magnitude;
    };

    QuadratureResult q = integrate_semi_infinite(integrand, config);
    const Real scale = to_real(boost::multiprecision::pow(Int(60), static_cast<unsigned>(n))) / pi<Real>();

    DispersionMoment out;
    out.value = scale * q.value;
    out.abs_value = abs(out.value);
    out.closed_form_reference = abs(leading_growth_prediction(n, kRealDigits));
    out.estimated_error = scale * q.estimated_error;
    out.nodes_used = q.nodes_used;
    return out;
}

ImEnergy im_energy(const Real& eps, int precision) {
    if (!(eps > 0)) throw InputError("im_energy is defined for eps > 0");
    if (precision < 1) throw InputError("precision must be >= 1");
    ImEnergy out;
    out.value = exp(Real(-1) / (60 * eps * eps)) / (two_pi_pow_3_2() * eps);
    out.underflowed_to_zero = (out.value == 0);
    return out;
}

BounceAction bounce_action(const Rat& eps, const QuadratureConfig& config) {
    if (!(eps > 0)) throw InputError("bounce action is defined for eps > 0");
    const Real e = to_real(eps);
    const Real xmax = Real(1) / (4 * e);

    // x = xmax sin^2(theta) turns the square-root turning point at xmax into
    // a smooth integrand on (0, pi/2); the radicand is clamped at zero to
    // absorb rounding at the endpoint where it vanishes quadratically.
    Integrand integrand = [&e, &xmax](const Real& theta) {
        const Real s = sin(theta), c = cos(theta);
        const Real x = xmax * s * s;
        Real radicand = x * x / 4 - e * x * x * x;
        if (radicand < 0) radicand = 0;
        const Real dx_dtheta = 2 * xmax * s * c;
        return Real(2 * sqrt(radicand) * dx_dtheta);
    };

    QuadratureResult q =
        integrate_finite(integrand, Real(0), pi<Real>() / 2, config);
    BounceAction out;
    out.numeric = q.value;
    out.closed_form = Rat(1) / (60 * eps * eps);
    out.estimated_error = q.estimated_error;
    out.nodes_used = q.nodes_used;
    return out;
}

} // namespace ptcubic
