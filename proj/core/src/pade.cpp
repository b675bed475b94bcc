#include "ptcubic/pade.hpp"
#include "ptcubic/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace ptcubic {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

void trim_trailing_zeros(RationalPolynomial& p) {
    while (!p.coefficients.empty() && p.coefficients.back() == 0)
        p.coefficients.pop_back();
}

std::string index_tag(int N, int M) {
    return "(" + std::to_string(N) + ", " + std::to_string(M) + ")";
}

// Solve the M x M rational system A q = rhs exactly by fraction-free
// (Bareiss) elimination: each row is first scaled to integers, then the
// elimination keeps every intermediate entry an exact integer, with the
// single division per entry known to be exact.  Back substitution is done
// over rationals.  Returns empty on a singular system.
std::optional<std::vector<Rat>> solve_bareiss(std::vector<std::vector<Rat>> A,
                                              std::vector<Rat> rhs) {
    const int n = static_cast<int>(A.size());
    // Integer augmented matrix, rows scaled by the LCM of their denominators.
    std::vector<std::vector<Int>> w(static_cast<size_t>(n),
                                    std::vector<Int>(static_cast<size_t>(n) + 1));
    for (int i = 0; i < n; ++i) {
        Int scale = denominator(rhs[static_cast<size_t>(i)]);
        for (int j = 0; j < n; ++j)
            scale = lcm(scale, denominator(A[static_cast<size_t>(i)][static_cast<size_t>(j)]));
        for (int j = 0; j < n; ++j) {
            const Rat& a = A[static_cast<size_t>(i)][static_cast<size_t>(j)];
            w[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                numerator(a) * (scale / denominator(a));
        }
        const Rat& b = rhs[static_cast<size_t>(i)];
        w[static_cast<size_t>(i)][static_cast<size_t>(n)] =
            numerator(b) * (scale / denominator(b));
    }

    Int prev(1);
    for (int k = 0; k < n; ++k) {
        if (w[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (w[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return std::nullopt;
            std::swap(w[static_cast<size_t>(k)], w[static_cast<size_t>(pivot)]);
        }
        const Int& pk = w[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            const Int aik = w[static_cast<size_t>(i)][static_cast<size_t>(k)];
            for (int j = k + 1; j <= n; ++j) {
                Int& wij = w[static_cast<size_t>(i)][static_cast<size_t>(j)];
                wij = (pk * wij - aik * w[static_cast<size_t>(k)][static_cast<size_t>(j)]) / prev;
            }
            w[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = pk;
    }

    std::vector<Rat> x(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Rat acc(w[static_cast<size_t>(i)][static_cast<size_t>(n)]);
        for (int j = i + 1; j < n; ++j)
            acc -= Rat(w[static_cast<size_t>(i)][static_cast<size_t>(j)]) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] = acc / Rat(w[static_cast<size_t>(i)][static_cast<size_t>(i)]);
    }
    return x;
}

} // namespace

Rat RationalPolynomial::operator()(const Rat& t) const {
    Rat acc(0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

PadeApproximant build_pade(const std::vector<Rat>& c, int N, int M) {
    if (N < 0 || M < 0) throw InputError("Padé degrees must be nonnegative");
    if (static_cast<int>(c.size()) < N + M + 1)
        throw InputError("need " + std::to_string(N + M + 1) +
                         " series coefficients for an [" + std::to_string(N) + "/" +
                         std::to_string(M) + "] approximant, got " +
                         std::to_string(c.size()));

    auto coeff = [&](int idx) -> Rat {
        return idx >= 0 ? c[static_cast<size_t>(idx)] : Rat(0);
    };

    // Denominator q_0 = 1, q_1..q_M from the order-matching conditions at
    // powers t^{N+1}..t^{N+M}: sum_{j=1..M} c_{n-j} q_j = -c_n.
    std::vector<Rat> q{Rat(1)};
    if (M > 0) {
        std::vector<std::vector<Rat>> A(static_cast<size_t>(M),
                                        std::vector<Rat>(static_cast<size_t>(M)));
        std::vector<Rat> rhs(static_cast<size_t>(M));
        for (int row = 0; row < M; ++row) {
            const int n = N + 1 + row;
            for (int j = 1; j <= M; ++j)
                A[static_cast<size_t>(row)][static_cast<size_t>(j) - 1] = coeff(n - j);
            rhs[static_cast<size_t>(row)] = -coeff(n);
        }
        auto sol = solve_bareiss(std::move(A), std::move(rhs));
        if (!sol)
            throw PadeError("singular denominator system for approximant " +
                            index_tag(N, M) + " (blocked table)");
        q.insert(q.end(), sol->begin(), sol->end());
    }

    // Numerator p_i = sum_{j=0..min(i,M)} q_j c_{i-j} for i = 0..N.
    std::vector<Rat> p(static_cast<size_t>(N) + 1, Rat(0));
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= std::min(i, M); ++j)
            p[static_cast<size_t>(i)] += q[static_cast<size_t>(j)] * coeff(i - j);

    PadeApproximant pa;
    pa.num_degree = N;
    pa.den_degree = M;
    pa.numerator.coefficients = std::move(p);
    pa.denominator.coefficients = std::move(q);
    trim_trailing_zeros(pa.numerator);
    trim_trailing_zeros(pa.denominator); // q_0 = 1, never empty
    return pa;
}

Rat evaluate_exact(const PadeApproximant& pa, const Rat& t) {
    Rat den = pa.denominator(t);
    if (den == 0)
        throw PadeError("approximant " + index_tag(pa.num_degree, pa.den_degree) +
                        " has an exact pole at the evaluation point");
    return pa.numerator(t) / den;
}

Rat evaluate_rounded(const PadeApproximant& pa, const Rat& t, int precision) {
    if (precision < 1) throw InputError("precision must be >= 1");
    return round_to_digits(evaluate_exact(pa, t), precision);
}

Real evaluate(const PadeApproximant& pa, const Rat& t, int precision) {
    return to_real(evaluate_rounded(pa, t, precision));
}

std::vector<Rat> subtracted_series(const PerturbationSeries& series) {
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(series.max_order));
    for (const Int& b : series.coefficients) c.emplace_back(b);
    return c;
}

PadeLadder ladder(const PerturbationSeries& series, const Rat& t, int depth,
                  int precision) {
    if (depth < 0) throw InputError("ladder depth must be >= 0");
    if (series.max_order < 2 * depth + 2)
        throw InputError("ladder depth " + std::to_string(depth) + " needs " +
                         std::to_string(2 * depth + 2) + " coefficients, series has " +
                         std::to_string(series.max_order));

    const std::vector<Rat> c = subtracted_series(series);
    PadeLadder out;
    out.t = t;
    out.depth = depth;
    out.precision = precision;
    out.diagonal.reserve(static_cast<size_t>(depth) + 1);
    out.subdiagonal.reserve(static_cast<size_t>(depth) + 1);
    for (int n = 0; n <= depth; ++n) {
        out.diagonal.push_back(evaluate_rounded(build_pade(c, n, n), t, precision));
        out.subdiagonal.push_back(evaluate_rounded(build_pade(c, n, n + 1), t, precision));
    }
    return out;
}

StieltjesReport stieltjes_check(const PadeLadder& ladder) {
    if (ladder.diagonal.empty() || ladder.subdiagonal.empty())
        throw InputError("stieltjes_check requires a nonempty ladder");

    StieltjesReport report;
    report.margin = Rat(100, boost::multiprecision::pow(Int(10), static_cast<unsigned>(
                                 std::max(ladder.precision, 2)))); // 10^{2-p}

    struct Comparison {
        std::string label;
        Rat gap; // positive when the expected strict ordering holds
    };
    std::vector<Comparison> comparisons;

    const auto& sub = ladder.subdiagonal;
    const auto& diag = ladder.diagonal;
    for (size_t i = 0; i + 1 < sub.size(); ++i)
        comparisons.push_back({"subdiagonal[" + std::to_string(i) + "] < subdiagonal[" +
                                   std::to_string(i + 1) + "]",
                               sub[i + 1] - sub[i]});
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        comparisons.push_back({"diagonal[" + std::to_string(i + 1) + "] < diagonal[" +
                                   std::to_string(i) + "]",
                               diag[i] - diag[i + 1]});
    const Rat max_sub = *std::max_element(sub.begin(), sub.end());
    const Rat min_diag = *std::min_element(diag.begin(), diag.end());
    comparisons.push_back({"max(subdiagonal) < min(diagonal)", min_diag - max_sub});

    report.min_subdiagonal_gap = sub.size() > 1 ? comparisons.front().gap : Rat(0);
    for (size_t i = 0; i + 1 < sub.size(); ++i)
        report.min_subdiagonal_gap = std::min(report.min_subdiagonal_gap, comparisons[i].gap);
    report.min_diagonal_gap = diag.size() > 1 ? comparisons[sub.size() - 1].gap : Rat(0);
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        report.min_diagonal_gap =
            std::min(report.min_diagonal_gap, comparisons[sub.size() - 1 + i].gap);
    report.separation_gap = min_diag - max_sub;

    const Comparison* first_reversed = nullptr;
    const Comparison* first_tie = nullptr;
    for (const auto& cmp : comparisons) {
        if (cmp.gap < -report.margin) {
            if (!first_reversed) first_reversed = &cmp;
        } else if (cmp.gap <= report.margin) {
            if (!first_tie) first_tie = &cmp;
        }
    }

    if (first_reversed) {
        report.verdict = ChainVerdict::violated;
        report.first_violation = ChainViolation{first_reversed->label, first_reversed->gap};
    } else if (first_tie) {
        report.verdict = ChainVerdict::inconclusive;
        report.first_violation = ChainViolation{first_tie->label, first_tie->gap};
    } else {
        report.verdict = ChainVerdict::holds;
    }
    report.chain_holds = report.verdict == ChainVerdict::holds;
    return report;
}

EnergyEstimate energy_estimate(const PerturbationSeries& series, const Rat& lambda,
                               int depth, int precision) {
    EnergyEstimate est;
    est.lambda = lambda;
    est.depth = depth;
    est.precision = precision;
    const Rat t = lambda * lambda;
    const Rat half(1, 2);
    if (lambda == 0) {
        est.diag_energy = est.offdiag_energy = est.average = half;
        return est;
    }
    if (series.max_order < 2 * depth + 2)
        throw InputError("energy estimate at depth " + std::to_string(depth) + " needs " +
                         std::to_string(2 * depth + 2) + " coefficients, series has " +
                         std::to_string(series.max_order));
    const std::vector<Rat> c = subtracted_series(series);
    const Rat diag = t * evaluate_exact(build_pade(c, depth, depth), t) + half;
    const Rat offdiag = t * evaluate_exact(build_pade(c, depth, depth + 1), t) + half;
    est.diag_energy = round_to_digits(diag, precision);
    est.offdiag_energy = round_to_digits(offdiag, precision);
    est.average = round_to_digits((diag + offdiag) / 2, precision);
    return est;
}

} // namespace ptcubic
