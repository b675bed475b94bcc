#include "ptcubic/pade_oracle.hpp"
#include "ptcubic/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace ptcubic {

namespace {

// Plain Gauss-Jordan over rationals with row pivoting; empty on singular.
std::optional<std::vector<Rat>> solve_gauss(std::vector<std::vector<Rat>> A,
                                            std::vector<Rat> rhs) {
    const int n = static_cast<int>(A.size());
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (A[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(A[static_cast<size_t>(k)], A[static_cast<size_t>(pivot)]);
        std::swap(rhs[static_cast<size_t>(k)], rhs[static_cast<size_t>(pivot)]);
        const Rat pk = A[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int j = k; j < n; ++j) A[static_cast<size_t>(k)][static_cast<size_t>(j)] /= pk;
        rhs[static_cast<size_t>(k)] /= pk;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const Rat f = A[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (f == 0) continue;
            for (int j = k; j < n; ++j)
                A[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * A[static_cast<size_t>(k)][static_cast<size_t>(j)];
            rhs[static_cast<size_t>(i)] -= f * rhs[static_cast<size_t>(k)];
        }
    }
    return rhs;
}

} // namespace

PadeApproximant build_pade_oracle(const std::vector<Rat>& c, int N, int M) {
    if (N < 0 || M < 0) throw InputError("Padé degrees must be nonnegative");
    if (static_cast<int>(c.size()) < N + M + 1)
        throw InputError("oracle needs " + std::to_string(N + M + 1) +
                         " coefficients, got " + std::to_string(c.size()));

    auto coeff = [&](int idx) -> Rat {
        return idx >= 0 ? c[static_cast<size_t>(idx)] : Rat(0);
    };

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
        auto sol = solve_gauss(std::move(A), std::move(rhs));
        if (!sol)
            throw PadeError("oracle: singular denominator system for (" +
                            std::to_string(N) + ", " + std::to_string(M) + ")");
        q.insert(q.end(), sol->begin(), sol->end());
    }

    // Numerator as the truncation of series * denominator to degree N.
    std::vector<Rat> p(static_cast<size_t>(N) + 1, Rat(0));
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= std::min(i, M); ++j)
            p[static_cast<size_t>(i)] += q[static_cast<size_t>(j)] * coeff(i - j);

    PadeApproximant pa;
    pa.num_degree = N;
    pa.den_degree = M;
    pa.numerator.coefficients = std::move(p);
    pa.denominator.coefficients = std::move(q);
    while (!pa.numerator.coefficients.empty() && pa.numerator.coefficients.back() == 0)
        pa.numerator.coefficients.pop_back();
    while (!pa.denominator.coefficients.empty() && pa.denominator.coefficients.back() == 0)
        pa.denominator.coefficients.pop_back();
    return pa;
}

int order_matching_defect(const PadeApproximant& pa, const std::vector<Rat>& c) {
    const int N = pa.num_degree;
    const int M = pa.den_degree;
    auto num_coeff = [&](int i) -> Rat {
        return i < static_cast<int>(pa.numerator.coefficients.size())
                   ? pa.numerator.coefficients[static_cast<size_t>(i)]
                   : Rat(0);
    };
    auto den_coeff = [&](int i) -> Rat {
        return i < static_cast<int>(pa.denominator.coefficients.size())
                   ? pa.denominator.coefficients[static_cast<size_t>(i)]
                   : Rat(0);
    };
    for (int k = 0; k <= N + M; ++k) {
        Rat conv(0);
        for (int j = 0; j <= std::min(k, M); ++j)
            conv += den_coeff(j) * (k - j < static_cast<int>(c.size())
                                        ? c[static_cast<size_t>(k - j)]
                                        : Rat(0));
        if (num_coeff(k) - conv != 0) return k;
    }
    return -1;
}

} // namespace ptcubic
