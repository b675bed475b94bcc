#include "ptcubic/perturbation.hpp"
#include "ptcubic/errors.hpp"
#include "ptcubic/numeric.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace ptcubic {

RecursionState::RecursionState() {
    poly.push_back({Rat(1)}); // P_0 = 1
    energy.push_back(Rat(1, 2));
}

void advance_order(RecursionState& state) {
    const int k = state.order + 1;
    const auto& prev = state.poly[static_cast<size_t>(k) - 1];
    std::vector<Rat> cur(static_cast<size_t>(3 * k) + 1, Rat(0));

    // Only degrees with m ≡ k (mod 2) occur; solve from the top down.
    for (int m = 3 * k; m >= 1; m -= 2) {
        Rat t(0);
        if (m + 2 <= 3 * k) t += Rat((m + 1) * (m + 2)) * cur[static_cast<size_t>(m) + 2];
        if (m >= 3 && m - 3 <= 3 * (k - 1)) t -= prev[static_cast<size_t>(m) - 3];
        for (int j = 2; j <= k - 1; j += 2) { // odd E_j vanish
            if (m > 3 * (k - j)) continue;
            const Rat& a = state.poly[static_cast<size_t>(k - j)][static_cast<size_t>(m)];
            if (a != 0) t += state.energy[static_cast<size_t>(j)] * a;
        }
        cur[static_cast<size_t>(m)] = t / m;
    }

    Rat ek = Rat(-2) * cur[2];
    if (k % 2 == 1 && ek != 0)
        throw Error("internal", "odd-order energy correction E_" + std::to_string(k) +
                                    " is nonzero: recursion invariant broken");
    state.poly.push_back(std::move(cur));
    state.energy.push_back(std::move(ek));
    state.order = k;
}

PerturbationSeries compute_coefficients(int max_order, int order_ceiling) {
    if (max_order < 0) throw InputError("max_order must be >= 0");
    if (max_order > order_ceiling)
        throw ResourceError("requested order " + std::to_string(max_order) +
                            " exceeds the ceiling " + std::to_string(order_ceiling) +
                            " (coefficients grow super-factorially; raise the ceiling explicitly)");

    RecursionState state;
    PerturbationSeries series;
    series.max_order = max_order;
    series.coefficients.reserve(static_cast<size_t>(max_order));

    for (int n = 1; n <= max_order; ++n) {
        while (state.order < 2 * n) advance_order(state);
        Rat bn = state.energy[static_cast<size_t>(2 * n)];
        if (n % 2 == 1) bn = -bn; // b_n = (-1)^n E_{2n}
        if (boost::multiprecision::denominator(bn) != 1)
            throw Error("internal", "b_" + std::to_string(n) + " is not an integer");
        Int b = boost::multiprecision::numerator(bn);
        const bool expect_positive = (n % 2 == 1);
        if ((expect_positive && b <= 0) || (!expect_positive && b >= 0))
            throw Error("internal",
                        "sign alternation broken at n = " + std::to_string(n));
        series.coefficients.push_back(std::move(b));
    }
    return series;
}

namespace {

void check_alternation(const std::vector<Int>& coeffs) {
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        const bool expect_positive = (n % 2 == 1);
        if ((expect_positive && coeffs[i] <= 0) || (!expect_positive && coeffs[i] >= 0))
            throw CacheError("invariant violation at n = " + std::to_string(n) +
                             ": expected sign " + (expect_positive ? "+" : "-") +
                             " for b_" + std::to_string(n));
    }
}

} // namespace

void write_cache(const PerturbationSeries& series,
                 const std::filesystem::path& destination) {
    if (std::filesystem::exists(destination)) {
        std::ifstream existing(destination);
        std::string first_line;
        if (existing && std::getline(existing, first_line) &&
            first_line.rfind(kCacheHeaderPrefix, 0) == 0) {
            std::string tag = first_line.substr(std::string(kCacheHeaderPrefix).size());
            if (tag != series.hamiltonian_tag)
                throw CacheError("refusing to overwrite cache for different hamiltonian '" +
                                 tag + "' at " + destination.string());
        }
    }

    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open " + destination.string() + " for writing");
    out << kCacheHeaderPrefix << series.hamiltonian_tag << '\n';
    for (int n = 1; n <= series.max_order; ++n)
        out << n << '\t' << series.b(n).str() << '\n';
    out.flush();
    if (!out) throw CacheError("I/O failure writing " + destination.string());
}

PerturbationSeries read_cache(const std::filesystem::path& source) {
    PerturbationSeries series = read_cache_unvalidated(source);
    check_alternation(series.coefficients);
    return series;
}

PerturbationSeries read_cache_unvalidated(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw CacheError("cannot open " + source.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    if (content.empty() || content.back() != '\n')
        throw CacheError(source.string() + ": file must be newline-terminated");

    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < content.size()) {
        size_t nl = content.find('\n', pos);
        lines.push_back(content.substr(pos, nl - pos));
        pos = nl + 1;
    }

    PerturbationSeries series;
    const std::string prefix = kCacheHeaderPrefix;
    if (lines.empty() || lines[0].rfind(prefix, 0) != 0 ||
        lines[0].size() <= prefix.size())
        throw CacheError(source.string() + ": line 1: expected header '" + prefix +
                         "<hamiltonian_tag>'");
    series.hamiltonian_tag = lines[0].substr(prefix.size());

    static const std::regex line_re(R"(^([0-9]+)\t(-?[0-9]+)$)");
    for (size_t i = 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        std::smatch m;
        if (!std::regex_match(lines[i], m, line_re))
            throw CacheError(source.string() + ": line " + std::to_string(line_no) +
                             ": expected '<n>\\t<integer>'");
        long n = std::stol(m[1].str());
        if (n != static_cast<long>(i))
            throw CacheError(source.string() + ": line " + std::to_string(line_no) +
                             ": expected index " + std::to_string(i) + ", found " +
                             std::to_string(n));
        series.coefficients.push_back(parse_integer(m[2].str()));
    }
    series.max_order = static_cast<int>(series.coefficients.size());
    return series;
}

} // namespace ptcubic
