#include "gridplans/bounds.hpp"

#include "gridplans/errors.hpp"
#include "gridplans/trees.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace gridplans {

BigCount binomial(unsigned long m, unsigned long j) {
    BigCount out;
    mpz_bin_uiui(out.get_mpz_t(), m, j);
    return out;
}

BigCount upper_bound_exact(int n) {
    if (n < 1) throw MalformedInput("grid side must be positive");
    const unsigned long edges = 2ul * n * (n - 1);
    return spanning_tree_count(n) * binomial(edges, static_cast<unsigned long>(n - 1));
}

BigCount trivial_upper_bound(int n) {
    if (n < 1) throw MalformedInput("grid side must be positive");
    BigCount out = 1;
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), 2ul * n * (n - 1));
    return out;
}

BigCount lower_bound_exact(int n) {
    if (n < 6 || n % 6 != 0)
        throw UnsupportedResidue("perturbation lower bound requires n ≡ 0 (mod 6), n ≥ 6");
    BigCount out;
    mpz_ui_pow_ui(out.get_mpz_t(), 3, static_cast<unsigned long>(n / 6) * (n - 3));
    return out;
}

BigCount compact_count_upper(int n, double eps) {
    if (n < 1) throw MalformedInput("grid side must be positive");
    if (eps <= 0.0) throw MalformedInput("eps must be positive");
    const long top = static_cast<long>(std::floor(eps * n * n));
    BigCount total = 0;
    const unsigned long edges = 2ul * n * (n - 1);
    for (long j = n - 1; j <= top; ++j)
        total += binomial(edges, static_cast<unsigned long>(j));
    return total;
}

EpsilonSolution epsilon_threshold() {
    // (2e/ε)^ε = 3^{1/6}  ⇔  ε(1 + ln2 − lnε) = (ln3)/6, increasing in ε on
    // the bracket, so bisection converges to the unique crossing.
    const double target = std::log(3.0) / 6.0;
    auto f = [&](double e) { return e * (1.0 + std::log(2.0) - std::log(e)) - target; };
    double lo = 1e-6, hi = 0.5;
    if (!(f(lo) < 0.0 && f(hi) > 0.0))
        throw std::logic_error("threshold bracket lost its sign change");
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    EpsilonSolution sol;
    sol.root = 0.5 * (lo + hi);
    sol.residual = std::abs(std::pow(2.0 * std::exp(1.0) / sol.root, sol.root) -
                            std::pow(3.0, 1.0 / 6.0));
    return sol;
}

BoundsReport bounds_report(int n, const std::optional<BigCount>& exact) {
    if (n < 1) throw MalformedInput("grid side must be positive");
    BoundsReport r;
    r.n = n;
    r.upper = upper_bound_exact(n);
    r.log_upper = natural_log(r.upper);
    if (n >= 6 && n % 6 == 0) {
        r.lower = lower_bound_exact(n);
        r.log_lower = natural_log(*r.lower);
    }
    if (exact) {
        r.exact = *exact;
        r.log_exact = natural_log(*r.exact);
    }
    return r;
}

std::string bounds_csv(const std::vector<BoundsReport>& reports) {
    std::ostringstream out;
    out << "n,lower,exact,upper,log_lower,log_exact,log_upper\n";
    out.precision(9);
    for (const auto& r : reports) {
        out << r.n << ',';
        if (r.lower) out << to_decimal(*r.lower);
        out << ',';
        if (r.exact) out << to_decimal(*r.exact);
        out << ',' << to_decimal(r.upper) << ',';
        if (r.log_lower) out << *r.log_lower;
        out << ',';
        if (r.log_exact) out << *r.log_exact;
        out << ',' << r.log_upper << '\n';
    }
    return out.str();
}

std::map<int, BigCount> load_known_counts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open known counts file: " + path.string());
    std::map<int, BigCount> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw MalformedInput("known counts row lacks a comma: " + line);
        const std::string n_text = line.substr(0, comma);
        const std::string count_text = line.substr(comma + 1);
        if (n_text == "n") continue; // header
        try {
            out[std::stoi(n_text)] = BigCount(count_text);
        } catch (const std::exception&) {
            throw MalformedInput("bad known counts row: " + line);
        }
    }
    return out;
}

} // namespace gridplans
