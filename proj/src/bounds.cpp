#include "netfix/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace netfix {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int t = 1; t <= k; ++t) {
        result *= n - k + t;
        result /= t;
    }
    return result;
}

double log2_big(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2 of a non-positive value");
    unsigned e = boost::multiprecision::msb(v);
    if (e <= 52) return std::log2(v.convert_to<double>());
    BigInt top = v >> (e - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(e - 52);
}

double entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("entropy argument outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

ClassicBounds classic_bounds(const SignedDigraph& d, int vertex_cap) {
    ClassicBounds b;
    b.c_plus = max_disjoint_nonneg_cycles(d, vertex_cap);
    b.k_plus = min_nonneg_fvs(d, vertex_cap);
    return b;
}

namespace {

double clamp_nonneg(double v) { return std::max(v, 0.0); }

bool all_arcs_signed(const SignedDigraph& d, Sign sign) {
    for (const auto& a : d.arcs())
        if (a.sign != sign) return false;
    return true;
}

BigInt binomial_prefix_sum(int n, int upto) {
    BigInt sum = 0;
    for (int k = 0; k <= std::min(upto, n); ++k) sum += binomial(n, k);
    return sum;
}

BigInt pow_big(int base, int exponent) {
    BigInt r = 1;
    for (int t = 0; t < exponent; ++t) r *= base;
    return r;
}

}  // namespace

RawClamped turan_lower(const SignedDigraph& d) {
    DegreeStats stats = degree_stats(d);
    const int n = d.vertex_count();
    double raw = static_cast<double>(stats.delta_zero) +
                 std::log2(4.0 / 3.0) * static_cast<double>(stats.delta_pm) -
                 std::log2(static_cast<double>(n));
    return {raw, clamp_nonneg(raw)};
}

std::optional<RawClamped> typical_lower(const SignedDigraph& d) {
    DegreeStats stats = degree_stats(d);
    const int n = d.vertex_count();
    double eps = std::log(4.0 * n) / 2.0;
    double delta = static_cast<double>(stats.delta);
    if (delta < eps) return std::nullopt;
    double raw = delta / 2.0 - std::sqrt(eps * delta) - std::log2(static_cast<double>(n)) - 1.0;
    return RawClamped{raw, clamp_nonneg(raw)};
}

std::optional<std::uint64_t> CodeSizeOracle::exact_size(int n, int d, int s, DistanceKind kind) {
    StateSpace space(n, s);
    if (space.size() > cap_) return std::nullopt;
    auto key = std::make_tuple(n, d, s, static_cast<int>(kind));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t size = max_code(n, d, s, kind, cap_).size();
    memo_[key] = size;
    return size;
}

std::optional<std::uint64_t> CodeSizeOracle::exact_constant_weight(int n, int d, int w) {
    if (binomial(n, w) > cap_) return std::nullopt;
    auto key = std::make_tuple(n, d, w);
    if (auto it = cw_memo_.find(key); it != cw_memo_.end()) return it->second;
    std::uint64_t size = max_constant_weight_code(n, d, w, cap_).size();
    cw_memo_[key] = size;
    return size;
}

CodeSizeOracle::Value CodeSizeOracle::upper_hamming(int n, int d, int s) {
    if (auto exact = exact_size(n, d, s, DistanceKind::hamming))
        return {static_cast<double>(*exact), true};
    double best = std::numeric_limits<double>::infinity();
    if (n - d + 1 >= 0) best = std::min(best, log2_big(pow_big(s, n - d + 1)));
    else best = 0.0;  // log2(1): only trivial codes remain
    if (s == 2) {
        BigInt denom = binomial_prefix_sum(n, (d - 1) / 2);
        best = std::min(best, static_cast<double>(n) - log2_big(denom));
    }
    return {std::exp2(best), false};
}

CodeSizeOracle::Value CodeSizeOracle::upper_max(int n, int d, int s) {
    if (auto exact = exact_size(n, d, s, DistanceKind::max))
        return {static_cast<double>(*exact), true};
    if (s != 2) return {std::exp2(n * std::log2(static_cast<double>(s))), false};
    BigInt denom = 0;
    for (int j = 0; j <= d - 1; ++j) denom += binomial(n / 2, j) + binomial((n + 1) / 2, j);
    double varshamov = std::exp2(static_cast<double>(n + 1) - log2_big(denom));
    double borden = static_cast<double>(d) * upper_hamming(n, 2 * d - 1, 2).size;
    return {std::min(varshamov, borden), false};
}

CodeSizeOracle::Value CodeSizeOracle::upper_min(int n, int d, int s) {
    if (auto exact = exact_size(n, d, s, DistanceKind::min))
        return {static_cast<double>(*exact), true};
    Value h = upper_hamming(n, 2 * d, s);
    return {h.size, false};
}

CodeSizeOracle::Value CodeSizeOracle::lower_min(int n, int d, int s) {
    if (auto exact = exact_size(n, d, s, DistanceKind::min))
        return {static_cast<double>(*exact), true};
    if (s == 2) {
        if (auto cw = exact_constant_weight(n, 2 * d, n / 2))
            return {std::max<double>(static_cast<double>(*cw), 1.0), false};
        BigInt denom = binomial_prefix_sum(n, 2 * d - 1);
        double estimate = std::exp2(log2_big(binomial(n, n / 2)) - log2_big(denom));
        return {std::max(estimate, 1.0), false};
    }
    return {1.0, false};
}

OracleBound coding_upper(const SignedDigraph& d, int s, CodeSizeOracle& oracle) {
    auto girth = nonneg_girth(d);
    if (!girth) return {0.0, true};
    const int n = d.vertex_count();
    const double logs = std::log2(static_cast<double>(s));
    OracleBound best;
    CodeSizeOracle::Value h = oracle.upper_hamming(n, *girth, s);
    best.value = std::log2(h.size) / logs;
    best.exact = h.exact;
    if (all_arcs_signed(d, Sign::negative)) {
        if (*girth % 2 != 0)
            throw std::logic_error("all-negative digraph with an odd non-negative girth");
        CodeSizeOracle::Value m = oracle.upper_min(n, *girth / 2, s);
        double v = std::log2(m.size) / logs;
        if (v < best.value) best = {v, m.exact};
    }
    if (all_arcs_signed(d, Sign::positive)) {
        CodeSizeOracle::Value mx = oracle.upper_max(n, *girth, s);
        double v = std::log2(mx.size) / logs;
        if (v < best.value) best = {v, mx.exact};
    }
    return best;
}

TwoForms sphere_packing_upper(const SignedDigraph& d) {
    auto girth = nonneg_girth(d);
    if (!girth) return {0.0, 0.0};
    const int n = d.vertex_count();
    const int radius = (*girth - 1) / 2;
    TwoForms forms;
    forms.exact_form = static_cast<double>(n) - log2_big(binomial_prefix_sum(n, radius));
    double t = static_cast<double>(radius) / n;
    forms.entropy_form =
        t == 0.0 ? static_cast<double>(n)
                 : n - n * entropy(t) + 0.5 * std::log2(static_cast<double>(n)) +
                       0.5 * std::log2(8.0 * t * (1.0 - t));
    return forms;
}

double phi_raw(const SignedDigraph& d) {
    const int n = d.vertex_count();
    DegreeStats stats = degree_stats(d);
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto& v = stats.vertex[static_cast<std::size_t>(i)];
        double a = (n - v.d_zero + 1) / 2.0;
        double b = n - v.d_zero - v.d_minus + 1;
        double c = n - v.d_zero - v.d_plus + 1;
        best = std::max(best, std::min({a, b, c}));
    }
    return best;
}

int phi(const SignedDigraph& d) {
    return static_cast<int>(std::ceil(phi_raw(d)));
}

OracleBound coding_lower(const SignedDigraph& d, int s, CodeSizeOracle& oracle) {
    CodeSizeOracle::Value v = oracle.lower_min(d.vertex_count(), phi(d), s);
    return {std::log2(v.size) / std::log2(static_cast<double>(s)), v.exact};
}

TwoForms gilbert_corollary_lower(const SignedDigraph& d) {
    const int n = d.vertex_count();
    const int p = phi(d);
    TwoForms forms;
    forms.exact_form =
        log2_big(binomial(n, n / 2)) - log2_big(binomial_prefix_sum(n, 2 * p - 1));
    double arg = std::min((2.0 * p - 1.0) / n, 0.5);
    forms.entropy_form = n - n * entropy(arg) - 0.5 * std::log2(static_cast<double>(n)) - 1.5;
    return forms;
}

ClassicalCodeBounds classical_code_bounds(int n, int d, int s) {
    if (n < 1 || d < 1 || d > n || s < 2)
        throw std::invalid_argument("code bound parameters out of range");
    ClassicalCodeBounds b;
    BigInt full = pow_big(2, n);
    BigInt gilbert_denom = binomial_prefix_sum(n, d - 1);
    b.gilbert_lower = (full + gilbert_denom - 1) / gilbert_denom;  // ceiling
    b.sphere_packing_upper = full / binomial_prefix_sum(n, (d - 1) / 2);
    b.singleton_upper = pow_big(s, n - d + 1);
    BigInt varshamov_denom = 0;
    for (int j = 0; j <= d - 1; ++j)
        varshamov_denom += binomial(n / 2, j) + binomial((n + 1) / 2, j);
    b.varshamov_upper = pow_big(2, n + 1) / varshamov_denom;
    return b;
}

OracleBound borden_upper(int n, int d, CodeSizeOracle& oracle) {
    CodeSizeOracle::Value h = oracle.upper_hamming(n, 2 * d - 1, 2);
    return {static_cast<double>(d) * h.size, h.exact};
}

double bassalygo_elias_lower(int n, int w, double a_h) {
    return std::exp2(log2_big(binomial(n, w)) - n + std::log2(a_h));
}

Bracket binomial_bracket(int n, int k) {
    if (k <= 0 || k >= n) throw std::invalid_argument("requires 0 < k < n");
    double lambda = static_cast<double>(k) / n;
    Bracket b;
    double h = n * entropy(lambda);
    b.lower = std::exp2(h) / std::sqrt(8.0 * n * lambda * (1.0 - lambda));
    b.upper = std::exp2(h) / std::sqrt(2.0 * M_PI * n * lambda * (1.0 - lambda));
    b.exact = binomial(n, k).convert_to<double>();
    b.contains = b.lower <= b.exact * (1 + 1e-12) && b.exact <= b.upper * (1 + 1e-12);
    return b;
}

Bracket binomial_sum_bracket(int n, int k) {
    if (k < 1 || 2 * k > n) throw std::invalid_argument("requires 1 <= k <= n/2");
    double mu = static_cast<double>(k) / n;
    Bracket b;
    double h = n * entropy(mu);
    b.lower = std::exp2(h) / std::sqrt(8.0 * n * mu * (1.0 - mu));
    b.upper = std::exp2(h);
    b.exact = binomial_prefix_sum(n, k).convert_to<double>();
    b.contains = b.lower <= b.exact * (1 + 1e-12) && b.exact <= b.upper * (1 + 1e-12);
    return b;
}

Bracket central_binomial_bracket(int n) {
    if (n < 1) throw std::invalid_argument("requires n >= 1");
    Bracket b;
    b.lower = std::exp2(static_cast<double>(n - 1)) / std::sqrt(2.0 * n);
    b.upper = std::numeric_limits<double>::infinity();
    b.exact = binomial(n, n / 2).convert_to<double>();
    b.contains = b.lower <= b.exact * (1 + 1e-12);
    return b;
}

namespace {

double mrrw_h(double x) {
    x = std::clamp(x, 0.0, 1.0);
    return entropy(0.5 - 0.5 * std::sqrt(1.0 - x));
}

double mrrw_objective(double u, double dbar) {
    return 1.0 + mrrw_h(u * u) - mrrw_h(u * u + 2.0 * dbar * u + 2.0 * dbar);
}

}  // namespace

double mrrw(double dbar) {
    if (dbar < 0.0 || dbar > 1.0) throw std::invalid_argument("argument outside [0,1]");
    if (dbar >= 0.5) return 0.0;
    if (dbar == 0.0) return 1.0;
    const double hi = 1.0 - 2.0 * dbar;
    const double step = 1e-4;
    double best_u = hi;
    double best = mrrw_objective(hi, dbar);
    for (double u = step; u < hi; u += step) {
        double v = mrrw_objective(u, dbar);
        if (v < best) {
            best = v;
            best_u = u;
        }
    }
    double lo = std::max(best_u - step, 1e-12);
    double up = std::min(best_u + step, hi);
    while (up - lo > 1e-9) {
        double m1 = lo + (up - lo) / 3.0;
        double m2 = up - (up - lo) / 3.0;
        if (mrrw_objective(m1, dbar) < mrrw_objective(m2, dbar)) up = m2;
        else lo = m1;
    }
    best = std::min(best, mrrw_objective(0.5 * (lo + up), dbar));
    return std::clamp(best, 0.0, 1.0);
}

std::vector<AsymptoticPoint> asymptotic_curves(const std::vector<double>& grid) {
    std::vector<AsymptoticPoint> points;
    points.reserve(grid.size());
    for (double t : grid) {
        if (t < 0.0 || t > 1.0) throw std::invalid_argument("grid point outside [0,1]");
        AsymptoticPoint p;
        p.dbar = t;
        p.lower_delta_half = t / 2.0;
        p.lower_gilbert = t >= 0.75 ? std::clamp(1.0 - entropy(2.0 * (1.0 - t)), 0.0, 1.0) : 0.0;
        p.upper_mrrw = mrrw(std::min(2.0 * t, 1.0));
        p.upper_feedback_frontier = 1.0 - t;
        points.push_back(p);
    }
    return points;
}

std::string asymptotic_curves_csv(const std::vector<AsymptoticPoint>& points) {
    std::ostringstream out;
    out << "dbar,lower_delta_half,lower_gilbert,upper_mrrw,upper_feedback_frontier\n";
    out.setf(std::ios::fixed);
    out.precision(6);
    for (const auto& p : points)
        out << p.dbar << ',' << p.lower_delta_half << ',' << p.lower_gilbert << ','
            << p.upper_mrrw << ',' << p.upper_feedback_frontier << '\n';
    return out.str();
}

BoundReport bound_report(const SignedDigraph& d, int s, std::uint64_t oracle_cap,
                         int vertex_cap) {
    const int n = d.vertex_count();
    BoundReport report;
    auto clamp01n = [n](double v) { return std::clamp(v, 0.0, static_cast<double>(n)); };
    auto add = [&](std::string name, BoundKind kind, bool applicable, double raw,
                   std::string method) {
        report.entries.push_back(
            {std::move(name), kind, applicable, raw, clamp01n(raw), std::move(method)});
    };

    ClassicBounds classic = classic_bounds(d, vertex_cap);
    add("cycle-packing", BoundKind::lower, true, classic.c_plus,
        "vertex-disjoint non-negative cycles");
    add("feedback-vertex-set", BoundKind::upper, true, classic.k_plus,
        "non-negative feedback vertex set");

    CodeSizeOracle oracle(oracle_cap);
    OracleBound up = coding_upper(d, s, oracle);
    add("coding-upper", BoundKind::upper, true, up.value,
        up.exact ? "fixed-point code distance, exact code size"
                 : "fixed-point code distance, estimated code size");
    OracleBound low = coding_lower(d, s, oracle);
    add("coding-lower", BoundKind::lower, true, low.value,
        low.exact ? "min-distance code synthesis, exact code size"
                  : "min-distance code synthesis, estimated code size");

    if (s == 2) {
        RawClamped turan = turan_lower(d);
        add("degree-turan", BoundKind::lower, true, turan.raw,
            "guessing-graph average degree");
        auto typical = typical_lower(d);
        add("degree-typical", BoundKind::lower, typical.has_value(),
            typical ? typical->raw : 0.0, "typical-state concentration");
        TwoForms sphere = sphere_packing_upper(d);
        add("sphere-packing", BoundKind::upper, true, sphere.exact_form,
            "Hamming ball packing at the non-negative girth");
        TwoForms gilbert = gilbert_corollary_lower(d);
        add("gilbert-constant-weight", BoundKind::lower, true, gilbert.exact_form,
            "constant-weight Gilbert construction");
    }

    report.certified_lower = 0.0;
    report.certified_upper = static_cast<double>(n);
    for (const auto& e : report.entries) {
        if (!e.applicable) continue;
        if (e.kind == BoundKind::lower)
            report.certified_lower = std::max(report.certified_lower, e.clamped);
        else
            report.certified_upper = std::min(report.certified_upper, e.clamped);
    }
    return report;
}

}  // namespace netfix
