#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netfix/codes.hpp"
#include "netfix/digraph.hpp"

namespace netfix {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);
double log2_big(const BigInt& v);

/// Binary entropy; 0 at the endpoints by continuity.
double entropy(double p);

struct ClassicBounds {
    int c_plus = 0;  // lower bound on g
    int k_plus = 0;  // upper bound on g
};
ClassicBounds classic_bounds(const SignedDigraph& d, int vertex_cap = kDefaultVertexCap);

struct RawClamped {
    double raw = 0;
    double clamped = 0;
};

/// g(D,2) >= delta^0 + log2(4/3) delta^{+-} - log2 n.
RawClamped turan_lower(const SignedDigraph& d);

/// g(D,2) >= delta/2 - sqrt(ln(4n) delta / 2) - log2 n - 1, valid only when
/// delta >= ln(4n)/2 (nullopt otherwise).
std::optional<RawClamped> typical_lower(const SignedDigraph& d);

/// Supplies code sizes to the coding bounds: exact search below the cap,
/// closed-form estimates (valid in the needed direction) above it.
class CodeSizeOracle {
public:
    explicit CodeSizeOracle(std::uint64_t exact_cap = kCodeSolverCap) : cap_(exact_cap) {}

    struct Value {
        double size = 0;  // code cardinality (or a valid bound on it)
        bool exact = false;
    };

    /// Upper bounds on A_mu(n, d, s) for the three distances.
    Value upper_hamming(int n, int d, int s);
    Value upper_max(int n, int d, int s);
    Value upper_min(int n, int d, int s);

    /// Lower bound on A_m(n, d, s) (exact search, then constant-weight
    /// search, then the combined Gilbert / constant-weight estimate).
    Value lower_min(int n, int d, int s);

private:
    std::optional<std::uint64_t> exact_size(int n, int d, int s, DistanceKind kind);
    std::optional<std::uint64_t> exact_constant_weight(int n, int d, int w);

    std::uint64_t cap_;
    std::map<std::tuple<int, int, int, int>, std::uint64_t> memo_;
    std::map<std::tuple<int, int, int>, std::uint64_t> cw_memo_;
};

struct OracleBound {
    double value = 0;
    bool exact = false;  // every oracle value involved was exact
};

/// Minimum over the applicable fixed-point-code upper bounds:
/// log_s A_H(n,gamma+,s) always; log_s A_m(n,gamma+/2,s) for all-negative
/// digraphs; log_s A_M(n,gamma+,s) for all-positive ones. 0 without a
/// non-negative cycle.
OracleBound coding_upper(const SignedDigraph& d, int s, CodeSizeOracle& oracle);

struct TwoForms {
    double exact_form = 0;
    double entropy_form = 0;
};

/// n - log2 sum_{k <= floor((gamma+ - 1)/2)} C(n,k), plus its entropy
/// approximation; 0 without a non-negative cycle.
TwoForms sphere_packing_upper(const SignedDigraph& d);

/// max_i min{(n-d_i^0+1)/2, n-d_i^0-d_i^-+1, n-d_i^0-d_i^++1}.
double phi_raw(const SignedDigraph& d);
/// Ceiling of phi_raw: distances are integral, so min-distance >= ceil(phi)
/// suffices.
int phi(const SignedDigraph& d);

/// log_s A_m(n, phi, s) from the oracle's lower value.
OracleBound coding_lower(const SignedDigraph& d, int s, CodeSizeOracle& oracle);

/// log2 C(n, floor(n/2)) - log2 sum_{k <= 2 phi - 1} C(n,k), plus the entropy
/// form.
TwoForms gilbert_corollary_lower(const SignedDigraph& d);

struct ClassicalCodeBounds {
    BigInt gilbert_lower;         // A_H(n,d,2) >= (ceiling of the ratio)
    BigInt sphere_packing_upper;  // A_H(n,d,2) <=
    BigInt singleton_upper;       // A_H(n,d,s) <=
    BigInt varshamov_upper;       // A_M(n,d,2) <=
};
ClassicalCodeBounds classical_code_bounds(int n, int d, int s = 2);

/// Borden: A_M(n,d,2) <= d * A_H(n,2d-1,2).
OracleBound borden_upper(int n, int d, CodeSizeOracle& oracle);

/// Bassalygo-Elias: A_H(n,d,w,2) >= C(n,w) / 2^n * a_h, given a valid lower
/// bound a_h on A_H(n,d,2).
double bassalygo_elias_lower(int n, int w, double a_h);

struct Bracket {
    double lower = 0;
    double upper = 0;
    double exact = 0;
    bool contains = false;
};

/// Entropy bracket around C(n,k); requires 0 < k < n.
Bracket binomial_bracket(int n, int k);
/// Entropy bracket around sum_{j<=k} C(n,j); requires 1 <= k <= n/2.
Bracket binomial_sum_bracket(int n, int k);
/// C(n, floor(n/2)) >= 2^{n-1} / sqrt(2n).
Bracket central_binomial_bracket(int n);

/// Asymptotic rate upper bound, zero from 1/2 onwards.
double mrrw(double dbar);

struct AsymptoticPoint {
    double dbar = 0;
    double lower_delta_half = 0;
    double lower_gilbert = 0;
    double upper_mrrw = 0;
    double upper_feedback_frontier = 0;
};

std::vector<AsymptoticPoint> asymptotic_curves(const std::vector<double>& grid);
std::string asymptotic_curves_csv(const std::vector<AsymptoticPoint>& points);

enum class BoundKind { lower, upper };

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::lower;
    bool applicable = false;
    double raw = 0;
    double clamped = 0;  // to [0, n]
    std::string method;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    double certified_lower = 0;
    double certified_upper = 0;
};

BoundReport bound_report(const SignedDigraph& d, int s,
                         std::uint64_t oracle_cap = kCodeSolverCap,
                         int vertex_cap = kDefaultVertexCap);

}  // namespace netfix
