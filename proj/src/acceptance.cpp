#include "netfix/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "netfix/bounds.hpp"
#include "netfix/codes.hpp"
#include "netfix/digraph.hpp"
#include "netfix/guessing.hpp"
#include "netfix/states.hpp"
#include "netfix/synthesis.hpp"

namespace netfix {

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void require(bool condition, const std::string& why) {
        if (!condition) fail(why);
    }
};

SignedDigraph random_digraph(std::mt19937& rng, int n, bool allow_loops, double arc_prob,
                             const std::vector<Sign>& signs) {
    SignedDigraph d(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, signs.size() - 1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v && !allow_loops) continue;
            if (coin(rng) < arc_prob) d.add_arc(u, v, signs[pick(rng)]);
        }
    return d;
}

// --- local restriction machinery for sampling monotone networks ---

std::vector<std::pair<int, Sign>> sorted_in_neighbours(const SignedDigraph& d, int i) {
    auto nb = d.in_neighbours(i);
    std::sort(nb.begin(), nb.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return nb;
}

std::vector<int> restriction_values(std::uint64_t idx, std::size_t len, int s) {
    std::vector<int> vals(len, 0);
    for (std::size_t t = len; t-- > 0;) {
        vals[t] = static_cast<int>(idx % static_cast<std::uint64_t>(s));
        idx /= static_cast<std::uint64_t>(s);
    }
    return vals;
}

bool restriction_leq(const std::vector<std::pair<int, Sign>>& nb, const std::vector<int>& a,
                     const std::vector<int>& b) {
    for (std::size_t t = 0; t < nb.size(); ++t) {
        switch (nb[t].second) {
            case Sign::zero:
                if (a[t] != b[t]) return false;
                break;
            case Sign::positive:
                if (a[t] > b[t]) return false;
                break;
            case Sign::negative:
                if (a[t] < b[t]) return false;
                break;
        }
    }
    return true;
}

// Random table in F(D,s): random local values repaired upward to monotone.
Network random_monotone_network(const SignedDigraph& d, int s, std::mt19937& rng) {
    const int n = d.vertex_count();
    StateSpace space(n, s);
    std::uniform_int_distribution<int> value(0, s - 1);

    std::vector<std::vector<int>> locals(static_cast<std::size_t>(n));
    std::vector<std::vector<std::pair<int, Sign>>> nbs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto nb = sorted_in_neighbours(d, i);
        std::uint64_t classes = 1;
        for (std::size_t t = 0; t < nb.size(); ++t) classes *= static_cast<std::uint64_t>(s);
        std::vector<int> g(classes);
        for (auto& v : g) v = value(rng);
        std::vector<std::vector<int>> coords(classes);
        for (std::uint64_t r = 0; r < classes; ++r) coords[r] = restriction_values(r, nb.size(), s);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint64_t a = 0; a < classes; ++a)
                for (std::uint64_t b = 0; b < classes; ++b)
                    if (restriction_leq(nb, coords[a], coords[b]) && g[b] < g[a]) {
                        g[b] = g[a];
                        changed = true;
                    }
        }
        locals[static_cast<std::size_t>(i)] = std::move(g);
        nbs[static_cast<std::size_t>(i)] = std::move(nb);
    }

    std::vector<State> table;
    table.reserve(space.size());
    for (std::uint64_t c = 0; c < space.size(); ++c) {
        State x = space.decode(c);
        State out = x;
        for (int i = 0; i < n; ++i) {
            std::uint64_t idx = 0;
            for (const auto& [j, sign] : nbs[static_cast<std::size_t>(i)]) {
                (void)sign;
                idx = idx * static_cast<std::uint64_t>(s) +
                      static_cast<std::uint64_t>(x.x[static_cast<std::size_t>(j)]);
            }
            out.x[static_cast<std::size_t>(i)] = locals[static_cast<std::size_t>(i)][idx];
        }
        table.push_back(std::move(out));
    }
    return Network::from_table(n, s, std::move(table), Provenance::user);
}

std::uint64_t exact_alpha(const SignedDigraph& d, int s) {
    auto graph = GuessingGraph::materialized(d, s);
    return static_cast<std::uint64_t>(max_independent_set(graph.adjacency()).size);
}

// ---------- criteria ----------

Check cycle_guessing_numbers() {
    Check c;
    for (int n = 2; n <= 5; ++n)
        for (int s = 2; s <= 3; ++s) {
            GuessingResult r = alpha(positive_cycle(n), s);
            if (r.alpha != static_cast<std::uint64_t>(s))
                c.fail("cycle n=" + std::to_string(n) + " s=" + std::to_string(s) + ": alpha=" +
                       std::to_string(r.alpha));
            else if (std::abs(r.g - 1.0) > 1e-12)
                c.fail("cycle n=" + std::to_string(n) + ": g != 1");
        }
    if (c.ok) c.detail = "alpha = s on directed positive cycles, n in 2..5, s in {2,3}";
    return c;
}

Check negative_clique_numbers() {
    Check c;
    const std::uint64_t expected[] = {2, 3, 6};
    for (int n = 2; n <= 4; ++n) {
        std::uint64_t a = exact_alpha(negative_clique(n), 2);
        std::uint64_t want = expected[n - 2];
        if (a != want)
            c.fail("negative clique n=" + std::to_string(n) + ": alpha=" + std::to_string(a) +
                   " expected " + std::to_string(want));
    }
    if (exact_alpha(negative_clique(2), 3) != 3) c.fail("negative clique n=2 s=3: alpha != 3");
    if (c.ok) c.detail = "alpha = C(n, n/2) on negative cliques (2, 3, 6) and 3 at n=2, s=3";
    return c;
}

Check positive_triangle_numbers() {
    Check c;
    for (int s = 2; s <= 4; ++s) {
        std::uint64_t want = static_cast<std::uint64_t>(3 * (s - 1) / 2 + 1);
        std::uint64_t a = exact_alpha(positive_clique(3), s);
        if (a != want)
            c.fail("positive triangle s=" + std::to_string(s) + ": alpha=" + std::to_string(a) +
                   " expected " + std::to_string(want));
    }
    double g = std::log(4.0) / std::log(3.0);
    GuessingResult r = alpha(positive_clique(3), 3);
    if (std::abs(r.g - g) > 1e-12 || !(r.g > 1.0)) c.fail("g on the positive triangle at s=3");
    if (c.ok) c.detail = "alpha = floor(3(s-1)/2)+1 for s in {2,3,4}; g(3-clique, s=3) = log_3 4 > 1";
    return c;
}

Check no_cycle_complete() {
    Check c;
    std::mt19937 rng(20240811);
    const std::vector<Sign> signs = {Sign::positive, Sign::negative, Sign::zero};
    std::uniform_int_distribution<int> size(2, 5);
    int accepted = 0;
    while (accepted < 100) {
        SignedDigraph d = random_digraph(rng, size(rng), true, 0.3, signs);
        if (nonneg_girth(d)) continue;
        ++accepted;
        StateSpace space(d.vertex_count(), 2);
        for (std::uint64_t a = 0; a < space.size() && c.ok; ++a)
            for (std::uint64_t b = a + 1; b < space.size(); ++b)
                if (!is_edge(d, 2, space.decode(a), space.decode(b))) {
                    c.fail("missing edge in a guessing graph that should be complete");
                    break;
                }
        if (!c.ok) break;
    }
    if (c.ok) c.detail = "100 random digraphs without non-negative cycles all complete";
    return c;
}

Check oracle_equivalence() {
    Check c;
    // all 2-vertex signed digraphs: each ordered pair absent or signed
    const Sign signs[] = {Sign::positive, Sign::negative, Sign::zero};
    const std::pair<int, int> slots[] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (int pattern = 0; pattern < 256; ++pattern) {
        SignedDigraph d(2);
        int p = pattern;
        for (const auto& [u, v] : slots) {
            int choice = p % 4;
            p /= 4;
            if (choice > 0) d.add_arc(u, v, signs[choice - 1]);
        }
        std::uint64_t brute = brute_force_max_fixed_points(d, 2);
        std::uint64_t a = exact_alpha(d, 2);
        if (brute != a) {
            c.fail("mismatch on a 2-vertex digraph: brute=" + std::to_string(brute) +
                   " alpha=" + std::to_string(a));
            break;
        }
    }
    for (const SignedDigraph& d : {positive_clique(3), negative_clique(3), positive_cycle(3)}) {
        std::uint64_t brute = brute_force_max_fixed_points(d, 2);
        std::uint64_t a = exact_alpha(d, 2);
        if (brute != a) c.fail("mismatch on a named 3-vertex digraph");
    }
    if (c.ok) c.detail = "brute-force maximum fixed points equals alpha on all tested digraphs";
    return c;
}

Check synthesis_round_trip() {
    Check c;
    std::vector<std::pair<SignedDigraph, int>> instances;
    for (int n = 2; n <= 5; ++n)
        for (int s = 2; s <= 3; ++s) instances.push_back({positive_cycle(n), s});
    for (int n = 2; n <= 4; ++n) instances.push_back({negative_clique(n), 2});
    instances.push_back({negative_clique(2), 3});
    for (int s = 2; s <= 4; ++s) instances.push_back({positive_clique(3), s});

    for (const auto& [d, s] : instances) {
        GuessingResult r = alpha(d, s);
        Network f = network_from_independent_set(d, s, r.witness);
        if (!is_in_F(d, f)) c.fail("synthesized network outside F(D,s)");
        for (const State& w : r.witness)
            if (!(f.evaluate(w) == w)) c.fail("witness state not fixed: " + state_literal(w));
    }
    if (c.ok) c.detail = "every maximum witness synthesizes to a network fixing it";
    return c;
}

Check degree_formula_check() {
    Check c;
    std::mt19937 rng(20240812);
    const std::vector<Sign> signs = {Sign::positive, Sign::negative, Sign::zero};
    std::uniform_int_distribution<int> size(1, 4);
    for (int trial = 0; trial < 500 && c.ok; ++trial) {
        SignedDigraph d = random_digraph(rng, size(rng), false, 0.5, signs);
        StateSpace space(d.vertex_count(), 2);
        for (std::uint64_t code = 0; code < space.size(); ++code) {
            State x = space.decode(code);
            if (degree_by_formula(d, x) != neighbour_count(d, 2, x)) {
                c.fail("formula/count mismatch at " + state_literal(x));
                break;
            }
        }
    }
    if (c.ok) c.detail = "formula degree equals direct neighbour count on 500 random digraphs";
    return c;
}

Check fixed_point_code_distance() {
    Check c;
    std::mt19937 rng(20240813);
    std::uniform_int_distribution<int> size(1, 3);
    const std::vector<Sign> mixed = {Sign::positive, Sign::negative, Sign::zero};
    const std::vector<Sign> positive = {Sign::positive};
    const std::vector<Sign> negative = {Sign::negative};

    auto min_dist = [](const std::vector<State>& pts, DistanceKind kind) {
        Code code;
        code.n = pts.empty() ? 0 : pts.front().n();
        code.s = pts.empty() ? 2 : pts.front().s;
        code.words = pts;
        return min_distance(code, kind);
    };

    for (int trial = 0; trial < 10000 && c.ok; ++trial) {
        int family = trial % 3;
        const auto& signs = family == 0 ? mixed : family == 1 ? positive : negative;
        SignedDigraph d = random_digraph(rng, size(rng), family != 0, 0.5, signs);
        Network f = random_monotone_network(d, 2, rng);
        FixReport fix = fixed_points(f);
        if (fix.count < 2) continue;
        auto girth = nonneg_girth(d);
        if (!girth) {
            c.fail("two fixed points on a digraph without non-negative cycles");
            break;
        }
        auto dh = min_dist(fix.fixed_points, DistanceKind::hamming);
        if (dh && *dh < *girth) c.fail("Hamming distance below the non-negative girth");
        if (family == 1) {
            auto dm = min_dist(fix.fixed_points, DistanceKind::max);
            if (dm && *dm < *girth) c.fail("max-distance below the girth on a positive digraph");
        }
        if (family == 2) {
            auto dmin = min_dist(fix.fixed_points, DistanceKind::min);
            if (dmin && 2 * *dmin < *girth)
                c.fail("min-distance below girth/2 on a negative digraph");
        }
    }
    if (c.ok) c.detail = "10000 sampled monotone networks respect the fixed-point distance bounds";
    return c;
}

Check three_step_convergence() {
    Check c;
    Code code = max_constant_weight_code(7, 4, 3);
    if (code.size() != 7) c.fail("best weight-3 distance-4 code of length 7 has size != 7");
    Network f = kn_plus_network(code, 7, 3);
    std::vector<State> target = code.words;
    State zeros, ones;
    zeros.s = ones.s = 2;
    zeros.x.assign(7, 0);
    ones.x.assign(7, 1);
    target.push_back(zeros);
    target.push_back(ones);
    ConvergenceReport r = converges_to(f, target, 3);
    if (!r.converges) c.fail("some state does not reach the target set in 3 steps");
    if (r.max_steps > 3) c.fail("maximum steps above 3");
    FixReport fix = fixed_points(f);
    if (fix.count != 9) c.fail("fixed points are not exactly the 9 target states");
    if (c.ok) c.detail = "all 128 states reach the 9 fixed points within 3 steps";
    return c;
}

Check negative_clique_non_convergence() {
    Check c;
    Network f = kn_minus_network(3, 2, 1);
    FixReport fix = fixed_points(f);
    Code level = weight_level(3, 1, 2);
    if (fix.fixed_points != level.words) c.fail("fixed points differ from the weight-1 level");
    State zeros, ones;
    zeros.s = ones.s = 2;
    zeros.x.assign(3, 0);
    ones.x.assign(3, 1);
    if (!(f.evaluate(zeros) == ones && f.evaluate(ones) == zeros))
        c.fail("all-0 and all-1 do not form a 2-cycle");
    ConvergenceReport r = converges_to(f, level.words);
    if (r.converges) c.fail("convergence reported despite the 2-cycle");
    if (c.ok) c.detail = "weight-1 fixed points plus the all-0/all-1 2-cycle; no convergence";
    return c;
}

Check moment_code_check() {
    Check c;
    for (int n = 1; n <= 6 && c.ok; ++n)
        for (int s = 2; s <= 3 && c.ok; ++s) {
            StateSpace space(n, s);
            std::map<std::tuple<long long, long long, long long>, std::vector<State>> fibers;
            for (std::uint64_t code = 0; code < space.size(); ++code) {
                State x = space.decode(code);
                MomentVector m = moments(x);
                fibers[{m.m0, m.m1, m.m2}].push_back(std::move(x));
            }
            std::uint64_t covered = 0;
            std::size_t best = 0;
            for (const auto& [m, words] : fibers) {
                covered += words.size();
                best = std::max(best, words.size());
                for (std::size_t a = 0; a < words.size() && c.ok; ++a)
                    for (std::size_t b = a + 1; b < words.size(); ++b)
                        if (distance(words[a], words[b], DistanceKind::min) < 2) {
                            c.fail("fiber pair with min-distance below 2 at n=" +
                                   std::to_string(n) + " s=" + std::to_string(s));
                            break;
                        }
            }
            if (covered != space.size()) c.fail("fibers do not partition the state space");
            double denom = (1.0 + n * (s - 1)) * (1.0 + double(n) * n * (s - 1)) *
                           (1.0 + double(n) * n * n * (s - 1));
            if (static_cast<double>(best) < static_cast<double>(space.size()) / denom)
                c.fail("largest fiber below the counting lower bound");
        }
    if (c.ok) c.detail = "all weighted-sum fibers have pairwise min-distance >= 2, n <= 6, s <= 3";
    return c;
}

Check distance_chain_check() {
    Check c;
    for (int n = 1; n <= 5; ++n)
        for (int d = 1; 2 * d <= n + 1; ++d) {
            DistanceChainReport r = check_distance_chain(n, d);
            if (!r.holds)
                c.fail("chain fails at n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
    if (c.ok) c.detail = "distance inequality chain exact for all n <= 5, 2d <= n+1";
    return c;
}

Check bound_soundness_sweep() {
    Check c;
    const Sign signs[] = {Sign::positive, Sign::negative, Sign::zero};
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) slots.push_back({u, v});
    const long long total = 262144;  // 4^9
    for (long long pattern = 0; pattern < total && c.ok; ++pattern) {
        SignedDigraph d(3);
        long long p = pattern;
        for (const auto& [u, v] : slots) {
            int choice = static_cast<int>(p % 4);
            p /= 4;
            if (choice > 0) d.add_arc(u, v, signs[choice - 1]);
        }
        double g = std::log2(static_cast<double>(exact_alpha(d, 2)));
        BoundReport report = bound_report(d, 2);
        for (const auto& e : report.entries) {
            if (!e.applicable) continue;
            bool sound = e.kind == BoundKind::lower ? e.clamped <= g + 1e-9
                                                    : g <= e.clamped + 1e-9;
            if (!sound) {
                c.fail("bound `" + e.name + "` unsound on pattern " + std::to_string(pattern) +
                       " (value " + std::to_string(e.clamped) + ", g=" + std::to_string(g) + ")");
                break;
            }
        }
    }
    if (c.ok) c.detail = "all bounds sound on all 262144 signed digraphs with 3 vertices";
    return c;
}

Check asymptotic_curves_check() {
    Check c;
    for (double t = 0.5; t <= 1.0 + 1e-12; t += 0.01)
        if (mrrw(std::min(t, 1.0)) > 1e-6) c.fail("rate bound positive past 1/2");
    if (std::abs(mrrw(0.0) - 1.0) > 1e-6) c.fail("rate bound at 0 differs from 1");
    auto gilbert = [](double t) { return 1.0 - entropy(2.0 * (1.0 - t)); };
    if (!(gilbert(0.95) >= 0.95 / 2.0)) c.fail("entropy lower curve below delta/2 at 0.95");
    if (!(gilbert(0.76) <= 0.76 / 2.0)) c.fail("entropy lower curve above delta/2 at 0.76");
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
    auto points = asymptotic_curves(grid);
    std::string csv = asymptotic_curves_csv(points);
    if (csv.find("dbar,lower_delta_half,lower_gilbert,upper_mrrw,upper_feedback_frontier") != 0)
        c.fail("unexpected CSV header");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].upper_mrrw > points[i - 1].upper_mrrw + 1e-9)
            c.fail("rate upper curve not non-increasing");
        if (points[i].upper_feedback_frontier > points[i - 1].upper_feedback_frontier)
            c.fail("feedback frontier not decreasing");
    }
    for (const auto& p : points)
        if (p.lower_delta_half < 0 || p.lower_delta_half > 1 || p.lower_gilbert < 0 ||
            p.lower_gilbert > 1 || p.upper_mrrw < 0 || p.upper_mrrw > 1)
            c.fail("curve value outside [0,1]");
    if (c.ok) c.detail = "rate curves behave as expected; crossover inside (0.76, 0.95)";
    return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    struct Entry {
        const char* name;
        Check (*run)();
    };
    const Entry entries[] = {
        {"cycle guessing numbers", cycle_guessing_numbers},
        {"negative clique guessing numbers", negative_clique_numbers},
        {"positive triangle guessing numbers", positive_triangle_numbers},
        {"no non-negative cycle implies complete graph", no_cycle_complete},
        {"brute force agrees with independence number", oracle_equivalence},
        {"synthesis round-trip on maximum witnesses", synthesis_round_trip},
        {"degree formula equals direct count", degree_formula_check},
        {"fixed-point code distance properties", fixed_point_code_distance},
        {"three-step convergence on the positive clique", three_step_convergence},
        {"non-convergence on the negative clique", negative_clique_non_convergence},
        {"weighted-sum code fibers", moment_code_check},
        {"distance inequality chain", distance_chain_check},
        {"bound soundness sweep", bound_soundness_sweep},
        {"asymptotic curves", asymptotic_curves_check},
    };

    std::vector<CriterionResult> results;
    int id = 0;
    for (const Entry& e : entries) {
        auto start = std::chrono::steady_clock::now();
        Check check = e.run();
        auto stop = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = ++id;
        r.name = e.name;
        r.passed = check.ok;
        r.detail = check.detail;
        r.seconds = std::chrono::duration<double>(stop - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

bool print_acceptance(const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        std::printf("%-4s %2d %-48s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        all = all && r.passed;
    }
    std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
    return all;
}

}  // namespace netfix
