// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "tvs/classify.hpp"
#include "tvs/enumerate.hpp"
#include "tvs/exact.hpp"
#include "tvs/forest.hpp"
#include "tvs/labeler.hpp"
#include "tvs/verifier.hpp"

using namespace tvs;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

void report(const std::string& id, bool pass, const std::string& detail) {
    auto now = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(now - mark).count();
    mark = now;
    std::printf("%s %s  %s  (%.1fs)\n", id.c_str(), pass ? "PASS" : "FAIL", detail.c_str(),
                secs);
    if (!pass) ++failures;
}

struct SweepStats {
    int instances = 0;
    int bad = 0;
    bool reserved_total_clean = true;  // feeds A5
    std::string first_failure;
};

// construct + verify + exact strength; flags any use of total 2s+1.
void check_construction(const Forest& f, SweepStats& st) {
    ++st.instances;
    auto note = [&](const std::string& msg) {
        ++st.bad;
        if (st.first_failure.empty()) st.first_failure = msg;
    };
    try {
        auto [census, ct] = classify(f);
        (void)census;
        int s = strength_target(ct.n1);
        TotalWeighting tw = construct(f);
        if (tw.s != s) return note("s mismatch");
        Certificate cert = verify(f, tw, s);
        if (!cert.valid) return note("verify failed");
        if (cert.s_used != s) return note("max label != s");
        auto wt = weighted_degrees(f, tw);
        bool reserved_used = std::count(wt.begin(), wt.end(), 2 * s + 1) > 0;
        if (tw.mode == Mode::theorem1 && reserved_used) st.reserved_total_clean = false;
    } catch (const std::exception& e) {
        note(e.what());
    }
}

const std::vector<Forest>& all_trees(int n) {
    static std::vector<Forest> cache[10];
    if (cache[n - 2].empty()) cache[n - 2] = enumerate_trees(n);
    return cache[n - 2];
}

int degree2_count(const Forest& f) {
    int n2 = 0;
    for (int v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) == 2) ++n2;
    return n2;
}

std::vector<Forest> theorem1_trees(int max_n) {
    std::vector<Forest> out;
    for (int n = 2; n <= max_n; ++n)
        for (const Forest& t : all_trees(n))
            if (degree2_count(t) == 0) out.push_back(t);
    return out;
}

std::vector<Forest> theorem2_trees(int max_n) {
    std::vector<Forest> out;
    for (int n = 3; n <= max_n; ++n)
        for (const Forest& t : all_trees(n))
            if (degree2_count(t) == 1) out.push_back(t);
    return out;
}

const std::vector<Forest>& a3_forests() {
    static std::vector<Forest> out = [] {
        std::vector<Forest> v;
        GeneratorSpec spec;
        spec.min_components = 2;
        spec.max_components = 6;
        spec.min_size = 2;
        spec.max_size = 10;  // total n <= 60
        spec.max_n2 = 0;
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            spec.seed = seed;
            v.push_back(random_forest(spec));
        }
        return v;
    }();
    return out;
}

}  // namespace

int main() {
    SweepStats a1;
    for (const Forest& t : theorem1_trees(9)) check_construction(t, a1);
    report("A1", a1.bad == 0 && a1.instances > 0,
           "theorem1 trees n<=9: " + std::to_string(a1.instances) + " instances" +
               (a1.bad ? " first failure: " + a1.first_failure : ""));

    std::vector<std::pair<Forest, int>> oracle_runs;  // (forest, exact s) for A7
    SweepStats a2;
    {
        int bad = 0, count = 0;
        for (const Forest& t : theorem1_trees(8)) {
            auto [census, ct] = classify(t);
            (void)census;
            int s = strength_target(ct.n1);
            auto res = exact_tvs(t, ct.n1 + 1);
            if (res.s != s || !verify(t, res.witness, res.s).valid) ++bad;
            oracle_runs.emplace_back(t, res.s);
            ++count;
        }
        report("A2", bad == 0 && count > 0,
               "oracle agreement on " + std::to_string(count) + " theorem1 trees n<=8");
    }

    SweepStats a3;
    {
        for (const Forest& f : a3_forests()) check_construction(f, a3);
        // Golden hand-runs.
        Forest dstar = Forest::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
        auto wt = weighted_degrees(dstar, construct(dstar));
        bool golden = std::set<int>(wt.begin(), wt.end()) == std::set<int>{2, 3, 4, 5, 8, 9};
        Forest k14 = Forest::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        wt = weighted_degrees(k14, construct(k14));
        golden &= std::set<int>(wt.begin(), wt.end()) == std::set<int>{2, 3, 4, 5, 10};
        Forest spider = Forest::from_edges(
            10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}});
        TotalWeighting stw = construct(spider);
        wt = weighted_degrees(spider, stw);
        golden &= stw.s == 4 && verify(spider, stw, 4).valid &&
                  *std::max_element(wt.begin(), wt.end()) <= 16 &&
                  *std::min_element(wt.begin(), wt.end()) >= 2;
        report("A3", a3.bad == 0 && golden && a3.instances >= 1000,
               std::to_string(a3.instances) + " random forests + golden hand-runs" +
                   (a3.bad ? " first failure: " + a3.first_failure : ""));
    }

    {
        int bad = 0, count = 0;
        std::string first;
        auto check_t2 = [&](const Forest& t, bool run_oracle) {
            ++count;
            auto [census, ct] = classify(t);
            (void)census;
            int s = strength_target(ct.n1);
            int d2 = -1;
            for (int v = 0; v < t.vertex_count(); ++v)
                if (t.degree(v) == 2) d2 = v;
            try {
                TotalWeighting tw = construct(t, Mode::theorem2);
                auto wt = weighted_degrees(t, tw);
                bool ok = tw.s == s && verify(t, tw, s).valid && wt[d2] == 2 * s + 1;
                if (ok && run_oracle) ok = exact_tvs(t, ct.n1 + 1).s == s;
                if (ok && run_oracle) oracle_runs.emplace_back(t, s);
                if (!ok) {
                    ++bad;
                    if (first.empty()) first = "n=" + std::to_string(t.vertex_count());
                }
            } catch (const std::exception& e) {
                ++bad;
                if (first.empty()) first = e.what();
            }
        };
        for (const Forest& t : theorem2_trees(8)) check_t2(t, true);
        for (const Forest& t : enumerate_binary_trees(8, true))
            check_t2(t, t.vertex_count() <= 8);
        int cubic = 0;
        for (const Forest& t : enumerate_binary_trees(8, false)) {
            SweepStats tmp;
            check_construction(t, tmp);
            bad += tmp.bad;
            ++cubic;
        }
        // Random forests with one degree-2 vertex allowed, isolated edges
        // included: exercises the forced-edge/isolated-edge interaction.
        GeneratorSpec spec;
        spec.min_components = 2;
        spec.max_components = 5;
        spec.max_n2 = 1;
        int rnd = 0;
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            spec.seed = seed;
            Forest f = random_forest(spec);
            if (degree2_count(f) == 1) {
                check_t2(f, false);
                ++rnd;
            } else {
                SweepStats tmp;
                check_construction(f, tmp);
                bad += tmp.bad;
                if (tmp.bad && first.empty()) first = tmp.first_failure;
            }
        }
        report("A4", bad == 0 && count > 0 && rnd > 0,
               "theorem2 trees n<=8, binary trees <=8 leaves (" + std::to_string(count) + " + " +
                   std::to_string(cubic) + " cubic), " + std::to_string(rnd) +
                   " random theorem2 forests" + (bad ? " first: " + first : ""));
    }

    report("A5", a1.reserved_total_clean && a3.reserved_total_clean,
           "total 2s+1 never used in A1/A3 constructions");

    {
        Forest k2 = Forest::from_edges(2, {{0, 1}});
        Forest p3 = Forest::from_edges(3, {{0, 1}, {1, 2}});
        Forest k14 = Forest::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        Forest k15 = Forest::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
        bool ok = exact_tvs(k2, 5).s == 2 && exact_tvs(p3, 5).s == 2 &&
                  exact_tvs(k14, 5).s == 3 && exact_tvs(k15, 5).s == 3;
        ok = ok && strength_target(2) == 2 && strength_target(4) == 3 && strength_target(5) == 3;
        report("A6", ok, "tvs(K2)=2 tvs(P3)=2 tvs(K1,4)=3 tvs(K1,5)=3");
    }

    {
        int bad = 0;
        for (const auto& [f, s] : oracle_runs) {
            BoundsReport b = bounds(f);
            if (b.eq1_applicable && (s < b.lb_eq1 || s > b.ub_eq1)) ++bad;
            if (b.eq2_applicable && s > b.ub_eq2) ++bad;
            if (b.eq4_applicable && (s < b.lb_forest || s > b.ub_tree_eq4)) ++bad;
        }
        report("A7", bad == 0,
               "bounds consistent on " + std::to_string(oracle_runs.size()) + " oracle runs");
    }

    {
        int bad = 0;
        for (int n = 2; n <= 9; ++n)
            for (const Forest& t : all_trees(n))
                if (!degree_identity_check(t, t.components()[0]).holds) ++bad;

        auto check_ineq = [&](const Forest& f) {
            int n2 = 0;
            for (int v = 0; v < f.vertex_count(); ++v)
                if (f.degree(v) == 2) ++n2;
            if (f.vertex_count() < 3 || n2 > 1) return;
            auto si = structural_inequality_check(f);
            if (si.equality_case) {
                if (si.lhs != si.bound_minus2) ++bad;
            } else if (!si.strict_holds) {
                ++bad;
            }
        };
        for (int n = 3; n <= 9; ++n)
            for (const Forest& t : all_trees(n)) check_ineq(t);
        for (const Forest& f : a3_forests()) check_ineq(f);
        report("A8", bad == 0, "degree identity and structural inequality hold exhaustively");
    }

    {
        Forest dstar = Forest::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
        auto [census, ct] = classify(dstar);
        (void)census;
        TotalWeighting good = construct(dstar);

        auto failed_check = [&](const TotalWeighting& tw, const std::string& name) {
            AuditReport rep = audit_construction(dstar, tw, ct, tw.mode);
            for (const auto& c : rep.checks)
                if (c.name == name && !c.pass) return true;
            return false;
        };
        TotalWeighting mut1 = good;
        mut1.edge_label[0] = 1;  // bridge loses its s label
        TotalWeighting mut2 = good;
        mut2.edge_label[2] = mut2.edge_label[4];  // duplicated pool value
        TotalWeighting mut3 = good;
        mut3.vertex_label[0] = good.s + 2;  // out of range

        bool ok = failed_check(mut1, "non_pendant_edges_s") &&
                  failed_check(mut2, "pool_values_distinct") &&
                  failed_check(mut3, "labels_in_range") && !verify(dstar, mut3, good.s).valid &&
                  verify(dstar, good, good.s).valid;
        report("A9", ok, "mutated labelings rejected with named checks");
    }

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
