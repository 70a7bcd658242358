// Acceptance suite: one timed pass/fail line per criterion. Exit status is
// nonzero when any criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "parkstat/expectations.hpp"
#include "parkstat/forests.hpp"
#include "parkstat/parking.hpp"
#include "parkstat/qalgebra.hpp"
#include "parkstat/symfunc.hpp"
#include "parkstat/verify.hpp"

using namespace parkstat;

namespace {

struct Criterion {
    int number;
    std::string description;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool suites_ok(const std::vector<std::string>& names, const VerifyOptions& opt, std::string& detail) {
    bool ok = true;
    for (const auto& name : names) {
        SuiteResult res = run_suite(name, opt);
        if (!res.ok()) {
            ok = false;
            for (const auto& r : res.reports)
                if (!r.ok()) {
                    detail += " [" + r.summary() + "]";
                    break;
                }
        }
    }
    return ok;
}

BigRat stat_total(const WordFamily& fam, int n, BasicStat s) {
    return total(fam, n, [s](const Word& w) { return BigRat(static_cast<long>(statistic(w, s))); });
}

}  // namespace

int main() {
    VerifyOptions opt;  // max_n = 5, N = 6
    std::vector<Criterion> criteria;

    criteria.push_back({1, "counts: |PF_n| = |F_n| = (n+1)^{n-1}, |UPF_n| = |C_n| = Fub_n, n <= 6",
                        60.0, [&](std::string& d) { return suites_ok({"counts"}, opt, d); }});

    criteria.push_back({2,
                        "bijections: rho/psi/eta round-trip with statistics preserved (n <= 5), "
                        "Pollak fibers of size n+1 (n <= 5), pinned 14-vertex fixture",
                        30.0, [&](std::string& d) { return suites_ok({"bijections", "pollak"}, opt, d); }});

    criteria.push_back({3,
                        "q-identities: pf-gf(6), upf-gf(6), stanley-gf(4), A_n(q,2)=UPF_n(q) "
                        "for n <= 6, q=1 shadow",
                        60.0, [&](std::string& d) {
                            return suites_ok({"pf-gf", "upf-gf", "stanley-gf", "a-at-2", "classical-gf"},
                                             opt, d);
                        }});

    criteria.push_back({4,
                        "symmetric functions: three PF_n(x) routes (n <= 5), pf-sym-gf(5), "
                        "upf-sym-gf(6), upf-graded-gf(5), ps-inversion for PF/UPF/C_n (n <= 5)",
                        60.0, [&](std::string& d) {
                            return suites_ok({"pf-sym", "pf-sym-gf", "upf-sym-gf", "upf-graded-gf",
                                              "ps-inversion"},
                                             opt, d);
                        }});

    criteria.push_back({5,
                        "expectation framework: theorem (a)(b)(c) exact for all built-in chi "
                        "(k <= 3) on S_n, S_n+, PF_n, UPF_n (via psi), C_n, [n+1]^n, and 20 "
                        "seeded orbits, n <= 5",
                        60.0, [&](std::string& d) { return suites_ok({"k-transitive"}, opt, d); }});

    criteria.push_back({6,
                        "statistic totals over S_n and PF_n match closed forms for n in "
                        "{2,3,4,5}; spot values PF inv 18, PF tie_1 4, S_3 sdes 4, UPF inv 15 at n=3",
                        120.0, [&](std::string& d) {
                            bool ok = suites_ok({"table1", "upf-totals"}, opt, d);
                            ok = ok && stat_total(family_pf(), 3, BasicStat::inv) == BigRat(18);
                            ok = ok && total(family_pf(), 3, [](const Word& w) {
                                            return BigRat(w[0] == w[1] ? 1 : 0);
                                        }) == BigRat(4);
                            ok = ok && stat_total(family_sn(), 3, BasicStat::sdes) == BigRat(4);
                            ok = ok && stat_total(family_upf(), 3, BasicStat::inv) == BigRat(15);
                            if (!ok && d.empty()) d = " [spot values]";
                            return ok;
                        }});

    criteria.push_back({7,
                        "open-problem identities (1)-(4) for n <= 5, including Hess LHS 12 at "
                        "n=3 and sum dtop(S_3) = sum pk(S_4) = 16",
                        30.0, [&](std::string& d) {
                            bool ok = suites_ok({"identities"}, opt, d);
                            ok = ok && stat_total(family_sn(), 3, BasicStat::dtop) == BigRat(16);
                            ok = ok && stat_total(family_sn(), 4, BasicStat::pk) == BigRat(16);
                            return ok;
                        }});

    criteria.push_back({8,
                        "EGF relations to N=6 for (S_n,inv), (UPF_n,inv), (C_n,tie), one k=3 "
                        "pattern statistic; UPF inversion EGF matches z^2 e^{2z}/(2(2-e^z)^3)",
                        30.0, [&](std::string& d) { return suites_ok({"egf"}, opt, d); }});

    criteria.push_back({9, "negative controls: every verifier fails at the right coordinate", 5.0,
                        [&](std::string& d) {
                            bool ok = suites_ok({"negative-controls"}, opt, d);
                            // and the corrupt switch makes the real suites fail
                            VerifyOptions bad = opt;
                            bad.corrupt = true;
                            bad.N = 4;
                            for (const auto& name :
                                 {"pf-gf", "upf-gf", "stanley-gf", "a-at-2", "pf-sym-gf",
                                  "upf-sym-gf", "upf-graded-gf"}) {
                                if (run_suite(name, bad).ok()) {
                                    ok = false;
                                    d += std::string(" [") + name + " did not fail]";
                                }
                            }
                            return ok;
                        }});

    criteria.push_back({10,
                        "property suites: action axioms, rho-equivariance, area orbit-constancy, "
                        "Kreweras equidistribution, inv = sinv + binv",
                        60.0, [&](std::string& d) { return suites_ok({"properties"}, opt, d); }});

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string(" [exception: ") + e.what() + "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = secs <= c.budget_seconds;
        if (!ok || !in_budget) ++failures;
        std::printf("criterion %2d: %s (%.2fs/%.0fs) - %s%s\n", c.number,
                    ok && in_budget ? "PASS" : "FAIL", secs, c.budget_seconds,
                    c.description.c_str(), detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
