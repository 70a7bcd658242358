#include "parkstat/verify.hpp"

#include <json.hpp>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "parkstat/expectations.hpp"
#include "parkstat/forests.hpp"
#include "parkstat/parking.hpp"
#include "parkstat/qalgebra.hpp"
#include "parkstat/symfunc.hpp"

namespace parkstat {

std::string SuiteResult::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["status"] = ok() ? "pass" : "fail";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(nlohmann::json::parse(r.to_json()));
    j["reports"] = arr;
    return j.dump();
}

std::string SuiteResult::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << (ok() ? "pass" : "FAIL") << "\n";
    for (const auto& r : reports) os << "  " << r.summary() << "\n";
    return os.str();
}

namespace {

// ---------------------------------------------------------------- counts

Report counts_report() {
    Report r("counts", 6);
    const long long fub_table[] = {1, 1, 3, 13, 75, 541, 4683};
    for (int n = 0; n <= 6; ++n) {
        long long pf = 0, forests = 0, upf = 0, cayley = 0;
        for_each_pf(n, [&](const Word&) { ++pf; });
        for_each_forest(n, [&](const Forest&) { ++forests; });
        for_each_upf(n, [&](const Word&) { ++upf; });
        for_each_cayley(n, [&](const Word&) { ++cayley; });
        BigInt want_pf = int_pow(n + 1, n >= 1 ? n - 1 : 0);
        std::string sn = std::to_string(n);
        r.check("|PF_" + sn + "| = (n+1)^{n-1}", BigInt(static_cast<long>(pf)) == want_pf, std::to_string(pf),
                want_pf.get_str());
        r.check("|F_" + sn + "| = (n+1)^{n-1}", BigInt(static_cast<long>(forests)) == want_pf, std::to_string(forests),
                want_pf.get_str());
        r.check("|UPF_" + sn + "| = Fub_n", upf == fub_table[n], std::to_string(upf),
                std::to_string(fub_table[n]));
        r.check("|C_" + sn + "| = Fub_n", cayley == fub_table[n], std::to_string(cayley),
                std::to_string(fub_table[n]));
        r.check("Fubini recurrence matches enumeration", fubini_number(n) == BigInt(static_cast<long>(upf)));
    }
    return r;
}

// ------------------------------------------------------------- bijections

Report reference_forest_report() {
    Report r("reference-forest", 14);
    Forest f = make_forest(14, {13, 3, 5, 14, 0, 14, 0, 0, 3, 5, 7, 8, 8, 5});
    std::vector<int> w = preorder_word(f);
    std::vector<int> want_w{0, 5, 3, 2, 9, 10, 14, 4, 6, 7, 11, 8, 12, 13, 1};
    Word want_rho{14, 3, 2, 7, 1, 7, 1, 1, 3, 2, 10, 12, 12, 2};
    r.check("preorder word matches the pinned fixture", w == want_w);
    r.check("rho matches the pinned fixture", rho(f) == want_rho);
    r.check("rho_inverse(rho(F)) = F", rho_inverse(rho(f)) == f);
    r.check("pinv(F) = inv(rho(F))",
            pinv(f) == statistic(want_rho, BasicStat::inv));
    return r;
}

Report rho_bijection_report(int max_n) {
    Report r("rho-bijection", max_n);
    for (int n = 1; n <= max_n; ++n) {
        bool round = true, stats = true;
        std::set<Forest> seen;
        long long count = 0;
        for_each_pf(n, [&](const Word& a) {
            Forest f = rho_inverse(a);
            round = round && rho(f) == a;
            stats = stats && pinv(f) == statistic(a, BasicStat::inv) && area_forest(f) == area(a);
            seen.insert(f);
            ++count;
        });
        std::string sn = std::to_string(n);
        r.check("rho round-trips at n=" + sn, round);
        r.check("pinv/area preserved at n=" + sn, stats);
        r.check("rho is injective at n=" + sn, static_cast<long long>(seen.size()) == count);
    }
    return r;
}

Report psi_bijection_report(int max_n) {
    Report r("psi-bijection", max_n);
    for (int n = 0; n <= max_n; ++n) {
        bool round = true, invsets = true;
        std::set<Word> images;
        long long count = 0;
        for_each_upf(n, [&](const Word& a) {
            Word w = psi(a);
            round = round && psi_inverse(w) == a && is_cayley(w);
            invsets = invsets && inversion_set(w) == inversion_set(a);
            images.insert(w);
            ++count;
        });
        std::string sn = std::to_string(n);
        r.check("psi round-trips at n=" + sn, round);
        r.check("Inv sets preserved at n=" + sn, invsets);
        r.check("psi surjects onto C_n at n=" + sn,
                BigInt(static_cast<long>(images.size())) == fubini_number(n) &&
                    static_cast<long long>(images.size()) == count);
    }
    return r;
}

Report eta_bijection_report(int max_n) {
    Report r("eta-bijection", max_n);
    r.check("pinned fixture", eta({2, 3, 6, 8, 4, 1, 7, 5, 9}, {2, 3, 6, 8}) ==
                                  Word{2, 2, 4, 5, 2, 1, 4, 3, 5});
    for (int n = 1; n <= max_n; ++n) {
        bool round = true, inv_ok = true;
        std::set<Word> images;
        long long domain = 0;
        for_each_permutation(n, [&](const Word& sigma) {
            Word invp = inverse_permutation(sigma);
            auto ascents = ascent_set(invp);
            int a = static_cast<int>(ascents.size());
            for (unsigned mask = 0; mask < (1u << a); ++mask) {
                std::set<int> S;
                for (int b = 0; b < a; ++b)
                    if (mask & (1u << b)) S.insert(ascents[b]);
                Word w = eta(sigma, S);
                auto [sig2, s2] = eta_inverse(w);
                round = round && sig2 == sigma && s2 == S;
                inv_ok = inv_ok && statistic(w, BasicStat::inv) == statistic(sigma, BasicStat::inv);
                images.insert(w);
                ++domain;
            }
        });
        std::string sn = std::to_string(n);
        r.check("eta round-trips at n=" + sn, round);
        r.check("inv preserved at n=" + sn, inv_ok);
        r.check("|P_n| = Fub_n = |images| at n=" + sn,
                BigInt(static_cast<long>(domain)) == fubini_number(n) &&
                    BigInt(static_cast<long>(images.size())) == fubini_number(n));
    }
    return r;
}

Report pollak_report(int max_n) {
    Report r("pollak-fibers", max_n);
    for (int n = 1; n <= max_n; ++n) {
        std::map<Word, long long> fiber;
        for_each_word(n, n + 1, [&](const Word& w) { fiber[pollak_reduce(w)]++; });
        bool sizes = true, members = true;
        for (const auto& [a, c] : fiber) {
            sizes = sizes && c == n + 1;
            members = members && is_parking_function(a);
        }
        std::string sn = std::to_string(n);
        r.check("each fiber has size n+1 at n=" + sn, sizes);
        r.check("image lies in PF_n and covers it at n=" + sn,
                members && BigInt(static_cast<long>(fiber.size())) == int_pow(n + 1, n - 1));
    }
    return r;
}

// ------------------------------------------------------------- properties

Report action_axioms_report() {
    Report r("action-axioms", 4);
    for (int n = 2; n <= 4; ++n) {
        bool involution = true, braid = true, commute = true, equivariant = true, fix = true;
        for_each_forest(n, [&](const Forest& f) {
            for (int i = 1; i < n; ++i) {
                involution = involution && sn_act(sn_act(f, i), i) == f;
                if (i + 1 < n)
                    braid = braid && sn_act(sn_act(sn_act(f, i), i + 1), i) ==
                                         sn_act(sn_act(sn_act(f, i + 1), i), i + 1);
                for (int j = i + 2; j < n; ++j)
                    commute = commute && sn_act(sn_act(f, i), j) == sn_act(sn_act(f, j), i);
                equivariant = equivariant && rho(sn_act(f, i)) == adjacent_swap(rho(f), i);
                if (f.parent[i] == f.parent[i + 1]) fix = fix && sn_act(f, i) == f;
            }
        });
        std::string sn = std::to_string(n);
        r.check("involution at n=" + sn, involution);
        r.check("braid at n=" + sn, braid);
        r.check("commutation at n=" + sn, commute);
        r.check("rho equivariance at n=" + sn, equivariant);
        r.check("equal parents fixed at n=" + sn, fix);
    }
    // two factorizations of the same permutation act identically (n <= 4)
    bool welldef = true;
    for (int n = 3; n <= 4; ++n) {
        auto perms = enumerate_permutations(n);
        for_each_forest(n, [&](const Forest& f) {
            for (const auto& sigma : perms)
                welldef = welldef && rho(sn_act(f, sigma)) == act(sigma, rho(f));
        });
    }
    r.check("reduced-word composition well-defined", welldef);
    return r;
}

Report equidistribution_report(int max_n) {
    Report r("kreweras-equidistribution", max_n);
    for (int n = 1; n <= max_n; ++n) {
        std::map<long long, long long> by_area, by_ainv;
        bool orbit_const = true;
        for_each_forest(n, [&](const Forest& f) {
            by_area[area_forest(f)]++;
            by_ainv[ancestor_inv(f)]++;
            if (n <= 4)
                for (int i = 1; i < n; ++i)
                    orbit_const = orbit_const && area_forest(sn_act(f, i)) == area_forest(f);
        });
        std::string sn = std::to_string(n);
        r.check("sum t^area = sum t^inv over F_n at n=" + sn, by_area == by_ainv);
        if (n <= 4) r.check("area constant on orbits at n=" + sn, orbit_const);
    }
    return r;
}

Report word_identities_report(int max_n) {
    Report r("word-statistic-identities", max_n);
    for (int n = 2; n <= max_n; ++n) {
        bool split = true;
        for_each_word(n, n, [&](const Word& w) {
            split = split &&
                    statistic(w, BasicStat::inv) ==
                        statistic(w, BasicStat::sinv) + statistic(w, BasicStat::binv) &&
                    statistic(w, BasicStat::des) ==
                        statistic(w, BasicStat::sdes) + statistic(w, BasicStat::bdes);
        });
        r.check("inv = sinv + binv, des = sdes + bdes at n=" + std::to_string(n), split);
    }
    // MacMahon: the orbit inversion polynomial is the q-multinomial, n <= 6
    bool macmahon = true;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& c : weak_compositions(n, n)) {
            Word rep;
            for (int v = 1; v <= n; ++v)
                for (int m = 0; m < c[v - 1]; ++m) rep.push_back(v);
            macmahon = macmahon &&
                       QRat(inversion_polynomial(orbit(rep))) == QRat(q_multinomial(n, c));
        }
    }
    r.check("MacMahon orbit polynomial = q-multinomial (n <= 6)", macmahon);
    return r;
}

Report qalgebra_identities_report(int N) {
    Report r("q-algebra-identities", N);
    bool poch = true;
    for (int n = 0; n <= 12; ++n) {
        IntPoly lhs = q_pochhammer(n);
        IntPoly one_minus_q = IntPoly::one() - IntPoly::x();
        poch = poch && lhs == one_minus_q.pow(n) * q_factorial(n);
    }
    r.check("(q;q)_n = (1-q)^n [n]_q! (n <= 12)", poch);

    int order = std::max(N, 8);
    auto prod = exp_q_series(order) * [&] {
        TruncSeries<QRat> m(order);
        auto e = Exp_q_series(order);
        for (int i = 0; i <= order; ++i) m[i] = (i % 2 == 0) ? e[i] : -e[i];
        return m;
    }();
    r.check("exp_q(z) Exp_q(-z) = 1 (N=8)",
            prod == TruncSeries<QRat>::constant(order, QRat(1)));

    // compositional inverse round-trips both ways
    TruncSeries<QRat> B(order);
    for (int m = 1; m <= order; ++m) {
        IntPoly num;
        num.set_coeff((m - 1) * (m - 2) / 2, BigInt((m - 1) % 2 == 0 ? 1 : -1));
        B[m] = QRat(num, q_factorial(m - 1));
    }
    auto Q = B.compositional_inverse();
    r.check("B(Q(z)) = z (N=8)", B.compose(Q) == TruncSeries<QRat>::z(order));
    r.check("Q(B(z)) = z (N=8)", Q.compose(B) == TruncSeries<QRat>::z(order));

    // ps(e_n) = q^C(n,2)/(q;q)_n and ps(h_n) = 1/(q;q)_n
    bool pse = true;
    for (int n = 0; n <= 8; ++n) {
        IntPoly num;
        num.set_coeff(n * (n - 1) / 2, BigInt(1));
        pse = pse && ps(e_in_h(n)) == QRat(num, q_pochhammer(n)) &&
              ps(SymFQ::h(n)) == QRat(IntPoly::one(), q_pochhammer(n));
    }
    r.check("ps(e_n) = q^C(n,2)/(q;q)_n (n <= 8)", pse);

    // H(z) E(-z) = 1 with SymF coefficients
    SymSeries H = h_series(8), Em(8);
    for (int m = 0; m <= 8; ++m) {
        SymFQ e = e_in_h(m);
        Em[m] = (m % 2 == 0) ? e : -e;
    }
    r.check("H(z) E(-z) = 1 (N=8)",
            H * Em == SymSeries::constant(8, SymFQ::unit()));

    // q = 1 shadow of the sym-function generating identity,
    // via ps and z -> z(1-q): ps(PF_n(x)) (q;q)_n = PF_n(q)
    bool shadow = true;
    for (int n = 0; n <= 5; ++n)
        shadow = shadow && QRat(q_pochhammer(n)) * ps(pf_symfunc(n)) == QRat(pf_q(n));
    r.check("ps specialization turns PF_n(x) into PF_n(q) (n <= 5)", shadow);

    // q-multinomial division is exact for every composition of n <= 8
    bool exact = true;
    for (int n = 0; n <= 8 && exact; ++n)
        for (const auto& c : compositions(n)) {
            IntPoly den = IntPoly::one();
            for (int part : c) den = den * q_factorial(part);
            exact = exact && q_multinomial(n, c) * den == q_factorial(n);
            if (!exact) break;
        }
    r.check("q-multinomial division exact (n <= 8)", exact);
    return r;
}

Report graded_specialization_report(int max_n) {
    Report r("graded-t1", max_n);
    for (int n = 0; n <= max_n; ++n) {
        std::string sn = std::to_string(n);
        r.check("PF_n(x,t) at t=1 is PF_n(x), n=" + sn,
                specialize_t1(pf_symfunc_graded(n)) == pf_symfunc(n));
        r.check("UPF_n(x,t) at t=1 is UPF_n(x), n=" + sn,
                specialize_t1(upf_symfunc_graded(n)) == upf_symfunc(n));
    }
    return r;
}

// --------------------------------------------------------- k-transitive

std::vector<Word> seeded_orbit_reps(int count) {
    std::mt19937 gen(20250810u);
    std::vector<Word> reps;
    while (static_cast<int>(reps.size()) < count) {
        int n = 3 + static_cast<int>(gen() % 3);  // lengths 3..5
        Word w(n);
        std::uniform_int_distribution<int> val(1, n);
        for (int i = 0; i < n; ++i) w[i] = val(gen);
        reps.push_back(w);
    }
    return reps;
}

WordFamily family_upf_psi() {
    return {"upf_psi",
            [](int n, const std::function<void(const Word&)>& f) {
                for_each_upf(n, [&](const Word& a) { f(psi(a)); });
            },
            WordFamily::Group::symmetric};
}

Report k_transitive_preconditions_report() {
    Report r("k-transitive-preconditions", 3);
    // raw UPF_3 is not rearrangement-closed: the checker must reject it
    // before evaluating any theorem claim
    Report upf_run = verify_k_transitive_theorem(family_upf(), 3, chi_tie());
    r.check("upf family rejected as non-invariant",
            upf_run.status == Report::Status::precondition);
    // a deliberately non-invariant two-word family
    WordFamily tiny{"tiny", [](int, const std::function<void(const Word&)>& f) { f(Word{1, 2}); },
                    WordFamily::Group::symmetric};
    Report tiny_run = verify_k_transitive_theorem(tiny, 2, chi_inv());
    r.check("singleton {(1,2)} rejected as non-invariant",
            tiny_run.status == Report::Status::precondition);
    // the alternating group is not 2-transitive on [3]
    Report alt_run = verify_k_transitive_theorem(family_sn_plus(), 3, chi_inv());
    r.check("sn_plus at n=3 rejected (not 2-transitive)",
            alt_run.status == Report::Status::precondition);
    return r;
}

std::vector<Report> k_transitive_reports(const VerifyOptions& opt) {
    std::vector<Report> out;
    std::vector<WordFamily> families{family_sn(),     family_sn_plus(), family_pf(),
                                     family_upf_psi(), family_cayley(),  family_box()};
    auto chis = builtin_chis();
    for (int n = 2; n <= opt.max_n; ++n) {
        for (const auto& fam : families) {
            for (const auto& chi : chis) {
                if (chi.k > n) continue;
                if (fam.group == WordFamily::Group::alternating && chi.k > n - 2) continue;
                out.push_back(verify_k_transitive_theorem(fam, n, chi));
            }
        }
    }
    // 20 seeded random single orbits
    for (const auto& rep : seeded_orbit_reps(20)) {
        WordFamily fam = family_orbit(rep);
        int n = static_cast<int>(rep.size());
        for (const auto& chi : chis) {
            if (chi.k > n) continue;
            out.push_back(verify_k_transitive_theorem(fam, n, chi));
        }
    }
    // pattern identity E[f_{chi^R}] = |R| E[f_{chi^id}] over S_n
    Report pat("pattern-identity", opt.max_n);
    for (int n = 3; n <= opt.max_n; ++n) {
        BigRat peak_tot = total(family_sn(), n,
                                [&](const Word& w) { return f_chi(w, chi_pattern_set("peak", {{1, 3, 2}, {2, 3, 1}})); });
        BigRat id_tot = total(family_sn(), n,
                              [&](const Word& w) { return f_chi(w, chi_pattern({1, 2, 3})); });
        BigRat two_ids = BigRat(2) * id_tot;
        pat.check("sum f_peak = 2 sum f_123 at n=" + std::to_string(n), peak_tot == two_ids,
                  to_string(peak_tot), to_string(two_ids));
        // closed form n! C(n,k)/k!
        BigRat want = make_rat(factorial(n) * binomial(n, 3), factorial(3));
        pat.check("sum f_123 = n! C(n,3)/3! at n=" + std::to_string(n), id_tot == want,
                  to_string(id_tot), to_string(want));
    }
    out.push_back(pat);
    // linearity of f in theta
    Report lin("f-linearity", opt.max_n);
    {
        KTransitiveFn a = chi_inv(), b = chi_tie();
        KTransitiveFn sum{"inv+tie/3", 2, [](const std::vector<int>& v) {
                              BigRat r(v[0] > v[1] ? 1 : 0);
                              if (v[0] == v[1]) r += make_rat(1, 3);
                              return r;
                          }};
        bool linear = true;
        for_each_word(4, 3, [&](const Word& w) {
            BigRat lhs = f_chi(w, sum);
            BigRat rhs = f_chi(w, a) + make_rat(1, 3) * f_chi(w, b);
            linear = linear && lhs == rhs;
        });
        lin.check("f_{chi + chi'/3} = f_chi + f_chi'/3 pointwise", linear);
    }
    out.push_back(lin);
    // chi^inv = chi^sdes + chi^bdes pointwise, so totals split on any family
    Report split("inv-splits", opt.max_n);
    for (const auto& fam : {family_sn(), family_pf(), family_cayley()}) {
        int n = std::min(opt.max_n, 4);
        BigRat inv_tot = total(fam, n, [&](const Word& w) { return f_chi(w, chi_inv()); });
        BigRat sdes_tot = total(fam, n, [&](const Word& w) { return f_chi(w, chi_sdes()); });
        BigRat bdes_tot = total(fam, n, [&](const Word& w) { return f_chi(w, chi_bdes()); });
        split.check("sinv + binv = inv totals on " + fam.name, inv_tot == sdes_tot + bdes_tot);
    }
    out.push_back(split);
    out.push_back(k_transitive_preconditions_report());
    return out;
}

// ------------------------------------------------------ negative controls

IntPoly corrupt_pf_q(int n) {
    IntPoly p = pf_q(n);
    if (n == 2) p.set_coeff(1, p.coeff(1) + 1);  // 2 + q -> 2 + 2q
    return p;
}

IntPoly corrupt_upf_q(int n) {
    IntPoly p = upf_q(n);
    if (n == 3) p.set_coeff(0, p.coeff(0) + 1);
    return p;
}

BiPoly corrupt_a_inv_asc(int n) {
    BiPoly p = a_inv_asc(n);
    if (n == 2) p.add_term(0, 0, 1);
    return p;
}

SymFQ corrupt_pf_symfunc(int n) {
    SymFQ f = pf_symfunc(n);
    if (n == 2) f.add_term({2}, BigRat(1));
    return f;
}

SymFQ corrupt_upf_symfunc(int n) {
    SymFQ f = upf_symfunc(n);
    if (n == 3) f.add_term({2, 1}, BigRat(1));
    return f;
}

SymFT corrupt_upf_symfunc_graded(int n) {
    SymFT f = upf_symfunc_graded(n);
    if (n == 2) f.add_term({2}, TPoly(BigRat(1)));
    return f;
}

Report negative_controls_report() {
    Report r("negative-controls", 0);

    Report pf = verify_pf_gf(4, corrupt_pf_q);
    r.check("pf-gf detects corrupted PF_2(q) at z^3",
            pf.status == Report::Status::fail && pf.first_mismatch == "z^3");

    Report upf = verify_upf_gf(4, corrupt_upf_q);
    r.check("upf-gf detects corrupted UPF_3(q) at z^3",
            upf.status == Report::Status::fail && upf.first_mismatch == "z^3");

    Report a2 = verify_a_at_2(3, corrupt_upf_q);
    r.check("a-at-2 detects corrupted UPF_3(q)", a2.status == Report::Status::fail);

    Report st = verify_stanley_gf(3, corrupt_a_inv_asc);
    r.check("stanley-gf detects corrupted A_2(q,t) at z^2",
            st.status == Report::Status::fail && st.first_mismatch == "z^2");

    Report psg = verify_pf_sym_gf(4, corrupt_pf_symfunc);
    r.check("pf-sym-gf detects corrupted PF_2(x) at z^3",
            psg.status == Report::Status::fail && psg.first_mismatch == "z^3");

    Report usg = verify_upf_sym_gf(4, corrupt_upf_symfunc);
    r.check("upf-sym-gf detects corrupted UPF_3(x) at z^3",
            usg.status == Report::Status::fail && usg.first_mismatch == "z^3");

    Report ugg = verify_upf_graded_gf(3, corrupt_upf_symfunc_graded);
    r.check("upf-graded-gf detects corrupted UPF_2(x,t) at z^2",
            ugg.status == Report::Status::fail && ugg.first_mismatch == "z^2");

    IntPoly bad_pf3 = pf_q(3);
    bad_pf3.set_coeff(1, bad_pf3.coeff(1) + 1);
    Report psi_r = verify_ps_inversion(enumerate_pf(3), 3, "corrupted-claim", bad_pf3);
    r.check("ps-inversion detects a corrupted claimed polynomial",
            psi_r.status == Report::Status::fail);
    // a non-invariant word set must be rejected before any identity is checked
    Report psi_inv = verify_ps_inversion({{1, 2}}, 2, "non-invariant");
    r.check("ps-inversion rejects a non-invariant set",
            psi_inv.status == Report::Status::precondition);

    // classical-gf with a corrupted count cannot be injected (it derives its
    // own counts), so corrupt the series instead: drop the z^3 PF term
    Report cg("classical-negative", 3);
    {
        TruncSeries<BigRat> B(4), A(4);
        for (int m = 1; m <= 4; ++m) {
            B[m] = make_rat(m % 2 == 1 ? 1 : -1, factorial(m - 1));
            BigInt cnt = int_pow(m, m >= 2 ? m - 2 : 0);
            A[m] = make_rat(cnt, factorial(m - 1));
        }
        A[3] = A[3] + BigRat(1);
        cg.check("corrupted classical inverse detected", !(B.compose(A) == TruncSeries<BigRat>::z(4)));
    }
    r.check("classical-gf corruption detected", cg.ok());
    return r;
}

// ------------------------------------------------------------ suite table

Report graphical_suite_report(int n) {
    Report r("graphical-closed-forms", n);
    Digraph single(n, {{1, 2}});
    Report g1 = graphical_totals(single, n);
    r.check("single edge digraph at n=" + std::to_string(n), g1.ok());
    std::set<std::pair<int, int>> cyc{{1, 2}, {2, 3}, {3, 1}};
    Report g2 = graphical_totals(Digraph(n, cyc), n);
    r.check("3-cycle digraph at n=" + std::to_string(n), g2.ok());
    // complete "i -> j iff i > j" digraph recovers the inv/des totals
    std::set<std::pair<int, int>> lower;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) lower.insert({i, j});
    Digraph complete(n, lower);
    Report g3 = graphical_totals(complete, n);
    r.check("complete descent digraph at n=" + std::to_string(n), g3.ok());
    BigRat inv_tot = total(family_sn(), n, [&](const Word& w) {
        return BigRat(static_cast<long>(statistic(w, StatisticId::graphical_inv(complete))));
    });
    BigRat want = make_rat(factorial(n) * n * (n - 1), 4);
    r.check("reduces to the inversion total", inv_tot == want, to_string(inv_tot), to_string(want));
    return r;
}

void append(std::vector<Report>& v, Report r) { v.push_back(std::move(r)); }

}  // namespace

std::vector<std::string> suite_names() {
    return {"counts",       "bijections",  "pollak",      "pf-gf",        "upf-gf",
            "stanley-gf",   "a-at-2",      "classical-gf", "pf-sym",       "pf-sym-gf",
            "upf-sym-gf",   "upf-graded-gf", "ps-inversion", "k-transitive", "table1",
            "upf-totals",   "dtop-itop-peak", "graphical",  "identities",   "egf",
            "properties",   "negative-controls", "all"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    SuiteResult res;
    res.suite = name;
    auto& out = res.reports;
    int pf_cap = opt.extended ? 6 : opt.max_n;

    if (name == "all") {
        for (const auto& s : suite_names()) {
            if (s == "all") continue;
            SuiteResult sub = run_suite(s, opt);
            for (auto& r : sub.reports) out.push_back(std::move(r));
        }
        return res;
    }

    if (name == "counts") {
        append(out, counts_report());
    } else if (name == "bijections") {
        append(out, reference_forest_report());
        append(out, rho_bijection_report(opt.max_n));
        append(out, psi_bijection_report(opt.max_n));
        append(out, eta_bijection_report(opt.max_n));
    } else if (name == "pollak") {
        append(out, pollak_report(std::min(opt.max_n, 5)));
    } else if (name == "pf-gf") {
        append(out, verify_pf_gf(opt.N, opt.corrupt ? QPolyProvider(corrupt_pf_q) : QPolyProvider(pf_q)));
    } else if (name == "upf-gf") {
        append(out, verify_upf_gf(opt.N, opt.corrupt ? QPolyProvider(corrupt_upf_q) : QPolyProvider(upf_q)));
    } else if (name == "stanley-gf") {
        append(out, verify_stanley_gf(std::min(opt.N, 4),
                                      opt.corrupt ? BiPolyProvider(corrupt_a_inv_asc) : BiPolyProvider(a_inv_asc)));
    } else if (name == "a-at-2") {
        for (int n = 1; n <= 6; ++n)
            append(out, verify_a_at_2(n, opt.corrupt ? QPolyProvider(corrupt_upf_q) : QPolyProvider(upf_q)));
    } else if (name == "classical-gf") {
        append(out, verify_classical_gf(std::max(opt.N, 8)));
    } else if (name == "pf-sym") {
        for (int n = 0; n <= opt.max_n; ++n) append(out, verify_pf_sym_routes(n));
    } else if (name == "pf-sym-gf") {
        append(out, verify_pf_sym_gf(std::min(opt.N, 5),
                                     opt.corrupt ? SymProvider(corrupt_pf_symfunc) : SymProvider(pf_symfunc)));
    } else if (name == "upf-sym-gf") {
        append(out, verify_upf_sym_gf(opt.N,
                                      opt.corrupt ? SymProvider(corrupt_upf_symfunc) : SymProvider(upf_symfunc)));
    } else if (name == "upf-graded-gf") {
        append(out, verify_upf_graded_gf(std::min(opt.N, 5), opt.corrupt
                                                                 ? SymTProvider(corrupt_upf_symfunc_graded)
                                                                 : SymTProvider(upf_symfunc_graded)));
    } else if (name == "ps-inversion") {
        for (int n = 1; n <= opt.max_n; ++n) {
            append(out, verify_ps_inversion(enumerate_pf(n), n, "pf", pf_q(n)));
            append(out, verify_ps_inversion(enumerate_cayley(n), n, "cayley", upf_q(n)));
            append(out, verify_ps_inversion_upf(n, upf_q(n)));
        }
        append(out, verify_ps_inversion(orbit({1, 1, 2, 3}), 4, "orbit(1,1,2,3)"));
        append(out, verify_ps_inversion(orbit({2, 2, 1, 1, 3}), 5, "orbit(1,1,2,2,3)"));
    } else if (name == "k-transitive") {
        for (auto& r : k_transitive_reports(opt)) out.push_back(std::move(r));
    } else if (name == "table1") {
        if (opt.table_n > 0) {
            append(out, table1(opt.table_n));
        } else {
            for (int n = 2; n <= std::min(pf_cap, 6); ++n) append(out, table1(n));
        }
    } else if (name == "upf-totals") {
        for (int n = 1; n <= opt.max_n; ++n) append(out, upf_totals(n));
    } else if (name == "dtop-itop-peak") {
        for (int n = 2; n <= opt.max_n; ++n) append(out, dtop_itop_peak_totals(n));
    } else if (name == "graphical") {
        for (int n = 3; n <= std::min(opt.max_n, 4); ++n) append(out, graphical_suite_report(n));
    } else if (name == "identities") {
        for (int n = 1; n <= opt.max_n; ++n) append(out, identity_checks(n));
    } else if (name == "egf") {
        append(out, egf_verify(family_sn(), chi_inv(), opt.N));
        append(out, egf_verify(family_upf(), chi_inv(), opt.N));
        append(out, egf_verify(family_cayley(), chi_tie(), opt.N));
        append(out, egf_verify(family_sn(), chi_pattern_set("peak", {{1, 3, 2}, {2, 3, 1}}), opt.N));
    } else if (name == "properties") {
        append(out, action_axioms_report());
        append(out, equidistribution_report(opt.max_n));
        append(out, word_identities_report(opt.max_n));
        append(out, qalgebra_identities_report(opt.N));
        append(out, graded_specialization_report(std::min(opt.max_n, 5)));
    } else if (name == "negative-controls") {
        append(out, negative_controls_report());
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return res;
}

const std::vector<std::string>& op_catalog() {
    static const std::vector<std::string> ops = {
        "words.content",          "words.statistic",        "words.pattern_count",
        "words.orbit",            "words.compositions",     "words.cayley",
        "parking.park",           "parking.is_parking_function", "parking.enumerate_pf",
        "parking.upf",            "parking.block_structure", "parking.psi",
        "parking.eta",            "parking.pollak_reduce",  "parking.hess",
        "parking.area",           "forests.preorder_word",  "forests.rho",
        "forests.pinv",           "forests.area_ancestor",  "forests.sn_act",
        "forests.enumerate",      "forests.parental_content", "qalgebra.q_basics",
        "qalgebra.q_binom",       "qalgebra.q_exp_series",  "qalgebra.series_ops",
        "qalgebra.pf_q",          "qalgebra.upf_q",         "qalgebra.verify_pf_gf",
        "qalgebra.verify_upf_gf", "qalgebra.a_inv_asc",     "symfunc.h_of",
        "symfunc.e_in_h",         "symfunc.multiply",       "symfunc.frobenius",
        "symfunc.pf_symfunc",     "symfunc.upf_symfunc",    "symfunc.pf_symfunc_graded",
        "symfunc.ps",             "expectations.f_g_chi1",  "expectations.expectation_total",
        "expectations.verify_k_transitive", "expectations.table1", "expectations.upf_totals",
        "expectations.dtop_itop_peak_graphical", "expectations.identity_checks",
        "expectations.egf_verify",
    };
    return ops;
}

std::vector<std::string> ops_covered(const std::string& suite) {
    static const std::map<std::string, std::vector<std::string>> cover = {
        {"counts", {"parking.enumerate_pf", "parking.upf", "words.cayley", "forests.enumerate"}},
        {"bijections",
         {"forests.preorder_word", "forests.rho", "forests.pinv", "parking.psi", "parking.eta",
          "parking.park", "parking.is_parking_function", "parking.block_structure",
          "words.statistic"}},
        {"pollak", {"parking.pollak_reduce"}},
        {"pf-gf", {"qalgebra.pf_q", "qalgebra.verify_pf_gf", "qalgebra.q_exp_series", "qalgebra.series_ops"}},
        {"upf-gf", {"qalgebra.upf_q", "qalgebra.verify_upf_gf"}},
        {"stanley-gf", {"qalgebra.a_inv_asc"}},
        {"a-at-2", {"qalgebra.a_inv_asc", "qalgebra.upf_q"}},
        {"classical-gf", {"qalgebra.series_ops", "qalgebra.pf_q", "qalgebra.upf_q"}},
        {"pf-sym", {"symfunc.pf_symfunc", "symfunc.h_of", "symfunc.multiply", "forests.parental_content"}},
        {"pf-sym-gf", {"symfunc.pf_symfunc", "symfunc.e_in_h", "symfunc.multiply"}},
        {"upf-sym-gf", {"symfunc.upf_symfunc", "words.compositions"}},
        {"upf-graded-gf", {"symfunc.upf_symfunc", "parking.area", "parking.block_structure"}},
        {"ps-inversion", {"symfunc.ps", "symfunc.frobenius", "words.orbit", "symfunc.upf_symfunc"}},
        {"k-transitive",
         {"expectations.f_g_chi1", "expectations.verify_k_transitive",
          "expectations.expectation_total", "words.orbit", "words.pattern_count"}},
        {"table1", {"expectations.table1", "words.statistic"}},
        {"upf-totals", {"expectations.upf_totals"}},
        {"dtop-itop-peak", {"expectations.dtop_itop_peak_graphical"}},
        {"graphical", {"expectations.dtop_itop_peak_graphical", "expectations.expectation_total"}},
        {"identities", {"expectations.identity_checks", "parking.hess"}},
        {"egf", {"expectations.egf_verify"}},
        {"properties",
         {"forests.sn_act", "forests.area_ancestor", "forests.rho", "words.content",
          "words.orbit", "words.compositions", "qalgebra.q_basics", "qalgebra.q_binom",
          "qalgebra.q_exp_series", "qalgebra.series_ops", "symfunc.e_in_h", "symfunc.ps",
          "symfunc.h_of", "parking.area", "symfunc.pf_symfunc_graded"}},
        {"negative-controls",
         {"qalgebra.verify_pf_gf", "qalgebra.verify_upf_gf", "qalgebra.a_inv_asc",
          "symfunc.frobenius"}},
    };
    auto it = cover.find(suite);
    if (it == cover.end()) return {};
    return it->second;
}

}  // namespace parkstat
