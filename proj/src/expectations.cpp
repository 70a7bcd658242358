#include "parkstat/expectations.hpp"

#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

#include "parkstat/parking.hpp"

namespace parkstat {

namespace {

std::atomic<int> g_threads{0};  // 0 = uninitialized

int env_thread_count() {
    const char* env = std::getenv("PARKSTAT_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

}  // namespace

int thread_count() {
    int t = g_threads.load();
    if (t == 0) {
        t = env_thread_count();
        g_threads.store(t);
    }
    return t;
}

void set_thread_count(int t) { g_threads.store(t >= 1 ? t : 1); }

namespace {

// Exact chunked reduction: partial sums are merged in chunk order, so the
// result is identical for every worker count.
BigRat chunked_total(const std::vector<Word>& items, const std::function<BigRat(const Word&)>& f) {
    int workers = thread_count();
    if (workers <= 1 || items.size() < 64) {
        BigRat acc(0);
        for (const auto& w : items) acc += f(w);
        return acc;
    }
    size_t chunk = (items.size() + workers - 1) / workers;
    std::vector<BigRat> partial(workers, BigRat(0));
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t]() {
            size_t lo = t * chunk;
            size_t hi = std::min(items.size(), lo + chunk);
            BigRat acc(0);
            for (size_t i = lo; i < hi; ++i) acc += f(items[i]);
            partial[t] = acc;
        });
    }
    for (auto& th : pool) th.join();
    BigRat acc(0);
    for (const auto& p : partial) acc += p;
    return acc;
}

}  // namespace

KTransitiveFn chi_inv() {
    return {"inv", 2, [](const std::vector<int>& v) { return BigRat(v[0] > v[1] ? 1 : 0); }};
}

KTransitiveFn chi_tie() {
    return {"tie", 2, [](const std::vector<int>& v) { return BigRat(v[0] == v[1] ? 1 : 0); }};
}

KTransitiveFn chi_sdes() {
    return {"sdes", 2, [](const std::vector<int>& v) { return BigRat(v[0] == v[1] + 1 ? 1 : 0); }};
}

KTransitiveFn chi_bdes() {
    return {"bdes", 2, [](const std::vector<int>& v) { return BigRat(v[0] > v[1] + 1 ? 1 : 0); }};
}

KTransitiveFn chi_dtop() {
    return {"dtop", 2, [](const std::vector<int>& v) { return BigRat(v[0] > v[1] ? v[0] : 0); }};
}

namespace {

bool matches_pattern(const std::vector<int>& values, const Word& rho_inv) {
    for (size_t s = 0; s + 1 < rho_inv.size(); ++s)
        if (values[rho_inv[s] - 1] >= values[rho_inv[s + 1] - 1]) return false;
    return true;
}

}  // namespace

KTransitiveFn chi_pattern(const Word& rho) {
    if (!is_permutation(rho)) throw std::invalid_argument("chi_pattern: rho must be a permutation");
    Word rho_inv = inverse_permutation(rho);
    std::string name = "pat";
    for (int v : rho) name += std::to_string(v);
    return {name, static_cast<int>(rho.size()),
            [rho_inv](const std::vector<int>& v) { return BigRat(matches_pattern(v, rho_inv) ? 1 : 0); }};
}

KTransitiveFn chi_pattern_set(const std::string& name, const std::vector<Word>& R) {
    if (R.empty()) throw std::invalid_argument("chi_pattern_set: empty pattern set");
    int k = static_cast<int>(R.front().size());
    std::vector<Word> inverses;
    for (const auto& rho : R) {
        if (static_cast<int>(rho.size()) != k)
            throw std::invalid_argument("chi_pattern_set: mixed pattern lengths");
        if (!is_permutation(rho)) throw std::invalid_argument("chi_pattern_set: non-permutation pattern");
        inverses.push_back(inverse_permutation(rho));
    }
    return {name, k, [inverses](const std::vector<int>& v) {
                int c = 0;
                for (const auto& ri : inverses)
                    if (matches_pattern(v, ri)) ++c;
                return BigRat(c);
            }};
}

KTransitiveFn chi_graphical(const Digraph& d) {
    return {"graphical", 2,
            [d](const std::vector<int>& v) { return BigRat(d.has_edge(v[0], v[1]) ? 1 : 0); }};
}

std::vector<KTransitiveFn> builtin_chis() {
    return {chi_inv(),
            chi_tie(),
            chi_sdes(),
            chi_bdes(),
            chi_dtop(),
            chi_pattern({2, 1}),
            chi_pattern({1, 2, 3}),
            chi_pattern({1, 3, 2}),
            chi_pattern({2, 3, 1}),
            chi_pattern_set("peak", {{1, 3, 2}, {2, 3, 1}})};
}

BigRat f_chi(const Word& w, const KTransitiveFn& chi) {
    int n = static_cast<int>(w.size());
    int k = chi.k;
    if (k > n) throw std::invalid_argument("f_chi: k exceeds word length");
    std::vector<int> idx(k), vals(k);
    for (int s = 0; s < k; ++s) idx[s] = s;
    BigRat acc(0);
    while (true) {
        for (int s = 0; s < k; ++s) vals[s] = w[idx[s]];
        acc += chi.theta(vals);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return acc;
}

BigRat g_chi(const Word& w, const KTransitiveFn& chi) {
    int n = static_cast<int>(w.size());
    int k = chi.k;
    if (k > n) throw std::invalid_argument("g_chi: k exceeds word length");
    std::vector<int> vals(k);
    BigRat acc(0);
    for (int i = 0; i + k <= n; ++i) {
        for (int s = 0; s < k; ++s) vals[s] = w[i + s];
        acc += chi.theta(vals);
    }
    return acc;
}

BigRat chi_1(const Word& w, const KTransitiveFn& chi) {
    int k = chi.k;
    if (k > static_cast<int>(w.size())) throw std::invalid_argument("chi_1: k exceeds word length");
    std::vector<int> vals(w.begin(), w.begin() + k);
    return chi.theta(vals);
}

WordFamily family_sn() {
    return {"sn", [](int n, const std::function<void(const Word&)>& f) { for_each_permutation(n, f); },
            WordFamily::Group::symmetric};
}

WordFamily family_sn_plus() {
    return {"sn_plus",
            [](int n, const std::function<void(const Word&)>& f) {
                for_each_permutation(n, [&](const Word& w) {
                    if (statistic(w, BasicStat::inv) % 2 == 0) f(w);
                });
            },
            WordFamily::Group::alternating};
}

WordFamily family_pf() {
    return {"pf", [](int n, const std::function<void(const Word&)>& f) { for_each_pf(n, f); },
            WordFamily::Group::symmetric};
}

WordFamily family_upf() {
    // not rearrangement-closed: (1,1,2) is a UPF but (1,2,1) is not
    return {"upf", [](int n, const std::function<void(const Word&)>& f) { for_each_upf(n, f); },
            WordFamily::Group::none};
}

WordFamily family_cayley() {
    return {"cayley", [](int n, const std::function<void(const Word&)>& f) { for_each_cayley(n, f); },
            WordFamily::Group::symmetric};
}

WordFamily family_box() {
    return {"box", [](int n, const std::function<void(const Word&)>& f) { for_each_word(n, n + 1, f); },
            WordFamily::Group::symmetric};
}

WordFamily family_orbit(const Word& w) {
    std::vector<Word> orb = orbit(w);
    int len = static_cast<int>(w.size());
    return {"orbit" + word_to_string(w),
            [orb, len](int n, const std::function<void(const Word&)>& f) {
                if (n != len) throw std::invalid_argument("orbit family: fixed length " + std::to_string(len));
                for (const auto& u : orb) f(u);
            },
            WordFamily::Group::symmetric};
}

std::optional<WordFamily> family_by_name(const std::string& name) {
    if (name == "sn") return family_sn();
    if (name == "sn_plus") return family_sn_plus();
    if (name == "pf") return family_pf();
    if (name == "upf") return family_upf();
    if (name == "cayley") return family_cayley();
    if (name == "box") return family_box();
    return std::nullopt;
}

std::vector<Word> materialize(const WordFamily& family, int n) {
    std::vector<Word> out;
    family.generate(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

bool verify_family_invariance(const WordFamily& family, int n) {
    auto words = materialize(family, n);
    std::set<Word> set(words.begin(), words.end());
    if (family.group == WordFamily::Group::alternating) {
        // closure under all products of two adjacent transpositions, which
        // generate the alternating group
        for (const auto& w : set)
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j)
                    if (!set.count(adjacent_swap(adjacent_swap(w, i), j))) return false;
        return true;
    }
    for (const auto& w : set)
        for (int i = 1; i < n; ++i)
            if (!set.count(adjacent_swap(w, i))) return false;
    return true;
}

BigRat total(const WordFamily& family, int n, const std::function<BigRat(const Word&)>& f) {
    auto words = materialize(family, n);
    if (words.empty()) throw std::invalid_argument("total: empty family");
    return chunked_total(words, f);
}

BigRat expectation(const WordFamily& family, int n, const std::function<BigRat(const Word&)>& f) {
    auto words = materialize(family, n);
    if (words.empty()) throw std::invalid_argument("expectation: empty family");
    BigRat t = chunked_total(words, f);
    BigRat r = t / BigRat(static_cast<long>(words.size()));
    r.canonicalize();
    return r;
}

Report verify_k_transitive_theorem(const WordFamily& family, int n, const KTransitiveFn& chi) {
    Report r("k-transitive[" + family.name + "," + chi.name + "]", n);
    int k = chi.k;
    if (k > n) {
        r.fail_precondition("k exceeds n");
        return r;
    }
    if (family.group == WordFamily::Group::alternating && k > n - 2) {
        // A_n acts k-transitively only for k <= n-2
        r.fail_precondition("alternating group is not " + std::to_string(k) + "-transitive on [" +
                            std::to_string(n) + "]");
        return r;
    }
    if (!verify_family_invariance(family, n)) {
        r.fail_precondition("family is not invariant under its symmetry group");
        return r;
    }
    auto words = materialize(family, n);
    BigRat Tf = chunked_total(words, [&](const Word& w) { return f_chi(w, chi); });
    BigRat Tg = chunked_total(words, [&](const Word& w) { return g_chi(w, chi); });
    BigRat T1 = chunked_total(words, [&](const Word& w) { return chi_1(w, chi); });

    BigRat nk(binomial(n, k));
    BigRat nk1(binomial(n, k - 1));
    BigRat a_rhs = nk * T1;
    BigRat b_rhs = BigRat(n - k + 1) * T1;
    BigRat c_rhs = nk1 / BigRat(k) * Tg;
    r.check("(a) sum f = C(n,k) sum chi1", Tf == a_rhs, to_string(Tf), to_string(a_rhs));
    r.check("(b) sum g = (n-k+1) sum chi1", Tg == b_rhs, to_string(Tg), to_string(b_rhs));
    r.check("(c) sum f = C(n,k-1)/k sum g", Tf == c_rhs, to_string(Tf), to_string(c_rhs));
    return r;
}

namespace {

struct Table1Row {
    std::string name;
    std::function<BigRat(const Word&)> stat;
    std::function<BigRat(int)> sn_form;
    std::function<BigRat(int)> pf_form;
};

BigRat stat_wrap(const Word& w, BasicStat s) { return BigRat(static_cast<long>(statistic(w, s))); }

std::vector<Table1Row> table1_rows() {
    auto pow_part = [](int n) { return BigInt(int_pow(n + 1, n - 2)); };  // (n+1)^{n-2}, n >= 2
    return {
        {"inv", [](const Word& w) { return stat_wrap(w, BasicStat::inv); },
         [](int n) { return make_rat(factorial(n) * n * (n - 1), 4); },
         [pow_part](int n) { return make_rat(BigInt(n) * pow_part(n) * binomial(n, 2), 2); }},
        {"des", [](const Word& w) { return stat_wrap(w, BasicStat::des); },
         [](int n) { return make_rat(factorial(n) * (n - 1), 2); },
         [pow_part](int n) { return BigRat(binomial(n, 2) * pow_part(n)); }},
        {"des_1", [](const Word& w) { return BigRat(w[0] > w[1] ? 1 : 0); },
         [](int n) { return make_rat(factorial(n), 2); },
         [pow_part](int n) { return make_rat(BigInt(n) * pow_part(n), 2); }},
        {"tie", [](const Word& w) { return stat_wrap(w, BasicStat::tie); },
         [](int) { return BigRat(0); },
         [pow_part](int n) { return BigRat(BigInt(n - 1) * pow_part(n)); }},
        {"tie_1", [](const Word& w) { return BigRat(w[0] == w[1] ? 1 : 0); },
         [](int) { return BigRat(0); },
         [pow_part](int n) { return BigRat(pow_part(n)); }},
        {"sdes", [](const Word& w) { return stat_wrap(w, BasicStat::sdes); },
         [](int n) { return BigRat(BigInt(n - 1) * factorial(n - 1)); },
         [pow_part](int n) { return BigRat(BigInt(n - 1) * pow_part(n)); }},
        {"sdes_1", [](const Word& w) { return BigRat(w[0] == w[1] + 1 ? 1 : 0); },
         [](int n) { return BigRat(factorial(n - 1)); },
         [pow_part](int n) { return BigRat(pow_part(n)); }},
        {"sinv", [](const Word& w) { return stat_wrap(w, BasicStat::sinv); },
         [](int n) { return make_rat(factorial(n) * (n - 1), 2); },
         [pow_part](int n) { return BigRat(binomial(n, 2) * pow_part(n)); }},
        {"bdes", [](const Word& w) { return stat_wrap(w, BasicStat::bdes); },
         [](int n) { return BigRat(binomial(n - 1, 2) * factorial(n - 1)); },
         [pow_part](int n) { return BigRat(binomial(n - 1, 2) * pow_part(n)); }},
        {"bdes_1", [](const Word& w) { return BigRat(w[0] > w[1] + 1 ? 1 : 0); },
         [](int n) { return make_rat(BigInt(n - 2) * factorial(n - 1), 2); },
         [pow_part](int n) { return make_rat(BigInt(n - 2) * pow_part(n), 2); }},
        {"binv", [](const Word& w) { return stat_wrap(w, BasicStat::binv); },
         [](int n) { return make_rat(BigInt(n - 1) * (n - 2) * factorial(n), 4); },
         [pow_part](int n) { return make_rat(BigInt(n) * (n - 1) * (n - 2) * pow_part(n), 4); }},
    };
}

}  // namespace

Report table1(int n) {
    if (n < 2) throw std::invalid_argument("table1: n must be at least 2");
    Report r("table1", n);
    auto sn_words = materialize(family_sn(), n);
    auto pf_words = materialize(family_pf(), n);
    for (const auto& row : table1_rows()) {
        BigRat sn_tot = chunked_total(sn_words, row.stat);
        BigRat pf_tot = chunked_total(pf_words, row.stat);
        BigRat sn_want = row.sn_form(n);
        BigRat pf_want = row.pf_form(n);
        r.check("S_n " + row.name, sn_tot == sn_want, to_string(sn_tot), to_string(sn_want));
        r.check("PF_n " + row.name, pf_tot == pf_want, to_string(pf_tot), to_string(pf_want));
    }
    return r;
}

Report upf_totals(int n) {
    if (n < 1) throw std::invalid_argument("upf_totals: n must be positive");
    Report r("upf-totals", n);
    auto upf_words = materialize(family_upf(), n);
    auto cayley_words = materialize(family_cayley(), n);

    auto des = [](const Word& w) { return stat_wrap(w, BasicStat::des); };
    auto inv = [](const Word& w) { return stat_wrap(w, BasicStat::inv); };
    auto tie = [](const Word& w) { return stat_wrap(w, BasicStat::tie); };

    BigRat delta(fubini_number(n) - fubini_number(n - 1));
    BigRat des_want = BigRat(n - 1) * delta / 2;
    BigRat inv_want = BigRat(n) * BigRat(n - 1) * delta / 4;
    BigRat tie_want = BigRat(n - 1) * BigRat(fubini_number(n - 1));
    des_want.canonicalize();
    inv_want.canonicalize();
    tie_want.canonicalize();

    BigRat upf_des = chunked_total(upf_words, des);
    BigRat upf_inv = chunked_total(upf_words, inv);
    BigRat cay_des = chunked_total(cayley_words, des);
    BigRat cay_inv = chunked_total(cayley_words, inv);
    BigRat cay_tie = chunked_total(cayley_words, tie);

    // psi preserves the inversion set, so des/inv totals transfer to C_n
    r.check("UPF des total = Cayley des total", upf_des == cay_des, to_string(upf_des), to_string(cay_des));
    r.check("UPF inv total = Cayley inv total", upf_inv == cay_inv, to_string(upf_inv), to_string(cay_inv));
    r.check("des total = (n-1)(Fub_n - Fub_{n-1})/2", upf_des == des_want, to_string(upf_des), to_string(des_want));
    r.check("inv total = n(n-1)(Fub_n - Fub_{n-1})/4", upf_inv == inv_want, to_string(upf_inv), to_string(inv_want));
    r.check("Cayley tie total = (n-1) Fub_{n-1}", cay_tie == tie_want, to_string(cay_tie), to_string(tie_want));
    return r;
}

Report dtop_itop_peak_totals(int n) {
    if (n < 2) throw std::invalid_argument("dtop_itop_peak_totals: n must be at least 2");
    Report r("dtop-itop-peak", n);
    auto sn = materialize(family_sn(), n);
    BigRat dtop_tot = chunked_total(sn, [](const Word& w) { return stat_wrap(w, BasicStat::dtop); });
    BigRat itop_tot = chunked_total(sn, [](const Word& w) { return stat_wrap(w, BasicStat::itop); });
    BigRat pk_tot = chunked_total(sn, [](const Word& w) { return stat_wrap(w, BasicStat::pk); });
    BigRat hz_tot = chunked_total(sn, [](const Word& w) { return stat_wrap(w, BasicStat::hz); });

    BigRat dtop_want = make_rat(factorial(n + 1) * (n - 1), 3);
    BigRat itop_want(binomial(n + 1, 3) * factorial(n));
    BigRat pk_want = make_rat(BigInt(n - 2) * factorial(n), 3);
    BigRat hz_want = make_rat(binomial(n, 3) * factorial(n), 3);

    r.check("sum dtop = (n+1)!(n-1)/3", dtop_tot == dtop_want, to_string(dtop_tot), to_string(dtop_want));
    r.check("sum itop = C(n+1,3) n!", itop_tot == itop_want, to_string(itop_tot), to_string(itop_want));
    r.check("sum pk = (n-2) n!/3", pk_tot == pk_want, to_string(pk_tot), to_string(pk_want));
    r.check("sum hz = C(n,3) n!/3", hz_tot == hz_want, to_string(hz_tot), to_string(hz_want));
    return r;
}

Report graphical_totals(const Digraph& d, int n) {
    if (d.vertex_count < n) throw std::invalid_argument("graphical_totals: digraph too small");
    Report r("graphical", n);
    auto sn = materialize(family_sn(), n);
    StatisticId ginv = StatisticId::graphical_inv(d);
    StatisticId gdes = StatisticId::graphical_des(d);
    BigRat inv_tot = chunked_total(sn, [&](const Word& w) { return BigRat(static_cast<long>(statistic(w, ginv))); });
    BigRat des_tot = chunked_total(sn, [&](const Word& w) { return BigRat(static_cast<long>(statistic(w, gdes))); });
    long edges = static_cast<long>(d.edges.size());
    BigRat inv_want = make_rat(factorial(n) * edges, 2);
    BigRat des_want(factorial(n - 1) * edges);
    r.check("sum inv'_D = n!|E|/2", inv_tot == inv_want, to_string(inv_tot), to_string(inv_want));
    r.check("sum des'_D = (n-1)!|E|", des_tot == des_want, to_string(des_tot), to_string(des_want));
    return r;
}

namespace {

// sum_i multinomial(n; c_1,...,c_{i-1}, c_i - 2, 2, c_{i+1},...,c_l)
BigInt tie_multinomial_sum(const std::vector<int>& c) {
    BigInt acc = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 2) continue;
        std::vector<int> parts = c;
        parts[i] -= 2;
        parts.insert(parts.begin() + i + 1, 2);
        acc += multinomial(parts);
    }
    return acc;
}

}  // namespace

Report identity_checks(int n) {
    if (n < 1) throw std::invalid_argument("identity_checks: n must be positive");
    Report r("identities", n);

    // (1) sum_{S_n} dtop = sum_{S_{n+1}} pk
    BigRat lhs1 = total(family_sn(), n, [](const Word& w) { return stat_wrap(w, BasicStat::dtop); });
    BigRat rhs1 = total(family_sn(), n + 1, [](const Word& w) { return stat_wrap(w, BasicStat::pk); });
    r.check("sum_{S_n} dtop = sum_{S_{n+1}} pk", lhs1 == rhs1, to_string(lhs1), to_string(rhs1));

    // (2) sum_{PF_n} des = sum_{PF_n} f_{chi^tie}
    KTransitiveFn tie = chi_tie();
    BigRat lhs2 = total(family_pf(), n, [](const Word& w) { return stat_wrap(w, BasicStat::des); });
    BigRat rhs2 = total(family_pf(), n, [&](const Word& w) { return n >= 2 ? f_chi(w, tie) : BigRat(0); });
    r.check("sum_{PF_n} des = sum_{PF_n} f_tie", lhs2 == rhs2, to_string(lhs2), to_string(rhs2));

    // (3) (2/n) sum over compositions = (n-1) Fub_{n-1}
    BigInt comp_sum = 0;
    for (const auto& c : compositions(n)) comp_sum += tie_multinomial_sum(c);
    BigRat lhs3 = make_rat(BigInt(2) * comp_sum, BigInt(n));
    BigRat rhs3(BigInt(n - 1) * fubini_number(n - 1));
    r.check("(2/n) sum_{c |= n} ... = (n-1) Fub_{n-1}", lhs3 == rhs3, to_string(lhs3), to_string(rhs3));

    // (4) sum over Hess(n) = C(n,2) (n+1)^{n-2}
    BigInt hess_sum = 0;
    for_each_hess(n, [&](const WeakComposition& c) { hess_sum += tie_multinomial_sum(c); });
    BigRat lhs4(hess_sum);
    BigRat rhs4 = n >= 2 ? BigRat(binomial(n, 2) * int_pow(n + 1, n - 2)) : BigRat(0);
    r.check("sum_{Hess(n)} ... = C(n,2)(n+1)^{n-2}", lhs4 == rhs4, to_string(lhs4), to_string(rhs4));
    return r;
}

namespace {

using QSeries = TruncSeries<BigRat>;

QSeries exp_series(int N, long scale) {
    QSeries s(N);
    for (int m = 0; m <= N; ++m) s[m] = make_rat(int_pow(BigInt(scale), m), factorial(m));
    return s;
}

std::string coeff_label(int i) { return "z^" + std::to_string(i); }

}  // namespace

Report egf_verify(const WordFamily& family, const KTransitiveFn& chi, int N) {
    Report r("egf[" + family.name + "," + chi.name + "]", N);
    int k = chi.k;
    if (N < k) {
        r.fail_precondition("N must be at least k");
        return r;
    }
    QSeries F(N), G(N), H(N);
    for (int n = k; n <= N; ++n) {
        auto words = materialize(family, n);
        BigRat tf = chunked_total(words, [&](const Word& w) { return f_chi(w, chi); });
        BigRat tg = chunked_total(words, [&](const Word& w) { return g_chi(w, chi); });
        BigRat t1 = chunked_total(words, [&](const Word& w) { return chi_1(w, chi); });
        BigRat fac(factorial(n));
        F[n] = tf / fac;
        G[n] = tg / fac;
        H[n] = t1 / fac;
        F[n].canonicalize();
        G[n].canonicalize();
        H[n].canonicalize();
    }
    BigRat inv_kfac = make_rat(1, factorial(k));

    QSeries dG = G;
    for (int i = 0; i < k - 1; ++i) dG = dG.derivative();
    QSeries dH = H;
    for (int i = 0; i < k; ++i) dH = dH.derivative();

    QSeries rel1 = dG.shifted(k - 1) * inv_kfac;  // z^{k-1}/k! d^{k-1} G
    r.check("F = z^{k-1}/k! D^{k-1} G", F == rel1, "", "");

    QSeries rel2 = H.derivative().shifted(1) - H * BigRat(k - 1);  // z H' - (k-1) H
    r.check("G = z H' - (k-1) H", G == rel2, "", "");

    QSeries rel3 = dH.shifted(1);
    r.check("D^{k-1} G = z D^k H", dG == rel3, "", "");

    QSeries rel4 = dH.shifted(k) * inv_kfac;
    r.check("F = z^k/k! D^k H", F == rel4, "", "");

    if (family.name == "upf" && chi.name == "inv") {
        // F(z) = z^2 e^{2z} / (2 (2-e^z)^3)
        QSeries two_minus_e = QSeries::constant(N, BigRat(2)) - exp_series(N, 1);
        QSeries closed =
            (exp_series(N, 2) * (two_minus_e * two_minus_e * two_minus_e).inverse()).shifted(2).truncated(N) *
            make_rat(1, 2);
        int mism = F.first_mismatch(closed);
        r.check("F = z^2 e^{2z}/(2(2-e^z)^3)", mism < 0,
                mism < 0 ? "" : coeff_label(mism) + "=" + to_string(F[mism]),
                mism < 0 ? "" : to_string(closed[mism]));
    }
    if (family.name == "cayley" && chi.name == "tie") {
        // G'(z) = z e^z / (2-e^z)^2
        QSeries two_minus_e = QSeries::constant(N, BigRat(2)) - exp_series(N, 1);
        QSeries closed = (exp_series(N, 1) * (two_minus_e * two_minus_e).inverse()).shifted(1).truncated(N - 1);
        QSeries Gp = G.derivative();
        int mism = Gp.first_mismatch(closed);
        r.check("G' = z e^z/(2-e^z)^2", mism < 0,
                mism < 0 ? "" : coeff_label(mism) + "=" + to_string(Gp[mism]),
                mism < 0 ? "" : to_string(closed[mism]));
    }
    return r;
}

}  // namespace parkstat
