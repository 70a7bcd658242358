// Command-line surface: enumeration dumps, polynomial printing, verification
// suites, and OEIS b-file emission/comparison.
//
// Exit codes: 0 success, 1 mathematical mismatch, 2 usage/config error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "parkstat/bipoly.hpp"
#include "parkstat/expectations.hpp"
#include "parkstat/forests.hpp"
#include "parkstat/parking.hpp"
#include "parkstat/qalgebra.hpp"
#include "parkstat/symfunc.hpp"
#include "parkstat/verify.hpp"

namespace {

using namespace parkstat;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw UsageError("cannot open output file: " + path);
    return file;
}

std::string row_of_word(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    return os.str();
}

void enforce_cap(const std::string& what, int n, int cap, bool allow_large) {
    if (n < 0) throw UsageError(what + ": n must be nonnegative");
    if (n > cap && !allow_large)
        throw UsageError(what + ": n=" + std::to_string(n) + " exceeds the default cap " +
                         std::to_string(cap) + " (pass --allow-large to override)");
}

int cmd_enumerate(const std::string& family, int n, const std::string& format,
                  const std::string& out_path, bool allow_large) {
    std::vector<std::string> rows;
    long long count = 0;
    auto take = [&](const std::string& s) {
        rows.push_back(s);
        ++count;
    };
    if (family == "pf") {
        enforce_cap("enumerate pf", n, 8, allow_large);
        for_each_pf(n, [&](const Word& w) { take(row_of_word(w)); });
    } else if (family == "upf") {
        enforce_cap("enumerate upf", n, 8, allow_large);
        for_each_upf(n, [&](const Word& w) { take(row_of_word(w)); });
    } else if (family == "cayley") {
        enforce_cap("enumerate cayley", n, 8, allow_large);
        for_each_cayley(n, [&](const Word& w) { take(row_of_word(w)); });
    } else if (family == "forests") {
        enforce_cap("enumerate forests", n, 8, allow_large);
        for_each_forest(n, [&](const Forest& f) { take(serialize(f)); });
    } else if (family == "hess") {
        enforce_cap("enumerate hess", n, 10, allow_large);
        for_each_hess(n, [&](const WeakComposition& c) { take(row_of_word(c)); });
    } else if (family == "sn") {
        enforce_cap("enumerate sn", n, 8, allow_large);
        for_each_permutation(n, [&](const Word& w) { take(row_of_word(w)); });
    } else if (family == "sn_plus") {
        enforce_cap("enumerate sn_plus", n, 8, allow_large);
        family_sn_plus().generate(n, [&](const Word& w) { take(row_of_word(w)); });
    } else {
        throw UsageError("unknown family: " + family);
    }

    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    if (format == "text") {
        for (const auto& r : rows) os << r << "\n";
        os << "# count: " << count << "\n";
    } else if (format == "csv") {
        os << "word\n";
        for (const auto& r : rows) os << r << "\n";
        os << "count," << count << "\n";
    } else if (format == "json") {
        nlohmann::json j;
        j["family"] = family;
        j["n"] = n;
        j["count"] = count;
        j["items"] = rows;
        os << j.dump() << "\n";
    } else {
        throw UsageError("unknown format: " + format);
    }
    return 0;
}

int cmd_poly(const std::string& which, int n, const std::string& format,
             const std::string& out_path, bool allow_large) {
    std::string text, json;
    if (which == "pf_q") {
        enforce_cap("poly pf_q", n, 8, allow_large);
        IntPoly p = pf_q(n);
        text = poly_to_string(p);
        nlohmann::json j;
        j["which"] = which;
        j["n"] = n;
        std::vector<std::string> coeffs;
        for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).get_str());
        j["coeffs"] = coeffs;
        json = j.dump();
    } else if (which == "upf_q") {
        enforce_cap("poly upf_q", n, 8, allow_large);
        IntPoly p = upf_q(n);
        text = poly_to_string(p);
        nlohmann::json j;
        j["which"] = which;
        j["n"] = n;
        std::vector<std::string> coeffs;
        for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).get_str());
        j["coeffs"] = coeffs;
        json = j.dump();
    } else if (which == "a_inv_asc") {
        enforce_cap("poly a_inv_asc", n, 8, allow_large);
        BiPoly p = a_inv_asc(n);
        text = p.str();
        nlohmann::json j;
        j["which"] = which;
        j["n"] = n;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [k, v] : p.terms)
            arr.push_back({{"q", k.first}, {"t", k.second}, {"coeff", v.get_str()}});
        j["terms"] = arr;
        json = j.dump();
    } else if (which == "exp_q" || which == "Exp_q") {
        enforce_cap("poly " + which, n, 12, allow_large);
        auto s = which == "exp_q" ? exp_q_series(n) : Exp_q_series(n);
        json = series_to_json(s);
        std::ostringstream os;
        for (int i = 0; i <= s.order; ++i) os << (i ? "\n" : "") << "z^" << i << ": " << s[i].str();
        text = os.str();
    } else if (which == "pf_sym") {
        enforce_cap("poly pf_sym", n, 6, allow_large);
        SymFQ f = pf_symfunc(n);
        text = symf_to_string(f);
        json = symf_to_json(f, n);
    } else if (which == "upf_sym") {
        enforce_cap("poly upf_sym", n, 8, allow_large);
        SymFQ f = upf_symfunc(n);
        text = symf_to_string(f);
        json = symf_to_json(f, n);
    } else if (which == "pf_sym_t") {
        enforce_cap("poly pf_sym_t", n, 6, allow_large);
        SymFT f = pf_symfunc_graded(n);
        text = symf_to_string(f);
        json = symf_to_json(f, n);
    } else if (which == "upf_sym_t") {
        enforce_cap("poly upf_sym_t", n, 6, allow_large);
        SymFT f = upf_symfunc_graded(n);
        text = symf_to_string(f);
        json = symf_to_json(f, n);
    } else {
        throw UsageError("unknown polynomial: " + which);
    }
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    if (format == "json")
        os << json << "\n";
    else
        os << text << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, const std::string& format,
               const std::string& out_path) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite: " + suite);
    SuiteResult res = run_suite(suite, opt);
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    if (format == "text") std::cerr << res.to_text();
    os << res.to_json() << "\n";
    return res.ok() ? 0 : 1;
}

struct BfileSeq {
    int offset;
    std::function<BigInt(int)> value;
};

BigInt family_total(void (*enumerate)(int, const std::function<void(const Word&)>&), int n,
                    BasicStat s) {
    BigInt acc = 0;
    enumerate(n, [&](const Word& w) { acc += static_cast<long>(statistic(w, s)); });
    return acc;
}

std::map<std::string, BfileSeq> bfile_registry() {
    std::map<std::string, BfileSeq> reg;
    reg["pf-count"] = {0, [](int n) {
                           BigInt c = 0;
                           for_each_pf(n, [&](const Word&) { ++c; });
                           return c;
                       }};
    reg["upf-count"] = {0, [](int n) {
                            BigInt c = 0;
                            for_each_upf(n, [&](const Word&) { ++c; });
                            return c;
                        }};
    reg["fubini"] = {0, [](int n) {
                         BigInt c = 0;
                         for_each_cayley(n, [&](const Word&) { ++c; });
                         return c;
                     }};
    reg["catalan"] = {0, [](int n) {
                          BigInt c = 0;
                          for_each_increasing_forest(n, [&](const Forest&) { ++c; });
                          return c;
                      }};
    reg["forest-count"] = {0, [](int n) {
                               BigInt c = 0;
                               for_each_forest(n, [&](const Forest&) { ++c; });
                               return c;
                           }};
    reg["pf-inv-total"] = {1, [](int n) { return family_total(for_each_pf, n, BasicStat::inv); }};
    reg["pf-des-total"] = {1, [](int n) { return family_total(for_each_pf, n, BasicStat::des); }};
    reg["pf-tie-total"] = {1, [](int n) { return family_total(for_each_pf, n, BasicStat::tie); }};
    reg["pf-tie1"] = {1, [](int n) {
                          BigInt c = 0;
                          for_each_pf(n, [&](const Word& w) {
                              if (n >= 2 && w[0] == w[1]) ++c;
                          });
                          return c;
                      }};
    reg["upf-inv-total"] = {1, [](int n) { return family_total(for_each_upf, n, BasicStat::inv); }};
    reg["upf-des-total"] = {1, [](int n) { return family_total(for_each_upf, n, BasicStat::des); }};
    reg["cayley-tie-total"] = {1,
                               [](int n) { return family_total(for_each_cayley, n, BasicStat::tie); }};
    reg["sdes-sn"] = {1, [](int n) { return family_total(for_each_permutation, n, BasicStat::sdes); }};
    reg["bdes-sn"] = {1, [](int n) { return family_total(for_each_permutation, n, BasicStat::bdes); }};
    reg["sn-inv-total"] = {1, [](int n) { return family_total(for_each_permutation, n, BasicStat::inv); }};
    reg["sn-des-total"] = {1, [](int n) { return family_total(for_each_permutation, n, BasicStat::des); }};
    return reg;
}

int cmd_bfile(const std::string& seq, int max_n, const std::string& out_path,
              const std::string& compare_path, bool allow_large) {
    auto reg = bfile_registry();
    auto it = reg.find(seq);
    if (it == reg.end()) throw UsageError("unknown sequence: " + seq);
    enforce_cap("bfile " + seq, max_n, 7, allow_large);

    std::vector<std::pair<int, BigInt>> values;
    for (int n = it->second.offset; n <= max_n; ++n) values.emplace_back(n, it->second.value(n));

    if (!compare_path.empty()) {
        std::ifstream in(compare_path);
        if (!in) throw UsageError("cannot open fixture: " + compare_path);
        std::map<int, std::string> fixture;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream is(line);
            int n;
            std::string v;
            if (is >> n >> v) fixture[n] = v;
        }
        for (const auto& [n, v] : values) {
            auto f = fixture.find(n);
            if (f == fixture.end()) continue;  // fixture may be shorter
            if (f->second != v.get_str()) {
                std::cerr << "divergence at n=" << n << ": computed " << v.get_str()
                          << ", fixture " << f->second << "\n";
                return 1;
            }
        }
        std::cout << "fixture matches for " << seq << " up to n=" << max_n << "\n";
        return 0;
    }

    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    for (const auto& [n, v] : values) os << n << " " << v.get_str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parkstat: exact combinatorics of parking functions, forests, and q-series"};
    app.require_subcommand(1);

    std::string family = "pf", format = "text", out_path, which = "pf_q";
    std::string suite = "all", compare_path, seq = "pf-count";
    int n = 3, max_n = 5, trunc = 6, table_n = 0, threads = 0;
    bool extended = false, corrupt = false, allow_large = false;

    auto* enumerate = app.add_subcommand("enumerate", "stream a word family lexicographically");
    enumerate->add_option("--family", family, "pf|upf|cayley|forests|hess|sn|sn_plus")->required();
    enumerate->add_option("--n", n, "word length")->required();
    enumerate->add_option("--format", format, "text|csv|json");
    enumerate->add_option("--out", out_path, "output path (default stdout)");
    enumerate->add_flag("--allow-large", allow_large, "override the enumeration caps");

    auto* poly = app.add_subcommand("poly", "print a polynomial or symmetric function");
    poly->add_option("--which", which, "pf_q|upf_q|a_inv_asc|exp_q|Exp_q|pf_sym|upf_sym|pf_sym_t|upf_sym_t")
        ->required();
    poly->add_option("--n", n, "degree parameter")->required();
    poly->add_option("--format", format, "text|json");
    poly->add_option("--out", out_path, "output path");
    poly->add_flag("--allow-large", allow_large, "override the caps");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name (see --list)");
    verify->add_option("--max-n", max_n, "exhaustive sweep cap (default 5)");
    verify->add_option("--N", trunc, "series truncation order (default 6)");
    verify->add_option("--n", table_n, "run table1 at this single n");
    verify->add_flag("--extended", extended, "include the n=6 parking-function sweeps");
    verify->add_flag("--corrupt", corrupt, "corrupt inputs; the suite must then fail (exit 1)");
    verify->add_option("--format", format, "json|text (JSON is always emitted)");
    verify->add_option("--threads", threads, "worker pool width (overrides PARKSTAT_THREADS)");
    verify->add_option("--out", out_path, "output path");
    verify->add_flag("--allow-large", allow_large, "override the sweep caps");
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "list suite names and exit");

    auto* bfile = app.add_subcommand("bfile", "emit or compare an OEIS-style b-file");
    bfile->add_option("--seq", seq, "sequence id");
    bfile->add_option("--max-n", max_n, "largest index")->required();
    bfile->add_option("--out", out_path, "output path");
    bfile->add_option("--compare", compare_path, "diff against a local fixture b-file");
    bfile->add_flag("--allow-large", allow_large, "override the caps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(family, n, format, out_path, allow_large);
        if (poly->parsed()) return cmd_poly(which, n, format, out_path, allow_large);
        if (verify->parsed()) {
            if (list_suites) {
                for (const auto& s : suite_names()) std::cout << s << "\n";
                return 0;
            }
            if (threads > 0) set_thread_count(threads);
            if (max_n > 6 && !allow_large)
                throw UsageError("verify: --max-n greater than 6 needs --allow-large");
            if (trunc > 12 && !allow_large)
                throw UsageError("verify: --N greater than 12 needs --allow-large");
            if (table_n > 6 && !allow_large)
                throw UsageError("verify: --n greater than 6 needs --allow-large");
            VerifyOptions opt;
            opt.max_n = max_n;
            opt.N = trunc;
            opt.table_n = table_n;
            opt.extended = extended;
            opt.corrupt = corrupt;
            std::string fmt = (format == "csv") ? "json" : format;
            return cmd_verify(suite, opt, fmt, out_path);
        }
        if (bfile->parsed()) return cmd_bfile(seq, max_n, out_path, compare_path, allow_large);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
