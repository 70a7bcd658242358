#include "parkstat/words.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace parkstat {

bool is_valid_word(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](int v) { return v >= 1; });
}

bool is_permutation(const Word& w) {
    int n = static_cast<int>(w.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : w) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Word inverse_permutation(const Word& sigma) {
    if (!is_permutation(sigma)) throw std::invalid_argument("inverse_permutation: not a permutation");
    Word inv(sigma.size());
    for (int i = 0; i < static_cast<int>(sigma.size()); ++i) inv[sigma[i] - 1] = i + 1;
    return inv;
}

Word act(const Word& sigma, const Word& w) {
    if (sigma.size() != w.size()) throw std::invalid_argument("act: length mismatch");
    Word invs = inverse_permutation(sigma);
    Word r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = w[invs[i] - 1];
    return r;
}

Word adjacent_swap(const Word& w, int i) {
    if (i < 1 || i + 1 > static_cast<int>(w.size())) throw std::invalid_argument("adjacent_swap: index out of range");
    Word r = w;
    std::swap(r[i - 1], r[i]);
    return r;
}

WeakComposition content(const Word& w) {
    if (!is_valid_word(w)) throw std::invalid_argument("content: entries must be positive");
    int m = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
    WeakComposition c(m, 0);
    for (int v : w) c[v - 1]++;
    return c;
}

WeakComposition pad_content(const WeakComposition& c, int len) {
    WeakComposition r = c;
    if (static_cast<int>(r.size()) > len) throw std::invalid_argument("pad_content: already longer than requested");
    r.resize(len, 0);
    return r;
}

Digraph::Digraph(int n, std::set<std::pair<int, int>> e) : vertex_count(n), edges(std::move(e)) {
    for (const auto& [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("Digraph: edge endpoint outside [n]");
        if (a == b) throw std::invalid_argument("Digraph: self-loops are not supported");
    }
}

StatisticId StatisticId::basic(BasicStat s) {
    StatisticId id;
    id.kind = Kind::basic;
    id.stat = s;
    return id;
}

StatisticId StatisticId::pattern_of(Word rho) {
    if (!is_permutation(rho)) throw std::invalid_argument("pattern: rho must be a permutation");
    StatisticId id;
    id.kind = Kind::pattern;
    id.pattern = std::move(rho);
    return id;
}

StatisticId StatisticId::adjacent_pattern_of(Word rho) {
    StatisticId id = pattern_of(std::move(rho));
    id.kind = Kind::adjacent_pattern;
    return id;
}

StatisticId StatisticId::graphical_inv(Digraph d) {
    StatisticId id;
    id.kind = Kind::graphical_inv;
    id.graph = std::move(d);
    return id;
}

StatisticId StatisticId::graphical_des(Digraph d) {
    StatisticId id;
    id.kind = Kind::graphical_des;
    id.graph = std::move(d);
    return id;
}

namespace {

const std::map<std::string, BasicStat>& basic_names() {
    static const std::map<std::string, BasicStat> names = {
        {"inv", BasicStat::inv},   {"des", BasicStat::des},   {"asc", BasicStat::asc},
        {"tie", BasicStat::tie},   {"maj", BasicStat::maj},   {"sdes", BasicStat::sdes},
        {"sinv", BasicStat::sinv}, {"bdes", BasicStat::bdes}, {"binv", BasicStat::binv},
        {"dtop", BasicStat::dtop}, {"itop", BasicStat::itop}, {"pk", BasicStat::pk},
        {"hz", BasicStat::hz},
    };
    return names;
}

}  // namespace

StatisticId StatisticId::parse(const std::string& name) {
    auto it = basic_names().find(name);
    if (it == basic_names().end()) throw std::invalid_argument("unknown statistic: " + name);
    return basic(it->second);
}

std::string StatisticId::name() const {
    switch (kind) {
        case Kind::basic:
            for (const auto& [k, v] : basic_names())
                if (v == stat) return k;
            return "?";
        case Kind::pattern:
            return "pattern(" + word_to_string(pattern) + ")";
        case Kind::adjacent_pattern:
            return "adjacent_pattern(" + word_to_string(pattern) + ")";
        case Kind::graphical_inv:
            return "graphical_inv";
        case Kind::graphical_des:
            return "graphical_des";
    }
    return "?";
}

namespace {

long long count_pairs(const Word& w, const std::function<bool(int, int)>& pred) {
    long long c = 0;
    int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pred(w[i], w[j])) ++c;
    return c;
}

long long count_adjacent(const Word& w, const std::function<bool(int, int)>& pred) {
    long long c = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (pred(w[i], w[i + 1])) ++c;
    return c;
}

long long graphical_count(const Word& w, const Digraph& d, bool adjacent) {
    for (int v : w)
        if (v > d.vertex_count) throw std::invalid_argument("graphical statistic: entry outside the digraph's vertex set");
    auto pred = [&d](int a, int b) { return d.has_edge(a, b); };
    return adjacent ? count_adjacent(w, pred) : count_pairs(w, pred);
}

}  // namespace

long long statistic(const Word& w, BasicStat s) {
    int n = static_cast<int>(w.size());
    switch (s) {
        case BasicStat::inv:
            return count_pairs(w, [](int a, int b) { return a > b; });
        case BasicStat::des:
            return count_adjacent(w, [](int a, int b) { return a > b; });
        case BasicStat::asc:
            return count_adjacent(w, [](int a, int b) { return a < b; });
        case BasicStat::tie:
            return count_adjacent(w, [](int a, int b) { return a == b; });
        case BasicStat::maj: {
            long long m = 0;
            for (int i = 0; i + 1 < n; ++i)
                if (w[i] > w[i + 1]) m += i + 1;
            return m;
        }
        case BasicStat::sdes:
            return count_adjacent(w, [](int a, int b) { return a == b + 1; });
        case BasicStat::sinv:
            return count_pairs(w, [](int a, int b) { return a == b + 1; });
        case BasicStat::bdes:
            return count_adjacent(w, [](int a, int b) { return a > b + 1; });
        case BasicStat::binv:
            return count_pairs(w, [](int a, int b) { return a > b + 1; });
        case BasicStat::dtop: {
            long long m = 0;
            for (int i = 0; i + 1 < n; ++i)
                if (w[i] > w[i + 1]) m += w[i];
            return m;
        }
        case BasicStat::itop: {
            long long m = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (w[i] > w[j]) m += w[i];
            return m;
        }
        case BasicStat::pk: {
            long long c = 0;
            for (int i = 0; i + 2 < n; ++i)
                if (w[i] < w[i + 1] && w[i + 1] > w[i + 2]) ++c;
            return c;
        }
        case BasicStat::hz: {
            long long c = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k)
                        if (w[i] < w[j] && w[j] > w[k]) ++c;
            return c;
        }
    }
    throw std::logic_error("statistic: unreachable");
}

long long statistic(const Word& w, const StatisticId& s) {
    switch (s.kind) {
        case StatisticId::Kind::basic:
            return statistic(w, s.stat);
        case StatisticId::Kind::pattern:
            return pattern_count(w, s.pattern, false);
        case StatisticId::Kind::adjacent_pattern:
            return pattern_count(w, s.pattern, true);
        case StatisticId::Kind::graphical_inv:
            return graphical_count(w, s.graph, false);
        case StatisticId::Kind::graphical_des:
            return graphical_count(w, s.graph, true);
    }
    throw std::logic_error("statistic: unreachable");
}

namespace {

// Occurrence test for rho at positions p (0-indexed into w): the values
// w_{p[rho^-1(1)-1]} < ... < w_{p[rho^-1(k)-1]} must strictly increase.
bool pattern_occurs(const Word& w, const std::vector<int>& p, const Word& rho_inv) {
    for (size_t s = 0; s + 1 < rho_inv.size(); ++s)
        if (w[p[rho_inv[s] - 1]] >= w[p[rho_inv[s + 1] - 1]]) return false;
    return true;
}

}  // namespace

long long pattern_count(const Word& w, const Word& rho, bool adjacent) {
    if (!is_permutation(rho)) throw std::invalid_argument("pattern_count: rho must be a permutation");
    int n = static_cast<int>(w.size());
    int k = static_cast<int>(rho.size());
    if (k > n) throw std::invalid_argument("pattern_count: pattern longer than word");
    if (k == 0) return 1;
    Word rho_inv = inverse_permutation(rho);
    long long c = 0;
    if (adjacent) {
        std::vector<int> p(k);
        for (int i = 0; i + k <= n; ++i) {
            for (int s = 0; s < k; ++s) p[s] = i + s;
            if (pattern_occurs(w, p, rho_inv)) ++c;
        }
        return c;
    }
    // Ascending k-subsets of positions.
    std::vector<int> p(k);
    for (int s = 0; s < k; ++s) p[s] = s;
    while (true) {
        if (pattern_occurs(w, p, rho_inv)) ++c;
        int i = k - 1;
        while (i >= 0 && p[i] == n - k + i) --i;
        if (i < 0) break;
        ++p[i];
        for (int j = i + 1; j < k; ++j) p[j] = p[j - 1] + 1;
    }
    return c;
}

std::vector<std::pair<int, int>> inversion_set(const Word& w) {
    std::vector<std::pair<int, int>> r;
    int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[i] > w[j]) r.emplace_back(i + 1, j + 1);
    return r;
}

std::vector<int> descent_set(const Word& w) {
    std::vector<int> r;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
        if (w[i] > w[i + 1]) r.push_back(i + 1);
    return r;
}

std::vector<int> ascent_set(const Word& w) {
    std::vector<int> r;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
        if (w[i] < w[i + 1]) r.push_back(i + 1);
    return r;
}

std::vector<Word> orbit(const Word& w) {
    Word s = w;
    std::sort(s.begin(), s.end());
    std::vector<Word> r;
    do {
        r.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return r;
}

namespace {

void compositions_rec(int n, std::vector<int>& cur, std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int a = 1; a <= n; ++a) {
        cur.push_back(a);
        compositions_rec(n - a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions(int n) {
    if (n < 0) throw std::invalid_argument("compositions: n must be nonnegative");
    std::vector<Composition> out;
    std::vector<int> cur;
    compositions_rec(n, cur, out);
    return out;
}

std::vector<Composition> compositions(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("compositions: n,k must be nonnegative");
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int parts) {
        if (parts == 0) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int a = 1; a + (parts - 1) <= rem; ++a) {
            cur.push_back(a);
            rec(rem - a, parts - 1);
            cur.pop_back();
        }
    };
    rec(n, k);
    return out;
}

std::vector<WeakComposition> weak_compositions(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("weak_compositions: n,k must be nonnegative");
    std::vector<WeakComposition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int parts) {
        if (parts == 0) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int a = 0; a <= rem; ++a) {
            cur.push_back(a);
            rec(rem - a, parts - 1);
            cur.pop_back();
        }
    };
    rec(n, k);
    return out;
}

bool is_cayley(const Word& w) {
    if (!is_valid_word(w)) return false;
    if (w.empty()) return true;
    WeakComposition c = content(w);
    return std::all_of(c.begin(), c.end(), [](int v) { return v >= 1; });
}

void for_each_cayley(int n, const std::function<void(const Word&)>& f) {
    if (n < 0) throw std::invalid_argument("for_each_cayley: n must be nonnegative");
    Word w;
    std::vector<int> count(n + 2, 0);
    int max_used = 0;
    // missing = #{j <= max_used : count[j] == 0} must stay <= remaining slots
    std::function<void(int, int)> rec = [&](int pos, int missing) {
        if (pos == n) {
            if (missing == 0) f(w);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            int new_max = std::max(max_used, v);
            int new_missing = missing;
            if (count[v] == 0) {
                // values max_used+1 .. v-1 become newly required and absent
                if (v > max_used)
                    new_missing += (v - max_used) - 1;
                else
                    new_missing -= 1;
            }
            if (new_missing > n - pos - 1) continue;
            int old_max = max_used;
            count[v]++;
            max_used = new_max;
            w.push_back(v);
            rec(pos + 1, new_missing);
            w.pop_back();
            max_used = old_max;
            count[v]--;
        }
    };
    rec(0, 0);
}

std::vector<Word> enumerate_cayley(int n) {
    std::vector<Word> out;
    for_each_cayley(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

void for_each_permutation(int n, const std::function<void(const Word&)>& f) {
    if (n < 0) throw std::invalid_argument("for_each_permutation: n must be nonnegative");
    Word w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    if (n == 0) {
        f(w);
        return;
    }
    do {
        f(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Word> enumerate_permutations(int n) {
    std::vector<Word> out;
    for_each_permutation(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

void for_each_word(int n, int base, const std::function<void(const Word&)>& f) {
    if (n < 0 || base < 0) throw std::invalid_argument("for_each_word: bad arguments");
    if (n == 0) {
        f(Word{});
        return;
    }
    if (base == 0) return;
    Word w(n, 1);
    while (true) {
        f(w);
        int i = n - 1;
        while (i >= 0 && w[i] == base) {
            w[i] = 1;
            --i;
        }
        if (i < 0) break;
        w[i]++;
    }
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

}  // namespace parkstat
