#include "parkstat/forests.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "parkstat/parking.hpp"

namespace parkstat {

Forest make_forest(int n, const std::vector<int>& parent_of_1_to_n) {
    if (static_cast<int>(parent_of_1_to_n.size()) != n)
        throw std::invalid_argument("make_forest: need exactly n parent entries");
    Forest f(n);
    for (int v = 1; v <= n; ++v) {
        int p = parent_of_1_to_n[v - 1];
        if (p < 0 || p > n) throw std::invalid_argument("make_forest: parent out of range");
        if (p == v) throw std::invalid_argument("make_forest: parent(v) = v");
        f.parent[v] = p;
    }
    for (int v = 1; v <= n; ++v) {
        int steps = 0, u = v;
        while (u != 0) {
            u = f.parent[u];
            if (++steps > n) throw std::invalid_argument("make_forest: cycle detected");
        }
    }
    return f;
}

namespace {

std::vector<std::vector<int>> children_lists(const Forest& f) {
    std::vector<std::vector<int>> kids(f.n + 1);
    for (int v = 1; v <= f.n; ++v) kids[f.parent[v]].push_back(v);
    // vertices ascend, so each list is already sorted
    return kids;
}

}  // namespace

std::vector<int> preorder_word(const Forest& f) {
    auto kids = children_lists(f);
    std::vector<int> w;
    w.reserve(f.n + 1);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        w.push_back(u);
        for (auto it = kids[u].rbegin(); it != kids[u].rend(); ++it) stack.push_back(*it);
    }
    return w;
}

namespace {

// 1-indexed position of every vertex in the preorder word.
std::vector<int> preorder_positions(const Forest& f) {
    std::vector<int> w = preorder_word(f);
    std::vector<int> pos(f.n + 1, 0);
    for (int i = 0; i < static_cast<int>(w.size()); ++i) pos[w[i]] = i + 1;
    return pos;
}

}  // namespace

Word rho(const Forest& f) {
    std::vector<int> pos = preorder_positions(f);
    Word alpha(f.n);
    for (int i = 1; i <= f.n; ++i) alpha[i - 1] = pos[f.parent[i]];
    return alpha;
}

Forest rho_inverse(const Word& alpha) {
    if (!is_parking_function(alpha)) throw std::invalid_argument("rho_inverse: not a parking function");
    int n = static_cast<int>(alpha.size());
    // children of the vertex at preorder position j are {i : alpha_i = j}
    std::vector<std::vector<int>> kids_at(n + 2);
    for (int i = 1; i <= n; ++i) kids_at[alpha[i - 1]].push_back(i);
    Forest f(n);
    int counter = 0;
    // preorder rebuild: visit(u) assigns u the next position and recurses
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        int j = ++counter;
        for (auto it = kids_at[j].rbegin(); it != kids_at[j].rend(); ++it) {
            f.parent[*it] = u;
            stack.push_back(*it);
        }
    }
    assert(counter == n + 1);
    return f;
}

long long pinv(const Forest& f) {
    std::vector<int> pos = preorder_positions(f);
    long long c = 0;
    for (int i = 1; i <= f.n; ++i)
        for (int j = i + 1; j <= f.n; ++j)
            if (pos[f.parent[i]] > pos[f.parent[j]]) ++c;
    return c;
}

long long area_forest(const Forest& f) {
    std::vector<int> pos = preorder_positions(f);
    long long n = f.n;
    long long sum = 0;
    for (int i = 1; i <= f.n; ++i) sum += pos[f.parent[i]];
    return n * (n + 1) / 2 - sum;
}

long long ancestor_inv(const Forest& f) {
    long long c = 0;
    for (int v = 1; v <= f.n; ++v)
        for (int a = f.parent[v]; a != 0; a = f.parent[a])
            if (a > v) ++c;
    return c;
}

Forest sn_act(const Forest& f, int i) {
    if (i < 1 || i >= f.n) throw std::invalid_argument("sn_act: index must satisfy 1 <= i <= n-1");
    if (f.parent[i] == f.parent[i + 1]) return f;
    auto tau = [i](int v) { return v == i ? i + 1 : (v == i + 1 ? i : v); };
    Forest g(f.n);
    for (int v = 1; v <= f.n; ++v) g.parent[tau(v)] = tau(f.parent[v]);
    return g;
}

Forest sn_act(const Forest& f, const Word& sigma) {
    if (!is_permutation(sigma) || static_cast<int>(sigma.size()) != f.n)
        throw std::invalid_argument("sn_act: sigma must be a permutation of [n]");
    // factor sigma into adjacent transpositions via bubble sort:
    // sigma = s_{i_1} ... s_{i_m} applied to the identity, then act in order
    Word cur = sigma;
    std::vector<int> word;  // reduced-ish factorization, applied right to left
    for (int pass = 0; pass < f.n; ++pass) {
        bool moved = false;
        for (int i = 1; i < f.n; ++i) {
            if (cur[i - 1] > cur[i]) {
                std::swap(cur[i - 1], cur[i]);
                word.push_back(i);
                moved = true;
            }
        }
        if (!moved) break;
    }
    // cur is now the identity and sigma = s_{i_m} o ... o s_{i_1} where the
    // recorded word is (i_1, ..., i_m), so the innermost factor s_{i_1} acts
    // first.
    Forest g = f;
    for (int i : word) g = sn_act(g, i);
    return g;
}

void for_each_forest(int n, const std::function<void(const Forest&)>& f) {
    for_each_pf(n, [&](const Word& alpha) { f(rho_inverse(alpha)); });
}

std::vector<Forest> enumerate_forests(int n) {
    std::vector<Forest> out;
    for_each_forest(n, [&](const Forest& f) { out.push_back(f); });
    return out;
}

void for_each_increasing_forest(int n, const std::function<void(const Forest&)>& f) {
    for_each_forest(n, [&](const Forest& g) {
        if (pinv(g) == 0) f(g);
    });
}

std::vector<Forest> enumerate_increasing_forests(int n) {
    std::vector<Forest> out;
    for_each_increasing_forest(n, [&](const Forest& f) { out.push_back(f); });
    return out;
}

WeakComposition parental_content(const Forest& f) {
    std::vector<int> w = preorder_word(f);
    std::vector<int> child_count(f.n + 1, 0);
    for (int v = 1; v <= f.n; ++v) child_count[f.parent[v]]++;
    WeakComposition c(f.n, 0);
    for (int i = 1; i <= f.n; ++i) c[i - 1] = child_count[w[i - 1]];
    return c;
}

std::string serialize(const Forest& f) {
    std::ostringstream os;
    os << f.n << ";";
    for (int v = 1; v <= f.n; ++v) os << " " << v << ":" << f.parent[v];
    return os.str();
}

Forest parse_forest(const std::string& line) {
    std::istringstream is(line);
    int n = 0;
    char sep = 0;
    if (!(is >> n >> sep) || sep != ';') throw std::invalid_argument("parse_forest: expected 'n;'");
    std::vector<int> parent(n, -1);
    std::string tok;
    int seen = 0;
    while (is >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("parse_forest: expected v:parent");
        int v = std::stoi(tok.substr(0, colon));
        int p = std::stoi(tok.substr(colon + 1));
        if (v < 1 || v > n) throw std::invalid_argument("parse_forest: vertex out of range");
        parent[v - 1] = p;
        ++seen;
    }
    if (seen != n) throw std::invalid_argument("parse_forest: missing vertices");
    return make_forest(n, parent);
}

}  // namespace parkstat
