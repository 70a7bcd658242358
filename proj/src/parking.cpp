#include "parkstat/parking.hpp"

#include <algorithm>
#include <cassert>

namespace parkstat {

std::optional<ParkingOutcome> park(const Word& alpha) {
    int n = static_cast<int>(alpha.size());
    for (int v : alpha) {
        if (v < 1) throw std::invalid_argument("park: entries must be positive");
        if (v > n) throw std::invalid_argument("park: preference exceeds street length");
    }
    ParkingOutcome out;
    out.spot_to_car.assign(n, 0);
    out.car_to_spot.assign(n, 0);
    for (int car = 1; car <= n; ++car) {
        int s = alpha[car - 1];
        while (s <= n && out.spot_to_car[s - 1] != 0) ++s;
        if (s > n) return std::nullopt;
        out.spot_to_car[s - 1] = car;
        out.car_to_spot[car - 1] = s;
    }
    return out;
}

namespace {

[[maybe_unused]] bool sorted_criterion(const Word& alpha) {
    Word beta = alpha;
    std::sort(beta.begin(), beta.end());
    for (int i = 0; i < static_cast<int>(beta.size()); ++i)
        if (beta[i] > i + 1) return false;
    return true;
}

}  // namespace

bool is_parking_function(const Word& alpha) {
    int n = static_cast<int>(alpha.size());
    for (int v : alpha)
        if (v < 1 || v > n) return false;
    bool by_simulation = park(alpha).has_value();
    assert(by_simulation == sorted_criterion(alpha));
    return by_simulation;
}

void for_each_pf(int n, const std::function<void(const Word&)>& f) {
    if (n < 0) throw std::invalid_argument("for_each_pf: n must be nonnegative");
    if (n == 0) {
        f(Word{});
        return;
    }
    Word w;
    std::vector<int> count(n + 1, 0);
    // A prefix extends to a PF iff for all v: #{placed <= v} + remaining >= v.
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            f(w);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            count[v]++;
            int remaining = n - pos - 1;
            bool ok = true;
            int leq = 0;
            for (int u = 1; u <= n; ++u) {
                leq += count[u];
                if (leq + remaining < u) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                w.push_back(v);
                rec(pos + 1);
                w.pop_back();
            }
            count[v]--;
        }
    };
    rec(0);
}

std::vector<Word> enumerate_pf(int n) {
    std::vector<Word> out;
    for_each_pf(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

bool is_upf(const Word& alpha) {
    int n = static_cast<int>(alpha.size());
    for (int v : alpha)
        if (v < 1 || v > n) return false;
    auto outcome = park(alpha);
    if (!outcome) return false;
    for (int car = 1; car <= n; ++car)
        if (outcome->car_to_spot[car - 1] - alpha[car - 1] > 1) return false;
    return true;
}

void for_each_upf(int n, const std::function<void(const Word&)>& f) {
    for_each_pf(n, [&](const Word& w) {
        if (is_upf(w)) f(w);
    });
}

std::vector<Word> enumerate_upf(int n) {
    std::vector<Word> out;
    for_each_upf(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

BlockStructure block_structure(const Word& alpha) {
    if (!is_upf(alpha)) throw std::invalid_argument("block_structure: not a unit interval parking function");
    int n = static_cast<int>(alpha.size());
    Word beta = alpha;
    std::sort(beta.begin(), beta.end());
    std::vector<int> starts;  // positions i (1-indexed) with beta_i = i
    for (int i = 1; i <= n; ++i)
        if (beta[i - 1] == i) starts.push_back(i);
    BlockStructure bs;
    for (size_t j = 0; j < starts.size(); ++j) {
        int lo = starts[j];
        int hi = (j + 1 < starts.size()) ? starts[j + 1] : n + 1;  // block covers sorted positions [lo, hi)
        Block b;
        b.start_value = lo;
        b.size = hi - lo;
        // Entries of block j are the alpha-values in [lo, hi); collect their
        // positions in increasing order.
        for (int i = 1; i <= n; ++i)
            if (alpha[i - 1] >= lo && alpha[i - 1] < hi) b.positions.push_back(i);
        bs.sizes.push_back(b.size);
        bs.blocks.push_back(std::move(b));
    }
    return bs;
}

Word psi(const Word& alpha) {
    BlockStructure bs = block_structure(alpha);
    int n = static_cast<int>(alpha.size());
    // value -> block index, by the start-value intervals
    std::vector<int> block_of(n + 1, 0);
    for (size_t j = 0; j < bs.blocks.size(); ++j) {
        int lo = bs.blocks[j].start_value;
        int hi = (j + 1 < bs.blocks.size()) ? bs.blocks[j + 1].start_value : n + 1;
        for (int v = lo; v < hi; ++v) block_of[v] = static_cast<int>(j) + 1;
    }
    Word w(n);
    for (int i = 0; i < n; ++i) w[i] = block_of[alpha[i]];
    return w;
}

Word psi_inverse(const Word& w) {
    if (!is_cayley(w)) throw std::invalid_argument("psi_inverse: not a Cayley permutation");
    int n = static_cast<int>(w.size());
    Composition c = content(w);
    Word alpha(n, 0);
    int a = 1;  // start value of the current block
    for (int j = 1; j <= static_cast<int>(c.size()); ++j) {
        int seen = 0;
        for (int i = 0; i < n; ++i) {
            if (w[i] != j) continue;
            ++seen;
            alpha[i] = (seen <= 2) ? a : a + seen - 2;
        }
        a += c[j - 1];
    }
    assert(is_upf(alpha));
    return alpha;
}

Word eta(const Word& sigma, const std::set<int>& S) {
    if (!is_permutation(sigma)) throw std::invalid_argument("eta: sigma must be a permutation");
    int n = static_cast<int>(sigma.size());
    Word inv = inverse_permutation(sigma);
    std::vector<int> ascents = ascent_set(inv);
    std::set<int> asc(ascents.begin(), ascents.end());
    for (int s : S)
        if (!asc.count(s)) throw std::invalid_argument("eta: S is not a subset of Asc(sigma^{-1})");
    // [n] \ S = {s_1 < ... < s_r}; B_k = {s_{k-1}+1, ..., s_k}
    std::vector<int> block_of(n + 1, 0);
    int block = 1;
    for (int v = 1; v <= n; ++v) {
        block_of[v] = block;
        if (!S.count(v)) ++block;
    }
    Word w(n);
    for (int i = 0; i < n; ++i) w[i] = block_of[sigma[i]];
    return w;
}

std::pair<Word, std::set<int>> eta_inverse(const Word& w) {
    if (!is_cayley(w)) throw std::invalid_argument("eta_inverse: not a Cayley permutation");
    int n = static_cast<int>(w.size());
    Composition c = content(w);
    int r = static_cast<int>(c.size());
    std::vector<int> s(r + 1, 0);  // s_k = c_1 + ... + c_k
    for (int k = 1; k <= r; ++k) s[k] = s[k - 1] + c[k - 1];
    Word sigma(n, 0);
    std::vector<int> seen(r + 1, 0);
    for (int i = 0; i < n; ++i) {
        int k = w[i];
        sigma[i] = s[k - 1] + (++seen[k]);
    }
    std::set<int> S;
    for (int k = 1; k <= r; ++k)
        for (int v = s[k - 1] + 1; v < s[k]; ++v) S.insert(v);
    return {sigma, S};
}

Word pollak_reduce(const Word& w) {
    int n = static_cast<int>(w.size());
    int m = n + 1;
    for (int v : w)
        if (v < 1 || v > m) throw std::invalid_argument("pollak_reduce: entries must lie in [n+1]");
    std::vector<bool> occupied(m + 1, false);
    for (int car = 0; car < n; ++car) {
        int s = w[car];
        while (occupied[s]) s = s % m + 1;
        occupied[s] = true;
    }
    int empty = 0;
    for (int s = 1; s <= m; ++s)
        if (!occupied[s]) empty = s;
    Word alpha(n);
    for (int i = 0; i < n; ++i) {
        int r = (w[i] - empty) % m;
        if (r <= 0) r += m;
        assert(r != m);  // the empty spot is never a preference
        alpha[i] = r;
    }
    assert(is_parking_function(alpha));
    return alpha;
}

bool is_hess(const WeakComposition& c) {
    int n = static_cast<int>(c.size());
    long long sum = 0;
    for (int i = 1; i <= n; ++i) {
        if (c[i - 1] < 0) return false;
        sum += c[i - 1];
        if (sum < i || sum > n) return false;
    }
    return sum == n;
}

void for_each_hess(int n, const std::function<void(const WeakComposition&)>& f) {
    if (n < 0) throw std::invalid_argument("for_each_hess: n must be nonnegative");
    WeakComposition c;
    std::function<void(int, int)> rec = [&](int i, int sum) {
        if (i == n) {
            if (sum == n) f(c);
            return;
        }
        // after placing part i+1 the partial sum must reach i+1 and stay <= n
        for (int v = std::max(0, (i + 1) - sum); sum + v <= n; ++v) {
            c.push_back(v);
            rec(i + 1, sum + v);
            c.pop_back();
        }
    };
    rec(0, 0);
}

std::vector<WeakComposition> hess_sequences(int n) {
    std::vector<WeakComposition> out;
    for_each_hess(n, [&](const WeakComposition& c) { out.push_back(c); });
    return out;
}

long long area(const Word& alpha) {
    if (!is_parking_function(alpha)) throw std::invalid_argument("area: not a parking function");
    long long n = static_cast<long long>(alpha.size());
    long long sum = 0;
    for (int v : alpha) sum += v;
    return n * (n + 1) / 2 - sum;
}

}  // namespace parkstat
