#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parkstat/numeric.hpp"

namespace parkstat {

// A word is a finite sequence of positive integers. Words are 0-indexed
// internally; every position reported to callers is 1-indexed. The empty
// word is legal everywhere and all statistics on it are 0.
using Word = std::vector<int>;

// Compositions have positive parts; weak compositions allow zeros.
using Composition = std::vector<int>;
using WeakComposition = std::vector<int>;

bool is_valid_word(const Word& w);
// Entries are exactly {1,...,n}, each once.
bool is_permutation(const Word& w);

Word inverse_permutation(const Word& sigma);

// sigma . w = (w_{sigma^{-1}(1)}, ..., w_{sigma^{-1}(n)})
Word act(const Word& sigma, const Word& w);
Word adjacent_swap(const Word& w, int i);  // the transposition (i,i+1), 1 <= i <= n-1

// con(w): part i = multiplicity of value i, up to max(w). Empty word -> ().
WeakComposition content(const Word& w);
WeakComposition pad_content(const WeakComposition& c, int len);

// Directed graph on [n] for the graphical statistics. Loops are rejected:
// they never fire on permutations, so admitting them would break the
// n!|E|/2 and (n-1)!|E| totals.
struct Digraph {
    int vertex_count = 0;
    std::set<std::pair<int, int>> edges;

    Digraph() = default;
    Digraph(int n, std::set<std::pair<int, int>> e);

    bool has_edge(int a, int b) const { return edges.count({a, b}) > 0; }
};

enum class BasicStat { inv, des, asc, tie, maj, sdes, sinv, bdes, binv, dtop, itop, pk, hz };

// Closed statistic registry: the fixed names above plus the two parametrized
// families (pattern occurrences and graphical inversions/descents).
struct StatisticId {
    enum class Kind { basic, pattern, adjacent_pattern, graphical_inv, graphical_des };

    Kind kind = Kind::basic;
    BasicStat stat = BasicStat::inv;
    Word pattern;  // a permutation of [k]
    Digraph graph;

    static StatisticId basic(BasicStat s);
    static StatisticId pattern_of(Word rho);
    static StatisticId adjacent_pattern_of(Word rho);
    static StatisticId graphical_inv(Digraph d);
    static StatisticId graphical_des(Digraph d);

    // Resolves names like "inv", "des", ... Throws on unknown names.
    static StatisticId parse(const std::string& name);
    std::string name() const;
};

long long statistic(const Word& w, const StatisticId& s);
long long statistic(const Word& w, BasicStat s);

// f_{chi^rho}(w) (adjacent=false) or g_{chi^rho}(w) (adjacent=true).
// rho must be a permutation with len(rho) <= len(w).
long long pattern_count(const Word& w, const Word& rho, bool adjacent);

// The set Inv(w) of inversion pairs (i,j), 1-indexed, i<j, w_i>w_j.
std::vector<std::pair<int, int>> inversion_set(const Word& w);
std::vector<int> descent_set(const Word& w);
std::vector<int> ascent_set(const Word& w);

// All distinct rearrangements of w, lexicographically ordered.
std::vector<Word> orbit(const Word& w);

// Exhaustive, duplicate-free, ascending lexicographic listings.
std::vector<Composition> compositions(int n, int k);
std::vector<Composition> compositions(int n);
std::vector<WeakComposition> weak_compositions(int n, int k);

// Cayley permutations: every value j <= max(w) appears. |C_n| = Fub_n.
bool is_cayley(const Word& w);
void for_each_cayley(int n, const std::function<void(const Word&)>& f);
std::vector<Word> enumerate_cayley(int n);

void for_each_permutation(int n, const std::function<void(const Word&)>& f);
std::vector<Word> enumerate_permutations(int n);

// All words in [base]^n, lexicographic.
void for_each_word(int n, int base, const std::function<void(const Word&)>& f);

std::string word_to_string(const Word& w);

}  // namespace parkstat
