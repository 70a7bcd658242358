#pragma once

#include <string>

#include "parkstat/words.hpp"

namespace parkstat {

// Labeled rooted forest on [n], stored as a parent map with virtual root 0:
// roots are the vertices with parent 0. Acyclic by construction (validated).
struct Forest {
    int n = 0;
    std::vector<int> parent;  // parent[v] for v in 1..n; parent[0] unused (-1)

    Forest() : parent{-1} {}
    explicit Forest(int n_) : n(n_), parent(n_ + 1, 0) { parent[0] = -1; }

    int parent_of(int v) const { return parent[v]; }
    bool operator==(const Forest& o) const { return n == o.n && parent == o.parent; }
    bool operator<(const Forest& o) const { return parent < o.parent; }
};

// Validates and builds a forest from parent assignments; throws on cycles,
// self-parents, or out-of-range values.
Forest make_forest(int n, const std::vector<int>& parent_of_1_to_n);

// Preorder traversal permutation of T(F): a word on {0} u [n] starting with
// 0, children visited in increasing label order.
std::vector<int> preorder_word(const Forest& f);

// Francon's bijection rho: F_n -> PF_n, rho(F)_i = position of p(i) in w_F.
Word rho(const Forest& f);
Forest rho_inverse(const Word& alpha);

// Parental preorder inversions: pairs i<j whose parents occur out of order
// in w_F. Equals inv(rho(F)).
long long pinv(const Forest& f);

// area(F) = C(n+1,2) - sum_i pos(p(i)); equals area(rho(F)).
long long area_forest(const Forest& f);

// Ancestor inversions: pairs (i,j) with i<j and j an ancestor of i.
long long ancestor_inv(const Forest& f);

// The S_n-action: fixes F when p(i) = p(i+1) (two roots have equal virtual
// parent 0), otherwise swaps the labels i and i+1.
Forest sn_act(const Forest& f, int i);
// sigma . F by factoring sigma into adjacent transpositions.
Forest sn_act(const Forest& f, const Word& sigma);

void for_each_forest(int n, const std::function<void(const Forest&)>& f);
std::vector<Forest> enumerate_forests(int n);
void for_each_increasing_forest(int n, const std::function<void(const Forest&)>& f);
std::vector<Forest> enumerate_increasing_forests(int n);

// con(F): c_i = number of children of w_F(i), i = 1..n.
WeakComposition parental_content(const Forest& f);

// Fixture format: "n; v:parent(v) ..." e.g. "3; 1:0 2:1 3:1".
std::string serialize(const Forest& f);
Forest parse_forest(const std::string& line);

}  // namespace parkstat
