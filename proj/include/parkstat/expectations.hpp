#pragma once

#include <functional>
#include <optional>

#include "parkstat/report.hpp"
#include "parkstat/series.hpp"
#include "parkstat/words.hpp"

namespace parkstat {

// A k-transitive statistic kernel: chi(w, (i_1..i_k)) = theta(w_{i_1},...,
// w_{i_k}) depends only on the values at the chosen positions.
struct KTransitiveFn {
    std::string name;
    int k = 2;
    std::function<BigRat(const std::vector<int>&)> theta;
};

KTransitiveFn chi_inv();
KTransitiveFn chi_tie();
KTransitiveFn chi_sdes();
KTransitiveFn chi_bdes();
KTransitiveFn chi_dtop();
KTransitiveFn chi_pattern(const Word& rho);
// sum of patterns in R (all of one length)
KTransitiveFn chi_pattern_set(const std::string& name, const std::vector<Word>& R);
KTransitiveFn chi_graphical(const Digraph& d);
// the registry used by the acceptance suite: all built-ins with k <= 3
std::vector<KTransitiveFn> builtin_chis();

// f_chi sums over all ascending k-tuples of positions, g_chi over adjacent
// windows, chi_1 is the initial window. k > len(w) is an error.
BigRat f_chi(const Word& w, const KTransitiveFn& chi);
BigRat g_chi(const Word& w, const KTransitiveFn& chi);
BigRat chi_1(const Word& w, const KTransitiveFn& chi);

// A family of word sets indexed by n. `group` names the symmetry the family
// is claimed to carry: the full symmetric group, the alternating group
// (sn_plus), or none (upf, which is not rearrangement-closed).
struct WordFamily {
    enum class Group { symmetric, alternating, none };

    std::string name;
    std::function<void(int, const std::function<void(const Word&)>&)> generate;
    Group group = Group::symmetric;
};

WordFamily family_sn();
WordFamily family_sn_plus();
WordFamily family_pf();
WordFamily family_upf();
WordFamily family_cayley();
WordFamily family_box();  // [n+1]^n
WordFamily family_orbit(const Word& w);
std::optional<WordFamily> family_by_name(const std::string& name);

std::vector<Word> materialize(const WordFamily& family, int n);

// Exhaustive closure check of the family's claimed symmetry group at size n.
bool verify_family_invariance(const WordFamily& family, int n);

BigRat total(const WordFamily& family, int n, const std::function<BigRat(const Word&)>& f);
BigRat expectation(const WordFamily& family, int n, const std::function<BigRat(const Word&)>& f);

// Theorem parts (a) E[f]=C(n,k)E[chi1], (b) E[g]=(n-k+1)E[chi1],
// (c) E[f]=(1/k)C(n,k-1)E[g], for a family invariant under a k-transitively
// acting group. Violated hypotheses (non-invariance; alternating group with
// k > n-2) yield a precondition report, distinct from a falsified identity.
Report verify_k_transitive_theorem(const WordFamily& family, int n, const KTransitiveFn& chi);

// Table of statistic totals over S_n and PF_n against their closed forms.
Report table1(int n);
// des/inv totals over UPF_n (= over C_n via psi) and ties over C_n.
Report upf_totals(int n);
// dtop/itop/peak/horizon totals over S_n.
Report dtop_itop_peak_totals(int n);
// graphical inversion/descent totals over S_n for a digraph D.
Report graphical_totals(const Digraph& d, int n);
// the four identities of the open-problems section, checked numerically
Report identity_checks(int n);

// EGF relations between F, G, H built from enumerated totals; for
// (upf, inv) and (cayley, tie) also checks the closed forms.
Report egf_verify(const WordFamily& family, const KTransitiveFn& chi, int N);

// worker-pool width used for family sweeps (PARKSTAT_THREADS or 1);
// results are exact and merged in chunk order, hence deterministic
int thread_count();
void set_thread_count(int t);

}  // namespace parkstat
