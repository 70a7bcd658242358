#pragma once

#include <optional>
#include <set>
#include <utility>

#include "parkstat/words.hpp"

namespace parkstat {

// pi(alpha)(i) = j iff car j parks in spot i; car_to_spot is its inverse.
struct ParkingOutcome {
    Word spot_to_car;
    Word car_to_spot;
};

// Runs the parking process. Returns nothing when some car exits the street.
// Entries larger than n are a contract violation (throws), distinct from
// parking failure.
std::optional<ParkingOutcome> park(const Word& alpha);

// Membership via simulation; the sorted-rearrangement criterion
// (beta_i <= i) is computed alongside and agreement is asserted in debug
// builds.
bool is_parking_function(const Word& alpha);

// Streams PF_n in lexicographic order using prefix-content pruning.
void for_each_pf(int n, const std::function<void(const Word&)>& f);
std::vector<Word> enumerate_pf(int n);

// Unit interval parking functions: every car parks at its preference or one
// spot past it.
bool is_upf(const Word& alpha);
void for_each_upf(int n, const std::function<void(const Word&)>& f);
std::vector<Word> enumerate_upf(int n);

// Block structure of a UPF: the sorted rearrangement splits before each
// position i with beta_i = i into blocks (a,a,a+1,...). Block j records its
// first value, its size, and the 1-indexed positions of its entries in alpha
// (increasing; the two equal values a are ordered by position).
struct Block {
    int start_value = 0;
    int size = 0;
    std::vector<int> positions;
};

struct BlockStructure {
    std::vector<Block> blocks;
    Composition sizes;  // the UPF content con(alpha)
};

BlockStructure block_structure(const Word& alpha);

// psi: UPF_n -> C_n replaces each entry by the index of its block;
// Inv(psi(alpha)) = Inv(alpha) as sets of index pairs.
Word psi(const Word& alpha);
Word psi_inverse(const Word& cayley);

// eta: (sigma, S) with S a subset of Asc(sigma^{-1}) -> C_n.
Word eta(const Word& sigma, const std::set<int>& S);
std::pair<Word, std::set<int>> eta_inverse(const Word& w);

// Pollak's circular reduction: park w in [n+1]^n on a circle with n+1 spots,
// subtract the empty spot mod n+1 (positive residues 1..n+1; the empty spot
// is never a preference so residues are never 0). (n+1)-to-1 onto PF_n.
Word pollak_reduce(const Word& w);

// Hess(n): weak n-part sequences with i <= c_1+...+c_i <= n; exactly the
// parking-function contents.
bool is_hess(const WeakComposition& c);
void for_each_hess(int n, const std::function<void(const WeakComposition&)>& f);
std::vector<WeakComposition> hess_sequences(int n);

// area(alpha) = C(n+1,2) - sum(alpha); total displacement of cars.
long long area(const Word& alpha);

}  // namespace parkstat
