#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qchroma/symfunc.hpp"

namespace qchroma {

/* A Hessenberg function m : [n] -> [n], weakly non-decreasing with
 * m(i) >= i. Values are accessed 1-based, matching the combinatorics. */
class HessFunc {
public:
    static HessFunc validate(std::vector<int> values); // throws InvalidHessenberg
    static HessFunc parse(const std::string& text);    // "2,4,4,5,6,6"

    static HessFunc path(int n);     // m(i) = min(i+1, n)
    static HessFunc complete(int n); // m(i) = n

    /* All Hessenberg functions on [n] (Catalan(n) of them), lexicographic. */
    static std::vector<HessFunc> all(int n);

    int n() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_[i - 1]; }
    const std::vector<int>& values() const { return values_; }

    /* Edge set of the indifference graph: {i,j} with i < j <= m(i). */
    std::vector<std::pair<int, int>> edges() const;

    std::string to_string() const;

    friend bool operator==(const HessFunc& a, const HessFunc& b) {
        return a.values_ == b.values_;
    }
    friend bool operator<(const HessFunc& a, const HessFunc& b) {
        return a.values_ < b.values_;
    }

private:
    std::vector<int> values_;
};

/* Canonical cycle form: each cycle rotated to start at its minimum, cycles
 * ordered by increasing minima; word is the concatenation sigma^c. */
struct CycleDecomp {
    std::vector<int> perm;
    std::vector<std::vector<int>> cycles;
    std::vector<int> word;
    Partition cycle_type;
};

CycleDecomp cycle_decomp(std::vector<int> perm);

/* Permutations sigma with sigma(i) <= m(i) for all i, by backtracking. */
std::vector<CycleDecomp> enum_Snm(const HessFunc& m);

/* Number of pairs (a,b) with a < b <= m(a) and b occurring before a in the
 * word. Serves both sigma^c words and one-line (S_n)^{J_k} words; values
 * absent from the word contribute nothing. */
int wt(const HessFunc& m, const std::vector<int>& word);

/* rho_n, the q-deformation of p_n: [n]_q h_n = sum_{i=0}^{n-1} h_i rho_{n-i}. */
SymFunc rho(int n);

/* omega(rho_n) == sum_{i=1}^{n} (-1)^{n-i} [i]_q e_i h_{n-i}, exactly. */
bool omega_rho_check(int n);

/* Chromatic quasisymmetric function, three independent routes. */
SymFunc csf_coloring(const HessFunc& m); // ascent-graded proper colorings (slow oracle)
SymFunc csf_rho(const HessFunc& m);      // weighted cycle-type sums over S_{n,m}
SymFunc csf_stanley_p(const HessFunc& m); // classical q-free power-sum expansion

/* Increasing subtree of G_m rooted at 1 together with its word form. */
struct IncTree {
    std::vector<int> word;                     // tau(1..d), tau(1) = 1
    std::vector<std::pair<int, int>> edges;    // (parent, child), parent < child
};

std::vector<IncTree> enum_inc_trees(const HessFunc& m, int d);

IncTree tree_from_word(const HessFunc& m, const std::vector<int>& word);
std::vector<int> word_from_tree(const HessFunc& m,
                                const std::vector<std::pair<int, int>>& edges);

/* Appends [n] \ Image(tau) in increasing order: the (S_n)^{J_k} one-line word. */
std::vector<int> embed_word(const HessFunc& m, const std::vector<int>& word);

/* The Hessenberg function of G_m with Image(tau) deleted. */
HessFunc hess_minus_tau(const HessFunc& m, const std::vector<int>& word);

} // namespace qchroma
