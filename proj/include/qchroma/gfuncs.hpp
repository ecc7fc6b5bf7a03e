#pragma once

#include "qchroma/hessenberg.hpp"
#include "qchroma/series.hpp"

namespace qchroma {

/* g_0..g_K for one Hessenberg function, computed off a single S_{n,m}
 * enumeration. Each entry is homogeneous of its index degree and has an
 * integer e-expansion (asserted on construction). */
struct GVector {
    HessFunc m;
    std::vector<SymFunc> entries;
};

/* Definition sum over sigma in S_{n,m} with first cycle of length >= n-k. */
SymFunc g_def(const HessFunc& m, int k);
GVector g_vector(const HessFunc& m, int max_k);

/* Increasing-tree form; must agree with g_def. */
SymFunc g_tree(const HessFunc& m, int k);

/* sum_{k=0}^{n-1} [n-k]_q e_{n-k} g_k; must equal csf_rho. */
SymFunc csf_from_g(const HessFunc& m);

/* Appends a path of size n'+1 at vertex 1: m'(i) = i+1 for i <= n', then the
 * shifted copy of m. */
HessFunc hess_extend(const HessFunc& m, int n_prime);

/* g_k for arbitrary k >= 0 via the smallest admissible extension. */
SymFunc g_extended(const HessFunc& m, int k);

/* g_n(m) == q sum_{i=1}^{n} [i-1]_q e_i g_{n-i}(m), exactly. */
bool g_recursion_check(const HessFunc& m);

/* Closed-form generating series of the g_k, truncated at the given order;
 * coefficient k must equal g_extended(m, k). */
SFSeries g_series(const HessFunc& m, int order);

/* g_k of the one-vertex graph = g_k of every path P_n with n > k. */
SymFunc g_path(int k);

/* Excedance generating polynomial over derangements of 1^{l1} 2^{l2} ... */
QPoly derangement_poly(const Partition& lambda);

/* g_path(k) == sum_{lambda |- k} c_lambda(q) m_lambda. */
bool g_path_monomial_check(int k);

} // namespace qchroma
