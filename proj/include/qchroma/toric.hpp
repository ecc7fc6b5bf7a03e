#pragma once

#include <vector>

#include "qchroma/series.hpp"
#include "qchroma/symfunc.hpp"

namespace qchroma {

/* Cone counts of a fan by dimension; counts[0] = 1 for nonempty fans. */
struct FVector {
    std::vector<Int> counts;

    int top_dimension() const { return static_cast<int>(counts.size()) - 1; }
};

/* h_i from sum_i f_i (q-1)^{n-i} = sum_i h_i q^{n-i}, by exact expansion. */
std::vector<Int> h_vector(const FVector& f);

/* First barycentric subdivision of the projective fan on [n]: cones are
 * chains of nonempty proper subsets of [n]; f_d counts chains of length d. */
FVector barycentric_f_vector(int n);

/* Frobenius character of the cone module: sum over compositions mu of n of
 * q^{n - len(mu)} h_mu. */
SymFunc frob_C_sigma1(int n);

/* Path-graph LLT at q+1 (shifted = true) or shifted back down to q. */
SymFunc llt_path(int n, bool shifted);

/* F_1 = (sum h_n z^n) / (1 - sum_{n>=2} q [n-1]_q h_n z^n), F_2 its right
 * factor alone. */
SFSeries F1_series(int order);
SFSeries F2_series(int order);

} // namespace qchroma
