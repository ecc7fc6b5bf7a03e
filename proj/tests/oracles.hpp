#pragma once

#include <map>
#include <vector>

#include "qchroma/symfunc.hpp"

namespace qchroma::testing {

/* Brute-force oracle: symmetric polynomials materialized in a fixed number of
 * variables, exponent vector -> q-polynomial. Deliberately independent of the
 * library's transition-matrix machinery. */
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, QPoly> monos;
};

MultiPoly mp_zero(int nvars);
MultiPoly mp_one(int nvars);
MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_scale(const MultiPoly& a, const QPoly& s);

MultiPoly mp_power_sum(int k, int nvars);
MultiPoly mp_elementary(int k, int nvars);
MultiPoly mp_homogeneous(int k, int nvars);
MultiPoly mp_monomial_sym(const Partition& lambda, int nvars);
MultiPoly mp_schur(const Partition& lambda, int nvars); // explicit SSYT enumeration

MultiPoly mp_basis_element(Basis b, const Partition& lambda, int nvars);

/* Collects the m-expansion of a symmetric polynomial of the given homogeneous
 * degree by reading off coefficients at sorted exponent vectors. Requires
 * nvars >= degree. */
std::map<Partition, QPoly> mp_m_view(const MultiPoly& p, int degree);

} // namespace qchroma::testing
