#pragma once

#include "qchroma/errors.hpp"

namespace qchroma {

/* Resource guards. Defaults: 8 for permutation-scale enumeration, 12 for ring
 * degree. Initialized once from QCHROMA_MAX_PERM_N / QCHROMA_MAX_DEGREE; the
 * CLI may override via flags. */
struct Limits {
    int max_perm_n = 8;
    int max_degree = 12;
};

Limits& limits();

void require_perm_budget(int n, const char* what);
void require_degree_budget(int degree, const char* what);

} // namespace qchroma
