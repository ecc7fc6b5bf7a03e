#pragma once

#include <string>
#include <vector>

#include "qchroma/hessenberg.hpp"

namespace qchroma {

/* A pair (w, z): w an increasing-tree word of length n-k, z a cyclic word of
 * length k; together a permutation of [n]. */
struct CycWordPair {
    std::vector<int> w;
    std::vector<int> z;

    friend bool operator==(const CycWordPair& a, const CycWordPair& b) {
        return a.w == b.w && a.z == b.z;
    }
    friend bool operator<(const CycWordPair& a, const CycWordPair& b) {
        return std::tie(a.w, a.z) < std::tie(b.w, b.z);
    }
};

/* The e_k-coefficient of g_k(m;x,q):
 * [k]_q * (two-cycle class sum with |tau_1| = n-k, |tau_2| = k) minus the
 * n-cycle class sum. */
QPoly ck_poly(const HessFunc& m, int k);

/* Hamiltonian-type words: w_1 = 1, w_{j+1} <= m(w_j) throughout. */
std::vector<std::vector<int>> enum_S1(const HessFunc& m);

std::vector<CycWordPair> enum_S2(const HessFunc& m, int k);

struct DeltaStep {
    int j = 0;
    CycWordPair image;
    /* One entry per failed candidate j' < j, e.g. "6 > m(3)". */
    std::vector<std::string> violations;
};

/* The injection Delta: S_1 -> S_2. Membership of the image in S_2 is checked
 * explicitly; DeltaNotWellDefined carries the witness when it fails. */
DeltaStep delta_map(const HessFunc& m, int k, const std::vector<int>& w);

struct DeltaRow {
    std::vector<int> w;
    DeltaStep step;
};

struct DeltaReport {
    bool injective = false;
    size_t s1_count = 0;
    size_t s2_count = 0;
    QPoly ck;
    bool count_identity = false; // |S2| - |S1| == ck(1)
    std::vector<DeltaRow> table; // lexicographic in w
};

DeltaReport check_delta_injective(const HessFunc& m, int k);

} // namespace qchroma
