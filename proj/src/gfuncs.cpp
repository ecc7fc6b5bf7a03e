#include "qchroma/gfuncs.hpp"

#include <algorithm>
#include <map>

#include "qchroma/kernels.hpp"
#include "qchroma/limits.hpp"

namespace qchroma {

namespace {

SymFunc omega_rho_product(const Partition& type) {
    SymFunc prod = SymFunc::one();
    for (int part : type.parts()) prod = prod * rho(part);
    return prod.omega();
}

SymFunc g_from_classes(const CycleClassTable& classes, int n, int k) {
    SymFunc total;
    for (const auto& [key, weight] : classes) {
        int first_len = key.first;
        if (first_len < n - k) continue;
        int h_index = first_len - n + k;
        SymFunc term = omega_rho_product(key.second);
        if (h_index > 0) term = term * SymFunc::basis_element(Basis::h, Partition({h_index}));
        QPoly w = (h_index % 2 == 0) ? weight : -weight;
        total += term.scaled(w);
    }
    return total;
}

void check_k_range(const HessFunc& m, int k) {
    if (k < 0 || k >= m.n())
        throw KOutOfRange("g_k requires 0 <= k < n, got k=" + std::to_string(k) +
                          " for n=" + std::to_string(m.n()));
}

} // namespace

SymFunc g_def(const HessFunc& m, int k) {
    check_k_range(m, k);
    return g_from_classes(cycle_weight_classes(m), m.n(), k);
}

GVector g_vector(const HessFunc& m, int max_k) {
    check_k_range(m, max_k);
    CycleClassTable classes = cycle_weight_classes(m);
    GVector gv{m, {}};
    for (int k = 0; k <= max_k; ++k) {
        SymFunc g = g_from_classes(classes, m.n(), k);
        if (!g.is_homogeneous(k)) throw Error("g_k is not homogeneous of degree k");
        g.to_basis(Basis::e); // integrality assertion
        gv.entries.push_back(std::move(g));
    }
    return gv;
}

SymFunc g_tree(const HessFunc& m, int k) {
    check_k_range(m, k);
    int n = m.n();
    std::map<std::vector<int>, SymFunc> csf_memo;
    SymFunc total;
    for (int d = n - k; d <= n; ++d) {
        int h_index = d - n + k;
        for (const IncTree& tree : enum_inc_trees(m, d)) {
            HessFunc sub = hess_minus_tau(m, tree.word);
            auto it = csf_memo.find(sub.values());
            if (it == csf_memo.end()) it = csf_memo.emplace(sub.values(), csf_rho(sub)).first;
            SymFunc term = it->second;
            if (h_index > 0) term = term * SymFunc::basis_element(Basis::h, Partition({h_index}));
            QPoly w = QPoly::monomial(wt(m, embed_word(m, tree.word)));
            if (h_index % 2 != 0) w = -w;
            total += term.scaled(w);
        }
    }
    return total;
}

SymFunc csf_from_g(const HessFunc& m) {
    int n = m.n();
    GVector gv = g_vector(m, n - 1);
    SymFunc total;
    for (int k = 0; k < n; ++k) {
        SymFunc term = SymFunc::basis_element(Basis::e, Partition({n - k})) * gv.entries[k];
        total += term.scaled(qint(n - k));
    }
    return total;
}

HessFunc hess_extend(const HessFunc& m, int n_prime) {
    if (n_prime < 0) throw Error("hess_extend: n' must be >= 0");
    std::vector<int> values;
    values.reserve(m.n() + n_prime);
    for (int i = 1; i <= n_prime; ++i) values.push_back(i + 1);
    for (int i = 1; i <= m.n(); ++i) values.push_back(m(i) + n_prime);
    return HessFunc::validate(std::move(values));
}

SymFunc g_extended(const HessFunc& m, int k) {
    if (k < 0) throw KOutOfRange("g_extended: k must be >= 0");
    if (k < m.n()) return g_def(m, k);
    int n_prime = k - m.n() + 1;
    return g_def(hess_extend(m, n_prime), k);
}

bool g_recursion_check(const HessFunc& m) {
    int n = m.n();
    SymFunc lhs = g_extended(m, n);
    GVector gv = g_vector(m, n - 1);
    SymFunc rhs;
    for (int i = 1; i <= n; ++i) {
        QPoly factor = QPoly::monomial(1) * qint(i - 1); // q [i-1]_q
        if (factor.is_zero()) continue;
        rhs += (SymFunc::basis_element(Basis::e, Partition({i})) * gv.entries[n - i]).scaled(factor);
    }
    return lhs == rhs;
}

namespace {

/* 1 - q sum_{k=2}^{cap} [k-1]_q e_k z^k, truncated at the series order. */
SFSeries one_minus_q_e_tail(int order, int cap) {
    SFSeries s = SFSeries::one(order);
    for (int k = 2; k <= std::min(order, cap); ++k) {
        QPoly factor = QPoly::monomial(1) * qint(k - 1);
        s.coeff(k) -= SymFunc::basis_element(Basis::e, Partition({k})).scaled(factor);
    }
    return s;
}

} // namespace

SFSeries g_series(const HessFunc& m, int order) {
    int n = m.n();
    if (order < n) throw Error("g_series: order must be >= n");
    require_degree_budget(order, "g_series");
    GVector gv = g_vector(m, n - 1);

    // numerator: sum_i g_i z^i (1 - q sum_{k=2}^{n-i-1} [k-1]_q e_k z^k)
    SFSeries numerator(order);
    for (int i = 0; i < n; ++i) {
        SFSeries factor = one_minus_q_e_tail(order, n - i - 1);
        for (int k = 0; k + i <= order; ++k) {
            if (factor.coeff(k).is_zero() || gv.entries[i].is_zero()) continue;
            numerator.coeff(i + k) += gv.entries[i] * factor.coeff(k);
        }
    }
    SFSeries denominator = one_minus_q_e_tail(order, order);
    return series_mul(numerator, denominator.inverse());
}

SymFunc g_path(int k) {
    if (k < 0) throw KOutOfRange("g_path: k must be >= 0");
    require_degree_budget(k, "g_path");
    SFSeries denominator = one_minus_q_e_tail(std::max(k, 1), std::max(k, 1));
    return denominator.inverse().coeff(k);
}

QPoly derangement_poly(const Partition& lambda) {
    require_perm_budget(lambda.size(), "derangement_poly");
    std::vector<int> base;
    for (int i = 0; i < lambda.length(); ++i)
        for (int rep = 0; rep < lambda.part(i); ++rep) base.push_back(i + 1);
    std::vector<int> word = base;
    std::sort(word.begin(), word.end());
    QPoly total;
    do {
        bool deranged = true;
        int exc = 0;
        for (size_t j = 0; j < word.size(); ++j) {
            if (word[j] == base[j]) {
                deranged = false;
                break;
            }
            if (word[j] > base[j]) ++exc;
        }
        if (deranged) total += QPoly::monomial(exc);
    } while (std::next_permutation(word.begin(), word.end()));
    return total;
}

bool g_path_monomial_check(int k) {
    std::map<Partition, QPoly> expected;
    for (const Partition& lambda : partitions_of(k)) {
        QPoly c = derangement_poly(lambda);
        if (!c.is_zero()) expected.emplace(lambda, std::move(c));
    }
    return g_path(k).to_basis(Basis::m) == expected;
}

} // namespace qchroma
