#include "qchroma/toric.hpp"

#include <map>

#include "qchroma/limits.hpp"

namespace qchroma {

std::vector<Int> h_vector(const FVector& f) {
    if (f.counts.empty()) throw Error("h_vector: empty f-vector");
    int top = f.top_dimension();
    QPoly total;
    QPoly q_minus_1 = QPoly::from_coeffs({Int(-1), Int(1)});
    for (int i = top; i >= 0; --i) {
        QPoly power(Int(1));
        for (int rep = 0; rep < top - i; ++rep) power *= q_minus_1;
        total += power.scaled(f.counts[i]);
    }
    std::vector<Int> h(top + 1);
    for (int i = 0; i <= top; ++i) h[i] = total.coeff(top - i);
    return h;
}

FVector barycentric_f_vector(int n) {
    if (n < 1) throw Error("barycentric_f_vector: n must be >= 1");
    require_degree_budget(n, "barycentric_f_vector");
    // chains of nonempty proper subsets of [n], counted by length via DP on
    // the subset lattice
    int full = (1 << n) - 1;
    FVector f;
    f.counts.push_back(1);
    std::vector<Int> cur(full + 1, 0);
    bool any = false;
    for (int s = 1; s < full; ++s) {
        cur[s] = 1;
        any = true;
    }
    while (any) {
        Int level = 0;
        for (int s = 1; s < full; ++s) level += cur[s];
        if (level == 0) break;
        f.counts.push_back(level);
        std::vector<Int> next(full + 1, 0);
        any = false;
        for (int s = 1; s < full; ++s) {
            if (cur[s] == 0) continue;
            // supersets t of s, t proper nonempty, t != s
            int complement = full & ~s;
            for (int add = complement; add > 0; add = (add - 1) & complement) {
                int t = s | add;
                if (t == full) continue;
                next[t] += cur[s];
                any = true;
            }
        }
        cur.swap(next);
    }
    return f;
}

namespace {

SymFunc composition_census(int n, Basis basis) {
    require_degree_budget(n, "composition_census");
    // group compositions by (sorted parts, length) before building products
    std::map<Partition, Int> counts;
    for (const Composition& mu : compositions_of(n)) counts[mu.sorted()] += 1;
    SymFunc total;
    for (const auto& [mu, count] : counts) {
        QPoly w = QPoly::monomial(n - mu.length(), count);
        total += SymFunc::basis_element(basis, mu).scaled(w);
    }
    return total;
}

} // namespace

SymFunc frob_C_sigma1(int n) {
    return composition_census(n, Basis::h);
}

SymFunc llt_path(int n, bool shifted) {
    SymFunc at_q_plus_1 = composition_census(n, Basis::e);
    if (shifted) return at_q_plus_1;
    // recover LLT(P_n; x, q) by substituting q -> q-1 in every coefficient
    SymFunc out;
    for (const auto& [lambda, coeff] : at_q_plus_1.to_basis(Basis::e)) {
        out += SymFunc::basis_element(Basis::e, lambda).scaled(qpoly_shift(coeff, QShift::down));
    }
    return out;
}

namespace {

/* 1 - sum_{k>=2} q [k-1]_q h_k z^k, truncated. */
SFSeries f_denominator(int order) {
    SFSeries s = SFSeries::one(order);
    for (int k = 2; k <= order; ++k) {
        QPoly factor = QPoly::monomial(1) * qint(k - 1);
        s.coeff(k) -= SymFunc::basis_element(Basis::h, Partition({k})).scaled(factor);
    }
    return s;
}

} // namespace

SFSeries F1_series(int order) {
    require_degree_budget(order, "F1_series");
    SFSeries numerator(order);
    numerator.coeff(0) = SymFunc::one();
    for (int k = 1; k <= order; ++k)
        numerator.coeff(k) = SymFunc::basis_element(Basis::h, Partition({k}));
    return series_mul(numerator, f_denominator(order).inverse());
}

SFSeries F2_series(int order) {
    require_degree_budget(order, "F2_series");
    return f_denominator(order).inverse();
}

} // namespace qchroma
