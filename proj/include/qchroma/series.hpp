#pragma once

#include <vector>

#include "qchroma/symfunc.hpp"

namespace qchroma {

/* Truncated formal power series in z with SymFunc coefficients; index k holds
 * the coefficient of z^k, kept through order() inclusive. */
class SFSeries {
public:
    explicit SFSeries(int order);

    static SFSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const SymFunc& coeff(int k) const { return coeffs_.at(k); }
    SymFunc& coeff(int k) { return coeffs_.at(k); }

    /* Every coefficient of z^k homogeneous of degree k. */
    bool is_graded() const;

    friend SFSeries series_mul(const SFSeries& a, const SFSeries& b);

    /* Requires constant term exactly 1; throws InvertibilityError. */
    SFSeries inverse() const;

private:
    std::vector<SymFunc> coeffs_;
};

SFSeries series_mul(const SFSeries& a, const SFSeries& b);
SFSeries series_inverse(const SFSeries& a);

} // namespace qchroma
