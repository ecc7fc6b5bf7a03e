#include "qchroma/series.hpp"

#include <algorithm>

namespace qchroma {

SFSeries::SFSeries(int order) {
    if (order < 0) throw Error("SFSeries: negative order");
    coeffs_.assign(order + 1, SymFunc::zero());
}

SFSeries SFSeries::one(int order) {
    SFSeries s(order);
    s.coeffs_[0] = SymFunc::one();
    return s;
}

bool SFSeries::is_graded() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_homogeneous(static_cast<int>(k))) return false;
    return true;
}

SFSeries series_mul(const SFSeries& a, const SFSeries& b) {
    SFSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) {
        SymFunc acc;
        for (int i = 0; i <= k; ++i) {
            if (a.coeffs_[i].is_zero() || b.coeffs_[k - i].is_zero()) continue;
            acc += a.coeffs_[i] * b.coeffs_[k - i];
        }
        out.coeffs_[k] = std::move(acc);
    }
    return out;
}

SFSeries SFSeries::inverse() const {
    if (coeffs_[0] != SymFunc::one())
        throw InvertibilityError("series_inverse: constant term must be 1");
    SFSeries inv(order());
    inv.coeff(0) = SymFunc::one();
    for (int k = 1; k <= order(); ++k) {
        SymFunc acc;
        for (int i = 1; i <= k; ++i) {
            if (coeffs_[i].is_zero()) continue;
            acc += coeffs_[i] * inv.coeff(k - i);
        }
        inv.coeff(k) = -acc;
    }
    return inv;
}

SFSeries series_inverse(const SFSeries& a) { return a.inverse(); }

} // namespace qchroma
