#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qchroma/errors.hpp"

namespace qchroma {

using Int = mpz_class;
using Rat = mpq_class;

/* Dense polynomial in the formal variable q. Coefficient of q^i sits at index
 * i; trailing zeros are stripped, so the zero polynomial has an empty
 * coefficient vector. All arithmetic is exact. */
template <class Coeff>
class BasicQPoly {
public:
    BasicQPoly() = default;

    explicit BasicQPoly(Coeff constant) {
        coeffs_.push_back(std::move(constant));
        trim();
    }

    explicit BasicQPoly(long constant) : BasicQPoly(Coeff(constant)) {}

    static BasicQPoly from_coeffs(std::vector<Coeff> coeffs) {
        BasicQPoly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static BasicQPoly monomial(int degree, Coeff coeff = Coeff(1)) {
        BasicQPoly p;
        if (coeff != 0) {
            p.coeffs_.assign(degree + 1, Coeff(0));
            p.coeffs_[degree] = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /* -1 for the zero polynomial. */
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Coeff coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Coeff(0);
        return coeffs_[i];
    }

    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    BasicQPoly& operator+=(const BasicQPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    BasicQPoly& operator-=(const BasicQPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend BasicQPoly operator+(BasicQPoly a, const BasicQPoly& b) { return a += b; }
    friend BasicQPoly operator-(BasicQPoly a, const BasicQPoly& b) { return a -= b; }

    BasicQPoly operator-() const {
        BasicQPoly p(*this);
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend BasicQPoly operator*(const BasicQPoly& a, const BasicQPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        BasicQPoly p;
        p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        p.trim();
        return p;
    }

    BasicQPoly& operator*=(const BasicQPoly& o) { return *this = *this * o; }

    BasicQPoly scaled(const Coeff& s) const {
        if (s == 0) return {};
        BasicQPoly p(*this);
        for (auto& c : p.coeffs_) c *= s;
        return p;
    }

    Coeff eval(const Coeff& x) const {
        Coeff acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /* Exact substitution q -> q + delta via Horner. */
    BasicQPoly compose_q_plus(long delta) const {
        BasicQPoly shift_factor = from_coeffs({Coeff(delta), Coeff(1)});
        BasicQPoly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * shift_factor + BasicQPoly(*it);
        return acc;
    }

    bool nonnegative() const {
        for (const auto& c : coeffs_)
            if (c < 0) return false;
        return true;
    }

    friend bool operator==(const BasicQPoly& a, const BasicQPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BasicQPoly& a, const BasicQPoly& b) { return !(a == b); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using QPoly = BasicQPoly<Int>;
using RatQPoly = BasicQPoly<Rat>;

enum class QShift { down, up }; // q -> q-1, q -> q+1

QPoly qint(int n);
QPoly qfact(int n);
QPoly qpoly_shift(const QPoly& p, QShift direction);

RatQPoly to_rational(const QPoly& p);
/* Throws IntegralityError when any coefficient has a denominator. */
QPoly to_integral(const RatQPoly& p, const char* context = "coefficient");

} // namespace qchroma
