#include "qchroma/qpoly.hpp"

namespace qchroma {

QPoly qint(int n) {
    if (n <= 0) return {};
    return QPoly::from_coeffs(std::vector<Int>(n, Int(1)));
}

QPoly qfact(int n) {
    QPoly r(Int(1));
    for (int i = 1; i <= n; ++i) r *= qint(i);
    return r;
}

QPoly qpoly_shift(const QPoly& p, QShift direction) {
    return p.compose_q_plus(direction == QShift::up ? 1 : -1);
}

RatQPoly to_rational(const QPoly& p) {
    std::vector<Rat> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.emplace_back(c);
    return RatQPoly::from_coeffs(std::move(cs));
}

QPoly to_integral(const RatQPoly& p, const char* context) {
    std::vector<Int> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1)
            throw IntegralityError(std::string(context) + ": non-integer value " + c.get_str());
        cs.push_back(c.get_num());
    }
    return QPoly::from_coeffs(std::move(cs));
}

} // namespace qchroma
