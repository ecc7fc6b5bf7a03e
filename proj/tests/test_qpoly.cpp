#include <doctest.h>

#include <random>

#include "qchroma/qpoly.hpp"

using namespace qchroma;

namespace {

QPoly random_poly(std::mt19937& rng, int max_deg = 8) {
    int deg = static_cast<int>(rng() % (max_deg + 1));
    std::vector<Int> cs(deg + 1);
    for (auto& c : cs) c = static_cast<long>(rng() % 21) - 10;
    return QPoly::from_coeffs(std::move(cs));
}

} // namespace

TEST_CASE("q-integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == QPoly(Int(1)));
    CHECK(qint(3) == QPoly::from_coeffs({1, 1, 1}));
    for (int n = 0; n <= 20; ++n) CHECK(qint(n).eval(Int(1)) == n);
}

TEST_CASE("q-factorials") {
    CHECK(qfact(0) == QPoly(Int(1)));
    CHECK(qfact(2) == QPoly::from_coeffs({1, 1}));
    // (1+q)(1+q+q^2), expanded by hand
    CHECK(qfact(3) == QPoly::from_coeffs({1, 2, 2, 1}));
    Int factorial(1);
    for (int n = 1; n <= 10; ++n) {
        factorial *= n;
        CHECK(qfact(n).eval(Int(1)) == factorial);
    }
}

TEST_CASE("canonical form strips trailing zeros") {
    CHECK(QPoly::from_coeffs({0, 0, 0}).is_zero());
    CHECK(QPoly::from_coeffs({1, 2, 0}).degree() == 1);
    CHECK(QPoly().degree() == -1);
}

TEST_CASE("shift q -> q-1 and q -> q+1") {
    CHECK(qpoly_shift(QPoly::monomial(2), QShift::down) == QPoly::from_coeffs({1, -2, 1}));
    CHECK(qpoly_shift(QPoly::from_coeffs({1, 1}), QShift::up) == QPoly::from_coeffs({2, 1}));

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        QPoly p = random_poly(rng);
        CHECK(qpoly_shift(qpoly_shift(p, QShift::down), QShift::up) == p);
        CHECK(qpoly_shift(qpoly_shift(p, QShift::up), QShift::down) == p);
    }
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        QPoly a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("rational to integral conversion") {
    RatQPoly half = RatQPoly::from_coeffs({Rat(1, 2)});
    CHECK_THROWS_AS(to_integral(half), IntegralityError);
    RatQPoly whole = RatQPoly::from_coeffs({Rat(3), Rat(-2)});
    CHECK(to_integral(whole) == QPoly::from_coeffs({3, -2}));
}

TEST_CASE("evaluation") {
    QPoly p = QPoly::from_coeffs({1, 0, -2, 5});
    CHECK(p.eval(Int(3)) == Int(1 - 18 + 135));
    CHECK(p.coeff(2) == -2);
    CHECK(p.coeff(17) == 0);
}
