#include <doctest.h>

#include "qchroma/gfuncs.hpp"
#include "qchroma/limits.hpp"

using namespace qchroma;

namespace {

SymFunc e_elem(std::vector<int> parts) {
    return SymFunc::basis_element(Basis::e, Partition(std::move(parts)));
}

const HessFunc kRunningExample = HessFunc::validate({2, 4, 4, 5, 6, 6});

} // namespace

TEST_CASE("g_k of the running example") {
    CHECK(g_def(kRunningExample, 0) == SymFunc::one().scaled(QPoly::from_coeffs({1, 1})));
    CHECK(g_def(kRunningExample, 1) == e_elem({1}).scaled(QPoly::monomial(1)));
    CHECK(g_def(kRunningExample, 2) == e_elem({2}).scaled(QPoly::from_coeffs({0, 1, 1})));
    CHECK(g_def(kRunningExample, 3) == e_elem({3}).scaled(QPoly::monomial(2)));
    CHECK(g_def(kRunningExample, 4) == e_elem({4}).scaled(QPoly::from_coeffs({0, 0, 1, 1})));
    SymFunc g5 = e_elem({3, 2}).scaled(QPoly::from_coeffs({0, 0, 1, 3, 1})) +
                 e_elem({4, 1}).scaled(QPoly::from_coeffs({0, 0, 1, 1, 1})) +
                 e_elem({5}).scaled(QPoly::from_coeffs({0, 1, 2, 2, 2, 1}));
    CHECK(g_def(kRunningExample, 5) == g5);
    CHECK_THROWS_AS(g_def(kRunningExample, 6), KOutOfRange);
    CHECK_THROWS_AS(g_def(kRunningExample, -1), KOutOfRange);
}

TEST_CASE("complete graphs collapse") {
    for (int n = 2; n <= 5; ++n) {
        HessFunc m = HessFunc::complete(n);
        CHECK(g_def(m, 0) == SymFunc::one().scaled(qfact(n - 1)));
        for (int k = 1; k < n; ++k) CHECK(g_def(m, k).is_zero());
    }
}

TEST_CASE("g_def equals g_tree up to n = 4") {
    for (int n = 1; n <= 4; ++n)
        for (const HessFunc& m : HessFunc::all(n))
            for (int k = 0; k < n; ++k) CHECK(g_def(m, k) == g_tree(m, k));
}

TEST_CASE("csf recovered from the g_k") {
    for (int n = 1; n <= 4; ++n)
        for (const HessFunc& m : HessFunc::all(n)) CHECK(csf_from_g(m) == csf_rho(m));
    // K_n: [n]_q e_n (n-1)!_q = n!_q e_n
    for (int n = 2; n <= 5; ++n)
        CHECK(csf_from_g(HessFunc::complete(n)) == e_elem({n}).scaled(qfact(n)));
    // the top e-coefficient of the running example
    auto view = csf_from_g(kRunningExample).to_basis(Basis::e);
    CHECK(view.at(Partition({6})) == QPoly::from_coeffs({1, 1}) * qint(6));
    CHECK(view.at(Partition({6})) == QPoly::from_coeffs({1, 2, 2, 2, 2, 2, 1}));
}

TEST_CASE("path extension") {
    CHECK(hess_extend(HessFunc::validate({1}), 0) == HessFunc::validate({1}));
    CHECK(hess_extend(HessFunc::validate({1}), 2) == HessFunc::validate({2, 3, 3}));
    CHECK(hess_extend(HessFunc::validate({2, 2}), 1) == HessFunc::validate({2, 3, 3}));
}

TEST_CASE("g_extended") {
    HessFunc dot = HessFunc::validate({1});
    CHECK(g_extended(dot, 0) == SymFunc::one());
    CHECK(g_extended(dot, 1).is_zero());
    CHECK(g_extended(dot, 2) == e_elem({2}).scaled(QPoly::monomial(1)));
    // k < n falls back to the plain definition
    CHECK(g_extended(kRunningExample, 3) == g_def(kRunningExample, 3));
    // independence of n' on a small range
    for (int n = 1; n <= 2; ++n) {
        for (const HessFunc& m : HessFunc::all(n)) {
            for (int k = n; k <= 4; ++k) {
                CHECK(g_def(hess_extend(m, k - n + 1), k) ==
                      g_def(hess_extend(m, k - n + 2), k));
            }
        }
    }
}

TEST_CASE("g_n recursion") {
    CHECK(g_recursion_check(HessFunc::validate({1})));
    for (int n = 1; n <= 4; ++n) CHECK(g_recursion_check(HessFunc::complete(n)));
    for (const HessFunc& m : HessFunc::all(3)) CHECK(g_recursion_check(m));
}

TEST_CASE("generating series") {
    HessFunc dot = HessFunc::validate({1});
    SFSeries s = g_series(dot, 6);
    for (int k = 0; k <= 6; ++k) CHECK(s.coeff(k) == g_path(k));
    for (const HessFunc& m : HessFunc::all(3)) {
        SFSeries series = g_series(m, m.n() + 2);
        for (int k = 0; k < m.n(); ++k) CHECK(series.coeff(k) == g_def(m, k));
        CHECK(series.coeff(m.n()) == g_extended(m, m.n()));
    }
}

TEST_CASE("g_path") {
    CHECK(g_path(0) == SymFunc::one());
    CHECK(g_path(1).is_zero());
    CHECK(g_path(2) == e_elem({2}).scaled(QPoly::monomial(1)));
    SymFunc g5 = e_elem({3, 2}).scaled(QPoly::from_coeffs({0, 0, 2, 2})) +
                 e_elem({5}).scaled(QPoly::from_coeffs({0, 1, 1, 1, 1}));
    CHECK(g_path(5) == g5);
    // stable value of g_k over all longer paths
    for (int n = 3; n <= 6; ++n) CHECK(g_def(HessFunc::path(n), 2) == g_path(2));
}

TEST_CASE("derangement polynomials") {
    CHECK(derangement_poly(Partition({4})).is_zero());
    CHECK(derangement_poly(Partition({1, 1})) == QPoly::monomial(1));
    CHECK(derangement_poly(Partition({1, 1, 1})) == QPoly::from_coeffs({0, 1, 1}));
    CHECK(derangement_poly(Partition({2, 2, 1})) == QPoly::from_coeffs({0, 0, 2, 2}));
    CHECK(derangement_poly(Partition()) == QPoly(Int(1)));
}

TEST_CASE("path/derangement identity") {
    for (int k = 0; k <= 5; ++k) CHECK(g_path_monomial_check(k));
}

TEST_CASE("g_vector invariants") {
    GVector gv = g_vector(kRunningExample, 5);
    REQUIRE(gv.entries.size() == 6);
    for (int k = 0; k <= 5; ++k) {
        CHECK(gv.entries[k].is_homogeneous(k));
        CHECK(gv.entries[k] == g_def(kRunningExample, k));
    }
}

TEST_CASE("extension guard") {
    int saved = limits().max_perm_n;
    limits().max_perm_n = 8;
    CHECK_THROWS_AS(g_extended(HessFunc::validate({1}), 9), ResourceGuardError);
    limits().max_perm_n = saved;
}
