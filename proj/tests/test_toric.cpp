#include <doctest.h>

#include "qchroma/gfuncs.hpp"
#include "qchroma/toric.hpp"

using namespace qchroma;

TEST_CASE("h-vectors of the figure fans") {
    CHECK(h_vector(FVector{{1, 3, 3}}) == std::vector<Int>{1, 1, 1});
    CHECK(h_vector(FVector{{1, 6, 6}}) == std::vector<Int>{1, 4, 1});
    CHECK(h_vector(FVector{{1}}) == std::vector<Int>{1});
}

TEST_CASE("barycentric f-vectors") {
    CHECK(barycentric_f_vector(3).counts == std::vector<Int>{1, 6, 6});
    CHECK(barycentric_f_vector(2).counts == std::vector<Int>{1, 2});
    CHECK(barycentric_f_vector(4).counts[1] == 14);
    CHECK(h_vector(barycentric_f_vector(3)) == std::vector<Int>{1, 4, 1});
    // top chain count = sum over h-vector
    for (int n = 2; n <= 6; ++n) {
        FVector f = barycentric_f_vector(n);
        Int sum = 0;
        for (const Int& h : h_vector(f)) sum += h;
        CHECK(sum == f.counts[f.top_dimension()]);
    }
}

TEST_CASE("frobenius character of the cone module") {
    auto h = [](std::vector<int> parts) {
        return SymFunc::basis_element(Basis::h, Partition(std::move(parts)));
    };
    CHECK(frob_C_sigma1(1) == h({1}));
    CHECK(frob_C_sigma1(2) == h({1, 1}) + h({2}).scaled(QPoly::monomial(1)));
    CHECK(frob_C_sigma1(3) == h({1, 1, 1}) + h({2, 1}).scaled(QPoly::monomial(1, Int(2))) +
                                  h({3}).scaled(QPoly::monomial(2)));
}

TEST_CASE("LLT of the path") {
    auto e = [](std::vector<int> parts) {
        return SymFunc::basis_element(Basis::e, Partition(std::move(parts)));
    };
    CHECK(llt_path(2, true) == e({1, 1}) + e({2}).scaled(QPoly::monomial(1)));
    CHECK(llt_path(2, false) == e({1, 1}) + e({2}).scaled(QPoly::from_coeffs({-1, 1})));
    for (int n = 1; n <= 6; ++n) CHECK(frob_C_sigma1(n) == llt_path(n, true).omega());
}

TEST_CASE("F_1 and F_2") {
    SFSeries f1 = F1_series(6);
    SFSeries f2 = F2_series(6);
    CHECK(f1.is_graded());
    CHECK(f2.is_graded());

    auto z3 = f1.coeff(3).to_basis(Basis::h);
    std::map<Partition, QPoly> expected = {{Partition({3}), qint(3)},
                                           {Partition({2, 1}), QPoly::monomial(1)}};
    CHECK(z3 == expected);

    for (int n = 1; n <= 5; ++n) {
        CHECK(f1.coeff(n).omega() == csf_rho(HessFunc::path(n)));
        CHECK(f2.coeff(n).omega() == g_path(n));
    }
}
