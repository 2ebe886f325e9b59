#include "doctest.h"
#include "wconformal/errors.hpp"
#include "wconformal/liealg.hpp"

using namespace wconformal;

namespace {
const std::vector<AlgebraInfo>& sweep_list() {
    static std::vector<AlgebraInfo> all = [] {
        std::vector<AlgebraInfo> v;
        for (int n = 1; n <= 8; ++n) v.push_back(algebra_info(Series::A, n));
        for (int n = 2; n <= 4; ++n) v.push_back(algebra_info(Series::B, n));
        v.push_back(algebra_info(Series::C, 3));
        for (int n = 4; n <= 6; ++n) v.push_back(algebra_info(Series::D, n));
        v.push_back(algebra_info(Series::G2, 2));
        v.push_back(algebra_info(Series::F4, 4));
        v.push_back(algebra_info(Series::E6, 6));
        v.push_back(algebra_info(Series::E7, 7));
        v.push_back(algebra_info(Series::E8, 8));
        return v;
    }();
    return all;
}
} // namespace

TEST_CASE("classical table of dual Coxeter numbers and dimensions") {
    auto g2 = algebra_info(Series::G2, 2);
    CHECK(g2.dim == 14);
    CHECK(g2.h == 6);
    CHECK(g2.hvee == 4);
    CHECK(g2.rvee == 3);
    auto a1 = algebra_info(Series::A, 1);
    CHECK(a1.dim == 3);
    CHECK(a1.hvee == 2);
    CHECK(a1.rvee == 1);
    auto e8 = algebra_info(Series::E8, 8);
    CHECK(e8.dim == 248);
    CHECK(e8.hvee == 30);
    auto f4 = algebra_info(Series::F4, 4);
    CHECK(f4.dim == 52);
    CHECK(f4.hvee == 9);
    CHECK(f4.h == 12);
    for (int n = 2; n <= 4; ++n) {
        auto b = algebra_info(Series::B, n);
        CHECK(b.hvee == 2 * n - 1);
        CHECK(b.h == 2 * n);
        CHECK(b.dim == n * (2 * n + 1));
    }
    auto c3 = algebra_info(Series::C, 3);
    CHECK(c3.hvee == 4);
    CHECK(c3.h == 6);
    auto d4 = algebra_info(Series::D, 4);
    CHECK(d4.hvee == 6);
    CHECK(d4.dim == 28);
    auto e6 = algebra_info(Series::E6, 6);
    CHECK(e6.hvee == 12);
    CHECK(e6.dim == 78);
    auto e7 = algebra_info(Series::E7, 7);
    CHECK(e7.hvee == 18);
    CHECK(e7.dim == 133);
}

TEST_CASE("casimir pairing anchors") {
    auto a2 = algebra_info(Series::A, 2);
    CHECK(casimir_pairing(a2, {1, 1}) == 6); // adjoint, 2 hvee
    auto a1 = algebra_info(Series::A, 1);
    CHECK(casimir_pairing(a1, {1}) == Q(3, 2));
    // B3 vector representation: oracle = direct evaluation of the Gram form:
    // (w1, w1 + 2 rho) with w1 = e1 in the standard realization: 1 + 2*(5/2) = 6
    auto b3 = algebra_info(Series::B, 3);
    CHECK(casimir_pairing(b3, {1, 0, 0}) == 6);
    CHECK_THROWS_AS(casimir_pairing(a2, {1}), BadWeight);
}

TEST_CASE("weyl dimensions") {
    auto a2 = algebra_info(Series::A, 2);
    CHECK(weyl_dim(a2, {1, 1}) == 8);
    CHECK(weyl_dim(a2, {1, 0}) == 3);
    CHECK(weyl_dim(a2, {0, 0}) == 1);
    auto e7 = algebra_info(Series::E7, 7);
    CHECK(weyl_dim(e7, {0, 0, 0, 0, 0, 0, 1}) == 56);
    auto e6 = algebra_info(Series::E6, 6);
    CHECK(weyl_dim(e6, {1, 0, 0, 0, 0, 0}) == 27);
    auto b2 = algebra_info(Series::B, 2);
    CHECK(weyl_dim(b2, {0, 1}) == 4);  // spinor
    CHECK(weyl_dim(b2, {0, 2}) == 10); // adjoint
    auto g2 = algebra_info(Series::G2, 2);
    CHECK(weyl_dim(g2, {1, 0}) == 7); // short-root fundamental first
    CHECK(weyl_dim(g2, {0, 1}) == 14);
    auto d3 = algebra_info(Series::D, 3);
    CHECK(weyl_dim(d3, {1, 0, 0}) == 6); // so_6 vector
    CHECK(weyl_dim(d3, adjoint_weight(d3)) == 15);
}

TEST_CASE("dynkin indices") {
    auto a1 = algebra_info(Series::A, 1);
    CHECK(dynkin_index(a1, {1}) == Q(1, 2));
    auto a2 = algebra_info(Series::A, 2);
    CHECK(dynkin_index(a2, {1, 0}) == Q(1, 2)); // 3*(8/3)/(2*8)
    auto g2 = algebra_info(Series::G2, 2);
    CHECK(dynkin_index(g2, adjoint_weight(g2)) == 4);
    CHECK(dynkin_index(g2, {0, 0}) == 0);
}

TEST_CASE("adjoint index equals hvee across the sweep") {
    for (const auto& info : sweep_list()) {
        CAPTURE(info.name);
        CHECK(dynkin_index(info, adjoint_weight(info)) == info.hvee);
        CHECK(weyl_dim(info, adjoint_weight(info)) == info.dim);
    }
}

TEST_CASE("Freudenthal-de Vries strange formula across the sweep") {
    for (const auto& info : sweep_list()) {
        CAPTURE(info.name);
        CHECK(rho_norm2(info) == info.hvee * Q(info.dim) / 12);
    }
}

TEST_CASE("weyl_dim positivity for small dominant weights") {
    for (const auto& info : sweep_list()) {
        if (info.rank > 4) continue;
        WeightVector w(info.rank, 0);
        // all labels <= 2
        for (long mask = 0; mask < 1; ++mask) {} // noop; enumerate below
        std::vector<WeightVector> stack{w};
        size_t pos = 0;
        // enumerate {0,1,2}^rank
        std::vector<long> digits(info.rank, 0);
        while (true) {
            WeightVector lam(digits.begin(), digits.end());
            CHECK(weyl_dim(info, lam) >= 1);
            int i = 0;
            while (i < info.rank && ++digits[i] == 3) digits[i++] = 0;
            if (i == info.rank) break;
        }
        (void)pos;
        (void)stack;
    }
}

TEST_CASE("casimir positivity") {
    for (const auto& info : sweep_list()) {
        if (info.rank > 3) continue;
        std::vector<long> digits(info.rank, 0);
        while (true) {
            WeightVector lam(digits.begin(), digits.end());
            bool zero = true;
            for (long c : lam) zero &= (c == 0);
            if (!zero) CHECK(casimir_pairing(info, lam) > 0);
            int i = 0;
            while (i < info.rank && ++digits[i] == 3) digits[i++] = 0;
            if (i == info.rank) break;
        }
    }
}

TEST_CASE("superalgebra conventions") {
    auto sl = algebra_info(Series::SL, 4, 1);
    CHECK(sl.hvee == 3);
    CHECK(sl.sdim == 8);
    auto osp = algebra_info(Series::OSP, 8, 0);
    CHECK(osp.hvee == 6);
    CHECK(osp.sdim == 28);
    auto sp = algebra_info(Series::OSP, 0, 4);
    CHECK(sp.hvee == -6);
    auto osp12 = algebra_info(Series::OSP1, 0, 1);
    CHECK(osp12.hvee == Q(3, 2));
    CHECK(osp12.sdim == 1);
    CHECK(casimir_pairing(osp12, {4}) == 3); // adjoint: 2 hvee
    auto psl = algebra_info(Series::PSL, 3, 3);
    CHECK(psl.hvee == 0);
    CHECK(psl.sdim == -2);
    CHECK_THROWS_AS(algebra_info(Series::SL, 3, 3), UnsupportedAlgebra);
    CHECK_THROWS_AS(algebra_info(Series::OSP, 4, 0), UnsupportedAlgebra);
    CHECK(algebra_info_from_token("OSP(1|2)").series == Series::OSP1);
    CHECK(algebra_info_from_token("D21A(1/2)").alpha == Q(1, 2));
    CHECK(algebra_info_from_token("B3").name == "B3");
}
