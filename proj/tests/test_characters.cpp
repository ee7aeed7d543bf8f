#include <bethecount/characters.hpp>
#include <bethecount/occupancy.hpp>

#include <doctest.h>

#include <numeric>

using namespace bethecount;

TEST_CASE("Verma inverses for A-type root sets") {
    const auto su2 = verma_inverse(positive_roots(1), 1);
    CHECK(su2.poly() == SignedPolynomial::from_terms(1, {{{0}, 1}, {{1}, -1}}));
    CHECK_FALSE(su2.is_series());

    const auto su3 = verma_inverse(positive_roots(2), 2);
    CHECK(su3.poly() == SignedPolynomial::from_terms(2, {{{0, 0}, 1},
                                                         {{1, 0}, -1},
                                                         {{0, 1}, -1},
                                                         {{2, 1}, 1},
                                                         {{1, 2}, 1},
                                                         {{2, 2}, -1}}));

    CHECK(verma_inverse({}, 3).poly() == SignedPolynomial::one(3));
}

TEST_CASE("full expansions have (r+1)! signed unit terms") {
    for (int rank = 1; rank <= 4; ++rank) {
        const auto inv = verma_inverse(positive_roots(rank), rank);
        Int expected = factorial(rank + 1);
        CHECK(Int(static_cast<long>(inv.poly().term_count())) == expected);
        for (const auto& [e, c] : inv.poly().terms()) CHECK((c == 1 || c == -1));
    }
}

TEST_CASE("partial inverses keep only preserved roots") {
    const auto a2_only = decomposition_from_subset(2, {PositiveRoot(2, 3)});
    CHECK(partial_inverse(a2_only, 2).poly() ==
          SignedPolynomial::from_terms(2, {{{0, 0}, 1}, {{0, 1}, -1}}));

    const auto theta_sum = decomposition_from_subset(2, {PositiveRoot(1, 3)});
    CHECK(partial_inverse(theta_sum, 2).poly() ==
          SignedPolynomial::from_terms(2, {{{0, 0}, 1}, {{1, 1}, -1}}));

    const auto su4_pair = decomposition_from_subset(3, {PositiveRoot(1, 2), PositiveRoot(3, 4)});
    CHECK(partial_inverse(su4_pair, 3).poly() ==
          SignedPolynomial::from_terms(3, {{{0, 0, 0}, 1},
                                           {{1, 0, 0}, -1},
                                           {{0, 0, 1}, -1},
                                           {{1, 0, 1}, 1}}));

    CHECK(partial_inverse(SubalgebraDecomposition::toral(3), 3).poly() ==
          SignedPolynomial::one(3));
}

TEST_CASE("superalgebra inverses") {
    const auto sl11 = super_inverse(1, 1, DegreeBox({4}));
    CHECK(sl11.is_series());
    CHECK(sl11.poly() == SignedPolynomial::from_terms(1, {{{0}, 1},
                                                          {{1}, -1},
                                                          {{2}, 1},
                                                          {{3}, -1},
                                                          {{4}, 1}}));

    // (1 - t1) / ((1 + t2)(1 + t1 t2)) expanded inside the box
    const auto sl12 = super_inverse(1, 2, DegreeBox({2, 2}));
    CHECK(sl12.poly() == SignedPolynomial::from_terms(2, {{{0, 0}, 1},
                                                          {{0, 1}, -1},
                                                          {{1, 0}, -1},
                                                          {{0, 2}, 1},
                                                          {{2, 1}, 1}}));

    CHECK(sl12.poly().constant_term() == 1);
    CHECK(super_inverse(2, 2, DegreeBox({1, 1, 1})).poly().constant_term() == 1);

    // inverse times character is 1 within the box
    for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        const DegreeBox box(std::vector<int>(static_cast<std::size_t>(m + n - 1), 3));
        CHECK(mul(super_inverse(m, n, box).poly(), super_character(m, n, box), box) ==
              SignedPolynomial::one(m + n - 1));
    }
}

TEST_CASE("shift application") {
    const SpinChainSpec spec{1, 1, 4};
    auto c = [&](const MagnonVector& m) { return c_coefficient(spec, m); };

    const auto su2 = verma_inverse(positive_roots(1), 1);
    CHECK(apply_shift(su2, c, {2}) == 2); // 6 - 4

    const auto identity = verma_inverse({}, 1);
    CHECK(apply_shift(identity, c, {3}) == c_coefficient(spec, {3}));

    const SpinChainSpec su3_spin1{2, 2, 2};
    auto c3 = [&](const MagnonVector& m) { return c_coefficient(su3_spin1, m); };
    const auto su3 = verma_inverse(positive_roots(2), 2);
    CHECK(apply_shift(su3, c3, {2, 1}) == 0); // 4 - 2 - 3 + 1 + 0 - 0
}

TEST_CASE("series shifts demand a covering box") {
    const auto sl11 = super_inverse(1, 1, DegreeBox({2}));
    auto f = [](const MagnonVector&) { return Int(1); };
    CHECK_NOTHROW(apply_shift(sl11, f, {2}));
    CHECK_THROWS_AS(apply_shift(sl11, f, {3}), validation_error);
}

TEST_CASE("shift composition matches stencil products") {
    const SpinChainSpec spec{2, 1, 3};
    auto c = [&](const MagnonVector& m) { return c_coefficient(spec, m); };

    const auto f1 = verma_inverse({PositiveRoot(1, 2)}, 2);
    const auto f2 = verma_inverse({PositiveRoot(2, 3)}, 2);
    const auto f12 = verma_inverse({PositiveRoot(1, 2), PositiveRoot(2, 3)}, 2);

    for (const auto& m : magnon_domain(spec)) {
        auto inner = [&](const MagnonVector& probe) { return apply_shift(f2, c, probe); };
        CHECK(apply_shift(f1, inner, m) == apply_shift(f12, c, m));
    }

    // linearity in f
    auto g = [&](const MagnonVector& m) { return Int(c_coefficient(spec, m) * 3); };
    for (const auto& m : magnon_domain(spec))
        CHECK(apply_shift(f12, g, m) == 3 * apply_shift(f12, c, m));
}

TEST_CASE("stencil rendering") {
    CHECK(format_stencil(verma_inverse(positive_roots(1), 1)) == "c(M) - c(M-1)");
    CHECK(format_stencil(verma_inverse(positive_roots(2), 2)) ==
          "c(M1,M2) - c(M1-1,M2) - c(M1,M2-1) + c(M1-2,M2-1) + c(M1-1,M2-2) - c(M1-2,M2-2)");
    CHECK(format_stencil(verma_inverse({}, 2)) == "c(M1,M2)");
    const auto su4_pair = decomposition_from_subset(3, {PositiveRoot(1, 2), PositiveRoot(3, 4)});
    CHECK(format_stencil(partial_inverse(su4_pair, 3)) ==
          "c(M1,M2,M3) - c(M1-1,M2,M3) - c(M1,M2,M3-1) + c(M1-1,M2,M3-1)");
}
