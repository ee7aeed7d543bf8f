#include <bethecount/rootsys.hpp>

#include <doctest.h>

#include <set>

using namespace bethecount;

namespace {

std::vector<PositiveRoot> roots_named(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<PositiveRoot> out;
    for (auto [lo, hi] : pairs) out.emplace_back(lo, hi);
    return out;
}

bool closed_under_concatenation(const std::vector<PositiveRoot>& roots) {
    std::set<std::pair<int, int>> have;
    for (const auto& r : roots) have.insert({r.lo, r.hi});
    for (const auto& a : roots)
        for (const auto& b : roots)
            if (a.hi == b.lo && !have.count({a.lo, b.hi})) return false;
    return true;
}

// every subset of positive roots for small ranks
template <typename F>
void for_each_subset(int rank, F&& f) {
    const auto all = positive_roots(rank);
    const std::size_t n = all.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<PositiveRoot> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) subset.push_back(all[i]);
        f(subset);
    }
}

} // namespace

TEST_CASE("positive root enumeration") {
    CHECK(positive_roots(1) == roots_named({{1, 2}}));
    CHECK(positive_roots(2) == roots_named({{1, 2}, {1, 3}, {2, 3}}));
    CHECK(positive_roots(3).size() == 6);
    CHECK(positive_roots(0).empty());

    CHECK(PositiveRoot(1, 3).exponents(2) == Exponents{1, 1});
    CHECK(PositiveRoot(2, 3).exponents(2) == Exponents{0, 1});
    CHECK(PositiveRoot(2, 4).name() == "a2+a3");
}

TEST_CASE("twist patterns resolve to index blocks") {
    // theta_1 = theta_3 = 0, theta_2 generic
    auto d = preserved_roots(3, TwistConfiguration::vanishing(3, roots_named({{1, 2}, {3, 4}})));
    CHECK(d.blocks() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(d.type_string() == "su(2)+su(2)+u(1)");

    // theta_1 = theta_2 = 0, theta_3 generic
    d = preserved_roots(3, TwistConfiguration::vanishing(3, roots_named({{1, 2}, {2, 3}})));
    CHECK(d.blocks() == std::vector<std::vector<int>>{{1, 2, 3}, {4}});
    CHECK(d.type_string() == "su(3)+u(1)");

    // all generic
    d = preserved_roots(2, TwistConfiguration::vanishing(2, {}));
    CHECK(d.is_toral());
    CHECK(d.type_string() == "u(1)^2");
}

TEST_CASE("exact rational angles") {
    // theta = (1/3, 2/3, 1/3) turns: theta_1+theta_2 and theta_2+theta_3
    // vanish mod full turns
    auto d = preserved_roots(3, TwistConfiguration::from_angles(3, {Rat(1, 3), Rat(2, 3), Rat(1, 3)}));
    CHECK(d.blocks() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    CHECK(d.type_string() == "su(2)+su(2)+u(1)");

    // untwisted
    d = preserved_roots(2, TwistConfiguration::from_angles(2, {Rat(0), Rat(0)}));
    CHECK(d.is_full());
    CHECK(d.type_string() == "su(3)");

    // angles adding to a full turn vanish
    d = preserved_roots(2, TwistConfiguration::from_angles(2, {Rat(1, 2), Rat(1, 2)}));
    CHECK(d.blocks() == std::vector<std::vector<int>>{{1, 3}, {2}});

    CHECK_THROWS_AS(preserved_roots(2, TwistConfiguration::from_angles(2, {Rat(1, 2)})),
                    validation_error);
}

TEST_CASE("inconsistent flag vectors are rejected") {
    // roots of rank 2 in canonical order: a1, a1+a2, a2
    CHECK_NOTHROW(preserved_roots(2, TwistConfiguration::from_flags(2, {true, true, true})));
    CHECK_NOTHROW(preserved_roots(2, TwistConfiguration::from_flags(2, {true, false, false})));
    // a1 and a2 vanish but a1+a2 flagged nonzero: violates transitivity
    CHECK_THROWS_AS(preserved_roots(2, TwistConfiguration::from_flags(2, {true, false, true})),
                    validation_error);
    CHECK_THROWS_AS(TwistConfiguration::from_flags(2, {true, true}), validation_error);
}

TEST_CASE("decomposition from a root subset") {
    // {a2+a3, a4}: indices 2~4 and 4~5 merge
    auto d = decomposition_from_subset(4, roots_named({{2, 4}, {4, 5}}));
    CHECK(d.blocks() == std::vector<std::vector<int>>{{1}, {2, 4, 5}, {3}});
    CHECK(d.summand_ranks() == std::vector<int>{2});
    CHECK(d.type_string() == "su(3)+u(1)^2");
    const auto preserved = d.preserved_roots();
    CHECK(preserved == roots_named({{2, 4}, {2, 5}, {4, 5}}));

    CHECK(decomposition_from_subset(3, {}).is_toral());

    d = decomposition_from_subset(2, roots_named({{1, 2}, {1, 3}}));
    CHECK(d.is_full());
    CHECK(d.type_string() == "su(3)");
}

TEST_CASE("preserved sets are closed and idempotent") {
    for (int rank = 1; rank <= 3; ++rank) {
        for_each_subset(rank, [&](const std::vector<PositiveRoot>& subset) {
            const auto d = decomposition_from_subset(rank, subset);
            CHECK(closed_under_concatenation(d.preserved_roots()));
            CHECK(decomposition_from_subset(rank, d.preserved_roots()) == d);
        });
    }
    // spot checks at higher rank
    for (int rank = 4; rank <= 6; ++rank) {
        const auto d = decomposition_from_subset(
            rank, roots_named({{1, 3}, {2, 4}, {rank, rank + 1}}));
        CHECK(closed_under_concatenation(d.preserved_roots()));
        CHECK(decomposition_from_subset(rank, d.preserved_roots()) == d);
    }
}

TEST_CASE("block counting identities") {
    const auto toral = decomposition_from_subset(4, {});
    CHECK(toral.blocks().size() == 5);
    CHECK(toral.u1_count() == 4);

    const auto full = decomposition_from_subset(4, positive_roots(4));
    CHECK(full.blocks().size() == 1);
    CHECK(full.u1_count() == 0);
    CHECK(full.preserved_roots().size() == positive_roots(4).size());
}

TEST_CASE("super positive roots") {
    auto r11 = super_positive_roots(1, 1);
    REQUIRE(r11.size() == 1);
    CHECK(r11[0].parity == RootParity::odd);
    CHECK(r11[0].name() == "e1-f1");
    CHECK(r11[0].exponents(1, 1) == Exponents{1});

    auto r12 = super_positive_roots(1, 2);
    REQUIRE(r12.size() == 3);
    // even: f1-f2 -> t1; odd: e-f1 -> t2, e-f2 -> t1 t2
    CHECK(r12[0].parity == RootParity::even);
    CHECK(r12[0].exponents(1, 2) == Exponents{1, 0});
    CHECK(r12[1].parity == RootParity::odd);
    CHECK(r12[1].exponents(1, 2) == Exponents{0, 1});
    CHECK(r12[2].parity == RootParity::odd);
    CHECK(r12[2].exponents(1, 2) == Exponents{1, 1});

    auto r22 = super_positive_roots(2, 2);
    int even = 0, odd = 0;
    for (const auto& r : r22) (r.parity == RootParity::even ? even : odd)++;
    CHECK(even == 2);
    CHECK(odd == 4);
    // delta exponent is 1 exactly on odd roots
    for (const auto& r : r22) {
        const auto e = r.exponents(2, 2);
        CHECK(e.back() == (r.parity == RootParity::odd ? 1 : 0));
    }

    CHECK_THROWS_AS(super_positive_roots(0, 1), validation_error);
}
