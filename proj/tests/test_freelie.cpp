#include <doctest.h>

#include <vector>

#include "propg/freelie.hpp"

using namespace propg;

namespace {

std::vector<LieElement> basis_elements_up_to(int max_degree) {
    std::vector<LieElement> out;
    auto basis = lyndon_basis(max_degree);
    for (int d = 3; d <= max_degree; ++d)
        for (const auto& w : basis[static_cast<std::size_t>(d)])
            out.push_back(LieElement::basis_word(w));
    return out;
}

int degree_of(const LieElement& e) { return e.degree().value(); }

} // namespace

TEST_SUITE("freelie") {

    TEST_CASE("lyndon words at the anchor degrees") {
        auto basis = lyndon_basis(12);
        CHECK(basis[3].size() == 1);
        CHECK(basis[3][0].letters() == std::vector<int>{3});
        CHECK(basis[4].empty());
        CHECK(basis[8].size() == 1);
        CHECK(basis[8][0].letters() == std::vector<int>{3, 5});
        REQUIRE(basis[12].size() == 2);
        CHECK(basis[12][0].letters() == std::vector<int>{3, 9});
        CHECK(basis[12][1].letters() == std::vector<int>{5, 7});
    }

    TEST_CASE("degree caps") {
        CHECK_THROWS_AS(lyndon_basis(kMaxLieDegree + 1), BudgetError);
        CHECK_THROWS_AS(graded_dimension(kMaxLieDegree + 1), BudgetError);
        CHECK_THROWS_AS(lyndon_basis(2), DomainError);
        CHECK(graded_dimension(kMaxLieDegree) >= 1);
    }

    TEST_CASE("lyndon predicate") {
        CHECK(LyndonWord::is_lyndon(std::vector<int>{3}));
        CHECK(LyndonWord::is_lyndon(std::vector<int>{3, 5}));
        CHECK_FALSE(LyndonWord::is_lyndon(std::vector<int>{5, 3}));
        CHECK_FALSE(LyndonWord::is_lyndon(std::vector<int>{3, 3}));
        CHECK(LyndonWord::is_lyndon(std::vector<int>{3, 3, 5}));
        CHECK_THROWS_AS(LyndonWord({4}), DomainError);
        CHECK_THROWS_AS(LyndonWord({5, 3}), DomainError);
    }

    TEST_CASE("graded dimensions 3..12") {
        const std::vector<int64_t> expected{1, 0, 1, 0, 1, 1, 1, 1, 2, 2};
        for (int d = 3; d <= 12; ++d)
            CHECK(graded_dimension(d) == expected[static_cast<std::size_t>(d - 3)]);
    }

    TEST_CASE("recursion agrees with the Lyndon enumeration up to 24") {
        auto basis = lyndon_basis(24);
        for (int d = 1; d <= 24; ++d)
            CHECK(graded_dimension(d) ==
                  static_cast<int64_t>(basis[static_cast<std::size_t>(d)].size()));
    }

    TEST_CASE("associative series reconstruction sanity") {
        // prod over n of (1-t^n)^(-d_n) must reproduce the composition counts
        const int top = 24;
        std::vector<int64_t> b(static_cast<std::size_t>(top) + 1, 0);
        b[0] = 1;
        for (int n = 1; n <= top; ++n) {
            int64_t d = graded_dimension(std::max(n, 1));
            if (n < 3)
                d = 0;
            if (d == 0)
                continue;
            std::vector<int64_t> nb(static_cast<std::size_t>(top) + 1, 0);
            for (int j = 0; j <= top; ++j) {
                if (b[static_cast<std::size_t>(j)] == 0)
                    continue;
                int64_t binom = 1;
                for (int i = 0; j + i * n <= top; ++i) {
                    nb[static_cast<std::size_t>(j + i * n)] +=
                        b[static_cast<std::size_t>(j)] * binom;
                    binom = binom * (d + i) / (i + 1);
                }
            }
            b = std::move(nb);
        }
        for (int m = 0; m <= top; ++m)
            CHECK(b[static_cast<std::size_t>(m)] == associative_dimension(m));
    }

    TEST_CASE("bracket basics") {
        auto s3 = LieElement::generator(3);
        auto s5 = LieElement::generator(5);
        CHECK(bracket(s3, s3).is_zero());
        auto b = bracket(s3, s5);
        REQUIRE(b.coefficients().size() == 1);
        CHECK(b.coefficients().begin()->first == std::vector<int>{3, 5});
        CHECK(b.coefficients().begin()->second == 1);
        CHECK(bracket(s5, s3) + b == LieElement());
    }

    TEST_CASE("antisymmetry across small basis pairs") {
        auto elements = basis_elements_up_to(13);
        for (const auto& a : elements)
            for (const auto& b : elements) {
                if (degree_of(a) + degree_of(b) > 16)
                    continue;
                CHECK((bracket(a, b) + bracket(b, a)).is_zero());
            }
    }

    TEST_CASE("jacobi identity across small basis triples") {
        auto elements = basis_elements_up_to(10);
        for (const auto& a : elements)
            for (const auto& b : elements)
                for (const auto& c : elements) {
                    if (degree_of(a) + degree_of(b) + degree_of(c) > 16)
                        continue;
                    auto total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                                 bracket(c, bracket(a, b));
                    CHECK(total.is_zero());
                }
    }

    TEST_CASE("degree-12 commutators have rank 2 over Q and mod 691") {
        auto b1 = bracket(LieElement::generator(3), LieElement::generator(9));
        auto b2 = bracket(LieElement::generator(5), LieElement::generator(7));
        std::vector<LieElement> elements{b1, b2};
        auto rank = rank_of(elements, 12, 691);
        CHECK(rank.over_q == 2);
        CHECK(rank.mod_p == 2);
    }

    TEST_CASE("rank_of degenerate and invariance cases") {
        std::vector<LieElement> empty;
        auto r0 = rank_of(empty, 8, 5);
        CHECK(r0.over_q == 0);
        CHECK(r0.mod_p == 0);

        auto b = bracket(LieElement::generator(3), LieElement::generator(5));
        std::vector<LieElement> scaled{b, b.scaled(2)};
        auto r1 = rank_of(scaled, 8, 7);
        CHECK(r1.over_q == 1);
        CHECK(r1.mod_p == 1);

        // unit row scaling and permutation leave both ranks unchanged
        auto e1 = LieElement::basis_word(LyndonWord({11}));
        auto e2 = LieElement::basis_word(LyndonWord({3, 3, 5}));
        std::vector<LieElement> v1{e1, e2};
        std::vector<LieElement> v2{e2.scaled(5), e1.scaled(3)};
        auto ra = rank_of(v1, 11, 7);
        auto rb = rank_of(v2, 11, 7);
        CHECK(ra.over_q == rb.over_q);
        CHECK(ra.mod_p == rb.mod_p);

        std::vector<LieElement> mixed{LieElement::generator(3), LieElement::generator(5)};
        CHECK_THROWS_AS(rank_of(mixed, 3, 5), DomainError);
    }

    TEST_CASE("mod-p rank can drop while the rational rank stays") {
        auto e1 = LieElement::basis_word(LyndonWord({11}));
        auto e2 = LieElement::basis_word(LyndonWord({3, 3, 5}));
        std::vector<LieElement> elements{e1, e1 + e2.scaled(7)};
        auto rank = rank_of(elements, 11, 7);
        CHECK(rank.over_q == 2);
        CHECK(rank.mod_p == 1);
    }
}
