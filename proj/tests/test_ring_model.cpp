#include "doctest.h"

#include <random>
#include <stdexcept>

#include "pil/ring_model.hpp"

using pil::CommutatorWord;
using pil::Integer;
using pil::IntVector;
using pil::RingElement;
using pil::RingModel;

namespace {

RingElement element(const RingModel& r, std::vector<long long> c) {
    IntVector v;
    for (auto x : c) v.emplace_back(x);
    return RingElement(r, std::move(v));
}

RingElement random_element(const RingModel& r, std::mt19937_64& rng) {
    IntVector v(r.rank());
    for (auto& x : v) x = Integer(static_cast<long long>(rng() % 11) - 5);
    return RingElement(r, std::move(v));
}

// Sign of e_S e_T by sorting the concatenated index word with bubble sort.
int grassmann_sign_oracle(unsigned s, unsigned t, int K) {
    std::vector<int> word;
    for (int i = 0; i < K; ++i) if ((s >> i) & 1u) word.push_back(i);
    for (int i = 0; i < K; ++i) if ((t >> i) & 1u) word.push_back(i);
    int swaps = 0;
    for (std::size_t a = 0; a < word.size(); ++a) {
        for (std::size_t b = 0; b + 1 < word.size() - a; ++b) {
            if (word[b] > word[b + 1]) {
                std::swap(word[b], word[b + 1]);
                ++swaps;
            }
        }
    }
    return swaps % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("cyclic rings") {
    const auto z = pil::cyclic_ring(Integer(0));
    CHECK(z.characteristic() == Integer(0));
    const auto z4 = pil::cyclic_ring(Integer(4));
    CHECK(z4.characteristic() == Integer(4));
    const auto two = element(z4, {2});
    CHECK((two * two).is_zero());
    CHECK(element(z4, {-1}).coords() == IntVector{Integer(3)});
    CHECK(z4.label() == "cyclic:4");
}

TEST_CASE("ut2 matrix units") {
    const auto r = pil::ut2(Integer(2), Integer(2));
    CHECK(r.characteristic() == Integer(2));
    const auto e11 = RingElement::basis(r, 0);
    const auto e22 = RingElement::basis(r, 1);
    const auto e12 = RingElement::basis(r, 2);
    CHECK(e11 * e12 == e12);
    CHECK(e12 * e22 == e12);
    CHECK((e12 * e12).is_zero());
    CHECK((e22 * e12).is_zero());
    CHECK((e12 * e11).is_zero());
    CHECK(pil::commutator(e11, e12) == e12);

    const auto x = pil::expand(CommutatorWord{{}, {{1, 2}}}, 2);
    const std::vector<RingElement> args{e11, e12};
    CHECK(pil::evaluate(x, args) == e12);

    // [R,R] lies in the span of e12
    for (const auto* m : {&r}) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                const auto c = pil::commutator(RingElement::basis(*m, i), RingElement::basis(*m, j));
                CHECK(c.coords()[0].is_zero());
                CHECK(c.coords()[1].is_zero());
            }
        }
    }

    const auto r42 = pil::ut2(Integer(4), Integer(2));
    const auto e11b = RingElement::basis(r42, 0);
    CHECK_FALSE((Integer(2) * e11b).is_zero());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK((Integer(2) * pil::commutator(RingElement::basis(r42, i), RingElement::basis(r42, j))).is_zero());
        }
    }

    CHECK_THROWS_AS(pil::ut2(Integer(4), Integer(3)), std::invalid_argument);
    CHECK_THROWS_AS(pil::ut2(Integer(4), Integer(0)), std::invalid_argument);
    CHECK_NOTHROW(pil::ut2(Integer(0), Integer(5)));
    CHECK_NOTHROW(pil::ut2(Integer(0), Integer(0)));
}

TEST_CASE("grassmann relations and signs") {
    const auto g = pil::grassmann(Integer(3), 4);
    const auto e1 = RingElement::basis(g, 1);
    const auto e2 = RingElement::basis(g, 2);
    const auto e12 = RingElement::basis(g, 3);
    CHECK(e1 * e2 == e12);
    CHECK(e2 * e1 == Integer(-1) * e12);
    CHECK((e1 * e1).is_zero());

    for (unsigned s = 0; s < 16; ++s) {
        for (unsigned t = 0; t < 16; ++t) {
            const auto a = RingElement::basis(g, s);
            const auto b = RingElement::basis(g, t);
            if (s & t) {
                CHECK((a * b).is_zero());
                continue;
            }
            const int expect = grassmann_sign_oracle(s, t, 4);
            CHECK(a * b == Integer(expect) * RingElement::basis(g, s | t));
            const int sign = (std::popcount(s) * std::popcount(t)) % 2 ? -1 : 1;
            CHECK(a * b == Integer(sign) * (b * a));
        }
    }

    // [x1,x2][x3,x4] at e1..e4 is 4 e_1234 = e_1234 mod 3
    const auto f = pil::expand(CommutatorWord{{}, {{1, 2}, {3, 4}}}, 4);
    const std::vector<RingElement> args{RingElement::basis(g, 1), RingElement::basis(g, 2),
                                        RingElement::basis(g, 4), RingElement::basis(g, 8)};
    CHECK(pil::evaluate(f, args) == RingElement::basis(g, 15));

    // [x,y,z] vanishes on basis triples
    const auto g4 = pil::grassmann(Integer(3), 4);
    const auto t3 = pil::expand(CommutatorWord{{}, {{1, 2, 3}}}, 3);
    for (std::size_t a = 0; a < 16; ++a) {
        for (std::size_t b = 0; b < 16; ++b) {
            for (std::size_t c = 0; c < 16; ++c) {
                const std::vector<RingElement> xs{RingElement::basis(g4, a), RingElement::basis(g4, b),
                                                  RingElement::basis(g4, c)};
                CHECK(pil::evaluate(t3, xs).is_zero());
            }
        }
    }

    CHECK_THROWS_AS(pil::grassmann(Integer(4), 3), std::invalid_argument);
    CHECK_THROWS_AS(pil::grassmann(Integer(3), 0), std::invalid_argument);
}

TEST_CASE("direct sums") {
    const auto s = pil::direct_sum({pil::cyclic_ring(Integer(2)), pil::cyclic_ring(Integer(4))});
    CHECK(s.characteristic() == Integer(4));
    CHECK(s.label() == "sum:[cyclic:2,cyclic:4]");
    const auto a = pil::ut2(Integer(2), Integer(2));
    const auto single = pil::direct_sum({a});
    CHECK(single.to_json()["mult_table"] == a.to_json()["mult_table"]);
    CHECK(single.unit() == a.unit());
    const auto nonunital = pil::direct_sum(
        {a, RingModel("zero", {Integer(2)}, {Integer(0)}, {IntVector{Integer(1)}}, std::nullopt)});
    CHECK_FALSE(nonunital.unit().has_value());
    CHECK_THROWS(pil::direct_sum({}));
}

TEST_CASE("model validation") {
    // non-associative: e*e = 2e with e of infinite order is fine, but a table with e0 e0 = e1, e1 e0 = 0, e0 e1 = e0 is not
    std::vector<Integer> t(8);
    t[(0 * 2 + 0) * 2 + 1] = Integer(1);
    t[(0 * 2 + 1) * 2 + 0] = Integer(1);
    CHECK_THROWS_AS(RingModel("bad", {Integer(0), Integer(0)}, t, {IntVector{Integer(1), Integer(0)}, IntVector{Integer(0), Integer(1)}},
                              std::nullopt),
                    std::invalid_argument);
    // generators must span
    CHECK_THROWS_AS(RingModel("bad", {Integer(0)}, {Integer(0)}, {IntVector{Integer(2)}}, std::nullopt),
                    std::invalid_argument);
    // torsion into free
    CHECK_THROWS_AS(RingModel("bad", {Integer(2), Integer(0)},
                              {Integer(0), Integer(1), Integer(0), Integer(0), Integer(0), Integer(0), Integer(0), Integer(0)},
                              {IntVector{Integer(1), Integer(0)}, IntVector{Integer(0), Integer(1)}}, std::nullopt),
                    std::invalid_argument);
    // wrong unit
    CHECK_THROWS_AS(RingModel("bad", {Integer(0)}, {Integer(0)}, {IntVector{Integer(1)}}, IntVector{Integer(1)}),
                    std::invalid_argument);
}

TEST_CASE("evaluation is multilinear") {
    std::mt19937_64 rng(7);
    const std::vector<RingModel> models{pil::ut2(Integer(4), Integer(2)), pil::grassmann(Integer(3), 4),
                                        pil::ut2(Integer(0), Integer(0)), pil::cyclic_ring(Integer(6))};
    for (const auto& r : models) {
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            pil::MultilinearPoly f(n);
            for (int k = 0; k < 4; ++k) {
                f.add_term(pil::permutation_unrank(n, rng() % pil::factorial(n)),
                           Integer(static_cast<long long>(rng() % 7) - 3));
            }
            std::vector<RingElement> xs, ys, zs;
            for (int i = 0; i < n; ++i) xs.push_back(random_element(r, rng));
            ys = xs;
            zs = xs;
            const std::size_t slot = rng() % static_cast<std::size_t>(n);
            const auto b = random_element(r, rng);
            ys[slot] = b;
            zs[slot] = xs[slot] + b;
            CHECK(pil::evaluate(f, zs) == pil::evaluate(f, xs) + pil::evaluate(f, ys));
        }
    }
    const auto r = pil::ut2(Integer(2), Integer(2));
    const auto anti = pil::expand(CommutatorWord{{}, {{1, 2}}}, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_element(r, rng);
        const std::vector<RingElement> aa{a, a};
        CHECK(pil::evaluate(anti, aa).is_zero());
    }
}

TEST_CASE("json round trip") {
    for (const auto& r : {pil::ut2(Integer(4), Integer(2)), pil::grassmann(Integer(0), 3), pil::cyclic_ring(Integer(0)),
                          pil::direct_sum({pil::cyclic_ring(Integer(2)), pil::cyclic_ring(Integer(4))})}) {
        const auto j = r.to_json();
        const auto back = RingModel::from_json(nlohmann::json::parse(j.dump()));
        CHECK(back.to_json().dump() == j.dump());
        CHECK(back.label() == r.label());
    }
    const Integer big("123456789012345678901234567890");
    CHECK(pil::integer_to_json(big).is_string());
    CHECK(pil::integer_from_json(pil::integer_to_json(big)) == big);
    CHECK(pil::integer_to_json(Integer(5)).is_number_integer());
    CHECK(pil::cyclic_ring(big).to_json()["moduli"][0] == "123456789012345678901234567890");
}
