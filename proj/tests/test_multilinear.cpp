#include "doctest.h"

#include <random>

#include "pil/abelian.hpp"
#include "pil/multilinear.hpp"

using pil::CommutatorWord;
using pil::Integer;
using pil::IntVector;
using pil::MultilinearPoly;
using pil::Permutation;

namespace {

Permutation perm(std::vector<int> w) { return Permutation(std::move(w)); }

MultilinearPoly random_poly(std::mt19937_64& rng, int n, int terms) {
    MultilinearPoly f(n);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int i = 0; i < terms; ++i) {
        f.add_term(pil::permutation_unrank(n, rng() % pil::factorial(n)), Integer(coeff(rng)));
    }
    return f;
}

Permutation random_perm(std::mt19937_64& rng, int n) { return pil::permutation_unrank(n, rng() % pil::factorial(n)); }

}  // namespace

TEST_CASE("monomials and the symmetric group action") {
    const auto m = pil::monomial(perm({1, 2, 3}));
    CHECK(m.coefficient(perm({1, 2, 3})) == Integer(1));
    CHECK((m + m).coefficient(perm({1, 2, 3})) == Integer(2));
    CHECK(pil::act(Permutation::identity(3), m) == m);
    CHECK(pil::act(perm({2, 1}), pil::monomial(perm({1, 2}))) == pil::monomial(perm({2, 1})));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto f = random_poly(rng, n, 6);
        const auto s = random_perm(rng, n);
        const auto t = random_perm(rng, n);
        CHECK(pil::act(s, pil::act(s.inverse(), f)) == f);
        CHECK(pil::act(s * t, f) == pil::act(s, pil::act(t, f)));
        CHECK(pil::act_vector(s, f.to_vector()) == pil::act(s, f).to_vector());
    }
}

TEST_CASE("commutator expansion") {
    const auto c12 = pil::expand(CommutatorWord{{}, {{1, 2}}}, 2);
    CHECK(c12 == pil::monomial(perm({1, 2})) - pil::monomial(perm({2, 1})));

    // [[x1,x2],x3] = x1x2x3 - x2x1x3 - x3x1x2 + x3x2x1
    MultilinearPoly expect(3);
    expect.add_term(perm({1, 2, 3}), Integer(1));
    expect.add_term(perm({2, 1, 3}), Integer(-1));
    expect.add_term(perm({3, 1, 2}), Integer(-1));
    expect.add_term(perm({3, 2, 1}), Integer(1));
    CHECK(pil::expand(CommutatorWord{{}, {{1, 2, 3}}}, 3) == expect);

    CHECK(pil::expand(CommutatorWord{{1}, {{2, 3}}}, 3) ==
          pil::monomial(perm({1, 2, 3})) - pil::monomial(perm({1, 3, 2})));

    // Jacobi.
    const auto jac = pil::expand(CommutatorWord{{}, {{1, 2, 3}}}, 3) + pil::expand(CommutatorWord{{}, {{2, 3, 1}}}, 3) +
                     pil::expand(CommutatorWord{{}, {{3, 1, 2}}}, 3);
    CHECK(jac.is_zero());

    CHECK_THROWS_AS(pil::expand(CommutatorWord{{}, {{1}}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(pil::expand(CommutatorWord{{}, {{1, 1}}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(pil::expand(CommutatorWord{{2, 1}, {}}, 2), std::invalid_argument);
}

TEST_CASE("proper basis sizes follow the derangement numbers") {
    const std::size_t derangements[] = {1, 0, 1, 2, 9, 44, 265};
    for (int n = 0; n <= 6; ++n) CHECK(pil::proper_basis(n).size() == derangements[n]);
    CHECK(pil::proper_basis(1).elements().empty());
    CHECK(pil::proper_basis(2).elements().front() == CommutatorWord{{}, {{2, 1}}});

    // n! = sum_k C(n,k) |Gamma_{n-k}|
    for (int n = 1; n <= 6; ++n) {
        std::size_t total = 0, binom = 1;
        for (int k = 0; k <= n; ++k) {
            total += binom * pil::proper_basis(n - k).size();
            binom = binom * static_cast<std::size_t>(n - k) / static_cast<std::size_t>(k + 1);
        }
        CHECK(total == pil::factorial(n));
    }
}

TEST_CASE("proper lattice is saturated and equals the bracket-product lattice") {
    const auto& pb = pil::proper_basis(4);
    const auto s = pil::snf(pb.expansions());
    for (const auto& d : s.diagonal) {
        if (!d.is_zero()) CHECK(d == Integer(1));
    }
    CHECK(s.invariants.free_rank() == 24 - 9);
    CHECK(s.invariants.torsion().empty());

    const auto all = pil::bracket_product_candidates(4);
    const auto lat = pil::SubmoduleLattice::span([&] {
        std::vector<IntVector> rows;
        for (const auto& w : all) rows.push_back(pil::expand(w, 4).to_vector());
        return rows;
    }(), 24);
    CHECK(lat == pb.lattice());
}

TEST_CASE("proper lattice is stable under the symmetric group") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto& pb = pil::proper_basis(n);
        const auto& w = pb.elements()[rng() % pb.size()];
        const auto s = random_perm(rng, n);
        CHECK(pb.lattice().contains(pil::act(s, pil::expand(w, n)).to_vector()));
    }
}

namespace {

// Coordinates of f against the full basis {x_I * sigma(b)} by a single linear solve.
std::map<std::vector<int>, IntVector> oracle_decomposition(const MultilinearPoly& f) {
    const int n = f.degree();
    pil::HnfAccumulator acc(pil::factorial(n), Integer(0), true);
    std::vector<std::pair<std::vector<int>, std::size_t>> labels;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> prefix, free;
        for (int v = 1; v <= n; ++v) ((mask >> (v - 1)) & 1u ? prefix : free).push_back(v);
        const auto& pb = pil::proper_basis(static_cast<int>(free.size()));
        for (std::size_t b = 0; b < pb.size(); ++b) {
            MultilinearPoly g(n);
            IntVector e(pb.size());
            e[b] = Integer(1);
            const MultilinearPoly element = pb.combination(e);
            for (const auto& [s, c] : element.terms()) {
                std::vector<int> word = prefix;
                for (int v : s.word()) word.push_back(free[static_cast<std::size_t>(v - 1)]);
                g.add_term(Permutation(word), c);
            }
            acc.add(g.to_vector());
            labels.emplace_back(prefix, b);
        }
    }
    REQUIRE(acc.kernel().empty());
    REQUIRE(acc.inputs() == pil::factorial(n));
    const auto sol = acc.solve(f.to_vector());
    REQUIRE(sol.has_value());
    std::map<std::vector<int>, IntVector> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if ((*sol)[i].is_zero()) continue;
        const auto& [prefix, b] = labels[i];
        auto [it, _] = out.try_emplace(prefix, IntVector(pil::proper_basis(n - static_cast<int>(prefix.size())).size()));
        it->second[b] = (*sol)[i];
    }
    return out;
}

}  // namespace

TEST_CASE("decompose round-trips and matches the linear-solve oracle") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto f = random_poly(rng, n, 1 + static_cast<int>(rng() % 8));
        const auto parts = pil::decompose(f);
        CHECK(pil::recompose(parts, n) == f);
        std::map<std::vector<int>, IntVector> got;
        for (const auto& p : parts) got[p.prefix] = p.coords;
        CHECK(got == oracle_decomposition(f));
    }
}

TEST_CASE("decompose examples") {
    const auto id = pil::decompose(pil::monomial(Permutation::identity(4)));
    REQUIRE(id.size() == 1);
    CHECK(id[0].prefix == std::vector<int>{1, 2, 3, 4});
    CHECK(id[0].proper_part == MultilinearPoly::scalar(Integer(1)));

    const auto f = pil::monomial(perm({3, 1, 4, 2}));
    const auto parts = pil::decompose(f);
    CHECK(pil::recompose(parts, 4) == f);
    bool saw_full = false, saw_x1x4 = false;
    for (const auto& p : parts) {
        if (p.prefix == std::vector<int>{1, 2, 3, 4}) {
            saw_full = true;
            CHECK(p.proper_part == MultilinearPoly::scalar(Integer(1)));
        }
        if (p.prefix == std::vector<int>{1, 4}) {
            // x1 x4 [x3, x2]: on the free variables (2,3) this is [x2, x1].
            saw_x1x4 = true;
            CHECK(p.proper_part == pil::expand(CommutatorWord{{}, {{2, 1}}}, 2));
        }
    }
    CHECK(saw_full);
    CHECK(saw_x1x4);
}
