#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "pil/abelian.hpp"
#include "pil/lattice.hpp"

using pil::AbelianInvariants;
using pil::HnfAccumulator;
using pil::IntMatrix;
using pil::Integer;
using pil::IntVector;
using pil::SubmoduleLattice;

namespace {

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
    const auto la = SubmoduleLattice::span(a);
    const auto lb = SubmoduleLattice::span(b);
    return la.contains(lb) && lb.contains(la);
}

std::vector<Integer> ints(std::initializer_list<long long> v) {
    std::vector<Integer> out;
    for (long long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("hnf golden values") {
    CHECK(pil::hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
    // Hand reduction: (2,4) - 2*(1,3) = (0,-2); reduce 3 against pivot 2.
    CHECK(pil::hnf(IntMatrix{{2, 4}, {1, 3}}) == IntMatrix{{1, 1}, {0, 2}});
    CHECK(SubmoduleLattice::span(IntMatrix{{2, 4}, {1, 3}}).basis() == IntMatrix{{1, 1}, {0, 2}});
    CHECK(pil::hnf(IntMatrix{{0, 0}, {0, 0}}).rows() == 0);
    CHECK(pil::hnf(IntMatrix{{4, 6, 2}, {6, 9, 3}}) == IntMatrix{{2, 3, 1}});
}

TEST_CASE("batch and streaming hnf agree on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        const IntMatrix m = oracle::random_matrix(rng, r, c, -9, 9);
        const IntMatrix h = pil::hnf(m);
        CHECK(h == SubmoduleLattice::span(m).basis());
        CHECK(pil::hnf(h) == h);
        CHECK(h.rows() == oracle::rank_q(m));
        CHECK(same_row_lattice(m, h));
        const auto l = SubmoduleLattice::from_hnf(h);
        for (std::size_t i = 0; i < m.rows(); ++i) CHECK(pil::is_zero(l.reduce(m.row(i))));
    }
}

TEST_CASE("square hnf determinant") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const IntMatrix m = oracle::random_matrix(rng, n, n, -20, 20);
        const mpz_class d = oracle::det(m);
        if (d == 0) continue;
        const IntMatrix h = pil::hnf(m);
        REQUIRE(h.rows() == n);
        Integer prod(1);
        for (std::size_t i = 0; i < n; ++i) prod *= h(i, i);
        CHECK(prod == Integer(mpz_class(abs(d))));
    }
}

TEST_CASE("modular accumulator matches explicit modulus rows") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const Integer n(static_cast<long long>(2 + rng() % 30));
        const IntMatrix m = oracle::random_matrix(rng, r, c, -40, 40);
        HnfAccumulator mod(c, n);
        HnfAccumulator plain(c);
        for (std::size_t i = 0; i < r; ++i) {
            mod.add(m.row(i));
            plain.add(m.row(i));
        }
        for (std::size_t j = 0; j < c; ++j) {
            IntVector e(c);
            e[j] = n;
            plain.add(e);
        }
        CHECK(mod.lattice() == plain.lattice());
        const IntMatrix probe = oracle::random_matrix(rng, 5, c, -60, 60);
        for (std::size_t i = 0; i < 5; ++i) CHECK(mod.contains(probe.row(i)) == plain.contains(probe.row(i)));
    }
}

TEST_CASE("tracking accumulator: solve and left kernel") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 4;
        const IntMatrix m = oracle::random_matrix(rng, r, c, -6, 6);
        HnfAccumulator acc(c, Integer(0), true);
        for (std::size_t i = 0; i < r; ++i) acc.add(m.row(i));
        CHECK(acc.kernel().size() == r - oracle::rank_q(m));
        for (const auto& k : acc.kernel()) {
            const IntVector y = pil::to_dense(k, r);
            CHECK(pil::is_zero(std::span<const Integer>(y) * m));
        }
        const IntMatrix y = oracle::random_matrix(rng, 1, r, -3, 3);
        const IntVector target = y.row(0) * m;
        const auto sol = acc.solve(target);
        REQUIRE(sol.has_value());
        CHECK(std::span<const Integer>(*sol) * m == target);
        // Kernel basis is saturated: its rank over Q matches, and SNF has unit factors.
        const IntMatrix kb = pil::left_kernel(m);
        CHECK(kb.rows() == r - oracle::rank_q(m));
        if (kb.rows() > 0) {
            for (const auto& d : pil::snf(kb).diagonal) CHECK(d == Integer(1));
        }
    }
}

TEST_CASE("snf golden values") {
    const auto s = pil::snf(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.diagonal == ints({1, 6}));
    CHECK(s.invariants.torsion() == ints({6}));
    CHECK(s.invariants.free_rank() == 0);

    const auto z = pil::snf(IntMatrix(2, 3));
    CHECK(z.diagonal == ints({0, 0}));
    CHECK(z.invariants.free_rank() == 3);
    CHECK(z.invariants.torsion().empty());

    CHECK(pil::snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diagonal == ints({2, 6, 12}));
}

TEST_CASE("snf invariants on random matrices") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const IntMatrix m = oracle::random_matrix(rng, r, c, -12, 12);
        const auto s = pil::snf(m);
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
            if (!s.diagonal[i].is_zero()) ++nonzero;
            if (i + 1 < s.diagonal.size()) CHECK(pil::divides(s.diagonal[i], s.diagonal[i + 1]));
        }
        CHECK(nonzero == oracle::rank_q(m));
        CHECK(s.invariants.free_rank() == c - nonzero);
        if (r == c) {
            Integer prod(1);
            for (const auto& d : s.diagonal) prod *= d;
            CHECK(prod == Integer(mpz_class(abs(oracle::det(m)))));
        }
        const auto t = pil::snf_with_transforms(m);
        CHECK(t.diagonal == s.diagonal);
        const IntMatrix d = t.u * m * t.v;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) CHECK(d(i, j) == (i == j ? t.diagonal[i] : Integer(0)));
        }
        CHECK(t.v * t.v_inv == IntMatrix::identity(c));
        CHECK(std::abs(oracle::det(t.u).get_si()) == 1);
    }
}

TEST_CASE("abelian invariants normalization and codimension counting") {
    const auto inv = AbelianInvariants::from_cyclic_orders(ints({4, 2, 0, 4}));
    CHECK(inv.torsion() == ints({2, 4, 4}));
    CHECK(inv.free_rank() == 1);
    CHECK(pil::codim_from_invariants(inv, Integer(4)) == 2);
    CHECK(pil::codim_from_invariants(inv, Integer(2)) == 1);
    CHECK(pil::codim_from_invariants(inv, Integer(0)) == 1);
    const auto six = AbelianInvariants::from_cyclic_orders(ints({6}));
    CHECK(pil::codim_from_invariants(six, Integer(2)) == 1);
    CHECK(pil::codim_from_invariants(six, Integer(3)) == 1);
    CHECK_THROWS_AS(pil::codim_from_invariants(six, Integer(6)), std::invalid_argument);
    CHECK_THROWS_AS(pil::codim_from_invariants(six, Integer(1)), std::invalid_argument);
    CHECK(AbelianInvariants::from_cyclic_orders(ints({2, 3})).torsion() == ints({6}));
    CHECK(AbelianInvariants::from_cyclic_orders(ints({12, 18, 1})).torsion() == ints({6, 36}));
    CHECK(inv.to_string() == "Z + Z_2 + Z_4^2");

    // The prime-power table reconstructs the torsion order.
    const auto g = AbelianInvariants::from_cyclic_orders(ints({6, 12, 8, 9, 0, 0}));
    Integer order(1);
    for (const auto& [q, count] : pil::codim_table(g)) {
        if (q.is_zero()) {
            CHECK(count == g.free_rank());
            continue;
        }
        for (std::size_t i = 0; i < count; ++i) order *= q;
    }
    CHECK(order == g.torsion_order());
}

TEST_CASE("image invariants golden values") {
    CHECK(pil::image_invariants(IntMatrix(3, 4), ints({0, 2, 5})).trivial());
    CHECK(pil::image_invariants(IntMatrix::identity(3), ints({2, 2, 2})).torsion() == ints({2, 2, 2}));
    const auto mixed = pil::image_invariants(IntMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, ints({0, 4, 6}));
    CHECK(mixed.free_rank() == 1);
    CHECK(mixed.torsion() == ints({2, 12}));
}

namespace {

// Subgroup of prod Z_{m_i} generated by the columns, enumerated explicitly.
std::set<std::vector<long>> generated_group(const IntMatrix& m, const std::vector<long>& mod) {
    std::set<std::vector<long>> seen{std::vector<long>(m.rows(), 0)};
    std::vector<std::vector<long>> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& x : frontier) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                auto y = x;
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    y[i] = ((y[i] + m(i, j).to_int64()) % mod[i] + mod[i]) % mod[i];
                }
                if (seen.insert(y).second) next.push_back(y);
            }
        }
        frontier.swap(next);
    }
    return seen;
}

}  // namespace

TEST_CASE("torsion image invariants match explicit group enumeration") {
    std::mt19937_64 rng(29);
    const long choices[] = {2, 3, 4, 6, 8, 9};
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
        const IntMatrix m = oracle::random_matrix(rng, r, c, -10, 10);
        std::vector<long> mod(r);
        std::vector<Integer> imod;
        for (auto& x : mod) {
            x = choices[rng() % 6];
            imod.emplace_back(x);
        }
        const auto inv = pil::image_invariants(m, imod);
        const auto group = generated_group(m, mod);
        CHECK(inv.free_rank() == 0);
        CHECK(inv.torsion_order() == Integer(static_cast<long long>(group.size())));
        for (long k = 1; k <= 72; ++k) {
            long killed = 0;
            for (const auto& x : group) {
                bool z = true;
                for (std::size_t i = 0; i < r; ++i) z = z && (x[i] * k) % mod[i] == 0;
                killed += z;
            }
            Integer expect(1);
            for (const auto& d : inv.torsion()) expect *= pil::gcd(d, Integer(k));
            CHECK(expect == Integer(killed));
        }
    }
}

TEST_CASE("kernel lattice of mixed systems") {
    std::mt19937_64 rng(31);
    const long choices[] = {0, 0, 2, 3, 4, 6};
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const IntMatrix m = oracle::random_matrix(rng, r, c, -5, 5);
        std::vector<Integer> mod;
        for (std::size_t i = 0; i < r; ++i) mod.emplace_back(choices[rng() % 6]);
        pil::ImageAccumulator acc(c);
        for (std::size_t i = 0; i < r; ++i) acc.add(m.row(i), mod[i]);
        const auto k = acc.kernel();
        CHECK(acc.invariants() == pil::snf(k.basis()).invariants);
        for (int probe = 0; probe < 40; ++probe) {
            const IntMatrix v = oracle::random_matrix(rng, 1, c, -6, 6);
            bool in = true;
            for (std::size_t i = 0; i < r; ++i) {
                Integer dot(0);
                for (std::size_t j = 0; j < c; ++j) dot.addmul(m(i, j), v(0, j));
                in = in && (mod[i].is_zero() ? dot.is_zero() : pil::divides(mod[i], dot));
            }
            CHECK(k.contains(v.row(0)) == in);
        }
        for (std::size_t b = 0; b < k.rank(); ++b) {
            for (std::size_t i = 0; i < r; ++i) {
                Integer dot(0);
                for (std::size_t j = 0; j < c; ++j) dot.addmul(m(i, j), k.basis()(b, j));
                CHECK((mod[i].is_zero() ? dot.is_zero() : pil::divides(mod[i], dot)));
            }
        }
    }
}

TEST_CASE("lattice quotients") {
    const auto z2 = SubmoduleLattice::full(2);
    CHECK(pil::lattice_quotient_invariants(z2, z2).trivial());
    CHECK(pil::lattice_quotient_invariants(z2, z2.scaled(Integer(2))).torsion() == ints({2, 2}));
    const auto q = pil::lattice_quotient_invariants(z2, SubmoduleLattice::span(IntMatrix{{2, 0}}));
    CHECK(q.free_rank() == 1);
    CHECK(q.torsion() == ints({2}));
    CHECK_THROWS_AS(pil::lattice_quotient_invariants(z2.scaled(Integer(2)), z2), std::invalid_argument);
}

TEST_CASE("field rank") {
    CHECK(pil::field_rank(IntMatrix::identity(4), Integer(0)) == 4);
    CHECK(pil::field_rank(IntMatrix::identity(4), Integer(5)) == 4);
    CHECK(pil::field_rank(IntMatrix{{2}}, Integer(2)) == 0);
    CHECK(pil::field_rank(IntMatrix{{2}}, Integer(0)) == 1);
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        const IntMatrix m = oracle::random_matrix(rng, r, c, -4, 4);
        const std::size_t q = pil::field_rank(m, Integer(0));
        CHECK(q == oracle::rank_q(m));
        for (long p : {2L, 3L, 5L}) {
            const std::size_t rp = pil::field_rank(m, Integer(p));
            CHECK(rp == oracle::rank_mod(m, p));
            CHECK(rp <= q);
        }
    }
}
