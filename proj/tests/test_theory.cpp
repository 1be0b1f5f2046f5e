#include "doctest.h"

#include "pil/theory.hpp"

using pil::AbelianInvariants;
using pil::Integer;
using pil::Partition;
using pil::VerificationOutcome;

namespace {

AbelianInvariants orders(std::initializer_list<long long> list) {
    std::vector<Integer> v;
    for (long long x : list) v.emplace_back(x);
    return AbelianInvariants::from_cyclic_orders(v);
}

const VerificationOutcome* find(const std::vector<VerificationOutcome>& v, const std::string& check,
                                const std::string& subject) {
    for (const auto& o : v) {
        if (o.check == check && o.subject == subject) return &o;
    }
    return nullptr;
}

void require_all_pass(const std::vector<VerificationOutcome>& v) {
    for (const auto& o : v) {
        INFO(o.claim << " " << o.check << " " << o.subject << ": expected " << o.expected << ", got " << o.computed);
        CHECK(o.pass);
    }
}

pil::RingModel zero_product_ring() {
    return pil::RingModel("zero:2", {Integer(2)}, {Integer(0)}, {{Integer(1)}}, std::nullopt);
}

}  // namespace

TEST_CASE("hook dimension") {
    CHECK(pil::hook_dimension(Partition({3, 2})) == 5);
    CHECK(pil::hook_dimension(Partition({2, 2, 1, 1})) == 9);
    CHECK(pil::hook_dimension(Partition({4})) == 1);
    CHECK(pil::hook_dimension(Partition({3, 2, 1})) == 16);
}

TEST_CASE("consequences of the commutator") {
    const auto comm = pil::ut2_identities(Integer(0), Integer(1)).back();
    CHECK(comm.degree() == 2);
    // P_n modulo commutativity is Z
    for (int n = 2; n <= 4; ++n) {
        const auto lat = pil::consequence_lattice({comm}, n);
        CHECK(lat.rank() == pil::factorial(n) - 1);
        CHECK(pil::lattice_quotient_invariants(pil::SubmoduleLattice::full(pil::factorial(n)), lat) ==
              AbelianInvariants::free(1));
    }
    // l * x generates l * P_n
    const auto scal = pil::consequence_lattice({pil::MultilinearPoly::monomial(pil::Permutation::identity(1), Integer(6))}, 3);
    CHECK(pil::lattice_quotient_invariants(pil::SubmoduleLattice::full(6), scal) == AbelianInvariants::power(Integer(6), 6));
    // degree above n contributes nothing
    CHECK(pil::consequence_lattice({pil::grassmann_lemma_polynomial()}, 3).rank() == 0);
}

TEST_CASE("proper to ordinary binomial identity") {
    SUBCASE("ut2(2,2)") {
        const auto v = pil::verify_proper_ordinary(pil::ut2(Integer(2), Integer(2)), 4);
        require_all_pass(v);
        const auto* o = find(v, "binomial-sum", "ut2:2,2 n=4");
        REQUIRE(o);
        CHECK(o->computed == "{2: 18}");
    }
    SUBCASE("grassmann(3,5)") {
        const auto v = pil::verify_proper_ordinary(pil::grassmann(Integer(3), 5), 4);
        require_all_pass(v);
        CHECK(find(v, "binomial-sum", "grassmann:3,5 n=4")->computed == "{3: 8}");
    }
    SUBCASE("cyclic Z_4") {
        const auto v = pil::verify_proper_ordinary(pil::cyclic_ring(Integer(4)), 4);
        require_all_pass(v);
        for (const auto& o : v) CHECK(o.computed == "{4: 1}");
    }
    SUBCASE("non-unital rings are rejected") {
        CHECK_THROWS_AS(pil::verify_proper_ordinary(zero_product_ring(), 3), std::invalid_argument);
        CHECK_THROWS_AS(pil::drensky_filtration(zero_product_ring(), 3), std::invalid_argument);
    }
}

TEST_CASE("filtration factors") {
    SUBCASE("ut2(2,2), n = 3") {
        const auto d = pil::drensky_filtration(pil::ut2(Integer(2), Integer(2)), 3);
        require_all_pass(d.outcomes);
        REQUIRE(d.factors.size() == 3);
        CHECK(d.chain.size() == 4);
        CHECK(d.factors[0].label == "M0/M2");
        CHECK(d.factors[0].invariants == orders({2}));
        CHECK(d.factors[1].invariants == orders({2, 2, 2}));
        CHECK(d.factors[2].invariants == orders({2, 2}));
        CHECK(d.factors[0].character.modular == std::vector<Integer>(3, Integer(1)));
    }
    SUBCASE("grassmann(3,4), n = 3") {
        const auto d = pil::drensky_filtration(pil::grassmann(Integer(3), 4), 3);
        require_all_pass(d.outcomes);
        CHECK(d.factors[0].invariants == orders({3}));
        CHECK(d.factors[1].invariants == orders({3, 3, 3}));
        CHECK(d.factors[2].invariants.trivial());
    }
    SUBCASE("commutative rings have M_2 = Id") {
        const auto d = pil::drensky_filtration(pil::cyclic_ring(Integer(5)), 4);
        require_all_pass(d.outcomes);
        CHECK(d.chain[1] == d.chain.back());
        CHECK(d.factors[0].invariants == orders({5}));
    }
    SUBCASE("integral ut2, n = 4") {
        const auto d = pil::drensky_filtration(pil::ut2(Integer(0), Integer(0)), 4);
        require_all_pass(d.outcomes);
        CHECK(d.factors[0].character.rational == std::vector<Integer>(5, Integer(1)));
    }
}

TEST_CASE("ut2 suite") {
    SUBCASE("(2,2)") {
        const auto v = pil::verify_ut2(Integer(2), Integer(2), 5);
        require_all_pass(v);
        CHECK(find(v, "codim", "ut2:2,2 n=5")->computed == AbelianInvariants::power(Integer(2), 50).to_string());
    }
    SUBCASE("(0,0)") {
        const auto v = pil::verify_ut2(Integer(0), Integer(0), 3);
        require_all_pass(v);
        CHECK(find(v, "codim", "ut2:0,0 n=3")->computed == AbelianInvariants::free(6).to_string());
    }
    SUBCASE("(4,2)") {
        const auto v = pil::verify_ut2(Integer(4), Integer(2), 3);
        require_all_pass(v);
        CHECK(find(v, "codim", "ut2:4,2 n=2")->computed == orders({4, 2}).to_string());
    }
    CHECK_THROWS_AS(pil::verify_ut2(Integer(3), Integer(2), 2), std::invalid_argument);
}

TEST_CASE("grassmann suite") {
    SUBCASE("ell = 3") {
        const auto v = pil::verify_grassmann(Integer(3), 0, 4);
        require_all_pass(v);
        CHECK(find(v, "codim", "grassmann:3,5 n=4")->computed == AbelianInvariants::power(Integer(3), 8).to_string());
    }
    SUBCASE("ell = 0, K = 5") {
        const auto v = pil::verify_grassmann(Integer(0), 5, 3);
        require_all_pass(v);
        CHECK(find(v, "codim", "grassmann:0,5 n=3")->computed == AbelianInvariants::free(4).to_string());
    }
    CHECK_THROWS_AS(pil::verify_grassmann(Integer(4), 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(pil::verify_grassmann(Integer(3), 3, 3), std::invalid_argument);
}

TEST_CASE("field coefficients") {
    const auto z = pil::verify_field_props(pil::ut2(Integer(0), Integer(0)), 3);
    require_all_pass(z);
    CHECK(find(z, "rank-over-Q", "ut2:0,0 n=3")->computed == "6");
    require_all_pass(pil::verify_field_props(pil::ut2(Integer(3), Integer(3)), 4));
    const auto two = pil::verify_field_props(pil::ut2(Integer(2), Integer(2)), 4);
    require_all_pass(two);
    CHECK(find(two, "off-characteristic", "ut2:2,2 n=4")->computed == "{}");
    CHECK_THROWS_AS(pil::verify_field_props(pil::ut2(Integer(4), Integer(2)), 2), std::invalid_argument);
    CHECK_THROWS_AS(pil::verify_field_props(pil::ut2(Integer(4), Integer(4)), 2), std::invalid_argument);
}

TEST_CASE("specht suites") {
    require_all_pass(pil::verify_specht_torsion_free(5));
    require_all_pass(pil::verify_psi_lemma(5));
    require_all_pass(pil::verify_young(5, {Integer(0), Integer(2), Integer(3)}));
    const auto t = pil::verify_specht_torsion_free(3);
    CHECK(t.back().computed == t.back().expected);
}

TEST_CASE("property suite") {
    const auto v = pil::verify_properties(7, 40);
    CHECK(v.size() == 5);
    require_all_pass(v);
}

TEST_CASE("outcome bookkeeping") {
    std::vector<VerificationOutcome> v(2);
    v[0].pass = true;
    CHECK_FALSE(pil::all_pass(v));
    v[1].pass = true;
    CHECK(pil::all_pass(v));
    std::map<Integer, std::size_t> m{{Integer(0), 2}, {Integer(4), 1}};
    CHECK(pil::to_string(m) == "{0: 2, 4: 1}");
    CHECK(pil::claim_ids().size() == 9);
}
