#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "pil/report.hpp"
#include "pil/ring_spec.hpp"

using pil::Integer;

TEST_CASE("ring spec grammar") {
    CHECK(pil::parse_ring_spec("cyclic:4").label() == "cyclic:4");
    CHECK(pil::parse_ring_spec(" ut2: 2 , 2 ").label() == "ut2:2,2");
    CHECK(pil::parse_ring_spec("grassmann:3,5").rank() == 32);
    const auto s = pil::parse_ring_spec("sum:[cyclic:2, ut2:3,3, sum:[cyclic:5,grassmann:3,2]]");
    CHECK(s.rank() == 1 + 3 + 1 + 4);
    CHECK(s.unit().has_value());

    for (const char* bad : {"", "cyclic", "cyclic:", "cyclic:x", "ut2:2", "ut2:2,2,2", "foo:1", "sum:cyclic:2",
                            "sum:[cyclic:2", "grassmann:4,3", "ut2:3,2", "@/nonexistent/ring.json", "{not json"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(pil::parse_ring_spec(bad), std::invalid_argument);
    }
}

TEST_CASE("ring spec from JSON") {
    const auto r = pil::ut2(Integer(4), Integer(2));
    const std::string inline_json = r.to_json().dump();
    CHECK(pil::parse_ring_spec(inline_json).to_json() == r.to_json());

    const std::string path = "ring_spec_test.json";
    {
        std::ofstream f(path);
        nlohmann::json doc = pil::report_document("ring export");
        doc["ring"] = r.to_json();
        f << doc.dump();
    }
    CHECK(pil::parse_ring_spec("@" + path).to_json() == r.to_json());
    std::remove(path.c_str());
}

TEST_CASE("report serialization") {
    const auto inv = pil::AbelianInvariants::from_cyclic_orders(std::vector<Integer>{Integer(0), Integer(2), Integer(4)});
    CHECK(pil::to_json(inv) == nlohmann::json::parse(R"({"free_rank": 1, "torsion": [2, 4]})"));

    const Integer big("123456789012345678901234567890");
    const auto j = pil::to_json(pil::AbelianInvariants::power(big, 1));
    CHECK(j["torsion"][0] == "123456789012345678901234567890");

    const auto rep = pil::ordinary_codim(pil::ut2(Integer(2), Integer(2)), 3);
    const auto a = pil::dump_report(pil::to_json(rep, false));
    const auto b = pil::dump_report(pil::to_json(pil::ordinary_codim(pil::ut2(Integer(2), Integer(2)), 3), false));
    CHECK(a == b);
    CHECK(a.find("seconds") == std::string::npos);
    CHECK(pil::to_json(rep, true).contains("seconds"));

    pil::VerificationOutcome o{"young", "labels", "n=3", "a", "b", false, "n=3"};
    CHECK(pil::to_json(o)["witness"] == "n=3");
    o.pass = true;
    CHECK_FALSE(pil::to_json(o).contains("witness"));
}
