// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pil/theory.hpp"

using pil::Integer;
using pil::VerificationOutcome;
using Outcomes = std::vector<VerificationOutcome>;

namespace {

constexpr std::uint64_t kSeed = 20240917;

void append(Outcomes& out, const Outcomes& more) { out.insert(out.end(), more.begin(), more.end()); }

Outcomes select(const Outcomes& all, bool proper) {
    Outcomes out;
    for (const auto& o : all) {
        if ((o.check.rfind("proper-", 0) == 0) == proper) out.push_back(o);
    }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcomes()> run;
};

}  // namespace

int main() {
    Outcomes ut2_all;
    Outcomes grassmann_all;

    const std::vector<Criterion> criteria{
        {1, "UT2 codimension table",
         [&] {
             for (const auto& [l, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 2}, {0, 0}}) {
                 append(ut2_all, pil::verify_ut2(Integer(l), Integer(m), 5));
             }
             return select(ut2_all, false);
         }},
        {2, "Grassmann codimension table",
         [&] {
             for (int l : {3, 5, 0}) append(grassmann_all, pil::verify_grassmann(Integer(l), 0, 4));
             return select(grassmann_all, false);
         }},
        {3, "proper/ordinary binomial identity",
         [] {
             Outcomes out;
             for (const auto& [l, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 2}, {0, 0}}) {
                 append(out, pil::verify_proper_ordinary(pil::ut2(Integer(l), Integer(m)), 5));
             }
             for (int l : {3, 0}) append(out, pil::verify_proper_ordinary(pil::grassmann(Integer(l), 6), 5));
             for (int m : {0, 4, 6, 9}) append(out, pil::verify_proper_ordinary(pil::cyclic_ring(Integer(m)), 5));
             return out;
         }},
        {4, "integral Specht lattices are torsion-free", [] { return pil::verify_specht_torsion_free(6); }},
        {5, "psi image and kernel", [] { return pil::verify_psi_lemma(6); }},
        {6, "Young's rule over Z, Z_2, Z_3",
         [] { return pil::verify_young(6, {Integer(0), Integer(2), Integer(3)}); }},
        {7, "ordinary/proper filtration factors",
         [] {
             Outcomes out;
             for (int n = 2; n <= 4; ++n) {
                 append(out, pil::drensky_filtration(pil::ut2(Integer(2), Integer(2)), n).outcomes);
                 append(out, pil::drensky_filtration(pil::grassmann(Integer(3), 4), n).outcomes);
             }
             return out;
         }},
        {8, "proper quotients as Specht modules",
         [&] {
             Outcomes out = select(ut2_all, true);
             for (int l : {3, 5, 0}) append(out, pil::verify_grassmann_proper(Integer(l), 5));
             return out;
         }},
        {9, "field coefficients",
         [] {
             Outcomes out = pil::verify_field_props(pil::ut2(Integer(0), Integer(0)), 4);
             for (int p : {2, 3, 5}) append(out, pil::verify_field_props(pil::ut2(Integer(p), Integer(p)), 4));
             return out;
         }},
        {10, "property suites", [] { return pil::verify_properties(kSeed, 100); }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcomes out;
        std::string error;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::size_t passed = 0;
        for (const auto& o : out) passed += o.pass ? 1 : 0;
        const bool ok = error.empty() && !out.empty() && passed == out.size();
        all = all && ok;
        std::printf("%s criterion %2d: %s (%zu/%zu checks, %.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.name, passed,
                    out.size(), secs);
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        for (const auto& o : out) {
            if (o.pass) continue;
            std::printf("    %s %s [%s]: expected %s, computed %s (witness %s)\n", o.claim.c_str(), o.check.c_str(),
                        o.subject.c_str(), o.expected.c_str(), o.computed.c_str(), o.witness.c_str());
        }
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
