#include "pil/report.hpp"

namespace pil {

namespace {

nlohmann::json integers(const std::vector<Integer>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(integer_to_json(x));
    return a;
}

}  // namespace

nlohmann::json to_json(const AbelianInvariants& inv) {
    return {{"free_rank", inv.free_rank()}, {"torsion", integers(inv.torsion())}};
}

nlohmann::json to_json(const std::map<Integer, std::size_t>& per_q) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [q, c] : per_q) a.push_back({{"q", integer_to_json(q)}, {"count", c}});
    return a;
}

nlohmann::json to_json(const QuotientCharacter& c, int n) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& p : partitions(n)) classes.push_back(p.to_string());
    nlohmann::json j{{"classes", classes}, {"rational", integers(c.rational)}};
    if (!c.torsion_modulus.is_zero()) {
        j["torsion_modulus"] = integer_to_json(c.torsion_modulus);
        j["modular"] = integers(c.modular);
    }
    return j;
}

nlohmann::json to_json(const CodimReport& r, bool timing) {
    nlohmann::json j{{"ring", r.ring},
                     {"n", r.n},
                     {"ordinary", to_json(r.ordinary)},
                     {"ordinary_per_q", to_json(r.ordinary_per_q)},
                     {"rows", r.rows}};
    if (r.n >= 2) {
        j["proper"] = to_json(r.proper);
        j["proper_per_q"] = to_json(r.proper_per_q);
    }
    if (timing) j["seconds"] = r.seconds;
    return j;
}

nlohmann::json to_json(const FiltrationReport& r) {
    const int n = r.pair.mu().size();
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : r.factors) {
        nlohmann::json x{{"factor_label", f.label.to_string()}, {"invariants", to_json(f.invariants)}, {"rank", f.rank}};
        if (f.character) x["character"] = to_json(*f.character, n);
        factors.push_back(std::move(x));
    }
    return {{"lambda", r.pair.lambda().to_string()},
            {"mu", r.pair.mu().to_string()},
            {"modulus", integer_to_json(r.modulus)},
            {"factors", factors}};
}

nlohmann::json to_json(const VerificationOutcome& o) {
    nlohmann::json j{{"claim", o.claim},       {"check", o.check},       {"subject", o.subject},
                     {"expected", o.expected}, {"computed", o.computed}, {"pass", o.pass}};
    if (!o.pass) j["witness"] = o.witness;
    return j;
}

nlohmann::json to_json(const DrenskyFiltration& d) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : d.factors) {
        factors.push_back({{"label", f.label},
                           {"t", f.t},
                           {"invariants", to_json(f.invariants)},
                           {"expected_invariants", to_json(f.expected_invariants)},
                           {"character", to_json(f.character, d.n)},
                           {"expected_character", to_json(f.expected_character, d.n)}});
    }
    return {{"ring", d.ring}, {"n", d.n}, {"characteristic", integer_to_json(d.characteristic)}, {"factors", factors}};
}

nlohmann::json report_document(const std::string& command) {
    return {{"schema", kReportSchema}, {"command", command}};
}

std::string dump_report(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace pil
