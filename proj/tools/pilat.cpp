#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pil/codim.hpp"
#include "pil/report.hpp"
#include "pil/ring_spec.hpp"
#include "pil/specht.hpp"
#include "pil/theory.hpp"

namespace {

using nlohmann::json;
using pil::Integer;

constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitFailed = 3;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument("");
            return {v, v};
        }
        const std::string a = text.substr(0, dots);
        const std::string b = text.substr(dots + 2);
        Range r;
        r.lo = std::stoi(a, &used);
        if (used != a.size()) throw std::invalid_argument("");
        r.hi = std::stoi(b, &used);
        if (used != b.size()) throw std::invalid_argument("");
        if (r.lo > r.hi) throw std::invalid_argument("");
        return r;
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad degree range '" + text + "' (expected n or a..b)");
    }
}

std::vector<Integer> parse_integers(const std::string& text) {
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("bad integer list '" + text + "'");
        out.emplace_back(std::string_view(item));
    }
    return out;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + out);
    f << text;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

// ---------------------------------------------------------------------------

struct CodimConfig {
    std::string ring;
    std::string n = "2..4";
    bool proper = false;
    std::string q;
    std::string format = "json";
    std::string out;
    std::size_t row_budget = pil::kDefaultRowBudget;
    bool timing = false;
};

int cmd_codim(const CodimConfig& c) {
    const pil::RingModel r = pil::parse_ring_spec(c.ring);
    const Range range = parse_range(c.n);
    if (range.lo < 0 || range.hi > pil::kMaxCodimDegree) {
        throw std::invalid_argument("degree out of range 0.." + std::to_string(pil::kMaxCodimDegree));
    }
    std::optional<std::vector<Integer>> filter;
    if (!c.q.empty()) filter = parse_integers(c.q);
    auto keep = [&](std::map<Integer, std::size_t> m) {
        if (!filter) return m;
        std::map<Integer, std::size_t> out;
        for (const auto& q : *filter) {
            const auto it = m.find(q);
            out[q] = it == m.end() ? 0 : it->second;
        }
        return out;
    };

    pil::EvaluationOptions opts;
    opts.row_budget = c.row_budget;
    opts.proper = c.proper;
    std::vector<pil::CodimReport> reports;
    for (int n = range.lo; n <= range.hi; ++n) {
        auto rep = pil::ordinary_codim(r, n, opts);
        rep.ordinary_per_q = keep(rep.ordinary_per_q);
        rep.proper_per_q = keep(rep.proper_per_q);
        reports.push_back(std::move(rep));
    }

    if (c.format == "csv") {
        std::string text = "ring,n,kind,q,count";
        if (c.timing) text += ",seconds";
        text += "\n";
        for (const auto& rep : reports) {
            auto rows = [&](const char* kind, const std::map<Integer, std::size_t>& m) {
                for (const auto& [q, count] : m) {
                    text += csv_field(rep.ring) + "," + std::to_string(rep.n) + "," + kind + "," + q.to_string() + "," +
                            std::to_string(count);
                    if (c.timing) text += "," + std::to_string(rep.seconds);
                    text += "\n";
                }
            };
            rows("ordinary", rep.ordinary_per_q);
            if (c.proper && rep.n >= 2) rows("proper", rep.proper_per_q);
        }
        emit(text, c.out);
        return 0;
    }

    json doc = pil::report_document("codim");
    doc["ring"] = r.label();
    json arr = json::array();
    for (const auto& rep : reports) {
        json j = pil::to_json(rep, c.timing);
        if (!c.proper) {
            j.erase("proper");
            j.erase("proper_per_q");
        }
        arr.push_back(std::move(j));
    }
    doc["reports"] = std::move(arr);
    emit(pil::dump_report(doc), c.out);
    return 0;
}

// ---------------------------------------------------------------------------

struct VerifyConfig {
    std::string claim;
    int n_max = 0;
    std::string ring;
    std::string ell;
    std::string m;
    int K = 0;
    std::string moduli = "0,2,3";
    std::uint64_t seed = 1;
    int trials = 100;
    std::string format = "json";
    std::string out;
    std::size_t row_budget = pil::kDefaultRowBudget;
};

int default_n_max(const std::string& claim) {
    if (claim == "grassmann.codim" || claim == "drensky" || claim == "field-props") return 4;
    if (claim == "young" || claim == "specht.torsionfree" || claim == "specht.psi") return 6;
    return 5;
}

int cmd_verify(const VerifyConfig& c) {
    const auto& ids = pil::claim_ids();
    if (std::find(ids.begin(), ids.end(), c.claim) == ids.end()) {
        std::string known;
        for (const auto& id : ids) known += (known.empty() ? "" : ", ") + id;
        throw std::invalid_argument("unknown claim '" + c.claim + "' (known: " + known + ")");
    }
    const int n_max = c.n_max > 0 ? c.n_max : default_n_max(c.claim);
    pil::EvaluationOptions opts;
    opts.row_budget = c.row_budget;
    auto need_ring = [&] {
        if (c.ring.empty()) throw std::invalid_argument("claim '" + c.claim + "' needs --ring");
        return pil::parse_ring_spec(c.ring);
    };
    auto integer_or = [](const std::string& s, long long fallback) {
        return s.empty() ? Integer(fallback) : Integer(std::string_view(s));
    };

    json doc = pil::report_document("verify");
    doc["claim"] = c.claim;
    doc["n_max"] = n_max;
    std::vector<pil::VerificationOutcome> outcomes;
    if (c.claim == "ut2.codim") {
        const Integer ell = integer_or(c.ell, 2);
        const Integer m = integer_or(c.m, 2);
        outcomes = pil::verify_ut2(ell, m, n_max, opts);
    } else if (c.claim == "grassmann.codim") {
        outcomes = pil::verify_grassmann(integer_or(c.ell, 3), c.K, n_max, opts);
    } else if (c.claim == "proper-ordinary") {
        const auto r = need_ring();
        doc["ring"] = r.label();
        outcomes = pil::verify_proper_ordinary(r, n_max, opts);
    } else if (c.claim == "drensky") {
        const auto r = need_ring();
        doc["ring"] = r.label();
        json filtrations = json::array();
        for (int n = 2; n <= n_max; ++n) {
            auto d = pil::drensky_filtration(r, n, opts);
            filtrations.push_back(pil::to_json(d));
            outcomes.insert(outcomes.end(), d.outcomes.begin(), d.outcomes.end());
        }
        doc["filtrations"] = std::move(filtrations);
    } else if (c.claim == "field-props") {
        const auto r = need_ring();
        doc["ring"] = r.label();
        outcomes = pil::verify_field_props(r, n_max, opts);
    } else if (c.claim == "young") {
        outcomes = pil::verify_young(n_max, parse_integers(c.moduli));
    } else if (c.claim == "specht.torsionfree") {
        outcomes = pil::verify_specht_torsion_free(n_max);
    } else if (c.claim == "specht.psi") {
        outcomes = pil::verify_psi_lemma(n_max);
    } else if (c.claim == "properties") {
        doc["seed"] = c.seed;
        outcomes = pil::verify_properties(c.seed, c.trials);
    }

    const bool pass = pil::all_pass(outcomes);
    if (c.format == "csv") {
        std::string text = "claim,check,subject,expected,computed,pass,witness\n";
        for (const auto& o : outcomes) {
            text += csv_field(o.claim) + "," + csv_field(o.check) + "," + csv_field(o.subject) + "," +
                    csv_field(o.expected) + "," + csv_field(o.computed) + "," + (o.pass ? "true" : "false") + "," +
                    csv_field(o.witness) + "\n";
        }
        emit(text, c.out);
    } else {
        json arr = json::array();
        for (const auto& o : outcomes) arr.push_back(pil::to_json(o));
        doc["outcomes"] = std::move(arr);
        doc["pass"] = pass;
        emit(pil::dump_report(doc), c.out);
    }
    return pass ? 0 : kExitFailed;
}

// ---------------------------------------------------------------------------

struct SpechtConfig {
    std::string lambda;
    std::string mu;
    int n = 0;
    std::string m = "0";
    bool characters = false;
    std::string out;
};

int cmd_specht_rank(const SpechtConfig& c) {
    const pil::Partition lambda = pil::Partition::parse(c.lambda);
    const pil::GenPartition mu = c.mu.empty() ? pil::GenPartition(lambda.parts()) : pil::GenPartition::parse(c.mu);
    const pil::PartitionPair pair(lambda, mu);
    json doc = pil::report_document("specht rank");
    doc["lambda"] = lambda.to_string();
    doc["mu"] = mu.to_string();
    doc["rank"] = pil::specht_lattice(pair).rank();
    emit(pil::dump_report(doc), c.out);
    return 0;
}

int cmd_specht_filtrate(const SpechtConfig& c) {
    const pil::Partition lambda = pil::Partition::parse(c.lambda);
    const Integer m(std::string_view(c.m));
    const auto rep = pil::induce_mod(lambda, c.n, m, c.characters);
    json doc = pil::report_document("specht filtrate");
    doc["n"] = c.n;
    json expected = json::array();
    for (const auto& p : pil::young_expected(lambda, c.n)) expected.push_back(p.to_string());
    doc["expected_labels"] = std::move(expected);
    doc["filtration"] = pil::to_json(rep);
    emit(pil::dump_report(doc), c.out);
    return 0;
}

int cmd_specht_series(const SpechtConfig& c) {
    const pil::Partition lambda = pil::Partition::parse(c.lambda);
    const pil::GenPartition mu = pil::GenPartition::parse(c.mu);
    const Integer m(std::string_view(c.m));
    const auto rep = pil::specht_series(pil::PartitionPair(lambda, mu), m, c.characters);
    json doc = pil::report_document("specht series");
    doc["filtration"] = pil::to_json(rep);
    emit(pil::dump_report(doc), c.out);
    return 0;
}

int cmd_ring_export(const std::string& spec, const std::string& out) {
    const pil::RingModel r = pil::parse_ring_spec(spec);
    json doc = pil::report_document("ring export");
    doc["ring"] = r.to_json();
    emit(pil::dump_report(doc), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codimensions of polynomial identities over the integers"};
    app.require_subcommand(1);

    CodimConfig codim;
    auto* codim_cmd = app.add_subcommand("codim", "Invariants of P_n modulo the identities of a ring model");
    codim_cmd->add_option("--ring", codim.ring, "Ring spec")->required();
    codim_cmd->add_option("--n", codim.n, "Degree n or range a..b")->capture_default_str();
    codim_cmd->add_flag("--proper", codim.proper, "Also report proper codimensions");
    codim_cmd->add_option("--q", codim.q, "Comma-separated q values to report");
    codim_cmd->add_option("--format", codim.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    codim_cmd->add_option("--out", codim.out, "Output path (default stdout)");
    codim_cmd->add_option("--row-budget", codim.row_budget, "Distinct evaluation rows per computation")
        ->capture_default_str();
    codim_cmd->add_flag("--timing", codim.timing, "Include wall-clock seconds");

    VerifyConfig verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("claim", verify.claim, "Suite id")->required();
    verify_cmd->add_option("--n-max", verify.n_max, "Largest degree (suite default if omitted)");
    verify_cmd->add_option("--ring", verify.ring, "Ring spec");
    verify_cmd->add_option("--ell", verify.ell, "ell for ut2.codim / grassmann.codim");
    verify_cmd->add_option("--m", verify.m, "m for ut2.codim");
    verify_cmd->add_option("--K", verify.K, "Grassmann generators; 0 means n + 1")->capture_default_str();
    verify_cmd->add_option("--moduli", verify.moduli, "Moduli for young")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "Seed for properties")->capture_default_str();
    verify_cmd->add_option("--trials", verify.trials, "Trials for properties")->capture_default_str();
    verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    verify_cmd->add_option("--out", verify.out, "Output path (default stdout)");
    verify_cmd->add_option("--row-budget", verify.row_budget)->capture_default_str();

    SpechtConfig specht;
    auto* specht_cmd = app.add_subcommand("specht", "Specht lattices and their series");
    specht_cmd->require_subcommand(1);
    auto* rank_cmd = specht_cmd->add_subcommand("rank", "Rank of S(lambda; mu)");
    rank_cmd->add_option("--lambda", specht.lambda)->required();
    rank_cmd->add_option("--mu", specht.mu, "Defaults to lambda");
    rank_cmd->add_option("--out", specht.out);
    auto* filtrate_cmd = specht_cmd->add_subcommand("filtrate", "Series of S(lambda)/mS(lambda) induced to S_n");
    filtrate_cmd->add_option("--lambda", specht.lambda)->required();
    filtrate_cmd->add_option("--n", specht.n)->required();
    filtrate_cmd->add_option("--m", specht.m)->capture_default_str();
    filtrate_cmd->add_flag("--characters", specht.characters);
    filtrate_cmd->add_option("--out", specht.out);
    auto* series_cmd = specht_cmd->add_subcommand("series", "Specht series of S(lambda; mu)");
    series_cmd->add_option("--lambda", specht.lambda)->required();
    series_cmd->add_option("--mu", specht.mu)->required();
    series_cmd->add_option("--m", specht.m)->capture_default_str();
    series_cmd->add_flag("--characters", specht.characters);
    series_cmd->add_option("--out", specht.out);

    std::string export_ring;
    std::string export_out;
    auto* ring_cmd = app.add_subcommand("ring", "Ring models");
    ring_cmd->require_subcommand(1);
    auto* export_cmd = ring_cmd->add_subcommand("export", "Write a model as JSON");
    export_cmd->add_option("--ring", export_ring)->required();
    export_cmd->add_option("--out", export_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*codim_cmd) return cmd_codim(codim);
        if (*verify_cmd) return cmd_verify(verify);
        if (*rank_cmd) return cmd_specht_rank(specht);
        if (*filtrate_cmd) return cmd_specht_filtrate(specht);
        if (*series_cmd) return cmd_specht_series(specht);
        if (*export_cmd) return cmd_ring_export(export_ring, export_out);
    } catch (const pil::ResourceLimitExceeded& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
