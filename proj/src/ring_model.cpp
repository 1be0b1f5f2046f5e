#include "pil/ring_model.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <utility>

#include "pil/lattice.hpp"

namespace pil {

namespace {

Integer canonical(const Integer& v, const Integer& m) {
    if (m.is_zero()) return v;
    if (v.sign() >= 0 && v < m) return v;
    return floor_mod(v, m);
}

// Exhaustive associativity up to this rank; sampled beyond.
constexpr std::size_t kExhaustiveRank = 64;

}  // namespace

RingModel::RingModel(std::string label, std::vector<Integer> moduli, std::vector<Integer> table,
                     std::vector<IntVector> generators, std::optional<IntVector> unit)
    : label_(std::move(label)), moduli_(std::move(moduli)), table_(std::move(table)),
      generators_(std::move(generators)), unit_(std::move(unit)) {
    const std::size_t r = rank();
    if (r == 0) throw std::invalid_argument("ring model must have positive rank");
    for (const auto& m : moduli_) {
        if (m.sign() < 0) throw std::invalid_argument("moduli must be non-negative");
    }
    if (table_.size() != r * r * r) throw std::invalid_argument("multiplication table must have rank^3 entries");
    products_.resize(r * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) {
                Integer& c = table_[(i * r + j) * r + k];
                c = canonical(c, moduli_[k]);
                if (c.is_zero()) continue;
                // m_i e_i = 0 forces m_i (e_i e_j) = 0, likewise for m_j.
                for (const Integer* mi : {&moduli_[i], &moduli_[j]}) {
                    if (!mi->is_zero() && !divides(moduli_[k], *mi * c)) {
                        throw std::invalid_argument("multiplication table is not well defined modulo the moduli");
                    }
                }
                products_[i * r + j].emplace_back(static_cast<std::uint32_t>(k), c);
            }
        }
    }

    auto triple_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
        SparseVector ei{{static_cast<std::uint32_t>(i), Integer(1)}};
        SparseVector ej{{static_cast<std::uint32_t>(j), Integer(1)}};
        SparseVector ek{{static_cast<std::uint32_t>(k), Integer(1)}};
        return multiply_sparse(multiply_sparse(ei, ej), ek) == multiply_sparse(ei, multiply_sparse(ej, ek));
    };
    if (r <= kExhaustiveRank) {
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                for (std::size_t k = 0; k < r; ++k) {
                    if (!triple_ok(i, j, k)) throw std::invalid_argument("multiplication is not associative");
                }
            }
        }
    } else {
        std::mt19937_64 rng(0x5eed);
        for (int t = 0; t < 200000; ++t) {
            if (!triple_ok(rng() % r, rng() % r, rng() % r)) {
                throw std::invalid_argument("multiplication is not associative");
            }
        }
    }

    for (auto& g : generators_) {
        if (g.size() != r) throw std::invalid_argument("generator has the wrong length");
        g = reduce(std::move(g));
    }
    HnfAccumulator span(r);
    for (const auto& g : generators_) span.add(g);
    for (std::size_t k = 0; k < r; ++k) {
        IntVector rel(r);
        rel[k] = moduli_[k];
        span.add(rel);
    }
    if (!span.full_unimodular()) throw std::invalid_argument("generators do not span the additive group");

    if (unit_) {
        if (unit_->size() != r) throw std::invalid_argument("unit has the wrong length");
        unit_ = reduce(std::move(*unit_));
        for (std::size_t k = 0; k < r; ++k) {
            IntVector e(r);
            e[k] = Integer(1);
            e = reduce(std::move(e));
            if (multiply(*unit_, e) != e || multiply(e, *unit_) != e) {
                throw std::invalid_argument("declared unit is not a two-sided identity");
            }
        }
    }
}

IntVector RingModel::reduce(IntVector v) const {
    if (v.size() != rank()) throw std::invalid_argument("element has the wrong length");
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = canonical(v[k], moduli_[k]);
    return v;
}

IntVector RingModel::add(const IntVector& a, const IntVector& b) const {
    IntVector out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.at(k);
    return reduce(std::move(out));
}

IntVector RingModel::multiply(const IntVector& a, const IntVector& b) const {
    return to_dense(multiply_sparse(to_sparse(a), to_sparse(b)), rank());
}

SparseVector RingModel::multiply_sparse(const SparseVector& a, const SparseVector& b) const {
    const std::size_t r = rank();
    if (a.empty() || b.empty()) return {};
    if (a.size() == 1 && b.size() == 1) {
        const auto& [i, x] = a.front();
        const auto& [j, y] = b.front();
        SparseVector out;
        const Integer xy = x * y;
        for (const auto& [k, c] : products_[i * r + j]) {
            Integer v = canonical(xy * c, moduli_[k]);
            if (!v.is_zero()) out.emplace_back(k, std::move(v));
        }
        return out;
    }
    IntVector acc(r);
    std::vector<char> touched(r, 0);
    for (const auto& [i, x] : a) {
        for (const auto& [j, y] : b) {
            const Integer xy = x * y;
            for (const auto& [k, c] : products_[i * r + j]) {
                acc[k].addmul(xy, c);
                touched[k] = 1;
            }
        }
    }
    SparseVector out;
    for (std::size_t k = 0; k < r; ++k) {
        if (!touched[k]) continue;
        Integer v = canonical(acc[k], moduli_[k]);
        if (!v.is_zero()) out.emplace_back(static_cast<std::uint32_t>(k), std::move(v));
    }
    return out;
}

Integer RingModel::additive_order(const IntVector& v) const {
    Integer order(1);
    for (std::size_t k = 0; k < rank(); ++k) {
        if (v.at(k).is_zero()) continue;
        if (moduli_[k].is_zero()) return Integer(0);
        order = lcm(order, div_exact(moduli_[k], gcd(v[k], moduli_[k])));
    }
    return order;
}

Integer RingModel::characteristic() const {
    if (!unit_) throw std::logic_error("ring model " + label_ + " has no unit");
    return additive_order(*unit_);
}

Integer RingModel::exponent() const {
    Integer e(1);
    for (const auto& g : generators_) {
        const Integer o = additive_order(g);
        if (o.is_zero()) return Integer(0);
        e = lcm(e, o);
    }
    return e;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json integer_to_json(const Integer& v) {
    constexpr std::int64_t kSafe = std::int64_t{1} << 53;
    if (v.fits_int64()) {
        const std::int64_t x = v.to_int64();
        if (x <= kSafe && x >= -kSafe) return x;
    }
    return v.to_string();
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

namespace {

nlohmann::json vector_to_json(const IntVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(integer_to_json(x));
    return a;
}

IntVector vector_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    IntVector v;
    for (const auto& x : j) v.push_back(integer_from_json(x));
    return v;
}

}  // namespace

nlohmann::json RingModel::to_json() const {
    const std::size_t r = rank();
    nlohmann::json j;
    j["label"] = label_;
    j["rank"] = r;
    j["moduli"] = vector_to_json(moduli_);
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t a = 0; a < r; ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t b = 0; b < r; ++b) {
            nlohmann::json cell = nlohmann::json::array();
            for (std::size_t k = 0; k < r; ++k) cell.push_back(integer_to_json(structure_constant(a, b, k)));
            row.push_back(std::move(cell));
        }
        table.push_back(std::move(row));
    }
    j["mult_table"] = std::move(table);
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators_) gens.push_back(vector_to_json(g));
    j["generators"] = std::move(gens);
    j["unit"] = unit_ ? vector_to_json(*unit_) : nlohmann::json(nullptr);
    return j;
}

RingModel RingModel::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("ring model JSON must be an object");
    for (const char* key : {"rank", "moduli", "mult_table", "generators"}) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("ring model JSON is missing '") + key + "'");
    }
    const std::size_t r = j.at("rank").get<std::size_t>();
    IntVector moduli = vector_from_json(j.at("moduli"));
    if (moduli.size() != r) throw std::invalid_argument("moduli length does not match rank");
    const auto& t = j.at("mult_table");
    if (!t.is_array() || t.size() != r) throw std::invalid_argument("mult_table must be rank x rank x rank");
    std::vector<Integer> table;
    table.reserve(r * r * r);
    for (const auto& row : t) {
        if (!row.is_array() || row.size() != r) throw std::invalid_argument("mult_table must be rank x rank x rank");
        for (const auto& cell : row) {
            IntVector c = vector_from_json(cell);
            if (c.size() != r) throw std::invalid_argument("mult_table must be rank x rank x rank");
            for (auto& x : c) table.push_back(std::move(x));
        }
    }
    std::vector<IntVector> gens;
    for (const auto& g : j.at("generators")) gens.push_back(vector_from_json(g));
    std::optional<IntVector> unit;
    if (j.contains("unit") && !j.at("unit").is_null()) unit = vector_from_json(j.at("unit"));
    const std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string("ring");
    return RingModel(label, std::move(moduli), std::move(table), std::move(gens), std::move(unit));
}

// ---------------------------------------------------------------------------
// Elements

RingElement::RingElement(const RingModel& model, IntVector coords)
    : model_(&model), coords_(model.reduce(std::move(coords))) {}

RingElement RingElement::zero(const RingModel& model) { return RingElement(model, IntVector(model.rank())); }

RingElement RingElement::basis(const RingModel& model, std::size_t k) {
    IntVector v(model.rank());
    v.at(k) = Integer(1);
    return RingElement(model, std::move(v));
}

namespace {

void same_model(const RingElement& a, const RingElement& b) {
    if (&a.model() != &b.model()) throw std::invalid_argument("ring elements belong to different models");
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    same_model(a, b);
    return RingElement(a.model(), a.model().add(a.coords(), b.coords()));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    same_model(a, b);
    IntVector v = a.coords();
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= b.coords()[k];
    return RingElement(a.model(), std::move(v));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    same_model(a, b);
    return RingElement(a.model(), a.model().multiply(a.coords(), b.coords()));
}

RingElement operator*(const Integer& c, const RingElement& a) {
    IntVector v = a.coords();
    for (auto& x : v) x *= c;
    return RingElement(a.model(), std::move(v));
}

bool operator==(const RingElement& a, const RingElement& b) {
    return &a.model() == &b.model() && a.coords() == b.coords();
}

RingElement commutator(const RingElement& a, const RingElement& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Factories

RingModel cyclic_ring(const Integer& m) {
    if (m.sign() < 0) throw std::invalid_argument("cyclic ring modulus must be non-negative");
    return RingModel("cyclic:" + m.to_string(), {m}, {Integer(1)}, {IntVector{Integer(1)}}, IntVector{Integer(1)});
}

RingModel ut2(const Integer& ell, const Integer& m) {
    if (ell.sign() < 0 || m.sign() < 0) throw std::invalid_argument("ut2 parameters must be non-negative");
    if (!ell.is_zero() && (m.is_zero() || !divides(m, ell))) {
        throw std::invalid_argument("ut2 requires m | ell (and m > 0 when ell > 0)");
    }
    // basis: 0 = e11, 1 = e22, 2 = e12
    std::vector<Integer> t(27);
    auto set = [&](int i, int j, int k) { t[static_cast<std::size_t>((i * 3 + j) * 3 + k)] = Integer(1); };
    set(0, 0, 0);
    set(1, 1, 1);
    set(0, 2, 2);
    set(2, 1, 2);
    std::vector<IntVector> gens{{Integer(1), Integer(0), Integer(0)},
                                {Integer(0), Integer(1), Integer(0)},
                                {Integer(0), Integer(0), Integer(1)}};
    return RingModel("ut2:" + ell.to_string() + "," + m.to_string(), {ell, ell, m}, std::move(t), std::move(gens),
                     IntVector{Integer(1), Integer(1), Integer(0)});
}

RingModel grassmann(const Integer& ell, int K) {
    if (ell.sign() < 0) throw std::invalid_argument("grassmann modulus must be non-negative");
    if (!ell.is_zero() && divides(Integer(2), ell)) throw std::invalid_argument("grassmann requires ell odd or 0");
    if (K < 1 || K > 10) throw std::invalid_argument("grassmann supports 1 <= K <= 10");
    const std::size_t r = std::size_t{1} << K;
    std::vector<Integer> t(r * r * r);
    for (std::size_t s = 0; s < r; ++s) {
        for (std::size_t u = 0; u < r; ++u) {
            if (s & u) continue;
            // sign = parity of pairs (a in S, b in T) with a > b
            int crossings = 0;
            for (std::size_t b = 0; b < static_cast<std::size_t>(K); ++b) {
                if ((u >> b) & 1u) crossings += std::popcount(s >> (b + 1));
            }
            t[(s * r + u) * r + (s | u)] = Integer(crossings % 2 ? -1 : 1);
        }
    }
    std::vector<IntVector> gens;
    for (std::size_t s = 0; s < r; ++s) {
        IntVector g(r);
        g[s] = Integer(1);
        gens.push_back(std::move(g));
    }
    IntVector unit(r);
    unit[0] = Integer(1);
    return RingModel("grassmann:" + ell.to_string() + "," + std::to_string(K), std::vector<Integer>(r, ell),
                     std::move(t), std::move(gens), std::move(unit));
}

RingModel direct_sum(const std::vector<RingModel>& models) {
    if (models.empty()) throw std::invalid_argument("direct_sum needs at least one summand");
    std::size_t r = 0;
    for (const auto& m : models) r += m.rank();
    std::vector<Integer> moduli;
    std::vector<Integer> t(r * r * r);
    std::vector<IntVector> gens;
    IntVector unit(r);
    bool unital = true;
    std::string label = "sum:[";
    std::size_t off = 0;
    for (std::size_t idx = 0; idx < models.size(); ++idx) {
        const auto& m = models[idx];
        const std::size_t q = m.rank();
        moduli.insert(moduli.end(), m.moduli().begin(), m.moduli().end());
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j) {
                for (const auto& [k, c] : m.product_of_basis(i, j)) t[((off + i) * r + off + j) * r + off + k] = c;
            }
        }
        for (const auto& g : m.generators()) {
            IntVector e(r);
            for (std::size_t i = 0; i < q; ++i) e[off + i] = g[i];
            gens.push_back(std::move(e));
        }
        if (m.unit()) {
            for (std::size_t i = 0; i < q; ++i) unit[off + i] = (*m.unit())[i];
        } else {
            unital = false;
        }
        label += (idx ? "," : "") + m.label();
        off += q;
    }
    label += "]";
    return RingModel(label, std::move(moduli), std::move(t), std::move(gens),
                     unital ? std::optional<IntVector>(std::move(unit)) : std::nullopt);
}

RingElement evaluate(const MultilinearPoly& f, std::span<const RingElement> args) {
    if (static_cast<int>(args.size()) != f.degree()) throw std::invalid_argument("argument count does not match degree");
    if (args.empty()) throw std::invalid_argument("evaluate needs at least one argument");
    const RingModel& model = args.front().model();
    for (const auto& a : args) {
        if (&a.model() != &model) throw std::invalid_argument("arguments belong to different models");
    }
    IntVector acc(model.rank());
    for (const auto& [s, c] : f.terms()) {
        SparseVector prod = to_sparse(args[static_cast<std::size_t>(s(1) - 1)].coords());
        for (int i = 2; i <= f.degree() && !prod.empty(); ++i) {
            prod = model.multiply_sparse(prod, to_sparse(args[static_cast<std::size_t>(s(i) - 1)].coords()));
        }
        for (const auto& [k, v] : prod) acc[k].addmul(c, v);
    }
    return RingElement(model, std::move(acc));
}

}  // namespace pil
