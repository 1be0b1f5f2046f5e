#include "pil/multilinear.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace pil {

// ---------------------------------------------------------------------------
// MultilinearPoly

MultilinearPoly::MultilinearPoly(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
}

MultilinearPoly MultilinearPoly::monomial(const Permutation& s, const Integer& coeff) {
    MultilinearPoly f(s.size());
    f.add_term(s, coeff);
    return f;
}

MultilinearPoly MultilinearPoly::scalar(const Integer& c) {
    MultilinearPoly f(0);
    f.add_term(Permutation(), c);
    return f;
}

MultilinearPoly MultilinearPoly::from_vector(int degree, const IntVector& v) {
    if (v.size() != factorial(degree)) throw std::invalid_argument("coefficient vector must have length n!");
    MultilinearPoly f(degree);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) f.terms_.emplace(permutation_unrank(degree, i), v[i]);
    }
    return f;
}

Integer MultilinearPoly::coefficient(const Permutation& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Integer(0) : it->second;
}

IntVector MultilinearPoly::to_vector() const {
    IntVector v(factorial(degree_));
    for (const auto& [s, c] : terms_) v[permutation_rank(s.word())] = c;
    return v;
}

std::string MultilinearPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
        Integer mag = abs(c);
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono;
        for (int v : s.word()) mono += "x" + std::to_string(v);
        if (mono.empty()) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + " ";
            out += mono;
        }
    }
    return out;
}

void MultilinearPoly::add_term(const Permutation& s, const Integer& c) {
    if (s.size() != degree_) throw std::invalid_argument("monomial degree mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch");
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch");
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(const Integer& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, v] : terms_) v *= c;
    return *this;
}

MultilinearPoly monomial(const Permutation& s) { return MultilinearPoly::monomial(s); }

MultilinearPoly act(const Permutation& s, const MultilinearPoly& f) {
    if (s.size() != f.degree()) throw std::invalid_argument("permutation degree does not match polynomial degree");
    MultilinearPoly out(f.degree());
    for (const auto& [t, c] : f.terms()) out.add_term(s * t, c);
    return out;
}

IntVector act_vector(const Permutation& s, const IntVector& v) {
    const int n = s.size();
    if (v.size() != factorial(n)) throw std::invalid_argument("coefficient vector must have length n!");
    IntVector out(v.size());
    if (n <= 6) {
        const auto& table = SymmetricGroupTable::get(n);
        const std::size_t rs = permutation_rank(s.word());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_zero()) out[table.product(rs, i)] = v[i];
        }
        return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        out[permutation_rank((s * permutation_unrank(n, i)).word())] = v[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Commutator words

int CommutatorWord::degree() const {
    std::size_t d = prefix.size();
    for (const auto& f : factors) d += f.size();
    return static_cast<int>(d);
}

void CommutatorWord::validate(int n) const {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    auto mark = [&](int v) {
        if (v < 1 || v > n) throw std::invalid_argument("variable index out of range in commutator word");
        if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("repeated variable in commutator word");
        seen[static_cast<std::size_t>(v)] = 1;
    };
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (i > 0 && prefix[i] <= prefix[i - 1]) throw std::invalid_argument("commutator word prefix must increase");
        mark(prefix[i]);
    }
    for (const auto& f : factors) {
        if (f.size() < 2) throw std::invalid_argument("bracket of length < 2");
        for (int v : f) mark(v);
    }
    if (degree() != n) throw std::invalid_argument("commutator word does not use every variable");
}

std::string CommutatorWord::to_string() const {
    std::string s;
    for (int v : prefix) s += "x" + std::to_string(v);
    for (const auto& f : factors) {
        s += "[";
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) s += ",";
            s += "x" + std::to_string(f[i]);
        }
        s += "]";
    }
    return s.empty() ? "1" : s;
}

std::vector<std::pair<int, std::vector<int>>> expand_bracket(const std::vector<int>& bracket) {
    std::vector<std::pair<int, std::vector<int>>> cur{{1, {bracket.front()}}};
    for (std::size_t i = 1; i < bracket.size(); ++i) {
        std::vector<std::pair<int, std::vector<int>>> next;
        next.reserve(cur.size() * 2);
        for (const auto& [sg, w] : cur) {
            auto right = w;
            right.push_back(bracket[i]);
            next.emplace_back(sg, std::move(right));
            std::vector<int> left{bracket[i]};
            left.insert(left.end(), w.begin(), w.end());
            next.emplace_back(-sg, std::move(left));
        }
        cur.swap(next);
    }
    return cur;
}

namespace {

// Signed words of a product of brackets, after a leading fixed word.
void expand_product(const std::vector<int>& lead, const std::vector<std::vector<int>>& factors,
                    const std::function<void(int, const std::vector<int>&)>& emit) {
    std::vector<std::vector<std::pair<int, std::vector<int>>>> parts;
    parts.reserve(factors.size());
    for (const auto& f : factors) parts.push_back(expand_bracket(f));
    std::vector<int> word = lead;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sign) {
        if (i == parts.size()) {
            emit(sign, word);
            return;
        }
        for (const auto& [sg, w] : parts[i]) {
            const std::size_t mark = word.size();
            word.insert(word.end(), w.begin(), w.end());
            rec(i + 1, sign * sg);
            word.resize(mark);
        }
    };
    rec(0, 1);
}

IntVector expand_to_vector(const std::vector<std::vector<int>>& factors, int n) {
    IntVector v(factorial(n));
    expand_product({}, factors, [&](int sign, const std::vector<int>& w) {
        v[permutation_rank(w)] += Integer(sign);
    });
    return v;
}

}  // namespace

MultilinearPoly expand(const CommutatorWord& w, int n) {
    w.validate(n);
    MultilinearPoly out(n);
    expand_product(w.prefix, w.factors, [&](int sign, const std::vector<int>& word) {
        out.add_term(Permutation(word), Integer(sign));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Proper basis

namespace {

// Set partitions of `elems` (sorted) into blocks of size >= 2, blocks ordered by minimum.
void set_partitions(std::vector<int> elems, std::vector<std::vector<int>>& current,
                    std::vector<std::vector<std::vector<int>>>& out) {
    if (elems.empty()) {
        out.push_back(current);
        return;
    }
    const int first = elems.front();
    const std::vector<int> rest(elems.begin() + 1, elems.end());
    const std::size_t m = rest.size();
    // Subsets of rest (non-empty) in lexicographic order of their index masks by size.
    for (std::size_t size = 1; size <= m; ++size) {
        std::vector<char> pick(m, 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), 1);
        do {
            std::vector<int> block{first};
            std::vector<int> remaining;
            for (std::size_t i = 0; i < m; ++i) (pick[i] ? block : remaining).push_back(rest[i]);
            if (remaining.size() == 1) continue;
            current.push_back(block);
            set_partitions(remaining, current, out);
            current.pop_back();
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
}

std::vector<std::vector<std::vector<int>>> block_partitions(int n) {
    std::vector<int> elems(static_cast<std::size_t>(n));
    std::iota(elems.begin(), elems.end(), 1);
    std::vector<std::vector<int>> current;
    std::vector<std::vector<std::vector<int>>> out;
    set_partitions(elems, current, out);
    return out;
}

// Brackets on a block with its maximum first, remaining letters in every order.
std::vector<std::vector<int>> max_first_brackets(const std::vector<int>& block) {
    const int mx = *std::max_element(block.begin(), block.end());
    std::vector<int> rest;
    for (int v : block) {
        if (v != mx) rest.push_back(v);
    }
    std::sort(rest.begin(), rest.end());
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> b{mx};
        b.insert(b.end(), rest.begin(), rest.end());
        out.push_back(std::move(b));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// Orderings of a block whose first letter exceeds the second.
std::vector<std::vector<int>> descending_start_brackets(const std::vector<int>& block) {
    std::vector<int> w = block;
    std::sort(w.begin(), w.end());
    std::vector<std::vector<int>> out;
    do {
        if (w[0] > w[1]) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

template <typename Choices>
void cartesian(const std::vector<Choices>& options, std::vector<std::vector<int>>& current,
               std::vector<std::vector<std::vector<int>>>& out, std::size_t i = 0) {
    if (i == options.size()) {
        out.push_back(current);
        return;
    }
    for (const auto& c : options[i]) {
        current.push_back(c);
        cartesian(options, current, out, i + 1);
        current.pop_back();
    }
}


}  // namespace

std::vector<CommutatorWord> bracket_product_candidates(int n) {
    std::vector<CommutatorWord> out;
    for (auto blocks : block_partitions(n)) {
        std::sort(blocks.begin(), blocks.end());
        do {
            std::vector<std::vector<std::vector<int>>> options;
            for (const auto& b : blocks) options.push_back(descending_start_brackets(b));
            std::vector<std::vector<int>> current;
            std::vector<std::vector<std::vector<int>>> products;
            cartesian(options, current, products);
            for (auto& p : products) out.push_back(CommutatorWord{{}, std::move(p)});
        } while (std::next_permutation(blocks.begin(), blocks.end()));
    }
    return out;
}

std::optional<IntVector> ProperBasis::coordinates(const IntVector& v) const { return solver_->solve(v); }

MultilinearPoly ProperBasis::combination(const IntVector& coords) const {
    if (coords.size() != size()) throw std::invalid_argument("coordinate vector has the wrong length");
    IntVector v(expansions_.cols());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        auto row = expansions_.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!row[j].is_zero()) v[j].addmul(coords[i], row[j]);
        }
    }
    return MultilinearPoly::from_vector(degree_, v);
}

const ProperBasis& proper_basis(int n) {
    if (n < 0 || n > 6) throw std::out_of_range("proper_basis supports 0 <= n <= 6");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ProperBasis>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (slot) return *slot;
    auto pb = std::make_unique<ProperBasis>();
    pb->degree_ = n;
    const std::size_t cols = factorial(n);
    if (n == 0) {
        pb->elements_.push_back(CommutatorWord{});
    } else {
        for (const auto& blocks : block_partitions(n)) {
            std::vector<std::vector<std::vector<int>>> options;
            for (const auto& b : blocks) options.push_back(max_first_brackets(b));
            std::vector<std::vector<int>> current;
            std::vector<std::vector<std::vector<int>>> products;
            cartesian(options, current, products);
            for (auto& p : products) pb->elements_.push_back(CommutatorWord{{}, std::move(p)});
        }
    }
    pb->expansions_ = IntMatrix(0, cols);
    pb->solver_ = std::make_shared<HnfAccumulator>(cols, Integer(0), true);
    for (const auto& w : pb->elements_) {
        const IntVector row = expand_to_vector(w.factors, n);
        pb->expansions_.append_row(row);
        pb->solver_->add(row);
    }
    if (!pb->solver_->kernel().empty()) throw std::logic_error("proper basis elements are linearly dependent");
    pb->lattice_ = pb->solver_->lattice();

    HnfAccumulator all(cols);
    for (const auto& w : bracket_product_candidates(n)) all.add(expand_to_vector(w.factors, n));
    if (n == 0) all.add(IntVector{Integer(1)});
    if (!(all.lattice() == pb->lattice_)) throw std::logic_error("proper basis does not span all bracket products");
    slot = std::move(pb);
    return *slot;
}

// ---------------------------------------------------------------------------
// Decomposition into prefix * proper parts

namespace {

// An item is a letter (size 1) or a left-normed bracket (size >= 2).
using Term = std::vector<std::vector<int>>;

}  // namespace

std::vector<ProperComponent> decompose(const MultilinearPoly& f) {
    const int n = f.degree();
    std::map<Term, Integer> pending;
    for (const auto& [s, c] : f.terms()) {
        Term t;
        for (int v : s.word()) t.push_back({v});
        pending[t] += c;
    }
    // Terminal terms: (prefix, renamed bracket product) -> coefficient.
    std::map<std::pair<std::vector<int>, Term>, Integer> terminal;
    auto push = [&](std::map<Term, Integer>& into, Term t, const Integer& c) {
        auto [it, inserted] = into.emplace(std::move(t), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) into.erase(it);
        }
    };
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        Term& t = node.key();
        const Integer c = node.mapped();
        if (c.is_zero()) continue;
        std::size_t p = 0;
        for (; p + 1 < t.size(); ++p) {
            const bool a_letter = t[p].size() == 1;
            const bool b_letter = t[p + 1].size() == 1;
            if (a_letter && b_letter && t[p][0] > t[p + 1][0]) break;
            if (!a_letter && b_letter) break;
        }
        if (p + 1 >= t.size()) {
            std::vector<int> prefix;
            std::size_t i = 0;
            for (; i < t.size() && t[i].size() == 1; ++i) prefix.push_back(t[i][0]);
            std::vector<int> rename(static_cast<std::size_t>(n) + 1, 0);
            int next = 1;
            std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
            for (int v : prefix) used[static_cast<std::size_t>(v)] = 1;
            for (int v = 1; v <= n; ++v) {
                if (!used[static_cast<std::size_t>(v)]) rename[static_cast<std::size_t>(v)] = next++;
            }
            Term brackets;
            for (; i < t.size(); ++i) {
                std::vector<int> b = t[i];
                for (int& v : b) v = rename[static_cast<std::size_t>(v)];
                brackets.push_back(std::move(b));
            }
            auto [it, inserted] = terminal.emplace(std::make_pair(prefix, brackets), c);
            if (!inserted) it->second += c;
            continue;
        }
        if (t[p].size() == 1) {
            // y x = [y, x] + x y
            Term merged = t;
            merged[p] = {t[p][0], t[p + 1][0]};
            merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(p) + 1);
            Term swapped = t;
            std::swap(swapped[p], swapped[p + 1]);
            push(pending, std::move(merged), c);
            push(pending, std::move(swapped), c);
        } else {
            // [..] x = x [..] + [.., x]
            Term swapped = t;
            std::swap(swapped[p], swapped[p + 1]);
            Term absorbed = t;
            absorbed[p].push_back(t[p + 1][0]);
            absorbed.erase(absorbed.begin() + static_cast<std::ptrdiff_t>(p) + 1);
            push(pending, std::move(swapped), c);
            push(pending, std::move(absorbed), c);
        }
    }

    std::map<std::vector<int>, IntVector> grouped;
    for (const auto& [key, c] : terminal) {
        if (c.is_zero()) continue;
        const auto& [prefix, brackets] = key;
        const int d = n - static_cast<int>(prefix.size());
        auto [it, inserted] = grouped.try_emplace(prefix, IntVector(factorial(d)));
        IntVector& v = it->second;
        expand_product({}, brackets, [&](int sign, const std::vector<int>& w) {
            v[permutation_rank(w)].addmul(Integer(sign), c);
        });
    }

    std::vector<ProperComponent> out;
    for (auto& [prefix, v] : grouped) {
        if (is_zero(v)) continue;
        const int k = static_cast<int>(prefix.size());
        const int d = n - k;
        const ProperBasis& pb = proper_basis(d);
        auto coords = pb.coordinates(v);
        if (!coords) throw std::logic_error("rewritten component is not proper");
        std::vector<int> word;
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        for (int x : prefix) used[static_cast<std::size_t>(x)] = 1;
        for (int x = 1; x <= n; ++x) {
            if (!used[static_cast<std::size_t>(x)]) word.push_back(x);
        }
        word.insert(word.end(), prefix.begin(), prefix.end());
        out.push_back(ProperComponent{prefix, Permutation(word), std::move(*coords), MultilinearPoly::from_vector(d, v)});
    }
    return out;
}

MultilinearPoly recompose(const std::vector<ProperComponent>& components, int n) {
    MultilinearPoly out(n);
    for (const auto& comp : components) {
        const int k = static_cast<int>(comp.prefix.size());
        const int d = n - k;
        if (comp.proper_part.degree() != d || comp.sigma.size() != n) {
            throw std::invalid_argument("component does not match the requested degree");
        }
        for (const auto& [s, c] : comp.proper_part.terms()) {
            std::vector<int> word = comp.prefix;
            for (int v : s.word()) word.push_back(comp.sigma(v));
            out.add_term(Permutation(word), c);
        }
    }
    return out;
}

}  // namespace pil
