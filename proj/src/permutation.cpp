#include "pil/permutation.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pil {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<char> seen(word_.size() + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation word");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int a, int b) {
    auto w = identity(n).word_;
    std::swap(w.at(static_cast<std::size_t>(a - 1)), w.at(static_cast<std::size_t>(b - 1)));
    return Permutation(std::move(w));
}

Permutation Permutation::long_cycle(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) w[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    Permutation p;
    p.word_ = std::move(w);
    return p;
}

int Permutation::sign() const {
    int s = 1;
    for (int len : cycle_type()) {
        if (len % 2 == 0) s = -s;
    }
    return s;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<char> seen(word_.size(), 0);
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(word_[j] - 1)) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (word_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

std::string Permutation::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(word_[i]);
    }
    return s + ")";
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<int> w(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) w[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Permutation(std::move(w));
}

Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    auto w = Permutation::identity(n).word();
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

std::size_t permutation_rank(std::span<const int> word) {
    const std::size_t n = word.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (word[j] < word[i]) ++smaller;
        }
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

Permutation permutation_unrank(int n, std::size_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    w.reserve(pool.size());
    for (int i = n; i >= 1; --i) {
        const std::size_t f = factorial(i - 1);
        const std::size_t idx = rank / f;
        rank %= f;
        w.push_back(pool.at(idx));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(w));
}

Permutation class_representative(std::span<const int> cycle_type) {
    int n = 0;
    for (int c : cycle_type) n += c;
    std::vector<int> w(static_cast<std::size_t>(n));
    int start = 1;
    for (int len : cycle_type) {
        for (int k = 0; k < len; ++k) {
            const int from = start + k;
            const int to = start + (k + 1) % len;
            w[static_cast<std::size_t>(from - 1)] = to;
        }
        start += len;
    }
    return Permutation(std::move(w));
}

SymmetricGroupTable::SymmetricGroupTable(int n)
    : n_(n), order_(factorial(n)), elements_(all_permutations(n)), table_(order_ * order_) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order_; ++i) {
        const auto& a = elements_[i].word();
        for (std::size_t j = 0; j < order_; ++j) {
            const auto& b = elements_[j].word();
            for (std::size_t k = 0; k < w.size(); ++k) w[k] = a[static_cast<std::size_t>(b[k] - 1)];
            table_[i * order_ + j] = static_cast<std::uint32_t>(permutation_rank(w));
        }
    }
}

const SymmetricGroupTable& SymmetricGroupTable::get(int n) {
    if (n < 0 || n > 6) throw std::out_of_range("symmetric group table supports n <= 6");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SymmetricGroupTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot.reset(new SymmetricGroupTable(n));
    return *slot;
}

}  // namespace pil
