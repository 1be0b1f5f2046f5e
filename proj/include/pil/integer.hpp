#pragma once

#include <climits>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pil {

/// Arbitrary-precision signed integer.
///
/// Values that fit in a machine word are stored inline and handled with
/// overflow-checked native arithmetic; anything larger spills into a GMP
/// integer. The representation is canonical: a value is stored big only when
/// it does not fit in int64_t.
class Integer {
public:
    Integer() noexcept = default;
    Integer(int v) noexcept : small_(v) {}
    Integer(long v) noexcept : small_(v) {}
    Integer(long long v) noexcept : small_(v) {}
    Integer(unsigned v) noexcept : small_(v) {}
    Integer(unsigned long v);
    Integer(unsigned long long v);
    explicit Integer(const mpz_class& v);
    explicit Integer(std::string_view decimal);

    Integer(const Integer& other);
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&&) noexcept = default;
    ~Integer() = default;

    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && small_ == 1; }
    [[nodiscard]] int sign() const noexcept {
        if (!big_) return (small_ > 0) - (small_ < 0);
        return sgn(*big_);
    }
    [[nodiscard]] bool fits_int64() const noexcept { return !big_; }
    /// Precondition: fits_int64().
    [[nodiscard]] std::int64_t to_int64() const;
    [[nodiscard]] mpz_class to_mpz() const;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::size_t hash() const noexcept;

    Integer& operator+=(const Integer& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        return add_slow(o);
    }
    Integer& operator-=(const Integer& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        return sub_slow(o);
    }
    Integer& operator*=(const Integer& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        return mul_slow(o);
    }
    /// this -= q * o
    void submul(const Integer& q, const Integer& o) {
        std::int64_t p, r;
        if (!big_ && !q.big_ && !o.big_ && !__builtin_mul_overflow(q.small_, o.small_, &p) &&
            !__builtin_sub_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
        submul_slow(q, o);
    }
    /// this += q * o
    void addmul(const Integer& q, const Integer& o) {
        std::int64_t p, r;
        if (!big_ && !q.big_ && !o.big_ && !__builtin_mul_overflow(q.small_, o.small_, &p) &&
            !__builtin_add_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
        addmul_slow(q, o);
    }
    void negate() {
        if (!big_ && small_ != INT64_MIN) {
            small_ = -small_;
            return;
        }
        negate_slow();
    }

    friend Integer operator+(Integer a, const Integer& b) { a += b; return a; }
    friend Integer operator-(Integer a, const Integer& b) { a -= b; return a; }
    friend Integer operator*(Integer a, const Integer& b) { a *= b; return a; }
    friend Integer operator-(Integer a) { a.negate(); return a; }

    friend bool operator==(const Integer& a, const Integer& b) noexcept {
        if (!a.big_ && !b.big_) return a.small_ == b.small_;
        return compare_slow(a, b) == 0;
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
        if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
        return compare_slow(a, b) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

private:
    Integer& add_slow(const Integer& o);
    Integer& sub_slow(const Integer& o);
    Integer& mul_slow(const Integer& o);
    void submul_slow(const Integer& q, const Integer& o);
    void addmul_slow(const Integer& q, const Integer& o);
    void negate_slow();
    static int compare_slow(const Integer& a, const Integer& b) noexcept;
    void set_from_mpz(const mpz_class& v);
    void set_from_mpz(mpz_class&& v);

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

Integer abs(Integer v);
/// Quotient rounded toward negative infinity. Throws std::domain_error on b == 0.
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder with the sign of b (a - b * floor_div(a, b)).
Integer floor_mod(const Integer& a, const Integer& b);
/// Exact division; the caller guarantees b | a.
Integer div_exact(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& a);
/// Non-negative gcd, gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
/// Non-negative lcm, lcm(x, 0) = 0.
Integer lcm(const Integer& a, const Integer& b);

struct ExtendedGcd {
    Integer g;  ///< gcd(a, b) >= 0
    Integer s;  ///< s * a + t * b == g
    Integer t;
};
ExtendedGcd xgcd(const Integer& a, const Integer& b);

/// Multiplicity of p in a (a != 0, p >= 2).
int valuation(Integer a, const Integer& p);
bool is_probable_prime(const Integer& v);

struct IntegerHash {
    std::size_t operator()(const Integer& v) const noexcept { return v.hash(); }
};

}  // namespace pil
