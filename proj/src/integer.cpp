#include "pil/integer.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace pil {

namespace {

mpz_class to_mpz_raw(std::int64_t v) {
    mpz_class r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

}  // namespace

Integer::Integer(unsigned long v) {
    if (v <= static_cast<unsigned long>(INT64_MAX)) {
        small_ = static_cast<std::int64_t>(v);
    } else {
        mpz_class r;
        mpz_set_ui(r.get_mpz_t(), v);
        set_from_mpz(std::move(r));
    }
}

Integer::Integer(unsigned long long v) : Integer(static_cast<unsigned long>(v)) {}

Integer::Integer(const mpz_class& v) { set_from_mpz(v); }

Integer::Integer(std::string_view decimal) {
    std::string s(decimal);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
    }
    if (s[0] == '+') s.erase(0, 1);
    mpz_class r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed integer literal: " + s);
    set_from_mpz(std::move(r));
}

Integer::Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
    if (this == &other) return *this;
    small_ = other.small_;
    if (other.big_) {
        if (big_) *big_ = *other.big_;
        else big_ = std::make_unique<mpz_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

std::int64_t Integer::to_int64() const {
    if (big_) throw std::overflow_error("Integer does not fit in int64: " + to_string());
    return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : to_mpz_raw(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str(10) : std::to_string(small_); }

std::size_t Integer::hash() const noexcept {
    if (!big_) return std::hash<std::int64_t>{}(small_);
    // Hash the limbs; big values never collide with small ones by canonicity.
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    const mpz_srcptr z = big_->get_mpz_t();
    const int n = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
    for (int i = 0; i < n; ++i) h ^= std::hash<mp_limb_t>{}(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(z->_mp_size < 0);
}

void Integer::set_from_mpz(const mpz_class& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) {
        small_ = mpz_get_si(v.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        if (big_) *big_ = v;
        else big_ = std::make_unique<mpz_class>(v);
    }
}

void Integer::set_from_mpz(mpz_class&& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) {
        small_ = mpz_get_si(v.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        if (big_) *big_ = std::move(v);
        else big_ = std::make_unique<mpz_class>(std::move(v));
    }
}

Integer& Integer::add_slow(const Integer& o) {
    set_from_mpz(mpz_class(to_mpz() + o.to_mpz()));
    return *this;
}

Integer& Integer::sub_slow(const Integer& o) {
    set_from_mpz(mpz_class(to_mpz() - o.to_mpz()));
    return *this;
}

Integer& Integer::mul_slow(const Integer& o) {
    set_from_mpz(mpz_class(to_mpz() * o.to_mpz()));
    return *this;
}

void Integer::submul_slow(const Integer& q, const Integer& o) {
    set_from_mpz(mpz_class(to_mpz() - q.to_mpz() * o.to_mpz()));
}

void Integer::addmul_slow(const Integer& q, const Integer& o) {
    set_from_mpz(mpz_class(to_mpz() + q.to_mpz() * o.to_mpz()));
}

void Integer::negate_slow() { set_from_mpz(mpz_class(-to_mpz())); }

int Integer::compare_slow(const Integer& a, const Integer& b) noexcept {
    const int c = cmp(a.to_mpz(), b.to_mpz());
    return (c > 0) - (c < 0);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer abs(Integer v) {
    if (v.sign() < 0) v.negate();
    return v;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small()) {
        const std::int64_t x = a.to_int64(), y = b.to_int64();
        if (!(x == INT64_MIN && y == -1)) {
            std::int64_t q = x / y;
            if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
            return Integer(q);
        }
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small()) {
        const std::int64_t x = a.to_int64(), y = b.to_int64();
        if (y == -1) return Integer(0);
        std::int64_t r = x % y;
        if (r != 0 && ((r < 0) != (y < 0))) r += y;
        return Integer(r);
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
}

Integer div_exact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small()) {
        const std::int64_t x = a.to_int64(), y = b.to_int64();
        if (!(x == INT64_MIN && y == -1)) return Integer(x / y);
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    return floor_mod(a, d).is_zero();
}

Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small()) {
        std::int64_t x = a.to_int64(), y = b.to_int64();
        if (x != INT64_MIN && y != INT64_MIN) {
            x = x < 0 ? -x : x;
            y = y < 0 ? -y : y;
            while (y != 0) {
                const std::int64_t t = x % y;
                x = y;
                y = t;
            }
            return Integer(x);
        }
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    return abs(div_exact(a, gcd(a, b)) * b);
}

ExtendedGcd xgcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small()) {
        const std::int64_t x = a.to_int64(), y = b.to_int64();
        if (x != INT64_MIN && y != INT64_MIN) {
            // Invariant: r0 = s0*x + t0*y, r1 = s1*x + t1*y; |s|,|t| stay below |x|+|y|.
            std::int64_t r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (r1 != 0) {
                const std::int64_t q = r0 / r1;
                std::int64_t tmp = r0 - q * r1;
                r0 = r1;
                r1 = tmp;
                tmp = s0 - q * s1;
                s0 = s1;
                s1 = tmp;
                tmp = t0 - q * t1;
                t0 = t1;
                t1 = tmp;
            }
            if (r0 < 0) {
                r0 = -r0;
                s0 = -s0;
                t0 = -t0;
            }
            return {Integer(r0), Integer(s0), Integer(t0)};
        }
    }
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return {Integer(g), Integer(s), Integer(t)};
}

int valuation(Integer a, const Integer& p) {
    if (a.is_zero()) throw std::domain_error("valuation of zero");
    int k = 0;
    while (divides(p, a)) {
        a = div_exact(a, p);
        ++k;
    }
    return k;
}

bool is_probable_prime(const Integer& v) {
    if (v < Integer(2)) return false;
    return mpz_probab_prime_p(v.to_mpz().get_mpz_t(), 30) > 0;
}

}  // namespace pil
