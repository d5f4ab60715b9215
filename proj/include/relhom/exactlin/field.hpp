#pragma once

// Exact scalar fields: the rationals (GMP) and prime fields Z/p.
//
// A field is a small context object (RationalField, PrimeField) that knows
// how to build constants and parse literals.  Elements of a prime field carry
// their modulus so that arithmetic on them needs no global state; an element
// with modulus 0 is the "untyped" zero produced by default construction and
// behaves as zero in every field.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace relhom {

class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "a", "-a" or "a/b".
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] const mpq_class& value() const { return v_; }

    /// Canonical "p/q" (or "p" when q = 1), q > 0.
    [[nodiscard]] std::string str() const { return v_.get_str(10); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return wrap(1 / v_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
    friend Rational operator-(const Rational& a) { return wrap(-a.v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

    [[nodiscard]] std::size_t hash() const {
        return std::hash<std::string>{}(str());
    }

private:
    // GMP arithmetic already returns canonical values.
    static Rational wrap(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

/// Residue class modulo a prime.  modulus() == 0 only for the untyped zero.
class Zp {
public:
    Zp() = default;
    Zp(std::int64_t v, std::uint64_t p) : p_(p) {
        if (p == 0) throw std::invalid_argument("Zp needs a modulus");
        auto r = v % static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }

    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] std::uint64_t value() const { return v_; }
    [[nodiscard]] std::uint64_t modulus() const { return p_; }
    [[nodiscard]] std::string str() const { return std::to_string(v_); }

    Zp inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        // a^(p-2) by square-and-multiply
        std::uint64_t e = p_ - 2, base = v_, acc = 1;
        while (e) {
            if (e & 1u) acc = mulmod(acc, base, p_);
            base = mulmod(base, base, p_);
            e >>= 1u;
        }
        return raw(acc, p_);
    }

    friend Zp operator+(const Zp& a, const Zp& b) {
        auto p = join(a, b);
        if (p == 0) return {};
        auto s = a.v_ + b.v_;
        return raw(s >= p ? s - p : s, p);
    }
    friend Zp operator-(const Zp& a) { return a.v_ == 0 ? a : raw(a.p_ - a.v_, a.p_); }
    friend Zp operator-(const Zp& a, const Zp& b) { return a + (-b); }
    friend Zp operator*(const Zp& a, const Zp& b) {
        auto p = join(a, b);
        if (p == 0) return {};
        return raw(mulmod(a.v_, b.v_, p), p);
    }
    friend Zp operator/(const Zp& a, const Zp& b) { return a * b.inverse(); }
    Zp& operator+=(const Zp& o) { return *this = *this + o; }
    Zp& operator-=(const Zp& o) { return *this = *this - o; }
    Zp& operator*=(const Zp& o) { return *this = *this * o; }
    friend bool operator==(const Zp& a, const Zp& b) {
        if (a.v_ != b.v_) return false;
        return a.v_ == 0 || a.p_ == b.p_;
    }

    [[nodiscard]] std::size_t hash() const { return std::hash<std::uint64_t>{}(v_); }

private:
    static Zp raw(std::uint64_t v, std::uint64_t p) {
        Zp z;
        z.v_ = v;
        z.p_ = p;
        return z;
    }
    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    static std::uint64_t join(const Zp& a, const Zp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw std::invalid_argument("mixing elements of different prime fields");
        return a.p_ ? a.p_ : b.p_;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

struct RationalField {
    using value_type = Rational;

    [[nodiscard]] Rational zero() const { return {}; }
    [[nodiscard]] Rational one() const { return {1}; }
    [[nodiscard]] Rational from_int(std::int64_t n) const { return {static_cast<long>(n)}; }
    [[nodiscard]] Rational parse(const std::string& s) const { return Rational::parse(s); }
    [[nodiscard]] std::uint64_t characteristic() const { return 0; }
    /// Number of elements; 0 means infinite.
    [[nodiscard]] std::uint64_t size() const { return 0; }
    [[nodiscard]] std::string name() const { return "q"; }
    friend bool operator==(const RationalField&, const RationalField&) = default;
};

struct PrimeField {
    using value_type = Zp;

    // Placeholder for default-constructed containers; real contexts name p.
    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (!is_prime(prime)) throw std::invalid_argument("modulus " + std::to_string(prime) + " is not prime");
        if (prime >= (1ULL << 62)) throw std::invalid_argument("modulus too large");
    }

    [[nodiscard]] Zp zero() const { return {0, p}; }
    [[nodiscard]] Zp one() const { return {1, p}; }
    [[nodiscard]] Zp from_int(std::int64_t n) const { return {n, p}; }
    [[nodiscard]] Zp parse(const std::string& s) const {
        auto slash = s.find('/');
        if (slash == std::string::npos) return {std::stoll(s), p};
        return Zp{std::stoll(s.substr(0, slash)), p} / Zp{std::stoll(s.substr(slash + 1)), p};
    }
    [[nodiscard]] std::uint64_t characteristic() const { return p; }
    [[nodiscard]] std::uint64_t size() const { return p; }
    [[nodiscard]] std::string name() const { return "fp:" + std::to_string(p); }
    friend bool operator==(const PrimeField&, const PrimeField&) = default;

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t p = 2;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a, const std::string& s) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(std::int64_t{}) } -> std::same_as<typename F::value_type>;
    { f.parse(s) } -> std::same_as<typename F::value_type>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { a + a } -> std::same_as<typename F::value_type>;
    { a * a } -> std::same_as<typename F::value_type>;
    { a.inverse() } -> std::same_as<typename F::value_type>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
};

}  // namespace relhom
