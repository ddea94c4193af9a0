#pragma once

// Exact scalar arithmetic over Q, F_p and the Eisenstein rationals Q(w), w^2 = -1 - w.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "harbourne/error.hpp"

namespace harbourne {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary precision rational kept in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    BigRational(long long n, long long d) : BigRational(BigInt(n), BigInt(d)) {}

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    BigRational operator-() const {
        BigRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend BigRational operator+(const BigRational& x, const BigRational& y) {
        return {BigInt(x.num_ * y.den_ + y.num_ * x.den_), BigInt(x.den_ * y.den_)};
    }
    friend BigRational operator-(const BigRational& x, const BigRational& y) {
        return {BigInt(x.num_ * y.den_ - y.num_ * x.den_), BigInt(x.den_ * y.den_)};
    }
    friend BigRational operator*(const BigRational& x, const BigRational& y) {
        return {BigInt(x.num_ * y.num_), BigInt(x.den_ * y.den_)};
    }
    friend BigRational operator/(const BigRational& x, const BigRational& y) {
        if (y.is_zero()) throw DivisionByZero("rational division by zero");
        return {BigInt(x.num_ * y.den_), BigInt(x.den_ * y.num_)};
    }
    BigRational& operator+=(const BigRational& y) { return *this = *this + y; }
    BigRational& operator-=(const BigRational& y) { return *this = *this - y; }
    BigRational& operator*=(const BigRational& y) { return *this = *this * y; }
    BigRational& operator/=(const BigRational& y) { return *this = *this / y; }

    BigRational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of rational zero");
        return {den_, num_};
    }

    friend bool operator==(const BigRational& x, const BigRational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const BigRational& x, const BigRational& y) {
        BigInt lhs = x.num_ * y.den_;
        BigInt rhs = y.num_ * x.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "n/d", or "n" when the denominator is 1.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Accepts "n", "n/d" and "-n/d" (optional leading '+').
    static BigRational parse(std::string_view text) {
        auto bad = [&] { return InvalidConfiguration("malformed rational '" + std::string(text) + "'"); };
        auto parse_int = [&](std::string_view s, bool allow_sign) {
            if (s.empty()) throw bad();
            std::size_t start = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
            if (start == s.size()) throw bad();
            for (std::size_t i = start; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') throw bad();
            std::string digits(s);
            if (digits[0] == '+') digits.erase(0, 1);
            return BigInt(digits);
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return {parse_int(text, true)};
        BigInt d = parse_int(text.substr(slash + 1), false);
        if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
        return {parse_int(text.substr(0, slash), true), d};
    }

    /// Decimal rendering rounded half away from zero.
    std::string to_decimal(int places) const {
        BigInt scale = 1;
        for (int i = 0; i < places; ++i) scale *= 10;
        BigInt a = boost::multiprecision::abs(num_) * scale;
        BigInt q = a / den_;
        BigInt r = a % den_;
        if (2 * r >= den_) q += 1;
        std::string digits = q.str();
        if (static_cast<int>(digits.size()) <= places)
            digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
        std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
        if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
        if (num_ < 0 && q != 0) out.insert(0, "-");
        return out;
    }

    /// Mixed fraction such as "-1 1/3", "-2" or "5/7".
    std::string to_mixed() const {
        BigInt a = boost::multiprecision::abs(num_);
        BigInt whole = a / den_;
        BigInt rest = a % den_;
        std::string out = num_ < 0 ? "-" : "";
        if (rest == 0) return out + whole.str();
        if (whole != 0) out += whole.str() + " ";
        return out + rest.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.to_string(); }

private:
    void normalize() {
        if (den_ == 0) throw DivisionByZero("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

inline constexpr std::array<int, 6> kSupportedPrimes{2, 3, 5, 7, 11, 13};

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

inline bool is_supported_prime(long long p) {
    return std::find(kSupportedPrimes.begin(), kSupportedPrimes.end(), p) != kSupportedPrimes.end();
}

/// Which field a scalar lives in.
class FieldDescriptor {
public:
    enum class Kind { rational, prime, eisenstein };

    static FieldDescriptor rational() { return FieldDescriptor(Kind::rational, 0); }
    static FieldDescriptor eisenstein() { return FieldDescriptor(Kind::eisenstein, 0); }
    static FieldDescriptor prime(int p) {
        if (!is_prime(p) || !is_supported_prime(p))
            throw UnsupportedField("unsupported prime field F_" + std::to_string(p));
        return FieldDescriptor(Kind::prime, p);
    }

    Kind kind() const noexcept { return kind_; }
    int modulus() const noexcept { return p_; }
    bool characteristic_zero() const noexcept { return kind_ != Kind::prime; }

    /// "Q", "Q(w)" or "F_p".
    std::string name() const {
        switch (kind_) {
            case Kind::rational: return "Q";
            case Kind::eisenstein: return "Q(w)";
            case Kind::prime: return "F_" + std::to_string(p_);
        }
        return "?";
    }

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

private:
    FieldDescriptor(Kind k, int p) : kind_(k), p_(p) {}
    Kind kind_;
    int p_;
};

/// Residue class modulo a supported prime.
class PrimeFieldElement {
public:
    PrimeFieldElement(long long value, int p) : p_(FieldDescriptor::prime(p).modulus()) {
        long long r = value % p_;
        residue_ = static_cast<int>(r < 0 ? r + p_ : r);
    }

    int residue() const noexcept { return residue_; }
    int modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return residue_ == 0; }

    friend PrimeFieldElement operator+(PrimeFieldElement x, PrimeFieldElement y) {
        check(x, y);
        return {static_cast<long long>(x.residue_) + y.residue_, x.p_};
    }
    friend PrimeFieldElement operator-(PrimeFieldElement x, PrimeFieldElement y) {
        check(x, y);
        return {static_cast<long long>(x.residue_) - y.residue_, x.p_};
    }
    friend PrimeFieldElement operator*(PrimeFieldElement x, PrimeFieldElement y) {
        check(x, y);
        return {static_cast<long long>(x.residue_) * y.residue_, x.p_};
    }
    PrimeFieldElement operator-() const { return {-static_cast<long long>(residue_), p_}; }

    /// Fermat inverse x^(p-2).
    PrimeFieldElement inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
        long long result = 1, base = residue_;
        for (int e = p_ - 2; e > 0; e >>= 1) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
        }
        return {result, p_};
    }

    friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

private:
    static void check(const PrimeFieldElement& x, const PrimeFieldElement& y) {
        if (x.p_ != y.p_)
            throw DescriptorMismatch("F_" + std::to_string(x.p_) + " vs F_" + std::to_string(y.p_));
    }

    int residue_;
    int p_;
};

/// a + b*w with w a primitive cube root of unity.
class EisensteinRational {
public:
    EisensteinRational() = default;
    EisensteinRational(BigRational a, BigRational b = {}) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

    /// w itself.
    static EisensteinRational omega() { return {BigRational(0), BigRational(1)}; }

    const BigRational& a() const noexcept { return a_; }
    const BigRational& b() const noexcept { return b_; }
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

    /// a^2 - ab + b^2; positive for every nonzero element.
    BigRational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    friend EisensteinRational operator+(const EisensteinRational& x, const EisensteinRational& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend EisensteinRational operator-(const EisensteinRational& x, const EisensteinRational& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend EisensteinRational operator*(const EisensteinRational& x, const EisensteinRational& y) {
        BigRational bd = x.b_ * y.b_;
        return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
    }
    EisensteinRational operator-() const { return {-a_, -b_}; }

    /// Conjugate (a - b) - b*w divided by the norm.
    EisensteinRational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(w)");
        BigRational n = norm();
        return {(a_ - b_) / n, -b_ / n};
    }

    friend bool operator==(const EisensteinRational&, const EisensteinRational&) = default;

private:
    BigRational a_;
    BigRational b_;
};

/// Runtime-typed element of one of the supported fields.
class Scalar {
public:
    using Value = std::variant<BigRational, PrimeFieldElement, EisensteinRational>;

    Scalar() = default;  // rational zero
    Scalar(BigRational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(PrimeFieldElement v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(EisensteinRational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    /// Image of an integer in the given field.
    static Scalar from_int(const FieldDescriptor& f, long long n) {
        switch (f.kind()) {
            case FieldDescriptor::Kind::rational: return BigRational(n);
            case FieldDescriptor::Kind::prime: return PrimeFieldElement(n, f.modulus());
            case FieldDescriptor::Kind::eisenstein: return EisensteinRational(BigRational(n));
        }
        throw UnsupportedField("unknown field kind");
    }
    static Scalar zero(const FieldDescriptor& f) { return from_int(f, 0); }
    static Scalar one(const FieldDescriptor& f) { return from_int(f, 1); }

    FieldDescriptor field() const {
        if (std::holds_alternative<BigRational>(value_)) return FieldDescriptor::rational();
        if (auto* e = std::get_if<PrimeFieldElement>(&value_)) return FieldDescriptor::prime(e->modulus());
        return FieldDescriptor::eisenstein();
    }

    const Value& value() const noexcept { return value_; }
    const BigRational& as_rational() const { return std::get<BigRational>(value_); }
    const PrimeFieldElement& as_prime() const { return std::get<PrimeFieldElement>(value_); }
    const EisensteinRational& as_eisenstein() const { return std::get<EisensteinRational>(value_); }

    bool is_zero() const {
        return std::visit([](const auto& v) { return v.is_zero(); }, value_);
    }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    std::string to_string() const {
        struct Visitor {
            std::string operator()(const BigRational& r) const { return r.to_string(); }
            std::string operator()(const PrimeFieldElement& e) const { return std::to_string(e.residue()); }
            std::string operator()(const EisensteinRational& e) const {
                return "(" + e.a().to_string() + ")+(" + e.b().to_string() + ")w";
            }
        };
        return std::visit(Visitor{}, value_);
    }

private:
    Value value_;
};

namespace detail {

template <class Op>
Scalar binary(const Scalar& x, const Scalar& y, Op op, const char* what) {
    return std::visit(
        [&](const auto& a, const auto& b) -> Scalar {
            using A = std::decay_t<decltype(a)>;
            using B = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<A, B>) {
                return op(a, b);
            } else {
                throw DescriptorMismatch(std::string(what) + ": operands from " + x.field().name() + " and " +
                                         y.field().name());
            }
        },
        x.value(), y.value());
}

}  // namespace detail

inline Scalar field_add(const Scalar& x, const Scalar& y) {
    return detail::binary(x, y, [](const auto& a, const auto& b) { return a + b; }, "field_add");
}

inline Scalar field_sub(const Scalar& x, const Scalar& y) {
    return detail::binary(x, y, [](const auto& a, const auto& b) { return a - b; }, "field_sub");
}

inline Scalar field_mul(const Scalar& x, const Scalar& y) {
    return detail::binary(x, y, [](const auto& a, const auto& b) { return a * b; }, "field_mul");
}

inline Scalar field_neg(const Scalar& x) {
    return std::visit([](const auto& a) -> Scalar { return -a; }, x.value());
}

inline Scalar field_inverse(const Scalar& x) {
    return std::visit([](const auto& a) -> Scalar { return a.inverse(); }, x.value());
}

inline Scalar operator+(const Scalar& x, const Scalar& y) { return field_add(x, y); }
inline Scalar operator-(const Scalar& x, const Scalar& y) { return field_sub(x, y); }
inline Scalar operator*(const Scalar& x, const Scalar& y) { return field_mul(x, y); }
inline Scalar operator-(const Scalar& x) { return field_neg(x); }

}  // namespace harbourne
