#pragma once

// Exact scalars: arbitrary-precision integers and rationals, and phases in Q/Z.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "finsym/error.hpp"

namespace finsym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "a/b" with b > 0; integers are written "a/1".
inline std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "a", "a/b" or "-a/b".
inline Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw InputError("zero denominator in '" + text + "'");
        }
        return Rational(num, den);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("not a rational number: '" + text + "'");
    }
}

/// An element of Q/Z, stored as a reduced fraction num/den with 0 <= num < den.
class Phase {
public:
    constexpr Phase() = default;

    Phase(std::int64_t num, std::int64_t den) {
        if (den == 0) {
            throw InputError("phase with zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        num %= den;
        if (num < 0) {
            num += den;
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    static Phase from_rational(const Rational& r) {
        const Integer den = boost::multiprecision::denominator(r);
        Integer num = boost::multiprecision::numerator(r) % den;
        if (num < 0) {
            num += den;
        }
        return Phase(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
    }

    static Phase parse(const std::string& text) { return from_rational(parse_rational(text)); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    /// Order of the phase as an element of Q/Z.
    std::int64_t order() const { return den_; }

    Phase operator+(const Phase& o) const {
        const std::int64_t l = std::lcm(den_, o.den_);
        return Phase(num_ * (l / den_) + o.num_ * (l / o.den_), l);
    }
    Phase operator-() const { return Phase(-num_, den_); }
    Phase operator-(const Phase& o) const { return *this + (-o); }
    Phase operator*(std::int64_t k) const {
        const __int128 prod = static_cast<__int128>(num_) * (k % den_);
        return Phase(static_cast<std::int64_t>(prod % den_), den_);
    }
    friend Phase operator*(std::int64_t k, const Phase& p) { return p * k; }
    Phase& operator+=(const Phase& o) { return *this = *this + o; }

    bool operator==(const Phase&) const = default;
    auto operator<=>(const Phase& o) const {
        return num_ * o.den_ <=> o.num_ * den_;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << p.str(); }

}  // namespace finsym
