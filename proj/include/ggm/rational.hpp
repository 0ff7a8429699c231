#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "ggm/errors.hpp"

namespace ggm {

// Exact arbitrary-precision integer. All lattice-level arithmetic runs on
// these; doubles appear only in the numeric (metric synthesis) layer.
using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division; denominator must be nonzero. C++ '/' truncates toward zero,
// so correct downward when signs differ and the division is inexact.
inline Int floor_div(const Int& num, const Int& den) {
    Int q = num / den;
    Int r = num - q * den;
    if (r != 0 && ((r < 0) != (den < 0))) q -= 1;
    return q;
}

// Nonnegative residue num mod den, den > 0.
inline Int mod_floor(const Int& num, const Int& den) {
    return num - floor_div(num, den) * den;
}

// Extended Euclid: returns g = gcd(a,b) and x, y with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, xx = 0;
    Int old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// Inverse of a modulo m (m > 1, gcd(a,m) = 1), reduced into [0, m).
inline Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = ext_gcd(mod_floor(a, m), m, x, y);
    if (g != 1) raise(errc::not_coprime, "no inverse modulo " + m.str());
    return mod_floor(x, m);
}

// Reduced rational with positive denominator; value semantics throughout.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}          // NOLINT(runtime/explicit)
    Rational(long long n) : num_(n), den_(1) {}           // NOLINT(runtime/explicit)
    Rational(const Int& n, const Int& d) : num_(n), den_(d) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) raise(errc::invalid_parameter, "division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Int floor() const { return floor_div(num_, den_); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    // "a" when integral, "a/b" otherwise.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    // Accepts "a", "a/b", and plain decimals like "-1.25".
    static Rational parse(std::string_view s) {
        if (s.empty()) raise(errc::parse_error, "empty rational literal");
        std::string text(s);
        auto slash = text.find('/');
        try {
            if (slash != std::string::npos) {
                Int n(text.substr(0, slash));
                Int d(text.substr(slash + 1));
                if (d == 0) raise(errc::parse_error, "zero denominator in '" + text + "'");
                return Rational(n, d);
            }
            auto dot = text.find('.');
            if (dot == std::string::npos) return Rational(Int(text));
            std::string head = text.substr(0, dot);
            std::string frac = text.substr(dot + 1);
            if (frac.find_first_not_of("0123456789") != std::string::npos)
                raise(errc::parse_error, "bad decimal '" + text + "'");
            bool neg = !head.empty() && head[0] == '-';
            if (head == "-" || head == "+" || head.empty()) head += "0";
            Int scale = 1;
            for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
            Int whole(head);
            Int digits = frac.empty() ? Int(0) : Int(frac);
            Int n = ggm::abs(whole) * scale + digits;
            if (neg) n = -n;
            return Rational(n, scale);
        } catch (const error&) {
            throw;
        } catch (const std::exception&) {
            raise(errc::parse_error, "bad rational literal '" + text + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    struct unchecked {};
    Rational(unchecked, const Int& n, const Int& d) : num_(n), den_(d) {}

    void reduce() {
        if (den_ == 0) raise(errc::invalid_parameter, "zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = ggm::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    Int num_;
    Int den_;
};

inline Rational sq(const Rational& r) { return r * r; }

}  // namespace ggm
