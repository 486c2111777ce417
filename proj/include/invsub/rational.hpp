#ifndef INVSUB_RATIONAL_HPP
#define INVSUB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace invsub {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision integer parts. Always kept in
/// lowest terms with a positive denominator (enforced by the backing
/// boost::multiprecision::cpp_rational).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                     : boost::multiprecision::cpp_rational(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational inverse() const {
        if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string str() const { return v_.str(); }

  private:
    static Rational wrap(boost::multiprecision::cpp_rational v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }
    boost::multiprecision::cpp_rational v_;
};

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }

}  // namespace invsub

#endif
