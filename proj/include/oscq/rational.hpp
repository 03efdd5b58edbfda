#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace oscq {

// Arbitrary-precision rational in canonical reduced form (den > 0, gcd = 1).
// Thin eager wrapper around GMP's mpq_class: gmpxx expression templates are
// deliberately kept out of the public surface so Rat composes cleanly with
// Eigen matrices and our own containers.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const std::string& text) : v_(text) { v_.canonicalize(); }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_), NoCanon{}); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    // "n" or "n/d", canonical form.
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

    static Rat factorial(unsigned n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rat(mpq_class(f), NoCanon{});
    }

private:
    struct NoCanon {};
    Rat(mpq_class q, NoCanon) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rat inv_factorial(unsigned n) { return Rat(1) / Rat::factorial(n); }

}  // namespace oscq
