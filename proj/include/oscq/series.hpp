#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "oscq/poly.hpp"

namespace oscq {

inline int z_symbol() {
    static const int id = sym("z");
    return id;
}

// Formal power series in the deformation parameter z, truncated at a fixed
// order N: coefficients of z^0..z^N, each a Poly in the non-z symbols.
// Arithmetic is closed at order N; products discard higher degrees.
class Series {
public:
    explicit Series(int order = 6) : coeff_(order + 1) {
        if (order < 0) throw std::domain_error("Series: negative order");
    }
    Series(int order, const Poly& constant) : Series(order) { set(0, constant); }
    Series(int order, const Rat& constant) : Series(order) { set(0, Poly(constant)); }

    static Series z_power(int order, int k, const Poly& coeff = Poly(1)) {
        Series s(order);
        if (k <= order) s.set(k, coeff);
        return s;
    }

    // Split an exact polynomial (which may mention z) into z-layers.
    static Series from_poly(int order, const Poly& p) {
        Series s(order);
        auto layers = p.coefficients_in(z_symbol());
        for (int k = 0; k < static_cast<int>(layers.size()) && k <= order; ++k)
            s.set(k, layers[k]);
        return s;
    }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const Poly& at(int k) const { return coeff_.at(k); }
    void set(int k, Poly p) {
        if (p.depends_on(z_symbol()))
            throw std::domain_error("Series: coefficient mentions z");
        coeff_.at(k) = std::move(p);
    }

    bool is_zero() const {
        for (auto& c : coeff_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!coeff_[0].is_constant() || !coeff_[0].constant_value().is_one()) return false;
        for (std::size_t k = 1; k < coeff_.size(); ++k)
            if (!coeff_[k].is_zero()) return false;
        return true;
    }

    // Smallest k with a nonzero coefficient; nullopt for the zero series.
    std::optional<int> valuation() const {
        for (int k = 0; k <= order(); ++k)
            if (!coeff_[k].is_zero()) return k;
        return std::nullopt;
    }

    Series& operator+=(const Series& o) {
        check_order(o);
        for (int k = 0; k <= order(); ++k) coeff_[k] += o.coeff_[k];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_order(o);
        for (int k = 0; k <= order(); ++k) coeff_[k] -= o.coeff_[k];
        return *this;
    }
    Series operator-() const {
        Series r(order());
        for (int k = 0; k <= order(); ++k) r.coeff_[k] = -coeff_[k];
        return r;
    }
    friend Series operator+(Series a, const Series& b) { a += b; return a; }
    friend Series operator-(Series a, const Series& b) { a -= b; return a; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_order(b);
        Series r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.coeff_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order(); ++j) {
                if (b.coeff_[j].is_zero()) continue;
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
            }
        }
        return r;
    }
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }

    Series& scale(const Rat& c) {
        for (auto& p : coeff_) p.scale(c);
        return *this;
    }
    Series& scale(const Poly& c) {
        if (c.depends_on(z_symbol()))
            throw std::domain_error("Series: scale factor mentions z");
        for (auto& p : coeff_) p = p * c;
        return *this;
    }
    friend Series operator*(const Rat& c, Series s) { s.scale(c); return s; }

    bool operator==(const Series& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    // exp of a series with valuation >= 1 (finite sum at truncation order).
    Series exp() const {
        auto v = valuation();
        if (v.has_value() && *v == 0)
            throw std::domain_error("Series: exp needs valuation >= 1");
        Series r(order(), Rat(1));
        Series pw(order(), Rat(1));
        for (int k = 1; k <= order(); ++k) {
            pw *= *this;
            if (pw.is_zero()) break;
            Series t = pw;
            t.scale(inv_factorial(static_cast<unsigned>(k)));
            r += t;
        }
        return r;
    }

    // Divide by z, requires valuation >= 1. The top coefficient of the result
    // is unknown after truncation and is left at zero; callers that need
    // exactness through z^N must construct the element directly.
    Series shifted_down() const {
        if (!coeff_[0].is_zero())
            throw std::domain_error("Series: cannot divide by z, valuation 0");
        Series r(order());
        for (int k = 1; k <= order(); ++k) r.coeff_[k - 1] = coeff_[k];
        return r;
    }

    Series truncated(int new_order) const {
        Series r(new_order);
        for (int k = 0; k <= std::min(new_order, order()); ++k) r.coeff_[k] = coeff_[k];
        return r;
    }

    // Exact polynomial in z, valid when the series is known to terminate.
    Poly to_poly() const {
        Poly r;
        Poly zp(1);
        for (int k = 0; k <= order(); ++k) {
            r += coeff_[k] * zp;
            zp *= Poly::var(z_symbol());
        }
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= order(); ++k) {
            if (coeff_[k].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (k == 0) os << "(" << coeff_[k] << ")";
            else os << "(" << coeff_[k] << ")*z^" << k;
        }
        return os.str();
    }

private:
    void check_order(const Series& o) const {
        if (o.order() != order()) throw std::domain_error("Series: mixed truncation orders");
    }
    std::vector<Poly> coeff_;
};

inline std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

}  // namespace oscq
