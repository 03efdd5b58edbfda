#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oscq/rational.hpp"
#include "oscq/symbols.hpp"

namespace oscq {

// Commutative monomial: sorted (symbol id, exponent > 0) pairs.
struct Mono {
    std::vector<std::pair<int, int>> factors;

    bool is_one() const { return factors.empty(); }
    int total_degree() const {
        int d = 0;
        for (auto& [s, e] : factors) d += e;
        return d;
    }
    int degree_in(int symbol) const {
        for (auto& [s, e] : factors)
            if (s == symbol) return e;
        return 0;
    }

    Mono operator*(const Mono& o) const {
        Mono r;
        r.factors.reserve(factors.size() + o.factors.size());
        auto a = factors.begin(), b = o.factors.begin();
        while (a != factors.end() && b != o.factors.end()) {
            if (a->first < b->first) r.factors.push_back(*a++);
            else if (b->first < a->first) r.factors.push_back(*b++);
            else {
                r.factors.emplace_back(a->first, a->second + b->second);
                ++a; ++b;
            }
        }
        r.factors.insert(r.factors.end(), a, factors.end());
        r.factors.insert(r.factors.end(), b, o.factors.end());
        return r;
    }

    bool divisible_by(const Mono& o) const {
        for (auto& [s, e] : o.factors)
            if (degree_in(s) < e) return false;
        return true;
    }

    // Requires divisible_by(o).
    Mono operator/(const Mono& o) const {
        Mono r;
        for (auto& [s, e] : factors) {
            int d = e - o.degree_in(s);
            if (d > 0) r.factors.emplace_back(s, d);
        }
        return r;
    }

    bool operator==(const Mono& o) const { return factors == o.factors; }
};

// Graded lexicographic order (a genuine monomial order: multiplicative and a
// well-order), used both as the term-map comparator and for leading-term
// selection in exact division.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        auto i = a.factors.begin(), j = b.factors.begin();
        while (i != a.factors.end() && j != b.factors.end()) {
            if (i->first != j->first) return i->first > j->first;  // smaller id = bigger power of earlier var
            if (i->second != j->second) return i->second < j->second;
            ++i; ++j;
        }
        return i == a.factors.end() && j != b.factors.end();
    }
};

// Sparse exact multivariate polynomial over Rat. No zero terms stored.
class Poly {
public:
    using TermMap = std::map<Mono, Rat, GrlexLess>;

    Poly() = default;
    Poly(long n) { if (n != 0) terms_.emplace(Mono{}, Rat(n)); }
    Poly(const Rat& c) { if (!c.is_zero()) terms_.emplace(Mono{}, c); }

    static Poly var(int symbol, int exp = 1) {
        Poly p;
        if (exp < 0) throw std::domain_error("Poly: negative exponent");
        if (exp == 0) return Poly(1);
        Mono m;
        m.factors.emplace_back(symbol, exp);
        p.terms_.emplace(std::move(m), Rat(1));
        return p;
    }
    static Poly var(const std::string& name, int exp = 1) { return var(sym(name), exp); }
    static Poly term(const Rat& c, const Mono& m) {
        Poly p;
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::domain_error("Poly: not constant");
        return terms_.begin()->second;
    }
    int total_degree() const {
        return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Mono& m, const Rat& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly& scale(const Rat& c) {
        if (c.is_zero()) { terms_.clear(); return *this; }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Poly operator*(const Rat& c, Poly p) { p.scale(c); return p; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Leading term w.r.t. grlex.
    std::pair<Mono, Rat> leading_term() const {
        if (terms_.empty()) throw std::domain_error("Poly: leading term of zero");
        return *terms_.rbegin();
    }

    // Monic w.r.t. the grlex leading coefficient; canonical representative of
    // the class {nonzero rational multiples of *this}.
    Poly monic() const {
        if (is_zero()) return Poly();
        Poly r = *this;
        r.scale(Rat(1) / leading_term().second);
        return r;
    }

    // Substitute symbol -> polynomial value.
    Poly substituted(int symbol, const Poly& value) const {
        Poly r;
        for (auto& [m, c] : terms_) {
            int e = m.degree_in(symbol);
            Mono rest;
            for (auto& f : m.factors)
                if (f.first != symbol) rest.factors.push_back(f);
            Poly piece = Poly::term(c, rest);
            for (int k = 0; k < e; ++k) piece *= value;
            r += piece;
        }
        return r;
    }
    // Simultaneous substitution (targets are not re-substituted).
    Poly substituted(const std::vector<std::pair<int, Poly>>& subs) const {
        Poly r;
        for (auto& [m, c] : terms_) {
            Poly piece(c);
            for (auto& [s, e] : m.factors) {
                const Poly* v = nullptr;
                for (auto& [sub_s, sub_v] : subs)
                    if (sub_s == s) { v = &sub_v; break; }
                if (v) {
                    for (int k = 0; k < e; ++k) piece *= *v;
                } else {
                    piece *= Poly::var(s, e);
                }
            }
            r += piece;
        }
        return r;
    }

    Rat evaluated(const std::map<int, Rat>& values) const {
        Rat total(0);
        for (auto& [m, c] : terms_) {
            Rat t = c;
            for (auto& [s, e] : m.factors) {
                auto it = values.find(s);
                if (it == values.end()) throw std::domain_error("Poly: unbound symbol " + sym_name(s));
                for (int k = 0; k < e; ++k) t *= it->second;
            }
            total += t;
        }
        return total;
    }

    // Collect coefficients of powers of one symbol: result[k] is the
    // coefficient polynomial of symbol^k (free of that symbol).
    std::vector<Poly> coefficients_in(int symbol) const {
        std::vector<Poly> out;
        for (auto& [m, c] : terms_) {
            int e = m.degree_in(symbol);
            Mono rest;
            for (auto& f : m.factors)
                if (f.first != symbol) rest.factors.push_back(f);
            if (static_cast<int>(out.size()) <= e) out.resize(e + 1);
            out[e].add_term(rest, c);
        }
        return out;
    }

    bool depends_on(int symbol) const {
        for (auto& [m, c] : terms_)
            if (m.degree_in(symbol) > 0) return true;
        return false;
    }

    Poly derivative(int symbol) const {
        Poly r;
        for (auto& [m, c] : terms_) {
            int e = m.degree_in(symbol);
            if (e == 0) continue;
            Mono rest;
            for (auto& f : m.factors) {
                if (f.first == symbol) {
                    if (f.second > 1) rest.factors.emplace_back(f.first, f.second - 1);
                } else {
                    rest.factors.push_back(f);
                }
            }
            r.add_term(rest, Rat(static_cast<long>(e)) * c);
        }
        return r;
    }

    std::string str() const;

private:
    TermMap terms_;
};

// Exact quotient p / q in the polynomial ring, or nullopt when p is not a
// multiple of q. Throws on q = 0.
std::optional<Poly> reduce_by(const Poly& p, const Poly& q);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace oscq
