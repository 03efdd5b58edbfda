#include "oscq/poly.hpp"

#include <iostream>

namespace oscq {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::optional<Poly> reduce_by(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("reduce_by: zero divisor");
    Poly rem = p;
    Poly quot;
    auto [lm_q, lc_q] = q.leading_term();
    while (!rem.is_zero()) {
        auto [lm_r, lc_r] = rem.leading_term();
        if (!lm_r.divisible_by(lm_q)) return std::nullopt;
        Poly t = Poly::term(lc_r / lc_q, lm_r / lm_q);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest-degree terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            bool inner = true;
            for (auto& [s, e] : m.factors) {
                if (!inner) os << "*";
                inner = false;
                os << sym_name(s);
                if (e != 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace oscq
