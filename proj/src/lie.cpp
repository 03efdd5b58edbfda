#include "oscq/lie.hpp"

#include <fstream>
#include <sstream>

namespace oscq {

LieAlgebra LieAlgebra::make(std::vector<std::string> basis_names,
                            const std::map<std::pair<int, int>, std::vector<Rat>>& brackets) {
    LieAlgebra L;
    L.dim_ = static_cast<int>(basis_names.size());
    L.names_ = std::move(basis_names);
    L.c_.assign(static_cast<std::size_t>(L.dim_) * L.dim_ * L.dim_, Rat(0));
    auto at = [&L](int i, int j, int k) -> Rat& {
        return L.c_[((static_cast<std::size_t>(i) * L.dim_) + j) * L.dim_ + k];
    };
    for (auto& [ij, coeffs] : brackets) {
        auto [i, j] = ij;
        if (i < 0 || j < 0 || i >= L.dim_ || j >= L.dim_)
            throw std::out_of_range("LieAlgebra: bracket index out of range");
        if (i >= j) throw std::domain_error("LieAlgebra: brackets must be given with i < j");
        if (static_cast<int>(coeffs.size()) != L.dim_)
            throw std::domain_error("LieAlgebra: bracket coefficient size mismatch");
        for (int k = 0; k < L.dim_; ++k) {
            at(i, j, k) = coeffs[k];
            at(j, i, k) = -coeffs[k];
        }
    }
    L.validate();
    return L;
}

void LieAlgebra::validate() const {
    // Antisymmetry is built in; check Jacobi on all triples by brute force:
    // [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj] = 0.
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                for (int m = 0; m < dim_; ++m) {
                    Rat total(0);
                    for (int l = 0; l < dim_; ++l) {
                        total += c(i, j, l) * c(l, k, m);
                        total += c(j, k, l) * c(l, i, m);
                        total += c(k, i, l) * c(l, j, m);
                    }
                    if (!total.is_zero())
                        throw JacobiViolation(i, j, k,
                                              names_[i] + ", " + names_[j] + ", " + names_[k]);
                }
            }
}

VecR LieAlgebra::bracket(int i, int j) const {
    VecR v(dim_);
    for (int k = 0; k < dim_; ++k) v(k) = c(i, j, k);
    return v;
}

int LieAlgebra::index_of(const std::string& name) const {
    for (int i = 0; i < dim_; ++i)
        if (names_[i] == name) return i;
    throw std::out_of_range("LieAlgebra: no basis element named " + name);
}

const LieAlgebra& LieAlgebra::h4() {
    static const LieAlgebra L = [] {
        std::map<std::pair<int, int>, std::vector<Rat>> b;
        // basis order: N=0, A+=1, A-=2, M=3
        b[{0, 1}] = {Rat(0), Rat(1), Rat(0), Rat(0)};   // [N, A+] = A+
        b[{0, 2}] = {Rat(0), Rat(0), Rat(-1), Rat(0)};  // [N, A-] = -A-
        b[{1, 2}] = {Rat(0), Rat(0), Rat(0), Rat(-1)};  // [A+, A-] = -M
        return make({"N", "A+", "A-", "M"}, b);
    }();
    return L;
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') { ++line; col = 1; }
        else ++col;
        ++pos;
    }
    void skip_spaces() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }
};

std::string read_token(Cursor& c) {
    c.skip_spaces();
    std::string t;
    while (!c.done()) {
        char ch = c.peek();
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == ',' || ch == '#') break;
        t.push_back(ch);
        c.advance();
    }
    return t;
}

bool looks_like_rational(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    bool digit = false;
    for (; i < t.size(); ++i) {
        if (t[i] >= '0' && t[i] <= '9') { digit = true; continue; }
        if (t[i] == '/') continue;
        return false;
    }
    return digit;
}

}  // namespace

LieAlgebra LieAlgebra::parse(const std::string& text) {
    std::vector<std::string> basis;
    std::map<std::string, int> index;
    std::map<std::pair<int, int>, std::vector<Rat>> brackets;

    Cursor c{text};
    while (!c.done()) {
        c.skip_spaces();
        if (c.done()) break;
        if (c.peek() == '\n') { c.advance(); continue; }
        if (c.peek() == '#') {
            while (!c.done() && c.peek() != '\n') c.advance();
            continue;
        }
        int line = c.line, col = c.col;
        std::string head = read_token(c);
        if (head == "basis:") {
            if (!basis.empty()) throw ParseError(line, col, "duplicate basis line");
            while (true) {
                c.skip_spaces();
                if (c.done() || c.peek() == '\n' || c.peek() == '#') break;
                std::string name = read_token(c);
                if (name.empty()) break;
                if (index.count(name)) throw ParseError(line, col, "duplicate basis name " + name);
                index[name] = static_cast<int>(basis.size());
                basis.push_back(name);
            }
            if (basis.empty()) throw ParseError(line, col, "empty basis");
        } else if (head == "bracket:") {
            if (basis.empty()) throw ParseError(line, col, "bracket before basis line");
            std::string lhs1 = read_token(c), lhs2 = read_token(c), arrow = read_token(c);
            if (lhs1.empty() || lhs2.empty()) throw ParseError(line, col, "expected two basis names");
            if (arrow != "->") throw ParseError(c.line, c.col, "expected '->'");
            auto it1 = index.find(lhs1), it2 = index.find(lhs2);
            if (it1 == index.end()) throw ParseError(line, col, "unknown basis name " + lhs1);
            if (it2 == index.end()) throw ParseError(line, col, "unknown basis name " + lhs2);
            int i = it1->second, j = it2->second;
            if (i == j) throw ParseError(line, col, "bracket of an element with itself is zero");
            std::vector<Rat> coeffs(basis.size(), Rat(0));
            while (true) {
                int tline = c.line, tcol = c.col;
                std::string coef = read_token(c);
                if (coef.empty()) throw ParseError(tline, tcol, "expected rational coefficient");
                if (!looks_like_rational(coef))
                    throw ParseError(tline, tcol, "bad rational '" + coef + "'");
                std::string target = read_token(c);
                auto t = index.find(target);
                if (t == index.end())
                    throw ParseError(c.line, c.col, "unknown basis name '" + target + "'");
                coeffs[t->second] += Rat(coef);
                c.skip_spaces();
                if (!c.done() && c.peek() == ',') { c.advance(); continue; }
                break;
            }
            Rat sign(1);
            std::pair<int, int> key(i, j);
            if (i > j) { key = {j, i}; sign = Rat(-1); }
            auto [slot, fresh] = brackets.try_emplace(key, std::vector<Rat>(basis.size(), Rat(0)));
            if (!fresh) throw ParseError(line, col, "duplicate bracket for this pair");
            for (std::size_t k = 0; k < coeffs.size(); ++k) slot->second[k] = sign * coeffs[k];
        } else {
            throw ParseError(line, col, "expected 'basis:' or 'bracket:', got '" + head + "'");
        }
    }
    if (basis.empty()) throw ParseError(1, 1, "missing basis line");
    return make(basis, brackets);
}

LieAlgebra LieAlgebra::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Lie algebra file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace oscq
