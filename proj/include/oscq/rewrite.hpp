#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oscq {

// Reduction strategies for the rewriting loop; results must agree (confluence
// is asserted by randomized comparison in the tests).
enum class Strategy { FirstInversion, LastInversion };

// Normal-ordering engine for an algebra with a fixed generator order
// g_0 < g_1 < ... and rewriting rules  g_j g_i -> g_i g_j + [g_j, g_i]
// for j > i, where each commutator is a finite normal-ordered element.
// Canonical monomials are exponent vectors g_0^{e_0} ... g_{NG-1}^{e_{NG-1}};
// generators flagged as Laurent admit negative exponents (inverse letters).
//
// Coeff is a commutative coefficient ring (Poly or Series) supporting
// +=, *, unary -, and is_zero().
template <typename Coeff, int NG>
class RewriteEngine {
public:
    using Mono = std::array<int, NG>;
    using Element = std::map<Mono, Coeff>;

    struct Letter {
        int gen;
        int pow;  // +1 or -1; -1 only for Laurent generators
    };
    using Word = std::vector<Letter>;

    explicit RewriteEngine(Coeff one, std::array<bool, NG> laurent = {})
        : one_(std::move(one)), laurent_(laurent) {}

    static Mono unit_mono() {
        Mono m{};
        m.fill(0);
        return m;
    }
    static Mono gen_mono(int g, int e = 1) {
        Mono m = unit_mono();
        m[g] = e;
        return m;
    }

    const Coeff& one() const { return one_; }

    // Define [g_hi^{pow_hi}, g_lo^{pow_lo}] (normal-ordered right-hand side).
    // Unset pairs default to commuting.
    void set_commutator(int hi, int pow_hi, int lo, int pow_lo, Element value) {
        if (hi <= lo) throw std::domain_error("RewriteEngine: commutator must have hi > lo");
        commutators_[key(hi, pow_hi, lo, pow_lo)] = std::move(value);
        cache_.clear();
    }

    static void add_term(Element& e, const Mono& m, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = e.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) e.erase(it);
        }
    }

    static Element& add_into(Element& a, const Element& b) {
        for (auto& [m, c] : b) add_term(a, m, c);
        return a;
    }
    static Element& sub_into(Element& a, const Element& b) {
        for (auto& [m, c] : b) add_term(a, m, -c);
        return a;
    }
    static Element negated(const Element& a) {
        Element r;
        for (auto& [m, c] : a) r.emplace(m, -c);
        return r;
    }
    static Element scaled(const Element& a, const Coeff& c) {
        Element r;
        for (auto& [m, v] : a) add_term(r, m, v * c);
        return r;
    }

    Element scalar(const Coeff& c) const {
        Element r;
        add_term(r, unit_mono(), c);
        return r;
    }
    Element generator(int g) const {
        Element r;
        add_term(r, gen_mono(g), one_);
        return r;
    }
    Element monomial(const Mono& m, const Coeff& c) const {
        Element r;
        add_term(r, m, c);
        return r;
    }

    Word expand(const Mono& m) const {
        Word w;
        for (int g = 0; g < NG; ++g) {
            int e = m[g];
            if (e == 0) continue;
            if (e < 0 && !laurent_[g])
                throw std::domain_error("RewriteEngine: negative power of non-Laurent generator");
            int p = e > 0 ? 1 : -1;
            for (int k = 0; k < (e > 0 ? e : -e); ++k) w.push_back({g, p});
        }
        return w;
    }

    // Rewrite an arbitrary word into canonical normal-ordered form.
    Element normal_form(const Word& word, const Coeff& coeff,
                        Strategy strategy = Strategy::FirstInversion,
                        long fuel = kDefaultFuel) const {
        Element result;
        if (coeff.is_zero()) return result;
        std::vector<std::pair<Word, Coeff>> work;
        work.emplace_back(word, coeff);
        while (!work.empty()) {
            auto [w, c] = std::move(work.back());
            work.pop_back();
            int pos = find_inversion(w, strategy);
            if (pos < 0) {
                Mono m = unit_mono();
                for (auto& l : w) m[l.gen] += l.pow;
                add_term(result, m, c);
                continue;
            }
            if (--fuel < 0) throw std::runtime_error("RewriteEngine: rewriting fuel exhausted");

            const Letter a = w[pos], b = w[pos + 1];
            // Main term: swapped word.
            Word swapped = w;
            std::swap(swapped[pos], swapped[pos + 1]);
            work.emplace_back(std::move(swapped), c);
            // Correction terms from [a, b].
            auto it = commutators_.find(key(a.gen, a.pow, b.gen, b.pow));
            if (it == commutators_.end()) continue;
            for (auto& [mono, cc] : it->second) {
                Coeff nc = c * cc;
                if (nc.is_zero()) continue;
                Word spliced;
                spliced.reserve(w.size() + 4);
                spliced.insert(spliced.end(), w.begin(), w.begin() + pos);
                Word mid = expand(mono);
                spliced.insert(spliced.end(), mid.begin(), mid.end());
                spliced.insert(spliced.end(), w.begin() + pos + 2, w.end());
                work.emplace_back(std::move(spliced), std::move(nc));
            }
        }
        return result;
    }

    // Normal-ordered product of two canonical monomials, memoized.
    const Element& mono_product(const Mono& a, const Mono& b) const {
        auto it = cache_.find({a, b});
        if (it != cache_.end()) return it->second;
        Word w = expand(a);
        Word wb = expand(b);
        w.insert(w.end(), wb.begin(), wb.end());
        Element r = normal_form(w, one_);
        return cache_.emplace(std::make_pair(a, b), std::move(r)).first->second;
    }

    Element multiply(const Element& a, const Element& b) const {
        Element r;
        for (auto& [ma, ca] : a)
            for (auto& [mb, cb] : b) {
                Coeff c = ca * cb;
                if (c.is_zero()) continue;
                for (auto& [m, cc] : mono_product(ma, mb)) add_term(r, m, c * cc);
            }
        return r;
    }

    Element commutator(const Element& a, const Element& b) const {
        Element r = multiply(a, b);
        sub_into(r, multiply(b, a));
        return r;
    }

    Element power(const Element& a, int k) const {
        Element r = scalar(one_);
        for (int i = 0; i < k; ++i) r = multiply(r, a);
        return r;
    }

private:
    static long constexpr kDefaultFuel = 2'000'000;

    static std::uint64_t key(int hi, int pow_hi, int lo, int pow_lo) {
        auto enc = [](int p) { return p > 0 ? 0u : 1u; };
        return (static_cast<std::uint64_t>(hi) << 24) | (enc(pow_hi) << 16) |
               (static_cast<std::uint64_t>(lo) << 8) | enc(pow_lo);
    }

    int find_inversion(const Word& w, Strategy s) const {
        if (w.size() < 2) return -1;
        if (s == Strategy::FirstInversion) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i].gen > w[i + 1].gen) return static_cast<int>(i);
        } else {
            for (std::size_t i = w.size() - 1; i-- > 0;)
                if (w[i].gen > w[i + 1].gen) return static_cast<int>(i);
        }
        return -1;
    }

    Coeff one_;
    std::array<bool, NG> laurent_;
    std::map<std::uint64_t, Element> commutators_;
    mutable std::map<std::pair<Mono, Mono>, Element> cache_;
};

// K-fold tensor power of the algebra handled by a RewriteEngine, multiplied
// slotwise: (a1 x a2)(b1 x b2) = a1 b1 x a2 b2.
template <typename Coeff, int NG, int K>
class TensorAlgebra {
public:
    using Engine = RewriteEngine<Coeff, NG>;
    using Mono = typename Engine::Mono;
    using Key = std::array<Mono, K>;
    using Element = std::map<Key, Coeff>;

    explicit TensorAlgebra(const Engine& engine) : engine_(&engine) {}

    const Engine& engine() const { return *engine_; }

    static Key unit_key() {
        Key k;
        k.fill(Engine::unit_mono());
        return k;
    }

    static void add_term(Element& e, const Key& k, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = e.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) e.erase(it);
        }
    }
    static Element& add_into(Element& a, const Element& b) {
        for (auto& [k, c] : b) add_term(a, k, c);
        return a;
    }
    static Element& sub_into(Element& a, const Element& b) {
        for (auto& [k, c] : b) add_term(a, k, -c);
        return a;
    }
    static Element scaled(const Element& a, const Coeff& c) {
        Element r;
        for (auto& [k, v] : a) add_term(r, k, v * c);
        return r;
    }

    Element scalar(const Coeff& c) const {
        Element r;
        add_term(r, unit_key(), c);
        return r;
    }
    Element one() const { return scalar(engine_->one()); }

    // Place a single-slot element into the given slot of the identity tensor.
    Element embed(const typename Engine::Element& x, int slot) const {
        Element r;
        for (auto& [m, c] : x) {
            Key k = unit_key();
            k[slot] = m;
            add_term(r, k, c);
        }
        return r;
    }

    Element multiply(const Element& a, const Element& b) const {
        Element r;
        for (auto& [ka, ca] : a)
            for (auto& [kb, cb] : b) {
                Coeff c = ca * cb;
                if (c.is_zero()) continue;
                cross_accumulate(r, ka, kb, c);
            }
        return r;
    }

    Element commutator(const Element& a, const Element& b) const {
        Element r = multiply(a, b);
        sub_into(r, multiply(b, a));
        return r;
    }

    Element power(const Element& a, int k) const {
        Element r = one();
        for (int i = 0; i < k; ++i) r = multiply(r, a);
        return r;
    }

    // Swap tensor slots (only meaningful for K = 2, or a permutation for K = 3).
    Element permuted(const Element& a, const std::array<int, K>& perm) const {
        Element r;
        for (auto& [k, c] : a) {
            Key nk;
            for (int s = 0; s < K; ++s) nk[perm[s]] = k[s];
            add_term(r, nk, c);
        }
        return r;
    }

private:
    // Accumulate the slotwise product (normal-ordering each slot) into r.
    void cross_accumulate(Element& r, const Key& ka, const Key& kb, const Coeff& c) const {
        std::vector<std::pair<Key, Coeff>> partial;
        partial.emplace_back(unit_key(), c);
        for (int s = 0; s < K; ++s) {
            const auto& prod = engine_->mono_product(ka[s], kb[s]);
            std::vector<std::pair<Key, Coeff>> next;
            next.reserve(partial.size() * prod.size());
            for (auto& [k, cc] : partial)
                for (auto& [m, cm] : prod) {
                    Coeff nc = cc * cm;
                    if (nc.is_zero()) continue;
                    Key nk = k;
                    nk[s] = m;
                    next.emplace_back(std::move(nk), std::move(nc));
                }
            partial = std::move(next);
        }
        for (auto& [k, cc] : partial) add_term(r, k, cc);
    }

    const Engine* engine_;
};

}  // namespace oscq
