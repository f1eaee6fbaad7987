#pragma once

#include <map>
#include <string>
#include <utility>

#include "qtorus/geometry.hpp"
#include "qtorus/qphase.hpp"
#include "qtorus/quantum_plane.hpp"

namespace qtorus {

/// Trace symbol T(m,n) for the free homotopy class with lift endpoint
/// (m,n). Since tr diag(X, X^-1) = tr diag(X^-1, X), the classes (m,n) and
/// (-m,-n) carry the same symbol; the stored representative is the
/// lexicographically nonnegative one (m > 0, or m = 0 and n >= 0).
class WilsonSymbol {
public:
    explicit WilsonSymbol(LatticePoint cls) : class_(canonical(cls)) {}
    WilsonSymbol(std::int64_t m, std::int64_t n) : WilsonSymbol(LatticePoint{m, n}) {}

    static LatticePoint canonical(const LatticePoint& p) {
        if (p.x < 0 || (p.x == 0 && p.y < 0)) return -p;
        return p;
    }

    const LatticePoint& cls() const { return class_; }

    friend bool operator==(const WilsonSymbol&, const WilsonSymbol&) = default;
    friend auto operator<=>(const WilsonSymbol&, const WilsonSymbol&) = default;

    std::string str() const {
        return "T(" + std::to_string(class_.x) + "," + std::to_string(class_.y) + ")";
    }

private:
    LatticePoint class_;
};

/// Normal form of a Wilson loop along a PL path: the area phase against
/// the straight representative plus the canonical trace symbol, so that
/// T(path) = q^{exponent} * T(symbol). The (m,n) -> (-m,-n)
/// canonicalization carries no extra phase.
struct WilsonNormalForm {
    Rat exponent;
    WilsonSymbol symbol;

    std::string str() const {
        if (exponent.is_zero()) return symbol.str();
        return "q^" + exponent.str() + " * " + symbol.str();
    }
};

inline WilsonNormalForm wilson_normal_form(const PLPath& p) {
    const LatticePoint d = p.displacement();
    PLPath ref = straight(d.x, d.y);
    if (!(p.start() == ref.start())) ref = path_translate(ref, p.start().to_lattice());
    return {signed_area_between(p, ref), WilsonSymbol(d)};
}

/// Formal QPhasePoly-weighted sum of Wilson symbols. Identically-zero
/// coefficient polynomials are dropped, so structural equality of the term
/// maps is exact symbolic equality.
class BracketExpression {
public:
    BracketExpression() = default;

    static BracketExpression term(const WilsonSymbol& s, QPhasePoly coeff) {
        BracketExpression e;
        e.add(s, std::move(coeff));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<WilsonSymbol, QPhasePoly>& terms() const { return terms_; }

    QPhasePoly coeff(const WilsonSymbol& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? QPhasePoly() : it->second;
    }

    void add(const WilsonSymbol& s, const QPhasePoly& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(s, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BracketExpression& operator+=(const BracketExpression& o) {
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    BracketExpression& operator-=(const BracketExpression& o) {
        for (const auto& [s, c] : o.terms_) add(s, -c);
        return *this;
    }
    friend BracketExpression operator+(BracketExpression a, const BracketExpression& b) {
        return a += b;
    }
    friend BracketExpression operator-(BracketExpression a, const BracketExpression& b) {
        return a -= b;
    }
    friend BracketExpression operator-(const BracketExpression& a) {
        BracketExpression r;
        for (const auto& [s, c] : a.terms_) r.terms_[s] = -c;
        return r;
    }
    friend BracketExpression operator*(const QPhasePoly& scalar, const BracketExpression& e) {
        BracketExpression r;
        for (const auto& [s, c] : e.terms_) r.add(s, scalar * c);
        return r;
    }

    friend bool operator==(const BracketExpression&, const BracketExpression&) = default;

    /// Canonical rendering: terms ascending by symbol class, each as
    /// "(poly)*T(m,n)", joined with " + "; the empty expression is "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")*" + s.str();
        }
        return out;
    }

private:
    std::map<WilsonSymbol, QPhasePoly> terms_;
};

}  // namespace qtorus
