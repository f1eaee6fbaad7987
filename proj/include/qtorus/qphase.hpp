#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qtorus/rational.hpp"

namespace qtorus {

/// Formal integer-coefficient linear combination of rational powers of q.
///
/// Exponents are arbitrary rationals: straight-path algebra only needs
/// half-integers, but reroutings through rational intersection points
/// produce finer phases in intermediate expressions. Zero coefficients are
/// never stored, so structural equality is exact symbolic equality.
class QPhasePoly {
public:
    QPhasePoly() = default;

    /// The monomial c * q^e.
    static QPhasePoly monomial(const Rat& exponent, std::int64_t coeff = 1) {
        QPhasePoly p;
        if (coeff != 0) p.terms_[exponent] = coeff;
        return p;
    }
    static QPhasePoly one() { return monomial(Rat(0)); }
    static QPhasePoly constant(std::int64_t c) { return monomial(Rat(0), c); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Rat, std::int64_t>& terms() const { return terms_; }

    std::int64_t coeff(const Rat& exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? 0 : it->second;
    }

    QPhasePoly& operator+=(const QPhasePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    QPhasePoly& operator-=(const QPhasePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend QPhasePoly operator+(QPhasePoly a, const QPhasePoly& b) { return a += b; }
    friend QPhasePoly operator-(QPhasePoly a, const QPhasePoly& b) { return a -= b; }
    friend QPhasePoly operator-(const QPhasePoly& a) {
        QPhasePoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }

    friend QPhasePoly operator*(const QPhasePoly& a, const QPhasePoly& b) {
        QPhasePoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    QPhasePoly& operator*=(const QPhasePoly& o) { return *this = *this * o; }

    friend bool operator==(const QPhasePoly&, const QPhasePoly&) = default;

    /// Terms in ascending exponent order, e.g. "-q^-3/2 + 2*q^1/2 - q".
    /// Exponent 0 renders as the bare coefficient; the zero polynomial as "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const std::int64_t mag = c < 0 ? -c : c;
            if (first)
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            first = false;
            if (e.is_zero()) {
                out += std::to_string(mag);
            } else {
                if (mag != 1) out += std::to_string(mag) + "*";
                out += e == Rat(1) ? "q" : "q^" + e.str();
            }
        }
        return out;
    }

private:
    void add_term(const Rat& e, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Rat, std::int64_t> terms_;
};

/// q^e - 1, the quantum intersection number attached to a crossing of sign e.
inline QPhasePoly q_power_minus_one(const Rat& e) {
    return QPhasePoly::monomial(e) - QPhasePoly::one();
}

}  // namespace qtorus
