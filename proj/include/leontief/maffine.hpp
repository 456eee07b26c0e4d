#pragma once

#include "leontief/rational.hpp"

#include <compare>
#include <ostream>
#include <string>

namespace leontief {

/// A value alpha*M + beta where M is a symbolic, arbitrarily large number.
/// Ordered lexicographically: alpha first, then beta. Closed under addition
/// and scaling by a positive rational; products of two M-terms never occur.
class MAffine {
public:
    MAffine() = default;
    MAffine(Rational alpha, Rational beta);

    static MAffine big_m() { return {Rational(1), Rational(0)}; }
    static MAffine constant(Rational beta) { return {Rational(0), std::move(beta)}; }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    bool has_m() const { return sgn(alpha_) != 0; }

    /// The value obtained by substituting `m` for M.
    Rational evaluate(const Rational& m) const { return alpha_ * m + beta_; }

    MAffine& operator+=(const MAffine& other);
    friend MAffine operator+(MAffine a, const MAffine& b) { return a += b; }

    friend bool operator==(const MAffine& a, const MAffine& b)
    {
        return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }
    friend std::strong_ordering operator<=>(const MAffine& a, const MAffine& b);

private:
    Rational alpha_{0};
    Rational beta_{0};
};

/// g * a for g > 0. Throws std::invalid_argument for g <= 0.
MAffine scale(const Rational& g, const MAffine& a);

/// Three-way lexicographic comparison.
std::strong_ordering compare(const MAffine& a, const MAffine& b);

std::string to_string(const MAffine& value);
std::ostream& operator<<(std::ostream& os, const MAffine& value);

}  // namespace leontief
