#pragma once

#include <optional>
#include <span>

#include "supercluster/super_poly.hpp"

namespace supercluster {

/// Fraction num/den with den even and of nonzero body. Not reduced; compare
/// with equals_rational.
class SuperRational {
public:
    SuperRational() = default;
    explicit SuperRational(SuperLaurentPoly num);
    SuperRational(SuperLaurentPoly num, SuperLaurentPoly den);

    static SuperRational zero(Signature sig);
    static SuperRational one(Signature sig);

    const SuperLaurentPoly& num() const { return num_; }
    const SuperLaurentPoly& den() const { return den_; }
    Signature signature() const { return num_.signature(); }
    bool is_zero() const { return num_.is_zero(); }

    /// Clears the denominator when it is a unit, or when it divides the numerator.
    SuperRational simplified() const;
    /// den/num; the numerator must be even with nonzero body.
    SuperRational inverse() const;
    SuperRational grade_involution() const;

    SuperRational operator-() const;
    friend SuperRational operator+(const SuperRational& a, const SuperRational& b);
    friend SuperRational operator-(const SuperRational& a, const SuperRational& b);
    friend SuperRational operator*(const SuperRational& a, const SuperRational& b);
    SuperRational& operator+=(const SuperRational& o) { return *this = *this + o; }
    SuperRational& operator-=(const SuperRational& o) { return *this = *this - o; }
    SuperRational& operator*=(const SuperRational& o) { return *this = *this * o; }

private:
    SuperLaurentPoly num_;
    SuperLaurentPoly den_;
};

/// a.num * b.den == b.num * a.den.
bool equals_rational(const SuperRational& a, const SuperRational& b);

/// Homomorphic image of p under x_i -> images[i]; odd generators map to
/// themselves in the target signature. Throws SubstitutionError for a missing
/// image of a variable that occurs.
SuperRational substitute(const SuperLaurentPoly& p, std::span<const std::optional<SuperRational>> images,
                         Signature target);

} // namespace supercluster
