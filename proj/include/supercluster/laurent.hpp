#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace supercluster {

using Integer = boost::multiprecision::cpp_int;

/// Maximum number of even (Laurent) variables in one signature.
inline constexpr std::size_t kMaxEven = 16;

/// Exponent vector; slots past the ring's variable count are always zero.
using Exponents = std::array<std::int32_t, kMaxEven>;

struct LaurentTerm {
    Exponents x{};
    Integer c;
};

/// Commutative Laurent polynomial over the integers in a fixed number of
/// variables. Terms are kept sorted lexicographically by exponent with no zero
/// coefficients, so structural equality is mathematical equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars);

    static LaurentPoly constant(std::size_t nvars, const Integer& c);
    static LaurentPoly monomial(std::size_t nvars, const Exponents& x, const Integer& c = 1);
    static LaurentPoly variable(std::size_t nvars, std::size_t index, std::int32_t power = 1);
    /// Sorts, merges duplicate exponents, and drops zeros.
    static LaurentPoly from_terms(std::size_t nvars, std::vector<LaurentTerm> terms);

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    std::span<const LaurentTerm> terms() const { return terms_; }
    /// Sorted, duplicate-free and without zero coefficients.
    bool is_canonical() const;

    /// Componentwise minimum over all terms (zero vector for the zero polynomial).
    Exponents min_exponents() const;
    Exponents max_exponents() const;
    /// Multiplies by the monomial x^by.
    LaurentPoly shifted(const Exponents& by) const;
    LaurentPoly scaled(const Integer& k) const;
    LaurentPoly pow(unsigned e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    friend class TermAccumulator;
    std::size_t nvars_ = 0;
    std::vector<LaurentTerm> terms_;
};

/// Exact quotient p / d in the Laurent ring; throws NotDivisible when none exists.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d);

/// Lexicographic comparison of the first n exponents.
bool exponents_less(const Exponents& a, const Exponents& b, std::size_t n);

/// Hash-keyed accumulator used by the product kernels. Collects (exponent,
/// coefficient) contributions and emits a canonical LaurentPoly.
class TermAccumulator {
public:
    TermAccumulator(std::size_t nvars, std::size_t expected_terms);

    void add(const Exponents& x, const Integer& c);
    void sub(const Exponents& x, const Integer& c);
    /// this += sign * a * b, where sign is +1 or -1.
    void add_product(const LaurentPoly& a, const LaurentPoly& b, int sign);
    /// this += a * x^shift * k.
    void add_shifted(const LaurentPoly& a, const Exponents& shift, const Integer& k);

    LaurentPoly take();

private:
    struct Slot {
        Exponents x{};
        Integer c;
        bool used = false;
    };
    Slot& slot_for(const Exponents& x);
    void grow();

    std::size_t nvars_;
    std::vector<Slot> slots_;
    std::size_t used_ = 0;
};

} // namespace supercluster
