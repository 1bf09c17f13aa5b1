#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supercluster/osp.hpp"
#include "supercluster/poly_io.hpp"
#include "supercluster/seed.hpp"
#include "supercluster/super_poly.hpp"

namespace supercluster {

/// Superfrieze of width m. Even entries f(i,j) sit on row j - i, odd entries
/// phi(a,b) (a, b both integers or both half-integers) on the odd row between
/// even rows b - a - 1 and b - a. Rows -1 and m are 1's, rows -2 and m + 1 and
/// odd rows -1 and m + 1 are 0's.
///
/// Half-integer indices are doubled in the API: phi2(2a, 2b). Diagonal i holds
/// f(i, i..i+m-1), phi(i, i..i+m) and phi(i+1/2, i+1/2..i+m+1/2).
class SuperFrieze {
public:
    SuperFrieze() = default;
    SuperFrieze(std::size_t width, Signature sig);

    std::size_t width() const { return m_; }
    /// Glide period m + 3.
    std::size_t period() const { return m_ + 3; }
    Signature signature() const { return sig_; }
    long first_diagonal() const { return lo_; }
    long last_diagonal() const { return hi_; }

    /// Entry value, including the implicit boundary rows; nullopt when the
    /// position lies outside the stored diagonals.
    std::optional<SuperLaurentPoly> f(long i, long j) const;
    std::optional<SuperLaurentPoly> phi2(long a2, long b2) const;
    /// Throwing versions (IndexOutOfRange).
    SuperLaurentPoly f_at(long i, long j) const;
    SuperLaurentPoly phi2_at(long a2, long b2) const;

    void set_f(long i, long j, SuperLaurentPoly v);
    void set_phi2(long a2, long b2, SuperLaurentPoly v);

    const std::map<std::pair<long, long>, SuperLaurentPoly>& even_entries() const { return f_; }
    const std::map<std::pair<long, long>, SuperLaurentPoly>& odd_entries() const { return phi_; }

private:
    void extend(long i);

    std::size_t m_ = 0;
    Signature sig_;
    long lo_ = 0;
    long hi_ = -1;
    std::map<std::pair<long, long>, SuperLaurentPoly> f_;
    std::map<std::pair<long, long>, SuperLaurentPoly> phi_;
};

/// Fills diagonals -backward..forward from diagonal 0, where
/// f(0, k-1) = even[k-1] (k = 1..m) and phi(1/2, k-1/2) = odd[k-1] (k = 1..m+1).
/// Forward: f(i+1,j) f(i,j-1) = 1 + f(i+1,j-1) f(i,j) + phi(i+1/2,j+1/2) phi(i+1/2,j-1/2)
/// and phi(i+3/2,q) = phi(i+1/2,q) - f(i+1,q-1/2) phi(i+1/2,i+1/2); backward
/// inverts both. Integer-indexed odd entries come from
/// phi(i,q) = f(i,q-1) phi(i+1/2,q+1/2) - f(i,q) phi(i+1/2,q-1/2).
/// Every division is exact (NotDivisible otherwise).
SuperFrieze generate(std::size_t m, const std::vector<SuperLaurentPoly>& even, const std::vector<SuperLaurentPoly>& odd,
                     long backward, long forward);
/// Initial data x_1..x_m, xi_1..xi_{m+1} over signature (m, m+1), covering
/// one period back and two forward.
SuperFrieze generate_symbolic(std::size_t m);

/// Diamond with top B = f(i,j), or nullopt if part of it is not stored.
std::optional<Diamond> diamond_at(const SuperFrieze& F, long i, long j);

struct FriezeCheck {
    bool ok = true;
    std::size_t checked = 0;
    std::string failure;
};

/// The rule and its two consequences on every stored diamond.
FriezeCheck check_diamonds(const SuperFrieze& F);
/// Both glide identities, f periodicity and phi antiperiodicity with period
/// m + 3, on every pair of stored positions.
FriezeCheck check_glide(const SuperFrieze& F);

/// a_j = f(j,j), beta_j = phi(j,j) for j = 1..m+3, after checking that every
/// stored diagonal V_j = f(i,j), W_j = phi(i,j) follows the Schroedinger
/// recurrence (CoefficientExtractionFailure otherwise).
SchrodingerSystem extract_schrodinger(const SuperFrieze& F);

/// Mutates aquiv(m) at x_1..x_m and compares with the next frieze diagonal:
/// x'_k = f(1,k), and xi'_k = xi_{k+1} - x'_k xi_1 = phi(3/2, k+1/2).
bool frieze_vs_seed(std::size_t m);

/// {"width","period","offsets":{"first_diagonal","index_scale":2},"even","odd"}
/// with one list per stored diagonal i: even = f(i,i..i+m-1), odd =
/// phi(i,i), phi(i+1/2,i+1/2), phi(i,i+1), phi(i+1/2,i+3/2), ... (2m+2 entries).
Json frieze_to_json(const SuperFrieze& F);
SuperFrieze frieze_from_json(const Json& j, Signature sig);

/// Staggered text layout, one text line per frieze row, diagonals
/// first..last left to right.
std::string render_frieze(const SuperFrieze& F, const VariableNames& names, long first, long last);

} // namespace supercluster
