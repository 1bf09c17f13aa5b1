#include "supercluster/super_rational.hpp"

#include <map>
#include <string>
#include <utility>

#include "supercluster/errors.hpp"

namespace supercluster {

namespace {

void check_denominator(const SuperLaurentPoly& den) {
    if (!is_even_element(den)) throw ParityError("denominator must be even");
    if (den.body().is_zero()) throw NotDivisible("denominator has zero body");
}

bool is_one(const SuperLaurentPoly& p) { return p == SuperLaurentPoly::constant(p.signature(), 1); }

bool is_unit(const SuperLaurentPoly& p) {
    const LaurentPoly b = p.body();
    return b.is_monomial() && (b.terms()[0].c == 1 || b.terms()[0].c == -1);
}

} // namespace

SuperRational::SuperRational(SuperLaurentPoly num)
    : num_(std::move(num)), den_(SuperLaurentPoly::constant(num_.signature(), 1)) {}

SuperRational::SuperRational(SuperLaurentPoly num, SuperLaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.signature() != den_.signature()) throw SignatureError("numerator and denominator signatures differ");
    check_denominator(den_);
}

SuperRational SuperRational::zero(Signature sig) { return SuperRational(SuperLaurentPoly(sig)); }

SuperRational SuperRational::one(Signature sig) { return SuperRational(SuperLaurentPoly::constant(sig, 1)); }

SuperRational SuperRational::simplified() const {
    if (is_one(den_)) return *this;
    if (is_unit(den_)) return SuperRational(num_ * invert_unit(den_));
    try {
        return SuperRational(exact_div(num_, den_));
    } catch (const NotDivisible&) {
        return *this;
    }
}

SuperRational SuperRational::inverse() const {
    if (!is_even_element(num_)) throw ParityError("cannot invert an element that is not even");
    if (num_.body().is_zero()) throw NotDivisible("cannot invert an element with zero body");
    return SuperRational(den_, num_).simplified();
}

SuperRational SuperRational::grade_involution() const {
    SuperRational r = *this;
    r.num_ = num_.grade_involution();
    r.den_ = den_.grade_involution();
    return r;
}

SuperRational SuperRational::operator-() const {
    SuperRational r = *this;
    r.num_ = -num_;
    return r;
}

SuperRational operator+(const SuperRational& a, const SuperRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    SuperRational r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        return r;
    }
    // Denominators are even, hence central.
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    return r;
}

SuperRational operator-(const SuperRational& a, const SuperRational& b) { return a + (-b); }

SuperRational operator*(const SuperRational& a, const SuperRational& b) {
    SuperRational r;
    r.num_ = a.num_ * b.num_;
    if (is_one(a.den_)) {
        r.den_ = b.den_;
    } else if (is_one(b.den_)) {
        r.den_ = a.den_;
    } else {
        r.den_ = a.den_ * b.den_;
    }
    return r;
}

bool equals_rational(const SuperRational& a, const SuperRational& b) {
    if (a.signature() != b.signature()) return false;
    if (a.den() == b.den()) return a.num() == b.num();
    return a.num() * b.den() == b.num() * a.den();
}

SuperRational substitute(const SuperLaurentPoly& p, std::span<const std::optional<SuperRational>> images,
                         Signature target) {
    const Signature src = p.signature();
    if (images.size() != src.even) throw SignatureError("one image per even variable is required");
    if (target.odd < src.odd) throw SignatureError("target has fewer odd generators than the source");

    const std::vector<SuperTerm> terms = p.terms();
    const Exponents lo = [&] {
        Exponents m{};
        for (const auto& c : p.components()) {
            const Exponents e = c.poly.min_exponents();
            for (std::size_t i = 0; i < src.even; ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }();
    const Exponents hi = [&] {
        Exponents m{};
        for (const auto& c : p.components()) {
            const Exponents e = c.poly.max_exponents();
            for (std::size_t i = 0; i < src.even; ++i) m[i] = std::max(m[i], e[i]);
        }
        return m;
    }();

    // Per variable: numerator/denominator after clearing unit denominators, and
    // the exponent range that must be covered.
    struct Image {
        SuperLaurentPoly num;
        SuperLaurentPoly den;
        bool polynomial = true;     // den == 1
        bool invertible = false;    // num is a unit
        std::int32_t neg = 0;  // powers of num and den moved into the common denominator
        std::int32_t pos = 0;
        std::map<std::int32_t, SuperLaurentPoly> cache;
    };
    std::vector<Image> img(src.even);
    SuperLaurentPoly common = SuperLaurentPoly::constant(target, 1);
    for (std::size_t i = 0; i < src.even; ++i) {
        if (lo[i] == 0 && hi[i] == 0) continue;
        if (!images[i]) throw SubstitutionError("no image for even variable " + std::to_string(i + 1));
        const SuperRational r = images[i]->simplified();
        if (r.signature() != target) throw SignatureError("image signature differs from the target");
        if (!is_even_element(r.num())) throw ParityError("image of an even variable must be even");
        Image& m = img[i];
        m.num = r.num();
        m.den = r.den();
        m.polynomial = is_one(m.den);
        m.invertible = is_unit(m.num);
        if (lo[i] < 0 && !m.invertible && m.num.body().is_zero()) {
            throw SubstitutionError("negative power of a non-invertible image");
        }
        if (m.polynomial && m.invertible) continue;
        m.neg = lo[i] < 0 ? -lo[i] : 0;
        m.pos = m.polynomial ? 0 : hi[i];
        if (!m.polynomial && hi[i] > 0) common = common * m.den.pow(static_cast<unsigned>(hi[i]));
        if (m.neg > 0) common = common * m.num.pow(static_cast<unsigned>(m.neg));
    }

    // factor(i, e) = x_i^e * common-denominator share, as a polynomial.
    auto factor = [&](std::size_t i, std::int32_t e) -> const SuperLaurentPoly& {
        Image& m = img[i];
        auto it = m.cache.find(e);
        if (it != m.cache.end()) return it->second;
        SuperLaurentPoly f;
        if (m.polynomial && m.invertible) {
            f = unit_pow(m.num, e);
        } else {
            const std::int32_t num_power = m.neg + e;
            const std::int32_t den_power = m.pos - e;
            const SuperLaurentPoly nump = m.num.pow(static_cast<unsigned>(num_power));
            f = den_power > 0 ? nump * m.den.pow(static_cast<unsigned>(den_power)) : nump;
        }
        return m.cache.emplace(e, std::move(f)).first->second;
    };

    // Group terms by their even exponent vector.
    std::map<Exponents, std::vector<std::pair<OddMask, Integer>>> grouped;
    for (const auto& t : terms) grouped[t.xexp].emplace_back(t.odd, t.coeff);

    SuperLaurentPoly total(target);
    for (const auto& [x, odd_part] : grouped) {
        std::vector<SuperTerm> coeff_terms;
        for (const auto& [mask, c] : odd_part) coeff_terms.push_back({c, Exponents{}, mask});
        SuperLaurentPoly value = SuperLaurentPoly::from_terms(target, std::move(coeff_terms));
        for (std::size_t i = 0; i < src.even; ++i) {
            const bool trivial = (lo[i] == 0 && hi[i] == 0) || (x[i] == 0 && img[i].polynomial && img[i].invertible);
            if (trivial) continue;
            value = value * factor(i, x[i]);
        }
        total += value;
    }
    return SuperRational(std::move(total), std::move(common));
}

} // namespace supercluster
