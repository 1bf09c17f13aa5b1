#include "supercluster/laurent.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "supercluster/errors.hpp"

namespace supercluster {

namespace {

void require_same(std::size_t a, std::size_t b) {
    if (a != b) {
        throw SignatureError("Laurent polynomials over " + std::to_string(a) + " and " +
                             std::to_string(b) + " variables");
    }
}

std::uint64_t hash_exponents(const Exponents& x, std::size_t n) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= static_cast<std::uint32_t>(x[i]);
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 29;
    }
    return h ^ (h >> 32);
}

bool same_exponents(const Exponents& a, const Exponents& b, std::size_t n) {
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n), b.begin());
}

// Graded lexicographic order, largest first. Used only for division.
struct GrlexGreater {
    std::size_t n;
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = 0, db = 0;
        for (std::size_t i = 0; i < n; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da > db;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

Exponents negated(const Exponents& x) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxEven; ++i) r[i] = -x[i];
    return r;
}

// Division of genuine polynomials (non-negative exponents) by leading-term
// cancellation in grlex order.
LaurentPoly polynomial_divide(const LaurentPoly& p, const LaurentPoly& d) {
    const std::size_t n = p.nvars();
    GrlexGreater order{n};
    const LaurentTerm* lead = &d.terms()[0];
    for (const auto& t : d.terms()) {
        if (order(t.x, lead->x)) lead = &t;
    }

    std::map<Exponents, Integer, GrlexGreater> rem(order);
    for (const auto& t : p.terms()) rem.emplace(t.x, t.c);

    std::vector<LaurentTerm> quotient;
    Integer prod;
    while (!rem.empty()) {
        auto it = rem.begin();
        LaurentTerm q;
        for (std::size_t i = 0; i < n; ++i) {
            q.x[i] = it->first[i] - lead->x[i];
            if (q.x[i] < 0) throw NotDivisible("leading monomial not divisible");
        }
        Integer r;
        boost::multiprecision::divide_qr(it->second, lead->c, q.c, r);
        if (!r.is_zero()) throw NotDivisible("leading coefficient not divisible");

        for (const auto& t : d.terms()) {
            Exponents key{};
            for (std::size_t i = 0; i < n; ++i) key[i] = t.x[i] + q.x[i];
            prod = t.c * q.c;
            auto [pos, inserted] = rem.try_emplace(key);
            pos->second -= prod;
            if (pos->second.is_zero()) rem.erase(pos);
        }
        quotient.push_back(std::move(q));
    }
    return LaurentPoly::from_terms(n, std::move(quotient));
}

} // namespace

bool exponents_less(const Exponents& a, const Exponents& b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

LaurentPoly::LaurentPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxEven) {
        throw SignatureError("at most " + std::to_string(kMaxEven) + " even variables supported");
    }
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Integer& c) {
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Exponents{}, c});
    return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, const Exponents& x, const Integer& c) {
    LaurentPoly p(nvars);
    for (std::size_t i = nvars; i < kMaxEven; ++i) {
        if (x[i] != 0) throw SignatureError("exponent outside the variable range");
    }
    if (!c.is_zero()) p.terms_.push_back({x, c});
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index, std::int32_t power) {
    if (index >= nvars) throw IndexOutOfRange("variable index " + std::to_string(index));
    Exponents x{};
    x[index] = power;
    return monomial(nvars, x);
}

LaurentPoly LaurentPoly::from_terms(std::size_t nvars, std::vector<LaurentTerm> terms) {
    LaurentPoly p(nvars);
    std::sort(terms.begin(), terms.end(), [nvars](const LaurentTerm& a, const LaurentTerm& b) {
        return exponents_less(a.x, b.x, nvars);
    });
    for (auto& t : terms) {
        if (!p.terms_.empty() && same_exponents(p.terms_.back().x, t.x, nvars)) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
        } else if (!t.c.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& x = terms_[0].x;
    return std::all_of(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(nvars_),
                       [](std::int32_t e) { return e == 0; });
}

bool LaurentPoly::is_canonical() const {
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        if (terms_[t].c.is_zero()) return false;
        if (t > 0 && !exponents_less(terms_[t - 1].x, terms_[t].x, nvars_)) return false;
        for (std::size_t i = nvars_; i < kMaxEven; ++i) {
            if (terms_[t].x[i] != 0) return false;
        }
    }
    return true;
}

Exponents LaurentPoly::min_exponents() const {
    Exponents m{};
    if (terms_.empty()) return m;
    m = terms_[0].x;
    for (const auto& t : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], t.x[i]);
    }
    return m;
}

Exponents LaurentPoly::max_exponents() const {
    Exponents m{};
    if (terms_.empty()) return m;
    m = terms_[0].x;
    for (const auto& t : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], t.x[i]);
    }
    return m;
}

LaurentPoly LaurentPoly::shifted(const Exponents& by) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) t.x[i] += by[i];
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& k) const {
    if (k.is_zero()) return LaurentPoly(nvars_);
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c *= k;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result = constant(nvars_, 1);
    if (e == 0) return result;
    if (is_monomial()) {
        Exponents x{};
        for (std::size_t i = 0; i < nvars_; ++i) x[i] = terms_[0].x[i] * static_cast<std::int32_t>(e);
        return monomial(nvars_, x, boost::multiprecision::pow(terms_[0].c, e));
    }
    LaurentPoly base = *this;
    bool first = true;
    while (e > 0) {
        if (e & 1U) {
            result = first ? base : result * base;
            first = false;
        }
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same(nvars_, o.nvars_);
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<LaurentTerm> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && exponents_less(a->x, b->x, nvars_))) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || exponents_less(b->x, a->x, nvars_)) {
            merged.push_back(*b++);
        } else {
            a->c += b->c;
            if (!a->c.is_zero()) merged.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same(a.nvars_, b.nvars_);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.nvars_);
    if (b.is_monomial()) return a.shifted(b.terms_[0].x).scaled(b.terms_[0].c);
    if (a.is_monomial()) return b.shifted(a.terms_[0].x).scaled(a.terms_[0].c);
    TermAccumulator acc(a.nvars_, a.size() * b.size());
    acc.add_product(a, b, 1);
    return acc.take();
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!same_exponents(a.terms_[i].x, b.terms_[i].x, a.nvars_) || a.terms_[i].c != b.terms_[i].c) {
            return false;
        }
    }
    return true;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
    require_same(p.nvars(), d.nvars());
    const std::size_t n = p.nvars();
    if (d.is_zero()) throw NotDivisible("division by zero");
    if (p.is_zero()) return LaurentPoly(n);

    if (d.is_monomial()) {
        const auto& lead = d.terms()[0];
        std::vector<LaurentTerm> out;
        out.reserve(p.size());
        Integer r;
        for (const auto& t : p.terms()) {
            LaurentTerm q;
            boost::multiprecision::divide_qr(t.c, lead.c, q.c, r);
            if (!r.is_zero()) throw NotDivisible("coefficient not divisible");
            for (std::size_t i = 0; i < n; ++i) q.x[i] = t.x[i] - lead.x[i];
            out.push_back(std::move(q));
        }
        return LaurentPoly::from_terms(n, std::move(out));
    }

    const Exponents pmin = p.min_exponents();
    const Exponents dmin = d.min_exponents();
    LaurentPoly q = polynomial_divide(p.shifted(negated(pmin)), d.shifted(negated(dmin)));
    Exponents back{};
    for (std::size_t i = 0; i < n; ++i) back[i] = pmin[i] - dmin[i];
    return q.shifted(back);
}

TermAccumulator::TermAccumulator(std::size_t nvars, std::size_t expected_terms) : nvars_(nvars) {
    std::size_t cap = 16;
    while (cap < 2 * expected_terms && cap < (std::size_t{1} << 22)) cap <<= 1U;
    slots_.resize(cap);
}

TermAccumulator::Slot& TermAccumulator::slot_for(const Exponents& x) {
    if (2 * (used_ + 1) > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = hash_exponents(x, nvars_) & mask;
    while (slots_[i].used) {
        if (same_exponents(slots_[i].x, x, nvars_)) return slots_[i];
        i = (i + 1) & mask;
    }
    slots_[i].used = true;
    slots_[i].x = x;
    ++used_;
    return slots_[i];
}

void TermAccumulator::grow() {
    std::vector<Slot> old = std::move(slots_);
    slots_.clear();
    slots_.resize(old.size() * 2);
    const std::size_t mask = slots_.size() - 1;
    for (auto& s : old) {
        if (!s.used) continue;
        std::size_t i = hash_exponents(s.x, nvars_) & mask;
        while (slots_[i].used) i = (i + 1) & mask;
        slots_[i] = std::move(s);
    }
}

void TermAccumulator::add(const Exponents& x, const Integer& c) { slot_for(x).c += c; }

void TermAccumulator::sub(const Exponents& x, const Integer& c) { slot_for(x).c -= c; }

void TermAccumulator::add_product(const LaurentPoly& a, const LaurentPoly& b, int sign) {
    Exponents x{};
    Integer prod;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) x[i] = ta.x[i] + tb.x[i];
            prod = ta.c * tb.c;
            Slot& s = slot_for(x);
            if (sign > 0) {
                s.c += prod;
            } else {
                s.c -= prod;
            }
        }
    }
}

void TermAccumulator::add_shifted(const LaurentPoly& a, const Exponents& shift, const Integer& k) {
    Exponents x{};
    Integer prod;
    for (const auto& t : a.terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) x[i] = t.x[i] + shift[i];
        prod = t.c * k;
        slot_for(x).c += prod;
    }
}

LaurentPoly TermAccumulator::take() {
    LaurentPoly p(nvars_);
    p.terms_.reserve(used_);
    for (auto& s : slots_) {
        if (s.used && !s.c.is_zero()) p.terms_.push_back({s.x, std::move(s.c)});
    }
    std::sort(p.terms_.begin(), p.terms_.end(), [n = nvars_](const LaurentTerm& a, const LaurentTerm& b) {
        return exponents_less(a.x, b.x, n);
    });
    slots_.clear();
    used_ = 0;
    return p;
}

} // namespace supercluster
