#include "supercluster/super_poly.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "supercluster/errors.hpp"

namespace supercluster {

namespace {

void require_same(Signature a, Signature b) {
    if (a != b) {
        throw SignatureError("signature mismatch: (" + std::to_string(a.even) + "," + std::to_string(a.odd) +
                             ") vs (" + std::to_string(b.even) + "," + std::to_string(b.odd) + ")");
    }
}

void check_signature(Signature sig) {
    if (sig.even > kMaxEven) throw SignatureError("too many even generators");
    if (sig.odd > kMaxOdd) throw SignatureError("too many odd generators");
}

void sort_components(std::vector<SuperComponent>& comps) {
    std::sort(comps.begin(), comps.end(),
              [](const SuperComponent& a, const SuperComponent& b) { return canonical_less(a.mask, b.mask); });
}

// Accumulates products component-by-component, keyed by target mask.
class ComponentAccumulator {
public:
    explicit ComponentAccumulator(std::size_t nvars) : nvars_(nvars) {}

    TermAccumulator& at(OddMask mask, std::size_t expected) {
        auto it = acc_.find(mask.bits());
        if (it == acc_.end()) it = acc_.emplace(mask.bits(), TermAccumulator(nvars_, expected)).first;
        return it->second;
    }

    std::vector<SuperComponent> take() {
        std::vector<SuperComponent> out;
        for (auto& [bits, acc] : acc_) {
            LaurentPoly p = acc.take();
            if (!p.is_zero()) out.push_back({OddMask::from_bits(bits), std::move(p)});
        }
        sort_components(out);
        return out;
    }

private:
    std::size_t nvars_;
    std::map<std::uint32_t, TermAccumulator> acc_;
};

} // namespace

SuperLaurentPoly::SuperLaurentPoly(Signature sig) : sig_(sig) { check_signature(sig); }

SuperLaurentPoly SuperLaurentPoly::constant(Signature sig, const Integer& c) {
    return from_body(sig, LaurentPoly::constant(sig.even, c));
}

SuperLaurentPoly SuperLaurentPoly::even_var(Signature sig, std::size_t index, std::int32_t power) {
    return from_body(sig, LaurentPoly::variable(sig.even, index, power));
}

SuperLaurentPoly SuperLaurentPoly::odd_var(Signature sig, std::size_t index) {
    if (index >= sig.odd) throw IndexOutOfRange("odd variable index " + std::to_string(index));
    return monomial(sig, Exponents{}, OddMask::single(index));
}

SuperLaurentPoly SuperLaurentPoly::monomial(Signature sig, const Exponents& x, OddMask mask, const Integer& c) {
    SuperLaurentPoly p(sig);
    if (mask.extent() > sig.odd) throw IndexOutOfRange("odd mask outside the signature");
    LaurentPoly body = LaurentPoly::monomial(sig.even, x, c);
    if (!body.is_zero()) p.comps_.push_back({mask, std::move(body)});
    return p;
}

SuperLaurentPoly SuperLaurentPoly::from_body(Signature sig, LaurentPoly body) {
    SuperLaurentPoly p(sig);
    if (body.nvars() != sig.even) throw SignatureError("body has wrong number of variables");
    if (!body.is_zero()) p.comps_.push_back({OddMask{}, std::move(body)});
    return p;
}

SuperLaurentPoly SuperLaurentPoly::from_terms(Signature sig, std::vector<SuperTerm> terms) {
    std::map<std::uint32_t, std::vector<LaurentTerm>> grouped;
    for (auto& t : terms) {
        if (t.odd.extent() > sig.odd) throw IndexOutOfRange("odd mask outside the signature");
        for (std::size_t i = sig.even; i < kMaxEven; ++i) {
            if (t.xexp[i] != 0) throw SignatureError("exponent outside the variable range");
        }
        grouped[t.odd.bits()].push_back({t.xexp, std::move(t.coeff)});
    }
    std::vector<SuperComponent> comps;
    for (auto& [bits, ts] : grouped) {
        comps.push_back({OddMask::from_bits(bits), LaurentPoly::from_terms(sig.even, std::move(ts))});
    }
    return from_components(sig, std::move(comps));
}

SuperLaurentPoly SuperLaurentPoly::from_components(Signature sig, std::vector<SuperComponent> comps) {
    SuperLaurentPoly p(sig);
    sort_components(comps);
    for (auto& c : comps) {
        if (c.mask.extent() > sig.odd) throw IndexOutOfRange("odd mask outside the signature");
        if (c.poly.nvars() != sig.even) throw SignatureError("component has wrong number of variables");
        if (!p.comps_.empty() && p.comps_.back().mask == c.mask) {
            p.comps_.back().poly += c.poly;
            if (p.comps_.back().poly.is_zero()) p.comps_.pop_back();
        } else if (!c.poly.is_zero()) {
            p.comps_.push_back(std::move(c));
        }
    }
    return p;
}

Parity SuperLaurentPoly::parity() const {
    if (comps_.empty()) return Parity::Zero;
    bool even = false, odd = false;
    for (const auto& c : comps_) (c.mask.is_even() ? even : odd) = true;
    if (even && odd) return Parity::Mixed;
    return even ? Parity::Even : Parity::Odd;
}

LaurentPoly SuperLaurentPoly::component(OddMask mask) const {
    for (const auto& c : comps_) {
        if (c.mask == mask) return c.poly;
    }
    return LaurentPoly(sig_.even);
}

LaurentPoly SuperLaurentPoly::body() const {
    if (!comps_.empty() && comps_[0].mask.empty()) return comps_[0].poly;
    return LaurentPoly(sig_.even);
}

std::vector<SuperTerm> SuperLaurentPoly::terms() const {
    std::vector<SuperTerm> out;
    out.reserve(term_count());
    for (const auto& c : comps_) {
        for (const auto& t : c.poly.terms()) out.push_back({t.c, t.x, c.mask});
    }
    return out;
}

std::size_t SuperLaurentPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : comps_) n += c.poly.size();
    return n;
}

bool SuperLaurentPoly::is_canonical() const {
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        const auto& c = comps_[i];
        if (c.poly.is_zero() || !c.poly.is_canonical() || c.poly.nvars() != sig_.even) return false;
        if (c.mask.extent() > sig_.odd) return false;
        if (i > 0 && !canonical_less(comps_[i - 1].mask, c.mask)) return false;
    }
    return true;
}

SuperLaurentPoly SuperLaurentPoly::nilpotent_part() const {
    SuperLaurentPoly r = *this;
    if (!r.comps_.empty() && r.comps_[0].mask.empty()) r.comps_.erase(r.comps_.begin());
    return r;
}

SuperLaurentPoly SuperLaurentPoly::grade_involution() const {
    SuperLaurentPoly r = *this;
    for (auto& c : r.comps_) {
        if (!c.mask.is_even()) c.poly = -c.poly;
    }
    return r;
}

SuperLaurentPoly SuperLaurentPoly::scaled(const Integer& k) const {
    if (k.is_zero()) return SuperLaurentPoly(sig_);
    SuperLaurentPoly r = *this;
    for (auto& c : r.comps_) c.poly = c.poly.scaled(k);
    return r;
}

SuperLaurentPoly SuperLaurentPoly::shifted(const Exponents& by) const {
    SuperLaurentPoly r = *this;
    for (auto& c : r.comps_) c.poly = c.poly.shifted(by);
    return r;
}

SuperLaurentPoly SuperLaurentPoly::pow(unsigned e) const {
    SuperLaurentPoly result = constant(sig_, 1);
    SuperLaurentPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

SuperLaurentPoly SuperLaurentPoly::embedded(Signature bigger) const {
    if (bigger.even < sig_.even || bigger.odd < sig_.odd) throw SignatureError("cannot embed into a smaller signature");
    SuperLaurentPoly r(bigger);
    for (const auto& c : comps_) {
        std::vector<LaurentTerm> ts(c.poly.terms().begin(), c.poly.terms().end());
        r.comps_.push_back({c.mask, LaurentPoly::from_terms(bigger.even, std::move(ts))});
    }
    return r;
}

SuperLaurentPoly SuperLaurentPoly::operator-() const {
    SuperLaurentPoly r = *this;
    for (auto& c : r.comps_) c.poly = -c.poly;
    return r;
}

SuperLaurentPoly& SuperLaurentPoly::operator+=(const SuperLaurentPoly& o) {
    require_same(sig_, o.sig_);
    if (o.comps_.empty()) return *this;
    std::vector<SuperComponent> merged;
    merged.reserve(comps_.size() + o.comps_.size());
    auto a = comps_.begin();
    auto b = o.comps_.begin();
    while (a != comps_.end() || b != o.comps_.end()) {
        if (b == o.comps_.end() || (a != comps_.end() && canonical_less(a->mask, b->mask))) {
            merged.push_back(std::move(*a++));
        } else if (a == comps_.end() || canonical_less(b->mask, a->mask)) {
            merged.push_back(*b++);
        } else {
            a->poly += b->poly;
            if (!a->poly.is_zero()) merged.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    comps_ = std::move(merged);
    return *this;
}

SuperLaurentPoly& SuperLaurentPoly::operator-=(const SuperLaurentPoly& o) { return *this += -o; }

SuperLaurentPoly operator*(const SuperLaurentPoly& a, const SuperLaurentPoly& b) {
    require_same(a.sig_, b.sig_);
    SuperLaurentPoly r(a.sig_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.comps_.size() == 1 && b.comps_.size() == 1) {
        const auto& ca = a.comps_[0];
        const auto& cb = b.comps_[0];
        const int s = merge_sign(ca.mask, cb.mask);
        if (s == 0) return r;
        LaurentPoly p = ca.poly * cb.poly;
        if (s < 0) p = -p;
        if (!p.is_zero()) r.comps_.push_back({ca.mask | cb.mask, std::move(p)});
        return r;
    }
    ComponentAccumulator acc(a.sig_.even);
    for (const auto& ca : a.comps_) {
        for (const auto& cb : b.comps_) {
            const int s = merge_sign(ca.mask, cb.mask);
            if (s == 0) continue;
            acc.at(ca.mask | cb.mask, ca.poly.size() * cb.poly.size()).add_product(ca.poly, cb.poly, s);
        }
    }
    r.comps_ = acc.take();
    return r;
}

bool operator==(const SuperLaurentPoly& a, const SuperLaurentPoly& b) {
    if (a.sig_ != b.sig_ || a.comps_.size() != b.comps_.size()) return false;
    for (std::size_t i = 0; i < a.comps_.size(); ++i) {
        if (a.comps_[i].mask != b.comps_[i].mask || !(a.comps_[i].poly == b.comps_[i].poly)) return false;
    }
    return true;
}

SuperLaurentPoly mul(const SuperLaurentPoly& p, const SuperLaurentPoly& q) { return p * q; }

SuperLaurentPoly exact_div(const SuperLaurentPoly& p, const SuperLaurentPoly& q) {
    require_same(p.signature(), q.signature());
    const Signature sig = p.signature();
    if (!is_even_element(q)) throw ParityError("divisor must be even");
    const LaurentPoly q0 = q.body();
    if (q0.is_zero()) throw NotDivisible("divisor has zero body");
    if (p.is_zero()) return SuperLaurentPoly(sig);

    std::vector<SuperComponent> qn;
    for (const auto& c : q.components()) {
        if (!c.mask.empty()) qn.push_back(c);
    }
    if (qn.empty()) {
        std::vector<SuperComponent> out;
        for (const auto& c : p.components()) out.push_back({c.mask, divide_exact(c.poly, q0)});
        return SuperLaurentPoly::from_components(sig, std::move(out));
    }

    // Masks are solved in order of increasing size; a nonzero r_S feeds r_{S|T}.
    std::vector<std::vector<std::uint32_t>> buckets(sig.odd + 1);
    std::map<std::uint32_t, LaurentPoly> solved;
    std::map<std::uint32_t, bool> queued;
    auto enqueue = [&](OddMask s) {
        if (queued.emplace(s.bits(), true).second) buckets[s.size()].push_back(s.bits());
    };
    for (const auto& c : p.components()) enqueue(c.mask);

    for (std::size_t level = 0; level <= sig.odd; ++level) {
        for (std::size_t idx = 0; idx < buckets[level].size(); ++idx) {
            const OddMask s = OddMask::from_bits(buckets[level][idx]);
            TermAccumulator acc(sig.even, 0);
            const LaurentPoly ps = p.component(s);
            acc.add_shifted(ps, Exponents{}, 1);
            for (const auto& qt : qn) {
                if ((qt.mask.bits() & ~s.bits()) != 0) continue;
                const OddMask rest = s.without(qt.mask);
                auto it = solved.find(rest.bits());
                if (it == solved.end()) continue;
                acc.add_product(it->second, qt.poly, -merge_sign(rest, qt.mask));
            }
            LaurentPoly residual = acc.take();
            if (residual.is_zero()) continue;
            LaurentPoly rs = divide_exact(residual, q0);
            for (const auto& qt : qn) {
                if (s.disjoint(qt.mask)) enqueue(s | qt.mask);
            }
            solved.emplace(s.bits(), std::move(rs));
        }
    }

    std::vector<SuperComponent> out;
    for (auto& [bits, poly] : solved) out.push_back({OddMask::from_bits(bits), std::move(poly)});
    return SuperLaurentPoly::from_components(sig, std::move(out));
}

SuperLaurentPoly invert_unit(const SuperLaurentPoly& u) {
    const Signature sig = u.signature();
    const LaurentPoly body = u.body();
    if (!body.is_monomial()) throw NotUnit("body is not a single monomial");
    const LaurentTerm& lead = body.terms()[0];
    if (lead.c != 1 && lead.c != -1) throw NotUnit("body coefficient is not +-1");

    Exponents inv{};
    for (std::size_t i = 0; i < sig.even; ++i) inv[i] = -lead.x[i];
    // u = c x^a (1 + n) with n = c x^{-a} (u - body)
    const SuperLaurentPoly n = u.nilpotent_part().shifted(inv).scaled(lead.c);
    const SuperLaurentPoly neg = -n;
    SuperLaurentPoly sum = SuperLaurentPoly::constant(sig, 1);
    SuperLaurentPoly power = SuperLaurentPoly::constant(sig, 1);
    for (std::size_t j = 0; j <= sig.odd; ++j) {
        power = power * neg;
        if (power.is_zero()) break;
        sum += power;
    }
    return sum.shifted(inv).scaled(lead.c);
}

SuperLaurentPoly unit_pow(const SuperLaurentPoly& u, long e) {
    if (e >= 0) return u.pow(static_cast<unsigned>(e));
    return invert_unit(u).pow(static_cast<unsigned>(-e));
}

SuperLaurentPoly classical_projection(const SuperLaurentPoly& p) {
    return SuperLaurentPoly::from_body(p.signature(), p.body());
}

bool is_even_element(const SuperLaurentPoly& p) {
    const Parity par = p.parity();
    return par == Parity::Zero || par == Parity::Even;
}

bool is_odd_element(const SuperLaurentPoly& p) {
    const Parity par = p.parity();
    return par == Parity::Zero || par == Parity::Odd;
}

} // namespace supercluster
