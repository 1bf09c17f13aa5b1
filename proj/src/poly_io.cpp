#include "supercluster/poly_io.hpp"

#include <cctype>

#include "supercluster/errors.hpp"

namespace supercluster {

VariableNames VariableNames::standard(Signature sig) {
    VariableNames names;
    for (std::size_t i = 0; i < sig.even; ++i) names.even.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < sig.odd; ++i) names.odd.push_back("xi" + std::to_string(i + 1));
    return names;
}

std::string render(const SuperLaurentPoly& p, const VariableNames& names) {
    const Signature sig = p.signature();
    if (names.even.size() < sig.even || names.odd.size() < sig.odd) {
        throw SignatureError("not enough variable names for the signature");
    }
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < sig.even; ++i) {
            if (t.xexp[i] == 0) continue;
            std::string f = names.even[i];
            if (t.xexp[i] != 1) f += "^" + std::to_string(t.xexp[i]);
            factors.push_back(std::move(f));
        }
        for (std::size_t i : t.odd.indices()) factors.push_back(names.odd[i]);

        const bool negative = t.coeff < 0;
        const Integer magnitude = negative ? Integer(-t.coeff) : t.coeff;
        std::string body;
        if (factors.empty() || magnitude != 1) body = magnitude.str();
        for (const auto& f : factors) {
            if (!body.empty()) body += "*";
            body += f;
        }
        if (first) {
            out += negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
        first = false;
    }
    return out;
}

std::string render(const SuperLaurentPoly& p) { return render(p, VariableNames::standard(p.signature())); }

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, Signature sig, const VariableNames& names)
        : text_(text), sig_(sig), names_(names) {}

    SuperLaurentPoly parse() {
        SuperLaurentPoly sum(sig_);
        skip_space();
        if (at_end()) throw ParseError("empty polynomial");
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_space();
            } else if (!first) {
                throw ParseError("expected '+' or '-' at position " + std::to_string(pos_));
            }
            SuperLaurentPoly term = parse_term();
            sum += negative ? -term : term;
            first = false;
            skip_space();
        }
        return sum;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    SuperLaurentPoly parse_term() {
        SuperLaurentPoly term = SuperLaurentPoly::constant(sig_, 1);
        while (true) {
            skip_space();
            term = term * parse_factor();
            skip_space();
            if (at_end() || peek() != '*') break;
            ++pos_;
        }
        return term;
    }

    std::string read_integer() {
        std::string digits;
        if (!at_end() && peek() == '-') {
            digits += '-';
            ++pos_;
        }
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        if (digits.empty() || digits == "-") throw ParseError("expected an integer at position " + std::to_string(pos_));
        return digits;
    }

    SuperLaurentPoly parse_factor() {
        if (at_end()) throw ParseError("unexpected end of polynomial");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            return SuperLaurentPoly::constant(sig_, parse_integer(read_integer()));
        }
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '\'')) {
            name += text_[pos_++];
        }
        if (name.empty()) throw ParseError("unexpected character at position " + std::to_string(pos_));
        std::int32_t power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_space();
            power = static_cast<std::int32_t>(std::stol(read_integer()));
        }
        for (std::size_t i = 0; i < sig_.even; ++i) {
            if (names_.even[i] == name) return SuperLaurentPoly::even_var(sig_, i, power);
        }
        for (std::size_t i = 0; i < sig_.odd; ++i) {
            if (names_.odd[i] == name) {
                if (power < 0) throw ParseError("odd generator cannot have a negative power");
                return SuperLaurentPoly::odd_var(sig_, i).pow(static_cast<unsigned>(power));
            }
        }
        throw ParseError("unknown variable '" + name + "'");
    }

    const std::string& text_;
    Signature sig_;
    const VariableNames& names_;
    std::size_t pos_ = 0;
};

} // namespace

SuperLaurentPoly parse_poly(const std::string& text, Signature sig, const VariableNames& names) {
    if (names.even.size() < sig.even || names.odd.size() < sig.odd) {
        throw SignatureError("not enough variable names for the signature");
    }
    return PolyParser(text, sig, names).parse();
}

SuperLaurentPoly parse_poly(const std::string& text, Signature sig) {
    return parse_poly(text, sig, VariableNames::standard(sig));
}

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw ParseError("invalid integer '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("invalid integer '" + text + "'");
    }
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

Json poly_to_json(const SuperLaurentPoly& p) {
    const Signature sig = p.signature();
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json x = Json::array();
        for (std::size_t i = 0; i < sig.even; ++i) x.push_back(t.xexp[i]);
        Json xi = Json::array();
        for (std::size_t i : t.odd.indices()) xi.push_back(i + 1);
        terms.push_back({{"c", t.coeff.str()}, {"x", std::move(x)}, {"xi", std::move(xi)}});
    }
    return Json{{"terms", std::move(terms)}};
}

SuperLaurentPoly poly_from_json(const Json& j, Signature sig) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw ParseError("polynomial must be an object with a \"terms\" array");
    }
    std::vector<SuperTerm> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("c")) throw ParseError("term needs a coefficient \"c\"");
        SuperTerm term;
        if (t["c"].is_string()) {
            term.coeff = parse_integer(t["c"].get<std::string>());
        } else if (t["c"].is_number_integer()) {
            term.coeff = Integer(t["c"].get<long long>());
        } else {
            throw ParseError("coefficient must be a decimal string or an integer");
        }
        if (t.contains("x")) {
            const Json& x = t["x"];
            if (!x.is_array() || x.size() != sig.even) {
                throw ParseError("exponent vector must have " + std::to_string(sig.even) + " entries");
            }
            for (std::size_t i = 0; i < sig.even; ++i) {
                if (!x[i].is_number_integer()) throw ParseError("exponents must be integers");
                term.xexp[i] = x[i].get<std::int32_t>();
            }
        } else if (sig.even != 0) {
            throw ParseError("term is missing its exponent vector \"x\"");
        }
        if (t.contains("xi")) {
            std::vector<std::size_t> idx;
            for (const auto& v : t["xi"]) {
                if (!v.is_number_integer() || v.get<long long>() < 1 ||
                    v.get<long long>() > static_cast<long long>(sig.odd)) {
                    throw ParseError("odd index out of range");
                }
                idx.push_back(v.get<std::size_t>() - 1);
            }
            term.odd = OddMask::from_indices(idx);
        }
        terms.push_back(std::move(term));
    }
    return SuperLaurentPoly::from_terms(sig, std::move(terms));
}

} // namespace supercluster
