#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "supercluster/super_poly.hpp"

namespace supercluster {

using Json = nlohmann::json;

/// Display names for the generators of a signature.
struct VariableNames {
    std::vector<std::string> even;
    std::vector<std::string> odd;

    /// x1, x2, ... and xi1, xi2, ...
    static VariableNames standard(Signature sig);
};

/// Human-readable form, e.g. "x1^-1 + x1^-1*x2*xi1*xi2". Terms appear in
/// canonical order.
std::string render(const SuperLaurentPoly& p, const VariableNames& names);
std::string render(const SuperLaurentPoly& p);

/// Inverse of render: a signed sum of products of integers, names and
/// name^exponent factors. Odd factors may appear in any order; the sign of
/// reordering is applied.
SuperLaurentPoly parse_poly(const std::string& text, Signature sig, const VariableNames& names);
SuperLaurentPoly parse_poly(const std::string& text, Signature sig);

/// {"terms":[{"c":"<decimal>","x":[...],"xi":[1-based indices]}]}
Json poly_to_json(const SuperLaurentPoly& p);
SuperLaurentPoly poly_from_json(const Json& j, Signature sig);

Integer parse_integer(const std::string& text);

} // namespace supercluster
