#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hadamard/multipoly.hpp"
#include "hadamard/projective.hpp"

namespace hadamard {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position, std::string expected_tokens)
        : std::runtime_error(message), position(position), expected(std::move(expected_tokens)) {}
    std::size_t position;
    std::string expected;
};

// Polynomial grammar: signed terms joined by +/-, each a '*'-product of
// rational literals, root literals z{N}[^k], and variable powers x{i}[^e].
// Whitespace-insensitive.  When arity is absent it is inferred as one more
// than the highest variable index.
MultiPoly parse_poly(std::string_view text, std::optional<unsigned> arity = std::nullopt);

// Point literal: [entry:entry:...], entries are coefficient expressions
// (sums of signed products of rational and root literals).
ProjectivePoint parse_point(std::string_view text);

// Coefficient expression without variables.
Cyclotomic parse_coefficient(std::string_view text);

}  // namespace hadamard
