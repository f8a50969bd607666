#pragma once

#include "cproof/proof.hpp"
#include "cproof/validate.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cproof
{

struct ProofDocument
{
    InductiveSystem system;
    PreProof preproof;
    std::map< std::string, std::string > metadata;

    [[nodiscard]] std::string name() const;

    friend bool operator==( const ProofDocument&, const ProofDocument& ) = default;
};

// Raised for malformed text. Syntax errors carry a 1-based line/column;
// schema errors carry the JSON path of the offending value instead (line
// and column are then 0).
class ParseError : public std::runtime_error
{
public:
    ParseError( std::string message, std::size_t line, std::size_t column, std::string path,
                std::vector< std::string > expected );

    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t column() const { return _column; }
    [[nodiscard]] const std::string& path() const { return _path; }
    [[nodiscard]] const std::vector< std::string >& expected() const { return _expected; }

private:
    std::size_t _line;
    std::size_t _column;
    std::string _path;
    std::vector< std::string > _expected;
};

// Raised when a syntactically fine document violates the pre-proof
// invariants.
class SemanticError : public std::runtime_error
{
public:
    explicit SemanticError( std::vector< WellFormednessError > errors );

    [[nodiscard]] const std::vector< WellFormednessError >& errors() const { return _errors; }

private:
    std::vector< WellFormednessError > _errors;
};

// Parses a `.cproof` document and validates it.
[[nodiscard]] ProofDocument parse_document( std::string_view text );

// Canonical form: sorted keys, two-space indentation, nodes by id, and a
// trailing newline.
[[nodiscard]] std::string serialize_document( const ProofDocument& document );

[[nodiscard]] ProofDocument load_document( const std::string& path );

} // namespace cproof
