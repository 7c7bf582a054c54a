#ifndef MZV_EXPRESSION_HPP
#define MZV_EXPRESSION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mzv/multi_index.hpp"

namespace mzv {

/*
 * Text syntax shared by the CLI and JSON export:
 *
 *   combination := "0" | term { ("+" | "-") term }
 *   term        := ["-"] [ rational "*" ] index
 *   rational    := integer [ "/" integer ]
 *   index       := "phi" | "(" integer { "," integer } ")"
 *
 * Whitespace between tokens is ignored. Output of IndexCombination::to_string
 * parses back to the same combination.
 */
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

MultiIndex parse_index(std::string_view text);
IndexCombination parse_combination(std::string_view text);

}  // namespace mzv

#endif  // MZV_EXPRESSION_HPP
