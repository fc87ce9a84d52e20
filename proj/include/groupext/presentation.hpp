#pragma once

// The group-presentation mini-language.
//
//   spec    := product ;
//   product := term { "x" term } ;
//   term    := atom [ "x|" atom "[" action "]" ] ;
//   atom    := "Z" INT | "D" INT | "Q" INT | "A" INT | "S" INT
//            | "PSL(2," INT ")" | "(" spec ")" ;
//   action  := INT { "," INT } ;
//
// D and Q take the group ORDER (D 2n, Q 4m). Action integers depend on the
// kernel shape: one multiplication unit per cyclic factor for a cyclic kernel
// or a product of cyclics, the pair t,s for a dihedral kernel. The quotient
// atom of a semidirect term must be cyclic.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "groupext/group.hpp"

namespace groupext {

// Syntax error with a byte offset into the input.
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
};

// Well-formed tree, semantically invalid (bad action value, cap, ...).
struct SemanticError : std::runtime_error {
  explicit SemanticError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GroupSpec {
  enum class Kind { Z, D, Q, A, S, Psl2, Direct, Semidirect };
  Kind kind = Kind::Z;
  int param = 0;                   // atom parameter
  std::vector<GroupSpec> children; // Direct/Semidirect: exactly two
  std::vector<int> action;         // Semidirect only
};

GroupSpec parse_presentation(std::string_view text);

std::string to_string(const GroupSpec& spec);

Group build_from_spec(const GroupSpec& spec, int cap = kDefaultOrderCap);

}  // namespace groupext
