#pragma once

#include "patree/element.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace patree {

// Textual grammar (whitespace-insensitive):
//
//   element  := ['+'|'-'] term (('+'|'-') term)*
//   term     := rational ['*' aromatic] | aromatic
//   aromatic := aroma* [lieword]          (at least one of the two)
//   lieword  := tree | '[' element ',' element ']'
//   tree     := 'o'[':'label] | '(' slot* '->' 'o'[':'label] ')'
//   slot     := tree | '?' | 'x'
//   aroma    := 'A[' tree (',' tree)* ']'
//   rational := digits ['/' digits]
//
// '?' is the free edge (at most one per term), 'x' the crossed edge of an
// aroma entry (exactly one, in the entry root's child list). A bare rational
// or a product of aromas without word is a scalar term.

/// Parses an element. With a decoration set, labels outside it are
/// rejected; without one any label is accepted. Throws ParseError on syntax
/// errors and for terms with several free edges, DomainError for
/// structurally invalid values (non-hat aroma entry, crossed edge outside
/// an aroma, unknown label).
Element parse_element(std::string_view src, const DecorationSet* colours = nullptr);

/// Parses a single tree, markers allowed.
Tree parse_tree(std::string_view src, const DecorationSet* colours = nullptr);

std::string to_string(const Tree& t);
std::string to_string(const Aroma& a);
std::string to_string(const MultiAroma& a);
std::string to_string(const LieWord& w);
/// Canonical form: terms in key order, lowest-terms coefficients, `0` for
/// the zero element.
std::string to_string(const Element& e);

/// One `name = element` binding of a `.pat` file.
struct Binding {
  std::string name;
  Element value;
  std::string text;  // right-hand side as written
  int line = 0;
};

/// `.pat` syntax: one binding per line, `#` starts a comment, blank lines
/// ignored. Bindings keep file order; duplicate names are a ParseError.
/// Names ending in `.skeleton` hold a term-shape signature rather than an
/// element; their value stays zero and only `text` is kept.
std::vector<Binding> parse_pat(std::string_view src);
std::vector<Binding> load_pat(const std::filesystem::path& file);

}  // namespace patree
