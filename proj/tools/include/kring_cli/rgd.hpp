#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kring/constructions.hpp"
#include "kring/groupoid.hpp"
#include "kring/ringoid.hpp"

namespace kring::rgd {

/// A parse failure at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& kind, std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_, column_;
  std::string message_;
};

/// Malformed line: unknown keyword, missing token, bad number.
class SyntaxError : public ParseError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : ParseError("syntax error", line, column, what) {}
};

/// Well-formed line that does not make sense: unknown object, coordinate out
/// of range, duplicate name.
class SemanticError : public ParseError {
 public:
  SemanticError(std::size_t line, std::size_t column, const std::string& what)
      : ParseError("semantic error", line, column, what) {}
};

struct NamedHom {
  std::string name;
  std::string source;
  std::string target;
  RingoidHom hom;
};

struct NamedIdeal {
  std::string name;
  std::string ringoid;
  Ideal ideal;
};

struct NamedGSet {
  std::string group;  // name of the one-object groupoid it is over
  std::shared_ptr<GSet> gset;
};

struct Document {
  std::vector<RingoidPtr> ringoids;
  std::vector<FinGroupoid> groupoids;
  std::vector<NamedGSet> gsets;
  std::vector<NamedHom> homs;
  std::vector<NamedIdeal> ideals;

  RingoidPtr ringoid(const std::string& name) const;
  const FinGroupoid* groupoid(const std::string& name) const;
  const GSet* gset(const std::string& name) const;
  const NamedHom* hom(const std::string& name) const;
  const NamedIdeal* ideal(const std::string& name) const;
};

Document parse(const std::string& text);

/// The group of a one-object groupoid; a * b is b followed by a.
FinGroup group_of(const FinGroupoid& g);

/// Normalized text: sections in document order, hom-groups with at least
/// one generator, nonzero constants only.
std::string print(const Document& doc);
/// One ringoid, preceded by its scalar ring when it has one.
std::string print_ringoid(const FiniteRingoid& r);
std::string print_groupoid(const FinGroupoid& g);

}  // namespace kring::rgd
