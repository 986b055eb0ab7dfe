#pragma once

#include "regal/game.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regal::dsl {

struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;    // 1-based
  int column = 1;  // 1-based
};

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string code;  // "syntax", "unknown-identifier", "duplicate-definition", "shape-mismatch", ...
  std::string message;
  SourceSpan span;
};

struct NamedProfile {
  std::string name;
  std::string game;  // owning game
  ProfileGraph profile;
};

struct Model {
  std::vector<std::string> agents;  // union over games, first-appearance order
  std::vector<std::pair<std::string, Rational>> params;
  std::vector<std::pair<std::string, GameGraph>> games;
  std::vector<NamedProfile> profiles;

  const GameGraph* find_game(std::string_view name) const;
  const NamedProfile* find_profile(std::string_view name) const;
};

struct ParseResult {
  Model model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const {
    for (const auto& d : diagnostics)
      if (d.severity == Diagnostic::Severity::Error) return false;
    return true;
  }
};

// Parses a model document. Numeric literals become exact rationals; params
// are substituted at parse time. On failure the diagnostics carry source
// spans; the partial model contains everything that did parse.
ParseResult parse(std::string_view text);

// Canonical form: declarations sorted by name, two-space indentation, LF
// endings. parse(serialize(m)) reproduces the graphs node-id-identically.
std::string serialize(const Model& m);

}  // namespace regal::dsl
