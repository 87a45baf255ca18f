// Text file formats: orders/relations, matrix games, and priority-game
// arenas. Parsers report failures with line numbers; writers emit a canonical
// form that parses back to an equal document.

#pragma once

#include "equitrans/games.hpp"
#include "equitrans/poset.hpp"
#include "equitrans/priority.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace equitrans {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string& what);
  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// ---------------------------------------------------------------------------
// Order / relation files:
//   elements a b c
//   less a b
//   less b c
// ---------------------------------------------------------------------------

struct RelationDoc {
  std::vector<std::string> labels;
  BinaryRelation relation{0};

  bool operator==(const RelationDoc&) const = default;
};

RelationDoc parse_relation(std::istream& in, const std::string& source = "<input>");
std::string write_relation(const RelationDoc& doc);

// ---------------------------------------------------------------------------
// Game files:
//   players 2
//   outcome A 1 0          # label, then optional exact payoff pair
//   outcome B 0 1
//   matrix 2 2
//   A B
//   B A
//   pref1 payoff           # or: pref1 order A<B ...  /  pref1 acyclic A<B ...
//   pref2 payoff
// Preferences and payoffs are optional; bare forms are valid documents.
// ---------------------------------------------------------------------------

enum class PrefKind { kPayoff, kOrder, kAcyclic };

struct PrefSpec {
  PrefKind kind = PrefKind::kPayoff;
  std::vector<std::pair<int, int>> pairs;  // outcome index pairs, x < y

  bool operator==(const PrefSpec&) const = default;
};

struct GameDoc {
  MatrixGameForm form{1, 1, {"?"}, {0}};
  std::optional<PayoffTable> payoffs;
  std::optional<PrefSpec> pref1, pref2;

  bool operator==(const GameDoc& other) const;
};

GameDoc parse_game(std::istream& in, const std::string& source = "<input>");
std::string write_game(const GameDoc& doc);

/// Builds the playable game: payoff-keyword preferences become own-component
/// orders, explicit pair lists are validated, acyclic lists are transitively
/// closed. Throws when a preference is missing or cannot be resolved.
MatrixGame resolve_game(const GameDoc& doc);

// ---------------------------------------------------------------------------
// Arena files:
//   0 1 2 1 2              # id owner priority successors...
//   1 2 1 0
//   initial 0
//   payoff 1 0 1           # priority, then one exact payoff pair
//   payoff 2 3/2 0
// ---------------------------------------------------------------------------

PriorityGame parse_arena(std::istream& in, const std::string& source = "<input>");
std::string write_arena(const PriorityGame& game);

/// FNV-1a digest of raw bytes, as 16 hex digits; used to echo inputs in
/// reports.
std::string digest_hex(std::string_view bytes);

std::string read_file(const std::string& path);

}  // namespace equitrans
