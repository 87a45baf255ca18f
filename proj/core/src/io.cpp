#include "equitrans/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace equitrans {

ParseError::ParseError(std::string source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
      source_(std::move(source)),
      line_(line) {}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Tokenized non-empty lines; '#' starts a comment.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string token;
    while (ss >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class LabelIndex {
 public:
  void define(const std::string& source, int line, const std::string& label) {
    if (index_.contains(label))
      throw ParseError(source, line, "duplicate label '" + label + "'");
    index_[label] = static_cast<int>(labels_.size());
    labels_.push_back(label);
  }

  int lookup(const std::string& source, int line, const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw ParseError(source, line, "unknown label '" + label + "'");
    return it->second;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }

 private:
  std::map<std::string, int> index_;
  std::vector<std::string> labels_;
};

Rational parse_rational_at(const std::string& source, int line, const std::string& tok) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, line, std::string(e.what()));
  }
}

// A preference pair token looks like "A<B".
std::pair<std::string, std::string> split_pair(const std::string& source, int line,
                                               const std::string& tok) {
  const auto lt = tok.find('<');
  if (lt == std::string::npos || lt == 0 || lt + 1 == tok.size())
    throw ParseError(source, line, "expected LABEL<LABEL, got '" + tok + "'");
  return {tok.substr(0, lt), tok.substr(lt + 1)};
}

}  // namespace

RelationDoc parse_relation(std::istream& in, const std::string& source) {
  const auto lines = tokenize(in);
  LabelIndex labels;
  std::vector<std::pair<int, int>> pairs;
  bool saw_elements = false;
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "elements") {
      if (saw_elements) throw ParseError(source, line.number, "duplicate 'elements' line");
      saw_elements = true;
      for (std::size_t i = 1; i < t.size(); ++i) labels.define(source, line.number, t[i]);
    } else if (t[0] == "less") {
      if (!saw_elements)
        throw ParseError(source, line.number, "'less' before 'elements'");
      if (t.size() != 3)
        throw ParseError(source, line.number, "expected: less FROM TO");
      pairs.emplace_back(labels.lookup(source, line.number, t[1]),
                         labels.lookup(source, line.number, t[2]));
    } else {
      throw ParseError(source, line.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!saw_elements) throw ParseError(source, 1, "missing 'elements' line");
  RelationDoc doc{labels.labels(), BinaryRelation(labels.size())};
  for (auto [x, y] : pairs) doc.relation.add(x, y);
  return doc;
}

std::string write_relation(const RelationDoc& doc) {
  std::ostringstream out;
  out << "elements";
  for (const auto& label : doc.labels) out << ' ' << label;
  out << '\n';
  for (int x = 0; x < doc.relation.size(); ++x)
    for (int y : subset_members(doc.relation.row(x)))
      out << "less " << doc.labels[static_cast<std::size_t>(x)] << ' '
          << doc.labels[static_cast<std::size_t>(y)] << '\n';
  return out.str();
}

bool GameDoc::operator==(const GameDoc& other) const {
  const auto payoffs_equal = [](const std::optional<PayoffTable>& a,
                                const std::optional<PayoffTable>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || a->pay == b->pay;
  };
  return form == other.form && payoffs_equal(payoffs, other.payoffs) &&
         pref1 == other.pref1 && pref2 == other.pref2;
}

GameDoc parse_game(std::istream& in, const std::string& source) {
  const auto lines = tokenize(in);
  LabelIndex labels;
  std::vector<std::optional<std::pair<Rational, Rational>>> payoffs;
  std::optional<std::pair<int, int>> shape;
  std::vector<int> table;
  std::optional<PrefSpec> prefs[2];
  bool saw_players = false;
  int matrix_rows_pending = 0;

  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (matrix_rows_pending > 0) {
      if (static_cast<int>(t.size()) != shape->second)
        throw ParseError(source, line.number,
                         "expected " + std::to_string(shape->second) + " outcome labels");
      for (const auto& tok : t) table.push_back(labels.lookup(source, line.number, tok));
      --matrix_rows_pending;
      continue;
    }
    if (t[0] == "players") {
      if (t.size() != 2 || t[1] != "2")
        throw ParseError(source, line.number, "only 'players 2' is supported");
      saw_players = true;
    } else if (t[0] == "outcome") {
      if (t.size() != 2 && t.size() != 4)
        throw ParseError(source, line.number, "expected: outcome LABEL [PAY1 PAY2]");
      labels.define(source, line.number, t[1]);
      if (t.size() == 4)
        payoffs.push_back(std::make_pair(parse_rational_at(source, line.number, t[2]),
                                         parse_rational_at(source, line.number, t[3])));
      else
        payoffs.push_back(std::nullopt);
    } else if (t[0] == "matrix") {
      if (shape) throw ParseError(source, line.number, "duplicate 'matrix' section");
      if (t.size() != 3)
        throw ParseError(source, line.number, "expected: matrix ROWS COLS");
      int rows = 0, cols = 0;
      try {
        rows = std::stoi(t[1]);
        cols = std::stoi(t[2]);
      } catch (const std::exception&) {
        throw ParseError(source, line.number, "bad matrix dimensions");
      }
      if (rows < 1 || cols < 1)
        throw ParseError(source, line.number, "matrix dimensions must be >= 1");
      shape = {rows, cols};
      matrix_rows_pending = rows;
    } else if (t[0] == "pref1" || t[0] == "pref2") {
      const int who = t[0] == "pref1" ? 0 : 1;
      if (prefs[who]) throw ParseError(source, line.number, "duplicate " + t[0]);
      if (t.size() < 2)
        throw ParseError(source, line.number, "expected: " + t[0] + " payoff|order|acyclic ...");
      PrefSpec spec;
      if (t[1] == "payoff") {
        spec.kind = PrefKind::kPayoff;
        if (t.size() != 2)
          throw ParseError(source, line.number, "'payoff' takes no pair list");
      } else if (t[1] == "order" || t[1] == "acyclic") {
        spec.kind = t[1] == "order" ? PrefKind::kOrder : PrefKind::kAcyclic;
        for (std::size_t i = 2; i < t.size(); ++i) {
          auto [from, to] = split_pair(source, line.number, t[i]);
          spec.pairs.emplace_back(labels.lookup(source, line.number, from),
                                  labels.lookup(source, line.number, to));
        }
      } else {
        throw ParseError(source, line.number, "unknown preference kind '" + t[1] + "'");
      }
      prefs[who] = std::move(spec);
    } else {
      throw ParseError(source, line.number, "unknown directive '" + t[0] + "'");
    }
  }

  if (!saw_players) throw ParseError(source, 1, "missing 'players 2' line");
  if (labels.size() == 0) throw ParseError(source, 1, "no outcomes declared");
  if (!shape) throw ParseError(source, 1, "missing 'matrix' section");
  if (matrix_rows_pending > 0)
    throw ParseError(source, lines.back().number, "matrix has missing rows");

  GameDoc doc;
  doc.form = MatrixGameForm(shape->first, shape->second, labels.labels(), std::move(table));
  const bool all_pay = std::all_of(payoffs.begin(), payoffs.end(),
                                   [](const auto& p) { return p.has_value(); });
  const bool none_pay = std::none_of(payoffs.begin(), payoffs.end(),
                                     [](const auto& p) { return p.has_value(); });
  if (!all_pay && !none_pay)
    throw ParseError(source, 1, "either all outcomes carry payoffs or none");
  if (all_pay) {
    PayoffTable pt;
    for (const auto& p : payoffs) pt.pay.push_back(*p);
    doc.payoffs = std::move(pt);
  }
  doc.pref1 = std::move(prefs[0]);
  doc.pref2 = std::move(prefs[1]);
  return doc;
}

std::string write_game(const GameDoc& doc) {
  std::ostringstream out;
  out << "players 2\n";
  for (int o = 0; o < doc.form.outcomes(); ++o) {
    out << "outcome " << doc.form.outcome_labels()[static_cast<std::size_t>(o)];
    if (doc.payoffs)
      out << ' ' << format_rational(doc.payoffs->pay[static_cast<std::size_t>(o)].first)
          << ' ' << format_rational(doc.payoffs->pay[static_cast<std::size_t>(o)].second);
    out << '\n';
  }
  out << "matrix " << doc.form.rows() << ' ' << doc.form.cols() << '\n';
  for (int s1 = 0; s1 < doc.form.rows(); ++s1) {
    for (int s2 = 0; s2 < doc.form.cols(); ++s2) {
      if (s2) out << ' ';
      out << doc.form.outcome_labels()[static_cast<std::size_t>(doc.form.outcome(s1, s2))];
    }
    out << '\n';
  }
  const auto write_pref = [&](const char* name, const std::optional<PrefSpec>& spec) {
    if (!spec) return;
    out << name;
    switch (spec->kind) {
      case PrefKind::kPayoff:
        out << " payoff";
        break;
      case PrefKind::kOrder:
        out << " order";
        break;
      case PrefKind::kAcyclic:
        out << " acyclic";
        break;
    }
    for (auto [x, y] : spec->pairs)
      out << ' ' << doc.form.outcome_labels()[static_cast<std::size_t>(x)] << '<'
          << doc.form.outcome_labels()[static_cast<std::size_t>(y)];
    out << '\n';
  };
  write_pref("pref1", doc.pref1);
  write_pref("pref2", doc.pref2);
  return out.str();
}

namespace {
Poset resolve_pref(const GameDoc& doc, const PrefSpec& spec, Player who) {
  const int n = doc.form.outcomes();
  if (spec.kind == PrefKind::kPayoff) {
    if (!doc.payoffs)
      throw std::invalid_argument("preference says 'payoff' but the game has no payoffs");
    auto [p1, p2] = own_payoff_prefs(*doc.payoffs);
    return who == Player::One ? std::move(p1) : std::move(p2);
  }
  BinaryRelation rel(n);
  for (auto [x, y] : spec.pairs) rel.add(x, y);
  if (spec.kind == PrefKind::kOrder)
    return Poset::validate(std::move(rel), doc.form.outcome_labels());
  return transitive_closure(rel, doc.form.outcome_labels());
}
}  // namespace

MatrixGame resolve_game(const GameDoc& doc) {
  if (!doc.pref1 || !doc.pref2)
    throw std::invalid_argument("game document declares no preferences for both players");
  return {doc.form, resolve_pref(doc, *doc.pref1, Player::One),
          resolve_pref(doc, *doc.pref2, Player::Two)};
}

PriorityGame parse_arena(std::istream& in, const std::string& source) {
  const auto lines = tokenize(in);
  std::map<int, Arena::Vertex> vertices;
  std::map<int, std::pair<Rational, Rational>> payoffs;
  std::optional<int> initial;

  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "initial") {
      if (t.size() != 2) throw ParseError(source, line.number, "expected: initial VERTEX");
      try {
        initial = std::stoi(t[1]);
      } catch (const std::exception&) {
        throw ParseError(source, line.number, "bad vertex id");
      }
    } else if (t[0] == "payoff") {
      if (t.size() != 4)
        throw ParseError(source, line.number, "expected: payoff PRIORITY PAY1 PAY2");
      int priority = 0;
      try {
        priority = std::stoi(t[1]);
      } catch (const std::exception&) {
        throw ParseError(source, line.number, "bad priority");
      }
      if (payoffs.contains(priority))
        throw ParseError(source, line.number, "duplicate payoff for priority " + t[1]);
      payoffs[priority] = {parse_rational_at(source, line.number, t[2]),
                           parse_rational_at(source, line.number, t[3])};
    } else {
      // Bare vertex line: id owner priority successors...
      if (t.size() < 4)
        throw ParseError(source, line.number,
                         "expected: ID OWNER PRIORITY SUCCESSOR...");
      int id = 0;
      try {
        id = std::stoi(t[0]);
      } catch (const std::exception&) {
        throw ParseError(source, line.number, "unknown directive '" + t[0] + "'");
      }
      if (vertices.contains(id))
        throw ParseError(source, line.number, "duplicate vertex " + t[0]);
      Arena::Vertex vx;
      if (t[1] == "1")
        vx.owner = Player::One;
      else if (t[1] == "2")
        vx.owner = Player::Two;
      else
        throw ParseError(source, line.number, "owner must be 1 or 2");
      try {
        vx.priority = std::stoi(t[2]);
        for (std::size_t i = 3; i < t.size(); ++i)
          vx.successors.push_back(std::stoi(t[i]));
      } catch (const std::exception&) {
        throw ParseError(source, line.number, "bad priority or successor id");
      }
      vertices[id] = std::move(vx);
    }
  }

  if (vertices.empty()) throw ParseError(source, 1, "no vertices declared");
  if (!initial) throw ParseError(source, 1, "missing 'initial' line");
  const int n = static_cast<int>(vertices.size());
  std::vector<Arena::Vertex> ordered;
  for (int v = 0; v < n; ++v) {
    auto it = vertices.find(v);
    if (it == vertices.end())
      throw ParseError(source, 1, "vertex ids must be 0.." + std::to_string(n - 1) +
                                      " without gaps; missing " + std::to_string(v));
    ordered.push_back(std::move(it->second));
  }
  try {
    return PriorityGame(Arena(std::move(ordered), *initial), std::move(payoffs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 1, e.what());
  }
}

std::string write_arena(const PriorityGame& game) {
  std::ostringstream out;
  const Arena& arena = game.arena();
  for (int v = 0; v < arena.size(); ++v) {
    const auto& vx = arena.vertex(v);
    out << v << ' ' << (vx.owner == Player::One ? 1 : 2) << ' ' << vx.priority;
    for (int w : vx.successors) out << ' ' << w;
    out << '\n';
  }
  out << "initial " << arena.initial() << '\n';
  for (const auto& [priority, pay] : game.payoffs())
    out << "payoff " << priority << ' ' << format_rational(pay.first) << ' '
        << format_rational(pay.second) << '\n';
  return out.str();
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t hash = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001B3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace equitrans
