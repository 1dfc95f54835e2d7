#include "rescheck/formats.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "rescheck/errors.hpp"

namespace rescheck {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

// Splits one line on blanks, remembering 1-based columns.
std::vector<Token> tokenize_line(const std::string& text, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({text.substr(start, i - start), line, static_cast<int>(start) + 1});
  }
  return out;
}

std::int64_t parse_int(const Token& t, const char* what) {
  std::int64_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError(t.line, t.col, std::string(what) + " '" + t.text + "' is out of range");
  if (ec != std::errc() || ptr != last)
    throw ParseError(t.line, t.col, std::string("expected ") + what + ", got '" + t.text + "'");
  return value;
}

Lit parse_literal(const Token& t, Var num_vars, bool bound_by_header) {
  std::int64_t v = parse_int(t, "literal");
  if (v == 0) throw ParseError(t.line, t.col, "unexpected literal 0");
  std::int64_t mag = v < 0 ? -v : v;
  if (mag > std::numeric_limits<Lit>::max())
    throw ParseError(t.line, t.col, "literal '" + t.text + "' is out of range");
  if (bound_by_header && mag > num_vars)
    throw ParseError(t.line, t.col, "variable " + std::to_string(mag) +
                                        " exceeds the declared bound of " +
                                        std::to_string(num_vars));
  return static_cast<Lit>(v);
}

}  // namespace

CnfProblem parse_dimacs(std::istream& in, const DimacsOptions& options) {
  CnfProblem p;
  bool have_header = false;
  std::int64_t declared_clauses = 0;
  Clause pending;
  Token clause_start;  // first literal of the pending clause, for diagnostics
  Token last_token;

  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::vector<Token> toks = tokenize_line(text, line_no);
    if (toks.empty() || toks[0].text == "c" || toks[0].text[0] == 'c') continue;

    std::size_t k = 0;
    if (!have_header) {
      if (toks[0].text != "p")
        throw ParseError(toks[0].line, toks[0].col, "expected DIMACS header 'p cnf'");
      if (toks.size() < 4 || toks[1].text != "cnf")
        throw ParseError(toks[0].line, toks[0].col, "malformed header: expected 'p cnf <vars> <clauses>'");
      std::int64_t nv = parse_int(toks[2], "variable count");
      declared_clauses = parse_int(toks[3], "clause count");
      if (nv < 1 || nv > std::numeric_limits<Var>::max())
        throw ParseError(toks[2].line, toks[2].col, "variable count must be a positive 32-bit integer");
      if (declared_clauses < 0)
        throw ParseError(toks[3].line, toks[3].col, "clause count cannot be negative");
      p.num_vars = static_cast<Var>(nv);
      have_header = true;
      k = 4;
    }

    for (; k < toks.size(); ++k) {
      last_token = toks[k];
      std::int64_t v = parse_int(toks[k], "literal");
      if (v == 0) {
        if (pending.empty())
          throw ParseError(toks[k].line, toks[k].col,
                           "literal 0 at clause start: empty clauses cannot be written in this format");
        try {
          p.clauses.push_back(normalize_clause(pending));
        } catch (const TautologyError& e) {
          throw ParseError(clause_start.line, clause_start.col, e.what());
        }
        pending.clear();
      } else {
        if (pending.empty()) clause_start = toks[k];
        pending.push_back(parse_literal(toks[k], p.num_vars, true));
      }
    }
  }

  if (!have_header) throw ParseError(line_no ? line_no : 1, 0, "missing DIMACS header 'p cnf'");
  if (!pending.empty())
    throw ParseError(last_token.line, last_token.col, "unterminated final clause (missing 0)");
  if (static_cast<std::int64_t>(p.clauses.size()) != declared_clauses) {
    std::string msg = "clause count mismatch: header declares " +
                      std::to_string(declared_clauses) + ", file contains " +
                      std::to_string(p.clauses.size());
    if (!options.allow_header_mismatch) throw ParseError(line_no ? line_no : 1, 0, msg);
    if (options.warnings) options.warnings->push_back("warning: " + msg);
  }
  return p;
}

RawTrace parse_trace(std::istream& in) {
  RawTrace t;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::vector<Token> toks = tokenize_line(text, line_no);
    if (toks.empty()) continue;

    std::int64_t id64 = parse_int(toks[0], "row id");
    if (id64 <= 0)
      throw ParseError(toks[0].line, toks[0].col, "row id must be positive, got '" + toks[0].text + "'");
    ClauseId id = static_cast<ClauseId>(id64);

    if (toks.size() >= 2 && toks[1].text == "*") {
      // Compact chain: everything after the star is an antecedent id.
      std::vector<std::int64_t> vals;
      std::vector<Token> val_toks;
      for (std::size_t k = 2; k < toks.size(); ++k) {
        vals.push_back(parse_int(toks[k], "antecedent id"));
        val_toks.push_back(toks[k]);
      }
      while (!vals.empty() && vals.back() == 0) {
        vals.pop_back();
        val_toks.pop_back();
      }
      Chain chain;
      chain.id = id;
      chain.line = line_no;
      for (std::size_t k = 0; k < vals.size(); ++k) {
        if (vals[k] <= 0)
          throw ParseError(val_toks[k].line, val_toks[k].col,
                           "antecedent id must be positive, got '" + val_toks[k].text + "'");
        chain.antecedents.push_back(static_cast<ClauseId>(vals[k]));
      }
      if (chain.antecedents.size() < 2)
        throw ParseError(toks[0].line, toks[0].col,
                         "chain " + std::to_string(id) + " needs at least two antecedents");
      t.chain_rows.push_back(std::move(chain));
      continue;
    }

    // Input row or extended chain; no star allowed from here on.
    std::vector<std::int64_t> vals;
    std::vector<Token> val_toks;
    for (std::size_t k = 1; k < toks.size(); ++k) {
      vals.push_back(parse_int(toks[k], "literal"));
      val_toks.push_back(toks[k]);
    }
    while (!vals.empty() && vals.back() == 0) {
      vals.pop_back();
      val_toks.pop_back();
    }
    if (vals.empty())
      throw ParseError(toks[0].line, toks[0].col, "row " + std::to_string(id) + " has no content");

    std::size_t zero_at = vals.size();
    for (std::size_t k = 0; k < vals.size(); ++k) {
      if (vals[k] != 0) continue;
      if (zero_at != vals.size())
        throw ParseError(val_toks[k].line, val_toks[k].col,
                         "unexpected zero inside row: only one literal/antecedent separator is allowed");
      zero_at = k;
    }

    if (zero_at == vals.size()) {
      // Pure literal list: an input clause row.
      if (!t.chain_rows.empty())
        throw ParseError(toks[0].line, toks[0].col,
                         "input clause row " + std::to_string(id) + " appears after chain rows");
      TraceInputRow row;
      row.id = id;
      row.line = line_no;
      for (std::size_t k = 0; k < vals.size(); ++k)
        row.literals.push_back(parse_literal(val_toks[k], 0, false));
      t.input_rows.push_back(std::move(row));
    } else {
      // Extended chain: stated resolvent, separator, antecedents.
      Chain chain;
      chain.id = id;
      chain.line = line_no;
      Clause stated;
      for (std::size_t k = 0; k < zero_at; ++k)
        stated.push_back(parse_literal(val_toks[k], 0, false));
      for (std::size_t k = zero_at + 1; k < vals.size(); ++k) {
        if (vals[k] <= 0)
          throw ParseError(val_toks[k].line, val_toks[k].col,
                           "antecedent id must be positive, got '" + val_toks[k].text + "'");
        chain.antecedents.push_back(static_cast<ClauseId>(vals[k]));
      }
      if (chain.antecedents.size() < 2)
        throw ParseError(toks[0].line, toks[0].col,
                         "chain " + std::to_string(id) + " needs at least two antecedents");
      chain.stated_resolvent = std::move(stated);
      t.chain_rows.push_back(std::move(chain));
    }
  }
  return t;
}

Assignment parse_assignment(std::istream& in, Var num_vars) {
  Assignment a;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::vector<Token> toks = tokenize_line(text, line_no);
    if (toks.empty()) continue;
    if (toks[0].text == "c" || toks[0].text == "s") continue;  // comment / status line
    if (toks[0].text != "v")
      throw ParseError(toks[0].line, toks[0].col,
                       "unrecognized line: expected a 'v' value line, got '" + toks[0].text + "'");
    bool ended = false;
    for (std::size_t k = 1; k < toks.size(); ++k) {
      if (ended)
        throw ParseError(toks[k].line, toks[k].col, "token after the terminating 0");
      std::int64_t v = parse_int(toks[k], "assignment literal");
      if (v == 0) {
        ended = true;
        continue;
      }
      std::int64_t mag = v < 0 ? -v : v;
      if (mag > num_vars)
        throw ParseError(toks[k].line, toks[k].col,
                         "variable " + std::to_string(mag) + " exceeds the problem's " +
                             std::to_string(num_vars) + " variables");
      Var var = static_cast<Var>(mag);
      bool value = v > 0;
      auto it = a.values.find(var);
      if (it != a.values.end() && it->second != value)
        throw ParseError(toks[k].line, toks[k].col,
                         "conflicting assignment for variable " + std::to_string(var));
      a.values[var] = value;
    }
  }
  return a;
}

std::string serialize_dimacs(const CnfProblem& p) {
  std::ostringstream os;
  os << "p cnf " << p.num_vars << ' ' << p.clauses.size() << '\n';
  for (const Clause& c : p.clauses) {
    for (Lit l : c) os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

std::string serialize_trace(const RawTrace& t) {
  std::ostringstream os;
  for (const TraceInputRow& row : t.input_rows) {
    os << row.id;
    for (Lit l : row.literals) os << ' ' << l;
    os << " 0\n";
  }
  for (const Chain& chain : t.chain_rows) {
    os << chain.id;
    if (chain.stated_resolvent) {
      for (Lit l : *chain.stated_resolvent) os << ' ' << l;
      os << " 0";
    } else {
      os << " *";
    }
    for (ClauseId a : chain.antecedents) os << ' ' << a;
    os << " 0\n";
  }
  return os.str();
}

ProofDb build_proof_db(const RawTrace& t) {
  ProofDb db;
  for (const TraceInputRow& row : t.input_rows) {
    try {
      db.add_input_clause(row.id, normalize_clause(row.literals), row.line);
    } catch (const TautologyError& e) {
      throw FormatError("input row " + std::to_string(row.id) + ": " + e.what(), row.line);
    }
  }
  for (const Chain& chain : t.chain_rows) db.add_chain(chain);
  return db;
}

}  // namespace rescheck
