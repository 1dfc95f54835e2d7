#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rescheck/errors.hpp"
#include "rescheck/formats.hpp"
#include "support/generators.hpp"

using namespace rescheck;
using namespace rescheck::testing;

namespace {

CnfProblem dimacs(const std::string& text, DimacsOptions options = {}) {
  std::istringstream in(text);
  return parse_dimacs(in, options);
}

RawTrace trace(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in);
}

Assignment assignment(const std::string& text, Var num_vars) {
  std::istringstream in(text);
  return parse_assignment(in, num_vars);
}

}  // namespace

TEST_CASE("parse_dimacs reads the four-clause problem") {
  CnfProblem p = dimacs("p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");
  CHECK(p.num_vars == 2);
  REQUIRE(p.clauses.size() == 4);
  CHECK(p.clauses[0] == Clause{1, 2});
  CHECK(p.clauses[1] == Clause{-1, 2});
  CHECK(p.clauses[2] == Clause{1, -2});
  CHECK(p.clauses[3] == Clause{-1, -2});
}

TEST_CASE("parse_dimacs handles comments, line splits, and CRLF") {
  CnfProblem p = dimacs("c banner\r\np cnf 3 2\r\nc mid comment\r\n1 2\r\n3 0 -1 0\r\n");
  CHECK(p.num_vars == 3);
  REQUIRE(p.clauses.size() == 2);
  CHECK(p.clauses[0] == Clause{1, 2, 3});
  CHECK(p.clauses[1] == Clause{-1});

  CHECK(dimacs("p cnf 1 1\n1 0").clauses == std::vector<Clause>{{1}});
}

TEST_CASE("parse_dimacs normalizes clause literal order") {
  CnfProblem p = dimacs("p cnf 3 1\n3 -1 2 0\n");
  CHECK(p.clauses[0] == Clause{-1, 2, 3});
}

TEST_CASE("parse_dimacs rejects malformed input with positions") {
  SUBCASE("variable above the header bound") {
    try {
      dimacs("p cnf 2 1\n1 3 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(e.col == 3);
      CHECK(std::string(e.what()).find("exceeds the declared bound") != std::string::npos);
    }
  }
  SUBCASE("junk token") {
    try {
      dimacs("p cnf 2 1\n1 x 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(e.col == 3);
    }
  }
  SUBCASE("missing header") { CHECK_THROWS_AS(dimacs("1 2 0\n"), ParseError); }
  SUBCASE("empty input") { CHECK_THROWS_AS(dimacs(""), ParseError); }
  SUBCASE("unterminated final clause") {
    try {
      dimacs("p cnf 2 1\n1 2");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(std::string(e.what()).find("unterminated") != std::string::npos);
    }
  }
  SUBCASE("zero at clause start") {
    try {
      dimacs("p cnf 2 2\n0\n1 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(e.col == 1);
      CHECK(std::string(e.what()).find("empty clauses") != std::string::npos);
    }
  }
  SUBCASE("tautology reported at the clause start") {
    try {
      dimacs("p cnf 2 2\n2 0 1 -1 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(e.col == 5);
      CHECK(std::string(e.what()).find("tautological") != std::string::npos);
    }
  }
  SUBCASE("header variable count must be positive") {
    CHECK_THROWS_AS(dimacs("p cnf 0 0\n"), ParseError);
    CHECK_THROWS_AS(dimacs("p cnf -3 1\n1 0\n"), ParseError);
  }
  SUBCASE("header clause count cannot be negative") {
    CHECK_THROWS_AS(dimacs("p cnf 2 -1\n"), ParseError);
  }
  SUBCASE("numeric overflow") {
    CHECK_THROWS_AS(dimacs("p cnf 1 1\n2147483648 0\n"), ParseError);
    CHECK_THROWS_AS(dimacs("p cnf 1 1\n99999999999999999999 0\n"), ParseError);
    CHECK_THROWS_AS(dimacs("p cnf 99999999999999999999 1\n1 0\n"), ParseError);
  }
}

TEST_CASE("clause-count mismatches are fatal unless relaxed") {
  CHECK_THROWS_AS(dimacs("p cnf 2 2\n1 0\n"), ParseError);

  std::vector<std::string> warnings;
  DimacsOptions relaxed;
  relaxed.allow_header_mismatch = true;
  relaxed.warnings = &warnings;
  CnfProblem p = dimacs("p cnf 2 2\n1 0\n", relaxed);
  CHECK(p.clauses.size() == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("clause count mismatch") != std::string::npos);
}

TEST_CASE("parse_trace reads input, compact, and extended rows") {
  RawTrace t = trace("1 1 2 0\n5 * 3 1 0\n6 * 4 2 5 0\n");
  REQUIRE(t.input_rows.size() == 1);
  CHECK(t.input_rows[0].id == 1);
  CHECK(t.input_rows[0].literals == Clause{1, 2});
  REQUIRE(t.chain_rows.size() == 2);
  CHECK(t.chain_rows[0].id == 5);
  CHECK(t.chain_rows[0].antecedents == std::vector<ClauseId>{3, 1});
  CHECK_FALSE(t.chain_rows[0].stated_resolvent.has_value());
  CHECK(t.chain_rows[1].id == 6);
  CHECK(t.chain_rows[1].antecedents == std::vector<ClauseId>{4, 2, 5});

  t = trace("5 1 0 3 1 0\n");
  REQUIRE(t.chain_rows.size() == 1);
  CHECK(t.chain_rows[0].id == 5);
  CHECK(t.chain_rows[0].antecedents == std::vector<ClauseId>{3, 1});
  CHECK(t.chain_rows[0].stated_resolvent == Clause{1});

  t = trace("7 0 3 4 0\n");  // extended row stating the empty clause
  REQUIRE(t.chain_rows.size() == 1);
  CHECK(t.chain_rows[0].stated_resolvent == Clause{});

  t = trace("2 3 -1 2 0\n");  // input literals keep file order
  CHECK(t.input_rows[0].literals == Clause{3, -1, 2});

  t = trace("1 1 2\n");  // the trailing zero is optional
  CHECK(t.input_rows[0].literals == Clause{1, 2});
}

TEST_CASE("parse_trace rejects malformed rows") {
  CHECK_THROWS_AS(trace("7 * 4 0\n"), ParseError);          // one antecedent
  CHECK_THROWS_AS(trace("0 1 2 0\n"), ParseError);          // zero row id
  CHECK_THROWS_AS(trace("-3 1 0\n"), ParseError);           // negative row id
  CHECK_THROWS_AS(trace("abc 1 0\n"), ParseError);          // junk id
  CHECK_THROWS_AS(trace("5\n"), ParseError);                // bare id
  CHECK_THROWS_AS(trace("5 0\n"), ParseError);              // strips to nothing
  CHECK_THROWS_AS(trace("5 1 0 3 1 0 7 0\n"), ParseError);  // second separator
  CHECK_THROWS_AS(trace("5 * 3 0 4 0\n"), ParseError);      // zero among antecedents
  CHECK_THROWS_AS(trace("5 * 3 -1 0\n"), ParseError);       // negative antecedent
  CHECK_THROWS_AS(trace("5 1 * 3 0\n"), ParseError);        // stray asterisk
  CHECK_THROWS_AS(trace("5 1 0 3 0\n"), ParseError);        // extended, one antecedent

  try {
    trace("1 1 0\n5 * 1 1 0\n2 2 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("after chain rows") != std::string::npos);
  }
}

TEST_CASE("parse_assignment reads value lines") {
  Assignment a = assignment("v 1 -2 0\n", 2);
  CHECK(a.values.at(1) == true);
  CHECK(a.values.at(2) == false);

  a = assignment("v -1 0\nv 2 0\n", 2);
  CHECK(a.values.at(1) == false);
  CHECK(a.values.at(2) == true);

  a = assignment("c solver banner\ns SATISFIABLE\nv 1 0\n", 1);
  CHECK(a.values.size() == 1);
  CHECK(a.values.at(1) == true);

  CHECK(assignment("v 1 1 0\n", 1).values.at(1) == true);  // repeat, consistent

  CHECK_THROWS_AS(assignment("v 1 -1 0\n", 2), ParseError);  // conflict
  CHECK_THROWS_AS(assignment("v 3 0\n", 2), ParseError);     // above num_vars
  CHECK_THROWS_AS(assignment("w 1 0\n", 2), ParseError);     // unknown line kind
  CHECK_THROWS_AS(assignment("v 1 0 2\n", 2), ParseError);   // token after the 0
  CHECK_THROWS_AS(assignment("v 1 x 0\n", 2), ParseError);   // junk value
}

TEST_CASE("serializers emit the canonical text forms") {
  CnfProblem p{2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}};
  CHECK(serialize_dimacs(p) == "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");

  RawTrace t;
  TraceInputRow row;
  row.id = 1;
  row.literals = {1, 2};
  t.input_rows.push_back(row);
  Chain compact;
  compact.id = 5;
  compact.antecedents = {3, 1};
  Chain extended;
  extended.id = 6;
  extended.antecedents = {4, 2, 5};
  extended.stated_resolvent = Clause{};
  t.chain_rows = {compact, extended};
  CHECK(serialize_trace(t) == "1 1 2 0\n5 * 3 1 0\n6 0 4 2 5 0\n");

  extended.stated_resolvent = Clause{-2, 2};
  t.chain_rows = {extended};
  t.input_rows.clear();
  CHECK(serialize_trace(t) == "6 -2 2 0 4 2 5 0\n");
}

TEST_CASE("random problems survive serialize then parse") {
  Rng rng(4001);
  int violations = 0;
  for (int it = 0; it < 500; ++it) {
    CnfProblem p = random_cnf_problem(rng);
    std::istringstream in(serialize_dimacs(p));
    CnfProblem q = parse_dimacs(in);
    if (q.num_vars != p.num_vars || q.clauses != p.clauses) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("random traces survive serialize then parse") {
  Rng rng(4002);
  int violations = 0;
  for (int it = 0; it < 500; ++it) {
    RawTrace t = random_raw_trace(rng);
    std::istringstream in(serialize_trace(t));
    if (!same_trace(t, parse_trace(in))) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("build_proof_db rejects broken row sets") {
  CHECK_THROWS_AS(build_proof_db(trace("1 1 0\n1 2 0\n")), FormatError);
  CHECK_THROWS_AS(build_proof_db(trace("1 1 0\n5 * 1 1 0\n5 * 1 1 0\n")), FormatError);
  CHECK_THROWS_AS(build_proof_db(trace("1 1 0\n1 * 1 1 0\n")), FormatError);

  try {
    build_proof_db(trace("1 2 0\n2 1 -1 0\n"));
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("tautological") != std::string::npos);
  }

  // input rows are normalized on the way into the table
  ProofDb db = build_proof_db(trace("1 2 -1 0\n"));
  CHECK(db.input_rows()[0].second == Clause{-1, 2});
}

TEST_CASE("the worked example parses and verifies end to end") {
  CnfProblem p = dimacs("p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");
  ProofDb db = build_proof_db(
      trace("1 1 2 0\n2 -1 2 0\n3 1 -2 0\n4 -1 -2 0\n5 * 3 1 0\n6 * 4 2 5 0\n"));
  CHECK(db.check_origins(p.clauses).ok);
  Verdict v = db.find_and_resolve();
  CHECK(v.status == CheckStatus::VerifiedUnsat);
  CHECK(v.stats.resolutions == 3);
}
