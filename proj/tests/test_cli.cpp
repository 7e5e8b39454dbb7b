#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qhs/cli.hpp"
#include "qhs/errors.hpp"
#include "qhs/expr.hpp"
#include "qhs/qminors.hpp"

using namespace qhs;

namespace {

struct RunResult {
  int code = -1;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(QHS_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(f.good(), "missing golden file ", name);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("golden files: every subcommand in both formats") {
  struct Case {
    std::string name;
    std::vector<std::string> args;
    int code = 0;
  };
  const std::vector<Case> cases = {
      {"nf", {"nf", "--n", "2", "x[2,2]*x[1,1]"}, 0},
      {"coprod", {"coprod", "--n", "2", "x[1,1]"}, 0},
      {"minor", {"minor", "--n", "3", "D[1,2;2,3]"}, 0},
      {"central-check", {"central-check", "--n", "2", "D[1,2;1,2]"}, 0},
      {"central-check-fail", {"central-check", "--n", "2", "x[1,1]"}, 1},
      {"section-check", {"section-check", "--n", "3", "--r", "1", "x[1,1]"}, 0},
      {"semiinv", {"semiinv", "--n", "4", "--r", "2", "--max-degree", "3", "D[1,4;1,2]"}, 0},
      {"solve-semiinv", {"solve-semiinv", "--n", "4", "--r", "2"}, 0},
      {"plucker", {"plucker", "--n", "4", "--r", "2"}, 0},
      {"bigcell-manin", {"bigcell-manin", "--n", "4", "--r", "2"}, 0},
      {"poisson", {"poisson", "--n", "2", "--samples", "40"}, 0},
      {"qdp-struct", {"qdp-struct", "--n", "2"}, 0},
      {"qdp-pperp", {"qdp-pperp", "--n", "4", "--r", "2"}, 0},
      {"coisotropy", {"coisotropy", "--s", "3/5", "--c", "4/5"}, 0},
      {"coisotropy-gl", {"coisotropy", "--n", "3", "--r", "1"}, 0},
      {"flag-section", {"flag-section", "--n", "3", "--flag-type", "1,2"}, 0},
  };
  for (const Case& c : cases) {
    CAPTURE(c.name);

    RunResult text = run(c.args);
    CHECK(text.code == c.code);
    CHECK(text.err == "");
    CHECK(text.out == slurp(c.name + ".txt"));

    std::vector<std::string> jargs = c.args;
    jargs.insert(jargs.end(), {"--format", "json"});
    RunResult json = run(jargs);
    CHECK(json.code == c.code);
    CHECK(json.err == "");
    CHECK(json.out == slurp(c.name + ".json"));

    // The JSON side honors the documented schema.
    nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(json.out);
    REQUIRE(parsed.contains("ok"));
    REQUIRE(parsed.contains("command"));
    REQUIRE(parsed.contains("result"));
    CHECK(parsed["ok"].get<bool>() == (c.code == 0));
    CHECK(parsed["command"].get<std::string>() == c.args.front());
    CHECK(parsed.contains("witness") == (c.name == "central-check-fail"));
  }
}

TEST_CASE("exit codes: verification failure is 1, with witness in the output") {
  RunResult central = run({"central-check", "--n", "2", "x[1,1]"});
  CHECK(central.code == 1);
  CHECK(central.out.find("witness") != std::string::npos);
  CHECK(central.err == "");

  // eps(x[1,2]) = 0, so x[1,2] is not even a pre-quantum section.
  RunResult section = run({"section-check", "--n", "2", "--r", "1", "x[1,2]"});
  CHECK(section.code == 1);
  CHECK(section.out.find("not_section") != std::string::npos);

  // Delta_pi(x[2,2]) has two surviving terms, so no semi-invariant degree.
  RunResult semi = run({"semiinv", "--n", "2", "--r", "1", "x[2,2]"});
  CHECK(semi.code == 1);
  CHECK(semi.out.find("no semi-invariant degree up to 5") != std::string::npos);
}

TEST_CASE("exit codes: usage and parse errors are 2, diagnostics on stderr") {
  const std::vector<std::vector<std::string>> bad = {
      {"frobnicate"},                                        // unknown command
      {"nf"},                                                // missing --n
      {"nf", "--n", "2"},                                    // missing expression
      {"nf", "--n", "2", "x[1,1] +"},                        // syntax error
      {"nf", "--n", "2", "x[3,1]"},                          // index out of range
      {"nf", "--n", "2", "--bogus", "x[1,1]"},               // unknown flag
      {"nf", "--n", "2", "--format", "yaml", "x[1,1]"},      // bad format
      {"coprod", "--n", "2", "D[1,2;1,2]^-1"},               // fraction where poly needed
      {"minor", "--n", "2", "x[1,1]"},                       // not a single minor
      {"plucker", "--n", "4"},                               // missing --r
      {"plucker", "--n", "4", "--r", "2", "x[1,1]"},         // stray expression
      {"section-check", "--n", "2", "x[1,1]"},               // missing --r/--flag-type
      {"coisotropy", "--s", "1/2", "--c", "1/2"},            // not on the circle
      {"coisotropy", "--s", "3/5"},                          // --c missing
      {"coisotropy", "--s", "3/x", "--c", "4/5"},            // malformed rational
      {"coisotropy", "--n", "2"},                            // missing --r
      {"flag-section", "--n", "3", "--flag-type", "2,1"},    // not increasing
      {"solve-semiinv", "--n", "4", "--r", "2", "--x-degree", "3"},  // component > cap
      {"qdp-pperp", "--n", "3", "--r", "3"},                 // r out of range
  };
  for (const std::vector<std::string>& args : bad) {
    CAPTURE(args.front());
    RunResult r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out == "");
    CHECK(r.err.find("error") != std::string::npos);
  }

  RunResult syntax = run({"nf", "--n", "2", "x[1,1] +"});
  CHECK(syntax.err.find("syntax error at offset 8") != std::string::npos);

  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("printed fractions re-parse to equal values") {
  AlgebraContext ctx{3};
  const std::vector<std::string> inputs = {
      "x[2,1]*x[1,1]",
      "x[2,2]*x[1,1] - x[1,2]*x[2,1]",
      "D[1,2;1,2]*D[1,3;2,3]",
      "q^-3*x[1,1]^2 - 2/3*x[2,3]",
      "D[1,2,3;1,2,3]^-2*x[1,2]",
      "-q + q^-1",
      "(x[1,1] + x[2,2])^3",
      "D[1,2,3;1,2,3]^-1*D[1,2,3;1,2,3] - 1",
      "0",
      "7/2",
      "x[3,3]*x[2,2]*x[1,1]*x[3,1]",
      "-(x[1,1] - q*x[2,2])*(x[1,3] + x[3,1])",
  };
  for (const std::string& s : inputs) {
    CAPTURE(s);
    CentralFraction v1 = evaluate(ctx, parse_expression(s, ctx));
    std::string printed = fraction_str(ctx, v1);
    CentralFraction v2 = evaluate(ctx, parse_expression(printed, ctx));
    CHECK(frac_eq(ctx, v1, v2));
    CHECK(fraction_str(ctx, v2) == printed);
  }

  // CLI-level: nf output is already normal, so a second pass is the identity.
  RunResult once = run({"nf", "--n", "2", "x[2,2]*x[1,1]"});
  std::string printed = once.out.substr(0, once.out.size() - 1);  // strip newline
  RunResult twice = run({"nf", "--n", "2", printed});
  CHECK(twice.out == once.out);
}

TEST_CASE("parser diagnostics carry byte offsets and expected sets") {
  AlgebraContext ctx{2};
  auto diag = [&](const std::string& s) -> std::pair<std::size_t, std::string> {
    try {
      parse_expression(s, ctx);
    } catch (const SyntaxError& e) {
      return {e.offset, e.expected};
    }
    FAIL("expected SyntaxError for ", s);
    return {0, ""};
  };
  CHECK(diag("x[1,1] +") == std::pair<std::size_t, std::string>(
                                8, "a rational, 'q', 'x[i,j]', 'D[rows;cols]', or '('"));
  CHECK(diag("") == std::pair<std::size_t, std::string>(
                        0, "a rational, 'q', 'x[i,j]', 'D[rows;cols]', or '('"));
  CHECK(diag("2q") == std::pair<std::size_t, std::string>(1, "'+', '-', '*', or end of input"));
  CHECK(diag("q^") == std::pair<std::size_t, std::string>(2, "a digit"));
  CHECK(diag("3/0") == std::pair<std::size_t, std::string>(2, "a nonzero denominator"));
  CHECK(diag("x[1,1") == std::pair<std::size_t, std::string>(5, "']'"));
  CHECK(diag("D[1,2;1]") ==
        std::pair<std::size_t, std::string>(7, "row and column lists of equal length"));
  CHECK(diag("x[1,1]^-1") ==
        std::pair<std::size_t, std::string>(
            7, "a nonnegative exponent (negative powers only on q and D[1..n;1..n])"));
  CHECK(diag("D[1;1]^-1") ==
        std::pair<std::size_t, std::string>(
            7, "a nonnegative exponent (negative powers only on q and D[1..n;1..n])"));
  CHECK(diag("1234567890") == std::pair<std::size_t, std::string>(0, "a shorter integer literal"));

  CHECK_THROWS_AS(parse_expression("x[3,1]", ctx), IndexOutOfRange);
  CHECK_THROWS_AS(parse_expression("D[1,3;1,2]", ctx), IndexOutOfRange);

  // q alone is a unit: negative powers parse and evaluate.
  CentralFraction f = evaluate(ctx, parse_expression("q^-2*q^2", ctx));
  CHECK(frac_eq(ctx, f, CentralFraction{QElement::scalar(ctx, 1), 0}));
}
