#include <gtest/gtest.h>

#include "asc/error.hpp"
#include "asc/homology.hpp"
#include "asc/io.hpp"

using namespace asc;

namespace {

const char* kGamma = R"(# the four-vertex example
vertices: 1 2 3 4
alpha: 1 -> 4
alphastar: 2 -> 1
beta: 2 -> 3
betastar: 3 -> 4
gamma: 4 -> 2
rel: beta.gamma.betastar
rel: alphastar.gamma.alpha
rel: alpha.alphastar - betastar.beta
rel: alpha.alphastar.gamma
)";

int parse_error_line(const std::string& text, int* column = nullptr) {
  try {
    parse_algebra_text(text);
  } catch (const ParseError& e) {
    if (column) *column = e.column();
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(AlgebraText, ParsesGamma) {
  auto bqa = parse_algebra_text(kGamma);
  EXPECT_TRUE(same_presentation(bqa, gamma_bound_quiver()));
  EXPECT_EQ(compile(bqa)->dim(), 17u);
}

TEST(AlgebraText, RoundTrip) {
  for (const auto& bqa : {gamma_bound_quiver(), preprojective(3), linear_quiver(3), truncated_loop(3)}) {
    std::string text = algebra_to_text(bqa);
    EXPECT_TRUE(same_presentation(parse_algebra_text(text), bqa)) << text;
  }
  auto b = parse_algebra_text("vertices: 1 2\norder: diagrammatic\na: 1 -> 2\nb: 2 -> 1\nrel: 2 a.b - 1/2*a.b\n");
  EXPECT_EQ(b.relations[0].terms.size(), 2u);
  EXPECT_EQ(b.relations[0].terms[1].first, Scalar(-1, 2));
  EXPECT_TRUE(same_presentation(parse_algebra_text(algebra_to_text(b)), b));
}

TEST(AlgebraText, ErrorsCarryPosition) {
  int col = 0;
  EXPECT_EQ(parse_error_line("vertices: 1 2\na 1 -> 2\n", &col), 2);
  EXPECT_EQ(col, 1);
  EXPECT_EQ(parse_error_line("vertices: 1 2\na: 1 -> 3\n"), 2);
  EXPECT_EQ(parse_error_line("vertices: 1 2\na: 1 -> 2\nrel: a.zz\n", &col), 3);
  EXPECT_EQ(col, 8);
  // Functional order: b.a means a then b, which does not compose here.
  EXPECT_EQ(parse_error_line("vertices: 1 2 3\na: 1 -> 2\nb: 3 -> 1\nrel: b.a\n"), 4);
  EXPECT_EQ(parse_error_line("vertices: 1\n\n\nrel: \n"), 4);
  EXPECT_EQ(parse_error_line("a: 1 -> 2\n"), 1);
  EXPECT_EQ(parse_error_line("# nothing\n"), 2);
  EXPECT_EQ(parse_error_line("vertices: 1 2\na: 1 -> 2\nb: 2 -> 1\nrel: a.b b.a\n"), 4);
}

TEST(AlgebraJson, RoundTrip) {
  for (const auto& a : {builtin_algebra("pi_a3"), builtin_algebra("gamma"), builtin_algebra("dual_numbers")}) {
    Json j = algebra_to_json(a);
    auto b = algebra_from_json(Json::parse(j.dump()));
    EXPECT_TRUE(b->same_as(*a));
    EXPECT_EQ(algebra_to_json(b), j);
  }
  EXPECT_EQ(builtin_algebra("nope"), nullptr);
}

TEST(ModuleJson, RoundTripRepresentationAndActions) {
  auto a = builtin_algebra("pi_a3");
  for (const auto& x : ambient_context(a).indecomposables) {
    Module y = module_from_json(a, Json::parse(module_to_json(x).dump()));
    EXPECT_TRUE(same_module(x, y));
    Json acts;
    acts["actions"] = Json::array();
    for (std::size_t i = 0; i < a->dim(); ++i) {
      Matrix m = x.action(a->basis_vector(i));
      Json rows = Json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
      }
      acts["actions"].push_back(rows);
    }
    EXPECT_TRUE(is_isomorphic(module_from_json(a, acts), x));
  }
}

TEST(ModuleJson, RejectsBadInput) {
  auto a = builtin_algebra("dual_numbers");
  EXPECT_THROW(module_from_json(a, Json::parse(R"({"dims": [2], "arrows": [[["0","1"]]]})")), ContractViolation);
  EXPECT_NO_THROW(module_from_json(a, Json::parse(R"({"dims": [2], "arrows": [[["0","0"],["1","0"]]]})")));
  // x^2 = 0 fails for a nilpotent of order 3.
  EXPECT_THROW(module_from_json(a, Json::parse(
                                       R"({"dims": [3], "arrows": [[["0","0","0"],["1","0","0"],["0","1","0"]]]})")),
               ContractViolation);
  EXPECT_THROW(module_from_json(a, Json::parse(R"({"dims": [2], "arrows": [[[0.5,"0"],["0","0"]]]})")),
               ContractViolation);
}

TEST(ContextJson, RoundTrip) {
  Workspace ws;
  auto g = builtin_algebra("gamma");
  SubcatContext c = ws.context(g, "gp");
  SubcatContext d = context_from_json(g, Json::parse(context_to_json(c).dump()));
  ASSERT_EQ(d.size(), c.size());
  EXPECT_EQ(d.names, c.names);
  EXPECT_EQ(d.projective_members, c.projective_members);
  EXPECT_EQ(d.injective_members, c.injective_members);
  EXPECT_EQ(d.ambient, c.ambient);
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_TRUE(same_module(c.indecomposables[k], d.indecomposables[k]));
}

TEST(Workspace, ModuleExpressions) {
  Workspace ws;
  auto a = ws.algebra("pi_a3");
  EXPECT_EQ(ws.module(a, "M").dim(), 10u + 3u);
  EXPECT_TRUE(is_isomorphic(ws.module(a, "A + P2/soc"), ws.module(a, "M")));
  EXPECT_TRUE(is_isomorphic(ws.module(a, "JP2"), radical(projective(a, 1)).module));
  EXPECT_TRUE(is_isomorphic(ws.module(a, "D"), ws.module(a, "A")));  // selfinjective
  EXPECT_THROW(ws.module(a, "S4"), ContractViolation);
  EXPECT_THROW(ws.module(a, "Q"), ContractViolation);
  EXPECT_THROW(ws.algebra("no_such_algebra"), ContractViolation);
  EXPECT_THROW(ws.context(a, "nope"), ContractViolation);
}

TEST(Workspace, LoadsAndResolves) {
  Json j = Json::parse(R"({
    "version": "1",
    "algebras": {
      "lam": {"builtin": "pi_a3"},
      "end": {"endo": {"algebra": "lam", "module": "m"}},
      "two": {"text": "vertices: 1 2\na: 1 -> 2\n"}
    },
    "modules": {
      "m": {"algebra": "lam", "expr": "A+P2/soc"},
      "s": {"algebra": "two", "rep": {"dims": [1, 0], "arrows": [[]]}}
    },
    "contexts": {"g": {"algebra": "end", "kind": "gorenstein-projective"}},
    "jobs": [{"predicate": "precluster", "algebra": "lam", "module": "m", "n": 2}]
  })");
  Workspace ws = load_workspace(j);
  EXPECT_EQ(ws.algebras.at("end")->dim(), 17u);
  EXPECT_EQ(ws.modules.at("s").second.dim(), 1u);
  EXPECT_EQ(ws.contexts.at("g").second.size(), 8u);
  EXPECT_EQ(ws.jobs.size(), 1u);
  EXPECT_TRUE(is_isomorphic(ws.module(ws.algebra("lam"), "m"), ws.module(ws.algebra("lam"), "M")));

  EXPECT_THROW(load_workspace(Json::parse(R"({"version": "2"})")), ContractViolation);
  EXPECT_THROW(load_workspace(Json::parse(
                   R"({"version": "1", "algebras": {"e": {"endo": {"algebra": "x", "module": "y"}}}})")),
               ContractViolation);
  EXPECT_THROW(load_workspace(Json::parse(R"({"version": "1", "algebras": {"t": {"text": "vertices: 1\nrel: a\n"}}})")),
               ParseError);
}
