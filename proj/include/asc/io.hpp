#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "asc/approx.hpp"

namespace asc {

using Json = nlohmann::json;

// Text algebra format, one item per line, '#' starts a comment:
//   vertices: 1 2 3
//   order: functional            (optional; or diagrammatic)
//   a: 1 -> 2
//   rel: a.b - 1/2 c.d
// Throws ParseError with line and column.
BoundQuiverAlgebra parse_algebra_text(const std::string& text);
std::string algebra_to_text(const BoundQuiverAlgebra& bqa);
bool same_presentation(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);

// Structure constants of a based algebra; rationals as "p/q" strings.
Json algebra_to_json(const AlgebraPtr& a);
AlgebraPtr algebra_from_json(const Json& j);

// Representation form: {"dims": [...], "arrows": [[row, ...], ...]} with
// one matrix per arrow of the derived quiver.
Json module_to_json(const Module& x);
// Accepts the representation form or {"actions": [...]}, one full action
// matrix per basis element.
Module module_from_json(const AlgebraPtr& a, const Json& j);
bool same_module(const Module& x, const Module& y);  // structural equality

// Explicit context: members with names and projective/injective flags.
Json context_to_json(const SubcatContext& ctx);
SubcatContext context_from_json(const AlgebraPtr& a, const Json& j);

// Built-in algebras: pi_a3, gamma, dual_numbers. Empty for other names.
AlgebraPtr builtin_algebra(const std::string& name);

// Named algebras, modules and contexts loaded from a workspace file:
//   {"version": "1",
//    "algebras": {name: {"builtin": ..} | {"text": ..} | {"structure": ..}
//                 | {"endo": {"algebra": .., "module": ..}}},
//    "modules": {name: {"algebra": .., "expr": "P1+P2/soc"} | {"algebra": .., "rep"/"actions": ..}},
//    "contexts": {name: {"algebra": .., "kind": "ambient" | "gorenstein-projective"}
//                 | {"algebra": .., "explicit": ..}},
//    "jobs": [{"predicate": .., "algebra": .., "module": .., "context": .., "n": ..}]}
struct Workspace {
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, std::pair<std::string, Module>> modules;  // algebra name, module
  std::map<std::string, std::pair<std::string, SubcatContext>> contexts;
  std::vector<Json> jobs;

  // Workspace algebra, built-in algebra, or algebra file (.json structure
  // constants, anything else the text format).
  AlgebraPtr algebra(const std::string& name_or_path) const;
  // '+'-separated summands: workspace module names, A (regular), D (dual of
  // A), Si, Pi, Ii, JPi (radical of Pi), Pi/soc, with 1-based vertices.
  // M is Lambda + P2/soc over pi_a3.
  Module module(const AlgebraPtr& a, const std::string& expr) const;
  // "ambient", "gp" (Gorenstein projectives seeded by simples and radicals
  // of projectives), or a workspace context.
  SubcatContext context(const AlgebraPtr& a, const std::string& name) const;
};

Workspace load_workspace(const Json& j, const std::string& base_dir = ".");
Workspace load_workspace_file(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace asc
