#include "asc/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "asc/endo.hpp"
#include "asc/error.hpp"
#include "asc/homology.hpp"

namespace asc {

namespace {

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '*';
}

// Parses a signed rational combination of paths; col0 is the 1-based column
// of text[0] on its line.
PathExpr parse_relation(const Quiver& q, CompositionOrder order, const std::string& text, int line,
                        int col0) {
  PathExpr expr;
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return col0 + static_cast<int>(at); };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  skip();
  if (i == text.size()) throw ParseError("empty relation", line, col(i));
  while (true) {
    skip();
    if (i == text.size()) break;
    Scalar sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", line, col(i));
    }
    Scalar coef = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
      try {
        coef = parse_scalar(text.substr(start, i - start));
      } catch (const Error&) {
        throw ParseError("bad coefficient", line, col(start));
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    std::size_t start = i;
    std::vector<std::string> labels;
    while (true) {
      if (i >= text.size() || !ident_start(text[i])) throw ParseError("expected an arrow name", line, col(i));
      std::size_t s = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      labels.push_back(text.substr(s, i - s));
      if (q.arrow_index(labels.back()) < 0)
        throw ParseError("unknown arrow '" + labels.back() + "'", line, col(s));
      if (i < text.size() && text[i] == '.') {
        ++i;
        continue;
      }
      break;
    }
    try {
      expr.terms.emplace_back(sign * coef, parse_path(q, labels, order));
    } catch (const MalformedRelation& e) {
      throw ParseError(e.what(), line, col(start));
    }
    first = false;
  }
  return expr;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ContractViolation("rational entries must be strings \"p/q\" or integers");
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  if (!j.is_array() || (rows > 0 && j.size() != rows))
    throw ContractViolation("matrix needs " + std::to_string(rows) + " rows");
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ContractViolation("matrix row needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_string(s));
  return out;
}

Vector vector_from_json(const Json& j) {
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

BoundQuiverAlgebra parse_algebra_text(const std::string& text) {
  BoundQuiverAlgebra bqa;
  struct PendingRel {
    std::string text;
    int line;
    int col;
  };
  std::vector<PendingRel> rels;
  bool have_vertices = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string content = raw.substr(0, raw.find('#'));
    std::size_t lead = 0;
    std::string t = trim(content, &lead);
    if (t.empty()) continue;
    const int c0 = static_cast<int>(lead) + 1;
    std::size_t colon = t.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line, c0);
    std::string key = trim(t.substr(0, colon));
    std::size_t vlead = 0;
    std::string value = trim(t.substr(colon + 1), &vlead);
    const int vcol = c0 + static_cast<int>(colon + 1 + vlead);
    if (key == "vertices") {
      std::istringstream vs(value);
      std::string v;
      while (vs >> v) {
        if (bqa.quiver.vertex_index(v) >= 0) throw ParseError("duplicate vertex '" + v + "'", line, vcol);
        bqa.quiver.add_vertex(v);
      }
      have_vertices = true;
    } else if (key == "order") {
      if (value == "functional") bqa.order = CompositionOrder::Functional;
      else if (value == "diagrammatic") bqa.order = CompositionOrder::Diagrammatic;
      else throw ParseError("order must be functional or diagrammatic", line, vcol);
    } else if (key == "rel") {
      rels.push_back({value, line, vcol});
    } else {
      if (key.empty() || !ident_start(key[0]) ||
          !std::all_of(key.begin(), key.end(), ident_char))
        throw ParseError("bad arrow name '" + key + "'", line, c0);
      if (!have_vertices) throw ParseError("arrows must follow the vertices line", line, c0);
      if (bqa.quiver.arrow_index(key) >= 0) throw ParseError("duplicate arrow '" + key + "'", line, c0);
      std::size_t arrow = value.find("->");
      if (arrow == std::string::npos) throw ParseError("expected 'source -> target'", line, vcol);
      std::string s = trim(value.substr(0, arrow));
      std::string d = trim(value.substr(arrow + 2));
      int si = bqa.quiver.vertex_index(s), di = bqa.quiver.vertex_index(d);
      if (si < 0) throw ParseError("unknown vertex '" + s + "'", line, vcol);
      if (di < 0) throw ParseError("unknown vertex '" + d + "'", line, vcol + static_cast<int>(arrow) + 2);
      bqa.quiver.add_arrow(key, si, di);
    }
  }
  if (!have_vertices) throw ParseError("missing vertices line", line + 1, 1);
  for (const auto& r : rels) bqa.relations.push_back(parse_relation(bqa.quiver, bqa.order, r.text, r.line, r.col));
  return bqa;
}

std::string algebra_to_text(const BoundQuiverAlgebra& bqa) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : bqa.quiver.vertices) out << ' ' << v;
  out << '\n';
  out << "order: " << (bqa.order == CompositionOrder::Functional ? "functional" : "diagrammatic") << '\n';
  for (const auto& a : bqa.quiver.arrows)
    out << a.label << ": " << bqa.quiver.vertices[a.source] << " -> " << bqa.quiver.vertices[a.target] << '\n';
  for (const auto& r : bqa.relations) {
    out << "rel:";
    bool first = true;
    for (const auto& [c, p] : r.terms) {
      Scalar mag = abs(c);
      if (first) out << (sgn(c) < 0 ? " -" : " ");
      else out << (sgn(c) < 0 ? " - " : " + ");
      if (mag != 1) out << to_string(mag) << ' ';
      out << path_label(bqa.quiver, p, bqa.order);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

bool same_presentation(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
  if (a.quiver.vertices != b.quiver.vertices || a.order != b.order) return false;
  if (a.quiver.arrows.size() != b.quiver.arrows.size() || a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.quiver.arrows.size(); ++i) {
    const auto &x = a.quiver.arrows[i], &y = b.quiver.arrows[i];
    if (x.label != y.label || x.source != y.source || x.target != y.target) return false;
  }
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    const auto &x = a.relations[i].terms, &y = b.relations[i].terms;
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].first != y[k].first || !(x[k].second == y[k].second)) return false;
  }
  return true;
}

Json algebra_to_json(const AlgebraPtr& a) {
  Json j;
  j["labels"] = a->labels();
  j["vertex_labels"] = a->vertex_labels();
  j["unit"] = vector_to_json(a->unit());
  j["idempotents"] = Json::array();
  for (const auto& e : a->idempotents()) j["idempotents"].push_back(vector_to_json(e));
  Json table = Json::array();
  for (std::size_t i = 0; i < a->dim(); ++i) {
    for (std::size_t k = 0; k < a->dim(); ++k) {
      Json entry = Json::array();
      for (const auto& [idx, c] : a->product(i, k)) entry.push_back(Json::array({idx, to_string(c)}));
      table.push_back(std::move(entry));
    }
  }
  j["table"] = std::move(table);
  return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
  auto labels = j.at("labels").get<std::vector<std::string>>();
  const std::size_t dim = labels.size();
  const Json& t = j.at("table");
  if (t.size() != dim * dim) throw ContractViolation("structure table needs dim^2 entries");
  std::vector<SparseVector> table(dim * dim);
  for (std::size_t k = 0; k < t.size(); ++k)
    for (const auto& e : t[k]) {
      auto idx = e.at(0).get<std::uint32_t>();
      if (idx >= dim) throw ContractViolation("structure constant index out of range");
      table[k].emplace_back(idx, scalar_from_json(e.at(1)));
    }
  std::vector<Vector> idem;
  for (const auto& e : j.at("idempotents")) idem.push_back(vector_from_json(e));
  return BasedAlgebra::create(std::move(labels), std::move(table), vector_from_json(j.at("unit")),
                              std::move(idem), j.at("vertex_labels").get<std::vector<std::string>>());
}

Json module_to_json(const Module& x) {
  Json j;
  j["dims"] = x.dims();
  j["arrows"] = Json::array();
  for (const auto& m : x.arrows()) j["arrows"].push_back(matrix_to_json(m));
  return j;
}

Module module_from_json(const AlgebraPtr& a, const Json& j) {
  if (j.contains("actions")) {
    const Json& acts = j.at("actions");
    if (acts.size() != a->dim()) throw ContractViolation("one action matrix per basis element is needed");
    std::size_t n = acts.empty() ? 0 : acts[0].size();
    std::vector<Matrix> mats;
    for (const auto& m : acts) mats.push_back(matrix_from_json(m, n, n));
    return module_from_action(a, mats, true);
  }
  auto dims = j.at("dims").get<std::vector<std::size_t>>();
  if (dims.size() != a->vertex_count()) throw ContractViolation("one dimension per vertex is needed");
  const Json& arrows = j.at("arrows");
  if (arrows.size() != a->arrows().size()) throw ContractViolation("one matrix per arrow is needed");
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& ar = a->arrows()[k];
    mats.push_back(matrix_from_json(arrows[k], dims[ar.target], dims[ar.source]));
  }
  return Module(a, std::move(dims), std::move(mats), true);
}

bool same_module(const Module& x, const Module& y) {
  if (!x.algebra()->same_as(*y.algebra()) || x.dims() != y.dims()) return false;
  for (std::size_t k = 0; k < x.arrows().size(); ++k)
    if (x.arrow(k).data() != y.arrow(k).data()) return false;
  return true;
}

Json context_to_json(const SubcatContext& ctx) {
  Json j;
  j["description"] = ctx.description;
  j["ambient"] = ctx.ambient;
  j["members"] = Json::array();
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    Json m;
    m["name"] = ctx.names[k];
    m["module"] = module_to_json(ctx.indecomposables[k]);
    auto in = [&](const std::vector<std::size_t>& v) { return std::find(v.begin(), v.end(), k) != v.end(); };
    m["projective"] = in(ctx.projective_members);
    m["injective"] = in(ctx.injective_members);
    j["members"].push_back(std::move(m));
  }
  return j;
}

SubcatContext context_from_json(const AlgebraPtr& a, const Json& j) {
  SubcatContext ctx;
  ctx.algebra = a;
  ctx.description = j.value("description", std::string("explicit context"));
  ctx.ambient = j.value("ambient", false);
  for (const auto& m : j.at("members")) {
    ctx.indecomposables.push_back(module_from_json(a, m.at("module")));
    const std::size_t k = ctx.names.size();
    ctx.names.push_back(m.value("name", standard_name(ctx.indecomposables.back())));
    if (m.value("projective", false)) ctx.projective_members.push_back(k);
    if (m.value("injective", false)) ctx.injective_members.push_back(k);
  }
  ctx.validate();
  return ctx;
}

AlgebraPtr builtin_algebra(const std::string& name) {
  static const AlgebraPtr pi = compile(preprojective(3));
  static const AlgebraPtr g = compile(gamma_bound_quiver());
  if (name == "pi_a3") return pi;
  if (name == "gamma") return g;
  if (name == "dual_numbers") return dual_numbers();
  return nullptr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

AlgebraPtr algebra_from_entry(const Json& e, const std::string& base_dir) {
  if (e.contains("builtin")) {
    auto a = builtin_algebra(e.at("builtin").get<std::string>());
    if (!a) throw ContractViolation("unknown built-in algebra " + e.at("builtin").dump());
    return a;
  }
  if (e.contains("text")) return compile(parse_algebra_text(e.at("text").get<std::string>()));
  if (e.contains("structure")) return algebra_from_json(e.at("structure"));
  if (e.contains("file")) {
    auto p = std::filesystem::path(base_dir) / e.at("file").get<std::string>();
    return compile(parse_algebra_text(read_file(p.string())));
  }
  throw ContractViolation("algebra entry needs builtin, text, structure, file or endo");
}

}  // namespace

AlgebraPtr Workspace::algebra(const std::string& name) const {
  if (auto it = algebras.find(name); it != algebras.end()) return it->second;
  if (auto a = builtin_algebra(name)) return a;
  if (std::filesystem::exists(name)) {
    std::string text = read_file(name);
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
      Json j = Json::parse(text);
      return j.contains("labels") ? algebra_from_json(j) : algebra_from_entry(j, ".");
    }
    return compile(parse_algebra_text(text));
  }
  throw ContractViolation("unknown algebra '" + name + "'");
}

Module Workspace::module(const AlgebraPtr& a, const std::string& expr) const {
  static const std::regex simple_re("S([0-9]+)"), proj_re("P([0-9]+)"), inj_re("I([0-9]+)"),
      rad_re("JP([0-9]+)"), soc_re("P([0-9]+)/soc");
  std::vector<Module> parts;
  for (const auto& raw : split(expr, '+')) {
    std::string s = trim(raw);
    std::smatch m;
    auto vertex = [&]() {
      int v = std::stoi(m[1].str()) - 1;
      if (v < 0 || v >= static_cast<int>(a->vertex_count()))
        throw ContractViolation("vertex out of range in '" + s + "'");
      return v;
    };
    if (auto it = modules.find(s); it != modules.end()) {
      if (!it->second.second.algebra()->same_as(*a))
        throw ContractViolation("module '" + s + "' lives over another algebra");
      parts.push_back(it->second.second);
    } else if (s == "A" || s == "Lambda") {
      parts.push_back(regular(a));
    } else if (s == "D") {
      parts.push_back(cogenerator(a));
    } else if (s == "M" && a->same_as(*builtin_algebra("pi_a3"))) {
      parts.push_back(regular(a));
      parts.push_back(cokernel(socle(projective(a, 1)).inclusion).module);
    } else if (std::regex_match(s, m, simple_re)) {
      parts.push_back(simple(a, vertex()));
    } else if (std::regex_match(s, m, proj_re)) {
      parts.push_back(projective(a, vertex()));
    } else if (std::regex_match(s, m, inj_re)) {
      parts.push_back(injective(a, vertex()));
    } else if (std::regex_match(s, m, rad_re)) {
      parts.push_back(radical(projective(a, vertex())).module);
    } else if (std::regex_match(s, m, soc_re)) {
      parts.push_back(cokernel(socle(projective(a, vertex())).inclusion).module);
    } else {
      throw ContractViolation("unknown module '" + s + "'");
    }
  }
  if (parts.empty()) throw ContractViolation("empty module expression");
  if (parts.size() == 1) return parts.front();
  return direct_sum(a, parts).module;
}

SubcatContext Workspace::context(const AlgebraPtr& a, const std::string& name) const {
  if (auto it = contexts.find(name); it != contexts.end()) {
    if (!it->second.second.algebra->same_as(*a))
      throw ContractViolation("context '" + name + "' lives over another algebra");
    return it->second.second;
  }
  if (name == "ambient") return ambient_context(a);
  if (name == "gp" || name == "gorenstein-projective") {
    std::vector<Module> seeds;
    for (int i = 0; i < static_cast<int>(a->vertex_count()); ++i) {
      seeds.push_back(simple(a, i));
      seeds.push_back(radical(projective(a, i)).module);
    }
    return gorenstein_projective_context(a, seeds);
  }
  throw ContractViolation("unknown context '" + name + "'");
}

Workspace load_workspace(const Json& j, const std::string& base_dir) {
  if (!j.is_object() || j.value("version", std::string()) != "1")
    throw ContractViolation("workspace needs \"version\": \"1\"");
  Workspace ws;
  const Json algebras = j.value("algebras", Json::object());
  const Json modules = j.value("modules", Json::object());
  // Endomorphism algebras depend on modules, which depend on algebras, so
  // entries are resolved in passes until nothing changes.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [name, e] : algebras.items()) {
      if (ws.algebras.count(name)) continue;
      if (e.contains("endo")) {
        const Json& d = e.at("endo");
        auto alg = d.at("algebra").get<std::string>();
        if (algebras.contains(alg) && !ws.algebras.count(alg)) continue;
        auto mod = d.at("module").get<std::string>();
        if (modules.contains(mod) && !ws.modules.count(mod)) continue;
        AlgebraPtr base = ws.algebra(alg);
        ws.algebras[name] = endomorphism_algebra(ws.module(base, mod)).endo;
      } else {
        ws.algebras[name] = algebra_from_entry(e, base_dir);
      }
      progress = true;
    }
    for (const auto& [name, e] : modules.items()) {
      if (ws.modules.count(name)) continue;
      auto alg = e.at("algebra").get<std::string>();
      if (algebras.contains(alg) && !ws.algebras.count(alg)) continue;
      AlgebraPtr a = ws.algebra(alg);
      Module m;
      if (e.contains("expr")) m = ws.module(a, e.at("expr").get<std::string>());
      else if (e.contains("rep")) m = module_from_json(a, e.at("rep"));
      else m = module_from_json(a, e);
      ws.modules[name] = {alg, m};
      progress = true;
    }
  }
  for (const auto& [name, e] : algebras.items())
    if (!ws.algebras.count(name)) throw ContractViolation("algebra '" + name + "' does not resolve");
  for (const auto& [name, e] : modules.items())
    if (!ws.modules.count(name)) throw ContractViolation("module '" + name + "' does not resolve");
  const Json contexts = j.value("contexts", Json::object());
  for (const auto& [name, e] : contexts.items()) {
    auto alg = e.at("algebra").get<std::string>();
    AlgebraPtr a = ws.algebra(alg);
    SubcatContext ctx;
    if (e.contains("explicit")) {
      ctx = context_from_json(a, e.at("explicit"));
    } else {
      std::string kind = e.value("kind", std::string("ambient"));
      ctx = ws.context(a, kind);
    }
    ws.contexts[name] = {alg, std::move(ctx)};
  }
  const Json jobs = j.value("jobs", Json::array());
  for (const auto& job : jobs) ws.jobs.push_back(job);
  return ws;
}

Workspace load_workspace_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    // nlohmann reports a byte offset; convert it to line and column.
    std::string text = read_file(path);
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("invalid JSON", line, col);
  }
  return load_workspace(j, std::filesystem::path(path).parent_path().string());
}

}  // namespace asc
