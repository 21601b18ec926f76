#ifndef JACRED_JSON_IO_HPP
#define JACRED_JSON_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jacred/intersection.hpp"
#include "jacred/membership.hpp"
#include "jacred/pair.hpp"
#include "jacred/reduction.hpp"
#include "jacred/structure.hpp"
#include "jacred/textio.hpp"

namespace jacred {

using Json = nlohmann::json;

/// Read position inside a document; errors carry its JSON pointer.
class JsonCursor {
 public:
  JsonCursor(const Json& j, std::string pointer = "") : j_(&j), ptr_(std::move(pointer)) {}

  const Json& value() const { return *j_; }
  const std::string& pointer() const { return ptr_; }
  [[noreturn]] void fail(const std::string& msg) const { throw SchemaError(ptr_.empty() ? "/" : ptr_, msg); }

  JsonCursor at(const std::string& key) const {
    if (!j_->is_object()) fail("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) JsonCursor(*j_, ptr_ + "/" + escape(key)).fail("missing member");
    return JsonCursor(*it, ptr_ + "/" + escape(key));
  }
  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }
  JsonCursor at(std::size_t i) const {
    if (!j_->is_array()) fail("expected an array");
    if (i >= j_->size()) fail("index out of range");
    return JsonCursor((*j_)[i], ptr_ + "/" + std::to_string(i));
  }
  std::size_t size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }

  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }
  bool boolean() const {
    if (!j_->is_boolean()) fail("expected a boolean");
    return j_->get<bool>();
  }
  std::int64_t integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<std::int64_t>();
  }
  std::size_t count() const {
    const auto v = integer();
    if (v < 0) fail("expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }
  Rat rat() const {
    auto q = parse_rat(str());
    if (!q) fail("expected a rational string p/q");
    return *q;
  }
  MPoly poly(const Ring& ring = Ring::xy()) const {
    try {
      return parse_poly(str(), ring);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }
  UPoly upoly() const {
    try {
      return parse_upoly(str(), "x");
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

 private:
  const Json* j_;
  std::string ptr_;

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }
};

inline Json to_json(const Rat& q) { return to_string(q); }
inline Json to_json(const MPoly& f) { return print_poly(f); }
inline Json to_json(const UPoly& p) { return print_poly(p); }

inline Json to_json(const PlanePoint& p) { return {{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

inline Json to_json(const PolyPair& p) {
  return {{"f1", to_json(p.f1)}, {"f2", to_json(p.f2)},   {"d1", p.d1},         {"d2", p.d2},
          {"n", p.n ? Json(*p.n) : Json(nullptr)},         {"jacobian", to_json(p.jac)},
          {"rc1", p.rc1},          {"rc2", p.rc2},         {"discrete", p.discrete}};
}

inline Json to_json(const BoundedSolution& s) {
  Json ns = Json::array();
  for (const auto& [a, b] : s.nullspace) ns.push_back({{"g1", to_json(a)}, {"g2", to_json(b)}});
  return {{"g1", to_json(s.g1)},       {"g2", to_json(s.g2)},
          {"bound1", s.bound1},         {"bound2", s.bound2},
          {"unique", s.unique},         {"nullspace_dim", s.nullspace_dim},
          {"nullspace", ns},            {"uniqueness_clause", s.uniqueness_clause}};
}

inline Json to_json(const AutoStep& s) {
  Json j = {{"kind", step_kind(s)}};
  if (const auto* t = std::get_if<Translation>(&s)) {
    j["dx"] = to_json(t->dx);
    j["dy"] = to_json(t->dy);
  } else if (const auto* sh = std::get_if<Shear>(&s)) {
    j["p"] = to_json(sh->p);
  } else if (const auto* l = std::get_if<LinearMap>(&s)) {
    j["side"] = l->side == Side::left ? "left" : "right";
    // explicit arrays: a braced list of string pairs would become an object
    j["matrix"] = Json::array({Json::array({to_json(l->m[0]), to_json(l->m[1])}),
                               Json::array({to_json(l->m[2]), to_json(l->m[3])})});
  } else if (const auto* g = std::get_if<GeneratorMix>(&s)) {
    j["target"] = g->target;
    j["factor"] = to_json(g->factor);
  }
  return j;
}

template <class T>
Json to_json_array(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const ReductionReport& r) {
  return {{"chain", to_json_array(r.chain)},
          {"before", to_json(r.before)},
          {"after", to_json(r.after)},
          {"points_before", to_json_array(r.points_before)},
          {"points_after", to_json_array(r.points_after)},
          {"shear_offset", r.shear_offset ? Json(*r.shear_offset) : Json(nullptr)},
          {"jacobian_constant", to_json(r.jacobian_constant)},
          {"phi", Json::array({to_json(r.phi_x), to_json(r.phi_y)})},
          {"jacobian_preserved", r.jacobian_preserved},
          {"intersection_number_before", r.intersection_number_before},
          {"intersection_number_after", r.intersection_number_after}};
}

inline Json to_json(const RationalIntersection& ri) {
  Json pts = Json::array();
  for (const auto& p : ri.points)
    pts.push_back({{"x", to_json(p.point.x)}, {"y", to_json(p.point.y)}, {"multiplicity", p.multiplicity}});
  return {{"points", pts}, {"total", ri.total}};
}

inline Json to_json(const IntersectionData& d) {
  return {{"x_roots", to_json_array(d.x_roots)},
          {"r", to_json(d.r)},
          {"multiplicities", d.multiplicities},
          {"total", d.total}};
}

inline Json to_json(const Thm1Report& t) {
  return {{"n", t.n},
          {"g1", to_json(t.g1)},
          {"g2", to_json(t.g2)},
          {"g2_top_coeff", to_json(t.g2_top_coeff)},
          {"oracle_total", t.oracle_total},
          {"agree", t.agree},
          {"unique", t.unique}};
}

inline Json to_json(const Decomposition& d) {
  return {{"h1", to_json(d.h1)},         {"h2", to_json(d.h2)},
          {"k1", to_json(d.k1)},         {"k2", to_json(d.k2)},
          {"g1", to_json(d.g1)},         {"g2", to_json(d.g2)},
          {"r", to_json(d.r)},           {"lambda", to_json(d.lambda)},
          {"mu", to_json(d.mu)},         {"det_ok", d.det_ok},
          {"factor_ok", d.factor_ok},    {"g_factor_ok", d.g_factor_ok},
          {"dual_ok", d.dual_ok},        {"bezout_ok", d.bezout_ok},
          {"solver_k_agrees", d.solver_k_agrees},
          {"solver_k_nullspace_dim", d.solver_k_nullspace_dim}};
}

inline Json to_json(const ExplorationHit& h) {
  return {{"index", h.index},          {"h1", to_json(h.h1)}, {"h2", to_json(h.h2)},
          {"k1", to_json(h.k1)},       {"k2", to_json(h.k2)}, {"r", to_json(h.r)},
          {"lambda", to_json(h.lambda)}, {"jacobian", to_json(h.jacobian)}};
}

inline Json to_json(const ExplorationReport& r) {
  Json hist = Json::object();
  for (const auto& [deg, c] : r.jacobian_degree_histogram) hist[std::to_string(deg)] = c;
  return {{"max_deg_r", r.max_deg_r},
          {"coeff_bound", r.coeff_bound},
          {"entry_degree", r.entry_degree},
          {"budget", r.budget},
          {"seed", r.seed},
          {"matrices_enumerated", r.matrices_enumerated},
          {"invertible_matrices", r.invertible_matrices},
          {"r_candidates", r.r_candidates},
          {"candidates_evaluated", r.candidates_evaluated},
          {"truncated", r.truncated},
          {"zero_jacobian", r.zero_jacobian},
          {"jacobian_degree_histogram", hist},
          {"counterexample_count", r.counterexample_count},
          {"counterexamples", to_json_array(r.counterexamples)}};
}

// ---- reading -------------------------------------------------------------

inline void read(const JsonCursor& c, Rat& q) { q = c.rat(); }
inline void read(const JsonCursor& c, MPoly& f) { f = c.poly(); }
inline void read(const JsonCursor& c, UPoly& p) { p = c.upoly(); }

inline void read(const JsonCursor& c, PlanePoint& p) {
  p.x = c.at("x").rat();
  p.y = c.at("y").rat();
}

inline void read(const JsonCursor& c, PolyPair& p) {
  const MPoly f1 = c.at("f1").poly(), f2 = c.at("f2").poly();
  const bool rc1 = c.at("rc1").boolean(), rc2 = c.at("rc2").boolean(), discrete = c.at("discrete").boolean();
  try {
    detail::check_pair_inputs(f1, f2);
  } catch (const InputError& e) {
    c.fail(e.what());
  }
  if (rc2 && !discrete) c.at("rc2").fail("rc2 requires a discrete intersection");
  try {
    p = pair_from_parts(f1, f2, rc1, rc2, discrete);
  } catch (const InputError& e) {
    c.at("rc1").fail(e.what());
  }
  auto expect_int = [&](const char* key, int want) {
    if (c.at(key).integer() != want) c.at(key).fail("does not match the polynomials");
  };
  expect_int("d1", p.d1);
  expect_int("d2", p.d2);
  const JsonCursor n = c.at("n");
  if (n.value().is_null() ? p.n.has_value() : (!p.n || n.integer() != *p.n)) n.fail("does not match the polynomials");
  if (c.at("jacobian").poly() != p.jac) c.at("jacobian").fail("does not match the polynomials");
}

inline void read(const JsonCursor& c, BoundedSolution& s) {
  s.g1 = c.at("g1").poly();
  s.g2 = c.at("g2").poly();
  s.bound1 = static_cast<int>(c.at("bound1").integer());
  s.bound2 = static_cast<int>(c.at("bound2").integer());
  s.unique = c.at("unique").boolean();
  s.nullspace_dim = c.at("nullspace_dim").count();
  s.uniqueness_clause = c.at("uniqueness_clause").boolean();
  const JsonCursor ns = c.at("nullspace");
  s.nullspace.clear();
  for (std::size_t i = 0; i < ns.size(); ++i) s.nullspace.emplace_back(ns.at(i).at("g1").poly(), ns.at(i).at("g2").poly());
  if (s.nullspace.size() != s.nullspace_dim) c.at("nullspace_dim").fail("does not match the nullspace length");
  if (s.unique != (s.nullspace_dim == 0)) c.at("unique").fail("must be true exactly when nullspace_dim is 0");
}

inline void read(const JsonCursor& c, AutoStep& s) {
  const std::string kind = c.at("kind").str();
  if (kind == "translation") {
    s = Translation{c.at("dx").rat(), c.at("dy").rat()};
  } else if (kind == "shear") {
    s = Shear{c.at("p").upoly()};
  } else if (kind == "linear_map") {
    const std::string side = c.at("side").str();
    if (side != "left" && side != "right") c.at("side").fail("expected 'left' or 'right'");
    const JsonCursor m = c.at("matrix");
    if (m.size() != 2 || m.at(0).size() != 2 || m.at(1).size() != 2) m.fail("expected a 2x2 matrix");
    LinearMap l{side == "left" ? Side::left : Side::right,
                {m.at(0).at(0).rat(), m.at(0).at(1).rat(), m.at(1).at(0).rat(), m.at(1).at(1).rat()}};
    if (l.det() == 0) m.fail("matrix is singular");
    s = l;
  } else if (kind == "generator_mix") {
    const auto t = c.at("target").integer();
    if (t != 1 && t != 2) c.at("target").fail("expected 1 or 2");
    s = GeneratorMix{static_cast<int>(t), c.at("factor").rat()};
  } else if (kind == "swap") {
    s = Swap{};
  } else {
    c.at("kind").fail("unknown step kind '" + kind + "'");
  }
}

template <class T>
void read_array(const JsonCursor& c, std::vector<T>& out) {
  out.clear();
  for (std::size_t i = 0; i < c.size(); ++i) {
    T v;
    read(c.at(i), v);
    out.push_back(std::move(v));
  }
}

inline void read(const JsonCursor& c, ReductionReport& r) {
  read_array(c.at("chain"), r.chain);
  read(c.at("before"), r.before);
  read(c.at("after"), r.after);
  read_array(c.at("points_before"), r.points_before);
  read_array(c.at("points_after"), r.points_after);
  const JsonCursor m = c.at("shear_offset");
  r.shear_offset = m.value().is_null() ? std::nullopt : std::optional<int>(static_cast<int>(m.integer()));
  r.jacobian_constant = c.at("jacobian_constant").rat();
  const JsonCursor phi = c.at("phi");
  if (phi.size() != 2) phi.fail("expected two coordinate images");
  r.phi_x = phi.at(0).poly();
  r.phi_y = phi.at(1).poly();
  r.jacobian_preserved = c.at("jacobian_preserved").boolean();
  r.intersection_number_before = c.at("intersection_number_before").count();
  r.intersection_number_after = c.at("intersection_number_after").count();
}

inline void read(const JsonCursor& c, RationalIntersection& ri) {
  ri.points.clear();
  const JsonCursor pts = c.at("points");
  for (std::size_t i = 0; i < pts.size(); ++i)
    ri.points.push_back({{pts.at(i).at("x").rat(), pts.at(i).at("y").rat()}, pts.at(i).at("multiplicity").count()});
  ri.total = c.at("total").count();
}

inline void read(const JsonCursor& c, IntersectionData& d) {
  read_array(c.at("x_roots"), d.x_roots);
  d.r = c.at("r").upoly();
  const JsonCursor m = c.at("multiplicities");
  d.multiplicities.clear();
  for (std::size_t i = 0; i < m.size(); ++i) d.multiplicities.push_back(m.at(i).count());
  if (d.multiplicities.size() != d.x_roots.size()) m.fail("length differs from x_roots");
  d.total = c.at("total").count();
}

inline void read(const JsonCursor& c, Thm1Report& t) {
  t.n = static_cast<int>(c.at("n").integer());
  t.g1 = c.at("g1").poly();
  t.g2 = c.at("g2").poly();
  t.g2_top_coeff = c.at("g2_top_coeff").rat();
  t.oracle_total = c.at("oracle_total").count();
  t.agree = c.at("agree").boolean();
  t.unique = c.at("unique").boolean();
}

inline void read(const JsonCursor& c, Decomposition& d) {
  d.h1 = c.at("h1").poly();
  d.h2 = c.at("h2").poly();
  d.k1 = c.at("k1").poly();
  d.k2 = c.at("k2").poly();
  d.g1 = c.at("g1").poly();
  d.g2 = c.at("g2").poly();
  d.r = c.at("r").upoly();
  d.lambda = c.at("lambda").upoly();
  d.mu = c.at("mu").upoly();
  d.det_ok = c.at("det_ok").boolean();
  d.factor_ok = c.at("factor_ok").boolean();
  d.g_factor_ok = c.at("g_factor_ok").boolean();
  d.dual_ok = c.at("dual_ok").boolean();
  d.bezout_ok = c.at("bezout_ok").boolean();
  d.solver_k_agrees = c.at("solver_k_agrees").boolean();
  d.solver_k_nullspace_dim = c.at("solver_k_nullspace_dim").count();
}

inline void read(const JsonCursor& c, ExplorationHit& h) {
  h.index = c.at("index").count();
  h.h1 = c.at("h1").poly();
  h.h2 = c.at("h2").poly();
  h.k1 = c.at("k1").poly();
  h.k2 = c.at("k2").poly();
  h.r = c.at("r").upoly();
  h.lambda = c.at("lambda").upoly();
  h.jacobian = c.at("jacobian").poly();
}

inline void read(const JsonCursor& c, ExplorationReport& r) {
  r.max_deg_r = static_cast<int>(c.at("max_deg_r").integer());
  r.coeff_bound = static_cast<int>(c.at("coeff_bound").integer());
  r.entry_degree = static_cast<int>(c.at("entry_degree").integer());
  r.budget = c.at("budget").count();
  r.seed = static_cast<std::uint64_t>(c.at("seed").count());
  r.matrices_enumerated = c.at("matrices_enumerated").count();
  r.invertible_matrices = c.at("invertible_matrices").count();
  r.r_candidates = c.at("r_candidates").count();
  r.candidates_evaluated = c.at("candidates_evaluated").count();
  r.truncated = c.at("truncated").boolean();
  r.zero_jacobian = c.at("zero_jacobian").count();
  const JsonCursor hist = c.at("jacobian_degree_histogram");
  if (!hist.value().is_object()) hist.fail("expected an object");
  r.jacobian_degree_histogram.clear();
  for (const auto& [key, val] : hist.value().items()) {
    int deg = 0;
    try {
      std::size_t used = 0;
      deg = std::stoi(key, &used);
      if (used != key.size() || deg < 0) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      hist.at(key).fail("histogram keys must be non-negative degrees");
    }
    r.jacobian_degree_histogram[deg] = hist.at(key).count();
  }
  r.counterexample_count = c.at("counterexample_count").count();
  read_array(c.at("counterexamples"), r.counterexamples);
}

/// Decodes a document; schema violations raise SchemaError with a JSON pointer.
template <class T>
T from_json(const Json& j) {
  T v;
  read(JsonCursor(j), v);
  return v;
}

/// Stable text form: two-space indent, keys sorted, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace jacred

#endif  // JACRED_JSON_IO_HPP
