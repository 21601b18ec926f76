#ifndef JACRED_CLI_HPP
#define JACRED_CLI_HPP

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jacred/json_io.hpp"

namespace jacred::cli {

enum Exit : int { ok = 0, verification_failed = 1, bad_input = 2, precondition_failed = 3 };

namespace detail {

struct PairSource {
  std::string f1, f2;
  std::optional<std::uint64_t> seed;
  int n = 0;
  std::string roots;
  std::optional<int> contact;

  void attach(CLI::App& cmd) {
    cmd.add_option("--f1", f1, "first polynomial in x, y");
    cmd.add_option("--f2", f2, "second polynomial in x, y");
    cmd.add_option("--seed", seed, "generate an RC instance from this seed instead");
    cmd.add_option("--n", n, "degree of the generated instance");
    cmd.add_option("--roots", roots, "comma-separated distinct rational roots, containing 0")->default_str("0");
    cmd.add_option("--contact", contact, "contact order of the generated instance");
  }

  PolyPair load() const {
    if (seed) {
      if (!f1.empty() || !f2.empty()) throw InputError("give either --f1/--f2 or --seed, not both");
      if (n <= 0) throw InputError("--seed requires --n");
      std::vector<Rat> rs;
      std::stringstream ss(roots.empty() ? std::string("0") : roots);
      for (std::string item; std::getline(ss, item, ',');) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        auto q = parse_rat(item);
        if (!q) throw InputError("bad root '" + item + "'");
        rs.push_back(*q);
      }
      return generate_rc_instance(*seed, n, rs, contact);
    }
    if (f1.empty() || f2.empty()) throw InputError("both --f1 and --f2 are required");
    return analyze(parse_poly(f1), parse_poly(f2));
  }
};

inline std::vector<PlanePoint> parse_points(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("--points is not valid JSON: ") + e.what());
  }
  std::vector<PlanePoint> pts;
  read_array(JsonCursor(j), pts);
  return pts;
}

inline Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace detail

/// Runs one command. `args` excludes the program name. JSON goes to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for the two-variable Jacobian reduction", "jacred"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "human-readable summary on stderr");

  std::function<int()> action;
  auto emit = [&](const Json& j) { out << dump(j); };
  auto say = [&](const std::string& s) {
    if (verbose) err << s << "\n";
  };

  // parse
  auto* c_parse = app.add_subcommand("parse", "parse and print a polynomial");
  std::string expr, ring_names = "x,y";
  c_parse->add_option("--expr", expr, "polynomial expression")->required();
  c_parse->add_option("--ring", ring_names, "comma-separated variable names")->default_str("x,y");
  c_parse->callback([&] {
    action = [&] {
      std::vector<std::string> names;
      std::stringstream ss(ring_names);
      for (std::string v; std::getline(ss, v, ',');) names.push_back(v);
      const MPoly f = parse_poly(expr, Ring(names));
      const Degree d = f.total_degree();
      emit({{"expr", print_poly(f)},
            {"ring", names},
            {"total_degree", d.is_neg_infinity() ? Json(nullptr) : Json(d.value())},
            {"terms", f.term_count()}});
      return ok;
    };
  });

  detail::PairSource src;

  auto* c_inter = app.add_subcommand("intersect", "rational intersection points with multiplicities");
  src.attach(*c_inter);
  c_inter->callback([&] {
    action = [&] {
      const PolyPair p = src.load();
      const RationalIntersection ri = rational_intersection(p.f1, p.f2);
      say("intersection number " + std::to_string(ri.total) + " at " + std::to_string(ri.points.size()) + " points");
      emit(to_json(ri));
      return ok;
    };
  });

  auto* c_reduce = app.add_subcommand("reduce", "move intersections onto y = 0 and normalize to x^n");
  src.attach(*c_reduce);
  std::string points;
  c_reduce->add_option("--points", points, "JSON array of {\"x\": \"p/q\", \"y\": \"p/q\"} intersection points");
  c_reduce->callback([&] {
    action = [&] {
      const PolyPair p = src.load();
      std::optional<std::vector<PlanePoint>> pts;
      if (!points.empty()) pts = detail::parse_points(points);
      const ReductionReport rep = reduce_full(p, pts);
      say("reduced to degree " + std::to_string(*rep.after.n) + " with " + std::to_string(rep.chain.size()) + " steps");
      emit(to_json(rep));
      return rep.jacobian_preserved ? ok : verification_failed;
    };
  });

  auto* c_solve = app.add_subcommand("solve", "solve J(f) h = g1 f1 + g2 f2 within degree bounds");
  src.attach(*c_solve);
  std::string h_expr;
  std::optional<int> bound1, bound2;
  bool no_verify = false;
  c_solve->add_option("--h", h_expr, "right-hand factor h (default y, with the RC bounds n - 1)");
  c_solve->add_option("--bound1", bound1, "degree cap for g1 (default deg f2 + deg h - 2)");
  c_solve->add_option("--bound2", bound2, "degree cap for g2 (default deg f1 + deg h - 2)");
  c_solve->add_flag("--no-verify", no_verify, "skip the check that h vanishes on the intersection");
  c_solve->callback([&] {
    action = [&] {
      const PolyPair p = src.load();
      BoundedSolution s;
      if (h_expr.empty() && !bound1 && !bound2) {
        s = solve_y_equation(p);
      } else {
        const MPoly h = h_expr.empty() ? MPoly::var(Ring::xy(), "y") : parse_poly(h_expr);
        if (h.is_zero()) throw InputError("h must be nonzero");
        const int dh = h.total_degree().value();
        s = solve_bounded(p.f1, p.f2, h, bound1.value_or(p.d2 + dh - 2), bound2.value_or(p.d1 + dh - 2), !no_verify);
      }
      say("g1 = " + print_poly(s.g1) + ", g2 = " + print_poly(s.g2));
      emit(to_json(s));
      return ok;
    };
  });

  auto* c_thm = app.add_subcommand("verify-thm1", "compare the x^(n-1) coefficient of g2 with the intersection number");
  src.attach(*c_thm);
  c_thm->callback([&] {
    action = [&] {
      const Thm1Report t = verify_theorem1(src.load());
      say("coefficient " + to_string(t.g2_top_coeff) + ", intersection number " + std::to_string(t.oracle_total));
      emit(to_json(t));
      return t.agree ? ok : verification_failed;
    };
  });

  auto* c_dec = app.add_subcommand("decompose", "normal-crossing matrix factorization of the pair");
  src.attach(*c_dec);
  c_dec->callback([&] {
    action = [&] {
      const Decomposition d = decompose(src.load());
      say(d.all_ok() ? "all identities hold" : "an identity failed");
      emit(to_json(d));
      return d.all_ok() ? ok : verification_failed;
    };
  });

  auto* c_exp = app.add_subcommand("explore", "search the factored family for constant Jacobians");
  int max_deg_r = 2, coeff_bound = 1;
  ExploreOptions eopt;
  c_exp->add_option("--max-deg-r", max_deg_r, "largest deg r")->default_val(2);
  c_exp->add_option("--coeff-bound", coeff_bound, "integer coefficient bound")->default_val(1);
  c_exp->add_option("--entry-degree", eopt.entry_degree, "total degree of the matrix entries")->default_val(1);
  c_exp->add_option("--budget", eopt.budget, "maximum number of candidates evaluated");
  c_exp->add_option("--seed", eopt.seed, "recorded in the report; the sweep is exhaustive");
  c_exp->callback([&] {
    action = [&] {
      const ExplorationReport r = explore_conjecture(max_deg_r, coeff_bound, eopt);
      say(std::to_string(r.candidates_evaluated) + " candidates, " + std::to_string(r.counterexample_count) +
          " with constant nonzero Jacobian" + (r.truncated ? " (truncated)" : ""));
      emit(to_json(r));
      return r.counterexample_count == 0 ? ok : verification_failed;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit(detail::error_json("usage", e.what()));
    err << "jacred: " << e.what() << "\n";
    return bad_input;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    Json j = detail::error_json("parse", e.what());
    j["error"]["line"] = e.line();
    j["error"]["column"] = e.column();
    emit(j);
    err << "jacred: " << e.what() << "\n";
    return bad_input;
  } catch (const Error& e) {
    static const char* kinds[] = {"input", "precondition", "internal"};
    const int code = e.kind() == ErrorKind::input          ? bad_input
                     : e.kind() == ErrorKind::precondition ? precondition_failed
                                                           : verification_failed;
    emit(detail::error_json(kinds[static_cast<int>(e.kind())], e.what()));
    err << "jacred: " << e.what() << "\n";
    return code;
  } catch (const std::exception& e) {
    emit(detail::error_json("internal", e.what()));
    err << "jacred: " << e.what() << "\n";
    return verification_failed;
  }
}

}  // namespace jacred::cli

#endif  // JACRED_CLI_HPP
