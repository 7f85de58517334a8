#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dhat/derham.hpp"
#include "dhat/lattice.hpp"
#include "dhat/parse.hpp"
#include "dhat/perfect_complex.hpp"

namespace dhat {

using Json = nlohmann::ordered_json;

struct RunOptions {
  int max_degree = 40;
  int zpower = 8;
  bool stats = false;
};

struct RunResult {
  Json report;
  int exit_code = 0;
};

/// 2 for input problems (syntax, names, ring), 1 for failed preconditions.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UndeclaredName:
    case ErrorCode::RingMismatch:
      return 2;
    default:
      return 1;
  }
}

namespace report {

template <Field F>
Json rows(const WeylMatrix<F>& m) {
  Json out = Json::array();
  for (const auto& r : m.rows) {
    Json row = Json::array();
    for (const auto& e : r.entries()) row.push_back(e.to_string());
    out.push_back(std::move(row));
  }
  return out;
}

inline Json module(const PresentedModule<Rational>& m) {
  Json j;
  j["side"] = side_name(m.side());
  j["rank"] = m.rank();
  j["is_zero"] = is_zero(m);
  j["presentation"] = m.to_string();
  return j;
}

inline Json integral(const IntegralPresentation& p) {
  Json j;
  j["side"] = side_name(p.side);
  j["rank"] = p.rank();
  j["saturated"] = p.saturated;
  j["relations"] = rows(p.relations);
  return j;
}

inline Json cycle(const CharCycle& c) {
  Json j;
  j["text"] = c.to_string();
  Json comps = Json::array();
  for (const auto& k : c.components()) {
    Json e;
    e["component"] = k.label;
    e["dimension"] = k.dimension;
    e["multiplicity"] = k.multiplicity;
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  return j;
}

inline Json grade(const std::optional<int>& g) { return g ? Json(*g) : Json("infinity"); }

inline Json reduction(const ReductionReport& r) {
  Json j;
  j["is_zero"] = r.is_zero;
  j["char_cycle"] = r.char_cycle_of_reduction ? cycle(*r.char_cycle_of_reduction) : Json(nullptr);
  j["minimal_dimension"] = r.minimal_dimension_verdict ? Json(*r.minimal_dimension_verdict) : Json(nullptr);
  j["reduced"] = module(r.reduced);
  return j;
}

inline Json kunneth_term(const KunnethTerm& t) {
  Json j;
  j["is_zero"] = t.is_zero;
  j["char_cycle"] = t.cycle ? cycle(*t.cycle) : Json(nullptr);
  j["dimension"] = t.dimension ? Json(*t.dimension) : Json(nullptr);
  j["module"] = module(t.module);
  return j;
}

inline Json cohomology(const CohomologyReport& r) {
  Json j;
  j["dims"] = r.dims ? Json(*r.dims) : Json(nullptr);
  j["chi"] = r.chi;
  j["provenance"] = provenance_name(r.provenance);
  return j;
}

inline Json b_function(const BFunction& b) {
  Json j;
  j["polynomial"] = b.to_string();
  Json coeffs = Json::array();
  for (const auto& c : b.polynomial.coeffs()) coeffs.push_back(c.to_string());
  j["coefficients"] = std::move(coeffs);
  Json roots = Json::array();
  for (const auto& r : b.integer_roots) roots.push_back(r.get_str());
  j["integer_roots"] = std::move(roots);
  return j;
}

inline Json stats(const EngineStats& s) {
  Json j;
  j["groebner_bases"] = s.bases;
  j["spairs"] = s.spairs;
  j["zero_reductions"] = s.zero_reductions;
  j["chain_pruned"] = s.chain_pruned;
  j["max_basis"] = s.max_basis;
  return j;
}

inline Json error(const Error& e) {
  Json j;
  j["code"] = static_cast<int>(e.code());
  j["name"] = std::string(error_name(e.code()));
  std::string msg = e.what();
  const std::string prefix = j["name"].get<std::string>() + ": ";
  if (msg.starts_with(prefix)) msg.erase(0, prefix.size());
  j["message"] = msg;
  if (const auto* pf = dynamic_cast<const ParseFailure*>(&e)) {
    j["line"] = pf->pos().line;
    j["column"] = pf->pos().column;
    j["token"] = pf->token();
  }
  return j;
}

}  // namespace report

namespace detail {

class Dispatcher {
 public:
  Dispatcher(const SessionInput& s, const RunOptions& o) : s_(s), o_(o), cmd_(*s.command) {}

  Json run() {
    const std::string& sub = cmd_.subcommand;
    if (s_.complexes.count(cmd_.target)) {
      if (sub == "euler-check") return euler_check();
      reject("does not apply to a complex");
    }
    if (sub == "dim") return dim();
    if (sub == "grade") return grade_cmd();
    if (sub == "holonomic") return holonomic();
    if (sub == "ext") return ext_cmd();
    if (sub == "charcycle") return charcycle();
    if (sub == "dual") return dual();
    if (sub == "derham") return derham();
    if (sub == "chi") return chi();
    if (sub == "reduce") return reduce();
    if (sub == "holonomic-hat") return holonomic_hat();
    if (sub == "good-lattice") return good();
    if (sub == "compare-lattices") return compare();
    if (sub == "kunneth") return kunneth();
    if (sub == "euler-check") reject("needs a complex");
    reject("is not a known subcommand");
  }

 private:
  [[noreturn]] void reject(const std::string& why) const {
    throw ParseFailure(ErrorCode::ParseError, cmd_.pos, cmd_.subcommand, "subcommand '" + cmd_.subcommand + "' " + why);
  }

  void expect_args(std::size_t k) const {
    if (cmd_.args.size() != k)
      throw ParseFailure(ErrorCode::ParseError, cmd_.pos, cmd_.subcommand,
                         "subcommand '" + cmd_.subcommand + "' takes " + std::to_string(k) + " argument(s)");
  }

  long index_arg() const {
    expect_args(1);
    const auto& a = cmd_.args[0];
    if (!std::holds_alternative<long>(a.value))
      throw ParseFailure(ErrorCode::ParseError, a.pos, cmd_.subcommand, "expected an integer index");
    return std::get<long>(a.value);
  }

  const ModuleDecl& module_decl() const {
    auto it = s_.modules.find(cmd_.target);
    if (it != s_.modules.end()) return it->second;
    if (s_.lattices.count(cmd_.target)) return s_.modules.at(s_.lattices.at(cmd_.target).module);
    reject("needs a module");
  }

  PresentedModule<Rational> rational_module() const {
    if (s_.lattices.count(cmd_.target)) reject("needs a module, not a lattice");
    const auto& rel = module_decl().relations;
    Algebra alg{s_.n, RingTag::RationalField};
    return PresentedModule<Rational>(convert_matrix<LocalScalar, Rational>(rel, alg, to_rational));
  }

  void require_integral() const {
    if (!s_.integral)
      throw ParseFailure(ErrorCode::RingMismatch, cmd_.pos, cmd_.subcommand,
                         "subcommand '" + cmd_.subcommand + "' needs the ring over QZ");
  }

  LatticeSpec lattice_of(const std::string& name) const {
    require_integral();
    if (s_.modules.count(name)) return lattice_in(integralize(s_.modules.at(name).relations));
    const auto& d = s_.lattices.at(name);
    auto ambient = integralize(s_.modules.at(d.module).relations);
    std::vector<FreeVector<Rational>> gens;
    if (d.generators) {
      const Algebra alg = ambient.algebra();
      for (const auto& row : d.generators->rows)
        gens.push_back(convert_vector<LocalScalar, Rational>(row, alg, to_polynomial_z));
    }
    return lattice_in(ambient, std::move(gens));
  }

  IntegralPresentation target_lattice() const { return lattice_presentation(lattice_of(cmd_.target)); }

  Json dim() const {
    expect_args(0);
    return Json{{"dimension", hilbert_dimension(rational_module())}};
  }

  Json grade_cmd() const {
    expect_args(0);
    return Json{{"grade", report::grade(grade(rational_module()))}};
  }

  Json holonomic() const {
    expect_args(0);
    auto m = rational_module();
    Json j;
    j["verdict"] = is_minimal_dimension(m);
    j["grade"] = report::grade(grade(m));
    return j;
  }

  Json ext_cmd() const {
    const long i = index_arg();
    Json j;
    j["index"] = i;
    j["module"] = report::module(ext(static_cast<int>(i), rational_module()));
    return j;
  }

  Json charcycle() const {
    expect_args(0);
    return Json{{"char_cycle", report::cycle(char_cycle(rational_module()))}};
  }

  Json dual() const {
    expect_args(0);
    auto d = dual_star(rational_module());
    Json j;
    j["module"] = report::module(d);
    j["grade"] = report::grade(grade(d));
    return j;
  }

  Json derham() const {
    expect_args(0);
    auto m = rational_module();
    Json j = report::cohomology(h_dr_n1(m));
    j["b_function_of_fourier"] = report::b_function(b_function_along_x(fourier_transform(m)));
    return j;
  }

  Json chi() const {
    expect_args(0);
    if (s_.integral) return report::cohomology(chi_via_reduction(target_lattice()));
    return report::cohomology(h_dr_n1(rational_module()));
  }

  Json reduce() const {
    expect_args(0);
    auto p = target_lattice();
    Json j;
    j["lattice"] = report::integral(p);
    j["reduction"] = report::reduction(reduce_mod_z(p));
    return j;
  }

  Json holonomic_hat() const {
    expect_args(0);
    return Json{{"verdict", minimal_dimension_via_reduction(target_lattice())}};
  }

  Json good() const {
    expect_args(0);
    auto g = good_lattice(target_lattice());
    Json j;
    j["lattice"] = report::integral(g);
    j["reduction"] = report::reduction(reduce_mod_z(g));
    return j;
  }

  Json compare() const {
    expect_args(1);
    const auto& a = cmd_.args[0];
    if (!std::holds_alternative<std::string>(a.value))
      throw ParseFailure(ErrorCode::ParseError, a.pos, cmd_.subcommand, "expected a lattice or module name");
    const auto& other = std::get<std::string>(a.value);
    if (s_.complexes.count(other))
      throw ParseFailure(ErrorCode::ParseError, a.pos, other, "'" + other + "' is a complex");
    auto c = compare_lattices(lattice_of(cmd_.target), lattice_of(other), o_.zpower);
    Json j;
    j["equal"] = c.equal;
    j["z_power_first_in_second"] = c.z_power_first_in_second;
    j["z_power_second_in_first"] = c.z_power_second_in_first;
    j["multiplicity_first"] = c.multiplicity_first;
    j["multiplicity_second"] = c.multiplicity_second;
    j["first"] = report::reduction(c.first);
    j["second"] = report::reduction(c.second);
    return j;
  }

  Json kunneth() const {
    const long i = index_arg();
    auto k = kunneth_check(target_lattice(), static_cast<int>(i));
    Json j;
    j["index"] = k.index;
    j["zero_pattern_holds"] = k.zero_pattern_holds;
    j["additivity_holds"] = k.additivity_holds ? Json(*k.additivity_holds) : Json(nullptr);
    j["tor_routes_agree"] = k.tor_routes_agree;
    j["reduced_integral_ext"] = report::kunneth_term(k.reduced_integral_ext);
    j["ext_of_reduction"] = report::kunneth_term(k.ext_of_reduction);
    j["tor"] = report::kunneth_term(k.tor);
    return j;
  }

  Json euler_check() const {
    expect_args(0);
    const auto& d = s_.complexes.at(cmd_.target);
    PerfectComplex c;
    c.ranks = d.ranks;
    for (const auto& m : d.matrices) {
      const std::size_t r = m.size(), k = r ? m[0].size() : 0;
      DenseMatrix<LocalScalar> dm(r, k);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) dm(i, t) = m[i][t];
      c.maps.push_back(std::move(dm));
    }
    // Empty matrix literals stand for zero maps of the declared shape.
    for (std::size_t i = 0; i < c.maps.size(); ++i)
      if (c.maps[i].rows() != c.ranks[i]) c.maps[i] = DenseMatrix<LocalScalar>(c.ranks[i], c.ranks[i + 1]);
    auto e = euler_check_perfect(c);
    Json j;
    j["generic_chi"] = e.generic_chi;
    j["special_chi"] = e.special_chi;
    j["equal"] = e.equal;
    j["generic_dims"] = e.generic_dims;
    j["special_dims"] = e.special_dims;
    j["alternating_rank_sum"] = e.alternating_rank_sum;
    return j;
  }

  const SessionInput& s_;
  const RunOptions& o_;
  const Command& cmd_;
};

}  // namespace detail

inline Json command_echo(const SessionInput& s) {
  Json j;
  const Command& c = *s.command;
  j["target"] = c.target;
  j["subcommand"] = c.subcommand;
  Json args = Json::array();
  for (const auto& a : c.args) {
    if (const auto* v = std::get_if<long>(&a.value)) args.push_back(*v);
    else if (const auto* n = std::get_if<std::string>(&a.value)) args.push_back(*n);
    else args.push_back(report::rows(std::get<LocalMatrix>(a.value)));
  }
  j["args"] = std::move(args);
  j["ring"] = Json{{"n", s.n}, {"over", s.integral ? "QZ" : "QQ"}};
  return j;
}

/// Parses and runs one session. Never throws for dhat errors: they become
/// error reports with the matching exit code.
inline RunResult run_source(std::string_view source, const RunOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  engine_stats() = EngineStats{};
  degree_limit() = opts.max_degree;
  RunResult out;
  Json& r = out.report;
  r["command"] = nullptr;
  r["status"] = "ok";
  r["result"] = nullptr;
  r["error"] = nullptr;
  try {
    SessionInput s = parse_session(source);
    r["command"] = command_echo(s);
    detail::Dispatcher d(s, opts);
    r["result"] = d.run();
  } catch (const Error& e) {
    r["status"] = "error";
    r["error"] = report::error(e);
    out.exit_code = exit_code_for(e.code());
  } catch (const std::exception& e) {
    r["status"] = "error";
    r["error"] = Json{{"code", 99}, {"name", "Internal"}, {"message", e.what()}};
    out.exit_code = 1;
  }
  degree_limit() = 0;
  if (opts.stats) r["stats"] = report::stats(engine_stats());
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  r["timing"] = Json{{"elapsed_us", us.count()}};
  return out;
}

}  // namespace dhat
