// Command-line front end: multisegment expressions in, text or JSON out.
// Exit codes: 0 success, 1 domain error, 2 parse/usage error, 3 selftest
// failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "howe/boundary.hpp"
#include "howe/enumerate.hpp"
#include "howe/kudla.hpp"
#include "howe/langlands.hpp"
#include "howe/parse.hpp"
#include "howe/selftest.hpp"
#include "howe/theta.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Options {
  bool emit_json = false;
  std::vector<std::string> label_decls;
  howe::LabelTable labels;

  void resolve_labels() {
    for (const std::string& decl : label_decls) {
      std::size_t a = decl.find(':');
      std::size_t b = decl.find(':', a == std::string::npos ? a : a + 1);
      if (a == std::string::npos || b == std::string::npos)
        throw howe::domain_error("--label expects name:deg:dualname");
      long long deg = 0;
      try {
        deg = std::stoll(decl.substr(a + 1, b - a - 1));
      } catch (const std::exception&) {
        throw howe::domain_error("--label expects an integer degree");
      }
      labels.declare(decl.substr(0, a), deg, decl.substr(b + 1));
    }
  }
};

json segment_json(const howe::Segment& s) {
  return json{{"label", s.cusp.name},
              {"deg", s.cusp.deg},
              {"begin", s.begin.str()},
              {"end", s.end.str()}};
}

json multisegment_json(const howe::Multisegment& m, json meta) {
  json entries = json::array();
  for (const howe::Segment& s : m.entries()) entries.push_back(segment_json(s));
  return json{{"entries", entries},
              {"group_size", m.group_size()},
              {"meta", std::move(meta)}};
}

json sequence_json(const std::vector<howe::Segment>& seq, json meta) {
  json entries = json::array();
  long long size = 0;
  for (const howe::Segment& s : seq) {
    entries.push_back(segment_json(s));
    size += howe::seg_group_size(s);
  }
  return json{{"entries", entries}, {"group_size", size}, {"meta", std::move(meta)}};
}

void emit_multisegment(const Options& opt, const howe::Multisegment& m,
                       json meta) {
  if (opt.emit_json)
    std::cout << multisegment_json(m, std::move(meta)).dump() << "\n";
  else
    std::cout << howe::render_text(m) << "\n";
}

std::string render_sequence(const std::vector<howe::Segment>& seq) {
  std::string out = "(";
  bool first = true;
  for (const howe::Segment& s : seq) {
    if (!first) out += ",";
    first = false;
    out += howe::render_segment(s);
  }
  return out + ")";
}

json blocks_json(const std::vector<std::pair<howe::BlockRole, howe::Rat>>& bs) {
  json out = json::array();
  for (const auto& [role, exp] : bs)
    out.push_back(json{{"block", howe::block_name(role)},
                       {"side", role.side == howe::Side::left ? "left" : "right"},
                       {"size", role.size},
                       {"exponent", exp.str()}});
  return out;
}

std::string blocks_text(const std::vector<std::pair<howe::BlockRole, howe::Rat>>& bs) {
  std::string out;
  bool first = true;
  for (const auto& [role, exp] : bs) {
    if (!first) out += "  ";
    first = false;
    out += "nu^(" + exp.str() + ") on " + howe::block_name(role) + "(" +
           std::to_string(role.size) + ")";
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Explicit type-II theta correspondence on multisegment data"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.emit_json, "emit JSON instead of text");
  app.add_option("--label", opt.label_decls,
                 "declare a cuspidal label as name:deg:dualname (repeatable)");

  long long n = 0, m = 0, t = 1, r = 1, a = 1, b = -1;
  std::string pi_text, pip_text, chi_text, side = "left", order = "ranged",
              convention = "sigma";
  bool trace = false;

  auto* c_theta = app.add_subcommand("theta", "closed-form lift of pi");
  c_theta->add_option("--n", n)->required();
  c_theta->add_option("--m", m)->required();
  c_theta->add_option("--pi", pi_text)->required();
  c_theta->add_option("--convention", convention)
      ->check(CLI::IsMember({"sigma", "omega"}));

  auto* c_rec = app.add_subcommand("theta-recursive",
                                   "lift of pi computed by the recursion");
  c_rec->add_option("--n", n)->required();
  c_rec->add_option("--m", m)->required();
  c_rec->add_option("--pi", pi_text)->required();
  c_rec->add_option("--convention", convention)
      ->check(CLI::IsMember({"sigma", "omega"}));
  c_rec->add_flag("--trace", trace, "print the branch taken at each step");

  auto* c_dual = app.add_subcommand("dual", "contragredient data");
  c_dual->add_option("--pi", pi_text)->required();

  auto* c_sort = app.add_subcommand("sort", "standard-module factor order");
  c_sort->add_option("--pi", pi_text)->required();
  c_sort->add_option("--order", order)->check(CLI::IsMember({"ranged", "alpha"}));

  auto* c_kudla = app.add_subcommand("kudla", "Jacquet filtration factors");
  c_kudla->add_option("--n", n)->required();
  c_kudla->add_option("--m", m)->required();
  c_kudla->add_option("--t", t)->required();
  c_kudla->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

  auto* c_rank = app.add_subcommand("rank", "rank filtration pieces");
  c_rank->add_option("--n", n)->required();
  c_rank->add_option("--m", m)->required();

  auto* c_lima = app.add_subcommand("lima", "factor indices supporting a "
                                            "cuspidal-power quotient");
  c_lima->add_option("--n", n)->required();
  c_lima->add_option("--m", m)->required();
  c_lima->add_option("--r", r)->required();
  c_lima->add_option("--a", a)->required();
  c_lima->add_option("--b", b);
  c_lima->add_option("--chi", chi_text, "coordinate, optionally COORD@label")
      ->required();
  c_lima->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

  auto* c_bound = app.add_subcommand("boundary", "rank-filtration exclusion test");
  c_bound->add_option("--n", n)->required();
  c_bound->add_option("--m", m)->required();
  c_bound->add_option("--pi", pi_text)->required();

  auto* c_class = app.add_subcommand("classify", "generic/J/H classification");
  c_class->add_option("--n", n)->required();
  c_class->add_option("--m", m)->required();
  c_class->add_option("--pi", pi_text)->required();

  auto* c_reduce = app.add_subcommand("reduce", "strip chi from a theta pair");
  c_reduce->add_option("--n", n)->required();
  c_reduce->add_option("--m", m)->required();
  c_reduce->add_option("--pi", pi_text)->required();
  c_reduce->add_option("--pip", pip_text)->required();
  c_reduce->add_option("--chi", chi_text)->required();

  auto* c_checkh = app.add_subcommand("check-h", "H-class nonexistence witness");
  c_checkh->add_option("--n", n)->required();
  c_checkh->add_option("--m", m)->required();
  c_checkh->add_option("--pi", pi_text)->required();

  howe::SelftestBounds bounds;
  std::string window_text = "2", corrupt_text;
  auto* c_self = app.add_subcommand("selftest", "run the acceptance suites");
  c_self->add_option("--max-n", bounds.max_n, "largest group size");
  c_self->add_option("--window", window_text, "coordinate window half-width");
  c_self->add_option("--max-gap", bounds.max_gap, "largest m - n");
  c_self->add_option("--jobs", bounds.jobs, "worker threads");
  c_self->add_option("--corrupt-xi", corrupt_text,
                     "test fixture: corrupt factor n,m,t,i,side")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opt.resolve_labels();

  auto parse_pi = [&](const std::string& text) {
    return howe::parse_multisegment(text, opt.labels);
  };
  auto parse_chi = [&]() {
    std::size_t at = chi_text.find('@');
    if (at == std::string::npos)
      return howe::cusp_point(howe::parse_rat(chi_text));
    const howe::CuspLabel* label = opt.labels.find(chi_text.substr(at + 1));
    if (!label)
      throw howe::domain_error("unknown label '" + chi_text.substr(at + 1) + "'");
    return howe::cusp_point(*label, howe::parse_rat(chi_text.substr(0, at)));
  };

  if (c_theta->parsed()) {
    howe::ThetaInstance inst = howe::make_theta_instance(
        n, m, parse_pi(pi_text),
        convention == "sigma" ? howe::Convention::sigma
                              : howe::Convention::omega);
    emit_multisegment(opt, howe::theta_lift(inst),
                      json{{"verb", "theta"}, {"n", n}, {"m", m},
                           {"convention", convention}});
  } else if (c_rec->parsed()) {
    howe::Multisegment pi = parse_pi(pi_text);
    howe::RecursionStats stats;
    stats.collect_trace = trace;
    howe::Multisegment out;
    if (convention == "sigma") {
      out = howe::theta_recursive(pi, n, m, &stats);
    } else {
      // conjugate the recursion with the normalization twists
      out = howe::twist_multisegment(
          howe::theta_recursive(
              howe::twist_multisegment(pi, howe::Rat(m, 2)), n, m, &stats),
          howe::Rat(n, 2));
    }
    if (trace && !opt.emit_json)
      for (const std::string& line : stats.trace)
        std::cout << "# " << line << "\n";
    json meta{{"verb", "theta-recursive"}, {"n", n}, {"m", m},
              {"convention", convention},
              {"branches",
               json{{"generic", stats.generic},
                    {"a2", stats.a2},
                    {"h_fallback", stats.h_fallback},
                    {"dual_terminal", stats.dual_terminal}}}};
    if (trace) meta["trace"] = stats.trace;
    emit_multisegment(opt, out, std::move(meta));
  } else if (c_dual->parsed()) {
    emit_multisegment(opt, howe::dual_multisegment(parse_pi(pi_text)),
                      json{{"verb", "dual"}});
  } else if (c_sort->parsed()) {
    howe::LanglandsDatum datum{parse_pi(pi_text),
                               order == "alpha" ? howe::DatumOrder::alpha
                                                : howe::DatumOrder::ranged};
    std::vector<howe::Segment> seq = datum.convention == howe::DatumOrder::alpha
                                         ? howe::alpha_order(datum.data)
                                         : howe::ranged_sort(datum.data);
    if (opt.emit_json)
      std::cout << sequence_json(seq, json{{"verb", "sort"}, {"order", order}})
                       .dump()
                << "\n";
    else
      std::cout << render_sequence(seq) << "\n";
  } else if (c_kudla->parsed()) {
    howe::Side s = side == "left" ? howe::Side::left : howe::Side::right;
    std::vector<howe::FiltrationFactor> fs =
        s == howe::Side::left ? howe::jacquet_factors_left(n, m, t)
                              : howe::jacquet_factors_right(n, m, t);
    if (opt.emit_json) {
      json out = json::array();
      for (const howe::FiltrationFactor& f : fs)
        out.push_back(json{{"i", f.i},
                           {"blocks", blocks_json(f.blocks)},
                           {"inner", json{{"n", f.inner_n}, {"m", f.inner_m}}},
                           {"carries_rho", f.carries_rho}});
      std::cout << json{{"entries", out},
                        {"group_size", nullptr},
                        {"meta", json{{"verb", "kudla"}, {"n", n}, {"m", m},
                                      {"t", t}, {"side", side}}}}
                       .dump()
                << "\n";
    } else {
      for (const howe::FiltrationFactor& f : fs)
        std::cout << "i=" << f.i << "  " << blocks_text(f.blocks)
                  << "  inner sigma(" << f.inner_n << "," << f.inner_m << ")"
                  << (f.carries_rho ? "  with regular factor" : "") << "\n";
    }
  } else if (c_rank->parsed()) {
    std::vector<howe::RankFactor> fs = howe::rank_factors(n, m);
    if (opt.emit_json) {
      json out = json::array();
      for (const howe::RankFactor& f : fs)
        out.push_back(json{
            {"k", f.k},
            {"left_parabolic", json::array({f.left_parabolic.first,
                                            f.left_parabolic.second})},
            {"left_lower_triangular", true},
            {"right_parabolic", json::array({f.right_parabolic.first,
                                             f.right_parabolic.second})}});
      std::cout << json{{"entries", out},
                        {"group_size", nullptr},
                        {"meta", json{{"verb", "rank"}, {"n", n}, {"m", m}}}}
                       .dump()
                << "\n";
    } else {
      for (const howe::RankFactor& f : fs)
        std::cout << "k=" << f.k << "  Pbar(" << f.left_parabolic.first << ","
                  << f.left_parabolic.second << ") x P'("
                  << f.right_parabolic.first << "," << f.right_parabolic.second
                  << ")  regular G_" << f.k << " x G'_" << f.k << "\n";
    }
  } else if (c_lima->parsed()) {
    howe::Segment chi = parse_chi();
    std::set<long long> out;
    if (side == "left") {
      out = howe::lima_classifier_left(n, m, r, a, chi);
    } else {
      if (b < 0) throw howe::domain_error("lima --side right requires --b");
      out = howe::lima_classifier_right(n, m, r, a, b, chi);
    }
    if (opt.emit_json) {
      std::cout << json{{"entries", out},
                        {"group_size", nullptr},
                        {"meta", json{{"verb", "lima"}, {"side", side}}}}
                       .dump()
                << "\n";
    } else {
      std::string line = "{";
      bool first = true;
      for (long long i : out) {
        if (!first) line += ",";
        first = false;
        line += std::to_string(i);
      }
      std::cout << line << "}\n";
    }
  } else if (c_bound->parsed()) {
    howe::Multisegment pi = parse_pi(pi_text);
    howe::BoundaryReport rep = howe::boundary_excluded(pi, n, m);
    if (opt.emit_json) {
      json per_k = json::array();
      for (const howe::BoundaryProbe& p : rep.per_k)
        per_k.push_back(json{{"k", p.k},
                             {"test_point", p.test_point.begin.str()},
                             {"possible", p.possible}});
      std::cout << json{{"excluded", rep.excluded}, {"per_k", per_k},
                        {"meta", json{{"verb", "boundary"}, {"n", n}, {"m", m}}}}
                       .dump()
                << "\n";
    } else {
      for (const howe::BoundaryProbe& p : rep.per_k)
        std::cout << "k=" << p.k << "  nu^(" << p.test_point.begin.str()
                  << ")  " << (p.possible ? "possible" : "impossible") << "\n";
      std::cout << (rep.excluded ? "excluded" : "not excluded") << "\n";
    }
  } else if (c_class->parsed()) {
    howe::Multisegment pi = parse_pi(pi_text);
    howe::JHClass cls = howe::jh_classify(pi, n, m);
    if (opt.emit_json) {
      json pts = json::array();
      for (const howe::Segment& p : cls.strippable)
        pts.push_back(segment_json(p));
      std::cout << json{{"class", howe::jh_name(cls.cls)},
                        {"strippable", pts},
                        {"meta", json{{"verb", "classify"}, {"n", n}, {"m", m}}}}
                       .dump()
                << "\n";
    } else {
      std::cout << howe::jh_name(cls.cls) << "  strippable "
                << render_sequence(cls.strippable) << "\n";
    }
  } else if (c_reduce->parsed()) {
    howe::Multisegment pi = parse_pi(pi_text);
    howe::Multisegment pip = parse_pi(pip_text);
    howe::ReduceResult red = howe::reduce_instance(pi, pip, n, m, parse_chi());
    if (opt.emit_json) {
      std::cout << json{{"a", red.a},
                        {"b", red.b},
                        {"n", red.n_reduced},
                        {"m", red.m_reduced},
                        {"rho", multisegment_json(red.rho, json::object())},
                        {"rho_prime",
                         multisegment_json(red.rho_prime, json::object())},
                        {"meta", json{{"verb", "reduce"}}}}
                       .dump()
                << "\n";
    } else {
      std::cout << "a=" << red.a << " b=" << red.b << " -> (n=" << red.n_reduced
                << ",m=" << red.m_reduced << ") rho="
                << howe::render_text(red.rho)
                << " rho'=" << howe::render_text(red.rho_prime) << "\n";
    }
  } else if (c_checkh->parsed()) {
    howe::Multisegment pi = parse_pi(pi_text);
    howe::HReport rep = howe::check_h_nonexistence(pi, n, m);
    if (opt.emit_json) {
      std::cout << json{{"verdict", rep.impossible ? "H-pair impossible"
                                                   : "no witness"},
                        {"witness",
                         rep.witness ? json(rep.witness->str()) : json(nullptr)},
                        {"bound", rep.bound.str()},
                        {"partner",
                         multisegment_json(rep.partner, json::object())},
                        {"meta", json{{"verb", "check-h"}, {"n", n}, {"m", m}}}}
                       .dump()
                << "\n";
    } else {
      std::cout << (rep.impossible ? "H-pair impossible" : "no witness");
      if (rep.witness)
        std::cout << ": begin " << rep.witness->str() << " > bound "
                  << rep.bound.str();
      std::cout << "  partner " << howe::render_text(rep.partner) << "\n";
    }
  } else if (c_self->parsed()) {
    bounds.window = howe::parse_rat(window_text);
    howe::XiCorruption corrupt;
    bool corrupted = false;
    if (!corrupt_text.empty()) {
      int parsed_n, parsed_m, parsed_t, parsed_i;
      char side_char = 'l';
      if (std::sscanf(corrupt_text.c_str(), "%d,%d,%d,%d,%c", &parsed_n,
                      &parsed_m, &parsed_t, &parsed_i, &side_char) < 4)
        throw howe::domain_error("--corrupt-xi expects n,m,t,i,side");
      corrupt = howe::XiCorruption{parsed_n, parsed_m, parsed_t, parsed_i,
                                   side_char == 'r' ? howe::Side::right
                                                    : howe::Side::left};
      corrupted = true;
    }
    std::vector<howe::SuiteResult> results =
        howe::run_selftest(bounds, corrupted ? &corrupt : nullptr);
    bool all_passed = true;
    if (opt.emit_json) {
      json out = json::array();
      for (const howe::SuiteResult& sr : results) {
        out.push_back(json{{"suite", sr.name},
                           {"passed", sr.passed},
                           {"cases", sr.cases},
                           {"failures", sr.failures},
                           {"first_counterexample", sr.first_counterexample},
                           {"notes", sr.notes}});
        all_passed = all_passed && sr.passed;
      }
      std::cout << json{{"suites", out}, {"passed", all_passed}}.dump() << "\n";
    } else {
      int idx = 1;
      for (const howe::SuiteResult& sr : results) {
        std::cout << howe::format_suite_line(
                         sr, idx++, static_cast<int>(results.size()))
                  << "\n";
        all_passed = all_passed && sr.passed;
      }
      std::cout << (all_passed ? "selftest passed" : "selftest FAILED") << "\n";
    }
    if (!all_passed) return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const howe::parse_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const howe::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
