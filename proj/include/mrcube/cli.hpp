// The mrcube command line.  run() is the whole program minus process setup,
// so tests can drive it in-process.
//
// Exit codes: 0 success, 1 axiom violations, 2 malformed input or usage.

#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mrcube/axioms.hpp"
#include "mrcube/collapse.hpp"
#include "mrcube/dot.hpp"
#include "mrcube/io.hpp"
#include "mrcube/model_finder.hpp"
#include "mrcube/models.hpp"
#include "mrcube/reconstruct.hpp"

namespace mrcube::cli {

inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kBadInput = 2;

/// "1,3", "{1,3}" or "" -> {1, 3}.
inline std::vector<int> parse_names(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cur.size()) throw format_error("bad element name \"" + cur + "\"");
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == '{' || c == '}' || c == ' ') continue;
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return out;
}

inline void print_reports(std::ostream& out, const std::vector<AxiomReport>& reports) {
  for (const auto& r : reports) {
    if (r.passed) {
      out << "PASS " << r.axiom << " (" << r.checked << " checked)\n";
      continue;
    }
    out << "FAIL " << r.axiom << " (" << r.violations << " of " << r.checked << " instances)";
    for (const auto& t : r.counterexamples) {
      out << " (";
      for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
      out << ")";
    }
    out << "\n";
  }
}

namespace detail {

inline std::vector<AxiomReport> run_suite(const std::string& suite, const FiniteStructure& s) {
  if (suite == "cubic") return check_cubic(s);
  if (suite == "mr") return {check_mr_axiom(s)};
  if (suite == "thm-mr") return check_thm_mr_conditions(s);
  if (suite == "p-freedom") return {check_p_freedom(s)};
  // caret / caret-extra: use the stored caret, else the delta-defined one.
  if (s.has_caret()) return check_caret_axioms(s, suite == "caret-extra");
  if (!s.has_delta()) throw std::invalid_argument("structure has neither caret nor delta table");
  if (auto v = is_mr(s); !v.total) {
    AxiomReport r;
    r.axiom = "caret.total";
    r.passed = false;
    r.checked = s.size() * s.size();
    r.violations = 1;
    r.counterexamples.push_back({v.witness->first, v.witness->second});
    return {r};
  }
  Tables t = s.tables();
  t.caret = caret_table_from_delta(s);
  return check_caret_axioms(FiniteStructure(std::move(t)), suite == "caret-extra");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metropolis-Rota and cubic algebra workbench", "mrcube"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  std::string gen_kind, gen_f, gen_out;
  int gen_n = 0;
  bool gen_table = false;
  auto* gen = app.add_subcommand("gen", "Write a model file");
  gen->add_option("kind", gen_kind, "signed, interval or filter")
      ->required()
      ->check(CLI::IsMember({"signed", "interval", "filter"}));
  gen->add_option("--n", gen_n, "Ground set size")->required()->check(CLI::Range(0, 5));
  auto* gen_f_opt = gen->add_option("--f", gen_f, "Filter generator, e.g. 1,3");
  gen->add_option("-o,--output", gen_out, "Output file")->required();
  gen->add_flag("--table", gen_table, "Write the full operation tables");
  gen->callback([&] {
    action = [&]() -> int {
      std::vector<int> f;
      if (gen_kind == "filter") {
        if (!*gen_f_opt) throw format_error("gen filter needs --f");
        f = parse_names(gen_f);
        try {
          Universe(gen_n).element(f);
        } catch (const std::invalid_argument& e) {
          throw format_error(e.what());
        }
      } else if (*gen_f_opt) {
        throw format_error("--f only applies to gen filter");
      }
      json j = kind_file(gen_kind, gen_n, f);
      if (gen_table) j = to_json(load_structure(j));
      write_text_file(gen_out, dump(j));
      return kOk;
    };
  });

  // check
  std::string check_suite, check_file;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "Run an axiom suite on a structure file");
  check->add_option("suite", check_suite)
      ->required()
      ->check(CLI::IsMember({"cubic", "mr", "caret", "caret-extra", "thm-mr", "p-freedom"}));
  check->add_option("file", check_file)->required();
  check->add_flag("--json", check_json, "Print reports as JSON");
  check->callback([&] {
    action = [&]() -> int {
      const FiniteStructure s = load_structure(read_json_file(check_file));
      const auto reports = detail::run_suite(check_suite, s);
      if (check_json) out << dump(to_json(reports));
      else print_reports(out, reports);
      return all_passed(reports) ? kOk : kViolation;
    };
  });

  // search
  SearchConfig search_cfg;
  double search_timeout = 0;
  auto* search = app.add_subcommand("search", "Enumerate finite models of the caret axioms");
  search->add_option("--max-size", search_cfg.max_size, "Largest carrier size")
      ->check(CLI::Range(1, kMaxSearchSize));
  search->add_flag("--extra", search_cfg.include_extra, "Also impose axiom (i)");
  search->add_flag("--parallel", search_cfg.parallel, "Search semilattices concurrently");
  auto* timeout_opt = search->add_option("--timeout", search_timeout, "Seconds per size")
                          ->check(CLI::PositiveNumber);
  search->callback([&] {
    action = [&]() -> int {
      if (*timeout_opt) search_cfg.time_limit_seconds = search_timeout;
      std::string summary;
      search_models(search_cfg, [&](const SizeResult& r) {
        for (std::size_t i = 0; i < r.models.size(); ++i)
          out << json{{"size", r.size}, {"index", i}, {"model", to_json(r.models[i])}}.dump()
              << "\n";
        if (!summary.empty()) summary += " ";
        summary += std::to_string(r.size) + ":" +
                   (r.timed_out ? std::string("timeout") : std::to_string(r.models.size()));
      });
      out << summary << "\n";
      return kOk;
    };
  });

  // collapse
  std::string collapse_file, collapse_out;
  auto* collapse = app.add_subcommand("collapse", "Build the quotient implication lattice");
  collapse->add_option("file", collapse_file)->required();
  collapse->add_option("-o,--output", collapse_out)->required();
  collapse->callback([&] {
    action = [&]() -> int {
      const FiniteStructure s = load_structure(read_json_file(collapse_file));
      const QuotientLattice q = build_quotient(s);
      write_text_file(collapse_out, dump(to_json(q)));
      const auto reports = check_implication_lattice(q);
      out << q.size() << " classes\n";
      print_reports(out, reports);
      return all_passed(reports) ? kOk : kViolation;
    };
  });

  // reconstruct
  std::string recon_file, recon_out;
  bool recon_all = false;
  auto* recon = app.add_subcommand("reconstruct", "Map a finite MR-algebra onto a cube");
  recon->add_option("file", recon_file)->required();
  recon->add_option("-o,--output", recon_out)->required();
  recon->add_flag("--all-vertices", recon_all, "Verify every base vertex");
  recon->callback([&] {
    action = [&]() -> int {
      const FiniteStructure s = load_structure(read_json_file(recon_file));
      const Reconstruction r =
          recon_all ? reconstruct_all_vertices(s).front() : reconstruct_iso(s);
      write_text_file(recon_out, dump(to_json(r)));
      out << "dimension " << r.frame.dim << ", " << s.size() << " elements\n";
      return kOk;
    };
  });

  // export-dot
  std::string dot_file, dot_out;
  bool dot_quotient = false;
  auto* dot = app.add_subcommand("export-dot", "Write the Hasse diagram as Graphviz DOT");
  dot->add_option("file", dot_file)->required();
  dot->add_option("-o,--output", dot_out)->required();
  dot->add_flag("--quotient", dot_quotient, "Draw the collapse quotient instead");
  dot->callback([&] {
    action = [&]() -> int {
      const FiniteStructure s = load_structure(read_json_file(dot_file));
      write_text_file(dot_out, dot_quotient ? export_dot(build_quotient(s), s) : export_dot(s));
      return kOk;
    };
  });

  // compose
  int compose_n = 0;
  auto* compose_cmd =
      app.add_subcommand("compose", "Compare composition with caret against delta(1, B)");
  compose_cmd->add_option("--n", compose_n, "Ground set size")
      ->required()
      ->check(CLI::Range(0, 4));
  compose_cmd->callback([&] {
    action = [&]() -> int {
      const Universe u(compose_n);
      const auto all = enumerate_signed(u);
      const SignedSet top = SignedSet::top(u);
      std::size_t failures = 0;
      out << "A B A.B A^d(1,B)\n";
      for (const auto& a : all)
        for (const auto& b : all) {
          const SignedSet lhs = compose(a, b);
          const SignedSet rhs = caret(a, delta(top, b));
          const bool ok = lhs == rhs;
          if (!ok) ++failures;
          out << to_string(a) << " " << to_string(b) << " " << to_string(lhs) << " "
              << to_string(rhs) << (ok ? "" : " MISMATCH") << "\n";
        }
      out << all.size() * all.size() << " pairs, " << failures << " failures\n";
      return failures == 0 ? kOk : kViolation;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  try {
    return action ? action() : kBadInput;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << "\n";
    return kBadInput;
  }
}

}  // namespace mrcube::cli
