#pragma once

// Command-line surface. Exit codes: 0 success, 1 verdict failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "asmgal/report.hpp"

namespace asmgal {

enum ExitCode : int { kExitOk = 0, kExitVerdict = 1, kExitUsage = 2 };

namespace cli_detail {

inline std::vector<std::uint32_t> parse_codes(const std::string& s, std::size_t want, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("bad integer in ") + what + ": '" + tok + "'");
    }
  }
  if (out.size() != want)
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " needs " + std::to_string(want) + " comma-separated codes");
  return out;
}

inline Fe lift_code(const CurveParams& cp, std::uint32_t code, std::uint32_t k) {
  const auto& f = cp.level_field(k);
  if (code >= f.size())
    throw Error(ErrorCode::InvalidArgument, "code " + std::to_string(code) + " is not an element of F_{q^" +
                                                std::to_string(k) + "}");
  return cp.lift(Fe(f, code), k);
}

inline Vec4 parse_form(const CurveParams& cp, const std::string& s, std::uint32_t k, const char* what) {
  const auto c = parse_codes(s, 4, what);
  return {lift_code(cp, c[0], k), lift_code(cp, c[1], k), lift_code(cp, c[2], k), lift_code(cp, c[3], k)};
}

inline void check_level(const CurveParams& cp, std::uint32_t k, const char* what) {
  const auto& lv = cp.levels();
  if (std::find(lv.begin(), lv.end(), k) == lv.end())
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must divide " + std::to_string(cp.ambient_degree()));
}

inline bool write_out(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  f << text;
  return true;
}

inline void print_analysis(std::ostream& out, const CurveParams& cp, const GaloisAnalysis& a) {
  out << "verdict " << (a.is_galois ? "Galois" : "not Galois") << ", degree " << a.degree << ", group "
      << group_label(a.group_type, cp.q()) << "\n";
  out << "stabilizer order " << a.stabilizer.order() << ", class " << to_string(a.classification.tag) << "\n";
  for (const auto& i : a.intersections) out << "meets " << enc::point(cp, i.point).dump() << " with multiplicity " << i.multiplicity << "\n";
  if (a.unresolved_intersections)
    out << "meets " << a.unresolved_intersections << " more point(s) beyond the ambient field, transversally\n";
}

}  // namespace cli_detail

/// Runs the tool. Output goes to `out`, diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Galois lines of the curve (x^q - x)(y^q - y) = c embedded in P^3 by (x : y : 1 : xy)", "asm_galois"};
  app.require_subcommand(1);

  std::uint32_t q = 3, c = 1, field_degree = 1, ext = 1;
  std::uint64_t seed = 1;
  std::string out_path, format = "text", h1s, h2s, line_s, base_s;
  bool full = false, table = false, timing = false;
  std::size_t negative = 500;

  auto add_qc = [&](CLI::App* sc) {
    sc->add_option("--q", q, "field size q (a prime power >= 3)")->required();
    sc->add_option("--c", c, "nonzero constant c, as an F_q code")->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "analyze the F_q-lines of the plane {Z=0}");
  add_qc(classify);
  classify->add_option("--out", out_path, "also write the JSON section to this file");

  auto* check = app.add_subcommand("check-line", "analyze one line {H1 = H2 = 0}");
  add_qc(check);
  check->add_option("--h1", h1s, "coefficients of H1 as codes X,Y,Z,W")->required();
  check->add_option("--h2", h2s, "coefficients of H2 as codes X,Y,Z,W")->required();
  check->add_option("--field-degree", field_degree, "codes are elements of F_{q^k}")->capture_default_str();

  auto* fib = app.add_subcommand("fiber", "points and ramification indices over one base point");
  add_qc(fib);
  fib->add_option("--line", line_s, "\"h1;h2\" with comma-separated codes")->required();
  fib->add_option("--base", base_s, "\"lambda,mu\" codes in F_{q^ext}")->required();
  fib->add_option("--ext", ext, "list points over F_{q^ext}")->capture_default_str();
  fib->add_option("--field-degree", field_degree, "line codes are elements of F_{q^k}")->capture_default_str();

  auto* aut = app.add_subcommand("aut", "the automorphism group");
  aut->add_option("--q", q, "field size q")->required();
  aut->add_flag("--table", table, "list every element");

  auto* rep = app.add_subcommand("report", "classification report");
  add_qc(rep);
  rep->add_flag("--full", full, "add negative scan, section check and property suites");
  rep->add_option("--seed", seed, "random seed")->capture_default_str();
  rep->add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  rep->add_option("--out", out_path, "write to this file instead of stdout");
  rep->add_option("--negative", negative, "lines in the negative scan")->capture_default_str();
  rep->add_flag("--timing", timing, "include wall-clock timings (not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (q == 2) {
      err << "error: q = 2 is not supported; the curve needs q >= 3\n";
      return kExitUsage;
    }
    if (*aut) {
      const CurveParams cp(q);
      const Subgroup G = enumerate_aut(cp);
      out << "order " << G.order() << "\n";
      out << "generators (x, y) -> (gamma x + a, y / gamma + b), swapped after when swap = 1\n";
      out << "gamma a b swap\n";
      for (const auto& g : G.generators())
        out << enc::code_at(cp, g.gamma, 1) << " " << enc::code_at(cp, g.a, 1) << " " << enc::code_at(cp, g.b, 1) << " "
            << g.swap << "\n";
      if (table) {
        out << "elements\n";
        for (const auto& g : G.elements())
          out << enc::code_at(cp, g.gamma, 1) << " " << enc::code_at(cp, g.a, 1) << " " << enc::code_at(cp, g.b, 1)
              << " " << g.swap << "\n";
      }
      return kExitOk;
    }

    const CurveParams cp(q, c);
    const GaloisAnalyzer an(cp);

    if (*classify) {
      const auto pc = classify_plane_lines(an, false);
      out << plane_table(cp, pc);
      if (!out_path.empty()) {
        ClassificationReport r;
        r.p = cp.p();
        r.q = cp.q();
        r.c = c;
        r.ambient_degree = cp.ambient_degree();
        r.sample_level = an.sample_level();
        r.plane = pc;
        auto j = to_json(cp, r);
        j.erase("type_b");
        if (!cli_detail::write_out(out_path, j.dump(2) + "\n", err)) return kExitUsage;
      }
      if (!pc.matches(q)) {
        err << "error: counts do not match (q-1) + q^2 + 2\n";
        return kExitVerdict;
      }
      return kExitOk;
    }

    if (*check) {
      cli_detail::check_level(cp, field_degree, "--field-degree");
      const Line3 l(cli_detail::parse_form(cp, h1s, field_degree, "--h1"),
                    cli_detail::parse_form(cp, h2s, field_degree, "--h2"));
      cli_detail::print_analysis(out, cp, an.analyze(l));
      return kExitOk;
    }

    if (*fib) {
      cli_detail::check_level(cp, field_degree, "--field-degree");
      cli_detail::check_level(cp, ext, "--ext");
      const auto semi = line_s.find(';');
      if (semi == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--line needs \"h1;h2\"");
      const Line3 l(cli_detail::parse_form(cp, line_s.substr(0, semi), field_degree, "--line"),
                    cli_detail::parse_form(cp, line_s.substr(semi + 1), field_degree, "--line"));
      const auto b = cli_detail::parse_codes(base_s, 2, "--base");
      const P1Point base{cli_detail::lift_code(cp, b[0], ext), cli_detail::lift_code(cp, b[1], ext)};
      try {
        const auto pts = an.fiber(l, base, ext);
        for (const auto& fp : pts) out << enc::point(cp, fp.point).dump() << " index " << fp.ramification_index << "\n";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BaseOnBranchTooSmallField) throw;
        err << "error: " << e.what() << "; try a larger --ext\n";
        return kExitVerdict;
      }
      return kExitOk;
    }

    if (*rep) {
      ReportOptions opt;
      opt.seed = seed;
      opt.full = full;
      opt.timing = timing;
      opt.negative_count = negative;
      const auto r = build_report(an, opt);
      std::string text;
      if (format == "json") text = to_json(cp, r).dump(2) + "\n";
      else if (format == "csv") text = to_csv(cp, r);
      else text = to_text(cp, r);
      if (out_path.empty()) out << text;
      else if (!cli_detail::write_out(out_path, text, err)) return kExitUsage;
      if (!r.counts_match()) {
        err << "error: counts do not match (q-1) + q^2 + 2\n";
        return kExitVerdict;
      }
      if (r.false_positive()) {
        err << "error: " << r.negative->false_positives.size() << " line(s) outside the Galois families tested Galois\n";
        return kExitVerdict;
      }
      if (!r.all_checks_pass()) {
        err << "error: a property check failed; see the report\n";
        return kExitVerdict;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::CountMismatch:
      case ErrorCode::FalsePositive:
      case ErrorCode::ExtensionBoundExceeded:
      case ErrorCode::PrecisionExhausted: return kExitVerdict;
      default: return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace asmgal
