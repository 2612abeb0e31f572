#pragma once

// Classification report and its JSON / CSV / text renderings.
//
// Field elements are written as integer codes sum c_i p^i of their coordinates
// in the power basis of the smallest listed field F_{q^k} containing them; the
// objects holding them carry that k as "field_degree".

#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "asmgal/classify.hpp"

namespace asmgal {

inline constexpr const char* kToolName = "asm-galois";
inline constexpr const char* kToolVersion = "1.0.0";

struct ReportOptions {
  std::uint64_t seed = 1;
  bool full = false;  // negative scan, section collinearity and property suites
  bool timing = false;
  std::size_t negative_count = 500;
  TypeBPlan type_b{};
  std::size_t section_per_level = 10, section_min_total = 36;
  std::size_t pole_extra = 200;
  std::size_t fibers_per_line = 10;
  std::size_t oracle_extra_lines = 40;
};

struct ClassificationReport {
  std::uint32_t p = 0, q = 0, c = 0;
  ReportOptions options;
  std::uint32_t ambient_degree = 0, sample_level = 0;
  PlaneClassification plane;
  TypeBScan type_b;
  std::optional<NegativeScan> negative;
  std::optional<SectionCollinearity> sections;
  std::optional<AutCheck> aut;
  std::optional<PoleOrderCheck> poles;
  std::optional<OracleCheck> oracle;
  std::optional<FiberSuite> fibers;
  std::vector<std::pair<std::string, double>> timing;

  /// Verdict failures: count mismatch or false positives.
  bool counts_match() const { return plane.matches(q); }
  bool false_positive() const { return negative && !negative->false_positives.empty(); }
  bool all_checks_pass() const {
    bool ok = counts_match() && plane.all_generators_match && type_b.all_ok() && !false_positive();
    if (negative) ok = ok && negative->single_point_ok;
    if (sections) ok = ok && sections->all_ok();
    if (aut) ok = ok && aut->ok();
    if (poles) ok = ok && poles->ok(q);
    if (oracle) ok = ok && oracle->ok();
    if (fibers) ok = ok && fibers->ok();
    return ok;
  }
};

/// Lines for the commutation cross-check: every F_q-line of P^3 when q = 3,
/// otherwise the plane lines, the sampled ruling lines and some negatives.
inline std::vector<Line3> oracle_lines(const GaloisAnalyzer& an, const ClassificationReport& r, std::size_t extra) {
  const auto& cp = an.params();
  if (cp.q() == 3) return enumerate_fq_lines(cp.fq());
  std::vector<Line3> out;
  for (const auto& row : r.plane.rows) out.push_back(row.analysis.line);
  for (const auto& row : r.type_b.rows) out.push_back(row.analysis.line);
  if (r.negative)
    for (std::size_t i = 0; i < r.negative->rows.size() && i < extra; ++i) out.push_back(r.negative->rows[i].analysis.line);
  return out;
}

inline ClassificationReport build_report(const GaloisAnalyzer& an, const ReportOptions& opt) {
  using clock = std::chrono::steady_clock;
  const auto& cp = an.params();
  ClassificationReport r;
  r.p = cp.p();
  r.q = cp.q();
  r.c = cp.c_base().code();
  r.options = opt;
  r.ambient_degree = cp.ambient_degree();
  r.sample_level = an.sample_level();
  auto timed = [&](const char* name, auto&& fn) {
    const auto t0 = clock::now();
    fn();
    r.timing.emplace_back(name, std::chrono::duration<double>(clock::now() - t0).count());
  };
  timed("type_a", [&] { r.plane = classify_plane_lines(an, false); });
  timed("type_b", [&] {
    std::mt19937_64 rng(opt.seed);
    r.type_b = sample_type_b(an, rng, opt.type_b);
  });
  if (!opt.full) return r;
  timed("negative", [&] { r.negative = negative_scan(an, opt.negative_count, opt.seed + 1, false); });
  timed("sections", [&] {
    std::mt19937_64 rng(opt.seed + 2);
    r.sections = section_collinearity_check(cp, rng, opt.section_per_level, opt.section_min_total);
  });
  timed("aut", [&] { r.aut = aut_check(an); });
  timed("pole_orders", [&] {
    std::mt19937_64 rng(opt.seed + 3);
    r.poles = pole_order_check(cp, rng, opt.pole_extra);
  });
  timed("oracle", [&] { r.oracle = oracle_crosscheck(an, oracle_lines(an, r, opt.oracle_extra_lines)); });
  timed("fibers", [&] {
    std::vector<Line3> lines;
    for (const auto& row : r.plane.rows)
      if (row.analysis.is_galois) lines.push_back(row.analysis.line);
    for (const auto& row : r.type_b.rows)
      if (row.analysis.is_galois) lines.push_back(row.analysis.line);
    r.fibers = fiber_suite(an, lines, opt.fibers_per_line, opt.seed + 4);
  });
  return r;
}

// ---------------------------------------------------------------------------
// Encoding

namespace enc {

using json = nlohmann::ordered_json;

inline std::uint32_t field_degree(const CurveParams& cp, std::initializer_list<Fe> xs) {
  std::uint32_t k = 1;
  for (Fe x : xs) k = std::lcm(k, cp.level(x));
  return k;
}

inline std::uint32_t code_at(const CurveParams& cp, Fe x, std::uint32_t k) {
  return cp.level_embedding(k).preimage(x).value().code();
}

inline std::uint32_t line_degree(const CurveParams& cp, const Line3& l) {
  std::uint32_t k = 1;
  for (const auto* h : {&l.h1(), &l.h2()})
    for (Fe x : *h) k = std::lcm(k, cp.level(x));
  return k;
}

inline std::vector<std::uint32_t> codes_at(const CurveParams& cp, const Vec4& h, std::uint32_t k) {
  std::vector<std::uint32_t> out;
  for (Fe x : h) out.push_back(code_at(cp, x, k));
  return out;
}

inline json element(const CurveParams& cp, Fe x) {
  const std::uint32_t k = field_degree(cp, {x});
  return json{{"field_degree", k}, {"code", code_at(cp, x, k)}};
}

inline json line(const CurveParams& cp, const Line3& l) {
  const std::uint32_t k = line_degree(cp, l);
  return json{{"field_degree", k}, {"H1", codes_at(cp, l.h1(), k)}, {"H2", codes_at(cp, l.h2(), k)}};
}

inline json point(const CurveParams& cp, const CurvePoint& P) {
  switch (P.kind) {
    case CurvePoint::Kind::Affine: {
      const std::uint32_t k = field_degree(cp, {P.x, P.y});
      return json{{"kind", "affine"}, {"field_degree", k}, {"x", code_at(cp, P.x, k)}, {"y", code_at(cp, P.y, k)}};
    }
    case CurvePoint::Kind::P: return json{{"kind", "P"}, {"alpha", code_at(cp, P.alpha(), 1)}};
    case CurvePoint::Kind::Q: return json{{"kind", "Q"}, {"alpha", code_at(cp, P.alpha(), 1)}};
  }
  return {};
}

inline json automorphism(const CurveParams& cp, const AutElement& s) {
  return json{{"gamma", code_at(cp, s.gamma, 1)},
              {"a", code_at(cp, s.a, 1)},
              {"b", code_at(cp, s.b, 1)},
              {"swap", s.swap}};
}

inline json fiber(const CurveParams& cp, const Fiber& f) {
  json pts = json::array();
  for (const auto& fp : f.points) pts.push_back(json{{"point", point(cp, fp.point)}, {"index", fp.ramification_index}});
  const std::uint32_t k = field_degree(cp, {f.base[0], f.base[1]});
  return json{{"base", json{{"field_degree", k}, {"lambda", code_at(cp, f.base[0], k)}, {"mu", code_at(cp, f.base[1], k)}}},
              {"points", pts}};
}

inline json analysis(const CurveParams& cp, const GaloisAnalysis& a) {
  json inter = json::array();
  for (const auto& i : a.intersections)
    inter.push_back(json{{"point", point(cp, i.point)}, {"multiplicity", i.multiplicity}});
  json certs = json::array();
  for (const auto& f : a.certificates) certs.push_back(fiber(cp, f));
  json out{{"line", line(cp, a.line)},
           {"degree", a.degree},
           {"stabilizer_order", a.stabilizer.order()},
           {"group_type", a.group_type.name()},
           {"is_galois", a.is_galois},
           {"classification", to_string(a.classification.tag)},
           {"intersections", inter}};
  if (a.unresolved_intersections) out["unresolved_intersections"] = a.unresolved_intersections;
  out["certificates"] = certs;
  return out;
}

inline std::string family_name(LineFamily f) {
  switch (f) {
    case LineFamily::L1: return "L1";
    case LineFamily::L2: return "L2";
    case LineFamily::CenterSlope: return "center-slope";
    case LineFamily::AvoidingCenter: return "avoiding-center";
    case LineFamily::YRuling: return "y-ruling";
    case LineFamily::XRuling: return "x-ruling";
    case LineFamily::None: return "none";
  }
  return "?";
}

}  // namespace enc

inline nlohmann::ordered_json to_json(const CurveParams& cp, const ClassificationReport& r) {
  using enc::json;
  json fields = json::array();
  for (std::uint32_t k : cp.levels()) {
    const auto& f = cp.level_field(k);
    json entry{{"degree_over_fq", k}, {"p", f.p()}, {"e", f.degree()}, {"modulus", f.modulus()}};
    if (k > 1 && k < cp.ambient_degree())
      entry["generator_in_ambient"] = cp.level_embedding(k).generator_image().code();
    fields.push_back(entry);
  }
  json out;
  out["schema"] = 1;
  out["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
  out["params"] = json{{"p", r.p},
                       {"q", r.q},
                       {"c", r.c},
                       {"seed", r.options.seed},
                       {"full", r.options.full},
                       {"ambient_degree", r.ambient_degree},
                       {"pointwise_sample_degree", r.sample_level},
                       {"fields", fields}};

  json rows = json::array();
  for (const auto& row : r.plane.rows) {
    json a = enc::analysis(cp, row.analysis);
    a["family"] = enc::family_name(row.analysis.classification.family);
    a["generators_match"] = row.generators_match;
    rows.push_back(a);
  }
  out["type_a"] = json{{"lines", rows},
                       {"counts", json{{"F_q:C2", r.plane.n_fq_semi_c2},
                                       {"F_q*:C2", r.plane.n_fq_star_semi_c2},
                                       {"F_q", r.plane.n_fq},
                                       {"other", r.plane.n_other}}},
                       {"total", r.plane.total()},
                       {"all_galois", r.plane.all_galois},
                       {"generators_match", r.plane.all_generators_match},
                       {"matches", r.plane.matches(r.q)}};

  json tb = json::array();
  for (const auto& row : r.type_b.rows) {
    json a = enc::analysis(cp, row.analysis);
    a["a"] = enc::element(cp, row.a);
    a["family"] = enc::family_name(row.family);
    a["same_group_as_axis"] = row.same_group_as_axis;
    a["intersection_ok"] = row.intersection_ok;
    tb.push_back(a);
  }
  json tb_skipped = json::array();
  for (Fe a : r.type_b.skipped) tb_skipped.push_back(enc::element(cp, a));
  out["type_b"] = json{{"rows", tb}, {"skipped", tb_skipped}, {"all_ok", r.type_b.all_ok()}};

  if (r.negative) {
    json neg = json::array();
    for (const auto& row : r.negative->rows) {
      json a = enc::analysis(cp, row.analysis);
      a["strategy"] = to_string(row.strategy);
      neg.push_back(a);
    }
    json fp = json::array();
    for (const auto& l : r.negative->false_positives) fp.push_back(enc::line(cp, l));
    out["negative"] = json{{"rows", neg},
                           {"false_positives", fp},
                           {"skipped", r.negative->skipped},
                           {"single_point_lines", r.negative->single_point},
                           {"single_point_ok", r.negative->single_point_ok}};
  }
  if (r.sections) {
    json rows_s = json::array();
    for (const auto& s : r.sections->rows) {
      json pts = json::array();
      for (const auto& P : s.off_omega1) pts.push_back(enc::point(cp, P));
      rows_s.push_back(json{{"a", enc::element(cp, s.a)}, {"in_fq", s.in_fq}, {"points", pts}, {"ok", s.ok}});
    }
    json skipped = json::array();
    for (Fe a : r.sections->skipped) skipped.push_back(enc::element(cp, a));
    out["section_collinearity"] = json{{"rows", rows_s}, {"skipped", skipped}, {"all_ok", r.sections->all_ok()}};
  }
  if (r.aut || r.poles || r.oracle || r.fibers) {
    json props;
    if (r.aut) {
      props["aut"] = json{{"order", r.aut->order}, {"expected", r.aut->expected}, {"closed", r.aut->closed},
                          {"faithful", r.aut->faithful}, {"generated", r.aut->generated}, {"ok", r.aut->ok()}};
    }
    if (r.poles) {
      json hist;
      for (const auto& [o, n] : r.poles->histogram) hist[std::to_string(o)] = n;
      props["pole_orders"] = json{{"checked", r.poles->checked}, {"histogram", hist},
                                  {"violations", r.poles->violations.size()}, {"ok", r.poles->ok(r.q)}};
    }
    if (r.oracle)
      props["commutation_oracle"] = json{{"pairs", r.oracle->pairs}, {"agree", r.oracle->agree},
                                         {"disagree", r.oracle->disagree}, {"inconclusive", r.oracle->inconclusive},
                                         {"commuting", r.oracle->commuting}, {"ok", r.oracle->ok()}};
    if (r.fibers) {
      json shorts = json::array(), fails = json::array();
      for (const auto& l : r.fibers->short_lines) shorts.push_back(enc::line(cp, l));
      for (const auto& l : r.fibers->failures) fails.push_back(enc::line(cp, l));
      props["fibers"] = json{{"lines", r.fibers->lines}, {"fibers", r.fibers->fibers}, {"short_lines", shorts},
                             {"failures", fails}, {"ok", r.fibers->ok()}};
    }
    out["properties"] = props;
  }
  out["all_checks_pass"] = r.all_checks_pass();
  if (r.options.timing) {
    json t;
    for (const auto& [name, secs] : r.timing) t[name] = secs;
    out["timing"] = t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV and text

/// Space-separated codes, with "@k" appended for a line over F_{q^k}, k > 1.
inline std::string line_equation(const CurveParams& cp, const Vec4& h, std::uint32_t k) {
  std::ostringstream os;
  const auto codes = enc::codes_at(cp, h, k);
  for (std::size_t i = 0; i < codes.size(); ++i) os << (i ? " " : "") << codes[i];
  if (k > 1) os << "@" << k;
  return os.str();
}

inline void csv_row(std::ostream& os, const CurveParams& cp, const GaloisAnalysis& a) {
  const std::uint32_t k = enc::line_degree(cp, a.line);
  os << line_equation(cp, a.line.h1(), k) << ',' << line_equation(cp, a.line.h2(), k) << ',' << a.degree << ','
     << a.stabilizer.order() << ',' << a.group_type.name() << ',' << (a.is_galois ? "true" : "false") << ','
     << to_string(a.classification.tag) << '\n';
}

inline std::string to_csv(const CurveParams& cp, const ClassificationReport& r) {
  std::ostringstream os;
  os << "line_h1,line_h2,degree,stab_order,group_type,is_galois,classification\n";
  for (const auto& row : r.plane.rows) csv_row(os, cp, row.analysis);
  for (const auto& row : r.type_b.rows) csv_row(os, cp, row.analysis);
  if (r.negative)
    for (const auto& row : r.negative->rows) csv_row(os, cp, row.analysis);
  return os.str();
}

/// Group name with q spelled out, e.g. "F_3:C2".
inline std::string group_label(const GroupType& g, std::uint32_t q) {
  std::string s = g.name();
  const auto pos = s.find("F_q");
  if (pos != std::string::npos) s.replace(pos, 3, "F_" + std::to_string(q));
  return s;
}

inline std::string counts_sentence(const PlaneClassification& pc, std::uint32_t q) {
  std::ostringstream os;
  os << pc.n_fq_semi_c2 << " + " << pc.n_fq_star_semi_c2 << " + " << pc.n_fq << " = " << pc.total() << " lines";
  os << (pc.all_galois ? ", all Galois" : ", not all Galois");
  os << (pc.matches(q) ? ", matching the predicted (q-1) + q^2 + 2" : ", NOT matching the predicted (q-1) + q^2 + 2");
  return os.str();
}

inline std::string plane_table(const CurveParams& cp, const PlaneClassification& pc) {
  std::ostringstream os;
  os << "F_" << cp.q() << "-lines of {Z=0} on (x^q-x)(y^q-y)=c, q=" << cp.q() << ", c=" << cp.c_base().code() << "\n";
  os << "H1        | H2        | deg | |G| | group        | class\n";
  for (const auto& row : pc.rows) {
    const auto& a = row.analysis;
    std::string h1 = line_equation(cp, a.line.h1(), 1), h2 = line_equation(cp, a.line.h2(), 1);
    std::string g = group_label(a.group_type, cp.q());
    h1.resize(std::max<std::size_t>(h1.size(), 9), ' ');
    h2.resize(std::max<std::size_t>(h2.size(), 9), ' ');
    g.resize(std::max<std::size_t>(g.size(), 12), ' ');
    os << h1 << " | " << h2 << " | " << a.degree << (a.degree < 10 ? "  " : " ") << " | " << a.stabilizer.order()
       << (a.stabilizer.order() < 10 ? "  " : " ") << " | " << g << " | " << to_string(a.classification.tag) << "\n";
  }
  os << counts_sentence(pc, cp.q()) << "\n";
  return os.str();
}

inline std::string to_text(const CurveParams& cp, const ClassificationReport& r) {
  std::ostringstream os;
  os << plane_table(cp, r.plane);
  std::size_t galois_b = 0;
  for (const auto& row : r.type_b.rows) galois_b += row.ok();
  os << "ruling lines: " << galois_b << "/" << r.type_b.rows.size() << " Galois with degree q and G = G_L1 or G_L2";
  if (!r.type_b.skipped.empty()) os << " (" << r.type_b.skipped.size() << " parameters beyond the ambient field)";
  os << "\n";
  if (r.negative)
    os << "negative scan: " << r.negative->rows.size() << " lines, " << r.negative->false_positives.size()
       << " tested Galois\n";
  if (r.sections)
    os << "sections {Y=aZ}: " << r.sections->rows.size() << " checked, " << (r.sections->all_ok() ? "all" : "NOT all")
       << " as predicted\n";
  if (r.aut)
    os << "Aut(X): order " << r.aut->order << ", " << (r.aut->ok() ? "closed and faithful" : "CHECK FAILED") << "\n";
  if (r.poles)
    os << "orders at infinity: " << r.poles->checked << " hyperplanes, " << (r.poles->ok(r.q) ? "all" : "NOT all")
       << " in {1, q, q+1}\n";
  if (r.oracle)
    os << "commutation oracle: " << r.oracle->agree << "/" << r.oracle->pairs << " pairs agree\n";
  if (r.fibers)
    os << "fibers: " << r.fibers->fibers << " complete fibers on " << r.fibers->lines << " lines, "
       << r.fibers->failures.size() << " failures\n";
  if (r.options.timing)
    for (const auto& [name, secs] : r.timing) os << "time " << name << ": " << secs << " s\n";
  return os.str();
}

}  // namespace asmgal
