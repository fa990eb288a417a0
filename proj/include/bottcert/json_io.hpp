#pragma once

#include <json.hpp>
#include <string>

#include "bottcert/bwb.hpp"
#include "bottcert/certify.hpp"
#include "bottcert/flag.hpp"
#include "bottcert/weight.hpp"

// JSON serialization for every object the command-line tool can emit.
//
// Conventions, chosen so that output is byte-stable across runs and thread
// counts and convenient to diff:
//   * weights appear as {"coords": [...], "label": "w1-2w3"} — the raw
//     fundamental-basis coefficients next to the human-readable form;
//   * all big integers (dimensions, multiplicities, Euler numbers) are
//     decimal strings, never JSON numbers, so nothing overflows a reader;
//   * nlohmann's default object storage is an ordered map, which keeps keys
//     sorted; arrays are emitted in a canonical (sorted) order at build time;
//   * timing is opt-in: deterministic payloads carry no clock values.

namespace bottcert {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json weight_json(const Weight& w) {
  json coords = json::array();
  for (int i = 0; i < w.n; ++i) coords.push_back(w.c[i]);
  return json{{"coords", std::move(coords)}, {"label", w.pretty()}};
}

inline json mpz_json(const mpz_class& z) { return z.get_str(); }

inline json diagram_json(const MarkedDiagram& md) {
  return json{{"type", md.type.name()}, {"marked", md.marked}, {"name", md.name()}};
}

inline json variety_json(const FlagVariety& X) {
  json grades = json::array();
  for (int j = 1; j <= X.graded_count(); ++j)
    grades.push_back(mpz_json(X.graded_piece(j).dimension()));
  return json{{"name", X.name()},
              {"dimension", X.dimension()},
              {"index", X.index()},
              {"index_weight", weight_json(X.index_weight())},
              {"ample_unit", weight_json(X.unit_weight())},
              {"graded_dimensions", std::move(grades)}};
}

inline json line_cohomology_json(const Weight& label, const LineCohomology& lc,
                                 const mpz_class& dim) {
  json j{{"label", weight_json(label)}, {"vanishes", lc.vanishes}};
  if (!lc.vanishes) {
    j["degree"] = lc.degree;
    j["representation"] = weight_json(lc.rep);
    j["dimension"] = mpz_json(dim);
  }
  return j;
}

inline json sources_json(const std::vector<CohSource>& sources) {
  json arr = json::array();
  for (const CohSource& s : sources)
    arr.push_back(json{{"composition", s.composition},
                       {"levi_label", weight_json(s.levi_label)},
                       {"multiplicity", mpz_json(s.mult)}});
  return arr;
}

inline json table_json(const CohomologyTable& table) {
  json degrees = json::array();
  for (const auto& [p, row] : table.rows()) {
    json entries = json::array();
    for (const auto& [rep, entry] : row)
      entries.push_back(json{{"representation", weight_json(rep)},
                             {"multiplicity", mpz_json(entry.mult)},
                             {"dimension", mpz_json(entry.dim)},
                             {"sources", sources_json(entry.sources)}});
    degrees.push_back(json{{"degree", p}, {"entries", std::move(entries)}});
  }
  return degrees;
}

inline json certificate_json(const Certificate& cert, bool with_table = true,
                             bool with_timing = false) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["diagram"] = diagram_json(cert.diagram);
  j["variety"] = cert.variety;
  j["dimension"] = cert.dim_x;
  j["index"] = cert.index;
  j["q"] = cert.q;
  j["twist"] = cert.twist;
  j["twist_weight"] = weight_json(cert.twist_weight);
  j["status"] = to_string(cert.status);
  j["exact"] = cert.exact;

  json survivors = json::array();
  for (const Survivor& s : cert.survivors)
    survivors.push_back(json{{"representation", weight_json(s.rep)},
                             {"multiplicity", mpz_json(s.mult)},
                             {"dimension", mpz_json(s.dim)},
                             {"kind", s.kind}});
  j["survivors"] = std::move(survivors);

  json ambiguous = json::array();
  for (const Witness& w : cert.ambiguous)
    ambiguous.push_back(json{{"representation", weight_json(w.rep)},
                             {"degrees", w.degrees},
                             {"multiplicity_in_degree_1", mpz_json(w.mult_in_degree1)}});
  j["ambiguous"] = std::move(ambiguous);

  json degrees = json::array();
  for (const DegreeSummary& d : cert.degree_summaries)
    degrees.push_back(json{{"degree", d.degree},
                           {"entries", d.entries},
                           {"total_dimension", mpz_json(d.total_dim)}});
  j["degree_summaries"] = std::move(degrees);

  j["counts"] = json{{"page_summands", cert.stats.summands},
                     {"levi_irreps", cert.stats.irreps},
                     {"line_bundles", cert.stats.bwb_calls},
                     {"nonvanishing", cert.stats.surviving_entries}};
  if (with_table) j["cohomology"] = table_json(cert.table);
  if (with_timing) j["elapsed_seconds"] = cert.elapsed_seconds;
  return j;
}

inline json minimal_q_json(const MinimalQReport& rep, bool with_timing = false) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["q_max"] = rep.q_max;
  if (rep.first_certified)
    j["first_certified_q"] = *rep.first_certified;
  else
    j["first_certified_q"] = nullptr;
  json trail = json::array();
  for (const Certificate& c : rep.trail)
    trail.push_back(certificate_json(c, /*with_table=*/false, with_timing));
  j["trail"] = std::move(trail);
  return j;
}

inline json scan_json(const std::vector<ScanCell>& cells) {
  json arr = json::array();
  for (const ScanCell& c : cells)
    arr.push_back(json{{"q", c.q},
                       {"m", c.m},
                       {"occupied_degrees", c.occupied_degrees},
                       {"h0_dimension", mpz_json(c.h0_dim)},
                       {"higher_cohomology", c.higher_occupied}});
  return json{{"schema_version", kSchemaVersion}, {"cells", std::move(arr)}};
}

inline json stabilization_json(const StabilizationReport& rep) {
  json rows = json::array();
  for (const StabilizationRow& r : rep.rows) {
    json terms = json::array();
    for (const auto& [coords, mult] : r.truncated)
      terms.push_back(json{{"window_coords", coords}, {"multiplicity", mpz_json(mult)}});
    rows.push_back(json{{"n", r.n},
                        {"support_in_window", r.support_in_window},
                        {"terms", std::move(terms)}});
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["series"] = std::string(1, series_letter(rep.series));
  j["q"] = rep.q;
  if (rep.stable_from)
    j["stable_from"] = *rep.stable_from;
  else
    j["stable_from"] = nullptr;
  j["rows"] = std::move(rows);
  return j;
}

/// Render with a fixed layout (two-space indent, '\n' terminated) so the
/// serialized form is byte-identical whenever the value is.
inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace bottcert
