// Command-line front end for the certification engine.
//
// Subcommands:
//   roots        inspect a root system (Cartan data, Weyl order, extreme roots)
//   tables       reproduce the adjoint / coadjoint / E-weight reference tables
//   exterior     decompose the graded pieces of Lambda^q T_X (one E1 page)
//   cohomology   evaluate one irreducible homogeneous bundle U^lambda(t)
//   verify       certify Bott-vanishing failure for one (X, q, twist)
//   certify-all  run the whole suite of adjoint and coadjoint cases
//
// Exit codes: 0 = certified / success, 1 = usage or internal error,
// 2 = ambiguous, not found, or budget exhausted.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bottcert/bottcert.hpp"
#include "bottcert/json_io.hpp"

namespace {

using namespace bottcert;

struct CommonOpts {
  std::string type;
  int rank = 0;
  std::string marked;
  bool adjoint = false;
  bool coadjoint = false;
  std::string format = "text";
  int threads = 0;
  double budget_seconds = 0;
  uint64_t budget_weights = 0;
  bool timing = false;
};

void add_type_options(CLI::App* sc, CommonOpts& o) {
  sc->add_option("--type", o.type, "Dynkin series letter, optionally with rank (B, B3, G2)")
      ->required();
  sc->add_option("--rank", o.rank, "rank when --type carries only the letter");
}

void add_marking_options(CLI::App* sc, CommonOpts& o) {
  sc->add_option("--marked", o.marked, "comma-separated marked nodes, 1-based (e.g. 1,3)");
  sc->add_flag("--adjoint", o.adjoint, "mark the support of the highest long root");
  sc->add_flag("--coadjoint", o.coadjoint, "mark the support of the highest short root");
}

void add_run_options(CLI::App* sc, CommonOpts& o) {
  sc->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sc->add_option("--threads", o.threads,
                 "worker threads (default: BOTTCERT_THREADS or hardware)");
  sc->add_option("--budget-seconds", o.budget_seconds, "wall-clock cap, 0 = unlimited");
  sc->add_option("--budget-weights", o.budget_weights,
                 "cap on distinct weights per character, 0 = unlimited");
  sc->add_flag("--timing", o.timing, "include (non-deterministic) elapsed times in output");
}

DynkinType type_of(const CommonOpts& o) { return parse_dynkin_type(o.type, o.rank); }

MarkedDiagram diagram_of(const CommonOpts& o) {
  const DynkinType t = type_of(o);
  const int selectors = (o.marked.empty() ? 0 : 1) + (o.adjoint ? 1 : 0) + (o.coadjoint ? 1 : 0);
  if (selectors != 1)
    throw UsageError("specify exactly one of --marked, --adjoint, --coadjoint");
  if (o.adjoint) return adjoint_marking(t);
  if (o.coadjoint) return coadjoint_marking(t);
  std::vector<int> nodes;
  for (int32_t c : parse_coordinate_list(o.marked)) nodes.push_back(static_cast<int>(c));
  return MarkedDiagram(t, nodes);
}

Budget budget_of(const CommonOpts& o) { return Budget(o.budget_seconds, o.budget_weights); }

// ---------------------------------------------------------------- roots ----

int cmd_roots(const CommonOpts& o) {
  RootSystemPtr rs = make_root_system(type_of(o));
  const DynkinType& t = rs->type();
  if (o.format == "json") {
    json simple = json::array();
    for (int i = 0; i < t.rank; ++i) {
      Weight alpha = rs->simple_root(i).fund;
      simple.push_back(weight_json(alpha));
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = t.name();
    j["rank"] = t.rank;
    j["positive_roots"] = rs->positive_roots().size();
    j["weyl_order"] = std::to_string(weyl_order(t));
    j["highest_long_root"] = weight_json(rs->highest_long_root());
    j["highest_short_root"] = weight_json(rs->highest_short_root());
    j["rho"] = weight_json(rs->rho());
    j["simple_roots"] = std::move(simple);
    j["adjoint_marking"] = adjoint_marking(t).marked;
    j["coadjoint_marking"] = coadjoint_marking(t).marked;
    std::cout << dump_json(j);
    return 0;
  }
  std::cout << "root system " << t.name() << "\n"
            << "  positive roots     " << rs->positive_roots().size() << "\n"
            << "  weyl group order   " << weyl_order(t) << "\n"
            << "  highest long root  " << rs->highest_long_root().pretty() << "\n"
            << "  highest short root " << rs->highest_short_root().pretty() << "\n"
            << "  rho                " << rs->rho().pretty() << "\n";
  std::cout << "  simple roots      ";
  for (int i = 0; i < t.rank; ++i)
    std::cout << (i ? ", " : " ") << rs->simple_root(i).fund.pretty();
  std::cout << "\n";
  auto marks = [](const MarkedDiagram& md) {
    std::string s;
    for (int k : md.marked) s += (s.empty() ? "" : ",") + std::to_string(k);
    return s;
  };
  std::cout << "  adjoint marking    P" << marks(adjoint_marking(t)) << "\n"
            << "  coadjoint marking  P" << marks(coadjoint_marking(t)) << "\n";
  return 0;
}

// --------------------------------------------------------------- tables ----

struct TableRow {
  std::string name;
  std::string variety;
  int dimension = 0;
  int index = 0;
};

TableRow make_row(const MarkedDiagram& md, std::string variety) {
  FlagVariety X{md};
  return TableRow{X.name(), std::move(variety), X.dimension(), X.index()};
}

std::vector<TableRow> adjoint_rows(int n_max) {
  std::vector<TableRow> rows;
  for (int n = 2; n <= n_max; ++n)
    rows.push_back(make_row(adjoint_marking(DynkinType(Series::A, n)),
                            "P(T_P" + std::to_string(n) + ")"));
  for (int n = 3; n <= n_max; ++n)
    rows.push_back(make_row(adjoint_marking(DynkinType(Series::B, n)),
                            "OGr(2," + std::to_string(2 * n + 1) + ")"));
  for (int n = 4; n <= n_max; ++n)
    rows.push_back(make_row(adjoint_marking(DynkinType(Series::D, n)),
                            "OGr(2," + std::to_string(2 * n) + ")"));
  rows.push_back(make_row(adjoint_marking(DynkinType(Series::E, 6)), ""));
  rows.push_back(make_row(adjoint_marking(DynkinType(Series::E, 7)), ""));
  rows.push_back(make_row(adjoint_marking(DynkinType(Series::E, 8)), ""));
  rows.push_back(make_row(adjoint_marking(DynkinType(Series::F, 4)), ""));
  rows.push_back(make_row(adjoint_marking(DynkinType(Series::G, 2)), "G2Gr(2,7)"));
  return rows;
}

std::vector<TableRow> coadjoint_rows(int n_max) {
  std::vector<TableRow> rows;
  for (int n = 3; n <= n_max; ++n)
    rows.push_back(make_row(coadjoint_marking(DynkinType(Series::C, n)),
                            "SGr(2," + std::to_string(2 * n) + ")"));
  rows.push_back(make_row(coadjoint_marking(DynkinType(Series::F, 4)), ""));
  return rows;
}

int cmd_tables(const std::string& which, int n_max, const std::string& format) {
  if (which == "adjoint" || which == "coadjoint") {
    std::vector<TableRow> rows = which == "adjoint" ? adjoint_rows(n_max) : coadjoint_rows(n_max);
    if (format == "json") {
      json arr = json::array();
      for (const TableRow& r : rows)
        arr.push_back(json{{"name", r.name},
                           {"variety", r.variety},
                           {"dimension", r.dimension},
                           {"index", r.index}});
      std::cout << dump_json(
          json{{"schema_version", kSchemaVersion}, {"table", which}, {"rows", std::move(arr)}});
      return 0;
    }
    std::cout << std::left << std::setw(10) << "type" << std::setw(14) << "variety"
              << std::right << std::setw(10) << "dimension" << std::setw(7) << "index" << "\n";
    for (const TableRow& r : rows)
      std::cout << std::left << std::setw(10) << r.name << std::setw(14) << r.variety
                << std::right << std::setw(10) << r.dimension << std::setw(7) << r.index << "\n";
    return 0;
  }
  if (which == "E-weights") {
    // highest weight of the bundle E = gr_1 of the tangent filtration for the
    // adjoint families whose first graded piece is irreducible
    std::vector<std::pair<std::string, Weight>> rows;
    auto push = [&rows](const DynkinType& t) {
      FlagVariety X{adjoint_marking(t)};
      IrrepMultiset dec = decompose(X.graded_piece(1));
      if (dec.size() != 1 || dec[0].mult != 1)
        throw Error("first graded piece of " + X.name() + " is not irreducible");
      rows.emplace_back(t.name(), dec[0].highest);
    };
    for (int n = 3; n <= n_max; ++n) push(DynkinType(Series::B, n));
    for (int n = 4; n <= n_max; ++n) push(DynkinType(Series::D, n));
    push(DynkinType(Series::E, 6));
    push(DynkinType(Series::E, 7));
    push(DynkinType(Series::E, 8));
    push(DynkinType(Series::F, 4));
    push(DynkinType(Series::G, 2));
    if (format == "json") {
      json arr = json::array();
      for (const auto& [name, w] : rows)
        arr.push_back(json{{"type", name}, {"E", weight_json(w)}});
      std::cout << dump_json(json{
          {"schema_version", kSchemaVersion}, {"table", "E-weights"}, {"rows", std::move(arr)}});
      return 0;
    }
    std::cout << std::left << std::setw(6) << "type" << "E\n";
    for (const auto& [name, w] : rows)
      std::cout << std::left << std::setw(6) << name << w.pretty() << "\n";
    return 0;
  }
  throw UsageError("unknown table '" + which + "' (expected adjoint, coadjoint, E-weights)");
}

// ------------------------------------------------------------- exterior ----

int cmd_exterior(const CommonOpts& o, int q, int twist) {
  FlagVariety X{diagram_of(o)};
  Budget budget = budget_of(o);
  std::vector<E1Summand> page = e1_summands(X, q, X.line_weight(twist), budget);
  const int threads = resolve_threads(o.threads);
  std::vector<IrrepMultiset> decs = parallel_map<IrrepMultiset>(
      page.size(), threads, [&](size_t i) { return decompose(page[i].ch, budget); });
  if (o.format == "json") {
    json summands = json::array();
    for (size_t i = 0; i < page.size(); ++i) {
      json terms = json::array();
      for (const IrrepTerm& t : decs[i])
        terms.push_back(json{{"highest_weight", weight_json(t.highest)},
                             {"multiplicity", mpz_json(t.mult)},
                             {"levi_dimension", mpz_json(weyl_dimension(*X.levi(), t.highest))}});
      summands.push_back(json{{"composition", page[i].composition},
                              {"dimension", mpz_json(page[i].ch.dimension())},
                              {"terms", std::move(terms)}});
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["diagram"] = diagram_json(X.diagram());
    j["q"] = q;
    j["twist"] = twist;
    j["summands"] = std::move(summands);
    std::cout << dump_json(j);
    return 0;
  }
  std::cout << X.name() << "  Lambda^" << q << " T(" << twist << ") associated graded\n";
  for (size_t i = 0; i < page.size(); ++i) {
    std::cout << "  [";
    for (size_t k = 0; k < page[i].composition.size(); ++k)
      std::cout << (k ? "," : "") << page[i].composition[k];
    std::cout << "]  dim " << page[i].ch.dimension() << "\n";
    for (const IrrepTerm& t : decs[i])
      std::cout << "    " << t.highest.pretty() << "  x" << t.mult << "  (levi dim "
                << weyl_dimension(*X.levi(), t.highest) << ")\n";
  }
  return 0;
}

// ----------------------------------------------------------- cohomology ----

int cmd_cohomology(const CommonOpts& o, const std::string& lambda_text, int twist) {
  FlagVariety X{diagram_of(o)};
  std::vector<int32_t> coords = parse_coordinate_list(lambda_text);
  if (static_cast<int>(coords.size()) != X.roots().type().rank)
    throw UsageError("--lambda needs exactly " + std::to_string(X.roots().type().rank) +
                     " coordinates for " + X.roots().type().name());
  Weight lambda = Weight::from_vector(coords) + X.line_weight(twist);
  LineCohomology lc = bundle_line_cohomology(X, lambda);
  mpz_class dim = lc.vanishes ? mpz_class(0) : weyl_dimension(*X.full(), lc.rep);
  mpz_class chi = euler_characteristic(X, lambda);
  if (o.format == "json") {
    json j = line_cohomology_json(lambda, lc, dim);
    j["schema_version"] = kSchemaVersion;
    j["diagram"] = diagram_json(X.diagram());
    j["euler_characteristic"] = mpz_json(chi);
    std::cout << dump_json(j);
    return 0;
  }
  std::cout << X.name() << "  U^{" << lambda.pretty() << "}\n";
  if (lc.vanishes)
    std::cout << "  all cohomology vanishes\n";
  else
    std::cout << "  H^" << lc.degree << " = V^{" << lc.rep.pretty() << "}  (dim " << dim << ")\n";
  std::cout << "  euler characteristic " << chi << "\n";
  return 0;
}

// --------------------------------------------------------------- verify ----

void reject_projective_space(const FlagVariety& X) {
  if (X.index() == X.dimension() + 1)
    throw UsageError(X.name() + " is isomorphic to P^" + std::to_string(X.dimension()) +
                     ", where Bott vanishing holds; nothing to certify");
}

std::string survivor_line(const Survivor& s) {
  std::ostringstream out;
  out << "V^{" << s.rep.pretty() << "}  multiplicity >= " << s.mult << "  dim " << s.dim << "  ["
      << s.kind << "]";
  return out.str();
}

void print_certificate(const Certificate& cert, bool timing) {
  std::cout << cert.variety << "  q=" << cert.q << "  twist=" << cert.twist << " ("
            << cert.twist_weight.pretty() << ")\n";
  std::cout << "  dimension " << cert.dim_x << ", index " << cert.index << "\n";
  std::cout << "  status: " << to_string(cert.status) << (cert.exact ? " (exact)" : "") << "\n";
  for (const Survivor& s : cert.survivors) std::cout << "  survivor " << survivor_line(s) << "\n";
  for (const Witness& w : cert.ambiguous) {
    std::cout << "  ambiguous V^{" << w.rep.pretty() << "}  degrees";
    for (int d : w.degrees) std::cout << " " << d;
    std::cout << "  multiplicity in degree 1: " << w.mult_in_degree1 << "\n";
  }
  for (const auto& [p, row] : cert.table.rows()) {
    std::cout << "  H^" << p << ":";
    for (const auto& [rep, entry] : row)
      std::cout << "  V^{" << rep.pretty() << "}x" << entry.mult;
    std::cout << "\n";
  }
  if (timing) std::cout << "  elapsed " << cert.elapsed_seconds << "s\n";
}

int cmd_verify(const CommonOpts& o, int q, int q_max, int twist) {
  MarkedDiagram md = diagram_of(o);
  reject_projective_space(FlagVariety{md});
  Budget budget = budget_of(o);
  const int threads = resolve_threads(o.threads);
  if (q <= 0 && q_max <= 0) throw UsageError("verify needs --q or --q-max");

  if (q > 0) {
    Certificate cert = certify(md, q, twist, budget, threads);
    if (o.format == "json")
      std::cout << dump_json(certificate_json(cert, true, o.timing));
    else
      print_certificate(cert, o.timing);
    return cert.certified() ? 0 : 2;
  }

  MinimalQReport rep = find_minimal_q(md, q_max, twist, budget, threads);
  if (o.format == "json") {
    std::cout << dump_json(minimal_q_json(rep, o.timing));
  } else {
    for (const Certificate& c : rep.trail) print_certificate(c, o.timing);
    if (rep.first_certified)
      std::cout << "first certified q: " << *rep.first_certified << "\n";
    else
      std::cout << "no certified q in [1, " << rep.q_max << "]\n";
  }
  return rep.first_certified ? 0 : 2;
}

// ---------------------------------------------------------- certify-all ----

struct SuiteCase {
  std::string family; // "adjoint" or "coadjoint"
  MarkedDiagram md;
  int q;
};

std::vector<SuiteCase> default_suite(bool extended) {
  std::vector<SuiteCase> cases;
  auto adj = [&cases](DynkinType t, int q) {
    cases.push_back(SuiteCase{"adjoint", adjoint_marking(t), q});
  };
  auto coadj = [&cases](DynkinType t, int q) {
    cases.push_back(SuiteCase{"coadjoint", coadjoint_marking(t), q});
  };
  for (int n = 2; n <= 5; ++n) adj(DynkinType(Series::A, n), 1);
  for (int n = 3; n <= 7; ++n) adj(DynkinType(Series::B, n), 3);
  for (int n = 4; n <= 8; ++n) adj(DynkinType(Series::D, n), 3);
  adj(DynkinType(Series::E, 6), 5);
  adj(DynkinType(Series::E, 7), 7);
  adj(DynkinType(Series::F, 4), 4);
  adj(DynkinType(Series::G, 2), 2);
  for (int n = 3; n <= 6; ++n) coadj(DynkinType(Series::C, n), 1);
  coadj(DynkinType(Series::F, 4), 1);
  if (extended) adj(DynkinType(Series::E, 8), 11);
  return cases;
}

int cmd_certify_all(const CommonOpts& o, bool extended) {
  std::vector<SuiteCase> cases = default_suite(extended);
  const int threads = resolve_threads(o.threads);
  json results = json::array();
  bool all_certified = true;
  bool budget_hit = false;
  for (const SuiteCase& sc : cases) {
    std::ostringstream line;
    line << std::left << std::setw(11) << sc.family << std::setw(10) << sc.md.name() << " q="
         << std::setw(3) << sc.q;
    try {
      Certificate cert = certify(sc.md, sc.q, -1, budget_of(o), threads);
      all_certified = all_certified && cert.certified();
      std::string survivors;
      for (const Survivor& s : cert.survivors) {
        if (!survivors.empty()) survivors += ", ";
        survivors += s.rep.pretty() + " x" + s.mult.get_str();
      }
      line << " " << std::setw(12) << to_string(cert.status)
           << (cert.exact ? " exact   " : "         ") << " survivors: " << std::setw(24)
           << (survivors.empty() ? "-" : survivors);
      if (o.timing)
        line << "  " << std::fixed << std::setprecision(1) << cert.elapsed_seconds << "s";
      else
        line << "  -";
      if (o.format == "json") {
        json row = certificate_json(cert, false, o.timing);
        row["family"] = sc.family;
        results.push_back(std::move(row));
      }
    } catch (const BudgetExceeded& e) {
      budget_hit = true;
      all_certified = false;
      line << " budget       error: " << e.what();
      if (o.format == "json")
        results.push_back(json{{"family", sc.family},
                               {"diagram", diagram_json(sc.md)},
                               {"q", sc.q},
                               {"status", "budget"},
                               {"error", e.what()}});
    }
    if (o.format != "json") std::cout << line.str() << "\n";
  }
  if (o.format == "json")
    std::cout << dump_json(json{{"schema_version", kSchemaVersion},
                                {"suite", extended ? "extended" : "default"},
                                {"all_certified", all_certified},
                                {"results", std::move(results)}});
  else
    std::cout << (all_certified ? "all cases certified"
                                : (budget_hit ? "budget exhausted on some cases"
                                              : "some cases not certified"))
              << "\n";
  return all_certified ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic certification of Bott-vanishing failure on "
               "adjoint and coadjoint partial flag varieties"};
  app.require_subcommand(1);

  CommonOpts roots_o;
  CLI::App* sc_roots = app.add_subcommand("roots", "inspect a root system");
  add_type_options(sc_roots, roots_o);
  sc_roots->add_option("--format", roots_o.format)->check(CLI::IsMember({"text", "json"}));

  std::string tables_which;
  int tables_n_max = 8;
  std::string tables_format = "text";
  CLI::App* sc_tables = app.add_subcommand("tables", "reproduce the reference tables");
  sc_tables->add_option("which", tables_which, "adjoint | coadjoint | E-weights")->required();
  sc_tables->add_option("--n-max", tables_n_max, "largest rank for the classical families")
      ->capture_default_str();
  sc_tables->add_option("--format", tables_format)->check(CLI::IsMember({"text", "json"}));

  CommonOpts ext_o;
  int ext_q = 0, ext_twist = 0;
  CLI::App* sc_ext = app.add_subcommand("exterior", "decompose Lambda^q T_X gradeds");
  add_type_options(sc_ext, ext_o);
  add_marking_options(sc_ext, ext_o);
  add_run_options(sc_ext, ext_o);
  sc_ext->add_option("--q", ext_q, "exterior power")->required();
  sc_ext->add_option("--twist", ext_twist, "twist by this multiple of O(1)");

  CommonOpts coh_o;
  std::string coh_lambda;
  int coh_twist = 0;
  CLI::App* sc_coh = app.add_subcommand("cohomology", "cohomology of one bundle U^lambda");
  add_type_options(sc_coh, coh_o);
  add_marking_options(sc_coh, coh_o);
  add_run_options(sc_coh, coh_o);
  sc_coh->add_option("--lambda", coh_lambda, "fundamental coordinates, comma-separated")
      ->required();
  sc_coh->add_option("--twist", coh_twist, "extra twist by this multiple of O(1)");

  CommonOpts ver_o;
  int ver_q = 0, ver_q_max = 0, ver_twist = -1;
  CLI::App* sc_ver = app.add_subcommand("verify", "certify failure for one (X, q, twist)");
  add_type_options(sc_ver, ver_o);
  add_marking_options(sc_ver, ver_o);
  add_run_options(sc_ver, ver_o);
  sc_ver->add_option("--q", ver_q, "exterior power to certify");
  sc_ver->add_option("--q-max", ver_q_max, "search q = 1..q-max for the least certified q");
  sc_ver->add_option("--twist", ver_twist, "twist multiple of O(1)")->capture_default_str();

  CommonOpts all_o;
  bool all_extended = false;
  CLI::App* sc_all = app.add_subcommand("certify-all", "run the full certification suite");
  add_run_options(sc_all, all_o);
  sc_all->add_flag("--extended", all_extended, "include the E8/P8 case at q=11");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (sc_roots->parsed()) return cmd_roots(roots_o);
    if (sc_tables->parsed()) return cmd_tables(tables_which, tables_n_max, tables_format);
    if (sc_ext->parsed()) return cmd_exterior(ext_o, ext_q, ext_twist);
    if (sc_coh->parsed()) return cmd_cohomology(coh_o, coh_lambda, coh_twist);
    if (sc_ver->parsed()) return cmd_verify(ver_o, ver_q, ver_q_max, ver_twist);
    if (sc_all->parsed()) return cmd_certify_all(all_o, all_extended);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DominanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
