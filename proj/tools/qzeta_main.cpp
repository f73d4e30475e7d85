// qzeta: exact q-series computations from the command line.
//
// Subcommands: compute (graph-series, qmzv, lie-qzeta, ct, char, recognize),
// verify, probe, census.  Global flags --order/--margin/--format/--threads
// may be given before or after the subcommand.  All series output is exact;
// JSON output has a stable key order so identical inputs produce identical
// bytes.

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qzeta/checks.hpp"
#include "qzeta/elliptic.hpp"
#include "qzeta/graph.hpp"
#include "qzeta/graph_series.hpp"
#include "qzeta/modular.hpp"
#include "qzeta/qmzv.hpp"
#include "qzeta/qseries.hpp"
#include "qzeta/series_json.hpp"
#include "qzeta/vertexchar.hpp"

using nlohmann::ordered_json;
using namespace qzeta;

namespace {

struct GlobalOpts {
  long order = 40;
  long margin = 10;
  long threads = 1;
  std::string format = "plain";
  bool json_flag = false;

  bool json() const { return json_flag || format == "json"; }
};

void print_series_plain(const QSeries& s) {
  std::cout << "# known below q^" << rat_str(s.bound()) << "\n";
  if (s.is_zero()) {
    std::cout << "0\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  std::size_t w = 0;
  for (long i = 0; i <= s.order(); ++i) {
    Rat e = s.offset() + Rat(i, s.scale());
    rows.emplace_back(rat_str(e), rat_str(s.coeffs()[static_cast<std::size_t>(i)]));
    w = std::max(w, rows.back().first.size());
  }
  for (auto& [e, c] : rows)
    std::cout << "q^" << e << std::string(w - e.size() + 2, ' ') << c << "\n";
}

void emit_series(const GlobalOpts& g, const std::string& object, ordered_json params,
                 const QSeries& s, ordered_json extra = ordered_json::object()) {
  if (g.json()) {
    ordered_json j;
    j["object"] = object;
    j["params"] = std::move(params);
    for (auto& [k, v] : extra.items()) j[k] = v;
    j["series"] = series_to_json(s);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# " << object;
    for (auto& [k, v] : params.items()) std::cout << " " << k << "=" << v.dump();
    std::cout << "\n";
    for (auto& [k, v] : extra.items()) std::cout << "# " << k << " = " << v.dump() << "\n";
    print_series_plain(s);
  }
}

ordered_json recognition_json(const Recognition& rec,
                              const std::vector<WeightedGenerator>& gens) {
  ordered_json j;
  j["found"] = rec.found;
  if (rec.found) {
    ordered_json ms = ordered_json::array();
    for (const auto& [exps, c] : rec.monomials) {
      ordered_json m;
      m["monomial"] = monomial_label(gens, exps);
      m["coefficient"] = rat_str(c);
      ms.push_back(std::move(m));
    }
    j["combination"] = std::move(ms);
  }
  j["fitted_rows"] = rec.fitted_up_to;
  j["verified_rows"] = rec.verified_through;
  return j;
}

void print_recognition_plain(const Recognition& rec,
                             const std::vector<WeightedGenerator>& gens) {
  if (!rec.found) {
    std::cout << "no certificate (fitted " << rec.fitted_up_to << ", verified "
              << rec.verified_through << " rows)\n";
    return;
  }
  std::cout << "certificate:";
  bool first = true;
  for (const auto& [exps, c] : rec.monomials) {
    std::cout << (first ? " " : " + ") << "(" << rat_str(c) << ") " << monomial_label(gens, exps);
    first = false;
  }
  std::cout << "\n  fitted on " << rec.fitted_up_to << " rows, verified on "
            << (rec.verified_through - rec.fitted_up_to) << " more\n";
}

std::vector<long> default_framing(const Graph& g) {
  return std::vector<long>(static_cast<std::size_t>(g.n()), 1);
}

Graph load_graph(const std::string& arg) {
  std::ifstream in(arg);
  if (in.good()) {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_spec(buf.str());
  }
  return parse_graph_spec(arg);
}

int run_verify(const GlobalOpts& g, const std::string& suite, long kmax) {
  CheckOptions opts{g.order, kmax};
  std::vector<CheckResult> results;
  if (suite == "graphs")
    results = check_graph_identities(opts);
  else if (suite == "zeta")
    results = check_zeta_identities(opts);
  else if (suite == "characters")
    results = check_character_identities(opts);
  else if (suite == "all")
    results = check_all(opts);
  else
    throw CLI::ValidationError("verify", "unknown suite: " + suite);

  long failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;

  if (g.json()) {
    ordered_json j;
    j["suite"] = suite;
    j["order"] = g.order;
    j["kmax"] = kmax;
    ordered_json rows = ordered_json::array();
    for (const auto& r : results) {
      ordered_json row;
      row["id"] = r.id;
      row["statement"] = r.statement;
      row["pass"] = r.pass;
      if (!r.detail.empty()) row["detail"] = r.detail;
      rows.push_back(std::move(row));
    }
    j["checks"] = std::move(rows);
    j["passed"] = static_cast<long>(results.size()) - failed;
    j["failed"] = failed;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ": " << r.statement;
      if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
      std::cout << "\n";
    }
    std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
              << " identities hold at order " << g.order << "\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series engine: graph series, multiple q-zeta values, "
               "quasi-modular recognition, vertex algebra characters"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--order", g.order, "truncation order")->check(CLI::PositiveNumber);
  app.add_option("--margin", g.margin, "verification rows the recognizer must keep")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", g.threads, "worker count for the census")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));
  app.add_flag("--json", g.json_flag, "shorthand for --format json");

  int retcode = 0;

  auto* compute = app.add_subcommand("compute", "build one object and print its series");
  compute->require_subcommand(1);
  compute->fallthrough();

  // compute graph-series
  std::string graph_arg;
  std::vector<long> framing;
  auto* gs = compute->add_subcommand("graph-series", "graph series H_Gamma(q)");
  gs->fallthrough();
  gs->add_option("--graph", graph_arg, "graph spec (gamma:k, T:k, Z:a1,a2, cycle:n, path:n, "
                                       "star:legs, pt, '+' unions, JSON, or a file)")
      ->required();
  gs->add_option("--framing", framing, "one positive entry per vertex")->delimiter(',');
  gs->callback([&] {
    Graph gr = load_graph(graph_arg);
    std::vector<long> b = framing.empty() ? default_framing(gr) : framing;
    QSeries s = graph_series(gr, b, g.order);
    ordered_json params;
    params["graph"] = graph_arg;
    params["framing"] = b;
    params["order"] = g.order;
    emit_series(g, "graph-series", std::move(params), s);
  });

  // compute qmzv
  std::string model = "star";
  std::vector<long> comp;
  auto* qm = compute->add_subcommand("qmzv", "multiple q-zeta value");
  qm->fallthrough();
  qm->add_option("--model", model, "star, strict, or standard")
      ->check(CLI::IsMember({"star", "strict", "standard"}));
  qm->add_option("--a", comp, "composition a1,a2,...")->required()->delimiter(',');
  qm->callback([&] {
    QSeries s = model == "star"     ? zq_star(comp, g.order)
                : model == "strict" ? zq_strict(comp, g.order)
                                    : zq_standard(comp, g.order);
    ordered_json params;
    params["model"] = model;
    params["a"] = comp;
    params["order"] = g.order;
    emit_series(g, "qmzv", std::move(params), s);
  });

  // compute lie-qzeta
  long rank = 1;
  std::vector<long> kvec;
  long s_exp = -1, k_exp = -1;
  std::vector<long> sym_kvals;
  auto* lz = compute->add_subcommand("lie-qzeta", "Lie algebra q-zeta value for sl(rank+1)");
  lz->fallthrough();
  lz->add_option("--rank", rank, "rank of the type A root system")->required();
  auto* o_kvec = lz->add_option("--kvec", kvec, "one exponent per positive root")->delimiter(',');
  auto* o_s = lz->add_option("--s", s_exp, "dimension-factor power");
  auto* o_k = lz->add_option("--k", k_exp, "uniform root exponent");
  auto* o_sym = lz->add_option("--symmetrized", sym_kvals, "exponents summed over all "
                                                           "assignments to the positive roots")
                    ->delimiter(',');
  o_s->needs(o_k);
  o_kvec->excludes(o_s)->excludes(o_sym);
  o_sym->excludes(o_s);
  lz->callback([&] {
    RootSystemA roots = RootSystemA::make(rank);
    QSeries s;
    ordered_json params;
    params["rank"] = rank;
    if (!kvec.empty()) {
      s = zeta_g(roots, kvec, g.order);
      params["kvec"] = kvec;
    } else if (!sym_kvals.empty()) {
      s = symmetrized_sum(roots, sym_kvals, g.order);
      params["symmetrized"] = sym_kvals;
    } else if (s_exp >= 0) {
      s = zeta_g_s(roots, s_exp, k_exp, g.order);
      params["s"] = s_exp;
      params["k"] = k_exp;
    } else {
      throw CLI::ValidationError("lie-qzeta", "need --kvec, --symmetrized, or --s with --k");
    }
    params["order"] = g.order;
    emit_series(g, "lie-qzeta", std::move(params), s);
  });

  // compute ct
  std::vector<long> blocks;
  long wp_pow = 0, wpp_pow = 0;
  auto* ct = compute->add_subcommand("ct", "zeta-constant term of a product of two-variable "
                                           "expansions");
  ct->fallthrough();
  ct->add_option("--blocks", blocks, "propagator block orders k1,k2,...")->delimiter(',');
  ct->add_option("--wp", wp_pow, "number of Weierstrass factors");
  ct->add_option("--wp-prime", wpp_pow, "number of Weierstrass derivative factors");
  ct->callback([&] {
    std::vector<ZetaSeries> factors;
    for (long b : blocks) factors.push_back(q_block(b, g.order));
    for (long i = 0; i < wp_pow; ++i) factors.push_back(weierstrass_p(g.order));
    for (long i = 0; i < wpp_pow; ++i) factors.push_back(weierstrass_p_prime(g.order));
    if (factors.empty())
      throw CLI::ValidationError("ct", "need at least one factor (--blocks, --wp, --wp-prime)");
    QSeries s = ct_product(factors, Rat(g.order));
    ordered_json params;
    params["blocks"] = blocks;
    params["wp"] = wp_pow;
    params["wp_prime"] = wpp_pow;
    params["order"] = g.order;
    emit_series(g, "ct", std::move(params), s);
  });

  // compute char {arakawa, sch-u}
  auto* ch = compute->add_subcommand("char", "vertex algebra characters");
  ch->require_subcommand(1);
  ch->fallthrough();

  std::string lie_type = "A";
  long ar_rank = 1, ar_k = 4;
  auto* ar = ch->add_subcommand("arakawa", "level-k character for sl(rank+1)");
  ar->fallthrough();
  ar->add_option("--type", lie_type, "root system type (only A)")
      ->check(CLI::IsMember({"A"}));
  ar->add_option("--rank", ar_rank, "rank of the type A root system")->required();
  ar->add_option("--k", ar_k, "level, k >= 3")->required();
  ar->callback([&] {
    CharacterResult c = arakawa_char(ar_rank, ar_k, g.order);
    ordered_json params;
    params["type"] = lie_type;
    params["rank"] = ar_rank;
    params["k"] = ar_k;
    params["order"] = g.order;
    ordered_json extra;
    extra["eta_power"] = c.eta_power;
    emit_series(g, "char-arakawa", std::move(params), c.series, std::move(extra));
  });

  long sch_m = 3;
  bool sch_recognize = false;
  auto* su = ch->add_subcommand("sch-u", "supercharacter of the U^(m) algebra");
  su->fallthrough();
  su->add_option("--m", sch_m, "odd m >= 3")->required();
  su->add_flag("--recognize", sch_recognize, "also certify the eta-stripped series in the "
                                             "level-m quasi-modular ring");
  su->callback([&] {
    CharacterResult c = sch_u(sch_m, g.order);
    ordered_json params;
    params["m"] = sch_m;
    params["order"] = g.order;
    ordered_json extra;
    extra["eta_power"] = c.eta_power;
    extra["level"] = c.level;
    std::optional<Recognition> rec;
    std::vector<WeightedGenerator> gens;
    if (sch_recognize) {
      rec = fm_recognize(sch_m, g.order, g.margin);
      gens = qm_generators(sch_m, 8);
      if (g.json()) extra["recognition"] = recognition_json(*rec, gens);
    }
    emit_series(g, "char-sch-u", std::move(params), c.series, std::move(extra));
    if (rec && !g.json()) print_recognition_plain(*rec, gens);
  });

  // compute recognize
  std::string target_arg;
  long rec_level = 1, rec_wmin = 0, rec_wmax = -1;
  auto* rz = compute->add_subcommand("recognize", "certify a series as a quasi-modular "
                                                  "combination");
  rz->fallthrough();
  rz->add_option("--target", target_arg, "series JSON file, or - for stdin")->required();
  rz->add_option("--level", rec_level, "generator ring level")->check(CLI::PositiveNumber);
  rz->add_option("--wmin", rec_wmin, "minimum total weight");
  rz->add_option("--wmax", rec_wmax, "maximum total weight")->required();
  rz->callback([&] {
    std::string text;
    if (target_arg == "-") {
      std::stringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream in(target_arg);
      if (!in.good()) throw CLI::ValidationError("recognize", "cannot read " + target_arg);
      std::stringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    QSeries target = series_from_json(nlohmann::json::parse(text));
    long gen_order = to_long(rat_ceil(target.bound()));
    auto gens = qm_generators(rec_level, gen_order);
    Recognition rec = recognize(target, gens, rec_wmin, rec_wmax, g.margin);
    if (g.json()) {
      ordered_json j;
      j["object"] = "recognize";
      ordered_json params;
      params["level"] = rec_level;
      params["wmin"] = rec_wmin;
      params["wmax"] = rec_wmax;
      params["margin"] = g.margin;
      j["params"] = std::move(params);
      j["result"] = recognition_json(rec, gens);
      std::cout << j.dump(2) << "\n";
    } else {
      print_recognition_plain(rec, gens);
    }
    if (!rec.found) retcode = 1;
  });

  // verify
  std::string suite;
  long kmax = 4;
  auto* ver = app.add_subcommand("verify", "run an identity suite; nonzero exit on failure");
  ver->fallthrough();
  ver->add_option("suite", suite, "graphs, zeta, characters, or all")
      ->required()
      ->check(CLI::IsMember({"graphs", "zeta", "characters", "all"}));
  ver->add_option("--kmax", kmax, "family depth")->check(CLI::PositiveNumber);
  ver->callback([&] { retcode = run_verify(g, suite, kmax); });

  // probe
  std::string probe_name;
  long probe_rank = 1;
  long probe_k = -1;
  std::vector<long> probe_kvals;
  auto* pr = app.add_subcommand("probe", "quasi-modularity experiment; reported, never "
                                         "asserted");
  pr->fallthrough();
  pr->add_option("name", probe_name, "arakawa-qm, zeta-g-even, or symmetrized")->required();
  pr->add_option("--rank", probe_rank, "rank of the type A root system");
  pr->add_option("--k", probe_k, "single parameter (level or broadcast exponent)");
  pr->add_option("--kvals", probe_kvals, "explicit parameter list")->delimiter(',');
  pr->callback([&] {
    std::vector<long> params = probe_kvals;
    if (params.empty() && probe_k >= 0) params = {probe_k};
    if (params.empty())
      throw CLI::ValidationError("probe", "need --k or --kvals");
    ProbeReport rep = conjecture_probe(probe_name, probe_rank, params, g.order, g.margin);
    if (g.json()) {
      ordered_json j;
      j["probe"] = rep.name;
      j["rank"] = rep.rank;
      j["params"] = rep.params;
      j["order"] = g.order;
      j["found"] = rep.found;
      if (!rep.comment.empty()) j["comment"] = rep.comment;
      if (rep.recognition) {
        ordered_json ms = ordered_json::array();
        for (std::size_t i = 0; i < rep.recognition->monomials.size(); ++i) {
          ordered_json m;
          m["monomial"] = i < rep.labels.size() ? rep.labels[i] : std::string{};
          m["coefficient"] = rat_str(rep.recognition->monomials[i].second);
          ms.push_back(std::move(m));
        }
        j["combination"] = std::move(ms);
        j["fitted_rows"] = rep.recognition->fitted_up_to;
        j["verified_rows"] = rep.recognition->verified_through;
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << rep.name << " rank " << rep.rank << " params";
      for (long p : rep.params) std::cout << " " << p;
      std::cout << ": " << (rep.found ? "found" : "not found") << "\n";
      if (!rep.comment.empty()) std::cout << "  " << rep.comment << "\n";
      if (rep.found && rep.recognition) {
        bool first = true;
        std::cout << "  ";
        for (std::size_t i = 0; i < rep.recognition->monomials.size(); ++i) {
          std::cout << (first ? "" : " + ") << "("
                    << rat_str(rep.recognition->monomials[i].second) << ") "
                    << (i < rep.labels.size() ? rep.labels[i] : std::string{});
          first = false;
        }
        std::cout << "\n";
      }
    }
  });

  // census
  long nmax = 6;
  auto* ce = app.add_subcommand("census", "distinct graph series on up to nmax vertices");
  ce->fallthrough();
  ce->add_option("--nmax", nmax, "largest vertex count (<= 6)")->required();
  ce->callback([&] {
    auto rows = census(nmax, g.order, g.threads);
    if (g.json()) {
      ordered_json j;
      j["object"] = "census";
      j["order"] = g.order;
      ordered_json rs = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json row;
        row["vertices"] = r.vertices;
        row["graph_classes"] = r.graph_classes;
        row["distinct_series"] = r.distinct_series;
        rs.push_back(std::move(row));
      }
      j["rows"] = std::move(rs);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "vertices  classes  distinct-series  (order " << g.order << ")\n";
      for (const auto& r : rows)
        std::cout << r.vertices << "         " << r.graph_classes << "        "
                  << r.distinct_series << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return retcode;
}
