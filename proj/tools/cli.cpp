#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "surftrace/crosscheck.hpp"
#include "surftrace/errors.hpp"
#include "surftrace/matchenum.hpp"
#include "surftrace/mixedrep.hpp"
#include "surftrace/montecarlo.hpp"
#include "surftrace/repdata.hpp"
#include "surftrace/surfacegeom.hpp"
#include "surftrace/weingarten.hpp"
#include "surftrace/wordintegral.hpp"
#include "surftrace/words.hpp"

namespace surftrace::cli {

using nlohmann::json;

namespace {

json ratfunc_json(const RatFuncN& f) {
  json j = json::parse(ratfunc_to_json(f));
  j["text"] = f.to_string();
  j["degree"] = degree_to_string(f.degree());
  return j;
}

json partition_json(const Partition& p) { return json(p); }

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

class Emitter {
 public:
  Emitter(std::ostream& out, const RunConfig& cfg) : out_(out), cfg_(cfg) {}

  // One document, or one CSV row with a header.
  void doc(json j) {
    stamp(j);
    if (cfg_.format == "csv") {
      row(j, true);
    } else {
      out_ << j.dump() << "\n";
    }
  }
  // A stream of records; the header is written once.
  void record(const json& j) {
    if (cfg_.format == "csv") {
      row(j, !header_done_);
      header_done_ = true;
    } else {
      out_ << j.dump() << "\n";
    }
  }

 private:
  void stamp(json& j) const {
    if (cfg_.reproducible) return;
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream ts;
    ts << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    j["timestamp"] = ts.str();
  }
  void row(const json& j, bool header) {
    if (header) {
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out_ << (first ? "" : ",") << it.key();
        first = false;
      }
      out_ << "\n";
    }
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out_ << (first ? "" : ",") << csv_cell(*it);
      first = false;
    }
    out_ << "\n";
  }

  std::ostream& out_;
  const RunConfig& cfg_;
  bool header_done_ = false;
};

int default_threads() {
  if (const char* env = std::getenv("SURFTRACE_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MatchOptions match_options(const RunConfig& cfg) {
  MatchOptions o;
  o.threads = cfg.threads > 0 ? cfg.threads : default_threads();
  o.unsafe = cfg.unsafe;
  o.allow_general_genus = cfg.general_genus;
  return o;
}

MixedLabel label_of(const RunConfig& cfg) {
  MixedLabel lab{parse_partition(cfg.mu), parse_partition(cfg.nu)};
  lab.validate();
  return lab;
}

Word word_of(const RunConfig& cfg) {
  if (cfg.g < 2) throw DomainError("genus must be at least 2");
  return parse_word(cfg.word, cfg.g);
}

void cmd_wg(const RunConfig& cfg, Emitter& em) {
  json j;
  j["k"] = cfg.k;
  if (!cfg.perm.empty()) {
    Permutation s = Permutation::parse_cycles(cfg.k, cfg.perm);
    RatFuncN c = wg_coeff(cfg.k, s);
    j["perm"] = s.cycle_notation();
    j["coeff"] = ratfunc_json(c);
  } else {
    json classes = json::array();
    for (const auto& ct : partitions_of(cfg.k)) {
      const RatFuncN& c = wg_class_coeff(cfg.k, ct);
      classes.push_back({{"cycle_type", partition_json(ct)}, {"coeff", ratfunc_json(c)}});
    }
    j["classes"] = classes;
  }
  em.doc(j);
}

void cmd_dims(const RunConfig& cfg, Emitter& em) {
  MixedLabel lab = label_of(cfg);
  PolyN p = dim_mixed_poly(lab);
  json j;
  j["label"] = lab.to_string();
  j["poly"] = p.to_string();
  j["degree"] = p.degree();
  json vals = json::object();
  for (long n : cfg.n_list) {
    if (n < lab.rows()) throw DomainError("n is smaller than rows(mu)+rows(nu)");
    vals[std::to_string(n)] = rat_to_string(p.eval(Rat(n)));
  }
  j["values"] = vals;
  em.doc(j);
}

void cmd_ztheta(const RunConfig& cfg, Emitter& em) {
  MixedLabel lab = label_of(cfg);
  ThetaData td = theta_data(lab);
  json j;
  j["label"] = lab.to_string();
  j["norm_sq"] = rat_to_string(td.norm_sq);
  json cs = json::array();
  for (const auto& [perm, c] : td.z.terms()) {
    int bound = -(lab.k() + lab.l()) - coset_norm(perm, lab.k(), lab.l());
    cs.push_back({{"perm", perm.cycle_notation()}, {"coeff", ratfunc_json(c)}, {"degree_bound", bound}});
  }
  j["coefficients"] = cs;
  em.doc(j);
}

void cmd_word_integral(const RunConfig& cfg, Emitter& em) {
  int r = cfg.r > 0 ? cfg.r : 2 * cfg.g;
  Word w = parse_free_word(cfg.word, r);
  WordIntegralResult res = haar_word_integral(r, w);
  json j;
  j["r"] = r;
  j["word"] = w.to_string();
  j["value"] = ratfunc_json(res.value);
  j["normalized"] = ratfunc_json(res.normalized);
  j["degree"] = degree_to_string(res.degree);
  em.doc(j);
}

void cmd_surface_trace(const RunConfig& cfg, Emitter& em) {
  Word w = word_of(cfg);
  MixedLabel lab = label_of(cfg);
  JResult jr = j_n(w, lab, cfg.star, match_options(cfg));
  json j;
  j["word"] = w.to_string();
  j["label"] = lab.to_string();
  j["star"] = cfg.star;
  j["j"] = ratfunc_json(jr.j);
  j["dj"] = ratfunc_json(jr.dj);
  j["match_count"] = jr.match_count;
  j["max_chi"] = jr.max_chi == kDegNegInf ? json(nullptr) : json(jr.max_chi);
  if (!cfg.n_list.empty()) {
    if (cfg.star) throw DomainError("--oracle-check compares the full sum; drop --star");
    json checks = json::array();
    bool all = true;
    for (long n : cfg.n_list) {
      Rat a = jr.j.eval(n);
      Rat b = crosscheck::j_oracle(w, lab, n);
      all = all && a == b;
      checks.push_back({{"n", n}, {"j", rat_to_string(a)}, {"oracle", rat_to_string(b)}, {"agree", a == b}});
    }
    j["oracle_check"] = checks;
    j["oracle_agree"] = all;
  }
  em.doc(j);
}

void cmd_chi_check(const RunConfig& cfg, Emitter& em, std::ostream& err) {
  Word w = word_of(cfg);
  ChiCheckOptions co;
  co.match = match_options(cfg);
  co.dump_dir = cfg.dump_dir;
  if (!cfg.summary_only) {
    co.on_record = [&](const ChiCheckRecord& r) {
      em.record({{"index", r.index}, {"chi", r.chi}, {"discs", r.discs}, {"boundary_powers", r.boundary_powers}});
    };
  }
  ChiCheckReport rep = chi_check(w, cfg.k, cfg.l, co);
  json j;
  j["word"] = w.to_string();
  j["k"] = cfg.k;
  j["l"] = cfg.l;
  j["max_chi"] = rep.max_chi;
  j["count"] = rep.count;
  j["chi_bound"] = -(cfg.k + cfg.l);
  j["chi_bound_violations"] = rep.chi_bound_violations;
  j["pieces"] = rep.pieces;
  j["piece_violations"] = rep.piece_violations;
  j["prepiece_census_violations"] = rep.prepiece_census_violations;
  j["shortest_word"] = is_shortest_conj_rep(w);
  for (const auto& d : rep.dumps) err << "counterexample: " << d << "\n";
  if (cfg.summary_only) {
    em.doc(j);
  } else {
    j["summary"] = true;
    em.record(j);
  }
}

void cmd_dehn(const RunConfig& cfg, Emitter& em) {
  Word w = word_of(cfg);
  Word d = dehn_shorten(w);
  Word c = shortest_conj_rep(w);
  json j;
  j["input"] = w.to_string();
  j["word"] = d.to_string();
  j["length"] = d.size();
  j["shortest"] = is_shortest_conj_rep(d);
  j["conjugacy_rep"] = c.to_string();
  j["conjugacy_rep_length"] = c.size();
  em.doc(j);
}

void cmd_zeta(const RunConfig& cfg, Emitter& em) {
  Rat v = witten_zeta_truncated(cfg.s, cfg.n, cfg.max_boxes);
  json j;
  j["s"] = cfg.s;
  j["n"] = cfg.n;
  j["max_boxes"] = cfg.max_boxes;
  j["value"] = rat_to_string(v);
  j["value_float"] = v.get_d();
  em.doc(j);
}

void cmd_mc(const RunConfig& cfg, Emitter& em) {
  int threads = match_options(cfg).threads;
  json j;
  McEstimate est;
  if (cfg.mu.empty() && cfg.nu.empty()) {
    int r = cfg.r > 0 ? cfg.r : 2 * cfg.g;
    Word w = parse_free_word(cfg.word, r);
    est = mc_word_trace(r, w, static_cast<int>(cfg.n), cfg.samples, cfg.seed, threads);
    j["word"] = w.to_string();
  } else {
    Word w = word_of(cfg);
    MixedLabel lab = label_of(cfg);
    est = mc_j(w, lab, static_cast<int>(cfg.n), cfg.samples, cfg.seed, threads);
    j["word"] = w.to_string();
    j["label"] = lab.to_string();
  }
  j["n"] = cfg.n;
  j["seed"] = cfg.seed;
  j["mean_re"] = est.mean.real();
  j["mean_im"] = est.mean.imag();
  j["std_error"] = est.std_error;
  j["samples"] = est.samples;
  em.doc(j);
}

void cmd_expected_trace(const RunConfig& cfg, Emitter& em) {
  Word w = word_of(cfg);
  Rat v = assemble_expected_trace(w, cfg.max_boxes, cfg.n, match_options(cfg));
  json j;
  j["heuristic"] = "finite label set and zeta truncated at max_boxes; the error term is not computed";
  j["word"] = w.to_string();
  j["max_boxes"] = cfg.max_boxes;
  j["n"] = cfg.n;
  j["value"] = rat_to_string(v);
  j["value_float"] = v.get_d();
  em.doc(j);
}

}  // namespace

Partition parse_partition(const std::string& text) {
  Partition p;
  std::string cur;
  for (char c : text + ",") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c == ',' || c == ' ' || c == ']' || c == ')') {
      if (!cur.empty()) p.push_back(std::stoi(cur));
      cur.clear();
    } else if (c != '[' && c != '(') {
      throw DomainError("bad partition '" + text + "'");
    }
  }
  check_partition(p);
  return p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact and Monte Carlo traces of surface-group words in random unitary representations"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML file with the same keys as the flags; flags win");
  app.option_defaults()->always_capture_default();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads (default: SURFTRACE_THREADS or all cores)");
    sub->add_flag("--unsafe", cfg.unsafe, "lift enumeration guards");
    sub->add_flag("--reproducible", cfg.reproducible, "omit the timestamp field");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--g", cfg.g, "genus");
    sub->add_flag("--general-genus", cfg.general_genus, "allow g != 2 in the matching pipeline");
  };
  auto label_opts = [&](CLI::App* sub) {
    sub->add_option("--mu", cfg.mu, "partition, e.g. 2,1");
    sub->add_option("--nu", cfg.nu, "partition, e.g. 1");
  };

  auto* wg = app.add_subcommand("wg", "Weingarten function class values");
  common(wg);
  wg->add_option("--k", cfg.k)->required();
  wg->add_option("--perm", cfg.perm, "single permutation in cycle notation");

  auto* dims = app.add_subcommand("dims", "dimension polynomial of a mixed irrep");
  common(dims);
  label_opts(dims);
  dims->add_option("--n", cfg.n_list, "evaluation points")->delimiter(',');

  auto* zt = app.add_subcommand("ztheta", "projection coefficients z_theta");
  common(zt);
  label_opts(zt);

  auto* wi = app.add_subcommand("word-integral", "exact Haar integral of tr(w)");
  common(wi);
  wi->add_option("--r", cfg.r, "rank of the free group");
  wi->add_option("--word", cfg.word)->required();
  bool json_flag = false;
  wi->add_flag("--json", json_flag, "JSON output (the default)");

  auto* st = app.add_subcommand("surface-trace", "J_n(w, [mu,nu]) by the combinatorial formula");
  common(st);
  label_opts(st);
  st->add_option("--word", cfg.word)->required();
  st->add_flag("--star", cfg.star, "restrict to MATCH*");
  st->add_option("--oracle-check", cfg.n_list, "compare with the fixed-n oracle at these n")->delimiter(',');

  auto* cc = app.add_subcommand("chi-check", "Euler characteristics and pieces over MATCH*");
  common(cc);
  cc->add_option("--word", cfg.word)->required();
  cc->add_option("--k", cfg.k);
  cc->add_option("--l", cfg.l);
  cc->add_option("--dump-dir", cfg.dump_dir, "write counterexamples here");
  cc->add_flag("--summary-only", cfg.summary_only, "print only the summary document");

  auto* dehn = app.add_subcommand("dehn", "Dehn shortening in the surface group");
  common(dehn);
  dehn->add_option("--word", cfg.word)->required();

  auto* zeta = app.add_subcommand("zeta", "truncated Witten zeta function");
  common(zeta);
  zeta->add_option("--s", cfg.s);
  zeta->add_option("--n", cfg.n);
  zeta->add_option("--max-boxes", cfg.max_boxes);

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of tr(w) or of J_n");
  common(mc);
  label_opts(mc);
  mc->add_option("--word", cfg.word)->required();
  mc->add_option("--r", cfg.r, "rank for plain word traces");
  mc->add_option("--n", cfg.n);
  mc->add_option("--samples", cfg.samples);
  mc->add_option("--seed", cfg.seed);

  auto* et = app.add_subcommand("expected-trace", "heuristic assembly of the expected trace");
  common(et);
  et->add_option("--word", cfg.word)->required();
  et->add_option("--max-boxes", cfg.max_boxes);
  et->add_option("--n", cfg.n);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Emitter em(out, cfg);
  try {
    if (*wg) cmd_wg(cfg, em);
    else if (*dims) cmd_dims(cfg, em);
    else if (*zt) cmd_ztheta(cfg, em);
    else if (*wi) cmd_word_integral(cfg, em);
    else if (*st) cmd_surface_trace(cfg, em);
    else if (*cc) cmd_chi_check(cfg, em, err);
    else if (*dehn) cmd_dehn(cfg, em);
    else if (*zeta) cmd_zeta(cfg, em);
    else if (*mc) cmd_mc(cfg, em);
    else if (*et) cmd_expected_trace(cfg, em);
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << " (pass --unsafe to override)\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace surftrace::cli
