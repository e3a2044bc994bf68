// lvlab: command-line front end for the exact-arithmetic verification library.
//
// Every subcommand writes its result to an output file (JSON by default),
// echoes it to stdout, and drops a `<output>.manifest.json` next to it with
// the command line, seed, version, timestamps, and a SHA-256 of the output.
// `lvlab replay <manifest>` reruns the recorded command and checks that the
// digest matches bit for bit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sha256.hpp"

#include "lv/affq.hpp"
#include "lv/csv.hpp"
#include "lv/errors.hpp"
#include "lv/finite_field.hpp"
#include "lv/flatseries.hpp"
#include "lv/frobcount.hpp"
#include "lv/hodge.hpp"
#include "lv/rootfilt.hpp"
#include "lv/semilinear.hpp"
#include "lv/symplectic.hpp"

namespace {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

constexpr const char* kVersion = "0.1.0";

std::string iso_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lv::DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw lv::DomainError("cannot write file: " + path);
  out << content;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

lv::RootType parse_root_type(const std::string& s, int* rank) {
  if (s.size() < 2) throw lv::DomainError("root type must look like A3, C2, ...");
  *rank = std::stoi(s.substr(1));
  switch (s[0]) {
    case 'A': return lv::RootType::A;
    case 'B': return lv::RootType::B;
    case 'C': return lv::RootType::C;
    case 'D': return lv::RootType::D;
    default: throw lv::DomainError("unknown root type letter: " + s.substr(0, 1));
  }
}

// Options shared by every computing subcommand.
struct CommonOpts {
  std::string out;        // output path; empty -> "<command>.<ext>"
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts* c, bool with_format = false) {
  cmd->add_option("--out", c->out, "output file path");
  if (with_format)
    cmd->add_option("--format", c->format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

struct Emitted {
  std::string path;
  std::string digest;
};

// Writes the output and its manifest; echoes the output to stdout.
Emitted emit(const std::string& command, const std::vector<std::string>& flags,
             std::optional<uint64_t> seed, const CommonOpts& common,
             const std::string& content) {
  const std::string ext = common.format == "csv" ? ".csv" : ".json";
  const std::string path = common.out.empty() ? command + ext : common.out;
  const std::string started = iso_now();
  write_file(path, content);
  Json manifest;
  manifest["command"] = command;
  manifest["flags"] = flags;
  if (seed)
    manifest["seed"] = *seed;
  else
    manifest["seed"] = nullptr;
  manifest["version"] = kVersion;
  manifest["started"] = started;
  manifest["finished"] = iso_now();
  manifest["output"] = path;
  manifest["digest"] = lv::sha256_hex(content);
  write_file(path + ".manifest.json", manifest.dump(2) + "\n");
  std::cout << content;
  return {path, manifest["digest"].get<std::string>()};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the serialized output content.

std::string run_hodge_scan(int n_min, int n_max, int d_max, int persistence, int jobs,
                           bool alt_moduli, const std::string& format) {
  const auto res = lv::scan_n0(n_min, n_max, d_max, persistence, jobs, alt_moduli);
  if (format == "csv") {
    std::ostringstream out;
    out << "n,has_hit,first_d,probes\n";
    for (const auto& row : res.rows) {
      out << row.n << "," << (row.has_hit ? 1 : 0) << "," << row.first_d << ",";
      for (size_t i = 0; i < row.probe_d.size(); ++i) {
        if (i) out << ";";
        out << row.probe_d[i] << ":" << (row.probe_strong[i] ? 1 : 0);
      }
      out << "\n";
    }
    return out.str();
  }
  Json j;
  j["found"] = res.found;
  j["minimal_n"] = res.minimal_n;
  j["rows"] = Json::array();
  for (const auto& row : res.rows) {
    Json r;
    r["n"] = row.n;
    r["has_hit"] = row.has_hit;
    r["first_d"] = row.first_d;
    r["probes"] = Json::array();
    for (size_t i = 0; i < row.probe_d.size(); ++i)
      r["probes"].push_back({{"d", row.probe_d[i]}, {"strong", bool(row.probe_strong[i])}});
    j["rows"].push_back(r);
  }
  return dump(j);
}

std::string run_kp_params(int g, int deg_k, int c, const std::vector<uint64_t>& forbidden) {
  const auto params = lv::find_kp_prime(g, deg_k, c, forbidden);
  const auto bound = lv::kp_size_bound(g, params.q, c);
  const uint64_t residue = lv::find_place_residue(params.q, c, deg_k);
  Json j;
  j["g"] = g;
  j["deg_k"] = deg_k;
  j["orbit_const"] = c;
  j["forbidden"] = forbidden;
  j["q"] = std::to_string(params.q);
  j["bound"] = lv::rat_str(bound.bound);
  j["target"] = lv::rat_str(bound.target);
  j["bound_ok"] = bound.ok;
  j["place_residue"] = std::to_string(residue);
  return dump(j);
}

std::string run_com_fibers(uint32_t q, int s) {
  const auto census = lv::com_fiber_census(q, s);
  Json j;
  j["q"] = q;
  j["s"] = s;
  j["expected_fiber"] = lv::int_str(census.expected_fiber);
  j["fiber_count"] = census.fibers.size();
  j["fibers_uniform"] = census.fibers_uniform;
  j["image_is_generating_tuples"] = census.image_is_generating_tuples;
  Json sizes = Json::object();
  for (const auto& [key, n] : census.fibers) {
    std::string name;
    for (size_t i = 0; i < key.size(); ++i) {
      if (i) name += ",";
      name += std::to_string(key[i]);
    }
    sizes[name] = n;
  }
  j["fiber_sizes"] = sizes;
  return dump(j);
}

std::string run_centralizer(uint32_t p, uint32_t e, int dim, int trials, uint64_t seed) {
  lv::FiniteField field(p, e);
  lv::Rng rng(seed);
  std::map<int, int> histogram;
  bool all_equal = true, all_within = true;
  for (int t = 0; t < trials; ++t) {
    const auto m = lv::random_semilinear_module(field, dim, rng);
    const auto rep = lv::verify_centralizer_lemma(m);  // throws on violation
    ++histogram[rep.dim_F];
    all_equal = all_equal && rep.equal;
    all_within = all_within && rep.within_bound;
  }
  Json j;
  j["p"] = p;
  j["e"] = e;
  j["dim"] = dim;
  j["trials"] = trials;
  j["seed"] = seed;
  j["all_equal"] = all_equal;
  j["all_within_bound"] = all_within;
  Json hist = Json::object();
  for (const auto& [dimf, count] : histogram) hist[std::to_string(dimf)] = count;
  j["dim_f_histogram"] = hist;
  return dump(j);
}

std::string run_transvect_cert(const std::string& vectors_path) {
  const auto rows = lv::read_rational_csv_file(vectors_path);
  if (rows.empty()) throw lv::DomainError("no vectors in " + vectors_path);
  const int cols = static_cast<int>(rows[0].size());
  if (cols == 0 || cols % 2 != 0)
    throw lv::DomainError("vectors must have even positive length");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != cols) throw lv::DomainError("ragged vector rows");
  const int d = cols / 2;
  lv::RationalField qf;
  const auto cert = lv::transvection_graph_certificate(qf, d, rows);
  Json j;
  j["d"] = d;
  j["count"] = rows.size();
  j["connected"] = cert.connected;
  j["span_dim"] = cert.span_dim;
  j["full"] = cert.full;
  j["components"] = cert.component;
  return dump(j);
}

std::string run_bad_lagrangian(const std::string& tuple_path, uint32_t p, uint32_t e) {
  const Json in = Json::parse(read_file(tuple_path));
  const int d = in.at("d").get<int>();
  const auto& lags = in.at("lagrangians");

  Json j;
  j["d"] = d;
  if (p == 0) {
    lv::LagrangianTuple<lv::RationalField> tuple;
    for (const auto& lag : lags) {
      std::vector<std::vector<lv::Rat>> basis;
      for (const auto& row : lag) {
        std::vector<lv::Rat> v;
        for (const auto& entry : row) v.push_back(lv::parse_rat(entry.get<std::string>()));
        basis.push_back(v);
      }
      tuple.push_back(basis);
    }
    const auto witness = lv::bad_lagrangian_search_q(d, tuple);
    j["field"] = "Q";
    j["found"] = witness.has_value();
    if (witness) {
      Json w = Json::array();
      for (const auto& row : *witness) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(lv::rat_str(x));
        w.push_back(r);
      }
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
  } else {
    lv::FiniteField k(p, e);
    lv::LagrangianTuple<lv::FiniteField> tuple;
    for (const auto& lag : lags) {
      std::vector<std::vector<lv::FiniteField::Elem>> basis;
      for (const auto& row : lag) {
        std::vector<lv::FiniteField::Elem> v;
        for (const auto& entry : row)
          v.push_back(k.from_index(std::stoull(entry.get<std::string>())));
        basis.push_back(v);
      }
      tuple.push_back(basis);
    }
    const auto witness = lv::bad_lagrangian_search_ff(k, d, tuple);
    j["field"] = "F_" + std::to_string(k.order());
    j["found"] = witness.has_value();
    if (witness) {
      Json w = Json::array();
      for (const auto& row : *witness) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(std::to_string(k.index(x)));
        w.push_back(r);
      }
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
  }
  return dump(j);
}

std::string run_frob_bound(uint64_t q, int n, const std::string& b_str) {
  lv::CountBoundInput in;
  in.q = q;
  in.n = n;
  in.b = lv::Int(b_str);
  const auto cb = lv::centralizer_bound(in);
  Json j;
  j["N"] = cb.N;
  j["bound"] = lv::rat_str(cb.bound);
  j["vacuous"] = cb.vacuous;
  return dump(j);
}

std::string run_wpq(const std::string& type_str, const std::string& dp_str,
                    const std::string& dq_str, const std::string& mu_str,
                    const std::string& format) {
  int rank = 0;
  const auto type = parse_root_type(type_str, &rank);
  const auto datum = lv::RootDatum::build(type, rank);
  const auto wg = lv::WeylGroup::build(datum);
  std::vector<int> dp;
  for (int i : parse_int_list(dp_str)) dp.push_back(i - 1);  // CLI is 1-based
  const auto mu = parse_int_list(mu_str);
  const auto pair = lv::ParabolicPair::build(datum, dp, mu);
  if (!dq_str.empty()) {
    std::vector<int> dq;
    for (int i : parse_int_list(dq_str)) dq.push_back(i - 1);
    std::sort(dq.begin(), dq.end());
    if (dq != pair.delta_q)
      throw lv::DomainError("--dq disagrees with the set derived from --mu");
  }
  const auto elems = lv::wpq_enumerate(wg, pair);
  const int cosets = lv::double_coset_count(wg, pair);

  if (format == "csv") {
    std::ostringstream out;
    out << "index,length,codim,bad_aggregate\n";
    for (int idx : elems) {
      out << idx << "," << lv::weyl_length(datum, wg.elements[idx]) << ","
          << lv::fiber_codim(wg, idx, pair) << ","
          << (lv::is_bad(wg, idx, pair, lv::BadMode::Aggregate) ? 1 : 0) << "\n";
    }
    return out.str();
  }
  Json j;
  j["type"] = type_str;
  j["delta_p"] = parse_int_list(dp_str);
  j["mu"] = mu;
  j["dim_gq"] = lv::dim_gq(pair);
  j["wpq_count"] = elems.size();
  j["double_cosets"] = cosets;
  j["match"] = static_cast<int>(elems.size()) == cosets;
  j["elements"] = Json::array();
  for (int idx : elems) {
    Json el;
    el["index"] = idx;
    el["length"] = lv::weyl_length(datum, wg.elements[idx]);
    el["codim"] = lv::fiber_codim(wg, idx, pair);
    el["bad_aggregate"] = lv::is_bad(wg, idx, pair, lv::BadMode::Aggregate);
    j["elements"].push_back(el);
  }
  return dump(j);
}

std::string run_lw2_sweep(const std::string& type_str, int mu_bound, int e) {
  int rank = 0;
  const auto type = parse_root_type(type_str, &rank);
  const auto datum = lv::RootDatum::build(type, rank);
  const auto summary = lv::lw2_harness(datum, mu_bound, e);
  Json j;
  j["type"] = type_str;
  j["mu_bound"] = mu_bound;
  j["e"] = e;
  j["configurations"] = summary.configurations;
  j["hypothesis_holds"] = summary.hypothesis_holds;
  j["hypothesis_fails"] = summary.hypothesis_fails;
  j["counterexamples"] = Json::array();
  for (const auto& cx : summary.counterexamples) {
    Json c;
    c["delta_p"] = cx.delta_p;
    c["mu"] = cx.mu;
    c["w_index"] = cx.w_index;
    c["codim"] = cx.codim;
    j["counterexamples"].push_back(c);
  }
  return dump(j);
}

std::string run_linalg_census(uint32_t q, int d, const std::string& phi_path,
                              const std::string& flag_type_str) {
  lv::FiniteField k(q, 1);
  const auto rows = lv::read_rational_csv_file(phi_path);
  if (static_cast<int>(rows.size()) != 2 * d)
    throw lv::DomainError("phi matrix must be 2d x 2d");
  lv::Mat<lv::FiniteField> phi(k, 2 * d, 2 * d);
  for (int i = 0; i < 2 * d; ++i) {
    if (static_cast<int>(rows[i].size()) != 2 * d)
      throw lv::DomainError("phi matrix must be 2d x 2d");
    for (int j = 0; j < 2 * d; ++j) {
      const lv::Rat& x = rows[i][j];
      if (x.get_den() != 1 || x < 0)
        throw lv::DomainError("phi entries must be field-element indices");
      phi.at(i, j) = k.from_index(x.get_num().get_ui());
    }
  }
  std::vector<int> flag_type =
      flag_type_str.empty() ? std::vector<int>{d} : parse_int_list(flag_type_str);
  const auto census = lv::linalg_census(k, d, flag_type, phi);
  Json j;
  j["q"] = q;
  j["d"] = d;
  j["flag_type"] = flag_type;
  j["total_flags"] = census.total_flags;
  j["bad_flags"] = census.bad_flags;
  Json by_key = Json::object();
  for (const auto& [key, n] : census.bad_by_key) by_key[key] = n;
  j["bad_by_key"] = by_key;
  return dump(j);
}

std::string run_flat_solve(const std::string& conn_path, int order, uint64_t p,
                           const std::string& init_str) {
  const Json in = Json::parse(read_file(conn_path));
  lv::TruncatedSeriesConnection conn;
  conn.r = in.at("r").get<int>();
  conn.order = order;
  for (const auto& row : in.at("A")) {
    std::vector<lv::TruncatedSeries> out_row;
    for (const auto& entry : row) {
      lv::TruncatedSeries s(std::max<int>(0, static_cast<int>(entry.size()) - 1));
      for (size_t i = 0; i < entry.size(); ++i)
        s.c[i] = lv::parse_rat(entry[i].get<std::string>());
      out_row.push_back(s);
    }
    conn.A.push_back(out_row);
  }
  std::vector<lv::Rat> init(conn.r, lv::Rat(0));
  if (!init_str.empty()) {
    std::stringstream ss(init_str);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
      if (i >= conn.r) throw lv::DomainError("--init longer than rank");
      init[i++] = lv::parse_rat(tok);
    }
  } else if (in.contains("init")) {
    for (int i = 0; i < conn.r; ++i) init[i] = lv::parse_rat(in["init"][i].get<std::string>());
  } else {
    init[0] = 1;
  }

  const auto f = lv::solve_flat_sections(conn, init);
  Json j;
  j["r"] = conn.r;
  j["order"] = conn.order;
  j["valid_to"] = lv::flat_residual_valid_to(conn, f);
  j["series"] = Json::array();
  for (const auto& s : f) {
    Json coeffs = Json::array();
    for (const auto& c : s.c) coeffs.push_back(lv::rat_str(c));
    j["series"].push_back(coeffs);
  }
  if (p >= 2) {
    Json val;
    val["p"] = p;
    Json mins = Json::array();
    bool any = false;
    long global_min = 0;
    for (const auto& s : f) {
      const auto prof = lv::padic_valuation_profile(s, p);
      mins.push_back(prof.any ? Json(prof.min) : Json(nullptr));
      if (prof.any && (!any || prof.min < global_min)) global_min = prof.min;
      any = any || prof.any;
    }
    val["component_min"] = mins;
    val["min"] = any ? Json(global_min) : Json(nullptr);
    j["valuation"] = val;
  }
  return dump(j);
}

std::string run_relations(const std::string& series_path, int degree) {
  const Json in = Json::parse(read_file(series_path));
  std::vector<lv::TruncatedSeries> series;
  for (const auto& entry : in) {
    lv::TruncatedSeries s(std::max<int>(0, static_cast<int>(entry.size()) - 1));
    for (size_t i = 0; i < entry.size(); ++i)
      s.c[i] = lv::parse_rat(entry[i].get<std::string>());
    series.push_back(s);
  }
  const auto basis = lv::truncated_relations(series, degree);
  Json j;
  j["degree"] = basis.degree;
  j["series_count"] = series.size();
  j["monomials"] = basis.monomials;
  j["relations"] = Json::array();
  for (const auto& rel : basis.relations) {
    Json r = Json::array();
    for (const auto& c : rel) r.push_back(lv::rat_str(c));
    j["relations"].push_back(r);
  }
  return dump(j);
}

int run_cli(const std::vector<std::string>& args);

int run_replay(const std::string& manifest_path, std::optional<uint64_t> seed_override) {
  const Json manifest = Json::parse(read_file(manifest_path));
  const std::string command = manifest.at("command").get<std::string>();
  if (manifest.at("version").get<std::string>() != kVersion)
    std::cerr << "warning: manifest version " << manifest["version"].get<std::string>()
              << " differs from tool version " << kVersion << "\n";
  if (seed_override && !manifest.at("seed").is_null() &&
      *seed_override != manifest["seed"].get<uint64_t>())
    throw lv::DomainError("replay refuses a seed different from the manifest's");

  // Rebuild the argv, rerouting output to a scratch file.
  std::vector<std::string> args{command};
  const auto& flags = manifest.at("flags");
  for (size_t i = 0; i < flags.size(); ++i) {
    const std::string f = flags[i].get<std::string>();
    if (f == "--out") {
      ++i;  // drop the recorded path
      continue;
    }
    args.push_back(f);
  }
  const std::string replay_out = manifest.at("output").get<std::string>() + ".replay";
  args.push_back("--out");
  args.push_back(replay_out);

  const int rc = run_cli(args);
  if (rc != 0) return rc;
  const std::string digest = lv::sha256_hex(read_file(replay_out));
  std::remove((replay_out + ".manifest.json").c_str());
  std::remove(replay_out.c_str());
  const std::string expected = manifest.at("digest").get<std::string>();
  Json j;
  j["command"] = command;
  j["expected_digest"] = expected;
  j["replayed_digest"] = digest;
  j["match"] = digest == expected;
  std::cout << dump(j);
  if (digest != expected)
    throw lv::LemmaViolationError("replay digest mismatch for " + manifest_path);
  return 0;
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact-arithmetic checks for hypersurface Hodge data, finite-field "
               "monodromy configurations, and flat power-series sections"};
  app.require_subcommand(1);

  const char* env_jobs = std::getenv("LV_JOBS");
  const int default_jobs = env_jobs ? std::max(1, std::atoi(env_jobs)) : 1;

  // hodge-scan
  auto* scan = app.add_subcommand("hodge-scan", "scan dimensions for the spectral conditions");
  CommonOpts scan_common;
  int scan_nmin = 2, scan_nmax = 20, scan_dmax = 1000, scan_persist = 2;
  int scan_jobs = default_jobs;
  bool scan_alt = false;
  scan->add_option("--n-min", scan_nmin);
  scan->add_option("--n-max", scan_nmax);
  scan->add_option("--d-max", scan_dmax);
  scan->add_option("--persistence", scan_persist);
  scan->add_option("--jobs", scan_jobs);
  scan->add_flag("--alt-moduli", scan_alt);
  add_common(scan, &scan_common, true);

  // kp-params
  auto* kp = app.add_subcommand("kp-params", "search for the residue-prime parameters");
  CommonOpts kp_common;
  int kp_g = 2, kp_degk = 1, kp_c = 5;
  std::string kp_forbidden;
  kp->add_option("--genus", kp_g);
  kp->add_option("--deg-k", kp_degk);
  kp->add_option("--orbit-const", kp_c);
  kp->add_option("--forbidden", kp_forbidden, "comma-separated primes to exclude");
  add_common(kp, &kp_common);

  // com-fibers
  auto* com = app.add_subcommand("com-fibers", "commutator-fiber census over Aff(q)");
  CommonOpts com_common;
  uint32_t com_q = 3;
  int com_s = 1;
  com->add_option("--q", com_q)->required();
  com->add_option("--s", com_s)->required();
  add_common(com, &com_common);

  // centralizer
  auto* cent = app.add_subcommand("centralizer", "semilinear centralizer dimension checks");
  CommonOpts cent_common;
  uint32_t cent_p = 2, cent_e = 3;
  int cent_dim = 3, cent_trials = 100;
  uint64_t cent_seed = 1;
  cent->add_option("--p", cent_p)->required();
  cent->add_option("--e", cent_e)->required();
  cent->add_option("--dim", cent_dim)->required();
  cent->add_option("--trials", cent_trials);
  cent->add_option("--seed", cent_seed);
  add_common(cent, &cent_common);

  // transvect-cert
  auto* tv = app.add_subcommand("transvect-cert", "transvection-graph density certificate");
  CommonOpts tv_common;
  std::string tv_vectors;
  tv->add_option("--vectors", tv_vectors, "CSV of center vectors, one per row")->required();
  add_common(tv, &tv_common);

  // bad-lagrangian
  auto* bl = app.add_subcommand("bad-lagrangian", "search for a common near-subspace");
  CommonOpts bl_common;
  std::string bl_tuple;
  uint32_t bl_p = 0, bl_e = 1;
  bl->add_option("--tuple", bl_tuple, "JSON file with the Lagrangian tuple")->required();
  bl->add_option("--p", bl_p, "prime characteristic; 0 means rationals");
  bl->add_option("--e", bl_e, "field extension degree");
  add_common(bl, &bl_common);

  // frob-bound
  auto* fb = app.add_subcommand("frob-bound", "centralizer bound from point counts");
  CommonOpts fb_common;
  uint64_t fb_q = 2;
  int fb_n = 2;
  std::string fb_b = "1000";
  fb->add_option("--q", fb_q)->required();
  fb->add_option("--n", fb_n)->required();
  fb->add_option("--b", fb_b)->required();
  add_common(fb, &fb_common);

  // wpq
  auto* wpq = app.add_subcommand("wpq", "minimal double-coset representatives");
  CommonOpts wpq_common;
  std::string wpq_type, wpq_dp, wpq_dq, wpq_mu;
  wpq->add_option("--type", wpq_type, "root type, e.g. A3")->required();
  wpq->add_option("--dp", wpq_dp, "1-based simple-root indices of Delta_P");
  wpq->add_option("--dq", wpq_dq, "optional cross-check of the derived Delta_Q");
  wpq->add_option("--mu", wpq_mu, "ambient cocharacter coordinates")->required();
  add_common(wpq, &wpq_common, true);

  // lw2-sweep
  auto* lw2 = app.add_subcommand("lw2-sweep", "sweep parabolic configurations");
  CommonOpts lw2_common;
  std::string lw2_type;
  int lw2_mu_bound = 3, lw2_e = 1;
  lw2->add_option("--type", lw2_type)->required();
  lw2->add_option("--mu-bound", lw2_mu_bound);
  lw2->add_option("--e", lw2_e)->required();
  add_common(lw2, &lw2_common);

  // linalg-census
  auto* lc = app.add_subcommand("linalg-census", "balanced-flag counting oracle");
  CommonOpts lc_common;
  uint32_t lc_q = 3;
  int lc_d = 1;
  std::string lc_phi, lc_flag_type;
  lc->add_option("--q", lc_q)->required();
  lc->add_option("--d", lc_d)->required();
  lc->add_option("--phi", lc_phi, "CSV of the similitude matrix, field indices")->required();
  lc->add_option("--flag-type", lc_flag_type, "isotropic dims, default the Lagrangian flag");
  add_common(lc, &lc_common);

  // flat-solve
  auto* fs = app.add_subcommand("flat-solve", "solve for a formal flat section");
  CommonOpts fs_common;
  std::string fs_conn, fs_init;
  int fs_order = 100;
  uint64_t fs_p = 0;
  fs->add_option("--connection", fs_conn, "JSON connection matrix")->required();
  fs->add_option("--order", fs_order);
  fs->add_option("--p", fs_p, "also report the shifted p-adic valuation profile");
  fs->add_option("--init", fs_init, "comma-separated initial condition");
  add_common(fs, &fs_common);

  // relations
  auto* rel = app.add_subcommand("relations", "homogeneous relations among series");
  CommonOpts rel_common;
  std::string rel_series;
  int rel_degree = 2;
  rel->add_option("--series", rel_series, "JSON array of coefficient arrays")->required();
  rel->add_option("--degree", rel_degree)->required();
  add_common(rel, &rel_common);

  // replay
  auto* rp = app.add_subcommand("replay", "rerun a recorded command and compare digests");
  std::string rp_manifest;
  uint64_t rp_seed = 0;
  bool rp_has_seed = false;
  rp->add_option("manifest", rp_manifest, "path to a *.manifest.json")->required();
  rp->add_option("--seed", rp_seed)->each([&](const std::string&) { rp_has_seed = true; });

  // CLI11 wants mutable argv-style input, reversed.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  // Flags to record in the manifest: everything after the subcommand name.
  std::vector<std::string> flags(args.begin() + 1, args.end());
  const std::string command = args.empty() ? "" : args[0];

  if (scan->parsed()) {
    emit(command, flags, std::nullopt, scan_common,
         run_hodge_scan(scan_nmin, scan_nmax, scan_dmax, scan_persist, scan_jobs, scan_alt,
                        scan_common.format));
  } else if (kp->parsed()) {
    std::vector<uint64_t> forbidden;
    for (int v : parse_int_list(kp_forbidden)) forbidden.push_back(static_cast<uint64_t>(v));
    emit(command, flags, std::nullopt, kp_common, run_kp_params(kp_g, kp_degk, kp_c, forbidden));
  } else if (com->parsed()) {
    emit(command, flags, std::nullopt, com_common, run_com_fibers(com_q, com_s));
  } else if (cent->parsed()) {
    emit(command, flags, cent_seed, cent_common,
         run_centralizer(cent_p, cent_e, cent_dim, cent_trials, cent_seed));
  } else if (tv->parsed()) {
    emit(command, flags, std::nullopt, tv_common, run_transvect_cert(tv_vectors));
  } else if (bl->parsed()) {
    emit(command, flags, std::nullopt, bl_common, run_bad_lagrangian(bl_tuple, bl_p, bl_e));
  } else if (fb->parsed()) {
    emit(command, flags, std::nullopt, fb_common, run_frob_bound(fb_q, fb_n, fb_b));
  } else if (wpq->parsed()) {
    emit(command, flags, std::nullopt, wpq_common,
         run_wpq(wpq_type, wpq_dp, wpq_dq, wpq_mu, wpq_common.format));
  } else if (lw2->parsed()) {
    emit(command, flags, std::nullopt, lw2_common, run_lw2_sweep(lw2_type, lw2_mu_bound, lw2_e));
  } else if (lc->parsed()) {
    emit(command, flags, std::nullopt, lc_common,
         run_linalg_census(lc_q, lc_d, lc_phi, lc_flag_type));
  } else if (fs->parsed()) {
    emit(command, flags, std::nullopt, fs_common,
         run_flat_solve(fs_conn, fs_order, fs_p, fs_init));
  } else if (rel->parsed()) {
    emit(command, flags, std::nullopt, rel_common, run_relations(rel_series, rel_degree));
  } else if (rp->parsed()) {
    return run_replay(rp_manifest,
                      rp_has_seed ? std::optional<uint64_t>(rp_seed) : std::nullopt);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_cli(args);
  } catch (const lv::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const lv::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const lv::LemmaViolationError& e) {
    std::cerr << "violated identity: " << e.what() << "\n";
    return 4;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
