// Command-line front end: every analysis subcommand reads JSON, prints a
// versioned report envelope on stdout, and communicates through the exit
// code (0 = pass, 1 = a checked inequality/identity failed, 2 = usage or
// input problem). Generator subcommands (gen, corpus, coarsen) print bare
// polytope JSON so their output pipes straight back into the analyzers.

#include <CLI11.hpp>

#include "ehrspan/constructions.hpp"
#include "ehrspan/ehrhart.hpp"
#include "ehrspan/idp.hpp"
#include "ehrspan/inequalities.hpp"
#include "ehrspan/io.hpp"
#include "ehrspan/lattice_algebra.hpp"
#include "ehrspan/polytope.hpp"
#include "ehrspan/upp.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#ifndef EHRSPAN_VERSION
#define EHRSPAN_VERSION "0.0.0"
#endif

namespace {

using ehrspan::Int;
using ehrspan::IntVec;
using ehrspan::LatticePolytope;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// FNV-1a, 64-bit: tiny, dependency-free, good enough to fingerprint
// inputs for report provenance (not a cryptographic digest).
std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void emit_report(const std::string& command, const std::string& digest,
                 const Stopwatch& watch, json results) {
  json report{{"tool_version", EHRSPAN_VERSION},
              {"command", command},
              {"input_digest", digest},
              {"elapsed_ms", watch.elapsed_ms()},
              {"results", std::move(results)}};
  std::cout << report.dump() << "\n";
}

LatticePolytope load_polytope(const std::string& path, std::string* digest) {
  std::string data = read_input(path);
  *digest = fnv1a_digest(data);
  LatticePolytope p = ehrspan::polytope_from_json(json::parse(data));
  for (const std::string& w : p.warnings()) std::cerr << "warning: " << w << "\n";
  return p;
}

ehrspan::ProjectivePointSet load_point_set(const std::string& path, std::string* digest) {
  std::string data = read_input(path);
  *digest = fnv1a_digest(data);
  return ehrspan::point_set_from_json(json::parse(data));
}

std::string human_intvec(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

long long worker_count(long long jobs) {
  const char* env = std::getenv("EHRSPAN_THREADS");
  if (!env) return 1;
  long long n = std::atoll(env);
  if (n <= 1) return 1;
  return std::min(n, jobs);
}

// ---------------------------------------------------------------- hstar

int run_hstar(const std::string& file, bool human) {
  Stopwatch watch;
  std::string digest;
  LatticePolytope p = load_polytope(file, &digest);
  ehrspan::HStarVector h = ehrspan::hstar_vector(p);
  if (human)
    std::cerr << "h* = " << human_intvec(h.coeffs) << ", degree " << h.degree
              << ", normalized volume " << h.normalized_volume << "\n";
  emit_report("hstar", digest, watch, ehrspan::hstar_to_json(h));
  return kExitPass;
}

// -------------------------------------------------------------- spanning

int run_spanning(const std::string& file, bool human) {
  Stopwatch watch;
  std::string digest;
  LatticePolytope p = load_polytope(file, &digest);
  ehrspan::PointLatticeInfo info = ehrspan::spanning_index(p);
  if (human)
    std::cerr << "spanning index " << info.index
              << (info.index == 1 ? " (spanning)" : " (not spanning)") << "\n";
  emit_report("spanning", digest, watch, ehrspan::lattice_info_to_json(info));
  return kExitPass;
}

// --------------------------------------------------------------- coarsen

int run_coarsen(const std::string& file, bool human) {
  std::string digest;
  LatticePolytope p = load_polytope(file, &digest);
  LatticePolytope q = ehrspan::coarsen(p);
  if (human) std::cerr << "coarsened to " << q.vertices().size() << " vertices\n";
  std::cout << ehrspan::polytope_to_json(q).dump() << "\n";
  return kExitPass;
}

// ------------------------------------------------------------------- idp

int run_idp(const std::string& file, long long kmax, bool human) {
  Stopwatch watch;
  std::string digest;
  LatticePolytope p = load_polytope(file, &digest);
  ehrspan::IdpVerdict v = kmax > 0 ? ehrspan::is_idp(p, kmax) : ehrspan::is_idp(p);
  if (human) {
    if (v.is_idp)
      std::cerr << "IDP holds up to k = " << v.checked_up_to << "\n";
    else
      std::cerr << "not IDP: " << human_intvec(v.counterexample->second)
                << " in " << v.counterexample->first << "P has no decomposition\n";
  }
  emit_report("idp", digest, watch, ehrspan::idp_to_json(v));
  return kExitPass;
}

// ----------------------------------------------------------------- check

int run_check(const std::string& file, const std::string& family, bool human) {
  if (family != "all" && family != "stanley" && family != "strong" && family != "lower")
    throw CLI::ValidationError("--family must be one of all|stanley|strong|lower");

  Stopwatch watch;
  std::string digest;
  LatticePolytope p = load_polytope(file, &digest);
  ehrspan::HStarVector h = ehrspan::hstar_vector(p);

  std::vector<ehrspan::InequalityReport> reports;
  if (family == "all" || family == "stanley") reports.push_back(ehrspan::check_stanley(h));
  if (family == "all" || family == "strong") {
    ehrspan::InequalityReport rep = ehrspan::check_strong(h);
    rep.spanning = ehrspan::spanning_index(p).index == 1;
    reports.push_back(std::move(rep));
  }
  if (family == "all" || family == "lower")
    for (auto& rep : ehrspan::check_lower_bounds(p)) reports.push_back(std::move(rep));

  bool all_pass = true;
  json results = json::array();
  for (const auto& rep : reports) {
    all_pass = all_pass && rep.pass;
    results.push_back(ehrspan::inequality_report_to_json(rep));
    if (human) {
      std::cerr << rep.family << ": " << (rep.pass ? "pass" : "FAIL");
      if (!rep.applicable) std::cerr << " (hypothesis not met, vacuous)";
      for (const auto& v : rep.violations) {
        std::cerr << "  violation at";
        for (const auto& [key, val] : v.params) std::cerr << " " << key << "=" << val;
        std::cerr << ": " << v.lhs << " > " << v.rhs;
      }
      std::cerr << "\n";
    }
  }
  emit_report("check", digest, watch, std::move(results));
  return all_pass ? kExitPass : kExitViolation;
}

// ------------------------------------------------------------------- gen

int run_gen(const std::string& family, const std::vector<long long>& params,
            long long dilate_factor) {
  LatticePolytope p = ehrspan::standard_family(family, params);
  if (dilate_factor != 1) p = ehrspan::dilate(p, Int(dilate_factor));
  std::cout << ehrspan::polytope_to_json(p).dump() << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------- corpus

ehrspan::CorpusSpec corpus_spec(std::uint64_t seed, long long count, long long dim_min,
                                long long dim_max, long long bound,
                                const std::string& family) {
  ehrspan::CorpusSpec spec;
  spec.seed = seed;
  spec.count = count;
  spec.dim_range = {dim_min, dim_max};
  spec.coordinate_bound = bound;
  spec.family = family;
  return spec;
}

std::string spec_digest(const ehrspan::CorpusSpec& spec) {
  std::ostringstream os;
  os << "seed=" << spec.seed << ";count=" << spec.count << ";dims=" << spec.dim_range.first
     << ".." << spec.dim_range.second << ";bound=" << spec.coordinate_bound
     << ";family=" << spec.family;
  return fnv1a_digest(os.str());
}

int run_corpus(const ehrspan::CorpusSpec& spec) {
  for (const LatticePolytope& p : ehrspan::random_corpus(spec))
    std::cout << ehrspan::polytope_to_json(p).dump() << "\n";
  return kExitPass;
}

// ------------------------------------------------------------ corpus-check

struct MemberOutcome {
  json violations = json::array();
  std::string error;  // nonempty = internal failure, reported via exit 2
};

MemberOutcome check_member(const LatticePolytope& p) {
  MemberOutcome out;
  auto record = [&](const std::string& check, json detail) {
    detail["check"] = check;
    out.violations.push_back(std::move(detail));
  };

  ehrspan::HStarVector h = ehrspan::hstar_vector(p);

  ehrspan::InequalityReport stanley = ehrspan::check_stanley(h);
  if (!stanley.pass)
    record("stanley", json{{"report", ehrspan::inequality_report_to_json(stanley)}});

  ehrspan::PointLatticeInfo info = ehrspan::spanning_index(p);
  if (info.index == 1) {
    ehrspan::InequalityReport strong = ehrspan::check_strong(h);
    if (!strong.pass)
      record("strong", json{{"report", ehrspan::inequality_report_to_json(strong)}});
    for (long long j = 0; j <= h.degree; ++j)
      if (h.coeffs[static_cast<std::size_t>(j)] < 1)
        record("no_internal_zeros", json{{"j", j}});
  }

  LatticePolytope q = ehrspan::coarsen(p);
  ehrspan::HStarVector hq = ehrspan::hstar_vector(q);
  if (h.normalized_volume != info.index * hq.normalized_volume)
    record("volume_index_identity",
           json{{"volume", ehrspan::int_to_json(h.normalized_volume)},
                {"index", ehrspan::int_to_json(info.index)},
                {"coarse_volume", ehrspan::int_to_json(hq.normalized_volume)}});
  for (std::size_t j = 0; j < h.coeffs.size(); ++j)
    if (h.coeffs[j] < hq.coeffs[j])
      record("coarsening_monotonicity",
             json{{"j", j},
                  {"hstar", ehrspan::int_to_json(h.coeffs[j])},
                  {"coarse_hstar", ehrspan::int_to_json(hq.coeffs[j])}});
  Int pts_p = ehrspan::count_lattice_points(p, 1);
  Int pts_q = ehrspan::count_lattice_points(q, 1);
  if (pts_p != pts_q)
    record("lattice_point_preservation", json{{"points", ehrspan::int_to_json(pts_p)},
                                              {"coarse_points", ehrspan::int_to_json(pts_q)}});
  return out;
}

int run_corpus_check(const ehrspan::CorpusSpec& spec, bool human) {
  Stopwatch watch;
  std::vector<LatticePolytope> corpus = ehrspan::random_corpus(spec);
  std::vector<MemberOutcome> outcomes(corpus.size());

  long long workers = worker_count(static_cast<long long>(corpus.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) outcomes[i] = check_member(corpus[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (long long w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= corpus.size()) return;
          try {
            outcomes[i] = check_member(corpus[i]);
          } catch (const std::exception& e) {
            outcomes[i].error = e.what();
          }
        }
      });
    for (std::thread& t : pool) t.join();
  }

  // Report in generation order regardless of completion order.
  json violations = json::array();
  long long members_with_violations = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!outcomes[i].error.empty())
      throw std::runtime_error("member " + std::to_string(i) + ": " + outcomes[i].error);
    if (outcomes[i].violations.empty()) continue;
    ++members_with_violations;
    violations.push_back(json{{"member", i},
                              {"polytope", ehrspan::polytope_to_json(corpus[i])},
                              {"violations", outcomes[i].violations}});
  }

  bool pass = violations.empty();
  if (human)
    std::cerr << "checked " << corpus.size() << " members, " << members_with_violations
              << " with violations\n";
  json results{{"count", corpus.size()},
               {"members_with_violations", members_with_violations},
               {"violations", std::move(violations)},
               {"pass", pass}};
  emit_report("corpus-check", spec_digest(spec), watch, std::move(results));
  return pass ? kExitPass : kExitViolation;
}

// ------------------------------------------------------------------- upp

int run_upp(const std::string& file, bool human) {
  Stopwatch watch;
  std::string digest;
  ehrspan::ProjectivePointSet gamma = load_point_set(file, &digest);
  long long size = static_cast<long long>(gamma.points.size());
  long long ell0 = ehrspan::stabilization_degree(gamma);

  ehrspan::UppResult uniform = ehrspan::is_uniform_position(gamma);
  json results = ehrspan::upp_result_to_json(uniform);
  results["set_size"] = size;
  results["stabilization_degree"] = ell0;

  bool theorem_failure = false;

  if (size <= 10) {
    ehrspan::MinFormulaReport mf = ehrspan::check_min_formula(gamma);
    results["min_formula"] = ehrspan::min_formula_to_json(mf);
    if (!mf.equivalent) theorem_failure = true;
  }

  if (uniform.uniform) {
    // Superadditivity sweep over all degree pairs up to stabilization.
    std::vector<long long> hvals(static_cast<std::size_t>(ell0) + 1);
    for (long long ell = 0; ell <= ell0; ++ell)
      hvals[static_cast<std::size_t>(ell)] = ehrspan::hilbert_function(gamma, ell);
    long long checked = 0;
    json failures = json::array();
    for (long long i = 0; i <= ell0; ++i)
      for (long long j = i; i + j <= ell0; ++j) {
        ++checked;
        long long hi = hvals[static_cast<std::size_t>(i)];
        long long hj = hvals[static_cast<std::size_t>(j)];
        long long hsum = hvals[static_cast<std::size_t>(i + j)];
        long long bound = std::min(size, hi + hj - 1);
        if (hsum < bound) {
          failures.push_back(json{{"i", i}, {"j", j}, {"h_sum", hsum}, {"bound", bound}});
          theorem_failure = true;
        }
      }
    results["bound_checks"] = json{{"checked", checked}, {"failures", std::move(failures)}};
  }

  if (human) {
    std::cerr << (uniform.uniform ? "uniform position" : "NOT uniform position")
              << ", stabilization degree " << ell0 << "\n";
    if (uniform.witness)
      std::cerr << "witness at degree " << uniform.witness->degree << "\n";
  }
  emit_report("upp", digest, watch, std::move(results));
  return theorem_failure ? kExitViolation : kExitPass;
}

// ------------------------------------------------------------------ hilb

int run_hilb(const std::string& file, long long degree, bool human) {
  Stopwatch watch;
  std::string digest;
  ehrspan::ProjectivePointSet gamma = load_point_set(file, &digest);
  long long value = ehrspan::hilbert_function(gamma, degree);
  if (human) std::cerr << "h(" << degree << ") = " << value << "\n";
  emit_report("hilb", digest, watch,
              json{{"degree", degree},
                   {"value", value},
                   {"set_size", gamma.points.size()}});
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-polytope invariants: h*-vectors, spanning indices, "
               "decomposition properties, and Hilbert functions of weighted point sets"};
  app.require_subcommand(1);
  app.fallthrough();

  bool human = false;
  app.add_flag("--human", human, "Add a human-readable summary on stderr");

  std::string file;
  std::string family = "all";
  long long kmax = 0;
  long long deg = 0;

  std::uint64_t seed = 0;
  long long count = 0;
  long long dim_min = 2, dim_max = 3, bound = 6;
  std::string corpus_family = "random_simplex";
  std::vector<long long> params;
  long long dilate_factor = 1;
  std::string gen_family;

  auto* hstar = app.add_subcommand("hstar", "h*-vector, degree, normalized volume");
  hstar->add_option("file", file, "polytope JSON ('-' for stdin)")->required();

  auto* spanning = app.add_subcommand("spanning", "spanning index via the point lattice");
  spanning->add_option("file", file, "polytope JSON ('-' for stdin)")->required();

  auto* coarsen = app.add_subcommand("coarsen", "rewrite against the lattice spanned by the polytope's lattice points");
  coarsen->add_option("file", file, "polytope JSON ('-' for stdin)")->required();

  auto* idp = app.add_subcommand("idp", "integer decomposition property check");
  idp->add_option("file", file, "polytope JSON ('-' for stdin)")->required();
  idp->add_option("--kmax", kmax, "largest dilation factor to verify (default max(2, d-1))");

  auto* check = app.add_subcommand("check", "inequality families against one polytope");
  check->add_option("file", file, "polytope JSON ('-' for stdin)")->required();
  check->add_option("--family", family, "all|stanley|strong|lower (default all)");

  auto* gen = app.add_subcommand("gen", "emit a named polytope family member");
  gen->add_option("--family", gen_family, "segment|cube|unimodular_simplex|reeve_simplex|reeve_bipyramid")->required();
  gen->add_option("--params", params, "family parameters")->required();
  gen->add_option("--dilate", dilate_factor, "post-scale by this factor (default 1)");

  auto* corpus = app.add_subcommand("corpus", "stream a seeded random corpus as NDJSON");
  corpus->add_option("--seed", seed, "PRNG seed")->required();
  corpus->add_option("--count", count, "number of instances")->required();
  corpus->add_option("--dim-min", dim_min, "minimum dimension (default 2)");
  corpus->add_option("--dim-max", dim_max, "maximum dimension (default 3)");
  corpus->add_option("--bound", bound, "coordinate bound (default 6)");
  corpus->add_option("--family", corpus_family, "random_simplex|random_polytope");

  auto* corpus_check = app.add_subcommand("corpus-check", "run every applicable theorem over a seeded corpus");
  corpus_check->add_option("--seed", seed, "PRNG seed")->required();
  corpus_check->add_option("--count", count, "number of instances")->required();
  corpus_check->add_option("--dim-min", dim_min, "minimum dimension (default 2)");
  corpus_check->add_option("--dim-max", dim_max, "maximum dimension (default 3)");
  corpus_check->add_option("--bound", bound, "coordinate bound (default 6)");
  corpus_check->add_option("--family", corpus_family, "random_simplex|random_polytope");

  auto* upp = app.add_subcommand("upp", "uniform-position analysis of a weighted point set");
  upp->add_option("file", file, "point-set JSON ('-' for stdin)")->required();

  auto* hilb = app.add_subcommand("hilb", "Hilbert function of a weighted point set at one degree");
  hilb->add_option("file", file, "point-set JSON ('-' for stdin)")->required();
  hilb->add_option("--deg", deg, "degree to evaluate at")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(hstar)) return run_hstar(file, human);
    if (app.got_subcommand(spanning)) return run_spanning(file, human);
    if (app.got_subcommand(coarsen)) return run_coarsen(file, human);
    if (app.got_subcommand(idp)) return run_idp(file, kmax, human);
    if (app.got_subcommand(check)) return run_check(file, family, human);
    if (app.got_subcommand(gen)) return run_gen(gen_family, params, dilate_factor);
    if (app.got_subcommand(corpus))
      return run_corpus(corpus_spec(seed, count, dim_min, dim_max, bound, corpus_family));
    if (app.got_subcommand(corpus_check))
      return run_corpus_check(corpus_spec(seed, count, dim_min, dim_max, bound, corpus_family),
                              human);
    if (app.got_subcommand(upp)) return run_upp(file, human);
    if (app.got_subcommand(hilb)) return run_hilb(file, deg, human);
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
