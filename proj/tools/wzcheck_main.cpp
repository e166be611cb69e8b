#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wzcheck/engine.hpp"
#include "wzcheck/report_io.hpp"
#include "wzcheck/wz_pair.hpp"

namespace {

using namespace wzcheck;

std::vector<std::string> split_ids(const std::string& arg) {
  std::vector<std::string> ids;
  std::stringstream ss(arg);
  std::string id;
  while (std::getline(ss, id, ','))
    if (!id.empty()) ids.push_back(id);
  return ids;
}

std::string domain_str(PrimeDomain d) {
  switch (d) {
    case PrimeDomain::PrimeGreaterThan3: return "prime p > 3";
    case PrimeDomain::OddPrime: return "odd prime";
    case PrimeDomain::AllN: return "all n >= 1";
  }
  return "?";
}

int emit(const std::string& rendered, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << rendered;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 3;
  }
  out << rendered;
  return out.good() ? 0 : 3;
}

int do_verify(const std::string& claims_arg, long pmin, long pmax, long oracle_max,
              long nmax, long grid, int threads, const std::string& format,
              const std::string& out_path) {
  RunConfig cfg;
  if (claims_arg != "all") cfg.claim_ids = split_ids(claims_arg);
  cfg.p_min = pmin;
  cfg.p_max = pmax;
  cfg.oracle_max = oracle_max;
  cfg.identity_n_max = nmax;
  cfg.telescope_grid = grid;
  cfg.worker_count = threads;

  OutputFormat fmt = parse_format(format);
  Report report = run_suite(cfg);

  std::string rendered;
  switch (fmt) {
    case OutputFormat::Json: rendered = to_json(report); break;
    case OutputFormat::Csv: rendered = to_csv(report); break;
    case OutputFormat::Text: rendered = to_text(report); break;
  }
  int io_rc = emit(rendered, out_path);
  if (io_rc != 0) return io_rc;

  if (report.error > 0) {
    std::cerr << "internal evaluation errors: " << report.error << "\n";
    return 2;
  }
  if (report.fail > 0) {
    std::cerr << "COUNTEREXAMPLE: " << report.fail
              << " outcome(s) failed; see the report for residues\n";
    for (const VerificationOutcome& o : report.outcomes)
      if (!o.holds)
        std::cerr << "  " << o.claim << " at p=" << o.p << ": lhs=" << o.lhs
                  << " rhs=" << o.rhs << " mod " << o.modulus << "\n";
    return 1;
  }
  return 0;
}

int do_list() {
  for (const Claim& c : registry()) {
    std::cout << c.id << "  [" << domain_str(c.domain) << "]  ";
    if (c.modulus_exponent == 0)
      std::cout << "exact identity";
    else
      std::cout << "mod p^" << c.modulus_exponent;
    if (c.multi_instance) std::cout << "  (multiple instances per prime)";
    std::cout << "\n    " << c.statement << "\n    source: " << c.source << "\n";
  }
  return 0;
}

int do_telescope(long grid, const std::string& pair_arg) {
  if (grid < 1) {
    std::cerr << "grid must be positive\n";
    return 3;
  }
  long failures = 0;
  for (WZPairId pair : {WZPairId::Pair256, WZPairId::Pair1024}) {
    bool is256 = pair == WZPairId::Pair256;
    if (pair_arg == "256" && !is256) continue;
    if (pair_arg == "1024" && is256) continue;
    long pair_failures = 0;
    for (long n = 0; n <= grid; ++n)
      for (long k = 1; k <= grid; ++k)
        if (!check_telescoping(pair, n, k)) {
          ++pair_failures;
          std::cerr << "telescoping fails for pair " << (is256 ? "256" : "1024")
                    << " at n=" << n << " k=" << k << "\n";
        }
    failures += pair_failures;
    std::cout << "pair " << (is256 ? "256" : "1024") << ": F(n,k-1)-F(n,k) == G(n+1,k)-G(n,k) "
              << (pair_failures == 0 ? "holds exactly" : "FAILS") << " on 0 <= n <= " << grid
              << ", 1 <= k <= " << grid << "\n";
  }
  return failures == 0 ? 0 : 1;
}

int do_identity(long pmax, const std::string& pair_arg) {
  if (pmax < 1) {
    std::cerr << "pmax must be positive\n";
    return 3;
  }
  long failures = 0;
  for (WZPairId pair : {WZPairId::Pair256, WZPairId::Pair1024}) {
    bool is256 = pair == WZPairId::Pair256;
    if (pair_arg == "256" && !is256) continue;
    if (pair_arg == "1024" && is256) continue;
    long pair_failures = 0;
    for (long p = 1; p <= pmax; ++p) {
      BoundaryCheck bc = boundary_identity(pair, p);
      if (!bc.holds) {
        ++pair_failures;
        std::cerr << "boundary identity fails for pair " << (is256 ? "256" : "1024")
                  << " at p=" << p << ": lhs=" << bc.lhs.get_str()
                  << " rhs=" << bc.rhs.get_str() << "\n";
      }
    }
    failures += pair_failures;
    std::cout << "pair " << (is256 ? "256" : "1024")
              << ": sum_{n<p} F(n,0) == F(p-1,p-1) + sum_{k=1}^{p-1} G(p,k) "
              << (pair_failures == 0 ? "holds exactly" : "FAILS") << " for 1 <= p <= " << pmax
              << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for WZ-pair supercongruence claims"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Verify claims over a prime range");
  std::string claims_arg = "all";
  long pmin = 5, pmax = 199, oracle_max = 97, nmax = 300, grid = 120;
  int threads = 1;
  std::string format = "text", out_path;
  verify->add_option("--claims", claims_arg, "Comma-separated claim ids, or 'all'");
  verify->add_option("--pmin", pmin, "Smallest prime to test");
  verify->add_option("--pmax", pmax, "Largest prime to test");
  verify->add_option("--oracle-max", oracle_max,
                     "Run the exact oracle alongside the fast path for primes <= this");
  verify->add_option("--nmax", nmax, "Upper n for exact-identity claims");
  verify->add_option("--grid", grid, "Telescoping grid size echoed into the report config");
  verify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_option("--threads", threads, "Worker thread count");

  auto* list_cmd = app.add_subcommand("list", "Print the claim registry");

  auto* tel = app.add_subcommand("telescope", "Grid-check the pair relation exactly");
  long tgrid = 120;
  std::string tpair = "both";
  tel->add_option("--grid", tgrid, "Check all 0 <= n <= grid, 1 <= k <= grid");
  tel->add_option("--pair", tpair, "Which pair to check")
      ->check(CLI::IsMember({"256", "1024", "both"}));

  auto* ident = app.add_subcommand("identity", "Check the boundary identity for 1 <= p <= pmax");
  long ipmax = 97;
  std::string ipair = "both";
  ident->add_option("--pmax", ipmax, "Largest integer p (need not be prime)");
  ident->add_option("--pair", ipair, "Which pair to check")
      ->check(CLI::IsMember({"256", "1024", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*verify)
      return do_verify(claims_arg, pmin, pmax, oracle_max, nmax, grid, threads, format,
                       out_path);
    if (*list_cmd) return do_list();
    if (*tel) return do_telescope(tgrid, tpair);
    if (*ident) return do_identity(ipmax, ipair);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const InternalMismatchError& e) {
    std::cerr << "INTERNAL MISMATCH (fast vs exact): " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 3;
}
