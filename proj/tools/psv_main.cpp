// psv: batch driver for principal-subspace presentation checks.
//
// Exit codes: 0 success/pass, 1 usage or parse error, 2 MISMATCH (verify) or
// negative answer (member, lemma), 3 UNSTABLE closure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "psv/text.hpp"
#include "psv/verifier.hpp"

namespace {

struct CommonArgs {
  int rank = 2;
  int level = 1;
  int max_weight = -1;
  int max_charge = 6;
  int mode_bound = 0;
  int jobs = 1;
  std::string format = "json";
  std::string out_path;
  std::string cache_dir;
};

int default_max_weight(int rank, int level) {
  if (rank >= 3) return 4;
  if (level <= 1) return 6;
  if (level == 2) return 5;
  return 4;
}

// Parses "k0,k1,...,kn"; returns false on malformed input.
bool parse_weight(const std::string& s, std::vector<int>& out) {
  out.clear();
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) return false;
      out.push_back(v);
    } catch (...) {
      return false;
    }
  }
  return !out.empty();
}

int validate_common(const CommonArgs& a, const std::string& weight_str) {
  if (a.rank < 1) {
    std::cerr << "error: --rank must be at least 1\n";
    return 1;
  }
  std::vector<int> w;
  if (!parse_weight(weight_str, w)) {
    std::cerr << "error: malformed --weight (expected k0,k1,...,kn)\n";
    return 1;
  }
  if (static_cast<int>(w.size()) != a.rank + 1) {
    std::cerr << "error: --weight must have rank+1 = " << a.rank + 1 << " entries\n";
    return 1;
  }
  for (int v : w)
    if (v < 0) {
      std::cerr << "error: --weight entries must be nonnegative\n";
      return 1;
    }
  int lv = 0;
  for (int v : w) lv += v;
  if (lv == 0) {
    std::cerr << "error: level 0 has only the trivial module\n";
    return 1;
  }
  if (a.level != lv) {
    std::cerr << "error: --level " << a.level << " does not match the weight (sum " << lv << ")\n";
    return 1;
  }
  return 0;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  out << content;
}

std::string env_cache() {
  const char* v = std::getenv("PSV_CACHE");
  return v ? std::string(v) : std::string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two-sided verification of principal-subspace presentations for affine sl(n+1)"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string weight_str;
  args.cache_dir = env_cache();

  auto add_common = [&](CLI::App* cmd, bool with_window) {
    cmd->add_option("--rank", args.rank, "rank n of sl(n+1)")->required();
    cmd->add_option("--level", args.level, "level k")->required();
    cmd->add_option("--weight", weight_str, "dominant weight k0,k1,...,kn")->required();
    if (with_window) {
      cmd->add_option("--max-weight", args.max_weight, "largest graded weight checked");
      cmd->add_option("--max-charge", args.max_charge, "largest total charge checked");
      cmd->add_option("--mode-bound", args.mode_bound, "closure mode bound (0 = auto)");
    }
    cmd->add_option("--jobs", args.jobs, "worker threads for per-component work");
    cmd->add_option("--format", args.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--out", args.out_path, "write the report to this path");
    cmd->add_option("--cache", args.cache_dir, "cache directory (default $PSV_CACHE)");
  };

  CLI::App* verify = app.add_subcommand("verify", "two-sided graded verification");
  int growth_cap = 8;
  verify->add_option("--growth-cap", growth_cap, "window enlargements before reporting UNSTABLE");
  add_common(verify, true);

  CLI::App* qs = app.add_subcommand("qseries", "graded dimension table of W(Lambda)");
  add_common(qs, true);

  CLI::App* member = app.add_subcommand("member", "truncated ideal membership of an element");
  std::string elem_text, elem_file;
  member->add_option("--elem", elem_text, "element in canonical text form");
  member->add_option("--elem-file", elem_file, "read the element from a file");
  add_common(member, false);

  CLI::App* lemma = app.add_subcommand("lemma", "generator-by-generator lemma membership checks");
  std::string which = "tau";
  lemma->add_option("--which", which, "tau or sigma")->check(CLI::IsMember({"tau", "sigma"}));
  add_common(lemma, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  int rc = validate_common(args, weight_str);
  if (rc) return rc;
  std::vector<int> wcoords;
  parse_weight(weight_str, wcoords);
  psv::AffineWeight lambda{wcoords};
  if (args.max_weight < 0) args.max_weight = default_max_weight(args.rank, args.level);

  try {
    psv::Algebra alg = psv::build_algebra(args.rank);

    if (verify->parsed()) {
      psv::VerifyOptions opts;
      opts.jobs = args.jobs;
      opts.growth_cap = growth_cap;
      opts.mode_bound = args.mode_bound;
      opts.cache_dir = args.cache_dir;
      if (args.mode_bound > 0 && args.mode_bound < args.max_weight + growth_cap)
        std::cerr << "warning: --mode-bound below the internal weight window can "
                     "under-close the ideal; a resulting MISMATCH may be a truncation "
                     "artifact\n";
      auto t0 = std::chrono::steady_clock::now();
      psv::VerificationReport rep =
          psv::verify_presentation(alg, lambda, args.max_weight, args.max_charge, opts);
      // wall-clock timing goes to stderr; report files stay byte-reproducible
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      std::cerr << "verify: " << rep.status << " in " << dt.count() << "s ("
                << rep.components.size() << " components, growth " << rep.growth_steps
                << ", passes " << rep.closure_passes << ")\n";
      write_output(args.out_path, args.format == "tsv" ? rep.to_tsv() : rep.to_json());
      if (rep.status == "PASS") return 0;
      if (rep.status == "MISMATCH") {
        std::cerr << "MISMATCH in " << rep.mismatches.size() << " component(s); first at "
                  << psv::to_text(rep.mismatches.front()) << "\n";
        return 2;
      }
      std::cerr << "UNSTABLE: closure did not stabilize within the growth cap\n";
      return 3;
    }

    if (qs->parsed()) {
      auto rows = psv::qseries(alg, lambda, args.max_weight, args.max_charge, args.jobs);
      write_output(args.out_path, args.format == "tsv" ? psv::qseries_tsv(alg, lambda, rows)
                                                       : psv::qseries_json(alg, lambda, rows));
      return 0;
    }

    if (member->parsed()) {
      if (elem_text.empty() == elem_file.empty()) {
        std::cerr << "error: provide exactly one of --elem or --elem-file\n";
        return 1;
      }
      if (!elem_file.empty()) {
        std::ifstream in(elem_file);
        if (!in) {
          std::cerr << "error: cannot read " << elem_file << "\n";
          return 1;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        elem_text = buf.str();
      }
      psv::AlgElem elem;
      try {
        elem = psv::parse_elem(alg, elem_text);
      } catch (const psv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
      }
      psv::IdealSpec spec = psv::IdealSpec::standard(alg, lambda);
      bool member_flag = psv::membership(alg, spec, elem);
      write_output(args.out_path, member_flag ? "true\n" : "false\n");
      return member_flag ? 0 : 2;
    }

    if (lemma->parsed()) {
      psv::LemmaReport rep;
      if (which == "tau") {
        rep = psv::lemma_check_tau(alg, lambda, args.max_weight);
      } else {
        if (wcoords[0] != 0) {
          std::cerr << "error: the sigma lemma applies to weights k1*L1 + k2*L2 (k0 = 0)\n";
          return 1;
        }
        rep = psv::lemma_check_sigma(alg, wcoords[1], wcoords[2], args.max_weight);
      }
      write_output(args.out_path, rep.to_text());
      return rep.pass ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
