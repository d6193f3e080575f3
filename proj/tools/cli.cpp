// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rcs2/couplet_io.hpp"
#include "rcs2/error.hpp"
#include "rcs2/metrics.hpp"
#include "rcs2/params.hpp"
#include "rcs2/pipeline.hpp"
#include "rcs2/random.hpp"
#include "rcs2/serial.hpp"

namespace rcs2::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct SetSelection {
  int n = 0;
  bool all = false;
  int p = 0;
  int q0 = 0, q1 = 0, q2 = 0, q3 = 0;
  bool custom = false;  // any of --p/--q0..--q3 given

  void add_options(CLI::App& cmd, bool allow_all) {
    cmd.add_option("--n", n, "couplet count; alone it selects the registry row");
    if (allow_all) {
      cmd.add_flag("--all", all, "select every registered parameter set");
    }
    cmd.add_option("--p", p, "permutation multiplier (custom set)")
        ->each([this](const std::string&) { custom = true; });
    cmd.add_option("--q0", q0, "offset Q0 (custom set)")
        ->each([this](const std::string&) { custom = true; });
    cmd.add_option("--q1", q1, "offset Q1 (custom set)")
        ->each([this](const std::string&) { custom = true; });
    cmd.add_option("--q2", q2, "offset Q2 (custom set)")
        ->each([this](const std::string&) { custom = true; });
    cmd.add_option("--q3", q3, "offset Q3 (custom set)")
        ->each([this](const std::string&) { custom = true; });
  }

  // Resolves to one or more sets; empty return means a reported error.
  std::vector<ParameterSet> resolve(std::ostream& err, int& exit_code) const {
    exit_code = kExitOk;
    if (custom) {
      if (all) {
        err << "error: --all cannot be combined with an explicit set\n";
        exit_code = kExitUsage;
        return {};
      }
      const ParameterSet set{n, p, q0, q1, q2, q3};
      if (const ParamError rule = validate(set); rule != ParamError::Ok) {
        err << "error: invalid parameter set: " << to_string(rule) << "\n";
        exit_code = kExitUsage;
        return {};
      }
      return {set};
    }
    if (all) {
      const auto entries = standard_registry().entries();
      return {entries.begin(), entries.end()};
    }
    if (n != 0) {
      const ParameterSet* set = standard_registry().find(n);
      if (set == nullptr) {
        err << "error: UnknownSize: no registered parameter set with n = " << n
            << "\n";
        exit_code = kExitUsage;
        return {};
      }
      return {*set};
    }
    err << "error: select a parameter set with --n, --all or explicit "
           "--p/--q0..--q3\n";
    exit_code = kExitUsage;
    return {};
  }
};

// Runs fn against --out when given, the fallback stream otherwise.
template <typename Fn>
int with_output(const std::string& out_path, std::ostream& fallback,
                std::ostream& err, bool binary, Fn&& fn) {
  if (out_path.empty()) {
    fn(fallback);
    return kExitOk;
  }
  std::ofstream file(out_path, binary ? std::ios::binary | std::ios::trunc
                                      : std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << out_path << " for writing\n";
    return kExitIo;
  }
  fn(file);
  file.flush();
  if (!file) {
    err << "error: write to " << out_path << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_lut(const SetSelection& selection, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  int exit_code = kExitOk;
  const std::vector<ParameterSet> sets = selection.resolve(err, exit_code);
  if (sets.empty()) return exit_code == kExitOk ? kExitUsage : exit_code;
  if (sets.size() != 1) {
    err << "error: lut needs exactly one parameter set\n";
    return kExitUsage;
  }
  const PermutationLut lut = build_lut(sets.front());
  return with_output(out_path, out, err, false, [&lut](std::ostream& os) {
    os << "j,pi_j\n";
    for (int j = 0; j < lut.n; ++j) {
      os << j << ',' << lut.table[static_cast<std::size_t>(j)] << '\n';
    }
  });
}

int run_params(const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  return with_output(out_path, out, err, false, [](std::ostream& os) {
    os << "n,p,q0,q1,q2,q3\n";
    for (const ParameterSet& set : standard_registry().entries()) {
      os << set.n << ',' << set.p << ',' << set.q0 << ',' << set.q1 << ','
         << set.q2 << ',' << set.q3 << '\n';
    }
  });
}

int run_interleave(const SetSelection& selection, const std::string& in_path,
                   const std::string& out_path, const std::string& impl,
                   std::ostream& err) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) {
    err << "error: cannot open " << in_path << " for reading\n";
    return kExitIo;
  }

  // Sniff the magic to pick the container format.
  char magic[4] = {0, 0, 0, 0};
  in.read(magic, 4);
  const bool binary = in.gcount() == 4 && std::equal(magic, magic + 4, kCoupletMagic);
  in.clear();
  in.seekg(0);

  CoupletBlock block;
  try {
    block = binary ? read_couplets(in) : read_couplets_text(in);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }

  ParameterSet set;
  if (selection.custom || selection.n != 0) {
    int exit_code = kExitOk;
    const std::vector<ParameterSet> sets = selection.resolve(err, exit_code);
    if (sets.size() != 1) return exit_code == kExitOk ? kExitUsage : exit_code;
    set = sets.front();
    if (set.n != block.size()) {
      err << "error: input holds " << block.size()
          << " couplets but the selected set expects " << set.n << "\n";
      return kExitUsage;
    }
  } else {
    const ParameterSet* found = standard_registry().find(block.size());
    if (found == nullptr) {
      err << "error: UnknownSize: input holds " << block.size()
          << " couplets; pass an explicit parameter set\n";
      return kExitUsage;
    }
    set = *found;
  }

  CoupletBlock result;
  try {
    result = impl == "serial"
                 ? serial_interleave(block, set)
                 : vector_interleave(block, set, MachineModel{});
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    err << "error: cannot open " << out_path << " for writing\n";
    return kExitIo;
  }
  try {
    if (binary) {
      write_couplets(result, out);
    } else {
      write_couplets_text(result, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

struct SetVerdict {
  int n = 0;
  bool passed = false;
  std::string detail;
};

SetVerdict verify_set(const ParameterSet& set, int trials, std::uint64_t seed,
                      bool inject_swap_bug) {
  SetVerdict verdict;
  verdict.n = set.n;

  try {
    const PermutationLut lut = build_lut(set);  // throws NotBijective

    const int stride = (4 * set.p) % set.n;
    for (int j = 0; j + 4 < set.n; ++j) {
      const int delta =
          (lut.table[static_cast<std::size_t>(j + 4)] -
           lut.table[static_cast<std::size_t>(j)] + set.n) % set.n;
      if (delta != stride) {
        verdict.detail = "stride property violated at j = " + std::to_string(j);
        return verdict;
      }
    }

    PipelineDebug debug;
    debug.swap_even_instead = inject_swap_bug;
    const MachineModel mm;
    for (int trial = 0; trial < trials; ++trial) {
      const CoupletBlock block = random_block(
          set.n, block_seed(seed, set.n, static_cast<std::uint32_t>(trial)));
      const CoupletBlock serial = serial_interleave(block, set);
      const CoupletBlock vectorized =
          vector_interleave(block, set, mm, nullptr, debug);
      if (serial != vectorized) {
        for (int j = 0; j < set.n; ++j) {
          if (serial.couplets[static_cast<std::size_t>(j)] !=
              vectorized.couplets[static_cast<std::size_t>(j)]) {
            verdict.detail = "trial " + std::to_string(trial) +
                             ": first differing couplet index " +
                             std::to_string(j);
            return verdict;
          }
        }
      }
    }
  } catch (const Error& e) {
    verdict.detail = e.what();
    return verdict;
  }

  verdict.passed = true;
  return verdict;
}

int run_verify(const SetSelection& selection, int trials, std::uint64_t seed,
               bool inject_swap_bug, std::ostream& out, std::ostream& err) {
  int exit_code = kExitOk;
  std::vector<ParameterSet> sets = selection.resolve(err, exit_code);
  if (sets.empty()) return exit_code == kExitOk ? kExitUsage : exit_code;
  std::sort(sets.begin(), sets.end(),
            [](const ParameterSet& a, const ParameterSet& b) { return a.n < b.n; });

  // Sets are independent; run them concurrently and report in n order.
  std::vector<std::future<SetVerdict>> futures;
  futures.reserve(sets.size());
  for (const ParameterSet& set : sets) {
    futures.push_back(std::async(std::launch::async, verify_set, set, trials,
                                 seed, inject_swap_bug));
  }

  bool all_passed = true;
  for (std::future<SetVerdict>& future : futures) {
    const SetVerdict verdict = future.get();
    if (verdict.passed) {
      out << "PASS n=" << verdict.n << " (" << trials << " trials)\n";
    } else {
      out << "FAIL n=" << verdict.n << ": " << verdict.detail << "\n";
      all_passed = false;
    }
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int run_bench(const SetSelection& selection, const std::string& format,
              bool per_phase, std::uint64_t phase_overhead,
              const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  int exit_code = kExitOk;
  std::vector<ParameterSet> sets = selection.resolve(err, exit_code);
  if (sets.empty()) return exit_code == kExitOk ? kExitUsage : exit_code;
  std::sort(sets.begin(), sets.end(),
            [](const ParameterSet& a, const ParameterSet& b) { return a.n < b.n; });

  const MachineModel mm;
  std::vector<CostComparison> rows;
  rows.reserve(sets.size());
  for (const ParameterSet& set : sets) {
    rows.push_back(compare(set, mm, phase_overhead));
  }

  return with_output(out_path, out, err, false, [&](std::ostream& os) {
    if (format == "text") {
      write_scaling_text(rows, os);
    } else {
      write_scaling_csv(rows, os, per_phase);
    }
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"DVB-RCS2 turbo-encoder interleaver tool"};
  app.require_subcommand(1);

  SetSelection lut_sel;
  std::string lut_out;
  CLI::App* lut_cmd = app.add_subcommand("lut", "export the permutation LUT as CSV");
  lut_sel.add_options(*lut_cmd, false);
  lut_cmd->add_option("--out", lut_out, "output path (default stdout)");

  SetSelection il_sel;
  std::string il_in, il_out, il_impl = "vector";
  CLI::App* il_cmd = app.add_subcommand("interleave", "interleave a couplet file");
  il_sel.add_options(*il_cmd, false);
  il_cmd->add_option("--in", il_in, "input file (.rcs2 binary or text)")->required();
  il_cmd->add_option("--out", il_out, "output file, same format as input")->required();
  il_cmd->add_option("--impl", il_impl, "implementation: serial|vector")
      ->check(CLI::IsMember({"serial", "vector"}));

  SetSelection verify_sel;
  int verify_trials = 25;
  std::uint64_t verify_seed = 0;
  bool inject_swap_bug = false;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check the vector pipeline against the serial baseline");
  verify_sel.add_options(*verify_cmd, true);
  verify_cmd->add_option("--trials", verify_trials, "random blocks per set")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed, "base seed for the trial corpus");
  verify_cmd
      ->add_flag("--inject-swap-bug", inject_swap_bug,
                 "deliberately break the word swap (test only)")
      ->group("");

  SetSelection bench_sel;
  std::string bench_format = "csv", bench_out;
  bool bench_per_phase = false;
  std::uint64_t bench_overhead = 0;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "emit the access-count comparison table");
  bench_sel.add_options(*bench_cmd, true);
  bench_cmd->add_option("--format", bench_format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  bench_cmd->add_flag("--per-phase", bench_per_phase,
                      "add per-phase rows to the CSV");
  bench_cmd->add_option("--phase-overhead", bench_overhead,
                        "extra transactions charged per executed phase");
  bench_cmd->add_option("--out", bench_out, "output path (default stdout)");

  std::string params_out;
  CLI::App* params_cmd =
      app.add_subcommand("params", "export the parameter registry as CSV");
  params_cmd->add_option("--out", params_out, "output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (lut_cmd->parsed()) return run_lut(lut_sel, lut_out, out, err);
    if (il_cmd->parsed())
      return run_interleave(il_sel, il_in, il_out, il_impl, err);
    if (verify_cmd->parsed())
      return run_verify(verify_sel, verify_trials, verify_seed,
                        inject_swap_bug, out, err);
    if (bench_cmd->parsed())
      return run_bench(bench_sel, bench_format, bench_per_phase,
                       bench_overhead, bench_out, out, err);
    if (params_cmd->parsed()) return run_params(params_out, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rcs2::cli
