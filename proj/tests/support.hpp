#pragma once

// Test-only helpers: seeded parameter generators and a subprocess runner.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "epikin/model.hpp"

namespace epikin::test {

class Draws {
public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// SIS set with |beta| bounded away from zero and moderate stiffness.
  SisParameters sis() {
    for (;;) {
      SisParameters p;
      p.r = uniform(0.2, 1.5);
      p.k = uniform(0.5, 2.0);
      p.alpha = uniform(0.05, 1.5);
      p.i0 = p.k * uniform(0.01, 0.99);
      if (std::abs(p.r * p.k - p.alpha) > 0.05) return p;
    }
  }

  /// SIS set with beta > 0.
  SisParameters sis_endemic() {
    for (;;) {
      SisParameters p = sis();
      if (p.r * p.k - p.alpha > 0.05) return p;
    }
  }

  /// Admissible SIR set (s0 + i0 <= 1) with |lambda| bounded away from zero.
  SirParameters sir() {
    for (;;) {
      SirParameters p;
      p.beta = uniform(0.3, 2.0);
      p.mu = uniform(0.02, 0.5);
      p.s0 = uniform(0.05, 0.95);
      p.i0 = uniform(0.01, 1.0 - p.s0);
      if (std::abs(sir_composites(p).lambda) > 0.05) return p;
    }
  }

  /// SIR set on the exact sub-case s0 + i0 = 1.
  SirParameters sir_unit() {
    for (;;) {
      SirParameters p;
      p.beta = uniform(0.3, 2.0);
      p.mu = uniform(0.02, 0.5);
      p.i0 = uniform(0.01, 0.5);
      p.s0 = 1.0 - p.i0;
      if (std::abs(sir_composites(p).lambda) > 0.05) return p;
    }
  }

  /// SIR set with C != 0, beta > mu and lambda > 0, so both asymptotes exist.
  SirParameters sir_biased() {
    for (;;) {
      SirParameters p;
      p.beta = uniform(0.5, 2.0);
      p.mu = uniform(0.05, 0.3);
      p.s0 = uniform(0.3, 0.85);
      p.i0 = uniform(0.02, 0.1);
      const SirComposites c = sir_composites(p);
      if (std::abs(c.c) > 0.02 && p.beta > p.mu + 0.2 && c.lambda > 0.1) return p;
    }
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/epikin_" + std::to_string(::getpid()) + "_" + name;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

/// Runs the epikin executable with `args` (already shell-quoted).
inline CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string tag = std::to_string(counter++);
  const std::string out_file = temp_path("out" + tag);
  const std::string err_file = temp_path("err" + tag);
  const std::string cmd =
      std::string(EPIKIN_CLI_PATH) + " " + args + " >" + out_file + " 2>" + err_file;
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return r;
}

inline std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace epikin::test
