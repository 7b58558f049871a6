#pragma once

#include <string>
#include <vector>

namespace sextic::cli {

struct Common {
  int threads = 0;             // 0: SEXTIC_THREADS env or hardware count
  std::string format = "csv";  // csv | json (where both make sense)
  std::string output;          // file or prefix; empty writes to stdout
};

struct SolveOptions {
  Common common;
  double lambda = 0.0;
  int n = 0;
  int degree = 12;  // polynomial prefactor degree, 2k
};

struct GridOptions {
  int nx = 241, np = 241;
  double x_min = -6.0, x_max = 6.0, p_min = -12.0, p_max = 12.0;
};

struct PhasespaceOptions {
  Common common;
  double lambda = 0.0;
  int n = 0;
  int degree = 12;
  std::vector<std::string> kinds = {"wigner"};
  GridOptions grid;
};

struct MarginalsOptions {
  Common common;
  double lambda = 0.0;
  int n = 0;
  int degree = 12;
  std::vector<std::string> kinds = {"wigner"};
  std::string axis = "both";  // x | p | both
  GridOptions grid;
};

struct SweepOptions {
  Common common;
  double lambda_start = 0.0;
  double lambda_stop = 0.0;
  int steps = 1;  // 1: single lambda at lambda_start
  int n = 0;
  int degree = 12;
  bool strict = false;
  GridOptions grid;
};

struct CrjOptionsCli {
  Common common;
  double lambda_start = 0.0;
  double lambda_stop = 0.0;
  int steps = 1;
  int n = 0;
  int degree = 12;
};

struct CriticalOptions {
  Common common;
  int n = 0;
};

struct QesExactOptions {
  Common common;
  int n_max = 0;
};

struct ReproduceOptions {
  Common common;
};

int run_solve(const SolveOptions&);
int run_phasespace(const PhasespaceOptions&);
int run_marginals(const MarginalsOptions&);
int run_entropy(const SweepOptions&);
int run_crj(const CrjOptionsCli&);
int run_critical(const CriticalOptions&);
int run_qes_exact(const QesExactOptions&);
int run_reproduce(const ReproduceOptions&);

}  // namespace sextic::cli
