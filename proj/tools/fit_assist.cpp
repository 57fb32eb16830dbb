// Coarse grid search for the assistance-simulation defaults. Holds p_find,
// k_shown and strength at their defaults and scans critiquer hit rate and
// p_accept_valid for the pair whose assisted intended-critique discovery
// rate lands closest to the target.

#include <critlab/experiments.hpp>

#include <CLI11.hpp>

#include <cstdio>

int main(int argc, char** argv) {
  CLI::App app{"Fit assistance-simulation defaults by grid search"};
  int n = 4000;
  std::uint64_t seed = 1;
  double target = 0.45;
  int jobs = 4;
  app.add_option("--instances", n, "simulated answers per grid point")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "master seed");
  app.add_option("--target", target, "assisted intended-critique rate to hit")->check(CLI::Range(0.0, 1.0));
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  using namespace critlab;
  double best_err = 2.0, best_q = 0.0, best_a = 0.0;
  std::printf("hit_q\tp_accept_valid\tunassisted\tassisted\n");
  for (int qi = 1; qi <= 10; ++qi)
    for (int ai = 10; ai <= 20; ++ai) {
      experiments::AssistRun run;
      run.n_instances = n;
      run.master_seed = seed;
      run.bootstrap_resamples = 100;
      run.assist.critiquer = NoisyCritiquer{qi * 0.05};
      run.assist.p_accept_valid = ai * 0.05;
      const auto r = experiments::run_assist_sim(run, jobs);
      const double got = r.assisted.intended_found.value;
      std::printf("%.2f\t%.2f\t%.4f\t%.4f\n", qi * 0.05, ai * 0.05, r.unassisted.intended_found.value, got);
      if (std::abs(got - target) < best_err - 1e-12) {
        best_err = std::abs(got - target);
        best_q = qi * 0.05;
        best_a = ai * 0.05;
      }
    }
  std::printf("best: hit_q=%.2f p_accept_valid=%.2f (|error| %.4f)\n", best_q, best_a, best_err);
  return 0;
}
