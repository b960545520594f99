#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "figrf/pipeline.hpp"

namespace {

figrf::RunConfig build_config(const std::string& config_path, std::optional<std::uint64_t> seed,
                              std::optional<std::string> out_dir, std::optional<int> threads) {
  if (config_path.empty()) {
    throw std::runtime_error("--config is required for this subcommand");
  }
  figrf::RunConfig config = figrf::parse_config_file(config_path);
  if (seed) config.model_seed = *seed;
  if (out_dir) config.out_dir = *out_dir;
  if (threads) config.threads = *threads;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"figrf: importance-guided random forest pipeline"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  std::uint64_t seed_value = 0;
  std::string out_value;
  int threads_value = 0;
  bool seed_set = false, out_set = false, threads_set = false;

  app.add_option("--config", config_path, "pipeline config file");
  app.add_option("--seed", seed_value, "model seed (overrides the config)")
      ->each([&](const std::string&) { seed_set = true; });
  app.add_option("--out", out_value, "output directory (overrides the config)")
      ->each([&](const std::string&) { out_set = true; });
  app.add_option("--threads", threads_value, "tree-training threads, 0 = auto")
      ->each([&](const std::string&) { threads_set = true; });

  CLI::App* importance = app.add_subcommand("importance", "compute the feature importance profile");
  CLI::App* tune = app.add_subcommand("tune", "run simulated-annealing hyperparameter search");
  CLI::App* run = app.add_subcommand("run", "run the full pipeline and write all reports");
  CLI::App* predict = app.add_subcommand("predict", "predict labels for a CSV with a saved model");
  CLI::App* evaluate = app.add_subcommand("evaluate", "score a saved model against a labeled CSV");

  int tune_iterations = 0;
  double tune_temp = 0.0, tune_cooling = 0.0;
  std::uint64_t tune_seed = 0;
  bool tune_iterations_set = false, tune_temp_set = false, tune_cooling_set = false,
       tune_seed_set = false;
  tune->add_option("--iterations", tune_iterations, "annealing iterations")
      ->each([&](const std::string&) { tune_iterations_set = true; });
  tune->add_option("--initial-temp", tune_temp, "initial temperature")
      ->each([&](const std::string&) { tune_temp_set = true; });
  tune->add_option("--cooling-rate", tune_cooling, "geometric cooling rate in (0,1)")
      ->each([&](const std::string&) { tune_cooling_set = true; });
  tune->add_option("--seed", tune_seed, "model seed (overrides the global --seed)")
      ->each([&](const std::string&) { tune_seed_set = true; });

  std::string model_path, input_path, predict_output;
  predict->add_option("--model", model_path, "saved model.json")->required();
  predict->add_option("--input", input_path, "input CSV")->required();
  predict->add_option("--output", predict_output, "predictions CSV path (default: stdout)");
  evaluate->add_option("--model", model_path, "saved model.json")->required();
  evaluate->add_option("--input", input_path, "labeled input CSV");

  CLI11_PARSE(app, argc, argv);

  std::optional<std::uint64_t> seed_opt;
  std::optional<std::string> out_opt;
  std::optional<int> threads_opt;
  if (seed_set) seed_opt = seed_value;
  if (out_set) out_opt = out_value;
  if (threads_set) threads_opt = threads_value;

  try {
    if (importance->parsed()) {
      figrf::cmd_importance(build_config(config_path, seed_opt, out_opt, threads_opt));
      std::cout << "importance profile written\n";
    } else if (tune->parsed()) {
      figrf::RunConfig config = build_config(config_path, seed_opt, out_opt, threads_opt);
      if (tune_iterations_set) config.sa.max_iterations = tune_iterations;
      if (tune_temp_set) config.sa.initial_temperature = tune_temp;
      if (tune_cooling_set) config.sa.cooling_rate = tune_cooling;
      if (tune_seed_set) config.model_seed = tune_seed;
      const figrf::SaResult result = figrf::cmd_tune(config);
      std::cout << "best n_estimators=" << result.best.n_estimators << " max_depth="
                << (result.best.max_depth ? std::to_string(*result.best.max_depth) : "none")
                << " fitness=" << figrf::number_repr(result.best_fitness) << "\n";
    } else if (run->parsed()) {
      const figrf::RunConfig config = build_config(config_path, seed_opt, out_opt, threads_opt);
      const figrf::RunResult result = figrf::cmd_run(config);
      std::cout << "baseline accuracy=" << figrf::number_repr(result.baseline_report.accuracy)
                << " figrf accuracy=" << figrf::number_repr(result.figrf_report.accuracy)
                << " reports in " << config.out_dir << "\n";
    } else if (predict->parsed()) {
      if (!predict_output.empty()) {
        std::ofstream out(predict_output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + predict_output + "'");
        figrf::cmd_predict(model_path, input_path, out);
      } else {
        figrf::cmd_predict(model_path, input_path, std::cout);
      }
    } else if (evaluate->parsed()) {
      std::cout << figrf::metric_report_to_json(figrf::cmd_evaluate(model_path, input_path));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
