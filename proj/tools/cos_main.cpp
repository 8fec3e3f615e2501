// Command-line front end for the event scheduling toolkit. Subcommands cover
// solving, verification, repair, trace construction, dataset emission,
// instance generation, the hardness-reduction generator, and benchmarking.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "cos/bench.hpp"
#include "cos/json_io.hpp"
#include "cos/repair.hpp"
#include "cos/trace.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::string> parse_sequence(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    text = cosched::read_text_file(arg.substr(1));
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("sequence is not a JSON array: ") +
                                e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("sequence must be an array");
  return j.get<std::vector<std::string>>();
}

void emit(const json& j, const std::string& out_path, bool pretty) {
  std::string text = pretty ? j.dump(2) : j.dump();
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    out << text << "\n";
  }
}

std::vector<cosched::Instance> load_instances(
    const std::vector<std::string>& paths) {
  std::vector<cosched::Instance> out;
  for (const std::string& p : paths) out.push_back(cosched::load_instance(p));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event scheduling toolkit: exact and heuristic solvers, "
               "schedule verification and repair, scheduling-trace datasets, "
               "and a benchmark harness"};
  app.require_subcommand(1);

  // Shared option storage; each subcommand registers the flags it uses.
  std::vector<std::string> instance_paths;
  std::string sequence_arg;
  std::string out_path;
  std::string graph_path;
  std::string log_path;
  std::string external_dir;
  std::string methods_arg = "dp,greedy,ga";
  std::string format_arg = "csv";
  bool pretty = false;
  bool allow_large = false;
  int k = 3;
  cosched::GaConfig ga;
  cosched::GenConfig gen;
  gen.n_events = 20;
  int gen_count = 1;
  int repeats = 1;
  int jobs = 1;

  auto add_instance = [&](CLI::App* cmd, bool multiple = false) {
    auto* opt = cmd->add_option("--instance", instance_paths,
                                "Instance JSON file");
    opt->required();
    if (!multiple) opt->expected(1);
  };

  auto* solve = app.add_subcommand("solve", "Exact top-k dynamic programming");
  add_instance(solve);
  solve->add_option("--k", k, "Number of candidates");
  solve->add_flag("--pretty", pretty);
  solve->add_option("--out", out_path);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive top-k enumeration");
  add_instance(oracle);
  oracle->add_option("--k", k);
  oracle->add_flag("--allow-large", allow_large,
                   "Lift the 16-event size guard");
  oracle->add_flag("--pretty", pretty);
  oracle->add_option("--out", out_path);

  auto* greedy = app.add_subcommand("greedy", "Greedy baseline");
  add_instance(greedy);
  greedy->add_flag("--pretty", pretty);
  greedy->add_option("--out", out_path);

  auto* ga_cmd = app.add_subcommand("ga", "Genetic-algorithm baseline");
  add_instance(ga_cmd);
  ga_cmd->add_option("--seed", ga.seed);
  ga_cmd->add_option("--population", ga.population_size);
  ga_cmd->add_option("--generations", ga.generations);
  ga_cmd->add_option("--mutation-rate", ga.mutation_rate);
  ga_cmd->add_option("--crossover-rate", ga.crossover_rate);
  ga_cmd->add_flag("--pretty", pretty);
  ga_cmd->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "List feasibility violations");
  add_instance(verify);
  verify->add_option("--sequence", sequence_arg,
                     "JSON array of event ids, or @file")->required();
  verify->add_flag("--pretty", pretty);
  verify->add_option("--out", out_path);

  auto* repair = app.add_subcommand("repair", "Repair an invalid schedule");
  add_instance(repair);
  repair->add_option("--sequence", sequence_arg,
                     "JSON array of event ids, or @file")->required();
  repair->add_flag("--pretty", pretty);
  repair->add_option("--out", out_path);

  auto* trace = app.add_subcommand("trace", "Render a scheduling trace");
  add_instance(trace);
  trace->add_option("--k", k);
  trace->add_option("--out", out_path);

  auto* sft = app.add_subcommand("emit-sft", "Emit an SFT dataset (JSONL)");
  add_instance(sft, true);
  sft->add_option("--k", k);
  sft->add_option("--out", out_path);

  auto* gen_cmd = app.add_subcommand("gen", "Generate synthetic instances");
  gen_cmd->add_option("--n", gen.n_events, "Events per instance");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--count", gen_count, "Number of instances");
  gen_cmd->add_option("--window", gen.day_window, "Day window (minutes)");
  gen_cmd->add_option("--durations", gen.duration_range,
                      "Event duration range (minutes)");
  gen_cmd->add_option("--area", gen.area_km, "Square side (km)");
  gen_cmd->add_option("--speed", gen.speed_km_per_min, "Travel speed (km/min)");
  gen_cmd->add_option("--out", out_path,
                      "Output file (count 1) or filename prefix");

  auto* reduce = app.add_subcommand(
      "reduce", "Build a scheduling instance from a digraph");
  reduce->add_option("--graph", graph_path,
                     "Digraph JSON {n, edges:[[u,v],...]}")->required();
  reduce->add_option("--out", out_path);

  auto* bench = app.add_subcommand("bench", "Run methods and report metrics");
  bench->add_option("--instance", instance_paths, "Instance JSON files");
  bench->add_option("--gen-n", gen.n_events, "Generate instances instead");
  bench->add_option("--gen-count", gen_count);
  bench->add_option("--gen-seed", gen.seed);
  bench->add_option("--methods", methods_arg,
                    "Comma list of dp,exhaustive,greedy,ga,external");
  bench->add_option("--k", k);
  bench->add_option("--repeats", repeats);
  bench->add_option("--jobs", jobs, "Concurrent (method,instance) cells");
  bench->add_option("--seed", ga.seed, "GA seed");
  bench->add_option("--format", format_arg)->check(
      CLI::IsMember({"csv", "markdown"}));
  bench->add_option("--external-dir", external_dir,
                    "Directory of <user_id>.txt or .json model outputs");
  bench->add_option("--log", log_path, "Per-run JSONL log file");
  bench->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) {
      cosched::Instance inst = cosched::load_instance(instance_paths.at(0));
      emit(cosched::topk_to_json(cosched::solve_dp_topk(inst, k)), out_path, pretty);
    } else if (oracle->parsed()) {
      cosched::Instance inst = cosched::load_instance(instance_paths.at(0));
      emit(cosched::topk_to_json(cosched::solve_exhaustive(inst, k, allow_large)),
           out_path, pretty);
    } else if (greedy->parsed()) {
      cosched::Instance inst = cosched::load_instance(instance_paths.at(0));
      emit(cosched::schedule_to_json(cosched::solve_greedy(inst)), out_path, pretty);
    } else if (ga_cmd->parsed()) {
      cosched::Instance inst = cosched::load_instance(instance_paths.at(0));
      emit(cosched::schedule_to_json(cosched::solve_genetic(inst, ga)), out_path,
           pretty);
    } else if (verify->parsed()) {
      cosched::Instance inst = cosched::load_instance(instance_paths.at(0));
      auto seq = parse_sequence(sequence_arg);
      emit(cosched::violations_to_json(cosched::check_feasible(inst, seq)), out_path,
           pretty);
    } else if (repair->parsed()) {
      cosched::Instance inst = cosched::load_instance(instance_paths.at(0));
      auto seq = parse_sequence(sequence_arg);
      emit(cosched::repair_to_json(cosched::repair_schedule(inst, seq)), out_path,
           pretty);
    } else if (trace->parsed()) {
      cosched::Instance inst = cosched::load_instance(instance_paths.at(0));
      std::string text = cosched::render_trace(cosched::build_trace(inst, k), inst);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
      }
    } else if (sft->parsed()) {
      auto instances = load_instances(instance_paths);
      if (out_path.empty()) {
        cosched::emit_sft_dataset(instances, k, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        std::cerr << cosched::emit_sft_dataset(instances, k, out)
                  << " records written\n";
      }
    } else if (gen_cmd->parsed()) {
      for (int i = 0; i < gen_count; ++i) {
        cosched::GenConfig cfg = gen;
        cfg.seed = gen.seed + static_cast<std::uint64_t>(i);
        cosched::Instance inst = cosched::generate_instance(cfg);
        if (gen_count == 1 && out_path.empty()) {
          std::cout << cosched::instance_to_json(inst).dump(2) << "\n";
        } else if (gen_count == 1) {
          cosched::save_instance(inst, out_path);
        } else {
          std::string prefix = out_path.empty() ? "instance_" : out_path;
          char suffix[32];
          std::snprintf(suffix, sizeof(suffix), "%03d.json", i);
          cosched::save_instance(inst, prefix + suffix);
        }
      }
    } else if (reduce->parsed()) {
      json j = json::parse(cosched::read_text_file(graph_path));
      cosched::Digraph g;
      g.n = j.at("n").get<int>();
      for (const json& e : j.at("edges")) {
        g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
      }
      cosched::Instance inst = cosched::reduce_dhp(g);
      if (out_path.empty()) {
        std::cout << cosched::instance_to_json(inst).dump(2) << "\n";
      } else {
        cosched::save_instance(inst, out_path);
      }
    } else if (bench->parsed()) {
      std::vector<cosched::Instance> instances;
      if (!instance_paths.empty()) {
        instances = load_instances(instance_paths);
      } else {
        for (int i = 0; i < gen_count; ++i) {
          cosched::GenConfig cfg = gen;
          cfg.seed = gen.seed + static_cast<std::uint64_t>(i);
          instances.push_back(cosched::generate_instance(cfg));
        }
      }
      std::vector<cosched::Method> methods;
      std::stringstream ms(methods_arg);
      std::string name;
      while (std::getline(ms, name, ',')) {
        auto m = cosched::method_from_name(name);
        if (!m) throw std::invalid_argument("unknown method: " + name);
        methods.push_back(*m);
      }
      cosched::BenchOptions options;
      options.k = k;
      options.repeats = repeats;
      options.jobs = jobs;
      options.ga = ga;
      if (!external_dir.empty()) {
        for (const cosched::Instance& inst : instances) {
          fs::path txt = fs::path(external_dir) / (inst.user_id + ".txt");
          fs::path js = fs::path(external_dir) / (inst.user_id + ".json");
          if (fs::exists(txt)) {
            options.external_texts[inst.user_id] =
                cosched::read_text_file(txt.string());
          } else if (fs::exists(js)) {
            json j = json::parse(cosched::read_text_file(js.string()));
            options.external_texts[inst.user_id] =
                j.at("text").get<std::string>();
          }
        }
      }
      std::ofstream log_file;
      if (!log_path.empty()) {
        log_file.open(log_path);
        if (!log_file) throw std::runtime_error("cannot write " + log_path);
        options.log = &log_file;
      }
      cosched::BenchReport report = cosched::run_bench(instances, methods, options);
      cosched::ReportFormat fmt = format_arg == "csv" ? cosched::ReportFormat::Csv
                                                  : cosched::ReportFormat::Markdown;
      if (out_path.empty()) {
        cosched::write_report(report, fmt, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        cosched::write_report(report, fmt, out);
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
