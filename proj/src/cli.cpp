#include "conirr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "conirr/fixtures.hpp"
#include "conirr/io.hpp"
#include "conirr/verify.hpp"

namespace conirr::cli {

namespace {

std::size_t face_limit_from_env() {
  const char* env = std::getenv("CONE_FACE_LIMIT");
  if (!env || !*env) return kDefaultFaceLimit;
  try {
    const long long v = std::stoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw InputError(std::string("CONE_FACE_LIMIT must be a positive integer (got \"") + env + "\")");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ProblemInstance load_problem(const std::string& path) {
  try {
    return parse_problem(read_file(path), face_limit_from_env());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what(), e.line());
  }
}

Json digraph_to_json(const BipartiteDigraph& g, bool from_b) {
  Json arcs = Json::array();
  for (const auto& [i, j] : g.row_to_col)
    arcs.push_back({"u" + std::to_string(i + 1), "v" + std::to_string(j + 1)});
  for (const auto& [j, i] : g.col_to_row)
    arcs.push_back({"v" + std::to_string(j + 1), "u" + std::to_string(i + 1)});
  return Json{{"source", from_b ? "B" : "Btilde"},
              {"row_vertices", g.row_vertices},
              {"col_vertices", g.col_vertices},
              {"arcs", std::move(arcs)},
              {"strongly_connected", is_strongly_connected(g)}};
}

int exit_for(Verdict v) {
  return v == Verdict::ReducibleWithWitness || v == Verdict::HypothesisFailed ? kHypothesisFailure
                                                                                : kVerdict;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-irreducibility analysis for products A*B over polyhedral cones"};
  app.require_subcommand(1);

  std::string file;
  std::string report_file;
  std::string dot_path;
  bool with_oracle = false;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  Index max_dim = 3;
  Index max_gens = 4;
  unsigned jobs = 1;
  std::string fixture;

  auto* faces_cmd = app.add_subcommand("faces", "List the face lattice as extremal index sets");
  faces_cmd->add_option("file", file, "problem file")->required();

  auto* check_cmd = app.add_subcommand("check", "Check the hypotheses and print certificates");
  check_cmd->add_option("file", file, "problem file")->required();

  auto* digraph_cmd = app.add_subcommand("digraph", "Build G_{A,B} and test strong connectivity");
  digraph_cmd->add_option("file", file, "problem file")->required();
  digraph_cmd->add_option("--dot", dot_path, "write DOT to this path ('-' for stdout)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full criterion pipeline");
  analyze_cmd->add_option("file", file, "problem file")->required();
  analyze_cmd->add_flag("--oracle", with_oracle, "cross-check with face enumeration");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Differential test of criterion against oracle");
  fuzz_cmd->add_option("--seed", seed, "base seed");
  fuzz_cmd->add_option("--trials", trials, "number of random trials")->required();
  fuzz_cmd->add_option("--max-dim", max_dim, "largest ambient dimension")->check(CLI::Range(1, 4));
  fuzz_cmd->add_option("--max-gens", max_gens, "largest generator count")->check(CLI::Range(1, 6));
  fuzz_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  auto* fixture_cmd = app.add_subcommand("fixture", "Print a built-in fixture file");
  fixture_cmd->add_option("name", fixture, "EX1, EX2, EX3, EX4, EX4_SPARSE or CEX")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Re-check an analyze report by substitution");
  verify_cmd->add_option("file", file, "problem file")->required();
  verify_cmd->add_option("report", report_file, "JSON report from analyze")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerdict;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    if (faces_cmd->parsed()) {
      const ProblemInstance inst = load_problem(file);
      out << faces_to_json(inst.cone).dump(2) << "\n";
      return kVerdict;
    }
    if (check_cmd->parsed()) {
      const ProblemInstance inst = load_problem(file);
      AnalysisReport r;
      r.hypothesis_imA = check_imA_hypothesis(inst.a, inst.cone);
      r.hypothesis_quasipos = family_quasipositive(inst.a, inst.btilde, inst.cone);
      const Json j = report_to_json(r);
      out << Json{{"hypothesis_imA", j["hypothesis_imA"]},
                  {"hypothesis_quasipos", j["hypothesis_quasipos"]}}
                 .dump(2)
          << "\n";
      return r.hypotheses_hold() ? kVerdict : kHypothesisFailure;
    }
    if (digraph_cmd->parsed()) {
      const ProblemInstance inst = load_problem(file);
      const BipartiteDigraph g = inst.b ? build_GAB(inst.a, *inst.b) : build_GAB(inst.a, inst.btilde);
      if (dot_path == "-") {
        out << to_dot(g);
        return kVerdict;
      }
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path, std::ios::binary);
        if (!dot) throw InputError("cannot write " + dot_path);
        dot << to_dot(g);
      }
      out << digraph_to_json(g, inst.b.has_value()).dump(2) << "\n";
      return kVerdict;
    }
    if (analyze_cmd->parsed()) {
      const ProblemInstance inst = load_problem(file);
      try {
        const AnalysisReport r = analyze(inst, {.run_oracle = with_oracle});
        out << report_to_json(r).dump(2) << "\n";
        return exit_for(r.verdict);
      } catch (const SoundnessViolation& e) {
        out << report_to_json(e.report()).dump(2) << "\n";
        err << "soundness violation: " << e.what() << "\n";
        return kSoundness;
      }
    }
    if (fuzz_cmd->parsed()) {
      FuzzOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.bounds = {max_dim, max_gens};
      opt.jobs = jobs;
      try {
        out << fuzz_stats_to_json(fuzz_agreement(opt)).dump(2) << "\n";
        return kVerdict;
      } catch (const FuzzSoundnessViolation& e) {
        out << fuzz_stats_to_json(e.stats()).dump(2) << "\n";
        err << "soundness violation: " << e.what() << "\n";
        return kSoundness;
      }
    }
    if (fixture_cmd->parsed()) {
      load_fixture(fixture);
      out << fixture_text(fixture);
      return kVerdict;
    }
    if (verify_cmd->parsed()) {
      const ProblemInstance inst = load_problem(file);
      Json j;
      try {
        j = Json::parse(read_file(report_file));
      } catch (const Json::parse_error& e) {
        throw InputError(report_file + ": " + e.what());
      }
      const auto problems = verify_report(inst, report_from_json(j));
      for (const auto& p : problems) err << p << "\n";
      out << Json{{"verified", problems.empty()}, {"problems", problems}}.dump(2) << "\n";
      return problems.empty() ? kVerdict : kSoundness;
    }
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const FaceCountLimit& e) {
    err << e.what() << " (raise CONE_FACE_LIMIT to continue)\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace conirr::cli
