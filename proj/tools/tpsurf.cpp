#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "tpsurf/cli.hpp"

namespace cli = tpsurf::cli;

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw tpsurf::ParseError(0, 0, "cannot open " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

int emit(const cli::Outcome& out, bool as_json) {
  if (as_json)
    std::cout << out.report.dump(2) << '\n';
  else
    std::cout << cli::render_text(out.report);
  if (!as_json && !out.report["error"].is_null())
    std::cerr << "error: " << out.report["error"]["message"].get<std::string>() << '\n';
  return out.exit_code;
}

// Parse failures happen before a report exists; shape them like one.
int parse_failure(const char* command, const tpsurf::Error& e, bool as_json) {
  cli::Outcome out;
  out.report["command"] = command;
  out.report["error"] = cli::detail::error_json(e);
  out.exit_code = cli::exit_code(e.code());
  return emit(out, as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implicitization of tensor product surfaces through linear syzygies"};
  app.require_subcommand(1);

  cli::Options opt;
  bool as_json = false;
  std::string file;
  std::vector<int> box;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "input file, or - for stdin")->required();
    sub->add_flag("--json", as_json, "print the report as JSON");
    sub->add_option("--box", box, "syzygy box m n")->expected(2);
    sub->add_option("--max-strand", opt.limits.max_strand_columns, "largest strand (columns) to form");
  };

  auto* analyze = app.add_subcommand("analyze", "run the full pipeline on a surface");
  add_common(analyze);
  auto* seed_opt = analyze->add_option("--seed", seed, "seed for the randomized basepoint search");
  analyze->add_flag("--fast-det", opt.fast_det, "evaluation/interpolation determinant");
  analyze->add_flag("--allow-basepoints", opt.allow_basepoints, "continue without a basepoint-free certificate");
  analyze->add_option("--trials", opt.trials, "finite-field trials in the basepoint search")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--max-det", opt.limits.max_det_size, "largest determinant to expand");

  auto* betti = app.add_subcommand("betti", "minimal first-syzygy bidegrees inside a box");
  add_common(betti);

  auto* random = app.add_subcommand("random", "print a random input file");
  int ra = 2, rb = 2;
  std::string mode = "with-linear-syzygy";
  std::uint64_t rseed = 1;
  random->add_option("a", ra)->required()->check(CLI::PositiveNumber);
  random->add_option("b", rb)->required()->check(CLI::PositiveNumber);
  random->add_option("--mode", mode)->check(CLI::IsMember({"with-linear-syzygy", "dense"}));
  random->add_option("--seed", rseed);

  auto* verify = app.add_subcommand("verify", "check F(p0,p1,p2,p3) = 0");
  std::string F;
  verify->add_option("file", file, "input file, or - for stdin")->required();
  verify->add_option("F", F, "form in x0..x3")->required();
  verify->add_flag("--json", as_json, "print the report as JSON");

  CLI11_PARSE(app, argc, argv);

  if (random->parsed()) {
    std::cout << cli::cmd_random(ra, rb,
                                 mode == "dense" ? cli::RandomMode::Dense : cli::RandomMode::WithLinearSyzygy, rseed);
    return 0;
  }

  const char* command = analyze->parsed() ? "analyze" : betti->parsed() ? "betti" : "verify";
  cli::SurfaceInput in;
  try {
    in = cli::parse_input(read_all(file));
  } catch (const tpsurf::Error& e) {
    return parse_failure(command, e, as_json);
  }
  if (box.size() == 2) {
    if (box[0] < 0 || box[1] < 0)
      return parse_failure(command, tpsurf::ParseError(0, 0, "box entries must be nonnegative"), as_json);
    opt.box = tpsurf::BiDeg{box[0], box[1]};
  }
  if (*seed_opt) opt.seed = seed;

  try {
    if (analyze->parsed()) return emit(cli::cmd_analyze(in, opt), as_json);
    if (betti->parsed()) return emit(cli::cmd_betti(in, opt), as_json);
    return emit(cli::cmd_verify(in, F), as_json);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
