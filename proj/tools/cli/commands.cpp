#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli/arrangement_file.hpp"
#include "cli/report.hpp"
#include "cli/svg.hpp"
#include "clarr/analysis.hpp"

namespace clarr::cli {

namespace {

ArrangementMode mode_for(const CommonFlags& flags) {
  return flags.strict ? ArrangementMode::kConicLine : ArrangementMode::kAnyLinesAndConics;
}

AnalysisReport analyze_file(const std::string& path, const CommonFlags& flags) {
  AnalysisOptions options;
  options.seed = flags.seed;
  options.resolution.max_degree = flags.max_degree;
  return make_report(analyze(load_arrangement(path, mode_for(flags)), options));
}

}  // namespace

int analyze_command(const std::string& path, const CommonFlags& flags, std::ostream& out,
                    std::ostream& err) {
  try {
    const AnalysisReport report = analyze_file(path, flags);
    if (!flags.quiet) {
      out << (flags.format == Format::kJson ? render_json(report) : render_text(report));
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "clarr analyze: " << path << ": " << e.what() << "\n";
    return kExitError;
  }
}

int compare_command(const std::string& first, const std::string& second,
                    const CommonFlags& flags, bool invert_exit, std::ostream& out,
                    std::ostream& err) {
  try {
    AnalysisOptions options;
    options.seed = flags.seed;
    options.resolution.max_degree = flags.max_degree;
    const auto a = analyze(load_arrangement(first, mode_for(flags)), options);
    const auto b = analyze(load_arrangement(second, mode_for(flags)), options);
    const ZieglerVerdict verdict = is_weak_ziegler_pair(a, b);
    const AnalysisReport ra = make_report(a);
    const AnalysisReport rb = make_report(b);
    if (!flags.quiet) {
      out << (flags.format == Format::kJson ? render_compare_json(ra, rb, verdict)
                                            : render_compare_text(ra, rb, verdict));
    }
    const bool yes = verdict.is_pair != invert_exit;
    return yes ? kExitOk : kExitNo;
  } catch (const std::exception& e) {
    err << "clarr compare: " << e.what() << "\n";
    return kExitError;
  }
}

int render_command(const std::string& path, const std::string& window, double scale,
                   const std::string& output_path, std::ostream& out, std::ostream& err) {
  try {
    const std::string svg = render_svg(load_arrangement(path), parse_window(window), scale);
    if (output_path.empty() || output_path == "-") {
      out << svg;
    } else {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) {
        throw std::runtime_error("cannot write " + output_path);
      }
      file << svg;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "clarr render: " << e.what() << "\n";
    return kExitError;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of conic-line arrangements: weak combinatorics, Jacobian "
               "syzygies, Milnor algebra resolutions and weak Ziegler pairs"};
  app.require_subcommand(1);

  CommonFlags flags;
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", flags.seed, "seed of the generic coordinate-change stream");
    sub->add_option("--format", flags.format, "report format: text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--max-degree", flags.max_degree,
                    "highest syzygy degree searched (default 3 * curve degree)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--quiet", flags.quiet, "print nothing; report through the exit code");
    sub->add_flag("--strict", flags.strict, "require at least one line and one conic");
  };

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "analyze one arrangement file");
  analyze->add_option("file", path, "arrangement file")->required();
  add_common(analyze);

  std::string first;
  std::string second;
  bool invert_exit = false;
  auto* compare = app.add_subcommand("compare", "test two arrangements for a weak Ziegler pair");
  compare->add_option("first", first, "first arrangement file")->required();
  compare->add_option("second", second, "second arrangement file")->required();
  compare->add_flag("--invert-exit", invert_exit, "exit 0 when the pair is NOT weak Ziegler");
  add_common(compare);

  std::string window;
  std::string output;
  double scale = 20.0;
  auto* render = app.add_subcommand("render", "draw the affine part of an arrangement as SVG");
  render->add_option("file", path, "arrangement file")->required();
  render->add_option("--window", window, "xmin,xmax,ymin,ymax (rationals)")->required();
  render->add_option("--scale", scale, "pixels per unit")->check(CLI::PositiveNumber);
  render->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  if (*analyze) {
    return analyze_command(path, flags, out, err);
  }
  if (*compare) {
    return compare_command(first, second, flags, invert_exit, out, err);
  }
  return render_command(path, window, scale, output, out, err);
}

}  // namespace clarr::cli
