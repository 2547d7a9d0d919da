#include "cli.hpp"

#include "a2l2/checks.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace a2l2::cli {

namespace {

int max_l_from_env() {
  const char* raw = std::getenv("A2L2_MAX_L");
  if (!raw || !*raw) return default_max_l();
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0' || v < 1) throw UsageError(std::string("A2L2_MAX_L must be a positive integer, got '") + raw + "'");
  return v;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> ids;
  if (s == "all") return ids;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ids.push_back(item);
  if (ids.empty()) throw UsageError("--checks needs at least one id");
  return ids;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the nu-twisted classification for sl(2l+1) at level -l-1/2"};
  app.name("a2l2");
  app.require_subcommand(1);

  int l = 0;
  std::string checks = "all";
  std::string format = "text";
  std::string out_path;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run the check registry");
  verify->add_option("--l", l, "rank l")->required();
  verify->add_option("--checks", checks, "comma-separated check ids or 'all'");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report to this file");
  verify->add_flag("--timing", timing, "record elapsed_ms in JSON output");

  std::string object;
  auto* dump = app.add_subcommand("dump", "print one computed object");
  dump->add_option("--l", l, "rank l")->required();
  dump->add_option("--object", object, "singular | zhu-image | v1 | polys | weights")
      ->required()
      ->check(CLI::IsMember(dump_selectors()));

  std::string classify_format = "json";
  auto* classify = app.add_subcommand("classify", "list the classified highest weights");
  classify->add_option("--l", l, "rank l")->required();
  classify->add_option("--format", classify_format, "json")->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    const int max_l = max_l_from_env();
    if (*verify) {
      Report rep = run_checks(l, split_ids(checks), max_l);
      std::string text = render_report(rep, format == "json" ? ReportFormat::json : ReportFormat::text, timing);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError("cannot open '" + out_path + "' for writing");
        f << text;
      }
      return rep.pass() ? exit_pass : exit_fail;
    }
    if (*dump) {
      out << dump_object(l, object, max_l);
      return exit_pass;
    }
    Json j = classify_json(l, max_l);
    out << j.dump(2) << "\n";
    bool ok = j["zero_set_matches"].get<bool>();
    for (const auto& w : j["weights"]) ok = ok && w["admissible"].get<bool>();
    return ok ? exit_pass : exit_fail;
  } catch (const UsageError& e) {
    err << "a2l2: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "a2l2: " << e.what() << "\n";
    return exit_fail;
  }
}

}  // namespace a2l2::cli
