#include <graded_orbits.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::vector<long long> parse_delta(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoll(item));
  return out;
}

int map_status(go_status rc) {
  if (rc == GO_OK)
    return kExitOk;
  if (rc == GO_ERR_VERIFY)
    return kExitVerifyFailure;
  return kExitUsage;
}

int fail(go_status rc) {
  std::cerr << "error: " << go_status_message(rc) << "\n";
  return map_status(rc);
}

struct ContextGuard {
  go_context* ctx = nullptr;
  ~ContextGuard() { go_context_free(ctx); }
};

int make_context(const std::string& family, int m, const std::string& delta,
                 ContextGuard& guard) {
  std::vector<long long> d;
  try {
    d = parse_delta(delta);
  } catch (const std::exception&) {
    std::cerr << "error: --delta expects a comma-separated integer list\n";
    return kExitUsage;
  }
  go_status rc = go_context_create(family.c_str(), m, d.data(), d.size(), &guard.ctx);
  if (rc != GO_OK)
    return fail(rc);
  return kExitOk;
}

int emit(go_status rc, char* text) {
  if (rc != GO_OK)
    return fail(rc);
  std::fputs(text, stdout);
  go_string_free(text);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit classification in the degree-2 part of graded classical Lie algebras"};
  app.require_subcommand(1);

  std::string family, delta, format = "json", half, tableau_file;
  int m = 1;
  bool dump_matrices = false;
  int max_m = 3;
  long long max_total_dim = 12;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "one of even-sp, even-so, odd-sp, odd-o, odd-so-special")
        ->required();
    cmd->add_option("--m", m, "number of positive-side graded pieces")->required();
    cmd->add_option("--delta", delta,
                    "positive-side graded dimensions, highest index first")
        ->required();
  };

  CLI::App* cmd_enum = app.add_subcommand("enumerate", "list every orbit");
  add_common(cmd_enum);
  cmd_enum->add_option("--format", format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* cmd_hasse = app.add_subcommand("hasse", "closure order as a DOT digraph");
  add_common(cmd_hasse);
  cmd_hasse->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));

  CLI::App* cmd_orbit =
      app.add_subcommand("orbit", "deep report for the orbit of a tableau file");
  add_common(cmd_orbit);
  cmd_orbit->add_option("tableau", tableau_file, "path to a tableau JSON file")->required();
  cmd_orbit->add_option("--half", half, "prime or doubleprime, for split orbits")
      ->check(CLI::IsMember({"prime", "doubleprime"}));
  cmd_orbit->add_flag("--dump-matrices", dump_matrices,
                      "include the realization matrices in the report");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run the invariant and oracle sweep");
  cmd_verify->add_option("--max-m", max_m, "largest m per family");
  cmd_verify->add_option("--max-total-dim", max_total_dim, "largest total dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (cmd_verify->parsed()) {
    char* summary = nullptr;
    go_status rc = go_verify(max_m, max_total_dim, &summary);
    if (summary) {
      std::fputs(summary, stdout);
      go_string_free(summary);
    }
    if (rc != GO_OK && rc != GO_ERR_VERIFY)
      return fail(rc);
    return map_status(rc);
  }

  ContextGuard guard;
  int rc = make_context(family, m, delta, guard);
  if (rc != kExitOk)
    return rc;

  char* text = nullptr;
  if (cmd_enum->parsed()) {
    go_status st = format == "tsv" ? go_enumerate_tsv(guard.ctx, &text)
                                   : go_enumerate_json(guard.ctx, &text);
    return emit(st, text);
  }
  if (cmd_hasse->parsed()) {
    go_status st = go_hasse_dot(guard.ctx, &text);
    return emit(st, text);
  }

  // orbit
  std::ifstream in(tableau_file);
  if (!in) {
    std::cerr << "error: cannot read " << tableau_file << "\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string tableau = buf.str();
  go_status st = go_orbit_report_for_tableau(guard.ctx, tableau.c_str(), half.c_str(),
                                             dump_matrices ? 1 : 0, &text);
  return emit(st, text);
}
