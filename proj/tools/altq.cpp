// altq: separate elements from finitely generated subgroups of free groups by
// explicit finite quotients, and check the resulting certificates.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altquot/cli.hpp"

namespace {

// "-" selects standard input.
std::istream* open_input(const std::string& path,
                         std::unique_ptr<std::ifstream>& holder) {
  if (path == "-") return &std::cin;
  holder = std::make_unique<std::ifstream>(path);
  if (!*holder) {
    std::cerr << "error: InvalidInput: cannot open " << path << '\n';
    return nullptr;
  }
  return holder.get();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace altquot::cli;

  CLI::App app{"Alternating and symmetric quotients separating subgroups of free groups"};
  app.require_subcommand(1);

  auto* separate = app.add_subcommand(
      "separate", "Build a separating quotient and print its certificate");
  std::string separate_path = "-";
  bool batch = false;
  unsigned jobs = 0;
  separate->add_option("instance", separate_path, "Instance JSON file, or - for stdin");
  separate->add_flag("--batch", batch, "Input is an array of instances");
  separate->add_option("-j,--jobs", jobs, "Worker threads for --batch (0 = all cores)");

  auto* member = app.add_subcommand("member", "Decide membership in a subgroup");
  std::size_t rank = 2;
  std::vector<std::string> subgroup;
  std::string word;
  member->add_option("-r,--rank", rank, "Rank of the free group")->required();
  member->add_option("-s,--subgroup", subgroup, "Subgroup generators")
      ->expected(0, -1);
  member->add_option("-w,--word", word, "Query word (empty for the identity)");

  auto* dot = app.add_subcommand("dot", "Export a stage of the construction as DOT");
  std::string stage = "core";
  std::string dot_path = "-";
  dot->add_option("--stage", stage, "core, z or cover")
      ->check(CLI::IsMember({"core", "z", "cover"}));
  dot->add_option("instance", dot_path, "Instance JSON file, or - for stdin");

  auto* verify = app.add_subcommand("verify", "Check a certificate against its instance");
  std::string instance_path;
  std::string certificate_path;
  bool json = false;
  verify->add_option("instance", instance_path, "Instance JSON file")->required();
  verify->add_option("certificate", certificate_path, "Certificate JSON file")->required();
  verify->add_flag("--json", json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (*separate) {
    std::unique_ptr<std::ifstream> holder;
    std::istream* in = open_input(separate_path, holder);
    if (!in) return kInvalidInput;
    return cmd_separate(*in, std::cout, std::cerr, batch, jobs);
  }
  if (*member) return cmd_member(rank, subgroup, word, std::cout, std::cerr);
  if (*dot) {
    std::unique_ptr<std::ifstream> holder;
    std::istream* in = open_input(dot_path, holder);
    if (!in) return kInvalidInput;
    const DotStage s = stage == "z"       ? DotStage::z
                       : stage == "cover" ? DotStage::cover
                                          : DotStage::core;
    return cmd_export_dot(s, *in, std::cout, std::cerr);
  }
  if (*verify) {
    std::unique_ptr<std::ifstream> inst_holder, cert_holder;
    std::istream* inst = open_input(instance_path, inst_holder);
    if (!inst) return kInvalidInput;
    std::istream* cert = open_input(certificate_path, cert_holder);
    if (!cert) return kInvalidInput;
    return cmd_verify(*inst, *cert, std::cout, std::cerr, json);
  }
  return kInvalidInput;
}
