#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "rrw/cli.hpp"

namespace {

std::set<int> to_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

void add_common(CLI::App* sub, std::string& format, std::optional<std::string>& output) {
  sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("-o,--output", output, "write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for weighted Rogers-Ramanujan type identities and their partition refinements"};
  app.require_subcommand(1);

  rrw::RunConfig cfg;
  std::string format = "text";
  std::vector<int> residues, forbidden, extra;

  auto* verify = app.add_subcommand("verify", "expand both sides of catalog identities and compare");
  verify->add_option("--id", cfg.id, "catalog id or \"all\"");
  verify->add_option("--param", cfg.param, "value of the family parameter M");
  verify->add_option("--order", cfg.order, "truncation order (default $RRW_ORDER or 60)");
  add_common(verify, format, cfg.output);

  auto* enumerate = app.add_subcommand("enumerate", "list the partitions of n in a class");
  enumerate->add_option("--class", cfg.class_name, "diff2, diff2_star or congruence");
  enumerate->add_option("-n,--n", cfg.n, "size")->required();
  enumerate->add_option("--modulus", cfg.modulus, "congruence modulus");
  enumerate->add_option("--residues", residues, "allowed residues, comma separated")->delimiter(',');
  enumerate->add_option("--forbidden", forbidden, "parts excluded despite their residue")->delimiter(',');
  enumerate->add_option("--extra", extra, "parts allowed despite their residue")->delimiter(',');
  add_common(enumerate, format, cfg.output);

  auto* table = app.add_subcommand("table", "print the weight-preserving bijection for one n");
  table->add_option("--id", cfg.id, "statement id")->required();
  table->add_option("--param", cfg.param, "value of the family parameter M");
  table->add_option("-n,--n", cfg.n, "size")->required();
  table->add_option("--signature", cfg.signature, "restrict to one weight class, e.g. \"(2)\" or \"(1,0,1)\"");
  add_common(table, format, cfg.output);

  auto* refine = app.add_subcommand("refine-check", "compare refined counts from both classes and the series");
  refine->add_option("--id", cfg.id, "statement id or \"all\"");
  refine->add_option("--param", cfg.param, "value of the family parameter M");
  refine->add_option("--n-max", cfg.n_max, "largest n to check");
  add_common(refine, format, cfg.output);

  auto* discover = app.add_subcommand("discover", "solve for unknown numerator coefficients");
  discover->add_option("problem", cfg.problem, "problem file")->required();
  add_common(discover, format, cfg.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rrw::exit_code::usage;
  }

  if (verify->parsed()) cfg.command = rrw::Command::verify;
  if (enumerate->parsed()) cfg.command = rrw::Command::enumerate;
  if (table->parsed()) cfg.command = rrw::Command::table;
  if (refine->parsed()) cfg.command = rrw::Command::refine_check;
  if (discover->parsed()) cfg.command = rrw::Command::discover;
  cfg.format = rrw::parse_format(format);
  cfg.residues = to_set(residues);
  cfg.forbidden = to_set(forbidden);
  cfg.extra = to_set(extra);

  return rrw::run(cfg, std::cout, std::cerr);
}
