#include <CLI11.hpp>

#include <functional>
#include <iostream>

#include "cayley/commands.hpp"

using namespace cay;

namespace {

struct Output {
  std::string format = "json";
};

void add_format(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "text"}));
}

int emit(const cli::Report& r, const Output& out) {
  if (out.format == "json") {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::cout << r.to_text();
  }
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley degree verifier: torus-level constructions, degree oracles and exact checks"};
  app.require_subcommand(1);
  Output out;

  cli::SlnOptions sln;
  auto* c_sln = app.add_subcommand("verify-sln", "Verify the SL_n construction for every root-of-unity choice");
  c_sln->add_option("--n", sln.n, "Rank parameter n")->required();
  c_sln->add_option("--prime", sln.prime, "Prime p = 1 mod n (default: smallest such p >= 211)");
  c_sln->add_option("--zeta", sln.zeta, "Root index k in 1..n-1 (default: all)");
  c_sln->add_option("--seed", sln.seed, "Random seed");
  c_sln->add_option("--samples", sln.samples, "Projection samples");
  add_format(c_sln, out);

  cli::G2Options g2;
  auto* c_g2 = app.add_subcommand("verify-g2", "Verify the G_2 construction");
  c_g2->add_option("--prime", g2.prime, "Prime for sampling and enumeration");
  c_g2->add_flag("--brute", g2.brute, "Also enumerate fibers over F_p");
  c_g2->add_option("--seed", g2.seed, "Random seed");
  c_g2->add_option("--samples", g2.samples, "Projection samples");
  add_format(c_g2, out);

  cli::SexticOptions sx;
  auto* c_sx = app.add_subcommand("sextic", "Eliminate t2 from the G_2 system and print the sextic in t1");
  c_sx->add_flag("--check", sx.check, "Compare with the reference and run consistency samples");
  c_sx->add_option("--prime", sx.prime, "Prime for consistency samples");
  c_sx->add_option("--samples", sx.samples, "Consistency samples");
  c_sx->add_option("--seed", sx.seed, "Random seed");
  add_format(c_sx, out);

  cli::BruteOptions bd;
  auto* c_bd = app.add_subcommand("brute-degree", "Fiber-size histogram by enumeration over F_p");
  c_bd->add_option("--map", bd.map, "pgl2, sl2, sl3, sl4, g2, sl2-sq-isogeny or product:<a>,<b>")->required();
  c_bd->add_option("--prime", bd.prime, "Prime (default depends on the map)");
  c_bd->add_option("--seed", bd.seed, "Random seed (enumeration is exhaustive)");
  c_bd->add_flag("--serial", bd.serial, "Use the serial reference kernel");
  add_format(c_bd, out);

  auto* c_tb = app.add_subcommand("table", "Known Cayley degrees");
  add_format(c_tb, out);

  cli::ClassicalOptions cl;
  auto* c_cl = app.add_subcommand("classical", "Exact checks of X -> (I - X)(I + X)^-1 on skew-symmetric matrices");
  c_cl->add_option("--n", cl.n, "Matrix size");
  c_cl->add_option("--trials", cl.trials, "Random matrices");
  c_cl->add_option("--seed", cl.seed, "Random seed");
  add_format(c_cl, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : 2;
  }

  try {
    std::function<cli::Report()> run;
    if (*c_sln) run = [&] { return cli::verify_sln(sln); };
    if (*c_g2) run = [&] { return cli::verify_g2(g2); };
    if (*c_sx) run = [&] { return cli::sextic(sx); };
    if (*c_bd) run = [&] { return cli::brute_degree(bd); };
    if (*c_tb) run = [] { return cli::table(); };
    if (*c_cl) run = [&] { return cli::classical(cl); };
    return emit(run(), out);
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::is_usage_error(e.kind()) ? 2 : 1;
  }
}
