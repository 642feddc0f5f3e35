#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sbmotive/cli.hpp"

namespace {

sbmotive::cli::Format parse_format(const std::string& s) {
  return s == "json" ? sbmotive::cli::Format::json : sbmotive::cli::Format::text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sbmotive::cli;
  CLI::App app{"Exact Schubert calculus and motivic decomposition certificates"};
  app.require_subcommand(1);

  int n = 0, d = 0;
  long long r = 0;
  std::string output, format = "text";

  auto* dec = app.add_subcommand("decompose", "build and check a decomposition certificate");
  dec->add_option("--n", n, "degree n")->required();
  dec->add_option("--d", d, "Grassmannian rank d")->required();
  dec->add_option("--r", r, "exponent r with [B] = r[A]")->required();
  dec->add_option("-o,--output", output, "output file (default stdout)");
  dec->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyOptions vopt;
  std::string vformat = "text";
  int vmax_d = 0, vmax_m = 0, vmax_n = 0;
  std::vector<int> vprimes;
  auto* ver = app.add_subcommand("verify", "run identity suites");
  ver->add_option("suite", vopt.suite, "rs|cong|cong2|pieri|poincare|sb|all")
      ->check(CLI::IsMember(verify_suites()));
  auto* o_d = ver->add_option("--d,--max-d", vmax_d, "largest d (rs)");
  auto* o_m = ver->add_option("--m,--max-m", vmax_m, "largest m (rs, cong2)");
  auto* o_n = ver->add_option("--max-n", vmax_n, "largest n (pieri, poincare)");
  auto* o_p = ver->add_option("--primes", vprimes, "comma separated primes (cong, sb)")->delimiter(',');
  ver->add_flag("--timing", vopt.timing, "include wall time in the report");
  ver->add_option("-o,--output", vopt.output, "output file (default stdout)");
  ver->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string left, right, cformat = "text";
  auto* com = app.add_subcommand("compose", "print LEFT o RIGHT for stored correspondences");
  com->add_option("left", left, "FILE or FILE#key (key: alpha, beta, projector)")->required();
  com->add_option("right", right, "FILE or FILE#key")->required();
  com->add_option("--format", cformat, "text or json")->check(CLI::IsMember({"text", "json"}));

  int pn = 0, pd = -1;
  std::string pformat = "text";
  auto* poi = app.add_subcommand("poincare", "Gaussian binomials and their quotients by P(P^{n-1})");
  poi->add_option("--n", pn, "n")->required();
  auto* o_pd = poi->add_option("--d", pd, "d (default: all 1..n-1)");
  poi->add_option("--format", pformat, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  if (dec->parsed()) return cmd_decompose(n, d, r, output, parse_format(format), std::cout, std::cerr);
  if (ver->parsed()) {
    if (o_d->count()) vopt.max_d = vmax_d;
    if (o_m->count()) vopt.max_m = vmax_m;
    if (o_n->count()) vopt.max_n = vmax_n;
    if (o_p->count()) vopt.primes = vprimes;
    vopt.format = parse_format(vformat);
    return cmd_verify(vopt, std::cout, std::cerr);
  }
  if (com->parsed()) return cmd_compose(left, right, parse_format(cformat), std::cout, std::cerr);
  if (poi->parsed())
    return cmd_poincare(pn, o_pd->count() ? std::optional<int>(pd) : std::nullopt, parse_format(pformat),
                        std::cout, std::cerr);
  return kInvalid;
}
