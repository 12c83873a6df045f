#include <iostream>

#include <CLI11.hpp>

#include "pisot/commands.hpp"

int main(int argc, char** argv) {
  using namespace pisot::cli;
  CLI::App app{"Pisot substitutions on three letters: windows, tilings, LI/MLD relations"};
  app.require_subcommand(1);

  std::string file, file2, out_svg;
  std::optional<std::string> out_text, rho;
  int iterations = 8;
  std::size_t length = 100;
  int depth = 8;
  CompareOptions cmp;

  auto* analyze = app.add_subcommand("analyze", "print spectral data of a substitution");
  analyze->add_option("file", file)->required();

  auto* window = app.add_subcommand("window", "render the three subwindows as SVG");
  window->add_option("file", file)->required();
  window->add_option("--iterations,-n", iterations)->check(CLI::Range(0, 12));
  window->add_option("--out,-o", out_svg)->required();
  window->add_option("--text", out_text, "also write polylines as 'x y' rows");

  auto* tiling = app.add_subcommand("tiling", "render a fixed-point tiling patch as SVG");
  tiling->add_option("file", file)->required();
  tiling->add_option("--length,-l", length)->check(CLI::PositiveNumber);
  tiling->add_option("--out,-o", out_svg)->required();
  tiling->add_option("--text", out_text, "also write 'letter left length' rows");

  auto* verify = app.add_subcommand("verify", "check or search a conjugating automorphism");
  verify->add_option("file1", file)->required();
  verify->add_option("file2", file2)->required();
  verify->add_option("--rho", rho, "conjugator (substitution file or certificate)");
  verify->add_option("--depth", depth)->check(CLI::Range(0, 12));

  auto* compare = app.add_subcommand("compare", "empirical LI test and optional MLD rewrite check");
  compare->add_option("file1", file)->required();
  compare->add_option("file2", file2)->required();
  compare->add_option("--k", cmp.k)->check(CLI::Range(1, 20));
  compare->add_option("--prefix", cmp.prefix)->check(CLI::Range(10, 1'000'000));
  compare->add_option("--rule", cmp.rule, "local rewrite such as ab->ba");
  compare->add_option("--levels", cmp.levels)->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*analyze) return cmd_analyze(file, std::cout, std::cerr);
  if (*window) return cmd_window(file, iterations, out_svg, out_text, std::cout, std::cerr);
  if (*tiling) return cmd_tiling(file, length, out_svg, out_text, std::cout, std::cerr);
  if (*verify) return cmd_verify(file, file2, rho, depth, std::cout, std::cerr);
  if (*compare) return cmd_compare(file, file2, cmp, std::cout, std::cerr);
  return kInputError;
}
