// Regenerates the pinned CLI reports under tests/golden/.  Only commands
// whose output is exact (no floating point) are pinned, so the files are
// byte-stable across machines.

#include <fstream>
#include <iostream>

#include "uvd/cli.hpp"

static void emit(const std::string& dir, const std::string& name,
                 const uvd::Report& rep) {
  std::ofstream out(dir + "/" + name);
  out << rep.to_json().dump(2) << "\n";
  std::cout << name << "\n";
}

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "tests/golden";
  emit(dir, "dims_vogel.json", uvd::report_dims_table("vogel"));
  emit(dir, "casimir_conformity.json", uvd::report_casimir_conformity());
  emit(dir, "uniq_qq.json",
       uvd::report_uniq_solve(4, {3, 1, 4, 2}, {4, 3, 2, 1}, {2, 4, 1, 3}, 2,
                              7));
  emit(dir, "config_pappus.json", uvd::report_config_color("9_3_1", ""));
  return 0;
}
