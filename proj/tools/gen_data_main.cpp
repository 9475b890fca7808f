// Regenerates the interpolated invariant data files.  Both builds are
// deterministic: the same seed reproduces the shipped files byte for byte.
#include <iostream>

#include "CLI11.hpp"
#include "cubicrank/invariants.hpp"

int main(int argc, char** argv) {
  CLI::App app{"regenerate aronhold_cache.json and salmon_quintic.json"};
  std::string out = cubicrank::data_dir();
  std::uint64_t seed = 20260823;
  bool serial = false;
  app.add_option("--out", out, "output directory")->capture_default_str();
  app.add_option("--seed", seed, "interpolation seed")->capture_default_str();
  app.add_flag("--serial", serial, "disable OpenMP in the linear algebra");
  CLI11_PARSE(app, argc, argv);

  try {
    cubicrank::InvariantData ar = cubicrank::build_aronhold(seed, 800, !serial);
    cubicrank::save_invariant(ar, out + "/aronhold_cache.json");
    std::cout << "aronhold: " << ar.poly.t.size() << " terms -> "
              << out + "/aronhold_cache.json" << "\n";

    cubicrank::InvariantData q = cubicrank::build_salmon_quintic(seed, !serial);
    cubicrank::save_invariant(q, out + "/salmon_quintic.json");
    std::cout << "quintic: " << q.poly.t.size() << " terms -> "
              << out + "/salmon_quintic.json" << "\n";
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
