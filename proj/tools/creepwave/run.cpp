// SPDX-License-Identifier: Apache-2.0
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "cli.hpp"

namespace creepwave::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Creeping-wave scattering scans", "creepwave"};
  app.set_version_flag("--version", CREEPWAVE_VERSION);
  app.require_subcommand(1, 1);

  Invocation call;
  std::string config, out_dir = ".";
  std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--config", config, "JSON scenario file (defaults when omitted)")
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--format", call.format, "csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  const std::pair<const char*, const char*> commands[] = {
      {"amplitude", "scattering amplitude on a theta_s grid, three methods"},
      {"resonances", "bound states and pi/2 crossings of the phase shifts"},
      {"caustic", "field and regime map across the surface caustic"},
      {"bound-states", "quantized angular wavefunctions"},
      {"roots", "refined zeros of H^(1)_nu(kR) in the degree"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  call.command = app.get_subcommands().front()->get_name();
  call.config_path = config;
  call.out_dir = out_dir;
  return run_command(call, err);
}

}  // namespace creepwave::cli
