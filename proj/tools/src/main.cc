#include <iostream>
#include <string>

#include "commands.h"
#include "parasense/error.h"

namespace {

std::string one_line(std::string s) {
  for (auto& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

// `error: <kind>: <message>` on a single line.
int fail(const char* kind, int code, const std::string& message) {
  std::cerr << "error: " << kind << ": " << one_line(message) << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-sense word embeddings from parallel corpora."};
  app.name("parasense");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "TOML or INI file with option values");

  parasense::cli::add_train(app);
  parasense::cli::add_disambiguate(app);
  parasense::cli::add_wsi(app);
  parasense::cli::add_simeval(app);
  parasense::cli::add_neighbors(app);
  parasense::cli::add_export(app);
  parasense::cli::add_synth(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", 1, e.what());
  } catch (const parasense::Error& e) {
    switch (e.kind()) {
      case parasense::ErrorKind::kUsage:
        return fail("usage", 1, e.what());
      case parasense::ErrorKind::kData:
        return fail("data", 2, e.what());
      case parasense::ErrorKind::kNumerical:
        return fail("numerical", 3, e.what());
    }
  } catch (const std::exception& e) {
    return fail("data", 2, e.what());
  }
  return 0;
}
