#pragma once

#include <CLI11.hpp>

namespace parasense::cli {

// Each registers a subcommand on `app`; the callback runs the command and
// throws parasense::Error on failure.
void add_train(CLI::App& app);
void add_disambiguate(CLI::App& app);
void add_wsi(CLI::App& app);
void add_simeval(CLI::App& app);
void add_neighbors(CLI::App& app);
void add_export(CLI::App& app);
void add_synth(CLI::App& app);

}  // namespace parasense::cli
