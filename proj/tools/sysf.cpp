// sysf: batch checker and normalizer for System F scripts.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/script.hpp"
#include "cli/stack.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Type check and normalize System F scripts"};
  cli::RunOptions opts;
  bool ascii = false;
  std::vector<std::string> files;
  app.add_option("--steps", opts.steps, "Beta step budget per eval")->capture_default_str();
  app.add_flag("--ascii", ascii, "Emit ASCII syntax");
  app.add_flag("--debug", opts.debug, "Enable binding instrumentation and report lookup counts");
  app.add_option("files", files, "Script files")->required();
  CLI11_PARSE(app, argc, argv);
  if (ascii) opts.syntax = systemf::Syntax::ascii;

  int rc = 0;
  cli::run_with_stack(cli::big_stack, [&] {
    for (const std::string& path : files) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        std::cerr << path << ":1:1: io-error: cannot open file\n";
        rc = cli::exit_user_error;
        return;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      rc = cli::run_source(buf.str(), path, opts, std::cout, std::cerr);
      if (rc != 0) return;
    }
  });
  return rc;
}
