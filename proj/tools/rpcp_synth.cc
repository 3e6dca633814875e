/* Copyright 2026 The RPCP Augment Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Writes the procedural leaf dataset used by the tests and examples.

#include <iostream>

#include "CLI11.hpp"
#include "rpcp/synthetic.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic leaf segmentation dataset", "rpcp_synth"};
  std::string out;
  rpcp::SyntheticSpec spec;
  app.add_option("--out", out, "Root directory (images/ and masks/)")->required();
  app.add_option("--count", spec.count, "Number of pairs")->check(CLI::PositiveNumber);
  app.add_option("--size", spec.size, "Square image size")->check(CLI::Range(16, 8192));
  app.add_option("--seed", spec.seed, "Generator seed");
  CLI11_PARSE(app, argc, argv);
  try {
    rpcp::WriteSyntheticDataset(out, spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  std::cout << "wrote " << spec.count << " pairs to " << out << "\n";
  return 0;
}
