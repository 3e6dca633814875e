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

#ifndef RPCP_TESTS_TEST_UTIL_H_
#define RPCP_TESTS_TEST_UTIL_H_

#include <unistd.h>

#include <filesystem>
#include <random>
#include <string>

#include "rpcp/raster.h"

namespace rpcp::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("rpcp_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string str(const std::string& rel = "") const {
    return rel.empty() ? path_.string() : (path_ / rel).string();
  }

 private:
  std::filesystem::path path_;
};

// Label map from a row-major initializer.
inline LabelMap MakeLabels(int w, int h, std::initializer_list<int> values) {
  LabelMap m(w, h);
  int i = 0;
  for (int v : values) m.data()[i++] = static_cast<ClassId>(v);
  return m;
}

// Random image with intensities that are multiples of 1/255.
inline ImageRgb RandomImage(std::mt19937_64& gen, int w, int h) {
  ImageRgb img(w, h);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& v : img.data()) v = byte(gen) / 255.0;
  return img;
}

}  // namespace rpcp::testing

#endif  // RPCP_TESTS_TEST_UTIL_H_
