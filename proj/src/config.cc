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

#include "rpcp/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rpcp {
namespace {

using nlohmann::json;

const std::set<std::string> kTopLevelKeys = {
    "seed",           "patches_per_image", "scale_range",  "rotation_range",
    "filter_size",    "sigma",             "alpha",        "min_patch_area",
    "max_attempts",   "margin",            "classes",      "restandardize",
    "connectivity"};

const std::set<std::string> kClassKeys = {"count", "names", "source_class",
                                          "valid_class", "excluded"};

[[noreturn]] void Fail(const std::string& key, const std::string& what) {
  throw ConfigError("config key '" + key + "': " + what);
}

template <typename T>
T GetInteger(const json& v, const std::string& key, T lo, T hi) {
  if (!v.is_number_integer()) Fail(key, "expected an integer");
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(hi)) Fail(key, "value out of range");
    return static_cast<T>(u);
  }
  auto s = v.get<std::int64_t>();
  if (s < static_cast<std::int64_t>(lo) || s > static_cast<std::int64_t>(hi)) {
    Fail(key, "value out of range");
  }
  return static_cast<T>(s);
}

double GetReal(const json& v, const std::string& key) {
  if (!v.is_number()) Fail(key, "expected a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) Fail(key, "expected a finite number");
  return d;
}

std::pair<double, double> GetRange(const json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 2) Fail(key, "expected [min, max]");
  return {GetReal(v[0], key), GetReal(v[1], key)};
}

void ParseClasses(const json& c, ClassScheme& scheme) {
  if (!c.is_object()) Fail("classes", "expected an object");
  for (const auto& [k, _] : c.items()) {
    if (!kClassKeys.contains(k)) Fail("classes." + k, "unknown key");
  }
  if (c.contains("count")) {
    scheme.class_count = GetInteger<int>(c["count"], "classes.count", 2, 256);
  }
  if (c.contains("names")) {
    const auto& names = c["names"];
    if (!names.is_array()) Fail("classes.names", "expected an array");
    scheme.names.clear();
    for (const auto& n : names) {
      if (!n.is_string()) Fail("classes.names", "expected strings");
      scheme.names.push_back(n.get<std::string>());
    }
  } else if (c.contains("count")) {
    scheme.names.clear();
  }
  if (c.contains("source_class")) {
    scheme.source_class =
        GetInteger<ClassId>(c["source_class"], "classes.source_class", 0, 255);
  }
  if (c.contains("valid_class")) {
    scheme.valid_class =
        GetInteger<ClassId>(c["valid_class"], "classes.valid_class", 0, 255);
  }
  if (c.contains("excluded")) {
    const auto& ex = c["excluded"];
    if (!ex.is_array()) Fail("classes.excluded", "expected an array");
    scheme.excluded_classes.clear();
    for (const auto& e : ex) {
      scheme.excluded_classes.push_back(
          GetInteger<ClassId>(e, "classes.excluded", 0, 255));
    }
  } else if (c.contains("count")) {
    scheme.excluded_classes.clear();
  }
}

}  // namespace

bool ClassScheme::is_excluded(int id) const {
  return std::find(excluded_classes.begin(), excluded_classes.end(), id) !=
         excluded_classes.end();
}

std::string ClassScheme::name(int id) const {
  if (id >= 0 && id < static_cast<int>(names.size())) return names[id];
  return "class_" + std::to_string(id);
}

void ClassScheme::Validate() const {
  if (class_count < 2 || class_count > 256) {
    Fail("classes.count", "must lie in [2, 256]");
  }
  if (!names.empty() && static_cast<int>(names.size()) != class_count) {
    Fail("classes.names", "expected " + std::to_string(class_count) +
                              " names, got " + std::to_string(names.size()));
  }
  if (source_class >= class_count) {
    Fail("classes.source_class", "must be < classes.count");
  }
  if (valid_class >= class_count) {
    Fail("classes.valid_class", "must be < classes.count");
  }
  if (source_class == valid_class) {
    Fail("classes.source_class", "must differ from classes.valid_class");
  }
  for (ClassId e : excluded_classes) {
    if (e >= class_count) Fail("classes.excluded", "id must be < classes.count");
  }
  if (static_cast<int>(excluded_classes.size()) >= class_count) {
    Fail("classes.excluded", "at least one class must remain scored");
  }
}

void RpConfig::Validate() const {
  if (filter_height < 1 || filter_height % 2 == 0 || filter_width < 1 ||
      filter_width % 2 == 0) {
    Fail("filter_size", "filter dimensions must be odd and >= 1");
  }
  if (!(sigma >= 0.0)) Fail("sigma", "must be >= 0");
  if (!(alpha >= 0.0 && alpha <= 1.0)) Fail("alpha", "must lie in [0, 1]");
}

void AugConfig::Validate() const {
  if (patches_per_image < 0) Fail("patches_per_image", "must be >= 0");
  if (!(scale_min > 0.0 && scale_max > 0.0)) {
    Fail("scale_range", "scales must be > 0");
  }
  if (scale_min > scale_max) Fail("scale_range", "min must be <= max");
  if (rotation_min < 0.0 || rotation_max > 360.0) {
    Fail("rotation_range", "must lie within [0, 360]");
  }
  if (rotation_min > rotation_max) Fail("rotation_range", "min must be <= max");
  if (min_patch_area < 1) Fail("min_patch_area", "must be >= 1");
  if (max_attempts < 1) Fail("max_attempts", "must be >= 1");
  if (margin < 0) Fail("margin", "must be >= 0");
  if (connectivity != 4 && connectivity != 8) {
    Fail("connectivity", "must be 4 or 8");
  }
  rp.Validate();
  class_scheme.Validate();
}

AugConfig ParseConfig(std::string_view text) {
  AugConfig cfg;
  if (std::all_of(text.begin(), text.end(),
                  [](unsigned char ch) { return std::isspace(ch); })) {
    cfg.Validate();
    return cfg;
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config document: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config document must be an object");
  for (const auto& [k, _] : doc.items()) {
    if (!kTopLevelKeys.contains(k)) Fail(k, "unknown key");
  }

  if (doc.contains("seed")) {
    cfg.seed = GetInteger<std::uint64_t>(doc["seed"], "seed", 0, UINT64_MAX);
  }
  if (doc.contains("patches_per_image")) {
    cfg.patches_per_image = GetInteger<int>(doc["patches_per_image"],
                                            "patches_per_image", 0, 1 << 20);
  }
  if (doc.contains("scale_range")) {
    std::tie(cfg.scale_min, cfg.scale_max) =
        GetRange(doc["scale_range"], "scale_range");
  }
  if (doc.contains("rotation_range")) {
    std::tie(cfg.rotation_min, cfg.rotation_max) =
        GetRange(doc["rotation_range"], "rotation_range");
  }
  if (doc.contains("filter_size")) {
    const auto& fs = doc["filter_size"];
    if (fs.is_number_integer()) {
      cfg.rp.filter_height = cfg.rp.filter_width =
          GetInteger<int>(fs, "filter_size", 1, 255);
    } else if (fs.is_array() && fs.size() == 2) {
      cfg.rp.filter_height = GetInteger<int>(fs[0], "filter_size", 1, 255);
      cfg.rp.filter_width = GetInteger<int>(fs[1], "filter_size", 1, 255);
    } else {
      Fail("filter_size", "expected an odd integer or [h, w]");
    }
  }
  if (doc.contains("sigma")) cfg.rp.sigma = GetReal(doc["sigma"], "sigma");
  if (doc.contains("alpha")) cfg.rp.alpha = GetReal(doc["alpha"], "alpha");
  if (doc.contains("restandardize")) {
    if (!doc["restandardize"].is_boolean()) {
      Fail("restandardize", "expected a boolean");
    }
    cfg.rp.restandardize = doc["restandardize"].get<bool>();
  }
  if (doc.contains("min_patch_area")) {
    cfg.min_patch_area = GetInteger<int>(doc["min_patch_area"],
                                         "min_patch_area", 0, INT32_MAX);
  }
  if (doc.contains("max_attempts")) {
    cfg.max_attempts =
        GetInteger<int>(doc["max_attempts"], "max_attempts", 0, INT32_MAX);
  }
  if (doc.contains("margin")) {
    cfg.margin = GetInteger<int>(doc["margin"], "margin", -1, 4096);
  }
  if (doc.contains("connectivity")) {
    cfg.connectivity = GetInteger<int>(doc["connectivity"], "connectivity", 0, 8);
  }
  if (doc.contains("classes")) ParseClasses(doc["classes"], cfg.class_scheme);

  cfg.Validate();
  return cfg;
}

AugConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str());
}

std::string ConfigToJson(const AugConfig& c) {
  json excluded = json::array();
  for (ClassId e : c.class_scheme.excluded_classes) excluded.push_back(e);
  json doc = {
      {"seed", c.seed},
      {"patches_per_image", c.patches_per_image},
      {"scale_range", {c.scale_min, c.scale_max}},
      {"rotation_range", {c.rotation_min, c.rotation_max}},
      {"filter_size", {c.rp.filter_height, c.rp.filter_width}},
      {"sigma", c.rp.sigma},
      {"alpha", c.rp.alpha},
      {"restandardize", c.rp.restandardize},
      {"min_patch_area", c.min_patch_area},
      {"max_attempts", c.max_attempts},
      {"margin", c.margin},
      {"connectivity", c.connectivity},
      {"classes",
       {{"count", c.class_scheme.class_count},
        {"names", c.class_scheme.names},
        {"source_class", c.class_scheme.source_class},
        {"valid_class", c.class_scheme.valid_class},
        {"excluded", excluded}}},
  };
  return doc.dump(2);
}

}  // namespace rpcp
