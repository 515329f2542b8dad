// Copyright 2026 The Solvercarto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOLVERCARTO_IO_H_
#define SOLVERCARTO_IO_H_

#include <string>
#include <vector>

#include "solvercarto/matrix.hpp"

namespace solvercarto {

// All emitted files format reals with 17 significant digits so that
// round-trips are value-exact and reruns are byte-comparable.
std::string format_real(double v);

std::string json_escape(const std::string& s);

// Minimal streaming JSON writer. nlohmann/json is used for parsing; writing
// goes through this so the real-number format stays under our control.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long long v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v);
  JsonWriter& value(const Vec& v);

  const std::string& str() const { return out_; }

 private:
  void comma();
  std::string out_;
  std::vector<bool> need_comma_;
  bool pending_key_ = false;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::vector<std::string> read_lines(const std::string& path);
bool file_exists(const std::string& path);
void ensure_directory(const std::string& path);

}  // namespace solvercarto

#endif  // SOLVERCARTO_IO_H_
