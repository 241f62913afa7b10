// Copyright 2026 The Flatscreen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLATSCREEN_TEXT_UTIL_H_
#define FLATSCREEN_TEXT_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace flatscreen {

std::vector<std::string_view> Split(std::string_view text, char delimiter);
std::vector<std::string> SplitWhitespace(std::string_view text);
std::string_view Trim(std::string_view text);

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double value);

// Strict parse of the whole field; returns false on trailing garbage.
bool ParseDouble(std::string_view text, double *value);
bool ParseInt(std::string_view text, long long *value);

std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, std::string_view contents);

}  // namespace flatscreen

#endif  // FLATSCREEN_TEXT_UTIL_H_
