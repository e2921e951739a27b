// base/text-utils.h

// Copyright 2026  The M2DS2 Toolkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef M2DS2_BASE_TEXT_UTILS_H_
#define M2DS2_BASE_TEXT_UTILS_H_

#include <string>
#include <string_view>
#include <vector>

namespace m2ds2 {

// Splits on runs of ASCII whitespace; no empty tokens are produced.
std::vector<std::string> SplitTokens(std::string_view s);

std::string JoinTokens(const std::vector<std::string> &tokens,
                       std::string_view sep = " ");

std::string_view TrimWhitespace(std::string_view s);

// Reads a text file line by line, stripping the trailing '\n' (and '\r').
// Throws DataError if the file cannot be opened.
std::vector<std::string> ReadLines(const std::string &path);

// Writes lines, each terminated by '\n'.  Throws DataError on failure.
void WriteLines(const std::string &path, const std::vector<std::string> &lines);

// Shortest decimal representation that parses back to the same double.
std::string FormatShortest(double v);

// Fixed-point with the given number of decimals, e.g. FormatFixed(2.5, 2)
// == "2.50".
std::string FormatFixed(double v, int decimals);

// Strict parse of a whole string; throws DataError on trailing garbage.
double ParseDouble(std::string_view s);
long long ParseInt(std::string_view s);

}  // namespace m2ds2

#endif  // M2DS2_BASE_TEXT_UTILS_H_
