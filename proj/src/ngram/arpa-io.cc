// ngram/arpa-io.cc

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

#include "m2ds2/ngram/arpa-io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "m2ds2/base/error.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace ngram {

void WriteArpa(const NGramModel &m, std::ostream &os) {
  const Vocabulary &v = m.vocab();
  os << "\n\\data\\\n";
  for (int n = 1; n <= m.order(); ++n)
    os << "ngram " << n << "=" << m.table(n).size() << "\n";
  for (int n = 1; n <= m.order(); ++n) {
    os << "\n\\" << n << "-grams:\n";
    std::vector<std::pair<std::string, const NGramEntry *>> rows;
    rows.reserve(m.table(n).size());
    for (const auto &kv : m.table(n)) {
      std::string words;
      for (size_t i = 0; i < kv.first.size(); ++i) {
        if (i) words += ' ';
        words += v.Word(kv.first[i]);
      }
      rows.emplace_back(std::move(words), &kv.second);
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    for (const auto &[words, e] : rows) {
      os << FormatShortest(e->log_prob) << '\t' << words;
      if (n < m.order() && e->log_backoff != 0.0)
        os << '\t' << FormatShortest(e->log_backoff);
      os << '\n';
    }
  }
  os << "\n\\end\\\n";
}

std::string ArpaToString(const NGramModel &m) {
  std::ostringstream os;
  WriteArpa(m, os);
  return os.str();
}

void WriteArpa(const NGramModel &m, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot open " + path + " for writing");
  WriteArpa(m, os);
  if (!os) throw DataError("write failed for " + path);
}

NGramModel ReadArpa(std::istream &is) {
  std::string line;
  std::vector<size_t> declared;
  // Header.
  bool in_data = false;
  while (std::getline(is, line)) {
    auto t = TrimWhitespace(line);
    if (t == "\\data\\") {
      in_data = true;
      continue;
    }
    if (!in_data) continue;
    if (t.empty()) {
      if (!declared.empty()) break;
      continue;
    }
    if (t.rfind("ngram ", 0) != 0) throw DataError("bad ARPA header line: " + line);
    auto eq = t.find('=');
    if (eq == std::string_view::npos) throw DataError("bad ARPA header line: " + line);
    long long n = ParseInt(t.substr(6, eq - 6));
    long long cnt = ParseInt(t.substr(eq + 1));
    if (n != static_cast<long long>(declared.size()) + 1)
      throw DataError("ARPA orders must be listed in sequence");
    declared.push_back(static_cast<size_t>(cnt));
  }
  if (declared.empty()) throw DataError("ARPA file has no \\data\\ section");
  const int order = static_cast<int>(declared.size());

  // First pass collects entries as strings so that ids stay stable.
  struct Row {
    int n;
    std::vector<std::string> words;
    NGramEntry e;
  };
  std::vector<Row> rows;
  int section = 0;
  bool ended = false;
  while (std::getline(is, line)) {
    auto t = TrimWhitespace(line);
    if (t.empty()) continue;
    if (t == "\\end\\") {
      ended = true;
      break;
    }
    if (t.front() == '\\') {
      auto dash = t.find("-grams:");
      if (dash == std::string_view::npos) throw DataError("bad ARPA section: " + line);
      section = static_cast<int>(ParseInt(t.substr(1, dash - 1)));
      if (section < 1 || section > order) throw DataError("bad ARPA section: " + line);
      continue;
    }
    if (section == 0) throw DataError("ARPA entry outside a section");
    std::vector<std::string> fields = SplitTokens(t);
    if (static_cast<int>(fields.size()) < section + 1)
      throw DataError("short ARPA entry: " + line);
    Row r;
    r.n = section;
    r.e.log_prob = ParseDouble(fields[0]);
    r.words.assign(fields.begin() + 1, fields.begin() + 1 + section);
    if (static_cast<int>(fields.size()) == section + 2)
      r.e.log_backoff = ParseDouble(fields[section + 1]);
    else if (static_cast<int>(fields.size()) > section + 2)
      throw DataError("long ARPA entry: " + line);
    rows.push_back(std::move(r));
  }
  if (!ended) throw DataError("ARPA file lacks \\end\\");

  Vocabulary vocab;
  for (const auto &r : rows)
    if (r.n == 1) vocab.Intern(r.words[0]);
  NGramModel model(order, vocab);
  std::vector<size_t> seen(order, 0);
  for (const auto &r : rows) {
    NGram g;
    for (const auto &w : r.words) {
      if (!model.vocab().Contains(w))
        throw DataError("ARPA n-gram uses word missing from unigrams: " + w);
      g.push_back(model.vocab().Lookup(w));
    }
    model.mutable_table(r.n)[g] = r.e;
    ++seen[r.n - 1];
  }
  for (int n = 0; n < order; ++n)
    if (seen[n] != declared[n])
      throw DataError("ARPA count mismatch at order " + std::to_string(n + 1));
  return model;
}

NGramModel ReadArpa(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw DataError("cannot open " + path);
  return ReadArpa(is);
}

}  // namespace ngram
}  // namespace m2ds2
