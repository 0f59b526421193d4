// Copyright 2026 The title-miner Authors.
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

#ifndef TITLEMINER_TESTS_TEST_SUPPORT_H_
#define TITLEMINER_TESTS_TEST_SUPPORT_H_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "titleminer/lexicon.h"

namespace titleminer::testing {

inline std::filesystem::path data_path(const std::string &name) {
  return std::filesystem::path(TITLEMINER_TEST_DATA_DIR) / name;
}

inline std::filesystem::path lexicon_dir() {
  return TITLEMINER_TEST_LEXICON_DIR;
}

inline std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// The bundled lexicon, loaded once.
inline const Lexicon &lexicon() {
  static const Lexicon lex = Lexicon::load(lexicon_dir());
  return lex;
}

inline LexiconSources bundled_sources() {
  LexiconSources sources;
  for (const char *name : kLexiconFiles) {
    sources[name] = read_file(lexicon_dir() / name);
  }
  return sources;
}

}  // namespace titleminer::testing

#endif  // TITLEMINER_TESTS_TEST_SUPPORT_H_
