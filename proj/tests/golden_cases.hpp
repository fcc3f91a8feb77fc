#pragma once

// CLI golden cases, read from tests/golden/cases.txt. Each line is
// name|arg|arg|...; paths are relative to the source directory.

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

inline std::string goldenDir() { return std::string(CATMON_SOURCE_DIR) + "/tests/golden"; }

inline std::string goldenPath(const std::string &name) {
  return goldenDir() + "/" + name + ".txt";
}

inline std::vector<GoldenCase> goldenCases() {
  std::ifstream in(goldenDir() + "/cases.txt");
  if (!in)
    throw std::runtime_error("cannot read golden case list");
  std::vector<GoldenCase> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#')
      continue;
    std::vector<std::string> fields{""};
    for (char ch : line) {
      if (ch == '|')
        fields.emplace_back();
      else
        fields.back() += ch;
    }
    out.push_back({fields.front(), {fields.begin() + 1, fields.end()}});
  }
  return out;
}

// Stdout, then stderr if any, then the exit code.
inline std::string renderGolden(const std::string &out, const std::string &err, int code) {
  std::string s = out;
  if (!err.empty())
    s += "[stderr]\n" + err;
  return s + "[exit " + std::to_string(code) + "]\n";
}

} // namespace testing
