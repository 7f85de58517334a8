#pragma once

// Runs the dhat executable and the in-process session on the sample corpus.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dhat/session.hpp"

namespace harness {

namespace fs = std::filesystem;
using dhat::Json;

inline const fs::path kSamples = DHAT_SAMPLES_DIR;
inline const fs::path kGolden = DHAT_GOLDEN_DIR;
inline const std::string kBinary = DHAT_CLI_PATH;

struct Invocation {
  std::string out;
  int exit_code = -1;
};

inline Invocation invoke(const std::string& args) {
  Invocation r;
  FILE* pipe = popen((kBinary + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<fs::path> samples() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kSamples))
    if (e.path().extension() == ".dh") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

inline Json without_timing(Json j) {
  j.erase("timing");
  return j;
}

/// Exit code plus timing-free report of the executable on one sample.
inline Json golden_record(const fs::path& sample) {
  auto r = invoke("\"" + sample.string() + "\"");
  Json got;
  got["exit_code"] = r.exit_code;
  got["report"] = r.exit_code < 0 ? Json(nullptr) : without_timing(Json::parse(r.out, nullptr, false));
  return got;
}

inline fs::path golden_path(const fs::path& sample) { return kGolden / (sample.stem().string() + ".json"); }

/// Samples whose output differs from the stored golden file.
inline std::vector<std::string> golden_mismatches() {
  std::vector<std::string> bad;
  for (const auto& f : samples()) {
    const auto g = golden_path(f);
    if (!fs::exists(g) || golden_record(f) != Json::parse(slurp(g))) bad.push_back(f.filename().string());
  }
  return bad;
}

struct FuzzOutcome {
  int cases = 0;
  int parse_failures = 0;
  std::vector<std::string> problems;
};

/// Mutates sample sources and runs them in process. A problem is an escaped
/// exception, an internal error, an unknown exit code, or an input error
/// without a position.
inline FuzzOutcome fuzz(int cases, std::uint64_t seed) {
  std::vector<std::string> seeds;
  for (const auto& f : samples()) seeds.push_back(slurp(f));
  const std::string alphabet = "[](),;:*^+-/#=_ \n0123456789xdzWQZcokerlatticemodulecheckgens";
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  dhat::RunOptions opts;
  opts.max_degree = 12;
  opts.zpower = 3;
  FuzzOutcome out;
  for (int t = 0; t < cases; ++t) {
    std::string s = seeds[pick(seeds.size())];
    const int edits = 1 + static_cast<int>(pick(4));
    for (int k = 0; k < edits && !s.empty(); ++k) {
      switch (pick(5)) {
        case 0: s.erase(pick(s.size()), 1 + pick(3)); break;
        case 1: s.insert(pick(s.size() + 1), 1, alphabet[pick(alphabet.size())]); break;
        case 2: s[pick(s.size())] = alphabet[pick(alphabet.size())]; break;
        case 3: s.resize(pick(s.size())); break;
        default: {
          std::string junk;
          for (std::size_t j = 0, len = 1 + pick(8); j < len; ++j) junk += static_cast<char>(pick(256));
          s.insert(pick(s.size() + 1), junk);
        }
      }
    }
    ++out.cases;
    dhat::RunResult r;
    try {
      r = dhat::run_source(s, opts);
    } catch (...) {
      out.problems.push_back("exception escaped on: " + s);
      continue;
    }
    if (r.exit_code < 0 || r.exit_code > 2) out.problems.push_back("exit code " + std::to_string(r.exit_code) + " on: " + s);
    if (r.exit_code == 1 && r.report["error"]["name"] == "Internal") out.problems.push_back("internal error on: " + s);
    if (r.exit_code == 2) {
      ++out.parse_failures;
      const auto& e = r.report["error"];
      if (!e.contains("line") || !e.contains("column") || e["line"].get<int>() < 1 || e["column"].get<int>() < 1)
        out.problems.push_back("no position on: " + s);
    }
  }
  return out;
}

}  // namespace harness
