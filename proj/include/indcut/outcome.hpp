#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>

#include "indcut/graph.hpp"

namespace indcut {

enum class Answer { yes, no };

/// Result envelope shared by every solver. A yes always carries a witness that was checked to be
/// an independent cutset of the input graph.
struct SolveOutcome {
  Answer answer = Answer::no;
  std::optional<VertexSet> witness;
  std::string algorithm;
  std::string parameter;
  std::map<std::string, long long> stats;
  double time_ms = 0.0;

  bool yes() const { return answer == Answer::yes; }
  void count(const std::string& key, long long by = 1) { stats[key] += by; }
};

/// Sets answer=yes after checking the witness; a bad witness is a bug and throws InternalError.
void accept_witness(SolveOutcome& out, const Graph& g, const VertexSet& witness);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace indcut
