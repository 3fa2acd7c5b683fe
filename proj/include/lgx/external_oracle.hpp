// Copyright 2026 The lgx Authors
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

#pragma once

#include <chrono>
#include <mutex>
#include <string>
#include <sys/types.h>

#include "lgx/oracle.hpp"
#include "lgx/vocabulary.hpp"

namespace lgx {

/// Scores through a child process speaking line-delimited JSON.
///
///   request  {"id": str, "class": str, "objects": [str,...]}\n
///   response {"score": float}\n   or   {"error": str}\n
///
/// One response per request, in order. The command runs under /bin/sh -c.
/// Concurrent callers are serialized through one dispatcher lock. After a
/// timeout, process death or protocol violation the oracle is unusable and
/// every later call throws.
class ExternalOracle final : public Oracle {
 public:
  static constexpr std::chrono::milliseconds kDefaultTimeout{30000};
  /// Environment variable (seconds) overriding the default timeout.
  static constexpr const char* kTimeoutEnv = "LGX_ORACLE_TIMEOUT";

  ExternalOracle(std::string command, Vocabulary vocab, ClassLabels classes,
                 std::chrono::milliseconds timeout = kDefaultTimeout);
  ~ExternalOracle() override;
  ExternalOracle(const ExternalOracle&) = delete;
  ExternalOracle& operator=(const ExternalOracle&) = delete;

  double score(const ScoreQuery& q) override;
  /// Requests are streamed while responses are read, so a batch is a single
  /// round trip regardless of pipe buffer sizes.
  std::vector<double> score_batch(std::span<const ScoreQuery> qs) override;

  /// Timeout from kTimeoutEnv when set and valid, else the default.
  static std::chrono::milliseconds timeout_from_env();

  /// Request line (without the trailing newline), exposed for tests.
  static std::string encode_request(const ScoreQuery& q, const Vocabulary& vocab,
                                    const ClassLabels& classes);
  /// Parses one response line; throws ProtocolError/OracleError.
  static double decode_response(const std::string& line);

 private:
  void start();
  void shutdown() noexcept;
  [[noreturn]] void fail(const std::string& why, bool timeout = false);
  std::vector<double> exchange(const std::string& payload, std::size_t expected);

  std::string command_;
  Vocabulary vocab_;
  ClassLabels classes_;
  std::chrono::milliseconds timeout_;

  std::mutex mutex_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string pending_;  // bytes read past the last complete line
  std::string broken_;   // non-empty once the channel is unusable
};

}  // namespace lgx
