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

#include "lgx/external_oracle.hpp"

#include <cerrno>
#include <csignal>
#include <cstdlib>
#include <cstring>
#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "lgx/error.hpp"

namespace lgx {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] {
    struct sigaction sa {};
    sa.sa_handler = SIG_IGN;
    sigemptyset(&sa.sa_mask);
    sigaction(SIGPIPE, &sa, nullptr);
  });
}

void close_fd(int& fd) noexcept {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

}  // namespace

ExternalOracle::ExternalOracle(std::string command, Vocabulary vocab, ClassLabels classes,
                               std::chrono::milliseconds timeout)
    : command_(std::move(command)),
      vocab_(std::move(vocab)),
      classes_(std::move(classes)),
      timeout_(timeout) {
  if (command_.empty()) throw ConfigError("external oracle command is empty");
  if (timeout_.count() <= 0) throw ConfigError("external oracle timeout must be positive");
  ignore_sigpipe();
  start();
}

ExternalOracle::~ExternalOracle() { shutdown(); }

std::chrono::milliseconds ExternalOracle::timeout_from_env() {
  const char* v = std::getenv(kTimeoutEnv);
  if (v == nullptr || *v == '\0') return kDefaultTimeout;
  char* end = nullptr;
  const double secs = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(secs > 0.0)) {
    throw ConfigError(std::string(kTimeoutEnv) + " must be a positive number of seconds");
  }
  return std::chrono::milliseconds(static_cast<long long>(secs * 1000.0));
}

void ExternalOracle::start() {
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) throw OracleError("pipe: " + std::string(std::strerror(errno)));
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw OracleError("pipe: " + std::string(std::strerror(errno)));
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw OracleError("fork: " + std::string(std::strerror(errno)));
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    signal(SIGPIPE, SIG_DFL);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  pid_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  ::fcntl(to_child_, F_SETFL, ::fcntl(to_child_, F_GETFL) | O_NONBLOCK);
  ::fcntl(from_child_, F_SETFL, ::fcntl(from_child_, F_GETFL) | O_NONBLOCK);
}

void ExternalOracle::shutdown() noexcept {
  close_fd(to_child_);
  close_fd(from_child_);
  if (pid_ <= 0) return;
  // Closing stdin asks a well-behaved adapter to exit; give it a moment.
  for (int i = 0; i < 50; ++i) {
    if (::waitpid(pid_, nullptr, WNOHANG) == pid_) {
      pid_ = -1;
      return;
    }
    ::usleep(2000);
  }
  // The shell may have forked the adapter, so signal the whole group.
  ::kill(-pid_, SIGKILL);
  ::waitpid(pid_, nullptr, 0);
  pid_ = -1;
}

void ExternalOracle::fail(const std::string& why, bool timeout) {
  broken_ = why;
  shutdown();
  if (timeout) throw TimeoutError(why);
  throw OracleError(why);
}

std::string ExternalOracle::encode_request(const ScoreQuery& q, const Vocabulary& vocab,
                                           const ClassLabels& classes) {
  json j;
  j["id"] = q.instance_id;
  j["class"] = classes.name(q.class_id);
  j["objects"] = vocab.decode(q.subset);
  return j.dump();
}

double ExternalOracle::decode_response(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception&) {
    throw ProtocolError("malformed JSON from oracle adapter: " + line);
  }
  if (!j.is_object()) throw ProtocolError("oracle response is not an object: " + line);
  if (auto it = j.find("error"); it != j.end()) {
    throw OracleError("oracle adapter error: " + (it->is_string() ? it->get<std::string>() : it->dump()));
  }
  auto it = j.find("score");
  if (it == j.end()) throw ProtocolError("oracle response missing 'score': " + line);
  if (!it->is_number()) throw ProtocolError("oracle 'score' is not a number: " + line);
  return it->get<double>();
}

std::vector<double> ExternalOracle::exchange(const std::string& payload, std::size_t expected) {
  std::vector<double> out;
  out.reserve(expected);
  std::size_t written = 0;
  const auto deadline = Clock::now() + timeout_;
  char buf[65536];
  while (out.size() < expected) {
    // Drain complete lines first.
    std::size_t nl;
    while (out.size() < expected && (nl = pending_.find('\n')) != std::string::npos) {
      std::string line = pending_.substr(0, nl);
      pending_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      try {
        out.push_back(decode_response(line));
      } catch (const ProtocolError& e) {
        broken_ = e.what();
        shutdown();
        throw;
      } catch (const OracleError&) {
        // An adapter-reported error on the last response leaves the channel
        // in sync; earlier in a batch the rest are still in flight.
        if (out.size() + 1 != expected || written != payload.size() || !pending_.empty()) {
          broken_ = "adapter reported an error mid-batch";
          shutdown();
        }
        throw;
      }
    }
    if (out.size() == expected) break;

    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0) fail("oracle adapter timed out after " + std::to_string(timeout_.count()) + " ms", true);
    pollfd fds[2];
    nfds_t n = 0;
    fds[n++] = pollfd{from_child_, POLLIN, 0};
    const bool want_write = written < payload.size();
    if (want_write) fds[n++] = pollfd{to_child_, POLLOUT, 0};
    const int rc = ::poll(fds, n, static_cast<int>(left.count()));
    if (rc < 0) {
      if (errno == EINTR) continue;
      fail("poll: " + std::string(std::strerror(errno)));
    }
    if (rc == 0) fail("oracle adapter timed out after " + std::to_string(timeout_.count()) + " ms", true);

    if (want_write && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t w = ::write(to_child_, payload.data() + written, payload.size() - written);
      if (w < 0 && errno != EAGAIN && errno != EINTR) fail("oracle adapter closed its input");
      if (w > 0) written += static_cast<std::size_t>(w);
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      const ssize_t r = ::read(from_child_, buf, sizeof buf);
      if (r == 0) fail("oracle adapter exited");
      if (r < 0 && errno != EAGAIN && errno != EINTR) fail("read: " + std::string(std::strerror(errno)));
      if (r > 0) pending_.append(buf, static_cast<std::size_t>(r));
    }
  }
  return out;
}

double ExternalOracle::score(const ScoreQuery& q) {
  return score_batch(std::span<const ScoreQuery>(&q, 1)).front();
}

std::vector<double> ExternalOracle::score_batch(std::span<const ScoreQuery> qs) {
  if (qs.empty()) return {};
  std::string payload;
  for (const auto& q : qs) {
    payload += encode_request(q, vocab_, classes_);
    payload += '\n';
  }
  std::lock_guard lock(mutex_);
  if (!broken_.empty()) throw OracleError("external oracle unusable: " + broken_);
  return exchange(payload, qs.size());
}

}  // namespace lgx
