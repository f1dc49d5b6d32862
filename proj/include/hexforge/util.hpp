#pragma once
// Shared error type and a tiny parallel_for used by the heavier scans.

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hexforge {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleModulus,
  UnsupportedSize,
  ZeroInverse,
  MixedFields,
  InvalidSubfield,
  BadExtensionDegree,
  UnsupportedKind,
  NormNotInBase,
  TooLarge,
  AxiomViolation,
  SortMismatch,
  NotOpposite,
  SyntaxError,
  IndexOutOfRange,
  CoefficientDomainMismatch,
  NormalizationFailure,
  CapExceeded,
  TrichotomyViolation,
  IOFailure,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::InvalidSubfield: return "InvalidSubfield";
    case ErrorKind::BadExtensionDegree: return "BadExtensionDegree";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::NormNotInBase: return "NormNotInBase";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::SortMismatch: return "SortMismatch";
    case ErrorKind::NotOpposite: return "NotOpposite";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CoefficientDomainMismatch: return "CoefficientDomainMismatch";
    case ErrorKind::NormalizationFailure: return "NormalizationFailure";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::TrichotomyViolation: return "TrichotomyViolation";
    case ErrorKind::IOFailure: return "IOFailure";
  }
  return "Unknown";
}

class HexError : public std::runtime_error {
 public:
  HexError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw HexError(kind, msg); }

// Global worker cap, set once by the CLI (--threads / HEXFORGE_THREADS).
inline int& worker_cap() {
  static int cap = 0;  // 0 = hardware default
  return cap;
}

inline int effective_workers(std::size_t jobs) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int cap = worker_cap() > 0 ? worker_cap() : hw;
  if (static_cast<std::size_t>(cap) > jobs) cap = static_cast<int>(jobs);
  return cap < 1 ? 1 : cap;
}

// Runs fn(i) for i in [0, n).  Tasks must write to disjoint state.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  int workers = effective_workers(n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load()) fail(ErrorKind::NormalizationFailure, "worker task threw");
}

}  // namespace hexforge
