// Copyright 2025 The emsf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace emsf {

// Base class for everything the engine throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us inconsistent shapes, channel counts, or configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A public operation produced NaN/Inf.
class NumericError : public Error {
 public:
  using Error::Error;
};

// File / image I/O failures (missing files, malformed PNGs, ...).
class IoError : public Error {
 public:
  using Error::Error;
};

// Weight-container failures. Each code is a distinct, named rejection reason
// so callers (and tests) can tell truncation from a bad shape from NaNs.
enum class ModelErrorCode {
  kContainerFormat,   // bad magic, truncated file, unreadable blob
  kVersionMismatch,   // format_version not supported
  kManifestInvalid,   // manifest JSON malformed or internally inconsistent
  kMissingTensor,     // architecture requires a tensor the file lacks
  kUnexpectedTensor,  // file carries a tensor the architecture does not use
  kShapeMismatch,     // tensor present but with the wrong shape
  kNonFiniteValues,   // tensor data contains NaN/Inf
};

inline const char* to_string(ModelErrorCode c) {
  switch (c) {
    case ModelErrorCode::kContainerFormat: return "container_format";
    case ModelErrorCode::kVersionMismatch: return "version_mismatch";
    case ModelErrorCode::kManifestInvalid: return "manifest_invalid";
    case ModelErrorCode::kMissingTensor: return "missing_tensor";
    case ModelErrorCode::kUnexpectedTensor: return "unexpected_tensor";
    case ModelErrorCode::kShapeMismatch: return "shape_mismatch";
    case ModelErrorCode::kNonFiniteValues: return "non_finite_values";
  }
  return "unknown";
}

class ModelError : public Error {
 public:
  ModelError(ModelErrorCode code, const std::string& detail)
      : Error(std::string(to_string(code)) + ": " + detail), code_(code) {}
  ModelErrorCode code() const { return code_; }

 private:
  ModelErrorCode code_;
};

inline void check_cfg(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

}  // namespace emsf
