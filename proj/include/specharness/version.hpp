#pragma once

namespace specharness {

inline constexpr const char* kToolVersion = "0.1.0";

// Bumped whenever an emitted file layout changes incompatibly.
inline constexpr int kSuiteSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kTrajectorySchemaVersion = 1;
inline constexpr int kTaskManifestSchemaVersion = 1;

}  // namespace specharness
