#pragma once

namespace og10 {

// Artifact identity, kept in one place so reports and the CLI agree.
inline constexpr const char* kArtifactName = "og10-llv-invariants";
inline constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace og10
