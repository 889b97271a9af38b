#pragma once

namespace gl3verify {

// Toolkit version, embedded in every verification report. Reports produced
// with the same (suite, seed, config, version) tuple are byte-identical, so
// bump this whenever a change could alter any recorded residual.
inline constexpr const char* kVersion = "1.0.0";

}  // namespace gl3verify
