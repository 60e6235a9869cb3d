#pragma once

namespace circletree {

// Version of the genus kernel. Cached census rows and catalog snapshots are
// keyed by this string and refuse to load across versions.
inline constexpr const char* kKernelVersion = "circletree-kernel-1";

}  // namespace circletree
