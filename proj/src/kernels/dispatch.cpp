#include <cstdlib>
#include <stdexcept>

#include "braidprob/kernels.hpp"

namespace braidprob::kernels {

namespace {

const Ops* pick_default() {
  if (const char* env = std::getenv("BRAIDPROB_KERNEL")) {
    std::string want = env;
    if (want == "scalar") return &scalar_ops();
    if (want == "avx2" && avx2_ops()) return avx2_ops();
    if (want == "neon" && neon_ops()) return neon_ops();
    // unknown or unavailable: fall through to auto-detection
  }
  if (const Ops* v = avx2_ops()) return v;
  if (const Ops* v = neon_ops()) return v;
  return &scalar_ops();
}

const Ops*& current() {
  static const Ops* ops = pick_default();
  return ops;
}

}  // namespace

const Ops& active() { return *current(); }

void select(const std::string& name) {
  if (name == "scalar") {
    current() = &scalar_ops();
    return;
  }
  if (name == "avx2" && avx2_ops()) {
    current() = avx2_ops();
    return;
  }
  if (name == "neon" && neon_ops()) {
    current() = neon_ops();
    return;
  }
  throw std::invalid_argument("kernels: variant '" + name + "' unavailable");
}

}  // namespace braidprob::kernels
