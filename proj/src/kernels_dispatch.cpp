#include "dcx/kernels.hpp"

#include <cstdlib>

namespace dcx::kernels {

namespace {

struct Table {
  CaxpyFn caxpy;
  CrotFn crot;
  SumsqFn sumsq;
  const char* name;
};

constexpr Table kScalar = {&scalar::caxpy, &scalar::crot, &scalar::sumsq,
                           "scalar"};

bool lookup(std::string_view name, Table& out) {
  if (name == "scalar") {
    out = kScalar;
    return true;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (name == "avx2" && avx2::supported()) {
    out = {&avx2::caxpy, &avx2::crot, &avx2::sumsq, "avx2"};
    return true;
  }
#endif
#if defined(__aarch64__)
  if (name == "neon") {
    out = {&neon::caxpy, &neon::crot, &neon::sumsq, "neon"};
    return true;
  }
#endif
  return false;
}

Table detect() {
  Table t = kScalar;
  if (const char* env = std::getenv("DCX_KERNELS")) {
    if (lookup(env, t)) {
      return t;
    }
  }
#if defined(__aarch64__)
  lookup("neon", t);
#else
  lookup("avx2", t);
#endif
  return t;
}

Table g_active = detect();

}  // namespace

CaxpyFn caxpy = g_active.caxpy;
CrotFn crot = g_active.crot;
SumsqFn sumsq = g_active.sumsq;

const char* backend() { return g_active.name; }

bool select_backend(std::string_view name) {
  Table t;
  if (!lookup(name, t)) {
    return false;
  }
  g_active = t;
  caxpy = t.caxpy;
  crot = t.crot;
  sumsq = t.sumsq;
  return true;
}

}  // namespace dcx::kernels
