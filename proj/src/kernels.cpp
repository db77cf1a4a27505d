#include "coop/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "coop/error.hpp"

namespace coop::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

double sumsq(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
  return s;
}

double wdot(const double* w, const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double sumsq(const double* a, std::size_t n);
double wdot(const double* w, const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace avx2
#endif

namespace {

struct Vtable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*sumsq)(const double*, std::size_t);
  double (*wdot)(const double*, const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
};

constexpr Vtable kScalar{scalar::dot, scalar::sum, scalar::sumsq, scalar::wdot,
                         scalar::axpy};
#if defined(__x86_64__)
constexpr Vtable kAvx2{avx2::dot, avx2::sum, avx2::sumsq, avx2::wdot,
                       avx2::axpy};
#endif

struct Dispatch {
  Backend backend;
  const Vtable* vt;

  Dispatch() {
    backend = avx2_supported() ? Backend::Avx2 : Backend::Scalar;
    if (const char* env = std::getenv("COOP_SIMD")) {
      if (std::strcmp(env, "scalar") == 0) backend = Backend::Scalar;
      if (std::strcmp(env, "avx2") == 0 && avx2_supported())
        backend = Backend::Avx2;
    }
    apply();
  }

  void apply() {
#if defined(__x86_64__)
    vt = backend == Backend::Avx2 ? &kAvx2 : &kScalar;
#else
    vt = &kScalar;
#endif
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() { return dispatch().backend; }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_supported())
    throw Error(ErrorCode::BadConfig, "AVX2 backend not supported on this CPU");
  dispatch().backend = b;
  dispatch().apply();
}

std::string backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

double dot(const double* a, const double* b, std::size_t n) {
  return dispatch().vt->dot(a, b, n);
}
double sum(const double* a, std::size_t n) { return dispatch().vt->sum(a, n); }
double sumsq(const double* a, std::size_t n) {
  return dispatch().vt->sumsq(a, n);
}
double wdot(const double* w, const double* a, const double* b, std::size_t n) {
  return dispatch().vt->wdot(w, a, b, n);
}
void axpy(double alpha, const double* x, double* y, std::size_t n) {
  dispatch().vt->axpy(alpha, x, y, n);
}

}  // namespace coop::kernels
