#pragma once

#include <cstddef>
#include <string>

namespace coop::kernels {

// Data-parallel reduction kernels used by the likelihood accumulation loops.
// A scalar reference implementation always exists; on x86-64 an AVX2/FMA
// variant is selected at runtime when the CPU supports it. The two differ
// only by floating-point reassociation.
//
// Selection order: COOP_SIMD environment variable ("scalar" or "avx2") if
// set, otherwise the best supported backend.

enum class Backend { Scalar, Avx2 };

Backend active_backend();
void set_backend(Backend b);  // throws if unsupported on this CPU
bool avx2_supported();
std::string backend_name(Backend b);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);
// sum_i a[i]
double sum(const double* a, std::size_t n);
// sum_i a[i]^2
double sumsq(const double* a, std::size_t n);
// sum_i w[i] * a[i] * b[i]
double wdot(const double* w, const double* a, const double* b, std::size_t n);
// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// Reference path, kept callable for equivalence tests regardless of the
// active backend.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double sumsq(const double* a, std::size_t n);
double wdot(const double* w, const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
}  // namespace scalar

}  // namespace coop::kernels
