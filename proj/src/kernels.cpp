#include "sqen/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace sqen::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void rank2_update(double a, const double* u, double b, const double* v,
                  double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] -= a * u[i] + b * v[i];
}

void rotate_rows(double* a, double* b, double c, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = a[i];
    const double bi = b[i];
    a[i] = c * ai - s * bi;
    b[i] = s * ai + c * bi;
  }
}

double sum_sq(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double sum_sq_diff(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return acc;
}

}  // namespace scalar

#if defined(SQEN_BUILD_AVX2)
namespace avx2 {
// Implemented in kernels_avx2.cpp, compiled with -mavx2 -mfma.
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void rank2_update(double a, const double* u, double b, const double* v,
                  double* y, std::size_t n);
void rotate_rows(double* a, double* b, double c, double s, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double sum_sq_diff(const double* x, const double* y, std::size_t n);
}  // namespace avx2
#endif

namespace {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*rank2_update)(double, const double*, double, const double*, double*,
                       std::size_t);
  void (*rotate_rows)(double*, double*, double, double, std::size_t);
  double (*sum_sq)(const double*, std::size_t);
  double (*sum_sq_diff)(const double*, const double*, std::size_t);
};

constexpr KernelTable kScalarTable = {
    scalar::dot,        scalar::axpy,   scalar::rank2_update,
    scalar::rotate_rows, scalar::sum_sq, scalar::sum_sq_diff};

#if defined(SQEN_BUILD_AVX2)
constexpr KernelTable kAvx2Table = {
    avx2::dot,        avx2::axpy,   avx2::rank2_update,
    avx2::rotate_rows, avx2::sum_sq, avx2::sum_sq_diff};
#endif

bool cpu_has_avx2() {
#if defined(SQEN_BUILD_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend pick_default_backend() {
  if (const char* env = std::getenv("SQEN_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!cpu_has_avx2())
        throw std::runtime_error("SQEN_KERNEL=avx2 but AVX2 is unavailable");
      return Backend::avx2;
    }
    throw std::runtime_error(std::string("unknown SQEN_KERNEL value: ") + env);
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

struct Dispatch {
  Backend backend;
  const KernelTable* table;
  Dispatch() : backend(pick_default_backend()), table(table_for(backend)) {}
  static const KernelTable* table_for(Backend b) {
#if defined(SQEN_BUILD_AVX2)
    if (b == Backend::avx2) return &kAvx2Table;
#endif
    return &kScalarTable;
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

double dot(const double* x, const double* y, std::size_t n) {
  return dispatch().table->dot(x, y, n);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  dispatch().table->axpy(a, x, y, n);
}

void rank2_update(double a, const double* u, double b, const double* v,
                  double* y, std::size_t n) {
  dispatch().table->rank2_update(a, u, b, v, y, n);
}

void rotate_rows(double* a, double* b, double c, double s, std::size_t n) {
  dispatch().table->rotate_rows(a, b, c, s, n);
}

double sum_sq(const double* x, std::size_t n) {
  return dispatch().table->sum_sq(x, n);
}

double sum_sq_diff(const double* x, const double* y, std::size_t n) {
  return dispatch().table->sum_sq_diff(x, y, n);
}

Backend active_backend() { return dispatch().backend; }

std::string_view backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) {
  if (b == Backend::scalar) return true;
  return cpu_has_avx2();
}

void use_backend(Backend b) {
  if (!backend_available(b))
    throw std::runtime_error(std::string("kernel backend unavailable: ") +
                             std::string(backend_name(b)));
  dispatch().backend = b;
  dispatch().table = Dispatch::table_for(b);
}

}  // namespace sqen::kernels
