// Compares the serial reference kernels against the OpenMP ones and
// reports timings. Results must agree exactly.
#include <chrono>
#include <iostream>

#include "deg/llt.hpp"
#include "deg/macdonald.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms,
            bool agree) {
  std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms
            << " ms, speedup " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
            << (agree ? "" : "  [MISMATCH]") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; both runs are serial\n";
#endif

  {
    // LLT polynomial on a 12-cell 3-tuple: ~280k standard tuples
    deg::TupleShape shape = deg::parse_tuple_shape("2,2;2,2;2,2");
    deg::QSymAggregate a, b;
    double ts = time_ms([&] { a = deg::llt_polynomial(shape, deg::Exec::Serial, 12); });
    double tp = time_ms([&] { b = deg::llt_polynomial(shape, deg::Exec::Parallel, 12); });
    report("llt_polynomial (2,2;2,2;2,2)", ts, tp, a == b);
  }
  {
    // Macdonald generating function over 9! fillings
    deg::Partition mu({3, 3, 3});
    deg::QSymAggregate a, b;
    double ts = time_ms([&] { a = deg::macdonald_qsym(mu, deg::Exec::Serial, 9); });
    double tp = time_ms([&] { b = deg::macdonald_qsym(mu, deg::Exec::Parallel, 9); });
    report("macdonald_qsym (3,3,3)", ts, tp, a == b);
  }
  {
    // Haglund decomposition: per-descent-set LLT slices
    deg::Partition mu({2, 2, 2, 1});
    deg::QSymAggregate a, b;
    double ts = time_ms([&] { a = deg::macdonald_via_llt(mu, deg::Exec::Serial, 8); });
    double tp = time_ms([&] { b = deg::macdonald_via_llt(mu, deg::Exec::Parallel, 8); });
    report("macdonald_via_llt (2,2,2,1)", ts, tp, a == b);
  }
  {
    // graph transform across the components of an 8-cell domino graph
    deg::SchurPoly a, b;
    deg::TupleShape shape = deg::parse_tuple_shape("3,1;3,1");
    double ts = time_ms([&] {
      a = deg::llt_schur(shape, deg::LltMethod::Transform, deg::Exec::Serial, 8).poly;
    });
    double tp = time_ms([&] {
      b = deg::llt_schur(shape, deg::LltMethod::Transform, deg::Exec::Parallel, 8).poly;
    });
    report("llt_schur transform (3,1;3,1)", ts, tp, a == b);
  }
  return 0;
}
