#include "dicut/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace dicut {

int sweep_x_of_ell(int ell) { return ell; }
int sweep_ell_of_x(int x) { return x; }

int default_workers() {
  if (const char* env = std::getenv("OBLIVIOUS_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::vector<SweepRow> sweep_discretization(const Rat& b, std::vector<int> ells, LPMode mode,
                                           int workers) {
  std::sort(ells.begin(), ells.end());
  std::vector<SweepRow> rows(ells.size());
  if (workers <= 0) workers = default_workers();
  workers = std::min<int>(workers, std::max<size_t>(ells.size(), 1));

  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= ells.size()) return;
      SweepRow& row = rows[k];
      row.ell = ells[k];
      row.x = sweep_x_of_ell(ells[k]);
      row.b = b;
      try {
        RatioValue rv = compute_ratio(discretize_plsigmoid(b, ells[k]), mode);
        row.ratio = rat_to_double(rv.value);
        row.ok = true;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return rows;
}

InterceptSearchResult search_intercept(int ell, const Rat& lo, const Rat& hi, int iters,
                                       LPMode mode) {
  if (!(lo > 0) || lo > hi || hi > 1) throw std::invalid_argument("need 0 < lo <= hi <= 1");
  if (iters <= 0) throw std::invalid_argument("iters must be positive");
  InterceptSearchResult out;
  out.best_b = lo;
  out.best_ratio = -1;
  auto eval = [&](const Rat& b) {
    RatioValue rv = compute_ratio(discretize_plsigmoid(b, ell), mode);
    double r = rat_to_double(rv.value);
    out.trace.emplace_back(b, r);
    if (r > out.best_ratio) {
      out.best_ratio = r;
      out.best_b = b;
    }
    return r;
  };
  if (lo == hi) {
    eval(lo);
    return out;
  }
  Rat a = lo, c = hi;
  eval(a);
  eval(c);
  for (int it = 0; it < iters; ++it) {
    Rat third = (c - a) / 3;
    Rat m1 = a + third, m2 = c - third;
    double f1 = eval(m1), f2 = eval(m2);
    if (f1 < f2)
      a = m1;
    else
      c = m2;
  }
  return out;
}

}  // namespace dicut
