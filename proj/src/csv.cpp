#include "tnet/csv.hpp"

#include <cstdio>

namespace tnet {

namespace {

void put(std::ostream& out, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out << buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<Record>& records) {
  const std::size_t networks = records.empty() ? 0 : records.front().gamma0.size();
  out << "t,T";
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) out << ",F" << i << j;
  out << ",sig11,sig22,sig33,sig12,sig13,sig23";
  for (std::size_t n = 1; n <= networks; ++n) out << ",gamma0_net" << n;
  out << ",newton_iters\n";
  for (const Record& r : records) {
    put(out, r.t);
    out << ',';
    put(out, r.T);
    for (double f : r.F.v) out << ',', put(out, f);
    for (double s : r.sigma.v) out << ',', put(out, s);
    for (double g : r.gamma0) out << ',', put(out, g);
    out << ',' << r.newton_iterations << '\n';
  }
}

}  // namespace tnet
