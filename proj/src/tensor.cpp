#include "tnet/tensor.hpp"

#include <algorithm>
#include <utility>

namespace tnet {

namespace {

struct Sym4Table {
  std::array<std::array<int, 6>, 6> slot{};
  constexpr Sym4Table() {
    int n = 0;
    for (int p = 0; p < 6; ++p)
      for (int q = p; q < 6; ++q) {
        slot[p][q] = n;
        slot[q][p] = n;
        ++n;
      }
  }
};

struct Sym6Table {
  std::array<std::array<std::array<int, 6>, 6>, 6> slot{};
  std::array<std::array<int, 3>, 56> triples{};
  constexpr Sym6Table() {
    int n = 0;
    for (int p = 0; p < 6; ++p)
      for (int q = p; q < 6; ++q)
        for (int r = q; r < 6; ++r) {
          triples[n] = {p, q, r};
          const int perm[6][3] = {{p, q, r}, {p, r, q}, {q, p, r},
                                  {q, r, p}, {r, p, q}, {r, q, p}};
          for (auto& x : perm) slot[x[0]][x[1]][x[2]] = n;
          ++n;
        }
  }
};

constexpr Sym4Table kSym4{};
constexpr Sym6Table kSym6{};

inline int vi(int i, int j) { return kVoigtIndex[i][j]; }

}  // namespace

int sym4_slot(int p, int q) { return kSym4.slot[p][q]; }
int sym6_slot(int p, int q, int r) { return kSym6.slot[p][q][r]; }

double SymTensor2::operator()(int i, int j) const { return v[vi(i, j)]; }
double& SymTensor2::at(int i, int j) { return v[vi(i, j)]; }

double SymTensor4::operator()(int i, int j, int k, int l) const {
  return v[kSym4.slot[vi(i, j)][vi(k, l)]];
}
double SymTensor4::pair(int p, int q) const { return v[kSym4.slot[p][q]]; }
double& SymTensor4::pair_ref(int p, int q) { return v[kSym4.slot[p][q]]; }

double SymTensor6::operator()(int i, int j, int k, int l, int m, int n) const {
  return v[kSym6.slot[vi(i, j)][vi(k, l)][vi(m, n)]];
}
double SymTensor6::triple(int p, int q, int r) const {
  return v[kSym6.slot[p][q][r]];
}
double& SymTensor6::triple_ref(int p, int q, int r) {
  return v[kSym6.slot[p][q][r]];
}

// ---- generic elementwise helpers ------------------------------------------

namespace {

template <class T>
T zip(const T& a, const T& b, double sb) {
  T r;
  for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = a.v[i] + sb * b.v[i];
  return r;
}

template <class T>
T scaled(double s, const T& a) {
  T r;
  for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = s * a.v[i];
  return r;
}

template <class T>
double max_abs_of(const T& a) {
  double m = 0.0;
  for (double x : a.v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

// ---- Tensor2 ---------------------------------------------------------------

Tensor2 operator+(const Tensor2& a, const Tensor2& b) { return zip(a, b, 1.0); }
Tensor2 operator-(const Tensor2& a, const Tensor2& b) { return zip(a, b, -1.0); }
Tensor2 operator*(double s, const Tensor2& a) { return scaled(s, a); }

Tensor2 operator*(const Tensor2& a, const Tensor2& b) {
  Tensor2 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}

Tensor2 transpose(const Tensor2& a) {
  Tensor2 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

double det(const Tensor2& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Tensor2 inverse(const Tensor2& a) {
  Tensor2 c;
  c(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  c(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  c(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  c(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  c(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  c(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  c(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  c(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  c(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const double d = a(0, 0) * c(0, 0) + a(0, 1) * c(1, 0) + a(0, 2) * c(2, 0);
  return (1.0 / d) * c;
}

double trace(const Tensor2& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

double norm(const Tensor2& a) {
  double s = 0.0;
  for (double x : a.v) s += x * x;
  return std::sqrt(s);
}

double max_abs(const Tensor2& a) { return max_abs_of(a); }

// ---- SymTensor2 ------------------------------------------------------------

SymTensor2 operator+(const SymTensor2& a, const SymTensor2& b) { return zip(a, b, 1.0); }
SymTensor2 operator-(const SymTensor2& a, const SymTensor2& b) { return zip(a, b, -1.0); }
SymTensor2 operator*(double s, const SymTensor2& a) { return scaled(s, a); }
SymTensor2& operator+=(SymTensor2& a, const SymTensor2& b) {
  for (int i = 0; i < 6; ++i) a.v[i] += b.v[i];
  return a;
}

double ddot(const SymTensor2& a, const SymTensor2& b) {
  return a.v[0] * b.v[0] + a.v[1] * b.v[1] + a.v[2] * b.v[2] +
         2.0 * (a.v[3] * b.v[3] + a.v[4] * b.v[4] + a.v[5] * b.v[5]);
}

double trace(const SymTensor2& a) { return a.v[0] + a.v[1] + a.v[2]; }

double det(const SymTensor2& a) { return det(to_full(a)); }

SymTensor2 inverse(const SymTensor2& a) { return sym(inverse(to_full(a))); }

double norm(const SymTensor2& a) { return std::sqrt(ddot(a, a)); }

double max_abs(const SymTensor2& a) { return max_abs_of(a); }

Tensor2 to_full(const SymTensor2& a) {
  Tensor2 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(i, j);
  return r;
}

SymTensor2 sym(const Tensor2& a) {
  SymTensor2 r;
  for (int p = 0; p < 6; ++p) {
    const int i = kVoigtPairs[p][0], j = kVoigtPairs[p][1];
    r.v[p] = (i == j) ? a(i, i) : 0.5 * (a(i, j) + a(j, i));
  }
  return r;
}

Tensor2 operator*(const SymTensor2& a, const SymTensor2& b) {
  return to_full(a) * to_full(b);
}

SymTensor2 congruence(const Tensor2& a, const SymTensor2& s) {
  // (a s) first, then only the upper triangle of (a s) a^T.
  Tensor2 as;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      as(i, j) = a(i, 0) * s(0, j) + a(i, 1) * s(1, j) + a(i, 2) * s(2, j);
  SymTensor2 r;
  for (int p = 0; p < 6; ++p) {
    const int i = kVoigtPairs[p][0], j = kVoigtPairs[p][1];
    r.v[p] = as(i, 0) * a(j, 0) + as(i, 1) * a(j, 1) + as(i, 2) * a(j, 2);
  }
  return r;
}

SymTensor2 dyad(const std::array<double, 3>& a) {
  SymTensor2 r;
  for (int p = 0; p < 6; ++p) r.v[p] = a[kVoigtPairs[p][0]] * a[kVoigtPairs[p][1]];
  return r;
}

// ---- SymTensor4 ------------------------------------------------------------

SymTensor4 operator+(const SymTensor4& a, const SymTensor4& b) { return zip(a, b, 1.0); }
SymTensor4 operator-(const SymTensor4& a, const SymTensor4& b) { return zip(a, b, -1.0); }
SymTensor4 operator*(double s, const SymTensor4& a) { return scaled(s, a); }
SymTensor4& operator+=(SymTensor4& a, const SymTensor4& b) {
  for (int i = 0; i < 21; ++i) a.v[i] += b.v[i];
  return a;
}
double max_abs(const SymTensor4& a) { return max_abs_of(a); }

SymTensor2 contract(const SymTensor4& t, const SymTensor2& s) {
  SymTensor2 r;
  for (int p = 0; p < 6; ++p) {
    double acc = 0.0;
    for (int q = 0; q < 6; ++q) acc += t.pair(p, q) * kVoigtMultiplicity[q] * s.v[q];
    r.v[p] = acc;
  }
  return r;
}

SymTensor4 outer_sum(const SymTensor2& a, const SymTensor2& b) {
  SymTensor4 r;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) r.pair_ref(p, q) = a.v[p] * b.v[q] + b.v[p] * a.v[q];
  return r;
}

SymTensor4 outer(const SymTensor2& a) {
  SymTensor4 r;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) r.pair_ref(p, q) = a.v[p] * a.v[q];
  return r;
}

SymTensor4 box_sym(const SymTensor2& a, const SymTensor2& b) {
  SymTensor4 r;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) {
      const int i = kVoigtPairs[p][0], j = kVoigtPairs[p][1];
      const int k = kVoigtPairs[q][0], l = kVoigtPairs[q][1];
      r.pair_ref(p, q) = 0.25 * (a(i, k) * b(j, l) + a(i, l) * b(j, k) +
                                 b(i, k) * a(j, l) + b(i, l) * a(j, k));
    }
  return r;
}

SymTensor4 sym_identity2() {
  SymTensor4 r;
  for (int p = 0; p < 3; ++p) r.pair_ref(p, p) = 2.0;
  for (int p = 3; p < 6; ++p) r.pair_ref(p, p) = 1.0;
  return r;
}

SymTensor4 delta_delta() {
  SymTensor4 r;
  for (int p = 0; p < 3; ++p)
    for (int q = p; q < 3; ++q) r.pair_ref(p, q) = 1.0;
  return r;
}

Full4 expand(const SymTensor4& t) {
  Full4 f{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) f[((i * 3 + j) * 3 + k) * 3 + l] = t(i, j, k, l);
  return f;
}

SymTensor4 pack4(const Full4& f) {
  SymTensor4 r;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) {
      const int i = kVoigtPairs[p][0], j = kVoigtPairs[p][1];
      const int k = kVoigtPairs[q][0], l = kVoigtPairs[q][1];
      r.pair_ref(p, q) = f[((i * 3 + j) * 3 + k) * 3 + l];
    }
  return r;
}

SymTensor4 push_forward(const Tensor2& f, const SymTensor4& t) {
  // Transform one index at a time: four passes of 81x3 work.
  Full4 a = expand(t);
  Full4 b{};
  constexpr int stride[4] = {27, 9, 3, 1};
  for (int slot = 0; slot < 4; ++slot) {
    const int s = stride[slot];
    for (int idx = 0; idx < 81; ++idx) {
      const int digit = (idx / s) % 3;
      const int base = idx - digit * s;
      b[idx] = f(digit, 0) * a[base] + f(digit, 1) * a[base + s] +
               f(digit, 2) * a[base + 2 * s];
    }
    std::swap(a, b);
  }
  return pack4(a);
}

// ---- SymTensor6 ------------------------------------------------------------

SymTensor6 operator+(const SymTensor6& a, const SymTensor6& b) { return zip(a, b, 1.0); }
SymTensor6 operator-(const SymTensor6& a, const SymTensor6& b) { return zip(a, b, -1.0); }
SymTensor6 operator*(double s, const SymTensor6& a) { return scaled(s, a); }
SymTensor6& operator+=(SymTensor6& a, const SymTensor6& b) {
  for (int i = 0; i < 56; ++i) a.v[i] += b.v[i];
  return a;
}
double max_abs(const SymTensor6& a) { return max_abs_of(a); }

SymTensor4 contract(const SymTensor6& t, const SymTensor2& s) {
  SymTensor4 r;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) {
      double acc = 0.0;
      for (int m = 0; m < 6; ++m) acc += t.triple(p, q, m) * kVoigtMultiplicity[m] * s.v[m];
      r.pair_ref(p, q) = acc;
    }
  return r;
}

SymTensor6 outer3(const SymTensor2& a) {
  SymTensor6 r;
  for (int n = 0; n < 56; ++n) {
    const auto& t = kSym6.triples[n];
    r.v[n] = a.v[t[0]] * a.v[t[1]] * a.v[t[2]];
  }
  return r;
}

Full6 expand(const SymTensor6& t) {
  Full6 f{};
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      for (int c = 0; c < 9; ++c)
        f[(a * 9 + b) * 9 + c] =
            t.triple(vi(a / 3, a % 3), vi(b / 3, b % 3), vi(c / 3, c % 3));
  return f;
}

SymTensor6 pack6(const Full6& f) {
  SymTensor6 r;
  for (int n = 0; n < 56; ++n) {
    const auto& t = kSym6.triples[n];
    const int a = kVoigtPairs[t[0]][0] * 3 + kVoigtPairs[t[0]][1];
    const int b = kVoigtPairs[t[1]][0] * 3 + kVoigtPairs[t[1]][1];
    const int c = kVoigtPairs[t[2]][0] * 3 + kVoigtPairs[t[2]][1];
    r.v[n] = f[(a * 9 + b) * 9 + c];
  }
  return r;
}

}  // namespace tnet
