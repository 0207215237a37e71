#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace tnet {

// Dense 3x3 tensor, row-major.
struct Tensor2 {
  std::array<double, 9> v{};

  constexpr double& operator()(int i, int j) { return v[3 * i + j]; }
  constexpr double operator()(int i, int j) const { return v[3 * i + j]; }

  static constexpr Tensor2 identity() {
    Tensor2 t;
    t.v = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return t;
  }
  static constexpr Tensor2 diag(double a, double b, double c) {
    Tensor2 t;
    t.v = {a, 0, 0, 0, b, 0, 0, 0, c};
    return t;
  }
  bool operator==(const Tensor2&) const = default;
};

// Symmetric 3x3 tensor stored as (11, 22, 33, 12, 13, 23).
struct SymTensor2 {
  std::array<double, 6> v{};

  double operator()(int i, int j) const;
  double& at(int i, int j);

  static constexpr SymTensor2 identity() {
    SymTensor2 s;
    s.v = {1, 1, 1, 0, 0, 0};
    return s;
  }
  static constexpr SymTensor2 diag(double a, double b, double c) {
    SymTensor2 s;
    s.v = {a, b, c, 0, 0, 0};
    return s;
  }
  bool operator==(const SymTensor2&) const = default;
};

// Fourth-order tensor with minor and major symmetry: a symmetric 6x6 array
// over the Voigt pair indices, upper triangle stored row by row (21 values).
// Components are plain tensor components, not Mandel-scaled.
struct SymTensor4 {
  std::array<double, 21> v{};

  double operator()(int i, int j, int k, int l) const;
  double pair(int p, int q) const;
  double& pair_ref(int p, int q);

  bool operator==(const SymTensor4&) const = default;
};

// Sixth-order tensor, symmetric within each index pair and under any
// permutation of the three pairs. Stored for sorted pair triples p<=q<=r in
// lexicographic order (56 values).
struct SymTensor6 {
  std::array<double, 56> v{};

  double operator()(int i, int j, int k, int l, int m, int n) const;
  double triple(int p, int q, int r) const;
  double& triple_ref(int p, int q, int r);

  bool operator==(const SymTensor6&) const = default;
};

// Voigt pair <-> index maps shared by every packed type.
inline constexpr std::array<std::array<int, 2>, 6> kVoigtPairs{
    {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};
inline constexpr std::array<std::array<int, 3>, 3> kVoigtIndex{
    {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}}};
// Number of full-tensor entries represented by each Voigt slot.
inline constexpr std::array<double, 6> kVoigtMultiplicity{1, 1, 1, 2, 2, 2};

int sym4_slot(int p, int q);
int sym6_slot(int p, int q, int r);

using Full4 = std::array<double, 81>;
using Full6 = std::array<double, 729>;

// ---- Tensor2 -------------------------------------------------------------
Tensor2 operator+(const Tensor2& a, const Tensor2& b);
Tensor2 operator-(const Tensor2& a, const Tensor2& b);
Tensor2 operator*(double s, const Tensor2& a);
Tensor2 operator*(const Tensor2& a, const Tensor2& b);
Tensor2 transpose(const Tensor2& a);
double det(const Tensor2& a);
Tensor2 inverse(const Tensor2& a);
double trace(const Tensor2& a);
double norm(const Tensor2& a);
double max_abs(const Tensor2& a);

// ---- SymTensor2 ----------------------------------------------------------
SymTensor2 operator+(const SymTensor2& a, const SymTensor2& b);
SymTensor2 operator-(const SymTensor2& a, const SymTensor2& b);
SymTensor2 operator*(double s, const SymTensor2& a);
SymTensor2& operator+=(SymTensor2& a, const SymTensor2& b);
double ddot(const SymTensor2& a, const SymTensor2& b);
double trace(const SymTensor2& a);
double det(const SymTensor2& a);
SymTensor2 inverse(const SymTensor2& a);
double norm(const SymTensor2& a);
double max_abs(const SymTensor2& a);
Tensor2 to_full(const SymTensor2& a);
// Symmetric part of a dense tensor.
SymTensor2 sym(const Tensor2& a);
Tensor2 operator*(const SymTensor2& a, const SymTensor2& b);
// A S A^T
SymTensor2 congruence(const Tensor2& a, const SymTensor2& s);
// a (x) a for a vector
SymTensor2 dyad(const std::array<double, 3>& a);

// ---- SymTensor4 ----------------------------------------------------------
SymTensor4 operator+(const SymTensor4& a, const SymTensor4& b);
SymTensor4 operator-(const SymTensor4& a, const SymTensor4& b);
SymTensor4 operator*(double s, const SymTensor4& a);
SymTensor4& operator+=(SymTensor4& a, const SymTensor4& b);
double max_abs(const SymTensor4& a);
// (T : S)_ij = T_ijkl S_kl
SymTensor2 contract(const SymTensor4& t, const SymTensor2& s);
// a (x) b + b (x) a
SymTensor4 outer_sum(const SymTensor2& a, const SymTensor2& b);
// a (x) a
SymTensor4 outer(const SymTensor2& a);
// 1/4 (a_ik b_jl + a_il b_jk + b_ik a_jl + b_il a_jk)
SymTensor4 box_sym(const SymTensor2& a, const SymTensor2& b);
// delta_ik delta_jl + delta_il delta_jk
SymTensor4 sym_identity2();
// delta_ij delta_kl
SymTensor4 delta_delta();
Full4 expand(const SymTensor4& t);
SymTensor4 pack4(const Full4& f);
// F_iI F_jJ F_kK F_lL T_IJKL
SymTensor4 push_forward(const Tensor2& f, const SymTensor4& t);

// ---- SymTensor6 ----------------------------------------------------------
SymTensor6 operator+(const SymTensor6& a, const SymTensor6& b);
SymTensor6 operator-(const SymTensor6& a, const SymTensor6& b);
SymTensor6 operator*(double s, const SymTensor6& a);
SymTensor6& operator+=(SymTensor6& a, const SymTensor6& b);
double max_abs(const SymTensor6& a);
// (T : S)_ijkl = T_ijklmn S_mn
SymTensor4 contract(const SymTensor6& t, const SymTensor2& s);
// a (x) a (x) a
SymTensor6 outer3(const SymTensor2& a);
Full6 expand(const SymTensor6& t);
SymTensor6 pack6(const Full6& f);

}  // namespace tnet
