#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cct {

struct TubePoint {
  std::string id;
  int rank = 1;

  bool homogeneous() const { return rank == 1; }
  auto operator<=>(const TubePoint&) const = default;
};

/// Indecomposable of finite regular length in a stable tube, given by its
/// regular socle and length. Regular composition factors ascend from the
/// socle: socle, socle + 1, ..., socle + length - 1 (mod rank).
struct TubeObject {
  TubePoint point;
  int socle = 0;
  int length = 1;

  int top() const;
  auto operator<=>(const TubeObject&) const = default;
};

/// Normalizes the socle modulo the rank; throws on length < 1.
TubeObject tube_object(const TubePoint& point, int socle, int length);

TubeObject tau(const TubeObject& x);
TubeObject tau_inverse(const TubeObject& x);

/// Multiplicity of each residue 0..rank-1 among the regular composition factors.
std::vector<int> reg_comp_factors(const TubeObject& x);
bool has_comp_factor(const TubeObject& x, int index);

int hom_dim(const TubeObject& a, const TubeObject& b);
int ext1_dim(const TubeObject& a, const TubeObject& b);

/// The objects (socle + i, l) with i >= 0, l >= 1, i + l <= length.
std::vector<TubeObject> wing(const TubeObject& vertex);
bool in_wing(const TubeObject& x, const TubeObject& vertex);

/// Direct limit along the ray with the given regular socle.
struct Prufer {
  TubePoint point;
  int socle = 0;
  auto operator<=>(const Prufer&) const = default;
};

/// Inverse limit along the coray with the given regular top.
struct Adic {
  TubePoint point;
  int top = 0;
  auto operator<=>(const Adic&) const = default;
};

/// Ext^1(Prufer, Y) = 0: the socle is no regular composition factor of tau^- Y.
bool prufer_in_perp(const std::vector<TubeObject>& y, const Prufer& p);
/// Ext^1(Y, Adic) = 0: the top is no regular composition factor of tau Y.
bool adic_in_perp_right(const std::vector<TubeObject>& y, const Adic& a);
bool prufer_adic_ext_vanishes(const Prufer& p, const Adic& a);

std::string to_string(const TubeObject& x);

}  // namespace cct
