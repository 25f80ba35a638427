#include "picard/points.hpp"

#include <map>

#include "picard/hermitian.hpp"
#include "picard/words.hpp"

namespace picard {

namespace {

Vec3 make(const CycNum& a, const CycNum& b, const CycNum& c) {
  Vec3 v;
  v(0) = a;
  v(1) = b;
  v(2) = c;
  return v;
}

std::map<std::string, Vec3> build_registry() {
  CycNum w = embed(Constant::omega);
  CycNum wbar = conj(w);
  CycNum i = embed(Constant::i);
  CycNum s3 = embed(Constant::sqrt3);
  CycNum half = CycNum(Rational(1, 2));
  CycNum one(1), zero(0);

  std::map<std::string, Vec3> reg;
  reg["qinf"] = make(one, zero, zero);
  reg["z0"] = make(wbar, zero, one);
  reg["z1"] = make(CycNum(-1), -w, one);
  reg["z2"] = make(CycNum(-1), one, one);
  reg["z3"] = make(w, zero, one);
  // w3 = (-e^{pi i/9}, 1/2 - (sqrt3/2 - 2 sin(pi/9)) i, 1)
  reg["w3"] = make(-embed(Constant::zeta18),
                   half - (s3 * half - CycNum(2) * embed(Constant::sin_pi_9)) * i,
                   one);
  // w4 = (-sqrt3/2 - i/2, 1/2 + (2 - sqrt3) i / 2, 1)
  reg["w4"] = make(-s3 * half - i * half,
                   half + (CycNum(2) - s3) * i * half, one);
  reg["w12"] = make(CycNum(-1), zero, one);
  reg["n1"] = make(zero, one, zero);
  reg["n2"] = make(zero, -w, one);
  reg["n3"] = make(CycNum(-1), one, zero);
  return reg;
}

const std::map<std::string, Vec3>& registry() {
  static const std::map<std::string, Vec3> reg = build_registry();
  return reg;
}

}  // namespace

const Vec3& named_point(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownGenerator(name);
  return it->second;
}

const std::vector<std::string>& named_point_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, vec] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::string identify_point(const Vec3& v) {
  for (const auto& [name, lift] : registry())
    if (proj_equal(v, lift)) return name;
  return "";
}

}  // namespace picard
