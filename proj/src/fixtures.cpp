#include "hhlie/cohomology.hpp"

#include <string>

namespace hhlie {

namespace {

std::string I(int v) { return std::to_string(v); }

struct Builder {
  FixtureSet set;
  void add(std::string name, std::vector<std::string> values, bool in_basis = true) {
    set.cochains.push_back({std::move(name), std::move(values), in_basis});
  }
};

// x^2 = (yx)^{k-1}y + ..., y^2 = d(xy)^k
FixtureSet semidihedral_local(const FamilyParams& p) {
  const int k = p.k;
  const bool c0 = p.c == 0, d0 = p.d == 0, odd = k % 2 == 1;
  Builder b;
  for (int t = 0; t < k; ++t) {
    bool basis = t > 0 || (odd && c0 && d0);
    b.add("phi" + I(t), {"x*(y*x)^" + I(t), "0"}, basis);
  }
  b.add("theta1", {"y*(x*y)^(k-1)", "0"});
  b.add("theta-1", {"0", "x*(y*x)^(k-1)"});
  b.add("theta2", {"(x*y)^k", "0"});
  b.add("theta-2", {"0", "(x*y)^k"});
  b.add("theta0", {"1 + c*x", "c*y + d*(y*x)^(k-1)"});
  bool with_omega = (odd && d0) || (!odd && d0);
  bool with_chi = !odd;
  b.add("omega", {"y*(x*y)^(k-2) + c*(y*x)^(k-1)", "1"}, with_omega);
  b.add("chi", {"0", "y"}, with_chi);
  for (int t = 1; t < k; ++t) {
    b.set.coboundaries.push_back({"x*(y*x)^" + I(t), "y*(x*y)^" + I(t)});
    b.set.coboundaries.push_back({"(x*y)^" + I(t) + " + (y*x)^" + I(t), "0"});
    b.set.coboundaries.push_back({"0", "(x*y)^" + I(t) + " + (y*x)^" + I(t)});
  }
  return b.set;
}

FixtureSet quaternion_local(const FamilyParams& p) {
  const int k = p.k;
  Builder b;
  for (int t = 1; t < k; ++t) b.add("phi" + I(t), {"x*(y*x)^" + I(t), "0"});
  b.add("theta1", {"y*(x*y)^(k-1)", "0"});
  b.add("theta-1", {"0", "x*(y*x)^(k-1)"});
  b.add("theta2", {"(x*y)^k", "0"});
  b.add("theta-2", {"0", "(x*y)^k"});
  bool merged = k % 2 == 1 && (p.c != 0 || p.d != 0);
  // at k = 2 both need an extra x*y to be cocycles
  std::string fix = k == 2 ? " + x*y" : "";
  std::string chi_x = "1 + c*x" + fix, chi_y = "x*(y*x)^(k-2) + d*(x*y)^(k-1)";
  std::string om_x = "y*(x*y)^(k-2) + c*(y*x)^(k-1)", om_y = "1 + d*y" + fix;
  b.add("chi", {chi_x, chi_y}, !merged);
  b.add("omega", {om_x, om_y}, !merged);
  b.add("psi", {"d*(" + chi_x + ") + c*(" + om_x + ")", "d*(" + chi_y + ") + c*(" + om_y + ")"}, merged);
  return b.set;
}

// arrows a: 1->1, b: 1->2, g: 2->1, e: 2->2
FixtureSet semidihedral_2b1(const FamilyParams& p, const Field& F) {
  const int k = p.k, s = p.s;
  const unsigned ch = F.characteristic();
  const bool c0 = p.c == 0;
  Builder b;
  for (int t = 1; t < k; ++t) b.add("phi" + I(t), {"a*(b*g*a)^" + I(t), "0", "0", "0"});
  for (int r = 1; r < s; ++r) b.add("theta" + I(r), {"0", "0", "0", "e^" + I(r + 1)});
  b.add("psi", {"(a*b*g)^k", "0", "0", "0"});
  if (ch == 2) {
    bool both_even = k % 2 == 0 && s % 2 == 0;
    b.add("phi0", {"0", "b", "0", "0"}, both_even);
    b.add("theta0", {"0", "0", "0", "e"}, both_even);
    b.add("chi", {"e_1 + c*a", "c*b", "0", "0"});
    b.add("omega", {"(b*g*a)^(k-1)*b*g + c*(a*b*g)^k", "0", "0", "0"});
    b.add("zeta1", {"0", "s*b", "0", "k*e"}, (k + s) % 2 == 1);
    b.add("zeta0", {"a", "0", "0", "e"}, k % 2 == 1 && s % 2 == 1 && c0);
    return b.set;
  }
  const bool k0 = F.from_int(k) == 0, s0 = F.from_int(s) == 0;
  if (ch == 3) {
    b.add("phi0", {"0", "b", "0", "0"}, k0);
    b.add("theta0", {"0", "0", "0", "e"}, s0);
    b.add("omega", {"a - c*(b*g*a)^(k-1)*b*g + c*(a*b*g)^k", "-b", "0", "0"});
    return b.set;
  }
  b.add("phi0", {"0", "b", "0", "0"}, k0 && s0);
  b.add("theta0", {"0", "0", "0", "e"}, k0 && s0);
  // ks*c/2 on the long word; (p+1)/2 is the inverse of 2
  std::string half = I(int(ch + 1) / 2);
  b.add("omega", {"k*s*a + " + half + "*k*s*c*(b*g*a)^(k-1)*b*g", "(3-k)*s*b", "0", "3*k*e"},
        !(k0 && s0));
  return b.set;
}

FixtureSet semidihedral_2b2(const FamilyParams& p, const Field& F) {
  const int k = p.k, s = p.s;
  const bool c0 = p.c == 0;
  Builder b;
  if (s == 2) {
    // arrows a, b, g only
    for (int t = 1; t < k; ++t) b.add("phi" + I(t), {"a*(b*g*a)^" + I(t), "0", "0"});
    b.add("theta1", {"0", "(a*b*g)^(k-1)*a*b", "0"});
    if (F.characteristic() == 2) {
      b.add("psi1", {"(a*b*g)^k", "0", "0"});
      b.add("omega", {"(b*g*a)^(k-1)*b*g", "0", "0"});
      b.add("psi0", {"e_1", "(a*b*g)^(k-2)*a*b", "0"}, c0);
      // same span as (a, k*b, 0) and (1-k)*(0, b, 0); these two satisfy the
      // bracket table of the general case
      b.add("phi0", {"a", "0", "0"}, k % 2 == 0);
      b.add("theta0", {"a", "b", "0"});
    } else {
      b.add("psi", {"(a*b*g)^k", "0", "0"});
      b.add("omega", {"(2-k)*a + 2*c*(k-1)*(b*g*a)^(k-1)*b*g", "k*b", "0"});
    }
    return b.set;
  }
  for (int t = 1; t < k; ++t) b.add("phi" + I(t), {"a*(b*g*a)^" + I(t), "0", "0", "0"});
  b.add("theta1", {"0", "(s-1)*(a*b*g)^(k-1)*a*b", "0", "e^2"});
  for (int r = 2; r < s; ++r) b.add("theta" + I(r), {"0", "0", "0", "e^" + I(r + 1)});
  if (F.characteristic() == 2) {
    const bool ke = k % 2 == 0, se = s % 2 == 0;
    b.add("psi1", {"(a*b*g)^k", "0", "0", "0"});
    b.add("omega", {"(b*g*a)^(k-1)*b*g", "0", "0", "0"});
    b.add("phi0", {"a", "0", "0", "0"}, ke);
    b.add("theta0", {"a", "b", "0", "e"}, se);
    b.add("chi", {"a", "0", "0", "e"}, !ke && !se && c0);
    b.add("psi0", {"e_1", "0", "0", "(g*a*b)^(k-1)"}, c0);
    return b.set;
  }
  const bool k0 = F.from_int(k) == 0, s0 = F.from_int(s) == 0;
  b.add("psi", {"(a*b*g)^k", "0", "0", "0"});
  b.add("phi0", {"a - c*(b*g*a)^(k-1)*b*g", "0", "0", "0"}, k0 && s0);
  b.add("theta0", {"-a + c*(b*g*a)^(k-1)*b*g", "-b", "0", "e"}, k0 && s0);
  b.add("omega",
        {"2*(k+s-k*s)*a + c*(3*k*s-2*k-2*s)*(b*g*a)^(k-1)*b*g", "2*k*(s-1)*b", "0", "2*k*e"},
        !(k0 && s0));
  return b.set;
}

}  // namespace

std::optional<FixtureSet> family_fixtures(const FamilyParams& p, const Field& F) {
  switch (p.family) {
    case Family::SD1A1:
    case Family::SD1A2:
      return semidihedral_local(p);
    case Family::Q1A1:
    case Family::Q1A2:
      return quaternion_local(p);
    case Family::SD2B1:
      return semidihedral_2b1(p, F);
    case Family::SD2B2:
      return semidihedral_2b2(p, F);
    default:
      return std::nullopt;
  }
}

}  // namespace hhlie
