#include "hhlie/families.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

#include "hhlie/dsl.hpp"
#include "hhlie/resolution.hpp"

namespace hhlie {

namespace {

const std::map<Family, std::string>& names() {
  static const std::map<Family, std::string> n = {
      {Family::D1A2, "D1A2"},   {Family::SD1A1, "SD1A1"}, {Family::SD1A2, "SD1A2"}, {Family::SD2B1, "SD2B1"},
      {Family::SD2B2, "SD2B2"}, {Family::Q1A1, "Q1A1"},   {Family::Q1A2, "Q1A2"},   {Family::Q2B1, "Q2B1"},
  };
  return n;
}

}  // namespace

std::string family_name(Family f) { return names().at(f); }

std::optional<Family> family_from_name(const std::string& s) {
  for (auto& [f, n] : names())
    if (n == s) return f;
  return std::nullopt;
}

bool is_local(Family f) {
  return f == Family::D1A2 || f == Family::SD1A1 || f == Family::SD1A2 || f == Family::Q1A1 || f == Family::Q1A2;
}

bool uses_s(Family f) { return !is_local(f); }
bool uses_c(Family f) { return f == Family::SD1A2 || f == Family::Q1A2 || f == Family::SD2B1 || f == Family::SD2B2 || f == Family::Q2B1; }
bool uses_d(Family f) { return f == Family::D1A2 || f == Family::SD1A2 || f == Family::Q1A2; }

bool uses_a(Family f) { return f == Family::Q2B1; }

bool is_quaternion(Family f) { return f == Family::Q1A1 || f == Family::Q1A2 || f == Family::Q2B1; }

std::string describe(const FamilyParams& p, const Field& F) {
  std::string out = family_name(p.family) + ":k=" + std::to_string(p.k);
  if (uses_s(p.family)) out += ",s=" + std::to_string(p.s);
  if (p.family == Family::Q2B1) out += ",a=" + F.format(p.a);
  if (uses_c(p.family)) out += ",c=" + F.format(p.c);
  if (uses_d(p.family)) out += ",d=" + F.format(p.d);
  return out;
}

FamilyParams parse_instance(const std::string& text, const Field& F) {
  auto colon = text.find(':');
  auto fam = family_from_name(text.substr(0, colon));
  if (!fam) throw InvalidParameters("unknown family '" + text.substr(0, colon) + "'");
  FamilyParams p;
  p.family = *fam;
  if (colon == std::string::npos) return p;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidParameters("expected name=value in '" + item + "'");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    try {
      if (key == "k") p.k = std::stoi(val);
      else if (key == "s") p.s = std::stoi(val);
      else if (key == "c") p.c = parse_scalar(F, val);
      else if (key == "d") p.d = parse_scalar(F, val);
      else if (key == "a") p.a = parse_scalar(F, val);
      else throw InvalidParameters("unknown parameter '" + key + "'");
    } catch (const InvalidParameters&) {
      throw;
    } catch (const std::exception& e) {
      throw InvalidParameters("bad value for " + key + ": " + e.what());
    }
  }
  return p;
}

void check_parameters(const FamilyParams& p, const Field& F) {
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw InvalidParameters(msg);
  };
  const std::string who = family_name(p.family);
  if (is_local(p.family)) {
    if (F.characteristic() != 2) throw WrongCharacteristic(who + " needs characteristic 2");
    need(p.k >= 2, who + " needs k >= 2");
  }
  switch (p.family) {
    case Family::D1A2:
      need(p.d == 0 || p.d == 1, "D1A2 needs d in {0,1}");
      break;
    case Family::SD1A1:
    case Family::Q1A1:
      need(p.c == 0 && p.d == 0, who + " takes no c, d");
      break;
    case Family::SD1A2:
    case Family::Q1A2:
      break;
    case Family::SD2B1:
      need(p.k >= 2 && p.s >= 1, "SD2B1 needs k >= 2, s >= 1");
      need(p.c == 0 || p.c == 1, "SD2B1 needs c in {0,1}");
      break;
    case Family::SD2B2:
      need(p.k >= 2 && p.s >= 2, "SD2B2 needs k >= 2, s >= 2");
      need(p.k + p.s >= 4, "SD2B2 needs k + s >= 4");
      need(p.c == 0 || p.c == 1, "SD2B2 needs c in {0,1}");
      break;
    case Family::Q2B1:
      need(p.k >= 1 && p.s >= 3, "Q2B1 needs k >= 1, s >= 3");
      need(p.a != 0, "Q2B1 needs a != 0");
      need(!(p.k + p.s == 4 && p.a == 1), "Q2B1 needs a != 1 when k + s = 4");
      break;
  }
}

std::string family_dsl(const FamilyParams& p, const Field& F) {
  check_parameters(p, F);
  std::ostringstream os;
  os << "# " << describe(p, F) << "\n";
  os << "field " << F.name() << "\n";
  const int k = p.k, s = p.s;
  if (is_local(p.family)) {
    os << "quiver { vertices: 1; arrows: x: 1 -> 1, y: 1 -> 1 }\n";
    os << "let k = " << k << "\n";
    if (uses_c(p.family)) os << "let c = " << F.format(p.c) << "\n";
    if (uses_d(p.family)) os << "let d = " << F.format(p.d) << "\n";
    os << "relations {\n";
    switch (p.family) {
      case Family::D1A2:
        os << "  x^2 - (x*y)^k\n  y^2 - d*(x*y)^k\n  (x*y)^k - (y*x)^k\n  (x*y)^k*x\n  (y*x)^k*y\n";
        break;
      case Family::SD1A1:
        os << "  (x*y)^k - (y*x)^k\n  (x*y)^k*x\n  y^2\n  x^2 - (y*x)^(k-1)*y\n";
        break;
      case Family::SD1A2:
        os << "  (x*y)^k - (y*x)^k\n  (x*y)^k*x\n  y^2 - d*(x*y)^k\n  x^2 - (y*x)^(k-1)*y + c*(x*y)^k\n";
        break;
      case Family::Q1A1:
        os << "  (x*y)^k - (y*x)^k\n  (x*y)^k*x\n  y^2 - (x*y)^(k-1)*x\n  x^2 - (y*x)^(k-1)*y\n";
        break;
      case Family::Q1A2:
        os << "  x^2 - (y*x)^(k-1)*y - c*(x*y)^k\n  y^2 - (x*y)^(k-1)*x - d*(x*y)^k\n"
              "  (x*y)^k - (y*x)^k\n  (x*y)^k*x\n  (y*x)^k*y\n";
        break;
      default:
        break;
    }
    // consequences listed alongside the presentations
    os << "  # derived\n";
    if (is_quaternion(p.family))
      os << "  x*y^2\n  y^2*x\n  x^2*y\n  y*x^2\n  x^4\n  y^4\n";
    else if (p.family != Family::D1A2)
      os << "  x*y^2\n  y^2*x\n  x^2*y\n  y*x^2\n  x^4\n  y^3\n";
    os << "  y*(x*y)^k\n";
    os << "}\n";
    os << "socle { 1: (x*y)^k }\n";
    os << "nilpotency " << 2 * k + 1 << "\n";
    os << "dim " << 4 * k << "\n";
    return os.str();
  }

  const bool no_eta = p.family == Family::SD2B2 && s == 2;
  if (no_eta)
    os << "quiver { vertices: 1, 2; arrows: a: 1 -> 1, b: 1 -> 2, g: 2 -> 1 }\n";
  else
    os << "quiver { vertices: 1, 2; arrows: a: 1 -> 1, b: 1 -> 2, g: 2 -> 1, e: 2 -> 2 }\n";
  os << "let k = " << k << "\nlet s = " << s << "\nlet c = " << F.format(p.c) << "\n";
  if (p.family == Family::Q2B1) os << "let A = " << F.format(p.a) << "\n";
  os << "relations {\n";
  switch (p.family) {
    case Family::SD2B1:
      os << "  g*b\n  e*g\n  b*e\n  a^2 - (b*g*a)^(k-1)*b*g - c*(a*b*g)^k\n  e^s - (g*a*b)^k\n"
            "  (a*b*g)^k - (b*g*a)^k\n";
      break;
    case Family::SD2B2:
      if (no_eta) {
        os << "  b*g*b - (a*b*g)^(k-1)*a*b\n  g*b*g - (g*a*b)^(k-1)*g*a\n  a^2 - c*(a*b*g)^k\n"
              "  b*g*b*g*b\n  g*b*g*b*g\n";
        os << "  # derived\n  (a*b*g)^k - (b*g*a)^k\n";
      } else {
        os << "  b*e - (a*b*g)^(k-1)*a*b\n  e*g - (g*a*b)^(k-1)*g*a\n  g*b - e^(s-1)\n  a^2 - c*(a*b*g)^k\n"
              "  b*e^2\n  e^2*g\n";
        os << "  # derived\n  (a*b*g)^k - (b*g*a)^k\n  e^s - (g*a*b)^k\n";
      }
      break;
    case Family::Q2B1:
      os << "  g*b - e^(s-1)\n  b*e - (a*b*g)^(k-1)*a*b\n  e*g - (g*a*b)^(k-1)*g*a\n"
            "  a^2 - A*(b*g*a)^(k-1)*b*g - c*(b*g*a)^k\n  a^2*b\n  g*a^2\n";
      os << "  # derived\n  (a*b*g)^k - (b*g*a)^k\n  e^s - (g*a*b)^k\n  (b*g*a)^k*b\n";
      break;
    default:
      break;
  }
  os << "}\n";
  if (no_eta)
    os << "socle { 1: (a*b*g)^k; 2: (g*a*b)^k }\n";
  else
    os << "socle { 1: (a*b*g)^k; 2: e^s }\n";
  os << "nilpotency " << std::max(3 * k, s) + 1 << "\n";
  os << "dim " << 9 * k + s << "\n";
  return os.str();
}

FamilyInstance make_family(const FamilyParams& p, const Field& F) {
  FamilyInstance inst;
  inst.params = p;
  inst.field = &F;
  inst.dsl = family_dsl(p, F);
  auto in = parse_qalg_input(inst.dsl);
  in.name = describe(p, F);
  inst.algebra = std::make_shared<const AlgebraSpec>(std::move(in));
  inst.resolution = family_resolution(p, *inst.algebra);
  return inst;
}

std::optional<std::size_t> expected_hh_dim(const FamilyParams& p, const Field& F, int n) {
  const int k = p.k, s = p.s;
  const unsigned ch = F.characteristic();
  auto zero = [&](long long v) { return F.from_int(v) == 0; };
  if (n < 0) return std::nullopt;
  if (is_local(p.family)) {
    if (is_quaternion(p.family)) {
      int r = n % 4;
      if (r == 0 || r == 3) return k + 3;
      bool cd_zero = p.c == 0 && p.d == 0;
      return (k % 2 == 0 || cd_zero) ? k + 5 : k + 4;
    }
    if (n == 0) return k + 3;
    if (n != 1) return std::nullopt;
    if (p.family == Family::D1A2) return (k % 2 == 0 ? k + 6 : k + 5) - (p.d == 1 ? 1 : 0);
    Scalar c = p.c, d = p.d;
    if ((k % 2 == 0 && d == 0) || (k % 2 == 1 && c == 0 && d == 0)) return k + 6;
    if ((k % 2 == 0 && d != 0) || (k % 2 == 1 && c != 0 && d == 0)) return k + 5;
    return k + 4;
  }
  if (n == 0) return k + s + 2;
  if (n != 1) return std::nullopt;
  const bool c1 = p.c != 0;
  if (p.family == Family::SD2B1) {
    if (ch == 2) {
      if (k % 2 == 0 && s % 2 == 0) return k + s + 3;
      if (!(k % 2 == 1 && s % 2 == 1 && c1)) return k + s + 2;
      return k + s + 1;
    }
    if (ch == 3) {
      if (zero(k) && zero(s)) return k + s + 2;
      if (zero((long long)k * s)) return k + s + 1;
      return k + s;
    }
    return (zero(k) && zero(s)) ? k + s + 1 : k + s;
  }
  if (p.family == Family::SD2B2) {
    if (ch == 2) {
      if (k % 2 == 0 && s % 2 == 0) return k + s + 3 - (c1 ? 1 : 0);
      if ((k + s) % 2 == 1) return k + s + 2 - (c1 ? 1 : 0);
      return k + s + 2 - (c1 ? 2 : 0);
    }
    return (zero(k) && zero(s)) ? k + s + 1 : k + s;
  }
  return std::nullopt;
}

Scalar g_lambda_parameter(const FamilyParams& p, const Field& F) {
  const long long k = p.k, s = p.s;
  if (p.family == Family::SD2B2) return F.from_int(2 * k * s - k - s);
  if (p.family == Family::SD2B1) return F.div(F.from_int(2 * k * s), F.from_int(3));
  throw InvalidParameters("g_lambda parameter only for the semidihedral 2B families");
}

}  // namespace hhlie
