#include "hhlie/cohomology.hpp"

#include "hhlie/dsl.hpp"

namespace hhlie {

std::vector<Scalar> CohomologySpace::class_coords(std::span<const Scalar> f) const {
  if (!is_cocycle(f)) throw NotACocycle("not a cocycle");
  return section.class_coords(f);
}

Matrix CohomologySpace::named_classes(const std::vector<std::string>& names) const {
  Matrix M(cocycles.field(), dim(), names.size());
  for (std::size_t j = 0; j < names.size(); ++j) {
    auto it = named.find(names[j]);
    if (it == named.end()) throw Error("no cochain named " + names[j]);
    auto c = class_coords(it->second);
    for (std::size_t i = 0; i < c.size(); ++i) M(i, j) = c[i];
  }
  return M;
}

CohomologySpace hh(std::shared_ptr<const BimoduleComplex> C, int degree) {
  const ResolutionSpec& R = C->resolution();
  if (!R.available(degree) || !R.available(degree + 1))
    throw DegreeUnavailable("degree unavailable: " + std::to_string(degree));
  const Field& F = C->algebra().field();
  Subspace Z = kernel_basis(C->induced(degree + 1));
  Subspace B = degree == 0 ? Subspace(F, C->hom_dim(0)) : image_basis(C->induced(degree));
  QuotientSection sec(B, Z);
  return CohomologySpace{degree, std::move(C), std::move(Z), std::move(B), std::move(sec), {}};
}

std::vector<std::string> FixtureSet::basis_names() const {
  std::vector<std::string> out;
  for (const auto& c : cochains)
    if (c.in_basis) out.push_back(c.name);
  return out;
}

const NamedCochain* FixtureSet::find(const std::string& name) const {
  for (const auto& c : cochains)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<Scalar> fixture_cochain(const BimoduleComplex& C, const FamilyParams& p,
                                    const std::vector<std::string>& values) {
  const AlgebraSpec& A = C.algebra();
  const Field& F = A.field();
  const Quiver& Q = A.quiver();
  if (int(values.size()) != Q.arrow_count()) throw Error("one value per arrow expected");
  std::map<std::string, Scalar> scalars{{"c", p.c}, {"d", p.d}, {"A", p.a}};
  std::map<std::string, long long> ints{{"k", p.k}, {"s", p.s}};
  std::vector<AlgElement> vals;
  for (const auto& v : values) vals.push_back(A.normal_form(parse_path_expr(Q, F, v, scalars, ints)));
  return C.cochain_from_values(1, vals);
}

std::optional<FixtureSet> attach_fixtures(CohomologySpace& H, const FamilyParams& p) {
  if (H.degree != 1) return std::nullopt;
  auto fx = family_fixtures(p, H.complex->algebra().field());
  if (!fx) return std::nullopt;
  for (const auto& c : fx->cochains) {
    try {
      H.named[c.name] = fixture_cochain(*H.complex, p, c.values);
    } catch (const Error&) {
      // left out; fixture_check reports it for basis members
    }
  }
  return fx;
}

ValidationReport fixture_check(const CohomologySpace& H, const FamilyParams& p) {
  ValidationReport rep;
  auto fx = family_fixtures(p, H.complex->algebra().field());
  if (!fx || H.degree != 1) {
    rep.checks.push_back({"fixtures registered", false, "no published basis for this case"});
    return rep;
  }
  const Field& F = H.cocycles.field();
  Matrix classes(F, 0, H.dim());
  std::size_t cocycles = 0;
  auto names = fx->basis_names();
  for (const auto& name : names) {
    const NamedCochain& c = *fx->find(name);
    std::vector<Scalar> f;
    try {
      f = fixture_cochain(*H.complex, p, c.values);
    } catch (const Error& e) {
      rep.checks.push_back({name + " is a cochain", false, e.what()});
      continue;
    }
    bool ok = H.is_cocycle(f);
    rep.checks.push_back({name + " is a cocycle", ok, ""});
    if (!ok) continue;
    ++cocycles;
    classes.append_row(H.section.class_coords(f));
  }
  std::size_t r = rank(classes);
  rep.checks.push_back({"basis independent modulo coboundaries", r == cocycles && cocycles == names.size(),
                        std::to_string(r) + " of " + std::to_string(names.size())});
  rep.checks.push_back({"basis spans HH^1", r == H.dim(),
                        "rank " + std::to_string(r) + ", dim " + std::to_string(H.dim())});
  if (!fx->coboundaries.empty()) {
    std::vector<std::vector<Scalar>> vs;
    bool inside = true;
    for (const auto& vals : fx->coboundaries) {
      auto f = fixture_cochain(*H.complex, p, vals);
      inside = inside && H.coboundaries.contains(f);
      vs.push_back(std::move(f));
    }
    Subspace S = Subspace::span(F, H.cochain_dim(), vs);
    rep.checks.push_back({"listed coboundaries are coboundaries", inside, ""});
    rep.checks.push_back({"listed coboundaries span the coboundaries", S == H.coboundaries,
                          std::to_string(S.dim()) + " of " + std::to_string(H.coboundaries.dim())});
  }
  return rep;
}

}  // namespace hhlie
