#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "hhlie/cohomology.hpp"
#include "hhlie/dsl.hpp"
#include "hhlie/lie.hpp"
#include "json.hpp"

using namespace hhlie;
using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct GridOptions {
  std::string family;
  std::string k = "2", s = "3", c = "0", d = "0", a = "1";
  std::string field = "GF(2)";
};

struct RunOptions {
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
        continue;
      }
      int lo = std::stoi(item.substr(0, dots)), hi = std::stoi(item.substr(dots + 2));
      if (lo > hi) throw UsageError("empty range '" + item + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad integer range '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty range '" + text + "'");
  return out;
}

std::vector<Scalar> scalar_list(const Field& F, const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& item : split(text, ',')) {
    if (item == "all" || item == "nonzero") {
      for (unsigned v = item == "all" ? 0 : 1; v < F.order(); ++v) out.push_back(Scalar(v));
      continue;
    }
    try {
      out.push_back(parse_scalar(F, item));
    } catch (const Error& e) {
      throw UsageError("bad field element '" + item + "': " + e.what());
    }
  }
  if (out.empty()) throw UsageError("empty list '" + text + "'");
  return out;
}

std::vector<FamilyParams> expand(const GridOptions& g, const Field& F) {
  auto fam = family_from_name(g.family);
  if (!fam) throw UsageError("unknown family '" + g.family + "'");
  std::vector<int> ks = int_list(g.k);
  std::vector<int> ss = uses_s(*fam) ? int_list(g.s) : std::vector<int>{0};
  std::vector<Scalar> cs = uses_c(*fam) ? scalar_list(F, g.c) : std::vector<Scalar>{0};
  std::vector<Scalar> ds = uses_d(*fam) ? scalar_list(F, g.d) : std::vector<Scalar>{0};
  std::vector<Scalar> as = uses_a(*fam) ? scalar_list(F, g.a) : std::vector<Scalar>{0};
  std::vector<FamilyParams> out;
  for (int k : ks)
    for (int s : ss)
      for (Scalar a : as)
        for (Scalar c : cs)
          for (Scalar d : ds) out.push_back({*fam, k, s, c, d, a});
  return out;
}

const Field& field_of(const std::string& text) {
  try {
    return Field::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// one row per grid point; status 0 ok, 2 mismatch, 1 error
struct Row {
  ojson fields;
  std::string text;  // free-form text rendering, used when set
  int status = 0;
};

std::vector<Row> run_grid(const std::vector<FamilyParams>& pts, const Field& F, unsigned jobs,
                          const std::function<Row(const FamilyParams&)>& fn) {
  std::vector<Row> rows(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) {
      try {
        rows[i] = fn(pts[i]);
      } catch (const std::exception& e) {
        Row r;
        r.fields["instance"] = describe(pts[i], F);
        r.fields["field"] = F.name();
        r.fields["error"] = e.what();
        r.status = 1;
        rows[i] = std::move(r);
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, unsigned(pts.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string cell(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render(std::ostream& os, const std::vector<Row>& rows, const std::string& format) {
  if (format == "json") {
    ojson arr = ojson::array();
    for (const auto& r : rows) arr.push_back(r.fields);
    os << arr.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::vector<std::string> cols;
    for (const auto& r : rows)
      for (auto it = r.fields.begin(); it != r.fields.end(); ++it)
        if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(cols[i]);
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ",";
        if (r.fields.contains(cols[i])) os << csv_cell(cell(r.fields[cols[i]]));
      }
      os << "\n";
    }
    return;
  }
  for (const auto& r : rows) {
    if (!r.text.empty() && r.status != 1) {
      os << r.text;
      continue;
    }
    bool first = true;
    for (auto it = r.fields.begin(); it != r.fields.end(); ++it) {
      os << (first ? "" : "  ");
      if (it.key() != "instance") os << it.key() << "=";
      os << cell(it.value());
      first = false;
    }
    os << "\n";
  }
}

int exit_status(const std::vector<Row>& rows) {
  int st = 0;
  for (const auto& r : rows) {
    if (r.status == 1) return 1;
    st = std::max(st, r.status);
  }
  return st;
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw UsageError("cannot write " + path);
    os = &file;
  }
};

std::shared_ptr<const BimoduleComplex> complex_of(const FamilyInstance& inst) {
  if (!inst.resolution) throw Error("no resolution for " + describe(inst.params, *inst.field));
  return std::make_shared<const BimoduleComplex>(inst.algebra, inst.resolution);
}

// HH^1 in the named basis when the fixtures give one, else the class basis
struct NamedLie {
  LieAlgebra lie;
  std::vector<std::string> names;
};

NamedLie named_hh1(const FamilyParams& p, const Field& F) {
  auto inst = make_family(p, F);
  auto H = hh(complex_of(inst), 1);
  LieAlgebra L = hh1_lie(H);
  std::optional<FixtureSet> fx;
  try {
    fx = attach_fixtures(H, p);
  } catch (const Error&) {
  }
  if (fx) {
    auto names = fx->basis_names();
    if (names.size() == H.dim()) {
      Matrix P = H.named_classes(names);
      if (rank(P) == H.dim()) return {L.change_basis(P), names};
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < L.dim(); ++i) names.push_back("b" + std::to_string(i));
  return {L, names};
}

std::string combo(const Field& F, const std::vector<Scalar>& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (!v[t]) continue;
    if (!out.empty()) out += " + ";
    if (v[t] != 1) out += F.format(v[t]) + "*";
    out += names[t];
  }
  return out.empty() ? "0" : out;
}

Row dims_row(const FamilyParams& p, const Field& F, const std::vector<int>& degrees) {
  auto inst = make_family(p, F);
  auto C = complex_of(inst);
  Row r;
  r.fields["instance"] = describe(p, F);
  r.fields["field"] = F.name();
  ojson exp = ojson::object();
  bool match = true, any = false;
  for (int n : degrees) {
    std::string key = "HH" + std::to_string(n);
    if (!C->resolution().available(n)) {
      r.fields[key] = "n/a";
      continue;
    }
    std::size_t got = hh(C, n).dim();
    r.fields[key] = got;
    if (auto e = expected_hh_dim(p, F, n)) {
      exp[key] = *e;
      any = true;
      match = match && *e == got;
    }
  }
  for (auto it = exp.begin(); it != exp.end(); ++it) r.fields["expected " + it.key()] = it.value();
  r.fields["match"] = any ? (match ? "yes" : "no") : "n/a";
  r.status = match ? 0 : 2;
  return r;
}

Row brackets_row(const FamilyParams& p, const Field& F) {
  auto [L, names] = named_hh1(p, F);
  Row r;
  r.fields["instance"] = describe(p, F);
  r.fields["field"] = F.name();
  r.fields["basis"] = names;
  auto j = nlohmann::json::parse(L.to_json());
  r.fields["dim"] = j["dim"];
  r.fields["constants"] = j["constants"];
  std::ostringstream os;
  os << describe(p, F) << " over " << F.name() << ", basis";
  for (const auto& n : names) os << " " << n;
  os << "\n";
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t k = i + 1; k < L.dim(); ++k) {
      const auto& v = L.bracket_basis(i, k);
      if (std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; })) continue;
      os << "  [" << names[i] << "," << names[k] << "] = " << combo(F, v, names) << "\n";
    }
  r.text = os.str();
  return r;
}

Row invariants_row(const FamilyParams& p, const Field& F) {
  auto [L, names] = named_hh1(p, F);
  Fingerprint fp = fingerprint(L, default_probes(p, F));
  Row r;
  r.fields["instance"] = describe(p, F);
  r.fields["field"] = F.name();
  r.fields["dim"] = fp.dim;
  r.fields["lower central"] = fp.lower_central;
  r.fields["derived"] = fp.derived;
  r.fields["centre"] = fp.center;
  r.fields["killing rank"] = fp.killing_rank;
  r.fields["nilpotent"] = fp.nilpotent;
  if (fp.nilradical) r.fields["nilradical"] = *fp.nilradical;
  else r.fields["nilradical"] = "undetermined";
  ojson der = ojson::object();
  for (auto [rho, n] : fp.der) der[F.format(rho)] = n;
  r.fields["der"] = der;
  r.text = describe(p, F) + " over " + F.name() + "\n";
  for (const auto& line : split(fp.to_text(F), '\n')) r.text += "  " + line + "\n";
  return r;
}

Row kulshammer_row(const FamilyParams& p, const Field& F) {
  auto inst = make_family(p, F);
  const AlgebraSpec& A = *inst.algebra;
  Row r;
  r.fields["instance"] = describe(p, F);
  r.fields["field"] = F.name();
  r.fields["dim"] = A.dim();
  r.fields["centre"] = center(A).dim();
  r.fields["T1 perp"] = kulshammer_T_perp(A, 1).dim();
  r.fields["quotient"] = stable_center_quotient_dim(A);
  return r;
}

std::vector<Row> check_rows(const FamilyParams& p, const Field& F, std::uint64_t seed) {
  std::vector<Row> rows;
  auto add = [&](const ValidationReport& rep, const std::string& stage) {
    for (const auto& c : rep.checks) {
      Row r;
      r.fields["instance"] = describe(p, F);
      r.fields["stage"] = stage;
      r.fields["check"] = c.name;
      r.fields["ok"] = c.ok;
      if (!c.detail.empty()) r.fields["detail"] = c.detail;
      r.status = c.ok ? 0 : 2;
      rows.push_back(std::move(r));
    }
  };
  auto inst = make_family(p, F);
  ValidateOptions vo;
  vo.seed = seed;
  add(validate(*inst.algebra, vo), "algebra");
  auto C = complex_of(inst);
  add(check_complex(*C), "complex");
  add(check_exactness(*C), "exactness");
  add(check_minimality(*C), "minimality");
  auto H = hh(C, 1);
  if (family_fixtures(p, F)) add(fixture_check(H, p), "named basis");
  return rows;
}

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--family", g.family, "D1A2, SD1A1, SD1A2, SD2B1, SD2B2, Q1A1, Q1A2 or Q2B1")->required();
  cmd->add_option("--k", g.k, "integers, e.g. 2..6 or 2,4");
  cmd->add_option("--s", g.s, "second count for the two-vertex families");
  cmd->add_option("--c", g.c, "field elements, e.g. 0,1 or w or all");
  cmd->add_option("--d", g.d, "field elements");
  cmd->add_option("--a", g.a, "field elements (Q2B1)");
  cmd->add_option("--field", g.field, "GF(q)");
}

void add_run_options(CLI::App* cmd, RunOptions& r) {
  cmd->add_option("--format", r.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", r.out, "write here instead of stdout");
  cmd->add_option("--seed", r.seed, "seed for sampled checks");
  cmd->add_option("--jobs", r.jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology and HH^1 Lie structure of tame symmetric algebras"};
  app.require_subcommand(1);
  GridOptions grid;
  RunOptions run;

  auto* dims = app.add_subcommand("dims", "dimensions of HH^n against the closed forms");
  add_grid_options(dims, grid);
  add_run_options(dims, run);
  std::string degrees = "0..1";
  dims->add_option("--degrees", degrees, "degrees, e.g. 0..4");

  auto* brackets = app.add_subcommand("brackets", "structure constants of HH^1");
  add_grid_options(brackets, grid);
  add_run_options(brackets, run);

  auto* invariants = app.add_subcommand("invariants", "Lie invariants of HH^1");
  add_grid_options(invariants, grid);
  add_run_options(invariants, run);

  auto* kulsh = app.add_subcommand("kulshammer", "centre modulo the orthogonal of the first Kulshammer space");
  add_grid_options(kulsh, grid);
  add_run_options(kulsh, run);

  auto* check = app.add_subcommand("check", "validate algebra, resolution and named basis");
  add_grid_options(check, grid);
  add_run_options(check, run);

  auto* emit = app.add_subcommand("emit", "print the .qalg text of each instance");
  add_grid_options(emit, grid);
  std::string emit_out;
  emit->add_option("--out", emit_out, "write here instead of stdout");

  auto* dist = app.add_subcommand("distinguish", "compare the HH^1 Lie algebras of two instances");
  std::string inst_a, inst_b, dist_field = "GF(2)";
  std::vector<std::string> probe_text;
  dist->add_option("first", inst_a, "e.g. D1A2:k=2,d=0")->required();
  dist->add_option("second", inst_b)->required();
  dist->add_option("--field", dist_field, "GF(q)");
  dist->add_option("--probes", probe_text, "rho values for der(rho,1,1)");
  RunOptions dist_run;
  add_run_options(dist, dist_run);

  auto* parse = app.add_subcommand("parse", "summarise a .qalg file");
  std::string path;
  parse->add_option("file", path)->required();
  RunOptions parse_run;
  add_run_options(parse, parse_run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*emit) {
      const Field& F = field_of(grid.field);
      Output out(emit_out);
      for (const auto& p : expand(grid, F)) *out.os << family_dsl(p, F) << "\n";
      return 0;
    }
    if (*parse) {
      auto A = load_qalg(path);
      Row r;
      r.fields["file"] = path;
      if (!A->name().empty()) r.fields["name"] = A->name();
      r.fields["field"] = A->field().name();
      r.fields["vertices"] = A->quiver().vertex_count();
      r.fields["arrows"] = A->quiver().arrow_count();
      r.fields["dim"] = A->dim();
      Output out(parse_run.out);
      render(*out.os, {r}, parse_run.format);
      return 0;
    }
    if (*dist) {
      const Field& F = field_of(dist_field);
      FamilyParams pa = parse_instance(inst_a, F), pb = parse_instance(inst_b, F);
      std::vector<Scalar> probes;
      if (!probe_text.empty()) {
        for (const auto& t : probe_text)
          for (Scalar v : scalar_list(F, t)) probes.push_back(v);
      } else {
        probes = default_probes(pa, F);
        for (Scalar v : default_probes(pb, F))
          if (std::find(probes.begin(), probes.end(), v) == probes.end()) probes.push_back(v);
        std::sort(probes.begin(), probes.end());
      }
      auto la = named_hh1(pa, F), lb = named_hh1(pb, F);
      std::string verdict = distinguish(fingerprint(la.lie, probes), fingerprint(lb.lie, probes), F);
      Row r;
      r.fields["first"] = describe(pa, F);
      r.fields["second"] = describe(pb, F);
      r.fields["field"] = F.name();
      r.fields["verdict"] = verdict;
      r.text = verdict + "\n";
      Output out(dist_run.out);
      render(*out.os, {r}, dist_run.format);
      return 0;
    }

    const Field& F = field_of(grid.field);
    auto pts = expand(grid, F);
    std::vector<Row> rows;
    if (*dims) {
      auto degs = int_list(degrees);
      rows = run_grid(pts, F, run.jobs, [&](const FamilyParams& p) { return dims_row(p, F, degs); });
    } else if (*brackets) {
      rows = run_grid(pts, F, run.jobs, [&](const FamilyParams& p) { return brackets_row(p, F); });
    } else if (*invariants) {
      rows = run_grid(pts, F, run.jobs, [&](const FamilyParams& p) { return invariants_row(p, F); });
    } else if (*kulsh) {
      rows = run_grid(pts, F, run.jobs, [&](const FamilyParams& p) { return kulshammer_row(p, F); });
    } else if (*check) {
      auto flat = run_grid(pts, F, run.jobs, [&](const FamilyParams& p) {
        Row r;
        auto all = check_rows(p, F, run.seed);
        r.fields["rows"] = ojson::array();
        for (auto& x : all) {
          r.fields["rows"].push_back(x.fields);
          r.status = std::max(r.status, x.status);
        }
        return r;
      });
      for (auto& r : flat) {
        if (r.status == 1) {
          rows.push_back(r);
          continue;
        }
        for (auto& x : r.fields["rows"]) {
          Row y;
          y.fields = x;
          y.status = x["ok"].get<bool>() ? 0 : 2;
          rows.push_back(std::move(y));
        }
      }
    }
    Output out(run.out);
    render(*out.os, rows, run.format);
    int st = exit_status(rows);
    for (const auto& r : rows)
      if (r.status == 1) std::cerr << "error: " << cell(r.fields["instance"]) << ": " << cell(r.fields["error"]) << "\n";
    return st;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
