#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "uvd/lr.hpp"
#include "uvd/qrational.hpp"
#include "uvd/rational.hpp"
#include "uvd/refcs.hpp"
#include "uvd/rootsys.hpp"
#include "uvd/uniq.hpp"
#include "uvd/universal.hpp"

namespace uvd {

using ojson = nlohmann::ordered_json;

// Pinned tolerances for the floating-point checks.  The exact-arithmetic
// paths (everything outside the refined partition function) carry none.
constexpr double kVolResidualTol = 1e-9;
constexpr double kZAgreementTol = 1e-5;

// ---------------------------------------------------------------------------
// Report: the single output shape of every subcommand.  Serialization is
// deterministic: insertion-ordered keys, no timestamps, fixed float format.
// ---------------------------------------------------------------------------
struct Report {
  std::string command;
  ojson params = ojson::object();
  std::vector<ojson> rows;
  long checks = 0, failures = 0;

  void check(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }

  ojson to_json() const {
    ojson j;
    j["tool"] = "univdim";
    j["schema"] = 1;
    j["command"] = command;
    j["params"] = params;
    j["rows"] = rows;
    ojson s;
    s["rows"] = static_cast<long>(rows.size());
    s["checks"] = checks;
    s["failures"] = failures;
    s["pass"] = failures == 0;
    j["summary"] = s;
    return j;
  }

  int exit_code() const { return failures == 0 ? 0 : 1; }
};

inline std::string float_str(long double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12Le", v);
  return buf;
}

namespace detail {

inline std::string cell_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  return v.dump();
}

}  // namespace detail

inline void render_report(const Report& r, std::ostream& os, bool as_json) {
  if (as_json) {
    os << r.to_json().dump(2) << "\n";
    return;
  }
  os << "univdim " << r.command;
  for (const auto& [k, v] : r.params.items())
    os << " " << k << "=" << detail::cell_text(v);
  os << "\n";
  std::vector<std::string> cols;
  for (const auto& row : r.rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end())
        cols.push_back(k);
  std::vector<size_t> w(cols.size());
  for (size_t i = 0; i < cols.size(); ++i) w[i] = cols[i].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : r.rows) {
    std::vector<std::string> line(cols.size(), "-");
    for (size_t i = 0; i < cols.size(); ++i)
      if (row.contains(cols[i])) line[i] = detail::cell_text(row[cols[i]]);
    for (size_t i = 0; i < cols.size(); ++i) w[i] = std::max(w[i], line[i].size());
    cells.push_back(std::move(line));
  }
  auto pad = [&](const std::string& s, size_t width) {
    std::string out = s;
    out.resize(width, ' ');
    return out;
  };
  if (!cols.empty()) {
    for (size_t i = 0; i < cols.size(); ++i)
      os << (i ? "  " : "") << pad(cols[i], w[i]);
    os << "\n";
    for (size_t i = 0; i < cols.size(); ++i)
      os << (i ? "  " : "") << std::string(w[i], '-');
    os << "\n";
    for (const auto& line : cells) {
      for (size_t i = 0; i < cols.size(); ++i)
        os << (i ? "  " : "") << pad(line[i], w[i]);
      os << "\n";
    }
  }
  os << "summary: " << r.rows.size() << " rows, " << r.checks << " checks, "
     << r.failures << " failures -> " << (r.failures == 0 ? "pass" : "FAIL")
     << "\n";
}

// ---------------------------------------------------------------------------
// Small parsers shared by the subcommands.
// ---------------------------------------------------------------------------
inline Rat parse_rat(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

inline VogelPoint parse_point(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw std::invalid_argument("--point expects al,be,ga");
  return {parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2])};
}

inline std::string point_str(const VogelPoint& p) {
  return "(" + rat_str(p.al) + "," + rat_str(p.be) + "," + rat_str(p.ga) + ")";
}

inline AlgebraId parse_algebra(const std::string& fam, long rank) {
  if (fam.size() != 1) throw std::invalid_argument("family is one letter A..G");
  AlgebraId id{family_from_letter(fam[0]), static_cast<int>(rank)};
  return id;
}

inline Report make_report(const std::string& command) {
  Report r;
  r.command = command;
  return r;
}

// ---------------------------------------------------------------------------
// dims: dimension tables and pointwise evaluation of the registry formulas.
// ---------------------------------------------------------------------------
inline Report report_dims_table(const std::string& table) {
  Report r = make_report("dims");
  r.params["table"] = table;
  auto add = [&](const std::string& name, const VogelPoint& p,
                 const Rat* expected) {
    ojson row;
    row["name"] = name;
    row["point"] = point_str(p);
    Rat d = dim_adjoint(p);
    row["dim"] = rat_str(d);
    if (expected) {
      row["table_dim"] = rat_str(*expected);
      bool ok = d == *expected;
      row["match"] = ok;
      r.check(ok);
    }
    r.rows.push_back(row);
  };
  if (table == "vogel") {
    for (const auto& np : isolated_points()) add(np.name, np.p, &np.dim);
  } else if (table == "Y") {
    for (const auto& np : y_points()) add(np.name, np.p, &np.dim);
  } else if (table == "algebras") {
    for (const auto& [n, p] : trace_sample_points()) add(n, p, nullptr);
  } else {
    throw std::invalid_argument("unknown table: " + table);
  }
  return r;
}

inline Report report_dims_point(const VogelPoint& p, const std::string& formula,
                                long k, long n) {
  Report r = make_report("dims");
  r.params["point"] = point_str(p);
  if (formula.empty()) {
    auto safe = [&](const std::function<Rat()>& f) -> std::string {
      try {
        return rat_str(f());
      } catch (const std::exception&) {
        return "undefined";
      }
    };
    auto add = [&](const std::string& q, const std::string& v) {
      ojson row;
      row["quantity"] = q;
      row["value"] = v;
      r.rows.push_back(row);
    };
    add("dim g", safe([&] { return dim_adjoint(p); }));
    add("dim X2", safe([&] { return dim_x2(p); }));
    add("dim Y2(al)", safe([&] { return dim_y2_closed(p, 0); }));
    add("dim Y2(be)", safe([&] { return dim_y2_closed(p, 1); }));
    add("dim Y2(ga)", safe([&] { return dim_y2_closed(p, 2); }));
    return r;
  }
  r.params["formula"] = formula;
  r.params["k"] = k;
  r.params["n"] = n;
  SinhProduct prod = formula_by_name(formula).make(k, n);
  ojson row;
  row["formula"] = formula;
  row["k"] = k;
  row["n"] = n;
  auto lim = prod.limit_x_to_zero(p);
  if (lim.kind == LimitKind::Finite)
    row["dim"] = rat_str(lim.value);
  else
    row["dim"] = lim.kind == LimitKind::Zero ? "0" : "infinite";
  r.rows.push_back(row);
  return r;
}

// ---------------------------------------------------------------------------
// verify-weyl: the universal value of X2^k g^n at an algebra's own table
// point equals the Weyl quantum dimension of the tabulated highest weight
// (or vanishes identically where the table says so).
// ---------------------------------------------------------------------------
struct WeylCell {
  bool expect_zero = false;
  // components of the highest weight, as fundamental-weight coefficients
  std::vector<std::vector<long>> weights;
};

inline WeylCell xkn_weyl_cell(const AlgebraId& id, long k, long n) {
  WeylCell c;
  long N = id.rank;
  auto combo = [&](std::vector<std::pair<long, long>> terms) {
    std::vector<long> v(N, 0);
    for (auto& [idx, coef] : terms) v[idx - 1] += coef;
    return v;
  };
  switch (id.fam) {
    case Family::A:
      if (N == 1) {
        if (k >= 1)
          c.expect_zero = true;
        else
          c.weights = {{2 * n}};
        return c;
      }
      if (k == 0) {
        c.weights = {combo({{1, n}, {N, n}})};
        return c;
      }
      // X2 has a two-component highest weight for sl; cells pair up
      c.weights = {combo({{1, 2 * k + n}, {N - 1, k}, {N, n}}),
                   combo({{2, k}, {N, 2 * k + n}, {1, n}})};
      return c;
    case Family::B:
      if (N == 2) {
        if (k >= 2) {
          c.expect_zero = true;
          return c;
        }
        c.weights = {combo({{1, k}, {2, 2 * k + 2 * n}})};
        return c;
      }
      if (N == 3)
        c.weights = {combo({{1, k}, {3, 2 * k}, {2, n}})};
      else
        c.weights = {combo({{1, k}, {3, k}, {2, n}})};
      return c;
    case Family::C:
      if (k >= 2) {
        c.expect_zero = true;
        return c;
      }
      c.weights = {combo({{1, 2 * k + 2 * n}, {2, k}})};
      return c;
    case Family::D:
      if (N == 4)
        c.weights = {combo({{1, k}, {3, k}, {4, k}, {2, n}})};
      else
        c.weights = {combo({{1, k}, {3, k}, {2, n}})};
      return c;
    case Family::G:
      c.weights = {combo({{1, 3 * k}, {2, n}})};
      return c;
    case Family::F:
      c.weights = {combo({{2, k}, {1, n}})};
      return c;
    case Family::E:
      if (N == 6)
        c.weights = {combo({{3, k}, {6, n}})};
      else if (N == 7)
        c.weights = {combo({{2, k}, {1, n}})};
      else
        c.weights = {combo({{6, k}, {7, n}})};
      return c;
  }
  throw std::logic_error("unreachable");
}

inline const std::vector<AlgebraId>& weyl_sweep_algebras() {
  static const std::vector<AlgebraId> v = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
      {Family::A, 5}, {Family::A, 6}, {Family::B, 2}, {Family::B, 3},
      {Family::B, 4}, {Family::B, 5}, {Family::B, 6}, {Family::C, 3},
      {Family::C, 4}, {Family::C, 5}, {Family::C, 6}, {Family::D, 4},
      {Family::D, 5}, {Family::D, 6}, {Family::G, 2}, {Family::F, 4},
      {Family::E, 6}, {Family::E, 7}, {Family::E, 8}};
  return v;
}

inline std::string weight_str(const WeylCell& c) {
  if (c.expect_zero) return "0";
  std::string out;
  for (size_t j = 0; j < c.weights.size(); ++j) {
    if (j) out += " + ";
    out += "[";
    for (size_t i = 0; i < c.weights[j].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c.weights[j][i]);
    }
    out += "]";
  }
  return out;
}

inline Report report_verify_weyl(const std::string& formula, long kmax,
                                 long nmax, const std::string& only) {
  Report r = make_report("verify-weyl");
  r.params["formula"] = formula;
  r.params["kmax"] = kmax;
  r.params["nmax"] = nmax;
  if (!only.empty()) r.params["algebra"] = only;
  RatRng rng(2026);
  for (const auto& id : weyl_sweep_algebras()) {
    if (!only.empty() && id.name() != only) continue;
    RootSystem rs = build_root_system(id, 2);
    VogelPoint p = vogel_point(id);
    for (long k = 0; k <= kmax; ++k)
      for (long n = 0; n <= nmax; ++n) {
        if (k + n < 1) continue;
        if (formula == "adjoint" && !(k == 0 && n == 1)) continue;
        WeylCell cell = xkn_weyl_cell(id, k, n);
        SinhProduct prod = qdim_xkn(k, n);
        LRResult lr = lr_analyze(prod, p, 1, rng);
        ojson row;
        row["algebra"] = id.name();
        row["k"] = k;
        row["n"] = n;
        row["weight"] = weight_str(cell);
        bool ok = false;
        if (lr.cls == LRClass::NotResolvable) {
          row["status"] = "not-LR";
        } else if (cell.expect_zero) {
          ok = lr.value.is_zero();
          row["status"] = "zero";
        } else {
          QRational rhs;
          bool first = true;
          for (const auto& wv : cell.weights) {
            QRational q = weyl_qdim(rs, rs.weight_l(wv));
            rhs = first ? q : rhs + q;
            first = false;
          }
          ok = qrat_equal(lr.value, rhs);
          row["status"] = "weight";
        }
        row["pass"] = ok;
        r.check(ok);
        r.rows.push_back(row);
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// casimir: eigenvalues, the conformity grid, the trace identity, and the
// orthogonal/symplectic duality of the Young-parametrized second Casimir.
// ---------------------------------------------------------------------------
inline Report report_casimir_values(const VogelPoint& p, long kmax, long nmax) {
  Report r = make_report("casimir");
  r.params["point"] = point_str(p);
  r.params["kmax"] = kmax;
  r.params["nmax"] = nmax;
  for (long k = 0; k <= kmax; ++k)
    for (long n = 0; n <= nmax; ++n) {
      if (k + n < 1) continue;
      ojson row;
      row["k"] = k;
      row["n"] = n;
      row["casimir"] = rat_str(casimir_xkn(p, k, n));
      row["normalized"] = rat_str(casimir_xkn_normalized(p, k, n));
      r.rows.push_back(row);
    }
  return r;
}

inline const std::vector<AlgebraId>& conformity_algebras() {
  static const std::vector<AlgebraId> v = {
      {Family::A, 1}, {Family::A, 2}, {Family::G, 2}, {Family::D, 4},
      {Family::F, 4}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8}};
  return v;
}

inline Report report_casimir_conformity() {
  Report r = make_report("casimir");
  r.params["mode"] = "conformity";
  for (const auto& id : conformity_algebras()) {
    VogelPoint p = vogel_point(id);
    ojson row;
    row["algebra"] = id.name();
    row["t"] = rat_str(p.t());
    row["C20"] = rat_str(casimir_xkn_normalized(p, 2, 0));
    row["C11"] = rat_str(casimir_xkn_normalized(p, 1, 1));
    row["C12"] = rat_str(casimir_xkn_normalized(p, 1, 2));
    r.rows.push_back(row);
  }
  return r;
}

inline Report report_casimir_trace() {
  Report r = make_report("casimir");
  r.params["mode"] = "trace";
  for (const auto& [name, p] : trace_sample_points()) {
    bool ok = deligne_trace_check(p);
    ojson row;
    row["algebra"] = name;
    row["point"] = point_str(p);
    row["trace_identity"] = ok;
    r.check(ok);
    r.rows.push_back(row);
  }
  return r;
}

inline Report report_casimir_duality(long samples, unsigned long seed) {
  Report r = make_report("casimir");
  r.params["mode"] = "duality";
  r.params["samples"] = samples;
  r.params["seed"] = static_cast<long>(seed);
  RatRng rng(seed);
  for (long i = 0; i < samples; ++i) {
    long rows = 1 + i % 3;
    std::vector<Rat> A(rows + 1), B(rows + 1);
    for (long j = 0; j <= rows; ++j) {
      A[j] = rng.pick(0, 9);
      B[j] = rng.pick(0, 9);
    }
    LinPoly defect = casimir2_duality_defect(A, B);
    bool ok = defect.first == 0 && defect.second == 0;
    ojson row;
    row["sample"] = i;
    row["rows"] = rows;
    row["defect_const"] = rat_str(defect.first);
    row["defect_n"] = rat_str(defect.second);
    row["pass"] = ok;
    r.check(ok);
    r.rows.push_back(row);
  }
  return r;
}

// ---------------------------------------------------------------------------
// lr-scan: singularity classification of the registry formulas over named
// point sets, all six parameter permutations.
// ---------------------------------------------------------------------------
inline Report report_lr_scan(const std::string& pointset,
                             const std::string& formula, long kmax, long nmax,
                             bool require_resolvable) {
  Report r = make_report("lr-scan");
  r.params["pointset"] = pointset;
  r.params["formula"] = formula;
  r.params["kmax"] = kmax;
  r.params["nmax"] = nmax;
  long regular = 0, resolvable = 0, not_resolvable = 0;
  auto tally = [&](LRClass c) {
    if (c == LRClass::Regular)
      ++regular;
    else if (c == LRClass::LinearlyResolvable)
      ++resolvable;
    else
      ++not_resolvable;
  };
  auto add_row = [&](const std::string& pname, long k, long n,
                     const std::string& perm, LRClass cls, long nz, long dz) {
    ojson row;
    row["point"] = pname;
    row["k"] = k;
    row["n"] = n;
    row["perm"] = perm;
    row["class"] = lr_class_name(cls);
    row["num_zeros"] = nz;
    row["den_zeros"] = dz;
    tally(cls);
    if (require_resolvable) {
      bool ok = cls != LRClass::NotResolvable;
      row["pass"] = ok;
      r.check(ok);
    }
    r.rows.push_back(row);
  };
  if (formula == "Xkn") {
    for (const auto& cell : lr_sweep(pointset, kmax, nmax))
      add_row(cell.point_name, cell.k, cell.n, cell.perm, cell.cls,
              cell.num_zeros, cell.den_zeros);
  } else {
    auto pts = sweep_pointset(pointset);
    const FormulaEntry& entry = formula_by_name(formula);
    long klo = 0, khi = kmax, nhi = nmax;
    if (formula == "adjoint") khi = nhi = 0;
    if (formula == "Y2" || formula == "X2k") nhi = 0;
    for (long k = klo; k <= khi; ++k)
      for (long n = 0; n <= nhi; ++n) {
        SinhProduct base = entry.make(k, n);
        for (const auto& perm : all_perms()) {
          SinhProduct prod = base.permuted(perm);
          for (const auto& [pname, p] : pts) {
            ZeroCounts z = structural_zeros(prod, p);
            add_row(pname, k, n, perm.name(), classify_point(prod, p), z.num,
                    z.den);
          }
        }
      }
  }
  r.params["regular"] = regular;
  r.params["resolvable"] = resolvable;
  r.params["not_resolvable"] = not_resolvable;
  return r;
}

// ---------------------------------------------------------------------------
// uniq-solve: the non-uniqueness system for given permutation data, with
// seeded instantiations checked to restrict to 1 on the distinguished lines.
// ---------------------------------------------------------------------------
inline std::string perm_str(const std::vector<long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

inline Report report_uniq_solve(long k, const std::vector<long>& s,
                                const std::vector<long>& p,
                                const std::vector<long>& v, long instances,
                                unsigned long seed) {
  Report r = make_report("uniq-solve");
  r.params["k"] = k;
  r.params["s"] = perm_str(s);
  r.params["p"] = perm_str(p);
  if (!v.empty()) r.params["v"] = perm_str(v);
  NonUniqFamily fam = v.empty() ? three_line_solve(k, s, p)
                                : solve_nonuniq(k, s, p, v);
  if (fam.trivial) {
    ojson row;
    row["result"] = "trivial";
    row["certificate"] = fam.certificate;
    r.rows.push_back(row);
    return r;
  }
  auto emit = [&](const std::string& base, const std::vector<sym::Mono>& ms) {
    for (size_t i = 0; i < ms.size(); ++i) {
      ojson row;
      row["symbol"] = base + std::to_string(i + 1);
      row["value"] = sym::str(ms[i]);
      r.rows.push_back(row);
    }
  };
  emit("x", fam.x);
  emit("y", fam.y);
  emit("n", fam.n);
  emit("c", fam.c);
  emit("k", fam.km);
  emit("r", fam.r);
  {
    std::string fs;
    for (size_t i = 0; i < fam.free_symbols.size(); ++i) {
      if (i) fs += " ";
      fs += fam.free_symbols[i];
    }
    ojson row;
    row["symbol"] = "free";
    row["value"] = fs;
    r.rows.push_back(row);
  }
  std::vector<LinearForm> lines = {primed_sl(), primed_so(), primed_exc()};
  if (!v.empty()) lines.push_back(primed_sp());
  RatRng rng(seed);
  for (long j = 0; j < instances; ++j) {
    auto inst = fam.instantiate(rng);
    bool unit = is_unit_on_lines(inst.Q, lines);
    ojson row;
    row["symbol"] = "instance " + std::to_string(j);
    std::string vals;
    for (const auto& [name, val] : inst.values) {
      if (!vals.empty()) vals += " ";
      vals += name + "=" + rat_str(val);
    }
    row["value"] = vals;
    row["unit_on_lines"] = unit;
    r.check(unit);
    r.rows.push_back(row);
  }
  return r;
}

// ---------------------------------------------------------------------------
// config-color: 3-colorings of point-line configurations, the extracted
// permutation data, and the exhaustive census of the 9-point, 9-line ones.
// ---------------------------------------------------------------------------
inline Configuration fixture_configuration(const std::string& name) {
  if (name == "9_3_1") return config_93_figure(1);
  if (name == "9_3_2") return config_93_figure(2);
  if (name == "9_3_3") return config_93_figure(3);
  if (name == "16_3_12_4") {
    NonUniqFamily fam = solve_nonuniq(4, {3, 1, 4, 2}, {4, 3, 2, 1},
                                      {2, 4, 1, 3});
    RatRng rng(16);
    auto inst = fam.instantiate(rng);
    return configuration_from_instance(fam, inst).conf;
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

inline Report report_config_color(const std::string& fixture,
                                  const std::string& file) {
  Report r = make_report("config-color");
  Configuration conf;
  if (!fixture.empty()) {
    r.params["fixture"] = fixture;
    conf = fixture_configuration(fixture);
  } else {
    r.params["file"] = file;
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot read " + file);
    ojson j = ojson::parse(in);
    conf = config_from_json(j);
  }
  conf.validate();
  long k = static_cast<long>(conf.lines.size()) / 3;
  r.params["points"] = conf.npoints;
  r.params["lines"] = static_cast<long>(conf.lines.size());
  r.params["per_color"] = k;
  ColorResult cr = colorable(conf, k);
  r.params["nodes_explored"] = cr.nodes;
  if (!cr.ok) {
    ojson row;
    row["coloring"] = "none";
    row["certificate"] = "exhausted " + std::to_string(cr.nodes) +
                         " assignments";
    r.rows.push_back(row);
    return r;
  }
  static const char* cname[3] = {"black", "red", "green"};
  for (size_t i = 0; i < conf.lines.size(); ++i) {
    ojson row;
    row["line"] = static_cast<long>(i);
    std::string pts;
    for (int q : conf.lines[i]) {
      if (!pts.empty()) pts += " ";
      pts += std::to_string(q);
    }
    row["points"] = pts;
    row["color"] = cname[cr.coloring.color[i]];
    r.rows.push_back(row);
  }
  if (k == conf.line_size() && conf.point_degree() == 3) {
    ExtractedPerms ep = q_from_coloring(conf, cr.coloring);
    ojson row;
    row["line"] = -1;
    row["points"] = "extracted s=(" + perm_str(ep.s) + ") p=(" +
                    perm_str(ep.p) + ")" +
                    (ep.v.empty() ? "" : " v=(" + perm_str(ep.v) + ")");
    row["color"] = "-";
    r.rows.push_back(row);
  }
  return r;
}

inline Report report_config_enumerate() {
  Report r = make_report("config-color");
  r.params["mode"] = "enumerate-9-3";
  Enum93Result res = enumerate_93();
  r.params["total_tables"] = res.total;
  for (const auto& cls : res.classes) {
    ojson row;
    row["triangles"] = cls.triangles;
    row["disjoint_triples"] = cls.disjoint_triples;
    row["tables"] = cls.count;
    ColorResult cr = colorable(cls.lexmin, 3);
    row["colorable"] = cr.ok;
    row["nodes"] = cr.nodes;
    r.rows.push_back(row);
  }
  return r;
}

// ---------------------------------------------------------------------------
// refcs: the refined partition function by the product formula, by the
// integral representations, and the character-sum consistency checks.
// ---------------------------------------------------------------------------
inline Report report_refcs(const std::string& fam, long rank, double kappa,
                           long y, const std::string& method) {
  AlgebraId id = parse_algebra(fam, rank);
  RootSystem rs = build_root_system(id, 2);
  VogelPoint p = vogel_point(id);
  Report r = make_report("refcs");
  r.params["algebra"] = id.name();
  r.params["kappa"] = kappa;
  r.params["y"] = y;
  r.params["method"] = method;
  Rat t = algebra_t(rs);
  r.params["t"] = rat_str(t);
  long double zp = z_product(rs, kappa, y);
  auto add = [&](const std::string& m, long double val) {
    ojson row;
    row["method"] = m;
    row["Z"] = float_str(val);
    if (m != "product") {
      long double resid = std::abs(val - zp) / std::abs(zp);
      row["rel_residual"] = float_str(resid);
      bool ok = resid <= kZAgreementTol;
      row["pass"] = ok;
      r.check(ok);
    }
    r.rows.push_back(row);
  };
  if (method == "product") {
    add("product", zp);
  } else if (method == "integral") {
    add("product", zp);
    add("integral", z_integral(rs, kappa, y));
  } else if (method == "fintrep") {
    add("product", zp);
    add("fintrep", z_fintrep(rs, kappa, y));
  } else if (method == "universal") {
    add("product", zp);
    if (y == 1) {
      add("universal", z_universal_nonrefined(p, kappa));
    } else {
      if (rs.long_sq != 2 || id.fam == Family::B || id.fam == Family::C ||
          id.fam == Family::F || id.fam == Family::G)
        throw std::invalid_argument(
            "refined universal evaluation needs a simply-laced algebra");
      add("universal", z_integral_universal(p, kappa, y));
    }
  } else {
    throw std::invalid_argument("unknown method: " + method);
  }
  return r;
}

inline Report report_refcs_fx(const std::string& fam, long rank, long y) {
  AlgebraId id = parse_algebra(fam, rank);
  Report r = make_report("refcs");
  r.params["algebra"] = id.name();
  r.params["y"] = y;
  r.params["mode"] = "character-sum";
  bool shortroots =
      id.fam == Family::B || id.fam == Family::C || id.fam == Family::F;
  long norm = shortroots ? 4 : (id.fam == Family::G ? 6 : 2);
  RootSystem rs = build_root_system(id, norm);
  VogelPoint p = vogel_point(id);
  QRational direct = f_x_direct(rs, y);
  QRational closed = (norm == 2) ? f_x_simply_laced(p, y)
                                 : f_x_closed(id.fam, id.rank, y).ratio();
  bool equal = qrat_equal(direct, closed);
  ojson row;
  row["y"] = y;
  row["closed_equals_direct"] = equal;
  r.check(equal);
  auto lim = direct.limit_q_to_one();
  Rat want = (norm == 2) ? dim_refined(p, y)
                         : Rat(y) * (rs.dim() - rs.rank) + rs.rank;
  bool dim_ok = lim.has_value() && *lim == want;
  row["dim_refined"] = rat_str(want);
  row["dim_matches"] = dim_ok;
  r.check(dim_ok);
  r.rows.push_back(row);
  return r;
}

// ---------------------------------------------------------------------------
// volume-check: the sine-product identity for the Weyl-alcove volume factor.
// ---------------------------------------------------------------------------
inline const std::vector<AlgebraId>& volume_sweep_algebras() {
  static const std::vector<AlgebraId> v = [] {
    std::vector<AlgebraId> out;
    for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= 8; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= 8; ++n) out.push_back({Family::C, n});
    for (int n = 4; n <= 8; ++n) out.push_back({Family::D, n});
    out.push_back({Family::E, 6});
    out.push_back({Family::E, 7});
    out.push_back({Family::E, 8});
    out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
  }();
  return v;
}

inline Report report_volume_check(long ymax, const std::string& only) {
  Report r = make_report("volume-check");
  r.params["ymax"] = ymax;
  if (!only.empty()) r.params["algebra"] = only;
  for (const auto& id : volume_sweep_algebras()) {
    if (!only.empty() && id.name() != only) continue;
    RootSystem rs = build_root_system(id, 2);
    for (long y = 1; y <= ymax; ++y) {
      long double resid = vol_identity_residual(rs, y);
      bool ok = resid < kVolResidualTol;
      ojson row;
      row["algebra"] = id.name();
      row["y"] = y;
      row["residual"] = float_str(resid);
      row["pass"] = ok;
      r.check(ok);
      r.rows.push_back(row);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Subcommand registry: names every library operation each subcommand reaches,
// so coverage is testable.
// ---------------------------------------------------------------------------
struct SubcommandInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> ops;
};

inline const std::vector<SubcommandInfo>& cli_registry() {
  static const std::vector<SubcommandInfo> reg = {
      {"dims", "dimension tables and pointwise formula evaluation",
       {"dim_adjoint", "dim_x2", "dim_y2_closed", "qdim_adjoint", "qdim_x2k",
        "qdim_xkn", "qdim_y2", "qdim_z", "limit_x_to_zero", "isolated_points",
        "y_points", "formula_registry"}},
      {"verify-weyl", "universal values against Weyl quantum dimensions",
       {"build_root_system", "weyl_qdim", "vogel_point", "qdim_xkn",
        "lr_analyze"}},
      {"casimir", "Casimir eigenvalues, conformity grid, trace identity, "
                  "orthosymplectic duality",
       {"casimir_xkn", "casimir_xkn_normalized", "casimir_adjoint",
        "casimir_y2", "deligne_trace_check", "casimir2_young_so",
        "casimir2_young_sp", "casimir2_duality_defect"}},
      {"lr-scan", "singularity classification over named point sets",
       {"lr_sweep", "structural_zeros", "classify_point", "resolve_on_line",
        "sweep_pointset"}},
      {"uniq-solve", "non-uniqueness families from permutation data",
       {"solve_nonuniq", "three_line_solve", "instantiate",
        "is_unit_on_lines", "to_primed"}},
      {"config-color", "configuration colorings and the 9-point census",
       {"colorable", "q_from_coloring", "config_93_figure",
        "configuration_from_instance", "config_from_json", "enumerate_93",
        "count_triangles"}},
      {"refcs", "refined partition function and character sums",
       {"z_product", "z_integral", "z_fintrep", "z_integral_universal",
        "z_universal_nonrefined", "f_x_direct", "f_x_closed",
        "f_x_simply_laced", "dim_refined", "refined_heights", "algebra_t"}},
      {"volume-check", "sine-product volume identity sweep",
       {"vol_identity_residual", "coroot_gram_det", "heights_histogram"}}};
  return reg;
}

// ---------------------------------------------------------------------------
// Entry point.
// ---------------------------------------------------------------------------
inline int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact universal Lie-algebra formulas and refined "
               "Chern-Simons checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "univdim 1.0.0");

  std::optional<Report> rep;
  bool as_json = false;

  // dims
  std::string d_table = "vogel", d_point, d_formula;
  long d_k = 1, d_n = 0;
  auto* dims = app.add_subcommand("dims", "dimension tables and formula "
                                          "values at a plane point");
  dims->add_option("--table", d_table, "named point table")
      ->check(CLI::IsMember({"vogel", "Y", "algebras"}));
  dims->add_option("--point", d_point, "al,be,ga (rationals)");
  dims->add_option("--formula", d_formula,
                   "registry formula to evaluate at --point")
      ->check(CLI::IsMember({"adjoint", "Y2", "X2k", "Xkn", "Zkl"}));
  dims->add_option("--k", d_k, "first formula index");
  dims->add_option("--n", d_n, "second formula index");
  dims->add_flag("--json", as_json, "emit JSON");
  dims->callback([&] {
    rep = d_point.empty()
              ? report_dims_table(d_table)
              : report_dims_point(parse_point(d_point), d_formula, d_k, d_n);
  });

  // verify-weyl
  std::string w_formula = "Xkn", w_only;
  long w_kmax = 2, w_nmax = 2;
  auto* vw = app.add_subcommand(
      "verify-weyl", "compare universal values with Weyl quantum dimensions");
  vw->add_option("--formula", w_formula, "formula family")
      ->check(CLI::IsMember({"Xkn", "adjoint"}));
  vw->add_option("--kmax", w_kmax, "largest k");
  vw->add_option("--nmax", w_nmax, "largest n");
  vw->add_option("--algebra", w_only, "restrict to one algebra, e.g. E6");
  vw->add_flag("--json", as_json, "emit JSON");
  vw->callback(
      [&] { rep = report_verify_weyl(w_formula, w_kmax, w_nmax, w_only); });

  // casimir
  std::string c_point;
  long c_kmax = 2, c_nmax = 2, c_samples = 0;
  unsigned long c_seed = 50;
  bool c_conform = false, c_trace = false;
  auto* cas = app.add_subcommand("casimir",
                                 "Casimir eigenvalues and identities");
  cas->add_option("--point", c_point, "al,be,ga (rationals)");
  cas->add_option("--kmax", c_kmax, "largest k");
  cas->add_option("--nmax", c_nmax, "largest n");
  auto* oconf = cas->add_flag("--conformity", c_conform,
                              "normalized eigenvalue grid");
  auto* otrace = cas->add_flag("--trace", c_trace, "trace identity sweep");
  auto* odual = cas->add_option("--duality", c_samples,
                                "orthosymplectic duality sample count");
  cas->add_option("--seed", c_seed, "duality sample seed");
  oconf->excludes(otrace)->excludes(odual);
  otrace->excludes(odual);
  cas->add_flag("--json", as_json, "emit JSON");
  cas->callback([&] {
    if (c_conform)
      rep = report_casimir_conformity();
    else if (c_trace)
      rep = report_casimir_trace();
    else if (c_samples > 0)
      rep = report_casimir_duality(c_samples, c_seed);
    else if (!c_point.empty())
      rep = report_casimir_values(parse_point(c_point), c_kmax, c_nmax);
    else
      throw std::invalid_argument(
          "casimir needs --point, --conformity, --trace, or --duality");
  });

  // lr-scan
  std::string l_pointset = "vogel", l_formula = "Xkn";
  long l_kmax = 1, l_nmax = 1;
  bool l_require = false;
  auto* lrs = app.add_subcommand("lr-scan",
                                 "classify singular points of the formulas");
  lrs->add_option("--pointset", l_pointset, "named point set")
      ->check(CLI::IsMember({"vogel", "isolated", "Y"}));
  lrs->add_option("--formula", l_formula, "formula family")
      ->check(CLI::IsMember({"adjoint", "Y2", "X2k", "Xkn", "Zkl"}));
  lrs->add_option("--kmax", l_kmax, "largest k");
  lrs->add_option("--nmax", l_nmax, "largest n");
  lrs->add_flag("--require-resolvable", l_require,
                "fail on any non-resolvable cell");
  lrs->add_flag("--json", as_json, "emit JSON");
  lrs->callback([&] {
    rep = report_lr_scan(l_pointset, l_formula, l_kmax, l_nmax, l_require);
  });

  // uniq-solve
  long u_k = 0, u_instances = 2;
  unsigned long u_seed = 7;
  std::vector<long> u_s, u_p, u_v;
  auto* uq = app.add_subcommand("uniq-solve",
                                "solve the non-uniqueness system for "
                                "permutation data");
  uq->add_option("--k", u_k, "number of red/green line pairs")->required();
  uq->add_option("--s", u_s, "permutation s, comma separated 1-indexed")
      ->required()
      ->delimiter(',');
  uq->add_option("--p", u_p, "permutation p, comma separated 1-indexed")
      ->required()
      ->delimiter(',');
  uq->add_option("--v", u_v, "permutation v (four-line system only)")
      ->delimiter(',');
  uq->add_option("--instances", u_instances, "seeded instantiations to check");
  uq->add_option("--seed", u_seed, "instantiation seed");
  uq->add_flag("--json", as_json, "emit JSON");
  uq->callback(
      [&] { rep = report_uniq_solve(u_k, u_s, u_p, u_v, u_instances, u_seed); });

  // config-color
  std::string g_fixture, g_file;
  bool g_enumerate = false;
  auto* cc = app.add_subcommand("config-color",
                                "3-color point-line configurations");
  auto* ofix = cc->add_option("--fixture", g_fixture, "built-in configuration")
                   ->check(CLI::IsMember(
                       {"9_3_1", "9_3_2", "9_3_3", "16_3_12_4"}));
  auto* ofile = cc->add_option("--file", g_file,
                               "JSON file with {points, lines}");
  auto* oenum = cc->add_flag("--enumerate", g_enumerate,
                             "census of all 9-point 9-line configurations");
  ofix->excludes(ofile)->excludes(oenum);
  ofile->excludes(oenum);
  cc->add_flag("--json", as_json, "emit JSON");
  cc->callback([&] {
    if (g_enumerate)
      rep = report_config_enumerate();
    else if (!g_fixture.empty() || !g_file.empty())
      rep = report_config_color(g_fixture, g_file);
    else
      throw std::invalid_argument(
          "config-color needs --fixture, --file, or --enumerate");
  });

  // refcs
  std::string r_fam = "A", r_method = "product";
  long r_rank = 1, r_y = 1;
  double r_kappa = 1.0;
  bool r_fx = false;
  auto* rc = app.add_subcommand("refcs", "refined partition function");
  rc->add_option("--algebra", r_fam, "family letter A..G")->required();
  rc->add_option("--rank", r_rank, "rank")->required();
  rc->add_option("--kappa", r_kappa, "level shift (minimal normalization)");
  rc->add_option("--y", r_y, "refinement parameter");
  rc->add_option("--method", r_method, "evaluation path")
      ->check(CLI::IsMember({"product", "integral", "universal", "fintrep"}));
  rc->add_flag("--fx", r_fx, "check the refined character sum instead");
  rc->add_flag("--json", as_json, "emit JSON");
  rc->callback([&] {
    rep = r_fx ? report_refcs_fx(r_fam, r_rank, r_y)
               : report_refcs(r_fam, r_rank, r_kappa, r_y, r_method);
  });

  // volume-check
  long v_ymax = 3;
  std::string v_only;
  bool v_all = false;
  auto* vc = app.add_subcommand("volume-check",
                                "sine-product volume identity sweep");
  vc->add_flag("--all", v_all, "sweep every algebra of rank at most 8");
  vc->add_option("--ymax", v_ymax, "largest refinement parameter");
  vc->add_option("--algebra", v_only, "restrict to one algebra, e.g. F4");
  vc->add_flag("--json", as_json, "emit JSON");
  vc->callback([&] { rep = report_volume_check(v_ymax, v_only); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!rep) return 2;
  render_report(*rep, std::cout, as_json);
  return rep->exit_code();
}

}  // namespace uvd
