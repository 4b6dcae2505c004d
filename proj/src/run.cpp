#include "orthospec/run.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "orthospec/basmajian.hpp"
#include "orthospec/errors.hpp"
#include "orthospec/flags.hpp"
#include "orthospec/mcshane.hpp"
#include "orthospec/rep_builder.hpp"

namespace orthospec {

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Table::write(std::ostream& out, const std::string& format) const {
  if (format == "text") {
    std::vector<std::size_t> w(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size() && c < w.size(); ++c) w[c] = std::max(w[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        out << cells[c];
        if (c + 1 < cells.size()) out << std::string(w[c] - cells[c].size() + 2, ' ');
      }
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    return;
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << ',';
      out << cells[c];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void write_failure(std::ostream& err, const std::string& command, const std::string& kind,
                   const std::string& message) {
  nlohmann::json j;
  j["status"] = "fail";
  j["command"] = command;
  j["kind"] = kind;
  j["message"] = message;
  err << j.dump() << '\n';
}

namespace {

struct Outcome {
  std::vector<std::string> failures;
  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string fmt_point(const SurfacePresentation& p, const BoundaryPoint& x) {
  return p.format(x.word) + (x.sign > 0 ? " +" : " -");
}

std::string join_reals(const std::vector<double>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ';';
    s += fmt_real(v[k]);
  }
  return s;
}

void cmd_validate(const RunConfig& cfg, const Representation& r, std::ostream& out, Outcome& res) {
  const auto& p = r.presentation();
  const ValidationReport lox = validate_loxodromic(r, cfg.validate_length);
  Table t{{"word", "length", "log_moduli", "min_gap_ratio", "residual", "ok", "note"}, {}};
  for (const auto& rec : lox.records)
    t.rows.push_back({p.format(rec.word), std::to_string(rec.word.size()), join_reals(rec.log_moduli),
                      fmt_real(rec.min_gap_ratio), fmt_real(rec.residual), rec.ok ? "1" : "0",
                      rec.note});
  t.write(out, cfg.output_format);
  res.check(lox.pass, "loxodromy: " + std::to_string(lox.failures) + " words fail the spectral gap test");

  const AxiomReport ax = cross_ratio_axioms(r, 1000, 20240917ULL);
  constexpr double tol = 1e-9;
  out << '\n';
  Table s{{"check", "value", "tolerance", "pass"}, {}};
  auto row = [&](const std::string& name, double v, double tl, bool ok) {
    s.rows.push_back({name, fmt_real(v), fmt_real(tl), ok ? "1" : "0"});
  };
  row("quadruples", static_cast<double>(ax.quadruples), 0, ax.quadruples > 0);
  row("degenerate", static_cast<double>(ax.degenerate), 0, true);
  row("normalization", ax.max_normalization_error, tol, ax.max_normalization_error <= tol);
  row("cocycle", ax.max_cocycle_error, tol, ax.max_cocycle_error <= tol);
  row("symmetry", ax.max_symmetry_error, tol, ax.max_symmetry_error <= tol);
  row("ordered", static_cast<double>(ax.ordered), 0, true);
  row("ordered_gt_one_failures", static_cast<double>(ax.ordered_gt_one_failures), 0,
      ax.ordered_gt_one_failures == 0);
  // reported only: for odd n the flag cross ratio is a power of a positive one
  row("ordered_negative_failures", static_cast<double>(ax.ordered_negative_failures), 0, true);
  s.write(out, cfg.output_format);
  res.check(ax.max_normalization_error <= tol, "axioms: normalization error " + fmt_real(ax.max_normalization_error));
  res.check(ax.max_cocycle_error <= tol, "axioms: cocycle error " + fmt_real(ax.max_cocycle_error));
  res.check(ax.max_symmetry_error <= tol, "axioms: symmetry error " + fmt_real(ax.max_symmetry_error));
  res.check(ax.ordered_gt_one_failures == 0,
            "axioms: " + std::to_string(ax.ordered_gt_one_failures) + " ordered quadruples with B(x,z,t,y) <= 1");
}

void cmd_orthoset(const RunConfig& cfg, const Representation& r, std::ostream& out, Outcome& res) {
  const auto& p = r.presentation();
  const auto recs = summands(r, cfg.max_word_length, true);
  Table t{{"from_index", "to_index", "length", "word", "G", "closed_form"}, {}};
  std::size_t bad = 0;
  double worst = 0.0;
  for (const auto& s : recs) {
    t.rows.push_back({std::to_string(s.element.from + 1), std::to_string(s.element.to + 1),
                      std::to_string(s.word_length), p.format(s.element.canonical), fmt_real(s.value),
                      s.closed_form ? fmt_real(*s.closed_form) : ""});
    if (!(s.value > 0.0)) ++bad;
    if (s.closed_form) worst = std::max(worst, std::abs(s.value - *s.closed_form));
  }
  t.write(out, cfg.output_format);
  res.check(bad == 0, "orthoset: " + std::to_string(bad) + " non-positive summands");
  res.check(worst <= 1e-8, "orthoset: closed form deviation " + fmt_real(worst));
}

std::vector<PartialSumReport> basmajian_rows(const RunConfig& cfg, const Representation& r, Table& t,
                                             Outcome& res) {
  const auto series = basmajian_series(r, cfg.max_word_length, 2);
  t.header = {"L", "boundary_index", "partial_sum", "boundary_length", "defect", "term_count"};
  for (const auto& rep : series) {
    for (std::size_t b = 0; b < rep.per_boundary.size(); ++b)
      t.rows.push_back({std::to_string(rep.L), std::to_string(b + 1), fmt_real(rep.per_boundary[b]),
                        fmt_real(rep.boundary_lengths[b]),
                        fmt_real(rep.boundary_lengths[b] - rep.per_boundary[b]),
                        std::to_string(rep.per_boundary_count[b])});
    t.rows.push_back({std::to_string(rep.L), "total", fmt_real(rep.total), fmt_real(rep.total_length),
                      fmt_real(rep.defect), std::to_string(rep.term_count)});
  }
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& rep = series[k];
    res.check(rep.total <= rep.total_length + 1e-9,
              "basmajian: partial sum " + fmt_real(rep.total) + " exceeds boundary length " +
                  fmt_real(rep.total_length) + " at L = " + std::to_string(rep.L));
    for (std::size_t b = 0; b < rep.per_boundary.size(); ++b)
      res.check(rep.per_boundary[b] <= rep.boundary_lengths[b] + 1e-9,
                "basmajian: boundary " + std::to_string(b + 1) + " partial sum exceeds its length at L = " +
                    std::to_string(rep.L));
    if (k > 0)
      res.check(rep.total >= series[k - 1].total,
                "basmajian: partial sums decrease at L = " + std::to_string(rep.L));
  }
  return series;
}

void cmd_basmajian(const RunConfig& cfg, const Representation& r, std::ostream& out, Outcome& res) {
  Table t;
  basmajian_rows(cfg, r, t, res);
  t.write(out, cfg.output_format);
}

std::vector<PantsClass> pants_for(const RunConfig& cfg, const Representation& r) {
  const auto& p = r.presentation();
  if (!cfg.custom_pants.empty()) {
    std::vector<PantsClass> out;
    for (const auto& [b, g] : cfg.custom_pants) {
      PantsClass P{p.parse(b), p.parse(g)};
      if (!reduce(mul(p.alpha(0), P.gamma, P.beta)).empty())
        throw ConfigError("mcshane.pants entry '" + b + " | " + g + "' violates alpha gamma beta = e");
      out.push_back(P);
    }
    return out;
  }
  if (!((p.genus == 0 && p.boundary_count == 3) || (p.genus == 1 && p.boundary_count == 1)))
    throw ConfigError("pants enumeration supports pants and one-holed torus only; give mcshane.pants");
  return pants_enumeration(p, cfg.mcshane_depth);
}

McShaneReport mcshane_rows(const RunConfig& cfg, const Representation& r, Table& t, Outcome& res) {
  const auto& p = r.presentation();
  const auto pants = pants_for(cfg, r);
  const McShaneReport rep = mcshane_series(r, pants, cfg.max_word_length, 2);
  t.header = {"L", "pants_id", "beta", "gamma", "H", "partial_sum", "defect", "term_count"};
  for (const auto& row : rep.rows)
    t.rows.push_back({std::to_string(row.L), std::to_string(row.pants_index + 1),
                      p.format(rep.pants[row.pants_index].beta),
                      p.format(rep.pants[row.pants_index].gamma), fmt_real(row.H), fmt_real(row.sum),
                      fmt_real(row.defect), std::to_string(row.term_count)});

  double sumH = 0.0;
  for (std::size_t q = 0; q < rep.H.size(); ++q) {
    sumH += rep.H[q];
    res.check(rep.H[q] > 0.0, "mcshane: non-positive gap at pants " + std::to_string(q + 1));
  }
  res.check(sumH <= rep.ell + 1e-9,
            "mcshane: gaps sum to " + fmt_real(sumH) + " > boundary length " + fmt_real(rep.ell));
  std::vector<CircleInterval> arcs;
  for (const auto& J : rep.J) arcs.insert(arcs.end(), J.begin(), J.end());
  const double ov = max_overlap(arcs, rep.ell);
  res.check(ov < 1e-10, "mcshane: gap intervals overlap by " + fmt_real(ov));
  const std::size_t np = pants.size();
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    const auto& row = rep.rows[k];
    res.check(row.defect >= -1e-9, "mcshane: negative defect " + fmt_real(row.defect) + " at pants " +
                                       std::to_string(row.pants_index + 1) + ", L = " + std::to_string(row.L));
    if (k >= np)
      res.check(row.defect <= rep.rows[k - np].defect,
                "mcshane: defect increases at pants " + std::to_string(row.pants_index + 1) +
                    ", L = " + std::to_string(row.L));
  }
  return rep;
}

void cmd_mcshane(const RunConfig& cfg, const Representation& r, std::ostream& out, Outcome& res) {
  Table t;
  const auto rep = mcshane_rows(cfg, r, t, res);
  out << "# zeta " << fmt_point(r.presentation(), rep.zeta) << '\n';
  t.write(out, cfg.output_format);
}

void cmd_compare(const RunConfig& cfg, const Representation& r, std::ostream& out, Outcome& res) {
  Table bt, mt;
  const auto bas = basmajian_rows(cfg, r, bt, res);
  const auto mc = mcshane_rows(cfg, r, mt, res);
  Table t{{"L", "classified_sum", "unclassified_sum", "unclassified_count", "boundary_partial_sum",
           "boundary_length", "slack"},
          {}};
  for (std::size_t k = 0; k < mc.cutoffs.size() && k < bas.size(); ++k) {
    const double b = bas[k].per_boundary[0];
    const double slack = b - mc.classified_sum[k];
    t.rows.push_back({std::to_string(mc.cutoffs[k]), fmt_real(mc.classified_sum[k]),
                      fmt_real(mc.unclassified_sum[k]), std::to_string(mc.unclassified_count[k]),
                      fmt_real(b), fmt_real(bas[k].boundary_lengths[0]), fmt_real(slack)});
    res.check(slack >= -1e-9, "compare: classified sum exceeds boundary partial sum at L = " +
                                  std::to_string(mc.cutoffs[k]));
    const double whole = mc.classified_sum[k] + mc.unclassified_sum[k];
    res.check(std::abs(whole - b) <= 1e-9 * (1.0 + b),
              "compare: coset totals disagree at L = " + std::to_string(mc.cutoffs[k]));
  }
  out << "# zeta " << fmt_point(r.presentation(), mc.zeta) << '\n';
  t.write(out, cfg.output_format);
  out << '\n';
  mt.write(out, cfg.output_format);
}

}  // namespace

int run(const RunConfig& cfg, const std::string& command, const std::string& echo, std::ostream& out,
        std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitPass;
  try {
    if (command != "validate" && command != "orthoset" && command != "basmajian" && command != "mcshane" &&
        command != "compare")
      throw ConfigError("unknown command '" + command + "'");
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016" PRIx64, cfg.hash);
    out << "# " << echo << '\n';
    out << "# config_hash fnv1a64:" << hash << '\n';
    const Representation r = load_representation(cfg.rep);
    out << "# n " << r.n() << ", construction " << r.construction()
        << (r.presentation().peripheral_inverted ? ", peripheral marking inverted" : "") << '\n';
    Outcome res;
    if (command == "validate") cmd_validate(cfg, r, out, res);
    else if (command == "orthoset") cmd_orthoset(cfg, r, out, res);
    else if (command == "basmajian") cmd_basmajian(cfg, r, out, res);
    else if (command == "mcshane") cmd_mcshane(cfg, r, out, res);
    else cmd_compare(cfg, r, out, res);
    for (const auto& f : res.failures) write_failure(err, command, "invariant", f);
    if (!res.failures.empty()) code = kExitInvariant;
  } catch (const ConfigError& e) {
    write_failure(err, command, "config", e.what());
    code = kExitConfig;
  } catch (const InvariantViolation& e) {
    write_failure(err, command, "invariant", e.what());
    code = kExitInvariant;
  } catch (const LoxodromyError& e) {
    write_failure(err, command, "loxodromy", e.what());
    code = kExitNumerical;
  } catch (const DegenerateQuadruple& e) {
    write_failure(err, command, "degenerate", e.what());
    code = kExitNumerical;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "wall_clock_seconds " << secs << '\n';
  return code;
}

}  // namespace orthospec
