#include "trient/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <set>

#include "trient/measures.hpp"
#include "trient/state_json.hpp"
#include "trient/verify.hpp"

namespace trient::cli {

namespace {

// Machine outputs carry 17 significant digits so doubles survive a round
// trip through text.
std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Human outputs use 6 significant digits.
std::string fmt6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

constexpr const char* kMeasureNames[] = {"concurrence", "negativity", "coa",
                                         "tau", "chi", "varpi", "eta"};

std::array<double, 7> measure_values(const MeasureReport& r) {
  return {r.concurrence, r.negativity, r.coa, r.tau, r.chi, r.varpi, r.eta};
}

const std::vector<std::string>& family_axes(const std::string& family) {
  static const std::vector<std::string> ghz = {"lambda0", "theta"};
  static const std::vector<std::string> w = {"lt0", "lt1", "lt2"};
  if (family == "ghz") return ghz;
  if (family == "w") return w;
  throw InvalidParams("unknown family \"" + family +
                      "\"; expected ghz or w");
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw InvalidParams("cannot parse " + what + " \"" + s + "\"");
  }
  if (pos != s.size() || !std::isfinite(v))
    throw InvalidParams("cannot parse " + what + " \"" + s + "\"");
  return v;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw InvalidParams("cannot parse " + what + " \"" + s + "\"");
  }
  if (pos != s.size())
    throw InvalidParams("cannot parse " + what + " \"" + s + "\"");
  return v;
}

}  // namespace

SweepSpec parse_sweep_spec(const std::string& family,
                           const std::vector<std::string>& params,
                           const std::vector<std::string>& fixes) {
  SweepSpec spec;
  spec.family = family;
  const auto& allowed = family_axes(family);
  std::set<std::string> seen;
  const auto claim = [&](const std::string& name) {
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
      throw InvalidParams("parameter \"" + name +
                          "\" does not belong to family " + family);
    if (!seen.insert(name).second)
      throw InvalidParams("parameter \"" + name + "\" given twice");
  };
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos)
      throw InvalidParams("--param expects NAME=START:STOP:STEPS, got \"" +
                          p + "\"");
    SweepAxis ax;
    ax.name = p.substr(0, eq);
    claim(ax.name);
    const std::string rhs = p.substr(eq + 1);
    const auto c1 = rhs.find(':');
    const auto c2 = rhs.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw InvalidParams("--param expects NAME=START:STOP:STEPS, got \"" +
                          p + "\"");
    ax.start = parse_double(rhs.substr(0, c1), "range start");
    ax.stop = parse_double(rhs.substr(c1 + 1, c2 - c1 - 1), "range stop");
    ax.steps = parse_int(rhs.substr(c2 + 1), "step count");
    if (ax.steps < 1)
      throw InvalidParams("step count must be >= 1, got " +
                          std::to_string(ax.steps));
    spec.axes.push_back(std::move(ax));
  }
  for (const auto& f : fixes) {
    const auto eq = f.find('=');
    if (eq == std::string::npos)
      throw InvalidParams("--fix expects NAME=VALUE, got \"" + f + "\"");
    SweepFixed fx;
    fx.name = f.substr(0, eq);
    claim(fx.name);
    fx.value = parse_double(f.substr(eq + 1), "fixed value");
    spec.fixed.push_back(std::move(fx));
  }
  return spec;
}

int cmd_measure(const std::string& path, const std::string& format,
                std::ostream& out, std::ostream& err) {
  try {
    if (format != "json" && format != "csv")
      throw InvalidParams("format must be json or csv, got \"" + format +
                          "\"");
    const TripartitePureState s = load_state_file(path);
    const MeasureReport r = full_report(s);
    const std::array<int, 3> ranks = local_ranks(s);
    const auto vals = measure_values(r);
    if (format == "csv") {
      out << "n,rank_a,rank_b,rank_c";
      for (const char* name : kMeasureNames) out << ',' << name;
      out << '\n' << s.n() << ',' << ranks[0] << ',' << ranks[1] << ','
          << ranks[2];
      for (double v : vals) out << ',' << fmt17(v);
      out << '\n';
    } else {
      out << "{\n  \"n\": " << s.n() << ",\n  \"local_ranks\": ["
          << ranks[0] << ", " << ranks[1] << ", " << ranks[2]
          << "],\n  \"measures\": {\n";
      for (std::size_t i = 0; i < vals.size(); ++i)
        out << "    \"" << kMeasureNames[i] << "\": " << fmt17(vals[i])
            << (i + 1 < vals.size() ? ",\n" : "\n");
      out << "  }\n}\n";
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path,
              std::ostream& err) {
  try {
    const auto& allowed = family_axes(spec.family);
    std::map<std::string, double> value;
    for (const auto& f : spec.fixed) value[f.name] = f.value;
    for (const auto& ax : spec.axes) value[ax.name] = ax.start;
    if (spec.family == "ghz") {
      if (!value.count("lambda0"))
        throw InvalidParams("family ghz needs lambda0 as a parameter or "
                            "fixed value");
      value.try_emplace("theta", 0.0);
    } else {
      for (const auto& name : allowed)
        if (!value.count(name))
          throw InvalidParams("family w needs " + name +
                              " as a parameter or fixed value");
    }

    // Walk the grid once to validate feasibility, then again to emit rows,
    // so an infeasible grid never leaves a partial file behind.
    std::vector<int> odo(spec.axes.size(), 0);
    const auto at = [&](std::size_t a) {
      const SweepAxis& ax = spec.axes[a];
      return ax.steps == 1 ? ax.start
                           : ax.start + odo[a] * (ax.stop - ax.start) /
                                            (ax.steps - 1);
    };
    const auto advance = [&] {
      for (std::size_t a = spec.axes.size(); a-- > 0;) {
        if (++odo[a] < spec.axes[a].steps) return true;
        odo[a] = 0;
      }
      return false;
    };
    const auto point_params = [&]() -> std::vector<double> {
      for (std::size_t a = 0; a < spec.axes.size(); ++a)
        value[spec.axes[a].name] = at(a);
      if (spec.family == "ghz") {
        const double l0 = value["lambda0"];
        const double th = value["theta"];
        if (!(l0 > 0.0 && l0 < 1.0))
          throw InvalidParams("infeasible grid point: lambda0 = " +
                              std::to_string(l0) +
                              " outside (0, 1)");
        if (!(th >= 0.0 && th <= std::numbers::pi))
          throw InvalidParams("infeasible grid point: theta = " +
                              std::to_string(th) + " outside [0, pi]");
        return {l0, std::sqrt(1.0 - l0 * l0), th};
      }
      const double l[3] = {value["lt0"], value["lt1"], value["lt2"]};
      for (double x : l)
        if (!(x > 0.0))
          throw InvalidParams("infeasible grid point: W coefficients must "
                              "be positive");
      const double rem = 1.0 - l[0] * l[0] - l[1] * l[1] - l[2] * l[2];
      if (rem < -tol::param_norm)
        throw InvalidParams("infeasible grid point: squared coefficients "
                            "exceed 1 by " +
                            std::to_string(-rem));
      return {l[0], l[1], l[2], std::sqrt(std::max(rem, 0.0))};
    };

    std::fill(odo.begin(), odo.end(), 0);
    do {
      point_params();
    } while (advance());

    std::ofstream file(out_path);
    if (!file)
      throw InvalidParams("cannot open " + out_path + " for writing");
    if (spec.family == "ghz")
      file << "lambda0,lambda1,theta";
    else
      file << "lt0,lt1,lt2,lt3";
    for (const char* name : kMeasureNames) file << ',' << name;
    file << '\n';
    std::fill(odo.begin(), odo.end(), 0);
    do {
      const std::vector<double> p = point_params();
      const TripartitePureState st =
          spec.family == "ghz"
              ? ghz_state({p[0], p[1], p[2]})
              : w_state({p[0], p[1], p[2], p[3]});
      bool first = true;
      for (double v : p) {
        file << (first ? "" : ",") << fmt17(v);
        first = false;
      }
      for (double v : measure_values(full_report(st))) file << ',' << fmt17(v);
      file << '\n';
    } while (advance());
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

int cmd_verify(std::uint64_t seed, int trials, double tol,
               const std::vector<std::string>& suites,
               const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  try {
    TrialConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.tol = tol;
    const std::vector<std::string>& which =
        suites.empty() ? all_suite_names() : suites;
    const std::vector<PropertyResult> results = run_suite(cfg, which);
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file)
        throw InvalidParams("cannot open " + out_path + " for writing");
    }
    bool clean = true;
    for (const auto& r : results) {
      const std::string line = to_json(r).dump();
      out << line << '\n';
      if (file.is_open()) file << line << '\n';
      if (r.violations > 0) clean = false;
    }
    return clean ? kOk : kViolations;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

int cmd_classify(const std::string& path, std::ostream& out,
                 std::ostream& err) {
  try {
    const TripartitePureState s = load_state_file(path);
    const std::array<int, 3> ranks = local_ranks(s);
    const MeasureReport r = full_report(s);
    std::string label;
    if (r.chi <= tol::vanish) {
      label = "separable (A-BC or AB-C)";
    } else if (ranks == std::array<int, 3>{2, 2, 2}) {
      if (r.varpi > tol::nonzero)
        label = "W-type (2,2,2)";
      else if (r.chi > tol::nonzero && r.varpi <= tol::vanish)
        label = "GHZ-type (2,2,2)";
      else
        label = "undetermined";
    } else if (ranks == std::array<int, 3>{2, 2, 3} &&
               r.chi > tol::nonzero) {
      label = "(2,2,3) class";
    } else if (ranks == std::array<int, 3>{2, 2, 4} &&
               r.chi > tol::nonzero) {
      label = "(2,2,4) class";
    } else {
      label = "undetermined";
    }
    out << "ranks: (" << ranks[0] << "," << ranks[1] << "," << ranks[2]
        << ")\n"
        << "label: " << label << '\n'
        << "chi: " << fmt6(r.chi) << "  varpi: " << fmt6(r.varpi)
        << "  eta: " << fmt6(r.eta) << '\n'
        << "concurrence: " << fmt6(r.concurrence)
        << "  negativity: " << fmt6(r.negativity) << "  coa: " << fmt6(r.coa)
        << '\n'
        << "thresholds: vanishing at or below " << fmt6(tol::vanish)
        << ", clearly nonzero above " << fmt6(tol::nonzero) << '\n';
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace trient::cli
