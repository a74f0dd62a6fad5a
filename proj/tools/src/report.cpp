#include "report.hpp"

#include "rsdensity/text_format.hpp"

namespace rsd::cli {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  };
  if (!header.empty()) emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

Json complex_json(Complex z) { return Json::array({number_or_null(z.real()), number_or_null(z.imag())}); }

std::string cell(double x) { return format_double(x); }
std::string cell(Complex z) { return csv_complex(z); }
std::string cell(bool b) { return b ? "true" : "false"; }
std::string cell(std::int64_t v) { return std::to_string(v); }

std::string cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Document violations_document(const Family& family, const std::vector<Violation>& violations) {
  Document d;
  d.json["valid"] = violations.empty();
  d.json["n"] = family.rank;
  d.json["family_size"] = family.size();
  Json list = Json::array();
  Table t{{"rep_id", "place", "rule", "detail"}, {}};
  for (const auto& v : violations) {
    list.push_back(Json{{"rep_id", v.rep_id}, {"place", v.place}, {"rule", v.rule}, {"detail", v.detail}});
    t.rows.push_back({cell(v.rep_id), cell(v.place), cell(v.rule), cell(v.detail)});
  }
  d.json["violations"] = std::move(list);
  d.table = std::move(t);
  return d;
}

Document matrix_document(const Family& family, const CoeffMatrix& matrix) {
  Document d;
  d.json["m"] = matrix.m;
  Json ids = Json::array();
  for (const auto& rep : family.reps) ids.push_back(rep.id);
  d.json["ids"] = std::move(ids);
  Json rows = Json::array();
  Table t;
  const auto F = matrix.entries.size();
  for (std::size_t i = 0; i < F; ++i) {
    Json row = Json::array();
    std::vector<std::string> cells;
    for (std::size_t j = 0; j < F; ++j) {
      row.push_back(complex_json(matrix.entries(i, j)));
      cells.push_back(cell(matrix.entries(i, j)));
    }
    rows.push_back(std::move(row));
    t.rows.push_back(std::move(cells));
  }
  d.json["matrix"] = std::move(rows);
  d.table = std::move(t);
  return d;
}

Document exponent_document(const ExponentReport& r, const std::string& base) {
  Document d;
  d.json["n"] = r.n;
  d.json["theta"] = r.theta;
  d.json["base"] = base;
  d.json["primary_exponent"] = base == "rs" ? r.exponent_rs : r.exponent_lfn;
  d.json["exponent_lfn"] = r.exponent_lfn;
  d.json["exponent_rs"] = r.exponent_rs;
  d.json["exponent_spectral"] = r.exponent_spectral;
  d.json["exponent_spectral_summed"] = r.exponent_spectral_summed;
  d.json["pointwise_threshold"] = r.pointwise_threshold;
  d.json["crossover"] = r.crossover ? Json(*r.crossover) : Json(nullptr);
  Table t{{"n", "theta", "base", "primary_exponent", "exponent_lfn", "exponent_rs", "exponent_spectral",
           "exponent_spectral_summed", "pointwise_threshold", "crossover"},
          {{cell(std::int64_t{r.n}), cell(r.theta), cell(base), cell(d.json["primary_exponent"].get<double>()),
            cell(r.exponent_lfn), cell(r.exponent_rs), cell(r.exponent_spectral), cell(r.exponent_spectral_summed),
            cell(r.pointwise_threshold), r.crossover ? cell(*r.crossover) : std::string()}}};
  d.table = std::move(t);
  return d;
}

Document amplified_document(const AmplifiedReport& r) {
  Document d;
  d.json["n"] = r.n;
  d.json["theta"] = r.theta;
  d.json["q"] = r.q;
  d.json["rs_exponent"] = r.rs_exponent;
  d.json["q_exponent_untwisted"] = r.q_exponent_untwisted;
  d.json["q_exponent_twisted"] = r.q_exponent_twisted;
  d.json["q_factor_untwisted"] = number_or_null(r.q_factor_untwisted);
  d.json["q_factor_twisted"] = number_or_null(r.q_factor_twisted);
  d.json["pick_q_one"] = r.pick_q_one;
  d.json["boundary_theta"] = r.boundary_theta;
  d.table = Table{{"n", "theta", "q", "rs_exponent", "q_exponent_untwisted", "q_exponent_twisted",
                   "q_factor_untwisted", "q_factor_twisted", "pick_q_one", "boundary_theta"},
                  {{cell(std::int64_t{r.n}), cell(r.theta), cell(r.q), cell(r.rs_exponent),
                    cell(r.q_exponent_untwisted), cell(r.q_exponent_twisted), cell(r.q_factor_untwisted),
                    cell(r.q_factor_twisted), cell(r.pick_q_one), cell(r.boundary_theta)}}};
  return d;
}

Document chain_document(const ChainReport& r) {
  Document d;
  d.json["place"] = r.place;
  d.json["family_size"] = r.family_size;
  d.json["n"] = r.n;
  d.json["conductor_cap"] = number_or_null(r.conductor_cap);
  d.json[r.parameter_name] = r.parameter;
  d.json["rule_" + r.parameter_name] = number_or_null(r.rule_value);
  if (r.place == "inf") d.json["theta"] = r.theta;
  Json weights = Json::array();
  for (const auto& w : r.weights) weights.push_back(complex_json(w));
  d.json["weights"] = std::move(weights);
  if (!r.beta.empty()) d.json["beta"] = r.beta;

  Table t{{"k", "m", "S", "S_imag", "lower_bound", "slack", "upper_reference", "nonnegative", "bound_holds"}, {}};
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back(Json{{"k", s.k},
                         {"m", number_or_null(s.m)},
                         {"S", s.S},
                         {"S_imag", s.S_imag},
                         {"lower_bound", s.lower_bound},
                         {"slack", s.slack},
                         {"upper_reference", number_or_null(s.upper_reference)},
                         {"nonnegative", s.nonnegative},
                         {"bound_holds", s.bound_holds}});
    t.rows.push_back({cell(s.k), cell(s.m), cell(s.S), cell(s.S_imag), cell(s.lower_bound), cell(s.slack),
                      cell(s.upper_reference), cell(s.nonnegative), cell(s.bound_holds)});
  }
  d.json["steps"] = std::move(steps);
  if (!r.turan.empty()) {
    Json turan = Json::array();
    for (const auto& side : r.turan) {
      turan.push_back(Json{{"rep_id", side.rep_id},
                           {"M", side.M},
                           {"N", side.N},
                           {"k_star", side.k_star},
                           {"value", side.value},
                           {"ratio", number_or_null(side.ratio)}});
    }
    d.json["turan"] = std::move(turan);
    d.json["turan_window_max"] = r.turan_window_max;
    d.json["turan_reference"] = number_or_null(r.turan_reference);
  }
  d.json["ok"] = r.ok;
  d.table = std::move(t);
  return d;
}

Document sweep_document(const TuranSweepReport& r) {
  Document d;
  d.json["seed"] = r.seed;
  d.json["trials"] = r.trials;
  Json cells = Json::array();
  Table t{{"N", "M", "min_ratio"}, {}};
  for (const auto& c : r.cells) {
    Json argmin = Json::array();
    for (const auto& z : c.argmin) argmin.push_back(complex_json(z));
    cells.push_back(Json{{"N", c.N}, {"M", c.M}, {"min_ratio", number_or_null(c.min_ratio)}, {"argmin", argmin}});
    t.rows.push_back({cell(c.N), cell(c.M), cell(c.min_ratio)});
  }
  d.json["cells"] = std::move(cells);
  d.table = std::move(t);
  return d;
}

}  // namespace rsd::cli
