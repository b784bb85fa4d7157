#include "regge/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace regge {

using nlohmann::json;

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw Error(ErrorCode::ConfigError, "write failed for " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::ConfigError, "cannot move output into " + path + ": " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Complex parse_complex(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_object() && j.contains("re")) {
    const double re = j.at("re").get<double>();
    const double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
    return {re, im};
  }
  throw Error(ErrorCode::ConfigError, what + " must be a number or {re, im}");
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

double required_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw Error(ErrorCode::ConfigError, std::string("missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

Potential parse_potential(const json& j, double a) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw Error(ErrorCode::ConfigError, "potential needs a string 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "zero") return Potential::zero(a);
  if (type == "constant") {
    if (!j.contains("value")) throw Error(ErrorCode::ConfigError, "constant potential needs 'value'");
    return Potential::constant(parse_complex(j.at("value"), "potential.value"), a);
  }
  if (type == "grid") {
    if (!j.contains("samples") || !j.at("samples").is_array()) {
      throw Error(ErrorCode::ConfigError, "grid potential needs a 'samples' array");
    }
    std::vector<Complex> samples;
    for (const json& s : j.at("samples")) samples.push_back(parse_complex(s, "potential sample"));
    Interpolation interp = Interpolation::Linear;
    if (j.contains("interpolation")) {
      const std::string name = j.at("interpolation").get<std::string>();
      if (name == "cubic") {
        interp = Interpolation::Cubic;
      } else if (name != "linear") {
        throw Error(ErrorCode::ConfigError, "interpolation must be 'linear' or 'cubic'");
      }
    }
    return Potential::grid(std::move(samples), a, interp);
  }
  throw Error(ErrorCode::ConfigError, "unknown potential type '" + type + "'");
}

}  // namespace

ReggeProblem parse_problem(const std::string& json_text) {
  try {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw Error(ErrorCode::ConfigError, "config must be a JSON object");
    ReggeProblem p;
    p.a = required_number(j, "a");
    p.alpha0 = required_number(j, "alpha0");
    p.alpha = required_number(j, "alpha");
    if (!j.contains("beta0") || !j.contains("beta") || !j.contains("potential")) {
      throw Error(ErrorCode::ConfigError, "config needs beta0, beta and potential");
    }
    p.beta0 = parse_complex(j.at("beta0"), "beta0");
    p.beta = parse_complex(j.at("beta"), "beta");
    if (!(p.a > 0.0)) throw Error(ErrorCode::ConfigError, "a must be positive");
    p.potential = parse_potential(j.at("potential"), p.a);
    if (j.contains("real_data")) {
      p.real_data = j.at("real_data").get<bool>();
    } else {
      p.real_data = p.beta0.imag() == 0.0 && p.beta.imag() == 0.0 && p.potential.real_valued();
    }
    return validate_problem(p);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("malformed config: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    throw Error(ErrorCode::ConfigError,
                std::string(to_string(e.code())) + ": " + e.what());
  }
}

ReggeProblem load_problem(const std::string& path) { return parse_problem(read_file(path)); }

std::string problem_to_json(const ReggeProblem& p) {
  json q;
  switch (p.potential.kind()) {
    case Potential::Kind::Zero: q = {{"type", "zero"}}; break;
    case Potential::Kind::Constant:
      q = {{"type", "constant"}, {"value", complex_json(p.potential.constant_value())}};
      break;
    case Potential::Kind::Grid: {
      json s = json::array();
      for (Complex z : p.potential.samples()) s.push_back(complex_json(z));
      q = {{"type", "grid"},
           {"samples", s},
           {"interpolation",
            p.potential.interpolation() == Interpolation::Cubic ? "cubic" : "linear"}};
      break;
    }
  }
  const json j = {{"a", p.a},         {"alpha0", p.alpha0}, {"beta0", complex_json(p.beta0)},
                  {"alpha", p.alpha}, {"beta", complex_json(p.beta)},
                  {"potential", q},   {"real_data", p.real_data}};
  return j.dump(2) + "\n";
}

CsvTable& CsvTable::row(std::vector<std::string> cells) {
  rows_.push_back(std::move(cells));
  return *this;
}

CsvTable& CsvTable::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  for (double v : values) cells.push_back(format_number(v));
  return row(std::move(cells));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

CsvTable spectrum_table(const Spectrum& sp, const AsymptoticModel* predict) {
  std::vector<std::string> header{"k", "re", "im", "multiplicity", "residual"};
  if (predict) {
    header.push_back("predicted_re");
    header.push_back("predicted_im");
  }
  CsvTable t(header);
  for (const SpectrumEntry& e : sp.entries) {
    std::vector<std::string> cells{std::to_string(e.k), format_number(e.lambda.real()),
                                   format_number(e.lambda.imag()), std::to_string(e.multiplicity),
                                   format_number(e.residual)};
    if (predict) {
      if (predict->valid_index(e.k)) {
        const Complex z = predicted_lambda(*predict, sp.sign.value_or(Sign::Plus), e.k);
        cells.push_back(format_number(z.real()));
        cells.push_back(format_number(z.imag()));
      } else {
        cells.push_back("nan");
        cells.push_back("nan");
      }
    }
    t.row(std::move(cells));
  }
  return t;
}

CsvTable charfn_table(const std::vector<CharFnSample>& samples) {
  CsvTable t({"lambda_re", "lambda_im", "value_re", "value_im"});
  for (const CharFnSample& s : samples) {
    t.row(std::vector<double>{s.lambda.real(), s.lambda.imag(), s.value.real(), s.value.imag()});
  }
  return t;
}

CsvTable kernel_table(const KernelGrid& kg) {
  CsvTable t({"x", "t", "ReK", "ImK"});
  const int n = kg.points();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      const Complex k = kg.node(i, j);
      t.row(std::vector<double>{(i + j) * kg.step(), (i - j) * kg.step(), k.real(), k.imag()});
    }
  }
  return t;
}

CsvTable tail_table(const std::vector<TailEntry>& tail) {
  CsvTable t({"k", "re", "im"});
  for (const TailEntry& e : tail) {
    t.row({std::to_string(e.k), format_number(e.beta.real()), format_number(e.beta.imag())});
  }
  return t;
}

CsvTable critical_table(const CriticalDiagnostics& d) {
  CsvTable t({"t", "abs_G", "abs_Phi", "abs_Phi0", "abs_E0"});
  for (std::size_t i = 0; i < d.t.size(); ++i) {
    t.row(std::vector<double>{d.t[i], std::abs(d.G[i]), std::abs(d.Phi[i]), std::abs(d.Phi0[i]),
                              std::abs(d.E0[i])});
  }
  return t;
}

std::string zero_set_to_string(const ZeroSet& zs) {
  std::string out = "# order_at_origin=" + std::to_string(zs.order_at_origin) + "\n";
  out += "re,im,multiplicity\n";
  for (const auto& [z, m] : zs.zeros) {
    out += format_number(z.real()) + "," + format_number(z.imag()) + "," + std::to_string(m) + "\n";
  }
  return out;
}

ZeroSet parse_zero_set(const std::string& text) {
  ZeroSet zs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("order_at_origin=");
      if (pos != std::string::npos) {
        try {
          zs.order_at_origin = std::stoi(line.substr(pos + 16));
        } catch (const std::exception&) {
          throw Error(ErrorCode::ConfigError, "bad order_at_origin on line " + std::to_string(lineno));
        }
      }
      continue;
    }
    if (line.rfind("re,", 0) == 0) continue;
    std::istringstream cells(line);
    std::string re, im, mult;
    if (!std::getline(cells, re, ',') || !std::getline(cells, im, ',')) {
      throw Error(ErrorCode::ConfigError, "zero-set line " + std::to_string(lineno) + " malformed");
    }
    int m = 1;
    try {
      if (std::getline(cells, mult, ',') && !mult.empty()) m = std::stoi(mult);
      zs.zeros.emplace_back(Complex(std::stod(re), std::stod(im)), m);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "zero-set line " + std::to_string(lineno) + " malformed");
    }
    if (m < 1) throw Error(ErrorCode::ConfigError, "multiplicity must be positive");
  }
  if (zs.order_at_origin < 0) throw Error(ErrorCode::ConfigError, "negative order at origin");
  return zs;
}

ZeroSet load_zero_set(const std::string& path) { return parse_zero_set(read_file(path)); }

std::string svg_scatter(const std::vector<SvgSeries>& series, const std::string& title) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const SvgSeries& s : series) {
    for (Complex z : s.points) {
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, z.imag());
      y1 = std::max(y1, z.imag());
    }
  }
  if (!std::isfinite(x0)) x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  x0 = std::min(x0, 0.0), x1 = std::max(x1, 0.0), y0 = std::min(y0, 0.0), y1 = std::max(y1, 0.0);
  const double padx = 0.05 * std::max(x1 - x0, 1e-9) + 1e-9;
  const double pady = 0.05 * std::max(y1 - y0, 1e-9) + 1e-9;
  x0 -= padx, x1 += padx, y0 -= pady, y1 += pady;
  const double W = 800, H = 500, m = 50;
  auto px = [&](double x) { return m + (x - x0) / (x1 - x0) * (W - 2 * m); };
  auto py = [&](double y) { return H - m - (y - y0) / (y1 - y0) * (H - 2 * m); };

  std::ostringstream o;
  o << std::setprecision(6);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
  o << "<line x1=\"" << px(x0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(0)
    << "\" stroke=\"#888\"/>\n";
  o << "<line x1=\"" << px(0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(y1)
    << "\" stroke=\"#888\"/>\n";
  o << "<text x=\"" << W - m << "\" y=\"" << py(0) - 6 << "\" text-anchor=\"end\">Re</text>\n";
  o << "<text x=\"" << px(0) + 6 << "\" y=\"" << m - 6 << "\">Im</text>\n";
  o << "<text x=\"" << m << "\" y=\"" << H - 15 << "\">[" << x0 << ", " << x1 << "] x [" << y0
    << ", " << y1 << "]</text>\n";
  double legend_y = 40;
  for (const SvgSeries& s : series) {
    for (Complex z : s.points) {
      o << "<circle cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag()) << "\" r=\"3.5\" ";
      if (s.hollow) {
        o << "fill=\"none\" stroke=\"" << s.color << "\"/>\n";
      } else {
        o << "fill=\"" << s.color << "\"/>\n";
      }
    }
    if (!s.label.empty()) {
      o << "<text x=\"" << W - m << "\" y=\"" << legend_y << "\" text-anchor=\"end\" fill=\""
        << s.color << "\">" << s.label << "</text>\n";
      legend_y += 16;
    }
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace regge
