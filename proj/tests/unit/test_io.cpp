#include "helpers.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "regge/io.hpp"

using namespace regge;

namespace {
std::string data(const std::string& name) { return std::string(REGGE_TEST_DATA) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}
}  // namespace

TEST_CASE("format_number round-trips doubles") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> e(-300, 300), m(-1, 1);
  for (int i = 0; i < 200; ++i) {
    const double v = m(rng) * std::pow(10.0, e(rng));
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("load_problem on the bundled configs") {
  const ReggeProblem p = load_problem(data("zero_closed_form.json"));
  CHECK(p.a == 1.0);
  CHECK(p.alpha0 == 2.0);
  CHECK(p.alpha == 3.0);
  CHECK(p.real_data);
  CHECK(p.potential.kind() == Potential::Kind::Zero);
  CHECK(load_problem(data("beta_minus5.json")).beta == Complex(-5.0));
}

TEST_CASE("parse_problem variants") {
  const ReggeProblem g = parse_problem(R"({"a": 2, "alpha0": 1.5, "alpha": 0.5,
      "beta0": {"re": 1, "im": -2}, "beta": 3,
      "potential": {"type": "grid", "samples": [1, {"re": 2, "im": 1}, 3], "interpolation": "cubic"}})");
  CHECK(g.beta0 == Complex(1, -2));
  CHECK(g.potential.kind() == Potential::Kind::Grid);
  CHECK(g.potential.interpolation() == Interpolation::Cubic);
  CHECK(g.potential.samples()[1] == Complex(2, 1));
  CHECK_FALSE(g.real_data);  // inferred from the complex data

  const ReggeProblem c = parse_problem(
      R"({"a": 1, "alpha0": 0, "alpha": 2, "beta0": 0, "beta": 0, "potential": {"type": "constant", "value": 4}})");
  CHECK(c.potential.constant_value() == Complex(4.0));
  CHECK(c.real_data);
}

TEST_CASE("malformed configs are ConfigError") {
  const char* bad[] = {
      "not json",
      "[1, 2]",
      R"({"alpha0": 1, "alpha": 2, "beta0": 0, "beta": 0, "potential": {"type": "zero"}})",
      R"({"a": 1, "alpha0": 2, "alpha": 3, "beta0": 0, "potential": {"type": "zero"}})",
      R"({"a": -1, "alpha0": 2, "alpha": 3, "beta0": 0, "beta": 0, "potential": {"type": "zero"}})",
      R"({"a": 1, "alpha0": -2, "alpha": 3, "beta0": 0, "beta": 0, "potential": {"type": "zero"}})",
      R"({"a": 1, "alpha0": 2, "alpha": 0, "beta0": 0, "beta": 0, "potential": {"type": "zero"}})",
      R"({"a": 1, "alpha0": 2, "alpha": 3, "beta0": 0, "beta": 0, "potential": {"type": "wavy"}})",
      R"({"a": 1, "alpha0": 2, "alpha": 3, "beta0": 0, "beta": 0, "potential": {"type": "constant"}})",
      R"({"a": 1, "alpha0": 2, "alpha": 3, "beta0": 0, "beta": 0, "potential": {"type": "grid", "samples": [1]}})",
      R"({"a": 1, "alpha0": 2, "alpha": 3, "beta0": 0, "beta": 0,
          "potential": {"type": "grid", "samples": [1, 2], "interpolation": "spline"}})",
      R"({"a": 1, "alpha0": "two", "alpha": 3, "beta0": 0, "beta": 0, "potential": {"type": "zero"}})",
      R"({"a": 1, "alpha0": 2, "alpha": 3, "beta0": {"im": 1}, "beta": 0, "potential": {"type": "zero"}})",
      R"({"a": 1, "alpha0": 2, "alpha": 3, "beta0": {"re": 0, "im": 1}, "beta": 0,
          "potential": {"type": "zero"}, "real_data": true})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_CODE(parse_problem(text), ErrorCode::ConfigError);
  }
  CHECK_THROWS_CODE(load_problem(data("missing.json")), ErrorCode::ConfigError);
}

TEST_CASE("property: problem_to_json round-trips") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(-3, 3), pos(0.1, 4);
  for (int i = 0; i < 25; ++i) {
    const double a = pos(rng);
    const bool real = i % 2 == 0;
    Potential q = i % 3 == 0   ? Potential::zero(a)
                  : i % 3 == 1 ? Potential::constant(Complex(u(rng), real ? 0.0 : u(rng)), a)
                               : testing::random_grid(rng, a, real);
    const Complex b0(u(rng), real ? 0.0 : u(rng));
    const ReggeProblem p = make_problem(a, pos(rng), b0, pos(rng), u(rng), std::move(q));
    const ReggeProblem back = parse_problem(problem_to_json(p));
    CHECK(back.a == p.a);
    CHECK(back.alpha0 == p.alpha0);
    CHECK(back.alpha == p.alpha);
    CHECK(back.beta0 == p.beta0);
    CHECK(back.beta == p.beta);
    CHECK(back.real_data == p.real_data);
    CHECK(back.potential.kind() == p.potential.kind());
    for (double x = 0.0; x <= a; x += a / 7.0) CHECK(back.potential(x) == p.potential(x));
  }
}

TEST_CASE("CsvTable layout") {
  CsvTable t({"x", "y"});
  t.row(std::vector<double>{1.0, 0.25}).row(std::vector<std::string>{"a", "b"});
  CHECK(t.str() == "x,y\n1,0.25\na,b\n");

  Spectrum sp;
  sp.entries.push_back({3, {1.5, -0.5}, 2, 1e-12});
  const auto rows = lines(spectrum_table(sp).str());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "k,re,im,multiplicity,residual");
  CHECK(rows[1] == "3,1.5,-0.5,2,9.9999999999999998e-13");

  const auto tail = lines(tail_table({{5, {0.25, -1}}}).str());
  CHECK(tail[0] == "k,re,im");
  CHECK(tail[1] == "5,0.25,-1");
}

TEST_CASE("zero-set files") {
  ZeroSet zs;
  zs.order_at_origin = 2;
  zs.zeros = {{{1.5, -0.25}, 1}, {{-3.0, 1.0 / 3.0}, 3}};
  const ZeroSet back = parse_zero_set(zero_set_to_string(zs));
  CHECK(back.order_at_origin == 2);
  REQUIRE(back.zeros.size() == 2);
  CHECK(back.zeros[1].first == zs.zeros[1].first);
  CHECK(back.zeros[1].second == 3);

  const ZeroSet plain = parse_zero_set("re,im\r\n1,2\r\n\r\n3,4\n");
  CHECK(plain.order_at_origin == 0);
  CHECK(plain.total() == 2);

  CHECK_THROWS_CODE(parse_zero_set("1\n"), ErrorCode::ConfigError);
  CHECK_THROWS_CODE(parse_zero_set("1,x\n"), ErrorCode::ConfigError);
  CHECK_THROWS_CODE(parse_zero_set("1,2,0\n"), ErrorCode::ConfigError);
  CHECK_THROWS_CODE(parse_zero_set("# order_at_origin=-1\n"), ErrorCode::ConfigError);
  CHECK_THROWS_CODE(parse_zero_set("# order_at_origin=many\n"), ErrorCode::ConfigError);
}

TEST_CASE("write_file_atomic replaces the target") {
  const auto dir = std::filesystem::temp_directory_path() / "regge_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "out.csv").string();
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  CHECK(read_file(path) == "second\n");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("svg_scatter") {
  const std::string svg = svg_scatter({{{{1, 1}, {-2, 0.5}}, "#000", false, "found"},
                                       {{{0, 0}}, "#f00", true, "predicted"}},
                                      "zeros");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t circles = 0;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
  CHECK(circles >= 3);
}
