#include "dpsbp/operator_coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dpsbp {

namespace {

double parse_number(std::string tok) {
  // tolerate the typographic minus sign U+2212
  for (std::string::size_type p; (p = tok.find("\xe2\x88\x92")) != std::string::npos;)
    tok.replace(p, 3, "-");
  auto slash = tok.find('/');
  try {
    size_t used = 0;
    if (slash != std::string::npos) {
      double num = std::stod(tok.substr(0, slash));
      double den = std::stod(tok.substr(slash + 1), &used);
      if (used != tok.size() - slash - 1) throw std::invalid_argument(tok);
      if (den == 0.0) throw std::invalid_argument("zero denominator");
      return num / den;
    }
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("coefficient file: bad numeric literal '" + tok + "'");
  }
}

std::vector<double> parse_numbers(const std::string& s) {
  std::vector<double> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(parse_number(tok));
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

void OperatorCoefficients::validate() const {
  if (name.empty()) throw std::runtime_error("operator coefficients: missing name");
  if (interior_order < 1) throw std::runtime_error(name + ": interior_order must be >= 1");
  if (boundary_order < 0) throw std::runtime_error(name + ": boundary_order must be >= 0");
  if (closure_width < 1) throw std::runtime_error(name + ": closure_width must be >= 1");
  if (static_cast<int>(h_boundary.size()) != closure_width)
    throw std::runtime_error(name + ": h_boundary must have closure_width entries");
  for (double w : h_boundary)
    if (!(w > 0.0)) throw std::runtime_error(name + ": H boundary weights must be positive");
  if (static_cast<int>(d_minus_boundary.size()) != closure_width)
    throw std::runtime_error(name + ": d_minus_boundary must have closure_width rows");
  if (d_minus_interior_offsets.size() != d_minus_interior_weights.size() ||
      d_minus_interior_offsets.empty())
    throw std::runtime_error(name + ": interior stencil offsets/weights mismatch");

  double sum = 0.0, first = 0.0;
  for (size_t k = 0; k < d_minus_interior_weights.size(); ++k) {
    sum += d_minus_interior_weights[k];
    first += d_minus_interior_weights[k] * d_minus_interior_offsets[k];
  }
  if (std::abs(sum) > 1e-12)
    throw std::runtime_error(name + ": interior stencil does not annihilate constants");
  if (std::abs(first - 1.0) > 1e-12)
    throw std::runtime_error(name + ": interior stencil does not differentiate x exactly");
  for (const auto& row : d_minus_boundary) {
    double rs = 0.0;
    for (double w : row) rs += w;
    if (std::abs(rs) > 1e-12)
      throw std::runtime_error(name + ": boundary row does not annihilate constants");
  }
}

int OperatorCoefficients::min_points() const {
  int span_lo = 0, span_hi = 0;
  for (int o : d_minus_interior_offsets) {
    span_lo = std::max(span_lo, -o);
    span_hi = std::max(span_hi, o);
  }
  size_t rowlen = 0;
  for (const auto& row : d_minus_boundary) rowlen = std::max(rowlen, row.size());
  // disjoint closures plus clean interior rows for the derived central and
  // upwind stencils, whose support spans span_lo + span_hi
  const int need = 2 * (closure_width + span_lo + span_hi);
  return std::max(need, static_cast<int>(rowlen) + closure_width + 1);
}

OperatorCoefficients dp2_coefficients() {
  OperatorCoefficients c;
  c.name = "dp2";
  c.interior_order = 2;
  c.boundary_order = 1;
  c.closure_width = 2;
  c.h_boundary = {0.25, 1.25};
  c.d_minus_boundary = {{-1.0, 1.0}, {-1.0, 1.0}};
  c.d_minus_interior_offsets = {-2, -1, 0};
  c.d_minus_interior_weights = {0.5, -2.0, 1.5};
  return c;
}

OperatorCoefficients trad2_coefficients() {
  OperatorCoefficients c;
  c.name = "trad2";
  c.interior_order = 2;
  c.boundary_order = 1;
  c.closure_width = 1;
  c.h_boundary = {0.5};
  c.d_minus_boundary = {{-1.0, 1.0}};
  c.d_minus_interior_offsets = {-1, 0, 1};
  c.d_minus_interior_weights = {-0.5, 0.0, 0.5};
  return c;
}

OperatorCoefficients parse_coefficients(const std::string& text) {
  OperatorCoefficients c;
  std::istringstream is(text);
  std::string line;
  bool saw_any = false;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("coefficient file: expected 'key = value', got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    saw_any = true;
    if (key == "name") {
      c.name = val;
    } else if (key == "interior_order") {
      c.interior_order = static_cast<int>(parse_number(val));
    } else if (key == "boundary_order") {
      c.boundary_order = static_cast<int>(parse_number(val));
    } else if (key == "closure_width") {
      c.closure_width = static_cast<int>(parse_number(val));
    } else if (key == "h_boundary") {
      c.h_boundary = parse_numbers(val);
    } else if (key == "d_minus_boundary") {
      std::string row;
      std::istringstream rows(val);
      while (std::getline(rows, row, ';')) {
        auto nums = parse_numbers(row);
        if (!nums.empty()) c.d_minus_boundary.push_back(nums);
      }
    } else if (key == "d_minus_interior_offsets") {
      for (double v : parse_numbers(val)) {
        if (v != std::floor(v))
          throw std::runtime_error("coefficient file: offsets must be integers");
        c.d_minus_interior_offsets.push_back(static_cast<int>(v));
      }
    } else if (key == "d_minus_interior_weights") {
      c.d_minus_interior_weights = parse_numbers(val);
    } else {
      throw std::runtime_error("coefficient file: unknown key '" + key + "'");
    }
  }
  if (!saw_any) throw std::runtime_error("coefficient file: empty");
  c.validate();
  return c;
}

OperatorCoefficients load_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coefficients(ss.str());
}

}  // namespace dpsbp
