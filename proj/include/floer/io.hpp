#pragma once

// JSON for complexes and pages, and the text grid used by `pages`.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "floer/complex.hpp"
#include "floer/errors.hpp"
#include "floer/specseq.hpp"
#include "json.hpp"

namespace floer::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const FloerComplex& c) {
  Json j;
  j["n"] = c.top();
  j["N"] = c.period();
  j["dims"] = c.dims();
  Json ops = Json::object();
  for (int k = 0; k <= c.nu(); ++k) {
    Json fam = Json::array();
    for (int i = 0; i <= c.top(); ++i) fam.push_back(c.op(k, i).to_rows());
    ops[std::to_string(k)] = std::move(fam);
  }
  j["ops"] = std::move(ops);
  return j;
}

namespace detail {

inline int get_int(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

// Structural errors (bad JSON, wrong keys, wrong row lengths) are ParseError;
// a well-formed file whose operators break the identities parses fine and is
// left for validate().
inline FloerComplex complex_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("complex must be a JSON object");
  const int n = detail::get_int(j, "n");
  const int N = detail::get_int(j, "N");
  if (n < 0) throw ParseError("'n' must be >= 0");
  if (N < 2) throw ParseError("'N' must be >= 2");
  if (!j.contains("dims") || !j["dims"].is_array()) throw ParseError("'dims' must be an array");
  std::vector<std::size_t> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 0) {
      throw ParseError("'dims' entries must be non-negative integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  if (dims.size() != static_cast<std::size_t>(n + 1)) {
    throw ParseError("'dims' needs n+1 = " + std::to_string(n + 1) + " entries");
  }
  FloerComplex c(n, N, dims);
  if (!j.contains("ops")) return c;
  const auto& ops = j["ops"];
  if (!ops.is_object()) throw ParseError("'ops' must be an object");
  for (const auto& [key, fam] : ops.items()) {
    int k = 0;
    try {
      std::size_t pos = 0;
      k = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      throw ParseError("operator key '" + key + "' is not an integer");
    }
    if (k < 0 || k > c.nu()) {
      throw ParseError("operator key " + key + " outside 0..nu = " + std::to_string(c.nu()));
    }
    if (!fam.is_array() || fam.size() != dims.size()) {
      throw ParseError("operator family " + key + " needs one matrix per degree 0..n");
    }
    for (int i = 0; i <= n; ++i) {
      const auto& m = fam[static_cast<std::size_t>(i)];
      if (!m.is_array()) throw ParseError("matrix literal must be an array of row strings");
      std::vector<std::string> rows;
      for (const auto& r : m) {
        if (!r.is_string()) throw ParseError("matrix rows must be strings");
        rows.push_back(r.get<std::string>());
      }
      if (rows.size() != c.target_dim(k, i)) {
        throw ParseError("operator " + key + " out of degree " + std::to_string(i) + " has " +
                         std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(c.target_dim(k, i)));
      }
      c.set_op(k, i, BitMatrix::from_rows(rows, dims[static_cast<std::size_t>(i)]));
    }
  }
  return c;
}

inline FloerComplex parse_complex(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return complex_from_json(j);
}

inline FloerComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str());
}

inline Json page_json(const Page& pg) {
  Json cells = Json::array();
  for (const auto& [p, q, d] : cell_dims(pg)) cells.push_back(Json::array({p, q, d}));
  return Json{{"r", pg.r()}, {"cells", std::move(cells)}};
}

// Rows q (descending), columns p (ascending); cells outside the window are
// blank.
inline std::string page_grid(const Page& pg) {
  const auto cells = cell_dims(pg);
  std::ostringstream out;
  out << "E_" << pg.r() << "\n";
  if (cells.empty()) return out.str();
  int p_lo = std::get<0>(cells.front()), p_hi = p_lo;
  int q_lo = std::get<1>(cells.front()), q_hi = q_lo;
  for (const auto& [p, q, d] : cells) {
    p_lo = std::min(p_lo, p);
    p_hi = std::max(p_hi, p);
    q_lo = std::min(q_lo, q);
    q_hi = std::max(q_hi, q);
  }
  constexpr int w = 4;
  out << std::setw(w) << "q\\p";
  for (int p = p_lo; p <= p_hi; ++p) out << std::setw(w) << p;
  out << "\n";
  for (int q = q_hi; q >= q_lo; --q) {
    out << std::setw(w) << q;
    for (int p = p_lo; p <= p_hi; ++p) {
      if (pg.contains(p, q)) {
        out << std::setw(w) << pg.dim(p, q);
      } else {
        out << std::setw(w) << ".";
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace floer::io
