// Copyright 2026 The delaynet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DELAYNET_IO_HPP_
#define DELAYNET_IO_HPP_

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "delaynet/errors.hpp"
#include "delaynet/matrix.hpp"
#include "delaynet/netgen.hpp"

namespace delaynet::io {

using nlohmann::json;

// Matrix interchange document: {"n": <int>, "w": [[row-major reals]]}.

inline json matrix_to_json(const SignedMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.rows()}, {"w", std::move(rows)}};
}

inline SignedMatrix matrix_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("w")) {
    throw ValidationError("matrix document must carry fields \"n\" and \"w\"");
  }
  const auto n = doc.at("n").get<long long>();
  const auto& w = doc.at("w");
  if (n < 1 || !w.is_array() || w.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("matrix document: \"w\" must hold n rows");
  }
  SignedMatrix m(n, n);
  for (long long i = 0; i < n; ++i) {
    const auto& row = w.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw ValidationError("matrix document: row length mismatch");
    }
    for (long long j = 0; j < n; ++j) {
      const auto& cell = row.at(static_cast<std::size_t>(j));
      if (!cell.is_number()) throw ValidationError("matrix document: non-numeric entry");
      m(i, j) = cell.get<double>();
    }
  }
  require_signed_matrix(m);
  return m;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << text;
}

inline SignedMatrix read_matrix(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
  return matrix_from_json(doc);
}

inline void write_matrix(const std::string& path, const SignedMatrix& m) {
  write_file(path, matrix_to_json(m).dump(2) + "\n");
}

// Mixture spec document: {"n", "p", "sigma", "mode", "proportions", "seed"}.

inline json spec_to_json(const MixtureSpec& spec) {
  json doc{{"n", spec.n},
           {"p", spec.p_connect},
           {"sigma", spec.sigma},
           {"mode", spec.kind == MixtureKind::kRandom ? "random" : "complex"},
           {"seed", spec.seed}};
  if (spec.kind == MixtureKind::kComplex) {
    doc["proportions"] = spec.proportions;
  }
  return doc;
}

inline MixtureSpec spec_from_json(const json& doc) {
  MixtureSpec spec;
  try {
    spec.n = doc.at("n").get<int>();
    spec.p_connect = doc.at("p").get<double>();
    spec.sigma = doc.value("sigma", 1.0);
    spec.seed = doc.value("seed", 0ULL);
    const std::string mode = doc.value("mode", "random");
    if (mode == "random") {
      spec.kind = MixtureKind::kRandom;
    } else if (mode == "complex") {
      spec.kind = MixtureKind::kComplex;
      const auto& q = doc.at("proportions");
      if (!q.is_array() || q.size() != 5) {
        throw ValidationError("spec document: \"proportions\" must hold 5 values");
      }
      for (int k = 0; k < 5; ++k) spec.proportions[k] = q.at(k).get<double>();
    } else {
      throw ValidationError("spec document: mode must be \"random\" or \"complex\"");
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid spec document: ") + e.what());
  }
  spec.validate();
  return spec;
}

inline MixtureSpec read_spec(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
  return spec_from_json(doc);
}

// CSV output with fixed 17-significant-digit decimals, so a re-parse
// reproduces every double bit for bit.

inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) {
    for (std::size_t k = 0; k < header.size(); ++k) {
      if (k) out_ += ',';
      out_ += header[k];
    }
    out_ += '\n';
  }

  void row(const std::vector<double>& values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k) out_ += ',';
      out_ += format_g17(values[k]);
    }
    out_ += '\n';
  }

  const std::string& text() const { return out_; }
  void save(const std::string& path) const { write_file(path, out_); }

 private:
  std::string out_;
};

}  // namespace delaynet::io

#endif  // DELAYNET_IO_HPP_
