// Copyright 2026 The photent Authors
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

#include "photent/unitary.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <regex>

#include "photent/error.hpp"

namespace photent {

double unitarity_error(const CMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  const CMatrix gram = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
  return gram.cwiseAbs().maxCoeff();
}

Interferometer::Interferometer(CMatrix u) : u_(std::move(u)) {
  if (u_.rows() == 0 || u_.rows() != u_.cols()) {
    throw InvalidDomain("interferometer must be a non-empty square matrix");
  }
  const double err = photent::unitarity_error(u_);
  if (!(err <= kUnitarityTolerance)) {
    throw InvalidDomain("matrix is not unitary (max deviation " + std::to_string(err) + ")");
  }
}

Interferometer Interferometer::identity(int modes) {
  return Interferometer(CMatrix::Identity(modes, modes));
}

double Interferometer::unitarity_error() const { return photent::unitarity_error(u_); }

Interferometer haar_sample(int modes, std::uint64_t seed) {
  if (modes < 1) throw InvalidDomain("haar_sample needs at least one mode");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
  CMatrix z(modes, modes);
  for (int c = 0; c < modes; ++c) {
    for (int r = 0; r < modes; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (int k = 0; k < modes; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return Interferometer(std::move(q));
}

UnitaryParams UnitaryParams::zeros(int dim) {
  return UnitaryParams{dim, std::vector<double>(count(dim), 0.0)};
}

CMatrix hermitian_generator(const UnitaryParams& p) {
  const int m = p.dim;
  if (m < 1 || p.theta.size() != UnitaryParams::count(m)) {
    throw InvalidDomain("parameter vector must hold M^2 entries");
  }
  CMatrix h(m, m);
  std::size_t k = 0;
  for (int j = 0; j < m; ++j) h(j, j) = Complex(p.theta[k++], 0.0);
  for (int j = 0; j < m; ++j) {
    for (int l = j + 1; l < m; ++l) {
      const Complex v(p.theta[k], p.theta[k + 1]);
      k += 2;
      h(j, l) = v;
      h(l, j) = std::conj(v);
    }
  }
  return h;
}

UnitaryParams pack_generator(const CMatrix& h) {
  const int m = static_cast<int>(h.rows());
  UnitaryParams p = UnitaryParams::zeros(m);
  std::size_t k = 0;
  for (int j = 0; j < m; ++j) p.theta[k++] = h(j, j).real();
  for (int j = 0; j < m; ++j) {
    for (int l = j + 1; l < m; ++l) {
      p.theta[k++] = h(j, l).real();
      p.theta[k++] = h(j, l).imag();
    }
  }
  return p;
}

Interferometer realize(const UnitaryParams& p) {
  const CMatrix h = hermitian_generator(p);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const auto& vecs = eig.eigenvectors();
  const Eigen::VectorXcd phases =
      eig.eigenvalues().unaryExpr([](double x) { return std::polar(1.0, x); });
  CMatrix u = vecs * phases.asDiagonal() * vecs.adjoint();
  return Interferometer(std::move(u));
}

UnitaryParams generator_of(const Interferometer& u) {
  // A unitary is normal, so its complex Schur form is diagonal up to rounding.
  Eigen::ComplexSchur<CMatrix> schur(u.matrix());
  const CMatrix& q = schur.matrixU();
  const CMatrix& t = schur.matrixT();
  Eigen::VectorXcd angles(u.dim());
  for (int k = 0; k < u.dim(); ++k) angles(k) = Complex(std::arg(t(k, k)), 0.0);
  CMatrix h = q * angles.asDiagonal() * q.adjoint();
  h = (h + h.adjoint()) * 0.5;
  return pack_generator(h);
}

double bs2_angle() { return 0.5 * std::acos(1.0 / std::sqrt(3.0)); }

namespace {

Interferometer rotation(double theta) {
  CMatrix u(2, 2);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  u << c, s, -s, c;
  return Interferometer(std::move(u));
}

Interferometer two_blocks(const Interferometer& outer, const Interferometer& inner) {
  // outer couples modes 1 and 4, inner couples modes 2 and 3.
  CMatrix u = CMatrix::Identity(4, 4);
  const CMatrix& o = outer.matrix();
  const CMatrix& i = inner.matrix();
  u(0, 0) = o(0, 0);
  u(0, 3) = o(0, 1);
  u(3, 0) = o(1, 0);
  u(3, 3) = o(1, 1);
  u(1, 1) = i(0, 0);
  u(1, 2) = i(0, 1);
  u(2, 1) = i(1, 0);
  u(2, 2) = i(1, 1);
  return Interferometer(std::move(u));
}

}  // namespace

Interferometer fixture(FixtureId id, std::optional<double> theta) {
  const double angle = theta.value_or(bs2_angle());
  switch (id) {
    case FixtureId::BS1: {
      CMatrix u(2, 2);
      const double r = std::numbers::sqrt2 / 2.0;
      u << r, r, -r, r;
      return Interferometer(std::move(u));
    }
    case FixtureId::BS2:
      return rotation(angle);
    case FixtureId::BS2xBS2_4mode:
      return two_blocks(rotation(angle), rotation(angle));
    case FixtureId::BS2xBS1_4mode:
      return two_blocks(rotation(angle), fixture(FixtureId::BS1));
  }
  throw InvalidFixture("unknown fixture id");
}

Interferometer embed(const Interferometer& block, int modes, int first, int second) {
  if (block.dim() != 2) throw InvalidFixture("embed expects a 2x2 block");
  if (first < 0 || second < 0 || first >= modes || second >= modes || first == second) {
    throw InvalidFixture("embed mode pair out of range");
  }
  CMatrix u = CMatrix::Identity(modes, modes);
  u(first, first) = block(0, 0);
  u(first, second) = block(0, 1);
  u(second, first) = block(1, 0);
  u(second, second) = block(1, 1);
  return Interferometer(std::move(u));
}

Interferometer fixture(const std::string& name) {
  static const std::regex embed_re(R"(^embed\((\w+(?:\([^()]*\))?),(\d+),(\d+),(\d+)\)$)");
  static const std::regex bs2_re(R"(^BS2\(([-+0-9.eE]+)\)$)");
  std::smatch m;
  if (name == "BS1") return fixture(FixtureId::BS1);
  if (name == "BS2") return fixture(FixtureId::BS2);
  if (name == "BS2xBS2_4mode") return fixture(FixtureId::BS2xBS2_4mode);
  if (name == "BS2xBS1_4mode") return fixture(FixtureId::BS2xBS1_4mode);
  if (std::regex_match(name, m, bs2_re)) return fixture(FixtureId::BS2, std::stod(m[1].str()));
  if (std::regex_match(name, m, embed_re)) {
    return embed(fixture(m[1].str()), std::stoi(m[2].str()), std::stoi(m[3].str()),
                 std::stoi(m[4].str()));
  }
  throw InvalidFixture("unknown fixture: " + name);
}

nlohmann::json to_json(const Interferometer& u) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int r = 0; r < u.dim(); ++r) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (int c = 0; c < u.dim(); ++c) {
      re_row.push_back(u(r, c).real());
      im_row.push_back(u(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"dim", u.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Interferometer interferometer_from_json(const nlohmann::json& j) {
  try {
    const int m = j.at("dim").get<int>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (m < 1 || re.size() != static_cast<std::size_t>(m) || im.size() != re.size()) {
      throw InvalidDomain("interferometer JSON has inconsistent dimensions");
    }
    CMatrix u(m, m);
    for (int r = 0; r < m; ++r) {
      if (re[r].size() != static_cast<std::size_t>(m) || im[r].size() != re[r].size()) {
        throw InvalidDomain("interferometer JSON row has wrong length");
      }
      for (int c = 0; c < m; ++c) u(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
    }
    return Interferometer(std::move(u));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidDomain(std::string("malformed interferometer JSON: ") + e.what());
  }
}

}  // namespace photent
