#include "qsf/oracle_table.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "qsf/bessel_type.hpp"
#include "qsf/errors.hpp"
#include "qsf/jacobi_type.hpp"
#include "qsf/laguerre_type.hpp"
#include "qsf/legendre_type.hpp"
#include "qsf/sfkernel.hpp"

namespace qsf::oracle {

namespace {

using Fn = std::function<double(const std::array<double, 4>&)>;
using namespace qsf::sf;

sf::BesselKind kernel_bessel(char c) {
  switch (c) {
    case 'J': return sf::BesselKind::J;
    case 'Y': return sf::BesselKind::Y;
    case 'I': return sf::BesselKind::I;
    default: return sf::BesselKind::K;
  }
}

void add_kernel(std::map<std::string, Fn>& t) {
  t["gamma"] = [](const auto& a) { return gamma_fn(a[0]).value; };
  for (char k : std::string("JYIK")) {
    for (int order = 0; order < 2; ++order) {
      const std::string suffix = std::string(1, k) + char('0' + order);
      const BesselKind kind = kernel_bessel(k);
      t["bessel_" + suffix] = [=](const auto& a) { return bessel(kind, order, a[0]).value; };
      t["bessel_dx_" + suffix] = [=](const auto& a) { return bessel_dx(kind, order, a[0]).value; };
    }
  }
  t["kummer_m"] = [](const auto& a) { return kummer_m(a[0], a[1], a[2]).value; };
  t["kummer_m_dz"] = [](const auto& a) { return kummer_m_dz(a[0], a[1], a[2]).value; };
  t["kummer_u"] = [](const auto& a) { return kummer_u(a[0], a[1], a[2]).value; };
  t["kummer_u_dz"] = [](const auto& a) { return kummer_u_dz(a[0], a[1], a[2]).value; };
  t["whittaker_M"] = [](const auto& a) { return whittaker(WhittakerKind::M, a[0], a[1]).value; };
  t["whittaker_W"] = [](const auto& a) { return whittaker(WhittakerKind::W, a[0], a[1]).value; };
  t["whittaker_M_dz"] = [](const auto& a) { return whittaker_dx(WhittakerKind::M, a[0], a[1]).value; };
  t["whittaker_W_dz"] = [](const auto& a) { return whittaker_dx(WhittakerKind::W, a[0], a[1]).value; };
  t["hyp2f1"] = [](const auto& a) { return gauss_2f1(a[0], a[1], a[2], a[3]).value; };
  t["jp"] = [](const auto& a) { return jp(a[0], a[1], a[2], a[3]).value; };
  t["jp_dx"] = [](const auto& a) { return jp_dx(a[0], a[1], a[2], a[3]).value; };
  t["legendre_P"] = [](const auto& a) { return legendre(LegendreKind::P, a[0], a[1]).value; };
  t["legendre_Q"] = [](const auto& a) { return legendre(LegendreKind::Q, a[0], a[1]).value; };
  t["legendre_P_dx"] = [](const auto& a) { return legendre_dx(LegendreKind::P, a[0], a[1]).value; };
  t["legendre_Q_dx"] = [](const auto& a) { return legendre_dx(LegendreKind::Q, a[0], a[1]).value; };
}

void add_families(std::map<std::string, Fn>& t) {
  for (const char* name : {"J", "Y", "I", "K"}) {
    const auto kind = bessel_type::parse_kind(name);
    const std::string base = std::string("bessel_type_") + name;
    t[base] = [=](const auto& a) {
      return bessel_type::solution(kind, {a[1], a[0]}, a[2]).value;
    };
    for (int order = 1; order <= 3; ++order) {
      t[base + "_d" + std::to_string(order)] = [=](const auto& a) {
        return bessel_type::solution_derivs(kind, {a[1], a[0]}, a[2], order)[order];
      };
    }
  }
  for (int r = 1; r <= 4; ++r) {
    const std::string lag = "laguerre_type_L" + std::to_string(r);
    t[lag] = [=](const auto& a) { return laguerre_type::solution_L(r, {a[1], a[0]}, a[2]).value; };
    t[lag + "_d1"] = [=](const auto& a) {
      return laguerre_type::solution_L_derivs(r, {a[1], a[0]}, a[2], 1)[1];
    };
    const std::string leg = "legendre_type_Le" + std::to_string(r);
    t[leg] = [=](const auto& a) { return legendre_type::solution_Le(r, {a[1], a[0]}, a[2]).value; };
    t[leg + "_d1"] = [=](const auto& a) {
      return legendre_type::solution_Le_derivs(r, {a[1], a[0]}, a[2], 1)[1];
    };
    t["jacobi_type_Jcal" + std::to_string(r)] = [=](const auto& a) {
      return jacobi_type::solution_Jcal(r, {a[0], a[1], a[2]}, a[3]).value;
    };
  }
  t["jacobi_type_S1"] = [](const auto& a) {
    return jacobi_type::solution_S1(int(a[0]), a[1], a[2], a[3]).value;
  };
  t["jacobi_type_S2"] = [](const auto& a) {
    return jacobi_type::solution_S2(int(a[0]), a[1], a[2], a[3]).value;
  };
}

const std::map<std::string, Fn>& table() {
  static const std::map<std::string, Fn> t = [] {
    std::map<std::string, Fn> m;
    add_kernel(m);
    add_families(m);
    return m;
  }();
  return t;
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

std::string default_path() {
  if (const char* env = std::getenv("QSF_ORACLE_TABLE"); env != nullptr && *env != '\0') return env;
  return QSF_DEFAULT_ORACLE_TABLE;
}

std::vector<Row> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("oracle table: cannot open " + path);
  std::vector<Row> rows;
  std::string line;
  std::getline(in, line);  // header
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) {
      throw DomainError("oracle table: malformed line " + std::to_string(line_no) + " in " + path);
    }
    Row r;
    r.function = cells[0];
    for (int i = 0; i < 4; ++i) {
      r.args[i] = cells[i + 1].empty() ? std::nan("") : std::stod(cells[i + 1]);
    }
    r.value = std::stod(cells[5]);
    r.abs_err = std::stod(cells[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

bool known(const std::string& function) { return table().count(function) != 0; }

double evaluate(const Row& row) {
  const auto it = table().find(row.function);
  if (it == table().end()) throw DomainError("oracle table: unknown function " + row.function);
  return it->second(row.args);
}

double tolerance(const std::string& f) {
  const bool log_case = starts_with(f, "legendre_Q") || starts_with(f, "kummer_u") ||
                        starts_with(f, "whittaker_W") || starts_with(f, "laguerre_type_L3") ||
                        starts_with(f, "laguerre_type_L4") || starts_with(f, "legendre_type_Le3") ||
                        starts_with(f, "legendre_type_Le4");
  return log_case ? 1e-9 : 1e-10;
}

double relative_error(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

}  // namespace qsf::oracle
