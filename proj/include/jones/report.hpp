#ifndef JONES_REPORT_HPP
#define JONES_REPORT_HPP

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "jones/scalar.hpp"

namespace jones {

/// A deviation measured exactly (rational mode) or in floating point.
using Deviation = std::variant<Rational, double>;

inline double deviation_value(const Deviation& d) {
  return std::visit([](const auto& v) -> double {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>) return to_double(v);
    else return v;
  }, d);
}

/// Exact deviations serialize as strings ("0", "1/4"), floating ones as numbers.
inline nlohmann::json deviation_json(const Deviation& d) {
  if (const auto* q = std::get_if<Rational>(&d)) return q->str();
  return std::get<double>(d);
}

inline Deviation deviation_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational(j.get<std::string>());
  return j.get<double>();
}

inline std::string deviation_text(const Deviation& d) {
  if (const auto* q = std::get_if<Rational>(&d)) return q->str();
  std::ostringstream os;
  os << std::setprecision(9) << std::get<double>(d);
  return os.str();
}

struct Check {
  std::string name;
  bool pass = false;
  std::optional<Deviation> max_dev;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(std::string name, bool pass, std::optional<Deviation> dev = std::nullopt, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(dev), std::move(detail)});
  }

  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

inline void to_json(nlohmann::json& j, const Check& c) {
  j = {{"relation", c.name}, {"pass", c.pass}};
  j["max_dev"] = c.max_dev ? deviation_json(*c.max_dev) : nlohmann::json(nullptr);
  if (!c.detail.empty()) j["detail"] = c.detail;
}

inline void from_json(const nlohmann::json& j, Check& c) {
  j.at("relation").get_to(c.name);
  j.at("pass").get_to(c.pass);
  c.max_dev.reset();
  if (!j.at("max_dev").is_null()) c.max_dev = deviation_from_json(j.at("max_dev"));
  c.detail = j.value("detail", std::string{});
}

inline void to_json(nlohmann::json& j, const Report& r) {
  j = {{"title", r.title}, {"checks", r.checks}, {"pass", r.passed()}};
}

inline void from_json(const nlohmann::json& j, Report& r) {
  j.at("title").get_to(r.title);
  j.at("checks").get_to(r.checks);
}

inline std::string render_table(const Report& r) {
  std::size_t width = 8;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  std::ostringstream os;
  if (!r.title.empty()) os << r.title << "\n";
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  max_dev\n";
  for (const auto& c : r.checks) {
    os << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << (c.pass ? "pass  " : "FAIL  ")
       << "  " << (c.max_dev ? deviation_text(*c.max_dev) : "-");
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline std::string render_csv(const Report& r) {
  std::ostringstream os;
  os << "check,pass,max_dev\n";
  for (const auto& c : r.checks) {
    os << c.name << "," << (c.pass ? "true" : "false") << ",";
    if (c.max_dev) {
      if (const auto* q = std::get_if<Rational>(&*c.max_dev)) os << q->str();
      else os << std::setprecision(17) << std::get<double>(*c.max_dev);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace jones

#endif  // JONES_REPORT_HPP
