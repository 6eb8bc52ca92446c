#include "sixj/harness.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <type_traits>

#include <json.hpp>

namespace sixj {

namespace {

void check_ascending(const std::vector<std::int64_t>& k_list) {
  for (std::size_t i = 0; i < k_list.size(); ++i) {
    if (k_list[i] <= 0) throw Error(ErrorKind::Domain, "k values must be positive");
    if (i > 0 && k_list[i] <= k_list[i - 1]) throw Error(ErrorKind::Domain, "k values must be strictly ascending");
  }
}

void check_kind(const SpinSextuple& s, ScanKind kind) {
  check_admissible(s, kind == ScanKind::su2 ? Algebra::su2 : Algebra::osp12);
}

ScanError wrap(const Error& e, std::int64_t k) { return ScanError(e.kind(), k, e.what()); }

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <class T>
T parse_number(const std::string& field) {
  T value{};
  const char* first = field.data();
  const char* last = first + field.size();
  if constexpr (std::is_floating_point_v<T>) {
    if (field == "inf") return std::numeric_limits<T>::infinity();
    if (field == "-inf") return -std::numeric_limits<T>::infinity();
    if (field == "nan") return std::numeric_limits<T>::quiet_NaN();
  }
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) throw Error(ErrorKind::Parse, "bad number '" + field + "'");
  return value;
}

std::optional<Parity> parity_from(const std::string& text) {
  if (text == "su2") return std::nullopt;
  if (text == "alpha") return Parity::alpha;
  if (text == "beta") return Parity::beta;
  if (text == "gamma") return Parity::gamma;
  throw Error(ErrorKind::Parse, "unknown parity '" + text + "'");
}

std::string parity_text(const std::optional<Parity>& p) {
  return p ? std::string(to_string(*p)) : std::string("su2");
}

}  // namespace

ScanRecord scan_point(const SpinSextuple& s, ScanKind kind, std::int64_t k, const TetGeometry& geo) {
  const SpinSextuple scaled = s.scaled(k);
  ScanRecord rec;
  rec.k = k;
  AsymptoticResult a;
  if (kind == ScanKind::su2) {
    rec.exact = exact_to_scaled(sixj_standard_exact(scaled));
    a = asym_standard(s, k, geo);
  } else {
    const SuperEvaluation ev = sixj_super_evaluate(scaled);
    rec.parity = ev.parity;
    rec.exact = exact_to_scaled(ev.value);
    a = asym_super(s, k, geo);
  }
  rec.asym = a.value;
  rec.amplitude = a.amplitude;
  rec.angle = a.angle;
  rec.abs_err = std::abs(rec.exact.to_double() - rec.asym);
  return rec;
}

std::vector<ScanRecord> scan_serial(const SpinSextuple& s, ScanKind kind, const std::vector<std::int64_t>& k_list) {
  check_ascending(k_list);
  std::vector<ScanRecord> out;
  if (k_list.empty()) return out;
  check_kind(s, kind);
  const TetGeometry geo = tet_from_spins(s);
  out.reserve(k_list.size());
  for (std::int64_t k : k_list) {
    try {
      out.push_back(scan_point(s, kind, k, geo));
    } catch (const Error& e) {
      throw wrap(e, k);
    }
  }
  return out;
}

std::vector<ScanRecord> scan(const SpinSextuple& s, ScanKind kind, const std::vector<std::int64_t>& k_list) {
  check_ascending(k_list);
  std::vector<ScanRecord> out(k_list.size());
  if (k_list.empty()) return out;
  check_kind(s, kind);
  const TetGeometry geo = tet_from_spins(s);

  const auto n = static_cast<std::int64_t>(k_list.size());
  std::vector<std::exception_ptr> failures(k_list.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = n - 1; i >= 0; --i) {
    try {
      out[i] = scan_point(s, kind, k_list[i], geo);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const Error& e) {
      throw wrap(e, k_list[i]);
    }
  }
  return out;
}

std::vector<std::int64_t> k_range(std::int64_t from, std::int64_t to, std::int64_t step) {
  if (step <= 0) throw Error(ErrorKind::Domain, "k step must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t k = from; k <= to; k += step) out.push_back(k);
  return out;
}

std::vector<std::size_t> envelope_maxima(const std::vector<ScanRecord>& records) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i + 1 < records.size(); ++i) {
    const double here = records[i].exact.log_abs();
    if (here > records[i - 1].exact.log_abs() && here > records[i + 1].exact.log_abs()) idx.push_back(i);
  }
  return idx;
}

SlopeFit envelope_slope(const std::vector<ScanRecord>& records) {
  const auto idx = envelope_maxima(records);
  if (idx.size() < 3) {
    throw Error(ErrorKind::InsufficientExtrema, std::to_string(idx.size()) + " local maxima, need at least 3");
  }
  const double n = static_cast<double>(idx.size());
  double sx = 0, sy = 0;
  for (auto i : idx) {
    sx += std::log(static_cast<double>(records[i].k));
    sy += records[i].exact.log_abs();
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (auto i : idx) {
    const double dx = std::log(static_cast<double>(records[i].k)) - mx;
    const double dy = records[i].exact.log_abs() - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  SlopeFit fit;
  fit.n_points = static_cast<std::int64_t>(idx.size());
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

void write_csv(std::ostream& os, const std::vector<ScanRecord>& records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.k << ',' << parity_text(r.parity) << ',' << shortest(r.exact.mantissa()) << ',' << r.exact.exp2() << ','
       << shortest(r.exact.to_double()) << ',' << shortest(r.asym) << ',' << shortest(r.abs_err) << ','
       << shortest(r.amplitude) << ',' << shortest(r.angle) << '\n';
  }
}

std::vector<ScanRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw Error(ErrorKind::Parse, "missing or unexpected CSV header");
  std::vector<ScanRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 9) throw Error(ErrorKind::Parse, "expected 9 CSV fields in '" + line + "'");
    ScanRecord r;
    r.k = parse_number<std::int64_t>(f[0]);
    r.parity = parity_from(f[1]);
    r.exact = ScaledFloat::from_parts(parse_number<double>(f[2]), parse_number<std::int64_t>(f[3]));
    r.asym = parse_number<double>(f[5]);
    r.abs_err = parse_number<double>(f[6]);
    r.amplitude = parse_number<double>(f[7]);
    r.angle = parse_number<double>(f[8]);
    out.push_back(r);
  }
  return out;
}

void write_json(std::ostream& os, const std::vector<ScanRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    const double exact_float = r.exact.to_double();
    arr.push_back({{"k", r.k},
                   {"parity", parity_text(r.parity)},
                   {"exact_mantissa", r.exact.mantissa()},
                   {"exact_exp2", r.exact.exp2()},
                   {"exact_float", std::isfinite(exact_float) ? nlohmann::json(exact_float) : nlohmann::json(shortest(exact_float))},
                   {"asym", r.asym},
                   {"abs_err", std::isfinite(r.abs_err) ? nlohmann::json(r.abs_err) : nlohmann::json(shortest(r.abs_err))},
                   {"amplitude", r.amplitude},
                   {"angle", r.angle}});
  }
  os << arr.dump(2) << '\n';
}

std::vector<ScanRecord> read_json(std::istream& is) {
  nlohmann::json arr;
  try {
    is >> arr;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  auto number = [](const nlohmann::json& v) {
    return v.is_string() ? parse_number<double>(v.get<std::string>()) : v.get<double>();
  };
  std::vector<ScanRecord> out;
  for (const auto& j : arr) {
    ScanRecord r;
    r.k = j.at("k").get<std::int64_t>();
    r.parity = parity_from(j.at("parity").get<std::string>());
    r.exact = ScaledFloat::from_parts(j.at("exact_mantissa").get<double>(), j.at("exact_exp2").get<std::int64_t>());
    r.asym = j.at("asym").get<double>();
    r.abs_err = number(j.at("abs_err"));
    r.amplitude = j.at("amplitude").get<double>();
    r.angle = j.at("angle").get<double>();
    out.push_back(r);
  }
  return out;
}

}  // namespace sixj
