#pragma once

/// Memo of computed polynomials keyed by a hash of the diagram encoding.
/// On disk: one record per line, "<16 hex digit hash>\t<kind> <terms>",
/// where kind is V (Jones, terms "twice_exponent:coeff") or N (Conway,
/// terms "power:coeff"). Saving writes a temporary file and renames it.

#include "ohtsuki/laurent.hpp"
#include "ohtsuki/poly_z.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

namespace ohtsuki {

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hash_key(const std::string& kind, const std::string& encoding) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(kind + "|" + encoding);
  return os.str();
}

class InvariantCache {
 public:
  InvariantCache() = default;
  explicit InvariantCache(std::filesystem::path file) : file_(std::move(file)) { load(); }

  std::optional<HalfLaurent> jones(const std::string& encoding) const {
    std::lock_guard lock(mu_);
    auto it = jones_.find(hash_key("V", encoding));
    if (it == jones_.end()) return std::nullopt;
    ++hits_;
    return it->second;
  }
  void put_jones(const std::string& encoding, const HalfLaurent& v) {
    std::lock_guard lock(mu_);
    jones_[hash_key("V", encoding)] = v;
    dirty_ = true;
  }
  std::optional<PolyZ> conway(const std::string& encoding) const {
    std::lock_guard lock(mu_);
    auto it = conway_.find(hash_key("N", encoding));
    if (it == conway_.end()) return std::nullopt;
    ++hits_;
    return it->second;
  }
  void put_conway(const std::string& encoding, const PolyZ& v) {
    std::lock_guard lock(mu_);
    conway_[hash_key("N", encoding)] = v;
    dirty_ = true;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return jones_.size() + conway_.size();
  }
  std::size_t hits() const {
    std::lock_guard lock(mu_);
    return hits_;
  }

  /// Writes all records if anything changed since the last load/save.
  void save() const {
    std::lock_guard lock(mu_);
    if (file_.empty() || !dirty_) return;
    if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path());
    auto tmp = file_;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
      for (const auto& [h, v] : jones_) {
        out << h << "\tV";
        for (const auto& [e, c] : v.terms()) out << ' ' << e << ':' << c;
        out << '\n';
      }
      for (const auto& [h, v] : conway_) {
        out << h << "\tN";
        for (std::size_t k = 0; k < v.coeffs().size(); ++k)
          if (v.coeffs()[k] != 0) out << ' ' << k << ':' << v.coeffs()[k];
        out << '\n';
      }
    }
    std::filesystem::rename(tmp, file_);
    dirty_ = false;
  }

  const std::filesystem::path& file() const { return file_; }

 private:
  void load() {
    std::ifstream in(file_);
    if (!in) return;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos || tab + 1 >= line.size())
        throw std::runtime_error("corrupt cache record at line " + std::to_string(lineno));
      std::string hash = line.substr(0, tab);
      std::istringstream rest(line.substr(tab + 1));
      std::string kind, term;
      rest >> kind;
      std::map<int, BigInt> terms;
      while (rest >> term) {
        auto colon = term.find(':');
        if (colon == std::string::npos)
          throw std::runtime_error("corrupt cache record at line " + std::to_string(lineno));
        terms[std::stoi(term.substr(0, colon))] = BigInt(term.substr(colon + 1));
      }
      if (kind == "V") {
        HalfLaurent p;
        for (const auto& [e, c] : terms) p.add_term(e, c);
        jones_[hash] = p;
      } else if (kind == "N") {
        std::vector<BigInt> coeffs;
        for (const auto& [k, c] : terms) {
          if (k < 0) throw std::runtime_error("corrupt cache record at line " + std::to_string(lineno));
          if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1);
          coeffs[k] = c;
        }
        conway_[hash] = PolyZ(coeffs);
      } else {
        throw std::runtime_error("unknown cache record kind at line " + std::to_string(lineno));
      }
    }
  }

  std::filesystem::path file_;
  mutable std::mutex mu_;
  std::map<std::string, HalfLaurent> jones_;
  std::map<std::string, PolyZ> conway_;
  mutable bool dirty_ = false;
  mutable std::size_t hits_ = 0;
};

}  // namespace ohtsuki
