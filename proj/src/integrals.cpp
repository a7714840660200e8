// Copyright 2026 The SCM Authors.
// SPDX-License-Identifier: Apache-2.0

#include "scm/integrals.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "scm/errors.hpp"

namespace scm {

IntegralSet::IntegralSet(std::size_t norb, int nelec, int ms2,
                         std::vector<Irrep> irreps, const PointGroupTable& table)
    : norb_(norb),
      nelec_(nelec),
      ms2_(ms2),
      irreps_(std::move(irreps)),
      table_(&table),
      h_(norb * norb, 0.0),
      g_(norb * norb * norb * norb, 0.0) {
  if (irreps_.size() != norb_) {
    throw ConstraintError("orbital irrep list length does not match NORB");
  }
}

void IntegralSet::set_h(std::size_t p, std::size_t q, double value) {
  h_[p * norb_ + q] = value;
  h_[q * norb_ + p] = value;
}

void IntegralSet::set_g(std::size_t p, std::size_t q, std::size_t r,
                        std::size_t s, double value) {
  const std::size_t n = norb_;
  auto put = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    g_[((a * n + b) * n + c) * n + d] = value;
  };
  put(p, q, r, s);
  put(q, p, r, s);
  put(p, q, s, r);
  put(q, p, s, r);
  put(r, s, p, q);
  put(s, r, p, q);
  put(r, s, q, p);
  put(s, r, q, p);
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("FCIDUMP line " + std::to_string(line_no) + ": " + what);
}

// Header text between "&FCI" and "&END" (or "/"), flattened to one string.
std::string read_header(std::istream& in, std::size_t& line_no) {
  std::string header;
  std::string line;
  bool started = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string upper(line);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    std::size_t pos = 0;
    if (!started) {
      pos = upper.find("&FCI");
      if (pos == std::string::npos) {
        fail(line_no, "expected &FCI header");
      }
      pos += 4;
      started = true;
    }
    const std::size_t end_amp = upper.find("&END", pos);
    const std::size_t end_slash = upper.find('/', pos);
    const std::size_t end = std::min(end_amp, end_slash);
    if (end != std::string::npos) {
      header += line.substr(pos, end - pos);
      return header;
    }
    header += line.substr(pos);
    header += ' ';
  }
  fail(line_no, "unterminated &FCI header (missing &END)");
}

// key=value[,value...] fields, comma/whitespace separated
std::optional<std::string> header_field(const std::string& header,
                                        const std::string& key) {
  std::string upper(header);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  std::size_t pos = 0;
  while ((pos = upper.find(key, pos)) != std::string::npos) {
    // match whole key followed by '='
    const bool at_start = pos == 0 || !std::isalnum(static_cast<unsigned char>(
                                          upper[pos - 1]));
    std::size_t eq = pos + key.size();
    while (eq < upper.size() && std::isspace(static_cast<unsigned char>(upper[eq]))) {
      ++eq;
    }
    if (!at_start || eq >= upper.size() || upper[eq] != '=') {
      pos += key.size();
      continue;
    }
    std::size_t start = eq + 1;
    // value runs until the next KEY= occurrence or end of header
    std::size_t stop = upper.size();
    for (std::size_t scan = start; scan < upper.size(); ++scan) {
      if (upper[scan] == '=') {
        // backtrack over the key name preceding '='
        std::size_t kstart = scan;
        while (kstart > start &&
               (std::isalnum(static_cast<unsigned char>(upper[kstart - 1])) ||
                upper[kstart - 1] == '_')) {
          --kstart;
        }
        if (kstart > start) {
          stop = kstart;
          break;
        }
      }
    }
    std::string value = header.substr(start, stop - start);
    // trim trailing separators
    while (!value.empty() &&
           (std::isspace(static_cast<unsigned char>(value.back())) ||
            value.back() == ',')) {
      value.pop_back();
    }
    while (!value.empty() &&
           (std::isspace(static_cast<unsigned char>(value.front())) ||
            value.front() == ',')) {
      value.erase(value.begin());
    }
    return value;
  }
  return std::nullopt;
}

long parse_long(const std::string& text, std::size_t line_no,
                const std::string& what) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(line_no, "malformed integer for " + what + ": '" + text + "'");
  }
  return value;
}

}  // namespace

IntegralSet parse_fcidump(std::istream& in, const PointGroupTable& table) {
  std::size_t line_no = 0;
  const std::string header = read_header(in, line_no);

  const auto norb_text = header_field(header, "NORB");
  const auto nelec_text = header_field(header, "NELEC");
  const auto ms2_text = header_field(header, "MS2");
  const auto orbsym_text = header_field(header, "ORBSYM");
  if (!norb_text) fail(line_no, "header missing NORB");
  if (!nelec_text) fail(line_no, "header missing NELEC");
  if (!ms2_text) fail(line_no, "header missing MS2");
  if (!orbsym_text) fail(line_no, "header missing ORBSYM");

  const long norb = parse_long(*norb_text, line_no, "NORB");
  const long nelec = parse_long(*nelec_text, line_no, "NELEC");
  const long ms2 = parse_long(*ms2_text, line_no, "MS2");
  if (norb < 1 || norb > 32) {
    fail(line_no, "NORB out of supported range [1, 32]");
  }

  std::vector<Irrep> irreps;
  {
    std::string piece;
    std::istringstream fields(*orbsym_text);
    while (std::getline(fields, piece, ',')) {
      std::erase_if(piece, [](unsigned char c) { return std::isspace(c); });
      if (piece.empty()) continue;
      irreps.push_back(table.from_orbsym(
          static_cast<unsigned>(parse_long(piece, line_no, "ORBSYM"))));
    }
  }
  if (irreps.size() != static_cast<std::size_t>(norb)) {
    fail(line_no, "ORBSYM lists " + std::to_string(irreps.size()) +
                      " entries, expected NORB=" + std::to_string(norb));
  }

  IntegralSet ints(static_cast<std::size_t>(norb), static_cast<int>(nelec),
                   static_cast<int>(ms2), std::move(irreps), table);

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.size() != 5) {
      fail(line_no, "expected 'value i j k l', got " +
                        std::to_string(tokens.size()) + " fields");
    }
    // Fortran double-precision exponents use D
    std::replace(tokens[0].begin(), tokens[0].end(), 'D', 'E');
    std::replace(tokens[0].begin(), tokens[0].end(), 'd', 'e');
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(tokens[0], &used);
      if (used != tokens[0].size()) throw std::invalid_argument(tokens[0]);
    } catch (const std::exception&) {
      fail(line_no, "malformed numeric literal '" + tokens[0] + "'");
    }
    const long i = parse_long(tokens[1], line_no, "index i");
    const long j = parse_long(tokens[2], line_no, "index j");
    const long k = parse_long(tokens[3], line_no, "index k");
    const long l = parse_long(tokens[4], line_no, "index l");
    auto check = [&](long idx) {
      if (idx < 0 || idx > norb) {
        fail(line_no, "orbital index " + std::to_string(idx) + " out of range");
      }
      return static_cast<std::size_t>(idx);
    };
    const std::size_t pi = check(i), qj = check(j), rk = check(k), sl = check(l);
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      ints.set_core(value);
    } else if (i != 0 && j != 0 && k == 0 && l == 0) {
      ints.set_h(pi - 1, qj - 1, value);
    } else if (i != 0 && j != 0 && k != 0 && l != 0) {
      ints.set_g(pi - 1, qj - 1, rk - 1, sl - 1, value);
    } else {
      fail(line_no, "unsupported index pattern " + std::to_string(i) + " " +
                        std::to_string(j) + " " + std::to_string(k) + " " +
                        std::to_string(l));
    }
  }
  return ints;
}

IntegralSet load_fcidump(const std::filesystem::path& path,
                         const PointGroupTable& table) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open FCIDUMP file: " + path.string());
  }
  try {
    return parse_fcidump(in, table);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace scm
