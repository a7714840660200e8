// Copyright 2026 The SCM Authors.
// SPDX-License-Identifier: Apache-2.0

#include "scm/pointgroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "scm/errors.hpp"

namespace scm {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view Irrep::name() const { return table->name_of(code); }

const PointGroupTable& PointGroupTable::d2h() {
  static const PointGroupTable t("d2h", {"Ag", "B1g", "B2g", "B3g",
                                         "Au", "B1u", "B2u", "B3u"});
  return t;
}

const PointGroupTable& PointGroupTable::c2v() {
  static const PointGroupTable t("c2v", {"A1", "A2", "B1", "B2"});
  return t;
}

const PointGroupTable& PointGroupTable::c2h() {
  static const PointGroupTable t("c2h", {"Ag", "Bg", "Au", "Bu"});
  return t;
}

const PointGroupTable& PointGroupTable::d2() {
  static const PointGroupTable t("d2", {"A", "B1", "B2", "B3"});
  return t;
}

const PointGroupTable& PointGroupTable::cs() {
  static const PointGroupTable t("cs", {"A'", "A''"});
  return t;
}

const PointGroupTable& PointGroupTable::c2() {
  static const PointGroupTable t("c2", {"A", "B"});
  return t;
}

const PointGroupTable& PointGroupTable::ci() {
  static const PointGroupTable t("ci", {"Ag", "Au"});
  return t;
}

const PointGroupTable& PointGroupTable::c1() {
  static const PointGroupTable t("c1", {"A"});
  return t;
}

const PointGroupTable& PointGroupTable::named(std::string_view group) {
  const std::string g = lower(group);
  if (g == "d2h") return d2h();
  if (g == "c2v") return c2v();
  if (g == "c2h") return c2h();
  if (g == "d2") return d2();
  if (g == "cs") return cs();
  if (g == "c2") return c2();
  if (g == "ci") return ci();
  if (g == "c1") return c1();
  throw ParseError("unknown point group '" + std::string(group) +
                   "' (supported: d2h, c2v, c2h, d2, cs, c2, ci, c1)");
}

Irrep PointGroupTable::from_code(unsigned code) const {
  if (code >= names_.size()) {
    throw ConstraintError("irrep code " + std::to_string(code) +
                          " out of range for group " + group_);
  }
  return {static_cast<std::uint8_t>(code), this};
}

Irrep PointGroupTable::from_orbsym(unsigned orbsym) const {
  if (orbsym < 1 || orbsym > names_.size()) {
    throw ParseError("ORBSYM value " + std::to_string(orbsym) +
                     " out of range for group " + group_);
  }
  return {static_cast<std::uint8_t>(orbsym - 1), this};
}

std::vector<Irrep> PointGroupTable::irreps() const {
  std::vector<Irrep> out;
  out.reserve(names_.size());
  for (std::size_t c = 0; c < names_.size(); ++c) {
    out.push_back({static_cast<std::uint8_t>(c), this});
  }
  return out;
}

Irrep irrep_product(Irrep a, Irrep b) {
  if (a.table != b.table) {
    throw ConstraintError("irrep product across different group tables");
  }
  return {static_cast<std::uint8_t>(a.code ^ b.code), a.table};
}

Irrep irrep_from_label(std::string_view name, const PointGroupTable& table) {
  const std::string target = lower(name);
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (lower(table.name_of(static_cast<std::uint8_t>(c))) == target) {
      return table.from_code(static_cast<unsigned>(c));
    }
  }
  std::ostringstream msg;
  msg << "unknown irrep label '" << name << "' for group "
      << table.group_name() << "; valid labels:";
  for (std::size_t c = 0; c < table.size(); ++c) {
    msg << ' ' << table.name_of(static_cast<std::uint8_t>(c));
  }
  throw ParseError(msg.str());
}

}  // namespace scm
