// Copyright 2026 The SCM Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scm {

class PointGroupTable;

/// Irreducible representation of an abelian point group. The code is the
/// XOR-composable label: for D2h and its subgroups the standard FCIDUMP
/// ordering (Ag=1, B1g=2, B2g=3, B3g=4, Au=5, B1u=6, B2u=7, B3u=8) stored
/// as (index - 1), so products reduce to bitwise XOR of codes.
struct Irrep {
  std::uint8_t code = 0;
  const PointGroupTable* table = nullptr;

  std::string_view name() const;
  bool operator==(const Irrep&) const = default;
};

/// Character-table skeleton for an abelian group: ordered irrep labels,
/// identity at code 0.
class PointGroupTable {
 public:
  static const PointGroupTable& d2h();
  static const PointGroupTable& c2v();
  static const PointGroupTable& c2h();
  static const PointGroupTable& d2();
  static const PointGroupTable& cs();
  static const PointGroupTable& c2();
  static const PointGroupTable& ci();
  static const PointGroupTable& c1();
  /// Lookup by group name ("d2h", "c2v", ...), case-insensitive.
  static const PointGroupTable& named(std::string_view group);

  std::string_view group_name() const { return group_; }
  std::size_t size() const { return names_.size(); }
  Irrep identity() const { return {0, this}; }
  Irrep from_code(unsigned code) const;
  /// 1-based FCIDUMP ORBSYM value.
  Irrep from_orbsym(unsigned orbsym) const;
  std::string_view name_of(std::uint8_t code) const { return names_[code]; }
  /// All irreps in table order.
  std::vector<Irrep> irreps() const;

  PointGroupTable(std::string group, std::vector<std::string> names)
      : group_(std::move(group)), names_(std::move(names)) {}

 private:
  std::string group_;
  std::vector<std::string> names_;
};

/// Group product of two irreps (bitwise XOR of codes). Throws
/// ConstraintError when the irreps come from different tables.
Irrep irrep_product(Irrep a, Irrep b);

/// Case-insensitive label lookup; throws ParseError listing valid labels.
Irrep irrep_from_label(std::string_view name, const PointGroupTable& table);

}  // namespace scm
