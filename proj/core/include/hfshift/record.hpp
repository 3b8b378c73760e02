// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

// Flat key-value result records with machine-readable writers. Key order is
// insertion order and stable across releases; numeric output uses 17
// significant digits in every format so table, csv and json-lines carry
// identical values.
namespace hfshift::record {

using Value = std::variant<bool, std::int64_t, double, std::string>;

struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  Record& add(std::string key, bool v);
  Record& add(std::string key, std::int64_t v);
  Record& add(std::string key, int v) { return add(std::move(key), std::int64_t{v}); }
  Record& add(std::string key, double v);
  Record& add(std::string key, std::string v);
  Record& add(std::string key, const char* v) { return add(std::move(key), std::string(v)); }

  const Value* find(const std::string& key) const;
};

enum class Format { Table, JsonLines, Csv };

/// Parses "table", "json-lines" or "csv"; throws std::invalid_argument.
Format parse_format(const std::string& name);

/// %.17g rendering used by every writer.
std::string format_double(double v);

std::string value_string(const Value& v);

std::string to_json_line(const Record& r);

/// Writes a stream of records. Table and csv emit a header per run of
/// records sharing a key set; json-lines emits one object per record.
void write_records(std::ostream& os, const std::vector<Record>& records,
                   Format format);

}  // namespace hfshift::record
