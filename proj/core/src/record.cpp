// Copyright 2026 The hfshift Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hfshift/record.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace hfshift::record {

Record& Record::add(std::string key, bool v) {
  fields.emplace_back(std::move(key), Value(v));
  return *this;
}
Record& Record::add(std::string key, std::int64_t v) {
  fields.emplace_back(std::move(key), Value(v));
  return *this;
}
Record& Record::add(std::string key, double v) {
  fields.emplace_back(std::move(key), Value(v));
  return *this;
}
Record& Record::add(std::string key, std::string v) {
  fields.emplace_back(std::move(key), Value(std::move(v)));
  return *this;
}

const Value* Record::find(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json-lines") return Format::JsonLines;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected table, json-lines or csv)");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string value_string(const Value& v) {
  switch (v.index()) {
    case 0: return std::get<bool>(v) ? "true" : "false";
    case 1: return std::to_string(std::get<std::int64_t>(v));
    case 2: return format_double(std::get<double>(v));
    default: return std::get<std::string>(v);
  }
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> keys_of(const Record& r) {
  std::vector<std::string> keys;
  keys.reserve(r.fields.size());
  for (const auto& [k, v] : r.fields) keys.push_back(k);
  return keys;
}

void write_table_group(std::ostream& os, const std::vector<const Record*>& group) {
  const auto keys = keys_of(*group.front());
  std::vector<std::size_t> width(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) width[i] = keys[i].size();
  std::vector<std::vector<std::string>> cells;
  for (const Record* r : group) {
    std::vector<std::string> row;
    for (std::size_t i = 0; i < r->fields.size(); ++i) {
      row.push_back(value_string(r->fields[i].second));
      width[i] = std::max(width[i], row.back().size());
    }
    cells.push_back(std::move(row));
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - std::min(w, s.size()), ' ');
  };
  for (std::size_t i = 0; i < keys.size(); ++i)
    os << (i ? "  " : "") << pad(keys[i], width[i]);
  os << '\n';
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "  " : "") << pad(row[i], width[i]);
    os << '\n';
  }
}

}  // namespace

std::string to_json_line(const Record& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : r.fields) {
    if (!first) out += ",";
    first = false;
    out += "\"" + json_escape(k) + "\":";
    if (v.index() == 3)
      out += "\"" + json_escape(std::get<std::string>(v)) + "\"";
    else
      out += value_string(v);
  }
  return out + "}";
}

void write_records(std::ostream& os, const std::vector<Record>& records,
                   Format format) {
  if (records.empty()) return;

  if (format == Format::JsonLines) {
    for (const auto& r : records) os << to_json_line(r) << '\n';
    return;
  }

  // Group consecutive records with identical key sets under one header.
  std::vector<std::vector<const Record*>> groups;
  for (const auto& r : records) {
    if (groups.empty() || keys_of(*groups.back().front()) != keys_of(r))
      groups.emplace_back();
    groups.back().push_back(&r);
  }

  bool first_group = true;
  for (const auto& group : groups) {
    if (!first_group) os << '\n';
    first_group = false;
    if (format == Format::Csv) {
      const auto keys = keys_of(*group.front());
      for (std::size_t i = 0; i < keys.size(); ++i)
        os << (i ? "," : "") << csv_escape(keys[i]);
      os << '\n';
      for (const Record* r : group) {
        for (std::size_t i = 0; i < r->fields.size(); ++i)
          os << (i ? "," : "") << csv_escape(value_string(r->fields[i].second));
        os << '\n';
      }
    } else {
      write_table_group(os, group);
    }
  }
}

}  // namespace hfshift::record
