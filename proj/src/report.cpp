#include "psgcr/report.hpp"

#include <algorithm>

namespace psgcr {

std::string machine_value(const std::string& raw) {
  std::string out = raw;
  for (char& ch : out)
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') ch = '_';
  if (out.empty()) out = "-";
  return out;
}

Record& Record::add(const std::string& key, const std::string& value) {
  kv.emplace_back(key, machine_value(value));
  return *this;
}
Record& Record::add(const std::string& key, const char* value) {
  return add(key, std::string(value));
}
Record& Record::add(const std::string& key, long long value) {
  return add(key, std::to_string(value));
}
Record& Record::add(const std::string& key, int value) {
  return add(key, std::to_string(value));
}
Record& Record::add(const std::string& key, size_t value) {
  return add(key, std::to_string(value));
}
Record& Record::add(const std::string& key, bool value) {
  return add(key, std::string(value ? "true" : "false"));
}

std::string Record::machine_line() const {
  std::string out;
  for (size_t i = 0; i < kv.size(); ++i) {
    if (i) out += " ";
    out += kv[i].first;
    out += "=";
    out += kv[i].second;
  }
  return out;
}

std::string join_elems(const Psg& s, const std::vector<ElemId>& ids) {
  std::string out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += s.element(ids[i]).str();
  }
  return out.empty() ? "-" : out;
}

std::string join_ints_compact(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out.empty() ? "-" : out;
}

std::string join_sizes(const std::vector<size_t>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out.empty() ? "-" : out;
}

void add_witness_fields(Record& rec, const Psg& s, const Witness& w) {
  rec.add("m", w.m);
  rec.add("a", join_elems(s, w.a));
  rec.add("t", join_ints_compact(w.t));
}

void Reporter::emit(const Record& rec) {
  if (machine_) {
    *out_ << rec.machine_line() << "\n";
    return;
  }
  size_t width = 0;
  for (const auto& [k, v] : rec.kv) width = std::max(width, k.size());
  for (const auto& [k, v] : rec.kv) {
    *out_ << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }
  *out_ << "\n";
}

void Reporter::section(const std::string& title) {
  if (!machine_) *out_ << title << "\n";
}

} // namespace psgcr
