// Report emission. Every computation result goes through a Record: an
// ordered list of key=value pairs that always names the bounds in force.
// Machine mode prints one record per line with space-separated pairs and no
// spaces inside values, so output is byte-comparable across runs. Human mode
// prints the same pairs as an aligned block.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "psgcr/jcr.hpp"

namespace psgcr {

struct Record {
  std::vector<std::pair<std::string, std::string>> kv;

  Record& add(const std::string& key, const std::string& value);
  Record& add(const std::string& key, const char* value);
  Record& add(const std::string& key, long long value);
  Record& add(const std::string& key, int value);
  Record& add(const std::string& key, size_t value);
  Record& add(const std::string& key, bool value);

  std::string machine_line() const;
};

// spaces and newlines inside a machine value would break the one-line
// key=value contract; they are replaced by underscores
std::string machine_value(const std::string& raw);

// comma-joined renderings with no spaces
std::string join_elems(const Psg& s, const std::vector<ElemId>& ids);
std::string join_ints_compact(const std::vector<int>& v);
std::string join_sizes(const std::vector<size_t>& v);

// witness fields m, a, t plus the family-count context
void add_witness_fields(Record& rec, const Psg& s, const Witness& w);

class Reporter {
public:
  Reporter(std::ostream& out, bool machine) : out_(&out), machine_(machine) {}

  bool machine() const { return machine_; }
  void emit(const Record& rec);
  // human-mode section header; silent in machine mode
  void section(const std::string& title);

private:
  std::ostream* out_;
  bool machine_ = false;
};

} // namespace psgcr
