// Instance file loading. A file declares one instance (family plus its
// parameters), named element sets, named sequence prefixes and named pools.
// Line oriented: `key = value`, `#` starts a comment. Family parameters must
// precede the first declaration. See README.md for the grammar and element
// literal forms.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "psgcr/seqprefix.hpp"

namespace psgcr {

struct LoadedInstance {
  PsgPtr instance;
  std::map<std::string, ElemSet> sets;
  std::map<std::string, SeqPrefix> seqs;
  std::map<std::string, std::vector<std::string>> pools; // member seq names

  const ElemSet& set(const std::string& name) const;       // UnknownName
  const SeqPrefix& seq(const std::string& name) const;     // UnknownName
  std::vector<SeqPrefix> pool(const std::string& name) const;
};

// errors: ParseError with the line number, InvalidPrefix naming the seq and
// the violating index set, UnknownFamily for an unrecognized family value
LoadedInstance parse_instance_text(const std::string& text,
                                   const std::string& origin = "<memory>");
LoadedInstance parse_instance_file(const std::string& path);

// element literal for one instance family, e.g. {1,2}, {1/2,3}, {1:a,3:b},
// a bare integer for table elements, or e for the adjoined identity
Element parse_element_literal(const Psg& s, const std::string& text);

} // namespace psgcr
