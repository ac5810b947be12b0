#include "psgcr/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace psgcr {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(const std::string& origin, int line,
                             const std::string& what) {
  raise(Err::ParseError, origin + ":" + std::to_string(line) + ": " + what);
}

// splits "a, b, c" at top level, respecting one level of {...} or [...]
std::vector<std::string> split_list(const std::string& body) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : body) {
    if (ch == '{' || ch == '[' || ch == '(') depth++;
    if (ch == '}' || ch == ']' || ch == ')') depth--;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::string strip_brackets(const std::string& s, char open, char close,
                           const std::string& origin, int line) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != open || t.back() != close)
    parse_fail(origin, line,
               std::string("expected ") + open + "..." + close + " around '" +
                   s + "'");
  return t.substr(1, t.size() - 2);
}

long long parse_int(const std::string& s, const std::string& origin, int line) {
  try {
    size_t pos = 0;
    long long v = std::stoll(trim(s), &pos);
    if (pos != trim(s).size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    parse_fail(origin, line, "expected integer, got '" + s + "'");
  }
}

Rat parse_rat(const std::string& s, const std::string& origin, int line) {
  std::string t = trim(s);
  size_t slash = t.find('/');
  if (slash == std::string::npos) return Rat(parse_int(t, origin, line));
  return Rat(parse_int(t.substr(0, slash), origin, line),
             parse_int(t.substr(slash + 1), origin, line));
}

struct Builder {
  std::string origin;
  std::string family;
  int n = 0;
  std::string alphabet;
  std::vector<Rat> ground;
  std::vector<std::vector<int>> table;
  bool adjoin = false;
  size_t cap = kDefaultUniverseCap;
  int family_line = 0;

  PsgPtr build(int line) const {
    if (family.empty())
      parse_fail(origin, line, "declaration before family= line");
    PsgOptions opt{cap};
    PsgPtr s;
    if (family == "finset-disjoint") {
      s = Psg::finset_disjoint(n, opt);
    } else if (family == "finset-ordered") {
      s = Psg::finset_ordered(ground, opt);
    } else if (family == "located-words") {
      s = Psg::located_words(alphabet, n, opt);
    } else if (family == "cyclic") {
      s = Psg::cyclic_group(n, opt);
    } else if (family == "explicit-table") {
      s = Psg::explicit_table(table, opt);
    } else {
      raise(Err::UnknownFamily, origin + ":" + std::to_string(family_line) +
                                    ": unknown family '" + family + "'");
    }
    return adjoin ? Psg::adjoin_identity(s) : s;
  }
};

} // namespace

Element parse_element_literal(const Psg& s, const std::string& text) {
  std::string t = trim(text);
  if (t == "e") return Element::identity();
  const Psg& base =
      s.family() == Psg::Family::IdentityAdjoined ? *s.base() : s;
  switch (base.family()) {
  case Psg::Family::FinSetDisjointUnion: {
    std::string body = strip_brackets(t, '{', '}', "<literal>", 0);
    SmallSet vals;
    for (const auto& item : split_list(body))
      vals.push_back((int)parse_int(item, "<literal>", 0));
    return Element::small_set(std::move(vals));
  }
  case Psg::Family::FinSetOrderedUnion: {
    std::string body = strip_brackets(t, '{', '}', "<literal>", 0);
    RatSet vals;
    for (const auto& item : split_list(body))
      vals.push_back(parse_rat(item, "<literal>", 0));
    std::sort(vals.begin(), vals.end());
    return Element::rat_set(std::move(vals));
  }
  case Psg::Family::LocatedWords: {
    std::string body = strip_brackets(t, '{', '}', "<literal>", 0);
    Word w;
    for (const auto& item : split_list(body)) {
      size_t colon = item.find(':');
      if (colon == std::string::npos || colon + 2 != item.size())
        raise(Err::ParseError, "word entry must be position:symbol, got '" +
                                   item + "'");
      w.emplace_back((int)parse_int(item.substr(0, colon), "<literal>", 0),
                     item[colon + 1]);
    }
    std::sort(w.begin(), w.end());
    return Element::word(std::move(w));
  }
  case Psg::Family::ExplicitTable:
    return Element::atom((int)parse_int(t, "<literal>", 0));
  default:
    raise(Err::ParseError,
          "no literal form for elements of this instance family");
  }
}

const ElemSet& LoadedInstance::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) raise(Err::UnknownName, "no set named '" + name + "'");
  return it->second;
}

const SeqPrefix& LoadedInstance::seq(const std::string& name) const {
  auto it = seqs.find(name);
  if (it == seqs.end()) raise(Err::UnknownName, "no seq named '" + name + "'");
  return it->second;
}

std::vector<SeqPrefix> LoadedInstance::pool(const std::string& name) const {
  auto it = pools.find(name);
  if (it == pools.end())
    raise(Err::UnknownName, "no pool named '" + name + "'");
  std::vector<SeqPrefix> out;
  out.reserve(it->second.size());
  for (const auto& member : it->second) out.push_back(seq(member));
  return out;
}

LoadedInstance parse_instance_text(const std::string& text,
                                   const std::string& origin) {
  Builder b;
  b.origin = origin;
  LoadedInstance out;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  auto instance = [&]() -> const PsgPtr& {
    if (!out.instance) out.instance = b.build(line);
    return out.instance;
  };
  auto parse_elem = [&](const std::string& lit) -> ElemId {
    try {
      return instance()->id_of(parse_element_literal(*instance(), lit));
    } catch (const PsgError& err) {
      if (err.code() == Err::UnknownFamily) throw;
      parse_fail(origin, line, err.what());
    }
  };

  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    size_t hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;

    size_t eq = s.find('=');
    if (eq == std::string::npos)
      parse_fail(origin, line, "expected key = value");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (value.empty()) parse_fail(origin, line, "empty value");

    std::istringstream ks(key);
    std::string k0, k1, k2;
    ks >> k0 >> k1 >> k2;
    if (!k2.empty()) parse_fail(origin, line, "malformed key '" + key + "'");

    if (k1.empty()) {
      if (out.instance)
        parse_fail(origin, line,
                   "instance parameter '" + k0 + "' after declarations");
      if (k0 == "family") {
        b.family = value;
        b.family_line = line;
      } else if (k0 == "N") {
        b.n = (int)parse_int(value, origin, line);
      } else if (k0 == "alphabet") {
        b.alphabet = value;
      } else if (k0 == "ground") {
        std::string body = strip_brackets(value, '[', ']', origin, line);
        for (const auto& item : split_list(body))
          b.ground.push_back(parse_rat(item, origin, line));
      } else if (k0 == "table") {
        std::string body = strip_brackets(value, '[', ']', origin, line);
        for (const auto& row : split_list(body)) {
          std::string rbody = strip_brackets(row, '[', ']', origin, line);
          std::vector<int> cells;
          for (const auto& cell : split_list(rbody))
            cells.push_back((int)parse_int(cell, origin, line));
          b.table.push_back(std::move(cells));
        }
      } else if (k0 == "adjoin-identity") {
        if (value != "true" && value != "false")
          parse_fail(origin, line, "adjoin-identity must be true or false");
        b.adjoin = value == "true";
      } else if (k0 == "cap") {
        b.cap = (size_t)parse_int(value, origin, line);
      } else {
        parse_fail(origin, line, "unknown instance parameter '" + k0 + "'");
      }
      continue;
    }

    if (k0 == "set") {
      ElemSet elems(instance()->size());
      if (value == "all") {
        elems = instance()->universe_set();
      } else if (value.rfind("complement ", 0) == 0) {
        std::string other = trim(value.substr(11));
        auto it = out.sets.find(other);
        if (it == out.sets.end())
          parse_fail(origin, line, "complement of undeclared set '" + other + "'");
        elems = it->second.complement();
      } else {
        std::string body = strip_brackets(value, '{', '}', origin, line);
        for (const auto& item : split_list(body)) elems.set(parse_elem(item));
      }
      if (!out.sets.emplace(k1, std::move(elems)).second)
        parse_fail(origin, line, "duplicate set name '" + k1 + "'");
    } else if (k0 == "seq") {
      std::string body = strip_brackets(value, '[', ']', origin, line);
      std::vector<ElemId> vals;
      for (const auto& item : split_list(body)) vals.push_back(parse_elem(item));
      if (vals.empty()) parse_fail(origin, line, "seq needs at least one value");
      try {
        SeqPrefix f(instance(), std::move(vals));
        if (!out.seqs.emplace(k1, std::move(f)).second)
          parse_fail(origin, line, "duplicate seq name '" + k1 + "'");
      } catch (const PsgError& err) {
        if (err.code() != Err::PrefixInvalid) throw;
        raise(Err::InvalidPrefix, origin + ":" + std::to_string(line) +
                                      ": seq " + k1 + ": " + err.what());
      }
    } else if (k0 == "pool") {
      std::string body = strip_brackets(value, '[', ']', origin, line);
      std::vector<std::string> members = split_list(body);
      if (members.empty())
        parse_fail(origin, line, "pool needs at least one member");
      for (const auto& member : members) {
        if (!out.seqs.count(member))
          parse_fail(origin, line, "pool references undeclared seq '" + member + "'");
      }
      if (!out.pools.emplace(k1, std::move(members)).second)
        parse_fail(origin, line, "duplicate pool name '" + k1 + "'");
    } else {
      parse_fail(origin, line, "unknown declaration '" + k0 + "'");
    }
  }

  if (!out.instance) out.instance = b.build(line);
  return out;
}

LoadedInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Err::ParseError, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path);
}

} // namespace psgcr
