#pragma once

#include <charconv>
#include <type_traits>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twoclosure/closure.hpp"

namespace twoclosure {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t')
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long parse_count(std::string_view tok, std::size_t line) {
  long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v < 0)
    throw InputError("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  return v;
}

} // namespace detail

/// Generators exactly as listed in a group file.
struct GroupText {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// `degree <n>` first, then one generator per line as n 0-based images.
/// `#` starts a comment line; blank lines are skipped.
inline GroupText parse_group_text(std::string_view text) {
  GroupText g;
  bool have_degree = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    auto line = detail::trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (line.empty() || line.front() == '#')
      continue;
    auto toks = detail::split_ws(line);
    if (!have_degree) {
      if (toks.size() != 2 || toks[0] != "degree")
        throw InputError("line " + std::to_string(lineno) + ": expected 'degree <n>'");
      g.degree = static_cast<std::size_t>(detail::parse_count(toks[1], lineno));
      have_degree = true;
      continue;
    }
    if (toks.size() != g.degree)
      throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(g.degree) +
                       " images, got " + std::to_string(toks.size()));
    std::vector<Point> img;
    img.reserve(toks.size());
    for (auto t : toks) {
      auto v = detail::parse_count(t, lineno);
      if (static_cast<std::size_t>(v) >= g.degree)
        throw InputError("line " + std::to_string(lineno) + ": image " + std::to_string(v) +
                         " out of range");
      img.push_back(static_cast<Point>(v));
    }
    try {
      g.generators.emplace_back(std::move(img));
    } catch (const InputError &e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_degree)
    throw InputError("missing 'degree <n>' line");
  return g;
}

inline PermGroup parse_group(std::string_view text) {
  auto g = parse_group_text(text);
  return PermGroup(g.degree, std::move(g.generators));
}

inline std::string format_generators(std::size_t degree, const std::vector<Permutation> &gens) {
  std::string s = "degree " + std::to_string(degree) + "\n";
  for (const auto &g : gens) {
    for (std::size_t a = 0; a < degree; ++a) {
      if (a)
        s += ' ';
      s += std::to_string(g[static_cast<Point>(a)]);
    }
    s += '\n';
  }
  return s;
}

inline std::string format_group(const PermGroup &G) { return format_generators(G.degree(), G.generators()); }

/// `{a,b,c}` classes separated by spaces, in any order; every point once.
inline EquivRelation parse_partition(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> classes;
  std::vector<char> seen(degree, 0);
  std::size_t i = 0;
  auto fail = [&](const std::string &why) { throw InputError("partition: " + why); };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c != '{')
      fail("expected '{'");
    auto close = text.find('}', i);
    if (close == std::string_view::npos)
      fail("missing '}'");
    std::vector<Point> cls;
    std::string_view body = text.substr(i + 1, close - i - 1);
    std::size_t k = 0;
    while (k <= body.size()) {
      auto comma = body.find(',', k);
      if (comma == std::string_view::npos)
        comma = body.size();
      auto tok = detail::trim(body.substr(k, comma - k));
      long v = detail::parse_count(tok, 1);
      if (static_cast<std::size_t>(v) >= degree)
        fail("point " + std::to_string(v) + " out of range");
      if (seen[v]++)
        fail("point " + std::to_string(v) + " listed twice");
      cls.push_back(static_cast<Point>(v));
      k = comma + 1;
    }
    classes.push_back(std::move(cls));
    i = close + 1;
  }
  for (std::size_t a = 0; a < degree; ++a)
    if (!seen[a])
      fail("point " + std::to_string(a) + " missing");
  return EquivRelation::from_classes(degree, classes);
}

/// Flat `key=value` lines in insertion order.
class Report {
public:
  template <class T> void add(std::string key, const T &value) {
    std::ostringstream os;
    if constexpr (std::is_same_v<T, bool>)
      os << (value ? "true" : "false");
    else
      os << value;
    lines_.emplace_back(std::move(key), os.str());
  }

  const std::vector<std::pair<std::string, std::string>> &lines() const { return lines_; }

  std::string str() const {
    std::string s;
    for (const auto &[k, v] : lines_)
      s += k + "=" + v + "\n";
    return s;
  }

private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

inline std::string join_sizes(const std::vector<std::size_t> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline void add_flag(Report &rep, const std::string &prefix, const Flag &F) {
  rep.add(prefix + ".length", F.length());
  for (std::size_t i = 0; i < F.members.size(); ++i)
    rep.add(prefix + ".e" + std::to_string(i), F.members[i].to_string());
}

inline Report closure_report(const ClosureReport &r) {
  Report rep;
  rep.add("input.degree", r.input.degree());
  rep.add("input.order", r.input.order());
  add_flag(rep, "flag", r.flag);
  rep.add("relative_closure.order", r.relative_closure.order());
  rep.add("majorant.order", r.majorant.order());
  add_flag(rep, "extended_flag", r.extended_flag);
  rep.add("sections.count", r.sections.size());
  for (std::size_t k = 0; k < r.sections.size(); ++k) {
    const auto &s = r.sections[k];
    const std::string p = "section." + std::to_string(k);
    rep.add(p + ".index", s.index);
    rep.add(p + ".orbit_sizes", join_sizes(s.orbit_sizes));
    rep.add(p + ".plain", s.plain);
    rep.add(p + ".feasible", s.feasible);
    rep.add(p + ".xbar", s.xbar);
    rep.add(p + ".certificate", s.certificate);
    rep.add(p + ".empty_reason", to_string(s.empty_reason));
  }
  rep.add("output.order", r.output.order());
  rep.add("output.generators", r.output.generators().size());
  rep.add("verification.two_equivalent", r.verification.two_equivalent);
  rep.add("verification.contains_input", r.verification.contains_input);
  rep.add("verification.factor_check", r.verification.factor_check);
  rep.add("verification.factor_check_method", "order (p!/2 for prime p identifies Alt(p))");
  rep.add("verification.oracle_check",
          r.verification.oracle_check ? (*r.verification.oracle_check ? "true" : "false") : "skipped");
  return rep;
}

} // namespace twoclosure
