// twoclosure: command-line front end. See README.md for verbs and exit codes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twoclosure.hpp"

using namespace twoclosure;

namespace {

enum Exit : int {
  ok = 0,
  usage = 1,
  parse_error = 2,
  precondition = 3,
  internal = 4,
  oracle_mismatch = 5,
  io_error = 6,
  not_equivalent = 7,
};

struct Failure {
  int code;
  std::string kind;
  std::string reason;
};

std::string one_line(std::string s) {
  for (auto &c : s)
    if (c == '\n' || c == '\r')
      c = ' ';
  return s;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Failure{io_error, "io-error", "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw Failure{io_error, "io-error", "cannot write " + path};
}

PermGroup load(const std::string &path) { return parse_group(read_file(path)); }

void print_flag(const Flag &F) {
  for (std::size_t i = 0; i < F.members.size(); ++i)
    std::cout << "e" << i << " " << F.members[i].to_string() << "\n";
}

int cmd_closure(const std::string &path, const std::string &report, bool assert_oracle) {
  auto G = load(path);
  if (assert_oracle && G.degree() > 10)
    throw PreconditionError("--assert-oracle needs degree <= 10, got " + std::to_string(G.degree()));
  auto r = two_closure(G, {.oracle = assert_oracle});
  if (!report.empty())
    write_file(report, closure_report(r).str());
  if (assert_oracle && !*r.verification.oracle_check)
    throw Failure{oracle_mismatch, "oracle-mismatch",
                  "pipeline order " + r.output.order().str() + " differs from the oracle"};
  std::cout << format_group(r.output);
  return ok;
}

int cmd_oracle(const std::string &path) {
  std::cout << format_group(brute_force_closure(load(path)));
  return ok;
}

int cmd_two_orbits(const std::string &path) {
  auto G = load(path);
  auto col = two_orbits(G);
  const std::size_t n = G.degree();
  std::vector<std::size_t> size(col.num_colors(), 0);
  std::vector<std::pair<Point, Point>> rep(col.num_colors(), {-1, -1});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int c = col(static_cast<Point>(a), static_cast<Point>(b));
      if (size[c]++ == 0)
        rep[c] = {static_cast<Point>(a), static_cast<Point>(b)};
    }
  std::cout << "colors " << col.num_colors() << "\n";
  for (int c = 0; c < col.num_colors(); ++c)
    std::cout << c << " size " << size[c] << " first (" << rep[c].first << "," << rep[c].second
              << ")\n";
  return ok;
}

int cmd_flag(const std::string &path) {
  auto G = load(path);
  auto F = maximal_normal_flag(G);
  std::cout << "length " << F.length() << "\n";
  print_flag(F);
  return ok;
}

int cmd_sections(const std::string &path) {
  auto G = load(path);
  auto F = maximal_normal_flag(G);
  auto secs = sections_of(G, F);
  std::cout << "sections " << secs.size() << "\n";
  for (const auto &S : secs) {
    std::vector<std::size_t> sizes;
    for (const auto &o : S.orbits)
      sizes.push_back(o.size());
    std::cout << "index " << S.index << " degree " << S.degree() << " order " << S.group.order()
              << " kernel " << S.kernel_order << " orbits " << join_sizes(sizes) << " plain "
              << (is_plain(S) ? "true" : "false") << " feasible " << (is_feasible(S) ? "true" : "false")
              << "\n";
  }
  return ok;
}

int cmd_certificate(const std::string &path) {
  auto r = two_closure(load(path));
  std::cout << "sections " << r.sections.size() << "\n";
  for (const auto &s : r.sections)
    std::cout << "index " << s.index << " feasible " << (s.feasible ? "true" : "false") << " xbar "
              << s.xbar << " certificate " << s.certificate << " empty_reason "
              << to_string(s.empty_reason) << "\n";
  return ok;
}

int cmd_zoo(std::size_t max_degree, const std::string &name) {
  auto entries = generate_zoo(max_degree);
  if (!name.empty()) {
    for (const auto &e : entries)
      if (e.name == name) {
        std::cout << "# " << e.name << "\n" << format_group(e.group);
        return ok;
      }
    throw PreconditionError("no zoo entry named '" + name + "' within degree " +
                            std::to_string(max_degree));
  }
  for (const auto &e : entries)
    std::cout << e.name << " degree " << e.group.degree() << " order " << e.group.order()
              << " expected "
              << (e.expect_self ? std::string("self")
                                : e.expected_order ? e.expected_order->str() : std::string("oracle"))
              << "\n";
  return ok;
}

int cmd_verify(const std::string &in_path, const std::string &out_path) {
  auto G = load(in_path);
  auto H = load(out_path);
  bool eq = verify_two_equivalent(G, H);
  bool contains = H.contains_group(G);
  std::cout << "two_equivalent " << (eq ? "true" : "false") << "\n"
            << "contains_input " << (contains ? "true" : "false") << "\n";
  if (!eq || !contains)
    throw Failure{not_equivalent, "not-equivalent",
                  !eq ? "2-orbits differ" : "output does not contain the input"};
  return ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"2-closures of supersolvable permutation groups"};
  app.require_subcommand(1, 1);
  std::string path, path2, report, name;
  bool assert_oracle = false;
  std::size_t max_degree = 10;

  auto *closure = app.add_subcommand("closure", "2-closure of a supersolvable group");
  closure->add_option("group", path, "group file")->required();
  closure->add_option("--report", report, "write a key=value report to this path");
  closure->add_flag("--assert-oracle", assert_oracle, "compare with the brute-force closure (degree <= 10)");
  auto *oracle = app.add_subcommand("oracle", "brute-force 2-closure (small degree)");
  oracle->add_option("group", path, "group file")->required();
  auto *orbs = app.add_subcommand("two-orbits", "the 2-orbits of a group");
  orbs->add_option("group", path, "group file")->required();
  auto *flag = app.add_subcommand("flag", "a maximal normal flag");
  flag->add_option("group", path, "group file")->required();
  auto *secs = app.add_subcommand("sections", "sections for the maximal normal flag");
  secs->add_option("group", path, "group file")->required();
  auto *cert = app.add_subcommand("certificate", "per-section certificate summary");
  cert->add_option("group", path, "group file")->required();
  auto *zoo = app.add_subcommand("zoo", "list test groups, or print one by name");
  zoo->add_option("name", name, "entry to print");
  zoo->add_option("--max-degree", max_degree, "largest degree to include")->check(CLI::Range(4, 100000));
  auto *verify = app.add_subcommand("verify", "check that an output is a 2-equivalent overgroup");
  verify->add_option("input", path, "input group file")->required();
  verify->add_option("output", path2, "output group file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "twoclosure: error=usage exit=" << usage << " reason=" << one_line(e.what()) << "\n";
    return usage;
  }

  auto fail = [](int code, const std::string &kind, const std::string &reason) {
    std::cout.flush();
    std::cerr << "twoclosure: error=" << kind << " exit=" << code << " reason=" << one_line(reason) << "\n";
    return code;
  };
  try {
    if (*closure)
      return cmd_closure(path, report, assert_oracle);
    if (*oracle)
      return cmd_oracle(path);
    if (*orbs)
      return cmd_two_orbits(path);
    if (*flag)
      return cmd_flag(path);
    if (*secs)
      return cmd_sections(path);
    if (*cert)
      return cmd_certificate(path);
    if (*zoo)
      return cmd_zoo(max_degree, name);
    if (*verify)
      return cmd_verify(path, path2);
  } catch (const Failure &f) {
    return fail(f.code, f.kind, f.reason);
  } catch (const InputError &e) {
    return fail(parse_error, "parse-error", e.what());
  } catch (const PreconditionError &e) {
    return fail(precondition, "precondition", e.what());
  } catch (const InternalError &e) {
    return fail(internal, "internal-assertion", e.what());
  } catch (const std::exception &e) {
    return fail(internal, "internal-assertion", std::string("unexpected: ") + e.what());
  }
  return usage;
}
